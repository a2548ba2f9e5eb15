//! The `kud` command line. Exit status: 0 clean, 1 findings, 2 operational
//! error.

use std::ffi::OsString;
use std::fs;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use rayon::ThreadPool;

use crate::compare::{diff_corpora, CorpusStats};
use crate::conllu::{parse_document_with, serialize_document, DependencyTree, ParseOptions};
use crate::diag::{Diagnostic, Severity};
use crate::error::{Error, Result};
use crate::lexicon::Lexicon;
use crate::rules::{run_pipeline, ConversionConfig, PassReport};
use crate::sejong::{audit_with_frames, check_right_headed, map_sejong_to_ud, parse_sejong, MappingTable};
use crate::validate::{validate_sentence, CorpusSummary, GuidelineRuleSet};

pub const EXIT_CLEAN: i32 = 0;
pub const EXIT_FINDINGS: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "kud", version, about = "Convert, validate and compare Korean UD treebanks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Rewrite trees into the head-final scheme.
    Convert(ConvertArgs),
    /// Lint trees against the annotation guidelines.
    Validate(ValidateArgs),
    /// Compare two annotations of the same sentences.
    Diff(DiffArgs),
    /// Print corpus statistics.
    Stats(StatsArgs),
    /// Audit argument relations against subcategorization frames.
    Frames(FramesArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Records,
}

#[derive(Args, Debug)]
pub struct Common {
    /// Accept unknown relation labels, with a warning.
    #[arg(long)]
    pub lax: bool,
    /// Worker threads (default: all cores).
    #[arg(long, short = 'j', value_parser = clap::value_parser!(u16).range(1..))]
    pub jobs: Option<u16>,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
    /// Write output here instead of standard output.
    #[arg(short = 'o', long = "output")]
    pub output: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct ConvertArgs {
    /// Input file; standard input when absent or `-`.
    pub input: Option<PathBuf>,
    #[command(flatten)]
    pub common: Common,
    /// Lexicon file replacing the bundled frames.
    #[arg(long)]
    pub lexicon: Option<PathBuf>,
    /// Comma-separated passes to run (default: all).
    #[arg(long)]
    pub passes: Option<String>,
    /// Write pass reports to this file.
    #[arg(long)]
    pub report: Option<PathBuf>,
    /// Input carries Sejong-style labels; map them to UD first.
    #[arg(long)]
    pub sejong: bool,
    /// Sejong label mapping table.
    #[arg(long)]
    pub mapping: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct ValidateArgs {
    /// Input file; standard input when absent or `-`.
    pub input: Option<PathBuf>,
    #[command(flatten)]
    pub common: Common,
    /// Lexicon file replacing the bundled frames.
    #[arg(long)]
    pub lexicon: Option<PathBuf>,
    /// Override a rule's severity, as CODE=error|warning|info, or CODE=off to disable it.
    #[arg(long = "severity", value_name = "CODE=LEVEL")]
    pub severities: Vec<String>,
    /// Check Sejong-style right-headedness instead of the guidelines.
    #[arg(long)]
    pub sejong: bool,
    /// Sejong label mapping table.
    #[arg(long)]
    pub mapping: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct DiffArgs {
    /// Reference annotation.
    pub a: PathBuf,
    /// Annotation compared against the reference.
    pub b: PathBuf,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Args, Debug)]
pub struct StatsArgs {
    /// Input file; standard input when absent or `-`.
    pub input: Option<PathBuf>,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Args, Debug)]
pub struct FramesArgs {
    /// Input file; standard input when absent or `-`.
    pub input: Option<PathBuf>,
    #[command(flatten)]
    pub common: Common,
    /// Lexicon file replacing the bundled frames.
    #[arg(long)]
    pub lexicon: Option<PathBuf>,
}

/// Standard streams, injectable for tests.
pub struct Io<'a> {
    pub stdin: &'a mut dyn Read,
    pub stdout: &'a mut dyn Write,
    pub stderr: &'a mut dyn Write,
}

/// Parse arguments and run; returns the exit status.
pub fn run<I, T>(args: I, io: &mut Io) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(io.stderr, "{}", text);
                return EXIT_ERROR;
            }
            let _ = write!(io.stdout, "{}", text);
            return EXIT_CLEAN;
        }
    };
    match execute(&cli.command, io) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(io.stderr, "kud: {}", e);
            EXIT_ERROR
        }
    }
}

fn common(cmd: &Command) -> &Common {
    match cmd {
        Command::Convert(a) => &a.common,
        Command::Validate(a) => &a.common,
        Command::Diff(a) => &a.common,
        Command::Stats(a) => &a.common,
        Command::Frames(a) => &a.common,
    }
}

fn execute(cmd: &Command, io: &mut Io) -> Result<i32> {
    let c = common(cmd);
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(jobs) = c.jobs {
        builder = builder.num_threads(jobs as usize);
    }
    let pool = builder
        .build()
        .map_err(|e| Error::Io(std::io::Error::other(e.to_string())))?;
    let mut out = Vec::new();
    let code = match cmd {
        Command::Convert(a) => convert(a, &pool, io, &mut out),
        Command::Validate(a) => validate(a, &pool, io, &mut out),
        Command::Diff(a) => diff(a, io, &mut out),
        Command::Stats(a) => stats(a, io, &mut out),
        Command::Frames(a) => frames(a, &pool, io, &mut out),
    }?;
    match &c.output {
        Some(path) => fs::write(path, &out)?,
        None => io.stdout.write_all(&out)?,
    }
    Ok(code)
}

fn read_input(path: Option<&Path>, io: &mut Io) -> Result<(String, String)> {
    match path {
        Some(p) if p != Path::new("-") => {
            let text = fs::read_to_string(p)
                .map_err(|e| Error::Io(std::io::Error::new(e.kind(), format!("{}: {}", p.display(), e))))?;
            Ok((text, p.display().to_string()))
        }
        _ => {
            let mut text = String::new();
            io.stdin.read_to_string(&mut text)?;
            Ok((text, "<stdin>".to_owned()))
        }
    }
}

/// Parse failures carry the file name in front of the line number.
fn in_file(name: &str, e: Error) -> Error {
    match e {
        Error::Parse(p) => Error::InFile {
            path: name.to_owned(),
            line: p.line,
            message: p.kind.to_string(),
        },
        Error::Format { line, message } => Error::InFile {
            path: name.to_owned(),
            line,
            message,
        },
        other => other,
    }
}

fn load_trees(path: Option<&Path>, lax: bool, io: &mut Io) -> Result<Vec<DependencyTree>> {
    let (text, name) = read_input(path, io)?;
    let parsed = parse_document_with(&text, ParseOptions { lax }).map_err(|e| in_file(&name, e.into()))?;
    for w in &parsed.warnings {
        writeln!(io.stderr, "{}: warning: {}", name, w)?;
    }
    Ok(parsed.trees)
}

fn load_sejong(path: Option<&Path>, mapping: Option<&Path>, lax: bool, io: &mut Io) -> Result<(Vec<DependencyTree>, MappingTable)> {
    let table = match mapping {
        Some(p) => {
            let text = fs::read_to_string(p)?;
            MappingTable::parse(&text).map_err(|e| in_file(&p.display().to_string(), e))?
        }
        None => MappingTable::default(),
    };
    let (text, name) = read_input(path, io)?;
    let (trees, warnings) = parse_sejong(&text, &table, lax).map_err(|e| in_file(&name, e))?;
    for w in &warnings {
        writeln!(io.stderr, "{}: warning: {}", name, w)?;
    }
    Ok((trees, table))
}

fn load_lexicon(path: Option<&Path>, io: &mut Io) -> Result<Lexicon> {
    let Some(path) = path else {
        return Ok(Lexicon::bundled());
    };
    let text = fs::read_to_string(path).map_err(|e| Error::Lexicon {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    let (lex, loaded) = Lexicon::from_text(&text).map_err(|e| Error::Lexicon {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    for w in &loaded.warnings {
        writeln!(io.stderr, "{}: warning: {}", path.display(), w)?;
    }
    Ok(lex)
}

fn convert(a: &ConvertArgs, pool: &ThreadPool, io: &mut Io, out: &mut Vec<u8>) -> Result<i32> {
    let lex = load_lexicon(a.lexicon.as_deref(), io)?;
    let mut cfg = ConversionConfig::default();
    if let Some(list) = &a.passes {
        cfg.set_passes(ConversionConfig::parse_pass_list(list)?);
    }
    let trees = if a.sejong {
        let (trees, table) = load_sejong(a.input.as_deref(), a.mapping.as_deref(), a.common.lax, io)?;
        let mut mapped = Vec::with_capacity(trees.len());
        for t in &trees {
            let (ud, warnings) = map_sejong_to_ud(t, &table, a.common.lax)?;
            for w in warnings {
                writeln!(io.stderr, "warning: {}", w)?;
            }
            mapped.push(ud);
        }
        mapped
    } else {
        load_trees(a.input.as_deref(), a.common.lax, io)?
    };

    let results: Vec<Result<(DependencyTree, Vec<PassReport>)>> =
        pool.install(|| trees.par_iter().map(|t| run_pipeline(t, &lex, &cfg)).collect());
    let mut converted = Vec::with_capacity(results.len());
    let mut report = String::new();
    for r in results {
        let (tree, reports) = r?;
        for rep in &reports {
            for line in rep.to_records(&tree.sentence_id) {
                report.push_str(&line);
                report.push('\n');
            }
        }
        converted.push(tree);
    }
    if let Some(path) = &a.report {
        fs::write(path, report)?;
    }
    out.extend_from_slice(serialize_document(&converted)?.as_bytes());
    Ok(EXIT_CLEAN)
}

fn emit(diags: &[Diagnostic], format: Format, out: &mut Vec<u8>) {
    for d in diags {
        let line = match format {
            Format::Text => d.to_text(),
            Format::Records => d.to_record(),
        };
        out.extend_from_slice(line.as_bytes());
        out.push(b'\n');
    }
}

fn finish(summary: &CorpusSummary, format: Format, out: &mut Vec<u8>) -> i32 {
    if format == Format::Text {
        out.extend_from_slice(summary.to_table().as_bytes());
    }
    if summary.errors() > 0 {
        EXIT_FINDINGS
    } else {
        EXIT_CLEAN
    }
}

fn validate(a: &ValidateArgs, pool: &ThreadPool, io: &mut Io, out: &mut Vec<u8>) -> Result<i32> {
    let format = a.common.format;
    let per_sentence: Vec<Vec<Diagnostic>> = if a.sejong {
        let (trees, _) = load_sejong(a.input.as_deref(), a.mapping.as_deref(), a.common.lax, io)?;
        pool.install(|| trees.par_iter().map(check_right_headed).collect())
    } else {
        let lex = load_lexicon(a.lexicon.as_deref(), io)?;
        let mut rules = GuidelineRuleSet::default();
        for s in &a.severities {
            rules.parse_override(s).map_err(Error::Usage)?;
        }
        let trees = load_trees(a.input.as_deref(), a.common.lax, io)?;
        pool.install(|| trees.par_iter().map(|t| validate_sentence(t, &rules, &lex)).collect())
    };
    let mut summary = CorpusSummary::default();
    for diags in &per_sentence {
        summary.add(diags);
        emit(diags, format, out);
    }
    Ok(finish(&summary, format, out))
}

fn frames(a: &FramesArgs, pool: &ThreadPool, io: &mut Io, out: &mut Vec<u8>) -> Result<i32> {
    let lex = load_lexicon(a.lexicon.as_deref(), io)?;
    let trees = load_trees(a.input.as_deref(), a.common.lax, io)?;
    let per_sentence: Vec<Vec<Diagnostic>> =
        pool.install(|| trees.par_iter().map(|t| audit_with_frames(t, &lex)).collect());
    let mut summary = CorpusSummary::default();
    for diags in &per_sentence {
        summary.add(diags);
        emit(diags, a.common.format, out);
    }
    if a.common.format == Format::Text {
        let findings: usize = per_sentence.iter().map(Vec::len).sum();
        out.extend_from_slice(format!("sentences\t{}\nfindings\t{}\n", summary.sentences, findings).as_bytes());
    }
    let errors = per_sentence.iter().flatten().any(|d| d.severity == Severity::Error);
    Ok(if errors { EXIT_FINDINGS } else { EXIT_CLEAN })
}

fn diff(a: &DiffArgs, io: &mut Io, out: &mut Vec<u8>) -> Result<i32> {
    let ta = load_trees(Some(&a.a), a.common.lax, io)?;
    let tb = load_trees(Some(&a.b), a.common.lax, io)?;
    let report = diff_corpora(&ta, &tb)?;
    for c in &report.changes {
        let line = match a.common.format {
            Format::Records => c.to_record(),
            Format::Text => format!(
                "{} token {}: head {} -> {}, {} -> {}",
                c.sentence_id, c.token, c.head_a, c.head_b, c.deprel_a, c.deprel_b
            ),
        };
        out.extend_from_slice(line.as_bytes());
        out.push(b'\n');
    }
    let summary = match a.common.format {
        Format::Text => report.summary(),
        Format::Records => format!(
            "summary\tchanged\t{}\nsummary\ttokens\t{}\nsummary\tuas\t{:.2}\nsummary\tlas\t{:.2}\n",
            report.changes.len(),
            report.tokens,
            report.uas(),
            report.las()
        ),
    };
    out.extend_from_slice(summary.as_bytes());
    Ok(if report.changes.is_empty() { EXIT_CLEAN } else { EXIT_FINDINGS })
}

fn stats(a: &StatsArgs, io: &mut Io, out: &mut Vec<u8>) -> Result<i32> {
    let trees = load_trees(a.input.as_deref(), a.common.lax, io)?;
    let s = CorpusStats::from_trees(&trees);
    let text = match a.common.format {
        Format::Text => s.to_text(),
        Format::Records => s.to_records(),
    };
    out.extend_from_slice(text.as_bytes());
    Ok(EXIT_CLEAN)
}
