//! CoNLL-U reading and writing, plus structural tree checks.
//!
//! Sentences are read at eojeol granularity: every row is a single
//! space-delimited word with a `+`-joined morpheme tag sequence in XPOS.
//! Multiword-token ranges and empty nodes are rejected.

use std::fmt::Write as _;

use thiserror::Error;

use crate::diag::{Code, Diagnostic};
use crate::error::{Error, ParseError, ParseErrorKind, Result};
use crate::relation::{Relation, Universal};

/// One eojeol row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Token {
    pub index: usize,
    pub form: String,
    pub lemma: String,
    pub upos: String,
    /// `+`-joined tag sequence, empty for the `_` placeholder.
    pub xpos: String,
    pub feats: String,
    pub head: usize,
    pub deprel: Relation,
    pub deps: String,
    pub misc: String,
}

impl Token {
    pub fn new(
        index: usize,
        form: &str,
        lemma: &str,
        upos: &str,
        xpos: &str,
        head: usize,
        deprel: Relation,
    ) -> Self {
        Token {
            index,
            form: form.to_owned(),
            lemma: lemma.to_owned(),
            upos: upos.to_owned(),
            xpos: xpos.to_owned(),
            feats: String::new(),
            head,
            deprel,
            deps: String::new(),
            misc: String::new(),
        }
    }

    /// XPOS elements, lowercased.
    pub fn tags(&self) -> Vec<String> {
        if self.xpos.is_empty() {
            return Vec::new();
        }
        self.xpos.split('+').map(|t| t.to_lowercase()).collect()
    }

    pub fn last_tag(&self) -> Option<String> {
        self.tags().pop()
    }

    pub fn is_verbal(&self) -> bool {
        matches!(self.upos.as_str(), "VERB" | "ADJ" | "AUX")
    }

    pub fn is_nominal(&self) -> bool {
        matches!(self.upos.as_str(), "NOUN" | "PROPN" | "PRON" | "NUM")
    }

    pub fn is_punct(&self) -> bool {
        self.upos == "PUNCT" || self.deprel.is(Universal::Punct)
    }

    fn morphemes(&self) -> Vec<&str> {
        self.lemma.split('+').filter(|m| !m.is_empty()).collect()
    }

    /// Lexical stem used for dictionary lookups.
    ///
    /// With a morpheme-joined lemma aligned to XPOS, the stem is the run of
    /// leading morphemes before the first ending (`e*`) or particle (`j*`).
    /// Otherwise the first lemma morpheme with a citation `다` stripped.
    pub fn stem(&self) -> String {
        let morphs = self.morphemes();
        let tags = self.tags();
        if morphs.len() > 1 && morphs.len() == tags.len() {
            let stem: String = morphs
                .iter()
                .zip(&tags)
                .take_while(|(_, t)| !t.starts_with('e') && !t.starts_with('j'))
                .map(|(m, _)| *m)
                .collect();
            if !stem.is_empty() {
                return stem;
            }
        }
        let first = morphs.first().copied().unwrap_or(self.form.as_str());
        strip_citation(first).to_owned()
    }

    /// The connective ending of a predicate: the last lemma morpheme when the
    /// lemma is morpheme-joined, otherwise the surface form.
    pub fn connective(&self) -> &str {
        let morphs = self.morphemes();
        if morphs.len() > 1 {
            morphs[morphs.len() - 1]
        } else {
            &self.form
        }
    }
}

/// Strip a trailing citation-form `다`.
pub fn strip_citation(lemma: &str) -> &str {
    match lemma.strip_suffix('다') {
        Some(s) if !s.is_empty() => s,
        _ => lemma,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("token index {index} out of range for a sentence of {len} tokens")]
pub struct OutOfRange {
    pub index: usize,
    pub len: usize,
}

/// A sentence: indexed tokens plus the comment lines that preceded them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DependencyTree {
    pub sentence_id: String,
    pub text: String,
    pub tokens: Vec<Token>,
    pub comments: Vec<String>,
}

impl DependencyTree {
    /// Build a tree with `sent_id` and `text` comments.
    pub fn new(sentence_id: &str, tokens: Vec<Token>) -> Self {
        let text = tokens
            .iter()
            .map(|t| t.form.as_str())
            .collect::<Vec<_>>()
            .join(" ");
        DependencyTree {
            sentence_id: sentence_id.to_owned(),
            comments: vec![
                format!("# sent_id = {}", sentence_id),
                format!("# text = {}", text),
            ],
            text,
            tokens,
        }
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    /// 1-based token access.
    pub fn token(&self, index: usize) -> &Token {
        &self.tokens[index - 1]
    }

    pub fn token_mut(&mut self, index: usize) -> &mut Token {
        &mut self.tokens[index - 1]
    }

    pub fn head(&self, index: usize) -> usize {
        self.tokens[index - 1].head
    }

    pub fn deprel(&self, index: usize) -> &Relation {
        &self.tokens[index - 1].deprel
    }

    /// Dependents of `index` in ascending order; `0` yields the root(s).
    pub fn children(&self, index: usize) -> Result<Vec<usize>, OutOfRange> {
        if index > self.len() {
            return Err(OutOfRange {
                index,
                len: self.len(),
            });
        }
        Ok(self
            .tokens
            .iter()
            .filter(|t| t.head == index)
            .map(|t| t.index)
            .collect())
    }

    /// Dependents of a valid index; panics on out-of-range input.
    pub(crate) fn deps_of(&self, index: usize) -> Vec<usize> {
        self.children(index).expect("index in range")
    }

    /// Indices on the path from `index` up to the root, excluding `index`.
    /// Stops early on cycles.
    pub fn ancestors(&self, index: usize) -> Vec<usize> {
        let mut out = Vec::new();
        let mut cur = self.head(index);
        while cur != 0 && cur <= self.len() && out.len() <= self.len() {
            if cur == index || out.contains(&cur) {
                break;
            }
            out.push(cur);
            cur = self.head(cur);
        }
        out
    }

    pub fn dominates(&self, ancestor: usize, index: usize) -> bool {
        self.ancestors(index).contains(&ancestor)
    }

    /// Same verdict as an empty [`check_wellformed`], without building
    /// diagnostics.
    pub fn is_wellformed(&self) -> bool {
        let n = self.len();
        let mut roots = 0;
        for t in &self.tokens {
            if t.head > n {
                return false;
            }
            if t.head == 0 {
                roots += 1;
            }
        }
        if roots != 1 {
            return n == 0;
        }
        // every token reaches the root within n steps
        (1..=n).all(|i| {
            let mut cur = i;
            for _ in 0..=n {
                if cur == 0 {
                    return true;
                }
                cur = self.head(cur);
            }
            false
        })
    }
}

/// Structural check: single root, acyclic, every head in range.
pub fn check_wellformed(tree: &DependencyTree) -> Vec<Diagnostic> {
    let n = tree.len();
    let id = tree.sentence_id.as_str();
    let mut diags = Vec::new();

    let roots: Vec<usize> = tree
        .tokens
        .iter()
        .filter(|t| t.head == 0)
        .map(|t| t.index)
        .collect();
    if roots.len() > 1 {
        diags.push(Diagnostic::new(
            Code::TreeMultiroot,
            id,
            roots.clone(),
            format!("{} tokens attach to the root", roots.len()),
        ));
    }

    for t in &tree.tokens {
        if t.head > n {
            diags.push(Diagnostic::new(
                Code::TreeOrphan,
                id,
                vec![t.index],
                format!("head {} does not exist", t.head),
            ));
        }
    }

    // 0 = unvisited, 1 = on the current path, 2 = finished
    let mut state = vec![0u8; n + 1];
    for start in 1..=n {
        if state[start] != 0 {
            continue;
        }
        let mut path = Vec::new();
        let mut cur = start;
        loop {
            if cur == 0 || cur > n || state[cur] == 2 {
                break;
            }
            if state[cur] == 1 {
                let pos = path.iter().position(|&p| p == cur).unwrap();
                let mut cycle = path[pos..].to_vec();
                cycle.sort_unstable();
                diags.push(Diagnostic::new(
                    Code::TreeCycle,
                    id,
                    cycle,
                    "head chain loops without reaching the root",
                ));
                break;
            }
            state[cur] = 1;
            path.push(cur);
            cur = tree.head(cur);
        }
        for p in path {
            state[p] = 2;
        }
    }

    crate::diag::sort_diagnostics(&mut diags);
    diags
}

/// Options for [`parse_document_with`].
#[derive(Clone, Copy, Debug, Default)]
pub struct ParseOptions {
    /// Accept labels outside the inventory (kept verbatim) with a warning.
    pub lax: bool,
}

#[derive(Clone, Debug, Default)]
pub struct Parsed {
    pub trees: Vec<DependencyTree>,
    pub warnings: Vec<String>,
}

/// Strict parse.
pub fn parse_document(input: &str) -> Result<Vec<DependencyTree>, ParseError> {
    parse_document_with(input, ParseOptions::default()).map(|p| p.trees)
}

pub fn parse_document_with(input: &str, opts: ParseOptions) -> Result<Parsed, ParseError> {
    let mut parsed = Parsed::default();
    let mut comments = Vec::new();
    let mut rows: Vec<(usize, &str)> = Vec::new();

    for (lineno, line) in input.lines().enumerate() {
        let lineno = lineno + 1;
        let line = line.strip_suffix('\r').unwrap_or(line);
        if line.trim().is_empty() {
            if !rows.is_empty() || !comments.is_empty() {
                let tree = build_sentence(
                    std::mem::take(&mut comments),
                    std::mem::take(&mut rows),
                    parsed.trees.len() + 1,
                    opts,
                    &mut parsed.warnings,
                )?;
                parsed.trees.extend(tree);
            }
        } else if line.starts_with('#') {
            if !rows.is_empty() {
                return Err(ParseError {
                    line: lineno,
                    kind: ParseErrorKind::MisplacedComment,
                });
            }
            comments.push(line.to_owned());
        } else {
            rows.push((lineno, line));
        }
    }
    if !rows.is_empty() || !comments.is_empty() {
        let tree = build_sentence(
            comments,
            rows,
            parsed.trees.len() + 1,
            opts,
            &mut parsed.warnings,
        )?;
        parsed.trees.extend(tree);
    }
    Ok(parsed)
}

fn placeholder(field: &str) -> String {
    if field == "_" {
        String::new()
    } else {
        field.to_owned()
    }
}

fn build_sentence(
    comments: Vec<String>,
    rows: Vec<(usize, &str)>,
    ordinal: usize,
    opts: ParseOptions,
    warnings: &mut Vec<String>,
) -> Result<Option<DependencyTree>, ParseError> {
    if rows.is_empty() {
        // Comment-only block: nothing to attach it to.
        return Ok(None);
    }
    let n = rows.len();
    let mut tokens = Vec::with_capacity(n);
    for (pos, (lineno, line)) in rows.iter().enumerate() {
        let err = |kind| ParseError {
            line: *lineno,
            kind,
        };
        let cols: Vec<&str> = line.split('\t').collect();
        if cols.len() != 10 {
            return Err(err(ParseErrorKind::ColumnCount(cols.len())));
        }
        let id = cols[0];
        if id.contains('-') {
            return Err(err(ParseErrorKind::MultiwordToken(id.to_owned())));
        }
        if id.contains('.') {
            return Err(err(ParseErrorKind::EmptyNode(id.to_owned())));
        }
        let index: usize = id
            .parse()
            .map_err(|_| err(ParseErrorKind::BadIndex(id.to_owned())))?;
        if index == 0 {
            return Err(err(ParseErrorKind::BadIndex(id.to_owned())));
        }
        if index <= pos {
            return Err(err(ParseErrorKind::DuplicateIndex(index)));
        }
        if index != pos + 1 {
            return Err(err(ParseErrorKind::IndexOutOfSequence {
                expected: pos + 1,
                found: index,
            }));
        }
        let head: usize = cols[6]
            .parse()
            .map_err(|_| err(ParseErrorKind::BadHead(cols[6].to_owned())))?;
        if head > n {
            return Err(err(ParseErrorKind::HeadOutOfRange { head, len: n }));
        }
        if head == index {
            return Err(err(ParseErrorKind::SelfHead(index)));
        }
        let xpos = placeholder(cols[4]);
        if !xpos.is_empty() && xpos.split('+').any(str::is_empty) {
            return Err(err(ParseErrorKind::BadXpos(xpos)));
        }
        let deprel = match cols[7].parse::<Relation>() {
            Ok(r) => r,
            Err(e) if opts.lax => {
                warnings.push(format!("line {}: {}", lineno, e));
                Relation::Unknown(cols[7].to_owned())
            }
            Err(e) => return Err(err(e.into())),
        };
        if (head == 0) != (deprel == Relation::ROOT) {
            if opts.lax {
                warnings.push(format!(
                    "line {}: {}",
                    lineno,
                    ParseErrorKind::RootLabel(index)
                ));
            } else {
                return Err(err(ParseErrorKind::RootLabel(index)));
            }
        }
        tokens.push(Token {
            index,
            form: cols[1].to_owned(),
            lemma: cols[2].to_owned(),
            upos: placeholder(cols[3]),
            xpos,
            feats: placeholder(cols[5]),
            head,
            deprel,
            deps: placeholder(cols[8]),
            misc: placeholder(cols[9]),
        });
    }

    let mut sentence_id = ordinal.to_string();
    let mut text = String::new();
    for c in &comments {
        let body = c.trim_start_matches('#').trim();
        if let Some(v) = body.strip_prefix("sent_id =") {
            sentence_id = v.trim().to_owned();
        } else if let Some(v) = body.strip_prefix("text =") {
            text = v.trim().to_owned();
        }
    }

    Ok(Some(DependencyTree {
        sentence_id,
        text,
        tokens,
        comments,
    }))
}

fn field(s: &str) -> &str {
    if s.is_empty() {
        "_"
    } else {
        s
    }
}

/// Write one sentence block, including its trailing blank line.
pub fn write_sentence(out: &mut String, tree: &DependencyTree) {
    for c in &tree.comments {
        out.push_str(c);
        out.push('\n');
    }
    for t in &tree.tokens {
        let _ = writeln!(
            out,
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
            t.index,
            field(&t.form),
            field(&t.lemma),
            field(&t.upos),
            field(&t.xpos),
            field(&t.feats),
            t.head,
            t.deprel,
            field(&t.deps),
            field(&t.misc),
        );
    }
    out.push('\n');
}

/// Canonical CoNLL-U for well-formed trees.
pub fn serialize_document(trees: &[DependencyTree]) -> Result<String> {
    let mut out = String::new();
    for tree in trees {
        if !tree.is_wellformed() {
            return Err(Error::IllFormed(tree.sentence_id.clone()));
        }
        write_sentence(&mut out, tree);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    const STARBUCKS: &str = "# sent_id = starbucks\n\
# text = 제일 가까운 스타벅스가 어디 있지 ?\n\
1\t제일\t제일\tADV\tmag\t_\t2\tadvmod\t_\t_\n\
2\t가까운\t가깝+ㄴ\tADJ\tpaa+etm\t_\t3\tamod\t_\t_\n\
3\t스타벅스가\t스타벅스+가\tPROPN\tnnp+jks\t_\t5\tnsubj\t_\t_\n\
4\t어디\t어디\tPRON\tnp\t_\t5\tobl\t_\t_\n\
5\t있지\t있+지\tADJ\tpaa+ef\t_\t0\troot\t_\t_\n\
6\t?\t?\tPUNCT\tsf\t_\t5\tpunct\t_\t_\n\n";

    fn tree(heads: &[usize]) -> DependencyTree {
        let tokens = heads
            .iter()
            .enumerate()
            .map(|(i, &h)| {
                let rel = if h == 0 { Relation::ROOT } else { Relation::DEP };
                Token::new(i + 1, "w", "w", "NOUN", "nng", h, rel)
            })
            .collect();
        DependencyTree::new("t", tokens)
    }

    #[test]
    fn parses_starbucks() {
        let trees = parse_document(STARBUCKS).unwrap();
        assert_eq!(trees.len(), 1);
        let t = &trees[0];
        assert_eq!(t.sentence_id, "starbucks");
        assert_eq!(t.tokens[2].head, 5);
        assert_eq!(t.tokens[2].deprel, Relation::NSUBJ);
        assert_eq!(t.comments.len(), 2);
    }

    #[test]
    fn serializes_starbucks() {
        let trees = parse_document(STARBUCKS).unwrap();
        let out = serialize_document(&trees).unwrap();
        assert_eq!(out, STARBUCKS);
        let third = out.lines().nth(4).unwrap();
        assert!(third.starts_with("3\t스타벅스가"));
    }

    #[test]
    fn empty_input() {
        assert!(parse_document("").unwrap().is_empty());
        assert_eq!(serialize_document(&[]).unwrap(), "");
    }

    #[test]
    fn parse_errors_carry_lines() {
        let bad_cols = "1\ta\tb\n";
        let e = parse_document(bad_cols).unwrap_err();
        assert_eq!(e.line, 1);
        assert_eq!(e.kind, ParseErrorKind::ColumnCount(3));

        let mwt = "# x\n1-2\t나는\t_\t_\t_\t_\t_\t_\t_\t_\n";
        assert!(matches!(
            parse_document(mwt).unwrap_err().kind,
            ParseErrorKind::MultiwordToken(_)
        ));
        let empty = "1.1\ta\ta\tNOUN\tnng\t_\t0\troot\t_\t_\n";
        assert!(matches!(
            parse_document(empty).unwrap_err().kind,
            ParseErrorKind::EmptyNode(_)
        ));
        let dup = "1\ta\ta\tNOUN\tnng\t_\t0\troot\t_\t_\n1\tb\tb\tNOUN\tnng\t_\t1\tdep\t_\t_\n";
        let e = parse_document(dup).unwrap_err();
        assert_eq!((e.line, e.kind), (2, ParseErrorKind::DuplicateIndex(1)));
        let head = "1\ta\ta\tNOUN\tnng\t_\tx\troot\t_\t_\n";
        assert!(matches!(
            parse_document(head).unwrap_err().kind,
            ParseErrorKind::BadHead(_)
        ));
        let label = "1\ta\ta\tNOUN\tnng\t_\t0\troot\t_\t_\n2\tb\tb\tPRON\tnp\t_\t1\texpl\t_\t_\n";
        let e = parse_document(label).unwrap_err();
        assert_eq!(e.line, 2);
        assert!(matches!(e.kind, ParseErrorKind::Label(_)));
    }

    #[test]
    fn lax_keeps_unknown_labels() {
        let label = "1\ta\ta\tNOUN\tnng\t_\t0\troot\t_\t_\n2\tb\tb\tPRON\tnp\t_\t1\texpl\t_\t_\n";
        let parsed = parse_document_with(label, ParseOptions { lax: true }).unwrap();
        assert_eq!(parsed.warnings.len(), 1);
        assert_eq!(parsed.trees[0].tokens[1].deprel, Relation::Unknown("expl".into()));
        assert_eq!(serialize_document(&parsed.trees).unwrap(), label.to_owned() + "\n");
    }

    #[test]
    fn xpos_case_insensitive() {
        let t = Token::new(1, "사진을", "사진+을", "NOUN", "NNG+JKO", 0, Relation::ROOT);
        assert_eq!(t.tags(), vec!["nng", "jko"]);
        assert_eq!(t.stem(), "사진");
    }

    #[test]
    fn stems_and_connectives() {
        let t = Token::new(1, "전해야", "전하+어야", "VERB", "pvg+ecx", 0, Relation::ROOT);
        assert_eq!(t.stem(), "전하");
        assert_eq!(t.connective(), "어야");
        let t = Token::new(1, "거래시켰다", "거래+시키+었+다", "VERB", "ncpa+xsv+ep+ef", 0, Relation::ROOT);
        assert_eq!(t.stem(), "거래시키");
        let t = Token::new(1, "좋다", "좋다", "ADJ", "paa", 0, Relation::ROOT);
        assert_eq!(t.stem(), "좋");
    }

    #[test]
    fn wellformed_cases() {
        assert!(check_wellformed(&tree(&[0])).is_empty());
        let multi = check_wellformed(&tree(&[0, 0]));
        assert_eq!(multi.len(), 1);
        assert_eq!(multi[0].code, Code::TreeMultiroot);
        // token 1 points into the 2-cycle {2, 3}
        let cyc = check_wellformed(&tree(&[2, 3, 2]));
        assert_eq!(cyc.len(), 1);
        assert_eq!(cyc[0].code, Code::TreeCycle);
        assert_eq!(cyc[0].token_indices, vec![2, 3]);
        let orphan = check_wellformed(&tree(&[0, 9]));
        assert_eq!(orphan[0].code, Code::TreeOrphan);
    }

    #[test]
    fn children_of_starbucks() {
        let t = &parse_document(STARBUCKS).unwrap()[0];
        assert_eq!(t.children(5).unwrap(), vec![3, 4, 6]);
        assert_eq!(t.children(1).unwrap(), Vec::<usize>::new());
        assert_eq!(t.children(0).unwrap(), vec![5]);
        assert!(t.children(7).is_err());
    }

    #[test]
    fn refuses_ill_formed() {
        let err = serialize_document(&[tree(&[0, 0])]).unwrap_err();
        assert!(matches!(err, Error::IllFormed(id) if id == "t"));
    }
}
