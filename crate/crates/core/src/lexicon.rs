//! Linguistic knowledge used by the rewrite rules: subcategorization
//! frames in Sejong verb-dictionary notation, postposition marker classes,
//! auxiliary/catenative verb inventories and fixed expressions.
//!
//! A lexicon file mixes four kinds of lines:
//!
//! ```text
//! X=N0-이 Y=N1-에|에게 좋다 (X=N0-i Y=N1-e|ege johda)
//! "X"="THM": 구체물|추상적대상
//! "Y"="GOL": 신체부위|인간|추상적대상
//! 묻어나다	X:N0:이:nsubj	Y:N1:에:obl:arg
//! @tam 있다 -고
//! @catenative 싶다 -고 xcomp
//! @fixed case 뿐 아니라
//! ```
//!
//! Frame lines end in the predicate lemma. Role lines annotate the slots of
//! the preceding frame. Tab-separated lines give frames with explicit
//! relations. `@` lines extend the verb and expression inventories. Blank
//! lines, `#` comments and parenthesized gloss lines are skipped.
#![allow(clippy::tabs_in_doc_comments)]

use std::collections::BTreeSet;
use std::fmt;

use crate::conllu::{strip_citation, DependencyTree, Token};
use crate::error::{Error, Result};
use crate::relation::Relation;

/// Case-marker class of a token, decided by its final functional XPOS
/// element (and the particle surface for topics and quotatives).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MarkerClass {
    Nominative,
    Accusative,
    Dative,
    Adverbial,
    Vocative,
    Topic,
    Nominalized,
    Quotative,
    None,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MarkerTable {
    pub adverbial_tags: BTreeSet<String>,
    pub vocative_tags: BTreeSet<String>,
    pub topic_tags: BTreeSet<String>,
    pub topic_particles: BTreeSet<String>,
    pub nominalizer_tags: BTreeSet<String>,
    pub quotative_particles: BTreeSet<String>,
    pub nominative_tags: BTreeSet<String>,
    pub accusative_tags: BTreeSet<String>,
    /// Surface endings that make an adverbial postposition dative.
    pub dative_particles: BTreeSet<String>,
}

fn set(items: &[&str]) -> BTreeSet<String> {
    items.iter().map(|s| s.to_string()).collect()
}

impl Default for MarkerTable {
    fn default() -> Self {
        MarkerTable {
            adverbial_tags: set(&["jkb"]),
            vocative_tags: set(&["jkv", "jcv"]),
            topic_tags: set(&["jx", "jxt"]),
            topic_particles: set(&["은", "는"]),
            nominalizer_tags: set(&["xsn"]),
            quotative_particles: set(&["고"]),
            nominative_tags: set(&["jks", "jcs"]),
            accusative_tags: set(&["jko", "jco"]),
            dative_particles: set(&["에게", "께", "한테"]),
        }
    }
}

/// Surface form without trailing punctuation.
pub fn bare_form(form: &str) -> &str {
    form.trim_end_matches(|c: char| c.is_ascii_punctuation() || "…·“”‘’「」『』".contains(c))
}

impl MarkerTable {
    /// Disjointness checks between tag sets.
    pub fn check(&self) -> std::result::Result<(), String> {
        if let Some(t) = self.vocative_tags.intersection(&self.adverbial_tags).next() {
            return Err(format!("tag `{}` is both vocative and adverbial", t));
        }
        let case = [
            &self.nominative_tags,
            &self.accusative_tags,
            &self.adverbial_tags,
        ];
        for (i, a) in case.iter().enumerate() {
            for b in &case[i + 1..] {
                if let Some(t) = a.intersection(b).next() {
                    return Err(format!("case tag `{}` belongs to two classes", t));
                }
            }
        }
        Ok(())
    }

    pub fn classify(&self, token: &Token) -> MarkerClass {
        let tags = token.tags();
        let Some(last) = tags.last() else {
            return MarkerClass::None;
        };
        let form = bare_form(&token.form);

        if self.vocative_tags.contains(last) {
            return MarkerClass::Vocative;
        }
        if self.quotative_particles.contains(form)
            && (last.starts_with('j') || matches!(token.upos.as_str(), "ADP" | "PART"))
        {
            return MarkerClass::Quotative;
        }
        if self.topic_tags.contains(last) && self.topic_particles.iter().any(|p| form.ends_with(p.as_str())) {
            return MarkerClass::Topic;
        }
        let nominalized = tags.iter().enumerate().skip(1).any(|(i, t)| {
            self.nominalizer_tags.contains(t)
                && tags[..i]
                    .iter()
                    .any(|p| p.starts_with('v') || p.starts_with('p') || p.starts_with('e') || p == "jp")
        });
        if nominalized {
            return MarkerClass::Nominalized;
        }
        if self.nominative_tags.contains(last) {
            MarkerClass::Nominative
        } else if self.accusative_tags.contains(last) {
            MarkerClass::Accusative
        } else if self.adverbial_tags.contains(last) {
            if self.dative_particles.iter().any(|p| form.ends_with(p.as_str())) {
                MarkerClass::Dative
            } else {
                MarkerClass::Adverbial
            }
        } else {
            MarkerClass::None
        }
    }
}

/// Hangul final consonants in jongseong order, starting at index 1.
const JONGSEONG: &str = "ㄱㄲㄳㄴㄵㄶㄷㄹㄺㄻㄼㄽㄾㄿㅀㅁㅂㅄㅅㅆㅇㅈㅊㅋㅌㅍㅎ";

/// Does `text` end with `suffix`? A single compatibility jamo matches the
/// final consonant of the last syllable (`ㄹ` matches `좋을`).
pub fn suffix_matches(text: &str, suffix: &str) -> bool {
    let mut chars = suffix.chars();
    if let (Some(j), None) = (chars.next(), chars.next()) {
        if let Some(pos) = JONGSEONG.chars().position(|c| c == j) {
            return text
                .chars()
                .last()
                .map(|c| c as u32)
                .filter(|c| (0xAC00..=0xD7A3).contains(c))
                .map(|c| (c - 0xAC00) % 28 == pos as u32 + 1)
                .unwrap_or(false);
        }
    }
    text.ends_with(suffix)
}

/// Postposition allomorph pairs treated as the same marker.
const ALLOMORPHS: [(&str, &str); 5] = [
    ("이", "가"),
    ("을", "를"),
    ("은", "는"),
    ("으로", "로"),
    ("과", "와"),
];

fn marker_variants(marker: &str) -> Vec<&str> {
    let mut out = vec![marker];
    for (a, b) in ALLOMORPHS {
        if marker == a {
            out.push(b);
        } else if marker == b {
            out.push(a);
        }
    }
    out
}

/// Does a nominal token carry `marker` as its final particle?
pub fn bears_marker(token: &Token, marker: &str) -> bool {
    if !token.is_nominal() {
        return false;
    }
    let form = bare_form(&token.form);
    marker_variants(marker)
        .iter()
        .any(|m| form.len() > m.len() && form.ends_with(m))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrameSlot {
    pub variable: String,
    /// Ordinal of `Nk`.
    pub arg_index: u8,
    pub markers: Vec<String>,
    pub relation: Relation,
    pub semantic_role: Option<String>,
    pub selectional: Option<Vec<String>>,
}

impl FrameSlot {
    pub fn licenses(&self, token: &Token) -> bool {
        self.markers.iter().any(|m| bears_marker(token, m))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubcatFrame {
    pub predicate_lemma: String,
    pub slots: Vec<FrameSlot>,
}

impl SubcatFrame {
    /// First slot whose markers the token carries.
    pub fn slot_for(&self, token: &Token) -> Option<&FrameSlot> {
        self.slots.iter().find(|s| s.licenses(token))
    }

    fn check(&self) -> std::result::Result<(), String> {
        for (i, s) in self.slots.iter().enumerate() {
            if s.markers.is_empty() {
                return Err(format!("slot {} has no markers", s.variable));
            }
            if ![Relation::NSUBJ, Relation::OBJ, Relation::IOBJ, Relation::OBL_ARG].contains(&s.relation) {
                return Err(format!("slot {} maps to unsupported relation {}", s.variable, s.relation));
            }
            if s.relation != Relation::OBL_ARG && self.slots[..i].iter().any(|o| o.relation == s.relation) {
                return Err(format!("two slots map to {}", s.relation));
            }
        }
        Ok(())
    }
}

impl fmt::Display for SubcatFrame {
    /// Sejong notation: the frame line followed by its role lines.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.slots {
            write!(f, "{}=N{}-{} ", s.variable, s.arg_index, s.markers.join("|"))?;
        }
        f.write_str(&self.predicate_lemma)?;
        for s in &self.slots {
            if let Some(role) = &s.semantic_role {
                write!(f, "\n\"{}\"=\"{}\"", s.variable, role)?;
                if let Some(cats) = &s.selectional {
                    write!(f, ": {}", cats.join("|"))?;
                }
            }
        }
        Ok(())
    }
}

/// Relation of a slot from its markers and the frame arity. Dative 에게
/// is `iobj` only in frames with three or more slots.
pub fn slot_relation(markers: &[String], arity: usize) -> Relation {
    let first = markers.first().map(String::as_str).unwrap_or("");
    let dative = |m: &str| matches!(m, "에게" | "께" | "한테");
    match first {
        "이" | "가" => Relation::NSUBJ,
        "을" | "를" => Relation::OBJ,
        _ if arity >= 3 && markers.iter().all(|m| dative(m)) => Relation::IOBJ,
        _ => Relation::OBL_ARG,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TamAuxiliary {
    pub lemma: String,
    pub connectives: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Catenative {
    pub lemma: String,
    pub connectives: Vec<String>,
    /// Relation of the complement clause (`xcomp`, or `ccomp` for quotative 하다).
    pub relation: Relation,
}

/// A fixed grammaticized expression.
///
/// `host` constrains the word preceding the span (`-에` in `-에 따라`);
/// without it any preceding word hosts the expression. `relation` attaches
/// the first span word to the host; later span words attach to the first
/// with `fixed`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedExpression {
    pub host: Option<String>,
    pub forms: Vec<String>,
    pub relation: Relation,
}

impl FixedExpression {
    pub fn matches_at(&self, tree: &DependencyTree, start: usize) -> bool {
        if start == 0 || start + self.forms.len() - 1 > tree.len() {
            return false;
        }
        let forms_match = self
            .forms
            .iter()
            .enumerate()
            .all(|(k, f)| tree.token(start + k).form == *f);
        if !forms_match {
            return false;
        }
        match &self.host {
            None => true,
            Some(pat) => start > 1 && suffix_matches(bare_form(&tree.token(start - 1).form), pat),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerbInventory {
    pub tam_auxiliaries: Vec<TamAuxiliary>,
    pub catenative_verbs: Vec<Catenative>,
    pub fixed_expressions: Vec<FixedExpression>,
}

fn strings(items: &[&str]) -> Vec<String> {
    items.iter().map(|s| s.to_string()).collect()
}

impl Default for VerbInventory {
    fn default() -> Self {
        VerbInventory {
            tam_auxiliaries: vec![
                TamAuxiliary {
                    lemma: "하다".into(),
                    connectives: strings(&["어야", "아야"]),
                },
                TamAuxiliary {
                    lemma: "있다".into(),
                    connectives: strings(&["고"]),
                },
                TamAuxiliary {
                    lemma: "되다".into(),
                    connectives: strings(&["게"]),
                },
            ],
            catenative_verbs: vec![
                Catenative {
                    lemma: "싶다".into(),
                    connectives: strings(&["고"]),
                    relation: Relation::XCOMP,
                },
                Catenative {
                    lemma: "하다".into(),
                    connectives: strings(&["고"]),
                    relation: Relation::CCOMP,
                },
                Catenative {
                    lemma: "좋다".into(),
                    connectives: strings(&["면"]),
                    relation: Relation::XCOMP,
                },
            ],
            fixed_expressions: vec![
                FixedExpression {
                    host: None,
                    forms: strings(&["뿐", "아니라"]),
                    relation: Relation::CASE,
                },
                FixedExpression {
                    host: Some("에".into()),
                    forms: strings(&["따라"]),
                    relation: Relation::FIXED,
                },
                FixedExpression {
                    host: Some("ㄹ".into()),
                    forms: strings(&["듯"]),
                    relation: Relation::FIXED,
                },
            ],
        }
    }
}

fn same_lemma(citation: &str, token: &Token) -> bool {
    strip_citation(citation) == token.stem()
}

fn connective_matches(connectives: &[String], token: &Token) -> bool {
    connectives
        .iter()
        .any(|c| suffix_matches(token.connective(), c) || suffix_matches(bare_form(&token.form), c))
}

impl VerbInventory {
    /// Is `second` a TAM auxiliary licensed by the connective of `first`?
    pub fn is_tam(&self, first: &Token, second: &Token) -> bool {
        self.tam_auxiliaries
            .iter()
            .any(|e| same_lemma(&e.lemma, second) && connective_matches(&e.connectives, first))
    }

    /// Complement relation if `second` is a catenative verb taking `first`.
    pub fn catenative(&self, first: &Token, second: &Token) -> Option<Relation> {
        self.catenative_verbs
            .iter()
            .find(|e| same_lemma(&e.lemma, second) && connective_matches(&e.connectives, first))
            .map(|e| e.relation.clone())
    }
}

/// A matched fixed expression: span `[start, end]` (inclusive) of the
/// expression at `expression` in the inventory.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FixedMatch {
    pub start: usize,
    pub end: usize,
    pub expression: usize,
}

/// Longest inventory expression starting at `start`; ties go to the
/// earlier inventory entry.
pub fn match_fixed(inventory: &VerbInventory, tree: &DependencyTree, start: usize) -> Option<FixedMatch> {
    let mut best: Option<FixedMatch> = None;
    for (i, e) in inventory.fixed_expressions.iter().enumerate() {
        if e.forms.is_empty() || !e.matches_at(tree, start) {
            continue;
        }
        let end = start + e.forms.len() - 1;
        if best.is_none_or(|b| end > b.end) {
            best = Some(FixedMatch {
                start,
                end,
                expression: i,
            });
        }
    }
    best
}

const BUNDLED_FRAMES: &str = include_str!("../data/frames.txt");

/// Frames, marker classes and verb inventories, read-only after loading.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Lexicon {
    pub frames: Vec<SubcatFrame>,
    pub markers: MarkerTable,
    pub inventory: VerbInventory,
}

/// Result of reading a lexicon file.
#[derive(Clone, Debug, Default)]
pub struct Loaded {
    pub warnings: Vec<String>,
}

impl Lexicon {
    /// Seeds only, no frames.
    pub fn seeded() -> Self {
        Lexicon::default()
    }

    /// Seeds plus the frames shipped in `data/frames.txt`.
    pub fn bundled() -> Self {
        let (lex, _) = Lexicon::from_text(BUNDLED_FRAMES).expect("bundled frame file parses");
        lex
    }

    /// Seeds plus the contents of `text`.
    pub fn from_text(text: &str) -> Result<(Lexicon, Loaded)> {
        let mut lex = Lexicon::seeded();
        let loaded = lex.load(text)?;
        Ok((lex, loaded))
    }

    /// Add the frames and inventory entries of one lexicon file.
    pub fn load(&mut self, text: &str) -> Result<Loaded> {
        let mut loaded = Loaded::default();
        let mut frames = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let lineno = lineno + 1;
            if let Some(directive) = raw.trim().strip_prefix('@') {
                self.directive(directive, lineno)?;
            } else {
                parse_frame_line(raw, lineno, &mut frames, &mut loaded.warnings)?;
            }
        }
        self.frames.extend(frames);
        self.markers.check().map_err(|message| Error::Format { line: 0, message })?;
        Ok(loaded)
    }

    fn directive(&mut self, line: &str, lineno: usize) -> Result<()> {
        let err = |message: String| Error::Format {
            line: lineno,
            message,
        };
        let words: Vec<&str> = line.split_whitespace().collect();
        let alternatives = |s: &str| -> Vec<String> {
            s.split(['/', '|'])
                .map(|a| a.trim().trim_start_matches(['-', '‑']).to_owned())
                .filter(|a| !a.is_empty())
                .collect()
        };
        match words.as_slice() {
            ["tam", lemma, conn] => self.inventory.tam_auxiliaries.push(TamAuxiliary {
                lemma: lemma.to_string(),
                connectives: alternatives(conn),
            }),
            ["catenative", lemma, conn, rel] => {
                let relation: Relation = rel.parse().map_err(|e| err(format!("{}", e)))?;
                if relation != Relation::XCOMP && relation != Relation::CCOMP {
                    return Err(err(format!("catenative complements are xcomp or ccomp, not {}", relation)));
                }
                self.inventory.catenative_verbs.push(Catenative {
                    lemma: lemma.to_string(),
                    connectives: alternatives(conn),
                    relation,
                })
            }
            ["fixed", rel, rest @ ..] if !rest.is_empty() => {
                let relation: Relation = rel.parse().map_err(|e| err(format!("{}", e)))?;
                let (host, forms) = match rest[0].strip_prefix('-') {
                    Some(h) => (Some(h.to_owned()), &rest[1..]),
                    None => (None, rest),
                };
                if forms.is_empty() {
                    return Err(err("fixed expression without words".into()));
                }
                self.inventory.fixed_expressions.push(FixedExpression {
                    host,
                    forms: forms.iter().map(|s| s.to_string()).collect(),
                    relation,
                })
            }
            ["reset", kind] => match *kind {
                "tam" => self.inventory.tam_auxiliaries.clear(),
                "catenative" => self.inventory.catenative_verbs.clear(),
                "fixed" => self.inventory.fixed_expressions.clear(),
                "frames" => self.frames.clear(),
                other => return Err(err(format!("cannot reset `{}`", other))),
            },
            ["tags", name, values @ ..] => {
                let target = match *name {
                    "adverbial" => &mut self.markers.adverbial_tags,
                    "vocative" => &mut self.markers.vocative_tags,
                    "topic" => &mut self.markers.topic_tags,
                    "topic-particles" => &mut self.markers.topic_particles,
                    "nominalizer" => &mut self.markers.nominalizer_tags,
                    "quotative" => &mut self.markers.quotative_particles,
                    "nominative" => &mut self.markers.nominative_tags,
                    "accusative" => &mut self.markers.accusative_tags,
                    "dative" => &mut self.markers.dative_particles,
                    other => return Err(err(format!("unknown marker set `{}`", other))),
                };
                *target = values.iter().map(|v| v.to_lowercase()).collect();
            }
            _ => return Err(err(format!("unrecognized directive `@{}`", line))),
        }
        Ok(())
    }

    /// Frames whose citation lemma matches the token's stem.
    pub fn lookup_frames(&self, token: &Token) -> Vec<&SubcatFrame> {
        let stem = token.stem();
        self.frames
            .iter()
            .filter(|f| strip_citation(&f.predicate_lemma) == stem)
            .collect()
    }

    /// Frames for a citation or stem lemma string.
    pub fn lookup_lemma(&self, lemma: &str) -> Vec<&SubcatFrame> {
        let stem = strip_citation(lemma);
        self.frames
            .iter()
            .filter(|f| strip_citation(&f.predicate_lemma) == stem)
            .collect()
    }

    /// Best frame for the predicate at `head`: the one with most slots
    /// satisfied by its dependents, earliest on ties.
    pub fn best_frame(&self, tree: &DependencyTree, head: usize) -> Option<&SubcatFrame> {
        let frames = self.lookup_frames(tree.token(head));
        let deps = tree.deps_of(head);
        let mut best: Option<(&SubcatFrame, usize)> = None;
        for f in frames {
            let score = f
                .slots
                .iter()
                .filter(|s| deps.iter().any(|&d| s.licenses(tree.token(d))))
                .count();
            if best.is_none_or(|(_, b)| score > b) {
                best = Some((f, score));
            }
        }
        best.map(|(f, _)| f)
    }

    pub fn classify(&self, token: &Token) -> MarkerClass {
        self.markers.classify(token)
    }
}

/// Parse a frame file in Sejong notation (plus tab-separated frames).
pub fn parse_frame_file(text: &str) -> Result<(Vec<SubcatFrame>, Vec<String>)> {
    let mut frames = Vec::new();
    let mut warnings = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        parse_frame_line(raw, lineno + 1, &mut frames, &mut warnings)?;
    }
    Ok((frames, warnings))
}

fn parse_frame_line(
    raw: &str,
    lineno: usize,
    frames: &mut Vec<SubcatFrame>,
    warnings: &mut Vec<String>,
) -> Result<()> {
    let err = |message: String| Error::Format {
        line: lineno,
        message,
    };
    let line = raw.trim();
    if line.is_empty() || line.starts_with('#') {
        return Ok(());
    }
    if line.starts_with('(') && line.ends_with(')') {
        // gloss continuation of a role line
        return Ok(());
    }
    if line.starts_with('"') {
        let (var, role, cats) = parse_role_line(line).ok_or_else(|| err(format!("malformed role line `{}`", line)))?;
        match frames
            .last_mut()
            .and_then(|f| f.slots.iter_mut().find(|s| s.variable == var))
        {
            Some(slot) => {
                slot.semantic_role = Some(role);
                slot.selectional = cats;
            }
            None => warnings.push(format!("line {}: role for `{}` has no matching slot", lineno, var)),
        }
        return Ok(());
    }
    let frame = if raw.contains('\t') {
        parse_tsv_frame(raw).map_err(err)?
    } else {
        parse_notation(line).map_err(err)?
    };
    frame.check().map_err(err)?;
    frames.push(frame);
    Ok(())
}

fn parse_role_line(line: &str) -> Option<(String, String, Option<Vec<String>>)> {
    let rest = line.strip_prefix('"')?;
    let (var, rest) = rest.split_once('"')?;
    let rest = rest.trim_start().strip_prefix('=')?.trim_start().strip_prefix('"')?;
    let (role, rest) = rest.split_once('"')?;
    let rest = rest.trim();
    let cats = match rest.strip_prefix(':') {
        Some(c) => {
            let cats: Vec<String> = c
                .split('|')
                .map(|s| s.trim().to_owned())
                .filter(|s| !s.is_empty())
                .collect();
            (!cats.is_empty()).then_some(cats)
        }
        None if rest.is_empty() => None,
        None => return None,
    };
    if var.is_empty() || role.is_empty() {
        return None;
    }
    Some((var.to_owned(), role.to_owned(), cats))
}

fn parse_term(term: &str) -> Option<(String, u8, Vec<String>)> {
    let (var, rest) = term.split_once('=')?;
    let (arg, markers) = rest.split_once('-')?;
    let ordinal: u8 = arg.strip_prefix('N')?.parse().ok()?;
    if var.is_empty() || !var.chars().all(|c| c.is_ascii_uppercase()) {
        return None;
    }
    let markers: Vec<String> = markers.split('|').map(str::to_owned).collect();
    if markers.iter().any(String::is_empty) {
        return None;
    }
    Some((var.to_owned(), ordinal, markers))
}

fn parse_notation(line: &str) -> std::result::Result<SubcatFrame, String> {
    // Drop a trailing romanized parenthetical.
    let line = match line.find('(') {
        Some(p) => line[..p].trim_end(),
        None => line,
    };
    let words: Vec<&str> = line.split_whitespace().collect();
    let Some((lemma, terms)) = words.split_last() else {
        return Err("empty frame line".into());
    };
    if terms.is_empty() || lemma.contains('=') {
        return Err(format!("frame line `{}` needs slots followed by a predicate", line));
    }
    let mut parsed = Vec::new();
    for t in terms {
        parsed.push(parse_term(t).ok_or_else(|| format!("malformed slot `{}`", t))?);
    }
    let arity = parsed.len();
    let slots = parsed
        .into_iter()
        .map(|(variable, arg_index, markers)| FrameSlot {
            relation: slot_relation(&markers, arity),
            variable,
            arg_index,
            markers,
            semantic_role: None,
            selectional: None,
        })
        .collect();
    Ok(SubcatFrame {
        predicate_lemma: lemma.to_string(),
        slots,
    })
}

/// `lemma<TAB>VAR:Nk:m1|m2:relation[:ROLE[:cat|cat]]...`
fn parse_tsv_frame(line: &str) -> std::result::Result<SubcatFrame, String> {
    let mut cols = line.split('\t').map(str::trim).filter(|c| !c.is_empty());
    let lemma = cols.next().ok_or("missing lemma")?;
    let mut slots = Vec::new();
    for col in cols {
        let parts: Vec<&str> = col.split(':').collect();
        if parts.len() < 4 {
            return Err(format!("malformed slot `{}`", col));
        }
        let arg_index: u8 = parts[1]
            .strip_prefix('N')
            .and_then(|n| n.parse().ok())
            .ok_or_else(|| format!("bad argument ordinal in `{}`", col))?;
        // relations may carry a subtype (`obl:arg`)
        let subtyped = parts
            .get(4)
            .and_then(|st| format!("{}:{}", parts[3], st).parse::<Relation>().ok());
        let (relation, rest) = match subtyped {
            Some(r) => (r, &parts[5..]),
            None => (parts[3].parse::<Relation>().map_err(|e| e.to_string())?, &parts[4..]),
        };
        slots.push(FrameSlot {
            variable: parts[0].to_owned(),
            arg_index,
            markers: parts[2].split('|').map(str::to_owned).collect(),
            relation,
            semantic_role: rest.first().map(|s| s.to_string()),
            selectional: rest.get(1).map(|c| c.split('|').map(str::to_owned).collect()),
        });
    }
    Ok(SubcatFrame {
        predicate_lemma: lemma.to_owned(),
        slots,
    })
}
