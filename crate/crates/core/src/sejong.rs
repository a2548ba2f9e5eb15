//! Sejong-style dependency labels (`NP_SBJ`, `VP_MOD`, ...) and their
//! bridge to UD relations, the right-headedness check, and the frame audit.
//!
//! Sejong trees reuse [`DependencyTree`]: their labels live in DEPREL as
//! [`Relation::Unknown`] values, so they are read with a lax parse.

use std::collections::BTreeSet;
use std::fmt;

use crate::conllu::{parse_document_with, DependencyTree, ParseOptions, Token};
use crate::diag::{Code, Diagnostic};
use crate::error::{Error, Result};
use crate::lexicon::{bare_form, Lexicon};
use crate::relation::Relation;

/// Labels of the Sejong treebank lineage known without a mapping file.
pub const SEJONG_LABELS: [&str; 15] = [
    "NP_SBJ", "NP_OBJ", "NP_AJT", "NP_MOD", "NP_CNJ", "NP", "VP", "VP_MOD", "VNP", "AP", "DP", "IP", "X", "L",
    "R",
];

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SejongLabel(String);

impl SejongLabel {
    pub fn new(label: impl Into<String>) -> Self {
        SejongLabel(label.into())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    /// Nominal (`NP*`) or predicate (`VP*`, `VNP*`) phrase family.
    fn family(&self) -> Option<&'static str> {
        if self.0.starts_with("NP") {
            Some("NP")
        } else if self.0.starts_with("VP") || self.0.starts_with("VNP") {
            Some("VP")
        } else {
            None
        }
    }
}

impl fmt::Display for SejongLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Condition {
    HeadVerbal,
    HeadNominal,
}

impl Condition {
    fn holds(self, tree: &DependencyTree, head: usize) -> bool {
        if head == 0 || head > tree.len() {
            return false;
        }
        let t = tree.token(head);
        match self {
            Condition::HeadVerbal => t.is_verbal(),
            Condition::HeadNominal => t.is_nominal(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MappingRow {
    pub label: SejongLabel,
    pub relation: Relation,
    pub condition: Option<Condition>,
}

/// Sejong label to UD relation table. The reverse direction is
/// approximate: it picks the first row naming a relation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MappingTable {
    rows: Vec<MappingRow>,
}

const BUNDLED_MAP: &str = include_str!("../data/sejong_map.tsv");

impl Default for MappingTable {
    fn default() -> Self {
        MappingTable::parse(BUNDLED_MAP).expect("bundled mapping table parses")
    }
}

impl MappingTable {
    /// Read `LABEL<TAB>relation[<TAB>condition]` lines.
    pub fn parse(text: &str) -> Result<Self> {
        let mut rows = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |message: String| Error::Format { line: i + 1, message };
            let cols: Vec<&str> = line.split('\t').map(str::trim).collect();
            if cols.len() < 2 || cols.len() > 3 || cols[0].is_empty() {
                return Err(err(format!("expected LABEL<TAB>relation[<TAB>condition], got `{}`", line)));
            }
            let relation: Relation = cols[1].parse().map_err(|e: crate::error::LabelError| err(e.to_string()))?;
            let condition = match cols.get(2) {
                None => None,
                Some(&"head=verbal") => Some(Condition::HeadVerbal),
                Some(&"head=nominal") => Some(Condition::HeadNominal),
                Some(c) => return Err(err(format!("unknown condition `{}`", c))),
            };
            rows.push(MappingRow {
                label: SejongLabel::new(cols[0]),
                relation,
                condition,
            });
        }
        Ok(MappingTable { rows })
    }

    pub fn rows(&self) -> &[MappingRow] {
        &self.rows
    }

    /// Known labels: the built-in inventory plus every label in the table.
    pub fn labels(&self) -> BTreeSet<&str> {
        let mut set: BTreeSet<&str> = SEJONG_LABELS.into_iter().collect();
        set.extend(self.rows.iter().map(|r| r.label.as_str()));
        set
    }

    pub fn is_known(&self, label: &str) -> bool {
        self.labels().contains(label)
    }

    /// Relation for `label` on a dependent of `head`.
    pub fn to_ud(&self, label: &str, tree: &DependencyTree, head: usize) -> Option<Relation> {
        self.rows
            .iter()
            .filter(|r| r.label.as_str() == label)
            .find(|r| r.condition.is_none_or(|c| c.holds(tree, head)))
            .map(|r| r.relation.clone())
    }

    /// Sejong label for a UD relation on `dependent`.
    pub fn to_sejong(&self, relation: &Relation, dependent: &Token) -> Option<SejongLabel> {
        let family = if dependent.is_nominal() {
            "NP"
        } else if dependent.is_verbal() {
            "VP"
        } else {
            ""
        };
        let candidates: Vec<&MappingRow> = self.rows.iter().filter(|r| r.relation == *relation).collect();
        candidates
            .iter()
            .find(|r| r.label.family() == Some(family))
            .or_else(|| candidates.first())
            .map(|r| r.label.clone())
    }
}

fn add_misc(token: &mut Token, item: &str) {
    if token.misc.is_empty() {
        token.misc = item.to_owned();
    } else if !token.misc.split('|').any(|m| m == item) {
        token.misc = format!("{}|{}", token.misc, item);
    }
}

/// Parse a Sejong-style document. Labels outside the table are an error
/// unless `lax`, in which case they come back as warnings.
pub fn parse_sejong(text: &str, table: &MappingTable, lax: bool) -> Result<(Vec<DependencyTree>, Vec<String>)> {
    let parsed = parse_document_with(text, ParseOptions { lax: true })?;
    let mut warnings = Vec::new();
    for tree in &parsed.trees {
        for t in &tree.tokens {
            let label = t.deprel.to_string();
            if table.is_known(&label) {
                continue;
            }
            if !lax {
                return Err(Error::UnknownSejongLabel {
                    sentence: tree.sentence_id.clone(),
                    token: t.index,
                    label,
                });
            }
            warnings.push(format!(
                "{}: token {}: unknown Sejong label `{}`",
                tree.sentence_id, t.index, label
            ));
        }
    }
    Ok((parsed.trees, warnings))
}

/// One finding per edge whose head precedes its dependent.
pub fn check_right_headed(tree: &DependencyTree) -> Vec<Diagnostic> {
    tree.tokens
        .iter()
        .filter(|t| t.head != 0 && t.head < t.index)
        .map(|t| {
            Diagnostic::new(
                Code::SejongLeftHead,
                tree.sentence_id.as_str(),
                vec![t.head, t.index],
                format!("`{}` ({}) depends on the earlier `{}`", t.form, t.deprel, tree.token(t.head).form),
            )
        })
        .collect()
}

/// Relabel a Sejong-style tree with UD relations. Heads and token content
/// are untouched; the root label and eojeol-attached punctuation are noted
/// in MISC.
pub fn map_sejong_to_ud(tree: &DependencyTree, table: &MappingTable, lax: bool) -> Result<(DependencyTree, Vec<String>)> {
    let mut out = tree.clone();
    let mut warnings = Vec::new();
    for i in 1..=tree.len() {
        let src = tree.token(i);
        let label = src.deprel.to_string();
        let relation = if src.head == 0 {
            Some(Relation::ROOT)
        } else {
            table.to_ud(&label, tree, src.head)
        };
        let relation = match relation {
            Some(r) if table.is_known(&label) || src.head == 0 => r,
            _ if lax => {
                warnings.push(format!(
                    "{}: token {}: no mapping for `{}`, using dep",
                    tree.sentence_id, i, label
                ));
                Relation::DEP
            }
            _ => {
                return Err(Error::UnknownSejongLabel {
                    sentence: tree.sentence_id.clone(),
                    token: i,
                    label,
                })
            }
        };
        let t = out.token_mut(i);
        t.deprel = relation;
        if src.head == 0 {
            add_misc(t, &format!("SejongRoot={}", label));
        }
        let bare = bare_form(&src.form);
        if !bare.is_empty() && bare.len() < src.form.len() {
            add_misc(t, &format!("TrailingPunct={}", &src.form[bare.len()..]));
        }
    }
    Ok((out, warnings))
}

/// Sejong-style rendering of a UD tree: punctuation tokens are merged into
/// the preceding eojeol (the following one at sentence start) and labels
/// are mapped back through the table.
pub fn ud_to_sejong(tree: &DependencyTree, table: &MappingTable) -> DependencyTree {
    let n = tree.len();
    let is_word = |i: usize| !tree.token(i).is_punct();
    // merge target of each punctuation token
    let mut target: Vec<Option<usize>> = vec![None; n + 1];
    for (i, slot) in target.iter_mut().enumerate().skip(1) {
        if is_word(i) || tree.head(i) == 0 {
            continue;
        }
        *slot = (1..i)
            .rev()
            .find(|&j| is_word(j))
            .or_else(|| (i + 1..=n).find(|&j| is_word(j)));
    }
    let kept: Vec<usize> = (1..=n).filter(|&i| target[i].is_none()).collect();
    let mut new_index = vec![0; n + 1];
    for (k, &i) in kept.iter().enumerate() {
        new_index[i] = k + 1;
    }

    let mut tokens = Vec::with_capacity(kept.len());
    for &i in &kept {
        let src = tree.token(i);
        let mut t = src.clone();
        t.index = new_index[i];
        let before: Vec<usize> = (1..i).rev().take_while(|&j| target[j] == Some(i)).collect();
        let after: Vec<usize> = (i + 1..=n).take_while(|&j| target[j] == Some(i)).collect();
        for &j in before.iter().rev() {
            t.form = format!("{}{}", tree.token(j).form, t.form);
        }
        for &j in &after {
            t.form.push_str(&tree.token(j).form);
            if !tree.token(j).xpos.is_empty() && !t.xpos.is_empty() {
                t.xpos = format!("{}+{}", t.xpos, tree.token(j).xpos);
            }
        }
        // follow heads through merged punctuation
        let mut h = src.head;
        for _ in 0..=n {
            match target.get(h).copied().flatten() {
                Some(tgt) if tgt == i => h = tree.head(h),
                Some(tgt) => {
                    h = tgt;
                    break;
                }
                None => break,
            }
        }
        t.head = if h == 0 || h == i { 0 } else { new_index[h] };
        let label = if t.head == 0 {
            let tags = src.tags();
            if tags.iter().any(|x| x == "vcp") {
                "VNP".to_owned()
            } else if src.is_verbal() {
                "VP".to_owned()
            } else {
                "NP".to_owned()
            }
        } else {
            table
                .to_sejong(&src.deprel, src)
                .map(|l| l.to_string())
                .unwrap_or_else(|| "X".to_owned())
        };
        t.deprel = Relation::Unknown(label);
        t.deps.clear();
        tokens.push(t);
    }
    let mut out = DependencyTree::new(&tree.sentence_id, tokens);
    out.comments = tree.comments.clone();
    out.text = tree.text.clone();
    out
}

/// Compare the case-marked dependents of each framed predicate against the
/// best frame's slots.
pub fn audit_with_frames(tree: &DependencyTree, lexicon: &Lexicon) -> Vec<Diagnostic> {
    let mut out = Vec::new();
    for h in 1..=tree.len() {
        if !tree.token(h).is_verbal() {
            continue;
        }
        let Some(frame) = lexicon.best_frame(tree, h) else {
            continue;
        };
        for d in tree.children(h).unwrap_or_default() {
            let dep = tree.token(d);
            let Some(slot) = frame.slot_for(dep) else {
                continue;
            };
            if dep.deprel != slot.relation {
                out.push(Diagnostic::new(
                    Code::FrameMismatch,
                    tree.sentence_id.as_str(),
                    vec![d],
                    format!(
                        "`{}` fills slot {} of {} and should be {}, not {}",
                        dep.form, slot.variable, frame.predicate_lemma, slot.relation, dep.deprel
                    ),
                ));
            }
        }
    }
    crate::diag::sort_diagnostics(&mut out);
    out
}
