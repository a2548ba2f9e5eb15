//! Corpus-level diffs between two annotations of the same text, and
//! descriptive statistics.

use std::collections::BTreeMap;

use crate::conllu::DependencyTree;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeDiff {
    pub sentence_id: String,
    pub token: usize,
    pub head_a: usize,
    pub head_b: usize,
    pub deprel_a: String,
    pub deprel_b: String,
}

impl EdgeDiff {
    pub fn to_record(&self) -> String {
        format!(
            "{}\t{}\t{}->{}\t{}->{}",
            self.sentence_id, self.token, self.head_a, self.head_b, self.deprel_a, self.deprel_b
        )
    }
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct DiffReport {
    pub changes: Vec<EdgeDiff>,
    pub tokens: usize,
    pub same_head: usize,
    pub same_edge: usize,
}

fn percent(part: usize, whole: usize) -> f64 {
    if whole == 0 {
        100.0
    } else {
        100.0 * part as f64 / whole as f64
    }
}

impl DiffReport {
    /// Unlabeled attachment agreement, in percent.
    pub fn uas(&self) -> f64 {
        percent(self.same_head, self.tokens)
    }

    /// Labeled attachment agreement, in percent.
    pub fn las(&self) -> f64 {
        percent(self.same_edge, self.tokens)
    }

    pub fn summary(&self) -> String {
        format!(
            "changed edges: {}\ntokens: {}\nUAS: {:.2}%\nLAS: {:.2}%\n",
            self.changes.len(),
            self.tokens,
            self.uas(),
            self.las()
        )
    }
}

/// Edge-by-edge comparison. The corpora must hold the same sentences with
/// the same token forms.
pub fn diff_corpora(a: &[DependencyTree], b: &[DependencyTree]) -> Result<DiffReport> {
    if a.len() != b.len() {
        let index = a.len().min(b.len());
        let sentence = a.get(index).or_else(|| b.get(index)).map(|t| t.sentence_id.clone()).unwrap_or_default();
        return Err(Error::Misaligned {
            index: index + 1,
            sentence,
            reason: format!("{} sentences against {}", a.len(), b.len()),
        });
    }
    let mut report = DiffReport::default();
    for (k, (ta, tb)) in a.iter().zip(b).enumerate() {
        let misaligned = |reason: String| Error::Misaligned {
            index: k + 1,
            sentence: ta.sentence_id.clone(),
            reason,
        };
        if ta.len() != tb.len() {
            return Err(misaligned(format!("{} tokens against {}", ta.len(), tb.len())));
        }
        for (x, y) in ta.tokens.iter().zip(&tb.tokens) {
            if x.form != y.form {
                return Err(misaligned(format!("token {} is `{}` against `{}`", x.index, x.form, y.form)));
            }
            report.tokens += 1;
            let same_head = x.head == y.head;
            let same_rel = x.deprel == y.deprel;
            report.same_head += usize::from(same_head);
            report.same_edge += usize::from(same_head && same_rel);
            if !(same_head && same_rel) {
                report.changes.push(EdgeDiff {
                    sentence_id: ta.sentence_id.clone(),
                    token: x.index,
                    head_a: x.head,
                    head_b: y.head,
                    deprel_a: x.deprel.to_string(),
                    deprel_b: y.deprel.to_string(),
                });
            }
        }
    }
    Ok(report)
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CorpusStats {
    pub sentences: usize,
    pub tokens: usize,
    pub deprels: BTreeMap<String, usize>,
    /// Edges whose head follows the dependent.
    pub rightward: usize,
    /// Edges whose head precedes the dependent.
    pub leftward: usize,
}

impl CorpusStats {
    pub fn from_trees(trees: &[DependencyTree]) -> Self {
        let mut s = CorpusStats {
            sentences: trees.len(),
            ..CorpusStats::default()
        };
        for t in trees.iter().flat_map(|tree| &tree.tokens) {
            s.tokens += 1;
            *s.deprels.entry(t.deprel.to_string()).or_default() += 1;
            if t.head > t.index {
                s.rightward += 1;
            } else if t.head != 0 {
                s.leftward += 1;
            }
        }
        s
    }

    /// Share of non-root edges pointing to a later head, in percent.
    pub fn rightward_ratio(&self) -> f64 {
        if self.rightward + self.leftward == 0 {
            0.0
        } else {
            percent(self.rightward, self.rightward + self.leftward)
        }
    }

    pub fn to_text(&self) -> String {
        let mut s = format!(
            "{:<14}{}\n{:<14}{}\n{:<14}{} ({:.2}%)\n{:<14}{}\n",
            "sentences",
            self.sentences,
            "tokens",
            self.tokens,
            "rightward",
            self.rightward,
            self.rightward_ratio(),
            "leftward",
            self.leftward
        );
        let width = self.deprels.keys().map(|k| k.chars().count()).max().unwrap_or(0) + 2;
        for (rel, n) in &self.deprels {
            s.push_str(&format!("  {:<width$}{}\n", rel, n, width = width));
        }
        s
    }

    pub fn to_records(&self) -> String {
        let mut s = format!(
            "sentences\t{}\ntokens\t{}\nrightward\t{}\nleftward\t{}\n",
            self.sentences, self.tokens, self.rightward, self.leftward
        );
        for (rel, n) in &self.deprels {
            s.push_str(&format!("deprel\t{}\t{}\n", rel, n));
        }
        s
    }
}
