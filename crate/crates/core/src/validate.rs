//! Guideline linting. Each rule mirrors the postcondition of one rewrite
//! pass, so a converted tree carries no error-severity findings.

use std::collections::{BTreeMap, BTreeSet};

use crate::conllu::{check_wellformed, DependencyTree};
use crate::diag::{sort_diagnostics, Code, Diagnostic, Severity};
use crate::lexicon::Lexicon;
use crate::relation::Relation;
use crate::rules::{cop_misdirected, quotative_as_case, topic_relabels};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GuidelineRuleSet {
    enabled: BTreeSet<Code>,
    overrides: BTreeMap<Code, Severity>,
}

impl Default for GuidelineRuleSet {
    fn default() -> Self {
        GuidelineRuleSet {
            enabled: Code::GUIDELINES.into_iter().collect(),
            overrides: BTreeMap::new(),
        }
    }
}

impl GuidelineRuleSet {
    pub fn severity(&self, code: Code) -> Severity {
        self.overrides
            .get(&code)
            .copied()
            .unwrap_or_else(|| code.default_severity())
    }

    pub fn set_severity(&mut self, code: Code, severity: Severity) {
        self.overrides.insert(code, severity);
    }

    pub fn disable(&mut self, code: Code) {
        self.enabled.remove(&code);
    }

    pub fn is_enabled(&self, code: Code) -> bool {
        self.enabled.contains(&code)
    }

    /// Apply a `CODE=severity` override; `CODE=off` disables the rule.
    pub fn parse_override(&mut self, spec: &str) -> Result<(), String> {
        let (code, sev) = spec
            .split_once('=')
            .ok_or_else(|| format!("expected CODE=severity, got `{}`", spec))?;
        let code: Code = code.trim().parse()?;
        match sev.trim() {
            "off" => self.disable(code),
            sev => {
                let sev: Severity = sev.parse()?;
                self.enabled.insert(code);
                self.set_severity(code, sev);
            }
        }
        Ok(())
    }
}

fn edge_pair(d: usize, h: usize) -> Vec<usize> {
    vec![d.min(h), d.max(h)]
}

/// Lint one sentence. Findings come back ordered by token, then code.
pub fn validate_sentence(tree: &DependencyTree, rules: &GuidelineRuleSet, lexicon: &Lexicon) -> Vec<Diagnostic> {
    let id = tree.sentence_id.as_str();
    let mut out = check_wellformed(tree);
    // content rules assume a tree; they still run on ill-formed input but
    // skip edges that point outside the sentence
    let n = tree.len();

    for t in &tree.tokens {
        let (d, h) = (t.index, t.head);
        if h == 0 || h > n {
            continue;
        }
        let head = tree.token(h);
        let rel = &t.deprel;
        let both_verbal = t.is_verbal() && head.is_verbal();

        if *rel == Relation::FLAT && both_verbal {
            out.push(Diagnostic::new(
                Code::NoFlatVerb,
                id,
                edge_pair(d, h),
                format!("verbs `{}` and `{}` are joined by flat", head.form, t.form),
            ));
        } else if *rel == Relation::FLAT && h < d {
            out.push(Diagnostic::new(
                Code::HeadfinalFlat,
                id,
                edge_pair(d, h),
                format!("flat `{}` is headed by the earlier word `{}`", t.form, head.form),
            ));
        }
        if *rel == Relation::COMPOUND && h < d {
            out.push(Diagnostic::new(
                Code::HeadfinalCompound,
                id,
                edge_pair(d, h),
                format!("compound `{}` is headed by the earlier word `{}`", t.form, head.form),
            ));
        }
        if *rel == Relation::AUX && d < h {
            out.push(Diagnostic::new(
                Code::AuxOrder,
                id,
                edge_pair(d, h),
                format!("auxiliary `{}` precedes its predicate `{}`", t.form, head.form),
            ));
        }
        if *rel == Relation::FIXED && d < h {
            out.push(Diagnostic::new(
                Code::FixedOrder,
                id,
                edge_pair(d, h),
                format!("fixed `{}` precedes its head `{}`", t.form, head.form),
            ));
        }
        if *rel == Relation::OBL_ARG {
            let backed = lexicon
                .best_frame(tree, h)
                .and_then(|f| f.slot_for(t))
                .is_some_and(|s| s.relation == Relation::OBL_ARG);
            if !backed {
                out.push(Diagnostic::new(
                    Code::OblArgUnbacked,
                    id,
                    vec![d],
                    format!("no frame of `{}` licenses obl:arg on `{}`", head.form, t.form),
                ));
            }
        }
        if cop_misdirected(tree, d) {
            out.push(Diagnostic::new(
                Code::CopDirection,
                id,
                edge_pair(d, h),
                format!("nominal `{}` depends on the copula `{}`", t.form, head.form),
            ));
        }
        if quotative_as_case(tree, &lexicon.markers, d) {
            out.push(Diagnostic::new(
                Code::MarkQuotative,
                id,
                vec![d],
                format!("quotative `{}` is labeled case", t.form),
            ));
        }
        if let Relation::Unknown(label) = rel {
            out.push(Diagnostic::new(
                Code::SubtypeIllegal,
                id,
                vec![d],
                format!("relation `{}` is not in the inventory", label),
            ));
        }
    }

    if tree.is_wellformed() {
        for (d, rel) in topic_relabels(tree, &lexicon.markers, true) {
            out.push(Diagnostic::new(
                Code::TopicDislocated,
                id,
                vec![d],
                format!(
                    "topic-marked `{}` labeled {} should be {}",
                    tree.token(d).form,
                    tree.deprel(d),
                    rel
                ),
            ));
        }
    }

    out.retain(|d| rules.is_enabled(d.code));
    for d in &mut out {
        d.severity = rules.severity(d.code);
    }
    sort_diagnostics(&mut out);
    out
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CorpusSummary {
    pub sentences: usize,
    pub counts: BTreeMap<Code, usize>,
    pub by_severity: BTreeMap<Severity, usize>,
}

impl CorpusSummary {
    pub fn add(&mut self, diags: &[Diagnostic]) {
        self.sentences += 1;
        for d in diags {
            *self.counts.entry(d.code).or_default() += 1;
            *self.by_severity.entry(d.severity).or_default() += 1;
        }
    }

    pub fn count(&self, code: Code) -> usize {
        self.counts.get(&code).copied().unwrap_or(0)
    }

    pub fn errors(&self) -> usize {
        self.by_severity.get(&Severity::Error).copied().unwrap_or(0)
    }

    /// Count table over all guideline codes, zero rows included.
    pub fn to_table(&self) -> String {
        let mut s = format!("sentences\t{}\n", self.sentences);
        for code in Code::GUIDELINES {
            s.push_str(&format!("{}\t{}\n", code, self.count(code)));
        }
        s
    }
}

/// Lint a corpus in parallel; diagnostics stay in input order.
pub fn validate_corpus(
    trees: &[DependencyTree],
    rules: &GuidelineRuleSet,
    lexicon: &Lexicon,
) -> (CorpusSummary, Vec<Vec<Diagnostic>>) {
    use rayon::prelude::*;

    let per_sentence: Vec<Vec<Diagnostic>> = trees
        .par_iter()
        .map(|t| validate_sentence(t, rules, lexicon))
        .collect();
    let mut summary = CorpusSummary::default();
    for diags in &per_sentence {
        summary.add(diags);
    }
    (summary, per_sentence)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::conllu::{parse_document, Token};

    const FIG1_TOP: &str = "\
1\t나는\t나+는\tPRON\tNP+JX\t_\t4\tnsubj\t_\t_
2\t장동건\t장동건\tPROPN\tNNP\t_\t4\tobj\t_\t_
3\t사진을\t사진+을\tNOUN\tNNG+JKO\t_\t2\tflat\t_\t_
4\t보고\t보+고\tVERB\tVV+EC\t_\t0\troot\t_\t_
5\t싶다\t싶+다\tAUX\tVX+EF\t_\t4\tflat\t_\t_
";

    #[test]
    fn catenative_top_findings() {
        let tree = &parse_document(FIG1_TOP).unwrap()[0];
        let diags = validate_sentence(tree, &GuidelineRuleSet::default(), &Lexicon::seeded());
        let got: Vec<(Code, Vec<usize>)> = diags.iter().map(|d| (d.code, d.token_indices.clone())).collect();
        assert_eq!(
            got,
            vec![
                (Code::TopicDislocated, vec![1]),
                (Code::HeadfinalFlat, vec![2, 3]),
                (Code::NoFlatVerb, vec![4, 5]),
            ]
        );
    }

    #[test]
    fn single_root_is_clean() {
        let t = DependencyTree::new("s", vec![Token::new(1, "간다", "가+ㄴ다", "VERB", "VV+EF", 0, Relation::ROOT)]);
        assert!(validate_sentence(&t, &GuidelineRuleSet::default(), &Lexicon::seeded()).is_empty());
    }

    #[test]
    fn overrides_and_disabling() {
        let tree = &parse_document(FIG1_TOP).unwrap()[0];
        let mut rules = GuidelineRuleSet::default();
        rules.parse_override("HEADFINAL-FLAT=info").unwrap();
        rules.disable(Code::TopicDislocated);
        let diags = validate_sentence(tree, &rules, &Lexicon::seeded());
        assert_eq!(diags.len(), 2);
        assert_eq!(diags[0].severity, Severity::Info);
        assert!(rules.parse_override("NOPE=info").is_err());
        assert!(rules.parse_override("HEADFINAL-FLAT").is_err());
    }

    #[test]
    fn empty_corpus() {
        let (summary, diags) = validate_corpus(&[], &GuidelineRuleSet::default(), &Lexicon::seeded());
        assert_eq!(summary.sentences, 0);
        assert!(summary.counts.is_empty());
        assert!(diags.is_empty());
    }
}
