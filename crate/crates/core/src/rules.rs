//! The conversion engine: deterministic rewrite passes that turn
//! current-scheme Korean UD trees into the head-final revised scheme.
//!
//! Passes only touch HEAD and DEPREL (and reset DEPS of tokens whose edge
//! changed). Every local rewrite is checked for well-formedness and rolled
//! back if it would break the tree, so passes never produce cycles. Each
//! pass iterates to its own fixpoint, and [`run_pipeline`] repeats the
//! whole sequence until a round changes nothing.

use std::fmt;
use std::str::FromStr;

use crate::conllu::{DependencyTree, Token};
use crate::error::{Error, Result};
use crate::lexicon::{match_fixed, Lexicon, MarkerClass, MarkerTable};
use crate::relation::{Relation, Universal};

/// Pass identifiers in canonical order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PassName {
    CopDirection,
    QuotativeMark,
    FixedExpressions,
    NominalHeadFinality,
    FlatLastHead,
    VerbalRestructure,
    CaseRoleRefinement,
}

impl PassName {
    pub const CANONICAL: [PassName; 7] = [
        PassName::CopDirection,
        PassName::QuotativeMark,
        PassName::FixedExpressions,
        PassName::NominalHeadFinality,
        PassName::FlatLastHead,
        PassName::VerbalRestructure,
        PassName::CaseRoleRefinement,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            PassName::CopDirection => "cop_direction",
            PassName::QuotativeMark => "quotative_mark",
            PassName::FixedExpressions => "fixed_expressions",
            PassName::NominalHeadFinality => "nominal_head_finality",
            PassName::FlatLastHead => "flat_last_head",
            PassName::VerbalRestructure => "verbal_restructure",
            PassName::CaseRoleRefinement => "case_role_refinement",
        }
    }
}

impl fmt::Display for PassName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for PassName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        PassName::CANONICAL
            .iter()
            .copied()
            .find(|p| p.as_str() == s.trim())
            .ok_or_else(|| Error::UnknownPass(s.to_owned()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeChange {
    pub token: usize,
    pub old_head: usize,
    pub old_deprel: Relation,
    pub new_head: usize,
    pub new_deprel: Relation,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PassReport {
    pub pass: PassName,
    pub changes: Vec<EdgeChange>,
    pub notes: Vec<String>,
}

impl PassReport {
    fn new(pass: PassName) -> Self {
        PassReport {
            pass,
            changes: Vec::new(),
            notes: Vec::new(),
        }
    }

    /// True when the pass left the tree untouched. Notes do not count.
    pub fn is_empty(&self) -> bool {
        self.changes.is_empty()
    }

    /// Line-oriented records: `sentence_id, pass, token, old -> new`, then
    /// notes with `-` in the token column.
    pub fn to_records(&self, sentence_id: &str) -> Vec<String> {
        let mut out: Vec<String> = self
            .changes
            .iter()
            .map(|c| {
                format!(
                    "{}\t{}\t{}\t{}:{}\t{}:{}",
                    sentence_id, self.pass, c.token, c.old_head, c.old_deprel, c.new_head, c.new_deprel
                )
            })
            .collect();
        out.extend(
            self.notes
                .iter()
                .map(|n| format!("{}\t{}\t-\t{}", sentence_id, self.pass, n)),
        );
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConversionConfig {
    /// Enabled passes, kept in canonical order.
    passes: Vec<PassName>,
    /// Treat topic-marked nominals labeled plain `nsubj` as subject
    /// candidates for `dislocated:nsubj` (GSD annotates them so).
    pub legacy_topic_nsubj: bool,
    pub max_rounds: usize,
}

impl Default for ConversionConfig {
    fn default() -> Self {
        ConversionConfig {
            passes: PassName::CANONICAL.to_vec(),
            legacy_topic_nsubj: true,
            max_rounds: 16,
        }
    }
}

impl ConversionConfig {
    pub fn with_passes(passes: impl IntoIterator<Item = PassName>) -> Self {
        let mut cfg = ConversionConfig::default();
        cfg.set_passes(passes);
        cfg
    }

    pub fn set_passes(&mut self, passes: impl IntoIterator<Item = PassName>) {
        let wanted: Vec<PassName> = passes.into_iter().collect();
        self.passes = PassName::CANONICAL
            .iter()
            .copied()
            .filter(|p| wanted.contains(p))
            .collect();
    }

    /// Parse a comma-separated pass list.
    pub fn parse_pass_list(list: &str) -> Result<Vec<PassName>> {
        list.split(',')
            .filter(|s| !s.trim().is_empty())
            .map(str::parse)
            .collect()
    }

    pub fn passes(&self) -> &[PassName] {
        &self.passes
    }
}

/// Working copy with transactional local edits.
struct Work<'a> {
    tree: DependencyTree,
    lex: &'a Lexicon,
    cfg: &'a ConversionConfig,
    notes: Vec<String>,
}

impl<'a> Work<'a> {
    fn tok(&self, i: usize) -> &Token {
        self.tree.token(i)
    }

    fn rel(&self, i: usize) -> &Relation {
        self.tree.deprel(i)
    }

    fn head(&self, i: usize) -> usize {
        self.tree.head(i)
    }

    fn n(&self) -> usize {
        self.tree.len()
    }

    /// Apply `edit` and keep it only if the tree stays well-formed.
    /// Returns true if something changed.
    fn try_edit(&mut self, what: &str, edit: impl FnOnce(&mut DependencyTree)) -> bool {
        let snapshot = edges(&self.tree);
        edit(&mut self.tree);
        let changed = self
            .tree
            .tokens
            .iter()
            .zip(&snapshot)
            .any(|(t, (h, r))| t.head != *h || t.deprel != *r);
        if changed && !self.tree.is_wellformed() {
            for (t, (h, r)) in self.tree.tokens.iter_mut().zip(snapshot) {
                t.head = h;
                t.deprel = r;
            }
            self.note(format!("skipped {}: would break the tree", what));
            return false;
        }
        changed
    }

    fn note(&mut self, note: String) {
        if !self.notes.contains(&note) {
            self.notes.push(note);
        }
    }
}

fn edges(tree: &DependencyTree) -> Vec<(usize, Relation)> {
    tree.tokens.iter().map(|t| (t.head, t.deprel.clone())).collect()
}

/// Set an edge, keeping `root` exactly on head 0.
fn set_edge(tree: &mut DependencyTree, i: usize, head: usize, rel: Relation) {
    let t = tree.token_mut(i);
    t.head = head;
    t.deprel = if head == 0 {
        Relation::ROOT
    } else if rel == Relation::ROOT {
        Relation::DEP
    } else {
        rel
    };
}

/// `new_head` takes over the attachment of `old_head`.
fn take_attachment(tree: &mut DependencyTree, new_head: usize, old_head: usize) {
    let (h, r) = (tree.head(old_head), tree.deprel(old_head).clone());
    set_edge(tree, new_head, h, r);
}

/// Make `head` the head of the pair {head, dep}, with `dep` attached by
/// `rel`. If `head` currently depends on `dep`, it takes `dep`'s
/// attachment first.
fn make_head(tree: &mut DependencyTree, head: usize, dep: usize, rel: Relation) {
    if tree.head(head) == dep {
        take_attachment(tree, head, dep);
    }
    set_edge(tree, dep, head, rel);
}

fn chain_nominal(t: &Token) -> bool {
    matches!(t.upos.as_str(), "NOUN" | "PROPN" | "NUM")
}

fn date_or_numeral(t: &Token) -> bool {
    let form = crate::lexicon::bare_form(&t.form);
    t.upos == "NUM"
        || t.tags().first().is_some_and(|tag| tag == "sn")
        || (form.starts_with(|c: char| c.is_ascii_digit())
            && (form.ends_with('년') || form.ends_with('월') || form.ends_with('일')))
}

/// Tokens reachable from `h` through rightward flat/compound edges whose
/// dependents satisfy `member`.
fn rightward_chain(tree: &DependencyTree, h: usize, member: impl Fn(&Token) -> bool) -> Vec<usize> {
    let mut chain = vec![h];
    let mut i = 0;
    while i < chain.len() {
        let cur = chain[i];
        for d in tree.deps_of(cur) {
            let rel = tree.deprel(d);
            if d > cur && (*rel == Relation::FLAT || *rel == Relation::COMPOUND) && member(tree.token(d)) {
                chain.push(d);
            }
        }
        i += 1;
    }
    chain.sort_unstable();
    chain
}

/// Re-head `chain` (rooted at `h`) on its last token. Members attach to the
/// new head with `relabel`, or keep their own label when `None`.
fn rehead_chain(tree: &mut DependencyTree, h: usize, chain: &[usize], relabel: Option<Relation>) {
    let last = *chain.last().expect("non-empty chain");
    // fixed and aux dependents stay put when moving them would put their
    // head on the right
    let moved: Vec<usize> = tree
        .deps_of(h)
        .into_iter()
        .filter(|d| !chain.contains(d))
        .filter(|&d| d > last || !(tree.deprel(d).is(Universal::Fixed) || tree.deprel(d).is(Universal::Aux)))
        .collect();
    // the old head joins with the label that linked the new head to it
    let link = tree.deprel(last).clone();
    take_attachment(tree, last, h);
    for &c in chain.iter().filter(|&&c| c != last) {
        let own = if c == h { link.clone() } else { tree.deprel(c).clone() };
        let rel = relabel.clone().unwrap_or(own);
        set_edge(tree, c, last, rel);
    }
    for d in moved {
        let rel = tree.deprel(d).clone();
        set_edge(tree, d, last, rel);
    }
}

/// Does a `cop` edge have the copula heading its nominal?
pub(crate) fn cop_misdirected(tree: &DependencyTree, d: usize) -> bool {
    let h = tree.head(d);
    tree.deprel(d).is(Universal::Cop)
        && h != 0
        && h <= tree.len()
        && tree.token(d).is_nominal()
        && !tree.token(h).is_nominal()
}

/// Is `d` a quotative particle labeled `case` on a clausal head?
pub(crate) fn quotative_as_case(tree: &DependencyTree, markers: &MarkerTable, d: usize) -> bool {
    let h = tree.head(d);
    *tree.deprel(d) == Relation::CASE
        && h != 0
        && h <= tree.len()
        && tree.token(h).is_verbal()
        && markers.classify(tree.token(d)) == MarkerClass::Quotative
}

/// Relabels decided by the double-subject rule, as (token, new relation).
pub(crate) fn topic_relabels(tree: &DependencyTree, markers: &MarkerTable, legacy_nsubj: bool) -> Vec<(usize, Relation)> {
    let mut out = Vec::new();
    for h in 1..=tree.len() {
        if !tree.token(h).is_verbal() {
            continue;
        }
        let deps = tree.deps_of(h);
        let topics: Vec<usize> = deps
            .iter()
            .copied()
            .filter(|&d| {
                let t = tree.token(d);
                let rel = &t.deprel;
                t.is_nominal()
                    && markers.classify(t) == MarkerClass::Topic
                    && (*rel == Relation::DISLOCATED
                        || *rel == Relation::DISLOCATED_NSUBJ
                        || (legacy_nsubj && *rel == Relation::NSUBJ))
            })
            .collect();
        let others = deps.iter().filter(|d| {
            !topics.contains(d)
                && (tree.deprel(**d).is(Universal::Nsubj) || tree.deprel(**d).is(Universal::Csubj))
        });
        if others.count() == 0 {
            if let [t] = topics.as_slice() {
                if *tree.deprel(*t) != Relation::DISLOCATED_NSUBJ {
                    out.push((*t, Relation::DISLOCATED_NSUBJ));
                }
            }
        } else {
            for &t in &topics {
                if *tree.deprel(t) != Relation::DISLOCATED {
                    out.push((t, Relation::DISLOCATED));
                }
            }
        }
    }
    out
}

fn sweep_cop(w: &mut Work) {
    for d in 1..=w.n() {
        if !cop_misdirected(&w.tree, d) {
            continue;
        }
        let h = w.head(d);
        w.try_edit("cop flip", |t| {
            let others: Vec<usize> = t.deps_of(h).into_iter().filter(|&x| x != d).collect();
            take_attachment(t, d, h);
            set_edge(t, h, d, Relation::COP);
            for x in others {
                let rel = t.deprel(x).clone();
                set_edge(t, x, d, rel);
            }
        });
    }
}

fn sweep_quotative(w: &mut Work) {
    for d in 1..=w.n() {
        if quotative_as_case(&w.tree, &w.lex.markers, d) {
            let h = w.head(d);
            w.try_edit("quotative mark", |t| set_edge(t, d, h, Relation::MARK));
        }
    }
}

fn sweep_fixed(w: &mut Work) {
    // Fixed expressions hang off their first word.
    for d in 1..=w.n() {
        let h = w.head(d);
        if *w.rel(d) == Relation::FIXED && h > d {
            w.try_edit("fixed reorder", |t| make_head(t, d, h, Relation::FIXED));
        }
    }

    let mut start = 1;
    while start <= w.n() {
        let Some(m) = match_fixed(&w.lex.inventory, &w.tree, start) else {
            start += 1;
            continue;
        };
        let expr = w.lex.inventory.fixed_expressions[m.expression].clone();
        let span: Vec<usize> = (m.start..=m.end).collect();
        start = m.end + 1;
        if m.start == 1 {
            w.note(format!(
                "fixed expression `{}` at token 1 has no host",
                expr.forms.join(" ")
            ));
            continue;
        }
        let host = m.start - 1;
        let first = m.start;
        let label = format!("fixed expression `{}`", expr.forms.join(" "));
        w.try_edit(&label, |t| {
            let in_span = |i: usize| span.contains(&i);
            let ext = span
                .iter()
                .map(|&s| t.head(s))
                .find(|&h| !in_span(h) && h != host);
            // The host's topmost ancestor below the span inherits the span's
            // external attachment.
            let mut lifted = None;
            if let Some(ext_head) = ext {
                {
                    let mut u = host;
                    let mut below_span = None;
                    for _ in 0..=t.len() {
                        let up = t.head(u);
                        if up == 0 {
                            break;
                        }
                        if in_span(up) {
                            below_span = Some(u);
                            break;
                        }
                        u = up;
                    }
                    if let Some(u) = below_span {
                        let rel = t.deprel(u).clone();
                        set_edge(t, u, ext_head, rel);
                        lifted = Some(u);
                    }
                }
            }
            let relanded: Vec<usize> = (1..=t.len())
                .filter(|&x| !in_span(x) && Some(x) != lifted && x != host && in_span(t.head(x)))
                .collect();
            if in_span(t.head(host)) {
                // host itself sat under the span and was not lifted: only
                // possible when the span top has no external head
                let rel = t.deprel(host).clone();
                set_edge(t, host, 0, rel);
            }
            set_edge(t, first, host, expr.relation.clone());
            for &s in &span[1..] {
                set_edge(t, s, first, Relation::FIXED);
            }
            for x in relanded {
                let rel = t.deprel(x).clone();
                set_edge(t, x, host, rel);
            }
        });
    }
}

fn sweep_nominal(w: &mut Work) {
    for h in 1..=w.n() {
        if !chain_nominal(w.tok(h)) {
            continue;
        }
        let chain = rightward_chain(&w.tree, h, chain_nominal);
        if chain.len() < 2 {
            continue;
        }
        let toks: Vec<&Token> = chain.iter().map(|&c| w.tok(c)).collect();
        let flat_like = toks.iter().all(|t| t.upos == "PROPN") || toks.iter().all(|t| date_or_numeral(t));
        if flat_like {
            continue;
        }
        w.try_edit("nominal re-heading", |t| {
            rehead_chain(t, h, &chain, Some(Relation::COMPOUND))
        });
    }
}

fn sweep_flat(w: &mut Work) {
    for h in 1..=w.n() {
        let chain = rightward_chain(&w.tree, h, |_| true);
        if chain.len() < 2 {
            continue;
        }
        let verbal_only = chain.iter().all(|&c| w.tok(c).is_verbal())
            && chain.iter().filter(|&&c| c != h).all(|&c| *w.rel(c) == Relation::FLAT);
        if verbal_only {
            continue;
        }
        w.try_edit("flat re-heading", |t| rehead_chain(t, h, &chain, None));
    }
}

fn is_clausal(rel: &Relation) -> bool {
    [
        Universal::Ccomp,
        Universal::Xcomp,
        Universal::Advcl,
        Universal::Csubj,
        Universal::Conj,
        Universal::Acl,
    ]
    .iter()
    .any(|u| rel.is(*u))
}

/// Would the later token `new_head`, taking over the attachment of
/// `old_head`, become a conj dependent of a token between the two?
fn crosses_into_conj(tree: &DependencyTree, new_head: usize, old_head: usize) -> bool {
    let h = tree.head(old_head);
    tree.deprel(old_head).is(Universal::Conj) && old_head < h && h < new_head
}

/// Resolve a verb pair `first < second` linked by flat/dep/aux.
fn resolve_pair(w: &mut Work, first: usize, second: usize) -> bool {
    let inv = &w.lex.inventory;
    let (f, s) = (w.tok(first), w.tok(second));
    let upper = if w.head(first) == second { second } else { first };
    let ext = w.rel(upper).clone();
    let (mut head, mut dep, mut rel, mut warn) = if inv.is_tam(f, s) {
        (first, second, Relation::AUX, false)
    } else if let Some(rel) = inv.catenative(f, s) {
        (second, first, rel, false)
    } else if is_clausal(&ext) {
        (second, first, Relation::CONJ, false)
    } else {
        (first, second, Relation::AUX, true)
    };
    if head == second && upper == first && crosses_into_conj(&w.tree, second, first) {
        (head, dep, rel, warn) = (first, second, Relation::AUX, true);
    }
    let label = format!("verb pair {}-{}", first, second);
    let changed = w.try_edit(&label, |t| make_head(t, head, dep, rel));
    if changed && warn {
        let note = format!(
            "verb pair {}-{} ({} {}) matches no inventory entry; attached as aux",
            first, second, w.tok(first).form, w.tok(second).form
        );
        w.note(note);
    }
    changed
}

fn verbal_step(w: &mut Work) -> bool {
    for d in 1..=w.n() {
        let h = w.head(d);
        if h == 0 {
            continue;
        }
        let rel = w.rel(d).clone();
        let both_verbal = w.tok(d).is_verbal() && w.tok(h).is_verbal();
        let (first, second) = (d.min(h), d.max(h));
        let changed = if rel == Relation::AUX {
            if d < h {
                if both_verbal {
                    resolve_pair(w, first, second)
                } else {
                    w.try_edit("aux reorder", |t| make_head(t, d, h, Relation::AUX))
                }
            } else if both_verbal {
                match w.lex.inventory.catenative(w.tok(h), w.tok(d)) {
                    Some(_) if crosses_into_conj(&w.tree, d, h) => false,
                    Some(c) => w.try_edit("catenative aux", |t| make_head(t, d, h, c)),
                    None => false,
                }
            } else {
                false
            }
        } else if (rel == Relation::FLAT || rel == Relation::DEP) && both_verbal {
            resolve_pair(w, first, second)
        } else {
            false
        };
        if changed {
            return true;
        }
    }

    // complement clauses of catenative verbs
    for d in 1..w.n() {
        let h = w.head(d);
        if h != d + 1 || !w.tok(d).is_verbal() || !w.tok(h).is_verbal() {
            continue;
        }
        let rel = w.rel(d).clone();
        if ![Relation::ADVCL, Relation::DEP, Relation::CCOMP, Relation::XCOMP].contains(&rel) {
            continue;
        }
        if let Some(c) = w.lex.inventory.catenative(w.tok(d), w.tok(h)) {
            if c != rel && w.try_edit("catenative complement", |t| set_edge(t, d, h, c)) {
                return true;
            }
        }
    }
    false
}

fn sweep_verbal(w: &mut Work) {
    let limit = 4 * w.n() + 4;
    for _ in 0..limit {
        if !verbal_step(w) {
            break;
        }
    }
}

fn sweep_roles(w: &mut Work) {
    // (a) oblique arguments licensed by a frame
    for d in 1..=w.n() {
        let h = w.head(d);
        if h == 0 || *w.rel(d) != Relation::OBL {
            continue;
        }
        let Some(frame) = w.lex.best_frame(&w.tree, h) else {
            let note = format!("obl at token {} left as is: no frame for {}", d, w.tok(h).stem());
            w.note(note);
            continue;
        };
        match frame.slot_for(w.tok(d)) {
            Some(slot) if slot.relation == Relation::OBL_ARG => {
                w.try_edit("obl:arg", |t| set_edge(t, d, h, Relation::OBL_ARG));
            }
            _ => {
                let note = format!(
                    "obl at token {} not licensed by the frame of {}",
                    d,
                    frame.predicate_lemma
                );
                w.note(note);
            }
        }
    }

    // (b) topic-marked subjects
    for (d, rel) in topic_relabels(&w.tree, &w.lex.markers, w.cfg.legacy_topic_nsubj) {
        let h = w.head(d);
        w.try_edit("topic subject", |t| set_edge(t, d, h, rel));
    }

    for d in 1..=w.n() {
        let h = w.head(d);
        if h == 0 {
            continue;
        }
        let class = w.lex.classify(w.tok(d));
        // (c) nominalized clauses as passive subjects
        if *w.rel(d) == Relation::NSUBJ_PASS && class == MarkerClass::Nominalized {
            w.try_edit("csubj:pass", |t| set_edge(t, d, h, Relation::CSUBJ_PASS));
        }
        // (d) vocatives
        if class == MarkerClass::Vocative && *w.rel(d) != Relation::VOCATIVE {
            w.try_edit("vocative", |t| set_edge(t, d, h, Relation::VOCATIVE));
        }
    }
}

fn sweep(pass: PassName, w: &mut Work) {
    match pass {
        PassName::CopDirection => sweep_cop(w),
        PassName::QuotativeMark => sweep_quotative(w),
        PassName::FixedExpressions => sweep_fixed(w),
        PassName::NominalHeadFinality => sweep_nominal(w),
        PassName::FlatLastHead => sweep_flat(w),
        PassName::VerbalRestructure => sweep_verbal(w),
        PassName::CaseRoleRefinement => sweep_roles(w),
    }
}

/// Apply one pass until it reaches its own fixpoint.
pub fn apply_pass(
    pass: PassName,
    tree: &DependencyTree,
    lex: &Lexicon,
    cfg: &ConversionConfig,
) -> (DependencyTree, PassReport) {
    let mut w = Work {
        tree: tree.clone(),
        lex,
        cfg,
        notes: Vec::new(),
    };
    for _ in 0..=tree.len() + 1 {
        let before = edges(&w.tree);
        sweep(pass, &mut w);
        if edges(&w.tree) == before {
            break;
        }
    }

    let mut report = PassReport::new(pass);
    report.notes = w.notes;
    let mut out = w.tree;
    for (old, new) in tree.tokens.iter().zip(out.tokens.iter_mut()) {
        if old.head != new.head || old.deprel != new.deprel {
            new.deps.clear();
            report.changes.push(EdgeChange {
                token: old.index,
                old_head: old.head,
                old_deprel: old.deprel.clone(),
                new_head: new.head,
                new_deprel: new.deprel.clone(),
            });
        }
    }
    (out, report)
}

pub fn pass_cop_direction(tree: &DependencyTree, lex: &Lexicon) -> (DependencyTree, PassReport) {
    apply_pass(PassName::CopDirection, tree, lex, &ConversionConfig::default())
}

pub fn pass_quotative_mark(tree: &DependencyTree, lex: &Lexicon) -> (DependencyTree, PassReport) {
    apply_pass(PassName::QuotativeMark, tree, lex, &ConversionConfig::default())
}

pub fn pass_fixed_expressions(tree: &DependencyTree, lex: &Lexicon) -> (DependencyTree, PassReport) {
    apply_pass(PassName::FixedExpressions, tree, lex, &ConversionConfig::default())
}

pub fn pass_nominal_head_finality(tree: &DependencyTree, lex: &Lexicon) -> (DependencyTree, PassReport) {
    apply_pass(PassName::NominalHeadFinality, tree, lex, &ConversionConfig::default())
}

pub fn pass_flat_last_head(tree: &DependencyTree, lex: &Lexicon) -> (DependencyTree, PassReport) {
    apply_pass(PassName::FlatLastHead, tree, lex, &ConversionConfig::default())
}

pub fn pass_verbal_restructure(tree: &DependencyTree, lex: &Lexicon) -> (DependencyTree, PassReport) {
    apply_pass(PassName::VerbalRestructure, tree, lex, &ConversionConfig::default())
}

pub fn pass_case_role_refinement(tree: &DependencyTree, lex: &Lexicon) -> (DependencyTree, PassReport) {
    apply_pass(PassName::CaseRoleRefinement, tree, lex, &ConversionConfig::default())
}

/// Run the enabled passes in canonical order, repeating rounds until one
/// changes nothing. Returns one merged report per enabled pass.
pub fn run_pipeline(
    tree: &DependencyTree,
    lex: &Lexicon,
    cfg: &ConversionConfig,
) -> Result<(DependencyTree, Vec<PassReport>)> {
    if !tree.is_wellformed() {
        return Err(Error::IllFormed(tree.sentence_id.clone()));
    }
    let mut reports: Vec<PassReport> = cfg.passes.iter().map(|&p| PassReport::new(p)).collect();
    let mut cur = tree.clone();
    for _ in 0..cfg.max_rounds.max(1) {
        let before = edges(&cur);
        for (pass, report) in cfg.passes.iter().zip(reports.iter_mut()) {
            let (next, rep) = apply_pass(*pass, &cur, lex, cfg);
            if !next.is_wellformed() {
                return Err(Error::Engine {
                    pass: pass.to_string(),
                    sentence: tree.sentence_id.clone(),
                });
            }
            report.changes.extend(rep.changes);
            for n in rep.notes {
                if !report.notes.contains(&n) {
                    report.notes.push(n);
                }
            }
            cur = next;
        }
        if edges(&cur) == before {
            return Ok((cur, reports));
        }
    }
    Err(Error::NoFixpoint(tree.sentence_id.clone()))
}
