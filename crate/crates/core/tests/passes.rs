use std::fs;
use std::path::PathBuf;

use proptest::prelude::*;

use kud::compare::{diff_corpora, CorpusStats};
use kud::lexicon::{match_fixed, FixedExpression};
use kud::rules::{
    pass_case_role_refinement, pass_cop_direction, pass_fixed_expressions, pass_flat_last_head,
    pass_nominal_head_finality, pass_quotative_mark, pass_verbal_restructure, run_pipeline, ConversionConfig,
};
use kud::sejong::{audit_with_frames, parse_sejong, MappingTable};
use kud::{parse_document, DependencyTree, Lexicon, Relation, Token};

fn fixture(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name);
    fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {}", path.display(), e))
}

fn sentence(file: &str, id: &str) -> DependencyTree {
    parse_document(&fixture(file))
        .unwrap()
        .into_iter()
        .find(|t| t.sentence_id == id)
        .unwrap_or_else(|| panic!("no sentence {}", id))
}

fn rel(s: &str) -> Relation {
    s.parse().expect("relation")
}

/// Rows of (form, lemma, UPOS, XPOS, head, deprel).
fn tree(rows: &[(&str, &str, &str, &str, usize, &str)]) -> DependencyTree {
    let tokens = rows
        .iter()
        .enumerate()
        .map(|(k, &(form, lemma, upos, xpos, head, deprel))| Token::new(k + 1, form, lemma, upos, xpos, head, rel(deprel)))
        .collect();
    DependencyTree::new("t", tokens)
}

/// Asserts (head -> dependent, relation) edges.
fn assert_edges(t: &DependencyTree, edges: &[(usize, usize, &str)]) {
    for &(h, d, r) in edges {
        assert_eq!(
            (t.head(d), t.deprel(d).to_string()),
            (h, r.to_owned()),
            "edge into token {} of `{}`",
            d,
            t.sentence_id
        );
    }
}

fn frame_lexicon() -> Lexicon {
    Lexicon::from_text(&fixture("frames.txt")).unwrap().0
}

#[test]
fn cop_flips_and_is_idempotent() {
    let lex = Lexicon::bundled();
    let top = sentence("examples.gsd.conllu", "cop");
    let (once, report) = pass_cop_direction(&top, &lex);
    assert_edges(&once, &[(2, 4, "cop"), (5, 2, "acl")]);
    assert!(!report.is_empty());
    let (twice, report) = pass_cop_direction(&once, &lex);
    assert_eq!(twice, once);
    assert!(report.is_empty());

    let plain = sentence("examples.gsd.conllu", "yugoslav");
    assert_eq!(pass_cop_direction(&plain, &lex).0, plain);
}

#[test]
fn quotative_relabels_only() {
    let lex = Lexicon::bundled();
    let top = sentence("examples.gsd.conllu", "quotative");
    let (out, _) = pass_quotative_mark(&top, &lex);
    assert_edges(&out, &[(2, 5, "mark"), (6, 2, "ccomp"), (2, 3, "aux")]);

    // a case particle on a nominal head is a true postposition
    let nominal = tree(&[
        ("책", "책", "NOUN", "NNG", 3, "obl"),
        ("고", "고", "ADP", "JKQ", 1, "case"),
        ("읽었다", "읽+었+다", "VERB", "VV+EP+EF", 0, "root"),
    ]);
    assert_eq!(pass_quotative_mark(&nominal, &lex).0, nominal);
}

#[test]
fn fixed_expressions_attach_to_host() {
    let lex = Lexicon::bundled();
    let (out, _) = pass_fixed_expressions(&sentence("examples.gsd.conllu", "ppun-anila"), &lex);
    assert_edges(&out, &[(2, 3, "case"), (3, 4, "fixed")]);

    let (out, _) = pass_fixed_expressions(&sentence("examples.gsd.conllu", "guseong-wonso"), &lex);
    assert_edges(&out, &[(4, 5, "fixed")]);

    let none = sentence("examples.gsd.conllu", "crater");
    assert_eq!(pass_fixed_expressions(&none, &lex).0, none);
}

#[test]
fn nominal_chains_head_on_last_noun() {
    let lex = Lexicon::bundled();
    let yugoslav = tree(&[
        ("당시", "당시", "NOUN", "NNG", 5, "obl"),
        ("유고슬라비안", "유고슬라비안", "PROPN", "NNP", 5, "nsubj"),
        ("공화국은", "공화국+은", "NOUN", "NNG+JX", 2, "flat"),
        ("선거를", "선거+를", "NOUN", "NNG+JKO", 5, "obj"),
        ("실시했다", "실시+하+었+다", "VERB", "NNG+XSV+EP+EF", 0, "root"),
    ]);
    let (out, _) = pass_nominal_head_finality(&yugoslav, &lex);
    assert_edges(&out, &[(5, 3, "nsubj"), (3, 2, "compound")]);

    let (out, _) = pass_nominal_head_finality(&sentence("examples.gsd.conllu", "crater"), &lex);
    assert_edges(&out, &[(4, 2, "obl"), (2, 1, "compound")]);

    let single = sentence("examples.gsd.conllu", "jutaegsijang");
    assert_eq!(pass_nominal_head_finality(&single, &lex).0, single);
}

#[test]
fn flat_chains_head_on_last_token() {
    let lex = Lexicon::bundled();
    let (out, _) = pass_flat_last_head(&sentence("examples.gsd.conllu", "date"), &lex);
    assert_edges(&out, &[(3, 1, "flat"), (3, 2, "flat"), (4, 3, "obl")]);

    let name = tree(&[
        ("김", "김", "PROPN", "NNP", 2, "flat"),
        ("철수가", "철수+가", "PROPN", "NNP+JKS", 3, "nsubj"),
        ("왔다", "오+았+다", "VERB", "VV+EP+EF", 0, "root"),
    ]);
    assert_eq!(pass_flat_last_head(&name, &lex).0, name);
}

#[test]
fn verbal_pairs_restructure() {
    let lex = Lexicon::bundled();
    let (nominal, _) = pass_nominal_head_finality(&sentence("catenative.gsd.conllu", "bogo-sipda"), &lex);
    let (out, _) = pass_verbal_restructure(&nominal, &lex);
    assert_edges(&out, &[(0, 5, "root"), (5, 4, "xcomp"), (4, 3, "obj"), (3, 2, "compound")]);

    let (out, _) = pass_verbal_restructure(&sentence("examples.gsd.conllu", "ccomp-serial"), &lex);
    assert_edges(&out, &[(4, 3, "ccomp"), (3, 2, "conj")]);

    let aux = tree(&[
        ("소식을", "소식+을", "NOUN", "NNG+JKO", 3, "obj"),
        ("빨리", "빨리", "ADV", "MAG", 3, "advmod"),
        ("전해야", "전하+어야", "VERB", "VV+EC", 0, "root"),
        ("한다", "하+ㄴ다", "VERB", "VV+EF", 3, "aux"),
    ]);
    let (out, report) = pass_verbal_restructure(&aux, &lex);
    assert_eq!(out, aux);
    assert!(report.is_empty());

    let (fixed, _) = pass_fixed_expressions(&sentence("examples.gsd.conllu", "deus"), &lex);
    let (out, _) = pass_verbal_restructure(&fixed, &lex);
    assert_edges(&out, &[(4, 3, "xcomp"), (3, 2, "conj"), (4, 5, "fixed")]);
}

#[test]
fn crossing_verb_pair_falls_back_to_aux() {
    // making 3 the head would hang it leftward on 2 as conj
    let t = tree(&[
        ("먹고", "먹+고", "VERB", "VV+EC", 2, "conj"),
        ("먹고", "먹+고", "VERB", "VV+EC", 0, "root"),
        ("먹고", "먹+고", "VERB", "VV+EC", 1, "dep"),
    ]);
    let (out, report) = pass_verbal_restructure(&t, &Lexicon::bundled());
    assert_edges(&out, &[(2, 1, "conj"), (1, 3, "aux")]);
    assert!(!report.notes.is_empty());
}

#[test]
fn roles_from_frames_and_markers() {
    let lex = Lexicon::bundled();
    let (out, _) = pass_case_role_refinement(&sentence("examples.gsd.conllu", "jutaegsijang"), &lex);
    assert_edges(&out, &[(3, 2, "obl:arg")]);

    let (out, _) = pass_case_role_refinement(&sentence("examples.gsd.conllu", "csubj-pass"), &lex);
    assert_edges(&out, &[(4, 3, "csubj:pass")]);

    // without frames the oblique stays, with a note
    let top = sentence("examples.gsd.conllu", "jutaegsijang");
    let (out, report) = pass_case_role_refinement(&top, &Lexicon::seeded());
    assert_edges(&out, &[(3, 2, "obl")]);
    assert!(!report.notes.is_empty());

    let mut legacy = sentence("frames.conllu", "frames-gyeonje");
    legacy.token_mut(2).deprel = rel("nsubj");
    legacy.token_mut(5).deprel = rel("obl");
    let (out, _) = pass_case_role_refinement(&legacy, &frame_lexicon());
    assert_edges(&out, &[(6, 2, "dislocated:nsubj"), (6, 5, "obl:arg")]);
}

#[test]
fn revised_trees_are_fixpoints_with_empty_reports() {
    let lex = Lexicon::bundled();
    let cfg = ConversionConfig::default();
    for t in parse_document(&fixture("examples.revised.conllu")).unwrap() {
        let (out, reports) = run_pipeline(&t, &lex, &cfg).unwrap();
        assert_eq!(out, t);
        assert!(reports.iter().all(|r| r.is_empty()), "{}", t.sentence_id);
    }
}

#[test]
fn catenative_children() {
    let t = sentence("catenative.revised.conllu", "bogo-sipda");
    assert_eq!(t.children(5).unwrap(), vec![4]);
    assert_eq!(t.children(4).unwrap(), vec![1, 3]);
}

#[test]
fn three_frame_file_recount() {
    let lex = frame_lexicon();
    let text = fixture("frames.txt");
    let (expected, _) = kud::lexicon::parse_frame_file(&text).unwrap();
    assert_eq!(expected.len(), 3);
    let mut found = Vec::new();
    for lemma in ["거래시키다", "묻어나다", "견제당하다"] {
        found.extend(lex.lookup_lemma(lemma).into_iter().cloned());
    }
    assert_eq!(found, expected);

    let mudeonada = lex.lookup_lemma("묻어나다");
    assert_eq!(mudeonada.len(), 1);
    let rels: Vec<String> = mudeonada[0].slots.iter().map(|s| s.relation.to_string()).collect();
    assert_eq!(rels, ["nsubj", "obl:arg"]);
}

#[test]
fn frame_audit_examples() {
    let lex = frame_lexicon();
    assert!(audit_with_frames(&sentence("frames.conllu", "frames-geolae"), &lex).is_empty());
    let mutated = sentence("frames_mutated.conllu", "frames-mudeonada");
    let found = audit_with_frames(&mutated, &lex);
    assert_eq!(found.len(), 1);
    assert_eq!(found[0].token_indices, vec![3]);
}

#[test]
fn corpus_statistics() {
    let mut corpus = parse_document(&fixture("catenative.revised.conllu")).unwrap();
    corpus.extend(parse_document(&fixture("examples.revised.conllu")).unwrap());
    assert_eq!(CorpusStats::from_trees(&corpus).sentences, 12);

    let (sejong, _) = parse_sejong(&fixture("sejong.conllu"), &MappingTable::default(), false).unwrap();
    let stats = CorpusStats::from_trees(&sejong);
    assert_eq!((stats.rightward, stats.leftward), (7, 0));
    assert_eq!(stats.rightward_ratio(), 100.0);
}

const FORMS: &[&str] = &["뿐", "아니라", "따라", "듯", "수", "있다"];

proptest! {
    #[test]
    fn quotative_pass_never_moves_heads(seed in any::<u64>(), len in 1usize..15) {
        let t = kud::synth::Generator::new(seed).tree("q", len);
        let (out, _) = pass_quotative_mark(&t, &Lexicon::bundled());
        for (a, b) in t.tokens.iter().zip(&out.tokens) {
            prop_assert_eq!(a.head, b.head);
            if a.deprel != b.deprel {
                prop_assert_eq!((a.deprel.to_string(), b.deprel.to_string()), ("case".to_owned(), "mark".to_owned()));
            }
        }
    }

    #[test]
    fn flat_chains_leave_one_exit_at_the_end(
        len in 2usize..=6,
        picks in proptest::collection::vec(any::<proptest::sample::Index>(), 6),
        names in any::<bool>(),
    ) {
        // chain tokens 1..=len linked by flat, each to an earlier chain token
        let mut rows = Vec::new();
        for i in 1..=len {
            let head = if i == 1 { len + 1 } else { 1 + picks[i - 1].index(i - 1) };
            let deprel = if i == 1 { "obl" } else { "flat" };
            let (form, xpos, upos) = if names { ("김", "NNP", "PROPN") } else { ("1월", "SN+NNB", "NUM") };
            rows.push((form, form, upos, xpos, head, deprel));
        }
        rows.push(("왔다", "오+았+다", "VERB", "VV+EP+EF", 0, "root"));
        let t = tree(&rows);
        let lex = Lexicon::bundled();
        let (t, _) = pass_nominal_head_finality(&t, &lex);
        let (out, _) = pass_flat_last_head(&t, &lex);
        let exits: Vec<usize> = (1..=len).filter(|&i| out.head(i) > len).collect();
        prop_assert_eq!(exits, vec![len]);
    }

    #[test]
    fn longest_fixed_match_wins(
        words in proptest::collection::vec(0..FORMS.len(), 1..8),
        expressions in proptest::collection::vec(proptest::collection::vec(0..FORMS.len(), 1..4), 1..6),
    ) {
        let rows: Vec<_> = words
            .iter()
            .enumerate()
            .map(|(k, &w)| (FORMS[w], FORMS[w], "NOUN", "NNG", if k == 0 { 0 } else { 1 }, if k == 0 { "root" } else { "dep" }))
            .collect();
        let t = tree(&rows);
        let mut lex = Lexicon::seeded();
        lex.inventory.fixed_expressions = expressions
            .iter()
            .map(|e| FixedExpression {
                host: None,
                forms: e.iter().map(|&w| FORMS[w].to_owned()).collect(),
                relation: Relation::FIXED,
            })
            .collect();
        for start in 1..=words.len() {
            // every expression whose forms equal the words from `start`
            let matching: Vec<(usize, usize)> = expressions
                .iter()
                .enumerate()
                .filter(|(_, e)| start - 1 + e.len() <= words.len() && words[start - 1..start - 1 + e.len()] == e[..])
                .map(|(i, e)| (i, e.len()))
                .collect();
            let expected = matching.iter().map(|&(_, n)| n).max().map(|n| {
                let i = matching.iter().find(|&&(_, m)| m == n).unwrap().0;
                (start, start + n - 1, i)
            });
            let found = match_fixed(&lex.inventory, &t, start).map(|m| (m.start, m.end, m.expression));
            prop_assert_eq!(found, expected);
        }
    }

    #[test]
    fn agreement_matches_recount(seed in any::<u64>(), len in 1usize..12, flips in proptest::collection::vec(any::<bool>(), 12)) {
        let mut generator = kud::synth::Generator::new(seed);
        let a = generator.tree("p", len);
        let mut b = generator.tree("p", len);
        // same forms, independently drawn edges, some copied back
        for (k, t) in b.tokens.iter_mut().enumerate() {
            t.form = a.tokens[k].form.clone();
            if flips[k] {
                t.head = a.tokens[k].head;
                t.deprel = a.tokens[k].deprel.clone();
            }
        }
        let report = diff_corpora(std::slice::from_ref(&a), std::slice::from_ref(&b)).unwrap();
        let heads = a.tokens.iter().zip(&b.tokens).filter(|(x, y)| x.head == y.head).count();
        let edges = a.tokens.iter().zip(&b.tokens).filter(|(x, y)| x.head == y.head && x.deprel == y.deprel).count();
        prop_assert!((report.uas() - 100.0 * heads as f64 / len as f64).abs() < 1e-9);
        prop_assert!((report.las() - 100.0 * edges as f64 / len as f64).abs() < 1e-9);
        prop_assert_eq!(report.changes.len(), len - edges);
    }
}
