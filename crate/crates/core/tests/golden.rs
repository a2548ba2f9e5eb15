use std::fs;
use std::path::PathBuf;

use kud::rules::{run_pipeline, ConversionConfig};
use kud::{parse_document, serialize_document, DependencyTree, Lexicon};

fn fixture(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name);
    fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {}", path.display(), e))
}

fn convert(trees: &[DependencyTree]) -> Vec<DependencyTree> {
    let lex = Lexicon::bundled();
    let cfg = ConversionConfig::default();
    trees
        .iter()
        .map(|t| run_pipeline(t, &lex, &cfg).unwrap().0)
        .collect()
}

fn edges(tree: &DependencyTree) -> Vec<(usize, usize, String)> {
    tree.tokens
        .iter()
        .map(|t| (t.index, t.head, t.deprel.to_string()))
        .collect()
}

#[test]
fn catenative_converts_byte_exact() {
    let top = parse_document(&fixture("catenative.gsd.conllu")).unwrap();
    let out = serialize_document(&convert(&top)).unwrap();
    assert_eq!(out, fixture("catenative.revised.conllu"));
}

#[test]
fn example_pairs_convert_edge_exact() {
    let top = parse_document(&fixture("examples.gsd.conllu")).unwrap();
    let bottom = parse_document(&fixture("examples.revised.conllu")).unwrap();
    assert_eq!(top.len(), 11);
    let converted = convert(&top);
    for (got, want) in converted.iter().zip(&bottom) {
        assert_eq!(got.sentence_id, want.sentence_id);
        assert_eq!(edges(got), edges(want), "sentence {}", want.sentence_id);
    }
}

#[test]
fn bottoms_are_fixpoints() {
    let bottom = parse_document(&fixture("examples.revised.conllu")).unwrap();
    let lex = Lexicon::bundled();
    let cfg = ConversionConfig::default();
    for t in &bottom {
        let (out, reports) = run_pipeline(t, &lex, &cfg).unwrap();
        assert_eq!(&out, t, "sentence {}", t.sentence_id);
        assert!(reports.iter().all(|r| r.is_empty()), "sentence {}", t.sentence_id);
    }
}
