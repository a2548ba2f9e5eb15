//! Seeded generator of random well-formed trees over a small Korean
//! vocabulary, for fuzzing and throughput runs.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::conllu::{DependencyTree, Token};
use crate::relation::Relation;

/// (form, lemma, UPOS, XPOS)
const VOCABULARY: &[(&str, &str, &str, &str)] = &[
    ("나는", "나+는", "PRON", "NP+JX"),
    ("장동건", "장동건", "PROPN", "NNP"),
    ("사진을", "사진+을", "NOUN", "NNG+JKO"),
    ("보고", "보+고", "VERB", "VV+EC"),
    ("싶다", "싶+다", "AUX", "VX+EF"),
    ("공화국은", "공화국+은", "NOUN", "NNG+JX"),
    ("중앙에", "중앙+에", "NOUN", "NNG+JKB"),
    ("사람들에게", "사람+들+에게", "NOUN", "NNG+XSN+JKB"),
    ("뿐", "뿐", "NOUN", "NNB"),
    ("아니라", "아니+라", "ADJ", "VCN+EC"),
    ("1941년", "1941+년", "NUM", "SN+NNB"),
    ("1월", "1+월", "NUM", "SN+NNB"),
    ("원소에", "원소+에", "NOUN", "NNG+JKB"),
    ("따라", "따르+아", "VERB", "VV+EC"),
    ("'", "'", "PUNCT", "SS"),
    (".", ".", "PUNCT", "SF"),
    ("이라는", "이+라는", "AUX", "VCP+ETM"),
    ("고", "고", "ADP", "JKQ"),
    ("늘고", "늘+고", "VERB", "VV+EC"),
    ("있다", "있+다", "AUX", "VX+EF"),
    ("전해야", "전하+어야", "VERB", "VV+EC"),
    ("한다", "하+ㄴ다", "VERB", "VV+EF"),
    ("가라고", "가+라고", "VERB", "VV+EC"),
    ("했어요", "하+었+어요", "VERB", "VV+EP+EF"),
    ("드시면", "들+시+면", "VERB", "VV+EP+EC"),
    ("좋을", "좋+을", "ADJ", "VA+ETM"),
    ("듯", "듯", "NOUN", "NNB"),
    ("두뇌임이", "두뇌+이+ㅁ+이", "NOUN", "NNG+VCP+XSN+JKS"),
    ("주택시장에", "주택시장+에", "NOUN", "NNG+JKB"),
    ("좋지", "좋+지", "ADJ", "VA+EC"),
    ("철수야", "철수+야", "PROPN", "NNP+JKV"),
    ("코가", "코+가", "NOUN", "NNG+JKS"),
    ("길다", "길+다", "ADJ", "VA+EF"),
    ("서울", "서울", "PROPN", "NNP"),
    ("회의", "회의", "NOUN", "NNG"),
    ("그", "그", "DET", "MM"),
    ("일찍", "일찍", "ADV", "MAG"),
];

fn relations() -> Vec<Relation> {
    [
        "nsubj", "obj", "obl", "flat", "compound", "aux", "fixed", "dep", "cop", "case", "advcl", "ccomp",
        "xcomp", "conj", "nmod:poss", "det", "amod", "advmod", "punct", "mark", "nsubj:pass", "dislocated",
        "obl:arg", "acl", "iobj", "vocative",
    ]
    .iter()
    .map(|s| s.parse().expect("known relation"))
    .collect()
}

pub struct Generator {
    rng: ChaCha8Rng,
    relations: Vec<Relation>,
}

impl Generator {
    pub fn new(seed: u64) -> Self {
        Generator {
            rng: ChaCha8Rng::seed_from_u64(seed),
            relations: relations(),
        }
    }

    /// A random well-formed tree of `len` tokens (at least one).
    pub fn tree(&mut self, sentence_id: &str, len: usize) -> DependencyTree {
        let len = len.max(1);
        // attach nodes in a random order, each to an earlier-placed node
        let mut order: Vec<usize> = (1..=len).collect();
        order.shuffle(&mut self.rng);
        let mut heads = vec![0; len + 1];
        for k in 1..len {
            heads[order[k]] = order[self.rng.gen_range(0..k)];
        }
        let tokens = (1..=len)
            .map(|i| {
                let (form, lemma, upos, xpos) = *VOCABULARY.choose(&mut self.rng).expect("vocabulary");
                let deprel = if heads[i] == 0 {
                    Relation::ROOT
                } else {
                    self.relations.choose(&mut self.rng).expect("relations").clone()
                };
                let mut t = Token::new(i, form, lemma, upos, xpos, heads[i], deprel);
                if self.rng.gen_bool(0.1) {
                    t.misc = "SpaceAfter=No".into();
                }
                t
            })
            .collect();
        DependencyTree::new(sentence_id, tokens)
    }

    /// `sentences` trees with lengths drawn from `min_len..=max_len`.
    pub fn corpus(&mut self, sentences: usize, min_len: usize, max_len: usize) -> Vec<DependencyTree> {
        (1..=sentences)
            .map(|i| {
                let len = self.rng.gen_range(min_len.max(1)..=max_len.max(min_len).max(1));
                self.tree(&format!("synth-{}", i), len)
            })
            .collect()
    }
}
