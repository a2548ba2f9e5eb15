//! Conversion and validation tooling for Korean Universal Dependencies
//! treebanks.
//!
//! Trees annotated in the GSD/Kaist style (first-noun heads, verb-verb
//! `flat`, undifferentiated `obl`) are rewritten into a head-final scheme
//! by an ordered pipeline of deterministic passes ([`rules`]). The
//! [`validate`] module lints corpora against the same guidelines, and
//! [`sejong`] bridges Sejong-style phrase labels to UD relations.

pub mod cli;
pub mod compare;
pub mod conllu;
pub mod diag;
pub mod error;
pub mod lexicon;
pub mod relation;
pub mod rules;
pub mod sejong;
pub mod synth;
pub mod validate;

pub use conllu::{check_wellformed, parse_document, serialize_document, DependencyTree, Token};
pub use diag::{Code, Diagnostic, Severity};
pub use error::{Error, Result};
pub use lexicon::Lexicon;
pub use relation::{Relation, Subtype, Universal};
