//! Findings shared by the validator, the well-formedness check and the
//! Sejong/frame audits.

use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Severity {
    Info,
    Warning,
    Error,
}

impl Severity {
    pub fn as_str(self) -> &'static str {
        match self {
            Severity::Info => "info",
            Severity::Warning => "warning",
            Severity::Error => "error",
        }
    }
}

impl fmt::Display for Severity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Severity {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "info" => Ok(Severity::Info),
            "warning" => Ok(Severity::Warning),
            "error" => Ok(Severity::Error),
            _ => Err(format!("unknown severity `{}`", s)),
        }
    }
}

/// Registered rule codes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Code {
    TreeMultiroot,
    TreeCycle,
    TreeOrphan,
    HeadfinalFlat,
    HeadfinalCompound,
    AuxOrder,
    FixedOrder,
    NoFlatVerb,
    OblArgUnbacked,
    TopicDislocated,
    CopDirection,
    MarkQuotative,
    SubtypeIllegal,
    SejongLeftHead,
    FrameMismatch,
}

impl Code {
    /// The guideline rules run by the validator, in reporting order.
    pub const GUIDELINES: [Code; 13] = [
        Code::TreeMultiroot,
        Code::TreeCycle,
        Code::TreeOrphan,
        Code::HeadfinalFlat,
        Code::HeadfinalCompound,
        Code::AuxOrder,
        Code::FixedOrder,
        Code::NoFlatVerb,
        Code::OblArgUnbacked,
        Code::TopicDislocated,
        Code::CopDirection,
        Code::MarkQuotative,
        Code::SubtypeIllegal,
    ];

    pub const ALL: [Code; 15] = [
        Code::TreeMultiroot,
        Code::TreeCycle,
        Code::TreeOrphan,
        Code::HeadfinalFlat,
        Code::HeadfinalCompound,
        Code::AuxOrder,
        Code::FixedOrder,
        Code::NoFlatVerb,
        Code::OblArgUnbacked,
        Code::TopicDislocated,
        Code::CopDirection,
        Code::MarkQuotative,
        Code::SubtypeIllegal,
        Code::SejongLeftHead,
        Code::FrameMismatch,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Code::TreeMultiroot => "TREE-MULTIROOT",
            Code::TreeCycle => "TREE-CYCLE",
            Code::TreeOrphan => "TREE-ORPHAN",
            Code::HeadfinalFlat => "HEADFINAL-FLAT",
            Code::HeadfinalCompound => "HEADFINAL-COMPOUND",
            Code::AuxOrder => "AUX-ORDER",
            Code::FixedOrder => "FIXED-ORDER",
            Code::NoFlatVerb => "NO-FLAT-VERB",
            Code::OblArgUnbacked => "OBL-ARG-UNBACKED",
            Code::TopicDislocated => "TOPIC-DISLOCATED",
            Code::CopDirection => "COP-DIRECTION",
            Code::MarkQuotative => "MARK-QUOTATIVE",
            Code::SubtypeIllegal => "SUBTYPE-ILLEGAL",
            Code::SejongLeftHead => "SEJONG-LEFT-HEAD",
            Code::FrameMismatch => "FRAME-MISMATCH",
        }
    }

    pub fn default_severity(self) -> Severity {
        match self {
            Code::OblArgUnbacked | Code::TopicDislocated => Severity::Warning,
            _ => Severity::Error,
        }
    }

    /// One-line rationale naming the guideline behind the rule.
    pub fn rationale(self) -> &'static str {
        match self {
            Code::TreeMultiroot => "a sentence has exactly one root",
            Code::TreeCycle => "the head relation is acyclic",
            Code::TreeOrphan => "every token hangs off an existing head",
            Code::HeadfinalFlat => "flat attaches to the last word of the expression",
            Code::HeadfinalCompound => "the last noun of a compound is its head",
            Code::AuxOrder => "a TAM auxiliary follows the predicate it depends on",
            Code::FixedOrder => "fixed expressions hang off their first word",
            Code::NoFlatVerb => "verb sequences are aux, xcomp or conj, never flat",
            Code::OblArgUnbacked => "obl:arg marks oblique arguments licensed by a frame",
            Code::TopicDislocated => "the sole topic-marked subject of a clause is dislocated:nsubj",
            Code::CopDirection => "a split-off copula attaches to its nominal predicate",
            Code::MarkQuotative => "the quotative particle subordinating a clause is mark",
            Code::SubtypeIllegal => "only relations of the revised Korean inventory are used",
            Code::SejongLeftHead => "Sejong-style dependencies point right to left",
            Code::FrameMismatch => "argument relations agree with the predicate's frame",
        }
    }
}

impl fmt::Display for Code {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Code {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Code::ALL
            .iter()
            .copied()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| format!("unknown rule code `{}`", s))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagnostic {
    pub code: Code,
    pub severity: Severity,
    pub sentence_id: String,
    pub token_indices: Vec<usize>,
    pub message: String,
}

impl Diagnostic {
    pub fn new(
        code: Code,
        sentence_id: impl Into<String>,
        token_indices: Vec<usize>,
        message: impl Into<String>,
    ) -> Self {
        Diagnostic {
            code,
            severity: code.default_severity(),
            sentence_id: sentence_id.into(),
            token_indices,
            message: message.into(),
        }
    }

    fn tokens_field(&self) -> String {
        if self.token_indices.is_empty() {
            "-".to_owned()
        } else {
            self.token_indices
                .iter()
                .map(usize::to_string)
                .collect::<Vec<_>>()
                .join(",")
        }
    }

    /// Tab-separated record: sentence id, code, severity, tokens, message.
    pub fn to_record(&self) -> String {
        format!(
            "{}\t{}\t{}\t{}\t{}",
            self.sentence_id,
            self.code,
            self.severity,
            self.tokens_field(),
            self.message.replace(['\t', '\n'], " ")
        )
    }

    pub fn to_text(&self) -> String {
        format!(
            "{}: {} [{}] tokens {}: {}",
            self.sentence_id,
            self.severity,
            self.code,
            self.tokens_field(),
            self.message
        )
    }

    /// Sort key for the stable order: first token, then code.
    pub(crate) fn order_key(&self) -> (usize, Code, Vec<usize>) {
        (
            self.token_indices.first().copied().unwrap_or(0),
            self.code,
            self.token_indices.clone(),
        )
    }
}

pub fn sort_diagnostics(diags: &mut [Diagnostic]) {
    diags.sort_by_key(|d| d.order_key());
}
