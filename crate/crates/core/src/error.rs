use std::io;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown dependency relation `{0}`")]
pub struct LabelError(pub String);

/// What went wrong on a CoNLL-U line.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("expected 10 tab-separated columns, found {0}")]
    ColumnCount(usize),
    #[error("invalid token index `{0}`")]
    BadIndex(String),
    #[error("multiword token ranges are not supported (`{0}`)")]
    MultiwordToken(String),
    #[error("empty nodes are not supported (`{0}`)")]
    EmptyNode(String),
    #[error("duplicate token index {0}")]
    DuplicateIndex(usize),
    #[error("token index {found} out of sequence, expected {expected}")]
    IndexOutOfSequence { expected: usize, found: usize },
    #[error("invalid head `{0}`")]
    BadHead(String),
    #[error("head {head} out of range for a sentence of {len} tokens")]
    HeadOutOfRange { head: usize, len: usize },
    #[error("token {0} is its own head")]
    SelfHead(usize),
    #[error("malformed XPOS `{0}`")]
    BadXpos(String),
    #[error(transparent)]
    Label(#[from] LabelError),
    #[error("comment line inside a token block")]
    MisplacedComment,
    #[error("token {0}: head 0 must carry `root` and `root` must attach to 0")]
    RootLabel(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("sentence `{0}` is not a well-formed tree")]
    IllFormed(String),
    #[error("{path}: {message}")]
    Lexicon { path: String, message: String },
    #[error("line {line}: {message}")]
    Format { line: usize, message: String },
    #[error("{path}:{line}: {message}")]
    InFile {
        path: String,
        line: usize,
        message: String,
    },
    #[error("pass `{pass}` produced an ill-formed tree for sentence `{sentence}`")]
    Engine { pass: String, sentence: String },
    #[error("conversion of sentence `{0}` did not reach a fixpoint")]
    NoFixpoint(String),
    #[error("{0}")]
    Usage(String),
    #[error("unknown pass `{0}`")]
    UnknownPass(String),
    #[error("unknown Sejong label `{label}` on token {token} of sentence `{sentence}`")]
    UnknownSejongLabel {
        sentence: String,
        token: usize,
        label: String,
    },
    #[error("corpora diverge at sentence {index} (`{sentence}`): {reason}")]
    Misaligned {
        index: usize,
        sentence: String,
        reason: String,
    },
    #[error(transparent)]
    Io(#[from] io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
