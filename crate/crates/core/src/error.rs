use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("order must be at least 1 (got {0})")]
    ZeroOrder(usize),
    #[error("order {n} exceeds the supported maximum {max}")]
    OrderTooLarge { n: usize, max: usize },
    #[error("invalid edge pair ({i},{j}) for n = {n}: need 1 <= i < j <= n")]
    InvalidPair { i: usize, j: usize, n: usize },
    #[error("invalid edge pair ({i},{j}): need 1 <= i < j")]
    MalformedPair { i: usize, j: usize },
    #[error("label {k} out of range 1..={max}")]
    LabelOutOfRange { k: u64, max: u64 },
    #[error("vertex {i} out of range 1..={n}")]
    VertexOutOfRange { i: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {{{u},{v}}}")]
    DuplicateEdge { u: usize, v: usize },
    #[error("operation needs at least {min} vertices (got {n})")]
    OrderTooSmall { n: usize, min: usize },
    #[error("labeling is not a bijection onto 1..={expected_max}: {detail}")]
    NotBijective { expected_max: u64, detail: String },
    #[error("missing label for {0}")]
    MissingLabel(String),
    #[error("{edges} edges exceed the search cap {cap}; raise the cap (--cap) to search anyway")]
    CapExceeded { edges: usize, cap: usize },
    #[error("range {lo}..={hi} is invalid or spans more than {limit} orders")]
    RangeTooLarge { lo: usize, hi: usize, limit: usize },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
