use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("graph must have at least one vertex")]
    EmptyGraph,
    #[error("order {order} exceeds the cap of {cap}")]
    OrderTooLarge { order: usize, cap: usize },
    #[error("{solver} is limited to order {cap}, got {order}")]
    SearchCap {
        solver: &'static str,
        order: usize,
        cap: usize,
    },
    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("malformed graph6: {0}")]
    Graph6(String),
    #[error("total domination is undefined: vertex {0} is isolated")]
    IsolatedVertex(usize),
    #[error("sets must be nonempty and disjoint")]
    BadSetPair,
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("vertex {0} appears in more than one block")]
    RepeatedVertex(usize),
    #[error("catalog: {0}")]
    Catalog(String),
    #[error("line {line}: {source}")]
    AtLine {
        line: usize,
        #[source]
        source: Box<Error>,
    },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn at_line(self, line: usize) -> Error {
        Error::AtLine {
            line,
            source: Box::new(self),
        }
    }

    /// The innermost error, skipping line annotations.
    pub fn root(&self) -> &Error {
        match self {
            Error::AtLine { source, .. } => source.root(),
            other => other,
        }
    }

    /// True for errors caused by an order above a solver or graph cap.
    pub fn is_cap(&self) -> bool {
        matches!(self.root(), Error::SearchCap { .. } | Error::OrderTooLarge { .. })
    }
}
