use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph order {0} outside supported range 1..=62")]
    OrderOutOfRange(usize),
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("vertex index {index} out of range for order {order}")]
    IndexOutOfRange { index: usize, order: usize },
    #[error("vertex set must not be empty")]
    EmptySet,
    #[error("vertex set of order {set} used with graph of order {graph}")]
    OrderMismatch { set: usize, graph: usize },
    #[error("invalid graph6 string: {0}")]
    Graph6(String),
    #[error("{op} supports order at most {max}, got {order}")]
    OrderBound {
        op: &'static str,
        order: usize,
        max: usize,
    },
    #[error("{{{0},{1}}} is not an edge")]
    NotAnEdge(usize, usize),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("invalid parameters: {0}")]
    Params(String),
}

pub(crate) fn check_bound(op: &'static str, order: usize, max: usize) -> Result<()> {
    if order > max {
        Err(Error::OrderBound { op, order, max })
    } else {
        Ok(())
    }
}
