use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("width mismatch in {context}: expected {expected}, found {found}")]
    Width {
        context: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("budget exceeded: {what} is {requested}, limit is {limit}")]
    Budget {
        what: &'static str,
        requested: u128,
        limit: u128,
    },
    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },
    #[error("invalid circuit: {0}")]
    Validation(String),
    #[error("not a graph homomorphism: {0}")]
    Hom(String),
    #[error("unknown {kind} `{name}`")]
    Lookup { kind: &'static str, name: String },
    #[error("path has {length} steps but at most {limit} are allowed")]
    Length { length: usize, limit: usize },
    #[error(
        "graph with {vertices} vertices and {edges} edges exceeds capacity \
         of {max_vertices} vertices and {max_edges} edges"
    )]
    Capacity {
        vertices: usize,
        edges: usize,
        max_vertices: usize,
        max_edges: usize,
    },
}

impl Error {
    pub(crate) fn width(context: &'static str, expected: usize, found: usize) -> Self {
        Error::Width {
            context,
            expected,
            found,
        }
    }

    pub(crate) fn parse(location: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            location: location.into(),
            message: message.into(),
        }
    }
}
