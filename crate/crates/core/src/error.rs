use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },

    #[error("not a permutation of 1..{n}: {images:?}")]
    InvalidPermutation { n: usize, images: Vec<usize> },

    #[error("rank {0} outside the supported range 1..={max}", max = crate::MAX_RANK)]
    RankOutOfRange(usize),

    #[error("root {root} outside the allowed range {min}..={max}")]
    RootOutOfRange { root: usize, min: usize, max: usize },

    #[error("invalid grassmannian Gr({k},{n})")]
    InvalidGrassmannian { k: usize, n: usize },

    #[error("parts are not weakly decreasing: {0:?}")]
    NotAPartition(Vec<usize>),

    #[error("partition ({partition}) does not fit the {rows}x{cols} box")]
    OutOfBox {
        partition: String,
        rows: usize,
        cols: usize,
    },

    #[error("permutation {perm} is not a minimal coset representative for roots {{{roots}}}")]
    NotMinimalRepresentative { perm: String, roots: String },

    #[error("subset element {element} outside 1..={n}")]
    InvalidSubset { element: usize, n: usize },

    #[error("degree {d} outside 0..={max}")]
    DegreeOutOfRange { d: usize, max: usize },

    #[error("zero class has no minimal q-degree")]
    ZeroClass,

    #[error("flag chain violation: {0}")]
    ChainViolation(String),

    #[error("G-chain does not define a partition: {0:?}")]
    NonPartition(Vec<i64>),

    #[error("cannot start worker pool: {0}")]
    WorkerPool(String),

    #[error("cannot parse {what} from {input:?}")]
    Parse { what: &'static str, input: String },
}

impl Error {
    pub(crate) fn parse(what: &'static str, input: &str) -> Self {
        Error::Parse {
            what,
            input: input.to_owned(),
        }
    }
}

/// Parses a comma-separated list of positive integers, tolerating
/// surrounding parentheses and blanks. The empty string is the empty list.
pub(crate) fn parse_list(what: &'static str, input: &str) -> Result<Vec<usize>> {
    let trimmed = input.trim();
    let inner = trimmed
        .strip_prefix('(')
        .and_then(|s| s.strip_suffix(')'))
        .unwrap_or(trimmed)
        .trim();
    if inner.is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|tok| {
            tok.trim()
                .parse::<usize>()
                .map_err(|_| Error::parse(what, input))
        })
        .collect()
}
