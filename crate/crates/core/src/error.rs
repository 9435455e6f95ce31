use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a partition: {0:?} is not weakly decreasing")]
    NotAPartition(Vec<u64>),

    #[error("invalid composition {0:?}: parts must be positive and there must be at least one")]
    InvalidComposition(Vec<u64>),

    #[error("cannot parse {input:?} at position {position}: {message}")]
    Parse {
        input: String,
        position: usize,
        message: String,
    },

    #[error("rank {rank} is too small: need at least {needed}")]
    Rank { rank: usize, needed: usize },

    #[error("rank mismatch: expected {expected}, got {found}")]
    RankMismatch { expected: usize, found: usize },

    #[error("level e = {0} is invalid: need e >= 2")]
    InvalidLevel(u64),

    #[error("beta numbers {0:?} are not strictly decreasing")]
    NotStrictlyDecreasing(Vec<u64>),

    #[error("no bead at position {0}")]
    NoBead(u64),

    #[error("target position {0} is occupied")]
    OccupiedTarget(u64),

    #[error("bead at position {0} cannot move past the top of the abacus")]
    Underflow(u64),

    #[error("{0} is not an e-core")]
    NotACore(String),

    #[error("quotient component on runner {runner} needs {needed} beads but only {available} are available at this rank")]
    RankOverflow {
        runner: usize,
        needed: usize,
        available: usize,
    },

    #[error("quotient has {found} components, expected e = {expected}")]
    QuotientLength { expected: usize, found: usize },

    #[error("(r, e) = ({r}, {e}) is not generic: need e > r >= 3")]
    NotGeneric { r: usize, e: u64 },

    #[error("count overflows 64-bit unsigned arithmetic")]
    Overflow,

    #[error("weight {weight:?} produced by both {first} and {second}")]
    NotDisjoint {
        weight: Vec<u64>,
        first: String,
        second: String,
    },

    #[error("({v1:?}, {v2:?}) is not a bad pair")]
    NotABadPair { v1: Vec<u64>, v2: Vec<u64> },

    #[error("generator index {index} out of range for rank {rank}")]
    GeneratorOutOfRange { index: usize, rank: usize },

    #[error("the action of generator {generator} on {label} is undefined")]
    UndefinedAction { label: String, generator: usize },

    #[error("runner index {k} out of range for e = {e}")]
    RunnerOutOfRange { k: u64, e: u64 },

    #[error("palette is missing a colour for composition {0}")]
    IncompletePalette(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
