//! Combinatorics of dominant weights attached to partitions of fixed e-weight:
//! the e-abacus, the map to the `sl_r` weight lattice, the simplicial
//! decomposition of the weight set, alcove labels, and empty runner
//! insertion.

pub mod abacus;
pub mod alcove_index;
pub mod error;
pub mod partitions;
pub mod patterns;
pub mod render;
pub mod report;
pub mod runner_removal;
pub mod weights;

pub use abacus::{AbacusConfig, BetaSequence, EQuotient, Move};
pub use alcove_index::{AlcoveLabel, GeneratorIndex};
pub use error::{Error, Result};
pub use partitions::{Composition, MultiPartition, Partition, WeakComposition};
pub use patterns::{BlockWeightSet, ComponentKey, GenericTriple, PairKind, VertexPair};
pub use render::RenderOptions;
pub use report::{Report, Status};
pub use runner_removal::RunnerInsertion;
pub use weights::{DominantWeight, PositiveRoot, ShiVector};
