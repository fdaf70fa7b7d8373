pub mod error;
pub mod export;
pub mod harness;
pub mod ingermanson;
pub mod leclerc;
pub mod linalg;
pub mod minors;
pub mod perm;
pub mod prep;
pub mod render;
pub mod seed;
pub mod shapes;
pub mod wiring;

pub use error::{Error, Result};
pub use harness::{enumerate_cases, sample_cases, Case};
pub use ingermanson::{AppearanceMatrix, IngermansonSeed};
pub use leclerc::LeclercSeed;
pub use minors::{eval_minor, verify_component_factorization, ExactMatrix};
pub use perm::{pds, reduced_words, unipeak_word, IndexSet, Permutation, ReducedWord, SubexpressionMask};
pub use prep::{gabriel_quiver, hom_space, module_from_shape, PrepModule};
pub use seed::{ClusterVariable, Construction, LaurentMonomial, Quiver, Seed};
pub use shapes::{component_keys, skew_shape, LatticePath, MinorIndex, SkewShape, Step};
pub use wiring::{Chamber, ChamberRef, Crossing, SpreadBoundary, WiringDiagram};
