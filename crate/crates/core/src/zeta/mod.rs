//! The generalized weighted zeta function of a digraph and its four
//! expressions: exponential, Euler product, edge-matrix determinant
//! (Hashimoto) and vertex-matrix determinant (Ihara).

mod classical;
mod instance;
mod paths;
mod proof;
mod verify;
mod weights;

use thiserror::Error;

use crate::algebra::AlgebraError;
use crate::digraph::GraphError;

pub use classical::bass_inverse_zeta;
pub use instance::{Hjkl, IharaZeta, ZetaInstance, ZetaReport};
pub use paths::{ClosedPath, EnumerationLimit, PrimeCycle};
pub use proof::{IdentityCheck, ProofReport};
pub use verify::{run_battery, BatteryOptions, CheckOutcome, Status};
pub use weights::{preset_weights, Preset, WeightScheme};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ZetaError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("weight scheme covers {got} arcs but the digraph has {expected}")]
    WeightCoverage { expected: usize, got: usize },
    #[error("bartholdi preset needs a rational q")]
    MissingQ,
    #[error("unknown preset `{0}`")]
    UnknownPreset(String),
    #[error("enumeration limit exceeded: {arcs}^{length} candidate sections > {limit}")]
    EnumerationLimit {
        arcs: usize,
        length: usize,
        limit: u64,
    },
}
