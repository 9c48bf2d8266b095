//! Exact computation of the generalized weighted zeta function of a finite
//! digraph (multi-arcs and multi-loops allowed) through all four of its
//! expressions, with the identities linking them available as checks.
//!
//! ```
//! use ihara_core::digraph::Digraph;
//! use ihara_core::zeta::{preset_weights, Preset, ZetaInstance};
//!
//! let d = Digraph::new(3, [("x", 1, 2), ("y", 2, 3), ("z", 3, 1)]).unwrap();
//! let w = preset_weights(&d, &Preset::Ihara).unwrap();
//! let z = ZetaInstance::with_user_pairs::<&str>(d, &[], w).unwrap();
//! assert_eq!(z.hashimoto_zeta().to_string(), "1/(1 - t^3)");
//! assert_eq!(z.hashimoto_zeta(), z.ihara_zeta().zeta);
//! ```

#![forbid(unsafe_code)]

pub mod algebra;
pub mod digraph;
pub mod random;
pub mod zeta;

pub use algebra::{Matrix, Polynomial, RatFunMatrix, Rational, RationalFunction, TruncatedSeries};
pub use digraph::{ArcClass, ArcClassification, Digraph, InversePairing, UndirectedGraph};
pub use zeta::{EnumerationLimit, Preset, WeightScheme, ZetaError, ZetaInstance, ZetaReport};
