//! Fixtures shared by the benchmarks.

use ihara_core::digraph::symmetrize;
use ihara_core::random::{random_instance, trial_rng, RandomConfig};
use ihara_core::zeta::preset_weights;
use ihara_core::{Preset, UndirectedGraph, ZetaInstance};

/// Symmetric digraph of the complete graph on `n` vertices, Ihara weights.
pub fn complete_graph(n: usize) -> ZetaInstance {
    let (d, p) = symmetrize(&UndirectedGraph::complete(n));
    let w = preset_weights(&d, &Preset::Ihara).expect("ihara covers every arc");
    ZetaInstance::new(d, p, w).expect("weights match arcs")
}

/// A reproducible random instance with exactly `arcs` arcs on up to 5 vertices.
pub fn random_with_arcs(arcs: usize, seed: u64) -> ZetaInstance {
    let cfg = RandomConfig {
        arcs: arcs..=arcs,
        ..RandomConfig::default()
    };
    random_instance(&mut trial_rng(seed, 0), &cfg)
}
