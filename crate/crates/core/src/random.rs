//! Seeded generators for random digraphs, weights and simple graphs.
//!
//! Trial `i` of a run with seed `s` draws from ChaCha8 seeded with `s` on
//! stream `i`, so trials are independent of each other and of evaluation order.

use std::ops::RangeInclusive;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::Rational;
use crate::digraph::{Digraph, UndirectedGraph};
use crate::zeta::{WeightScheme, ZetaInstance};

#[derive(Clone, Debug, PartialEq)]
pub struct RandomConfig {
    pub vertices: RangeInclusive<usize>,
    pub arcs: RangeInclusive<usize>,
    pub allow_loops: bool,
    /// Weights are `p/q` with `p ∈ [-bound, bound] ∖ {0}` and `q ∈ [1, bound]`.
    pub weight_bound: i64,
    /// Chance that a single arc gets `υ = 0`.
    pub zero_upsilon_prob: f64,
    /// Chance that the whole instance gets `υ ≡ 0`.
    pub all_zero_upsilon_prob: f64,
    /// Chance that a non-loop arc is given an explicit (user) inverse when possible.
    pub user_pair_prob: f64,
}

impl Default for RandomConfig {
    fn default() -> Self {
        RandomConfig {
            vertices: 1..=5,
            arcs: 1..=10,
            allow_loops: true,
            weight_bound: 3,
            zero_upsilon_prob: 0.15,
            all_zero_upsilon_prob: 0.1,
            user_pair_prob: 0.3,
        }
    }
}

pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

pub fn random_nonzero_rational<R: Rng>(rng: &mut R, bound: i64) -> Rational {
    let bound = bound.max(1);
    let mut num = rng.gen_range(1..=bound);
    if rng.gen_bool(0.5) {
        num = -num;
    }
    let den = rng.gen_range(1..=bound);
    Rational::new(num.into(), den.into())
}

pub fn random_digraph<R: Rng>(rng: &mut R, cfg: &RandomConfig) -> Digraph {
    let n = rng.gen_range(cfg.vertices.clone()).max(1);
    let m = rng.gen_range(cfg.arcs.clone());
    let mut arcs = Vec::with_capacity(m);
    while arcs.len() < m {
        let tail = rng.gen_range(1..=n);
        let head = rng.gen_range(1..=n);
        if tail == head && !cfg.allow_loops {
            if n == 1 {
                break;
            }
            continue;
        }
        arcs.push((format!("a{}", arcs.len() + 1), tail, head));
    }
    Digraph::new(n, arcs).expect("generated arcs are in range")
}

pub fn random_weights<R: Rng>(rng: &mut R, d: &Digraph, cfg: &RandomConfig) -> WeightScheme {
    let all_zero = rng.gen_bool(cfg.all_zero_upsilon_prob);
    WeightScheme::from_fn(d, |_| {
        let tau = random_nonzero_rational(rng, cfg.weight_bound);
        let upsilon = if all_zero || rng.gen_bool(cfg.zero_upsilon_prob) {
            Rational::from_integer(0.into())
        } else {
            random_nonzero_rational(rng, cfg.weight_bound)
        };
        (tau, upsilon)
    })
}

/// Random explicit inverse pairs between opposite non-loop arcs.
pub fn random_user_pairs<R: Rng>(
    rng: &mut R,
    d: &Digraph,
    cfg: &RandomConfig,
) -> Vec<(String, String)> {
    let mut taken = vec![false; d.arc_count()];
    let mut pairs = Vec::new();
    for (a, arc) in d.arcs().iter().enumerate() {
        if arc.is_loop() || taken[a] || !rng.gen_bool(cfg.user_pair_prob) {
            continue;
        }
        let options: Vec<usize> = d
            .arcs_between(arc.head, arc.tail)
            .into_iter()
            .filter(|&b| !taken[b])
            .collect();
        if let Some(&b) = options.choose(rng) {
            taken[a] = true;
            taken[b] = true;
            pairs.push((arc.id.to_string(), d.arc(b).id.to_string()));
        }
    }
    pairs
}

pub fn random_instance<R: Rng>(rng: &mut R, cfg: &RandomConfig) -> ZetaInstance {
    let d = random_digraph(rng, cfg);
    let pairs = random_user_pairs(rng, &d, cfg);
    let w = random_weights(rng, &d, cfg);
    ZetaInstance::with_user_pairs(d, &pairs, w).expect("generated pairs are opposite and disjoint")
}

/// Simple graph on `n` vertices, each edge present with probability `edge_prob`.
pub fn random_simple_graph<R: Rng>(rng: &mut R, n: usize, edge_prob: f64) -> UndirectedGraph {
    let edges = (1..=n)
        .flat_map(|u| (u + 1..=n).map(move |v| (u, v)))
        .filter(|_| rng.gen_bool(edge_prob))
        .collect();
    UndirectedGraph::new(n, edges).expect("edges in range")
}
