#![allow(dead_code)]

pub mod oracle;

use ihara_core::algebra::Polynomial;
use ihara_core::random::{random_instance, trial_rng, RandomConfig};
use ihara_core::zeta::preset_weights;
use ihara_core::{Digraph, Preset, Rational, WeightScheme, ZetaInstance};

pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

pub fn poly(c: &[i64]) -> Polynomial {
    Polynomial::from_ints(c)
}

pub fn example_digraph() -> Digraph {
    Digraph::new(
        3,
        [
            ("a1", 1, 2),
            ("a2", 2, 1),
            ("a3", 2, 1),
            ("a4", 2, 3),
            ("a5", 3, 2),
            ("a6", 3, 1),
            ("a7", 1, 1),
            ("a8", 1, 1),
        ],
    )
    .unwrap()
}

pub fn example_with(w: impl FnOnce(&Digraph) -> WeightScheme) -> ZetaInstance {
    let d = example_digraph();
    let w = w(&d);
    ZetaInstance::with_user_pairs(d, &[("a1", "a2"), ("a4", "a5")], w).unwrap()
}

/// τ(a_i) = i, υ(a_i) = 1/i.
pub fn example_graded() -> ZetaInstance {
    example_with(|d| WeightScheme::from_fn(d, |i| (int(i as i64 + 1), q(1, i as i64 + 1))))
}

pub fn example_ihara() -> ZetaInstance {
    example_with(|d| preset_weights(d, &Preset::Ihara).unwrap())
}

pub fn with_preset(d: Digraph, preset: Preset) -> ZetaInstance {
    let w = preset_weights(&d, &preset).unwrap();
    ZetaInstance::with_user_pairs::<&str>(d, &[], w).unwrap()
}

pub fn three_cycle() -> ZetaInstance {
    with_preset(
        Digraph::new(3, [("x", 1, 2), ("y", 2, 3), ("z", 3, 1)]).unwrap(),
        Preset::Ihara,
    )
}

pub fn random_suite(seed: u64, trials: u64, cfg: &RandomConfig) -> Vec<ZetaInstance> {
    (0..trials)
        .map(|t| random_instance(&mut trial_rng(seed, t), cfg))
        .collect()
}
