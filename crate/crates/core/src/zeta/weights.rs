use std::str::FromStr;

use num_traits::{One, Zero};

use super::ZetaError;
use crate::algebra::Rational;
use crate::digraph::Digraph;

/// The pair `(τ, υ)` of arc weights, indexed by arc position in the digraph.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightScheme {
    tau: Vec<Rational>,
    upsilon: Vec<Rational>,
}

impl WeightScheme {
    pub fn new(d: &Digraph, tau: Vec<Rational>, upsilon: Vec<Rational>) -> Result<Self, ZetaError> {
        for got in [tau.len(), upsilon.len()] {
            if got != d.arc_count() {
                return Err(ZetaError::WeightCoverage {
                    expected: d.arc_count(),
                    got,
                });
            }
        }
        Ok(WeightScheme { tau, upsilon })
    }

    pub fn uniform(d: &Digraph, tau: Rational, upsilon: Rational) -> Self {
        let n = d.arc_count();
        WeightScheme {
            tau: vec![tau; n],
            upsilon: vec![upsilon; n],
        }
    }

    pub fn from_fn(d: &Digraph, mut f: impl FnMut(usize) -> (Rational, Rational)) -> Self {
        let (tau, upsilon) = (0..d.arc_count()).map(&mut f).unzip();
        WeightScheme { tau, upsilon }
    }

    pub fn len(&self) -> usize {
        self.tau.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tau.is_empty()
    }

    pub fn tau(&self, arc: usize) -> &Rational {
        &self.tau[arc]
    }

    pub fn upsilon(&self, arc: usize) -> &Rational {
        &self.upsilon[arc]
    }

    pub fn taus(&self) -> &[Rational] {
        &self.tau
    }

    pub fn upsilons(&self) -> &[Rational] {
        &self.upsilon
    }

    /// `τ ≡ υ ≡ 1`.
    pub fn is_ihara(&self) -> bool {
        self.tau.iter().chain(&self.upsilon).all(One::is_one)
    }

    pub fn concat(&self, other: &WeightScheme) -> WeightScheme {
        WeightScheme {
            tau: self.tau.iter().chain(&other.tau).cloned().collect(),
            upsilon: self.upsilon.iter().chain(&other.upsilon).cloned().collect(),
        }
    }
}

/// Named specializations of the weight pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Preset {
    /// `τ = υ = 1`
    Ihara,
    /// `τ = 1, υ = 0`
    BowenLanford,
    /// `υ = 0`; `τ` from the given map, or 1.
    Sato { tau: Option<Vec<Rational>> },
    /// `υ = τ`; `τ` from the given map, or 1.
    MizunoSato { tau: Option<Vec<Rational>> },
    /// `τ = 1, υ = 1 - q`
    Bartholdi { q: Option<Rational> },
}

impl FromStr for Preset {
    type Err = ZetaError;

    /// Parses a preset name; `sato`, `mizuno-sato` and `bartholdi` come back
    /// without their parameters.
    fn from_str(name: &str) -> Result<Self, ZetaError> {
        Ok(match name {
            "ihara" => Preset::Ihara,
            "bowen-lanford" => Preset::BowenLanford,
            "sato" => Preset::Sato { tau: None },
            "mizuno-sato" => Preset::MizunoSato { tau: None },
            "bartholdi" => Preset::Bartholdi { q: None },
            other => return Err(ZetaError::UnknownPreset(other.to_string())),
        })
    }
}

pub fn preset_weights(d: &Digraph, preset: &Preset) -> Result<WeightScheme, ZetaError> {
    let one = Rational::one();
    let tau_or_one = |tau: &Option<Vec<Rational>>| -> Result<Vec<Rational>, ZetaError> {
        match tau {
            Some(t) if t.len() != d.arc_count() => Err(ZetaError::WeightCoverage {
                expected: d.arc_count(),
                got: t.len(),
            }),
            Some(t) => Ok(t.clone()),
            None => Ok(vec![one.clone(); d.arc_count()]),
        }
    };
    Ok(match preset {
        Preset::Ihara => WeightScheme::uniform(d, one.clone(), one.clone()),
        Preset::BowenLanford => WeightScheme::uniform(d, one.clone(), Rational::zero()),
        Preset::Sato { tau } => {
            let tau = tau_or_one(tau)?;
            let zeros = vec![Rational::zero(); tau.len()];
            WeightScheme::new(d, tau, zeros)?
        }
        Preset::MizunoSato { tau } => {
            let tau = tau_or_one(tau)?;
            WeightScheme::new(d, tau.clone(), tau)?
        }
        Preset::Bartholdi { q } => {
            let q = q.as_ref().ok_or(ZetaError::MissingQ)?;
            WeightScheme::uniform(d, one.clone(), &one - q)
        }
    })
}
