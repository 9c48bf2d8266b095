use std::fmt;

use num_traits::{One, Zero};

use super::{render_rational, AlgebraError, Polynomial, Rational, RationalFunction};

/// Power series in `t` truncated after `t^order`; always holds `order + 1` coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    coeffs: Vec<Rational>,
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![Rational::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = Rational::one();
        s
    }

    /// Pads with zeros or drops terms past `order`.
    pub fn from_coeffs(order: usize, coeffs: impl IntoIterator<Item = Rational>) -> Self {
        let mut s = Self::zero(order);
        for (slot, c) in s.coeffs.iter_mut().zip(coeffs) {
            *slot = c;
        }
        s
    }

    pub fn from_polynomial(p: &Polynomial, order: usize) -> Self {
        Self::from_coeffs(order, p.coeffs().iter().cloned())
    }

    /// Maclaurin expansion of `f` through `t^order`.
    pub fn from_ratfun(f: &RationalFunction, order: usize) -> Result<Self, AlgebraError> {
        let den = f.den();
        let d0 = den.coeff(0);
        if d0.is_zero() {
            return Err(AlgebraError::NotPowerSeries);
        }
        let d0_inv = d0.recip();
        let mut out: Vec<Rational> = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut acc = f.num().coeff(n);
            for (k, dk) in den.coeffs().iter().enumerate().skip(1).take(n) {
                acc -= dk * &out[n - k];
            }
            out.push(acc * &d0_inv);
        }
        Ok(TruncatedSeries { coeffs: out })
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &Rational {
        &self.coeffs[k]
    }

    pub fn set_coeff(&mut self, k: usize, value: Rational) {
        self.coeffs[k] = value;
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::from_coeffs(order, self.coeffs.iter().cloned())
    }

    /// Termwise sum at the smaller of the two orders.
    pub fn add(&self, rhs: &Self) -> Self {
        let order = self.order().min(rhs.order());
        Self::from_coeffs(
            order,
            self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b),
        )
    }

    /// Truncated Cauchy product at the smaller of the two orders.
    pub fn mul(&self, rhs: &Self) -> Self {
        let order = self.order().min(rhs.order());
        let mut out = Self::zero(order);
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                out.coeffs[i + j] += a * b;
            }
        }
        out
    }

    /// Multiplies in place by `1/(1 - c t^period)`.
    pub fn mul_geometric(&mut self, c: &Rational, period: usize) {
        if c.is_zero() || period == 0 {
            return;
        }
        for n in period..self.coeffs.len() {
            let add = c * &self.coeffs[n - period];
            self.coeffs[n] += add;
        }
    }

    /// Multiplies in place by `1/(1 - c t^period)^k`, whose coefficients are
    /// `C(k + j - 1, j) c^j` at `t^{j·period}`.
    pub fn mul_geometric_power(&mut self, c: &Rational, period: usize, k: u64) {
        if c.is_zero() || period == 0 || k == 0 {
            return;
        }
        if k == 1 {
            return self.mul_geometric(c, period);
        }
        let order = self.order();
        let terms = order / period;
        let mut factor = Vec::with_capacity(terms + 1);
        let mut coeff = Rational::one();
        let k = Rational::from_integer(k.into());
        for j in 0..=terms {
            if j > 0 {
                let jq = Rational::from_integer(j.into());
                coeff = coeff * (&k + &jq - Rational::one()) / jq * c;
            }
            factor.push(coeff.clone());
        }
        let mut out = vec![Rational::zero(); order + 1];
        for (n, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, f) in factor.iter().enumerate() {
                let idx = n + j * period;
                if idx > order {
                    break;
                }
                out[idx] += a * f;
            }
        }
        self.coeffs = out;
    }

    /// `exp(s)` for `s` with zero constant term, via `n f_n = Σ k s_k f_{n-k}`.
    pub fn exp(&self) -> Result<Self, AlgebraError> {
        if !self.coeffs[0].is_zero() {
            return Err(AlgebraError::SeriesDomain("exp needs a zero constant term"));
        }
        let n_max = self.order();
        let mut f = Self::one(n_max);
        for n in 1..=n_max {
            let mut acc = Rational::zero();
            for k in 1..=n {
                if self.coeffs[k].is_zero() {
                    continue;
                }
                acc += Rational::from_integer(k.into()) * &self.coeffs[k] * &f.coeffs[n - k];
            }
            f.coeffs[n] = acc / Rational::from_integer(n.into());
        }
        Ok(f)
    }

    /// `log(s)` for `s` with constant term 1, via `n g_n = n s_n - Σ_{k<n} k g_k s_{n-k}`.
    pub fn log(&self) -> Result<Self, AlgebraError> {
        if !self.coeffs[0].is_one() {
            return Err(AlgebraError::SeriesDomain("log needs constant term 1"));
        }
        let n_max = self.order();
        let mut g = Self::zero(n_max);
        for n in 1..=n_max {
            let nq = Rational::from_integer(n.into());
            let mut acc = &nq * &self.coeffs[n];
            for k in 1..n {
                if g.coeffs[k].is_zero() {
                    continue;
                }
                acc -= Rational::from_integer(k.into()) * &g.coeffs[k] * &self.coeffs[n - k];
            }
            g.coeffs[n] = acc / nq;
        }
        Ok(g)
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.coeffs.iter().map(render_rational).collect();
        write!(f, "[{}]", cells.join(", "))
    }
}
