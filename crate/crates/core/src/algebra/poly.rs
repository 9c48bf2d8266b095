use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::rational::{render_rational, Rational};

/// Univariate polynomial in `t` over the rationals, coefficients in ascending degree.
///
/// The coefficient vector never ends in a zero; the zero polynomial is empty.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(
            coeffs
                .iter()
                .map(|&c| Rational::from_integer(c.into()))
                .collect(),
        )
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// `c * t^degree`
    pub fn monomial(c: Rational, degree: usize) -> Self {
        if c.is_zero() {
            return Self::default();
        }
        let mut coeffs = vec![Rational::zero(); degree + 1];
        coeffs[degree] = c;
        Polynomial { coeffs }
    }

    /// The indeterminate `t`.
    pub fn t() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    /// Coefficient of `t^k` (zero past the degree).
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    /// Index of the lowest nonzero coefficient (the `t`-adic valuation).
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn eval(&self, at: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * at + c)
    }

    pub fn scale(&self, by: &Rational) -> Self {
        if by.is_zero() {
            return Self::default();
        }
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| c * by).collect(),
        }
    }

    /// Substitutes `t -> c*t`.
    pub fn dilate(&self, c: &Rational) -> Self {
        let mut power = Rational::one();
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for coeff in &self.coeffs {
            coeffs.push(coeff * &power);
            power *= c;
        }
        Self::new(coeffs)
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Makes the leading coefficient 1; the zero polynomial is returned unchanged.
    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(lead) => self.scale(&lead.recip()),
            None => Self::default(),
        }
    }

    /// Euclidean division. `None` when `divisor` is zero.
    pub fn div_rem(&self, divisor: &Polynomial) -> Option<(Polynomial, Polynomial)> {
        let dlead = divisor.leading()?.recip();
        let ddeg = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= ddeg {
            return Some((Self::default(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); rem.len() - ddeg];
        for shift in (0..quot.len()).rev() {
            let top = &rem[shift + ddeg];
            if top.is_zero() {
                continue;
            }
            let factor = top * &dlead;
            for (i, dc) in divisor.coeffs.iter().enumerate() {
                rem[shift + i] -= &factor * dc;
            }
            quot[shift] = factor;
        }
        rem.truncate(ddeg);
        Some((Self::new(quot), Self::new(rem)))
    }

    /// Quotient when `divisor` divides `self` exactly.
    pub fn exact_div(&self, divisor: &Polynomial) -> Option<Polynomial> {
        let (q, r) = self.div_rem(divisor)?;
        r.is_zero().then_some(q)
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Polynomial) -> Polynomial {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            // Monic remainders keep coefficient sizes in check.
            let r = a.div_rem(&b).expect("nonzero divisor").1;
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    fn zip_with(&self, other: &Polynomial, f: impl Fn(&Rational, &Rational) -> Rational) -> Self {
        let zero = Rational::zero();
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new(
            (0..n)
                .map(|i| {
                    f(
                        self.coeffs.get(i).unwrap_or(&zero),
                        other.coeffs.get(i).unwrap_or(&zero),
                    )
                })
                .collect(),
        )
    }
}

impl Zero for Polynomial {
    fn zero() -> Self {
        Self::default()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for Polynomial {
    fn one() -> Self {
        Polynomial {
            coeffs: vec![Rational::one()],
        }
    }
}

impl From<Rational> for Polynomial {
    fn from(c: Rational) -> Self {
        Self::constant(c)
    }
}

impl Add<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Mul<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::default();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($ty:ty, $tr:ident, $method:ident) => {
        impl $tr<$ty> for $ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&$ty> for $ty {
            type Output = $ty;
            fn $method(self, rhs: &$ty) -> $ty {
                (&self).$method(rhs)
            }
        }
    };
}
pub(crate) use forward_owned_binop;

forward_owned_binop!(Polynomial, Add, add);
forward_owned_binop!(Polynomial, Sub, sub);
forward_owned_binop!(Polynomial, Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

/// Ascending-degree rendering, e.g. `1 - 3/2*t + t^2`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            if first {
                if negative {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if negative { " - " } else { " + " })?;
            }
            first = false;
            let magnitude = c.abs();
            match k {
                0 => f.write_str(&render_rational(&magnitude))?,
                _ => {
                    if !magnitude.is_one() {
                        write!(f, "{}*", render_rational(&magnitude))?;
                    }
                    if k == 1 {
                        f.write_str("t")?;
                    } else {
                        write!(f, "t^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn trailing_zeros_are_trimmed() {
        let p = Polynomial::from_ints(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert!(Polynomial::from_ints(&[0, 0]).is_zero());
        assert_eq!(Polynomial::zero().degree(), None);
    }

    #[test]
    fn renders_ascending_terms() {
        let p = Polynomial::new(vec![q(1, 1), q(-3, 2), q(1, 1)]);
        assert_eq!(p.to_string(), "1 - 3/2*t + t^2");
        assert_eq!(
            Polynomial::from_ints(&[0, -1, 0, 2]).to_string(),
            "-t + 2*t^3"
        );
        assert_eq!(Polynomial::from_ints(&[1, 0, 0, -1]).to_string(), "1 - t^3");
        assert_eq!(Polynomial::zero().to_string(), "0");
        assert_eq!(Polynomial::from_ints(&[-5]).to_string(), "-5");
    }

    #[test]
    fn division_with_remainder() {
        // t^3 - 1 = (t - 1)(t^2 + t + 1)
        let a = Polynomial::from_ints(&[-1, 0, 0, 1]);
        let b = Polynomial::from_ints(&[-1, 1]);
        let (quot, rem) = a.div_rem(&b).unwrap();
        assert_eq!(quot, Polynomial::from_ints(&[1, 1, 1]));
        assert!(rem.is_zero());
        let (_, rem) = Polynomial::from_ints(&[1, 0, 1]).div_rem(&b).unwrap();
        assert_eq!(rem, Polynomial::from_ints(&[2]));
        assert!(a.div_rem(&Polynomial::zero()).is_none());
    }

    #[test]
    fn gcd_is_monic() {
        let a = &Polynomial::from_ints(&[-2, 2]) * &Polynomial::from_ints(&[1, 3]);
        let b = &Polynomial::from_ints(&[-3, 3]) * &Polynomial::from_ints(&[5, 0, 1]);
        assert_eq!(a.gcd(&b), Polynomial::from_ints(&[-1, 1]));
        assert_eq!(
            Polynomial::zero().gcd(&Polynomial::from_ints(&[4])),
            Polynomial::one()
        );
    }

    #[test]
    fn pow_and_eval() {
        let p = Polynomial::from_ints(&[1, 1]).pow(3);
        assert_eq!(p, Polynomial::from_ints(&[1, 3, 3, 1]));
        assert_eq!(p.eval(&q(1, 1)), q(8, 1));
        assert_eq!(Polynomial::t().pow(0), Polynomial::one());
    }

    #[test]
    fn dilate_substitutes() {
        let p = Polynomial::from_ints(&[1, 1, 1]).dilate(&q(2, 1));
        assert_eq!(p, Polynomial::from_ints(&[1, 2, 4]));
    }
}
