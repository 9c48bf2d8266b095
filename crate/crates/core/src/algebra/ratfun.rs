use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::poly::{forward_owned_binop, Polynomial};
use super::{AlgebraError, Rational};

/// A quotient `num/den` of polynomials in `t`, kept in a unique reduced form:
/// `gcd(num, den) = 1` and the lowest-order nonzero coefficient of `den` is 1.
///
/// For every power series (`den(0) != 0`) this means `den(0) = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl RationalFunction {
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self, AlgebraError> {
        if den.is_zero() {
            return Err(AlgebraError::ZeroDivisor);
        }
        Ok(Self::reduced(num, den))
    }

    fn reduced(num: Polynomial, den: Polynomial) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_constant() {
            (num, den)
        } else {
            (
                num.exact_div(&g).expect("gcd divides"),
                den.exact_div(&g).expect("gcd divides"),
            )
        };
        let low = den.valuation().expect("nonzero denominator");
        let norm = den.coeffs()[low].recip();
        if norm.is_one() {
            RationalFunction { num, den }
        } else {
            RationalFunction {
                num: num.scale(&norm),
                den: den.scale(&norm),
            }
        }
    }

    pub fn from_rational(c: Rational) -> Self {
        RationalFunction {
            num: Polynomial::constant(c),
            den: Polynomial::one(),
        }
    }

    pub fn from_poly(p: Polynomial) -> Self {
        RationalFunction {
            num: p,
            den: Polynomial::one(),
        }
    }

    pub fn num(&self) -> &Polynomial {
        &self.num
    }

    pub fn den(&self) -> &Polynomial {
        &self.den
    }

    pub fn into_parts(self) -> (Polynomial, Polynomial) {
        (self.num, self.den)
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn has_pole_at_origin(&self) -> bool {
        self.den.coeff(0).is_zero()
    }

    pub fn inv(&self) -> Result<Self, AlgebraError> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, AlgebraError> {
        if rhs.is_zero() {
            return Err(AlgebraError::ZeroDivisor);
        }
        Ok(Self::reduced(&self.num * &rhs.den, &self.den * &rhs.num))
    }

    /// Binary arithmetic by operator tag; only division can fail.
    pub fn arith(&self, op: ArithOp, rhs: &Self) -> Result<Self, AlgebraError> {
        Ok(match op {
            ArithOp::Add => self + rhs,
            ArithOp::Sub => self - rhs,
            ArithOp::Mul => self * rhs,
            ArithOp::Div => self.checked_div(rhs)?,
        })
    }

    pub fn pow(&self, exp: i32) -> Result<Self, AlgebraError> {
        let base = if exp < 0 { self.inv()? } else { self.clone() };
        let e = exp.unsigned_abs();
        Ok(RationalFunction {
            num: base.num.pow(e),
            den: base.den.pow(e),
        })
    }

    pub fn eval(&self, at: &Rational) -> Result<Rational, AlgebraError> {
        let d = self.den.eval(at);
        if d.is_zero() {
            return Err(AlgebraError::ZeroDivisor);
        }
        Ok(self.num.eval(at) / d)
    }

    pub fn scale(&self, by: &Rational) -> Self {
        Self::reduced(self.num.scale(by), self.den.clone())
    }
}

impl Zero for RationalFunction {
    fn zero() -> Self {
        RationalFunction {
            num: Polynomial::zero(),
            den: Polynomial::one(),
        }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RationalFunction {
    fn one() -> Self {
        Self::from_poly(Polynomial::one())
    }
}

impl From<Polynomial> for RationalFunction {
    fn from(p: Polynomial) -> Self {
        Self::from_poly(p)
    }
}

impl From<Rational> for RationalFunction {
    fn from(c: Rational) -> Self {
        Self::from_rational(c)
    }
}

impl Add<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RationalFunction::reduced(&self.num + &rhs.num, self.den.clone());
        }
        RationalFunction::reduced(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl Mul<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() || rhs.is_zero() {
            return RationalFunction::zero();
        }
        if self.is_polynomial() && rhs.is_polynomial() {
            return RationalFunction::from_poly(&self.num * &rhs.num);
        }
        RationalFunction::reduced(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        -&self
    }
}

forward_owned_binop!(RationalFunction, Add, add);
forward_owned_binop!(RationalFunction, Sub, sub);
forward_owned_binop!(RationalFunction, Mul, mul);

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let wrap = |p: &Polynomial| {
            let nonzero = p.coeffs().iter().filter(|c| !c.is_zero()).count();
            if nonzero > 1 {
                format!("({p})")
            } else {
                p.to_string()
            }
        };
        write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_ints(c)
    }

    fn rf(n: &[i64], d: &[i64]) -> RationalFunction {
        RationalFunction::new(p(n), p(d)).unwrap()
    }

    #[test]
    fn common_factor_cancels_on_construction() {
        let f = rf(&[-1, 0, 1], &[-1, 1]);
        assert_eq!(f, RationalFunction::from_poly(p(&[1, 1])));
        assert!(f.is_polynomial());
    }

    #[test]
    fn inverse_pair_multiplies_to_one() {
        let f = rf(&[1], &[1, -1]);
        let g = RationalFunction::from_poly(p(&[1, -1]));
        assert_eq!(&f * &g, RationalFunction::one());
    }

    #[test]
    fn sum_over_common_denominator() {
        let sum = &rf(&[1], &[1, 1]) + &rf(&[1], &[1, -1]);
        assert_eq!(sum, rf(&[2], &[1, 0, -1]));
        assert_eq!(sum.to_string(), "2/(1 - t^2)");
    }

    #[test]
    fn zero_divisor_is_reported() {
        assert_eq!(
            RationalFunction::new(p(&[1]), Polynomial::zero()),
            Err(AlgebraError::ZeroDivisor)
        );
        let f = rf(&[1, 1], &[1]);
        assert_eq!(
            f.arith(ArithOp::Div, &RationalFunction::zero()),
            Err(AlgebraError::ZeroDivisor)
        );
    }

    #[test]
    fn scalar_multiples_share_a_canonical_form() {
        assert_eq!(rf(&[2], &[2, 2]), rf(&[1], &[1, 1]));
        assert_eq!(rf(&[-3], &[-3, 3]), rf(&[1], &[1, -1]));
        // pole at the origin: lowest denominator coefficient normalized
        let g = rf(&[1], &[0, 2]);
        assert_eq!(g.den(), &p(&[0, 1]));
        assert!(g.has_pole_at_origin());
    }

    #[test]
    fn negative_powers_invert() {
        let f = rf(&[1, 1], &[1, -1]);
        assert_eq!(f.pow(-1).unwrap(), rf(&[1, -1], &[1, 1]));
        assert_eq!(f.pow(0).unwrap(), RationalFunction::one());
    }

    #[test]
    fn renders_with_parentheses() {
        assert_eq!(rf(&[1, 1], &[1, -1]).to_string(), "(1 + t)/(1 - t)");
        assert_eq!(rf(&[3], &[1]).to_string(), "3");
        assert_eq!(rf(&[1], &[0, 1]).to_string(), "1/t");
    }
}
