use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{AlgebraError, Polynomial, Rational, RationalFunction};

/// Commutative ring with exact equality.
pub trait Ring:
    Clone
    + PartialEq
    + fmt::Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
}

impl<T> Ring for T where
    T: Clone
        + PartialEq
        + fmt::Debug
        + Zero
        + One
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Neg<Output = T>
{
}

pub trait Field: Ring {
    /// Multiplicative inverse, `None` for zero.
    fn inv(&self) -> Option<Self>;
}

/// Rings where exact quotients can be computed (used by fraction-free elimination).
pub trait ExactDiv: Ring {
    fn exact_div(&self, divisor: &Self) -> Option<Self>;
}

impl Field for Rational {
    fn inv(&self) -> Option<Self> {
        (!self.is_zero()).then(|| self.recip())
    }
}

impl ExactDiv for Rational {
    fn exact_div(&self, divisor: &Self) -> Option<Self> {
        (!divisor.is_zero()).then(|| self / divisor)
    }
}

impl Field for RationalFunction {
    fn inv(&self) -> Option<Self> {
        RationalFunction::inv(self).ok()
    }
}

impl ExactDiv for Polynomial {
    fn exact_div(&self, divisor: &Self) -> Option<Self> {
        Polynomial::exact_div(self, divisor)
    }
}

/// Dense row-major matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

pub type RatFunMatrix = Matrix<RationalFunction>;

fn shape_err(what: impl Into<String>) -> AlgebraError {
    AlgebraError::Shape(what.into())
}

impl<T> Matrix<T> {
    pub fn new(rows: usize, cols: usize, data: Vec<T>) -> Result<Self, AlgebraError> {
        if data.len() != rows * cols {
            return Err(shape_err(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &T)> {
        self.data
            .iter()
            .enumerate()
            .map(move |(k, v)| (k / self.cols.max(1), k % self.cols.max(1), v))
    }

    pub fn map<U>(&self, f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn require_square(&self) -> Result<(), AlgebraError> {
        if self.is_square() {
            Ok(())
        } else {
            Err(shape_err(format!(
                "{}x{} matrix is not square",
                self.rows, self.cols
            )))
        }
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        assert!(
            i < self.rows && j < self.cols,
            "index ({i},{j}) out of bounds"
        );
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        assert!(
            i < self.rows && j < self.cols,
            "index ({i},{j}) out of bounds"
        );
        &mut self.data[i * self.cols + j]
    }
}

impl<T: Ring> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |_, _| T::zero())
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { T::one() } else { T::zero() })
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn scale(&self, by: &T) -> Self {
        self.map(|v| v.clone() * by.clone())
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self, AlgebraError> {
        self.zip(rhs, |a, b| a + b)
    }

    pub fn try_sub(&self, rhs: &Self) -> Result<Self, AlgebraError> {
        self.zip(rhs, |a, b| a - b)
    }

    fn zip(&self, rhs: &Self, f: impl Fn(T, T) -> T) -> Result<Self, AlgebraError> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(shape_err(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| f(a.clone(), b.clone()))
                .collect(),
        })
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self, AlgebraError> {
        if self.cols != rhs.rows {
            return Err(shape_err(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if b.is_zero() {
                        continue;
                    }
                    let cell = &mut out[(i, j)];
                    *cell = cell.clone() + a.clone() * b.clone();
                }
            }
        }
        Ok(out)
    }

    pub fn trace(&self) -> Result<T, AlgebraError> {
        self.require_square()?;
        Ok((0..self.rows).fold(T::zero(), |acc, i| acc + self[(i, i)].clone()))
    }

    /// `tr(M^k)` by repeated multiplication.
    pub fn trace_power(&self, k: usize) -> Result<T, AlgebraError> {
        self.powers_traces(k).map(|traces| traces[k - 1].clone())
    }

    /// `[tr(M), tr(M^2), ..., tr(M^k)]`.
    pub fn powers_traces(&self, k: usize) -> Result<Vec<T>, AlgebraError> {
        self.require_square()?;
        if k == 0 {
            return Err(AlgebraError::ZeroPeriod);
        }
        let mut power = self.clone();
        let mut traces = Vec::with_capacity(k);
        traces.push(power.trace()?);
        for _ in 1..k {
            power = power.try_mul(self)?;
            traces.push(power.trace()?);
        }
        Ok(traces)
    }

    /// Block-diagonal sum `self ⊕ other`.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let (r, c) = (self.rows, self.cols);
        Self::from_fn(r + other.rows, c + other.cols, |i, j| {
            match (i < r, j < c) {
                (true, true) => self[(i, j)].clone(),
                (false, false) => other[(i - r, j - c)].clone(),
                _ => T::zero(),
            }
        })
    }
}

impl<T: ExactDiv> Matrix<T> {
    /// Fraction-free (Bareiss) determinant; every intermediate division is exact.
    pub fn det_bareiss(&self) -> Result<T, AlgebraError> {
        self.require_square()?;
        let n = self.rows;
        if n == 0 {
            return Ok(T::one());
        }
        let mut a = self.clone();
        let mut negate = false;
        let mut prev = T::one();
        for k in 0..n - 1 {
            if a[(k, k)].is_zero() {
                match (k + 1..n).find(|&i| !a[(i, k)].is_zero()) {
                    Some(i) => {
                        a.swap_rows(k, i);
                        negate = !negate;
                    }
                    None => return Ok(T::zero()),
                }
            }
            let pivot = a[(k, k)].clone();
            for i in k + 1..n {
                let lead = a[(i, k)].clone();
                for j in k + 1..n {
                    let cross =
                        pivot.clone() * a[(i, j)].clone() - lead.clone() * a[(k, j)].clone();
                    a[(i, j)] = cross.exact_div(&prev).expect("Bareiss quotient is exact");
                }
                a[(i, k)] = T::zero();
            }
            prev = pivot;
        }
        let det = a[(n - 1, n - 1)].clone();
        Ok(if negate { -det } else { det })
    }
}

impl<T: Field> Matrix<T> {
    /// Determinant by Gaussian elimination over the field.
    pub fn det_gauss(&self) -> Result<T, AlgebraError> {
        self.require_square()?;
        let n = self.rows;
        let mut a = self.clone();
        let mut det = T::one();
        for k in 0..n {
            let Some(p) = (k..n).find(|&i| !a[(i, k)].is_zero()) else {
                return Ok(T::zero());
            };
            if p != k {
                a.swap_rows(k, p);
                det = -det;
            }
            let pivot = a[(k, k)].clone();
            let pivot_inv = pivot.inv().expect("nonzero pivot");
            det = det * pivot;
            for i in k + 1..n {
                if a[(i, k)].is_zero() {
                    continue;
                }
                let factor = a[(i, k)].clone() * pivot_inv.clone();
                for j in k + 1..n {
                    let v = a[(i, j)].clone() - factor.clone() * a[(k, j)].clone();
                    a[(i, j)] = v;
                }
                a[(i, k)] = T::zero();
            }
        }
        Ok(det)
    }

    /// Gauss–Jordan inverse; fails with `ZeroDivisor` on a singular matrix.
    pub fn inverse(&self) -> Result<Self, AlgebraError> {
        self.require_square()?;
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for k in 0..n {
            let p = (k..n)
                .find(|&i| !a[(i, k)].is_zero())
                .ok_or(AlgebraError::ZeroDivisor)?;
            a.swap_rows(k, p);
            inv.swap_rows(k, p);
            let pivot_inv = a[(k, k)].inv().expect("nonzero pivot");
            for j in 0..n {
                a[(k, j)] = a[(k, j)].clone() * pivot_inv.clone();
                inv[(k, j)] = inv[(k, j)].clone() * pivot_inv.clone();
            }
            for i in 0..n {
                if i == k || a[(i, k)].is_zero() {
                    continue;
                }
                let factor = a[(i, k)].clone();
                for j in 0..n {
                    let v = a[(i, j)].clone() - factor.clone() * a[(k, j)].clone();
                    a[(i, j)] = v;
                    let w = inv[(i, j)].clone() - factor.clone() * inv[(k, j)].clone();
                    inv[(i, j)] = w;
                }
            }
        }
        Ok(inv)
    }
}

impl Matrix<Rational> {
    /// `I - t*M` as a polynomial matrix.
    pub fn identity_minus_t(&self) -> Result<Matrix<Polynomial>, AlgebraError> {
        self.require_square()?;
        Ok(Matrix::from_fn(self.rows, self.cols, |i, j| {
            let c = if i == j {
                Rational::one()
            } else {
                Rational::zero()
            };
            Polynomial::new(vec![c, -self[(i, j)].clone()])
        }))
    }

    pub fn to_ratfun(&self) -> RatFunMatrix {
        self.map(|c| RationalFunction::from_rational(c.clone()))
    }
}

impl Matrix<Polynomial> {
    pub fn to_ratfun(&self) -> RatFunMatrix {
        self.map(|p| RationalFunction::from_poly(p.clone()))
    }
}

impl RatFunMatrix {
    /// Exact determinant. Each row is multiplied through by the lcm of its
    /// denominators, the resulting polynomial matrix is reduced by Bareiss
    /// elimination, and the row scalings are divided back out.
    pub fn determinant(&self) -> Result<RationalFunction, AlgebraError> {
        self.require_square()?;
        let mut scale = Polynomial::one();
        let mut cleared = Vec::with_capacity(self.data.len());
        for i in 0..self.rows {
            let row = self.row(i);
            let lcm = row.iter().fold(Polynomial::one(), |acc, v| {
                let g = acc.gcd(v.den());
                (&acc * v.den()).exact_div(&g).expect("gcd divides")
            });
            for v in row {
                let cofactor = lcm.exact_div(v.den()).expect("lcm is a multiple");
                cleared.push(v.num() * &cofactor);
            }
            scale = &scale * &lcm;
        }
        let poly = Matrix::new(self.rows, self.cols, cleared)?;
        RationalFunction::new(poly.det_bareiss()?, scale)
    }

    /// Substitutes `t = at` in every entry.
    pub fn eval(&self, at: &Rational) -> Result<Matrix<Rational>, AlgebraError> {
        let data = self
            .data
            .iter()
            .map(|v| v.eval(at))
            .collect::<Result<Vec<_>, _>>()?;
        Matrix::new(self.rows, self.cols, data)
    }
}

impl<T: fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}
