//! Reference computations that share no code path with the library's
//! elimination, DFS or Lyndon enumeration.
#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap};

use ihara_core::algebra::{Matrix, Ring};
use ihara_core::{Rational, ZetaInstance};
use num_traits::{One, Zero};

/// Laplace expansion along successive rows, memoized on the set of columns
/// still available. Exponential, but fine up to ~14x14.
pub fn det_cofactor<T: Ring>(m: &Matrix<T>) -> T {
    assert!(m.is_square());
    let n = m.rows();
    assert!(n < 20);
    let mut memo: HashMap<u32, T> = HashMap::new();
    fn go<T: Ring>(m: &Matrix<T>, row: usize, cols: u32, memo: &mut HashMap<u32, T>) -> T {
        if row == m.rows() {
            return T::one();
        }
        if let Some(v) = memo.get(&cols) {
            return v.clone();
        }
        let mut acc = T::zero();
        let mut sign_negative = false;
        for c in 0..m.cols() {
            if cols & (1 << c) == 0 {
                continue;
            }
            let entry = &m[(row, c)];
            if !entry.is_zero() {
                let minor = go(m, row + 1, cols & !(1 << c), memo);
                let term = entry.clone() * minor;
                acc = if sign_negative {
                    acc - term
                } else {
                    acc + term
                };
            }
            sign_negative = !sign_negative;
        }
        memo.insert(cols, acc.clone());
        acc
    }
    go(m, 0, (1u32 << n) - 1, &mut memo)
}

/// θᴳ straight from the weights and pairing.
pub fn theta(z: &ZetaInstance, a: usize, b: usize) -> Rational {
    let d = z.digraph();
    let w = z.weights();
    let mut v = Rational::zero();
    if d.arc(a).head == d.arc(b).tail {
        v += w.tau(b);
    }
    if z.pairing().inverse_of(a) == Some(b) {
        v -= w.upsilon(b);
    }
    v
}

/// Every arc sequence of length `m` (odometer over `|A|^m`), keeping the closed ones.
pub fn closed_sections(z: &ZetaInstance, m: usize) -> Vec<Vec<usize>> {
    let d = z.digraph();
    let n = d.arc_count();
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    let mut digits = vec![0usize; m];
    loop {
        if (0..m).all(|i| d.arc(digits[i]).head == d.arc(digits[(i + 1) % m]).tail) {
            out.push(digits.clone());
        }
        let mut i = 0;
        loop {
            if i == m {
                return out;
            }
            digits[i] += 1;
            if digits[i] < n {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
    }
}

pub fn circ(z: &ZetaInstance, s: &[usize]) -> Rational {
    let m = s.len();
    (0..m).fold(Rational::one(), |acc, i| {
        acc * theta(z, s[i], s[(i + 1) % m])
    })
}

pub fn n_m(z: &ZetaInstance, m: usize) -> Rational {
    closed_sections(z, m)
        .iter()
        .fold(Rational::zero(), |acc, s| acc + circ(z, s))
}

fn rotations(s: &[usize]) -> Vec<Vec<usize>> {
    (0..s.len())
        .map(|k| s[k..].iter().chain(&s[..k]).copied().collect())
        .collect()
}

/// Prime cycles up to `max_len`: group all closed sections by rotation and
/// keep the classes whose minimum period equals their length.
pub fn prime_cycles(z: &ZetaInstance, max_len: usize) -> BTreeMap<Vec<usize>, Rational> {
    let mut out = BTreeMap::new();
    for m in 1..=max_len {
        for s in closed_sections(z, m) {
            let rots = rotations(&s);
            let distinct = rots.iter().collect::<std::collections::BTreeSet<_>>().len();
            if distinct != m {
                continue;
            }
            let least = rots.into_iter().min().unwrap();
            out.entry(least).or_insert_with(|| circ(z, &s));
        }
    }
    out
}
