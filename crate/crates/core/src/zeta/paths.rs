//! Brute-force enumeration of closed paths and prime cycles. These are the
//! independent routes behind the trace formula and the Euler product.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{ZetaError, ZetaInstance};
use crate::algebra::{Rational, TruncatedSeries};
use crate::digraph::Digraph;

/// Refuses enumerations with more than `limit` candidate sections (`|A|^m`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationLimit(pub u64);

impl Default for EnumerationLimit {
    fn default() -> Self {
        EnumerationLimit(10_000_000)
    }
}

impl EnumerationLimit {
    pub fn allows(&self, arcs: usize, length: usize) -> bool {
        let Ok(length) = u32::try_from(length) else {
            return arcs <= 1;
        };
        (arcs as u64)
            .checked_pow(length)
            .is_some_and(|candidates| candidates <= self.0)
    }

    pub fn check(&self, arcs: usize, length: usize) -> Result<(), ZetaError> {
        if self.allows(arcs, length) {
            Ok(())
        } else {
            Err(ZetaError::EnumerationLimit {
                arcs,
                length,
                limit: self.0,
            })
        }
    }

    /// Largest `m <= wanted` that [`allows`](Self::allows) permits.
    pub fn max_depth(&self, arcs: usize, wanted: usize) -> usize {
        (0..=wanted)
            .rev()
            .find(|&m| self.allows(arcs, m))
            .unwrap_or(0)
    }
}

/// A fundamental section: arc indices `a_0 … a_{m-1}` with `𝔥(a_i) = 𝔱(a_{i+1})`
/// cyclically.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClosedPath {
    pub section: Vec<usize>,
}

impl ClosedPath {
    pub fn period(&self) -> usize {
        self.section.len()
    }

    pub fn is_closed_in(&self, d: &Digraph) -> bool {
        let m = self.section.len();
        m > 0
            && (0..m).all(|i| d.arc(self.section[i]).head == d.arc(self.section[(i + 1) % m]).tail)
    }

    pub fn ids<'a>(&self, d: &'a Digraph) -> Vec<&'a str> {
        self.section.iter().map(|&a| d.arc(a).id.as_str()).collect()
    }

    /// Smallest `p` such that the section is `m/p` repeats of its first `p` arcs.
    pub fn minimum_period(&self) -> usize {
        let m = self.section.len();
        (1..=m)
            .find(|&p| {
                m.is_multiple_of(p) && (p..m).all(|i| self.section[i] == self.section[i - p])
            })
            .unwrap_or(m)
    }
}

/// Rotation class of a primitive closed path, stored by its least rotation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeCycle {
    pub representative: ClosedPath,
    pub period: usize,
    pub circ: Rational,
}

/// Integer arithmetic for the enumeration inner loops: `i128` with overflow
/// detection, falling back to `BigInt`.
trait Exact: Clone + Ord + Zero + One {
    fn times(&self, rhs: &Self) -> Option<Self>;
    fn plus(&self, rhs: &Self) -> Option<Self>;
    fn from_big(b: &BigInt) -> Option<Self>;
    fn to_big(&self) -> BigInt;
}

impl Exact for i128 {
    fn times(&self, rhs: &Self) -> Option<Self> {
        self.checked_mul(*rhs)
    }
    fn plus(&self, rhs: &Self) -> Option<Self> {
        self.checked_add(*rhs)
    }
    fn from_big(b: &BigInt) -> Option<Self> {
        i128::try_from(b).ok()
    }
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl Exact for BigInt {
    fn times(&self, rhs: &Self) -> Option<Self> {
        Some(self * rhs)
    }
    fn plus(&self, rhs: &Self) -> Option<Self> {
        Some(self + rhs)
    }
    fn from_big(b: &BigInt) -> Option<Self> {
        Some(b.clone())
    }
    fn to_big(&self) -> BigInt {
        self.clone()
    }
}

/// θᴳ over a common denominator: `theta(a, b) = num[a][b] / scale`.
struct ScaledTheta<N> {
    num: Vec<Vec<N>>,
    scale: BigInt,
    /// Composable successors `b` of each arc `a` with `θᴳ(a, b) ≠ 0`.
    live: Vec<Vec<usize>>,
}

impl ScaledTheta<BigInt> {
    fn new(z: &ZetaInstance) -> Self {
        let n = z.digraph().arc_count();
        let theta: Vec<Vec<Rational>> = (0..n)
            .map(|a| (0..n).map(|b| z.theta(a, b)).collect())
            .collect();
        let scale = theta
            .iter()
            .flatten()
            .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
        let num: Vec<Vec<BigInt>> = theta
            .iter()
            .map(|row| row.iter().map(|q| (q * &scale).to_integer()).collect())
            .collect();
        let d = z.digraph();
        let live = (0..n)
            .map(|a| {
                (0..n)
                    .filter(|&b| d.arc(a).head == d.arc(b).tail && !num[a][b].is_zero())
                    .collect()
            })
            .collect();
        ScaledTheta { num, scale, live }
    }

    fn narrow<N: Exact>(&self) -> Option<ScaledTheta<N>> {
        let num = self
            .num
            .iter()
            .map(|row| row.iter().map(N::from_big).collect::<Option<Vec<_>>>())
            .collect::<Option<Vec<_>>>()?;
        Some(ScaledTheta {
            num,
            scale: self.scale.clone(),
            live: self.live.clone(),
        })
    }
}

impl<N> ScaledTheta<N> {
    fn unscale(&self, total: BigInt, length: usize) -> Rational {
        let den = num_traits::pow(self.scale.clone(), length);
        Rational::new(total, den)
    }
}

/// Runs `f` in `i128`, redoing it in `BigInt` if anything overflowed.
fn with_fallback<T>(
    theta: &ScaledTheta<BigInt>,
    f128: impl FnOnce(&ScaledTheta<i128>) -> Option<T>,
    fbig: impl FnOnce(&ScaledTheta<BigInt>) -> Option<T>,
) -> T {
    theta
        .narrow::<i128>()
        .and_then(|t| f128(&t))
        .or_else(|| fbig(theta))
        .expect("BigInt arithmetic cannot overflow")
}

impl ZetaInstance {
    fn successors(&self) -> Vec<Vec<usize>> {
        let d = self.digraph();
        d.arcs()
            .iter()
            .map(|a| {
                d.arcs()
                    .iter()
                    .enumerate()
                    .filter(|(_, b)| b.tail == a.head)
                    .map(|(j, _)| j)
                    .collect()
            })
            .collect()
    }

    /// Depth-first walk over paths of length `1..=max_len` following `succ`;
    /// `visit(path)` runs at every node and stops the walk by returning false.
    fn walk_paths(succ: &[Vec<usize>], max_len: usize, mut visit: impl FnMut(&[usize]) -> bool) {
        if max_len == 0 {
            return;
        }
        let mut path = Vec::with_capacity(max_len);
        for start in 0..succ.len() {
            path.clear();
            path.push(start);
            if !visit(&path) {
                return;
            }
            // next successor slot at each depth
            let mut cursor = vec![0usize];
            while let Some(slot) = cursor.last_mut() {
                let last = *path.last().expect("non-empty path");
                match succ[last].get(*slot) {
                    Some(&next) if path.len() < max_len => {
                        *slot += 1;
                        path.push(next);
                        if !visit(&path) {
                            return;
                        }
                        cursor.push(0);
                    }
                    _ => {
                        cursor.pop();
                        path.pop();
                    }
                }
            }
        }
    }

    /// `circ(x) = Π θᴳ(a_i, a_{i+1})` taken cyclically around the section.
    pub fn circular_product(&self, section: &[usize]) -> Rational {
        let m = section.len();
        let mut acc = Rational::one();
        for i in 0..m {
            acc *= self.theta(section[i], section[(i + 1) % m]);
            if acc.is_zero() {
                break;
            }
        }
        acc
    }

    /// Scaled sums of circular products by length; `None` on overflow.
    fn closed_path_sums<N: Exact>(theta: &ScaledTheta<N>, max_len: usize) -> Option<Vec<BigInt>> {
        let mut sums = vec![N::zero(); max_len];
        // prefix[k] = Π θ along the first k+1 arcs of the current path
        let mut prefix: Vec<N> = Vec::with_capacity(max_len);
        let mut ok = true;
        Self::walk_paths(&theta.live, max_len, |path| {
            let k = path.len();
            prefix.truncate(k - 1);
            let p = match k {
                1 => Some(N::one()),
                _ => prefix[k - 2].times(&theta.num[path[k - 2]][path[k - 1]]),
            };
            let Some(p) = p else {
                ok = false;
                return false;
            };
            let close = &theta.num[path[k - 1]][path[0]];
            if !close.is_zero() {
                match p.times(close).and_then(|c| sums[k - 1].plus(&c)) {
                    Some(s) => sums[k - 1] = s,
                    None => {
                        ok = false;
                        return false;
                    }
                }
            }
            prefix.push(p);
            true
        });
        ok.then(|| sums.iter().map(N::to_big).collect())
    }

    /// `N_1 … N_max_len` as literal sums of circular products over closed
    /// paths, from one enumeration. Paths through a zero `θᴳ` are pruned since
    /// they contribute nothing.
    pub fn n_m_bruteforce_upto(
        &self,
        max_len: usize,
        limit: EnumerationLimit,
    ) -> Result<Vec<Rational>, ZetaError> {
        limit.check(self.digraph().arc_count(), max_len)?;
        let theta = ScaledTheta::new(self);
        let sums = with_fallback(
            &theta,
            |t| Self::closed_path_sums(t, max_len),
            |t| Self::closed_path_sums(t, max_len),
        );
        Ok(sums
            .into_iter()
            .enumerate()
            .map(|(i, s)| theta.unscale(s, i + 1))
            .collect())
    }

    /// `N_m` as the literal sum of circular products over all closed paths of length `m`.
    pub fn n_m_bruteforce(&self, m: usize, limit: EnumerationLimit) -> Result<Rational, ZetaError> {
        if m == 0 {
            return Err(crate::algebra::AlgebraError::ZeroPeriod.into());
        }
        Ok(self.n_m_bruteforce_upto(m, limit)?.swap_remove(m - 1))
    }

    /// Numbers of closed paths of lengths `1..=max_len` with no step `a → a⁻¹`
    /// (cyclically).
    pub fn count_reduced_closed_paths_upto(
        &self,
        max_len: usize,
        limit: EnumerationLimit,
    ) -> Result<Vec<u64>, ZetaError> {
        let d = self.digraph();
        limit.check(d.arc_count(), max_len)?;
        let p = self.pairing();
        let steps_ok =
            |a: usize, b: usize| d.arc(a).head == d.arc(b).tail && p.inverse_of(a) != Some(b);
        let succ: Vec<Vec<usize>> = self
            .successors()
            .into_iter()
            .enumerate()
            .map(|(a, next)| next.into_iter().filter(|&b| steps_ok(a, b)).collect())
            .collect();
        let mut counts = vec![0u64; max_len];
        Self::walk_paths(&succ, max_len, |path| {
            if steps_ok(path[path.len() - 1], path[0]) {
                counts[path.len() - 1] += 1;
            }
            true
        });
        Ok(counts)
    }

    /// Number of closed paths of length `m` with no step `a → a⁻¹` (cyclically).
    pub fn count_reduced_closed_paths(
        &self,
        m: usize,
        limit: EnumerationLimit,
    ) -> Result<u64, ZetaError> {
        if m == 0 {
            return Err(crate::algebra::AlgebraError::ZeroPeriod.into());
        }
        Ok(self.count_reduced_closed_paths_upto(m, limit)?[m - 1])
    }

    /// Fredricksen–Kessler–Maiorana over pre-necklaces along composable arcs:
    /// `visit(word, scaled_circ)` runs once per Lyndon word that closes up,
    /// i.e. once per prime cycle, with its least rotation. Returns false on
    /// overflow.
    fn for_each_prime<N: Exact>(
        &self,
        max_len: usize,
        theta: &ScaledTheta<N>,
        mut visit: impl FnMut(&[usize], N),
    ) -> bool {
        let d = self.digraph();
        let succ = self.successors();
        // `period` is the length of the longest Lyndon prefix pattern; a word
        // is Lyndon exactly when its period equals its length.
        struct Frame<N> {
            slot: usize,
            period: usize,
            /// Scaled θ product along the word so far.
            product: N,
        }
        let mut record = |word: &[usize], frame: &Frame<N>| -> bool {
            let last = *word.last().expect("non-empty");
            if frame.period == word.len() && d.arc(last).head == d.arc(word[0]).tail {
                let Some(circ) = frame.product.times(&theta.num[last][word[0]]) else {
                    return false;
                };
                visit(word, circ);
            }
            true
        };
        if max_len == 0 {
            return true;
        }
        let mut word = Vec::with_capacity(max_len);
        for start in 0..d.arc_count() {
            word.clear();
            word.push(start);
            let mut stack = vec![Frame {
                slot: 0,
                period: 1,
                product: N::one(),
            }];
            if !record(&word, &stack[0]) {
                return false;
            }
            while let Some(frame) = stack.last_mut() {
                if word.len() == max_len {
                    stack.pop();
                    word.pop();
                    continue;
                }
                let last = *word.last().expect("non-empty word");
                let Some(&next) = succ[last].get(frame.slot) else {
                    stack.pop();
                    word.pop();
                    continue;
                };
                frame.slot += 1;
                let k = word.len();
                let period = match next.cmp(&word[k - frame.period]) {
                    std::cmp::Ordering::Less => continue,
                    std::cmp::Ordering::Equal => frame.period,
                    std::cmp::Ordering::Greater => k + 1,
                };
                let Some(product) = frame.product.times(&theta.num[last][next]) else {
                    return false;
                };
                word.push(next);
                stack.push(Frame {
                    slot: 0,
                    period,
                    product,
                });
                if !record(&word, stack.last().expect("just pushed")) {
                    return false;
                }
            }
        }
        true
    }

    /// One representative (the least rotation, i.e. a Lyndon word over the arc
    /// order) per prime cycle of period `<= max_len`, sorted by period then section.
    pub fn enumerate_prime_cycles(
        &self,
        max_len: usize,
        limit: EnumerationLimit,
    ) -> Result<Vec<PrimeCycle>, ZetaError> {
        limit.check(self.digraph().arc_count(), max_len)?;
        let theta = ScaledTheta::new(self);
        let mut primes = Vec::new();
        self.for_each_prime(max_len, &theta, |word, circ| {
            primes.push(PrimeCycle {
                representative: ClosedPath {
                    section: word.to_vec(),
                },
                period: word.len(),
                circ: theta.unscale(circ, word.len()),
            })
        });
        primes.sort_by(|a, b| {
            (a.period, &a.representative.section).cmp(&(b.period, &b.representative.section))
        });
        Ok(primes)
    }

    /// Prime-cycle factors `(period, scaled circ)` with their multiplicities.
    fn prime_factor_counts<N: Exact>(
        &self,
        order: usize,
        theta: &ScaledTheta<N>,
    ) -> Option<BTreeMap<(usize, BigInt), u64>> {
        let mut factors: BTreeMap<(usize, N), u64> = BTreeMap::new();
        let ok = self.for_each_prime(order, theta, |word, circ| {
            if !circ.is_zero() {
                *factors.entry((word.len(), circ)).or_default() += 1;
            }
        });
        ok.then(|| {
            factors
                .into_iter()
                .map(|((p, c), k)| ((p, c.to_big()), k))
                .collect()
        })
    }

    /// `Π 1/(1 − circ(π[x]) t^{ϖ([x])})` over prime cycles, truncated at `t^order`.
    /// Equal factors are collected and applied as one power.
    pub fn euler_product_series(
        &self,
        order: usize,
        limit: EnumerationLimit,
    ) -> Result<TruncatedSeries, ZetaError> {
        limit.check(self.digraph().arc_count(), order)?;
        let mut series = TruncatedSeries::one(order);
        let theta = ScaledTheta::new(self);
        let factors = with_fallback(
            &theta,
            |t| self.prime_factor_counts(order, t),
            |t| self.prime_factor_counts(order, t),
        );
        for ((period, circ), multiplicity) in factors {
            series.mul_geometric_power(&theta.unscale(circ, period), period, multiplicity);
        }
        Ok(series)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::Digraph;
    use crate::zeta::{preset_weights, Preset, WeightScheme};

    fn instance(d: Digraph, w: impl Fn(&Digraph) -> WeightScheme) -> ZetaInstance {
        let w = w(&d);
        ZetaInstance::with_user_pairs::<&str>(d, &[], w).unwrap()
    }

    fn three_cycle() -> ZetaInstance {
        let d = Digraph::new(3, [("x", 1, 2), ("y", 2, 3), ("z", 3, 1)]).unwrap();
        instance(d, |d| preset_weights(d, &Preset::Ihara).unwrap())
    }

    #[test]
    fn limit_arithmetic() {
        let lim = EnumerationLimit(1000);
        assert!(lim.allows(10, 3));
        assert!(!lim.allows(10, 4));
        assert!(lim.allows(1, 10_000));
        assert_eq!(lim.max_depth(10, 8), 3);
        assert!(matches!(
            lim.check(11, 3),
            Err(ZetaError::EnumerationLimit {
                arcs: 11,
                length: 3,
                ..
            })
        ));
    }

    #[test]
    fn three_cycle_sections() {
        let z = three_cycle();
        let lim = EnumerationLimit::default();
        assert_eq!(
            z.n_m_bruteforce(3, lim).unwrap(),
            Rational::from_integer(3.into())
        );
        assert_eq!(z.n_m_bruteforce(4, lim).unwrap(), Rational::zero());
        assert_eq!(z.count_reduced_closed_paths(3, lim).unwrap(), 3);
        let primes = z.enumerate_prime_cycles(6, lim).unwrap();
        assert_eq!(primes.len(), 1);
        assert_eq!(primes[0].period, 3);
        assert_eq!(primes[0].representative.section, [0, 1, 2]);
    }

    #[test]
    fn zero_period_is_rejected() {
        let z = three_cycle();
        assert!(z.n_m_bruteforce(0, EnumerationLimit::default()).is_err());
    }

    #[test]
    fn minimum_period_detects_repetition() {
        assert_eq!(
            ClosedPath {
                section: vec![1, 2, 1, 2]
            }
            .minimum_period(),
            2
        );
        assert_eq!(
            ClosedPath {
                section: vec![1, 2, 2]
            }
            .minimum_period(),
            3
        );
        assert_eq!(ClosedPath { section: vec![4] }.minimum_period(), 1);
    }

    #[test]
    fn loop_backtracks_onto_itself() {
        let d = Digraph::new(1, [("l", 1, 1)]).unwrap();
        let z = instance(d, |d| preset_weights(d, &Preset::Ihara).unwrap());
        let lim = EnumerationLimit::default();
        assert_eq!(z.count_reduced_closed_paths(1, lim).unwrap(), 0);
        let primes = z.enumerate_prime_cycles(4, lim).unwrap();
        assert_eq!(primes.len(), 1);
        assert_eq!(primes[0].circ, Rational::zero());
    }
}
