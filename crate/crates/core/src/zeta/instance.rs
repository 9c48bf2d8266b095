use num_traits::{One, Zero};

use super::paths::EnumerationLimit;
use super::{WeightScheme, ZetaError};
use crate::algebra::{
    Matrix, Polynomial, RatFunMatrix, Rational, RationalFunction, TruncatedSeries,
};
use crate::digraph::{
    canonical_inverse_pairing, classify_arcs, ArcClass, ArcClassification, Digraph, GraphError,
    InversePairing,
};

/// A digraph with a fixed inverse pairing and weight scheme: everything the
/// zeta function depends on.
///
/// Edge-indexed matrices (`M`, `H`, `J`, `K`, `L`) use the block order: each
/// `A⁽¹⁾` arc followed by its inverse, then the loops, then the arcs without
/// inverse, each group in input order. `J` is block diagonal in that order.
#[derive(Clone, Debug)]
pub struct ZetaInstance {
    digraph: Digraph,
    pairing: InversePairing,
    weights: WeightScheme,
    classes: ArcClassification,
    block_order: Vec<usize>,
    j_sign_flipped: bool,
}

/// The four factors of `M = H - J`, `H = K L`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hjkl {
    pub h: Matrix<Rational>,
    pub j: Matrix<Rational>,
    pub k: Matrix<Rational>,
    pub l: Matrix<Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IharaZeta {
    pub zeta: RationalFunction,
    /// `det(I + tJ)`
    pub j_determinant: Polynomial,
    /// `det(I - t A + t² B)`
    pub vertex_determinant: RationalFunction,
}

/// All four expressions side by side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZetaReport {
    pub hashimoto: RationalFunction,
    pub ihara: IharaZeta,
    pub exp_series: TruncatedSeries,
    pub euler_series: TruncatedSeries,
    pub order: usize,
}

impl ZetaReport {
    pub fn main_theorem_holds(&self) -> bool {
        self.hashimoto == self.ihara.zeta
    }
}

impl ZetaInstance {
    pub fn new(
        digraph: Digraph,
        pairing: InversePairing,
        weights: WeightScheme,
    ) -> Result<Self, ZetaError> {
        if weights.len() != digraph.arc_count() {
            return Err(ZetaError::WeightCoverage {
                expected: digraph.arc_count(),
                got: weights.len(),
            });
        }
        let classes = classify_arcs(&digraph, &pairing);
        let mut block_order = Vec::with_capacity(digraph.arc_count());
        for a in classes.members(ArcClass::Paired) {
            block_order.push(a);
            block_order.push(pairing.inverse_of(a).expect("paired arc"));
        }
        block_order.extend(classes.members(ArcClass::Loop));
        block_order.extend(classes.without_inverse());
        Ok(ZetaInstance {
            digraph,
            pairing,
            weights,
            classes,
            block_order,
            j_sign_flipped: false,
        })
    }

    /// Completes `user_pairs` to the canonical pairing first.
    pub fn with_user_pairs<S: AsRef<str>>(
        digraph: Digraph,
        user_pairs: &[(S, S)],
        weights: WeightScheme,
    ) -> Result<Self, ZetaError> {
        let pairing = canonical_inverse_pairing(&digraph, user_pairs)?;
        Self::new(digraph, pairing, weights)
    }

    /// Negative-control fixture: builds `M = H + J` instead of `H - J`, which
    /// must make the two determinant expressions disagree.
    #[doc(hidden)]
    pub fn with_flipped_j_sign(mut self) -> Self {
        self.j_sign_flipped = true;
        self
    }

    pub fn digraph(&self) -> &Digraph {
        &self.digraph
    }

    pub fn pairing(&self) -> &InversePairing {
        &self.pairing
    }

    pub fn weights(&self) -> &WeightScheme {
        &self.weights
    }

    pub fn classification(&self) -> &ArcClassification {
        &self.classes
    }

    /// Arc indices in block order.
    pub fn block_order(&self) -> &[usize] {
        &self.block_order
    }

    /// `self ⊔ other` with both pairings and weight schemes carried over.
    pub fn disjoint_union(&self, other: &ZetaInstance) -> Result<ZetaInstance, ZetaError> {
        let digraph = self.digraph.disjoint_union(&other.digraph)?;
        let mut pairs = self.pairing.id_pairs(&self.digraph);
        pairs.extend(other.pairing.id_pairs(&other.digraph));
        let weights = self.weights.concat(&other.weights);
        Self::with_user_pairs(digraph, &pairs, weights)
    }

    /// `θᴳ(a, a') = τ(a')·[𝔥(a) = 𝔱(a')] − υ(a')·[a⁻¹ = a']`, by arc index.
    pub fn theta(&self, a: usize, b: usize) -> Rational {
        let mut value = Rational::zero();
        if self.digraph.arc(a).head == self.digraph.arc(b).tail {
            value += self.weights.tau(b);
        }
        if self.pairing.inverse_of(a) == Some(b) {
            if self.j_sign_flipped {
                value += self.weights.upsilon(b);
            } else {
                value -= self.weights.upsilon(b);
            }
        }
        value
    }

    pub fn theta_by_id(&self, a: &str, b: &str) -> Result<Rational, GraphError> {
        Ok(self.theta(self.digraph.index_of(a)?, self.digraph.index_of(b)?))
    }

    /// The edge matrix `M = (θᴳ(a, a'))` in block order.
    pub fn edge_matrix(&self) -> Matrix<Rational> {
        let order = &self.block_order;
        Matrix::from_fn(order.len(), order.len(), |i, j| {
            self.theta(order[i], order[j])
        })
    }

    pub fn hjkl(&self) -> Hjkl {
        let order = &self.block_order;
        let n = order.len();
        let v = self.digraph.vertex_count();
        let arc = |i: usize| self.digraph.arc(order[i]);
        let indicator = |cond: bool, w: &Rational| if cond { w.clone() } else { Rational::zero() };
        Hjkl {
            h: Matrix::from_fn(n, n, |i, j| {
                indicator(arc(i).head == arc(j).tail, self.weights.tau(order[j]))
            }),
            j: Matrix::from_fn(n, n, |i, j| {
                indicator(
                    self.pairing.inverse_of(order[i]) == Some(order[j]),
                    self.weights.upsilon(order[j]),
                )
            }),
            k: Matrix::from_fn(n, v, |i, x| {
                indicator(arc(i).head == x + 1, &Rational::one())
            }),
            l: Matrix::from_fn(v, n, |x, j| {
                indicator(arc(j).tail == x + 1, self.weights.tau(order[j]))
            }),
        }
    }

    /// `c_a(t) = 1 − Π_{α ∈ E(a)} (−υ(α) t)`; shared by an arc and its inverse.
    pub fn c_factor(&self, a: usize) -> Polynomial {
        let ups = self.weights.upsilon(a);
        match self.classes.class_of(a) {
            ArcClass::Paired | ArcClass::Inverse => {
                let inv = self.pairing.inverse_of(a).expect("paired arc");
                let prod = ups * self.weights.upsilon(inv);
                Polynomial::new(vec![Rational::one(), Rational::zero(), -prod])
            }
            ArcClass::Loop => Polynomial::new(vec![Rational::one(), ups.clone()]),
            ArcClass::Unmatched | ArcClass::OneWay => Polynomial::one(),
        }
    }

    pub fn c_factor_by_id(&self, a: &str) -> Result<Polynomial, GraphError> {
        Ok(self.c_factor(self.digraph.index_of(a)?))
    }

    fn over_c(&self, a: usize, numerator: Rational) -> RationalFunction {
        RationalFunction::new(Polynomial::constant(numerator), self.c_factor(a))
            .expect("c_a(0) = 1")
    }

    /// `A_Δ`: `a_uv = Σ_{a ∈ A_uv} τ(a)/c_a(t)`.
    pub fn weighted_adjacency(&self) -> RatFunMatrix {
        let n = self.digraph.vertex_count();
        let mut m = RatFunMatrix::zeros(n, n);
        for (i, arc) in self.digraph.arcs().iter().enumerate() {
            let term = self.over_c(i, self.weights.tau(i).clone());
            let cell = &mut m[(arc.tail - 1, arc.head - 1)];
            *cell = &*cell + &term;
        }
        m
    }

    /// `B_Δ`: diagonal, `b_uu = Σ τ(a) υ(a⁻¹)/c_a(t)` over non-loop arcs with
    /// an inverse whose tail is `u` (both `A⁽¹⁾` and `A⁽⁻¹⁾` arcs count).
    pub fn weighted_backtrack(&self) -> RatFunMatrix {
        let n = self.digraph.vertex_count();
        let mut m = RatFunMatrix::zeros(n, n);
        for (i, arc) in self.digraph.arcs().iter().enumerate() {
            if !matches!(
                self.classes.class_of(i),
                ArcClass::Paired | ArcClass::Inverse
            ) {
                continue;
            }
            let inv = self.pairing.inverse_of(i).expect("paired arc");
            let term = self.over_c(i, self.weights.tau(i) * self.weights.upsilon(inv));
            let cell = &mut m[(arc.tail - 1, arc.tail - 1)];
            *cell = &*cell + &term;
        }
        m
    }

    /// The arcs `E(a)` spanned by the `J` block headed by `a` (`a ∉ A⁽⁻¹⁾`).
    pub(crate) fn block_arcs(&self, a: usize) -> Vec<usize> {
        match self.classes.class_of(a) {
            ArcClass::Paired => vec![a, self.pairing.inverse_of(a).expect("paired arc")],
            _ => vec![a],
        }
    }

    /// Arcs heading a `J` block: `A ∖ A⁽⁻¹⁾`, in block order.
    pub(crate) fn block_heads(&self) -> Vec<usize> {
        self.block_order
            .iter()
            .copied()
            .filter(|&a| self.classes.class_of(a) != ArcClass::Inverse)
            .collect()
    }

    /// `I(a) + t J(a)` for the block headed by `a`.
    pub(crate) fn block_identity_plus_tj(&self, a: usize) -> Matrix<Polynomial> {
        let arcs = self.block_arcs(a);
        Matrix::from_fn(arcs.len(), arcs.len(), |i, j| {
            let diag = if i == j {
                Rational::one()
            } else {
                Rational::zero()
            };
            let jv = if self.pairing.inverse_of(arcs[i]) == Some(arcs[j]) {
                self.weights.upsilon(arcs[j]).clone()
            } else {
                Rational::zero()
            };
            Polynomial::new(vec![diag, jv])
        })
    }

    /// `det(I + tJ)`, one block at a time.
    pub fn j_block_determinant(&self) -> Polynomial {
        self.block_heads()
            .into_iter()
            .fold(Polynomial::one(), |acc, a| {
                let block = self
                    .block_identity_plus_tj(a)
                    .det_bareiss()
                    .expect("blocks are square");
                &acc * &block
            })
    }

    /// `det(I − tM)`.
    pub fn edge_determinant(&self) -> Polynomial {
        self.edge_matrix()
            .identity_minus_t()
            .and_then(|m| m.det_bareiss())
            .expect("edge matrix is square")
    }

    /// `1/det(I − tM)`.
    pub fn hashimoto_zeta(&self) -> RationalFunction {
        RationalFunction::new(Polynomial::one(), self.edge_determinant())
            .expect("det(I - tM) has constant term 1")
    }

    /// `I − tA_Δ + t²B_Δ`.
    pub fn vertex_matrix(&self) -> RatFunMatrix {
        let t = RationalFunction::from_poly(Polynomial::t());
        let t2 = &t * &t;
        let a = self.weighted_adjacency().scale(&t);
        let b = self.weighted_backtrack().scale(&t2);
        RatFunMatrix::identity(self.digraph.vertex_count())
            .try_sub(&a)
            .and_then(|m| m.try_add(&b))
            .expect("vertex matrices share a shape")
    }

    /// `1/(det(I + tJ) det(I − tA_Δ + t²B_Δ))` together with both factors.
    pub fn ihara_zeta(&self) -> IharaZeta {
        let j_determinant = self.j_block_determinant();
        let vertex_determinant = self
            .vertex_matrix()
            .determinant()
            .expect("vertex matrix is square");
        let product = &RationalFunction::from_poly(j_determinant.clone()) * &vertex_determinant;
        let zeta = product.inv().expect("determinant product is 1 at t = 0");
        IharaZeta {
            zeta,
            j_determinant,
            vertex_determinant,
        }
    }

    /// `N_m = tr(M^m)`.
    pub fn n_m_trace(&self, m: usize) -> Result<Rational, ZetaError> {
        Ok(self.edge_matrix().trace_power(m)?)
    }

    /// `[N_1, ..., N_order]` from the edge matrix powers.
    pub fn n_m_traces(&self, order: usize) -> Result<Vec<Rational>, ZetaError> {
        Ok(self.edge_matrix().powers_traces(order)?)
    }

    /// `exp(Σ_{m ≤ order} N_m t^m / m)` truncated at `t^order`.
    pub fn exp_expression_series(&self, order: usize) -> Result<TruncatedSeries, ZetaError> {
        let mut log = TruncatedSeries::zero(order);
        if order > 0 {
            for (m, n_m) in self.n_m_traces(order)?.into_iter().enumerate() {
                let m = m + 1;
                log.set_coeff(m, n_m / Rational::from_integer(m.into()));
            }
        }
        Ok(log.exp()?)
    }

    pub fn hashimoto_series(&self, order: usize) -> TruncatedSeries {
        TruncatedSeries::from_ratfun(&self.hashimoto_zeta(), order)
            .expect("hashimoto zeta is a power series")
    }

    pub fn report(&self, order: usize, limit: EnumerationLimit) -> Result<ZetaReport, ZetaError> {
        Ok(ZetaReport {
            hashimoto: self.hashimoto_zeta(),
            ihara: self.ihara_zeta(),
            exp_series: self.exp_expression_series(order)?,
            euler_series: self.euler_product_series(order, limit)?,
            order,
        })
    }
}
