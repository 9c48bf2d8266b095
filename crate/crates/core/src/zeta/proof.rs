//! The chain of identities that turns `det(I − tM)` into the vertex-sized
//! determinant, each evaluated exactly so that a broken step is named.

use num_traits::One;

use super::ZetaInstance;
use crate::algebra::{Matrix, Polynomial, RatFunMatrix, Rational, RationalFunction};
use crate::digraph::ArcClass;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub name: &'static str,
    /// `None` when the identity holds; otherwise the first offending entry.
    pub failure: Option<String>,
}

impl IdentityCheck {
    pub fn holds(&self) -> bool {
        self.failure.is_none()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProofReport {
    pub checks: Vec<IdentityCheck>,
}

impl ProofReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(IdentityCheck::holds)
    }

    pub fn failures(&self) -> impl Iterator<Item = &IdentityCheck> {
        self.checks.iter().filter(|c| !c.holds())
    }
}

fn compare<T: PartialEq + std::fmt::Display>(
    name: &'static str,
    got: &Matrix<T>,
    expected: &Matrix<T>,
) -> IdentityCheck {
    let failure = if got.rows() != expected.rows() || got.cols() != expected.cols() {
        Some(format!(
            "shape {}x{} vs {}x{}",
            got.rows(),
            got.cols(),
            expected.rows(),
            expected.cols()
        ))
    } else {
        got.entries()
            .zip(expected.entries())
            .find(|((_, _, a), (_, _, b))| a != b)
            .map(|((i, j, a), (_, _, b))| format!("entry ({},{}): {} != {}", i + 1, j + 1, a, b))
    };
    IdentityCheck { name, failure }
}

fn compare_scalar<T: PartialEq + std::fmt::Display>(
    name: &'static str,
    got: &T,
    expected: &T,
) -> IdentityCheck {
    IdentityCheck {
        name,
        failure: (got != expected).then(|| format!("{got} != {expected}")),
    }
}

fn lift(m: &Matrix<Rational>) -> RatFunMatrix {
    m.to_ratfun()
}

impl ZetaInstance {
    /// Restrictions `L(a)`, `J(a)`, `K(a)` of `L`, `J`, `K` to the arcs `E(a)`.
    fn block_factors(&self, a: usize) -> (Matrix<Rational>, Matrix<Rational>, Matrix<Rational>) {
        let arcs = self.block_arcs(a);
        let d = self.digraph();
        let w = self.weights();
        let n = d.vertex_count();
        let pick = |cond: bool, v: &Rational| {
            if cond {
                v.clone()
            } else {
                Rational::from_integer(0.into())
            }
        };
        let l = Matrix::from_fn(n, arcs.len(), |u, j| {
            pick(d.arc(arcs[j]).tail == u + 1, w.tau(arcs[j]))
        });
        let j = Matrix::from_fn(arcs.len(), arcs.len(), |i, k| {
            pick(
                self.pairing().inverse_of(arcs[i]) == Some(arcs[k]),
                w.upsilon(arcs[k]),
            )
        });
        let k = Matrix::from_fn(arcs.len(), n, |i, v| {
            pick(d.arc(arcs[i]).head == v + 1, &Rational::one())
        });
        (l, j, k)
    }

    /// Evaluates every step from `det(I − tM)` to `det(I+tJ)·det(I − tA_Δ + t²B_Δ)`.
    pub fn proof_identity_check(&self) -> ProofReport {
        let mut checks = Vec::new();
        let hjkl = self.hjkl();
        let m = self.edge_matrix();
        let n_arcs = m.rows();
        let n = self.digraph().vertex_count();
        let t = RationalFunction::from_poly(Polynomial::t());

        checks.push(compare(
            "M = H - J",
            &m,
            &hjkl.h.try_sub(&hjkl.j).expect("same shape"),
        ));
        checks.push(compare(
            "H = K L",
            &hjkl.h,
            &hjkl.k.try_mul(&hjkl.l).expect("conformable"),
        ));

        let (l, k) = (lift(&hjkl.l), lift(&hjkl.k));
        let i_plus_tj = RatFunMatrix::identity(n_arcs)
            .try_add(&lift(&hjkl.j).scale(&t))
            .expect("same shape");

        let product_of_c: Polynomial = self
            .block_heads()
            .into_iter()
            .fold(Polynomial::one(), |acc, a| &acc * &self.c_factor(a));
        let j_direct = i_plus_tj.determinant().expect("square");
        let j_blocks = RationalFunction::from_poly(self.j_block_determinant());
        checks.push(compare_scalar(
            "det(I+tJ) blockwise = direct",
            &j_blocks,
            &j_direct,
        ));
        checks.push(compare_scalar(
            "det(I+tJ) = product of c_a over A minus A(-1)",
            &j_blocks,
            &RationalFunction::from_poly(product_of_c),
        ));

        let a_mat = self.weighted_adjacency();
        let b_mat = self.weighted_backtrack();
        let target = a_mat.try_sub(&b_mat.scale(&t)).expect("same shape");

        // Route 1: the per-block case split, c_a⁻¹(I(a) − tJ(a)) or c_a⁻¹ I(a).
        let mut r = RatFunMatrix::zeros(n, n);
        let mut s = RatFunMatrix::zeros(n, n);
        // Route 2: per-block inverses computed by elimination.
        let mut blockwise = RatFunMatrix::zeros(n, n);
        for a in self.block_heads() {
            let (la, ja, ka) = self.block_factors(a);
            let c_inv =
                RationalFunction::new(Polynomial::one(), self.c_factor(a)).expect("c_a(0) = 1");
            let lk = lift(&la.try_mul(&ka).expect("conformable"));
            r = r.try_add(&lk.scale(&c_inv)).expect("same shape");
            if self.classification().class_of(a) == ArcClass::Paired {
                let ljk = lift(
                    &la.try_mul(&ja)
                        .and_then(|x| x.try_mul(&ka))
                        .expect("conformable"),
                );
                s = s.try_add(&ljk.scale(&c_inv)).expect("same shape");
            }
            let block_inv = self
                .block_identity_plus_tj(a)
                .to_ratfun()
                .inverse()
                .expect("I(a) + tJ(a) is invertible");
            let term = lift(&la)
                .try_mul(&block_inv)
                .and_then(|x| x.try_mul(&lift(&ka)))
                .expect("conformable");
            blockwise = blockwise.try_add(&term).expect("same shape");
        }
        checks.push(compare("r_uv = a_uv", &r, &a_mat));
        checks.push(compare("s_uv = b_uv", &s, &b_mat));
        let case_split = r.try_sub(&s.scale(&t)).expect("same shape");
        checks.push(compare(
            "case-split L(I+tJ)^-1 K = A - tB",
            &case_split,
            &target,
        ));
        checks.push(compare(
            "blockwise L(I+tJ)^-1 K = A - tB",
            &blockwise,
            &target,
        ));

        // Route 3: invert the whole of I + tJ.
        let direct = i_plus_tj
            .inverse()
            .and_then(|inv| l.try_mul(&inv))
            .and_then(|x| x.try_mul(&k))
            .expect("I + tJ is invertible");
        checks.push(compare("direct L(I+tJ)^-1 K = A - tB", &direct, &target));

        let lhs = RationalFunction::from_poly(self.edge_determinant());
        let reduced = RatFunMatrix::identity(n)
            .try_sub(&direct.scale(&t))
            .and_then(|x| x.determinant())
            .expect("square");
        checks.push(compare_scalar(
            "det(I-tM) = det(I+tJ) det(I - tL(I+tJ)^-1 K)",
            &lhs,
            &(&j_direct * &reduced),
        ));
        ProofReport { checks }
    }
}
