use num_traits::One;

use crate::algebra::{Polynomial, RatFunMatrix, Rational, RationalFunction};
use crate::digraph::{adjacency_and_degree, UndirectedGraph};

/// `(1 − t²)^{|E| − |V|} det(I − tA_Γ + t²(D_Γ − I))`, the classical closed form
/// of the reciprocal Ihara zeta function of a graph without loops.
pub fn bass_inverse_zeta(g: &UndirectedGraph) -> RationalFunction {
    let n = g.vertex_count();
    let (adjacency, degree) = adjacency_and_degree(g);
    let t = Polynomial::t();
    let t2 = &t * &t;
    let matrix = RatFunMatrix::from_fn(n, n, |i, j| {
        let diag = if i == j {
            Rational::one()
        } else {
            Rational::from_integer(0.into())
        };
        let poly = Polynomial::constant(diag.clone()) - t.scale(&adjacency[(i, j)])
            + t2.scale(&(&degree[(i, j)] - &diag));
        RationalFunction::from_poly(poly)
    });
    let det = matrix.determinant().expect("square");
    let exponent = g.edges().len() as i32 - n as i32;
    let one_minus_t2 = RationalFunction::from_poly(Polynomial::one() - t2);
    let power = one_minus_t2.pow(exponent).expect("1 - t^2 is nonzero");
    &power * &det
}
