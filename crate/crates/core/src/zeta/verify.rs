use std::fmt;

use num_traits::One;

use super::{EnumerationLimit, ZetaInstance};
use crate::algebra::{Polynomial, Rational, RationalFunction, TruncatedSeries};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BatteryOptions {
    /// Series comparisons run through `t^order`.
    pub order: usize,
    pub limit: EnumerationLimit,
}

impl Default for BatteryOptions {
    fn default() -> Self {
        BatteryOptions {
            order: 12,
            limit: EnumerationLimit::default(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail(String),
    Skip(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: String,
    pub status: Status,
}

impl CheckOutcome {
    fn new(name: impl Into<String>, failure: Option<String>) -> Self {
        CheckOutcome {
            name: name.into(),
            status: failure.map_or(Status::Pass, Status::Fail),
        }
    }

    pub fn failed(&self) -> bool {
        matches!(self.status, Status::Fail(_))
    }
}

impl fmt::Display for CheckOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.status {
            Status::Pass => write!(f, "PASS  {}", self.name),
            Status::Fail(why) => write!(f, "FAIL  {}: {}", self.name, why),
            Status::Skip(why) => write!(f, "SKIP  {}: {}", self.name, why),
        }
    }
}

/// First power of `t` at which `a·den(b) − b·den(a)` is nonzero.
fn ratfun_mismatch(a: &RationalFunction, b: &RationalFunction) -> Option<String> {
    if a == b {
        return None;
    }
    let cross: Polynomial = a.num() * b.den() - b.num() * a.den();
    let k = cross.valuation().unwrap_or(0);
    Some(format!(
        "{a} != {b} (cross-multiplied difference starts at t^{k} with coefficient {})",
        cross.coeff(k)
    ))
}

fn series_mismatch(a: &TruncatedSeries, b: &TruncatedSeries) -> Option<String> {
    let order = a.order().min(b.order());
    (0..=order)
        .find(|&k| a.coeff(k) != b.coeff(k))
        .map(|k| format!("coefficient of t^{k}: {} != {}", a.coeff(k), b.coeff(k)))
}

/// Runs every identity the zeta function must satisfy on one instance.
pub fn run_battery(z: &ZetaInstance, opts: &BatteryOptions) -> Vec<CheckOutcome> {
    let mut out = Vec::new();
    let arcs = z.digraph().arc_count();
    let depth = opts.limit.max_depth(arcs, opts.order);

    let hashimoto = z.hashimoto_zeta();
    let ihara = z.ihara_zeta();
    out.push(CheckOutcome::new(
        "main theorem: hashimoto = ihara",
        ratfun_mismatch(&hashimoto, &ihara.zeta),
    ));
    out.push(CheckOutcome::new(
        "zeta has constant term 1",
        (!(hashimoto.den().coeff(0).is_one() && hashimoto.num().coeff(0).is_one()))
            .then(|| format!("Z = {hashimoto}")),
    ));

    let product = z
        .block_heads()
        .into_iter()
        .fold(Polynomial::one(), |acc, a| &acc * &z.c_factor(a));
    let jdet = z.j_block_determinant();
    out.push(CheckOutcome::new(
        "det(I+tJ) = product of c_a",
        (jdet != product).then(|| format!("{jdet} != {product}")),
    ));

    let traces = match z.n_m_traces(opts.order.max(1)) {
        Ok(t) => t,
        Err(e) => {
            out.push(CheckOutcome::new("N_m traces", Some(e.to_string())));
            return out;
        }
    };
    if depth == 0 {
        out.push(CheckOutcome {
            name: "N_m trace = brute force".into(),
            status: Status::Skip("enumeration limit".into()),
        });
    } else {
        let failure = match z.n_m_bruteforce_upto(depth, opts.limit) {
            Ok(brute) => (1..=depth).find_map(|m| {
                (brute[m - 1] != traces[m - 1]).then(|| {
                    format!(
                        "m={m}: trace {} != brute force {}",
                        traces[m - 1],
                        brute[m - 1]
                    )
                })
            }),
            Err(e) => Some(e.to_string()),
        };
        out.push(CheckOutcome::new(
            format!("N_m trace = brute force (m=1..{depth})"),
            failure,
        ));
        if z.weights().is_ihara() {
            let failure = match z.count_reduced_closed_paths_upto(depth, opts.limit) {
                Ok(counts) => (1..=depth).find_map(|m| {
                    let c = counts[m - 1];
                    (traces[m - 1] != Rational::from_integer(c.into()))
                        .then(|| format!("m={m}: trace {} != reduced count {c}", traces[m - 1]))
                }),
                Err(e) => Some(e.to_string()),
            };
            out.push(CheckOutcome::new(
                format!("N_m = reduced closed paths (m=1..{depth})"),
                failure,
            ));
        }
    }

    let h_series = TruncatedSeries::from_ratfun(&hashimoto, opts.order);
    match (&h_series, z.exp_expression_series(opts.order)) {
        (Ok(h), Ok(e)) => out.push(CheckOutcome::new(
            format!("exp = hashimoto up to t^{}", opts.order),
            series_mismatch(&e, h),
        )),
        (Err(e), _) => out.push(CheckOutcome::new("hashimoto series", Some(e.to_string()))),
        (_, Err(e)) => out.push(CheckOutcome::new("exp series", Some(e.to_string()))),
    }
    if depth == 0 {
        out.push(CheckOutcome {
            name: "euler = hashimoto".into(),
            status: Status::Skip("enumeration limit".into()),
        });
    } else if let Ok(h) = &h_series {
        let failure = match z.euler_product_series(depth, opts.limit) {
            Ok(e) => series_mismatch(&e, &h.truncate(depth)),
            Err(e) => Some(e.to_string()),
        };
        out.push(CheckOutcome::new(
            format!("euler = hashimoto up to t^{depth}"),
            failure,
        ));
    }

    for check in z.proof_identity_check().checks {
        out.push(CheckOutcome::new(
            format!("proof: {}", check.name),
            check.failure,
        ));
    }
    out
}
