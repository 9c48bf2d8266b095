//! Finite digraphs with multi-arcs and multi-loops, the inverse-arc pairing,
//! and the five-way arc classification used by the vertex-sized zeta expression.
//!
//! Vertices are the dense indices `1..=n`. Arcs keep their input order, which
//! is what the canonical pairing and every matrix ordering are derived from.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use num_traits::Zero;
use thiserror::Error;

use crate::algebra::{Matrix, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("duplicate arc id `{0}`")]
    DuplicateArc(String),
    #[error("arc `{arc}`: vertex {vertex} out of range 1..={vertex_count}")]
    VertexOutOfRange {
        arc: String,
        vertex: usize,
        vertex_count: usize,
    },
    #[error("edge {{{0}, {1}}}: vertex out of range 1..={2}")]
    EdgeOutOfRange(usize, usize, usize),
    #[error("unknown arc `{0}`")]
    UnknownArc(String),
    #[error("inverse must join opposite arcs: `{0}` and `{1}`")]
    NotOpposite(String, String),
    #[error("loop `{0}` is self-inverse and cannot be paired with `{1}`")]
    LoopPairedWithOther(String, String),
    #[error("arc `{0}` is given two different inverses; pairing is not an injection")]
    NotAnInjection(String),
}

/// User token naming an arc.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ArcId(String);

impl ArcId {
    pub fn new(id: impl Into<String>) -> Self {
        ArcId(id.into())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for ArcId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::borrow::Borrow<str> for ArcId {
    fn borrow(&self) -> &str {
        &self.0
    }
}

impl From<&str> for ArcId {
    fn from(s: &str) -> Self {
        ArcId(s.to_string())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arc {
    pub id: ArcId,
    pub tail: usize,
    pub head: usize,
}

impl Arc {
    pub fn is_loop(&self) -> bool {
        self.tail == self.head
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Digraph {
    vertex_count: usize,
    arcs: Vec<Arc>,
    index: HashMap<ArcId, usize>,
}

impl Digraph {
    pub fn new<I, S>(vertex_count: usize, arcs: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (S, usize, usize)>,
        S: Into<String>,
    {
        let mut list = Vec::new();
        let mut index = HashMap::new();
        for (id, tail, head) in arcs {
            let id = ArcId::new(id);
            for vertex in [tail, head] {
                if vertex == 0 || vertex > vertex_count {
                    return Err(GraphError::VertexOutOfRange {
                        arc: id.0,
                        vertex,
                        vertex_count,
                    });
                }
            }
            if index.insert(id.clone(), list.len()).is_some() {
                return Err(GraphError::DuplicateArc(id.0));
            }
            list.push(Arc { id, tail, head });
        }
        Ok(Digraph {
            vertex_count,
            arcs: list,
            index,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn arc(&self, index: usize) -> &Arc {
        &self.arcs[index]
    }

    pub fn index_of(&self, id: &str) -> Result<usize, GraphError> {
        self.index
            .get(id)
            .copied()
            .ok_or_else(|| GraphError::UnknownArc(id.to_string()))
    }

    /// Indices of the arcs `u -> v`, in input order.
    pub fn arcs_between(&self, u: usize, v: usize) -> Vec<usize> {
        self.arcs
            .iter()
            .enumerate()
            .filter(|(_, a)| a.tail == u && a.head == v)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn loop_count(&self) -> usize {
        self.arcs.iter().filter(|a| a.is_loop()).count()
    }

    /// Connectivity in the strong pairwise sense: every two distinct vertices
    /// have at least one arc between them, in either direction.
    pub fn is_connected(&self) -> bool {
        let mut adjacent = BTreeSet::new();
        for a in self.arcs.iter().filter(|a| !a.is_loop()) {
            adjacent.insert((a.tail.min(a.head), a.tail.max(a.head)));
        }
        let n = self.vertex_count;
        adjacent.len() == n * n.saturating_sub(1) / 2
    }

    /// `self ⊔ other`; the second digraph's vertices are shifted by `self.vertex_count()`.
    pub fn disjoint_union(&self, other: &Digraph) -> Result<Digraph, GraphError> {
        let shift = self.vertex_count;
        let arcs = self
            .arcs
            .iter()
            .map(|a| (a.id.0.clone(), a.tail, a.head))
            .chain(
                other
                    .arcs
                    .iter()
                    .map(|a| (a.id.0.clone(), a.tail + shift, a.head + shift)),
            );
        Digraph::new(self.vertex_count + other.vertex_count, arcs)
    }

    /// Which direction between distinct `u` and `v` is the designated smaller
    /// side: the one with fewer arcs, ties going to the side whose tail is the
    /// smaller vertex.
    fn smaller_side(&self, u: usize, v: usize) -> (usize, usize) {
        let forward = self.arcs_between(u, v).len();
        let backward = self.arcs_between(v, u).len();
        if forward < backward || (forward == backward && u < v) {
            (u, v)
        } else {
            (v, u)
        }
    }
}

/// The involution `a ↦ a⁻¹` on arcs that have an inverse.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct InversePairing {
    partner: Vec<Option<usize>>,
}

impl InversePairing {
    pub fn inverse_of(&self, arc: usize) -> Option<usize> {
        self.partner[arc]
    }

    pub fn has_inverse(&self, arc: usize) -> bool {
        self.partner[arc].is_some()
    }

    /// Each pair once, as `(a, a⁻¹)` with `a <= a⁻¹` in arc order; loops appear as `(l, l)`.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.partner
            .iter()
            .enumerate()
            .filter_map(|(a, p)| p.filter(|&b| a <= b).map(|b| (a, b)))
            .collect()
    }

    /// Non-loop pairs by arc id, in the form accepted as user pairs.
    pub fn id_pairs(&self, d: &Digraph) -> Vec<(String, String)> {
        self.pairs()
            .into_iter()
            .filter(|(a, b)| a != b)
            .map(|(a, b)| (d.arc(a).id.0.clone(), d.arc(b).id.0.clone()))
            .collect()
    }
}

/// Builds the pairing: loops are self-inverse, user pairs are honored, and
/// for each vertex pair the smaller side is injected into the larger side by
/// matching the remaining arcs in input order.
pub fn canonical_inverse_pairing<S: AsRef<str>>(
    d: &Digraph,
    user_pairs: &[(S, S)],
) -> Result<InversePairing, GraphError> {
    let mut partner: Vec<Option<usize>> = d
        .arcs
        .iter()
        .enumerate()
        .map(|(i, a)| a.is_loop().then_some(i))
        .collect();

    for (x, y) in user_pairs {
        let (x, y) = (x.as_ref(), y.as_ref());
        let (a, b) = (d.index_of(x)?, d.index_of(y)?);
        let (arc_a, arc_b) = (d.arc(a), d.arc(b));
        if arc_a.is_loop() || arc_b.is_loop() {
            if a == b {
                continue;
            }
            let (l, other) = if arc_a.is_loop() { (x, y) } else { (y, x) };
            return Err(GraphError::LoopPairedWithOther(l.into(), other.into()));
        }
        if arc_a.tail != arc_b.head || arc_a.head != arc_b.tail {
            return Err(GraphError::NotOpposite(x.into(), y.into()));
        }
        for (from, to, name) in [(a, b, x), (b, a, y)] {
            match partner[from] {
                Some(existing) if existing != to => {
                    return Err(GraphError::NotAnInjection(name.into()))
                }
                _ => partner[from] = Some(to),
            }
        }
    }

    for u in 1..=d.vertex_count {
        for v in u + 1..=d.vertex_count {
            let (s, l) = d.smaller_side(u, v);
            let small = d.arcs_between(s, l);
            let large = d.arcs_between(l, s);
            if small.is_empty() || large.is_empty() {
                continue;
            }
            let free: Vec<usize> = large
                .into_iter()
                .filter(|&b| partner[b].is_none())
                .collect();
            let open: Vec<usize> = small
                .into_iter()
                .filter(|&a| partner[a].is_none())
                .collect();
            debug_assert!(open.len() <= free.len());
            for (a, b) in open.into_iter().zip(free) {
                partner[a] = Some(b);
                partner[b] = Some(a);
            }
        }
    }
    Ok(InversePairing { partner })
}

/// Membership of one arc in the partition `A⁽¹⁾ ⊔ A⁽⁻¹⁾ ⊔ Ā⁽¹⁾ ⊔ A⁽²⁾ ⊔ A⁽³⁾`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ArcClass {
    /// On the designated smaller side of a vertex pair: `A⁽¹⁾`.
    Paired,
    /// Image of a `Paired` arc under the pairing: `A⁽⁻¹⁾`.
    Inverse,
    /// Larger-side arc left outside the injection: `Ā⁽¹⁾`.
    Unmatched,
    /// Loop: `A⁽²⁾`.
    Loop,
    /// Arc whose reverse direction is empty: `A⁽³⁾`.
    OneWay,
}

impl ArcClass {
    pub const ALL: [ArcClass; 5] = [
        ArcClass::Paired,
        ArcClass::Inverse,
        ArcClass::Unmatched,
        ArcClass::Loop,
        ArcClass::OneWay,
    ];

    pub fn label(self) -> &'static str {
        match self {
            ArcClass::Paired => "A(1)",
            ArcClass::Inverse => "A(-1)",
            ArcClass::Unmatched => "A(1)bar",
            ArcClass::Loop => "A(2)",
            ArcClass::OneWay => "A(3)",
        }
    }

    /// Member of `A^×`, the arcs without inverse.
    pub fn lacks_inverse(self) -> bool {
        matches!(self, ArcClass::Unmatched | ArcClass::OneWay)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArcClassification {
    pub phi1: BTreeSet<(usize, usize)>,
    pub phi2: BTreeSet<(usize, usize)>,
    pub phi3: BTreeSet<(usize, usize)>,
    classes: Vec<ArcClass>,
}

impl ArcClassification {
    pub fn class_of(&self, arc: usize) -> ArcClass {
        self.classes[arc]
    }

    /// Arc indices of one class, in input order.
    pub fn members(&self, class: ArcClass) -> Vec<usize> {
        self.classes
            .iter()
            .enumerate()
            .filter(|(_, &c)| c == class)
            .map(|(i, _)| i)
            .collect()
    }

    /// `A^× = Ā⁽¹⁾ ⊔ A⁽³⁾`, in input order.
    pub fn without_inverse(&self) -> Vec<usize> {
        self.classes
            .iter()
            .enumerate()
            .filter(|(_, c)| c.lacks_inverse())
            .map(|(i, _)| i)
            .collect()
    }
}

pub fn classify_arcs(d: &Digraph, p: &InversePairing) -> ArcClassification {
    let mut phi1 = BTreeSet::new();
    let mut phi2 = BTreeSet::new();
    let mut phi3 = BTreeSet::new();
    let mut classes = vec![ArcClass::OneWay; d.arc_count()];

    for u in 1..=d.vertex_count {
        let loops = d.arcs_between(u, u);
        if !loops.is_empty() {
            phi2.insert((u, u));
            for l in loops {
                classes[l] = ArcClass::Loop;
            }
        }
        for v in u + 1..=d.vertex_count {
            let (s, l) = d.smaller_side(u, v);
            let small = d.arcs_between(s, l);
            let large = d.arcs_between(l, s);
            if small.is_empty() && large.is_empty() {
                continue;
            }
            if small.is_empty() {
                phi3.insert((s, l));
                for b in large {
                    classes[b] = ArcClass::OneWay;
                }
                continue;
            }
            phi1.insert((s, l));
            for b in large {
                classes[b] = ArcClass::Unmatched;
            }
            for a in small {
                classes[a] = ArcClass::Paired;
                let inv = p
                    .inverse_of(a)
                    .expect("pairing is total on the smaller side");
                classes[inv] = ArcClass::Inverse;
            }
        }
    }
    ArcClassification {
        phi1,
        phi2,
        phi3,
        classes,
    }
}

/// Finite graph with multi-edges and loops; edges are unordered pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UndirectedGraph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
}

impl UndirectedGraph {
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize)>) -> Result<Self, GraphError> {
        for &(u, v) in &edges {
            if u == 0 || v == 0 || u > vertex_count || v > vertex_count {
                return Err(GraphError::EdgeOutOfRange(u, v, vertex_count));
            }
        }
        Ok(UndirectedGraph {
            vertex_count,
            edges,
        })
    }

    pub fn complete(n: usize) -> Self {
        let edges = (1..=n)
            .flat_map(|u| (u + 1..=n).map(move |v| (u, v)))
            .collect();
        UndirectedGraph {
            vertex_count: n,
            edges,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn is_simple(&self) -> bool {
        let mut seen = BTreeSet::new();
        self.edges
            .iter()
            .all(|&(u, v)| u != v && seen.insert((u.min(v), u.max(v))))
    }
}

/// Symmetric digraph: edge `k` (1-based) `{u, v}` becomes arcs `ek: u -> v`
/// and `ekr: v -> u`, mutually inverse; a loop becomes the single arc `ek`.
pub fn symmetrize(g: &UndirectedGraph) -> (Digraph, InversePairing) {
    let mut arcs = Vec::new();
    let mut pairs = Vec::new();
    for (k, &(u, v)) in g.edges.iter().enumerate() {
        let id = format!("e{}", k + 1);
        if u == v {
            arcs.push((id, u, u));
        } else {
            let rev = format!("{id}r");
            arcs.push((id.clone(), u, v));
            arcs.push((rev.clone(), v, u));
            pairs.push((id, rev));
        }
    }
    let d = Digraph::new(g.vertex_count, arcs).expect("edges were validated");
    let p = canonical_inverse_pairing(&d, &pairs).expect("edge pairs are opposite");
    (d, p)
}

/// Adjacency matrix `(|E(u,v)|)` and degree matrix `diag(d_u)`, `d_u = Σ_v |E(u,v)|`.
pub fn adjacency_and_degree(g: &UndirectedGraph) -> (Matrix<Rational>, Matrix<Rational>) {
    let n = g.vertex_count;
    let mut adjacency = Matrix::<Rational>::zeros(n, n);
    for &(u, v) in &g.edges {
        adjacency[(u - 1, v - 1)] += Rational::from_integer(1.into());
        if u != v {
            adjacency[(v - 1, u - 1)] += Rational::from_integer(1.into());
        }
    }
    let degree = Matrix::from_fn(n, n, |i, j| {
        if i == j {
            adjacency
                .row(i)
                .iter()
                .fold(Rational::zero(), |acc, c| acc + c)
        } else {
            Rational::zero()
        }
    });
    (adjacency, degree)
}
