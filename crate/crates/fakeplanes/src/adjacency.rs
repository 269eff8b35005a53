//! Adjacency of fake weighted projective planes through toric degenerations
//! of rational K*-surfaces of Picard number one.
//!
//! A K*-surface is encoded by a 3x4 generator matrix
//! `[[-1,-1,l1,0],[-1,-1,0,l2],[0,d0,d1,d2]]`; its two toric degenerations
//! are the planes of the slice matrices.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::abelian::Matrix;
use crate::fwpp::{
    self, adjust, classify_family, corresponds, degree_matrix_of, fake_weights_of_degree_matrix,
    fake_weights_of_generator, is_t_singular, local_gorenstein_index, ClassifiedPlane, DegreeMatrix, GeneratorMatrix,
    SeriesId,
};
use crate::markov;
use crate::{Error, IntMatrix, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct KStarData {
    pub l1: BigInt,
    pub l2: BigInt,
    pub d0: BigInt,
    pub d1: BigInt,
    pub d2: BigInt,
}

impl KStarData {
    /// Checks `gcd(l_i, d_i) = 1` and `d0 + d1/l1 + d2/l2 < 0 < d1/l1 + d2/l2`.
    pub fn new(l1: BigInt, l2: BigInt, d0: BigInt, d1: BigInt, d2: BigInt) -> Result<Self> {
        let k = Self { l1, l2, d0, d1, d2 };
        k.validate()?;
        Ok(k)
    }

    pub fn from_i64(l1: i64, l2: i64, d0: i64, d1: i64, d2: i64) -> Result<Self> {
        Self::new(l1.into(), l2.into(), d0.into(), d1.into(), d2.into())
    }

    fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidKStar(m));
        if !self.l1.is_positive() || !self.l2.is_positive() {
            return bad("l1 and l2 must be positive".into());
        }
        if !self.l1.gcd(&self.d1).is_one() || !self.l2.gcd(&self.d2).is_one() {
            return bad("gcd(l_i, d_i) must be 1".into());
        }
        let slope = &self.d1 * &self.l2 + &self.d2 * &self.l1;
        if !slope.is_positive() || !(&self.d0 * &self.l1 * &self.l2 + &slope).is_negative() {
            return bad("slope conditions violated".into());
        }
        Ok(())
    }

    /// Fake weight vector `(w0, w1, w2, w3)`: the absolute maximal minors.
    pub fn weights(&self) -> [BigInt; 4] {
        let (l1, l2, d0, d1, d2) = (&self.l1, &self.l2, &self.d0, &self.d1, &self.d2);
        [-(l1 * l2 * d0) - l2 * d1 - l1 * d2, l2 * d1 + l1 * d2, -(l2 * d0), -(l1 * d0)]
    }

    /// Local class group orders at the elliptic fixed point `x0` and the
    /// parabolic fixed points `x1`, `x2`.
    pub fn fixed_point_orders(&self) -> [BigInt; 3] {
        let w = self.weights();
        [-self.d0.clone(), w[1].clone(), w[0].clone()]
    }
}

pub fn assemble_3x4(k: &KStarData) -> IntMatrix {
    let z = BigInt::zero;
    let m1 = || BigInt::from(-1);
    Matrix::from_rows(vec![
        vec![m1(), m1(), k.l1.clone(), z()],
        vec![m1(), m1(), z(), k.l2.clone()],
        vec![z(), k.d0.clone(), k.d1.clone(), k.d2.clone()],
    ])
}

/// `(P1, P2)` with `P1 = [[l1,l1,-l2],[d1,d1+l1 d0,d2]]` and `P2` the same
/// with the indices swapped.
pub fn slice_matrices(k: &KStarData) -> Result<(GeneratorMatrix, GeneratorMatrix)> {
    k.validate()?;
    let p1 = Matrix::from_rows(vec![
        vec![k.l1.clone(), k.l1.clone(), -k.l2.clone()],
        vec![k.d1.clone(), &k.d1 + &k.l1 * &k.d0, k.d2.clone()],
    ]);
    let p2 = Matrix::from_rows(vec![
        vec![k.l2.clone(), k.l2.clone(), -k.l1.clone()],
        vec![k.d2.clone(), &k.d2 + &k.l2 * &k.d0, k.d1.clone()],
    ]);
    Ok((GeneratorMatrix::new(p1)?, GeneratorMatrix::new(p2)?))
}

/// `cl(x0) / (cl(x1) cl(x2)) * (l1 + l2)^2`.
pub fn kstar_degree(k: &KStarData) -> BigRational {
    let c = k.fixed_point_orders();
    let s = &k.l1 + &k.l2;
    BigRational::new(&c[0] * &s * &s, &c[1] * &c[2])
}

/// `(1/w0 + 1/w1) (2 + l1/l2 + l2/l1)`, an independent form of [`kstar_degree`].
pub fn kstar_degree_from_weights(k: &KStarData) -> BigRational {
    let w = k.weights();
    let r = |n: &BigInt, d: &BigInt| BigRational::new(n.clone(), d.clone());
    let one = BigInt::one();
    (r(&one, &w[0]) + r(&one, &w[1])) * (BigRational::from_integer(2.into()) + r(&k.l1, &k.l2) + r(&k.l2, &k.l1))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdjacentPair {
    /// Input matrix.
    pub q1: DegreeMatrix,
    /// Canonical adjusted partner.
    pub q2: DegreeMatrix,
    /// Column `k` of `frame` is column `perm[k]` of `q1`; the degenerating
    /// fixed point sits in slot 2.
    pub perm: [usize; 3],
    pub frame: DegreeMatrix,
    /// Degree matrix of `p2` before adjusting, in slice order.
    pub q2_raw: DegreeMatrix,
    pub kstar: KStarData,
    pub p1: GeneratorMatrix,
    pub p2: GeneratorMatrix,
    pub ordered: bool,
    pub non_toric: bool,
    pub self_adjacent: bool,
}

const FRAMES: [[[usize; 3]; 2]; 3] = [[[1, 2, 0], [2, 1, 0]], [[0, 2, 1], [2, 0, 1]], [[0, 1, 2], [1, 0, 2]]];

/// Partner data in one slot frame, or `None` when `l2` is not integral.
fn partner_in_frame(q1: &DegreeMatrix, canon1: &DegreeMatrix, perm: [usize; 3]) -> Result<Option<AdjacentPair>> {
    let frame = q1.permuted(perm);
    let w = fake_weights_of_degree_matrix(&frame);
    if is_t_singular(&frame, 2).is_none() {
        return Err(Error::NotTSingular(perm[2]));
    }
    let l1 = local_gorenstein_index(&frame, 2);
    let d0 = -(&w[2] / (&l1 * &l1));
    let l2num = &l1 * (&w[0] + &w[1]);
    if !l2num.is_multiple_of(&w[2]) {
        return Ok(None);
    }
    let l2 = l2num / &w[2];
    let mut hits = Vec::new();
    let mut d1 = BigInt::zero();
    while d1 < l1 {
        if d1.gcd(&l1).is_one() {
            let num = -(&d1 * &w[0] + &d1 * &w[1] + &d0 * &l1 * &w[1]);
            if num.is_multiple_of(&w[2]) {
                let d2 = num / &w[2];
                if let Ok(k) = KStarData::new(l1.clone(), l2.clone(), d0.clone(), d1.clone(), d2) {
                    let (p1, p2) = slice_matrices(&k)?;
                    if corresponds(&frame, &p1) {
                        hits.push((k, p1, p2));
                    }
                }
            }
        }
        d1 += 1;
    }
    if hits.len() != 1 {
        return Err(Error::Internal(format!("{} admissible values of d1 for {} at slot {}", hits.len(), q1, perm[2])));
    }
    let (kstar, p1, p2) = hits.pop().unwrap();
    let q2_raw = degree_matrix_of(&p2)?;
    let (q2, _) = adjust(&q2_raw)?;
    Ok(Some(AdjacentPair {
        q1: q1.clone(),
        self_adjacent: &q2 == canon1,
        q2,
        perm,
        frame,
        q2_raw,
        ordered: kstar.l1 <= kstar.l2,
        non_toric: kstar.l1 > BigInt::one() && kstar.l2 > BigInt::one(),
        kstar,
        p1,
        p2,
    }))
}

/// Partners through the fixed point `slot`, one per admissible frame.
///
/// The other two slots are ordered by weight; equal weights are tried in
/// both orders.
pub fn adjacent_partners(q1: &DegreeMatrix, slot: usize) -> Result<Vec<AdjacentPair>> {
    if slot > 2 {
        return Err(Error::NotTSingular(slot));
    }
    if is_t_singular(q1, slot).is_none() {
        return Err(Error::NotTSingular(slot));
    }
    let (canon1, _) = adjust(q1)?;
    let [f, g] = FRAMES[slot];
    let frames: Vec<[usize; 3]> = match q1.u[f[0]].cmp(&q1.u[f[1]]) {
        std::cmp::Ordering::Less => vec![f],
        std::cmp::Ordering::Greater => vec![g],
        std::cmp::Ordering::Equal => vec![f, g],
    };
    let mut out = Vec::new();
    for perm in frames {
        if let Some(p) = partner_in_frame(q1, &canon1, perm)? {
            out.push(p);
        }
    }
    Ok(out)
}

/// The partner through `slot` in the first admissible frame.
pub fn adjacent_partner(q1: &DegreeMatrix, slot: usize) -> Result<AdjacentPair> {
    adjacent_partners(q1, slot)?
        .into_iter()
        .next()
        .ok_or_else(|| Error::NoPartner(format!("l2 is not integral for {} at slot {}", q1, slot)))
}

/// T-singular, `iota > 1` and `w0 + w1 + w2 > (1/iota + 1) w_slot`.
pub fn can_degenerate(q: &DegreeMatrix, slot: usize) -> bool {
    if is_t_singular(q, slot).is_none() {
        return false;
    }
    let iota = local_gorenstein_index(q, slot);
    if iota <= BigInt::one() {
        return false;
    }
    let w = fake_weights_of_degree_matrix(q);
    let s: BigInt = w.iter().sum();
    &iota * s > (&iota + 1) * &w[slot]
}

/// Partners of one class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Neighbors {
    pub node: DegreeMatrix,
    /// Distinct partner classes other than `node`, sorted.
    pub neighbors: Vec<(DegreeMatrix, AdjacentPair)>,
    /// Pairs joining `node` to itself.
    pub self_pairs: Vec<AdjacentPair>,
}

impl Neighbors {
    pub fn self_adjacent(&self) -> bool {
        !self.self_pairs.is_empty()
    }

    pub fn non_toric_self_adjacent(&self) -> bool {
        self.self_pairs.iter().any(|p| p.non_toric)
    }
}

/// Partners over every T-singular fixed point of `q`.
pub fn adjacency_neighbors(q: &DegreeMatrix) -> Result<Neighbors> {
    let (node, _) = adjust(q)?;
    let mut found: BTreeMap<DegreeMatrix, AdjacentPair> = BTreeMap::new();
    let mut self_pairs = Vec::new();
    for slot in 0..3 {
        if is_t_singular(&node, slot).is_none() {
            continue;
        }
        for pair in adjacent_partners(&node, slot)? {
            if pair.self_adjacent {
                self_pairs.push(pair);
            } else {
                found.entry(pair.q2.clone()).or_insert(pair);
            }
        }
    }
    Ok(Neighbors { node, neighbors: found.into_iter().collect(), self_pairs })
}

/// Whether every fixed point is a T-singularity.
pub fn at_most_t_singular(q: &DegreeMatrix) -> bool {
    (0..3).all(|k| is_t_singular(q, k).is_some())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphNode {
    pub plane: ClassifiedPlane,
    pub self_adjacent: bool,
    pub non_toric_self_adjacent: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct GraphEdge {
    pub from: usize,
    pub to: usize,
    /// The endpoints belong to no common series.
    pub jump: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdjacencyGraph {
    pub a: u64,
    pub mu: u64,
    pub nodes: Vec<GraphNode>,
    pub edges: Vec<GraphEdge>,
    /// Directed partner relation restricted to the node set.
    pub arcs: BTreeSet<(usize, usize)>,
}

/// Which classes of a family become vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NodeFilter {
    /// At most T-singular classes, as in the graphs `T(a, mu)`.
    AtMostT,
    /// Classes claimed by or merged into one of these series.
    Series(Vec<u64>),
}

/// `T(a, mu)`: at most T-singular classes with `nu(w) <= norm_bound`.
pub fn adjacency_graph(a: u64, mu: u64, norm_bound: &BigInt) -> Result<AdjacencyGraph> {
    build_graph(a, mu, norm_bound, &NodeFilter::AtMostT, None)
}

/// Graph on the classes of the given series of the family `(a, mu)`.
pub fn series_graph(a: u64, mu: u64, etas: &[u64], norm_bound: &BigInt) -> Result<AdjacencyGraph> {
    build_graph(a, mu, norm_bound, &NodeFilter::Series(etas.to_vec()), None)
}

pub fn build_graph(
    a: u64,
    mu: u64,
    norm_bound: &BigInt,
    filter: &NodeFilter,
    max_nodes: Option<usize>,
) -> Result<AdjacencyGraph> {
    let planes: Vec<ClassifiedPlane> = classify_family(a, mu, norm_bound, max_nodes)?
        .into_iter()
        .filter(|p| match filter {
            NodeFilter::AtMostT => at_most_t_singular(&p.q),
            NodeFilter::Series(etas) => p.series_set().iter().any(|s| etas.contains(&s.eta)),
        })
        .collect();
    let index: BTreeMap<&DegreeMatrix, usize> = planes.iter().enumerate().map(|(i, p)| (&p.q, i)).collect();
    let neigh: Vec<Result<Neighbors>> = planes.par_iter().map(|p| adjacency_neighbors(&p.q)).collect();
    let mut nodes = Vec::with_capacity(planes.len());
    let mut arcs = BTreeSet::new();
    for (i, n) in neigh.into_iter().enumerate() {
        let n = n?;
        for (q2, _) in &n.neighbors {
            if let Some(&j) = index.get(q2) {
                arcs.insert((i, j));
            }
        }
        nodes.push(GraphNode {
            plane: planes[i].clone(),
            self_adjacent: n.self_adjacent(),
            non_toric_self_adjacent: n.non_toric_self_adjacent(),
        });
    }
    let mut edges: Vec<GraphEdge> = arcs
        .iter()
        .filter(|(i, j)| i < j || !arcs.contains(&(*j, *i)))
        .map(|&(i, j)| {
            let si = nodes[i].plane.series_set();
            let jump = !nodes[j].plane.series_set().iter().any(|s| si.contains(s));
            GraphEdge { from: i.min(j), to: i.max(j), jump }
        })
        .collect();
    edges.sort();
    edges.dedup();
    Ok(AdjacencyGraph { a, mu, nodes, edges, arcs })
}

impl AdjacencyGraph {
    pub fn find(&self, u: [u64; 3], eta: u64) -> Option<usize> {
        let u = u.map(BigInt::from);
        self.nodes.iter().position(|n| n.plane.q.u == u && (self.mu == 1 || n.plane.q.eta[2] == eta))
    }

    pub fn edge(&self, i: usize, j: usize) -> Option<&GraphEdge> {
        self.edges.iter().find(|e| (e.from, e.to) == (i.min(j), i.max(j)))
    }

    /// Both directions of every arc were found independently.
    pub fn is_symmetric(&self) -> bool {
        self.arcs.iter().all(|&(i, j)| self.arcs.contains(&(j, i)))
    }

    /// Connected components as sorted node index lists.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.nodes.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn root(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for e in &self.edges {
            let (a, b) = (root(&mut parent, e.from), root(&mut parent, e.to));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
        let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for i in 0..n {
            let r = root(&mut parent, i);
            groups.entry(r).or_default().push(i);
        }
        groups.into_values().collect()
    }

    pub fn to_dot(&self) -> String {
        let mut s = format!("graph T_{}_{} {{\n", self.a, self.mu);
        for (i, n) in self.nodes.iter().enumerate() {
            let extra = if n.self_adjacent { ", peripheries=2" } else { "" };
            let _ = writeln!(s, "  n{} [label=\"{}\"{}];", i, n.plane.q, extra);
        }
        for e in &self.edges {
            let style = if e.jump { " [color=red]" } else { "" };
            let _ = writeln!(s, "  n{} -- n{}{};", e.from, e.to, style);
        }
        s.push_str("}\n");
        s
    }

    pub fn to_json(&self) -> Value {
        let nodes: Vec<Value> = self
            .nodes
            .iter()
            .enumerate()
            .map(|(i, n)| {
                json!({
                    "id": i,
                    "label": n.plane.q.to_string(),
                    "mu": n.plane.q.mu,
                    "u": markov::triple_json(&n.plane.q.u),
                    "eta": n.plane.q.eta,
                    "series": n.plane.series_set().iter().map(ToString::to_string).collect::<Vec<_>>(),
                    "selfAdjacent": n.self_adjacent,
                })
            })
            .collect();
        let edges: Vec<Value> =
            self.edges.iter().map(|e| json!({"from": e.from, "to": e.to, "jump": e.jump})).collect();
        let selfs: Vec<usize> = (0..self.nodes.len()).filter(|&i| self.nodes[i].self_adjacent).collect();
        json!({ "a": self.a, "mu": self.mu, "nodes": nodes, "edges": edges, "selfAdjacent": selfs })
    }

    pub fn to_tsv(&self) -> String {
        let mut s = String::from("from\tto\tjump\n");
        for e in &self.edges {
            let _ = writeln!(s, "{}\t{}\t{}", self.nodes[e.from].plane.q, self.nodes[e.to].plane.q, e.jump);
        }
        s
    }
}

/// Series self-adjacent at their base node, and the non-toric sublist.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Census {
    pub self_adjacent: Vec<SeriesId>,
    pub non_toric: Vec<SeriesId>,
}

pub fn self_adjacency_census() -> Result<Census> {
    let mut self_adjacent = Vec::new();
    let mut non_toric = Vec::new();
    for &(a, mu, etas) in fwpp::FAMILIES.iter() {
        let base = markov::initial_solutions::<BigInt>(a * mu)
            .into_iter()
            .next()
            .ok_or_else(|| Error::Internal(format!("no initial triple for {}", a * mu)))?;
        for plane in fwpp::classify_node(a, mu, etas, &base.u)? {
            let n = adjacency_neighbors(&plane.q)?;
            if n.self_adjacent() {
                self_adjacent.push(plane.series);
            }
            if n.non_toric_self_adjacent() {
                non_toric.push(plane.series);
            }
        }
    }
    Ok(Census { self_adjacent, non_toric })
}

/// Whether the sorted weight triples of a pair differ by one mutation.
pub fn weights_related_by_mutation(p: &AdjacentPair) -> bool {
    let a = fwpp::integral_degree(&p.q1).map(|d| d * p.q1.mu);
    let Ok(reduced) = a else { return false };
    let mu = BigInt::from(p.q1.mu);
    let w1 = fake_weights_of_generator(&p.p1).map(|w| w / &mu);
    let w2 = fake_weights_of_generator(&p.p2).map(|w| w / &mu);
    let mut m = match markov::lambda(&w1, reduced) {
        Ok(m) => m,
        Err(_) => return false,
    };
    let mut w2s = w2;
    m.sort();
    w2s.sort();
    m == w2s
}
