//! Squared Markov-type equations `(w0+w1+w2)^2 = a*w0*w1*w2`.
//!
//! Solutions are generated from finitely many initial triples by the
//! mutation `(u0, u1, u2) -> (u0, u1, a*u0*u1 - 2*u0 - 2*u1 - u2)`.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt::Write as _;

use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::{Error, Int, Result};

/// Parameters admitting solutions.
pub const SOLVABLE: [u64; 8] = [1, 2, 3, 4, 5, 6, 8, 9];

/// Parameters whose solutions have coprime entries.
pub const PRIMITIVE: [u64; 4] = [9, 8, 6, 5];

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SolutionTriple<T> {
    pub a: u64,
    pub u: [T; 3],
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquareDecomposition<T> {
    pub x: [T; 3],
    pub xi: [u64; 3],
    /// `perm[k]` is the input slot holding decomposed slot `k`.
    pub perm: [usize; 3],
    pub scale: T,
    /// Reduced parameter `a * scale`.
    pub reduced: u64,
}

fn overflow<T>(v: Option<T>) -> Result<T> {
    v.ok_or(Error::Overflow)
}

fn lift<T: Int>(a: u64) -> T {
    <T as Int>::from_u64(a)
}

pub(crate) fn to_big<T: Int>(x: &T) -> BigInt {
    match x.to_i128() {
        Some(v) => BigInt::from(v),
        None => x.to_string().parse().expect("integer display"),
    }
}

fn show<T: Int>(u: &[T; 3]) -> String {
    format!("({},{},{})", u[0], u[1], u[2])
}

/// Sum of the entries.
pub fn norm<T: Int>(u: &[T; 3]) -> Result<T> {
    let s = overflow(u[0].checked_add(&u[1]))?;
    overflow(s.checked_add(&u[2]))
}

/// Whether `u` is a positive solution for parameter `a`. Evaluated in big
/// integers, so the answer is exact for every scalar type.
pub fn is_solution<T: Int>(u: &[T; 3], a: u64) -> bool {
    let v: Vec<BigInt> = u.iter().map(to_big).collect();
    if v.iter().any(|x| x.sign() != num_bigint::Sign::Plus) {
        return false;
    }
    let s = &v[0] + &v[1] + &v[2];
    &s * &s == BigInt::from(a) * &v[0] * &v[1] * &v[2]
}

/// The involution replacing the last entry.
pub fn lambda<T: Int>(u: &[T; 3], a: u64) -> Result<[T; 3]> {
    let two = lift::<T>(2);
    let p = overflow(lift::<T>(a).checked_mul(&u[0]))?;
    let p = overflow(p.checked_mul(&u[1]))?;
    let p = overflow(p.checked_sub(&overflow(two.checked_mul(&u[0]))?))?;
    let p = overflow(p.checked_sub(&overflow(two.checked_mul(&u[1]))?))?;
    let p = overflow(p.checked_sub(&u[2]))?;
    Ok([u[0].clone(), u[1].clone(), p])
}

impl<T: Int> SolutionTriple<T> {
    pub fn new(a: u64, u: [T; 3]) -> Result<Self> {
        if !is_solution(&u, a) {
            return Err(Error::NotASolution { a, triple: show(&u) });
        }
        Ok(Self { a, u })
    }

    pub fn norm(&self) -> Result<T> {
        norm(&self.u)
    }

    pub fn sorted(&self) -> Self {
        let mut u = self.u.clone();
        u.sort();
        Self { a: self.a, u }
    }

    pub fn is_sorted(&self) -> bool {
        self.u[0] <= self.u[1] && self.u[1] <= self.u[2]
    }
}

impl<T: Int> std::fmt::Display for SolutionTriple<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&show(&self.u))
    }
}

/// Apply the mutation to slot 2.
pub fn mutate<T: Int>(s: &SolutionTriple<T>) -> Result<SolutionTriple<T>> {
    if !is_solution(&s.u, s.a) {
        return Err(Error::NotASolution { a: s.a, triple: show(&s.u) });
    }
    Ok(SolutionTriple { a: s.a, u: lambda(&s.u, s.a)? })
}

/// Sorted results of mutating each of the three slots.
pub fn one_step_mutations<T: Int>(s: &SolutionTriple<T>) -> Result<BTreeSet<SolutionTriple<T>>> {
    if !is_solution(&s.u, s.a) {
        return Err(Error::NotASolution { a: s.a, triple: show(&s.u) });
    }
    let mut out = BTreeSet::new();
    for i in 0..3 {
        let (j, k) = match i {
            0 => (1, 2),
            1 => (0, 2),
            _ => (0, 1),
        };
        let played = [s.u[j].clone(), s.u[k].clone(), s.u[i].clone()];
        let mut m = lambda(&played, s.a)?;
        m.sort();
        out.insert(SolutionTriple { a: s.a, u: m });
    }
    Ok(out)
}

/// Whether a sorted solution is the root of its mutation tree.
pub fn is_initial<T: Int>(u: &[T; 3], a: u64) -> Result<bool> {
    if !(u[0] <= u[1] && u[1] <= u[2]) {
        return Err(Error::Unsorted(show(u)));
    }
    if !is_solution(u, a) {
        return Err(Error::NotASolution { a, triple: show(u) });
    }
    Ok(u[2] <= overflow(u[0].checked_add(&u[1]))?)
}

/// Upper bound on the largest entry of an initial triple.
fn initial_bound(a: u64) -> u64 {
    match a {
        0 => 0,
        1 => 60,
        2 => 18,
        3 => 12,
        4 => 6,
        _ => 12 / (a - 4),
    }
}

/// All initial triples for parameter `a`.
pub fn initial_solutions<T: Int>(a: u64) -> BTreeSet<SolutionTriple<T>> {
    let b = initial_bound(a);
    let mut out = BTreeSet::new();
    for u2 in 1..=b {
        for u1 in 1..=u2 {
            for u0 in 1..=u1 {
                if u2 <= u0 + u1 && (u0 + u1 + u2).pow(2) == a * u0 * u1 * u2 {
                    out.insert(SolutionTriple { a, u: [lift(u0), lift(u1), lift(u2)] });
                }
            }
        }
    }
    out
}

/// Sorted solutions joined by one-step mutations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MutationTree<T> {
    pub a: u64,
    /// Ordered by norm, then lexicographically.
    pub nodes: Vec<[T; 3]>,
    /// Index pairs `(i, j)` with `i < j`, sorted.
    pub edges: Vec<(usize, usize)>,
    /// Indices of the initial triples.
    pub roots: Vec<usize>,
}

/// Stopping rule for the breadth-first expansion.
enum Limit<'a, T> {
    Norm(&'a T),
    Depth(usize),
}

fn expand<T: Int>(a: u64, limit: Limit<'_, T>, max_nodes: Option<usize>) -> Result<MutationTree<T>> {
    let mut seen: BTreeMap<[T; 3], usize> = BTreeMap::new();
    let mut queue = VecDeque::new();
    let mut raw_edges = BTreeSet::new();
    let admit = |u: &[T; 3], depth: usize| -> Result<bool> {
        Ok(match &limit {
            Limit::Norm(b) => norm(u)? <= **b,
            Limit::Depth(d) => depth <= *d,
        })
    };
    let roots: Vec<[T; 3]> = initial_solutions::<T>(a).into_iter().map(|s| s.u).collect();
    for r in &roots {
        if admit(r, 0)? {
            seen.insert(r.clone(), 0);
            queue.push_back(r.clone());
        }
    }
    while let Some(u) = queue.pop_front() {
        let depth = seen[&u];
        for m in one_step_mutations(&SolutionTriple { a, u: u.clone() })? {
            if m.u == u {
                continue;
            }
            if seen.contains_key(&m.u) {
                raw_edges.insert(ordered_pair(&u, &m.u));
                continue;
            }
            if admit(&m.u, depth + 1)? {
                if let Some(cap) = max_nodes {
                    if seen.len() >= cap {
                        return Err(Error::NodeLimit(cap));
                    }
                }
                seen.insert(m.u.clone(), depth + 1);
                raw_edges.insert(ordered_pair(&u, &m.u));
                queue.push_back(m.u);
            }
        }
    }
    let mut keyed: Vec<(T, [T; 3])> = Vec::with_capacity(seen.len());
    for u in seen.into_keys() {
        keyed.push((norm(&u)?, u));
    }
    keyed.sort();
    let nodes: Vec<[T; 3]> = keyed.into_iter().map(|(_, u)| u).collect();
    let index: BTreeMap<&[T; 3], usize> = nodes.iter().enumerate().map(|(i, u)| (u, i)).collect();
    let mut edges: Vec<(usize, usize)> = raw_edges
        .iter()
        .map(|(p, q)| {
            let (i, j) = (index[p], index[q]);
            (i.min(j), i.max(j))
        })
        .collect();
    edges.sort();
    edges.dedup();
    let mut root_idx: Vec<usize> = roots.iter().filter_map(|r| index.get(r).copied()).collect();
    root_idx.sort();
    Ok(MutationTree { a, nodes, edges, roots: root_idx })
}

fn ordered_pair<T: Int>(p: &[T; 3], q: &[T; 3]) -> ([T; 3], [T; 3]) {
    if p <= q {
        (p.clone(), q.clone())
    } else {
        (q.clone(), p.clone())
    }
}

/// All sorted solutions with norm at most `norm_bound`.
pub fn enumerate_tree<T: Int>(a: u64, norm_bound: &T) -> Result<MutationTree<T>> {
    expand(a, Limit::Norm(norm_bound), None)
}

/// As [`enumerate_tree`], failing once more than `max_nodes` nodes are found.
pub fn enumerate_tree_capped<T: Int>(a: u64, norm_bound: &T, max_nodes: usize) -> Result<MutationTree<T>> {
    expand(a, Limit::Norm(norm_bound), Some(max_nodes))
}

/// All sorted solutions within `depth` mutations of an initial triple.
pub fn enumerate_tree_depth<T: Int>(a: u64, depth: usize) -> Result<MutationTree<T>> {
    expand(a, Limit::Depth(depth), None)
}

impl<T: Int> MutationTree<T> {
    pub fn contains(&self, u: &[T; 3]) -> bool {
        self.index_of(u).is_some()
    }

    pub fn index_of(&self, u: &[T; 3]) -> Option<usize> {
        let mut s = u.clone();
        s.sort();
        self.nodes.iter().position(|n| *n == s)
    }

    pub fn has_edge(&self, p: &[T; 3], q: &[T; 3]) -> bool {
        match (self.index_of(p), self.index_of(q)) {
            (Some(i), Some(j)) => self.edges.binary_search(&(i.min(j), i.max(j))).is_ok(),
            _ => false,
        }
    }

    pub fn to_dot(&self) -> String {
        let mut s = format!("graph T{} {{\n", self.a);
        for (i, u) in self.nodes.iter().enumerate() {
            let _ = writeln!(s, "  n{} [label=\"{}\"];", i, show(u));
        }
        for (i, j) in &self.edges {
            let _ = writeln!(s, "  n{} -- n{};", i, j);
        }
        s.push_str("}\n");
        s
    }

    pub fn to_json(&self) -> Value {
        json!({
            "a": self.a,
            "nodes": self.nodes.iter().map(triple_json).collect::<Vec<_>>(),
            "edges": self.edges.iter().map(|(i, j)| json!([i, j])).collect::<Vec<_>>(),
            "roots": self.roots,
        })
    }
}

/// Triple as an array of decimal strings.
pub fn triple_json<T: Int>(u: &[T; 3]) -> Value {
    json!([u[0].to_string(), u[1].to_string(), u[2].to_string()])
}

/// The scalings `(b, a')` with `S(a) = union of b*S(a')`.
pub fn scalings(a: u64) -> &'static [(u64, u64)] {
    match a {
        9 => &[(1, 9)],
        8 => &[(1, 8)],
        6 => &[(1, 6)],
        5 => &[(1, 5)],
        4 => &[(2, 8)],
        3 => &[(3, 9), (2, 6)],
        2 => &[(4, 8), (3, 6)],
        1 => &[(9, 9), (8, 8), (6, 6), (5, 5)],
        _ => &[],
    }
}

/// The pair `(b, a')` with `u / b` a solution for `a'`.
pub fn scaled_solution_class<T: Int>(s: &SolutionTriple<T>) -> Result<(T, u64)> {
    if !SOLVABLE.contains(&s.a) {
        return Err(Error::InvalidParameter(s.a));
    }
    if !is_solution(&s.u, s.a) {
        return Err(Error::NotASolution { a: s.a, triple: show(&s.u) });
    }
    let mut hits = Vec::new();
    for &(b, ar) in scalings(s.a) {
        let bt = lift::<T>(b);
        if s.u.iter().all(|x| x.is_multiple_of(&bt)) {
            let r = [s.u[0].clone() / bt.clone(), s.u[1].clone() / bt.clone(), s.u[2].clone() / bt.clone()];
            if is_solution(&r, ar) {
                hits.push((bt, ar));
            }
        }
    }
    match hits.len() {
        1 => Ok(hits.pop().unwrap()),
        n => Err(Error::Internal(format!("{} scaled classes for {}", n, show(&s.u)))),
    }
}

/// The vector `xi` of the reduced equation class.
pub fn xi_of(reduced: u64) -> Option<[u64; 3]> {
    match reduced {
        9 => Some([1, 1, 1]),
        8 => Some([1, 1, 2]),
        6 => Some([1, 2, 3]),
        5 => Some([1, 1, 5]),
        _ => None,
    }
}

/// `sqrt(a' * xi0 * xi1 * xi2)`.
pub fn xi_coefficient(reduced: u64) -> Option<u64> {
    match reduced {
        9 => Some(3),
        8 => Some(4),
        6 => Some(6),
        5 => Some(5),
        _ => None,
    }
}

const PERMS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];

fn exact_sqrt<T: Int>(v: &T) -> Option<T> {
    if v.is_negative() {
        return None;
    }
    let r = v.sqrt();
    (r.clone() * r.clone() == *v).then_some(r)
}

/// Write a solution as `b * (xi0*x0^2, xi1*x1^2, xi2*x2^2)` up to order.
///
/// Slots are ordered as in the adjusted form: slots with equal `xi` are
/// ascending and the slot with the largest `xi` comes last.
pub fn decompose<T: Int>(s: &SolutionTriple<T>) -> Result<SquareDecomposition<T>> {
    let (scale, reduced) = scaled_solution_class(s)?;
    let xi = xi_of(reduced).ok_or_else(|| Error::Internal(format!("reduced class {}", reduced)))?;
    let r: Vec<T> = s.u.iter().map(|x| x.clone() / scale.clone()).collect();
    for perm in PERMS {
        let mut x = Vec::with_capacity(3);
        for k in 0..3 {
            let v = &r[perm[k]];
            let c = lift::<T>(xi[k]);
            if !v.is_multiple_of(&c) {
                break;
            }
            match exact_sqrt(&(v.clone() / c)) {
                Some(root) => x.push(root),
                None => break,
            }
        }
        if x.len() < 3 {
            continue;
        }
        let ordered = (0..2).all(|k| xi[k] != xi[k + 1] || r[perm[k]] <= r[perm[k + 1]]);
        if !ordered {
            continue;
        }
        let x: [T; 3] = [x[0].clone(), x[1].clone(), x[2].clone()];
        return Ok(SquareDecomposition { x, xi, perm, scale, reduced });
    }
    Err(Error::Internal(format!("no square decomposition of {}", show(&s.u))))
}

impl<T: Int> SquareDecomposition<T> {
    /// Whether `sum xi_k x_k^2 = sqrt(a' prod xi) * x0 x1 x2` holds.
    pub fn satisfies_equation(&self) -> bool {
        let x: Vec<BigInt> = self.x.iter().map(to_big).collect();
        let lhs: BigInt = (0..3).map(|k| BigInt::from(self.xi[k]) * &x[k] * &x[k]).sum();
        let c = xi_coefficient(self.reduced).unwrap_or(0);
        lhs == BigInt::from(c) * &x[0] * &x[1] * &x[2]
    }

    /// The input triple permuted into decomposed slot order.
    pub fn reorder(&self, u: &[T; 3]) -> [T; 3] {
        [u[self.perm[0]].clone(), u[self.perm[1]].clone(), u[self.perm[2]].clone()]
    }
}

pub fn is_pairwise_coprime<T: Int>(u: &[T; 3]) -> bool {
    u[0].gcd(&u[1]).is_one() && u[0].gcd(&u[2]).is_one() && u[1].gcd(&u[2]).is_one()
}
