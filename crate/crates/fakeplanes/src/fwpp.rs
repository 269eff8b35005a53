//! Fake weighted projective planes given by degree matrices over
//! `K = Z + Z/mu`, their canonical adjusted forms, classification into
//! series, and local singularity data at the three toric fixed points.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::abelian::{
    apply_automorphism, automorphisms, cokernel_structure, check_generator, hermite_normal_form, integer_kernel,
    k_membership_multiple, mod_inverse, KAutomorphism, KContext, KElement, Matrix,
};
use crate::markov::{self, SolutionTriple};
use crate::{Error, IntMatrix, Result};

/// Degree matrix: torsion order and columns `(u_i, eta_i)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DegreeMatrix {
    pub mu: u64,
    pub u: [BigInt; 3],
    pub eta: [u64; 3],
}

impl DegreeMatrix {
    /// Validates positivity and that any two columns generate K.
    pub fn new(mu: u64, u: [BigInt; 3], eta: [i64; 3]) -> Result<Self> {
        let ctx = KContext::new(mu)?;
        let eta = eta.map(|e| ctx.reduce(&BigInt::from(e)));
        let q = Self { mu, u, eta };
        q.validate()?;
        Ok(q)
    }

    pub fn from_i64(mu: u64, u: [i64; 3], eta: [i64; 3]) -> Result<Self> {
        Self::new(mu, u.map(BigInt::from), eta)
    }

    fn validate(&self) -> Result<()> {
        if !self.u.iter().all(Signed::is_positive) {
            return Err(Error::InvalidDegreeMatrix("free parts must be positive".into()));
        }
        let mu = BigInt::from(self.mu);
        for (i, j) in [(0, 1), (0, 2), (1, 2)] {
            let minor = &self.u[i] * BigInt::from(self.eta[j]) - &self.u[j] * BigInt::from(self.eta[i]);
            let g = minor.gcd(&(&mu * &self.u[i])).gcd(&(&mu * &self.u[j]));
            if !g.is_one() {
                return Err(Error::InvalidDegreeMatrix(format!("columns {} and {} do not generate K", i, j)));
            }
        }
        Ok(())
    }

    pub fn ctx(&self) -> KContext {
        KContext { mu: self.mu }
    }

    pub fn col(&self, i: usize) -> KElement {
        KElement { free: self.u[i].clone(), tors: self.eta[i] }
    }

    /// Column `k` of the result is column `perm[k]` of `self`.
    pub fn permuted(&self, perm: [usize; 3]) -> Self {
        Self { mu: self.mu, u: perm.map(|i| self.u[i].clone()), eta: perm.map(|i| self.eta[i]) }
    }

    /// Image under an automorphism of K; `None` if a free part turns negative.
    pub fn apply(&self, phi: &KAutomorphism) -> Option<Self> {
        let ctx = self.ctx();
        let cols: Vec<KElement> = (0..3).map(|i| apply_automorphism(phi, &self.col(i), &ctx)).collect();
        if !cols.iter().all(|c| c.free.is_positive()) {
            return None;
        }
        Some(Self {
            mu: self.mu,
            u: [cols[0].free.clone(), cols[1].free.clone(), cols[2].free.clone()],
            eta: [cols[0].tors, cols[1].tors, cols[2].tors],
        })
    }

    pub fn norm(&self) -> BigInt {
        self.u.iter().sum()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "mu": self.mu,
            "u": markov::triple_json(&self.u),
            "eta": self.eta,
        })
    }

    /// Accepts `u` entries as integers or decimal strings.
    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = |m: &str| Error::InvalidDegreeMatrix(m.to_string());
        let mu = v.get("mu").and_then(Value::as_u64).ok_or_else(|| bad("missing or invalid \"mu\""))?;
        let arr = |key: &str| -> Result<Vec<BigInt>> {
            let a = v.get(key).and_then(Value::as_array).ok_or_else(|| bad(&format!("missing \"{}\" array", key)))?;
            if a.len() != 3 {
                return Err(bad(&format!("\"{}\" must have three entries", key)));
            }
            a.iter()
                .map(|x| match x {
                    Value::String(s) => s.trim().parse::<BigInt>().map_err(|_| bad(&format!("bad integer {:?}", s))),
                    Value::Number(n) => n.to_string().parse::<BigInt>().map_err(|_| bad(&format!("bad integer {}", n))),
                    _ => Err(bad(&format!("bad entry in \"{}\"", key))),
                })
                .collect()
        };
        let u = arr("u")?;
        let eta = match v.get("eta") {
            None if mu == 1 => vec![BigInt::zero(); 3],
            _ => arr("eta")?,
        };
        let ctx = KContext::new(mu)?;
        let q = Self {
            mu,
            u: [u[0].clone(), u[1].clone(), u[2].clone()],
            eta: [ctx.reduce(&eta[0]), ctx.reduce(&eta[1]), ctx.reduce(&eta[2])],
        };
        q.validate()?;
        Ok(q)
    }
}

impl fmt::Display for DegreeMatrix {
    /// Node label `(u0,u1,u2; eta2)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{}; {})", self.u[0], self.u[1], self.u[2], self.eta[2])
    }
}

/// 2x3 integer matrix with primitive columns positively spanning the plane.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GeneratorMatrix(IntMatrix);

impl GeneratorMatrix {
    pub fn new(m: IntMatrix) -> Result<Self> {
        check_generator(&m)?;
        Ok(Self(m))
    }

    pub fn from_i64(rows: [[i64; 3]; 2]) -> Result<Self> {
        Self::new(Matrix::from_i64(&[&rows[0], &rows[1]]))
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.0
    }

    pub fn col(&self, j: usize) -> [BigInt; 2] {
        [self.0[(0, j)].clone(), self.0[(1, j)].clone()]
    }

    /// Unimodular row-equivalence representative.
    pub fn hermite(&self) -> IntMatrix {
        hermite_normal_form(&self.0).0
    }

    /// The two generators of the cone at fixed point `k`.
    pub fn cone(&self, k: usize) -> ([BigInt; 2], [BigInt; 2]) {
        let (i, j) = other_slots(k);
        (self.col(i), self.col(j))
    }
}

impl fmt::Display for GeneratorMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

fn other_slots(k: usize) -> (usize, usize) {
    match k {
        0 => (1, 2),
        1 => (0, 2),
        _ => (0, 1),
    }
}

pub fn fake_weights_of_generator(p: &GeneratorMatrix) -> [BigInt; 3] {
    crate::abelian::cyclic_minors(p.matrix()).map(|m| m.abs())
}

pub fn fake_weights_of_degree_matrix(q: &DegreeMatrix) -> [BigInt; 3] {
    q.u.clone().map(|x| x * BigInt::from(q.mu))
}

/// `(w0+w1+w2)^2 / (w0 w1 w2)`.
pub fn degree(w: &[BigInt; 3]) -> BigRational {
    let s: BigInt = w.iter().sum();
    BigRational::new(&s * &s, &w[0] * &w[1] * &w[2])
}

/// Degree as an integer, or an error when it is not integral.
pub fn integral_degree(q: &DegreeMatrix) -> Result<u64> {
    let d = degree(&fake_weights_of_degree_matrix(q));
    if !d.is_integer() {
        return Err(Error::NonIntegralDegree(d.to_string()));
    }
    d.to_integer().to_u64().ok_or_else(|| Error::NonIntegralDegree(d.to_string()))
}

/// `q0 + q1 + q2`.
pub fn anticanonical_class(q: &DegreeMatrix) -> KElement {
    let ctx = q.ctx();
    ctx.add(&ctx.add(&q.col(0), &q.col(1)), &q.col(2))
}

pub fn local_class_group_order(q: &DegreeMatrix, k: usize) -> BigInt {
    &q.u[k] * BigInt::from(q.mu)
}

pub fn local_gorenstein_index(q: &DegreeMatrix, k: usize) -> BigInt {
    k_membership_multiple(&anticanonical_class(q), &q.col(k), &q.ctx())
}

/// `Some(d)` with `cl = d * iota^2` when the fixed point is a T-singularity.
pub fn is_t_singular(q: &DegreeMatrix, k: usize) -> Option<BigInt> {
    let iota = local_gorenstein_index(q, k);
    let cl = local_class_group_order(q, k);
    let sq = &iota * &iota;
    cl.is_multiple_of(&sq).then(|| cl / sq)
}

/// Chart `[[iota, iota], [d*iota + b, b]]` of a T-singularity.
pub fn t_singular_chart(iota: &BigInt, d: &BigInt, b: &BigInt) -> Result<[[BigInt; 2]; 2]> {
    if !b.gcd(iota).is_one() {
        return Err(Error::Gcd(format!("gcd({}, {}) != 1", b, iota)));
    }
    Ok([[iota.clone(), iota.clone()], [d * iota + b, b.clone()]])
}

/// Gorenstein index `|ad - bc| / gcd(c - d, b - a)` of the cone over
/// `v = (a, c)` and `v' = (b, d)`.
pub fn cone_gorenstein_index(v: &[BigInt; 2], w: &[BigInt; 2]) -> Result<BigInt> {
    let (a, c) = (&v[0], &v[1]);
    let (b, d) = (&w[0], &w[1]);
    let det = (a * d - b * c).abs();
    if det.is_zero() {
        return Err(Error::Collinear);
    }
    Ok(det / (c - d).gcd(&(b - a)))
}

/// Hirzebruch-Jung continued fraction of `m / k`, `0 < k < m` coprime.
pub fn hj_continued_fraction(m: &BigInt, k: &BigInt) -> Vec<BigInt> {
    let (mut m, mut k) = (m.clone(), k.clone());
    let mut out = Vec::new();
    while k.is_positive() {
        let b = m.div_ceil(&k);
        let next = &b * &k - &m;
        out.push(b);
        m = std::mem::replace(&mut k, next);
    }
    out
}

/// Normal form `(m, k)` of the cone over two primitive vectors, so that the
/// cone is lattice equivalent to the one over `(0, 1)` and `(m, -k)` with
/// `0 <= k < m`.
pub fn cone_type(v: &[BigInt; 2], w: &[BigInt; 2]) -> Result<(BigInt, BigInt)> {
    let (a, c) = (&v[0], &v[1]);
    let e = a.extended_gcd(c);
    if !e.gcd.abs().is_one() {
        return Err(Error::Gcd(format!("({}, {}) is not primitive", a, c)));
    }
    let (s, t) = if e.gcd.is_negative() { (-e.x, -e.y) } else { (e.x, e.y) };
    // [[c, -a], [s, t]] sends v to (0, 1).
    let x = c * &w[0] - a * &w[1];
    let y = &s * &w[0] + &t * &w[1];
    let m = x.abs();
    if m.is_zero() {
        return Err(Error::Collinear);
    }
    let k = (-y).mod_floor(&m);
    Ok((m, k))
}

/// Number of exceptional curves in the minimal resolution of the cone.
pub fn resolution_curve_count(v: &[BigInt; 2], w: &[BigInt; 2]) -> Result<usize> {
    let (m, k) = cone_type(v, w)?;
    if m.is_one() {
        return Ok(0);
    }
    Ok(hj_continued_fraction(&m, &k).len())
}

/// Basis of `{m in Z^3 : sum m_i q_i = 0}` as the columns of a 3x2 matrix,
/// canonicalized by the Hermite form of its transpose.
pub fn kernel_basis(q: &DegreeMatrix) -> Result<IntMatrix> {
    q.validate()?;
    let mu = BigInt::from(q.mu);
    let a = Matrix::from_rows(vec![
        vec![q.u[0].clone(), q.u[1].clone(), q.u[2].clone(), BigInt::zero()],
        vec![q.eta[0].into(), q.eta[1].into(), q.eta[2].into(), mu],
    ]);
    let ker = integer_kernel(&a);
    if ker.cols() != 2 {
        return Err(Error::InvalidDegreeMatrix("kernel has wrong rank".into()));
    }
    let rows = ker.to_rows()[..3].to_vec();
    let (h, _) = hermite_normal_form(&Matrix::from_rows(rows).transpose());
    Ok(h.transpose())
}

/// The generator matrix whose fan corresponds to `q`.
pub fn generator_matrix(q: &DegreeMatrix) -> Result<GeneratorMatrix> {
    GeneratorMatrix::new(kernel_basis(q)?.transpose())
}

/// Equal fake weights and `q` annihilates both rows of `p`.
pub fn corresponds(q: &DegreeMatrix, p: &GeneratorMatrix) -> bool {
    if fake_weights_of_generator(p) != fake_weights_of_degree_matrix(q) {
        return false;
    }
    let ctx = q.ctx();
    (0..2).all(|r| {
        let row = p.matrix().row(r);
        let free: BigInt = (0..3).map(|i| &row[i] * &q.u[i]).sum();
        let tors: BigInt = (0..3).map(|i| &row[i] * BigInt::from(q.eta[i])).sum();
        free.is_zero() && ctx.reduce(&tors) == 0
    })
}

/// Degree matrix `(K, q)` of a generator matrix.
pub fn degree_matrix_of(p: &GeneratorMatrix) -> Result<DegreeMatrix> {
    let (ctx, q) = cokernel_structure(p.matrix())?;
    let d = DegreeMatrix { mu: ctx.mu, u: q.clone().map(|e| e.free), eta: q.map(|e| e.tors) };
    d.validate()?;
    Ok(d)
}

const PERMS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];

/// Whether `u` obeys the ordering and divisibility rules of its class.
pub fn is_adjusted_weight(u: &[BigInt; 3], reduced: u64) -> bool {
    let div = |x: &BigInt, n: u64| x.is_multiple_of(&BigInt::from(n));
    match reduced {
        9 => u[0] <= u[1] && u[1] <= u[2],
        8 => u[0] <= u[1] && div(&u[2], 2),
        6 => div(&u[1], 2) && div(&u[2], 3),
        5 => u[0] <= u[1] && div(&u[2], 5),
        _ => false,
    }
}

/// Transform applied by [`adjust`]: permute columns, then apply `phi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Adjustment {
    pub perm: [usize; 3],
    pub phi: KAutomorphism,
}

fn reduced_class(q: &DegreeMatrix) -> Result<(u64, u64)> {
    let a = integral_degree(q)?;
    let reduced = a * q.mu;
    if markov::xi_of(reduced).is_none() {
        return Err(Error::InvalidDegreeMatrix(format!("no adjusted form for reduced class {}", reduced)));
    }
    Ok((a, reduced))
}

/// Second row brought to `(0, 1, eta)` by a positive automorphism.
fn normalize_row(q: &DegreeMatrix) -> Option<(DegreeMatrix, KAutomorphism)> {
    let ctx = q.ctx();
    let mu = q.mu;
    let u0 = ctx.reduce(&q.u[0]);
    let inv = mod_inverse(u0, mu)?;
    let t = (q.eta[0] as u128 * inv as u128 % mu as u128) as u64;
    let shift = KAutomorphism { eps: 1, a: (mu - t) % mu, c: 1 % mu };
    let shifted = q.apply(&shift)?;
    let c = mod_inverse(shifted.eta[1], mu)?;
    let phi = KAutomorphism { eps: 1, a: 0, c }.compose(&shift, &ctx);
    Some((q.apply(&phi)?, phi))
}

/// Canonical adjusted form: admissible column order, second row
/// `(0, 1, eta)`, and minimal `eta` over all admissible orders.
pub fn adjust(q: &DegreeMatrix) -> Result<(DegreeMatrix, Adjustment)> {
    let (_, reduced) = reduced_class(q)?;
    let mut best: Option<(DegreeMatrix, Adjustment)> = None;
    for perm in PERMS {
        let p = q.permuted(perm);
        if !is_adjusted_weight(&p.u, reduced) {
            continue;
        }
        let Some((n, phi)) = normalize_row(&p) else { continue };
        if best.as_ref().is_none_or(|(b, _)| n.eta < b.eta) {
            best = Some((n, Adjustment { perm, phi }));
        }
    }
    best.ok_or_else(|| Error::Internal(format!("no admissible adjustment of {}", q)))
}

/// Whether `q` already has the shape of an adjusted matrix.
pub fn is_adjusted(q: &DegreeMatrix) -> bool {
    match reduced_class(q) {
        Ok((_, reduced)) => {
            is_adjusted_weight(&q.u, reduced) && q.eta[0] == 0 && (q.mu == 1 || q.eta[1] == 1)
        }
        Err(_) => false,
    }
}

/// Witness `(phi, perm)` with `q2 = phi(q1) * B`, i.e. column `k` of `q2`
/// equals `phi` applied to column `perm[k]` of `q1`.
pub fn isomorphism_witness(q1: &DegreeMatrix, q2: &DegreeMatrix) -> Option<(KAutomorphism, [usize; 3])> {
    if q1.mu != q2.mu {
        return None;
    }
    let mut a = q1.u.clone();
    let mut b = q2.u.clone();
    a.sort();
    b.sort();
    if a != b {
        return None;
    }
    let autos = automorphisms(&q1.ctx(), true);
    for perm in PERMS {
        let p = q1.permuted(perm);
        if p.u != q2.u {
            continue;
        }
        for phi in &autos {
            if p.apply(phi).as_ref() == Some(q2) {
                return Some((*phi, perm));
            }
        }
    }
    None
}

pub fn is_isomorphic(q1: &DegreeMatrix, q2: &DegreeMatrix) -> bool {
    isomorphism_witness(q1, q2).is_some()
}

/// Series identifier `a-mu-eta`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SeriesId {
    pub a: u64,
    pub mu: u64,
    pub eta: u64,
}

impl fmt::Display for SeriesId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}-{}", self.a, self.mu, self.eta)
    }
}

impl std::str::FromStr for SeriesId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<u64> = s.split('-').map(|p| p.parse().map_err(|_| Error::InvalidParameter(0))).collect::<Result<_>>()?;
        match parts[..] {
            [a, mu, eta] => Ok(Self { a, mu, eta }),
            _ => Err(Error::InvalidParameter(0)),
        }
    }
}

/// `(a, mu, etas)` for every family; its trees live in `S(a * mu)`.
pub const FAMILIES: [(u64, u64, &[u64]); 13] = [
    (9, 1, &[0]),
    (8, 1, &[0]),
    (6, 1, &[0]),
    (5, 1, &[0]),
    (4, 2, &[1]),
    (3, 3, &[2]),
    (3, 2, &[1]),
    (2, 4, &[1, 3]),
    (2, 3, &[1, 2]),
    (1, 9, &[2, 5, 8]),
    (1, 8, &[1, 3, 5, 7]),
    (1, 6, &[1, 5]),
    (1, 5, &[1, 2, 3, 4]),
];

/// All series, in table order.
pub fn all_series() -> Vec<SeriesId> {
    FAMILIES.iter().flat_map(|&(a, mu, etas)| etas.iter().map(move |&eta| SeriesId { a, mu, eta })).collect()
}

pub fn series_id(q: &DegreeMatrix) -> Result<SeriesId> {
    if !is_adjusted(q) {
        return Err(Error::NotAdjusted);
    }
    let a = integral_degree(q)?;
    Ok(SeriesId { a, mu: q.mu, eta: q.eta[2] })
}

/// `[[u0, u1, u2], [0, 1, eta]]`, or torsion-free when `mu = 1`.
pub fn series_matrix(u: &[BigInt; 3], mu: u64, eta: u64) -> Result<DegreeMatrix> {
    let row = if mu == 1 { [0, 0, 0] } else { [0, 1, eta as i64] };
    DegreeMatrix::new(mu, u.clone(), row)
}

/// Solution `u` of `S(a * mu)` in adjusted order.
pub fn adjusted_weight(u: &[BigInt; 3], reduced: u64) -> Result<[BigInt; 3]> {
    let s = SolutionTriple::new(reduced, u.clone())?;
    let d = markov::decompose(&s)?;
    Ok(d.reorder(&s.u))
}

/// One isomorphy class found by [`classify`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassifiedPlane {
    pub series: SeriesId,
    /// Canonical adjusted representative.
    pub q: DegreeMatrix,
    /// Further series whose member at this node is isomorphic to `q`.
    pub merged: Vec<SeriesId>,
}

impl ClassifiedPlane {
    pub fn series_set(&self) -> Vec<SeriesId> {
        let mut v = vec![self.series];
        v.extend(self.merged.iter().copied());
        v
    }

    pub fn weights(&self) -> [BigInt; 3] {
        fake_weights_of_degree_matrix(&self.q)
    }
}

/// Families of degree `a`.
pub fn families(a: u64) -> impl Iterator<Item = (u64, &'static [u64])> {
    FAMILIES.iter().filter(move |f| f.0 == a).map(|f| (f.1, f.2))
}

/// Classes of one family at one tree node; `u` sorted ascending.
pub fn classify_node(a: u64, mu: u64, etas: &[u64], u: &[BigInt; 3]) -> Result<Vec<ClassifiedPlane>> {
    let reduced = a * mu;
    let uadj = adjusted_weight(u, reduced)?;
    let mut classes: BTreeMap<DegreeMatrix, (SeriesId, DegreeMatrix, Vec<SeriesId>)> = BTreeMap::new();
    for &eta in etas {
        let raw = series_matrix(&uadj, mu, eta)?;
        if integral_degree(&raw)? != a {
            return Err(Error::Internal(format!("degree of {} is not {}", raw, a)));
        }
        let (canon, _) = adjust(&raw)?;
        let id = SeriesId { a, mu, eta };
        match classes.get_mut(&canon) {
            Some((_, first, merged)) => {
                if !is_isomorphic(first, &raw) {
                    return Err(Error::Internal(format!("{} and {} share a canonical form", first, raw)));
                }
                merged.push(id);
            }
            None => {
                classes.insert(canon, (id, raw, Vec::new()));
            }
        }
    }
    Ok(classes.into_iter().map(|(q, (series, _, merged))| ClassifiedPlane { series, q, merged }).collect())
}

fn sort_planes(v: &mut [ClassifiedPlane]) {
    v.sort_by(|x, y| {
        let kx = (x.q.norm() * BigInt::from(x.q.mu), x.q.u.clone(), x.q.mu, x.q.eta);
        let ky = (y.q.norm() * BigInt::from(y.q.mu), y.q.u.clone(), y.q.mu, y.q.eta);
        kx.cmp(&ky)
    });
}

/// All isomorphy classes of degree `a` with `nu(w) <= norm_bound`.
pub fn classify(a: u64, norm_bound: &BigInt) -> Result<Vec<ClassifiedPlane>> {
    classify_capped(a, norm_bound, None)
}

/// As [`classify`], restricted to one torsion order.
pub fn classify_family(a: u64, mu: u64, norm_bound: &BigInt, max_nodes: Option<usize>) -> Result<Vec<ClassifiedPlane>> {
    let etas = families(a)
        .find(|&(m, _)| m == mu)
        .map(|(_, e)| e)
        .ok_or(Error::InvalidParameter(a))?;
    let bound = norm_bound.div_floor(&BigInt::from(mu));
    let tree = match max_nodes {
        Some(cap) => markov::enumerate_tree_capped(a * mu, &bound, cap)?,
        None => markov::enumerate_tree(a * mu, &bound)?,
    };
    let per_node: Vec<Result<Vec<ClassifiedPlane>>> =
        tree.nodes.par_iter().map(|u| classify_node(a, mu, etas, u)).collect();
    let mut out = Vec::new();
    for r in per_node {
        out.extend(r?);
    }
    sort_planes(&mut out);
    Ok(out)
}

pub fn classify_capped(a: u64, norm_bound: &BigInt, max_nodes: Option<usize>) -> Result<Vec<ClassifiedPlane>> {
    let mut out = Vec::new();
    for (mu, _) in families(a) {
        out.extend(classify_family(a, mu, norm_bound, max_nodes)?);
    }
    sort_planes(&mut out);
    Ok(out)
}

/// Local data at one toric fixed point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointReport {
    pub cl: BigInt,
    pub iota: BigInt,
    pub is_t: bool,
    /// `cl / iota^2` when `is_t`.
    pub d: Option<BigInt>,
    pub res_curves: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SingularityReport {
    pub points: [PointReport; 3],
}

pub fn singularity_report(q: &DegreeMatrix) -> Result<SingularityReport> {
    let p = generator_matrix(q)?;
    let point = |k: usize| -> Result<PointReport> {
        let d = is_t_singular(q, k);
        let (v, w) = p.cone(k);
        Ok(PointReport {
            cl: local_class_group_order(q, k),
            iota: local_gorenstein_index(q, k),
            is_t: d.is_some(),
            d,
            res_curves: resolution_curve_count(&v, &w)?,
        })
    };
    Ok(SingularityReport { points: [point(0)?, point(1)?, point(2)?] })
}

impl SingularityReport {
    pub fn iotas(&self) -> [BigInt; 3] {
        [self.points[0].iota.clone(), self.points[1].iota.clone(), self.points[2].iota.clone()]
    }

    pub fn t_flags(&self) -> [bool; 3] {
        [self.points[0].is_t, self.points[1].is_t, self.points[2].is_t]
    }

    /// `+` for a T-singularity, `-` otherwise.
    pub fn t_signs(&self) -> String {
        self.t_flags().iter().map(|&t| if t { '+' } else { '-' }).collect()
    }

    pub fn curves(&self) -> [usize; 3] {
        [self.points[0].res_curves, self.points[1].res_curves, self.points[2].res_curves]
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.points
                .iter()
                .map(|p| {
                    json!({
                        "cl": p.cl.to_string(),
                        "iota": p.iota.to_string(),
                        "isT": p.is_t,
                        "d": p.d.as_ref().map(ToString::to_string),
                        "resCurves": p.res_curves,
                    })
                })
                .collect(),
        )
    }
}

/// JSON record of a classified plane with its singularity report.
pub fn plane_json(c: &ClassifiedPlane) -> Result<Value> {
    let report = singularity_report(&c.q)?;
    Ok(json!({
        "series": c.series.to_string(),
        "merged": c.merged.iter().map(ToString::to_string).collect::<Vec<_>>(),
        "mu": c.q.mu,
        "u": markov::triple_json(&c.q.u),
        "eta": c.q.eta,
        "weights": markov::triple_json(&c.weights()),
        "degree": c.series.a,
        "report": report.to_json(),
    }))
}

fn triple_str(t: &[BigInt; 3]) -> String {
    format!("({},{},{})", t[0], t[1], t[2])
}

/// Markdown table of classified planes with their local data.
pub fn markdown_table(planes: &[ClassifiedPlane]) -> Result<String> {
    let mut s = String::from("| ID | u | eta | w | w_Z | iota | T | curves |\n|---|---|---|---|---|---|---|---|\n");
    for c in planes {
        let r = singularity_report(&c.q)?;
        let wz = anticanonical_class(&c.q);
        let id = c.series_set().iter().map(ToString::to_string).collect::<Vec<_>>().join(", ");
        s.push_str(&format!(
            "| {} | {} | {} | {} | {} | {} | {} | ({},{},{}) |\n",
            id,
            triple_str(&c.q.u),
            c.q.eta[2],
            triple_str(&c.weights()),
            wz,
            triple_str(&r.iotas()),
            r.t_signs(),
            r.curves()[0],
            r.curves()[1],
            r.curves()[2],
        ));
    }
    Ok(s)
}
