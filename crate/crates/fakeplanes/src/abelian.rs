//! Integer matrices, Smith and Hermite normal forms, and the group
//! `K = Z + Z/mu`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive};

use crate::{Error, Int, Result};

/// Dense row-major integer matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Int> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    /// Panics on ragged input.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix");
        Self { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&v| <T as num_traits::FromPrimitive>::from_i64(v).unwrap()).collect()).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut p = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut s = T::zero();
                for k in 0..self.cols {
                    s = s + self[(i, k)].clone() * other[(k, j)].clone();
                }
                p[(i, j)] = s;
            }
        }
        p
    }

    /// Determinant by cofactor expansion; intended for small matrices.
    pub fn det(&self) -> T {
        assert_eq!(self.rows, self.cols, "square matrix required");
        let n = self.rows;
        match n {
            0 => T::one(),
            1 => self[(0, 0)].clone(),
            2 => self[(0, 0)].clone() * self[(1, 1)].clone() - self[(0, 1)].clone() * self[(1, 0)].clone(),
            _ => {
                let mut s = T::zero();
                for j in 0..n {
                    if self[(0, j)].is_zero() {
                        continue;
                    }
                    let minor = self.without(0, j);
                    let term = self[(0, j)].clone() * minor.det();
                    s = if j % 2 == 0 { s + term } else { s - term };
                }
                s
            }
        }
    }

    /// Delete row `r` and column `c`.
    pub fn without(&self, r: usize, c: usize) -> Self {
        let rows = (0..self.rows)
            .filter(|&i| i != r)
            .map(|i| (0..self.cols).filter(|&j| j != c).map(|j| self[(i, j)].clone()).collect())
            .collect();
        Self::from_rows(rows)
    }

    /// Delete column `c`.
    pub fn without_col(&self, c: usize) -> Self {
        let rows = (0..self.rows)
            .map(|i| (0..self.cols).filter(|&j| j != c).map(|j| self[(i, j)].clone()).collect())
            .collect();
        Self::from_rows(rows)
    }

    pub fn select_cols(&self, cols: &[usize]) -> Self {
        let rows = (0..self.rows).map(|i| cols.iter().map(|&j| self[(i, j)].clone()).collect()).collect();
        Self::from_rows(rows)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// row[dst] += f * row[src]
    fn add_row(&mut self, dst: usize, src: usize, f: &T) {
        for j in 0..self.cols {
            let v = self[(src, j)].clone() * f.clone();
            self[(dst, j)] = self[(dst, j)].clone() + v;
        }
    }

    /// col[dst] += f * col[src]
    fn add_col(&mut self, dst: usize, src: usize, f: &T) {
        for i in 0..self.rows {
            let v = self[(i, src)].clone() * f.clone();
            self[(i, dst)] = self[(i, dst)].clone() + v;
        }
    }

    fn negate_row(&mut self, r: usize) {
        for j in 0..self.cols {
            self[(r, j)] = -self[(r, j)].clone();
        }
    }

    /// Replace rows `a`, `b` by `(p*a + q*b, r*a + s*b)`.
    fn combine_rows(&mut self, a: usize, b: usize, p: &T, q: &T, r: &T, s: &T) {
        for j in 0..self.cols {
            let (x, y) = (self[(a, j)].clone(), self[(b, j)].clone());
            self[(a, j)] = p.clone() * x.clone() + q.clone() * y.clone();
            self[(b, j)] = r.clone() * x + s.clone() * y;
        }
    }
}

impl<T> std::ops::Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.cols + j]
    }
}

impl<T> std::ops::IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.cols + j]
    }
}

impl<T: fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for i in 0..self.rows {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str("[")?;
            for j in 0..self.cols {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{}", self.data[i * self.cols + j])?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

/// Smith normal form `(U, S, V)` with `U * m * V = S`.
///
/// Pivots are chosen by smallest absolute value, first in row-major order,
/// so the factors are reproducible.
pub fn smith_normal_form<T: Int>(m: &Matrix<T>) -> (Matrix<T>, Matrix<T>, Matrix<T>) {
    let (r, c) = (m.rows, m.cols);
    let mut s = m.clone();
    let mut u = Matrix::identity(r);
    let mut v = Matrix::identity(c);
    for t in 0..r.min(c) {
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..r {
                for j in t..c {
                    let x = &s[(i, j)];
                    if !x.is_zero() && best.is_none_or(|(bi, bj)| x.abs() < s[(bi, bj)].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                return (u, s, v);
            };
            s.swap_rows(t, pi);
            u.swap_rows(t, pi);
            s.swap_cols(t, pj);
            v.swap_cols(t, pj);
            let p = s[(t, t)].clone();
            let mut dirty = false;
            for i in t + 1..r {
                let q = s[(i, t)].clone() / p.clone();
                if !q.is_zero() {
                    s.add_row(i, t, &-q.clone());
                    u.add_row(i, t, &-q);
                }
                dirty |= !s[(i, t)].is_zero();
            }
            for j in t + 1..c {
                let q = s[(t, j)].clone() / p.clone();
                if !q.is_zero() {
                    s.add_col(j, t, &-q.clone());
                    v.add_col(j, t, &-q);
                }
                dirty |= !s[(t, j)].is_zero();
            }
            if dirty {
                continue;
            }
            let offender = (t + 1..r).find(|&i| (t + 1..c).any(|j| !s[(i, j)].is_multiple_of(&p)));
            match offender {
                Some(i) => {
                    s.add_row(t, i, &T::one());
                    u.add_row(t, i, &T::one());
                }
                None => break,
            }
        }
        if s[(t, t)].is_negative() {
            s.negate_row(t);
            u.negate_row(t);
        }
    }
    (u, s, v)
}

/// Row-style Hermite normal form `(H, U)` with `U * m = H`.
///
/// `H` is in row echelon form with positive pivots and entries above each
/// pivot reduced into `[0, pivot)`; zero rows come last.
pub fn hermite_normal_form<T: Int>(m: &Matrix<T>) -> (Matrix<T>, Matrix<T>) {
    let (r, c) = (m.rows, m.cols);
    let mut h = m.clone();
    let mut u = Matrix::identity(r);
    let mut pr = 0;
    for j in 0..c {
        if pr == r {
            break;
        }
        for i in pr + 1..r {
            if h[(i, j)].is_zero() {
                continue;
            }
            let (a, b) = (h[(pr, j)].clone(), h[(i, j)].clone());
            let e = a.extended_gcd(&b);
            let (ag, bg) = (a / e.gcd.clone(), b / e.gcd.clone());
            // [[x, y], [-b/g, a/g]] is unimodular.
            h.combine_rows(pr, i, &e.x, &e.y, &-bg.clone(), &ag);
            u.combine_rows(pr, i, &e.x, &e.y, &-bg, &ag);
        }
        if h[(pr, j)].is_zero() {
            continue;
        }
        if h[(pr, j)].is_negative() {
            h.negate_row(pr);
            u.negate_row(pr);
        }
        let p = h[(pr, j)].clone();
        for i in 0..pr {
            let q = h[(i, j)].div_floor(&p);
            if !q.is_zero() {
                h.add_row(i, pr, &-q.clone());
                u.add_row(i, pr, &-q);
            }
        }
        pr += 1;
    }
    (h, u)
}

/// Basis of the integer kernel `{x : m x = 0}` as the columns of a matrix.
pub fn integer_kernel<T: Int>(m: &Matrix<T>) -> Matrix<T> {
    let (_, s, v) = smith_normal_form(m);
    let rank = (0..s.rows.min(s.cols)).take_while(|&i| !s[(i, i)].is_zero()).count();
    let keep: Vec<usize> = (rank..m.cols).collect();
    v.select_cols(&keep)
}

/// `K = Z + Z/mu`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KContext {
    pub mu: u64,
}

impl KContext {
    pub fn new(mu: u64) -> Result<Self> {
        if mu == 0 {
            return Err(Error::InvalidDegreeMatrix("mu must be positive".into()));
        }
        Ok(Self { mu })
    }

    /// Residue of an integer modulo mu.
    pub fn reduce(&self, v: &BigInt) -> u64 {
        v.mod_floor(&BigInt::from(self.mu)).to_u64().unwrap()
    }

    pub fn element(&self, free: BigInt, tors: &BigInt) -> KElement {
        KElement { free, tors: self.reduce(tors) }
    }

    pub fn add(&self, x: &KElement, y: &KElement) -> KElement {
        KElement { free: &x.free + &y.free, tors: ((x.tors as u128 + y.tors as u128) % self.mu as u128) as u64 }
    }

    pub fn scale(&self, n: &BigInt, x: &KElement) -> KElement {
        self.element(n * &x.free, &(n * BigInt::from(x.tors)))
    }

    pub fn neg(&self, x: &KElement) -> KElement {
        self.element(-&x.free, &-BigInt::from(x.tors))
    }

    /// Euler totient, by gcd scan.
    pub fn totient(&self) -> u64 {
        self.units().count() as u64
    }

    /// Units modulo mu, ascending; `{0}` when mu = 1.
    pub fn units(&self) -> impl Iterator<Item = u64> + '_ {
        (0..self.mu).filter(move |c| c.gcd(&self.mu) == 1)
    }
}

/// Element `(free, tors)` of K.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KElement {
    pub free: BigInt,
    pub tors: u64,
}

impl KElement {
    pub fn new(free: impl Into<BigInt>, tors: u64) -> Self {
        Self { free: free.into(), tors }
    }
}

impl fmt::Display for KElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.free, self.tors)
    }
}

/// `phi(k, m) = (eps*k, a*k + c*m)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KAutomorphism {
    pub eps: i8,
    pub a: u64,
    pub c: u64,
}

impl KAutomorphism {
    pub fn identity(ctx: &KContext) -> Self {
        Self { eps: 1, a: 0, c: 1 % ctx.mu }
    }

    /// `self` after `other`.
    pub fn compose(&self, other: &Self, ctx: &KContext) -> Self {
        // self(other(k, m)) = (e1 e2 k, a1 e2 k + c1 (a2 k + c2 m))
        let mu = ctx.mu as i128;
        let a = (self.a as i128 * other.eps as i128 + self.c as i128 * other.a as i128).rem_euclid(mu);
        let c = (self.c as i128 * other.c as i128).rem_euclid(mu);
        Self { eps: self.eps * other.eps, a: a as u64, c: c as u64 }
    }

    pub fn inverse(&self, ctx: &KContext) -> Self {
        let mu = ctx.mu as i128;
        let cinv = mod_inverse(self.c, ctx.mu).expect("automorphism with unit c") as i128;
        // k' = eps k, m' = a k + c m  =>  m = c^-1 (m' - a eps k')
        let a = (-(cinv * self.a as i128 * self.eps as i128)).rem_euclid(mu);
        Self { eps: self.eps, a: a as u64, c: cinv as u64 }
    }
}

/// Multiplicative inverse modulo `m`.
pub fn mod_inverse(x: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(0);
    }
    let e = (x as i128).extended_gcd(&(m as i128));
    (e.gcd == 1).then(|| e.x.rem_euclid(m as i128) as u64)
}

/// All automorphisms of K, ordered by `(eps descending, a, c)`.
pub fn automorphisms(ctx: &KContext, positive_only: bool) -> Vec<KAutomorphism> {
    let signs: &[i8] = if positive_only { &[1] } else { &[1, -1] };
    let units: Vec<u64> = ctx.units().collect();
    let mut out = Vec::with_capacity(signs.len() * ctx.mu as usize * units.len());
    for &eps in signs {
        for a in 0..ctx.mu {
            for &c in &units {
                out.push(KAutomorphism { eps, a, c });
            }
        }
    }
    out
}

pub fn apply_automorphism(phi: &KAutomorphism, q: &KElement, ctx: &KContext) -> KElement {
    let free = if phi.eps < 0 { -&q.free } else { q.free.clone() };
    let t = BigInt::from(phi.a) * &q.free + BigInt::from(phi.c) * BigInt::from(q.tors);
    ctx.element(free, &t)
}

/// Least `n >= 1` with `n*w` in the cyclic subgroup generated by `q`.
///
/// Requires `q.free > 0`.
pub fn k_membership_multiple(w: &KElement, q: &KElement, ctx: &KContext) -> BigInt {
    assert!(q.free.is_positive(), "generator must have positive free part");
    let g = w.free.gcd(&q.free);
    let n0 = &q.free / &g;
    let beta0 = &n0 * &w.free / &q.free;
    let r = ctx.reduce(&(&n0 * BigInt::from(w.tors) - &beta0 * BigInt::from(q.tors)));
    let t = ctx.mu / r.gcd(&ctx.mu);
    n0 * BigInt::from(t)
}

/// Cokernel of the transpose of a 2x3 generator matrix.
///
/// Returns `K` and the images of the three standard basis vectors, with
/// positive free parts.
pub fn cokernel_structure(p: &Matrix<BigInt>) -> Result<(KContext, [KElement; 3])> {
    if p.rows() != 2 || p.cols() != 3 {
        return Err(Error::InvalidGenerator(format!("expected 2x3, got {}x{}", p.rows(), p.cols())));
    }
    check_generator(p)?;
    let (u, s, _) = smith_normal_form(&p.transpose());
    if !s[(0, 0)].is_one() {
        return Err(Error::InvalidGenerator("first invariant factor is not 1".into()));
    }
    let mu = s[(1, 1)].to_u64().ok_or_else(|| Error::InvalidGenerator("torsion order out of range".into()))?;
    let ctx = KContext::new(mu)?;
    let mut q: Vec<KElement> = (0..3).map(|i| ctx.element(u[(2, i)].clone(), &u[(1, i)])).collect();
    if q.iter().all(|e| e.free.is_negative()) {
        q = q.iter().map(|e| ctx.neg(e)).collect();
    }
    if !q.iter().all(|e| e.free.is_positive()) {
        return Err(Error::InvalidGenerator("columns do not positively span the plane".into()));
    }
    Ok((ctx, [q[0].clone(), q[1].clone(), q[2].clone()]))
}

/// Cyclic 2x2 minors `det(v1,v2), det(v2,v0), det(v0,v1)`.
pub fn cyclic_minors(p: &Matrix<BigInt>) -> [BigInt; 3] {
    let d = |i: usize, j: usize| &p[(0, i)] * &p[(1, j)] - &p[(0, j)] * &p[(1, i)];
    [d(1, 2), d(2, 0), d(0, 1)]
}

/// Primitive columns that positively span the plane.
pub fn check_generator(p: &Matrix<BigInt>) -> Result<()> {
    if p.rows() != 2 || p.cols() != 3 {
        return Err(Error::InvalidGenerator(format!("expected 2x3, got {}x{}", p.rows(), p.cols())));
    }
    for j in 0..3 {
        if !p[(0, j)].gcd(&p[(1, j)]).is_one() {
            return Err(Error::InvalidGenerator(format!("column {} is not primitive", j)));
        }
    }
    let m = cyclic_minors(p);
    let pos = m.iter().all(Signed::is_positive);
    let neg = m.iter().all(Signed::is_negative);
    if !(pos || neg) {
        return Err(Error::InvalidGenerator("columns do not positively span the plane".into()));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(rows: &[&[i64]]) -> Matrix<BigInt> {
        Matrix::from_i64(rows)
    }

    #[test]
    fn snf_examples() {
        let (u, s, v) = smith_normal_form(&big(&[&[1, 0], &[0, 1]]));
        assert_eq!(s, Matrix::identity(2));
        assert_eq!(u.mul(&big(&[&[1, 0], &[0, 1]])).mul(&v), s);
        let m = big(&[&[2, 0], &[0, 3]]);
        let (u, s, v) = smith_normal_form(&m);
        assert_eq!(s, big(&[&[1, 0], &[0, 6]]));
        assert_eq!(u.mul(&m).mul(&v), s);
        let (_, s, _) = smith_normal_form(&big(&[&[1, 1, -2], &[0, 1, -1]]).transpose());
        assert_eq!((s[(0, 0)].clone(), s[(1, 1)].clone()), (BigInt::from(1), BigInt::from(1)));
    }

    #[test]
    fn snf_i64() {
        let m: Matrix<i64> = Matrix::from_i64(&[&[6, 4, 2], &[4, 8, 6]]);
        let (u, s, v) = smith_normal_form(&m);
        assert_eq!(u.mul(&m).mul(&v), s);
        assert_eq!((s[(0, 0)], s[(1, 1)]), (2, 2));
    }

    #[test]
    fn hnf_example() {
        let m = big(&[&[4, 4, -4], &[1, -3, 1]]);
        let (h, u) = hermite_normal_form(&m);
        assert_eq!(u.mul(&m), h);
        assert_eq!(h, big(&[&[1, 13, -7], &[0, 16, -8]]));
    }

    #[test]
    fn cokernels() {
        let (ctx, q) = cokernel_structure(&big(&[&[1, 1, -1], &[0, -5, 4]])).unwrap();
        assert_eq!(ctx.mu, 1);
        assert_eq!(q.map(|e| e.free), [1, 4, 5].map(BigInt::from));
        let (ctx, q) = cokernel_structure(&big(&[&[3, 3, -6], &[1, -2, 1]])).unwrap();
        assert_eq!(ctx.mu, 9);
        assert_eq!(q.clone().map(|e| e.free), [1, 1, 1].map(BigInt::from));
        assert!(cokernel_structure(&big(&[&[1, 1, 1], &[0, 1, 2]])).is_err());
    }

    #[test]
    fn membership() {
        let c4 = KContext::new(4).unwrap();
        assert_eq!(k_membership_multiple(&KElement::new(4, 2), &KElement::new(2, 1), &c4), BigInt::from(1));
        assert_eq!(k_membership_multiple(&KElement::new(4, 2), &KElement::new(1, 0), &c4), BigInt::from(2));
        let c1 = KContext::new(1).unwrap();
        assert_eq!(k_membership_multiple(&KElement::new(3, 0), &KElement::new(1, 0), &c1), BigInt::from(1));
    }

    #[test]
    fn automorphism_counts() {
        let c1 = KContext::new(1).unwrap();
        assert_eq!(automorphisms(&c1, true), vec![KAutomorphism::identity(&c1)]);
        assert_eq!(automorphisms(&KContext::new(3).unwrap(), false).len(), 12);
        assert_eq!(automorphisms(&KContext::new(8).unwrap(), true).len(), 32);
    }

    #[test]
    fn automorphism_action() {
        let c9 = KContext::new(9).unwrap();
        let phi = KAutomorphism { eps: 1, a: 8, c: 1 };
        assert_eq!(apply_automorphism(&phi, &KElement::new(1, 1), &c9), KElement::new(1, 0));
        let c2 = KContext::new(2).unwrap();
        let phi = KAutomorphism { eps: 1, a: 1, c: 1 };
        assert_eq!(apply_automorphism(&phi, &KElement::new(2, 1), &c2), KElement::new(2, 1));
        let id = KAutomorphism { eps: 1, a: 0, c: 1 };
        let c6 = KContext::new(6).unwrap();
        assert_eq!(apply_automorphism(&id, &KElement::new(5, 3), &c6), KElement::new(5, 3));
    }
}
