//! Dense matrices over an arbitrary [`Ring`], the star involution
//! `(a_ij)* = (ā_ji)`, and the matrix ring `M_k(R)`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt::{self, Write};

use rand::RngCore;

use crate::ideal::Ideal;
use crate::poly::DEFAULT_NILPOTENCY_BOUND;
use crate::ring::{Ring, ENUMERATION_LIMIT};

/// A dense row-major matrix. Plain data: arithmetic takes the ring explicitly.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Matrix<E> {
    rows: usize,
    cols: usize,
    data: Vec<E>,
}

impl<E: Clone> Matrix<E> {
    /// # Panics
    /// If `data.len() != rows * cols`.
    pub fn from_vec(rows: usize, cols: usize, data: Vec<E>) -> Self {
        assert_eq!(data.len(), rows * cols, "matrix data has the wrong length");
        Matrix { rows, cols, data }
    }

    /// `None` when the rows are ragged.
    pub fn from_rows(rows: Vec<Vec<E>>) -> Option<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return None;
        }
        Some(Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> E) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &E {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: E) {
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[E] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<E> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn entries(&self) -> &[E] {
        &self.data
    }

    pub fn to_rows(&self) -> Vec<Vec<E>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn map<F: Clone>(&self, f: impl FnMut(&E) -> F) -> Matrix<F> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn block(&self, r0: usize, c0: usize, h: usize, w: usize) -> Self {
        Matrix::from_fn(h, w, |i, j| self.get(r0 + i, c0 + j).clone())
    }

    /// The four `n×n` corners `(a, b, c, d)` of a `2n×2n` matrix.
    ///
    /// # Panics
    /// If the matrix is not square of even size.
    pub fn quadrants(&self) -> (Self, Self, Self, Self) {
        assert!(self.is_square() && self.rows % 2 == 0, "expected a 2n×2n matrix");
        let n = self.rows / 2;
        (
            self.block(0, 0, n, n),
            self.block(0, n, n, n),
            self.block(n, 0, n, n),
            self.block(n, n, n, n),
        )
    }

    /// `(a b; c d)` from four equally sized square blocks.
    pub fn from_quadrants(a: &Self, b: &Self, c: &Self, d: &Self) -> Self {
        let n = a.rows;
        Matrix::from_fn(2 * n, 2 * n, |i, j| match (i < n, j < n) {
            (true, true) => a.get(i, j).clone(),
            (true, false) => b.get(i, j - n).clone(),
            (false, true) => c.get(i - n, j).clone(),
            (false, false) => d.get(i - n, j - n).clone(),
        })
    }

    pub fn from_columns(cols: &[Vec<E>]) -> Self {
        let r = cols.first().map_or(0, Vec::len);
        Matrix::from_fn(r, cols.len(), |i, j| cols[j][i].clone())
    }
}

impl<E: Clone + Eq + Ord + fmt::Debug> Matrix<E> {
    pub fn zeros<R: Ring<Elem = E> + ?Sized>(ring: &R, rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![ring.zero(); rows * cols],
        }
    }

    pub fn scalar<R: Ring<Elem = E> + ?Sized>(ring: &R, n: usize, c: &E) -> Self {
        Matrix::from_fn(n, n, |i, j| if i == j { c.clone() } else { ring.zero() })
    }

    pub fn identity<R: Ring<Elem = E> + ?Sized>(ring: &R, n: usize) -> Self {
        Self::scalar(ring, n, &ring.one())
    }

    /// `I + c·e_ij` (0-based indices).
    pub fn elementary<R: Ring<Elem = E> + ?Sized>(ring: &R, n: usize, i: usize, j: usize, c: &E) -> Self {
        let mut m = Self::identity(ring, n);
        let v = ring.add(m.get(i, j), c);
        m.set(i, j, v);
        m
    }

    pub fn add<R: Ring<Elem = E> + ?Sized>(&self, ring: &R, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| ring.add(a, b))
                .collect(),
        }
    }

    pub fn neg<R: Ring<Elem = E> + ?Sized>(&self, ring: &R) -> Self {
        self.map(|a| ring.neg(a))
    }

    pub fn sub<R: Ring<Elem = E> + ?Sized>(&self, ring: &R, other: &Self) -> Self {
        self.add(ring, &other.neg(ring))
    }

    pub fn mul<R: Ring<Elem = E> + ?Sized>(&self, ring: &R, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "shape mismatch");
        let mut out = Self::zeros(ring, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if ring.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let v = ring.add(out.get(i, j), &ring.mul(a, other.get(k, j)));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    /// `c·M`.
    pub fn scale<R: Ring<Elem = E> + ?Sized>(&self, ring: &R, c: &E) -> Self {
        self.map(|a| ring.mul(c, a))
    }

    /// `M·c`.
    pub fn scale_right<R: Ring<Elem = E> + ?Sized>(&self, ring: &R, c: &E) -> Self {
        self.map(|a| ring.mul(a, c))
    }

    /// Conjugate transpose `(a_ij)* = (ā_ji)`.
    pub fn star<R: Ring<Elem = E> + ?Sized>(&self, ring: &R) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| ring.conj(self.get(j, i)))
    }

    pub fn mul_vec<R: Ring<Elem = E> + ?Sized>(&self, ring: &R, v: &[E]) -> Vec<E> {
        assert_eq!(self.cols, v.len(), "shape mismatch");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(ring.zero(), |acc, (a, b)| ring.add(&acc, &ring.mul(a, b)))
            })
            .collect()
    }

    pub fn pow<R: Ring<Elem = E> + ?Sized>(&self, ring: &R, e: u32) -> Self {
        let mut acc = Self::identity(ring, self.rows);
        for _ in 0..e {
            acc = acc.mul(ring, self);
        }
        acc
    }

    pub fn is_zero<R: Ring<Elem = E> + ?Sized>(&self, ring: &R) -> bool {
        self.data.iter().all(|a| ring.is_zero(a))
    }

    pub fn is_identity<R: Ring<Elem = E> + ?Sized>(&self, ring: &R) -> bool {
        self.is_square() && *self == Self::identity(ring, self.rows)
    }

    /// Smallest `N ≤ bound` with `M^N = 0`.
    pub fn nilpotency_index<R: Ring<Elem = E> + ?Sized>(&self, ring: &R, bound: usize) -> Option<usize> {
        let mut p = Self::identity(ring, self.rows);
        for k in 0..=bound {
            if p.is_zero(ring) {
                return Some(k);
            }
            p = p.mul(ring, self);
        }
        None
    }

    pub fn write<R: Ring<Elem = E> + ?Sized>(&self, ring: &R, out: &mut dyn Write) -> fmt::Result {
        out.write_char('[')?;
        for i in 0..self.rows {
            if i > 0 {
                out.write_char(',')?;
            }
            out.write_char('[')?;
            for j in 0..self.cols {
                if j > 0 {
                    out.write_char(',')?;
                }
                ring.write_elem(self.get(i, j), out)?;
            }
            out.write_char(']')?;
        }
        out.write_char(']')
    }
}

/// Two-sided check `a·b = b·a = I`.
pub fn is_inverse_pair<R: Ring + ?Sized>(ring: &R, a: &Matrix<R::Elem>, b: &Matrix<R::Elem>) -> bool {
    a.is_square()
        && b.is_square()
        && a.rows() == b.rows()
        && a.mul(ring, b).is_identity(ring)
        && b.mul(ring, a).is_identity(ring)
}

/// Inverts a square matrix, returning only verified two-sided inverses.
///
/// Gauss–Jordan elimination with unit pivots is tried first, then the
/// adjugate over commutative rings (size at most [`ADJUGATE_LIMIT`]); failing
/// that, `a = I - N` with `N` nilpotent is inverted by `Σ N^k`, searching up
/// to `nil_bound` powers.
pub fn invert<R: Ring + ?Sized>(ring: &R, a: &Matrix<R::Elem>, nil_bound: usize) -> Option<Matrix<R::Elem>> {
    if !a.is_square() {
        return None;
    }
    if let Some(inv) = gauss_jordan(ring, a) {
        if is_inverse_pair(ring, a, &inv) {
            return Some(inv);
        }
    }
    let n = a.rows();
    if ring.is_commutative() && n <= ADJUGATE_LIMIT {
        if let Some(d_inv) = ring.inverse(&determinant(ring, a)) {
            let adj = Matrix::from_fn(n, n, |i, j| cofactor(ring, a, j, i));
            let inv = adj.scale(ring, &d_inv);
            if is_inverse_pair(ring, a, &inv) {
                return Some(inv);
            }
        }
    }
    let nil = Matrix::identity(ring, n).sub(ring, a);
    let mut sum = Matrix::identity(ring, n);
    let mut term = Matrix::identity(ring, n);
    for _ in 0..nil_bound {
        term = term.mul(ring, &nil);
        if term.is_zero(ring) {
            return is_inverse_pair(ring, a, &sum).then_some(sum);
        }
        sum = sum.add(ring, &term);
    }
    None
}

/// Largest size for which [`invert`] tries the adjugate.
pub const ADJUGATE_LIMIT: usize = 7;

/// Determinant by cofactor expansion along the first row. Only meaningful
/// over commutative rings.
pub fn determinant<R: Ring + ?Sized>(ring: &R, a: &Matrix<R::Elem>) -> R::Elem {
    let n = a.rows();
    match n {
        0 => ring.one(),
        1 => a.get(0, 0).clone(),
        _ => (0..n).fold(ring.zero(), |acc, j| {
            if ring.is_zero(a.get(0, j)) {
                return acc;
            }
            ring.add(&acc, &ring.mul(a.get(0, j), &cofactor(ring, a, 0, j)))
        }),
    }
}

fn cofactor<R: Ring + ?Sized>(ring: &R, a: &Matrix<R::Elem>, i: usize, j: usize) -> R::Elem {
    let n = a.rows();
    let minor = Matrix::from_fn(n - 1, n - 1, |r, c| {
        a.get(r + usize::from(r >= i), c + usize::from(c >= j)).clone()
    });
    let d = determinant(ring, &minor);
    if (i + j) % 2 == 0 {
        d
    } else {
        ring.neg(&d)
    }
}

fn gauss_jordan<R: Ring + ?Sized>(ring: &R, a: &Matrix<R::Elem>) -> Option<Matrix<R::Elem>> {
    let n = a.rows();
    let mut m = a.to_rows();
    let mut inv = Matrix::identity(ring, n).to_rows();
    for col in 0..n {
        let (pivot, p_inv) = (col..n).find_map(|r| ring.inverse(&m[r][col]).map(|u| (r, u)))?;
        m.swap(col, pivot);
        inv.swap(col, pivot);
        m[col] = m[col].iter().map(|x| ring.mul(&p_inv, x)).collect();
        inv[col] = inv[col].iter().map(|x| ring.mul(&p_inv, x)).collect();
        for r in 0..n {
            if r == col || ring.is_zero(&m[r][col]) {
                continue;
            }
            let f = m[r][col].clone();
            for k in 0..n {
                m[r][k] = ring.sub(&m[r][k], &ring.mul(&f, &m[col][k]));
                inv[r][k] = ring.sub(&inv[r][k], &ring.mul(&f, &inv[col][k]));
            }
        }
    }
    Matrix::from_rows(inv)
}

/// The ring `M_k(R)` with the star involution and `λ·I`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixRing<R> {
    base: R,
    k: usize,
}

impl<R: Ring> MatrixRing<R> {
    pub fn new(base: R, k: usize) -> Self {
        MatrixRing { base, k }
    }

    pub fn base(&self) -> &R {
        &self.base
    }

    pub fn size(&self) -> usize {
        self.k
    }
}

impl<R: Ring> Ring for MatrixRing<R> {
    type Elem = Matrix<R::Elem>;

    fn zero(&self) -> Self::Elem {
        Matrix::zeros(&self.base, self.k, self.k)
    }
    fn one(&self) -> Self::Elem {
        Matrix::identity(&self.base, self.k)
    }
    fn from_int(&self, n: i64) -> Self::Elem {
        Matrix::scalar(&self.base, self.k, &self.base.from_int(n))
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.add(&self.base, b)
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        a.neg(&self.base)
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.mul(&self.base, b)
    }
    fn conj(&self, a: &Self::Elem) -> Self::Elem {
        a.star(&self.base)
    }
    fn lambda(&self) -> Self::Elem {
        Matrix::scalar(&self.base, self.k, &self.base.lambda())
    }
    fn inverse(&self, a: &Self::Elem) -> Option<Self::Elem> {
        invert(&self.base, a, DEFAULT_NILPOTENCY_BOUND)
    }
    fn is_commutative(&self) -> bool {
        self.k <= 1 && self.base.is_commutative()
    }
    fn elements(&self) -> Option<Vec<Self::Elem>> {
        let base = self.base.elements()?;
        let cells = self.k * self.k;
        let total = base.len().checked_pow(cells as u32)?;
        if total > ENUMERATION_LIMIT {
            return None;
        }
        let mut out: Vec<Vec<R::Elem>> = vec![Vec::new()];
        for _ in 0..cells {
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    base.iter().map(move |c| {
                        let mut p = prefix.clone();
                        p.push(c.clone());
                        p
                    })
                })
                .collect();
        }
        Some(out.into_iter().map(|d| Matrix::from_vec(self.k, self.k, d)).collect())
    }
    fn random(&self, rng: &mut dyn RngCore) -> Self::Elem {
        Matrix::from_fn(self.k, self.k, |_, _| self.base.random(rng))
    }
    fn in_ideal(&self, ideal: &Ideal, a: &Self::Elem) -> bool {
        a.entries().iter().all(|x| self.base.in_ideal(ideal, x))
    }
    fn random_in_ideal(&self, ideal: &Ideal, rng: &mut dyn RngCore) -> Self::Elem {
        Matrix::from_fn(self.k, self.k, |_, _| self.base.random_in_ideal(ideal, rng))
    }
    fn write_elem(&self, a: &Self::Elem, out: &mut dyn Write) -> fmt::Result {
        a.write(&self.base, out)
    }
    fn is_central(&self, a: &Self::Elem) -> bool {
        // Z(M_k(R)) = Z(R)·I
        let c = a.get(0, 0);
        self.base.is_central(c) && *a == Matrix::scalar(&self.base, self.k, c)
    }
}
