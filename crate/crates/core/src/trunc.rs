//! Truncated polynomial rings `R_t = R[X]/(X^{t+1})`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt::{self, Write};

use rand::RngCore;

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::ring::{write_power_series, Ring, ENUMERATION_LIMIT};

/// `R[X]/(X^{t+1})`. Elements always have exactly `t + 1` coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncRing<R> {
    base: R,
    t: usize,
}

impl<R: Ring> TruncRing<R> {
    pub fn new(base: R, t: usize) -> Self {
        TruncRing { base, t }
    }

    pub fn base(&self) -> &R {
        &self.base
    }

    pub fn t(&self) -> usize {
        self.t
    }

    /// Reduces a polynomial of any length modulo `X^{t+1}`.
    pub fn from_poly(&self, p: &[R::Elem]) -> Vec<R::Elem> {
        (0..=self.t)
            .map(|k| p.get(k).cloned().unwrap_or_else(|| self.base.zero()))
            .collect()
    }

    /// `1 + c·X^k` (just `1` when `k > t`).
    pub fn one_plus_monomial(&self, c: &R::Elem, k: usize) -> Vec<R::Elem> {
        let mut u = self.one();
        if k <= self.t {
            u[k] = self.base.add(&u[k], c);
        }
        u
    }

    /// Coefficients with trailing zeros removed.
    pub fn to_poly(&self, a: &[R::Elem]) -> Vec<R::Elem> {
        let mut p = a.to_vec();
        while p.last().is_some_and(|c| self.base.is_zero(c)) {
            p.pop();
        }
        p
    }
}

/// The inverse of `u` in `R_t`, by the finite geometric series
/// `(c(1 + w))⁻¹ = Σ (-w)^k c⁻¹` with `w = c⁻¹(u - c)` divisible by `X`.
pub fn trunc_inverse<R: Ring>(ring: &TruncRing<R>, u: &[R::Elem]) -> Result<Vec<R::Elem>> {
    let b = ring.base();
    let u = ring.from_poly(u);
    let c_inv = b.inverse(&u[0]).ok_or(Error::NotAUnit)?;
    let c_inv_t = ring.from_poly(&[c_inv]);
    let mut tail = u.clone();
    tail[0] = b.zero();
    let w = ring.neg(&ring.mul(&c_inv_t, &tail));
    let mut sum = ring.one();
    let mut term = ring.one();
    for _ in 0..ring.t() {
        term = ring.mul(&term, &w);
        sum = ring.add(&sum, &term);
    }
    Ok(ring.mul(&sum, &c_inv_t))
}

impl<R: Ring> Ring for TruncRing<R> {
    type Elem = Vec<R::Elem>;

    fn zero(&self) -> Self::Elem {
        vec![self.base.zero(); self.t + 1]
    }
    fn one(&self) -> Self::Elem {
        let mut v = self.zero();
        v[0] = self.base.one();
        v
    }
    fn from_int(&self, n: i64) -> Self::Elem {
        let mut v = self.zero();
        v[0] = self.base.from_int(n);
        v
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.iter().zip(b).map(|(x, y)| self.base.add(x, y)).collect()
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        a.iter().map(|x| self.base.neg(x)).collect()
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let mut out = self.zero();
        for (i, x) in a.iter().enumerate() {
            if self.base.is_zero(x) {
                continue;
            }
            for (j, y) in b.iter().enumerate().take(self.t + 1 - i) {
                out[i + j] = self.base.add(&out[i + j], &self.base.mul(x, y));
            }
        }
        out
    }
    fn conj(&self, a: &Self::Elem) -> Self::Elem {
        a.iter().map(|x| self.base.conj(x)).collect()
    }
    fn lambda(&self) -> Self::Elem {
        let mut v = self.zero();
        v[0] = self.base.lambda();
        v
    }
    fn inverse(&self, a: &Self::Elem) -> Option<Self::Elem> {
        trunc_inverse(self, a).ok()
    }
    fn is_commutative(&self) -> bool {
        self.base.is_commutative()
    }
    fn elements(&self) -> Option<Vec<Self::Elem>> {
        let base = self.base.elements()?;
        let total = base.len().checked_pow(self.t as u32 + 1)?;
        if total > ENUMERATION_LIMIT {
            return None;
        }
        let mut out: Vec<Self::Elem> = vec![Vec::new()];
        for _ in 0..=self.t {
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
        Some(out)
    }
    fn random(&self, rng: &mut dyn RngCore) -> Self::Elem {
        (0..=self.t).map(|_| self.base.random(rng)).collect()
    }
    fn in_ideal(&self, ideal: &Ideal, a: &Self::Elem) -> bool {
        a.iter().all(|c| self.base.in_ideal(ideal, c))
    }
    fn write_elem(&self, a: &Self::Elem, out: &mut dyn Write) -> fmt::Result {
        write_power_series(&self.base, a, 'X', out)
    }
    fn lambda_min_contains(&self, a: &Self::Elem) -> Option<bool> {
        let mut all = true;
        for c in a {
            all &= self.base.lambda_min_contains(c)?;
        }
        Some(all)
    }
    fn is_central(&self, a: &Self::Elem) -> bool {
        a.iter().all(|c| self.base.is_central(c))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{Integers, Zmod};
    use num_bigint::BigInt;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn inverse_of_one_plus_x() {
        let r = TruncRing::new(Integers::new(1), 3);
        let inv = trunc_inverse(&r, &ints(&[1, 1])).unwrap();
        assert_eq!(inv, ints(&[1, -1, 1, -1]));
        assert_eq!(r.mul(&inv, &ints(&[1, 1, 0, 0])), r.one());
    }

    #[test]
    fn inverse_of_one() {
        let r = TruncRing::new(Zmod::new(4, 1), 2);
        assert_eq!(trunc_inverse(&r, &r.one()).unwrap(), r.one());
    }

    #[test]
    fn zero_divisor_constant_term() {
        let r = TruncRing::new(Zmod::new(4, 1), 1);
        assert_eq!(trunc_inverse(&r, &[2, 1]), Err(Error::NotAUnit));
    }

    #[test]
    fn unit_constant_other_than_one() {
        let r = TruncRing::new(Zmod::new(9, 1), 3);
        let u = vec![2, 5, 0, 7];
        let inv = trunc_inverse(&r, &u).unwrap();
        assert_eq!(r.mul(&u, &inv), r.one());
        assert_eq!(r.mul(&inv, &u), r.one());
    }

    #[test]
    fn enumeration_size() {
        let r = TruncRing::new(Zmod::new(3, 1), 2);
        assert_eq!(r.elements().unwrap().len(), 27);
    }
}
