//! The polynomial extension `R[X]` with `X̄ = X`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt::{self, Write};

use rand::{Rng, RngCore};

use crate::ideal::Ideal;
use crate::ring::{write_power_series, Ring};

/// Default bound on the nilpotency search used when inverting `c + N`.
pub const DEFAULT_NILPOTENCY_BOUND: usize = 64;

/// `R[X]`. Elements are coefficient vectors, lowest degree first, with no
/// trailing zeros (the zero polynomial is the empty vector).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyRing<R> {
    base: R,
    sample_degree: usize,
    variable: char,
}

impl<R: Ring> PolyRing<R> {
    pub fn new(base: R) -> Self {
        PolyRing {
            base,
            sample_degree: 3,
            variable: 'X',
        }
    }

    /// Random polynomials have degree at most `d`.
    pub fn with_sample_degree(mut self, d: usize) -> Self {
        self.sample_degree = d;
        self
    }

    /// The letter used when formatting elements.
    pub fn with_variable(mut self, var: char) -> Self {
        self.variable = var;
        self
    }

    pub fn variable(&self) -> char {
        self.variable
    }

    pub fn base(&self) -> &R {
        &self.base
    }

    pub fn sample_degree(&self) -> usize {
        self.sample_degree
    }

    pub fn normalize(&self, mut p: Vec<R::Elem>) -> Vec<R::Elem> {
        while p.last().is_some_and(|c| self.base.is_zero(c)) {
            p.pop();
        }
        p
    }

    pub fn constant(&self, c: R::Elem) -> Vec<R::Elem> {
        self.normalize(vec![c])
    }

    /// `c·X^k`.
    pub fn monomial(&self, c: R::Elem, k: usize) -> Vec<R::Elem> {
        let mut p = vec![self.base.zero(); k];
        p.push(c);
        self.normalize(p)
    }

    pub fn x(&self) -> Vec<R::Elem> {
        self.monomial(self.base.one(), 1)
    }

    pub fn degree(&self, p: &[R::Elem]) -> Option<usize> {
        p.len().checked_sub(1)
    }

    pub fn coeff(&self, p: &[R::Elem], k: usize) -> R::Elem {
        p.get(k).cloned().unwrap_or_else(|| self.base.zero())
    }

    /// `Σ c_k·a^k`, the right evaluation at `a`.
    pub fn eval(&self, p: &[R::Elem], a: &R::Elem) -> R::Elem {
        let b = &self.base;
        let mut acc = b.zero();
        let mut power = b.one();
        for c in p {
            acc = b.add(&acc, &b.mul(c, &power));
            power = b.mul(&power, a);
        }
        acc
    }

    pub fn random_of_degree(&self, deg: usize, rng: &mut dyn RngCore) -> Vec<R::Elem> {
        let p = (0..=deg).map(|_| self.base.random(rng)).collect();
        self.normalize(p)
    }
}

impl<R: Ring> Ring for PolyRing<R> {
    type Elem = Vec<R::Elem>;

    fn zero(&self) -> Self::Elem {
        Vec::new()
    }
    fn one(&self) -> Self::Elem {
        self.constant(self.base.one())
    }
    fn from_int(&self, n: i64) -> Self::Elem {
        self.constant(self.base.from_int(n))
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let n = a.len().max(b.len());
        let s = (0..n)
            .map(|k| match (a.get(k), b.get(k)) {
                (Some(x), Some(y)) => self.base.add(x, y),
                (Some(x), None) | (None, Some(x)) => x.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        self.normalize(s)
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        a.iter().map(|c| self.base.neg(c)).collect()
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![self.base.zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] = self.base.add(&out[i + j], &self.base.mul(x, y));
            }
        }
        self.normalize(out)
    }
    fn conj(&self, a: &Self::Elem) -> Self::Elem {
        self.normalize(a.iter().map(|c| self.base.conj(c)).collect())
    }
    fn lambda(&self) -> Self::Elem {
        self.constant(self.base.lambda())
    }
    fn inverse(&self, a: &Self::Elem) -> Option<Self::Elem> {
        // a = c + N is a unit when c is a unit and c⁻¹N is nilpotent:
        // a⁻¹ = Σ (-c⁻¹N)^k · c⁻¹.
        let c = a.first()?;
        let c_inv = self.base.inverse(c)?;
        let c_inv_poly = self.constant(c_inv.clone());
        let mut tail = a.clone();
        tail[0] = self.base.zero();
        let w = self.neg(&self.mul(&c_inv_poly, &self.normalize(tail)));
        let mut sum = self.one();
        let mut term = self.one();
        for _ in 0..DEFAULT_NILPOTENCY_BOUND {
            term = self.mul(&term, &w);
            if term.is_empty() {
                let inv = self.mul(&sum, &c_inv_poly);
                let one = self.one();
                return (self.mul(a, &inv) == one && self.mul(&inv, a) == one).then_some(inv);
            }
            sum = self.add(&sum, &term);
        }
        None
    }
    fn is_commutative(&self) -> bool {
        self.base.is_commutative()
    }
    fn elements(&self) -> Option<Vec<Self::Elem>> {
        None
    }
    fn random(&self, rng: &mut dyn RngCore) -> Self::Elem {
        let deg = rng.gen_range(0..=self.sample_degree);
        self.random_of_degree(deg, rng)
    }
    fn in_ideal(&self, ideal: &Ideal, a: &Self::Elem) -> bool {
        a.iter().all(|c| self.base.in_ideal(ideal, c))
    }
    fn random_in_ideal(&self, ideal: &Ideal, rng: &mut dyn RngCore) -> Self::Elem {
        let deg = rng.gen_range(0..=self.sample_degree);
        let p = (0..=deg)
            .map(|_| self.base.random_in_ideal(ideal, rng))
            .collect();
        self.normalize(p)
    }
    fn write_elem(&self, a: &Self::Elem, out: &mut dyn Write) -> fmt::Result {
        write_power_series(&self.base, a, self.variable, out)
    }
    fn lambda_min_contains(&self, a: &Self::Elem) -> Option<bool> {
        // Λ_min(R[X]) = Λ_min(R)[X]
        let mut all = true;
        for c in a {
            all &= self.base.lambda_min_contains(c)?;
        }
        self.base.lambda_min_contains(&self.base.zero())?;
        Some(all)
    }
    fn is_central(&self, a: &Self::Elem) -> bool {
        a.iter().all(|c| self.base.is_central(c))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{Gauss, GaussianZmod, Integers, Zmod};
    use num_bigint::BigInt;

    #[test]
    fn involution_on_trivial_base_is_identity() {
        let p = PolyRing::new(Zmod::new(4, 1));
        let f = vec![1, 3];
        assert_eq!(p.conj(&f), f);
        assert_eq!(p.format(&f), "1+3X");
        assert_eq!(p.conj(&p.x()), p.x());
    }

    #[test]
    fn involution_on_gaussian_coefficients() {
        let g = GaussianZmod::new(5, Gauss::new(1, 0));
        let p = PolyRing::new(g.clone());
        // i + 2iX ↦ -i + 3iX
        let f = vec![g.elem(0, 1), g.elem(0, 2)];
        assert_eq!(p.conj(&f), vec![g.elem(0, -1), g.elem(0, 3)]);
        assert_eq!(p.format(&p.conj(&f)), "4i+3iX");
    }

    #[test]
    fn inverse_of_nilpotent_perturbation() {
        let p = PolyRing::new(Zmod::new(4, 3));
        let u = vec![1, 2]; // 1 + 2X
        assert_eq!(p.inverse(&u), Some(vec![1, 2]));
        assert_eq!(p.inverse(&vec![1, 1]), None);
        let z = PolyRing::new(Integers::new(-1));
        let one_minus_x = vec![BigInt::from(1), BigInt::from(-1)];
        assert_eq!(z.inverse(&one_minus_x), None);
        assert_eq!(z.format(&one_minus_x), "1-X");
    }

    #[test]
    fn multiplication_and_eval() {
        let p = PolyRing::new(Zmod::new(9, 1));
        let f = vec![1, 1];
        let sq = p.mul(&f, &f);
        assert_eq!(sq, vec![1, 2, 1]);
        assert_eq!(p.eval(&sq, &2), 0);
        assert_eq!(p.format(&sq), "1+2X+X^2");
    }
}
