//! The involutive-ring abstraction and the three base rings.
//!
//! Ring objects describe the arithmetic; elements are plain data and carry no
//! reference back to the ring that owns them. All arithmetic is exact.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::{self, Write};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::{Rng, RngCore};

use crate::ideal::Ideal;

/// Enumeration is attempted only for rings with at most this many elements.
pub const ENUMERATION_LIMIT: usize = 1 << 12;

/// An associative unital ring with involution `a ↦ ā` and a distinguished
/// central element `λ`.
///
/// Elements are kept in a canonical form so that structural equality is ring
/// equality.
pub trait Ring {
    type Elem: Clone + Eq + Ord + fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    /// Image of an integer under the unique unital map `Z → R`.
    fn from_int(&self, n: i64) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// The involution.
    fn conj(&self, a: &Self::Elem) -> Self::Elem;
    fn lambda(&self) -> Self::Elem;
    /// Two-sided inverse, when it exists and can be found.
    fn inverse(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn is_commutative(&self) -> bool;
    /// All elements, when the ring is finite and has at most
    /// [`ENUMERATION_LIMIT`] elements.
    fn elements(&self) -> Option<Vec<Self::Elem>>;
    fn random(&self, rng: &mut dyn RngCore) -> Self::Elem;
    fn in_ideal(&self, ideal: &Ideal, a: &Self::Elem) -> bool;
    fn write_elem(&self, a: &Self::Elem, out: &mut dyn Write) -> fmt::Result;

    /// Decides `a ∈ Λ_min = {x - λx̄}`; `None` when no decision procedure is
    /// available.
    fn lambda_min_contains(&self, a: &Self::Elem) -> Option<bool> {
        let elems = self.elements()?;
        let lambda = self.lambda();
        Some(elems.iter().any(|x| {
            let t = self.sub(x, &self.mul(&lambda, &self.conj(x)));
            &t == a
        }))
    }

    fn is_central(&self, a: &Self::Elem) -> bool {
        let _ = a;
        self.is_commutative()
    }

    fn random_in_ideal(&self, ideal: &Ideal, rng: &mut dyn RngCore) -> Self::Elem {
        let g = self.from_int(ideal.generator() as i64);
        self.mul(&g, &self.random(rng))
    }

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    fn lambda_bar(&self) -> Self::Elem {
        self.conj(&self.lambda())
    }

    fn format(&self, a: &Self::Elem) -> String {
        let mut s = String::new();
        let _ = self.write_elem(a, &mut s);
        s
    }
}

impl<R: Ring + ?Sized> Ring for &R {
    type Elem = R::Elem;

    fn zero(&self) -> R::Elem {
        (**self).zero()
    }
    fn one(&self) -> R::Elem {
        (**self).one()
    }
    fn from_int(&self, n: i64) -> R::Elem {
        (**self).from_int(n)
    }
    fn add(&self, a: &R::Elem, b: &R::Elem) -> R::Elem {
        (**self).add(a, b)
    }
    fn neg(&self, a: &R::Elem) -> R::Elem {
        (**self).neg(a)
    }
    fn mul(&self, a: &R::Elem, b: &R::Elem) -> R::Elem {
        (**self).mul(a, b)
    }
    fn conj(&self, a: &R::Elem) -> R::Elem {
        (**self).conj(a)
    }
    fn lambda(&self) -> R::Elem {
        (**self).lambda()
    }
    fn inverse(&self, a: &R::Elem) -> Option<R::Elem> {
        (**self).inverse(a)
    }
    fn is_commutative(&self) -> bool {
        (**self).is_commutative()
    }
    fn elements(&self) -> Option<Vec<R::Elem>> {
        (**self).elements()
    }
    fn random(&self, rng: &mut dyn RngCore) -> R::Elem {
        (**self).random(rng)
    }
    fn in_ideal(&self, ideal: &Ideal, a: &R::Elem) -> bool {
        (**self).in_ideal(ideal, a)
    }
    fn write_elem(&self, a: &R::Elem, out: &mut dyn Write) -> fmt::Result {
        (**self).write_elem(a, out)
    }
    fn lambda_min_contains(&self, a: &R::Elem) -> Option<bool> {
        (**self).lambda_min_contains(a)
    }
    fn is_central(&self, a: &R::Elem) -> bool {
        (**self).is_central(a)
    }
    fn random_in_ideal(&self, ideal: &Ideal, rng: &mut dyn RngCore) -> R::Elem {
        (**self).random_in_ideal(ideal, rng)
    }
}

/// The integers with the trivial involution. `λ` must be `±1` for a valid
/// form ring; other values are representable so that the axiom suite can
/// reject them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Integers {
    lambda: BigInt,
    sample_bound: i64,
}

impl Integers {
    pub fn new(lambda: i64) -> Self {
        Integers {
            lambda: BigInt::from(lambda),
            sample_bound: 6,
        }
    }

    pub fn with_lambda(lambda: BigInt) -> Self {
        Integers {
            lambda,
            sample_bound: 6,
        }
    }

    /// Random elements are drawn from `[-bound, bound]`.
    pub fn with_sample_bound(mut self, bound: i64) -> Self {
        self.sample_bound = bound.max(1);
        self
    }
}

impl Ring for Integers {
    type Elem = BigInt;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn from_int(&self, n: i64) -> BigInt {
        BigInt::from(n)
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }
    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }
    fn conj(&self, a: &BigInt) -> BigInt {
        a.clone()
    }
    fn lambda(&self) -> BigInt {
        self.lambda.clone()
    }
    fn inverse(&self, a: &BigInt) -> Option<BigInt> {
        if a.abs().is_one() {
            Some(a.clone())
        } else {
            None
        }
    }
    fn is_commutative(&self) -> bool {
        true
    }
    fn elements(&self) -> Option<Vec<BigInt>> {
        None
    }
    fn random(&self, rng: &mut dyn RngCore) -> BigInt {
        BigInt::from(rng.gen_range(-self.sample_bound..=self.sample_bound))
    }
    fn in_ideal(&self, ideal: &Ideal, a: &BigInt) -> bool {
        let g = ideal.generator();
        if g == 0 {
            a.is_zero()
        } else {
            a.is_multiple_of(&BigInt::from(g))
        }
    }
    fn write_elem(&self, a: &BigInt, out: &mut dyn Write) -> fmt::Result {
        write!(out, "{a}")
    }
    fn lambda_min_contains(&self, a: &BigInt) -> Option<bool> {
        // Λ_min = {x - λx}: {0} for λ = 1, 2Z for λ = -1.
        if self.lambda.is_one() {
            Some(a.is_zero())
        } else if (-&self.lambda).is_one() {
            Some(a.is_even())
        } else {
            None
        }
    }
}

/// `Z/m` with the trivial involution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Zmod {
    m: u64,
    lambda: u64,
}

impl Zmod {
    /// # Panics
    /// If `m == 0`.
    pub fn new(m: u64, lambda: i64) -> Self {
        assert!(m > 0, "modulus must be positive");
        Zmod {
            m,
            lambda: reduce_i64(lambda, m),
        }
    }

    pub fn modulus(&self) -> u64 {
        self.m
    }

    pub fn reduce(&self, n: i64) -> u64 {
        reduce_i64(n, self.m)
    }
}

pub(crate) fn reduce_i64(n: i64, m: u64) -> u64 {
    (n as i128).rem_euclid(m as i128) as u64
}

pub(crate) fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub(crate) fn addmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 + b as u128) % m as u128) as u64
}

pub(crate) fn negmod(a: u64, m: u64) -> u64 {
    if a == 0 {
        0
    } else {
        m - a
    }
}

pub(crate) fn invmod(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(0);
    }
    let e = (a as i128).extended_gcd(&(m as i128));
    if e.gcd != 1 {
        return None;
    }
    Some(e.x.rem_euclid(m as i128) as u64)
}

impl Ring for Zmod {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.m
    }
    fn from_int(&self, n: i64) -> u64 {
        self.reduce(n)
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        addmod(*a, *b, self.m)
    }
    fn neg(&self, a: &u64) -> u64 {
        negmod(*a, self.m)
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        mulmod(*a, *b, self.m)
    }
    fn conj(&self, a: &u64) -> u64 {
        *a
    }
    fn lambda(&self) -> u64 {
        self.lambda
    }
    fn inverse(&self, a: &u64) -> Option<u64> {
        invmod(*a, self.m)
    }
    fn is_commutative(&self) -> bool {
        true
    }
    fn elements(&self) -> Option<Vec<u64>> {
        if self.m as usize > ENUMERATION_LIMIT {
            return None;
        }
        Some((0..self.m).collect())
    }
    fn random(&self, rng: &mut dyn RngCore) -> u64 {
        rng.gen_range(0..self.m)
    }
    fn in_ideal(&self, ideal: &Ideal, a: &u64) -> bool {
        a % ideal.generator_mod(self.m) == 0
    }
    fn write_elem(&self, a: &u64, out: &mut dyn Write) -> fmt::Result {
        write!(out, "{a}")
    }
}

/// An element `re + im·i` of `(Z/m)[i]`, `i² = -1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Gauss {
    pub re: u64,
    pub im: u64,
}

impl Gauss {
    pub fn new(re: u64, im: u64) -> Self {
        Gauss { re, im }
    }
}

/// `(Z/m)[i]` with either the conjugation `ī = -i` or the trivial involution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaussianZmod {
    m: u64,
    lambda: Gauss,
    conjugation: bool,
}

impl GaussianZmod {
    /// # Panics
    /// If `m == 0`.
    pub fn new(m: u64, lambda: Gauss) -> Self {
        assert!(m > 0, "modulus must be positive");
        GaussianZmod {
            m,
            lambda: Gauss::new(lambda.re % m, lambda.im % m),
            conjugation: true,
        }
    }

    pub fn with_trivial_involution(mut self) -> Self {
        self.conjugation = false;
        self
    }

    pub fn modulus(&self) -> u64 {
        self.m
    }

    pub fn has_conjugation(&self) -> bool {
        self.conjugation
    }

    pub fn elem(&self, re: i64, im: i64) -> Gauss {
        Gauss::new(reduce_i64(re, self.m), reduce_i64(im, self.m))
    }
}

impl Ring for GaussianZmod {
    type Elem = Gauss;

    fn zero(&self) -> Gauss {
        Gauss::new(0, 0)
    }
    fn one(&self) -> Gauss {
        Gauss::new(1 % self.m, 0)
    }
    fn from_int(&self, n: i64) -> Gauss {
        Gauss::new(reduce_i64(n, self.m), 0)
    }
    fn add(&self, a: &Gauss, b: &Gauss) -> Gauss {
        Gauss::new(addmod(a.re, b.re, self.m), addmod(a.im, b.im, self.m))
    }
    fn neg(&self, a: &Gauss) -> Gauss {
        Gauss::new(negmod(a.re, self.m), negmod(a.im, self.m))
    }
    fn mul(&self, a: &Gauss, b: &Gauss) -> Gauss {
        let m = self.m;
        let re = addmod(mulmod(a.re, b.re, m), negmod(mulmod(a.im, b.im, m), m), m);
        let im = addmod(mulmod(a.re, b.im, m), mulmod(a.im, b.re, m), m);
        Gauss::new(re, im)
    }
    fn conj(&self, a: &Gauss) -> Gauss {
        if self.conjugation {
            Gauss::new(a.re, negmod(a.im, self.m))
        } else {
            *a
        }
    }
    fn lambda(&self) -> Gauss {
        self.lambda
    }
    fn inverse(&self, a: &Gauss) -> Option<Gauss> {
        // (re + im i)(re - im i) = re² + im²
        let m = self.m;
        let norm = addmod(mulmod(a.re, a.re, m), mulmod(a.im, a.im, m), m);
        let ninv = invmod(norm, m)?;
        Some(Gauss::new(mulmod(a.re, ninv, m), mulmod(negmod(a.im, m), ninv, m)))
    }
    fn is_commutative(&self) -> bool {
        true
    }
    fn elements(&self) -> Option<Vec<Gauss>> {
        let m = self.m;
        if (m as usize).saturating_mul(m as usize) > ENUMERATION_LIMIT {
            return None;
        }
        Some(
            (0..m)
                .flat_map(|re| (0..m).map(move |im| Gauss::new(re, im)))
                .collect(),
        )
    }
    fn random(&self, rng: &mut dyn RngCore) -> Gauss {
        Gauss::new(rng.gen_range(0..self.m), rng.gen_range(0..self.m))
    }
    fn in_ideal(&self, ideal: &Ideal, a: &Gauss) -> bool {
        let g = ideal.generator_mod(self.m);
        a.re % g == 0 && a.im % g == 0
    }
    fn write_elem(&self, a: &Gauss, out: &mut dyn Write) -> fmt::Result {
        match (a.re, a.im) {
            (0, 0) => write!(out, "0"),
            (re, 0) => write!(out, "{re}"),
            (0, 1) => write!(out, "i"),
            (0, im) => write!(out, "{im}i"),
            (re, 1) => write!(out, "{re}+i"),
            (re, im) => write!(out, "{re}+{im}i"),
        }
    }
}

/// Formats a coefficient for use in front of a variable power, adding
/// parentheses when the coefficient is not a single term.
pub(crate) fn coefficient_str(s: &str, var: char) -> String {
    let composite = s
        .char_indices()
        .any(|(k, c)| (c == '+' || c == '-') && k > 0)
        || s.contains(|c: char| c == var || c.is_ascii_uppercase() || "(,|[".contains(c));
    if composite {
        format!("({s})")
    } else {
        String::from(s)
    }
}

/// Writes `Σ c_k var^k` in the canonical text form shared by polynomial-like
/// rings (`1+2X+X^2`, `(1+i)X`, `1-2X`).
pub(crate) fn write_power_series<R: Ring + ?Sized>(
    ring: &R,
    coeffs: &[R::Elem],
    var: char,
    out: &mut dyn Write,
) -> fmt::Result {
    let mut first = true;
    for (k, c) in coeffs.iter().enumerate() {
        if ring.is_zero(c) {
            continue;
        }
        let s = ring.format(c);
        let term = match k {
            0 => s,
            _ => {
                let coeff = if ring.is_one(c) {
                    String::new()
                } else if s == "-1" {
                    String::from("-")
                } else {
                    coefficient_str(&s, var)
                };
                if k == 1 {
                    format!("{coeff}{var}")
                } else {
                    format!("{coeff}{var}^{k}")
                }
            }
        };
        if !first && !term.starts_with('-') {
            out.write_char('+')?;
        }
        out.write_str(&term)?;
        first = false;
    }
    if first {
        out.write_char('0')?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn zmod_arithmetic() {
        let r = Zmod::new(4, 3);
        assert_eq!(r.mul(&3, &3), 1);
        assert_eq!(r.neg(&1), 3);
        assert_eq!(r.inverse(&3), Some(3));
        assert_eq!(r.inverse(&2), None);
        assert_eq!(r.from_int(-5), 3);
        assert_eq!(r.elements().unwrap(), vec![0, 1, 2, 3]);
    }

    #[test]
    fn gaussian_arithmetic() {
        let r = GaussianZmod::new(5, Gauss::new(1, 0));
        let i = r.elem(0, 1);
        assert_eq!(r.mul(&i, &i), r.from_int(-1));
        assert_eq!(r.conj(&i), r.elem(0, -1));
        let x = r.elem(2, 3);
        let inv = r.inverse(&x).unwrap();
        assert_eq!(r.mul(&x, &inv), r.one());
        // 1 + 2i has norm 5 = 0, a zero divisor
        assert_eq!(r.inverse(&r.elem(1, 2)), None);
        assert_eq!(r.format(&r.elem(2, 3)), "2+3i");
        assert_eq!(r.format(&r.elem(0, 4)), "4i");
        assert_eq!(r.format(&r.elem(0, 1)), "i");
    }

    #[test]
    fn integer_lambda_min() {
        let z = Integers::new(-1);
        assert_eq!(z.lambda_min_contains(&BigInt::from(4)), Some(true));
        assert_eq!(z.lambda_min_contains(&BigInt::from(3)), Some(false));
        let z1 = Integers::new(1);
        assert_eq!(z1.lambda_min_contains(&BigInt::from(2)), Some(false));
        assert_eq!(Integers::new(2).lambda_min_contains(&BigInt::from(0)), None);
    }

    #[test]
    fn zmod_ideal_membership() {
        let r = Zmod::new(4, 1);
        let j = Ideal::new(2);
        assert!(r.in_ideal(&j, &2));
        assert!(!r.in_ideal(&j, &1));
        // 3Z/4 is the whole ring
        assert!(r.in_ideal(&Ideal::new(3), &1));
    }

    #[test]
    fn pow_by_squaring() {
        let r = Zmod::new(9, 1);
        assert_eq!(r.pow(&2, 6), 64 % 9);
        assert_eq!(r.pow(&5, 0), 1);
    }
}
