//! The excision ring `R ⊕ J`, the double ring `D = {(a, b) : a - b ∈ J}`,
//! their form parameters, the isomorphism between them, folding and lifting
//! of relative words, and the maps `i` and `p₂`.

use alloc::vec::Vec;
use core::fmt::{self, Write};

use rand::RngCore;

use crate::elementary::{word_inverse, ElemGen, ElemWord, Factor};
use crate::error::{Error, Result};
use crate::form::{in_lambda_max, min_element, sample_in_both, FormParameter};
use crate::gq::rel_congruent;
use crate::ideal::Ideal;
use crate::matrix::Matrix;
use crate::ring::{Ring, ENUMERATION_LIMIT};

/// `R ⊕ J` with `(r,i)(s,j) = (rs, rj + is + ij)`, componentwise involution
/// and `λ = (λ, 0)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Excision<R> {
    base: R,
    ideal: Ideal,
}

impl<R: Ring> Excision<R> {
    pub fn new(base: R, ideal: Ideal) -> Self {
        Excision { base, ideal }
    }

    pub fn base(&self) -> &R {
        &self.base
    }

    pub fn ideal(&self) -> Ideal {
        self.ideal
    }

    /// `(r, i)` after checking `i ∈ J`.
    pub fn pair(&self, r: R::Elem, i: R::Elem) -> Result<(R::Elem, R::Elem)> {
        if !self.base.in_ideal(&self.ideal, &i) {
            return Err(Error::ParameterNotInIdeal);
        }
        Ok((r, i))
    }

    /// `r ↦ (r, 0)`.
    pub fn embed(&self, r: &R::Elem) -> (R::Elem, R::Elem) {
        (r.clone(), self.base.zero())
    }

    /// `i ↦ (0, i)`.
    pub fn from_ideal(&self, i: &R::Elem) -> (R::Elem, R::Elem) {
        (self.base.zero(), i.clone())
    }

    /// The folding map `f(r, i) = r + i`.
    pub fn fold(&self, x: &(R::Elem, R::Elem)) -> R::Elem {
        self.base.add(&x.0, &x.1)
    }

    pub fn fold_matrix(&self, m: &Matrix<(R::Elem, R::Elem)>) -> Matrix<R::Elem> {
        m.map(|x| self.fold(x))
    }
}

impl<R: Ring> Ring for Excision<R> {
    type Elem = (R::Elem, R::Elem);

    fn zero(&self) -> Self::Elem {
        (self.base.zero(), self.base.zero())
    }
    fn one(&self) -> Self::Elem {
        (self.base.one(), self.base.zero())
    }
    fn from_int(&self, n: i64) -> Self::Elem {
        (self.base.from_int(n), self.base.zero())
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        (self.base.add(&a.0, &b.0), self.base.add(&a.1, &b.1))
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        (self.base.neg(&a.0), self.base.neg(&a.1))
    }
    fn mul(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        let b = &self.base;
        let ((r, i), (s, j)) = (x, y);
        let second = b.add(&b.add(&b.mul(r, j), &b.mul(i, s)), &b.mul(i, j));
        (b.mul(r, s), second)
    }
    fn conj(&self, a: &Self::Elem) -> Self::Elem {
        (self.base.conj(&a.0), self.base.conj(&a.1))
    }
    fn lambda(&self) -> Self::Elem {
        (self.base.lambda(), self.base.zero())
    }
    fn inverse(&self, a: &Self::Elem) -> Option<Self::Elem> {
        let b = &self.base;
        let r_inv = b.inverse(&a.0)?;
        let s_inv = b.inverse(&b.add(&a.0, &a.1))?;
        let j = b.neg(&b.mul(&b.mul(&s_inv, &a.1), &r_inv));
        let inv = (r_inv, j);
        (self.is_one(&self.mul(a, &inv)) && self.is_one(&self.mul(&inv, a))).then_some(inv)
    }
    fn is_commutative(&self) -> bool {
        self.base.is_commutative()
    }
    fn elements(&self) -> Option<Vec<Self::Elem>> {
        let all = self.base.elements()?;
        let ideal: Vec<R::Elem> = all.iter().filter(|x| self.base.in_ideal(&self.ideal, x)).cloned().collect();
        if all.len().saturating_mul(ideal.len()) > ENUMERATION_LIMIT {
            return None;
        }
        Some(
            all.iter()
                .flat_map(|r| ideal.iter().map(move |i| (r.clone(), i.clone())))
                .collect(),
        )
    }
    fn random(&self, rng: &mut dyn RngCore) -> Self::Elem {
        (self.base.random(rng), self.base.random_in_ideal(&self.ideal, rng))
    }
    fn in_ideal(&self, ideal: &Ideal, a: &Self::Elem) -> bool {
        self.base.in_ideal(ideal, &a.0) && self.base.in_ideal(ideal, &a.1)
    }
    fn random_in_ideal(&self, ideal: &Ideal, rng: &mut dyn RngCore) -> Self::Elem {
        let d = self.base.from_int(ideal.generator() as i64);
        let i = self.base.mul(&d, &self.base.random_in_ideal(&self.ideal, rng));
        (self.base.random_in_ideal(ideal, rng), i)
    }
    fn write_elem(&self, a: &Self::Elem, out: &mut dyn Write) -> fmt::Result {
        out.write_char('(')?;
        self.base.write_elem(&a.0, out)?;
        out.write_char(',')?;
        self.base.write_elem(&a.1, out)?;
        out.write_char(')')
    }
    fn is_central(&self, a: &Self::Elem) -> bool {
        self.base.is_central(&a.0) && self.base.is_central(&a.1)
    }
}

/// `Γ ⊕ J = (Λ ⊕ J) ∩ Λ_max(R ⊕ J)` for a form parameter `Λ` of `R`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GammaPlus<F>(pub F);

impl<R: Ring, F: FormParameter<R>> FormParameter<Excision<R>> for GammaPlus<F> {
    fn contains(&self, ring: &Excision<R>, a: &(R::Elem, R::Elem)) -> Result<bool> {
        Ok(self.0.contains(ring.base(), &a.0)?
            && ring.base().in_ideal(&ring.ideal(), &a.1)
            && in_lambda_max(ring, a))
    }
    fn sample(&self, ring: &Excision<R>, rng: &mut dyn RngCore) -> (R::Elem, R::Elem) {
        let b = ring.base();
        let r = self.0.sample(b, rng);
        for _ in 0..32 {
            let i = b.random_in_ideal(&ring.ideal(), rng);
            if in_lambda_max(b, &i) {
                return (r, i);
            }
        }
        (r, min_element(b, &b.random_in_ideal(&ring.ideal(), rng)))
    }
}

/// `D = {(a, b) ∈ R × R : a - b ∈ J}` with componentwise operations and
/// `λ′ = (λ, λ)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DoubleRing<R> {
    base: R,
    ideal: Ideal,
}

impl<R: Ring> DoubleRing<R> {
    pub fn new(base: R, ideal: Ideal) -> Self {
        DoubleRing { base, ideal }
    }

    pub fn base(&self) -> &R {
        &self.base
    }

    pub fn ideal(&self) -> Ideal {
        self.ideal
    }

    /// `(a, b)` after checking `a - b ∈ J`.
    pub fn pair(&self, a: R::Elem, b: R::Elem) -> Result<(R::Elem, R::Elem)> {
        if !self.base.in_ideal(&self.ideal, &self.base.sub(&a, &b)) {
            return Err(Error::ConstraintViolated);
        }
        Ok((a, b))
    }

    /// `f(a, b) = (a, b - a)`, from `D` to `R ⊕ J`.
    pub fn iso_f(&self, x: &(R::Elem, R::Elem)) -> (R::Elem, R::Elem) {
        (x.0.clone(), self.base.sub(&x.1, &x.0))
    }

    /// `g(a, i) = (a, a + i)`, from `R ⊕ J` to `D`.
    pub fn iso_g(&self, x: &(R::Elem, R::Elem)) -> (R::Elem, R::Elem) {
        (x.0.clone(), self.base.add(&x.0, &x.1))
    }

    /// The excision ring over the same base and ideal.
    pub fn excision(&self) -> Excision<R>
    where
        R: Clone,
    {
        Excision::new(self.base.clone(), self.ideal)
    }

    /// `i(α) = (α, I)` entrywise, defined when `α ≡ I` modulo `J`.
    pub fn seq_i(&self, alpha: &Matrix<R::Elem>) -> Result<Matrix<(R::Elem, R::Elem)>> {
        if !rel_congruent(&self.base, alpha, &self.ideal) {
            return Err(Error::NotCongruent);
        }
        let id = Matrix::identity(&self.base, alpha.rows());
        Ok(Matrix::from_fn(alpha.rows(), alpha.cols(), |k, l| {
            (alpha.get(k, l).clone(), id.get(k, l).clone())
        }))
    }

    /// `p₂(a, b) = b` entrywise.
    pub fn seq_p2(&self, m: &Matrix<(R::Elem, R::Elem)>) -> Matrix<R::Elem> {
        m.map(|x| x.1.clone())
    }
}

impl<R: Ring> Ring for DoubleRing<R> {
    type Elem = (R::Elem, R::Elem);

    fn zero(&self) -> Self::Elem {
        (self.base.zero(), self.base.zero())
    }
    fn one(&self) -> Self::Elem {
        (self.base.one(), self.base.one())
    }
    fn from_int(&self, n: i64) -> Self::Elem {
        (self.base.from_int(n), self.base.from_int(n))
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        (self.base.add(&a.0, &b.0), self.base.add(&a.1, &b.1))
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        (self.base.neg(&a.0), self.base.neg(&a.1))
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        (self.base.mul(&a.0, &b.0), self.base.mul(&a.1, &b.1))
    }
    fn conj(&self, a: &Self::Elem) -> Self::Elem {
        (self.base.conj(&a.0), self.base.conj(&a.1))
    }
    fn lambda(&self) -> Self::Elem {
        (self.base.lambda(), self.base.lambda())
    }
    fn inverse(&self, a: &Self::Elem) -> Option<Self::Elem> {
        Some((self.base.inverse(&a.0)?, self.base.inverse(&a.1)?))
    }
    fn is_commutative(&self) -> bool {
        self.base.is_commutative()
    }
    fn elements(&self) -> Option<Vec<Self::Elem>> {
        let all = self.base.elements()?;
        if all.len().saturating_mul(all.len()) > 4 * ENUMERATION_LIMIT {
            return None;
        }
        let pairs: Vec<Self::Elem> = all
            .iter()
            .flat_map(|a| all.iter().map(move |b| (a.clone(), b.clone())))
            .filter(|(a, b)| self.base.in_ideal(&self.ideal, &self.base.sub(a, b)))
            .collect();
        (pairs.len() <= ENUMERATION_LIMIT).then_some(pairs)
    }
    fn random(&self, rng: &mut dyn RngCore) -> Self::Elem {
        let a = self.base.random(rng);
        let b = self.base.add(&a, &self.base.random_in_ideal(&self.ideal, rng));
        (a, b)
    }
    fn in_ideal(&self, ideal: &Ideal, a: &Self::Elem) -> bool {
        self.base.in_ideal(ideal, &a.0) && self.base.in_ideal(ideal, &a.1)
    }
    fn random_in_ideal(&self, ideal: &Ideal, rng: &mut dyn RngCore) -> Self::Elem {
        let a = self.base.random_in_ideal(ideal, rng);
        let d = self.base.from_int(ideal.generator() as i64);
        let j = self.base.mul(&d, &self.base.random_in_ideal(&self.ideal, rng));
        let b = self.base.add(&a, &j);
        (a, b)
    }
    fn write_elem(&self, a: &Self::Elem, out: &mut dyn Write) -> fmt::Result {
        out.write_char('(')?;
        self.base.write_elem(&a.0, out)?;
        out.write_char('|')?;
        self.base.write_elem(&a.1, out)?;
        out.write_char(')')
    }
    fn is_central(&self, a: &Self::Elem) -> bool {
        self.base.is_central(&a.0) && self.base.is_central(&a.1)
    }
}

/// `Λ′ = {(a, b) ∈ Λ × Λ : a - b ∈ J}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LambdaPrime<F>(pub F);

impl<R: Ring, F: FormParameter<R>> FormParameter<DoubleRing<R>> for LambdaPrime<F> {
    fn contains(&self, ring: &DoubleRing<R>, a: &(R::Elem, R::Elem)) -> Result<bool> {
        let b = ring.base();
        Ok(self.0.contains(b, &a.0)?
            && self.0.contains(b, &a.1)?
            && b.in_ideal(&ring.ideal(), &b.sub(&a.0, &a.1)))
    }
    fn sample(&self, ring: &DoubleRing<R>, rng: &mut dyn RngCore) -> (R::Elem, R::Elem) {
        let b = ring.base();
        let a = self.0.sample(b, rng);
        let d = sample_in_both(b, &self.0, ring.ideal(), rng);
        let second = b.add(&a, &d);
        (a, second)
    }
}

fn lift_gen<R: Ring>(ring: &Excision<R>, g: &ElemGen<R::Elem>) -> ElemGen<(R::Elem, R::Elem)> {
    g.with_param(ring.embed(&g.a))
}

fn lift_absolute<R: Ring>(ring: &Excision<R>, w: &ElemWord<R::Elem>) -> Result<ElemWord<(R::Elem, R::Elem)>> {
    let factors = w
        .factors
        .iter()
        .map(|f| match f {
            Factor::Gen(g) => Ok(Factor::Gen(lift_gen(ring, g))),
            Factor::T12(b) => Ok(Factor::T12(b.map(|x| ring.embed(x)))),
            Factor::T21(c) => Ok(Factor::T21(c.map(|x| ring.embed(x)))),
            Factor::Rel(_) => Err(Error::MalformedWord("conjugators must be absolute words".into())),
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ElemWord::new(factors))
}

/// Lifts a word of relative generators over `(R, J)` to an absolute word over
/// `(R ⊕ J, Γ ⊕ J)` whose folding evaluates to the same matrix.
///
/// Conjugator parameters `x` become `(x, 0)` and core parameters `a` become
/// `(0, a)`; each relative factor `g·η(a)·g⁻¹` is written out as the flat
/// word `g̃, η((0, a)), g̃⁻¹`.
pub fn lift_relative_word<R: Ring>(
    ring: &Excision<R>,
    w: &ElemWord<R::Elem>,
) -> Result<ElemWord<(R::Elem, R::Elem)>> {
    let mut out = Vec::new();
    for f in &w.factors {
        let Factor::Rel(rel) = f else {
            return Err(Error::MalformedWord("expected only relative generators".into()));
        };
        if !ring.base().in_ideal(&ring.ideal(), &rel.core.a) {
            return Err(Error::ParameterNotInIdeal);
        }
        let conj = lift_absolute(ring, &rel.conjugator)?;
        let conj_inv = word_inverse(ring, &conj);
        out.extend(conj.factors);
        out.push(Factor::Gen(rel.core.with_param(ring.from_ideal(&rel.core.a))));
        out.extend(conj_inv.factors);
    }
    Ok(ElemWord::new(out))
}
