//! Graded rings `R = R₀ ⊕ R₁ ⊕ ⋯`, the homomorphism `ε(b) = Σ b_i X^i` and
//! its specializations `b⁺(a) = ε(b)(a)`.
//!
//! The concrete graded ring is `A[Y]` graded by `Y`-degree, so `R₀ = A` and
//! the homogeneous component of degree `i` of an element is `c_i·Y^i`.

use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use rand::{Rng as _, RngCore};

use crate::error::{Error, Result};
use crate::form::{all_in, Coefficientwise, FormParameter};
use crate::ideal::Ideal;
use crate::matrix::Matrix;
use crate::poly::PolyRing;
use crate::ring::Ring;

/// `A[Y]` graded by degree in `Y`.
///
/// `top_degree` bounds random sampling and validated input; products are
/// exact and may exceed it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedRing<R> {
    inner: PolyRing<R>,
    top_degree: usize,
}

impl<R: Ring> GradedRing<R> {
    pub fn new(base: R, top_degree: usize) -> Self {
        GradedRing {
            inner: PolyRing::new(base).with_variable('Y').with_sample_degree(top_degree),
            top_degree,
        }
    }

    pub fn base(&self) -> &R {
        self.inner.base()
    }

    pub fn top_degree(&self) -> usize {
        self.top_degree
    }

    /// The underlying polynomial ring `A[Y]`.
    pub fn as_poly(&self) -> &PolyRing<R> {
        &self.inner
    }

    pub fn normalize(&self, c: Vec<R::Elem>) -> Vec<R::Elem> {
        self.inner.normalize(c)
    }

    /// The coefficient `c_i` of the degree-`i` component `c_i·Y^i`.
    pub fn component(&self, b: &[R::Elem], i: usize) -> R::Elem {
        self.inner.coeff(b, i)
    }

    /// `c·Y^i`.
    pub fn homogeneous(&self, c: R::Elem, i: usize) -> Vec<R::Elem> {
        self.inner.monomial(c, i)
    }

    /// A degree-0 element `a ∈ R₀`.
    pub fn scalar(&self, a: R::Elem) -> Vec<R::Elem> {
        self.inner.constant(a)
    }

    pub fn is_degree_zero(&self, b: &[R::Elem]) -> bool {
        b.len() <= 1
    }

    /// Rejects elements with components above `top_degree`.
    pub fn validate(&self, b: &[R::Elem]) -> Result<()> {
        match self.inner.degree(b) {
            Some(d) if d > self.top_degree => Err(Error::DegreeError(format!(
                "component of degree {d} exceeds the top degree {}",
                self.top_degree
            ))),
            _ => Ok(()),
        }
    }

    /// `ε(b) = Σ b_i X^i` over this graded ring.
    pub fn epsilon(&self, b: &[R::Elem]) -> Vec<Vec<R::Elem>> {
        b.iter()
            .enumerate()
            .map(|(i, c)| self.homogeneous(c.clone(), i))
            .collect()
    }

    /// The polynomial ring over `self` that `ε` lands in.
    pub fn epsilon_ring(&self) -> PolyRing<Self>
    where
        R: Clone,
    {
        PolyRing::new(self.clone())
    }

    /// `b⁺(a) = Σ b_i·aⁱ` for `a` of degree 0.
    pub fn plus_eval(&self, b: &[R::Elem], a: &[R::Elem]) -> Result<Vec<R::Elem>> {
        if !self.is_degree_zero(a) {
            return Err(Error::DegreeError(format!(
                "evaluation point {} is not of degree 0",
                self.format(&a.to_vec())
            )));
        }
        let base = self.base();
        let a0 = a.first().cloned().unwrap_or_else(|| base.zero());
        let mut power = base.one();
        let mut out = Vec::with_capacity(b.len());
        for c in b {
            out.push(base.mul(c, &power));
            power = base.mul(&power, &a0);
        }
        Ok(self.normalize(out))
    }

    /// Entrywise `α⁺(a)`. This is a ring homomorphism for every `a` of
    /// degree 0, and commutes with the involution (so preserves `GQ`) when
    /// `ā = a`.
    pub fn plus_eval_matrix(&self, alpha: &Matrix<Vec<R::Elem>>, a: &[R::Elem]) -> Result<Matrix<Vec<R::Elem>>> {
        let rows = (0..alpha.rows())
            .map(|k| alpha.row(k).iter().map(|b| self.plus_eval(b, a)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Ok(Matrix::from_rows(rows).unwrap_or_else(|| Matrix::zeros(self, 0, 0)))
    }

    /// The degree-0 part `α₀` as a matrix over `R₀`.
    pub fn degree_zero_matrix(&self, alpha: &Matrix<Vec<R::Elem>>) -> Matrix<R::Elem> {
        alpha.map(|b| self.component(b, 0))
    }

    /// `α ≡ I` modulo `R₊ = R₁ ⊕ R₂ ⊕ ⋯`, i.e. `α₀ = I`.
    pub fn graded_congruence(&self, alpha: &Matrix<Vec<R::Elem>>) -> bool {
        alpha.is_square() && self.degree_zero_matrix(alpha).is_identity(self.base())
    }
}

impl<R: Ring> Ring for GradedRing<R> {
    type Elem = Vec<R::Elem>;

    fn zero(&self) -> Self::Elem {
        self.inner.zero()
    }
    fn one(&self) -> Self::Elem {
        self.inner.one()
    }
    fn from_int(&self, n: i64) -> Self::Elem {
        self.inner.from_int(n)
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.inner.add(a, b)
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        self.inner.neg(a)
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.inner.mul(a, b)
    }
    fn conj(&self, a: &Self::Elem) -> Self::Elem {
        self.inner.conj(a)
    }
    fn lambda(&self) -> Self::Elem {
        self.inner.lambda()
    }
    fn inverse(&self, a: &Self::Elem) -> Option<Self::Elem> {
        self.inner.inverse(a)
    }
    fn is_commutative(&self) -> bool {
        self.inner.is_commutative()
    }
    fn elements(&self) -> Option<Vec<Self::Elem>> {
        None
    }
    fn random(&self, rng: &mut dyn RngCore) -> Self::Elem {
        let deg = rng.gen_range(0..=self.top_degree);
        self.inner.random_of_degree(deg, rng)
    }
    fn in_ideal(&self, ideal: &Ideal, a: &Self::Elem) -> bool {
        self.inner.in_ideal(ideal, a)
    }
    fn random_in_ideal(&self, ideal: &Ideal, rng: &mut dyn RngCore) -> Self::Elem {
        self.inner.random_in_ideal(ideal, rng)
    }
    fn write_elem(&self, a: &Self::Elem, out: &mut dyn fmt::Write) -> fmt::Result {
        self.inner.write_elem(a, out)
    }
    fn lambda_min_contains(&self, a: &Self::Elem) -> Option<bool> {
        self.inner.lambda_min_contains(a)
    }
    fn is_central(&self, a: &Self::Elem) -> bool {
        self.inner.is_central(a)
    }
}

impl<R: Ring, F: FormParameter<R>> FormParameter<GradedRing<R>> for Coefficientwise<F> {
    fn contains(&self, ring: &GradedRing<R>, a: &Vec<R::Elem>) -> Result<bool> {
        all_in(ring.base(), &self.0, a)
    }
    fn sample(&self, ring: &GradedRing<R>, rng: &mut dyn RngCore) -> Vec<R::Elem> {
        let deg = rng.gen_range(0..=ring.top_degree());
        ring.normalize((0..=deg).map(|_| self.0.sample(ring.base(), rng)).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::elementary::{elem_gen_eval, ElemGen, Family};
    use crate::form::LambdaMax;
    use crate::ring::{Integers, Zmod};
    use alloc::vec;
    use num_bigint::BigInt;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn epsilon_and_plus_eval_examples() {
        let g = GradedRing::new(Integers::new(1), 4);
        let b = ints(&[2, 3]);
        let eps = g.epsilon(&b);
        assert_eq!(eps, vec![ints(&[2]), ints(&[0, 3])]);
        let p = g.epsilon_ring();
        assert_eq!(p.format(&eps), "2+(3Y)X");
        assert_eq!(g.epsilon(&g.one()), p.one());
        assert_eq!(g.plus_eval(&b, &ints(&[5])).unwrap(), ints(&[2, 15]));
        assert_eq!(g.plus_eval(&b, &[]).unwrap(), ints(&[2]));
        assert!(matches!(g.plus_eval(&b, &ints(&[0, 1])), Err(Error::DegreeError(_))));
    }

    #[test]
    fn graded_congruence_examples() {
        let z4 = Zmod::new(4, 3);
        let g = GradedRing::new(z4, 3);
        let mut m = Matrix::identity(&g, 2);
        m.set(0, 1, vec![0, 1, 2]);
        m.set(1, 1, vec![1, 0, 3]);
        assert!(g.graded_congruence(&m));
        let qe = elem_gen_eval(&g, &Coefficientwise(LambdaMax), &ElemGen::new(Family::QE, 1, 2, vec![1]), 2).unwrap();
        assert!(!g.graded_congruence(&qe));
        assert_eq!(g.plus_eval_matrix(&m, &[]).unwrap(), Matrix::identity(&g, 2));
        let id = Matrix::identity(&g, 4);
        assert_eq!(g.plus_eval_matrix(&id, &[2]).unwrap(), id);
    }

    #[test]
    fn dilation_needs_a_self_conjugate_point() {
        use crate::form::{Bar, LambdaMin};
        use crate::gq::gq_member;
        use crate::ring::{Gauss, GaussianZmod};
        let r = GaussianZmod::new(5, Gauss::new(1, 0));
        let g = GradedRing::new(r.clone(), 2);
        let form = Coefficientwise(LambdaMin);
        // qr₁₁(2i + 2iY) with 2i + 2iY ∈ Λ̄[Y]
        let a = vec![r.elem(0, 2), r.elem(0, 2)];
        assert!(Bar(&form).contains(&g, &a).unwrap());
        let q = elem_gen_eval(&g, &form, &ElemGen::new(Family::QR, 1, 1, a), 2).unwrap();
        assert!(gq_member(&g, &q).unwrap());
        let real = g.scalar(r.elem(3, 0));
        assert!(gq_member(&g, &g.plus_eval_matrix(&q, &real).unwrap()).unwrap());
        let imaginary = g.scalar(r.elem(0, 1));
        assert!(!gq_member(&g, &g.plus_eval_matrix(&q, &imaginary).unwrap()).unwrap());
    }
}
