//! Elementary generators `qε`, `qr`, `ql`, relative generators and words of
//! generators (certificates).

use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use rand::{Rng as _, RngCore};

use crate::error::{Error, Result};
use crate::form::{sample_in_both, Bar, FormParameter};
use crate::gq::{rho, t12, t21};
use crate::ideal::Ideal;
use crate::matrix::Matrix;
use crate::ring::Ring;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    QE,
    QR,
    QL,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::QE => "QE",
            Family::QR => "QR",
            Family::QL => "QL",
        })
    }
}

/// One elementary generator. Indices are 1-based, as in `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElemGen<E> {
    pub family: Family,
    pub i: usize,
    pub j: usize,
    pub a: E,
}

impl<E: Clone> ElemGen<E> {
    pub fn new(family: Family, i: usize, j: usize, a: E) -> Self {
        ElemGen { family, i, j, a }
    }

    pub fn with_param<F>(&self, a: F) -> ElemGen<F> {
        ElemGen {
            family: self.family,
            i: self.i,
            j: self.j,
            a,
        }
    }
}

/// `g·η(a)·g⁻¹` with `g` a word over `R` and `a` in the ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelGen<E> {
    pub conjugator: ElemWord<E>,
    pub core: ElemGen<E>,
    pub ideal: Ideal,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Factor<E> {
    Gen(ElemGen<E>),
    Rel(RelGen<E>),
    /// `T₁₂(β)` with `β` `Λ̄`-Hermitian.
    T12(Matrix<E>),
    /// `T₂₁(γ)` with `γ` `Λ`-Hermitian.
    T21(Matrix<E>),
}

/// An ordered product of factors; its evaluation certifies membership in the
/// elementary subgroup.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElemWord<E> {
    pub factors: Vec<Factor<E>>,
}

impl<E> Default for ElemWord<E> {
    fn default() -> Self {
        ElemWord { factors: Vec::new() }
    }
}

impl<E> ElemWord<E> {
    pub fn new(factors: Vec<Factor<E>>) -> Self {
        ElemWord { factors }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }
}

impl<E> From<Vec<ElemGen<E>>> for ElemWord<E> {
    fn from(gens: Vec<ElemGen<E>>) -> Self {
        ElemWord {
            factors: gens.into_iter().map(Factor::Gen).collect(),
        }
    }
}

fn check_index(n: usize, k: usize) -> Result<usize> {
    if k == 0 || k > n {
        return Err(Error::BadParameter(format!("index {k} outside 1..={n}")));
    }
    Ok(k - 1)
}

/// The `2n×2n` matrix of a generator.
///
/// * `qε_ij(a) = I + a·e_ij - ā·e_ρ(j)ρ(i)`, `i ≠ j`;
/// * `qr_ij(a) = I + a·e_iρ(j) - λ̄ā·e_jρ(i)` for `i ≠ j`, and
///   `qr_ii(a) = I + a·e_iρ(i)` with `a ∈ Λ̄`;
/// * `ql_ij(a) = I + a·e_ρ(i)j - λā·e_ρ(j)i` for `i ≠ j`, and
///   `ql_ii(a) = I + a·e_ρ(i)i` with `a ∈ Λ`.
pub fn elem_gen_eval<R, F>(ring: &R, form: &F, g: &ElemGen<R::Elem>, n: usize) -> Result<Matrix<R::Elem>>
where
    R: Ring + ?Sized,
    F: FormParameter<R> + ?Sized,
{
    let i = check_index(n, g.i)?;
    let j = check_index(n, g.j)?;
    let a = &g.a;
    let abar = ring.conj(a);
    let mut m = Matrix::identity(ring, 2 * n);
    let mut put = |r: usize, c: usize, v: R::Elem| {
        let s = ring.add(m.get(r, c), &v);
        m.set(r, c, s);
    };
    match g.family {
        Family::QE => {
            if i == j {
                return Err(Error::BadParameter(format!("QE needs i ≠ j, got i = j = {}", g.i)));
            }
            put(i, j, a.clone());
            put(rho(n, j), rho(n, i), ring.neg(&abar));
        }
        Family::QR if i != j => {
            put(i, rho(n, j), a.clone());
            put(j, rho(n, i), ring.neg(&ring.mul(&ring.lambda_bar(), &abar)));
        }
        Family::QR => {
            if !Bar(form).contains(ring, a)? {
                return Err(Error::BadParameter(format!("QR_{{ii}} parameter {} is not in Λ̄", ring.format(a))));
            }
            put(i, rho(n, i), a.clone());
        }
        Family::QL if i != j => {
            put(rho(n, i), j, a.clone());
            put(rho(n, j), i, ring.neg(&ring.mul(&ring.lambda(), &abar)));
        }
        Family::QL => {
            if !form.contains(ring, a)? {
                return Err(Error::BadParameter(format!("QL_{{ii}} parameter {} is not in Λ", ring.format(a))));
            }
            put(rho(n, i), i, a.clone());
        }
    }
    Ok(m)
}

/// `g·η·g⁻¹`, after checking that the core parameter lies in the ideal.
pub fn rel_gen_eval<R, F>(ring: &R, form: &F, g: &RelGen<R::Elem>, n: usize) -> Result<Matrix<R::Elem>>
where
    R: Ring + ?Sized,
    F: FormParameter<R> + ?Sized,
{
    if !ring.in_ideal(&g.ideal, &g.core.a) {
        return Err(Error::ParameterNotInIdeal);
    }
    let c = word_eval(ring, form, &g.conjugator, n)?;
    let c_inv = word_eval(ring, form, &word_inverse(ring, &g.conjugator), n)?;
    let core = elem_gen_eval(ring, form, &g.core, n)?;
    Ok(c.mul(ring, &core).mul(ring, &c_inv))
}

pub fn factor_eval<R, F>(ring: &R, form: &F, f: &Factor<R::Elem>, n: usize) -> Result<Matrix<R::Elem>>
where
    R: Ring + ?Sized,
    F: FormParameter<R> + ?Sized,
{
    match f {
        Factor::Gen(g) => elem_gen_eval(ring, form, g, n),
        Factor::Rel(g) => rel_gen_eval(ring, form, g, n),
        Factor::T12(b) => {
            block_size(b, n)?;
            t12(ring, form, b)
        }
        Factor::T21(c) => {
            block_size(c, n)?;
            t21(ring, form, c)
        }
    }
}

fn block_size<E: Clone>(m: &Matrix<E>, n: usize) -> Result<()> {
    if m.rows() != n || m.cols() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: m.rows().max(m.cols()),
        });
    }
    Ok(())
}

/// Ordered product of the factors; the empty word gives `I_2n`.
pub fn word_eval<R, F>(ring: &R, form: &F, w: &ElemWord<R::Elem>, n: usize) -> Result<Matrix<R::Elem>>
where
    R: Ring + ?Sized,
    F: FormParameter<R> + ?Sized,
{
    let mut acc = Matrix::identity(ring, 2 * n);
    for f in &w.factors {
        acc = acc.mul(ring, &factor_eval(ring, form, f, n)?);
    }
    Ok(acc)
}

pub fn gen_inverse<R: Ring + ?Sized>(ring: &R, g: &ElemGen<R::Elem>) -> ElemGen<R::Elem> {
    g.with_param(ring.neg(&g.a))
}

pub fn factor_inverse<R: Ring + ?Sized>(ring: &R, f: &Factor<R::Elem>) -> Factor<R::Elem> {
    match f {
        Factor::Gen(g) => Factor::Gen(gen_inverse(ring, g)),
        Factor::Rel(g) => Factor::Rel(RelGen {
            conjugator: g.conjugator.clone(),
            core: gen_inverse(ring, &g.core),
            ideal: g.ideal,
        }),
        Factor::T12(b) => Factor::T12(b.neg(ring)),
        Factor::T21(c) => Factor::T21(c.neg(ring)),
    }
}

/// Reverses the word and inverts each factor.
pub fn word_inverse<R: Ring + ?Sized>(ring: &R, w: &ElemWord<R::Elem>) -> ElemWord<R::Elem> {
    ElemWord {
        factors: w.factors.iter().rev().map(|f| factor_inverse(ring, f)).collect(),
    }
}

/// A uniformly chosen generator shape with a random admissible parameter.
pub fn random_gen<R, F>(ring: &R, form: &F, n: usize, rng: &mut dyn RngCore) -> ElemGen<R::Elem>
where
    R: Ring + ?Sized,
    F: FormParameter<R> + ?Sized,
{
    let family = match rng.gen_range(0..3) {
        0 => Family::QE,
        1 => Family::QR,
        _ => Family::QL,
    };
    let i = rng.gen_range(1..=n);
    let mut j = rng.gen_range(1..=n);
    if family == Family::QE {
        if n == 1 {
            // no off-diagonal positions; fall back to a diagonal QL
            return ElemGen::new(Family::QL, 1, 1, form.sample(ring, rng));
        }
        while j == i {
            j = rng.gen_range(1..=n);
        }
    }
    random_param_gen(ring, form, family, i, j, rng)
}

/// A generator at a fixed position with a random admissible parameter.
pub fn random_param_gen<R, F>(
    ring: &R,
    form: &F,
    family: Family,
    i: usize,
    j: usize,
    rng: &mut dyn RngCore,
) -> ElemGen<R::Elem>
where
    R: Ring + ?Sized,
    F: FormParameter<R> + ?Sized,
{
    let a = match (family, i == j) {
        (Family::QR, true) => Bar(form).sample(ring, rng),
        (Family::QL, true) => form.sample(ring, rng),
        _ => ring.random(rng),
    };
    ElemGen::new(family, i, j, a)
}

pub fn random_word<R, F>(ring: &R, form: &F, n: usize, len: usize, rng: &mut dyn RngCore) -> ElemWord<R::Elem>
where
    R: Ring + ?Sized,
    F: FormParameter<R> + ?Sized,
{
    (0..len).map(|_| random_gen(ring, form, n, rng)).collect::<Vec<_>>().into()
}

/// A relative generator with a random conjugator word of length `conj_len`
/// and a random core parameter in the ideal.
pub fn random_rel_gen<R, F>(
    ring: &R,
    form: &F,
    ideal: Ideal,
    n: usize,
    conj_len: usize,
    rng: &mut dyn RngCore,
) -> RelGen<R::Elem>
where
    R: Ring + ?Sized,
    F: FormParameter<R> + ?Sized,
{
    let conjugator = random_word(ring, form, n, conj_len, rng);
    let shape = random_gen(ring, form, n, rng);
    // diagonal cores need parameters in both the ideal and the form parameter
    let a = match (shape.family, shape.i == shape.j) {
        (Family::QR, true) => sample_in_both(ring, &Bar(form), ideal, rng),
        (Family::QL, true) => sample_in_both(ring, form, ideal, rng),
        _ => ring.random_in_ideal(&ideal, rng),
    };
    RelGen {
        conjugator,
        core: shape.with_param(a),
        ideal,
    }
}

/// A word of `len` random relative generators.
pub fn random_rel_word<R, F>(
    ring: &R,
    form: &F,
    ideal: Ideal,
    n: usize,
    len: usize,
    rng: &mut dyn RngCore,
) -> ElemWord<R::Elem>
where
    R: Ring + ?Sized,
    F: FormParameter<R> + ?Sized,
{
    let factors = (0..len)
        .map(|_| {
            let conj_len = rng.gen_range(0..=3);
            Factor::Rel(random_rel_gen(ring, form, ideal, n, conj_len, rng))
        })
        .collect();
    ElemWord { factors }
}
