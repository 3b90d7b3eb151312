//! Vectors in the free hyperbolic module `R^{2n}`: the forms `f`, `h` and
//! `⟨·,·⟩`, the operator `M(v, w)`, and transvections `σ_{u,v,a}`.

use alloc::string::String;
use alloc::vec::Vec;
use alloc::{format, vec};

use crate::error::{Error, Result};
use crate::form::FormParameter;
use crate::gq::{gq_member, rel_congruent};
use crate::ideal::Ideal;
use crate::matrix::Matrix;
use crate::report::Report;
use crate::ring::Ring;

fn half(v: &[impl Sized]) -> Result<usize> {
    if v.len() % 2 != 0 || v.is_empty() {
        return Err(Error::DimensionMismatch {
            expected: v.len() + 1,
            found: v.len(),
        });
    }
    Ok(v.len() / 2)
}

fn same_length(a: usize, b: usize) -> Result<()> {
    if a != b {
        return Err(Error::DimensionMismatch { expected: a, found: b });
    }
    Ok(())
}

/// The row vector `ṽ = v̄ᵗψ_n`.
pub fn tilde<R: Ring + ?Sized>(ring: &R, v: &[R::Elem]) -> Result<Vec<R::Elem>> {
    let n = half(v)?;
    let lam = ring.lambda();
    let mut out = Vec::with_capacity(2 * n);
    for k in 0..n {
        out.push(ring.mul(&ring.conj(&v[n + k]), &lam));
    }
    for k in 0..n {
        out.push(ring.conj(&v[k]));
    }
    Ok(out)
}

fn dot<R: Ring + ?Sized>(ring: &R, row: &[R::Elem], col: &[R::Elem]) -> R::Elem {
    row.iter()
        .zip(col)
        .fold(ring.zero(), |acc, (a, b)| ring.add(&acc, &ring.mul(a, b)))
}

/// `⟨v, w⟩ = ṽ·w`, which is also the `λ`-Hermitian form `h(v, w) = v̄ᵗψ_n w`.
pub fn inner<R: Ring + ?Sized>(ring: &R, v: &[R::Elem], w: &[R::Elem]) -> Result<R::Elem> {
    same_length(v.len(), w.len())?;
    Ok(dot(ring, &tilde(ring, v)?, w))
}

/// The sesquilinear form `f(u, v) = Σ ū_i·v_{n+i}`.
pub fn form_f<R: Ring + ?Sized>(ring: &R, u: &[R::Elem], v: &[R::Elem]) -> Result<R::Elem> {
    let n = half(u)?;
    same_length(u.len(), v.len())?;
    Ok((0..n).fold(ring.zero(), |acc, i| ring.add(&acc, &ring.mul(&ring.conj(&u[i]), &v[n + i]))))
}

/// `h(u, v) = f(u, v) + λ·conj(f(v, u))`.
pub fn form_h<R: Ring + ?Sized>(ring: &R, u: &[R::Elem], v: &[R::Elem]) -> Result<R::Elem> {
    let fuv = form_f(ring, u, v)?;
    let fvu = form_f(ring, v, u)?;
    Ok(ring.add(&fuv, &ring.mul(&ring.lambda(), &ring.conj(&fvu))))
}

fn outer<R: Ring + ?Sized>(ring: &R, col: &[R::Elem], row: &[R::Elem]) -> Matrix<R::Elem> {
    Matrix::from_fn(col.len(), row.len(), |k, l| ring.mul(&col[k], &row[l]))
}

/// `M(v, w) = v·w̃ - λ̄·w·ṽ`.
pub fn m_op<R: Ring + ?Sized>(ring: &R, v: &[R::Elem], w: &[R::Elem]) -> Result<Matrix<R::Elem>> {
    same_length(v.len(), w.len())?;
    let first = outer(ring, v, &tilde(ring, w)?);
    let second = outer(ring, w, &tilde(ring, v)?).scale(ring, &ring.lambda_bar());
    Ok(first.sub(ring, &second))
}

/// Checks the computable consequences of `I + M(v, w)` lying in the relative
/// elementary subgroup of level `J`: it preserves `ψ_n` and is congruent to
/// `I` modulo `J`.
pub fn key_lemma_check<R: Ring + ?Sized>(ring: &R, v: &[R::Elem], w: &[R::Elem], ideal: &Ideal) -> Result<Report> {
    let ip = inner(ring, v, w)?;
    if !ring.is_zero(&ip) {
        return Err(Error::PreconditionFailed(format!("⟨v,w⟩ = {} ≠ 0", ring.format(&ip))));
    }
    if let Some(k) = w.iter().position(|x| !ring.in_ideal(ideal, x)) {
        return Err(Error::PreconditionFailed(format!(
            "w[{}] = {} is not in the ideal",
            k + 1,
            ring.format(&w[k])
        )));
    }
    let m = Matrix::identity(ring, v.len()).add(ring, &m_op(ring, v, w)?);
    let mut report = Report::new();
    let witness = |ok: bool| (!ok).then(|| m_string(ring, &m));
    report.record("gq_member", 1, witness(gq_member(ring, &m)?));
    report.record("rel_congruent", 1, witness(rel_congruent(ring, &m, ideal)));
    Ok(report)
}

fn m_string<R: Ring + ?Sized>(ring: &R, m: &Matrix<R::Elem>) -> String {
    let mut s = String::new();
    let _ = m.write(ring, &mut s);
    s
}

/// Which hypotheses of `σ_{u,v,a}` fail: `f(u,u) ∈ Λ`, `h(u,v) = 0`,
/// `f(v,v) - a ∈ Λ`.
pub fn transvection_hypotheses<R, F>(ring: &R, form: &F, u: &[R::Elem], v: &[R::Elem], a: &R::Elem) -> Result<Vec<String>>
where
    R: Ring + ?Sized,
    F: FormParameter<R> + ?Sized,
{
    let mut failed = Vec::new();
    let fuu = form_f(ring, u, u)?;
    if !form.contains(ring, &fuu)? {
        failed.push(format!("f(u,u) = {} ∉ Λ", ring.format(&fuu)));
    }
    let huv = form_h(ring, u, v)?;
    if !ring.is_zero(&huv) {
        failed.push(format!("h(u,v) = {} ≠ 0", ring.format(&huv)));
    }
    let d = ring.sub(&form_f(ring, v, v)?, a);
    if !form.contains(ring, &d)? {
        failed.push(format!("f(v,v) - a = {} ∉ Λ", ring.format(&d)));
    }
    Ok(failed)
}

fn check_hypotheses<R, F>(ring: &R, form: &F, u: &[R::Elem], v: &[R::Elem], a: &R::Elem) -> Result<()>
where
    R: Ring + ?Sized,
    F: FormParameter<R> + ?Sized,
{
    let failed = transvection_hypotheses(ring, form, u, v, a)?;
    if failed.is_empty() {
        Ok(())
    } else {
        Err(Error::PreconditionFailed(failed.join("; ")))
    }
}

fn apply_unchecked<R: Ring + ?Sized>(ring: &R, u: &[R::Elem], v: &[R::Elem], a: &R::Elem, x: &[R::Elem]) -> Result<Vec<R::Elem>> {
    let hvx = form_h(ring, v, x)?;
    let hux = form_h(ring, u, x)?;
    let lb = ring.lambda_bar();
    let s_v = ring.mul(&lb, &hux);
    let s_u = ring.mul(&ring.mul(&lb, a), &hux);
    Ok((0..x.len())
        .map(|k| {
            let t = ring.add(&x[k], &ring.mul(&u[k], &hvx));
            let t = ring.sub(&t, &ring.mul(&v[k], &s_v));
            ring.sub(&t, &ring.mul(&u[k], &s_u))
        })
        .collect())
}

/// `σ(x) = x + u·h(v,x) - v·λ̄·h(u,x) - u·λ̄·a·h(u,x)`.
pub fn transvection_apply<R, F>(ring: &R, form: &F, u: &[R::Elem], v: &[R::Elem], a: &R::Elem, x: &[R::Elem]) -> Result<Vec<R::Elem>>
where
    R: Ring + ?Sized,
    F: FormParameter<R> + ?Sized,
{
    same_length(u.len(), x.len())?;
    check_hypotheses(ring, form, u, v, a)?;
    apply_unchecked(ring, u, v, a, x)
}

/// The matrix of `σ_{u,v,a}`, column `k` being the image of `e_k`.
pub fn transvection_matrix<R, F>(ring: &R, form: &F, u: &[R::Elem], v: &[R::Elem], a: &R::Elem) -> Result<Matrix<R::Elem>>
where
    R: Ring + ?Sized,
    F: FormParameter<R> + ?Sized,
{
    check_hypotheses(ring, form, u, v, a)?;
    let cols = (0..u.len())
        .map(|k| apply_unchecked(ring, u, v, a, &basis(ring, u.len(), k)))
        .collect::<Result<Vec<_>>>()?;
    Ok(Matrix::from_columns(&cols))
}

/// `f(σx, σx) - f(x, x) ∈ Λ`, the quadratic form being valued in `R/Λ`.
pub fn q_preserved<R, F>(ring: &R, form: &F, sigma: &Matrix<R::Elem>, x: &[R::Elem]) -> Result<bool>
where
    R: Ring + ?Sized,
    F: FormParameter<R> + ?Sized,
{
    same_length(sigma.cols(), x.len())?;
    let y = sigma.mul_vec(ring, x);
    let d = ring.sub(&form_f(ring, &y, &y)?, &form_f(ring, x, x)?);
    form.contains(ring, &d)
}

/// The standard basis vector `e_k` (0-based) of length `len`.
pub fn basis<R: Ring + ?Sized>(ring: &R, len: usize, k: usize) -> Vec<R::Elem> {
    let mut v = vec![ring.zero(); len];
    v[k] = ring.one();
    v
}
