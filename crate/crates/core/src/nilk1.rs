//! Reductions of `Λ`-quadratic matrices to hyperbolic ones with explicit
//! certificates, nil-group normal forms `[a; b, c]_n`, and unit
//! factorizations in truncated polynomial rings.

use alloc::format;
use alloc::vec::Vec;

use crate::elementary::{word_eval, ElemWord, Factor};
use crate::error::{Error, Result};
use crate::form::{Coefficientwise, FormParameter};
use crate::gq::{half_rank, hyperbolic, is_lambda_bar_hermitian, is_lambda_hermitian};
use crate::matrix::{invert, is_inverse_pair, Matrix};
use crate::poly::{PolyRing, DEFAULT_NILPOTENCY_BOUND};
use crate::ring::Ring;
use crate::trunc::{trunc_inverse, TruncRing};

/// `input · eval(certificate) = H(alpha)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionResult<E> {
    pub alpha: Matrix<E>,
    pub alpha_inv: Matrix<E>,
    pub certificate: ElemWord<E>,
}

impl<E: Clone + Eq + Ord + core::fmt::Debug> ReductionResult<E> {
    /// `H(alpha)`.
    pub fn hyperbolic<R: Ring<Elem = E> + ?Sized>(&self, ring: &R) -> Result<Matrix<E>> {
        hyperbolic(ring, &self.alpha, &self.alpha_inv)
    }

    /// Re-evaluates the certificate and compares `input · eval` with `H(alpha)`.
    pub fn reconstructs<R, F>(&self, ring: &R, form: &F, input: &Matrix<E>) -> Result<bool>
    where
        R: Ring<Elem = E> + ?Sized,
        F: FormParameter<R> + ?Sized,
    {
        let n = half_rank(input)?;
        let cert = word_eval(ring, form, &self.certificate, n)?;
        Ok(input.mul(ring, &cert) == self.hyperbolic(ring)?)
    }
}

fn block_inverse<R: Ring + ?Sized>(
    ring: &R,
    alpha: &Matrix<R::Elem>,
    supplied: Option<&Matrix<R::Elem>>,
) -> Result<Matrix<R::Elem>> {
    match supplied {
        Some(inv) if is_inverse_pair(ring, alpha, inv) => Ok(inv.clone()),
        Some(_) => Err(Error::NotInvertible),
        None => invert(ring, alpha, DEFAULT_NILPOTENCY_BOUND).ok_or(Error::NotInvertible),
    }
}

fn push_nonzero<R: Ring + ?Sized>(ring: &R, word: &mut ElemWord<R::Elem>, f: Factor<R::Elem>) {
    let trivial = match &f {
        Factor::T12(m) | Factor::T21(m) => m.is_zero(ring),
        _ => false,
    };
    if !trivial {
        word.factors.push(f);
    }
}

/// Reduces `A = (α β; 0 δ)` to `H(α)`: checks `δ = (α*)⁻¹` and that `α⁻¹β`
/// is `Λ̄`-Hermitian, and returns the certificate `[T₁₂(-α⁻¹β)]`.
pub fn reduce_upper<R, F>(
    ring: &R,
    form: &F,
    a: &Matrix<R::Elem>,
    alpha_inv: Option<&Matrix<R::Elem>>,
) -> Result<ReductionResult<R::Elem>>
where
    R: Ring + ?Sized,
    F: FormParameter<R> + ?Sized,
{
    half_rank(a)?;
    let (alpha, beta, gamma, delta) = a.quadrants();
    if !gamma.is_zero(ring) {
        return Err(Error::NotQuadratic("lower-left block is not zero".into()));
    }
    let inv = block_inverse(ring, &alpha, alpha_inv)?;
    if delta != inv.star(ring) {
        return Err(Error::NotQuadratic("δ ≠ (α*)⁻¹".into()));
    }
    let x = inv.mul(ring, &beta);
    if !is_lambda_bar_hermitian(ring, form, &x)? {
        return Err(Error::NotQuadratic("α⁻¹β is not Λ̄-Hermitian".into()));
    }
    let mut certificate = ElemWord::empty();
    push_nonzero(ring, &mut certificate, Factor::T12(x.neg(ring)));
    Ok(ReductionResult {
        alpha,
        alpha_inv: inv,
        certificate,
    })
}

/// Reduces `B = (α 0; γ δ)` to `H(α)`: checks `δ = (α*)⁻¹` and that `α*γ`
/// is `Λ`-Hermitian, and returns the certificate `[T₂₁(-α*γ)]`.
pub fn reduce_lower<R, F>(
    ring: &R,
    form: &F,
    b: &Matrix<R::Elem>,
    alpha_inv: Option<&Matrix<R::Elem>>,
) -> Result<ReductionResult<R::Elem>>
where
    R: Ring + ?Sized,
    F: FormParameter<R> + ?Sized,
{
    half_rank(b)?;
    let (alpha, beta, gamma, delta) = b.quadrants();
    if !beta.is_zero(ring) {
        return Err(Error::NotQuadratic("upper-right block is not zero".into()));
    }
    let inv = block_inverse(ring, &alpha, alpha_inv)?;
    if delta != inv.star(ring) {
        return Err(Error::NotQuadratic("δ ≠ (α*)⁻¹".into()));
    }
    let y = alpha.star(ring).mul(ring, &gamma);
    if !is_lambda_hermitian(ring, form, &y)? {
        return Err(Error::NotQuadratic("α*γ is not Λ-Hermitian".into()));
    }
    let mut certificate = ElemWord::empty();
    push_nonzero(ring, &mut certificate, Factor::T21(y.neg(ring)));
    Ok(ReductionResult {
        alpha,
        alpha_inv: inv,
        certificate,
    })
}

/// Reduces `σ = (a b; c d)` with `a` invertible to `H(a)`, via
/// `σ·T₁₂(-a⁻¹b)` (lower triangular) and [`reduce_lower`].
pub fn reduce_invertible_corner<R, F>(
    ring: &R,
    form: &F,
    sigma: &Matrix<R::Elem>,
    a_inv: Option<&Matrix<R::Elem>>,
) -> Result<ReductionResult<R::Elem>>
where
    R: Ring + ?Sized,
    F: FormParameter<R> + ?Sized,
{
    half_rank(sigma)?;
    let (a, b, _, _) = sigma.quadrants();
    let inv = block_inverse(ring, &a, a_inv)?;
    let x = inv.mul(ring, &b);
    if !is_lambda_bar_hermitian(ring, form, &x)? {
        return Err(Error::NotQuadratic("a⁻¹b is not Λ̄-Hermitian".into()));
    }
    let step = crate::gq::t12_unchecked(ring, &x.neg(ring));
    let lower = sigma.mul(ring, &step);
    let rest = reduce_lower(ring, form, &lower, Some(&inv))?;
    let mut certificate = ElemWord::empty();
    push_nonzero(ring, &mut certificate, Factor::T12(x.neg(ring)));
    certificate.factors.extend(rest.certificate.factors);
    Ok(ReductionResult {
        alpha: a,
        alpha_inv: inv,
        certificate,
    })
}

/// Data `(a, b, c, n)` of the normal form `[a; b, c]_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KopeikoData<E> {
    pub a: Matrix<E>,
    pub b: Matrix<E>,
    pub c: Matrix<E>,
    pub n: usize,
}

impl<E: Clone> KopeikoData<E> {
    pub fn r(&self) -> usize {
        self.a.rows()
    }
}

/// Checks the three defining conditions of `[a; b, c]_n`:
///
/// 1. `b` and `ab` are `Λ̄`-Hermitian and `ab = ba*`;
/// 2. `c` and `ca` are `Λ`-Hermitian and `ca = a*c`;
/// 3. `bc = a^{n+1}` and `cb = (a*)^{n+1}`.
pub fn kopeiko_validate<R, F>(ring: &R, form: &F, d: &KopeikoData<R::Elem>) -> Result<()>
where
    R: Ring + ?Sized,
    F: FormParameter<R> + ?Sized,
{
    let r = d.r();
    for m in [&d.a, &d.b, &d.c] {
        if m.rows() != r || m.cols() != r {
            return Err(Error::DimensionMismatch {
                expected: r,
                found: if m.rows() != r { m.rows() } else { m.cols() },
            });
        }
    }
    if d.n == 0 {
        return Err(Error::BadParameter("degree n must be positive".into()));
    }
    let a_s = d.a.star(ring);
    let ab = d.a.mul(ring, &d.b);
    let ok1 = is_lambda_bar_hermitian(ring, form, &d.b)?
        && is_lambda_bar_hermitian(ring, form, &ab)?
        && ab == d.b.mul(ring, &a_s);
    if !ok1 {
        return Err(Error::ConditionViolated(1));
    }
    let ca = d.c.mul(ring, &d.a);
    let ok2 = is_lambda_hermitian(ring, form, &d.c)?
        && is_lambda_hermitian(ring, form, &ca)?
        && ca == a_s.mul(ring, &d.c);
    if !ok2 {
        return Err(Error::ConditionViolated(2));
    }
    let e = d.n as u32 + 1;
    let ok3 = d.b.mul(ring, &d.c) == d.a.pow(ring, e) && d.c.mul(ring, &d.b) == a_s.pow(ring, e);
    if !ok3 {
        return Err(Error::ConditionViolated(3));
    }
    Ok(())
}

/// `[a; b, c]_n = (I - aX, bX; -cX^n, I + a*X + ⋯ + (a*)^n X^n)` over `R[X]`.
pub fn kopeiko_matrix<R: Ring>(poly: &PolyRing<R>, d: &KopeikoData<R::Elem>) -> Matrix<Vec<R::Elem>> {
    let base = poly.base();
    let r = d.r();
    let a_s = d.a.star(base);
    let at = |m: &Matrix<R::Elem>, k: usize, l: usize, deg: usize| poly.monomial(m.get(k, l).clone(), deg);
    let id = Matrix::identity(poly, r);
    let top_left = id.sub(poly, &Matrix::from_fn(r, r, |k, l| at(&d.a, k, l, 1)));
    let top_right = Matrix::from_fn(r, r, |k, l| at(&d.b, k, l, 1));
    let bottom_left = Matrix::from_fn(r, r, |k, l| poly.neg(&at(&d.c, k, l, d.n)));
    let mut bottom_right = Matrix::zeros(poly, r, r);
    let mut power = Matrix::identity(base, r);
    for deg in 0..=d.n {
        bottom_right = bottom_right.add(poly, &Matrix::from_fn(r, r, |k, l| at(&power, k, l, deg)));
        power = power.mul(base, &a_s);
    }
    Matrix::from_quadrants(&top_left, &top_right, &bottom_left, &bottom_right)
}

/// `(I - aX)⁻¹ = Σ_{i<N} aⁱXⁱ` for `a^N = 0`, searching `N ≤ bound`.
pub fn geometric_inverse<R: Ring>(poly: &PolyRing<R>, a: &Matrix<R::Elem>, bound: usize) -> Result<Matrix<Vec<R::Elem>>> {
    let base = poly.base();
    let nil = a.nilpotency_index(base, bound).ok_or(Error::NotNilpotent { bound })?;
    let r = a.rows();
    let mut sum = Matrix::zeros(poly, r, r);
    let mut power = Matrix::identity(base, r);
    for deg in 0..nil {
        sum = sum.add(poly, &power.map(|x| poly.monomial(x.clone(), deg)));
        power = power.mul(base, a);
    }
    Ok(sum)
}

/// Reduces `[a; b, c]_n` to `H(I - aX)` for nilpotent `a`.
pub fn kopeiko_to_hyperbolic<R, F>(
    poly: &PolyRing<R>,
    form: &F,
    d: &KopeikoData<R::Elem>,
) -> Result<ReductionResult<Vec<R::Elem>>>
where
    R: Ring,
    F: FormParameter<R>,
{
    kopeiko_validate(poly.base(), form, d)?;
    let inv = geometric_inverse(poly, &d.a, DEFAULT_NILPOTENCY_BOUND)?;
    let m = kopeiko_matrix(poly, d);
    reduce_invertible_corner(poly, &Coefficientwise(form), &m, Some(&inv))
}

/// Splits `1 + X^r P` in `R_t` as `(1 + P(0)X^r)(1 + X^{r+1}Q)` and returns
/// `(P(0), Q)`, with `deg Q < t - r`.
pub fn trunc_split<R: Ring>(tr: &TruncRing<R>, p: &[R::Elem], r: usize) -> Result<(R::Elem, Vec<R::Elem>)> {
    let t = tr.t();
    if r == 0 || r > t {
        return Err(Error::BadParameter(format!("need 1 ≤ r ≤ t, got r = {r}, t = {t}")));
    }
    let base = tr.base();
    let mut u = tr.one();
    for (k, c) in p.iter().enumerate() {
        if r + k <= t {
            u[r + k] = base.add(&u[r + k], c);
        }
    }
    let c = p.first().cloned().unwrap_or_else(|| base.zero());
    let first = tr.one_plus_monomial(&c, r);
    let v = tr.mul(&trunc_inverse(tr, &first)?, &u);
    debug_assert!(v[1..=r].iter().all(|x| base.is_zero(x)));
    Ok((c, tr.to_poly(&v[r + 1..])))
}

/// The unique `a_1, …, a_t` with `1 + XP = Π_{i=1}^t (1 + a_i X^i)` in `R_t`.
pub fn trunc_product_decomp<R: Ring>(tr: &TruncRing<R>, p: &[R::Elem]) -> Result<Vec<R::Elem>> {
    let t = tr.t();
    let base = tr.base();
    let mut u = tr.one();
    for (k, c) in p.iter().enumerate() {
        if k < t {
            u[k + 1] = base.add(&u[k + 1], c);
        }
    }
    let mut out = Vec::with_capacity(t);
    for i in 1..=t {
        let a = u[i].clone();
        u = tr.mul(&trunc_inverse(tr, &tr.one_plus_monomial(&a, i))?, &u);
        out.push(a);
    }
    debug_assert!(tr.is_one(&u));
    Ok(out)
}

/// `Π_{i=1}^t (1 + a_i X^i)` in `R_t`.
pub fn trunc_product<R: Ring>(tr: &TruncRing<R>, a: &[R::Elem]) -> Vec<R::Elem> {
    a.iter()
        .enumerate()
        .fold(tr.one(), |acc, (k, c)| tr.mul(&acc, &tr.one_plus_monomial(c, k + 1)))
}

/// For `u = 1 + X^r P` with `u^{k^r} = 1`, `k` a unit and `P(0)` central,
/// confirms that the `X^r` coefficient vanishes and returns `Q` with
/// `u = 1 + X^{r+1}Q`.
pub fn torsion_descent<R: Ring>(tr: &TruncRing<R>, u: &[R::Elem], k: i64, r: usize) -> Result<Vec<R::Elem>> {
    let base = tr.base();
    if base.inverse(&base.from_int(k)).is_none() {
        return Err(Error::KNotInvertible);
    }
    let u = tr.from_poly(u);
    let t = tr.t();
    if !base.is_one(&u[0]) || (1..r.min(t + 1)).any(|i| !base.is_zero(&u[i])) {
        return Err(Error::HypothesisFailed(format!("u is not of the form 1 + X^{r}·P")));
    }
    let exponent = k.unsigned_abs().checked_pow(r as u32).ok_or_else(|| {
        Error::HypothesisFailed(format!("k^r overflows for k = {k}, r = {r}"))
    })?;
    if !tr.is_one(&tr.pow(&u, exponent)) {
        return Err(Error::HypothesisFailed(format!("u^(k^r) ≠ 1 for k = {k}, r = {r}")));
    }
    if r > t {
        return Ok(Vec::new());
    }
    if !base.is_central(&u[r]) {
        return Err(Error::HypothesisFailed("P(0) is not central".into()));
    }
    if !base.is_zero(&u[r]) {
        return Err(Error::HypothesisFailed(format!(
            "X^{r} coefficient {} does not vanish",
            base.format(&u[r])
        )));
    }
    Ok(tr.to_poly(&u[r + 1..]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::form::{LambdaMax, LambdaMin};
    use crate::gq::{lambda_quadratic_conditions, t12_unchecked, t21_unchecked};
    use crate::ring::{Integers, Zmod};
    use alloc::vec;
    use num_bigint::BigInt;

    fn zm(rows: Vec<Vec<i64>>) -> Matrix<BigInt> {
        Matrix::from_rows(rows.into_iter().map(|r| r.into_iter().map(BigInt::from).collect()).collect()).unwrap()
    }

    #[test]
    fn upper_examples() {
        let z = Integers::new(-1);
        for beta in [-3, 0, 1, 7] {
            let a = zm(vec![vec![1, beta], vec![0, 1]]);
            let res = reduce_upper(&z, &LambdaMax, &a, None).unwrap();
            assert!(res.alpha.is_identity(&z));
            assert!(res.reconstructs(&z, &LambdaMax, &a).unwrap());
            if beta != 0 {
                assert_eq!(res.certificate.factors, vec![Factor::T12(zm(vec![vec![-beta]]))]);
            } else {
                assert!(res.certificate.is_empty());
            }
        }
        let z1 = Integers::new(1);
        assert!(matches!(
            reduce_upper(&z1, &LambdaMin, &zm(vec![vec![1, 1], vec![0, 1]]), None),
            Err(Error::NotQuadratic(_))
        ));
    }

    #[test]
    fn lower_examples() {
        let z = Integers::new(-1);
        let b = zm(vec![vec![1, 0], vec![5, 1]]);
        let res = reduce_lower(&z, &LambdaMax, &b, None).unwrap();
        assert_eq!(res.certificate.factors, vec![Factor::T21(zm(vec![vec![-5]]))]);
        assert!(res.reconstructs(&z, &LambdaMax, &b).unwrap());
        let z1 = Integers::new(1);
        assert!(matches!(
            reduce_lower(&z1, &LambdaMin, &zm(vec![vec![1, 0], vec![1, 1]]), None),
            Err(Error::NotQuadratic(_))
        ));
    }

    #[test]
    fn lower_needs_alpha_star_gamma_hermitian() {
        // α = [[1,1],[0,1]] and γ = α*⁻¹·s for a symmetric s: γ itself is not
        // symmetric, yet B is quadratic.
        let z = Integers::new(-1);
        let alpha = zm(vec![vec![1, 1], vec![0, 1]]);
        let alpha_inv = zm(vec![vec![1, -1], vec![0, 1]]);
        let s = zm(vec![vec![2, 1], vec![1, 0]]);
        let gamma = alpha_inv.star(&z).mul(&z, &s);
        assert_ne!(gamma, gamma.star(&z));
        let b = Matrix::from_quadrants(&alpha, &Matrix::zeros(&z, 2, 2), &gamma, &alpha_inv.star(&z));
        assert_eq!(lambda_quadratic_conditions(&z, &LambdaMax, &b).unwrap(), [true; 4]);
        let res = reduce_lower(&z, &LambdaMax, &b, Some(&alpha_inv)).unwrap();
        assert!(res.reconstructs(&z, &LambdaMax, &b).unwrap());
    }

    #[test]
    fn corner_examples() {
        let z4 = Zmod::new(4, 3);
        let p = PolyRing::new(z4.clone());
        let lx = Coefficientwise(LambdaMax);
        let d = KopeikoData {
            a: Matrix::scalar(&z4, 1, &2),
            b: Matrix::scalar(&z4, 1, &2),
            c: Matrix::scalar(&z4, 1, &2),
            n: 1,
        };
        let m = kopeiko_matrix(&p, &d);
        assert_eq!(
            m,
            Matrix::from_rows(vec![vec![vec![1, 2], vec![0, 2]], vec![vec![0, 2], vec![1, 2]]]).unwrap()
        );
        let res = reduce_invertible_corner(&p, &lx, &m, None).unwrap();
        assert_eq!(res.alpha, Matrix::scalar(&p, 1, &vec![1, 2]));
        assert_eq!(res.alpha_inv, Matrix::scalar(&p, 1, &vec![1, 2]));
        assert!(res.reconstructs(&p, &lx, &m).unwrap());

        let h = res.hyperbolic(&p).unwrap();
        let again = reduce_invertible_corner(&p, &lx, &h, None).unwrap();
        assert!(again.certificate.is_empty());

        let sigma = Matrix::from_rows(vec![vec![2, 1], vec![3, 0]]).unwrap();
        assert_eq!(
            reduce_invertible_corner(&z4, &LambdaMax, &sigma, None),
            Err(Error::NotInvertible)
        );
    }

    #[test]
    fn kopeiko_over_integers() {
        let z = Integers::new(-1);
        let p = PolyRing::new(z.clone());
        let s = |v: i64| zm(vec![vec![v]]);
        let good = KopeikoData { a: s(2), b: s(4), c: s(1), n: 1 };
        assert!(kopeiko_validate(&z, &LambdaMax, &good).is_ok());
        let m = kopeiko_matrix(&p, &good);
        let c = |v: &[i64]| v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
        assert_eq!(
            m,
            Matrix::from_rows(vec![vec![c(&[1, -2]), c(&[0, 4])], vec![c(&[0, -1]), c(&[1, 2])]]).unwrap()
        );
        assert_eq!(lambda_quadratic_conditions(&p, &Coefficientwise(LambdaMax), &m).unwrap(), [true; 4]);

        let zero = KopeikoData { a: s(0), b: s(0), c: s(0), n: 1 };
        assert!(kopeiko_validate(&z, &LambdaMax, &zero).is_ok());
        assert!(kopeiko_matrix(&p, &zero).is_identity(&p));
        let res = kopeiko_to_hyperbolic(&p, &LambdaMax, &zero).unwrap();
        assert!(res.alpha.is_identity(&p));

        let bad = KopeikoData { a: s(2), b: s(4), c: s(2), n: 1 };
        assert_eq!(kopeiko_validate(&z, &LambdaMax, &bad), Err(Error::ConditionViolated(3)));
        assert_eq!(
            kopeiko_to_hyperbolic(&p, &LambdaMax, &good),
            Err(Error::NotNilpotent { bound: DEFAULT_NILPOTENCY_BOUND })
        );
    }

    #[test]
    fn kopeiko_worked_instance_over_z4() {
        let z4 = Zmod::new(4, 3);
        let p = PolyRing::new(z4.clone());
        let two = Matrix::scalar(&z4, 1, &2);
        let d = KopeikoData { a: two.clone(), b: two.clone(), c: two, n: 1 };
        let res = kopeiko_to_hyperbolic(&p, &LambdaMax, &d).unwrap();
        assert_eq!(res.alpha, Matrix::scalar(&p, 1, &vec![1, 2]));
        assert_eq!(res.alpha_inv, Matrix::scalar(&p, 1, &vec![1, 2]));
        let m = kopeiko_matrix(&p, &d);
        let lx = Coefficientwise(LambdaMax);
        assert!(res.reconstructs(&p, &lx, &m).unwrap());
        let product = res.certificate.factors.iter().fold(m.clone(), |acc, f| match f {
            Factor::T12(b) => acc.mul(&p, &t12_unchecked(&p, b)),
            Factor::T21(c) => acc.mul(&p, &t21_unchecked(&p, c)),
            _ => unreachable!(),
        });
        assert_eq!(product, res.hyperbolic(&p).unwrap());
    }

    #[test]
    fn split_examples() {
        let z = Integers::new(1);
        let b = |v: &[i64]| v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
        let tr = TruncRing::new(z.clone(), 3);
        let (c, q) = trunc_split(&tr, &b(&[1, 1]), 1).unwrap();
        assert_eq!(c, BigInt::from(1));
        assert_eq!(q, b(&[1, -1]));
        let (_, q) = trunc_split(&tr, &b(&[5]), 1).unwrap();
        assert!(q.is_empty());
        let (c, q) = trunc_split(&tr, &b(&[0, 3]), 1).unwrap();
        assert_eq!(c, BigInt::from(0));
        assert_eq!(q, b(&[3]));
    }

    #[test]
    fn decomposition_examples() {
        let z = Integers::new(1);
        let b = |v: &[i64]| v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
        let tr = TruncRing::new(z, 3);
        assert_eq!(trunc_product_decomp(&tr, &b(&[1, 1, 1])).unwrap(), b(&[1, 1, 0]));
        assert_eq!(trunc_product_decomp(&tr, &[]).unwrap(), b(&[0, 0, 0]));
    }

    #[test]
    fn descent_examples() {
        let z4 = Zmod::new(4, 1);
        let tr = TruncRing::new(z4, 2);
        assert_eq!(torsion_descent(&tr, &[1], 3, 1).unwrap(), Vec::<u64>::new());
        assert!(matches!(torsion_descent(&tr, &[1, 2], 3, 1), Err(Error::HypothesisFailed(_))));
        assert_eq!(torsion_descent(&tr, &[1, 2], 2, 1), Err(Error::KNotInvertible));
        let z9 = Zmod::new(9, 1);
        let tr9 = TruncRing::new(z9, 2);
        assert_eq!(torsion_descent(&tr9, &[1], 2, 1).unwrap(), Vec::<u64>::new());
    }
}
