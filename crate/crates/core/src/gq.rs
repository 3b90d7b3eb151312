//! The hyperbolic form `ψ_n`, membership in `GQ(2n, R, Λ)`, the four
//! `Λ`-quadratic conditions, Hermitian predicates, and the hyperbolic and
//! unitriangular block matrices.

use rand::RngCore;

use crate::error::{Error, Result};
use crate::form::{Bar, FormParameter};
use crate::matrix::{is_inverse_pair, Matrix};
use crate::ring::Ring;

/// `ρ(i) = n + i`, on 0-based indices.
pub fn rho(n: usize, i: usize) -> usize {
    n + i
}

/// `ψ_n = (0 I; λI 0)`.
pub fn psi<R: Ring + ?Sized>(ring: &R, n: usize) -> Matrix<R::Elem> {
    let id = Matrix::identity(ring, n);
    let zero = Matrix::zeros(ring, n, n);
    let lam = Matrix::scalar(ring, n, &ring.lambda());
    Matrix::from_quadrants(&zero, &id, &lam, &zero)
}

/// Half the size of a `2n×2n` matrix.
pub fn half_rank<E: Clone>(sigma: &Matrix<E>) -> Result<usize> {
    if !sigma.is_square() {
        return Err(Error::DimensionMismatch {
            expected: sigma.rows(),
            found: sigma.cols(),
        });
    }
    if sigma.rows() % 2 != 0 || sigma.rows() == 0 {
        return Err(Error::DimensionMismatch {
            expected: sigma.rows() + 1,
            found: sigma.rows(),
        });
    }
    Ok(sigma.rows() / 2)
}

/// `σ*ψ_nσ = ψ_n`. Invertibility follows since `ψ_n` is invertible.
pub fn gq_member<R: Ring + ?Sized>(ring: &R, sigma: &Matrix<R::Elem>) -> Result<bool> {
    let n = half_rank(sigma)?;
    let p = psi(ring, n);
    Ok(sigma.star(ring).mul(ring, &p).mul(ring, sigma) == p)
}

fn diagonal_in<R, F>(ring: &R, form: &F, m: &Matrix<R::Elem>) -> Result<bool>
where
    R: Ring + ?Sized,
    F: FormParameter<R> + ?Sized,
{
    for k in 0..m.rows() {
        if !form.contains(ring, m.get(k, k))? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `α = -λα*` and every diagonal entry of `α` lies in `Λ`.
pub fn is_lambda_hermitian<R, F>(ring: &R, form: &F, alpha: &Matrix<R::Elem>) -> Result<bool>
where
    R: Ring + ?Sized,
    F: FormParameter<R> + ?Sized,
{
    if !alpha.is_square() {
        return Ok(false);
    }
    let rhs = alpha.star(ring).scale(ring, &ring.neg(&ring.lambda()));
    Ok(*alpha == rhs && diagonal_in(ring, form, alpha)?)
}

/// `β = -λ̄β*` and every diagonal entry of `β` lies in `Λ̄`.
pub fn is_lambda_bar_hermitian<R, F>(ring: &R, form: &F, beta: &Matrix<R::Elem>) -> Result<bool>
where
    R: Ring + ?Sized,
    F: FormParameter<R> + ?Sized,
{
    if !beta.is_square() {
        return Ok(false);
    }
    let rhs = beta.star(ring).scale(ring, &ring.neg(&ring.lambda_bar()));
    Ok(*beta == rhs && diagonal_in(ring, &Bar(form), beta)?)
}

/// The four equivalent characterizations of a `Λ`-quadratic matrix, each
/// evaluated independently:
///
/// 1. `σ ∈ GQ` and the diagonals of `a*c`, `b*d` lie in `Λ`;
/// 2. `a*d + λc*b = I` and `a*c`, `b*d` are `Λ`-Hermitian;
/// 3. `σ ∈ GQ` and the diagonals of `ab*`, `cd*` lie in `Λ`;
/// 4. `ad* + λbc* = I` and `ab*`, `cd*` are `Λ`-Hermitian.
pub fn lambda_quadratic_conditions<R, F>(ring: &R, form: &F, sigma: &Matrix<R::Elem>) -> Result<[bool; 4]>
where
    R: Ring + ?Sized,
    F: FormParameter<R> + ?Sized,
{
    let n = half_rank(sigma)?;
    let (a, b, c, d) = sigma.quadrants();
    let (a_s, b_s, c_s, d_s) = (a.star(ring), b.star(ring), c.star(ring), d.star(ring));
    let lam = ring.lambda();
    let id = Matrix::identity(ring, n);
    let in_gq = gq_member(ring, sigma)?;

    let ac = a_s.mul(ring, &c);
    let bd = b_s.mul(ring, &d);
    let ab = a.mul(ring, &b_s);
    let cd = c.mul(ring, &d_s);

    let c1 = in_gq && diagonal_in(ring, form, &ac)? && diagonal_in(ring, form, &bd)?;
    let c2 = a_s.mul(ring, &d).add(ring, &c_s.mul(ring, &b).scale(ring, &lam)) == id
        && is_lambda_hermitian(ring, form, &ac)?
        && is_lambda_hermitian(ring, form, &bd)?;
    let c3 = in_gq && diagonal_in(ring, form, &ab)? && diagonal_in(ring, form, &cd)?;
    let c4 = a.mul(ring, &d_s).add(ring, &b.mul(ring, &c_s).scale(ring, &lam)) == id
        && is_lambda_hermitian(ring, form, &ab)?
        && is_lambda_hermitian(ring, form, &cd)?;
    Ok([c1, c2, c3, c4])
}

/// Condition 2 of [`lambda_quadratic_conditions`] alone.
pub fn is_lambda_quadratic<R, F>(ring: &R, form: &F, sigma: &Matrix<R::Elem>) -> Result<bool>
where
    R: Ring + ?Sized,
    F: FormParameter<R> + ?Sized,
{
    Ok(lambda_quadratic_conditions(ring, form, sigma)?[1])
}

/// `H(α) = diag(α, (α*)⁻¹)`, with the supplied inverse of `α` verified on
/// both sides.
pub fn hyperbolic<R: Ring + ?Sized>(
    ring: &R,
    alpha: &Matrix<R::Elem>,
    alpha_inv: &Matrix<R::Elem>,
) -> Result<Matrix<R::Elem>> {
    if !is_inverse_pair(ring, alpha, alpha_inv) {
        return Err(Error::NotInvertible);
    }
    let n = alpha.rows();
    let zero = Matrix::zeros(ring, n, n);
    Ok(Matrix::from_quadrants(alpha, &zero, &zero, &alpha_inv.star(ring)))
}

/// `T₁₂(β) = (I β; 0 I)` without any Hermitian check.
pub fn t12_unchecked<R: Ring + ?Sized>(ring: &R, beta: &Matrix<R::Elem>) -> Matrix<R::Elem> {
    let n = beta.rows();
    let id = Matrix::identity(ring, n);
    Matrix::from_quadrants(&id, beta, &Matrix::zeros(ring, n, n), &id)
}

/// `T₂₁(γ) = (I 0; γ I)` without any Hermitian check.
pub fn t21_unchecked<R: Ring + ?Sized>(ring: &R, gamma: &Matrix<R::Elem>) -> Matrix<R::Elem> {
    let n = gamma.rows();
    let id = Matrix::identity(ring, n);
    Matrix::from_quadrants(&id, &Matrix::zeros(ring, n, n), gamma, &id)
}

/// `T₁₂(β)` for a `Λ̄`-Hermitian `β`.
pub fn t12<R, F>(ring: &R, form: &F, beta: &Matrix<R::Elem>) -> Result<Matrix<R::Elem>>
where
    R: Ring + ?Sized,
    F: FormParameter<R> + ?Sized,
{
    if !is_lambda_bar_hermitian(ring, form, beta)? {
        return Err(Error::NotHermitian);
    }
    Ok(t12_unchecked(ring, beta))
}

/// `T₂₁(γ)` for a `Λ`-Hermitian `γ`.
pub fn t21<R, F>(ring: &R, form: &F, gamma: &Matrix<R::Elem>) -> Result<Matrix<R::Elem>>
where
    R: Ring + ?Sized,
    F: FormParameter<R> + ?Sized,
{
    if !is_lambda_hermitian(ring, form, gamma)? {
        return Err(Error::NotHermitian);
    }
    Ok(t21_unchecked(ring, gamma))
}

/// `σ ≡ I` modulo the ideal, entrywise.
pub fn rel_congruent<R: Ring + ?Sized>(ring: &R, sigma: &Matrix<R::Elem>, ideal: &crate::Ideal) -> bool {
    let id = Matrix::identity(ring, sigma.rows());
    sigma.is_square()
        && sigma
            .sub(ring, &id)
            .entries()
            .iter()
            .all(|x| ring.in_ideal(ideal, x))
}

/// A random `Λ`-Hermitian `n×n` matrix: free entries above the diagonal,
/// mirrored by `γ_lk = -λ·conj(γ_kl)`, and diagonal entries drawn from `Λ`.
pub fn random_lambda_hermitian<R, F>(ring: &R, form: &F, n: usize, rng: &mut dyn RngCore) -> Matrix<R::Elem>
where
    R: Ring + ?Sized,
    F: FormParameter<R> + ?Sized,
{
    random_hermitian(ring, form, &ring.lambda(), n, rng)
}

/// A random `Λ̄`-Hermitian `n×n` matrix.
pub fn random_lambda_bar_hermitian<R, F>(ring: &R, form: &F, n: usize, rng: &mut dyn RngCore) -> Matrix<R::Elem>
where
    R: Ring + ?Sized,
    F: FormParameter<R> + ?Sized,
{
    random_hermitian(ring, &Bar(form), &ring.lambda_bar(), n, rng)
}

fn random_hermitian<R, F>(ring: &R, diag: &F, lam: &R::Elem, n: usize, rng: &mut dyn RngCore) -> Matrix<R::Elem>
where
    R: Ring + ?Sized,
    F: FormParameter<R> + ?Sized,
{
    let mut m = Matrix::zeros(ring, n, n);
    for k in 0..n {
        m.set(k, k, diag.sample(ring, rng));
        for l in k + 1..n {
            let x = ring.random(rng);
            m.set(l, k, ring.neg(&ring.mul(lam, &ring.conj(&x))));
            m.set(k, l, x);
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::form::{Explicit, LambdaMax, LambdaMin};
    use crate::poly::PolyRing;
    use crate::ring::{Integers, Zmod};
    use alloc::vec;
    use alloc::vec::Vec;
    use num_bigint::BigInt;

    fn zm(rows: Vec<Vec<i64>>) -> Matrix<BigInt> {
        Matrix::from_rows(rows.into_iter().map(|r| r.into_iter().map(BigInt::from).collect()).collect()).unwrap()
    }

    #[test]
    fn psi_small_cases() {
        let z = Integers::new(-1);
        assert_eq!(psi(&z, 1), zm(vec![vec![0, 1], vec![-1, 0]]));
        let z4 = Zmod::new(4, 3);
        let p = psi(&z4, 3);
        for i in 0..3 {
            assert_eq!(*p.get(3 + i, i), 3);
            assert_eq!(*p.get(i, 3 + i), 1);
        }
        assert_eq!(p.entries().iter().filter(|&&x| x != 0).count(), 6);
        let z4 = Zmod::new(4, 1);
        assert_eq!(psi(&z4, 2).star(&z4), psi(&z4, 2).transpose());
    }

    #[test]
    fn gq_member_basic() {
        let z4 = Zmod::new(4, 3);
        assert!(gq_member(&z4, &Matrix::identity(&z4, 6)).unwrap());
        // I + e_12 without the compensating entry
        let bare = Matrix::elementary(&z4, 6, 0, 1, &1);
        assert!(!gq_member(&z4, &bare).unwrap());
        let odd = Matrix::identity(&z4, 3);
        assert!(matches!(gq_member(&z4, &odd), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn kopeiko_style_matrix_is_quadratic() {
        let p = PolyRing::new(Integers::new(-1));
        let c = |v: &[i64]| v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
        let m = Matrix::from_rows(vec![vec![c(&[1, -2]), c(&[0, 4])], vec![c(&[0, -1]), c(&[1, 2])]]).unwrap();
        let form = crate::form::Coefficientwise(LambdaMax);
        assert_eq!(lambda_quadratic_conditions(&p, &form, &m).unwrap(), [true; 4]);
    }

    #[test]
    fn upper_unitriangular_fails_for_even_lambda_min() {
        let z = Integers::new(-1);
        let m = zm(vec![vec![1, 1], vec![0, 1]]);
        let c = lambda_quadratic_conditions(&z, &LambdaMin, &m).unwrap();
        assert!(!c[1]);
        assert_eq!(c, [false; 4]);
        assert_eq!(lambda_quadratic_conditions(&z, &LambdaMax, &m).unwrap(), [true; 4]);
    }

    #[test]
    fn hermitian_examples() {
        let z = Integers::new(-1);
        assert!(is_lambda_hermitian(&z, &LambdaMax, &zm(vec![vec![3, 5], vec![5, -2]])).unwrap());
        let z1 = Integers::new(1);
        assert!(is_lambda_hermitian(&z1, &LambdaMin, &zm(vec![vec![0, 1], vec![-1, 0]])).unwrap());
        assert!(!is_lambda_hermitian(&z1, &LambdaMin, &zm(vec![vec![1, 1], vec![-1, 0]])).unwrap());
    }

    #[test]
    fn t12_examples() {
        let z = Integers::new(-1);
        let t = t12(&z, &LambdaMax, &zm(vec![vec![1]])).unwrap();
        assert_eq!(t, zm(vec![vec![1, 1], vec![0, 1]]));
        assert_eq!(lambda_quadratic_conditions(&z, &LambdaMax, &t).unwrap(), [true; 4]);
        let z1 = Integers::new(1);
        assert_eq!(t12(&z1, &LambdaMin, &zm(vec![vec![1]])), Err(Error::NotHermitian));
    }

    #[test]
    fn random_hermitian_matrices_are_hermitian() {
        use crate::ring::{Gauss, GaussianZmod};
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let g = GaussianZmod::new(5, Gauss::new(0, 1));
        let lmin = Explicit::from_form(&g, &LambdaMin).unwrap();
        for _ in 0..50 {
            let a = random_lambda_hermitian(&g, &lmin, 3, &mut rng);
            assert!(is_lambda_hermitian(&g, &lmin, &a).unwrap());
            assert!(is_lambda_bar_hermitian(&g, &lmin, &a.star(&g)).unwrap());
            let b = random_lambda_bar_hermitian(&g, &lmin, 3, &mut rng);
            assert!(is_lambda_bar_hermitian(&g, &lmin, &b).unwrap());
        }
    }

    #[test]
    fn hyperbolic_of_identity_and_invertible() {
        let z4 = Zmod::new(4, 1);
        let id = Matrix::identity(&z4, 2);
        assert_eq!(hyperbolic(&z4, &id, &id).unwrap(), Matrix::identity(&z4, 4));
        let a = Matrix::from_rows(vec![vec![1, 2], vec![0, 3]]).unwrap();
        let a_inv = crate::matrix::invert(&z4, &a, 8).unwrap();
        let h = hyperbolic(&z4, &a, &a_inv).unwrap();
        let lmin = Explicit::from_form(&z4, &LambdaMin).unwrap();
        assert_eq!(lambda_quadratic_conditions(&z4, &lmin, &h).unwrap(), [true; 4]);
        assert_eq!(hyperbolic(&z4, &a, &id), Err(Error::NotInvertible));
    }
}
