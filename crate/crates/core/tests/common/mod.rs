#![allow(dead_code)]

use formk1_core::dynamic::{AnyElem, AnyForm, AnyRing};
use formk1_core::matrix::invert;
use formk1_core::{Gauss, GaussianZmod, Ideal, Integers, Matrix, Ring, Zmod};
use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A ring of the test matrix with a form parameter and an ideal.
pub struct Case {
    pub name: String,
    pub ring: AnyRing,
    pub form: AnyForm,
    pub ideal: Ideal,
}

fn zmod(m: u64, lambda: i64) -> AnyRing {
    AnyRing::Zmod(Zmod::new(m, lambda))
}

fn forms_for(ring: &AnyRing) -> Vec<(&'static str, AnyForm)> {
    match ring {
        AnyRing::Poly(_) => vec![
            ("Λ_min[X]", AnyForm::Extended(Box::new(AnyForm::Min))),
            ("Λ_max[X]", AnyForm::Extended(Box::new(AnyForm::Max))),
        ],
        _ => vec![("Λ_min", AnyForm::Min), ("Λ_max", AnyForm::Max)],
    }
}

/// Z/4 (λ = 1, 3), Z/8 (λ = 1, 7), Z/9 (λ = 1, 8), (Z/5)[i] with
/// conjugation and λ = 1, Z and Z[X] with λ = -1, each with Λ_min and Λ_max.
pub fn cases() -> Vec<Case> {
    let rings = vec![
        ("Z/4 λ=1", zmod(4, 1), Ideal::new(2)),
        ("Z/4 λ=3", zmod(4, 3), Ideal::new(2)),
        ("Z/8 λ=1", zmod(8, 1), Ideal::new(2)),
        ("Z/8 λ=7", zmod(8, 7), Ideal::new(4)),
        ("Z/9 λ=1", zmod(9, 1), Ideal::new(3)),
        ("Z/9 λ=8", zmod(9, 8), Ideal::new(3)),
        ("(Z/5)[i] λ=1", AnyRing::Gaussian(GaussianZmod::new(5, Gauss::new(1, 0))), Ideal::whole()),
        ("Z λ=-1", AnyRing::Integers(Integers::new(-1)), Ideal::new(2)),
        ("Z[X] λ=-1", AnyRing::poly(AnyRing::Integers(Integers::new(-1))), Ideal::new(2)),
    ];
    let mut out = Vec::new();
    for (name, ring, ideal) in rings {
        for (fname, form) in forms_for(&ring) {
            out.push(Case {
                name: format!("{name}, {fname}"),
                ring: ring.clone(),
                form,
                ideal,
            });
        }
    }
    out
}

/// All elements of a finite ring, or `count` random ones otherwise.
pub fn elements_or_sample(ring: &AnyRing, count: usize, rng: &mut dyn RngCore) -> Vec<AnyElem> {
    ring.elements().unwrap_or_else(|| (0..count).map(|_| ring.random(rng)).collect())
}

pub fn random_unit<R: Ring + ?Sized>(ring: &R, rng: &mut dyn RngCore) -> R::Elem {
    for _ in 0..32 {
        let x = ring.random(rng);
        if ring.inverse(&x).is_some() {
            return x;
        }
    }
    ring.one()
}

/// A random element fixed by the involution.
pub fn random_symmetric<R: Ring + ?Sized>(ring: &R, rng: &mut dyn RngCore) -> R::Elem {
    loop {
        let x = ring.random(rng);
        if ring.conj(&x) == x {
            return x;
        }
    }
}

/// A random invertible `n×n` matrix with its inverse: a product of
/// elementary transvections and a diagonal of units.
pub fn random_invertible<R: Ring + ?Sized>(ring: &R, n: usize, rng: &mut dyn RngCore) -> (Matrix<R::Elem>, Matrix<R::Elem>) {
    let mut m = Matrix::identity(ring, n);
    for k in 0..n {
        let mut d = Matrix::identity(ring, n);
        d.set(k, k, random_unit(ring, rng));
        m = m.mul(ring, &d);
    }
    if n > 1 {
        for _ in 0..2 * n {
            let i = rng.gen_range(0..n);
            let mut j = rng.gen_range(0..n);
            while j == i {
                j = rng.gen_range(0..n);
            }
            m = m.mul(ring, &Matrix::elementary(ring, n, i, j, &ring.random(rng)));
        }
    }
    let inv = invert(ring, &m, 16).expect("product of invertible matrices");
    (m, inv)
}

pub fn show<R: Ring + ?Sized>(ring: &R, m: &Matrix<R::Elem>) -> String {
    let mut s = String::new();
    m.write(ring, &mut s).unwrap();
    s
}
