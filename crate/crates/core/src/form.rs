//! Form parameters `Λ` with `Λ_min ⊆ Λ ⊆ Λ_max` and `x̄Λx ⊆ Λ`.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use rand::{Rng as _, RngCore};

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::poly::PolyRing;
use crate::report::Report;
use crate::ring::Ring;
use crate::trunc::TruncRing;

/// A decidable additive subgroup `Λ` of a ring, used as a form parameter.
///
/// The ring is passed explicitly, as everywhere else in the crate.
pub trait FormParameter<R: Ring + ?Sized> {
    fn contains(&self, ring: &R, a: &R::Elem) -> Result<bool>;

    /// A random member of `Λ`.
    fn sample(&self, ring: &R, rng: &mut dyn RngCore) -> R::Elem;

    /// All members, when the ring is finite and small enough to enumerate.
    fn elements(&self, ring: &R) -> Option<Vec<R::Elem>> {
        let all = ring.elements()?;
        let mut out = Vec::new();
        for a in all {
            if self.contains(ring, &a).ok()? {
                out.push(a);
            }
        }
        Some(out)
    }
}

impl<R: Ring + ?Sized, F: FormParameter<R> + ?Sized> FormParameter<R> for &F {
    fn contains(&self, ring: &R, a: &R::Elem) -> Result<bool> {
        (**self).contains(ring, a)
    }
    fn sample(&self, ring: &R, rng: &mut dyn RngCore) -> R::Elem {
        (**self).sample(ring, rng)
    }
    fn elements(&self, ring: &R) -> Option<Vec<R::Elem>> {
        (**self).elements(ring)
    }
}

/// `x - λx̄`, the generic element of `Λ_min`.
pub fn min_element<R: Ring + ?Sized>(ring: &R, x: &R::Elem) -> R::Elem {
    ring.sub(x, &ring.mul(&ring.lambda(), &ring.conj(x)))
}

/// `a = -λā`, membership in `Λ_max`.
pub fn in_lambda_max<R: Ring + ?Sized>(ring: &R, a: &R::Elem) -> bool {
    *a == ring.neg(&ring.mul(&ring.lambda(), &ring.conj(a)))
}

/// `Λ_min = {a - λā}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct LambdaMin;

/// `Λ_max = {a : a = -λā}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct LambdaMax;

/// `Λ_min` for `ring`, provided membership in it is decidable.
pub fn lambda_min<R: Ring + ?Sized>(ring: &R) -> Result<LambdaMin> {
    match ring.lambda_min_contains(&ring.zero()) {
        Some(_) => Ok(LambdaMin),
        None => Err(Error::Undecidable("membership in Λ_min")),
    }
}

/// `Λ_max` for `ring`. Membership is an equality test, so this never fails
/// for the supported rings.
pub fn lambda_max<R: Ring + ?Sized>(_ring: &R) -> Result<LambdaMax> {
    Ok(LambdaMax)
}

impl<R: Ring + ?Sized> FormParameter<R> for LambdaMin {
    fn contains(&self, ring: &R, a: &R::Elem) -> Result<bool> {
        ring.lambda_min_contains(a)
            .ok_or(Error::Undecidable("membership in Λ_min"))
    }
    fn sample(&self, ring: &R, rng: &mut dyn RngCore) -> R::Elem {
        min_element(ring, &ring.random(rng))
    }
}

impl<R: Ring + ?Sized> FormParameter<R> for LambdaMax {
    fn contains(&self, ring: &R, a: &R::Elem) -> Result<bool> {
        Ok(in_lambda_max(ring, a))
    }
    fn sample(&self, ring: &R, rng: &mut dyn RngCore) -> R::Elem {
        if let Some(elems) = FormParameter::<R>::elements(self, ring) {
            return elems[rng.gen_range(0..elems.len())].clone();
        }
        for _ in 0..64 {
            let a = ring.random(rng);
            if in_lambda_max(ring, &a) {
                return a;
            }
        }
        min_element(ring, &ring.random(rng))
    }
}

/// A finite `Λ` given by its elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Explicit<E> {
    elements: BTreeSet<E>,
}

impl<E: Ord + Clone> Explicit<E> {
    pub fn new(elements: impl IntoIterator<Item = E>) -> Self {
        Explicit {
            elements: elements.into_iter().collect(),
        }
    }

    /// Materializes another parameter over a finite ring.
    pub fn from_form<R, F>(ring: &R, form: &F) -> Option<Self>
    where
        R: Ring<Elem = E> + ?Sized,
        F: FormParameter<R> + ?Sized,
    {
        form.elements(ring).map(Self::new)
    }

    pub fn set(&self) -> &BTreeSet<E> {
        &self.elements
    }
}

impl<R: Ring + ?Sized> FormParameter<R> for Explicit<R::Elem> {
    fn contains(&self, _ring: &R, a: &R::Elem) -> Result<bool> {
        Ok(self.elements.contains(a))
    }
    fn sample(&self, ring: &R, rng: &mut dyn RngCore) -> R::Elem {
        if self.elements.is_empty() {
            return ring.zero();
        }
        let k = rng.gen_range(0..self.elements.len());
        self.elements.iter().nth(k).cloned().unwrap_or_else(|| ring.zero())
    }
    fn elements(&self, _ring: &R) -> Option<Vec<R::Elem>> {
        Some(self.elements.iter().cloned().collect())
    }
}

/// `Λ̄ = {ā : a ∈ Λ}`, a form parameter for `λ̄`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bar<F>(pub F);

impl<R: Ring + ?Sized, F: FormParameter<R>> FormParameter<R> for Bar<F> {
    fn contains(&self, ring: &R, a: &R::Elem) -> Result<bool> {
        self.0.contains(ring, &ring.conj(a))
    }
    fn sample(&self, ring: &R, rng: &mut dyn RngCore) -> R::Elem {
        ring.conj(&self.0.sample(ring, rng))
    }
}

/// `Λ[X]` (or `Λ` applied to every coefficient of a truncated polynomial).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Coefficientwise<F>(pub F);

impl<R: Ring, F: FormParameter<R>> FormParameter<PolyRing<R>> for Coefficientwise<F> {
    fn contains(&self, ring: &PolyRing<R>, a: &Vec<R::Elem>) -> Result<bool> {
        all_in(ring.base(), &self.0, a)
    }
    fn sample(&self, ring: &PolyRing<R>, rng: &mut dyn RngCore) -> Vec<R::Elem> {
        let deg = rng.gen_range(0..=ring.sample_degree());
        let p = (0..=deg).map(|_| self.0.sample(ring.base(), rng)).collect();
        ring.normalize(p)
    }
}

impl<R: Ring, F: FormParameter<R>> FormParameter<TruncRing<R>> for Coefficientwise<F> {
    fn contains(&self, ring: &TruncRing<R>, a: &Vec<R::Elem>) -> Result<bool> {
        all_in(ring.base(), &self.0, a)
    }
    fn sample(&self, ring: &TruncRing<R>, rng: &mut dyn RngCore) -> Vec<R::Elem> {
        (0..=ring.t()).map(|_| self.0.sample(ring.base(), rng)).collect()
    }
}

pub(crate) fn all_in<R: Ring + ?Sized, F: FormParameter<R> + ?Sized>(
    ring: &R,
    form: &F,
    coeffs: &[R::Elem],
) -> Result<bool> {
    for c in coeffs {
        if !form.contains(ring, c)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A random element of `Λ ∩ J`.
pub(crate) fn sample_in_both<R, F>(ring: &R, form: &F, ideal: Ideal, rng: &mut dyn RngCore) -> R::Elem
where
    R: Ring + ?Sized,
    F: FormParameter<R> + ?Sized,
{
    for _ in 0..64 {
        let a = form.sample(ring, rng);
        if ring.in_ideal(&ideal, &a) {
            return a;
        }
    }
    // d·Λ ⊆ Λ ∩ J for the integer generator d of J
    let d = ring.from_int(ideal.generator() as i64);
    ring.mul(&d, &form.sample(ring, rng))
}

/// Exhaustive checks are used when both `|R|·|Λ|` and `|Λ|²` stay below this.
const EXHAUSTIVE_PAIRS: usize = 1 << 16;

/// Checks the form-parameter axioms: `Λ` is an additive subgroup,
/// `Λ_min ⊆ Λ ⊆ Λ_max`, and `x̄ax ∈ Λ` for `a ∈ Λ`, `x ∈ R`.
///
/// Exhaustive on small finite rings, otherwise `samples` random cases per
/// axiom. Failed axioms carry a counterexample.
pub fn form_param_validate<R, F>(ring: &R, form: &F, samples: usize, rng: &mut dyn RngCore) -> Report
where
    R: Ring + ?Sized,
    F: FormParameter<R> + ?Sized,
{
    let mut report = Report::new();
    let fmt = |a: &R::Elem| ring.format(a);
    let member = |a: &R::Elem| form.contains(ring, a);

    let finite = match (ring.elements(), form.elements(ring)) {
        (Some(r), Some(l))
            if r.len().saturating_mul(l.len()) <= EXHAUSTIVE_PAIRS
                && l.len().saturating_mul(l.len()) <= EXHAUSTIVE_PAIRS =>
        {
            Some((r, l))
        }
        _ => None,
    };
    let (ring_elems, lambda_elems): (Vec<R::Elem>, Vec<R::Elem>) = match &finite {
        Some((r, l)) => (r.clone(), l.clone()),
        None => (
            (0..samples).map(|_| ring.random(rng)).collect(),
            (0..samples).map(|_| form.sample(ring, rng)).collect(),
        ),
    };
    let exhaustive = finite.is_some();

    // Errors from an undecidable membership test become failed entries.
    let mut undecidable: Option<String> = None;
    let mut test = |a: &R::Elem| match member(a) {
        Ok(b) => b,
        Err(e) => {
            undecidable.get_or_insert_with(|| format!("{e}"));
            false
        }
    };

    let zero = ring.zero();
    report.record("contains 0", 1, (!test(&zero)).then(|| String::from("0 ∉ Λ")));

    let mut add_w = None;
    let mut neg_w = None;
    let mut pairs = 0;
    for (k, a) in lambda_elems.iter().enumerate() {
        if neg_w.is_none() && !test(&ring.neg(a)) {
            neg_w = Some(format!("-({}) ∉ Λ", fmt(a)));
        }
        let partners: Vec<&R::Elem> = if exhaustive {
            lambda_elems.iter().collect()
        } else {
            vec_of(&lambda_elems[(k + 1) % lambda_elems.len()])
        };
        for b in partners {
            pairs += 1;
            let s = ring.add(a, b);
            if add_w.is_none() && !test(&s) {
                add_w = Some(format!("{}+{} = {} ∉ Λ", fmt(a), fmt(b), fmt(&s)));
            }
        }
    }
    report.record("closed under addition", pairs, add_w);
    report.record("closed under negation", lambda_elems.len(), neg_w);

    let mut min_w = None;
    for x in &ring_elems {
        let m = min_element(ring, x);
        if !test(&m) {
            min_w = Some(format!("{} - λ·conj({}) = {} ∉ Λ", fmt(x), fmt(x), fmt(&m)));
            break;
        }
    }
    report.record("Λ_min ⊆ Λ", ring_elems.len(), min_w);

    let max_w = lambda_elems
        .iter()
        .find(|a| !in_lambda_max(ring, a))
        .map(|a| format!("{} ∉ Λ_max", fmt(a)));
    report.record("Λ ⊆ Λ_max", lambda_elems.len(), max_w);

    let mut conj_w = None;
    let mut conj_cases = 0;
    'outer: for (k, a) in lambda_elems.iter().enumerate() {
        let xs: Vec<&R::Elem> = if exhaustive {
            ring_elems.iter().collect()
        } else {
            vec_of(&ring_elems[k % ring_elems.len()])
        };
        for x in xs {
            conj_cases += 1;
            let v = ring.mul(&ring.mul(&ring.conj(x), a), x);
            if !test(&v) {
                conj_w = Some(format!(
                    "conj({x})·{a}·{x} = {v} ∉ Λ",
                    x = fmt(x),
                    a = fmt(a),
                    v = fmt(&v)
                ));
                break 'outer;
            }
        }
    }
    report.record("x̄Λx ⊆ Λ", conj_cases, conj_w);

    if let Some(e) = undecidable {
        report.fail("membership decidable", e);
    }
    report
}

fn vec_of<E>(e: &E) -> Vec<&E> {
    let mut v = Vec::with_capacity(1);
    v.push(e);
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{Gauss, GaussianZmod, Integers, Zmod};
    use alloc::vec;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn rng() -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(7)
    }

    #[test]
    fn min_and_max_over_z4() {
        let r = Zmod::new(4, 1);
        assert_eq!(lambda_min(&r).unwrap().elements(&r), Some(vec![0]));
        assert_eq!(LambdaMax.elements(&r), Some(vec![0, 2]));
        let r = Zmod::new(4, 3);
        assert_eq!(LambdaMin.elements(&r), Some(vec![0, 2]));
        assert_eq!(LambdaMax.elements(&r), Some(vec![0, 1, 2, 3]));
    }

    #[test]
    fn min_and_max_over_gaussian() {
        let g = GaussianZmod::new(5, Gauss::new(1, 0));
        let imaginary: Vec<Gauss> = (0..5).map(|b| Gauss::new(0, b)).collect();
        assert_eq!(LambdaMin.elements(&g), Some(imaginary.clone()));
        assert_eq!(LambdaMax.elements(&g), Some(imaginary));
    }

    #[test]
    fn lambda_min_undecidable_over_z_with_other_lambda() {
        assert!(lambda_min(&Integers::new(-1)).is_ok());
        assert_eq!(lambda_min(&Integers::new(3)), Err(Error::Undecidable("membership in Λ_min")));
    }

    #[test]
    fn validate_explicit_sets() {
        let r = Zmod::new(4, 1);
        assert!(form_param_validate(&r, &Explicit::new([0u64, 2]), 50, &mut rng()).passed());

        let bad = form_param_validate(&r, &Explicit::new([0u64, 1]), 50, &mut rng());
        assert!(!bad.passed());
        assert_eq!(bad.get("Λ ⊆ Λ_max").unwrap().witness.as_deref(), Some("1 ∉ Λ_max"));
        assert_eq!(
            bad.get("closed under addition").unwrap().witness.as_deref(),
            Some("1+1 = 2 ∉ Λ")
        );
    }

    #[test]
    fn min_and_max_always_validate() {
        for (m, l) in [(4, 1), (4, 3), (8, 1), (8, 7), (9, 1), (9, 8)] {
            let r = Zmod::new(m, l);
            assert!(form_param_validate(&r, &LambdaMin, 50, &mut rng()).passed());
            assert!(form_param_validate(&r, &LambdaMax, 50, &mut rng()).passed());
        }
        let g = GaussianZmod::new(5, Gauss::new(1, 0));
        assert!(form_param_validate(&g, &LambdaMin, 50, &mut rng()).passed());
        let z = Integers::new(-1);
        assert!(form_param_validate(&z, &LambdaMin, 200, &mut rng()).passed());
        assert!(form_param_validate(&z, &LambdaMax, 200, &mut rng()).passed());
    }

    #[test]
    fn polynomial_extension_examples() {
        let r = Zmod::new(4, 1);
        let p = PolyRing::new(r.clone());
        let lx = Coefficientwise(Explicit::new([0u64, 2]));
        let a = vec![1, 1];
        let b = vec![0, 2];
        let aba = p.mul(&p.mul(&p.conj(&a), &b), &a);
        assert_eq!(aba, vec![0, 2, 0, 2]);
        assert!(lx.contains(&p, &aba).unwrap());
        assert!(lx.contains(&p, &p.zero()).unwrap());
        let x = p.x();
        let xbx = p.mul(&p.mul(&x, &vec![2]), &x);
        assert_eq!(xbx, vec![0, 0, 2]);
        assert!(lx.contains(&p, &xbx).unwrap());
        assert!(form_param_validate(&p, &lx, 300, &mut rng()).passed());
    }

    #[test]
    fn bar_of_gaussian_parameter() {
        let g = GaussianZmod::new(5, Gauss::new(0, 1));
        let lmin = Explicit::from_form(&g, &LambdaMin).unwrap();
        let bar = Bar(&lmin);
        for a in g.elements().unwrap() {
            let lhs = bar.contains(&g, &a).unwrap();
            let rhs = lmin.contains(&g, &g.conj(&a)).unwrap();
            assert_eq!(lhs, rhs);
        }
    }
}
