//! A self-contained run of every finitely checkable identity of the crate
//! over a fixed matrix of small rings, producing one report entry per suite.

use alloc::boxed::Box;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use rand::{Rng, RngCore};

use crate::axioms::ring_axiom_suite;
use crate::dynamic::{AnyElem, AnyForm, AnyRing};
use crate::elementary::{
    elem_gen_eval, random_param_gen, random_rel_word, random_word, word_eval, ElemGen, ElemWord, Family,
};
use crate::excision::{lift_relative_word, DoubleRing, Excision, GammaPlus};
use crate::form::{form_param_validate, Coefficientwise, FormParameter};
use crate::gq::{
    gq_member, hyperbolic, lambda_quadratic_conditions, random_lambda_bar_hermitian, random_lambda_hermitian,
    t12, t21,
};
use crate::graded::GradedRing;
use crate::ideal::Ideal;
use crate::matrix::{invert, Matrix};
use crate::nilk1::{
    kopeiko_matrix, kopeiko_to_hyperbolic, kopeiko_validate, reduce_invertible_corner, reduce_lower,
    reduce_upper, torsion_descent, trunc_product, trunc_product_decomp, trunc_split, KopeikoData,
    ReductionResult,
};
use crate::poly::PolyRing;
use crate::report::Report;
use crate::ring::{Gauss, GaussianZmod, Integers, Ring, Zmod};
use crate::transvection::{basis, inner, key_lemma_check, transvection_matrix};
use crate::trunc::TruncRing;

/// A ring with λ, a form parameter and an ideal.
#[derive(Debug, Clone)]
pub struct TestRing {
    pub name: String,
    pub ring: AnyRing,
    pub form: AnyForm,
    pub ideal: Ideal,
}

/// Z/4, Z/8, Z/9 with both λ = ±1, (Z/5)[i] with conjugation, Z and Z[X]
/// with λ = -1, each paired with Λ_min and Λ_max.
pub fn test_rings() -> Vec<TestRing> {
    let zmod = |m, l| AnyRing::Zmod(Zmod::new(m, l));
    let z = || AnyRing::Integers(Integers::new(-1));
    let rings = [
        ("Z/4 λ=1", zmod(4, 1), 2),
        ("Z/4 λ=3", zmod(4, 3), 2),
        ("Z/8 λ=1", zmod(8, 1), 2),
        ("Z/8 λ=7", zmod(8, 7), 2),
        ("Z/9 λ=1", zmod(9, 1), 3),
        ("Z/9 λ=8", zmod(9, 8), 3),
        ("(Z/5)[i] λ=1", AnyRing::Gaussian(GaussianZmod::new(5, Gauss::new(1, 0))), 1),
        ("Z λ=-1", z(), 2),
        ("Z[X] λ=-1", AnyRing::poly(z()), 2),
    ];
    let mut out = Vec::new();
    for (name, ring, g) in rings {
        let poly = matches!(ring, AnyRing::Poly(_));
        for (fname, base) in [("Λ_min", AnyForm::Min), ("Λ_max", AnyForm::Max)] {
            let form = if poly { AnyForm::Extended(Box::new(base)) } else { base };
            out.push(TestRing {
                name: format!("{name}, {fname}"),
                ring: ring.clone(),
                form,
                ideal: Ideal::new(g),
            });
        }
    }
    out
}

/// Runs every suite with `samples` random cases per ring where sampling
/// applies.
pub fn run_all(samples: usize, rng: &mut dyn RngCore) -> Report {
    let rings = test_rings();
    let mut report = Report::new();
    let suites: [(&str, fn(&[TestRing], usize, &mut dyn RngCore) -> Check); 14] = [
        ("ring axioms", axioms),
        ("form parameter axioms", forms),
        ("generators preserve ψ", generators),
        ("four quadratic conditions agree", conditions),
        ("polynomial form parameter closure", poly_closure),
        ("I + M(v,w) relative membership", key_lemma),
        ("excision lift folds back", excision_lift),
        ("double ring isomorphism", double_iso),
        ("hyperbolic reductions", reductions),
        ("normal forms over R[X]", kopeiko),
        ("truncated factorization", truncated),
        ("torsion descent", descent),
        ("graded evaluation", graded),
        ("transvections match generators", transvections),
    ];
    for (name, suite) in suites {
        let (cases, witness) = match suite(&rings, samples, rng) {
            Ok(cases) => (cases, None),
            Err(w) => (0, Some(w)),
        };
        report.record(name, cases, witness);
    }
    report
}

type Check = core::result::Result<usize, String>;

fn ensure(ok: bool, witness: impl FnOnce() -> String) -> core::result::Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(witness())
    }
}

fn show<R: Ring + ?Sized>(ring: &R, m: &Matrix<R::Elem>) -> String {
    let mut s = String::new();
    let _ = m.write(ring, &mut s);
    s
}

fn axioms(rings: &[TestRing], samples: usize, rng: &mut dyn RngCore) -> Check {
    let mut cases = 0;
    for t in rings.iter().step_by(2) {
        let r = ring_axiom_suite(&t.ring, samples, rng);
        ensure(r.passed(), || format!("{}: {r}", t.name))?;
        cases += r.entries().iter().map(|e| e.cases).sum::<usize>();
    }
    Ok(cases)
}

fn forms(rings: &[TestRing], samples: usize, rng: &mut dyn RngCore) -> Check {
    let mut cases = 0;
    for t in rings {
        let r = form_param_validate(&t.ring, &t.form, samples, rng);
        ensure(r.passed(), || format!("{}: {r}", t.name))?;
        cases += r.entries().iter().map(|e| e.cases).sum::<usize>();
    }
    Ok(cases)
}

fn generators(rings: &[TestRing], samples: usize, rng: &mut dyn RngCore) -> Check {
    let n = 3;
    let mut cases = 0;
    for t in rings {
        for family in [Family::QE, Family::QR, Family::QL] {
            for i in 1..=n {
                for j in (1..=n).filter(|&j| family != Family::QE || j != i) {
                    for _ in 0..samples.div_ceil(10) {
                        let g = random_param_gen(&t.ring, &t.form, family, i, j, rng);
                        let m = elem_gen_eval(&t.ring, &t.form, &g, n).map_err(|e| format!("{}: {e}", t.name))?;
                        ensure(gq_member(&t.ring, &m) == Ok(true), || {
                            format!("{}: {family}_{i}{j}({}) ∉ GQ", t.name, t.ring.format(&g.a))
                        })?;
                        cases += 1;
                    }
                }
            }
        }
    }
    Ok(cases)
}

fn conditions(rings: &[TestRing], samples: usize, rng: &mut dyn RngCore) -> Check {
    let mut cases = 0;
    for t in rings {
        let (ring, form) = (&t.ring, &t.form);
        for _ in 0..samples {
            let n = rng.gen_range(1..=3);
            let len = rng.gen_range(0..=6);
            let mut m = word_eval(ring, form, &random_word(ring, form, n, len, rng), n).map_err(|e| e.to_string())?;
            let c = lambda_quadratic_conditions(ring, form, &m).map_err(|e| e.to_string())?;
            ensure(c == [true; 4], || format!("{}: word matrix {} gives {c:?}", t.name, show(ring, &m)))?;
            let (r, k) = (rng.gen_range(0..2 * n), rng.gen_range(0..2 * n));
            let e = ring.random(rng);
            m.set(r, k, ring.add(m.get(r, k), &e));
            let c = lambda_quadratic_conditions(ring, form, &m).map_err(|e| e.to_string())?;
            ensure(c.iter().all(|&x| x == c[0]), || format!("{}: perturbed {} gives {c:?}", t.name, show(ring, &m)))?;
            cases += 2;
        }
    }
    Ok(cases)
}

fn poly_closure(rings: &[TestRing], samples: usize, rng: &mut dyn RngCore) -> Check {
    let mut cases = 0;
    for t in rings {
        let poly = PolyRing::new(t.ring.clone()).with_sample_degree(4);
        let lx = Coefficientwise(&t.form);
        for _ in 0..samples {
            let a = poly.random(rng);
            let b = lx.sample(&poly, rng);
            let x = poly.mul(&poly.mul(&poly.conj(&a), &b), &a);
            ensure(lx.contains(&poly, &x) == Ok(true), || format!("{}: ā·b·a = {} ∉ Λ[X]", t.name, poly.format(&x)))?;
            cases += 1;
        }
    }
    Ok(cases)
}

fn random_unit(ring: &AnyRing, rng: &mut dyn RngCore) -> AnyElem {
    (0..32)
        .map(|_| ring.random(rng))
        .find(|x| ring.inverse(x).is_some())
        .unwrap_or_else(|| ring.one())
}

fn key_lemma(_: &[TestRing], samples: usize, rng: &mut dyn RngCore) -> Check {
    let rings = [
        (AnyRing::Zmod(Zmod::new(4, 1)), 2),
        (AnyRing::Zmod(Zmod::new(4, 3)), 2),
        (AnyRing::Zmod(Zmod::new(8, 1)), 2),
        (AnyRing::Zmod(Zmod::new(9, 1)), 3),
        (AnyRing::Integers(Integers::new(-1)), 2),
    ];
    let mut cases = 0;
    for (ring, g) in rings {
        let ideal = Ideal::new(g);
        for _ in 0..samples {
            let n = rng.gen_range(1..=3);
            let mut v: Vec<AnyElem> = (0..2 * n).map(|_| ring.random(rng)).collect();
            let q = rng.gen_range(0..2 * n);
            v[q] = random_unit(&ring, rng);
            let p = (q + n) % (2 * n);
            let mut w: Vec<AnyElem> = (0..2 * n).map(|_| ring.random_in_ideal(&ideal, rng)).collect();
            w[p] = ring.zero();
            let rest = inner(&ring, &v, &w).map_err(|e| e.to_string())?;
            let coeff = inner(&ring, &v, &basis(&ring, 2 * n, p)).map_err(|e| e.to_string())?;
            let c_inv = ring.inverse(&coeff).ok_or("no unit coordinate")?;
            w[p] = ring.neg(&ring.mul(&c_inv, &rest));
            let r = key_lemma_check(&ring, &v, &w, &ideal).map_err(|e| e.to_string())?;
            ensure(r.passed(), || format!("{r}"))?;
            cases += 1;
        }
    }
    Ok(cases)
}

fn excision_lift(rings: &[TestRing], samples: usize, rng: &mut dyn RngCore) -> Check {
    let mut cases = 0;
    for t in rings {
        let (ring, form) = (&t.ring, &t.form);
        let ex = Excision::new(ring.clone(), t.ideal);
        for _ in 0..samples.div_ceil(2) {
            let n = rng.gen_range(1..=3);
            let len = rng.gen_range(0..=3);
            let w = random_rel_word(ring, form, t.ideal, n, len, rng);
            let direct = word_eval(ring, form, &w, n).map_err(|e| e.to_string())?;
            let lifted = lift_relative_word(&ex, &w).map_err(|e| e.to_string())?;
            let up = word_eval(&ex, &GammaPlus(form), &lifted, n).map_err(|e| e.to_string())?;
            ensure(ex.fold_matrix(&up) == direct, || format!("{}: fold∘lift ≠ id on {}", t.name, show(ring, &direct)))?;
            cases += 1;
        }
    }
    Ok(cases)
}

fn double_iso(_: &[TestRing], samples: usize, rng: &mut dyn RngCore) -> Check {
    let mut cases = 0;
    for (m, g) in [(4, 2), (8, 2), (9, 3)] {
        let base = Zmod::new(m, 1);
        let ideal = Ideal::new(g);
        let d = DoubleRing::new(base.clone(), ideal);
        let elems = base.elements().unwrap_or_default();
        for &a in &elems {
            for &b in &elems {
                if let Ok(x) = d.pair(a, b) {
                    ensure(d.iso_g(&d.iso_f(&x)) == x, || format!("Z/{m}: g(f({a}|{b})) ≠ ({a}|{b})"))?;
                    cases += 1;
                }
                if base.in_ideal(&ideal, &b) {
                    ensure(d.iso_f(&d.iso_g(&(a, b))) == (a, b), || format!("Z/{m}: f(g({a},{b})) ≠ ({a},{b})"))?;
                    let ex = d.excision();
                    let zi = ex.from_ideal(&b);
                    let s = ex.sub(&ex.mul(&zi, &zi), &ex.mul(&ex.embed(&b), &zi));
                    ensure(ex.is_zero(&s), || format!("Z/{m}: (0,i)² ≠ (i,0)(0,i) for i = {b}"))?;
                    cases += 2;
                }
            }
        }
        for _ in 0..samples {
            let (x, y) = (d.random(rng), d.random(rng));
            let ex = d.excision();
            let f = |p: &(u64, u64)| d.iso_f(p);
            ensure(f(&d.mul(&x, &y)) == ex.mul(&f(&x), &f(&y)), || format!("Z/{m}: f is not multiplicative"))?;
            cases += 1;
        }
    }
    Ok(cases)
}

fn random_invertible(ring: &AnyRing, n: usize, rng: &mut dyn RngCore) -> (Matrix<AnyElem>, Matrix<AnyElem>) {
    let mut m = Matrix::identity(ring, n);
    for k in 0..n {
        let mut d = Matrix::identity(ring, n);
        d.set(k, k, random_unit(ring, rng));
        m = m.mul(ring, &d);
    }
    for _ in 0..2 * n {
        let (i, j) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if i != j {
            m = m.mul(ring, &Matrix::elementary(ring, n, i, j, &ring.random(rng)));
        }
    }
    let inv = invert(ring, &m, 16).unwrap_or_else(|| Matrix::identity(ring, n));
    (m, inv)
}

fn check_reduction(
    t: &TestRing,
    input: &Matrix<AnyElem>,
    res: &ReductionResult<AnyElem>,
) -> core::result::Result<(), String> {
    let (ring, form) = (&t.ring, &t.form);
    let n = res.alpha.rows();
    let h = hyperbolic(ring, &res.alpha, &res.alpha_inv).map_err(|e| e.to_string())?;
    let cert = word_eval(ring, form, &res.certificate, n).map_err(|e| e.to_string())?;
    ensure(input.mul(ring, &cert) == h, || format!("{}: input·certificate ≠ H(α) for {}", t.name, show(ring, input)))?;
    for f in &res.certificate.factors {
        let m = word_eval(ring, form, &ElemWord::new(vec![f.clone()]), n).map_err(|e| e.to_string())?;
        let c = lambda_quadratic_conditions(ring, form, &m).map_err(|e| e.to_string())?;
        ensure(c == [true; 4], || format!("{}: certificate factor {} gives {c:?}", t.name, show(ring, &m)))?;
    }
    Ok(())
}

fn reductions(rings: &[TestRing], samples: usize, rng: &mut dyn RngCore) -> Check {
    let mut cases = 0;
    for t in rings {
        let (ring, form) = (&t.ring, &t.form);
        for k in 0..samples.div_ceil(2) {
            let n = 1 + k % 3;
            let (alpha, alpha_inv) = random_invertible(ring, n, rng);
            let h = hyperbolic(ring, &alpha, &alpha_inv).map_err(|e| e.to_string())?;
            let x = t12(ring, form, &random_lambda_bar_hermitian(ring, form, n, rng)).map_err(|e| e.to_string())?;
            let y = t21(ring, form, &random_lambda_hermitian(ring, form, n, rng)).map_err(|e| e.to_string())?;
            let upper = h.mul(ring, &x);
            let lower = h.mul(ring, &y);
            let corner = lower.mul(ring, &x);
            let err = |e: crate::Error| format!("{}: {e}", t.name);
            check_reduction(t, &upper, &reduce_upper(ring, form, &upper, Some(&alpha_inv)).map_err(err)?)?;
            check_reduction(t, &lower, &reduce_lower(ring, form, &lower, Some(&alpha_inv)).map_err(err)?)?;
            check_reduction(t, &corner, &reduce_invertible_corner(ring, form, &corner, Some(&alpha_inv)).map_err(err)?)?;
            cases += 3;
        }
    }
    Ok(cases)
}

fn kopeiko(_: &[TestRing], samples: usize, rng: &mut dyn RngCore) -> Check {
    let mut cases = 0;
    for (m, l) in [(4, 1), (4, 3), (8, 1), (8, 7)] {
        let ring = AnyRing::Zmod(Zmod::new(m, l));
        let poly = PolyRing::new(ring.clone());
        for form in [AnyForm::Min, AnyForm::Max] {
            let lx = Coefficientwise(&form);
            let mut accepted = 0;
            while accepted < samples.div_ceil(4) {
                let r = rng.gen_range(1..=2);
                let n = rng.gen_range(1..=3);
                let scale = |x: Matrix<AnyElem>, k: i64| x.scale(&ring, &ring.from_int(k));
                let a = scale(Matrix::from_fn(r, r, |_, _| ring.random(rng)), 2);
                let b = scale(random_lambda_bar_hermitian(&ring, &form, r, rng), [1, 2, 4][rng.gen_range(0..3)]);
                let c = scale(random_lambda_hermitian(&ring, &form, r, rng), [1, 2, 4][rng.gen_range(0..3)]);
                let d = KopeikoData { a, b, c, n };
                if kopeiko_validate(&ring, &form, &d).is_err() {
                    continue;
                }
                let km = kopeiko_matrix(&poly, &d);
                let conds = lambda_quadratic_conditions(&poly, &lx, &km).map_err(|e| e.to_string())?;
                ensure(conds == [true; 4], || format!("Z/{m}: normal form gives {conds:?}"))?;
                let res = kopeiko_to_hyperbolic(&poly, &form, &d).map_err(|e| e.to_string())?;
                let ax = d.a.map(|e| poly.monomial(e.clone(), 1));
                ensure(res.alpha == Matrix::identity(&poly, r).sub(&poly, &ax), || format!("Z/{m}: α ≠ I - aX"))?;
                ensure(res.reconstructs(&poly, &lx, &km) == Ok(true), || format!("Z/{m}: no reconstruction"))?;
                accepted += 1;
            }
            cases += accepted;
        }
    }
    let z4 = Zmod::new(4, 3);
    let poly = PolyRing::new(z4.clone());
    let two = Matrix::scalar(&z4, 1, &2);
    let d = KopeikoData { a: two.clone(), b: two.clone(), c: two, n: 1 };
    let res = kopeiko_to_hyperbolic(&poly, &crate::form::LambdaMax, &d).map_err(|e| e.to_string())?;
    ensure(res.alpha == Matrix::scalar(&poly, 1, &vec![1, 2]), || "worked instance: α ≠ 1-2X".into())?;
    ensure(res.alpha_inv == Matrix::scalar(&poly, 1, &vec![1, 2]), || "worked instance: α⁻¹ ≠ 1+2X".into())?;
    Ok(cases + 1)
}

fn truncated(_: &[TestRing], samples: usize, rng: &mut dyn RngCore) -> Check {
    let mut cases = 0;
    for m in [4, 9] {
        let base = Zmod::new(m, 1);
        for _ in 0..samples {
            let t = rng.gen_range(1..=8);
            let tr = TruncRing::new(base.clone(), t);
            let r = rng.gen_range(1..=t);
            let p: Vec<u64> = (0..=t - r).map(|_| base.random(rng)).collect();
            let mut u = tr.one();
            for (k, c) in p.iter().enumerate() {
                u[r + k] = *c;
            }
            let (c, q) = trunc_split(&tr, &p, r).map_err(|e| e.to_string())?;
            let mut second = tr.one();
            for (k, x) in q.iter().enumerate() {
                second[r + 1 + k] = *x;
            }
            ensure(tr.mul(&tr.one_plus_monomial(&c, r), &second) == u, || {
                format!("Z/{m}: split of {} does not multiply back", tr.format(&u))
            })?;
            let a: Vec<u64> = (0..t).map(|_| base.random(rng)).collect();
            let prod = trunc_product(&tr, &a);
            let got = trunc_product_decomp(&tr, &prod[1..]).map_err(|e| e.to_string())?;
            ensure(got == a, || format!("Z/{m}: decomposition of {} is not unique", tr.format(&prod)))?;
            cases += 2;
        }
    }
    Ok(cases)
}

fn descent(_: &[TestRing], _: usize, _: &mut dyn RngCore) -> Check {
    let tr = TruncRing::new(Zmod::new(9, 1), 2);
    let mut cases = 0;
    for c1 in 0..9u64 {
        for c2 in 0..9u64 {
            let u = vec![1, c1, c2];
            cases += 1;
            if !tr.is_one(&tr.mul(&u, &u)) {
                continue;
            }
            let q = torsion_descent(&tr, &u, 2, 1).map_err(|e| format!("u = {}: {e}", tr.format(&u)))?;
            let mut back = tr.one();
            for (k, x) in q.iter().enumerate() {
                back[2 + k] = *x;
            }
            ensure(back == u && tr.is_one(&u), || format!("u = {} survives descent", tr.format(&u)))?;
        }
    }
    let tr4 = TruncRing::new(Zmod::new(4, 1), 2);
    ensure(torsion_descent(&tr4, &[1, 2], 2, 1) == Err(crate::Error::KNotInvertible), || {
        "Z/4, k = 2 was not refused".into()
    })?;
    Ok(cases + 1)
}

fn graded(rings: &[TestRing], samples: usize, rng: &mut dyn RngCore) -> Check {
    let mut cases = 0;
    for t in rings.iter().filter(|t| !matches!(t.ring, AnyRing::Poly(_))) {
        let g = GradedRing::new(t.ring.clone(), 4);
        let base = g.base();
        for _ in 0..samples {
            let b = g.random(rng);
            let x = g.scalar(base.random(rng));
            let y = g.scalar(base.random(rng));
            let err = |e: crate::Error| e.to_string();
            let lhs = g.plus_eval(&g.plus_eval(&b, &x).map_err(err)?, &y).map_err(err)?;
            ensure(lhs == g.plus_eval(&b, &g.mul(&x, &y)).map_err(err)?, || {
                format!("{}: (b⁺(x))⁺(y) ≠ b⁺(xy) for b = {}", t.name, g.format(&b))
            })?;
            ensure(g.plus_eval(&b, &[]).map_err(err)? == g.scalar(g.component(&b, 0)), || {
                format!("{}: b⁺(0) ≠ b₀", t.name)
            })?;
            cases += 1;
        }
        let gx = Coefficientwise(&t.form);
        for _ in 0..samples.div_ceil(5) {
            let n = rng.gen_range(1..=2);
            let alpha = word_eval(&g, &gx, &random_word(&g, &gx, n, 4, rng), n).map_err(|e| e.to_string())?;
            let x = loop {
                let x = base.random(rng);
                if base.conj(&x) == x {
                    break g.scalar(x);
                }
            };
            let dilated = g.plus_eval_matrix(&alpha, &x).map_err(|e| e.to_string())?;
            ensure(gq_member(&g, &dilated) == Ok(true), || format!("{}: α⁺(x) ∉ GQ", t.name))?;
            cases += 1;
        }
    }
    Ok(cases)
}

fn transvections(rings: &[TestRing], samples: usize, rng: &mut dyn RngCore) -> Check {
    let mut cases = 0;
    for t in rings {
        let (ring, form) = (&t.ring, &t.form);
        let params = ring
            .elements()
            .unwrap_or_else(|| (0..samples.min(12)).map(|_| ring.random(rng)).collect());
        for n in 2..=3 {
            let e = |k: usize| basis(ring, 2 * n, k);
            let scaled = |k: usize, c: &AnyElem| e(k).iter().map(|x| ring.mul(x, c)).collect::<Vec<_>>();
            let zero = vec![ring.zero(); 2 * n];
            let mut check = |u: Vec<AnyElem>, v: Vec<AnyElem>, a: &AnyElem, g: ElemGen<AnyElem>| {
                let s = transvection_matrix(ring, form, &u, &v, a).map_err(|e| format!("{}: {e}", t.name))?;
                let m = elem_gen_eval(ring, form, &g, n).map_err(|e| format!("{}: {e}", t.name))?;
                cases += 1;
                ensure(s == m, || format!("{}: σ ≠ {}_{}{}({})", t.name, g.family, g.i, g.j, ring.format(&g.a)))
            };
            for c in &params {
                let cbar = ring.conj(c);
                let lc = ring.mul(&ring.lambda(), &cbar);
                for i in 0..n {
                    for j in (0..n).filter(|&j| j != i) {
                        check(e(i), scaled(j, c), &ring.zero(), ElemGen::new(Family::QR, i + 1, j + 1, cbar.clone()))?;
                        check(e(n + i), scaled(n + j, c), &ring.zero(), ElemGen::new(Family::QL, i + 1, j + 1, lc.clone()))?;
                        check(e(i), scaled(n + j, c), &ring.zero(), ElemGen::new(Family::QE, i + 1, j + 1, lc.clone()))?;
                    }
                }
            }
            for a in params.iter().filter(|a| form.contains(ring, a) == Ok(true)) {
                let qr = ring.neg(&ring.mul(&ring.lambda_bar(), a));
                for i in 0..n {
                    check(e(i), zero.clone(), a, ElemGen::new(Family::QR, i + 1, i + 1, qr.clone()))?;
                    check(e(n + i), zero.clone(), a, ElemGen::new(Family::QL, i + 1, i + 1, ring.neg(a)))?;
                }
            }
        }
    }
    Ok(cases)
}
