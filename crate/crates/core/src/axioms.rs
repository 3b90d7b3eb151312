//! Randomized (or exhaustive, for small rings) checks of the ring and
//! involution axioms.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use rand::{Rng as _, RngCore};

use crate::report::Report;
use crate::ring::Ring;

/// Rings with at most this many elements are checked on all triples.
pub const EXHAUSTIVE_LIMIT: usize = 32;

type Check<'a, R> = (&'a str, fn(&R, &<R as Ring>::Elem, &<R as Ring>::Elem, &<R as Ring>::Elem) -> Option<String>);

fn checks<R: Ring>() -> Vec<Check<'static, R>> {
    vec![
        ("additive associativity", |r: &R, a: &R::Elem, b: &R::Elem, c: &R::Elem| {
            let l = r.add(&r.add(a, b), c);
            let rr = r.add(a, &r.add(b, c));
            (l != rr).then(|| format!("(a+b)+c ≠ a+(b+c) at a={}, b={}, c={}", r.format(a), r.format(b), r.format(c)))
        }),
        ("additive commutativity", |r: &R, a: &R::Elem, b: &R::Elem, _: &R::Elem| {
            (r.add(a, b) != r.add(b, a)).then(|| format!("a+b ≠ b+a at a={}, b={}", r.format(a), r.format(b)))
        }),
        ("additive identity and inverse", |r: &R, a: &R::Elem, _: &R::Elem, _: &R::Elem| {
            let ok = r.add(a, &r.zero()) == *a && r.is_zero(&r.add(a, &r.neg(a)));
            (!ok).then(|| format!("a+0 or a-a wrong at a={}", r.format(a)))
        }),
        ("multiplicative associativity", |r: &R, a: &R::Elem, b: &R::Elem, c: &R::Elem| {
            let l = r.mul(&r.mul(a, b), c);
            let rr = r.mul(a, &r.mul(b, c));
            (l != rr).then(|| format!("(ab)c ≠ a(bc) at a={}, b={}, c={}", r.format(a), r.format(b), r.format(c)))
        }),
        ("multiplicative identity", |r: &R, a: &R::Elem, _: &R::Elem, _: &R::Elem| {
            let one = r.one();
            let ok = r.mul(a, &one) == *a && r.mul(&one, a) == *a;
            (!ok).then(|| format!("1 is not neutral at a={}", r.format(a)))
        }),
        ("distributivity", |r: &R, a: &R::Elem, b: &R::Elem, c: &R::Elem| {
            let left = r.mul(a, &r.add(b, c)) == r.add(&r.mul(a, b), &r.mul(a, c));
            let right = r.mul(&r.add(b, c), a) == r.add(&r.mul(b, a), &r.mul(c, a));
            (!(left && right)).then(|| format!("distributivity fails at a={}, b={}, c={}", r.format(a), r.format(b), r.format(c)))
        }),
        ("involution additive", |r: &R, a: &R::Elem, b: &R::Elem, _: &R::Elem| {
            (r.conj(&r.add(a, b)) != r.add(&r.conj(a), &r.conj(b)))
                .then(|| format!("conj(a+b) ≠ conj(a)+conj(b) at a={}, b={}", r.format(a), r.format(b)))
        }),
        ("involution involutive", |r: &R, a: &R::Elem, _: &R::Elem, _: &R::Elem| {
            (r.conj(&r.conj(a)) != *a).then(|| format!("conj(conj(a)) ≠ a at a={}", r.format(a)))
        }),
        ("involution anti-multiplicative", |r: &R, a: &R::Elem, b: &R::Elem, _: &R::Elem| {
            (r.conj(&r.mul(a, b)) != r.mul(&r.conj(b), &r.conj(a)))
                .then(|| format!("conj(ab) ≠ conj(b)conj(a) at a={}, b={}", r.format(a), r.format(b)))
        }),
        ("involution fixes 1", |r: &R, _: &R::Elem, _: &R::Elem, _: &R::Elem| {
            (!r.is_one(&r.conj(&r.one()))).then(|| String::from("conj(1) ≠ 1"))
        }),
        ("λ central", |r: &R, a: &R::Elem, _: &R::Elem, _: &R::Elem| {
            let l = r.lambda();
            (r.mul(&l, a) != r.mul(a, &l)).then(|| format!("λa ≠ aλ at a={}", r.format(a)))
        }),
        ("λλ̄=1", |r: &R, _: &R::Elem, _: &R::Elem, _: &R::Elem| {
            let l = r.lambda();
            let lb = r.conj(&l);
            let p = r.mul(&l, &lb);
            (!r.is_one(&p)).then(|| format!("λλ̄ = {}·{} = {}", r.format(&l), r.format(&lb), r.format(&p)))
        }),
    ]
}

/// Checks the ring axioms, the involution axioms, centrality of `λ` and
/// `λλ̄ = 1`.
///
/// Rings with at most [`EXHAUSTIVE_LIMIT`] elements are checked on every
/// triple; otherwise `samples` random triples are drawn.
pub fn ring_axiom_suite<R: Ring>(ring: &R, samples: usize, rng: &mut dyn RngCore) -> Report {
    let checks = checks::<R>();
    let mut witnesses: Vec<Option<String>> = vec![None; checks.len()];
    let mut cases = 0usize;
    let run = |a: &R::Elem, b: &R::Elem, c: &R::Elem, witnesses: &mut Vec<Option<String>>| {
        for (k, (_, check)) in checks.iter().enumerate() {
            if witnesses[k].is_none() {
                witnesses[k] = check(ring, a, b, c);
            }
        }
    };
    match ring.elements().filter(|e| e.len() <= EXHAUSTIVE_LIMIT) {
        Some(elems) => {
            for a in &elems {
                for b in &elems {
                    for c in &elems {
                        run(a, b, c, &mut witnesses);
                        cases += 1;
                    }
                }
            }
        }
        None => {
            for _ in 0..samples.max(1) {
                let a = pick(ring, rng);
                let b = pick(ring, rng);
                let c = pick(ring, rng);
                run(&a, &b, &c, &mut witnesses);
                cases += 1;
            }
        }
    }
    let mut report = Report::new();
    for ((name, _), w) in checks.iter().zip(witnesses) {
        report.record(name, cases, w);
    }
    report
}

// Mixes in the distinguished elements so that small samples still see them.
fn pick<R: Ring>(ring: &R, rng: &mut dyn RngCore) -> R::Elem {
    match rng.gen_range(0..16) {
        0 => ring.zero(),
        1 => ring.one(),
        2 => ring.lambda(),
        _ => ring.random(rng),
    }
}
