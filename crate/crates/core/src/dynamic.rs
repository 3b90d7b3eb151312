//! Runtime-described rings and form parameters.
//!
//! [`AnyRing`] covers every ring construction of the crate behind one type,
//! so that a front end can build rings from a description at run time and
//! still call the generic algorithms. Elements of an `AnyRing` are
//! [`AnyElem`] values of the matching shape; feeding an element of the wrong
//! shape is a programming error and panics.

use alloc::boxed::Box;
use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use rand::RngCore;

use crate::error::{Error, Result};
use crate::excision::{DoubleRing, Excision, GammaPlus, LambdaPrime};
use crate::form::{Coefficientwise, FormParameter, LambdaMax, LambdaMin};
use crate::graded::GradedRing;
use crate::ideal::Ideal;
use crate::matrix::{Matrix, MatrixRing};
use crate::poly::PolyRing;
use crate::ring::{Gauss, GaussianZmod, Integers, Ring, Zmod};
use crate::trunc::TruncRing;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AnyRing {
    Integers(Integers),
    Zmod(Zmod),
    Gaussian(GaussianZmod),
    Poly(Box<PolyRing<AnyRing>>),
    Trunc(Box<TruncRing<AnyRing>>),
    Excision(Box<Excision<AnyRing>>),
    Double(Box<DoubleRing<AnyRing>>),
    Graded(Box<GradedRing<AnyRing>>),
    Matrix(Box<MatrixRing<AnyRing>>),
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AnyElem {
    Int(BigInt),
    Mod(u64),
    Gauss(Gauss),
    /// Coefficients of a polynomial, truncated polynomial or graded element.
    Seq(Vec<AnyElem>),
    /// An excision or double-ring pair.
    Pair(Box<(AnyElem, AnyElem)>),
    Mat(Box<Matrix<AnyElem>>),
}

impl AnyRing {
    pub fn poly(base: AnyRing) -> Self {
        AnyRing::Poly(Box::new(PolyRing::new(base)))
    }

    pub fn trunc(base: AnyRing, t: usize) -> Self {
        AnyRing::Trunc(Box::new(TruncRing::new(base, t)))
    }

    pub fn excision(base: AnyRing, ideal: Ideal) -> Self {
        AnyRing::Excision(Box::new(Excision::new(base, ideal)))
    }

    pub fn double(base: AnyRing, ideal: Ideal) -> Self {
        AnyRing::Double(Box::new(DoubleRing::new(base, ideal)))
    }

    pub fn graded(base: AnyRing, top_degree: usize) -> Self {
        AnyRing::Graded(Box::new(GradedRing::new(base, top_degree)))
    }

    pub fn matrix(base: AnyRing, k: usize) -> Self {
        AnyRing::Matrix(Box::new(MatrixRing::new(base, k)))
    }

    /// The ring a construction is built on, if any.
    pub fn base(&self) -> Option<&AnyRing> {
        match self {
            AnyRing::Integers(_) | AnyRing::Zmod(_) | AnyRing::Gaussian(_) => None,
            AnyRing::Poly(r) => Some(r.base()),
            AnyRing::Trunc(r) => Some(r.base()),
            AnyRing::Excision(r) => Some(r.base()),
            AnyRing::Double(r) => Some(r.base()),
            AnyRing::Graded(r) => Some(r.base()),
            AnyRing::Matrix(r) => Some(r.base()),
        }
    }
}

/// Conversion between a concrete element type and [`AnyElem`].
trait Codec {
    type E;
    fn wrap(e: Self::E) -> AnyElem;
    fn peel(a: &AnyElem) -> &Self::E;
}

fn mismatch(a: &AnyElem) -> ! {
    panic!("element {a:?} does not belong to this ring")
}

macro_rules! codec {
    ($name:ident, $ty:ty, $wrap:expr, $pat:pat => $out:expr) => {
        struct $name;
        impl Codec for $name {
            type E = $ty;
            fn wrap(e: $ty) -> AnyElem {
                $wrap(e)
            }
            fn peel(a: &AnyElem) -> &$ty {
                match a {
                    $pat => $out,
                    _ => mismatch(a),
                }
            }
        }
    };
}

codec!(IntCodec, BigInt, AnyElem::Int, AnyElem::Int(x) => x);
codec!(ModCodec, u64, AnyElem::Mod, AnyElem::Mod(x) => x);
codec!(GaussCodec, Gauss, AnyElem::Gauss, AnyElem::Gauss(x) => x);
codec!(SeqCodec, Vec<AnyElem>, AnyElem::Seq, AnyElem::Seq(x) => x);
codec!(PairCodec, (AnyElem, AnyElem), |e| AnyElem::Pair(Box::new(e)), AnyElem::Pair(x) => &**x);
codec!(MatCodec, Matrix<AnyElem>, |e| AnyElem::Mat(Box::new(e)), AnyElem::Mat(x) => &**x);

/// Runs `$body` with `$r` bound to the concrete ring and `C` to its codec.
macro_rules! each_ring {
    ($self:expr, $r:ident => $body:expr) => {
        match $self {
            AnyRing::Integers($r) => {
                #[allow(dead_code)]
                type C = IntCodec;
                $body
            }
            AnyRing::Zmod($r) => {
                #[allow(dead_code)]
                type C = ModCodec;
                $body
            }
            AnyRing::Gaussian($r) => {
                #[allow(dead_code)]
                type C = GaussCodec;
                $body
            }
            AnyRing::Poly($r) => {
                #[allow(dead_code)]
                type C = SeqCodec;
                $body
            }
            AnyRing::Trunc($r) => {
                #[allow(dead_code)]
                type C = SeqCodec;
                $body
            }
            AnyRing::Graded($r) => {
                #[allow(dead_code)]
                type C = SeqCodec;
                $body
            }
            AnyRing::Excision($r) => {
                #[allow(dead_code)]
                type C = PairCodec;
                $body
            }
            AnyRing::Double($r) => {
                #[allow(dead_code)]
                type C = PairCodec;
                $body
            }
            AnyRing::Matrix($r) => {
                #[allow(dead_code)]
                type C = MatCodec;
                $body
            }
        }
    };
}

impl Ring for AnyRing {
    type Elem = AnyElem;

    fn zero(&self) -> AnyElem {
        each_ring!(self, r => C::wrap(r.zero()))
    }
    fn one(&self) -> AnyElem {
        each_ring!(self, r => C::wrap(r.one()))
    }
    fn from_int(&self, n: i64) -> AnyElem {
        each_ring!(self, r => C::wrap(r.from_int(n)))
    }
    fn add(&self, a: &AnyElem, b: &AnyElem) -> AnyElem {
        each_ring!(self, r => C::wrap(r.add(C::peel(a), C::peel(b))))
    }
    fn neg(&self, a: &AnyElem) -> AnyElem {
        each_ring!(self, r => C::wrap(r.neg(C::peel(a))))
    }
    fn mul(&self, a: &AnyElem, b: &AnyElem) -> AnyElem {
        each_ring!(self, r => C::wrap(r.mul(C::peel(a), C::peel(b))))
    }
    fn conj(&self, a: &AnyElem) -> AnyElem {
        each_ring!(self, r => C::wrap(r.conj(C::peel(a))))
    }
    fn lambda(&self) -> AnyElem {
        each_ring!(self, r => C::wrap(r.lambda()))
    }
    fn inverse(&self, a: &AnyElem) -> Option<AnyElem> {
        each_ring!(self, r => r.inverse(C::peel(a)).map(C::wrap))
    }
    fn is_commutative(&self) -> bool {
        each_ring!(self, r => r.is_commutative())
    }
    fn elements(&self) -> Option<Vec<AnyElem>> {
        each_ring!(self, r => r.elements().map(|v| v.into_iter().map(C::wrap).collect()))
    }
    fn random(&self, rng: &mut dyn RngCore) -> AnyElem {
        each_ring!(self, r => C::wrap(r.random(rng)))
    }
    fn in_ideal(&self, ideal: &Ideal, a: &AnyElem) -> bool {
        each_ring!(self, r => r.in_ideal(ideal, C::peel(a)))
    }
    fn write_elem(&self, a: &AnyElem, out: &mut dyn fmt::Write) -> fmt::Result {
        each_ring!(self, r => r.write_elem(C::peel(a), out))
    }
    fn lambda_min_contains(&self, a: &AnyElem) -> Option<bool> {
        each_ring!(self, r => r.lambda_min_contains(C::peel(a)))
    }
    fn is_central(&self, a: &AnyElem) -> bool {
        each_ring!(self, r => r.is_central(C::peel(a)))
    }
    fn random_in_ideal(&self, ideal: &Ideal, rng: &mut dyn RngCore) -> AnyElem {
        each_ring!(self, r => C::wrap(r.random_in_ideal(ideal, rng)))
    }
}

impl AnyElem {
    pub fn as_seq(&self) -> &[AnyElem] {
        SeqCodec::peel(self)
    }

    pub fn as_pair(&self) -> &(AnyElem, AnyElem) {
        PairCodec::peel(self)
    }

    pub fn pair(a: AnyElem, b: AnyElem) -> Self {
        AnyElem::Pair(Box::new((a, b)))
    }
}

/// A form parameter chosen at run time.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AnyForm {
    Min,
    Max,
    Explicit(BTreeSet<AnyElem>),
    /// The parameter of a base ring carried to a construction over it:
    /// coefficientwise for polynomial, truncated and graded rings, `Γ ⊕ J`
    /// for excision rings and `Λ′` for double rings. Over a base ring it is
    /// the inner parameter itself.
    Extended(Box<AnyForm>),
}

impl FormParameter<AnyRing> for AnyForm {
    fn contains(&self, ring: &AnyRing, a: &AnyElem) -> Result<bool> {
        match self {
            AnyForm::Min => LambdaMin.contains(ring, a),
            AnyForm::Max => LambdaMax.contains(ring, a),
            AnyForm::Explicit(set) => Ok(set.contains(a)),
            AnyForm::Extended(inner) => {
                let inner: &AnyForm = inner;
                match ring {
                    AnyRing::Poly(p) => Coefficientwise(inner).contains(&**p, SeqCodec::peel(a)),
                    AnyRing::Trunc(t) => Coefficientwise(inner).contains(&**t, SeqCodec::peel(a)),
                    AnyRing::Graded(g) => Coefficientwise(inner).contains(&**g, SeqCodec::peel(a)),
                    AnyRing::Excision(e) => GammaPlus(inner).contains(&**e, PairCodec::peel(a)),
                    AnyRing::Double(d) => LambdaPrime(inner).contains(&**d, PairCodec::peel(a)),
                    AnyRing::Matrix(_) => Err(Error::BadParameter("no extended form parameter for matrix rings".into())),
                    _ => inner.contains(ring, a),
                }
            }
        }
    }

    fn sample(&self, ring: &AnyRing, rng: &mut dyn RngCore) -> AnyElem {
        match self {
            AnyForm::Min => LambdaMin.sample(ring, rng),
            AnyForm::Max => LambdaMax.sample(ring, rng),
            AnyForm::Explicit(set) => {
                let k = rand::Rng::gen_range(rng, 0..set.len().max(1));
                set.iter().nth(k).cloned().unwrap_or_else(|| ring.zero())
            }
            AnyForm::Extended(inner) => {
                let inner: &AnyForm = inner;
                match ring {
                    AnyRing::Poly(p) => SeqCodec::wrap(Coefficientwise(inner).sample(&**p, rng)),
                    AnyRing::Trunc(t) => SeqCodec::wrap(Coefficientwise(inner).sample(&**t, rng)),
                    AnyRing::Graded(g) => SeqCodec::wrap(Coefficientwise(inner).sample(&**g, rng)),
                    AnyRing::Excision(e) => PairCodec::wrap(GammaPlus(inner).sample(&**e, rng)),
                    AnyRing::Double(d) => PairCodec::wrap(LambdaPrime(inner).sample(&**d, rng)),
                    AnyRing::Matrix(_) => ring.zero(),
                    _ => inner.sample(ring, rng),
                }
            }
        }
    }

    fn elements(&self, ring: &AnyRing) -> Option<Vec<AnyElem>> {
        match self {
            AnyForm::Explicit(set) => Some(set.iter().cloned().collect()),
            _ => {
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
    }
}
