#![no_std]

extern crate alloc;

pub mod axioms;
pub mod dynamic;
pub mod elementary;
pub mod error;
pub mod excision;
pub mod form;
pub mod gq;
pub mod graded;
pub mod ideal;
pub mod matrix;
pub mod nilk1;
pub mod poly;
pub mod report;
pub mod ring;
pub mod suite;
pub mod transvection;
pub mod trunc;

pub use error::{Error, Result};
pub use ideal::Ideal;
pub use matrix::{Matrix, MatrixRing};
pub use poly::PolyRing;
pub use ring::{Gauss, GaussianZmod, Integers, Ring, Zmod};
pub use trunc::TruncRing;
