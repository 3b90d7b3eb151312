//! Ideals generated by integers.
//!
//! Every ideal handled by the crate is of the form `dR` for an integer `d`,
//! which makes membership a divisibility test in each supported base ring and
//! makes the ideal automatically stable under the involution.

use num_integer::Integer;

/// The two-sided ideal `dR` generated by a non-negative integer `d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Ideal {
    generator: u64,
}

impl Ideal {
    pub fn new(generator: u64) -> Self {
        Ideal { generator }
    }

    /// The ideal generated by a list of integers, i.e. by their gcd.
    pub fn from_generators(gens: &[i64]) -> Self {
        let g = gens
            .iter()
            .fold(0u64, |acc, g| acc.gcd(&g.unsigned_abs()));
        Ideal { generator: g }
    }

    pub fn zero() -> Self {
        Ideal { generator: 0 }
    }

    pub fn whole() -> Self {
        Ideal { generator: 1 }
    }

    pub fn generator(&self) -> u64 {
        self.generator
    }

    /// Normalized generator inside `Z/m`: the ideal `dZ/m` equals `gcd(d, m)Z/m`.
    pub fn generator_mod(&self, m: u64) -> u64 {
        self.generator.gcd(&m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gcd_of_generators() {
        assert_eq!(Ideal::from_generators(&[4, 6]).generator(), 2);
        assert_eq!(Ideal::from_generators(&[-9]).generator(), 9);
        assert_eq!(Ideal::from_generators(&[]).generator(), 0);
        assert_eq!(Ideal::new(6).generator_mod(4), 2);
        assert_eq!(Ideal::zero().generator_mod(4), 4);
    }
}
