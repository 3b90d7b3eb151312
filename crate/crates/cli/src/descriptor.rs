//! Ring descriptors: the JSON (or shorthand) naming a ring, λ and, for the
//! relative constructions, an ideal.

use std::str::FromStr;

use formk1_core::dynamic::{AnyElem, AnyRing};
use formk1_core::{Gauss, GaussianZmod, Ideal, Integers, Zmod};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::element;
use crate::failure::{CliResult, Failure};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", deny_unknown_fields)]
pub enum Descriptor {
    Integers {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        lambda: Option<String>,
    },
    ModularInt {
        m: u64,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        involution: Option<String>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        lambda: Option<String>,
    },
    GaussianModular {
        m: u64,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        involution: Option<String>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        lambda: Option<String>,
    },
    Polynomial {
        base: Box<Descriptor>,
    },
    TruncatedPolynomial {
        base: Box<Descriptor>,
        t: usize,
    },
    Excision {
        base: Box<Descriptor>,
        ideal: IdealSpec,
    },
    Double {
        base: Box<Descriptor>,
        ideal: IdealSpec,
    },
    Graded {
        base: Box<Descriptor>,
        #[serde(alias = "topDegree")]
        top_degree: usize,
    },
    Matrix {
        base: Box<Descriptor>,
        size: usize,
    },
}

/// An ideal `dR` given by `d`, a list of generators, or text such as `"(2)"`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum IdealSpec {
    Generator(i64),
    Generators(Vec<i64>),
    Text(String),
}

impl IdealSpec {
    pub fn ideal(&self) -> CliResult<Ideal> {
        match self {
            IdealSpec::Generator(g) => Ok(Ideal::from_generators(&[*g])),
            IdealSpec::Generators(gs) => Ok(Ideal::from_generators(gs)),
            IdealSpec::Text(s) => parse_ideal(s),
        }
    }
}

/// Parses `"2"`, `"(2)"`, `"(4,6)"` or `"[4,6]"`.
pub fn parse_ideal(s: &str) -> CliResult<Ideal> {
    let inner = s.trim().trim_start_matches(['(', '[']).trim_end_matches([')', ']']);
    let gens = inner
        .split(',')
        .map(|g| g.trim().parse::<i64>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| Failure::parse(format!("ideal {s:?} is not a list of integers")))?;
    Ok(Ideal::from_generators(&gens))
}

impl Descriptor {
    pub fn base(&self) -> Option<&Descriptor> {
        match self {
            Descriptor::Integers { .. } | Descriptor::ModularInt { .. } | Descriptor::GaussianModular { .. } => None,
            Descriptor::Polynomial { base }
            | Descriptor::TruncatedPolynomial { base, .. }
            | Descriptor::Excision { base, .. }
            | Descriptor::Double { base, .. }
            | Descriptor::Graded { base, .. }
            | Descriptor::Matrix { base, .. } => Some(base),
        }
    }

    /// Sets λ on the innermost ring, which every construction inherits.
    pub fn set_lambda(&mut self, value: &str) {
        match self {
            Descriptor::Integers { lambda }
            | Descriptor::ModularInt { lambda, .. }
            | Descriptor::GaussianModular { lambda, .. } => *lambda = Some(value.to_string()),
            Descriptor::Polynomial { base }
            | Descriptor::TruncatedPolynomial { base, .. }
            | Descriptor::Excision { base, .. }
            | Descriptor::Double { base, .. }
            | Descriptor::Graded { base, .. }
            | Descriptor::Matrix { base, .. } => base.set_lambda(value),
        }
    }

    fn uses_variable(&self, var: char) -> bool {
        let own = match self {
            Descriptor::Polynomial { .. } | Descriptor::TruncatedPolynomial { .. } => Some('X'),
            Descriptor::Graded { .. } => Some('Y'),
            _ => None,
        };
        own == Some(var) || self.base().is_some_and(|b| b.uses_variable(var))
    }

    pub fn build(&self) -> CliResult<AnyRing> {
        match self {
            Descriptor::Integers { lambda } => {
                let l = match lambda {
                    None => BigInt::from(1),
                    Some(s) => BigInt::from_str(s.trim())
                        .map_err(|_| Failure::parse(format!("λ = {s:?} is not an integer")))?,
                };
                Ok(AnyRing::Integers(Integers::with_lambda(l)))
            }
            Descriptor::ModularInt { m, involution, lambda } => {
                check_modulus(*m)?;
                if let Some(inv) = involution.as_deref().filter(|i| *i != "trivial") {
                    return Err(Failure::parse(format!("ModularInt only has the trivial involution, not {inv:?}")));
                }
                let one = AnyRing::Zmod(Zmod::new(*m, 1));
                let l = match lambda {
                    None => 1,
                    Some(s) => match element::parse(&one, s)? {
                        AnyElem::Mod(v) => v as i64,
                        _ => unreachable!("Z/m elements are residues"),
                    },
                };
                Ok(AnyRing::Zmod(Zmod::new(*m, l)))
            }
            Descriptor::GaussianModular { m, involution, lambda } => {
                check_modulus(*m)?;
                let trivial = match involution.as_deref() {
                    None | Some("conjugation") => false,
                    Some("trivial") => true,
                    Some(other) => {
                        return Err(Failure::parse(format!(
                            "involution must be \"conjugation\" or \"trivial\", got {other:?}"
                        )))
                    }
                };
                let with = |l: Gauss| {
                    let r = GaussianZmod::new(*m, l);
                    if trivial {
                        r.with_trivial_involution()
                    } else {
                        r
                    }
                };
                let l = match lambda {
                    None => Gauss::new(1, 0),
                    Some(s) => match element::parse(&AnyRing::Gaussian(with(Gauss::new(1, 0))), s)? {
                        AnyElem::Gauss(g) => g,
                        _ => unreachable!("Gaussian elements are pairs of residues"),
                    },
                };
                Ok(AnyRing::Gaussian(with(l)))
            }
            Descriptor::Polynomial { base } => {
                self.refuse_nested(base, 'X')?;
                Ok(AnyRing::poly(base.build()?))
            }
            Descriptor::TruncatedPolynomial { base, t } => {
                self.refuse_nested(base, 'X')?;
                if *t == 0 {
                    return Err(Failure::parse("truncation degree t must be at least 1"));
                }
                Ok(AnyRing::trunc(base.build()?, *t))
            }
            Descriptor::Excision { base, ideal } => Ok(AnyRing::excision(base.build()?, ideal.ideal()?)),
            Descriptor::Double { base, ideal } => Ok(AnyRing::double(base.build()?, ideal.ideal()?)),
            Descriptor::Graded { base, top_degree } => {
                self.refuse_nested(base, 'Y')?;
                Ok(AnyRing::graded(base.build()?, *top_degree))
            }
            Descriptor::Matrix { base, size } => {
                if *size == 0 {
                    return Err(Failure::parse("matrix ring size must be at least 1"));
                }
                Ok(AnyRing::matrix(base.build()?, *size))
            }
        }
    }

    fn refuse_nested(&self, base: &Descriptor, var: char) -> CliResult<()> {
        if base.uses_variable(var) {
            return Err(Failure::parse(format!(
                "cannot nest two rings written in the variable {var}; their elements would not print unambiguously"
            )));
        }
        Ok(())
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("descriptors serialize")
    }
}

fn check_modulus(m: u64) -> CliResult<()> {
    if m < 2 {
        return Err(Failure::parse(format!("modulus must be at least 2, got {m}")));
    }
    Ok(())
}

/// `Z`, `Z/m`, `(Z/m)[i]`, each optionally followed by `[X]`.
pub fn parse_shorthand(s: &str) -> Option<Descriptor> {
    let s = s.trim();
    if let Some(base) = s.strip_suffix("[X]") {
        return Some(Descriptor::Polynomial {
            base: Box::new(parse_shorthand(base)?),
        });
    }
    if s == "Z" {
        return Some(Descriptor::Integers { lambda: None });
    }
    if let Some(m) = s.strip_prefix("(Z/").and_then(|r| r.strip_suffix(")[i]")) {
        return Some(Descriptor::GaussianModular {
            m: m.parse().ok()?,
            involution: None,
            lambda: None,
        });
    }
    let m = s.strip_prefix("Z/")?;
    Some(Descriptor::ModularInt {
        m: m.parse().ok()?,
        involution: None,
        lambda: None,
    })
}

pub fn from_json(v: &Value) -> CliResult<Descriptor> {
    Descriptor::deserialize(v).map_err(|e| Failure::parse(format!("ring descriptor: {e}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use formk1_core::Ring;
    use serde_json::json;

    #[test]
    fn spec_style_descriptor() {
        let d = from_json(&json!({"kind":"ModularInt","m":4,"involution":"trivial","lambda":"3"})).unwrap();
        let r = d.build().unwrap();
        assert_eq!(r.lambda(), AnyElem::Mod(3));
    }

    #[test]
    fn shorthands() {
        assert_eq!(parse_shorthand("Z"), Some(Descriptor::Integers { lambda: None }));
        assert!(matches!(parse_shorthand("(Z/5)[i]"), Some(Descriptor::GaussianModular { m: 5, .. })));
        assert!(matches!(parse_shorthand("Z/4[X]"), Some(Descriptor::Polynomial { .. })));
        assert_eq!(parse_shorthand("Q"), None);
    }

    #[test]
    fn lambda_goes_to_the_innermost_ring() {
        let mut d = parse_shorthand("(Z/5)[i][X]").unwrap();
        d.set_lambda("i");
        let r = d.build().unwrap();
        assert_eq!(r.format(&r.lambda()), "i");
    }

    #[test]
    fn same_variable_nesting_is_refused() {
        let d = parse_shorthand("Z[X][X]").unwrap();
        assert!(d.build().is_err());
    }

    #[test]
    fn ideal_forms() {
        assert_eq!(parse_ideal("(4,6)").unwrap(), Ideal::new(2));
        assert_eq!(IdealSpec::Generator(3).ideal().unwrap(), Ideal::new(3));
        assert!(parse_ideal("x").is_err());
    }
}
