//! Parser for the canonical text form of ring elements, the inverse of
//! `Ring::format`.
//!
//! Sums are split at top-level signs; a term ending in the ring variable
//! (optionally `^k`) carries a coefficient in front of it, parenthesized when
//! it is not a single term.

use std::str::FromStr;

use formk1_core::dynamic::{AnyElem, AnyRing};
use formk1_core::{Matrix, Ring};
use num_bigint::BigInt;

use crate::failure::{CliResult, Failure};

pub fn parse(ring: &AnyRing, s: &str) -> CliResult<AnyElem> {
    parse_sum(ring, s).map_err(|e| Failure::parse(format!("{s:?}: {}", e.message)))
}

fn err<T>(msg: impl Into<String>) -> CliResult<T> {
    Err(Failure::parse(msg))
}

fn parse_sum(ring: &AnyRing, s: &str) -> CliResult<AnyElem> {
    let s = s.trim();
    if s.is_empty() {
        return err("empty element");
    }
    let mut acc: Option<AnyElem> = None;
    for term in split_terms(s)? {
        let x = parse_term(ring, term)?;
        acc = Some(match acc {
            None => x,
            Some(a) => ring.add(&a, &x),
        });
    }
    Ok(acc.expect("at least one term"))
}

/// Splits before every `+` or `-` at bracket depth 0.
fn split_terms(s: &str) -> CliResult<Vec<&str>> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (k, c) in s.char_indices() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => {
                depth -= 1;
                if depth < 0 {
                    return err("unbalanced brackets");
                }
            }
            '+' | '-' if depth == 0 && k > start => {
                out.push(&s[start..k]);
                start = k;
            }
            _ => {}
        }
    }
    if depth != 0 {
        return err("unbalanced brackets");
    }
    out.push(&s[start..]);
    Ok(out)
}

/// Splits at `sep` at bracket depth 0.
fn split_top(s: &str, sep: char) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (k, c) in s.char_indices() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            c if c == sep && depth == 0 => {
                out.push(&s[start..k]);
                start = k + c.len_utf8();
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out
}

/// The inside of `s` when a single bracket pair encloses all of it.
fn unwrap_group(s: &str, open: char, close: char) -> Option<&str> {
    let inner = s.strip_prefix(open)?.strip_suffix(close)?;
    let mut depth = 0i32;
    for c in inner.chars() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => {
                depth -= 1;
                if depth < 0 {
                    return None;
                }
            }
            _ => {}
        }
    }
    (depth == 0).then_some(inner)
}

fn variable(ring: &AnyRing) -> Option<char> {
    match ring {
        AnyRing::Poly(_) | AnyRing::Trunc(_) => Some('X'),
        AnyRing::Graded(_) => Some('Y'),
        _ => None,
    }
}

fn parse_term(ring: &AnyRing, t: &str) -> CliResult<AnyElem> {
    let t = t.trim();
    if let Some(rest) = t.strip_prefix('-') {
        if rest.trim().is_empty() {
            return err("dangling '-'");
        }
        return Ok(ring.neg(&parse_term(ring, rest)?));
    }
    if let Some(rest) = t.strip_prefix('+') {
        return parse_term(ring, rest);
    }
    if t.is_empty() {
        return err("empty term");
    }
    if let Some(inner) = unwrap_group(t, '(', ')') {
        let sep = match ring {
            AnyRing::Excision(_) => Some(','),
            AnyRing::Double(_) => Some('|'),
            _ => None,
        };
        if let Some(sep) = sep {
            let parts = split_top(inner, sep);
            if parts.len() == 2 {
                return parse_pair(ring, parts[0], parts[1]);
            }
        }
        if variable(ring).is_none() {
            return parse_sum(ring, inner);
        }
        // "(1,2)" is a constant of a polynomial ring over pairs
        if let Ok(x) = parse_sum(ring, inner) {
            return Ok(x);
        }
        return monomial(ring, t, 0);
    }
    if let Some(var) = variable(ring) {
        if let Some((coeff, k)) = split_monomial(t, var)? {
            return monomial(ring, coeff, k);
        }
    }
    match ring {
        AnyRing::Integers(_) => BigInt::from_str(t)
            .map(AnyElem::Int)
            .or_else(|_| err(format!("{t:?} is not an integer"))),
        AnyRing::Zmod(_) => Ok(ring.from_int(parse_int(t)?)),
        AnyRing::Gaussian(g) => {
            let (re, im) = match t.strip_suffix('i') {
                Some("") => (0, 1),
                Some(k) => (0, parse_int(k)?),
                None => (parse_int(t)?, 0),
            };
            Ok(AnyElem::Gauss(g.elem(re, im)))
        }
        AnyRing::Poly(_) | AnyRing::Trunc(_) | AnyRing::Graded(_) => monomial(ring, t, 0),
        AnyRing::Excision(ex) => {
            let r = parse_sum(ex.base(), t)?;
            Ok(AnyElem::pair(r, ex.base().zero()))
        }
        AnyRing::Double(d) => {
            let r = parse_sum(d.base(), t)?;
            Ok(AnyElem::pair(r.clone(), r))
        }
        AnyRing::Matrix(mr) => {
            if t.starts_with('[') {
                let m = parse_matrix_text(mr.base(), t)?;
                if m.rows() != mr.size() || m.cols() != mr.size() {
                    return err(format!("expected a {0}×{0} matrix", mr.size()));
                }
                return Ok(AnyElem::Mat(Box::new(m)));
            }
            let c = parse_sum(mr.base(), t)?;
            Ok(AnyElem::Mat(Box::new(Matrix::scalar(mr.base(), mr.size(), &c))))
        }
    }
}

fn parse_int(s: &str) -> CliResult<i64> {
    s.trim()
        .parse()
        .or_else(|_| err(format!("{s:?} is not a machine-size integer")))
}

/// Recognizes `<coeff>var` and `<coeff>var^k`, returning the coefficient text.
fn split_monomial(t: &str, var: char) -> CliResult<Option<(&str, usize)>> {
    let mut depth = 0i32;
    let mut at = None;
    for (k, c) in t.char_indices() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            c if c == var && depth == 0 => at = Some(k),
            _ => {}
        }
    }
    let Some(k) = at else { return Ok(None) };
    let rest = &t[k + var.len_utf8()..];
    let exp = if rest.is_empty() {
        1
    } else {
        rest.strip_prefix('^')
            .and_then(|e| e.parse().ok())
            .ok_or_else(|| Failure::parse(format!("bad exponent in {t:?}")))?
    };
    Ok(Some((&t[..k], exp)))
}

fn monomial(ring: &AnyRing, coeff: &str, k: usize) -> CliResult<AnyElem> {
    let base = ring.base().expect("polynomial-like rings have a base");
    let c = if coeff.is_empty() {
        base.one()
    } else {
        parse_sum(base, coeff)?
    };
    let mut v = vec![base.zero(); k + 1];
    v[k] = c;
    match ring {
        AnyRing::Poly(p) => Ok(AnyElem::Seq(p.normalize(v))),
        AnyRing::Trunc(tr) => {
            if k > tr.t() {
                return err(format!("degree {k} exceeds the truncation degree {}", tr.t()));
            }
            Ok(AnyElem::Seq(tr.from_poly(&v)))
        }
        AnyRing::Graded(g) => {
            if k > g.top_degree() {
                return err(format!("degree {k} exceeds the top degree {}", g.top_degree()));
            }
            Ok(AnyElem::Seq(g.normalize(v)))
        }
        _ => unreachable!("only polynomial-like rings have a variable"),
    }
}

fn parse_pair(ring: &AnyRing, a: &str, b: &str) -> CliResult<AnyElem> {
    let (x, y) = match ring {
        AnyRing::Excision(ex) => {
            let (x, y) = (parse_sum(ex.base(), a)?, parse_sum(ex.base(), b)?);
            ex.pair(x, y)?
        }
        AnyRing::Double(d) => {
            let (x, y) = (parse_sum(d.base(), a)?, parse_sum(d.base(), b)?);
            d.pair(x, y)?
        }
        _ => unreachable!("only pair rings have pair syntax"),
    };
    Ok(AnyElem::pair(x, y))
}

/// `[[a,b],[c,d]]` with entries in `ring`.
pub fn parse_matrix_text(ring: &AnyRing, s: &str) -> CliResult<Matrix<AnyElem>> {
    let Some(inner) = unwrap_group(s.trim(), '[', ']') else {
        return err("a matrix is written [[a,b],[c,d]]");
    };
    let mut rows = Vec::new();
    for row in split_top(inner, ',') {
        let Some(row) = unwrap_group(row.trim(), '[', ']') else {
            return err(format!("matrix row {row:?} is not bracketed"));
        };
        rows.push(split_top(row, ',').into_iter().map(|e| parse_sum(ring, e)).collect::<CliResult<Vec<_>>>()?);
    }
    Matrix::from_rows(rows).ok_or_else(|| Failure::parse("matrix rows have different lengths"))
}
