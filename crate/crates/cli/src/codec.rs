//! JSON wire formats for matrices, words, form parameters, normal-form data,
//! graded elements and reports.

use std::collections::BTreeSet;
use std::fs;

use formk1_core::dynamic::{AnyElem, AnyForm, AnyRing};
use formk1_core::elementary::{ElemGen, ElemWord, Factor, Family, RelGen};
use formk1_core::nilk1::{KopeikoData, ReductionResult};
use formk1_core::report::Report;
use formk1_core::{Ideal, Matrix, Ring};
use serde_json::{json, Map, Value};

use crate::descriptor::{self, Descriptor};
use crate::element;
use crate::failure::{CliResult, Failure};

/// An argument is inline JSON when it starts with `{` or `[`, otherwise a
/// path to a JSON file.
pub fn load(arg: &str) -> CliResult<Value> {
    let text = if arg.trim_start().starts_with(['{', '[']) {
        arg.to_string()
    } else {
        fs::read_to_string(arg).map_err(|e| Failure::io(format!("{arg}: {e}")))?
    };
    serde_json::from_str(&text).map_err(|e| Failure::parse(format!("{arg}: {e}")))
}

/// Reads `--ring`, accepting the shorthands `Z`, `Z/m`, `(Z/m)[i]` and `…[X]`.
pub fn load_ring(arg: &str, lambda: Option<&str>) -> CliResult<(Descriptor, AnyRing)> {
    let mut d = match descriptor::parse_shorthand(arg) {
        Some(d) => d,
        None => descriptor::from_json(&load(arg)?)?,
    };
    if let Some(l) = lambda {
        d.set_lambda(l);
    }
    let ring = d.build()?;
    Ok((d, ring))
}

fn field<'a>(v: &'a Value, key: &str, what: &str) -> CliResult<&'a Value> {
    v.get(key)
        .ok_or_else(|| Failure::parse(format!("{what} needs a {key:?} field")))
}

fn as_usize(v: &Value, what: &str) -> CliResult<usize> {
    v.as_u64()
        .map(|x| x as usize)
        .ok_or_else(|| Failure::parse(format!("{what} must be a non-negative integer")))
}

/// Elements are strings; bare JSON integers are accepted on input.
pub fn elem_from_json(ring: &AnyRing, v: &Value) -> CliResult<AnyElem> {
    match v {
        Value::String(s) => element::parse(ring, s),
        Value::Number(n) => element::parse(ring, &n.to_string()),
        _ => Err(Failure::parse(format!("element {v} must be a string"))),
    }
}

pub fn matrix_json<E: Clone>(m: &Matrix<E>, fmt: impl Fn(&E) -> String) -> Value {
    let entries: Vec<Vec<String>> = (0..m.rows())
        .map(|i| m.row(i).iter().map(&fmt).collect())
        .collect();
    json!({ "n": m.rows(), "entries": entries })
}

pub fn ring_matrix_json(ring: &AnyRing, m: &Matrix<AnyElem>) -> Value {
    matrix_json(m, |x| ring.format(x))
}

/// `{"n":2,"entries":[["1","0"],["0","1"]]}`, a bare array of rows, or the
/// text form `"[[1,0],[0,1]]"`.
pub fn matrix_from_json(ring: &AnyRing, v: &Value) -> CliResult<Matrix<AnyElem>> {
    let (n, rows) = match v {
        Value::String(s) => return element::parse_matrix_text(ring, s),
        Value::Array(rows) => (None, rows),
        Value::Object(_) => {
            let rows = field(v, "entries", "matrix")?
                .as_array()
                .ok_or_else(|| Failure::parse("matrix entries must be an array of rows"))?;
            let n = v.get("n").map(|n| as_usize(n, "matrix n")).transpose()?;
            (n, rows)
        }
        _ => return Err(Failure::parse("a matrix is an object {\"n\",\"entries\"}")),
    };
    let mut parsed = Vec::with_capacity(rows.len());
    for row in rows {
        let row = row
            .as_array()
            .ok_or_else(|| Failure::parse("matrix rows must be arrays"))?;
        parsed.push(row.iter().map(|e| elem_from_json(ring, e)).collect::<CliResult<Vec<_>>>()?);
    }
    if parsed.is_empty() {
        return Err(Failure::parse("matrix has no rows"));
    }
    let m = Matrix::from_rows(parsed).ok_or_else(|| Failure::parse("matrix rows have different lengths"))?;
    if let Some(n) = n {
        if n != m.rows() || n != m.cols() {
            return Err(Failure::parse(format!(
                "matrix declares n = {n} but has {}×{} entries",
                m.rows(),
                m.cols()
            )));
        }
    }
    Ok(m)
}

/// `"min"`, `"max"`, or `{"mode":"min"|"max"|"explicit"|"extended", …}`.
/// Absent means `Λ_max`.
pub fn form_arg(ring: &AnyRing, arg: Option<&str>) -> CliResult<AnyForm> {
    match arg.map(str::trim) {
        None | Some("max") => Ok(AnyForm::Max),
        Some("min") => Ok(AnyForm::Min),
        Some(a) => form_from_json(ring, &load(a)?),
    }
}

pub fn form_from_json(ring: &AnyRing, v: &Value) -> CliResult<AnyForm> {
    let mode = field(v, "mode", "form parameter")?
        .as_str()
        .ok_or_else(|| Failure::parse("form mode must be a string"))?;
    match mode {
        "min" => Ok(AnyForm::Min),
        "max" => Ok(AnyForm::Max),
        "explicit" => {
            let elems = field(v, "elements", "explicit form parameter")?
                .as_array()
                .ok_or_else(|| Failure::parse("form elements must be an array"))?;
            let set = elems
                .iter()
                .map(|e| elem_from_json(ring, e))
                .collect::<CliResult<BTreeSet<_>>>()?;
            Ok(AnyForm::Explicit(set))
        }
        "extended" => {
            let base_ring = ring
                .base()
                .ok_or_else(|| Failure::parse("an extended form parameter needs a constructed ring"))?;
            let inner = match v.get("base") {
                None => AnyForm::Max,
                Some(b) => form_from_json(base_ring, b)?,
            };
            Ok(AnyForm::Extended(Box::new(inner)))
        }
        other => Err(Failure::parse(format!("unknown form mode {other:?}"))),
    }
}

pub fn form_json(ring: &AnyRing, form: &AnyForm) -> Value {
    match form {
        AnyForm::Min => json!({ "mode": "min" }),
        AnyForm::Max => json!({ "mode": "max" }),
        AnyForm::Explicit(set) => {
            json!({ "mode": "explicit", "elements": set.iter().map(|x| ring.format(x)).collect::<Vec<_>>() })
        }
        AnyForm::Extended(inner) => {
            let base = ring.base().unwrap_or(ring);
            json!({ "mode": "extended", "base": form_json(base, inner) })
        }
    }
}

pub fn family_from_str(s: &str) -> Option<Family> {
    match s {
        "QE" => Some(Family::QE),
        "QR" => Some(Family::QR),
        "QL" => Some(Family::QL),
        _ => None,
    }
}

pub fn word_json<E: Clone>(w: &ElemWord<E>, fmt: &dyn Fn(&E) -> String) -> Value {
    let factors: Vec<Value> = w.factors.iter().map(|f| factor_json(f, fmt)).collect();
    json!({ "factors": factors })
}

fn gen_json<E: Clone>(g: &ElemGen<E>, fmt: &dyn Fn(&E) -> String) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("family".into(), json!(g.family.to_string()));
    m.insert("i".into(), json!(g.i));
    m.insert("j".into(), json!(g.j));
    m.insert("a".into(), json!(fmt(&g.a)));
    m
}

fn factor_json<E: Clone>(f: &Factor<E>, fmt: &dyn Fn(&E) -> String) -> Value {
    match f {
        Factor::Gen(g) => Value::Object(gen_json(g, fmt)),
        Factor::Rel(r) => {
            let mut m = gen_json(&r.core, fmt);
            m.insert("conjugator".into(), word_json(&r.conjugator, fmt));
            m.insert("ideal".into(), json!(r.ideal.generator()));
            Value::Object(m)
        }
        Factor::T12(b) => json!({ "family": "T12", "block": matrix_json(b, fmt) }),
        Factor::T21(b) => json!({ "family": "T21", "block": matrix_json(b, fmt) }),
    }
}

/// `{"factors":[{"family":"QE","i":1,"j":2,"a":"1"}, …]}`. A factor with a
/// `"conjugator"` word is relative, with ideal `"ideal"` or `default_ideal`;
/// `"T12"`/`"T21"` factors carry a `"block"` matrix.
pub fn word_from_json(ring: &AnyRing, v: &Value, default_ideal: Option<Ideal>) -> CliResult<ElemWord<AnyElem>> {
    let factors = field(v, "factors", "word")?
        .as_array()
        .ok_or_else(|| Failure::parse("word factors must be an array"))?;
    let mut out = Vec::with_capacity(factors.len());
    for f in factors {
        let family = field(f, "family", "word factor")?
            .as_str()
            .ok_or_else(|| Failure::parse("factor family must be a string"))?;
        let factor = match family {
            "T12" | "T21" => {
                let b = matrix_from_json(ring, field(f, "block", "block factor")?)?;
                if family == "T12" {
                    Factor::T12(b)
                } else {
                    Factor::T21(b)
                }
            }
            name => {
                let family = family_from_str(name)
                    .ok_or_else(|| Failure::parse(format!("unknown generator family {name:?}")))?;
                let i = as_usize(field(f, "i", "generator")?, "generator index i")?;
                let j = as_usize(field(f, "j", "generator")?, "generator index j")?;
                let a = elem_from_json(ring, field(f, "a", "generator")?)?;
                let gen = ElemGen::new(family, i, j, a);
                match f.get("conjugator") {
                    None => Factor::Gen(gen),
                    Some(c) => {
                        let ideal = match f.get("ideal") {
                            Some(Value::Number(n)) => Ideal::from_generators(&[n
                                .as_i64()
                                .ok_or_else(|| Failure::parse("ideal generator must be an integer"))?]),
                            Some(Value::String(s)) => descriptor::parse_ideal(s)?,
                            Some(_) => return Err(Failure::parse("factor ideal must be an integer")),
                            None => default_ideal
                                .ok_or_else(|| Failure::usage("relative factors need --ideal or an \"ideal\" field"))?,
                        };
                        Factor::Rel(RelGen {
                            conjugator: word_from_json(ring, c, Some(ideal))?,
                            core: gen,
                            ideal,
                        })
                    }
                }
            }
        };
        out.push(factor);
    }
    Ok(ElemWord::new(out))
}

/// Smallest `n` such that every factor fits in `GQ_2n`; 0 for the empty word.
pub fn word_rank<E: Clone>(w: &ElemWord<E>) -> usize {
    w.factors
        .iter()
        .map(|f| match f {
            Factor::Gen(g) => g.i.max(g.j),
            Factor::Rel(r) => r.core.i.max(r.core.j).max(word_rank(&r.conjugator)),
            Factor::T12(b) | Factor::T21(b) => b.rows(),
        })
        .max()
        .unwrap_or(0)
}

/// `{"r":1,"n":1,"a":[["2"]],"b":[["2"]],"c":[["2"]]}`; the blocks may also
/// be full matrix objects.
pub fn kopeiko_from_json(ring: &AnyRing, v: &Value) -> CliResult<KopeikoData<AnyElem>> {
    let n = as_usize(field(v, "n", "normal-form data")?, "n")?;
    let a = matrix_from_json(ring, field(v, "a", "normal-form data")?)?;
    let b = matrix_from_json(ring, field(v, "b", "normal-form data")?)?;
    let c = matrix_from_json(ring, field(v, "c", "normal-form data")?)?;
    if let Some(r) = v.get("r") {
        let r = as_usize(r, "r")?;
        if [&a, &b, &c].iter().any(|m| m.rows() != r || m.cols() != r) {
            return Err(Failure::parse(format!("blocks a, b, c must all be {r}×{r}")));
        }
    }
    Ok(KopeikoData { a, b, c, n })
}

pub fn kopeiko_json(ring: &AnyRing, d: &KopeikoData<AnyElem>) -> Value {
    json!({
        "r": d.r(),
        "n": d.n,
        "a": ring_matrix_json(ring, &d.a)["entries"],
        "b": ring_matrix_json(ring, &d.b)["entries"],
        "c": ring_matrix_json(ring, &d.c)["entries"],
    })
}

pub fn reduction_json<E: Clone>(r: &ReductionResult<E>, fmt: &dyn Fn(&E) -> String) -> Value {
    json!({
        "alpha": matrix_json(&r.alpha, fmt),
        "alpha_inv": matrix_json(&r.alpha_inv, fmt),
        "certificate": word_json(&r.certificate, fmt),
    })
}

/// `{"components":{"0":"2","1":"3"}}`, omitting zero components.
pub fn graded_json(ring: &AnyRing, x: &AnyElem) -> Value {
    let base = ring.base().expect("graded rings have a base");
    let comps: Map<String, Value> = x
        .as_seq()
        .iter()
        .enumerate()
        .filter(|(_, c)| !base.is_zero(c))
        .map(|(k, c)| (k.to_string(), json!(base.format(c))))
        .collect();
    json!({ "components": comps })
}

/// A graded element as text (`"2+3Y"`) or as a components object.
pub fn graded_from_json(ring: &AnyRing, v: &Value) -> CliResult<AnyElem> {
    let AnyRing::Graded(g) = ring else {
        return Err(Failure::usage("expected a Graded ring descriptor"));
    };
    let Some(comps) = v.get("components") else {
        return elem_from_json(ring, v);
    };
    let comps = comps
        .as_object()
        .ok_or_else(|| Failure::parse("components must be an object keyed by degree"))?;
    let mut out = ring.zero();
    for (k, c) in comps {
        let deg: usize = k
            .parse()
            .map_err(|_| Failure::parse(format!("degree key {k:?} is not a non-negative integer")))?;
        if deg > g.top_degree() {
            return Err(Failure::parse(format!("degree {deg} exceeds the top degree {}", g.top_degree())));
        }
        let c = elem_from_json(g.base(), c)?;
        out = ring.add(&out, &AnyElem::Seq(g.homogeneous(c, deg)));
    }
    Ok(out)
}

pub fn report_json(report: &Report) -> Value {
    let entries: Vec<Value> = report
        .entries()
        .iter()
        .map(|e| {
            let mut m = Map::new();
            m.insert("name".into(), json!(e.name));
            m.insert("status".into(), json!(if e.passed { "pass" } else { "fail" }));
            m.insert("cases".into(), json!(e.cases));
            if let Some(w) = &e.witness {
                m.insert("witness".into(), json!(w));
            }
            Value::Object(m)
        })
        .collect();
    json!({ "passed": report.passed(), "entries": entries })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z4() -> AnyRing {
        load_ring("Z/4", Some("3")).unwrap().1
    }

    #[test]
    fn word_roundtrip() {
        let r = z4();
        let v = json!({"factors":[
            {"family":"QE","i":1,"j":2,"a":"1"},
            {"family":"QR","i":1,"j":1,"a":"2","conjugator":{"factors":[{"family":"QL","i":2,"j":1,"a":"3"}]},"ideal":2},
            {"family":"T21","block":{"n":1,"entries":[["2"]]}}
        ]});
        let w = word_from_json(&r, &v, None).unwrap();
        assert_eq!(word_rank(&w), 2);
        let back = word_json(&w, &|x| r.format(x));
        assert_eq!(word_from_json(&r, &back, None).unwrap(), w);
    }

    #[test]
    fn relative_factor_without_ideal_is_a_usage_error() {
        let v = json!({"factors":[{"family":"QE","i":1,"j":2,"a":"2","conjugator":{"factors":[]}}]});
        assert_eq!(word_from_json(&z4(), &v, None).unwrap_err().kind, "UsageError");
    }

    #[test]
    fn matrix_shapes() {
        let r = z4();
        let m = matrix_from_json(&r, &json!({"n":2,"entries":[["1","0"],[0,"3"]]})).unwrap();
        assert_eq!(ring_matrix_json(&r, &m), json!({"n":2,"entries":[["1","0"],["0","3"]]}));
        assert!(matrix_from_json(&r, &json!({"n":3,"entries":[["1"]]})).is_err());
        assert!(matrix_from_json(&r, &json!([["1","0"],["1"]])).is_err());
        assert_eq!(matrix_from_json(&r, &json!("[[1,2],[3,0]]")).unwrap().get(1, 0), &AnyElem::Mod(3));
    }

    #[test]
    fn graded_components() {
        let (_, g) = load_ring(r#"{"kind":"Graded","base":{"kind":"ModularInt","m":4},"top_degree":3}"#, None).unwrap();
        let x = graded_from_json(&g, &json!({"components":{"0":"2","1":"3"}})).unwrap();
        assert_eq!(g.format(&x), "2+3Y");
        assert_eq!(graded_json(&g, &x), json!({"components":{"0":"2","1":"3"}}));
        assert!(graded_from_json(&g, &json!({"components":{"4":"1"}})).is_err());
    }

    #[test]
    fn forms() {
        let r = z4();
        assert_eq!(form_arg(&r, None).unwrap(), AnyForm::Max);
        let f = form_arg(&r, Some(r#"{"mode":"explicit","elements":["0","2"]}"#)).unwrap();
        assert_eq!(form_json(&r, &f), json!({"mode":"explicit","elements":["0","2"]}));
        assert!(form_arg(&r, Some(r#"{"mode":"extended"}"#)).is_err());
    }
}
