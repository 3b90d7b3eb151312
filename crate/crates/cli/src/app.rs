//! Subcommands and their dispatch to library operations.

use std::ffi::OsString;
use std::fs;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use formk1_core::axioms::ring_axiom_suite;
use formk1_core::dynamic::{AnyElem, AnyRing};
use formk1_core::elementary::{elem_gen_eval, word_eval, ElemGen, ElemWord};
use formk1_core::excision::{lift_relative_word, DoubleRing, Excision, GammaPlus};
use formk1_core::form::{form_param_validate, Coefficientwise};
use formk1_core::gq::{gq_member, lambda_quadratic_conditions};
use formk1_core::nilk1::{
    kopeiko_matrix, kopeiko_to_hyperbolic, kopeiko_validate, reduce_invertible_corner, reduce_lower,
    reduce_upper, torsion_descent, trunc_product_decomp, trunc_split,
};
use formk1_core::suite;
use formk1_core::{Error, Ideal, Matrix, PolyRing, Ring, TruncRing};
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::codec::{self, load, load_ring};
use crate::descriptor::{self, Descriptor, IdealSpec};
use crate::element;
use crate::failure::{CliResult, Failure, EXIT_FAILED, EXIT_MALFORMED};
use crate::pretty;

/// Seed used when neither `--seed` nor `FORMK1_SEED` is given.
pub const DEFAULT_SEED: u64 = 42;

#[derive(Parser, Debug)]
#[command(name = "formk1", version, about = "Exact form-ring arithmetic and general quadratic groups")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Print human-readable tables instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,
    /// Write the result to this file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct RingArg {
    /// Ring descriptor: inline JSON, a JSON file, or Z, Z/m, (Z/m)[i], …[X].
    #[arg(long)]
    ring: String,
    /// λ, overriding the descriptor (applies to the innermost ring).
    #[arg(long, allow_hyphen_values = true)]
    lambda: Option<String>,
}

impl RingArg {
    fn load(&self) -> CliResult<(Descriptor, AnyRing)> {
        load_ring(&self.ring, self.lambda.as_deref())
    }
}

#[derive(Args, Debug)]
struct FormArg {
    /// Form parameter: min, max, or form JSON (default max).
    #[arg(long)]
    form: Option<String>,
}

#[derive(Args, Debug)]
struct SeedArg {
    /// RNG seed (default: FORMK1_SEED, else 42).
    #[arg(long)]
    seed: Option<u64>,
    /// Random samples per check.
    #[arg(long, default_value_t = 24)]
    samples: usize,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Ring axioms.
    #[command(subcommand)]
    Ring(RingCmd),
    /// Form parameters.
    #[command(subcommand)]
    Form(FormCmd),
    /// General quadratic group membership and generators.
    #[command(subcommand)]
    Gq(GqCmd),
    /// Elementary words.
    #[command(subcommand)]
    Word(WordCmd),
    /// Excision and double rings.
    #[command(subcommand)]
    Excision(ExcisionCmd),
    /// Reductions of hyperbolic-shaped matrices to H(α).
    #[command(subcommand)]
    Reduce(ReduceCmd),
    /// Normal forms [a; b, c]_n over R[X].
    #[command(subcommand)]
    Kopeiko(KopeikoCmd),
    /// Units of truncated polynomial rings R[X]/(X^{t+1}).
    #[command(subcommand)]
    Trunc(TruncCmd),
    /// Graded evaluation maps.
    #[command(subcommand)]
    Graded(GradedCmd),
    /// Runs every lemma suite and reports one entry per suite.
    VerifyPaper {
        #[command(flatten)]
        seed: SeedArg,
    },
}

#[derive(Subcommand, Debug)]
enum RingCmd {
    /// Checks the form-ring axioms on the descriptor's ring.
    Check {
        #[command(flatten)]
        ring: RingArg,
        #[command(flatten)]
        seed: SeedArg,
    },
}

#[derive(Subcommand, Debug)]
enum FormCmd {
    /// Checks the form-parameter axioms.
    Validate {
        #[command(flatten)]
        ring: RingArg,
        #[command(flatten)]
        form: FormArg,
        #[command(flatten)]
        seed: SeedArg,
    },
}

#[derive(Subcommand, Debug)]
enum GqCmd {
    /// σ*ψσ = ψ.
    Member {
        #[command(flatten)]
        ring: RingArg,
        /// Matrix JSON (inline or file).
        #[arg(long)]
        matrix: String,
    },
    /// The four Λ-quadratic conditions.
    Conditions {
        #[command(flatten)]
        ring: RingArg,
        #[command(flatten)]
        form: FormArg,
        #[arg(long)]
        matrix: String,
    },
    /// The matrix of one elementary generator.
    Gen {
        #[command(flatten)]
        ring: RingArg,
        #[command(flatten)]
        form: FormArg,
        /// QE, QR or QL.
        #[arg(long)]
        family: String,
        #[arg(long)]
        i: usize,
        #[arg(long)]
        j: usize,
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        /// Half rank (default max(i, j)).
        #[arg(long)]
        n: Option<usize>,
    },
}

#[derive(Subcommand, Debug)]
enum WordCmd {
    /// Multiplies out a word.
    Eval {
        #[command(flatten)]
        ring: RingArg,
        #[command(flatten)]
        form: FormArg,
        /// Word JSON (inline or file).
        #[arg(long)]
        word: String,
        /// Ideal for relative factors without their own.
        #[arg(long)]
        ideal: Option<String>,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Lifts a word of relative generators to the excision ring.
    Lift {
        #[command(flatten)]
        ring: RingArg,
        #[command(flatten)]
        form: FormArg,
        #[arg(long)]
        word: String,
        #[arg(long)]
        ideal: String,
        #[arg(long)]
        n: Option<usize>,
    },
}

#[derive(Subcommand, Debug)]
enum ExcisionCmd {
    /// Maps "(a|b)" to the excision ring and back, or "(r,i)" the other way.
    Roundtrip {
        #[command(flatten)]
        ring: RingArg,
        #[arg(long)]
        ideal: String,
        #[arg(long, allow_hyphen_values = true)]
        element: String,
    },
}

#[derive(Args, Debug)]
struct ReduceArgs {
    #[command(flatten)]
    ring: RingArg,
    #[command(flatten)]
    form: FormArg,
    #[arg(long)]
    matrix: String,
    /// Inverse of the top-left block, when known.
    #[arg(long)]
    alpha_inv: Option<String>,
}

#[derive(Subcommand, Debug)]
enum ReduceCmd {
    /// (α β; 0 δ).
    Upper(ReduceArgs),
    /// (α 0; γ δ).
    Lower(ReduceArgs),
    /// (a b; c d) with a invertible.
    Corner(ReduceArgs),
}

#[derive(Args, Debug)]
struct KopeikoArgs {
    /// Base ring R; the normal form lives over R[X].
    #[command(flatten)]
    ring: RingArg,
    #[command(flatten)]
    form: FormArg,
    /// {"r","n","a","b","c"} JSON (inline or file).
    #[arg(long)]
    data: String,
}

#[derive(Subcommand, Debug)]
enum KopeikoCmd {
    /// Checks the three defining conditions.
    Validate(KopeikoArgs),
    /// The matrix [a; b, c]_n over R[X].
    Build(KopeikoArgs),
    /// Reduces [a; b, c]_n to H(I - aX) with a certificate.
    Reduce(KopeikoArgs),
}

#[derive(Args, Debug)]
struct TruncRingArg {
    /// Base ring R.
    #[command(flatten)]
    ring: RingArg,
    /// Truncation degree: R_t = R[X]/(X^{t+1}).
    #[arg(long)]
    t: usize,
}

#[derive(Subcommand, Debug)]
enum TruncCmd {
    /// 1 + X^r P as (1 + P(0)X^r)(1 + X^{r+1}Q).
    Split {
        #[command(flatten)]
        ring: TruncRingArg,
        /// The polynomial P.
        #[arg(long, allow_hyphen_values = true)]
        p: String,
        #[arg(long)]
        r: usize,
    },
    /// a_1..a_t with 1 + XP = Π (1 + a_i X^i).
    Decomp {
        #[command(flatten)]
        ring: TruncRingArg,
        /// The polynomial P.
        #[arg(long, allow_hyphen_values = true)]
        p: String,
    },
    /// For u = 1 + X^r P with u^{k^r} = 1, returns Q with u = 1 + X^{r+1}Q.
    Descent {
        #[command(flatten)]
        ring: TruncRingArg,
        #[arg(long, allow_hyphen_values = true)]
        u: String,
        #[arg(long, allow_hyphen_values = true)]
        k: i64,
        #[arg(long)]
        r: usize,
    },
}

#[derive(Subcommand, Debug)]
enum GradedCmd {
    /// b⁺(x) = Σ b_i xⁱ Yⁱ for x of degree 0.
    Eval {
        /// A Graded ring descriptor.
        #[command(flatten)]
        ring: RingArg,
        /// Graded element: text or {"components":{…}}.
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
    },
    /// α⁺(x), entrywise.
    Dilate {
        #[command(flatten)]
        ring: RingArg,
        #[arg(long)]
        matrix: String,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
    },
}

/// A command result: the JSON to print and whether the check it ran passed.
struct Outcome {
    value: Value,
    ok: bool,
}

impl Outcome {
    fn ok(value: Value) -> Self {
        Outcome { value, ok: true }
    }

    fn check(value: Value, ok: bool) -> Self {
        Outcome { value, ok }
    }
}

/// Parses `args` (including the program name), runs the command and prints
/// its output. Returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            print!("{e}");
            return 0;
        }
        Err(e) => {
            let msg = e.render().to_string();
            let first = msg.lines().next().unwrap_or("").trim_start_matches("error: ");
            println!("{}", Failure::usage(first).to_json());
            return EXIT_MALFORMED;
        }
    };
    let outcome = match dispatch(&cli.command) {
        Ok(o) => o,
        Err(f) => {
            println!("{}", f.to_json());
            return f.code;
        }
    };
    let text = if cli.pretty {
        pretty::render(&outcome.value)
    } else {
        format!("{}\n", outcome.value)
    };
    match &cli.out {
        None => print!("{text}"),
        Some(path) => {
            if let Err(e) = fs::write(path, text) {
                let f = Failure::io(format!("{}: {e}", path.display()));
                println!("{}", f.to_json());
                return f.code;
            }
        }
    }
    if outcome.ok {
        0
    } else {
        EXIT_FAILED
    }
}

fn seed_of(arg: &SeedArg) -> CliResult<u64> {
    if let Some(s) = arg.seed {
        return Ok(s);
    }
    match std::env::var("FORMK1_SEED") {
        Ok(s) => s
            .trim()
            .parse()
            .map_err(|_| Failure::usage(format!("FORMK1_SEED={s:?} is not an unsigned integer"))),
        Err(_) => Ok(DEFAULT_SEED),
    }
}

fn report_outcome(report: &formk1_core::report::Report, seed: u64) -> Outcome {
    let mut v = codec::report_json(report);
    v["seed"] = json!(seed);
    Outcome::check(v, report.passed())
}

fn dispatch(cmd: &Command) -> CliResult<Outcome> {
    match cmd {
        Command::Ring(RingCmd::Check { ring, seed }) => {
            let (_, r) = ring.load()?;
            let s = seed_of(seed)?;
            let report = ring_axiom_suite(&r, seed.samples, &mut ChaCha8Rng::seed_from_u64(s));
            Ok(report_outcome(&report, s))
        }
        Command::Form(FormCmd::Validate { ring, form, seed }) => {
            let (_, r) = ring.load()?;
            let f = codec::form_arg(&r, form.form.as_deref())?;
            let s = seed_of(seed)?;
            let report = form_param_validate(&r, &f, seed.samples, &mut ChaCha8Rng::seed_from_u64(s));
            Ok(report_outcome(&report, s))
        }
        Command::Gq(cmd) => gq(cmd),
        Command::Word(cmd) => word(cmd),
        Command::Excision(ExcisionCmd::Roundtrip { ring, ideal, element }) => roundtrip(ring, ideal, element),
        Command::Reduce(cmd) => reduce(cmd),
        Command::Kopeiko(cmd) => kopeiko(cmd),
        Command::Trunc(cmd) => trunc(cmd),
        Command::Graded(cmd) => graded(cmd),
        Command::VerifyPaper { seed } => {
            let s = seed_of(seed)?;
            let report = suite::run_all(seed.samples, &mut ChaCha8Rng::seed_from_u64(s));
            Ok(report_outcome(&report, s))
        }
    }
}

fn gq(cmd: &GqCmd) -> CliResult<Outcome> {
    match cmd {
        GqCmd::Member { ring, matrix } => {
            let (_, r) = ring.load()?;
            let m = codec::matrix_from_json(&r, &load(matrix)?)?;
            let member = gq_member(&r, &m)?;
            Ok(Outcome::check(json!({ "member": member }), member))
        }
        GqCmd::Conditions { ring, form, matrix } => {
            let (_, r) = ring.load()?;
            let f = codec::form_arg(&r, form.form.as_deref())?;
            let m = codec::matrix_from_json(&r, &load(matrix)?)?;
            let c = lambda_quadratic_conditions(&r, &f, &m)?;
            let all = c.iter().all(|&x| x);
            Ok(Outcome::check(json!({ "conditions": c, "quadratic": all }), all))
        }
        GqCmd::Gen { ring, form, family, i, j, a, n } => {
            let (_, r) = ring.load()?;
            let f = codec::form_arg(&r, form.form.as_deref())?;
            let family = codec::family_from_str(family)
                .ok_or_else(|| Failure::usage(format!("family must be QE, QR or QL, got {family:?}")))?;
            let a = element::parse(&r, a)?;
            let n = n.unwrap_or((*i).max(*j));
            let m = elem_gen_eval(&r, &f, &ElemGen::new(family, *i, *j, a), n)?;
            Ok(Outcome::ok(json!({ "matrix": codec::ring_matrix_json(&r, &m) })))
        }
    }
}

fn word_and_rank(
    r: &AnyRing,
    word: &str,
    ideal: Option<Ideal>,
    n: Option<usize>,
) -> CliResult<(ElemWord<AnyElem>, usize)> {
    let w = codec::word_from_json(r, &load(word)?, ideal)?;
    let n = match n {
        Some(n) => n,
        None if w.is_empty() => return Err(Failure::usage("the empty word needs --n")),
        None => codec::word_rank(&w),
    };
    Ok((w, n))
}

fn word(cmd: &WordCmd) -> CliResult<Outcome> {
    match cmd {
        WordCmd::Eval { ring, form, word, ideal, n } => {
            let (_, r) = ring.load()?;
            let f = codec::form_arg(&r, form.form.as_deref())?;
            let ideal = ideal.as_deref().map(descriptor::parse_ideal).transpose()?;
            let (w, n) = word_and_rank(&r, word, ideal, *n)?;
            let m = word_eval(&r, &f, &w, n)?;
            Ok(Outcome::ok(json!({ "matrix": codec::ring_matrix_json(&r, &m) })))
        }
        WordCmd::Lift { ring, form, word, ideal, n } => {
            let (d, r) = ring.load()?;
            let f = codec::form_arg(&r, form.form.as_deref())?;
            let j = descriptor::parse_ideal(ideal)?;
            let (w, n) = word_and_rank(&r, word, Some(j), *n)?;
            let ex = Excision::new(r.clone(), j);
            let lifted = lift_relative_word(&ex, &w)?;
            let direct = word_eval(&r, &f, &w, n)?;
            let up = word_eval(&ex, &GammaPlus(&f), &lifted, n)?;
            let agrees = ex.fold_matrix(&up) == direct;
            let ex_desc = Descriptor::Excision {
                base: Box::new(d),
                ideal: IdealSpec::Generator(j.generator() as i64),
            };
            let fmt = |x: &(AnyElem, AnyElem)| ex.format(x);
            Ok(Outcome::check(
                json!({
                    "ring": ex_desc.to_json(),
                    "word": codec::word_json(&lifted, &fmt),
                    "matrix": codec::matrix_json(&up, fmt),
                    "folded": codec::ring_matrix_json(&r, &direct),
                    "agrees": agrees,
                }),
                agrees,
            ))
        }
    }
}

fn roundtrip(ring: &RingArg, ideal: &str, element: &str) -> CliResult<Outcome> {
    let (_, r) = ring.load()?;
    let j = descriptor::parse_ideal(ideal)?;
    let d = DoubleRing::new(r.clone(), j);
    let ex = d.excision();
    let pair = |x: AnyElem| x.as_pair().clone();
    let v = if element.contains('|') {
        let x = pair(element::parse(&AnyRing::double(r.clone(), j), element)?);
        let fx = d.iso_f(&x);
        let back = d.iso_g(&fx);
        json!({ "double": d.format(&x), "excision": ex.format(&fx), "back": d.format(&back), "roundtrip": back == x })
    } else {
        let y = pair(element::parse(&AnyRing::excision(r.clone(), j), element)?);
        let gy = d.iso_g(&y);
        let back = d.iso_f(&gy);
        json!({ "excision": ex.format(&y), "double": d.format(&gy), "back": ex.format(&back), "roundtrip": back == y })
    };
    let ok = v["roundtrip"] == json!(true);
    Ok(Outcome::check(v, ok))
}

fn reduce(cmd: &ReduceCmd) -> CliResult<Outcome> {
    let (ReduceCmd::Upper(args) | ReduceCmd::Lower(args) | ReduceCmd::Corner(args)) = cmd;
    let (_, r) = args.ring.load()?;
    let f = codec::form_arg(&r, args.form.form.as_deref())?;
    let m = codec::matrix_from_json(&r, &load(&args.matrix)?)?;
    let inv = args
        .alpha_inv
        .as_deref()
        .map(|a| codec::matrix_from_json(&r, &load(a)?))
        .transpose()?;
    let res = match cmd {
        ReduceCmd::Upper(_) => reduce_upper(&r, &f, &m, inv.as_ref()),
        ReduceCmd::Lower(_) => reduce_lower(&r, &f, &m, inv.as_ref()),
        ReduceCmd::Corner(_) => reduce_invertible_corner(&r, &f, &m, inv.as_ref()),
    }?;
    let ok = res.reconstructs(&r, &f, &m)?;
    let mut v = codec::reduction_json(&res, &|x| r.format(x));
    v["reconstructs"] = json!(ok);
    Ok(Outcome::check(v, ok))
}

fn kopeiko(cmd: &KopeikoCmd) -> CliResult<Outcome> {
    let (KopeikoCmd::Validate(args) | KopeikoCmd::Build(args) | KopeikoCmd::Reduce(args)) = cmd;
    let (d, r) = args.ring.load()?;
    let f = codec::form_arg(&r, args.form.form.as_deref())?;
    let data = codec::kopeiko_from_json(&r, &load(&args.data)?)?;
    let poly_desc = Descriptor::Polynomial { base: Box::new(d) };
    poly_desc.build()?;
    let poly = PolyRing::new(r.clone());
    let fmt = |x: &Vec<AnyElem>| poly.format(x);
    match cmd {
        KopeikoCmd::Validate(_) => match kopeiko_validate(&r, &f, &data) {
            Ok(()) => Ok(Outcome::ok(json!({ "valid": true }))),
            Err(Error::ConditionViolated(k)) => Ok(Outcome::check(json!({ "valid": false, "violated": k }), false)),
            Err(e) => Err(e.into()),
        },
        KopeikoCmd::Build(_) => {
            kopeiko_validate(&r, &f, &data)?;
            let m = kopeiko_matrix(&poly, &data);
            Ok(Outcome::ok(json!({
                "ring": poly_desc.to_json(),
                "data": codec::kopeiko_json(&r, &data),
                "matrix": codec::matrix_json(&m, fmt),
            })))
        }
        KopeikoCmd::Reduce(_) => {
            let res = kopeiko_to_hyperbolic(&poly, &f, &data)?;
            let m = kopeiko_matrix(&poly, &data);
            let ok = res.reconstructs(&poly, &Coefficientwise(&f), &m)?;
            let mut v = codec::reduction_json(&res, &fmt);
            v["ring"] = poly_desc.to_json();
            v["reconstructs"] = json!(ok);
            Ok(Outcome::check(v, ok))
        }
    }
}

impl TruncRingArg {
    fn load(&self) -> CliResult<(AnyRing, TruncRing<AnyRing>, AnyRing)> {
        let (d, base) = self.ring.load()?;
        let any = Descriptor::TruncatedPolynomial { base: Box::new(d), t: self.t }.build()?;
        Ok((base.clone(), TruncRing::new(base, self.t), any))
    }
}

fn trunc_elem(any: &AnyRing, s: &str) -> CliResult<Vec<AnyElem>> {
    Ok(element::parse(any, s)?.as_seq().to_vec())
}

/// `P` as a polynomial over the base ring; coefficients past the truncation
/// degree are ignored by the operations.
fn poly_coeffs(base: &AnyRing, s: &str) -> CliResult<Vec<AnyElem>> {
    Ok(element::parse(&AnyRing::poly(base.clone()), s)?.as_seq().to_vec())
}

fn trunc(cmd: &TruncCmd) -> CliResult<Outcome> {
    let strings = |base: &AnyRing, xs: &[AnyElem]| xs.iter().map(|x| base.format(x)).collect::<Vec<_>>();
    match cmd {
        TruncCmd::Split { ring, p, r } => {
            let (base, tr, _) = ring.load()?;
            let p = poly_coeffs(&base, p)?;
            let (c, q) = trunc_split(&tr, &p, *r)?;
            let first = tr.one_plus_monomial(&c, *r);
            let mut second = tr.one();
            for (k, x) in q.iter().enumerate() {
                second[r + 1 + k] = x.clone();
            }
            let mut u = tr.one();
            for (k, x) in p.iter().enumerate().filter(|(k, _)| r + k <= tr.t()) {
                u[r + k] = base.add(&u[r + k], x);
            }
            let ok = tr.mul(&first, &second) == u;
            Ok(Outcome::check(
                json!({
                    "c": base.format(&c),
                    "q": strings(&base, &q),
                    "u": tr.format(&u),
                    "first": tr.format(&first),
                    "second": tr.format(&second),
                    "reconstructs": ok,
                }),
                ok,
            ))
        }
        TruncCmd::Decomp { ring, p } => {
            let (base, tr, _) = ring.load()?;
            let p = poly_coeffs(&base, p)?;
            let a = trunc_product_decomp(&tr, &p)?;
            Ok(Outcome::ok(json!({ "a": strings(&base, &a) })))
        }
        TruncCmd::Descent { ring, u, k, r } => {
            let (base, tr, any) = ring.load()?;
            let u = trunc_elem(&any, u)?;
            let q = torsion_descent(&tr, &u, *k, *r)?;
            Ok(Outcome::ok(json!({ "q": strings(&base, &q) })))
        }
    }
}

fn graded_ring(ring: &RingArg) -> CliResult<AnyRing> {
    let (_, r) = ring.load()?;
    if !matches!(r, AnyRing::Graded(_)) {
        return Err(Failure::usage("graded commands need a Graded ring descriptor"));
    }
    Ok(r)
}

/// Text, or JSON when it starts with `{`.
fn graded_arg(r: &AnyRing, s: &str) -> CliResult<AnyElem> {
    if s.trim_start().starts_with('{') {
        codec::graded_from_json(r, &load(s)?)
    } else {
        element::parse(r, s)
    }
}

fn graded(cmd: &GradedCmd) -> CliResult<Outcome> {
    match cmd {
        GradedCmd::Eval { ring, b, x } => {
            let r = graded_ring(ring)?;
            let AnyRing::Graded(g) = &r else { unreachable!() };
            let b = graded_arg(&r, b)?;
            let x = graded_arg(&r, x)?;
            let v = g.plus_eval(b.as_seq(), x.as_seq())?;
            Ok(Outcome::ok(json!({ "value": codec::graded_json(&r, &AnyElem::Seq(v)) })))
        }
        GradedCmd::Dilate { ring, matrix, x } => {
            let r = graded_ring(ring)?;
            let AnyRing::Graded(g) = &r else { unreachable!() };
            let m: Matrix<Vec<AnyElem>> = codec::matrix_from_json(&r, &load(matrix)?)?.map(|e| e.as_seq().to_vec());
            let x = graded_arg(&r, x)?;
            let out = g.plus_eval_matrix(&m, x.as_seq())?.map(|e| AnyElem::Seq(e.clone()));
            Ok(Outcome::ok(json!({ "matrix": codec::ring_matrix_json(&r, &out) })))
        }
    }
}

