//! Command-line front end. `run` parses argv, dispatches and returns the exit code
//! with the text to print, so the binary stays a thin wrapper.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use crate::aut::{self, AutoRep, Automorphism};
use crate::ce::{self, CESpec, SearchOptions, Verdict};
use crate::config::{Format, RunConfig};
use crate::error::{Error, Result};
use crate::ext::ExtRing;
use crate::field::{parse_field, AnyField, Field, Fq, Ring, RootedField};
use crate::matrix::Matrix;
use crate::poly;
use crate::quantum::{self, FactorIdeal, Gwa, ModGenerator, Tag};
use crate::spectrum::{self, CentrePrime, CompletelyPrime, Height1, Quotient, SpectrumReport};
use crate::with_field;

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_UNKNOWN: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

#[derive(Parser, Debug)]
#[command(name = "qweyl", version, about = "Cyclic algebras and quantum Weyl algebras at roots of unity")]
pub struct Cli {
    /// TOML file with search_budget, function_field_degree_bound, atlas_ext_degree, format.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Output format: json, text or dot.
    #[arg(long, global = true)]
    pub format: Option<Format>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Cyclic algebras (E(s), sigma, a).
    #[command(subcommand)]
    Ce(CeCmd),
    #[command(subcommand)]
    Verify(VerifyCmd),
    /// Factor algebras, the module L and graded bases of A1.
    #[command(subcommand)]
    A1(A1Cmd),
    /// Centre primes and the prime spectrum.
    #[command(subcommand)]
    Spec(SpecCmd),
    /// Automorphisms in canonical form.
    #[command(subcommand)]
    Aut(AutCmd),
}

#[derive(Args, Debug, Clone)]
pub struct FieldArg {
    /// Field with root of unity, e.g. "Fp:5;n=2;q=4" or "Frat:Fp:3;n=2;q=2".
    #[arg(long)]
    pub field: String,
}

#[derive(Args, Debug, Clone)]
pub struct CeArgs {
    #[command(flatten)]
    pub field: FieldArg,
    #[arg(long)]
    pub s: String,
    #[arg(long)]
    pub a: String,
    #[arg(long)]
    pub search_budget: Option<u64>,
}

#[derive(Subcommand, Debug)]
pub enum CeCmd {
    /// Simplicity, index, matrix size and matrix units.
    Classify(CeArgs),
    /// The simple module E(s)^d with the actions of h and x.
    Module(CeArgs),
    /// A basis of the division algebra D with E ~ M_m(D).
    DivisionBasis(CeArgs),
    /// Decomposition along the prime powers of n.
    TensorFactor(CeArgs),
    /// The image of the norm map of E(s).
    NormImage {
        #[command(flatten)]
        field: FieldArg,
        #[arg(long)]
        s: String,
        #[arg(long, default_value_t = 1_000_000)]
        bound: u64,
    },
}

#[derive(Subcommand, Debug)]
pub enum VerifyCmd {
    /// Normal-form verification of the identity list and the isomorphism catalogue.
    Identities {
        #[arg(long)]
        algebra: String,
        #[command(flatten)]
        field: FieldArg,
    },
}

#[derive(Subcommand, Debug)]
pub enum A1Cmd {
    /// A finite-dimensional factor algebra of A1.
    Factor {
        #[command(flatten)]
        field: FieldArg,
        /// tr, rf, tg, hf or maximal.
        #[arg(long)]
        ideal: String,
        /// The polynomial f or g for rf, tg and hf.
        #[arg(long)]
        poly: Option<String>,
        #[arg(long)]
        r0: Option<String>,
        #[arg(long)]
        t0: Option<String>,
    },
    /// The matrices of h, x, y on L = A1/A1(t, y).
    ModuleL {
        #[command(flatten)]
        field: FieldArg,
    },
    /// The graded decomposition of A1/(r) or A1/(t).
    Basis {
        #[command(flatten)]
        field: FieldArg,
        /// r or t.
        #[arg(long = "mod")]
        modulo: String,
        #[arg(long, default_value_t = 8)]
        degree_bound: usize,
    },
}

#[derive(Subcommand, Debug)]
pub enum SpecCmd {
    /// Classify one centre prime and the primes over it.
    Classify(SpecClassifyArgs),
    /// Enumerate all maximal points up to a residue degree.
    Atlas {
        #[arg(long)]
        algebra: String,
        #[command(flatten)]
        field: FieldArg,
        #[arg(long)]
        max_ext_degree: Option<usize>,
        #[arg(long, default_value_t = 1 << 20)]
        max_points: u64,
    },
}

#[derive(Args, Debug)]
#[group(id = "prime", required = true, multiple = false, args = ["point", "zero", "named", "poly", "asserted"])]
pub struct SpecClassifyArgs {
    #[arg(long)]
    pub algebra: String,
    #[command(flatten)]
    pub field: FieldArg,
    /// Coordinates of a maximal point, e.g. r=2,t=1 (s=..,t=.. outside A1).
    #[arg(long)]
    pub point: Option<String>,
    /// Residue field F_p[z]/(poly) for the point coordinates.
    #[arg(long)]
    pub ext: Option<String>,
    /// The zero ideal.
    #[arg(long)]
    pub zero: bool,
    /// A named height one prime: t, r, s, h or x.
    #[arg(long)]
    pub named: Option<String>,
    /// A univariate height one prime, e.g. "t:3+t^2".
    #[arg(long)]
    pub poly: Option<String>,
    /// Any other generator, taken to be irreducible.
    #[arg(long)]
    pub asserted: Option<String>,
}

#[derive(Args, Debug, Clone)]
pub struct AutParams {
    #[arg(long)]
    pub algebra: String,
    #[command(flatten)]
    pub field: FieldArg,
    #[arg(long, default_value = "1")]
    pub lambda: String,
    #[arg(long)]
    pub mu: Option<String>,
    /// Exponent i in sigma_{lambda x^i, mu}.
    #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
    pub i: i64,
    /// Exchange h and x (A) or x and y (A1).
    #[arg(long)]
    pub swap: bool,
    /// x -> mu x^{-1} in CA.
    #[arg(long)]
    pub invert: bool,
    /// Exponent matrix a,b,c,d of tau in B.
    #[arg(long, allow_negative_numbers = true)]
    pub matrix: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum AutCmd {
    /// Build an automorphism from canonical parameters and test the relations.
    Check(AutParams),
    /// Identify generator images with a canonical automorphism.
    Recognize {
        #[arg(long)]
        algebra: String,
        #[command(flatten)]
        field: FieldArg,
        /// Images as "h=x*h;x=x" (or "x=..;y=.." in A1).
        #[arg(long)]
        images: String,
    },
}

/// A command result before formatting.
#[derive(Clone, Debug)]
pub struct Output {
    pub json: Value,
    pub dot: Option<String>,
    pub unknown: bool,
}

impl Output {
    fn new<T: Serialize>(v: &T) -> Result<Output> {
        let json = serde_json::to_value(v).map_err(|e| Error::Parse(format!("serialization: {e}")))?;
        Ok(Output { json, dot: None, unknown: false })
    }
}

/// What the binary prints and returns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Usage(_) => EXIT_USAGE,
        Error::SearchExhausted { .. } => EXIT_UNKNOWN,
        _ => EXIT_ERROR,
    }
}

pub fn error_object(e: &Error) -> Value {
    json!({ "error": { "kind": e.kind(), "message": e.to_string() } })
}

pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code, stdout: String::new(), stderr: text }
            } else {
                Outcome { code, stdout: text, stderr: String::new() }
            };
        }
    };
    let config = match load_config(&cli) {
        Ok(c) => c,
        Err(e) => return failure(&e),
    };
    match dispatch(&cli.command, &config).and_then(|out| render(&out, config.format).map(|s| (out, s))) {
        Ok((out, text)) => Outcome {
            code: if out.unknown { EXIT_UNKNOWN } else { EXIT_OK },
            stdout: text,
            stderr: String::new(),
        },
        Err(e) => failure(&e),
    }
}

fn failure(e: &Error) -> Outcome {
    Outcome {
        code: exit_code(e),
        stdout: format!("{}\n", serde_json::to_string_pretty(&error_object(e)).unwrap_or_default()),
        stderr: format!("error: {e}\n"),
    }
}

fn load_config(cli: &Cli) -> Result<RunConfig> {
    let mut cfg = match &cli.config {
        Some(p) => RunConfig::load(p)?,
        None => RunConfig::default(),
    };
    if let Some(f) = cli.format {
        cfg.format = f;
    }
    cfg.with_env()
}

pub fn render(out: &Output, format: Format) -> Result<String> {
    match format {
        Format::Json => Ok(format!(
            "{}\n",
            serde_json::to_string_pretty(&out.json).map_err(|e| Error::Parse(e.to_string()))?
        )),
        Format::Text => {
            let mut s = String::new();
            text_lines(&out.json, 0, &mut s);
            Ok(s)
        }
        Format::Dot => out
            .dot
            .clone()
            .ok_or_else(|| Error::Usage("dot output is only produced by `spec atlas`".into())),
    }
}

fn text_lines(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                match x {
                    Value::Object(_) | Value::Array(_) if !is_flat(x) => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        text_lines(x, indent + 1, out);
                    }
                    _ => out.push_str(&format!("{pad}{k}: {}\n", scalar_text(x))),
                }
            }
        }
        Value::Array(items) => {
            for x in items {
                if is_flat(x) {
                    out.push_str(&format!("{pad}- {}\n", scalar_text(x)));
                } else {
                    out.push_str(&format!("{pad}-\n"));
                    text_lines(x, indent + 1, out);
                }
            }
        }
        _ => out.push_str(&format!("{pad}{}\n", scalar_text(v))),
    }
}

fn is_flat(v: &Value) -> bool {
    match v {
        Value::Object(m) => m.is_empty(),
        Value::Array(a) => a.iter().all(|x| !matches!(x, Value::Object(_) | Value::Array(_))),
        _ => true,
    }
}

fn scalar_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        Value::Array(a) => format!("[{}]", a.iter().map(scalar_text).collect::<Vec<_>>().join(", ")),
        other => other.to_string(),
    }
}

fn dispatch(cmd: &Command, cfg: &RunConfig) -> Result<Output> {
    match cmd {
        Command::Ce(c) => run_ce(c, cfg),
        Command::Verify(VerifyCmd::Identities { algebra, field }) => {
            let tag = Tag::parse(algebra)?;
            let rep = with_field!(parse_field(&field.field)?, |rf| quantum::verify_identities(tag, &rf))?;
            Output::new(&rep)
        }
        Command::A1(c) => run_a1(c),
        Command::Spec(c) => run_spec(c, cfg),
        Command::Aut(c) => run_aut(c),
    }
}

fn options(cfg: &RunConfig, budget: Option<u64>) -> Result<SearchOptions> {
    let mut o = cfg.search_options();
    if let Some(b) = budget {
        if b == 0 {
            return Err(Error::Usage("--search-budget must be positive".into()));
        }
        o.budget = b;
    }
    Ok(o)
}

fn fmt_matrix<R: Ring>(r: &R, m: &Matrix<R::Elem>) -> Vec<Vec<String>> {
    m.to_rows().iter().map(|row| row.iter().map(|c| r.format(c)).collect()).collect()
}

fn elem<F: Field>(rf: &RootedField<F>, s: &str) -> Result<F::Elem> {
    rf.field.parse_elem(s)
}

fn run_ce(cmd: &CeCmd, cfg: &RunConfig) -> Result<Output> {
    match cmd {
        CeCmd::NormImage { field, s, bound } => with_field!(parse_field(&field.field)?, |rf| {
            let ring = ExtRing::new(rf.clone(), elem(&rf, s)?);
            let img = ring.norm_image(*bound)?;
            let f = &rf.field;
            Output::new(&json!({
                "ring": format!("E({s}) over {}", rf.describe()),
                "is_field": ring.is_field(),
                "image": img.iter().map(|c| f.format(c)).collect::<Vec<_>>(),
                "size": img.len(),
            }))
        }),
        CeCmd::Classify(a) | CeCmd::Module(a) | CeCmd::DivisionBasis(a) | CeCmd::TensorFactor(a) => {
            let opts = options(cfg, a.search_budget)?;
            with_field!(parse_field(&a.field.field)?, |rf| {
                let spec = CESpec::new(rf.clone(), elem(&rf, &a.s)?, elem(&rf, &a.a)?);
                ce_command(cmd, &spec, &opts)
            })
        }
    }
}

fn ce_command<F: Field>(cmd: &CeCmd, spec: &CESpec<F>, opts: &SearchOptions) -> Result<Output> {
    let f = spec.field();
    match cmd {
        CeCmd::Classify(_) => {
            let st = ce::ce_classify(spec, opts)?;
            let mut out = Output::new(&st.report())?;
            out.unknown = st.verdict == Verdict::Unknown;
            Ok(out)
        }
        CeCmd::Module(_) => {
            let m = ce::ce_simple_module(spec, opts)?;
            let ring = spec.ext_ring();
            Output::new(&json!({
                "spec": spec.describe(),
                "d": m.d,
                "dim": m.h_action.rows,
                "x_matrix": fmt_matrix(&ring, &m.x_matrix),
                "h_action": fmt_matrix(f, &m.h_action),
                "x_action": fmt_matrix(f, &m.x_action),
            }))
        }
        CeCmd::DivisionBasis(_) => {
            let st = ce::ce_classify(spec, opts)?;
            if !st.simple {
                return Err(Error::HypothesisFailed("the algebra is not simple".into()));
            }
            let (Some(reduced), Some(x)) = (st.reduced.as_ref(), st.module_matrix()) else {
                return Ok(Output {
                    unknown: true,
                    ..Output::new(&json!({ "spec": spec.describe(), "verdict": "Unknown", "index": st.d }))?
                });
            };
            let ring = reduced.ext_ring();
            let basis = ce::ce_division_basis(&ring, x)?;
            let alg = ce::division_algebra(&ring, &basis)?;
            Output::new(&json!({
                "spec": spec.describe(),
                "reduced": reduced.describe(),
                "index": st.d,
                "matrix_size": st.m,
                "dim": alg.dim(),
                "basis": basis.iter().map(|b| fmt_matrix(&ring, b)).collect::<Vec<_>>(),
            }))
        }
        CeCmd::TensorFactor(_) => {
            let factors = ce::ce_tensor_factor(spec)?;
            let check = ce::verify_tensor_factors(spec, &factors)?;
            Output::new(&json!({
                "spec": spec.describe(),
                "factors": factors.iter().map(|t| json!({
                    "prime": t.prime,
                    "degree": t.degree,
                    "generators": [format!("h^{}", t.cofactor), format!("x^{}", t.cofactor)],
                    "spec": t.spec.describe(),
                })).collect::<Vec<_>>(),
                "factor_dims": check.factor_dims,
                "product": check.product,
            }))
        }
        CeCmd::NormImage { .. } => unreachable!("handled by run_ce"),
    }
}

fn run_a1(cmd: &A1Cmd) -> Result<Output> {
    match cmd {
        A1Cmd::Factor { field, ideal, poly, r0, t0 } => with_field!(parse_field(&field.field)?, |rf| {
            let var = match ideal.as_str() {
                "rf" => "t",
                "tg" => "r",
                _ => "x",
            };
            let p = |need: bool| -> Result<Vec<_>> {
                match poly {
                    Some(s) => poly::parse_poly(&rf.field, s, var),
                    None if need => Err(Error::Usage(format!("--poly is required for --ideal {ideal}"))),
                    None => Ok(Vec::new()),
                }
            };
            let coord = |v: &Option<String>, name: &str| -> Result<_> {
                let s = v.as_ref().ok_or_else(|| Error::Usage(format!("--{name} is required for --ideal maximal")))?;
                elem(&rf, s)
            };
            let fi = match ideal.as_str() {
                "tr" => FactorIdeal::TR,
                "rf" => FactorIdeal::RF(p(true)?),
                "tg" => FactorIdeal::TG(p(true)?),
                "hf" => FactorIdeal::HF(p(true)?),
                "maximal" => FactorIdeal::Maximal { r0: coord(r0, "r0")?, t0: coord(t0, "t0")? },
                other => {
                    return Err(Error::Usage(format!(
                        "unknown ideal '{other}' (expected tr, rf, tg, hf or maximal)"
                    )))
                }
            };
            let fa = quantum::factor_algebra(&rf, &fi)?;
            let a = &fa.algebra;
            Output::new(&json!({
                "ideal": fa.ideal,
                "field": rf.describe(),
                "dim": a.dim(),
                "centre_dim": a.centre().len(),
                "simple": a.is_simple()?,
                "relations_hold": fa.relations_hold(&rf)?,
            }))
        }),
        A1Cmd::ModuleL { field } => with_field!(parse_field(&field.field)?, |rf| {
            let l = quantum::module_l(&rf)?;
            let f = &rf.field;
            Output::new(&json!({
                "field": rf.describe(),
                "h": fmt_matrix(f, &l.h),
                "x": fmt_matrix(f, &l.x),
                "y": fmt_matrix(f, &l.y),
                "checks": l.checks,
                "passed": l.checks.passed(),
            }))
        }),
        A1Cmd::Basis { field, modulo, degree_bound } => {
            let which = match modulo.as_str() {
                "r" => ModGenerator::R,
                "t" => ModGenerator::T,
                other => return Err(Error::Usage(format!("--mod expects r or t, found '{other}'"))),
            };
            let rep = with_field!(parse_field(&field.field)?, |rf| quantum::basis_of_a1_mod(&rf, which, *degree_bound))?;
            Output::new(&rep)
        }
    }
}

fn report_unknown(rep: &SpectrumReport) -> bool {
    rep.primes.iter().any(|p| {
        p.completely_prime == CompletelyPrime::Unknown
            || matches!(&p.quotient, Quotient::CEAlgebra { structure, .. } if structure.verdict == Verdict::Unknown)
    })
}

fn parse_point(tag: Tag, s: &str) -> Result<[&str; 2]> {
    let names = spectrum::coordinate_names(tag);
    let mut vals: [Option<&str>; 2] = [None, None];
    for part in s.split(',') {
        let (k, v) = part
            .split_once('=')
            .ok_or_else(|| Error::Usage(format!("--point expects {}=..,{}=.., found '{part}'", names[0], names[1])))?;
        let idx = names
            .iter()
            .position(|n| *n == k.trim())
            .ok_or_else(|| Error::Usage(format!("unknown coordinate '{}' (expected {} and {})", k.trim(), names[0], names[1])))?;
        vals[idx] = Some(v.trim());
    }
    match vals {
        [Some(u), Some(v)] => Ok([u, v]),
        _ => Err(Error::Usage(format!("--point needs both {} and {}", names[0], names[1]))),
    }
}

fn classify_over<F: Field>(
    args: &SpecClassifyArgs,
    tag: Tag,
    rf: RootedField<F>,
    e: usize,
    opts: &SearchOptions,
) -> Result<SpectrumReport> {
    let prime = if let Some(pt) = &args.point {
        let [u, v] = parse_point(tag, pt)?;
        CentrePrime::point(tag, rf.clone(), elem(&rf, u)?, elem(&rf, v)?, e)
    } else if args.zero {
        CentrePrime::zero(tag, rf)
    } else if let Some(n) = &args.named {
        CentrePrime::height1(tag, rf, Height1::Named(n.clone()))
    } else if let Some(p) = &args.poly {
        let (var, body) = p
            .split_once(':')
            .ok_or_else(|| Error::Usage(format!("--poly expects <var>:<poly>, found '{p}'")))?;
        let var = var.trim().to_string();
        let poly = poly::parse_poly(&rf.field, body, &var)?;
        CentrePrime::height1(tag, rf, Height1::Univariate { var, poly })
    } else if let Some(a) = &args.asserted {
        CentrePrime::height1(tag, rf, Height1::Asserted(a.clone()))
    } else {
        return Err(Error::Usage("give --point, --zero, --named, --poly or --asserted".into()));
    };
    spectrum::classify_prime(&prime, opts)
}

fn run_spec(cmd: &SpecCmd, cfg: &RunConfig) -> Result<Output> {
    let opts = cfg.search_options();
    match cmd {
        SpecCmd::Classify(args) => {
            let tag = Tag::parse(&args.algebra)?;
            let any = parse_field(&args.field.field)?;
            let rep = match (&args.ext, any) {
                (None, any) => with_field!(any, |rf| classify_over(args, tag, rf, 1, &opts))?,
                (Some(_), _) if args.point.is_none() => {
                    return Err(Error::Usage("--ext only applies to --point".into()));
                }
                (Some(m), AnyField::Prime(rf)) => {
                    let g = poly::parse_poly(&rf.field, m, "z")?;
                    let k = poly::degree(&g).ok_or(Error::ZeroInput)?;
                    let coeffs: Vec<i64> = g.iter().map(|&c| c as i64).collect();
                    let fq = Fq::new(rf.field.p(), &coeffs)?;
                    let q = fq.embed(rf.q);
                    let rq = RootedField::new(fq, rf.n, q)?;
                    classify_over(args, tag, rq, k, &opts)?
                }
                (Some(_), _) => return Err(Error::Usage("--ext needs a prime base field".into())),
            };
            let unknown = report_unknown(&rep);
            Ok(Output { unknown, ..Output::new(&rep)? })
        }
        SpecCmd::Atlas { algebra, field, max_ext_degree, max_points } => {
            let tag = Tag::parse(algebra)?;
            let AnyField::Prime(rf) = parse_field(&field.field)? else {
                return Err(Error::UnsupportedField("the atlas enumerates points over a prime field".into()));
            };
            let e = max_ext_degree.unwrap_or(cfg.atlas_ext_degree);
            if e == 0 {
                return Err(Error::Usage("--max-ext-degree must be positive".into()));
            }
            let atlas = spectrum::enumerate_spectrum(tag, &rf, e, *max_points, &opts)?;
            let unknown = atlas.reports.iter().any(report_unknown);
            Ok(Output { dot: Some(atlas.dot()), unknown, ..Output::new(&atlas)? })
        }
    }
}

fn parse_matrix(s: &str) -> Result<[[i64; 2]; 2]> {
    let v: Vec<i64> = s
        .split(',')
        .map(|x| x.trim().parse().map_err(|_| Error::Usage(format!("bad matrix entry '{x}'"))))
        .collect::<Result<_>>()?;
    match v[..] {
        [a, b, c, d] => Ok([[a, b], [c, d]]),
        _ => Err(Error::Usage(format!("--matrix expects four entries a,b,c,d, found {}", v.len()))),
    }
}

fn aut_check<F: Field>(p: &AutParams, tag: Tag, rf: RootedField<F>) -> Result<Output> {
    let g = Gwa::new(tag, rf.clone())?;
    let lambda = elem(&rf, &p.lambda)?;
    let mu = match &p.mu {
        Some(_) if tag == Tag::Weyl => return Err(Error::Usage("A1 automorphisms take only --lambda".into())),
        Some(s) => elem(&rf, s)?,
        None => rf.field.one(),
    };
    let swap_ok = matches!(tag, Tag::Plane | Tag::Weyl);
    if (p.swap && !swap_ok) || ((p.invert || p.i != 0) && tag != Tag::LaurentX) {
        return Err(Error::Usage(format!("parameter not available for {}", tag.name())));
    }
    if p.matrix.is_some() != (tag == Tag::Torus) {
        return Err(Error::Usage("--matrix is required for B and only accepted there".into()));
    }
    let rep = match tag {
        Tag::Plane => AutoRep::Plane { lambda, mu, swap: p.swap },
        Tag::Weyl => AutoRep::Weyl { lambda, swap: p.swap },
        Tag::LaurentX => AutoRep::Laurent { lambda, i: p.i, mu, invert: p.invert },
        Tag::Torus => {
            let a = parse_matrix(p.matrix.as_deref().unwrap_or_default())?;
            let check = aut::torus_check(&g, a, &lambda, &mu)?;
            let built = Automorphism::new(&g, AutoRep::Torus { a, lambda, mu });
            return Output::new(&json!({
                "algebra": tag.name(),
                "field": rf.describe(),
                "valid": check.automorphism,
                "check": check,
                "automorphism": built.as_ref().ok().map(|a| a.report()),
                "reason": built.err().map(|e| e.to_string()),
            }));
        }
    };
    match Automorphism::new(&g, rep) {
        Ok(a) => Output::new(&json!({
            "algebra": tag.name(),
            "field": rf.describe(),
            "valid": true,
            "automorphism": a.report(),
        })),
        Err(e @ (Error::RelationViolated(_) | Error::HypothesisFailed(_))) => Output::new(&json!({
            "algebra": tag.name(),
            "field": rf.describe(),
            "valid": false,
            "reason": e.to_string(),
        })),
        Err(e) => Err(e),
    }
}

fn aut_recognize<F: Field>(tag: Tag, rf: RootedField<F>, images: &str) -> Result<Output> {
    let g = Gwa::new(tag, rf.clone())?;
    let names = if tag.has_y() { ["x", "y"] } else { ["h", "x"] };
    let mut found: [Option<_>; 2] = [None, None];
    for part in images.split(';').filter(|s| !s.trim().is_empty()) {
        let (k, v) = part
            .split_once('=')
            .ok_or_else(|| Error::Usage(format!("--images expects {}=..;{}=.., found '{part}'", names[0], names[1])))?;
        let idx = names
            .iter()
            .position(|n| *n == k.trim())
            .ok_or_else(|| Error::Usage(format!("unknown generator '{}'", k.trim())))?;
        found[idx] = Some(g.parse(v)?);
    }
    let [Some(a), Some(b)] = found else {
        return Err(Error::Usage(format!("--images needs both {} and {}", names[0], names[1])));
    };
    let rec = aut::recognize(&g, &a, &b);
    Output::new(&json!({
        "algebra": tag.name(),
        "field": rf.describe(),
        "images": [g.format_elem(&a), g.format_elem(&b)],
        "recognized": rec.as_ref().map(|a| a.report()),
    }))
}

fn run_aut(cmd: &AutCmd) -> Result<Output> {
    match cmd {
        AutCmd::Check(p) => {
            let tag = Tag::parse(&p.algebra)?;
            with_field!(parse_field(&p.field.field)?, |rf| aut_check(p, tag, rf))
        }
        AutCmd::Recognize { algebra, field, images } => {
            let tag = Tag::parse(algebra)?;
            with_field!(parse_field(&field.field)?, |rf| aut_recognize(tag, rf, images))
        }
    }
}
