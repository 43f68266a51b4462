//! Command-line front end for `skewcyclic`: argument handling, command
//! execution and the bundled example corpus.

pub mod fixtures;
pub mod text;
pub mod value;

use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;
use skewcyclic::circulant::{classical_circulant, p_sigma, sigma_circulant};
use skewcyclic::codes::{
    classify, code_from_generator, control_polynomial, dual_code, free_distance_with_bound, heller_bound,
    heller_imax, minimal_generator_matrix, ConvCode, DEFAULT_STATE_BOUND,
};
use skewcyclic::linalg::rank;
use skewcyclic::ring::{Automorphism, RingContext, RingElement};
use skewcyclic::skew::{principal_generator, SkewContext, SkewPoly};
use skewcyclic::{Fe, Gf};

pub use text::{parse_poly, parse_ring_element, print_poly, ParseError};
use value::Val;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Core(#[from] skewcyclic::Error),
    #[error("{0}")]
    FixtureMismatch(String),
}

impl CliError {
    pub fn name(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "UsageError",
            CliError::Parse(_) => "ParseError",
            CliError::Core(e) => e.name(),
            CliError::FixtureMismatch(_) => "FixtureMismatch",
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Parse(_) => 2,
            CliError::Core(_) | CliError::FixtureMismatch(_) => 1,
        }
    }
}

#[derive(Parser, Debug, Clone)]
#[command(name = "skewcyclic", version, about = "Skew-cyclic convolutional codes over finite fields")]
pub struct Cli {
    /// Print canonical JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub cmd: Cmd,
}

#[derive(Args, Debug, Clone)]
pub struct RingArgs {
    /// Characteristic of the field.
    #[arg(long, default_value_t = 2)]
    pub p: u32,
    /// Extension degree of the field.
    #[arg(long, default_value_t = 1)]
    pub m: u32,
    /// Field modulus, coefficients low to high, comma separated.
    #[arg(long, value_delimiter = ',')]
    pub modulus: Option<Vec<u32>>,
    /// Length n; the ring is F[x]/(x^n - 1).
    #[arg(long)]
    pub n: usize,
    /// σ(x), as text in x or as comma-separated encodings.
    #[arg(long, default_value = "x")]
    pub sigma: String,
}

#[derive(Args, Debug, Clone)]
pub struct PolyArgs {
    #[command(flatten)]
    pub ring: RingArgs,
    /// Generator polynomial; repeat for a family.
    #[arg(long = "poly", required = true)]
    pub polys: Vec<String>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum CirculantKind {
    /// M^σ(g)
    Sigma,
    /// M_g for g in A
    Classical,
    /// the permutation-like matrix P_σ
    PSigma,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Cmd {
    /// List all automorphisms of A by σ(x).
    Autos(RingArgs),
    /// Reduce a family and find the generator of its left ideal.
    Reduce(PolyArgs),
    /// Full code report for the ideal generated by the polynomials.
    Generator {
        #[command(flatten)]
        args: PolyArgs,
        /// Largest encoder state space searched for the free distance.
        #[arg(long, default_value_t = DEFAULT_STATE_BOUND as u64)]
        state_bound: u64,
    },
    /// Print M^σ(g), M_g or P_σ.
    Circulant {
        #[command(flatten)]
        ring: RingArgs,
        #[arg(long)]
        poly: Option<String>,
        #[arg(long, value_enum, default_value_t = CirculantKind::Sigma)]
        kind: CirculantKind,
    },
    /// Control polynomial and dual generator.
    Control(PolyArgs),
    /// Report for the dual code.
    Dual {
        #[command(flatten)]
        args: PolyArgs,
        #[arg(long, default_value_t = DEFAULT_STATE_BOUND as u64)]
        state_bound: u64,
    },
    /// Free distance of the code.
    Distance {
        #[command(flatten)]
        args: PolyArgs,
        #[arg(long, default_value_t = DEFAULT_STATE_BOUND as u64)]
        state_bound: u64,
    },
    /// Heller upper bound on the free distance.
    Heller {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        k: u64,
        #[arg(long)]
        delta: u64,
        #[arg(long)]
        mem: u64,
        #[arg(long)]
        q: u64,
        /// Horizon; defaults to SKEWCYCLIC_IMAX or 20.
        #[arg(long)]
        imax: Option<u32>,
    },
    /// Block-code classification.
    Classify(PolyArgs),
    /// The bundled example corpus.
    Examples {
        #[command(subcommand)]
        action: ExamplesCmd,
    },
}

#[derive(Subcommand, Debug, Clone)]
pub enum ExamplesCmd {
    /// List fixture ids.
    List,
    /// Replay fixtures: an id, an id prefix, or `all`.
    Run {
        #[arg(default_value = "all")]
        id: String,
    },
}

/// Exit code, stdout and stderr of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Runs the command line `args` (without the program name).
pub fn run<I, S>(args: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let argv = std::iter::once(std::ffi::OsString::from("skewcyclic")).chain(args.into_iter().map(Into::into));
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    match execute(&cli.cmd) {
        Ok((val, failure)) => {
            let stdout = match &cli.cmd {
                Cmd::Examples { action: ExamplesCmd::Run { .. } } if !cli.json => fixtures::summary_text(&val),
                _ => render(&val, cli.json),
            };
            match failure {
                None => Outcome { code: 0, stdout, stderr: String::new() },
                Some(e) => Outcome { code: e.exit_code(), stdout, stderr: error_json(&e) },
            }
        }
        Err(e) => Outcome { code: e.exit_code(), stdout: String::new(), stderr: error_json(&e) },
    }
}

pub fn render(val: &Val, as_json: bool) -> String {
    if as_json {
        let mut s = serde_json::to_string_pretty(&val.to_json()).expect("serializable");
        s.push('\n');
        s
    } else {
        val.to_text()
    }
}

fn error_json(e: &CliError) -> String {
    format!("{}\n", json!({ "error": e.name(), "message": e.to_string() }))
}

pub fn build_ring(a: &RingArgs) -> Result<Arc<RingContext>, CliError> {
    let f = Gf::new(a.p, a.m, a.modulus.as_deref())?;
    Ok(RingContext::new(Arc::new(f), a.n)?)
}

fn parse_sigma(text: &str, ring: &Arc<RingContext>) -> Result<RingElement, CliError> {
    let t = text.trim();
    if t.contains(',') {
        let encs: Vec<u32> = t
            .split(',')
            .map(|s| s.trim().parse().map_err(|_| CliError::Usage(format!("bad encoding {s:?} in --sigma"))))
            .collect::<Result<_, _>>()?;
        let f = ring.field();
        let coeffs = encs
            .iter()
            .map(|&e| f.from_enc(e).ok_or_else(|| CliError::Usage(format!("{e} is not an element of GF({})", f.q()))))
            .collect::<Result<Vec<Fe>, _>>()?;
        return Ok(ring.element(coeffs)?);
    }
    Ok(parse_ring_element(t, ring)?)
}

pub fn build_context(a: &RingArgs) -> Result<Arc<SkewContext>, CliError> {
    let ring = build_ring(a)?;
    let image = parse_sigma(&a.sigma, &ring)?;
    let sigma = Automorphism::from_image(&ring, image)?;
    Ok(SkewContext::new(&ring, sigma)?)
}

fn parse_family(args: &PolyArgs) -> Result<(Arc<SkewContext>, Vec<SkewPoly>), CliError> {
    let ctx = build_context(&args.ring)?;
    let fs = args.polys.iter().map(|t| parse_poly(t, &ctx)).collect::<Result<_, _>>()?;
    Ok((ctx, fs))
}

fn ring_val(a: &RingElement, ring: &RingContext) -> Val {
    Val::Ring(a.clone(), ring.field_arc().clone())
}

/// Per-component residues of each z-coefficient.
fn crt_val(g: &SkewPoly) -> Val {
    let ring = g.ring();
    Val::List(
        g.coeffs()
            .iter()
            .map(|c| Val::List(ring.crt_forward(c).into_iter().map(|p| Val::FieldPoly(p, ring.field_arc().clone())).collect()))
            .collect(),
    )
}

fn autos(args: &RingArgs) -> Result<Val, CliError> {
    let ring = build_ring(args)?;
    let list = Automorphism::enumerate(&ring);
    let items = list
        .iter()
        .map(|s| {
            Val::obj(vec![
                ("image", ring_val(s.image_of_x(), &ring)),
                ("order", Val::Int(s.order() as u64)),
                ("component_permutation", Val::List(s.perm().iter().map(|&k| Val::Int(k as u64 + 1)).collect())),
                ("fixes_all_components", Val::Bool(s.fixes_all_components())),
                ("sigma_hat", ring_val(s.sigma_hat().image_of_x(), &ring)),
            ])
        })
        .collect();
    Ok(Val::obj(vec![
        ("n", Val::Int(ring.n() as u64)),
        ("q", Val::Int(ring.field().q() as u64)),
        ("count", Val::Int(list.len() as u64)),
        ("images", Val::List(list.iter().map(|s| ring_val(s.image_of_x(), &ring)).collect())),
        ("automorphisms", Val::List(items)),
    ]))
}

fn factors_val(ring: &RingContext) -> Val {
    Val::List(ring.factors().iter().map(|p| Val::FieldPoly(p.clone(), ring.field_arc().clone())).collect())
}

fn reduce(args: &PolyArgs) -> Result<Val, CliError> {
    let (ctx, fs) = parse_family(args)?;
    let out = principal_generator(&fs)?;
    Ok(Val::obj(vec![
        ("factors", factors_val(ctx.ring())),
        ("reduced_family", Val::List(out.reduced_family.iter().cloned().map(Val::Skew).collect())),
        ("is_principal", Val::Bool(out.is_principal)),
        ("is_delay_free", Val::Bool(out.is_delay_free)),
        ("delay_free_witness", Val::Bool(out.delay_free_witness)),
        ("generator", Val::opt(out.generator.clone().map(Val::Skew))),
        ("generator_crt", Val::opt(out.generator.as_ref().map(crt_val))),
    ]))
}

/// The code report; quantities that need a basic generator matrix are
/// `null` when the module is not a code.
fn report(code: &ConvCode, state_bound: u64) -> Result<Val, CliError> {
    let ring = code.ctx.ring();
    let q = ring.field().q() as u64;
    let mut notes = Vec::new();
    let duality = if code.is_code { Some(control_polynomial(code)?) } else { None };
    let d_free = if code.is_code && code.kappa > 0 {
        match free_distance_with_bound(code, state_bound as u128) {
            Ok(d) => Some(d),
            Err(e) => {
                notes.push(Val::Str(format!("d_free: {}: {e}", e.name())));
                None
            }
        }
    } else {
        None
    };
    let heller = if code.is_code && code.kappa > 0 {
        let (n, k) = (code.n() as u64, code.kappa as u64);
        Some(heller_bound(n, k, code.complexity as u64, code.memory() as u64, q, heller_imax())?)
    } else {
        None
    };
    let pi = (!code.generator.is_zero()).then(|| Val::FieldPoly(code.generator.pi().expect("nonzero"), ring.field_arc().clone()));
    Ok(Val::obj(vec![
        ("n", Val::Int(code.n() as u64)),
        ("q", Val::Int(q)),
        ("sigma", ring_val(code.ctx.sigma().image_of_x(), ring)),
        ("generator", Val::Skew(code.generator.clone())),
        ("pi", Val::opt(pi)),
        ("kappa", Val::Int(code.kappa as u64)),
        ("complexity", Val::Int(code.complexity as u64)),
        ("is_code", Val::Bool(code.is_code)),
        ("generator_matrix", Val::Matrix(code.generator_matrix.clone())),
        ("minimal_generator_matrix", Val::opt(minimal_generator_matrix(code).ok().map(Val::Matrix))),
        ("control_poly", Val::opt(duality.as_ref().map(|d| Val::Skew(d.control_poly.clone())))),
        ("dual_generator", Val::opt(duality.as_ref().map(|d| Val::Skew(d.dual_generator.clone())))),
        ("d_free", Val::opt(d_free.map(Val::Int))),
        ("heller_bound", Val::opt(heller.map(Val::Int))),
        ("is_block", Val::Bool(classify(code).is_block)),
        ("notes", Val::List(notes)),
    ]))
}

fn circulant(ring_args: &RingArgs, poly: Option<&str>, kind: CirculantKind) -> Result<Val, CliError> {
    let ctx = build_context(ring_args)?;
    let ring = ctx.ring();
    let need = || poly.ok_or_else(|| CliError::Usage("--poly is required for this kind".into()));
    Ok(match kind {
        CirculantKind::PSigma => Val::obj(vec![("matrix", Val::Matrix(p_sigma(ctx.sigma())))]),
        CirculantKind::Classical => {
            let g = parse_poly(need()?, &ctx)?;
            if g.deg_z().unwrap_or(0) > 0 {
                return Err(CliError::Usage("classical circulants take an element of A (no z)".into()));
            }
            Val::obj(vec![("matrix", Val::Matrix(classical_circulant(ring, &g.coeff(0))))])
        }
        CirculantKind::Sigma => {
            let g = parse_poly(need()?, &ctx)?;
            let m = sigma_circulant(&g);
            let hat = g.hat();
            Val::obj(vec![
                ("matrix", Val::Matrix(m.clone())),
                ("rank", Val::Int(rank(&m) as u64)),
                ("pi_degree", Val::opt(g.pi().ok().and_then(|p| p.degree()).map(|d| Val::Int(d as u64)))),
                ("hat", Val::Skew(hat.clone())),
                ("sigma_hat", ring_val(hat.ctx().sigma().image_of_x(), ring)),
            ])
        }
    })
}

fn control(args: &PolyArgs) -> Result<Val, CliError> {
    let (ctx, fs) = parse_family(args)?;
    let code = code_from_generator(&ctx, &fs)?;
    let rep = control_polynomial(&code)?;
    let ring = ctx.ring();
    Ok(Val::obj(vec![
        ("sigma", ring_val(ctx.sigma().image_of_x(), ring)),
        ("sigma_hat", ring_val(ctx.sigma().sigma_hat().image_of_x(), ring)),
        ("generator", Val::Skew(code.generator.clone())),
        ("control_poly", Val::Skew(rep.control_poly)),
        ("control_matrix", Val::Matrix(rep.control_matrix)),
        ("dual_generator", Val::Skew(rep.dual_generator)),
        ("dual_control", Val::Skew(rep.dual_control)),
    ]))
}

/// Runs a parsed command. The second element carries a failure that still
/// produced output (a fixture mismatch).
pub fn execute(cmd: &Cmd) -> Result<(Val, Option<CliError>), CliError> {
    let val = match cmd {
        Cmd::Autos(a) => autos(a)?,
        Cmd::Reduce(a) => reduce(a)?,
        Cmd::Generator { args, state_bound } => {
            let (ctx, fs) = parse_family(args)?;
            report(&code_from_generator(&ctx, &fs)?, *state_bound)?
        }
        Cmd::Circulant { ring, poly, kind } => circulant(ring, poly.as_deref(), *kind)?,
        Cmd::Control(a) => control(a)?,
        Cmd::Dual { args, state_bound } => {
            let (ctx, fs) = parse_family(args)?;
            report(&dual_code(&code_from_generator(&ctx, &fs)?)?, *state_bound)?
        }
        Cmd::Distance { args, state_bound } => {
            let (ctx, fs) = parse_family(args)?;
            let code = code_from_generator(&ctx, &fs)?;
            Val::obj(vec![("d_free", Val::Int(free_distance_with_bound(&code, *state_bound as u128)?))])
        }
        Cmd::Heller { n, k, delta, mem, q, imax } => {
            let b = heller_bound(*n, *k, *delta, *mem, *q, imax.unwrap_or_else(heller_imax))?;
            Val::obj(vec![("heller_bound", Val::Int(b))])
        }
        Cmd::Classify(a) => {
            let (ctx, fs) = parse_family(a)?;
            let code = code_from_generator(&ctx, &fs)?;
            let c = classify(&code);
            Val::obj(vec![
                ("complexity", Val::Int(code.complexity as u64)),
                ("is_code", Val::Bool(code.is_code)),
                ("is_block", Val::Bool(c.is_block)),
                ("sigma_forces_block", Val::Bool(c.sigma_forces_block)),
            ])
        }
        Cmd::Examples { action: ExamplesCmd::List } => fixtures::list(),
        Cmd::Examples { action: ExamplesCmd::Run { id } } => return fixtures::run(id),
    };
    Ok((val, None))
}
