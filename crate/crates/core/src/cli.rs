//! Command-line front end. `run` is the whole program; the binary only
//! forwards its arguments and exit code.

use std::collections::BTreeSet;
use std::ffi::OsString;
use std::io::Write;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::algebra::{
    ideal_from_generators, loewy_length, nilpotency_index, parse_algebra, radical, BoundQuiverAlgebra,
};
use crate::endo::{derdim_estimate, endo_algebra, quiver_presentation, Registry};
use crate::error::{Error, Result};
use crate::rep::{decompose, parse_module_expr, parse_modules, ModuleLibrary, Rep};
use crate::report::{bound_report, tilting_proxy_check, EndoSummary};
use crate::rng;
use crate::tau::{
    classify_pair, enumerate_stt, is_tau_rigid, tau, validate_stt_pair, Labeler, SttPair, DEFAULT_MAX_NODES,
};

pub const SEED_ENV: &str = "TAUBOUND_SEED";

#[derive(Parser, Debug)]
#[command(
    name = "taubound",
    version,
    about = "Support τ-tilting pairs and derived dimension bounds"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check an algebra description, or a pair when --module is given.
    Validate(Common),
    /// The AR translate of a module.
    Tau(Common),
    /// Whether Hom(M, τM) = 0.
    Rigid(Common),
    /// The support τ-tilting exchange graph.
    Enumerate(Common),
    /// Classify a pair, or every node of the exchange graph.
    Classify(Common),
    /// Quiver presentation of End(M).
    Endo(Common),
    /// The annihilator of a module and its nilpotency index.
    Annihilator(Common),
    /// Loewy length of the algebra.
    Loewy(Common),
    /// The derived dimension bound for a pair.
    Report(Common),
    /// The tilting check over A/ann M for a pair.
    Proxy(Common),
}

#[derive(Args, Debug)]
struct Common {
    /// Algebra description file.
    #[arg(long)]
    algebra: String,
    /// Module expression such as "P(1)+S(1)" or a name from --modules.
    #[arg(long)]
    module: Option<String>,
    /// Module description file.
    #[arg(long)]
    modules: Option<String>,
    /// Vertex labels of the support part, comma separated.
    #[arg(long, default_value = "")]
    support: String,
    /// Registry of known derived dimensions.
    #[arg(long)]
    registry: Option<String>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, default_value_t = DEFAULT_MAX_NODES)]
    max_nodes: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

struct Context {
    algebra: Arc<BoundQuiverAlgebra>,
    library: ModuleLibrary,
    opts: Common,
}

fn read(path: &str) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io(format!("load: read {path}: {e}")))
}

impl Context {
    fn load(opts: Common) -> Result<Context> {
        let algebra = Arc::new(parse_algebra(&read(&opts.algebra)?)?);
        let library = match &opts.modules {
            Some(path) => parse_modules(&read(path)?, std::slice::from_ref(&algebra))?,
            None => ModuleLibrary::default(),
        };
        Ok(Context { algebra, library, opts })
    }

    fn module(&self, op: &'static str) -> Result<Rep> {
        let expr = self
            .opts
            .module
            .as_deref()
            .ok_or_else(|| Error::invalid(op, "--module is required"))?;
        parse_module_expr(expr, &self.algebra, &self.library)
    }

    fn support(&self) -> Result<BTreeSet<usize>> {
        let q = self.algebra.quiver();
        self.opts
            .support
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|s| !s.is_empty())
            .map(|l| {
                q.vertex_index(l).ok_or_else(|| Error::UnknownVertex {
                    op: "support",
                    label: l.to_string(),
                })
            })
            .collect()
    }

    fn registry(&self) -> Result<Registry> {
        match &self.opts.registry {
            Some(path) => Registry::parse(&read(path)?),
            None => Ok(Registry::default()),
        }
    }

    fn label(&self, m: &Rep) -> Result<String> {
        let mut labeler = Labeler::new(&self.algebra);
        let mut labels = decompose(m)?
            .summands
            .iter()
            .map(|s| labeler.label(&s.module))
            .collect::<Result<Vec<_>>>()?;
        labels.sort();
        Ok(crate::tau::node_name(&labels))
    }
}

fn emit(format: Format, op: &'static str, text: String, value: impl FnOnce() -> Value) -> Result<String> {
    match format {
        Format::Text => Ok(text),
        Format::Json => Ok(serde_json::to_string_pretty(&value()).expect("json") + "\n"),
        Format::Dot => Err(Error::invalid(op, "dot output is only available for enumerate")),
    }
}

fn dims_text(m: &Rep) -> String {
    let d: Vec<String> = m.dims().iter().map(usize::to_string).collect();
    format!("({})", d.join(","))
}

fn validate(ctx: &Context) -> Result<String> {
    let a = &ctx.algebra;
    if ctx.opts.module.is_none() {
        a.check_invariants()?;
        let text = format!(
            "algebra {}: dimension {}, {} vertices, {} arrows\n",
            a.name(),
            a.dim(),
            a.vertex_count(),
            a.quiver().arrows().len()
        );
        return emit(ctx.opts.format, "validate", text, || a.to_json());
    }
    let m = ctx.module("validate")?;
    let v = validate_stt_pair(&m, &ctx.support()?)?;
    let mut text = format!("{}\n", v.status);
    if let Some(d) = &v.diagnostic {
        text.push_str(&format!("{d}\n"));
    }
    emit(ctx.opts.format, "validate", text, || json!(v))
}

fn tau_cmd(ctx: &Context) -> Result<String> {
    let m = ctx.module("tau")?;
    let t = tau(&m);
    let label = ctx.label(&t)?;
    let text = format!("τM ≅ {label}\ndims {}\n{}", dims_text(&t), t.to_text("tauM"));
    emit(
        ctx.opts.format,
        "tau",
        text,
        || json!({ "label": label, "module": t.to_json() }),
    )
}

fn rigid(ctx: &Context) -> Result<String> {
    let m = ctx.module("rigid")?;
    let r = is_tau_rigid(&m);
    emit(
        ctx.opts.format,
        "rigid",
        format!("tau-rigid: {r}\n"),
        || json!({ "tau_rigid": r }),
    )
}

fn enumerate(ctx: &Context) -> Result<String> {
    let g = enumerate_stt(&ctx.algebra, ctx.opts.max_nodes)?;
    Ok(match ctx.opts.format {
        Format::Text => g.to_text(),
        Format::Json => serde_json::to_string_pretty(&g.to_json()).expect("json") + "\n",
        Format::Dot => g.to_dot(),
    })
}

fn classify(ctx: &Context) -> Result<String> {
    let a = &ctx.algebra;
    if ctx.opts.module.is_none() {
        let g = enumerate_stt(a, ctx.opts.max_nodes)?;
        let text: String = g.nodes.iter().map(|n| format!("{}  {}\n", n.name, n.class)).collect();
        let value = || {
            Value::Array(
                g.nodes
                    .iter()
                    .map(|n| json!({ "name": n.name, "class": n.class }))
                    .collect(),
            )
        };
        return emit(ctx.opts.format, "classify", text, value);
    }
    let m = ctx.module("classify")?;
    let support = ctx.support()?;
    let v = validate_stt_pair(&m, &support)?;
    if let Some(d) = v.diagnostic {
        return Err(Error::invalid("classify", format!("{}: {d}", v.status)));
    }
    let pair = SttPair {
        module: decompose(&m)?.summands.into_iter().map(|s| s.module).collect(),
        support,
    };
    let class = classify_pair(a, &pair);
    emit(
        ctx.opts.format,
        "classify",
        format!("{class}\n"),
        || json!({ "class": class }),
    )
}

fn endo(ctx: &Context) -> Result<String> {
    let m = ctx.module("endo")?;
    let summands: Vec<Rep> = decompose(&m)?.summands.into_iter().map(|s| s.module).collect();
    let name = format!("End({})", ctx.label(&m)?);
    let b = Arc::new(quiver_presentation(&endo_algebra(&summands, name)?)?);
    let summary = EndoSummary::of(&b)?;
    let estimate = if b.is_zero() {
        None
    } else {
        Some(derdim_estimate(&b, &ctx.registry()?)?)
    };
    let mut text = format!("{}: dimension {}, {} vertices\n", b.name(), b.dim(), b.vertex_count());
    for arr in &summary.algebra.arrows {
        text.push_str(&format!("arrow {arr}\n"));
    }
    for rel in &summary.algebra.relations {
        text.push_str(&format!("relation {rel}\n"));
    }
    text.push_str(&format!("hereditary: {}\n", summary.hereditary));
    text.push_str(&format!(
        "dynkin: {}\n",
        summary.dynkin.as_deref().unwrap_or("not-Dynkin")
    ));
    if let Some(e) = &estimate {
        text.push_str(&format!("der.dim: {e}\n"));
    }
    emit(
        ctx.opts.format,
        "endo",
        text,
        || json!({ "endomorphism": summary, "derdim": estimate }),
    )
}

fn annihilator(ctx: &Context) -> Result<String> {
    let a = &ctx.algebra;
    let m = ctx.module("annihilator")?;
    let ideal = ideal_from_generators(a, &m.annihilator());
    let r = nilpotency_index(a, &ideal).ok();
    let mut text = format!("dim {}\n", ideal.dim());
    for x in ideal.basis() {
        text.push_str(&format!("  {}\n", a.element_display(x)));
    }
    match r {
        Some(r) => text.push_str(&format!("nilpotency index {r}\n")),
        None => text.push_str("not nilpotent\n"),
    }
    emit(
        ctx.opts.format,
        "annihilator",
        text,
        || json!({ "dim": ideal.dim(), "ideal": ideal.to_json(a), "nilpotency_index": r }),
    )
}

fn loewy(ctx: &Context) -> Result<String> {
    let a = &ctx.algebra;
    let ll = loewy_length(a)?;
    let rad = radical(a).dim();
    emit(
        ctx.opts.format,
        "loewy",
        format!("loewy length {ll}\ndim rad {rad}\n"),
        || json!({ "loewy_length": ll, "radical_dim": rad }),
    )
}

fn report(ctx: &Context) -> Result<String> {
    let m = ctx.module("report")?;
    let r = bound_report(&m, &ctx.support()?, &ctx.registry()?)?;
    match ctx.opts.format {
        Format::Json => Ok(r.to_json()),
        _ => emit(ctx.opts.format, "report", r.to_text(), Value::default),
    }
}

fn proxy(ctx: &Context) -> Result<String> {
    let m = ctx.module("proxy")?;
    let r = tilting_proxy_check(&m, &ctx.support()?)?;
    match ctx.opts.format {
        Format::Json => Ok(r.to_json()),
        _ => emit(ctx.opts.format, "proxy", r.to_text(), Value::default),
    }
}

fn execute(command: Command) -> Result<String> {
    let (opts, f): (Common, fn(&Context) -> Result<String>) = match command {
        Command::Validate(o) => (o, validate),
        Command::Tau(o) => (o, tau_cmd),
        Command::Rigid(o) => (o, rigid),
        Command::Enumerate(o) => (o, enumerate),
        Command::Classify(o) => (o, classify),
        Command::Endo(o) => (o, endo),
        Command::Annihilator(o) => (o, annihilator),
        Command::Loewy(o) => (o, loewy),
        Command::Report(o) => (o, report),
        Command::Proxy(o) => (o, proxy),
    };
    let seed = match opts.seed {
        Some(s) => s,
        None => match std::env::var(SEED_ENV) {
            Ok(s) => s
                .trim()
                .parse()
                .map_err(|_| Error::invalid("seed", format!("{SEED_ENV} is not an integer: {s}")))?,
            Err(_) => rng::DEFAULT_SEED,
        },
    };
    rng::set_seed(seed);
    f(&Context::load(opts)?)
}

/// Runs one invocation. Exit code 0 on success, 2 on input errors, 3 on
/// certification failures.
pub fn run<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let target: &mut dyn Write = if code == 0 { out } else { err };
            let _ = write!(target, "{e}");
            return code;
        }
    };
    match execute(cli.command) {
        Ok(text) => {
            let _ = out.write_all(text.as_bytes());
            0
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if e.is_certification_failure() {
                3
            } else {
                2
            }
        }
    }
}
