//! The `g2kit` command line: `emit`, `verify` and `decompose`.
//!
//! Exit codes: 0 success, 1 a verification failed, 2 bad usage or input.

use std::ffi::OsString;
use std::io::{self, Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use g2kit_core::decomp::{
    membership_14, membership_27, pq_decompose, ComplexTypeDecomposition, G2Projectors, G2Type, Membership, TypeLabel,
};
use g2kit_core::exterior::{Form, Frame};
use g2kit_core::g2forms::{build_split_phi, theta, Convention, KahlerPair, SplitVariant, StructurePackage};
use g2kit_core::scalars::{GaussianRational, Rational};
use g2kit_core::verify::{self, Report, Suite, VerifyOptions};
use serde::Serialize;
use serde_json::{json, Value};

use crate::json::{self, JsonCoeff, JsonError};
use crate::latex::{form_to_latex, LatexCoeff};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "g2kit", version, about = "Exact G2 and Spin(7) forms, decompositions and identity checks")]
pub struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, env = "G2KIT_FORMAT", default_value_t = Format::Text)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Latex,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ConventionArg {
    Cd,
    Opposite,
}

impl From<ConventionArg> for Convention {
    fn from(c: ConventionArg) -> Self {
        match c {
            ConventionArg::Cd => Convention::CdFirst,
            ConventionArg::Opposite => Convention::Opposite,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Object {
    #[value(name = "phi")]
    Phi,
    #[value(name = "psi")]
    Psi,
    /// The Spin(7) 4-form on R8
    #[value(name = "Phi")]
    Spin7,
    Theta,
    Split,
    Omega,
    ReOmega,
    ImOmega,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SplitArg {
    /// vol3 − Σ dx^k ∧ η⁻_k
    Minus,
    /// vol3 + Σ dx^k ∧ η⁺_k
    Plus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    G2,
    Spin7,
    Cy3,
    Diffops,
    All,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Self {
        match s {
            SuiteArg::G2 => Suite::G2,
            SuiteArg::Spin7 => Suite::Spin7,
            SuiteArg::Cy3 => Suite::Cy3,
            SuiteArg::Diffops => Suite::Diffops,
            SuiteArg::All => Suite::All,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Into_ {
    G2,
    Pq,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print a structure form
    Emit(EmitArgs),
    /// Run verification suites; exit 1 if any check fails
    Verify(VerifyArgs),
    /// Split a form into G2 types (degrees 2 to 5) or (p,q) components (degrees 2 and 3)
    Decompose(DecomposeArgs),
}

#[derive(Debug, Args)]
pub struct EmitArgs {
    #[arg(long, value_enum)]
    pub object: Object,
    #[arg(long, value_enum, default_value_t = ConventionArg::Cd)]
    pub convention: ConventionArg,
    /// Which split-signature form `--object split` prints
    #[arg(long, value_enum, default_value_t = SplitArg::Minus)]
    pub split: SplitArg,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = SuiteArg::All)]
    pub suite: SuiteArg,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 100)]
    pub trials: u64,
    #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u64).range(1..))]
    pub max_degree: u64,
    /// JSON file with a replacement 3-form φ on R7
    #[arg(long)]
    pub phi: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct DecomposeArgs {
    /// JSON form file, or `-` for standard input
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long, value_enum, default_value_t = Into_::G2)]
    pub into: Into_,
    /// Convention of the G2 projectors; (p,q) splitting always uses CD-first
    #[arg(long, value_enum, default_value_t = ConventionArg::Cd)]
    pub convention: ConventionArg,
}

/// Parses `args` and runs the command; returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    let result = match &cli.command {
        Command::Emit(a) => emit(a, cli.format, out),
        Command::Verify(a) => run_verify(a, cli.format, out, err),
        Command::Decompose(a) => decompose(a, cli.format, out),
    };
    match result {
        Ok(code) => code,
        Err(CliError::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        // the reader went away, as with `| head`
        Err(CliError::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => EXIT_OK,
        Err(CliError::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Io(#[from] io::Error),
}

impl From<JsonError> for CliError {
    fn from(e: JsonError) -> Self {
        CliError::Usage(format!("invalid form at {e}"))
    }
}

fn render<S: JsonCoeff + LatexCoeff>(f: &Form<S>, format: Format) -> String {
    match format {
        Format::Json => json::to_json(f),
        Format::Latex => form_to_latex(f),
        Format::Text => f.to_string(),
    }
}

fn emit(a: &EmitArgs, format: Format, out: &mut dyn Write) -> Result<i32, CliError> {
    let c: Convention = a.convention.into();
    let pkg = StructurePackage::build(c);
    let c3 = KahlerPair::c3();
    let text = match a.object {
        Object::Phi => render(&pkg.phi, format),
        Object::Psi => render(&pkg.psi, format),
        Object::Spin7 => render(&pkg.big_phi, format),
        Object::Theta => render(&theta(c), format),
        Object::Split => render(
            &build_split_phi(match a.split {
                SplitArg::Minus => SplitVariant::MinusEtaMinus,
                SplitArg::Plus => SplitVariant::PlusEtaPlus,
            }),
            format,
        ),
        Object::Omega => render(&c3.omega, format),
        Object::ReOmega => render(&c3.re_omega(), format),
        Object::ImOmega => render(&c3.im_omega(), format),
    };
    writeln!(out, "{text}")?;
    Ok(EXIT_OK)
}

fn read_input(path: &PathBuf) -> Result<String, CliError> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        return Ok(s);
    }
    std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))
}

#[derive(Serialize)]
struct CheckDto<'a> {
    suite: &'a str,
    name: &'a str,
    passed: bool,
    detail: &'a str,
}

fn run_verify(a: &VerifyArgs, format: Format, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    let phi_override = match &a.phi {
        Some(path) => {
            let phi: Form<Rational> = json::parse_form(&read_input(path)?)?;
            if phi.frame() != Frame::R7 {
                return Err(CliError::Usage("invalid form at frame: φ must live on R7".into()));
            }
            if phi.degree() != 3 {
                return Err(CliError::Usage("invalid form at degree: φ must be a 3-form".into()));
            }
            Some(phi)
        }
        None => None,
    };
    let opts = VerifyOptions { seed: a.seed, trials: a.trials, max_degree: a.max_degree as usize, phi_override };
    let suite: Suite = a.suite.into();
    let report = verify::run(suite, &opts).map_err(|e| CliError::Usage(e.to_string()))?;
    write_report(&report, suite, format, out)?;
    if let Some(f) = report.failures().next() {
        writeln!(err, "first failure: [{}] {}: {}", f.suite, f.name, f.detail)?;
        return Ok(EXIT_FAIL);
    }
    Ok(EXIT_OK)
}

fn write_report(report: &Report, suite: Suite, format: Format, out: &mut dyn Write) -> io::Result<()> {
    let failed = report.failures().count();
    match format {
        Format::Json => {
            let checks: Vec<CheckDto> = report
                .checks
                .iter()
                .map(|c| CheckDto { suite: c.suite.name(), name: &c.name, passed: c.passed, detail: &c.detail })
                .collect();
            let doc = json!({ "suite": suite.name(), "passed": failed == 0, "failed": failed, "checks": checks });
            writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("plain data"))
        }
        Format::Text | Format::Latex => {
            for c in &report.checks {
                if c.passed {
                    writeln!(out, "ok    {:<8} {}", c.suite.name(), c.name)?;
                } else {
                    writeln!(out, "FAIL  {:<8} {}: {}", c.suite.name(), c.name, c.detail)?;
                }
            }
            writeln!(out, "{} checks, {} failed", report.checks.len(), failed)
        }
    }
}

fn superscript(n: usize) -> &'static str {
    ["⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷"][n]
}

fn subscript(n: usize) -> String {
    n.to_string()
        .chars()
        .map(|c| ['₀', '₁', '₂', '₃', '₄', '₅', '₆', '₇', '₈', '₉'][c.to_digit(10).expect("digit") as usize])
        .collect()
}

fn space_name(degree: usize, t: G2Type) -> String {
    format!("Ω{}{}", superscript(degree), subscript(t.dim()))
}

fn decompose(a: &DecomposeArgs, format: Format, out: &mut dyn Write) -> Result<i32, CliError> {
    let form: Form<GaussianRational> = json::parse_form(&read_input(&a.input)?)?;
    if form.frame() != Frame::R7 {
        return Err(CliError::Usage(format!("invalid form at frame: decomposition needs R7, got {}", form.frame())));
    }
    match a.into {
        Into_::G2 => decompose_g2(&form, a.convention.into(), format, out),
        Into_::Pq => decompose_pq(&form, format, out),
    }
}

fn decompose_g2(
    form: &Form<GaussianRational>,
    c: Convention,
    format: Format,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let proj = G2Projectors::new(&StructurePackage::build(c));
    let d = proj.project(form).map_err(|e| CliError::Usage(format!("invalid form at degree: {e}")))?;
    let recombines = d.recombine() == *form;
    let (verdict, eigenvalue) = if form.is_zero() {
        ("zero".to_string(), None)
    } else {
        match d.pure_type() {
            Some(t) => {
                let ev = (form.degree() == 2).then(|| {
                    let (l7, l14) = c.eigenvalues();
                    if t == G2Type::Seven {
                        l7
                    } else {
                        l14
                    }
                });
                (space_name(form.degree(), t), ev)
            }
            None => ("mixed".to_string(), None),
        }
    };
    match format {
        Format::Json => {
            let comps: Vec<Value> = d
                .components
                .iter()
                .map(|(t, f)| json!({ "type": t.dim(), "space": space_name(form.degree(), *t), "form": json::form_to_dto(f) }))
                .collect();
            let doc = json!({
                "mode": "g2",
                "convention": c.name(),
                "degree": form.degree(),
                "verdict": verdict,
                "eigenvalue": eigenvalue,
                "components": comps,
                "recombines": recombines,
            });
            writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("plain data"))?;
        }
        Format::Text | Format::Latex => {
            match eigenvalue {
                Some(ev) => writeln!(out, "type: {verdict}, eigenvalue {ev}")?,
                None => writeln!(out, "type: {verdict}")?,
            }
            for (t, f) in &d.components {
                let body = if format == Format::Latex { form_to_latex(f) } else { f.to_string() };
                writeln!(out, "{}: {body}", space_name(form.degree(), *t))?;
            }
            writeln!(out, "recombines: {}", if recombines { "yes" } else { "no" })?;
        }
    }
    Ok(if recombines { EXIT_OK } else { EXIT_FAIL })
}

fn membership(form: &Form<GaussianRational>) -> Result<Option<(&'static str, Membership)>, CliError> {
    let m = match form.degree() {
        2 => Some(("Ω²₁₄", membership_14(form))),
        3 => Some(("Ω³₂₇", membership_27(form))),
        _ => None,
    };
    m.map(|(n, r)| r.map(|r| (n, r)).map_err(|e| CliError::Usage(format!("invalid form at degree: {e}")))).transpose()
}

fn decompose_pq(form: &Form<GaussianRational>, format: Format, out: &mut dyn Write) -> Result<i32, CliError> {
    let d: ComplexTypeDecomposition =
        pq_decompose(form).map_err(|e| CliError::Usage(format!("invalid form at degree: {e}")))?;
    let recombines = d.recombine() == *form;
    let member = membership(form)?;
    let trace_name = if form.degree() == 3 { "f" } else { "k" };
    match format {
        Format::Json => {
            let part = |m: &std::collections::BTreeMap<TypeLabel, Form<GaussianRational>>| -> Vec<Value> {
                m.iter().map(|(l, f)| json!({ "type": l.to_string(), "form": json::form_to_dto(f) })).collect()
            };
            let member_doc = member.as_ref().map(|(name, m)| {
                json!({
                    "space": name,
                    "holds": m.holds,
                    "equations": m.residuals.iter().map(|(e, r)| json!({ "equation": e, "zero": r.is_zero() })).collect::<Vec<_>>(),
                })
            });
            let doc = json!({
                "mode": "pq",
                "degree": form.degree(),
                "spatial": part(&d.spatial),
                "dt": part(&d.dt_part),
                trace_name: d.trace.to_dto(),
                "membership": member_doc,
                "recombines": recombines,
            });
            writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("plain data"))?;
        }
        Format::Text | Format::Latex => {
            let show =
                |f: &Form<GaussianRational>| if format == Format::Latex { form_to_latex(f) } else { f.to_string() };
            for (l, f) in &d.spatial {
                writeln!(out, "{l}: {}", show(f))?;
            }
            for (l, f) in &d.dt_part {
                writeln!(out, "dt∧{l}: {}", show(f))?;
            }
            let (neg, mag) = d.trace.latex();
            let mag = if mag.is_empty() { "1".to_string() } else { mag };
            writeln!(out, "{trace_name} = {}{mag}", if neg { "-" } else { "" })?;
            if let Some((name, m)) = &member {
                writeln!(out, "{name} equations: {}", if m.holds { "hold" } else { "fail" })?;
                for (e, r) in &m.residuals {
                    writeln!(out, "  {e}: {}", if r.is_zero() { "0" } else { "nonzero" })?;
                }
            }
            writeln!(out, "recombines: {}", if recombines { "yes" } else { "no" })?;
        }
    }
    Ok(if recombines { EXIT_OK } else { EXIT_FAIL })
}
