//! Command-line front end: every computation of the `qsphere` library as a
//! batch command with pretty, JSON or CSV output.

use std::fmt::Write as _;

use clap::{error::ErrorKind, Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use qsphere::families::{family_q, q_prime_at_one};
use qsphere::haar::{ebi, haar_moment, phi, Word};
use qsphere::levy::{central_eigenvalue, heat_eigenvalues, Generator, LevyPair};
use qsphere::measures::{LevyMeasure, MomentFunctional};
use qsphere::ratpoly::{format_rational, parse_rational, to_f64};
use qsphere::spectral::{heat_trace_partial, multiplicities, spectral_dimension, spectrum, zeta_partial};
use qsphere::verify::run_all;
use qsphere::{Error, Family, Poly, Rational, SphereKind};

/// Exit code, standard output and standard error of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Parser, Debug)]
#[command(name = "qsphere", version, about = "Exact spectra of Markov semigroups on classical and quantum spheres")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Normalized eigen-polynomials q_s.
    Poly(PolyArgs),
    /// Moments of u11 under the Haar state.
    Moments(FamilyArgs),
    /// Haar-state value of a word in the generators u_ij.
    Haar(WordArgs),
    /// Bi-invariant conditional expectation of a word, as a polynomial in u11.
    Ebi(WordArgs),
    /// Idempotent state of a word.
    Phi(WordArgs),
    /// Eigenvalues and multiplicities of a generator.
    Spectrum(GenArgs),
    /// Spectral dimension of a generator.
    Specdim(SpecdimArgs),
    /// Heat-trace partial sum and heat eigenvalues.
    HeatTrace(HeatArgs),
    /// Eigenvalues of a central generator.
    Central(CentralArgs),
    /// Runs the invariant sweep and prints pass/fail per property.
    Verify(FormatArg),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Pretty,
    Json,
    Csv,
}

#[derive(Args, Debug)]
struct FormatArg {
    #[arg(long, value_enum, default_value = "pretty")]
    format: Format,
}

#[derive(Args, Debug)]
struct FamilyArgs {
    /// classical, half or free.
    #[arg(long, alias = "model")]
    family: String,
    #[arg(long = "N")]
    n: u32,
    #[arg(long, default_value_t = 8)]
    smax: usize,
    #[arg(long, value_enum, default_value = "pretty")]
    format: Format,
}

#[derive(Args, Debug)]
struct PolyArgs {
    #[arg(long, alias = "model")]
    family: String,
    #[arg(long = "N")]
    n: u32,
    /// Single degree; overrides --smax.
    #[arg(long)]
    s: Option<usize>,
    #[arg(long, default_value_t = 4)]
    smax: usize,
    #[arg(long, value_enum, default_value = "pretty")]
    format: Format,
}

#[derive(Args, Debug)]
struct WordArgs {
    #[arg(long, alias = "family")]
    model: String,
    #[arg(long = "N")]
    n: u32,
    /// Word such as "u11^2 u22^2" or "u{1,12} u{12,1}".
    #[arg(long)]
    word: String,
    /// Degree of the projection (ebi only); defaults to the word length.
    #[arg(long)]
    smax: Option<usize>,
    #[arg(long, value_enum, default_value = "pretty")]
    format: Format,
}

#[derive(Args, Debug)]
struct GenArgs {
    #[arg(long, alias = "model")]
    family: String,
    #[arg(long = "N")]
    n: u32,
    /// Drift as a rational string; defaults to the Laplace value N - 1.
    #[arg(long)]
    b: Option<String>,
    /// Path to a jump-measure JSON file.
    #[arg(long)]
    nu: Option<String>,
    #[arg(long, default_value_t = 10)]
    smax: usize,
    #[arg(long, value_enum, default_value = "pretty")]
    format: Format,
}

#[derive(Args, Debug)]
struct SpecdimArgs {
    #[command(flatten)]
    generator: GenArgs,
    /// Also report the zeta partial sum at this exponent, up to --smax.
    #[arg(long)]
    z: Option<f64>,
}

#[derive(Args, Debug)]
struct HeatArgs {
    #[command(flatten)]
    generator: GenArgs,
    /// Time as a rational string.
    #[arg(long)]
    t: String,
}

#[derive(Args, Debug)]
struct CentralArgs {
    #[arg(long = "N")]
    n: u32,
    #[arg(long, default_value = "1")]
    b: String,
    /// Path to a jump-measure JSON file, supported on [-N, N).
    #[arg(long)]
    nu: Option<String>,
    #[arg(long, default_value_t = 10)]
    smax: usize,
    #[arg(long, value_enum, default_value = "pretty")]
    format: Format,
}

enum CliError {
    Usage(String),
    Rational(String),
    Input(String),
    Lib(Error),
}

impl CliError {
    fn render(&self) -> String {
        match self {
            CliError::Usage(m) => format!("error[usage]: {m}"),
            CliError::Rational(m) => format!("error[rational]: {m}"),
            CliError::Input(m) => format!("error[input]: {m}"),
            CliError::Lib(e) => {
                let tag = match e {
                    Error::LengthCap { .. } => "length-cap",
                    Error::SingularGram { .. } => "singular-gram",
                    Error::Parse(_) => "parse",
                    Error::RegressionMismatch { .. } => "regression",
                    _ => "input",
                };
                format!("error[{tag}]: {e}")
            }
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

/// Parses `args` (including the program name) and executes the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome {
                    code: 0,
                    stdout: e.to_string(),
                    stderr: String::new(),
                },
                _ => {
                    let first = e.to_string();
                    let line = first
                        .lines()
                        .next()
                        .unwrap_or("invalid arguments")
                        .trim_start_matches("error: ")
                        .to_string();
                    Outcome {
                        code: 2,
                        stdout: String::new(),
                        stderr: CliError::Usage(line).render() + "\n",
                    }
                }
            };
        }
    };
    match execute(cli.command) {
        Ok((code, stdout)) => Outcome { code, stdout, stderr: String::new() },
        Err(e) => Outcome {
            code: 2,
            stdout: String::new(),
            stderr: e.render() + "\n",
        },
    }
}

fn execute(command: Command) -> CliResult<(i32, String)> {
    match command {
        Command::Poly(a) => poly(a).map(|s| (0, s)),
        Command::Moments(a) => moments(a).map(|s| (0, s)),
        Command::Haar(a) => word_value(a, "haar").map(|s| (0, s)),
        Command::Ebi(a) => ebi_cmd(a).map(|s| (0, s)),
        Command::Phi(a) => word_value(a, "phi").map(|s| (0, s)),
        Command::Spectrum(a) => spectrum_cmd(a).map(|s| (0, s)),
        Command::Specdim(a) => specdim(a).map(|s| (0, s)),
        Command::HeatTrace(a) => heat(a).map(|s| (0, s)),
        Command::Central(a) => central(a).map(|s| (0, s)),
        Command::Verify(a) => Ok(verify(a)),
    }
}

fn parse_kind(text: &str) -> CliResult<SphereKind> {
    text.parse()
        .map_err(|_| CliError::Usage(format!("unknown family {text:?} (expected classical, half or free)")))
}

fn family(kind: &str, n: u32) -> CliResult<Family> {
    Ok(Family::new(parse_kind(kind)?, n)?)
}

fn rational(flag: &str, text: &str) -> CliResult<Rational> {
    parse_rational(text).map_err(|_| CliError::Rational(format!("--{flag} {text:?} is not a rational number")))
}

fn read_measure(path: &Option<String>) -> CliResult<LevyMeasure> {
    match path {
        None => Ok(LevyMeasure::zero()),
        Some(p) => {
            let text = std::fs::read_to_string(p)
                .map_err(|e| CliError::Input(format!("cannot read {p}: {e}")))?;
            Ok(LevyMeasure::from_json(&text)?)
        }
    }
}

fn generator(a: &GenArgs) -> CliResult<Generator> {
    let f = family(&a.family, a.n)?;
    let b = match &a.b {
        Some(text) => rational("b", text)?,
        None => Rational::from_integer((f.n() - 1).into()),
    };
    let nu = read_measure(&a.nu)?;
    Ok(Generator::new(f, LevyPair::new(b, nu)?))
}

fn rat(r: &Rational) -> Value {
    Value::String(format_rational(r))
}

fn coeffs(p: &Poly) -> Value {
    Value::Array(p.coeffs().iter().map(rat).collect())
}

fn float(x: f64) -> String {
    format!("{x:.16e}")
}

fn json_line(v: &Value) -> String {
    serde_json::to_string(v).expect("json serializes") + "\n"
}

fn poly(a: PolyArgs) -> CliResult<String> {
    let f = family(&a.family, a.n)?;
    let degrees: Vec<usize> = match a.s {
        Some(s) => vec![s],
        None => (0..=a.smax).collect(),
    };
    let mut out = String::new();
    match a.format {
        Format::Pretty => {
            for &s in &degrees {
                writeln!(out, "q_{s}(x) = {}", family_q(f, s)).unwrap();
            }
        }
        Format::Csv => {
            out.push_str("s,q_prime_at_one,coeffs\n");
            for &s in &degrees {
                let q = family_q(f, s);
                let cs: Vec<String> = q.coeffs().iter().map(format_rational).collect();
                writeln!(out, "{s},{},{}", format_rational(&q_prime_at_one(f, s)), cs.join(" ")).unwrap();
            }
        }
        Format::Json => {
            let entries: Vec<Value> = degrees
                .iter()
                .map(|&s| {
                    json!({
                        "s": s,
                        "coeffs": coeffs(&family_q(f, s)),
                        "q_prime_at_one": rat(&q_prime_at_one(f, s)),
                    })
                })
                .collect();
            out = json_line(&json!({"family": f.kind().name(), "N": f.n(), "polys": entries}));
        }
    }
    Ok(out)
}

fn moments(a: FamilyArgs) -> CliResult<String> {
    let f = family(&a.family, a.n)?;
    let mf = MomentFunctional::new(f);
    let ms: Vec<Rational> = (0..=a.smax).map(|k| mf.moment(k)).collect();
    Ok(match a.format {
        Format::Pretty => ms
            .iter()
            .enumerate()
            .map(|(k, m)| format!("m_{k} = {}\n", format_rational(m)))
            .collect(),
        Format::Csv => {
            let mut out = String::from("k,moment\n");
            for (k, m) in ms.iter().enumerate() {
                writeln!(out, "{k},{}", format_rational(m)).unwrap();
            }
            out
        }
        Format::Json => json_line(&json!({
            "family": f.kind().name(),
            "N": f.n(),
            "moments": ms.iter().map(rat).collect::<Vec<_>>(),
        })),
    })
}

fn word(a: &WordArgs) -> CliResult<Word> {
    let kind = parse_kind(&a.model)?;
    Ok(Word::parse(&a.word, kind, a.n)?)
}

fn word_value(a: WordArgs, which: &str) -> CliResult<String> {
    let w = word(&a)?;
    let value = if which == "haar" { haar_moment(&w)? } else { phi(&w)? };
    Ok(match a.format {
        Format::Pretty => format_rational(&value) + "\n",
        Format::Csv => format!("word,{which}\n{w},{}\n", format_rational(&value)),
        Format::Json => json_line(&json!({
            "model": w.model().name(),
            "N": w.n(),
            "word": w.to_string(),
            which: rat(&value),
        })),
    })
}

fn ebi_cmd(a: WordArgs) -> CliResult<String> {
    let w = word(&a)?;
    let p = ebi(&w, a.smax.unwrap_or(w.len()))?;
    Ok(match a.format {
        Format::Pretty => format!("{p}\n"),
        Format::Csv => {
            let mut out = String::from("k,coeff\n");
            for (k, c) in p.coeffs().iter().enumerate() {
                writeln!(out, "{k},{}", format_rational(c)).unwrap();
            }
            out
        }
        Format::Json => json_line(&json!({
            "model": w.model().name(),
            "N": w.n(),
            "word": w.to_string(),
            "coeffs": coeffs(&p),
        })),
    })
}

fn spectrum_cmd(a: GenArgs) -> CliResult<String> {
    let g = generator(&a)?;
    let sp = spectrum(&g, a.smax);
    Ok(match a.format {
        Format::Json => sp.to_json() + "\n",
        Format::Csv => sp.to_csv(),
        Format::Pretty => {
            let mut out = format!("{:>4}  {:>12}  {}\n", "s", "m", "lambda");
            for e in &sp.entries {
                writeln!(out, "{:>4}  {:>12}  {}", e.s, e.multiplicity, format_rational(&e.lambda)).unwrap();
            }
            out
        }
    })
}

fn specdim(a: SpecdimArgs) -> CliResult<String> {
    let g = generator(&a.generator)?;
    let d = spectral_dimension(&g)?;
    let zeta = match a.z {
        Some(z) => Some(zeta_partial(&g, z, a.generator.smax)?),
        None => None,
    };
    Ok(match a.generator.format {
        Format::Pretty => {
            let mut out = format!("{}\n", d.value);
            if let Some(w) = &d.warning {
                writeln!(out, "warning: {w}").unwrap();
            }
            if let Some(zv) = zeta {
                writeln!(out, "zeta_partial = {}", float(zv)).unwrap();
            }
            out
        }
        Format::Csv => {
            let mut out = String::from("value,method,regressed,zeta_partial\n");
            writeln!(
                out,
                "{},{},{},{}",
                d.value,
                d.method.name(),
                float(d.regressed),
                zeta.map(float).unwrap_or_default()
            )
            .unwrap();
            out
        }
        Format::Json => json_line(&json!({
            "family": g.family.kind().name(),
            "N": g.family.n(),
            "value": d.value.to_string(),
            "method": d.method.name(),
            "regressed": float(d.regressed),
            "warning": d.warning,
            "zeta_partial": zeta.map(float),
        })),
    })
}

fn heat(a: HeatArgs) -> CliResult<String> {
    let g = generator(&a.generator)?;
    let t = rational("t", &a.t)?;
    let smax = a.generator.smax;
    let trace = heat_trace_partial(&g, &t, smax)?;
    let values = heat_eigenvalues(&g, &t, smax)?;
    let ms = multiplicities(g.family, smax);
    Ok(match a.generator.format {
        Format::Pretty => {
            let mut out = format!("heat_trace = {}\n", float(trace));
            for (s, v) in values.iter().enumerate() {
                writeln!(out, "s = {s}: m = {}, exp(t lambda) = {}", ms[s], float(*v)).unwrap();
            }
            out
        }
        Format::Csv => {
            let mut out = String::from("s,m,heat\n");
            for (s, v) in values.iter().enumerate() {
                writeln!(out, "{s},{},{}", ms[s], float(*v)).unwrap();
            }
            out
        }
        Format::Json => json_line(&json!({
            "family": g.family.kind().name(),
            "N": g.family.n(),
            "t": rat(&t),
            "heat_trace": float(trace),
            "heat": values.iter().map(|v| float(*v)).collect::<Vec<_>>(),
        })),
    })
}

fn central(a: CentralArgs) -> CliResult<String> {
    let b = rational("b", &a.b)?;
    let nu = read_measure(&a.nu)?;
    let lambdas = (0..=a.smax)
        .map(|s| central_eigenvalue(a.n, &b, &nu, s))
        .collect::<qsphere::Result<Vec<_>>>()?;
    Ok(match a.format {
        Format::Pretty => lambdas
            .iter()
            .enumerate()
            .map(|(s, l)| format!("lambda_{s} = {}\n", format_rational(l)))
            .collect(),
        Format::Csv => {
            let mut out = String::from("s,lambda_num,lambda_float\n");
            for (s, l) in lambdas.iter().enumerate() {
                writeln!(out, "{s},{},{}", format_rational(l), float(to_f64(l))).unwrap();
            }
            out
        }
        Format::Json => json_line(&json!({
            "N": a.n,
            "b": rat(&b),
            "lambdas": lambdas.iter().map(rat).collect::<Vec<_>>(),
        })),
    })
}

fn verify(a: FormatArg) -> (i32, String) {
    let checks = run_all();
    let failed = checks.iter().filter(|c| !c.passed).count();
    let out = match a.format {
        Format::Json => json_line(&Value::Array(
            checks
                .iter()
                .map(|c| json!({"name": c.name, "passed": c.passed, "detail": c.detail}))
                .collect(),
        )),
        Format::Csv => {
            let mut out = String::from("name,passed\n");
            for c in &checks {
                writeln!(out, "\"{}\",{}", c.name, c.passed).unwrap();
            }
            out
        }
        Format::Pretty => {
            let mut out = String::new();
            for c in &checks {
                if c.passed {
                    writeln!(out, "PASS  {}", c.name).unwrap();
                } else {
                    writeln!(out, "FAIL  {}: {}", c.name, c.detail).unwrap();
                }
            }
            writeln!(out, "{} of {} checks passed", checks.len() - failed, checks.len()).unwrap();
            out
        }
    };
    (i32::from(failed > 0), out)
}
