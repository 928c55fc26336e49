//! Command-line front end. [`run`] parses arguments and returns the
//! rendered output together with the exit code.

use std::ffi::OsString;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{Map, Value};

use crate::betti::{nabla_graph_connected, StructuralForm};
use crate::error::Error;
use crate::euclid::{
    analyze, delta_set_fast, delta_set_nonsymmetric, euclid_set, witness, Analysis, BasisPair, EuclidSet, Witness,
    WitnessSource,
};
use crate::oracle::{default_bound, delta_set_bruteforce, tuple_budget, verify, OracleReport, Verdict};
use crate::semigroup::{DeltaSet, Semigroup};

pub const SCHEMA_VERSION: &str = "1.0";

/// Largest factorization enumeration `element` will attempt.
const ELEMENT_ENUMERATION_LIMIT: u128 = 100_000_000;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID_INPUT: i32 = 2;
pub const EXIT_UNSUPPORTED: i32 = 3;
pub const EXIT_MISMATCH: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "deltasg", version, about = "Delta sets of three-generated numerical semigroups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Fast,
    Oracle,
    Both,
}

impl Method {
    fn name(self) -> &'static str {
        match self {
            Method::Fast => "fast",
            Method::Oracle => "oracle",
            Method::Both => "both",
        }
    }
}

#[derive(Debug, Clone, clap::Args)]
struct Gens {
    #[arg(allow_negative_numbers = true)]
    n1: i128,
    #[arg(allow_negative_numbers = true)]
    n2: i128,
    #[arg(allow_negative_numbers = true)]
    n3: i128,
}

impl Gens {
    fn raw(&self) -> [i128; 3] {
        [self.n1, self.n2, self.n3]
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Frobenius number, symmetry, Betti elements and structural form.
    Info {
        #[command(flatten)]
        gens: Gens,
    },
    /// The delta set of the semigroup.
    Delta {
        #[command(flatten)]
        gens: Gens,
        #[arg(long, value_enum, default_value_t = Method::Fast)]
        method: Method,
        /// Largest element enumerated by the oracle (default: the largest witness
        /// element, at least 4 max(Betti) + n3, capped by the tuple budget).
        #[arg(long, allow_negative_numbers = true)]
        bound: Option<i128>,
    },
    /// Factorizations, lengths and delta set of one element.
    Element {
        #[command(flatten)]
        gens: Gens,
        #[arg(allow_negative_numbers = true)]
        s: i128,
    },
    /// The Euclid set of two distances, level by level.
    Euclid {
        #[arg(allow_negative_numbers = true)]
        d1: i128,
        #[arg(allow_negative_numbers = true)]
        d2: i128,
    },
    /// An element realizing distance `d` between adjacent lengths.
    Witness {
        #[command(flatten)]
        gens: Gens,
        #[arg(allow_negative_numbers = true)]
        d: i128,
    },
    /// Compares the fast delta set against brute-force enumeration.
    Verify {
        #[command(flatten)]
        gens: Gens,
        #[arg(long, allow_negative_numbers = true)]
        bound: Option<i128>,
    },
}

/// Rendered output and exit code of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Exit code for an error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::NonSymmetric | Error::NotNonSymmetric | Error::MoreThanTwoDistinctValues(_) => EXIT_UNSUPPORTED,
        Error::InvariantViolation(_) | Error::StructureMismatch(_) | Error::NoMixedSignDecomposition(_) => {
            EXIT_MISMATCH
        }
        _ => EXIT_INVALID_INPUT,
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let format = cli.format;
    match execute(cli.command) {
        Ok((doc, code)) => {
            let stdout = match format {
                Format::Json => to_json(&doc),
                Format::Text => to_text(&doc),
            };
            Outcome { code, stdout, stderr: String::new() }
        }
        Err(e) => {
            let mut stderr = format!("error: {e}\n");
            if e == Error::NonSymmetric {
                stderr.push_str("hint: rerun with `--method oracle` for a brute-force delta set\n");
            }
            Outcome { code: exit_code(&e), stdout: String::new(), stderr }
        }
    }
}

/// A finished document and its exit code.
type Done = (Value, i32);

fn execute(cmd: Command) -> Result<Done, Error> {
    match cmd {
        Command::Info { gens } => cmd_info(&gens),
        Command::Delta { gens, method, bound } => cmd_delta(&gens, method, bound),
        Command::Element { gens, s } => cmd_element(&gens, s),
        Command::Euclid { d1, d2 } => cmd_euclid(d1, d2),
        Command::Witness { gens, d } => cmd_witness(&gens, d),
        Command::Verify { gens, bound } => cmd_verify(&gens, bound),
    }
}

fn document(command: &str, input: Value, result: Value, warnings: Vec<String>) -> Value {
    let mut m = Map::new();
    m.insert("schema_version".into(), Value::from(SCHEMA_VERSION));
    m.insert("command".into(), Value::from(command));
    m.insert("input".into(), input);
    m.insert("result".into(), result);
    m.insert("warnings".into(), Value::from(warnings));
    Value::Object(m)
}

fn obj<const N: usize>(entries: [(&str, Value); N]) -> Value {
    Value::Object(entries.into_iter().map(|(k, v)| (k.to_string(), v)).collect())
}

fn int(x: i128) -> Value {
    Value::Number(x.to_string().parse().expect("decimal integer"))
}

fn ints(xs: impl IntoIterator<Item = i128>) -> Value {
    Value::Array(xs.into_iter().map(int).collect())
}

fn delta_value(d: &DeltaSet) -> Value {
    ints(d.iter())
}

fn gens_input(g: &Gens) -> Value {
    obj([("generators", ints(g.raw()))])
}

fn semigroup(g: &Gens) -> Result<Semigroup, Error> {
    Semigroup::new(g.raw())
}

const EXPERIMENTAL: &str =
    "EXPERIMENTAL: non-symmetric delta set reconstructed from Betti distances; cross-check with `verify` or `--method oracle`";

fn form_value(form: &StructuralForm) -> Value {
    match *form {
        StructuralForm::OneBetti { s1, s2, s3 } => {
            obj([("type", Value::from(form.name())), ("s1", int(s1)), ("s2", int(s2)), ("s3", int(s3))])
        }
        StructuralForm::TwoBetti(f) => obj([
            ("type", Value::from(form.name())),
            ("a", int(f.a)),
            ("m1", int(f.m1)),
            ("m2", int(f.m2)),
            ("b", int(f.b)),
            ("c", int(f.c)),
            ("generators", ints(f.generators())),
        ]),
        StructuralForm::ThreeBetti => obj([("type", Value::from(form.name()))]),
    }
}

fn basis_value(b: &BasisPair) -> Value {
    obj([
        ("v1", ints(b.to_sorted(b.v1.0))),
        ("v2", ints(b.to_sorted(b.v2.0))),
        ("delta1", int(b.delta1)),
        ("delta2", int(b.delta2)),
        ("sigma", int(b.sigma)),
        ("g", int(b.g)),
        ("lambda", b.lambda.map_or(Value::Null, int)),
    ])
}

fn cmd_info(g: &Gens) -> Result<Done, Error> {
    let sg = semigroup(g)?;
    let an = analyze_or_structure(&sg)?;
    let betti: Vec<Value> = an
        .betti
        .elements
        .iter()
        .map(|&b| {
            let z = sg.factorizations(b);
            obj([
                ("element", int(b)),
                ("factorizations", Value::Array(z.iter().map(|f| ints(f.0)).collect())),
                ("lengths", ints(z.iter().map(|f| f.length()))),
            ])
        })
        .collect();
    let mut warnings = Vec::new();
    if !an.form.is_symmetric() {
        warnings.push("non-symmetric: the fast delta set is experimental".to_string());
    }
    let result = obj([
        ("generators", ints(sg.generators().as_array())),
        ("frobenius_number", int(sg.frobenius_number()?)),
        ("symmetric", Value::from(sg.is_symmetric()?)),
        ("betti", Value::Array(betti)),
        ("c", ints(an.betti.c)),
        ("form", form_value(&an.form)),
        ("basis", an.basis.as_ref().map_or(Value::Null, basis_value)),
    ]);
    if sg.is_symmetric()? != an.form.is_symmetric() {
        return Err(Error::InvariantViolation("symmetry test and Betti count disagree".into()));
    }
    Ok((document("info", gens_input(g), result, warnings), EXIT_OK))
}

/// `analyze`, falling back to the bare classification when the
/// non-symmetric seeding fails.
fn analyze_or_structure(sg: &Semigroup) -> Result<Analysis, Error> {
    match analyze(sg) {
        Err(Error::MoreThanTwoDistinctValues(_)) => {
            let betti = crate::betti::betti_elements(sg)?;
            let form = crate::betti::classify(sg, &betti)?;
            Ok(Analysis { betti, form, basis: None, euclid: euclid_set(1, 0)?, seed: (0, 0) })
        }
        other => other,
    }
}

fn resolve_bound(sg: &Semigroup, bound: Option<i128>, warnings: &mut Vec<String>) -> Result<i128, Error> {
    match bound {
        Some(b) if b <= 0 => Err(Error::OutOfRange(format!("--bound must be positive, got {b}"))),
        Some(b) => Ok(b),
        None => {
            let b = default_bound(sg)?;
            warnings.push(format!("oracle bound defaulted to {b}"));
            Ok(b)
        }
    }
}

fn cmd_delta(g: &Gens, method: Method, bound: Option<i128>) -> Result<Done, Error> {
    let sg = semigroup(g)?;
    let mut warnings = Vec::new();
    let mut input = Map::new();
    input.insert("generators".into(), ints(g.raw()));
    input.insert("method".into(), Value::from(method.name()));
    match method {
        Method::Fast => {
            input.insert("bound".into(), bound.map_or(Value::Null, int));
            let (delta, experimental) = fast_or_experimental(&sg)?;
            if experimental {
                warnings.push(EXPERIMENTAL.to_string());
            }
            let result = obj([("delta", delta_value(&delta)), ("experimental", Value::from(experimental))]);
            Ok((document("delta", Value::Object(input), result, warnings), EXIT_OK))
        }
        Method::Oracle => {
            let b = resolve_bound(&sg, bound, &mut warnings)?;
            input.insert("bound".into(), int(b));
            let delta = delta_set_bruteforce(&sg, b)?;
            warnings.push(format!("brute force covers elements up to {b} only"));
            let result = obj([("delta", delta_value(&delta)), ("bound", int(b))]);
            Ok((document("delta", Value::Object(input), result, warnings), EXIT_OK))
        }
        Method::Both => {
            let b = resolve_bound(&sg, bound, &mut warnings)?;
            input.insert("bound".into(), int(b));
            let report = verify(&sg, b)?;
            if report.experimental {
                warnings.push(EXPERIMENTAL.to_string());
            }
            let code = verdict_code(&report);
            Ok((document("delta", Value::Object(input), report_value(&report), warnings), code))
        }
    }
}

fn fast_or_experimental(sg: &Semigroup) -> Result<(DeltaSet, bool), Error> {
    match delta_set_fast(sg) {
        Ok(d) => Ok((d, false)),
        Err(Error::NonSymmetric) => match delta_set_nonsymmetric(sg) {
            Ok(d) => Ok((d, true)),
            Err(Error::MoreThanTwoDistinctValues(_)) => Err(Error::NonSymmetric),
            Err(e) => Err(e),
        },
        Err(e) => Err(e),
    }
}

fn verdict_code(r: &OracleReport) -> i32 {
    if r.verdict == Verdict::Mismatch {
        EXIT_MISMATCH
    } else {
        EXIT_OK
    }
}

fn report_value(r: &OracleReport) -> Value {
    obj([
        ("bound", int(r.bound)),
        ("observed_delta", delta_value(&r.observed_delta)),
        ("fast_delta", delta_value(&r.fast_delta)),
        ("missing", delta_value(&r.missing)),
        ("extra", delta_value(&r.extra)),
        ("verdict", Value::from(r.verdict.name())),
        ("experimental", Value::from(r.experimental)),
    ])
}

fn cmd_element(g: &Gens, s: i128) -> Result<Done, Error> {
    let sg = semigroup(g)?;
    let input = obj([("generators", ints(g.raw())), ("s", int(s))]);
    if s < 0 {
        return Err(Error::ElementNotInSemigroup(s));
    }
    let estimate = sg.enumerator().estimate(s);
    if estimate > ELEMENT_ENUMERATION_LIMIT {
        return Err(Error::TooLarge(format!("enumerating Z({s}) needs about {estimate} candidate tuples")));
    }
    let z = sg.factorizations(s);
    if z.is_empty() {
        return Err(Error::ElementNotInSemigroup(s));
    }
    let lengths = sg.length_set(s)?;
    let result = obj([
        ("s", int(s)),
        ("factorizations", Value::Array(z.iter().map(|f| ints(f.0)).collect())),
        ("lengths", ints(lengths.iter().copied())),
        ("delta", delta_value(&DeltaSet::from_lengths(&lengths))),
        ("nabla_connected", Value::from(nabla_graph_connected(&sg, s)?)),
    ]);
    Ok((document("element", input, result, Vec::new()), EXIT_OK))
}

fn euclid_value(e: &EuclidSet) -> Value {
    let levels: Vec<Value> = e
        .levels
        .iter()
        .map(|l| obj([("index", int(l.index as i128)), ("pair", ints([l.pair.0, l.pair.1])), ("values", ints(l.values.iter().copied()))]))
        .collect();
    obj([
        ("eta", ints(e.eta.iter().copied())),
        ("levels", Value::Array(levels)),
        ("union", ints(e.union.iter().copied())),
        ("g", int(e.g())),
    ])
}

fn cmd_euclid(d1: i128, d2: i128) -> Result<Done, Error> {
    let e = euclid_set(d1, d2)?;
    let input = obj([("d1", int(d1)), ("d2", int(d2))]);
    Ok((document("euclid", input, euclid_value(&e), Vec::new()), EXIT_OK))
}

fn witness_value(w: &Witness) -> Value {
    let source = match w.source {
        WitnessSource::Decomposition(v) => format!("decomposition_{}", format!("{v:?}").to_lowercase()),
        WitnessSource::BettiElement => "betti_element".to_string(),
    };
    obj([
        ("d", int(w.d)),
        ("s", int(w.s)),
        ("z", ints(w.z.0)),
        ("z_prime", ints(w.z_prime.0)),
        ("lengths", ints([w.z_prime.length(), w.z.length()])),
        ("vector", ints(w.vector.0)),
        ("coefficients", w.coefficients.map_or(Value::Null, |(a, b)| ints([a, b]))),
        ("source", Value::from(source)),
        ("verified", Value::from(w.verified)),
    ])
}

fn cmd_witness(g: &Gens, d: i128) -> Result<Done, Error> {
    let sg = semigroup(g)?;
    let input = obj([("generators", ints(g.raw())), ("d", int(d))]);
    let an = analyze(&sg)?;
    let Some(basis) = an.basis else { return Err(Error::NonSymmetric) };
    let w = witness(&sg, &basis, d)?;
    let mut warnings = Vec::new();
    if !w.verified {
        warnings.push(format!("Z({}) too large to enumerate; adjacency not verified", w.s));
    }
    Ok((document("witness", input, witness_value(&w), warnings), EXIT_OK))
}

fn cmd_verify(g: &Gens, bound: Option<i128>) -> Result<Done, Error> {
    let sg = semigroup(g)?;
    let mut warnings = Vec::new();
    let b = resolve_bound(&sg, bound, &mut warnings)?;
    tuple_budget()?;
    let report = verify(&sg, b)?;
    if report.experimental {
        warnings.push(EXPERIMENTAL.to_string());
    }
    let input = obj([("generators", ints(g.raw())), ("bound", int(b))]);
    let code = verdict_code(&report);
    Ok((document("verify", input, report_value(&report), warnings), code))
}

/// Pretty JSON with sorted keys and a trailing newline.
pub fn to_json(doc: &Value) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("serializable");
    s.push('\n');
    s
}

/// Indented `key: value` lines; integer arrays stay on one line.
pub fn to_text(doc: &Value) -> String {
    let mut out = String::new();
    write_text(doc, 0, &mut out);
    out
}

fn write_text(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                if is_inline(x) {
                    out.push_str(&format!("{pad}{k}: {}\n", inline(x)));
                } else {
                    out.push_str(&format!("{pad}{k}:\n"));
                    write_text(x, indent + 1, out);
                }
            }
        }
        Value::Array(items) => {
            for x in items {
                if is_inline(x) {
                    out.push_str(&format!("{pad}- {}\n", inline(x)));
                } else {
                    out.push_str(&format!("{pad}-\n"));
                    write_text(x, indent + 1, out);
                }
            }
        }
        x => out.push_str(&format!("{pad}{}\n", inline(x))),
    }
}

fn is_inline(v: &Value) -> bool {
    match v {
        Value::Object(_) => false,
        Value::Array(a) => a.iter().all(|x| is_inline(x) && !x.is_array() || x.as_array().is_some_and(|y| y.iter().all(Value::is_number))),
        _ => true,
    }
}

fn inline(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(a) => format!("[{}]", a.iter().map(inline).collect::<Vec<_>>().join(", ")),
        other => other.to_string(),
    }
}
