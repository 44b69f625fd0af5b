//! Command-line front end. Every invocation writes one JSON document to
//! stdout: either a report `{command, status, details}` or, with `--emit`,
//! a bare file in one of the formats of [`crate::formats`].
//!
//! Exit codes: 0 pass, 1 mathematical failure, 2 input or usage error.

use std::io::{Read, Write};
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{Map, Value, json};

use crate::error::Error;
use crate::formats::{self, laurent_to_json, scalar_to_json};
use crate::fusion_ring::{FusionRing, adjoint_subring, fp_dim_total, fp_dims, grading_group, is_nilpotent, is_pointed};
use crate::modular::{ModularData, gauss_sum_check, symmetric_bound_report, t_order, transparent_objects, verify_modular, verlinde_fusion};
use crate::pointed_center::{FiniteAbelianGroup, ThreeCocycle, center_modular_data, center_objects, check_cocycle, standard_cocycle};
use crate::skein::{BraidWord, format_in_t, in_t, skein_value};
use crate::tl::tl_fusion_ring;

#[derive(Parser, Debug)]
#[command(name = "tck", version, about = "Exact invariants of fusion rings, Temperley-Lieb categories, pointed centers and modular data")]
pub struct Cli {
    #[command(flatten)]
    pub opts: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct GlobalOpts {
    /// Omit wall-clock timings so reports are byte-identical across runs.
    #[arg(long, global = true)]
    pub no_timings: bool,
    /// Worker threads; 0 or unset uses every core.
    #[arg(long, global = true, env = "TCK_THREADS")]
    pub threads: Option<usize>,
    #[arg(long, global = true, default_value_t = 12)]
    pub max_level: usize,
    #[arg(long, global = true, default_value_t = 16)]
    pub max_strands: usize,
    /// Largest accepted group order.
    #[arg(long, global = true, default_value_t = 16)]
    pub max_group: usize,
    #[arg(long, global = true, default_value_t = 24)]
    pub max_crossings: usize,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check the fusion-ring axioms.
    Validate { file: PathBuf },
    /// Perron-Frobenius dimensions (floating point, 10 significant digits).
    Fpdim { file: PathBuf },
    /// Universal grading group and adjoint subring.
    Grading { file: PathBuf },
    /// Iterated adjoint subrings.
    Nilpotent { file: PathBuf },
    /// Semisimplified Temperley-Lieb category at a root of unity.
    Tl {
        #[arg(long)]
        level: usize,
        #[arg(long, value_enum)]
        emit: TlEmit,
        /// Galois exponent u for A = exp(2 pi i u / 4L) in the modular data.
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        galois: i64,
    },
    /// Jones polynomial of a braid closure.
    Jones(BraidArgs),
    /// Kauffman bracket of a braid closure.
    Bracket(BraidArgs),
    /// Drinfeld center of a pointed category.
    Center {
        /// Cyclic factor orders, e.g. "2" or "2x2".
        #[arg(long)]
        group: String,
        /// Standard cocycle class s (cyclic groups only).
        #[arg(long, conflicts_with = "cocycle_file")]
        cocycle: Option<usize>,
        #[arg(long)]
        cocycle_file: Option<PathBuf>,
        #[arg(long, value_enum)]
        emit: CenterEmit,
    },
    /// Checks on a modular-data file.
    #[command(subcommand)]
    Modular(ModularCommand),
}

#[derive(Args, Debug)]
pub struct BraidArgs {
    #[arg(long)]
    pub strands: usize,
    /// Comma-separated signed generators, e.g. "1,-2,1".
    #[arg(long, allow_hyphen_values = true)]
    pub word: String,
}

#[derive(Subcommand, Debug)]
pub enum ModularCommand {
    /// Invertibility of S and the modular-group relations.
    Verify { file: PathBuf },
    /// Gauss-sum identity.
    Gauss { file: PathBuf },
    /// Fusion rules recovered from S.
    Verlinde { file: PathBuf },
    /// Largest symmetric fusion-closed subset against the global dimension.
    Bound { file: PathBuf },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum TlEmit {
    Ring,
    Modular,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum CenterEmit {
    Objects,
    Ring,
    Modular,
}

/// Bad input: exit code 2.
#[derive(Debug)]
struct InputError(String);

impl From<Error> for InputError {
    fn from(e: Error) -> Self {
        InputError(e.to_string())
    }
}

type CliResult<T> = std::result::Result<T, InputError>;

enum Output {
    /// `status` is derived from `details.violations`.
    Report(Map<String, Value>),
    Document(Value),
}

fn report(mut details: Map<String, Value>, violations: Vec<String>) -> Output {
    details.insert("violations".into(), json!(violations));
    Output::Report(details)
}

struct Io<'a> {
    stdin: &'a mut (dyn Read + Send),
}

impl Io<'_> {
    fn read(&mut self, path: &PathBuf) -> CliResult<Value> {
        let text = if path.as_os_str() == "-" {
            let mut s = String::new();
            self.stdin.read_to_string(&mut s).map_err(|e| InputError(format!("reading stdin: {e}")))?;
            s
        } else {
            std::fs::read_to_string(path).map_err(|e| InputError(format!("reading {}: {e}", path.display())))?
        };
        Ok(formats::parse(&text)?)
    }

    fn ring(&mut self, path: &PathBuf) -> CliResult<FusionRing> {
        Ok(formats::ring_from_json(&self.read(path)?)?.0)
    }

    fn modular(&mut self, path: &PathBuf) -> CliResult<ModularData> {
        Ok(formats::modular_from_json(&self.read(path)?)?)
    }
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Validate { .. } => "validate",
            Command::Fpdim { .. } => "fpdim",
            Command::Grading { .. } => "grading",
            Command::Nilpotent { .. } => "nilpotent",
            Command::Tl { .. } => "tl",
            Command::Jones(_) => "jones",
            Command::Bracket(_) => "bracket",
            Command::Center { .. } => "center",
            Command::Modular(ModularCommand::Verify { .. }) => "modular verify",
            Command::Modular(ModularCommand::Gauss { .. }) => "modular gauss",
            Command::Modular(ModularCommand::Verlinde { .. }) => "modular verlinde",
            Command::Modular(ModularCommand::Bound { .. }) => "modular bound",
        }
    }
}

/// Parses `argv` (including the program name), runs the command and writes
/// the result. Returns the process exit code.
pub fn run(argv: &[String], stdin: &mut (dyn Read + Send), stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(stdout, "{e}");
                return 0;
            }
            let line = match e.kind() {
                ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => "error: missing subcommand; see --help".to_string(),
                _ => e.to_string().lines().next().unwrap_or("usage error").to_string(),
            };
            let _ = writeln!(stderr, "{line}");
            return 2;
        }
    };
    let name = cli.command.name();
    let started = Instant::now();
    let outcome = match cli.opts.threads.filter(|&k| k > 0) {
        Some(k) => match rayon::ThreadPoolBuilder::new().num_threads(k).build() {
            Ok(pool) => pool.install(|| execute(&cli, &mut Io { stdin })),
            Err(e) => Err(InputError(format!("thread pool: {e}"))),
        },
        None => execute(&cli, &mut Io { stdin }),
    };
    let elapsed = started.elapsed().as_secs_f64() * 1e3;
    let (doc, code) = match outcome {
        Ok(Output::Document(v)) => (v, 0),
        Ok(Output::Report(mut details)) => {
            let pass = details.get("violations").and_then(Value::as_array).is_none_or(Vec::is_empty);
            if !cli.opts.no_timings {
                details.insert("timings_ms".into(), json!({ "total": (elapsed * 1e3).round() / 1e3 }));
            }
            let status = if pass { "pass" } else { "fail" };
            (json!({ "command": name, "status": status, "details": details }), if pass { 0 } else { 1 })
        }
        Err(InputError(msg)) => {
            let msg = msg.replace('\n', " ");
            let _ = writeln!(stderr, "tck {name}: {msg}");
            (json!({ "command": name, "status": "error", "details": { "error": msg, "violations": [msg] } }), 2)
        }
    };
    if stdout.write_all(formats::render(&doc).as_bytes()).is_err() {
        return 2;
    }
    code
}

fn execute(cli: &Cli, io: &mut Io<'_>) -> CliResult<Output> {
    let opts = &cli.opts;
    match &cli.command {
        Command::Validate { file } => {
            let ring = io.ring(file)?;
            let rep = ring.validate();
            let violations = rep.violations.iter().map(|v| format!("{} at {:?}", v.axiom.name(), v.witness)).collect();
            let witnesses: Vec<Value> = rep.violations.iter().map(|v| json!({ "axiom": v.axiom.name(), "witness": v.witness })).collect();
            let mut d = Map::new();
            d.insert("rank".into(), json!(ring.rank()));
            d.insert("witnesses".into(), json!(witnesses));
            d.insert("truncated".into(), json!(rep.truncated));
            Ok(report(d, violations))
        }
        Command::Fpdim { file } => with_valid_ring(io.ring(file)?, |ring, d| {
            let dims = fp_dims(ring)?;
            d.insert("dims".into(), json!(dims.iter().map(|&x| sig10(x)).collect::<Vec<_>>()));
            d.insert("total".into(), json!(sig10(fp_dim_total(ring)?)));
            Ok(())
        }),
        Command::Grading { file } => with_valid_ring(io.ring(file)?, |ring, d| {
            let g = grading_group(ring)?;
            let ad = adjoint_subring(ring)?;
            d.insert("order".into(), json!(g.order()));
            d.insert("classes".into(), json!(g.classes));
            d.insert("table".into(), json!(g.table));
            d.insert("abelian".into(), json!(g.is_abelian()));
            d.insert("element_orders".into(), json!(g.element_orders()));
            d.insert("adjoint".into(), json!(ad.embedding));
            d.insert("pointed".into(), json!(is_pointed(ring)?));
            Ok(())
        }),
        Command::Nilpotent { file } => with_valid_ring(io.ring(file)?, |ring, d| {
            let n = is_nilpotent(ring)?;
            d.insert("nilpotent".into(), json!(n.nilpotent));
            d.insert("length".into(), json!(n.length()));
            d.insert("chain".into(), json!(n.chain));
            Ok(())
        }),
        Command::Tl { level, emit, galois } => {
            let level = *level;
            if level < 3 {
                return Err(InputError(format!("level {level} is out of range; levels start at 3")));
            }
            if level > opts.max_level {
                return Err(InputError(format!("level {level} exceeds --max-level {}", opts.max_level)));
            }
            match emit {
                TlEmit::Ring => {
                    let tl = tl_fusion_ring(level)?;
                    Ok(Output::Document(formats::ring_to_json(&tl.ring, Some(&tl.dims))))
                }
                TlEmit::Modular => Ok(Output::Document(formats::modular_to_json(&crate::skein::colored_smatrix_galois(level, *galois)?))),
            }
        }
        Command::Jones(args) | Command::Bracket(args) => {
            let w = braid(args, opts)?;
            let v = skein_value(&w);
            let mut d = Map::new();
            d.insert("word".into(), json!(w.letters()));
            d.insert("strands".into(), json!(w.strands()));
            d.insert("writhe".into(), json!(v.writhe));
            d.insert("bracket".into(), laurent_to_json(&v.bracket));
            if matches!(cli.command, Command::Jones(_)) {
                d.insert("jones".into(), laurent_to_json(&v.jones));
                // Odd component counts give half-integer powers of t.
                if let Some(t) = in_t(&v.jones) {
                    d.insert("jones_t".into(), laurent_to_json(&t));
                    d.insert("jones_t_text".into(), json!(format_in_t(&t)));
                }
            }
            Ok(report(d, Vec::new()))
        }
        Command::Center { group, cocycle, cocycle_file, emit } => {
            let g = FiniteAbelianGroup::parse(group)?;
            if g.size() > opts.max_group {
                return Err(InputError(format!("group order {} exceeds --max-group {}", g.size(), opts.max_group)));
            }
            let omega = match (cocycle, cocycle_file) {
                (Some(s), _) => {
                    let [n] = g.orders()[..] else {
                        return Err(InputError("--cocycle needs a cyclic group; use --cocycle-file".into()));
                    };
                    standard_cocycle(n, s % n)?
                }
                (None, Some(f)) => formats::cocycle_from_json(&io.read(f)?, Some(&g))?,
                (None, None) => ThreeCocycle::constant(g.clone()),
            };
            let check = check_cocycle(&omega);
            if !check.is_valid() {
                let violations = check.violations.iter().map(|v| format!("{} at {:?}", v.axiom.name(), v.witness)).collect();
                let mut d = Map::new();
                d.insert("group".into(), json!(g.to_string()));
                return Ok(report(d, violations));
            }
            let unsupported = |e: Error| -> CliResult<Output> {
                match e {
                    Error::NotPointedCenter { .. } => {
                        let mut d = Map::new();
                        d.insert("group".into(), json!(g.to_string()));
                        Ok(report(d, vec![e.to_string()]))
                    }
                    other => Err(other.into()),
                }
            };
            match emit {
                CenterEmit::Objects => match center_objects(&omega) {
                    Ok(objs) => Ok(Output::Document(formats::center_objects_to_json(&g, &objs))),
                    Err(e) => unsupported(e),
                },
                CenterEmit::Ring | CenterEmit::Modular => match center_modular_data(&omega) {
                    Ok(c) if *emit == CenterEmit::Ring => Ok(Output::Document(formats::ring_to_json(&c.ring, Some(c.data.dims())))),
                    Ok(c) => Ok(Output::Document(formats::modular_to_json(&c.data))),
                    Err(e) => unsupported(e),
                },
            }
        }
        Command::Modular(sub) => modular(sub, io),
    }
}

fn modular(sub: &ModularCommand, io: &mut Io<'_>) -> CliResult<Output> {
    let mut d = Map::new();
    match sub {
        ModularCommand::Verify { file } => {
            let data = io.modular(file)?;
            let rep = verify_modular(&data);
            let mut violations = rep.violations.clone();
            d.insert("rank".into(), json!(data.rank()));
            d.insert("order".into(), json!(data.order()));
            d.insert("invertible".into(), json!(rep.invertible));
            d.insert("determinant".into(), scalar_to_json(&rep.determinant));
            d.insert("alpha".into(), rep.alpha.as_ref().map_or(Value::Null, scalar_to_json));
            d.insert("beta".into(), rep.beta.as_ref().map_or(Value::Null, scalar_to_json));
            d.insert("s_symmetric".into(), json!(rep.s_symmetric));
            match t_order(&data) {
                Ok(n) => {
                    d.insert("t_order".into(), json!(n));
                }
                Err(e) => violations.push(e.to_string()),
            }
            d.insert("transparent".into(), json!(transparent_objects(&data)));
            let s: Vec<Vec<[f64; 2]>> = data.unitarized_s().iter().map(|row| row.iter().map(|z| [sig10(z.re), sig10(z.im)]).collect()).collect();
            d.insert("unitarized_s".into(), json!(s));
            Ok(report(d, violations))
        }
        ModularCommand::Gauss { file } => {
            let data = io.modular(file)?;
            let rep = gauss_sum_check(&data);
            let mut violations = Vec::new();
            if !rep.holds {
                violations.push("|sum d_i^2 T_i|^2 differs from sum d_i^2".to_string());
            }
            if rep.pointed_identity == Some(false) {
                violations.push("|sum T_i|^2 differs from the rank".to_string());
            }
            d.insert("global_dimension".into(), scalar_to_json(&rep.global_dimension));
            d.insert("gauss_sum".into(), scalar_to_json(&rep.gauss_sum));
            d.insert("pointed_identity".into(), json!(rep.pointed_identity));
            Ok(report(d, violations))
        }
        ModularCommand::Verlinde { file } => {
            let data = io.modular(file)?;
            match verlinde_fusion(&data) {
                Ok(ring) => {
                    let violations = ring.validate().violations.iter().map(|v| format!("{} at {:?}", v.axiom.name(), v.witness)).collect();
                    d.insert("ring".into(), formats::ring_to_json(&ring, None));
                    Ok(report(d, violations))
                }
                Err(e @ Error::NonIntegralFusion(i, j, k)) => {
                    d.insert("witness".into(), json!([i, j, k]));
                    Ok(report(d, vec![e.to_string()]))
                }
                Err(e) => Err(e.into()),
            }
        }
        ModularCommand::Bound { file } => {
            let data = io.modular(file)?;
            match symmetric_bound_report(&data) {
                Ok(b) => {
                    let violations = if b.holds { Vec::new() } else { vec!["D_S^2 exceeds the global dimension".to_string()] };
                    d.insert("subset".into(), json!(b.subset));
                    d.insert("dimension".into(), scalar_to_json(&b.dimension));
                    d.insert("global_dimension".into(), scalar_to_json(&b.global_dimension));
                    d.insert("saturated".into(), json!(b.saturated));
                    Ok(report(d, violations))
                }
                Err(e @ Error::NonIntegralFusion(..)) => Ok(report(d, vec![e.to_string()])),
                Err(e) => Err(e.into()),
            }
        }
    }
}

/// Runs `f` on a ring that passes `validate`; otherwise reports the
/// violations without computing anything.
fn with_valid_ring(ring: FusionRing, f: impl FnOnce(&FusionRing, &mut Map<String, Value>) -> crate::Result<()>) -> CliResult<Output> {
    let rep = ring.validate();
    let mut d = Map::new();
    d.insert("rank".into(), json!(ring.rank()));
    if !rep.is_valid() {
        let violations = rep.violations.iter().map(|v| format!("{} at {:?}", v.axiom.name(), v.witness)).collect();
        return Ok(report(d, violations));
    }
    match f(&ring, &mut d) {
        Ok(()) => Ok(report(d, Vec::new())),
        Err(e @ (Error::NonConvergence(_) | Error::IllFormed(_))) => Ok(report(d, vec![e.to_string()])),
        Err(e) => Err(e.into()),
    }
}

fn braid(args: &BraidArgs, opts: &GlobalOpts) -> CliResult<BraidWord> {
    if args.strands > opts.max_strands {
        return Err(InputError(format!("{} strands exceed --max-strands {}", args.strands, opts.max_strands)));
    }
    let w = BraidWord::parse(args.strands, &args.word)?;
    if w.crossings() > opts.max_crossings {
        return Err(InputError(format!("{} crossings exceed --max-crossings {}", w.crossings(), opts.max_crossings)));
    }
    Ok(w)
}

/// Rounds to 10 significant digits.
fn sig10(x: f64) -> f64 {
    format!("{x:.9e}").parse().unwrap_or(x)
}
