//! Command dispatch for the `epp` binary.
//!
//! Exit codes: 0 success, 1 verification violation (or failed self-check),
//! 2 usage or parse error, 3 oracle size cap exceeded.

use std::fs;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};

use crate::bounds::{BoundFn, BoundTable};
use crate::certificate::Certificate;
use crate::certify::{verify_certificate, VerifyError};
use crate::engine::{Engine, EngineConfig, SolveError};
use crate::generate::{gen_random, GenParams};
use crate::io::{parse_instance, verify_doc, CertificateDoc, DocVerifyError, Instance, Kind};
use crate::oracle::{exact_max_packing, exact_min_hitting, OracleConfig, OracleError, Witness};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_TOO_LARGE: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "epp", about = "Packing or hitting certificates for long paths")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Mode {
    Packing,
    Hitting,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Solve an instance and print a certificate.
    Solve {
        #[arg(long, value_parser = parse_kind)]
        kind: Kind,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        len: usize,
        #[arg(long = "in")]
        input: String,
        #[arg(long)]
        out: Option<String>,
        /// Check the certificate before writing it.
        #[arg(long)]
        verify: bool,
        /// For `cycles-at`: confirm that every long cycle meets the hub.
        #[arg(long)]
        check_hub: bool,
    },
    /// Exact maximum packing or minimum hitting set by exhaustive search.
    Oracle {
        #[arg(long, value_parser = parse_kind)]
        kind: Kind,
        #[arg(long)]
        len: usize,
        #[arg(long = "in")]
        input: String,
        #[arg(long, value_enum)]
        mode: Mode,
    },
    /// Print a value of a bounding function.
    Bounds {
        #[arg(long)]
        func: BoundFn,
        #[arg(long)]
        k: u64,
        #[arg(long)]
        len: u64,
    },
    /// Generate a seeded random instance.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
        #[arg(long)]
        seed: u64,
        #[arg(long, value_parser = parse_kind, default_value = "ab")]
        kind: Kind,
        /// Size of A (total terminal count for `s`).
        #[arg(long, default_value_t = 1)]
        a: usize,
        #[arg(long, default_value_t = 1)]
        b: usize,
        #[arg(long, default_value_t = 2)]
        parts: usize,
        #[arg(long)]
        out: Option<String>,
    },
    /// Check a certificate against an instance.
    Verify {
        #[arg(long = "in")]
        input: String,
        #[arg(long)]
        cert: String,
    },
}

fn parse_kind(s: &str) -> Result<Kind, String> {
    s.parse()
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl ToString) -> Self {
        Failure { code: EXIT_USAGE, message: message.to_string() }
    }
}

impl From<OracleError> for Failure {
    fn from(e: OracleError) -> Self {
        let code = match e {
            OracleError::TooLarge { .. } | OracleError::TooManyObjects(_) => EXIT_TOO_LARGE,
            _ => EXIT_USAGE,
        };
        Failure { code, message: e.to_string() }
    }
}

impl From<SolveError> for Failure {
    fn from(e: SolveError) -> Self {
        match e {
            SolveError::Oracle(o) => o.into(),
            SolveError::InvalidInput(_) | SolveError::Graph(_) => Failure::usage(e),
            SolveError::HubPrecondition(_) | SolveError::Invariant(_) => {
                Failure { code: EXIT_VIOLATION, message: e.to_string() }
            }
        }
    }
}

impl From<VerifyError> for Failure {
    fn from(e: VerifyError) -> Self {
        match e {
            VerifyError::Violation(v) => Failure { code: EXIT_VIOLATION, message: v.to_string() },
            VerifyError::Oracle(o) => o.into(),
        }
    }
}

impl From<DocVerifyError> for Failure {
    fn from(e: DocVerifyError) -> Self {
        match e {
            DocVerifyError::Doc(d) => Failure::usage(d),
            DocVerifyError::Verify(v) => v.into(),
        }
    }
}

fn read(path: &str) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::usage(format!("{path}: {e}")))
}

fn load(path: &str) -> Result<Instance, Failure> {
    parse_instance(&read(path)?).map_err(|e| Failure::usage(format!("{path}: {e}")))
}

fn emit(out: &mut dyn Write, path: Option<&str>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| Failure::usage(format!("{p}: {e}"))),
        None => writeln!(out, "{}", text.trim_end()).map_err(Failure::usage),
    }
}

/// Oracle cap for the solver and verifier: `EPP_ORACLE_CAP` if set, else the
/// solver default.
fn engine_cap() -> Result<OracleConfig, Failure> {
    match std::env::var(OracleConfig::ENV_VAR) {
        Ok(s) => OracleConfig::parse_cap(&s).map_err(Failure::usage),
        Err(_) => Ok(EngineConfig::default().oracle),
    }
}

fn set<T>(v: &Option<T>) -> &T {
    v.as_ref().expect("checked by Instance::spec")
}

pub fn solve(
    eng: &mut Engine,
    inst: &Instance,
    kind: Kind,
    k: usize,
    len: usize,
    check_hub: bool,
) -> Result<Certificate, SolveError> {
    inst.spec(kind, len).map_err(SolveError::InvalidInput)?;
    let g = &inst.graph;
    match kind {
        Kind::Ab => eng.solve_ab(g, set(&inst.a), set(&inst.b), k, len),
        Kind::AbGeneral => eng.solve_ab_general(g, set(&inst.a), set(&inst.b), k, len),
        Kind::A => eng.solve_a_paths(g, set(&inst.a), k, len),
        Kind::AStar => eng.solve_astar_paths(g, set(&inst.a), k, len),
        Kind::AStarB => eng.solve_astar_b(g, set(&inst.a), set(&inst.b), k, len),
        Kind::AStarBStar => eng.solve_astar_bstar(g, set(&inst.a), set(&inst.b), k, len),
        Kind::S => eng.solve_s_paths(g, set(&inst.s), k, len),
        Kind::CyclesAt => eng.solve_cycles_at(g, *set(&inst.x), k, len, check_hub),
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> Result<(), Failure> {
    match cmd {
        Command::Solve { kind, k, len, input, out: path, verify, check_hub } => {
            let inst = load(&input)?;
            let cap = engine_cap()?;
            let mut eng = Engine::new();
            eng.config.oracle = cap;
            let cert = solve(&mut eng, &inst, kind, k, len, check_hub)?;
            if verify {
                verify_certificate(&inst.graph, &cert, &cap)?;
            }
            emit(out, path.as_deref(), &CertificateDoc::new(&inst.graph, kind, len, &cert).to_json())
        }
        Command::Oracle { kind, len, input, mode } => {
            let inst = load(&input)?;
            let spec = inst.spec(kind, len).map_err(Failure::usage)?;
            let cfg = OracleConfig::from_env().map_err(Failure::usage)?;
            let res = match mode {
                Mode::Packing => exact_max_packing(&inst.graph, &spec, &cfg)?,
                Mode::Hitting => exact_min_hitting(&inst.graph, &spec, &cfg)?,
            };
            let mut text = format!("{}\n", res.optimum);
            match res.witness {
                Witness::Packing(ps) => ps.iter().for_each(|p| text.push_str(&format!("{p}\n"))),
                Witness::Hitting(es) => es.iter().filter_map(|&e| inst.graph.endpoints(e)).for_each(|(u, v)| {
                    text.push_str(&format!("{u} {v}\n"));
                }),
            }
            emit(out, None, &text)
        }
        Command::Bounds { func, k, len } => {
            if k == 0 || len == 0 {
                return Err(Failure::usage("k and len must be positive"));
            }
            let v = BoundTable::new().value(func, k, len);
            emit(out, None, &v.to_string())
        }
        Command::Gen { n, p, seed, kind, a, b, parts, out: path } => {
            let params = GenParams { n, p, seed, kind, a, b, parts };
            let inst = gen_random(&params).map_err(Failure::usage)?;
            emit(out, path.as_deref(), &inst.to_string())
        }
        Command::Verify { input, cert } => {
            let inst = load(&input)?;
            let doc = CertificateDoc::from_json(&read(&cert)?).map_err(Failure::usage)?;
            verify_doc(&inst, &doc, &engine_cap()?)?;
            emit(out, None, "OK")
        }
    }
}

/// Runs one command line (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = if e.use_stderr() { write!(err, "{e}") } else { write!(out, "{e}") };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(()) => EXIT_OK,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}
