//! `terw`: Terwilliger algebra dimensions, radicals and structural checks
//! for association schemes given as built-ins or files.
//!
//! Exit codes: 0 success, 1 input error, 2 the input is not a valid scheme,
//! 3 an internal cross-check or theorem check failed.

mod render;
mod source;

use std::fmt::Write as _;
use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use terwilliger::exactlin::Prime;
use terwilliger::schemes::SubconstituentFrame;
use terwilliger::talgebra::{
    all_ones_corners, check_tactical_configurations, corner_implication, table_report, valency_criterion,
    verify_johnson_products, ReportOptions, SchemeJob, SchemeTable, TAlgebraError,
};

use render::Format;
use source::{Builtin, Loaded, Source};

#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    pub fn input(message: impl Into<String>) -> Self {
        CliError { code: 1, message: message.into() }
    }

    pub fn validation(message: impl Into<String>) -> Self {
        CliError { code: 2, message: message.into() }
    }

    pub fn violation(message: impl Into<String>) -> Self {
        CliError { code: 3, message: message.into() }
    }
}

impl From<TAlgebraError> for CliError {
    fn from(e: TAlgebraError) -> Self {
        CliError::violation(e.to_string())
    }
}

#[derive(Parser)]
#[command(name = "terw", version, about = "Terwilliger algebras of association schemes over Q, Z and prime fields")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a scheme or graph file and print its parameters.
    Verify {
        file: PathBuf,
    },
    /// Dimensions, elementary divisors and radicals of T(x) per point and characteristic.
    Tdim {
        #[command(flatten)]
        job: JobArgs,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Run the structural checks on every selected point and prime.
    Check {
        #[command(flatten)]
        job: JobArgs,
    },
    /// Write a built-in scheme (johnson:N) or graph (rook4, shrikhande, chang:1|2|3) in the file format.
    Emit {
        builtin: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct JobArgs {
    /// Built-in: johnson:N, rook4, shrikhande, chang (all three) or chang:1|2|3. Repeatable.
    #[arg(long = "scheme")]
    schemes: Vec<String>,
    /// Scheme file (`n r` header) or graph file (`n` header). Repeatable.
    #[arg(long = "file")]
    files: Vec<PathBuf>,
    /// `all` or a comma-separated list of 1-based points.
    #[arg(long, default_value = "all")]
    points: String,
    /// Comma-separated characteristics; 0 means the rationals.
    #[arg(long, default_value = "0,2,3,5,7,11,13")]
    chars: String,
    /// Worker threads (default: one per core).
    #[arg(long)]
    jobs: Option<usize>,
    /// Write the report here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Skip the corner algebras.
    #[arg(long)]
    no_corners: bool,
    /// Report dimensions only: no radicals and no corners.
    #[arg(long)]
    dims_only: bool,
    /// Check ideal closure, nilpotency and the quotient of every radical.
    #[arg(long)]
    verify_radicals: bool,
}

fn parse_chars(spec: &str) -> Result<(Vec<u32>, Vec<Prime>), CliError> {
    let mut chars = Vec::new();
    for part in spec.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let c: u32 = part.parse().map_err(|_| CliError::input(format!("`{part}` is not a characteristic")))?;
        if c != 0 {
            Prime::new(c).map_err(|_| CliError::input(format!("{c} is not prime")))?;
        }
        chars.push(c);
    }
    chars.sort_unstable();
    chars.dedup();
    if chars.is_empty() {
        return Err(CliError::input("no characteristics given"));
    }
    let primes = chars.iter().filter(|&&c| c != 0).map(|&c| Prime::new(c).expect("checked above")).collect();
    Ok((chars, primes))
}

/// 0-based point indices from `all` or a 1-based list.
fn parse_points(spec: &str, order: usize, name: &str) -> Result<Vec<usize>, CliError> {
    if spec.trim() == "all" {
        return Ok((0..order).collect());
    }
    let mut points = Vec::new();
    for part in spec.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let x: usize = part.parse().map_err(|_| CliError::input(format!("`{part}` is not a point number")))?;
        if x == 0 || x > order {
            return Err(CliError::input(format!("point {x} is out of range 1..={order} for {name}")));
        }
        points.push(x - 1);
    }
    if points.is_empty() {
        return Err(CliError::input("no points given"));
    }
    Ok(points)
}

fn with_pool<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T, CliError> {
    match jobs {
        None => Ok(f()),
        Some(0) => Err(CliError::input("--jobs must be positive")),
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .map_err(|e| CliError::input(format!("cannot start {n} threads: {e}")))?;
            Ok(pool.install(f))
        }
    }
}

fn emit(out: Option<&PathBuf>, text: &str) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| CliError::input(format!("{}: {e}", path.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            // a closed pipe is not an error worth reporting
            let _ = stdout.write_all(text.as_bytes());
            Ok(())
        }
    }
}

struct Prepared {
    loaded: Vec<Loaded>,
    points: Vec<Vec<usize>>,
    chars: Vec<u32>,
    primes: Vec<Prime>,
}

fn prepare(job: &JobArgs) -> Result<Prepared, CliError> {
    let (chars, primes) = parse_chars(&job.chars)?;
    let sources = Source::collect(&job.schemes, &job.files)?;
    let loaded: Vec<Loaded> = sources.iter().map(Source::load).collect::<Result<_, _>>()?;
    let points =
        loaded.iter().map(|l| parse_points(&job.points, l.scheme.order(), &l.name)).collect::<Result<_, _>>()?;
    Ok(Prepared { loaded, points, chars, primes })
}

fn compute(p: &Prepared, job: &JobArgs, opts: ReportOptions) -> Result<Vec<SchemeTable>, CliError> {
    let jobs: Vec<SchemeJob<'_>> = p
        .loaded
        .iter()
        .zip(&p.points)
        .map(|(l, pts)| SchemeJob { name: l.name.clone(), scheme: &l.scheme, points: pts.clone() })
        .collect();
    Ok(with_pool(job.jobs, || table_report(&jobs, &p.primes, &opts))??)
}

fn cmd_verify(file: &Path) -> Result<String, CliError> {
    let l = source::load_file(file)?;
    let s = &l.scheme;
    let vals: Vec<String> = s.valencies().iter().map(|v| v.to_string()).collect();
    let yes_no = |b: bool| if b { "yes" } else { "no" };
    let mut out = String::new();
    if let Some(p) = l.srg {
        writeln!(out, "strongly regular graph {p}").unwrap();
    }
    writeln!(out, "order {}", s.order()).unwrap();
    writeln!(out, "rank {}, valencies {}", s.rank(), vals.join(" ")).unwrap();
    writeln!(out, "symmetric {}, commutative {}", yes_no(s.is_symmetric()), yes_no(s.is_commutative())).unwrap();
    Ok(out)
}

fn cmd_tdim(job: &JobArgs, format: Format) -> Result<(), CliError> {
    let p = prepare(job)?;
    let opts = ReportOptions {
        radicals: !job.dims_only,
        corners: !job.no_corners && !job.dims_only,
        verify_radicals: job.verify_radicals && !job.dims_only,
        char_zero: p.chars.contains(&0),
    };
    let tables = compute(&p, job, opts)?;
    for t in &tables {
        for r in &t.reports {
            if opts.char_zero && !r.char_zero.as_ref().is_some_and(|z| z.passed()) {
                return Err(CliError::violation(format!(
                    "{} point {}: characteristic-0 semisimplicity evidence failed",
                    t.scheme,
                    r.point + 1
                )));
            }
            for pr in &r.primes {
                if pr.radical_check.as_ref().is_some_and(|v| !v.passed()) {
                    return Err(CliError::violation(format!(
                        "{} point {} p = {}: radical verification failed: {:?}",
                        t.scheme,
                        r.point + 1,
                        pr.p,
                        pr.radical_check
                    )));
                }
            }
        }
    }
    emit(job.out.as_ref(), &render::render(format, &p.loaded, &tables, &p.chars))
}

/// Collects PASS/FAIL lines and findings.
#[derive(Default)]
struct Log {
    text: String,
    passed: usize,
    failed: usize,
    findings: usize,
}

impl Log {
    fn record(&mut self, ok: bool, what: String) {
        if ok {
            self.passed += 1;
        } else {
            self.failed += 1;
        }
        writeln!(self.text, "{} {what}", if ok { "PASS" } else { "FAIL" }).unwrap();
    }

    fn result(&mut self, what: String, r: Result<String, TAlgebraError>) {
        match r {
            Ok(detail) => self.record(true, format!("{what}: {detail}")),
            Err(e) => self.record(false, format!("{what}: {e}")),
        }
    }

    fn finding(&mut self, what: String) {
        self.findings += 1;
        writeln!(self.text, "FINDING {what}").unwrap();
    }
}

fn ss(b: bool) -> &'static str {
    if b {
        "ss"
    } else {
        "not ss"
    }
}

fn flags(v: &[bool]) -> String {
    let v: Vec<&str> = v.iter().map(|&b| ss(b)).collect();
    format!("[{}]", v.join(", "))
}

fn cmd_check(job: &JobArgs) -> Result<(), CliError> {
    let p = prepare(job)?;
    let opts = ReportOptions { radicals: true, corners: true, verify_radicals: job.verify_radicals, char_zero: true };
    let tables = compute(&p, job, opts)?;
    let mut log = Log::default();
    for (l, t) in p.loaded.iter().zip(&tables) {
        let valencies = l.scheme.valencies();
        for r in &t.reports {
            let at = format!("{} point {}", t.scheme, r.point + 1);
            let frame = SubconstituentFrame::new(&l.scheme, r.point).expect("points are in range");
            log.result(format!("{at}: tactical configurations"), check_tactical_configurations(&frame).map(|n| format!("{n} blocks")));
            let z = r.char_zero.expect("requested");
            log.record(
                z.passed(),
                format!(
                    "{at} char 0: semisimplicity evidence: dim {}, trace form rank {}, transpose closed {}",
                    z.dim, z.trace_form_rank, z.transpose_closed
                ),
            );
            for pr in &r.primes {
                let at = format!("{at} p = {}", pr.p);
                match corner_implication(r.point, pr) {
                    Ok(imp) => {
                        log.record(
                            true,
                            format!("{at}: corner implication: T(x) {}, corners {}", ss(imp.semisimple), flags(&imp.corners_semisimple)),
                        );
                        if imp.converse_fails {
                            log.finding(format!("{at}: every corner algebra is semisimple but T(x) is not"));
                        }
                    }
                    Err(e) => log.record(false, format!("{at}: corner implication: {e}")),
                }
                log.result(
                    format!("{at}: valency criterion"),
                    valency_criterion(valencies, r.point, pr).map(|applies| {
                        if applies { "p divides a valency, T(x) not semisimple".into() } else { "not applicable".into() }
                    }),
                );
                log.result(format!("{at}: all-ones corner ideals"), all_ones_corners(valencies, r.point, pr).map(|()| "consistent".into()));
                if let Some(v) = &pr.radical_check {
                    log.record(v.passed(), format!("{at}: radical verification: {v:?}"));
                }
            }
        }
        if let Some(n) = l.johnson {
            let dims: Vec<usize> = t.distinct_dims(0);
            let first = &t.reports[0];
            writeln!(
                log.text,
                "NOTE {}: {} nonzero generators, dim over Q {:?}, nontrivial divisors {:?}",
                t.scheme,
                first.generator_count,
                dims,
                first.divisors.nontrivial().iter().map(|d| d.to_string()).collect::<Vec<_>>()
            )
            .unwrap();
            if n >= 5 {
                log.result(
                    format!("{}: product identities", t.scheme),
                    verify_johnson_products(n).map(|j| {
                        format!(
                            "{} generator products leave ZT' and lie in ZT' + Z(n-4)M; dim {}, index {}",
                            j.exceptional.len(),
                            j.dim_q,
                            j.divisors.index()
                        )
                    }),
                );
            }
        }
    }
    writeln!(log.text, "{} passed, {} failed, {} findings", log.passed, log.failed, log.findings).unwrap();
    emit(job.out.as_ref(), &log.text)?;
    if log.failed > 0 {
        return Err(CliError::violation(format!("{} checks failed", log.failed)));
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Verify { file } => {
            let text = cmd_verify(&file)?;
            emit(None, &text)
        }
        Command::Tdim { job, format } => cmd_tdim(&job, format),
        Command::Check { job } => cmd_check(&job),
        Command::Emit { builtin, out } => emit(out.as_ref(), &Builtin::parse(&builtin)?.emit()),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("terw: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
