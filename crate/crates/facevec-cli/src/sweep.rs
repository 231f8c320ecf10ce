//! The verification sweep: evaluate every grid point, run the selected
//! checks, stream results in deterministic grid order no matter how many
//! workers are used.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;
use std::time::{Duration, Instant};

use clap::ValueEnum;
use num_bigint::BigInt;
use rayon::prelude::*;
use serde_json::json;

use facevec::generate::extension_hypothesis;
use facevec::{
    cyclic_h, cyclic_half_f, face_correction_border, is_log_concave, is_unimodal, ordinary_f,
    ordinary_f_closed, ordinary_f_triangle, CheckResult, OffsetVec, PolytopeParams,
};

use crate::{report, CliResult, Failure, Format};

/// Grid points are processed in parallel chunks of this size and emitted
/// sequentially, so memory stays bounded and output order never depends on
/// the worker count.
const CHUNK: usize = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CheckKind {
    All,
    #[value(name = "log-concave")]
    LogConcave,
    Unimodal,
    Route,
    Border,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct CheckSet {
    pub log_concave: bool,
    pub unimodal: bool,
    pub route: bool,
    pub border: bool,
}

impl CheckSet {
    fn from_kinds(kinds: &[CheckKind]) -> Self {
        let mut set = CheckSet::default();
        for kind in kinds {
            match kind {
                CheckKind::All => {
                    set.log_concave = true;
                    set.unimodal = true;
                    set.route = true;
                    set.border = true;
                }
                CheckKind::LogConcave => set.log_concave = true,
                CheckKind::Unimodal => set.unimodal = true,
                CheckKind::Route => set.route = true,
                CheckKind::Border => set.border = true,
            }
        }
        set
    }
}

pub struct SweepArgs {
    pub d_set: Vec<u32>,
    pub k_max: u32,
    pub n_max: u32,
    pub checks: Vec<CheckKind>,
    pub jobs: Option<usize>,
    pub output: Option<PathBuf>,
    pub format: Format,
    pub stream: bool,
}

/// One evaluated grid point with its verdicts. `None` means the check was
/// not selected or does not apply (route/border in even dimension).
pub struct PointOutcome {
    pub d: u32,
    pub k: u32,
    pub n: u32,
    pub f: OffsetVec,
    pub log_concave: Option<CheckResult>,
    pub unimodal: Option<CheckResult>,
    pub routes_agree: Option<bool>,
    pub border_ok: Option<bool>,
    pub warnings: Vec<String>,
}

impl PointOutcome {
    fn passed(&self) -> bool {
        self.failure_description().is_none()
    }

    fn failure_description(&self) -> Option<String> {
        if let Some(Some(w)) = self.log_concave.as_ref().map(CheckResult::witness) {
            return Some(format!(
                "log-concavity failed at index {}: {} > {}",
                w.index, w.lhs, w.rhs
            ));
        }
        if let Some(Some(w)) = self.unimodal.as_ref().map(CheckResult::witness) {
            return Some(format!(
                "unimodality failed at index {}: {} after {}",
                w.index, w.lhs, w.rhs
            ));
        }
        if self.routes_agree == Some(false) {
            return Some("the closed-form and triangle routes disagree".into());
        }
        if self.border_ok == Some(false) {
            return Some("the border hypotheses (log-concave seed, nonincreasing tail, seam) failed".into());
        }
        None
    }
}

pub struct SweepFailure {
    pub d: u32,
    pub k: u32,
    pub n: u32,
    pub detail: String,
}

/// Summary of one sweep run; `failures` empty exactly when the exit code
/// is zero.
pub struct SweepReport {
    pub d_set: Vec<u32>,
    pub k_max: u32,
    pub n_max: u32,
    pub total: u64,
    pub failures: Vec<SweepFailure>,
    pub elapsed: Duration,
}

pub fn cmd_sweep(args: SweepArgs) -> CliResult {
    let report = match &args.output {
        Some(path) => {
            let file = File::create(path)?;
            run_sweep(&args, BufWriter::new(file))?
        }
        None => {
            let stdout = std::io::stdout();
            run_sweep(&args, stdout.lock())?
        }
    };

    for f in &report.failures {
        eprintln!("FAIL d={} k={} n={}: {}", f.d, f.k, f.n, f.detail);
    }
    let dims: Vec<String> = report.d_set.iter().map(u32::to_string).collect();
    eprintln!(
        "sweep d={{{}}} k<={} n<={}: {} points, {} failures, {:?}",
        dims.join(","),
        report.k_max,
        report.n_max,
        report.total,
        report.failures.len(),
        report.elapsed
    );
    if report.failures.is_empty() {
        Ok(())
    } else {
        Err(Failure::Check(format!(
            "{} of {} grid points failed",
            report.failures.len(),
            report.total
        )))
    }
}

fn validate(args: &SweepArgs) -> Result<CheckSet, Failure> {
    if args.d_set.is_empty() {
        return Err(Failure::Usage("sweep needs at least one dimension".into()));
    }
    if let Some(&d) = args.d_set.iter().find(|&&d| d < 5) {
        return Err(Failure::Usage(format!(
            "dimension {d} below 5; face vectors in dimension < 5 are all log-concave"
        )));
    }
    if args.k_max > args.n_max {
        return Err(Failure::Usage(format!(
            "kmax {} exceeds nmax {}",
            args.k_max, args.n_max
        )));
    }
    if args.d_set.iter().all(|&d| d > args.k_max) {
        return Err(Failure::Usage(format!(
            "kmax {} below every requested dimension, the grid is empty",
            args.k_max
        )));
    }
    if args.stream && args.format != Format::Json {
        return Err(Failure::Usage("--stream requires --format json".into()));
    }
    if args.format == Format::Text {
        return Err(Failure::Usage(
            "sweep emits machine-readable results; use --format csv or json".into(),
        ));
    }
    Ok(CheckSet::from_kinds(&args.checks))
}

fn grid(args: &SweepArgs) -> Vec<(u32, u32, u32)> {
    let mut d_set = args.d_set.clone();
    d_set.sort_unstable();
    d_set.dedup();
    let mut points = Vec::new();
    for &d in &d_set {
        for k in d..=args.k_max.min(args.n_max) {
            for n in k..=args.n_max {
                points.push((d, k, n));
            }
        }
    }
    points
}

fn run_sweep<W: Write>(args: &SweepArgs, mut out: W) -> Result<SweepReport, Failure> {
    let checks = validate(args)?;
    let started = Instant::now();
    let points = grid(args);

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(args.jobs.unwrap_or(0))
        .build()
        .map_err(|e| Failure::Usage(format!("worker pool: {e}")))?;

    let mut failures = Vec::new();
    let mut emitter = Emitter::new(&mut out, args.format, args.stream);
    emitter.begin()?;
    for chunk in points.chunks(CHUNK) {
        let outcomes: Vec<PointOutcome> = pool.install(|| {
            chunk
                .par_iter()
                .map(|&(d, k, n)| evaluate_point(d, k, n, checks))
                .collect()
        });
        for outcome in &outcomes {
            emitter.point(outcome)?;
            if !outcome.passed() {
                failures.push(SweepFailure {
                    d: outcome.d,
                    k: outcome.k,
                    n: outcome.n,
                    detail: outcome.failure_description().unwrap_or_default(),
                });
            }
        }
    }
    emitter.finish()?;

    Ok(SweepReport {
        d_set: args.d_set.clone(),
        k_max: args.k_max,
        n_max: args.n_max,
        total: points.len() as u64,
        failures,
        elapsed: started.elapsed(),
    })
}

fn evaluate_point(d: u32, k: u32, n: u32, checks: CheckSet) -> PointOutcome {
    let params = PolytopeParams::new(d, k, n).expect("grid points are pre-validated");
    let f = ordinary_f(&params).expect("grid evaluation is total");
    let odd = params.is_odd();

    let routes_agree = if checks.route && odd {
        let closed = ordinary_f_closed(d, k, n).expect("odd grid point");
        let triangle = ordinary_f_triangle(d, k, n).expect("odd grid point");
        Some(closed == triangle)
    } else {
        None
    };

    let border_ok = if checks.border && odd {
        let m = params.half() as i64;
        let h = cyclic_h(d, k + 1).expect("grid point");
        let tail = h.entries_from(m + 1).expect("tail exists");
        let u = face_correction_border(d, k).expect("grid point");
        let v = cyclic_half_f(d, k + 1).expect("grid point");
        let seed = v
            .try_add(&u.scaled(&BigInt::from(n - k)))
            .expect("same shape");
        Some(extension_hypothesis(&seed, tail))
    } else {
        None
    };

    PointOutcome {
        d,
        k,
        n,
        log_concave: checks.log_concave.then(|| is_log_concave(&f)),
        unimodal: checks.unimodal.then(|| is_unimodal(&f)),
        routes_agree,
        border_ok,
        warnings: params.warnings().iter().map(|w| w.to_string()).collect(),
        f,
    }
}

/// Streams results in one of the three layouts while holding only the
/// current point in memory.
enum Emitter<'w, W: Write> {
    Csv(csv::Writer<&'w mut W>),
    JsonArray { out: &'w mut W, first: bool },
    JsonLines(&'w mut W),
}

impl<'w, W: Write> Emitter<'w, W> {
    fn new(out: &'w mut W, format: Format, stream: bool) -> Self {
        match (format, stream) {
            (Format::Json, true) => Emitter::JsonLines(out),
            (Format::Json, false) => Emitter::JsonArray { out, first: true },
            _ => Emitter::Csv(csv::Writer::from_writer(out)),
        }
    }

    fn begin(&mut self) -> CliResult {
        match self {
            Emitter::Csv(w) => w
                .write_record(["d", "k", "n", "j", "f_j", "log_concave"])
                .map_err(report::csv_err),
            Emitter::JsonArray { out, .. } => {
                write!(out, "[")?;
                Ok(())
            }
            Emitter::JsonLines(_) => Ok(()),
        }
    }

    fn point(&mut self, p: &PointOutcome) -> CliResult {
        match self {
            Emitter::Csv(w) => report::write_f_rows(
                w,
                p.d,
                p.k,
                p.n,
                &p.f,
                p.log_concave.as_ref().is_none_or(CheckResult::holds),
            ),
            Emitter::JsonArray { out, first } => {
                if *first {
                    *first = false;
                    writeln!(out)?;
                } else {
                    writeln!(out, ",")?;
                }
                write!(out, "{}", point_json(p))?;
                Ok(())
            }
            Emitter::JsonLines(out) => {
                writeln!(out, "{}", point_json(p))?;
                Ok(())
            }
        }
    }

    fn finish(&mut self) -> CliResult {
        match self {
            Emitter::Csv(w) => {
                w.flush()?;
                Ok(())
            }
            Emitter::JsonArray { out, first } => {
                if *first {
                    writeln!(out, "]")?;
                } else {
                    writeln!(out, "\n]")?;
                }
                Ok(())
            }
            Emitter::JsonLines(out) => {
                out.flush()?;
                Ok(())
            }
        }
    }
}

fn point_json(p: &PointOutcome) -> serde_json::Value {
    json!({
        "d": p.d,
        "k": p.k,
        "n": p.n,
        "f": p.f.to_decimal_strings(),
        "log_concave": p.log_concave.as_ref().map(CheckResult::holds),
        "witness": p.log_concave.as_ref().and_then(|c| c.witness().map(|w| w.index)),
        "unimodal": p.unimodal.as_ref().map(CheckResult::holds),
        "routes_agree": p.routes_agree,
        "border_ok": p.border_ok,
        "warnings": p.warnings,
    })
}
