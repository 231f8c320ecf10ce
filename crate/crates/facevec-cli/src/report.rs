//! Single-instance reports for the `cyclic` and `ordinary` subcommands.
//!
//! Big integers serialize as decimal strings in JSON and plain decimal in
//! CSV — f-vector entries overflow doubles almost immediately, so lossy
//! number encodings are never used.

use std::io::Write;

use serde_json::json;

use facevec::{
    cyclic_f, cyclic_h, cyclic_half_f, face_correction, face_correction_border, is_log_concave,
    ordinary_f_closed, ordinary_f_triangle, CheckResult, OffsetVec, PolytopeParams,
};

use crate::{CliResult, Failure, Format};

/// Everything one invocation computed, ready for any output format.
pub struct Instance {
    pub d: u32,
    pub k: u32,
    pub n: u32,
    pub f: OffsetVec,
    pub h: Option<OffsetVec>,
    pub log_concave: CheckResult,
    pub routes_agree: Option<bool>,
    pub warnings: Vec<String>,
    /// (u, v, c) border vectors, odd dimension with --verbose only.
    pub borders: Option<(OffsetVec, OffsetVec, OffsetVec)>,
    pub dispatch_note: Option<String>,
}

pub fn cmd_cyclic(d: u32, vertices: u32, format: Format) -> CliResult {
    let h = cyclic_h(d, vertices)?;
    let f = cyclic_f(d, vertices)?;
    let log_concave = is_log_concave(&f);
    let instance = Instance {
        d,
        k: vertices - 1,
        n: vertices - 1,
        f,
        h: Some(h),
        log_concave,
        routes_agree: None,
        warnings: vec![],
        borders: None,
        dispatch_note: None,
    };
    emit(&instance, format)?;
    fail_loud(&instance)
}

pub fn cmd_ordinary(
    d: u32,
    k: u32,
    n: u32,
    strict: bool,
    verbose: bool,
    format: Format,
) -> CliResult {
    let params = if strict {
        PolytopeParams::strict(d, k, n)?
    } else {
        PolytopeParams::new(d, k, n)?
    };
    let warnings: Vec<String> = params.warnings().iter().map(|w| w.to_string()).collect();

    let (f, routes_agree, h, borders, dispatch_note) = if params.is_odd() {
        let triangle = ordinary_f_triangle(d, k, n)?;
        let closed = ordinary_f_closed(d, k, n)?;
        let agree = triangle == closed;
        let h = cyclic_h(d, k + 1)?;
        let borders = if verbose {
            Some((
                face_correction_border(d, k)?,
                cyclic_half_f(d, k + 1)?,
                face_correction(d, k)?,
            ))
        } else {
            None
        };
        (triangle, Some(agree), h, borders, None)
    } else {
        let f = cyclic_f(d, n + 1)?;
        let h = cyclic_h(d, n + 1)?;
        let note = format!("even dimension: the polytope is cyclic, f = cyclic_f({d}, {})", n + 1);
        (f, None, h, None, Some(note))
    };

    let log_concave = is_log_concave(&f);
    let instance = Instance {
        d,
        k,
        n,
        f,
        h: if verbose { Some(h) } else { None },
        log_concave,
        routes_agree,
        warnings,
        borders,
        dispatch_note,
    };
    emit(&instance, format)?;
    fail_loud(&instance)
}

/// The theorem says neither of these can happen; if one does, exit 1 so
/// pipelines notice.
fn fail_loud(instance: &Instance) -> CliResult {
    if instance.routes_agree == Some(false) {
        return Err(Failure::Check(format!(
            "the two f-vector routes disagree at d={} k={} n={}",
            instance.d, instance.k, instance.n
        )));
    }
    if let Some(w) = instance.log_concave.witness() {
        return Err(Failure::Check(format!(
            "f-vector is not log-concave at index {}: {} > {}",
            w.index, w.lhs, w.rhs
        )));
    }
    Ok(())
}

fn emit(instance: &Instance, format: Format) -> CliResult {
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match format {
        Format::Text => render_text(instance, &mut out)?,
        Format::Json => {
            serde_json::to_writer_pretty(&mut out, &instance_json(instance))
                .map_err(|e| Failure::Usage(format!("json encoding failed: {e}")))?;
            writeln!(out)?;
        }
        Format::Csv => render_csv(instance, &mut out)?,
    }
    Ok(())
}

fn render_text(i: &Instance, out: &mut impl Write) -> std::io::Result<()> {
    if let Some(note) = &i.dispatch_note {
        writeln!(out, "{note}")?;
    }
    if let Some((u, v, c)) = &i.borders {
        writeln!(out, "u = {u}")?;
        writeln!(out, "v = {v}")?;
        writeln!(out, "c = {c}")?;
    }
    if let Some(h) = &i.h {
        writeln!(out, "h = {h}")?;
    }
    writeln!(out, "f = {}", i.f)?;
    if let Some(agree) = i.routes_agree {
        writeln!(out, "routes_agree = {agree}")?;
    }
    match i.log_concave.witness() {
        None => writeln!(out, "log_concave = true")?,
        Some(w) => writeln!(
            out,
            "log_concave = false (index {}: {} > {})",
            w.index, w.lhs, w.rhs
        )?,
    }
    for w in &i.warnings {
        writeln!(out, "warning: {w}")?;
    }
    Ok(())
}

pub fn instance_json(i: &Instance) -> serde_json::Value {
    let mut value = json!({
        "d": i.d,
        "k": i.k,
        "n": i.n,
        "f": i.f.to_decimal_strings(),
        "log_concave": i.log_concave.holds(),
        "witness": i.log_concave.witness().map(|w| w.index),
        "routes_agree": i.routes_agree,
        "warnings": i.warnings,
    });
    let map = value.as_object_mut().expect("object literal");
    if let Some(h) = &i.h {
        map.insert("h".into(), json!(h.to_decimal_strings()));
    }
    if let Some((u, v, c)) = &i.borders {
        map.insert("u".into(), json!(u.to_decimal_strings()));
        map.insert("v".into(), json!(v.to_decimal_strings()));
        map.insert("c".into(), json!(c.to_decimal_strings()));
    }
    value
}

fn render_csv(i: &Instance, out: &mut impl Write) -> CliResult {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["d", "k", "n", "j", "f_j", "log_concave"])
        .map_err(csv_err)?;
    write_f_rows(&mut w, i.d, i.k, i.n, &i.f, i.log_concave.holds())?;
    w.flush()?;
    Ok(())
}

/// Long-form rows shared with the sweep: one row per face dimension.
pub fn write_f_rows<W: Write>(
    w: &mut csv::Writer<W>,
    d: u32,
    k: u32,
    n: u32,
    f: &OffsetVec,
    log_concave: bool,
) -> CliResult {
    for (pos, entry) in f.entries().iter().enumerate() {
        let j = f.start() + pos as i64;
        w.write_record([
            d.to_string(),
            k.to_string(),
            n.to_string(),
            j.to_string(),
            entry.to_string(),
            log_concave.to_string(),
        ])
        .map_err(csv_err)?;
    }
    Ok(())
}

pub fn csv_err(e: csv::Error) -> Failure {
    Failure::Usage(format!("csv encoding failed: {e}"))
}
