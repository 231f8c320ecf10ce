//! Browser bindings for the interactive demo page under `www/`.
//!
//! Every export takes plain numbers or strings and returns a JSON string
//! (big integers as decimal strings — f-vector entries outgrow doubles
//! fast). Errors come back as plain messages for the page to display.
//! The functions are ordinary Rust underneath, so the whole surface is
//! unit-tested natively.

use num_bigint::BigInt;
use wasm_bindgen::prelude::*;

use facevec::{
    cyclic_h, cyclic_half_f, face_correction, face_correction_border, gale_face_census,
    is_log_concave, is_unimodal, ordinary_f_closed, ordinary_f_triangle, pascal_extend_traced,
    pascal_run_traced, CheckResult, OffsetVec, PolytopeParams, TriangleTrace,
};

fn err(e: facevec::Error) -> String {
    e.to_string()
}

fn verdict_json(check: &CheckResult) -> serde_json::Value {
    serde_json::json!({
        "holds": check.holds(),
        "witness": check.witness().map(|w| serde_json::json!({
            "index": w.index,
            "lhs": w.lhs.to_string(),
            "rhs": w.rhs.to_string(),
        })),
    })
}

fn trace_json(trace: &TriangleTrace) -> serde_json::Value {
    let rows: Vec<Vec<String>> = trace
        .rows()
        .iter()
        .map(OffsetVec::to_decimal_strings)
        .collect();
    let appended: Vec<String> = trace.appended().iter().map(BigInt::to_string).collect();
    serde_json::json!({ "rows": rows, "appended": appended })
}

/// Face vectors and verdicts for the ordinary polytope P(d, k, n),
/// including the border vectors and the triangle trace that produced the
/// f-vector (odd dimension) or the cyclic dispatch (even dimension).
#[wasm_bindgen]
pub fn ordinary_report(d: u32, k: u32, n: u32) -> Result<String, String> {
    let params = PolytopeParams::new(d, k, n).map_err(err)?;
    let warnings: Vec<String> = params.warnings().iter().map(|w| w.to_string()).collect();

    let report = if params.is_odd() {
        let u = face_correction_border(d, k).map_err(err)?;
        let v = cyclic_half_f(d, k + 1).map_err(err)?;
        let c = face_correction(d, k).map_err(err)?;
        let seed = v.try_add(&u.scaled(&BigInt::from(n - k))).map_err(err)?;
        let h = cyclic_h(d, k + 1).map_err(err)?;
        let tail = h.entries_from(params.half() as i64 + 1).map_err(err)?;
        let (f, trace) = pascal_extend_traced(&seed, tail);
        let closed = ordinary_f_closed(d, k, n).map_err(err)?;
        debug_assert_eq!(f, ordinary_f_triangle(d, k, n).map_err(err)?);
        serde_json::json!({
            "d": d, "k": k, "n": n,
            "vertices": n + 1,
            "dispatch": "triangle",
            "f": f.to_decimal_strings(),
            "h": h.to_decimal_strings(),
            "u": u.to_decimal_strings(),
            "v": v.to_decimal_strings(),
            "c": c.to_decimal_strings(),
            "seed": seed.to_decimal_strings(),
            "triangle": trace_json(&trace),
            "log_concave": verdict_json(&is_log_concave(&f)),
            "unimodal": verdict_json(&is_unimodal(&f)),
            "routes_agree": f == closed,
            "warnings": warnings,
        })
    } else {
        let h = cyclic_h(d, n + 1).map_err(err)?;
        let (f, trace) = pascal_run_traced(&h);
        serde_json::json!({
            "d": d, "k": k, "n": n,
            "vertices": n + 1,
            "dispatch": "cyclic",
            "f": f.to_decimal_strings(),
            "h": h.to_decimal_strings(),
            "triangle": trace_json(&trace),
            "log_concave": verdict_json(&is_log_concave(&f)),
            "unimodal": verdict_json(&is_unimodal(&f)),
            "routes_agree": serde_json::Value::Null,
            "warnings": warnings,
        })
    };
    Ok(report.to_string())
}

/// Run a border vector through the triangle from scratch; `borders` is a
/// comma-separated list of integers of any size.
#[wasm_bindgen]
pub fn border_triangle(borders: &str) -> Result<String, String> {
    let entries: Vec<BigInt> = borders
        .split(',')
        .map(|tok| {
            tok.trim()
                .parse::<BigInt>()
                .map_err(|_| format!("not an integer: {tok:?}"))
        })
        .collect::<Result<_, _>>()?;
    if entries.iter().any(|e| e < &BigInt::ZERO) {
        return Err("border entries must be nonnegative".into());
    }
    let row = OffsetVec::new(-1, entries).map_err(err)?;
    let (last, trace) = pascal_run_traced(&row);
    Ok(serde_json::json!({
        "triangle": trace_json(&trace),
        "result": last.to_decimal_strings(),
        "log_concave": verdict_json(&is_log_concave(&last)),
        "unimodal": verdict_json(&is_unimodal(&last)),
    })
    .to_string())
}

/// Brute-force face census of the cyclic polytope against the closed-form
/// f-vector. Capped at 13 vertices to keep the page snappy.
#[wasm_bindgen]
pub fn oracle_check(vertices: u32, d: u32) -> Result<String, String> {
    const PAGE_CAP: u32 = 13;
    if vertices > PAGE_CAP {
        return Err(format!("demo caps the census at {PAGE_CAP} vertices"));
    }
    let census = gale_face_census(vertices, d).map_err(err)?;
    let formula = facevec::cyclic_f(d, vertices).map_err(err)?;
    let facets = facevec::gale_facets(vertices, d).map_err(err)?;
    Ok(serde_json::json!({
        "vertices": vertices,
        "d": d,
        "census": census.counts().to_decimal_strings(),
        "formula": formula.to_decimal_strings(),
        "agree": census.counts() == &formula,
        "facet_count": facets.len(),
        "facets": facets.facets(),
    })
    .to_string())
}
