//! Plain-text rendering of bordered Pascal triangles: one row per line,
//! fixed-width columns sized to the widest entry in the trace, the appended
//! border in a marked column after each row that consumed one.

use num_bigint::BigInt;

use facevec::{
    cyclic_h, cyclic_half_f, face_correction_border, pascal_extend_traced, pascal_run_traced,
    OffsetVec, PolytopeParams, TriangleTrace,
};

use crate::{CliResult, Failure};

pub fn cmd_triangle(
    ordinary: Option<String>,
    c: Option<String>,
    f: Option<String>,
    t: Option<String>,
) -> CliResult {
    let trace = match (ordinary, c, f, t) {
        (Some(spec), None, None, None) => ordinary_trace(&spec)?,
        (None, Some(spec), None, None) => correction_trace(&spec)?,
        (None, None, Some(spec), None) => {
            let borders = parse_vec(&spec)?;
            let row = OffsetVec::new(-1, borders)
                .map_err(|e| Failure::Usage(format!("--f: {e}")))?;
            pascal_run_traced(&row).1
        }
        (None, None, None, Some(spec)) => extend_trace(&spec)?,
        _ => {
            return Err(Failure::Usage(
                "triangle needs exactly one of --ordinary, --c, --f, --t".into(),
            ))
        }
    };
    print!("{}", render(&trace));
    Ok(())
}

fn ordinary_trace(spec: &str) -> Result<TriangleTrace, Failure> {
    let [d, k, n] = parse_fixed::<3>(spec, "--ordinary expects d,k,n")?;
    let params = PolytopeParams::new(d, k, n)?;
    if !params.is_odd() {
        return Err(Failure::Usage(format!(
            "even dimension is cyclic; render its triangle with --f over cyclic_h({d}, {})",
            n + 1
        )));
    }
    let u = face_correction_border(d, k)?;
    let v = cyclic_half_f(d, k + 1)?;
    let seed = v.try_add(&u.scaled(&BigInt::from(n - k)))?;
    let h = cyclic_h(d, k + 1)?;
    let tail = h.entries_from(params.half() as i64 + 1)?;
    Ok(pascal_extend_traced(&seed, tail).1)
}

fn correction_trace(spec: &str) -> Result<TriangleTrace, Failure> {
    let [d, k] = parse_fixed::<2>(spec, "--c expects d,k")?;
    let u = face_correction_border(d, k)?;
    let zeros = vec![BigInt::ZERO; (d as usize - 1) / 2 + 1];
    Ok(pascal_extend_traced(&u, &zeros).1)
}

fn extend_trace(spec: &str) -> Result<TriangleTrace, Failure> {
    let (row, borders) = spec
        .split_once(':')
        .ok_or_else(|| Failure::Usage("--t expects row:borders".into()))?;
    let row = OffsetVec::new(-1, parse_vec(row)?)
        .map_err(|e| Failure::Usage(format!("--t row: {e}")))?;
    let borders = if borders.trim().is_empty() {
        vec![]
    } else {
        parse_vec(borders)?
    };
    Ok(pascal_extend_traced(&row, &borders).1)
}

fn parse_vec(spec: &str) -> Result<Vec<BigInt>, Failure> {
    spec.split(',')
        .map(|tok| {
            tok.trim()
                .parse::<BigInt>()
                .map_err(|_| Failure::Usage(format!("not an integer: {tok:?}")))
        })
        .collect()
}

fn parse_fixed<const N: usize>(spec: &str, usage: &str) -> Result<[u32; N], Failure> {
    let parts: Vec<u32> = spec
        .split(',')
        .map(|tok| {
            tok.trim()
                .parse::<u32>()
                .map_err(|_| Failure::Usage(format!("{usage}; not a number: {tok:?}")))
        })
        .collect::<Result<_, _>>()?;
    parts
        .try_into()
        .map_err(|_| Failure::Usage(usage.to_string()))
}

pub fn render(trace: &TriangleTrace) -> String {
    let width = trace
        .rows()
        .iter()
        .flat_map(|r| r.entries().iter())
        .chain(trace.appended().iter())
        .map(|e| e.to_string().len())
        .max()
        .unwrap_or(1);
    let mut out = String::new();
    for (i, row) in trace.rows().iter().enumerate() {
        let cells: Vec<String> = row
            .entries()
            .iter()
            .map(|e| format!("{e:>width$}"))
            .collect();
        out.push('(');
        out.push_str(&cells.join(" "));
        out.push(')');
        if let Some(border) = trace.appended().get(i) {
            out.push_str(&format!(" | {border:>width$}"));
        }
        out.push('\n');
    }
    out
}
