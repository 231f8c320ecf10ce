//! Health check: the golden pipeline, an oracle spot check, and the
//! property suites at reduced iteration counts. Deterministic for a given
//! seed; exits 0 on success, 1 on the first mathematical failure.

use num_bigint::BigInt;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use facevec::generate::{extension_pair, log_concave_positive};
use facevec::{
    cyclic_f, f_to_h, gale_face_census, h_to_f, is_log_concave, mixed_binomial_seq, ordinary_f,
    ordinary_f_closed, ordinary_f_triangle, pascal_extend, pascal_run, OffsetVec, PolytopeParams,
};

use crate::{CliResult, Failure};

const REDUCED_ITERATIONS: usize = 200;

fn step(name: &str, ok: bool, detail: impl FnOnce() -> String) -> CliResult {
    if ok {
        println!("ok {name}");
        Ok(())
    } else {
        println!("FAIL {name}");
        Err(Failure::Check(format!("{name}: {}", detail())))
    }
}

pub fn cmd_selftest(seed: u64) -> CliResult {
    let golden = ordinary_f(&PolytopeParams::new(5, 7, 9)?)?;
    step(
        "golden pipeline P(5,7,9)",
        golden == OffsetVec::from_u64s(-1, &[1, 10, 40, 76, 70, 26]),
        || format!("got {golden}"),
    )?;

    let census = gale_face_census(8, 5)?.into_counts();
    let formula = cyclic_f(5, 8)?;
    step("oracle census C(8,5)", census == formula, || {
        format!("census {census} vs formula {formula}")
    })?;

    let mut route_ok = true;
    for d in [5u32, 7] {
        for k in d..=20 {
            for n in k..=20 {
                route_ok &= ordinary_f_closed(d, k, n)? == ordinary_f_triangle(d, k, n)?;
            }
        }
    }
    step("route equivalence (d<=7, n<=20)", route_ok, String::new)?;

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut run_ok = true;
    for _ in 0..REDUCED_ITERATIONS {
        let b = log_concave_positive(&mut rng, 12, 1_000_000);
        run_ok &= is_log_concave(&pascal_run(&b)).holds();
    }
    step("triangle run preserves log-concavity", run_ok, String::new)?;

    let mut extend_ok = true;
    for _ in 0..REDUCED_ITERATIONS {
        let (a, borders) = extension_pair(&mut rng, 12, 1_000_000);
        extend_ok &= is_log_concave(&pascal_extend(&a, &borders)).holds();
    }
    step(
        "bordered extension preserves log-concavity",
        extend_ok,
        String::new,
    )?;

    let mut family_ok = true;
    for n in 1..=50u64 {
        for m in [1u64, 2, 3, 1_000] {
            family_ok &= is_log_concave(&mixed_binomial_seq(n, m, n as usize + 2)?).holds();
        }
    }
    step("mixed binomial family log-concave", family_ok, String::new)?;

    let mut convert_ok = true;
    for d in 5..=10u32 {
        for _ in 0..50 {
            let mut entries: Vec<BigInt> = Vec::with_capacity(d as usize + 1);
            for _ in 0..=d {
                entries.push(BigInt::from(rand::Rng::random_range(&mut rng, 0u64..=1_000_000)));
            }
            let h = OffsetVec::new(0, entries)?;
            let f = h_to_f(&h, d)?;
            convert_ok &= f == pascal_run(&h);
            convert_ok &= f_to_h(&f, d)?.vec == h;
        }
    }
    step("conversion identities", convert_ok, String::new)?;

    println!("selftest passed (seed {seed})");
    Ok(())
}
