//! Acceptance criteria, one PASS/FAIL line each. Exits nonzero if any fails.

use std::process::Command;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use cyclic_faces::sweep::{run_sweep, Check, SweepConfig};
use cyclic_faces::{
    audit_dip_propagation, binom, build_triangle, f_vector_direct, f_vector_from_triangle,
    is_log_concave, lemma_check, oracle_f_vector, pascal_extend, pascal_row, Count, PolytopeParams,
    PositiveSequence, DEFAULT_ORACLE_CAP,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn params(v: u32, d: u32) -> PolytopeParams {
    PolytopeParams::new(v, d).unwrap()
}

fn sweep_failures(d: (u32, u32), v_max: u32, jobs: usize) -> (usize, usize, usize, Duration) {
    let cfg = SweepConfig {
        d_min: d.0,
        d_max: d.1,
        v_min: None,
        v_max,
        checks: vec![Check::LogConcave, Check::Euler, Check::Routes],
        jobs,
        ..SweepConfig::default()
    };
    let report = run_sweep(&cfg).expect("sweep runs");
    let count = |c| report.failures.iter().filter(|f| f.check == c).count();
    (
        report.checked,
        count(Check::LogConcave),
        count(Check::Euler) + count(Check::Routes),
        report.elapsed,
    )
}

fn theorem_desk_scale() -> Outcome {
    let (checked, lc, other, elapsed) = sweep_failures((2, 16), 200, 1);
    // sum over d of (200 - d)
    let expected: usize = (2..=16).map(|d| 200 - d).sum();
    if checked != expected {
        return Err(format!("checked {checked} pairs, expected {expected}"));
    }
    if lc + other > 0 {
        return Err(format!(
            "{lc} log-concavity failures, {other} Euler/route failures"
        ));
    }
    if elapsed > Duration::from_secs(120) {
        return Err(format!(
            "single-threaded sweep took {elapsed:.2?} (> 120 s)"
        ));
    }
    Ok(format!(
        "{checked} pairs, 0 failures, single-threaded {elapsed:.2?}"
    ))
}

fn schmitt_range() -> Outcome {
    let (checked, lc, other, elapsed) = sweep_failures((2, 12), 999, 0);
    let expected: usize = (2..=12).map(|d| 999 - d).sum();
    if checked != expected {
        return Err(format!("checked {checked} pairs, expected {expected}"));
    }
    if lc + other > 0 {
        return Err(format!(
            "{lc} log-concavity failures, {other} other failures"
        ));
    }
    if elapsed > Duration::from_secs(300) {
        return Err(format!("sweep took {elapsed:.2?} (> 300 s)"));
    }
    Ok(format!("{checked} pairs, 0 failures, {elapsed:.2?}"))
}

fn route_equivalence() -> Outcome {
    let mut n = 0;
    for d in 2..=16 {
        for v in d + 1..=100 {
            let p = params(v, d);
            let direct = f_vector_direct(p);
            let tri = f_vector_from_triangle(&build_triangle(p));
            if direct != tri {
                return Err(format!("{p}: direct [{direct}] vs triangle [{tri}]"));
            }
            n += 1;
        }
    }
    Ok(format!("{n} pairs identical"))
}

fn oracle_equivalence() -> Outcome {
    let worked = oracle_f_vector(params(6, 4), DEFAULT_ORACLE_CAP).map_err(|e| e.to_string())?;
    if worked.to_string() != "1 6 15 18 9 1" {
        return Err(format!("C(6,4) oracle gave [{worked}]"));
    }
    let mut n = 0;
    for v in 3..=12u32 {
        for d in 2..=8u32.min(v - 1) {
            let p = params(v, d);
            let oracle = oracle_f_vector(p, DEFAULT_ORACLE_CAP).map_err(|e| e.to_string())?;
            let direct = f_vector_direct(p);
            if oracle != direct {
                return Err(format!("{p}: oracle [{oracle}] vs direct [{direct}]"));
            }
            n += 1;
        }
    }
    Ok(format!("{n} pairs identical, C(6,4) = (1 6 15 18 9 1)"))
}

fn pascal_prefix() -> Outcome {
    // Locate the Pascal row by search first, for d <= 8.
    for d in 4..=8u32 {
        for v in d + 1..=d + 10 {
            let tri = build_triangle(params(v, d));
            for k in 0..d / 2 {
                let row = tri.row(k).unwrap();
                let found = (0..=2 * v as u64).find(|&n| {
                    let pr = pascal_row(n);
                    pr.len() >= row.len() && &pr[..row.len()] == row
                });
                if found != Some((v - d + k) as u64) {
                    return Err(format!("C({v},{d}) row {k}: search found {found:?}"));
                }
            }
        }
    }
    let mut rows = 0;
    for d in 4..=16u32 {
        for v in d + 1..=60 {
            let tri = build_triangle(params(v, d));
            for k in 0..d / 2 {
                let row = tri.row(k).unwrap();
                let pascal = pascal_row((v - d + k) as u64);
                if row != &pascal[..k as usize + 2] {
                    return Err(format!(
                        "C({v},{d}) row {k} is not a prefix of Pascal row {}",
                        v - d + k
                    ));
                }
                rows += 1;
            }
        }
    }
    Ok(format!("{rows} rows match Pascal row v-d+k"))
}

/// Positive log-concave sequence with leading 1, length <= 30, entries <= 1e9.
fn random_log_concave(rng: &mut ChaCha8Rng) -> Vec<u64> {
    const MAX: u128 = 1_000_000_000;
    let len = rng.gen_range(1..=30);
    let mut s: Vec<u64> = vec![1];
    while s.len() < len {
        let cap = if s.len() == 1 {
            MAX
        } else {
            let (a, b) = (s[s.len() - 2] as u128, s[s.len() - 1] as u128);
            (b * b / a).min(MAX)
        };
        if cap == 0 {
            break;
        }
        // favor values near the bound so long, slowly decaying runs occur
        let x = if rng.gen_bool(0.6) {
            cap - rng.gen_range(0..=cap / 8)
        } else {
            rng.gen_range(1..=cap)
        };
        s.push(x.max(1) as u64);
    }
    s
}

fn lemma_property() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_1e44a);
    let cases = 5000;
    let mut max_len = 0;
    for case in 0..cases {
        let raw = random_log_concave(&mut rng);
        let s = PositiveSequence::from_u64s(&raw).unwrap();
        if !is_log_concave(&s) {
            return Err(format!(
                "generator produced a non-log-concave sequence {raw:?}"
            ));
        }
        let last = *raw.last().unwrap();
        let seed = if case % 4 == 0 {
            last
        } else {
            rng.gen_range(1..=last)
        };
        max_len = max_len.max(raw.len());
        match lemma_check(&s, &Count::from(seed)) {
            Ok(true) => {}
            Ok(false) => {
                let ext = pascal_extend(&s, &Count::from(seed)).unwrap();
                return Err(format!(
                    "{raw:?} seed {seed} -> {:?} has a dip",
                    ext.entries()
                ));
            }
            Err(e) => return Err(format!("{raw:?} seed {seed}: {e}")),
        }
    }
    let mut audits = 0;
    for d in 2..=16 {
        for v in d + 1..=100 {
            let a = audit_dip_propagation(params(v, d));
            if !a.passed {
                return Err(format!("audit failed for C({v},{d}): {a:?}"));
            }
            audits += 1;
        }
    }
    Ok(format!(
        "{cases} random cases (max length {max_len}) stay log-concave; {audits} audits pass"
    ))
}

fn closed_forms() -> Outcome {
    for d in 2..=20u32 {
        let f = f_vector_direct(params(d + 1, d));
        for j in -1..=d as i64 {
            if f.get(j) != Some(&binom(d as u64 + 1, j + 1)) {
                return Err(format!("simplex d={d}: f_{j} = {:?}", f.get(j)));
            }
        }
    }
    for v in 3..=1000u32 {
        let f = f_vector_direct(params(v, 2));
        let expected: Vec<BigUint> = [1, v, v, 1].into_iter().map(BigUint::from).collect();
        if f.entries() != expected.as_slice() {
            return Err(format!("polygon v={v}: [{f}]"));
        }
    }
    Ok("simplices d = 2..20 and polygons v = 3..1000 exact".into())
}

fn determinism() -> Outcome {
    let run = |jobs: &str| {
        Command::new(env!("CARGO_BIN_EXE_cyclic-faces"))
            .args(["sweep", "--d-min", "2", "--d-max", "16", "--v-max", "200"])
            .args(["--format", "json", "--jobs", jobs])
            .output()
            .map_err(|e| e.to_string())
    };
    let one = run("1")?;
    let many = run("8")?;
    if !one.status.success() || !many.status.success() {
        return Err(format!(
            "exit codes {:?} / {:?}",
            one.status.code(),
            many.status.code()
        ));
    }
    if one.stdout.is_empty() {
        return Err("empty output".into());
    }
    if one.stdout != many.stdout {
        return Err("JSON differs between --jobs 1 and --jobs 8".into());
    }
    let lines = one.stdout.iter().filter(|&&b| b == b'\n').count();
    Ok(format!(
        "{lines} records, {} bytes, byte-identical",
        one.stdout.len()
    ))
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("1 theorem sweep d 2..16, v d+1..200", theorem_desk_scale),
        ("2 sweep d 2..12, v d+1..999", schmitt_range),
        ("3 route equivalence d 2..16, v d+1..100", route_equivalence),
        ("4 oracle equivalence v <= 12, d <= 8", oracle_equivalence),
        ("5 Pascal-prefix rows d 4..16, v d+1..60", pascal_prefix),
        ("6 extension lemma + dip-propagation audit", lemma_property),
        ("7 simplex and polygon closed forms", closed_forms),
        ("8 sweep JSON independent of --jobs", determinism),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        let start = Instant::now();
        match check() {
            Ok(detail) => println!("PASS criterion {name}: {detail} [{:.2?}]", start.elapsed()),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {name}: {detail} [{:.2?}]", start.elapsed());
            }
        }
    }
    println!(
        "{} of {} acceptance criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
