//! Acceptance suite: one PASS/FAIL line per criterion, with wall-clock limits
//! where the criterion sets one. Runs without the libtest harness so the
//! lines always reach the terminal.

mod support;

use std::time::{Duration, Instant};

use polyff::darts;
use polyff::pipeline::{grid_report, relations, specialize_report, GridFamily, RunOptions};
use polyff::report::Report;
use polyff::scan::{scan, ScanOptions};
use polyff_core::catalog::{bad_primes, prime_status, PrimeStatus, Solid};
use polyff_core::group::NAMED_SPECTRA;
use polyff_core::regmap::genus_formula;
use polyff_core::Ring;

use support::*;

type Check = fn() -> Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn ring(spec: &str) -> Ring {
    spec.parse().expect("ring spec")
}

fn with_darts() -> RunOptions {
    RunOptions {
        darts: true,
        ..RunOptions::default()
    }
}

fn relation_identities() -> Result<String, String> {
    let rings = [
        "zmod:2", "zmod:12", "gf:2", "gf:3", "gf:5", "gf:7^2", "gf:101",
    ];
    let mut pairs = 0;
    for spec in rings {
        let s = relations(&ring(spec), 50).map_err(|e| e.to_string())?;
        ensure(s.all_pass, || format!("{spec}: {:?}", s.failures))?;
        ensure(s.checks == 9 * s.pairs_checked, || {
            format!("{spec}: {} checks", s.checks)
        })?;
        pairs += s.pairs_checked;
    }
    Ok(format!(
        "{pairs} pairs over {} rings, 0 failures",
        rings.len()
    ))
}

fn expected_solid(solid: Solid) -> (usize, &'static str) {
    match solid {
        Solid::Tetrahedron => (12, "A4"),
        Solid::Cube | Solid::Octahedron => (24, "S4"),
        _ => (60, "A5"),
    }
}

/// Solid reports for the primes of the Platonic table; pairs where the prime
/// divides a denominator have no reduction and are skipped.
fn platonic_reports() -> Result<(Vec<Report>, Vec<String>), String> {
    let mut reports = Vec::new();
    let mut skipped = Vec::new();
    for p in [5u64, 7, 11, 13] {
        for solid in Solid::PLATONIC {
            if let PrimeStatus::Bad(_) = prime_status(&solid.params(), p) {
                skipped.push(format!("{solid}/GF({p})"));
                continue;
            }
            let r = specialize_report(solid, &ring(&format!("gf:{p}")), true, &with_darts())
                .map_err(|e| format!("{solid} over GF({p}): {e}"))?;
            let (order, name) = expected_solid(solid);
            ensure(r.group_order == order && r.recognized == name, || {
                format!(
                    "{solid} over GF({p}): order {} {}",
                    r.group_order, r.recognized
                )
            })?;
            reports.push(r);
        }
    }
    let cube = specialize_report(Solid::Cube, &ring("gf:2"), false, &with_darts())
        .map_err(|e| e.to_string())?;
    ensure(cube.group_order == 6 && cube.recognized == "S3", || {
        format!(
            "cube over GF(2): order {} {}",
            cube.group_order, cube.recognized
        )
    })?;
    reports.push(cube);
    Ok((reports, skipped))
}

fn platonic_table() -> Result<String, String> {
    let (reports, skipped) = platonic_reports()?;
    let mut msg = format!("{} reductions exact", reports.len());
    if !skipped.is_empty() {
        msg.push_str(&format!(
            "; undefined (prime divides a denominator): {}",
            skipped.join(", ")
        ));
    }
    Ok(msg)
}

const SQUARE_ORDERS: [(u64, usize); 6] = [(3, 36), (4, 16), (5, 100), (6, 36), (7, 196), (8, 64)];
const TRIANGULAR_ORDERS: [(u64, usize); 3] = [(3, 18), (5, 150), (7, 294)];

fn square_reports() -> Result<Vec<Report>, String> {
    let mut out = Vec::new();
    for (n, order) in SQUARE_ORDERS {
        let k = if n % 2 == 0 { n / 2 } else { n } as usize;
        ensure(order == 4 * k * k, || {
            format!("n={n}: table order is not 4k^2")
        })?;
        let oracle = naive_closure_order(&int_rhos(0, -1, n as i64), n as i64);
        ensure(oracle == order, || format!("n={n}: oracle order {oracle}"))?;
        let r = grid_report(GridFamily::Square, n, &with_darts()).map_err(|e| e.to_string())?;
        ensure(
            r.group_order == order && (r.p, r.q) == (4, 4) && r.genus == Some(1),
            || {
                format!(
                    "n={n}: order {} (p,q)=({},{}) genus {:?}",
                    r.group_order, r.p, r.q, r.genus
                )
            },
        )?;
        let verdict = r.prediction.as_ref().and_then(|p| p.verdict.clone());
        ensure(verdict.as_deref() == Some("match"), || {
            format!("n={n}: verdict {verdict:?}")
        })?;
        out.push(r);
    }
    Ok(out)
}

fn square_grids() -> Result<String, String> {
    let reports = square_reports()?;
    let two =
        grid_report(GridFamily::Square, 2, &RunOptions::default()).map_err(|e| e.to_string())?;
    ensure(two.degenerate, || "n=2 is not degenerate".into())?;
    ensure(
        two.prediction.as_ref().is_some_and(|p| p.verdict.is_none()),
        || "n=2 carries a verdict".into(),
    )?;
    Ok(format!(
        "orders {:?} match 4k^2 and the naive closure; n=2 degenerate ({})",
        reports.iter().map(|r| r.group_order).collect::<Vec<_>>(),
        two.degeneracy_reason.unwrap_or_default()
    ))
}

fn triangular_reports() -> Result<Vec<Report>, String> {
    let mut out = Vec::new();
    for (n, order) in TRIANGULAR_ORDERS {
        let half = (n as i64 + 1) / 2;
        let oracle = naive_closure_order(&int_rhos(half, -1, n as i64), n as i64);
        ensure(oracle == order, || format!("n={n}: oracle order {oracle}"))?;
        let r = grid_report(GridFamily::Triangular, n, &with_darts()).map_err(|e| e.to_string())?;
        let (v, e, f) = (
            r.vertices.unwrap_or(0),
            r.edges.unwrap_or(0),
            r.faces.unwrap_or(0),
        );
        ensure(
            r.group_order == order
                && (r.p, r.q) == (6, 3)
                && r.genus == Some(1)
                && v > 0
                && e == 3 * v
                && f == 2 * v,
            || {
                format!(
                    "n={n}: order {} (p,q)=({},{}) V,E,F={v},{e},{f}",
                    r.group_order, r.p, r.q
                )
            },
        )?;
        out.push(r);
    }
    Ok(out)
}

fn triangular_grids() -> Result<String, String> {
    let reports = triangular_reports()?;
    Ok(format!(
        "orders {:?}, (6,3), genus 1, V:E:F = 1:3:2",
        reports.iter().map(|r| r.group_order).collect::<Vec<_>>()
    ))
}

fn genus_checks() -> Result<String, String> {
    for (p, q, e) in [(3, 4, 12), (5, 3, 30), (3, 3, 6)] {
        let g = genus_formula(p, q, e).map_err(|err| err.to_string())?;
        ensure(g == 0, || format!("({p},{q},{e}) -> {g}"))?;
    }
    for e in 1..=200 {
        let g = genus_formula(4, 4, e).map_err(|err| err.to_string())?;
        ensure(g == 1, || format!("(4,4,{e}) -> {g}"))?;
    }
    let mut maps = platonic_reports()?.0;
    maps.extend(square_reports()?);
    maps.extend(triangular_reports()?);
    let mut checked = 0;
    for r in maps.iter().filter(|r| !r.degenerate) {
        let (v, e, f) = (
            r.vertices.unwrap_or(0) as i64,
            r.edges.unwrap_or(0) as i64,
            r.faces.unwrap_or(0) as i64,
        );
        let g = r.genus.ok_or("missing genus")?;
        ensure(v - e + f == 2 - 2 * g, || {
            format!("{} over {}: V-E+F = {}", r.x, r.ring, v - e + f)
        })?;
        checked += 1;
    }
    Ok(format!(
        "formula cases exact; Euler relation holds on {checked} maps"
    ))
}

fn bad_prime_reports() -> Result<String, String> {
    let expected: [(Solid, &[u64]); 5] = [
        (Solid::Tetrahedron, &[2, 3]),
        (Solid::Cube, &[]),
        (Solid::Octahedron, &[2, 3]),
        (Solid::Dodecahedron, &[2, 5]),
        (Solid::Icosahedron, &[2, 3]),
    ];
    let mut flagged = Vec::new();
    for (solid, want) in expected {
        let poly = solid.params();
        let mut divisors = prime_divisors(poly.x.c() as u64);
        divisors.extend(prime_divisors(poly.y.c() as u64));
        divisors.sort_unstable();
        divisors.dedup();
        let computed = bad_primes(&poly).primes();
        ensure(computed == want && computed == divisors, || {
            format!("{solid}: computed {computed:?}, denominators give {divisors:?}")
        })?;
        let r = specialize_report(solid, &ring("gf:11"), true, &RunOptions::default())
            .map_err(|e| e.to_string())?;
        let published = solid.published_bad_primes().map(<[u64]>::to_vec);
        ensure(r.bad_primes_computed.as_deref() == Some(want), || {
            format!("{solid}: report {r:?}")
        })?;
        ensure(r.bad_primes_published == published, || {
            format!("{solid}: published list missing")
        })?;
        let differs = published.as_deref() != Some(want);
        ensure(r.bad_primes_mismatch == Some(differs), || {
            format!("{solid}: mismatch flag wrong")
        })?;
        if differs {
            flagged.push(format!(
                "{solid} {want:?} vs {:?}",
                published.unwrap_or_default()
            ));
        }
    }
    ensure(flagged.iter().any(|f| f.starts_with("icosahedron")), || {
        "icosahedron not flagged".into()
    })?;
    Ok(format!(
        "computed sets equal denominator divisors; flagged: {}",
        flagged.join("; ")
    ))
}

fn dart_models() -> Result<String, String> {
    let mut maps = platonic_reports()?.0;
    maps.extend(square_reports()?);
    maps.extend(triangular_reports()?);
    let mut checked = 0;
    for r in maps.iter().filter(|r| r.group_order <= 10_000) {
        let text = r
            .darts
            .as_ref()
            .ok_or_else(|| format!("{} over {}: no darts", r.x, r.ring))?;
        let model = darts::from_text(text).map_err(|e| e.to_string())?;
        ensure(model.degree() == r.group_order, || {
            "degree differs from |G|".into()
        })?;
        dart_properties_hold(&model.perm_v, &model.perm_e, &model.perm_f).map_err(|e| {
            format!(
                "{} over {}: {e}",
                r.solid.clone().unwrap_or_default(),
                r.ring
            )
        })?;
        ensure(darts::to_text(&model) == *text, || {
            "export/import is not byte-identical".into()
        })?;
        checked += 1;
    }
    Ok(format!("{checked} dart models valid and round-trip"))
}

fn scan_reproducible() -> Result<String, String> {
    let gf3 = ring("gf:3");
    let mut outputs = Vec::new();
    for width in [1, 8, 1, 8] {
        let opts = ScanOptions {
            width: Some(width),
            ..ScanOptions::default()
        };
        let out = scan(&gf3, &opts).map_err(|e| e.to_string())?;
        ensure(out.rows.len() == 9, || format!("{} rows", out.rows.len()))?;
        for row in &out.rows {
            let euler_ok = matches!((row.euler, row.genus), (Some(e), Some(g)) if e == 2 - 2 * g);
            ensure(euler_ok || row.degenerate == Some(true), || {
                format!("row ({},{})", row.x, row.y)
            })?;
        }
        outputs.push(out.to_csv().map_err(|e| e.to_string())?);
    }
    ensure(outputs.windows(2).all(|w| w[0] == w[1]), || {
        "CSV differs between runs".into()
    })?;
    Ok(format!(
        "4 runs byte-identical ({} bytes), 9 rows",
        outputs[0].len()
    ))
}

fn oracle_equivalence() -> Result<String, String> {
    let s4 = all_perms(4);
    let oracle = [
        spectrum(&all_perms(3)),
        spectrum(
            &s4.iter()
                .filter(|p| is_even(p))
                .cloned()
                .collect::<Vec<_>>(),
        ),
        spectrum(&s4),
        spectrum(&all_perms(5).into_iter().filter(is_even).collect::<Vec<_>>()),
    ];
    for ((name, order, stored), want) in NAMED_SPECTRA.iter().zip(&oracle) {
        ensure(stored.to_vec() == *want, || {
            format!("{name}: {stored:?} vs {want:?}")
        })?;
        ensure(want.iter().map(|(_, c)| c).sum::<u64>() == *order, || {
            format!("{name}: order")
        })?;
    }
    Ok("S3, A4, S4, A5 spectra equal permutation enumeration".into())
}

fn main() {
    let criteria: [(&str, Check, Option<u64>); 9] = [
        ("relation identities", relation_identities, Some(5)),
        (
            "platonic reductions keep their groups",
            platonic_table,
            Some(10),
        ),
        ("square grids over Z/nZ", square_grids, Some(30)),
        ("triangular grids over Z/nZ", triangular_grids, None),
        ("genus formula and Euler relation", genus_checks, None),
        ("bad-prime reports", bad_prime_reports, None),
        ("dart-model properties", dart_models, None),
        ("scan reproducibility", scan_reproducible, Some(5)),
        ("recognition spectra oracle", oracle_equivalence, None),
    ];
    let mut failed = 0;
    for (i, (name, check, limit)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let elapsed = start.elapsed();
        let over = limit.is_some_and(|s| elapsed > Duration::from_secs(s));
        let limit_text = limit.map_or(String::new(), |s| format!(", limit {s} s"));
        let timing = format!("{:.2} s{limit_text}", elapsed.as_secs_f64());
        match result {
            Ok(detail) if !over => println!("PASS {} {name} ({timing}): {detail}", i + 1),
            Ok(detail) => {
                failed += 1;
                println!("FAIL {} {name} ({timing}, over time): {detail}", i + 1);
            }
            Err(msg) => {
                failed += 1;
                println!("FAIL {} {name} ({timing}): {msg}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 9 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
