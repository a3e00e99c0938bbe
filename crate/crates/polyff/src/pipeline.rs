//! Single-task commands: specialize, grid, analyze, relations and catalog.

use polyff_core::catalog::{bad_primes, classify_pq, specialize, Solid};
use polyff_core::group::{
    generate, GenerateOptions, GeneratedGroup, DEFAULT_CAP, DEFAULT_CAYLEY_BOUND,
};
use polyff_core::regmap::{analyze, dart_model, MapReport, RotationLabels};
use polyff_core::universal::verify_relations;
use polyff_core::{GeneratorSet, PolyhedronParams, QuadRational, Ring};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::darts;
use crate::report::{GridPrediction, Report, SCHEMA};
use crate::CliError;

/// Seed for sampled relation checks.
pub const RELATION_SEED: u64 = 0x706f_6c79_6666;

#[derive(Clone, Copy, Debug)]
pub struct RunOptions {
    pub cap: usize,
    /// Attach the dart permutations when the Cayley table was kept.
    pub darts: bool,
}

impl Default for RunOptions {
    fn default() -> RunOptions {
        RunOptions {
            cap: DEFAULT_CAP,
            darts: false,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum GridFamily {
    Square,
    Triangular,
}

impl GridFamily {
    pub fn solid(self) -> Solid {
        match self {
            GridFamily::Square => Solid::SquareTiling,
            GridFamily::Triangular => Solid::TriangularTiling,
        }
    }
}

/// Closure plus map analysis for one parameter pair.
pub fn run_params(
    params: &PolyhedronParams,
    cap: usize,
) -> Result<(GeneratedGroup, MapReport), CliError> {
    let gens = GeneratorSet::new(params).rotation_generators();
    let opts = GenerateOptions {
        cap,
        cayley_bound: DEFAULT_CAYLEY_BOUND.min(cap),
    };
    let group = generate(params.ring(), &gens, &opts)?;
    let map = analyze(&group, &RotationLabels::default())?;
    if !map.check_invariants() {
        return Err(CliError::Invariant(format!(
            "map counts for x={} y={}",
            params.x(),
            params.y()
        )));
    }
    Ok((group, map))
}

fn base_report(params: &PolyhedronParams, opts: &RunOptions) -> Result<Report, CliError> {
    let (group, map) = run_params(params, opts.cap)?;
    let mut report = Report::from_map(
        params.ring().to_string(),
        params.x().to_string(),
        params.y().to_string(),
        &map,
    );
    if opts.darts && group.has_cayley() {
        let model = dart_model(&group, &RotationLabels::default())?;
        if !map.is_degenerate() {
            model.check()?;
        }
        report.darts = Some(darts::to_text(&model));
    }
    Ok(report)
}

pub fn analyze_report(
    ring: &Ring,
    x: &str,
    y: &str,
    opts: &RunOptions,
) -> Result<Report, CliError> {
    let params = PolyhedronParams::new(ring.parse_elem(x)?, ring.parse_elem(y)?)?;
    base_report(&params, opts)
}

pub fn specialize_report(
    solid: Solid,
    ring: &Ring,
    auto_extend: bool,
    opts: &RunOptions,
) -> Result<Report, CliError> {
    let poly = solid.params();
    let sp = specialize(&poly, ring, auto_extend)?;
    let mut report = base_report(&sp.params, opts)?;
    report.solid = Some(solid.name().to_string());
    if sp.extended {
        report.requested_ring = Some(ring.to_string());
    }
    let computed = bad_primes(&poly).primes();
    let published = solid.published_bad_primes().map(<[u64]>::to_vec);
    report.bad_primes_mismatch = published.as_ref().map(|p| *p != computed);
    report.bad_primes_computed = Some(computed);
    report.bad_primes_published = published;
    Ok(report)
}

/// The square or triangular tiling over `Z/nZ`. The square family carries
/// the `k x k` torus prediction with `k = n/2` for even `n`, else `n`.
pub fn grid_report(family: GridFamily, n: u64, opts: &RunOptions) -> Result<Report, CliError> {
    let ring = Ring::zmod(n)?;
    let mut report = specialize_report(family.solid(), &ring, false, opts)?;
    if family == GridFamily::Square {
        let k = if n.is_multiple_of(2) { n / 2 } else { n };
        let predicted = 4 * k * k;
        let verdict = (!report.degenerate).then(|| {
            let ok = report.group_order as u64 == predicted
                && (report.p, report.q) == (4, 4)
                && report.genus == Some(1);
            if ok { "match" } else { "mismatch" }.to_string()
        });
        report.prediction = Some(GridPrediction {
            k,
            group_order: predicted,
            verdict,
        });
    }
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationFailure {
    pub x: String,
    pub y: String,
    pub relations: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationsSummary {
    pub schema: u32,
    pub ring: String,
    pub exhaustive: bool,
    /// Present for sampled runs.
    pub seed: Option<u64>,
    pub pairs_checked: u64,
    pub checks: u64,
    pub failures: Vec<RelationFailure>,
    pub all_pass: bool,
}

/// All pairs when `|R|^2 <= trials`, else `trials` seeded uniform samples.
pub fn relations(ring: &Ring, trials: u64) -> Result<RelationsSummary, CliError> {
    if trials == 0 {
        return Err(CliError::BadArgs("trials must be at least 1".into()));
    }
    let card = ring.cardinality();
    let exhaustive = card.checked_mul(card).is_some_and(|sq| sq <= trials);
    let pairs: Vec<(u64, u64)> = if exhaustive {
        (0..card)
            .flat_map(|x| (0..card).map(move |y| (x, y)))
            .collect()
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(RELATION_SEED);
        (0..trials)
            .map(|_| (rng.random_range(0..card), rng.random_range(0..card)))
            .collect()
    };
    let mut failures = Vec::new();
    let mut checks = 0;
    for &(x, y) in &pairs {
        let params = params_from_codes(ring, x, y);
        let report = verify_relations(&params);
        checks += report.checks.len() as u64;
        let failed: Vec<String> = report.failures().map(|r| r.name().to_string()).collect();
        if !failed.is_empty() {
            failures.push(RelationFailure {
                x: params.x().to_string(),
                y: params.y().to_string(),
                relations: failed,
            });
        }
    }
    Ok(RelationsSummary {
        schema: SCHEMA,
        ring: ring.to_string(),
        exhaustive,
        seed: (!exhaustive).then_some(RELATION_SEED),
        pairs_checked: pairs.len() as u64,
        checks,
        all_pass: failures.is_empty(),
        failures,
    })
}

pub(crate) fn params_from_codes(ring: &Ring, x: u64, y: u64) -> PolyhedronParams {
    let elem = |c: u64| ring.elem(c as u32).expect("code below cardinality");
    PolyhedronParams::new(elem(x), elem(y)).expect("same ring")
}

fn quad_json(q: QuadRational) -> serde_json::Value {
    serde_json::json!({ "a": q.a(), "b": q.b(), "c": q.c() })
}

/// One JSON object per catalog entry, `x = (a + b sqrt5) / c` and likewise `y`.
pub fn catalog_lines() -> Vec<String> {
    Solid::ALL
        .iter()
        .map(|solid| {
            let poly = solid.params();
            let (p, q) = poly.expected_pq;
            serde_json::json!({
                "name": solid.name(),
                "x": quad_json(poly.x),
                "y": quad_json(poly.y),
                "p": p,
                "q": q,
                "class": classify_pq(p, q).to_string(),
                "group": poly.expected_group.to_string(),
                "bad_primes": bad_primes(&poly).primes(),
            })
            .to_string()
        })
        .collect()
}
