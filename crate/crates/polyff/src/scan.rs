//! Whole-ring parameter scans.
//!
//! Every `(x, y)` pair runs independently on a bounded rayon pool; rows come
//! back in code order, so output does not depend on the pool width.

use std::collections::BTreeMap;

use polyff_core::group::GroupError;
use polyff_core::regmap::{
    dart_model, maps_equivalent, DartModel, RotationLabels, EQUIVALENCE_BOUND,
};
use polyff_core::Ring;
use rayon::prelude::*;
use serde::Serialize;

use crate::pipeline::{params_from_codes, run_params};
use crate::report::SCHEMA;
use crate::CliError;

pub const DEFAULT_MAX_CARD: u64 = 64;
pub const CSV_COLUMNS: [&str; 9] = [
    "x",
    "y",
    "group_order",
    "p",
    "q",
    "genus",
    "degenerate",
    "fingerprint",
    "recognized",
];

#[derive(Clone, Copy, Debug)]
pub struct ScanOptions {
    pub cap: usize,
    /// Worker count; `None` lets rayon decide.
    pub width: Option<usize>,
    pub exact_dedupe: bool,
    pub max_card: u64,
}

impl Default for ScanOptions {
    fn default() -> ScanOptions {
        ScanOptions {
            cap: polyff_core::group::DEFAULT_CAP,
            width: None,
            exact_dedupe: false,
            max_card: DEFAULT_MAX_CARD,
        }
    }
}

/// Measured columns are `None` when the closure hit the cap.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanRow {
    pub x: String,
    pub y: String,
    pub group_order: Option<usize>,
    pub p: Option<u64>,
    pub q: Option<u64>,
    pub genus: Option<i64>,
    pub degenerate: Option<bool>,
    pub fingerprint: Option<String>,
    pub recognized: Option<String>,
    pub cap_exceeded: bool,
    pub euler: Option<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MapClass {
    pub fingerprint: String,
    pub recognized: String,
    pub p: u64,
    pub q: u64,
    pub genus: Option<i64>,
    pub degenerate: bool,
    pub rows: usize,
    /// First row of the class as `x,y`.
    pub example: String,
    /// Conjugacy classes of dart models within the class, with
    /// `--exact-dedupe` and when every model was small enough to compare.
    pub exact_classes: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanSummary {
    pub rows: usize,
    pub cap_exceeded: usize,
    pub classes: Vec<MapClass>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanOutput {
    pub schema: u32,
    pub ring: String,
    pub rows: Vec<ScanRow>,
    pub summary: ScanSummary,
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map(ToString::to_string).unwrap_or_default()
}

impl ScanOutput {
    pub fn to_csv(&self) -> Result<String, csv::Error> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(CSV_COLUMNS)?;
        for r in &self.rows {
            w.write_record([
                r.x.clone(),
                r.y.clone(),
                opt(&r.group_order),
                opt(&r.p),
                opt(&r.q),
                opt(&r.genus),
                opt(&r.degenerate),
                opt(&r.fingerprint),
                if r.cap_exceeded {
                    "cap_exceeded".to_string()
                } else {
                    opt(&r.recognized)
                },
            ])?;
        }
        Ok(String::from_utf8(w.into_inner().expect("in-memory writer")).expect("utf-8"))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("scan serializes")
    }

    pub fn summary_text(&self) -> String {
        let s = &self.summary;
        let mut out = format!(
            "{} rows, {} over cap, {} map classes\n",
            s.rows,
            s.cap_exceeded,
            s.classes.len()
        );
        for c in &s.classes {
            let genus = c.genus.map_or("-".to_string(), |g| g.to_string());
            out.push_str(&format!(
                "{} {} p={} q={} genus={} degenerate={} rows={} example=({})",
                c.recognized, c.fingerprint, c.p, c.q, genus, c.degenerate, c.rows, c.example
            ));
            if let Some(n) = c.exact_classes {
                out.push_str(&format!(" exact_classes={n}"));
            }
            out.push('\n');
        }
        out
    }
}

fn scan_pair(
    ring: &Ring,
    x: u64,
    y: u64,
    opts: &ScanOptions,
) -> Result<(ScanRow, Option<DartModel>), CliError> {
    let params = params_from_codes(ring, x, y);
    let (xs, ys) = (params.x().to_string(), params.y().to_string());
    match run_params(&params, opts.cap) {
        Ok((group, map)) => {
            let model =
                if opts.exact_dedupe && group.has_cayley() && group.order() <= EQUIVALENCE_BOUND {
                    Some(dart_model(&group, &RotationLabels::default())?)
                } else {
                    None
                };
            let row = ScanRow {
                x: xs,
                y: ys,
                group_order: Some(map.group_order),
                p: Some(map.p),
                q: Some(map.q),
                genus: map.counts.map(|c| c.genus),
                degenerate: Some(map.is_degenerate()),
                fingerprint: Some(map.fingerprint.to_string()),
                recognized: Some(map.recognized.to_string()),
                cap_exceeded: false,
                euler: map.counts.map(|c| c.euler),
            };
            Ok((row, model))
        }
        Err(CliError::Group(GroupError::CapExceeded { .. })) => {
            let row = ScanRow {
                x: xs,
                y: ys,
                group_order: None,
                p: None,
                q: None,
                genus: None,
                degenerate: None,
                fingerprint: None,
                recognized: None,
                cap_exceeded: true,
                euler: None,
            };
            Ok((row, None))
        }
        Err(e) => Err(e),
    }
}

type ClassKey = (String, u64, u64, Option<i64>, bool);

fn summarize(
    rows: &[ScanRow],
    models: &[Option<DartModel>],
    exact: bool,
) -> Result<ScanSummary, CliError> {
    let mut groups: BTreeMap<ClassKey, Vec<usize>> = BTreeMap::new();
    for (i, r) in rows.iter().enumerate() {
        if let (Some(fp), Some(p), Some(q), Some(deg)) = (&r.fingerprint, r.p, r.q, r.degenerate) {
            groups
                .entry((fp.clone(), p, q, r.genus, deg))
                .or_default()
                .push(i);
        }
    }
    let mut classes = Vec::with_capacity(groups.len());
    for ((fingerprint, p, q, genus, degenerate), members) in groups {
        let first = &rows[members[0]];
        let exact_classes = if exact {
            exact_class_count(&members, models)?
        } else {
            None
        };
        classes.push(MapClass {
            fingerprint,
            recognized: first.recognized.clone().unwrap_or_default(),
            p,
            q,
            genus,
            degenerate,
            rows: members.len(),
            example: format!("{},{}", first.x, first.y),
            exact_classes,
        });
    }
    Ok(ScanSummary {
        rows: rows.len(),
        cap_exceeded: rows.iter().filter(|r| r.cap_exceeded).count(),
        classes,
    })
}

fn exact_class_count(
    members: &[usize],
    models: &[Option<DartModel>],
) -> Result<Option<usize>, CliError> {
    let mut reps: Vec<&DartModel> = Vec::new();
    for &i in members {
        let Some(m) = &models[i] else { return Ok(None) };
        let mut found = false;
        for r in &reps {
            if maps_equivalent(r, m)? {
                found = true;
                break;
            }
        }
        if !found {
            reps.push(m);
        }
    }
    Ok(Some(reps.len()))
}

pub fn scan(ring: &Ring, opts: &ScanOptions) -> Result<ScanOutput, CliError> {
    let card = ring.cardinality();
    if card > opts.max_card {
        return Err(CliError::BadArgs(format!(
            "{ring} has {card} elements, above the scan limit of {}",
            opts.max_card
        )));
    }
    if opts.cap == 0 || opts.width == Some(0) {
        return Err(CliError::BadArgs("cap and width must be at least 1".into()));
    }
    let pairs: Vec<(u64, u64)> = (0..card)
        .flat_map(|x| (0..card).map(move |y| (x, y)))
        .collect();
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(w) = opts.width {
        builder = builder.num_threads(w);
    }
    let pool = builder
        .build()
        .map_err(|e| CliError::BadArgs(e.to_string()))?;
    let results: Vec<(ScanRow, Option<DartModel>)> = pool.install(|| {
        pairs
            .par_iter()
            .map(|&(x, y)| scan_pair(ring, x, y, opts))
            .collect::<Result<_, _>>()
    })?;
    let (rows, models): (Vec<_>, Vec<_>) = results.into_iter().unzip();
    let summary = summarize(&rows, &models, opts.exact_dedupe)?;
    Ok(ScanOutput {
        schema: SCHEMA,
        ring: ring.to_string(),
        rows,
        summary,
    })
}
