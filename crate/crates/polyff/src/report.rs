//! JSON report emitted by `specialize`, `grid` and `analyze`.

use polyff_core::regmap::MapReport;
use serde::{Deserialize, Serialize};

pub const SCHEMA: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub schema: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub solid: Option<String>,
    /// Ring the group was generated over.
    pub ring: String,
    /// Set when an automatic extension replaced the requested ring.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub requested_ring: Option<String>,
    pub x: String,
    pub y: String,
    pub group_order: usize,
    pub p: u64,
    pub q: u64,
    pub e_order: u64,
    #[serde(rename = "V")]
    pub vertices: Option<u64>,
    #[serde(rename = "E")]
    pub edges: Option<u64>,
    #[serde(rename = "F")]
    pub faces: Option<u64>,
    pub genus: Option<i64>,
    pub euler: Option<i64>,
    pub degenerate: bool,
    pub degeneracy_reason: Option<String>,
    pub fingerprint: String,
    pub recognized: String,
    pub bad_primes_computed: Option<Vec<u64>>,
    /// Published list for the named solid; the JSON key is fixed by schema 1.
    #[serde(rename = "bad_primes_paper")]
    pub bad_primes_published: Option<Vec<u64>>,
    /// True when the computed and published lists differ.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bad_primes_mismatch: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub prediction: Option<GridPrediction>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub darts: Option<String>,
}

/// Expected `k x k` torus for the square grid over `Z/nZ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridPrediction {
    pub k: u64,
    pub group_order: u64,
    /// `match` or `mismatch`; absent when the measured map is degenerate.
    pub verdict: Option<String>,
}

impl Report {
    pub fn from_map(ring: String, x: String, y: String, map: &MapReport) -> Report {
        let c = map.counts;
        Report {
            schema: SCHEMA,
            solid: None,
            ring,
            requested_ring: None,
            x,
            y,
            group_order: map.group_order,
            p: map.p,
            q: map.q,
            e_order: map.e_order,
            vertices: c.map(|c| c.vertices),
            edges: c.map(|c| c.edges),
            faces: c.map(|c| c.faces),
            genus: c.map(|c| c.genus),
            euler: c.map(|c| c.euler),
            degenerate: map.is_degenerate(),
            degeneracy_reason: map.degeneracy.map(|d| d.to_string()),
            fingerprint: map.fingerprint.to_string(),
            recognized: map.recognized.to_string(),
            bad_primes_computed: None,
            bad_primes_published: None,
            bad_primes_mismatch: None,
            prediction: None,
            darts: None,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// `key: value` lines, nulls omitted.
    pub fn to_text(&self) -> String {
        let value = serde_json::to_value(self).expect("report serializes");
        let mut out = String::new();
        if let serde_json::Value::Object(map) = value {
            for (key, v) in map {
                match v {
                    serde_json::Value::Null => {}
                    serde_json::Value::String(s) if key == "darts" => {
                        out.push_str("darts:\n");
                        out.push_str(&s);
                    }
                    serde_json::Value::String(s) => out.push_str(&format!("{key}: {s}\n")),
                    other => out.push_str(&format!("{key}: {other}\n")),
                }
            }
        }
        out
    }

    pub fn to_csv(&self) -> Result<String, csv::Error> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record([
            "ring",
            "x",
            "y",
            "group_order",
            "p",
            "q",
            "genus",
            "degenerate",
            "fingerprint",
            "recognized",
        ])?;
        w.write_record([
            self.ring.clone(),
            self.x.clone(),
            self.y.clone(),
            self.group_order.to_string(),
            self.p.to_string(),
            self.q.to_string(),
            self.genus.map(|g| g.to_string()).unwrap_or_default(),
            self.degenerate.to_string(),
            self.fingerprint.clone(),
            self.recognized.clone(),
        ])?;
        Ok(String::from_utf8(w.into_inner().expect("in-memory writer")).expect("utf-8"))
    }
}
