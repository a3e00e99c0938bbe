//! Regular maps read off a rotation group.
//!
//! Darts are group elements; rotating a dart about its vertex, edge or face
//! is right multiplication by `ρv`, `ρe` or `ρf`. Vertices, edges and faces
//! are the orbits of the cyclic subgroups, so for a simply transitive action
//! `V = |G|/p`, `E = |G|/2` and `F = |G|/q`, where `p` and `q` are the orders
//! of `ρv` and `ρf`.

use alloc::collections::VecDeque;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

use crate::group::{recognize, GeneratedGroup, GroupFingerprint, GroupName};
use crate::mat3::Order;
use crate::universal::{RHO_E, RHO_F, RHO_V};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MapError {
    #[error("no generator labelled `{0}`")]
    MissingLabel(String),
    #[error("right-multiplication table was not retained (group order {0})")]
    CayleyNotRetained(usize),
    #[error("dart model invariant violated: {0}")]
    InvariantViolation(&'static str),
    #[error("degree {0} exceeds the equivalence-search bound")]
    DegreeTooLarge(usize),
    #[error("2g - 2 = {numerator}/{denominator} has no integral solution")]
    NonIntegralGenus { numerator: i64, denominator: i64 },
    #[error("p and q must be at least 2 and E at least 1")]
    InvalidTriple,
}

/// Which generators play the roles of `ρv`, `ρe`, `ρf`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RotationLabels<'a> {
    pub v: &'a str,
    pub e: &'a str,
    pub f: &'a str,
}

impl Default for RotationLabels<'_> {
    fn default() -> Self {
        RotationLabels {
            v: RHO_V,
            e: RHO_E,
            f: RHO_F,
        }
    }
}

impl RotationLabels<'_> {
    fn indices(&self, group: &GeneratedGroup) -> Result<[usize; 3], MapError> {
        let find = |label: &str| {
            group
                .generator(label)
                .map(|(i, _)| i)
                .ok_or_else(|| MapError::MissingLabel(String::from(label)))
        };
        Ok([find(self.v)?, find(self.e)?, find(self.f)?])
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Degeneracy {
    /// `ρe` is not an involution in the quotient.
    EdgeOrder(u64),
    VertexOrder(u64),
    FaceOrder(u64),
    OddOrder(usize),
    /// `|G|` not divisible by `p` or `q`; cannot happen for a group but is
    /// kept as a diagnostic.
    NonIntegralCount,
    NonIntegralGenus,
}

impl fmt::Display for Degeneracy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degeneracy::EdgeOrder(o) => write!(f, "rho_e has order {o}, not 2"),
            Degeneracy::VertexOrder(o) => write!(f, "rho_v has order {o} < 2"),
            Degeneracy::FaceOrder(o) => write!(f, "rho_f has order {o} < 2"),
            Degeneracy::OddOrder(n) => write!(f, "group order {n} is odd"),
            Degeneracy::NonIntegralCount => f.write_str("|G| is not divisible by p and q"),
            Degeneracy::NonIntegralGenus => f.write_str("genus formula is not integral"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MapCounts {
    pub vertices: u64,
    pub edges: u64,
    pub faces: u64,
    pub genus: i64,
    pub euler: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MapReport {
    /// Order of `ρv`: faces around a vertex.
    pub p: u64,
    /// Order of `ρf`: edges around a face.
    pub q: u64,
    pub e_order: u64,
    pub group_order: usize,
    /// `None` exactly when degenerate.
    pub counts: Option<MapCounts>,
    pub degeneracy: Option<Degeneracy>,
    pub fingerprint: GroupFingerprint,
    pub recognized: GroupName,
}

impl MapReport {
    pub fn is_degenerate(&self) -> bool {
        self.degeneracy.is_some()
    }

    /// Re-checks the count identities of a non-degenerate report.
    pub fn check_invariants(&self) -> bool {
        let Some(c) = self.counts else {
            return self.is_degenerate();
        };
        let g = self.group_order as u64;
        self.e_order == 2
            && c.vertices * self.p == g
            && c.faces * self.q == g
            && 2 * c.edges == g
            && c.euler == c.vertices as i64 - c.edges as i64 + c.faces as i64
            && c.euler == 2 - 2 * c.genus
            && c.genus >= 0
    }
}

/// `g` with `2g - 2 = E(1 - 2/p - 2/q)`.
pub fn genus_formula(p: u64, q: u64, edges: u64) -> Result<i64, MapError> {
    if p < 2 || q < 2 || edges < 1 {
        return Err(MapError::InvalidTriple);
    }
    let (p, q, e) = (p as i128, q as i128, edges as i128);
    // g = 1 + E(pq - 2p - 2q) / (2pq)
    let num = 2 * p * q + e * (p * q - 2 * p - 2 * q);
    let den = 2 * p * q;
    if num % den != 0 {
        // report 2g - 2 = E(pq - 2p - 2q)/(pq) in lowest terms
        let (n, d) = (e * (p * q - 2 * p - 2 * q), p * q);
        let g = gcd(n.unsigned_abs(), d as u128).max(1) as i128;
        return Err(MapError::NonIntegralGenus {
            numerator: (n / g) as i64,
            denominator: (d / g) as i64,
        });
    }
    Ok((num / den) as i64)
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn analyze(group: &GeneratedGroup, labels: &RotationLabels<'_>) -> Result<MapReport, MapError> {
    let [iv, ie, if_] = labels.indices(group)?;
    let n = group.order();
    let cap = n as u64;
    let order_of = |i: usize| -> u64 {
        let m = &group.generators()[i].matrix;
        match m.order(cap) {
            Ok(Order::Finite(o)) => o,
            // generators of a finite group have order at most |G|
            _ => unreachable!("generator order bounded by group order"),
        }
    };
    let (p, e_order, q) = (order_of(iv), order_of(ie), order_of(if_));
    let fingerprint = group.fingerprint();
    let recognized = recognize(&fingerprint);

    let degeneracy = if e_order != 2 {
        Some(Degeneracy::EdgeOrder(e_order))
    } else if p < 2 {
        Some(Degeneracy::VertexOrder(p))
    } else if q < 2 {
        Some(Degeneracy::FaceOrder(q))
    } else if n % 2 == 1 {
        Some(Degeneracy::OddOrder(n))
    } else if !cap.is_multiple_of(p) || !cap.is_multiple_of(q) {
        Some(Degeneracy::NonIntegralCount)
    } else {
        None
    };

    let mut report = MapReport {
        p,
        q,
        e_order,
        group_order: n,
        counts: None,
        degeneracy,
        fingerprint,
        recognized,
    };
    if report.degeneracy.is_none() {
        let edges = cap / 2;
        match genus_formula(p, q, edges) {
            Ok(genus) => {
                let (vertices, faces) = (cap / p, cap / q);
                report.counts = Some(MapCounts {
                    vertices,
                    edges,
                    faces,
                    genus,
                    euler: vertices as i64 - edges as i64 + faces as i64,
                });
            }
            Err(_) => report.degeneracy = Some(Degeneracy::NonIntegralGenus),
        }
    }
    Ok(report)
}

/// Permutations of the darts `0..degree` induced by `ρv`, `ρe`, `ρf`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DartModel {
    pub perm_v: Vec<u32>,
    pub perm_e: Vec<u32>,
    pub perm_f: Vec<u32>,
}

impl DartModel {
    pub fn degree(&self) -> usize {
        self.perm_v.len()
    }

    /// Checks permutation shape, `v·e·f = id` (applying `v` first), `e` an
    /// involution (fixed-point free unless `e` is the identity) and
    /// transitivity.
    pub fn check(&self) -> Result<(), MapError> {
        let n = self.degree();
        let perms = [&self.perm_v, &self.perm_e, &self.perm_f];
        for perm in perms {
            if perm.len() != n {
                return Err(MapError::InvariantViolation(
                    "permutations differ in degree",
                ));
            }
            let mut seen = vec![false; n];
            for &t in perm.iter() {
                let t = t as usize;
                if t >= n || seen[t] {
                    return Err(MapError::InvariantViolation("not a permutation"));
                }
                seen[t] = true;
            }
        }
        for d in 0..n {
            let after = self.perm_f[self.perm_e[self.perm_v[d] as usize] as usize];
            if after as usize != d {
                return Err(MapError::InvariantViolation("v·e·f is not the identity"));
            }
        }
        let e_identity = self
            .perm_e
            .iter()
            .enumerate()
            .all(|(i, &t)| t as usize == i);
        for d in 0..n {
            let t = self.perm_e[d] as usize;
            if self.perm_e[t] as usize != d {
                return Err(MapError::InvariantViolation("e is not an involution"));
            }
            if !e_identity && t == d {
                return Err(MapError::InvariantViolation("e has a fixed point"));
            }
        }
        if n > 0 && self.orbit_from(0).len() != n {
            return Err(MapError::InvariantViolation("action is not transitive"));
        }
        Ok(())
    }

    fn orbit_from(&self, start: usize) -> Vec<usize> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut order = vec![start];
        seen[start] = true;
        let mut head = 0;
        while head < order.len() {
            let d = order[head];
            for perm in [&self.perm_v, &self.perm_e, &self.perm_f] {
                let t = perm[d] as usize;
                if !seen[t] {
                    seen[t] = true;
                    order.push(t);
                }
            }
            head += 1;
        }
        order
    }
}

pub fn dart_model(
    group: &GeneratedGroup,
    labels: &RotationLabels<'_>,
) -> Result<DartModel, MapError> {
    let [iv, ie, if_] = labels.indices(group)?;
    let n = group.order();
    if !group.has_cayley() {
        return Err(MapError::CayleyNotRetained(n));
    }
    let perm = |gen: usize| -> Vec<u32> {
        (0..n)
            .map(|d| group.cayley_step(d, gen).expect("table retained") as u32)
            .collect()
    };
    let model = DartModel {
        perm_v: perm(iv),
        perm_e: perm(ie),
        perm_f: perm(if_),
    };
    model.check()?;
    Ok(model)
}

/// Largest degree accepted by [`maps_equivalent`].
pub const EQUIVALENCE_BOUND: usize = 10_000;

/// Whether some dart bijection conjugates the three permutations of `a` onto
/// those of `b`.
///
/// Both actions are transitive, so a bijection is fixed by the image of dart
/// 0; each candidate image is propagated along the action and rejected on the
/// first conflict.
pub fn maps_equivalent(a: &DartModel, b: &DartModel) -> Result<bool, MapError> {
    for m in [a, b] {
        if m.degree() > EQUIVALENCE_BOUND {
            return Err(MapError::DegreeTooLarge(m.degree()));
        }
    }
    let n = a.degree();
    if n != b.degree() {
        return Ok(false);
    }
    if n == 0 {
        return Ok(true);
    }
    let pa = [&a.perm_v, &a.perm_e, &a.perm_f];
    let pb = [&b.perm_v, &b.perm_e, &b.perm_f];
    const UNSET: u32 = u32::MAX;
    let mut phi = vec![UNSET; n];
    let mut used = vec![false; n];
    'candidates: for image in 0..n {
        phi.fill(UNSET);
        used.fill(false);
        phi[0] = image as u32;
        used[image] = true;
        let mut queue = VecDeque::from([0usize]);
        while let Some(d) = queue.pop_front() {
            let fd = phi[d] as usize;
            for k in 0..3 {
                let (src, dst) = (pa[k][d] as usize, pb[k][fd]);
                if phi[src] == UNSET {
                    if used[dst as usize] {
                        continue 'candidates;
                    }
                    phi[src] = dst;
                    used[dst as usize] = true;
                    queue.push_back(src);
                } else if phi[src] != dst {
                    continue 'candidates;
                }
            }
        }
        if phi.iter().all(|&t| t != UNSET) {
            return Ok(true);
        }
    }
    Ok(false)
}
