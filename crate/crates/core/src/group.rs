//! Finite matrix groups: breadth-first closure, order spectra and
//! recognition of a few small groups by fingerprint.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use hashbrown::HashMap;
use thiserror::Error;

use crate::mat3::{Mat3, MatKey};
use crate::ring::Ring;

pub const DEFAULT_CAP: usize = 1_000_000;
pub const DEFAULT_CAYLEY_BOUND: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("closure exceeded the cap of {cap} elements ({partial} found)")]
    CapExceeded { cap: usize, partial: usize },
    #[error("generator `{0}` is not invertible")]
    NonInvertibleGenerator(String),
    #[error("generators belong to different rings")]
    MixedRings,
    #[error("a ring is needed to generate from an empty generator list")]
    NoRing,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub label: String,
    pub matrix: Mat3,
}

impl Generator {
    pub fn new(label: &str, matrix: Mat3) -> Generator {
        Generator {
            label: String::from(label),
            matrix,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GenerateOptions {
    /// Maximum number of elements.
    pub cap: usize,
    /// Right-multiplication tables are kept when the order is at most this.
    pub cayley_bound: usize,
}

impl Default for GenerateOptions {
    fn default() -> Self {
        GenerateOptions {
            cap: DEFAULT_CAP,
            cayley_bound: DEFAULT_CAYLEY_BOUND,
        }
    }
}

/// Elements in breadth-first discovery order; element 0 is the identity.
#[derive(Clone, Debug)]
pub struct GeneratedGroup {
    ring: Ring,
    elements: Vec<Mat3>,
    index: HashMap<MatKey, u32>,
    generators: Vec<Generator>,
    /// `cayley[i * gens + j]` = index of `elements[i] * generators[j]`.
    cayley: Option<Vec<u32>>,
}

/// Breadth-first closure of `{I}` under right multiplication by `gens`.
///
/// New elements are appended in the order they are found, scanning the queue
/// front to back and the generators in list order, so the element order is a
/// function of the input alone.
pub fn generate(
    ring: Ring,
    gens: &[Generator],
    opts: &GenerateOptions,
) -> Result<GeneratedGroup, GroupError> {
    if gens.iter().any(|g| g.matrix.ring() != ring) {
        return Err(GroupError::MixedRings);
    }
    if let Some(g) = gens.iter().find(|g| !g.matrix.is_invertible()) {
        return Err(GroupError::NonInvertibleGenerator(g.label.clone()));
    }
    let identity = Mat3::identity(ring);
    let mut elements = vec![identity];
    let mut index = HashMap::new();
    index.insert(identity.key(), 0u32);
    let keep_cayley = opts.cayley_bound > 0;
    let mut cayley: Option<Vec<u32>> = keep_cayley.then(Vec::new);

    let mut head = 0;
    while head < elements.len() {
        let g = elements[head];
        for gen in gens {
            let h = g.mul_same(&gen.matrix);
            let next = elements.len() as u32;
            let idx = *index.entry(h.key()).or_insert(next);
            if idx == next {
                if elements.len() >= opts.cap {
                    return Err(GroupError::CapExceeded {
                        cap: opts.cap,
                        partial: elements.len() + 1,
                    });
                }
                elements.push(h);
                if elements.len() > opts.cayley_bound {
                    cayley = None;
                }
            }
            if let Some(table) = cayley.as_mut() {
                table.push(idx);
            }
        }
        head += 1;
    }
    Ok(GeneratedGroup {
        ring,
        elements,
        index,
        generators: gens.to_vec(),
        cayley,
    })
}

impl GeneratedGroup {
    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Mat3] {
        &self.elements
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn generator(&self, label: &str) -> Option<(usize, &Mat3)> {
        self.generators
            .iter()
            .enumerate()
            .find(|(_, g)| g.label == label)
            .map(|(i, g)| (i, &g.matrix))
    }

    pub fn index_of(&self, m: &Mat3) -> Option<usize> {
        if m.ring() != self.ring {
            return None;
        }
        self.index.get(&m.key()).map(|&i| i as usize)
    }

    pub fn contains(&self, m: &Mat3) -> bool {
        self.index_of(m).is_some()
    }

    pub fn has_cayley(&self) -> bool {
        self.cayley.is_some()
    }

    /// Index of `elements[element] * generators[generator]`, when the table
    /// was retained.
    pub fn cayley_step(&self, element: usize, generator: usize) -> Option<usize> {
        let table = self.cayley.as_ref()?;
        table
            .get(element * self.generators.len() + generator)
            .map(|&i| i as usize)
    }

    /// Multiplicative order of every element, indexed like [`Self::elements`].
    pub fn element_orders(&self) -> Vec<u64> {
        let mut orders = vec![0u64; self.elements.len()];
        for start in 0..self.elements.len() {
            if orders[start] != 0 {
                continue;
            }
            let g = self.elements[start];
            // powers[k] = index of g^(k+1)
            let mut powers = Vec::new();
            let mut power = g;
            loop {
                let idx = self.index_of(&power).expect("group is closed");
                powers.push(idx);
                if power.is_identity() {
                    break;
                }
                power = power.mul_same(&g);
            }
            let m = powers.len() as u64;
            for (k, &idx) in powers.iter().enumerate() {
                if orders[idx] == 0 {
                    orders[idx] = m / gcd(k as u64 + 1, m);
                }
            }
        }
        orders
    }

    pub fn fingerprint(&self) -> GroupFingerprint {
        let orders = self.element_orders();
        let mut counts: Vec<(u64, u64)> = Vec::new();
        let mut sorted = orders.clone();
        sorted.sort_unstable();
        for o in sorted {
            match counts.last_mut() {
                Some((last, n)) if *last == o => *n += 1,
                _ => counts.push((o, 1)),
            }
        }
        let gens: Vec<&Mat3> = self.generators.iter().map(|g| &g.matrix).collect();
        let commutes_with_gens = |m: &Mat3| gens.iter().all(|g| m.mul_same(g) == g.mul_same(m));
        let abelian = gens.iter().all(|g| commutes_with_gens(g));
        let center_size = if abelian {
            self.elements.len()
        } else {
            self.elements
                .iter()
                .filter(|m| commutes_with_gens(m))
                .count()
        } as u64;
        GroupFingerprint {
            order: self.elements.len() as u64,
            spectrum: counts,
            abelian,
            center_size,
        }
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Isomorphism-invariant summary: order, element-order spectrum, whether
/// abelian, size of the centre.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupFingerprint {
    pub order: u64,
    /// `(element order, count)` sorted by element order.
    pub spectrum: Vec<(u64, u64)>,
    pub abelian: bool,
    pub center_size: u64,
}

impl fmt::Display for GroupFingerprint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "order={};spectrum=", self.order)?;
        for (i, (o, n)) in self.spectrum.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{o}:{n}")?;
        }
        write!(f, ";abelian={};center={}", self.abelian, self.center_size)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("malformed fingerprint `{0}`")]
pub struct FingerprintParseError(pub String);

impl FromStr for GroupFingerprint {
    type Err = FingerprintParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || FingerprintParseError(String::from(s));
        let mut parts = s.split(';');
        let mut field = |name: &str| {
            parts
                .next()
                .and_then(|p| p.strip_prefix(name))
                .and_then(|p| p.strip_prefix('='))
                .ok_or_else(bad)
        };
        let order = field("order")?.parse().map_err(|_| bad())?;
        let spectrum = field("spectrum")?
            .split(',')
            .map(|pair| {
                let (o, n) = pair.split_once(':')?;
                Some((o.parse().ok()?, n.parse().ok()?))
            })
            .collect::<Option<Vec<(u64, u64)>>>()
            .ok_or_else(bad)?;
        let abelian = field("abelian")?.parse().map_err(|_| bad())?;
        let center_size = field("center")?.parse().map_err(|_| bad())?;
        if parts.next().is_some() {
            return Err(bad());
        }
        Ok(GroupFingerprint {
            order,
            spectrum,
            abelian,
            center_size,
        })
    }
}

/// Result of fingerprint lookup. Only table entries are guaranteed; a match
/// is a statement about invariants, not a certified isomorphism.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupName {
    S3,
    A4,
    S4,
    A5,
    Cyclic(u64),
    Dihedral(u64),
    Unrecognized,
}

impl fmt::Display for GroupName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupName::S3 => f.write_str("S3"),
            GroupName::A4 => f.write_str("A4"),
            GroupName::S4 => f.write_str("S4"),
            GroupName::A5 => f.write_str("A5"),
            GroupName::Cyclic(n) => write!(f, "C{n}"),
            GroupName::Dihedral(n) => write!(f, "D{n}"),
            GroupName::Unrecognized => f.write_str("unrecognized"),
        }
    }
}

impl FromStr for GroupName {
    type Err = FingerprintParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || FingerprintParseError(String::from(s));
        Ok(match s {
            "S3" => GroupName::S3,
            "A4" => GroupName::A4,
            "S4" => GroupName::S4,
            "A5" => GroupName::A5,
            "unrecognized" => GroupName::Unrecognized,
            _ => {
                if let Some(n) = s.strip_prefix('C') {
                    GroupName::Cyclic(n.parse().map_err(|_| bad())?)
                } else if let Some(n) = s.strip_prefix('D') {
                    GroupName::Dihedral(n.parse().map_err(|_| bad())?)
                } else {
                    return Err(bad());
                }
            }
        })
    }
}

/// `(element order, count)` pairs, sorted by order.
pub type Spectrum = &'static [(u64, u64)];

/// Stored spectra of the named non-abelian groups.
pub const NAMED_SPECTRA: [(GroupName, u64, Spectrum); 4] = [
    (GroupName::S3, 6, &[(1, 1), (2, 3), (3, 2)]),
    (GroupName::A4, 12, &[(1, 1), (2, 3), (3, 8)]),
    (GroupName::S4, 24, &[(1, 1), (2, 9), (3, 8), (4, 6)]),
    (GroupName::A5, 60, &[(1, 1), (2, 15), (3, 20), (5, 24)]),
];

/// Euler phi by trial division.
fn totient(mut n: u64) -> u64 {
    let mut result = n;
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            while n.is_multiple_of(d) {
                n /= d;
            }
            result -= result / d;
        }
        d += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// Spectrum of the dihedral group of order `2n`.
pub fn dihedral_spectrum(n: u64) -> Vec<(u64, u64)> {
    let mut spec: Vec<(u64, u64)> = (1..=n)
        .filter(|d| n.is_multiple_of(*d))
        .map(|d| (d, totient(d)))
        .collect();
    match spec.iter_mut().find(|(o, _)| *o == 2) {
        Some((_, c)) => *c += n,
        None => {
            spec.push((2, n));
            spec.sort_unstable();
        }
    }
    spec
}

pub fn recognize(fp: &GroupFingerprint) -> GroupName {
    if !fp.abelian {
        for (name, order, spectrum) in NAMED_SPECTRA {
            if fp.order == order && fp.spectrum == spectrum {
                return name;
            }
        }
    }
    if fp.abelian && fp.spectrum.iter().any(|&(o, _)| o == fp.order) {
        return GroupName::Cyclic(fp.order);
    }
    if fp.order.is_multiple_of(2) && fp.order >= 4 {
        let n = fp.order / 2;
        if fp.abelian == (n <= 2) && fp.spectrum == dihedral_spectrum(n) {
            return GroupName::Dihedral(n);
        }
    }
    GroupName::Unrecognized
}
