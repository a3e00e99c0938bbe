//! Built-in parameter values for the Platonic solids and the three regular
//! Euclidean tilings, with bad-prime analysis and specialization.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use thiserror::Error;

use crate::group::GroupName;
use crate::quad::{QuadRational, ReduceError};
use crate::ring::{prime_factors, Ring, RingError};
use crate::universal::PolyhedronParams;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Solid {
    Tetrahedron,
    Cube,
    Octahedron,
    Dodecahedron,
    Icosahedron,
    SquareTiling,
    TriangularTiling,
    HexagonalTiling,
}

impl Solid {
    pub const ALL: [Solid; 8] = [
        Solid::Tetrahedron,
        Solid::Cube,
        Solid::Octahedron,
        Solid::Dodecahedron,
        Solid::Icosahedron,
        Solid::SquareTiling,
        Solid::TriangularTiling,
        Solid::HexagonalTiling,
    ];

    pub const PLATONIC: [Solid; 5] = [
        Solid::Tetrahedron,
        Solid::Cube,
        Solid::Octahedron,
        Solid::Dodecahedron,
        Solid::Icosahedron,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Solid::Tetrahedron => "tetrahedron",
            Solid::Cube => "cube",
            Solid::Octahedron => "octahedron",
            Solid::Dodecahedron => "dodecahedron",
            Solid::Icosahedron => "icosahedron",
            Solid::SquareTiling => "square_tiling",
            Solid::TriangularTiling => "triangular_tiling",
            Solid::HexagonalTiling => "hexagonal_tiling",
        }
    }

    pub fn params(&self) -> NamedPolyhedron {
        let q = QuadRational::new;
        let (x, y, pq, group) = match self {
            Solid::Tetrahedron => (
                q(1, 0, 2),
                q(1, 0, 3),
                (3, 3),
                ExpectedGroup::Finite(GroupName::A4),
            ),
            Solid::Cube => (
                q(0, 0, 1),
                q(0, 0, 1),
                (3, 4),
                ExpectedGroup::Finite(GroupName::S4),
            ),
            Solid::Octahedron => (
                q(1, 0, 2),
                q(-1, 0, 3),
                (4, 3),
                ExpectedGroup::Finite(GroupName::S4),
            ),
            Solid::Dodecahedron => (
                q(1, -1, 4),
                q(0, -1, 5),
                (3, 5),
                ExpectedGroup::Finite(GroupName::A5),
            ),
            Solid::Icosahedron => (
                q(1, 0, 2),
                q(0, -1, 3),
                (5, 3),
                ExpectedGroup::Finite(GroupName::A5),
            ),
            Solid::SquareTiling => (q(0, 0, 1), q(-1, 0, 1), (4, 4), ExpectedGroup::Infinite),
            Solid::TriangularTiling => (q(1, 0, 2), q(-1, 0, 1), (6, 3), ExpectedGroup::Infinite),
            Solid::HexagonalTiling => (q(-1, 0, 2), q(-1, 0, 1), (3, 6), ExpectedGroup::Infinite),
        };
        NamedPolyhedron {
            solid: *self,
            x,
            y,
            expected_pq: pq,
            expected_group: group,
        }
    }

    /// Bad primes as listed in the original write-up of these examples.
    /// They disagree with the denominator rule for the dodecahedron (which
    /// adds 3) and the icosahedron (5 instead of 3).
    pub fn published_bad_primes(&self) -> Option<&'static [u64]> {
        match self {
            Solid::Tetrahedron | Solid::Octahedron => Some(&[2, 3]),
            Solid::Cube => Some(&[]),
            Solid::Dodecahedron => Some(&[2, 3, 5]),
            Solid::Icosahedron => Some(&[2, 5]),
            _ => None,
        }
    }
}

impl fmt::Display for Solid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Solid {
    type Err = CatalogError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Solid::ALL
            .into_iter()
            .find(|solid| solid.name() == s)
            .ok_or_else(|| CatalogError::UnknownName(s.to_string()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ExpectedGroup {
    Finite(GroupName),
    Infinite,
}

impl fmt::Display for ExpectedGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExpectedGroup::Finite(name) => name.fmt(f),
            ExpectedGroup::Infinite => f.write_str("infinite"),
        }
    }
}

/// `x = cos θ`, `y = cos γ` and the characteristic-zero expectations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct NamedPolyhedron {
    pub solid: Solid,
    pub x: QuadRational,
    pub y: QuadRational,
    pub expected_pq: (u64, u64),
    pub expected_group: ExpectedGroup,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Param {
    X,
    Y,
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Param::X => "x",
            Param::Y => "y",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BadPrime {
    pub prime: u64,
    /// Parameters whose denominator the prime divides.
    pub params: Vec<Param>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BadPrimeReport {
    pub bad: Vec<BadPrime>,
    /// Some parameter involves `√5`, so primes where 5 is a non-residue need
    /// a quadratic extension (see [`prime_status`]).
    pub involves_sqrt5: bool,
}

impl BadPrimeReport {
    pub fn primes(&self) -> Vec<u64> {
        self.bad.iter().map(|b| b.prime).collect()
    }
}

/// Primes dividing a denominator of `x` or `y`.
pub fn bad_primes(poly: &NamedPolyhedron) -> BadPrimeReport {
    let mut bad: Vec<BadPrime> = Vec::new();
    for (param, value) in [(Param::X, poly.x), (Param::Y, poly.y)] {
        for prime in prime_factors(value.c() as u64) {
            match bad.iter_mut().find(|b| b.prime == prime) {
                Some(entry) => entry.params.push(param),
                None => bad.push(BadPrime {
                    prime,
                    params: alloc::vec![param],
                }),
            }
        }
    }
    bad.sort_by_key(|b| b.prime);
    BadPrimeReport {
        bad,
        involves_sqrt5: !poly.x.is_rational() || !poly.y.is_rational(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PrimeStatus {
    Good,
    Bad(Vec<Param>),
    /// Defined, but only over `GF(p^2)`.
    NeedsExtension,
}

/// Status of one prime for one polyhedron. Panics if `prime` is not prime.
pub fn prime_status(poly: &NamedPolyhedron, prime: u64) -> PrimeStatus {
    if let Some(b) = bad_primes(poly).bad.into_iter().find(|b| b.prime == prime) {
        return PrimeStatus::Bad(b.params);
    }
    if poly.x.is_rational() && poly.y.is_rational() {
        return PrimeStatus::Good;
    }
    let field = Ring::galois(prime, 1).expect("prime field");
    match field.from_int(5).sqrt() {
        Ok(Some(_)) => PrimeStatus::Good,
        _ => PrimeStatus::NeedsExtension,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TilingClass {
    Spherical,
    Euclidean,
    Hyperbolic,
}

impl fmt::Display for TilingClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TilingClass::Spherical => "spherical",
            TilingClass::Euclidean => "euclidean",
            TilingClass::Hyperbolic => "hyperbolic",
        })
    }
}

/// Compares the angle sum `p (q-2)π/q` at a vertex with `2π`.
pub fn classify_pq(p: u64, q: u64) -> TilingClass {
    let (lhs, rhs) = (p as u128 * (q as u128).saturating_sub(2), 2 * q as u128);
    match lhs.cmp(&rhs) {
        core::cmp::Ordering::Less => TilingClass::Spherical,
        core::cmp::Ordering::Equal => TilingClass::Euclidean,
        core::cmp::Ordering::Greater => TilingClass::Hyperbolic,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("unknown polyhedron `{0}`")]
    UnknownName(String),
    #[error("bad prime {prime}: denominator of {param} is not invertible")]
    BadPrime { prime: u64, param: Param },
    #[error("sqrt5 is not in F_{prime}; enable auto-extend to work over GF({prime}^2)")]
    ExtensionDisabled { prime: u64 },
    #[error("sqrt5 is not in {0}, and only prime fields can be extended")]
    ExtensionUnsupported(String),
    #[error(transparent)]
    Reduce(#[from] ReduceError),
    #[error(transparent)]
    Ring(#[from] RingError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Specialization {
    pub params: PolyhedronParams,
    /// The ring the parameters live in; differs from the requested ring
    /// after a quadratic extension.
    pub ring: Ring,
    pub extended: bool,
}

pub fn specialize(
    poly: &NamedPolyhedron,
    ring: &Ring,
    auto_extend: bool,
) -> Result<Specialization, CatalogError> {
    for (param, value) in [(Param::X, poly.x), (Param::Y, poly.y)] {
        let denom = value.c() as u64;
        if !ring.from_int(value.c()).is_unit() {
            let shared = gcd(denom, ring.modulus() as u64);
            let prime = prime_factors(shared).first().copied().unwrap_or(shared);
            return Err(CatalogError::BadPrime { prime, param });
        }
    }
    match reduce_pair(poly, ring) {
        Ok(params) => Ok(Specialization {
            params,
            ring: *ring,
            extended: false,
        }),
        Err(ReduceError::SqrtNotInRing) => {
            let prime = ring.modulus() as u64;
            if !auto_extend {
                return Err(CatalogError::ExtensionDisabled { prime });
            }
            if !ring.is_prime_field() {
                return Err(CatalogError::ExtensionUnsupported(ring.to_string()));
            }
            // t^2 - 5 is irreducible exactly when 5 is a non-residue
            let ext = Ring::galois_with_poly(prime, &[(prime - 5 % prime) % prime, 0, 1])?;
            let params = reduce_pair(poly, &ext)?;
            Ok(Specialization {
                params,
                ring: ext,
                extended: true,
            })
        }
        Err(e) => Err(e.into()),
    }
}

fn reduce_pair(poly: &NamedPolyhedron, ring: &Ring) -> Result<PolyhedronParams, ReduceError> {
    let x = poly.x.reduce(ring)?;
    let y = poly.y.reduce(ring)?;
    Ok(PolyhedronParams::new(x, y).expect("same ring"))
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}
