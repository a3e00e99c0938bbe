//! Regular polyhedra over finite rings.
//!
//! A regular 2-polyhedron is described by two parameters, the cosine `x` of
//! its face angle and the cosine `y` of its dihedral angle. Three reflections
//! fixing a flag (vertex, edge midpoint, face centre) are written as 3×3
//! matrices with entries in `Z[x, y]`; substituting values from any ring
//! gives rotation matrices `ρv`, `ρe`, `ρf` whose generated group acts
//! simply transitively on the darts of a regular map.
//!
//! Over a finite ring the group is finite, so the map can be rebuilt:
//!
//! * [`ring`] and [`quad`]: exact arithmetic in `Z/nZ` and `GF(p^k)`, and
//!   reduction of `(a + b√5)/c` parameter values into those rings.
//! * [`mat3`]: 3×3 matrices over a ring, with hashing keys and element orders.
//! * [`universal`]: the reflection and rotation matrices and their relations.
//! * [`group`]: breadth-first closure of generator sets, order-spectrum
//!   fingerprints and small-group recognition.
//! * [`regmap`]: vertex/edge/face counts, genus, dart permutations and map
//!   equivalence.
//! * [`catalog`]: Platonic solids and Euclidean tilings, bad primes and the
//!   spherical/Euclidean/hyperbolic classification of `(p, q)`.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

pub mod catalog;
pub mod group;
pub mod mat3;
pub mod quad;
pub mod regmap;
pub mod ring;
pub mod universal;

pub use catalog::{NamedPolyhedron, Solid, TilingClass};
pub use group::{GeneratedGroup, Generator, GroupFingerprint, GroupName};
pub use mat3::{Mat3, MatKey, Order};
pub use quad::QuadRational;
pub use regmap::{DartModel, MapReport};
pub use ring::{Elem, Ring, RingError, RingSpec};
pub use universal::{GeneratorSet, PolyhedronParams};
