//! Universal reflection and rotation matrices in the parameters
//! `x = cos θ` (face angle) and `y = cos γ` (dihedral angle).
//!
//! The basis is `v0, v1, v2` = vertex, edge midpoint, face centre of a flag,
//! and matrices act on column vectors. A composite `a ∘ b` is the product
//! `M(b)·M(a)`, so `ρv = σ1·σ2`, `ρe = σ0·σ2`, `ρf = σ0·σ1` and the relation
//! `ρf ρe ρv = 1` of the oriented cartographic group reads
//! `M(ρv)·M(ρe)·M(ρf) = I`.

use alloc::vec::Vec;

use crate::mat3::Mat3;
use crate::ring::{Elem, Ring, RingError};

/// Labels used for the rotation generators throughout the crate.
pub const RHO_V: &str = "rho_v";
pub const RHO_E: &str = "rho_e";
pub const RHO_F: &str = "rho_f";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PolyhedronParams {
    x: Elem,
    y: Elem,
}

impl PolyhedronParams {
    pub fn new(x: Elem, y: Elem) -> Result<PolyhedronParams, RingError> {
        if x.ring() != y.ring() {
            return Err(RingError::MixedRings);
        }
        Ok(PolyhedronParams { x, y })
    }

    pub fn from_ints(ring: Ring, x: i64, y: i64) -> PolyhedronParams {
        PolyhedronParams {
            x: ring.from_int(x),
            y: ring.from_int(y),
        }
    }

    pub fn x(&self) -> Elem {
        self.x
    }

    pub fn y(&self) -> Elem {
        self.y
    }

    pub fn ring(&self) -> Ring {
        self.x.ring()
    }
}

/// Entry builder from ring elements; `c(k)` is an integer constant.
struct Entries {
    ring: Ring,
}

impl Entries {
    fn c(&self, v: i64) -> Elem {
        self.ring.from_int(v)
    }

    fn mat(&self, e: [Elem; 9]) -> Mat3 {
        Mat3::from_elems(e).expect("one ring")
    }
}

fn add(a: Elem, b: Elem) -> Elem {
    a.try_add(&b).expect("one ring")
}

fn sub(a: Elem, b: Elem) -> Elem {
    a.try_sub(&b).expect("one ring")
}

fn mul(a: Elem, b: Elem) -> Elem {
    a.try_mul(&b).expect("one ring")
}

/// `[σ0, σ1, σ2]`; each fixes the two basis vectors it does not move.
pub fn sigmas(params: &PolyhedronParams) -> [Mat3; 3] {
    let (x, y) = (params.x, params.y);
    let k = Entries {
        ring: params.ring(),
    };
    let (zero, one) = (k.c(0), k.c(1));
    let sigma0 = k.mat([k.c(-1), zero, zero, k.c(2), one, zero, zero, zero, one]);
    let sigma1 = k.mat([
        one,
        sub(one, x),
        zero,
        zero,
        k.c(-1),
        zero,
        zero,
        add(one, x),
        one,
    ]);
    let sigma2 = k.mat([one, zero, zero, zero, one, sub(one, y), zero, zero, k.c(-1)]);
    [sigma0, sigma1, sigma2]
}

/// The rotations, written out from their closed forms rather than as
/// products of reflections.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Rotations {
    pub rho_v: Mat3,
    pub rho_e: Mat3,
    pub rho_f: Mat3,
}

pub fn rhos(params: &PolyhedronParams) -> Rotations {
    let (x, y) = (params.x, params.y);
    let k = Entries {
        ring: params.ring(),
    };
    let (zero, one) = (k.c(0), k.c(1));
    let one_minus_x = sub(one, x);
    let one_plus_x = add(one, x);
    let one_minus_y = sub(one, y);
    let rho_v = k.mat([
        one,
        one_minus_x,
        mul(one_minus_x, one_minus_y),
        zero,
        k.c(-1),
        sub(y, one),
        zero,
        one_plus_x,
        sub(mul(one_plus_x, one_minus_y), one),
    ]);
    let rho_e = k.mat([
        k.c(-1),
        zero,
        zero,
        k.c(2),
        one,
        one_minus_y,
        zero,
        zero,
        k.c(-1),
    ]);
    let rho_f = k.mat([
        k.c(-1),
        sub(x, one),
        zero,
        k.c(2),
        sub(one, add(x, x)),
        zero,
        zero,
        one_plus_x,
        one,
    ]);
    Rotations {
        rho_v,
        rho_e,
        rho_f,
    }
}

/// All six matrices for one parameter pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GeneratorSet {
    pub sigma: [Mat3; 3],
    pub rho_v: Mat3,
    pub rho_e: Mat3,
    pub rho_f: Mat3,
}

impl GeneratorSet {
    pub fn new(params: &PolyhedronParams) -> GeneratorSet {
        let Rotations {
            rho_v,
            rho_e,
            rho_f,
        } = rhos(params);
        GeneratorSet {
            sigma: sigmas(params),
            rho_v,
            rho_e,
            rho_f,
        }
    }

    /// `(label, matrix)` for the three rotations, in the order v, e, f.
    pub fn rotation_generators(&self) -> Vec<crate::group::Generator> {
        use crate::group::Generator;
        alloc::vec![
            Generator::new(RHO_V, self.rho_v),
            Generator::new(RHO_E, self.rho_e),
            Generator::new(RHO_F, self.rho_f),
        ]
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Relation {
    Sigma0Squared,
    Sigma1Squared,
    Sigma2Squared,
    Sigma0Sigma2Squared,
    RhoESquared,
    RotationProduct,
    RhoVFactor,
    RhoEFactor,
    RhoFFactor,
}

impl Relation {
    pub const ALL: [Relation; 9] = [
        Relation::Sigma0Squared,
        Relation::Sigma1Squared,
        Relation::Sigma2Squared,
        Relation::Sigma0Sigma2Squared,
        Relation::RhoESquared,
        Relation::RotationProduct,
        Relation::RhoVFactor,
        Relation::RhoEFactor,
        Relation::RhoFFactor,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Relation::Sigma0Squared => "sigma0^2=I",
            Relation::Sigma1Squared => "sigma1^2=I",
            Relation::Sigma2Squared => "sigma2^2=I",
            Relation::Sigma0Sigma2Squared => "(sigma0*sigma2)^2=I",
            Relation::RhoESquared => "rho_e^2=I",
            Relation::RotationProduct => "rho_v*rho_e*rho_f=I",
            Relation::RhoVFactor => "rho_v=sigma1*sigma2",
            Relation::RhoEFactor => "rho_e=sigma0*sigma2",
            Relation::RhoFFactor => "rho_f=sigma0*sigma1",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationReport {
    pub checks: Vec<(Relation, bool)>,
}

impl RelationReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|&(_, ok)| ok)
    }

    pub fn failures(&self) -> impl Iterator<Item = Relation> + '_ {
        self.checks.iter().filter(|(_, ok)| !ok).map(|&(r, _)| r)
    }
}

pub fn verify_relations(params: &PolyhedronParams) -> RelationReport {
    let g = GeneratorSet::new(params);
    let [s0, s1, s2] = g.sigma;
    let sq = |m: &Mat3| m.mul_same(m).is_identity();
    let checks = Relation::ALL
        .iter()
        .map(|&rel| {
            let ok = match rel {
                Relation::Sigma0Squared => sq(&s0),
                Relation::Sigma1Squared => sq(&s1),
                Relation::Sigma2Squared => sq(&s2),
                Relation::Sigma0Sigma2Squared => sq(&s0.mul_same(&s2)),
                Relation::RhoESquared => sq(&g.rho_e),
                Relation::RotationProduct => {
                    g.rho_v.mul_same(&g.rho_e).mul_same(&g.rho_f).is_identity()
                }
                Relation::RhoVFactor => g.rho_v == s1.mul_same(&s2),
                Relation::RhoEFactor => g.rho_e == s0.mul_same(&s2),
                Relation::RhoFFactor => g.rho_f == s0.mul_same(&s1),
            };
            (rel, ok)
        })
        .collect();
    RelationReport { checks }
}
