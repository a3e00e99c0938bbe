//! Exact values `(a + b√5)/c` and their reduction into finite rings.

use alloc::string::ToString;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::ring::{Elem, Ring, RingError};

/// `(a + b√5)/c` in lowest terms, `c >= 1`.
///
/// Arithmetic panics on `i64` overflow; the values this crate needs have
/// single-digit entries.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct QuadRational {
    a: i64,
    b: i64,
    c: i64,
}

impl QuadRational {
    pub const ZERO: QuadRational = QuadRational { a: 0, b: 0, c: 1 };
    pub const ONE: QuadRational = QuadRational { a: 1, b: 0, c: 1 };

    /// Panics if `c == 0`.
    pub fn new(a: i64, b: i64, c: i64) -> QuadRational {
        assert!(c != 0, "zero denominator");
        Self::normalized(a as i128, b as i128, c as i128)
    }

    pub fn rational(num: i64, den: i64) -> QuadRational {
        Self::new(num, 0, den)
    }

    fn normalized(mut a: i128, mut b: i128, mut c: i128) -> QuadRational {
        if c < 0 {
            (a, b, c) = (-a, -b, -c);
        }
        let g = gcd(gcd(a.unsigned_abs(), b.unsigned_abs()), c.unsigned_abs()).max(1) as i128;
        let narrow = |v: i128| i64::try_from(v / g).expect("QuadRational overflow");
        QuadRational {
            a: narrow(a),
            b: narrow(b),
            c: narrow(c),
        }
    }

    pub fn a(&self) -> i64 {
        self.a
    }

    pub fn b(&self) -> i64 {
        self.b
    }

    pub fn c(&self) -> i64 {
        self.c
    }

    pub fn is_rational(&self) -> bool {
        self.b == 0
    }

    /// Image in `ring`, reading `√5` as [`Elem::sqrt`] of 5.
    pub fn reduce(&self, ring: &Ring) -> Result<Elem, ReduceError> {
        let denom = ring.from_int(self.c);
        let inv = denom
            .inv()
            .map_err(|_| ReduceError::NonInvertibleDenominator {
                denominator: self.c as u64,
            })?;
        let mut value = ring.from_int(self.a);
        if self.b != 0 {
            let root = match ring.from_int(5).sqrt() {
                Ok(Some(root)) => root,
                Ok(None) => return Err(ReduceError::SqrtNotInRing),
                Err(RingError::SearchTooLarge(n)) => return Err(ReduceError::SearchTooLarge(n)),
                Err(_) => return Err(ReduceError::UnsupportedRing),
            };
            let term = ring.from_int(self.b).try_mul(&root).expect("same ring");
            value = value.try_add(&term).expect("same ring");
        }
        Ok(value.try_mul(&inv).expect("same ring"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
pub enum ReduceError {
    #[error("denominator {denominator} is not a unit")]
    NonInvertibleDenominator { denominator: u64 },
    #[error("5 has no square root in this ring")]
    SqrtNotInRing,
    #[error("square roots need a field")]
    UnsupportedRing,
    #[error("square-root search over {0} elements exceeds the search limit")]
    SearchTooLarge(u64),
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl Add for QuadRational {
    type Output = QuadRational;

    fn add(self, rhs: QuadRational) -> QuadRational {
        let (a1, b1, c1) = (self.a as i128, self.b as i128, self.c as i128);
        let (a2, b2, c2) = (rhs.a as i128, rhs.b as i128, rhs.c as i128);
        Self::normalized(a1 * c2 + a2 * c1, b1 * c2 + b2 * c1, c1 * c2)
    }
}

impl Neg for QuadRational {
    type Output = QuadRational;

    fn neg(self) -> QuadRational {
        QuadRational {
            a: -self.a,
            b: -self.b,
            c: self.c,
        }
    }
}

impl Sub for QuadRational {
    type Output = QuadRational;

    fn sub(self, rhs: QuadRational) -> QuadRational {
        self + (-rhs)
    }
}

impl Mul for QuadRational {
    type Output = QuadRational;

    fn mul(self, rhs: QuadRational) -> QuadRational {
        let (a1, b1, c1) = (self.a as i128, self.b as i128, self.c as i128);
        let (a2, b2, c2) = (rhs.a as i128, rhs.b as i128, rhs.c as i128);
        Self::normalized(a1 * a2 + 5 * b1 * b2, a1 * b2 + a2 * b1, c1 * c2)
    }
}

impl fmt::Display for QuadRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = match (self.a, self.b) {
            (a, 0) => a.to_string(),
            (0, 1) => "sqrt5".to_string(),
            (0, -1) => "-sqrt5".to_string(),
            (0, b) => alloc::format!("{b}sqrt5"),
            (a, 1) => alloc::format!("{a}+sqrt5"),
            (a, -1) => alloc::format!("{a}-sqrt5"),
            (a, b) if b > 0 => alloc::format!("{a}+{b}sqrt5"),
            (a, b) => alloc::format!("{a}{b}sqrt5"),
        };
        match (self.c, self.b) {
            (1, _) => f.write_str(&num),
            (c, 0) => write!(f, "{num}/{c}"),
            (c, _) if self.a == 0 => write!(f, "{num}/{c}"),
            (c, _) => write!(f, "({num})/{c}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lowest_terms() {
        let q = QuadRational::new(2, -2, -8);
        assert_eq!((q.a(), q.b(), q.c()), (-1, 1, 4));
        assert_eq!(QuadRational::new(0, 0, 5), QuadRational::ZERO);
    }

    #[test]
    fn reductions() {
        let f5: Ring = "gf:5".parse().unwrap();
        assert_eq!(QuadRational::rational(1, 2).reduce(&f5).unwrap().code(), 3);

        let f11: Ring = "gf:11".parse().unwrap();
        // sqrt5 = 4, (1 - 4) * 4^-1 = -3 * 3 = -9 = 2 mod 11
        assert_eq!(QuadRational::new(1, -1, 4).reduce(&f11).unwrap().code(), 2);

        let f3: Ring = "gf:3".parse().unwrap();
        assert_eq!(
            QuadRational::rational(1, 3).reduce(&f3),
            Err(ReduceError::NonInvertibleDenominator { denominator: 3 })
        );

        let f7: Ring = "gf:7".parse().unwrap();
        assert_eq!(
            QuadRational::new(0, 1, 1).reduce(&f7),
            Err(ReduceError::SqrtNotInRing)
        );

        let z12: Ring = "zmod:12".parse().unwrap();
        assert_eq!(
            QuadRational::new(0, 1, 1).reduce(&z12),
            Err(ReduceError::UnsupportedRing)
        );
        assert_eq!(
            QuadRational::rational(-1, 5).reduce(&z12).unwrap().code(),
            7
        );
    }

    #[test]
    fn display() {
        assert_eq!(QuadRational::new(1, -1, 4).to_string(), "(1-sqrt5)/4");
        assert_eq!(QuadRational::new(0, -1, 5).to_string(), "-sqrt5/5");
        assert_eq!(QuadRational::rational(-1, 3).to_string(), "-1/3");
        assert_eq!(QuadRational::ZERO.to_string(), "0");
    }

    #[test]
    fn exact_field_arithmetic() {
        let phi = QuadRational::new(1, 1, 2);
        // phi^2 = phi + 1
        assert_eq!(phi * phi, phi + QuadRational::ONE);
        assert_eq!(phi - phi, QuadRational::ZERO);
    }
}
