//! 3×3 matrices over a [`Ring`].

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

use crate::ring::{Elem, Ring, RingError};

/// Upper bound on the iteration count of [`Mat3::order`].
pub const DEFAULT_ORDER_CAP: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatError {
    #[error("operands belong to different rings")]
    MixedRings,
    #[error("matrix is not invertible")]
    NotInvertible,
    #[error("malformed matrix `{0}`")]
    Parse(String),
    #[error(transparent)]
    Ring(#[from] RingError),
}

/// Row-major 3×3 matrix. Entries are canonical element codes of `ring`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Mat3 {
    ring: Ring,
    entries: [u32; 9],
}

/// Multiplicative order, or `Unbounded` when it exceeds the cap.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Order {
    Finite(u64),
    Unbounded,
}

impl Order {
    pub fn finite(self) -> Option<u64> {
        match self {
            Order::Finite(m) => Some(m),
            Order::Unbounded => None,
        }
    }
}

const KEY_LEN: usize = 8 + 9 * 4;

/// Byte key: ring cardinality (LE u64) then the nine entry codes (LE u32).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MatKey([u8; KEY_LEN]);

impl MatKey {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

impl Mat3 {
    pub fn identity(ring: Ring) -> Mat3 {
        Mat3 {
            ring,
            entries: [1, 0, 0, 0, 1, 0, 0, 0, 1],
        }
    }

    pub fn from_ints(ring: Ring, values: [i64; 9]) -> Mat3 {
        Mat3 {
            ring,
            entries: values.map(|v| ring.from_int(v).code()),
        }
    }

    pub fn from_elems(values: [Elem; 9]) -> Result<Mat3, MatError> {
        let ring = values[0].ring();
        if values.iter().any(|e| e.ring() != ring) {
            return Err(MatError::MixedRings);
        }
        Ok(Mat3 {
            ring,
            entries: values.map(|e| e.code()),
        })
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn get(&self, row: usize, col: usize) -> Elem {
        self.ring
            .elem(self.entries[3 * row + col])
            .expect("entries are canonical")
    }

    pub fn entries(&self) -> [Elem; 9] {
        self.entries
            .map(|c| self.ring.elem(c).expect("entries are canonical"))
    }

    pub fn codes(&self) -> &[u32; 9] {
        &self.entries
    }

    pub fn is_identity(&self) -> bool {
        self.entries == [1, 0, 0, 0, 1, 0, 0, 0, 1]
    }

    pub fn key(&self) -> MatKey {
        let mut bytes = [0u8; KEY_LEN];
        bytes[..8].copy_from_slice(&self.ring.cardinality().to_le_bytes());
        for (i, code) in self.entries.iter().enumerate() {
            bytes[8 + 4 * i..12 + 4 * i].copy_from_slice(&code.to_le_bytes());
        }
        MatKey(bytes)
    }

    pub fn mul(&self, rhs: &Mat3) -> Result<Mat3, MatError> {
        if self.ring != rhs.ring {
            return Err(MatError::MixedRings);
        }
        Ok(self.mul_same(rhs))
    }

    /// Product of two matrices already known to share a ring.
    pub(crate) fn mul_same(&self, rhs: &Mat3) -> Mat3 {
        let r = &self.ring;
        let (a, b) = (&self.entries, &rhs.entries);
        let mut out = [0u32; 9];
        for i in 0..3 {
            for j in 0..3 {
                let mut acc = 0;
                for k in 0..3 {
                    let (x, y) = (a[3 * i + k], b[3 * k + j]);
                    if x != 0 && y != 0 {
                        acc = r.add_raw(acc, r.mul_raw(x, y));
                    }
                }
                out[3 * i + j] = acc;
            }
        }
        Mat3 {
            ring: self.ring,
            entries: out,
        }
    }

    pub fn det(&self) -> Elem {
        let r = &self.ring;
        let m = |i: usize, j: usize| self.entries[3 * i + j];
        let minor = |i1, j1, i2, j2| {
            r.sub_raw(
                r.mul_raw(m(i1, j1), m(i2, j2)),
                r.mul_raw(m(i1, j2), m(i2, j1)),
            )
        };
        let t0 = r.mul_raw(m(0, 0), minor(1, 1, 2, 2));
        let t1 = r.mul_raw(m(0, 1), minor(1, 0, 2, 2));
        let t2 = r.mul_raw(m(0, 2), minor(1, 0, 2, 1));
        let code = r.add_raw(r.sub_raw(t0, t1), t2);
        r.elem(code).expect("canonical")
    }

    pub fn is_invertible(&self) -> bool {
        self.det().is_unit()
    }

    /// Least `m >= 1` with `A^m = I`, by repeated multiplication.
    pub fn order(&self, cap: u64) -> Result<Order, MatError> {
        if !self.is_invertible() {
            return Err(MatError::NotInvertible);
        }
        let mut power = *self;
        let mut m = 1u64;
        while !power.is_identity() {
            if m >= cap {
                return Ok(Order::Unbounded);
            }
            power = power.mul_same(self);
            m += 1;
        }
        Ok(Order::Finite(m))
    }

    /// Parses the report format `a,b,c;d,e,f;g,h,i`. Entries may be any
    /// element literal accepted by [`Ring::parse_elem`].
    pub fn parse(ring: Ring, text: &str) -> Result<Mat3, MatError> {
        let bad = || MatError::Parse(String::from(text));
        let rows: Vec<&str> = text.trim().split(';').collect();
        if rows.len() != 3 {
            return Err(bad());
        }
        let mut entries = [0u32; 9];
        for (i, row) in rows.iter().enumerate() {
            let cells: Vec<&str> = row.split(',').collect();
            if cells.len() != 3 {
                return Err(bad());
            }
            for (j, cell) in cells.iter().enumerate() {
                entries[3 * i + j] = ring.parse_elem(cell)?.code();
            }
        }
        Ok(Mat3 { ring, entries })
    }
}

impl fmt::Display for Mat3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..3 {
            if i > 0 {
                f.write_str(";")?;
            }
            for j in 0..3 {
                if j > 0 {
                    f.write_str(",")?;
                }
                self.ring.fmt_code(self.entries[3 * i + j], f)?;
            }
        }
        Ok(())
    }
}
