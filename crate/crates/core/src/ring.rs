//! Finite commutative rings `Z/nZ` and `GF(p^k)`.
//!
//! Elements are stored as a single `u32` code: the residue for `Z/nZ`, and
//! the base-`p` number `c0 + c1·p + … + c(k-1)·p^(k-1)` of the coefficient
//! vector for `GF(p^k)`. Codes are canonical, so equality of codes is
//! equality of elements, and ordering of codes is the lexicographic order of
//! coefficient vectors read from the highest power down.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use thiserror::Error;

/// Largest supported extension degree.
pub const MAX_DEGREE: usize = 4;

/// Exhaustive square-root search refuses fields larger than this.
pub const SQRT_SEARCH_LIMIT: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("modulus {0} is too small, need n >= 2")]
    ModulusTooSmall(u64),
    #[error("characteristic {0} is not prime")]
    NonPrimeCharacteristic(u64),
    #[error("polynomial {poly} is reducible over F_{p}")]
    ReduciblePolynomial { poly: String, p: u32 },
    #[error("extension degree {0} is outside 1..=4")]
    UnsupportedDegree(u64),
    #[error("ring of cardinality {0} does not fit a 32-bit element code")]
    TooLarge(u64),
    #[error("no monic irreducible polynomial of degree {degree} over F_{p}")]
    NoIrreducibleFound { p: u32, degree: u32 },
    #[error("element is not a unit")]
    NotAUnit,
    #[error("operands belong to different rings")]
    MixedRings,
    #[error("operation not supported over {0}")]
    UnsupportedRing(String),
    #[error("square-root search over {0} elements exceeds the search limit")]
    SearchTooLarge(u64),
    #[error("malformed ring spec `{0}`")]
    BadSpec(String),
    #[error("malformed element `{0}`")]
    BadElement(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RingKind {
    ZMod,
    GaloisField,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Repr {
    ZMod {
        n: u32,
    },
    Galois {
        p: u32,
        degree: u8,
        /// Low coefficients of the monic modulus `t^k + low[k-1] t^(k-1) + … + low[0]`.
        low: [u32; MAX_DEGREE],
        card: u32,
    },
}

/// A finite commutative ring with identity. Cheap to copy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Ring(Repr);

/// Parsed form of `zmod:<n>`, `gf:<p>`, `gf:<p>^<k>` or `gf:<p>^<k>:<poly>`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RingSpec {
    ZMod(u64),
    Galois {
        p: u64,
        degree: u64,
        /// Coefficients low to high, including the leading one.
        poly: Option<Vec<u64>>,
    },
}

impl FromStr for RingSpec {
    type Err = RingError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || RingError::BadSpec(s.to_string());
        let s = s.trim();
        if let Some(rest) = s.strip_prefix("zmod:") {
            let n = rest.parse::<u64>().map_err(|_| bad())?;
            return Ok(RingSpec::ZMod(n));
        }
        let rest = s.strip_prefix("gf:").ok_or_else(bad)?;
        let (field, poly) = match rest.split_once(':') {
            Some((f, poly)) => (f, Some(poly)),
            None => (rest, None),
        };
        let (p, degree) = match field.split_once('^') {
            Some((p, k)) => (
                p.parse::<u64>().map_err(|_| bad())?,
                k.parse::<u64>().map_err(|_| bad())?,
            ),
            None if poly.is_none() => (field.parse::<u64>().map_err(|_| bad())?, 1),
            None => return Err(bad()),
        };
        let poly = match poly {
            Some(text) => Some(parse_poly(text, p).ok_or_else(bad)?),
            None => None,
        };
        Ok(RingSpec::Galois { p, degree, poly })
    }
}

impl Ring {
    pub fn zmod(n: u64) -> Result<Ring, RingError> {
        if n < 2 {
            return Err(RingError::ModulusTooSmall(n));
        }
        let n = u32::try_from(n).map_err(|_| RingError::TooLarge(n))?;
        Ok(Ring(Repr::ZMod { n }))
    }

    /// `GF(p^k)` with the first monic irreducible of degree `k` in code order
    /// (`t` for `k = 1`).
    pub fn galois(p: u64, degree: u64) -> Result<Ring, RingError> {
        let (p, k, _) = check_field_size(p, degree)?;
        let count = (p as u64).pow(k as u32);
        for code in 0..count {
            let mut poly: Vec<u32> = decode_digits(code, p as u64, k)
                .into_iter()
                .map(|c| c as u32)
                .collect();
            poly.push(1);
            if is_irreducible(&poly, p) {
                return Ok(Self::galois_unchecked(p, &poly));
            }
        }
        Err(RingError::NoIrreducibleFound {
            p,
            degree: k as u32,
        })
    }

    /// `GF(p^k)` as `F_p[t]/(poly)`; `poly` is monic, coefficients low to high.
    pub fn galois_with_poly(p: u64, poly: &[u64]) -> Result<Ring, RingError> {
        let degree = poly.len().saturating_sub(1) as u64;
        let (p32, _, _) = check_field_size(p, degree)?;
        let reduced: Vec<u32> = poly.iter().map(|&c| (c % p) as u32).collect();
        if reduced.last() != Some(&1) || poly.iter().any(|&c| c >= p) {
            return Err(RingError::BadSpec(format_poly(&reduced, "t")));
        }
        if !is_irreducible(&reduced, p32) {
            return Err(RingError::ReduciblePolynomial {
                poly: format_poly(&reduced, "t"),
                p: p32,
            });
        }
        Ok(Self::galois_unchecked(p32, &reduced))
    }

    fn galois_unchecked(p: u32, poly: &[u32]) -> Ring {
        let degree = poly.len() - 1;
        let mut low = [0; MAX_DEGREE];
        low[..degree].copy_from_slice(&poly[..degree]);
        let card = (p as u64).pow(degree as u32) as u32;
        Ring(Repr::Galois {
            p,
            degree: degree as u8,
            low,
            card,
        })
    }

    pub fn from_spec(spec: &RingSpec) -> Result<Ring, RingError> {
        match spec {
            RingSpec::ZMod(n) => Ring::zmod(*n),
            RingSpec::Galois {
                p,
                degree,
                poly: None,
            } => Ring::galois(*p, *degree),
            RingSpec::Galois {
                p,
                degree,
                poly: Some(poly),
            } => {
                if poly.len() as u64 != degree + 1 {
                    return Err(RingError::BadSpec(format_poly(
                        &poly.iter().map(|&c| c as u32).collect::<Vec<_>>(),
                        "t",
                    )));
                }
                Ring::galois_with_poly(*p, poly)
            }
        }
    }

    pub fn kind(&self) -> RingKind {
        match self.0 {
            Repr::ZMod { .. } => RingKind::ZMod,
            Repr::Galois { .. } => RingKind::GaloisField,
        }
    }

    /// `n` for `Z/nZ`, `p` for `GF(p^k)`.
    pub fn modulus(&self) -> u32 {
        match self.0 {
            Repr::ZMod { n } => n,
            Repr::Galois { p, .. } => p,
        }
    }

    pub fn degree(&self) -> u32 {
        match self.0 {
            Repr::ZMod { .. } => 1,
            Repr::Galois { degree, .. } => degree as u32,
        }
    }

    pub fn cardinality(&self) -> u64 {
        match self.0 {
            Repr::ZMod { n } => n as u64,
            Repr::Galois { card, .. } => card as u64,
        }
    }

    /// Monic modulus of a Galois field, coefficients low to high.
    pub fn ext_poly(&self) -> Option<Vec<u32>> {
        match self.0 {
            Repr::ZMod { .. } => None,
            Repr::Galois { degree, low, .. } => {
                let mut poly = low[..degree as usize].to_vec();
                poly.push(1);
                Some(poly)
            }
        }
    }

    pub fn is_field(&self) -> bool {
        match self.0 {
            Repr::ZMod { n } => is_prime(n as u64),
            Repr::Galois { .. } => true,
        }
    }

    /// A field of prime order (`zmod:p` with `p` prime, or `gf:p`).
    pub fn is_prime_field(&self) -> bool {
        self.is_field() && self.degree() == 1
    }

    pub fn zero(&self) -> Elem {
        Elem {
            ring: *self,
            code: 0,
        }
    }

    pub fn one(&self) -> Elem {
        Elem {
            ring: *self,
            code: 1,
        }
    }

    /// Image of an integer under `Z -> R`.
    pub fn from_int(&self, value: i64) -> Elem {
        let m = self.modulus() as i64;
        Elem {
            ring: *self,
            code: value.rem_euclid(m) as u32,
        }
    }

    pub fn elem(&self, code: u32) -> Option<Elem> {
        ((code as u64) < self.cardinality()).then_some(Elem { ring: *self, code })
    }

    /// All elements in code order.
    pub fn elements(&self) -> impl Iterator<Item = Elem> + '_ {
        let ring = *self;
        (0..self.cardinality() as u32).map(move |code| Elem { ring, code })
    }

    /// Parses the canonical printing of an element. Plain integers, possibly
    /// negative, are accepted in every ring and reduced.
    pub fn parse_elem(&self, text: &str) -> Result<Elem, RingError> {
        let text = text.trim();
        if let Ok(v) = text.parse::<i64>() {
            return Ok(self.from_int(v));
        }
        let bad = || RingError::BadElement(text.to_string());
        match self.0 {
            Repr::ZMod { .. } => Err(bad()),
            Repr::Galois { p, degree, .. } => {
                let coeffs = parse_poly(text, p as u64).ok_or_else(bad)?;
                if coeffs.len() > degree as usize {
                    return Err(bad());
                }
                let mut code = 0u64;
                for &c in coeffs.iter().rev() {
                    code = code * p as u64 + c;
                }
                Ok(Elem {
                    ring: *self,
                    code: code as u32,
                })
            }
        }
    }

    /// Coefficients of an element, low to high, length `degree`.
    pub fn coefficients(&self, code: u32) -> Vec<u32> {
        decode_digits(code as u64, self.modulus() as u64, self.degree() as usize)
            .into_iter()
            .map(|c| c as u32)
            .collect()
    }

    pub(crate) fn add_raw(&self, a: u32, b: u32) -> u32 {
        match self.0 {
            Repr::ZMod { n } => add_mod(a, b, n),
            Repr::Galois { p, degree: 1, .. } => add_mod(a, b, p),
            Repr::Galois { p, degree, .. } => {
                let (x, y) = (digits(a, p, degree), digits(b, p, degree));
                let mut out = [0u32; MAX_DEGREE];
                for i in 0..degree as usize {
                    out[i] = add_mod(x[i], y[i], p);
                }
                undigits(&out, p, degree)
            }
        }
    }

    pub(crate) fn neg_raw(&self, a: u32) -> u32 {
        match self.0 {
            Repr::ZMod { n } => neg_mod(a, n),
            Repr::Galois { p, degree: 1, .. } => neg_mod(a, p),
            Repr::Galois { p, degree, .. } => {
                let mut x = digits(a, p, degree);
                for c in x.iter_mut().take(degree as usize) {
                    *c = neg_mod(*c, p);
                }
                undigits(&x, p, degree)
            }
        }
    }

    pub(crate) fn sub_raw(&self, a: u32, b: u32) -> u32 {
        self.add_raw(a, self.neg_raw(b))
    }

    pub(crate) fn mul_raw(&self, a: u32, b: u32) -> u32 {
        match self.0 {
            Repr::ZMod { n } => mul_mod(a, b, n),
            Repr::Galois { p, degree: 1, .. } => mul_mod(a, b, p),
            Repr::Galois { p, degree, low, .. } => {
                let k = degree as usize;
                let (x, y) = (digits(a, p, degree), digits(b, p, degree));
                let pm = p as u64;
                let mut prod = [0u64; 2 * MAX_DEGREE - 1];
                for i in 0..k {
                    if x[i] == 0 {
                        continue;
                    }
                    for j in 0..k {
                        prod[i + j] = (prod[i + j] + x[i] as u64 * y[j] as u64) % pm;
                    }
                }
                // t^k = -(low[0] + … + low[k-1] t^(k-1))
                for d in (k..2 * k - 1).rev() {
                    let c = prod[d];
                    if c == 0 {
                        continue;
                    }
                    prod[d] = 0;
                    for i in 0..k {
                        let sub = c * low[i] as u64 % pm;
                        prod[d - k + i] = (prod[d - k + i] + pm - sub) % pm;
                    }
                }
                let mut out = [0u32; MAX_DEGREE];
                for i in 0..k {
                    out[i] = prod[i] as u32;
                }
                undigits(&out, p, degree)
            }
        }
    }

    pub(crate) fn pow_raw(&self, a: u32, mut exp: u64) -> u32 {
        let mut base = a;
        let mut acc = 1;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul_raw(acc, base);
            }
            base = self.mul_raw(base, base);
            exp >>= 1;
        }
        acc
    }

    pub(crate) fn inv_raw(&self, a: u32) -> Option<u32> {
        match self.0 {
            Repr::ZMod { n } => inv_mod(a, n),
            Repr::Galois { .. } if a == 0 => None,
            Repr::Galois { card, .. } => Some(self.pow_raw(a, card as u64 - 2)),
        }
    }

    pub(crate) fn is_unit_raw(&self, a: u32) -> bool {
        self.inv_raw(a).is_some()
    }

    pub(crate) fn fmt_code(&self, code: u32, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            Repr::ZMod { .. } | Repr::Galois { degree: 1, .. } => write!(f, "{code}"),
            Repr::Galois { .. } => f.write_str(&format_poly(&self.coefficients(code), "t")),
        }
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            Repr::ZMod { n } => write!(f, "zmod:{n}"),
            Repr::Galois {
                p, degree: 1, low, ..
            } if low[0] == 0 => write!(f, "gf:{p}"),
            Repr::Galois { p, degree, .. } => {
                let poly = self.ext_poly().unwrap_or_default();
                write!(f, "gf:{p}^{degree}:{}", format_poly(&poly, "t"))
            }
        }
    }
}

impl FromStr for Ring {
    type Err = RingError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ring::from_spec(&s.parse()?)
    }
}

/// An element of a [`Ring`] in canonical form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Elem {
    ring: Ring,
    code: u32,
}

impl Elem {
    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn code(&self) -> u32 {
        self.code
    }

    pub fn is_zero(&self) -> bool {
        self.code == 0
    }

    pub fn is_one(&self) -> bool {
        self.code == 1
    }

    fn same_ring(&self, other: &Elem) -> Result<Ring, RingError> {
        if self.ring == other.ring {
            Ok(self.ring)
        } else {
            Err(RingError::MixedRings)
        }
    }

    pub fn try_add(&self, other: &Elem) -> Result<Elem, RingError> {
        let ring = self.same_ring(other)?;
        Ok(Elem {
            ring,
            code: ring.add_raw(self.code, other.code),
        })
    }

    pub fn try_sub(&self, other: &Elem) -> Result<Elem, RingError> {
        let ring = self.same_ring(other)?;
        Ok(Elem {
            ring,
            code: ring.sub_raw(self.code, other.code),
        })
    }

    pub fn try_mul(&self, other: &Elem) -> Result<Elem, RingError> {
        let ring = self.same_ring(other)?;
        Ok(Elem {
            ring,
            code: ring.mul_raw(self.code, other.code),
        })
    }

    pub fn neg(&self) -> Elem {
        Elem {
            ring: self.ring,
            code: self.ring.neg_raw(self.code),
        }
    }

    pub fn inv(&self) -> Result<Elem, RingError> {
        let code = self.ring.inv_raw(self.code).ok_or(RingError::NotAUnit)?;
        Ok(Elem {
            ring: self.ring,
            code,
        })
    }

    pub fn is_unit(&self) -> bool {
        self.ring.is_unit_raw(self.code)
    }

    pub fn pow(&self, exp: u64) -> Elem {
        Elem {
            ring: self.ring,
            code: self.ring.pow_raw(self.code, exp),
        }
    }

    /// A square root by exhaustive search; of `±r` the one with the smaller
    /// code is returned. Only defined over fields.
    pub fn sqrt(&self) -> Result<Option<Elem>, RingError> {
        let ring = self.ring;
        if !ring.is_field() {
            return Err(RingError::UnsupportedRing(ring.to_string()));
        }
        let card = ring.cardinality();
        if card > SQRT_SEARCH_LIMIT {
            return Err(RingError::SearchTooLarge(card));
        }
        Ok((0..card as u32)
            .find(|&r| ring.mul_raw(r, r) == self.code)
            .map(|code| Elem { ring, code }))
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.ring.fmt_code(self.code, f)
    }
}

fn check_field_size(p: u64, degree: u64) -> Result<(u32, usize, u64), RingError> {
    if p < 2 {
        return Err(RingError::ModulusTooSmall(p));
    }
    if !is_prime(p) {
        return Err(RingError::NonPrimeCharacteristic(p));
    }
    if degree == 0 || degree > MAX_DEGREE as u64 {
        return Err(RingError::UnsupportedDegree(degree));
    }
    let card = (p as u128).pow(degree as u32);
    if card > u32::MAX as u128 {
        return Err(RingError::TooLarge(card.min(u64::MAX as u128) as u64));
    }
    Ok((p as u32, degree as usize, card as u64))
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime factors in increasing order.
pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn add_mod(a: u32, b: u32, m: u32) -> u32 {
    let s = a as u64 + b as u64;
    (if s >= m as u64 { s - m as u64 } else { s }) as u32
}

fn neg_mod(a: u32, m: u32) -> u32 {
    if a == 0 {
        0
    } else {
        m - a
    }
}

fn mul_mod(a: u32, b: u32, m: u32) -> u32 {
    (a as u64 * b as u64 % m as u64) as u32
}

fn inv_mod(a: u32, m: u32) -> Option<u32> {
    let (mut r0, mut r1) = (m as i64, a as i64);
    let (mut t0, mut t1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    (r0 == 1).then(|| t0.rem_euclid(m as i64) as u32)
}

fn digits(code: u32, p: u32, degree: u8) -> [u32; MAX_DEGREE] {
    let mut out = [0; MAX_DEGREE];
    let mut c = code;
    for d in out.iter_mut().take(degree as usize) {
        *d = c % p;
        c /= p;
    }
    out
}

fn undigits(coeffs: &[u32; MAX_DEGREE], p: u32, degree: u8) -> u32 {
    coeffs[..degree as usize]
        .iter()
        .rev()
        .fold(0u32, |acc, &c| acc * p + c)
}

fn decode_digits(mut code: u64, p: u64, len: usize) -> Vec<u64> {
    let mut out = vec![0; len];
    for d in out.iter_mut() {
        *d = code % p;
        code /= p;
    }
    out
}

/// Remainder of `a` modulo monic `b` over `F_p`; both low to high.
fn poly_rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut r: Vec<u64> = a.iter().map(|&c| c as u64).collect();
    let db = b.len() - 1;
    let pm = p as u64;
    while r.len() > db {
        let lead = r.pop().unwrap_or(0);
        if lead != 0 {
            let shift = r.len() - db;
            for i in 0..db {
                r[shift + i] = (r[shift + i] + pm - lead * b[i] as u64 % pm) % pm;
            }
        }
    }
    r.into_iter().map(|c| c as u32).collect()
}

/// Monic `poly` of degree <= 4 is irreducible iff it has no monic factor of
/// degree 1..=deg/2.
fn is_irreducible(poly: &[u32], p: u32) -> bool {
    let degree = poly.len() - 1;
    for d in 1..=degree / 2 {
        let count = (p as u64).pow(d as u32);
        for code in 0..count {
            let mut divisor: Vec<u32> = decode_digits(code, p as u64, d)
                .into_iter()
                .map(|c| c as u32)
                .collect();
            divisor.push(1);
            if poly_rem(poly, &divisor, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

/// Descending powers, e.g. `3t^2+t+4`; zero prints as `0`.
pub(crate) fn format_poly(coeffs: &[u32], var: &str) -> String {
    let mut out = String::new();
    for (e, &c) in coeffs.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        if !out.is_empty() {
            out.push('+');
        }
        match (e, c) {
            (0, c) => out.push_str(&c.to_string()),
            (1, 1) => out.push_str(var),
            (1, c) => {
                out.push_str(&c.to_string());
                out.push_str(var);
            }
            (e, 1) => {
                out.push_str(var);
                out.push('^');
                out.push_str(&e.to_string());
            }
            (e, c) => {
                out.push_str(&c.to_string());
                out.push_str(var);
                out.push('^');
                out.push_str(&e.to_string());
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Parses `c`, `t`, `ct`, `c*t^e` terms joined by `+`; coefficients must lie
/// in `[0, p)`. Returns coefficients low to high with trailing zeros trimmed.
fn parse_poly(text: &str, p: u64) -> Option<Vec<u64>> {
    let mut coeffs: Vec<u64> = Vec::new();
    for term in text.split('+') {
        let term = term.trim();
        if term.is_empty() {
            return None;
        }
        let (coeff, exp) = match term.find('t') {
            None => (term.parse::<u64>().ok()?, 0usize),
            Some(pos) => {
                let head = term[..pos].trim_end_matches('*');
                let coeff = if head.is_empty() {
                    1
                } else {
                    head.parse::<u64>().ok()?
                };
                let tail = &term[pos + 1..];
                let exp = if tail.is_empty() {
                    1
                } else {
                    tail.strip_prefix('^')?.parse::<usize>().ok()?
                };
                (coeff, exp)
            }
        };
        if coeff >= p || exp > 2 * MAX_DEGREE {
            return None;
        }
        if coeffs.len() <= exp {
            coeffs.resize(exp + 1, 0);
        }
        coeffs[exp] = (coeffs[exp] + coeff) % p;
    }
    while coeffs.len() > 1 && coeffs.last() == Some(&0) {
        coeffs.pop();
    }
    Some(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(s: &str) -> Ring {
        s.parse().unwrap()
    }

    #[test]
    fn make_zmod_and_prime_field() {
        let r = ring("zmod:12");
        assert_eq!(r.kind(), RingKind::ZMod);
        assert_eq!(r.cardinality(), 12);
        let f = ring("gf:7");
        assert_eq!(f.kind(), RingKind::GaloisField);
        assert_eq!(f.cardinality(), 7);
        assert_eq!(f.ext_poly(), Some(vec![0, 1]));
    }

    #[test]
    fn gf4_finds_the_only_irreducible_quadratic() {
        // Monic quadratics over F2: t^2, t^2+1 = (t+1)^2, t^2+t = t(t+1), t^2+t+1.
        let brute: Vec<u32> = (0..4u32)
            .filter(|&c| {
                let (c0, c1) = (c & 1, c >> 1);
                // irreducible iff no root in F2
                (0..2u32).all(|t| (t * t + c1 * t + c0) % 2 != 0)
            })
            .collect();
        assert_eq!(brute, vec![3]);
        let f = ring("gf:2^2");
        assert_eq!(f.cardinality(), 4);
        assert_eq!(f.ext_poly(), Some(vec![1, 1, 1]));
        assert_eq!(f.to_string(), "gf:2^2:t^2+t+1");
    }

    #[test]
    fn construction_errors() {
        assert_eq!(Ring::zmod(1), Err(RingError::ModulusTooSmall(1)));
        assert_eq!(
            Ring::galois(6, 1),
            Err(RingError::NonPrimeCharacteristic(6))
        );
        assert!(matches!(
            "gf:2^2:t^2+1".parse::<Ring>(),
            Err(RingError::ReduciblePolynomial { .. })
        ));
        assert!(matches!(
            "gf:7^5".parse::<Ring>(),
            Err(RingError::UnsupportedDegree(5))
        ));
        assert!(matches!(
            "gf:7^2:t^3+1".parse::<Ring>(),
            Err(RingError::BadSpec(_))
        ));
        assert!(matches!(
            "gf:7^2:t^2+9".parse::<Ring>(),
            Err(RingError::BadSpec(_))
        ));
        assert!(matches!(
            "zmod:x".parse::<Ring>(),
            Err(RingError::BadSpec(_))
        ));
        assert!(matches!(
            "foo:3".parse::<Ring>(),
            Err(RingError::BadSpec(_))
        ));
    }

    #[test]
    fn explicit_polynomial_spec() {
        let f = ring("gf:7^2:t^2+2");
        assert_eq!(f.ext_poly(), Some(vec![2, 0, 1]));
        assert_eq!(f.to_string(), "gf:7^2:t^2+2");
        assert_eq!(ring("gf:3^2:1*t^2+t+2").ext_poly(), Some(vec![2, 1, 1]));
    }

    #[test]
    fn inverses_and_units() {
        let f = ring("gf:7");
        assert_eq!(f.from_int(3).inv().unwrap(), f.from_int(5));
        let z4 = ring("zmod:4");
        assert_eq!(z4.from_int(2).inv(), Err(RingError::NotAUnit));
        assert_eq!(z4.from_int(3).inv().unwrap(), z4.from_int(3));
        assert_eq!(f.zero().inv(), Err(RingError::NotAUnit));
    }

    #[test]
    fn gf4_square_of_t_plus_one() {
        let f = ring("gf:2^2");
        let a = f.parse_elem("t+1").unwrap();
        let sq = a.try_mul(&a).unwrap();
        assert_eq!(sq, f.parse_elem("t").unwrap());
        assert_eq!(sq.to_string(), "t");
    }

    #[test]
    fn mixed_rings_are_rejected() {
        let a = ring("gf:7").one();
        let b = ring("zmod:7").one();
        assert_eq!(a.try_add(&b), Err(RingError::MixedRings));
        assert_eq!(a.try_mul(&b), Err(RingError::MixedRings));
    }

    #[test]
    fn square_roots() {
        let f11 = ring("gf:11");
        // exhaustive: r^2 = 5 mod 11 for r in {4, 7}
        let roots: Vec<u32> = (0..11).filter(|r| r * r % 11 == 5).collect();
        assert_eq!(roots, vec![4, 7]);
        assert_eq!(f11.from_int(5).sqrt().unwrap(), Some(f11.from_int(4)));
        let f7 = ring("gf:7");
        assert_eq!(f7.from_int(5).sqrt().unwrap(), None);
        assert_eq!(f7.zero().sqrt().unwrap(), Some(f7.zero()));
        assert!(matches!(
            ring("zmod:12").from_int(4).sqrt(),
            Err(RingError::UnsupportedRing(_))
        ));
        // a prime ZMod is a field
        assert_eq!(
            ring("zmod:11")
                .from_int(5)
                .sqrt()
                .unwrap()
                .map(|e| e.code()),
            Some(4)
        );
        let f49 = ring("gf:7^2:t^2+2");
        let r = f49.from_int(5).sqrt().unwrap().unwrap();
        assert_eq!(r.to_string(), "t");
    }

    #[test]
    fn element_printing_and_parsing() {
        let f = ring("gf:3^2");
        for e in f.elements() {
            assert_eq!(f.parse_elem(&e.to_string()).unwrap(), e);
        }
        assert_eq!(ring("zmod:12").parse_elem("-1").unwrap().code(), 11);
        assert!(ring("zmod:12").parse_elem("t").is_err());
        assert!(f.parse_elem("t^2").is_err());
        assert_eq!(f.parse_elem("2t+1").unwrap().to_string(), "2t+1");
    }

    #[test]
    fn prime_factorisation() {
        assert_eq!(prime_factors(1), Vec::<u64>::new());
        assert_eq!(prime_factors(12), vec![2, 3]);
        assert_eq!(prime_factors(97), vec![97]);
    }
}
