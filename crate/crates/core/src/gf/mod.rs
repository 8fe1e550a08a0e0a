//! Exact arithmetic in GF(p^m) for p^m ≤ 2^16.
//!
//! A [`Field`] owns the modulus and its exp/log tables and is cheap to clone
//! (shared behind an `Arc`). Elements are plain [`Elem`] handles holding the
//! integer encoding `Σ d_j p^j` of their coefficient digits, constant term
//! first; all arithmetic goes through the field that produced them.
//!
//! ```
//! use trs_hull::gf::Field;
//!
//! let f = Field::parse("GF(2^4)").unwrap();
//! let g = f.gamma();
//! // x^4 + x + 1 is the default modulus, so γ^4 = γ + 1.
//! assert_eq!(f.pow(g, 4), f.add(g, f.one()));
//! ```

mod conway;
mod poly;

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;


/// Largest supported field order.
pub const MAX_ORDER: u64 = 1 << 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GfError {
    #[error("characteristic {0} is not prime")]
    NonPrimeCharacteristic(u32),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("field order {0} exceeds the supported maximum 2^16")]
    TooLarge(u64),
    #[error("malformed modulus: {0}")]
    BadModulus(String),
    #[error("modulus is reducible over GF({0})")]
    ReducibleModulus(u32),
    #[error("modulus is irreducible but not primitive")]
    NonPrimitiveModulus,
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} is not the order of a subfield of GF({1})")]
    NotASubfieldOrder(u64, u32),
    #[error("element encoding {0} out of range for GF({1})")]
    ElementOutOfRange(u64, u32),
    #[error("cannot parse {what} from {input:?}")]
    Parse { what: &'static str, input: String },
}

/// Field description: characteristic, degree and an optional explicit modulus.
///
/// Without a modulus the Conway polynomial for `p^m` is used.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldSpec {
    pub p: u32,
    pub m: u32,
    /// Monic modulus coefficients, constant term first (length m + 1).
    pub modulus: Option<Vec<u32>>,
}

impl FieldSpec {
    pub fn new(p: u32, m: u32) -> Self {
        FieldSpec { p, m, modulus: None }
    }

    pub fn with_modulus(p: u32, m: u32, modulus: Vec<u32>) -> Self {
        FieldSpec { p, m, modulus: Some(modulus) }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{}", self.p, self.m)?;
        if let Some(c) = &self.modulus {
            let parts: Vec<String> = c.iter().map(u32::to_string).collect();
            write!(f, ";{}", parts.join(","))?;
        }
        write!(f, ")")
    }
}

impl FromStr for FieldSpec {
    type Err = GfError;

    /// Accepts `GF(p^m)`, `GF(p)` and `GF(p^m;c0,c1,...,cm)`.
    fn from_str(s: &str) -> Result<Self, GfError> {
        let bad = || GfError::Parse { what: "field spec", input: s.to_string() };
        let body = s
            .trim()
            .strip_prefix("GF(")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(bad)?;
        let (size, modulus) = match body.split_once(';') {
            Some((size, coeffs)) => {
                let c = coeffs
                    .split(',')
                    .map(|t| t.trim().parse::<u32>())
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(|_| bad())?;
                (size, Some(c))
            }
            None => (body, None),
        };
        let (p, m) = match size.split_once('^') {
            Some((p, m)) => (p.trim().parse().map_err(|_| bad())?, m.trim().parse().map_err(|_| bad())?),
            None => (size.trim().parse().map_err(|_| bad())?, 1),
        };
        Ok(FieldSpec { p, m, modulus })
    }
}

/// A field element, encoded as the integer `Σ d_j p^j` of its digits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Elem(u32);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    /// The integer encoding.
    pub fn value(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

struct FieldInner {
    p: u32,
    m: u32,
    q: u32,
    modulus: Vec<u32>,
    conway: bool,
    /// exp[i] = γ^i for i in [0, 2(q-1)), doubled so products skip a reduction.
    exp: Vec<u32>,
    /// log[x] for nonzero x; log[0] is unused.
    log: Vec<u32>,
}

/// A finite field GF(p^m) with a designated primitive element γ (the class of
/// the modulus root).
#[derive(Clone)]
pub struct Field {
    inner: Arc<FieldInner>,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Field({})", self.spec())
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.spec())
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.p == other.inner.p && self.inner.modulus == other.inner.modulus)
    }
}

impl Eq for Field {}

impl Field {
    /// Builds the field, checking that `p` is prime and that the modulus is
    /// monic, irreducible and primitive.
    pub fn new(spec: &FieldSpec) -> Result<Field, GfError> {
        let FieldSpec { p, m, .. } = *spec;
        if !poly::is_prime(p) {
            return Err(GfError::NonPrimeCharacteristic(p));
        }
        if m == 0 {
            return Err(GfError::ZeroDegree);
        }
        let q = (p as u64).checked_pow(m).filter(|&q| q <= MAX_ORDER);
        let q = q.ok_or(GfError::TooLarge((p as f64).powi(m as i32) as u64))? as u32;
        let (modulus, conway) = match &spec.modulus {
            Some(c) => {
                let default = conway::default_modulus(p, m);
                (c.clone(), *c == default)
            }
            None => (conway::default_modulus(p, m), true),
        };
        if modulus.len() != m as usize + 1 {
            return Err(GfError::BadModulus(format!(
                "expected {} coefficients, got {}",
                m + 1,
                modulus.len()
            )));
        }
        if let Some(c) = modulus.iter().find(|&&c| c >= p) {
            return Err(GfError::BadModulus(format!("coefficient {c} not in [0, {p})")));
        }
        if modulus[m as usize] != 1 {
            return Err(GfError::BadModulus("not monic".into()));
        }
        if !poly::is_irreducible(&modulus, p) {
            return Err(GfError::ReducibleModulus(p));
        }
        let (mut exp, log) =
            conway::cycle_tables(p, &modulus).ok_or(GfError::NonPrimitiveModulus)?;
        exp.extend_from_within(..);
        Ok(Field { inner: Arc::new(FieldInner { p, m, q, modulus, conway, exp, log }) })
    }

    /// `GF(p^m)` with its default (Conway) modulus.
    pub fn gf(p: u32, m: u32) -> Result<Field, GfError> {
        Field::new(&FieldSpec::new(p, m))
    }

    pub fn parse(spec: &str) -> Result<Field, GfError> {
        Field::new(&spec.parse()?)
    }

    /// Spec string round-trip: explicit moduli are only written when they
    /// differ from the default.
    pub fn spec(&self) -> FieldSpec {
        let i = &self.inner;
        if i.conway {
            FieldSpec::new(i.p, i.m)
        } else {
            FieldSpec::with_modulus(i.p, i.m, i.modulus.clone())
        }
    }

    pub fn characteristic(&self) -> u32 {
        self.inner.p
    }

    pub fn degree(&self) -> u32 {
        self.inner.m
    }

    pub fn order(&self) -> u32 {
        self.inner.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.inner.modulus
    }

    /// Whether the modulus is the Conway polynomial for this size.
    pub fn is_conway(&self) -> bool {
        self.inner.conway
    }

    pub fn zero(&self) -> Elem {
        Elem::ZERO
    }

    pub fn one(&self) -> Elem {
        Elem::ONE
    }

    /// The designated primitive element.
    pub fn gamma(&self) -> Elem {
        Elem(self.inner.exp[1 % (self.inner.q as usize - 1).max(1)])
    }

    /// γ^e, for any integer exponent.
    pub fn gamma_pow(&self, e: i64) -> Elem {
        let order = self.inner.q as i64 - 1;
        Elem(self.inner.exp[e.rem_euclid(order) as usize])
    }

    /// Validates an integer encoding.
    pub fn element(&self, value: u32) -> Result<Elem, GfError> {
        if value < self.inner.q {
            Ok(Elem(value))
        } else {
            Err(GfError::ElementOutOfRange(value as u64, self.inner.q))
        }
    }

    /// Image of an integer under Z → GF(p).
    pub fn from_int(&self, n: i64) -> Elem {
        Elem(n.rem_euclid(self.inner.p as i64) as u32)
    }

    pub fn digits(&self, x: Elem) -> Vec<u32> {
        let p = self.inner.p;
        let mut v = x.0;
        (0..self.inner.m)
            .map(|_| {
                let d = v % p;
                v /= p;
                d
            })
            .collect()
    }

    pub fn from_digits(&self, digits: &[u32]) -> Result<Elem, GfError> {
        let p = self.inner.p;
        if digits.len() != self.inner.m as usize || digits.iter().any(|&d| d >= p) {
            return Err(GfError::Parse {
                what: "element digits",
                input: format!("{digits:?}"),
            });
        }
        Ok(Elem(digits.iter().rev().fold(0, |acc, &d| acc * p + d)))
    }

    /// All q elements in encoding order.
    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        (0..self.inner.q).map(Elem)
    }

    /// Nonzero elements in γ-exponent order: γ^0, γ^1, ..., γ^(q-2).
    pub fn nonzero_by_exponent(&self) -> impl Iterator<Item = Elem> + '_ {
        self.inner.exp[..self.inner.q as usize - 1].iter().map(|&v| Elem(v))
    }

    /// Discrete logarithm to base γ, in [0, q-1).
    pub fn dlog(&self, x: Elem) -> Option<u32> {
        (!x.is_zero()).then(|| self.inner.log[x.0 as usize])
    }

    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        let p = self.inner.p;
        if p == 2 {
            return Elem(a.0 ^ b.0);
        }
        if self.inner.m == 1 {
            return Elem((a.0 + b.0) % p);
        }
        let (mut x, mut y) = (a.0, b.0);
        let mut out = 0;
        let mut scale = 1;
        while x | y != 0 {
            out += ((x % p + y % p) % p) * scale;
            x /= p;
            y /= p;
            scale *= p;
        }
        Elem(out)
    }

    pub fn neg(&self, a: Elem) -> Elem {
        let p = self.inner.p;
        if p == 2 {
            return a;
        }
        let mut x = a.0;
        let mut out = 0;
        let mut scale = 1;
        while x != 0 {
            out += ((p - x % p) % p) * scale;
            x /= p;
            scale *= p;
        }
        Elem(out)
    }

    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a.0 == 0 || b.0 == 0 {
            return Elem::ZERO;
        }
        let i = &self.inner;
        Elem(i.exp[(i.log[a.0 as usize] + i.log[b.0 as usize]) as usize])
    }

    pub fn inv(&self, a: Elem) -> Result<Elem, GfError> {
        if a.is_zero() {
            return Err(GfError::DivisionByZero);
        }
        let i = &self.inner;
        let order = i.q - 1;
        Ok(Elem(i.exp[((order - i.log[a.0 as usize]) % order) as usize]))
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem, GfError> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// a^e with the exponent reduced mod q−1 for nonzero a; 0^0 = 1.
    pub fn pow(&self, a: Elem, e: u64) -> Elem {
        if e == 0 {
            return Elem::ONE;
        }
        if a.is_zero() {
            return Elem::ZERO;
        }
        let i = &self.inner;
        let order = (i.q - 1) as u64;
        let l = i.log[a.0 as usize] as u64 % order.max(1);
        Elem(i.exp[((l * (e % order.max(1))) % order.max(1)) as usize])
    }

    pub fn sum<I: IntoIterator<Item = Elem>>(&self, it: I) -> Elem {
        it.into_iter().fold(Elem::ZERO, |acc, x| self.add(acc, x))
    }

    /// Orders s = p^d of all subfields (d | m), ascending.
    pub fn subfield_orders(&self) -> Vec<u32> {
        let (p, m) = (self.inner.p, self.inner.m);
        (1..=m).filter(|d| m % d == 0).map(|d| p.pow(d)).collect()
    }

    fn check_subfield(&self, s: u64) -> Result<(), GfError> {
        if self.subfield_orders().iter().any(|&o| o as u64 == s) {
            Ok(())
        } else {
            Err(GfError::NotASubfieldOrder(s, self.inner.q))
        }
    }

    /// The s elements fixed by x ↦ x^s, in encoding order.
    pub fn subfield_elements(&self, s: u64) -> Result<Vec<Elem>, GfError> {
        self.check_subfield(s)?;
        Ok(self.elements().filter(|&x| self.pow(x, s) == x).collect())
    }

    pub fn in_subfield(&self, x: Elem, s: u64) -> Result<bool, GfError> {
        self.check_subfield(s)?;
        Ok(self.pow(x, s) == x)
    }

    /// γ^((q−1)/(s−1)), a primitive element of the order-s subfield.
    pub fn subfield_generator(&self, s: u64) -> Result<Elem, GfError> {
        self.check_subfield(s)?;
        if s == 2 {
            return Ok(Elem::ONE);
        }
        Ok(self.gamma_pow(((self.inner.q as u64 - 1) / (s - 1)) as i64))
    }

    /// Multiplicative order of a nonzero element.
    pub fn mult_order(&self, x: Elem) -> Option<u64> {
        let l = self.dlog(x)? as u64;
        let order = self.inner.q as u64 - 1;
        Some(order / gcd(l, order))
    }

    /// Parses `0`, `g^i` or `poly:d0,d1,...` (a bare integer is read as the encoding).
    pub fn parse_element(&self, text: &str) -> Result<Elem, GfError> {
        let t = text.trim();
        let bad = || GfError::Parse { what: "element", input: text.to_string() };
        if let Some(e) = t.strip_prefix("g^") {
            let i: i64 = e.trim().parse().map_err(|_| bad())?;
            return Ok(self.gamma_pow(i));
        }
        if let Some(d) = t.strip_prefix("poly:") {
            let digits = d
                .split(',')
                .map(|s| s.trim().parse::<u32>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|_| bad())?;
            return self.from_digits(&digits).map_err(|_| bad());
        }
        let v: u64 = t.parse().map_err(|_| bad())?;
        if v >= self.inner.q as u64 {
            return Err(GfError::ElementOutOfRange(v, self.inner.q));
        }
        Ok(Elem(v as u32))
    }

    /// `0` or `g^i`.
    pub fn format_element(&self, x: Elem) -> String {
        match self.dlog(x) {
            None => "0".to_string(),
            Some(i) => format!("g^{i}"),
        }
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl Serialize for FieldSpec {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for FieldSpec {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl Serialize for Field {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.spec().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Field {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let spec = FieldSpec::deserialize(d)?;
        Field::new(&spec).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf16_default_modulus_and_gamma_order() {
        let f = Field::gf(2, 4).unwrap();
        assert_eq!(f.order(), 16);
        assert_eq!(f.modulus(), &[1, 1, 0, 0, 1]);
        let g = f.gamma();
        assert_eq!(f.pow(g, 15), f.one());
        for j in 1..15 {
            assert_ne!(f.pow(g, j), f.one(), "γ^{j}");
        }
        // γ^4 = γ + 1 under x^4 + x + 1.
        assert_eq!(f.pow(g, 4), f.add(g, f.one()));
    }

    #[test]
    fn gf2_gamma_is_one() {
        let f = Field::gf(2, 1).unwrap();
        assert_eq!(f.order(), 2);
        assert_eq!(f.gamma(), Elem::ONE);
    }

    #[test]
    fn rejects_bad_specs() {
        assert_eq!(Field::gf(4, 2).unwrap_err(), GfError::NonPrimeCharacteristic(4));
        assert_eq!(Field::gf(2, 0).unwrap_err(), GfError::ZeroDegree);
        assert!(matches!(Field::gf(2, 17), Err(GfError::TooLarge(_))));
        // x^2 + 1 = (x+1)^2 over GF(2).
        let r = Field::new(&FieldSpec::with_modulus(2, 2, vec![1, 0, 1]));
        assert_eq!(r.unwrap_err(), GfError::ReducibleModulus(2));
        // x^4 + x^3 + x^2 + x + 1 is irreducible; its root has order 5.
        let r = Field::new(&FieldSpec::with_modulus(2, 4, vec![1, 1, 1, 1, 1]));
        assert_eq!(r.unwrap_err(), GfError::NonPrimitiveModulus);
        let r = Field::new(&FieldSpec::with_modulus(2, 4, vec![1, 1, 0, 0, 2]));
        assert!(matches!(r, Err(GfError::BadModulus(_))));
        let r = Field::new(&FieldSpec::with_modulus(3, 2, vec![2, 2, 2]));
        assert!(matches!(r, Err(GfError::BadModulus(_))));
    }

    #[test]
    fn spec_strings() {
        let s: FieldSpec = "GF(2^4)".parse().unwrap();
        assert_eq!(s, FieldSpec::new(2, 4));
        let s: FieldSpec = "GF(13)".parse().unwrap();
        assert_eq!(s, FieldSpec::new(13, 1));
        let s: FieldSpec = "GF(3^4;2,0,0,2,1)".parse().unwrap();
        assert_eq!(s.modulus, Some(vec![2, 0, 0, 2, 1]));
        assert_eq!(s.to_string(), "GF(3^4;2,0,0,2,1)");
        assert!("GF 2^4".parse::<FieldSpec>().is_err());
        assert!("GF(2^x)".parse::<FieldSpec>().is_err());
        // Explicit Conway modulus collapses to the short form.
        let f = Field::parse("GF(3^4;2,0,0,2,1)").unwrap();
        assert_eq!(f.spec().to_string(), "GF(3^4)");
        let f = Field::parse("GF(3^4;2,0,0,1,1)").unwrap();
        assert!(!f.is_conway());
        assert_eq!(f.spec().to_string(), "GF(3^4;2,0,0,1,1)");
    }

    #[test]
    fn element_text_formats() {
        let f = Field::gf(3, 4).unwrap();
        assert_eq!(f.parse_element("0").unwrap(), Elem::ZERO);
        let g5 = f.parse_element("g^5").unwrap();
        assert_eq!(g5, f.pow(f.gamma(), 5));
        assert_eq!(f.format_element(g5), "g^5");
        assert_eq!(f.parse_element("g^85").unwrap(), g5);
        let d = f.digits(g5);
        let text = format!("poly:{}", d.iter().map(u32::to_string).collect::<Vec<_>>().join(","));
        assert_eq!(f.parse_element(&text).unwrap(), g5);
        assert!(f.parse_element("poly:1,2").is_err());
        assert!(f.parse_element("g^x").is_err());
        assert!(f.parse_element("81").is_err());
    }

    #[test]
    fn inverse_and_division_by_zero() {
        let f = Field::gf(5, 2).unwrap();
        for x in f.elements().skip(1) {
            assert_eq!(f.mul(x, f.inv(x).unwrap()), f.one());
            assert_eq!(f.pow(x, 24), f.one());
        }
        assert_eq!(f.inv(Elem::ZERO).unwrap_err(), GfError::DivisionByZero);
        assert!(f.div(f.one(), Elem::ZERO).is_err());
    }

    #[test]
    fn subfields_of_gf256() {
        let f = Field::gf(2, 8).unwrap();
        let w = f.gamma();
        let sub = f.subfield_elements(16).unwrap();
        assert_eq!(sub.len(), 16);
        let gen = f.pow(w, 17);
        assert_eq!(f.subfield_generator(16).unwrap(), gen);
        assert_eq!(f.mult_order(gen), Some(15));
        let mut powers: Vec<Elem> = (0..15).map(|i| f.pow(gen, i)).collect();
        powers.push(Elem::ZERO);
        powers.sort();
        assert_eq!(powers, sub);
        assert!(!f.in_subfield(w, 16).unwrap());
        assert!(f.in_subfield(gen, 16).unwrap());
        assert!(f.in_subfield(Elem::ZERO, 4).unwrap() && f.in_subfield(Elem::ONE, 2).unwrap());
        assert_eq!(f.subfield_elements(8).unwrap_err(), GfError::NotASubfieldOrder(8, 256));
        assert_eq!(f.subfield_elements(256).unwrap().len(), 256);
    }

    #[test]
    fn subfield_of_gf6561() {
        let f = Field::gf(3, 8).unwrap();
        let gen = f.gamma_pow(82);
        assert_eq!(f.mult_order(gen), Some(80));
        assert_eq!(f.subfield_generator(81).unwrap(), gen);
        assert_eq!(f.subfield_elements(81).unwrap().len(), 81);
    }

    #[test]
    fn dlog_roundtrip_exhaustive() {
        for (p, m) in [(2, 4), (2, 8), (3, 4), (3, 8), (13, 1), (5, 2)] {
            let f = Field::gf(p, m).unwrap();
            for x in f.elements().skip(1) {
                assert_eq!(f.gamma_pow(f.dlog(x).unwrap() as i64), x);
            }
        }
    }
}
