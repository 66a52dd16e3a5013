//! Coefficient rings: prime fields GF(p), the rationals, and Z/n.
//!
//! A [`Carrier`] is the ring itself and does all arithmetic; a [`Scalar`] is
//! a bare value that only makes sense relative to a carrier.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::linalg::Field;

/// A commutative unital coefficient ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Carrier {
    /// GF(p), p prime.
    Gf(u64),
    /// The rationals.
    Rational,
    /// Z/n; a field exactly when n is prime.
    Zmod(u64),
}

/// A coefficient value. Residues are kept in `[0, modulus)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Residue(u64),
    Rational(BigRational),
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

impl Carrier {
    pub fn gf(p: u64) -> Result<Self, Error> {
        if !is_prime(p) {
            return Err(Error::Carrier(format!("GF({p}): {p} is not prime")));
        }
        if p > u32::MAX as u64 {
            return Err(Error::Carrier(format!("GF({p}): modulus too large")));
        }
        Ok(Carrier::Gf(p))
    }

    pub fn zmod(n: u64) -> Result<Self, Error> {
        if n < 2 || n > u32::MAX as u64 {
            return Err(Error::Carrier(format!("Z/{n}: modulus must be in [2, 2^32)")));
        }
        Ok(Carrier::Zmod(n))
    }

    pub fn is_field(&self) -> bool {
        match *self {
            Carrier::Gf(_) | Carrier::Rational => true,
            Carrier::Zmod(n) => is_prime(n),
        }
    }

    /// Modulus for residue carriers, `None` for the rationals.
    pub fn modulus(&self) -> Option<u64> {
        match *self {
            Carrier::Gf(p) => Some(p),
            Carrier::Zmod(n) => Some(n),
            Carrier::Rational => None,
        }
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        match self.modulus() {
            Some(m) => Scalar::Residue(v.rem_euclid(m as i64) as u64),
            None => Scalar::Rational(BigRational::from_integer(BigInt::from(v))),
        }
    }

    pub fn contains(&self, a: &Scalar) -> bool {
        match (self.modulus(), a) {
            (Some(m), Scalar::Residue(v)) => *v < m,
            (None, Scalar::Rational(_)) => true,
            _ => false,
        }
    }

    pub fn check(&self, a: &Scalar) -> Result<(), Error> {
        if self.contains(a) {
            Ok(())
        } else {
            Err(Error::Carrier(format!("value {a} does not belong to {self}")))
        }
    }

    /// Parses a value literal: an integer, or `a/b` over the rationals.
    pub fn parse_value(&self, text: &str) -> Result<Scalar, Error> {
        let text = text.trim();
        match self.modulus() {
            Some(m) => {
                let v: i64 = text.parse().map_err(|_| Error::Carrier(format!("bad residue literal {text:?}")))?;
                Ok(Scalar::Residue(v.rem_euclid(m as i64) as u64))
            }
            None => {
                let (num, den) = match text.split_once('/') {
                    Some((n, d)) => (n.trim(), d.trim()),
                    None => (text, "1"),
                };
                let num: BigInt = num.parse().map_err(|_| Error::Carrier(format!("bad rational literal {text:?}")))?;
                let den: BigInt = den.parse().map_err(|_| Error::Carrier(format!("bad rational literal {text:?}")))?;
                if den.is_zero() {
                    return Err(Error::Carrier(format!("zero denominator in {text:?}")));
                }
                Ok(Scalar::Rational(BigRational::new(num, den)))
            }
        }
    }

    fn residue(&self, a: &Scalar) -> u64 {
        match a {
            Scalar::Residue(v) => *v,
            Scalar::Rational(_) => panic!("rational value used with carrier {self}"),
        }
    }

    fn rational<'a>(&self, a: &'a Scalar) -> &'a BigRational {
        match a {
            Scalar::Rational(q) => q,
            Scalar::Residue(_) => panic!("residue value used with carrier {self}"),
        }
    }

    /// Multiplicative inverse, if it exists.
    pub fn try_inv(&self, a: &Scalar) -> Option<Scalar> {
        match self.modulus() {
            Some(m) => {
                let v = self.residue(a) as i64;
                let g = (v as i128).extended_gcd(&(m as i128));
                if g.gcd != 1 {
                    return None;
                }
                Some(Scalar::Residue(g.x.rem_euclid(m as i128) as u64))
            }
            None => {
                let q = self.rational(a);
                if q.is_zero() {
                    None
                } else {
                    Some(Scalar::Rational(q.recip()))
                }
            }
        }
    }
}

impl Field for Carrier {
    type Elem = Scalar;

    fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match self.modulus() {
            Some(m) => Scalar::Residue(((self.residue(a) as u128 + self.residue(b) as u128) % m as u128) as u64),
            None => Scalar::Rational(self.rational(a) + self.rational(b)),
        }
    }

    fn neg(&self, a: &Scalar) -> Scalar {
        match self.modulus() {
            Some(m) => Scalar::Residue((m - self.residue(a)) % m),
            None => Scalar::Rational(-self.rational(a)),
        }
    }

    fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match self.modulus() {
            Some(m) => Scalar::Residue(((self.residue(a) as u128 * self.residue(b) as u128) % m as u128) as u64),
            None => Scalar::Rational(self.rational(a) * self.rational(b)),
        }
    }

    fn inv(&self, a: &Scalar) -> Scalar {
        self.try_inv(a).unwrap_or_else(|| panic!("{a} is not invertible in {self}"))
    }

    fn is_zero(&self, a: &Scalar) -> bool {
        match a {
            Scalar::Residue(v) => *v == 0,
            Scalar::Rational(q) => q.is_zero(),
        }
    }
}

impl fmt::Display for Carrier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Carrier::Gf(p) => write!(f, "gf:{p}"),
            Carrier::Rational => write!(f, "q"),
            Carrier::Zmod(n) => write!(f, "zmod:{n}"),
        }
    }
}

impl FromStr for Carrier {
    type Err = Error;

    /// Accepts `gf:p`, `q` and `zmod:n`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if s == "q" || s == "Q" {
            return Ok(Carrier::Rational);
        }
        let (kind, arg) = s
            .split_once(':')
            .ok_or_else(|| Error::Carrier(format!("unknown carrier {s:?} (expected gf:p, q or zmod:n)")))?;
        let n: u64 = arg.parse().map_err(|_| Error::Carrier(format!("bad modulus in carrier {s:?}")))?;
        match kind {
            "gf" => Carrier::gf(n),
            "zmod" => Carrier::zmod(n),
            _ => Err(Error::Carrier(format!("unknown carrier {s:?} (expected gf:p, q or zmod:n)"))),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Residue(v) => write!(f, "{v}"),
            Scalar::Rational(q) if q.denom().is_one() => write!(f, "{}", q.numer()),
            Scalar::Rational(q) => write!(f, "{}/{}", q.numer(), q.denom()),
        }
    }
}

impl Scalar {
    /// Small signed integers as seen in reports; `None` for non-integral rationals.
    pub fn as_i64(&self) -> Option<i64> {
        match self {
            Scalar::Residue(v) => i64::try_from(*v).ok(),
            Scalar::Rational(q) if q.denom().is_one() && q.numer().abs() < BigInt::from(i64::MAX) => {
                q.numer().to_string().parse().ok()
            }
            Scalar::Rational(_) => None,
        }
    }
}

/// JSON form of a carrier: `{"carrier":"gf","p":2}`, `{"carrier":"zmod","n":4}`, `{"carrier":"q"}`.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(tag = "carrier", rename_all = "lowercase")]
pub enum CarrierJson {
    Gf { p: u64 },
    Zmod { n: u64 },
    Q,
}

impl TryFrom<CarrierJson> for Carrier {
    type Error = Error;

    fn try_from(c: CarrierJson) -> Result<Self, Error> {
        match c {
            CarrierJson::Gf { p } => Carrier::gf(p),
            CarrierJson::Zmod { n } => Carrier::zmod(n),
            CarrierJson::Q => Ok(Carrier::Rational),
        }
    }
}

impl From<Carrier> for CarrierJson {
    fn from(c: Carrier) -> Self {
        match c {
            Carrier::Gf(p) => CarrierJson::Gf { p },
            Carrier::Zmod(n) => CarrierJson::Zmod { n },
            Carrier::Rational => CarrierJson::Q,
        }
    }
}
