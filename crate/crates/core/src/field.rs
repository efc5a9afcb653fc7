//! Exact coefficient arithmetic over the rationals and prime fields.

use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// The coefficient field of a polynomial ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rationals,
    /// Residues modulo a prime. Construct through [`FieldSpec::prime`].
    Prime(u32),
}

impl FieldSpec {
    /// The prime field of characteristic `p`. Fails unless `p` is prime.
    pub fn prime(p: u64) -> Result<Self> {
        let small = u32::try_from(p).map_err(|_| Error::NonPrimeCharacteristic(p))?;
        if !is_prime(small) {
            return Err(Error::NonPrimeCharacteristic(p));
        }
        Ok(FieldSpec::Prime(small))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::Prime(p) => u64::from(*p),
        }
    }

    pub fn zero(&self) -> FieldElement {
        self.from_i64(0)
    }

    pub fn one(&self) -> FieldElement {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> FieldElement {
        match *self {
            FieldSpec::Rationals => FieldElement::Rational(BigRational::from_integer(n.into())),
            FieldSpec::Prime(p) => {
                let r = n.rem_euclid(i64::from(p));
                FieldElement::Residue { value: r as u32, modulus: p }
            }
        }
    }

    pub fn from_bigint(&self, n: &BigInt) -> FieldElement {
        match *self {
            FieldSpec::Rationals => FieldElement::Rational(BigRational::from_integer(n.clone())),
            FieldSpec::Prime(p) => {
                let m = BigInt::from(p);
                let mut r = n % &m;
                if r.is_negative() {
                    r += &m;
                }
                let value = u32::try_from(&r).expect("residue below modulus");
                FieldElement::Residue { value, modulus: p }
            }
        }
    }

    /// Embeds a rational number; fails in characteristic `p` when `p` divides the denominator.
    pub fn from_rational(&self, q: &BigRational) -> Result<FieldElement> {
        let num = self.from_bigint(q.numer());
        let den = self.from_bigint(q.denom());
        num.checked_div(&den)
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::Prime(p) => write!(f, "F{p}"),
        }
    }
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while u64::from(d) * u64::from(d) <= u64::from(n) {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An element of a [`FieldSpec`] in canonical form.
///
/// Rationals are kept in lowest terms with a positive denominator, residues in `[0, p)`,
/// so structural equality is value equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FieldElement {
    Rational(BigRational),
    Residue { value: u32, modulus: u32 },
}

/// The four field operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl FieldElement {
    pub fn spec(&self) -> FieldSpec {
        match self {
            FieldElement::Rational(_) => FieldSpec::Rationals,
            FieldElement::Residue { modulus, .. } => FieldSpec::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            FieldElement::Rational(q) => q.is_zero(),
            FieldElement::Residue { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            FieldElement::Rational(q) => q.is_one(),
            FieldElement::Residue { value, .. } => *value == 1,
        }
    }

    /// Exact arithmetic with field and zero-divisor checks.
    pub fn apply(&self, other: &Self, op: FieldOp) -> Result<Self> {
        if self.spec() != other.spec() {
            return Err(Error::MixedFields);
        }
        Ok(match op {
            FieldOp::Add => self.add(other),
            FieldOp::Sub => self.sub(other),
            FieldOp::Mul => self.mul(other),
            FieldOp::Div => return self.checked_div(other),
        })
    }

    // The unchecked operations below assume both operands share a field; polynomial code
    // guarantees this through ring equality.

    pub fn add(&self, other: &Self) -> Self {
        match (self, other) {
            // integers skip the normalizing gcd, which is slow for large numerators
            (FieldElement::Rational(a), FieldElement::Rational(b)) if a.is_integer() && b.is_integer() => {
                FieldElement::Rational(BigRational::from_integer(a.numer() + b.numer()))
            }
            (FieldElement::Rational(a), FieldElement::Rational(b)) => FieldElement::Rational(a + b),
            (FieldElement::Residue { value: a, modulus }, FieldElement::Residue { value: b, .. }) => {
                let s = (u64::from(*a) + u64::from(*b)) % u64::from(*modulus);
                FieldElement::Residue { value: s as u32, modulus: *modulus }
            }
            _ => panic!("mixed fields"),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        match (self, other) {
            (FieldElement::Rational(a), FieldElement::Rational(b)) if a.is_integer() && b.is_integer() => {
                FieldElement::Rational(BigRational::from_integer(a.numer() * b.numer()))
            }
            (FieldElement::Rational(a), FieldElement::Rational(b)) => FieldElement::Rational(a * b),
            (FieldElement::Residue { value: a, modulus }, FieldElement::Residue { value: b, .. }) => {
                let s = (u64::from(*a) * u64::from(*b)) % u64::from(*modulus);
                FieldElement::Residue { value: s as u32, modulus: *modulus }
            }
            _ => panic!("mixed fields"),
        }
    }

    pub fn neg(&self) -> Self {
        match self {
            FieldElement::Rational(a) => FieldElement::Rational(-a),
            FieldElement::Residue { value, modulus } => FieldElement::Residue {
                value: if *value == 0 { 0 } else { modulus - value },
                modulus: *modulus,
            },
        }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match self {
            FieldElement::Rational(a) => FieldElement::Rational(a.recip()),
            FieldElement::Residue { value, modulus } => FieldElement::Residue {
                value: pow_mod(u64::from(*value), u64::from(*modulus) - 2, u64::from(*modulus)) as u32,
                modulus: *modulus,
            },
        })
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        if self.spec() != other.spec() {
            return Err(Error::MixedFields);
        }
        Ok(self.mul(&other.inv()?))
    }

    /// The integer representative when the value is integral (always for residues).
    pub fn to_bigint(&self) -> Option<BigInt> {
        match self {
            FieldElement::Rational(q) if q.is_integer() => Some(q.numer().clone()),
            FieldElement::Rational(_) => None,
            FieldElement::Residue { value, .. } => Some(BigInt::from(*value)),
        }
    }

    /// True when the canonical rendering starts with a minus sign.
    pub fn is_negative(&self) -> bool {
        match self {
            FieldElement::Rational(q) => q.is_negative(),
            FieldElement::Residue { .. } => false,
        }
    }
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldElement::Rational(q) => {
                if q.is_integer() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            FieldElement::Residue { value, .. } => write!(f, "{value}"),
        }
    }
}
