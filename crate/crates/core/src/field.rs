//! Exact scalar fields.
//!
//! Every geometric routine in the crate is generic over [`Field`], which is
//! implemented by arbitrary-precision rationals ([`Rational`]), prime-field
//! residues ([`Fp`]) and the dynamically tagged [`Scalar`] used at the
//! serialization boundary. All values are kept in canonical form, so
//! structural equality is field equality.

use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

/// Arbitrary-precision rational number, always reduced with positive denominator.
pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(FieldTag, FieldTag),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("cannot parse {0:?} as a scalar")]
    Parse(String),
}

/// Which field a scalar lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldTag {
    Rational,
    Prime(u32),
}

impl FieldTag {
    /// Tag for GF(p); rejects composite moduli.
    pub fn prime(p: u32) -> Result<Self, FieldError> {
        if is_prime(p as u64) {
            Ok(FieldTag::Prime(p))
        } else {
            Err(FieldError::NotPrime(p as u64))
        }
    }

    /// 0 for the rationals, p for GF(p).
    pub fn characteristic(self) -> u64 {
        match self {
            FieldTag::Rational => 0,
            FieldTag::Prime(p) => p as u64,
        }
    }
}

impl fmt::Display for FieldTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldTag::Rational => write!(f, "rational"),
            FieldTag::Prime(p) => write!(f, "gf({p})"),
        }
    }
}

impl FromStr for FieldTag {
    type Err = FieldError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim().to_ascii_lowercase();
        if t == "rational" || t == "q" {
            return Ok(FieldTag::Rational);
        }
        let inner = t
            .strip_prefix("gf(")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| FieldError::Parse(s.to_string()))?;
        let p: u32 = inner
            .trim()
            .parse()
            .map_err(|_| FieldError::Parse(s.to_string()))?;
        FieldTag::prime(p)
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// The contract every coordinate field satisfies.
///
/// Arithmetic operators panic when their operands belong to different fields;
/// mixing fields is a usage error. Constructors that need a field take the
/// [`FieldTag`] explicitly, or borrow it from an existing element via the
/// `*_like` helpers.
pub trait Field:
    Clone
    + Eq
    + Hash
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn tag(&self) -> FieldTag;

    /// The element `num/den` of the field named by `tag`.
    fn from_fraction(tag: FieldTag, num: i64, den: i64) -> Result<Self, FieldError>;

    fn is_zero(&self) -> bool;

    fn inv(&self) -> Result<Self, FieldError>;

    /// Rescales a homogeneous coordinate vector to its canonical
    /// representative. Returns `false` if every entry is zero.
    fn canonicalize(coords: &mut [Self]) -> bool;

    /// Approximate real value, for rendering only.
    fn to_f64(&self) -> Option<f64> {
        None
    }

    fn characteristic(&self) -> u64 {
        self.tag().characteristic()
    }

    fn int_like(&self, n: i64) -> Self {
        Self::from_fraction(self.tag(), n, 1).expect("integers embed in every field")
    }

    fn zero_like(&self) -> Self {
        self.int_like(0)
    }

    fn one_like(&self) -> Self {
        self.int_like(1)
    }

    fn checked_div(&self, other: &Self) -> Result<Self, FieldError> {
        Ok(self.clone() * other.inv()?)
    }

    fn is_one(&self) -> bool {
        *self == self.one_like()
    }
}

// ---------------------------------------------------------------------------
// Rationals

impl Field for BigRational {
    fn tag(&self) -> FieldTag {
        FieldTag::Rational
    }

    fn from_fraction(tag: FieldTag, num: i64, den: i64) -> Result<Self, FieldError> {
        match tag {
            FieldTag::Rational => {
                if den == 0 {
                    return Err(FieldError::DivisionByZero);
                }
                Ok(BigRational::new(BigInt::from(num), BigInt::from(den)))
            }
            other => Err(FieldError::FieldMismatch(FieldTag::Rational, other)),
        }
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn inv(&self) -> Result<Self, FieldError> {
        if Zero::is_zero(self) {
            Err(FieldError::DivisionByZero)
        } else {
            Ok(self.recip())
        }
    }

    fn canonicalize(coords: &mut [Self]) -> bool {
        let Some(first) = coords.iter().position(|c| !Zero::is_zero(c)) else {
            return false;
        };
        let lcm = coords
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = coords
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        let mut g = ints.iter().fold(BigInt::zero(), |acc, n| acc.gcd(n));
        if ints[first].is_negative() {
            g = -g;
        }
        for (c, n) in coords.iter_mut().zip(ints) {
            *c = BigRational::from_integer(n / &g);
        }
        true
    }

    fn to_f64(&self) -> Option<f64> {
        ToPrimitive::to_f64(self)
    }
}

// ---------------------------------------------------------------------------
// Prime fields

/// A residue modulo a prime, stored canonically in `[0, p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fp {
    value: u32,
    modulus: u32,
}

impl Fp {
    pub fn new(value: i64, p: u32) -> Result<Self, FieldError> {
        FieldTag::prime(p)?;
        Ok(Self::reduce(value, p))
    }

    fn reduce(value: i64, p: u32) -> Self {
        Fp {
            value: value.rem_euclid(p as i64) as u32,
            modulus: p,
        }
    }

    pub fn value(self) -> u32 {
        self.value
    }

    pub fn modulus(self) -> u32 {
        self.modulus
    }

    pub fn pow(self, mut e: u64) -> Self {
        let p = self.modulus as u64;
        let mut base = self.value as u64;
        let mut acc = 1 % p;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        Fp {
            value: acc as u32,
            modulus: self.modulus,
        }
    }

    fn same_field(self, other: Fp) -> Result<u64, FieldError> {
        if self.modulus == other.modulus {
            Ok(self.modulus as u64)
        } else {
            Err(FieldError::FieldMismatch(
                FieldTag::Prime(self.modulus),
                FieldTag::Prime(other.modulus),
            ))
        }
    }

    pub fn checked_add(self, o: Fp) -> Result<Fp, FieldError> {
        let p = self.same_field(o)?;
        Ok(self.with((self.value as u64 + o.value as u64) % p))
    }

    pub fn checked_sub(self, o: Fp) -> Result<Fp, FieldError> {
        let p = self.same_field(o)?;
        Ok(self.with((self.value as u64 + p - o.value as u64) % p))
    }

    pub fn checked_mul(self, o: Fp) -> Result<Fp, FieldError> {
        let p = self.same_field(o)?;
        Ok(self.with(self.value as u64 * o.value as u64 % p))
    }

    fn with(self, v: u64) -> Fp {
        Fp {
            value: v as u32,
            modulus: self.modulus,
        }
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {}", self.value, self.modulus)
    }
}

impl FromStr for Fp {
    type Err = FieldError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || FieldError::Parse(s.to_string());
        let (k, p) = s.split_once("mod").ok_or_else(err)?;
        let k: i64 = k.trim().parse().map_err(|_| err())?;
        let p: u32 = p.trim().parse().map_err(|_| err())?;
        Fp::new(k, p)
    }
}

macro_rules! fp_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr for Fp {
            type Output = Fp;
            fn $method(self, rhs: Fp) -> Fp {
                self.$checked(rhs).expect("field mismatch")
            }
        }
    };
}

fp_binop!(Add, add, checked_add);
fp_binop!(Sub, sub, checked_sub);
fp_binop!(Mul, mul, checked_mul);

impl Neg for Fp {
    type Output = Fp;
    fn neg(self) -> Fp {
        let p = self.modulus as u64;
        self.with((p - self.value as u64) % p)
    }
}

impl Field for Fp {
    fn tag(&self) -> FieldTag {
        FieldTag::Prime(self.modulus)
    }

    fn from_fraction(tag: FieldTag, num: i64, den: i64) -> Result<Self, FieldError> {
        match tag {
            FieldTag::Prime(p) => {
                let d = Fp::new(den, p)?;
                Ok(Fp::reduce(num, p) * d.inv()?)
            }
            other => Err(FieldError::FieldMismatch(other, FieldTag::Rational)),
        }
    }

    fn is_zero(&self) -> bool {
        self.value == 0
    }

    fn inv(&self) -> Result<Self, FieldError> {
        if self.value == 0 {
            Err(FieldError::DivisionByZero)
        } else {
            Ok(self.pow(self.modulus as u64 - 2))
        }
    }

    fn canonicalize(coords: &mut [Self]) -> bool {
        let Some(first) = coords.iter().position(|c| c.value != 0) else {
            return false;
        };
        let s = coords[first].inv().expect("nonzero");
        for c in coords.iter_mut() {
            *c = *c * s;
        }
        true
    }
}

// ---------------------------------------------------------------------------
// Dynamically tagged scalars

/// A field element carrying its field tag; the exchange type of scene files.
///
/// Text form: `num/den` (or `num` when the denominator is 1) for rationals,
/// `k mod p` for prime-field residues.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Prime(Fp),
}

impl Scalar {
    pub fn rational(num: i64, den: i64) -> Result<Self, FieldError> {
        Self::from_fraction(FieldTag::Rational, num, den)
    }

    fn mismatch(&self, other: &Scalar) -> FieldError {
        FieldError::FieldMismatch(self.tag(), other.tag())
    }

    pub fn checked_add(&self, o: &Scalar) -> Result<Scalar, FieldError> {
        match (self, o) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Ok(Scalar::Rational(a + b)),
            (Scalar::Prime(a), Scalar::Prime(b)) => a.checked_add(*b).map(Scalar::Prime),
            _ => Err(self.mismatch(o)),
        }
    }

    pub fn checked_sub(&self, o: &Scalar) -> Result<Scalar, FieldError> {
        self.checked_add(&-o.clone())
    }

    pub fn checked_mul(&self, o: &Scalar) -> Result<Scalar, FieldError> {
        match (self, o) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Ok(Scalar::Rational(a * b)),
            (Scalar::Prime(a), Scalar::Prime(b)) => a.checked_mul(*b).map(Scalar::Prime),
            _ => Err(self.mismatch(o)),
        }
    }

    pub fn checked_quotient(&self, o: &Scalar) -> Result<Scalar, FieldError> {
        if self.tag() != o.tag() {
            return Err(self.mismatch(o));
        }
        self.checked_mul(&o.inv()?)
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rational(r) => Some(r),
            Scalar::Prime(_) => None,
        }
    }

    pub fn as_prime(&self) -> Option<Fp> {
        match self {
            Scalar::Prime(x) => Some(*x),
            Scalar::Rational(_) => None,
        }
    }
}

impl From<BigRational> for Scalar {
    fn from(r: BigRational) -> Self {
        Scalar::Rational(r)
    }
}

impl From<Fp> for Scalar {
    fn from(x: Fp) -> Self {
        Scalar::Prime(x)
    }
}

/// Conversion of a concrete field element into the tagged exchange form and back.
pub trait ScalarRepr: Field {
    fn to_scalar(&self) -> Scalar;
    fn from_scalar(s: &Scalar) -> Result<Self, FieldError>;
}

impl ScalarRepr for BigRational {
    fn to_scalar(&self) -> Scalar {
        Scalar::Rational(self.clone())
    }
    fn from_scalar(s: &Scalar) -> Result<Self, FieldError> {
        match s {
            Scalar::Rational(r) => Ok(r.clone()),
            other => Err(FieldError::FieldMismatch(FieldTag::Rational, other.tag())),
        }
    }
}

impl ScalarRepr for Fp {
    fn to_scalar(&self) -> Scalar {
        Scalar::Prime(*self)
    }
    fn from_scalar(s: &Scalar) -> Result<Self, FieldError> {
        match s {
            Scalar::Prime(x) => Ok(*x),
            other => Err(FieldError::FieldMismatch(other.tag(), FieldTag::Rational)),
        }
    }
}

impl ScalarRepr for Scalar {
    fn to_scalar(&self) -> Scalar {
        self.clone()
    }
    fn from_scalar(s: &Scalar) -> Result<Self, FieldError> {
        Ok(s.clone())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => write!(f, "{r}"),
            Scalar::Prime(x) => write!(f, "{x}"),
        }
    }
}

impl FromStr for Scalar {
    type Err = FieldError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.contains("mod") {
            return s.parse::<Fp>().map(Scalar::Prime);
        }
        parse_rational(s).map(Scalar::Rational)
    }
}

/// Parses `num`, `num/den`, with optional sign on the numerator.
pub fn parse_rational(s: &str) -> Result<BigRational, FieldError> {
    let err = || FieldError::Parse(s.to_string());
    let t = s.trim();
    let (n, d) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let valid = |x: &str, signed: bool| {
        let digits = if signed {
            x.strip_prefix(['+', '-']).unwrap_or(x)
        } else {
            x
        };
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    };
    if !valid(n, true) || !valid(d, false) {
        return Err(err());
    }
    let n: BigInt = n.trim_start_matches('+').parse().map_err(|_| err())?;
    let d: BigInt = d.parse().map_err(|_| err())?;
    if d.is_zero() {
        return Err(FieldError::DivisionByZero);
    }
    Ok(BigRational::new(n, d))
}

macro_rules! scalar_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                self.$checked(&rhs).expect("field mismatch")
            }
        }
    };
}

scalar_binop!(Add, add, checked_add);
scalar_binop!(Sub, sub, checked_sub);
scalar_binop!(Mul, mul, checked_mul);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(r) => Scalar::Rational(-r),
            Scalar::Prime(x) => Scalar::Prime(-x),
        }
    }
}

impl Field for Scalar {
    fn tag(&self) -> FieldTag {
        match self {
            Scalar::Rational(_) => FieldTag::Rational,
            Scalar::Prime(x) => x.tag(),
        }
    }

    fn from_fraction(tag: FieldTag, num: i64, den: i64) -> Result<Self, FieldError> {
        match tag {
            FieldTag::Rational => BigRational::from_fraction(tag, num, den).map(Scalar::Rational),
            FieldTag::Prime(_) => Fp::from_fraction(tag, num, den).map(Scalar::Prime),
        }
    }

    fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => Field::is_zero(r),
            Scalar::Prime(x) => Field::is_zero(x),
        }
    }

    fn inv(&self) -> Result<Self, FieldError> {
        match self {
            Scalar::Rational(r) => Field::inv(r).map(Scalar::Rational),
            Scalar::Prime(x) => x.inv().map(Scalar::Prime),
        }
    }

    fn canonicalize(coords: &mut [Self]) -> bool {
        let Some(tag) = coords.first().map(Field::tag) else {
            return false;
        };
        assert!(
            coords.iter().all(|c| c.tag() == tag),
            "field mismatch in coordinate vector"
        );
        match tag {
            FieldTag::Rational => {
                let mut v: Vec<BigRational> = coords
                    .iter()
                    .map(|c| c.as_rational().unwrap().clone())
                    .collect();
                let ok = BigRational::canonicalize(&mut v);
                for (c, r) in coords.iter_mut().zip(v) {
                    *c = Scalar::Rational(r);
                }
                ok
            }
            FieldTag::Prime(_) => {
                let mut v: Vec<Fp> = coords.iter().map(|c| c.as_prime().unwrap()).collect();
                let ok = Fp::canonicalize(&mut v);
                for (c, r) in coords.iter_mut().zip(v) {
                    *c = Scalar::Prime(r);
                }
                ok
            }
        }
    }

    fn to_f64(&self) -> Option<f64> {
        match self {
            Scalar::Rational(r) => Field::to_f64(r),
            Scalar::Prime(_) => None,
        }
    }
}

/// Shorthand for the rational `num/den`; panics on a zero denominator.
pub fn q(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}
