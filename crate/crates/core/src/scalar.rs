//! Exact scalar fields.
//!
//! Two fields are provided: the prime field of residues modulo the Mersenne
//! prime `2^61 - 1` ([`Fp`]) and arbitrary-precision rationals ([`Rational`]).
//! All higher-level code is generic over [`Scalar`].

use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

/// The modulus of [`Fp`]: the Mersenne prime `2^61 - 1`.
pub const PRIME: u64 = (1u64 << 61) - 1;

/// Which exact field a computation runs over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FieldKind {
    Prime,
    Rational,
}

impl FieldKind {
    /// The characteristic, if finite.
    pub fn prime(self) -> Option<u64> {
        match self {
            FieldKind::Prime => Some(PRIME),
            FieldKind::Rational => None,
        }
    }
}

impl fmt::Display for FieldKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldKind::Prime => write!(f, "prime"),
            FieldKind::Rational => write!(f, "rational"),
        }
    }
}

impl FromStr for FieldKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "prime" => Ok(FieldKind::Prime),
            "rational" => Ok(FieldKind::Rational),
            other => Err(format!("unknown field mode `{other}` (expected prime|rational)")),
        }
    }
}

/// An element of an exact field.
pub trait Scalar:
    Clone
    + fmt::Debug
    + fmt::Display
    + PartialEq
    + Eq
    + Hash
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    const KIND: FieldKind;

    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    /// Multiplicative inverse; `None` for zero.
    fn inv(&self) -> Option<Self>;
    fn from_i64(v: i64) -> Self;
    /// Image of a rational number; `None` when the denominator vanishes in the field.
    fn from_rational(q: &BigRational) -> Option<Self>;
    /// A rational representative (residues map to their canonical integer).
    fn to_rational(&self) -> BigRational;
    /// A random element: uniform residues for [`Fp`], small-height fractions for [`Rational`].
    fn random<R: Rng + ?Sized>(rng: &mut R) -> Self;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }
}

/// Residue modulo [`PRIME`], always kept in `[0, PRIME)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Fp(u64);

impl Fp {
    pub const fn new(v: u64) -> Self {
        Fp(v % PRIME)
    }

    pub const fn value(self) -> u64 {
        self.0
    }

    #[inline]
    fn reduce128(x: u128) -> u64 {
        let r = (x as u64 & PRIME) + ((x >> 61) as u64);
        let r = (r & PRIME) + (r >> 61);
        if r >= PRIME {
            r - PRIME
        } else {
            r
        }
    }

    pub fn pow(self, mut e: u64) -> Fp {
        let mut base = self;
        let mut acc = Fp(1);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    fn from_bigint(n: &BigInt) -> Fp {
        let m = BigInt::from(PRIME);
        let r = n.mod_floor(&m);
        Fp(r.to_u64().expect("residue fits in u64"))
    }
}

impl fmt::Debug for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Add for Fp {
    type Output = Fp;
    #[inline]
    fn add(self, rhs: Fp) -> Fp {
        let s = self.0 + rhs.0;
        Fp(if s >= PRIME { s - PRIME } else { s })
    }
}

impl Sub for Fp {
    type Output = Fp;
    #[inline]
    fn sub(self, rhs: Fp) -> Fp {
        Fp(if self.0 >= rhs.0 { self.0 - rhs.0 } else { self.0 + PRIME - rhs.0 })
    }
}

impl Mul for Fp {
    type Output = Fp;
    #[inline]
    fn mul(self, rhs: Fp) -> Fp {
        Fp(Fp::reduce128(self.0 as u128 * rhs.0 as u128))
    }
}

impl Neg for Fp {
    type Output = Fp;
    #[inline]
    fn neg(self) -> Fp {
        Fp(if self.0 == 0 { 0 } else { PRIME - self.0 })
    }
}

impl Scalar for Fp {
    const KIND: FieldKind = FieldKind::Prime;

    fn zero() -> Self {
        Fp(0)
    }
    fn one() -> Self {
        Fp(1)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn inv(&self) -> Option<Self> {
        if self.0 == 0 {
            None
        } else {
            Some(self.pow(PRIME - 2))
        }
    }
    fn from_i64(v: i64) -> Self {
        if v >= 0 {
            Fp::new(v as u64)
        } else {
            -Fp::new(v.unsigned_abs())
        }
    }
    fn from_rational(q: &BigRational) -> Option<Self> {
        let num = Fp::from_bigint(q.numer());
        let den = Fp::from_bigint(q.denom());
        den.inv().map(|d| num * d)
    }
    fn to_rational(&self) -> BigRational {
        BigRational::from_integer(BigInt::from(self.0))
    }
    fn random<R: Rng + ?Sized>(rng: &mut R) -> Self {
        Fp(rng.gen_range(0..PRIME))
    }
}

/// Largest absolute numerator drawn by [`Rational::random`].
const RATIONAL_NUMERATOR_BOUND: i64 = 1000;
/// Largest denominator drawn by [`Rational::random`].
const RATIONAL_DENOMINATOR_BOUND: i64 = 9;

/// Arbitrary-precision rational, always reduced with positive denominator.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(q: BigRational) -> Self {
        Rational(q)
    }

    pub fn inner(&self) -> &BigRational {
        &self.0
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Add for Rational {
    type Output = Rational;
    fn add(self, rhs: Rational) -> Rational {
        Rational(self.0 + rhs.0)
    }
}

impl Sub for Rational {
    type Output = Rational;
    fn sub(self, rhs: Rational) -> Rational {
        Rational(self.0 - rhs.0)
    }
}

impl Mul for Rational {
    type Output = Rational;
    fn mul(self, rhs: Rational) -> Rational {
        Rational(self.0 * rhs.0)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Scalar for Rational {
    const KIND: FieldKind = FieldKind::Rational;

    fn zero() -> Self {
        Rational(BigRational::zero())
    }
    fn one() -> Self {
        Rational(BigRational::one())
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
    fn inv(&self) -> Option<Self> {
        if self.0.is_zero() {
            None
        } else {
            Some(Rational(self.0.recip()))
        }
    }
    fn from_i64(v: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(v)))
    }
    fn from_rational(q: &BigRational) -> Option<Self> {
        Some(Rational(q.clone()))
    }
    fn to_rational(&self) -> BigRational {
        self.0.clone()
    }
    fn random<R: Rng + ?Sized>(rng: &mut R) -> Self {
        let n = rng.gen_range(-RATIONAL_NUMERATOR_BOUND..=RATIONAL_NUMERATOR_BOUND);
        let d = rng.gen_range(1..=RATIONAL_DENOMINATOR_BOUND);
        Rational(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }
}

/// Formats a rational as `"p/q"`, or `"p"` when the denominator is one.
pub fn format_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parses `"p/q"` or `"p"` into a reduced rational.
pub fn parse_rational(s: &str) -> Result<BigRational, String> {
    let s = s.trim();
    let bad = || format!("bad rational literal `{s}`");
    let parse_int = |t: &str| -> Result<BigInt, String> {
        let t = t.trim();
        if t.is_empty() {
            return Err(bad());
        }
        BigInt::from_str(t).map_err(|_| bad())
    };
    match s.split_once('/') {
        Some((n, d)) => {
            let n = parse_int(n)?;
            let d = parse_int(d)?;
            if d.is_zero() {
                return Err(format!("zero denominator in `{s}`"));
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(parse_int(s)?)),
    }
}

/// `n` independent random field elements, deterministic in `seed`.
pub fn sample_generic<S: Scalar>(n: usize, seed: u64) -> Vec<S> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n).map(|_| S::random(&mut rng)).collect()
}
