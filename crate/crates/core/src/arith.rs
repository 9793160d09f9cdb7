//! Exact integer and rational building blocks: p-adic valuations,
//! factorials, multinomial coefficients.
//!
//! Rationals are [`num_rational::BigRational`], which is always kept in
//! lowest terms with a positive denominator; its `Display` already produces
//! the `a/b` (or bare `a`) text form used throughout the crate.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Arbitrary-precision rational in lowest terms.
pub type BigRat = num_rational::BigRational;

/// Primes are validated by trial division strictly below this bound.
pub const PRIME_BOUND: u64 = 1_000_000;

/// The exponent of a prime in a rational number. Zero has valuation
/// [`Valuation::Infinity`], which compares above every finite value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Valuation {
    Finite(i64),
    Infinity,
}

impl Valuation {
    pub fn finite(self) -> Option<i64> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::Infinity => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        matches!(self, Valuation::Infinity)
    }
}

impl From<i64> for Valuation {
    fn from(v: i64) -> Self {
        Valuation::Finite(v)
    }
}

impl PartialEq<i64> for Valuation {
    fn eq(&self, other: &i64) -> bool {
        *self == Valuation::Finite(*other)
    }
}

impl PartialOrd<i64> for Valuation {
    fn partial_cmp(&self, other: &i64) -> Option<Ordering> {
        Some(self.cmp(&Valuation::Finite(*other)))
    }
}

impl Add for Valuation {
    type Output = Valuation;

    fn add(self, rhs: Valuation) -> Valuation {
        match (self, rhs) {
            (Valuation::Finite(a), Valuation::Finite(b)) => Valuation::Finite(a + b),
            _ => Valuation::Infinity,
        }
    }
}

impl Add<i64> for Valuation {
    type Output = Valuation;

    fn add(self, rhs: i64) -> Valuation {
        self + Valuation::Finite(rhs)
    }
}

impl Sub<i64> for Valuation {
    type Output = Valuation;

    fn sub(self, rhs: i64) -> Valuation {
        self + Valuation::Finite(-rhs)
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinity => f.write_str("inf"),
        }
    }
}

impl FromStr for Valuation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "inf" {
            return Ok(Valuation::Infinity);
        }
        s.parse::<i64>()
            .map(Valuation::Finite)
            .map_err(|_| Error::InvalidArgument(format!("not a valuation: {s:?}")))
    }
}

impl Serialize for Valuation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Checks that `p` is a prime below [`PRIME_BOUND`].
pub fn check_prime(p: u64) -> Result<()> {
    if p >= PRIME_BOUND {
        return Err(Error::InvalidArgument(format!(
            "prime {p} exceeds the supported bound {PRIME_BOUND}"
        )));
    }
    if !is_small_prime(p) {
        return Err(Error::InvalidArgument(format!("{p} is not prime")));
    }
    Ok(())
}

fn is_small_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// p-adic valuation of an integer; the sign is ignored.
pub fn nu_int(n: &BigInt, p: u64) -> Result<Valuation> {
    check_prime(p)?;
    Ok(nu_int_unchecked(n, p))
}

pub(crate) fn nu_int_unchecked(n: &BigInt, p: u64) -> Valuation {
    if n.is_zero() {
        return Valuation::Infinity;
    }
    let p = BigInt::from(p);
    let mut n = n.abs();
    let mut e = 0;
    loop {
        let (q, r) = n.div_rem(&p);
        if !r.is_zero() {
            return Valuation::Finite(e);
        }
        n = q;
        e += 1;
    }
}

/// p-adic valuation of a machine integer. Returns `None` for zero.
pub(crate) fn nu_small(n: i128, p: u64) -> Option<i64> {
    if n == 0 {
        return None;
    }
    let p = p as i128;
    let mut n = n.abs();
    let mut e = 0;
    while n % p == 0 {
        n /= p;
        e += 1;
    }
    Some(e)
}

/// p-adic valuation of a rational: `ν(numerator) − ν(denominator)`.
pub fn nu_rat(q: &BigRat, p: u64) -> Result<Valuation> {
    check_prime(p)?;
    Ok(nu_rat_unchecked(q, p))
}

pub(crate) fn nu_rat_unchecked(q: &BigRat, p: u64) -> Valuation {
    match nu_int_unchecked(q.numer(), p) {
        Valuation::Infinity => Valuation::Infinity,
        Valuation::Finite(a) => {
            // The denominator is positive, hence finite valuation.
            let b = nu_int_unchecked(q.denom(), p).finite().unwrap_or(0);
            Valuation::Finite(a - b)
        }
    }
}

pub fn factorial(n: u64) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// `(Σ i_j)! / Π (i_j!)`; equals 1 for the all-zero tuple.
pub fn multinomial(parts: &[u64]) -> BigInt {
    let size: u64 = parts.iter().sum();
    let denom = parts
        .iter()
        .fold(BigInt::one(), |acc, &i| acc * factorial(i));
    factorial(size) / denom
}

/// `t(t−1)⋯(t+1−s) / Π (i_j!)` with `s = Σ i_j`, for any integer `t`.
///
/// This is the generalized multinomial coefficient
/// `binom(t; t−s, i_1, …, i_r)` and is always an integer.
pub fn falling_multinomial(t: i64, parts: &[u64]) -> BigInt {
    let size: u64 = parts.iter().sum();
    let t = BigInt::from(t);
    let numer = (0..size).fold(BigInt::one(), |acc, k| acc * (&t - k));
    let denom = parts
        .iter()
        .fold(BigInt::one(), |acc, &i| acc * factorial(i));
    debug_assert!(numer.is_multiple_of(&denom));
    numer / denom
}

/// Generalized binomial coefficient `t(t−1)⋯(t−m+1)/m!`.
pub fn binomial(t: i64, m: u64) -> BigInt {
    falling_multinomial(t, &[m])
}

/// Parses an exact rational from `a/b` or `a` text; no floating point.
pub fn parse_rat(s: &str) -> Result<BigRat> {
    let s = s.trim();
    let bad = || Error::InvalidArgument(format!("not a rational: {s:?}"));
    match s.split_once('/') {
        None => s
            .parse::<BigInt>()
            .map(BigRat::from_integer)
            .map_err(|_| bad()),
        Some((a, b)) => {
            let a = a.parse::<BigInt>().map_err(|_| bad())?;
            let b = b.parse::<BigInt>().map_err(|_| bad())?;
            if b.is_zero() {
                return Err(Error::InvalidArgument(format!("zero denominator in {s:?}")));
            }
            Ok(BigRat::new(a, b))
        }
    }
}

/// `p^e` if it fits in a `u64`.
pub(crate) fn checked_prime_power(p: u64, e: i64) -> Option<u64> {
    u32::try_from(e).ok().and_then(|e| p.checked_pow(e))
}
