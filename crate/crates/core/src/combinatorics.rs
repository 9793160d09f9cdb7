//! Index tuples, the modified multinomial coefficients `c(I)`, and the
//! terms `T_I` of the multinomial expansion of `ℓ(x)^t`.
//!
//! An [`IndexTuple`] `(i_1, …, i_r)` is ordered and positions are 1-based:
//! its *size* is `Σ i_j` and its *weight* is `Σ j·i_j`. Zero entries are
//! never dropped: removing one shifts later positions and changes `c(I)`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::arith::{
    check_prime, checked_prime_power, factorial, falling_multinomial, multinomial,
    nu_int_unchecked, nu_small, BigRat, Valuation,
};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndexTuple {
    entries: Vec<u64>,
}

impl IndexTuple {
    pub fn new(entries: Vec<u64>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidArgument("index tuple needs r >= 1".into()));
        }
        Ok(IndexTuple { entries })
    }

    /// `E_k` in an `r`-tuple (`1 <= k <= r`).
    pub fn unit(k: usize, r: usize) -> Result<Self> {
        Self::scaled_unit(1, k, r)
    }

    /// `m·E_k` in an `r`-tuple.
    pub fn scaled_unit(m: u64, k: usize, r: usize) -> Result<Self> {
        if k == 0 || k > r {
            return Err(Error::InvalidArgument(format!(
                "position {k} outside 1..={r}"
            )));
        }
        let mut entries = vec![0; r];
        entries[k - 1] = m;
        Ok(IndexTuple { entries })
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    /// Number of positions `r`.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `Σ i_j`.
    pub fn size(&self) -> u64 {
        self.entries.iter().sum()
    }

    /// `Σ j·i_j`.
    pub fn weight(&self) -> u64 {
        self.entries
            .iter()
            .enumerate()
            .map(|(j, &i)| (j as u64 + 1) * i)
            .sum()
    }

    /// `I − E_k` (1-based). `None` if `i_k = 0`.
    pub fn minus_unit(&self, k: usize) -> Option<IndexTuple> {
        let i = *self.entries.get(k.checked_sub(1)?)?;
        if i == 0 {
            return None;
        }
        let mut entries = self.entries.clone();
        entries[k - 1] -= 1;
        Some(IndexTuple { entries })
    }
}

impl fmt::Display for IndexTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (n, i) in self.entries.iter().enumerate() {
            if n > 0 {
                f.write_str(",")?;
            }
            write!(f, "{i}")?;
        }
        f.write_str("]")
    }
}

impl FromStr for IndexTuple {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidArgument(format!("not an index tuple: {s:?}"));
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(bad)?;
        let entries = inner
            .split(',')
            .map(|x| x.trim().parse::<u64>().map_err(|_| bad()))
            .collect::<Result<Vec<_>>>()?;
        IndexTuple::new(entries)
    }
}

impl Serialize for IndexTuple {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// `c(I)` as an exact rational: `(Σ j·i_j)·(Σ i_j − 1)! / Π i_j!`.
pub fn c_value(tuple: &IndexTuple) -> Result<BigRat> {
    let size = tuple.size();
    if size == 0 {
        return Err(Error::InvalidArgument(
            "c(I) needs a tuple of positive size".into(),
        ));
    }
    let numer = BigInt::from(tuple.weight()) * factorial(size - 1);
    let denom = tuple
        .entries
        .iter()
        .fold(BigInt::one(), |acc, &i| acc * factorial(i));
    Ok(BigRat::new(numer, denom))
}

/// `c(I)`; always a positive integer for tuples of positive size.
pub fn c_coeff(tuple: &IndexTuple) -> Result<BigInt> {
    let v = c_value(tuple)?;
    debug_assert!(v.is_integer());
    Ok(v.to_integer())
}

/// Whether `c(I) = Σ_{i_k > 0} c(I − E_k)`.
pub fn c_recursion_holds(tuple: &IndexTuple) -> Result<bool> {
    if tuple.size() < 2 {
        return Err(Error::InvalidArgument(
            "recursion needs a tuple of size >= 2".into(),
        ));
    }
    let lhs = c_value(tuple)?;
    let mut rhs = BigRat::zero();
    for k in 1..=tuple.len() {
        if let Some(smaller) = tuple.minus_unit(k) {
            rhs += c_value(&smaller)?;
        }
    }
    Ok(lhs == rhs)
}

/// Whether `ν_p(Σ i_j) <= ν_p(Σ j·i_j) + ν_p(multinomial(I))`.
pub fn c_valuation_holds(tuple: &IndexTuple, p: u64) -> Result<bool> {
    check_prime(p)?;
    let lhs = nu_int_unchecked(&BigInt::from(tuple.size()), p);
    let rhs = nu_int_unchecked(&BigInt::from(tuple.weight()), p)
        + nu_int_unchecked(&multinomial(&tuple.entries), p);
    Ok(lhs <= rhs)
}

/// Every `r = n` tuple of weight exactly `n`: the partitions of `n` as part
/// multiplicity vectors (`i_j` = number of parts equal to `j`).
///
/// Partitions are produced in reverse lexicographic order of their
/// non-increasing part lists, starting from the single part `n`.
pub fn enumerate_weighted(n: usize) -> WeightedTuples {
    WeightedTuples {
        n,
        parts: if n == 0 { None } else { Some(vec![n]) },
    }
}

#[derive(Debug, Clone)]
pub struct WeightedTuples {
    n: usize,
    /// Next partition to emit, as non-increasing parts.
    parts: Option<Vec<usize>>,
}

impl Iterator for WeightedTuples {
    type Item = IndexTuple;

    fn next(&mut self) -> Option<IndexTuple> {
        let parts = self.parts.take()?;
        let mut entries = vec![0u64; self.n];
        for &part in &parts {
            entries[part - 1] += 1;
        }
        self.parts = next_partition(parts);
        Some(IndexTuple { entries })
    }
}

fn next_partition(mut parts: Vec<usize>) -> Option<Vec<usize>> {
    let k = parts.iter().rposition(|&x| x > 1)?;
    let ones = parts.len() - k - 1;
    parts[k] -= 1;
    let cap = parts[k];
    let mut rest = ones + 1;
    parts.truncate(k + 1);
    while rest > 0 {
        let take = rest.min(cap);
        parts.push(take);
        rest -= take;
    }
    Some(parts)
}

/// `T_I = binom(t; t − Σ i_j, i_1, …, i_r) / Π (j+1)^{i_j}`, unsigned.
pub fn term_ti(t: i64, tuple: &IndexTuple) -> BigRat {
    let numer = falling_multinomial(t, &tuple.entries);
    let denom = tuple
        .entries
        .iter()
        .enumerate()
        .fold(BigInt::one(), |acc, (j, &i)| {
            acc * num_traits::pow(BigInt::from(j + 2), i as usize)
        });
    BigRat::new(numer, denom)
}

/// `ν_p(T_I)` by the closed formula
/// `ν_p(t) + ν_p(multinomial(I)) − ν_p(Σ i_j) − Σ i_j·ν_p(j+1)`,
/// valid when `0 < Σ i_j <= p^{ν_p(t)}`.
pub fn nu_ti(t: i64, tuple: &IndexTuple, p: u64) -> Result<Valuation> {
    check_prime(p)?;
    let size = tuple.size();
    let nu_t = match nu_small(t as i128, p) {
        None => return Ok(Valuation::Infinity),
        Some(v) => v,
    };
    let bound = checked_prime_power(p, nu_t).unwrap_or(u64::MAX);
    if size == 0 || size > bound {
        return Err(Error::OutOfRange(format!(
            "size {size} outside 1..={bound} (p^nu_p(t) for p={p}, t={t})"
        )));
    }
    let denominators: i64 = tuple
        .entries
        .iter()
        .enumerate()
        .map(|(j, &i)| i as i64 * nu_small(j as i128 + 2, p).unwrap_or(0))
        .sum();
    let nu_size = nu_small(size as i128, p).unwrap_or(0);
    Ok(nu_int_unchecked(&multinomial(&tuple.entries), p) + (nu_t - nu_size - denominators))
}
