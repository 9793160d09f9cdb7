//! Dense truncated formal power series over the rationals.
//!
//! A [`TruncSeries`] of order `N` stores `c_0, …, c_N` and every ring
//! operation works modulo `x^(N+1)`. Operations never change the order;
//! binary operations require equal orders.
//!
//! The multiplication and inversion kernels move each operand onto a single
//! common denominator so the inner loops are plain big-integer
//! multiply-adds; one gcd per output coefficient restores lowest terms.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::arith::{check_prime, factorial, nu_rat_unchecked, BigRat, Valuation};
use crate::error::{Error, Result};
use crate::{kernel, par};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TruncSeries {
    coeffs: Vec<BigRat>,
}

impl TruncSeries {
    /// Builds a series from `c_0, …, c_N`; the order is `coeffs.len() − 1`.
    pub fn new(coeffs: Vec<BigRat>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::InvalidArgument(
                "a truncated series needs at least the constant term".into(),
            ));
        }
        Ok(TruncSeries { coeffs })
    }

    pub fn zero(order: usize) -> Self {
        TruncSeries {
            coeffs: vec![BigRat::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = BigRat::one();
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `x^i`. Panics if `i` exceeds the order.
    pub fn coeff(&self, i: usize) -> &BigRat {
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[BigRat] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigRat> {
        self.coeffs
    }

    pub fn is_unit(&self) -> bool {
        !self.coeffs[0].is_zero()
    }

    /// Drops every coefficient above `order`.
    pub fn truncate(&self, order: usize) -> Result<Self> {
        if order > self.order() {
            return Err(Error::InvalidArgument(format!(
                "cannot raise order {} to {order} by truncation",
                self.order()
            )));
        }
        Ok(TruncSeries {
            coeffs: self.coeffs[..=order].to_vec(),
        })
    }

    pub fn mul(&self, other: &TruncSeries) -> Result<TruncSeries> {
        mul(self, other)
    }

    pub fn reciprocal(&self) -> Result<TruncSeries> {
        reciprocal(self)
    }

    pub fn pow(&self, t: i64) -> Result<TruncSeries> {
        int_pow(self, t)
    }

    pub fn scale_variable(&self, lambda: &BigRat) -> TruncSeries {
        scale_variable(self, lambda)
    }

    /// JSON array of rational strings, lowest degree first.
    pub fn to_json(&self) -> String {
        let strings: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        serde_json::to_string(&strings).expect("string arrays always serialize")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let strings: Vec<String> = serde_json::from_str(text)
            .map_err(|e| Error::InvalidArgument(format!("bad series JSON: {e}")))?;
        let coeffs = strings
            .iter()
            .map(|s| crate::arith::parse_rat(s))
            .collect::<Result<Vec<_>>>()?;
        Self::new(coeffs)
    }

    fn check_same_order(&self, other: &TruncSeries) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::InvalidArgument(format!(
                "order mismatch: {} vs {}",
                self.order(),
                other.order()
            )));
        }
        Ok(())
    }
}

impl fmt::Display for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_json())
    }
}

/// Integer numerators over one shared positive denominator.
#[derive(Clone)]
struct Scaled {
    numers: Vec<BigInt>,
    denom: BigInt,
}

impl Scaled {
    fn from_coeffs(coeffs: &[BigRat]) -> Scaled {
        // Later denominators tend to be multiples of earlier ones.
        let denom = coeffs.iter().rev().fold(BigInt::one(), |acc, c| {
            if (&acc % c.denom()).is_zero() {
                acc
            } else {
                acc.lcm(c.denom())
            }
        });
        let numers = par::map_slice(coeffs, |c| {
            if c.is_zero() {
                BigInt::zero()
            } else {
                c.numer() * (&denom / c.denom())
            }
        });
        Scaled { numers, denom }
    }

    fn to_coeffs(&self) -> Vec<BigRat> {
        par::map_slice(&self.numers, |x| BigRat::new(x.clone(), self.denom.clone()))
    }

    /// Truncated product; the result is not normalised.
    fn mul(&self, other: &Scaled) -> Scaled {
        let mut numers = kernel::mul(&self.numers, &other.numers);
        numers.truncate(self.numers.len());
        Scaled {
            numers,
            denom: &self.denom * &other.denom,
        }
    }

    fn square(&self) -> Scaled {
        let mut numers = kernel::square(&self.numers);
        numers.truncate(self.numers.len());
        Scaled {
            numers,
            denom: &self.denom * &self.denom,
        }
    }

    /// Divides out the common content of the numerators and the denominator.
    fn normalize(&mut self) {
        // A gcd against one combination of the numerators is a multiple of
        // the content; entries it fails to divide refine it exactly.
        let mut combined = BigInt::zero();
        for (i, x) in self.numers.iter().enumerate() {
            if !x.is_zero() {
                combined += x * (i as u64 + 1);
            }
        }
        let mut g = self.denom.gcd(&combined);
        for x in &self.numers {
            if g.is_one() {
                return;
            }
            if !x.is_zero() && !(x % &g).is_zero() {
                g = g.gcd(x);
            }
        }
        if g.is_one() {
            return;
        }
        self.numers = par::map_slice(&self.numers, |x| x / &g);
        self.denom /= &g;
    }
}

/// `Σ_{k=lo}^{hi} a[k]·b[n−k]`, skipping zero factors.
fn dot_reversed(a: &[BigInt], b: &[BigInt], n: usize, lo: usize, hi: usize) -> BigInt {
    let mut acc = BigInt::zero();
    for k in lo..=hi {
        let (x, y) = (&a[k], &b[n - k]);
        if !x.is_zero() && !y.is_zero() {
            acc += x * y;
        }
    }
    acc
}

/// ℓ(x) = log(1+x)/x = Σ (−1)^i x^i/(i+1), truncated at `order`.
pub fn log_series(order: usize) -> TruncSeries {
    let coeffs = (0..=order)
        .map(|i| {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            BigRat::new(BigInt::from(sign), BigInt::from(i + 1))
        })
        .collect();
    TruncSeries { coeffs }
}

/// Cauchy product truncated to the common order.
pub fn mul(f: &TruncSeries, g: &TruncSeries) -> Result<TruncSeries> {
    f.check_same_order(g)?;
    let a = Scaled::from_coeffs(&f.coeffs);
    let product = if f == g {
        a.square()
    } else {
        a.mul(&Scaled::from_coeffs(&g.coeffs))
    };
    Ok(TruncSeries {
        coeffs: product.to_coeffs(),
    })
}

/// Multiplicative inverse through the same order, by the triangular
/// recurrence `g_0 = 1/f_0`, `g_n = −(1/f_0) Σ_{k=1}^{n} f_k g_{n−k}`.
pub fn reciprocal(f: &TruncSeries) -> Result<TruncSeries> {
    if !f.is_unit() {
        return Err(Error::NotAUnit);
    }
    let a = Scaled::from_coeffs(&f.coeffs);
    let lead = a.numers[0].clone();

    // g_j = numers[j] / denom for every computed j.
    let g0 = BigRat::new(a.denom.clone(), lead.clone());
    let mut denom = g0.denom().clone();
    let mut numers: Vec<BigInt> = vec![g0.numer().clone()];
    let mut coeffs = vec![g0];

    for n in 1..=f.order() {
        let s = dot_reversed(&a.numers, &numers, n, 1, n);
        let gn = BigRat::new(-s, &lead * &denom);
        let new_denom = denom.lcm(gn.denom());
        if new_denom != denom {
            let factor = &new_denom / &denom;
            for x in numers.iter_mut() {
                *x *= &factor;
            }
            denom = new_denom;
        }
        numers.push(gn.numer() * (&denom / gn.denom()));
        coeffs.push(gn);
    }
    Ok(TruncSeries { coeffs })
}

/// `f^t` for any integer `t`. Negative powers invert first; positive powers
/// use binary exponentiation.
pub fn int_pow(f: &TruncSeries, t: i64) -> Result<TruncSeries> {
    if t == 0 {
        return Ok(TruncSeries::one(f.order()));
    }
    let base = if t < 0 { reciprocal(f)? } else { f.clone() };
    // Intermediate powers stay on a shared denominator; lowest terms are
    // restored once at the end.
    let mut e = t.unsigned_abs();
    let mut square_acc = Scaled::from_coeffs(&base.coeffs);
    let mut result: Option<Scaled> = None;
    loop {
        if e & 1 == 1 {
            result = Some(match result {
                None => square_acc.clone(),
                Some(r) => {
                    let mut r = r.mul(&square_acc);
                    r.normalize();
                    r
                }
            });
        }
        e >>= 1;
        if e == 0 {
            break;
        }
        square_acc = square_acc.square();
        square_acc.normalize();
    }
    let result = result.expect("exponent is nonzero");
    Ok(TruncSeries {
        coeffs: result.to_coeffs(),
    })
}

/// Substitutes `x ↦ λx`: `c_i ↦ λ^i c_i`.
pub fn scale_variable(f: &TruncSeries, lambda: &BigRat) -> TruncSeries {
    let mut power = BigRat::one();
    let mut coeffs = Vec::with_capacity(f.coeffs.len());
    for c in &f.coeffs {
        coeffs.push(c * &power);
        power *= lambda;
    }
    TruncSeries { coeffs }
}

/// `(e^y − 1)/y = Σ y^k/(k+1)!` truncated at `order`.
pub fn exp_quotient_series(order: usize) -> TruncSeries {
    let mut fact = BigInt::one();
    let coeffs = (0..=order)
        .map(|k| {
            fact *= k + 1;
            BigRat::new(BigInt::one(), fact.clone())
        })
        .collect();
    TruncSeries { coeffs }
}

/// `B_0, …, B_n` from `y/(e^y − 1) = Σ (B_k/k!) y^k`.
pub fn bernoulli_numbers(n: usize) -> Vec<BigRat> {
    let inv = reciprocal(&exp_quotient_series(n)).expect("constant term is 1");
    let mut fact = BigInt::one();
    inv.coeffs
        .into_iter()
        .enumerate()
        .map(|(k, c)| {
            if k > 0 {
                fact *= k;
            }
            c * BigRat::from_integer(fact.clone())
        })
        .collect()
}

/// The Bernoulli number `B_n` (with `B_1 = −1/2`).
pub fn bernoulli(n: usize) -> BigRat {
    let inv = reciprocal(&exp_quotient_series(n)).expect("constant term is 1");
    inv.coeff(n) * BigRat::from_integer(factorial(n as u64))
}

/// `ℓ(x)^t` truncated at `order`.
pub fn log_power(t: i64, order: usize) -> Result<TruncSeries> {
    int_pow(&log_series(order), t)
}

/// The exact coefficient `[x^n] ℓ(x)^t`.
pub fn log_power_coeff(t: i64, n: usize) -> Result<BigRat> {
    Ok(log_power(t, n)?.coeffs.swap_remove(n))
}

/// `ν_p([x^n] ℓ(x)^t)`.
pub fn coeff_valuation(t: i64, n: usize, p: u64) -> Result<Valuation> {
    check_prime(p)?;
    if t == 0 && n != 0 {
        return Err(Error::InvalidArgument(
            "t = 0 only has a constant term".into(),
        ));
    }
    Ok(nu_rat_unchecked(&log_power_coeff(t, n)?, p))
}

/// Valuations of every coefficient `c_0, …, c_N` of a series.
pub fn valuations(f: &TruncSeries, p: u64) -> Result<Vec<Valuation>> {
    check_prime(p)?;
    Ok(par::map_slice(&f.coeffs, |c| nu_rat_unchecked(c, p)))
}
