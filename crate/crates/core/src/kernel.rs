//! Dense polynomial products over big integers.
//!
//! Karatsuba above [`THRESHOLD`] coefficients, schoolbook below. Results are
//! full products of length `a.len() + b.len() − 1`; callers truncate.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::par;

const THRESHOLD: usize = 24;

pub(crate) fn mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    mul_into(a, b, &mut out);
    out
}

pub(crate) fn square(a: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); 2 * a.len() - 1];
    square_into(a, &mut out);
    out
}

/// Adds `a·b` into `out`, which must hold `a.len() + b.len() − 1` entries.
fn mul_into(a: &[BigInt], b: &[BigInt], out: &mut [BigInt]) {
    if a.len().min(b.len()) <= THRESHOLD {
        schoolbook(a, b, out);
        return;
    }
    let h = a.len().max(b.len()) / 2;
    let (a0, a1) = a.split_at(h.min(a.len()));
    let (b0, b1) = b.split_at(h.min(b.len()));
    if a1.is_empty() || b1.is_empty() {
        // Lopsided operands: split only the longer one.
        let (long, short) = if a.len() >= b.len() { (a, b) } else { (b, a) };
        let (l0, l1) = long.split_at(h);
        let (lo, hi) = par::join(|| mul(l0, short), || mul(l1, short));
        add_at(out, &lo, 0);
        add_at(out, &hi, h);
        return;
    }
    let sa = sum(a0, a1);
    let sb = sum(b0, b1);
    let ((z0, z2), z1) = par::join(
        || par::join(|| mul(a0, b0), || mul(a1, b1)),
        || mul(&sa, &sb),
    );
    combine(out, h, &z0, z1, &z2);
}

fn square_into(a: &[BigInt], out: &mut [BigInt]) {
    if a.len() <= THRESHOLD {
        schoolbook_square(a, out);
        return;
    }
    let h = a.len() / 2;
    let (a0, a1) = a.split_at(h);
    let sa = sum(a0, a1);
    let ((z0, z2), z1) = par::join(|| par::join(|| square(a0), || square(a1)), || square(&sa));
    combine(out, h, &z0, z1, &z2);
}

/// `out += z0 + x^h (z1 − z0 − z2) + x^{2h} z2`.
fn combine(out: &mut [BigInt], h: usize, z0: &[BigInt], mut z1: Vec<BigInt>, z2: &[BigInt]) {
    for (i, x) in z0.iter().enumerate() {
        z1[i] -= x;
    }
    for (i, x) in z2.iter().enumerate() {
        z1[i] -= x;
    }
    add_at(out, z0, 0);
    add_at(out, &z1, h);
    add_at(out, z2, 2 * h);
}

fn add_at(out: &mut [BigInt], src: &[BigInt], offset: usize) {
    for (o, x) in out[offset..].iter_mut().zip(src) {
        if !x.is_zero() {
            *o += x;
        }
    }
}

fn sum(lo: &[BigInt], hi: &[BigInt]) -> Vec<BigInt> {
    let mut s = lo.to_vec();
    if s.len() < hi.len() {
        s.resize(hi.len(), BigInt::zero());
    }
    for (x, y) in s.iter_mut().zip(hi) {
        *x += y;
    }
    s
}

fn schoolbook(a: &[BigInt], b: &[BigInt], out: &mut [BigInt]) {
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
}

fn schoolbook_square(a: &[BigInt], out: &mut [BigInt]) {
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        out[2 * i] += x * x;
        for (j, y) in a.iter().enumerate().skip(i + 1) {
            if !y.is_zero() {
                out[i + j] += (x * y) << 1;
            }
        }
    }
}
