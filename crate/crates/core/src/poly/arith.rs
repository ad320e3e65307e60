//! Elementary number theory on machine integers.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

/// Prime factorization by trial division, as `(prime, exponent)` pairs in
/// increasing order. `factorize(1)` is empty.
pub fn factorize(mut m: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= m {
        if m.is_multiple_of(p) {
            let mut e = 0;
            while m.is_multiple_of(p) {
                m /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if m > 1 {
        out.push((m, 1));
    }
    out
}

/// Euler's totient.
pub fn totient(m: u64) -> Result<u64> {
    if m == 0 {
        return Err(Error::domain("totient is undefined at 0"));
    }
    Ok(factorize(m).into_iter().fold(m, |acc, (p, _)| acc / p * (p - 1)))
}

/// Möbius function: 0 on non-squarefree arguments, `(-1)^r` for a product
/// of `r` distinct primes.
pub fn moebius(m: u64) -> Result<i8> {
    if m == 0 {
        return Err(Error::domain("Möbius function is undefined at 0"));
    }
    let f = factorize(m);
    if f.iter().any(|&(_, e)| e > 1) {
        Ok(0)
    } else if f.len().is_multiple_of(2) {
        Ok(1)
    } else {
        Ok(-1)
    }
}

/// Positive divisors in increasing order.
pub fn divisors(m: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= m {
        if m.is_multiple_of(d) {
            small.push(d);
            if d != m / d {
                large.push(m / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// `Some(p)` when `m = p^s` for a prime `p` and `s >= 1`.
pub fn prime_power_base(m: u64) -> Option<u64> {
    match factorize(m).as_slice() {
        [(p, _)] => Some(*p),
        _ => None,
    }
}

pub fn lcm(a: u64, b: u64) -> u64 {
    num_integer::lcm(a, b)
}

/// True when `x` is the square of an integer; zero counts.
pub fn is_perfect_square(x: &BigInt) -> bool {
    if x.is_negative() {
        return false;
    }
    if x.is_zero() {
        return true;
    }
    let r = x.sqrt();
    &(&r * &r) == x
}
