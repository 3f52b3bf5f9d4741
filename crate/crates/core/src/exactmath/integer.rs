use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

/// Trial-division primality test. Desk-scale inputs only.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Exponent of the prime `p` in the nonzero integer `n`.
pub fn vp(n: &BigInt, p: u64) -> Result<u32> {
    if n.is_zero() {
        return Err(Error::Domain("vp(0, p) is undefined".into()));
    }
    if !is_prime(p) {
        return Err(Error::Argument(format!("{p} is not prime")));
    }
    let p = BigInt::from(p);
    let mut n = n.abs();
    let mut k = 0;
    loop {
        let (q, r) = n.div_rem(&p);
        if !r.is_zero() {
            return Ok(k);
        }
        n = q;
        k += 1;
    }
}

/// [`vp`] for machine integers.
pub fn vp_u64(n: u64, p: u64) -> Result<u32> {
    vp(&BigInt::from(n), p)
}

pub fn gcd_u64(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

/// `base^exp mod modulus` for `modulus < 2^32`.
pub fn mod_pow(base: u64, mut exp: u64, modulus: u64) -> u64 {
    let mut result = 1 % modulus;
    let mut b = base % modulus;
    while exp > 0 {
        if exp & 1 == 1 {
            result = result * b % modulus;
        }
        b = b * b % modulus;
        exp >>= 1;
    }
    result
}
