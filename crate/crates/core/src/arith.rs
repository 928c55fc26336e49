//! Checked 128-bit integer helpers.

use crate::error::{Error, Result};

pub(crate) fn add(a: i128, b: i128) -> Result<i128> {
    a.checked_add(b).ok_or(Error::Overflow("addition"))
}

pub(crate) fn sub(a: i128, b: i128) -> Result<i128> {
    a.checked_sub(b).ok_or(Error::Overflow("subtraction"))
}

pub(crate) fn mul(a: i128, b: i128) -> Result<i128> {
    a.checked_mul(b).ok_or(Error::Overflow("multiplication"))
}

/// Non-negative gcd, with `gcd(a, 0) = |a|`.
pub fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Returns `(g, p, q)` with `p*a + q*b = g = gcd(a, b)`.
pub fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    let (mut old_r, mut r) = (a, b);
    let (mut old_s, mut s) = (1i128, 0i128);
    let (mut old_t, mut t) = (0i128, 1i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
        (old_t, t) = (t, old_t - q * t);
    }
    if old_r < 0 {
        (-old_r, -old_s, -old_t)
    } else {
        (old_r, old_s, old_t)
    }
}

/// Inverse of `a` modulo `m` (`m >= 1`), if it exists. Result in `0..m`.
pub(crate) fn mod_inverse(a: i128, m: i128) -> Option<i128> {
    let (g, p, _) = ext_gcd(a.rem_euclid(m), m);
    (g == 1).then(|| p.rem_euclid(m))
}

/// Dot product of two triples, checked.
pub(crate) fn dot(a: &[i128; 3], b: &[i128; 3]) -> Result<i128> {
    let mut acc = 0i128;
    for i in 0..3 {
        acc = add(acc, mul(a[i], b[i])?)?;
    }
    Ok(acc)
}

/// `p*a + q*b`, coordinatewise and checked.
pub(crate) fn combine(p: i128, a: &[i128; 3], q: i128, b: &[i128; 3]) -> Result<[i128; 3]> {
    let mut out = [0i128; 3];
    for i in 0..3 {
        out[i] = add(mul(p, a[i])?, mul(q, b[i])?)?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn gcd_basics() {
        assert_eq!(gcd(393, 142), 1);
        assert_eq!(gcd(12, 0), 12);
        assert_eq!(gcd(0, -7), 7);
        assert_eq!(gcd(-4, 6), 2);
    }

    #[test]
    fn inverse() {
        assert_eq!(mod_inverse(3, 7), Some(5));
        assert_eq!(mod_inverse(2, 4), None);
        assert_eq!(mod_inverse(5, 1), Some(0));
    }

    proptest! {
        #[test]
        fn bezout_identity(a in -10_000i128..10_000, b in -10_000i128..10_000) {
            let (g, p, q) = ext_gcd(a, b);
            prop_assert_eq!(g, gcd(a, b));
            prop_assert_eq!(p * a + q * b, g);
        }
    }
}
