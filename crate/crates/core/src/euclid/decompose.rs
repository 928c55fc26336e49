use crate::arith::{self, ext_gcd};
use crate::error::{Error, Result};

/// The two canonical ways of writing `x = x1 delta1 + x2 delta2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Decomposition {
    pub x: i128,
    /// `0 < x1 <= delta2/g`, `-delta1/g < x2 <= 0`.
    pub pos: (i128, i128),
    /// `-delta2/g < x1' <= 0`, `0 < x2' <= delta1/g`.
    pub neg: (i128, i128),
}

/// Decomposes a positive multiple of `g = gcd(delta1, delta2)` not larger
/// than `max(delta1, delta2)`.
pub fn decompose(x: i128, delta1: i128, delta2: i128) -> Result<Decomposition> {
    if delta1 <= 0 || delta2 <= 0 {
        return Err(Error::OutOfRange(format!(
            "decomposition needs positive distances, got ({delta1}, {delta2})"
        )));
    }
    let (g, p, _) = ext_gcd(delta1, delta2);
    if x % g != 0 {
        return Err(Error::NotMultipleOfGcd { x, g });
    }
    if x <= 0 || x > delta1.max(delta2) {
        return Err(Error::OutOfRange(format!("{x} not in (0, {}]", delta1.max(delta2))));
    }
    let (q1, q2) = (delta2 / g, delta1 / g);
    // x1 = (x/g) p (mod q1), lifted into 1..=q1
    let base = arith::mul((x / g).rem_euclid(q1), p.rem_euclid(q1))?.rem_euclid(q1);
    let x1 = (base - 1).rem_euclid(q1) + 1;
    let rest = arith::sub(x, arith::mul(x1, delta1)?)?;
    debug_assert_eq!(rest % delta2, 0);
    let x2 = rest / delta2;
    if !(-q2 < x2 && x2 <= 0) {
        return Err(Error::InvariantViolation(format!(
            "decomposition of {x} over ({delta1}, {delta2}) left the box: ({x1}, {x2})"
        )));
    }
    Ok(Decomposition { x, pos: (x1, x2), neg: (x1 - q1, x2 + q2) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::gcd;
    use proptest::prelude::*;

    #[test]
    fn flagship_values() {
        let d = decompose(35, 393, 142).unwrap();
        assert_eq!(d.pos, (85, -235));
        assert_eq!(d.neg, (-57, 158));
        let d = decompose(393, 393, 142).unwrap();
        assert_eq!(d.pos, (1, 0));
        assert_eq!(d.neg, (1 - 142, 393));
        let d = decompose(142, 393, 142).unwrap();
        assert_eq!(d.neg, (0, 1));
        assert_eq!(d.pos, (142, 1 - 393));
        assert_eq!(decompose(10, 393, 142).unwrap().pos, (4, -11));
        assert_eq!(decompose(33, 393, 142).unwrap().neg, (-1, 3));
        assert_eq!(decompose(15, 393, 142).unwrap().pos, (77, -213));
        assert_eq!(decompose(15, 393, 142).unwrap().neg, (-65, 180));
    }

    #[test]
    fn errors() {
        assert_eq!(decompose(3, 4, 6), Err(Error::NotMultipleOfGcd { x: 3, g: 2 }));
        assert!(matches!(decompose(8, 4, 6), Err(Error::OutOfRange(_))));
        assert!(matches!(decompose(0, 4, 6), Err(Error::OutOfRange(_))));
        assert!(matches!(decompose(2, 4, 0), Err(Error::OutOfRange(_))));
    }

    /// Finds both boxed representations by scanning every candidate `x1`.
    fn brute(x: i128, d1: i128, d2: i128) -> ((i128, i128), (i128, i128)) {
        let g = gcd(d1, d2);
        let (q1, q2) = (d2 / g, d1 / g);
        let find = |lo: i128, hi: i128, y_lo: i128, y_hi: i128| {
            let sols: Vec<_> = (lo..=hi)
                .filter_map(|a| {
                    let r = x - a * d1;
                    (r % d2 == 0 && y_lo <= r / d2 && r / d2 <= y_hi).then_some((a, r / d2))
                })
                .collect();
            assert_eq!(sols.len(), 1, "uniqueness for x={x} over ({d1},{d2})");
            sols[0]
        };
        (find(1, q1, -q2 + 1, 0), find(-q1 + 1, 0, 1, q2))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(300))]

        #[test]
        fn matches_brute_force(d1 in 1i128..300, d2 in 1i128..300, k in 1i128..300) {
            let g = gcd(d1, d2);
            let x = (k * g).min(d1.max(d2) / g * g);
            let d = decompose(x, d1, d2).unwrap();
            let (pos, neg) = brute(x, d1, d2);
            prop_assert_eq!(d.pos, pos);
            prop_assert_eq!(d.neg, neg);
            prop_assert_eq!(d.pos.0 * d1 + d.pos.1 * d2, x);
            prop_assert_eq!(d.neg.0 * d1 + d.neg.1 * d2, x);
            prop_assert_eq!((d.pos.0 - d.neg.0, d.pos.1 - d.neg.1), (d2 / g, -d1 / g));
        }
    }
}
