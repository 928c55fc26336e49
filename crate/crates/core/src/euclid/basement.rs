use super::decompose::{decompose, Decomposition};
use super::set::EuclidSet;
use crate::error::{Error, Result};

/// Which canonical decomposition a basement is compared against.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BasementVariant {
    /// `x^(delta1, delta2)`: first coefficient positive.
    Pos,
    /// `x'^(delta1, delta2)`: second coefficient positive.
    Neg,
}

/// Both basements of `x` and where they came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Basements {
    pub x: i128,
    /// `k` with `eta_{k+1} < x < eta_k`.
    pub level: usize,
    /// Largest member of `D(eta_k, eta_{k+1})` below `x`.
    pub level_d: i128,
    /// `eta_{k+1}`.
    pub level_d_prime: i128,
    pub pos: i128,
    pub neg: i128,
}

impl Basements {
    pub fn get(&self, variant: BasementVariant) -> i128 {
        match variant {
            BasementVariant::Pos => self.pos,
            BasementVariant::Neg => self.neg,
        }
    }
}

/// The basement of `x` for one variant.
pub fn basement(x: i128, euclid: &EuclidSet, variant: BasementVariant) -> Result<i128> {
    Ok(basements(x, euclid)?.get(variant))
}

/// Computes both basements of `x`, a multiple of `g` strictly between 0 and
/// `max(delta1, delta2)` outside the Euclid set.
///
/// At the level `(eta_k, eta_{k+1})` bracketing `x`, the two candidates are
/// the largest `eta_k - t eta_{k+1}` below `x` (dominating in the positive
/// decomposition) and `eta_{k+1}` (dominating in the negative one). Moving
/// up one level exchanges the two decompositions, so the roles swap `k - 1`
/// times on the way to `(eta_1, eta_2)`, plus once more when
/// `delta1 < delta2`.
pub fn basements(x: i128, euclid: &EuclidSet) -> Result<Basements> {
    let (d1, d2) = (euclid.delta1, euclid.delta2);
    if d2 == 0 {
        return Err(Error::OutOfRange("no basements when delta2 = 0".into()));
    }
    let g = euclid.g();
    if x % g != 0 {
        return Err(Error::NotMultipleOfGcd { x, g });
    }
    if x <= 0 || x >= euclid.max() {
        return Err(Error::OutOfRange(format!("{x} not in (0, {})", euclid.max())));
    }
    if euclid.contains(x) {
        return Err(Error::InEuclidSet(x));
    }
    let eta = &euclid.eta;
    let k = (0..eta.len() - 1)
        .find(|&k| eta[k + 1] < x && x < eta[k])
        .ok_or_else(|| Error::InvariantViolation(format!("{x} not bracketed by the remainder chain")))?;
    let (hi, lo) = (eta[k], eta[k + 1]);
    // smallest t with hi - t lo < x
    let t = (hi - x) / lo + 1;
    let level_d = hi - t * lo;
    let level_d_prime = lo;

    let swaps = k + usize::from(d1 < d2);
    let (pos, neg) = if swaps % 2 == 0 { (level_d, level_d_prime) } else { (level_d_prime, level_d) };

    let xd = decompose(x, d1, d2)?;
    for (d, variant) in [(pos, BasementVariant::Pos), (neg, BasementVariant::Neg)] {
        if !dominated(&xd, &decompose(d, d1, d2)?, variant) {
            return Err(Error::InvariantViolation(format!(
                "basement {d} of {x} ({variant:?}) fails coordinate dominance"
            )));
        }
    }
    Ok(Basements { x, level: k + 1, level_d, level_d_prime, pos, neg })
}

/// Whether `d` sits strictly inside the coordinate box of `x` for the
/// given variant (and `d < x`).
pub(crate) fn dominated(x: &Decomposition, d: &Decomposition, variant: BasementVariant) -> bool {
    if d.x >= x.x {
        return false;
    }
    match variant {
        BasementVariant::Pos => {
            let ((x1, x2), (e1, e2)) = (x.pos, d.pos);
            0 < e1 && e1 < x1 && x2 <= e2 && e2 <= 0 && (x2 < e2 || e2 == 0)
        }
        BasementVariant::Neg => {
            let ((x1, x2), (e1, e2)) = (x.neg, d.neg);
            0 < e2 && e2 < x2 && x1 <= e1 && e1 <= 0 && (x1 < e1 || e1 == 0)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::gcd;
    use crate::euclid::set::euclid_set;
    use proptest::prelude::*;

    #[test]
    fn flagship_x35() {
        let e = euclid_set(393, 142).unwrap();
        let b = basements(35, &e).unwrap();
        assert_eq!((b.pos, b.neg), (10, 33));
        assert_eq!(basement(35, &e, BasementVariant::Pos).unwrap(), 10);
        assert_eq!(decompose(10, 393, 142).unwrap().pos, (4, -11));
        assert_eq!(decompose(33, 393, 142).unwrap().neg, (-1, 3));
        for x in 34..=42 {
            let b = basements(x, &e).unwrap();
            assert_eq!((b.pos, b.neg), (10, 33), "x={x}");
        }
        for x in 44..=75 {
            let b = basements(x, &e).unwrap();
            assert_eq!((b.pos, b.neg), (43, 33), "x={x}");
        }
    }

    #[test]
    fn flagship_x15_level_swap() {
        let e = euclid_set(393, 142).unwrap();
        let b = basements(15, &e).unwrap();
        // at (eta4, eta5) = (33, 10): d = 13, d' = 10
        assert_eq!((b.level, b.level_d, b.level_d_prime), (4, 13, 10));
        // at (delta1, delta2) the roles swap
        assert_eq!(b.pos, 10);
        assert_eq!(b.neg, 13);
        let x = decompose(15, 393, 142).unwrap();
        // 33 has a dominated negative decomposition but exceeds x
        assert!(!dominated(&x, &decompose(33, 393, 142).unwrap(), BasementVariant::Neg));
    }

    #[test]
    fn errors() {
        let e = euclid_set(393, 142).unwrap();
        assert_eq!(basements(43, &e), Err(Error::InEuclidSet(43)));
        assert!(matches!(basements(400, &e), Err(Error::OutOfRange(_))));
        let e = euclid_set(4, 6).unwrap();
        assert!(matches!(basements(3, &e), Err(Error::NotMultipleOfGcd { .. })));
    }

    #[test]
    fn swapped_distances() {
        // delta1 < delta2 flips which decomposition each candidate serves
        let a = euclid_set(393, 142).unwrap();
        let b = euclid_set(142, 393).unwrap();
        for x in (1..393).filter(|&x| !a.contains(x)) {
            let (p, q) = (basements(x, &a).unwrap(), basements(x, &b).unwrap());
            assert_eq!((p.pos, p.neg), (q.neg, q.pos));
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn every_gap_has_dominated_basements(d1 in 1i128..400, d2 in 1i128..400) {
            let e = euclid_set(d1, d2).unwrap();
            let g = gcd(d1, d2);
            for x in (g..e.max()).step_by(g as usize).filter(|&x| !e.contains(x)) {
                let b = basements(x, &e).unwrap();
                prop_assert!(e.contains(b.pos) && e.contains(b.neg));
                prop_assert!(b.pos < x && b.neg < x);
            }
        }
    }
}
