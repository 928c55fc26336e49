use super::basis::BasisPair;
use super::decompose::decompose;
use crate::arith;
use crate::error::{Error, Result};
use crate::semigroup::KernelVector;

/// A kernel vector `a1 v1 + sigma a2 v2` remembered with its coefficients.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WeightedVector {
    pub coords: KernelVector,
    pub a1: i128,
    pub a2: i128,
}

impl BasisPair {
    /// `w_x` and `w'_x`, built from the two decompositions of `x`.
    pub fn weighted(&self, x: i128) -> Result<(WeightedVector, WeightedVector)> {
        let d = decompose(x, self.delta1, self.delta2)?;
        let w = |(a1, a2): (i128, i128)| -> Result<WeightedVector> {
            Ok(WeightedVector { coords: self.combine(a1, a2)?, a1, a2 })
        };
        Ok((w(d.pos)?, w(d.neg)?))
    }

    /// Expected signs of `w_x` (positive decomposition) or `w'_x`; `None`
    /// marks the undetermined coordinate.
    pub fn weighted_signs(&self, positive: bool) -> [Option<i8>; 3] {
        let flip = if positive { 1 } else { -1 };
        if self.sigma == 1 {
            [None, Some(-flip), Some(flip)]
        } else {
            [Some(flip), None, Some(-flip)]
        }
    }

    /// The coordinate whose sign the sign tables leave open.
    pub fn free_coordinate(&self) -> usize {
        if self.sigma == 1 {
            0
        } else {
            1
        }
    }
}

/// Checks a vector against a sign pattern from [`BasisPair::weighted_signs`].
pub fn matches_signs(v: &KernelVector, pattern: [Option<i8>; 3]) -> bool {
    v.signs().iter().zip(pattern).all(|(&s, p)| p.is_none_or(|p| s == p))
}

/// `v = a1 v1 + sigma a2 v2 + alpha ((delta2/g) v1 - sigma (delta1/g) v2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Normalized {
    pub a1: i128,
    pub a2: i128,
    pub alpha: i128,
    /// `a1 v1 + sigma a2 v2`.
    pub u: KernelVector,
}

/// Writes a kernel vector of length in `(0, max(delta1, delta2)]` as a
/// boxed combination plus a multiple of the zero-length vector.
///
/// `v` is in frame coordinates. Of the two admissible shifts the one whose
/// `u` has the same third-coordinate sign as `v` is returned.
pub fn normalize_kernel_vector(v: &KernelVector, basis: &BasisPair) -> Result<Normalized> {
    let (lambda1, lambda2) = basis.coordinates(v.0)?;
    let len = v.length();
    if basis.delta2 == 0 {
        return Err(Error::OutOfRange("normalization needs delta2 > 0".into()));
    }
    let (q1, q2) = (basis.delta2 / basis.g, basis.delta1 / basis.g);
    if len == 0 {
        return Err(Error::ZeroLength { alpha: lambda1 / q1 });
    }
    if len < 0 || len > basis.max_delta() {
        return Err(Error::OutOfRange(format!("length {len} not in (0, {}]", basis.max_delta())));
    }
    // alpha0 puts a1 into 1..=q1, alpha0 + 1 into (-q1, 0].
    let alpha0 = (lambda1 - 1).div_euclid(q1);
    let sign3 = v.0[2].signum();
    let mut boxed = Vec::new();
    for alpha in [alpha0, alpha0 + 1] {
        let a1 = arith::sub(lambda1, arith::mul(alpha, q1)?)?;
        let a2 = arith::add(lambda2, arith::mul(alpha, q2)?)?;
        let in_box = -q1 < a1 && a1 <= q1 && -q2 < a2 && a2 <= q2 && a1.checked_mul(a2).is_some_and(|p| p <= 0);
        if in_box {
            boxed.push(Normalized { a1, a2, alpha, u: basis.combine(a1, a2)? });
        }
    }
    // u = v1 (third coordinate 0) is compatible with either sign.
    let pick = |pred: &dyn Fn(&Normalized) -> bool| -> Vec<Normalized> { boxed.iter().copied().filter(pred).collect() };
    let mut found = pick(&|n| n.u.0[2].signum() == sign3);
    if found.is_empty() {
        found = pick(&|n| n.u.0[2] == 0);
    }
    match found.as_slice() {
        [n] => Ok(*n),
        _ => Err(Error::InvariantViolation(format!(
            "normalization of {v} found {} candidates",
            found.len()
        ))),
    }
}
