use crate::arith::{self, gcd};
use crate::betti::StructuralForm;
use crate::error::{Error, Result};
use crate::semigroup::{KernelVector, Semigroup};

/// A basis `{v1, v2}` of the kernel lattice together with the distances it
/// induces.
///
/// The vectors live in the *frame* coordinates of the structural form:
/// `(s2 s3, s1 s3, s1 s2)` for one Betti element and
/// `(a m1, a m2, b m1 + c m2)` for two. `perm` maps frame coordinates to
/// the sorted generator order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisPair {
    pub v1: KernelVector,
    pub v2: KernelVector,
    /// `l(v1)`, always positive.
    pub delta1: i128,
    /// `|l(v2)|`, possibly zero.
    pub delta2: i128,
    /// Sign of `l(v2)`; `+1` when `l(v2) = 0`.
    pub sigma: i128,
    /// `gcd(delta1, delta2)`.
    pub g: i128,
    /// The shift chosen for `v2` in the two-Betti case.
    pub lambda: Option<i128>,
    pub perm: [usize; 3],
    /// Generators in frame order.
    pub frame_generators: [i128; 3],
}

impl BasisPair {
    pub fn max_delta(&self) -> i128 {
        self.delta1.max(self.delta2)
    }

    /// Frame coordinates to sorted-generator coordinates.
    pub fn to_sorted(&self, v: [i128; 3]) -> [i128; 3] {
        let mut out = [0; 3];
        for t in 0..3 {
            out[self.perm[t]] = v[t];
        }
        out
    }

    /// Sorted-generator coordinates to frame coordinates.
    pub fn to_frame(&self, v: [i128; 3]) -> [i128; 3] {
        [v[self.perm[0]], v[self.perm[1]], v[self.perm[2]]]
    }

    /// `a1 v1 + sigma a2 v2`.
    pub fn combine(&self, a1: i128, a2: i128) -> Result<KernelVector> {
        Ok(KernelVector(arith::combine(a1, &self.v1.0, arith::mul(self.sigma, a2)?, &self.v2.0)?))
    }

    /// `(delta2/g) v1 - sigma (delta1/g) v2`, the generator of the
    /// zero-length sublattice.
    pub fn zero_length_vector(&self) -> Result<KernelVector> {
        self.combine(self.delta2 / self.g, -(self.delta1 / self.g))
    }

    /// Solves `v = a1 v1 + sigma a2 v2` for a frame-coordinate vector.
    pub fn coordinates(&self, v: [i128; 3]) -> Result<(i128, i128)> {
        let t = arith::mul(self.sigma, self.v2.0[2])?;
        if v[2] % t != 0 {
            return Err(Error::NotInLattice(v));
        }
        let a2 = v[2] / t;
        let rest = arith::sub(v[0], arith::mul(arith::mul(self.sigma, a2)?, self.v2.0[0])?)?;
        if rest % self.v1.0[0] != 0 {
            return Err(Error::NotInLattice(v));
        }
        let a1 = rest / self.v1.0[0];
        if self.combine(a1, a2)?.0 != v {
            return Err(Error::NotInLattice(v));
        }
        Ok((a1, a2))
    }
}

/// Picks `v1`, `v2`, `delta1`, `delta2` and `sigma` for a symmetric form.
pub fn basis_and_deltas(sg: &Semigroup, form: &StructuralForm) -> Result<BasisPair> {
    let sorted = sg.generators().as_array();
    let (v1, v2, lambda, perm) = match *form {
        StructuralForm::ThreeBetti => return Err(Error::NonSymmetric),
        StructuralForm::OneBetti { s1, s2, s3 } => ([s1, -s2, 0], [0, s2, -s3], None, [0, 1, 2]),
        StructuralForm::TwoBetti(f) => {
            let lo = -(f.b / f.m2);
            let hi = f.c / f.m1;
            let len = |l: i128| f.b + f.c + l * (f.m2 - f.m1) - f.a;
            // Minimal |l(v2)|; on a tie prefer l(v2) > 0.
            let lambda = (lo..=hi)
                .min_by_key(|&l| (len(l).abs(), len(l) < 0))
                .expect("lambda range is nonempty");
            (
                [f.m2, -f.m1, 0],
                [f.b + lambda * f.m2, f.c - lambda * f.m1, -f.a],
                Some(lambda),
                f.perm,
            )
        }
    };
    let frame_generators = [sorted[perm[0]], sorted[perm[1]], sorted[perm[2]]];
    let (v1, v2) = (KernelVector(v1), KernelVector(v2));
    if !v1.is_in_kernel(&frame_generators) || !v2.is_in_kernel(&frame_generators) {
        return Err(Error::InvariantViolation(format!("basis {v1}, {v2} is not in the kernel")));
    }
    let delta1 = v1.length();
    let l2 = v2.length();
    let sigma = if l2 < 0 { -1 } else { 1 };
    let delta2 = l2.abs();
    Ok(BasisPair {
        v1,
        v2,
        delta1,
        delta2,
        sigma,
        g: gcd(delta1, delta2),
        lambda,
        perm,
        frame_generators,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::betti::{betti_elements, classify};

    fn basis(n: [i128; 3]) -> (Semigroup, BasisPair) {
        let s = Semigroup::new(n).unwrap();
        let b = betti_elements(&s).unwrap();
        let f = classify(&s, &b).unwrap();
        let bp = basis_and_deltas(&s, &f).unwrap();
        (s, bp)
    }

    #[test]
    fn one_betti_flagship() {
        let (_, b) = basis([2015, 7124, 84940]);
        assert_eq!(b.v1.0, [548, -155, 0]);
        assert_eq!(b.v2.0, [0, 155, -13]);
        assert_eq!((b.delta1, b.delta2, b.sigma, b.g), (393, 142, 1, 1));
    }

    #[test]
    fn one_betti_small() {
        let (_, b) = basis([6, 10, 15]);
        assert_eq!((b.delta1, b.delta2, b.sigma), (2, 1, 1));
    }

    #[test]
    fn two_betti_small() {
        let (_, b) = basis([6, 8, 11]);
        assert_eq!(b.lambda, Some(0));
        assert_eq!(b.v1.0, [4, -3, 0]);
        assert_eq!(b.v2.0, [1, 2, -2]);
        assert_eq!((b.delta1, b.delta2, b.sigma), (1, 1, 1));
    }

    #[test]
    fn three_betti_rejected() {
        let s = Semigroup::new([3, 5, 7]).unwrap();
        assert_eq!(basis_and_deltas(&s, &StructuralForm::ThreeBetti), Err(Error::NonSymmetric));
    }

    #[test]
    fn betti_differences_lie_in_the_span() {
        for n in [[6, 8, 11], [6, 10, 15], [6, 7, 15], [10, 15, 17], [12, 18, 25], [2015, 7124, 84940]] {
            let (s, b) = basis(n);
            let betti = betti_elements(&s).unwrap();
            for &e in &betti.elements {
                let z = s.factorizations(e);
                for p in &z {
                    for q in &z {
                        let diff = [p.0[0] - q.0[0], p.0[1] - q.0[1], p.0[2] - q.0[2]];
                        assert!(b.coordinates(b.to_frame(diff)).is_ok(), "{n:?} {diff:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn coordinates_round_trip() {
        let (_, b) = basis([2015, 7124, 84940]);
        let v = b.combine(20, -55).unwrap();
        assert_eq!(v.0, [10960, -11625, 715]);
        assert_eq!(b.coordinates(v.0).unwrap(), (20, -55));
        assert!(matches!(b.coordinates([1, 0, 0]), Err(Error::NotInLattice(_))));
    }
}
