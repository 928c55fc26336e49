use super::basement::{basement, BasementVariant};
use super::basis::BasisPair;
use super::decompose::decompose;
use super::normalize::normalize_kernel_vector;
use super::set::{euclid_set, EuclidSet};
use crate::betti::betti_elements;
use crate::error::{Error, Result};
use crate::semigroup::{Factorization, KernelVector, Semigroup};

/// Enumerations larger than this many candidate tuples are skipped when
/// checking witness adjacency.
pub const WITNESS_ENUMERATION_LIMIT: u128 = 10_000_000;

/// Builds a factorization of the same element with length strictly between
/// `l(z')` and `l(z)`, when their gap is not in the Euclid set.
///
/// Factorizations are in sorted-generator coordinates.
pub fn intermediate_factorization(
    sg: &Semigroup,
    basis: &BasisPair,
    z: &Factorization,
    z_prime: &Factorization,
) -> Result<Factorization> {
    let gens = sg.generators();
    if z.0.iter().chain(&z_prime.0).any(|&c| c < 0) {
        return Err(Error::PreconditionViolated("factorizations must be nonnegative".into()));
    }
    let s = z.value(gens)?;
    if z_prime.value(gens)? != s {
        return Err(Error::PreconditionViolated(format!("{z} and {z_prime} factor different elements")));
    }
    let gap = z.length() - z_prime.length();
    if gap <= 0 || gap > basis.max_delta() {
        return Err(Error::PreconditionViolated(format!(
            "length gap {gap} not in (0, {}]",
            basis.max_delta()
        )));
    }
    let euclid = euclid_set(basis.delta1, basis.delta2)?;
    if euclid.contains(gap) {
        return Err(Error::GapInEuclid(gap));
    }

    let common: [i128; 3] = std::array::from_fn(|i| z.0[i].min(z_prime.0[i]));
    let y = basis.to_frame(std::array::from_fn(|i| z.0[i] - common[i]));
    let y_prime = basis.to_frame(std::array::from_fn(|i| z_prime.0[i] - common[i]));
    let v = KernelVector(std::array::from_fn(|i| y[i] - y_prime[i]));
    let nrm = normalize_kernel_vector(&v, basis)?;

    let variant = if nrm.a1 > 0 { BasementVariant::Pos } else { BasementVariant::Neg };
    let d = basement(gap, &euclid, variant)?;
    let (w_pos, w_neg) = basis.weighted(d)?;
    let w = match variant {
        BasementVariant::Pos => w_pos.coords.0,
        BasementVariant::Neg => w_neg.coords.0,
    };

    let below: [i128; 3] = std::array::from_fn(|i| y[i] - w[i]);
    let above: [i128; 3] = std::array::from_fn(|i| w[i] + y_prime[i]);
    let order = if w[basis.free_coordinate()] < 0 { [below, above] } else { [above, below] };
    for cand in order {
        if cand.iter().any(|&c| c < 0) {
            continue;
        }
        let sorted = basis.to_sorted(cand);
        let out = Factorization(std::array::from_fn(|i| sorted[i] + common[i]));
        let len = out.length();
        if out.value(gens)? != s || len <= z_prime.length() || len >= z.length() {
            return Err(Error::InvariantViolation(format!(
                "intermediate factorization {out} of {s} is not strictly between {z_prime} and {z}"
            )));
        }
        return Ok(out);
    }
    Err(Error::InvariantViolation(format!(
        "neither candidate for the pair {z}, {z_prime} is nonnegative"
    )))
}

/// How a witness was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WitnessSource {
    /// From the weighted vector of a canonical decomposition of `d`.
    Decomposition(BasementVariant),
    /// From two consecutive lengths of a Betti element.
    BettiElement,
}

/// An element `s` with factorizations `z`, `z'` whose lengths are adjacent
/// in `L(s)` and differ by `d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub d: i128,
    pub s: i128,
    /// Longer factorization, sorted-generator coordinates.
    pub z: Factorization,
    /// Shorter factorization, sorted-generator coordinates.
    pub z_prime: Factorization,
    /// `z - z'` in sorted-generator coordinates.
    pub vector: KernelVector,
    /// `(x1, x2)` when built from a decomposition.
    pub coefficients: Option<(i128, i128)>,
    pub source: WitnessSource,
    /// Adjacency confirmed by enumerating `Z(s)`.
    pub verified: bool,
}

/// Witness for `d` in `Euc(delta1, delta2) \ {0}`, verifying adjacency when
/// `Z(s)` needs fewer than [`WITNESS_ENUMERATION_LIMIT`] candidates.
pub fn witness(sg: &Semigroup, basis: &BasisPair, d: i128) -> Result<Witness> {
    witness_with_limit(sg, basis, d, WITNESS_ENUMERATION_LIMIT)
}

/// Like [`witness`] with an explicit enumeration limit; `0` skips
/// verification of decomposition-based witnesses.
pub fn witness_with_limit(sg: &Semigroup, basis: &BasisPair, d: i128, limit: u128) -> Result<Witness> {
    let euclid = euclid_set(basis.delta1, basis.delta2)?;
    if d <= 0 || !euclid.contains(d) {
        return Err(Error::PreconditionViolated(format!("{d} is not a positive member of the Euclid set")));
    }
    let mut candidates = Vec::new();
    if basis.delta2 == 0 {
        candidates.push(((1, 0), BasementVariant::Pos));
    } else {
        let dec = decompose(d, basis.delta1, basis.delta2)?;
        for variant in preferred_order(&euclid, d) {
            let coeffs = match variant {
                BasementVariant::Pos => dec.pos,
                BasementVariant::Neg => dec.neg,
            };
            // (1, 0) and (0, 1) are v1 and v2 themselves.
            if coeffs.0 * coeffs.1 < 0 || coeffs == (1, 0) || coeffs == (0, 1) {
                candidates.push((coeffs, variant));
            }
        }
    }
    let saw_mixed = candidates.iter().any(|(c, _)| c.0 * c.1 < 0);
    for (coeffs, variant) in candidates {
        let v = KernelVector(basis.to_sorted(basis.combine(coeffs.0, coeffs.1)?.0));
        let w = from_vector(sg, d, v, Some(coeffs), WitnessSource::Decomposition(variant))?;
        if sg.enumerator().estimate(w.s) >= limit {
            return Ok(w);
        }
        if let Some(true) = adjacent(sg, &w)? {
            return Ok(Witness { verified: true, ..w });
        }
    }
    if let Some(w) = betti_witness(sg, d)? {
        return Ok(w);
    }
    if saw_mixed {
        Err(Error::InvariantViolation(format!("no witness with adjacent lengths found for {d}")))
    } else {
        Err(Error::NoMixedSignDecomposition(d))
    }
}

/// Tries the decomposition whose sign pattern matches the level of `d`
/// first: `w_d` on odd levels, `w'_d` on even ones, swapped when
/// `delta1 < delta2`.
fn preferred_order(euclid: &EuclidSet, d: i128) -> [BasementVariant; 2] {
    let level = euclid.level_of(d).unwrap_or(1);
    if (level % 2 == 1) != (euclid.delta1 < euclid.delta2) {
        [BasementVariant::Pos, BasementVariant::Neg]
    } else {
        [BasementVariant::Neg, BasementVariant::Pos]
    }
}

fn from_vector(
    sg: &Semigroup,
    d: i128,
    v: KernelVector,
    coefficients: Option<(i128, i128)>,
    source: WitnessSource,
) -> Result<Witness> {
    let z = Factorization(v.positive_part());
    let z_prime = Factorization(v.negative_part());
    let s = z.value(sg.generators())?;
    if z_prime.value(sg.generators())? != s || z.length() - z_prime.length() != d {
        return Err(Error::InvariantViolation(format!("vector {v} does not realize distance {d}")));
    }
    Ok(Witness { d, s, z, z_prime, vector: v, coefficients, source, verified: false })
}

/// `Some(adjacent)` after enumerating `L(s)`; `None` when `s` has no
/// factorization at all (which would be a bug).
pub fn adjacent(sg: &Semigroup, w: &Witness) -> Result<Option<bool>> {
    let lens = match sg.length_set(w.s) {
        Ok(l) => l,
        Err(Error::ElementNotInSemigroup(_)) => return Ok(None),
        Err(e) => return Err(e),
    };
    let (lo, hi) = (w.z_prime.length(), w.z.length());
    Ok(Some(lens.windows(2).any(|p| p[0] == lo && p[1] == hi)))
}

fn betti_witness(sg: &Semigroup, d: i128) -> Result<Option<Witness>> {
    for &b in &betti_elements(sg)?.elements {
        let z = sg.factorizations(b);
        let lens = sg.length_set(b)?;
        if let Some(p) = lens.windows(2).find(|p| p[1] - p[0] == d) {
            let pick = |l: i128| *z.iter().find(|f| f.length() == l).expect("length comes from Z(b)");
            let (hi, lo) = (pick(p[1]), pick(p[0]));
            let vector = KernelVector(std::array::from_fn(|i| hi.0[i] - lo.0[i]));
            return Ok(Some(Witness {
                d,
                s: b,
                z: hi,
                z_prime: lo,
                vector,
                coefficients: None,
                source: WitnessSource::BettiElement,
                verified: true,
            }));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::betti::classify;
    use crate::euclid::basis::basis_and_deltas;

    fn setup(n: [i128; 3]) -> (Semigroup, BasisPair) {
        let s = Semigroup::new(n).unwrap();
        let b = betti_elements(&s).unwrap();
        let bp = basis_and_deltas(&s, &classify(&s, &b).unwrap()).unwrap();
        (s, bp)
    }

    #[test]
    fn intermediate_flagship_examples() {
        let (s, b) = setup([2015, 7124, 84940]);
        let z = Factorization([10960, 5, 715]);
        let zp = Factorization([0, 11630, 0]);
        let out = intermediate_factorization(&s, &b, &z, &zp).unwrap();
        assert!(out == Factorization([1644, 9925, 104]) || out == Factorization([9316, 1710, 611]));
        assert_eq!(out, Factorization([1644, 9925, 104]));
        assert_eq!(out.length(), 11673);

        let z = Factorization([0, 71300, 0]);
        let zp = Factorization([66856, 0, 4394]);
        let out = intermediate_factorization(&s, &b, &z, &zp).unwrap();
        assert_eq!(out, Factorization([548, 70680, 39]));
        assert_eq!(out.length(), 71267);
    }

    #[test]
    fn intermediate_errors() {
        let (s, b) = setup([2015, 7124, 84940]);
        // 548 n1 = 155 n2: gap 393 is a legitimate distance
        let z = Factorization([548, 0, 0]);
        let zp = Factorization([0, 155, 0]);
        assert_eq!(intermediate_factorization(&s, &b, &z, &zp), Err(Error::GapInEuclid(393)));
        assert!(matches!(
            intermediate_factorization(&s, &b, &zp, &z),
            Err(Error::PreconditionViolated(_))
        ));
        let other = Factorization([1, 0, 0]);
        assert!(matches!(
            intermediate_factorization(&s, &b, &z, &other),
            Err(Error::PreconditionViolated(_))
        ));
    }

    #[test]
    fn flagship_witness_vectors() {
        let (s, b) = setup([2015, 7124, 84940]);
        let w = witness_with_limit(&s, &b, 43, 0).unwrap();
        assert_eq!(w.vector.0, [1644, -1705, 104]);
        assert_eq!(w.coefficients, Some((3, -8)));
        assert_eq!(w.s, 1705 * 7124);
        assert_eq!(w.z, Factorization([1644, 0, 104]));
        assert_eq!(w.z_prime, Factorization([0, 1705, 0]));
        let w = witness_with_limit(&s, &b, 2, 0).unwrap();
        assert_eq!(w.vector.0, [-30688, 32705, -2015]);
        assert_eq!(w.coefficients, Some((-56, 155)));
        // the second coordinate is the lone positive one
        assert_eq!(w.s, 32705 * 7124);
    }

    #[test]
    fn small_witnesses_are_adjacent() {
        for n in [[6, 10, 15], [6, 8, 11], [6, 7, 15], [10, 15, 17]] {
            let (s, b) = setup(n);
            let e = euclid_set(b.delta1, b.delta2).unwrap();
            for d in e.positive() {
                let w = witness(&s, &b, d).unwrap();
                assert!(w.verified, "{n:?} d={d}");
                assert_eq!(w.z.length() - w.z_prime.length(), d);
                assert_eq!(adjacent(&s, &w).unwrap(), Some(true));
            }
        }
    }

    #[test]
    fn basis_vectors_witness_the_top_distances() {
        // <6,10,15>: delta1 = 2 is v1 = (5,-3,0) at the Betti element 30
        let (s, b) = setup([6, 10, 15]);
        let w = witness(&s, &b, 2).unwrap();
        assert_eq!(w.source, WitnessSource::Decomposition(BasementVariant::Pos));
        assert_eq!((w.s, w.vector.0), (30, [5, -3, 0]));
        assert!(w.verified);
        assert!(matches!(witness(&s, &b, 3), Err(Error::PreconditionViolated(_))));
        let (s, b) = setup([2015, 7124, 84940]);
        for d in [393, 142] {
            let w = witness(&s, &b, d).unwrap();
            assert_eq!(w.s, 548 * 155 * 13);
            assert!(w.verified);
        }
    }

    #[test]
    fn betti_fallback() {
        let (s, _) = setup([6, 10, 15]);
        let w = betti_witness(&s, 1).unwrap().unwrap();
        assert_eq!((w.s, w.source), (30, WitnessSource::BettiElement));
        assert_eq!((w.z.length(), w.z_prime.length()), (3, 2));
        assert!(betti_witness(&s, 4).unwrap().is_none());
    }
}
