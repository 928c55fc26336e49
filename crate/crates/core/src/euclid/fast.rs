use super::basis::{basis_and_deltas, BasisPair};
use super::set::{euclid_set, EuclidSet};
use crate::betti::{betti_elements, classify, BettiData, StructuralForm};
use crate::error::{Error, Result};
use crate::semigroup::{DeltaSet, Semigroup};

/// Everything the fast path derives from the generators.
#[derive(Debug, Clone)]
pub struct Analysis {
    pub betti: BettiData,
    pub form: StructuralForm,
    /// Present for symmetric semigroups.
    pub basis: Option<BasisPair>,
    /// The Euclid set the delta set is read from.
    pub euclid: EuclidSet,
    /// The distances that seed `euclid`.
    pub seed: (i128, i128),
}

/// Runs the classification and builds the Euclid set, for either class.
pub fn analyze(sg: &Semigroup) -> Result<Analysis> {
    let betti = betti_elements(sg)?;
    let form = classify(sg, &betti)?;
    if form.is_symmetric() {
        let basis = basis_and_deltas(sg, &form)?;
        let seed = (basis.delta1, basis.delta2);
        let euclid = euclid_set(seed.0, seed.1)?;
        Ok(Analysis { betti, form, basis: Some(basis), euclid, seed })
    } else {
        let seed = nonsymmetric_seed(sg, &betti)?;
        let euclid = euclid_set(seed.0, seed.1)?;
        Ok(Analysis { betti, form, basis: None, euclid, seed })
    }
}

/// `Delta(S) = Euc(delta1, delta2) \ {0}` for a symmetric semigroup.
pub fn delta_set_fast(sg: &Semigroup) -> Result<DeltaSet> {
    let betti = betti_elements(sg)?;
    let form = classify(sg, &betti)?;
    if !form.is_symmetric() {
        return Err(Error::NonSymmetric);
    }
    let basis = basis_and_deltas(sg, &form)?;
    let euclid = euclid_set(basis.delta1, basis.delta2)?;
    Ok(euclid.positive().collect())
}

/// Experimental Euclid-set reconstruction for non-symmetric semigroups,
/// seeded with the distances observed at the Betti elements.
pub fn delta_set_nonsymmetric(sg: &Semigroup) -> Result<DeltaSet> {
    let betti = betti_elements(sg)?;
    let form = classify(sg, &betti)?;
    if form.is_symmetric() {
        return Err(Error::NotNonSymmetric);
    }
    let (p, q) = nonsymmetric_seed(sg, &betti)?;
    Ok(euclid_set(p, q)?.positive().collect())
}

/// Distinct positive `Delta(b)` values over the Betti elements, as a pair.
///
/// The three minimal relations sum to zero, so their lengths often read
/// `a`, `b`, `a + b`; since `Euc(a + b, a)` is `Euc(a, b)` plus `a + b`,
/// such a triple is seeded with its two largest values.
fn nonsymmetric_seed(sg: &Semigroup, betti: &BettiData) -> Result<(i128, i128)> {
    let mut values = DeltaSet::new();
    for &b in &betti.elements {
        values.extend_from(&sg.delta_of_element(b)?);
    }
    match values.values()[..] {
        [] => Err(Error::InvariantViolation("no Betti element has two factorization lengths".into())),
        [v] => Ok((v, v)),
        [p, q] => Ok((q, p)),
        [p, q, r] if p + q == r => Ok((r, q)),
        _ => Err(Error::MoreThanTwoDistinctValues(values.values())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flagship() {
        let s = Semigroup::new([2015, 7124, 84940]).unwrap();
        let d = delta_set_fast(&s).unwrap();
        assert_eq!(d.values(), vec![1, 2, 3, 4, 7, 10, 13, 23, 33, 43, 76, 109, 142, 251, 393]);
    }

    #[test]
    fn small_symmetric() {
        let s = Semigroup::new([6, 10, 15]).unwrap();
        assert_eq!(delta_set_fast(&s).unwrap().values(), vec![1, 2]);
        let s = Semigroup::new([6, 8, 11]).unwrap();
        assert_eq!(delta_set_fast(&s).unwrap().values(), vec![1]);
        assert_eq!(delta_set_nonsymmetric(&s), Err(Error::NotNonSymmetric));
    }

    #[test]
    fn nonsymmetric() {
        let s = Semigroup::new([3, 5, 7]).unwrap();
        assert_eq!(delta_set_fast(&s), Err(Error::NonSymmetric));
        assert_eq!(delta_set_nonsymmetric(&s).unwrap().values(), vec![2]);
        let a = analyze(&s).unwrap();
        assert_eq!(a.seed, (2, 2));
        assert!(a.basis.is_none());
    }
}
