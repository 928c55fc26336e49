//! Brute-force delta sets, used to cross-check the fast path.

use std::sync::atomic::{AtomicU64, Ordering};

use rayon::prelude::*;

use crate::betti::betti_elements;
use crate::error::{Error, Result};
use crate::euclid::{analyze, delta_set_fast, delta_set_nonsymmetric, witness_with_limit};
use crate::semigroup::{DeltaSet, Semigroup};

/// Default cap on enumerated candidate tuples.
pub const DEFAULT_TUPLE_BUDGET: u64 = 100_000_000;

/// Environment variable overriding [`DEFAULT_TUPLE_BUDGET`].
pub const BUDGET_ENV: &str = "DELTA_SG_TUPLE_BUDGET";

/// The tuple budget, honouring [`BUDGET_ENV`] when it holds a positive
/// integer.
pub fn tuple_budget() -> Result<u64> {
    match std::env::var(BUDGET_ENV) {
        Err(_) => Ok(DEFAULT_TUPLE_BUDGET),
        Ok(v) => match v.trim().parse::<u64>() {
            Ok(b) if b > 0 => Ok(b),
            _ => Err(Error::OutOfRange(format!("{BUDGET_ENV} must be a positive integer, got {v:?}"))),
        },
    }
}

/// `4 max(Betti(S)) + n3`.
pub fn base_bound(sg: &Semigroup) -> Result<i128> {
    let betti = betti_elements(sg)?;
    Ok(4 * betti.max() + sg.generators().n3())
}

/// Bound used when none is given.
///
/// Starts from [`base_bound`]. For a symmetric semigroup it is raised to
/// the largest element carrying a witness, since every claimed distance
/// shows up by then; the raise stops where roughly half of the tuple
/// budget would be spent.
pub fn default_bound(sg: &Semigroup) -> Result<i128> {
    let base = base_bound(sg)?;
    let Ok(analysis) = analyze(sg) else { return Ok(base) };
    let Some(basis) = analysis.basis else { return Ok(base) };
    let top = analysis
        .euclid
        .positive()
        .filter_map(|d| witness_with_limit(sg, &basis, d, 0).ok())
        .map(|w| w.s)
        .max()
        .unwrap_or(base);
    let cap = affordable_bound(sg, tuple_budget()? / 2);
    Ok(base.max(top.min(cap)))
}

/// Expected candidate count for all `s <= bound`: one per `z3` step plus
/// one per factorization, counted by volume.
pub fn estimated_cost(sg: &Semigroup, bound: i128) -> f64 {
    let [n1, n2, n3] = sg.generators().as_array().map(|n| n as f64);
    let h = crate::arith::gcd(sg.generators().n1(), sg.generators().n2()) as f64;
    let b = bound.max(0) as f64;
    b + b * b / (2.0 * n3 * h) + b * b * b / (6.0 * n1 * n2 * n3)
}

/// Largest bound whose [`estimated_cost`] stays within `budget`.
pub fn affordable_bound(sg: &Semigroup, budget: u64) -> i128 {
    let (mut lo, mut hi) = (0i128, 1i128 << 62);
    while lo < hi {
        let mid = lo + (hi - lo + 1) / 2;
        if estimated_cost(sg, mid) <= budget as f64 {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    lo
}

/// Union of `Delta(s)` over `s <= bound`, with the budget from
/// [`tuple_budget`].
pub fn delta_set_bruteforce(sg: &Semigroup, bound: i128) -> Result<DeltaSet> {
    delta_set_bruteforce_with_budget(sg, bound, tuple_budget()?)
}

/// Union of `Delta(s)` over `s <= bound`, failing once more than `budget`
/// candidate tuples have been visited.
pub fn delta_set_bruteforce_with_budget(sg: &Semigroup, bound: i128, budget: u64) -> Result<DeltaSet> {
    if bound < 0 {
        return Ok(DeltaSet::new());
    }
    let bound = usize::try_from(bound).map_err(|_| Error::TooLarge(format!("bound {bound}")))?;
    let visited = AtomicU64::new(0);
    let en = sg.enumerator();
    let out = (0..bound + 1)
        .into_par_iter()
        .with_min_len(256)
        .try_fold(
            || (DeltaSet::new(), Vec::new()),
            |(mut acc, mut lens), s| {
                let count = en.lengths_into(s as i128, &mut lens);
                if visited.fetch_add(count, Ordering::Relaxed) + count > budget {
                    return Err(Error::BudgetExceeded { budget });
                }
                let mut last = 0;
                for w in lens.windows(2) {
                    let d = w[1] - w[0];
                    if d != last {
                        acc.insert(d);
                        last = d;
                    }
                }
                Ok((acc, lens))
            },
        )
        .map(|r| r.map(|(acc, _)| acc))
        .try_reduce(DeltaSet::new, |mut a, b| {
            a.extend_from(&b);
            Ok(a)
        })?;
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    /// Oracle and fast path agree.
    ExactMatch,
    /// The fast path claims distances the oracle has not reached yet.
    FastContainsObserved,
    /// The oracle observed a distance the fast path does not claim.
    Mismatch,
}

impl Verdict {
    pub fn name(&self) -> &'static str {
        match self {
            Verdict::ExactMatch => "ExactMatch",
            Verdict::FastContainsObserved => "FastContainsObserved",
            Verdict::Mismatch => "Mismatch",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleReport {
    pub bound: i128,
    pub observed_delta: DeltaSet,
    pub fast_delta: DeltaSet,
    /// `fast \ observed`.
    pub missing: DeltaSet,
    /// `observed \ fast`.
    pub extra: DeltaSet,
    pub verdict: Verdict,
    /// The fast side came from the non-symmetric reconstruction.
    pub experimental: bool,
}

/// Compares the brute-force delta set up to `bound` with the fast path
/// (or its non-symmetric counterpart).
pub fn verify(sg: &Semigroup, bound: i128) -> Result<OracleReport> {
    let observed = delta_set_bruteforce(sg, bound)?;
    let (fast, experimental) = match delta_set_fast(sg) {
        Ok(d) => (d, false),
        Err(Error::NonSymmetric) => (delta_set_nonsymmetric(sg)?, true),
        Err(e) => return Err(e),
    };
    Ok(report(bound, observed, fast, experimental))
}

fn report(bound: i128, observed: DeltaSet, fast: DeltaSet, experimental: bool) -> OracleReport {
    let missing = fast.difference(&observed);
    let extra = observed.difference(&fast);
    let verdict = if !extra.is_empty() {
        Verdict::Mismatch
    } else if missing.is_empty() {
        Verdict::ExactMatch
    } else {
        Verdict::FastContainsObserved
    };
    OracleReport { bound, observed_delta: observed, fast_delta: fast, missing, extra, verdict, experimental }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn sg(n: [i128; 3]) -> Semigroup {
        Semigroup::new(n).unwrap()
    }

    /// Triple loop over all tuples, no arithmetic progressions.
    fn naive_delta(n: [i128; 3], bound: i128) -> DeltaSet {
        let mut out = DeltaSet::new();
        for s in 0..=bound {
            let mut lens = Vec::new();
            for z3 in 0..=s / n[2] {
                for z2 in 0..=(s - z3 * n[2]) / n[1] {
                    let r = s - z3 * n[2] - z2 * n[1];
                    if r % n[0] == 0 {
                        lens.push(r / n[0] + z2 + z3);
                    }
                }
            }
            lens.sort_unstable();
            lens.dedup();
            out.extend_from(&DeltaSet::from_lengths(&lens));
        }
        out
    }

    #[test]
    fn examples() {
        let b = |n, bound| delta_set_bruteforce_with_budget(&sg(n), bound, DEFAULT_TUPLE_BUDGET).unwrap().values();
        assert_eq!(b([6, 10, 15], 300), vec![1, 2]);
        assert_eq!(b([6, 8, 11], 300), vec![1]);
        assert_eq!(b([3, 5, 7], 200), vec![2]);
    }

    #[test]
    fn verdicts() {
        let r = verify(&sg([6, 10, 15]), 300).unwrap();
        assert_eq!(r.verdict, Verdict::ExactMatch);
        let r = verify(&sg([6, 10, 15]), 3).unwrap();
        assert!(r.observed_delta.is_empty());
        assert_eq!(r.verdict, Verdict::FastContainsObserved);
        let r = verify(&sg([3, 5, 7]), 200).unwrap();
        assert!(r.experimental);
        assert_eq!(r.verdict, Verdict::ExactMatch);
        let r = report(10, [1, 5].into_iter().collect(), [1].into_iter().collect(), false);
        assert_eq!(r.verdict, Verdict::Mismatch);
        assert_eq!(r.extra.values(), vec![5]);
    }

    #[test]
    fn flagship_small_bound_is_partial() {
        let r = verify(&sg([2015, 7124, 84940]), 200_000).unwrap();
        assert_eq!(r.verdict, Verdict::FastContainsObserved);
        assert!(r.missing.contains(393));
    }

    #[test]
    fn budget_is_enforced() {
        let s = sg([6, 10, 15]);
        assert_eq!(
            delta_set_bruteforce_with_budget(&s, 10_000, 100),
            Err(Error::BudgetExceeded { budget: 100 })
        );
    }

    #[test]
    fn default_bound_formula() {
        assert_eq!(base_bound(&sg([6, 10, 15])).unwrap(), 4 * 30 + 15);
        assert_eq!(base_bound(&sg([3, 5, 7])).unwrap(), 4 * 14 + 7);
        assert_eq!(default_bound(&sg([3, 5, 7])).unwrap(), 4 * 14 + 7);
        assert!(default_bound(&sg([6, 10, 15])).unwrap() >= 4 * 30 + 15);
    }

    #[test]
    fn default_bound_follows_witnesses_within_budget() {
        let s = sg([12, 165, 220]);
        assert_eq!(base_bound(&s).unwrap(), 4 * 660 + 220);
        assert_eq!(default_bound(&s).unwrap(), 33660);
        assert_eq!(verify(&s, 33660).unwrap().verdict, Verdict::ExactMatch);
        let s = sg([2015, 7124, 84940]);
        let b = default_bound(&s).unwrap();
        assert!(b < 32705 * 7124);
        assert!(estimated_cost(&s, b) <= DEFAULT_TUPLE_BUDGET as f64 / 2.0);
    }

    #[test]
    fn cost_estimate_tracks_the_enumeration() {
        for (n, bound) in [([23, 29, 41], 5_000), ([12, 165, 220], 20_000), ([6, 10, 15], 2_000)] {
            let s = sg(n);
            let en = s.enumerator();
            let mut lens = Vec::new();
            let actual: u64 = (0..=bound).map(|x| en.lengths_into(x, &mut lens)).sum();
            let est = estimated_cost(&s, bound);
            let ratio = actual as f64 / est;
            assert!((0.8..1.25).contains(&ratio), "{n:?}: {actual} vs {est}");
        }
    }

    #[test]
    fn deterministic_across_runs() {
        let s = sg([23, 29, 41]);
        let first = delta_set_bruteforce(&s, 5000).unwrap();
        for _ in 0..3 {
            assert_eq!(delta_set_bruteforce(&s, 5000).unwrap(), first);
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]

        #[test]
        fn matches_naive_and_is_monotone(a in 3i128..25, b in 3i128..25, c in 3i128..25, b1 in 0i128..300, extra in 0i128..300) {
            let Ok(s) = Semigroup::new([a, b, c]) else { return Ok(()) };
            let n = s.generators().as_array();
            let small = delta_set_bruteforce_with_budget(&s, b1, DEFAULT_TUPLE_BUDGET).unwrap();
            let large = delta_set_bruteforce_with_budget(&s, b1 + extra, DEFAULT_TUPLE_BUDGET).unwrap();
            prop_assert!(small.is_subset(&large));
            prop_assert_eq!(&large, &naive_delta(n, b1 + extra));
        }
    }
}
