use crate::arith::gcd;
use crate::error::{Error, Result};

/// One block `D(eta_j, eta_{j+1})` of the Euclid set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Level {
    /// 1-based level index `j`.
    pub index: usize,
    pub pair: (i128, i128),
    /// Members in the order the subtraction produces them (descending).
    pub values: Vec<i128>,
}

/// Every value produced by subtraction-based Euclid on `(delta1, delta2)`,
/// grouped by remainder step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EuclidSet {
    pub delta1: i128,
    pub delta2: i128,
    /// Remainder chain `eta_1 > eta_2 > ... > 0`.
    pub eta: Vec<i128>,
    pub levels: Vec<Level>,
    /// Ascending, including 0.
    pub union: Vec<i128>,
}

impl EuclidSet {
    pub fn contains(&self, x: i128) -> bool {
        self.union.binary_search(&x).is_ok()
    }

    pub fn g(&self) -> i128 {
        gcd(self.delta1, self.delta2)
    }

    pub fn max(&self) -> i128 {
        self.eta[0]
    }

    /// Index of the first level holding `x`.
    pub fn level_of(&self, x: i128) -> Option<usize> {
        self.levels.iter().find(|l| l.values.contains(&x)).map(|l| l.index)
    }

    /// Nonzero members.
    pub fn positive(&self) -> impl Iterator<Item = i128> + '_ {
        self.union.iter().copied().filter(|&d| d != 0)
    }
}

/// Builds `Euc(delta1, delta2)`.
///
/// Levels 1 and 2 start at `eta_j` itself, later levels at
/// `eta_j - eta_{j+1}`; each runs down to `eta_j mod eta_{j+1}`.
pub fn euclid_set(delta1: i128, delta2: i128) -> Result<EuclidSet> {
    if delta1 <= 0 || delta2 < 0 {
        return Err(Error::OutOfRange(format!(
            "Euclid set needs delta1 > 0 and delta2 >= 0, got ({delta1}, {delta2})"
        )));
    }
    if delta2 == 0 {
        return Ok(EuclidSet {
            delta1,
            delta2,
            eta: vec![delta1, 0],
            levels: vec![Level { index: 1, pair: (delta1, 0), values: vec![delta1, 0] }],
            union: vec![0, delta1],
        });
    }
    let mut eta = vec![delta1.max(delta2), delta1.min(delta2)];
    while *eta.last().unwrap() > 0 {
        let n = eta.len();
        eta.push(eta[n - 2] % eta[n - 1]);
    }
    let mut levels = Vec::new();
    for j in 0..eta.len() - 2 {
        let (hi, lo) = (eta[j], eta[j + 1]);
        let first = if j < 2 { 0 } else { 1 };
        let values = (first..=hi / lo).map(|k| hi - k * lo).collect();
        levels.push(Level { index: j + 1, pair: (hi, lo), values });
    }
    let mut union: Vec<i128> = levels.iter().flat_map(|l| l.values.iter().copied()).collect();
    union.sort_unstable();
    union.dedup();
    Ok(EuclidSet { delta1, delta2, eta, levels, union })
}
