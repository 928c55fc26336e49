//! Numerical semigroups with three minimal generators: membership,
//! Frobenius number, symmetry and per-element factorizations.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::OnceLock;

use crate::arith::{self, gcd};
use crate::error::{Error, Result};

/// Largest membership table we are willing to allocate.
const MAX_TABLE_LEN: i128 = 1 << 31;

/// A validated triple of minimal generators, stored ascending.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Generators {
    sorted: [i128; 3],
    input: [i128; 3],
}

impl Generators {
    /// Validates `raw` and returns the canonical (sorted) generators.
    pub fn new(raw: [i128; 3]) -> Result<Self> {
        validate_generators(raw)
    }

    pub fn as_array(&self) -> [i128; 3] {
        self.sorted
    }

    /// The generators in the order they were given.
    pub fn input_order(&self) -> [i128; 3] {
        self.input
    }

    /// For each input position, the index of that generator in the sorted
    /// triple.
    pub fn input_positions(&self) -> [usize; 3] {
        let mut pos = [0usize; 3];
        for (i, n) in self.input.iter().enumerate() {
            pos[i] = self.sorted.iter().position(|m| m == n).unwrap();
        }
        pos
    }

    pub fn n1(&self) -> i128 {
        self.sorted[0]
    }

    pub fn n2(&self) -> i128 {
        self.sorted[1]
    }

    pub fn n3(&self) -> i128 {
        self.sorted[2]
    }
}

impl fmt::Display for Generators {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.sorted;
        write!(f, "<{a},{b},{c}>")
    }
}

/// Checks positivity, distinctness, `gcd = 1` and minimality.
pub fn validate_generators(raw: [i128; 3]) -> Result<Generators> {
    if let Some(&bad) = raw.iter().find(|&&n| n <= 0) {
        return Err(Error::NonPositive(bad));
    }
    let mut sorted = raw;
    sorted.sort_unstable();
    if sorted[0] == sorted[1] || sorted[1] == sorted[2] {
        return Err(Error::NotThreeAtoms(raw));
    }
    let g = gcd(gcd(sorted[0], sorted[1]), sorted[2]);
    if g != 1 {
        return Err(Error::GcdNotOne(g));
    }
    for i in 0..3 {
        let (j, k) = match i {
            0 => (1, 2),
            1 => (0, 2),
            _ => (0, 1),
        };
        if in_two_generated(sorted[i], sorted[j], sorted[k]) {
            return Err(Error::NotMinimal { generator: sorted[i] });
        }
    }
    Ok(Generators { sorted, input: raw })
}

/// Whether `x` lies in the monoid generated by `a` and `b` (both positive).
pub(crate) fn in_two_generated(x: i128, a: i128, b: i128) -> bool {
    if x < 0 {
        return false;
    }
    let (small, big) = if a <= b { (a, b) } else { (b, a) };
    (0..=x / big).any(|k| (x - k * big) % small == 0)
}

/// Atom multiplicities `(z1, z2, z3)` of a factorization.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Factorization(pub [i128; 3]);

impl Factorization {
    pub fn length(&self) -> i128 {
        self.0.iter().sum()
    }

    /// The element `z . n` this factorization represents.
    pub fn value(&self, gens: &Generators) -> Result<i128> {
        arith::dot(&self.0, &gens.as_array())
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.0;
        write!(f, "({a},{b},{c})")
    }
}

/// An integer triple orthogonal to the generator vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct KernelVector(pub [i128; 3]);

impl KernelVector {
    pub fn length(&self) -> i128 {
        self.0.iter().sum()
    }

    pub fn is_in_kernel(&self, gens: &[i128; 3]) -> bool {
        matches!(arith::dot(&self.0, gens), Ok(0))
    }

    pub fn signs(&self) -> [i8; 3] {
        self.0.map(|c| c.signum() as i8)
    }

    /// Coordinatewise positive part.
    pub fn positive_part(&self) -> [i128; 3] {
        self.0.map(|c| c.max(0))
    }

    /// Coordinatewise negative part (as nonnegative numbers).
    pub fn negative_part(&self) -> [i128; 3] {
        self.0.map(|c| (-c).max(0))
    }
}

impl fmt::Display for KernelVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.0;
        write!(f, "({a},{b},{c})")
    }
}

/// A sorted set of positive distances.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct DeltaSet(BTreeSet<i128>);

impl DeltaSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// Consecutive differences of a sorted, deduplicated length list.
    pub fn from_lengths(lengths: &[i128]) -> Self {
        lengths.windows(2).map(|w| w[1] - w[0]).collect()
    }

    pub fn values(&self) -> Vec<i128> {
        self.0.iter().copied().collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = i128> + '_ {
        self.0.iter().copied()
    }

    pub fn contains(&self, d: i128) -> bool {
        self.0.contains(&d)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn min(&self) -> Option<i128> {
        self.0.first().copied()
    }

    pub fn max(&self) -> Option<i128> {
        self.0.last().copied()
    }

    pub fn insert(&mut self, d: i128) -> bool {
        self.0.insert(d)
    }

    pub fn extend_from(&mut self, other: &DeltaSet) {
        self.0.extend(other.0.iter().copied());
    }

    pub fn is_subset(&self, other: &DeltaSet) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn difference(&self, other: &DeltaSet) -> DeltaSet {
        self.0.difference(&other.0).copied().collect()
    }
}

impl FromIterator<i128> for DeltaSet {
    fn from_iter<I: IntoIterator<Item = i128>>(iter: I) -> Self {
        DeltaSet(iter.into_iter().collect())
    }
}

impl fmt::Display for DeltaSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|d| d.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// Walks all factorizations of an element.
///
/// For a fixed `z3`, the admissible `z2` form an arithmetic progression
/// modulo `n1 / gcd(n1, n2)`, so only divisible candidates are visited.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Enumerator {
    n: [i128; 3],
    h: i128,
    step: i128,
    inv: i128,
    inv3: i128,
}

impl Enumerator {
    pub(crate) fn new(gens: &Generators) -> Self {
        let n = gens.as_array();
        let h = gcd(n[0], n[1]);
        let step = n[0] / h;
        let inv = arith::mod_inverse(n[1] / h, step).expect("n1/h and n2/h are coprime");
        let inv3 = arith::mod_inverse(n[2], h).expect("gcd(n1, n2, n3) = 1");
        Enumerator { n, h, step, inv, inv3 }
    }

    /// Upper bound on the candidates `visit` touches for `s`.
    pub(crate) fn estimate(&self, s: i128) -> u128 {
        if s < 0 {
            return 0;
        }
        let lcm12 = self.n[1] * self.step;
        ((s / self.n[2] / self.h + 1) as u128).saturating_mul((s / lcm12 + 2) as u128)
    }

    /// Calls `f` on each factorization of `s`, in descending `(z3, z2)`
    /// order, until `f` returns `false`. Returns the number of candidates
    /// visited.
    pub(crate) fn visit(&self, s: i128, mut f: impl FnMut([i128; 3]) -> bool) -> u64 {
        let [n1, n2, n3] = self.n;
        let mut visited = 0u64;
        if s < 0 {
            return 0;
        }
        // z3 n3 = s (mod h) fixes z3 modulo h
        let z3_res = (s % self.h) * self.inv3 % self.h;
        let top = s / n3;
        if top < z3_res {
            return 0;
        }
        let top = top - (top - z3_res) % self.h;
        for z3 in (0..=top).rev().step_by(self.h as usize) {
            visited += 1;
            let r = s - z3 * n3;
            debug_assert_eq!(r % self.h, 0);
            let z2_min = ((r / self.h) % self.step * self.inv) % self.step;
            if z2_min * n2 > r {
                continue;
            }
            let z2_max = z2_min + ((r / n2 - z2_min) / self.step) * self.step;
            let mut z2 = z2_max;
            while z2 >= z2_min {
                visited += 1;
                let z1 = (r - z2 * n2) / n1;
                debug_assert_eq!(z1 * n1 + z2 * n2 + z3 * n3, s);
                if !f([z1, z2, z3]) {
                    return visited;
                }
                z2 -= self.step;
            }
        }
        visited
    }

    /// Sorted, deduplicated length set of `s` together with the candidate
    /// count.
    pub(crate) fn lengths(&self, s: i128) -> (Vec<i128>, u64) {
        let mut lens = Vec::new();
        let visited = self.lengths_into(s, &mut lens);
        (lens, visited)
    }

    /// Same as [`Enumerator::lengths`], writing into `lens`. Counts
    /// candidates exactly as `visit` does.
    pub(crate) fn lengths_into(&self, s: i128, lens: &mut Vec<i128>) -> u64 {
        let [n1, n2, n3] = self.n;
        lens.clear();
        if s < 0 {
            return 0;
        }
        let z3_res = (s % self.h) * self.inv3 % self.h;
        let top = s / n3;
        if top < z3_res {
            return 0;
        }
        let top = top - (top - z3_res) % self.h;
        // each step z2 -= n1/h, z1 += n2/h
        let rise = (n2 - n1) / self.h;
        let mut visited = 0u64;
        for z3 in (0..=top).rev().step_by(self.h as usize) {
            visited += 1;
            let r = s - z3 * n3;
            let z2_min = ((r / self.h) % self.step * self.inv) % self.step;
            if z2_min * n2 > r {
                continue;
            }
            let count = (r / n2 - z2_min) / self.step + 1;
            let z2_max = z2_min + (count - 1) * self.step;
            let mut len = (r - z2_max * n2) / n1 + z2_max + z3;
            for _ in 0..count {
                lens.push(len);
                len += rise;
            }
            visited += count as u64;
        }
        lens.sort_unstable();
        lens.dedup();
        visited
    }
}

#[derive(Debug)]
struct Membership {
    frobenius: i128,
    member: Vec<bool>,
}

/// A numerical semigroup `<n1, n2, n3>`.
///
/// Holds a membership table up to `F(S) + n3` that is built on first use.
#[derive(Debug)]
pub struct Semigroup {
    gens: Generators,
    enumerator: Enumerator,
    table: OnceLock<Result<Membership>>,
}

impl Clone for Semigroup {
    fn clone(&self) -> Self {
        Semigroup::from_generators(self.gens)
    }
}

impl Semigroup {
    pub fn new(raw: [i128; 3]) -> Result<Self> {
        Ok(Self::from_generators(validate_generators(raw)?))
    }

    pub fn from_generators(gens: Generators) -> Self {
        Semigroup { gens, enumerator: Enumerator::new(&gens), table: OnceLock::new() }
    }

    pub fn generators(&self) -> &Generators {
        &self.gens
    }

    pub(crate) fn enumerator(&self) -> &Enumerator {
        &self.enumerator
    }

    fn membership(&self) -> Result<&Membership> {
        self.table
            .get_or_init(|| build_membership(&self.gens))
            .as_ref()
            .map_err(Clone::clone)
    }

    /// Whether `s` has at least one factorization.
    ///
    /// Uses the membership table once it exists and the bounded
    /// enumeration otherwise.
    pub fn contains(&self, s: i128) -> bool {
        if s < 0 {
            return false;
        }
        if let Some(Ok(m)) = self.table.get() {
            return s > m.frobenius || m.member[s as usize];
        }
        let mut found = false;
        self.enumerator.visit(s, |_| {
            found = true;
            false
        });
        found
    }

    /// `F(S) = max(Z \ S)`.
    pub fn frobenius_number(&self) -> Result<i128> {
        Ok(self.membership()?.frobenius)
    }

    /// Gaps `{x in N : x not in S}` in ascending order.
    pub fn gaps(&self) -> Result<Vec<i128>> {
        let m = self.membership()?;
        Ok((1..=m.frobenius).filter(|&x| !m.member[x as usize]).collect())
    }

    /// Checks `x not in S => F(S) - x in S` over every gap.
    pub fn is_symmetric(&self) -> Result<bool> {
        let m = self.membership()?;
        let f = m.frobenius;
        Ok((1..=f).filter(|&x| !m.member[x as usize]).all(|x| m.member[(f - x) as usize]))
    }

    /// All factorizations of `s`, ordered by `(z3, z2, z1)` descending.
    /// Empty iff `s` is not in the semigroup.
    pub fn factorizations(&self, s: i128) -> Vec<Factorization> {
        let mut out = Vec::new();
        self.enumerator.visit(s, |z| {
            out.push(Factorization(z));
            true
        });
        out
    }

    /// `L(s)`, sorted ascending without repetitions.
    pub fn length_set(&self, s: i128) -> Result<Vec<i128>> {
        let (lens, _) = self.enumerator.lengths(s);
        if lens.is_empty() {
            return Err(Error::ElementNotInSemigroup(s));
        }
        Ok(lens)
    }

    /// `Delta(s)`: consecutive differences of `L(s)`.
    pub fn delta_of_element(&self, s: i128) -> Result<DeltaSet> {
        Ok(DeltaSet::from_lengths(&self.length_set(s)?))
    }
}

fn build_membership(gens: &Generators) -> Result<Membership> {
    let [n1, n2, n3] = gens.as_array();
    // Schur's bound F(S) <= (n1 - 1)(n3 - 1) - 1 caps the scan.
    let bound = arith::add(arith::mul(n1 - 1, n3 - 1)?, n1 + n3)?;
    if bound > MAX_TABLE_LEN {
        return Err(Error::TooLarge(format!("membership table of {bound} entries")));
    }
    let (n1, n2, n3) = (n1 as usize, n2 as usize, n3 as usize);
    let mut member = vec![true];
    let mut run = 1usize;
    let mut last_gap: i128 = -1;
    let mut s = 0usize;
    while run < n1 {
        s += 1;
        let m = (s >= n1 && member[s - n1])
            || (s >= n2 && member[s - n2])
            || (s >= n3 && member[s - n3]);
        member.push(m);
        if m {
            run += 1;
        } else {
            run = 0;
            last_gap = s as i128;
        }
    }
    let frobenius = last_gap;
    member.truncate((frobenius.max(0) as usize) + 1);
    while member.len() < (frobenius + 1) as usize + n3 {
        member.push(true);
    }
    Ok(Membership { frobenius, member })
}
