//! Betti elements, factorization graphs and the structural classification
//! of symmetric semigroups.

use crate::arith::gcd;
use crate::error::{Error, Result};
use crate::semigroup::{in_two_generated, Semigroup};

/// Disjoint-set forest over the vertices of a factorization graph.
struct UnionFind {
    parent: Vec<usize>,
    rank: Vec<u8>,
}

impl UnionFind {
    fn new(len: usize) -> Self {
        UnionFind { parent: (0..len).collect(), rank: vec![0; len] }
    }

    fn find(&mut self, mut i: usize) -> usize {
        while self.parent[i] != i {
            self.parent[i] = self.parent[self.parent[i]];
            i = self.parent[i];
        }
        i
    }

    fn union(&mut self, i: usize, j: usize) {
        let (a, b) = (self.find(i), self.find(j));
        if a == b {
            return;
        }
        match self.rank[a].cmp(&self.rank[b]) {
            std::cmp::Ordering::Less => self.parent[a] = b,
            std::cmp::Ordering::Greater => self.parent[b] = a,
            std::cmp::Ordering::Equal => {
                self.parent[b] = a;
                self.rank[a] += 1;
            }
        }
    }
}

/// Whether the graph on `Z(s)`, with an edge between factorizations that
/// share a nonzero coordinate, is connected.
pub fn nabla_graph_connected(sg: &Semigroup, s: i128) -> Result<bool> {
    let z = sg.factorizations(s);
    if z.is_empty() {
        return Err(Error::ElementNotInSemigroup(s));
    }
    let mut uf = UnionFind::new(z.len());
    // Every factorization using atom i is joined to the first one that does.
    for i in 0..3 {
        let mut first = None;
        for (v, f) in z.iter().enumerate() {
            if f.0[i] > 0 {
                match first {
                    None => first = Some(v),
                    Some(u) => uf.union(u, v),
                }
            }
        }
    }
    let root = uf.find(0);
    Ok((1..z.len()).all(|v| uf.find(v) == root))
}

/// The `c_i` (least positive with `c_i n_i` in the monoid of the other two
/// generators) and the resulting Betti elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiData {
    /// Indexed like the sorted generators.
    pub c: [i128; 3],
    /// `{c_i n_i}`, ascending and deduplicated.
    pub elements: Vec<i128>,
}

impl BettiData {
    pub fn count(&self) -> usize {
        self.elements.len()
    }

    pub fn max(&self) -> i128 {
        *self.elements.last().expect("at least one Betti element")
    }
}

/// Computes the Betti elements and checks each against its factorization
/// graph.
pub fn betti_elements(sg: &Semigroup) -> Result<BettiData> {
    let n = sg.generators().as_array();
    let mut c = [0i128; 3];
    for i in 0..3 {
        let (j, k) = others(i);
        // n_j * n_i is always in <n_j>, so the loop stops by c = n_j.
        c[i] = (1..=n[j]).find(|&ci| in_two_generated(ci * n[i], n[j], n[k])).unwrap();
    }
    let mut elements: Vec<i128> = (0..3).map(|i| c[i] * n[i]).collect();
    elements.sort_unstable();
    elements.dedup();
    for &b in &elements {
        if nabla_graph_connected(sg, b)? {
            return Err(Error::InvariantViolation(format!(
                "claimed Betti element {b} has a connected factorization graph"
            )));
        }
    }
    Ok(BettiData { c, elements })
}

fn others(i: usize) -> (usize, usize) {
    match i {
        0 => (1, 2),
        1 => (0, 2),
        _ => (0, 1),
    }
}

/// Parameters of a semigroup `<a m1, a m2, b m1 + c m2>`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TwoBettiForm {
    pub a: i128,
    pub m1: i128,
    pub m2: i128,
    pub b: i128,
    pub c: i128,
    /// `perm[t]` is the sorted-generator index of the t-th generator of
    /// `(a m1, a m2, b m1 + c m2)`.
    pub perm: [usize; 3],
}

impl TwoBettiForm {
    /// The generators in form order.
    pub fn generators(&self) -> [i128; 3] {
        [self.a * self.m1, self.a * self.m2, self.b * self.m1 + self.c * self.m2]
    }

    /// `{a(b m1 + c m2), a m1 m2}`, ascending.
    pub fn induced_betti(&self) -> Vec<i128> {
        let mut v = vec![self.a * (self.b * self.m1 + self.c * self.m2), self.a * self.m1 * self.m2];
        v.sort_unstable();
        v.dedup();
        v
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StructuralForm {
    /// `(n1, n2, n3) = (s2 s3, s1 s3, s1 s2)` with `s1 > s2 > s3`.
    OneBetti { s1: i128, s2: i128, s3: i128 },
    TwoBetti(TwoBettiForm),
    /// Non-symmetric.
    ThreeBetti,
}

impl StructuralForm {
    pub fn is_symmetric(&self) -> bool {
        !matches!(self, StructuralForm::ThreeBetti)
    }

    pub fn name(&self) -> &'static str {
        match self {
            StructuralForm::OneBetti { .. } => "one_betti",
            StructuralForm::TwoBetti(_) => "two_betti",
            StructuralForm::ThreeBetti => "three_betti",
        }
    }
}

/// Recovers the structural form from the Betti count.
pub fn classify(sg: &Semigroup, betti: &BettiData) -> Result<StructuralForm> {
    let n = sg.generators().as_array();
    match betti.count() {
        1 => {
            let (s1, s2, s3) = (gcd(n[1], n[2]), gcd(n[0], n[2]), gcd(n[0], n[1]));
            let ok = [s2 * s3, s1 * s3, s1 * s2] == n
                && s1 > s2
                && s2 > s3
                && gcd(s1, s2) == 1
                && gcd(s1, s3) == 1
                && gcd(s2, s3) == 1
                && betti.elements == [s1 * s2 * s3];
            if ok {
                Ok(StructuralForm::OneBetti { s1, s2, s3 })
            } else {
                Err(Error::StructureMismatch(format!(
                    "{} has one Betti element but is not of the form (s2 s3, s1 s3, s1 s2)",
                    sg.generators()
                )))
            }
        }
        2 => {
            let mut best: Option<TwoBettiForm> = None;
            for (i, j, k) in [(0, 1, 2), (0, 2, 1), (1, 2, 0)] {
                let Some(form) = two_betti_candidate(n, i, j, k) else { continue };
                // The pair shares the Betti element a m1 m2 and c_k = a.
                let shared = form.a * form.m1 * form.m2;
                if form.induced_betti() != betti.elements
                    || betti.c[i] * n[i] != shared
                    || betti.c[j] * n[j] != shared
                    || betti.c[k] != form.a
                {
                    continue;
                }
                if best.is_none_or(|b| (form.a, form.m1) < (b.a, b.m1)) {
                    best = Some(form);
                }
            }
            best.map(StructuralForm::TwoBetti).ok_or_else(|| {
                Error::StructureMismatch(format!(
                    "{} has two Betti elements but no pair of generators fits (a m1, a m2, b m1 + c m2)",
                    sg.generators()
                ))
            })
        }
        3 => Ok(StructuralForm::ThreeBetti),
        k => Err(Error::StructureMismatch(format!("{k} Betti elements"))),
    }
}

/// Tries `(n_i, n_j)` as `(a m1, a m2)` and `n_k = b m1 + c m2` with
/// `0 <= b < m2`.
fn two_betti_candidate(n: [i128; 3], i: usize, j: usize, k: usize) -> Option<TwoBettiForm> {
    let a = gcd(n[i], n[j]);
    if a < 2 {
        return None;
    }
    let (lo, hi) = if n[i] < n[j] { (i, j) } else { (j, i) };
    let (m1, m2) = (n[lo] / a, n[hi] / a);
    let target = n[k];
    // b m1 = n_k (mod m2)
    let inv = crate::arith::mod_inverse(m1, m2)?;
    let b = (target.rem_euclid(m2) * inv).rem_euclid(m2);
    let rest = target - b * m1;
    if rest < 0 {
        return None;
    }
    let c = rest / m2;
    if b + c < 2 {
        return None;
    }
    Some(TwoBettiForm { a, m1, m2, b, c, perm: [lo, hi, k] })
}
