#![allow(dead_code)]

use std::collections::BTreeSet;

use deltasg::arith::gcd;
use deltasg::{betti_elements, classify, Semigroup, StructuralForm};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub const SEED: u64 = 0x5eed_de17a;

#[derive(Debug, Clone)]
pub struct Member {
    pub generators: [i128; 3],
    pub form: StructuralForm,
}

pub fn rng(stream: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(SEED);
    r.set_stream(stream);
    r
}

/// `(s2 s3, s1 s3, s1 s2)` with pairwise coprime `s1 > s2 > s3 >= 2`,
/// all at most 60.
pub fn one_betti(r: &mut ChaCha8Rng) -> [i128; 3] {
    loop {
        let mut s: Vec<i128> = (0..3).map(|_| r.gen_range(2..=60)).collect();
        s.sort_unstable_by(|a, b| b.cmp(a));
        let (s1, s2, s3) = (s[0], s[1], s[2]);
        if s1 > s2 && s2 > s3 && gcd(s1, s2) == 1 && gcd(s1, s3) == 1 && gcd(s2, s3) == 1 {
            return [s2 * s3, s1 * s3, s1 * s2];
        }
    }
}

/// `(a m1, a m2, b m1 + c m2)` with all parameters at most 12, kept only
/// when the result is a valid two-Betti semigroup.
pub fn two_betti(r: &mut ChaCha8Rng) -> [i128; 3] {
    loop {
        let a = r.gen_range(2..=12);
        let m1 = r.gen_range(2..=11);
        let m2 = r.gen_range(m1 + 1..=12);
        let b = r.gen_range(0..=12);
        let c = r.gen_range(0..=12);
        let n = [a * m1, a * m2, b * m1 + c * m2];
        if gcd(m1, m2) != 1 || b + c < 2 {
            continue;
        }
        let Ok(sg) = Semigroup::new(n) else { continue };
        let betti = betti_elements(&sg).unwrap();
        if let Ok(StructuralForm::TwoBetti(_)) = classify(&sg, &betti) {
            return n;
        }
    }
}

/// 60 one-Betti and 60 two-Betti semigroups, deduplicated, in a fixed
/// order.
pub fn symmetric_corpus() -> Vec<Member> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    let mut r = rng(1);
    while out.len() < 60 {
        push(&mut out, &mut seen, one_betti(&mut r));
    }
    let mut r = rng(2);
    while out.len() < 120 {
        push(&mut out, &mut seen, two_betti(&mut r));
    }
    out
}

fn push(out: &mut Vec<Member>, seen: &mut BTreeSet<[i128; 3]>, mut n: [i128; 3]) {
    n.sort_unstable();
    if !seen.insert(n) {
        return;
    }
    let sg = Semigroup::new(n).unwrap();
    let betti = betti_elements(&sg).unwrap();
    let form = classify(&sg, &betti).unwrap();
    assert!(form.is_symmetric(), "{n:?} should be symmetric");
    out.push(Member { generators: n, form });
}

pub fn semigroup(n: [i128; 3]) -> Semigroup {
    Semigroup::new(n).unwrap()
}
