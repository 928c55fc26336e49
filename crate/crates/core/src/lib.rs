//! Delta sets of numerical semigroups with three generators.
//!
//! For a symmetric semigroup `S = <n1, n2, n3>` the set of distances between
//! consecutive factorization lengths is the Euclid set of two integers read
//! off a well-chosen basis of the kernel lattice, minus zero. This crate
//! computes that set directly, cross-checks it against brute-force
//! enumeration, and produces constructive witnesses for every distance.
//!
//! ```
//! use deltasg::{delta_set_fast, Semigroup};
//!
//! let s = Semigroup::new([2015, 7124, 84940]).unwrap();
//! let delta = delta_set_fast(&s).unwrap();
//! assert_eq!(delta.max(), Some(393));
//! assert_eq!(delta.len(), 15);
//! ```

pub mod arith;
pub mod betti;
pub mod cli;
pub mod error;
pub mod euclid;
pub mod oracle;
pub mod semigroup;

pub use betti::{betti_elements, classify, nabla_graph_connected, BettiData, StructuralForm, TwoBettiForm};
pub use error::{Error, Result};
pub use euclid::{
    basement, basis_and_deltas, decompose, delta_set_fast, delta_set_nonsymmetric, euclid_set,
    intermediate_factorization, normalize_kernel_vector, witness, BasementVariant, BasisPair,
    Decomposition, EuclidSet, Normalized, WeightedVector, Witness,
};
pub use oracle::{delta_set_bruteforce, verify, OracleReport, Verdict};
pub use semigroup::{validate_generators, DeltaSet, Factorization, Generators, KernelVector, Semigroup};
