//! Kernel basis, Euclid sets, decompositions, basements and the
//! constructive factorization steps.

mod basement;
mod basis;
mod construct;
mod decompose;
mod fast;
mod normalize;
mod set;

pub use basement::{basement, basements, BasementVariant, Basements};
pub use basis::{basis_and_deltas, BasisPair};
pub use construct::{
    adjacent, intermediate_factorization, witness, witness_with_limit, Witness, WitnessSource,
    WITNESS_ENUMERATION_LIMIT,
};
pub use decompose::{decompose, Decomposition};
pub use fast::{analyze, delta_set_fast, delta_set_nonsymmetric, Analysis};
pub use normalize::{matches_signs, normalize_kernel_vector, Normalized, WeightedVector};
pub use set::{euclid_set, EuclidSet, Level};
