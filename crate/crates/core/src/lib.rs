//! Finite posets and finite distributive lattices, the Birkhoff duality between
//! them, natural (antilexicographic) linear orders on lattices, positive
//! homomorphisms and congruences, and an exhaustive verifier for Ramsey arrows
//! in the corresponding categories.
//!
//! Every structure is small and dense: elements are indices `0..n` and sets of
//! poset elements are `u64` bit masks with bit `i` standing for element `i`.
//! A [`DistLattice`] is always stored canonically as the lattice of down-sets of
//! its join-irreducible poset, so joins and meets are bitwise union and
//! intersection.

pub mod bits;
pub mod duality;
pub mod error;
pub mod json;
pub mod lattice;
pub mod lemmas;
pub mod ordered;
pub mod poset;
pub mod ramsey;

pub use error::{Error, LatticeOp, Result};
pub use lattice::{Congruence, DistLattice, LatticeHom, RawLattice};
pub use ordered::{NaturalOrder, OrderedLattice, PositiveCongruence, PositiveHom};
pub use poset::{AnyPoset, LinearOrderedPoset, Poset, PosetEmbedding};
pub use ramsey::{ArrowCertificate, Flavor, Object, SearchConfig, Verdict};

/// Admission flags for the degenerate structures.
///
/// The empty poset and the one-element lattice (where `0 = 1`) are dual to each
/// other. Both are rejected unless the matching flag is set.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Flags {
    pub allow_empty_poset: bool,
    pub allow_trivial_lattice: bool,
}

impl Flags {
    pub const PERMISSIVE: Flags = Flags { allow_empty_poset: true, allow_trivial_lattice: true };
}
