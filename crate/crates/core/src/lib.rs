//! Exact computations in Burnside rings and Tambara functors of small finite groups.
//!
//! The crate builds finite permutation groups from generators, enumerates their
//! subgroup lattices, and works with finite G-sets through explicit action
//! tables. On top of that sit the table of marks, the ghost (marks)
//! homomorphism with exact integer back-substitution, integer norms realized
//! as function G-sets, prime descriptors of the Burnside ring, and unit tests
//! in localizations. The `tambara` module packages the same data as levelwise
//! rings with restriction, transfer, norm, and conjugation maps, together with
//! an axiom checker and a per-level unit scanner.
//!
//! All ring arithmetic is exact. The scalar type is generic over [`Scalar`];
//! the crate-level aliases fix it to arbitrary-precision integers.

pub mod burnside;
pub mod caps;
pub mod error;
pub mod families;
pub mod group;
pub mod gset;
pub mod lattice;
pub mod perm;
pub mod scalar;
pub mod tambara;

pub use caps::Caps;
pub use error::{Error, Result};
pub use scalar::Scalar;

/// Default exact scalar for all ring arithmetic.
pub type Int = num_bigint::BigInt;

/// Table of marks over the default scalar.
pub type TableOfMarks = burnside::TableOfMarks<Int>;
/// Burnside ring element over the default scalar.
pub type BurnsideElement = burnside::BurnsideElement<Int>;
/// Ghost image (marks vector) over the default scalar.
pub type MarksVector = burnside::MarksVector<Int>;
