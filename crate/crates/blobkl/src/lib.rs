//! Exact combinatorics of the affine type-A Hecke algebra and the graded
//! cell structure of generalized blob algebras.
//!
//! The crate computes, with exact integer arithmetic throughout:
//!
//! - Bott-Samelson expansions and (p-)Kazhdan-Lusztig tables over affine
//!   Weyl groups of type A ([`hecke`]), the dihedral p-case seeded by the
//!   base-p containment function;
//! - residue-sequence tableau enumeration, degrees and graded cell
//!   dimensions of one-column multipartitions ([`tableaux`]);
//! - the alcove geometry tying the two together: hyperplane sequences,
//!   alcove walks and principal reduced expressions ([`alcove`]);
//! - the level-2 specialization: Pascal-triangle paths, the hook algorithm,
//!   degree-zero cells, Temperley-Lieb decomposition numbers and graded
//!   decomposition numbers of the blob algebra ([`pascal`]);
//! - named verification suites cross-checking everything ([`suites`]).

pub mod alcove;
pub mod error;
pub mod hecke;
pub mod laurent;
pub mod pascal;
pub mod suites;
pub mod tableaux;
pub mod weyl;

pub use error::{Error, Result};
