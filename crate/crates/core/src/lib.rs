//! Generating polynomials of permutation statistics over pattern classes that
//! contain 312, and the st-Wilf equivalences they produce.
//!
//! For a statistic `st` and a set of patterns `Π`, the st-polynomial is
//! `F_n(Π; q) = Σ q^st(σ)` summed over the permutations of length `n` that
//! avoid every pattern of `Π`. When `312 ∈ Π` and `st` splits additively over
//! `σ = 213[σ1, 1, σ2]` (see [`stats`]), the polynomials obey a recursion in
//! terms of prefix and suffix sub-patterns of the block decompositions of the
//! other members of `Π`. This crate provides:
//!
//! - [`perm`]: permutations, containment, inflation, block decomposition and
//!   the dihedral action on permutation matrices,
//! - [`stats`]: `inv`, `des`, consecutive `213`, and the additivity check,
//! - [`qpoly`]: exact polynomials in `q` with big-integer coefficients,
//! - [`oracle`]: brute-force enumeration of avoiders,
//! - [`mobius`]: closed forms and a poset oracle for the Möbius values behind
//!   the inclusion-exclusion,
//! - [`recursion`]: the memoized recursive engine,
//! - [`wilf`]: equivalence checks, trivial-symmetry witnesses and the
//!   block-transposition construction of nontrivial equivalent pairs.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

mod error;
pub mod mobius;
pub mod oracle;
pub mod perm;
pub mod qpoly;
pub mod recursion;
pub mod stats;
pub mod wilf;

pub use error::{Error, Result};
pub use perm::{BlockDecomposition, D4Element, Permutation};
pub use qpoly::QPolynomial;
pub use recursion::{st_poly_rec, CanonicalPatternSet, Memo, MemoKey, MemoTable, NoMemo};
pub use stats::Statistic;
pub use wilf::{EquivalenceReport, Verdict};
