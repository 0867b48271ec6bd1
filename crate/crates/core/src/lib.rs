//! Tight contact structures on the Brieskorn spheres `-Σ(2,3,6n-1)`.
//!
//! The crate mechanizes the combinatorics and exact algebra around the
//! family of contact structures `η_{i,j}^n`:
//!
//! * [`slope`]: extended-rational slopes, unimodular Möbius actions,
//!   negative continued fractions and tight-structure counts on solid tori.
//! * [`homology`]: integer Smith normal form, plumbing graphs and linking
//!   matrices, `H_1` of surgeries and torus bundles, cobordism kernels `K(W)`.
//! * [`census`]: the index triangles `P_n`, sub-triangles, Legendrian
//!   stabilization bookkeeping and the two surgery factorizations.
//! * [`invariant`]: half-integer Laurent polynomials, the contact invariants
//!   and the cobordism maps between them, conjugation and gradings.
//! * [`open_book`]: genus-one open books, Dehn-twist words acting on `H_1`,
//!   lantern and braid rewriting, Hopf (de)stabilization and torus-bundle
//!   monodromy.
//! * [`cli`]: the batch front end used by the `tight-brieskorn` binary.
//!
//! Everything is exact: integers are unbounded where values can grow and no
//! floating point is used anywhere.

mod bigint_serde;
pub mod census;
pub mod cli;
pub mod error;
pub mod homology;
pub mod invariant;
pub mod open_book;
pub mod slope;
pub mod verify;

pub use error::{Error, Result};
