//! Frobenius numbers of primitive Pythagorean triples.
//!
//! A primitive Pythagorean triple `(m^2 - n^2, 2mn, m^2 + n^2)` is a gcd-1
//! generator set, so all sufficiently large integers are nonnegative
//! combinations of its three values. This crate computes where
//! "sufficiently large" starts and what the combinations look like:
//!
//! - [`closed_forms`] evaluates the Frobenius number directly:
//!   `m(m^2 + 2mn - n^2 - 2m - 2n)` for triples, `ab - a - b` for coprime
//!   pairs.
//! - [`constructive`] produces an explicit representation for every target
//!   above the Frobenius number, via a Diophantine solve and an interval
//!   search, in time independent of the target's size.
//! - [`oracle`] answers the same questions by brute force (reachability
//!   tables, Apery sets, residue-class shortest paths, denumerants, gap
//!   enumeration) so the closed forms can be cross-checked.
//! - [`domain`] holds the validated types the other modules share.
//!
//! All arithmetic is checked 128-bit; overflow is an error, never a wrap.
//!
//! ```
//! use frobkit::closed_forms::pythagorean_frobenius;
//! use frobkit::constructive::construct_representation;
//! use frobkit::TripleParams;
//!
//! let params = TripleParams::new(3, 2)?; // the triple (5, 12, 13)
//! assert_eq!(pythagorean_frobenius(params)?.value(), 21);
//!
//! let rep = construct_representation(22, params)?;
//! assert_eq!(rep.coeffs(), &[2, 1, 0]); // 22 = 2 * 5 + 1 * 12
//! # Ok::<(), frobkit::Error>(())
//! ```

pub mod closed_forms;
pub mod constructive;
pub mod domain;
pub mod oracle;

mod checked;
mod error;

pub use domain::{GeneratorSet, LemmaWitness, PythTriple, Representation, TripleParams};
pub use error::{Error, Result};
