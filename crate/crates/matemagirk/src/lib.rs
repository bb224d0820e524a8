//! Exact arithmetic and problem-solving toolkit for the oldest surviving
//! Armenian arithmetic textbook tradition.
//!
//! The crate has four layers:
//!
//! * **Arithmetic** — [`exact`] provides unbounded exact rationals;
//!   [`egyptian`] decomposes them into sums of distinct unit fractions,
//!   the notation the original problems use for fractional answers.
//! * **Notation** — [`numerals`] encodes and decodes numbers in two
//!   Armenian alphabetic systems: the traditional 36-letter additive
//!   notation and a compact 12-letter place-value style notation, with an
//!   optional "hat" extension that reaches 99,999,999.
//! * **Reconstruction** — [`tables`] regenerates the addition,
//!   multiplication, subtraction, division, and parity tables;
//!   [`corpus`] parses the bundled 27-problem collection; [`solver`]
//!   solves every problem exactly, replays each narrative forward as an
//!   independent check, and verifies computed answers against the
//!   recorded ones. [`solver::puzzles`] covers the five recreational
//!   puzzles that close the collection.
//! * **Interface** — [`cli`] implements the `matemagirk` command-line
//!   tool on top of all of the above. The `examples/` directory shows
//!   each capability as a small runnable program.
//!
//! ```
//! use matemagirk::corpus::Corpus;
//! use matemagirk::solver::{self, VerificationOutcome};
//!
//! let corpus = Corpus::bundled().unwrap();
//! let report = solver::verify_corpus(&corpus);
//! let matches = report
//!     .iter()
//!     .filter(|v| matches!(v.outcome, VerificationOutcome::Match))
//!     .count();
//! assert_eq!(matches, 21);
//! ```

pub mod cli;
pub mod corpus;
pub mod egyptian;
pub mod exact;
pub mod numerals;
pub mod solver;
pub mod tables;
pub mod units;

pub use egyptian::EgyptianFraction;
pub use exact::{BigInt, Rational, Tie};
pub use units::{Quantity, Unit};
