//! Exact Conway-polynomial tools for amphicheirality obstructions.
//!
//! * [`ring`]: polynomials, Laurent polynomials and truncated series over Z, Z/2, Z/4 and Q.
//! * [`formal_log`]: the integral exponential `exp_z` and its inverse `log_z`.
//! * [`invariants`]: Conway polynomials, primitive invariants, mod-2 criteria,
//!   determinant and `v_3`.
//! * [`obstructions`]: the Z/4 squareness test and the `φ(z)φ(-z)` factorization test.
//! * [`alexander`]: conversion to and from the symmetric Alexander polynomial.
//! * [`oracles`]: brute-force references used by the tests.

pub mod alexander;
pub mod error;
pub mod formal_log;
pub mod invariants;
pub mod obstructions;
pub mod oracles;
pub mod ring;

pub use alexander::{alexander_to_conway, conway_to_alexander, AlexanderPolynomial};
pub use error::{Error, Result};
pub use formal_log::{exp_z, log_z, ExponentSequence};
pub use invariants::{pc, ConwayPolynomial};
pub use obstructions::{conjecture_test, hk_factorization, square_test_z4, HkVerdict, SquareVerdict};
pub use ring::{LaurentPolynomial, Polynomial, TruncatedSeries, Z2, Z4};
