//! Exact verification of the denominator identities, moonshine relations and
//! infinite-product expansions attached to the Fake Monster and Monster Lie
//! algebras.
//!
//! The crate is organised bottom-up:
//!
//! - [`exactseries`]: truncated Laurent series with exact rational
//!   coefficients, in one (`q`) and two (`p`, `q`) variables.
//! - [`modforms`]: `Delta`, `j - 744`, coloured partitions and the product
//!   exponents of `j`.
//! - [`lorentz`]: the lattice `II_{25,1}`, its norm-zero Weyl vector and
//!   the Leech lattice seen as cosets of norm-2 vectors.
//! - [`kacmoody`]: Cartan matrices, Weyl groups, Weyl-Kac characters and
//!   denominator identities, plus small generalized instances with
//!   imaginary simple roots.
//! - [`identities`]: the Monster and Fake Monster denominator identities on
//!   the `(0, sigma, tau)` slice and the product formula for `j`.
//! - [`moonshine`]: the twisted denominator relation for Thompson series and
//!   a solver that recovers coefficients from the relation.
//! - [`autoforms`]: floating-point evaluation of the denominator function
//!   and its functional equation.
//! - [`cli`]: the `gkmcheck` command line.

pub mod autoforms;
pub mod cli;
pub mod error;
pub mod exactseries;
pub mod identities;
pub mod kacmoody;
pub mod lorentz;
pub mod modforms;
pub mod moonshine;
pub mod report;

pub use error::{Error, Result};
pub use exactseries::{PQSeries, QSeries};
pub use report::{Discrepancy, IdentityReport, Location};
