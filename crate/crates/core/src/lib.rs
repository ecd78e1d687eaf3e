//! Exact arithmetic in the Q-function algebra Γ.
//!
//! The crate computes the Q-Hall-Littlewood functions `G_λ[X;q]` expanded in
//! the Schur Q-basis, together with the change-of-basis coefficients
//! `L_{λμ}(q)` (the Q-Kostka polynomials) by four independent routes, and the
//! marked shifted tableaux they count at `q = 1`.
//!
//! Module map:
//! - [`foundations`]: partitions, strict partitions, horizontal strips and
//!   dense integer polynomials in the formal parameter `q`.
//! - [`qspace`]: elements of Γ in the Q-basis, the Pieri rule, its adjoint,
//!   the scalar product and straightening of integer-indexed Q-words.
//! - [`operators`]: the vertex operators `Q_m` and `G_m` for every integer
//!   `m`, and their compositions `Q_λ` and `G_λ[X;q]`.
//! - [`qkostka`]: `L_{λμ}(q)` tables by the vertex, Morris-recurrence,
//!   generating-series and Kostant-straightening algorithms, plus an
//!   executable report of every stated property and conjecture.
//! - [`shifted_tableaux`]: enumeration of marked shifted tableaux,
//!   mark-erasure classes and the rank-statistic search.
//! - [`classical`]: Schur expansions, the Jing operator, Kostka-Foulkes
//!   polynomials, column-strict tableaux and charge.
//! - [`parabolic`]: functions indexed by sequences of strict partitions and
//!   their generalized coefficients.

pub mod classical;
pub mod error;
pub mod foundations;
pub mod operators;
pub mod parabolic;
pub mod qkostka;
pub mod qspace;
mod raising;
pub mod shifted_tableaux;

pub use error::Error;
pub use foundations::{
    dominance_leq, partitions, strict_partitions, LaurentPolynomial, Partition, QPolynomial,
    StrictPartition,
};
pub use qspace::QExpansion;
