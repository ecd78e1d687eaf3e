//! Partitions, strips and exact polynomial arithmetic in `q` — the
//! vocabulary every other module speaks.

mod partition;
mod poly;
mod strip;

pub use partition::{dominance_leq, partitions, strict_partitions, Partition, StrictPartition};
pub use poly::{LaurentPolynomial, QPolynomial};
pub use strip::{
    is_plain_strip, is_shifted_strip, plain_strips, plain_strips_above, strip_components,
    strip_components_prose, strips, strips_above, SkewStrip,
};
