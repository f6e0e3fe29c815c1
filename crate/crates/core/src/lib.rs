//! Four-parameter partition weights and the product identities they satisfy.
//!
//! Each cell of a Young diagram is labelled `a`, `b`, `c` or `d` according
//! to the parities of its row and column, and a partition is weighted by the
//! product of its labels. The crate provides
//!
//! - [`partition`]: partitions, conjugation, the weight statistics;
//! - [`enumerate`]: reverse-lexicographic partition streams;
//! - [`restriction`]: the classes `Par(i, k; R, ρ)`;
//! - [`series`]: truncated sparse power series with big-integer coefficients;
//! - [`blocks`]: block decompositions and the bijections `f` and `g`;
//! - [`formulas`]: brute-force generating functions, product factor lists and
//!   verification reports;
//! - [`render`]: the text forms used by the command-line tool.

pub mod blocks;
pub mod enumerate;
pub mod error;
pub mod formulas;
pub mod partition;
pub mod render;
pub mod restriction;
pub mod series;

pub use blocks::{
    bijection_f, bijection_f_inverse, bijection_g, bijection_g_inverse, block_weight, decompose,
    recompose, type3_weight, Block, BlockDecomposition, BlockKind, StripRecord,
};
pub use enumerate::{enumerate_distinct, enumerate_partitions, enumerate_restricted};
pub use error::{BlockError, ParseError, SeriesError};
pub use formulas::{verify, FormulaId, Report};
pub use partition::{cell_label, CellLabel, ExponentVector, Partition, SignedTriple};
pub use restriction::RestrictionSpec;
pub use series::{expand_product, FactorKind, FactorSpec, Series, Series3, Series4};
