//! Exact counts of isomorphism classes of `k`-ary magmas on an `n`-element
//! set.
//!
//! Two `k`-ary operations on `{0, ..., n-1}` are isomorphic when one is the
//! other with its elements relabelled. The number of classes is an orbit
//! count of `S_n` acting on all `n^(n^k)` operation tables, and Burnside's
//! lemma turns it into a weighted sum over cycle types:
//!
//! * [`census`] evaluates that sum, either over cycle types (partitions of
//!   `n`) or over every permutation;
//! * [`cycle_index`] builds `Z_n` and the induced `Z_n^[k]` and gets the same
//!   number by substitution;
//! * [`oracle`] counts orbits by brute force and fixed tables by explicit
//!   cell cycles, independently of any closed form.
//!
//! ```
//! use magma_census::{census, Variant};
//!
//! let r = census::count_k_magmas(3, 2, Variant::Correct).unwrap();
//! assert_eq!(r.count.to_string(), "3330");
//! ```

pub mod arith;
pub mod census;
pub mod chains;
pub mod cycle_index;
pub mod error;
pub mod oracle;
pub mod partition;
pub mod perm;

pub use arith::{BigCount, ExactRational};
pub use chains::Variant;
pub use cycle_index::CycleIndexPoly;
pub use error::{Error, Result};
pub use oracle::OpTable;
pub use partition::{enumerate_cycle_types, CycleType};
pub use perm::Perm;
