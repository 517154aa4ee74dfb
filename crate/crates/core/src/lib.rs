//! Exact signatures of coherent systems.
//!
//! A coherent system on components `1..=n` is described by its minimal cut
//! sets. Its signature records, for each `i`, the fraction of the `n!`
//! failure orders under which the system goes down at the `i`-th failure.
//!
//! The crate computes signatures three independent ways, and decides whether
//! an arbitrary rational probability vector is the signature of some system,
//! producing a witness system when it is. The decision reduces to the
//! Kruskal-Katona characterization of f-vectors of simplicial complexes: the
//! non-cut sets of a system are closed under taking subsets.
//!
//! ```
//! use num_rational::BigRational;
//! use syssig_core::realizability::check_candidate;
//!
//! let candidate: Vec<BigRational> = [(0, 1), (3, 10), (2, 5), (3, 10), (0, 1)]
//!     .iter()
//!     .map(|&(p, q)| BigRational::new(p.into(), q.into()))
//!     .collect();
//! let verdict = check_candidate(&candidate).unwrap();
//! assert_eq!(
//!     verdict.witness().unwrap().to_string(),
//!     "{{1,2},{1,3},{1,4},{2,3,4}}"
//! );
//! ```

pub mod combinatorics;
pub mod error;
pub mod interchange;
pub mod realizability;
pub mod signature;
pub mod system;

pub use error::{Error, Result};
