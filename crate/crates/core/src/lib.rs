//! Rothe diagrams and 132-avoiding permutations.
//!
//! The crate is `no_std` and only needs `alloc`. It covers:
//!
//! * [`perm`]: permutations and their classical statistics;
//! * [`young`]: partitions, corners and the staircase family `Y_n`;
//! * [`diagram`]: Rothe diagrams, ranks, essential sets and dominance;
//! * [`dyck`]: Dyck paths, height statistics and the maps `Ψ_BJS`, `Ψ_K`;
//! * [`bijection`]: the corner bijection `Φ: S_n(321) → S_n(132)`;
//! * [`pattern`]: a brute-force pattern engine and the diagram criteria
//!   for avoiding further patterns;
//! * [`enumeration`]: closed forms, distributions and an identity harness.
//!
//! ```
//! use permdiag_core::{bijection, dyck, Permutation};
//!
//! let p: Permutation = "1 4 7 2 3 8 5 6 10 9".parse().unwrap();
//! let s = bijection::phi(&p).unwrap();
//! assert_eq!(s.to_string(), "8 9 5 4 6 7 2 3 10 1");
//! assert_eq!(dyck::psi_k(&s).unwrap(), dyck::psi_bjs(&p).unwrap());
//! ```

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod bijection;
pub mod diagram;
pub mod dyck;
pub mod enumeration;
pub mod error;
pub mod pattern;
pub mod perm;
pub mod young;

pub use diagram::{Diagram, Dominance, RankedDiagram};
pub use dyck::{DyckPath, Heights, Step};
pub use error::{Error, Result};
pub use perm::{PermStats, Permutation, Permutations};
pub use young::{Cell, CornerList, Partition, StaircasePartitions};
