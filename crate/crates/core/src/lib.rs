//! Exact Schubert calculus on Grassmannians and the counts of maps from a
//! general pointed curve to projective space with prescribed incidences
//! (Tevelev-type degrees).
//!
//! Every count is an arbitrary-precision integer and is reachable by at
//! least two independent routes: a closed form or a combinatorial
//! enumeration on one side, and a Schubert-calculus integral on the other.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

mod arith;
pub mod cps;
pub mod error;
pub mod schubert;
pub mod tableaux;
pub mod tevelev;

pub use error::Error;
pub use num_bigint::BigInt;
