//! Exact, desk-scale computation of generating-set invariants of finite
//! permutation groups, together with the number-theoretic checks that bound
//! them: prime counting, Sylow ranks of symmetric groups, primitive prime
//! divisors and wreath-product ranks.
//!
//! The crate is `no_std` and only needs `alloc`. File formats, the bundled
//! group catalog and the command-line driver live in `indgen-cli`.

#![no_std]
#![deny(unsafe_code)]

extern crate alloc;

pub mod arith;
mod budget;
mod error;
pub mod group;
pub mod invariants;
pub mod lattice;
pub mod perm;
pub mod primes;
pub mod sym;
pub mod wreath;
pub mod zsigmondy;

pub use budget::{Budget, Interrupt, NeverInterrupt};
pub use error::{Error, Result};
pub use group::PermGroup;
pub use perm::Permutation;
