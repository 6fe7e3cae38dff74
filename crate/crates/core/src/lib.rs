//! Exact computation of locally free class groups, ideal class sets and
//! cancellation verdicts for maximal orders in quaternion algebras over ℚ
//! and quadratic fields.
//!
//! The crate is organized bottom-up:
//!
//! - [`numtheory`]: factorization, residue symbols and Hilbert symbols;
//! - [`quadfield`]: quadratic fields, ideals, class groups and Steinitz classes;
//! - [`quatalg`]: quaternion algebras, ramification and reduced norms;
//! - [`latorder`]: orders, right ideals and class-set enumeration;
//! - [`lfcg`]: ray class groups, Swan's isomorphism, stable classes and
//!   cancellation verdicts;
//! - [`cli`]: the `locfree` command line front end.

pub mod abelian;
pub mod cli;
pub mod error;
pub mod lattice;
pub mod latorder;
pub mod lfcg;
pub mod numtheory;
pub mod quadfield;
pub mod quatalg;
pub mod report;

pub use error::{Error, Result};
