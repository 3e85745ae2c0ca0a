//! Quasi-sets, clouds and q-topologies, together with a one-dimensional
//! two-well simulator and a finite-dimensional Born-rule model.
//!
//! The crate has two halves that are meant to be read side by side:
//!
//! * [`qset`], [`cloud`], [`lattice`] and [`topology`] model collections of
//!   indiscernible elements. Elements of a quantum species have a count but
//!   no identity, so a topology built from their clouds cannot separate two
//!   of them.
//! * [`wells`] and [`nqm`] do the numerics: bound states of infinite and
//!   finite square wells, the antisymmetrized two-particle state and its
//!   interference term, and Born probabilities over Borel sets.
//!
//! The `qsep` binary wraps everything behind a handful of subcommands
//! (see [`cli`]).

pub mod cli;
pub mod cloud;
pub mod error;
pub mod lattice;
pub mod nqm;
pub mod qset;
pub mod topology;
pub mod universe;
pub mod wells;

pub use error::{Error, Result};
