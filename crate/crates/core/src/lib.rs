//! Exact-arithmetic toolkit for Gibonacci sequences and weighted domino tilings.
//!
//! The crate has five pieces:
//!
//! * [`sequence`] — Fibonacci, combinatorial-Fibonacci, Lucas and Gibonacci
//!   numbers over arbitrary-precision integers, defined for all integer
//!   indices via the backward recurrence.
//! * [`tiling`] — boards (cell regions with weighted marked domino
//!   placements), a brute-force enumerator, a broken-profile counting kernel,
//!   and constructors for the board families whose weighted tiling counts
//!   realize sequence values.
//! * [`bijection`] — structural operations on explicit tilings: breakability,
//!   faults, tail swapping, Cassini-style matching, supertile decomposition
//!   and census reports.
//! * [`identities`] — a registry of machine-checkable identities with exact
//!   left/right evaluators, domains, errata entries, and a verification
//!   runner.
//! * [`number_theory`] — periods of Gibonacci sequences modulo m, lacunary
//!   recurrences, divisibility reports and the representation solver.
//!
//! All values are exact `BigInt`s; there are no tolerances anywhere.

pub mod bijection;
pub mod identities;
pub mod number_theory;
pub mod rng;
pub mod sequence;
pub mod tiling;

pub use sequence::{fib, f_comb, gib, lucas, GibonacciParams, Int};
