//! Exact enumeration of proper q-colorings of generalized circular chord
//! graphs `C_n^(k)`: the cycle on `Z_n`, plus chords `(i, i+k)`, plus
//! diameters `(i, i+n/2)` when `n` is even.
//!
//! Several independent counting engines live here so that they can check
//! each other:
//!
//! - [`direct`]: exhaustive backtracking and a frontier dynamic program
//!   (also used for lexicographic unranking of colorings),
//! - [`window`]: the length-`k` window automaton, `P = tr(A^n)` for graphs
//!   without diameters,
//! - [`paired`]: the paired-window automaton for `k = 3`, `q = 3`, even `n`,
//! - [`closed_form`]: Lucas numbers, the `s_n` power sums and the odd-`n`
//!   closed form.
//!
//! [`spectral`] extracts characteristic polynomials and recurrences from the
//! automata, and [`bounds`] resolves chromatic numbers.
//!
//! The crate is `no_std` and needs only `alloc`.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod bounds;
pub mod closed_form;
pub mod direct;
pub mod engine;
mod error;
pub mod graph;
pub mod matrix;
pub mod paired;
pub mod poly;
pub mod record;
pub mod spectral;
pub mod window;

pub use error::{Error, Result};
pub use graph::{ChordGraph, Coloring, Graph, SimpleGraph};
pub use matrix::ExactMatrix;
pub use poly::IntPolynomial;
pub use record::{CountRecord, Limits, Method};

pub use num_bigint::{BigInt, BigUint};
