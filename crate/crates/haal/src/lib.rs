//! Exact-arithmetic toolkit for hypercomplex almost abelian Lie algebras.
//!
//! An almost abelian Lie algebra is `R e_0` acting on an abelian ideal
//! through a single matrix. When the algebra carries a hypercomplex
//! structure (a triple of complex structures satisfying the quaternion
//! relations), that matrix takes a constrained block form: a scalar part on
//! three distinguished directions, a translation vector, and a block
//! commuting with the standard quaternionic triple. Everything this crate
//! computes lives downstream of that normal form:
//!
//! - [`matrix`]: dense exact linear algebra over the rationals, including
//!   conjugacy decisions via invariant factors;
//! - [`quaternion`]: the correspondence between quaternionic matrices and
//!   real matrices commuting with the standard triple, plus the partition
//!   invariant of nilpotent classes;
//! - [`nilpotent`]: canonical forms, admissibility of Jordan types, class
//!   identification and counting, for both hypercomplex and complex
//!   structures;
//! - [`dim12`]: the full classification of the twelve-dimensional case
//!   into eighteen parameterized families, with algebraic flags and
//!   lattice verdicts;
//! - [`intpoly`]: integer polynomials with exact Sturm counts, resultants,
//!   squarefree decomposition, and the Delta membership tests;
//! - [`solv`]: solvmanifolds built from Delta polynomials, their integer
//!   lattice models, torus splittings and diffeomorphism classification;
//! - [`liegroup`]: the group exponential, isomorphism construction, and
//!   verification of integer-conjugacy lattice witnesses;
//! - [`numeric`]: the double-precision layer (matrix exponential,
//!   thresholded rank, complex roots);
//! - [`cli`] and [`parse`]: the command-line front end and input formats.
//!
//! The `examples/` directory walks through each capability; start with
//! `cargo run --example nilpotent_census`.

pub mod cli;
pub mod dim12;
pub mod intpoly;
pub mod liegroup;
pub mod matrix;
pub mod nilpotent;
pub mod numeric;
pub mod parse;
pub mod quaternion;
pub mod rational;
pub mod ratpoly;
pub mod solv;
