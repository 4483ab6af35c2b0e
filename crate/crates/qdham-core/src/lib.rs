//! Distance signless Laplacian spectra of small graphs, the spectral
//! sufficient conditions for Hamiltonian properties built on them, and the
//! exact Hamiltonicity oracles that ground-truth every verdict.
//!
//! The pipeline: build a [`graph::Graph`] (constructors, the expression
//! language in [`expr`], or [`graph6`] text); take exact hop distances and
//! transmissions in [`metric`]; get the spectral radius of
//! Q = diag(transmissions) + D in [`spectral`]; apply the sufficient
//! conditions in [`theorems`]; and cross-examine any conclusion against the
//! exhaustive oracles in [`hamilton`]. [`corpus`] enumerates all small graphs
//! for audits, and [`tables`] carries the published reference data.

pub mod corpus;
pub mod error;
pub mod expr;
pub mod family;
pub mod graph;
pub mod graph6;
pub mod hamilton;
pub mod iso;
pub mod metric;
pub mod spectral;
pub mod tables;
pub mod theorems;

pub use error::{Error, Result};
