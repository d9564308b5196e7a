//! Symbolic engine for the diagrammatic categorification of the one-mode
//! fermion algebra: sign words, string diagrams, the region-labeled
//! 2-category, and its matrix-bimodule representation.

pub mod bimodule;
pub mod cli;
pub mod diagram;
pub mod label;
pub mod lang;
pub mod report;
pub mod sign_words;
pub mod two_cat;

pub type Rational = num_rational::BigRational;
