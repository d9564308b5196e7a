//! The matrix-bimodule 2-representation: region 0 ↦ scalars, region 1 ↦
//! `n×n` matrices, `+` ↦ column vectors, `-` ↦ row vectors.

pub mod eval;
pub mod linalg;
pub mod space;
pub mod verify;

pub use eval::{eval_diagram, eval_morphism, uturn_map, EvalError, LinearMap, UTurn};
pub use linalg::{row_reduce, RationalMatrix, RowReduction};
pub use space::{make_context, RepContext, RepError, TensorSpace};
pub use verify::{functoriality_check, soundness_check, verify_adjunctions, verify_all, verify_dimensions, verify_zigzags};
