//! String diagrams for the categorified fermion algebra.

pub mod expr;
pub mod hom;
pub mod matching;
pub mod morphism;
pub mod normalize;
pub mod random;
pub mod reduce;

pub use expr::{compose, identity_diagram, tensor, DiagramError, DiagramExpr, Generator, GeneratorKind, Node, Row};
pub use hom::{hom_classes, hom_dim, oracle_sweep, SweepMismatch, SweepResult};
pub use matching::{Endpoint, Matching, MatchingError, Side};
pub use morphism::{Bubbles, Morphism, MorphismError, Term};
pub use normalize::{equal_morphisms, normalize};
pub use reduce::{direct_sum_witness, reduce_word, Atom, Reduction};
