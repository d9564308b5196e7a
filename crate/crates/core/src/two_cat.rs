//! The region-labeled 2-category: 1-morphisms between the objects 0 and 1,
//! the categorical Fock states, and their inner product.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::diagram::hom_dim;
use crate::label::{target_of, Label, LabelError};
use crate::sign_words::{Sign, SignWord};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TwoCatError {
    #[error(transparent)]
    Label(#[from] LabelError),
    #[error("occupation number {0} is not 0 or 1")]
    Occupation(i64),
    #[error("1-morphisms start at different objects ({0} vs {1})")]
    SourceMismatch(Label, Label),
}

/// A word read from a source object; `target` is `None` when the word is the
/// zero 1-morphism.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OneMorphism {
    pub word: SignWord,
    pub source: Label,
    pub target: Option<Label>,
}

impl OneMorphism {
    pub fn is_zero(&self) -> bool {
        self.target.is_none()
    }
}

impl fmt::Display for OneMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let word = if self.word.is_empty() { "1".to_string() } else { self.word.to_string() };
        match self.target {
            Some(t) => write!(f, "Q[{word}] : {} -> {t}", self.source),
            None => write!(f, "Q[{word}] from {} = 0", self.source),
        }
    }
}

pub fn validate_1morphism(w: &SignWord, source: i64) -> Result<OneMorphism, TwoCatError> {
    let source = Label::new(source)?;
    Ok(OneMorphism { word: w.clone(), source, target: target_of(w, source) })
}

/// psi_0 = Q(-+) : 0 -> 0 and psi_1 = Q(+) : 0 -> 1.
pub fn state(n: i64) -> Result<OneMorphism, TwoCatError> {
    let word = match n {
        0 => "-+",
        1 => "+",
        other => return Err(TwoCatError::Occupation(other)),
    };
    validate_1morphism(&word.parse().expect("state words parse"), 0)
}

/// Dimension of the space of 2-morphisms from `b` to `a`.
pub fn categorical_inner(a: &OneMorphism, b: &OneMorphism) -> Result<usize, TwoCatError> {
    if a.source != b.source {
        return Err(TwoCatError::SourceMismatch(a.source, b.source));
    }
    match (a.target, b.target) {
        (Some(x), Some(y)) if x == y => Ok(hom_dim(&b.word, &a.word, a.source)),
        _ => Ok(0),
    }
}

/// Acts by a creation (`+`) or annihilation (`-`) 1-morphism on the left.
pub fn act(sign: Sign, s: &OneMorphism) -> OneMorphism {
    let word = s.word.prepend(sign);
    OneMorphism { target: target_of(&word, s.source), word, source: s.source }
}
