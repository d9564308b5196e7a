//! Region labels of the two-object 2-category.

use std::fmt;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::sign_words::SignWord;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("region label {0} is outside {{0, 1}}")]
pub struct LabelError(pub i64);

/// Admissible region label: an object `0` or `1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Label {
    Zero,
    One,
}

impl Label {
    pub const ALL: [Label; 2] = [Label::Zero, Label::One];

    pub fn new(value: i64) -> Result<Label, LabelError> {
        match value {
            0 => Ok(Label::Zero),
            1 => Ok(Label::One),
            other => Err(LabelError(other)),
        }
    }

    pub fn value(self) -> i32 {
        match self {
            Label::Zero => 0,
            Label::One => 1,
        }
    }

    pub fn admissible(value: i32) -> bool {
        (0..=1).contains(&value)
    }
}

impl TryFrom<i32> for Label {
    type Error = LabelError;

    fn try_from(value: i32) -> Result<Self, Self::Error> {
        Label::new(value.into())
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value())
    }
}

impl Serialize for Label {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_i32(self.value())
    }
}

/// Target label of `w` read from `source`, or `None` if some region leaves `{0, 1}`.
pub fn target_of(w: &SignWord, source: Label) -> Option<Label> {
    let labels = w.gap_labels(source.value());
    if labels.iter().all(|&l| Label::admissible(l)) {
        Some(Label::try_from(labels[0]).expect("checked admissible"))
    } else {
        None
    }
}

pub fn is_valid_from(w: &SignWord, source: Label) -> bool {
    target_of(w, source).is_some()
}

/// The unique valid word of the given length read from `source`.
pub fn valid_word(len: usize, source: Label) -> SignWord {
    use crate::sign_words::Sign;
    let mut signs = Vec::with_capacity(len);
    let mut label = source.value();
    for _ in 0..len {
        let s = if label == 0 { Sign::Plus } else { Sign::Minus };
        label += s.step();
        signs.push(s);
    }
    signs.reverse();
    SignWord::new(signs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn targets() {
        let w = |s: &str| s.parse::<SignWord>().unwrap();
        assert_eq!(target_of(&w("-+"), Label::Zero), Some(Label::Zero));
        assert_eq!(target_of(&w("+"), Label::Zero), Some(Label::One));
        assert_eq!(target_of(&w("+"), Label::One), None);
        assert_eq!(target_of(&w(""), Label::One), Some(Label::One));
        assert_eq!(valid_word(3, Label::Zero), w("+-+"));
        assert_eq!(valid_word(2, Label::One), w("+-"));
        assert!(Label::new(2).is_err());
    }
}
