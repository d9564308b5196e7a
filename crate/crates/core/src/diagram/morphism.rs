//! Normal-form 2-morphisms: rational combinations of canonical matchings.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde_json::{json, Value};
use thiserror::Error;

use super::matching::{Matching, MatchingError};
use crate::label::Label;
use crate::sign_words::SignWord;
use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MorphismError {
    #[error("boundary mismatch: '{0}' vs '{1}'")]
    Boundary(SignWord, SignWord),
    #[error("region labels do not line up: {0:?} vs {1:?}")]
    Source(Option<Label>, Option<Label>),
    #[error(transparent)]
    Matching(#[from] MatchingError),
}

/// Formal closed circles of an endomorphism of the unit object.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Bubbles {
    pub cw: u32,
    pub ccw: u32,
}

impl Bubbles {
    pub fn is_empty(&self) -> bool {
        self.cw == 0 && self.ccw == 0
    }

    fn add(self, other: Bubbles) -> Bubbles {
        Bubbles { cw: self.cw + other.cw, ccw: self.ccw + other.ccw }
    }

    /// Value in the 2-category with the outer region labelled `label`: a
    /// counterclockwise circle has inner label one higher than its outside.
    pub fn value_at(&self, label: Label) -> bool {
        match label {
            Label::Zero => self.cw == 0,
            Label::One => self.ccw == 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Term {
    pub matching: Matching,
    pub bubbles: Bubbles,
}

/// Labels seen so far while stacking, relative to the rightmost region.
#[derive(Debug, Clone)]
pub(crate) struct Trace {
    pub matching: Matching,
    pub bubbles: Bubbles,
    lo: i32,
    hi: i32,
}

/// How loops and labels are interpreted for one computation.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Frame {
    pub source: Option<Label>,
    /// Whether the final result has empty boundary; only then can circles stay formal.
    pub closed: bool,
}

impl Frame {
    pub fn base(&self) -> i32 {
        self.source.map_or(0, Label::value)
    }

    fn keeps_formal(&self) -> bool {
        self.source.is_none() && self.closed
    }
}

impl Trace {
    pub fn start(word: &SignWord, base: i32) -> Trace {
        let mut t = Trace { matching: Matching::identity(word), bubbles: Bubbles::default(), lo: base, hi: base };
        t.see_word(word, base);
        t
    }

    pub fn from_term(term: &Term, base: i32) -> Trace {
        let mut t = Trace { matching: term.matching.clone(), bubbles: Bubbles::default(), lo: base, hi: base };
        t.see_word(term.matching.bottom(), base);
        t.see_word(term.matching.top(), base);
        t.add_bubbles(term.bubbles, base);
        t
    }

    fn see(&mut self, label: i32) {
        self.lo = self.lo.min(label);
        self.hi = self.hi.max(label);
    }

    pub fn see_word(&mut self, word: &SignWord, base: i32) {
        for l in word.gap_labels(base) {
            self.see(l);
        }
    }

    /// Circles sitting in a region labelled `outside`.
    fn add_bubbles(&mut self, bubbles: Bubbles, outside: i32) {
        if bubbles.ccw > 0 {
            self.see(outside + 1);
        }
        if bubbles.cw > 0 {
            self.see(outside - 1);
        }
        self.bubbles = self.bubbles.add(bubbles);
    }

    pub fn admissible(&self, frame: Frame) -> bool {
        match frame.source {
            Some(_) => Label::admissible(self.lo) && Label::admissible(self.hi),
            None => self.hi - self.lo <= 1,
        }
    }

    /// Stacks `upper` on top; loops closed here are either evaluated or kept formal.
    pub fn stack(&mut self, upper: &Matching, frame: Frame) -> Result<(), MatchingError> {
        let base = frame.base();
        let middle = upper.bottom().clone();
        let labels = middle.gap_labels(base);
        let (composite, loops) = self.matching.compose(upper)?;
        self.see_word(upper.top(), base);
        for points in loops {
            let last = *points.last().expect("loops pass through the middle word");
            let inside = labels[last];
            let outside = labels[last + 1];
            self.see(inside);
            if frame.keeps_formal() && outside == base {
                let b = if inside > outside { Bubbles { cw: 0, ccw: 1 } } else { Bubbles { cw: 1, ccw: 0 } };
                self.bubbles = self.bubbles.add(b);
            }
        }
        self.matching = composite;
        Ok(())
    }

    /// Places `left` (a term read from label `left_base`) to the left of this trace.
    pub fn tensor_left(&mut self, left: &Term, left_base: i32) {
        self.see_word(left.matching.bottom(), left_base);
        self.see_word(left.matching.top(), left_base);
        let b = self.bubbles;
        self.bubbles = Bubbles::default();
        self.add_bubbles(left.bubbles, left_base);
        self.bubbles = self.bubbles.add(b);
        self.matching = left.matching.tensor(&self.matching);
    }

    /// Applies the window test and replaces the matching by its canonical representative.
    pub fn finish(self, frame: Frame) -> Option<Term> {
        if !self.admissible(frame) {
            return None;
        }
        let bubbles = if frame.keeps_formal() { self.bubbles } else { Bubbles::default() };
        let matching = if self.matching.is_closed() {
            Matching::empty()
        } else {
            Matching::canonical(self.matching.bottom(), self.matching.top())
                .expect("admissible loop-free matchings have a canonical representative")
        };
        Some(Term { matching, bubbles })
    }
}

/// A formal rational combination of canonical matchings sharing boundary words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Morphism {
    bottom: SignWord,
    top: SignWord,
    source: Option<Label>,
    terms: BTreeMap<Term, Rational>,
}

impl Morphism {
    pub fn zero(bottom: SignWord, top: SignWord, source: Option<Label>) -> Self {
        Morphism { bottom, top, source, terms: BTreeMap::new() }
    }

    pub(crate) fn from_term(bottom: SignWord, top: SignWord, source: Option<Label>, term: Option<Term>) -> Self {
        let mut m = Self::zero(bottom, top, source);
        if let Some(t) = term {
            m.terms.insert(t, Rational::one());
        }
        m
    }

    /// Identity 2-morphism on `w`; zero when `w` is a zero object.
    pub fn identity(w: &SignWord, source: Option<Label>) -> Self {
        let frame = Frame { source, closed: w.is_empty() };
        let term = Trace::start(w, frame.base()).finish(frame);
        Self::from_term(w.clone(), w.clone(), source, term)
    }

    pub fn bottom(&self) -> &SignWord {
        &self.bottom
    }

    pub fn top(&self) -> &SignWord {
        &self.top
    }

    pub fn source(&self) -> Option<Label> {
        self.source
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Term, &Rational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_closed(&self) -> bool {
        self.bottom.is_empty() && self.top.is_empty()
    }

    /// Coefficient of `matching` with no formal circles.
    pub fn coefficient(&self, matching: &Matching) -> Rational {
        self.terms
            .get(&Term { matching: matching.clone(), bubbles: Bubbles::default() })
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    fn same_space(&self, other: &Morphism) -> Result<(), MorphismError> {
        if self.bottom != other.bottom {
            return Err(MorphismError::Boundary(self.bottom.clone(), other.bottom.clone()));
        }
        if self.top != other.top {
            return Err(MorphismError::Boundary(self.top.clone(), other.top.clone()));
        }
        if self.source != other.source {
            return Err(MorphismError::Source(self.source, other.source));
        }
        Ok(())
    }

    pub fn add(&self, other: &Morphism) -> Result<Morphism, MorphismError> {
        self.same_space(other)?;
        let mut out = self.clone();
        for (t, c) in &other.terms {
            *out.terms.entry(t.clone()).or_insert_with(Rational::zero) += c;
        }
        out.terms.retain(|_, c| !c.is_zero());
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Morphism {
        let mut out = self.clone();
        if c.is_zero() {
            out.terms.clear();
        }
        for v in out.terms.values_mut() {
            *v *= c;
        }
        out
    }

    fn insert(&mut self, term: Option<Term>, coeff: Rational) {
        if let Some(t) = term {
            *self.terms.entry(t).or_insert_with(Rational::zero) += coeff;
        }
        self.terms.retain(|_, c| !c.is_zero());
    }

    /// `self` then `upper`.
    pub fn compose(&self, upper: &Morphism) -> Result<Morphism, MorphismError> {
        if self.top != upper.bottom {
            return Err(MorphismError::Boundary(self.top.clone(), upper.bottom.clone()));
        }
        if self.source != upper.source {
            return Err(MorphismError::Source(self.source, upper.source));
        }
        let frame = Frame { source: self.source, closed: self.bottom.is_empty() && upper.top.is_empty() };
        let mut out = Morphism::zero(self.bottom.clone(), upper.top.clone(), self.source);
        for (lt, lc) in &self.terms {
            for (ut, uc) in &upper.terms {
                let mut trace = Trace::from_term(lt, frame.base());
                trace.stack(&ut.matching, frame)?;
                trace.add_bubbles(ut.bubbles, frame.base());
                out.insert(trace.finish(frame), lc * uc);
            }
        }
        Ok(out)
    }

    /// `self` to the left of `right`. With labels, `self` must be read from the
    /// label `right` ends on.
    pub fn tensor(&self, right: &Morphism) -> Result<Morphism, MorphismError> {
        let shift = right.bottom.charge();
        if let Some(s) = right.source {
            let expected = Label::try_from(s.value() + shift).ok();
            if self.source != expected {
                return Err(MorphismError::Source(self.source, expected));
            }
        } else if self.source.is_some() {
            return Err(MorphismError::Source(self.source, None));
        }
        let bottom = self.bottom.concat(&right.bottom);
        let top = self.top.concat(&right.top);
        let frame = Frame { source: right.source, closed: bottom.is_empty() && top.is_empty() };
        let mut out = Morphism::zero(bottom, top, right.source);
        for (lt, lc) in &self.terms {
            for (rt, rc) in &right.terms {
                let mut trace = Trace::from_term(rt, frame.base());
                trace.tensor_left(lt, frame.base() + shift);
                out.insert(trace.finish(frame), lc * rc);
            }
        }
        Ok(out)
    }

    /// For a closed unlabeled morphism, its values in the 2-category at outer
    /// label 0 and 1. These separate the endomorphisms of the unit object.
    pub fn closed_values(&self) -> Option<[Rational; 2]> {
        if !self.is_closed() || self.source.is_some() {
            return None;
        }
        Some(Label::ALL.map(|label| {
            self.terms
                .iter()
                .filter(|(t, _)| t.bubbles.value_at(label))
                .fold(Rational::zero(), |acc, (_, c)| acc + c)
        }))
    }

    /// Equality of 2-morphisms. Term maps are canonical except for formal
    /// circles in the unlabeled unit endomorphisms, which are compared through
    /// `cw + ccw = id` together with the label evaluation of each circle.
    pub fn equivalent(&self, other: &Morphism) -> bool {
        if self.same_space(other).is_err() {
            return false;
        }
        match (self.closed_values(), other.closed_values()) {
            (Some(a), Some(b)) => a == b,
            _ => self.terms == other.terms,
        }
    }

    /// Stable JSON: arc endpoints are 1-indexed.
    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(t, c)| {
                let arcs: Vec<Value> = t
                    .matching
                    .arcs()
                    .iter()
                    .map(|(a, b)| json!([[a.side.name(), a.index + 1], [b.side.name(), b.index + 1]]))
                    .collect();
                json!({
                    "coeff": c.to_string(),
                    "arcs": arcs,
                    "bubbles": {"cw": t.bubbles.cw, "ccw": t.bubbles.ccw},
                })
            })
            .collect();
        json!({
            "bottom": self.bottom.to_string(),
            "top": self.top.to_string(),
            "source": self.source.map(Label::value),
            "terms": terms,
        })
    }
}
