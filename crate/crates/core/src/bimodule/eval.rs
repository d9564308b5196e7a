//! The 2-functor on diagrams: U-turns as bimodule maps, evaluated row by row.

use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};
use thiserror::Error;

use super::linalg::{axpy, RationalMatrix, SparseVec};
use super::space::{RepContext, RepError, TensorSpace};
use crate::diagram::{DiagramExpr, Generator, Morphism, Row};
use crate::label::{is_valid_from, Label};
use crate::sign_words::Sign;
use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error("morphism has no region labels to evaluate with")]
    Unlabeled,
}

/// The four U-turns: `f0 = cap(-+)`, `g0 = cup(-+)`, `f1 = cap(+-)`, `g1 = cup(+-)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum UTurn {
    F0,
    G0,
    F1,
    G1,
}

impl UTurn {
    pub const ALL: [UTurn; 4] = [UTurn::F0, UTurn::G0, UTurn::F1, UTurn::G1];

    pub fn generator(self) -> Generator {
        use Sign::{Minus as M, Plus as P};
        match self {
            UTurn::F0 => Generator::Cap(M, P),
            UTurn::G0 => Generator::Cup(M, P),
            UTurn::F1 => Generator::Cap(P, M),
            UTurn::G1 => Generator::Cup(P, M),
        }
    }

    /// Label of the region the U-turn bounds from outside.
    pub fn outer_label(self) -> Label {
        match self {
            UTurn::F0 | UTurn::G0 => Label::Zero,
            UTurn::F1 | UTurn::G1 => Label::One,
        }
    }
}

impl fmt::Display for UTurn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            UTurn::F0 => "f0",
            UTurn::G0 => "g0",
            UTurn::F1 => "f1",
            UTurn::G1 => "g1",
        };
        f.write_str(s)
    }
}

/// A linear map between quotient spaces, as a `codomain.dim × domain.dim` matrix.
#[derive(Debug, Clone)]
pub struct LinearMap {
    pub domain: Arc<TensorSpace>,
    pub codomain: Arc<TensorSpace>,
    pub matrix: RationalMatrix,
}

impl LinearMap {
    pub fn zero(domain: Arc<TensorSpace>, codomain: Arc<TensorSpace>) -> Self {
        let matrix = RationalMatrix::zeros(codomain.dim(), domain.dim());
        LinearMap { domain, codomain, matrix }
    }

    pub fn identity(space: Arc<TensorSpace>) -> Self {
        let matrix = RationalMatrix::identity(space.dim());
        LinearMap { domain: space.clone(), codomain: space, matrix }
    }

    /// `self` then `next`.
    pub fn then(&self, next: &LinearMap) -> LinearMap {
        LinearMap { domain: self.domain.clone(), codomain: next.codomain.clone(), matrix: next.matrix.mul(&self.matrix) }
    }

    pub fn is_identity(&self) -> bool {
        self.matrix.is_identity()
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }
}

/// Scale applied by `g0`; `1/n` makes `f0 g0` the identity.
pub(crate) fn g0_scale(n: usize) -> Rational {
    Rational::new(1.into(), (n as i64).into())
}

/// Image of one ambient basis vector of the row's lower word under its
/// U-turn, in ambient coordinates of the upper word.
pub(crate) fn apply_uturn(
    g: Generator,
    pos: usize,
    before: &TensorSpace,
    after: &TensorSpace,
    index: usize,
    g0: &Rational,
) -> SparseVec {
    let n = before.n();
    let mut out = SparseVec::new();
    match g {
        Generator::Cap(Sign::Minus, Sign::Plus) => {
            let mut d = before.digits(index);
            if d[pos] == d[pos + 1] {
                d.drain(pos..pos + 2);
                out.insert(after.index(&d), Rational::one());
            }
        }
        Generator::Cap(_, _) => {
            // g ⊗ h ↦ gh, a matrix unit absorbed by a neighbour
            let mut d = before.digits(index);
            let (a, b) = (d[pos], d[pos + 1]);
            if pos + 2 < d.len() {
                if d[pos + 2] == b {
                    d.drain(pos + 1..pos + 3);
                    out.insert(after.index(&d), Rational::one());
                }
            } else if pos > 0 {
                if d[pos - 1] == a {
                    d.drain(pos - 1..pos + 2);
                    d.push(b);
                    out.insert(after.index(&d), Rational::one());
                }
            } else {
                out.insert(a * n + b, Rational::one());
            }
        }
        Generator::Cup(Sign::Minus, Sign::Plus) => {
            let d = before.digits(index);
            for i in 0..n {
                let mut e = d.clone();
                e.splice(pos..pos, [i, i]);
                out.insert(after.index(&e), g0.clone());
            }
        }
        Generator::Cup(_, _) => {
            if before.is_ring() {
                let (p, q) = (index / n, index % n);
                out.insert(after.index(&[p, q]), Rational::one());
            } else {
                let d = before.digits(index);
                for i in 0..n {
                    let mut e = d.clone();
                    e.splice(pos..pos, [i, i]);
                    out.insert(after.index(&e), Rational::one());
                }
            }
        }
        Generator::Identity(_) | Generator::Crossing(_, _) => unreachable!("rows carry U-turns only"),
    }
    out
}

fn row_map(ctx: &RepContext, row: &Row, source: Label, g0: &Rational) -> Result<LinearMap, RepError> {
    let before = ctx.space_of_word(&row.before, source)?;
    let after = ctx.space_of_word(&row.after, source)?;
    let mut m = RationalMatrix::zeros(after.dim(), before.dim());
    for k in 0..before.dim() {
        let image = apply_uturn(row.generator, row.position, &before, &after, before.section(k), g0);
        for (r, v) in after.project(&image).into_iter().enumerate() {
            m.set(r, k, v);
        }
    }
    Ok(LinearMap { domain: before, codomain: after, matrix: m })
}

/// The matrix of a single U-turn between its own boundary words.
pub fn uturn_map(ctx: &RepContext, kind: UTurn) -> LinearMap {
    uturn_map_scaled(ctx, kind, &g0_scale(ctx.n()))
}

/// As `uturn_map`, with an explicit scale for `g0`.
pub fn uturn_map_scaled(ctx: &RepContext, kind: UTurn, g0: &Rational) -> LinearMap {
    let d = DiagramExpr::generator(kind.generator());
    eval_with(ctx, &d, kind.outer_label(), g0).expect("U-turns are valid from their outer label")
}

/// Evaluates `d` with its rightmost region labeled `source`. Crossings and
/// intermediate zero 1-morphisms give the zero map.
pub fn eval_diagram(ctx: &RepContext, d: &DiagramExpr, source: Label) -> Result<LinearMap, RepError> {
    eval_with(ctx, d, source, &g0_scale(ctx.n()))
}

pub(crate) fn eval_with(ctx: &RepContext, d: &DiagramExpr, source: Label, g0: &Rational) -> Result<LinearMap, RepError> {
    let bottom = ctx.space_of_word(d.bottom(), source)?;
    let top = ctx.space_of_word(d.top(), source)?;
    let rows = d.rows();
    let dead = d.contains_crossing()
        || rows.iter().any(|r| !is_valid_from(&r.before, source) || !is_valid_from(&r.after, source));
    if dead {
        return Ok(LinearMap::zero(bottom, top));
    }
    let mut acc = LinearMap::identity(bottom);
    for row in &rows {
        acc = acc.then(&row_map(ctx, row, source, g0)?);
    }
    Ok(acc)
}

/// Evaluates a labeled normal form term by term.
pub fn eval_morphism(ctx: &RepContext, m: &Morphism) -> Result<LinearMap, EvalError> {
    let source = m.source().ok_or(EvalError::Unlabeled)?;
    let bottom = ctx.space_of_word(m.bottom(), source)?;
    let top = ctx.space_of_word(m.top(), source)?;
    let mut acc = LinearMap::zero(bottom, top);
    for (term, c) in m.terms() {
        let d = DiagramExpr::from_matching(&term.matching);
        let map = eval_diagram(ctx, &d, source)?;
        acc.matrix = acc.matrix.add(&map.matrix.scale(c));
    }
    Ok(acc)
}

/// Pushes an ambient vector of `d.bottom()` through every row without
/// intermediate projection, returning quotient coordinates on `d.top()`.
pub fn replay_ambient(ctx: &RepContext, d: &DiagramExpr, source: Label, v: &SparseVec) -> Result<Vec<Rational>, RepError> {
    let g0 = g0_scale(ctx.n());
    let mut current = v.clone();
    for row in d.rows() {
        let before = ctx.space_of_word(&row.before, source)?;
        let after = ctx.space_of_word(&row.after, source)?;
        let mut next = SparseVec::new();
        for (&a, c) in &current {
            axpy(&mut next, c, &apply_uturn(row.generator, row.position, &before, &after, a, &g0));
        }
        current = next;
    }
    let top = ctx.space_of_word(d.top(), source)?;
    Ok(top.project(&current))
}

pub(crate) fn unit_vector(index: usize) -> SparseVec {
    SparseVec::from([(index, Rational::one())])
}

pub(crate) fn is_unit(v: &[Rational], k: usize) -> bool {
    v.iter().enumerate().all(|(i, x)| if i == k { x.is_one() } else { x.is_zero() })
}

/// The scalar `n` as a `1×1` check value.
pub(crate) fn scalar(n: usize) -> Rational {
    Rational::from_integer((n as i64).into())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bimodule::space::make_context;
    use crate::diagram::{compose, identity_diagram};
    use crate::sign_words::SignWord;

    fn word(s: &str) -> SignWord {
        s.parse().unwrap()
    }

    #[test]
    fn g0_on_unit() {
        let ctx = make_context(3).unwrap();
        let g0 = uturn_map(&ctx, UTurn::G0);
        assert_eq!((g0.matrix.rows(), g0.matrix.cols()), (1, 1));
        // replay in ambient coordinates: (1/3)(e^1⊗e_1 + e^2⊗e_2 + e^3⊗e_3)
        let d = DiagramExpr::generator(UTurn::G0.generator());
        let mut v = SparseVec::new();
        let after = ctx.space_of_word(&word("-+"), Label::Zero).unwrap();
        let before = ctx.space_of_word(&word(""), Label::Zero).unwrap();
        axpy(&mut v, &Rational::one(), &apply_uturn(d.rows()[0].generator, 0, &before, &after, 0, &g0_scale(3)));
        assert_eq!(v.len(), 3);
        for i in 0..3 {
            assert_eq!(v[&(i * 3 + i)], Rational::new(1.into(), 3.into()));
        }
    }

    #[test]
    fn identity_and_crossing() {
        let ctx = make_context(2).unwrap();
        let id = eval_diagram(&ctx, &identity_diagram(&word("+")), Label::Zero).unwrap();
        assert!(id.is_identity());
        assert_eq!(id.matrix.rows(), 2);
        let x = DiagramExpr::crossing(Sign::Plus, Sign::Minus);
        let x = compose(&x, &DiagramExpr::crossing(Sign::Minus, Sign::Plus)).unwrap();
        assert!(eval_diagram(&ctx, &x, Label::One).unwrap().is_zero());
    }

    #[test]
    fn bubble_at_zero() {
        let ctx = make_context(2).unwrap();
        let b = compose(&DiagramExpr::cup(Sign::Minus, Sign::Plus).unwrap(), &DiagramExpr::cap(Sign::Minus, Sign::Plus).unwrap()).unwrap();
        assert!(eval_diagram(&ctx, &b, Label::Zero).unwrap().is_identity());
    }
}
