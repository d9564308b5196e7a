//! Sign words and the one-mode fermion algebra they name.
//!
//! A word `ε₁…εₙ` stands for the operator `f_{ε₁}…f_{εₙ}` with `f₊ = f†` and
//! `f₋ = f`; the rightmost letter acts first on a ket. The 2×2 matrix
//! representation on the Fock basis `|0⟩, |1⟩` is the ground truth every
//! categorical computation in this crate is checked against.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("invalid sign {found:?} at position {position}; expected '+' or '-'")]
    InvalidSign { position: usize, found: char },
    #[error("occupation number {0} is outside the fermionic Fock space {{0, 1}}")]
    Occupation(i64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn from_char(c: char) -> Option<Sign> {
        match c {
            '+' => Some(Sign::Plus),
            '-' => Some(Sign::Minus),
            _ => None,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }

    /// Change of region label when crossing a strand of this sign from right to left.
    pub fn step(self) -> i32 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

/// Finite sequence of signs, leftmost sign = leftmost strand.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignWord(Vec<Sign>);

impl SignWord {
    pub fn empty() -> Self {
        SignWord(Vec::new())
    }

    pub fn new(signs: Vec<Sign>) -> Self {
        SignWord(signs)
    }

    pub fn signs(&self) -> &[Sign] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, i: usize) -> Option<Sign> {
        self.0.get(i).copied()
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = Sign> + ExactSizeIterator + '_ {
        self.0.iter().copied()
    }

    pub fn concat(&self, other: &SignWord) -> SignWord {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        SignWord(v)
    }

    pub fn slice(&self, range: std::ops::Range<usize>) -> SignWord {
        SignWord(self.0[range].to_vec())
    }

    pub fn prepend(&self, sign: Sign) -> SignWord {
        let mut v = Vec::with_capacity(self.len() + 1);
        v.push(sign);
        v.extend_from_slice(&self.0);
        SignWord(v)
    }

    /// `#{+} − #{−}`: the net change of region label across the whole word.
    pub fn charge(&self) -> i32 {
        self.iter().map(Sign::step).sum()
    }

    /// True if `++` or `--` occurs as a contiguous subword.
    pub fn has_repeat(&self) -> bool {
        self.0.windows(2).any(|w| w[0] == w[1])
    }

    /// Region labels of the `len + 1` gaps, right to left starting from `base`.
    ///
    /// Entry `i` is the label of the gap immediately left of letter `i`; the last
    /// entry is the rightmost region.
    pub fn gap_labels(&self, base: i32) -> Vec<i32> {
        let mut labels = vec![0; self.len() + 1];
        labels[self.len()] = base;
        for i in (0..self.len()).rev() {
            labels[i] = labels[i + 1] + self.0[i].step();
        }
        labels
    }

    /// All words over `{+,−}` of length `0..=max_len`, shortest first, then lexicographic
    /// with `+` before `−`.
    pub fn enumerate(max_len: usize) -> Vec<SignWord> {
        let mut out = vec![SignWord::empty()];
        let mut layer = vec![SignWord::empty()];
        for _ in 0..max_len {
            let mut next = Vec::with_capacity(layer.len() * 2);
            for w in &layer {
                for s in [Sign::Plus, Sign::Minus] {
                    let mut v = w.0.clone();
                    v.push(s);
                    next.push(SignWord(v));
                }
            }
            out.extend(next.iter().cloned());
            layer = next;
        }
        out
    }
}

impl FromIterator<Sign> for SignWord {
    fn from_iter<I: IntoIterator<Item = Sign>>(iter: I) -> Self {
        SignWord(iter.into_iter().collect())
    }
}

impl fmt::Display for SignWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            write!(f, "{}", s.as_char())?;
        }
        Ok(())
    }
}

impl FromStr for SignWord {
    type Err = WordError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        word_from_string(s)
    }
}

impl Serialize for SignWord {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Parses `[+-]*`. Positions in errors are 1-based character positions.
pub fn word_from_string(text: &str) -> Result<SignWord, WordError> {
    text.chars()
        .enumerate()
        .map(|(i, c)| Sign::from_char(c).ok_or(WordError::InvalidSign { position: i + 1, found: c }))
        .collect()
}

/// 2×2 exact matrix acting on column vectors in the basis `|0⟩, |1⟩`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix2(pub [[Rational; 2]; 2]);

impl Matrix2 {
    pub fn identity() -> Self {
        Matrix2([[Rational::one(), Rational::zero()], [Rational::zero(), Rational::one()]])
    }

    pub fn zero() -> Self {
        Matrix2([[Rational::zero(), Rational::zero()], [Rational::zero(), Rational::zero()]])
    }

    /// `f†`: |0⟩ ↦ |1⟩, |1⟩ ↦ 0.
    pub fn creation() -> Self {
        let mut m = Self::zero();
        m.0[1][0] = Rational::one();
        m
    }

    /// `f`: |1⟩ ↦ |0⟩, |0⟩ ↦ 0.
    pub fn annihilation() -> Self {
        let mut m = Self::zero();
        m.0[0][1] = Rational::one();
        m
    }

    pub fn mul(&self, rhs: &Matrix2) -> Matrix2 {
        let mut out = Self::zero();
        for i in 0..2 {
            for j in 0..2 {
                out.0[i][j] = &self.0[i][0] * &rhs.0[0][j] + &self.0[i][1] * &rhs.0[1][j];
            }
        }
        out
    }

    pub fn add(&self, rhs: &Matrix2) -> Matrix2 {
        let mut out = self.clone();
        for i in 0..2 {
            for j in 0..2 {
                out.0[i][j] += &rhs.0[i][j];
            }
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Matrix2 {
        let mut out = self.clone();
        for row in out.0.iter_mut() {
            for x in row.iter_mut() {
                *x *= c;
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().flatten().all(Zero::is_zero)
    }

    pub fn apply(&self, v: &FockVector) -> FockVector {
        FockVector {
            c0: &self.0[0][0] * &v.c0 + &self.0[0][1] * &v.c1,
            c1: &self.0[1][0] * &v.c0 + &self.0[1][1] * &v.c1,
        }
    }
}

pub fn letter_matrix(sign: Sign) -> Matrix2 {
    match sign {
        Sign::Plus => Matrix2::creation(),
        Sign::Minus => Matrix2::annihilation(),
    }
}

/// Product of the letter matrices, left to right (so the rightmost letter acts first).
pub fn matrix_rep(w: &SignWord) -> Matrix2 {
    w.iter().fold(Matrix2::identity(), |acc, s| acc.mul(&letter_matrix(s)))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FockVector {
    pub c0: Rational,
    pub c1: Rational,
}

impl FockVector {
    pub fn basis(n: u8) -> FockVector {
        match n {
            0 => FockVector { c0: Rational::one(), c1: Rational::zero() },
            _ => FockVector { c0: Rational::zero(), c1: Rational::one() },
        }
    }

    pub fn vacuum() -> FockVector {
        Self::basis(0)
    }

    pub fn is_zero(&self) -> bool {
        self.c0.is_zero() && self.c1.is_zero()
    }

    pub fn dot(&self, other: &FockVector) -> Rational {
        &self.c0 * &other.c0 + &self.c1 * &other.c1
    }
}

pub fn apply_to_vacuum(w: &SignWord) -> FockVector {
    matrix_rep(w).apply(&FockVector::vacuum())
}

/// `⟨n| A_{left}† A_{right} |n⟩` for the Fock reference state `|n⟩`.
pub fn inner_product_from(w_left: &SignWord, w_right: &SignWord, reference: u8) -> u64 {
    let start = FockVector::basis(reference);
    let a = matrix_rep(w_left).apply(&start);
    let b = matrix_rep(w_right).apply(&start);
    let value = a.dot(&b);
    debug_assert!(value.is_integer() && !value.is_negative());
    value.to_integer().try_into().expect("sign-word inner products are 0 or 1")
}

/// `⟨A_{left} 0 | A_{right} 0⟩`.
pub fn inner_product(w_left: &SignWord, w_right: &SignWord) -> u64 {
    inner_product_from(w_left, w_right, 0)
}

/// Coefficients on the ordered basis `(1, f†, f, f†f)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraElement(pub [Rational; 4]);

impl AlgebraElement {
    pub const BASIS: [&'static str; 4] = ["1", "f†", "f", "f†f"];

    pub fn zero() -> Self {
        AlgebraElement(std::array::from_fn(|_| Rational::zero()))
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn matrix(&self) -> Matrix2 {
        let basis = [
            Matrix2::identity(),
            Matrix2::creation(),
            Matrix2::annihilation(),
            Matrix2::creation().mul(&Matrix2::annihilation()),
        ];
        basis
            .iter()
            .zip(&self.0)
            .fold(Matrix2::zero(), |acc, (m, c)| acc.add(&m.scale(c)))
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (c, name) in self.0.iter().zip(Self::BASIS) {
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            write!(f, "{}·{}", c.abs(), name)?;
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Rewrites `w` with `f f† → 1 − f† f`, `f f → 0`, `f† f† → 0`, always at the
/// leftmost redex, until every surviving word is one of `1, f†, f, f†f`.
pub fn normal_order(w: &SignWord) -> AlgebraElement {
    let mut pending: BTreeMap<Vec<Sign>, Rational> = BTreeMap::new();
    pending.insert(w.signs().to_vec(), Rational::one());
    let mut result = AlgebraElement::zero();

    while let Some((word, coeff)) = pending.pop_first() {
        let redex = word.windows(2).position(|p| p[0] == p[1] || (p[0] == Sign::Minus && p[1] == Sign::Plus));
        match redex {
            None => {
                let slot = match word.as_slice() {
                    [] => 0,
                    [Sign::Plus] => 1,
                    [Sign::Minus] => 2,
                    [Sign::Plus, Sign::Minus] => 3,
                    _ => unreachable!("irreducible words have length at most two"),
                };
                result.0[slot] += coeff;
            }
            Some(i) if word[i] == word[i + 1] => {}
            Some(i) => {
                let mut unit = word[..i].to_vec();
                unit.extend_from_slice(&word[i + 2..]);
                let mut swapped = word[..i].to_vec();
                swapped.extend([Sign::Plus, Sign::Minus]);
                swapped.extend_from_slice(&word[i + 2..]);
                *pending.entry(unit).or_insert_with(Rational::zero) += &coeff;
                *pending.entry(swapped).or_insert_with(Rational::zero) -= &coeff;
            }
        }
        pending.retain(|_, c| !c.is_zero());
    }
    result
}

/// Eigenvalue `n − 1/2` of `H = f†f − 1/2` on `|n⟩`.
pub fn hamiltonian_eigenvalue(n: i64) -> Result<Rational, WordError> {
    match n {
        0 | 1 => Ok(Rational::from_integer(n.into()) - Rational::new(1.into(), 2.into())),
        _ => Err(WordError::Occupation(n)),
    }
}

/// `H = ½(f†f − f f†)` as an algebra element, normal ordered.
pub fn hamiltonian() -> AlgebraElement {
    let half = Rational::new(1.into(), 2.into());
    let mut h = AlgebraElement::zero();
    let a = normal_order(&"+-".parse().unwrap());
    let b = normal_order(&"-+".parse().unwrap());
    for i in 0..4 {
        h.0[i] = &half * (&a.0[i] - &b.0[i]);
    }
    h
}
