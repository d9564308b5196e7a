//! Seeded random diagrams for property checks and the soundness sweep.

use rand::Rng;

use super::expr::{compose, identity_diagram, tensor, DiagramExpr, Generator};
use crate::label::{valid_word, Label};
use crate::sign_words::{Sign, SignWord};

#[derive(Debug, Clone, Copy)]
pub struct RandomSpec {
    /// Upper bound on the length of every intermediate word.
    pub max_width: usize,
    pub rows: usize,
    /// Probability that a row is a crossing where one fits.
    pub crossing_rate: f64,
}

impl Default for RandomSpec {
    fn default() -> Self {
        RandomSpec { max_width: 6, rows: 6, crossing_rate: 0.0 }
    }
}

pub fn random_sign<R: Rng + ?Sized>(rng: &mut R) -> Sign {
    if rng.gen_bool(0.5) {
        Sign::Plus
    } else {
        Sign::Minus
    }
}

pub fn random_word<R: Rng + ?Sized>(rng: &mut R, max_len: usize) -> SignWord {
    let len = rng.gen_range(0..=max_len);
    (0..len).map(|_| random_sign(rng)).collect()
}

fn slice(word: &SignWord, pos: usize, width: usize, g: Generator) -> DiagramExpr {
    let left = identity_diagram(&word.slice(0..pos));
    let right = identity_diagram(&word.slice(pos + width..word.len()));
    tensor(&tensor(&left, &DiagramExpr::generator(g)), &right)
}

/// One random row on top of `word`.
pub fn random_row<R: Rng + ?Sized>(rng: &mut R, word: &SignWord, spec: &RandomSpec) -> DiagramExpr {
    let n = word.len();
    let caps: Vec<usize> = (0..n.saturating_sub(1))
        .filter(|&i| word.get(i) != word.get(i + 1))
        .collect();
    if n >= 2 && rng.gen_bool(spec.crossing_rate) {
        let i = rng.gen_range(0..n - 1);
        let (a, b) = (word.get(i).expect("in range"), word.get(i + 1).expect("in range"));
        return slice(word, i, 2, Generator::Crossing(a, b));
    }
    let can_cup = n + 2 <= spec.max_width;
    let choose_cap = !caps.is_empty() && (!can_cup || rng.gen_bool(0.5));
    if choose_cap {
        let i = caps[rng.gen_range(0..caps.len())];
        let (a, b) = (word.get(i).expect("in range"), word.get(i + 1).expect("in range"));
        slice(word, i, 2, Generator::Cap(a, b))
    } else if can_cup {
        let i = rng.gen_range(0..=n);
        let a = random_sign(rng);
        let cup = DiagramExpr::cup(a, a.flip()).expect("opposite signs");
        let left = identity_diagram(&word.slice(0..i));
        let right = identity_diagram(&word.slice(i..n));
        tensor(&tensor(&left, &cup), &right)
    } else {
        identity_diagram(word)
    }
}

/// A random stack of rows starting from `bottom`.
pub fn random_diagram_from<R: Rng + ?Sized>(rng: &mut R, bottom: &SignWord, spec: &RandomSpec) -> DiagramExpr {
    let mut d = identity_diagram(bottom);
    for _ in 0..spec.rows {
        let row = random_row(rng, d.top(), spec);
        d = compose(&d, &row).expect("rows are built on the current top");
    }
    d
}

pub fn random_diagram<R: Rng + ?Sized>(rng: &mut R, spec: &RandomSpec) -> DiagramExpr {
    let bottom = random_word(rng, spec.max_width);
    random_diagram_from(rng, &bottom, spec)
}

/// A random stack of U-turn rows whose every intermediate word is a nonzero
/// 1-morphism from `source`: caps on any adjacent opposite pair, cups only
/// where the region admits them.
pub fn random_valid_diagram<R: Rng + ?Sized>(rng: &mut R, source: Label, spec: &RandomSpec) -> DiagramExpr {
    let len = rng.gen_range(0..=spec.max_width);
    random_valid_from(rng, &valid_word(len, source), source, spec)
}

/// As `random_valid_diagram`, starting from a given valid bottom word.
pub fn random_valid_from<R: Rng + ?Sized>(rng: &mut R, bottom: &SignWord, source: Label, spec: &RandomSpec) -> DiagramExpr {
    let mut d = identity_diagram(bottom);
    for _ in 0..spec.rows {
        let word = d.top().clone();
        let n = word.len();
        let caps: Vec<usize> = (0..n.saturating_sub(1)).filter(|&i| word.get(i) != word.get(i + 1)).collect();
        let can_cup = n + 2 <= spec.max_width;
        let row = if !caps.is_empty() && (!can_cup || rng.gen_bool(0.5)) {
            let i = caps[rng.gen_range(0..caps.len())];
            let (a, b) = (word.get(i).expect("in range"), word.get(i + 1).expect("in range"));
            slice(&word, i, 2, Generator::Cap(a, b))
        } else if can_cup {
            let labels = word.gap_labels(source.value());
            let i = rng.gen_range(0..=n);
            // the region left of letter i carries labels[i]
            let a = if labels[i] == 0 { Sign::Minus } else { Sign::Plus };
            let cup = DiagramExpr::cup(a, a.flip()).expect("opposite signs");
            tensor(&tensor(&identity_diagram(&word.slice(0..i)), &cup), &identity_diagram(&word.slice(i..n)))
        } else {
            continue;
        };
        d = compose(&d, &row).expect("rows are built on the current top");
    }
    d
}
