//! Reduction of objects to atoms, and the direct-sum decomposition of the unit.

use std::fmt;

use serde::Serialize;

use super::expr::{compose, identity_diagram, tensor, DiagramExpr};
use super::morphism::Morphism;
use super::normalize::normalize;
use crate::label::{is_valid_from, Label};
use crate::report::Report;
use crate::sign_words::{Sign, SignWord};

/// Isomorphism-class representatives of objects.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Atom {
    Zero,
    Unit,
    Plus,
    Minus,
    PlusMinus,
    MinusPlus,
}

impl Atom {
    /// The representative word, `None` for the zero object.
    pub fn word(self) -> Option<SignWord> {
        let text = match self {
            Atom::Zero => return None,
            Atom::Unit => "",
            Atom::Plus => "+",
            Atom::Minus => "-",
            Atom::PlusMinus => "+-",
            Atom::MinusPlus => "-+",
        };
        Some(text.parse().expect("atom words are valid"))
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Atom::Zero => "Zero",
            Atom::Unit => "Unit",
            Atom::Plus => "Plus",
            Atom::Minus => "Minus",
            Atom::PlusMinus => "PlusMinus",
            Atom::MinusPlus => "MinusPlus",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone)]
pub struct Reduction {
    pub atom: Atom,
    /// From the word down to the atom.
    pub down: DiagramExpr,
    /// From the atom back up to the word.
    pub up: DiagramExpr,
}

/// Reduces `w` to its atom: an alternating word is isomorphic to its last one
/// or two letters, the rest cancelling in adjacent pairs.
pub fn reduce_word(w: &SignWord, source: Option<Label>) -> Reduction {
    let zero = Reduction { atom: Atom::Zero, down: DiagramExpr::empty(), up: DiagramExpr::empty() };
    if w.has_repeat() || source.is_some_and(|s| !is_valid_from(w, s)) {
        return zero;
    }
    let keep = match w.len() {
        0 => 0,
        n if n % 2 == 1 => 1,
        _ => 2,
    };
    let split = w.len() - keep;
    let tail = w.slice(split..w.len());
    let atom = match tail.signs() {
        [] => Atom::Unit,
        [Sign::Plus] => Atom::Plus,
        [Sign::Minus] => Atom::Minus,
        [Sign::Plus, _] => Atom::PlusMinus,
        _ => Atom::MinusPlus,
    };
    let mut down = identity_diagram(&tail);
    let mut up = identity_diagram(&tail);
    for pair in w.signs()[..split].chunks(2).rev() {
        let (a, b) = (pair[0], pair[1]);
        down = tensor(&DiagramExpr::cap(a, b).expect("alternating pair"), &down);
        up = tensor(&DiagramExpr::cup(a, b).expect("alternating pair"), &up);
    }
    Reduction { atom, down, up }
}

/// Normalized composites of a reduction's witnesses, paired with the
/// identities they should equal: (atom→word→atom, word→atom→word).
pub fn witness_composites(r: &Reduction, source: Option<Label>) -> Option<[(Morphism, Morphism); 2]> {
    let atom = r.atom.word()?;
    let on_atom = compose(&r.up, &r.down).expect("witnesses share the atom");
    let on_word = compose(&r.down, &r.up).expect("witnesses share the word");
    Some([
        (normalize(&on_atom, source), Morphism::identity(&atom, source)),
        (normalize(&on_word, source), Morphism::identity(r.down.bottom(), source)),
    ])
}

fn check_witnesses(r: &Reduction, source: Option<Label>) -> bool {
    witness_composites(r, source)
        .map(|pairs| pairs.iter().all(|(got, want)| got.equivalent(want) && !want.is_zero()))
        .unwrap_or(true)
}

/// Whether both witness composites of `reduce_word(w, source)` are identities.
pub fn witnesses_hold(w: &SignWord, source: Option<Label>) -> bool {
    check_witnesses(&reduce_word(w, source), source)
}

/// Verifies that the unit object splits as `+-` ⊕ `-+` through the cups
/// and caps on those words.
pub fn direct_sum_witness() -> Report {
    use Sign::{Minus as M, Plus as P};
    let iota1 = DiagramExpr::cap(P, M).expect("cap");
    let rho1 = DiagramExpr::cup(P, M).expect("cup");
    let iota2 = DiagramExpr::cap(M, P).expect("cap");
    let rho2 = DiagramExpr::cup(M, P).expect("cup");
    let pm: SignWord = "+-".parse().expect("word");
    let mp: SignWord = "-+".parse().expect("word");
    let unit = SignWord::empty();

    let mut report = Report::new(None);
    let then = |first: &DiagramExpr, second: &DiagramExpr| compose(first, second).expect("interfaces agree");

    let r2i1 = normalize(&then(&iota1, &rho2), None);
    report.push("rho2 iota1 = 0", r2i1.is_zero(), format!("{} terms", r2i1.terms().count()));
    let r1i2 = normalize(&then(&iota2, &rho1), None);
    report.push("rho1 iota2 = 0", r1i2.is_zero(), format!("{} terms", r1i2.terms().count()));
    let r1i1 = normalize(&then(&iota1, &rho1), None);
    report.push("rho1 iota1 = id(+-)", r1i1.equivalent(&Morphism::identity(&pm, None)), "");
    let r2i2 = normalize(&then(&iota2, &rho2), None);
    report.push("rho2 iota2 = id(-+)", r2i2.equivalent(&Morphism::identity(&mp, None)), "");

    let sum_at = |source: Option<Label>| {
        let a = normalize(&then(&rho1, &iota1), source);
        let b = normalize(&then(&rho2, &iota2), source);
        a.add(&b).expect("same space")
    };
    let sum = sum_at(None);
    report.push(
        "iota1 rho1 + iota2 rho2 = id(1)",
        sum.equivalent(&Morphism::identity(&unit, None)),
        format!("{} formal terms", sum.terms().count()),
    );
    for s in Label::ALL {
        let sum = sum_at(Some(s));
        report.push(
            format!("iota1 rho1 + iota2 rho2 = id(1) at label {s}"),
            sum.equivalent(&Morphism::identity(&unit, Some(s))),
            "",
        );
    }
    report
}
