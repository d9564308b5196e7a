//! Reduction of diagram expressions to normal form.

use super::expr::DiagramExpr;
use super::morphism::{Frame, Morphism, Trace};
use crate::label::Label;
use super::expr::DiagramError;

/// Normal form of `d`, read in the labeled 2-category when `source` is given.
///
/// Rows are stacked one at a time; loops are evaluated (or kept as formal
/// circles in closed unlabeled diagrams) as soon as they close, and the term
/// dies once its region labels leave the allowed window.
pub fn normalize(d: &DiagramExpr, source: Option<Label>) -> Morphism {
    let bottom = d.bottom().clone();
    let top = d.top().clone();
    let frame = Frame { source, closed: bottom.is_empty() && top.is_empty() };
    if d.contains_crossing() {
        return Morphism::zero(bottom, top, source);
    }
    let mut trace = Trace::start(&bottom, frame.base());
    for row in d.rows() {
        if !trace.admissible(frame) {
            return Morphism::zero(bottom, top, source);
        }
        let m = row.matching().expect("crossing-free rows have matchings");
        trace.stack(&m, frame).expect("rows share interfaces");
    }
    let term = trace.finish(frame);
    Morphism::from_term(bottom, top, source, term)
}

/// Whether two diagrams with the same boundary define the same 2-morphism.
pub fn equal_morphisms(a: &DiagramExpr, b: &DiagramExpr, source: Option<Label>) -> Result<bool, DiagramError> {
    if a.bottom() != b.bottom() {
        return Err(DiagramError::Boundary { lower: a.bottom().clone(), upper: b.bottom().clone() });
    }
    if a.top() != b.top() {
        return Err(DiagramError::Boundary { lower: a.top().clone(), upper: b.top().clone() });
    }
    Ok(normalize(a, source).equivalent(&normalize(b, source)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::expr::{compose, identity_diagram, tensor};
    use crate::diagram::matching::Matching;
    use crate::sign_words::{Sign, SignWord};
    use num_traits::One;

    use Sign::{Minus as M, Plus as P};

    fn w(s: &str) -> SignWord {
        s.parse().unwrap()
    }

    fn cup(a: Sign, b: Sign) -> DiagramExpr {
        DiagramExpr::cup(a, b).unwrap()
    }

    fn cap(a: Sign, b: Sign) -> DiagramExpr {
        DiagramExpr::cap(a, b).unwrap()
    }

    fn bubble(a: Sign, b: Sign) -> DiagramExpr {
        compose(&cup(a, b), &cap(a, b)).unwrap()
    }

    fn scalar(m: &Morphism) -> crate::Rational {
        m.coefficient(&Matching::empty())
    }

    #[test]
    fn saddle_on_minus_plus() {
        let d = compose(&cap(M, P), &cup(M, P)).unwrap();
        let n = normalize(&d, Some(Label::Zero));
        assert_eq!(n, Morphism::identity(&w("-+"), Some(Label::Zero)));
        assert!(!n.is_zero());
    }

    #[test]
    fn nilpotent_identity() {
        for s in [None, Some(Label::Zero), Some(Label::One)] {
            assert!(normalize(&identity_diagram(&w("++")), s).is_zero());
            assert!(normalize(&identity_diagram(&w("--")), s).is_zero());
        }
    }

    #[test]
    fn bubbles_by_label() {
        // counterclockwise: inside label one above the outside
        let ccw = bubble(M, P);
        let cw = bubble(P, M);
        assert!(scalar(&normalize(&ccw, Some(Label::Zero))).is_one());
        assert!(normalize(&ccw, Some(Label::One)).is_zero());
        assert!(normalize(&cw, Some(Label::Zero)).is_zero());
        assert!(scalar(&normalize(&cw, Some(Label::One))).is_one());
    }

    #[test]
    fn curls_beside_strands() {
        let id = identity_diagram(&w("+"));
        let right_ccw = tensor(&id, &bubble(M, P));
        let left_cw = tensor(&bubble(P, M), &id);
        let left_ccw = tensor(&bubble(M, P), &id);
        let right_cw = tensor(&id, &bubble(P, M));
        assert!(equal_morphisms(&id, &right_ccw, None).unwrap());
        assert!(equal_morphisms(&id, &left_cw, None).unwrap());
        assert!(normalize(&left_ccw, None).is_zero());
        assert!(normalize(&right_cw, None).is_zero());
    }

    #[test]
    fn free_bubbles_stay_formal() {
        let sum = normalize(&bubble(M, P), None).add(&normalize(&bubble(P, M), None)).unwrap();
        assert_eq!(sum.terms().count(), 2);
        assert!(sum.equivalent(&Morphism::identity(&SignWord::empty(), None)));
        assert!(!normalize(&bubble(M, P), None).equivalent(&Morphism::identity(&SignWord::empty(), None)));
    }

    #[test]
    fn crossings_vanish() {
        let x = DiagramExpr::crossing(P, M);
        assert!(normalize(&x, None).is_zero());
        let d = compose(&x, &DiagramExpr::crossing(M, P)).unwrap();
        assert!(normalize(&d, Some(Label::Zero)).is_zero());
    }

    #[test]
    fn zigzags_straighten() {
        let id_p = identity_diagram(&w("+"));
        let id_m = identity_diagram(&w("-"));
        // + strand: cup(+-) on the left, cap(-+) on the right
        let z1 = compose(&tensor(&cup(P, M), &id_p), &tensor(&id_p, &cap(M, P))).unwrap();
        let z2 = compose(&tensor(&id_p, &cup(M, P)), &tensor(&cap(P, M), &id_p)).unwrap();
        let z3 = compose(&tensor(&cup(M, P), &id_m), &tensor(&id_m, &cap(P, M))).unwrap();
        let z4 = compose(&tensor(&id_m, &cup(P, M)), &tensor(&cap(M, P), &id_m)).unwrap();
        for (z, id, s) in [(&z1, &id_p, Label::Zero), (&z2, &id_p, Label::Zero), (&z3, &id_m, Label::One), (&z4, &id_m, Label::One)] {
            assert!(equal_morphisms(z, id, Some(s)).unwrap());
            assert!(equal_morphisms(z, id, None).unwrap());
            assert!(!normalize(z, Some(s)).is_zero());
        }
    }

    #[test]
    fn mismatched_boundaries() {
        let a = identity_diagram(&w("+"));
        let b = identity_diagram(&w("-"));
        assert!(equal_morphisms(&a, &b, None).is_err());
    }
}
