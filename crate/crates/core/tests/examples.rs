//! The documented worked examples, one test per operation.

use fermion_diagrams::bimodule::eval::{uturn_map_scaled, UTurn};
use fermion_diagrams::bimodule::linalg::SparseVec;
use fermion_diagrams::bimodule::space::relation_vectors;
use fermion_diagrams::bimodule::{
    eval_diagram, make_context, row_reduce, soundness_check, uturn_map, verify_adjunctions, verify_zigzags,
    RationalMatrix,
};
use fermion_diagrams::diagram::reduce::witness_composites;
use fermion_diagrams::diagram::{
    compose, equal_morphisms, hom_dim, identity_diagram, normalize, reduce_word, tensor, Atom, DiagramExpr,
    Matching, Morphism,
};
use fermion_diagrams::label::Label;
use fermion_diagrams::lang::{parse_diagram, parse_word, render_ascii, ParseError};
use fermion_diagrams::sign_words::{
    apply_to_vacuum, hamiltonian_eigenvalue, inner_product, matrix_rep, normal_order, word_from_string,
    AlgebraElement, FockVector, Matrix2, Sign, SignWord, WordError,
};
use fermion_diagrams::two_cat::{act, categorical_inner, state, validate_1morphism};
use fermion_diagrams::Rational;

const P: Sign = Sign::Plus;
const M: Sign = Sign::Minus;
const ZERO: Option<Label> = Some(Label::Zero);
const ONE: Option<Label> = Some(Label::One);

fn w(s: &str) -> SignWord {
    s.parse().unwrap()
}

fn r(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn d(text: &str) -> DiagramExpr {
    parse_diagram(text).unwrap()
}

// --- words and the fermion algebra ---

#[test]
fn words_parse() {
    assert_eq!(word_from_string("").unwrap(), SignWord::empty());
    assert_eq!(word_from_string("+-").unwrap(), SignWord::new(vec![P, M]));
    assert_eq!(word_from_string("+a-").unwrap_err(), WordError::InvalidSign { position: 2, found: 'a' });
}

#[test]
fn matrix_representation() {
    let plus = matrix_rep(&w("+"));
    assert_eq!(plus.apply(&FockVector::basis(0)), FockVector::basis(1));
    assert!(plus.apply(&FockVector::basis(1)).is_zero());
    assert_eq!(matrix_rep(&w("")), Matrix2::identity());
    assert!(matrix_rep(&w("++")).is_zero());
}

#[test]
fn vacuum_images() {
    assert_eq!(apply_to_vacuum(&w("")), FockVector::basis(0));
    assert_eq!(apply_to_vacuum(&w("+")), FockVector::basis(1));
    assert!(apply_to_vacuum(&w("-")).is_zero());
}

#[test]
fn fock_inner_products() {
    assert_eq!(inner_product(&w("+"), &w("+")), 1);
    assert_eq!(inner_product(&w("+"), &w("-")), 0);
    assert_eq!(inner_product(&w(""), &w("-+")), 1);
}

#[test]
fn normal_ordering() {
    assert_eq!(normal_order(&w("-+")), AlgebraElement([r(1), r(0), r(0), r(-1)]));
    assert!(normal_order(&w("++")).is_zero());
    assert_eq!(normal_order(&w("+-+")), AlgebraElement([r(0), r(1), r(0), r(0)]));
    assert_eq!(normal_order(&w("+-+")).matrix(), matrix_rep(&w("+-+")));
}

#[test]
fn hamiltonian_spectrum() {
    assert_eq!(hamiltonian_eigenvalue(0).unwrap(), Rational::new((-1).into(), 2.into()));
    assert_eq!(hamiltonian_eigenvalue(1).unwrap(), Rational::new(1.into(), 2.into()));
    assert_eq!(hamiltonian_eigenvalue(2).unwrap_err(), WordError::Occupation(2));
}

// --- diagrams ---

#[test]
fn identity_diagrams() {
    let up = identity_diagram(&w("+"));
    assert_eq!((up.bottom(), up.top()), (&w("+"), &w("+")));
    assert!(identity_diagram(&w("")).bottom().is_empty());
    let pair = Morphism::identity(&w("-+"), None);
    assert_eq!(pair.coefficient(&Matching::identity(&w("-+"))), r(1));
}

#[test]
fn tensor_products() {
    let t = tensor(&identity_diagram(&w("+")), &identity_diagram(&w("-")));
    assert!(equal_morphisms(&t, &identity_diagram(&w("+-")), None).unwrap());
    let e = tensor(&DiagramExpr::empty(), &d("cup(+-)"));
    assert_eq!((e.bottom(), e.top()), (&w(""), &w("+-")));
    let c = tensor(&DiagramExpr::cap(M, P).unwrap(), &identity_diagram(&w("+")));
    assert_eq!((c.bottom().len(), c.top().len()), (3, 1));
}

#[test]
fn vertical_composition() {
    let id = identity_diagram(&w("+"));
    assert!(equal_morphisms(&compose(&id, &id).unwrap(), &id, None).unwrap());
    let bubble = compose(&DiagramExpr::cup(M, P).unwrap(), &DiagramExpr::cap(M, P).unwrap()).unwrap();
    assert!(bubble.bottom().is_empty() && bubble.top().is_empty());
    assert!(compose(&id, &identity_diagram(&w("-"))).is_err());
}

#[test]
fn normalization() {
    let stacked = d("cap(-+) ; cup(-+)");
    let n = normalize(&stacked, ZERO);
    assert_eq!(n, normalize(&identity_diagram(&w("-+")), ZERO));
    assert_eq!(n.terms().count(), 1);
    for s in [None, ZERO, ONE] {
        assert!(normalize(&identity_diagram(&w("++")), s).is_zero());
    }
    // the bubble bounding a region labeled 1 is the identity of id_0 ...
    let b = normalize(&d("cup(-+) ; cap(-+)"), ZERO);
    assert_eq!(b, Morphism::identity(&SignWord::empty(), ZERO));
    assert_eq!(b.coefficient(&Matching::empty()), r(1));
    // ... and the one that would bound a region labeled -1 is set to zero
    assert!(normalize(&d("cup(+-) ; cap(+-)"), ZERO).is_zero());
}

#[test]
fn equivalence() {
    for zig in ["(cup(+-) * id(+)) ; (id(+) * cap(-+))", "(id(+) * cup(-+)) ; (cap(+-) * id(+))"] {
        assert!(equal_morphisms(&d(zig), &d("id(+)"), ZERO).unwrap());
    }
    assert!(normalize(&d("id(++)"), None).is_zero());
    assert!(equal_morphisms(&d("id(+)"), &d("id(+) * (cup(-+) ; cap(-+))"), None).unwrap());
}

#[test]
fn hom_dimensions() {
    assert_eq!(hom_dim(&w("+"), &w("+"), Label::Zero), 1);
    assert_eq!(hom_dim(&w("-+"), &w(""), Label::Zero), 1);
    assert_eq!(hom_dim(&w("+"), &w("-"), Label::Zero), 0);
    assert_eq!(inner_product(&w("-"), &w("+")), 0);
    for other in ["", "+", "-", "++", "+-", "-+"] {
        for s in Label::ALL {
            assert_eq!(hom_dim(&w("++"), &w(other), s), 0);
            assert_eq!(hom_dim(&w(other), &w("++"), s), 0);
        }
    }
}

#[test]
fn word_reduction() {
    let r4 = reduce_word(&w("+-+-"), None);
    assert_eq!(r4.atom, Atom::PlusMinus);
    let [(down_up, id_atom), (up_down, id_word)] = witness_composites(&r4, None).unwrap();
    assert_eq!(down_up, id_atom);
    assert!(up_down.equivalent(&id_word));
    assert_eq!(reduce_word(&w("+-+"), None).atom, Atom::Plus);
    assert_eq!(reduce_word(&w("++"), None).atom, Atom::Zero);
}

#[test]
fn direct_sum_witnesses() {
    let iota1 = d("cap(+-)");
    let rho1 = d("cup(+-)");
    let iota2 = d("cap(-+)");
    let rho2 = d("cup(-+)");
    // `compose(lower, upper)` is `upper ∘ lower`
    assert!(equal_morphisms(&compose(&iota1, &rho1).unwrap(), &d("id(+-)"), None).unwrap());
    assert!(normalize(&compose(&iota1, &rho2).unwrap(), None).is_zero());
    let sum = normalize(&compose(&rho1, &iota1).unwrap(), ZERO)
        .add(&normalize(&compose(&rho2, &iota2).unwrap(), ZERO))
        .unwrap();
    assert_eq!(sum, Morphism::identity(&SignWord::empty(), ZERO));
}

// --- the 2-category ---

#[test]
fn one_morphisms() {
    let q = validate_1morphism(&w("-+"), 0).unwrap();
    assert_eq!((q.source, q.target), (Label::Zero, Some(Label::Zero)));
    assert!(validate_1morphism(&w("+"), 1).unwrap().is_zero());
    let unit = validate_1morphism(&w(""), 1).unwrap();
    assert_eq!(unit.target, Some(Label::One));
}

#[test]
fn states() {
    assert_eq!(state(0).unwrap().word, w("-+"));
    assert_eq!(state(1).unwrap().word, w("+"));
    assert_eq!(state(1).unwrap().target, Some(Label::One));
    assert!(state(2).is_err());
}

#[test]
fn categorical_inner_products() {
    let (psi0, psi1) = (state(0).unwrap(), state(1).unwrap());
    assert_eq!(categorical_inner(&psi0, &psi0).unwrap(), 1);
    assert_eq!(categorical_inner(&psi0, &psi1).unwrap(), 0);
    let long = validate_1morphism(&w("-+-+"), 0).unwrap();
    assert_eq!(categorical_inner(&long, &psi0).unwrap(), 1);
    let other = validate_1morphism(&w(""), 1).unwrap();
    assert!(categorical_inner(&psi0, &other).is_err());
}

#[test]
fn acting_on_states() {
    let (psi0, psi1) = (state(0).unwrap(), state(1).unwrap());
    let up = act(P, &psi0);
    assert_eq!((up.word.clone(), up.target), (w("+-+"), Some(Label::One)));
    assert_eq!(reduce_word(&up.word, ZERO).atom, Atom::Plus);
    assert_eq!(act(M, &psi1), psi0);
    assert!(act(P, &psi1).is_zero());
}

// --- the bimodule representation ---

#[test]
fn contexts() {
    let c2 = make_context(2).unwrap();
    assert_eq!(c2.space_of_word(&w("+"), Label::Zero).unwrap().dim(), 2);
    let c3 = make_context(3).unwrap();
    assert_eq!(c3.space_of_word(&w("+-"), Label::One).unwrap().ambient_dim(), 9);
    assert!(make_context(1).is_err());
}

#[test]
fn tensor_spaces() {
    let c3 = make_context(3).unwrap();
    assert_eq!(c3.space_of_word(&w("-+"), Label::Zero).unwrap().dim(), 1);
    assert_eq!(c3.space_of_word(&w("+-"), Label::One).unwrap().dim(), 9);
    assert_eq!(make_context(2).unwrap().space_of_word(&w("+"), Label::Zero).unwrap().dim(), 2);
    assert!(c3.space_of_word(&w("+"), Label::One).is_err());
}

#[test]
fn u_turn_matrices() {
    let c3 = make_context(3).unwrap();
    assert!(uturn_map(&c3, UTurn::G0).then(&uturn_map(&c3, UTurn::F0)).is_identity());
    assert!(uturn_map(&c3, UTurn::F1).then(&uturn_map(&c3, UTurn::G1)).is_identity());
    // g0(1) in ambient coordinates of N ⊗ M
    let space = c3.space_of_word(&w("-+"), Label::Zero).unwrap();
    let image = fermion_diagrams::bimodule::eval::replay_ambient(&c3, &d("cup(-+)"), Label::Zero, &SparseVec::from([(0, r(1))]))
        .unwrap();
    assert_eq!(image.len(), space.dim());
    let third = Rational::new(1.into(), 3.into());
    let mut sum = SparseVec::new();
    for i in 0..3 {
        sum.insert(space.index(&[i, i]), third.clone());
    }
    assert_eq!(space.project(&sum), image);
}

#[test]
fn diagram_evaluation() {
    let c2 = make_context(2).unwrap();
    let id = eval_diagram(&c2, &d("id(+)"), Label::Zero).unwrap();
    assert!(id.is_identity() && id.matrix.rows() == 2);
    let b = eval_diagram(&c2, &d("cup(-+) ; cap(-+)"), Label::Zero).unwrap();
    assert!(b.is_identity() && b.matrix.rows() == 1);
    assert!(eval_diagram(&c2, &d("x(+-) ; x(-+)"), Label::One).unwrap().is_zero());
}

#[test]
fn adjunctions() {
    for n in [2, 3] {
        let report = verify_adjunctions(&make_context(n).unwrap());
        assert!(report.all_pass(), "{}", report.render_text());
    }
    let c3 = make_context(3).unwrap();
    let bare = uturn_map_scaled(&c3, UTurn::G0, &r(1)).then(&uturn_map(&c3, UTurn::F0));
    assert!(!bare.is_identity());
    assert_eq!(bare.matrix, RationalMatrix::identity(1).scale(&r(3)));
}

#[test]
fn zigzags() {
    for n in [2, 3] {
        let report = verify_zigzags(&make_context(n).unwrap());
        assert!(report.all_pass(), "{}", report.render_text());
    }
    let c3 = make_context(3).unwrap();
    let m_zig = eval_diagram(&c3, &d("(cup(+-) * id(+)) ; (id(+) * cap(-+))"), Label::Zero).unwrap();
    assert!(m_zig.is_identity() && m_zig.matrix.rows() == 3);
    let c2 = make_context(2).unwrap();
    let n_zig = eval_diagram(&c2, &d("(id(-) * cup(+-)) ; (cap(-+) * id(-))"), Label::One).unwrap();
    assert!(n_zig.is_identity() && n_zig.matrix.rows() == 2);
    let decorated = eval_diagram(&c2, &d("id(+) * (cup(-+) ; cap(-+))"), Label::Zero).unwrap();
    assert!(decorated.is_identity());
}

#[test]
fn soundness() {
    let c2 = make_context(2).unwrap();
    let a = eval_diagram(&c2, &d("cap(-+) ; cup(-+)"), Label::Zero).unwrap();
    let b = eval_diagram(&c2, &d("id(-+)"), Label::Zero).unwrap();
    assert_eq!(a.matrix, b.matrix);
    let report = soundness_check(&c2, 6, 200, 0);
    assert!(report.all_pass(), "{}", report.render_text());
}

#[test]
fn row_reduction() {
    let id = row_reduce(&RationalMatrix::identity(3));
    assert_eq!((id.rank, id.kernel.len()), (3, 0));
    let zero = row_reduce(&RationalMatrix::zeros(2, 3));
    assert_eq!((zero.rank, zero.kernel.len()), (0, 3));
    let rel = relation_vectors(2, &w("-+"));
    let rows: Vec<Vec<Rational>> =
        rel.iter().map(|v| (0..4).map(|i| v.get(&i).cloned().unwrap_or_else(|| r(0))).collect()).collect();
    assert_eq!(row_reduce(&RationalMatrix::from_rows(rows)).rank, 3);
}

// --- the diagram language ---

#[test]
fn language_words() {
    assert_eq!(parse_word("1").unwrap(), SignWord::empty());
    assert_eq!(parse_word("-+").unwrap(), w("-+"));
    let err = parse_word("+*").unwrap_err();
    assert_eq!(err.span().start, 1);
}

#[test]
fn language_diagrams() {
    let cup = d("cup(-+)");
    assert_eq!((cup.bottom(), cup.top()), (&w(""), &w("-+")));
    let b = d("cup(-+) ; cap(-+)");
    assert!(b.bottom().is_empty() && b.top().is_empty());
    match parse_diagram("id(+) ; id(-)").unwrap_err() {
        ParseError::Boundary { lower, upper, .. } => assert_eq!((lower, upper), (w("+"), w("-"))),
        other => panic!("unexpected {other:?}"),
    }
    assert!(matches!(parse_diagram("cap(++)").unwrap_err(), ParseError::Orientation { .. }));
}

#[test]
fn ascii_rendering() {
    assert_eq!(render_ascii(&Morphism::zero(w("+"), w("+"), None)), "0");
    let id = render_ascii(&normalize(&d("id(+)"), None));
    assert!(id.contains('|') && id.contains('+'));
    let rho_iota = normalize(&d("cap(+-) ; cup(+-)"), None);
    assert_eq!(render_ascii(&rho_iota), render_ascii(&normalize(&d("id(+-)"), None)));
}
