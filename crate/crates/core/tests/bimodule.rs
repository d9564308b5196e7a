use fermion_diagrams::bimodule::{
    eval_diagram, eval_morphism, functoriality_check, make_context, verify_adjunctions, verify_dimensions,
    verify_zigzags, RationalMatrix,
};
use fermion_diagrams::diagram::random::{random_valid_diagram, RandomSpec};
use fermion_diagrams::diagram::normalize;
use fermion_diagrams::label::{target_of, Label};
use fermion_diagrams::sign_words::SignWord;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn quotient_dimensions_depend_only_on_endpoints() {
    for n in [2, 3] {
        let ctx = make_context(n).unwrap();
        let report = verify_dimensions(&ctx, 6);
        assert!(report.all_pass(), "{}", report.render_text());
        for s in Label::ALL {
            for w in SignWord::enumerate(6) {
                if let Some(t) = target_of(&w, s) {
                    let space = ctx.space_of_word(&w, s).unwrap();
                    let expected = if w.is_empty() && s == Label::One { n * n } else { ctx.predicted_dim(s, t) };
                    assert_eq!(space.dim(), expected, "{w} from {s}");
                    assert_eq!(space.dim() + space.relation_rank(), space.ambient_dim());
                }
            }
        }
    }
}

#[test]
fn relations_hold_for_larger_n() {
    for n in [2, 3, 5] {
        let ctx = make_context(n).unwrap();
        let adj = verify_adjunctions(&ctx);
        assert!(adj.all_pass(), "{}", adj.render_text());
        let control = adj.checks.iter().find(|c| c.name.starts_with("control")).unwrap();
        assert_eq!(control.detail, format!("f0 g0 = {n}"));
        let zz = verify_zigzags(&ctx);
        assert!(zz.all_pass(), "{}", zz.render_text());
    }
}

#[test]
fn normal_forms_evaluate_like_their_diagrams() {
    let ctx = make_context(2).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for i in 0..60 {
        let s = if i % 2 == 0 { Label::Zero } else { Label::One };
        let d = random_valid_diagram(&mut rng, s, &RandomSpec::default());
        let direct = eval_diagram(&ctx, &d, s).unwrap();
        let via_normal_form = eval_morphism(&ctx, &normalize(&d, Some(s))).unwrap();
        assert_eq!(direct.matrix, via_normal_form.matrix, "{d:?}");
    }
}

#[test]
fn evaluation_is_functorial() {
    let ctx = make_context(3).unwrap();
    let report = functoriality_check(&ctx, 4, 40, 3);
    assert!(report.all_pass(), "{}", report.render_text());
}

#[test]
fn dense_row_reduction() {
    let m = RationalMatrix::from_i64(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
    let rr = m.row_reduce();
    assert_eq!(rr.rank, 2);
    assert_eq!(rr.pivots, vec![0, 1]);
    assert_eq!(rr.kernel.len(), 1);
    for k in &rr.kernel {
        let col = RationalMatrix::from_rows(k.iter().map(|x| vec![x.clone()]).collect());
        assert!(m.mul(&col).is_zero());
    }
}
