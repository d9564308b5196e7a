//! Exact checks of the representation: adjunctions, zig-zags, dimensions,
//! soundness of normalization and functoriality.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::eval::{
    eval_diagram, eval_morphism, is_unit, replay_ambient, scalar, unit_vector, uturn_map, uturn_map_scaled, LinearMap,
    UTurn,
};
use super::linalg::RationalMatrix;
use super::space::{RepContext, TensorSpace};
use crate::diagram::random::{random_valid_diagram, random_valid_from, RandomSpec};
use crate::diagram::{normalize, tensor};
use crate::label::{target_of, Label};
use crate::lang::{parse_diagram, pretty_print};
use crate::report::Report;
use crate::sign_words::SignWord;
use crate::Rational;

fn shape(m: &LinearMap) -> String {
    format!("{}x{}", m.matrix.rows(), m.matrix.cols())
}

/// `f0 g0 = id`, `g0 f0 = id`, `f1 g1 = id`, `g1 f1 = id`, plus the control
/// that dropping `1/n` from `g0` turns `f0 g0` into `n·id`.
pub fn verify_adjunctions(ctx: &RepContext) -> Report {
    let [f0, g0, f1, g1] = UTurn::ALL.map(|k| uturn_map(ctx, k));
    let mut report = Report::new(Some(ctx.n()));
    for (name, map) in [
        ("f0 g0 = id(R0)", g0.then(&f0)),
        ("g0 f0 = id(N (x)_R1 M)", f0.then(&g0)),
        ("f1 g1 = id(R1)", g1.then(&f1)),
        ("g1 f1 = id(M (x)_R0 N)", f1.then(&g1)),
    ] {
        report.push(name, map.is_identity(), shape(&map));
    }
    let bare = uturn_map_scaled(ctx, UTurn::G0, &Rational::from_integer(1.into()));
    let product = bare.then(&f0);
    let expected = RationalMatrix::identity(1).scale(&scalar(ctx.n()));
    report.push(
        "control: g0 without 1/n gives f0 g0 = n id",
        product.matrix == expected && !product.is_identity(),
        format!("f0 g0 = {}", product.matrix.get(0, 0)),
    );
    report
}

const ZIGZAGS: [(&str, &str, Label); 4] = [
    ("M zig-zag (cup left)", "(cup(+-) * id(+)) ; (id(+) * cap(-+))", Label::Zero),
    ("M zig-zag (cup right)", "(id(+) * cup(-+)) ; (cap(+-) * id(+))", Label::Zero),
    ("N zig-zag (cup left)", "(cup(-+) * id(-)) ; (id(-) * cap(+-))", Label::One),
    ("N zig-zag (cup right)", "(id(-) * cup(+-)) ; (cap(-+) * id(-))", Label::One),
];

/// The four oriented zig-zags as matrices and element by element, and the
/// strand decorated by a circle on either side.
pub fn verify_zigzags(ctx: &RepContext) -> Report {
    let mut report = Report::new(Some(ctx.n()));
    for (name, text, source) in ZIGZAGS {
        let d = parse_diagram(text).expect("built-in diagram");
        let map = eval_diagram(ctx, &d, source).expect("valid boundary");
        report.push(name, map.is_identity(), shape(&map));
        // g = 1 (x) g = sum e_i (x) e^i (x) g, then contract
        let bottom = map.domain.clone();
        let ok = (0..bottom.dim()).all(|k| {
            let image = replay_ambient(ctx, &d, source, &unit_vector(bottom.section(k))).expect("valid boundary");
            is_unit(&image, k)
        });
        report.push(format!("{name}, element replay"), ok, format!("{} basis vectors", bottom.dim()));
    }
    for (name, text) in [
        ("strand with circle on its right", "id(+) * (cup(-+) ; cap(-+))"),
        ("strand with circle on its left", "(cup(+-) ; cap(+-)) * id(+)"),
    ] {
        let d = parse_diagram(text).expect("built-in diagram");
        let map = eval_diagram(ctx, &d, Label::Zero).expect("valid boundary");
        report.push(name, map.is_identity(), shape(&map));
    }
    report
}

/// Quotient dimensions of every nonzero word up to `max_len`, grouped by
/// (source, target).
pub fn verify_dimensions(ctx: &RepContext, max_len: usize) -> Report {
    let mut report = Report::new(Some(ctx.n()));
    for s in Label::ALL {
        for t in Label::ALL {
            let expected = ctx.predicted_dim(s, t);
            let mut words = 0;
            let mut bad = Vec::new();
            for w in SignWord::enumerate(max_len) {
                if target_of(&w, s) != Some(t) {
                    continue;
                }
                words += 1;
                let dim = ctx.space_of_word(&w, s).expect("nonzero word").dim();
                if dim != expected {
                    bad.push(format!("'{w}' has {dim}"));
                }
            }
            let detail = if bad.is_empty() { format!("{words} words") } else { bad.join(", ") };
            report.push(format!("dim for {s} -> {t} is {expected}"), bad.is_empty(), detail);
        }
    }
    report
}

fn samples_with<T: Send>(seed: u64, samples: usize, make: impl Fn(&mut ChaCha8Rng, usize) -> T) -> Vec<T> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..samples).map(|i| make(&mut rng, i)).collect()
}

/// Evaluating a random diagram equals evaluating its normal form.
pub fn soundness_check(ctx: &RepContext, max_len: usize, samples: usize, seed: u64) -> Report {
    let cases = samples_with(seed, samples, |rng, i| {
        let source = Label::ALL[i % 2];
        let spec = RandomSpec { max_width: max_len, rows: rng.gen_range(1..=8), crossing_rate: 0.0 };
        (source, random_valid_diagram(rng, source, &spec))
    });
    let mismatches: Vec<String> = cases
        .par_iter()
        .filter_map(|(source, d)| {
            let direct = eval_diagram(ctx, d, *source).ok()?;
            let normal = eval_morphism(ctx, &normalize(d, Some(*source))).ok()?;
            (direct.matrix != normal.matrix).then(|| format!("source {source}: {}", pretty_print(d)))
        })
        .collect();
    let mut report = Report::new(Some(ctx.n()));
    let nonzero = cases.iter().filter(|(s, d)| !normalize(d, Some(*s)).is_zero()).count();
    report.push(
        "evaluation is invariant under normalization",
        mismatches.is_empty(),
        format!("{samples} samples ({nonzero} nonzero), {} mismatches", mismatches.len()),
    );
    for m in mismatches.into_iter().take(5) {
        report.push("mismatch", false, m);
    }
    report
}

fn inclusion(sum: &TensorSpace, left: &TensorSpace, right: &TensorSpace) -> RationalMatrix {
    let mut m = RationalMatrix::zeros(sum.dim(), left.dim() * right.dim());
    let width = sum.n().pow(right.word().len() as u32);
    for i in 0..left.dim() {
        for j in 0..right.dim() {
            let ambient = left.section(i) * width + right.section(j);
            for (r, v) in sum.project(&unit_vector(ambient)).into_iter().enumerate() {
                m.set(r, i * right.dim() + j, v);
            }
        }
    }
    m
}

/// Evaluation respects vertical composition and horizontal juxtaposition.
pub fn functoriality_check(ctx: &RepContext, max_len: usize, samples: usize, seed: u64) -> Report {
    let half = (max_len / 2).max(1);
    let cases = samples_with(seed, samples, |rng, i| {
        let source = Label::ALL[i % 2];
        let spec = RandomSpec { max_width: half, rows: rng.gen_range(1..=4), crossing_rate: 0.0 };
        let a = random_valid_diagram(rng, source, &spec);
        let b = random_valid_from(rng, a.top(), source, &spec);
        let inner = target_of(b.bottom(), source).expect("valid word");
        let c = random_valid_diagram(rng, inner, &spec);
        (source, a, b, c, inner)
    });
    let results: Vec<(bool, Option<bool>)> = cases
        .par_iter()
        .map(|(source, a, b, c, inner)| {
            let ea = eval_diagram(ctx, a, *source).expect("valid");
            let eb = eval_diagram(ctx, b, *source).expect("valid");
            let composed = crate::diagram::compose(a, b).expect("interfaces agree");
            let eab = eval_diagram(ctx, &composed, *source).expect("valid");
            let vertical = eab.matrix == eb.matrix.mul(&ea.matrix);

            // c sits to the left of b
            let ec = eval_diagram(ctx, c, *inner).expect("valid");
            let spaces = [&ec.domain, &ec.codomain, &eb.domain, &eb.codomain];
            let horizontal = (!spaces.iter().any(|s| s.is_ring())).then(|| {
                let cb = tensor(c, b);
                let ecb = eval_diagram(ctx, &cb, *source).expect("valid");
                let lift_bottom = inclusion(&ecb.domain, &ec.domain, &eb.domain);
                let lift_top = inclusion(&ecb.codomain, &ec.codomain, &eb.codomain);
                ecb.matrix.mul(&lift_bottom) == lift_top.mul(&ec.matrix.kron(&eb.matrix))
            });
            (vertical, horizontal)
        })
        .collect();
    let vertical_bad = results.iter().filter(|r| !r.0).count();
    let tensor_cases = results.iter().filter(|r| r.1.is_some()).count();
    let tensor_bad = results.iter().filter(|r| r.1 == Some(false)).count();
    let mut report = Report::new(Some(ctx.n()));
    report.push("composition", vertical_bad == 0, format!("{samples} samples, {vertical_bad} mismatches"));
    report.push("tensor", tensor_bad == 0, format!("{tensor_cases} samples, {tensor_bad} mismatches"));
    report
}

/// Every representation check for one context.
pub fn verify_all(ctx: &RepContext, max_len: usize, samples: usize, seed: u64) -> Report {
    let mut r = verify_dimensions(ctx, max_len);
    r.extend(verify_adjunctions(ctx));
    r.extend(verify_zigzags(ctx));
    r.extend(soundness_check(ctx, max_len, samples, seed));
    r.extend(functoriality_check(ctx, max_len, samples, seed));
    r
}
