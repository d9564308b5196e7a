//! End-to-end acceptance criteria; prints one PASS/FAIL line per criterion.

use std::process::ExitCode;
use std::time::Instant;

use fermion_diagrams::bimodule::{make_context, soundness_check, verify_adjunctions, verify_dimensions, verify_zigzags};
use fermion_diagrams::diagram::random::{random_diagram, RandomSpec};
use fermion_diagrams::diagram::reduce::{witness_composites, Atom};
use fermion_diagrams::diagram::{
    compose, direct_sum_witness, identity_diagram, normalize, oracle_sweep, reduce_word, tensor, DiagramExpr,
    Generator,
};
use fermion_diagrams::label::Label;
use fermion_diagrams::sign_words::{hamiltonian, hamiltonian_eigenvalue, matrix_rep, normal_order, Matrix2, Sign, SignWord};
use fermion_diagrams::two_cat::{categorical_inner, state};
use fermion_diagrams::Rational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn grothendieck_relation() -> Outcome {
    let r = direct_sum_witness();
    let names: Vec<&str> = r.checks.iter().map(|c| c.name.as_str()).collect();
    let labeled = r.checks.iter().filter(|c| c.name.contains("at label")).count();
    if r.all_pass() && r.checks.len() == 7 && labeled == 2 {
        Ok(format!("{} identities hold (5 unlabeled, sum at both labels)", r.checks.len()))
    } else {
        Err(format!("failures: {:?} of {names:?}", r.failures().map(|c| &c.name).collect::<Vec<_>>()))
    }
}

fn orthonormality() -> Outcome {
    let psi = [state(0).map_err(|e| e.to_string())?, state(1).map_err(|e| e.to_string())?];
    let mut gram = [[0usize; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            gram[i][j] = categorical_inner(&psi[i], &psi[j]).map_err(|e| e.to_string())?;
        }
    }
    if gram == [[1, 0], [0, 1]] {
        Ok(format!("Gram matrix {gram:?}"))
    } else {
        Err(format!("Gram matrix {gram:?}"))
    }
}

fn oracle() -> Outcome {
    let r = oracle_sweep(8, Label::Zero);
    if r.pairs == 511 * 511 && r.mismatches.is_empty() {
        Ok(format!("{} pairs, {} nonzero, 0 mismatches", r.pairs, r.nonzero))
    } else {
        Err(format!("{} mismatches, first {:?}", r.mismatches.len(), r.mismatches.first()))
    }
}

fn with_crossing(rng: &mut ChaCha8Rng) -> DiagramExpr {
    let spec = RandomSpec { max_width: 6, rows: rng.gen_range(1..=6), crossing_rate: 0.3 };
    let d = random_diagram(rng, &spec);
    if d.contains_crossing() {
        return d;
    }
    // force one crossing on top, opening a cup first if the top is too narrow
    let top = d.top().clone();
    let d = if top.len() < 2 {
        let cup = DiagramExpr::cup(Sign::Plus, Sign::Minus).unwrap();
        compose(&d, &tensor(&cup, &identity_diagram(&top))).unwrap()
    } else {
        d
    };
    let top = d.top().clone();
    let i = rng.gen_range(0..top.len() - 1);
    let row = tensor(
        &tensor(
            &identity_diagram(&top.slice(0..i)),
            &DiagramExpr::generator(Generator::Crossing(top.get(i).unwrap(), top.get(i + 1).unwrap())),
        ),
        &identity_diagram(&top.slice(i + 2..top.len())),
    );
    compose(&d, &row).unwrap()
}

fn nilpotence_and_crossings() -> Outcome {
    let sources = [None, Some(Label::Zero), Some(Label::One)];
    let repeats: Vec<SignWord> = SignWord::enumerate(8).into_iter().filter(SignWord::has_repeat).collect();
    for w in &repeats {
        for s in sources {
            if !normalize(&identity_diagram(w), s).is_zero() {
                return Err(format!("id('{w}') at {s:?} is nonzero"));
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for i in 0..200 {
        let d = with_crossing(&mut rng);
        assert!(d.contains_crossing());
        if d.rows().iter().any(|r| r.before.len() > 6 || r.after.len() > 6) {
            return Err(format!("sample {i} too wide"));
        }
        for s in sources {
            if !normalize(&d, s).is_zero() {
                return Err(format!("crossing sample {i} survives at {s:?}"));
            }
        }
    }
    Ok(format!("{} nilpotent identities and 200 crossing diagrams vanish", repeats.len()))
}

fn predicted_atom(w: &SignWord) -> Atom {
    if w.has_repeat() {
        return Atom::Zero;
    }
    let last = w.signs().last().copied();
    match (w.len(), last) {
        (0, _) => Atom::Unit,
        (n, Some(Sign::Plus)) if n % 2 == 1 => Atom::Plus,
        (n, _) if n % 2 == 1 => Atom::Minus,
        (_, Some(Sign::Plus)) => Atom::MinusPlus,
        _ => Atom::PlusMinus,
    }
}

fn word_reduction() -> Outcome {
    let mut checked = 0;
    for w in SignWord::enumerate(8) {
        let r = reduce_word(&w, None);
        if r.atom != predicted_atom(&w) {
            return Err(format!("'{w}' reduced to {}", r.atom));
        }
        for source in [None, Some(Label::Zero), Some(Label::One)] {
            let r = reduce_word(&w, source);
            if let Some(pairs) = witness_composites(&r, source) {
                checked += 1;
                for (got, want) in pairs {
                    if want.is_zero() || !got.equivalent(&want) {
                        return Err(format!("witnesses of '{w}' at {source:?} are not inverse"));
                    }
                }
            }
        }
    }
    Ok(format!("511 words, {checked} witness pairs verified"))
}

fn bimodule_representation() -> Outcome {
    let mut lines = Vec::new();
    for (n, max_len) in [(2, 6), (3, 6), (5, 4)] {
        let ctx = make_context(n).map_err(|e| e.to_string())?;
        let mut r = verify_dimensions(&ctx, max_len);
        r.extend(verify_adjunctions(&ctx));
        r.extend(verify_zigzags(&ctx));
        if !r.all_pass() {
            return Err(format!("n = {n}: {:?}", r.failures().collect::<Vec<_>>()));
        }
        let control = r.checks.iter().find(|c| c.name.starts_with("control")).expect("control present");
        if control.detail != format!("f0 g0 = {n}") {
            return Err(format!("control at n = {n}: {}", control.detail));
        }
        lines.push(format!("n={n}: {} checks", r.checks.len()));
    }
    Ok(lines.join(", "))
}

fn soundness() -> Outcome {
    let ctx = make_context(2).map_err(|e| e.to_string())?;
    let r = soundness_check(&ctx, 6, 200, 7);
    if r.all_pass() {
        Ok(r.checks[0].detail.clone())
    } else {
        Err(r.render_text())
    }
}

fn normal_ordering() -> Outcome {
    let words = SignWord::enumerate(10);
    for w in &words {
        if normal_order(w).matrix() != matrix_rep(w) {
            return Err(format!("normal order of '{w}' differs"));
        }
    }
    let half = Rational::new(1.into(), 2.into());
    let e0 = hamiltonian_eigenvalue(0).map_err(|e| e.to_string())?;
    let e1 = hamiltonian_eigenvalue(1).map_err(|e| e.to_string())?;
    let h = hamiltonian().matrix();
    let zero = Rational::from_integer(0.into());
    let diag = Matrix2([[-half.clone(), zero.clone()], [zero, half.clone()]]);
    if e0 != -half.clone() || e1 != half || h != diag {
        return Err(format!("eigenvalues {e0}, {e1}"));
    }
    Ok(format!("{} words; H eigenvalues {e0}, {e1}", words.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("1 Grothendieck relation", grothendieck_relation),
        ("2 orthonormality of states", orthonormality),
        ("3 hom dimension vs Fock oracle", oracle),
        ("4 nilpotence and crossing annihilation", nilpotence_and_crossings),
        ("5 word reduction", word_reduction),
        ("6 bimodule representation", bimodule_representation),
        ("7 soundness of the 2-functor", soundness),
        ("8 normal ordering", normal_ordering),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS criterion {name}: {detail} ({secs:.2}s)"),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {name}: {detail} ({secs:.2}s)");
            }
        }
    }
    println!("acceptance: {}/8 criteria passed", 8 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
