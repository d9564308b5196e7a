//! Command-line front end. `run` returns the process exit code: 0 on
//! success, 1 when a verification fails, 2 on usage or parse errors.

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::bimodule::{make_context, verify_adjunctions, verify_all, verify_dimensions, verify_zigzags};
use crate::bimodule::{functoriality_check, soundness_check};
use crate::diagram::{direct_sum_witness, hom_dim, normalize, oracle_sweep, reduce_word};
use crate::label::Label;
use crate::lang::{parse_diagram, parse_word, pretty_print, render_ascii};
use crate::report::Report;
use crate::sign_words::{inner_product_from, normal_order};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    /// Splitting of the unit object through cups and caps.
    Iso,
    /// The four U-turn adjunction identities.
    Adjunction,
    /// Zig-zag identities in the representation.
    Zigzag,
    /// Evaluation agrees with evaluation of the normal form.
    Soundness,
    /// Hom dimensions against the Fock inner product.
    Sweep,
    /// Quotient dimensions of tensor spaces.
    Dimension,
    /// Evaluation respects composition and tensor.
    Functoriality,
    /// Everything above.
    All,
}

#[derive(Debug, Parser)]
#[command(name = "fermion-diagrams", version, about = "String diagrams for the categorified fermion algebra")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Label of the rightmost region.
    #[arg(long, default_value_t = 0, value_parser = clap::value_parser!(u8).range(0..=1), global = true)]
    pub source: u8,
    /// Matrix size of the representation.
    #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u64).range(2..), global = true)]
    pub n: u64,
    /// Longest word used by sweeps.
    #[arg(long, default_value_t = 8, global = true)]
    pub max_len: usize,
    /// Number of random samples.
    #[arg(long, default_value_t = 200, global = true)]
    pub samples: usize,
    /// Seed for every randomized check.
    #[arg(long, default_value_t = 0, global = true)]
    pub seed: u64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Normal form of a diagram expression.
    Normalize {
        #[arg(allow_hyphen_values = true)]
        diagram: String,
        /// Work without region labels.
        #[arg(long)]
        unlabeled: bool,
    },
    /// Hom dimension from B to A next to the Fock inner product.
    Inner {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Run a verification suite.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
    },
    /// Reduce a word to its atom, with witness diagrams.
    Reduce {
        #[arg(allow_hyphen_values = true)]
        word: String,
        #[arg(long)]
        unlabeled: bool,
    },
    /// Normal-ordered form of the operator a word names.
    NormalOrder {
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
}

struct Output {
    text: String,
    json: serde_json::Value,
    code: i32,
}

fn report_output(report: Report) -> Output {
    Output {
        text: report.render_text(),
        code: if report.all_pass() { 0 } else { 1 },
        json: serde_json::to_value(&report).expect("reports serialize"),
    }
}

fn sweep_report(max_len: usize) -> Report {
    let mut report = Report::new(None);
    for s in Label::ALL {
        let r = oracle_sweep(max_len, s);
        report.push(
            format!("hom_dim = Fock inner product from |{s}>"),
            r.mismatches.is_empty(),
            format!("{} pairs, {} nonzero, {} mismatches", r.pairs, r.nonzero, r.mismatches.len()),
        );
        for m in r.mismatches.iter().take(5) {
            report.push("mismatch", false, format!("'{}' -> '{}': {} vs {}", m.bottom, m.top, m.hom_dim, m.oracle));
        }
    }
    report
}

fn verify(cli: &Cli, suite: Suite) -> Result<Output, String> {
    let n = cli.n as usize;
    let ctx = || make_context(n).map_err(|e| e.to_string());
    let report = match suite {
        Suite::Iso => direct_sum_witness(),
        Suite::Sweep => sweep_report(cli.max_len),
        Suite::Adjunction => verify_adjunctions(&ctx()?),
        Suite::Zigzag => verify_zigzags(&ctx()?),
        Suite::Soundness => soundness_check(&ctx()?, cli.max_len, cli.samples, cli.seed),
        Suite::Dimension => verify_dimensions(&ctx()?, cli.max_len),
        Suite::Functoriality => functoriality_check(&ctx()?, cli.max_len, cli.samples, cli.seed),
        Suite::All => {
            let mut r = direct_sum_witness();
            r.extend(sweep_report(cli.max_len));
            let ctx = ctx()?;
            r.extend(verify_all(&ctx, cli.max_len.min(6), cli.samples, cli.seed));
            r.n = Some(n);
            r
        }
    };
    Ok(report_output(report))
}

fn execute(cli: &Cli) -> Result<Output, String> {
    let source = Label::new(cli.source.into()).expect("clap restricts the range");
    match &cli.command {
        Command::Normalize { diagram, unlabeled } => {
            let d = parse_diagram(diagram).map_err(|e| e.annotate(diagram))?;
            let m = normalize(&d, (!unlabeled).then_some(source));
            Ok(Output { text: render_ascii(&m), json: m.to_json(), code: 0 })
        }
        Command::Inner { a, b } => {
            let wa = parse_word(a).map_err(|e| e.annotate(a))?;
            let wb = parse_word(b).map_err(|e| e.annotate(b))?;
            let dim = hom_dim(&wb, &wa, source);
            let oracle = inner_product_from(&wa, &wb, cli.source);
            let agree = dim as u64 == oracle;
            Ok(Output {
                text: format!("{dim} = {oracle}{}", if agree { "" } else { "  MISMATCH" }),
                json: json!({"a": wa, "b": wb, "source": source, "hom_dim": dim, "inner_product": oracle, "agree": agree}),
                code: if agree { 0 } else { 1 },
            })
        }
        Command::Verify { suite } => verify(cli, *suite),
        Command::Reduce { word, unlabeled } => {
            let w = parse_word(word).map_err(|e| e.annotate(word))?;
            let label = (!unlabeled).then_some(source);
            let r = reduce_word(&w, label);
            let atom_word = r.atom.word().map(|w| if w.is_empty() { "1".to_string() } else { w.to_string() });
            let (down, up) = match r.atom.word() {
                Some(_) => (Some(pretty_print(&r.down)), Some(pretty_print(&r.up))),
                None => (None, None),
            };
            let mut text = format!("{}", r.atom);
            if let (Some(aw), Some(d), Some(u)) = (&atom_word, &down, &up) {
                text.push_str(&format!(" ({aw})\ndown: {d}\nup:   {u}"));
            }
            Ok(Output {
                text,
                json: json!({"word": w, "source": label, "atom": r.atom, "atom_word": atom_word, "down": down, "up": up}),
                code: 0,
            })
        }
        Command::NormalOrder { word } => {
            let w = parse_word(word).map_err(|e| e.annotate(word))?;
            let e = normal_order(&w);
            let coeffs: Vec<String> = e.0.iter().map(ToString::to_string).collect();
            Ok(Output {
                text: e.to_string(),
                json: json!({"word": w, "normal_order": e.to_string(), "basis": ["1", "f†", "f", "f†f"], "coefficients": coeffs}),
                code: 0,
            })
        }
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            let _ = if code == 0 { write!(out, "{rendered}") } else { write!(err, "{rendered}") };
            return if code == 0 { 0 } else { 2 };
        }
    };
    match execute(&cli) {
        Ok(o) => {
            let body = match cli.format {
                Format::Text => o.text,
                Format::Json => serde_json::to_string_pretty(&o.json).expect("json values serialize"),
            };
            let _ = writeln!(out, "{}", body.trim_end());
            o.code
        }
        Err(message) => {
            let _ = writeln!(err, "error: {message}");
            2
        }
    }
}
