//! Printing expressions back into the grammar, and ASCII rendering of normal forms.

use num_traits::One;

use crate::diagram::{DiagramExpr, Endpoint, Generator, Morphism, Node, Side};
use crate::sign_words::SignWord;

pub fn pretty_print(d: &DiagramExpr) -> String {
    match d.node() {
        Node::Empty => "id(1)".into(),
        Node::Generator(g) => match g {
            Generator::Identity(s) => format!("id({})", s.as_char()),
            Generator::Cup(..) => format!("cup({})", g.pair_text()),
            Generator::Cap(..) => format!("cap({})", g.pair_text()),
            Generator::Crossing(..) => format!("x({})", g.pair_text()),
        },
        Node::Compose(a, b) => format!("{} ; {}", pretty_print(a), pretty_print(b)),
        Node::Tensor(a, b) => format!("{} * {}", tensor_operand(a), tensor_operand(b)),
    }
}

fn tensor_operand(d: &DiagramExpr) -> String {
    match d.node() {
        Node::Compose(..) => format!("({})", pretty_print(d)),
        _ => pretty_print(d),
    }
}

/// Arcs as brackets around the boundary circle (bottom left to right, then
/// top right to left), e.g. `(b1 (b2 b3) t1)`.
fn bracket_notation(arcs: &[(Endpoint, Endpoint)], bottom: usize, top: usize) -> String {
    let order = |e: Endpoint| match e.side {
        Side::Bottom => e.index,
        Side::Top => bottom + top - 1 - e.index,
    };
    let mut opens = vec![None; bottom + top];
    for &(a, b) in arcs {
        let (x, y) = if order(a) < order(b) { (a, b) } else { (b, a) };
        opens[order(x)] = Some(true);
        opens[order(y)] = Some(false);
    }
    let mut points: Vec<Endpoint> = (0..bottom).map(Endpoint::bottom).collect();
    points.extend((0..top).rev().map(Endpoint::top));
    let mut out = String::new();
    for (i, p) in points.iter().enumerate() {
        if i > 0 && opens[i] == Some(true) && !out.ends_with('(') {
            out.push(' ');
        }
        match opens[i] {
            Some(true) => out.push_str(&format!("({p}")),
            _ => out.push_str(&format!(" {p})")),
        }
    }
    out
}

fn marks(word: &SignWord, through: &[usize], turn: char) -> String {
    (0..word.len())
        .map(|i| if through.contains(&i) { '|' } else { turn })
        .map(String::from)
        .collect::<Vec<_>>()
        .join(" ")
}

fn spaced(word: &SignWord) -> String {
    word.iter().map(|s| s.as_char().to_string()).collect::<Vec<_>>().join(" ")
}

/// Text rendering of a normal form; the zero morphism renders as `0` and a
/// closed term as its coefficient times any formal circles.
pub fn render_ascii(m: &Morphism) -> String {
    if m.is_zero() {
        return "0".into();
    }
    if m.is_closed() {
        let parts: Vec<String> = m
            .terms()
            .map(|(t, c)| {
                let mut s = c.to_string();
                for (name, k) in [("cw", t.bubbles.cw), ("ccw", t.bubbles.ccw)] {
                    match k {
                        0 => {}
                        1 => s.push_str(&format!(" {name}")),
                        _ => s.push_str(&format!(" {name}^{k}")),
                    }
                }
                s
            })
            .collect();
        return parts.join(" + ");
    }
    let mut blocks = Vec::new();
    for (t, c) in m.terms() {
        let arcs = t.matching.arcs();
        let through_bottom: Vec<usize> =
            arcs.iter().filter(|(a, b)| a.side != b.side).map(|(a, _)| a.index).collect();
        let through_top: Vec<usize> = arcs.iter().filter(|(a, b)| a.side != b.side).map(|(_, b)| b.index).collect();
        let mut block = Vec::new();
        if c.is_one() {
            block.push(String::new());
        } else {
            block.push(format!("{c} *"));
        }
        block.push(format!("  top     {}", spaced(m.top())));
        block.push(format!("          {}", marks(m.top(), &through_top, 'u')));
        block.push(format!("          {}", marks(m.bottom(), &through_bottom, 'n')));
        block.push(format!("  bottom  {}", spaced(m.bottom())));
        block.push(format!("  arcs    {}", bracket_notation(arcs, m.bottom().len(), m.top().len())));
        blocks.push(block.into_iter().filter(|l| !l.is_empty()).collect::<Vec<_>>().join("\n"));
    }
    blocks.join("\n+\n")
}
