//! Diagram expressions: generator slices under vertical and horizontal composition.

use thiserror::Error;

use super::matching::{Endpoint, Matching};
use crate::sign_words::{Sign, SignWord};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("cannot compose: lower diagram has top word '{lower}' but upper diagram has bottom word '{upper}'")]
    Boundary { lower: SignWord, upper: SignWord },
    #[error("{kind} must join opposite signs, got '{left}{right}'")]
    Orientation { kind: &'static str, left: char, right: char },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GeneratorKind {
    Identity,
    Cup,
    Cap,
    Crossing,
}

/// A single generator. Cups create their two signs on the top boundary, caps
/// consume them from the bottom boundary.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Generator {
    Identity(Sign),
    Cup(Sign, Sign),
    Cap(Sign, Sign),
    Crossing(Sign, Sign),
}

impl Generator {
    pub fn cup(left: Sign, right: Sign) -> Result<Generator, DiagramError> {
        Self::check_turn("cup", left, right)?;
        Ok(Generator::Cup(left, right))
    }

    pub fn cap(left: Sign, right: Sign) -> Result<Generator, DiagramError> {
        Self::check_turn("cap", left, right)?;
        Ok(Generator::Cap(left, right))
    }

    fn check_turn(kind: &'static str, left: Sign, right: Sign) -> Result<(), DiagramError> {
        if left == right {
            return Err(DiagramError::Orientation { kind, left: left.as_char(), right: right.as_char() });
        }
        Ok(())
    }

    pub fn kind(&self) -> GeneratorKind {
        match self {
            Generator::Identity(_) => GeneratorKind::Identity,
            Generator::Cup(..) => GeneratorKind::Cup,
            Generator::Cap(..) => GeneratorKind::Cap,
            Generator::Crossing(..) => GeneratorKind::Crossing,
        }
    }

    pub fn bottom(&self) -> SignWord {
        match *self {
            Generator::Identity(s) => SignWord::new(vec![s]),
            Generator::Cup(..) => SignWord::empty(),
            Generator::Cap(a, b) | Generator::Crossing(a, b) => SignWord::new(vec![a, b]),
        }
    }

    pub fn top(&self) -> SignWord {
        match *self {
            Generator::Identity(s) => SignWord::new(vec![s]),
            Generator::Cup(a, b) => SignWord::new(vec![a, b]),
            Generator::Cap(..) => SignWord::empty(),
            Generator::Crossing(a, b) => SignWord::new(vec![b, a]),
        }
    }

    /// Matching of the generator; crossings have none (they annihilate).
    pub fn matching(&self) -> Option<Matching> {
        let arcs = match self {
            Generator::Identity(_) => vec![(Endpoint::bottom(0), Endpoint::top(0))],
            Generator::Cup(..) => vec![(Endpoint::top(0), Endpoint::top(1))],
            Generator::Cap(..) => vec![(Endpoint::bottom(0), Endpoint::bottom(1))],
            Generator::Crossing(..) => return None,
        };
        Some(Matching::new(self.bottom(), self.top(), arcs).expect("generators are valid matchings"))
    }

    pub fn pair_text(&self) -> String {
        match *self {
            Generator::Identity(s) => s.as_char().to_string(),
            Generator::Cup(a, b) | Generator::Cap(a, b) | Generator::Crossing(a, b) => {
                format!("{}{}", a.as_char(), b.as_char())
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Node {
    /// The empty diagram, identity of the unit object.
    Empty,
    Generator(Generator),
    /// `lower` then `upper`, read bottom to top.
    Compose(Box<DiagramExpr>, Box<DiagramExpr>),
    /// `left` beside `right`.
    Tensor(Box<DiagramExpr>, Box<DiagramExpr>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagramExpr {
    node: Node,
    bottom: SignWord,
    top: SignWord,
}

/// One non-identity generator placed inside a full-width slice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Row {
    /// Index of the leftmost strand the generator occupies.
    pub position: usize,
    pub generator: Generator,
    pub before: SignWord,
    pub after: SignWord,
}

impl Row {
    pub fn left(&self) -> SignWord {
        self.before.slice(0..self.position)
    }

    pub fn right(&self) -> SignWord {
        self.before.slice(self.position + self.generator.bottom().len()..self.before.len())
    }

    pub fn matching(&self) -> Option<Matching> {
        Some(
            Matching::identity(&self.left())
                .tensor(&self.generator.matching()?)
                .tensor(&Matching::identity(&self.right())),
        )
    }
}

impl DiagramExpr {
    pub fn empty() -> Self {
        DiagramExpr { node: Node::Empty, bottom: SignWord::empty(), top: SignWord::empty() }
    }

    pub fn generator(g: Generator) -> Self {
        DiagramExpr { bottom: g.bottom(), top: g.top(), node: Node::Generator(g) }
    }

    pub fn cup(left: Sign, right: Sign) -> Result<Self, DiagramError> {
        Ok(Self::generator(Generator::cup(left, right)?))
    }

    pub fn cap(left: Sign, right: Sign) -> Result<Self, DiagramError> {
        Ok(Self::generator(Generator::cap(left, right)?))
    }

    pub fn crossing(left: Sign, right: Sign) -> Self {
        Self::generator(Generator::Crossing(left, right))
    }

    pub fn node(&self) -> &Node {
        &self.node
    }

    pub fn bottom(&self) -> &SignWord {
        &self.bottom
    }

    pub fn top(&self) -> &SignWord {
        &self.top
    }

    /// Flattens into single-generator slices, bottom to top. In a tensor the
    /// right factor's slices come first.
    pub fn rows(&self) -> Vec<Row> {
        let mut out = Vec::new();
        self.collect_rows(&SignWord::empty(), &SignWord::empty(), &mut out);
        out
    }

    fn collect_rows(&self, left: &SignWord, right: &SignWord, out: &mut Vec<Row>) {
        match &self.node {
            Node::Empty | Node::Generator(Generator::Identity(_)) => {}
            Node::Generator(g) => out.push(Row {
                position: left.len(),
                generator: *g,
                before: left.concat(&g.bottom()).concat(right),
                after: left.concat(&g.top()).concat(right),
            }),
            Node::Compose(lower, upper) => {
                lower.collect_rows(left, right, out);
                upper.collect_rows(left, right, out);
            }
            Node::Tensor(a, b) => {
                b.collect_rows(&left.concat(&a.bottom), right, out);
                a.collect_rows(left, &b.top.concat(right), out);
            }
        }
    }

    pub fn contains_crossing(&self) -> bool {
        match &self.node {
            Node::Empty => false,
            Node::Generator(g) => g.kind() == GeneratorKind::Crossing,
            Node::Compose(a, b) | Node::Tensor(a, b) => a.contains_crossing() || b.contains_crossing(),
        }
    }

    /// Number of generator leaves, identities included.
    pub fn size(&self) -> usize {
        match &self.node {
            Node::Empty => 0,
            Node::Generator(_) => 1,
            Node::Compose(a, b) | Node::Tensor(a, b) => a.size() + b.size(),
        }
    }

    /// A diagram realizing a loop-free matching: U-turns on the bottom, then
    /// through strands, then U-turns to the top.
    pub fn from_matching(m: &Matching) -> DiagramExpr {
        let mut lower = identity_diagram(m.bottom());
        let mut current: Vec<(usize, Sign)> = m.bottom().iter().enumerate().collect();
        let partner = |side, index| {
            m.arcs().iter().find_map(|&(a, b)| {
                if a.side == side && a.index == index {
                    Some(b)
                } else if b.side == side && b.index == index {
                    Some(a)
                } else {
                    None
                }
            })
        };
        use super::matching::Side;
        // close innermost caps first: adjacent survivors joined by an arc
        while let Some(pos) = current.windows(2).position(|pair| {
            partner(Side::Bottom, pair[0].0) == Some(Endpoint::bottom(pair[1].0))
        }) {
            let row = slice_diagram(
                &current[..pos].iter().map(|p| p.1).collect(),
                Generator::Cap(current[pos].1, current[pos + 1].1),
                &current[pos + 2..].iter().map(|p| p.1).collect(),
            );
            lower = compose(&lower, &row).expect("slice fits");
            current.drain(pos..pos + 2);
        }

        let mut upper_rows = Vec::new();
        let mut current: Vec<(usize, Sign)> = m.top().iter().enumerate().collect();
        while let Some(pos) = current
            .windows(2)
            .position(|pair| partner(Side::Top, pair[0].0) == Some(Endpoint::top(pair[1].0)))
        {
            upper_rows.push(slice_diagram(
                &current[..pos].iter().map(|p| p.1).collect(),
                Generator::Cup(current[pos].1, current[pos + 1].1),
                &current[pos + 2..].iter().map(|p| p.1).collect(),
            ));
            current.drain(pos..pos + 2);
        }
        upper_rows
            .into_iter()
            .rev()
            .fold(lower, |acc, row| compose(&acc, &row).expect("slice fits"))
    }
}

fn slice_diagram(left: &SignWord, g: Generator, right: &SignWord) -> DiagramExpr {
    tensor(&tensor(&identity_diagram(left), &DiagramExpr::generator(g)), &identity_diagram(right))
}

pub fn identity_diagram(w: &SignWord) -> DiagramExpr {
    w.iter()
        .map(|s| DiagramExpr::generator(Generator::Identity(s)))
        .reduce(|a, b| tensor(&a, &b))
        .unwrap_or_else(DiagramExpr::empty)
}

/// `a` to the left of `b`. The empty diagram is a strict unit.
pub fn tensor(a: &DiagramExpr, b: &DiagramExpr) -> DiagramExpr {
    if a.node == Node::Empty {
        return b.clone();
    }
    if b.node == Node::Empty {
        return a.clone();
    }
    DiagramExpr {
        bottom: a.bottom.concat(&b.bottom),
        top: a.top.concat(&b.top),
        node: Node::Tensor(Box::new(a.clone()), Box::new(b.clone())),
    }
}

/// `lower` then `upper`.
pub fn compose(lower: &DiagramExpr, upper: &DiagramExpr) -> Result<DiagramExpr, DiagramError> {
    if lower.top != upper.bottom {
        return Err(DiagramError::Boundary { lower: lower.top.clone(), upper: upper.bottom.clone() });
    }
    if lower.node == Node::Empty {
        return Ok(upper.clone());
    }
    if upper.node == Node::Empty {
        return Ok(lower.clone());
    }
    Ok(DiagramExpr {
        bottom: lower.bottom.clone(),
        top: upper.top.clone(),
        node: Node::Compose(Box::new(lower.clone()), Box::new(upper.clone())),
    })
}
