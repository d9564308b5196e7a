//! Recursive-descent parser for diagram expressions.
//!
//! ```text
//! expr   := term (';' term)*          vertical, read bottom to top
//! term   := factor ('*' factor)*      horizontal, read left to right
//! factor := 'id(' word ')' | 'cap(' pair ')' | 'cup(' pair ')' | 'x(' pair ')' | '(' expr ')'
//! ```

use std::fmt;

use thiserror::Error;

use crate::diagram::{compose, identity_diagram, tensor, DiagramError, DiagramExpr, Generator};
use crate::sign_words::{Sign, SignWord};

/// Byte offsets `start..end` into the parsed text.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SourceSpan {
    pub start: usize,
    pub end: usize,
}

impl SourceSpan {
    pub fn new(start: usize, end: usize) -> Self {
        debug_assert!(start <= end);
        SourceSpan { start, end }
    }
}

impl fmt::Display for SourceSpan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.start, self.end)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("{message} at {span}")]
    Syntax { message: String, span: SourceSpan },
    #[error("invalid sign {found:?} at {span}; expected '+' or '-'")]
    Sign { found: char, span: SourceSpan },
    #[error("{kind} must join opposite signs, got '{pair}' at {span}")]
    Orientation { kind: &'static str, pair: String, span: SourceSpan },
    #[error("cannot compose at {span}: lower top word '{lower}' differs from upper bottom word '{upper}'")]
    Boundary { lower: SignWord, upper: SignWord, span: SourceSpan },
}

impl ParseError {
    pub fn span(&self) -> SourceSpan {
        match self {
            ParseError::Syntax { span, .. }
            | ParseError::Sign { span, .. }
            | ParseError::Orientation { span, .. }
            | ParseError::Boundary { span, .. } => *span,
        }
    }

    /// The message followed by the input line with a caret under the span.
    pub fn annotate(&self, text: &str) -> String {
        let span = self.span();
        let prefix = text[..span.start.min(text.len())].chars().count();
        let width = text[span.start.min(text.len())..span.end.min(text.len())].chars().count().max(1);
        format!("{self}\n  {text}\n  {}{}", " ".repeat(prefix), "^".repeat(width))
    }
}

/// Parses a sign word; `"1"` denotes the empty word.
pub fn parse_word(text: &str) -> Result<SignWord, ParseError> {
    if text.trim() == "1" {
        return Ok(SignWord::empty());
    }
    text.char_indices()
        .map(|(i, c)| Sign::from_char(c).ok_or(ParseError::Sign { found: c, span: SourceSpan::new(i, i + c.len_utf8()) }))
        .collect()
}

pub fn parse_diagram(text: &str) -> Result<DiagramExpr, ParseError> {
    let mut p = Parser { text, pos: 0 };
    let expr = p.expr()?;
    p.skip_ws();
    if let Some(c) = p.peek() {
        return Err(p.syntax(format!("unexpected {c:?}"), p.pos, p.pos + c.len_utf8()));
    }
    Ok(expr)
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek().filter(|c| c.is_whitespace()) {
            self.pos += c.len_utf8();
        }
    }

    fn syntax(&self, message: impl Into<String>, start: usize, end: usize) -> ParseError {
        ParseError::Syntax { message: message.into(), span: SourceSpan::new(start, end) }
    }

    fn here(&self, message: &str) -> ParseError {
        match self.peek() {
            Some(c) => self.syntax(format!("{message}, found {c:?}"), self.pos, self.pos + c.len_utf8()),
            None => self.syntax(format!("{message}, found end of input"), self.pos, self.pos),
        }
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.here(&format!("expected {c:?}")))
        }
    }

    fn expr(&mut self) -> Result<DiagramExpr, ParseError> {
        let mut acc = self.term()?;
        loop {
            self.skip_ws();
            let start = self.pos;
            if !self.eat(';') {
                break;
            }
            let upper = self.term()?;
            acc = compose(&acc, &upper).map_err(|e| match e {
                DiagramError::Boundary { lower, upper } => {
                    ParseError::Boundary { lower, upper, span: SourceSpan::new(start, self.pos) }
                }
                other => self.syntax(other.to_string(), start, self.pos),
            })?;
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<DiagramExpr, ParseError> {
        let mut acc = self.factor()?;
        while self.eat('*') {
            acc = tensor(&acc, &self.factor()?);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<DiagramExpr, ParseError> {
        self.skip_ws();
        if self.eat('(') {
            let inner = self.expr()?;
            self.expect(')')?;
            return Ok(inner);
        }
        let start = self.pos;
        let name_len = self.text[start..].find(|c: char| !c.is_ascii_alphabetic()).unwrap_or(self.text.len() - start);
        let name = &self.text[start..start + name_len];
        if name.is_empty() {
            return Err(self.here("expected id, cap, cup, x or '('"));
        }
        self.pos += name_len;
        let name_span = SourceSpan::new(start, self.pos);
        self.expect('(')?;
        let arg_start = self.pos;
        let close = self.text[arg_start..]
            .find(')')
            .map(|i| arg_start + i)
            .ok_or_else(|| self.syntax("unclosed '('", start, self.text.len()))?;
        let raw = &self.text[arg_start..close];
        let lead = raw.len() - raw.trim_start().len();
        let arg = raw.trim();
        let arg_pos = arg_start + lead;
        let word = if arg.is_empty() {
            SignWord::empty()
        } else {
            parse_word(arg).map_err(|e| match e {
                ParseError::Sign { found, span } => {
                    ParseError::Sign { found, span: SourceSpan::new(span.start + arg_pos, span.end + arg_pos) }
                }
                other => other,
            })?
        };
        self.pos = close + 1;
        let arg_span = SourceSpan::new(arg_pos, arg_pos + arg.len());
        let pair = |kind: &str| -> Result<(Sign, Sign), ParseError> {
            match word.signs() {
                [a, b] => Ok((*a, *b)),
                _ => Err(ParseError::Syntax { message: format!("{kind} takes two signs, got '{word}'"), span: arg_span }),
            }
        };
        let generator = match name {
            "id" => return Ok(identity_diagram(&word)),
            "cap" | "cup" => {
                let (a, b) = pair(name)?;
                let g = if name == "cap" { Generator::cap(a, b) } else { Generator::cup(a, b) };
                g.map_err(|_| ParseError::Orientation {
                    kind: if name == "cap" { "cap" } else { "cup" },
                    pair: word.to_string(),
                    span: SourceSpan::new(start, self.pos),
                })?
            }
            "x" => {
                let (a, b) = pair("x")?;
                Generator::Crossing(a, b)
            }
            other => {
                return Err(ParseError::Syntax { message: format!("unknown generator '{other}'"), span: name_span })
            }
        };
        Ok(DiagramExpr::generator(generator))
    }
}
