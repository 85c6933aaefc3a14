//! Text grammar for monomial ideals.
//!
//! ```text
//! ideal     := '0' | generator (',' generator)*     (empty input is the zero ideal)
//! generator := factor ('*' factor)*
//! factor    := 'x' INDEX ('^' EXPONENT)? | '1'
//! ```
//!
//! Whitespace is insignificant. Variable indices are 1-based and positive;
//! explicit exponents must be positive. Repeated variables within one
//! generator multiply, so `x1*x1` equals `x1^2`. The variable count is the
//! largest index mentioned unless an explicit count overrides it.

use std::fmt;

use multishell::{Exponent, MonomialIdeal};

/// A syntax or range error, carrying the zero-based byte offset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "syntax error at offset {}: {}", self.position, self.message)
    }
}

impl std::error::Error for ParseError {}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Cursor {
            bytes: text.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError {
            position: self.pos,
            message: message.into(),
        }
    }

    fn number(&mut self, what: &str) -> Result<u64, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error(format!("expected {what}")));
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| ParseError {
                position: start,
                message: format!("{what} out of range"),
            })
    }
}

/// One generator as sparse (index, exponent) pairs; indices are zero-based.
fn parse_generator(cur: &mut Cursor) -> Result<Vec<(usize, u32)>, ParseError> {
    let mut factors: Vec<(usize, u32)> = Vec::new();
    loop {
        match cur.peek() {
            Some(b'x') => {
                cur.pos += 1;
                let index_pos = cur.pos;
                let index = cur.number("variable index")?;
                if index == 0 {
                    return Err(ParseError {
                        position: index_pos,
                        message: "variable index must be at least 1".into(),
                    });
                }
                let mut exponent = 1u64;
                if cur.peek() == Some(b'^') {
                    let caret_pos = cur.pos;
                    cur.pos += 1;
                    exponent = cur.number("exponent").map_err(|mut e| {
                        e.position = caret_pos;
                        e.message = "missing exponent after '^'".into();
                        e
                    })?;
                    if exponent == 0 {
                        return Err(ParseError {
                            position: caret_pos,
                            message: "exponent must be positive".into(),
                        });
                    }
                }
                factors.push((
                    (index - 1) as usize,
                    u32::try_from(exponent).map_err(|_| ParseError {
                        position: index_pos,
                        message: "exponent out of range".into(),
                    })?,
                ));
            }
            Some(b'1') => {
                cur.pos += 1;
            }
            _ => return Err(cur.error("expected a factor ('x<i>', 'x<i>^<e>' or '1')")),
        }
        if cur.peek() == Some(b'*') {
            cur.pos += 1;
        } else {
            return Ok(factors);
        }
    }
}

/// Parses the comma-separated generator list into a minimalized ideal.
///
/// `vars` overrides the inferred variable count; it must cover every index
/// mentioned. Inputs without any variable (`0`, `1`, the empty string)
/// require `vars`.
pub fn parse_ideal(text: &str, vars: Option<usize>) -> Result<MonomialIdeal, ParseError> {
    let trimmed = text.trim();
    if trimmed.is_empty() || trimmed == "0" {
        let n = vars.ok_or(ParseError {
            position: 0,
            message: "cannot infer the variable count; pass it explicitly".into(),
        })?;
        return Ok(MonomialIdeal::zero(n));
    }

    let mut cur = Cursor::new(text);
    let mut generators: Vec<Vec<(usize, u32)>> = vec![parse_generator(&mut cur)?];
    while cur.peek() == Some(b',') {
        cur.pos += 1;
        generators.push(parse_generator(&mut cur)?);
    }
    if cur.peek().is_some() {
        return Err(cur.error("unexpected trailing input"));
    }

    let max_index = generators
        .iter()
        .flatten()
        .map(|&(k, _)| k + 1)
        .max()
        .unwrap_or(0);
    let n = match vars {
        Some(n) if n >= max_index => n,
        Some(n) => {
            return Err(ParseError {
                position: 0,
                message: format!("variable count {n} is below the largest index {max_index}"),
            })
        }
        None if max_index > 0 => max_index,
        None => {
            return Err(ParseError {
                position: 0,
                message: "cannot infer the variable count; pass it explicitly".into(),
            })
        }
    };

    Ok(MonomialIdeal::from_generators(
        n,
        generators.into_iter().map(|factors| {
            let mut coords = vec![0u32; n];
            for (k, e) in factors {
                coords[k] += e;
            }
            Exponent::new(coords)
        }),
    ))
}
