//! Concrete syntax for tangle expressions.
//!
//! Grammar (whitespace insensitive):
//!
//! ```text
//! expr := gen | id(dir) | tensor(e, ..) | compose(e, ..) | rot(e) | pow(e, int)
//! gen  := (X+ | X-) @ [0-3] | cupL | cupR | capL | capR
//! dir  := up | down
//! ```
//!
//! `compose` lists factors bottom to top; `pow(e, n)` stacks `n` copies.
//! The parser typechecks boundary signatures before returning.

use super::{CrossingSign, Dir, Generator, TangleExpr};
use crate::error::{Error, Result};

pub fn parse_tangle(text: &str) -> Result<TangleExpr> {
    let mut p = Parser { bytes: text.as_bytes(), pos: 0 };
    let expr = p.expr()?;
    p.skip_ws();
    if p.pos != p.bytes.len() {
        return Err(p.err("unexpected trailing input"));
    }
    expr.signature()?;
    Ok(expr)
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse { pos: self.pos, msg: msg.into() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(format!("expected '{}'", c as char)))
        }
    }

    fn word(&mut self) -> String {
        let start = self.pos;
        while self
            .bytes
            .get(self.pos)
            .is_some_and(|b| b.is_ascii_alphabetic())
        {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.bytes[start..self.pos]).into_owned()
    }

    fn int(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        if matches!(self.peek(), Some(b'+') | Some(b'-')) {
            self.pos += 1;
        }
        while self.bytes.get(self.pos).is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        let text = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
        text.parse::<i64>().map_err(|_| Error::Parse { pos: start, msg: "expected an integer".into() })
    }

    fn args(&mut self) -> Result<Vec<TangleExpr>> {
        self.expect(b'(')?;
        let mut items = vec![self.expr()?];
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b',') => {
                    self.pos += 1;
                    items.push(self.expr()?);
                }
                Some(b')') => {
                    self.pos += 1;
                    return Ok(items);
                }
                _ => return Err(self.err("expected ',' or ')'")),
            }
        }
    }

    fn crossing(&mut self, sign: CrossingSign) -> Result<TangleExpr> {
        self.expect(b'@')?;
        self.skip_ws();
        match self.peek() {
            Some(c @ b'0'..=b'3') => {
                self.pos += 1;
                Ok(TangleExpr::Gen(Generator::crossing(sign, c - b'0')))
            }
            _ => Err(self.err("expected a rotation class 0..3")),
        }
    }

    fn expr(&mut self) -> Result<TangleExpr> {
        self.skip_ws();
        let start = self.pos;
        match self.peek() {
            Some(b'X') => {
                self.pos += 1;
                match self.peek() {
                    Some(b'+') => {
                        self.pos += 1;
                        self.crossing(CrossingSign::Plus)
                    }
                    Some(b'-') => {
                        self.pos += 1;
                        self.crossing(CrossingSign::Minus)
                    }
                    _ => Err(self.err("expected '+' or '-' after 'X'")),
                }
            }
            Some(b) if b.is_ascii_alphabetic() => {
                let w = self.word();
                match w.as_str() {
                    "cupL" => Ok(TangleExpr::Gen(Generator::CupL)),
                    "cupR" => Ok(TangleExpr::Gen(Generator::CupR)),
                    "capL" => Ok(TangleExpr::Gen(Generator::CapL)),
                    "capR" => Ok(TangleExpr::Gen(Generator::CapR)),
                    "id" => {
                        self.expect(b'(')?;
                        self.skip_ws();
                        let d = self.word();
                        let dir = match d.as_str() {
                            "up" => Dir::Up,
                            "down" => Dir::Down,
                            _ => return Err(self.err("expected 'up' or 'down'")),
                        };
                        self.expect(b')')?;
                        Ok(TangleExpr::Id(dir))
                    }
                    "tensor" => Ok(TangleExpr::tensor(self.args()?)),
                    "compose" => Ok(TangleExpr::compose(self.args()?)),
                    "rot" => {
                        self.expect(b'(')?;
                        let inner = self.expr()?;
                        self.expect(b')')?;
                        Ok(TangleExpr::rotate(inner))
                    }
                    "pow" => {
                        self.expect(b'(')?;
                        let base = self.expr()?;
                        self.expect(b',')?;
                        let n = self.int()?;
                        self.expect(b')')?;
                        base.pow(n)
                    }
                    "cup" | "cap" => Err(Error::Parse {
                        pos: start,
                        msg: format!("'{w}' needs an orientation: use {w}L or {w}R"),
                    }),
                    _ => Err(Error::Parse { pos: start, msg: format!("unknown token '{w}'") }),
                }
            }
            _ => Err(self.err("expected an expression")),
        }
    }
}
