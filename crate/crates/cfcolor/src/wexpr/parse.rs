//! Recursive-descent parser and canonical printer for w-expressions.
//!
//! Grammar, whitespace-insensitive: `v(ID,LABEL)` introduce, `u(E1,E2)`
//! union, `r(I,J,E)` relabel I to J, `j(I,J,E)` join labels I and J. IDs
//! and labels are decimal integers, labels 1-based.

use super::WExpr;
use crate::{Error, Result};

const MAX_DEPTH: usize = 10_000;

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
    line: usize,
    col: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Parser {
            bytes: text.as_bytes(),
            pos: 0,
            line: 1,
            col: 1,
        }
    }

    fn error(&self, msg: impl Into<String>) -> Error {
        Error::Parse {
            line: self.line,
            col: self.col,
            msg: msg.into(),
        }
    }

    fn bump(&mut self) -> Option<u8> {
        let b = self.bytes.get(self.pos).copied()?;
        self.pos += 1;
        if b == b'\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(b)
    }

    fn skip_ws(&mut self) {
        while matches!(self.bytes.get(self.pos), Some(b) if b.is_ascii_whitespace()) {
            self.bump();
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn expect(&mut self, want: u8) -> Result<()> {
        match self.peek() {
            Some(b) if b == want => {
                self.bump();
                Ok(())
            }
            Some(b) => Err(self.error(format!(
                "expected '{}', found '{}'",
                want as char, b as char
            ))),
            None => Err(self.error(format!("expected '{}', found end of input", want as char))),
        }
    }

    fn number(&mut self) -> Result<u32> {
        match self.peek() {
            Some(b) if b.is_ascii_digit() => {}
            _ => return Err(self.error("expected a number")),
        }
        let mut value: u64 = 0;
        while matches!(self.bytes.get(self.pos), Some(b) if b.is_ascii_digit()) {
            let d = self.bump().unwrap() - b'0';
            value = value * 10 + d as u64;
            if value > u32::MAX as u64 {
                return Err(self.error("number too large"));
            }
        }
        Ok(value as u32)
    }

    fn label(&mut self) -> Result<u32> {
        let l = self.number()?;
        if l == 0 {
            return Err(self.error("labels are 1-based"));
        }
        if l > 64 {
            return Err(self.error("label out of range (at most 64)"));
        }
        Ok(l)
    }

    fn expr(&mut self, depth: usize) -> Result<WExpr> {
        if depth > MAX_DEPTH {
            return Err(self.error("expression nests too deeply"));
        }
        let head = self
            .peek()
            .ok_or_else(|| self.error("expected an expression"))?;
        self.bump();
        match head {
            b'v' => {
                self.expect(b'(')?;
                let vertex = self.number()?;
                self.expect(b',')?;
                let label = self.label()?;
                self.expect(b')')?;
                Ok(WExpr::introduce(vertex, label))
            }
            b'u' => {
                self.expect(b'(')?;
                let left = self.expr(depth + 1)?;
                self.expect(b',')?;
                let right = self.expr(depth + 1)?;
                self.expect(b')')?;
                Ok(WExpr::union(left, right))
            }
            b'r' => {
                self.expect(b'(')?;
                let from = self.label()?;
                self.expect(b',')?;
                let to = self.label()?;
                if from == to {
                    return Err(self.error("relabel needs two distinct labels"));
                }
                self.expect(b',')?;
                let child = self.expr(depth + 1)?;
                self.expect(b')')?;
                Ok(WExpr::relabel(from, to, child))
            }
            b'j' => {
                self.expect(b'(')?;
                let a = self.label()?;
                self.expect(b',')?;
                let b = self.label()?;
                if a == b {
                    return Err(self.error("join needs two distinct labels"));
                }
                self.expect(b',')?;
                let child = self.expr(depth + 1)?;
                self.expect(b')')?;
                Ok(WExpr::join(a, b, child))
            }
            other => Err(self.error(format!(
                "expected one of 'v', 'u', 'r', 'j', found '{}'",
                other as char
            ))),
        }
    }
}

/// Parses a w-expression; the result round-trips through `Display` and is
/// validated (unique vertex ids, distinct label pairs).
pub fn parse_wexpr(text: &str) -> Result<WExpr> {
    let mut p = Parser::new(text);
    let e = p.expr(0)?;
    if p.peek().is_some() {
        return Err(p.error("trailing input after expression"));
    }
    e.validate()?;
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k2_expression() {
        let e = parse_wexpr("j(1,2,u(v(0,1),v(1,2)))").unwrap();
        assert_eq!(
            e,
            WExpr::join(
                1,
                2,
                WExpr::union(WExpr::introduce(0, 1), WExpr::introduce(1, 2))
            )
        );
    }

    #[test]
    fn single_introduce_and_relabel() {
        assert_eq!(parse_wexpr("v(0,1)").unwrap(), WExpr::introduce(0, 1));
        assert_eq!(
            parse_wexpr("r(1,2,v(0,1))").unwrap(),
            WExpr::relabel(1, 2, WExpr::introduce(0, 1))
        );
    }

    #[test]
    fn whitespace_insensitive() {
        let e = parse_wexpr(" j ( 1 , 2 ,\n u( v(0,1), v(1,2) ) )\n").unwrap();
        assert_eq!(e.to_string(), "j(1,2,u(v(0,1),v(1,2)))");
    }

    #[test]
    fn errors_carry_position() {
        match parse_wexpr("u(v(0,1)\n,x)") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(parse_wexpr("v(0,0)").is_err());
        assert!(parse_wexpr("v(0,99)").is_err());
        assert!(parse_wexpr("j(1,1,v(0,1))").is_err());
        assert!(parse_wexpr("u(v(0,1),v(0,2))").is_err());
        assert!(parse_wexpr("v(0,1)v(1,1)").is_err());
    }

    #[test]
    fn roundtrip_family_expressions() {
        for k in 2..=3 {
            let e = super::super::expr_for_gk_cn(k).unwrap();
            let back = parse_wexpr(&e.to_string()).unwrap();
            assert_eq!(e, back);
        }
    }
}
