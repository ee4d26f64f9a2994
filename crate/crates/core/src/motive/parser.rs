//! Recursive-descent parser for motive expressions.
//!
//! ```text
//! expr   := term ('+' term)*
//! term   := factor ('*' factor)*
//! factor := atom | atom '{' int '}' | 'Sym' '^' nat '(' expr ')'
//!         | 'SymStar' '(' expr ')' | 'Z' '(' 'C' ',' 'L' '^' int ')'
//! atom   := '1' | 'L' | 'L' '^' int | 'M(C)' | 'Mbar(C)' | 'M1(Jac)' | 'Jac'
//!         | 'BGm' | 'BGmC' | 'P(' nat ')' | '(' expr ')'
//! ```
//!
//! Whitespace is ignored between tokens.

use thiserror::Error;

use super::ast::{Atom, MotiveExpr};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax,
    /// A `Sym`, `SymStar` or `Z` node with missing or malformed arguments.
    Arity,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{} error at position {position}: {message}", match .kind { ParseErrorKind::Syntax => "syntax", ParseErrorKind::Arity => "arity" })]
pub struct ParseError {
    pub kind: ParseErrorKind,
    /// Byte offset into the input.
    pub position: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Plus,
    Star,
    LParen,
    RParen,
    LBrace,
    RBrace,
    Caret,
    Comma,
    Int(i64),
    Ident(String),
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let start = i;
        let single = match c {
            '+' => Some(Tok::Plus),
            '*' => Some(Tok::Star),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            '{' => Some(Tok::LBrace),
            '}' => Some(Tok::RBrace),
            '^' => Some(Tok::Caret),
            ',' => Some(Tok::Comma),
            _ => None,
        };
        if let Some(t) = single {
            out.push((t, start));
            i += 1;
        } else if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() || c == '-' {
            i += 1;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let lit = &text[start..i];
            let v = lit.parse::<i64>().map_err(|_| ParseError {
                kind: ParseErrorKind::Syntax,
                position: start,
                message: format!("invalid integer `{lit}`"),
            })?;
            out.push((Tok::Int(v), start));
        } else if c.is_ascii_alphabetic() {
            while i < bytes.len() && bytes[i].is_ascii_alphanumeric() {
                i += 1;
            }
            out.push((Tok::Ident(text[start..i].to_string()), start));
        } else {
            return Err(ParseError {
                kind: ParseErrorKind::Syntax,
                position: start,
                message: format!("unexpected character `{c}`"),
            });
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |&(_, p)| p)
    }

    fn err(&self, kind: ParseErrorKind, message: impl Into<String>) -> ParseError {
        ParseError {
            kind,
            position: self.offset(),
            message: message.into(),
        }
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == Some(t) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, t: &Tok, kind: ParseErrorKind, what: &str) -> Result<(), ParseError> {
        if self.eat(t) {
            Ok(())
        } else {
            Err(self.err(kind, format!("expected {what}")))
        }
    }

    fn expect_ident(&mut self, name: &str, kind: ParseErrorKind) -> Result<(), ParseError> {
        match self.peek() {
            Some(Tok::Ident(s)) if s == name => {
                self.pos += 1;
                Ok(())
            }
            _ => Err(self.err(kind, format!("expected `{name}`"))),
        }
    }

    fn int(&mut self, kind: ParseErrorKind, what: &str) -> Result<i64, ParseError> {
        match self.peek() {
            Some(&Tok::Int(v)) => {
                self.pos += 1;
                Ok(v)
            }
            _ => Err(self.err(kind, format!("expected {what}"))),
        }
    }

    fn nat(&mut self, kind: ParseErrorKind, what: &str) -> Result<u32, ParseError> {
        let at = self.offset();
        let v = self.int(kind, what)?;
        u32::try_from(v).map_err(|_| ParseError {
            kind,
            position: at,
            message: format!("expected {what}, got {v}"),
        })
    }

    fn expr(&mut self) -> Result<MotiveExpr, ParseError> {
        let mut parts = vec![self.term()?];
        while self.eat(&Tok::Plus) {
            parts.push(self.term()?);
        }
        Ok(if parts.len() == 1 {
            parts.pop().unwrap()
        } else {
            MotiveExpr::Sum(parts)
        })
    }

    fn term(&mut self) -> Result<MotiveExpr, ParseError> {
        let mut parts = vec![self.factor()?];
        while self.eat(&Tok::Star) {
            parts.push(self.factor()?);
        }
        Ok(if parts.len() == 1 {
            parts.pop().unwrap()
        } else {
            MotiveExpr::Tensor(parts)
        })
    }

    fn factor(&mut self) -> Result<MotiveExpr, ParseError> {
        use ParseErrorKind::Arity;
        match self.peek() {
            Some(Tok::Ident(s)) if s == "Sym" => {
                self.pos += 1;
                self.expect(&Tok::Caret, Arity, "`^` after Sym")?;
                let n = self.nat(Arity, "a natural exponent after Sym^")?;
                self.expect(&Tok::LParen, Arity, "`(` after Sym^n")?;
                let e = self.expr()?;
                self.expect(&Tok::RParen, ParseErrorKind::Syntax, "`)`")?;
                Ok(MotiveExpr::Sym(Box::new(e), n))
            }
            Some(Tok::Ident(s)) if s == "SymStar" => {
                self.pos += 1;
                self.expect(&Tok::LParen, Arity, "`(` after SymStar")?;
                let e = self.expr()?;
                self.expect(&Tok::RParen, ParseErrorKind::Syntax, "`)`")?;
                Ok(MotiveExpr::SymStar(Box::new(e)))
            }
            Some(Tok::Ident(s)) if s == "Z" => {
                self.pos += 1;
                self.expect(&Tok::LParen, Arity, "`(` after Z")?;
                self.expect_ident("C", Arity)?;
                self.expect(&Tok::Comma, Arity, "`,` in Z(C,L^i)")?;
                self.expect_ident("L", Arity)?;
                self.expect(&Tok::Caret, Arity, "`^` in Z(C,L^i)")?;
                let i = self.int(Arity, "an integer twist in Z(C,L^i)")?;
                self.expect(&Tok::RParen, Arity, "`)` closing Z(C,L^i)")?;
                Ok(MotiveExpr::ZetaTwist(i))
            }
            _ => {
                let a = self.atom()?;
                if self.eat(&Tok::LBrace) {
                    let i = self.int(ParseErrorKind::Syntax, "an integer twist")?;
                    self.expect(&Tok::RBrace, ParseErrorKind::Syntax, "`}`")?;
                    Ok(MotiveExpr::Twist(Box::new(a), i))
                } else {
                    Ok(a)
                }
            }
        }
    }

    fn paren_ident(&mut self, inner: &str) -> Result<(), ParseError> {
        self.expect(&Tok::LParen, ParseErrorKind::Syntax, "`(`")?;
        self.expect_ident(inner, ParseErrorKind::Syntax)?;
        self.expect(&Tok::RParen, ParseErrorKind::Syntax, "`)`")
    }

    fn atom(&mut self) -> Result<MotiveExpr, ParseError> {
        use ParseErrorKind::Syntax;
        let Some(tok) = self.peek().cloned() else {
            return Err(self.err(Syntax, "unexpected end of input"));
        };
        let at = self.offset();
        self.pos += 1;
        let atom = match tok {
            Tok::Int(1) => Atom::Unit,
            Tok::LParen => {
                let e = self.expr()?;
                self.expect(&Tok::RParen, Syntax, "`)`")?;
                return Ok(e);
            }
            Tok::Ident(name) => match name.as_str() {
                "L" => {
                    if self.eat(&Tok::Caret) {
                        Atom::Tate(self.int(Syntax, "an integer exponent after L^")?)
                    } else {
                        Atom::Tate(1)
                    }
                }
                "M" => {
                    self.paren_ident("C")?;
                    Atom::MC
                }
                "Mbar" => {
                    self.paren_ident("C")?;
                    Atom::MbarC
                }
                "M1" => {
                    self.paren_ident("Jac")?;
                    Atom::M1Jac
                }
                "Jac" => Atom::Jac,
                "BGm" => Atom::BGm,
                "BGmC" => Atom::BGmC,
                "P" => {
                    self.expect(&Tok::LParen, Syntax, "`(` after P")?;
                    let k = self.nat(Syntax, "a natural dimension in P(k)")?;
                    self.expect(&Tok::RParen, Syntax, "`)`")?;
                    Atom::ProjSpace(k)
                }
                other => {
                    return Err(ParseError {
                        kind: Syntax,
                        position: at,
                        message: format!("unknown atom `{other}`"),
                    })
                }
            },
            other => {
                return Err(ParseError {
                    kind: Syntax,
                    position: at,
                    message: format!("unexpected token {other:?}"),
                })
            }
        };
        Ok(MotiveExpr::Atom(atom))
    }
}

pub fn parse(text: &str) -> Result<MotiveExpr, ParseError> {
    let toks = lex(text)?;
    let mut p = Parser {
        toks,
        pos: 0,
        end: text.len(),
    };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(p.err(ParseErrorKind::Syntax, "trailing input"));
    }
    Ok(e)
}
