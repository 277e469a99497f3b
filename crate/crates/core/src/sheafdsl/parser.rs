// Recursive descent with one token of lookahead.

use thiserror::Error;

use super::Expr;
use crate::jetcalc::Side;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at byte {position}: found {found}, expected one of {}", expected.join(", "))]
    Syntax { position: usize, found: String, expected: Vec<String> },
    #[error("value out of range at byte {position}: {message}")]
    Range { position: usize, message: String },
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Digits(String),
    Plus,
    Star,
    Minus,
    LParen,
    RParen,
    Comma,
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Digits(s) => format!("`{s}`"),
            Tok::Plus => "`+`".into(),
            Tok::Star => "`*`".into(),
            Tok::Minus => "`-`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        let start = i;
        let tok = match b {
            b' ' | b'\t' | b'\r' | b'\n' => {
                i += 1;
                continue;
            }
            b'+' => Tok::Plus,
            b'*' => Tok::Star,
            b'-' => Tok::Minus,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b',' => Tok::Comma,
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((start, Tok::Digits(src[start..i].to_owned())));
                continue;
            }
            c if c.is_ascii_alphabetic() => {
                while i < bytes.len() && bytes[i].is_ascii_alphabetic() {
                    i += 1;
                }
                out.push((start, Tok::Ident(src[start..i].to_owned())));
                continue;
            }
            _ => {
                let found = src[start..].chars().next().map_or_else(String::new, |c| format!("`{c}`"));
                return Err(ParseError::Syntax {
                    position: start,
                    found,
                    expected: vec!["a token".into()],
                });
            }
        };
        i += 1;
        out.push((start, tok));
    }
    out.push((src.len(), Tok::Eof));
    Ok(out)
}

const FACTOR_START: &[&str] = &["`O`", "`Omega`", "`dual`", "`Sym`", "`Wedge`", "`J`", "`(`"];

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].1
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].1.clone();
        if t != Tok::Eof {
            self.pos += 1;
        }
        t
    }

    fn fail<T>(&self, expected: &[&str]) -> Result<T, ParseError> {
        Err(ParseError::Syntax {
            position: self.offset(),
            found: self.peek().describe(),
            expected: expected.iter().map(|s| (*s).to_owned()).collect(),
        })
    }

    fn expect(&mut self, tok: Tok) -> Result<(), ParseError> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            self.fail(&[&tok.describe()])
        }
    }

    fn expect_ident(&mut self, name: &str) -> Result<(), ParseError> {
        self.expect(Tok::Ident(name.to_owned()))
    }

    fn nat(&mut self) -> Result<(usize, usize), ParseError> {
        let at = self.offset();
        let Tok::Digits(d) = self.peek().clone() else {
            return self.fail(&["a natural number"]);
        };
        self.bump();
        d.parse::<usize>()
            .map(|v| (at, v))
            .map_err(|_| ParseError::Range { position: at, message: format!("{d} is too large") })
    }

    fn int(&mut self) -> Result<i64, ParseError> {
        let at = self.offset();
        let negative = *self.peek() == Tok::Minus;
        if negative {
            self.bump();
        }
        let Tok::Digits(d) = self.peek().clone() else {
            return self.fail(if negative { &["digits"] } else { &["`-`", "digits"] });
        };
        self.bump();
        let text = if negative { format!("-{d}") } else { d };
        text.parse::<i64>()
            .map_err(|_| ParseError::Range { position: at, message: format!("{text} does not fit in 64 bits") })
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut acc = self.term()?;
        while *self.peek() == Tok::Plus {
            self.bump();
            let rhs = self.term()?;
            acc = Expr::sum(acc, rhs);
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut acc = self.factor()?;
        while *self.peek() == Tok::Star {
            self.bump();
            let rhs = self.factor()?;
            acc = Expr::tensor(acc, rhs);
        }
        Ok(acc)
    }

    fn parenthesized(&mut self) -> Result<Expr, ParseError> {
        self.expect(Tok::LParen)?;
        let e = self.expr()?;
        self.expect(Tok::RParen)?;
        Ok(e)
    }

    fn twist(&mut self) -> Result<i64, ParseError> {
        self.expect_ident("O")?;
        self.expect(Tok::LParen)?;
        let d = self.int()?;
        self.expect(Tok::RParen)?;
        Ok(d)
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        let ident = match self.peek() {
            Tok::LParen => return self.parenthesized(),
            Tok::Ident(s) => s.clone(),
            _ => return self.fail(FACTOR_START),
        };
        match ident.as_str() {
            "O" => {
                if self.toks.get(self.pos + 1).map(|t| &t.1) == Some(&Tok::LParen) {
                    Ok(Expr::Twist(self.twist()?))
                } else {
                    self.bump();
                    Ok(Expr::Structure)
                }
            }
            "Omega" => {
                self.bump();
                Ok(Expr::Omega)
            }
            "dual" => {
                self.bump();
                Ok(Expr::dual(self.parenthesized()?))
            }
            "Sym" | "Wedge" => {
                self.bump();
                let (_, k) = self.nat()?;
                let arg = self.parenthesized()?;
                Ok(if ident == "Sym" { Expr::sym(k, arg) } else { Expr::wedge(k, arg) })
            }
            "J" => {
                self.bump();
                let (at, order) = self.nat()?;
                if order == 0 {
                    return Err(ParseError::Range { position: at, message: "jet order must be at least 1".into() });
                }
                self.expect(Tok::LParen)?;
                let twist = self.twist()?;
                self.expect(Tok::Comma)?;
                let side = match self.peek() {
                    Tok::Ident(s) if s == "left" => Side::Left,
                    Tok::Ident(s) if s == "right" => Side::Right,
                    _ => return self.fail(&["`left`", "`right`"]),
                };
                self.bump();
                self.expect(Tok::RParen)?;
                Ok(Expr::Jet { order, twist, side })
            }
            _ => self.fail(FACTOR_START),
        }
    }
}

pub fn parse(text: &str) -> Result<Expr, ParseError> {
    let mut p = Parser { toks: lex(text)?, pos: 0 };
    let e = p.expr()?;
    if *p.peek() != Tok::Eof {
        return p.fail(&["`+`", "`*`", "end of input"]);
    }
    Ok(e)
}
