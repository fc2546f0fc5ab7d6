//! Session files and polynomial expressions.
//!
//! ```text
//! # comment
//! ring 32003 [x,y,z,w] grevlex;
//! ideal I = x^2, x*y, y^2, z^2, z*w, w^2;
//! ```

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::monomial::MonomialOrder;
use crate::poly::Polynomial;
use crate::ring::Ring;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(String),
    Ident(String),
    Sym(char),
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    line: usize,
    column: usize,
}

fn lex(text: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    for (lno, line) in text.lines().enumerate() {
        let chars: Vec<char> = line.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            let column = i + 1;
            if c == '#' {
                break;
            }
            if c.is_whitespace() {
                i += 1;
                continue;
            }
            let start = i;
            let tok = if c.is_ascii_digit() {
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                Tok::Int(chars[start..i].iter().collect())
            } else if c.is_ascii_alphabetic() || c == '_' {
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                Tok::Ident(chars[start..i].iter().collect())
            } else if "[],;=+-*^()".contains(c) {
                i += 1;
                Tok::Sym(c)
            } else {
                return Err(Error::Syntax {
                    line: lno + 1,
                    column,
                    message: format!("unexpected character `{c}`"),
                });
            };
            out.push(Token {
                tok,
                line: lno + 1,
                column,
            });
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: &'a [Token],
    pos: usize,
    end: (usize, usize),
}

impl<'a> Parser<'a> {
    fn new(toks: &'a [Token], text: &str) -> Self {
        let last_line = text.lines().count().max(1);
        let last_col = text.lines().last().map_or(0, |l| l.chars().count()) + 1;
        Self {
            toks,
            pos: 0,
            end: (last_line, last_col),
        }
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.tok)
    }

    fn here(&self) -> (usize, usize) {
        self.toks
            .get(self.pos)
            .map_or(self.end, |t| (t.line, t.column))
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        let (line, column) = self.here();
        Err(Error::Syntax {
            line,
            column,
            message: message.into(),
        })
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|t| t.tok.clone());
        self.pos += 1;
        t
    }

    fn expect_sym(&mut self, c: char) -> Result<()> {
        match self.peek() {
            Some(Tok::Sym(s)) if *s == c => {
                self.pos += 1;
                Ok(())
            }
            Some(t) => self.err(format!("expected `{c}`, found {}", describe(t))),
            None => self.err(format!("expected `{c}`, found end of input")),
        }
    }

    fn eat_sym(&mut self, c: char) -> bool {
        if matches!(self.peek(), Some(Tok::Sym(s)) if *s == c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn ident(&mut self) -> Result<String> {
        match self.peek() {
            Some(Tok::Ident(s)) => {
                let s = s.clone();
                self.pos += 1;
                Ok(s)
            }
            Some(t) => self.err(format!("expected identifier, found {}", describe(t))),
            None => self.err("expected identifier, found end of input"),
        }
    }

    fn int(&mut self) -> Result<String> {
        match self.peek() {
            Some(Tok::Int(s)) => {
                let s = s.clone();
                self.pos += 1;
                Ok(s)
            }
            Some(t) => self.err(format!("expected integer, found {}", describe(t))),
            None => self.err("expected integer, found end of input"),
        }
    }

    fn poly(&mut self, ring: &Ring) -> Result<Polynomial> {
        let mut acc = if self.eat_sym('-') {
            self.term(ring)?.neg(ring)
        } else {
            self.eat_sym('+');
            self.term(ring)?
        };
        loop {
            if self.eat_sym('+') {
                acc = acc.add(&self.term(ring)?, ring);
            } else if self.eat_sym('-') {
                acc = acc.sub(&self.term(ring)?, ring);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self, ring: &Ring) -> Result<Polynomial> {
        let mut acc = self.factor(ring)?;
        while self.eat_sym('*') {
            acc = acc.mul(&self.factor(ring)?, ring);
        }
        Ok(acc)
    }

    fn factor(&mut self, ring: &Ring) -> Result<Polynomial> {
        let base = match self.peek().cloned() {
            Some(Tok::Int(digits)) => {
                self.pos += 1;
                Polynomial::constant(reduce_digits(&digits, ring.characteristic()) as i64, ring)
            }
            Some(Tok::Ident(name)) => {
                let Some(i) = ring.var_index(&name) else {
                    let (line, column) = self.here_prev();
                    return Err(Error::Syntax {
                        line,
                        column,
                        message: Error::UnknownVariable(name).to_string(),
                    });
                };
                self.pos += 1;
                Polynomial::var(i, ring)
            }
            Some(Tok::Sym('(')) => {
                self.pos += 1;
                let p = self.poly(ring)?;
                self.expect_sym(')')?;
                p
            }
            Some(t) => return self.err(format!("expected a factor, found {}", describe(&t))),
            None => return self.err("expected a factor, found end of input"),
        };
        if self.eat_sym('^') {
            let e = self.int()?;
            let e: u32 = e
                .parse()
                .ok()
                .filter(|&e| e <= 1000)
                .ok_or_else(|| self.err::<()>("exponent too large").unwrap_err())?;
            return Ok(base.pow(e, ring));
        }
        Ok(base)
    }

    fn here_prev(&self) -> (usize, usize) {
        self.here()
    }
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Int(s) => format!("integer `{s}`"),
        Tok::Ident(s) => format!("`{s}`"),
        Tok::Sym(c) => format!("`{c}`"),
    }
}

fn reduce_digits(digits: &str, p: u32) -> u32 {
    digits
        .bytes()
        .fold(0u64, |acc, b| (acc * 10 + (b - b'0') as u64) % p as u64) as u32
}

/// Parse one polynomial expression in `ring`'s variables.
pub fn parse_polynomial(text: &str, ring: &Ring) -> Result<Polynomial> {
    let toks = lex(text)?;
    let mut p = Parser::new(&toks, text);
    let f = p.poly(ring)?;
    if p.peek().is_some() {
        return p.err("trailing input after polynomial");
    }
    Ok(f)
}

/// Parse a comma-separated list of homogeneous polynomials into an ideal.
pub fn parse_ideal(text: &str, ring: &Arc<Ring>) -> Result<Ideal> {
    let toks = lex(text)?;
    let mut p = Parser::new(&toks, text);
    let mut gens = vec![p.poly(ring)?];
    while p.eat_sym(',') {
        gens.push(p.poly(ring)?);
    }
    if p.peek().is_some() {
        return p.err("trailing input after generator list");
    }
    Ideal::new(ring.clone(), gens)
}

/// A parsed session: one ring and a list of named ideals.
#[derive(Clone, Debug)]
pub struct Session {
    pub ring: Arc<Ring>,
    ideals: Vec<(String, Ideal)>,
}

impl Session {
    pub fn ideal(&self, name: &str) -> Result<&Ideal> {
        self.ideals
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, i)| i)
            .ok_or_else(|| Error::UnknownIdeal(name.to_string()))
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.ideals.iter().map(|(n, _)| n.as_str())
    }

    pub fn ideals(&self) -> &[(String, Ideal)] {
        &self.ideals
    }

    pub fn insert(&mut self, name: &str, ideal: Ideal) -> Result<()> {
        if self.ideals.iter().any(|(n, _)| n == name) {
            return Err(Error::Invalid(format!("ideal `{name}` defined twice")));
        }
        assert_eq!(ideal.ring(), &self.ring, "session ideals share the session ring");
        self.ideals.push((name.to_string(), ideal));
        Ok(())
    }
}

pub fn parse_session(text: &str) -> Result<Session> {
    let toks = lex(text)?;
    let mut p = Parser::new(&toks, text);
    let mut ring: Option<Arc<Ring>> = None;
    let mut session: Option<Session> = None;
    while let Some(tok) = p.peek().cloned() {
        let (line, column) = p.here();
        match tok {
            Tok::Ident(kw) if kw == "ring" => {
                p.next();
                if ring.is_some() {
                    return Err(Error::Syntax {
                        line,
                        column,
                        message: "only one ring per session".into(),
                    });
                }
                let digits = p.int()?;
                let characteristic: u64 = digits.parse().map_err(|_| Error::Syntax {
                    line,
                    column,
                    message: format!("characteristic `{digits}` out of range"),
                })?;
                p.expect_sym('[')?;
                let mut vars = vec![p.ident()?];
                while p.eat_sym(',') {
                    vars.push(p.ident()?);
                }
                p.expect_sym(']')?;
                let order = match p.ident()?.as_str() {
                    "grevlex" => MonomialOrder::Grevlex,
                    "lex" => MonomialOrder::Lex,
                    "elim" => {
                        p.expect_sym('(')?;
                        let k = p.int()?.parse().unwrap_or(0);
                        p.expect_sym(')')?;
                        MonomialOrder::Elimination(k)
                    }
                    other => {
                        p.pos -= 1;
                        return p.err(format!("unknown monomial order `{other}`"));
                    }
                };
                p.expect_sym(';')?;
                let r = Ring::new(characteristic, &vars, order).map_err(|e| Error::Syntax {
                    line,
                    column,
                    message: e.to_string(),
                })?;
                session = Some(Session {
                    ring: r.clone(),
                    ideals: Vec::new(),
                });
                ring = Some(r);
            }
            Tok::Ident(kw) if kw == "ideal" => {
                p.next();
                let Some(r) = ring.clone() else {
                    return Err(Error::Syntax {
                        line,
                        column,
                        message: "`ideal` before `ring`".into(),
                    });
                };
                let name = p.ident()?;
                p.expect_sym('=')?;
                let mut gens = Vec::new();
                loop {
                    let (gl, gc) = p.here();
                    let g = p.poly(&r)?;
                    if !g.is_homogeneous() {
                        return Err(Error::Syntax {
                            line: gl,
                            column: gc,
                            message: Error::NotHomogeneous(g.to_string(&r)).to_string(),
                        });
                    }
                    gens.push(g);
                    if !p.eat_sym(',') {
                        break;
                    }
                }
                p.expect_sym(';')?;
                let ideal = Ideal::new(r, gens)?;
                session
                    .as_mut()
                    .unwrap()
                    .insert(&name, ideal)
                    .map_err(|e| Error::Syntax {
                        line,
                        column,
                        message: e.to_string(),
                    })?;
            }
            other => return p.err(format!("expected `ring` or `ideal`, found {}", describe(&other))),
        }
    }
    session.ok_or(Error::Syntax {
        line: 1,
        column: 1,
        message: "session declares no ring".into(),
    })
}
