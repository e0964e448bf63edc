//! A small expression parser: integers, named variables, `+ - * / ^` and parentheses.
//! A top-level comma list `c0,c1,...` is read as coefficients of the first variable.

use super::Ring;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(i64),
    Ident(String),
    Op(char),
}

fn lex(s: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let chars: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let text: String = chars[start..i].iter().collect();
            let v = text
                .parse::<i64>()
                .map_err(|_| Error::Parse(format!("integer out of range: {text}")))?;
            out.push(Tok::Num(v));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Tok::Ident(chars[start..i].iter().collect()));
        } else if "+-*/^()".contains(c) {
            out.push(Tok::Op(c));
            i += 1;
        } else {
            return Err(Error::Parse(format!("unexpected character '{c}' in '{s}'")));
        }
    }
    Ok(out)
}

struct Parser<'a, R: Ring> {
    ring: &'a R,
    vars: &'a [(&'a str, R::Elem)],
    toks: Vec<Tok>,
    pos: usize,
}

impl<'a, R: Ring> Parser<'a, R> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<R::Elem> {
        let mut acc = if self.eat('-') {
            let t = self.term()?;
            self.ring.neg(&t)
        } else {
            self.eat('+');
            self.term()?
        };
        loop {
            if self.eat('+') {
                let t = self.term()?;
                acc = self.ring.add(&acc, &t);
            } else if self.eat('-') {
                let t = self.term()?;
                acc = self.ring.sub(&acc, &t);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<R::Elem> {
        let mut acc = self.power()?;
        loop {
            if self.eat('*') {
                let f = self.power()?;
                acc = self.ring.mul(&acc, &f);
            } else if self.eat('/') {
                let f = self.power()?;
                let inv = self.ring.inv(&f).ok_or(Error::DivisionByZero)?;
                acc = self.ring.mul(&acc, &inv);
            } else if matches!(self.peek(), Some(Tok::Ident(_)) | Some(Tok::Op('('))) {
                // implicit multiplication such as `2t` or `3(t+1)`
                let f = self.power()?;
                acc = self.ring.mul(&acc, &f);
            } else {
                return Ok(acc);
            }
        }
    }

    fn power(&mut self) -> Result<R::Elem> {
        let base = self.atom()?;
        if self.eat('^') {
            let neg = self.eat('-');
            let e = match self.peek() {
                Some(Tok::Num(v)) => *v,
                _ => return Err(Error::Parse("exponent must be an integer".into())),
            };
            self.pos += 1;
            let e = if neg { -e } else { e };
            self.ring.pow_signed(&base, e).ok_or(Error::DivisionByZero)
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<R::Elem> {
        match self.peek().cloned() {
            Some(Tok::Num(v)) => {
                self.pos += 1;
                Ok(self.ring.from_int(v))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                self.vars
                    .iter()
                    .find(|(n, _)| *n == name)
                    .map(|(_, v)| v.clone())
                    .ok_or_else(|| Error::Parse(format!("unknown symbol '{name}'")))
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let v = self.expr()?;
                if !self.eat(')') {
                    return Err(Error::Parse("missing ')'".into()));
                }
                Ok(v)
            }
            Some(Tok::Op('-')) => {
                self.pos += 1;
                let v = self.power()?;
                Ok(self.ring.neg(&v))
            }
            other => Err(Error::Parse(format!("unexpected token {other:?}"))),
        }
    }
}

fn split_top_level(s: &str) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            ',' if depth == 0 => {
                parts.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(&s[start..]);
    parts
}

/// Parses an element of `ring`; `vars` binds symbol names to elements.
pub fn parse_expr<R: Ring>(ring: &R, s: &str, vars: &[(&str, R::Elem)]) -> Result<R::Elem> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    let parts = split_top_level(s);
    if parts.len() > 1 {
        let (_, x) = vars
            .first()
            .ok_or_else(|| Error::Parse("coefficient list needs a variable".into()))?;
        let mut acc = ring.zero();
        let mut xp = ring.one();
        for part in parts {
            let part = part.trim().trim_start_matches('[').trim_end_matches(']');
            let c = parse_expr(ring, part, &vars[1..])?;
            acc = ring.add(&acc, &ring.mul(&c, &xp));
            xp = ring.mul(&xp, x);
        }
        return Ok(acc);
    }
    let s = s.trim_start_matches('[').trim_end_matches(']');
    let mut p = Parser {
        ring,
        vars,
        toks: lex(s)?,
        pos: 0,
    };
    let v = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(Error::Parse(format!("trailing input in '{s}'")));
    }
    Ok(v)
}
