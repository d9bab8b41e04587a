//! Recursive-descent parser for tropical polynomial text.
//!
//! ```text
//! poly     := term (("+" | "⊕") term)*
//! term     := coeff monomial* | monomial+
//! coeff    := ["+" | "-"] rational | "(" ["+" | "-"] rational ")"
//! monomial := var ["^" exponent]
//! exponent := ["-"] int | "(" ["-"] int ")"
//! rational := int ["/" posint]
//! var      := x | y | z | w | x<index>
//! ```

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::exact_math::{Point, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax(String),
    VariableOutOfRange { var: String, n_vars: usize },
    MixedVariableStyles,
    Empty,
}

/// A parse failure with a 1-based source position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: ", self.line, self.column)?;
        match &self.kind {
            ParseErrorKind::Syntax(msg) => write!(f, "{msg}"),
            ParseErrorKind::VariableOutOfRange { var, n_vars } => {
                write!(f, "variable {var} exceeds the {n_vars} declared variables")
            }
            ParseErrorKind::MixedVariableStyles => {
                write!(f, "cannot mix x,y,z,w with indexed variables x1..xn")
            }
            ParseErrorKind::Empty => write!(f, "empty polynomial"),
        }
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Copy, PartialEq, Eq)]
enum VarStyle {
    Letters,
    Indexed,
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
    n_vars: usize,
    style: Option<VarStyle>,
}

pub(crate) fn parse_terms(
    text: &str,
    n_vars: usize,
) -> Result<BTreeMap<Point, Rational>, ParseError> {
    let mut p = Parser {
        chars: text.chars().collect(),
        pos: 0,
        n_vars,
        style: None,
    };
    p.skip_ws();
    if p.at_end() {
        return Err(p.error(ParseErrorKind::Empty));
    }
    let mut terms: BTreeMap<Point, Rational> = BTreeMap::new();
    loop {
        let (exp, c) = p.term()?;
        terms
            .entry(exp)
            .and_modify(|old| {
                if c > *old {
                    *old = c.clone()
                }
            })
            .or_insert(c);
        p.skip_ws();
        if p.at_end() {
            break;
        }
        match p.peek() {
            Some('+') | Some('⊕') => {
                p.pos += 1;
                p.skip_ws();
            }
            Some(ch) => return Err(p.syntax(format!("expected '+' between terms, found '{ch}'"))),
            None => unreachable!(),
        }
    }
    Ok(terms)
}

impl Parser {
    fn at_end(&self) -> bool {
        self.pos >= self.chars.len()
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn position(&self) -> (usize, usize) {
        let mut line = 1;
        let mut column = 1;
        for &c in &self.chars[..self.pos.min(self.chars.len())] {
            if c == '\n' {
                line += 1;
                column = 1;
            } else {
                column += 1;
            }
        }
        (line, column)
    }

    fn error(&self, kind: ParseErrorKind) -> ParseError {
        let (line, column) = self.position();
        ParseError { line, column, kind }
    }

    fn syntax(&self, msg: impl Into<String>) -> ParseError {
        self.error(ParseErrorKind::Syntax(msg.into()))
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.syntax(format!("expected '{c}'")))
        }
    }

    fn term(&mut self) -> Result<(Point, Rational), ParseError> {
        let start = self.pos;
        let coeff = match self.peek() {
            Some(c) if c.is_ascii_digit() || c == '-' || c == '+' || c == '(' => {
                Some(self.coefficient()?)
            }
            _ => None,
        };
        let mut exp = vec![0i64; self.n_vars];
        let mut monomials = 0;
        loop {
            self.skip_ws();
            match self.peek() {
                Some(c) if c.is_ascii_alphabetic() => {
                    let (idx, e) = self.monomial()?;
                    exp[idx] = exp[idx]
                        .checked_add(e)
                        .ok_or_else(|| self.syntax("exponent overflow"))?;
                    monomials += 1;
                }
                _ => break,
            }
        }
        if coeff.is_none() && monomials == 0 {
            self.pos = start;
            return Err(match self.peek() {
                Some(ch) => self.syntax(format!("expected a term, found '{ch}'")),
                None => self.syntax("expected a term"),
            });
        }
        Ok((exp, coeff.unwrap_or_else(Rational::zero)))
    }

    fn coefficient(&mut self) -> Result<Rational, ParseError> {
        if self.peek() == Some('(') {
            self.pos += 1;
            self.skip_ws();
            let r = self.signed_rational()?;
            self.expect(')')?;
            Ok(r)
        } else {
            self.signed_rational()
        }
    }

    fn signed_rational(&mut self) -> Result<Rational, ParseError> {
        let mut negative = false;
        while let Some(c @ ('-' | '+')) = self.peek() {
            if c == '-' {
                negative = !negative;
            }
            self.pos += 1;
            self.skip_ws();
        }
        let num = self.integer()?;
        let mut value = Rational::from_integer(num);
        let save = self.pos;
        self.skip_ws();
        if self.peek() == Some('/') {
            self.pos += 1;
            self.skip_ws();
            let den = self.integer()?;
            if den.is_zero() {
                return Err(self.syntax("zero denominator"));
            }
            value /= Rational::from_integer(den);
        } else {
            self.pos = save;
        }
        Ok(if negative { -value } else { value })
    }

    fn integer(&mut self) -> Result<BigInt, ParseError> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.syntax("expected a number"));
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        Ok(s.parse().expect("digits parse as an integer"))
    }

    fn small_integer(&mut self) -> Result<i64, ParseError> {
        let start = self.pos;
        let v = self.integer()?;
        i64::try_from(&v).map_err(|_| {
            self.pos = start;
            self.syntax("integer too large")
        })
    }

    fn monomial(&mut self) -> Result<(usize, i64), ParseError> {
        let start = self.pos;
        let c = self.peek().expect("caller checked");
        self.pos += 1;
        let (style, name, idx) = match c {
            'x' if self.peek().is_some_and(|d| d.is_ascii_digit()) => {
                let i = self.small_integer()?;
                if i < 1 {
                    self.pos = start;
                    return Err(self.syntax("variable indices start at 1"));
                }
                (VarStyle::Indexed, format!("x{i}"), (i - 1) as usize)
            }
            'x' => (VarStyle::Letters, "x".into(), 0),
            'y' => (VarStyle::Letters, "y".into(), 1),
            'z' => (VarStyle::Letters, "z".into(), 2),
            'w' => (VarStyle::Letters, "w".into(), 3),
            other => {
                self.pos = start;
                return Err(self.syntax(format!("unknown variable '{other}'")));
            }
        };
        match self.style {
            Some(s) if s != style => {
                self.pos = start;
                return Err(self.error(ParseErrorKind::MixedVariableStyles));
            }
            _ => self.style = Some(style),
        }
        if idx >= self.n_vars {
            self.pos = start;
            return Err(self.error(ParseErrorKind::VariableOutOfRange {
                var: name,
                n_vars: self.n_vars,
            }));
        }
        let save = self.pos;
        self.skip_ws();
        if self.peek() != Some('^') {
            self.pos = save;
            return Ok((idx, 1));
        }
        self.pos += 1;
        self.skip_ws();
        let parenthesized = self.peek() == Some('(');
        if parenthesized {
            self.pos += 1;
            self.skip_ws();
        }
        let negative = self.peek() == Some('-');
        if negative {
            self.pos += 1;
            self.skip_ws();
        }
        let e = self.small_integer()?;
        if parenthesized {
            self.expect(')')?;
        }
        Ok((idx, if negative { -e } else { e }))
    }
}

/// Formats a rational coefficient so that it reparses unambiguously.
pub(crate) fn format_coefficient(c: &Rational) -> String {
    if c.is_negative() {
        format!("({c})")
    } else {
        c.to_string()
    }
}
