//! Semiring terms and identities.
//!
//! Text syntax: single-letter variables, juxtaposition (or `*`) for products,
//! `^k` for positive powers, `+` for sums, parentheses for grouping, and one
//! `=` separating the two sides of an identity, e.g.
//! `x^2 y^2 = x^3 y^2 + x^2 y^3`.

use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use super::semiring::FiniteSemiring;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Term {
    Var(char),
    Sum(Vec<Term>),
    /// Ordered product; multiplication need not commute.
    Product(Vec<Term>),
    Power(Box<Term>, u32),
}

impl Term {
    pub fn var(name: char) -> Term {
        Term::Var(name)
    }

    /// Flattened sum; a single summand is returned unchanged.
    pub fn sum(terms: impl IntoIterator<Item = Term>) -> Term {
        let mut flat = Vec::new();
        for t in terms {
            match t {
                Term::Sum(inner) => flat.extend(inner),
                other => flat.push(other),
            }
        }
        assert!(!flat.is_empty(), "empty sum");
        if flat.len() == 1 {
            flat.pop().unwrap()
        } else {
            Term::Sum(flat)
        }
    }

    /// Flattened product; a single factor is returned unchanged.
    pub fn product(terms: impl IntoIterator<Item = Term>) -> Term {
        let mut flat = Vec::new();
        for t in terms {
            match t {
                Term::Product(inner) => flat.extend(inner),
                other => flat.push(other),
            }
        }
        assert!(!flat.is_empty(), "empty product");
        if flat.len() == 1 {
            flat.pop().unwrap()
        } else {
            Term::Product(flat)
        }
    }

    pub fn pow(base: Term, exponent: u32) -> Result<Term> {
        match exponent {
            0 => Err(Error::InvalidIdentity(
                "exponent 0 is not part of the term language".into(),
            )),
            1 => Ok(base),
            k => Ok(match base {
                Term::Power(inner, j) => Term::Power(inner, j * k),
                other => Term::Power(Box::new(other), k),
            }),
        }
    }

    pub fn has_sum(&self) -> bool {
        match self {
            Term::Var(_) => false,
            Term::Sum(_) => true,
            Term::Product(ts) => ts.iter().any(Term::has_sum),
            Term::Power(t, _) => t.has_sum(),
        }
    }

    /// Variables in order of first occurrence.
    pub fn variables(&self) -> Vec<char> {
        let mut out = Vec::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut Vec<char>) {
        match self {
            Term::Var(c) => {
                if !out.contains(c) {
                    out.push(*c);
                }
            }
            Term::Sum(ts) | Term::Product(ts) => ts.iter().for_each(|t| t.collect_vars(out)),
            Term::Power(t, _) => t.collect_vars(out),
        }
    }

    fn eval_with<T>(&self, lookup: &impl Fn(char) -> Result<usize>, s: &FiniteSemiring<T>) -> Result<usize>
    where
        T: Clone + Eq + Hash + fmt::Display,
    {
        Ok(match self {
            Term::Var(c) => lookup(*c)?,
            Term::Sum(ts) => {
                let mut acc = ts[0].eval_with(lookup, s)?;
                for t in &ts[1..] {
                    acc = s.add(acc, t.eval_with(lookup, s)?);
                }
                acc
            }
            Term::Product(ts) => {
                let mut acc = ts[0].eval_with(lookup, s)?;
                for t in &ts[1..] {
                    acc = s.mul(acc, t.eval_with(lookup, s)?);
                }
                acc
            }
            Term::Power(t, k) => s.pow(t.eval_with(lookup, s)?, *k),
        })
    }

    /// Lowers variables to positions in `vars`.
    pub(crate) fn compile(&self, vars: &[char]) -> Compiled {
        match self {
            Term::Var(c) => Compiled::Var(
                vars.iter()
                    .position(|v| v == c)
                    .expect("variable list covers the term"),
            ),
            Term::Sum(ts) => Compiled::Sum(ts.iter().map(|t| t.compile(vars)).collect()),
            Term::Product(ts) => Compiled::Product(ts.iter().map(|t| t.compile(vars)).collect()),
            Term::Power(t, k) => Compiled::Power(Box::new(t.compile(vars)), *k),
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            Term::Sum(_) => 0,
            Term::Product(_) => 1,
            Term::Power(..) | Term::Var(_) => 2,
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let child = |f: &mut fmt::Formatter<'_>, t: &Term, min: u8| {
            if t.precedence() < min {
                write!(f, "({t})")
            } else {
                write!(f, "{t}")
            }
        };
        match self {
            Term::Var(c) => write!(f, "{c}"),
            Term::Sum(ts) => {
                for (i, t) in ts.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" + ")?;
                    }
                    child(f, t, 1)?;
                }
                Ok(())
            }
            Term::Product(ts) => {
                for (i, t) in ts.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" ")?;
                    }
                    child(f, t, 2)?;
                }
                Ok(())
            }
            Term::Power(t, k) => {
                if matches!(**t, Term::Var(_)) {
                    write!(f, "{t}^{k}")
                } else {
                    write!(f, "({t})^{k}")
                }
            }
        }
    }
}

impl Serialize for Term {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl FromStr for Term {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut p = Parser::new(s);
        let t = p.expr()?;
        p.expect_end()?;
        Ok(t)
    }
}

#[derive(Clone, Debug)]
pub(crate) enum Compiled {
    Var(usize),
    Sum(Vec<Compiled>),
    Product(Vec<Compiled>),
    Power(Box<Compiled>, u32),
}

impl Compiled {
    pub(crate) fn eval<T>(&self, assignment: &[usize], s: &FiniteSemiring<T>) -> usize
    where
        T: Clone + Eq + Hash + fmt::Display,
    {
        match self {
            Compiled::Var(i) => assignment[*i],
            Compiled::Sum(ts) => ts[1..]
                .iter()
                .fold(ts[0].eval(assignment, s), |acc, t| s.add(acc, t.eval(assignment, s))),
            Compiled::Product(ts) => ts[1..]
                .iter()
                .fold(ts[0].eval(assignment, s), |acc, t| s.mul(acc, t.eval(assignment, s))),
            Compiled::Power(t, k) => s.pow(t.eval(assignment, s), *k),
        }
    }
}

/// Value of `t` with variables bound to carrier indices.
pub fn eval_term<T>(t: &Term, assignment: &HashMap<char, usize>, s: &FiniteSemiring<T>) -> Result<usize>
where
    T: Clone + Eq + Hash + fmt::Display,
{
    let lookup = |c: char| {
        let i = *assignment.get(&c).ok_or(Error::UnboundVariable(c))?;
        if i >= s.len() {
            return Err(Error::NotInCarrier(format!("index {i}")));
        }
        Ok(i)
    };
    t.eval_with(&lookup, s)
}

/// An equation `lhs = rhs` universally quantified over `variables`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Identity {
    pub lhs: Term,
    pub rhs: Term,
    pub variables: Vec<char>,
    pub multiplicative_only: bool,
}

impl Identity {
    pub fn new(lhs: Term, rhs: Term) -> Self {
        let mut variables = lhs.variables();
        for v in rhs.variables() {
            if !variables.contains(&v) {
                variables.push(v);
            }
        }
        let multiplicative_only = !lhs.has_sum() && !rhs.has_sum();
        Identity {
            lhs,
            rhs,
            variables,
            multiplicative_only,
        }
    }

    /// As [`Identity::new`] with an explicit variable order, which fixes the
    /// order in which assignments are enumerated.
    pub fn with_variables(lhs: Term, rhs: Term, variables: Vec<char>) -> Result<Self> {
        let id = Identity::new(lhs, rhs);
        if let Some(v) = id.variables.iter().find(|v| !variables.contains(v)) {
            return Err(Error::InvalidIdentity(format!(
                "variable '{v}' missing from the variable list"
            )));
        }
        Ok(Identity { variables, ..id })
    }

    /// Both sides under `assignment`, given as indices in variable order.
    pub fn evaluate<T>(&self, assignment: &[usize], s: &FiniteSemiring<T>) -> (usize, usize)
    where
        T: Clone + Eq + Hash + fmt::Display,
    {
        let lhs = self.lhs.compile(&self.variables).eval(assignment, s);
        let rhs = self.rhs.compile(&self.variables).eval(assignment, s);
        (lhs, rhs)
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.lhs, self.rhs)
    }
}

impl FromStr for Identity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut p = Parser::new(s);
        let lhs = p.expr()?;
        p.skip_ws();
        if p.peek() != Some('=') {
            return Err(Error::Parse(format!("expected '=' at position {}", p.pos)));
        }
        p.bump();
        let rhs = p.expr()?;
        p.expect_end()?;
        Ok(Identity::new(lhs, rhs))
    }
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn new(src: &str) -> Self {
        Parser {
            chars: src.chars().collect(),
            pos: 0,
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) {
        self.pos += 1;
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.bump();
        }
    }

    fn expect_end(&mut self) -> Result<()> {
        self.skip_ws();
        match self.peek() {
            None => Ok(()),
            Some(c) => Err(Error::Parse(format!("unexpected '{c}' at position {}", self.pos))),
        }
    }

    fn expr(&mut self) -> Result<Term> {
        let mut terms = vec![self.product()?];
        loop {
            self.skip_ws();
            if self.peek() == Some('+') {
                self.bump();
                terms.push(self.product()?);
            } else {
                break;
            }
        }
        Ok(Term::sum(terms))
    }

    fn product(&mut self) -> Result<Term> {
        let mut factors = vec![self.factor()?];
        loop {
            self.skip_ws();
            match self.peek() {
                Some('*') | Some('·') => {
                    self.bump();
                    factors.push(self.factor()?);
                }
                Some(c) if c.is_ascii_alphabetic() || c == '(' => factors.push(self.factor()?),
                _ => break,
            }
        }
        Ok(Term::product(factors))
    }

    fn factor(&mut self) -> Result<Term> {
        let base = self.atom()?;
        self.skip_ws();
        if self.peek() == Some('^') {
            self.bump();
            self.skip_ws();
            let start = self.pos;
            while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                self.bump();
            }
            let digits: String = self.chars[start..self.pos].iter().collect();
            let k: u32 = digits
                .parse()
                .map_err(|_| Error::Parse(format!("expected an exponent at position {start}")))?;
            return Term::pow(base, k);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Term> {
        self.skip_ws();
        match self.peek() {
            Some(c) if c.is_ascii_alphabetic() => {
                self.bump();
                Ok(Term::Var(c))
            }
            Some('(') => {
                self.bump();
                let t = self.expr()?;
                self.skip_ws();
                if self.peek() != Some(')') {
                    return Err(Error::Parse(format!("expected ')' at position {}", self.pos)));
                }
                self.bump();
                Ok(t)
            }
            Some(c) => Err(Error::Parse(format!("unexpected '{c}' at position {}", self.pos))),
            None => Err(Error::Parse("unexpected end of input".into())),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x() -> Term {
        Term::var('x')
    }

    fn y() -> Term {
        Term::var('y')
    }

    #[test]
    fn parse_and_print() {
        let id: Identity = "x^2 y^2 = x^3 y^2 + x^2 y^3".parse().unwrap();
        let expected_lhs = Term::product([Term::pow(x(), 2).unwrap(), Term::pow(y(), 2).unwrap()]);
        assert_eq!(id.lhs, expected_lhs);
        assert_eq!(id.variables, vec!['x', 'y']);
        assert!(!id.multiplicative_only);
        assert_eq!(id.to_string(), "x^2 y^2 = x^3 y^2 + x^2 y^3");

        let id: Identity = "x = x".parse().unwrap();
        assert!(id.multiplicative_only);
        assert_eq!(id.variables, vec!['x']);

        let t: Term = "(x + y)^2 z".parse().unwrap();
        assert_eq!(t.to_string(), "(x + y)^2 z");
        let t: Term = "xy*(yx)".parse().unwrap();
        assert_eq!(t, Term::product([x(), y(), y(), x()]));
        assert_eq!("(x^2)^3".parse::<Term>().unwrap(), Term::pow(x(), 6).unwrap());
    }

    #[test]
    fn parse_errors() {
        assert!("x^0".parse::<Term>().is_err());
        assert!("x +".parse::<Term>().is_err());
        assert!("(x y".parse::<Term>().is_err());
        assert!("x = ".parse::<Identity>().is_err());
        assert!("x y".parse::<Identity>().is_err());
        assert!("x = y = z".parse::<Identity>().is_err());
        assert!("x^".parse::<Term>().is_err());
        assert!("3x".parse::<Term>().is_err());
    }

    #[test]
    fn variable_list_validation() {
        assert!(Identity::with_variables(x(), y(), vec!['x']).is_err());
        let id = Identity::with_variables(x(), y(), vec!['y', 'x']).unwrap();
        assert_eq!(id.variables, vec!['y', 'x']);
    }
}
