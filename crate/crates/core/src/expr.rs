//! Small arithmetic expressions over named parameters, used for table
//! coefficients (`(1+lambda)*x*y`), automorphism patterns, and linear
//! combinations of basis symbols such as `D(1,4)` or `N(2)`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;

use crate::scalar::{FieldSpec, Scalar, ScalarError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExprError {
    #[error("column {col}: {msg}")]
    Syntax { col: usize, msg: String },
    #[error("unknown parameter `{0}`")]
    UnknownVariable(String),
    #[error("`{0}` is not allowed here")]
    UnexpectedSymbol(String),
    #[error("product of two symbolic terms is not linear")]
    NonLinear,
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// A symbol with integer arguments, e.g. `D(1,4)` or `N(2)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Symbol {
    pub name: String,
    pub args: Vec<usize>,
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let args: Vec<String> = self.args.iter().map(ToString::to_string).collect();
        write!(f, "{}({})", self.name, args.join(","))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Expr {
    Int(BigInt),
    Var(String),
    Sym(Symbol),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Op(char),
}

fn tokenize(src: &str) -> Result<Vec<(Tok, usize)>, ExprError> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let text: String = chars[start..i].iter().collect();
            if i < chars.len() && chars[i] == '.' {
                return Err(ExprError::Syntax { col: i + 1, msg: "decimal points are not accepted".into() });
            }
            out.push((Tok::Int(text.parse().expect("digits")), col));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            let text: String = chars[start..i].iter().collect();
            let name = match text.as_str() {
                "λ" => "lambda".to_string(),
                "μ" => "mu".to_string(),
                _ => text,
            };
            out.push((Tok::Ident(name), col));
        } else if "+-*/^(),".contains(c) {
            out.push((Tok::Op(c), col));
            i += 1;
        } else {
            return Err(ExprError::Syntax { col, msg: format!("unexpected character `{c}`") });
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end_col: usize,
    symbols: &'static [&'static str],
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end_col, |(_, c)| *c)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ExprError> {
        Err(ExprError::Syntax { col: self.col(), msg: msg.into() })
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, op: char) -> Result<(), ExprError> {
        if self.eat(op) {
            Ok(())
        } else {
            self.err(format!("expected `{op}`"))
        }
    }

    fn sum(&mut self) -> Result<Expr, ExprError> {
        let mut lhs = self.product()?;
        loop {
            if self.eat('+') {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.product()?));
            } else if self.eat('-') {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.product()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn product(&mut self) -> Result<Expr, ExprError> {
        let mut lhs = self.unary()?;
        loop {
            if self.eat('*') {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
            } else if self.eat('/') {
                lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr, ExprError> {
        if self.eat('-') {
            if self.peek() == Some(&Tok::Op('-')) {
                return self.err("repeated sign");
            }
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        if self.eat('+') {
            return self.err("unexpected `+`");
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, ExprError> {
        let base = self.atom()?;
        if self.eat('^') {
            match self.peek().cloned() {
                Some(Tok::Int(n)) => {
                    self.pos += 1;
                    let e: u32 = n.try_into().or_else(|_| self.err("exponent too large"))?;
                    if e > 64 {
                        return self.err("exponent too large");
                    }
                    Ok(Expr::Pow(Box::new(base), e))
                }
                _ => self.err("expected a non-negative integer exponent"),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Expr, ExprError> {
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                Ok(Expr::Int(n))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                if self.symbols.contains(&name.as_str()) && self.peek() == Some(&Tok::Op('(')) {
                    self.pos += 1;
                    let mut args = Vec::new();
                    loop {
                        match self.peek().cloned() {
                            Some(Tok::Int(n)) => {
                                self.pos += 1;
                                let v: usize = n.try_into().or_else(|_| self.err("index too large"))?;
                                args.push(v);
                            }
                            _ => return self.err("expected an index"),
                        }
                        if self.eat(')') {
                            break;
                        }
                        self.expect(',')?;
                    }
                    Ok(Expr::Sym(Symbol { name, args }))
                } else {
                    Ok(Expr::Var(name))
                }
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let e = self.sum()?;
                self.expect(')')?;
                Ok(e)
            }
            Some(Tok::Op(c)) => self.err(format!("unexpected `{c}`")),
            None => self.err("unexpected end of expression"),
        }
    }
}

impl Expr {
    /// Parse a scalar expression (no symbols).
    pub fn parse(src: &str) -> Result<Expr, ExprError> {
        Self::parse_with_symbols(src, &[])
    }

    /// Parse allowing the given symbol names to be applied to integer
    /// argument lists, e.g. `&["D", "N"]`.
    pub fn parse_with_symbols(src: &str, symbols: &'static [&'static str]) -> Result<Expr, ExprError> {
        let toks = tokenize(src)?;
        let mut p = Parser { toks, pos: 0, end_col: src.chars().count() + 1, symbols };
        let e = p.sum()?;
        if p.pos != p.toks.len() {
            return p.err("unexpected trailing input");
        }
        Ok(e)
    }

    pub fn int(n: i64) -> Expr {
        Expr::Int(BigInt::from(n))
    }

    /// Names of all variables, sorted.
    pub fn variables(&self) -> Vec<String> {
        let mut out = Vec::new();
        self.collect_vars(&mut out);
        out.sort();
        out.dedup();
        out
    }

    fn collect_vars(&self, out: &mut Vec<String>) {
        match self {
            Expr::Int(_) | Expr::Sym(_) => {}
            Expr::Var(v) => out.push(v.clone()),
            Expr::Neg(a) | Expr::Pow(a, _) => a.collect_vars(out),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
        }
    }

    pub fn is_constant(&self) -> bool {
        self.variables().is_empty() && !self.has_symbols()
    }

    /// All symbols in order of appearance.
    pub fn symbols(&self) -> Vec<Symbol> {
        match self {
            Expr::Sym(s) => vec![s.clone()],
            Expr::Int(_) | Expr::Var(_) => Vec::new(),
            Expr::Neg(a) | Expr::Pow(a, _) => a.symbols(),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => {
                let mut out = a.symbols();
                out.extend(b.symbols());
                out
            }
        }
    }

    fn has_symbols(&self) -> bool {
        match self {
            Expr::Sym(_) => true,
            Expr::Int(_) | Expr::Var(_) => false,
            Expr::Neg(a) | Expr::Pow(a, _) => a.has_symbols(),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => a.has_symbols() || b.has_symbols(),
        }
    }

    /// Evaluate to a scalar in `field`.
    pub fn eval(&self, field: FieldSpec, vars: &HashMap<String, Scalar>) -> Result<Scalar, ExprError> {
        let lin = self.eval_linear(field, vars)?;
        if let Some(sym) = lin.terms.keys().next() {
            return Err(ExprError::UnexpectedSymbol(sym.to_string()));
        }
        Ok(lin.constant)
    }

    /// Evaluate to `constant + sum coeff * symbol`.
    pub fn eval_linear(&self, field: FieldSpec, vars: &HashMap<String, Scalar>) -> Result<Linear, ExprError> {
        Ok(match self {
            Expr::Int(n) => Linear::constant(Scalar::from_bigint(field, n)),
            Expr::Var(v) => {
                let val = vars.get(v).ok_or_else(|| ExprError::UnknownVariable(v.clone()))?;
                if val.field() != field {
                    return Err(ScalarError::FieldMismatch(field, val.field()).into());
                }
                Linear::constant(val.clone())
            }
            Expr::Sym(s) => {
                let mut terms = BTreeMap::new();
                terms.insert(s.clone(), Scalar::one(field));
                Linear { constant: Scalar::zero(field), terms }
            }
            Expr::Neg(a) => a.eval_linear(field, vars)?.scaled(&-Scalar::one(field)),
            Expr::Add(a, b) => a.eval_linear(field, vars)?.plus(&b.eval_linear(field, vars)?, false),
            Expr::Sub(a, b) => a.eval_linear(field, vars)?.plus(&b.eval_linear(field, vars)?, true),
            Expr::Mul(a, b) => {
                let (x, y) = (a.eval_linear(field, vars)?, b.eval_linear(field, vars)?);
                if x.terms.is_empty() {
                    y.scaled(&x.constant)
                } else if y.terms.is_empty() {
                    x.scaled(&y.constant)
                } else {
                    return Err(ExprError::NonLinear);
                }
            }
            Expr::Div(a, b) => {
                let (x, y) = (a.eval_linear(field, vars)?, b.eval_linear(field, vars)?);
                if !y.terms.is_empty() {
                    return Err(ExprError::NonLinear);
                }
                x.scaled(&y.constant.inv()?)
            }
            Expr::Pow(a, e) => {
                let x = a.eval_linear(field, vars)?;
                if !x.terms.is_empty() && *e != 1 {
                    return Err(ExprError::NonLinear);
                }
                if *e == 1 {
                    x
                } else {
                    Linear::constant(x.constant.pow(u64::from(*e)))
                }
            }
        })
    }

    fn precedence(&self) -> u8 {
        match self {
            Expr::Add(..) | Expr::Sub(..) => 1,
            Expr::Mul(..) | Expr::Div(..) => 2,
            Expr::Neg(_) => 3,
            Expr::Pow(..) => 4,
            Expr::Int(_) | Expr::Var(_) | Expr::Sym(_) => 5,
        }
    }

    fn fmt_child(&self, f: &mut fmt::Formatter<'_>, child: &Expr, min: u8) -> fmt::Result {
        if child.precedence() < min {
            write!(f, "({child})")
        } else {
            write!(f, "{child}")
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Int(n) => write!(f, "{n}"),
            Expr::Var(v) => write!(f, "{v}"),
            Expr::Sym(s) => write!(f, "{s}"),
            Expr::Neg(a) => {
                write!(f, "-")?;
                self.fmt_child(f, a, 4)
            }
            Expr::Add(a, b) => {
                self.fmt_child(f, a, 1)?;
                write!(f, "+")?;
                self.fmt_child(f, b, 2)
            }
            Expr::Sub(a, b) => {
                self.fmt_child(f, a, 1)?;
                write!(f, "-")?;
                self.fmt_child(f, b, 2)
            }
            Expr::Mul(a, b) => {
                self.fmt_child(f, a, 2)?;
                write!(f, "*")?;
                self.fmt_child(f, b, 3)
            }
            Expr::Div(a, b) => {
                self.fmt_child(f, a, 2)?;
                write!(f, "/")?;
                self.fmt_child(f, b, 4)
            }
            Expr::Pow(a, e) => {
                self.fmt_child(f, a, 5)?;
                write!(f, "^{e}")
            }
        }
    }
}

impl std::str::FromStr for Expr {
    type Err = ExprError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Expr::parse(s)
    }
}

/// Value of an expression that is affine in its symbols.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Linear {
    pub constant: Scalar,
    pub terms: BTreeMap<Symbol, Scalar>,
}

impl Linear {
    fn constant(c: Scalar) -> Self {
        Linear { constant: c, terms: BTreeMap::new() }
    }

    fn scaled(mut self, c: &Scalar) -> Self {
        self.constant = &self.constant * c;
        for v in self.terms.values_mut() {
            *v = &*v * c;
        }
        self.terms.retain(|_, v| !v.is_zero());
        self
    }

    fn plus(mut self, other: &Linear, negate: bool) -> Self {
        let sign = |x: &Scalar| if negate { -x } else { x.clone() };
        self.constant = &self.constant + &sign(&other.constant);
        for (k, v) in &other.terms {
            let entry = self.terms.entry(k.clone()).or_insert_with(|| Scalar::zero(v.field()));
            *entry = &*entry + &sign(v);
        }
        self.terms.retain(|_, v| !v.is_zero());
        self
    }
}

/// Convenience: bindings from `(name, value)` pairs.
pub fn bindings<'a>(pairs: impl IntoIterator<Item = (&'a str, Scalar)>) -> HashMap<String, Scalar> {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}
