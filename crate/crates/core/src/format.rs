//! The plain-text algebra file format.
//!
//! ```text
//! # comments start with '#'
//! algebra B3_02
//! dim 3
//! field Q
//! params lambda
//! table
//! e1 e1 = e2
//! e1 e2 = e3
//! e2 e1 = lambda e3
//! end
//! ```
//!
//! `field` defaults to `Q` and `params` to none. Omitted products are zero.
//! Coefficients are scalar literals or parameter expressions; a `*` between
//! coefficient and basis vector is optional.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use num_traits::Signed;
use thiserror::Error;

use crate::algebra::Algebra;
use crate::expr::{Expr, ExprError};
use crate::scalar::{FieldSpec, Scalar, ScalarError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatErrorKind {
    #[error("{0}")]
    Syntax(String),
    #[error("duplicate product e{0} e{1}")]
    DuplicateProduct(usize, usize),
    #[error("basis index {0} out of range 1..={1}")]
    IndexOutOfRange(usize, usize),
    #[error("unknown parameter `{0}`")]
    UnknownParameter(String),
    #[error("missing `{0}` line")]
    MissingHeader(&'static str),
    #[error("repeated `{0}` line")]
    RepeatedHeader(String),
    #[error("missing `end`")]
    MissingEnd,
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {col}: {kind}")]
pub struct FormatError {
    pub line: usize,
    pub col: usize,
    pub kind: FormatErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BindError {
    #[error("parameter `{0}` is not bound")]
    Unbound(String),
    #[error("`{0}` is not a parameter of this table")]
    Extra(String),
    #[error("e{i} e{j}: {source}")]
    Eval { i: usize, j: usize, source: ExprError },
}

/// One table line `e_i e_j = sum coeff e_k` (1-based indices).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableLine {
    pub i: usize,
    pub j: usize,
    pub terms: Vec<(Expr, usize)>,
}

/// A multiplication table whose coefficients may depend on parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraFile {
    pub name: String,
    pub dim: usize,
    pub field: FieldSpec,
    pub params: Vec<String>,
    pub lines: Vec<TableLine>,
}

fn err(line: usize, col: usize, kind: FormatErrorKind) -> FormatError {
    FormatError { line, col, kind }
}

fn syntax(line: usize, col: usize, msg: impl Into<String>) -> FormatError {
    err(line, col, FormatErrorKind::Syntax(msg.into()))
}

/// Parses `e<k>` returning `k`.
fn basis_index(tok: &str) -> Option<usize> {
    let digits = tok.strip_prefix('e')?;
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) || digits.len() > 6 {
        return None;
    }
    digits.parse().ok()
}

/// Length in chars of a trailing `e<digits>` token, if the text ends in one
/// that is not glued to a preceding identifier character.
fn trailing_basis(text: &str) -> Option<(usize, usize)> {
    let chars: Vec<char> = text.chars().collect();
    let mut k = chars.len();
    while k > 0 && chars[k - 1].is_ascii_digit() {
        k -= 1;
    }
    if k == chars.len() || k == 0 || chars[k - 1] != 'e' {
        return None;
    }
    let start = k - 1;
    if start > 0 && (chars[start - 1].is_alphanumeric() || chars[start - 1] == '_') {
        return None;
    }
    let idx: String = chars[k..].iter().collect();
    if idx.len() > 6 {
        return None;
    }
    Some((start, idx.parse().ok()?))
}

/// Parses the right-hand side `c1 e_k1 + c2 e_k2 - ...` into
/// `(coefficient, k)` pairs. `col0` is the column of the first character.
pub fn parse_rhs(text: &str, line: usize, col0: usize) -> Result<Vec<(Expr, usize)>, FormatError> {
    let chars: Vec<char> = text.chars().collect();
    // split into (sign, start, end) pieces at top-level + or - following a basis vector
    let mut pieces = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    let mut negate = false;
    for (pos, &c) in chars.iter().enumerate() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            '+' | '-' if depth == 0 => {
                let so_far: String = chars[start..pos].iter().collect();
                if trailing_basis(so_far.trim_end()).is_some() {
                    pieces.push((negate, start, pos));
                    negate = c == '-';
                    start = pos + 1;
                }
            }
            _ => {}
        }
    }
    pieces.push((negate, start, chars.len()));
    let mut out = Vec::new();
    for (negate, s, e) in pieces {
        let piece: String = chars[s..e].iter().collect();
        let lead = piece.chars().take_while(|c| c.is_whitespace()).count();
        let trimmed = piece.trim();
        let col = col0 + s + lead;
        if trimmed.is_empty() {
            return Err(syntax(line, col, "empty term"));
        }
        let (bstart, k) =
            trailing_basis(trimmed).ok_or_else(|| syntax(line, col, "term must end with a basis vector e<k>"))?;
        let coeff_text: String = trimmed.chars().take(bstart).collect();
        let mut coeff_text = coeff_text.trim_end().to_string();
        if coeff_text.ends_with('*') {
            coeff_text.pop();
            if coeff_text.trim().is_empty() {
                return Err(syntax(line, col, "missing coefficient before `*`"));
            }
        }
        let coeff_trim = coeff_text.trim();
        let coeff = match coeff_trim {
            "" => Expr::int(1),
            "-" => Expr::Neg(Box::new(Expr::int(1))),
            _ => Expr::parse(coeff_trim).map_err(|e| match e {
                ExprError::Syntax { col: c, msg } => syntax(line, col + c - 1, msg),
                other => syntax(line, col, other.to_string()),
            })?,
        };
        let coeff = if negate { Expr::Neg(Box::new(coeff)) } else { coeff };
        out.push((coeff, k));
    }
    Ok(out)
}

/// Parses one table line `e<i> e<j> = rhs`.
pub fn parse_table_line(text: &str, line: usize, col0: usize) -> Result<TableLine, FormatError> {
    let Some(eq) = text.find('=') else {
        return Err(syntax(line, col0, "expected `e<i> e<j> = ...`"));
    };
    let lhs = &text[..eq];
    let rhs_col = col0 + text[..eq + 1].chars().count();
    let mut factors = Vec::new();
    let mut search = 0;
    for tok in lhs.split_whitespace() {
        let off = lhs[search..].find(tok).expect("token is in the text") + search;
        search = off + tok.len();
        let col = col0 + lhs[..off].chars().count();
        // also accept the compact form e1e2
        let parts: Vec<&str> = if tok.starts_with('e') && tok.matches('e').count() == 2 && !tok.starts_with("ee") {
            let second = tok[1..].find('e').expect("two e's") + 1;
            vec![&tok[..second], &tok[second..]]
        } else {
            vec![tok]
        };
        for part in parts {
            let k = basis_index(part)
                .ok_or_else(|| syntax(line, col, format!("expected a basis vector, found `{part}`")))?;
            factors.push((k, col));
        }
    }
    if factors.len() != 2 {
        return Err(syntax(line, col0, "left-hand side must be a product of two basis vectors"));
    }
    let terms = parse_rhs(&text[eq + 1..], line, rhs_col)?;
    Ok(TableLine { i: factors[0].0, j: factors[1].0, terms })
}

impl AlgebraFile {
    pub fn parse(text: &str) -> Result<AlgebraFile, FormatError> {
        let mut name = None;
        let mut dim = None;
        let mut field = None;
        let mut params: Option<Vec<String>> = None;
        let mut in_table = false;
        let mut ended = false;
        let mut lines: Vec<(TableLine, usize, usize)> = Vec::new();
        let mut last_line = 0;
        for (idx, raw) in text.lines().enumerate() {
            let lno = idx + 1;
            last_line = lno;
            let content = raw.split('#').next().unwrap_or("");
            let trimmed = content.trim();
            if trimmed.is_empty() {
                continue;
            }
            let col0 = content.chars().take_while(|c| c.is_whitespace()).count() + 1;
            if ended {
                return Err(syntax(lno, col0, "content after `end`"));
            }
            if in_table {
                if trimmed == "end" {
                    ended = true;
                } else {
                    let tl = parse_table_line(trimmed, lno, col0)?;
                    lines.push((tl, lno, col0));
                }
                continue;
            }
            let (kw, rest) = trimmed.split_once(char::is_whitespace).unwrap_or((trimmed, ""));
            let rest = rest.trim();
            let rest_col = col0 + trimmed.chars().count() - rest.chars().count();
            let repeated = |lno| err(lno, col0, FormatErrorKind::RepeatedHeader(kw.to_string()));
            match kw {
                "algebra" => {
                    if name.is_some() {
                        return Err(repeated(lno));
                    }
                    if rest.is_empty() || rest.contains(char::is_whitespace) {
                        return Err(syntax(lno, rest_col, "expected a single name"));
                    }
                    name = Some(rest.to_string());
                }
                "dim" => {
                    if dim.is_some() {
                        return Err(repeated(lno));
                    }
                    let n: usize =
                        rest.parse().map_err(|_| syntax(lno, rest_col, format!("invalid dimension `{rest}`")))?;
                    if n > 64 {
                        return Err(syntax(lno, rest_col, "dimension too large"));
                    }
                    dim = Some(n);
                }
                "field" => {
                    if field.is_some() {
                        return Err(repeated(lno));
                    }
                    field = Some(rest.parse::<FieldSpec>().map_err(|e| err(lno, rest_col, e.into()))?);
                }
                "params" => {
                    if params.is_some() {
                        return Err(repeated(lno));
                    }
                    let mut ps = Vec::new();
                    for p in rest.split(|c: char| c.is_whitespace() || c == ',').filter(|s| !s.is_empty()) {
                        let p = match p {
                            "λ" => "lambda",
                            "μ" => "mu",
                            _ => p,
                        };
                        let ok = p.chars().next().is_some_and(|c| c.is_alphabetic() || c == '_')
                            && p.chars().all(|c| c.is_alphanumeric() || c == '_');
                        if !ok || basis_index(p).is_some() {
                            return Err(syntax(lno, rest_col, format!("invalid parameter name `{p}`")));
                        }
                        if ps.iter().any(|q| q == p) {
                            return Err(syntax(lno, rest_col, format!("parameter `{p}` listed twice")));
                        }
                        ps.push(p.to_string());
                    }
                    params = Some(ps);
                }
                "table" => {
                    if !rest.is_empty() {
                        return Err(syntax(lno, rest_col, "unexpected text after `table`"));
                    }
                    if name.is_none() {
                        return Err(err(lno, col0, FormatErrorKind::MissingHeader("algebra")));
                    }
                    if dim.is_none() {
                        return Err(err(lno, col0, FormatErrorKind::MissingHeader("dim")));
                    }
                    in_table = true;
                }
                _ => return Err(syntax(lno, col0, format!("unknown keyword `{kw}`"))),
            }
        }
        if !in_table {
            return Err(err(last_line.max(1), 1, FormatErrorKind::MissingHeader("table")));
        }
        if !ended {
            return Err(err(last_line.max(1), 1, FormatErrorKind::MissingEnd));
        }
        let dim = dim.expect("checked");
        let field = field.unwrap_or(FieldSpec::Rationals);
        let params = params.unwrap_or_default();
        let known: BTreeSet<&str> = params.iter().map(String::as_str).collect();
        let mut seen = BTreeSet::new();
        for (tl, lno, col) in &lines {
            if !seen.insert((tl.i, tl.j)) {
                return Err(err(*lno, *col, FormatErrorKind::DuplicateProduct(tl.i, tl.j)));
            }
            for k in [tl.i, tl.j].into_iter().chain(tl.terms.iter().map(|t| t.1)) {
                if k == 0 || k > dim {
                    return Err(err(*lno, *col, FormatErrorKind::IndexOutOfRange(k, dim)));
                }
            }
            for (coeff, _) in &tl.terms {
                if let Some(v) = coeff.variables().into_iter().find(|v| !known.contains(v.as_str())) {
                    return Err(err(*lno, *col, FormatErrorKind::UnknownParameter(v)));
                }
                // constant coefficients are evaluated eagerly so that, e.g.,
                // 1/2 over GF(2) fails at parse time
                if coeff.variables().is_empty() {
                    coeff.eval(field, &HashMap::new()).map_err(|e| match e {
                        ExprError::Scalar(s) => err(*lno, *col, s.into()),
                        other => syntax(*lno, *col, other.to_string()),
                    })?;
                }
            }
        }
        Ok(AlgebraFile {
            name: name.expect("checked"),
            dim,
            field,
            params,
            lines: lines.into_iter().map(|(tl, _, _)| tl).collect(),
        })
    }

    /// Substitute parameter values; every parameter must be bound.
    pub fn instantiate(&self, bindings: &HashMap<String, Scalar>) -> Result<Algebra, BindError> {
        self.instantiate_in(self.field, bindings)
    }

    /// As `instantiate`, but reading the table over another field.
    pub fn instantiate_in(&self, field: FieldSpec, bindings: &HashMap<String, Scalar>) -> Result<Algebra, BindError> {
        for p in &self.params {
            if !bindings.contains_key(p) {
                return Err(BindError::Unbound(p.clone()));
            }
        }
        if let Some(extra) = bindings.keys().find(|k| !self.params.contains(k)) {
            return Err(BindError::Extra(extra.clone()));
        }
        let mut entries = Vec::new();
        for tl in &self.lines {
            for (coeff, k) in &tl.terms {
                let c = coeff.eval(field, bindings).map_err(|source| BindError::Eval { i: tl.i, j: tl.j, source })?;
                entries.push((tl.i - 1, tl.j - 1, c, k - 1));
            }
        }
        Ok(Algebra::from_entries(field, self.dim, entries).expect("indices validated at parse time"))
    }

    /// A parameter-free file describing a concrete algebra.
    pub fn from_algebra(name: &str, a: &Algebra) -> AlgebraFile {
        let mut lines = Vec::new();
        for (i, j, prod) in a.nonzero_products() {
            let terms =
                prod.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, c)| (scalar_expr(c), k + 1)).collect();
            lines.push(TableLine { i: i + 1, j: j + 1, terms });
        }
        AlgebraFile { name: name.to_string(), dim: a.dim(), field: a.field(), params: Vec::new(), lines }
    }
}

/// Expression for a scalar literal (`3`, `-1/2`, residues as integers).
pub fn scalar_expr(c: &Scalar) -> Expr {
    match c.as_rational() {
        Some(r) => {
            let num = Expr::Int(r.numer().abs());
            let e = if r.denom() == &1.into() {
                num
            } else {
                Expr::Div(Box::new(num), Box::new(Expr::Int(r.denom().clone())))
            };
            if r.numer() < &0.into() {
                Expr::Neg(Box::new(e))
            } else {
                e
            }
        }
        None => Expr::Int(c.residue().expect("prime field").into()),
    }
}

fn write_coeff(f: &mut fmt::Formatter<'_>, coeff: &Expr, k: usize) -> fmt::Result {
    match coeff {
        Expr::Int(n) if n == &1.into() => write!(f, "e{k}"),
        Expr::Int(_) | Expr::Var(_) => write!(f, "{coeff} e{k}"),
        Expr::Div(a, b) if matches!(**a, Expr::Int(_)) && matches!(**b, Expr::Int(_)) => write!(f, "{coeff} e{k}"),
        _ => write!(f, "({coeff}) e{k}"),
    }
}

impl fmt::Display for AlgebraFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "algebra {}", self.name)?;
        writeln!(f, "dim {}", self.dim)?;
        writeln!(f, "field {}", self.field)?;
        if !self.params.is_empty() {
            writeln!(f, "params {}", self.params.join(" "))?;
        }
        writeln!(f, "table")?;
        for tl in &self.lines {
            write!(f, "e{} e{} = ", tl.i, tl.j)?;
            for (n, (coeff, k)) in tl.terms.iter().enumerate() {
                match coeff {
                    Expr::Neg(inner) if n > 0 => {
                        write!(f, " - ")?;
                        write_coeff(f, inner, *k)?;
                    }
                    _ => {
                        if n > 0 {
                            write!(f, " + ")?;
                        }
                        write_coeff(f, coeff, *k)?;
                    }
                }
            }
            writeln!(f)?;
        }
        writeln!(f, "end")
    }
}

/// Parse and instantiate a parameter-free file.
pub fn parse_algebra(text: &str) -> Result<(String, Algebra), FormatError> {
    let file = AlgebraFile::parse(text)?;
    if let Some(p) = file.params.first() {
        return Err(err(1, 1, FormatErrorKind::Syntax(format!("parameter `{p}` needs a value"))));
    }
    let a = file.instantiate(&HashMap::new()).map_err(|e| syntax(1, 1, e.to_string()))?;
    Ok((file.name, a))
}
