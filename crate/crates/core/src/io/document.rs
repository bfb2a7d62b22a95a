//! The TOML input document. Indices in documents are 1-based.

use std::fmt::Write as _;
use std::ops::Range;

use num_traits::Zero;
use serde::Deserialize;
use toml::{Spanned, Value};

use crate::classify::{AnalysisInput, HullOverride};
use crate::error::Result as LibResult;
use crate::forms::ExteriorForm;
use crate::hull::DEFAULT_FINITE_BOUND;
use crate::lie::{LieAlgebra, HARD_DIM_CAP};
use crate::linalg::Mat;
use crate::rational::{format_rational, int, parse_rational, Rational, Vector};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub message: String,
    /// 1-based; `None` when no location applies.
    pub line: Option<usize>,
    pub column: Option<usize>,
}

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match (self.line, self.column) {
            (Some(l), Some(c)) => write!(f, "line {l}, column {c}: {}", self.message),
            _ => f.write_str(&self.message),
        }
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bracket {
    pub i: usize,
    pub j: usize,
    pub value: Vector,
}

/// `d xi^target = sum coef xi^i ^ xi^j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Differential {
    pub target: usize,
    pub terms: Vec<(usize, usize, Rational)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BracketTable {
    Brackets(Vec<Bracket>),
    Differentials(Vec<Differential>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraSpec {
    pub basis: Vec<String>,
    pub table: BracketTable,
}

impl AlgebraSpec {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Builds the algebra; the Lie axioms are not checked here.
    pub fn lie_algebra(&self) -> LibResult<LieAlgebra> {
        match &self.table {
            BracketTable::Brackets(bs) => {
                let list: Vec<(usize, usize, Vector)> = bs.iter().map(|b| (b.i, b.j, b.value.clone())).collect();
                LieAlgebra::from_brackets(self.basis.clone(), &list)
            }
            BracketTable::Differentials(ds) => {
                let list: Vec<_> = ds.iter().map(|d| (d.target, d.terms.clone())).collect();
                LieAlgebra::from_differentials(self.basis.clone(), &list)
            }
        }
    }

    /// Nonzero brackets `[e_i, e_j]`, `i < j`.
    pub fn from_algebra(g: &LieAlgebra) -> Self {
        let n = g.dim();
        let mut brackets = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let value = g.basis_bracket(i, j);
                if value.iter().any(|x| !x.is_zero()) {
                    brackets.push(Bracket { i, j, value });
                }
            }
        }
        AlgebraSpec { basis: g.names().to_vec(), table: BracketTable::Brackets(brackets) }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HullOverrideSpec {
    pub algebra: Option<AlgebraSpec>,
    pub derivations: Vec<Mat>,
    pub finite_generators: Vec<Mat>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OmegaTerm {
    pub i: usize,
    pub j: usize,
    pub coef: Rational,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DocOptions {
    pub massey_depth: Option<usize>,
    pub finite_bound: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InputDocument {
    pub schema_version: u32,
    pub algebra: AlgebraSpec,
    pub hull_override: Option<HullOverrideSpec>,
    /// Indices refer to the hull basis (the override algebra if given).
    pub omega: Option<Vec<OmegaTerm>>,
    pub options: DocOptions,
}

impl InputDocument {
    pub fn new(algebra: AlgebraSpec) -> Self {
        InputDocument {
            schema_version: SCHEMA_VERSION,
            algebra,
            hull_override: None,
            omega: None,
            options: DocOptions::default(),
        }
    }

    /// Basis names of the algebra carrying the hull model.
    pub fn hull_basis(&self) -> &[String] {
        match self.hull_override.as_ref().and_then(|h| h.algebra.as_ref()) {
            Some(a) => &a.basis,
            None => &self.algebra.basis,
        }
    }

    pub fn omega_form(&self) -> Option<ExteriorForm> {
        let n = self.hull_basis().len();
        self.omega.as_ref().map(|terms| {
            terms.iter().fold(ExteriorForm::zero(n, 2), |acc, t| {
                acc.add(&ExteriorForm::monomial(n, &[t.i, t.j]).scale(&t.coef))
            })
        })
    }

    pub fn set_omega(&mut self, omega: &ExteriorForm) {
        self.omega = Some(
            omega
                .terms()
                .into_iter()
                .map(|(idx, coef)| OmegaTerm { i: idx[0], j: idx[1], coef })
                .collect(),
        );
    }

    pub fn analysis_input(&self) -> LibResult<AnalysisInput> {
        let algebra = self.algebra.lie_algebra()?;
        let hull_override = match &self.hull_override {
            None => None,
            Some(h) => Some(HullOverride {
                u: h.algebra.as_ref().map(AlgebraSpec::lie_algebra).transpose()?,
                torus_derivations: h.derivations.clone(),
                finite_generators: h.finite_generators.clone(),
            }),
        };
        Ok(AnalysisInput {
            algebra,
            hull_override,
            omega: self.omega_form(),
            massey_depth: self.options.massey_depth,
            finite_bound: self.options.finite_bound.unwrap_or(DEFAULT_FINITE_BOUND),
        })
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDoc {
    schema_version: Option<Spanned<i64>>,
    omega: Option<Vec<Spanned<RawOmega>>>,
    algebra: Option<Spanned<RawAlgebra>>,
    hull_override: Option<Spanned<RawHull>>,
    options: Option<RawOptions>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawAlgebra {
    dim: Option<Spanned<i64>>,
    basis: Option<Spanned<Vec<Spanned<String>>>>,
    brackets: Option<Vec<Spanned<RawBracket>>>,
    differentials: Option<Vec<Spanned<RawDifferential>>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawBracket {
    pair: Spanned<Vec<Spanned<i64>>>,
    value: Spanned<Vec<Spanned<Value>>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDifferential {
    target: Spanned<i64>,
    terms: Vec<Spanned<Vec<Spanned<Value>>>>,
}

type RawMatrix = Spanned<Vec<Spanned<Vec<Spanned<Value>>>>>;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawHull {
    algebra: Option<Spanned<RawAlgebra>>,
    #[serde(default)]
    derivations: Vec<RawMatrix>,
    #[serde(default)]
    finite_generators: Vec<RawMatrix>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawOmega {
    pair: Spanned<Vec<Spanned<i64>>>,
    coef: Spanned<Value>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawOptions {
    massey_depth: Option<Spanned<i64>>,
    finite_bound: Option<Spanned<i64>>,
}

struct Ctx<'a> {
    text: &'a str,
}

impl Ctx<'_> {
    fn err(&self, span: Range<usize>, message: impl Into<String>) -> ParseError {
        let start = span.start.min(self.text.len());
        let before = &self.text[..start];
        let line = before.matches('\n').count() + 1;
        let column = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
        ParseError { message: message.into(), line: Some(line), column: Some(column) }
    }

    fn rational(&self, v: &Spanned<Value>) -> Result<Rational, ParseError> {
        match v.get_ref() {
            Value::String(s) => parse_rational(s).ok_or_else(|| self.err(v.span(), format!("malformed rational '{s}'"))),
            Value::Integer(i) => Ok(int(*i)),
            Value::Array(a) => match a.as_slice() {
                [Value::Integer(p), Value::Integer(q)] if *q != 0 => Ok(Rational::new((*p).into(), (*q).into())),
                _ => Err(self.err(v.span(), "a rational pair must be [numerator, nonzero denominator]")),
            },
            Value::Float(_) => Err(self.err(
                v.span(),
                "floating-point literal; write rationals as strings such as \"1/2\" or \"0.5\"",
            )),
            _ => Err(self.err(v.span(), "expected a rational")),
        }
    }

    fn index(&self, v: &Spanned<i64>, dim: usize, what: &str) -> Result<usize, ParseError> {
        let i = *v.get_ref();
        if i < 1 || i as usize > dim {
            return Err(self.err(v.span(), format!("{what} index {i} out of range 1..={dim}")));
        }
        Ok(i as usize - 1)
    }

    fn index_value(&self, v: &Spanned<Value>, dim: usize, what: &str) -> Result<usize, ParseError> {
        match v.get_ref() {
            Value::Integer(i) => self.index(&Spanned::new(v.span(), *i), dim, what),
            _ => Err(self.err(v.span(), format!("{what} index must be an integer"))),
        }
    }

    fn pair(&self, p: &Spanned<Vec<Spanned<i64>>>, dim: usize) -> Result<(usize, usize), ParseError> {
        match p.get_ref().as_slice() {
            [a, b] => Ok((self.index(a, dim, "basis")?, self.index(b, dim, "basis")?)),
            _ => Err(self.err(p.span(), "pair must have exactly two indices")),
        }
    }

    fn algebra(&self, raw: &Spanned<RawAlgebra>) -> Result<AlgebraSpec, ParseError> {
        let a = raw.get_ref();
        let dim = match (&a.dim, &a.basis) {
            (Some(d), _) => {
                let v = *d.get_ref();
                if v < 1 || v as usize > HARD_DIM_CAP {
                    return Err(self.err(d.span(), format!("dim must be between 1 and {HARD_DIM_CAP}")));
                }
                v as usize
            }
            (None, Some(b)) => b.get_ref().len(),
            (None, None) => return Err(self.err(raw.span(), "algebra needs dim or basis")),
        };
        let basis: Vec<String> = match &a.basis {
            None => (1..=dim).map(|i| format!("e{i}")).collect(),
            Some(b) => {
                if b.get_ref().len() != dim {
                    return Err(self.err(b.span(), format!("basis has {} names but dim is {dim}", b.get_ref().len())));
                }
                let mut names: Vec<String> = Vec::new();
                for n in b.get_ref() {
                    let s = n.get_ref();
                    let ok = s.chars().next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
                        && s.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
                    if !ok {
                        return Err(self.err(n.span(), format!("basis name '{s}' is not an identifier")));
                    }
                    if names.contains(s) {
                        return Err(self.err(n.span(), format!("duplicate basis name '{s}'")));
                    }
                    names.push(s.clone());
                }
                names
            }
        };
        if basis.len() > HARD_DIM_CAP {
            return Err(self.err(raw.span(), format!("dimension {} exceeds the hard cap {HARD_DIM_CAP}", basis.len())));
        }
        let table = match (&a.brackets, &a.differentials) {
            (Some(_), Some(_)) => return Err(self.err(raw.span(), "give either brackets or differentials, not both")),
            (None, Some(ds)) => BracketTable::Differentials(self.differentials(ds, dim)?),
            (bs, None) => BracketTable::Brackets(self.brackets(bs.as_deref().unwrap_or(&[]), dim)?),
        };
        Ok(AlgebraSpec { basis, table })
    }

    fn brackets(&self, raw: &[Spanned<RawBracket>], dim: usize) -> Result<Vec<Bracket>, ParseError> {
        let mut out: Vec<Bracket> = Vec::new();
        for b in raw {
            let r = b.get_ref();
            let (i, j) = self.pair(&r.pair, dim)?;
            if r.value.get_ref().len() != dim {
                return Err(self.err(r.value.span(), format!("bracket value must have {dim} entries")));
            }
            let value: Vector = r.value.get_ref().iter().map(|v| self.rational(v)).collect::<Result<_, _>>()?;
            if i == j {
                if value.iter().any(|x| !x.is_zero()) {
                    return Err(self.err(b.span(), "self-bracket must be zero"));
                }
                continue;
            }
            if out.iter().any(|o| (o.i, o.j) == (i, j) || (o.i, o.j) == (j, i)) {
                return Err(self.err(b.span(), format!("duplicate bracket for pair ({}, {})", i + 1, j + 1)));
            }
            out.push(Bracket { i, j, value });
        }
        Ok(out)
    }

    fn differentials(&self, raw: &[Spanned<RawDifferential>], dim: usize) -> Result<Vec<Differential>, ParseError> {
        let mut out: Vec<Differential> = Vec::new();
        for d in raw {
            let r = d.get_ref();
            let target = self.index(&r.target, dim, "target")?;
            if out.iter().any(|o| o.target == target) {
                return Err(self.err(d.span(), format!("duplicate differential for generator {}", target + 1)));
            }
            let mut terms: Vec<(usize, usize, Rational)> = Vec::new();
            for t in &r.terms {
                let [a, b, c] = t.get_ref().as_slice() else {
                    return Err(self.err(t.span(), "differential term must be [i, j, coefficient]"));
                };
                let i = self.index_value(a, dim, "basis")?;
                let j = self.index_value(b, dim, "basis")?;
                if i == j {
                    return Err(self.err(t.span(), "a generator wedged with itself vanishes"));
                }
                if terms.iter().any(|(x, y, _)| (*x, *y) == (i, j) || (*x, *y) == (j, i)) {
                    return Err(self.err(t.span(), format!("duplicate term for pair ({}, {})", i + 1, j + 1)));
                }
                terms.push((i, j, self.rational(c)?));
            }
            out.push(Differential { target, terms });
        }
        Ok(out)
    }

    fn matrix(&self, raw: &RawMatrix, dim: usize) -> Result<Mat, ParseError> {
        let rows = raw.get_ref();
        if rows.len() != dim || rows.iter().any(|r| r.get_ref().len() != dim) {
            return Err(self.err(raw.span(), format!("matrix must be {dim} x {dim}")));
        }
        let data: Vec<Vector> = rows
            .iter()
            .map(|r| r.get_ref().iter().map(|v| self.rational(v)).collect::<Result<_, _>>())
            .collect::<Result<_, _>>()?;
        Ok(Mat::from_rows(data))
    }

    fn count(&self, v: &Spanned<i64>, min: i64, what: &str) -> Result<usize, ParseError> {
        let x = *v.get_ref();
        if x < min {
            return Err(self.err(v.span(), format!("{what} must be at least {min}")));
        }
        Ok(x as usize)
    }
}

pub fn parse_document(text: &str) -> Result<InputDocument, ParseError> {
    let ctx = Ctx { text };
    let raw: RawDoc = toml::from_str(text).map_err(|e| match e.span() {
        Some(span) => ctx.err(span, e.message().trim().to_string()),
        None => ParseError { message: e.message().trim().to_string(), line: None, column: None },
    })?;
    let version = raw.schema_version.as_ref().ok_or_else(|| ParseError {
        message: "schema_version is required".into(),
        line: Some(1),
        column: Some(1),
    })?;
    if *version.get_ref() != SCHEMA_VERSION as i64 {
        return Err(ctx.err(version.span(), format!("unsupported schema_version {}; expected {SCHEMA_VERSION}", version.get_ref())));
    }
    let algebra_raw = raw.algebra.as_ref().ok_or_else(|| ParseError {
        message: "missing [algebra] table".into(),
        line: None,
        column: None,
    })?;
    let algebra = ctx.algebra(algebra_raw)?;
    let hull_override = match &raw.hull_override {
        None => None,
        Some(h) => {
            let r = h.get_ref();
            let sub = r.algebra.as_ref().map(|a| ctx.algebra(a)).transpose()?;
            let dim = sub.as_ref().map_or(algebra.dim(), AlgebraSpec::dim);
            Some(HullOverrideSpec {
                algebra: sub,
                derivations: r.derivations.iter().map(|m| ctx.matrix(m, dim)).collect::<Result<_, _>>()?,
                finite_generators: r.finite_generators.iter().map(|m| ctx.matrix(m, dim)).collect::<Result<_, _>>()?,
            })
        }
    };
    let hull_dim = hull_override.as_ref().and_then(|h| h.algebra.as_ref()).map_or(algebra.dim(), AlgebraSpec::dim);
    let omega = match &raw.omega {
        None => None,
        Some(terms) => {
            let mut out: Vec<OmegaTerm> = Vec::new();
            for t in terms {
                let r = t.get_ref();
                let (i, j) = ctx.pair(&r.pair, hull_dim)?;
                if i == j {
                    return Err(ctx.err(t.span(), "omega term pairs a generator with itself"));
                }
                if out.iter().any(|o| (o.i, o.j) == (i, j) || (o.i, o.j) == (j, i)) {
                    return Err(ctx.err(t.span(), format!("duplicate omega term for pair ({}, {})", i + 1, j + 1)));
                }
                out.push(OmegaTerm { i, j, coef: ctx.rational(&r.coef)? });
            }
            Some(out)
        }
    };
    let options = match &raw.options {
        None => DocOptions::default(),
        Some(o) => DocOptions {
            massey_depth: o.massey_depth.as_ref().map(|v| ctx.count(v, 0, "massey_depth")).transpose()?,
            finite_bound: o.finite_bound.as_ref().map(|v| ctx.count(v, 1, "finite_bound")).transpose()?,
        },
    };
    Ok(InputDocument { schema_version: SCHEMA_VERSION, algebra, hull_override, omega, options })
}

fn quoted(r: &Rational) -> String {
    format!("\"{}\"", format_rational(r))
}

/// One item per line; an empty array stays on one line.
fn render_array(out: &mut String, key: &str, items: impl IntoIterator<Item = String>) {
    let items: Vec<String> = items.into_iter().collect();
    if items.is_empty() {
        let _ = writeln!(out, "{key} = []");
        return;
    }
    let _ = writeln!(out, "{key} = [");
    for item in items {
        let _ = writeln!(out, "  {item},");
    }
    out.push_str("]\n");
}

fn render_algebra(out: &mut String, header: &str, a: &AlgebraSpec) {
    let _ = writeln!(out, "[{header}]");
    let _ = writeln!(out, "dim = {}", a.dim());
    let names: Vec<String> = a.basis.iter().map(|n| format!("\"{n}\"")).collect();
    let _ = writeln!(out, "basis = [{}]", names.join(", "));
    match &a.table {
        BracketTable::Brackets(bs) => render_array(
            out,
            "brackets",
            bs.iter().map(|b| {
                let v: Vec<String> = b.value.iter().map(quoted).collect();
                format!("{{ pair = [{}, {}], value = [{}] }}", b.i + 1, b.j + 1, v.join(", "))
            }),
        ),
        BracketTable::Differentials(ds) => render_array(
            out,
            "differentials",
            ds.iter().map(|d| {
                let t: Vec<String> =
                    d.terms.iter().map(|(i, j, c)| format!("[{}, {}, {}]", i + 1, j + 1, quoted(c))).collect();
                format!("{{ target = {}, terms = [{}] }}", d.target + 1, t.join(", "))
            }),
        ),
    }
}

fn render_matrices(out: &mut String, key: &str, ms: &[Mat]) {
    render_array(
        out,
        key,
        ms.iter().map(|m| {
            let rows: Vec<String> = (0..m.rows())
                .map(|i| format!("[{}]", m.row(i).iter().map(quoted).collect::<Vec<_>>().join(", ")))
                .collect();
            format!("[{}]", rows.join(", "))
        }),
    );
}

/// Canonical TOML text; `parse_document` inverts it exactly.
pub fn render_document(doc: &InputDocument) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "schema_version = {}", doc.schema_version);
    if let Some(terms) = &doc.omega {
        render_array(
            &mut out,
            "omega",
            terms.iter().map(|t| format!("{{ pair = [{}, {}], coef = {} }}", t.i + 1, t.j + 1, quoted(&t.coef))),
        );
    }
    out.push('\n');
    render_algebra(&mut out, "algebra", &doc.algebra);
    if let Some(h) = &doc.hull_override {
        out.push_str("\n[hull_override]\n");
        render_matrices(&mut out, "derivations", &h.derivations);
        render_matrices(&mut out, "finite_generators", &h.finite_generators);
        if let Some(a) = &h.algebra {
            out.push('\n');
            render_algebra(&mut out, "hull_override.algebra", a);
        }
    }
    if doc.options != DocOptions::default() {
        out.push_str("\n[options]\n");
        if let Some(d) = doc.options.massey_depth {
            let _ = writeln!(out, "massey_depth = {d}");
        }
        if let Some(b) = doc.options.finite_bound {
            let _ = writeln!(out, "finite_bound = {b}");
        }
    }
    out
}
