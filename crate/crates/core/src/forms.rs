//! Exterior forms on the dual of a Lie algebra.
//!
//! A monomial `xi^{i_1} ^ ... ^ xi^{i_k}` with `i_1 < ... < i_k` is stored
//! as the bitmask with bits `i_1..i_k` set. Bases of `Λ^k` list monomials
//! in lexicographic order of their index tuples.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use num_traits::{One, Signed, Zero};

use crate::linalg::Mat;
use crate::rational::{format_rational, parse_rational, Rational, Vector};

pub type Monomial = u32;

pub fn mask(indices: &[usize]) -> Monomial {
    indices.iter().fold(0, |m, &i| m | (1 << i))
}

pub fn indices(m: Monomial) -> Vec<usize> {
    (0..Monomial::BITS as usize).filter(|&i| m & (1 << i) != 0).collect()
}

/// Sign of `xi^A ^ xi^B` relative to the sorted monomial, or 0 if they overlap.
pub fn wedge_sign(a: Monomial, b: Monomial) -> i32 {
    if a & b != 0 {
        return 0;
    }
    let mut inversions = 0u32;
    let mut rest = b;
    while rest != 0 {
        let j = rest.trailing_zeros();
        rest &= rest - 1;
        inversions += a.checked_shr(j + 1).unwrap_or(0).count_ones();
    }
    if inversions.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Degree-`k` monomials over `dim` generators in lexicographic order.
pub fn monomial_basis(dim: usize, k: usize) -> Vec<Monomial> {
    fn go(start: usize, dim: usize, left: usize, acc: Monomial, out: &mut Vec<Monomial>) {
        if left == 0 {
            out.push(acc);
            return;
        }
        for i in start..=dim - left {
            go(i + 1, dim, left - 1, acc | (1 << i), out);
        }
    }
    let mut out = Vec::new();
    if k <= dim {
        go(0, dim, k, 0, &mut out);
    }
    out
}

/// Lexicographic monomial bases of every degree with reverse lookup.
#[derive(Clone, Debug)]
pub struct GradedBasis {
    dim: usize,
    bases: Vec<Vec<Monomial>>,
    positions: Vec<HashMap<Monomial, usize>>,
}

impl GradedBasis {
    pub fn new(dim: usize) -> Self {
        let bases: Vec<Vec<Monomial>> = (0..=dim).map(|k| monomial_basis(dim, k)).collect();
        let positions = bases.iter().map(|b| b.iter().enumerate().map(|(i, &m)| (m, i)).collect()).collect();
        GradedBasis { dim, bases, positions }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis(&self, k: usize) -> &[Monomial] {
        self.bases.get(k).map_or(&[], Vec::as_slice)
    }

    pub fn len(&self, k: usize) -> usize {
        self.basis(k).len()
    }

    pub fn position(&self, m: Monomial) -> usize {
        self.positions[m.count_ones() as usize][&m]
    }

    /// Coordinates of a homogeneous form in the lexicographic basis.
    pub fn coords(&self, form: &ExteriorForm) -> Vector {
        let mut v = vec![Rational::zero(); self.len(form.degree())];
        for (m, c) in &form.terms {
            v[self.position(*m)] = c.clone();
        }
        v
    }

    pub fn form(&self, k: usize, coords: &[Rational]) -> ExteriorForm {
        let terms = self.basis(k).iter().zip(coords).filter(|(_, c)| !c.is_zero()).map(|(m, c)| (*m, c.clone()));
        ExteriorForm { dim: self.dim, degree: k, terms: terms.collect() }
    }

    pub fn monomial_form(&self, m: Monomial) -> ExteriorForm {
        ExteriorForm::zero(self.dim, m.count_ones() as usize).with_term(m, Rational::one())
    }

    /// Matrix of a linear map on `Λ^k` given its values on monomials.
    pub fn operator(&self, k: usize, target: usize, mut image: impl FnMut(Monomial) -> ExteriorForm) -> Mat {
        let cols: Vec<Vector> = self.basis(k).iter().map(|&m| self.coords(&image(m))).collect();
        let mut out = Mat::from_columns(self.len(target), &cols);
        if cols.is_empty() {
            out = Mat::zeros(self.len(target), 0);
        }
        out
    }
}

/// Homogeneous exterior form.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExteriorForm {
    dim: usize,
    degree: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl ExteriorForm {
    pub fn zero(dim: usize, degree: usize) -> Self {
        ExteriorForm { dim, degree, terms: BTreeMap::new() }
    }

    pub fn one(dim: usize) -> Self {
        ExteriorForm::constant(dim, Rational::one())
    }

    pub fn constant(dim: usize, c: Rational) -> Self {
        ExteriorForm::zero(dim, 0).with_term(0, c)
    }

    pub fn generator(dim: usize, i: usize) -> Self {
        ExteriorForm::zero(dim, 1).with_term(1 << i, Rational::one())
    }

    /// `xi^{i_1} ^ ... ^ xi^{i_k}` for indices in any order.
    pub fn monomial(dim: usize, idx: &[usize]) -> Self {
        idx.iter().fold(ExteriorForm::one(dim), |acc, &i| acc.wedge(&ExteriorForm::generator(dim, i)))
    }

    fn with_term(mut self, m: Monomial, c: Rational) -> Self {
        self.add_term(m, c);
        self
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, idx: &[usize]) -> Rational {
        self.terms.get(&mask(idx)).cloned().unwrap_or_else(Rational::zero)
    }

    /// Terms as (sorted indices, coefficient), lexicographically ordered.
    pub fn terms(&self) -> Vec<(Vec<usize>, Rational)> {
        let mut out: Vec<_> = self.terms.iter().map(|(m, c)| (indices(*m), c.clone())).collect();
        out.sort();
        out
    }

    pub fn raw_terms(&self) -> impl Iterator<Item = (Monomial, &Rational)> {
        self.terms.iter().map(|(m, c)| (*m, c))
    }

    pub fn add(&self, other: &ExteriorForm) -> ExteriorForm {
        assert_eq!(self.degree, other.degree, "adding forms of different degree");
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &ExteriorForm) -> ExteriorForm {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> ExteriorForm {
        self.scale(&-Rational::one())
    }

    pub fn scale(&self, s: &Rational) -> ExteriorForm {
        if s.is_zero() {
            return ExteriorForm::zero(self.dim, self.degree);
        }
        ExteriorForm { dim: self.dim, degree: self.degree, terms: self.terms.iter().map(|(m, c)| (*m, c * s)).collect() }
    }

    /// Wedge product; zero when the total degree exceeds the dimension.
    pub fn wedge(&self, other: &ExteriorForm) -> ExteriorForm {
        let mut out = ExteriorForm::zero(self.dim, self.degree + other.degree);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                match wedge_sign(*a, *b) {
                    0 => {}
                    1 => out.add_term(a | b, x * y),
                    _ => out.add_term(a | b, -(x * y)),
                }
            }
        }
        out
    }

    pub fn power(&self, k: usize) -> ExteriorForm {
        (0..k).fold(ExteriorForm::one(self.dim), |acc, _| acc.wedge(self))
    }

    /// Renders with the given generator names, e.g. `x1^y1 - 2 z1^w1`.
    pub fn display_with(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (idx, c)) in self.terms().into_iter().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let word: Vec<&str> = idx.iter().map(|&i| names[i].as_str()).collect();
            if idx.is_empty() {
                out.push_str(&format_rational(&abs));
            } else {
                if !abs.is_one() {
                    let _ = write!(out, "{} ", format_rational(&abs));
                }
                out.push_str(&word.join("^"));
            }
        }
        out
    }
}

/// Parses `"x1^y1 - 2 z1^w1 + 1/2 a^b"`; `*` may separate a coefficient
/// from its monomial and `∧` may replace `^`.
pub fn parse_form(names: &[String], text: &str) -> Result<ExteriorForm, String> {
    let text = text.replace('∧', "^").replace('*', " ");
    let mut terms: Vec<(bool, String)> = Vec::new();
    let mut current = String::new();
    let mut negative = false;
    for ch in text.chars() {
        if ch != '+' && ch != '-' {
            current.push(ch);
            continue;
        }
        if current.trim().is_empty() {
            negative ^= ch == '-';
            continue;
        }
        terms.push((negative, current.trim().to_string()));
        current.clear();
        negative = ch == '-';
    }
    if current.trim().is_empty() {
        return Err(if terms.is_empty() { "empty form" } else { "form ends with a dangling sign" }.into());
    }
    terms.push((negative, current.trim().to_string()));
    let dim = names.len();
    let mut degree: Option<usize> = None;
    let mut acc: Option<ExteriorForm> = None;
    for (negative, term) in terms {
        let (coef, word) = match term.split_once(char::is_whitespace) {
            Some((c, w)) if parse_rational(c).is_some() => (parse_rational(c).unwrap(), w.trim().to_string()),
            _ => match parse_rational(&term) {
                Some(c) => (c, String::new()),
                None => (Rational::one(), term.clone()),
            },
        };
        let mut idx = Vec::new();
        if !word.is_empty() {
            for name in word.split('^') {
                let name = name.trim();
                let i = names.iter().position(|n| n == name).ok_or_else(|| format!("unknown basis name '{name}'"))?;
                idx.push(i);
            }
        }
        if *degree.get_or_insert(idx.len()) != idx.len() {
            return Err("form mixes degrees".into());
        }
        let coef = if negative { -coef } else { coef };
        let term_form = ExteriorForm::monomial(dim, &idx).scale(&coef);
        acc = Some(match acc {
            None => term_form,
            Some(a) => a.add(&term_form),
        });
    }
    Ok(acc.expect("at least one term"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn names(n: &[&str]) -> Vec<String> {
        n.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn lexicographic_bases() {
        let b = monomial_basis(4, 2);
        let idx: Vec<Vec<usize>> = b.iter().map(|m| indices(*m)).collect();
        assert_eq!(idx, vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]);
        assert_eq!(monomial_basis(3, 0), vec![0]);
        assert!(monomial_basis(2, 3).is_empty());
    }

    #[test]
    fn wedge_examples() {
        let x = ExteriorForm::generator(3, 0);
        assert!(x.wedge(&x).is_zero());
        let e12 = ExteriorForm::generator(3, 0).wedge(&ExteriorForm::generator(3, 1));
        assert_eq!(e12.terms(), vec![(vec![0, 1], int(1))]);
        // basis x1, x2, x3, y: (x1^y)^(x2^x3) = x1^x2^x3^y
        let a = ExteriorForm::monomial(4, &[0, 3]);
        let b = ExteriorForm::monomial(4, &[1, 2]);
        assert_eq!(a.wedge(&b).terms(), vec![(vec![0, 1, 2, 3], int(1))]);
        assert_eq!(ExteriorForm::monomial(4, &[0, 3, 1]).terms(), vec![(vec![0, 1, 3], int(-1))]);
        assert!(a.wedge(&b).wedge(&a).is_zero());
    }

    #[test]
    fn graded_commutativity() {
        let a = ExteriorForm::monomial(5, &[0, 2]).add(&ExteriorForm::monomial(5, &[1, 4]));
        let b = ExteriorForm::generator(5, 3);
        assert_eq!(a.wedge(&b), b.wedge(&a));
        let c = ExteriorForm::generator(5, 1);
        assert_eq!(b.wedge(&c), c.wedge(&b).neg());
    }

    #[test]
    fn display_and_parse_round_trip() {
        let n = names(&["x1", "x2", "x3", "y"]);
        let w = parse_form(&n, "x1^y + x2^x3").unwrap();
        assert_eq!(w.display_with(&n), "x1^y + x2^x3");
        let v = parse_form(&n, "-1/2 x3^x2 + 2*x1^y").unwrap();
        assert_eq!(v.display_with(&n), "2 x1^y + 1/2 x2^x3");
        assert_eq!(parse_form(&n, &v.display_with(&n)).unwrap(), v);
        assert!(parse_form(&n, "x1^z").is_err());
        assert!(parse_form(&n, "x1 + x1^x2").is_err());
        assert!(parse_form(&n, "x1 +").is_err());
        assert_eq!(parse_form(&n, "x1 - x1").unwrap(), ExteriorForm::zero(4, 1));
    }

    #[test]
    fn power_of_symplectic_form() {
        let n = names(&["x1", "x2", "x3", "y"]);
        let w = parse_form(&n, "x1^y + x2^x3").unwrap();
        assert_eq!(w.power(2).terms(), vec![(vec![0, 1, 2, 3], int(2))]);
    }
}
