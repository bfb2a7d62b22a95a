//! Finite-dimensional Lie algebras over the rationals given by structure
//! constants `[e_i, e_j] = sum_k c[i][j][k] e_k`.

use std::fmt;

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{add_vec, coordinates_in, in_span, span_basis, Mat};
use crate::rational::{format_rational, int, unit_vec, zero_vec, Rational, Vector};

/// Inputs above this dimension trigger a warning in reports.
pub const SOFT_DIM_CAP: usize = 16;
/// Inputs above this dimension are rejected.
pub const HARD_DIM_CAP: usize = 24;

/// `(k, [(i, j, a)])`: `d xi^k` has coefficient `a` on `xi^i ^ xi^j`.
pub type DifferentialRow = (usize, Vec<(usize, usize, Rational)>);

#[derive(Clone, PartialEq, Eq)]
pub struct LieAlgebra {
    dim: usize,
    names: Vec<String>,
    /// Row-major `c[(i * dim + j) * dim + k]`.
    c: Vec<Rational>,
}

/// First failure found by [`LieAlgebra::validate`]. Indices are 0-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    /// `c[i][j][k] != -c[j][i][k]` (or a nonzero self-bracket when `i == j`).
    Antisymmetry { i: usize, j: usize, k: usize },
    /// `[e_i,[e_j,e_k]] + [e_j,[e_k,e_i]] + [e_k,[e_i,e_j]]` is nonzero.
    Jacobi {
        i: usize,
        j: usize,
        k: usize,
        #[serde(serialize_with = "crate::io::serialize_vector")]
        residual: Vector,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Antisymmetry { i, j, k } => {
                write!(f, "antisymmetry violated at ({}, {}, {})", i + 1, j + 1, k + 1)
            }
            Violation::Jacobi { i, j, k, residual } => {
                let r: Vec<String> = residual.iter().map(format_rational).collect();
                write!(f, "Jacobi identity violated at ({}, {}, {}), residual [{}]", i + 1, j + 1, k + 1, r.join(", "))
            }
        }
    }
}

impl LieAlgebra {
    /// Raw constructor; no axioms are checked. `c` is indexed `c[i][j][k]`.
    pub fn from_structure_constants(names: Vec<String>, c: Vec<Vec<Vector>>) -> Result<Self> {
        let dim = names.len();
        if dim > HARD_DIM_CAP {
            return Err(Error::TooLarge(dim));
        }
        if c.len() != dim || c.iter().any(|row| row.len() != dim || row.iter().any(|v| v.len() != dim)) {
            return Err(Error::DimensionMismatch { expected: dim, found: c.len() });
        }
        Ok(LieAlgebra { dim, names, c: c.into_iter().flatten().flatten().collect() })
    }

    /// Builds an algebra from brackets `[e_i, e_j] = v` for `i != j`,
    /// completing antisymmetrically. Unlisted brackets are zero.
    pub fn from_brackets(names: Vec<String>, brackets: &[(usize, usize, Vector)]) -> Result<Self> {
        let dim = names.len();
        if dim > HARD_DIM_CAP {
            return Err(Error::TooLarge(dim));
        }
        let mut c = vec![Rational::zero(); dim * dim * dim];
        for (i, j, v) in brackets {
            if *i >= dim || *j >= dim {
                return Err(Error::DimensionMismatch { expected: dim, found: (*i).max(*j) + 1 });
            }
            if v.len() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: v.len() });
            }
            for k in 0..dim {
                c[(i * dim + j) * dim + k] = v[k].clone();
                if i != j {
                    c[(j * dim + i) * dim + k] = -v[k].clone();
                }
            }
        }
        Ok(LieAlgebra { dim, names, c })
    }

    /// Algebra whose Chevalley-Eilenberg differential on generators is
    /// `d xi^k = sum_{i<j} a[k][(i,j)] xi^i ^ xi^j`, i.e. `c_ij^k = -a`.
    pub fn from_differentials(names: Vec<String>, differentials: &[DifferentialRow]) -> Result<Self> {
        let dim = names.len();
        let mut brackets: Vec<(usize, usize, Vector)> = Vec::new();
        for (k, terms) in differentials {
            for (i, j, a) in terms {
                let (i, j, a) = if i < j { (*i, *j, a.clone()) } else { (*j, *i, -a.clone()) };
                if let Some(entry) = brackets.iter_mut().find(|(bi, bj, _)| *bi == i && *bj == j) {
                    entry.2[*k] -= a;
                } else {
                    let mut v = zero_vec(dim);
                    v[*k] = -a;
                    brackets.push((i, j, v));
                }
            }
        }
        LieAlgebra::from_brackets(names, &brackets)
    }

    pub fn abelian(names: Vec<String>) -> Result<Self> {
        LieAlgebra::from_brackets(names, &[])
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.c[(i * self.dim + j) * self.dim + k]
    }

    /// `[e_i, e_j]` in coordinates.
    pub fn basis_bracket(&self, i: usize, j: usize) -> Vector {
        let start = (i * self.dim + j) * self.dim;
        self.c[start..start + self.dim].to_vec()
    }

    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Vector {
        let n = self.dim;
        let mut out = zero_vec(n);
        for (i, xi) in x.iter().enumerate().take(n) {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate().take(n) {
                if yj.is_zero() || i == j {
                    continue;
                }
                let xy = xi * yj;
                for (k, o) in out.iter_mut().enumerate() {
                    let c = self.structure_constant(i, j, k);
                    if !c.is_zero() {
                        *o += &xy * c;
                    }
                }
            }
        }
        out
    }

    pub fn is_abelian(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }

    /// First pair `(i, j)`, `i < j`, with `[e_i, e_j] != 0`.
    pub fn nonzero_bracket(&self) -> Option<(usize, usize)> {
        (0..self.dim).flat_map(|i| (i + 1..self.dim).map(move |j| (i, j))).find(|&(i, j)| {
            self.basis_bracket(i, j).iter().any(|x| !x.is_zero())
        })
    }

    /// Checks antisymmetry and the Jacobi identity exactly.
    pub fn validate(&self) -> Result<(), Violation> {
        let n = self.dim;
        for i in 0..n {
            for j in i..n {
                for k in 0..n {
                    let a = self.structure_constant(i, j, k);
                    let b = self.structure_constant(j, i, k);
                    if !(a + b).is_zero() {
                        return Err(Violation::Antisymmetry { i, j, k });
                    }
                }
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let (ei, ej, ek) = (unit_vec(n, i), unit_vec(n, j), unit_vec(n, k));
                    let t1 = self.bracket(&ei, &self.basis_bracket(j, k));
                    let t2 = self.bracket(&ej, &self.basis_bracket(k, i));
                    let t3 = self.bracket(&ek, &self.basis_bracket(i, j));
                    let residual: Vector = (0..n).map(|m| &t1[m] + &t2[m] + &t3[m]).collect();
                    if residual.iter().any(|x| !x.is_zero()) {
                        return Err(Violation::Jacobi { i, j, k, residual });
                    }
                }
            }
        }
        Ok(())
    }

    /// Matrix of `y -> [x, y]`.
    pub fn ad_matrix(&self, x: &[Rational]) -> Result<Mat> {
        if x.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: x.len() });
        }
        let n = self.dim;
        Ok(Mat::from_fn(n, n, |k, j| {
            (0..n).filter(|&i| !x[i].is_zero()).map(|i| &x[i] * self.structure_constant(i, j, k)).sum()
        }))
    }

    pub fn ad_basis(&self, i: usize) -> Mat {
        self.ad_matrix(&unit_vec(self.dim, i)).expect("basis vector has the right length")
    }

    /// Checks `D[x,y] = [Dx,y] + [x,Dy]` on all basis pairs.
    pub fn is_derivation(&self, d: &Mat) -> bool {
        let n = self.dim;
        if d.rows() != n || d.cols() != n {
            return false;
        }
        let images: Vec<Vector> = d.columns();
        for i in 0..n {
            for j in i + 1..n {
                let lhs = d.mul_vec(&self.basis_bracket(i, j));
                let r1 = self.bracket(&images[i], &unit_vec(n, j));
                let r2 = self.bracket(&unit_vec(n, i), &images[j]);
                if (0..n).any(|k| lhs[k] != &r1[k] + &r2[k]) {
                    return false;
                }
            }
        }
        true
    }

    /// Checks `A[x,y] = [Ax, Ay]` on all basis pairs.
    pub fn is_automorphism(&self, a: &Mat) -> bool {
        let n = self.dim;
        if a.rows() != n || a.cols() != n || a.rank() != n {
            return false;
        }
        let images = a.columns();
        (0..n).all(|i| (i + 1..n).all(|j| a.mul_vec(&self.basis_bracket(i, j)) == self.bracket(&images[i], &images[j])))
    }

    pub fn whole(&self) -> Subspace {
        Subspace::new(self.dim, (0..self.dim).map(|i| unit_vec(self.dim, i)).collect())
    }

    /// `[a, b]` for subspaces `a`, `b`.
    pub fn bracket_of(&self, a: &Subspace, b: &Subspace) -> Subspace {
        let mut products = Vec::new();
        for x in a.basis() {
            for y in b.basis() {
                products.push(self.bracket(x, y));
            }
        }
        Subspace::new(self.dim, products)
    }

    pub fn derived_subalgebra(&self) -> Subspace {
        let g = self.whole();
        self.bracket_of(&g, &g)
    }

    /// `g, [g,g], [[g,g],[g,g]], ...` until the dimension stabilizes; the
    /// stable term appears once, last.
    pub fn derived_series(&self) -> Vec<Subspace> {
        let mut series = vec![self.whole()];
        loop {
            let last = series.last().expect("nonempty");
            let next = self.bracket_of(last, last);
            if next.dim() == last.dim() {
                return series;
            }
            series.push(next);
        }
    }

    /// `g, [g,g], [g,[g,g]], ...` until the dimension stabilizes.
    pub fn lower_central_series(&self) -> Vec<Subspace> {
        let g = self.whole();
        let mut series = vec![g.clone()];
        loop {
            let last = series.last().expect("nonempty");
            let next = self.bracket_of(&g, last);
            if next.dim() == last.dim() {
                return series;
            }
            series.push(next);
        }
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_series().last().is_some_and(|s| s.dim() == 0)
    }

    pub fn is_nilpotent(&self) -> bool {
        self.lower_central_series().last().is_some_and(|s| s.dim() == 0)
    }

    pub fn is_ideal(&self, s: &Subspace) -> bool {
        (0..self.dim).all(|i| s.basis().iter().all(|v| s.contains(&self.bracket(&unit_vec(self.dim, i), v))))
    }

    pub fn is_subalgebra(&self, s: &Subspace) -> bool {
        let b = s.basis();
        (0..b.len()).all(|i| (i + 1..b.len()).all(|j| s.contains(&self.bracket(&b[i], &b[j]))))
    }

    /// Joint kernel of all `ad_{e_i}`.
    pub fn center(&self) -> Subspace {
        let n = self.dim;
        let blocks: Vec<Mat> = (0..n).map(|i| self.ad_basis(i)).collect();
        Subspace::new(n, Mat::vstack(&blocks, n).kernel_basis())
    }

    /// `{x : ad_x nilpotent}` for solvable algebras.
    ///
    /// Let `A` be the associative algebra generated by the `ad_{e_i}`. In
    /// characteristic zero its nilpotent radical is the radical of the trace
    /// form `(a, b) -> tr(ab)`, and for solvable `g` an element `ad_x` of `A`
    /// is nilpotent exactly when it lies in that radical. Since `ad_x` is
    /// linear in `x`, the nilradical is the kernel of
    /// `x -> (tr(ad_x b))_{b in basis(A)}`.
    pub fn nilradical(&self) -> Result<Subspace> {
        if !self.is_solvable() {
            return Err(Error::NotSolvable);
        }
        let n = self.dim;
        let gens: Vec<Mat> = (0..n).map(|i| self.ad_basis(i)).collect();
        let envelope = associative_envelope(n, &gens);
        let m = Mat::from_fn(envelope.len(), n, |b, i| (&gens[i] * &envelope[b]).trace());
        let nil = Subspace::new(n, m.kernel_basis());
        for v in nil.basis() {
            if !self.ad_matrix(v)?.is_nilpotent() {
                return Err(Error::Consistency("nilradical element with non-nilpotent ad".into()));
            }
        }
        Ok(nil)
    }

    /// Independent check of a claimed nilradical `nil`: it is an ideal
    /// containing `[g, g]`, every basis vector has nilpotent ad, and for each
    /// complement direction `w` and each basis vector `v` of `nil`, neither
    /// `ad_w` nor `ad_{w+v}` is nilpotent.
    pub fn nilradical_oracle(&self, nil: &Subspace) -> bool {
        let n = self.dim;
        if !self.is_ideal(nil) || !nil.contains_subspace(&self.derived_subalgebra()) {
            return false;
        }
        let nilpotent = |x: &[Rational]| self.ad_matrix(x).is_ok_and(|m| m.is_nilpotent());
        if !nil.basis().iter().all(|v| nilpotent(v)) {
            return false;
        }
        nil.complement_directions().into_iter().all(|k| {
            let w = unit_vec(n, k);
            !nilpotent(&w) && nil.basis().iter().all(|v| !nilpotent(&add_vec(&w, v)))
        })
    }

    /// Structure constants of the subalgebra spanned by `basis` (which must
    /// be closed under the bracket), with the given names.
    pub fn restrict_to(&self, basis: &[Vector], names: Vec<String>) -> Result<LieAlgebra> {
        let m = basis.len();
        let mut c = vec![vec![zero_vec(m); m]; m];
        for i in 0..m {
            for j in 0..m {
                let b = self.bracket(&basis[i], &basis[j]);
                c[i][j] = coordinates_in(basis, &b)
                    .ok_or_else(|| Error::Precondition("subspace is not closed under the bracket".into()))?;
            }
        }
        LieAlgebra::from_structure_constants(names, c)
    }
}

/// Basis of the (non-unital) associative algebra generated by `gens`,
/// saturated under left multiplication by the generators.
fn associative_envelope(n: usize, gens: &[Mat]) -> Vec<Mat> {
    let mut basis: Vec<Mat> = Vec::new();
    let mut echelon: Vec<Vector> = Vec::new();
    let mut frontier: Vec<Mat> = Vec::new();
    let push = |m: Mat, basis: &mut Vec<Mat>, echelon: &mut Vec<Vector>, frontier: &mut Vec<Mat>| {
        let v = m.to_vector();
        if v.iter().all(Zero::is_zero) || (!echelon.is_empty() && in_span(echelon, &v)) {
            return;
        }
        echelon.push(v);
        basis.push(m.clone());
        frontier.push(m);
    };
    for g in gens {
        push(g.clone(), &mut basis, &mut echelon, &mut frontier);
    }
    while let Some(m) = frontier.pop() {
        for g in gens {
            push(g * &m, &mut basis, &mut echelon, &mut frontier);
        }
    }
    debug_assert!(basis.iter().all(|b| b.rows() == n));
    basis
}

impl fmt::Debug for LieAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LieAlgebra(dim {}; ", self.dim)?;
        let mut first = true;
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                let v = self.basis_bracket(i, j);
                if v.iter().all(Zero::is_zero) {
                    continue;
                }
                if !first {
                    write!(f, ", ")?;
                }
                first = false;
                write!(f, "[{},{}]={}", self.names[i], self.names[j], format_combination(&self.names, &v))?;
            }
        }
        write!(f, ")")
    }
}

/// `2*x - 1/2*y` style rendering of a coordinate vector.
pub fn format_combination(names: &[String], v: &[Rational]) -> String {
    let mut out = String::new();
    for (name, c) in names.iter().zip(v) {
        if c.is_zero() {
            continue;
        }
        let neg = c < &Rational::zero();
        let abs = if neg { -c.clone() } else { c.clone() };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if abs != int(1) {
            out.push_str(&format_rational(&abs));
            out.push('*');
        }
        out.push_str(name);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// A linear subspace of `Q^ambient`, stored as its reduced echelon basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn new(ambient: usize, spanning: Vec<Vector>) -> Self {
        let basis = span_basis(ambient, &spanning);
        let pivots = basis
            .iter()
            .map(|v| v.iter().position(|x| !x.is_zero()).expect("echelon rows are nonzero"))
            .collect();
        Subspace { ambient, basis, pivots }
    }

    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        in_span(&self.basis, v)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    /// Coordinate directions not used as pivots; together with this
    /// subspace they span the ambient space.
    pub fn complement_directions(&self) -> Vec<usize> {
        (0..self.ambient).filter(|i| !self.pivots.contains(i)).collect()
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        Subspace::new(self.ambient, self.basis.iter().chain(&other.basis).cloned().collect())
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        if self.dim() == 0 || other.dim() == 0 {
            return Subspace::zero(self.ambient);
        }
        // a * A = b * B  <=>  (a, -b) in ker [A^T | -B^T]
        let a = Mat::from_columns(self.ambient, &self.basis);
        let b = Mat::from_columns(self.ambient, &other.basis);
        let stacked = a.hstack(&(-&b));
        let vectors = stacked
            .kernel_basis()
            .into_iter()
            .map(|k| a.mul_vec(&k[..self.dim()]))
            .collect();
        Subspace::new(self.ambient, vectors)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::rational::int;

    fn names(n: &[&str]) -> Vec<String> {
        n.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn validate_examples() {
        assert!(LieAlgebra::abelian(names(&["a", "b", "c"])).unwrap().validate().is_ok());
        assert!(fixtures::heisenberg().validate().is_ok());
        let mut c = vec![vec![zero_vec(3); 3]; 3];
        c[0][1][2] = int(1);
        let bad = LieAlgebra::from_structure_constants(names(&["a", "b", "c"]), c).unwrap();
        assert_eq!(bad.validate(), Err(Violation::Antisymmetry { i: 0, j: 1, k: 2 }));
    }

    #[test]
    fn jacobi_violation_is_reported_with_residual() {
        // [a,b]=c, [b,c]=a, [c,a]=a fails Jacobi.
        let g = LieAlgebra::from_brackets(
            names(&["a", "b", "c"]),
            &[(0, 1, vec![int(0), int(0), int(1)]), (1, 2, vec![int(1), int(0), int(0)]), (2, 0, vec![int(1), int(0), int(0)])],
        )
        .unwrap();
        match g.validate() {
            Err(Violation::Jacobi { i: 0, j: 1, k: 2, residual }) => assert!(residual.iter().any(|x| !x.is_zero())),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn ad_examples() {
        let sol = fixtures::sol();
        assert_eq!(sol.ad_basis(0), Mat::diagonal(&[int(0), int(1), int(-1)]));
        let h = fixtures::heisenberg();
        let mut expected = Mat::zeros(3, 3);
        expected[(2, 1)] = int(1);
        assert_eq!(h.ad_basis(0), expected);
        assert!(LieAlgebra::abelian(names(&["a", "b"])).unwrap().ad_matrix(&[int(3), int(-2)]).unwrap().is_zero());
        assert!(matches!(h.ad_matrix(&[int(1)]), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn series_examples() {
        let ab = LieAlgebra::abelian(names(&["a", "b", "c"])).unwrap();
        let ds = ab.derived_series();
        assert_eq!(ds.iter().map(Subspace::dim).collect::<Vec<_>>(), vec![3, 0]);

        let h = fixtures::heisenberg();
        assert_eq!(h.derived_subalgebra(), Subspace::new(3, vec![unit_vec(3, 2)]));
        assert_eq!(h.lower_central_series().iter().map(Subspace::dim).collect::<Vec<_>>(), vec![3, 1, 0]);

        let sol = fixtures::sol();
        assert_eq!(sol.derived_subalgebra(), Subspace::new(3, vec![unit_vec(3, 1), unit_vec(3, 2)]));
    }

    #[test]
    fn solvability_flags() {
        let h = fixtures::heisenberg();
        assert!(h.is_solvable() && h.is_nilpotent());
        let sol = fixtures::sol();
        assert!(sol.is_solvable() && !sol.is_nilpotent());
        assert!(!fixtures::sl2().is_solvable());
    }

    #[test]
    fn nilradical_examples() {
        assert_eq!(fixtures::heisenberg().nilradical().unwrap().dim(), 3);
        let sol = fixtures::sol();
        assert_eq!(sol.nilradical().unwrap(), Subspace::new(3, vec![unit_vec(3, 1), unit_vec(3, 2)]));
        let ex1 = fixtures::hyperbolic_elliptic(&[int(1)], &[int(1)]);
        let n = ex1.nilradical().unwrap();
        assert_eq!(n.dim(), 5);
        assert_eq!(n.complement_directions(), vec![0]);
        assert!(matches!(fixtures::sl2().nilradical(), Err(Error::NotSolvable)));
    }

    #[test]
    fn nilradical_of_nonsplit_algebra() {
        // [t,x]=x, [t,y]=x+y: ad_t is a Jordan block, nilradical <x,y>.
        let g = LieAlgebra::from_brackets(
            names(&["t", "x", "y"]),
            &[(0, 1, vec![int(0), int(1), int(0)]), (0, 2, vec![int(0), int(1), int(1)])],
        )
        .unwrap();
        assert_eq!(g.nilradical().unwrap().dim(), 2);
    }

    #[test]
    fn ideal_and_center_examples() {
        let sol = fixtures::sol();
        assert!(sol.is_ideal(&sol.derived_subalgebra()));
        assert!(sol.is_ideal(&Subspace::new(3, vec![unit_vec(3, 1)])));
        assert!(!sol.is_ideal(&Subspace::new(3, vec![unit_vec(3, 0)])));
        assert_eq!(fixtures::heisenberg().center(), Subspace::new(3, vec![unit_vec(3, 2)]));
    }

    #[test]
    fn from_differentials_matches_sign_convention() {
        // d e3 = -e1^e2  <=>  [e1,e2] = e3
        let g = LieAlgebra::from_differentials(names(&["e1", "e2", "e3"]), &[(2, vec![(0, 1, int(-1))])]).unwrap();
        assert_eq!(g, fixtures::heisenberg());
    }

    #[test]
    fn subspace_intersection() {
        let a = Subspace::new(3, vec![unit_vec(3, 0), unit_vec(3, 1)]);
        let b = Subspace::new(3, vec![unit_vec(3, 1), unit_vec(3, 2)]);
        assert_eq!(a.intersection(&b), Subspace::new(3, vec![unit_vec(3, 1)]));
        assert_eq!(a.sum(&b).dim(), 3);
    }
}
