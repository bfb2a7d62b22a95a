//! Chevalley-Eilenberg cochain complexes, their sub-DGAs, and cohomology
//! with explicit representatives.
//!
//! Sign convention: `d xi^k = -sum_{i<j} c_ij^k xi^i ^ xi^j`, extended as an
//! antiderivation. With `[T, X] = a X` this gives `d x = -a tau ^ x`.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::forms::{indices, ExteriorForm, GradedBasis, Monomial};
use crate::lie::LieAlgebra;
use crate::linalg::{coordinates_in, rank_of, Mat};
use crate::rational::{zero_vec, Rational, Vector};

/// A sub-DGA of `Λ g*`. The full complex has the monomial basis in every
/// degree; subcomplexes carry explicit bases in monomial coordinates.
#[derive(Clone, Debug)]
pub struct CochainComplex {
    algebra: LieAlgebra,
    graded: GradedBasis,
    /// `d xi^k` for each generator.
    generator_d: Vec<ExteriorForm>,
    /// `None` for the full complex.
    spaces: Option<Vec<Vec<Vector>>>,
    /// Differential `C^k -> C^{k+1}` in the chosen bases, `k = 0..=dim`.
    d: Vec<Mat>,
}

pub fn ce_complex(g: &LieAlgebra) -> Result<CochainComplex> {
    g.validate().map_err(Error::Invalid)?;
    let n = g.dim();
    let graded = GradedBasis::new(n);
    let generator_d: Vec<ExteriorForm> = (0..n)
        .map(|k| {
            let mut f = ExteriorForm::zero(n, 2);
            for i in 0..n {
                for j in i + 1..n {
                    let c = g.structure_constant(i, j, k);
                    if !c.is_zero() {
                        f = f.sub(&ExteriorForm::monomial(n, &[i, j]).scale(c));
                    }
                }
            }
            f
        })
        .collect();
    let mut cx = CochainComplex { algebra: g.clone(), graded, generator_d, spaces: None, d: Vec::new() };
    cx.d = (0..=n).map(|k| cx.graded.operator(k, k + 1, |m| cx.d_monomial(m))).collect();
    cx.check_d_squared()?;
    Ok(cx)
}

impl CochainComplex {
    fn d_monomial(&self, m: Monomial) -> ExteriorForm {
        let n = self.dim();
        let idx = indices(m);
        let mut out = ExteriorForm::zero(n, idx.len() + 1);
        for (r, &i) in idx.iter().enumerate() {
            let prefix = ExteriorForm::monomial(n, &idx[..r]);
            let suffix = ExteriorForm::monomial(n, &idx[r + 1..]);
            let term = prefix.wedge(&self.generator_d[i]).wedge(&suffix);
            out = if r % 2 == 0 { out.add(&term) } else { out.sub(&term) };
        }
        out
    }

    fn check_d_squared(&self) -> Result<()> {
        for k in 0..self.dim() {
            let dd = &self.d[k + 1] * &self.d[k];
            if let Some(j) = (0..dd.cols()).find(|&j| dd.column(j).iter().any(|x| !x.is_zero())) {
                let form = self.to_form(k, &self.basis_coords(k, j));
                return Err(Error::Consistency(format!(
                    "d^2 != 0 on {}",
                    form.display_with(self.algebra.names())
                )));
            }
        }
        Ok(())
    }

    fn basis_coords(&self, k: usize, j: usize) -> Vector {
        let mut v = zero_vec(self.space_dim(k));
        v[j] = Rational::from_integer(1.into());
        v
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn names(&self) -> &[String] {
        self.algebra.names()
    }

    /// Number of generators of the ambient exterior algebra.
    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn graded(&self) -> &GradedBasis {
        &self.graded
    }

    pub fn is_full(&self) -> bool {
        self.spaces.is_none()
    }

    pub fn space_dim(&self, k: usize) -> usize {
        match &self.spaces {
            None => self.graded.len(k),
            Some(s) => s.get(k).map_or(0, Vec::len),
        }
    }

    pub fn space_dims(&self) -> Vec<usize> {
        (0..=self.dim()).map(|k| self.space_dim(k)).collect()
    }

    /// Basis of `C^k` in monomial coordinates.
    pub fn space_basis(&self, k: usize) -> Vec<Vector> {
        match &self.spaces {
            None => (0..self.graded.len(k)).map(|j| crate::rational::unit_vec(self.graded.len(k), j)).collect(),
            Some(s) => s.get(k).cloned().unwrap_or_default(),
        }
    }

    pub fn basis_form(&self, k: usize, j: usize) -> ExteriorForm {
        self.to_form(k, &self.basis_coords(k, j))
    }

    /// Restricted differential `C^k -> C^{k+1}`.
    pub fn differential(&self, k: usize) -> &Mat {
        &self.d[k]
    }

    /// True when the differential vanishes in every degree.
    pub fn differential_vanishes(&self) -> bool {
        self.d.iter().all(Mat::is_zero)
    }

    /// `d` on an arbitrary form of the ambient exterior algebra.
    pub fn apply_d(&self, form: &ExteriorForm) -> ExteriorForm {
        let mut out = ExteriorForm::zero(self.dim(), form.degree() + 1);
        for (m, c) in form.raw_terms() {
            out = out.add(&self.d_monomial(m).scale(c));
        }
        out
    }

    pub fn generator_differential(&self, i: usize) -> &ExteriorForm {
        &self.generator_d[i]
    }

    /// Form with the given coordinates in the basis of `C^k`.
    pub fn to_form(&self, k: usize, coords: &[Rational]) -> ExteriorForm {
        match &self.spaces {
            None => self.graded.form(k, coords),
            Some(s) => {
                let mut v = zero_vec(self.graded.len(k));
                for (c, b) in coords.iter().zip(&s[k]) {
                    if !c.is_zero() {
                        for (vi, bi) in v.iter_mut().zip(b) {
                            *vi += c * bi;
                        }
                    }
                }
                self.graded.form(k, &v)
            }
        }
    }

    /// Coordinates in the basis of `C^k`, or `None` if the form lies outside.
    pub fn coords_of(&self, form: &ExteriorForm) -> Option<Vector> {
        let k = form.degree();
        if k > self.dim() {
            return if form.is_zero() { Some(Vec::new()) } else { None };
        }
        let v = self.graded.coords(form);
        match &self.spaces {
            None => Some(v),
            Some(s) => coordinates_in(&s[k], &v),
        }
    }

    pub fn contains(&self, form: &ExteriorForm) -> bool {
        self.coords_of(form).is_some()
    }

    /// Sub-DGA with the given per-degree bases (monomial coordinates).
    /// Fails if the span is not stable under `d`.
    pub fn subcomplex(&self, spaces: Vec<Vec<Vector>>) -> Result<CochainComplex> {
        let n = self.dim();
        if spaces.len() != n + 1 {
            return Err(Error::DimensionMismatch { expected: n + 1, found: spaces.len() });
        }
        for (k, s) in spaces.iter().enumerate() {
            if rank_of(s) != s.len() {
                return Err(Error::Consistency(format!("degree {k} basis of subcomplex is dependent")));
            }
        }
        let full = CochainComplex { spaces: None, ..self.clone() };
        let d = (0..=n)
            .map(|k| {
                let cols: Vec<Vector> = spaces[k]
                    .iter()
                    .map(|v| {
                        let image = full.d[k].mul_vec(v);
                        if k == n {
                            return Ok(Vec::new());
                        }
                        coordinates_in(&spaces[k + 1], &image)
                            .ok_or_else(|| Error::Consistency(format!("subcomplex is not d-stable in degree {k}")))
                    })
                    .collect::<Result<_>>()?;
                let rows = if k == n { 0 } else { spaces[k + 1].len() };
                Ok(if cols.is_empty() { Mat::zeros(rows, 0) } else { Mat::from_columns(rows, &cols) })
            })
            .collect::<Result<Vec<Mat>>>()?;
        Ok(CochainComplex { spaces: Some(spaces), d, ..full })
    }
}

/// One cohomology group `H^k` with representatives and projection data.
#[derive(Clone, Debug)]
pub struct CohomologyBasis {
    pub degree: usize,
    /// Representative cocycles in coordinates of `C^k`.
    pub representatives: Vec<Vector>,
    /// Independent coboundaries spanning `B^k`.
    pub boundaries: Vec<Vector>,
    /// `boundary_primitives[b]` (in `C^{k-1}`) has `d` equal to `boundaries[b]`.
    pub boundary_primitives: Vec<Vector>,
    /// `[boundaries | representatives]` as columns.
    system: Mat,
    cocycles: usize,
}

/// A closed form split as `sum class_i rep_i + d(primitive)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Projection {
    pub class: Vector,
    pub primitive: Vector,
}

impl CohomologyBasis {
    pub fn dim(&self) -> usize {
        self.representatives.len()
    }

    pub fn cocycle_dim(&self) -> usize {
        self.cocycles
    }

    /// Splits a cocycle; `None` if it is not closed.
    pub fn project(&self, coords: &[Rational]) -> Option<Projection> {
        let nb = self.boundaries.len();
        let x = self.system.solve(coords)?;
        let prim_len = self.boundary_primitives.first().map_or(0, Vec::len);
        let mut primitive = zero_vec(prim_len);
        for (c, p) in x[..nb].iter().zip(&self.boundary_primitives) {
            if !c.is_zero() {
                for (pi, qi) in primitive.iter_mut().zip(p) {
                    *pi += c * qi;
                }
            }
        }
        Some(Projection { class: x[nb..].to_vec(), primitive })
    }
}

pub fn cohomology(cx: &CochainComplex, k: usize) -> CohomologyBasis {
    let size = cx.space_dim(k);
    let cycles = if size == 0 { Vec::new() } else { cx.differential(k).kernel_basis() };
    let (boundaries, boundary_primitives) = if k == 0 {
        (Vec::new(), Vec::new())
    } else {
        let dprev = cx.differential(k - 1);
        let cols = dprev.independent_columns();
        let b: Vec<Vector> = cols.iter().map(|&j| dprev.column(j)).collect();
        let p: Vec<Vector> = cols.iter().map(|&j| cx.basis_coords(k - 1, j)).collect();
        (b, p)
    };
    let mut span = boundaries.clone();
    let mut representatives = Vec::new();
    let mut rank = rank_of(&span);
    for z in &cycles {
        span.push(z.clone());
        let r = rank_of(&span);
        if r > rank {
            rank = r;
            representatives.push(z.clone());
        } else {
            span.pop();
        }
    }
    let columns: Vec<Vector> = boundaries.iter().chain(&representatives).cloned().collect();
    let system = if columns.is_empty() { Mat::zeros(size, 0) } else { Mat::from_columns(size, &columns) };
    CohomologyBasis { degree: k, representatives, boundaries, boundary_primitives, system, cocycles: cycles.len() }
}

/// All cohomology groups of a complex, with the cup product.
#[derive(Clone, Debug)]
pub struct CohomologyRing {
    complex: CochainComplex,
    groups: Vec<CohomologyBasis>,
}

impl CohomologyRing {
    pub fn new(complex: CochainComplex) -> Self {
        let groups = (0..=complex.dim()).map(|k| cohomology(&complex, k)).collect();
        CohomologyRing { complex, groups }
    }

    pub fn complex(&self) -> &CochainComplex {
        &self.complex
    }

    pub fn group(&self, k: usize) -> &CohomologyBasis {
        &self.groups[k]
    }

    pub fn betti(&self) -> Vec<usize> {
        self.groups.iter().map(CohomologyBasis::dim).collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.betti().iter().enumerate().map(|(k, &b)| if k % 2 == 0 { b as i64 } else { -(b as i64) }).sum()
    }

    /// Representative form of a class given by coordinates in `H^k`.
    pub fn representative(&self, k: usize, class: &[Rational]) -> ExteriorForm {
        let g = &self.groups[k];
        let mut coords = zero_vec(self.complex.space_dim(k));
        for (c, r) in class.iter().zip(&g.representatives) {
            if !c.is_zero() {
                for (x, y) in coords.iter_mut().zip(r) {
                    *x += c * y;
                }
            }
        }
        self.complex.to_form(k, &coords)
    }

    pub fn basis_representatives(&self, k: usize) -> Vec<ExteriorForm> {
        (0..self.groups[k].dim()).map(|j| self.complex.to_form(k, &self.groups[k].representatives[j])).collect()
    }

    /// Class and primitive of a closed form of the complex.
    pub fn decompose(&self, form: &ExteriorForm) -> Result<(Vector, ExteriorForm)> {
        let k = form.degree();
        if k > self.complex.dim() {
            return Ok((Vec::new(), ExteriorForm::zero(self.complex.dim(), k.saturating_sub(1))));
        }
        let coords = self
            .complex
            .coords_of(form)
            .ok_or_else(|| Error::Precondition("form does not lie in the complex".into()))?;
        let p = self.groups[k]
            .project(&coords)
            .ok_or_else(|| Error::Precondition("form is not closed".into()))?;
        let primitive = if k == 0 {
            ExteriorForm::zero(self.complex.dim(), 0)
        } else {
            self.complex.to_form(k - 1, &p.primitive)
        };
        Ok((p.class, primitive))
    }

    pub fn class_of(&self, form: &ExteriorForm) -> Result<Vector> {
        Ok(self.decompose(form)?.0)
    }

    /// `[a] . [b]` in coordinates of `H^{k+l}`.
    pub fn cup(&self, k: usize, a: &[Rational], l: usize, b: &[Rational]) -> Vector {
        if k + l > self.complex.dim() {
            return Vec::new();
        }
        let product = self.representative(k, a).wedge(&self.representative(l, b));
        self.class_of(&product).expect("product of cocycles in a sub-DGA is a cocycle of it")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::rational::{int, unit_vec};

    #[test]
    fn heisenberg_differential() {
        let cx = ce_complex(&fixtures::heisenberg()).unwrap();
        assert!(cx.generator_differential(0).is_zero());
        assert!(cx.generator_differential(1).is_zero());
        assert_eq!(cx.generator_differential(2).terms(), vec![(vec![0, 1], int(-1))]);
    }

    #[test]
    fn hyperbolic_elliptic_differentials_by_hand() {
        let g = fixtures::hyperbolic_elliptic(&[int(2)], &[int(3)]);
        let cx = ce_complex(&g).unwrap();
        let n = g.names();
        let shown: Vec<String> = (0..6).map(|i| cx.generator_differential(i).display_with(n)).collect();
        assert_eq!(shown, vec!["0", "-2 tau^x1", "2 tau^y1", "3 tau^w1", "-3 tau^z1", "0"]);
    }

    #[test]
    fn betti_numbers() {
        assert_eq!(CohomologyRing::new(ce_complex(&fixtures::heisenberg()).unwrap()).betti(), vec![1, 2, 2, 1]);
        assert_eq!(CohomologyRing::new(ce_complex(&fixtures::sol()).unwrap()).betti(), vec![1, 1, 1, 1]);
        assert_eq!(CohomologyRing::new(ce_complex(&fixtures::abelian(4)).unwrap()).betti(), vec![1, 4, 6, 4, 1]);
    }

    #[test]
    fn heisenberg_cup_and_primitive() {
        let ring = CohomologyRing::new(ce_complex(&fixtures::heisenberg()).unwrap());
        let e1 = unit_vec(2, 0);
        let e2 = unit_vec(2, 1);
        assert!(ring.cup(1, &e1, 1, &e2).iter().all(Zero::is_zero));
        let e12 = ExteriorForm::monomial(3, &[0, 1]);
        let (class, prim) = ring.decompose(&e12).unwrap();
        assert!(class.iter().all(Zero::is_zero));
        assert_eq!(ring.complex().apply_d(&prim), e12);
        assert_eq!(prim, ExteriorForm::generator(3, 2).neg());
        // unit
        assert_eq!(ring.cup(0, &[int(1)], 1, &e2), e2);
    }

    #[test]
    fn non_closed_form_is_rejected() {
        let ring = CohomologyRing::new(ce_complex(&fixtures::heisenberg()).unwrap());
        assert!(matches!(ring.class_of(&ExteriorForm::generator(3, 2)), Err(Error::Precondition(_))));
    }

    #[test]
    fn subcomplex_requires_d_stability() {
        let cx = ce_complex(&fixtures::heisenberg()).unwrap();
        let mut spaces: Vec<Vec<Vector>> = (0..=3).map(|_| Vec::new()).collect();
        spaces[1] = vec![unit_vec(3, 2)];
        assert!(matches!(cx.subcomplex(spaces), Err(Error::Consistency(_))));
    }
}
