//! The invariant model `(Λ u*)^T`: forms killed by every torus derivation
//! and fixed by the finite group.

use num_traits::Zero;

use crate::cochain::{ce_complex, CochainComplex};
use crate::error::{Error, Result};
use crate::forms::{indices, ExteriorForm, GradedBasis};
use crate::hull::HullData;
use crate::linalg::Mat;
use crate::rational::Rational;

/// `D*` on `Λ^1`: `(D* alpha)(x) = -alpha(D x)`, so `D* xi^i = -sum_j D[i][j] xi^j`.
fn dual_derivation_images(d: &Mat) -> Vec<ExteriorForm> {
    let n = d.rows();
    (0..n)
        .map(|i| {
            (0..n).fold(ExteriorForm::zero(n, 1), |acc, j| {
                acc.sub(&ExteriorForm::generator(n, j).scale(&d[(i, j)]))
            })
        })
        .collect()
}

/// `g*` on `Λ^1`: `(g* alpha)(x) = alpha(g x)`, so `g* xi^i = sum_j g[i][j] xi^j`.
fn pullback_images(g: &Mat) -> Vec<ExteriorForm> {
    let n = g.rows();
    (0..n)
        .map(|i| (0..n).fold(ExteriorForm::zero(n, 1), |acc, j| acc.add(&ExteriorForm::generator(n, j).scale(&g[(i, j)]))))
        .collect()
}

/// Extension of a derivation `D` of `u` to forms as a degree-0 derivation.
pub fn apply_derivation(d: &Mat, form: &ExteriorForm) -> ExteriorForm {
    let n = form.dim();
    let images = dual_derivation_images(d);
    let mut out = ExteriorForm::zero(n, form.degree());
    for (m, c) in form.raw_terms() {
        let idx = indices(m);
        for r in 0..idx.len() {
            let term = ExteriorForm::monomial(n, &idx[..r])
                .wedge(&images[idx[r]])
                .wedge(&ExteriorForm::monomial(n, &idx[r + 1..]));
            out = out.add(&term.scale(c));
        }
    }
    out
}

/// Pullback of forms along a linear automorphism of `u`.
pub fn apply_pullback(g: &Mat, form: &ExteriorForm) -> ExteriorForm {
    let n = form.dim();
    let images = pullback_images(g);
    let mut out = ExteriorForm::zero(n, form.degree());
    for (m, c) in form.raw_terms() {
        let term = indices(m).iter().fold(ExteriorForm::one(n), |acc, &i| acc.wedge(&images[i]));
        out = out.add(&term.scale(c));
    }
    out
}

pub fn derivation_matrix(graded: &GradedBasis, d: &Mat, k: usize) -> Mat {
    graded.operator(k, k, |m| apply_derivation(d, &graded.monomial_form(m)))
}

/// `(1/|G|) sum_g g*` on `Λ^k`.
pub fn averaging_projector(graded: &GradedBasis, group: &[Mat], k: usize) -> Mat {
    let size = graded.len(k);
    let mut total = Mat::zeros(size, size);
    for g in group {
        total = &total + &graded.operator(k, k, |m| apply_pullback(g, &graded.monomial_form(m)));
    }
    total.scale(&Rational::new(1.into(), (group.len() as i64).into()))
}

/// The invariant sub-DGA of `Λ u*`.
#[derive(Clone, Debug)]
pub struct InvariantComplex {
    pub hull: HullData,
    pub ambient: CochainComplex,
    pub model: CochainComplex,
    /// Per degree: rows whose joint kernel is the invariant space.
    pub constraints: Vec<Mat>,
    pub projectors: Vec<Mat>,
}

pub fn invariant_subcomplex(h: &HullData) -> Result<InvariantComplex> {
    let ambient = ce_complex(&h.u)?;
    let graded = ambient.graded().clone();
    let n = h.dim();
    let mut constraints = Vec::with_capacity(n + 1);
    let mut projectors = Vec::with_capacity(n + 1);
    let mut spaces = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let size = graded.len(k);
        let p = averaging_projector(&graded, &h.finite_group, k);
        let mut blocks: Vec<Mat> = h.torus_derivations.iter().map(|d| derivation_matrix(&graded, d, k)).collect();
        blocks.push(&p - &Mat::identity(size));
        let c = Mat::vstack(&blocks, size);
        spaces.push(c.kernel_basis());
        constraints.push(c);
        projectors.push(p);
    }
    let model = ambient.subcomplex(spaces)?;
    let ic = InvariantComplex { hull: h.clone(), ambient, model, constraints, projectors };
    ic.check()?;
    Ok(ic)
}

impl InvariantComplex {
    pub fn dim(&self) -> usize {
        self.ambient.dim()
    }

    pub fn is_invariant(&self, form: &ExteriorForm) -> bool {
        let k = form.degree();
        if k > self.dim() {
            return form.is_zero();
        }
        self.constraints[k].mul_vec(&self.ambient.graded().coords(form)).iter().all(Zero::is_zero)
    }

    /// Constants, wedge-closure and idempotent projectors.
    pub fn check(&self) -> Result<()> {
        let fail = |what: String| Err(Error::Consistency(format!("invariant complex: {what}")));
        if self.model.space_dim(0) != 1 {
            return fail("constants are not invariant".into());
        }
        for (k, p) in self.projectors.iter().enumerate() {
            if &(p * p) != p {
                return fail(format!("averaging projector in degree {k} is not idempotent"));
            }
        }
        let n = self.dim();
        for k in 1..=n {
            for l in k..=n - k {
                for i in 0..self.model.space_dim(k) {
                    let a = self.model.basis_form(k, i);
                    for j in 0..self.model.space_dim(l) {
                        if !self.is_invariant(&a.wedge(&self.model.basis_form(l, j))) {
                            return fail(format!("not closed under wedge in degrees {k}, {l}"));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Whether every torus derivation commutes with the averaging projector
    /// on every degree.
    pub fn torus_and_average_commute(&self) -> bool {
        let graded = self.ambient.graded();
        (0..=self.dim()).all(|k| {
            self.hull.torus_derivations.iter().all(|d| {
                let dk = derivation_matrix(graded, d, k);
                (&dk * &self.projectors[k]) == (&self.projectors[k] * &dk)
            })
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::hull::{hull_action_data, DEFAULT_FINITE_BOUND};
    use crate::rational::int;

    fn basis_terms(ic: &InvariantComplex) -> Vec<Vec<Vec<usize>>> {
        (0..=ic.dim())
            .flat_map(|k| (0..ic.model.space_dim(k)).map(move |j| (k, j)))
            .map(|(k, j)| ic.model.basis_form(k, j).terms().into_iter().map(|t| t.0).collect())
            .collect()
    }

    #[test]
    fn heisenberg_with_sign_flip() {
        let ic = invariant_subcomplex(&fixtures::heisenberg_involution()).unwrap();
        assert_eq!(basis_terms(&ic), vec![vec![vec![]], vec![vec![0]], vec![vec![1, 2]], vec![vec![0, 1, 2]]]);
        assert!(ic.model.differential_vanishes());
    }

    #[test]
    fn sol_hull_model() {
        let ic = invariant_subcomplex(&hull_action_data(&fixtures::sol()).unwrap()).unwrap();
        assert_eq!(basis_terms(&ic), vec![vec![vec![]], vec![vec![0]], vec![vec![1, 2]], vec![vec![0, 1, 2]]]);
        assert!(ic.torus_and_average_commute());
    }

    #[test]
    fn no_action_gives_full_complex() {
        let h = HullData::new(fixtures::heisenberg(), vec![], vec![], DEFAULT_FINITE_BOUND).unwrap();
        let ic = invariant_subcomplex(&h).unwrap();
        assert_eq!(ic.model.space_dims(), vec![1, 3, 3, 1]);
    }

    #[test]
    fn derivation_extension_is_leibniz() {
        let d = Mat::from_i64_rows(&[&[0, 0, 0], &[0, 1, 2], &[0, -3, 4]]);
        let a = ExteriorForm::generator(3, 1).add(&ExteriorForm::generator(3, 0).scale(&int(2)));
        let b = ExteriorForm::monomial(3, &[0, 2]);
        let lhs = apply_derivation(&d, &a.wedge(&b));
        let rhs = apply_derivation(&d, &a).wedge(&b).add(&a.wedge(&apply_derivation(&d, &b)));
        assert_eq!(lhs, rhs);
    }
}
