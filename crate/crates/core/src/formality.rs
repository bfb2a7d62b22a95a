//! Formality verdicts for cochain models: the zero-differential certificate
//! and triple Massey products as obstructions.

use num_traits::Zero;
use serde::Serialize;

use crate::cochain::{CochainComplex, CohomologyRing};
use crate::error::{Error, Result};
use crate::forms::ExteriorForm;
use crate::linalg::rank_of;
use crate::rational::{Rational, Vector};

/// Certificate that a model has zero differential, hence is its own
/// cohomology.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ZeroDifferentialCertificate {
    pub space_dims: Vec<usize>,
}

impl ZeroDifferentialCertificate {
    pub fn verify(&self, model: &CochainComplex) -> bool {
        model.differential_vanishes() && model.space_dims() == self.space_dims
    }
}

pub fn certify_formal_if_zero_differential(model: &CochainComplex) -> Option<ZeroDifferentialCertificate> {
    model.differential_vanishes().then(|| ZeroDifferentialCertificate { space_dims: model.space_dims() })
}

/// A cohomology class by degree and coordinates in the chosen basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassRef {
    pub degree: usize,
    #[serde(serialize_with = "crate::io::serialize_vector")]
    pub coords: Vector,
}

impl ClassRef {
    pub fn basis(ring: &CohomologyRing, degree: usize, j: usize) -> Self {
        let mut coords = vec![Rational::zero(); ring.group(degree).dim()];
        coords[j] = Rational::from_integer(1.into());
        ClassRef { degree, coords }
    }
}

/// Everything needed to recheck a triple Massey product.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MasseyWitness {
    pub classes: [ClassRef; 3],
    /// Representatives `A`, `B`, `C`.
    pub representatives: [ExteriorForm; 3],
    /// `d x = A ^ B`.
    pub x: ExteriorForm,
    /// `d y = B ^ C`.
    pub y: ExteriorForm,
    /// `A ^ y + (-1)^{|a|+1} x ^ C`.
    pub representative: ExteriorForm,
    pub representative_class: Vector,
    /// Spanning set of `[a] H + H [c]` in the target degree.
    pub indeterminacy: Vec<Vector>,
    pub vanishes: bool,
}

/// `<a, b, c>`; fails with a precondition error unless `ab = bc = 0`.
pub fn massey_triple(ring: &CohomologyRing, a: &ClassRef, b: &ClassRef, c: &ClassRef) -> Result<MasseyWitness> {
    let ra = ring.representative(a.degree, &a.coords);
    let rb = ring.representative(b.degree, &b.coords);
    let rc = ring.representative(c.degree, &c.coords);
    massey_with_representatives(ring, [a, b, c], [ra, rb, rc])
}

/// As [`massey_triple`] with caller-chosen cocycles representing the classes.
pub fn massey_with_representatives(
    ring: &CohomologyRing,
    [a, b, c]: [&ClassRef; 3],
    [ra, rb, rc]: [ExteriorForm; 3],
) -> Result<MasseyWitness> {
    let cx = ring.complex();
    for (class, rep) in [(a, &ra), (b, &rb), (c, &rc)] {
        if ring.class_of(rep)? != class.coords {
            return Err(Error::Precondition("representative does not represent the given class".into()));
        }
    }
    let ab = ra.wedge(&rb);
    let bc = rb.wedge(&rc);
    let (ab_class, x) = ring.decompose(&ab)?;
    let (bc_class, y) = ring.decompose(&bc)?;
    if ab_class.iter().any(|v| !v.is_zero()) {
        return Err(Error::Precondition("Massey product undefined: [a][b] is nonzero".into()));
    }
    if bc_class.iter().any(|v| !v.is_zero()) {
        return Err(Error::Precondition("Massey product undefined: [b][c] is nonzero".into()));
    }
    let sign_term = x.wedge(&rc);
    let r = if a.degree % 2 == 1 { ra.wedge(&y).add(&sign_term) } else { ra.wedge(&y).sub(&sign_term) };
    let target = r.degree();
    let representative_class = ring.class_of(&r)?;
    let mut indeterminacy = Vec::new();
    let left = b.degree + c.degree - 1;
    let right = a.degree + b.degree - 1;
    if target <= cx.dim() {
        for j in 0..ring.group(left).dim() {
            let h = ClassRef::basis(ring, left, j);
            indeterminacy.push(ring.cup(a.degree, &a.coords, left, &h.coords));
        }
        for j in 0..ring.group(right).dim() {
            let h = ClassRef::basis(ring, right, j);
            indeterminacy.push(ring.cup(right, &h.coords, c.degree, &c.coords));
        }
    }
    let base = rank_of(&indeterminacy);
    let mut with_r = indeterminacy.clone();
    with_r.push(representative_class.clone());
    let vanishes = rank_of(&with_r) == base;
    Ok(MasseyWitness {
        classes: [a.clone(), b.clone(), c.clone()],
        representatives: [ra, rb, rc],
        x,
        y,
        representative: r,
        representative_class,
        indeterminacy,
        vanishes,
    })
}

/// Rechecks a nonvanishing witness without the projection data: the
/// primitives are tested with the ambient differential, and `r` is tested
/// against the span of coboundaries and indeterminacy forms directly.
pub fn verify_massey_witness(model: &CochainComplex, w: &MasseyWitness) -> bool {
    let [ra, rb, rc] = &w.representatives;
    let a_deg = ra.degree();
    if !(model.apply_d(ra).is_zero() && model.apply_d(rb).is_zero() && model.apply_d(rc).is_zero()) {
        return false;
    }
    if model.apply_d(&w.x) != ra.wedge(rb) || model.apply_d(&w.y) != rb.wedge(rc) {
        return false;
    }
    if ![ra, rb, rc, &w.x, &w.y].iter().all(|f| model.contains(f)) {
        return false;
    }
    let sign_term = w.x.wedge(rc);
    let r = if a_deg % 2 == 1 { ra.wedge(&w.y).add(&sign_term) } else { ra.wedge(&w.y).sub(&sign_term) };
    if r != w.representative || !model.apply_d(&r).is_zero() {
        return false;
    }
    let target = r.degree();
    if target > model.dim() {
        return w.vanishes && r.is_zero();
    }
    let graded = model.graded();
    // Span of exact forms plus every product A ^ z and z ^ C with z closed.
    let mut span: Vec<Vector> = Vec::new();
    for j in 0..model.space_dim(target - 1) {
        span.push(graded.coords(&model.apply_d(&model.basis_form(target - 1, j))));
    }
    let closed_in = |k: usize| -> Vec<ExteriorForm> {
        if model.space_dim(k) == 0 {
            return Vec::new();
        }
        model.differential(k).kernel_basis().iter().map(|z| model.to_form(k, z)).collect()
    };
    let left = rb.degree() + rc.degree() - 1;
    let right = a_deg + rb.degree() - 1;
    for z in closed_in(left) {
        span.push(graded.coords(&ra.wedge(&z)));
    }
    for z in closed_in(right) {
        span.push(graded.coords(&z.wedge(rc)));
    }
    let base = rank_of(&span);
    span.push(graded.coords(&r));
    let outside = rank_of(&span) > base;
    outside == !w.vanishes
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FormalityStatus {
    CertifiedFormal,
    ObstructedNonformal,
    Undecided,
}

#[derive(Clone, Debug)]
pub enum FormalityCertificate {
    ZeroDifferential(ZeroDifferentialCertificate),
    Massey(Box<MasseyWitness>),
    None,
}

#[derive(Clone, Debug)]
pub struct FormalityVerdict {
    pub status: FormalityStatus,
    pub certificate: FormalityCertificate,
    /// Number of defined triple products examined.
    pub triples_examined: usize,
    pub depth: usize,
}

impl FormalityVerdict {
    pub fn verify(&self, model: &CochainComplex) -> bool {
        match (&self.status, &self.certificate) {
            (FormalityStatus::CertifiedFormal, FormalityCertificate::ZeroDifferential(c)) => c.verify(model),
            (FormalityStatus::ObstructedNonformal, FormalityCertificate::Massey(w)) => {
                !w.vanishes && verify_massey_witness(model, w)
            }
            (FormalityStatus::Undecided, FormalityCertificate::None) => !model.differential_vanishes(),
            _ => false,
        }
    }
}

/// Degree triples `(p, q, r)` with `p + q + r - 1 <= depth`, by product
/// degree and then lexicographically.
pub fn massey_degree_triples(depth: usize, top: usize) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for total in 2..=depth.min(top) {
        for p in 1..=top {
            for q in 1..=top {
                for r in 1..=top {
                    if p + q + r - 1 == total {
                        out.push((p, q, r));
                    }
                }
            }
        }
    }
    out
}

pub fn formality_verdict(model: &CochainComplex, depth: Option<usize>) -> Result<FormalityVerdict> {
    let depth = depth.unwrap_or(model.dim());
    if let Some(c) = certify_formal_if_zero_differential(model) {
        return Ok(FormalityVerdict {
            status: FormalityStatus::CertifiedFormal,
            certificate: FormalityCertificate::ZeroDifferential(c),
            triples_examined: 0,
            depth,
        });
    }
    let ring = CohomologyRing::new(model.clone());
    let mut examined = 0;
    for (p, q, r) in massey_degree_triples(depth, model.dim()) {
        let (hp, hq, hr) = (ring.group(p).dim(), ring.group(q).dim(), ring.group(r).dim());
        for i in 0..hp {
            for j in 0..hq {
                for k in 0..hr {
                    let a = ClassRef::basis(&ring, p, i);
                    let b = ClassRef::basis(&ring, q, j);
                    let c = ClassRef::basis(&ring, r, k);
                    let w = match massey_triple(&ring, &a, &b, &c) {
                        Ok(w) => w,
                        Err(Error::Precondition(_)) => continue,
                        Err(e) => return Err(e),
                    };
                    examined += 1;
                    if !w.vanishes {
                        return Ok(FormalityVerdict {
                            status: FormalityStatus::ObstructedNonformal,
                            certificate: FormalityCertificate::Massey(Box::new(w)),
                            triples_examined: examined,
                            depth,
                        });
                    }
                }
            }
        }
    }
    Ok(FormalityVerdict {
        status: FormalityStatus::Undecided,
        certificate: FormalityCertificate::None,
        triples_examined: examined,
        depth,
    })
}
