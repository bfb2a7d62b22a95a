//! Type (I) detection, the Kähler obstruction, and the staged analysis
//! pipeline.

use num_traits::Zero;
use serde::Serialize;

use crate::cochain::CohomologyRing;
use crate::error::{Error, ErrorKind, Result};
use crate::forms::ExteriorForm;
use crate::formality::{formality_verdict, FormalityCertificate, FormalityStatus};
use crate::hull::{build_splittable_hull, ComplementSource, HullData, DEFAULT_FINITE_BOUND};
use crate::invariants::invariant_subcomplex;
use crate::lefschetz::{hard_lefschetz, lefschetz_by_duality, verify_symplectic};
use crate::lie::{format_combination, LieAlgebra, SOFT_DIM_CAP};
use crate::linalg::Mat;
use crate::poly::{char_poly, sturm_real_roots_in, Interval, Poly};
use crate::rational::{format_rational, int};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum TypeOneStatus {
    #[serde(rename = "type_I")]
    TypeI,
    #[serde(rename = "not_type_I")]
    NotTypeI,
    #[serde(rename = "not_certified")]
    NotCertified,
}

/// Imaginary-axis test for one derivation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DerivationSpectrum {
    pub index: usize,
    #[serde(serialize_with = "crate::io::serialize_poly")]
    pub char_poly: Poly,
    /// Power of `t` stripped from the characteristic polynomial.
    pub stripped_power: usize,
    pub odd_coefficients_vanish: bool,
    /// `q(u)` with `p(t) / t^e = q(t^2)`, when the odd part vanishes.
    #[serde(serialize_with = "crate::io::serialize_opt_poly")]
    pub even_part: Option<Poly>,
    #[serde(serialize_with = "crate::io::serialize_opt_poly")]
    pub squarefree: Option<Poly>,
    /// Distinct real roots of the squarefree part in `(-inf, 0]`.
    pub nonpositive_roots: Option<usize>,
    pub compatible: bool,
}

impl DerivationSpectrum {
    pub fn compute(index: usize, d: &Mat) -> Result<Self> {
        let p = char_poly(d);
        let coeffs = p.coeffs();
        let e = coeffs.iter().take_while(|c| c.is_zero()).count();
        let rest = &coeffs[e..];
        let odd_coefficients_vanish = rest.iter().skip(1).step_by(2).all(Zero::is_zero);
        let mut out = DerivationSpectrum {
            index,
            char_poly: p.clone(),
            stripped_power: e,
            odd_coefficients_vanish,
            even_part: None,
            squarefree: None,
            nonpositive_roots: None,
            compatible: false,
        };
        if !odd_coefficients_vanish {
            return Ok(out);
        }
        let q = Poly::new(rest.iter().step_by(2).cloned().collect());
        let sq = q.squarefree_part()?;
        let count = sturm_real_roots_in(&sq, &Interval::up_to(int(0)))?;
        out.compatible = Some(count) == sq.degree();
        out.even_part = Some(q);
        out.squarefree = Some(sq);
        out.nonpositive_roots = Some(count);
        Ok(out)
    }

    /// Recomputes the spectrum of `d` and compares.
    pub fn verify(&self, d: &Mat) -> bool {
        DerivationSpectrum::compute(self.index, d).is_ok_and(|s| &s == self)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TypeOneVerdict {
    pub status: TypeOneStatus,
    pub spectra: Vec<DerivationSpectrum>,
    /// Index of a derivation failing the test.
    pub witness: Option<usize>,
    pub reason: Option<String>,
}

/// All ad-spectra purely imaginary, decided per generating derivation.
pub fn type_one_check(h: &HullData) -> Result<TypeOneVerdict> {
    let ds = &h.torus_derivations;
    for a in 0..ds.len() {
        for b in a + 1..ds.len() {
            if !ds[a].commutes_with(&ds[b]) {
                return Ok(TypeOneVerdict {
                    status: TypeOneStatus::NotCertified,
                    spectra: Vec::new(),
                    witness: None,
                    reason: Some(format!("torus derivations {} and {} do not commute", a + 1, b + 1)),
                });
            }
        }
    }
    if ds.iter().any(|d| !d.is_zero()) && !h.u.is_abelian() {
        return Ok(TypeOneVerdict {
            status: TypeOneStatus::NotCertified,
            spectra: Vec::new(),
            witness: None,
            reason: Some("torus acts on a nonabelian hull".into()),
        });
    }
    let spectra: Vec<DerivationSpectrum> =
        ds.iter().enumerate().map(|(i, d)| DerivationSpectrum::compute(i, d)).collect::<Result<_>>()?;
    let witness = spectra.iter().position(|s| !s.compatible);
    Ok(TypeOneVerdict {
        status: if witness.is_some() { TypeOneStatus::NotTypeI } else { TypeOneStatus::TypeI },
        spectra,
        witness,
        reason: None,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum KahlerKind {
    NotKahler,
    NoObstruction,
    Inapplicable,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KahlerConclusion {
    pub kind: KahlerKind,
    pub statement: String,
    pub assumptions: Vec<String>,
}

pub const LATTICE_ASSUMPTION: &str = "a lattice exists";

pub fn kahler_obstruction(hull_abelian: bool, type_one: TypeOneStatus) -> KahlerConclusion {
    match (hull_abelian, type_one) {
        (true, TypeOneStatus::NotTypeI) => KahlerConclusion {
            kind: KahlerKind::NotKahler,
            statement: "not Kähler (assuming a lattice exists)".into(),
            assumptions: vec![LATTICE_ASSUMPTION.into()],
        },
        (true, TypeOneStatus::TypeI) => KahlerConclusion {
            kind: KahlerKind::NoObstruction,
            statement: "no obstruction from this criterion".into(),
            assumptions: Vec::new(),
        },
        _ => KahlerConclusion {
            kind: KahlerKind::Inapplicable,
            statement: "criterion inapplicable".into(),
            assumptions: Vec::new(),
        },
    }
}

/// Explicit hull data replacing the computed one.
#[derive(Clone, Debug)]
pub struct HullOverride {
    /// Defaults to the input algebra.
    pub u: Option<LieAlgebra>,
    pub torus_derivations: Vec<Mat>,
    pub finite_generators: Vec<Mat>,
}

#[derive(Clone, Debug)]
pub struct AnalysisInput {
    pub algebra: LieAlgebra,
    pub hull_override: Option<HullOverride>,
    /// Expressed in the basis of the hull algebra.
    pub omega: Option<ExteriorForm>,
    pub massey_depth: Option<usize>,
    pub finite_bound: usize,
}

impl AnalysisInput {
    pub fn new(algebra: LieAlgebra) -> Self {
        AnalysisInput { algebra, hull_override: None, omega: None, massey_depth: None, finite_bound: DEFAULT_FINITE_BOUND }
    }

    /// The hull data this input describes.
    pub fn hull_data(&self) -> Result<(HullData, HullSummary)> {
        match &self.hull_override {
            Some(o) => {
                let u = o.u.clone().unwrap_or_else(|| self.algebra.clone());
                let h = HullData::new(u, o.torus_derivations.clone(), o.finite_generators.clone(), self.finite_bound)?;
                let summary = HullSummary {
                    source: "override".into(),
                    imf_dim: h.torus_derivations.len(),
                    complement_source: None,
                    nbar_dim: h.dim(),
                    nbar_abelian: h.u.is_abelian(),
                    witness: h.u.nonzero_bracket().map(|(i, j)| bracket_text(&h.u, i, j)),
                };
                Ok((h, summary))
            }
            None => {
                let hull = build_splittable_hull(&self.algebra)?;
                let h = HullData::from_hull(&hull)?;
                let summary = HullSummary {
                    source: "computed".into(),
                    imf_dim: hull.imf_dim(),
                    complement_source: Some(hull.complement_source),
                    nbar_dim: hull.nbar.dim(),
                    nbar_abelian: hull.nbar.is_abelian(),
                    witness: hull.nbar.nonzero_bracket().map(|(i, j)| bracket_text(&hull.nbar, i, j)),
                };
                Ok((h, summary))
            }
        }
    }
}

fn bracket_text(g: &LieAlgebra, i: usize, j: usize) -> String {
    format!("[{}, {}] = {}", g.names()[i], g.names()[j], format_combination(g.names(), &g.basis_bracket(i, j)))
}

/// Outcome of one pipeline stage.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Stage<T> {
    Done { result: T },
    Failed { kind: ErrorKind, error: String },
    Skipped { reason: String },
}

impl<T> Stage<T> {
    pub fn done(&self) -> Option<&T> {
        match self {
            Stage::Done { result } => Some(result),
            _ => None,
        }
    }

    fn from_result(r: Result<T>) -> Self {
        match r {
            Ok(result) => Stage::Done { result },
            Err(e) => Stage::failed(&e),
        }
    }

    fn failed(e: &Error) -> Self {
        Stage::Failed { kind: e.kind(), error: e.to_string() }
    }

    fn skipped(reason: &str) -> Self {
        Stage::Skipped { reason: reason.into() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InputEcho {
    pub dim: usize,
    pub basis: Vec<String>,
    pub hull_override: bool,
    pub omega: Option<String>,
    pub warnings: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructureSummary {
    pub solvable: bool,
    pub nilpotent: bool,
    pub derived_series_dims: Vec<usize>,
    pub nilradical_dim: Option<usize>,
    pub nilradical_basis: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HullSummary {
    pub source: String,
    pub imf_dim: usize,
    pub complement_source: Option<ComplementSource>,
    pub nbar_dim: usize,
    pub nbar_abelian: bool,
    pub witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ModelSummary {
    pub u_dim: usize,
    pub torus_derivations: usize,
    pub finite_group_order: usize,
    pub space_dims: Vec<usize>,
    pub differential_vanishes: bool,
    pub betti: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MasseySummary {
    pub classes: Vec<String>,
    pub x: String,
    pub y: String,
    pub representative: String,
    pub indeterminacy_rank: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FormalitySummary {
    pub status: FormalityStatus,
    pub certificate: String,
    pub massey: Option<MasseySummary>,
    pub triples_examined: usize,
    pub depth: usize,
    pub verified: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SymplecticSummary {
    pub omega: String,
    pub in_model: bool,
    pub closed: bool,
    pub top_power: String,
    pub symplectic: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LefschetzSummary {
    pub holds: bool,
    pub degrees: Vec<crate::lefschetz::LefschetzDegree>,
    pub failing_degrees: Vec<usize>,
    /// Injectivity plus duality route; present when the model has zero differential.
    pub duality_route: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub input: InputEcho,
    pub validation: Stage<String>,
    pub structure: Stage<StructureSummary>,
    pub hull: Stage<HullSummary>,
    pub model: Stage<ModelSummary>,
    pub formality: Stage<FormalitySummary>,
    pub symplectic: Stage<SymplecticSummary>,
    pub lefschetz: Stage<LefschetzSummary>,
    pub type_one: Stage<TypeOneVerdict>,
    pub kahler: Stage<KahlerConclusion>,
}

pub fn analyze(input: &AnalysisInput) -> AnalysisReport {
    let g = &input.algebra;
    let mut warnings = Vec::new();
    if g.dim() > SOFT_DIM_CAP {
        warnings.push(format!("dimension {} exceeds the soft cap {SOFT_DIM_CAP}", g.dim()));
    }
    let hull_names = input.hull_override.as_ref().and_then(|o| o.u.as_ref()).unwrap_or(g).names().to_vec();
    let input_echo = InputEcho {
        dim: g.dim(),
        basis: g.names().to_vec(),
        hull_override: input.hull_override.is_some(),
        omega: input.omega.as_ref().map(|w| w.display_with(&hull_names)),
        warnings,
    };
    let mut report = AnalysisReport {
        input: input_echo,
        validation: Stage::skipped("not run"),
        structure: Stage::skipped("validation failed"),
        hull: Stage::skipped("validation failed"),
        model: Stage::skipped("hull unavailable"),
        formality: Stage::skipped("model unavailable"),
        symplectic: Stage::skipped("no omega supplied"),
        lefschetz: Stage::skipped("no omega supplied"),
        type_one: Stage::skipped("hull unavailable"),
        kahler: Stage::skipped("hull or type (I) verdict unavailable"),
    };
    if let Err(v) = g.validate() {
        report.validation = Stage::failed(&Error::Invalid(v));
        return report;
    }
    report.validation = Stage::Done { result: "ok".into() };

    let solvable = g.is_solvable();
    let nil = if solvable { g.nilradical().ok() } else { None };
    report.structure = Stage::Done {
        result: StructureSummary {
            solvable,
            nilpotent: g.is_nilpotent(),
            derived_series_dims: g.derived_series().iter().map(|s| s.dim()).collect(),
            nilradical_dim: nil.as_ref().map(|n| n.dim()),
            nilradical_basis: nil.iter().flat_map(|n| n.basis()).map(|v| format_combination(g.names(), v)).collect(),
        },
    };
    if !solvable && input.hull_override.is_none() {
        report.hull = Stage::failed(&Error::NotSolvable);
        return report;
    }

    let (hd, hull_summary) = match input.hull_data() {
        Ok(x) => x,
        Err(e) => {
            report.hull = Stage::failed(&e);
            return report;
        }
    };
    let hull_abelian = hull_summary.nbar_abelian;
    report.hull = Stage::Done { result: hull_summary };

    report.type_one = Stage::from_result(type_one_check(&hd));
    report.kahler = match report.type_one.done() {
        Some(t) => Stage::Done { result: kahler_obstruction(hull_abelian, t.status) },
        None => Stage::skipped("type (I) verdict unavailable"),
    };

    let ic = match invariant_subcomplex(&hd) {
        Ok(ic) => ic,
        Err(e) => {
            report.model = Stage::failed(&e);
            return report;
        }
    };
    let ring = CohomologyRing::new(ic.model.clone());
    report.model = Stage::Done {
        result: ModelSummary {
            u_dim: hd.dim(),
            torus_derivations: hd.torus_derivations.len(),
            finite_group_order: hd.finite_group.len(),
            space_dims: ic.model.space_dims(),
            differential_vanishes: ic.model.differential_vanishes(),
            betti: ring.betti(),
        },
    };
    let names = hd.u.names().to_vec();
    report.formality = Stage::from_result(formality_verdict(&ic.model, input.massey_depth).map(|v| {
        let verified = v.verify(&ic.model);
        let (certificate, massey) = match &v.certificate {
            FormalityCertificate::ZeroDifferential(_) => ("differential vanishes on the invariant model".to_string(), None),
            FormalityCertificate::Massey(w) => (
                "nonvanishing triple Massey product".to_string(),
                Some(MasseySummary {
                    classes: w.representatives.iter().map(|f| f.display_with(&names)).collect(),
                    x: w.x.display_with(&names),
                    y: w.y.display_with(&names),
                    representative: w.representative.display_with(&names),
                    indeterminacy_rank: crate::linalg::rank_of(&w.indeterminacy),
                }),
            ),
            FormalityCertificate::None => ("no obstruction found up to the scan depth".to_string(), None),
        };
        FormalitySummary { status: v.status, certificate, massey, triples_examined: v.triples_examined, depth: v.depth, verified }
    }));

    if let Some(omega) = &input.omega {
        if omega.dim() != hd.dim() {
            report.symplectic = Stage::failed(&Error::DimensionMismatch { expected: hd.dim(), found: omega.dim() });
            report.lefschetz = Stage::skipped("symplectic check failed");
            return report;
        }
        let check = verify_symplectic(&ic.model, omega);
        report.symplectic = Stage::from_result(check.as_ref().map_err(clone_err).map(|c| SymplecticSummary {
            omega: c.omega.display_with(&names),
            in_model: c.in_model,
            closed: c.closed,
            top_power: c.top_power.display_with(&names),
            symplectic: c.is_symplectic(),
        }));
        report.lefschetz = match check {
            Ok(c) if c.is_symplectic() => Stage::from_result(hard_lefschetz(&ring, omega).and_then(|r| {
                Ok(LefschetzSummary {
                    holds: r.holds,
                    failing_degrees: r.failing_degrees(),
                    degrees: r.degrees,
                    duality_route: lefschetz_by_duality(&ring, omega)?.map(|f| f.iter().all(|&b| b)),
                })
            })),
            Ok(_) => Stage::skipped("omega is not symplectic on the model"),
            Err(_) => Stage::skipped("symplectic check failed"),
        };
    }
    report
}

fn clone_err(e: &Error) -> Error {
    match e {
        Error::OddDimension(n) => Error::OddDimension(*n),
        other => Error::Precondition(other.to_string()),
    }
}

/// Formats a rational list like `[1, -1/2]`.
pub fn format_vector(v: &[crate::rational::Rational]) -> String {
    format!("[{}]", v.iter().map(format_rational).collect::<Vec<_>>().join(", "))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::hull::hull_action_data;

    #[test]
    fn sol_is_not_type_one() {
        let v = type_one_check(&hull_action_data(&fixtures::sol()).unwrap()).unwrap();
        assert_eq!(v.status, TypeOneStatus::NotTypeI);
        let s = &v.spectra[0];
        assert_eq!(s.stripped_power, 1);
        assert_eq!(s.squarefree, Some(Poly::from_i64(&[-1, 1])));
        assert_eq!(s.nonpositive_roots, Some(0));
        assert_eq!(v.witness, Some(0));
        assert!(s.verify(&hull_action_data(&fixtures::sol()).unwrap().torus_derivations[0]));
    }

    #[test]
    fn rotation_is_type_one() {
        let v = type_one_check(&fixtures::rotation_hull()).unwrap();
        assert_eq!(v.status, TypeOneStatus::TypeI);
        assert_eq!(v.spectra[0].squarefree, Some(Poly::from_i64(&[1, 1])));
        assert_eq!(v.spectra[0].nonpositive_roots, Some(1));
    }

    #[test]
    fn no_derivations_is_type_one() {
        let h = HullData::new(fixtures::heisenberg(), vec![], vec![], 10).unwrap();
        assert_eq!(type_one_check(&h).unwrap().status, TypeOneStatus::TypeI);
    }

    #[test]
    fn odd_spectrum_fails_even_test() {
        let d = Mat::diagonal(&[int(1), int(2)]);
        let s = DerivationSpectrum::compute(0, &d).unwrap();
        assert!(!s.odd_coefficients_vanish && !s.compatible);
    }

    #[test]
    fn kahler_conclusions() {
        assert_eq!(kahler_obstruction(true, TypeOneStatus::NotTypeI).statement, "not Kähler (assuming a lattice exists)");
        assert_eq!(kahler_obstruction(true, TypeOneStatus::NotTypeI).assumptions, vec![LATTICE_ASSUMPTION.to_string()]);
        assert_eq!(kahler_obstruction(true, TypeOneStatus::TypeI).kind, KahlerKind::NoObstruction);
        assert_eq!(kahler_obstruction(false, TypeOneStatus::TypeI).kind, KahlerKind::Inapplicable);
    }

    #[test]
    fn analyze_sol() {
        let r = analyze(&AnalysisInput::new(fixtures::sol()));
        let s = r.structure.done().unwrap();
        assert!(s.solvable && !s.nilpotent);
        assert_eq!(s.nilradical_dim, Some(2));
        assert!(r.hull.done().unwrap().nbar_abelian);
        assert_eq!(r.formality.done().unwrap().status, FormalityStatus::CertifiedFormal);
        assert_eq!(r.type_one.done().unwrap().status, TypeOneStatus::NotTypeI);
        assert_eq!(r.kahler.done().unwrap().kind, KahlerKind::NotKahler);
        assert_eq!(analyze(&AnalysisInput::new(fixtures::sol())), r);
    }

    #[test]
    fn analyze_heisenberg() {
        let r = analyze(&AnalysisInput::new(fixtures::heisenberg()));
        assert!(!r.hull.done().unwrap().nbar_abelian);
        let f = r.formality.done().unwrap();
        assert_eq!(f.status, FormalityStatus::ObstructedNonformal);
        assert!(f.verified);
        assert_eq!(r.kahler.done().unwrap().kind, KahlerKind::Inapplicable);
    }

    #[test]
    fn analyze_rejects_non_solvable() {
        let r = analyze(&AnalysisInput::new(fixtures::sl2()));
        assert!(matches!(r.hull, Stage::Failed { .. }));
        assert!(matches!(r.formality, Stage::Skipped { .. }));
    }
}
