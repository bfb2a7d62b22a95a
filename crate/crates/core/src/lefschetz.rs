//! Symplectic cocycles on cochain models and the hard Lefschetz property.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::cochain::{CochainComplex, CohomologyRing};
use crate::error::{Error, Result};
use crate::forms::ExteriorForm;
use crate::linalg::Mat;
use crate::rational::{int, Vector};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymplecticCheck {
    pub omega: ExteriorForm,
    pub half_dim: usize,
    pub in_model: bool,
    pub closed: bool,
    pub top_power: ExteriorForm,
    pub top_power_nonzero: bool,
}

impl SymplecticCheck {
    pub fn is_symplectic(&self) -> bool {
        self.in_model && self.closed && self.top_power_nonzero
    }
}

pub fn verify_symplectic(model: &CochainComplex, omega: &ExteriorForm) -> Result<SymplecticCheck> {
    let dim = model.dim();
    if dim % 2 == 1 {
        return Err(Error::OddDimension(dim));
    }
    if omega.degree() != 2 || omega.dim() != dim {
        return Err(Error::Precondition("omega must be a 2-form on the model's generators".into()));
    }
    let n = dim / 2;
    let top_power = omega.power(n);
    Ok(SymplecticCheck {
        omega: omega.clone(),
        half_dim: n,
        in_model: model.contains(omega),
        closed: model.apply_d(omega).is_zero(),
        top_power_nonzero: !top_power.is_zero(),
        top_power,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LefschetzDegree {
    pub degree: usize,
    /// Matrix of `[omega^{n-i}] ^` from `H^i` to `H^{2n-i}`.
    pub matrix: Mat,
    pub rank: usize,
    pub iso: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LefschetzReport {
    pub check: SymplecticCheck,
    pub degrees: Vec<LefschetzDegree>,
    pub holds: bool,
}

impl LefschetzReport {
    pub fn failing_degrees(&self) -> Vec<usize> {
        self.degrees.iter().filter(|d| !d.iso).map(|d| d.degree).collect()
    }
}

pub fn hard_lefschetz(ring: &CohomologyRing, omega: &ExteriorForm) -> Result<LefschetzReport> {
    let model = ring.complex();
    let check = verify_symplectic(model, omega)?;
    if !check.is_symplectic() {
        return Err(Error::Precondition("omega is not a symplectic cocycle of the model".into()));
    }
    let n = check.half_dim;
    let mut degrees = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let power = omega.power(n - i);
        let target = 2 * n - i;
        let cols: Vec<Vector> = ring
            .basis_representatives(i)
            .iter()
            .map(|a| ring.class_of(&power.wedge(a)))
            .collect::<Result<_>>()?;
        let rows = ring.group(target).dim();
        let matrix = if cols.is_empty() { Mat::zeros(rows, 0) } else { Mat::from_columns(rows, &cols) };
        let rank = matrix.rank();
        let iso = matrix.is_square() && rank == matrix.rows();
        degrees.push(LefschetzDegree { degree: i, matrix, rank, iso });
    }
    let holds = degrees.iter().all(|d| d.iso);
    Ok(LefschetzReport { check, degrees, holds })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairingMatrix {
    pub degree: usize,
    pub matrix: Mat,
    pub perfect: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PoincareReport {
    pub top_dim: usize,
    pub top_one_dimensional: bool,
    pub pairings: Vec<PairingMatrix>,
}

impl PoincareReport {
    pub fn perfect(&self) -> bool {
        self.top_one_dimensional && self.pairings.iter().all(|p| p.perfect)
    }
}

/// `H^k x H^{top-k} -> H^top`, read off on the first top class.
pub fn poincare_pairing(ring: &CohomologyRing) -> PoincareReport {
    let top = ring.complex().dim();
    let top_dim = ring.group(top).dim();
    let pairings = (0..=top)
        .map(|k| {
            let (p, q) = (ring.group(k).dim(), ring.group(top - k).dim());
            let matrix = Mat::from_fn(p, q, |i, j| {
                let mut a = vec![num_traits::zero(); p];
                a[i] = int(1);
                let mut b = vec![num_traits::zero(); q];
                b[j] = int(1);
                ring.cup(k, &a, top - k, &b).first().cloned().unwrap_or_else(num_traits::zero)
            });
            let perfect = top_dim == 1 && p == q && matrix.rank() == p;
            PairingMatrix { degree: k, matrix, perfect }
        })
        .collect();
    PoincareReport { top_dim, top_one_dimensional: top_dim == 1, pairings }
}

/// On a model with zero differential: `omega^{n-i} ^` injective on `C^i`
/// together with a perfect pairing forces an isomorphism in every degree.
/// `None` when the differential does not vanish.
pub fn lefschetz_by_duality(ring: &CohomologyRing, omega: &ExteriorForm) -> Result<Option<Vec<bool>>> {
    let model = ring.complex();
    if !model.differential_vanishes() {
        return Ok(None);
    }
    let check = verify_symplectic(model, omega)?;
    if !check.is_symplectic() {
        return Err(Error::Precondition("omega is not a symplectic cocycle of the model".into()));
    }
    let n = check.half_dim;
    let pairing = poincare_pairing(ring);
    let mut flags = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let power = omega.power(n - i);
        let images: Vec<Vector> = (0..model.space_dim(i))
            .map(|j| model.coords_of(&power.wedge(&model.basis_form(i, j))).expect("model is wedge-closed"))
            .collect();
        let injective = crate::linalg::rank_of(&images) == images.len();
        let dual = pairing.pairings[i].perfect && pairing.top_one_dimensional;
        flags.push(injective && dual);
    }
    Ok(Some(flags))
}

/// Random closed 2-forms of the model with small integer coefficients,
/// returning the first one whose top power is nonzero. Heuristic: a miss
/// says nothing about existence.
pub fn search_symplectic(model: &CochainComplex, seed: u64, attempts: usize, height: i64) -> Option<ExteriorForm> {
    if model.dim() % 2 == 1 || model.dim() < 2 {
        return None;
    }
    let closed = model.differential(2).kernel_basis();
    if closed.is_empty() {
        return None;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..attempts {
        let mut coords = vec![num_traits::zero(); model.space_dim(2)];
        for z in &closed {
            let c = int(rng.gen_range(-height..=height));
            if !c.is_zero() {
                for (x, y) in coords.iter_mut().zip(z) {
                    *x += &c * y;
                }
            }
        }
        let omega = model.to_form(2, &coords);
        if !omega.power(model.dim() / 2).is_zero() {
            return Some(omega);
        }
    }
    None
}
