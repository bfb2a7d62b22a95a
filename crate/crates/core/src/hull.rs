//! Jordan-Chevalley decomposition of adjoint operators and the splittable
//! hull `gbar = Im f ⋉ g` of a solvable Lie algebra, with its nilshadow
//! `nbar = {X - f(X)}`.
//!
//! The map `f` sends `X = v + m` (`v` in a complement `V` of the nilradical,
//! `m` in the nilradical) to `sum_a beta_a d_{v_a}`, where `d_v` is the
//! semisimple part of `ad_v`. The complement is first taken along the
//! coordinate directions left free by the nilradical. It is accepted only if
//! the `d_v` pairwise commute, `v -> d_v` is additive on it, and the
//! resulting `nbar` is a nilpotent ideal of `gbar`. Otherwise the complement
//! is taken inside a Cartan subalgebra, where both properties always hold.
//!
//! `X -> d_X` itself is not additive on all of `g`: in `sol`,
//! `d_{t+x} = ad_{t+x}` while `d_t + d_x = ad_t`. The two differ by a
//! nilpotent derivation, which [`additivity_defect`] exposes.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lie::{LieAlgebra, Subspace};
use crate::linalg::{add_vec, coordinates_in, rank_of, sub_vec, Mat};
use crate::poly::{char_poly, Poly};
use crate::rational::{int, unit_vec, zero_vec, Rational, Vector};

/// Default bound on the order of the finite part of a hull.
pub const DEFAULT_FINITE_BOUND: usize = 10_000;

/// `m = semisimple + nilpotent`, both polynomials in `m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JordanPair {
    pub semisimple: Mat,
    pub nilpotent: Mat,
    /// Squarefree polynomial annihilating `semisimple` (the squarefree part
    /// of the characteristic polynomial of the input).
    pub annihilator: Poly,
}

/// Jordan-Chevalley decomposition over the rationals by Newton iteration on
/// the squarefree part `q` of the characteristic polynomial:
/// `s <- s - q(s) u(s)` with `u q' = 1 mod q`.
pub fn jordan_chevalley(m: &Mat) -> Result<JordanPair> {
    if !m.is_square() {
        return Err(Error::DimensionMismatch { expected: m.rows(), found: m.cols() });
    }
    let n = m.rows();
    if n == 0 {
        return Ok(JordanPair { semisimple: m.clone(), nilpotent: m.clone(), annihilator: Poly::one() });
    }
    let q = char_poly(m).squarefree_part()?;
    let (g, u, _) = q.derivative().ext_gcd(&q);
    if g != Poly::one() {
        return Err(Error::Consistency(format!("squarefree part {q} shares a factor with its derivative")));
    }
    let rounds = usize::BITS - (n - 1).leading_zeros() + 1;
    let mut s = m.clone();
    for _ in 0..rounds {
        let qs = q.eval_at_matrix(&s);
        if qs.is_zero() {
            break;
        }
        s = &s - &(&qs * &u.eval_at_matrix(&s));
    }
    let nil = m - &s;
    let pair = JordanPair { semisimple: s, nilpotent: nil, annihilator: q };
    pair.check(m)?;
    Ok(pair)
}

impl JordanPair {
    /// Re-verifies every defining property against `m`.
    pub fn check(&self, m: &Mat) -> Result<()> {
        let fail = |what: &str| Err(Error::Consistency(format!("Jordan-Chevalley: {what}")));
        if &(&self.semisimple + &self.nilpotent) != m {
            return fail("s + n differs from the input");
        }
        if !self.semisimple.commutes_with(&self.nilpotent) {
            return fail("s and n do not commute");
        }
        if !self.nilpotent.is_nilpotent() {
            return fail("n is not nilpotent");
        }
        if !self.annihilator.is_squarefree() || !self.annihilator.eval_at_matrix(&self.semisimple).is_zero() {
            return fail("s has no squarefree annihilating polynomial");
        }
        Ok(())
    }
}

pub fn is_semisimple(m: &Mat) -> Result<bool> {
    Ok(jordan_chevalley(m)?.nilpotent.is_zero())
}

/// `d_x`, the semisimple part of `ad_x`, checked to be a derivation.
pub fn semisimple_derivation(g: &LieAlgebra, x: &[Rational]) -> Result<Mat> {
    let d = jordan_chevalley(&g.ad_matrix(x)?)?.semisimple;
    if !g.is_derivation(&d) {
        return Err(Error::Consistency("semisimple part of ad is not a derivation".into()));
    }
    Ok(d)
}

/// `d_{x+y} - d_x - d_y`. Always nilpotent for solvable `g`; zero whenever
/// `x` and `y` lie in a complement on which `f` is defined.
pub fn additivity_defect(g: &LieAlgebra, x: &[Rational], y: &[Rational]) -> Result<Mat> {
    let sum = semisimple_derivation(g, &add_vec(x, y))?;
    Ok(&(&sum - &semisimple_derivation(g, x)?) - &semisimple_derivation(g, y)?)
}

/// Where the complement of the nilradical used to define `f` came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ComplementSource {
    /// Coordinate directions not used as pivots of the nilradical basis.
    Coordinate,
    /// A complement of `h ∩ n` inside a Cartan subalgebra `h`.
    CartanSubalgebra,
}

/// `gbar = Im f ⋉ nbar` with basis `[D_1..D_r, nbar_1..nbar_n]`, where
/// `nbar_i = e_i - f(e_i)`.
#[derive(Clone, Debug)]
pub struct SplittableHull {
    pub algebra: LieAlgebra,
    pub nilradical: Subspace,
    pub complement: Vec<Vector>,
    pub complement_source: ComplementSource,
    /// `D_a = d_{complement[a]}`; commuting semisimple derivations of `g`.
    pub imf_basis: Vec<Mat>,
    /// Row `i`: coordinates of `f(e_i)` in `imf_basis`.
    pub f_coords: Vec<Vector>,
    pub gbar: LieAlgebra,
    pub nbar: LieAlgebra,
    /// `(r + n) x n` matrix of `X -> f(X) + (X - f(X))` in `gbar` coordinates.
    pub embed: Mat,
    /// Indices of the `nbar` basis inside `gbar`.
    pub nbar_inclusion: Vec<usize>,
}

impl SplittableHull {
    pub fn imf_dim(&self) -> usize {
        self.imf_basis.len()
    }

    /// `f(x)` as a derivation of `g`.
    pub fn f(&self, x: &[Rational]) -> Mat {
        let n = self.algebra.dim();
        let mut out = Mat::zeros(n, n);
        for (xi, coords) in x.iter().zip(&self.f_coords) {
            if xi.is_zero() {
                continue;
            }
            for (c, d) in coords.iter().zip(&self.imf_basis) {
                if !c.is_zero() {
                    out = &out + &d.scale(&(xi * c));
                }
            }
        }
        out
    }

    /// Checks every structural property of the hull exactly.
    pub fn check(&self) -> Result<()> {
        let fail = |what: &str| Err(Error::Consistency(format!("splittable hull: {what}")));
        let g = &self.algebra;
        let n = g.dim();
        let r = self.imf_dim();
        if self.gbar.validate().is_err() {
            return fail("gbar violates the Lie axioms");
        }
        if !self.nbar.is_nilpotent() {
            return fail("nbar is not nilpotent");
        }
        for i in 0..r + n {
            for j in 0..r + n {
                let b = self.gbar.basis_bracket(i, j);
                if b[..r].iter().any(|x| !x.is_zero()) {
                    return fail("[gbar, gbar] has a component along Im f");
                }
                if !self.nilradical.contains(&b[r..]) {
                    return fail("[gbar, gbar] leaves the nilradical");
                }
            }
        }
        if self.embed.rank() != n {
            return fail("embedding is not injective");
        }
        let images = self.embed.columns();
        for i in 0..n {
            for j in i + 1..n {
                let lhs = self.embed.mul_vec(&g.basis_bracket(i, j));
                if lhs != self.gbar.bracket(&images[i], &images[j]) {
                    return fail("embedding does not preserve brackets");
                }
            }
        }
        Ok(())
    }
}

/// Semisimple derivations for a candidate complement, if it passes the
/// commutation and additivity checks.
fn complement_derivations(g: &LieAlgebra, complement: &[Vector]) -> Result<Option<Vec<Mat>>> {
    let ds: Vec<Mat> = complement.iter().map(|v| semisimple_derivation(g, v)).collect::<Result<_>>()?;
    for a in 0..ds.len() {
        for b in a + 1..ds.len() {
            if !ds[a].commutes_with(&ds[b]) {
                return Ok(None);
            }
            let sum = semisimple_derivation(g, &add_vec(&complement[a], &complement[b]))?;
            if sum != &ds[a] + &ds[b] {
                return Ok(None);
            }
        }
    }
    if rank_of(&ds.iter().map(Mat::to_vector).collect::<Vec<_>>()) != ds.len() {
        return Ok(None);
    }
    Ok(Some(ds))
}

fn assemble_hull(
    g: &LieAlgebra,
    nil: &Subspace,
    complement: Vec<Vector>,
    source: ComplementSource,
    ds: Vec<Mat>,
) -> Result<SplittableHull> {
    let n = g.dim();
    let r = ds.len();
    let split_basis: Vec<Vector> = complement.iter().chain(nil.basis()).cloned().collect();
    let f_coords: Vec<Vector> = (0..n)
        .map(|i| {
            coordinates_in(&split_basis, &unit_vec(n, i))
                .map(|c| c[..r].to_vec())
                .ok_or_else(|| Error::Consistency("complement and nilradical do not span g".into()))
        })
        .collect::<Result<_>>()?;
    let f_of = |i: usize| -> Mat {
        let mut out = Mat::zeros(n, n);
        for (c, d) in f_coords[i].iter().zip(&ds) {
            if !c.is_zero() {
                out = &out + &d.scale(c);
            }
        }
        out
    };
    let f_mats: Vec<Mat> = (0..n).map(f_of).collect();

    // [X - fX, Y - fY] = [X, Y] - fX(Y) + fY(X), a vector of the nilradical,
    // whose nbar coordinates equal its g coordinates.
    let mut nbar_c = vec![vec![zero_vec(n); n]; n];
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let v = sub_vec(&add_vec(&g.basis_bracket(i, j), &f_mats[j].column(i)), &f_mats[i].column(j));
            nbar_c[i][j] = v;
        }
    }
    let nbar = LieAlgebra::from_structure_constants(g.names().to_vec(), nbar_c.clone())?;

    let total = r + n;
    let mut gbar_c = vec![vec![zero_vec(total); total]; total];
    for a in 0..r {
        for j in 0..n {
            let image = ds[a].column(j);
            let mut v = zero_vec(total);
            v[r..].clone_from_slice(&image);
            gbar_c[a][r + j] = v.clone();
            gbar_c[r + j][a] = v.iter().map(|x| -x.clone()).collect();
        }
    }
    for i in 0..n {
        for j in 0..n {
            let mut v = zero_vec(total);
            v[r..].clone_from_slice(&nbar_c[i][j]);
            gbar_c[r + i][r + j] = v;
        }
    }
    let derivation_names: Vec<String> = match source {
        ComplementSource::Coordinate => complement
            .iter()
            .map(|v| {
                let k = v.iter().position(|x| !x.is_zero()).unwrap_or(0);
                format!("d_{}", g.names()[k])
            })
            .collect(),
        ComplementSource::CartanSubalgebra => (1..=r).map(|a| format!("d_v{a}")).collect(),
    };
    let gbar_names = derivation_names.into_iter().chain(g.names().iter().cloned()).collect();
    let gbar = LieAlgebra::from_structure_constants(gbar_names, gbar_c)?;
    let embed = Mat::from_fn(total, n, |row, j| {
        if row < r {
            f_coords[j][row].clone()
        } else if row - r == j {
            int(1)
        } else {
            Rational::zero()
        }
    });
    Ok(SplittableHull {
        algebra: g.clone(),
        nilradical: nil.clone(),
        complement,
        complement_source: source,
        imf_basis: ds,
        f_coords,
        gbar,
        nbar,
        embed,
        nbar_inclusion: (r..total).collect(),
    })
}

/// Fitting null component `ker(ad_x^n)` of a regular element `x`, chosen
/// among the basis vectors and a fixed pseudo-random sample.
pub fn cartan_subalgebra(g: &LieAlgebra) -> Subspace {
    let n = g.dim();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut candidates: Vec<Vector> = (0..n).map(|i| unit_vec(n, i)).collect();
    for _ in 0..n + 8 {
        candidates.push((0..n).map(|_| int(rng.gen_range(-50..=50))).collect());
    }
    let mut best: Option<Vec<Vector>> = None;
    for x in candidates {
        let ad = g.ad_matrix(&x).expect("candidate has length n");
        let null = ad.pow(n as u32).kernel_basis();
        if best.as_ref().is_none_or(|b| null.len() < b.len()) {
            best = Some(null);
        }
    }
    Subspace::new(n, best.unwrap_or_default())
}

/// Basis vectors of `h` that extend a basis of `nil` to a basis of `h + nil`.
fn complement_inside(h: &Subspace, nil: &Subspace) -> Vec<Vector> {
    let mut chosen: Vec<Vector> = Vec::new();
    let mut span: Vec<Vector> = nil.basis().to_vec();
    for v in h.basis() {
        let mut trial = span.clone();
        trial.push(v.clone());
        if rank_of(&trial) > rank_of(&span) {
            span = trial;
            chosen.push(v.clone());
        }
    }
    chosen
}

/// Builds and verifies the splittable hull of a solvable algebra.
pub fn build_splittable_hull(g: &LieAlgebra) -> Result<SplittableHull> {
    g.validate().map_err(Error::Invalid)?;
    let nil = g.nilradical()?;
    let n = g.dim();
    let coordinate: Vec<Vector> = nil.complement_directions().into_iter().map(|i| unit_vec(n, i)).collect();
    if let Some(ds) = complement_derivations(g, &coordinate)? {
        let hull = assemble_hull(g, &nil, coordinate, ComplementSource::Coordinate, ds)?;
        if hull.check().is_ok() {
            return Ok(hull);
        }
    }
    let h = cartan_subalgebra(g);
    let complement = complement_inside(&h, &nil);
    if complement.len() + nil.dim() != n {
        return Err(Error::Consistency("Cartan subalgebra and nilradical do not span g".into()));
    }
    let ds = complement_derivations(g, &complement)?
        .ok_or_else(|| Error::Consistency("semisimple parts on a Cartan subalgebra are not linear".into()))?;
    let hull = assemble_hull(g, &nil, complement, ComplementSource::CartanSubalgebra, ds)?;
    hull.check()?;
    Ok(hull)
}

/// A nonzero bracket of `nbar` basis vectors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BracketWitness {
    pub i: usize,
    pub j: usize,
    #[serde(serialize_with = "crate::io::serialize_vector")]
    pub bracket: Vector,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AbelianityVerdict {
    pub abelian: bool,
    pub witness: Option<BracketWitness>,
}

impl AbelianityVerdict {
    pub fn of_hull(hull: &SplittableHull) -> Self {
        match hull.nbar.nonzero_bracket() {
            None => AbelianityVerdict { abelian: true, witness: None },
            Some((i, j)) => AbelianityVerdict {
                abelian: false,
                witness: Some(BracketWitness { i, j, bracket: hull.nbar.basis_bracket(i, j) }),
            },
        }
    }

    /// Re-checks the witness against `nbar` directly.
    pub fn verify(&self, nbar: &LieAlgebra) -> bool {
        match &self.witness {
            None => self.abelian && nbar.is_abelian(),
            Some(w) => {
                !self.abelian && w.bracket.iter().any(|x| !x.is_zero()) && nbar.basis_bracket(w.i, w.j) == w.bracket
            }
        }
    }
}

pub fn unipotent_hull_abelian(g: &LieAlgebra) -> Result<AbelianityVerdict> {
    Ok(AbelianityVerdict::of_hull(&build_splittable_hull(g)?))
}

/// `g = a ⋉ m` with `a` an abelian subalgebra and `m` the (abelian)
/// nilradical on which `a` acts semisimply.
#[derive(Clone, Debug)]
pub struct SplitForm {
    pub complement: Vec<Vector>,
    pub ideal: Subspace,
    /// `ad_{a_k}` restricted to `ideal`, in the echelon basis of `ideal`.
    pub action: Vec<Mat>,
}

impl SplitForm {
    pub fn check(&self, g: &LieAlgebra) -> Result<()> {
        let fail = |what: &str| Err(Error::Consistency(format!("split form: {what}")));
        let a = &self.complement;
        if rank_of(&a.iter().chain(self.ideal.basis()).cloned().collect::<Vec<_>>()) != g.dim()
            || a.len() + self.ideal.dim() != g.dim()
        {
            return fail("complement and ideal do not form a direct sum");
        }
        for i in 0..a.len() {
            for j in i + 1..a.len() {
                if g.bracket(&a[i], &a[j]).iter().any(|x| !x.is_zero()) {
                    return fail("complement is not abelian");
                }
            }
        }
        if !g.is_ideal(&self.ideal) {
            return fail("nilradical is not an ideal");
        }
        let m = self.ideal.basis();
        for i in 0..m.len() {
            for j in i + 1..m.len() {
                if g.bracket(&m[i], &m[j]).iter().any(|x| !x.is_zero()) {
                    return fail("nilradical is not abelian");
                }
            }
        }
        for act in &self.action {
            if !is_semisimple(act)? {
                return fail("action is not semisimple");
            }
        }
        Ok(())
    }
}

fn restricted_action(g: &LieAlgebra, a: &[Rational], ideal: &Subspace) -> Result<Mat> {
    let basis = ideal.basis();
    let cols: Vec<Vector> = basis
        .iter()
        .map(|v| {
            coordinates_in(basis, &g.bracket(a, v)).ok_or_else(|| Error::Consistency("ideal not ad-stable".into()))
        })
        .collect::<Result<_>>()?;
    Ok(Mat::from_columns(basis.len(), &cols))
}

/// Recovers `g = R^k ⋉ R^m` with semisimple action when the nilshadow is
/// abelian; `None` otherwise.
pub fn recognize_split_form(g: &LieAlgebra) -> Result<Option<SplitForm>> {
    let hull = build_splittable_hull(g)?;
    if !hull.nbar.is_abelian() {
        return Ok(None);
    }
    let nil = hull.nilradical.clone();
    let is_abelian_family =
        |vs: &[Vector]| (0..vs.len()).all(|i| (i + 1..vs.len()).all(|j| g.bracket(&vs[i], &vs[j]).iter().all(Zero::is_zero)));
    let complement = if is_abelian_family(&hull.complement) {
        hull.complement.clone()
    } else {
        complement_inside(&cartan_subalgebra(g), &nil)
    };
    let action = complement.iter().map(|a| restricted_action(g, a, &nil)).collect::<Result<_>>()?;
    let form = SplitForm { complement, ideal: nil, action };
    form.check(g)?;
    Ok(Some(form))
}

/// Nilpotent algebra `u` with commuting semisimple derivations (the torus
/// part) and automorphisms generating a finite group.
#[derive(Clone, Debug)]
pub struct HullData {
    pub u: LieAlgebra,
    pub torus_derivations: Vec<Mat>,
    pub finite_generators: Vec<Mat>,
    /// All elements of the finite group, identity first.
    pub finite_group: Vec<Mat>,
}

impl HullData {
    /// Validates the data and enumerates the finite group (at most `bound` elements).
    pub fn new(u: LieAlgebra, torus_derivations: Vec<Mat>, finite_generators: Vec<Mat>, bound: usize) -> Result<Self> {
        u.validate().map_err(Error::Invalid)?;
        if !u.is_nilpotent() {
            return Err(Error::Precondition("hull algebra u must be nilpotent".into()));
        }
        for (k, d) in torus_derivations.iter().enumerate() {
            if !u.is_derivation(d) {
                return Err(Error::Precondition(format!("torus derivation {} is not a derivation of u", k + 1)));
            }
            if !is_semisimple(d)? {
                return Err(Error::Precondition(format!("torus derivation {} is not semisimple", k + 1)));
            }
        }
        for a in 0..torus_derivations.len() {
            for b in a + 1..torus_derivations.len() {
                if !torus_derivations[a].commutes_with(&torus_derivations[b]) {
                    return Err(Error::Precondition(format!("torus derivations {} and {} do not commute", a + 1, b + 1)));
                }
            }
        }
        for (k, m) in finite_generators.iter().enumerate() {
            if !u.is_automorphism(m) {
                return Err(Error::Precondition(format!("finite generator {} is not an automorphism of u", k + 1)));
            }
        }
        let finite_group = enumerate_group(u.dim(), &finite_generators, bound)?;
        Ok(HullData { u, torus_derivations, finite_generators, finite_group })
    }

    pub fn dim(&self) -> usize {
        self.u.dim()
    }
}

/// Breadth-first closure of the generators under multiplication.
pub fn enumerate_group(n: usize, generators: &[Mat], bound: usize) -> Result<Vec<Mat>> {
    let mut elements = vec![Mat::identity(n)];
    let mut seen: std::collections::HashSet<Mat> = elements.iter().cloned().collect();
    let mut next = 0;
    while next < elements.len() {
        let current = elements[next].clone();
        next += 1;
        for gen in generators {
            let p = &current * gen;
            if seen.insert(p.clone()) {
                if elements.len() >= bound {
                    return Err(Error::GroupTooLarge { bound });
                }
                elements.push(p);
            }
        }
    }
    Ok(elements)
}

/// `u = nbar` with the `Im f` basis acting as torus derivations.
pub fn hull_action_data(g: &LieAlgebra) -> Result<HullData> {
    let hull = build_splittable_hull(g)?;
    HullData::from_hull(&hull)
}

impl HullData {
    pub fn from_hull(hull: &SplittableHull) -> Result<Self> {
        // D(nbar_j) = D(e_j) lies in the nilradical, where nbar and g coordinates agree.
        HullData::new(hull.nbar.clone(), hull.imf_basis.clone(), Vec::new(), DEFAULT_FINITE_BOUND)
    }
}
