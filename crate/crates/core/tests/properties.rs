use num_traits::{One, Zero};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use solvhull::classify::{analyze, type_one_check, AnalysisInput, TypeOneStatus};
use solvhull::cochain::{ce_complex, CochainComplex, CohomologyRing};
use solvhull::fixtures;
use solvhull::formality::{formality_verdict, massey_triple, verify_massey_witness, massey_with_representatives, ClassRef, FormalityStatus};
use solvhull::forms::{ExteriorForm, GradedBasis};
use solvhull::hull::{additivity_defect, build_splittable_hull, hull_action_data, recognize_split_form, unipotent_hull_abelian};
use solvhull::invariants::{apply_derivation, apply_pullback, invariant_subcomplex};
use solvhull::io::{parse_document, render_document, AlgebraSpec, Bracket, BracketTable, DocOptions, InputDocument, OmegaTerm};
use solvhull::lefschetz::{hard_lefschetz, verify_symplectic};
use solvhull::lie::LieAlgebra;
use solvhull::linalg::{in_span, rank_of, Mat};
use solvhull::poly::{char_poly, sturm_real_roots_in, Interval, Poly};
use solvhull::rational::{int, rat, unit_vec, zero_vec, Rational, Vector};

fn small(rng: &mut ChaCha8Rng, h: i64) -> Rational {
    rat(rng.gen_range(-h..=h), rng.gen_range(1..=3))
}

fn random_mat(rng: &mut ChaCha8Rng, rows: usize, cols: usize, h: i64) -> Mat {
    Mat::from_fn(rows, cols, |_, _| if rng.gen_bool(0.3) { int(0) } else { small(rng, h) })
}

fn random_form(rng: &mut ChaCha8Rng, g: &GradedBasis, k: usize) -> ExteriorForm {
    let coords: Vector = (0..g.len(k)).map(|_| if rng.gen_bool(0.4) { int(0) } else { small(rng, 3) }).collect();
    g.form(k, &coords)
}

fn names(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}

/// `R^r` acting on `R^m` by commuting matrices (polynomials in one
/// random matrix).
fn split_algebra(rng: &mut ChaCha8Rng) -> LieAlgebra {
    let r = rng.gen_range(1..=2);
    let m = rng.gen_range(1..=4);
    let a = random_mat(rng, m, m, 2);
    let second = &Mat::identity(m).scale(&small(rng, 2)) + &a.scale(&small(rng, 2));
    let ds = [a, second];
    let n = r + m;
    let mut brackets = Vec::new();
    for (t, d) in ds.iter().take(r).enumerate() {
        for i in 0..m {
            let mut v = zero_vec(n);
            for k in 0..m {
                v[r + k] = d[(k, i)].clone();
            }
            brackets.push((t, r + i, v));
        }
    }
    let mut nm = names("t", r);
    nm.extend(names("v", m));
    LieAlgebra::from_brackets(nm, &brackets).expect("within caps")
}

/// A line acting on the Heisenberg algebra `[e1, e2] = e3` by a general
/// derivation `[[A, 0], [u, tr A]]`.
fn heisenberg_extension(rng: &mut ChaCha8Rng) -> LieAlgebra {
    let a = random_mat(rng, 2, 2, 2);
    let u = [small(rng, 2), small(rng, 2)];
    let tr = a.trace();
    // basis t, e1, e2, e3
    let col = |i: usize| -> Vector {
        let mut v = zero_vec(4);
        if i < 2 {
            v[1] = a[(0, i)].clone();
            v[2] = a[(1, i)].clone();
            v[3] = u[i].clone();
        } else {
            v[3] = tr.clone();
        }
        v
    };
    let mut e3 = zero_vec(4);
    e3[3] = int(1);
    let brackets = vec![(0, 1, col(0)), (0, 2, col(1)), (0, 3, col(2)), (1, 2, e3)];
    LieAlgebra::from_brackets(vec!["t".into(), "e1".into(), "e2".into(), "e3".into()], &brackets).expect("valid")
}

fn random_solvable(seed: u64) -> LieAlgebra {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    if rng.gen_bool(0.5) {
        split_algebra(&mut rng)
    } else {
        heisenberg_extension(&mut rng)
    }
}

fn fixture_complexes() -> Vec<CochainComplex> {
    [
        fixtures::heisenberg(),
        fixtures::sol(),
        fixtures::filiform4(),
        fixtures::kodaira_thurston(),
        fixtures::complex_sol(),
        fixtures::hyperbolic_elliptic(&[int(1)], &[int(2)]),
        fixtures::sl2(),
    ]
    .iter()
    .map(|g| ce_complex(g).expect("complex"))
    .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_plus_nullity(seed: u64, rows in 1usize..7, cols in 1usize..7) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = random_mat(&mut rng, rows, cols, 4);
        let kernel = m.kernel_basis();
        prop_assert_eq!(m.rank() + kernel.len(), cols);
        for v in &kernel {
            prop_assert!(m.mul_vec(v).iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn solve_round_trip(seed: u64, rows in 1usize..7, cols in 1usize..7) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = random_mat(&mut rng, rows, cols, 4);
        let x0: Vector = (0..cols).map(|_| small(&mut rng, 5)).collect();
        let b = m.mul_vec(&x0);
        let x = m.solve(&b);
        prop_assert!(x.is_some());
        prop_assert_eq!(m.mul_vec(&x.unwrap()), b);
        let other: Vector = (0..rows).map(|_| small(&mut rng, 5)).collect();
        if let Some(y) = m.solve(&other) {
            prop_assert_eq!(m.mul_vec(&y), other);
        }
    }

    #[test]
    fn squarefree_part_divides_and_is_squarefree(roots in prop::collection::vec((-4i64..5, 1usize..4), 1..5), quad in 0usize..3) {
        let mut p = Poly::one();
        for (r, mult) in &roots {
            for _ in 0..*mult {
                p = p.mul(&Poly::from_i64(&[-r, 1]));
            }
        }
        for _ in 0..quad {
            p = p.mul(&Poly::from_i64(&[1, 0, 1]));
        }
        let q = p.squarefree_part().unwrap();
        prop_assert!(p.rem(&q).is_zero());
        prop_assert_eq!(q.gcd(&q.derivative()).degree(), Some(0));
        let distinct: std::collections::BTreeSet<i64> = roots.iter().map(|r| r.0).collect();
        let expected = distinct.len() + if quad > 0 { 2 } else { 0 };
        prop_assert_eq!(q.degree(), Some(expected));
        let nonpositive = distinct.iter().filter(|r| **r <= 0).count();
        prop_assert_eq!(sturm_real_roots_in(&q, &Interval::up_to(int(0))).unwrap(), nonpositive);
    }

    #[test]
    fn random_solvable_algebras_are_consistent(seed: u64) {
        let g = random_solvable(seed);
        prop_assert!(g.validate().is_ok());
        prop_assert!(g.is_solvable());
        let nil = g.nilradical().unwrap();
        prop_assert!(g.nilradical_oracle(&nil));
        prop_assert!(nil.contains_subspace(&g.center()));
        let series = g.derived_series();
        for w in series.windows(2) {
            prop_assert!(w[0].contains_subspace(&w[1]));
        }
    }

    #[test]
    fn hull_invariants_on_random_algebras(seed: u64) {
        let g = random_solvable(seed);
        let hull = build_splittable_hull(&g).unwrap();
        prop_assert!(hull.check().is_ok());
        prop_assert!(hull.nbar.is_nilpotent());
        let n = g.dim();
        for i in 0..n {
            for j in i + 1..n {
                let defect = additivity_defect(&g, &unit_vec(n, i), &unit_vec(n, j)).unwrap();
                prop_assert!(defect.is_nilpotent());
            }
        }
        let abelian = unipotent_hull_abelian(&g).unwrap();
        let split = recognize_split_form(&g).unwrap();
        prop_assert_eq!(abelian.abelian, split.is_some());
        if let Some(s) = split {
            prop_assert!(s.check(&g).is_ok());
        }
    }

    #[test]
    fn abelian_hull_model_is_certified_formal(seed: u64) {
        let g = random_solvable(seed);
        if unipotent_hull_abelian(&g).unwrap().abelian {
            let model = invariant_subcomplex(&hull_action_data(&g).unwrap()).unwrap().model;
            let v = formality_verdict(&model, None).unwrap();
            prop_assert_eq!(v.status, FormalityStatus::CertifiedFormal);
            prop_assert!(v.verify(&model));
        }
    }

    #[test]
    fn complex_identities_on_random_algebras(seed: u64) {
        let g = random_solvable(seed);
        let cx = ce_complex(&g).unwrap();
        for k in 0..cx.dim() {
            prop_assert!((cx.differential(k + 1) * cx.differential(k)).is_zero());
        }
        prop_assert_eq!(CohomologyRing::new(cx.clone()).euler_characteristic(), 0);
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xfeed);
        let gb = cx.graded().clone();
        for _ in 0..4 {
            let (p, q) = (rng.gen_range(0..=cx.dim()), rng.gen_range(0..=cx.dim()));
            if p + q > cx.dim() {
                continue;
            }
            let (a, b) = (random_form(&mut rng, &gb, p), random_form(&mut rng, &gb, q));
            let lhs = cx.apply_d(&a.wedge(&b));
            let sign = if p % 2 == 0 { int(1) } else { int(-1) };
            let rhs = cx.apply_d(&a).wedge(&b).add(&a.wedge(&cx.apply_d(&b)).scale(&sign));
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn torus_extension_and_pullback_respect_wedge(seed: u64, dim in 2usize..6) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let gb = GradedBasis::new(dim);
        let d = random_mat(&mut rng, dim, dim, 3);
        let m = random_mat(&mut rng, dim, dim, 3);
        let (p, q) = (rng.gen_range(0..=dim), rng.gen_range(0..=dim));
        prop_assume!(p + q <= dim);
        let (a, b) = (random_form(&mut rng, &gb, p), random_form(&mut rng, &gb, q));
        let lhs = apply_derivation(&d, &a.wedge(&b));
        let rhs = apply_derivation(&d, &a).wedge(&b).add(&a.wedge(&apply_derivation(&d, &b)));
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(apply_pullback(&m, &a.wedge(&b)), apply_pullback(&m, &a).wedge(&apply_pullback(&m, &b)));
    }

    #[test]
    fn cup_ignores_exact_perturbations(seed: u64, which in 0usize..7) {
        let cx = fixture_complexes().swap_remove(which);
        let ring = CohomologyRing::new(cx.clone());
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let gb = cx.graded().clone();
        let (k, l) = (rng.gen_range(0..=cx.dim()), rng.gen_range(0..=cx.dim()));
        prop_assume!(k + l <= cx.dim());
        let a: Vector = (0..ring.group(k).dim()).map(|_| small(&mut rng, 3)).collect();
        let b: Vector = (0..ring.group(l).dim()).map(|_| small(&mut rng, 3)).collect();
        let perturb = |rng: &mut ChaCha8Rng, deg: usize| {
            if deg == 0 { ExteriorForm::zero(cx.dim(), 0) } else { cx.apply_d(&random_form(rng, &gb, deg - 1)) }
        };
        let ra = ring.representative(k, &a).add(&perturb(&mut rng, k));
        let rb = ring.representative(l, &b).add(&perturb(&mut rng, l));
        prop_assert_eq!(ring.class_of(&ra).unwrap(), a.clone());
        prop_assert_eq!(ring.class_of(&ra.wedge(&rb)).unwrap(), ring.cup(k, &a, l, &b));
    }

    #[test]
    fn massey_stable_under_exact_perturbation(seed: u64, which in 0usize..3) {
        let g = [fixtures::heisenberg(), fixtures::kodaira_thurston(), fixtures::filiform4()][which].clone();
        let cx = ce_complex(&g).unwrap();
        let ring = CohomologyRing::new(cx.clone());
        let gb = cx.graded().clone();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut pick = || {
            let deg = rng.gen_range(1..=2);
            let h = ring.group(deg).dim();
            (h > 0).then(|| ClassRef::basis(&ring, deg, rng.gen_range(0..h)))
        };
        let (a, b, c) = (pick(), pick(), pick());
        prop_assume!(a.is_some() && b.is_some() && c.is_some());
        let (a, b, c) = (a.unwrap(), b.unwrap(), c.unwrap());
        prop_assume!(a.degree + b.degree + c.degree <= cx.dim() + 1);
        let base = massey_triple(&ring, &a, &b, &c);
        prop_assume!(base.is_ok());
        let base = base.unwrap();
        // degree-1 representatives are rigid (d vanishes on constants); degree-2 ones move
        let shift = |rng: &mut ChaCha8Rng, r: &ExteriorForm| r.add(&cx.apply_d(&random_form(rng, &gb, r.degree() - 1)));
        let reps = [
            shift(&mut rng, &base.representatives[0]),
            shift(&mut rng, &base.representatives[1]),
            shift(&mut rng, &base.representatives[2]),
        ];
        let w = massey_with_representatives(&ring, [&a, &b, &c], reps).unwrap();
        prop_assert!(verify_massey_witness(ring.complex(), &w));
        prop_assert_eq!(w.vanishes, base.vanishes);
        let diff: Vector = w.representative_class.iter().zip(&base.representative_class).map(|(x, y)| x - y).collect();
        prop_assert!(diff.iter().all(Zero::is_zero) || in_span(&base.indeterminacy, &diff));
    }

    #[test]
    fn lefschetz_flags_invariant_under_scaling_and_coboundaries(seed: u64, which in 0usize..3) {
        let (cx, omega) = match which {
            0 => {
                let h = fixtures::heisenberg_line_involution();
                (invariant_subcomplex(&h).unwrap().model, fixtures::heisenberg_line_involution_omega())
            }
            1 => (ce_complex(&fixtures::kodaira_thurston()).unwrap(), fixtures::kodaira_thurston_omega()),
            _ => {
                let g = fixtures::hyperbolic_elliptic(&[int(1)], &[int(1)]);
                (invariant_subcomplex(&hull_action_data(&g).unwrap()).unwrap().model, fixtures::hyperbolic_elliptic_omega(1, 1))
            }
        };
        let ring = CohomologyRing::new(cx.clone());
        let flags = |w: &ExteriorForm| hard_lefschetz(&ring, w).map(|r| r.degrees.iter().map(|d| d.iso).collect::<Vec<_>>());
        let base = flags(&omega).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let s = small(&mut rng, 5);
        prop_assume!(!s.is_zero());
        prop_assert_eq!(flags(&omega.scale(&s)).unwrap(), base.clone());
        let eta: Vector = (0..cx.space_dim(1)).map(|_| small(&mut rng, 3)).collect();
        let shifted = omega.add(&cx.apply_d(&cx.to_form(1, &eta)));
        prop_assume!(verify_symplectic(&cx, &shifted).unwrap().is_symplectic());
        prop_assert_eq!(flags(&shifted).unwrap(), base);
    }

    #[test]
    fn type_one_witnesses_reverify(seed: u64) {
        let g = random_solvable(seed);
        let h = hull_action_data(&g).unwrap();
        let v = type_one_check(&h).unwrap();
        for (s, d) in v.spectra.iter().zip(&h.torus_derivations) {
            prop_assert!(s.verify(d));
        }
        if v.status == TypeOneStatus::NotTypeI {
            let w = v.witness.unwrap();
            let s = &v.spectra[w];
            prop_assert!(!s.compatible);
            prop_assert!(!s.odd_coefficients_vanish || s.nonpositive_roots < s.squarefree.as_ref().and_then(Poly::degree));
        }
    }

    #[test]
    fn analyze_is_idempotent(seed: u64) {
        let input = AnalysisInput::new(random_solvable(seed));
        prop_assert_eq!(analyze(&input), analyze(&input));
    }

    #[test]
    fn documents_round_trip(seed: u64, dim in 1usize..6, differentials: bool) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let basis = names("b", dim);
        let table = if differentials {
            let mut ds = Vec::new();
            for target in 0..dim {
                if !rng.gen_bool(0.5) {
                    continue;
                }
                let mut terms = Vec::new();
                for i in 0..dim {
                    for j in i + 1..dim {
                        if rng.gen_bool(0.3) {
                            terms.push((i, j, small(&mut rng, 4)));
                        }
                    }
                }
                ds.push(solvhull::io::Differential { target, terms });
            }
            BracketTable::Differentials(ds)
        } else {
            let mut bs = Vec::new();
            for i in 0..dim {
                for j in i + 1..dim {
                    if rng.gen_bool(0.4) {
                        let value = (0..dim).map(|_| small(&mut rng, 4)).collect();
                        let (i, j) = if rng.gen_bool(0.5) { (i, j) } else { (j, i) };
                        bs.push(Bracket { i, j, value });
                    }
                }
            }
            BracketTable::Brackets(bs)
        };
        let mut doc = InputDocument::new(AlgebraSpec { basis, table });
        if dim >= 2 && rng.gen_bool(0.5) {
            doc.omega = Some(vec![OmegaTerm { i: 0, j: 1, coef: small(&mut rng, 4) }]);
        }
        if rng.gen_bool(0.5) {
            doc.options = DocOptions { massey_depth: Some(rng.gen_range(0..5)), finite_bound: Some(rng.gen_range(1..100)) };
        }
        let text = render_document(&doc);
        prop_assert_eq!(parse_document(&text).unwrap(), doc);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn cayley_hamilton(seed: u64, n in 1usize..9) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = random_mat(&mut rng, n, n, 4);
        let p = char_poly(&m);
        prop_assert_eq!(p.degree(), Some(n));
        prop_assert!(p.leading().is_some_and(One::is_one));
        prop_assert!(p.eval_at_matrix(&m).is_zero());
        prop_assert_eq!(rank_of(&[p.coeffs().to_vec()]), 1);
    }
}
