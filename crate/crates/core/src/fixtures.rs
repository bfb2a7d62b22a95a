//! Built-in algebras, hull data and symplectic forms.

use crate::forms::{parse_form, ExteriorForm};
use crate::hull::{HullData, DEFAULT_FINITE_BOUND};
use crate::lie::{DifferentialRow, LieAlgebra};
use crate::linalg::Mat;
use crate::rational::{int, zero_vec, Rational, Vector};

fn names(n: &[&str]) -> Vec<String> {
    n.iter().map(|s| s.to_string()).collect()
}

fn indexed(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}

fn vec_with(dim: usize, entries: &[(usize, Rational)]) -> Vector {
    let mut v = zero_vec(dim);
    for (k, c) in entries {
        v[*k] = c.clone();
    }
    v
}

fn form(g_names: &[String], text: &str) -> ExteriorForm {
    parse_form(g_names, text).expect("fixture form parses")
}

pub fn abelian(n: usize) -> LieAlgebra {
    LieAlgebra::abelian(indexed("e", n)).expect("within caps")
}

/// `[e1, e2] = e3`.
pub fn heisenberg() -> LieAlgebra {
    heisenberg_named(names(&["e1", "e2", "e3"]))
}

pub fn heisenberg_named(n: Vec<String>) -> LieAlgebra {
    LieAlgebra::from_brackets(n, &[(0, 1, vec_with(3, &[(2, int(1))]))]).expect("valid")
}

/// `[t, x] = x`, `[t, y] = -y`.
pub fn sol() -> LieAlgebra {
    LieAlgebra::from_brackets(
        names(&["t", "x", "y"]),
        &[(0, 1, vec_with(3, &[(1, int(1))])), (0, 2, vec_with(3, &[(2, int(-1))]))],
    )
    .expect("valid")
}

/// `[h, e] = 2e`, `[h, f] = -2f`, `[e, f] = h`.
pub fn sl2() -> LieAlgebra {
    LieAlgebra::from_brackets(
        names(&["h", "e", "f"]),
        &[
            (0, 1, vec_with(3, &[(1, int(2))])),
            (0, 2, vec_with(3, &[(2, int(-2))])),
            (1, 2, vec_with(3, &[(0, int(1))])),
        ],
    )
    .expect("valid")
}

/// `[e1, e2] = e3`, `[e1, e3] = e4`.
pub fn filiform4() -> LieAlgebra {
    LieAlgebra::from_brackets(
        indexed("e", 4),
        &[(0, 1, vec_with(4, &[(2, int(1))])), (0, 2, vec_with(4, &[(3, int(1))]))],
    )
    .expect("valid")
}

/// Heisenberg times a line: `[e1, e2] = e3` in dimension 4.
pub fn kodaira_thurston() -> LieAlgebra {
    LieAlgebra::from_brackets(indexed("e", 4), &[(0, 1, vec_with(4, &[(2, int(1))]))]).expect("valid")
}

pub fn kodaira_thurston_omega() -> ExteriorForm {
    form(kodaira_thurston().names(), "e1^e3 + e2^e4")
}

/// `[t, z] = w`, `[t, w] = -z`.
pub fn rotation() -> LieAlgebra {
    LieAlgebra::from_brackets(
        names(&["t", "z", "w"]),
        &[(0, 1, vec_with(3, &[(2, int(1))])), (0, 2, vec_with(3, &[(1, int(-1))]))],
    )
    .expect("valid")
}

/// Abelian `u = <t, z, w>` with the derivation `0 + [[0,-1],[1,0]]`.
pub fn rotation_hull() -> HullData {
    let d = Mat::from_i64_rows(&[&[0, 0, 0], &[0, 0, -1], &[0, 1, 0]]);
    HullData::new(LieAlgebra::abelian(names(&["t", "z", "w"])).expect("valid"), vec![d], vec![], DEFAULT_FINITE_BOUND)
        .expect("valid hull data")
}

pub fn hyperbolic_elliptic_names(m: usize, n: usize) -> Vec<String> {
    let mut out = vec!["tau".to_string()];
    out.extend(indexed("x", m));
    out.extend(indexed("y", m));
    out.extend(indexed("z", n));
    out.extend(indexed("w", n));
    out.push("sigma".into());
    out
}

/// Generators `tau, x_i, y_i, z_j, w_j, sigma` with
/// `d x_i = -a_i tau^x_i`, `d y_i = a_i tau^y_i`,
/// `d z_j = b_j tau^w_j`, `d w_j = -b_j tau^z_j`.
pub fn hyperbolic_elliptic_differentials(a: &[Rational], b: &[Rational]) -> Vec<DifferentialRow> {
    let (m, n) = (a.len(), b.len());
    let x = |i: usize| 1 + i;
    let y = |i: usize| 1 + m + i;
    let z = |j: usize| 1 + 2 * m + j;
    let w = |j: usize| 1 + 2 * m + n + j;
    let mut ds = Vec::new();
    for (i, ai) in a.iter().enumerate() {
        ds.push((x(i), vec![(0, x(i), -ai.clone())]));
        ds.push((y(i), vec![(0, y(i), ai.clone())]));
    }
    for (j, bj) in b.iter().enumerate() {
        ds.push((z(j), vec![(0, w(j), bj.clone())]));
        ds.push((w(j), vec![(0, z(j), -bj.clone())]));
    }
    ds
}

pub fn hyperbolic_elliptic(a: &[Rational], b: &[Rational]) -> LieAlgebra {
    LieAlgebra::from_differentials(hyperbolic_elliptic_names(a.len(), b.len()), &hyperbolic_elliptic_differentials(a, b)).expect("within caps")
}

/// `tau^sigma + sum x_i^y_i + sum z_j^w_j`.
pub fn hyperbolic_elliptic_omega(m: usize, n: usize) -> ExteriorForm {
    let nm = hyperbolic_elliptic_names(m, n);
    let mut text = "tau^sigma".to_string();
    for i in 1..=m {
        text.push_str(&format!(" + x{i}^y{i}"));
    }
    for j in 1..=n {
        text.push_str(&format!(" + z{j}^w{j}"));
    }
    form(&nm, &text)
}

pub fn complex_sol_names() -> Vec<String> {
    names(&["x1", "x2", "y1", "y2", "z1", "z2"])
}

/// Differentials: `d x1 = d x2 = 0`,
/// `d y1 = -x1^y1 + x2^y2`, `d y2 = -x2^y1 - x1^y2`,
/// `d z1 = x1^z1 - x2^z2`, `d z2 = x1^z2 + x2^z1`.
pub fn complex_sol_differentials() -> Vec<DifferentialRow> {
    let (x1, x2, y1, y2, z1, z2) = (0, 1, 2, 3, 4, 5);
    vec![
        (y1, vec![(x1, y1, int(-1)), (x2, y2, int(1))]),
        (y2, vec![(x2, y1, int(-1)), (x1, y2, int(-1))]),
        (z1, vec![(x1, z1, int(1)), (x2, z2, int(-1))]),
        (z2, vec![(x1, z2, int(1)), (x2, z1, int(1))]),
    ]
}

pub fn complex_sol() -> LieAlgebra {
    LieAlgebra::from_differentials(complex_sol_names(), &complex_sol_differentials()).expect("valid")
}

pub fn complex_sol_omega() -> ExteriorForm {
    form(&complex_sol_names(), "x1^x2 + z1^y1 + y2^z2")
}

/// Heisenberg on `x1, x2, x3` with the involution `diag(1, -1, -1)`.
pub fn heisenberg_involution() -> HullData {
    let u = heisenberg_named(names(&["x1", "x2", "x3"]));
    let g = Mat::diagonal(&[int(1), int(-1), int(-1)]);
    HullData::new(u, vec![], vec![g], DEFAULT_FINITE_BOUND).expect("valid hull data")
}

/// The previous example times a central line `y`.
pub fn heisenberg_line_algebra() -> LieAlgebra {
    LieAlgebra::from_brackets(names(&["x1", "x2", "x3", "y"]), &[(0, 1, vec_with(4, &[(2, int(1))]))]).expect("valid")
}

pub fn heisenberg_line_involution() -> HullData {
    let g = Mat::diagonal(&[int(1), int(-1), int(-1), int(1)]);
    HullData::new(heisenberg_line_algebra(), vec![], vec![g], DEFAULT_FINITE_BOUND).expect("valid hull data")
}

pub fn heisenberg_line_involution_omega() -> ExteriorForm {
    form(heisenberg_line_algebra().names(), "x1^y + x2^x3")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_fixture_validates() {
        for g in [
            abelian(4),
            heisenberg(),
            sol(),
            sl2(),
            filiform4(),
            kodaira_thurston(),
            rotation(),
            hyperbolic_elliptic(&[int(1)], &[int(1)]),
            hyperbolic_elliptic(&[int(2), crate::rational::rat(-1, 3)], &[int(5)]),
            complex_sol(),
            heisenberg_line_algebra(),
        ] {
            assert!(g.validate().is_ok(), "{g:?}");
        }
    }

    #[test]
    fn hyperbolic_elliptic_brackets() {
        let g = hyperbolic_elliptic(&[int(2)], &[int(3)]);
        // [T, x] = a x, [T, z] = b w, [T, w] = -b z
        assert_eq!(g.basis_bracket(0, 1), vec_with(6, &[(1, int(2))]));
        assert_eq!(g.basis_bracket(0, 2), vec_with(6, &[(2, int(-2))]));
        assert_eq!(g.basis_bracket(0, 3), vec_with(6, &[(4, int(3))]));
        assert_eq!(g.basis_bracket(0, 4), vec_with(6, &[(3, int(-3))]));
    }
}
