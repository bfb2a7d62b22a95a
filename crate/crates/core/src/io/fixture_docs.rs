//! Built-in fixtures as input documents, addressed as `name[:key=v1,v2...]`.

use std::str::FromStr;

use crate::fixtures;
use crate::forms::ExteriorForm;
use crate::lie::{DifferentialRow, LieAlgebra};
use crate::linalg::Mat;
use crate::rational::{int, parse_rational, Rational};

use super::document::{AlgebraSpec, BracketTable, Differential, HullOverrideSpec, InputDocument};

pub const FIXTURE_NAMES: &[&str] = &[
    "abelian",
    "heisenberg",
    "sol",
    "sl2",
    "filiform4",
    "kodaira_thurston",
    "rotation",
    "rotation_hull",
    "hyperbolic_elliptic",
    "complex_sol",
    "heisenberg_involution",
    "heisenberg_line_involution",
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixtureId {
    pub name: String,
    pub params: Vec<(String, Vec<String>)>,
}

impl FromStr for FixtureId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let mut parts = s.split(':');
        let name = parts.next().unwrap_or_default().trim().to_string();
        if !FIXTURE_NAMES.contains(&name.as_str()) {
            return Err(format!("unknown fixture '{name}'; known: {}", FIXTURE_NAMES.join(", ")));
        }
        let mut params = Vec::new();
        for p in parts {
            let (k, v) = p.split_once('=').ok_or_else(|| format!("fixture parameter '{p}' is not key=value"))?;
            params.push((k.trim().to_string(), v.split(',').map(|x| x.trim().to_string()).collect()));
        }
        Ok(FixtureId { name, params })
    }
}

impl FixtureId {
    fn param(&self, key: &str) -> Option<&[String]> {
        self.params.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_slice())
    }

    fn check_keys(&self, allowed: &[&str]) -> Result<(), String> {
        match self.params.iter().find(|(k, _)| !allowed.contains(&k.as_str())) {
            Some((k, _)) => Err(format!("fixture '{}' has no parameter '{k}'", self.name)),
            None => Ok(()),
        }
    }

    fn rationals(&self, key: &str) -> Result<Vec<Rational>, String> {
        match self.param(key) {
            None => Ok(vec![int(1)]),
            Some(vs) => vs
                .iter()
                .map(|v| parse_rational(v).ok_or_else(|| format!("malformed rational '{v}' for parameter {key}")))
                .collect(),
        }
    }
}

fn plain(g: &LieAlgebra) -> InputDocument {
    InputDocument::new(AlgebraSpec::from_algebra(g))
}

fn with_omega(mut doc: InputDocument, omega: &ExteriorForm) -> InputDocument {
    doc.set_omega(omega);
    doc
}

fn differentials(names: Vec<String>, ds: Vec<DifferentialRow>) -> InputDocument {
    let table = ds.into_iter().map(|(target, terms)| Differential { target, terms }).collect();
    InputDocument::new(AlgebraSpec { basis: names, table: BracketTable::Differentials(table) })
}

fn with_hull(mut doc: InputDocument, u: Option<&LieAlgebra>, derivations: Vec<Mat>, finite: Vec<Mat>) -> InputDocument {
    doc.hull_override = Some(HullOverrideSpec {
        algebra: u.map(AlgebraSpec::from_algebra),
        derivations,
        finite_generators: finite,
    });
    doc
}

/// The document for a fixture such as `hyperbolic_elliptic:a=2:b=3` or `abelian:n=4`.
pub fn fixture(spec: &str) -> Result<InputDocument, String> {
    let id: FixtureId = spec.parse()?;
    let allowed: &[&str] = match id.name.as_str() {
        "abelian" => &["n"],
        "hyperbolic_elliptic" => &["a", "b"],
        _ => &[],
    };
    id.check_keys(allowed)?;
    let doc = match id.name.as_str() {
        "abelian" => {
            let n = match id.param("n") {
                None => 2,
                Some([v]) => v.parse::<usize>().map_err(|_| format!("n must be a positive integer, got '{v}'"))?,
                Some(_) => return Err("n takes one value".into()),
            };
            if n == 0 || n > crate::lie::HARD_DIM_CAP {
                return Err(format!("n must be between 1 and {}", crate::lie::HARD_DIM_CAP));
            }
            plain(&fixtures::abelian(n))
        }
        "heisenberg" => plain(&fixtures::heisenberg()),
        "sol" => plain(&fixtures::sol()),
        "sl2" => plain(&fixtures::sl2()),
        "filiform4" => plain(&fixtures::filiform4()),
        "kodaira_thurston" => with_omega(plain(&fixtures::kodaira_thurston()), &fixtures::kodaira_thurston_omega()),
        "rotation" => plain(&fixtures::rotation()),
        "rotation_hull" => {
            let h = fixtures::rotation_hull();
            with_hull(plain(&fixtures::rotation()), Some(&h.u), h.torus_derivations, h.finite_generators)
        }
        "hyperbolic_elliptic" => {
            let (a, b) = (id.rationals("a")?, id.rationals("b")?);
            if 2 + 2 * (a.len() + b.len()) > crate::lie::HARD_DIM_CAP {
                return Err("hyperbolic_elliptic dimension exceeds the hard cap".into());
            }
            let doc = differentials(fixtures::hyperbolic_elliptic_names(a.len(), b.len()), fixtures::hyperbolic_elliptic_differentials(&a, &b));
            with_omega(doc, &fixtures::hyperbolic_elliptic_omega(a.len(), b.len()))
        }
        "complex_sol" => with_omega(
            differentials(fixtures::complex_sol_names(), fixtures::complex_sol_differentials()),
            &fixtures::complex_sol_omega(),
        ),
        "heisenberg_involution" => {
            let h = fixtures::heisenberg_involution();
            with_hull(plain(&h.u), None, h.torus_derivations, h.finite_generators)
        }
        "heisenberg_line_involution" => {
            let h = fixtures::heisenberg_line_involution();
            let doc = with_hull(plain(&h.u), None, h.torus_derivations, h.finite_generators);
            with_omega(doc, &fixtures::heisenberg_line_involution_omega())
        }
        _ => unreachable!("name checked against FIXTURE_NAMES"),
    };
    Ok(doc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::{parse_document, render_document};

    #[test]
    fn every_fixture_round_trips() {
        for name in FIXTURE_NAMES {
            let doc = fixture(name).unwrap();
            let text = render_document(&doc);
            assert_eq!(parse_document(&text).unwrap(), doc, "{name}\n{text}");
        }
    }

    #[test]
    fn parameters() {
        let doc = fixture("hyperbolic_elliptic:a=2:b=3,1/2").unwrap();
        let g = doc.algebra.lie_algebra().unwrap();
        assert_eq!(g, fixtures::hyperbolic_elliptic(&[int(2)], &[int(3), crate::rational::rat(1, 2)]));
        assert_eq!(fixture("abelian:n=5").unwrap().algebra.dim(), 5);
        assert!(fixture("nosuch").is_err());
        assert!(fixture("sol:n=2").is_err());
        assert!(fixture("hyperbolic_elliptic:a=x").is_err());
    }
}
