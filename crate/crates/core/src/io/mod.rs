//! Input documents, fixture lookup, command dispatch and report rendering.

mod document;
mod fixture_docs;
mod run;

pub use document::{
    parse_document, render_document, AlgebraSpec, Bracket, BracketTable, Differential, DocOptions, HullOverrideSpec,
    InputDocument, OmegaTerm, ParseError, SCHEMA_VERSION,
};
pub use fixture_docs::{fixture, FixtureId, FIXTURE_NAMES};
pub use run::{load_input, parse_failure, run, run_source, Command, Format, RunOptions, RunOutput, EXIT_INTERNAL, EXIT_OK, EXIT_PARSE, EXIT_PRECONDITION, EXIT_VALIDATION};

use serde::ser::{Serialize, SerializeSeq, Serializer};

use crate::linalg::Mat;
use crate::poly::Poly;
use crate::rational::{format_rational, Rational};

/// Rationals as `"p/q"` strings.
pub fn serialize_vector<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for x in v {
        seq.serialize_element(&format_rational(x))?;
    }
    seq.end()
}

/// Coefficients lowest degree first, as `"p/q"` strings.
pub fn serialize_poly<S: Serializer>(p: &Poly, s: S) -> Result<S::Ok, S::Error> {
    serialize_vector(p.coeffs(), s)
}

pub fn serialize_opt_poly<S: Serializer>(p: &Option<Poly>, s: S) -> Result<S::Ok, S::Error> {
    match p {
        Some(p) => serialize_poly(p, s),
        None => s.serialize_none(),
    }
}

impl Serialize for Mat {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.rows()))?;
        for i in 0..self.rows() {
            let row: Vec<String> = self.row(i).iter().map(format_rational).collect();
            seq.serialize_element(&row)?;
        }
        seq.end()
    }
}
