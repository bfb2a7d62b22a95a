//! Command dispatch shared by the binary and the tests.

use std::fmt::Write as _;

use serde::Serialize;
use serde_json::{json, Value};

use crate::classify::{analyze, AnalysisReport, HullSummary, Stage};
use crate::cochain::{ce_complex, CochainComplex, CohomologyRing};
use crate::error::{Error, ErrorKind};
use crate::forms::parse_form;
use crate::invariants::invariant_subcomplex;
use crate::lefschetz::search_symplectic;
use crate::lie::format_combination;
use crate::linalg::Mat;
use crate::rational::format_rational;

use super::document::{parse_document, InputDocument, ParseError, SCHEMA_VERSION};
use super::fixture_docs::fixture;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INTERNAL: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_VALIDATION: i32 = 3;
pub const EXIT_PRECONDITION: i32 = 4;

/// Seed and budget of the fallback search for a symplectic form.
const SEARCH_SEED: u64 = 0x5eed;
const SEARCH_ATTEMPTS: usize = 64;
const SEARCH_HEIGHT: i64 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Validate,
    Nilradical,
    Hull,
    Cohomology,
    Invariants,
    Formality,
    Lefschetz,
    Analyze,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Validate => "validate",
            Command::Nilradical => "nilradical",
            Command::Hull => "hull",
            Command::Cohomology => "cohomology",
            Command::Invariants => "invariants",
            Command::Formality => "formality",
            Command::Lefschetz => "lefschetz",
            Command::Analyze => "analyze",
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    #[default]
    Text,
    Structured,
}

#[derive(Clone, Debug, Default)]
pub struct RunOptions {
    /// A 2-form in the hull basis, e.g. `"x1^y + x2^x3"`; overrides the document.
    pub omega: Option<String>,
    pub massey_depth: Option<usize>,
    pub finite_bound: Option<usize>,
    /// Let `lefschetz` look for a symplectic form when none is supplied.
    /// Heuristic: a miss proves nothing.
    pub search_omega: bool,
    pub format: Format,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunOutput {
    pub text: String,
    pub exit_code: i32,
}

fn exit_for(kind: ErrorKind) -> i32 {
    match kind {
        ErrorKind::Validation => EXIT_VALIDATION,
        ErrorKind::Precondition => EXIT_PRECONDITION,
        ErrorKind::Internal => EXIT_INTERNAL,
    }
}

/// Reads `@fixture[:params]` or a TOML file.
pub fn load_input(spec: &str) -> Result<InputDocument, ParseError> {
    let plain = |message: String| ParseError { message, line: None, column: None };
    match spec.strip_prefix('@') {
        Some(name) => fixture(name).map_err(plain),
        None => {
            let text = std::fs::read_to_string(spec).map_err(|e| plain(format!("cannot read {spec}: {e}")))?;
            parse_document(&text)
        }
    }
}

pub fn run_source(command: Command, text: &str, opts: &RunOptions) -> RunOutput {
    match parse_document(text) {
        Ok(doc) => run(command, &doc, opts),
        Err(e) => parse_failure(command, &e, opts.format),
    }
}

pub fn parse_failure(command: Command, e: &ParseError, format: Format) -> RunOutput {
    let text = match format {
        Format::Text => format!("error: {e}\n"),
        Format::Structured => envelope_error(command, EXIT_PARSE, "parse", &e.message, e.line, e.column),
    };
    RunOutput { text, exit_code: EXIT_PARSE }
}

fn envelope_error(
    command: Command,
    code: i32,
    kind: &str,
    message: &str,
    line: Option<usize>,
    column: Option<usize>,
) -> String {
    let v = json!({
        "schema_version": SCHEMA_VERSION,
        "command": command.name(),
        "exit_code": code,
        "error": { "kind": kind, "message": message, "line": line, "column": column },
    });
    pretty(&v)
}

fn envelope_ok<T: Serialize>(command: Command, code: i32, result: &T) -> String {
    let v = json!({
        "schema_version": SCHEMA_VERSION,
        "command": command.name(),
        "exit_code": code,
        "result": result,
    });
    pretty(&v)
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

fn error_output(command: Command, e: &Error, format: Format) -> RunOutput {
    let code = exit_for(e.kind());
    let kind = match e.kind() {
        ErrorKind::Validation => "validation",
        ErrorKind::Precondition => "precondition",
        ErrorKind::Internal => "internal",
    };
    let text = match format {
        Format::Text => format!("error: {e}\n"),
        Format::Structured => envelope_error(command, code, kind, &e.to_string(), None, None),
    };
    RunOutput { text, exit_code: code }
}

fn input_error(command: Command, message: String, format: Format) -> RunOutput {
    parse_failure(command, &ParseError { message, line: None, column: None }, format)
}

/// Exit code of the first failed stage, else `EXIT_OK`.
fn stage_exit(stages: &[Option<ErrorKind>]) -> i32 {
    stages.iter().flatten().next().map_or(EXIT_OK, |k| exit_for(*k))
}

fn failure<T>(s: &Stage<T>) -> Option<ErrorKind> {
    match s {
        Stage::Failed { kind, .. } => Some(*kind),
        _ => None,
    }
}

#[derive(Serialize)]
struct ValidateResult {
    valid: bool,
    dim: usize,
    violation: Option<crate::lie::Violation>,
}

#[derive(Serialize)]
struct HullResult {
    summary: HullSummary,
    basis: Vec<String>,
    brackets: Vec<String>,
    torus_derivations: Vec<Mat>,
    finite_generators: Vec<Mat>,
    finite_group_order: usize,
}

#[derive(Serialize)]
struct CohomologyResult {
    space_dims: Vec<usize>,
    betti: Vec<usize>,
    euler_characteristic: i64,
    /// Cocycle representatives of a basis, by degree.
    representatives: Vec<Vec<String>>,
}

#[derive(Serialize)]
struct InvariantsResult {
    torus_derivations: usize,
    finite_group_order: usize,
    /// Basis of the invariant forms, by degree.
    basis: Vec<Vec<String>>,
    cohomology: CohomologyResult,
}

#[derive(Serialize)]
struct LefschetzResult<'a> {
    omega_source: &'static str,
    symplectic: &'a Stage<crate::classify::SymplecticSummary>,
    lefschetz: &'a Stage<crate::classify::LefschetzSummary>,
}

fn cohomology_of(cx: CochainComplex) -> CohomologyResult {
    let names = cx.names().to_vec();
    let ring = CohomologyRing::new(cx);
    let top = ring.complex().dim();
    CohomologyResult {
        space_dims: ring.complex().space_dims(),
        betti: ring.betti(),
        euler_characteristic: ring.euler_characteristic(),
        representatives: (0..=top)
            .map(|k| ring.basis_representatives(k).iter().map(|f| f.display_with(&names)).collect())
            .collect(),
    }
}

fn bracket_lines(g: &crate::lie::LieAlgebra) -> Vec<String> {
    let n = g.dim();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let v = g.basis_bracket(i, j);
            if v.iter().any(|x| !num_traits::Zero::is_zero(x)) {
                out.push(format!("[{}, {}] = {}", g.names()[i], g.names()[j], format_combination(g.names(), &v)));
            }
        }
    }
    out
}

/// Runs `command` on a parsed document.
pub fn run(command: Command, doc: &InputDocument, opts: &RunOptions) -> RunOutput {
    let mut doc = doc.clone();
    if opts.massey_depth.is_some() {
        doc.options.massey_depth = opts.massey_depth;
    }
    if opts.finite_bound.is_some() {
        doc.options.finite_bound = opts.finite_bound;
    }
    let mut input = match doc.analysis_input() {
        Ok(i) => i,
        Err(e) => return error_output(command, &e, opts.format),
    };
    if let Some(text) = &opts.omega {
        match parse_form(doc.hull_basis(), text) {
            Ok(w) if w.degree() == 2 => input.omega = Some(w),
            Ok(_) => return input_error(command, "omega must be a 2-form".into(), opts.format),
            Err(e) => return input_error(command, format!("cannot parse omega: {e}"), opts.format),
        }
    }
    let fmt = opts.format;
    let g = input.algebra.clone();
    let validity = g.validate();

    if command == Command::Validate {
        let result = ValidateResult { valid: validity.is_ok(), dim: g.dim(), violation: validity.clone().err() };
        let code = if result.valid { EXIT_OK } else { EXIT_VALIDATION };
        let text = match fmt {
            Format::Structured => envelope_ok(command, code, &result),
            Format::Text => match &validity {
                Ok(()) => format!("valid Lie algebra of dimension {}\n", g.dim()),
                Err(v) => format!("invalid: {v}\n"),
            },
        };
        return RunOutput { text, exit_code: code };
    }
    if command != Command::Analyze {
        if let Err(v) = validity {
            return error_output(command, &Error::Invalid(v), fmt);
        }
    }

    match command {
        Command::Validate => unreachable!("handled above"),
        Command::Nilradical => {
            let report = analyze(&crate::classify::AnalysisInput { omega: None, ..input });
            let s = report.structure.done().expect("structure is computed for valid algebras").clone();
            if !s.solvable {
                return error_output(command, &Error::NotSolvable, fmt);
            }
            let text = match fmt {
                Format::Structured => envelope_ok(command, EXIT_OK, &s),
                Format::Text => {
                    let mut t = String::new();
                    let _ = writeln!(t, "solvable: {}", s.solvable);
                    let _ = writeln!(t, "nilpotent: {}", s.nilpotent);
                    let _ = writeln!(t, "derived series dims: {:?}", s.derived_series_dims);
                    let _ = writeln!(t, "nilradical dim: {}", s.nilradical_dim.unwrap_or(0));
                    for v in &s.nilradical_basis {
                        let _ = writeln!(t, "  {v}");
                    }
                    t
                }
            };
            RunOutput { text, exit_code: EXIT_OK }
        }
        Command::Hull => {
            if input.hull_override.is_none() && !g.is_solvable() {
                return error_output(command, &Error::NotSolvable, fmt);
            }
            let (hd, summary) = match input.hull_data() {
                Ok(x) => x,
                Err(e) => return error_output(command, &e, fmt),
            };
            let result = HullResult {
                summary,
                basis: hd.u.names().to_vec(),
                brackets: bracket_lines(&hd.u),
                torus_derivations: hd.torus_derivations.clone(),
                finite_generators: hd.finite_generators.clone(),
                finite_group_order: hd.finite_group.len(),
            };
            let text = match fmt {
                Format::Structured => envelope_ok(command, EXIT_OK, &result),
                Format::Text => {
                    let mut t = String::new();
                    let s = &result.summary;
                    let _ = writeln!(t, "source: {}", s.source);
                    if let Some(c) = s.complement_source {
                        let _ = writeln!(t, "complement: {}", serde_json::to_value(c).expect("enum").as_str().unwrap_or(""));
                    }
                    let _ = writeln!(t, "dim Im f: {}", s.imf_dim);
                    let _ = writeln!(t, "unipotent hull: dim {}, basis {}", s.nbar_dim, result.basis.join(", "));
                    let _ = writeln!(t, "abelian: {}", s.nbar_abelian);
                    if let Some(w) = &s.witness {
                        let _ = writeln!(t, "witness: {w}");
                    }
                    for b in &result.brackets {
                        let _ = writeln!(t, "  {b}");
                    }
                    for (i, d) in result.torus_derivations.iter().enumerate() {
                        let _ = writeln!(t, "derivation {}: {}", i + 1, matrix_text(d));
                    }
                    let _ = writeln!(t, "finite group order: {}", result.finite_group_order);
                    t
                }
            };
            RunOutput { text, exit_code: EXIT_OK }
        }
        Command::Cohomology => {
            let cx = match ce_complex(&g) {
                Ok(cx) => cx,
                Err(e) => return error_output(command, &e, fmt),
            };
            let result = cohomology_of(cx);
            let text = match fmt {
                Format::Structured => envelope_ok(command, EXIT_OK, &result),
                Format::Text => cohomology_text(&result),
            };
            RunOutput { text, exit_code: EXIT_OK }
        }
        Command::Invariants => {
            if input.hull_override.is_none() && !g.is_solvable() {
                return error_output(command, &Error::NotSolvable, fmt);
            }
            let ic = match input.hull_data().and_then(|(hd, _)| invariant_subcomplex(&hd)) {
                Ok(ic) => ic,
                Err(e) => return error_output(command, &e, fmt),
            };
            let names = ic.hull.u.names().to_vec();
            let basis = (0..=ic.model.dim())
                .map(|k| (0..ic.model.space_dim(k)).map(|j| ic.model.basis_form(k, j).display_with(&names)).collect())
                .collect();
            let result = InvariantsResult {
                torus_derivations: ic.hull.torus_derivations.len(),
                finite_group_order: ic.hull.finite_group.len(),
                basis,
                cohomology: cohomology_of(ic.model.clone()),
            };
            let text = match fmt {
                Format::Structured => envelope_ok(command, EXIT_OK, &result),
                Format::Text => {
                    let mut t = String::new();
                    for (k, b) in result.basis.iter().enumerate() {
                        let _ = writeln!(t, "invariant {k}-forms ({}): {}", b.len(), b.join(", "));
                    }
                    t.push_str(&cohomology_text(&result.cohomology));
                    t
                }
            };
            RunOutput { text, exit_code: EXIT_OK }
        }
        Command::Formality => {
            let report = analyze(&crate::classify::AnalysisInput { omega: None, ..input });
            let code = stage_exit(&[
                failure(&report.validation),
                failure(&report.hull),
                failure(&report.model),
                failure(&report.formality),
            ]);
            let text = match fmt {
                Format::Structured => envelope_ok(command, code, &report.formality),
                Format::Text => {
                    let mut t = String::new();
                    stage_text(&mut t, "formality", &report.formality, formality_text);
                    if code != EXIT_OK {
                        upstream_text(&mut t, &report);
                    }
                    t
                }
            };
            RunOutput { text, exit_code: code }
        }
        Command::Lefschetz => {
            let mut source = "input";
            if input.omega.is_none() {
                if !opts.search_omega {
                    let e = Error::Precondition("no omega supplied; pass one or enable the random search".into());
                    return error_output(command, &e, fmt);
                }
                let found = input
                    .hull_data()
                    .and_then(|(hd, _)| invariant_subcomplex(&hd))
                    .ok()
                    .and_then(|ic| search_symplectic(&ic.model, SEARCH_SEED, SEARCH_ATTEMPTS, SEARCH_HEIGHT));
                match found {
                    Some(w) => {
                        input.omega = Some(w);
                        source = "search";
                    }
                    None => {
                        let e = Error::Precondition("no omega supplied and the random search found no symplectic form".into());
                        return error_output(command, &e, fmt);
                    }
                }
            }
            let report = analyze(&input);
            let code = stage_exit(&[
                failure(&report.validation),
                failure(&report.hull),
                failure(&report.model),
                failure(&report.symplectic),
                failure(&report.lefschetz),
            ]);
            let code = match (&report.symplectic, code) {
                (Stage::Done { result }, EXIT_OK) if !result.symplectic => EXIT_PRECONDITION,
                _ => code,
            };
            let result = LefschetzResult { omega_source: source, symplectic: &report.symplectic, lefschetz: &report.lefschetz };
            let text = match fmt {
                Format::Structured => envelope_ok(command, code, &result),
                Format::Text => {
                    let mut t = String::new();
                    let _ = writeln!(t, "omega source: {source}");
                    stage_text(&mut t, "symplectic", &report.symplectic, symplectic_text);
                    stage_text(&mut t, "hard Lefschetz", &report.lefschetz, lefschetz_text);
                    if failure(&report.hull).is_some() || failure(&report.model).is_some() {
                        upstream_text(&mut t, &report);
                    }
                    t
                }
            };
            RunOutput { text, exit_code: code }
        }
        Command::Analyze => {
            let report = analyze(&input);
            let code = match &report.validation {
                Stage::Failed { .. } => EXIT_VALIDATION,
                _ => {
                    let internal = [
                        failure(&report.hull),
                        failure(&report.model),
                        failure(&report.formality),
                        failure(&report.symplectic),
                        failure(&report.lefschetz),
                        failure(&report.type_one),
                    ]
                    .contains(&Some(ErrorKind::Internal));
                    if internal {
                        EXIT_INTERNAL
                    } else {
                        EXIT_OK
                    }
                }
            };
            let text = match fmt {
                Format::Structured => envelope_ok(command, code, &report),
                Format::Text => analysis_text(&report),
            };
            RunOutput { text, exit_code: code }
        }
    }
}

fn matrix_text(m: &Mat) -> String {
    let rows: Vec<String> =
        (0..m.rows()).map(|i| format!("[{}]", m.row(i).iter().map(format_rational).collect::<Vec<_>>().join(", "))).collect();
    format!("[{}]", rows.join(", "))
}

fn cohomology_text(r: &CohomologyResult) -> String {
    let mut t = String::new();
    let _ = writeln!(t, "cochain dims: {:?}", r.space_dims);
    let _ = writeln!(t, "betti numbers: {:?}", r.betti);
    let _ = writeln!(t, "euler characteristic: {}", r.euler_characteristic);
    for (k, reps) in r.representatives.iter().enumerate() {
        if !reps.is_empty() {
            let _ = writeln!(t, "H^{k}: {}", reps.join(", "));
        }
    }
    t
}

fn stage_text<T>(t: &mut String, title: &str, s: &Stage<T>, body: impl Fn(&mut String, &T)) {
    match s {
        Stage::Done { result } => body(t, result),
        Stage::Failed { error, .. } => {
            let _ = writeln!(t, "{title}: failed: {error}");
        }
        Stage::Skipped { reason } => {
            let _ = writeln!(t, "{title}: skipped ({reason})");
        }
    }
}

fn upstream_text(t: &mut String, r: &AnalysisReport) {
    for (title, s) in [("validation", failure_message(&r.validation)), ("hull", failure_message(&r.hull)), ("model", failure_message(&r.model))] {
        if let Some(e) = s {
            let _ = writeln!(t, "{title}: failed: {e}");
        }
    }
}

fn failure_message<T>(s: &Stage<T>) -> Option<&str> {
    match s {
        Stage::Failed { error, .. } => Some(error),
        _ => None,
    }
}

fn formality_text(t: &mut String, f: &crate::classify::FormalitySummary) {
    let status = serde_json::to_value(f.status).expect("enum");
    let _ = writeln!(t, "formality: {}", status.as_str().unwrap_or(""));
    let _ = writeln!(t, "  certificate: {}", f.certificate);
    if let Some(m) = &f.massey {
        let _ = writeln!(t, "  classes: <{}>", m.classes.join(", "));
        let _ = writeln!(t, "  defining forms: x = {}, y = {}", m.x, m.y);
        let _ = writeln!(t, "  representative: {}", m.representative);
        let _ = writeln!(t, "  indeterminacy rank: {}", m.indeterminacy_rank);
    }
    let _ = writeln!(t, "  triples examined: {} (depth {})", f.triples_examined, f.depth);
    let _ = writeln!(t, "  certificate verified: {}", f.verified);
}

fn symplectic_text(t: &mut String, s: &crate::classify::SymplecticSummary) {
    let _ = writeln!(t, "omega: {}", s.omega);
    let _ = writeln!(t, "  invariant: {}, closed: {}, top power: {}", s.in_model, s.closed, s.top_power);
    let _ = writeln!(t, "  symplectic: {}", s.symplectic);
}

fn lefschetz_text(t: &mut String, l: &crate::classify::LefschetzSummary) {
    let _ = writeln!(t, "hard Lefschetz: {}", if l.holds { "holds" } else { "fails" });
    for d in &l.degrees {
        let _ = writeln!(t, "  degree {}: rank {} of {}x{}, iso {}", d.degree, d.rank, d.matrix.rows(), d.matrix.cols(), d.iso);
        let _ = writeln!(t, "    matrix {}", matrix_text(&d.matrix));
    }
    if !l.failing_degrees.is_empty() {
        let _ = writeln!(t, "  failing degrees: {:?}", l.failing_degrees);
    }
    if let Some(b) = l.duality_route {
        let _ = writeln!(t, "  duality route agrees: {}", b == l.holds);
    }
}

fn analysis_text(r: &AnalysisReport) -> String {
    let mut t = String::new();
    let _ = writeln!(t, "algebra: dimension {}, basis {}", r.input.dim, r.input.basis.join(", "));
    for w in &r.input.warnings {
        let _ = writeln!(t, "warning: {w}");
    }
    stage_text(&mut t, "validation", &r.validation, |t, _| {
        let _ = writeln!(t, "validation: ok");
    });
    stage_text(&mut t, "structure", &r.structure, |t, s| {
        let _ = writeln!(t, "solvable: {}, nilpotent: {}", s.solvable, s.nilpotent);
        if let Some(n) = s.nilradical_dim {
            let _ = writeln!(t, "nilradical: dim {n}, basis {}", s.nilradical_basis.join(", "));
        }
    });
    stage_text(&mut t, "hull", &r.hull, |t, h| {
        let _ = writeln!(t, "unipotent hull: {} (dim {}), abelian: {}", h.source, h.nbar_dim, h.nbar_abelian);
        if let Some(w) = &h.witness {
            let _ = writeln!(t, "  witness: {w}");
        }
    });
    stage_text(&mut t, "model", &r.model, |t, m| {
        let _ = writeln!(t, "invariant model: dims {:?}, betti {:?}", m.space_dims, m.betti);
        let _ = writeln!(t, "  differential vanishes: {}", m.differential_vanishes);
    });
    stage_text(&mut t, "formality", &r.formality, formality_text);
    stage_text(&mut t, "symplectic", &r.symplectic, symplectic_text);
    stage_text(&mut t, "hard Lefschetz", &r.lefschetz, lefschetz_text);
    stage_text(&mut t, "type (I)", &r.type_one, |t, v| {
        let status = serde_json::to_value(v.status).expect("enum");
        let _ = writeln!(t, "type (I): {}", status.as_str().unwrap_or(""));
        if let Some(reason) = &v.reason {
            let _ = writeln!(t, "  reason: {reason}");
        }
        if let Some(w) = v.witness {
            let _ = writeln!(t, "  failing derivation: {}", w + 1);
        }
    });
    stage_text(&mut t, "Kähler", &r.kahler, |t, k| {
        let _ = writeln!(t, "Kähler: {}", k.statement);
    });
    t
}

#[cfg(test)]
mod tests {
    use super::*;

    fn structured() -> RunOptions {
        RunOptions { format: Format::Structured, ..RunOptions::default() }
    }

    #[test]
    fn analyze_fixture_is_deterministic() {
        let doc = fixture("sol").unwrap();
        let a = run(Command::Analyze, &doc, &structured());
        let b = run(Command::Analyze, &doc, &structured());
        assert_eq!(a, b);
        assert_eq!(a.exit_code, EXIT_OK);
        assert!(a.text.contains("\"not_type_I\""));
    }

    #[test]
    fn exit_codes() {
        let opts = RunOptions::default();
        assert_eq!(run_source(Command::Analyze, "schema_version = 1\n[algebra\n", &opts).exit_code, EXIT_PARSE);
        let bad = "schema_version = 1\n[algebra]\ndim = 3\nbrackets = [{ pair = [1, 2], value = [0, 0, 1] }, { pair = [1, 3], value = [1, 0, 0] }]\n";
        assert_eq!(run_source(Command::Validate, bad, &opts).exit_code, EXIT_VALIDATION);
        assert_eq!(run_source(Command::Analyze, bad, &opts).exit_code, EXIT_VALIDATION);
        assert_eq!(run(Command::Hull, &fixture("sl2").unwrap(), &opts).exit_code, EXIT_PRECONDITION);
        assert_eq!(run(Command::Lefschetz, &fixture("abelian:n=4").unwrap(), &opts).exit_code, EXIT_PRECONDITION);
        let search = RunOptions { search_omega: true, ..RunOptions::default() };
        assert_eq!(run(Command::Lefschetz, &fixture("heisenberg").unwrap(), &search).exit_code, EXIT_PRECONDITION);
        let out = run(Command::Lefschetz, &fixture("abelian:n=4").unwrap(), &search);
        assert_eq!(out.exit_code, EXIT_OK);
        assert!(out.text.contains("omega source: search"));
        let out = run(Command::Lefschetz, &fixture("heisenberg_line_involution").unwrap(), &opts);
        assert_eq!(out.exit_code, EXIT_OK, "{}", out.text);
        assert!(out.text.contains("hard Lefschetz: holds"));
    }

    #[test]
    fn omega_option_overrides() {
        let opts = RunOptions { omega: Some("e1^e3 + e2^e4".into()), ..RunOptions::default() };
        let out = run(Command::Lefschetz, &fixture("abelian:n=4").unwrap(), &opts);
        assert_eq!(out.exit_code, EXIT_OK);
        let opts = RunOptions { omega: Some("e1^^".into()), ..RunOptions::default() };
        assert_eq!(run(Command::Lefschetz, &fixture("abelian:n=4").unwrap(), &opts).exit_code, EXIT_PARSE);
    }
}
