//! Structured reports for every built-in fixture, compared byte for byte
//! against `tests/golden/`. Set `SOLVHULL_BLESS=1` to rewrite them.

use std::path::PathBuf;

use solvhull::io::{fixture, parse_document, render_document, run, run_source, Command, Format, RunOptions, FIXTURE_NAMES};

fn structured() -> RunOptions {
    RunOptions { format: Format::Structured, ..RunOptions::default() }
}

fn golden_path(name: &str, command: Command) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(format!("{name}.{}.json", command.name()))
}

fn check_golden(name: &str, command: Command, actual: &str) {
    let path = golden_path(name, command);
    if std::env::var_os("SOLVHULL_BLESS").is_some() {
        std::fs::create_dir_all(path.parent().unwrap()).unwrap();
        std::fs::write(&path, actual).unwrap();
        return;
    }
    let expected = std::fs::read_to_string(&path)
        .unwrap_or_else(|e| panic!("{}: {e}; rerun with SOLVHULL_BLESS=1 to create it", path.display()));
    assert!(expected == actual, "{} differs from the current output:\n{actual}", path.display());
}

#[test]
fn analyze_reports_match_golden() {
    for name in FIXTURE_NAMES {
        let doc = fixture(name).unwrap();
        let out = run(Command::Analyze, &doc, &structured());
        assert_eq!(out.exit_code, 0, "{name}: {}", out.text);
        check_golden(name, Command::Analyze, &out.text);
    }
}

#[test]
fn lefschetz_reports_match_golden() {
    for name in ["kodaira_thurston", "hyperbolic_elliptic", "complex_sol", "heisenberg_line_involution"] {
        let out = run(Command::Lefschetz, &fixture(name).unwrap(), &structured());
        check_golden(name, Command::Lefschetz, &out.text);
    }
}

#[test]
fn reports_are_deterministic_and_survive_a_round_trip() {
    for name in FIXTURE_NAMES {
        let doc = fixture(name).unwrap();
        let text = render_document(&doc);
        assert_eq!(render_document(&parse_document(&text).unwrap()), text, "{name}");
        for command in [Command::Analyze, Command::Hull, Command::Cohomology] {
            let direct = run(command, &doc, &structured());
            assert_eq!(direct, run(command, &doc, &structured()), "{name} {}", command.name());
            assert_eq!(direct, run_source(command, &text, &structured()), "{name} {}", command.name());
        }
    }
}
