//! The fixture corpus and helpers for driving the binary.
#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use trihom::bialgebra::Cobracket;
use trihom::io::{load, to_text, Artifact};
use trihom::{Algebra3, BilForm, Mat, PreLie3};

pub fn crate_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

pub fn run(args: &[&str], out: Option<&Path>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_trihom"));
    cmd.current_dir(crate_dir()).args(args);
    if let Some(o) = out {
        cmd.arg("-o").arg(o);
    }
    cmd.output().expect("binary runs")
}

/// Name, arguments (relative to the crate), expected exit status, and
/// whether the command writes files.
pub struct Case {
    pub name: &'static str,
    pub args: &'static [&'static str],
    pub code: i32,
    pub writes: bool,
}

const fn case(name: &'static str, args: &'static [&'static str], code: i32, writes: bool) -> Case {
    Case { name, args, code, writes }
}

pub const CORPUS: &[Case] = &[
    case("check_algebra_n4", &["check", "algebra", "fixtures/n4.alg.json"], 0, false),
    case("check_algebra_scaled_twist", &["check", "algebra", "fixtures/n4_scaled_twist.alg.json"], 0, false),
    case("check_algebra_a4", &["check", "algebra", "fixtures/a4.alg.json"], 0, false),
    case("check_algebra_corrupted", &["check", "algebra", "fixtures/corrupted.alg.json"], 1, false),
    case("check_rep_adjoint", &["check", "rep", "fixtures/n4_adjoint.rep.json"], 0, false),
    case("check_rep_coadjoint", &["check", "rep", "fixtures/n4_coadjoint.rep.json"], 0, false),
    case("check_semidirect_coadjoint", &["check", "semidirect", "fixtures/n4_coadjoint.rep.json"], 0, false),
    case("check_prelie_n4", &["check", "prelie", "fixtures/n4.plg.json"], 0, false),
    case("check_subadjacent_n4", &["check", "subadjacent", "fixtures/n4.plg.json"], 0, false),
    case("check_o_operator_left", &["check", "o-operator", "fixtures/n4_left.oop.json"], 0, false),
    case("check_o_operator_adjoint", &["check", "o-operator", "fixtures/n4_adjoint_identity.oop.json"], 1, false),
    case("check_matched_pair_bad", &["check", "matched-pair", "fixtures/n4_bad.mp.json"], 1, false),
    case("check_cobracket_zero", &["check", "cobracket", "fixtures/n4_zero.cob.json"], 0, false),
    case("check_manin_zero", &["check", "manin", "fixtures/n4_zero.cob.json"], 0, false),
    case("check_double_zero", &["check", "double", "fixtures/n4_zero.cob.json"], 0, false),
    case("check_equivalence_zero", &["check", "equivalence", "fixtures/n4_zero.cob.json"], 0, false),
    case("check_equivalence_dual_n4", &["check", "equivalence", "fixtures/n4_dual_n4.cob.json"], 1, false),
    case("check_equivalence_invalid_dual", &["check", "equivalence", "fixtures/n4f_coboundary.cob.json"], 2, false),
    case("check_cobracket_invalid_dual", &["check", "cobracket", "fixtures/n4f_coboundary.cob.json"], 1, false),
    case("check_chybe_solution", &["check", "chybe", "fixtures/n4_solution.r.json"], 0, false),
    case("check_chybe_non_solution", &["check", "chybe", "fixtures/n4f_non_solution.r.json"], 1, false),
    case("check_residual_non_solution", &["check", "residual", "fixtures/n4f_non_solution.r.json"], 0, false),
    case("check_symplectic_n4", &["check", "symplectic", "fixtures/n4.alg.json", "fixtures/n4_omega.form.json"], 0, false),
    case("check_metric_identity", &["check", "metric", "fixtures/n4.alg.json", "fixtures/identity4.form.json"], 1, false),
    case("check_twist_scale", &["check", "twist", "fixtures/n4.alg.json", "fixtures/scale2.mat.json"], 0, false),
    case("build_twist_scale", &["build", "twist", "fixtures/n4.alg.json", "fixtures/scale2.mat.json"], 0, true),
    case("build_semidirect_coadjoint", &["build", "semidirect", "fixtures/n4_coadjoint.rep.json"], 0, true),
    case("build_subadjacent_n4", &["build", "subadjacent", "fixtures/n4.plg.json"], 0, true),
    case("build_prelie_left", &["build", "prelie", "fixtures/n4_left.oop.json"], 0, true),
    case("build_compatible_from_o_operator", &["build", "compatible-prelie", "fixtures/n4_left.oop.json"], 0, true),
    case(
        "build_compatible_from_form",
        &["build", "compatible-prelie", "fixtures/n4.alg.json", "fixtures/n4_omega.form.json"],
        0,
        true,
    ),
    case("build_manin_zero", &["build", "manin", "fixtures/n4_zero.cob.json"], 0, true),
    case("build_matched_pair_bad", &["build", "matched-pair", "fixtures/n4_bad.mp.json"], 2, true),
    case("build_cobracket_solution", &["build", "cobracket", "fixtures/n4_solution.r.json"], 0, true),
    case("build_phase_space_n4", &["build", "phase-space", "fixtures/n4.plg.json"], 0, true),
    case("build_nilpotent_n4", &["build", "nilpotent", "fixtures/n4.alg.json", "--steps", "3"], 0, true),
    case("derive_derivations_n4", &["derive", "derivations", "fixtures/n4.alg.json"], 0, true),
    case("derive_derivations_n4_omega", &["derive", "derivations", "fixtures/n4.alg.json", "fixtures/n4_omega.form.json"], 0, true),
    case("report_algebra_corrupted", &["report", "algebra", "fixtures/corrupted.alg.json"], 1, true),
];

/// Structured stdout of a corpus case; files go to `out`.
pub fn structured(c: &Case, out: &Path) -> Output {
    let mut args: Vec<&str> = c.args.to_vec();
    args.extend(["--format", "structured"]);
    run(&args, if c.writes { Some(out) } else { None })
}

fn same<T: Artifact>(path: &Path) -> Result<(), String> {
    let text = std::fs::read_to_string(path).map_err(|e| e.to_string())?;
    let a: T = load(path).map_err(|e| e.to_string())?;
    if to_text(&a) == text {
        Ok(())
    } else {
        Err(format!("{} does not re-serialize identically", path.display()))
    }
}

/// Parses an emitted artifact as the kind its name implies and checks that
/// serializing it again reproduces the file byte for byte.
pub fn round_trip(path: &Path) -> Result<(), String> {
    let name = path.file_name().unwrap().to_string_lossy().to_string();
    let stem = name.trim_end_matches(".json");
    match stem {
        "semidirect" | "twisted" | "subadjacent" | "double" | "matched" | "phase_space" | "ln" => same::<Algebra3>(path),
        "induced" | "compatible" => same::<PreLie3>(path),
        "pairing" | "omega" | "metric" => same::<BilForm>(path),
        "cobracket" => same::<Cobracket>(path),
        "d" | "dhat" | "derivation" => same::<Mat>(path),
        s if s.starts_with("derivation_") => same::<Mat>(path),
        s if s.starts_with("report-") => Ok(()),
        _ => Err(format!("unknown artifact {name}")),
    }
}

pub fn golden_path(name: &str) -> PathBuf {
    crate_dir().join("tests/golden").join(format!("{name}.json"))
}

/// Runs the whole corpus twice, compares the runs with each other and with
/// the golden files, and round-trips every emitted artifact. Set
/// `UPDATE_GOLDEN=1` to rewrite the golden files.
pub fn corpus_determinism() -> Result<String, String> {
    let update = std::env::var_os("UPDATE_GOLDEN").is_some();
    let tmp = tempfile::tempdir().map_err(|e| e.to_string())?;
    let mut artifacts = 0;
    for c in CORPUS {
        let mut runs = Vec::new();
        for pass in 0..2 {
            let out = tmp.path().join(format!("{}-{pass}", c.name));
            let o = structured(c, &out);
            if o.status.code() != Some(c.code) {
                return Err(format!("{}: exit {:?}, expected {}: {}", c.name, o.status.code(), c.code, String::from_utf8_lossy(&o.stderr)));
            }
            let mut files = Vec::new();
            if c.writes && out.exists() {
                let mut names: Vec<_> = std::fs::read_dir(&out).map_err(|e| e.to_string())?.map(|e| e.unwrap().path()).collect();
                names.sort();
                for p in names {
                    files.push((p.file_name().unwrap().to_owned(), std::fs::read(&p).unwrap()));
                    if pass == 0 {
                        round_trip(&p).map_err(|e| format!("{}: {e}", c.name))?;
                        artifacts += 1;
                    }
                }
            }
            runs.push((o.stdout, files));
        }
        if runs[0] != runs[1] {
            return Err(format!("{}: two runs differ", c.name));
        }
        let golden = golden_path(c.name);
        if update {
            std::fs::write(&golden, &runs[0].0).map_err(|e| e.to_string())?;
        }
        let expected = std::fs::read(&golden).map_err(|e| format!("{}: {e}", golden.display()))?;
        if expected != runs[0].0 {
            return Err(format!("{}: output differs from {}", c.name, golden.display()));
        }
    }
    Ok(format!("{} commands byte-identical across runs and golden files; {artifacts} artifacts round-trip", CORPUS.len()))
}
