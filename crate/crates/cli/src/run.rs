use std::path::{Path, PathBuf};

use serde_json::{json, Value};
use trihom::bialgebra::{
    assemble_matched_pair, check_double_construction, check_matched_pair, equivalence_suite, manin_bracket,
    standard_form, Cobracket as Cob, MatchedPairData,
};
use trihom::homlie::{
    check_derivation, check_morphism, composition_twist, derivation_space, yau_twist,
};
use trihom::io::{self, expect_dim, Artifact};
use trihom::prelie::{
    check_o_operator, check_prelie, check_subadjacent_of, compatible_prelie, induced_prelie_on_module, subadjacent,
    OOperator as OOp,
};
use trihom::reps::{check_representation, check_semidirect, semidirect_sum};
use trihom::symplectic::{
    canonical_phase_form, check_metric, check_phase_space, check_symplectic, compatible_prelie_from_symplectic,
    derivation_from_symplectic, nilpotent_extension, phase_space_from_prelie, symplectic_from_derivation,
};
use trihom::yangbaxter::{check_chybe, coboundary_cobracket, verify_residual, RTensor};
use trihom::{check_algebra, Algebra3, AlgebraChecks, BilForm, CheckReport, Error, Mat, PreLie3, Rep3, Report};

use crate::{Cli, Format, Target, Verb};

type Res<T> = Result<T, Error>;

/// Artifact text to write, keyed by file name.
type Outputs = Vec<(String, String)>;

/// Input kinds expected per verb and target, shown on arity errors.
pub fn usage(verb: Verb, target: Target) -> Option<&'static str> {
    use Target::*;
    Some(match (verb, target) {
        (Verb::Check | Verb::Report, Algebra) => "ALGEBRA",
        (Verb::Check | Verb::Report, Rep) => "REP",
        (Verb::Check | Verb::Report, Prelie) => "PRELIE",
        (Verb::Check | Verb::Report, MatchedPair) => "MATCHED_PAIR",
        (Verb::Check | Verb::Report, Manin | Double | Equivalence | Cobracket) => "COBRACKET",
        (Verb::Check | Verb::Report, OOperator) => "O_OPERATOR",
        (Verb::Check | Verb::Report, Chybe | Residual) => "R_TENSOR",
        (Verb::Check | Verb::Report, Symplectic | Metric) => "ALGEBRA FORM",
        (Verb::Check | Verb::Report, Derivations) => "ALGEBRA MATRIX [FORM]",
        (Verb::Check | Verb::Report, PhaseSpace) => "BASE_ALGEBRA TOTAL_ALGEBRA",
        (Verb::Check | Verb::Report, Twist) => "ALGEBRA MATRIX",
        (Verb::Check | Verb::Report, Semidirect) => "REP",
        (Verb::Check | Verb::Report, Subadjacent) => "PRELIE",
        (Verb::Build, Semidirect) => "REP",
        (Verb::Build, Twist) => "ALGEBRA MATRIX",
        (Verb::Build, Subadjacent) => "PRELIE",
        (Verb::Build, Prelie) => "O_OPERATOR",
        (Verb::Build, CompatiblePrelie) => "O_OPERATOR | ALGEBRA FORM",
        (Verb::Build, Manin | Double) => "COBRACKET",
        (Verb::Build, MatchedPair) => "MATCHED_PAIR",
        (Verb::Build, PhaseSpace) => "PRELIE",
        (Verb::Build, Nilpotent) => "ALGEBRA",
        (Verb::Build, Cobracket) => "R_TENSOR",
        (Verb::Derive, Derivations) => "ALGEBRA [FORM] | ALGEBRA METRIC SYMPLECTIC_FORM",
        (Verb::Derive, Symplectic) => "ALGEBRA METRIC DERIVATION",
        _ => return None,
    })
}

fn arity(spec: &str) -> Vec<(usize, usize)> {
    spec.split(" | ")
        .map(|alt| {
            let words: Vec<&str> = alt.split_whitespace().collect();
            let optional = words.iter().filter(|w| w.starts_with('[')).count();
            (words.len() - optional, words.len())
        })
        .collect()
}

fn name(v: Verb, t: Target) -> String {
    use clap::ValueEnum;
    let p = |x: Option<clap::builder::PossibleValue>| x.map(|p| p.get_name().to_string()).unwrap_or_default();
    format!("{} {}", p(v.to_possible_value()), p(t.to_possible_value()))
}

/// Runs one command and returns the text for stdout with the exit status.
pub fn execute(cli: &Cli) -> (String, u8) {
    let command = name(cli.verb, cli.target);
    let inputs: Vec<String> = cli.inputs.iter().map(|p| p.display().to_string()).collect();
    match dispatch(cli) {
        Ok((report, outputs)) => {
            let mut written = Vec::new();
            let mut extra = outputs;
            if cli.verb == Verb::Report {
                let t = name(cli.verb, cli.target).replace(' ', "-");
                let envelope = envelope(&command, &inputs, &report, &[]);
                extra.push((format!("{t}.json"), canonical(&envelope)));
                extra.push((format!("{t}.txt"), report.to_string()));
            }
            if !extra.is_empty() {
                let dir = match &cli.output {
                    Some(d) => d.clone(),
                    None => return error_out(cli.format, &command, &inputs, &Error::precondition(format!("`{command}` writes files; pass -o DIR"))),
                };
                if let Err(e) = write_all(&dir, &extra) {
                    return error_out(cli.format, &command, &inputs, &e);
                }
                written = extra.iter().map(|(n, _)| n.clone()).collect();
            }
            let code = if report.passed { 0 } else { 1 };
            let text = match cli.format {
                Format::Structured => canonical(&envelope(&command, &inputs, &report, &written)),
                Format::Text => {
                    let mut s = report.to_string();
                    for w in &written {
                        s.push_str(&format!("wrote {w}\n"));
                    }
                    s
                }
            };
            (text, code)
        }
        Err(e) => error_out(cli.format, &command, &inputs, &e),
    }
}

fn write_all(dir: &Path, files: &Outputs) -> Res<()> {
    std::fs::create_dir_all(dir)?;
    for (n, text) in files {
        io::write_atomic(&dir.join(n), text)?;
    }
    Ok(())
}

fn canonical(v: &Value) -> String {
    let mut s = String::new();
    io::render(v, 0, &mut s);
    s.push('\n');
    s
}

fn envelope(command: &str, inputs: &[String], report: &Report, written: &[String]) -> Value {
    let mut v = json!({
        "command": command,
        "inputs": inputs,
        "status": if report.passed { "pass" } else { "fail" },
        "report": serde_json::to_value(report).expect("report serializes"),
    });
    if !written.is_empty() {
        v["artifacts"] = json!(written);
    }
    v
}

/// The message always goes to stderr; structured mode also emits it as JSON
/// on stdout.
fn error_out(format: Format, command: &str, inputs: &[String], e: &Error) -> (String, u8) {
    eprintln!("error: {e}");
    let text = match format {
        Format::Text => String::new(),
        Format::Structured => {
            let mut v = json!({ "command": command, "inputs": inputs, "status": "error", "message": e.to_string() });
            if let Error::Parse { file, line, field, .. } = e {
                v["location"] = json!({ "file": file, "line": line, "field": field });
            }
            canonical(&v)
        }
    };
    (text, 2)
}

struct Inputs<'a>(&'a [PathBuf]);

impl Inputs<'_> {
    fn get<T: Artifact>(&self, i: usize) -> Res<T> {
        io::load(&self.0[i])
    }

    fn opt<T: Artifact>(&self, i: usize) -> Res<Option<T>> {
        if i < self.0.len() {
            self.get(i).map(Some)
        } else {
            Ok(None)
        }
    }
}

fn single(title: &str, c: CheckReport) -> Report {
    let mut r = Report::new(title);
    r.push(c);
    r
}

fn art<T: Artifact>(name: &str, a: &T) -> (String, String) {
    (name.to_string(), io::to_text(a))
}

fn same_dim(what: &str, a: &Algebra3, found: usize) -> Res<()> {
    expect_dim(what, found, a.dim())
}

fn dispatch(cli: &Cli) -> Res<(Report, Outputs)> {
    use Target::*;
    let spec = usage(cli.verb, cli.target).ok_or_else(|| {
        Error::precondition(format!("`{}` is not a supported combination", name(cli.verb, cli.target)))
    })?;
    let n = cli.inputs.len();
    if !arity(spec).iter().any(|&(lo, hi)| (lo..=hi).contains(&n)) {
        return Err(Error::precondition(format!("`{}` expects {spec}, got {n} input(s)", name(cli.verb, cli.target))));
    }
    let inp = Inputs(&cli.inputs);
    let none = Outputs::new();
    match cli.verb {
        Verb::Check | Verb::Report => Ok((check(cli.target, &inp)?, none)),
        Verb::Build => match cli.target {
            Semidirect => {
                let r: Rep3 = inp.get(0)?;
                let s = semidirect_sum(&r)?;
                Ok((check_algebra(&s, AlgebraChecks::MULTIPLICATIVE), vec![art("semidirect.json", &s)]))
            }
            Twist => {
                let a: Algebra3 = inp.get(0)?;
                let m: Mat = inp.get(1)?;
                same_dim("map", &a, m.rows())?;
                let t = if cli.composition { composition_twist(&a, &m)? } else { yau_twist(&a, &m)? };
                Ok((check_algebra(&t, AlgebraChecks::MULTIPLICATIVE), vec![art("twisted.json", &t)]))
            }
            Subadjacent => {
                let p: PreLie3 = inp.get(0)?;
                let s = subadjacent(&p)?;
                Ok((check_algebra(&s, AlgebraChecks::MULTIPLICATIVE), vec![art("subadjacent.json", &s)]))
            }
            Prelie => {
                let o: OOp = inp.get(0)?;
                let p = induced_prelie_on_module(&o)?;
                Ok((check_prelie(&p), vec![art("induced.json", &p)]))
            }
            CompatiblePrelie => {
                let p = if n == 1 {
                    compatible_prelie(&inp.get::<OOp>(0)?)?
                } else {
                    let a: Algebra3 = inp.get(0)?;
                    let w: BilForm = inp.get(1)?;
                    same_dim("form", &a, w.dim())?;
                    compatible_prelie_from_symplectic(&a, &w)?
                };
                Ok((check_prelie(&p), vec![art("compatible.json", &p)]))
            }
            Manin | Double => {
                let c: Cob = inp.get(0)?;
                let (d, report) = manin_bracket(&c)?;
                let b = standard_form(c.base().dim());
                Ok((report, vec![art("double.json", &d), art("pairing.json", &b)]))
            }
            MatchedPair => {
                let m: MatchedPairData = inp.get(0)?;
                let report = check_matched_pair(&m)?;
                let s = assemble_matched_pair(&m)?;
                Ok((report, vec![art("matched.json", &s)]))
            }
            PhaseSpace => {
                let p: PreLie3 = inp.get(0)?;
                let (total, mut report) = phase_space_from_prelie(&p)?;
                let w = canonical_phase_form(p.dim());
                report.absorb("canonical_form", check_symplectic(&total, &w)?);
                Ok((report, vec![art("phase_space.json", &total), art("omega.json", &w)]))
            }
            Nilpotent => {
                let a: Algebra3 = inp.get(0)?;
                let b = nilpotent_extension(&a, cli.steps)?;
                let mut report = Report::new(format!("nilpotent extension, {} steps", cli.steps));
                report.absorb("ln", check_algebra(&b.ln, AlgebraChecks::ALL));
                report.absorb("d", check_derivation(&b.ln, &b.d, None)?);
                report.absorb("double", check_algebra(&b.double, AlgebraChecks::ALL));
                report.absorb("metric", check_metric(&b.double, &b.b)?);
                report.absorb("dhat", check_derivation(&b.double, &b.dhat, Some(&b.b))?);
                report.absorb("omega", check_symplectic(&b.double, &b.w)?);
                let back = derivation_from_symplectic(&b.double, &b.b, &b.w)?;
                report.push(CheckReport::fact("round_trip", back == b.dhat));
                let outs = vec![
                    art("ln.json", &b.ln),
                    art("d.json", &b.d),
                    art("double.json", &b.double),
                    art("metric.json", &b.b),
                    art("dhat.json", &b.dhat),
                    art("omega.json", &b.w),
                ];
                Ok((report, outs))
            }
            Cobracket => {
                let r: RTensor = inp.get(0)?;
                let c = coboundary_cobracket(&r)?;
                let mut report = Report::new("coboundary");
                report.absorb("dual", check_algebra(&c.dual_algebra(), AlgebraChecks::AXIOMS));
                Ok((report, vec![art("cobracket.json", &c)]))
            }
            _ => unreachable!("filtered by usage"),
        },
        Verb::Derive => match cli.target {
            Derivations if n == 3 => {
                let a: Algebra3 = inp.get(0)?;
                let b: BilForm = inp.get(1)?;
                let w: BilForm = inp.get(2)?;
                same_dim("metric", &a, b.dim())?;
                same_dim("symplectic form", &a, w.dim())?;
                let d = derivation_from_symplectic(&a, &b, &w)?;
                Ok((check_derivation(&a, &d, Some(&b))?, vec![art("derivation.json", &d)]))
            }
            Derivations => {
                let a: Algebra3 = inp.get(0)?;
                let form: Option<BilForm> = inp.opt(1)?;
                if let Some(f) = &form {
                    same_dim("form", &a, f.dim())?;
                }
                let basis = derivation_space(&a, form.as_ref())?;
                let mut report = Report::new(format!("derivation space of dimension {}", basis.len()));
                let mut outs = Vec::new();
                for (i, d) in basis.iter().enumerate() {
                    report.absorb(&format!("d{}", i + 1), check_derivation(&a, d, form.as_ref())?);
                    outs.push(art(&format!("derivation_{}.json", i + 1), d));
                }
                Ok((report, outs))
            }
            Symplectic => {
                let a: Algebra3 = inp.get(0)?;
                let b: BilForm = inp.get(1)?;
                let d: Mat = inp.get(2)?;
                same_dim("metric", &a, b.dim())?;
                same_dim("derivation", &a, d.rows())?;
                let w = symplectic_from_derivation(&a, &b, &d)?;
                Ok((check_symplectic(&a, &w)?, vec![art("omega.json", &w)]))
            }
            _ => unreachable!("filtered by usage"),
        },
    }
}

fn check(target: Target, inp: &Inputs) -> Res<Report> {
    use Target::*;
    Ok(match target {
        Algebra => check_algebra(&inp.get(0)?, AlgebraChecks::ALL),
        Rep => check_representation(&inp.get(0)?),
        Prelie => check_prelie(&inp.get(0)?),
        MatchedPair => check_matched_pair(&inp.get(0)?)?,
        Manin => manin_bracket(&inp.get(0)?)?.1,
        Double => check_double_construction(&inp.get(0)?)?,
        Equivalence => {
            let e = equivalence_suite(&inp.get(0)?)?;
            let mut r = Report::new("equivalence");
            for (n, sub) in [("double_construction", &e.double_construction), ("manin", &e.manin), ("matched_pair", &e.matched_pair)] {
                r.push(CheckReport::fact(n, sub.passed));
                if let Some(c) = sub.first_failure() {
                    r.note(format!("{n}: first failing clause `{}`", c.name));
                }
            }
            r.push(CheckReport::fact("verdicts_agree", e.agree()));
            r
        }
        OOperator => check_o_operator(&inp.get(0)?)?,
        Chybe => check_chybe(&inp.get(0)?),
        Residual => single("residual identity", verify_residual(&inp.get(0)?)?),
        Symplectic | Metric => {
            let a: Algebra3 = inp.get(0)?;
            let w: BilForm = inp.get(1)?;
            same_dim("form", &a, w.dim())?;
            if target == Symplectic {
                check_symplectic(&a, &w)?
            } else {
                check_metric(&a, &w)?
            }
        }
        Derivations => {
            let a: Algebra3 = inp.get(0)?;
            let d: Mat = inp.get(1)?;
            let form: Option<BilForm> = inp.opt(2)?;
            same_dim("derivation", &a, d.rows())?;
            check_derivation(&a, &d, form.as_ref())?
        }
        PhaseSpace => {
            let base: Algebra3 = inp.get(0)?;
            let total: Algebra3 = inp.get(1)?;
            expect_dim("total algebra", total.dim(), 2 * base.dim())?;
            check_phase_space(&base, &total)?
        }
        Twist => {
            let a: Algebra3 = inp.get(0)?;
            let m: Mat = inp.get(1)?;
            same_dim("map", &a, m.rows())?;
            let mut r = Report::new("twist map");
            r.push(CheckReport::fact("square", m.is_square()));
            if m.is_square() {
                r.push(check_morphism(&a, &m, "morphism"));
                r.push_info(CheckReport::fact("commutes_with_twist", &m * a.twist() == a.twist() * &m));
            }
            r
        }
        Semidirect => check_semidirect(&inp.get(0)?)?,
        Subadjacent => check_subadjacent_of(&inp.get(0)?),
        Cobracket => {
            let c: Cob = inp.get(0)?;
            let mut r = Report::new("cobracket");
            r.absorb("dual", check_algebra(&c.dual_algebra(), AlgebraChecks::AXIOMS));
            r
        }
        Nilpotent | CompatiblePrelie => unreachable!("filtered by usage"),
    })
}
