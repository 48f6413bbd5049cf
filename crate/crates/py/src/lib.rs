//! Python bindings. Artifacts move in and out as canonical JSON text or as
//! nested lists of rational strings such as `"-3/2"`.

use std::path::Path;

use pyo3::exceptions::{PyIOError, PyValueError};
use pyo3::prelude::*;

use trihom::bialgebra::{equivalence_suite, Cobracket as CoreCobracket};
use trihom::exactlin::{fmt_rat, parse_rat, Mat, Rat};
use trihom::homlie::{composition_twist, derivation_space, yau_twist};
use trihom::io::{self, Artifact};
use trihom::prelie::{check_prelie, subadjacent};
use trihom::reps::{check_representation, semidirect_sum};
use trihom::symplectic::{check_metric, check_symplectic, nilpotent_extension, phase_space_from_prelie};
use trihom::yangbaxter::{check_chybe, coboundary_cobracket, verify_residual, RTensor as CoreR};
use trihom::{check_algebra, AlgebraChecks, Error};

fn py_err(e: Error) -> PyErr {
    match e {
        Error::Io(e) => PyIOError::new_err(e.to_string()),
        other => PyValueError::new_err(other.to_string()),
    }
}

fn to_mat(rows: Vec<Vec<String>>) -> PyResult<Mat> {
    let parsed: Option<Vec<Vec<Rat>>> =
        rows.iter().map(|r| r.iter().map(|s| parse_rat(s)).collect()).collect();
    let parsed = parsed.ok_or_else(|| PyValueError::new_err("entries must be rationals like \"3\" or \"-1/2\""))?;
    Mat::from_rows(parsed).map_err(py_err)
}

fn from_mat(m: &Mat) -> Vec<Vec<String>> {
    (0..m.rows()).map(|i| m.row(i).iter().map(fmt_rat).collect()).collect()
}

fn parse_text<T: Artifact>(text: &str) -> PyResult<T> {
    io::parse(text, Path::new("<python>")).map_err(py_err)
}

/// Verdict of a checker: overall status plus one entry per clause.
#[pyclass(frozen)]
pub struct Report {
    inner: trihom::Report,
}

#[pymethods]
impl Report {
    #[getter]
    fn passed(&self) -> bool {
        self.inner.passed
    }

    #[getter]
    fn title(&self) -> String {
        self.inner.title.clone()
    }

    /// `(name, passed, witness tuple 1-based or None)` per clause.
    #[getter]
    fn clauses(&self) -> Vec<(String, bool, Option<Vec<usize>>)> {
        self.inner
            .clauses
            .iter()
            .map(|c| (c.name.clone(), c.passed, c.witness.as_ref().map(|w| w.tuple.iter().map(|i| i + 1).collect())))
            .collect()
    }

    #[getter]
    fn notes(&self) -> Vec<String> {
        self.inner.notes.clone()
    }

    fn to_json(&self) -> String {
        let v = serde_json::to_value(&self.inner).expect("report serializes");
        let mut s = String::new();
        io::render(&v, 0, &mut s);
        s
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __bool__(&self) -> bool {
        self.inner.passed
    }
}

fn report(r: trihom::Report) -> Report {
    Report { inner: r }
}

macro_rules! artifact_class {
    ($py:ident, $core:ty; $($body:tt)*) => {
        #[pymethods]
        impl $py {
            #[staticmethod]
            fn from_json(text: &str) -> PyResult<Self> {
                Ok($py { inner: parse_text::<$core>(text)? })
            }

            #[staticmethod]
            fn load(path: &str) -> PyResult<Self> {
                Ok($py { inner: io::load::<$core>(Path::new(path)).map_err(py_err)? })
            }

            fn to_json(&self) -> String {
                io::to_text(&self.inner)
            }

            fn save(&self, path: &str) -> PyResult<()> {
                io::save(&self.inner, Path::new(path)).map_err(py_err)
            }

            fn __eq__(&self, other: &Self) -> bool {
                self.inner == other.inner
            }

            $($body)*
        }
    };
}

#[pyclass(frozen)]
pub struct Algebra {
    inner: trihom::Algebra3,
}

artifact_class! { Algebra, trihom::Algebra3;
    #[staticmethod]
    fn n4() -> Self {
        Algebra { inner: trihom::fixtures::n4() }
    }

    #[staticmethod]
    fn a4() -> Self {
        Algebra { inner: trihom::fixtures::a4() }
    }

    #[staticmethod]
    fn abelian(n: usize) -> Self {
        Algebra { inner: trihom::Algebra3::abelian(n) }
    }

    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    #[getter]
    fn label(&self) -> String {
        self.inner.label().to_string()
    }

    #[getter]
    fn twist(&self) -> Vec<Vec<String>> {
        from_mat(self.inner.twist())
    }

    /// `[e_i, e_j, e_k]` with 1-based indices.
    fn bracket(&self, i: usize, j: usize, k: usize) -> PyResult<Vec<String>> {
        let n = self.inner.dim();
        if ![i, j, k].iter().all(|&x| (1..=n).contains(&x)) {
            return Err(PyValueError::new_err(format!("indices must lie in 1..={n}")));
        }
        Ok(self.inner.bracket_basis(i - 1, j - 1, k - 1).iter().map(fmt_rat).collect())
    }

    fn check(&self) -> Report {
        report(check_algebra(&self.inner, AlgebraChecks::ALL))
    }

    fn yau_twist(&self, morphism: Vec<Vec<String>>) -> PyResult<Algebra> {
        Ok(Algebra { inner: yau_twist(&self.inner, &to_mat(morphism)?).map_err(py_err)? })
    }

    fn composition_twist(&self, morphism: Vec<Vec<String>>) -> PyResult<Algebra> {
        Ok(Algebra { inner: composition_twist(&self.inner, &to_mat(morphism)?).map_err(py_err)? })
    }

    fn change_basis(&self, p: Vec<Vec<String>>) -> PyResult<Algebra> {
        Ok(Algebra { inner: self.inner.change_basis(&to_mat(p)?).map_err(py_err)? })
    }

    fn direct_sum(&self, other: &Algebra) -> Algebra {
        Algebra { inner: self.inner.direct_sum(&other.inner) }
    }

    #[pyo3(signature = (form=None))]
    fn derivations(&self, form: Option<&Form>) -> PyResult<Vec<Vec<Vec<String>>>> {
        let space = derivation_space(&self.inner, form.map(|f| &f.inner)).map_err(py_err)?;
        Ok(space.iter().map(from_mat).collect())
    }

    fn check_symplectic(&self, form: &Form) -> PyResult<Report> {
        Ok(report(check_symplectic(&self.inner, &form.inner).map_err(py_err)?))
    }

    fn check_metric(&self, form: &Form) -> PyResult<Report> {
        Ok(report(check_metric(&self.inner, &form.inner).map_err(py_err)?))
    }

    /// The bundle of the truncated nilpotent extension as a dict of JSON
    /// texts keyed by `ln`, `d`, `double`, `metric`, `dhat`, `omega`.
    fn nilpotent_extension(&self, steps: usize) -> PyResult<Vec<(String, String)>> {
        let b = nilpotent_extension(&self.inner, steps).map_err(py_err)?;
        Ok(vec![
            ("ln".into(), io::to_text(&b.ln)),
            ("d".into(), io::to_text(&b.d)),
            ("double".into(), io::to_text(&b.double)),
            ("metric".into(), io::to_text(&b.b)),
            ("dhat".into(), io::to_text(&b.dhat)),
            ("omega".into(), io::to_text(&b.w)),
        ])
    }

    fn __repr__(&self) -> String {
        format!("Algebra(label={:?}, dim={})", self.inner.label(), self.inner.dim())
    }
}

#[pyclass(frozen)]
pub struct Rep {
    inner: trihom::Rep3,
}

artifact_class! { Rep, trihom::Rep3;
    #[staticmethod]
    fn adjoint(a: &Algebra) -> PyResult<Rep> {
        Ok(Rep { inner: trihom::reps::adjoint_rep(&a.inner).map_err(py_err)? })
    }

    #[getter]
    fn vdim(&self) -> usize {
        self.inner.vdim()
    }

    fn check(&self) -> Report {
        report(check_representation(&self.inner))
    }

    fn semidirect_sum(&self) -> PyResult<Algebra> {
        Ok(Algebra { inner: semidirect_sum(&self.inner).map_err(py_err)? })
    }
}

#[pyclass(frozen)]
pub struct PreLie {
    inner: trihom::PreLie3,
}

artifact_class! { PreLie, trihom::PreLie3;
    #[staticmethod]
    fn n4() -> Self {
        PreLie { inner: trihom::fixtures::n4_prelie() }
    }

    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    fn check(&self) -> Report {
        report(check_prelie(&self.inner))
    }

    fn subadjacent(&self) -> PyResult<Algebra> {
        Ok(Algebra { inner: subadjacent(&self.inner).map_err(py_err)? })
    }

    /// The phase space and the report of its checks.
    fn phase_space(&self) -> PyResult<(Algebra, Report)> {
        let (a, r) = phase_space_from_prelie(&self.inner).map_err(py_err)?;
        Ok((Algebra { inner: a }, report(r)))
    }
}

#[pyclass(frozen)]
pub struct Form {
    inner: trihom::BilForm,
}

artifact_class! { Form, trihom::BilForm;
    #[staticmethod]
    fn skew(matrix: Vec<Vec<String>>) -> PyResult<Form> {
        Ok(Form { inner: trihom::BilForm::skew(to_mat(matrix)?).map_err(py_err)? })
    }

    #[staticmethod]
    fn symmetric(matrix: Vec<Vec<String>>) -> PyResult<Form> {
        Ok(Form { inner: trihom::BilForm::symmetric(to_mat(matrix)?).map_err(py_err)? })
    }

    #[getter]
    fn matrix(&self) -> Vec<Vec<String>> {
        from_mat(self.inner.matrix())
    }
}

#[pyclass(frozen)]
pub struct RTensor {
    inner: CoreR,
}

artifact_class! { RTensor, CoreR;
    #[new]
    fn new(base: &Algebra, entries: Vec<Vec<String>>) -> PyResult<Self> {
        Ok(RTensor { inner: CoreR::new(base.inner.clone(), to_mat(entries)?).map_err(py_err)? })
    }

    fn check_chybe(&self) -> Report {
        report(check_chybe(&self.inner))
    }

    fn residual_holds(&self) -> PyResult<bool> {
        Ok(verify_residual(&self.inner).map_err(py_err)?.passed)
    }

    fn coboundary(&self) -> PyResult<Cobracket> {
        Ok(Cobracket { inner: coboundary_cobracket(&self.inner).map_err(py_err)? })
    }
}

#[pyclass(frozen)]
pub struct Cobracket {
    inner: CoreCobracket,
}

artifact_class! { Cobracket, CoreCobracket;
    #[staticmethod]
    fn zero(base: &Algebra) -> Self {
        Cobracket { inner: CoreCobracket::zero(base.inner.clone()) }
    }

    /// Verdicts of the double-construction, Manin and matched-pair checks.
    fn equivalence(&self) -> PyResult<(bool, bool, bool)> {
        let [a, b, c] = equivalence_suite(&self.inner).map_err(py_err)?.verdicts();
        Ok((a, b, c))
    }
}

#[pymodule]
fn pytrihom(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Report>()?;
    m.add_class::<Algebra>()?;
    m.add_class::<Rep>()?;
    m.add_class::<PreLie>()?;
    m.add_class::<Form>()?;
    m.add_class::<RTensor>()?;
    m.add_class::<Cobracket>()?;
    m.add("MAX_DIM", trihom::MAX_DIM)?;
    Ok(())
}
