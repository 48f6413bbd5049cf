//! Bilinear forms, symplectic structures and phase spaces.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::bialgebra::{coadjoint, standard_form};
use crate::error::{Error, Result};
use crate::exactlin::{dot, mat_inverse, Mat, Rat, Tensor4};
use crate::homlie::{check_algebra, check_derivation, first_difference, require_algebra, Algebra3, AlgebraChecks};
use crate::prelie::{subadjacent, PreLie3};
use crate::report::{CheckReport, Report, Witness};
use crate::reps::{dual_representation, semidirect_sum, Rep3};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FormKind {
    Symmetric,
    Skew,
}

/// A bilinear form with Gram matrix `M[i][j] = B(e_i, e_j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BilForm {
    kind: FormKind,
    matrix: Mat,
}

impl BilForm {
    pub fn new(kind: FormKind, matrix: Mat) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::Shape(format!("form matrix is {}x{}", matrix.rows(), matrix.cols())));
        }
        let ok = match kind {
            FormKind::Symmetric => matrix.is_symmetric(),
            FormKind::Skew => matrix.is_skew(),
        };
        if !ok {
            return Err(Error::precondition(format!("form matrix is not {}", kind.name())));
        }
        Ok(BilForm { kind, matrix })
    }

    pub fn symmetric(matrix: Mat) -> Result<Self> {
        BilForm::new(FormKind::Symmetric, matrix)
    }

    pub fn skew(matrix: Mat) -> Result<Self> {
        BilForm::new(FormKind::Skew, matrix)
    }

    pub fn kind(&self) -> FormKind {
        self.kind
    }

    pub fn matrix(&self) -> &Mat {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn eval(&self, x: &[Rat], y: &[Rat]) -> Rat {
        dot(x, &self.matrix.mul_vec(y))
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.matrix.is_invertible()
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.entries().iter().all(Zero::is_zero)
    }
}

impl FormKind {
    pub fn name(self) -> &'static str {
        match self {
            FormKind::Symmetric => "symmetric",
            FormKind::Skew => "skew",
        }
    }
}

fn require_kind(form: &BilForm, kind: FormKind, n: usize, what: &str) -> Result<()> {
    if form.kind() != kind {
        return Err(Error::precondition(format!("{what} must be a {} form", kind.name())));
    }
    if form.dim() != n {
        return Err(Error::Shape(format!("{what} has dimension {}, expected {n}", form.dim())));
    }
    if !form.is_nondegenerate() {
        return Err(Error::precondition(format!("{what} is degenerate")));
    }
    Ok(())
}

/// `ω(αx, αy) = ω(x, y)` on basis pairs and
/// `ω([x,y,z],αw) − ω([y,z,w],αx) + ω([z,w,x],αy) − ω([w,x,y],αz) = 0` on all
/// basis 4-tuples. Rejects singular twists and degenerate or symmetric forms.
pub fn check_symplectic(a: &Algebra3, w: &BilForm) -> Result<Report> {
    let n = a.dim();
    require_kind(w, FormKind::Skew, n, "symplectic form")?;
    if !a.twist().is_invertible() {
        return Err(Error::precondition("twist is not invertible"));
    }
    let mut report = Report::new("symplectic");
    report.push(CheckReport::fact("nondegenerate", true));
    report.push(form_invariance(a.twist(), w.matrix(), "twist_invariant"));

    // t[x][y][z][v] = ω([x,y,z], α e_v)
    let wa = w.matrix() * a.twist();
    let term = |x: usize, y: usize, z: usize, v: usize| -> Rat {
        let mut s = Rat::zero();
        for (l, c) in a.structure(x, y, z) {
            s += c * &wa[(*l, v)];
        }
        s
    };
    let mut checked = 0;
    let mut witness = None;
    'outer: for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                for v in 0..n {
                    checked += 1;
                    let s = term(x, y, z, v) - term(y, z, v, x) + term(z, v, x, y) - term(v, x, y, z);
                    if !s.is_zero() {
                        witness = Some(Witness::scalar(&[x, y, z, v], s, Rat::zero()));
                        break 'outer;
                    }
                }
            }
        }
    }
    report.push(CheckReport::from_result("cocycle", checked, witness));
    Ok(report)
}

fn form_invariance(alpha: &Mat, m: &Mat, name: &str) -> CheckReport {
    let lhs = &(&alpha.transpose() * m) * alpha;
    let n = m.rows();
    match first_difference(&lhs, m) {
        None => CheckReport::pass(name, (n * n) as u64),
        Some((i, j)) => CheckReport::fail(name, Witness::scalar(&[i, j], lhs[(i, j)].clone(), m[(i, j)].clone()), (n * n) as u64),
    }
}

/// Nondegeneracy and `B([x,y,z], w) + B(z, [x,y,w]) = 0` on basis 4-tuples.
pub fn check_metric(a: &Algebra3, b: &BilForm) -> Result<Report> {
    let n = a.dim();
    require_kind(b, FormKind::Symmetric, n, "metric")?;
    let mut report = Report::new("metric");
    report.push(CheckReport::fact("nondegenerate", true));
    let pair = |x: usize, y: usize, z: usize, v: usize| -> Rat {
        let mut s = Rat::zero();
        for (l, c) in a.structure(x, y, z) {
            s += c * &b.matrix()[(*l, v)];
        }
        s
    };
    let mut checked = 0;
    let mut witness = None;
    'outer: for x in 0..n {
        for y in x + 1..n {
            for z in 0..n {
                for v in 0..n {
                    checked += 1;
                    let s = pair(x, y, z, v) + pair(x, y, v, z);
                    if !s.is_zero() {
                        witness = Some(Witness::scalar(&[x, y, z, v], s, Rat::zero()));
                        break 'outer;
                    }
                }
            }
        }
    }
    report.push(CheckReport::from_result("invariant", checked, witness));
    Ok(report)
}

fn require_report(r: Report, what: &str) -> Result<()> {
    match r.first_failure() {
        None => Ok(()),
        Some(c) => Err(Error::failed_check(format!("{what}: clause `{}` fails", c.name), c)),
    }
}

/// `ω(αx, y) = B(Dx, y)`, i.e. `W = (α^T)⁻¹ D^T B`, for an invertible
/// `D ∈ Der_B`.
pub fn symplectic_from_derivation(a: &Algebra3, b: &BilForm, d: &Mat) -> Result<BilForm> {
    require_report(check_metric(a, b)?, "metric")?;
    require_report(check_derivation(a, d, Some(b))?, "derivation")?;
    if !d.is_invertible() {
        return Err(Error::precondition("derivation is singular"));
    }
    let at_inv = mat_inverse(&a.twist().transpose()).map_err(|_| Error::precondition("twist is not invertible"))?;
    let w = &(&at_inv * &d.transpose()) * b.matrix();
    let w = BilForm::skew(w).map_err(|_| Error::precondition("induced form is not skew for this twist"))?;
    require_report(check_symplectic(a, &w)?, "induced form")?;
    Ok(w)
}

/// The unique `D` with `B(Dx, y) = ω(αx, y)`, i.e. `D = B⁻¹ W^T α`, checked
/// to be an invertible element of `Der_B`.
pub fn derivation_from_symplectic(a: &Algebra3, b: &BilForm, w: &BilForm) -> Result<Mat> {
    require_report(check_metric(a, b)?, "metric")?;
    require_report(check_symplectic(a, w)?, "symplectic form")?;
    let b_inv = mat_inverse(b.matrix())?;
    let d = &(&b_inv * &w.matrix().transpose()) * a.twist();
    require_report(check_derivation(a, &d, Some(b))?, "recovered derivation")?;
    if !d.is_invertible() {
        return Err(Error::precondition("recovered derivation is singular"));
    }
    Ok(d)
}

/// The product `{x,y,z}` determined by `ω({x,y,z}, αw) = −ω(αz, [x,y,w])`.
pub fn compatible_prelie_from_symplectic(a: &Algebra3, w: &BilForm) -> Result<PreLie3> {
    require_report(check_symplectic(a, w)?, "symplectic form")?;
    let n = a.dim();
    let m = w.matrix();
    // v^T (W α) = r  ⇔  v = ((W α)^T)⁻¹ r
    let solve = mat_inverse(&(m * a.twist()).transpose())?;
    let alpha_t_w = &a.twist().transpose() * m;
    let mut t = Tensor4::cube(n);
    for x in 0..n {
        for y in 0..n {
            if x == y {
                continue;
            }
            let ad = a.ad_matrix(x, y);
            // r_w = −(αz)^T W ad(x,y) e_w
            let rows = &alpha_t_w * &ad;
            for z in 0..n {
                let r: Vec<Rat> = rows.row(z).iter().map(|v| -v.clone()).collect();
                let v = solve.mul_vec(&r);
                for (l, c) in v.into_iter().enumerate() {
                    if !c.is_zero() {
                        t.set([x, y, z, l], c);
                    }
                }
            }
        }
    }
    Ok(PreLie3::new(t, a.twist().clone())?.with_label(format!("{}~omega", a.label())))
}

/// `ω(x + f, y + g) = <f, y> − <g, x>` on `L ⊕ L*`, `dim L = n`.
pub fn canonical_phase_form(n: usize) -> BilForm {
    let mut m = Mat::zeros(2 * n, 2 * n);
    for i in 0..n {
        m[(i, n + i)] = -Rat::one();
        m[(n + i, i)] = Rat::one();
    }
    BilForm::skew(m).expect("skew by construction")
}

/// Algebra axioms and regularity of `total`, the canonical form as a
/// symplectic structure, and both summands closed under the bracket.
pub fn check_phase_space(l: &Algebra3, total: &Algebra3) -> Result<Report> {
    let n = l.dim();
    if total.dim() != 2 * n {
        return Err(Error::Shape(format!("phase space has dimension {}, expected {}", total.dim(), 2 * n)));
    }
    let mut report = Report::new("phase space");
    let checks = AlgebraChecks { regular: true, ..AlgebraChecks::AXIOMS };
    let alg = check_algebra(total, checks);
    let regular = total.twist().is_invertible();
    report.absorb("algebra", alg);
    if regular {
        report.absorb("symplectic", check_symplectic(total, &canonical_phase_form(n))?);
    } else {
        report.note("twist is singular; symplectic clauses skipped");
    }
    report.push(subalgebra_clause(total, 0, n, "base_subalgebra"));
    report.push(subalgebra_clause(total, n, n, "dual_subalgebra"));
    Ok(report)
}

fn subalgebra_clause(a: &Algebra3, offset: usize, len: usize, name: &str) -> CheckReport {
    let range = offset..offset + len;
    let mut checked = 0;
    for i in range.clone() {
        for j in i + 1..offset + len {
            for k in j + 1..offset + len {
                checked += 1;
                if a.structure(i, j, k).iter().any(|(l, _)| !range.contains(l)) {
                    let v = a.bracket_basis(i, j, k);
                    let mut proj = v.clone();
                    for (p, e) in proj.iter_mut().enumerate() {
                        if !range.contains(&p) {
                            *e = Rat::zero();
                        }
                    }
                    return CheckReport::fail(name, Witness::new(&[i, j, k], v, proj), checked);
                }
            }
        }
    }
    CheckReport::pass(name, checked)
}

/// Semidirect sum of the sub-adjacent algebra with the dual of left
/// multiplication, with the phase-space verdict.
pub fn phase_space_from_prelie(p: &PreLie3) -> Result<(Algebra3, Report)> {
    let c = subadjacent(p)?;
    let n = p.dim();
    let rho = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).map(|(i, j)| p.left_matrix(i, j)).collect();
    let left = Rep3::new(c.clone(), rho, p.twist().clone())?;
    let (dual, _) = dual_representation(&left)?;
    let total = semidirect_sum(&dual)?.with_label(format!("T*{}", p.label()));
    let report = check_phase_space(&c, &total)?;
    Ok((total, report))
}

/// Artifacts of the polynomial extension `L ⊗ tF[t]/t^nF[t]`.
#[derive(Clone, Debug)]
pub struct NilpotentBundle {
    pub ln: Algebra3,
    pub d: Mat,
    pub double: Algebra3,
    pub b: BilForm,
    pub dhat: Mat,
    pub w: BilForm,
}

/// Basis `x_i ⊗ t^p` ordered by grade `p = 1..n-1`, then by `i`.
pub fn nilpotent_extension(l: &Algebra3, n: usize) -> Result<NilpotentBundle> {
    if n < 2 {
        return Err(Error::precondition("truncation degree must be at least 2"));
    }
    require_algebra(l, AlgebraChecks::MULTIPLICATIVE, "nilpotent extension")?;
    let m = l.dim();
    let grades = n - 1;
    let dim = m * grades;
    if dim * 2 > crate::MAX_DIM {
        return Err(Error::TooLarge { dim: dim * 2, max: crate::MAX_DIM });
    }
    let idx = |p: usize, i: usize| (p - 1) * m + i;
    let mut t = Tensor4::cube(dim);
    for p in 1..n {
        for q in 1..n {
            for r in 1..n {
                let s = p + q + r;
                if s >= n {
                    continue;
                }
                for i in 0..m {
                    for j in 0..m {
                        for k in 0..m {
                            for (o, c) in l.structure(i, j, k) {
                                t.set([idx(p, i), idx(q, j), idx(r, k), idx(s, *o)], c.clone());
                            }
                        }
                    }
                }
            }
        }
    }
    let twist = Mat::identity(grades).kron(l.twist());
    let ln = Algebra3::new(t, twist)?.with_label(format!("{}[t]/t^{n}", l.label()));
    let d = Mat::diag(&(1..n).flat_map(|p| std::iter::repeat_n(Rat::from_integer(p.into()), m)).collect::<Vec<_>>());
    let double = semidirect_sum(&coadjoint(&ln))?.with_label(format!("{}+dual", ln.label()));
    let b = standard_form(dim);
    let dhat = d.direct_sum(&-&d.transpose());
    let w = symplectic_from_derivation(&double, &b, &dhat)?;
    Ok(NilpotentBundle { ln, d, double, b, dhat, w })
}
