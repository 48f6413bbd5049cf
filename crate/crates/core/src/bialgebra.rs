//! Matched pairs, Manin triples and double construction bialgebras.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactlin::{axpy, zero_vec, Mat, Rat, Tensor4, Vector};
use crate::homlie::{check_algebra, check_skew, Algebra3, AlgebraChecks};
use crate::report::{CheckReport, Report, Witness};
use crate::reps::{check_representation, Rep3};
use crate::symplectic::BilForm;

/// A linear map `Δ: L → L⊗L⊗L`; `delta[(i, j, l, k)]` is the coefficient of
/// `e_i⊗e_j⊗e_l` in `Δ(e_k)`. The transpose of Δ is the bracket
/// `[e_i*, e_j*, e_l*]* = Σ_k delta[(i, j, l, k)] e_k*` on the dual space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cobracket {
    base: Algebra3,
    delta: Tensor4,
}

impl Cobracket {
    pub fn new(base: Algebra3, delta: Tensor4) -> Result<Self> {
        let n = base.dim();
        if delta.dims() != [n; 4] {
            return Err(Error::Shape(format!("cobracket tensor has dims {:?}, expected {n}^4", delta.dims())));
        }
        Ok(Cobracket { base, delta })
    }

    pub fn zero(base: Algebra3) -> Self {
        let n = base.dim();
        Cobracket { base, delta: Tensor4::cube(n) }
    }

    /// From the structure constants of a bracket on the dual space given as
    /// `(i, j, l, k, c)`, spread over all orderings of `(i, j, l)` with sign.
    pub fn from_dual_constants<I>(base: Algebra3, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, usize, usize, Rat)>,
    {
        let n = base.dim();
        let dual = Algebra3::from_structure_constants(n, entries, Mat::identity(n))?;
        Cobracket::new(base, dual.bracket().clone())
    }

    pub fn base(&self) -> &Algebra3 {
        &self.base
    }

    pub fn delta(&self) -> &Tensor4 {
        &self.delta
    }

    pub fn is_zero(&self) -> bool {
        self.delta.is_zero()
    }

    /// `Δ(x)` flattened with index `(i * n + j) * n + l`.
    pub fn apply(&self, x: &[Rat]) -> Vector {
        let n = self.base.dim();
        let mut out = zero_vec(n * n * n);
        for i in 0..n {
            for j in 0..n {
                for l in 0..n {
                    let mut s = Rat::zero();
                    for (k, xk) in x.iter().enumerate() {
                        if !xk.is_zero() {
                            s += xk * self.delta.get([i, j, l, k]);
                        }
                    }
                    out[(i * n + j) * n + l] = s;
                }
            }
        }
        out
    }

    /// The dual algebra `(L*, [·,·,·]*, α^T)`.
    pub fn dual_algebra(&self) -> Algebra3 {
        Algebra3::new(self.delta.clone(), self.base.twist().transpose())
            .expect("square shapes")
            .with_label(format!("{}*", self.base.label()))
    }
}

/// Two algebras acting on each other: `rho` is a representation of `left`
/// on the carrier of `right`, `mu` one of `right` on the carrier of `left`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchedPairData {
    pub left: Algebra3,
    pub right: Algebra3,
    pub rho: Rep3,
    pub mu: Rep3,
}

impl MatchedPairData {
    pub fn new(left: Algebra3, right: Algebra3, rho: Rep3, mu: Rep3) -> Result<Self> {
        if rho.algebra() != &left || mu.algebra() != &right {
            return Err(Error::Shape("each action must be over its own algebra".into()));
        }
        if rho.vdim() != right.dim() || mu.vdim() != left.dim() {
            return Err(Error::Shape(format!(
                "carrier dimensions do not cross-match: rho acts on {}, right has {}; mu acts on {}, left has {}",
                rho.vdim(),
                right.dim(),
                mu.vdim(),
                left.dim()
            )));
        }
        if rho.twist() != right.twist() || mu.twist() != left.twist() {
            return Err(Error::Shape("action twists must equal the twists of the acted-on algebras".into()));
        }
        Ok(MatchedPairData { left, right, rho, mu })
    }
}

/// Bracket on `L ⊕ L'` extending both brackets by `[x, y, a] = ρ(x, y) a`,
/// `[a, b, x] = μ(a, b) x` and skew-symmetry, twist `α ⊕ α'`. No validity
/// check.
pub fn assemble_unchecked(m: &MatchedPairData) -> Algebra3 {
    let n = m.left.dim();
    let p = m.right.dim();
    let mut entries = Vec::new();
    for (alg, act, off, other) in [(&m.left, &m.rho, 0, n), (&m.right, &m.mu, n, 0)] {
        let d = alg.dim();
        for i in 0..d {
            for j in i + 1..d {
                for k in j + 1..d {
                    for (l, c) in alg.structure(i, j, k) {
                        entries.push((off + i, off + j, off + k, off + *l, c.clone()));
                    }
                }
                let mat = act.rho(i, j);
                for k in 0..act.vdim() {
                    for l in 0..act.vdim() {
                        if !mat[(l, k)].is_zero() {
                            entries.push((off + i, off + j, other + k, other + l, mat[(l, k)].clone()));
                        }
                    }
                }
            }
        }
    }
    Algebra3::from_structure_constants(n + p, entries, m.left.twist().direct_sum(m.right.twist()))
        .expect("disjoint index blocks")
}

/// Data for one orientation of the compatibility equations: `l` is acted on
/// by `mu` (an action of `r`), `r` by `rho` (an action of `l`).
struct Side<'a> {
    l: &'a Algebra3,
    r: &'a Algebra3,
    rho: &'a Rep3,
    mu: &'a Rep3,
    // direct-sum offsets used for witness tuples
    l_off: usize,
    r_off: usize,
}

fn combo(terms: &[(i64, &Vector)]) -> Vector {
    let mut out = zero_vec(terms[0].1.len());
    for (s, t) in terms {
        axpy(&mut out, &Rat::from_integer((*s).into()), t);
    }
    out
}

fn lin(coeffs: &[Rat], vecs: impl Fn(usize) -> Vector, len: usize) -> Vector {
    let mut out = zero_vec(len);
    for (b, c) in coeffs.iter().enumerate() {
        if !c.is_zero() {
            axpy(&mut out, c, &vecs(b));
        }
    }
    out
}

impl Side<'_> {
    /// The three equations with `mu` acting on `l`; returns clauses named
    /// `names`.
    fn equations(&self, names: [&str; 3]) -> [CheckReport; 3] {
        let (l, r, rho, mu) = (self.l, self.r, self.rho, self.mu);
        let n = l.dim();
        let p = r.dim();
        let al: Vec<Vector> = (0..n).map(|i| l.twist_col(i)).collect();
        let ar: Vec<Vector> = (0..p).map(|i| r.twist_col(i)).collect();
        // μ(b, c) α e_x
        let mu_alpha: Vec<Vec<Vec<Vector>>> =
            (0..p).map(|b| (0..p).map(|c| (0..n).map(|x| mu.rho(b, c).mul_vec(&al[x])).collect()).collect()).collect();
        let mu_col = |b: usize, c: usize, x: usize| mu.rho(b, c).column(x);
        let rho_col = |i: usize, j: usize, a: usize| rho.rho(i, j).column(a);
        let mu_twisted: Vec<Vec<Mat>> = (0..p).map(|a| (0..p).map(|b| mu.rho_vec(&ar[a], &ar[b])).collect()).collect();
        let (lo, ro) = (self.l_off, self.r_off);

        // μ(α'a4, α'a5)[x1,x2,x3] = [μ(a4,a5)x1, αx2, αx3] + [αx1, μ(a4,a5)x2, αx3] + [αx1, αx2, μ(a4,a5)x3]
        let mut checked = 0;
        let mut w1 = None;
        'e1: for x1 in 0..n {
            for x2 in x1 + 1..n {
                for x3 in x2 + 1..n {
                    let br = l.bracket_basis(x1, x2, x3);
                    for a4 in 0..p {
                        for a5 in a4 + 1..p {
                            checked += 1;
                            let lhs = mu_twisted[a4][a5].mul_vec(&br);
                            let t1 = l.bracket_vec(&mu_col(a4, a5, x1), &al[x2], &al[x3]);
                            let t2 = l.bracket_vec(&al[x1], &mu_col(a4, a5, x2), &al[x3]);
                            let t3 = l.bracket_vec(&al[x1], &al[x2], &mu_col(a4, a5, x3));
                            let rhs = combo(&[(1, &t1), (1, &t2), (1, &t3)]);
                            if lhs != rhs {
                                w1 = Some(Witness::new(&[lo + x1, lo + x2, lo + x3, ro + a4, ro + a5], lhs, rhs));
                                break 'e1;
                            }
                        }
                    }
                }
            }
        }
        let c1 = CheckReport::from_result(names[0], checked, w1);

        // μ(ρ(x1,x4)a5, a3)αx2 − μ(ρ(x2,x4)a5, a3)αx1 − μ(ρ(x1,x2)a3, a5)αx4 + [αx1, αx2, μ(a3,a5)x4] = 0
        let mut checked = 0;
        let mut w2 = None;
        'e2: for x1 in 0..n {
            for x2 in 0..n {
                for a3 in 0..p {
                    for x4 in 0..n {
                        for a5 in 0..p {
                            checked += 1;
                            let t1 = lin(&rho_col(x1, x4, a5), |b| mu_alpha[b][a3][x2].clone(), n);
                            let t2 = lin(&rho_col(x2, x4, a5), |b| mu_alpha[b][a3][x1].clone(), n);
                            let t3 = lin(&rho_col(x1, x2, a3), |b| mu_alpha[b][a5][x4].clone(), n);
                            let t4 = l.bracket_vec(&al[x1], &al[x2], &mu_col(a3, a5, x4));
                            let expr = combo(&[(1, &t1), (-1, &t2), (-1, &t3), (1, &t4)]);
                            if !expr.iter().all(Zero::is_zero) {
                                w2 = Some(Witness::new(&[lo + x1, lo + x2, ro + a3, lo + x4, ro + a5], expr, zero_vec(n)));
                                break 'e2;
                            }
                        }
                    }
                }
            }
        }
        let c2 = CheckReport::from_result(names[1], checked, w2);

        // [μ(a2,a3)x1, αx4, αx5] − μ(α'a2, α'a3)[x1,x4,x5] − μ(ρ(x4,x5)a2, a3)αx1 − μ(a2, ρ(x4,x5)a3)αx1 = 0
        let mut checked = 0;
        let mut w3 = None;
        'e3: for x1 in 0..n {
            for a2 in 0..p {
                for a3 in 0..p {
                    for x4 in 0..n {
                        for x5 in 0..n {
                            checked += 1;
                            let t1 = l.bracket_vec(&mu_col(a2, a3, x1), &al[x4], &al[x5]);
                            let t2 = mu_twisted[a2][a3].mul_vec(&l.bracket_basis(x1, x4, x5));
                            let t3 = lin(&rho_col(x4, x5, a2), |b| mu_alpha[b][a3][x1].clone(), n);
                            let t4 = lin(&rho_col(x4, x5, a3), |b| mu_alpha[a2][b][x1].clone(), n);
                            let expr = combo(&[(1, &t1), (-1, &t2), (-1, &t3), (-1, &t4)]);
                            if !expr.iter().all(Zero::is_zero) {
                                w3 = Some(Witness::new(&[lo + x1, ro + a2, ro + a3, lo + x4, lo + x5], expr, zero_vec(n)));
                                break 'e3;
                            }
                        }
                    }
                }
            }
        }
        let c3 = CheckReport::from_result(names[2], checked, w3);
        [c1, c2, c3]
    }
}

/// The six compatibility equations between `ρ` and `μ`, evaluated on all
/// basis tuples. Witness indices refer to the basis of `L ⊕ L'`.
pub fn compatibility_clauses(m: &MatchedPairData) -> Vec<CheckReport> {
    let n = m.left.dim();
    let first = Side { l: &m.left, r: &m.right, rho: &m.rho, mu: &m.mu, l_off: 0, r_off: n };
    let second = Side { l: &m.right, r: &m.left, rho: &m.mu, mu: &m.rho, l_off: n, r_off: 0 };
    let mut out = Vec::with_capacity(6);
    out.extend(first.equations(["compatibility_1", "compatibility_2", "compatibility_3"]));
    out.extend(second.equations(["compatibility_4", "compatibility_5", "compatibility_6"]));
    out
}

fn require_reps(m: &MatchedPairData) -> Result<()> {
    for (r, what) in [(&m.rho, "left action"), (&m.mu, "right action")] {
        let rep = check_representation(r);
        if let Some(c) = rep.first_failure() {
            return Err(Error::failed_check(format!("{what} is not a representation: clause `{}` fails", c.name), c));
        }
    }
    Ok(())
}

/// Evaluates the compatibility equations and cross-checks them against the
/// Hom-Jacobi identity of the assembled bracket on `L ⊕ L'`. Both verdicts
/// are reported; a `verdicts_agree` clause fails if they differ.
pub fn check_matched_pair(m: &MatchedPairData) -> Result<Report> {
    require_reps(m)?;
    Ok(matched_pair_report(m))
}

fn matched_pair_report(m: &MatchedPairData) -> Report {
    let mut report = Report::new("matched pair");
    report.absorb("left_action", check_representation(&m.rho));
    report.absorb("right_action", check_representation(&m.mu));
    let clauses = compatibility_clauses(m);
    let literal = clauses.iter().all(|c| c.passed);
    for c in clauses {
        report.push(c);
    }
    let assembled = check_algebra(&assemble_unchecked(m), AlgebraChecks::AXIOMS);
    let assembled_ok = assembled.passed;
    report.absorb("assembled", assembled);
    report.push(CheckReport::fact("verdicts_agree", literal == assembled_ok));
    if literal != assembled_ok {
        report.note("compatibility equations and assembled bracket disagree");
    }
    report
}

/// The algebra on `L ⊕ L'` of a matched pair.
pub fn assemble_matched_pair(m: &MatchedPairData) -> Result<Algebra3> {
    let report = check_matched_pair(m)?;
    if let Some(c) = report.first_failure() {
        return Err(Error::failed_check(format!("not a matched pair: clause `{}` fails", c.name), c));
    }
    Ok(assemble_unchecked(m))
}

/// `([x,y,z], αu) + ([x,y,u], αz) = 0` on all basis 4-tuples.
pub fn check_invariance(a: &Algebra3, form: &BilForm) -> Result<CheckReport> {
    let n = a.dim();
    if form.dim() != n {
        return Err(Error::Shape(format!("form of dimension {} on an algebra of dimension {n}", form.dim())));
    }
    let alpha: Vec<Vector> = (0..n).map(|i| a.twist_col(i)).collect();
    let mut checked = 0;
    for x in 0..n {
        for y in x + 1..n {
            let br: Vec<Vector> = (0..n).map(|z| a.bracket_basis(x, y, z)).collect();
            for z in 0..n {
                for u in z..n {
                    checked += 1;
                    let s = form.eval(&br[z], &alpha[u]) + form.eval(&br[u], &alpha[z]);
                    if !s.is_zero() {
                        return Ok(CheckReport::fail("invariance", Witness::scalar(&[x, y, z, u], s, Rat::zero()), checked));
                    }
                }
            }
        }
    }
    Ok(CheckReport::pass("invariance", checked))
}

/// `(x + ξ, y + η) = <x, η> + <ξ, y>` on `L ⊕ L*`, `dim L = n`.
pub fn standard_form(n: usize) -> BilForm {
    let mut m = Mat::zeros(2 * n, 2 * n);
    for i in 0..n {
        m[(i, n + i)] = Rat::one();
        m[(n + i, i)] = Rat::one();
    }
    BilForm::symmetric(m).expect("symmetric by construction")
}

/// `ad*(x, y) = -ad(x, y)^T`, the action of `a` on its dual space.
pub fn coadjoint(a: &Algebra3) -> Rep3 {
    let n = a.dim();
    let rho = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).map(|(i, j)| -&a.ad_matrix(i, j).transpose()).collect();
    Rep3::new(a.clone(), rho, a.twist().transpose()).expect("skew by construction")
}

fn require_skew_dual(c: &Cobracket) -> Result<Algebra3> {
    let dual = c.dual_algebra();
    let skew = check_skew(&dual);
    if !skew.passed {
        return Err(Error::failed_check("dual bracket is not alternating", &skew));
    }
    Ok(dual)
}

/// The matched-pair data `(L, L*, ad*, a∂*)` of a cobracket.
pub fn coadjoint_pair(c: &Cobracket) -> Result<MatchedPairData> {
    let dual = require_skew_dual(c)?;
    let rho = coadjoint(c.base());
    let mu = coadjoint(&dual);
    MatchedPairData::new(c.base().clone(), dual, rho, mu)
}

/// Bracket on `L ⊕ L*` (basis `e_1..e_n, e_1*..e_n*`) built from the
/// coadjoint actions, with a report on the Manin triple conditions.
pub fn manin_bracket(c: &Cobracket) -> Result<(Algebra3, Report)> {
    let pair = coadjoint_pair(c)?;
    let n = c.base().dim();
    let double = assemble_unchecked(&pair).with_label(format!("{}+dual", c.base().label()));
    let mut report = Report::new("manin triple");
    report.absorb("algebra", check_algebra(&double, AlgebraChecks::AXIOMS));
    report.push(check_invariance(&double, &standard_form(n))?);
    let form = standard_form(n);
    let isotropic = |off: usize| (0..n).all(|i| (0..n).all(|j| form.matrix()[(off + i, off + j)].is_zero()));
    report.push(CheckReport::fact("isotropic_base", isotropic(0)));
    report.push(CheckReport::fact("isotropic_dual", isotropic(n)));
    report.push(projection_clause(&double, n, 0, "projection_base"));
    report.push(projection_clause(&double, n, n, "projection_dual"));
    Ok((double, report))
}

/// With `own` the block of two arguments, brackets `[own, own, other]` must
/// have no component in `own`.
fn projection_clause(a: &Algebra3, n: usize, own: usize, name: &str) -> CheckReport {
    let other = if own == 0 { n } else { 0 };
    let mut checked = 0;
    for i in own..own + n {
        for j in i + 1..own + n {
            for k in other..other + n {
                checked += 1;
                let v = a.bracket_basis(i, j, k);
                if v[own..own + n].iter().any(|x| !x.is_zero()) {
                    return CheckReport::fail(name, Witness::new(&[i, j, k], v[own..own + n].to_vec(), zero_vec(n)), checked);
                }
            }
        }
    }
    CheckReport::pass(name, checked)
}

/// Applies linear maps to the three tensor factors of a flattened `n^3`
/// tensor.
fn tensor3(maps: [&Mat; 3], t: &[Rat], n: usize) -> Vector {
    let mut cur = t.to_vec();
    for (axis, m) in maps.iter().enumerate() {
        let mut next = zero_vec(n * n * n);
        for i in 0..n {
            for j in 0..n {
                for l in 0..n {
                    let v = &cur[(i * n + j) * n + l];
                    if v.is_zero() {
                        continue;
                    }
                    let src = [i, j, l][axis];
                    for p in 0..n {
                        let c = &m[(p, src)];
                        if c.is_zero() {
                            continue;
                        }
                        let mut idx = [i, j, l];
                        idx[axis] = p;
                        next[(idx[0] * n + idx[1]) * n + idx[2]] += c * v;
                    }
                }
            }
        }
        cur = next;
    }
    cur
}

/// Checks the three coproduct equations of a double construction on all basis
/// tuples. The report lists them separately as `cocycle_cyclic`,
/// `cocycle_expanded` and `cocycle_mixed`; the first two define a double
/// construction bialgebra.
pub fn check_double_construction(c: &Cobracket) -> Result<Report> {
    let dual = require_skew_dual(c)?;
    let dual_report = check_algebra(&dual, AlgebraChecks::AXIOMS);
    if let Some(f) = dual_report.first_failure() {
        return Err(Error::failed_check(format!("dual bracket is not a 3-Hom-Lie algebra: clause `{}` fails", f.name), f));
    }
    let a = c.base();
    let n = a.dim();
    let alpha = a.twist();
    let delta: Vec<Vector> = (0..n).map(|k| c.apply(&crate::exactlin::unit_vec(n, k))).collect();
    let ad: Vec<Vec<Mat>> = (0..n).map(|i| (0..n).map(|j| a.ad_matrix(i, j)).collect()).collect();
    let db = |x: usize, y: usize, z: usize| c.apply(&a.bracket_basis(x, y, z));
    let mut report = Report::new("double construction");

    // Δ[x,y,z] = (α⊗α⊗ad_{y,z})Δx + (α⊗α⊗ad_{z,x})Δy + (α⊗α⊗ad_{x,y})Δz
    let mut checked = 0;
    let mut w = None;
    'a: for x in 0..n {
        for y in x + 1..n {
            for z in y + 1..n {
                checked += 1;
                let lhs = db(x, y, z);
                let t1 = tensor3([alpha, alpha, &ad[y][z]], &delta[x], n);
                let t2 = tensor3([alpha, alpha, &ad[z][x]], &delta[y], n);
                let t3 = tensor3([alpha, alpha, &ad[x][y]], &delta[z], n);
                let rhs = combo(&[(1, &t1), (1, &t2), (1, &t3)]);
                if lhs != rhs {
                    w = Some(Witness::new(&[x, y, z], lhs, rhs));
                    break 'a;
                }
            }
        }
    }
    report.push(CheckReport::from_result("cocycle_cyclic", checked, w));

    // Δ[x,y,z] = (α⊗α⊗ad_{y,z} + α⊗ad_{y,z}⊗α + ad_{y,z}⊗α⊗α)Δx
    let mut checked = 0;
    let mut w = None;
    'b: for x in 0..n {
        for y in 0..n {
            for z in y + 1..n {
                checked += 1;
                let lhs = db(x, y, z);
                let m = &ad[y][z];
                let t1 = tensor3([alpha, alpha, m], &delta[x], n);
                let t2 = tensor3([alpha, m, alpha], &delta[x], n);
                let t3 = tensor3([m, alpha, alpha], &delta[x], n);
                let rhs = combo(&[(1, &t1), (1, &t2), (1, &t3)]);
                if lhs != rhs {
                    w = Some(Witness::new(&[x, y, z], lhs, rhs));
                    break 'b;
                }
            }
        }
    }
    report.push(CheckReport::from_result("cocycle_expanded", checked, w));

    // (ad_{x,y}⊗α⊗α + α⊗α⊗ad_{x,y})Δz = (α⊗ad_{z,x}⊗α)Δy + (α⊗ad_{y,z}⊗α)Δx
    let mut checked = 0;
    let mut w = None;
    'c: for x in 0..n {
        for y in x + 1..n {
            for z in 0..n {
                checked += 1;
                let m = &ad[x][y];
                let l1 = tensor3([m, alpha, alpha], &delta[z], n);
                let l2 = tensor3([alpha, alpha, m], &delta[z], n);
                let lhs = combo(&[(1, &l1), (1, &l2)]);
                let r1 = tensor3([alpha, &ad[z][x], alpha], &delta[y], n);
                let r2 = tensor3([alpha, &ad[y][z], alpha], &delta[x], n);
                let rhs = combo(&[(1, &r1), (1, &r2)]);
                if lhs != rhs {
                    w = Some(Witness::new(&[x, y, z], lhs, rhs));
                    break 'c;
                }
            }
        }
    }
    report.push(CheckReport::from_result("cocycle_mixed", checked, w));
    Ok(report)
}

/// The three verdicts on a cobracket: double construction, standard Manin
/// triple and matched pair of coadjoint actions.
#[derive(Clone, Debug)]
pub struct Equivalence {
    pub double_construction: Report,
    pub manin: Report,
    pub matched_pair: Report,
}

impl Equivalence {
    pub fn verdicts(&self) -> [bool; 3] {
        [self.double_construction.passed, self.manin.passed, self.matched_pair.passed]
    }

    pub fn agree(&self) -> bool {
        let v = self.verdicts();
        v[0] == v[1] && v[1] == v[2]
    }

    pub fn report(&self) -> Report {
        let mut r = Report::new("equivalence");
        for (name, sub) in [
            ("double_construction", &self.double_construction),
            ("manin", &self.manin),
            ("matched_pair", &self.matched_pair),
        ] {
            r.push_info(CheckReport::fact(name, sub.passed));
        }
        r.push(CheckReport::fact("verdicts_agree", self.agree()));
        r
    }
}

/// Runs the three checks concurrently.
pub fn equivalence_suite(c: &Cobracket) -> Result<Equivalence> {
    let pair = coadjoint_pair(c)?;
    let (dc, manin, mp) = std::thread::scope(|s| {
        let dc = s.spawn(|| check_double_construction(c));
        let manin = s.spawn(|| manin_bracket(c));
        let mp = s.spawn(|| matched_pair_report(&pair));
        (dc.join().expect("worker"), manin.join().expect("worker"), mp.join().expect("worker"))
    });
    Ok(Equivalence { double_construction: dc?, manin: manin?.1, matched_pair: mp })
}
