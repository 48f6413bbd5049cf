//! Skew tensors `r ∈ L⊗L`, the classical Hom-Yang-Baxter equation and
//! coboundary cobrackets.

use num_traits::{One, Zero};

use crate::bialgebra::{coadjoint, Cobracket};
use crate::error::{Error, Result};
use crate::exactlin::{axpy, mat_inverse, unit_vec, Mat, Rat, Tensor4, Vector};
use crate::homlie::{first_difference, Algebra3};
use crate::report::{CheckReport, Report, Witness};
use crate::symplectic::BilForm;

/// `r = Σ r_ij e_i⊗e_j` over a base algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RTensor {
    base: Algebra3,
    entries: Mat,
}

impl RTensor {
    pub fn new(base: Algebra3, entries: Mat) -> Result<Self> {
        let n = base.dim();
        if entries.rows() != n || entries.cols() != n {
            return Err(Error::Shape(format!("r is {}x{}, expected {n}x{n}", entries.rows(), entries.cols())));
        }
        Ok(RTensor { base, entries })
    }

    /// `e_i⊗e_j − e_j⊗e_i` (0-based).
    pub fn wedge(base: Algebra3, i: usize, j: usize) -> Result<Self> {
        let n = base.dim();
        if i >= n || j >= n {
            return Err(Error::Shape(format!("wedge index out of range for dimension {n}")));
        }
        let mut m = Mat::zeros(n, n);
        m[(i, j)] += Rat::one();
        m[(j, i)] -= Rat::one();
        RTensor::new(base, m)
    }

    pub fn base(&self) -> &Algebra3 {
        &self.base
    }

    pub fn entries(&self) -> &Mat {
        &self.entries
    }

    pub fn is_skew(&self) -> bool {
        self.entries.is_skew()
    }

    /// `α⊗α r = r`, i.e. `α R α^T = R`.
    pub fn is_alpha_invariant(&self) -> bool {
        let a = self.base.twist();
        &(a * &self.entries) * &a.transpose() == self.entries
    }

    /// Matrix of the induced map `L* → L`, `<r(ξ), η> = <r, ξ⊗η>`.
    pub fn sharp(&self) -> Mat {
        self.entries.transpose()
    }

    pub fn scale(&self, c: &Rat) -> Self {
        RTensor { base: self.base.clone(), entries: self.entries.scale(c) }
    }

    /// Skew and α-invariant, reported as clauses.
    pub fn admissibility(&self) -> Vec<CheckReport> {
        let n = self.base.dim();
        let r = &self.entries;
        let neg = -&r.transpose();
        let skew = match first_difference(r, &neg) {
            None => CheckReport::pass("r_skew", (n * n) as u64),
            Some((i, j)) => CheckReport::fail("r_skew", Witness::scalar(&[i, j], r[(i, j)].clone(), neg[(i, j)].clone()), (n * n) as u64),
        };
        let a = self.base.twist();
        let twisted = &(a * r) * &a.transpose();
        let inv = match first_difference(&twisted, r) {
            None => CheckReport::pass("r_twist_invariant", (n * n) as u64),
            Some((i, j)) => CheckReport::fail(
                "r_twist_invariant",
                Witness::scalar(&[i, j], twisted[(i, j)].clone(), r[(i, j)].clone()),
                (n * n) as u64,
            ),
        };
        vec![skew, inv]
    }

    fn require_admissible(&self, what: &str) -> Result<()> {
        for c in self.admissibility() {
            if !c.passed {
                return Err(Error::failed_check(format!("{what}: r fails `{}`", c.name), &c));
            }
        }
        Ok(())
    }
}

/// `G[o][q][s][t] = Σ c_abc^o m1[a][q] m2[b][s] m3[c][t]`.
fn contract(a: &Algebra3, m: [&Mat; 3]) -> Tensor4 {
    let n = a.dim();
    let mut g = Tensor4::cube(n);
    for x in 0..n {
        for y in 0..n {
            if x == y {
                continue;
            }
            for z in 0..n {
                for (o, c) in a.structure(x, y, z) {
                    for q in 0..n {
                        let c1 = &m[0][(x, q)];
                        if c1.is_zero() {
                            continue;
                        }
                        let c1 = c * c1;
                        for s in 0..n {
                            let c2 = &m[1][(y, s)];
                            if c2.is_zero() {
                                continue;
                            }
                            let c12 = &c1 * c2;
                            for t in 0..n {
                                let c3 = &m[2][(z, t)];
                                if !c3.is_zero() {
                                    g.add_at([*o, q, s, t], &(&c12 * c3));
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    g
}

/// Permutes axes: `out[idx[perm[0]], idx[perm[1]], ...] = t[idx]`.
fn permute(t: &Tensor4, perm: [usize; 4]) -> Tensor4 {
    let n = t.dims()[0];
    let mut out = Tensor4::cube(n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    let v = t.get([i, j, k, l]);
                    if !v.is_zero() {
                        let idx = [i, j, k, l];
                        out.set([idx[perm[0]], idx[perm[1]], idx[perm[2]], idx[perm[3]]], v.clone());
                    }
                }
            }
        }
    }
    out
}

fn add_tensors(a: &mut Tensor4, b: &Tensor4) {
    let n = a.dims()[0];
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    let v = b.get([i, j, k, l]);
                    if !v.is_zero() {
                        a.add_at([i, j, k, l], v);
                    }
                }
            }
        }
    }
}

/// `S = R α^T` and `P = α R`: `r` with the twist on its second or first leg.
fn legs(r: &RTensor) -> (Mat, Mat) {
    let a = r.base().twist();
    (r.entries() * &a.transpose(), a * r.entries())
}

/// The four-term tensor `[[r, r, r]] ∈ L^{⊗4}`:
/// `Σ [x_i,x_j,x_k]⊗αy_i⊗αy_j⊗αy_k + αx_i⊗[y_i,x_j,x_k]⊗αy_j⊗αy_k
///  + αx_i⊗αx_j⊗[y_i,y_j,x_k]⊗αy_k + αx_i⊗αx_j⊗αx_k⊗[y_i,y_j,y_k]`.
pub fn triple_bracket(r: &RTensor) -> Tensor4 {
    let a = r.base();
    let (s, p) = legs(r);
    let pt = p.transpose();
    let mut total = contract(a, [&s, &s, &s]);
    // slot order of contract: (bracket output, first, second, third)
    add_tensors(&mut total, &permute(&contract(a, [&pt, &s, &s]), [1, 0, 2, 3]));
    add_tensors(&mut total, &permute(&contract(a, [&pt, &pt, &s]), [1, 2, 0, 3]));
    add_tensors(&mut total, &permute(&contract(a, [&pt, &pt, &pt]), [1, 2, 3, 0]));
    total
}

/// `[[r, r, r]] = 0`, after checking that `r` is skew and α-invariant.
pub fn check_chybe(r: &RTensor) -> Report {
    let mut report = Report::new("classical hom-yang-baxter");
    let adm = r.admissibility();
    let ok = adm.iter().all(|c| c.passed);
    for c in adm {
        report.push(c);
    }
    if !ok {
        report.note("r is not admissible; equation not evaluated");
        return report;
    }
    report.push(chybe_clause(r));
    report
}

fn chybe_clause(r: &RTensor) -> CheckReport {
    let t = triple_bracket(r);
    let n = r.base().dim();
    match t.first_nonzero() {
        None => CheckReport::pass("chybe", (n * n * n * n) as u64),
        Some((idx, v)) => CheckReport::fail("chybe", Witness::scalar(&idx, v.clone(), Rat::zero()), (n * n * n * n) as u64),
    }
}

/// `Δ = Δ1 + Δ2 + Δ3` with
/// `Δ1(x) = Σ [x,x_i,x_j]⊗αy_j⊗αy_i`, `Δ2(x) = Σ αy_i⊗[x,x_i,x_j]⊗αy_j`,
/// `Δ3(x) = Σ αy_j⊗αy_i⊗[x,x_i,x_j]`. No admissibility check.
pub fn coboundary_delta(r: &RTensor) -> Tensor4 {
    let a = r.base();
    let n = a.dim();
    let (s, _) = legs(r);
    let mut d = Tensor4::cube(n);
    for k in 0..n {
        for x in 0..n {
            for y in 0..n {
                for (o, c) in a.structure(k, x, y) {
                    for u in 0..n {
                        let su = &s[(x, u)];
                        if su.is_zero() {
                            continue;
                        }
                        for v in 0..n {
                            let sv = &s[(y, v)];
                            if sv.is_zero() {
                                continue;
                            }
                            let w = &(c * su) * sv;
                            // Δ1: [k,x,y]⊗αy_y⊗αy_x ; Δ2: αy_x⊗[k,x,y]⊗αy_y ; Δ3: αy_y⊗αy_x⊗[k,x,y]
                            d.add_at([*o, v, u, k], &w);
                            d.add_at([u, *o, v, k], &w);
                            d.add_at([v, u, *o, k], &w);
                        }
                    }
                }
            }
        }
    }
    d
}

/// The coboundary cobracket of an admissible `r`.
pub fn coboundary_cobracket(r: &RTensor) -> Result<Cobracket> {
    r.require_admissible("coboundary cobracket")?;
    Cobracket::new(r.base().clone(), coboundary_delta(r))
}

/// Checks `[ξ,η,γ]* = ad*_{r'ξ, r'η}γ + ad*_{r'η, r'γ}ξ + ad*_{r'γ, r'ξ}η` on
/// dual basis triples, where `r' = r` or `r' = r∘α*` when `twisted`.
pub fn dual_bracket_formula(r: &RTensor, c: &Cobracket, twisted: bool) -> CheckReport {
    let a = r.base();
    let n = a.dim();
    let map = if twisted { &r.sharp() * &a.twist().transpose() } else { r.sharp() };
    let img: Vec<Vector> = (0..n).map(|i| map.column(i)).collect();
    let co = coadjoint(a);
    let dual = c.dual_algebra();
    let name = if twisted { "dual_bracket_formula_twisted" } else { "dual_bracket_formula" };
    let mut checked = 0;
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                checked += 1;
                let lhs = dual.bracket_basis(i, j, k);
                let mut rhs = co.rho_vec(&img[i], &img[j]).column(k);
                axpy(&mut rhs, &Rat::one(), &co.rho_vec(&img[j], &img[k]).column(i));
                axpy(&mut rhs, &Rat::one(), &co.rho_vec(&img[k], &img[i]).column(j));
                if lhs != rhs {
                    return CheckReport::fail(name, Witness::new(&[i, j, k], lhs, rhs), checked);
                }
            }
        }
    }
    CheckReport::pass(name, checked)
}

/// `[r(ξ), r(η), r(γ)] − r([ξ,η,γ]*)` on dual basis vectors, using the dual
/// bracket of the coboundary cobracket.
pub fn residual_lhs(r: &RTensor, i: usize, j: usize, k: usize, map: &Mat, dual: &Algebra3) -> Vector {
    let a = r.base();
    let n = a.dim();
    let mut v = a.bracket_vec(&map.column(i), &map.column(j), &map.column(k));
    let back = map.mul_vec(&dual.bracket_basis(i, j, k));
    axpy(&mut v, &-Rat::one(), &back);
    debug_assert_eq!(v.len(), n);
    v
}

/// Contraction of `[[r,r,r]]` with `e_i*, e_j*, e_k*` in the first three
/// slots.
pub fn residual_rhs(t: &Tensor4, i: usize, j: usize, k: usize) -> Vector {
    t.fibre(i, j, k).to_vec()
}

/// Checks `[r(ξ), r(η), r(γ)] − r([ξ,η,γ]*) = [[r,r,r]](ξ,η,γ)` on all dual
/// basis triples; the left side goes through the coboundary dual bracket,
/// the right side through [`triple_bracket`].
pub fn verify_residual(r: &RTensor) -> Result<CheckReport> {
    r.require_admissible("residual identity")?;
    let n = r.base().dim();
    let c = coboundary_cobracket(r)?;
    let dual = c.dual_algebra();
    let map = r.sharp();
    let t = triple_bracket(r);
    let mut checked = 0;
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                checked += 1;
                let lhs = residual_lhs(r, i, j, k, &map, &dual);
                let rhs = residual_rhs(&t, i, j, k);
                if lhs != rhs {
                    return Ok(CheckReport::fail("residual", Witness::new(&[i, j, k], lhs, rhs), checked));
                }
            }
        }
    }
    Ok(CheckReport::pass("residual", checked))
}

/// The form `B(x, y) = <r^{-1}(x), y>` of a nondegenerate `r`.
pub fn cocycle_form(r: &RTensor) -> Result<BilForm> {
    let inv = mat_inverse(&r.sharp()).map_err(|_| Error::precondition("r is degenerate"))?;
    // B(e_i, e_j) = <r^{-1} e_i, e_j> = inv[j][i]
    let m = inv.transpose();
    if m.is_skew() {
        BilForm::skew(m)
    } else {
        Err(Error::precondition("r is not skew-symmetric"))
    }
}

/// `B(α[x,y,z],w) − B(α[x,y,w],z) + B(α[x,z,w],y) − B(α[y,z,w],x) = 0` on
/// basis 4-tuples.
pub fn check_cocycle_identity(a: &Algebra3, b: &BilForm) -> CheckReport {
    let n = a.dim();
    let ab = |x: usize, y: usize, z: usize| a.apply_twist(&a.bracket_basis(x, y, z));
    let mut checked = 0;
    for x in 0..n {
        for y in x + 1..n {
            for z in y + 1..n {
                for w in z + 1..n {
                    checked += 1;
                    let (ex, ey, ez, ew) = (unit_vec(n, x), unit_vec(n, y), unit_vec(n, z), unit_vec(n, w));
                    let s = b.eval(&ab(x, y, z), &ew) - b.eval(&ab(x, y, w), &ez) + b.eval(&ab(x, z, w), &ey)
                        - b.eval(&ab(y, z, w), &ex);
                    if !s.is_zero() {
                        return CheckReport::fail("cocycle_identity", Witness::scalar(&[x, y, z, w], s, Rat::zero()), checked);
                    }
                }
            }
        }
    }
    CheckReport::pass("cocycle_identity", checked)
}

/// Pairs the cocycle identity of `B = r^{-1}` with the Yang-Baxter verdict;
/// the `biconditional` clause fails when they differ.
pub fn cocycle_form_check(r: &RTensor) -> Result<Report> {
    r.require_admissible("cocycle form")?;
    if !r.base().twist().is_invertible() {
        return Err(Error::precondition("cocycle form needs an invertible twist"));
    }
    let b = cocycle_form(r)?;
    let mut report = Report::new("cocycle form");
    let cocycle = check_cocycle_identity(r.base(), &b);
    let chybe = chybe_clause(r);
    let agree = cocycle.passed == chybe.passed;
    report.push_info(cocycle);
    report.push_info(chybe);
    report.push(CheckReport::fact("biconditional", agree));
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::int;
    use crate::fixtures::{n4, n4_twisted};

    fn wedges(base: &Algebra3, pairs: &[(usize, usize)]) -> RTensor {
        let n = base.dim();
        let mut m = Mat::zeros(n, n);
        for &(i, j) in pairs {
            m[(i, j)] += int(1);
            m[(j, i)] -= int(1);
        }
        RTensor::new(base.clone(), m).unwrap()
    }

    #[test]
    fn single_wedge_solves() {
        let r = RTensor::wedge(n4(), 0, 3).unwrap();
        assert!(check_chybe(&r).passed);
        assert!(triple_bracket(&r).first_nonzero().is_none());
    }

    #[test]
    fn three_wedges_on_extended_n4_fail() {
        let a = n4().direct_sum(&Algebra3::abelian(1));
        let r = wedges(&a, &[(0, 1), (0, 2), (1, 4)]);
        // only r13 r21 r25 [e3,e1,e2] lands on e1⊗e2⊗e4⊗e5
        let report = check_chybe(&r);
        let w = report.first_failure().unwrap().witness.as_ref().unwrap();
        assert_eq!(w.tuple, vec![0, 1, 3, 4]);
        assert_eq!(w.lhs, vec![int(-1)]);
        assert_eq!(triple_bracket(&r).get([0, 1, 3, 4]), &int(-1));
    }

    #[test]
    fn admissibility_clauses() {
        let mut m = Mat::zeros(4, 4);
        m[(0, 1)] = int(1);
        let r = RTensor::new(n4(), m).unwrap();
        assert!(!r.is_skew());
        assert!(verify_residual(&r).is_err());
        let tw = n4_twisted(int(2), int(1), int(1));
        assert!(!RTensor::wedge(tw.clone(), 0, 1).unwrap().is_alpha_invariant());
        assert!(RTensor::wedge(tw, 1, 2).unwrap().is_alpha_invariant());
    }

    #[test]
    fn zero_tensor_has_zero_coboundary() {
        let r = RTensor::new(n4(), Mat::zeros(4, 4)).unwrap();
        assert!(coboundary_cobracket(&r).unwrap().is_zero());
        assert!(verify_residual(&r).unwrap().passed);
    }

    #[test]
    fn cocycle_form_inverts_sharp() {
        let r = RTensor::wedge(Algebra3::abelian(2), 0, 1).unwrap();
        let b = cocycle_form(&r).unwrap();
        assert_eq!(b.matrix()[(0, 1)], int(-1));
        assert_eq!(b.matrix()[(1, 0)], int(1));
        let s = RTensor::wedge(n4(), 0, 1).unwrap();
        assert!(cocycle_form(&s).is_err());
    }

    #[test]
    fn biconditional_on_n4() {
        let r = wedges(&n4(), &[(0, 1), (2, 3)]);
        let report = cocycle_form_check(&r).unwrap();
        assert!(report.passed);
        assert!(report.clause("chybe (informational)").unwrap().passed);
    }

    #[test]
    fn dual_bracket_formula_on_coboundary() {
        let a = n4().direct_sum(&Algebra3::abelian(1));
        let r = wedges(&a, &[(0, 1), (0, 2), (1, 4)]);
        let c = coboundary_cobracket(&r).unwrap();
        assert!(dual_bracket_formula(&r, &c, false).passed);
        assert!(verify_residual(&r).unwrap().passed);
    }
}
