//! Representations of 3-Hom-Lie algebras.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactlin::{nonzeros, unit_vec, Mat, Rat};
use crate::homlie::{check_algebra, first_difference, Algebra3, AlgebraChecks};
use crate::report::{CheckReport, Report, Witness};

/// A representation `(V, ρ, A)` of a 3-Hom-Lie algebra: `ρ(e_i, e_j)` acts on
/// `V = Q^vdim` and `A` is the twist of `V`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rep3 {
    algebra: Algebra3,
    vdim: usize,
    // indexed i * dim + j
    rho: Vec<Mat>,
    twist: Mat,
}

impl Rep3 {
    /// `rho[i * dim + j]` is `ρ(e_i, e_j)`. Must satisfy `ρ(i,j) = -ρ(j,i)`.
    pub fn new(algebra: Algebra3, rho: Vec<Mat>, twist: Mat) -> Result<Self> {
        let n = algebra.dim();
        let m = twist.rows();
        if twist.cols() != m || m == 0 {
            return Err(Error::Shape(format!("representation twist is {}x{}", twist.rows(), twist.cols())));
        }
        if rho.len() != n * n {
            return Err(Error::Shape(format!("{} action matrices for an algebra of dimension {n}", rho.len())));
        }
        if let Some(bad) = rho.iter().position(|r| r.rows() != m || r.cols() != m) {
            return Err(Error::Shape(format!("action matrix {} is not {m}x{m}", bad)));
        }
        for i in 0..n {
            for j in i..n {
                let neg = -&rho[j * n + i];
                if let Some((p, q)) = first_difference(&rho[i * n + j], &neg) {
                    return Err(Error::Precondition {
                        reason: "action is not skew in its two arguments".into(),
                        witness: Some(Witness::scalar(&[i, j, p, q], rho[i * n + j][(p, q)].clone(), neg[(p, q)].clone())),
                    });
                }
            }
        }
        Ok(Rep3 { algebra, vdim: m, rho, twist })
    }

    /// Builds ρ from the entries with `i < j`; the rest follows by skewness.
    pub fn from_upper(algebra: Algebra3, vdim: usize, upper: Vec<(usize, usize, Mat)>, twist: Mat) -> Result<Self> {
        let n = algebra.dim();
        let mut rho = vec![Mat::zeros(vdim, vdim); n * n];
        for (i, j, m) in upper {
            if i >= j || j >= n {
                return Err(Error::Shape(format!("action entry ({},{}) must have i < j <= {n}", i + 1, j + 1)));
            }
            if m.rows() != vdim || m.cols() != vdim {
                return Err(Error::Shape(format!("action ({},{}) is {}x{}, expected {vdim}x{vdim}", i + 1, j + 1, m.rows(), m.cols())));
            }
            rho[j * n + i] = -&m;
            rho[i * n + j] = m;
        }
        Rep3::new(algebra, rho, twist)
    }

    /// The zero action on `Q^vdim` with the given twist.
    pub fn zero(algebra: Algebra3, twist: Mat) -> Result<Self> {
        let m = twist.rows();
        let n = algebra.dim();
        Rep3::new(algebra, vec![Mat::zeros(m, m); n * n], twist)
    }

    pub fn algebra(&self) -> &Algebra3 {
        &self.algebra
    }

    pub fn vdim(&self) -> usize {
        self.vdim
    }

    pub fn twist(&self) -> &Mat {
        &self.twist
    }

    pub fn rho(&self, i: usize, j: usize) -> &Mat {
        &self.rho[i * self.algebra.dim() + j]
    }

    pub fn is_zero(&self) -> bool {
        self.rho.iter().all(Mat::is_zero)
    }

    /// `ρ(x, y)` for coordinate vectors.
    pub fn rho_vec(&self, x: &[Rat], y: &[Rat]) -> Mat {
        let mut out = Mat::zeros(self.vdim, self.vdim);
        for (a, xa) in nonzeros(x) {
            for (b, yb) in nonzeros(y) {
                if a == b {
                    continue;
                }
                let c = xa * yb;
                let r = self.rho(a, b);
                if !r.is_zero() {
                    out = &out + &r.scale(&c);
                }
            }
        }
        out
    }
}

fn mat_witness(t: &[usize], lhs: &Mat, rhs: &Mat) -> Witness {
    Witness::new(t, lhs.entries().to_vec(), rhs.entries().to_vec())
}

/// Checks the three defining equalities of a representation on basis tuples:
///
/// * `ρ(αu, αv) A = A ρ(u, v)`
/// * `ρ([x,y,z], αu) A = ρ(αy,αz)ρ(x,u) + ρ(αz,αx)ρ(y,u) + ρ(αx,αy)ρ(z,u)`
/// * `ρ(αx,αy)ρ(z,u) = ρ(αz,αu)ρ(x,y) + ρ([x,y,z],αu)A + ρ(αz,[x,y,u])A`
pub fn check_representation(r: &Rep3) -> Report {
    let a = r.algebra();
    let n = a.dim();
    let alpha: Vec<_> = (0..n).map(|i| a.twist_col(i)).collect();
    // ρ(αu, αv)
    let ra: Vec<Vec<Mat>> = (0..n).map(|u| (0..n).map(|v| r.rho_vec(&alpha[u], &alpha[v])).collect()).collect();
    // ρ(e_l, αu)
    let rl: Vec<Vec<Mat>> = (0..n).map(|l| (0..n).map(|u| r.rho_vec(&unit_vec(n, l), &alpha[u])).collect()).collect();
    let bracket_alpha = |x: usize, y: usize, z: usize, u: usize| -> Mat {
        let mut m = Mat::zeros(r.vdim(), r.vdim());
        for (l, c) in a.structure(x, y, z) {
            m = &m + &rl[*l][u].scale(c);
        }
        m
    };
    let big_a = r.twist();
    let mut report = Report::new("representation");

    let mut checked = 0;
    let mut witness = None;
    'r1: for u in 0..n {
        for v in u + 1..n {
            checked += 1;
            let lhs = &ra[u][v] * big_a;
            let rhs = big_a * r.rho(u, v);
            if lhs != rhs {
                witness = Some(mat_witness(&[u, v], &lhs, &rhs));
                break 'r1;
            }
        }
    }
    report.push(CheckReport::from_result("twist_compatible", checked, witness));

    let mut checked = 0;
    let mut witness = None;
    'r2: for x in 0..n {
        for y in x + 1..n {
            for z in y + 1..n {
                for u in 0..n {
                    checked += 1;
                    let lhs = &bracket_alpha(x, y, z, u) * big_a;
                    let rhs = &(&(&ra[y][z] * r.rho(x, u)) + &(&ra[z][x] * r.rho(y, u))) + &(&ra[x][y] * r.rho(z, u));
                    if lhs != rhs {
                        witness = Some(mat_witness(&[x, y, z, u], &lhs, &rhs));
                        break 'r2;
                    }
                }
            }
        }
    }
    report.push(CheckReport::from_result("bracket_action", checked, witness));

    let mut checked = 0;
    let mut witness = None;
    'r3: for x in 0..n {
        for y in x + 1..n {
            for z in 0..n {
                for u in z + 1..n {
                    checked += 1;
                    let lhs = &ra[x][y] * r.rho(z, u);
                    let inner = &bracket_alpha(x, y, z, u) - &bracket_alpha(x, y, u, z);
                    let rhs = &(&ra[z][u] * r.rho(x, y)) + &(&inner * big_a);
                    if lhs != rhs {
                        witness = Some(mat_witness(&[x, y, z, u], &lhs, &rhs));
                        break 'r3;
                    }
                }
            }
        }
    }
    report.push(CheckReport::from_result("action_product", checked, witness));
    report
}

pub(crate) fn require_representation(r: &Rep3, what: &str) -> Result<()> {
    let rep = check_representation(r);
    match rep.first_failure() {
        None => Ok(()),
        Some(c) => Err(Error::failed_check(format!("{what}: representation clause `{}` fails", c.name), c)),
    }
}

/// `ad(e_i, e_j) = [e_i, e_j, ·]` on the algebra itself, with twist α.
pub fn adjoint_rep(a: &Algebra3) -> Result<Rep3> {
    crate::homlie::require_algebra(a, AlgebraChecks::MULTIPLICATIVE, "adjoint representation")?;
    let n = a.dim();
    let rho = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).map(|(i, j)| a.ad_matrix(i, j)).collect();
    Rep3::new(a.clone(), rho, a.twist().clone())
}

/// The dual representation `ρ*(x,y) = -ρ(x,y)^T`, `A* = A^T`, together with
/// the checker verdict on it.
pub fn dual_representation(r: &Rep3) -> Result<(Rep3, Report)> {
    require_representation(r, "dual representation")?;
    let rho = r.rho.iter().map(|m| -&m.transpose()).collect();
    let dual = Rep3::new(r.algebra.clone(), rho, r.twist.transpose())?;
    let mut report = check_representation(&dual);
    report.title = "dual representation".into();
    if !report.passed {
        report.note("the transposed dual is not a representation for this twist");
    }
    Ok((dual, report))
}

/// Bracket on `L ⊕ V` extending the bracket of `L` by
/// `[x, y, v] = ρ(x, y) v` and skew-symmetry; brackets with two or more
/// entries in `V` vanish. Twist `α ⊕ A`.
pub fn semidirect_sum(r: &Rep3) -> Result<Algebra3> {
    require_representation(r, "semidirect sum")?;
    let a = r.algebra();
    let n = a.dim();
    let mut entries = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                for (l, c) in a.structure(i, j, k) {
                    entries.push((i, j, k, *l, c.clone()));
                }
            }
            let m = r.rho(i, j);
            for k in 0..r.vdim() {
                for l in 0..r.vdim() {
                    if !m[(l, k)].is_zero() {
                        entries.push((i, j, n + k, n + l, m[(l, k)].clone()));
                    }
                }
            }
        }
    }
    let out = Algebra3::from_structure_constants(n + r.vdim(), entries, a.twist().direct_sum(r.twist()))?;
    Ok(out.with_label(format!("{}+rep", a.label())))
}

/// Convenience: the checker verdict on a semidirect sum.
pub fn check_semidirect(r: &Rep3) -> Result<Report> {
    Ok(check_algebra(&semidirect_sum(r)?, AlgebraChecks::MULTIPLICATIVE))
}
