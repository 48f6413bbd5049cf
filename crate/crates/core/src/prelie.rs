//! 3-Hom-pre-Lie algebras, O-operators and pre-Lie representations.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactlin::{axpy, mat_inverse, nonzeros, Mat, Rat, Tensor4, Vector};
use crate::homlie::{check_algebra, first_difference, Algebra3, AlgebraChecks};
use crate::report::{CheckReport, Report, Witness};
use crate::reps::{check_representation, Rep3};

/// A product `{e_i, e_j, e_k} = Σ_l p_ijk^l e_l` skew in its first two
/// arguments, with a twist.
#[derive(Clone, Debug)]
pub struct PreLie3 {
    dim: usize,
    product: Tensor4,
    twist: Mat,
    label: String,
    table: Vec<Vec<(usize, Rat)>>,
}

impl PartialEq for PreLie3 {
    fn eq(&self, other: &Self) -> bool {
        self.product == other.product && self.twist == other.twist
    }
}

impl Eq for PreLie3 {}

impl PreLie3 {
    pub fn new(product: Tensor4, twist: Mat) -> Result<Self> {
        let [a, b, c, d] = product.dims();
        if a != b || b != c || c != d || a == 0 {
            return Err(Error::Shape(format!("product tensor has dims {:?}", product.dims())));
        }
        if twist.rows() != a || twist.cols() != a {
            return Err(Error::Shape(format!("twist is {}x{}, expected {a}x{a}", twist.rows(), twist.cols())));
        }
        let mut table = Vec::with_capacity(a * a * a);
        for i in 0..a {
            for j in 0..a {
                for k in 0..a {
                    table.push(nonzeros(product.fibre(i, j, k)).map(|(l, v)| (l, v.clone())).collect());
                }
            }
        }
        Ok(PreLie3 { dim: a, product, twist, label: String::new(), table })
    }

    /// Entries `(i, j, k, l, c)`: `{e_i, e_j, e_k}` has coefficient `c` on
    /// `e_l`; `{e_j, e_i, e_k}` gets `-c`. Requires `i != j`.
    pub fn from_entries<I>(dim: usize, entries: I, twist: Mat) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, usize, usize, Rat)>,
    {
        let mut t = Tensor4::cube(dim);
        for (i, j, k, l, c) in entries {
            if i >= dim || j >= dim || k >= dim || l >= dim {
                return Err(Error::Shape(format!("index out of range in ({i},{j},{k},{l}) for dimension {dim}")));
            }
            if i == j {
                return Err(Error::Shape(format!("repeated index in product entry ({},{},{})", i + 1, j + 1, k + 1)));
            }
            t.add_at([i, j, k, l], &c);
            t.add_at([j, i, k, l], &-c);
        }
        PreLie3::new(t, twist)
    }

    pub fn zero(n: usize) -> Self {
        PreLie3::new(Tensor4::cube(n), Mat::identity(n)).expect("square")
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn product(&self) -> &Tensor4 {
        &self.product
    }

    pub fn twist(&self) -> &Mat {
        &self.twist
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn structure(&self, i: usize, j: usize, k: usize) -> &[(usize, Rat)] {
        &self.table[(i * self.dim + j) * self.dim + k]
    }

    pub fn product_basis(&self, i: usize, j: usize, k: usize) -> Vector {
        self.product.fibre(i, j, k).to_vec()
    }

    pub fn product_vec(&self, x: &[Rat], y: &[Rat], z: &[Rat]) -> Vector {
        let mut out = vec![Rat::zero(); self.dim];
        for (a, xa) in nonzeros(x) {
            for (b, yb) in nonzeros(y) {
                let xy = xa * yb;
                for (c, zc) in nonzeros(z) {
                    let coef = &xy * zc;
                    for (l, v) in self.structure(a, b, c) {
                        out[*l] += &coef * v;
                    }
                }
            }
        }
        out
    }

    /// `L(e_i, e_j) = {e_i, e_j, ·}`.
    pub fn left_matrix(&self, i: usize, j: usize) -> Mat {
        let mut m = Mat::zeros(self.dim, self.dim);
        for k in 0..self.dim {
            for (l, v) in self.structure(i, j, k) {
                m[(*l, k)] = v.clone();
            }
        }
        m
    }

    /// `R(e_i, e_j) = {·, e_i, e_j}`.
    pub fn right_matrix(&self, i: usize, j: usize) -> Mat {
        let mut m = Mat::zeros(self.dim, self.dim);
        for k in 0..self.dim {
            for (l, v) in self.structure(k, i, j) {
                m[(*l, k)] = v.clone();
            }
        }
        m
    }

    pub fn is_zero(&self) -> bool {
        self.product.is_zero()
    }
}

/// `[x,y,z]_C = {x,y,z} + {y,z,x} + {z,x,y}` with the same twist. No
/// validity check.
pub fn subadjacent_unchecked(p: &PreLie3) -> Algebra3 {
    let n = p.dim();
    let t = p.product();
    let mut c = Tensor4::cube(n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    let v = t.get([i, j, k, l]) + t.get([j, k, i, l]) + t.get([k, i, j, l]);
                    if !v.is_zero() {
                        c.set([i, j, k, l], v);
                    }
                }
            }
        }
    }
    Algebra3::new(c, p.twist().clone()).expect("shapes match").with_label(format!("{}^C", p.label()))
}

/// Checks skewness in the first two arguments, multiplicativity of the twist
/// and that left multiplication is a representation of the sub-adjacent
/// algebra:
///
/// * `{αx,αy,{z,u,v}} = {[x,y,z]_C,αu,αv} + {αz,[x,y,u]_C,αv} + {αz,αu,{x,y,v}}`
/// * `{[x,y,z]_C,αu,αv} = {αx,αy,{z,u,v}} + {αy,αz,{x,u,v}} + {αz,αx,{y,u,v}}`
pub fn check_prelie(p: &PreLie3) -> Report {
    let n = p.dim();
    let t = p.product();
    let mut report = Report::new(if p.label().is_empty() { "pre-lie".to_string() } else { format!("pre-lie {}", p.label()) });

    let mut checked = 0;
    let mut witness = None;
    'skew: for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                checked += 1;
                let a = t.fibre(i, j, k);
                let b = t.fibre(j, i, k);
                if a.iter().zip(b).any(|(x, y)| *x != -y.clone()) {
                    witness = Some(Witness::new(&[i, j, k], a.to_vec(), b.iter().map(|y| -y.clone()).collect()));
                    break 'skew;
                }
            }
        }
    }
    let skew_ok = witness.is_none();
    report.push(CheckReport::from_result("skew", checked, witness));
    if !skew_ok {
        report.note("product is not skew in its first two arguments; remaining identity checks skipped");
        return report;
    }

    let c = subadjacent_unchecked(p);
    let alpha: Vec<Vector> = (0..n).map(|i| p.twist().column(i)).collect();
    // {αx, αy, ·}
    let la: Vec<Vec<Mat>> = (0..n)
        .map(|x| (0..n).map(|y| left_of(p, &alpha[x], &alpha[y])).collect())
        .collect();
    let prod = |x: usize, y: usize, z: usize| p.product_basis(x, y, z);

    let mut checked = 0;
    let mut witness = None;
    'mult: for i in 0..n {
        for j in i + 1..n {
            for k in 0..n {
                checked += 1;
                let lhs = p.twist().mul_vec(&prod(i, j, k));
                let rhs = la[i][j].mul_vec(&alpha[k]);
                if lhs != rhs {
                    witness = Some(Witness::new(&[i, j, k], lhs, rhs));
                    break 'mult;
                }
            }
        }
    }
    report.push(CheckReport::from_result("multiplicative", checked, witness));

    let one = Rat::one();
    let mut checked = 0;
    let mut witness = None;
    'first: for x in 0..n {
        for y in x + 1..n {
            for z in 0..n {
                for u in z + 1..n {
                    let cz = c.bracket_basis(x, y, z);
                    let cu = c.bracket_basis(x, y, u);
                    for v in 0..n {
                        checked += 1;
                        let lhs = la[x][y].mul_vec(&prod(z, u, v));
                        let mut rhs = p.product_vec(&cz, &alpha[u], &alpha[v]);
                        axpy(&mut rhs, &one, &p.product_vec(&alpha[z], &cu, &alpha[v]));
                        axpy(&mut rhs, &one, &la[z][u].mul_vec(&prod(x, y, v)));
                        if lhs != rhs {
                            witness = Some(Witness::new(&[x, y, z, u, v], lhs, rhs));
                            break 'first;
                        }
                    }
                }
            }
        }
    }
    report.push(CheckReport::from_result("left_action", checked, witness));

    let mut checked = 0;
    let mut witness = None;
    'second: for x in 0..n {
        for y in x + 1..n {
            for z in y + 1..n {
                let cxyz = c.bracket_basis(x, y, z);
                for u in 0..n {
                    for v in 0..n {
                        checked += 1;
                        let lhs = p.product_vec(&cxyz, &alpha[u], &alpha[v]);
                        let mut rhs = la[x][y].mul_vec(&prod(z, u, v));
                        axpy(&mut rhs, &one, &la[y][z].mul_vec(&prod(x, u, v)));
                        axpy(&mut rhs, &one, &la[z][x].mul_vec(&prod(y, u, v)));
                        if lhs != rhs {
                            witness = Some(Witness::new(&[x, y, z, u, v], lhs, rhs));
                            break 'second;
                        }
                    }
                }
            }
        }
    }
    report.push(CheckReport::from_result("commutator_action", checked, witness));
    report
}

fn left_of(p: &PreLie3, x: &[Rat], y: &[Rat]) -> Mat {
    let n = p.dim();
    let mut m = Mat::zeros(n, n);
    for (a, xa) in nonzeros(x) {
        for (b, yb) in nonzeros(y) {
            if a != b {
                m = &m + &p.left_matrix(a, b).scale(&(xa * yb));
            }
        }
    }
    m
}

fn require_prelie(p: &PreLie3, what: &str) -> Result<()> {
    let r = check_prelie(p);
    match r.first_failure() {
        None => Ok(()),
        Some(c) => Err(Error::failed_check(format!("{what}: pre-Lie clause `{}` fails", c.name), c)),
    }
}

/// The sub-adjacent 3-Hom-Lie algebra of a valid pre-Lie product.
pub fn subadjacent(p: &PreLie3) -> Result<Algebra3> {
    require_prelie(p, "sub-adjacent algebra")?;
    Ok(subadjacent_unchecked(p))
}

/// A linear map `T: V → L` together with a representation `(V, ρ, A)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OOperator {
    pub rep: Rep3,
    pub t: Mat,
}

impl OOperator {
    pub fn new(rep: Rep3, t: Mat) -> Result<Self> {
        let n = rep.algebra().dim();
        if t.rows() != n || t.cols() != rep.vdim() {
            return Err(Error::Shape(format!("T is {}x{}, expected {n}x{}", t.rows(), t.cols(), rep.vdim())));
        }
        Ok(OOperator { rep, t })
    }
}

/// `α∘T = T∘A` and `[Tu,Tv,Tw] = T(ρ(Tu,Tv)w + ρ(Tv,Tw)u + ρ(Tw,Tu)v)` on
/// basis triples of the carrier.
pub fn check_o_operator(o: &OOperator) -> Result<Report> {
    let rep = check_representation(&o.rep);
    if let Some(c) = rep.first_failure() {
        return Err(Error::failed_check(format!("O-operator: representation clause `{}` fails", c.name), c));
    }
    let a = o.rep.algebra();
    let m = o.rep.vdim();
    let mut report = Report::new("o-operator");
    let at = a.twist() * &o.t;
    let ta = &o.t * o.rep.twist();
    report.push(match first_difference(&at, &ta) {
        None => CheckReport::pass("twist_intertwined", (at.rows() * at.cols()) as u64),
        Some((i, j)) => CheckReport::fail(
            "twist_intertwined",
            Witness::scalar(&[i, j], at[(i, j)].clone(), ta[(i, j)].clone()),
            (at.rows() * at.cols()) as u64,
        ),
    });
    let tc: Vec<Vector> = (0..m).map(|u| o.t.column(u)).collect();
    let one = Rat::one();
    let mut checked = 0;
    let mut witness = None;
    'o: for u in 0..m {
        for v in u + 1..m {
            let ruv = o.rep.rho_vec(&tc[u], &tc[v]);
            for w in v + 1..m {
                checked += 1;
                let lhs = a.bracket_vec(&tc[u], &tc[v], &tc[w]);
                let mut inner = ruv.column(w);
                axpy(&mut inner, &one, &o.rep.rho_vec(&tc[v], &tc[w]).column(u));
                axpy(&mut inner, &one, &o.rep.rho_vec(&tc[w], &tc[u]).column(v));
                let rhs = o.t.mul_vec(&inner);
                if lhs != rhs {
                    witness = Some(Witness::new(&[u, v, w], lhs, rhs));
                    break 'o;
                }
            }
        }
    }
    report.push(CheckReport::from_result("o_operator", checked, witness));
    Ok(report)
}

fn require_o_operator(o: &OOperator, what: &str) -> Result<()> {
    let r = check_o_operator(o)?;
    match r.first_failure() {
        None => Ok(()),
        Some(c) => Err(Error::failed_check(format!("{what}: O-operator clause `{}` fails", c.name), c)),
    }
}

/// `{u, v, w} = ρ(Tu, Tv) w` on the carrier, twist `A`.
pub fn induced_prelie_on_module(o: &OOperator) -> Result<PreLie3> {
    require_o_operator(o, "induced pre-Lie")?;
    let m = o.rep.vdim();
    let tc: Vec<Vector> = (0..m).map(|u| o.t.column(u)).collect();
    let mut t = Tensor4::cube(m);
    for u in 0..m {
        for v in 0..m {
            let r = o.rep.rho_vec(&tc[u], &tc[v]);
            for w in 0..m {
                for l in 0..m {
                    if !r[(l, w)].is_zero() {
                        t.set([u, v, w, l], r[(l, w)].clone());
                    }
                }
            }
        }
    }
    Ok(PreLie3::new(t, o.rep.twist().clone())?.with_label("induced"))
}

/// `{x, y, z} = T ρ(x, y) T⁻¹ z` on the base algebra for an invertible
/// O-operator.
pub fn compatible_prelie(o: &OOperator) -> Result<PreLie3> {
    if !o.t.is_square() {
        return Err(Error::precondition("compatible pre-Lie needs a square T"));
    }
    let tinv = mat_inverse(&o.t).map_err(|_| Error::precondition("T is singular"))?;
    require_o_operator(o, "compatible pre-Lie")?;
    let n = o.t.rows();
    let mut t = Tensor4::cube(n);
    for x in 0..n {
        for y in 0..n {
            let m = &(&o.t * o.rep.rho(x, y)) * &tinv;
            for z in 0..n {
                for l in 0..n {
                    if !m[(l, z)].is_zero() {
                        t.set([x, y, z, l], m[(l, z)].clone());
                    }
                }
            }
        }
    }
    Ok(PreLie3::new(t, o.rep.algebra().twist().clone())?.with_label(format!("{}~compatible", o.rep.algebra().label())))
}

/// A representation `(V, ρ, μ, B)` of a pre-Lie algebra: `ρ(e_i, e_j)` is
/// skew in `(i, j)`, `μ(e_i, e_j)` unconstrained.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PreLieRep {
    base: PreLie3,
    vdim: usize,
    rho: Vec<Mat>,
    mu: Vec<Mat>,
    twist: Mat,
}

impl PreLieRep {
    pub fn new(base: PreLie3, rho: Vec<Mat>, mu: Vec<Mat>, twist: Mat) -> Result<Self> {
        let n = base.dim();
        let m = twist.rows();
        if twist.cols() != m || m == 0 {
            return Err(Error::Shape("carrier twist must be square".into()));
        }
        if rho.len() != n * n || mu.len() != n * n {
            return Err(Error::Shape(format!("expected {} action matrices per family", n * n)));
        }
        if rho.iter().chain(&mu).any(|r| r.rows() != m || r.cols() != m) {
            return Err(Error::Shape(format!("action matrices must be {m}x{m}")));
        }
        for i in 0..n {
            for j in i..n {
                let neg = -&rho[j * n + i];
                if let Some((p, q)) = first_difference(&rho[i * n + j], &neg) {
                    return Err(Error::Precondition {
                        reason: "rho is not skew in its two arguments".into(),
                        witness: Some(Witness::scalar(&[i, j, p, q], rho[i * n + j][(p, q)].clone(), neg[(p, q)].clone())),
                    });
                }
            }
        }
        Ok(PreLieRep { base, vdim: m, rho, mu, twist })
    }

    pub fn zero(base: PreLie3, twist: Mat) -> Result<Self> {
        let n = base.dim();
        let m = twist.rows();
        PreLieRep::new(base, vec![Mat::zeros(m, m); n * n], vec![Mat::zeros(m, m); n * n], twist)
    }

    /// Left and right multiplications of a pre-Lie algebra on itself:
    /// `ρ(x, y) z = {x, y, z}`, `μ(x, y) z = {z, x, y}`.
    pub fn regular(p: &PreLie3) -> Self {
        let n = p.dim();
        let idx = (0..n).flat_map(|i| (0..n).map(move |j| (i, j)));
        let rho = idx.clone().map(|(i, j)| p.left_matrix(i, j)).collect();
        let mu = idx.map(|(i, j)| p.right_matrix(i, j)).collect();
        PreLieRep::new(p.clone(), rho, mu, p.twist().clone()).expect("skew product gives skew left action")
    }

    pub fn base(&self) -> &PreLie3 {
        &self.base
    }

    pub fn vdim(&self) -> usize {
        self.vdim
    }

    pub fn twist(&self) -> &Mat {
        &self.twist
    }

    pub fn rho(&self, i: usize, j: usize) -> &Mat {
        &self.rho[i * self.base.dim() + j]
    }

    pub fn mu(&self, i: usize, j: usize) -> &Mat {
        &self.mu[i * self.base.dim() + j]
    }

    pub fn is_zero(&self) -> bool {
        self.rho.iter().chain(&self.mu).all(Mat::is_zero)
    }

    /// `(ρ − μτ + μ)(e_i, e_j) = ρ(i,j) − μ(j,i) + μ(i,j)`.
    pub fn combined(&self, i: usize, j: usize) -> Mat {
        &(self.rho(i, j) - self.mu(j, i)) + self.mu(i, j)
    }

    /// Replaces ρ by `ρ − μτ + μ` and μ by zero.
    pub fn collapsed(&self) -> PreLieRep {
        let n = self.base.dim();
        let m = self.vdim;
        let rho = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).map(|(i, j)| self.combined(i, j)).collect();
        PreLieRep::new(self.base.clone(), rho, vec![Mat::zeros(m, m); n * n], self.twist.clone())
            .expect("combined action is skew")
    }
}

fn family_vec(f: impl Fn(usize, usize) -> Mat, x: &[Rat], y: &[Rat], m: usize) -> Mat {
    let mut out = Mat::zeros(m, m);
    for (a, xa) in nonzeros(x) {
        for (b, yb) in nonzeros(y) {
            let fm = f(a, b);
            if !fm.is_zero() {
                out = &out + &fm.scale(&(xa * yb));
            }
        }
    }
    out
}

/// The product on `L ⊕ V`:
/// `{x1+v1, x2+v2, x3+v3} = {x1,x2,x3} + ρ(x1,x2)v3 + μ(x2,x3)v1 − μ(x1,x3)v2`,
/// twist `α ⊕ B`.
pub fn semidirect_prelie(r: &PreLieRep) -> PreLie3 {
    let p = r.base();
    let n = p.dim();
    let m = r.vdim();
    let mut t = Tensor4::cube(n + m);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for (l, c) in p.structure(i, j, k) {
                    t.set([i, j, k, *l], c.clone());
                }
            }
            let rho = r.rho(i, j);
            let mu = r.mu(i, j);
            for k in 0..m {
                for l in 0..m {
                    if !rho[(l, k)].is_zero() {
                        t.set([i, j, n + k, n + l], rho[(l, k)].clone());
                    }
                    if !mu[(l, k)].is_zero() {
                        t.set([n + k, i, j, n + l], mu[(l, k)].clone());
                        t.set([i, n + k, j, n + l], -mu[(l, k)].clone());
                    }
                }
            }
        }
    }
    PreLie3::new(t, p.twist().direct_sum(r.twist())).expect("shapes match").with_label(format!("{}+rep", p.label()))
}

fn mat_witness(t: &[usize], lhs: &Mat, rhs: &Mat) -> Witness {
    Witness::new(t, lhs.entries().to_vec(), rhs.entries().to_vec())
}

/// Literal representation identities for `(ρ, μ)`; each quantifies over all
/// basis 4-tuples. Returned clauses are informational.
fn literal_clauses(r: &PreLieRep) -> Vec<CheckReport> {
    let p = r.base();
    let n = p.dim();
    let m = r.vdim();
    let b = r.twist();
    let c = subadjacent_unchecked(p);
    let alpha: Vec<Vector> = (0..n).map(|i| p.twist().column(i)).collect();
    let rho_a: Vec<Vec<Mat>> =
        (0..n).map(|x| (0..n).map(|y| family_vec(|i, j| r.rho(i, j).clone(), &alpha[x], &alpha[y], m)).collect()).collect();
    let mu_a: Vec<Vec<Mat>> =
        (0..n).map(|x| (0..n).map(|y| family_vec(|i, j| r.mu(i, j).clone(), &alpha[x], &alpha[y], m)).collect()).collect();
    let mu_of = |x: &[Rat], y: &[Rat]| family_vec(|i, j| r.mu(i, j).clone(), x, y, m);
    let comb: Vec<Vec<Mat>> = (0..n).map(|i| (0..n).map(|j| r.combined(i, j)).collect()).collect();

    let mut out = Vec::new();
    let mut sub = Rep3::new(c.clone(), (0..n * n).map(|k| r.rho[k].clone()).collect(), b.clone())
        .map(|rep| check_representation(&rep))
        .unwrap_or_else(|_| Report::new("representation"));
    sub.title = "rho".into();
    for cl in sub.clauses {
        out.push(CheckReport { name: format!("rho.{}", cl.name), ..cl });
    }

    let mut checked = 0;
    let mut witness = None;
    'mu: for x in 0..n {
        for y in 0..n {
            checked += 1;
            let lhs = &mu_a[x][y] * b;
            let rhs = b * r.mu(x, y);
            if lhs != rhs {
                witness = Some(mat_witness(&[x, y], &lhs, &rhs));
                break 'mu;
            }
        }
    }
    out.push(CheckReport::from_result("mu_twist_compatible", checked, witness));

    type Eq<'a> = Box<dyn Fn(usize, usize, usize, usize) -> (Mat, Mat) + 'a>;
    let eqs: Vec<(&str, Eq)> = vec![
        (
            "rho_mu_exchange",
            Box::new(|x1, x2, x3, x4| {
                let lhs = &rho_a[x1][x2] * r.mu(x3, x4);
                let t1 = &mu_a[x3][x4] * &comb[x1][x2];
                let t2 = &mu_of(&c.bracket_basis(x1, x2, x3), &alpha[x4]) * b;
                let t3 = &mu_of(&alpha[x3], &p.product_basis(x1, x2, x4)) * b;
                (lhs, &(&t1 + &t2) + &t3)
            }),
        ),
        (
            "mu_commutator",
            Box::new(|x1, x2, x3, x4| {
                let lhs = &mu_of(&c.bracket_basis(x1, x2, x3), &alpha[x4]) * b;
                let t1 = &rho_a[x1][x2] * r.mu(x3, x4);
                let t2 = &rho_a[x2][x3] * r.mu(x1, x4);
                let t3 = &rho_a[x3][x1] * r.mu(x2, x4);
                (lhs, &(&t1 + &t2) + &t3)
            }),
        ),
        (
            "mu_product",
            Box::new(|x1, x2, x3, x4| {
                let lhs = &mu_of(&alpha[x1], &p.product_basis(x2, x3, x4)) * b;
                let t1 = &mu_a[x3][x4] * &comb[x1][x2];
                let t2 = &mu_a[x2][x4] * &comb[x1][x3];
                let t3 = &rho_a[x2][x3] * r.mu(x1, x4);
                (lhs, &(&t1 - &t2) + &t3)
            }),
        ),
        (
            "mu_combined",
            Box::new(|x1, x2, x3, x4| {
                let lhs = &mu_a[x3][x4] * &comb[x1][x2];
                let t1 = &rho_a[x1][x2] * r.mu(x3, x4);
                let t2 = &mu_of(&alpha[x2], &p.product_basis(x1, x3, x4)) * b;
                let t3 = &mu_of(&alpha[x1], &p.product_basis(x2, x3, x4)) * b;
                (lhs, &(&t1 - &t2) + &t3)
            }),
        ),
    ];
    for (name, f) in eqs {
        let mut checked = 0;
        let mut witness = None;
        'eq: for x1 in 0..n {
            for x2 in 0..n {
                for x3 in 0..n {
                    for x4 in 0..n {
                        checked += 1;
                        let (lhs, rhs) = f(x1, x2, x3, x4);
                        if lhs != rhs {
                            witness = Some(mat_witness(&[x1, x2, x3, x4], &lhs, &rhs));
                            break 'eq;
                        }
                    }
                }
            }
        }
        out.push(CheckReport::from_result(name, checked, witness));
    }
    out
}

/// Two verdicts on a pre-Lie representation. The semidirect product on
/// `L ⊕ V` is run through [`check_prelie`] and decides the
/// result; the literal identities are listed as informational clauses and a
/// note records any disagreement.
pub fn check_prelie_rep(r: &PreLieRep) -> Report {
    let mut report = Report::new("pre-lie representation");
    let semi = check_prelie(&semidirect_prelie(r));
    let operational = semi.passed;
    report.absorb("semidirect", semi);
    let literal = literal_clauses(r);
    let literal_ok = literal.iter().all(|c| c.passed);
    for c in literal {
        report.push_info(c);
    }
    if literal_ok != operational {
        report.note(format!(
            "literal identities {} but the semidirect product {}",
            if literal_ok { "hold" } else { "fail" },
            if operational { "is a pre-Lie algebra" } else { "is not a pre-Lie algebra" }
        ));
    }
    report
}

fn require_prelie_rep(r: &PreLieRep, what: &str) -> Result<()> {
    let rep = check_prelie_rep(r);
    match rep.first_failure() {
        None => Ok(()),
        Some(c) => Err(Error::failed_check(format!("{what}: clause `{}` fails", c.name), c)),
    }
}

/// `ρ − μτ + μ` as a representation of the sub-adjacent algebra, twist `B`.
pub fn subadjacent_rep(r: &PreLieRep) -> Result<Rep3> {
    require_prelie_rep(r, "sub-adjacent representation")?;
    let n = r.base().dim();
    let rho = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).map(|(i, j)| r.combined(i, j)).collect();
    Rep3::new(subadjacent_unchecked(r.base()), rho, r.twist().clone())
}

/// `(ρ* − μ*τ + μ*, −μ*)` on the dual carrier with twist `B^T`, where a star
/// is the negative transpose, with the verdict of [`check_prelie_rep`].
pub fn dual_prelie_rep(r: &PreLieRep) -> Result<(PreLieRep, Report)> {
    require_prelie_rep(r, "dual pre-Lie representation")?;
    let n = r.base().dim();
    let star = |m: &Mat| -&m.transpose();
    let idx: Vec<(usize, usize)> = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect();
    let rho = idx.iter().map(|&(i, j)| &(&star(r.rho(i, j)) - &star(r.mu(j, i))) + &star(r.mu(i, j))).collect();
    let mu = idx.iter().map(|&(i, j)| -&star(r.mu(i, j))).collect();
    let dual = PreLieRep::new(r.base().clone(), rho, mu, r.twist().transpose())?;
    let mut report = check_prelie_rep(&dual);
    report.title = "dual pre-lie representation".into();
    Ok((dual, report))
}

/// Convenience for the semidirect sum of the sub-adjacent representation.
pub fn check_subadjacent_of(p: &PreLie3) -> Report {
    check_algebra(&subadjacent_unchecked(p), AlgebraChecks::MULTIPLICATIVE)
}
