//! 3-Hom-Lie algebras given by structure constants.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactlin::{axpy, is_zero_vec, nonzeros, nullspace, unit_vec, zero_vec, Mat, Rat, Tensor4, Vector};
use crate::report::{CheckReport, Report, Witness};
use crate::symplectic::BilForm;

/// A 3-ary bracket `[e_i, e_j, e_k] = Σ_l c_ijk^l e_l` together with a twist
/// map α.
///
/// The bracket is stored for every index order. Skew-symmetry is not assumed
/// by the constructors; [`check_algebra`] validates it.
#[derive(Clone, Debug)]
pub struct Algebra3 {
    dim: usize,
    bracket: Tensor4,
    twist: Mat,
    label: String,
    basis: Vec<String>,
    // sparse copy of the bracket fibres, indexed (i * dim + j) * dim + k
    table: Vec<Vec<(usize, Rat)>>,
}

impl PartialEq for Algebra3 {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.bracket == other.bracket && self.twist == other.twist
    }
}

impl Eq for Algebra3 {}

impl Algebra3 {
    pub fn new(bracket: Tensor4, twist: Mat) -> Result<Self> {
        let [a, b, c, d] = bracket.dims();
        if a != b || b != c || c != d {
            return Err(Error::Shape(format!("bracket tensor has dims {:?}", bracket.dims())));
        }
        if a == 0 {
            return Err(Error::Shape("algebra dimension must be positive".into()));
        }
        if twist.rows() != a || twist.cols() != a {
            return Err(Error::Shape(format!(
                "twist is {}x{} but the algebra has dimension {a}",
                twist.rows(),
                twist.cols()
            )));
        }
        let mut table = Vec::with_capacity(a * a * a);
        for i in 0..a {
            for j in 0..a {
                for k in 0..a {
                    table.push(nonzeros(bracket.fibre(i, j, k)).map(|(l, v)| (l, v.clone())).collect());
                }
            }
        }
        Ok(Algebra3 {
            dim: a,
            bracket,
            twist,
            label: String::new(),
            basis: (1..=a).map(|i| format!("e{i}")).collect(),
            table,
        })
    }

    /// Builds the bracket from entries `(i, j, k, l, c)` meaning
    /// `[e_i, e_j, e_k]` has coefficient `c` on `e_l` (0-based indices). Each
    /// entry is spread over all six orderings of `(i, j, k)` with the sign of
    /// the permutation; entries with a repeated index are rejected.
    pub fn from_structure_constants<I>(dim: usize, entries: I, twist: Mat) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, usize, usize, Rat)>,
    {
        let mut t = Tensor4::cube(dim);
        for (i, j, k, l, c) in entries {
            if i >= dim || j >= dim || k >= dim || l >= dim {
                return Err(Error::Shape(format!("index out of range in ({i},{j},{k},{l}) for dimension {dim}")));
            }
            if i == j || j == k || i == k {
                return Err(Error::Shape(format!("repeated index in bracket entry ({},{},{})", i + 1, j + 1, k + 1)));
            }
            let neg = -c.clone();
            for (idx, s) in [
                ([i, j, k, l], &c),
                ([j, k, i, l], &c),
                ([k, i, j, l], &c),
                ([j, i, k, l], &neg),
                ([i, k, j, l], &neg),
                ([k, j, i, l], &neg),
            ] {
                t.add_at(idx, s);
            }
        }
        Algebra3::new(t, twist)
    }

    /// Zero bracket with the given twist.
    pub fn abelian_with_twist(twist: Mat) -> Result<Self> {
        Algebra3::new(Tensor4::cube(twist.rows()), twist)
    }

    pub fn abelian(n: usize) -> Self {
        Algebra3::abelian_with_twist(Mat::identity(n)).expect("square identity").with_label(format!("abelian{n}"))
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn with_basis(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.dim {
            return Err(Error::Shape(format!("{} basis names for dimension {}", names.len(), self.dim)));
        }
        self.basis = names;
        Ok(self)
    }

    /// Same bracket, different twist.
    pub fn with_twist(&self, twist: Mat) -> Result<Self> {
        let a = Algebra3::new(self.bracket.clone(), twist)?;
        Ok(Algebra3 { label: self.label.clone(), basis: self.basis.clone(), ..a })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn bracket(&self) -> &Tensor4 {
        &self.bracket
    }

    pub fn twist(&self) -> &Mat {
        &self.twist
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis
    }

    pub fn is_abelian(&self) -> bool {
        self.bracket.is_zero()
    }

    /// Nonzero coefficients of `[e_i, e_j, e_k]`.
    pub fn structure(&self, i: usize, j: usize, k: usize) -> &[(usize, Rat)] {
        &self.table[(i * self.dim + j) * self.dim + k]
    }

    pub fn bracket_basis(&self, i: usize, j: usize, k: usize) -> Vector {
        self.bracket.fibre(i, j, k).to_vec()
    }

    /// Trilinear extension of the bracket to coordinate vectors.
    pub fn bracket_vec(&self, x: &[Rat], y: &[Rat], z: &[Rat]) -> Vector {
        let mut out = zero_vec(self.dim);
        for (a, xa) in nonzeros(x) {
            for (b, yb) in nonzeros(y) {
                if a == b {
                    continue;
                }
                let xy = xa * yb;
                for (c, zc) in nonzeros(z) {
                    let s = self.structure(a, b, c);
                    if s.is_empty() {
                        continue;
                    }
                    let coef = &xy * zc;
                    for (l, v) in s {
                        out[*l] += &coef * v;
                    }
                }
            }
        }
        out
    }

    pub fn apply_twist(&self, v: &[Rat]) -> Vector {
        self.twist.mul_vec(v)
    }

    /// `α(e_i)`.
    pub fn twist_col(&self, i: usize) -> Vector {
        self.twist.column(i)
    }

    /// Matrix of `z ↦ [e_i, e_j, z]`.
    pub fn ad_matrix(&self, i: usize, j: usize) -> Mat {
        let mut m = Mat::zeros(self.dim, self.dim);
        for k in 0..self.dim {
            for (l, v) in self.structure(i, j, k) {
                m[(*l, k)] = v.clone();
            }
        }
        m
    }

    /// Matrix of `z ↦ [x, y, z]`.
    pub fn ad_vec(&self, x: &[Rat], y: &[Rat]) -> Mat {
        let mut m = Mat::zeros(self.dim, self.dim);
        for (a, xa) in nonzeros(x) {
            for (b, yb) in nonzeros(y) {
                if a == b {
                    continue;
                }
                let c = xa * yb;
                for k in 0..self.dim {
                    for (l, v) in self.structure(a, b, k) {
                        m[(*l, k)] += &c * v;
                    }
                }
            }
        }
        m
    }

    /// `c · [·,·,·]`, same twist.
    pub fn scaled(&self, c: &Rat) -> Self {
        let a = Algebra3::new(self.bracket.scale(c), self.twist.clone()).expect("shape preserved");
        Algebra3 { label: self.label.clone(), basis: self.basis.clone(), ..a }
    }

    /// Bracket and twist expressed in the basis given by the columns of `p`
    /// (which must be invertible): `c'(x,y,z) = p⁻¹[p x, p y, p z]`,
    /// `α' = p⁻¹ α p`.
    pub fn change_basis(&self, p: &Mat) -> Result<Self> {
        let pinv = crate::exactlin::mat_inverse(p)?;
        let n = self.dim;
        let cols: Vec<Vector> = (0..n).map(|i| p.column(i)).collect();
        let mut t = Tensor4::cube(n);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let v = pinv.mul_vec(&self.bracket_vec(&cols[i], &cols[j], &cols[k]));
                    for (l, x) in v.into_iter().enumerate() {
                        t.set([i, j, k, l], x);
                    }
                }
            }
        }
        let twist = &(&pinv * &self.twist) * p;
        Ok(Algebra3::new(t, twist)?.with_label(self.label.clone()))
    }

    /// Direct sum of two algebras (brackets and twists block-diagonal).
    pub fn direct_sum(&self, other: &Algebra3) -> Self {
        let n = self.dim;
        let m = other.dim;
        let mut t = Tensor4::cube(n + m);
        for (off, alg) in [(0, self), (n, other)] {
            for i in 0..alg.dim {
                for j in 0..alg.dim {
                    for k in 0..alg.dim {
                        for (l, v) in alg.structure(i, j, k) {
                            t.set([off + i, off + j, off + k, off + l], v.clone());
                        }
                    }
                }
            }
        }
        Algebra3::new(t, self.twist.direct_sum(&other.twist)).expect("consistent shapes")
    }

    /// Restriction of the bracket to basis vectors `offset..offset+len`,
    /// projected back onto that block.
    pub fn restrict(&self, offset: usize, len: usize) -> Result<Self> {
        let mut t = Tensor4::cube(len);
        for i in 0..len {
            for j in 0..len {
                for k in 0..len {
                    for (l, v) in self.structure(offset + i, offset + j, offset + k) {
                        if *l >= offset && *l < offset + len {
                            t.set([i, j, k, *l - offset], v.clone());
                        }
                    }
                }
            }
        }
        Algebra3::new(t, self.twist.block(offset, offset, len, len))
    }
}

/// Which clauses [`check_algebra`] evaluates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AlgebraChecks {
    pub skew: bool,
    pub hom_jacobi: bool,
    pub multiplicative: bool,
    pub regular: bool,
}

impl AlgebraChecks {
    pub const ALL: AlgebraChecks = AlgebraChecks { skew: true, hom_jacobi: true, multiplicative: true, regular: true };
    /// The defining axioms only: alternating bracket and Hom-Jacobi identity.
    pub const AXIOMS: AlgebraChecks =
        AlgebraChecks { skew: true, hom_jacobi: true, multiplicative: false, regular: false };
    /// Axioms plus multiplicativity of the twist.
    pub const MULTIPLICATIVE: AlgebraChecks =
        AlgebraChecks { skew: true, hom_jacobi: true, multiplicative: true, regular: false };
}

/// First `(i, j, k)` whose fibre breaks alternation under a transposition.
pub fn check_skew(a: &Algebra3) -> CheckReport {
    let n = a.dim();
    let t = a.bracket();
    let mut checked = 0;
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                checked += 1;
                let here = t.fibre(i, j, k);
                for other in [t.fibre(j, i, k), t.fibre(i, k, j)] {
                    if here.iter().zip(other).any(|(x, y)| *x != -y.clone()) {
                        let rhs = other.iter().map(|y| -y.clone()).collect();
                        return CheckReport::fail("skew", Witness::new(&[i, j, k], here.to_vec(), rhs), checked);
                    }
                }
            }
        }
    }
    CheckReport::pass("skew", checked)
}

/// `q[u][v]` is the matrix of `z ↦ [α e_u, α e_v, z]`.
pub(crate) fn twisted_ad_table(a: &Algebra3) -> Vec<Vec<Mat>> {
    let n = a.dim();
    let alpha: Vec<Vector> = (0..n).map(|i| a.twist_col(i)).collect();
    (0..n).map(|u| (0..n).map(|v| a.ad_vec(&alpha[u], &alpha[v])).collect()).collect()
}

/// Hom-Jacobi identity on basis tuples with `x < y` and `u < v < w`; both
/// sides are alternating in those groups once the bracket is skew, so this
/// covers every instance and finds the lexicographically first violation.
pub fn check_hom_jacobi(a: &Algebra3) -> CheckReport {
    let n = a.dim();
    let q = twisted_ad_table(a);
    let mut checked = 0;
    for x in 0..n {
        for y in x + 1..n {
            let d: Vec<Vector> = (0..n).map(|u| a.bracket_basis(x, y, u)).collect();
            for u in 0..n {
                for v in u + 1..n {
                    for w in v + 1..n {
                        checked += 1;
                        let inner = a.bracket_basis(u, v, w);
                        let lhs = q[x][y].mul_vec(&inner);
                        let mut rhs = q[v][w].mul_vec(&d[u]);
                        let t2 = q[w][u].mul_vec(&d[v]);
                        let t3 = q[u][v].mul_vec(&d[w]);
                        axpy(&mut rhs, &Rat::one(), &t2);
                        axpy(&mut rhs, &Rat::one(), &t3);
                        if lhs != rhs {
                            return CheckReport::fail("hom_jacobi", Witness::new(&[x, y, u, v, w], lhs, rhs), checked);
                        }
                    }
                }
            }
        }
    }
    CheckReport::pass("hom_jacobi", checked)
}

/// `φ[x,y,z] = [φx, φy, φz]` on basis triples `i < j < k`.
pub fn check_morphism(a: &Algebra3, phi: &Mat, name: &str) -> CheckReport {
    let n = a.dim();
    let cols: Vec<Vector> = (0..n).map(|i| phi.column(i)).collect();
    let mut checked = 0;
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                checked += 1;
                let lhs = phi.mul_vec(&a.bracket_basis(i, j, k));
                let rhs = a.bracket_vec(&cols[i], &cols[j], &cols[k]);
                if lhs != rhs {
                    return CheckReport::fail(name, Witness::new(&[i, j, k], lhs, rhs), checked);
                }
            }
        }
    }
    CheckReport::pass(name, checked)
}

/// Runs the requested axiom clauses. Hom-Jacobi and multiplicativity are only
/// evaluated on a skew bracket; on skew failure they are skipped with a note.
pub fn check_algebra(a: &Algebra3, flags: AlgebraChecks) -> Report {
    let mut report = Report::new(if a.label().is_empty() { "algebra".to_string() } else { format!("algebra {}", a.label()) });
    let skew = check_skew(a);
    let skew_ok = skew.passed;
    if flags.skew || flags.hom_jacobi || flags.multiplicative {
        report.push(skew);
    }
    if !skew_ok {
        if flags.hom_jacobi || flags.multiplicative {
            report.note("bracket is not alternating; remaining identity checks skipped");
        }
    } else {
        if flags.hom_jacobi {
            report.push(check_hom_jacobi(a));
        }
        if flags.multiplicative {
            report.push(check_morphism(a, a.twist(), "multiplicative"));
        }
    }
    if flags.regular {
        report.push(CheckReport::fact("regular", a.twist().is_invertible()));
    }
    report
}

/// Rejects unless `a` satisfies the chosen axioms.
pub(crate) fn require_algebra(a: &Algebra3, flags: AlgebraChecks, what: &str) -> Result<()> {
    let r = check_algebra(a, flags);
    match r.first_failure() {
        None if r.passed => Ok(()),
        Some(c) => Err(Error::failed_check(format!("{what}: clause `{}` fails", c.name), c)),
        None => Err(Error::precondition(format!("{what}: invalid algebra"))),
    }
}

fn require_square(m: &Mat, n: usize, what: &str) -> Result<()> {
    if m.rows() != n || m.cols() != n {
        return Err(Error::Shape(format!("{what} is {}x{}, expected {n}x{n}", m.rows(), m.cols())));
    }
    Ok(())
}

fn bracket_through(a: &Algebra3, maps: [&Mat; 3]) -> Tensor4 {
    let n = a.dim();
    let cols: [Vec<Vector>; 3] = maps.map(|m| (0..n).map(|i| m.column(i)).collect());
    let mut t = Tensor4::cube(n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let v = a.bracket_vec(&cols[0][i], &cols[1][j], &cols[2][k]);
                for (l, x) in v.into_iter().enumerate() {
                    if !x.is_zero() {
                        t.set([i, j, k, l], x);
                    }
                }
            }
        }
    }
    t
}

/// Twists a 3-Lie algebra (identity twist) along an algebra morphism φ:
/// `[x,y,z]_φ = [φx, φy, φz]` with twist φ.
pub fn yau_twist(a: &Algebra3, morph: &Mat) -> Result<Algebra3> {
    require_square(morph, a.dim(), "morphism")?;
    if *a.twist() != Mat::identity(a.dim()) {
        return Err(Error::precondition("yau twist expects an algebra with identity twist"));
    }
    let m = check_morphism(a, morph, "morphism");
    if !m.passed {
        return Err(Error::failed_check("map is not a morphism of the bracket", &m));
    }
    let t = bracket_through(a, [morph, morph, morph]);
    Ok(Algebra3::new(t, morph.clone())?.with_label(format!("{}~yau", a.label())))
}

/// Composes the bracket with a morphism β commuting with α:
/// `[x,y,z]_β = [βx, βy, βz]` with twist `α∘β`.
pub fn composition_twist(a: &Algebra3, beta: &Mat) -> Result<Algebra3> {
    require_square(beta, a.dim(), "morphism")?;
    let m = check_morphism(a, beta, "morphism");
    if !m.passed {
        return Err(Error::failed_check("map is not a morphism of the bracket", &m));
    }
    let ab = a.twist() * beta;
    let ba = beta * a.twist();
    if ab != ba {
        let (i, j) = first_difference(&ab, &ba).expect("matrices differ");
        return Err(Error::Precondition {
            reason: "morphism does not commute with the twist".into(),
            witness: Some(Witness::scalar(&[i, j], ab[(i, j)].clone(), ba[(i, j)].clone())),
        });
    }
    let t = bracket_through(a, [beta, beta, beta]);
    Ok(Algebra3::new(t, ab)?.with_label(format!("{}~comp", a.label())))
}

pub(crate) fn first_difference(a: &Mat, b: &Mat) -> Option<(usize, usize)> {
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            if a[(i, j)] != b[(i, j)] {
                return Some((i, j));
            }
        }
    }
    None
}

/// Exhaustive verification that `d` is a derivation commuting with the twist,
/// optionally also skew with respect to a bilinear form.
pub fn check_derivation(a: &Algebra3, d: &Mat, form: Option<&BilForm>) -> Result<Report> {
    let n = a.dim();
    require_square(d, n, "derivation")?;
    let mut report = Report::new("derivation");
    let da = d * a.twist();
    let ad = a.twist() * d;
    report.push(match first_difference(&da, &ad) {
        None => CheckReport::pass("commutes_with_twist", (n * n) as u64),
        Some((i, j)) => CheckReport::fail(
            "commutes_with_twist",
            Witness::scalar(&[i, j], da[(i, j)].clone(), ad[(i, j)].clone()),
            (n * n) as u64,
        ),
    });
    let cols: Vec<Vector> = (0..n).map(|i| d.column(i)).collect();
    let mut witness = None;
    let mut checked = 0;
    'outer: for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                checked += 1;
                let lhs = d.mul_vec(&a.bracket_basis(i, j, k));
                let (ei, ej, ek) = (unit_vec(n, i), unit_vec(n, j), unit_vec(n, k));
                let mut rhs = a.bracket_vec(&cols[i], &ej, &ek);
                axpy(&mut rhs, &Rat::one(), &a.bracket_vec(&ei, &cols[j], &ek));
                axpy(&mut rhs, &Rat::one(), &a.bracket_vec(&ei, &ej, &cols[k]));
                if lhs != rhs {
                    witness = Some(Witness::new(&[i, j, k], lhs, rhs));
                    break 'outer;
                }
            }
        }
    }
    report.push(CheckReport::from_result("leibniz", checked, witness));
    if let Some(b) = form {
        require_square(b.matrix(), n, "bilinear form")?;
        let s = &(&d.transpose() * b.matrix()) + &(b.matrix() * d);
        report.push(match (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).find(|&(i, j)| !s[(i, j)].is_zero()) {
            None => CheckReport::pass("form_skew", (n * n) as u64),
            Some((i, j)) => CheckReport::fail("form_skew", Witness::scalar(&[i, j], s[(i, j)].clone(), Rat::zero()), (n * n) as u64),
        });
    }
    Ok(report)
}

/// Basis of all derivations commuting with α (and, given a form `B`, skew
/// with respect to it). The basis is canonical: the vectorised matrices
/// (row-major) form a reduced echelon system.
pub fn derivation_space(a: &Algebra3, form: Option<&BilForm>) -> Result<Vec<Mat>> {
    let system = derivation_system(a, form)?;
    let n = a.dim();
    Ok(nullspace(&system)
        .into_iter()
        .map(|v| Mat::from_rows(v.chunks(n).map(<[Rat]>::to_vec).collect()).expect("square reshape"))
        .collect())
}

/// Homogeneous linear system whose kernel is the derivation space; unknown
/// `p * n + q` is the entry `D[p][q]`.
pub fn derivation_system(a: &Algebra3, form: Option<&BilForm>) -> Result<Mat> {
    let n = a.dim();
    let var = |p: usize, q: usize| p * n + q;
    let alpha = a.twist();
    let mut rows: Vec<Vector> = Vec::new();
    let mut push = |row: Vector| {
        if !is_zero_vec(&row) {
            rows.push(row);
        }
    };
    for p in 0..n {
        for q in 0..n {
            let mut row = zero_vec(n * n);
            for r in 0..n {
                row[var(p, r)] += &alpha[(r, q)];
                row[var(r, q)] -= &alpha[(p, r)];
            }
            push(row);
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                for l in 0..n {
                    let mut row = zero_vec(n * n);
                    for (p, c) in a.structure(i, j, k) {
                        row[var(l, *p)] += c;
                    }
                    for p in 0..n {
                        row[var(p, i)] -= a.bracket().get([p, j, k, l]);
                        row[var(p, j)] -= a.bracket().get([i, p, k, l]);
                        row[var(p, k)] -= a.bracket().get([i, j, p, l]);
                    }
                    push(row);
                }
            }
        }
    }
    if let Some(b) = form {
        require_square(b.matrix(), n, "bilinear form")?;
        let bm = b.matrix();
        for i in 0..n {
            for j in 0..n {
                let mut row = zero_vec(n * n);
                for p in 0..n {
                    row[var(p, i)] += &bm[(p, j)];
                    row[var(p, j)] += &bm[(i, p)];
                }
                push(row);
            }
        }
    }
    if rows.is_empty() {
        return Ok(Mat::zeros(1, n * n));
    }
    Mat::from_rows(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::int;
    use crate::fixtures::n4;

    #[test]
    fn zero_bracket_passes_everything() {
        for twist in [Mat::identity(3), Mat::diag_i64(&[1, 2, 3])] {
            let a = Algebra3::abelian_with_twist(twist).unwrap();
            assert!(check_algebra(&a, AlgebraChecks::ALL).passed);
        }
    }

    #[test]
    fn n4_passes_with_both_twists() {
        let a = n4();
        let r = check_algebra(&a, AlgebraChecks::ALL);
        assert!(r.passed, "{r}");
        assert_eq!(r.clause("hom_jacobi").unwrap().checked, 6 * 4);
        let b = a.with_twist(Mat::diag_i64(&[2, 2, 2, 8])).unwrap();
        assert!(check_algebra(&b, AlgebraChecks::ALL).passed);
    }

    #[test]
    fn non_morphism_twist_is_not_multiplicative() {
        let b = n4().with_twist(Mat::diag_i64(&[2, 2, 2, 2])).unwrap();
        let r = check_algebra(&b, AlgebraChecks::ALL);
        let m = r.clause("multiplicative").unwrap();
        assert!(!m.passed);
        assert_eq!(m.witness.as_ref().unwrap().tuple, vec![0, 1, 2]);
    }

    #[test]
    fn broken_skew_stops_the_check() {
        let mut t = n4().bracket().clone();
        t.set([1, 0, 2, 3], int(5));
        let a = Algebra3::new(t, Mat::identity(4)).unwrap();
        let r = check_algebra(&a, AlgebraChecks::ALL);
        assert!(!r.passed);
        assert_eq!(r.clause("skew").unwrap().witness.as_ref().unwrap().tuple, vec![0, 1, 2]);
        assert!(r.clause("hom_jacobi").is_none());
    }

    #[test]
    fn repeated_index_rejected() {
        let e = Algebra3::from_structure_constants(3, [(0, 0, 1, 2, int(1))], Mat::identity(3));
        assert!(matches!(e, Err(Error::Shape(_))));
    }

    #[test]
    fn yau_twist_examples() {
        let a = n4();
        assert_eq!(yau_twist(&a, &Mat::identity(4)).unwrap(), a);
        let t = yau_twist(&a, &Mat::diag_i64(&[2, 2, 2, 8])).unwrap();
        assert_eq!(t.bracket_basis(0, 1, 2), vec![int(0), int(0), int(0), int(8)]);
        assert_eq!(t.twist(), &Mat::diag_i64(&[2, 2, 2, 8]));
        assert!(check_algebra(&t, AlgebraChecks::ALL).passed);
        let z = yau_twist(&Algebra3::abelian(3), &Mat::diag_i64(&[1, 5, 7])).unwrap();
        assert!(z.is_abelian());
        assert_eq!(z.twist(), &Mat::diag_i64(&[1, 5, 7]));
    }

    #[test]
    fn yau_twist_rejects_non_morphism() {
        let err = yau_twist(&n4(), &Mat::diag_i64(&[2, 2, 2, 2])).unwrap_err();
        match err {
            Error::Precondition { witness: Some(w), .. } => assert_eq!(w.tuple, vec![0, 1, 2]),
            e => panic!("unexpected {e:?}"),
        }
    }

    #[test]
    fn composition_twist_examples() {
        let a = n4();
        let c = composition_twist(&a, &Mat::identity(4)).unwrap();
        assert_eq!(c, a);
        let beta = Mat::diag_i64(&[2, 2, 2, 8]);
        let c = composition_twist(&a, &beta).unwrap();
        assert_eq!(c.bracket_basis(0, 1, 2), vec![int(0), int(0), int(0), int(8)]);
        assert_eq!(c.twist(), &beta);
        assert!(check_algebra(&c, AlgebraChecks::ALL).passed);
        let z = Algebra3::abelian_with_twist(Mat::diag_i64(&[1, 2])).unwrap();
        let c = composition_twist(&z, &Mat::diag_i64(&[3, 5])).unwrap();
        assert!(c.is_abelian());
        assert_eq!(c.twist(), &Mat::diag_i64(&[3, 10]));
    }

    #[test]
    fn composition_twist_rejects_non_commuting() {
        let a = Algebra3::abelian_with_twist(Mat::diag_i64(&[1, 2])).unwrap();
        let beta = Mat::from_i64(&[&[0, 1], &[1, 0]]);
        assert!(matches!(composition_twist(&a, &beta), Err(Error::Precondition { witness: Some(_), .. })));
    }

    #[test]
    fn derivations_of_abelian_are_gl() {
        assert_eq!(derivation_space(&Algebra3::abelian(3), None).unwrap().len(), 9);
    }

    #[test]
    fn derivation_basis_vectors_verify() {
        let a = n4();
        let basis = derivation_space(&a, None).unwrap();
        assert_eq!(basis.len(), 12);
        for d in &basis {
            assert!(check_derivation(&a, d, None).unwrap().passed);
        }
        let twisted = a.with_twist(Mat::diag_i64(&[2, 2, 2, 8])).unwrap();
        let sub = derivation_space(&twisted, None).unwrap();
        for d in &sub {
            assert!(check_derivation(&twisted, d, None).unwrap().passed);
            assert!(check_derivation(&a, d, None).unwrap().passed);
        }
        assert!(sub.len() < 12);
    }
}
