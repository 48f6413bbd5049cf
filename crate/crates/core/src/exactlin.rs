//! Exact rational scalars, dense matrices and rank-4 tensors, plus row
//! reduction over the rationals.
//!
//! Every routine here is exact: there is no tolerance anywhere, a value is
//! zero or it is not.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational number. Always stored in lowest terms with a
/// positive denominator.
pub type Rat = BigRational;

/// Dense vector of rationals in basis coordinates.
pub type Vector = Vec<Rat>;

pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// `p/q`; panics when `q == 0`.
pub fn frac(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

/// Parses `"p/q"` or `"p"`. Whitespace around the value is ignored.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            if q.is_zero() {
                return None;
            }
            Some(Rat::new(p, q))
        }
        None => s.parse::<BigInt>().ok().map(Rat::from_integer),
    }
}

/// Canonical text form: `p/q`, or `p` when the denominator is one.
pub fn fmt_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn zero_vec(n: usize) -> Vector {
    vec![Rat::zero(); n]
}

pub fn unit_vec(n: usize, i: usize) -> Vector {
    let mut v = zero_vec(n);
    v[i] = Rat::one();
    v
}

pub fn is_zero_vec(v: &[Rat]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// `acc += c * v`
pub fn axpy(acc: &mut [Rat], c: &Rat, v: &[Rat]) {
    if c.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a += c * x;
        }
    }
}

pub fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    let mut s = Rat::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            s += x * y;
        }
    }
    s
}

/// Indices and values of the nonzero coordinates.
pub fn nonzeros(v: &[Rat]) -> impl Iterator<Item = (usize, &Rat)> {
    v.iter().enumerate().filter(|(_, x)| !x.is_zero())
}

/// Dense row-major rational matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, data: vec![Rat::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rat::one();
        }
        m
    }

    pub fn scalar(n: usize, c: Rat) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = c.clone();
        }
        m
    }

    pub fn diag(entries: &[Rat]) -> Self {
        let mut m = Mat::zeros(entries.len(), entries.len());
        for (i, e) in entries.iter().enumerate() {
            m[(i, i)] = e.clone();
        }
        m
    }

    pub fn diag_i64(entries: &[i64]) -> Self {
        Mat::diag(&entries.iter().map(|&e| int(e)).collect::<Vec<_>>())
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Shape("ragged matrix rows".into()));
        }
        Ok(Mat { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    /// Convenience for tests and fixtures; panics on ragged input.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Mat::from_rows(rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect())
            .expect("ragged literal matrix")
    }

    /// Matrix whose `j`-th column is `cols[j]`.
    pub fn from_columns(nrows: usize, cols: &[Vector]) -> Self {
        let mut m = Mat::zeros(nrows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            for (i, x) in c.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vector> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn entries(&self) -> &[Rat] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vec(&self.data)
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && *self == self.transpose()
    }

    pub fn is_skew(&self) -> bool {
        self.is_square() && *self == -self.transpose()
    }

    pub fn scale(&self, c: &Rat) -> Mat {
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * c).collect() }
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Vector {
        assert_eq!(v.len(), self.cols, "matrix-vector shape mismatch");
        let mut out = zero_vec(self.rows);
        for (j, x) in nonzeros(v) {
            for (i, o) in out.iter_mut().enumerate() {
                let a = &self.data[i * self.cols + j];
                if !a.is_zero() {
                    *o += a * x;
                }
            }
        }
        out
    }

    /// Matrix product, skipping zero entries of the left factor.
    pub fn matmul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let mut out = Mat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.data[i * self.cols + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other.data[k * other.cols + j];
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }

    /// Block-diagonal sum `self ⊕ other`.
    pub fn direct_sum(&self, other: &Mat) -> Mat {
        let mut m = Mat::zeros(self.rows + other.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m[(i, j)] = self[(i, j)].clone();
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                m[(self.rows + i, self.cols + j)] = other[(i, j)].clone();
            }
        }
        m
    }

    /// Kronecker product; block `(i, j)` is `self[i][j] * other`.
    pub fn kron(&self, other: &Mat) -> Mat {
        let mut m = Mat::zeros(self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                if self[(i, j)].is_zero() {
                    continue;
                }
                for p in 0..other.rows {
                    for q in 0..other.cols {
                        m[(i * other.rows + p, j * other.cols + q)] = &self[(i, j)] * &other[(p, q)];
                    }
                }
            }
        }
        m
    }

    /// Sub-block `rows r0..r0+nr`, `cols c0..c0+nc`.
    pub fn block(&self, r0: usize, c0: usize, nr: usize, nc: usize) -> Mat {
        let mut m = Mat::zeros(nr, nc);
        for i in 0..nr {
            for j in 0..nc {
                m[(i, j)] = self[(r0 + i, c0 + j)].clone();
            }
        }
        m
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref_in_place().len()
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// Gauss-Jordan elimination in place; returns the pivot columns.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self[(i, c)].is_zero()) else {
                continue;
            };
            self.swap_rows(r, p);
            let inv = self[(r, c)].recip();
            for j in c..self.cols {
                let v = &self.data[r * self.cols + j] * &inv;
                self.data[r * self.cols + j] = v;
            }
            for i in 0..self.rows {
                if i == r || self[(i, c)].is_zero() {
                    continue;
                }
                let f = self[(i, c)].clone();
                for j in c..self.cols {
                    let pr = &self.data[r * self.cols + j];
                    if pr.is_zero() {
                        continue;
                    }
                    let d = &f * pr;
                    self.data[i * self.cols + j] -= d;
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl Index<(usize, usize)> for Mat {
    type Output = Rat;
    fn index(&self, (i, j): (usize, usize)) -> &Rat {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Mat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rat {
        &mut self.data[i * self.cols + j]
    }
}

impl Add for &Mat {
    type Output = Mat;
    fn add(self, rhs: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix sum shape mismatch");
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &Mat {
    type Output = Mat;
    fn sub(self, rhs: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix difference shape mismatch");
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Mul for &Mat {
    type Output = Mat;
    fn mul(self, rhs: &Mat) -> Mat {
        self.matmul(rhs)
    }
}

impl Neg for &Mat {
    type Output = Mat;
    fn neg(self) -> Mat {
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| -x).collect() }
    }
}

impl Neg for Mat {
    type Output = Mat;
    fn neg(self) -> Mat {
        -&self
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = self.row(i).iter().map(fmt_rat).collect();
            write!(f, "{}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

/// Dense rank-4 tensor indexed `(i, j, k, l)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Tensor4 {
    dims: [usize; 4],
    data: Vec<Rat>,
}

impl Tensor4 {
    pub fn zeros(dims: [usize; 4]) -> Self {
        Tensor4 { dims, data: vec![Rat::zero(); dims.iter().product()] }
    }

    pub fn cube(n: usize) -> Self {
        Tensor4::zeros([n; 4])
    }

    pub fn dims(&self) -> [usize; 4] {
        self.dims
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vec(&self.data)
    }

    #[inline]
    fn offset(&self, [i, j, k, l]: [usize; 4]) -> usize {
        let [_, b, c, d] = self.dims;
        ((i * b + j) * c + k) * d + l
    }

    pub fn get(&self, idx: [usize; 4]) -> &Rat {
        &self.data[self.offset(idx)]
    }

    pub fn set(&mut self, idx: [usize; 4], v: Rat) {
        let o = self.offset(idx);
        self.data[o] = v;
    }

    pub fn add_at(&mut self, idx: [usize; 4], v: &Rat) {
        let o = self.offset(idx);
        self.data[o] += v;
    }

    /// Contiguous fibre along the last index.
    pub fn fibre(&self, i: usize, j: usize, k: usize) -> &[Rat] {
        let o = self.offset([i, j, k, 0]);
        &self.data[o..o + self.dims[3]]
    }

    pub fn scale(&self, c: &Rat) -> Tensor4 {
        Tensor4 { dims: self.dims, data: self.data.iter().map(|x| x * c).collect() }
    }

    /// First index tuple (lexicographic) holding a nonzero entry.
    pub fn first_nonzero(&self) -> Option<([usize; 4], &Rat)> {
        let [a, b, c, d] = self.dims;
        for i in 0..a {
            for j in 0..b {
                for k in 0..c {
                    for l in 0..d {
                        let v = self.get([i, j, k, l]);
                        if !v.is_zero() {
                            return Some(([i, j, k, l], v));
                        }
                    }
                }
            }
        }
        None
    }
}

/// Outcome of [`solve_linear`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Solution {
    Consistent {
        particular: Vector,
        /// Canonical basis of the kernel: its rows are in reduced echelon form.
        kernel: Vec<Vector>,
    },
    Inconsistent,
}

/// Solves `system · x = rhs` exactly.
pub fn solve_linear(system: &Mat, rhs: &[Rat]) -> Result<Solution> {
    if rhs.len() != system.rows() {
        return Err(Error::Shape(format!(
            "system has {} rows but right-hand side has {} entries",
            system.rows(),
            rhs.len()
        )));
    }
    let n = system.cols();
    let mut aug = Mat::zeros(system.rows(), n + 1);
    for i in 0..system.rows() {
        for j in 0..n {
            aug[(i, j)] = system[(i, j)].clone();
        }
        aug[(i, n)] = rhs[i].clone();
    }
    let pivots = aug.rref_in_place();
    if pivots.last() == Some(&n) {
        return Ok(Solution::Inconsistent);
    }
    let mut particular = zero_vec(n);
    for (r, &c) in pivots.iter().enumerate() {
        particular[c] = aug[(r, n)].clone();
    }
    Ok(Solution::Consistent { particular, kernel: kernel_from_rref(&aug, &pivots, n) })
}

/// Canonical kernel basis of `m` (reduced echelon rows).
pub fn nullspace(m: &Mat) -> Vec<Vector> {
    let mut r = m.clone();
    let pivots = r.rref_in_place();
    kernel_from_rref(&r, &pivots, m.cols())
}

fn kernel_from_rref(rref: &Mat, pivots: &[usize], n: usize) -> Vec<Vector> {
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    if free.is_empty() {
        return Vec::new();
    }
    let basis: Vec<Vector> = free
        .iter()
        .map(|&f| {
            let mut v = zero_vec(n);
            v[f] = Rat::one();
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = -rref[(r, f)].clone();
            }
            v
        })
        .collect();
    echelon_basis(&basis)
}

/// Reduced row echelon form of the span of `vectors`, zero rows dropped.
pub fn echelon_basis(vectors: &[Vector]) -> Vec<Vector> {
    let Some(first) = vectors.first() else {
        return Vec::new();
    };
    let mut m = Mat::from_rows(vectors.to_vec()).expect("vectors of equal length");
    debug_assert_eq!(m.cols(), first.len());
    let k = m.rref_in_place().len();
    (0..k).map(|i| m.row(i).to_vec()).collect()
}

/// Exact inverse, or [`Error::Singular`].
pub fn mat_inverse(m: &Mat) -> Result<Mat> {
    if !m.is_square() {
        return Err(Error::Shape(format!("cannot invert a {}x{} matrix", m.rows(), m.cols())));
    }
    let n = m.rows();
    let mut aug = Mat::zeros(n, 2 * n);
    for i in 0..n {
        for j in 0..n {
            aug[(i, j)] = m[(i, j)].clone();
        }
        aug[(i, n + i)] = Rat::one();
    }
    let pivots = aug.rref_in_place();
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return Err(Error::Singular);
    }
    Ok(aug.block(0, n, n, n))
}

/// True when `v` lies in the span of `basis`.
pub fn in_span(basis: &[Vector], v: &[Rat]) -> bool {
    if basis.is_empty() {
        return is_zero_vec(v);
    }
    let mut rows = basis.to_vec();
    let before = Mat::from_rows(rows.clone()).expect("equal lengths").rank();
    rows.push(v.to_vec());
    Mat::from_rows(rows).expect("equal lengths").rank() == before
}

/// Sign of a rational: -1, 0 or 1.
pub fn sign(r: &Rat) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}
