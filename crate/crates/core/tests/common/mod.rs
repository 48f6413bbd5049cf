//! Random generators and brute-force oracles shared by the integration
//! suites.
#![allow(dead_code)]

use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use trihom::bialgebra::{coadjoint, Cobracket};
use trihom::exactlin::{frac, int, mat_inverse, nullspace, unit_vec, Mat, Rat, Tensor4};
use trihom::fixtures::{a4, graded_prelie, n4, n4_twisted};
use trihom::homlie::Algebra3;
use trihom::prelie::PreLie3;
use trihom::reps::{adjoint_rep, Rep3};
use trihom::yangbaxter::RTensor;

pub use rand::SeedableRng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn small_rat(rng: &mut ChaCha8Rng) -> Rat {
    frac(rng.gen_range(-3..=3), *[1, 1, 2].choose(rng).unwrap())
}

pub fn nonzero_rat(rng: &mut ChaCha8Rng) -> Rat {
    loop {
        let r = small_rat(rng);
        if !r.is_zero() {
            return r;
        }
    }
}

/// Unit lower-triangular times unit upper-triangular, so always invertible.
pub fn invertible(rng: &mut ChaCha8Rng, n: usize) -> Mat {
    let mut l = Mat::identity(n);
    let mut u = Mat::identity(n);
    for i in 0..n {
        for j in 0..i {
            if rng.gen_bool(0.4) {
                l[(i, j)] = int(rng.gen_range(-2..=2));
            }
            if rng.gen_bool(0.4) {
                u[(j, i)] = int(rng.gen_range(-2..=2));
            }
        }
    }
    &l * &u
}

/// `[[A, 0], [b, det A]]`, the general morphism shape of N4.
pub fn n4_morphism(rng: &mut ChaCha8Rng) -> Mat {
    let mut m = Mat::zeros(4, 4);
    for i in 0..3 {
        for j in 0..3 {
            m[(i, j)] = small_rat(rng);
        }
        m[(3, i)] = small_rat(rng);
    }
    let a = m.block(0, 0, 3, 3);
    m[(3, 3)] = det3(&a);
    m
}

fn det3(a: &Mat) -> Rat {
    let e = |i: usize, j: usize| a[(i, j)].clone();
    e(0, 0) * (e(1, 1) * e(2, 2) - e(1, 2) * e(2, 1)) - e(0, 1) * (e(1, 0) * e(2, 2) - e(1, 2) * e(2, 0))
        + e(0, 2) * (e(1, 0) * e(2, 1) - e(1, 1) * e(2, 0))
}

/// `±` a signed permutation of determinant one.
pub fn a4_morphism(rng: &mut ChaCha8Rng) -> Mat {
    loop {
        let mut perm: Vec<usize> = (0..4).collect();
        perm.shuffle(rng);
        let mut m = Mat::zeros(4, 4);
        for (i, &p) in perm.iter().enumerate() {
            m[(p, i)] = int(if rng.gen_bool(0.5) { 1 } else { -1 });
        }
        if det(&m) == Rat::one() {
            return if rng.gen_bool(0.5) { m } else { -&m };
        }
    }
}

pub fn det(m: &Mat) -> Rat {
    let n = m.rows();
    let mut a = m.clone();
    let mut d = Rat::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !a[(r, c)].is_zero()) else { return Rat::zero() };
        if p != c {
            for j in 0..n {
                let t = a[(p, j)].clone();
                a[(p, j)] = a[(c, j)].clone();
                a[(c, j)] = t;
            }
            d = -d;
        }
        let piv = a[(c, c)].clone();
        d *= &piv;
        for r in c + 1..n {
            let f = &a[(r, c)] / &piv;
            for j in c..n {
                let v = &f * &a[(c, j)];
                a[(r, j)] -= v;
            }
        }
    }
    d
}

/// An identity-twist algebra together with one of its morphisms.
pub fn algebra_with_morphism(rng: &mut ChaCha8Rng) -> (Algebra3, Mat) {
    let kind = rng.gen_range(0..4);
    let extra = rng.gen_range(0..=2);
    let (mut a, mut phi) = match kind {
        0 | 1 => (n4(), n4_morphism(rng)),
        _ => (a4(), a4_morphism(rng)),
    };
    if extra > 0 {
        a = a.direct_sum(&Algebra3::abelian(extra));
        let mut b = Mat::zeros(extra, extra);
        for i in 0..extra {
            for j in 0..extra {
                b[(i, j)] = small_rat(rng);
            }
        }
        phi = phi.direct_sum(&b);
    }
    if kind % 2 == 1 {
        let p = invertible(rng, a.dim());
        let pinv = mat_inverse(&p).unwrap();
        a = a.change_basis(&p).unwrap();
        phi = &(&pinv * &phi) * &p;
    }
    (a, phi)
}

/// A multiplicative algebra of dimension at most `max_dim`: N4, A4, a Yau
/// twist of N4, small direct sums and basis changes of these.
pub fn multiplicative_algebra(rng: &mut ChaCha8Rng, max_dim: usize) -> Algebra3 {
    loop {
        let a = match rng.gen_range(0..5) {
            0 => n4(),
            1 => a4(),
            2 => n4_twisted(nonzero_rat(rng), nonzero_rat(rng), nonzero_rat(rng)),
            3 => n4().direct_sum(&Algebra3::abelian(rng.gen_range(1..=2))),
            _ => a4().direct_sum(&Algebra3::abelian(1)),
        };
        let a = if rng.gen_bool(0.3) { a.change_basis(&invertible(rng, a.dim())).unwrap() } else { a };
        if a.dim() <= max_dim {
            return a;
        }
    }
}

pub fn rep_direct_sum(r: &Rep3, s: &Rep3) -> Rep3 {
    let n = r.algebra().dim();
    let rho = (0..n * n).map(|k| r.rho(k / n, k % n).direct_sum(s.rho(k / n, k % n))).collect();
    Rep3::new(r.algebra().clone(), rho, r.twist().direct_sum(s.twist())).unwrap()
}

pub fn rep_conjugate(r: &Rep3, q: &Mat) -> Rep3 {
    let qi = mat_inverse(q).unwrap();
    let n = r.algebra().dim();
    let rho = (0..n * n).map(|k| &(&qi * r.rho(k / n, k % n)) * q).collect();
    Rep3::new(r.algebra().clone(), rho, &(&qi * r.twist()) * q).unwrap()
}

/// A random graded pre-Lie algebra with twist `±1` on the generators.
pub fn graded(rng: &mut ChaCha8Rng) -> PreLie3 {
    let low = rng.gen_range(2..=3);
    let high = rng.gen_range(1..=2);
    let mut ents = Vec::new();
    for _ in 0..rng.gen_range(1..=5) {
        let i = rng.gen_range(0..low);
        let j = (i + rng.gen_range(1..low)) % low;
        ents.push((i, j, rng.gen_range(0..low), rng.gen_range(0..high), nonzero_rat(rng)));
    }
    let s = if rng.gen_bool(0.5) { int(1) } else { int(-1) };
    let mut seen = std::collections::BTreeSet::new();
    ents.retain(|(i, j, k, l, _)| seen.insert((*i.min(j), *i.max(j), *k, *l)));
    graded_prelie(low, high, ents, s).unwrap()
}

pub fn left_rep(p: &PreLie3) -> Rep3 {
    let n = p.dim();
    let rho = (0..n * n).map(|k| p.left_matrix(k / n, k % n)).collect();
    Rep3::new(trihom::prelie::subadjacent(p).unwrap(), rho, p.twist().clone()).unwrap()
}

/// A valid representation of a random algebra.
pub fn algebra_with_rep(rng: &mut ChaCha8Rng) -> Rep3 {
    let base = match rng.gen_range(0..4) {
        0 => {
            let a = multiplicative_algebra(rng, 6);
            adjoint_rep(&a).unwrap()
        }
        1 => {
            let (a, _) = algebra_with_morphism(rng);
            coadjoint(&a)
        }
        2 => left_rep(&graded(rng)),
        _ => {
            let a = multiplicative_algebra(rng, 5);
            let m = rng.gen_range(1..=3);
            Rep3::zero(a, invertible(rng, m)).unwrap()
        }
    };
    let base = if rng.gen_bool(0.3) && base.vdim() <= 4 {
        let extra = Rep3::zero(base.algebra().clone(), Mat::identity(rng.gen_range(1..=2))).unwrap();
        rep_direct_sum(&base, &extra)
    } else {
        base
    };
    if rng.gen_bool(0.5) {
        let q = invertible(rng, base.vdim());
        rep_conjugate(&base, &q)
    } else {
        base
    }
}

/// Random element of the space of skew, α-invariant matrices.
pub fn admissible_r(rng: &mut ChaCha8Rng, a: &Algebra3) -> RTensor {
    let n = a.dim();
    let alpha = a.twist();
    // unknown p*n+q is R[p][q]
    let mut rows = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let mut row = vec![Rat::zero(); n * n];
            row[i * n + j] += Rat::one();
            row[j * n + i] += Rat::one();
            rows.push(row);
            // (α R α^T)[i][j] - R[i][j]
            let mut row = vec![Rat::zero(); n * n];
            for p in 0..n {
                for q in 0..n {
                    row[p * n + q] += &alpha[(i, p)] * &alpha[(j, q)];
                }
            }
            row[i * n + j] -= Rat::one();
            rows.push(row);
        }
    }
    let sys = Mat::from_rows(rows).unwrap();
    let basis = nullspace(&sys);
    let mut v = vec![Rat::zero(); n * n];
    for b in &basis {
        if rng.gen_bool(0.6) {
            let c = int(rng.gen_range(-2..=2));
            for (x, y) in v.iter_mut().zip(b) {
                *x += &c * y;
            }
        }
    }
    let mut m = Mat::zeros(n, n);
    for p in 0..n {
        for q in 0..n {
            m[(p, q)] = v[p * n + q].clone();
        }
    }
    RTensor::new(a.clone(), m).unwrap()
}

fn outer4(a: &[Rat], b: &[Rat], c: &[Rat], d: &[Rat], coef: &Rat, t: &mut Tensor4) {
    let n = a.len();
    for i in (0..n).filter(|&i| !a[i].is_zero()) {
        for j in (0..n).filter(|&j| !b[j].is_zero()) {
            for k in (0..n).filter(|&k| !c[k].is_zero()) {
                for l in (0..n).filter(|&l| !d[l].is_zero()) {
                    t.add_at([i, j, k, l], &(coef * &a[i] * &b[j] * &c[k] * &d[l]));
                }
            }
        }
    }
}

/// `[[r, r, r]]` summed term by term over the rank-one pieces
/// `r = Σ c_pq e_p⊗e_q`.
pub fn brute_triple(r: &RTensor) -> Tensor4 {
    let a = r.base();
    let n = a.dim();
    let e = |i| unit_vec(n, i);
    let al = |i| a.twist_col(i);
    let mut t = Tensor4::cube(n);
    let mut pairs = Vec::new();
    for p in 0..n {
        for q in 0..n {
            if !r.entries()[(p, q)].is_zero() {
                pairs.push((p, q, r.entries()[(p, q)].clone()));
            }
        }
    }
    for (p1, q1, c1) in &pairs {
        for (p2, q2, c2) in &pairs {
            for (p3, q3, c3) in &pairs {
                let c = c1 * c2 * c3;
                outer4(&a.bracket_vec(&e(*p1), &e(*p2), &e(*p3)), &al(*q1), &al(*q2), &al(*q3), &c, &mut t);
                outer4(&al(*p1), &a.bracket_vec(&e(*q1), &e(*p2), &e(*p3)), &al(*q2), &al(*q3), &c, &mut t);
                outer4(&al(*p1), &al(*p2), &a.bracket_vec(&e(*q1), &e(*q2), &e(*p3)), &al(*q3), &c, &mut t);
                outer4(&al(*p1), &al(*p2), &al(*p3), &a.bracket_vec(&e(*q1), &e(*q2), &e(*q3)), &c, &mut t);
            }
        }
    }
    t
}

/// `r(ξ)` for the dual basis vector `ξ = e_i*`: `Σ_q r_iq e_q`.
pub fn r_of(r: &RTensor, i: usize) -> Vec<Rat> {
    r.entries().row(i).to_vec()
}

/// Adds one alternating dual structure constant, so the dual bracket stays
/// skew and only the deeper identities can break.
pub fn corrupt(c: &Cobracket, rng: &mut ChaCha8Rng) -> Cobracket {
    let n = c.base().dim();
    let mut idx: Vec<usize> = (0..n).collect();
    idx.shuffle(rng);
    let (i, j, l, k) = (idx[0], idx[1], idx[2], rng.gen_range(0..n));
    let mut d = c.delta().clone();
    for (p, s) in [([i, j, l], 1), ([j, i, l], -1), ([i, l, j], -1), ([l, j, i], -1), ([j, l, i], 1), ([l, i, j], 1)] {
        d.add_at([p[0], p[1], p[2], k], &int(s));
    }
    Cobracket::new(c.base().clone(), d).unwrap()
}

pub mod criteria;
