//! Small named algebras used in examples and tests.

use crate::error::{Error, Result};
use crate::exactlin::{int, Mat, Rat};
use crate::homlie::Algebra3;
use crate::prelie::PreLie3;

/// Four-dimensional nilpotent 3-Lie algebra: `[e1, e2, e3] = e4`, identity
/// twist.
pub fn n4() -> Algebra3 {
    Algebra3::from_structure_constants(4, [(0, 1, 2, 3, int(1))], Mat::identity(4))
        .expect("valid constants")
        .with_label("N4")
}

/// Four-dimensional simple 3-Lie algebra `[e_i, e_j, e_k] = ε_ijkl e_l`,
/// identity twist.
pub fn a4() -> Algebra3 {
    Algebra3::from_structure_constants(
        4,
        [(0, 1, 2, 3, int(1)), (0, 1, 3, 2, int(-1)), (0, 2, 3, 1, int(1)), (1, 2, 3, 0, int(-1))],
        Mat::identity(4),
    )
    .expect("valid constants")
    .with_label("A4")
}

/// Yau twist of [`n4`] along the diagonal morphism `diag(a1, a2, a3, a1 a2 a3)`.
pub fn n4_twisted(a1: Rat, a2: Rat, a3: Rat) -> Algebra3 {
    let a4 = &(&a1 * &a2) * &a3;
    let alpha = Mat::diag(&[a1, a2, a3, a4]);
    crate::homlie::yau_twist(&n4(), &alpha).expect("diagonal morphism").with_label("N4~diag")
}

/// Pre-Lie product on four generators with `{e2, e3, e1} = e4`, whose
/// sub-adjacent algebra is [`n4`].
pub fn n4_prelie() -> PreLie3 {
    PreLie3::from_entries(4, [(1, 2, 0, 3, int(1))], Mat::identity(4)).expect("valid entries").with_label("N4-pre")
}

/// Two-step graded pre-Lie product: `{x, y, z}` is nonzero only for
/// `x, y, z` among the first `low` generators and lands in the remaining
/// ones. Every composite term vanishes, so any skew choice of `entries` is
/// valid; the twist `s` on low and `s^3` on high is multiplicative.
pub fn graded_prelie<I>(low: usize, high: usize, entries: I, s: Rat) -> Result<PreLie3>
where
    I: IntoIterator<Item = (usize, usize, usize, usize, Rat)>,
{
    let n = low + high;
    let mut shifted = Vec::new();
    for (i, j, k, l, c) in entries {
        if i >= low || j >= low || k >= low || l >= high {
            return Err(Error::Shape(format!("graded entry ({i},{j},{k},{l}) outside {low}+{high}")));
        }
        shifted.push((i, j, k, low + l, c));
    }
    let s3 = &(&s * &s) * &s;
    let mut d = vec![s; low];
    d.extend(std::iter::repeat_n(s3, high));
    Ok(PreLie3::from_entries(n, shifted, Mat::diag(&d))?.with_label("graded"))
}
