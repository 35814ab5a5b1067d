//! Exterior algebra over the flat coordinate frames R^7 and R^8.
//!
//! A [`Form`] is a finite map from [`Blade`]s to coefficients in any
//! [`Scalar`](crate::scalars::Scalar) ring. Blades are stored as sorted
//! index sets; every sign comes from counting inversions of the raw index
//! sequence, so equal forms are equal term by term.

mod form;
pub mod notation;

use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_traits::{One, Signed, Zero};

use crate::scalars::{rat, Rational};

pub use form::Form;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExteriorError {
    #[error("frame mismatch: {left} vs {right}")]
    FrameMismatch { left: Frame, right: Frame },
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("interior product of a degree-0 form")]
    InteriorOfScalar,
    #[error("vector has {found} components, frame needs {expected}")]
    VectorLength { expected: usize, found: usize },
    #[error("index {index} out of range for a frame of dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("blade has degree {found}, form has degree {expected}")]
    BladeDegree { expected: usize, found: usize },
    #[error("form has a blade outside the support of the volume form")]
    OutsideVolume,
    #[error("hodge star needs metric entries of magnitude one")]
    NonUnitMetric,
    #[error("degree {0} exceeds the frame dimension")]
    DegreeTooLarge(usize),
    #[error("parse error: {0}")]
    Parse(String),
}

/// The two flat frames used throughout.
///
/// R^7 is `(x1, x2, x3, y0, y1, y2, y3)` and R^8 is
/// `(x0, x1, x2, x3, y0, y1, y2, y3)`, so each volume form is the
/// ascending top blade.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Frame {
    R7,
    R8,
}

const R7_NAMES: [&str; 7] = ["x1", "x2", "x3", "y0", "y1", "y2", "y3"];
const R8_NAMES: [&str; 8] = ["x0", "x1", "x2", "x3", "y0", "y1", "y2", "y3"];

impl Frame {
    pub fn dim(self) -> usize {
        match self {
            Frame::R7 => 7,
            Frame::R8 => 8,
        }
    }

    pub fn names(self) -> &'static [&'static str] {
        match self {
            Frame::R7 => &R7_NAMES,
            Frame::R8 => &R8_NAMES,
        }
    }

    pub fn coord_name(self, index: usize) -> &'static str {
        self.names()[index]
    }

    pub fn index_of(self, name: &str) -> Option<usize> {
        self.names().iter().position(|n| *n == name)
    }

    /// The ascending top blade.
    pub fn top_blade(self) -> Blade {
        Blade((1u16 << self.dim()) - 1)
    }

    pub fn label(self) -> &'static str {
        match self {
            Frame::R7 => "R7",
            Frame::R8 => "R8",
        }
    }

    /// All blades of the given degree in canonical ascending order.
    pub fn blades(self, degree: usize) -> Vec<Blade> {
        let n = self.dim();
        let mut out: Vec<Blade> = (0u16..(1 << n)).filter(|m| m.count_ones() as usize == degree).map(Blade).collect();
        out.sort();
        out
    }
}

impl fmt::Display for Frame {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// A strictly increasing set of frame indices, stored as a bit mask.
///
/// Ordering is lexicographic on the index sequence, which is the order the
/// blades are printed in.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Blade(u16);

impl Blade {
    pub const SCALAR: Blade = Blade(0);

    pub fn from_mask(mask: u16) -> Self {
        Blade(mask)
    }

    pub fn mask(self) -> u16 {
        self.0
    }

    pub fn single(index: usize) -> Self {
        Blade(1 << index)
    }

    /// Builds a blade from an arbitrary index sequence, returning the sign of
    /// the sorting permutation, or `None` if an index repeats (the wedge
    /// product then vanishes).
    pub fn from_sequence(indices: &[usize]) -> Option<(i32, Blade)> {
        let mut mask = 0u16;
        let mut inversions = 0usize;
        for (pos, &i) in indices.iter().enumerate() {
            assert!(i < 16, "blade index {i} too large");
            if mask & (1 << i) != 0 {
                return None;
            }
            mask |= 1 << i;
            inversions += indices[..pos].iter().filter(|&&j| j > i).count();
        }
        let sign = if inversions.is_multiple_of(2) { 1 } else { -1 };
        Some((sign, Blade(mask)))
    }

    pub fn degree(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains(self, index: usize) -> bool {
        self.0 & (1 << index) != 0
    }

    pub fn is_subset_of(self, other: Blade) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn indices(self) -> impl Iterator<Item = usize> + Clone {
        let m = self.0;
        (0..16).filter(move |i| m & (1 << i) != 0)
    }

    pub fn max_index(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(15 - self.0.leading_zeros() as usize)
        }
    }

    /// Position of `index` among the blade's indices.
    fn rank_of(self, index: usize) -> usize {
        (self.0 & ((1 << index) - 1)).count_ones() as usize
    }

    pub fn without(self, index: usize) -> Blade {
        Blade(self.0 & !(1 << index))
    }

    pub fn complement_in(self, support: Blade) -> Blade {
        Blade(support.0 & !self.0)
    }

    /// Sign of `self ∧ other` relative to the sorted union, `None` if they overlap.
    pub fn wedge_sign(self, other: Blade) -> Option<i32> {
        if self.0 & other.0 != 0 {
            return None;
        }
        let mut swaps = 0u32;
        let mut b = other.0;
        while b != 0 {
            let j = b.trailing_zeros();
            swaps += (self.0 >> (j + 1)).count_ones();
            b &= b - 1;
        }
        Some(if swaps.is_multiple_of(2) { 1 } else { -1 })
    }

    pub fn union(self, other: Blade) -> Blade {
        Blade(self.0 | other.0)
    }

    /// Sign picked up by contracting the `index` slot out of this blade:
    /// `e_index ⌟ e_I = sign · e_{I∖index}`.
    pub fn contraction_sign(self, index: usize) -> i32 {
        if self.rank_of(index).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    pub fn display(self, frame: Frame) -> BladeDisplay {
        BladeDisplay { blade: self, frame }
    }
}

impl Ord for Blade {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.indices().cmp(other.indices()))
    }
}

impl PartialOrd for Blade {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Blade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.indices()).finish()
    }
}

/// Renders a blade as `dx1 dy2 dy3` in a given frame.
pub struct BladeDisplay {
    blade: Blade,
    frame: Frame,
}

impl fmt::Display for BladeDisplay {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.blade == Blade::SCALAR {
            return f.write_str("1");
        }
        for (n, i) in self.blade.indices().enumerate() {
            if n > 0 {
                f.write_str(" ")?;
            }
            write!(f, "d{}", self.frame.coord_name(i))?;
        }
        Ok(())
    }
}

/// An oriented volume element on a coordinate subspace: `sign` times the
/// ascending blade of `support`. Used for `∗₇`, `∗₈` and the partial stars
/// `∗₆` on the C^3 slice and `∗₄` on an R^4 block.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Volume {
    pub frame: Frame,
    pub support: Blade,
    pub sign: i32,
}

impl Volume {
    /// The ascending top blade of the frame times `sign`.
    pub fn top(frame: Frame, sign: i32) -> Self {
        assert!(sign == 1 || sign == -1);
        Volume { frame, support: frame.top_blade(), sign }
    }

    /// The volume `dx^{i0} ∧ dx^{i1} ∧ ...` in the given index order.
    pub fn ordered(frame: Frame, order: &[usize]) -> Self {
        let (sign, support) = Blade::from_sequence(order).expect("volume indices must be distinct");
        for i in support.indices() {
            assert!(i < frame.dim(), "volume index out of range");
        }
        Volume { frame, support, sign }
    }

    pub fn dim(&self) -> usize {
        self.support.degree()
    }

    pub fn form<S: crate::scalars::Scalar>(&self) -> Form<S> {
        Form::monomial(self.frame, self.support, S::from_int(self.sign as i64))
    }
}

/// A diagonal bilinear form on a frame.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MetricData {
    diagonal: Vec<Rational>,
}

impl MetricData {
    pub fn euclidean(frame: Frame) -> Self {
        MetricData { diagonal: (0..frame.dim()).map(|_| Rational::one()).collect() }
    }

    pub fn diagonal(entries: Vec<Rational>) -> Self {
        assert!(entries.iter().all(|e| !e.is_zero()), "metric diagonal must be nonzero");
        MetricData { diagonal: entries }
    }

    pub fn from_signs(signs: &[i32]) -> Self {
        Self::diagonal(signs.iter().map(|&s| rat(s as i64)).collect())
    }

    pub fn entries(&self) -> &[Rational] {
        &self.diagonal
    }

    pub fn dim(&self) -> usize {
        self.diagonal.len()
    }

    /// `(positive, negative)` counts.
    pub fn signature(&self) -> (usize, usize) {
        let pos = self.diagonal.iter().filter(|d| d.is_positive()).count();
        (pos, self.diagonal.len() - pos)
    }

    /// `g^{II}`: the induced product on the covector blade `I`.
    pub(crate) fn blade_weight(&self, blade: Blade) -> Rational {
        let mut w = Rational::one();
        for i in blade.indices() {
            w /= &self.diagonal[i];
        }
        w
    }

    pub(crate) fn is_unit_on(&self, blade: Blade) -> bool {
        blade.indices().all(|i| self.diagonal[i].abs().is_one())
    }
}
