use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::ops::{Add, BitXor, Neg, Sub};

use super::{Blade, ExteriorError, Frame, MetricData, Volume};
use crate::scalars::{Conjugate, GaussianRational, Polynomial, Rational, Scalar};

/// A homogeneous differential form with constant-frame blades and
/// coefficients in `S`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Form<S> {
    frame: Frame,
    degree: usize,
    terms: BTreeMap<Blade, S>,
}

impl<S: Scalar> Form<S> {
    pub fn zero(frame: Frame, degree: usize) -> Self {
        assert!(degree <= frame.dim(), "degree exceeds frame dimension");
        Form { frame, degree, terms: BTreeMap::new() }
    }

    pub fn scalar(frame: Frame, value: S) -> Self {
        Self::monomial(frame, Blade::SCALAR, value)
    }

    pub fn monomial(frame: Frame, blade: Blade, coeff: S) -> Self {
        let mut f = Self::zero(frame, blade.degree());
        f.add_term(blade, coeff);
        f
    }

    /// The basis 1-form `dx^index`.
    pub fn basis(frame: Frame, index: usize) -> Self {
        assert!(index < frame.dim());
        Self::monomial(frame, Blade::single(index), S::one())
    }

    /// Builds a form from raw terms, validating indices and degree.
    pub fn from_terms<I>(frame: Frame, degree: usize, terms: I) -> Result<Self, ExteriorError>
    where
        I: IntoIterator<Item = (Blade, S)>,
    {
        if degree > frame.dim() {
            return Err(ExteriorError::DegreeTooLarge(degree));
        }
        let mut f = Self::zero(frame, degree);
        for (blade, coeff) in terms {
            if let Some(max) = blade.max_index() {
                if max >= frame.dim() {
                    return Err(ExteriorError::IndexOutOfRange { index: max, dim: frame.dim() });
                }
            }
            if blade.degree() != degree {
                return Err(ExteriorError::BladeDegree { expected: degree, found: blade.degree() });
            }
            f.add_term(blade, coeff);
        }
        Ok(f)
    }

    pub fn frame(&self) -> Frame {
        self.frame
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Blade, &S)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, blade: &Blade) -> S {
        self.terms.get(blade).cloned().unwrap_or_else(S::zero)
    }

    /// Adds `coeff · blade`, dropping the entry if it cancels.
    pub fn add_term(&mut self, blade: Blade, coeff: S) {
        debug_assert_eq!(blade.degree(), self.degree);
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&blade) {
            Some(c) => {
                *c += &coeff;
                if c.is_zero() {
                    self.terms.remove(&blade);
                }
            }
            None => {
                self.terms.insert(blade, coeff);
            }
        }
    }

    fn check_same_shape(&self, other: &Self) -> Result<(), ExteriorError> {
        if self.frame != other.frame {
            return Err(ExteriorError::FrameMismatch { left: self.frame, right: other.frame });
        }
        if self.degree != other.degree {
            return Err(ExteriorError::DegreeMismatch { left: self.degree, right: other.degree });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, ExteriorError> {
        self.check_same_shape(other)?;
        let mut out = self.clone();
        for (b, c) in &other.terms {
            out.add_term(*b, c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, ExteriorError> {
        self.try_add(&other.neg_ref())
    }

    fn neg_ref(&self) -> Self {
        self.map(|c| -c.clone())
    }

    pub fn scale(&self, s: &S) -> Self {
        self.map(|c| c.mul_ref(s))
    }

    pub fn scale_rational(&self, r: &Rational) -> Self {
        self.map(|c| c.scale(r))
    }

    /// Coefficient-wise map into another (or the same) scalar ring.
    pub fn map<T: Scalar, F: FnMut(&S) -> T>(&self, mut f: F) -> Form<T> {
        let mut out = Form::zero(self.frame, self.degree);
        for (b, c) in &self.terms {
            out.add_term(*b, f(c));
        }
        out
    }

    pub fn wedge(&self, other: &Self) -> Result<Self, ExteriorError> {
        if self.frame != other.frame {
            return Err(ExteriorError::FrameMismatch { left: self.frame, right: other.frame });
        }
        let degree = self.degree + other.degree;
        if degree > self.frame.dim() {
            return Err(ExteriorError::DegreeTooLarge(degree));
        }
        let mut out = Form::zero(self.frame, degree);
        for (ba, ca) in &self.terms {
            for (bb, cb) in &other.terms {
                if let Some(sign) = ba.wedge_sign(*bb) {
                    let mut c = ca.mul_ref(cb);
                    if sign < 0 {
                        c = -c;
                    }
                    out.add_term(ba.union(*bb), c);
                }
            }
        }
        Ok(out)
    }

    /// `v ⌟ self` for a vector with scalar components in the frame basis.
    pub fn interior(&self, v: &[S]) -> Result<Self, ExteriorError> {
        if self.degree == 0 {
            return Err(ExteriorError::InteriorOfScalar);
        }
        if v.len() != self.frame.dim() {
            return Err(ExteriorError::VectorLength { expected: self.frame.dim(), found: v.len() });
        }
        let mut out = Form::zero(self.frame, self.degree - 1);
        for (blade, c) in &self.terms {
            for i in blade.indices() {
                if v[i].is_zero() {
                    continue;
                }
                let mut term = c.mul_ref(&v[i]);
                if blade.contraction_sign(i) < 0 {
                    term = -term;
                }
                out.add_term(blade.without(i), term);
            }
        }
        Ok(out)
    }

    /// `e_index ⌟ self`.
    pub fn interior_basis(&self, index: usize) -> Result<Self, ExteriorError> {
        if self.degree == 0 {
            return Err(ExteriorError::InteriorOfScalar);
        }
        if index >= self.frame.dim() {
            return Err(ExteriorError::IndexOutOfRange { index, dim: self.frame.dim() });
        }
        let mut out = Form::zero(self.frame, self.degree - 1);
        for (blade, c) in &self.terms {
            if blade.contains(index) {
                let term = if blade.contraction_sign(index) < 0 { -c.clone() } else { c.clone() };
                out.add_term(blade.without(index), term);
            }
        }
        Ok(out)
    }

    /// Evaluates the form on `degree` vectors: `self(v1, ..., vk)`.
    pub fn evaluate(&self, vectors: &[&[S]]) -> Result<S, ExteriorError> {
        if vectors.len() != self.degree {
            return Err(ExteriorError::DegreeMismatch { left: self.degree, right: vectors.len() });
        }
        let mut current = self.clone();
        for v in vectors {
            current = current.interior(v)?;
        }
        Ok(current.coeff(&Blade::SCALAR))
    }

    /// Hodge star relative to an oriented volume on a coordinate subspace and
    /// a diagonal metric with unit entries there. Every blade of `self` must
    /// lie in the volume's support.
    pub fn hodge_star(&self, volume: &Volume, metric: &MetricData) -> Result<Self, ExteriorError> {
        if volume.frame != self.frame {
            return Err(ExteriorError::FrameMismatch { left: self.frame, right: volume.frame });
        }
        if metric.dim() != self.frame.dim() {
            return Err(ExteriorError::VectorLength { expected: self.frame.dim(), found: metric.dim() });
        }
        if !metric.is_unit_on(volume.support) {
            return Err(ExteriorError::NonUnitMetric);
        }
        let n = volume.dim();
        if self.degree > n {
            return Err(ExteriorError::OutsideVolume);
        }
        let mut out = Form::zero(self.frame, n - self.degree);
        for (blade, c) in &self.terms {
            if !blade.is_subset_of(volume.support) {
                return Err(ExteriorError::OutsideVolume);
            }
            let rest = blade.complement_in(volume.support);
            let sign = blade.wedge_sign(rest).expect("disjoint by construction") * volume.sign;
            let weight = metric.blade_weight(*blade);
            let mut term = c.scale(&weight);
            if sign < 0 {
                term = -term;
            }
            out.add_term(rest, term);
        }
        Ok(out)
    }

    /// Euclidean Hodge star on the whole frame with the ascending orientation.
    pub fn star(&self) -> Self {
        self.hodge_star(&Volume::top(self.frame, 1), &MetricData::euclidean(self.frame))
            .expect("full-frame euclidean star is total")
    }

    /// The pointwise inner product `⟨a, b⟩`, bilinear in the coefficients,
    /// characterised by `a ∧ ∗b = ⟨a, b⟩ vol`.
    pub fn inner_product(&self, other: &Self, metric: &MetricData) -> Result<S, ExteriorError> {
        self.check_same_shape(other)?;
        let mut total = S::zero();
        for (blade, a) in &self.terms {
            if let Some(b) = other.terms.get(blade) {
                total += &a.mul_ref(b).scale(&metric.blade_weight(*blade));
            }
        }
        Ok(total)
    }

    /// Euclidean inner product.
    pub fn dot(&self, other: &Self) -> S {
        self.inner_product(other, &MetricData::euclidean(self.frame)).expect("dot of mismatched forms")
    }

    /// Pulls the form back along a linear change of 1-forms: basis covector
    /// `i` is replaced by `images[i]`, a 1-form in `target`.
    pub fn substitute(&self, target: Frame, images: &[Form<S>]) -> Result<Self, ExteriorError> {
        if images.len() != self.frame.dim() {
            return Err(ExteriorError::VectorLength { expected: self.frame.dim(), found: images.len() });
        }
        for img in images {
            if img.frame != target {
                return Err(ExteriorError::FrameMismatch { left: target, right: img.frame });
            }
            if img.degree != 1 {
                return Err(ExteriorError::DegreeMismatch { left: 1, right: img.degree });
            }
        }
        if self.degree > target.dim() {
            return Err(ExteriorError::DegreeTooLarge(self.degree));
        }
        let mut out = Form::zero(target, self.degree);
        for (blade, c) in &self.terms {
            let mut image = Form::scalar(target, c.clone());
            for i in blade.indices() {
                image = image.wedge(&images[i])?;
            }
            for (b, v) in image.terms {
                out.add_term(b, v);
            }
        }
        Ok(out)
    }

    /// Relabels indices into another frame: `dx^i ↦ dx^{map(i)}`.
    pub fn reindex(&self, target: Frame, map: impl Fn(usize) -> usize) -> Self {
        let images: Vec<Form<S>> = (0..self.frame.dim()).map(|i| Form::basis(target, map(i))).collect();
        self.substitute(target, &images).expect("reindex targets must be valid indices")
    }

    /// Part of the form whose blades all avoid `index`.
    pub fn restrict_away_from(&self, index: usize) -> Self {
        let mut out = Form::zero(self.frame, self.degree);
        for (b, c) in &self.terms {
            if !b.contains(index) {
                out.add_term(*b, c.clone());
            }
        }
        out
    }
}

impl<S: Scalar + Conjugate> Form<S> {
    pub fn conjugate(&self) -> Self {
        self.map(|c| c.conjugate())
    }
}

impl Form<Rational> {
    pub fn to_complex(&self) -> Form<GaussianRational> {
        self.map(GaussianRational::from_rational)
    }

    pub fn to_polynomial(&self) -> Form<Polynomial> {
        self.map(|c| Polynomial::constant(c.clone()))
    }
}

impl Form<GaussianRational> {
    pub fn re(&self) -> Form<Rational> {
        self.map(|z| z.re.clone())
    }

    pub fn im(&self) -> Form<Rational> {
        self.map(|z| z.im.clone())
    }
}

impl<S: Scalar> Add for &Form<S> {
    type Output = Form<S>;
    fn add(self, rhs: &Form<S>) -> Form<S> {
        self.try_add(rhs).expect("adding incompatible forms")
    }
}

impl<S: Scalar> Add for Form<S> {
    type Output = Form<S>;
    fn add(self, rhs: Form<S>) -> Form<S> {
        &self + &rhs
    }
}

impl<S: Scalar> Sub for &Form<S> {
    type Output = Form<S>;
    fn sub(self, rhs: &Form<S>) -> Form<S> {
        self.try_sub(rhs).expect("subtracting incompatible forms")
    }
}

impl<S: Scalar> Sub for Form<S> {
    type Output = Form<S>;
    fn sub(self, rhs: Form<S>) -> Form<S> {
        &self - &rhs
    }
}

impl<S: Scalar> Neg for &Form<S> {
    type Output = Form<S>;
    fn neg(self) -> Form<S> {
        self.neg_ref()
    }
}

impl<S: Scalar> Neg for Form<S> {
    type Output = Form<S>;
    fn neg(self) -> Form<S> {
        self.neg_ref()
    }
}

/// Wedge product; panics on a frame mismatch. Use [`Form::wedge`] to get an error instead.
impl<S: Scalar> BitXor for &Form<S> {
    type Output = Form<S>;
    fn bitxor(self, rhs: &Form<S>) -> Form<S> {
        self.wedge(rhs).expect("wedge of forms on different frames")
    }
}

impl<S: Scalar> BitXor for Form<S> {
    type Output = Form<S>;
    fn bitxor(self, rhs: Form<S>) -> Form<S> {
        &self ^ &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{rat, ratio, GaussianRational, Rational};
    use alloc::vec;
    use proptest::prelude::*;

    fn dx(i: usize) -> Form<Rational> {
        Form::basis(Frame::R7, i)
    }

    fn arb_form(frame: Frame, degree: usize) -> impl Strategy<Value = Form<Rational>> {
        let blades = frame.blades(degree);
        let n = blades.len();
        proptest::collection::vec((0..n, -3i64..=3), 0..6).prop_map(move |terms| {
            Form::from_terms(frame, degree, terms.into_iter().map(|(k, c)| (blades[k], rat(c)))).unwrap()
        })
    }

    fn arb_vector(dim: usize) -> impl Strategy<Value = Vec<Rational>> {
        proptest::collection::vec((-4i64..=4, 1i64..=3).prop_map(|(a, b)| ratio(a, b)), dim)
    }

    #[test]
    fn wedge_antisymmetry_of_one_forms() {
        let b12 = Blade::from_sequence(&[0, 1]).unwrap().1;
        assert_eq!(&dx(0) ^ &dx(1), Form::monomial(Frame::R7, b12, rat(1)));
        assert_eq!(&dx(1) ^ &dx(0), Form::monomial(Frame::R7, b12, rat(-1)));
        assert!((&dx(2) ^ &dx(2)).is_zero());
    }

    #[test]
    fn wedge_frame_mismatch_is_error() {
        let a = Form::<Rational>::basis(Frame::R8, 0);
        assert!(matches!(dx(0).wedge(&a), Err(ExteriorError::FrameMismatch { .. })));
    }

    #[test]
    fn interior_examples() {
        let vol3 = &(&dx(0) ^ &dx(1)) ^ &dx(2);
        let mut e1 = vec![rat(0); 7];
        e1[0] = rat(1);
        assert_eq!(vol3.interior(&e1).unwrap(), &dx(1) ^ &dx(2));
        assert_eq!(vol3.interior_basis(1).unwrap(), -(&dx(0) ^ &dx(2)));
        let scalar = Form::scalar(Frame::R7, rat(3));
        assert_eq!(scalar.interior(&e1), Err(ExteriorError::InteriorOfScalar));
    }

    #[test]
    fn inner_product_of_orthonormal_basis() {
        assert_eq!(dx(0).dot(&dx(1)), rat(0));
        assert_eq!(dx(4).dot(&dx(4)), rat(1));
        let e = MetricData::euclidean(Frame::R7);
        assert!(matches!(dx(0).inner_product(&(&dx(0) ^ &dx(1)), &e), Err(ExteriorError::DegreeMismatch { .. })));
    }

    #[test]
    fn star_of_partial_volume() {
        // ∗₄ on the y-block (indices 3..7) with dy0 dy1 dy2 dy3.
        let vol4 = Volume::ordered(Frame::R7, &[3, 4, 5, 6]);
        let e = MetricData::euclidean(Frame::R7);
        let s = (&dx(3) ^ &dx(4)).hodge_star(&vol4, &e).unwrap();
        assert_eq!(s, &dx(5) ^ &dx(6));
        assert_eq!(dx(0).hodge_star(&vol4, &e), Err(ExteriorError::OutsideVolume));
    }

    #[test]
    fn split_metric_star() {
        let g = MetricData::from_signs(&[1, 1, 1, -1, -1, -1, -1]);
        let vol = Volume::top(Frame::R7, 1);
        let a = dx(3);
        let sa = a.hodge_star(&vol, &g).unwrap();
        // a ∧ ∗a = ⟨a, a⟩ vol with ⟨dy0, dy0⟩ = -1
        assert_eq!(&a ^ &sa, vol.form::<Rational>().scale(&rat(-1)));
        let scaled = MetricData::diagonal(vec![rat(2); 7]);
        assert_eq!(a.hodge_star(&vol, &scaled), Err(ExteriorError::NonUnitMetric));
    }

    #[test]
    fn substitute_flips_a_coordinate() {
        let images: Vec<Form<Rational>> = (0..7).map(|i| if i == 3 { -dx(3) } else { dx(i) }).collect();
        let f = &dx(3) ^ &dx(4);
        assert_eq!(f.substitute(Frame::R7, &images).unwrap(), -(&dx(3) ^ &dx(4)));
    }

    #[test]
    fn complex_coefficients_and_conjugation() {
        let i = GaussianRational::new(rat(0), rat(1));
        let f = Form::<GaussianRational>::basis(Frame::R7, 0).scale(&i);
        assert_eq!(f.conjugate(), f.scale(&GaussianRational::new(rat(-1), rat(0))));
    }

    proptest! {
        #[test]
        fn graded_commutativity(a in arb_form(Frame::R7, 2), b in arb_form(Frame::R7, 3)) {
            prop_assert_eq!(&a ^ &b, &b ^ &a);
        }

        #[test]
        fn graded_commutativity_odd(a in arb_form(Frame::R7, 1), b in arb_form(Frame::R7, 3)) {
            prop_assert_eq!(&a ^ &b, -(&b ^ &a));
        }

        #[test]
        fn wedge_associativity(a in arb_form(Frame::R7, 1), b in arb_form(Frame::R7, 2), c in arb_form(Frame::R7, 3)) {
            prop_assert_eq!(&(&a ^ &b) ^ &c, &a ^ &(&b ^ &c));
        }

        #[test]
        fn interior_is_antiderivation(v in arb_vector(7), a in arb_form(Frame::R7, 2), b in arb_form(Frame::R7, 3)) {
            let lhs = (&a ^ &b).interior(&v).unwrap();
            let rhs = &(&a.interior(&v).unwrap() ^ &b) + &(&a ^ &b.interior(&v).unwrap());
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn interior_squares_to_zero(v in arb_vector(7), a in arb_form(Frame::R7, 3)) {
            prop_assert!(a.interior(&v).unwrap().interior(&v).unwrap().is_zero());
        }

        #[test]
        fn interior_adjoint_to_wedge(v in arb_vector(7), a in arb_form(Frame::R7, 3), b in arb_form(Frame::R7, 2)) {
            let flat = Form::from_terms(Frame::R7, 1, (0..7).map(|i| (Blade::single(i), v[i].clone()))).unwrap();
            prop_assert_eq!(a.interior(&v).unwrap().dot(&b), a.dot(&(&flat ^ &b)));
        }

        #[test]
        fn star_is_an_isometry_r7(a in arb_form(Frame::R7, 3), b in arb_form(Frame::R7, 3)) {
            prop_assert_eq!(a.star().dot(&b.star()), a.dot(&b));
            prop_assert_eq!(a.star().star(), a.clone());
            let vol = Volume::top(Frame::R7, 1).form::<Rational>();
            prop_assert_eq!(&a ^ &b.star(), vol.scale(&a.dot(&b)));
        }

        #[test]
        fn star_is_an_isometry_r8(a in arb_form(Frame::R8, 4), b in arb_form(Frame::R8, 4)) {
            prop_assert_eq!(a.star().dot(&b.star()), a.dot(&b));
            let vol = Volume::top(Frame::R8, 1).form::<Rational>();
            prop_assert_eq!(&a ^ &b.star(), vol.scale(&a.dot(&b)));
        }

        #[test]
        fn inner_product_symmetric_positive(a in arb_form(Frame::R7, 2), b in arb_form(Frame::R7, 2)) {
            prop_assert_eq!(a.dot(&b), b.dot(&a));
            let n = a.dot(&a);
            prop_assert!(n >= rat(0));
            prop_assert_eq!(n == rat(0), a.is_zero());
        }
    }
}
