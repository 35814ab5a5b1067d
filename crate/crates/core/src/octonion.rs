//! Quaternions and octonions via Cayley–Dickson doubling.
//!
//! The octonion product is the single source of truth for the G2 and
//! Spin(7) forms: [`phi_form`], [`psi_form`] and [`spin7_form`] evaluate
//! the defining multilinear expressions on basis vectors, and
//! [`StructureConstants`] tabulates `φ_{ijk}`, `ψ_{ijkl}` for index sweeps.
//!
//! Octonion components are in R^8 frame order `x0 x1 x2 x3 y0 y1 y2 y3`.
//! Imaginary octonions are identified with R^7 by dropping `x0`, so R^7
//! index `r` is octonion index `r + 1`.

use alloc::vec::Vec;
use core::array;
use core::ops::{Add, Mul, Neg, Sub};

use crate::exterior::{Blade, Form, Frame};
use crate::scalars::{ratio, Rational, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OctonionError {
    #[error("cross product needs imaginary octonions, got a nonzero real part")]
    NotImaginary,
}

/// `a0 + a1 i + a2 j + a3 k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quaternion<S> {
    pub c: [S; 4],
}

impl<S: Scalar> Quaternion<S> {
    pub fn new(c: [S; 4]) -> Self {
        Quaternion { c }
    }

    pub fn zero() -> Self {
        Quaternion { c: array::from_fn(|_| S::zero()) }
    }

    pub fn real(s: S) -> Self {
        let mut q = Self::zero();
        q.c[0] = s;
        q
    }

    pub fn conj(&self) -> Self {
        Quaternion { c: array::from_fn(|i| if i == 0 { self.c[0].clone() } else { -self.c[i].clone() }) }
    }

    pub fn norm_sqr(&self) -> S {
        let mut n = S::zero();
        for x in &self.c {
            n += &x.mul_ref(x);
        }
        n
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(S::is_zero)
    }

    fn scale(&self, s: &S) -> Self {
        Quaternion { c: array::from_fn(|i| self.c[i].mul_ref(s)) }
    }
}

impl<S: Scalar> Mul for &Quaternion<S> {
    type Output = Quaternion<S>;
    fn mul(self, b: &Quaternion<S>) -> Quaternion<S> {
        let a = &self.c;
        let b = &b.c;
        let p = |i: usize, j: usize| a[i].mul_ref(&b[j]);
        Quaternion {
            c: [
                p(0, 0) - p(1, 1) - p(2, 2) - p(3, 3),
                p(0, 1) + p(1, 0) + p(2, 3) - p(3, 2),
                p(0, 2) - p(1, 3) + p(2, 0) + p(3, 1),
                p(0, 3) + p(1, 2) - p(2, 1) + p(3, 0),
            ],
        }
    }
}

impl<S: Scalar> Add for &Quaternion<S> {
    type Output = Quaternion<S>;
    fn add(self, b: &Quaternion<S>) -> Quaternion<S> {
        Quaternion { c: array::from_fn(|i| self.c[i].clone() + b.c[i].clone()) }
    }
}

impl<S: Scalar> Sub for &Quaternion<S> {
    type Output = Quaternion<S>;
    fn sub(self, b: &Quaternion<S>) -> Quaternion<S> {
        Quaternion { c: array::from_fn(|i| self.c[i].clone() - b.c[i].clone()) }
    }
}

/// `a + b e` with quaternions `a`, `b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Octonion<S> {
    pub a: Quaternion<S>,
    pub b: Quaternion<S>,
}

impl<S: Scalar> Octonion<S> {
    pub fn new(a: Quaternion<S>, b: Quaternion<S>) -> Self {
        Octonion { a, b }
    }

    pub fn zero() -> Self {
        Octonion::new(Quaternion::zero(), Quaternion::zero())
    }

    pub fn one() -> Self {
        Self::real(S::one())
    }

    pub fn real(s: S) -> Self {
        Octonion::new(Quaternion::real(s), Quaternion::zero())
    }

    pub fn from_components(c: [S; 8]) -> Self {
        let [a0, a1, a2, a3, b0, b1, b2, b3] = c;
        Octonion::new(Quaternion::new([a0, a1, a2, a3]), Quaternion::new([b0, b1, b2, b3]))
    }

    /// The basis octonion with index `i` in R^8 frame order.
    pub fn basis(i: usize) -> Self {
        assert!(i < 8, "octonion basis index {i} out of range");
        Self::from_components(array::from_fn(|j| if j == i { S::one() } else { S::zero() }))
    }

    /// The imaginary octonion with R^7 components `v`.
    pub fn imaginary(v: &[S]) -> Self {
        assert_eq!(v.len(), 7, "imaginary octonions have 7 components");
        Self::from_components(array::from_fn(|j| if j == 0 { S::zero() } else { v[j - 1].clone() }))
    }

    pub fn components(&self) -> [S; 8] {
        array::from_fn(|j| if j < 4 { self.a.c[j].clone() } else { self.b.c[j - 4].clone() })
    }

    pub fn re(&self) -> S {
        self.a.c[0].clone()
    }

    /// Imaginary part as an R^7 vector.
    pub fn im(&self) -> [S; 7] {
        let c = self.components();
        array::from_fn(|j| c[j + 1].clone())
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn conj(&self) -> Self {
        Octonion::new(self.a.conj(), -&self.b)
    }

    pub fn scale(&self, s: &S) -> Self {
        Octonion::new(self.a.scale(s), self.b.scale(s))
    }

    pub fn inner(&self, other: &Self) -> S {
        let mut n = S::zero();
        for (x, y) in self.components().iter().zip(other.components().iter()) {
            n += &x.mul_ref(y);
        }
        n
    }

    pub fn norm_sqr(&self) -> S {
        self.a.norm_sqr() + self.b.norm_sqr()
    }
}

impl<S: Scalar> Neg for &Quaternion<S> {
    type Output = Quaternion<S>;
    fn neg(self) -> Quaternion<S> {
        Quaternion { c: array::from_fn(|i| -self.c[i].clone()) }
    }
}

impl<S: Scalar> Mul for &Octonion<S> {
    type Output = Octonion<S>;
    /// `(a + be)(c + de) = (ac − d̄b) + (da + bc̄)e`.
    fn mul(self, rhs: &Octonion<S>) -> Octonion<S> {
        let (a, b) = (&self.a, &self.b);
        let (c, d) = (&rhs.a, &rhs.b);
        let first = &(a * c) - &(&d.conj() * b);
        let second = &(d * a) + &(b * &c.conj());
        Octonion::new(first, second)
    }
}

impl<S: Scalar> Add for &Octonion<S> {
    type Output = Octonion<S>;
    fn add(self, rhs: &Octonion<S>) -> Octonion<S> {
        Octonion::new(&self.a + &rhs.a, &self.b + &rhs.b)
    }
}

impl<S: Scalar> Sub for &Octonion<S> {
    type Output = Octonion<S>;
    fn sub(self, rhs: &Octonion<S>) -> Octonion<S> {
        Octonion::new(&self.a - &rhs.a, &self.b - &rhs.b)
    }
}

impl<S: Scalar> Neg for &Octonion<S> {
    type Output = Octonion<S>;
    fn neg(self) -> Octonion<S> {
        Octonion::new(-&self.a, -&self.b)
    }
}

/// `[x, y, z] = (xy)z − x(yz)`.
pub fn associator<S: Scalar>(x: &Octonion<S>, y: &Octonion<S>, z: &Octonion<S>) -> Octonion<S> {
    &(&(x * y) * z) - &(x * &(y * z))
}

/// The Spin(7) triple cross product `X(x,y,z) = ½(x(ȳz) − z(ȳx))`.
pub fn triple_cross<S: Scalar>(x: &Octonion<S>, y: &Octonion<S>, z: &Octonion<S>) -> Octonion<S> {
    let yb = y.conj();
    let diff = &(x * &(&yb * z)) - &(z * &(&yb * x));
    diff.scale(&S::from_rational(&ratio(1, 2)))
}

/// The G2 cross product on imaginary octonions, `u × v = Im(uv)`.
pub fn cross7<S: Scalar>(u: &Octonion<S>, v: &Octonion<S>) -> Result<Octonion<S>, OctonionError> {
    if !u.re().is_zero() || !v.re().is_zero() {
        return Err(OctonionError::NotImaginary);
    }
    let mut p = u * v;
    p.a.c[0] = S::zero();
    Ok(p)
}

fn e7(i: usize) -> Octonion<Rational> {
    Octonion::basis(i + 1)
}

/// Tabulates a multilinear function of basis vectors as a form.
fn tabulate(frame: Frame, degree: usize, f: impl Fn(&[usize]) -> Rational) -> Form<Rational> {
    let mut out = Form::zero(frame, degree);
    for blade in frame.blades(degree) {
        let idx: Vec<usize> = blade.indices().collect();
        out.add_term(blade, f(&idx));
    }
    out
}

/// `φ(x, y, z) = ⟨x, yz⟩` on Im(O).
pub fn phi_form() -> Form<Rational> {
    tabulate(Frame::R7, 3, |i| e7(i[0]).inner(&(&e7(i[1]) * &e7(i[2]))))
}

/// `ψ(x, y, z, w) = ½⟨x, [y, z, w]⟩` on Im(O).
pub fn psi_form() -> Form<Rational> {
    tabulate(Frame::R7, 4, |i| e7(i[0]).inner(&associator(&e7(i[1]), &e7(i[2]), &e7(i[3]))) * ratio(1, 2))
}

/// `Φ(x, y, z, w) = ⟨x, X(y, z, w)⟩` on O.
pub fn spin7_form() -> Form<Rational> {
    let e = Octonion::<Rational>::basis;
    tabulate(Frame::R8, 4, |i| e(i[0]).inner(&triple_cross(&e(i[1]), &e(i[2]), &e(i[3]))))
}

/// Dense antisymmetric tables `φ_{ijk}` and `ψ_{ijkl}` over R^7 indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureConstants {
    phi: Vec<Rational>,
    psi: Vec<Rational>,
}

fn antisymmetric_table(form: &Form<Rational>) -> Vec<Rational> {
    let k = form.degree();
    let n = 7usize.pow(k as u32);
    let mut table = alloc::vec![Rational::from_integer(0.into()); n];
    let mut idx = alloc::vec![0usize; k];
    for flat in 0..n {
        let mut rest = flat;
        for slot in idx.iter_mut().rev() {
            *slot = rest % 7;
            rest /= 7;
        }
        if let Some((sign, blade)) = Blade::from_sequence(&idx) {
            let c = form.coeff(&blade);
            table[flat] = if sign < 0 { -c } else { c };
        }
    }
    table
}

impl StructureConstants {
    /// Tables of the forms derived from the octonion product.
    pub fn standard() -> Self {
        Self::from_forms(&phi_form(), &psi_form())
    }

    /// Tables read off arbitrary 3- and 4-forms on R^7.
    pub fn from_forms(phi: &Form<Rational>, psi: &Form<Rational>) -> Self {
        assert_eq!((phi.frame(), phi.degree()), (Frame::R7, 3), "phi must be a 3-form on R7");
        assert_eq!((psi.frame(), psi.degree()), (Frame::R7, 4), "psi must be a 4-form on R7");
        StructureConstants { phi: antisymmetric_table(phi), psi: antisymmetric_table(psi) }
    }

    pub fn phi(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.phi[(i * 7 + j) * 7 + k]
    }

    pub fn psi(&self, i: usize, j: usize, k: usize, l: usize) -> &Rational {
        &self.psi[((i * 7 + j) * 7 + k) * 7 + l]
    }

    /// `(X × Y)^l = X^i Y^j φ_{ijl}`.
    pub fn cross<S: Scalar>(&self, x: &[S], y: &[S]) -> [S; 7] {
        array::from_fn(|l| {
            let mut acc = S::zero();
            for i in 0..7 {
                if x[i].is_zero() {
                    continue;
                }
                for j in 0..7 {
                    let c = self.phi(i, j, l);
                    if c.is_zero() || y[j].is_zero() {
                        continue;
                    }
                    acc += &x[i].mul_ref(&y[j]).scale(c);
                }
            }
            acc
        })
    }

    /// `ψ(a, b, c, ·)` as a vector.
    pub fn psi_vector<S: Scalar>(&self, a: &[S], b: &[S], c: &[S]) -> [S; 7] {
        array::from_fn(|l| {
            let mut acc = S::zero();
            for i in 0..7 {
                if a[i].is_zero() {
                    continue;
                }
                for j in 0..7 {
                    if b[j].is_zero() {
                        continue;
                    }
                    let ab = a[i].mul_ref(&b[j]);
                    for k in 0..7 {
                        let t = self.psi(i, j, k, l);
                        if t.is_zero() || c[k].is_zero() {
                            continue;
                        }
                        acc += &ab.mul_ref(&c[k]).scale(t);
                    }
                }
            }
            acc
        })
    }

    /// Residual of `φ_{ijk} φ_{abk} = δ_{ia}δ_{jb} − δ_{ib}δ_{ja} − ψ_{ijab}`
    /// for one index choice; zero when the identity holds.
    pub fn contraction_residual(&self, i: usize, j: usize, a: usize, b: usize) -> Rational {
        let mut lhs = Rational::from_integer(0.into());
        for k in 0..7 {
            lhs += self.phi(i, j, k) * self.phi(a, b, k);
        }
        let delta = |p: usize, q: usize| if p == q { 1i64 } else { 0 };
        let kron = delta(i, a) * delta(j, b) - delta(i, b) * delta(j, a);
        lhs - Rational::from_integer(kron.into()) + self.psi(i, j, a, b)
    }

    /// First index choice at which the contraction identity fails.
    pub fn contraction_identity_failure(&self) -> Option<([usize; 4], Rational)> {
        for i in 0..7 {
            for j in 0..7 {
                for a in 0..7 {
                    for b in 0..7 {
                        let r = self.contraction_residual(i, j, a, b);
                        if !r.is_zero() {
                            return Some(([i, j, a, b], r));
                        }
                    }
                }
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::rat;
    use proptest::prelude::*;

    fn oct(c: [i64; 8]) -> Octonion<Rational> {
        Octonion::from_components(c.map(rat))
    }

    fn arb_oct() -> impl Strategy<Value = Octonion<Rational>> {
        proptest::array::uniform8(-4i64..=4).prop_map(oct)
    }

    fn arb_im() -> impl Strategy<Value = Octonion<Rational>> {
        proptest::array::uniform7(-4i64..=4).prop_map(|v| Octonion::imaginary(&v.map(rat)))
    }

    #[test]
    fn quaternion_units() {
        let q = |i| Quaternion::<Rational>::new(array::from_fn(|j| if j == i { rat(1) } else { rat(0) }));
        let (i, j, k) = (q(1), q(2), q(3));
        assert_eq!(&i * &j, k);
        assert_eq!(&j * &k, i);
        assert_eq!(&k * &i, j);
        assert_eq!(&i * &i, Quaternion::real(rat(-1)));
    }

    #[test]
    fn unit_and_e_squared() {
        let q = oct([1, -2, 3, 0, 5, 0, -1, 2]);
        assert_eq!(&Octonion::one() * &q, q);
        assert_eq!(&q * &Octonion::one(), q);
        let e = Octonion::<Rational>::basis(4);
        assert_eq!(&e * &e, Octonion::real(rat(-1)));
    }

    #[test]
    fn associator_is_nonzero_off_a_quaternion_subalgebra() {
        let (i, j, e) = (Octonion::basis(1), Octonion::basis(2), Octonion::basis(4));
        let a: Octonion<Rational> = associator(&i, &j, &e);
        assert!(!a.is_zero());
        assert!(a.re().is_zero());
        // i, j, k associate
        assert!(associator(&i, &j, &Octonion::basis(3)).is_zero());
    }

    #[test]
    fn triple_cross_example() {
        let (one, i, j) = (Octonion::<Rational>::one(), Octonion::basis(1), Octonion::basis(2));
        let direct = &(&one * &(&i.conj() * &j)) - &(&j * &(&i.conj() * &one));
        assert_eq!(triple_cross(&one, &i, &j), direct.scale(&ratio(1, 2)));
    }

    #[test]
    fn cross_of_x1_x2_is_x3() {
        let x = cross7(&Octonion::<Rational>::basis(1), &Octonion::basis(2)).unwrap();
        assert_eq!(x, Octonion::basis(3));
        assert_eq!(cross7(&Octonion::<Rational>::one(), &Octonion::basis(2)), Err(OctonionError::NotImaginary));
    }

    #[test]
    fn derived_forms_have_seven_and_fourteen_terms() {
        assert_eq!(phi_form().len(), 7);
        assert_eq!(psi_form().len(), 7);
        assert_eq!(spin7_form().len(), 14);
    }

    #[test]
    fn contraction_identity_holds() {
        assert_eq!(StructureConstants::standard().contraction_identity_failure(), None);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(50))]

        #[test]
        fn norm_is_multiplicative(p in arb_oct(), q in arb_oct()) {
            prop_assert_eq!((&p * &q).norm_sqr(), p.norm_sqr() * q.norm_sqr());
        }

        #[test]
        fn alternative_laws(x in arb_oct(), z in arb_oct()) {
            prop_assert!(associator(&x, &x, &z).is_zero());
            prop_assert!(associator(&x, &z, &z).is_zero());
        }

        #[test]
        fn associator_is_alternating(x in arb_oct(), y in arb_oct(), z in arb_oct()) {
            prop_assert_eq!(associator(&x, &y, &z), -&associator(&y, &x, &z));
            prop_assert_eq!(associator(&x, &y, &z), -&associator(&x, &z, &y));
        }

        #[test]
        fn triple_cross_alternating_and_orthogonal(x in arb_oct(), y in arb_oct(), z in arb_oct()) {
            let t = triple_cross(&x, &y, &z);
            prop_assert!(triple_cross(&x, &x, &z).is_zero());
            prop_assert!(triple_cross(&x, &y, &y).is_zero());
            prop_assert_eq!(t.clone(), -&triple_cross(&y, &x, &z));
            prop_assert!(t.inner(&x).is_zero());
            prop_assert!(t.inner(&y).is_zero());
            prop_assert!(t.inner(&z).is_zero());
        }

        #[test]
        fn cross7_properties(u in arb_im(), v in arb_im()) {
            let uv = cross7(&u, &v).unwrap();
            prop_assert_eq!(uv.clone(), -&cross7(&v, &u).unwrap());
            prop_assert!(uv.inner(&u).is_zero());
            prop_assert!(uv.inner(&v).is_zero());
            let uv_dot = u.inner(&v);
            prop_assert_eq!(uv.norm_sqr(), u.norm_sqr() * v.norm_sqr() - &uv_dot * &uv_dot);
            let table = StructureConstants::standard().cross(&u.im(), &v.im());
            prop_assert_eq!(uv.im(), table);
        }

        #[test]
        fn iterated_cross(x in arb_im(), y in arb_im(), z in arb_im()) {
            let lhs = cross7(&x, &cross7(&y, &z).unwrap()).unwrap();
            let t = StructureConstants::standard();
            // X ⌟ Y ⌟ Z ⌟ ψ = ψ(Z, Y, X, ·)
            let w = Octonion::imaginary(&t.psi_vector(&z.im(), &y.im(), &x.im()));
            let rhs = &(&z.scale(&-x.inner(&y)) + &y.scale(&x.inner(&z))) - &w;
            prop_assert_eq!(lhs, rhs);
        }
    }
}
