//! Exact coefficient rings.
//!
//! Everything in this crate is checked with equality, never with a
//! tolerance, so the three coefficient types are all exact: arbitrary
//! precision rationals, Gaussian rationals `a + bi`, and multivariate
//! polynomials over the rationals in the seven coordinates of R^7.

mod polynomial;

use alloc::format;
use alloc::string::{String, ToString};
use core::fmt::Debug;
use core::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub use polynomial::{Exponent, Polynomial, NVARS};

/// Arbitrary precision rational, always in lowest terms with positive denominator.
pub type Rational = BigRational;

/// `re + im·i` with rational parts.
pub type GaussianRational = Complex<Rational>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
}

/// A commutative ring with exact equality, containing the rationals.
pub trait Scalar:
    Clone
    + PartialEq
    + Debug
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
    + for<'a> MulAssign<&'a Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn from_rational(r: &Rational) -> Self;

    fn from_int(n: i64) -> Self {
        Self::from_rational(&rat(n))
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        out *= rhs;
        out
    }

    fn scale(&self, r: &Rational) -> Self {
        self.mul_ref(&Self::from_rational(r))
    }

    /// Splits off a leading minus sign for term-by-term printing. The
    /// returned string is empty when the magnitude is one.
    fn coefficient_text(&self) -> (bool, String);
}

/// Scalars that admit division by nonzero elements.
pub trait Field: Scalar {
    fn checked_inv(&self) -> Result<Self, ScalarError>;

    fn checked_div(&self, rhs: &Self) -> Result<Self, ScalarError> {
        Ok(self.mul_ref(&rhs.checked_inv()?))
    }
}

/// Complex conjugation; the identity on real scalars.
pub trait Conjugate {
    fn conjugate(&self) -> Self;
}

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(num: i64, den: i64) -> Rational {
    assert!(den != 0, "ratio with zero denominator");
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn gauss(re: Rational, im: Rational) -> GaussianRational {
    Complex::new(re, im)
}

pub fn imag_unit() -> GaussianRational {
    Complex::new(rat(0), rat(1))
}

pub fn conjugate(z: &GaussianRational) -> GaussianRational {
    z.conj()
}

pub fn norm_sqr(z: &GaussianRational) -> Rational {
    &z.re * &z.re + &z.im * &z.im
}

fn rational_text(r: &Rational) -> (bool, String) {
    let neg = r.is_negative();
    let mag = r.abs();
    if mag.is_one() {
        (neg, String::new())
    } else {
        (neg, mag.to_string())
    }
}

impl Scalar for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
    fn scale(&self, r: &Rational) -> Self {
        self * r
    }
    fn coefficient_text(&self) -> (bool, String) {
        rational_text(self)
    }
}

impl Field for Rational {
    fn checked_inv(&self) -> Result<Self, ScalarError> {
        if Zero::is_zero(self) {
            Err(ScalarError::DivisionByZero)
        } else {
            Ok(self.recip())
        }
    }
}

impl Conjugate for Rational {
    fn conjugate(&self) -> Self {
        self.clone()
    }
}

impl Scalar for GaussianRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(&self.re) && Zero::is_zero(&self.im)
    }
    fn from_rational(r: &Rational) -> Self {
        Complex::new(r.clone(), Zero::zero())
    }
    fn scale(&self, r: &Rational) -> Self {
        Complex::new(&self.re * r, &self.im * r)
    }
    fn coefficient_text(&self) -> (bool, String) {
        if Zero::is_zero(&self.im) {
            rational_text(&self.re)
        } else if Zero::is_zero(&self.re) {
            let (neg, mag) = rational_text(&self.im);
            (neg, format!("{mag}i"))
        } else {
            let sign = if self.im.is_negative() { '-' } else { '+' };
            (false, format!("({}{}{}i)", self.re, sign, self.im.abs()))
        }
    }
}

impl Field for GaussianRational {
    fn checked_inv(&self) -> Result<Self, ScalarError> {
        let n = norm_sqr(self);
        if Zero::is_zero(&n) {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Complex::new(&self.re / &n, -(&self.im / &n)))
    }
}

impl Conjugate for GaussianRational {
    fn conjugate(&self) -> Self {
        self.conj()
    }
}

impl Scalar for Polynomial {
    fn zero() -> Self {
        Polynomial::zero()
    }
    fn one() -> Self {
        Polynomial::one()
    }
    fn is_zero(&self) -> bool {
        Polynomial::is_zero(self)
    }
    fn from_rational(r: &Rational) -> Self {
        Polynomial::constant(r.clone())
    }
    fn scale(&self, r: &Rational) -> Self {
        Polynomial::scale(self, r)
    }
    fn coefficient_text(&self) -> (bool, String) {
        match self.single_term() {
            Some((exp, c)) if exp == &[0; NVARS] => rational_text(c),
            Some((exp, c)) => {
                let (neg, mag) = rational_text(c);
                let mono = polynomial::monomial_text(exp);
                if mag.is_empty() {
                    (neg, mono)
                } else {
                    (neg, format!("{mag} {mono}"))
                }
            }
            None => (false, format!("({self})")),
        }
    }
}

impl Conjugate for Polynomial {
    fn conjugate(&self) -> Self {
        self.clone()
    }
}

/// Division that reports a zero divisor instead of panicking.
pub fn checked_div<F: Field>(a: &F, b: &F) -> Result<F, ScalarError> {
    a.checked_div(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn arb_rational() -> impl Strategy<Value = Rational> {
        (-50i64..50, 1i64..20).prop_map(|(n, d)| ratio(n, d))
    }

    fn arb_gauss() -> impl Strategy<Value = GaussianRational> {
        (arb_rational(), arb_rational()).prop_map(|(a, b)| gauss(a, b))
    }

    #[test]
    fn rational_sum() {
        assert_eq!(ratio(1, 2) + ratio(1, 3), ratio(5, 6));
    }

    #[test]
    fn rational_lowest_terms() {
        let r = ratio(6, -4);
        assert_eq!(r.numer(), &BigInt::from(-3));
        assert_eq!(r.denom(), &BigInt::from(2));
        let z = ratio(0, -7);
        assert_eq!(z.denom(), &BigInt::from(1));
    }

    #[test]
    fn i_squared_is_minus_one() {
        assert_eq!(imag_unit() * imag_unit(), GaussianRational::from_int(-1));
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(conjugate(&gauss(rat(2), rat(3))), gauss(rat(2), rat(-3)));
        assert_eq!(conjugate(&gauss(rat(5), rat(0))), gauss(rat(5), rat(0)));
    }

    #[test]
    fn division_by_zero_is_reported() {
        assert_eq!(checked_div(&rat(1), &rat(0)), Err(ScalarError::DivisionByZero));
        assert_eq!(checked_div(&imag_unit(), &<GaussianRational as Scalar>::zero()), Err(ScalarError::DivisionByZero));
        assert_eq!(checked_div(&rat(3), &rat(4)), Ok(ratio(3, 4)));
        let z = gauss(rat(1), rat(2));
        assert_eq!(Field::checked_div(&z, &z), Ok(<GaussianRational as Scalar>::one()));
    }

    #[test]
    fn coefficient_text_forms() {
        assert_eq!(rat(-1).coefficient_text(), (true, String::new()));
        assert_eq!(ratio(3, 2).coefficient_text(), (false, "3/2".into()));
        assert_eq!(gauss(rat(0), rat(-1)).coefficient_text(), (true, "i".into()));
        assert_eq!(gauss(rat(1), rat(-2)).coefficient_text(), (false, "(1-2i)".into()));
    }

    proptest! {
        #[test]
        fn rationals_form_a_field(a in arb_rational(), b in arb_rational(), c in arb_rational()) {
            prop_assert_eq!((&a + &b) + &c, &a + (&b + &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
            if !Zero::is_zero(&a) {
                prop_assert_eq!(&a * Field::checked_inv(&a).unwrap(), rat(1));
            }
        }

        #[test]
        fn conjugation_is_ring_automorphism(z in arb_gauss(), w in arb_gauss()) {
            prop_assert_eq!(conjugate(&(&z * &w)), conjugate(&z) * conjugate(&w));
            prop_assert_eq!(conjugate(&(&z + &w)), conjugate(&z) + conjugate(&w));
            prop_assert_eq!(conjugate(&conjugate(&z)), z.clone());
            let n = norm_sqr(&z);
            prop_assert!(!n.is_negative());
            prop_assert_eq!(Zero::is_zero(&n), <GaussianRational as Scalar>::is_zero(&z));
        }
    }
}
