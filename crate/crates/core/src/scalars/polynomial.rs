use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_traits::{One, Signed, Zero};

use super::Rational;
use crate::exterior::Frame;

/// Number of variables: the coordinates of R^7 in frame order.
pub const NVARS: usize = 7;

/// Dense exponent vector, one entry per coordinate of R^7.
pub type Exponent = [u8; NVARS];

/// A polynomial over the rationals in the coordinates `x1 x2 x3 y0 y1 y2 y3`.
///
/// No zero coefficient is ever stored, so structural equality is equality
/// of polynomials.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Polynomial {
    terms: BTreeMap<Exponent, Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial([0; NVARS], c)
    }

    pub fn monomial(exp: Exponent, coeff: Rational) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, coeff);
        p
    }

    /// The coordinate function for variable `var` (0-based frame index).
    pub fn var(var: usize) -> Self {
        assert!(var < NVARS, "variable index {var} out of range");
        let mut exp = [0; NVARS];
        exp[var] = 1;
        Self::monomial(exp, Rational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: &Exponent) -> Rational {
        self.terms.get(exp).cloned().unwrap_or_else(Rational::zero)
    }

    pub(crate) fn single_term(&self) -> Option<(&Exponent, &Rational)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    /// Total degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(|e| e.iter().map(|&k| k as usize).sum()).max()
    }

    pub fn add_term(&mut self, exp: Exponent, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&exp) {
            Some(c) => {
                *c += coeff;
                if c.is_zero() {
                    self.terms.remove(&exp);
                }
            }
            None => {
                self.terms.insert(exp, coeff);
            }
        }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(e, c)| (*e, c * r)).collect() }
    }

    /// Formal partial derivative with respect to coordinate `var`.
    pub fn partial(&self, var: usize) -> Self {
        assert!(var < NVARS, "variable index {var} out of range");
        let mut out = Self::zero();
        for (exp, c) in &self.terms {
            let k = exp[var];
            if k == 0 {
                continue;
            }
            let mut e = *exp;
            e[var] = k - 1;
            out.add_term(e, c * Rational::from_integer(k.into()));
        }
        out
    }

    /// Sum of the unmixed second partials, `Σ ∂ᵢ² p`.
    pub fn laplacian(&self) -> Self {
        let mut out = Self::zero();
        for v in 0..NVARS {
            out += &self.partial(v).partial(v);
        }
        out
    }

    pub fn evaluate(&self, point: &[Rational; NVARS]) -> Rational {
        let mut total = Rational::zero();
        for (exp, c) in &self.terms {
            let mut term = c.clone();
            for (x, &k) in point.iter().zip(exp) {
                for _ in 0..k {
                    term *= x;
                }
            }
            total += term;
        }
        total
    }
}

fn mul_exp(a: &Exponent, b: &Exponent) -> Exponent {
    let mut e = [0; NVARS];
    for i in 0..NVARS {
        e[i] = a[i] + b[i];
    }
    e
}

pub(crate) fn monomial_text(exp: &Exponent) -> String {
    let mut parts: Vec<String> = Vec::new();
    for (i, &k) in exp.iter().enumerate() {
        let name = Frame::R7.coord_name(i);
        match k {
            0 => {}
            1 => parts.push(name.into()),
            _ => parts.push(alloc::format!("{name}^{k}")),
        }
    }
    parts.join(" ")
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // Highest total degree first reads more naturally.
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|(a, _), (b, _)| {
            let da: u32 = a.iter().map(|&k| k as u32).sum();
            let db: u32 = b.iter().map(|&k| k as u32).sum();
            db.cmp(&da).then(b.cmp(a))
        });
        for (n, (exp, c)) in terms.into_iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            match (n, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mono = monomial_text(exp);
            if mono.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{mag} {mono}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl AddAssign<&Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: &Polynomial) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl SubAssign<&Polynomial> for Polynomial {
    fn sub_assign(&mut self, rhs: &Polynomial) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c.clone());
        }
    }
}

impl Mul<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(mul_exp(ea, eb), ca * cb);
            }
        }
        out
    }
}

impl MulAssign<&Polynomial> for Polynomial {
    fn mul_assign(&mut self, rhs: &Polynomial) {
        *self = &*self * rhs;
    }
}

impl Add<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(mut self, rhs: Polynomial) -> Polynomial {
        self += &rhs;
        self
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(mut self, rhs: Polynomial) -> Polynomial {
        self -= &rhs;
        self
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(mut self) -> Polynomial {
        for c in self.terms.values_mut() {
            *c = -c.clone();
        }
        self
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -self.clone()
    }
}
