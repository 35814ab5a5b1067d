//! Deterministic random test data: small rational coefficients, sparse
//! polynomials, forms and fields.

use alloc::vec::Vec;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::diffops::{Spinor, VectorField};
use crate::exterior::{Form, Frame};
use crate::scalars::{gauss, rat, Exponent, GaussianRational, Polynomial, Rational, NVARS};

/// Coefficients are drawn uniformly from `{−3, …, 3}`.
pub const COEFF_RANGE: i64 = 3;
/// Upper bound on the number of monomials in a random polynomial.
pub const MAX_TERMS: usize = 4;

/// The generator for one trial: independent of every other trial.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

pub fn rational<R: Rng>(rng: &mut R) -> Rational {
    rat(rng.gen_range(-COEFF_RANGE..=COEFF_RANGE))
}

pub fn gaussian<R: Rng>(rng: &mut R) -> GaussianRational {
    gauss(rational(rng), rational(rng))
}

pub fn real_form<R: Rng>(rng: &mut R, degree: usize) -> Form<Rational> {
    let mut f = Form::zero(Frame::R7, degree);
    for b in Frame::R7.blades(degree) {
        f.add_term(b, rational(rng));
    }
    f
}

pub fn gaussian_form<R: Rng>(rng: &mut R, degree: usize) -> Form<GaussianRational> {
    let mut f = Form::zero(Frame::R7, degree);
    for b in Frame::R7.blades(degree) {
        f.add_term(b, gaussian(rng));
    }
    f
}

/// A sparse polynomial of total degree at most `max_degree`.
pub fn polynomial<R: Rng>(rng: &mut R, max_degree: usize) -> Polynomial {
    let mut p = Polynomial::zero();
    for _ in 0..rng.gen_range(1..=MAX_TERMS) {
        let mut exp: Exponent = [0; NVARS];
        for _ in 0..rng.gen_range(0..=max_degree) {
            exp[rng.gen_range(0..NVARS)] += 1;
        }
        p.add_term(exp, rational(rng));
    }
    p
}

pub fn vector_field<R: Rng>(rng: &mut R, max_degree: usize) -> VectorField {
    VectorField(core::array::from_fn(|_| polynomial(rng, max_degree)))
}

pub fn spinor<R: Rng>(rng: &mut R, max_degree: usize) -> Spinor {
    Spinor { f: polynomial(rng, max_degree), x: vector_field(rng, max_degree) }
}

/// A polynomial `degree`-form with a handful of nonzero terms.
pub fn polynomial_form<R: Rng>(rng: &mut R, degree: usize, max_degree: usize) -> Form<Polynomial> {
    let blades: Vec<_> = Frame::R7.blades(degree);
    let mut f = Form::zero(Frame::R7, degree);
    for _ in 0..rng.gen_range(1..=MAX_TERMS) {
        let b = blades[rng.gen_range(0..blades.len())];
        f.add_term(b, polynomial(rng, max_degree));
    }
    f
}
