//! Flat-space first-order operators on R^7 with polynomial coefficients:
//! grad, div, d, d*, curl, Clifford multiplication and the Dirac operator
//! on `S = R ⊕ TM`.
//!
//! The metric is the identity, so `♭` and `♯` just relabel components.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::array;
use core::ops::{Add, Sub};

use crate::exterior::{Blade, ExteriorError, Form, Frame};
use crate::g2forms::{theta, Convention, StructurePackage};
use crate::octonion::{Octonion, StructureConstants};
use crate::random;
use crate::scalars::{rat, Polynomial, Rational, Scalar};

const N: usize = 7;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DiffError {
    #[error("the Hodge Laplacian is implemented on 0- and 1-forms, not {0}-forms")]
    UnsupportedDegree(usize),
    #[error(transparent)]
    Exterior(#[from] ExteriorError),
}

/// A polynomial vector field on R^7, components in frame order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VectorField(pub [Polynomial; N]);

impl VectorField {
    pub fn zero() -> Self {
        VectorField(array::from_fn(|_| Polynomial::zero()))
    }

    pub fn basis(i: usize) -> Self {
        let mut v = Self::zero();
        v.0[i] = Polynomial::one();
        v
    }

    pub fn constant(c: &[Rational; N]) -> Self {
        VectorField(array::from_fn(|i| Polynomial::constant(c[i].clone())))
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Polynomial::is_zero)
    }

    pub fn dot(&self, other: &Self) -> Polynomial {
        let mut acc = Polynomial::zero();
        for (a, b) in self.0.iter().zip(&other.0) {
            acc += &(a * b);
        }
        acc
    }

    pub fn times(&self, f: &Polynomial) -> Self {
        VectorField(array::from_fn(|i| f * &self.0[i]))
    }

    pub fn scale(&self, r: &Rational) -> Self {
        VectorField(array::from_fn(|i| self.0[i].scale(r)))
    }

    /// `X♭` as a 1-form.
    pub fn flat(&self) -> Form<Polynomial> {
        let mut f = Form::zero(Frame::R7, 1);
        for (i, c) in self.0.iter().enumerate() {
            f.add_term(Blade::single(i), c.clone());
        }
        f
    }

    /// `α♯` for a 1-form on R^7.
    pub fn sharp(a: &Form<Polynomial>) -> Result<Self, ExteriorError> {
        if a.frame() != Frame::R7 {
            return Err(ExteriorError::FrameMismatch { left: Frame::R7, right: a.frame() });
        }
        if a.degree() != 1 {
            return Err(ExteriorError::DegreeMismatch { left: 1, right: a.degree() });
        }
        Ok(VectorField(array::from_fn(|i| a.coeff(&Blade::single(i)))))
    }

    /// `Σ ∂ᵢ² Xᵏ` componentwise.
    pub fn laplacian(&self) -> Self {
        VectorField(array::from_fn(|i| self.0[i].laplacian()))
    }

    pub fn partial(&self, var: usize) -> Self {
        VectorField(array::from_fn(|i| self.0[i].partial(var)))
    }

    fn text(&self) -> String {
        let parts: Vec<String> = self.0.iter().map(|p| format!("{p}")).collect();
        format!("({})", parts.join(", "))
    }
}

impl Add for &VectorField {
    type Output = VectorField;
    fn add(self, o: &VectorField) -> VectorField {
        VectorField(array::from_fn(|i| &self.0[i] + &o.0[i]))
    }
}

impl Sub for &VectorField {
    type Output = VectorField;
    fn sub(self, o: &VectorField) -> VectorField {
        VectorField(array::from_fn(|i| &self.0[i] - &o.0[i]))
    }
}

/// A spinor `(f, X)` in `R ⊕ TM`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Spinor {
    pub f: Polynomial,
    pub x: VectorField,
}

impl Spinor {
    pub fn zero() -> Self {
        Spinor { f: Polynomial::zero(), x: VectorField::zero() }
    }

    pub fn is_zero(&self) -> bool {
        self.f.is_zero() && self.x.is_zero()
    }

    pub fn inner(&self, o: &Self) -> Polynomial {
        &(&self.f * &o.f) + &self.x.dot(&o.x)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Spinor { f: self.f.scale(r), x: self.x.scale(r) }
    }

    pub fn times(&self, g: &Polynomial) -> Self {
        Spinor { f: &self.f * g, x: self.x.times(g) }
    }

    pub fn partial(&self, var: usize) -> Self {
        Spinor { f: self.f.partial(var), x: self.x.partial(var) }
    }

    fn text(&self) -> String {
        format!("({}, {})", self.f, self.x.text())
    }
}

impl Add for &Spinor {
    type Output = Spinor;
    fn add(self, o: &Spinor) -> Spinor {
        Spinor { f: &self.f + &o.f, x: &self.x + &o.x }
    }
}

impl Sub for &Spinor {
    type Output = Spinor;
    fn sub(self, o: &Spinor) -> Spinor {
        Spinor { f: &self.f - &o.f, x: &self.x - &o.x }
    }
}

pub fn grad(f: &Polynomial) -> VectorField {
    VectorField(array::from_fn(|k| f.partial(k)))
}

pub fn div(x: &VectorField) -> Polynomial {
    let mut acc = Polynomial::zero();
    for (i, c) in x.0.iter().enumerate() {
        acc += &c.partial(i);
    }
    acc
}

/// `d(c · blade) = Σᵢ ∂ᵢc dxⁱ ∧ blade`.
pub fn exterior_derivative(a: &Form<Polynomial>) -> Result<Form<Polynomial>, ExteriorError> {
    let n = a.frame().dim();
    if a.degree() >= n {
        return Err(ExteriorError::DegreeTooLarge(a.degree() + 1));
    }
    let mut out = Form::zero(a.frame(), a.degree() + 1);
    for (b, c) in a.terms() {
        for i in 0..n {
            if b.contains(i) {
                continue;
            }
            let dc = c.partial(i);
            if dc.is_zero() {
                continue;
            }
            let sign = Blade::single(i).wedge_sign(*b).expect("disjoint");
            out.add_term(Blade::single(i).union(*b), dc.scale(&rat(sign as i64)));
        }
    }
    Ok(out)
}

/// `d* = (−1)^k ∗d∗` on k-forms over R^7; zero on functions.
pub fn codifferential(a: &Form<Polynomial>) -> Result<Form<Polynomial>, ExteriorError> {
    if a.degree() == 0 {
        return Ok(Form::zero(a.frame(), 0));
    }
    let out = exterior_derivative(&a.star())?.star();
    Ok(if a.degree() % 2 == 1 { -out } else { out })
}

/// `Δ_d = d d* + d* d` on 0- and 1-forms.
pub fn hodge_laplacian(a: &Form<Polynomial>) -> Result<Form<Polynomial>, DiffError> {
    if a.degree() > 1 {
        return Err(DiffError::UnsupportedDegree(a.degree()));
    }
    let dd = codifferential(&exterior_derivative(a)?)?;
    if a.degree() == 0 {
        return Ok(dd);
    }
    Ok(&exterior_derivative(&codifferential(a)?)? + &dd)
}

/// The G2 data the vector-calculus operators need: the table of `φ` for
/// the index formulas and the 4-form `ψ` for the invariant ones.
#[derive(Debug, Clone)]
pub struct FlatG2 {
    consts: StructureConstants,
    psi: Form<Polynomial>,
}

impl FlatG2 {
    pub fn new(phi: &Form<Rational>, psi: &Form<Rational>) -> Self {
        FlatG2 { consts: StructureConstants::from_forms(phi, psi), psi: psi.to_polynomial() }
    }

    pub fn standard() -> Self {
        Self::from_package(&StructurePackage::build(Convention::CdFirst))
    }

    pub fn from_package(pkg: &StructurePackage) -> Self {
        Self::new(&pkg.phi, &pkg.psi)
    }

    pub fn cross(&self, x: &VectorField, y: &VectorField) -> VectorField {
        VectorField(self.consts.cross(&x.0, &y.0))
    }

    /// `(curl X)ˡ = Σ ∂ₐX_b φ_{abl}`.
    pub fn curl_index(&self, x: &VectorField) -> VectorField {
        let mut out = VectorField::zero();
        for a in 0..N {
            for b in 0..N {
                let d = x.0[b].partial(a);
                if d.is_zero() {
                    continue;
                }
                for l in 0..N {
                    let c = self.consts.phi(a, b, l);
                    if !c.is_zero() {
                        out.0[l] += &d.scale(c);
                    }
                }
            }
        }
        out
    }

    /// `(curl X)♭ = ∗(dX♭ ∧ ψ)`.
    pub fn curl_invariant(&self, x: &VectorField) -> VectorField {
        let dx = exterior_derivative(&x.flat()).expect("1-form");
        VectorField::sharp(&(&dx ^ &self.psi).star()).expect("∗ of a 6-form is a 1-form")
    }

    pub fn curl(&self, x: &VectorField) -> VectorField {
        self.curl_invariant(x)
    }

    /// `Y · (f, Z) = (−⟨Y, Z⟩, fY + Y × Z)`.
    pub fn clifford_multiply(&self, y: &VectorField, s: &Spinor) -> Spinor {
        Spinor { f: -y.dot(&s.x), x: &y.times(&s.f) + &self.cross(y, &s.x) }
    }

    /// `𝔇 s = Σₖ eₖ · ∂ₖ s`.
    pub fn dirac(&self, s: &Spinor) -> Spinor {
        let mut out = Spinor::zero();
        for k in 0..N {
            let ds = s.partial(k);
            if !ds.is_zero() {
                out = &out + &self.clifford_multiply(&VectorField::basis(k), &ds);
            }
        }
        out
    }

    /// `(−div X, grad f + curl X)`.
    pub fn dirac_formula(&self, s: &Spinor) -> Spinor {
        Spinor { f: -div(&s.x), x: &grad(&s.f) + &self.curl(&s.x) }
    }

    /// `Wᵏ = ⟨eₖ · s₁, s₂⟩`, whose divergence is `⟨𝔇s₁, s₂⟩ − ⟨s₁, 𝔇s₂⟩`.
    pub fn adjoint_witness(&self, s1: &Spinor, s2: &Spinor) -> VectorField {
        VectorField(array::from_fn(|k| self.clifford_multiply(&VectorField::basis(k), s1).inner(s2)))
    }
}

/// Clifford multiplication read off the octonion product `(0, Y)(f, Z)`.
pub fn clifford_by_octonions(y: &VectorField, s: &Spinor) -> Spinor {
    let y_oct = Octonion::imaginary(&y.0);
    let mut c: [Polynomial; 8] = array::from_fn(|_| Polynomial::zero());
    c[0] = s.f.clone();
    c[1..].clone_from_slice(&s.x.0);
    let p = &y_oct * &Octonion::from_components(c);
    Spinor { f: p.re(), x: VectorField(p.im()) }
}

/// `Δ_d` applied to a spinor: `(Δ_d f, (Δ_d X♭)♯)`.
pub fn spinor_hodge_laplacian(s: &Spinor) -> Result<Spinor, DiffError> {
    let f = hodge_laplacian(&Form::scalar(Frame::R7, s.f.clone()))?;
    let x = hodge_laplacian(&s.x.flat())?;
    Ok(Spinor { f: f.coeff(&Blade::SCALAR), x: VectorField::sharp(&x)? })
}

/// Outcome of one identity over all trials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityResult {
    pub name: &'static str,
    pub trials: usize,
    pub passed: bool,
    /// The first failing trial and its nonzero residual.
    pub counterexample: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct IdentityReport {
    pub results: Vec<IdentityResult>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.results.iter().all(|r| r.passed)
    }

    pub fn get(&self, name: &str) -> Option<&IdentityResult> {
        self.results.iter().find(|r| r.name == name)
    }

    fn record(&mut self, name: &'static str, trial: u64, residual: Option<String>) {
        let idx = match self.results.iter().position(|r| r.name == name) {
            Some(i) => i,
            None => {
                self.results.push(IdentityResult { name, trials: 0, passed: true, counterexample: None });
                self.results.len() - 1
            }
        };
        let r = &mut self.results[idx];
        r.trials += 1;
        if let Some(res) = residual {
            if r.passed {
                r.passed = false;
                r.counterexample = Some(format!("trial {trial}: residual {res}"));
            }
        }
    }
}

pub const CURL_GRAD: &str = "curl∘grad = 0";
pub const DIV_CURL: &str = "div∘curl = 0";
pub const CURL_CURL: &str = "curl² = grad∘div + Δ_d";
pub const CURL_PATHS: &str = "curl index path = ∗(dX♭∧ψ)";
pub const CLIFFORD_RELATION: &str = "X·(Y·s) + Y·(X·s) = −2⟨X,Y⟩s";
pub const CLIFFORD_SKEW: &str = "⟨X·s₁,s₂⟩ = −⟨s₁,X·s₂⟩";
pub const CLIFFORD_OCTONION: &str = "Clifford product = octonion product";
pub const DIRAC_FORMULA: &str = "𝔇 = (−div, grad + curl)";
pub const DIRAC_SQUARED: &str = "𝔇² = Δ_d";
pub const DIRAC_ADJOINT: &str = "⟨𝔇s₁,s₂⟩ − ⟨s₁,𝔇s₂⟩ = div W";
pub const D_SQUARED: &str = "d∘d = 0";
pub const DIV_STAR: &str = "div = ∗d∗♭";
pub const LAPLACIAN: &str = "Δ_d = −Σ∂ᵢ² on 0- and 1-forms";
pub const PRODUCT_RULE: &str = "grad(fg) = f grad g + g grad f";
pub const THETA: &str = "φ = vol₃ + dθ";

fn vf_residual(r: VectorField) -> Option<String> {
    (!r.is_zero()).then(|| r.text())
}

fn poly_residual(r: Polynomial) -> Option<String> {
    (!r.is_zero()).then(|| format!("{r}"))
}

fn spinor_residual(r: Spinor) -> Option<String> {
    (!r.is_zero()).then(|| r.text())
}

fn form_residual(r: Form<Polynomial>) -> Option<String> {
    (!r.is_zero()).then(|| format!("{r}"))
}

/// Runs every identity for `trials` random polynomial inputs of degree at
/// most `max_degree`. Trial `t` draws from the stream `(seed, t)`.
pub fn identity_suite(seed: u64, trials: u64, max_degree: usize) -> IdentityReport {
    identity_suite_with(&StructurePackage::build(Convention::CdFirst), seed, trials, max_degree)
}

/// As [`identity_suite`], against an arbitrary package.
pub fn identity_suite_with(pkg: &StructurePackage, seed: u64, trials: u64, max_degree: usize) -> IdentityReport {
    let g2 = FlatG2::from_package(pkg);
    let mut report = IdentityReport::default();
    for t in 0..trials {
        run_trial(&g2, &mut report, seed, t, max_degree);
    }
    if trials > 0 {
        let rhs = &vol3().to_polynomial() + &exterior_derivative(&theta(pkg.convention)).expect("2-form");
        report.record(THETA, 0, form_residual(&pkg.phi.to_polynomial() - &rhs));
    }
    report
}

fn vol3() -> Form<Rational> {
    Form::monomial(Frame::R7, Blade::from_mask(0b111), rat(1))
}

fn run_trial(g2: &FlatG2, report: &mut IdentityReport, seed: u64, t: u64, max_degree: usize) {
    let mut rng = random::trial_rng(seed, t);
    let f = random::polynomial(&mut rng, max_degree);
    let g = random::polynomial(&mut rng, max_degree);
    let x = random::vector_field(&mut rng, max_degree);
    let y = random::vector_field(&mut rng, max_degree);
    let s1 = random::spinor(&mut rng, max_degree);
    let s2 = random::spinor(&mut rng, max_degree);
    let k = (t as usize) % N;
    let a = random::polynomial_form(&mut rng, k, max_degree);

    let curl_x = g2.curl(&x);
    report.record(CURL_GRAD, t, vf_residual(g2.curl(&grad(&f))));
    report.record(DIV_CURL, t, poly_residual(div(&curl_x)));
    let lap_x = VectorField::sharp(&hodge_laplacian(&x.flat()).expect("1-form")).expect("1-form");
    report.record(CURL_CURL, t, vf_residual(&g2.curl(&curl_x) - &(&grad(&div(&x)) + &lap_x)));
    report.record(CURL_PATHS, t, vf_residual(&g2.curl_index(&x) - &curl_x));

    // Clifford algebra, pointwise with polynomial coefficients
    let xy = g2.clifford_multiply(&x, &g2.clifford_multiply(&y, &s1));
    let yx = g2.clifford_multiply(&y, &g2.clifford_multiply(&x, &s1));
    let rhs = s1.times(&x.dot(&y)).scale(&rat(-2));
    report.record(CLIFFORD_RELATION, t, spinor_residual(&(&xy + &yx) - &rhs));
    let skew = &g2.clifford_multiply(&x, &s1).inner(&s2) + &s1.inner(&g2.clifford_multiply(&x, &s2));
    report.record(CLIFFORD_SKEW, t, poly_residual(skew));
    report.record(
        CLIFFORD_OCTONION,
        t,
        spinor_residual(&g2.clifford_multiply(&x, &s1) - &clifford_by_octonions(&x, &s1)),
    );

    let d1 = g2.dirac(&s1);
    report.record(DIRAC_FORMULA, t, spinor_residual(&d1 - &g2.dirac_formula(&s1)));
    let lap_s = spinor_hodge_laplacian(&s1).expect("degrees 0 and 1");
    report.record(DIRAC_SQUARED, t, spinor_residual(&g2.dirac(&d1) - &lap_s));
    let lhs = &d1.inner(&s2) - &s1.inner(&g2.dirac(&s2));
    report.record(DIRAC_ADJOINT, t, poly_residual(&lhs - &div(&g2.adjoint_witness(&s1, &s2))));

    let da = exterior_derivative(&a).expect("degree below 7");
    let dda =
        if da.degree() < N { exterior_derivative(&da).expect("degree below 7") } else { Form::zero(Frame::R7, 0) };
    report.record(D_SQUARED, t, form_residual(dda));
    let star_path = exterior_derivative(&x.flat().star()).expect("6-form").star();
    report.record(DIV_STAR, t, poly_residual(&div(&x) - &star_path.coeff(&Blade::SCALAR)));
    let lap_f = hodge_laplacian(&Form::scalar(Frame::R7, f.clone())).expect("0-form").coeff(&Blade::SCALAR);
    let lap_res = (&lap_f + &f.laplacian(), &lap_x + &x.laplacian());
    report.record(
        LAPLACIAN,
        t,
        match lap_res {
            (p, v) if p.is_zero() && v.is_zero() => None,
            (p, v) => Some(format!("{p}; {}", v.text())),
        },
    );
    let fg = &f * &g;
    report.record(PRODUCT_RULE, t, vf_residual(&grad(&fg) - &(&grad(&g).times(&f) + &grad(&f).times(&g))));
}

/// A copy of the standard package with the sign of one `ψ` coefficient
/// flipped; the identity suite must fail against it.
pub fn corrupted_psi_package() -> StructurePackage {
    let mut pkg = StructurePackage::build(Convention::CdFirst);
    let (b, c) = {
        let (b, c) = pkg.psi.terms().next().expect("ψ is nonzero");
        (*b, c.clone())
    };
    pkg.psi.add_term(b, Scalar::scale(&c, &rat(-2)));
    pkg
}
