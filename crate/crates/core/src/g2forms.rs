//! The G2 and Spin(7) forms in both sign conventions, their presentations,
//! and the metric read back from a 3-form.
//!
//! CD-first tables come straight from the octonion product. The opposite
//! convention is the pullback under `y0 → −y0`; because that map reverses
//! the fixed ascending orientation, the 4-form picks up an extra sign,
//! `ψ' = −σ*ψ`, which is exactly `∗φ'` for the ascending volume form.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::exterior::notation::form;
use crate::exterior::{Blade, ExteriorError, Form, Frame, Volume};
use crate::linalg::Matrix;
use crate::octonion;
use crate::scalars::{imag_unit, rat, ratio, GaussianRational, Polynomial, Rational, Scalar};

/// R^7 slot of `t = y0` in the `C^3 ⊕ R` picture.
pub const T_INDEX: usize = 3;
/// R^7 slots of `x1 x2 x3` and `y1 y2 y3`.
pub const X_SLOTS: [usize; 3] = [0, 1, 2];
pub const Y_SLOTS: [usize; 3] = [4, 5, 6];

/// The CD-first tables exactly as they are usually printed, term by term.
pub const PHI_PRINTED: &str = "dx1 dx2 dx3 - dx1 dy2 dy3 - dy1 dx2 dy3 - dy1 dy2 dx3 \
     - dy0 dx1 dy1 - dy0 dx2 dy2 - dy0 dx3 dy3";
pub const PSI_PRINTED: &str = "dy0 dy1 dy2 dy3 - dy0 dy1 dx2 dx3 - dy0 dx1 dy2 dx3 \
     - dy0 dx1 dx2 dy3 - dx2 dy2 dx3 dy3 - dx3 dy3 dx1 dy1 - dx1 dy1 dx2 dy2";
pub const SPIN7_PRINTED: &str = "dx0 dx1 dx2 dx3 - dx0 dx1 dy2 dy3 - dx0 dy1 dx2 dy3 \
     - dx0 dy1 dy2 dx3 - dx0 dy0 dx1 dy1 - dx0 dy0 dx2 dy2 - dx0 dy0 dx3 dy3 \
     + dy0 dy1 dy2 dy3 - dy0 dy1 dx2 dx3 - dy0 dx1 dy2 dx3 - dy0 dx1 dx2 dy3 \
     - dx2 dy2 dx3 dy3 - dx3 dy3 dx1 dy1 - dx1 dy1 dx2 dy2";

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum G2Error {
    #[error("the bilinear form of this 3-form is degenerate (rank {rank})")]
    DegenerateMetric { rank: usize },
    #[error("expected a 3-form on R7, got a {degree}-form on {frame}")]
    NotA3Form { frame: Frame, degree: usize },
    #[error("unknown presentation `{0}`")]
    UnknownPresentation(String),
    #[error("unknown convention `{0}` (expected `cd` or `opposite`)")]
    UnknownConvention(String),
    #[error(transparent)]
    Exterior(#[from] ExteriorError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Convention {
    /// Tables from the Cayley–Dickson product, anti-self-dual picture.
    CdFirst,
    /// `y0 → −y0`, self-dual picture.
    Opposite,
}

impl Convention {
    pub const ALL: [Convention; 2] = [Convention::CdFirst, Convention::Opposite];

    /// Sign of the oriented volume relative to the ascending top blade.
    pub fn orientation(self) -> i32 {
        match self {
            Convention::CdFirst => 1,
            Convention::Opposite => -1,
        }
    }

    /// `c` in `(u⌟φ)∧(v⌟φ)∧φ = c⟨u,v⟩ vol7` with the ascending `vol7`.
    pub fn metric_constant(self) -> i64 {
        match self {
            Convention::CdFirst => -6,
            Convention::Opposite => 6,
        }
    }

    /// Eigenvalues of `β ↦ ∗(φ∧β)` on the 7- and 14-dimensional pieces.
    pub fn eigenvalues(self) -> (i64, i64) {
        match self {
            Convention::CdFirst => (-2, 1),
            Convention::Opposite => (2, -1),
        }
    }

    /// Sign `s` in `φ = Re Ω + s dt∧ω`, `ψ = −dt∧Im Ω + s ½ω²` and
    /// `Φ = Re Ω4 + s ½ω4²`; also the sign of the `η` in the R^3 ⊕ R^4
    /// picture (`η⁻` for −1, `η⁺` for +1).
    pub fn sign(self) -> i64 {
        match self {
            Convention::CdFirst => -1,
            Convention::Opposite => 1,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Convention::CdFirst => "cd",
            Convention::Opposite => "opposite",
        }
    }
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Convention {
    type Err = G2Error;
    fn from_str(s: &str) -> Result<Self, G2Error> {
        match s {
            "cd" | "cd-first" => Ok(Convention::CdFirst),
            "opposite" => Ok(Convention::Opposite),
            other => Err(G2Error::UnknownConvention(other.into())),
        }
    }
}

/// Pullback under `y0 → −y0`, on either frame.
pub fn flip_y0<S: Scalar>(f: &Form<S>) -> Form<S> {
    let frame = f.frame();
    let y0 = frame.index_of("y0").expect("both frames have y0");
    let images: Vec<Form<S>> = (0..frame.dim())
        .map(|i| {
            let b = Form::basis(frame, i);
            if i == y0 {
                -b
            } else {
                b
            }
        })
        .collect();
    f.substitute(frame, &images).expect("square substitution")
}

/// Embeds R^7 into R^8 as the `x0 = 0` hyperplane.
pub fn embed_r8<S: Scalar>(f: &Form<S>) -> Form<S> {
    f.reindex(Frame::R8, |i| i + 1)
}

fn dt() -> Form<Rational> {
    Form::basis(Frame::R7, T_INDEX)
}

/// The `(1,0)`-forms `dz^j = dx^j + i dy^j` for pairs `(x slot, y slot)`.
fn dz(frame: Frame, x: usize, y: usize) -> Form<GaussianRational> {
    let mut f = Form::zero(frame, 1);
    f.add_term(Blade::single(x), GaussianRational::one());
    f.add_term(Blade::single(y), imag_unit());
    f
}

/// `ω = Σ dx^j dy^j` and `Ω = dz^1 ∧ ... ∧ dz^n` on a complex slice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KahlerPair {
    pub omega: Form<Rational>,
    pub big_omega: Form<GaussianRational>,
}

impl KahlerPair {
    fn on(frame: Frame, pairs: &[(usize, usize)]) -> Self {
        let mut omega = Form::zero(frame, 2);
        let mut big_omega = Form::scalar(frame, GaussianRational::one());
        for &(x, y) in pairs {
            add_wedge(&mut omega, &[x, y], rat(1));
            big_omega = &big_omega ^ &dz(frame, x, y);
        }
        KahlerPair { omega, big_omega }
    }

    /// The C^3 slice of R^7: `z^j = x^j + i y^j`, `j = 1, 2, 3`.
    pub fn c3() -> Self {
        Self::on(Frame::R7, &[(0, 4), (1, 5), (2, 6)])
    }

    /// C^4 = R^8 with `z^j = x^j + i y^j`, `j = 0..3`.
    pub fn c4() -> Self {
        Self::on(Frame::R8, &[(0, 4), (1, 5), (2, 6), (3, 7)])
    }

    pub fn re_omega(&self) -> Form<Rational> {
        self.big_omega.re()
    }

    pub fn im_omega(&self) -> Form<Rational> {
        self.big_omega.im()
    }

    pub fn omega_squared(&self) -> Form<Rational> {
        &self.omega ^ &self.omega
    }
}

/// `vol6 = dx1 dy1 dx2 dy2 dx3 dy3` on the C^3 slice of R^7.
pub fn vol6() -> Volume {
    Volume::ordered(Frame::R7, &[0, 4, 1, 5, 2, 6])
}

/// `vol4 = dy0 dy1 dy2 dy3` inside R^7.
pub fn vol4() -> Volume {
    Volume::ordered(Frame::R7, &[3, 4, 5, 6])
}

/// Index triples `(i, j, k)` cyclic in `1, 2, 3`.
const CYCLIC: [(usize, usize, usize); 3] = [(1, 2, 3), (2, 3, 1), (3, 1, 2)];

/// `η^±_i = dy0 dy^i ± dy^j dy^k` on the R^4 with coordinates `y` in `frame`.
pub fn eta(frame: Frame, sign: i64, i: usize) -> Form<Rational> {
    let y = |k: usize| frame.index_of(Frame::R8.coord_name(4 + k)).expect("y coordinate");
    four_dim_pair(frame, sign, i, y)
}

/// `β^±_i = dx0 dx^i ± dx^j dx^k` on the `x` copy of R^4 in R^8.
pub fn beta(sign: i64, i: usize) -> Form<Rational> {
    four_dim_pair(Frame::R8, sign, i, |k| k)
}

fn four_dim_pair(frame: Frame, sign: i64, i: usize, idx: impl Fn(usize) -> usize) -> Form<Rational> {
    assert!((1..=3).contains(&i), "η/β index runs over 1, 2, 3");
    let (_, j, k) = CYCLIC[i - 1];
    let mut f = Form::zero(frame, 2);
    add_wedge(&mut f, &[idx(0), idx(i)], rat(1));
    add_wedge(&mut f, &[idx(j), idx(k)], rat(sign));
    f
}

fn add_wedge(f: &mut Form<Rational>, seq: &[usize], c: Rational) {
    let (s, b) = Blade::from_sequence(seq).expect("distinct indices");
    f.add_term(b, c * rat(s as i64));
}

/// Every form attached to one convention.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructurePackage {
    pub convention: Convention,
    pub phi: Form<Rational>,
    pub psi: Form<Rational>,
    pub big_phi: Form<Rational>,
    pub su3: KahlerPair,
    pub su4: KahlerPair,
    /// `η^∓_i` on the `y` block of R^7 (anti-self-dual for CD-first).
    pub eta: [Form<Rational>; 3],
    /// The same `η_i` on the `y` block of R^8.
    pub eta8: [Form<Rational>; 3],
    /// `β_i` on the `x` block of R^8.
    pub beta8: [Form<Rational>; 3],
}

impl StructurePackage {
    pub fn build(convention: Convention) -> Self {
        let phi_cd = octonion::phi_form();
        let psi_cd = octonion::psi_form();
        let (phi, psi) = match convention {
            Convention::CdFirst => (phi_cd, psi_cd),
            Convention::Opposite => (flip_y0(&phi_cd), -flip_y0(&psi_cd)),
        };
        let big_phi = match convention {
            Convention::CdFirst => octonion::spin7_form(),
            Convention::Opposite => spin7_from(&phi, &psi),
        };
        Self::assemble(convention, phi, psi, big_phi)
    }

    /// A package around a user-supplied 3-form: `ψ = ∗φ` and
    /// `Φ = dx0∧φ + ψ`, all with the ascending orientation.
    pub fn from_phi(phi: Form<Rational>, convention: Convention) -> Result<Self, G2Error> {
        check_3form(&phi)?;
        let psi = phi.star();
        let big_phi = spin7_from(&phi, &psi);
        Ok(Self::assemble(convention, phi, psi, big_phi))
    }

    fn assemble(convention: Convention, phi: Form<Rational>, psi: Form<Rational>, big_phi: Form<Rational>) -> Self {
        let s = convention.sign();
        StructurePackage {
            convention,
            phi,
            psi,
            big_phi,
            su3: KahlerPair::c3(),
            su4: KahlerPair::c4(),
            eta: [1, 2, 3].map(|i| eta(Frame::R7, s, i)),
            eta8: [1, 2, 3].map(|i| eta(Frame::R8, s, i)),
            beta8: [1, 2, 3].map(|i| beta(s, i)),
        }
    }

    pub fn presentation(&self, which: Presentation) -> Vec<PresentationTerm> {
        presentation(self, which)
    }
}

/// `Φ = dx0 ∧ φ + ψ` on R^8.
pub fn spin7_from(phi: &Form<Rational>, psi: &Form<Rational>) -> Form<Rational> {
    let dx0 = Form::basis(Frame::R8, 0);
    &(&dx0 ^ &embed_r8(phi)) + &embed_r8(psi)
}

fn check_3form(phi: &Form<Rational>) -> Result<(), G2Error> {
    if phi.frame() != Frame::R7 || phi.degree() != 3 {
        return Err(G2Error::NotA3Form { frame: phi.frame(), degree: phi.degree() });
    }
    Ok(())
}

/// The printed CD-first tables, parsed.
pub fn printed_phi() -> Form<Rational> {
    form(Frame::R7, 3, PHI_PRINTED)
}

pub fn printed_psi() -> Form<Rational> {
    form(Frame::R7, 4, PSI_PRINTED)
}

pub fn printed_spin7() -> Form<Rational> {
    form(Frame::R8, 4, SPIN7_PRINTED)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Presentation {
    /// `R^7 = C^3 ⊕ R`.
    C3PlusR,
    /// `R^7 = R^3 ⊕ R^4`.
    R3PlusR4,
    /// `R^8 = C^4`.
    C4,
    /// `R^8 = R^4 ⊕ R^4`.
    R4PlusR4,
    /// `φ = vol3 + dθ` on the bundle of 2-forms over R^4.
    ThetaBundle,
}

impl Presentation {
    pub const ALL: [Presentation; 5] = [
        Presentation::C3PlusR,
        Presentation::R3PlusR4,
        Presentation::C4,
        Presentation::R4PlusR4,
        Presentation::ThetaBundle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Presentation::C3PlusR => "c3+r",
            Presentation::R3PlusR4 => "r3+r4",
            Presentation::C4 => "c4",
            Presentation::R4PlusR4 => "r4+r4",
            Presentation::ThetaBundle => "theta",
        }
    }
}

impl FromStr for Presentation {
    type Err = G2Error;
    fn from_str(s: &str) -> Result<Self, G2Error> {
        Presentation::ALL.into_iter().find(|p| p.name() == s).ok_or_else(|| G2Error::UnknownPresentation(s.into()))
    }
}

/// Which structure form a presentation term contributes to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Target {
    Phi,
    Psi,
    Spin7,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PresentationTerm {
    pub target: Target,
    pub label: String,
    pub form: Form<Rational>,
}

fn term(target: Target, label: impl Into<String>, form: Form<Rational>) -> PresentationTerm {
    PresentationTerm { target, label: label.into(), form }
}

/// Splits the package's forms into the summands of a presentation. The
/// terms of each target add up to the package form exactly.
pub fn presentation(pkg: &StructurePackage, which: Presentation) -> Vec<PresentationTerm> {
    let s = pkg.convention.sign();
    let pm = if s < 0 { "-" } else { "+" };
    let eta_name = if s < 0 { "η⁻" } else { "η⁺" };
    let beta_name = if s < 0 { "β⁻" } else { "β⁺" };
    let half = ratio(1, 2);
    let x = |k: usize| Form::basis(Frame::R7, k - 1);
    let mut out = Vec::new();
    match which {
        Presentation::C3PlusR => {
            let c3 = &pkg.su3;
            out.push(term(Target::Phi, "Re(Ω)", c3.re_omega()));
            out.push(term(Target::Phi, format!("{pm}dt∧ω"), (&dt() ^ &c3.omega).scale_rational(&rat(s))));
            out.push(term(Target::Psi, "-dt∧Im(Ω)", -(&dt() ^ &c3.im_omega())));
            out.push(term(Target::Psi, format!("{pm}½ω²"), c3.omega_squared().scale_rational(&(rat(s) * &half))));
        }
        Presentation::R3PlusR4 | Presentation::ThetaBundle => {
            out.push(term(Target::Phi, "vol3", &(&x(1) ^ &x(2)) ^ &x(3)));
            for k in 1..=3 {
                let piece = (&x(k) ^ &pkg.eta[k - 1]).scale_rational(&rat(-s));
                let label = if which == Presentation::ThetaBundle {
                    format!("d(x{k} {eta_name}{k})")
                } else {
                    format!("{}dx{k}∧{eta_name}{k}", if s < 0 { "+" } else { "-" })
                };
                out.push(term(Target::Phi, label, piece));
            }
            if which == Presentation::R3PlusR4 {
                out.push(term(Target::Psi, "vol4", vol4().form()));
                for (i, j, k) in CYCLIC {
                    let piece = -(&(&x(i) ^ &x(j)) ^ &pkg.eta[k - 1]);
                    out.push(term(Target::Psi, format!("-dx{i}dx{j}∧{eta_name}{k}"), piece));
                }
            }
        }
        Presentation::C4 => {
            let c4 = &pkg.su4;
            out.push(term(Target::Spin7, "Re(Ω4)", c4.re_omega()));
            out.push(term(Target::Spin7, format!("{pm}½ω4²"), c4.omega_squared().scale_rational(&(rat(s) * &half))));
        }
        Presentation::R4PlusR4 => {
            let vol_x = Form::monomial(Frame::R8, Blade::from_mask(0b1111), rat(1));
            let vol_y = Form::monomial(Frame::R8, Blade::from_mask(0b1111_0000), rat(1));
            out.push(term(Target::Spin7, "volX", vol_x));
            for i in 0..3 {
                let piece = (&pkg.beta8[i] ^ &pkg.eta8[i]).scale_rational(&rat(-s));
                let sign = if s < 0 { "+" } else { "-" };
                out.push(term(Target::Spin7, format!("{sign}{beta_name}{n}∧{eta_name}{n}", n = i + 1), piece));
            }
            out.push(term(Target::Spin7, "volY", vol_y));
        }
    }
    out
}

/// Sums the presentation terms belonging to `target`.
pub fn recombine(terms: &[PresentationTerm], target: Target) -> Option<Form<Rational>> {
    let mut it = terms.iter().filter(|t| t.target == target);
    let first = it.next()?.form.clone();
    Some(it.fold(first, |acc, t| &acc + &t.form))
}

/// The canonical 2-form `θ = Σ x^k η_k` on the bundle of (anti-)self-dual
/// 2-forms, with polynomial coefficients. For the opposite convention the
/// sign makes `φ = vol3 + dθ` hold there too.
pub fn theta(convention: Convention) -> Form<Polynomial> {
    let s = convention.sign();
    let mut out = Form::zero(Frame::R7, 2);
    for k in 1..=3 {
        let coeff = Polynomial::var(k - 1).scale(&rat(-s));
        for (b, c) in eta(Frame::R7, s, k).terms() {
            out.add_term(*b, coeff.scale(c));
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SplitVariant {
    /// `vol3 − Σ dx^k η⁻_k`.
    MinusEtaMinus,
    /// `vol3 + Σ dx^k η⁺_k`.
    PlusEtaPlus,
}

pub fn build_split_phi(variant: SplitVariant) -> Form<Rational> {
    let (sign, eta_sign) = match variant {
        SplitVariant::MinusEtaMinus => (-1, -1),
        SplitVariant::PlusEtaPlus => (1, 1),
    };
    let x = |k: usize| Form::basis(Frame::R7, k - 1);
    let mut phi = &(&x(1) ^ &x(2)) ^ &x(3);
    for k in 1..=3 {
        phi = &phi + &(&x(k) ^ &eta(Frame::R7, eta_sign, k)).scale_rational(&rat(sign));
    }
    phi
}

/// The symmetric bilinear form read off a 3-form, and the metric it induces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtractedMetric {
    /// `B_{uv}`: coefficient of the oriented `vol7` in `(e_u⌟φ)∧(e_v⌟φ)∧φ`.
    pub bilinear: Matrix<Rational>,
    /// `B / (−6)`.
    pub gram: Matrix<Rational>,
    /// `(positive, negative)` eigenvalue counts of the metric.
    pub signature: (usize, usize),
}

/// `B_{uv}` as the coefficient of the ascending `vol7`.
pub fn bilinear_form(phi: &Form<Rational>) -> Result<Matrix<Rational>, G2Error> {
    check_3form(phi)?;
    let top = Frame::R7.top_blade();
    let contractions: Vec<Form<Rational>> = (0..7).map(|u| phi.interior_basis(u)).collect::<Result<_, _>>()?;
    let mut b = Matrix::zeros(7, 7);
    for u in 0..7 {
        for v in u..7 {
            let c = (&(&contractions[u] ^ &contractions[v]) ^ phi).coeff(&top);
            b.set(u, v, c.clone());
            b.set(v, u, c);
        }
    }
    Ok(b)
}

/// Reads the metric off `φ` relative to the oriented volume
/// `orientation · dx1 ... dy3`, normalised by `−6`. The CD-first table with
/// orientation `+1` and the opposite table with orientation `−1` both give
/// the identity.
pub fn metric_from_phi(phi: &Form<Rational>, orientation: i32) -> Result<ExtractedMetric, G2Error> {
    assert!(orientation == 1 || orientation == -1);
    let bilinear = bilinear_form(phi)?.scale(&rat(orientation as i64));
    let rank = bilinear.rank();
    if rank < 7 {
        return Err(G2Error::DegenerateMetric { rank });
    }
    let gram = bilinear.scale(&ratio(-1, 6));
    let (pos, neg, _) = gram.signature();
    Ok(ExtractedMetric { bilinear, gram, signature: (pos, neg) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exterior::MetricData;
    use crate::scalars::gauss;

    fn pkg(c: Convention) -> StructurePackage {
        StructurePackage::build(c)
    }

    #[test]
    fn octonion_tables_match_printed_tables() {
        let p = pkg(Convention::CdFirst);
        assert_eq!(p.phi, printed_phi());
        assert_eq!(p.psi, printed_psi());
        assert_eq!(p.big_phi, printed_spin7());
    }

    #[test]
    fn psi_is_star_phi_in_both_conventions() {
        for c in Convention::ALL {
            let p = pkg(c);
            assert_eq!(p.phi.star(), p.psi, "{c}");
            assert_eq!(p.big_phi, spin7_from(&p.phi, &p.psi), "{c}");
            assert_eq!(p.big_phi.star(), p.big_phi, "{c}");
        }
    }

    #[test]
    fn top_degree_identities() {
        for c in Convention::ALL {
            let p = pkg(c);
            assert_eq!(&p.phi ^ &p.psi, Volume::top(Frame::R7, 1).form().scale_rational(&rat(7)));
            assert_eq!(&p.big_phi ^ &p.big_phi, Volume::top(Frame::R8, 1).form().scale_rational(&rat(14)));
        }
    }

    #[test]
    fn opposite_phi_flips_the_y0_terms() {
        let cd = pkg(Convention::CdFirst).phi;
        let opp = pkg(Convention::Opposite).phi;
        for (b, c) in cd.terms() {
            let expect = if b.contains(T_INDEX) { -c.clone() } else { c.clone() };
            assert_eq!(opp.coeff(b), expect);
        }
    }

    #[test]
    fn complex_pictures() {
        for c in Convention::ALL {
            let p = pkg(c);
            let s = rat(c.sign());
            let c3 = &p.su3;
            let dt_omega = &dt() ^ &c3.omega;
            assert_eq!(p.phi, &c3.re_omega() + &dt_omega.scale_rational(&s));
            let psi = &(-(&dt() ^ &c3.im_omega())) + &c3.omega_squared().scale_rational(&(s.clone() * ratio(1, 2)));
            assert_eq!(p.psi, psi);
            let c4 = &p.su4;
            assert_eq!(p.big_phi, &c4.re_omega() + &c4.omega_squared().scale_rational(&(s * ratio(1, 2))));
        }
    }

    #[test]
    fn su3_relations() {
        let c3 = KahlerPair::c3();
        let om = c3.omega.to_complex();
        assert!((&om ^ &c3.big_omega).is_zero());
        assert!((&c3.omega ^ &c3.re_omega()).is_zero());
        let vol6f: Form<Rational> = vol6().form();
        let cube = &c3.omega_squared() ^ &c3.omega;
        assert_eq!(cube.scale_rational(&ratio(1, 6)), vol6f);
        let oo = &c3.big_omega ^ &c3.big_omega.conjugate();
        assert_eq!(oo.scale(&gauss(rat(0), ratio(1, 8))), vol6f.to_complex());
        assert_eq!(&c3.re_omega() ^ &c3.im_omega(), vol6f.scale_rational(&rat(4)));
        let e = MetricData::euclidean(Frame::R7);
        assert_eq!(c3.re_omega().dot(&c3.re_omega()), rat(4));
        assert_eq!(c3.im_omega().dot(&c3.im_omega()), rat(4));
        assert_eq!(c3.re_omega().hodge_star(&vol6(), &e).unwrap(), c3.im_omega());
        assert_eq!(c3.im_omega().hodge_star(&vol6(), &e).unwrap(), -c3.re_omega());
        assert_eq!(Volume::top(Frame::R7, 1).form::<Rational>(), &dt() ^ &vol6f);
    }

    #[test]
    fn presentations_recombine() {
        for c in Convention::ALL {
            let p = pkg(c);
            for which in Presentation::ALL {
                let terms = p.presentation(which);
                if let Some(f) = recombine(&terms, Target::Phi) {
                    assert_eq!(f, p.phi, "{c} {which:?}");
                }
                if let Some(f) = recombine(&terms, Target::Psi) {
                    assert_eq!(f, p.psi, "{c} {which:?}");
                }
                if let Some(f) = recombine(&terms, Target::Spin7) {
                    assert_eq!(f, p.big_phi, "{c} {which:?}");
                }
            }
        }
    }

    #[test]
    fn eta_duality() {
        let e = MetricData::euclidean(Frame::R7);
        for i in 1..=3 {
            let m = eta(Frame::R7, -1, i);
            let p = eta(Frame::R7, 1, i);
            assert_eq!(m.hodge_star(&vol4(), &e).unwrap(), -m.clone());
            assert_eq!(p.hodge_star(&vol4(), &e).unwrap(), p);
        }
    }

    #[test]
    fn metric_extraction() {
        for c in Convention::ALL {
            let p = pkg(c);
            let b = bilinear_form(&p.phi).unwrap();
            let expected = Matrix::identity(7).scale(&rat(c.metric_constant()));
            assert_eq!(b, expected);
            let m = metric_from_phi(&p.phi, c.orientation()).unwrap();
            assert_eq!(m.gram, Matrix::identity(7));
            assert_eq!(m.signature, (7, 0));
        }
    }

    #[test]
    fn split_forms_are_indefinite() {
        for v in [SplitVariant::MinusEtaMinus, SplitVariant::PlusEtaPlus] {
            let m = metric_from_phi(&build_split_phi(v), 1).unwrap();
            assert!(m.signature == (3, 4) || m.signature == (4, 3), "{v:?}: {:?}", m.signature);
        }
    }

    #[test]
    fn degenerate_form_is_rejected() {
        let vol3 = form(Frame::R7, 3, "dx1 dx2 dx3");
        assert!(matches!(metric_from_phi(&vol3, 1), Err(G2Error::DegenerateMetric { .. })));
    }

    #[test]
    fn parse_names() {
        assert_eq!("opposite".parse::<Convention>(), Ok(Convention::Opposite));
        assert!("sideways".parse::<Convention>().is_err());
        assert_eq!("c4".parse::<Presentation>(), Ok(Presentation::C4));
        assert!("c5".parse::<Presentation>().is_err());
    }
}
