//! Type decompositions of 2- and 3-forms on the flat model `R × C^3`.
//!
//! Two pictures are compared: the G2 splitting into irreducible pieces
//! (`Ω²₇ ⊕ Ω²₁₄`, `Ω³₁ ⊕ Ω³₇ ⊕ Ω³₂₇`) and the SU(3) splitting into `(p,q)`
//! types of the `C^3` slice together with a `dt` factor.
//!
//! Complex forms are handled in two bases on the same seven slots. The
//! real coordinate basis is `dx1 dx2 dx3 dt dy1 dy2 dy3`. The complex basis
//! puts `dz^j` in the `x^j` slot and `dz̄^j` in the `y^j` slot, with `dt`
//! unchanged, so a blade's `(p,q)` type is just a count of slots.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::exterior::{Blade, ExteriorError, Form, Frame};
use crate::g2forms::{Convention, KahlerPair, StructurePackage, T_INDEX};
use crate::linalg::Matrix;
use crate::scalars::{gauss, imag_unit, rat, ratio, GaussianRational, Rational, Scalar};

type G = GaussianRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DecompError {
    #[error("no decomposition of {0}-forms is implemented here")]
    WrongDegree(usize),
    #[error("expected a form on R7, got one on {0}")]
    WrongFrame(Frame),
    #[error("the contractions e_i ⌟ ψ are linearly dependent; no 7-dimensional projector exists")]
    SingularGram,
    #[error(transparent)]
    Exterior(#[from] ExteriorError),
}

const Z_SLOTS: [usize; 3] = [0, 1, 2];
const ZBAR_SLOTS: [usize; 3] = [4, 5, 6];

fn basis(i: usize) -> Form<G> {
    Form::basis(Frame::R7, i)
}

/// Rewrites a form from `dx, dy, dt` to `dz, dz̄, dt`:
/// `dx = ½(dz + dz̄)`, `dy = −(i/2)(dz − dz̄)`.
pub fn to_complex_basis(f: &Form<G>) -> Form<G> {
    let half = G::from_rational(&ratio(1, 2));
    let half_i = gauss(rat(0), ratio(1, 2));
    let mut images: Vec<Form<G>> = (0..7).map(basis).collect();
    for j in 0..3 {
        images[Z_SLOTS[j]] = &basis(Z_SLOTS[j]).scale(&half) + &basis(ZBAR_SLOTS[j]).scale(&half);
        images[ZBAR_SLOTS[j]] = &basis(ZBAR_SLOTS[j]).scale(&half_i) - &basis(Z_SLOTS[j]).scale(&half_i);
    }
    f.substitute(Frame::R7, &images).expect("square substitution")
}

/// Inverse of [`to_complex_basis`]: `dz = dx + i dy`, `dz̄ = dx − i dy`.
pub fn from_complex_basis(f: &Form<G>) -> Form<G> {
    let i = imag_unit();
    let mut images: Vec<Form<G>> = (0..7).map(basis).collect();
    for j in 0..3 {
        let (x, y) = (Z_SLOTS[j], ZBAR_SLOTS[j]);
        images[x] = &basis(x) + &basis(y).scale(&i);
        images[y] = &basis(x) - &basis(y).scale(&i);
    }
    f.substitute(Frame::R7, &images).expect("square substitution")
}

/// Complex conjugation of a form written in the complex basis: conjugate
/// the coefficients and swap `dz^j ↔ dz̄^j`.
fn conj_complex_basis(f: &Form<G>) -> Form<G> {
    let images: Vec<Form<G>> = (0..7)
        .map(|s| match s {
            0..=2 => basis(s + 4),
            4..=6 => basis(s - 4),
            _ => basis(s),
        })
        .collect();
    f.conjugate().substitute(Frame::R7, &images).expect("square substitution")
}

fn blade_type(b: Blade) -> (u8, u8) {
    let p = Z_SLOTS.iter().filter(|&&s| b.contains(s)).count() as u8;
    let q = ZBAR_SLOTS.iter().filter(|&&s| b.contains(s)).count() as u8;
    (p, q)
}

/// Complex-basis blades of type `(p, q)` without `dt`.
fn blades_of_type(p: u8, q: u8) -> Vec<Blade> {
    Frame::R7
        .blades((p + q) as usize)
        .into_iter()
        .filter(|b| !b.contains(T_INDEX) && blade_type(*b) == (p, q))
        .collect()
}

/// Label of one summand in a `(p,q)` decomposition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TypeLabel {
    Pq(u8, u8),
    /// The part of a `(1,1)`-form orthogonal to `ω`.
    Primitive11,
    /// The `ω` multiple of a `(1,1)`-form.
    Kahler,
}

impl fmt::Display for TypeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TypeLabel::Pq(p, q) => write!(f, "({p},{q})"),
            TypeLabel::Primitive11 => f.write_str("(1,1)_0"),
            TypeLabel::Kahler => f.write_str("(1,1)_omega"),
        }
    }
}

/// `a = spatial + dt ∧ dt_part`, each part split by type. All component
/// forms are in the real coordinate basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplexTypeDecomposition {
    pub degree: usize,
    pub spatial: BTreeMap<TypeLabel, Form<G>>,
    pub dt_part: BTreeMap<TypeLabel, Form<G>>,
    /// The `ω`-coefficient of the 2-form piece: `f` for 3-forms (inside
    /// the `dt` part), `k` for 2-forms (inside the spatial part).
    pub trace: G,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Part {
    Spatial,
    Dt,
}

impl ComplexTypeDecomposition {
    pub fn component(&self, part: Part, label: TypeLabel) -> Form<G> {
        let (map, deg) = match part {
            Part::Spatial => (&self.spatial, self.degree),
            Part::Dt => (&self.dt_part, self.degree - 1),
        };
        map.get(&label).cloned().unwrap_or_else(|| Form::zero(Frame::R7, deg))
    }

    /// Sums the components back up.
    pub fn recombine(&self) -> Form<G> {
        let mut out = Form::zero(Frame::R7, self.degree);
        for f in self.spatial.values() {
            out = &out + f;
        }
        for f in self.dt_part.values() {
            out = &out + &(&basis(T_INDEX) ^ f);
        }
        out
    }
}

fn omega() -> Form<G> {
    KahlerPair::c3().omega.to_complex()
}

fn big_omega() -> Form<G> {
    KahlerPair::c3().big_omega
}

/// Splits a spatial form into `(p,q)` pieces, separating the `ω`-trace of
/// the `(1,1)` piece when there is one. Returns the pieces and the trace.
fn split_spatial(f: &Form<G>) -> (BTreeMap<TypeLabel, Form<G>>, G) {
    let c = to_complex_basis(f);
    let mut by_type: BTreeMap<(u8, u8), Form<G>> = BTreeMap::new();
    for (b, v) in c.terms() {
        by_type.entry(blade_type(*b)).or_insert_with(|| Form::zero(Frame::R7, c.degree())).add_term(*b, v.clone());
    }
    let mut out = BTreeMap::new();
    let mut trace = G::zero();
    for ((p, q), piece) in by_type {
        let real = from_complex_basis(&piece);
        if (p, q) == (1, 1) && c.degree() == 2 {
            let w = omega();
            // ⟨ω, ω⟩ = 3
            trace = Scalar::scale(&real.dot(&w), &ratio(1, 3));
            let kahler = w.scale(&trace);
            let primitive = &real - &kahler;
            if !primitive.is_zero() {
                out.insert(TypeLabel::Primitive11, primitive);
            }
            if !kahler.is_zero() {
                out.insert(TypeLabel::Kahler, kahler);
            }
        } else if !real.is_zero() {
            out.insert(TypeLabel::Pq(p, q), real);
        }
    }
    (out, trace)
}

/// `(p,q)` decomposition of a complex 2- or 3-form on R^7 with `t = y0`.
pub fn pq_decompose(a: &Form<G>) -> Result<ComplexTypeDecomposition, DecompError> {
    if a.frame() != Frame::R7 {
        return Err(DecompError::WrongFrame(a.frame()));
    }
    if !(a.degree() == 2 || a.degree() == 3) {
        return Err(DecompError::WrongDegree(a.degree()));
    }
    let spatial = a.restrict_away_from(T_INDEX);
    let rest = a.interior_basis(T_INDEX)?;
    let (spatial, k) = split_spatial(&spatial);
    let (dt_part, f) = split_spatial(&rest);
    let trace = if a.degree() == 3 { f } else { k };
    Ok(ComplexTypeDecomposition { degree: a.degree(), spatial, dt_part, trace })
}

/// Which irreducible G2 summand.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum G2Type {
    One,
    Seven,
    Fourteen,
    TwentySeven,
}

impl G2Type {
    pub fn dim(self) -> usize {
        match self {
            G2Type::One => 1,
            G2Type::Seven => 7,
            G2Type::Fourteen => 14,
            G2Type::TwentySeven => 27,
        }
    }
}

impl fmt::Display for G2Type {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.dim())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct G2TypeDecomposition {
    pub degree: usize,
    pub components: Vec<(G2Type, Form<G>)>,
}

impl G2TypeDecomposition {
    pub fn get(&self, t: G2Type) -> Form<G> {
        self.components
            .iter()
            .find(|(k, _)| *k == t)
            .map(|(_, f)| f.clone())
            .unwrap_or_else(|| Form::zero(Frame::R7, self.degree))
    }

    pub fn recombine(&self) -> Form<G> {
        let mut out = Form::zero(Frame::R7, self.degree);
        for (_, f) in &self.components {
            out = &out + f;
        }
        out
    }

    /// The single summand carrying the whole form, if there is one.
    pub fn pure_type(&self) -> Option<G2Type> {
        let nonzero: Vec<G2Type> = self.components.iter().filter(|(_, f)| !f.is_zero()).map(|(t, _)| *t).collect();
        match nonzero.as_slice() {
            [t] => Some(*t),
            _ => None,
        }
    }
}

/// G2 projectors built from a package's `φ` and `ψ`.
#[derive(Debug, Clone)]
pub struct G2Projectors {
    pub convention: Convention,
    phi: Form<Rational>,
    psi: Form<Rational>,
    phi_norm: Rational,
    contractions: Vec<Form<Rational>>,
    gram_inverse: Option<Matrix<Rational>>,
}

impl G2Projectors {
    pub fn new(pkg: &StructurePackage) -> Self {
        let contractions: Vec<Form<Rational>> =
            (0..7).map(|i| pkg.psi.interior_basis(i).expect("ψ is a 4-form")).collect();
        let mut gram = Matrix::zeros(7, 7);
        for i in 0..7 {
            for j in 0..7 {
                gram.set(i, j, contractions[i].dot(&contractions[j]));
            }
        }
        G2Projectors {
            convention: pkg.convention,
            phi: pkg.phi.clone(),
            psi: pkg.psi.clone(),
            phi_norm: pkg.phi.dot(&pkg.phi),
            contractions,
            gram_inverse: gram.inverse(),
        }
    }

    pub fn phi(&self) -> &Form<Rational> {
        &self.phi
    }

    pub fn psi(&self) -> &Form<Rational> {
        &self.psi
    }

    /// `β ↦ ∗(φ ∧ β)` on 2-forms.
    pub fn star_phi_wedge(&self, b: &Form<G>) -> Form<G> {
        (&self.phi.to_complex() ^ b).star()
    }

    /// Eigenprojections of `β ↦ ∗(φ∧β)` with the convention's eigenvalues.
    pub fn project_2forms(&self, b: &Form<G>) -> Result<G2TypeDecomposition, DecompError> {
        check(b, 2)?;
        let (l7, l14) = self.convention.eigenvalues();
        let t = self.star_phi_wedge(b);
        let pi7 = (&t - &b.scale_rational(&rat(l14))).scale_rational(&ratio(1, l7 - l14));
        let pi14 = b - &pi7;
        Ok(G2TypeDecomposition { degree: 2, components: vec![(G2Type::Seven, pi7), (G2Type::Fourteen, pi14)] })
    }

    /// `π₁ = ⟨h,φ⟩/|φ|² φ`, `π₇` the orthogonal projection onto
    /// `span{e_i ⌟ ψ}`, `π₂₇` the remainder.
    pub fn project_3forms(&self, h: &Form<G>) -> Result<G2TypeDecomposition, DecompError> {
        check(h, 3)?;
        let gram_inv = self.gram_inverse.as_ref().ok_or(DecompError::SingularGram)?;
        if self.phi_norm.is_zero() {
            return Err(DecompError::SingularGram);
        }
        let phi = self.phi.to_complex();
        let c1 = Scalar::scale(&h.dot(&phi), &self.phi_norm.recip());
        let pi1 = phi.scale(&c1);
        let rhs: Vec<G> = self.contractions.iter().map(|v| h.dot(&v.to_complex())).collect();
        let mut pi7 = Form::zero(Frame::R7, 3);
        for i in 0..7 {
            let mut ci = G::zero();
            for (j, r) in rhs.iter().enumerate() {
                ci = &ci + &Scalar::scale(r, gram_inv.get(i, j));
            }
            pi7 = &pi7 + &self.contractions[i].to_complex().scale(&ci);
        }
        let pi27 = &(h - &pi1) - &pi7;
        Ok(G2TypeDecomposition {
            degree: 3,
            components: vec![(G2Type::One, pi1), (G2Type::Seven, pi7), (G2Type::TwentySeven, pi27)],
        })
    }

    /// Projects 2- and 3-forms directly and 4- and 5-forms through `∗`.
    pub fn project(&self, f: &Form<G>) -> Result<G2TypeDecomposition, DecompError> {
        match f.degree() {
            2 => self.project_2forms(f),
            3 => self.project_3forms(f),
            4 | 5 => {
                let d = self.project(&f.star())?;
                Ok(G2TypeDecomposition {
                    degree: f.degree(),
                    components: d.components.into_iter().map(|(t, c)| (t, c.star())).collect(),
                })
            }
            d => Err(DecompError::WrongDegree(d)),
        }
    }

    /// Matrix of `β ↦ ∗(φ∧β)` on the 21 basis 2-forms.
    pub fn operator_matrix(&self) -> Matrix<Rational> {
        matrix_of(2, 2, |b| (&self.phi ^ b).star())
    }

    /// Dimensions of the eigenspaces for the 7- and 14-eigenvalues.
    pub fn eigenspace_dims(&self) -> (usize, usize) {
        let t = self.operator_matrix();
        let (l7, l14) = self.convention.eigenvalues();
        let d7 = t.add_scaled_identity(&rat(-l7)).nullity();
        let d14 = t.add_scaled_identity(&rat(-l14)).nullity();
        (d7, d14)
    }

    /// Matrices of the three 3-form projectors on the 35 basis 3-forms.
    pub fn projector_matrices_3(&self) -> Result<[(G2Type, Matrix<Rational>); 3], DecompError> {
        let mut mats: Vec<Matrix<Rational>> = Vec::new();
        for t in [G2Type::One, G2Type::Seven, G2Type::TwentySeven] {
            let mut failed = None;
            let m = matrix_of(3, 3, |h| match self.project_3forms(&h.to_complex()) {
                Ok(d) => d.get(t).re(),
                Err(e) => {
                    failed = Some(e);
                    Form::zero(Frame::R7, 3)
                }
            });
            if let Some(e) = failed {
                return Err(e);
            }
            mats.push(m);
        }
        let mut it = mats.into_iter();
        Ok([
            (G2Type::One, it.next().expect("three")),
            (G2Type::Seven, it.next().expect("three")),
            (G2Type::TwentySeven, it.next().expect("three")),
        ])
    }

    /// Matrices of `π₇`, `π₁₄` on 2-forms.
    pub fn projector_matrices_2(&self) -> [(G2Type, Matrix<Rational>); 2] {
        let p = |t: G2Type| matrix_of(2, 2, |b| self.project_2forms(&b.to_complex()).expect("2-form").get(t).re());
        [(G2Type::Seven, p(G2Type::Seven)), (G2Type::Fourteen, p(G2Type::Fourteen))]
    }
}

fn check(f: &Form<G>, degree: usize) -> Result<(), DecompError> {
    if f.frame() != Frame::R7 {
        return Err(DecompError::WrongFrame(f.frame()));
    }
    if f.degree() != degree {
        return Err(DecompError::WrongDegree(f.degree()));
    }
    Ok(())
}

/// Matrix of a linear map between real forms on R^7, columns indexed by
/// the canonical blade order of the domain.
pub fn matrix_of(
    deg_in: usize,
    deg_out: usize,
    mut map: impl FnMut(&Form<Rational>) -> Form<Rational>,
) -> Matrix<Rational> {
    let ins = Frame::R7.blades(deg_in);
    let outs = Frame::R7.blades(deg_out);
    let mut m = Matrix::zeros(outs.len(), ins.len());
    for (j, b) in ins.iter().enumerate() {
        let image = map(&Form::monomial(Frame::R7, *b, rat(1)));
        for (i, ob) in outs.iter().enumerate() {
            m.set(i, j, image.coeff(ob));
        }
    }
    m
}

/// Whether a form satisfies one of the membership criteria, with the
/// residual of every equation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Membership {
    pub holds: bool,
    pub residuals: Vec<(String, Form<G>)>,
}

impl Membership {
    fn from(residuals: Vec<(String, Form<G>)>) -> Self {
        Membership { holds: residuals.iter().all(|(_, r)| r.is_zero()), residuals }
    }
}

fn g(re: Rational, im: Rational) -> G {
    gauss(re, im)
}

/// The four equations characterising `Ω³₂₇` in `(p,q)` terms.
pub fn membership_27(h: &Form<G>) -> Result<Membership, DecompError> {
    check(h, 3)?;
    let d = pq_decompose(h)?;
    let (w, o) = (omega(), big_omega());
    let ob = o.conjugate();
    let s = |l| d.component(Part::Spatial, l);
    let t = |l| d.component(Part::Dt, l);
    let half = G::from_rational(&ratio(1, 2));
    let half_i = g(rat(0), ratio(1, 2));
    let e1 = &(&w ^ &s(TypeLabel::Pq(2, 1))) + &(&o ^ &t(TypeLabel::Pq(0, 2))).scale(&half);
    let e2 = &(&w ^ &s(TypeLabel::Pq(1, 2))) + &(&ob ^ &t(TypeLabel::Pq(2, 0))).scale(&half);
    let e3 = (&(&ob ^ &s(TypeLabel::Pq(3, 0))) + &(&o ^ &s(TypeLabel::Pq(0, 3)))).scale(&half);
    let w3 = &(&w ^ &w) ^ &w;
    let e4 = &(&(&ob ^ &s(TypeLabel::Pq(3, 0))).scale(&half_i) - &(&o ^ &s(TypeLabel::Pq(0, 3))).scale(&half_i))
        + &w3.scale(&Scalar::scale(&d.trace, &ratio(1, 2)));
    Ok(Membership::from(vec![
        ("ω∧η(2,1) + ½Ω∧η(0,2)".into(), e1),
        ("ω∧η(1,2) + ½Ω̄∧η(2,0)".into(), e2),
        ("½Ω̄∧η(3,0) + ½Ω∧η(0,3)".into(), e3),
        ("(i/2)Ω̄∧η(3,0) − (i/2)Ω∧η(0,3) + (f/2)ω³".into(), e4),
    ]))
}

/// `k = 0` plus the two equations characterising `Ω²₁₄`.
pub fn membership_14(b: &Form<G>) -> Result<Membership, DecompError> {
    check(b, 2)?;
    let d = pq_decompose(b)?;
    let (w, o) = (omega(), big_omega());
    let w2 = &w ^ &w;
    let i = imag_unit();
    let s = |l| d.component(Part::Spatial, l);
    let t = |l| d.component(Part::Dt, l);
    let f1 = &(&t(TypeLabel::Pq(0, 1)) ^ &w2) + &(&s(TypeLabel::Pq(2, 0)) ^ &o.conjugate()).scale(&i);
    let f2 = &(&t(TypeLabel::Pq(1, 0)) ^ &w2) - &(&s(TypeLabel::Pq(0, 2)) ^ &o).scale(&i);
    Ok(Membership::from(vec![
        ("k ω".into(), s(TypeLabel::Kahler)),
        ("β(0,1)∧ω² + iβ(2,0)∧Ω̄".into(), f1),
        ("β(1,0)∧ω² − iβ(0,2)∧Ω".into(), f2),
    ]))
}

/// One real basis vector of a complex domain: `unit · blade` in piece `piece`.
#[derive(Debug, Clone)]
struct RealBasis {
    piece: usize,
    blade: Blade,
    unit: G,
}

fn real_basis(types: &[(u8, u8)]) -> Vec<RealBasis> {
    let mut out = Vec::new();
    for (piece, &(p, q)) in types.iter().enumerate() {
        for blade in blades_of_type(p, q) {
            for unit in [G::one(), imag_unit()] {
                out.push(RealBasis { piece, blade, unit });
            }
        }
    }
    out
}

fn pieces_of(basis: &[RealBasis], types: &[(u8, u8)], x: &[Rational]) -> Vec<Form<G>> {
    let mut pieces: Vec<Form<G>> = types.iter().map(|&(p, q)| Form::zero(Frame::R7, (p + q) as usize)).collect();
    for (e, c) in basis.iter().zip(x) {
        pieces[e.piece].add_term(e.blade, Scalar::scale(&e.unit, c));
    }
    pieces
}

/// Real and imaginary parts of every coefficient, over a fixed blade list.
fn real_coords(f: &Form<G>, blades: &[Blade]) -> Vec<Rational> {
    let mut v = Vec::with_capacity(2 * blades.len());
    for b in blades {
        let c = f.coeff(b);
        v.push(c.re);
        v.push(c.im);
    }
    v
}

/// Exact rank data of a real-linear map between complex form spaces.
#[derive(Debug, Clone)]
pub struct RankReport {
    pub domain: usize,
    pub kernel: usize,
    pub image: usize,
    pub matrix: Matrix<Rational>,
    /// Real 3- or 2-forms `ι(x)` for the standard basis vectors `x`.
    pub embedding: Matrix<Rational>,
}

impl RankReport {
    fn new(matrix: Matrix<Rational>, embedding: Matrix<Rational>) -> Self {
        let image = matrix.rank();
        RankReport { domain: matrix.cols(), kernel: matrix.cols() - image, image, matrix, embedding }
    }

    pub fn kernel_basis(&self) -> Vec<Vec<Rational>> {
        self.matrix.nullspace()
    }

    /// Basis of the orthogonal complement of the kernel, for the inner
    /// product `⟨x, y⟩ = ⟨ι x, ι y⟩` pulled back from real forms.
    pub fn kernel_complement(&self) -> Vec<Vec<Rational>> {
        let kernel = self.kernel_basis();
        if kernel.is_empty() {
            return (0..self.domain).map(|i| (0..self.domain).map(|j| rat((i == j) as i64)).collect()).collect();
        }
        let q = self.embedding.transpose().mul(&self.embedding);
        let k = Matrix::from_columns(&kernel, self.domain);
        k.transpose().mul(&q).nullspace()
    }

    /// `ι x` as a real form.
    pub fn embed(&self, x: &[Rational], degree: usize) -> Form<Rational> {
        let coords = self.embedding.mul_vec(x);
        let mut f = Form::zero(Frame::R7, degree);
        for (b, c) in Frame::R7.blades(degree).into_iter().zip(coords) {
            f.add_term(b, c);
        }
        f
    }
}

/// `ι(a, b) = a + ā + dt ∧ (b + b̄)` for complex-basis forms, as a real form.
fn real_embedding(spatial: &Form<G>, dt_part: &Form<G>) -> Form<Rational> {
    let sp = from_complex_basis(&(spatial + &conj_complex_basis(spatial)));
    let tp = from_complex_basis(&(dt_part + &conj_complex_basis(dt_part)));
    let real = &sp + &(&basis(T_INDEX) ^ &tp);
    debug_assert!(real.im().is_zero());
    real.re()
}

fn build_rank(types: [(u8, u8); 2], map: impl Fn(&Form<G>, &Form<G>) -> Form<G>, out_degree: usize) -> RankReport {
    let types = types.to_vec();
    let basis = real_basis(&types);
    let out_blades: Vec<Blade> = Frame::R7.blades(out_degree).into_iter().filter(|b| !b.contains(T_INDEX)).collect();
    let emb_degree = (types[0].0 + types[0].1) as usize;
    let emb_blades = Frame::R7.blades(emb_degree);
    let mut cols = Vec::new();
    let mut emb_cols = Vec::new();
    for i in 0..basis.len() {
        let mut x = vec![rat(0); basis.len()];
        x[i] = rat(1);
        let pieces = pieces_of(&basis, &types, &x);
        cols.push(real_coords(&map(&pieces[0], &pieces[1]), &out_blades));
        let e = real_embedding(&pieces[0], &pieces[1]);
        emb_cols.push(emb_blades.iter().map(|b| e.coeff(b)).collect());
    }
    RankReport::new(
        Matrix::from_columns(&cols, 2 * out_blades.len()),
        Matrix::from_columns(&emb_cols, emb_blades.len()),
    )
}

fn omega_cb() -> Form<G> {
    to_complex_basis(&omega())
}

fn big_omega_cb() -> Form<G> {
    to_complex_basis(&big_omega())
}

/// `L(η₂₁, η₂₀) = ½ Ω ∧ η̄₂₀ + ω ∧ η₂₁` on the real 24-dimensional space
/// `Ω^{2,1} ⊕ Ω^{2,0}`.
pub fn rank_of_l() -> RankReport {
    let (w, o) = (omega_cb(), big_omega_cb());
    let half = G::from_rational(&ratio(1, 2));
    build_rank([(2, 1), (2, 0)], |e21, e20| &(&o ^ &conj_complex_basis(e20)).scale(&half) + &(&w ^ e21), 5)
}

/// `M(β₂₀, β₁₀) = i β̄₂₀ ∧ Ω − β₁₀ ∧ ω²` on the real 12-dimensional space
/// `Ω^{2,0} ⊕ Ω^{1,0}`.
pub fn rank_of_m() -> RankReport {
    let (w, o) = (omega_cb(), big_omega_cb());
    let w2 = &w ^ &w;
    let i = imag_unit();
    build_rank([(2, 0), (1, 0)], |b20, b10| &(&conj_complex_basis(b20) ^ &o).scale(&i) - &(b10 ^ &w2), 5)
}

/// `∂_{z^i} ⌟ α` for a form in the real basis; the result is in the real basis.
fn d_z_interior(i: usize, a: &Form<G>) -> Form<G> {
    from_complex_basis(&to_complex_basis(a).interior_basis(Z_SLOTS[i]).expect("positive degree"))
}

/// `η_i = dt ∧ (1/2i)(∂_{z^i} ⌟ Ω) − ∂_{z^i} ⌟ (ω²/2)`.
pub fn eta_basis(i: usize) -> Form<G> {
    let (w, o) = (omega(), big_omega());
    let inv_2i = g(rat(0), ratio(-1, 2));
    let w2 = (&w ^ &w).scale(&G::from_rational(&ratio(1, 2)));
    &(&basis(T_INDEX) ^ &d_z_interior(i, &o)).scale(&inv_2i) - &d_z_interior(i, &w2)
}

/// `β_i = ½(∂_{z^i} ⌟ Ω) + dt ∧ (∂_{z^i} ⌟ ω)`.
pub fn beta_basis(i: usize) -> Form<G> {
    let (w, o) = (omega(), big_omega());
    &d_z_interior(i, &o).scale(&G::from_rational(&ratio(1, 2))) + &(&basis(T_INDEX) ^ &d_z_interior(i, &w))
}

/// The real vector `a^i ∂_{z^i} + ā^i ∂_{z̄^i} + h ∂_t` in the real basis.
pub fn real_vector(a: &[G; 3], h: &Rational) -> [Rational; 7] {
    let mut v: [Rational; 7] = core::array::from_fn(|_| rat(0));
    for j in 0..3 {
        v[Z_SLOTS[j]] = a[j].re.clone();
        v[ZBAR_SLOTS[j]] = a[j].im.clone();
    }
    v[T_INDEX] = h.clone();
    v
}

/// `−h Im(Ω) + a^i η_i + ā^i η̄_i`, which equals `X ⌟ ψ`.
pub fn canonical_basis_3_7(a: &[G; 3], h: &Rational) -> Form<G> {
    let mut out = big_omega().im().to_complex().scale_rational(&-h.clone());
    for (i, ai) in a.iter().enumerate() {
        let e = eta_basis(i);
        out = &(&out + &e.scale(ai)) + &e.conjugate().scale(&ai.conj());
    }
    out
}

/// `−h ω + a^i β_i + ā^i β̄_i`, which equals `X ⌟ φ`.
pub fn canonical_basis_2_7(a: &[G; 3], h: &Rational) -> Form<G> {
    let mut out = omega().scale_rational(&-h.clone());
    for (i, ai) in a.iter().enumerate() {
        let b = beta_basis(i);
        out = &(&out + &b.scale(ai)) + &b.conjugate().scale(&ai.conj());
    }
    out
}

/// Real dimension of one spanning set and whether it sits in the claimed
/// G2 summand.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PieceCount {
    pub label: &'static str,
    pub dim: usize,
    pub in_component: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimensionCount {
    pub component: G2Type,
    pub degree: usize,
    pub pieces: Vec<PieceCount>,
    /// Rank of all the spanning sets together.
    pub total: usize,
}

fn rank_of_forms(forms: &[Form<Rational>], degree: usize) -> usize {
    let blades = Frame::R7.blades(degree);
    let cols: Vec<Vec<Rational>> = forms.iter().map(|f| blades.iter().map(|b| f.coeff(b)).collect()).collect();
    if cols.is_empty() {
        return 0;
    }
    Matrix::from_columns(&cols, blades.len()).rank()
}

/// Real `(1,1)` forms orthogonal to `ω`, as a spanning set.
fn primitive_11_span() -> Vec<Form<Rational>> {
    let w = KahlerPair::c3().omega;
    let mut out = Vec::new();
    for b in blades_of_type(1, 1) {
        for unit in [G::one(), imag_unit()] {
            let x = Form::monomial(Frame::R7, b, unit);
            let real = from_complex_basis(&(&x + &conj_complex_basis(&x))).re();
            let trace = real.dot(&w) * ratio(1, 3);
            out.push(&real - &w.scale_rational(&trace));
        }
    }
    out
}

/// Real dimension counts of the four real G2 summands, each assembled
/// from the `(p,q)` spanning sets and cross-checked against the projectors.
pub fn dimension_counts(proj: &G2Projectors) -> Result<Vec<DimensionCount>, DecompError> {
    let c3 = KahlerPair::c3();
    let dt = Form::<Rational>::basis(Frame::R7, T_INDEX);
    let lies_in = |forms: &[Form<Rational>], t: G2Type| -> Result<bool, DecompError> {
        for f in forms {
            let d = proj.project(&f.to_complex())?;
            if d.get(t) != f.to_complex() {
                return Ok(false);
            }
        }
        Ok(true)
    };
    let piece = |label, forms: &[Form<Rational>], deg, t| -> Result<PieceCount, DecompError> {
        Ok(PieceCount { label, dim: rank_of_forms(forms, deg), in_component: lies_in(forms, t)? })
    };
    let l = rank_of_l();
    let m = rank_of_m();
    let span = |r: &RankReport, vs: Vec<Vec<Rational>>, deg| -> Vec<Form<Rational>> {
        vs.iter().map(|x| r.embed(x, deg)).collect()
    };

    let mut out = Vec::new();

    let p27a = vec![&c3.re_omega() + &(&dt ^ &c3.omega).scale_rational(&ratio(4, 3))];
    let p27b: Vec<Form<Rational>> = primitive_11_span().iter().map(|f| &dt ^ f).collect();
    let p27c = span(&l, l.kernel_basis(), 3);
    out.push(count(
        G2Type::TwentySeven,
        3,
        vec![
            (piece("Re(Ω) + 4/3 dt∧ω", &p27a, 3, G2Type::TwentySeven)?, p27a),
            (piece("dt∧(1,1)_0", &p27b, 3, G2Type::TwentySeven)?, p27b),
            (piece("ker L", &p27c, 3, G2Type::TwentySeven)?, p27c),
        ],
    ));

    let p7a = vec![c3.im_omega()];
    let p7b = span(&l, l.kernel_complement(), 3);
    out.push(count(
        G2Type::Seven,
        3,
        vec![(piece("Im(Ω)", &p7a, 3, G2Type::Seven)?, p7a), (piece("(ker L)^⊥", &p7b, 3, G2Type::Seven)?, p7b)],
    ));

    let p14a = primitive_11_span();
    let p14b = span(&m, m.kernel_basis(), 2);
    out.push(count(
        G2Type::Fourteen,
        2,
        vec![
            (piece("(1,1)_0", &p14a, 2, G2Type::Fourteen)?, p14a),
            (piece("ker M", &p14b, 2, G2Type::Fourteen)?, p14b),
        ],
    ));

    let p2a = vec![c3.omega.clone()];
    let p2b = span(&m, m.kernel_complement(), 2);
    out.push(count(
        G2Type::Seven,
        2,
        vec![(piece("ω", &p2a, 2, G2Type::Seven)?, p2a), (piece("(ker M)^⊥", &p2b, 2, G2Type::Seven)?, p2b)],
    ));
    Ok(out)
}

fn count(component: G2Type, degree: usize, parts: Vec<(PieceCount, Vec<Form<Rational>>)>) -> DimensionCount {
    let all: Vec<Form<Rational>> = parts.iter().flat_map(|(_, f)| f.iter().cloned()).collect();
    DimensionCount {
        component,
        degree,
        total: rank_of_forms(&all, degree),
        pieces: parts.into_iter().map(|(p, _)| p).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exterior::notation::parse_form;

    fn cd() -> G2Projectors {
        G2Projectors::new(&StructurePackage::build(Convention::CdFirst))
    }

    fn real(text: &str, degree: usize) -> Form<G> {
        parse_form(Frame::R7, degree, text).unwrap().to_complex()
    }

    #[test]
    fn complex_basis_round_trip() {
        let f = real("dx1 dy2 - 3 dy0 dx3 + dy1 dy3", 2);
        assert_eq!(from_complex_basis(&to_complex_basis(&f)), f);
        // dz1 ∧ dz2 ∧ dz3 is a single complex-basis blade
        let o = to_complex_basis(&big_omega());
        assert_eq!(o.len(), 1);
        assert_eq!(blade_type(*o.terms().next().unwrap().0), (3, 0));
    }

    #[test]
    fn re_omega_is_3_0_plus_0_3() {
        let d = pq_decompose(&KahlerPair::c3().re_omega().to_complex()).unwrap();
        let half = G::from_rational(&ratio(1, 2));
        assert_eq!(d.component(Part::Spatial, TypeLabel::Pq(3, 0)), big_omega().scale(&half));
        assert_eq!(d.component(Part::Spatial, TypeLabel::Pq(0, 3)), big_omega().conjugate().scale(&half));
        assert_eq!(d.spatial.len(), 2);
        assert!(d.dt_part.is_empty());
    }

    #[test]
    fn dt_omega_has_trace_one() {
        let h = (&Form::basis(Frame::R7, T_INDEX) ^ &KahlerPair::c3().omega).to_complex();
        let d = pq_decompose(&h).unwrap();
        assert_eq!(d.trace, G::one());
        assert_eq!(d.dt_part.keys().collect::<Vec<_>>(), vec![&TypeLabel::Kahler]);
        assert_eq!(d.recombine(), h);
    }

    #[test]
    fn dz_dzbar_splits_into_trace_and_primitive() {
        let dz1 = &basis(0) + &basis(4).scale(&imag_unit());
        let b = &dz1 ^ &dz1.conjugate();
        let d = pq_decompose(&b).unwrap();
        assert!(!d.trace.is_zero());
        assert!(!d.component(Part::Spatial, TypeLabel::Primitive11).is_zero());
        assert_eq!(d.recombine(), b);
        assert!(d.component(Part::Spatial, TypeLabel::Primitive11).dot(&omega()).is_zero());
    }

    #[test]
    fn omega_is_in_seven() {
        let p = cd();
        let w = omega();
        assert_eq!(p.project_2forms(&w).unwrap().pure_type(), Some(G2Type::Seven));
        assert!(!membership_14(&w).unwrap().holds);
    }

    #[test]
    fn named_examples_3forms() {
        let p = cd();
        let c3 = KahlerPair::c3();
        let dt = Form::<Rational>::basis(Frame::R7, T_INDEX);
        let phi = StructurePackage::build(Convention::CdFirst).phi;
        assert_eq!(p.project_3forms(&phi.to_complex()).unwrap().pure_type(), Some(G2Type::One));
        assert_eq!(p.project_3forms(&c3.im_omega().to_complex()).unwrap().pure_type(), Some(G2Type::Seven));
        let h = (&c3.re_omega() + &(&dt ^ &c3.omega).scale_rational(&ratio(4, 3))).to_complex();
        assert_eq!(p.project_3forms(&h).unwrap().pure_type(), Some(G2Type::TwentySeven));
        assert!(membership_27(&h).unwrap().holds);
        assert!(!membership_27(&phi.to_complex()).unwrap().holds);
        let other = (&c3.re_omega() + &(&dt ^ &c3.omega)).to_complex();
        assert!(!membership_27(&other).unwrap().holds);
    }

    #[test]
    fn psi_is_in_one_through_star() {
        let pkg = StructurePackage::build(Convention::CdFirst);
        let d = cd().project(&pkg.psi.to_complex()).unwrap();
        assert_eq!((d.degree, d.pure_type()), (4, Some(G2Type::One)));
        assert_eq!(d.recombine(), pkg.psi.to_complex());
    }

    #[test]
    fn eigenspaces() {
        assert_eq!(cd().eigenspace_dims(), (7, 14));
        let opp = G2Projectors::new(&StructurePackage::build(Convention::Opposite));
        assert_eq!(opp.eigenspace_dims(), (7, 14));
    }

    #[test]
    fn projector_ranks() {
        let ranks: Vec<usize> = cd().projector_matrices_3().unwrap().iter().map(|(_, m)| m.rank()).collect();
        assert_eq!(ranks, vec![1, 7, 27]);
        for (_, m) in cd().projector_matrices_3().unwrap() {
            assert_eq!(m.mul(&m), m);
        }
    }

    #[test]
    fn l_and_m_ranks() {
        let l = rank_of_l();
        assert_eq!((l.domain, l.kernel, l.image), (24, 18, 6));
        let m = rank_of_m();
        assert_eq!((m.domain, m.kernel, m.image), (12, 6, 6));
        assert_eq!(l.kernel_complement().len(), 6);
        assert_eq!(m.kernel_complement().len(), 6);
    }

    #[test]
    fn dimension_counts_add_up() {
        let counts = dimension_counts(&cd()).unwrap();
        let summary: Vec<(usize, Vec<usize>, bool)> = counts
            .iter()
            .map(|c| (c.total, c.pieces.iter().map(|p| p.dim).collect(), c.pieces.iter().all(|p| p.in_component)))
            .collect();
        assert_eq!(
            summary,
            vec![(27, vec![1, 8, 18], true), (7, vec![1, 6], true), (14, vec![8, 6], true), (7, vec![1, 6], true),]
        );
    }

    #[test]
    fn canonical_bases_match_contractions() {
        let pkg = StructurePackage::build(Convention::CdFirst);
        let a = [g(rat(1), rat(2)), g(ratio(-1, 2), rat(0)), g(rat(0), rat(3))];
        let h = rat(5);
        let x: Vec<G> = real_vector(&a, &h).iter().map(G::from_rational).collect();
        assert_eq!(canonical_basis_3_7(&a, &h), pkg.psi.to_complex().interior(&x).unwrap());
        assert_eq!(canonical_basis_2_7(&a, &h), pkg.phi.to_complex().interior(&x).unwrap());
        // ∂_t ⌟ φ = −ω
        let dt_only = real_vector(&[G::zero(), G::zero(), G::zero()], &rat(1));
        assert_eq!(pkg.phi.interior(&dt_only).unwrap(), -KahlerPair::c3().omega);
    }
}
