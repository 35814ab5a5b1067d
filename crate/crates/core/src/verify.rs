//! Verification suites: every structural identity the library relies on,
//! run exactly and reported check by check.
//!
//! All checks run against one [`StructurePackage`]. Passing a replacement
//! `φ` rebuilds the package from it, so a corrupted table shows up as
//! failures downstream.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use rand::Rng;

use crate::decomp::{
    self, canonical_basis_2_7, canonical_basis_3_7, membership_14, membership_27, real_vector, G2Projectors, G2Type,
};
use crate::diffops::{self, identity_suite_with};
use crate::exterior::{Blade, Form, Frame, MetricData, Volume};
use crate::g2forms::{
    bilinear_form, build_split_phi, metric_from_phi, presentation, printed_phi, printed_psi, printed_spin7, recombine,
    vol4, vol6, Convention, G2Error, KahlerPair, Presentation, SplitVariant, StructurePackage, Target, T_INDEX,
};
use crate::octonion::{cross7, phi_form, psi_form, spin7_form, Octonion, StructureConstants};
use crate::random;
use crate::scalars::{gauss, rat, ratio, GaussianRational, Rational, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    G2,
    Spin7,
    Cy3,
    Diffops,
    All,
}

impl Suite {
    pub const EACH: [Suite; 4] = [Suite::G2, Suite::Spin7, Suite::Cy3, Suite::Diffops];

    pub fn name(self) -> &'static str {
        match self {
            Suite::G2 => "g2",
            Suite::Spin7 => "spin7",
            Suite::Cy3 => "cy3",
            Suite::Diffops => "diffops",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        [Suite::G2, Suite::Spin7, Suite::Cy3, Suite::Diffops, Suite::All]
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| format!("unknown suite `{s}` (expected g2, spin7, cy3, diffops or all)"))
    }
}

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub seed: u64,
    /// Random trials per randomised check.
    pub trials: u64,
    pub max_degree: usize,
    /// Replaces the CD-first `φ`; `ψ` and `Φ` are rebuilt from it.
    pub phi_override: Option<Form<Rational>>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { seed: 0, trials: 100, max_degree: 3, phi_override: None }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub suite: Suite,
    pub name: String,
    pub passed: bool,
    /// A counterexample on failure, a short summary on success.
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

struct Ctx<'a> {
    suite: Suite,
    report: &'a mut Report,
}

impl Ctx<'_> {
    fn check(&mut self, name: impl Into<String>, outcome: Result<String, String>) {
        let (passed, detail) = match outcome {
            Ok(d) => (true, d),
            Err(d) => (false, d),
        };
        self.report.checks.push(Check { suite: self.suite, name: name.into(), passed, detail });
    }

    fn equal<T: PartialEq + fmt::Display>(&mut self, name: &str, got: &T, want: &T) {
        let outcome = if got == want { Ok(format!("{want}")) } else { Err(format!("got {got}, expected {want}")) };
        self.check(name, outcome);
    }
}

/// Runs one suite (or all of them).
pub fn run(suite: Suite, opts: &VerifyOptions) -> Result<Report, G2Error> {
    let cd = match &opts.phi_override {
        Some(phi) => StructurePackage::from_phi(phi.clone(), Convention::CdFirst)?,
        None => StructurePackage::build(Convention::CdFirst),
    };
    let opp = StructurePackage::build(Convention::Opposite);
    let mut report = Report::default();
    let suites: Vec<Suite> = if suite == Suite::All { Suite::EACH.to_vec() } else { alloc::vec![suite] };
    for s in suites {
        let mut ctx = Ctx { suite: s, report: &mut report };
        match s {
            Suite::G2 => g2_suite(&mut ctx, &cd, &opp, opts),
            Suite::Spin7 => spin7_suite(&mut ctx, &cd, &opp),
            Suite::Cy3 => cy3_suite(&mut ctx, &cd, opts),
            Suite::Diffops => diffops_suite(&mut ctx, &cd, opts),
            Suite::All => unreachable!(),
        }
    }
    Ok(report)
}

fn vol7() -> Form<Rational> {
    Volume::top(Frame::R7, 1).form()
}

fn vol8() -> Form<Rational> {
    Volume::top(Frame::R8, 1).form()
}

fn vector<R: Rng>(rng: &mut R) -> [Rational; 7] {
    core::array::from_fn(|_| random::rational(rng))
}

fn show<S: fmt::Display>(v: &[S]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(", "))
}

fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn first_failure<I: IntoIterator<Item = Option<String>>>(items: I) -> Result<(), String> {
    items.into_iter().flatten().next().map_or(Ok(()), Err)
}

fn g2_suite(ctx: &mut Ctx, cd: &StructurePackage, opp: &StructurePackage, opts: &VerifyOptions) {
    ctx.equal("φ matches the printed table", &cd.phi, &printed_phi());
    ctx.equal("ψ matches the printed table", &cd.psi, &printed_psi());
    ctx.equal("octonion φ equals the package φ", &phi_form(), &cd.phi);
    ctx.equal("octonion ψ equals the package ψ", &psi_form(), &cd.psi);
    for p in [cd, opp] {
        let c = p.convention;
        ctx.equal(&format!("ψ = ∗φ ({c})"), &p.phi.star(), &p.psi);
        ctx.equal(&format!("φ∧ψ = 7 vol₇ ({c})"), &(&p.phi ^ &p.psi), &vol7().scale(&rat(7)));
        ctx.equal(&format!("|φ|² = 7 ({c})"), &p.phi.dot(&p.phi), &rat(7));
    }

    for p in [cd, opp] {
        let c = p.convention;
        let k = rat(c.metric_constant());
        let outcome = bilinear_form(&p.phi).map_err(|e| e.to_string()).and_then(|b| {
            let mut bad = None;
            for i in 0..7 {
                for j in i..7 {
                    let want = if i == j { k.clone() } else { rat(0) };
                    if *b.get(i, j) != want && bad.is_none() {
                        bad = Some(format!("pair ({i},{j}): coefficient {} of vol₇, expected {want}", b.get(i, j)));
                    }
                }
            }
            bad.map_or(Ok(format!("28 pairs, constant {k}")), Err)
        });
        ctx.check(format!("(eᵢ⌟φ)∧(eⱼ⌟φ)∧φ = {k}δᵢⱼ vol₇ ({c})"), outcome);
        let outcome = match metric_from_phi(&p.phi, c.orientation()) {
            Ok(m) if m.signature == (7, 0) => Ok("(7,0)".into()),
            Ok(m) => Err(format!("signature {:?}", m.signature)),
            Err(e) => Err(e.to_string()),
        };
        ctx.check(format!("metric from φ is Euclidean ({c})"), outcome);
    }
    for v in [SplitVariant::MinusEtaMinus, SplitVariant::PlusEtaPlus] {
        let outcome = match metric_from_phi(&build_split_phi(v), 1) {
            Ok(m) if m.signature == (3, 4) || m.signature == (4, 3) => Ok(format!("{:?}", m.signature)),
            Ok(m) => Err(format!("signature {:?}", m.signature)),
            Err(e) => Err(e.to_string()),
        };
        ctx.check(format!("split φ ({v:?}) has signature (3,4) or (4,3)"), outcome);
    }

    let sc = StructureConstants::from_forms(&cd.phi, &cd.psi);
    ctx.check(
        "Σₖ φᵢⱼₖ φₐᵦₖ = δᵢₐδⱼᵦ − δᵢᵦδⱼₐ − ψᵢⱼₐᵦ",
        match sc.contraction_identity_failure() {
            None => Ok("all 2401 index choices".into()),
            Some((idx, r)) => Err(format!("indices {idx:?}: residual {r}")),
        },
    );

    let mut rng = random::trial_rng(opts.seed, u64::MAX);
    let samples: Vec<[[Rational; 7]; 3]> =
        (0..opts.trials.max(1)).map(|_| [vector(&mut rng), vector(&mut rng), vector(&mut rng)]).collect();
    let basis: Vec<[Rational; 7]> = (0..7).map(|i| core::array::from_fn(|j| rat((i == j) as i64))).collect();
    let mut pairs: Vec<([Rational; 7], [Rational; 7])> = Vec::new();
    for a in &basis {
        for b in &basis {
            pairs.push((a.clone(), b.clone()));
        }
    }
    pairs.extend(samples.iter().map(|[x, y, _]| (x.clone(), y.clone())));

    ctx.check(
        "X × Y = −Y × X",
        first_failure(pairs.iter().map(|(x, y)| {
            let (a, b) = (sc.cross(x, y), sc.cross(y, x));
            (a.iter().zip(&b).any(|(p, q)| *p != -q.clone())).then(|| format!("X={} Y={}", show(x), show(y)))
        }))
        .map(|_| format!("{} pairs", pairs.len())),
    );
    ctx.check(
        "⟨X × Y, X⟩ = ⟨X × Y, Y⟩ = 0",
        first_failure(pairs.iter().map(|(x, y)| {
            let c = sc.cross(x, y);
            (!dot(&c, x).is_zero() || !dot(&c, y).is_zero()).then(|| format!("X={} Y={}", show(x), show(y)))
        }))
        .map(|_| format!("{} pairs", pairs.len())),
    );
    ctx.check(
        "|X × Y|² = |X|²|Y|² − ⟨X,Y⟩²",
        first_failure(pairs.iter().map(|(x, y)| {
            let c = sc.cross(x, y);
            let xy = dot(x, y);
            let r = dot(&c, &c) - dot(x, x) * dot(y, y) + &xy * &xy;
            (!r.is_zero()).then(|| format!("X={} Y={}: residual {r}", show(x), show(y)))
        }))
        .map(|_| format!("{} pairs", pairs.len())),
    );
    ctx.check(
        "X × (Y × Z) = −⟨X,Y⟩Z + ⟨X,Z⟩Y − ψ(Z,Y,X,·)",
        first_failure(samples.iter().map(|[x, y, z]| {
            let lhs = sc.cross(x, &sc.cross(y, z));
            let w = sc.psi_vector(z, y, x);
            let (xy, xz) = (dot(x, y), dot(x, z));
            let bad = (0..7).any(|l| lhs[l] != -(&xy * &z[l]) + &xz * &y[l] - &w[l]);
            bad.then(|| format!("X={} Y={} Z={}", show(x), show(y), show(z)))
        }))
        .map(|_| format!("{} triples", samples.len())),
    );
    ctx.check(
        "φ-cross product equals Im(uv) of octonions",
        first_failure(pairs.iter().map(|(x, y)| {
            let uv = cross7(&Octonion::imaginary(x), &Octonion::imaginary(y)).expect("imaginary inputs");
            (uv.im() != sc.cross(x, y)).then(|| format!("X={} Y={}", show(x), show(y)))
        }))
        .map(|_| format!("{} pairs", pairs.len())),
    );

    for p in [cd, opp] {
        let c = p.convention;
        let (l7, l14) = c.eigenvalues();
        let proj = G2Projectors::new(p);
        let (d7, d14) = proj.eigenspace_dims();
        ctx.check(
            format!("β ↦ ∗(φ∧β): dim 7 at {l7}, dim 14 at {l14} ({c})"),
            if (d7, d14) == (7, 14) { Ok(format!("({d7}, {d14})")) } else { Err(format!("dimensions ({d7}, {d14})")) },
        );
    }
    let proj = G2Projectors::new(cd);
    ctx.check(
        "3-form projectors have ranks 1, 7, 27",
        match proj.projector_matrices_3() {
            Ok(ms) => {
                let ranks: Vec<usize> = ms.iter().map(|(_, m)| m.rank()).collect();
                let idempotent = ms.iter().all(|(_, m)| m.mul(m) == *m);
                if ranks == [1, 7, 27] && idempotent {
                    Ok("1, 7, 27".into())
                } else {
                    Err(format!("ranks {ranks:?}, idempotent {idempotent}"))
                }
            }
            Err(e) => Err(e.to_string()),
        },
    );

    for p in [cd, opp] {
        for which in [Presentation::C3PlusR, Presentation::R3PlusR4, Presentation::ThetaBundle] {
            let terms = presentation(p, which);
            let mut bad = None;
            for (target, want) in [(Target::Phi, &p.phi), (Target::Psi, &p.psi)] {
                if let Some(sum) = recombine(&terms, target) {
                    if sum != *want {
                        bad = Some(format!("{target:?}: sum {sum}"));
                    }
                }
            }
            ctx.check(
                format!("{} presentation recombines ({})", which.name(), p.convention),
                bad.map_or(Ok(String::new()), Err),
            );
        }
    }
}

fn spin7_suite(ctx: &mut Ctx, cd: &StructurePackage, opp: &StructurePackage) {
    ctx.equal("Φ matches the printed table", &cd.big_phi, &printed_spin7());
    ctx.equal("octonion Φ = dx⁰∧φ + ψ", &spin7_form(), &cd.big_phi);
    for p in [cd, opp] {
        let c = p.convention;
        ctx.equal(&format!("∗₈Φ = Φ ({c})"), &p.big_phi.star(), &p.big_phi);
        ctx.equal(&format!("Φ∧Φ = 14 vol₈ ({c})"), &(&p.big_phi ^ &p.big_phi), &vol8().scale(&rat(14)));
        ctx.equal(&format!("Φ has 14 terms ({c})"), &p.big_phi.len(), &14);
        for which in [Presentation::C4, Presentation::R4PlusR4] {
            let sum = recombine(&presentation(p, which), Target::Spin7).expect("Spin(7) terms");
            ctx.equal(&format!("{} presentation recombines ({c})", which.name()), &sum, &p.big_phi);
        }
    }
    for i in 0..3 {
        for p in [cd, opp] {
            let s = p.convention.sign();
            let e = &p.eta[i];
            let star4 = e.hodge_star(&vol4(), &MetricData::euclidean(Frame::R7)).expect("unit metric");
            ctx.equal(&format!("∗₄η{} = {}η{} ({})", i + 1, s, i + 1, p.convention), &star4, &e.scale(&rat(s)));
        }
    }
}

fn cy3_suite(ctx: &mut Ctx, cd: &StructurePackage, opts: &VerifyOptions) {
    let c3 = KahlerPair::c3();
    let (w, o) = (c3.omega.clone(), c3.big_omega.clone());
    let v6 = vol6().form();
    ctx.equal("|Re Ω|² = 4", &c3.re_omega().dot(&c3.re_omega()), &rat(4));
    ctx.equal("|Im Ω|² = 4", &c3.im_omega().dot(&c3.im_omega()), &rat(4));
    ctx.equal("ω∧Ω = 0", &(&w.to_complex() ^ &o), &Form::zero(Frame::R7, 5));
    ctx.equal("ω³/6 = vol₆", &(&c3.omega_squared() ^ &w).scale(&ratio(1, 6)), &v6);
    ctx.equal("(i/8)Ω∧Ω̄ = vol₆", &(&o ^ &o.conjugate()).scale(&gauss(rat(0), ratio(1, 8))), &v6.to_complex());
    ctx.equal("Re Ω ∧ Im Ω = 4 vol₆", &(&c3.re_omega() ^ &c3.im_omega()), &v6.scale(&rat(4)));
    let dt = Form::<Rational>::basis(Frame::R7, T_INDEX);
    ctx.equal("∂_t ⌟ φ = −ω", &cd.phi.interior_basis(T_INDEX).expect("3-form"), &-w.clone());

    let proj = G2Projectors::new(cd);
    let typed = |f: &Form<GaussianRational>| proj.project(f).map(|d| d.pure_type());
    let mut type_check = |name: &str, f: Form<Rational>, want: G2Type| {
        let outcome = match typed(&f.to_complex()) {
            Ok(Some(t)) if t == want => Ok(format!("Ω{}", want.dim())),
            Ok(t) => Err(format!("type {t:?}")),
            Err(e) => Err(e.to_string()),
        };
        ctx.check(name, outcome);
    };
    type_check("φ ∈ Ω³₁", cd.phi.clone(), G2Type::One);
    type_check("Re Ω + (4/3) dt∧ω ∈ Ω³₂₇", &c3.re_omega() + &(&dt ^ &w).scale(&ratio(4, 3)), G2Type::TwentySeven);
    type_check("Im Ω ∈ Ω³₇", c3.im_omega(), G2Type::Seven);
    type_check("ω ∈ Ω²₇", w.clone(), G2Type::Seven);

    let l = decomp::rank_of_l();
    ctx.check(
        "L: kernel 18, image 6",
        if (l.domain, l.kernel, l.image) == (24, 18, 6) {
            Ok("24 = 18 + 6".into())
        } else {
            Err(format!("domain {}, kernel {}, image {}", l.domain, l.kernel, l.image))
        },
    );
    let complement = l.kernel_complement();
    let restricted: Vec<Vec<Rational>> = complement.iter().map(|x| l.matrix.mul_vec(x)).collect();
    let rank = if restricted.is_empty() {
        0
    } else {
        crate::linalg::Matrix::from_columns(&restricted, l.matrix.rows()).rank()
    };
    ctx.check(
        "L is injective on (ker L)^⊥",
        if rank == complement.len() && rank == 6 {
            Ok("rank 6".into())
        } else {
            Err(format!("rank {rank} on {}", complement.len()))
        },
    );
    let m = decomp::rank_of_m();
    ctx.check(
        "M: kernel 6, image 6",
        if (m.domain, m.kernel, m.image) == (12, 6, 6) {
            Ok("12 = 6 + 6".into())
        } else {
            Err(format!("domain {}, kernel {}, image {}", m.domain, m.kernel, m.image))
        },
    );

    match decomp::dimension_counts(&proj) {
        Ok(counts) => {
            for c in counts {
                let dims: Vec<usize> = c.pieces.iter().map(|p| p.dim).collect();
                let parts: Vec<String> = dims.iter().map(|d| d.to_string()).collect();
                let name =
                    format!("Ω{}_{}: {} = {}", c.degree, c.component.dim(), parts.join(" + "), c.component.dim());
                let sum: usize = dims.iter().sum();
                let inside = c.pieces.iter().all(|p| p.in_component);
                let ok = sum == c.component.dim() && c.total == sum && inside;
                let detail = format!("pieces {dims:?}, joint rank {}, inside {inside}", c.total);
                ctx.check(name, if ok { Ok(detail) } else { Err(detail) });
            }
        }
        Err(e) => ctx.check("dimension counts", Err(e.to_string())),
    }

    // Random forms mixed from projector components, so both answers occur.
    let mut bad27 = None;
    let mut bad14 = None;
    let mut hits = (0, 0);
    for t in 0..opts.trials {
        let mut rng = random::trial_rng(opts.seed, t);
        let h = random::gaussian_form(&mut rng, 3);
        let b = random::gaussian_form(&mut rng, 2);
        let (d3, d2) = match (proj.project_3forms(&h), proj.project_2forms(&b)) {
            (Ok(a), Ok(b)) => (a, b),
            (Err(e), _) | (_, Err(e)) => {
                bad27 = Some(e.to_string());
                break;
            }
        };
        let mut h_mixed = Form::zero(Frame::R7, 3);
        for (_, piece) in &d3.components {
            if rng.gen_bool(0.5) {
                h_mixed = &h_mixed + piece;
            }
        }
        let b_mixed = if rng.gen_bool(0.5) { d2.get(G2Type::Fourteen) } else { b.clone() };
        let p3 = proj.project_3forms(&h_mixed).expect("projector worked above");
        let in27 = p3.get(G2Type::One).is_zero() && p3.get(G2Type::Seven).is_zero();
        let in14 = proj.project_2forms(&b_mixed).expect("2-form").get(G2Type::Seven).is_zero();
        hits.0 += in27 as u32;
        hits.1 += in14 as u32;
        let m27 = membership_27(&h_mixed).expect("3-form");
        if m27.holds != in27 && bad27.is_none() {
            let failing: Vec<&str> =
                m27.residuals.iter().filter(|(_, r)| !r.is_zero()).map(|(n, _)| n.as_str()).collect();
            bad27 =
                Some(format!("trial {t}: projectors say {in27}, equations say {} (nonzero: {failing:?})", m27.holds));
        }
        let m14 = membership_14(&b_mixed).expect("2-form");
        if m14.holds != in14 && bad14.is_none() {
            bad14 = Some(format!("trial {t}: projectors say {in14}, equations say {}", m14.holds));
        }
    }
    ctx.check(
        "membership in Ω³₂₇ agrees with the projectors",
        bad27.map_or(Ok(format!("{} forms, {} inside", opts.trials, hits.0)), Err),
    );
    ctx.check(
        "membership in Ω²₁₄ agrees with the projectors",
        bad14.map_or(Ok(format!("{} forms, {} inside", opts.trials, hits.1)), Err),
    );

    let phi = cd.phi.to_complex();
    let psi = cd.psi.to_complex();
    let mut bad = None;
    for t in 0..opts.trials.min(20) {
        let mut rng = random::trial_rng(opts.seed ^ 0x5eed, t);
        let a = [random::gaussian(&mut rng), random::gaussian(&mut rng), random::gaussian(&mut rng)];
        let h = random::rational(&mut rng);
        let x: Vec<GaussianRational> = real_vector(&a, &h).iter().map(GaussianRational::from_rational).collect();
        if canonical_basis_3_7(&a, &h) != psi.interior(&x).expect("vector of length 7") {
            bad = Some(format!("X ⌟ ψ, a = {}, h = {h}", show(&a)));
            break;
        }
        if canonical_basis_2_7(&a, &h) != phi.interior(&x).expect("vector of length 7") {
            bad = Some(format!("X ⌟ φ, a = {}, h = {h}", show(&a)));
            break;
        }
    }
    ctx.check("X ⌟ ψ and X ⌟ φ match the canonical Ω³₇, Ω²₇ bases", bad.map_or(Ok(String::new()), Err));
}

fn diffops_suite(ctx: &mut Ctx, cd: &StructurePackage, opts: &VerifyOptions) {
    let report = identity_suite_with(cd, opts.seed, opts.trials, opts.max_degree);
    for r in &report.results {
        let outcome = match &r.counterexample {
            None => Ok(format!("{} trials", r.trials)),
            Some(c) => Err(c.clone()),
        };
        ctx.check(r.name, outcome);
    }
    if opts.trials > 0 {
        let control =
            identity_suite_with(&diffops::corrupted_psi_package(), opts.seed, opts.trials.min(10), opts.max_degree);
        let failed: Vec<&str> = control.results.iter().filter(|r| !r.passed).map(|r| r.name).collect();
        ctx.check(
            "negative control: a corrupted ψ breaks the suite",
            if failed.is_empty() { Err("every identity passed".into()) } else { Ok(format!("fails {failed:?}")) },
        );
    }
}

/// `φ` with one blade coefficient increased by one.
pub fn corrupt_phi(blade: Blade) -> Form<Rational> {
    let mut phi = StructurePackage::build(Convention::CdFirst).phi;
    phi.add_term(blade, rat(1));
    phi
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quick() -> VerifyOptions {
        VerifyOptions { trials: 8, ..VerifyOptions::default() }
    }

    #[test]
    fn every_suite_passes() {
        let report = run(Suite::All, &quick()).unwrap();
        for c in &report.checks {
            assert!(c.passed, "{} / {}: {}", c.suite, c.name, c.detail);
        }
        for s in Suite::EACH {
            assert!(report.checks.iter().any(|c| c.suite == s));
        }
    }

    #[test]
    fn corrupted_phi_fails() {
        let b = Frame::R7.blades(3)[5];
        let report = run(Suite::All, &VerifyOptions { phi_override: Some(corrupt_phi(b)), ..quick() }).unwrap();
        assert!(!report.passed());
        assert!(!report.get("φ matches the printed table").unwrap().passed);
    }

    #[test]
    fn suite_names_round_trip() {
        for s in [Suite::G2, Suite::Spin7, Suite::Cy3, Suite::Diffops, Suite::All] {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }
}
