//! Acceptance suite: one line per criterion, nonzero exit if any fails.
//!
//! Runs as a plain binary (`harness = false`) so the summary lines always
//! reach the terminal. Reference values are transcribed here and computed
//! through independent routes rather than re-read from the library.

#![allow(clippy::eq_op, clippy::needless_range_loop)]

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;
use std::process::{Command, Output};
use std::thread;
use std::time::Instant;

use g2kit_core::decomp::{dimension_counts, matrix_of, rank_of_l, rank_of_m, G2Projectors, G2Type};
use g2kit_core::diffops::{self, identity_suite_with};
use g2kit_core::exterior::notation::parse_form;
use g2kit_core::exterior::{Blade, Form, Frame};
use g2kit_core::g2forms::{build_split_phi, metric_from_phi, Convention, SplitVariant, StructurePackage};
use g2kit_core::octonion::{phi_form, psi_form, spin7_form};
use g2kit_core::random;
use g2kit_core::scalars::{gauss, rat, ratio, GaussianRational, Rational};

const PHI: &str = "dx1 dx2 dx3 - dx1 dy2 dy3 - dy1 dx2 dy3 - dy1 dy2 dx3 \
                   - dy0 dx1 dy1 - dy0 dx2 dy2 - dy0 dx3 dy3";
const PSI: &str = "dy0 dy1 dy2 dy3 - dy0 dy1 dx2 dx3 - dy0 dx1 dy2 dx3 - dy0 dx1 dx2 dy3 \
                   - dx2 dy2 dx3 dy3 - dx3 dy3 dx1 dy1 - dx1 dy1 dx2 dy2";
const SPIN7: &str = "dx0 dx1 dx2 dx3 - dx0 dx1 dy2 dy3 - dx0 dy1 dx2 dy3 - dx0 dy1 dy2 dx3 \
                     - dx0 dy0 dx1 dy1 - dx0 dy0 dx2 dy2 - dx0 dy0 dx3 dy3 \
                     + dy0 dy1 dy2 dy3 - dy0 dy1 dx2 dx3 - dy0 dx1 dy2 dx3 - dy0 dx1 dx2 dy3 \
                     - dx2 dy2 dx3 dy3 - dx3 dy3 dx1 dy1 - dx1 dy1 dx2 dy2";

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn g2kit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_g2kit")).args(args).env_remove("G2KIT_FORMAT").output().expect("g2kit binary runs")
}

fn text(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn vol(frame: Frame) -> Form<Rational> {
    Form::monomial(frame, frame.top_blade(), rat(1))
}

/// `dz^j = dx^j + i dy^j` multiplied out on the C^3 slice of R^7.
fn big_omega() -> Form<GaussianRational> {
    let i = gauss(rat(0), rat(1));
    let mut out = Form::scalar(Frame::R7, gauss(rat(1), rat(0)));
    for (x, y) in [(0, 4), (1, 5), (2, 6)] {
        let dz = &Form::basis(Frame::R7, x) + &Form::<GaussianRational>::basis(Frame::R7, y).scale(&i);
        out = &out ^ &dz;
    }
    out
}

fn structure_constants() -> Outcome {
    let phi = parse_form(Frame::R7, 3, PHI).map_err(|e| e.to_string())?;
    let psi = parse_form(Frame::R7, 4, PSI).map_err(|e| e.to_string())?;
    let spin7 = parse_form(Frame::R8, 4, SPIN7).map_err(|e| e.to_string())?;
    ensure((phi.len(), psi.len(), spin7.len()) == (7, 7, 14), || "printed tables have wrong lengths".into())?;
    ensure(phi_form() == phi, || format!("octonion φ = {}", phi_form()))?;
    ensure(psi_form() == psi, || format!("octonion ψ = {}", psi_form()))?;
    ensure(spin7_form() == spin7, || format!("octonion Φ = {}", spin7_form()))?;

    let lift = |f: &Form<Rational>| f.reindex(Frame::R8, |i| i + 1);
    let assembled = &(&Form::basis(Frame::R8, 0) ^ &lift(&phi)) + &lift(&psi);
    ensure(assembled == spin7, || "Φ ≠ dx⁰∧φ + ψ".into())?;
    ensure(spin7.star() == spin7, || "∗₈Φ ≠ Φ".into())?;
    ensure(&spin7 ^ &spin7 == vol(Frame::R8).scale(&rat(14)), || "Φ∧Φ ≠ 14 vol₈".into())?;
    ensure(&phi ^ &psi == vol(Frame::R7).scale(&rat(7)), || "φ∧ψ ≠ 7 vol₇".into())?;
    ensure(phi.dot(&phi) == rat(7), || "|φ|² ≠ 7".into())?;
    let o = big_omega();
    ensure(o.re().dot(&o.re()) == rat(4) && o.im().dot(&o.im()) == rat(4), || "|Re Ω|², |Im Ω|² ≠ 4".into())?;

    let emitted = text(&g2kit(&["emit", "--object", "phi", "--format", "text"]));
    let reparsed = parse_form(Frame::R7, 3, emitted.trim()).map_err(|e| e.to_string())?;
    ensure(reparsed == phi, || format!("emit phi printed {emitted}"))?;
    let json = text(&g2kit(&["emit", "--object", "Phi", "--format", "json"]));
    let spin7_json: Form<Rational> = g2kit::json::parse_form(&json).map_err(|e| e.to_string())?;
    ensure(spin7_json == spin7, || "emit Phi json differs".into())?;
    Ok("φ, ψ (7 terms), Φ (14 terms) match; Φ = dx⁰∧φ+ψ, ∗Φ = Φ, Φ∧Φ = 14vol₈, φ∧ψ = 7vol₇, |φ|² = 7".into())
}

fn metric_extraction() -> Outcome {
    for (c, k) in [(Convention::CdFirst, -6), (Convention::Opposite, 6)] {
        let phi = StructurePackage::build(c).phi;
        let top = Frame::R7.top_blade();
        for i in 0..7 {
            for j in i..7 {
                let a = phi.interior_basis(i).map_err(|e| e.to_string())?;
                let b = phi.interior_basis(j).map_err(|e| e.to_string())?;
                let got = (&(&a ^ &b) ^ &phi).coeff(&top);
                let want = if i == j { rat(k) } else { rat(0) };
                ensure(got == want, || format!("{c}: pair ({i},{j}) gives {got}, expected {want}"))?;
            }
        }
    }
    let mut sigs = Vec::new();
    for v in [SplitVariant::MinusEtaMinus, SplitVariant::PlusEtaPlus] {
        let m = metric_from_phi(&build_split_phi(v), 1).map_err(|e| e.to_string())?;
        ensure(m.signature == (3, 4) || m.signature == (4, 3), || format!("{v:?}: signature {:?}", m.signature))?;
        sigs.push(m.signature);
    }
    Ok(format!("28 pairs give −6δ (CD) and +6δ (opposite); split signatures {sigs:?}"))
}

fn decomposition_dimensions() -> Outcome {
    for (c, l7, l14) in [(Convention::CdFirst, -2, 1), (Convention::Opposite, 2, -1)] {
        let phi = StructurePackage::build(c).phi;
        let t = matrix_of(2, 2, |b| (&phi ^ b).star());
        let d7 = t.add_scaled_identity(&rat(-l7)).nullity();
        let d14 = t.add_scaled_identity(&rat(-l14)).nullity();
        ensure((d7, d14) == (7, 14), || format!("{c}: dims ({d7}, {d14}) at ({l7}, {l14})"))?;
    }
    let proj = G2Projectors::new(&StructurePackage::build(Convention::CdFirst));
    let ranks: Vec<usize> =
        proj.projector_matrices_3().map_err(|e| e.to_string())?.iter().map(|(_, m)| m.rank()).collect();
    ensure(ranks == [1, 7, 27], || format!("3-form projector ranks {ranks:?}"))?;
    Ok("2-forms: 7 at −2, 14 at +1 (CD), 7 at +2, 14 at −1 (opposite); 3-forms: 1/7/27".into())
}

fn su3_propositions() -> Outcome {
    let out = g2kit(&["verify", "--suite", "cy3", "--trials", "200", "--seed", "0"]);
    let report = text(&out);
    ensure(out.status.code() == Some(0), || format!("verify cy3 exit {:?}:\n{report}", out.status.code()))?;
    for needle in ["membership in Ω³₂₇", "membership in Ω²₁₄"] {
        ensure(report.lines().any(|l| l.starts_with("ok") && l.contains(needle)), || {
            format!("no passing line for {needle}")
        })?;
    }
    let l = rank_of_l();
    ensure((l.domain, l.kernel, l.image) == (24, 18, 6), || format!("L: {} {} {}", l.domain, l.kernel, l.image))?;
    let m = rank_of_m();
    ensure((m.domain, m.kernel, m.image) == (12, 6, 6), || format!("M: {} {} {}", m.domain, m.kernel, m.image))?;
    let cd = StructurePackage::build(Convention::CdFirst);
    let proj = G2Projectors::new(&cd);
    let counts = dimension_counts(&proj).map_err(|e| e.to_string())?;
    let got: Vec<(Vec<usize>, usize, bool)> = counts
        .iter()
        .map(|c| (c.pieces.iter().map(|p| p.dim).collect(), c.total, c.pieces.iter().all(|p| p.in_component)))
        .collect();
    let want = vec![(vec![1, 8, 18], 27, true), (vec![1, 6], 7, true), (vec![8, 6], 14, true), (vec![1, 6], 7, true)];
    ensure(got == want, || format!("dimension counts {got:?}"))?;

    let omega = parse_form(Frame::R7, 2, "dx1 dy1 + dx2 dy2 + dx3 dy3").map_err(|e| e.to_string())?;
    let dt = Form::<Rational>::basis(Frame::R7, 3);
    let o = big_omega();
    let h27 = &o.re() + &(&dt ^ &omega).scale(&ratio(4, 3));
    for (name, f, t) in [
        ("Re Ω + 4/3 dt∧ω", h27, G2Type::TwentySeven),
        ("Im Ω", o.im(), G2Type::Seven),
        ("ω", omega.clone(), G2Type::Seven),
    ] {
        let d = proj.project(&f.to_complex()).map_err(|e| e.to_string())?;
        ensure(d.pure_type() == Some(t), || format!("{name} has type {:?}", d.pure_type()))?;
    }
    Ok("200 random forms agree; L 18/6, M 6/6; 1+8+18, 1+6, 8+6, 1+6; Re Ω+4/3dt∧ω ∈ Ω³₂₇, Im Ω ∈ Ω³₇, ω ∈ Ω²₇".into())
}

/// `φ_{ijk}` with the antisymmetrisation done by counting inversions.
fn table(form: &Form<Rational>, idx: &[usize]) -> Rational {
    let mut sorted = idx.to_vec();
    let mut sign = 1;
    for a in 0..sorted.len() {
        for b in 0..sorted.len() - 1 - a {
            if sorted[b] == sorted[b + 1] {
                return rat(0);
            }
            if sorted[b] > sorted[b + 1] {
                sorted.swap(b, b + 1);
                sign = -sign;
            }
        }
    }
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return rat(0);
    }
    let mask = sorted.iter().fold(0u16, |m, &i| m | (1 << i));
    form.coeff(&Blade::from_mask(mask)) * rat(sign)
}

fn cross_identities() -> Outcome {
    let phi = parse_form(Frame::R7, 3, PHI).map_err(|e| e.to_string())?;
    let psi = parse_form(Frame::R7, 4, PSI).map_err(|e| e.to_string())?;
    let mut p3 = vec![rat(0); 343];
    for (n, v) in p3.iter_mut().enumerate() {
        *v = table(&phi, &[n / 49, (n / 7) % 7, n % 7]);
    }
    let mut p4 = vec![rat(0); 2401];
    for (n, v) in p4.iter_mut().enumerate() {
        *v = table(&psi, &[n / 343, (n / 49) % 7, (n / 7) % 7, n % 7]);
    }
    let p = |i: usize, j: usize, k: usize| &p3[i * 49 + j * 7 + k];
    let q = |i: usize, j: usize, k: usize, l: usize| &p4[i * 343 + j * 49 + k * 7 + l];
    let delta = |a: usize, b: usize| rat((a == b) as i64);
    let mut cases = 0;
    for i in 0..7 {
        for j in 0..7 {
            for a in 0..7 {
                for b in 0..7 {
                    let lhs: Rational = (0..7).map(|k| p(i, j, k) * p(a, b, k)).sum();
                    let rhs = delta(i, a) * delta(j, b) - delta(i, b) * delta(j, a) - q(i, j, a, b);
                    ensure(lhs == rhs, || format!("contraction fails at ({i},{j},{a},{b})"))?;
                    cases += 1;
                }
            }
        }
    }
    let cross = |x: &[Rational], y: &[Rational]| -> Vec<Rational> {
        (0..7)
            .map(|l| (0..7).flat_map(|i| (0..7).map(move |j| (i, j))).map(|(i, j)| &x[i] * &y[j] * p(i, j, l)).sum())
            .collect()
    };
    let dot = |x: &[Rational], y: &[Rational]| -> Rational { x.iter().zip(y).map(|(a, b)| a * b).sum() };
    let psi_v = |a: &[Rational], b: &[Rational], c: &[Rational]| -> Vec<Rational> {
        (0..7)
            .map(|l| {
                let mut acc = rat(0);
                for i in 0..7 {
                    for j in 0..7 {
                        for k in 0..7 {
                            let t = q(i, j, k, l);
                            if *t != rat(0) {
                                acc += &a[i] * &b[j] * &c[k] * t;
                            }
                        }
                    }
                }
                acc
            })
            .collect()
    };
    let mut vectors: Vec<Vec<Rational>> = (0..7).map(|i| (0..7).map(|j| delta(i, j)).collect()).collect();
    let mut rng = random::trial_rng(5, 5);
    for _ in 0..6 {
        vectors.push((0..7).map(|_| random::rational(&mut rng)).collect());
    }
    let mut triples = 0;
    for x in &vectors {
        for y in &vectors {
            let xy = cross(x, y);
            let yx = cross(y, x);
            ensure(xy.iter().zip(&yx).all(|(a, b)| *a == -b.clone()), || "antisymmetry".into())?;
            ensure(dot(&xy, x) == rat(0) && dot(&xy, y) == rat(0), || "orthogonality".into())?;
            let norm = dot(x, x) * dot(y, y) - dot(x, y) * dot(x, y);
            ensure(dot(&xy, &xy) == norm, || "norm identity".into())?;
            for z in &vectors {
                let lhs = cross(x, &cross(y, z));
                let w = psi_v(z, y, x);
                let (a, b) = (dot(x, y), dot(x, z));
                let ok = (0..7).all(|l| lhs[l] == -(&a * &z[l]) + &b * &y[l] - &w[l]);
                ensure(ok, || "iterated cross identity".into())?;
                triples += 1;
            }
        }
    }
    Ok(format!("{cases} index choices; antisymmetry, orthogonality, norm and iterated cross on {triples} triples"))
}

fn operator_identities() -> Outcome {
    let out = g2kit(&["verify", "--suite", "diffops", "--seed", "0", "--trials", "100", "--max-degree", "3"]);
    let report = text(&out);
    ensure(out.status.code() == Some(0), || format!("verify diffops exit {:?}:\n{report}", out.status.code()))?;
    let names = [
        diffops::CURL_GRAD,
        diffops::DIV_CURL,
        diffops::CURL_CURL,
        diffops::CURL_PATHS,
        diffops::CLIFFORD_RELATION,
        diffops::CLIFFORD_SKEW,
        diffops::DIRAC_FORMULA,
        diffops::DIRAC_SQUARED,
        diffops::THETA,
        "negative control",
    ];
    for n in names {
        ensure(report.lines().any(|l| l.starts_with("ok") && l.contains(n)), || format!("no passing line for {n}"))?;
    }
    let passing = report.lines().filter(|l| l.starts_with("ok")).count();
    let control = identity_suite_with(&diffops::corrupted_psi_package(), 0, 20, 3);
    ensure(!control.passed(), || "corrupted ψ passed every identity".into())?;
    let broken: Vec<&str> = control.results.iter().filter(|r| !r.passed).map(|r| r.name).collect();
    Ok(format!("{passing} checks × 100 trials pass; corrupted ψ breaks {}", broken.join(", ")))
}

fn corrupted_run(dir: &Path, blade: Blade) -> Result<(), String> {
    let mut phi = StructurePackage::build(Convention::CdFirst).phi;
    phi.add_term(blade, rat(1));
    let path = dir.join(format!("phi-{}.json", blade.mask()));
    std::fs::write(&path, g2kit::json::to_json(&phi)).map_err(|e| e.to_string())?;
    // fewer trials keep 35 full runs inside the time budget; the table checks fail regardless
    let out = g2kit(&["verify", "--suite", "all", "--trials", "10", "--phi", path.to_str().expect("utf-8 path")]);
    let stderr = String::from_utf8_lossy(&out.stderr);
    ensure(out.status.code() == Some(1), || format!("blade {:?}: exit {:?}", blade, out.status.code()))?;
    ensure(stderr.contains("first failure: [") && text(&out).lines().any(|l| l.starts_with("FAIL")), || {
        format!("blade {blade:?}: no named failure")
    })
}

fn cli_contract() -> Outcome {
    let out = g2kit(&["verify", "--suite", "all"]);
    ensure(out.status.code() == Some(0), || format!("verify all exit {:?}:\n{}", out.status.code(), text(&out)))?;
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let blades = Frame::R7.blades(3);
    let workers = thread::available_parallelism().map_or(4, |n| n.get()).min(blades.len());
    let results: Vec<Result<(), String>> = thread::scope(|s| {
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                let blades = &blades;
                let dir = dir.path();
                s.spawn(move || {
                    blades.iter().skip(w).step_by(workers).map(|b| corrupted_run(dir, *b)).collect::<Vec<_>>()
                })
            })
            .collect();
        handles.into_iter().flat_map(|h| h.join().expect("worker")).collect()
    });
    let failures: Vec<String> = results.into_iter().filter_map(Result::err).collect();
    ensure(failures.is_empty(), || failures.join("; "))?;
    Ok(format!("verify all exits 0; all {} single-blade corruptions exit 1 with a named failure", blades.len()))
}

fn main() {
    let criteria: [Criterion; 7] = [
        ("structure-constant fidelity", structure_constants),
        ("metric extraction", metric_extraction),
        ("decomposition dimensions", decomposition_dimensions),
        ("SU(3) propositions", su3_propositions),
        ("cross-product identities", cross_identities),
        ("operator identities", operator_identities),
        ("CLI contract", cli_contract),
    ];
    let start = Instant::now();
    let mut passed = 0;
    for (n, (name, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|e| {
            let msg = e.downcast_ref::<String>().cloned().or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        let secs = t.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => {
                passed += 1;
                println!("criterion {} {name}: PASS ({secs:.1}s) {detail}", n + 1);
            }
            Err(detail) => println!("criterion {} {name}: FAIL ({secs:.1}s) {detail}", n + 1),
        }
    }
    println!("acceptance: {passed}/{} passed in {:.1}s", criteria.len(), start.elapsed().as_secs_f64());
    if passed != criteria.len() {
        std::process::exit(1);
    }
}
