//! LaTeX rendering of forms: `dx^{1} dx^{2} dx^{3} - \tfrac{1}{2}\, dx^{1} dy^{2} dy^{3}`.
//!
//! Terms come out in canonical ascending-blade order, and wedge signs are
//! left implicit as in juxtaposed notation.

use g2kit_core::exterior::{Form, Frame};
use g2kit_core::scalars::{GaussianRational, Polynomial, Rational, NVARS};
use num_bigint::BigInt;

/// A coefficient as `(negative, magnitude)`; the magnitude is empty for 1.
pub trait LatexCoeff {
    fn latex(&self) -> (bool, String);
}

fn rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("\\tfrac{{{}}}{{{}}}", r.numer(), r.denom())
    }
}

fn is_one(r: &Rational) -> bool {
    r.is_integer() && *r.numer() == BigInt::from(1)
}

impl LatexCoeff for Rational {
    fn latex(&self) -> (bool, String) {
        let neg = *self.numer() < BigInt::from(0);
        let mag = if neg { -self.clone() } else { self.clone() };
        (neg, if is_one(&mag) { String::new() } else { rational(&mag) })
    }
}

impl LatexCoeff for GaussianRational {
    fn latex(&self) -> (bool, String) {
        let zero = BigInt::from(0);
        match (*self.re.numer() == zero, *self.im.numer() == zero) {
            (_, true) => self.re.latex(),
            (true, false) => {
                let (neg, mag) = self.im.latex();
                (neg, format!("{mag}i"))
            }
            (false, false) => {
                let (ineg, imag) = self.im.latex();
                let re = if *self.re.numer() < zero {
                    format!("-{}", rational(&-self.re.clone()))
                } else {
                    rational(&self.re)
                };
                (false, format!("\\left({re} {} {imag}i\\right)", if ineg { "-" } else { "+" }))
            }
        }
    }
}

const VAR_NAMES: [&str; NVARS] = ["x^{1}", "x^{2}", "x^{3}", "y^{0}", "y^{1}", "y^{2}", "y^{3}"];

impl LatexCoeff for Polynomial {
    fn latex(&self) -> (bool, String) {
        // same order as the plain-text rendering: highest degree first
        let mut terms: Vec<_> = self.terms().collect();
        terms.sort_by(|(a, _), (b, _)| {
            let da: u32 = a.iter().map(|&k| k as u32).sum();
            let db: u32 = b.iter().map(|&k| k as u32).sum();
            db.cmp(&da).then(b.cmp(a))
        });
        if terms.len() == 1 {
            let (e, c) = terms[0];
            let (neg, mag) = c.latex();
            let mono = monomial(e);
            return match (mag.is_empty(), mono.is_empty()) {
                (true, true) => (neg, "1".into()),
                (true, false) => (neg, mono),
                (false, true) => (neg, mag),
                (false, false) => (neg, format!("{mag} {mono}")),
            };
        }
        let mut out = String::new();
        for (n, (e, c)) in terms.into_iter().enumerate() {
            let (neg, mag) = c.latex();
            out.push_str(match (n, neg) {
                (0, true) => "-",
                (0, false) => "",
                (_, true) => " - ",
                (_, false) => " + ",
            });
            let mono = monomial(e);
            out.push_str(&match (mag.is_empty(), mono.is_empty()) {
                (true, true) => "1".to_string(),
                (true, false) => mono,
                (false, true) => mag,
                (false, false) => format!("{mag} {mono}"),
            });
        }
        (false, format!("\\left({out}\\right)"))
    }
}

fn monomial(e: &[u8; NVARS]) -> String {
    let mut parts = Vec::new();
    for (v, &k) in e.iter().enumerate() {
        match k {
            0 => {}
            1 => parts.push(VAR_NAMES[v].to_string()),
            _ => parts.push(format!("({})^{{{k}}}", VAR_NAMES[v])),
        }
    }
    parts.join(" ")
}

fn coordinate(frame: Frame, i: usize) -> String {
    let name = frame.coord_name(i);
    let (letter, index) = name.split_at(1);
    format!("d{letter}^{{{index}}}")
}

pub fn form_to_latex<S: LatexCoeff + g2kit_core::scalars::Scalar>(f: &Form<S>) -> String {
    if f.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (n, (b, c)) in f.terms().enumerate() {
        let (neg, mag) = c.latex();
        out.push_str(match (n, neg) {
            (0, true) => "-",
            (0, false) => "",
            (_, true) => " - ",
            (_, false) => " + ",
        });
        let blade: Vec<String> = b.indices().map(|i| coordinate(f.frame(), i)).collect();
        let blade = blade.join(" ");
        out.push_str(&match (mag.is_empty(), blade.is_empty()) {
            (true, true) => "1".to_string(),
            (true, false) => blade,
            (false, true) => mag,
            (false, false) => format!("{mag}\\, {blade}"),
        });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use g2kit_core::exterior::notation::parse_form;
    use g2kit_core::scalars::{gauss, rat, ratio};

    #[test]
    fn rational_form() {
        let f = parse_form(Frame::R7, 3, "dx1 dx2 dx3 - 1/2 dy0 dx1 dy1").unwrap();
        assert_eq!(form_to_latex(&f), "dx^{1} dx^{2} dx^{3} + \\tfrac{1}{2}\\, dx^{1} dy^{0} dy^{1}");
    }

    #[test]
    fn gaussian_coefficients() {
        assert_eq!(gauss(rat(0), rat(-1)).latex(), (true, "i".into()));
        assert_eq!(gauss(rat(2), ratio(-1, 3)).latex(), (false, "\\left(2 - \\tfrac{1}{3}i\\right)".into()));
    }

    #[test]
    fn polynomial_coefficients() {
        let p = &Polynomial::var(0) * &Polynomial::var(0);
        assert_eq!(p.latex(), (false, "(x^{1})^{2}".into()));
        let q = &Polynomial::var(3) - &Polynomial::one();
        assert_eq!(q.latex().1, "\\left(y^{0} - 1\\right)");
    }
}
