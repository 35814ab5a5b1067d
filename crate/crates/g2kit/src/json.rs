//! JSON form schema.
//!
//! ```json
//! {"frame": "R7", "degree": 3,
//!  "terms": [{"blade": [0, 1, 2], "coeff": {"num": "1", "den": "1"}}]}
//! ```
//!
//! Blades are written as ascending coordinate indices (`x1 x2 x3 y0 y1 y2 y3`
//! on R7, `x0 .. y3` on R8). On input a blade may be in any order, with the
//! reordering sign applied, and coordinate names such as `"y0"` are accepted.
//!
//! Coefficients are rationals `{"num", "den"}`, Gaussian rationals
//! `{"re", "im"}` or polynomials `[{"exp": [7 exponents], "coeff"}]`.
//! Integers are written as strings so they never lose precision; plain
//! JSON integers are accepted on input.

use std::str::FromStr;

use g2kit_core::exterior::{Blade, Form, Frame};
use g2kit_core::scalars::{gauss, GaussianRational, Polynomial, Rational, Scalar, NVARS};
use num_bigint::BigInt;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

/// A malformed input document; `path` names the offending field.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{path}: {message}")]
pub struct JsonError {
    pub path: String,
    pub message: String,
}

fn err(path: impl Into<String>, message: impl Into<String>) -> JsonError {
    JsonError { path: path.into(), message: message.into() }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum IntText {
    Text(String),
    Number(i64),
}

impl IntText {
    fn parse(&self, path: &str) -> Result<BigInt, JsonError> {
        match self {
            IntText::Number(n) => Ok(BigInt::from(*n)),
            IntText::Text(s) => BigInt::from_str(s.trim()).map_err(|_| err(path, format!("`{s}` is not an integer"))),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RationalDto {
    pub num: IntText,
    pub den: IntText,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GaussianDto {
    pub re: RationalDto,
    pub im: RationalDto,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MonomialDto {
    pub exp: Vec<u8>,
    pub coeff: RationalDto,
}

/// Either kind of numeric coefficient, for inputs that may be complex.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum NumberDto {
    Gaussian(GaussianDto),
    Rational(RationalDto),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum BladeEntry {
    Index(usize),
    Name(String),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermDto<C> {
    pub blade: Vec<BladeEntry>,
    pub coeff: C,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FormDto<C> {
    pub frame: String,
    pub degree: usize,
    pub terms: Vec<TermDto<C>>,
}

/// Coefficient types with a JSON representation.
pub trait JsonCoeff: Scalar {
    type Dto: Serialize + DeserializeOwned;
    fn to_dto(&self) -> Self::Dto;
    fn from_dto(dto: &Self::Dto, path: &str) -> Result<Self, JsonError>;
}

fn rational_dto(r: &Rational) -> RationalDto {
    RationalDto { num: IntText::Text(r.numer().to_string()), den: IntText::Text(r.denom().to_string()) }
}

fn rational_from(dto: &RationalDto, path: &str) -> Result<Rational, JsonError> {
    let num = dto.num.parse(&format!("{path}.num"))?;
    let den = dto.den.parse(&format!("{path}.den"))?;
    if den == BigInt::from(0) {
        return Err(err(format!("{path}.den"), "denominator is zero"));
    }
    Ok(Rational::new(num, den))
}

impl JsonCoeff for Rational {
    type Dto = RationalDto;
    fn to_dto(&self) -> RationalDto {
        rational_dto(self)
    }
    fn from_dto(dto: &RationalDto, path: &str) -> Result<Self, JsonError> {
        rational_from(dto, path)
    }
}

impl JsonCoeff for GaussianRational {
    type Dto = NumberDto;
    fn to_dto(&self) -> NumberDto {
        NumberDto::Gaussian(GaussianDto { re: rational_dto(&self.re), im: rational_dto(&self.im) })
    }
    fn from_dto(dto: &NumberDto, path: &str) -> Result<Self, JsonError> {
        match dto {
            NumberDto::Gaussian(g) => {
                Ok(gauss(rational_from(&g.re, &format!("{path}.re"))?, rational_from(&g.im, &format!("{path}.im"))?))
            }
            NumberDto::Rational(r) => Ok(GaussianRational::from_rational(&rational_from(r, path)?)),
        }
    }
}

impl JsonCoeff for Polynomial {
    type Dto = Vec<MonomialDto>;
    fn to_dto(&self) -> Vec<MonomialDto> {
        self.terms().map(|(e, c)| MonomialDto { exp: e.to_vec(), coeff: rational_dto(c) }).collect()
    }
    fn from_dto(dto: &Vec<MonomialDto>, path: &str) -> Result<Self, JsonError> {
        let mut p = Polynomial::zero();
        for (i, m) in dto.iter().enumerate() {
            let exp: [u8; NVARS] = m.exp.as_slice().try_into().map_err(|_| {
                err(format!("{path}[{i}].exp"), format!("expected {NVARS} exponents, got {}", m.exp.len()))
            })?;
            p.add_term(exp, rational_from(&m.coeff, &format!("{path}[{i}].coeff"))?);
        }
        Ok(p)
    }
}

pub fn form_to_dto<S: JsonCoeff>(f: &Form<S>) -> FormDto<S::Dto> {
    FormDto {
        frame: f.frame().label().to_string(),
        degree: f.degree(),
        terms: f
            .terms()
            .map(|(b, c)| TermDto { blade: b.indices().map(BladeEntry::Index).collect(), coeff: c.to_dto() })
            .collect(),
    }
}

pub fn to_json<S: JsonCoeff>(f: &Form<S>) -> String {
    serde_json::to_string_pretty(&form_to_dto(f)).expect("forms always serialise")
}

pub fn parse_frame(name: &str) -> Option<Frame> {
    [Frame::R7, Frame::R8].into_iter().find(|f| f.label() == name)
}

pub fn form_from_dto<S: JsonCoeff>(dto: &FormDto<S::Dto>) -> Result<Form<S>, JsonError> {
    let frame = parse_frame(&dto.frame)
        .ok_or_else(|| err("frame", format!("unknown frame `{}` (expected R7 or R8)", dto.frame)))?;
    if dto.degree > frame.dim() {
        return Err(err("degree", format!("degree {} exceeds dimension {}", dto.degree, frame.dim())));
    }
    let mut form = Form::zero(frame, dto.degree);
    for (t, term) in dto.terms.iter().enumerate() {
        let mut idx = Vec::with_capacity(term.blade.len());
        for (k, entry) in term.blade.iter().enumerate() {
            let path = || format!("terms[{t}].blade[{k}]");
            let i = match entry {
                BladeEntry::Index(i) if *i < frame.dim() => *i,
                BladeEntry::Index(i) => return Err(err(path(), format!("index {i} is out of range for {frame}"))),
                BladeEntry::Name(name) => frame
                    .index_of(name)
                    .ok_or_else(|| err(path(), format!("`{name}` is not a coordinate of {frame}")))?,
            };
            idx.push(i);
        }
        if idx.len() != dto.degree {
            return Err(err(
                format!("terms[{t}].blade"),
                format!("{} factors in a degree {} form", idx.len(), dto.degree),
            ));
        }
        let (sign, blade): (i32, Blade) =
            Blade::from_sequence(&idx).ok_or_else(|| err(format!("terms[{t}].blade"), "repeated coordinate"))?;
        let c = S::from_dto(&term.coeff, &format!("terms[{t}].coeff"))?;
        form.add_term(blade, if sign < 0 { -c } else { c });
    }
    Ok(form)
}

/// Parses a form document, reporting the path of the first bad field.
pub fn parse_form<S: JsonCoeff>(text: &str) -> Result<Form<S>, JsonError> {
    let de = &mut serde_json::Deserializer::from_str(text);
    let dto: FormDto<S::Dto> = serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        err(if path == "." { "document".to_string() } else { path }, e.inner().to_string())
    })?;
    form_from_dto(&dto)
}
