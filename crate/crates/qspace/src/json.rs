//! JSON interchange for states and basis changes.
//!
//! State schema:
//! `{"sector":"Bose","terms":[{"occ":[[mode,count],...],"re":..,"im":..}]}`
//!
//! Basis schema:
//! `{"M":4,"U":[[{"re":..,"im":..},...],...]}` with rows indexed by mode.
//!
//! Floats are emitted with 17 significant digits so a parse of the output
//! reproduces every value bit for bit.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::basis::BasisChange;
use crate::error::Error;
use crate::state::{OccupationState, Sector, StateVector};

#[derive(Serialize, Deserialize)]
pub struct TermDto {
    pub occ: Vec<(u32, u32)>,
    pub re: f64,
    pub im: f64,
}

#[derive(Serialize, Deserialize)]
pub struct StateVectorDto {
    pub sector: String,
    pub terms: Vec<TermDto>,
}

#[derive(Serialize, Deserialize, Clone, Copy)]
pub struct CDto {
    pub re: f64,
    pub im: f64,
}

impl From<Complex64> for CDto {
    fn from(c: Complex64) -> Self {
        CDto { re: c.re, im: c.im }
    }
}

#[derive(Serialize, Deserialize)]
pub struct BasisChangeDto {
    #[serde(rename = "M")]
    pub m: u32,
    #[serde(rename = "U")]
    pub u: Vec<Vec<CDto>>,
}

pub fn state_to_dto(v: &StateVector) -> StateVectorDto {
    StateVectorDto {
        sector: v.sector().to_string(),
        terms: v
            .terms()
            .map(|(f, a)| TermDto {
                occ: f.iter().map(|(k, n)| (k.get(), n)).collect(),
                re: a.re,
                im: a.im,
            })
            .collect(),
    }
}

pub fn state_from_dto(dto: &StateVectorDto) -> Result<StateVector, Error> {
    let sector = Sector::from_tag(&dto.sector)
        .ok_or_else(|| Error::Evaluation(format!("unknown sector '{}'", dto.sector)))?;
    let mut terms = Vec::with_capacity(dto.terms.len());
    for t in &dto.terms {
        let f = OccupationState::new(&t.occ)?;
        terms.push((f, Complex64::new(t.re, t.im)));
    }
    Ok(StateVector::from_terms(sector, terms))
}

pub fn basis_to_dto(b: &BasisChange) -> BasisChangeDto {
    BasisChangeDto {
        m: b.m(),
        u: b
            .rows()
            .iter()
            .map(|row| row.iter().map(|c| CDto { re: c.re, im: c.im }).collect())
            .collect(),
    }
}

pub fn basis_from_dto(dto: &BasisChangeDto) -> Result<BasisChange, Error> {
    if dto.u.len() != dto.m as usize {
        return Err(Error::Evaluation(format!(
            "basis declares M={} but U has {} rows",
            dto.m,
            dto.u.len()
        )));
    }
    let rows = dto
        .u
        .iter()
        .map(|row| row.iter().map(|c| Complex64::new(c.re, c.im)).collect())
        .collect();
    BasisChange::new(rows)
}

pub fn load_basis(path: &std::path::Path) -> Result<BasisChange, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Evaluation(format!("cannot read basis file {}: {e}", path.display())))?;
    let dto: BasisChangeDto = serde_json::from_str(&text)
        .map_err(|e| Error::Evaluation(format!("cannot parse basis file {}: {e}", path.display())))?;
    basis_from_dto(&dto)
}

struct SciFormatter;

impl serde_json::ser::Formatter for SciFormatter {
    fn write_f64<W>(&mut self, writer: &mut W, value: f64) -> std::io::Result<()>
    where
        W: ?Sized + std::io::Write,
    {
        // 17 significant digits; enough to reconstruct any f64 exactly.
        write!(writer, "{value:.16e}")
    }
}

/// Serializes with full-precision floats.
pub fn to_json_17<T: Serialize>(value: &T) -> String {
    let mut out = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut out, SciFormatter);
    value
        .serialize(&mut ser)
        .expect("in-memory JSON serialization does not fail");
    String::from_utf8(out).expect("serializer output is UTF-8")
}
