//! Occupation-number states and their complex linear span.
//!
//! A state records how many quanta sit in each mode and nothing else:
//! there are no particle labels to permute. `StateVector` spans these
//! states over complex amplitudes, tagged by the sector the span lives in.

use std::collections::BTreeMap;
use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::Error;

/// 1-based mode index.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Mode(u32);

impl Mode {
    pub fn new(index: u32) -> Result<Self, Error> {
        if index == 0 {
            Err(Error::InvalidMode)
        } else {
            Ok(Mode(index))
        }
    }

    pub fn get(self) -> u32 {
        self.0
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Shorthand constructor used throughout tests and the CLI. Panics on 0.
pub fn mode(index: u32) -> Mode {
    Mode::new(index).expect("mode index must be >= 1")
}

/// Statistics sector a vector lives in.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum Sector {
    /// Plain tensor span, no symmetry imposed.
    Full,
    Bose,
    Fermi,
}

impl Sector {
    /// Single-letter tag used in the ket text form.
    pub fn tag(self) -> char {
        match self {
            Sector::Full => 'T',
            Sector::Bose => 'B',
            Sector::Fermi => 'F',
        }
    }

    /// Parses a sector tag; accepts the single letters and full names,
    /// case-insensitively.
    pub fn from_tag(s: &str) -> Option<Sector> {
        match s.to_ascii_lowercase().as_str() {
            "t" | "full" => Some(Sector::Full),
            "b" | "bose" => Some(Sector::Bose),
            "f" | "fermi" => Some(Sector::Fermi),
            _ => None,
        }
    }
}

impl fmt::Display for Sector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Sector::Full => "Full",
            Sector::Bose => "Bose",
            Sector::Fermi => "Fermi",
        };
        write!(f, "{name}")
    }
}

/// Finite map mode -> occupation count; counts are always >= 1.
///
/// Equality is map equality: two states with the same counts are the
/// same state, whatever order they were built in.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct OccupationState {
    counts: BTreeMap<Mode, u32>,
}

impl OccupationState {
    /// The state with no quanta anywhere.
    pub fn vacuum() -> Self {
        OccupationState::default()
    }

    /// Builds a state from `(mode, count)` pairs.
    ///
    /// Rejects duplicate modes, zero counts, and mode index 0; the caller
    /// must omit unoccupied modes.
    pub fn new(pairs: &[(u32, u32)]) -> Result<Self, Error> {
        let mut counts = BTreeMap::new();
        for &(k, n) in pairs {
            let k = Mode::new(k)?;
            if n == 0 {
                return Err(Error::ZeroCount(k.get()));
            }
            if counts.insert(k, n).is_some() {
                return Err(Error::DuplicateMode(k.get()));
            }
        }
        Ok(OccupationState { counts })
    }

    pub fn count(&self, k: Mode) -> u32 {
        self.counts.get(&k).copied().unwrap_or(0)
    }

    pub fn occupied(&self, k: Mode) -> bool {
        self.counts.contains_key(&k)
    }

    /// Occupied modes in ascending order.
    pub fn support(&self) -> impl Iterator<Item = Mode> + '_ {
        self.counts.keys().copied()
    }

    /// `(mode, count)` pairs in ascending mode order.
    pub fn iter(&self) -> impl Iterator<Item = (Mode, u32)> + '_ {
        self.counts.iter().map(|(&k, &n)| (k, n))
    }

    /// Total quanta across all modes.
    pub fn total(&self) -> u32 {
        self.counts.values().sum()
    }

    pub fn support_len(&self) -> usize {
        self.counts.len()
    }

    pub fn max_mode(&self) -> Option<Mode> {
        self.counts.keys().next_back().copied()
    }

    pub fn max_count(&self) -> u32 {
        self.counts.values().copied().max().unwrap_or(0)
    }

    pub fn is_vacuum(&self) -> bool {
        self.counts.is_empty()
    }

    /// Same state with one more quantum in mode `k`.
    pub fn raised(&self, k: Mode) -> Self {
        let mut counts = self.counts.clone();
        *counts.entry(k).or_insert(0) += 1;
        OccupationState { counts }
    }

    /// Same state with one quantum removed from mode `k`;
    /// `None` when the mode is empty.
    pub fn lowered(&self, k: Mode) -> Option<Self> {
        let mut counts = self.counts.clone();
        match counts.get_mut(&k) {
            None => None,
            Some(n) if *n == 1 => {
                counts.remove(&k);
                Some(OccupationState { counts })
            }
            Some(n) => {
                *n -= 1;
                Some(OccupationState { counts })
            }
        }
    }

    /// Canonical ket text, e.g. `|3@2,1@3,4@5;B>`; the vacuum is `|;B>`.
    /// Items are `count@mode`, modes ascending.
    pub fn ket_string(&self, sector: Sector) -> String {
        let items: Vec<String> = self
            .counts
            .iter()
            .map(|(k, n)| format!("{n}@{k}"))
            .collect();
        format!("|{};{}>", items.join(","), sector.tag())
    }
}

/// Finite complex linear combination of occupation states in one sector.
///
/// Invariants: no stored amplitude is exactly zero, and in the Fermi
/// sector no stored state has a count above 1 (those are null-norm and
/// identified with zero).
#[derive(Clone, PartialEq, Debug)]
pub struct StateVector {
    sector: Sector,
    terms: BTreeMap<OccupationState, Complex64>,
}

impl StateVector {
    pub fn zero(sector: Sector) -> Self {
        StateVector {
            sector,
            terms: BTreeMap::new(),
        }
    }

    /// Embeds a single occupation state with amplitude 1.
    ///
    /// In the Fermi sector a state with any count >= 2 embeds to the
    /// zero vector.
    pub fn embed(f: OccupationState, sector: Sector) -> Self {
        let mut v = StateVector::zero(sector);
        if sector == Sector::Fermi && f.max_count() >= 2 {
            return v;
        }
        v.terms.insert(f, Complex64::ONE);
        v
    }

    /// Accumulates `(state, amplitude)` pairs, dropping exact zeros and,
    /// in the Fermi sector, states with a count above 1.
    pub fn from_terms<I>(sector: Sector, terms: I) -> Self
    where
        I: IntoIterator<Item = (OccupationState, Complex64)>,
    {
        let mut map: BTreeMap<OccupationState, Complex64> = BTreeMap::new();
        for (f, a) in terms {
            if sector == Sector::Fermi && f.max_count() >= 2 {
                continue;
            }
            let entry = map.entry(f).or_insert(Complex64::ZERO);
            *entry += a;
        }
        map.retain(|_, a| a.norm_sqr() != 0.0);
        StateVector {
            sector,
            terms: map,
        }
    }

    pub fn sector(&self) -> Sector {
        self.sector
    }

    pub fn terms(&self) -> impl Iterator<Item = (&OccupationState, Complex64)> + '_ {
        self.terms.iter().map(|(f, &a)| (f, a))
    }

    pub fn amplitude(&self, f: &OccupationState) -> Complex64 {
        self.terms.get(f).copied().unwrap_or(Complex64::ZERO)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &StateVector) -> Result<StateVector, Error> {
        if self.sector != other.sector {
            return Err(Error::SectorMismatch {
                expected: self.sector,
                found: other.sector,
            });
        }
        let mut terms = self.terms.clone();
        for (f, &a) in &other.terms {
            let entry = terms.entry(f.clone()).or_insert(Complex64::ZERO);
            *entry += a;
        }
        terms.retain(|_, a| a.norm_sqr() != 0.0);
        Ok(StateVector {
            sector: self.sector,
            terms,
        })
    }

    pub fn sub(&self, other: &StateVector) -> Result<StateVector, Error> {
        self.add(&other.scale(-Complex64::ONE))
    }

    pub fn scale(&self, c: Complex64) -> StateVector {
        if c.norm_sqr() == 0.0 {
            return StateVector::zero(self.sector);
        }
        StateVector {
            sector: self.sector,
            terms: self.terms.iter().map(|(f, &a)| (f.clone(), c * a)).collect(),
        }
    }

    /// Drops terms with |amplitude| <= eps. The stored invariant already
    /// excludes exact zeros; this is for display and CLI use.
    pub fn prune(&self, eps: f64) -> StateVector {
        StateVector {
            sector: self.sector,
            terms: self
                .terms
                .iter()
                .filter(|(_, a)| a.norm() > eps)
                .map(|(f, &a)| (f.clone(), a))
                .collect(),
        }
    }

    /// Largest amplitude magnitude; 0 for the zero vector.
    pub fn max_abs_amplitude(&self) -> f64 {
        self.terms.values().map(|a| a.norm()).fold(0.0, f64::max)
    }
}

/// Formats a complex scalar in the expression grammar: `2`, `2i`,
/// or `(3+4i)` for mixed values (parenthesized so it can prefix a ket).
pub fn format_complex(c: Complex64) -> String {
    if c.im == 0.0 {
        format!("{}", c.re)
    } else if c.re == 0.0 {
        format!("{}i", c.im)
    } else if c.im < 0.0 {
        format!("({}-{}i)", c.re, -c.im)
    } else {
        format!("({}+{}i)", c.re, c.im)
    }
}

impl fmt::Display for StateVector {
    /// Canonical text form, itself a valid expression:
    /// `1 |1@1;B> + 1.5 |2@1;B>`; the zero vector prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (state, &a) in &self.terms {
            let ket = state.ket_string(self.sector);
            if first {
                first = false;
                if a.im == 0.0 && a.re < 0.0 {
                    write!(f, "-{} {}", format_complex(-a), ket)?;
                } else {
                    write!(f, "{} {}", format_complex(a), ket)?;
                }
            } else if a.im == 0.0 && a.re < 0.0 {
                write!(f, " - {} {}", format_complex(-a), ket)?;
            } else {
                write!(f, " + {} {}", format_complex(a), ket)?;
            }
        }
        Ok(())
    }
}
