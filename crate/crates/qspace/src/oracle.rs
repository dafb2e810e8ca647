//! Labeled tensor-product cross-check.
//!
//! Everything here is deliberately naive: dense arrays over all m^n label
//! tuples, explicit sums over all n! permutations, single-threaded, with
//! hard caps small enough that nothing clever is ever needed. This module
//! exists to be obviously correct, not fast; production code never calls
//! it outside tests and the `oracle-compare` CLI command.

use num_complex::Complex64;

use crate::algebra::monomial_of;
use crate::error::Error;
use crate::state::{Mode, OccupationState, Sector};

/// Hard cap on particle number n.
pub const MAX_PARTICLES: u32 = 6;
/// Hard cap on the mode cutoff m.
pub const MAX_MODES: u32 = 6;

/// Dense vector in the n-fold labeled tensor power of an m-mode
/// single-particle space, indexed by label tuples (l_1, ..., l_n),
/// each l_i in 1..=m.
#[derive(Clone, PartialEq, Debug)]
pub struct LabeledVector {
    n: u32,
    m: u32,
    amps: Vec<Complex64>,
}

fn check_caps(n: u32, m: u32) -> Result<(), Error> {
    if n > MAX_PARTICLES {
        return Err(Error::CutoffExceeded {
            index: n,
            cutoff: MAX_PARTICLES,
        });
    }
    if m > MAX_MODES || m == 0 {
        return Err(Error::CutoffExceeded {
            index: m,
            cutoff: MAX_MODES,
        });
    }
    Ok(())
}

fn factorial(n: u32) -> f64 {
    (2..=n).map(|j| j as f64).product()
}

/// Visits every permutation of 0..n with its sign.
fn for_each_permutation(n: usize, mut visit: impl FnMut(&[usize], i32)) {
    fn go(k: usize, idx: &mut [usize], parity: i32, visit: &mut impl FnMut(&[usize], i32)) {
        if k == idx.len() {
            visit(idx, parity);
            return;
        }
        for i in k..idx.len() {
            idx.swap(k, i);
            let p = if i == k { parity } else { -parity };
            go(k + 1, idx, p, visit);
            idx.swap(k, i);
        }
    }
    let mut idx: Vec<usize> = (0..n).collect();
    go(0, &mut idx, 1, &mut visit);
}

impl LabeledVector {
    pub fn zero(n: u32, m: u32) -> Result<Self, Error> {
        check_caps(n, m)?;
        let len = (m as usize).pow(n);
        Ok(LabeledVector {
            n,
            m,
            amps: vec![Complex64::ZERO; len],
        })
    }

    /// Builds a vector by evaluating `f` on every label tuple.
    pub fn from_fn(
        n: u32,
        m: u32,
        mut f: impl FnMut(&[Mode]) -> Complex64,
    ) -> Result<Self, Error> {
        let mut v = LabeledVector::zero(n, m)?;
        let mut labels = vec![Mode::new(1).unwrap(); n as usize];
        for idx in 0..v.amps.len() {
            v.decode(idx, &mut labels);
            v.amps[idx] = f(&labels);
        }
        Ok(v)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    fn encode(&self, labels: &[Mode]) -> usize {
        debug_assert_eq!(labels.len(), self.n as usize);
        let m = self.m as usize;
        labels
            .iter()
            .rev()
            .fold(0usize, |acc, &l| acc * m + (l.get() as usize - 1))
    }

    fn decode(&self, mut idx: usize, labels: &mut [Mode]) {
        let m = self.m as usize;
        for slot in labels.iter_mut() {
            *slot = Mode::new((idx % m) as u32 + 1).unwrap();
            idx /= m;
        }
    }

    pub fn amp(&self, labels: &[Mode]) -> Complex64 {
        self.amps[self.encode(labels)]
    }

    /// Standard Hermitian dot, conjugate-linear in `self`.
    /// Panics when the shapes differ.
    pub fn dot(&self, other: &LabeledVector) -> Complex64 {
        assert_eq!((self.n, self.m), (other.n, other.m), "shape mismatch");
        self.amps
            .iter()
            .zip(&other.amps)
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    pub fn norm(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn scale(&self, c: Complex64) -> LabeledVector {
        LabeledVector {
            n: self.n,
            m: self.m,
            amps: self.amps.iter().map(|a| c * a).collect(),
        }
    }

    pub fn add(&self, other: &LabeledVector) -> LabeledVector {
        assert_eq!((self.n, self.m), (other.n, other.m), "shape mismatch");
        LabeledVector {
            n: self.n,
            m: self.m,
            amps: self
                .amps
                .iter()
                .zip(&other.amps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &LabeledVector) -> LabeledVector {
        assert_eq!((self.n, self.m), (other.n, other.m), "shape mismatch");
        LabeledVector {
            n: self.n,
            m: self.m,
            amps: self
                .amps
                .iter()
                .zip(&other.amps)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn max_abs_diff(&self, other: &LabeledVector) -> f64 {
        self.sub(other)
            .amps
            .iter()
            .map(|a| a.norm())
            .fold(0.0, f64::max)
    }

    /// e_k tensor self: one more leading factor fixed to mode `k`.
    pub fn tensor_prepend(&self, k: Mode) -> Result<LabeledVector, Error> {
        if k.get() > self.m {
            return Err(Error::CutoffExceeded {
                index: k.get(),
                cutoff: self.m,
            });
        }
        let mut out = LabeledVector::zero(self.n + 1, self.m)?;
        let mut labels = vec![Mode::new(1).unwrap(); self.n as usize];
        let mut bigger = vec![Mode::new(1).unwrap(); self.n as usize + 1];
        for idx in 0..self.amps.len() {
            self.decode(idx, &mut labels);
            bigger[0] = k;
            bigger[1..].copy_from_slice(&labels);
            let tgt = out.encode(&bigger);
            out.amps[tgt] = self.amps[idx];
        }
        Ok(out)
    }
}

/// Elementary tensor of the monomial attached to `f`: amplitude 1 at the
/// ascending label tuple, 0 elsewhere.
pub fn labeled_of(f: &OccupationState, m: u32) -> Result<LabeledVector, Error> {
    check_caps(f.total(), m)?;
    if let Some(top) = f.max_mode() {
        if top.get() > m {
            return Err(Error::CutoffExceeded {
                index: top.get(),
                cutoff: m,
            });
        }
    }
    let mut v = LabeledVector::zero(f.total(), m)?;
    let idx = v.encode(&monomial_of(f));
    v.amps[idx] = Complex64::ONE;
    Ok(v)
}

/// The (anti)symmetrizer: (1/n!) sum over all permutations, signed in the
/// Fermi sector. `Sector::Full` is the identity. Idempotent.
pub fn symmetrize(v: &LabeledVector, sector: Sector) -> LabeledVector {
    if sector == Sector::Full {
        return v.clone();
    }
    let n = v.n as usize;
    let mut out = LabeledVector {
        n: v.n,
        m: v.m,
        amps: vec![Complex64::ZERO; v.amps.len()],
    };
    let inv_nfact = 1.0 / factorial(v.n);
    let mut labels = vec![Mode::new(1).unwrap(); n];
    let mut permuted = vec![Mode::new(1).unwrap(); n];
    for idx in 0..v.amps.len() {
        v.decode(idx, &mut labels);
        let mut acc = Complex64::ZERO;
        for_each_permutation(n, |p, sign| {
            for (slot, &src) in p.iter().enumerate() {
                permuted[slot] = labels[src];
            }
            let s = v.amps[v.encode(&permuted)];
            if sector == Sector::Fermi && sign < 0 {
                acc -= s;
            } else {
                acc += s;
            }
        });
        out.amps[idx] = acc * inv_nfact;
    }
    out
}

/// Integer numerators of n! * symmetrize(labeled_of(f)): entry t is the
/// signed number of permutations sending the monomial of `f` to tuple t
/// (times n! for the Full sector, which does not symmetrize).
pub fn symmetrized_numerators(
    f: &OccupationState,
    sector: Sector,
    m: u32,
) -> Result<Vec<i64>, Error> {
    let template = labeled_of(f, m)?;
    let n = f.total();
    let mut nums = vec![0i64; template.amps.len()];
    if sector == Sector::Full {
        let nfact: i64 = (2..=n as i64).product();
        nums[template.encode(&monomial_of(f))] = nfact;
        return Ok(nums);
    }
    let mono = monomial_of(f);
    let mut permuted = mono.clone();
    for_each_permutation(n as usize, |p, sign| {
        for (slot, &src) in p.iter().enumerate() {
            permuted[slot] = mono[src];
        }
        let idx = template.encode(&permuted);
        nums[idx] += if sector == Sector::Fermi && sign < 0 { -1 } else { 1 };
    });
    Ok(nums)
}

/// n!^2 times the Hermitian dot of the two symmetrized labeled vectors,
/// as an exact integer.
pub fn symmetrized_dot_scaled(
    f: &OccupationState,
    g: &OccupationState,
    sector: Sector,
    m: u32,
) -> Result<i64, Error> {
    if f.total() != g.total() {
        check_caps(f.total(), m)?;
        check_caps(g.total(), m)?;
        return Ok(0);
    }
    let nf = symmetrized_numerators(f, sector, m)?;
    let ng = symmetrized_numerators(g, sector, m)?;
    Ok(nf.iter().zip(&ng).map(|(a, b)| a * b).sum())
}

/// Hermitian dot of the symmetrized labeled vectors of `f` and `g`.
///
/// Computed from the exact integer numerators with a single final
/// division, so the value is the correctly rounded dot.
pub fn oracle_inner_product(
    f: &OccupationState,
    g: &OccupationState,
    sector: Sector,
    m: u32,
) -> Result<Complex64, Error> {
    let scaled = symmetrized_dot_scaled(f, g, sector, m)?;
    let nfact = factorial(f.total());
    Ok(Complex64::new(scaled as f64 / (nfact * nfact), 0.0))
}
