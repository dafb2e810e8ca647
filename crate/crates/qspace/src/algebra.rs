//! The monomial map into labeled tensor space and the scalar products
//! it induces on occupation states.
//!
//! Two conventions coexist on purpose. `algebra_inner_product` carries the
//! combinatorial normalization the tensor construction induces (permanent
//! or determinant of the Gram matrix of the two monomials, so a doubly
//! occupied bosonic mode has squared length 2, not 1). `fock_inner_product`
//! is the orthonormal-basis product scripts usually want: basis states are
//! unit length and mutually orthogonal. The two differ per basis state by
//! sqrt(prod n_i!(f) * prod n_i!(g)) in the Bose sector.

use num_complex::Complex64;

use crate::basis::{determinant, permanent, PERMANENT_MAX_N};
use crate::error::Error;
use crate::state::{Mode, OccupationState, Sector, StateVector};

/// Ascending factor list of the monomial attached to a state: mode `k`
/// appears `count(k)` times.
pub fn monomial_of(f: &OccupationState) -> Vec<Mode> {
    let mut out = Vec::with_capacity(f.total() as usize);
    for (k, n) in f.iter() {
        for _ in 0..n {
            out.push(k);
        }
    }
    out
}

pub(crate) fn factorial(n: u32) -> f64 {
    (2..=n).map(|j| j as f64).product()
}

/// Product of factorials of the occupation counts, as f64.
pub fn count_factorial_product(f: &OccupationState) -> f64 {
    let mut acc = 1.0;
    for (_, n) in f.iter() {
        for j in 2..=n {
            acc *= j as f64;
        }
    }
    acc
}

fn gram(f: &OccupationState, g: &OccupationState) -> Vec<Vec<Complex64>> {
    let a = monomial_of(f);
    let b = monomial_of(g);
    a.iter()
        .map(|&x| {
            b.iter()
                .map(|&y| {
                    if x == y {
                        Complex64::ONE
                    } else {
                        Complex64::ZERO
                    }
                })
                .collect()
        })
        .collect()
}

/// Scalar product induced by the labeled tensor construction.
///
/// States with different totals are orthogonal. In the Full sector the
/// monomials are compared directly; in Bose the value is the permanent of
/// the Gram matrix of the two factor lists (prod n_i! when f = g, else 0);
/// in Fermi it is the determinant, which vanishes whenever any count
/// reaches 2.
pub fn algebra_inner_product(
    f: &OccupationState,
    g: &OccupationState,
    sector: Sector,
) -> Complex64 {
    if f.total() != g.total() {
        return Complex64::ZERO;
    }
    match sector {
        Sector::Full => {
            if f == g {
                Complex64::ONE
            } else {
                Complex64::ZERO
            }
        }
        Sector::Bose => {
            let n = f.total() as usize;
            if n <= PERMANENT_MAX_N {
                permanent(&gram(f, g)).expect("gram matrix is square and within the permanent cap")
            } else if f == g {
                // The Gram matrix of two equal sorted monomials is block
                // diagonal with all-ones blocks; its permanent is exactly
                // the product of count factorials.
                Complex64::new(count_factorial_product(f), 0.0)
            } else {
                Complex64::ZERO
            }
        }
        Sector::Fermi => {
            determinant(&gram(f, g)).expect("gram matrix is square")
        }
    }
}

/// Orthonormal-basis product: conjugate-linear in the first argument,
/// `<f|g> = delta_{f,g}` on basis states.
pub fn fock_inner_product(a: &StateVector, b: &StateVector) -> Result<Complex64, Error> {
    if a.sector() != b.sector() {
        return Err(Error::SectorMismatch {
            expected: a.sector(),
            found: b.sector(),
        });
    }
    let mut acc = Complex64::ZERO;
    // Iterate the smaller support.
    if a.num_terms() <= b.num_terms() {
        for (f, amp) in a.terms() {
            acc += amp.conj() * b.amplitude(f);
        }
    } else {
        for (f, amp) in b.terms() {
            acc += a.amplitude(f).conj() * amp;
        }
    }
    Ok(acc)
}

/// Euclidean norm in the orthonormal convention.
pub fn norm(a: &StateVector) -> f64 {
    a.terms()
        .map(|(_, amp)| amp.norm_sqr())
        .sum::<f64>()
        .sqrt()
}
