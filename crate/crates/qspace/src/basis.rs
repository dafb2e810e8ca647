//! Mode-basis changes at a finite cutoff: field operators, discrete
//! position states, amplitude extraction, and the permanent/determinant
//! kernels behind the closed-form amplitudes.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{count_factorial_product, factorial, fock_inner_product, monomial_of};
use crate::error::Error;
use crate::ladder::{boson_create, fermion_create};
use crate::state::{Mode, OccupationState, Sector, StateVector};

/// Maximum allowed deviation from unitarity, measured entrywise on the
/// row Gram matrix.
pub const UNITARITY_TOL: f64 = 1e-10;

/// Largest matrix the permanent kernel accepts; the subset sum has 2^n
/// terms.
pub const PERMANENT_MAX_N: usize = 12;

/// A unitary over the first `m` modes. Entry `u[i][x]` is the mode
/// function u_i evaluated at discrete point x (both 1-based outside,
/// 0-based in storage). Rows are orthonormal:
/// sum_x u[i][x] * conj(u[j][x]) = delta_ij within `UNITARITY_TOL`.
#[derive(Clone, Debug)]
pub struct BasisChange {
    m: u32,
    u: Vec<Vec<Complex64>>,
}

impl BasisChange {
    pub fn new(u: Vec<Vec<Complex64>>) -> Result<Self, Error> {
        let n = u.len();
        for (row, r) in u.iter().enumerate() {
            if r.len() != n {
                return Err(Error::ShapeError {
                    row,
                    len: r.len(),
                    n,
                });
            }
        }
        let mut dev = 0.0f64;
        for i in 0..n {
            for j in 0..n {
                let s: Complex64 = u[i].iter().zip(&u[j]).map(|(a, b)| a * b.conj()).sum();
                let target = if i == j { Complex64::ONE } else { Complex64::ZERO };
                dev = dev.max((s - target).norm());
            }
        }
        if dev > UNITARITY_TOL {
            return Err(Error::NotUnitary {
                dev,
                tol: UNITARITY_TOL,
            });
        }
        Ok(BasisChange { m: n as u32, u })
    }

    pub fn identity(m: u32) -> Self {
        let n = m as usize;
        let u = (0..n)
            .map(|i| {
                (0..n)
                    .map(|x| {
                        if i == x {
                            Complex64::ONE
                        } else {
                            Complex64::ZERO
                        }
                    })
                    .collect()
            })
            .collect();
        BasisChange { m, u }
    }

    /// The discrete Fourier matrix: u[j][k] = exp(2 pi i j k / m) / sqrt(m).
    pub fn dft(m: u32) -> Self {
        let n = m as usize;
        let scale = 1.0 / (m as f64).sqrt();
        let u = (0..n)
            .map(|j| {
                (0..n)
                    .map(|k| {
                        let th = std::f64::consts::TAU * (j * k) as f64 / m as f64;
                        Complex64::new(th.cos(), th.sin()) * scale
                    })
                    .collect()
            })
            .collect();
        BasisChange { m, u }
    }

    /// A seeded pseudo-random unitary: complex Gaussian rows, then
    /// modified Gram-Schmidt. Deterministic for a fixed seed.
    pub fn random(m: u32, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = m as usize;
        let mut rows: Vec<Vec<Complex64>> = (0..n)
            .map(|_| {
                (0..n)
                    .map(|_| {
                        let u1: f64 = rng.random();
                        let u2: f64 = rng.random();
                        let r = (-2.0 * (1.0 - u1).ln()).sqrt();
                        let th = std::f64::consts::TAU * u2;
                        Complex64::new(r * th.cos(), r * th.sin())
                    })
                    .collect()
            })
            .collect();
        for i in 0..n {
            let (done, rest) = rows.split_at_mut(i);
            let ri = &mut rest[0];
            for rj in done.iter() {
                let proj: Complex64 = rj.iter().zip(ri.iter()).map(|(a, b)| a.conj() * b).sum();
                for (a, b) in ri.iter_mut().zip(rj) {
                    *a -= proj * b;
                }
            }
            let nrm = ri.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
            for a in ri.iter_mut() {
                *a /= nrm;
            }
        }
        BasisChange { m, u: rows }
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    /// u_i(x). Both arguments must be within the cutoff.
    pub fn coeff(&self, i: Mode, x: Mode) -> Complex64 {
        assert!(i.get() <= self.m && x.get() <= self.m, "index beyond cutoff");
        self.u[i.get() as usize - 1][x.get() as usize - 1]
    }

    pub fn rows(&self) -> &[Vec<Complex64>] {
        &self.u
    }

    fn check_point(&self, x: Mode) -> Result<(), Error> {
        if x.get() > self.m {
            return Err(Error::CutoffExceeded {
                index: x.get(),
                cutoff: self.m,
            });
        }
        Ok(())
    }

    fn sector_create(
        &self,
        sector: Sector,
        k: Mode,
        psi: &StateVector,
    ) -> Result<StateVector, Error> {
        match sector {
            Sector::Bose => boson_create(k, psi),
            Sector::Fermi => fermion_create(k, psi),
            Sector::Full => Err(Error::FieldOnFull),
        }
    }

    /// The creation field at point x: sum_{i <= m} u_i(x) * create_i.
    pub fn field_create(&self, x: Mode, psi: &StateVector) -> Result<StateVector, Error> {
        if psi.sector() == Sector::Full {
            return Err(Error::FieldOnFull);
        }
        self.check_point(x)?;
        let mut out = StateVector::zero(psi.sector());
        for i in 1..=self.m {
            let i = Mode::new(i).unwrap();
            let raised = self.sector_create(psi.sector(), i, psi)?;
            out = out.add(&raised.scale(self.coeff(i, x)))?;
        }
        Ok(out)
    }

    /// The annihilation field at point x, the literal adjoint of
    /// `field_create`: sum_{i <= m} conj(u_i(x)) * annihilate_i.
    pub fn field_annihilate(&self, x: Mode, psi: &StateVector) -> Result<StateVector, Error> {
        self.check_point(x)?;
        let mut out = StateVector::zero(psi.sector());
        for i in 1..=self.m {
            let i = Mode::new(i).unwrap();
            let lowered = match psi.sector() {
                Sector::Bose => crate::ladder::boson_annihilate(i, psi)?,
                Sector::Fermi => crate::ladder::fermion_annihilate(i, psi)?,
                Sector::Full => return Err(Error::FieldOnFull),
            };
            out = out.add(&lowered.scale(self.coeff(i, x).conj()))?;
        }
        Ok(out)
    }

    /// The N-point position-like state, normalized by 1/sqrt(N!).
    ///
    /// The first point owns the outermost creation operator: the state is
    /// (1/sqrt(N!)) field_create(x_1) ... field_create(x_N) |vacuum>, so
    /// its amplitude on an occupation state f is det(A)/sqrt(N!) in Fermi
    /// and perm(A)/sqrt(N! prod n_i!) in Bose, with A[r][c] = u_{m_r}(x_c)
    /// over the ascending monomial m of f.
    pub fn position_state(&self, points: &[Mode], sector: Sector) -> Result<StateVector, Error> {
        let mut psi = StateVector::embed(OccupationState::vacuum(), sector);
        for &x in points.iter().rev() {
            psi = self.field_create(x, &psi)?;
        }
        let scale = 1.0 / factorial(points.len() as u32).sqrt();
        Ok(psi.scale(scale.into()))
    }

    /// <f | position_state(points)> under the Fock product.
    pub fn amplitude(
        &self,
        f: &OccupationState,
        points: &[Mode],
        sector: Sector,
    ) -> Result<Complex64, Error> {
        let pos = self.position_state(points, sector)?;
        fock_inner_product(&StateVector::embed(f.clone(), sector), &pos)
    }

    /// The closed form of `amplitude`: permanent or determinant of the
    /// point-evaluation matrix, with the sector's normalization.
    pub fn amplitude_closed_form(
        &self,
        f: &OccupationState,
        points: &[Mode],
        sector: Sector,
    ) -> Result<Complex64, Error> {
        if sector == Sector::Full {
            return Err(Error::FieldOnFull);
        }
        for &x in points {
            self.check_point(x)?;
        }
        if let Some(top) = f.max_mode() {
            if top.get() > self.m {
                return Err(Error::CutoffExceeded {
                    index: top.get(),
                    cutoff: self.m,
                });
            }
        }
        let n = points.len();
        if f.total() as usize != n {
            return Ok(Complex64::ZERO);
        }
        let mono = monomial_of(f);
        let a: Vec<Vec<Complex64>> = mono
            .iter()
            .map(|&mr| points.iter().map(|&xc| self.coeff(mr, xc)).collect())
            .collect();
        let nfact = factorial(n as u32);
        match sector {
            Sector::Bose => {
                let p = permanent(&a)?;
                Ok(p / (nfact * count_factorial_product(f)).sqrt())
            }
            Sector::Fermi => Ok(determinant(&a)? / nfact.sqrt()),
            Sector::Full => unreachable!(),
        }
    }
}

fn check_square(a: &[Vec<Complex64>]) -> Result<usize, Error> {
    let n = a.len();
    for (row, r) in a.iter().enumerate() {
        if r.len() != n {
            return Err(Error::ShapeError {
                row,
                len: r.len(),
                n,
            });
        }
    }
    Ok(n)
}

/// Subsets are walked in Gray-code order inside fixed-size chunks, and
/// chunk partial sums are combined in chunk order, so the parallel and
/// sequential permanents are bitwise identical.
const RYSER_CHUNK: u64 = 1 << 11;

/// One chunk of the Ryser subset sum: subset codes `start..end`,
/// 1 <= start < end <= 2^n.
fn ryser_chunk(a: &[Vec<Complex64>], start: u64, end: u64) -> Complex64 {
    let n = a.len();
    let g0 = start ^ (start >> 1);
    let mut rows = vec![Complex64::ZERO; n];
    for (row, ai) in rows.iter_mut().zip(a) {
        for (j, v) in ai.iter().enumerate() {
            if g0 >> j & 1 == 1 {
                *row += v;
            }
        }
    }
    // Term sign is (-1)^(n - |S|).
    let mut sgn = if (n as u32 - g0.count_ones()).is_multiple_of(2) {
        1.0
    } else {
        -1.0
    };
    let mut acc = rows.iter().product::<Complex64>() * sgn;
    for t in start + 1..end {
        let j = t.trailing_zeros() as usize;
        let g = t ^ (t >> 1);
        if g >> j & 1 == 1 {
            for (i, row) in rows.iter_mut().enumerate() {
                *row += a[i][j];
            }
        } else {
            for (i, row) in rows.iter_mut().enumerate() {
                *row -= a[i][j];
            }
        }
        sgn = -sgn;
        acc += rows.iter().product::<Complex64>() * sgn;
    }
    acc
}

fn ryser_starts(n: usize) -> (u64, Vec<u64>) {
    let total = 1u64 << n;
    let starts = (1..total).step_by(RYSER_CHUNK as usize).collect();
    (total, starts)
}

fn permanent_guard(a: &[Vec<Complex64>]) -> Result<usize, Error> {
    let n = check_square(a)?;
    if n > PERMANENT_MAX_N {
        return Err(Error::TooLarge {
            n,
            max: PERMANENT_MAX_N,
        });
    }
    Ok(n)
}

/// Permanent by Ryser's subset sum, sequential reference form.
pub fn permanent_seq(a: &[Vec<Complex64>]) -> Result<Complex64, Error> {
    let n = permanent_guard(a)?;
    if n == 0 {
        return Ok(Complex64::ONE);
    }
    let (total, starts) = ryser_starts(n);
    Ok(starts
        .iter()
        .map(|&s| ryser_chunk(a, s, (s + RYSER_CHUNK).min(total)))
        .sum())
}

/// Permanent by Ryser's subset sum; chunks run on the rayon pool and the
/// partials are summed in chunk order, matching `permanent_seq` bit for
/// bit.
#[cfg(feature = "parallel")]
pub fn permanent(a: &[Vec<Complex64>]) -> Result<Complex64, Error> {
    use rayon::prelude::*;
    let n = permanent_guard(a)?;
    if n == 0 {
        return Ok(Complex64::ONE);
    }
    let (total, starts) = ryser_starts(n);
    let partials: Vec<Complex64> = starts
        .par_iter()
        .map(|&s| ryser_chunk(a, s, (s + RYSER_CHUNK).min(total)))
        .collect();
    Ok(partials.iter().sum())
}

#[cfg(not(feature = "parallel"))]
pub fn permanent(a: &[Vec<Complex64>]) -> Result<Complex64, Error> {
    permanent_seq(a)
}

/// Determinant by LU with partial pivoting.
pub fn determinant(a: &[Vec<Complex64>]) -> Result<Complex64, Error> {
    let n = check_square(a)?;
    if n == 0 {
        return Ok(Complex64::ONE);
    }
    let mut m = a.to_vec();
    let mut det = Complex64::ONE;
    for col in 0..n {
        let piv = (col..n)
            .max_by(|&r, &s| m[r][col].norm().total_cmp(&m[s][col].norm()))
            .unwrap();
        if m[piv][col] == Complex64::ZERO {
            return Ok(Complex64::ZERO);
        }
        if piv != col {
            m.swap(piv, col);
            det = -det;
        }
        let p = m[col][col];
        det *= p;
        let (top, below) = m.split_at_mut(col + 1);
        let pivot_row = &top[col];
        for row in below.iter_mut() {
            let factor = row[col] / p;
            if factor != Complex64::ZERO {
                for (a, b) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                    *a -= b * factor;
                }
            }
        }
    }
    Ok(det)
}
