//! Ladder operators on occupation states.
//!
//! Bosonic raising and lowering carry the usual sqrt(n+1) / sqrt(n)
//! weights. Fermionic operators carry a sign determined entirely by the
//! occupied modes below the target: adding or removing mode `k` costs
//! (-1)^s with s the number of occupied modes strictly below `k`.

use num_complex::Complex64;

use crate::error::Error;
use crate::state::{Mode, OccupationState, Sector, StateVector};

/// Number of occupied modes strictly below `k`: the exponent of the
/// fermionic reordering sign.
pub fn jw_sign_exponent(f: &OccupationState, k: Mode) -> u32 {
    f.support().take_while(|&j| j < k).count() as u32
}

fn expect_sector(psi: &StateVector, expected: Sector) -> Result<(), Error> {
    if psi.sector() != expected {
        return Err(Error::SectorMismatch {
            expected,
            found: psi.sector(),
        });
    }
    Ok(())
}

/// a+_k: each state gains a quantum in mode `k` with weight sqrt(n_k + 1).
pub fn boson_create(k: Mode, psi: &StateVector) -> Result<StateVector, Error> {
    expect_sector(psi, Sector::Bose)?;
    Ok(StateVector::from_terms(
        Sector::Bose,
        psi.terms().map(|(f, a)| {
            let w = ((f.count(k) + 1) as f64).sqrt();
            (f.raised(k), a * w)
        }),
    ))
}

/// a_k: weight sqrt(n_k); states with mode `k` empty are annihilated.
pub fn boson_annihilate(k: Mode, psi: &StateVector) -> Result<StateVector, Error> {
    expect_sector(psi, Sector::Bose)?;
    Ok(StateVector::from_terms(
        Sector::Bose,
        psi.terms().filter_map(|(f, a)| {
            let n = f.count(k);
            let g = f.lowered(k)?;
            Some((g, a * (n as f64).sqrt()))
        }),
    ))
}

/// c+_k: occupied targets vanish, otherwise the state gains mode `k`
/// with sign (-1)^s, s = occupied modes below `k`.
pub fn fermion_create(k: Mode, psi: &StateVector) -> Result<StateVector, Error> {
    expect_sector(psi, Sector::Fermi)?;
    Ok(StateVector::from_terms(
        Sector::Fermi,
        psi.terms().filter_map(|(f, a)| {
            if f.occupied(k) {
                return None;
            }
            let sign = if jw_sign_exponent(f, k).is_multiple_of(2) { 1.0 } else { -1.0 };
            Some((f.raised(k), a * sign))
        }),
    ))
}

/// c_k: empty targets vanish, otherwise mode `k` is removed with the
/// same sign rule (the count below `k` is unchanged by `k` itself).
pub fn fermion_annihilate(k: Mode, psi: &StateVector) -> Result<StateVector, Error> {
    expect_sector(psi, Sector::Fermi)?;
    Ok(StateVector::from_terms(
        Sector::Fermi,
        psi.terms().filter_map(|(f, a)| {
            let g = f.lowered(k)?;
            let sign = if jw_sign_exponent(f, k).is_multiple_of(2) { 1.0 } else { -1.0 };
            Some((g, a * sign))
        }),
    ))
}

/// One ladder generator, taggable into operator words.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum LadderOp {
    BosonCreate(Mode),
    BosonAnnihilate(Mode),
    FermionCreate(Mode),
    FermionAnnihilate(Mode),
}

impl LadderOp {
    pub fn apply(self, psi: &StateVector) -> Result<StateVector, Error> {
        match self {
            LadderOp::BosonCreate(k) => boson_create(k, psi),
            LadderOp::BosonAnnihilate(k) => boson_annihilate(k, psi),
            LadderOp::FermionCreate(k) => fermion_create(k, psi),
            LadderOp::FermionAnnihilate(k) => fermion_annihilate(k, psi),
        }
    }

    pub fn adjoint(self) -> LadderOp {
        match self {
            LadderOp::BosonCreate(k) => LadderOp::BosonAnnihilate(k),
            LadderOp::BosonAnnihilate(k) => LadderOp::BosonCreate(k),
            LadderOp::FermionCreate(k) => LadderOp::FermionAnnihilate(k),
            LadderOp::FermionAnnihilate(k) => LadderOp::FermionCreate(k),
        }
    }
}

/// Scaled product of ladder generators; factors apply right to left.
#[derive(Clone, PartialEq, Debug)]
pub struct OpWord {
    pub scalar: Complex64,
    pub factors: Vec<LadderOp>,
}

impl OpWord {
    pub fn one(op: LadderOp) -> Self {
        OpWord {
            scalar: Complex64::ONE,
            factors: vec![op],
        }
    }
}

pub fn apply_word(word: &OpWord, psi: &StateVector) -> Result<StateVector, Error> {
    let mut out = psi.clone();
    for op in word.factors.iter().rev() {
        out = op.apply(&out)?;
    }
    Ok(out.scale(word.scalar))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Bracket {
    Commutator,
    Anticommutator,
}

/// (AB -+ BA) psi: commutator with `Bracket::Commutator`, anticommutator
/// with `Bracket::Anticommutator`.
pub fn commutator(
    a: &OpWord,
    b: &OpWord,
    psi: &StateVector,
    bracket: Bracket,
) -> Result<StateVector, Error> {
    let ab = apply_word(a, &apply_word(b, psi)?)?;
    let ba = apply_word(b, &apply_word(a, psi)?)?;
    match bracket {
        Bracket::Commutator => ab.sub(&ba),
        Bracket::Anticommutator => ab.add(&ba),
    }
}

/// Mean total quantum number `<psi| sum_{k<=cutoff} n_k |psi> / <psi|psi>`.
///
/// The number operator is diagonal in the occupation basis, so the mean
/// is the amplitude-weighted average of the term totals. Errors on the
/// zero vector and when any term occupies a mode above the cutoff.
pub fn number_expectation(psi: &StateVector, cutoff: u32) -> Result<f64, Error> {
    if psi.is_zero() {
        return Err(Error::ZeroState);
    }
    let mut weighted = 0.0;
    let mut total_weight = 0.0;
    for (f, a) in psi.terms() {
        if let Some(m) = f.max_mode() {
            if m.get() > cutoff {
                return Err(Error::CutoffExceeded {
                    index: m.get(),
                    cutoff,
                });
            }
        }
        let w = a.norm_sqr();
        weighted += w * f.total() as f64;
        total_weight += w;
    }
    Ok(weighted / total_weight)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{fock_inner_product, norm};
    use crate::state::mode;

    fn st(pairs: &[(u32, u32)]) -> OccupationState {
        OccupationState::new(pairs).unwrap()
    }

    fn bose(pairs: &[(u32, u32)]) -> StateVector {
        StateVector::embed(st(pairs), Sector::Bose)
    }

    fn fermi(pairs: &[(u32, u32)]) -> StateVector {
        StateVector::embed(st(pairs), Sector::Fermi)
    }

    #[test]
    fn sign_exponent_counts_occupied_modes_below() {
        let f = st(&[(3, 1), (5, 1), (7, 1), (8, 1)]);
        assert_eq!(jw_sign_exponent(&f, mode(6)), 2);
        assert_eq!(jw_sign_exponent(&f, mode(1)), 0);
        assert_eq!(jw_sign_exponent(&f, mode(9)), 4);
        // Presence of k itself does not change the exponent.
        assert_eq!(jw_sign_exponent(&f, mode(5)), 1);
    }

    #[test]
    fn boson_create_weights() {
        let v = boson_create(mode(1), &bose(&[])).unwrap();
        assert_eq!(v.amplitude(&st(&[(1, 1)])), Complex64::ONE);
        let w = boson_create(mode(1), &v).unwrap();
        assert_eq!(w.amplitude(&st(&[(1, 2)])), Complex64::new(2f64.sqrt(), 0.0));
    }

    #[test]
    fn boson_annihilate_weights_and_vacuum_kill() {
        let v = boson_annihilate(mode(1), &bose(&[(1, 2)])).unwrap();
        assert_eq!(v.amplitude(&st(&[(1, 1)])), Complex64::new(2f64.sqrt(), 0.0));
        assert!(boson_annihilate(mode(1), &bose(&[])).unwrap().is_zero());
        assert!(boson_annihilate(mode(2), &bose(&[(1, 1)])).unwrap().is_zero());
    }

    #[test]
    fn fermion_create_signs() {
        // Adding mode 6 below two occupied modes of {3,5,7,8}: sign +1
        // (exponent 2); adding mode 9 above all four: sign +1 (exponent 4);
        // adding mode 4: sign -1 (exponent 1).
        let f = fermi(&[(3, 1), (5, 1), (7, 1), (8, 1)]);
        let v = fermion_create(mode(6), &f).unwrap();
        assert_eq!(
            v.amplitude(&st(&[(3, 1), (5, 1), (6, 1), (7, 1), (8, 1)])),
            Complex64::ONE
        );
        let v = fermion_create(mode(4), &f).unwrap();
        assert_eq!(
            v.amplitude(&st(&[(3, 1), (4, 1), (5, 1), (7, 1), (8, 1)])),
            -Complex64::ONE
        );
    }

    #[test]
    fn fermion_create_on_occupied_vanishes() {
        let f = fermi(&[(3, 1), (5, 1)]);
        assert!(fermion_create(mode(3), &f).unwrap().is_zero());
    }

    #[test]
    fn fermion_annihilate_signs_and_vacuum() {
        let f = fermi(&[(3, 1), (5, 1), (7, 1)]);
        let v = fermion_annihilate(mode(5), &f).unwrap();
        assert_eq!(v.amplitude(&st(&[(3, 1), (7, 1)])), -Complex64::ONE);
        assert!(fermion_annihilate(mode(4), &f).unwrap().is_zero());
        assert!(fermion_annihilate(mode(1), &fermi(&[])).unwrap().is_zero());
    }

    #[test]
    fn sector_mismatch_is_rejected() {
        assert!(matches!(
            boson_create(mode(1), &fermi(&[])),
            Err(Error::SectorMismatch { .. })
        ));
        assert!(matches!(
            fermion_annihilate(mode(1), &bose(&[])),
            Err(Error::SectorMismatch { .. })
        ));
        let full = StateVector::embed(st(&[]), Sector::Full);
        assert!(matches!(
            boson_create(mode(1), &full),
            Err(Error::SectorMismatch { .. })
        ));
    }

    #[test]
    fn creation_annihilation_adjointness_spot_check() {
        // <a+_k f, g> == <f, a_k g> on a doubly occupied mode.
        let f = bose(&[(1, 1)]);
        let g = bose(&[(1, 2)]);
        let lhs = fock_inner_product(&boson_create(mode(1), &f).unwrap(), &g).unwrap();
        let rhs = fock_inner_product(&f, &boson_annihilate(mode(1), &g).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn word_application_is_right_to_left() {
        let word = OpWord {
            scalar: Complex64::new(0.0, 2.0),
            factors: vec![
                LadderOp::BosonAnnihilate(mode(1)),
                LadderOp::BosonCreate(mode(1)),
            ],
        };
        // a_1 a+_1 |0> = |0>, scaled by 2i.
        let v = apply_word(&word, &bose(&[])).unwrap();
        assert_eq!(v.amplitude(&st(&[])), Complex64::new(0.0, 2.0));
    }

    #[test]
    fn ccr_on_a_state() {
        let psi = bose(&[(1, 3), (2, 1)]);
        let a1 = OpWord::one(LadderOp::BosonAnnihilate(mode(1)));
        let c1 = OpWord::one(LadderOp::BosonCreate(mode(1)));
        let c2 = OpWord::one(LadderOp::BosonCreate(mode(2)));

        let same = commutator(&a1, &c1, &psi, Bracket::Commutator).unwrap();
        let dev = norm(&same.sub(&psi).unwrap());
        assert!(dev < 1e-12, "[a_1, a+_1] deviates by {dev}");

        let cross = commutator(&a1, &c2, &psi, Bracket::Commutator).unwrap();
        assert!(norm(&cross) < 1e-12);
    }

    #[test]
    fn car_on_a_state_is_exact() {
        let psi = fermi(&[(2, 1)]);
        let c1 = OpWord::one(LadderOp::FermionCreate(mode(1)));
        let a1 = OpWord::one(LadderOp::FermionAnnihilate(mode(1)));
        let anti = commutator(&a1, &c1, &psi, Bracket::Anticommutator).unwrap();
        assert_eq!(anti, psi);

        let cc = commutator(&c1, &c1, &psi, Bracket::Anticommutator).unwrap();
        assert!(cc.is_zero());
    }

    #[test]
    fn number_expectation_basics() {
        assert_eq!(number_expectation(&bose(&[(1, 2), (3, 1)]), 3).unwrap(), 3.0);
        assert_eq!(
            number_expectation(&StateVector::embed(st(&[(1, 1)]), Sector::Full), 1).unwrap(),
            1.0
        );
        assert!(matches!(
            number_expectation(&StateVector::zero(Sector::Bose), 3),
            Err(Error::ZeroState)
        ));
        assert!(matches!(
            number_expectation(&bose(&[(4, 1)]), 3),
            Err(Error::CutoffExceeded { index: 4, cutoff: 3 })
        ));
    }

    #[test]
    fn number_expectation_convex_combination() {
        let v = StateVector::from_terms(
            Sector::Bose,
            [
                (st(&[(1, 1)]), Complex64::new(1.0, 0.0)),
                (st(&[(1, 3)]), Complex64::new(0.0, 2.0)),
            ],
        );
        // Weights 1 and 4 over totals 1 and 3: (1*1 + 4*3) / 5.
        let got = number_expectation(&v, 1).unwrap();
        assert!((got - 13.0 / 5.0).abs() < 1e-12);
    }
}
