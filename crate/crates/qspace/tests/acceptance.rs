//! End-to-end acceptance checks, one per shipped guarantee. Each test
//! prints a single pass/fail line (visible with `--nocapture`).
//!
//! Closed forms are recomputed here by independent permutation sums
//! rather than through the library kernels they certify.

use std::process::Command;
use std::time::{Duration, Instant};

use num_complex::Complex64;

use qspace::algebra::{algebra_inner_product, fock_inner_product};
use qspace::basis::BasisChange;
use qspace::checks::{self, bose_states, fermi_states};
use qspace::ladder::{fermion_create, jw_sign_exponent, number_expectation, LadderOp};
use qspace::oracle::{oracle_inner_product, symmetrized_dot_scaled};
use qspace::qset::{AtomKind, QSet};
use qspace::state::{mode, Mode, OccupationState, Sector, StateVector};

fn report(n: u32, name: &str, pass: bool) {
    println!(
        "criterion {n:2} [{}] {name}",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass, "criterion {n} failed: {name}");
}

/// Signed permutation sum: permanent with `signed = false`, determinant
/// with `signed = true`. Exponential on purpose; this is the referee.
fn perm_sum(a: &[Vec<Complex64>], signed: bool) -> Complex64 {
    fn go(
        a: &[Vec<Complex64>],
        used: &mut Vec<bool>,
        row: usize,
        sign: f64,
        signed: bool,
    ) -> Complex64 {
        let n = a.len();
        if row == n {
            return Complex64::new(sign, 0.0);
        }
        let mut acc = Complex64::ZERO;
        for col in 0..n {
            if used[col] {
                continue;
            }
            used[col] = true;
            // Free columns below `col` are the inversions this choice adds.
            let parity = if signed && (0..col).filter(|&c| !used[c]).count() % 2 == 1 {
                -1.0
            } else {
                1.0
            };
            acc += a[row][col] * go(a, used, row + 1, sign * parity, signed);
            used[col] = false;
        }
        acc
    }
    let mut used = vec![false; a.len()];
    go(a, &mut used, 0, 1.0, signed)
}

fn ascending_monomial(f: &OccupationState) -> Vec<Mode> {
    let mut out = Vec::new();
    for (k, n) in f.iter() {
        for _ in 0..n {
            out.push(k);
        }
    }
    out
}

fn point_matrix(b: &BasisChange, f: &OccupationState, points: &[Mode]) -> Vec<Vec<Complex64>> {
    ascending_monomial(f)
        .iter()
        .map(|&mr| points.iter().map(|&xc| b.coeff(mr, xc)).collect())
        .collect()
}

fn count_factorials(f: &OccupationState) -> f64 {
    f.iter()
        .map(|(_, n)| (1..=n).map(|j| j as f64).product::<f64>())
        .product()
}

#[test]
fn criterion_01_ccr_suite() {
    let t0 = Instant::now();
    let rep = checks::ccr_report(5, 4, 1e-12);
    let elapsed = t0.elapsed();
    let residual_ok = rep
        .relations
        .iter()
        .all(|r| r.max_residual < 1e-12 && r.cases > 0);
    report(
        1,
        "CCR suite, modes <= 5, totals <= 4, residual < 1e-12, < 5 s",
        rep.passed() && residual_ok && elapsed < Duration::from_secs(5),
    );
}

#[test]
fn criterion_02_car_suite() {
    let t0 = Instant::now();
    let rep = checks::car_report(6);
    let elapsed = t0.elapsed();
    let exact = rep
        .relations
        .iter()
        .all(|r| r.max_residual == 0.0 && r.cases == 64 * 36);
    report(
        2,
        "CAR suite, modes <= 6, all 64 basis states, exactly zero residual, < 1 s",
        rep.passed() && exact && elapsed < Duration::from_secs(1),
    );
}

#[test]
fn criterion_03_sign_rule_fixture() {
    let f = OccupationState::new(&[(3, 1), (5, 1), (7, 1), (8, 1)]).unwrap();
    let pass = jw_sign_exponent(&f, mode(6)) == 2
        && jw_sign_exponent(&f, mode(1)) == 0
        && jw_sign_exponent(&f, mode(9)) == 4;
    report(3, "sign exponent on {3,5,7,8} is 2, 0, 4 at k = 6, 1, 9", pass);
}

#[test]
fn criterion_04_two_particle_amplitudes() {
    let b = BasisChange::random(4, 0x2026_0818);
    let t0 = Instant::now();
    let inv_sqrt2 = std::f64::consts::FRAC_1_SQRT_2;
    let mut worst = 0.0f64;
    for i in 1..=4u32 {
        for j in (i + 1)..=4u32 {
            let f = OccupationState::new(&[(i, 1), (j, 1)]).unwrap();
            for x in 1..=4u32 {
                for y in 1..=4u32 {
                    let (x, y) = (mode(x), mode(y));
                    let (ui, uj) = (mode(i), mode(j));
                    let sym = b.coeff(ui, x) * b.coeff(uj, y) + b.coeff(uj, x) * b.coeff(ui, y);
                    let anti = b.coeff(ui, x) * b.coeff(uj, y) - b.coeff(uj, x) * b.coeff(ui, y);
                    let got_b = b.amplitude(&f, &[x, y], Sector::Bose).unwrap();
                    let got_f = b.amplitude(&f, &[x, y], Sector::Fermi).unwrap();
                    worst = worst
                        .max((got_b - sym * inv_sqrt2).norm())
                        .max((got_f - anti * inv_sqrt2).norm());
                }
            }
        }
    }
    let elapsed = t0.elapsed();
    report(
        4,
        "two-particle amplitudes match (u_i u_j +/- u_j u_i)/sqrt(2), < 1 s",
        worst <= 1e-12 && elapsed < Duration::from_secs(1),
    );
}

#[test]
fn criterion_05_three_particle_closed_forms() {
    let b = BasisChange::random(4, 0x51ed);
    let sqrt6 = 6.0f64.sqrt();
    let mut worst = 0.0f64;
    let mut cases = 0usize;
    let triples: Vec<[Mode; 3]> = (1..=4u32)
        .flat_map(|x| {
            (1..=4u32).flat_map(move |y| (1..=4u32).map(move |z| [mode(x), mode(y), mode(z)]))
        })
        .collect();
    for f in bose_states(4, 3).into_iter().filter(|f| f.total() == 3) {
        for pts in &triples {
            let a = point_matrix(&b, &f, pts);
            let perm = perm_sum(&a, false);
            let expected = perm / (6.0 * count_factorials(&f)).sqrt();
            let got = b.amplitude(&f, pts, Sector::Bose).unwrap();
            worst = worst.max((got - expected).norm());
            cases += 1;
        }
    }
    for f in fermi_states(4).into_iter().filter(|f| f.total() == 3) {
        for pts in &triples {
            let a = point_matrix(&b, &f, pts);
            let det = perm_sum(&a, true);
            let expected = det / sqrt6;
            let got = b.amplitude(&f, pts, Sector::Fermi).unwrap();
            worst = worst.max((got - expected).norm());
            cases += 1;
        }
    }
    report(
        5,
        "N=3 amplitudes equal the independent permutation-sum closed forms",
        worst <= 1e-12 && cases == (20 + 4) * 64,
    );
}

#[test]
fn criterion_06_oracle_equivalence() {
    let t0 = Instant::now();
    let mut pass = checks::oracle_compare_report(4, 4).is_ok_and(|r| r.passed());
    for &sector in &[Sector::Full, Sector::Bose, Sector::Fermi] {
        let states: Vec<OccupationState> = match sector {
            Sector::Fermi => fermi_states(4),
            _ => bose_states(4, 4),
        };
        for n in 0..=4u32 {
            let level: Vec<&OccupationState> =
                states.iter().filter(|f| f.total() == n).collect();
            let nfact: i64 = (2..=n as i64).product::<i64>().max(1);
            let mut ratio: Option<f64> = None;
            for f in &level {
                for g in &level {
                    let alg = algebra_inner_product(f, g, sector);
                    let orc = oracle_inner_product(f, g, sector, 4).unwrap();
                    pass &= alg.im == 0.0 && alg.re.fract() == 0.0 && orc.im == 0.0;
                    match sector {
                        Sector::Full => pass &= alg.re == orc.re,
                        Sector::Bose => pass &= (alg.re - nfact as f64 * orc.re).abs() <= 1e-12,
                        Sector::Fermi => {
                            // exact integer identity, no float rounding
                            let scaled = symmetrized_dot_scaled(f, g, sector, 4).unwrap();
                            pass &= scaled == alg.re as i64 * nfact;
                        }
                    }
                    if orc.re != 0.0 {
                        let r = alg.re / orc.re;
                        match ratio {
                            None => ratio = Some(r),
                            Some(r0) => pass &= (r - r0).abs() <= 1e-12 * r0.abs().max(1.0),
                        }
                    }
                }
            }
        }
    }
    let elapsed = t0.elapsed();
    report(
        6,
        "algebra product = n! * oracle product (Fermi exact), constant ratio per n, < 30 s",
        pass && elapsed < Duration::from_secs(30),
    );
}

#[test]
fn criterion_07_null_norm_quotient() {
    let mut pass = true;
    for f in bose_states(3, 4) {
        if f.max_count() < 2 {
            continue;
        }
        let nrm = algebra_inner_product(&f, &f, Sector::Fermi);
        pass &= nrm == Complex64::ZERO;
        pass &= StateVector::embed(f.clone(), Sector::Fermi).is_zero();
    }
    for f in fermi_states(4) {
        for k in f.support().collect::<Vec<_>>() {
            let psi = StateVector::embed(f.clone(), Sector::Fermi);
            pass &= fermion_create(k, &psi).unwrap().is_zero();
        }
    }
    report(
        7,
        "repeated-mode Fermi states are null and embed to zero; creation on occupied vanishes",
        pass,
    );
}

#[test]
fn criterion_08_number_operator() {
    let mut pass = true;
    for f in bose_states(3, 8) {
        let psi = StateVector::embed(f.clone(), Sector::Bose);
        pass &= number_expectation(&psi, 3).unwrap() == f.total() as f64;
    }
    for f in fermi_states(8) {
        let psi = StateVector::embed(f.clone(), Sector::Fermi);
        pass &= number_expectation(&psi, 8).unwrap() == f.total() as f64;
    }
    // Mixed superposition: 0.36 weight on n=1, 0.64 on n=3.
    let psi = StateVector::from_terms(
        Sector::Bose,
        [
            (
                OccupationState::new(&[(1, 1)]).unwrap(),
                Complex64::new(0.6, 0.0),
            ),
            (
                OccupationState::new(&[(2, 2), (3, 1)]).unwrap(),
                Complex64::new(0.0, 0.8),
            ),
        ],
    );
    pass &= (number_expectation(&psi, 3).unwrap() - 2.28).abs() <= 1e-12;
    // Unnormalized input: weights 4 and 1 on totals 0 and 2.
    let phi = StateVector::from_terms(
        Sector::Bose,
        [
            (OccupationState::vacuum(), Complex64::new(2.0, 0.0)),
            (
                OccupationState::new(&[(1, 2)]).unwrap(),
                Complex64::new(1.0, 0.0),
            ),
        ],
    );
    pass &= (number_expectation(&phi, 3).unwrap() - 0.4).abs() <= 1e-12;
    report(
        8,
        "number expectation exact on basis states (n <= 8), convex on superpositions",
        pass,
    );
}

#[test]
fn criterion_09_quasi_set_properties() {
    let kinds = [AtomKind::new("e"), AtomKind::new("p"), AtomKind::new("n")];
    let mut all = Vec::new();
    for a in 0..=6u64 {
        for b in 0..=6u64 {
            for c in 0..=6u64 {
                if a + b + c <= 6 {
                    all.push(QSet::from_counts(&[
                        (kinds[0].clone(), a),
                        (kinds[1].clone(), b),
                        (kinds[2].clone(), c),
                    ]));
                }
            }
        }
    }
    let mut pass = all.len() == 84;
    // Equivalence relation, exhaustively.
    for x in &all {
        pass &= x.indistinguishable(x);
    }
    for x in &all {
        for y in &all {
            pass &= x.indistinguishable(y) == y.indistinguishable(x);
        }
    }
    for x in &all {
        for y in &all {
            if !x.indistinguishable(y) {
                continue;
            }
            for z in &all {
                if y.indistinguishable(z) {
                    pass &= x.indistinguishable(z);
                }
            }
        }
    }
    // replace(x, z, z) is unobservable, for every present kind.
    for x in &all {
        for (z, _) in x.kinds() {
            let swapped = x.replace(z, z).unwrap();
            pass &= swapped.indistinguishable(x);
        }
    }
    let demo = checks::qset_demo(0x2026_0818, 1000);
    pass &= demo.passed() && demo.cases == 1000;
    report(
        9,
        "indistinguishability is an equivalence and same-kind replacement is invisible",
        pass,
    );
}

#[test]
fn criterion_10_adjointness() {
    let mut worst = 0.0f64;
    let bose: Vec<StateVector> = bose_states(4, 3)
        .into_iter()
        .map(|f| StateVector::embed(f, Sector::Bose))
        .collect();
    let fermi: Vec<StateVector> = fermi_states(4)
        .into_iter()
        .map(|f| StateVector::embed(f, Sector::Fermi))
        .collect();
    let mut run = |ops: &[LadderOp], states: &[StateVector]| {
        for op in ops {
            for psi in states {
                for phi in states {
                    let lhs =
                        fock_inner_product(&op.adjoint().apply(psi).unwrap(), phi).unwrap();
                    let rhs = fock_inner_product(psi, &op.apply(phi).unwrap()).unwrap();
                    worst = worst.max((lhs - rhs).norm());
                }
            }
        }
    };
    let bose_ops: Vec<LadderOp> = (1..=4)
        .flat_map(|k| [LadderOp::BosonCreate(mode(k)), LadderOp::BosonAnnihilate(mode(k))])
        .collect();
    let fermi_ops: Vec<LadderOp> = (1..=4)
        .flat_map(|k| {
            [
                LadderOp::FermionCreate(mode(k)),
                LadderOp::FermionAnnihilate(mode(k)),
            ]
        })
        .collect();
    run(&bose_ops, &bose);
    run(&fermi_ops, &fermi);
    report(
        10,
        "<adjoint(O) psi | phi> = <psi | O phi> for every generator, modes <= 4, totals <= 3",
        worst <= 1e-12,
    );
}

#[test]
fn criterion_11_cli_contract() {
    let corpus = [
        "a+(1)|;B>",
        "a(1)|1@1;B>",
        "a+(2) a+(1) |;B>",
        "2 a+(1) |;B>",
        "1.5 |1@1;B>",
        "2i |2@2;B>",
        "3+4i",
        "-|;B>",
        "-2.5",
        "|;T>",
        "|1@1,2@3;T>",
        "|1@1;F>",
        "c+(6)|1@3,1@5,1@7,1@8;F>",
        "c(2)|1@2;F>",
        "[a(1), a+(1)]",
        "[a(1), a+(1)] |1@2;B>",
        "{c(3), c+(3)} |1@1;F>",
        "[a(1), a+(2)] |;B> + |;B>",
        "<1@1;B|1@1;B>",
        "<;F|;F>",
        "<2@1,1@3;B|2@1,1@3;B>",
        "<(a+(1)|;B>)|1@1;B>",
        "<1@1;B|(a+(1)|;B>)>",
        "psi+(2) psi+(1) |;B>",
        "psi(1) psi+(1) |;F>",
        "(3+4i) |1@1;F>",
        "a+(1) a+(1) |;B> - 2 |2@1;B>",
        "-<1@1;B|1@1;B>",
        "a+(1) (a+(2) |;B>)",
        "|1@1;B> - |1@1;B> + |1@1;B>",
    ];
    let mut pass = corpus.len() >= 30;
    for text in corpus {
        let Ok(ast) = qspace::expr::parse(text) else {
            pass = false;
            eprintln!("corpus entry failed to parse: {text}");
            continue;
        };
        let printed = ast.to_string();
        match qspace::expr::parse(&printed) {
            Ok(re) if re == ast => {}
            _ => {
                pass = false;
                eprintln!("round-trip failed: {text} -> {printed}");
            }
        }
    }
    let bin = env!("CARGO_BIN_EXE_qspace");
    let code = |args: &[&str]| {
        Command::new(bin)
            .args(args)
            .output()
            .expect("binary runs")
            .status
            .code()
    };
    pass &= code(&["eval", "a+(1)|;B>"]) == Some(0);
    pass &= code(&["eval", "a+(1"]) == Some(2);
    pass &= code(&["eval", "a+(1) c+(1) |;B>"]) == Some(2);
    pass &= code(&["eval", "psi+(1)|;B>"]) == Some(3);
    pass &= code(&["check-ccr", "--modes", "4", "--max-total", "3"]) == Some(0);
    pass &= code(&["check-car", "--modes", "5"]) == Some(0);
    report(
        11,
        "30-case parse/print round-trip, documented exit codes, relation suites exit 0",
        pass,
    );
}
