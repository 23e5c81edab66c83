//! Acceptance criteria, one test each. Every test prints a single
//! `criterion N ... PASS|FAIL` line; run with `-- --nocapture` to see them.

use std::time::{Duration, Instant};

use quadalg::algebra::{
    casimir_correction, casimir_value, class_structure_constants, dimension_of,
    enumerate_params, identify_class, structure_function, ClassId, ClassParams, Mode, ParamBox,
    QuadraticAlgebraSpec,
};
use quadalg::diffop::verify_equivalence;
use quadalg::exact::{q, Rational, SqrtRational};
use quadalg::expr::parse_spec;
use quadalg::fock::{block_basis, invariant_block_in, realize, FockSpace};
use quadalg::poly::Polynomial;
use quadalg::rep::dynamics::{
    deformed_oscillator, spectral_asymmetry, tavis_cummings_matrix, TcParams,
};
use quadalg::rep::{build_rep, casimir_diag, verify_relations};
use quadalg::spectra::{
    degeneracy_brute, degeneracy_closed, degeneracy_via_reps, dimension_sum, partitions_brute,
    partitions_closed,
};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

const TC_TOL: f64 = 1e-12;
const SWEEP_BUDGET: Duration = Duration::from_secs(10);
const COMBINATORICS_BUDGET: Duration = Duration::from_secs(1);
const SWEEP_NMAX: usize = 32;
const BLOCK_CUTOFF: u32 = 8;
const BLOCK_NMAX: usize = 8;

fn r(n: i64) -> Rational {
    Rational::from(n)
}

fn report(n: u32, what: &str, ok: bool, detail: &str) {
    let verdict = if ok { "PASS" } else { "FAIL" };
    println!("criterion {n} [{what}]: {verdict} ({detail})");
}

/// The four sweep boxes with the `nmax` used for the infinite class.
fn sweep() -> Vec<ClassParams> {
    let mut all = Vec::new();
    all.extend(enumerate_params(ClassId::QMinus2, &ParamBox::new(r(4), 12)));
    all.extend(enumerate_params(ClassId::QPlus2, &ParamBox::new(r(4), 12)));
    all.extend(enumerate_params(ClassId::QMinus11, &ParamBox::new(r(6), 12)));
    all.extend(enumerate_params(ClassId::QPlus11, &ParamBox::new(r(6), 8)));
    all
}

#[test]
fn criterion_1_relation_closure() {
    let start = Instant::now();
    let params = sweep();
    let mut failures = Vec::new();
    let mut boundary = 0;
    for p in &params {
        let rep = build_rep(p, Some(SWEEP_NMAX)).unwrap();
        let report = verify_relations(&rep).unwrap();
        if report.boundary_row.is_some() {
            boundary += 1;
        }
        if !report.passed {
            failures.push(format!("{p}: {:?}", report.max_violation));
        }
    }
    let elapsed = start.elapsed();
    let ok = failures.is_empty() && elapsed < SWEEP_BUDGET;
    report(
        1,
        "exact relation closure",
        ok,
        &format!(
            "{} reps, {} truncated with boundary row excluded, {} failing, {:.2?}",
            params.len(),
            boundary,
            failures.len(),
            elapsed
        ),
    );
    assert!(failures.is_empty(), "{failures:#?}");
    assert!(elapsed < SWEEP_BUDGET, "took {elapsed:?}");
}

#[test]
fn criterion_2_casimir_closed_forms() {
    let params = sweep();
    let mut non_constant = Vec::new();
    let mut mismatched: Vec<(ClassId, String)> = Vec::new();
    for p in &params {
        let rep = build_rep(p, Some(SWEEP_NMAX)).unwrap();
        let diag = casimir_diag(&rep).unwrap();
        if diag.windows(2).any(|w| w[0] != w[1]) {
            non_constant.push(p.to_string());
        }
        let closed = casimir_value(p).unwrap();
        if diag[0] != closed {
            mismatched.push((p.class, format!("{p}: diagonal {} vs closed form {closed}", diag[0])));
        }
    }

    // the two-dimensional Q-2 forms on their own domains
    let mut two_dim_ok = true;
    for n in 0..40 {
        let l = q(2 * n + 1, 4);
        let p = ClassParams::new(ClassId::QMinus2, q(1, 2), l.clone());
        let quoted = (r(-4) * l.pow(3) + r(7) * &l + r(3)) / r(4);
        two_dim_ok &= casimir_value(&p).unwrap() == quoted;
    }
    for twice_j in 2..40 {
        let j = q(twice_j, 2);
        let l = (Rational::one() - &j) / r(2);
        let p = ClassParams::new(ClassId::QMinus2, j.clone(), l);
        two_dim_ok &= dimension_of(&p).unwrap().finite() == Some(2);
        let quoted = (r(-3) * j.pow(3) + r(5) * j.pow(2) + r(11) * &j + r(3)) / r(8);
        two_dim_ok &= casimir_value(&p).unwrap() == quoted;
    }

    let mut per_class = String::new();
    for class in ClassId::QUADRATIC {
        let total = params.iter().filter(|p| p.class == class).count();
        let bad = mismatched.iter().filter(|(c, _)| *c == class).count();
        per_class.push_str(&format!(" {class}: {}/{total} match;", total - bad));
    }
    let ok = non_constant.is_empty() && mismatched.is_empty() && two_dim_ok;
    report(
        2,
        "Casimir constancy and closed forms",
        ok,
        &format!(
            "{} non-constant diagonals;{per_class} two-dim forms agree: {two_dim_ok}",
            non_constant.len()
        ),
    );
    assert!(non_constant.is_empty(), "{non_constant:#?}");
    assert!(two_dim_ok);
    assert!(
        mismatched.is_empty(),
        "{} closed-form mismatches, first: {}",
        mismatched.len(),
        mismatched[0].1
    );
}

/// Largest `nmax <= BLOCK_NMAX` whose Q+11 block fits the box.
fn fitting_nmax(p: &ClassParams, space: &FockSpace) -> Option<usize> {
    (0..=BLOCK_NMAX).rev().find(|&n| {
        block_basis(p, Some(n))
            .map(|b| b.iter().all(|occ| space.contains(occ)))
            .unwrap_or(false)
    })
}

#[test]
fn criterion_3_triple_equivalence() {
    let c = BLOCK_CUTOFF;
    let space = FockSpace::new(&[c, c, c]).unwrap();
    let bound = r(2 * c as i64);
    let mut checked = 0;
    let mut failures = Vec::new();
    for class in ClassId::QUADRATIC {
        let real = realize(class, &space).unwrap();
        for p in enumerate_params(class, &ParamBox::new(bound.clone(), 3 * c as u64)) {
            let nmax = if class.is_infinite() {
                match fitting_nmax(&p, &space) {
                    Some(n) => Some(n),
                    None => continue,
                }
            } else {
                let fits = block_basis(&p, None)
                    .unwrap()
                    .iter()
                    .all(|occ| space.contains(occ));
                if !fits {
                    continue;
                }
                None
            };
            checked += 1;
            let rep = build_rep(&p, nmax).unwrap();
            let block = invariant_block_in(&real, &p, nmax).unwrap();
            if block != rep {
                failures.push(format!("{p}: Fock block differs from matrix rep"));
            }
            let eq = verify_equivalence(&p, nmax).unwrap();
            if !eq.passed {
                failures.push(format!("{p}: {}", eq.mismatches[0]));
            }
        }
    }
    let ok = failures.is_empty() && checked > 0;
    report(
        3,
        "triple-realization equivalence",
        ok,
        &format!("{checked} params in cutoffs ({c},{c},{c}), {} failing", failures.len()),
    );
    assert!(ok, "{failures:#?}");
}

#[test]
fn criterion_4_combinatorics() {
    let start = Instant::now();
    let mut bad = Vec::new();
    for n in 0..=200u64 {
        let closed = degeneracy_closed(n);
        let (via, _) = degeneracy_via_reps(n);
        if closed != degeneracy_brute(n) || closed != via {
            bad.push(format!("degeneracy N={n}"));
        }
        let p = partitions_closed(n);
        if p != partitions_brute(n) || p != dimension_sum(n) {
            bad.push(format!("partitions N={n}"));
        }
    }
    let spots = degeneracy_closed(4) == 9
        && degeneracy_brute(2) == 4
        && degeneracy_via_reps(3).0 == 6
        && partitions_closed(5) == 6
        && partitions_brute(5) == 6;
    let elapsed = start.elapsed();
    let ok = bad.is_empty() && spots && elapsed < COMBINATORICS_BUDGET;
    report(
        4,
        "degeneracy and partition counts",
        ok,
        &format!("N = 0..200, {} disagreements, spot values ok: {spots}, {elapsed:.2?}", bad.len()),
    );
    assert!(ok, "{bad:?} spots={spots} elapsed={elapsed:?}");
}

#[test]
fn criterion_5_identification() {
    let spec = parse_spec("-3*Q0^2 - 3*Q0 + 2").unwrap();
    let id = identify_class(&spec);
    let valid: Vec<_> = id.valid().collect();
    let target = ClassParams::new(ClassId::QPlus11, r(2), r(1));
    let unique = valid.len() == 1 && valid[0].params.as_ref() == Some(&target);

    let rep = build_rep(&target, Some(11)).unwrap();
    let entries_ok = (0..=10).all(|n| {
        let want = SqrtRational::new(r(n + 1), n as u64 + 4).unwrap();
        rep.qplus_sub[n as usize] == want
    });
    let ok = unique && entries_ok;
    report(
        5,
        "identification of -3*Q0^2 - 3*Q0 + 2",
        ok,
        &format!(
            "{} valid reading(s); Q+ entries (n+1)sqrt(n+4), n=0..10: {entries_ok}",
            valid.len()
        ),
    );
    assert!(ok);
}

#[test]
fn criterion_6_fermion() {
    let d = deformed_oscillator(&ClassParams::new(ClassId::QMinus11, r(1), r(1))).unwrap();
    let n_ok = d.n_diag == vec![r(0), r(1)];
    let a_ok = d.a_entries == vec![SqrtRational::one()];
    let f_ok = d.f == Polynomial::new(vec![r(1), q(-1, 2), q(-3, 2)]);
    let ok = n_ok && a_ok && f_ok && d.passed;
    report(
        6,
        "fermion from Q-(1,1) at k=1, l=1",
        ok,
        &format!("N ok: {n_ok}, A ok: {a_ok}, F ok: {f_ok}, [A,A+]=F(N): {}", d.passed),
    );
    assert!(ok);
}

#[test]
fn criterion_7_tavis_cummings() {
    let one = TcParams::new(r(1), r(1)).unwrap();
    let p = ClassParams::new(ClassId::QMinus2, q(1, 2), q(1, 4));
    let s = tavis_cummings_matrix(&p, &one).unwrap();
    let two_level = s.eigenvalues.len() == 2
        && (s.eigenvalues[0] + 0.5).abs() < TC_TOL
        && (s.eigenvalues[1] - 1.5).abs() < TC_TOL;

    let mut worst: f64 = 0.0;
    let mut count = 0;
    let mut zero_coupling_exact = true;
    for p in enumerate_params(ClassId::QMinus2, &ParamBox::new(r(4), 12)) {
        if dimension_of(&p).unwrap().finite().unwrap() > 9 {
            continue;
        }
        for g in [q(1, 1), q(-3, 2), q(7, 3)] {
            let tc = TcParams::new(q(3, 2), g).unwrap();
            let s = tavis_cummings_matrix(&p, &tc).unwrap();
            worst = worst.max(spectral_asymmetry(&s, &tc));
            count += 1;
        }
        let tc = TcParams::new(q(3, 2), r(0)).unwrap();
        let s = tavis_cummings_matrix(&p, &tc).unwrap();
        let level = 2.0 * 1.5 * p.l.to_f64();
        zero_coupling_exact &= s.eigenvalues.iter().all(|&e| e == level);
    }
    let ok = two_level && worst < TC_TOL && zero_coupling_exact;
    report(
        7,
        "Tavis-Cummings spectrum",
        ok,
        &format!(
            "two-level ok: {two_level}; {count} spectra, max asymmetry {worst:.1e}; g=0 exact: {zero_coupling_exact}"
        ),
    );
    assert!(ok);
}

fn random_rational(rng: &mut StdRng) -> Rational {
    Rational::new(rng.random_range(-50i64..=50), rng.random_range(1i64..=12))
}

#[test]
fn criterion_8_casimir_correction() {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let mut bad = 0;
    for _ in 0..100 {
        let (a, b, c) = (
            random_rational(&mut rng),
            random_rational(&mut rng),
            random_rational(&mut rng),
        );
        let spec = QuadraticAlgebraSpec::new(a.clone(), b.clone(), c.clone());
        let f = structure_function(&spec);
        let p = casimir_correction(&f);
        let quoted = Polynomial::new(vec![
            -c.clone(),
            (&a - r(3) * &b + r(6) * &c) / r(6),
            -(&a - &b) / r(2),
            &a / r(3),
        ]);
        if p.forward_difference() != f || p != quoted {
            bad += 1;
        }
    }
    // J+J- + J0(J0-1) and K+K- - K0(K0-1)
    let su2 = casimir_correction(&structure_function(&QuadraticAlgebraSpec::su2()));
    let su11 = casimir_correction(&structure_function(&QuadraticAlgebraSpec::su11()));
    let lie_ok = su2 == Polynomial::new(vec![r(0), r(-1), r(1)])
        && su11 == Polynomial::new(vec![r(0), r(1), r(-1)]);
    // and on the irreps themselves
    let reps_ok = (0..8).all(|n| {
        let j = q(n, 2);
        let rep = build_rep(&ClassParams::su2(j.clone()), None).unwrap();
        let k = q(n + 1, 2);
        let rep11 = build_rep(&ClassParams::su11(k.clone()), Some(6)).unwrap();
        casimir_diag(&rep).unwrap().iter().all(|d| *d == &j * (&j + r(1)))
            && casimir_diag(&rep11)
                .unwrap()
                .iter()
                .all(|d| *d == &k * (r(1) - &k))
    });
    let ok = bad == 0 && lie_ok && reps_ok;
    report(
        8,
        "Casimir correction identity",
        ok,
        &format!("{bad}/100 random (a,b,c) failing; su(2)/su(1,1) forms: {lie_ok}; on irreps: {reps_ok}"),
    );
    assert!(ok);
}

#[test]
fn structure_constants_match_relations_in_sweep() {
    // guards the sweep itself: every enumerated point is a valid lattice point
    for p in sweep() {
        p.require(Mode::Strict).unwrap();
        class_structure_constants(&p).unwrap();
    }
}
