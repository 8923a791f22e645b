//! Cross-checks between the three ways of computing a weight distribution.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use trace_codes::{
    analytic_distribution, analytic_weight, brute_distribution, build_defining_set, codeword_weight_brute,
    length_formula, make_field, pless_check, theoretical_distribution, BruteConfig, CodeSpec, EnumerationMode,
    WeightDistribution,
};

fn pless_ok(dist: &WeightDistribution, spec: &CodeSpec) {
    let report = pless_check(dist, length_formula(spec).unwrap(), spec);
    assert!(report.passed(), "{spec:?}: {report:?}");
}

#[test]
fn analytic_weight_matches_literal_weight_exhaustively() {
    for (p, e, l) in [(3, 2, 1), (3, 2, 3), (7, 2, 1), (11, 2, 1), (3, 4, 1), (3, 4, 2)] {
        for i in [0, 1] {
            let spec = CodeSpec::new(p, e, l, i).unwrap();
            let fp = make_field(p, e).unwrap();
            let d = build_defining_set(&spec, &fp).unwrap();
            for a in fp.elements() {
                for b in fp.elements() {
                    assert_eq!(
                        analytic_weight(&a, &b, &spec, &fp).unwrap(),
                        codeword_weight_brute(&a, &b, &d, &fp) as u128,
                        "{spec:?} a={a} b={b}"
                    );
                }
            }
        }
    }
}

#[test]
fn analytic_weight_matches_literal_weight_sampled() {
    let spec = CodeSpec::new(3, 4, 1, 0).unwrap();
    let fp = make_field(3, 4).unwrap();
    let d = build_defining_set(&spec, &fp).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..10_000 {
        let a = fp.element_from_rank(rng.random_range(0..fp.q()));
        let b = fp.element_from_rank(rng.random_range(0..fp.q()));
        assert_eq!(
            analytic_weight(&a, &b, &spec, &fp).unwrap(),
            codeword_weight_brute(&a, &b, &d, &fp) as u128,
            "a={a} b={b}"
        );
    }
}

#[test]
fn brute_analytic_theory_agree_small() {
    for (p, e, l) in
        [(3, 2, 1), (3, 2, 3), (3, 2, 5), (7, 2, 1), (7, 2, 3), (11, 2, 1), (3, 4, 1), (3, 4, 2), (3, 4, 3)]
    {
        for i in [0, 1] {
            let spec = CodeSpec::new(p, e, l, i).unwrap();
            let fp = make_field(p, e).unwrap();
            let brute = brute_distribution(&spec, &fp, &BruteConfig::default()).unwrap();
            let analytic = analytic_distribution(&spec, &fp, EnumerationMode::OrbitReduced, None).unwrap();
            let theory = theoretical_distribution(&spec).unwrap();
            assert_eq!(brute, theory, "{spec:?}");
            assert_eq!(analytic, theory, "{spec:?}");
            pless_ok(&brute, &spec);
        }
    }
}

#[test]
fn analytic_and_theory_agree_larger_fields() {
    for (p, e, l) in [(3, 6, 1), (3, 6, 3), (7, 4, 1), (7, 4, 2), (3, 8, 1), (3, 8, 2), (3, 8, 4)] {
        let spec = CodeSpec::new(p, e, l, 0).unwrap();
        let fp = make_field(p, e).unwrap();
        let analytic = analytic_distribution(&spec, &fp, EnumerationMode::OrbitReduced, None).unwrap();
        let theory = theoretical_distribution(&spec).unwrap();
        assert_eq!(analytic, theory, "{spec:?}: {:?}", analytic.diff(&theory));
        pless_ok(&analytic, &spec);
    }
}

#[test]
fn full_and_orbit_modes_agree() {
    for (p, e, l) in [(3, 2, 1), (7, 2, 1), (3, 4, 2)] {
        let spec = CodeSpec::new(p, e, l, 1).unwrap();
        let fp = make_field(p, e).unwrap();
        let full = BruteConfig { mode: EnumerationMode::Full, ..BruteConfig::default() };
        assert_eq!(
            brute_distribution(&spec, &fp, &full).unwrap(),
            brute_distribution(&spec, &fp, &BruteConfig::default()).unwrap()
        );
        assert_eq!(
            analytic_distribution(&spec, &fp, EnumerationMode::Full, None).unwrap(),
            analytic_distribution(&spec, &fp, EnumerationMode::OrbitReduced, None).unwrap()
        );
    }
}

#[test]
fn class_does_not_change_distribution() {
    for (p, e, l) in [(3, 2, 1), (7, 2, 1), (3, 4, 1), (3, 6, 3)] {
        let s0 = CodeSpec::new(p, e, l, 0).unwrap();
        let s1 = s0.with_class(1).unwrap();
        assert_eq!(theoretical_distribution(&s0).unwrap(), theoretical_distribution(&s1).unwrap());
        if p.pow(2 * e as u32) <= 20_000 {
            let fp = make_field(p, e).unwrap();
            let b0 = brute_distribution(&s0, &fp, &BruteConfig::default()).unwrap();
            let b1 = brute_distribution(&s1, &fp, &BruteConfig::default()).unwrap();
            assert_eq!(b0, b1, "{s0:?}");
        }
    }
}

#[test]
fn theory_passes_pless_across_parameters() {
    for p in [3u32, 7, 11] {
        for e in [2usize, 4] {
            for l in 1..=8 {
                let Ok(spec) = CodeSpec::new(p, e, l, 0) else { continue };
                pless_ok(&theoretical_distribution(&spec).unwrap(), &spec);
            }
        }
    }
}

#[test]
fn worker_count_does_not_change_results() {
    let spec = CodeSpec::new(7, 2, 1, 0).unwrap();
    let fp = make_field(7, 2).unwrap();
    let run = |threads| {
        let config = BruteConfig { threads: Some(threads), ..BruteConfig::default() };
        (
            brute_distribution(&spec, &fp, &config).unwrap(),
            analytic_distribution(&spec, &fp, EnumerationMode::Full, Some(threads)).unwrap(),
        )
    };
    assert_eq!(run(1), run(4));
}
