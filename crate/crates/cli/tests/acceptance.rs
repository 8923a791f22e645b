//! Acceptance suite: one PASS/FAIL line per criterion. All comparisons are
//! exact; the only tolerances are the wall-clock limits listed per line.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use trace_codes::construction::codeword_weight_brute;
use trace_codes::field::eta_p;
use trace_codes::sums::additive_char_sum;
use trace_codes::{
    analytic_distribution, analytic_weight, build_defining_set, gauss_sum_p, length_formula, make_field, new_sum,
    new_sum_closed, pless_check, run_report, solvable_set_count, theoretical_distribution, weil_sum_closed,
    weil_sum_direct, CodeSpec, CycInt, EnumerationMode, GriesmerClass, Method, RunConfig, WeightDistribution,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(limit: Duration, start: Instant, what: &str) -> Result<(), String> {
    let t = start.elapsed();
    ensure(t < limit, || format!("{what} took {t:.2?}, limit {limit:?}"))
}

fn full(threads: usize) -> RunConfig {
    RunConfig { threads: Some(threads), mode: EnumerationMode::Full, ..RunConfig::default() }
}

/// Runs the given methods and checks `[n, k, d]`, the enumerator, and the
/// internal cross-checks of the report.
fn reproduce(
    spec: CodeSpec,
    methods: &[Method],
    config: &RunConfig,
    nkd: (u128, usize, u128),
    enumerator: &[(u128, u128)],
) -> Result<trace_codes::CodeReport, String> {
    let r = run_report(&spec, methods, config).map_err(|e| format!("{spec:?}: {e}"))?;
    ensure(r.refusals.is_empty(), || format!("{spec:?}: refused {:?}", r.refusals))?;
    ensure(r.methods.len() == methods.len(), || format!("{spec:?}: methods {:?}", r.methods))?;
    let got = (r.length, r.dimension, r.min_distance.unwrap_or(0));
    ensure(got == nkd, || format!("{spec:?}: [n,k,d] = {got:?}, expected {nkd:?}"))?;
    let dist = r.distribution.as_ref().unwrap();
    ensure(dist.entries() == enumerator, || format!("{spec:?}: enumerator {dist}"))?;
    let failed: Vec<_> = r.checks.iter().filter(|c| !c.passed).collect();
    ensure(failed.is_empty(), || format!("{spec:?}: failed checks {failed:?}"))?;
    Ok(r)
}

fn criterion_1() -> Outcome {
    let enumerator = [(0, 1), (6, 12), (8, 54), (9, 8), (12, 6)];
    let mut slowest = Duration::ZERO;
    for l in [1, 3, 5, 7, 9, 11] {
        for i in [0, 1] {
            let start = Instant::now();
            let spec = CodeSpec::new(3, 2, l, i).map_err(|e| e.to_string())?;
            let r = reproduce(spec, &[Method::Brute], &full(1), (12, 4, 6), &enumerator)?;
            ensure(r.griesmer_class == Some(GriesmerClass::AlmostOptimal), || {
                format!("l={l} i={i}: class {:?}", r.griesmer_class)
            })?;
            within(Duration::from_secs(1), start, &format!("l={l} i={i}"))?;
            slowest = slowest.max(start.elapsed());
        }
    }
    Ok(format!("[12,4,6] almost-optimal for l in 1..=11 odd, i in 0,1; slowest {slowest:.2?} < 1s"))
}

fn criterion_2() -> Outcome {
    let enumerator = [(0, 1), (126, 24), (140, 144), (144, 2058), (147, 144), (168, 30)];
    for i in [0, 1] {
        let start = Instant::now();
        reproduce(CodeSpec::new(7, 2, 1, i).unwrap(), &[Method::Brute], &full(1), (168, 4, 126), &enumerator)?;
        within(Duration::from_secs(5), start, &format!("i={i}"))?;
    }
    Ok("[168,4,126] exact, brute full enumeration < 5s".into())
}

fn criterion_3() -> Outcome {
    let enumerator = [(0, 1), (550, 60), (594, 600), (600, 13310), (605, 600), (660, 70)];
    for i in [0, 1] {
        let start = Instant::now();
        reproduce(CodeSpec::new(11, 2, 1, i).unwrap(), &[Method::Brute], &full(1), (660, 4, 550), &enumerator)?;
        within(Duration::from_secs(60), start, &format!("i={i}"))?;
    }
    Ok("[660,4,550] exact, brute full enumeration single-threaded < 60s".into())
}

/// Analytic and theory agree on the enumerator, per-codeword analytic
/// weights match literal weights on 10^4 random codewords, and the full
/// analytic pass over every codeword finishes in time on 4 workers.
fn analytic_example(l: u64, nkd: (u128, usize, u128), enumerator: &[(u128, u128)]) -> Outcome {
    let fp = make_field(3, 4).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed + l);
    for i in [0, 1] {
        let spec = CodeSpec::new(3, 4, l, i).unwrap();
        let start = Instant::now();
        reproduce(spec, &[Method::Analytic, Method::Theory], &full(4), nkd, enumerator)?;
        within(Duration::from_secs(600), start, "full analytic pass")?;

        let orbit = analytic_distribution(&spec, &fp, EnumerationMode::OrbitReduced, Some(4)).unwrap();
        ensure(orbit.entries() == enumerator, || format!("orbit-reduced enumerator {orbit}"))?;

        let d = build_defining_set(&spec, &fp).map_err(|e| e.to_string())?;
        for _ in 0..10_000 {
            let a = fp.element_from_rank(rng.random_range(0..fp.q()));
            let b = fp.element_from_rank(rng.random_range(0..fp.q()));
            let analytic = analytic_weight(&a, &b, &spec, &fp).map_err(|e| e.to_string())?;
            let literal = codeword_weight_brute(&a, &b, &d, &fp) as u128;
            ensure(analytic == literal, || format!("i={i} a={a} b={b}: analytic {analytic}, literal {literal}"))?;
        }
    }
    Ok(format!(
        "{nkd:?} exact; analytic = theory; 2x10^4 sampled codewords agree with literal weights; full pass of 3^8 codewords < 600s"
    ))
}

fn criterion_4() -> Outcome {
    analytic_example(1, (972, 8, 486), &[(0, 1), (486, 12), (648, 6534), (729, 8), (972, 6)])
}

fn criterion_5() -> Outcome {
    analytic_example(2, (810, 8, 486), &[(0, 1), (486, 110), (540, 6318), (567, 100), (648, 30), (810, 2)])
}

fn criterion_6() -> Outcome {
    let mut checked = 0u64;
    for (p, e, l) in [(3, 2, 1), (3, 4, 1), (3, 4, 2), (7, 2, 1), (11, 2, 1)] {
        let spec = CodeSpec::new(p, e, l, 0).unwrap();
        let fp = make_field(p, e).unwrap();
        for alpha in fp.elements().skip(1) {
            for beta in fp.elements() {
                let closed = weil_sum_closed(&alpha, &beta, &spec, &fp).map_err(|e| e.to_string())?;
                let direct = weil_sum_direct(&alpha, &beta, l, &fp);
                ensure(closed == direct, || format!("{spec:?} alpha={alpha} beta={beta}: {closed} vs {direct}"))?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} (alpha, beta) pairs, 0 discrepancies"))
}

fn criterion_7() -> Outcome {
    for p in [3u32, 7, 11, 19] {
        for y in 1..p {
            let closed = new_sum_closed(y, p).unwrap();
            for i in [0, 1] {
                let direct = new_sum(y, i, p).unwrap();
                ensure(direct == closed, || format!("p={p} y={y} i={i}: {direct} vs {closed}"))?;
            }
        }
        let g = gauss_sum_p(p).unwrap();
        ensure(&g * &g == CycInt::from_int(-(p as i64), p), || format!("p={p}: G^2 = {}", &g * &g))?;
    }
    Ok("new sum closed form for all y, both classes; G^2 = -p exactly for p in 3,7,11,19".into())
}

fn criterion_8() -> Outcome {
    let fp = make_field(3, 4).unwrap();
    for l in [1, 3] {
        let spec = CodeSpec::new(3, 4, l, 0).unwrap();
        let count = solvable_set_count(&spec, &fp).map_err(|e| e.to_string())?;
        ensure(count == 9, || format!("l={l}: {count} solvable right-hand sides"))?;
    }
    Ok("9 solvable right-hand sides over F_81 for l = 1, 3".into())
}

fn criterion_9() -> Outcome {
    let fields = [(3u32, 2usize), (3, 3), (3, 4), (7, 2), (11, 2)];
    for (p, e) in fields {
        let fp = make_field(p, e).unwrap();
        let elems: Vec<_> = fp.elements().collect();
        // orthogonality of additive characters
        for a in &elems {
            let sum = additive_char_sum(p, elems.iter().map(|x| fp.trace(&fp.mul(a, x))));
            let expected = if a.is_zero() { fp.q() as i64 } else { 0 };
            ensure(sum == CycInt::from_int(expected, p), || format!("F_{p}^{e}: orthogonality fails at {a}"))?;
        }
        // trace linearity and surjectivity
        let mut counts = vec![0u64; p as usize];
        for (k, x) in elems.iter().enumerate() {
            counts[fp.trace(x) as usize] += 1;
            let y = &elems[(k * 7 + 3) % elems.len()];
            let c = (k as u32) % p;
            let lhs = fp.trace(&fp.add(&fp.scale(c, x), y));
            ensure(lhs == (c * fp.trace(x) + fp.trace(y)) % p, || format!("F_{p}^{e}: trace not linear"))?;
        }
        ensure(counts.iter().all(|&c| c == fp.q() / p as u64), || format!("F_{p}^{e}: trace counts {counts:?}"))?;
        // eta multiplicativity, on F_q with a stride through pairs
        for (k, x) in elems.iter().enumerate() {
            let y = &elems[(k * 5 + 1) % elems.len()];
            ensure(fp.eta_q(&fp.mul(x, y)) == fp.eta_q(x) * fp.eta_q(y), || format!("eta_q fails at {x}, {y}"))?;
        }
        for a in 0..p {
            for b in 0..p {
                ensure(eta_p(a * b % p, p) == eta_p(a, p) * eta_p(b, p), || format!("eta_p fails at {a}, {b}"))?;
            }
        }
    }

    // scaling invariance, exhaustive over F_9 and sampled over F_81
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for (p, e, l, samples) in [(3u32, 2usize, 1u64, None), (3, 4, 1, Some(2000u32)), (7, 2, 1, Some(2000))] {
        let spec = CodeSpec::new(p, e, l, 0).unwrap();
        let fp = make_field(p, e).unwrap();
        let d = build_defining_set(&spec, &fp).unwrap();
        let pairs: Vec<(u64, u64)> = match samples {
            None => (0..fp.q()).flat_map(|a| (0..fp.q()).map(move |b| (a, b))).collect(),
            Some(n) => (0..n).map(|_| (rng.random_range(0..fp.q()), rng.random_range(0..fp.q()))).collect(),
        };
        for (a, b) in pairs {
            let (a, b) = (fp.element_from_rank(a), fp.element_from_rank(b));
            let w = codeword_weight_brute(&a, &b, &d, &fp);
            for t in 2..p {
                let wt = codeword_weight_brute(&fp.scale(t, &a), &fp.scale(t, &b), &d, &fp);
                ensure(w == wt, || format!("{spec:?}: weight of ({a},{b}) changes under scaling by {t}"))?;
            }
        }
    }

    // Pless moments on every produced distribution, and i-independence
    let mut distributions = 0;
    for (p, e, l) in [(3, 2, 1), (3, 2, 3), (7, 2, 1), (11, 2, 1), (3, 4, 1), (3, 4, 2)] {
        let mut per_class: Vec<WeightDistribution> = Vec::new();
        for i in [0, 1] {
            let spec = CodeSpec::new(p, e, l, i).unwrap();
            let n = length_formula(&spec).unwrap();
            let r = run_report(&spec, &Method::ALL, &RunConfig::default()).map_err(|e| e.to_string())?;
            ensure(r.methods.len() == 3, || format!("{spec:?}: methods {:?}", r.methods))?;
            let dist = r.distribution.clone().unwrap();
            for d in [dist.clone(), theoretical_distribution(&spec).unwrap()] {
                ensure(pless_check(&d, n, &spec).passed(), || format!("{spec:?}: Pless moments fail"))?;
                distributions += 1;
            }
            ensure(r.passed, || format!("{spec:?}: report checks {:?}", r.checks))?;
            per_class.push(dist);
        }
        ensure(per_class[0] == per_class[1], || format!("({p},{e},{l}): distributions depend on i"))?;
    }
    Ok(format!(
        "orthogonality, trace, eta, scaling invariance exact; Pless holds on {distributions} distributions; i-independent"
    ))
}

fn verify_json(spec: &[&str], threads: &str) -> Result<Vec<u8>, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_trace-codes"))
        .arg("verify")
        .args(spec)
        .args(["--threads", threads])
        .output()
        .map_err(|e| e.to_string())?;
    ensure(out.status.success(), || {
        format!("verify exited with {:?}: {}", out.status.code(), String::from_utf8_lossy(&out.stderr))
    })?;
    Ok(out.stdout)
}

fn criterion_10() -> Outcome {
    let specs: [&[&str]; 3] = [
        &["--p", "3", "--e", "2", "--l", "1", "--i", "0"],
        &["--p", "7", "--e", "2", "--l", "1", "--i", "1"],
        &["--p", "3", "--e", "4", "--l", "2", "--i", "0"],
    ];
    for spec in specs {
        let one = verify_json(spec, "1")?;
        let four = verify_json(spec, "4")?;
        ensure(one == four, || format!("{spec:?}: output differs between 1 and 4 workers"))?;
        ensure(!one.is_empty(), || "empty output".into())?;
    }
    Ok("verify JSON byte-identical with 1 and 4 workers on 3 specs".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("(3,2,l) [12,4,6] brute", criterion_1),
        ("(7,2,1) [168,4,126] brute", criterion_2),
        ("(11,2,1) [660,4,550] brute", criterion_3),
        ("(3,4,1) [972,8,486] analytic", criterion_4),
        ("(3,4,2) [810,8,486] analytic", criterion_5),
        ("Weil sum closed form", criterion_6),
        ("new sum and Gauss sum", criterion_7),
        ("solvable set count", criterion_8),
        ("property suite", criterion_9),
        ("determinism across workers", criterion_10),
    ];
    let mut failures = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let t = start.elapsed();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS {name}: {detail} ({t:.2?})", k + 1),
            Err(detail) => {
                failures += 1;
                println!("criterion {:>2} FAIL {name}: {detail} ({t:.2?})", k + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failures} failed", criteria.len() - failures);
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
