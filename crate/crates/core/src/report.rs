//! Runs one or more distribution methods on a code and collects the results,
//! cross-checks and Griesmer class into a deterministic report.

use std::fmt::Write as _;

use serde::Serialize;

use crate::analytic::{analytic_distribution, length_formula};
use crate::bounds::{classify_optimality, GriesmerClass};
use crate::construction::{brute_distribution, code_dimension, BruteConfig, DEFAULT_SYMBOL_BUDGET};
use crate::distribution::{DistributionDiff, WeightDistribution};
use crate::error::{param, Error, Result};
use crate::field::make_field;
use crate::parallel::EnumerationMode;
use crate::spec::CodeSpec;
use crate::theory::{pless_check, theoretical_distribution};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Brute,
    Analytic,
    Theory,
}

impl Method {
    pub const ALL: [Method; 3] = [Method::Brute, Method::Analytic, Method::Theory];

    pub fn name(self) -> &'static str {
        match self {
            Method::Brute => "brute",
            Method::Analytic => "analytic",
            Method::Theory => "theory",
        }
    }
}

impl std::str::FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "brute" => Ok(Method::Brute),
            "analytic" => Ok(Method::Analytic),
            "theory" => Ok(Method::Theory),
            other => param(format!("unknown method {other:?}")),
        }
    }
}

/// Execution settings. None of them affect the report contents.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RunConfig {
    pub threads: Option<usize>,
    pub budget: u64,
    pub mode: EnumerationMode,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self { threads: None, budget: DEFAULT_SYMBOL_BUDGET, mode: EnumerationMode::default() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Refusal {
    pub method: Method,
    pub reason: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CodeParams {
    pub n: u128,
    pub k: usize,
    pub d: Option<u128>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CodeReport {
    pub spec: CodeSpec,
    pub params: CodeParams,
    pub length: u128,
    pub dimension: usize,
    pub min_distance: Option<u128>,
    /// `[[w, A_w], ...]`, ascending, weight 0 included. Absent when every
    /// requested method was refused.
    pub distribution: Option<WeightDistribution>,
    /// Methods that produced a distribution, in canonical order.
    pub methods: Vec<Method>,
    pub refusals: Vec<Refusal>,
    pub griesmer_class: Option<GriesmerClass>,
    pub checks: Vec<Check>,
    pub notes: Vec<String>,
    pub passed: bool,
}

const GRIESMER_NOTE: &str =
    "optimality is classified against the Griesmer bound only; no external code table is consulted";

fn check(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Check {
    Check { name: name.into(), passed, detail: detail.into() }
}

fn render_diff(diff: &[DistributionDiff]) -> String {
    diff.iter().map(|d| format!("w={}: {} vs {}", d.weight, d.left, d.right)).collect::<Vec<_>>().join("; ")
}

/// Computes every requested distribution and cross-checks them.
///
/// Budget refusals are recorded per method and the remaining methods still
/// run. Any other error aborts the report.
pub fn run_report(spec: &CodeSpec, methods: &[Method], config: &RunConfig) -> Result<CodeReport> {
    if methods.is_empty() {
        return param("at least one method is required");
    }
    spec.require_admissible("report")?;
    let mut methods = methods.to_vec();
    methods.sort();
    methods.dedup();

    let n = length_formula(spec)?;
    let fp = make_field(spec.p, spec.e)?;
    let dimension = code_dimension(spec, &fp)?;

    let mut produced: Vec<(Method, WeightDistribution)> = Vec::new();
    let mut refusals = Vec::new();
    for &method in &methods {
        let result = match method {
            Method::Brute => brute_distribution(
                spec,
                &fp,
                &BruteConfig { mode: config.mode, budget: config.budget, threads: config.threads },
            ),
            Method::Analytic => analytic_distribution(spec, &fp, config.mode, config.threads),
            Method::Theory => theoretical_distribution(spec),
        };
        match result {
            Ok(d) => produced.push((method, d)),
            Err(Error::Budget(reason)) => refusals.push(Refusal { method, reason }),
            Err(e) => return Err(e),
        }
    }

    let mut checks = Vec::new();
    let codewords = (spec.p as u128).pow(2 * spec.e as u32);
    checks.push(check("dimension", dimension == 2 * spec.e, format!("rank {dimension}, expected {}", 2 * spec.e)));
    for (method, dist) in &produced {
        checks.push(check(
            format!("{}:total", method.name()),
            dist.total() == codewords,
            format!("{} codewords, expected {codewords}", dist.total()),
        ));
        let pless = pless_check(dist, n, spec);
        let residuals: Vec<&str> = pless.moments.iter().map(|m| m.residual.as_str()).collect();
        checks.push(check(
            format!("{}:pless", method.name()),
            pless.passed(),
            format!("residuals {}", residuals.join(",")),
        ));
        let max_weight = dist.entries().last().map_or(0, |&(w, _)| w);
        checks.push(check(
            format!("{}:max-weight", method.name()),
            max_weight <= n,
            format!("largest weight {max_weight}, length {n}"),
        ));
    }
    for i in 0..produced.len() {
        for j in i + 1..produced.len() {
            let (ma, da) = &produced[i];
            let (mb, db) = &produced[j];
            let diff = da.diff(db);
            let detail = if diff.is_empty() { "identical".to_string() } else { render_diff(&diff) };
            checks.push(check(format!("agree:{}-{}", ma.name(), mb.name()), diff.is_empty(), detail));
        }
    }

    let distribution = produced.first().map(|(_, d)| d.clone());
    let min_distance = distribution.as_ref().and_then(WeightDistribution::min_distance);
    let griesmer_class = match min_distance {
        Some(d) => Some(classify_optimality(n, dimension as u32, d, spec.p as u128)?),
        None => None,
    };
    let passed = checks.iter().all(|c| c.passed);
    Ok(CodeReport {
        spec: *spec,
        params: CodeParams { n, k: dimension, d: min_distance },
        length: n,
        dimension,
        min_distance,
        distribution,
        methods: produced.iter().map(|(m, _)| *m).collect(),
        refusals,
        griesmer_class,
        checks,
        notes: vec![GRIESMER_NOTE.to_string()],
        passed,
    })
}

impl CodeReport {
    /// Pretty JSON with a trailing newline. Field order is fixed, so equal
    /// reports serialize to identical bytes.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// `weight,multiplicity` rows, ascending, weight 0 omitted.
    pub fn to_csv(&self) -> String {
        distribution_csv(self.distribution.as_ref())
    }
}

pub fn distribution_csv(dist: Option<&WeightDistribution>) -> String {
    let mut out = String::from("weight,multiplicity\n");
    if let Some(d) = dist {
        for (w, a) in d.nonzero() {
            let _ = writeln!(out, "{w},{a}");
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_code_report() {
        let spec = CodeSpec::new(3, 2, 1, 0).unwrap();
        let r = run_report(&spec, &[Method::Theory, Method::Brute], &RunConfig::default()).unwrap();
        assert!(r.passed, "{:#?}", r.checks);
        assert_eq!(r.methods, vec![Method::Brute, Method::Theory]);
        assert_eq!((r.length, r.dimension, r.min_distance), (12, 4, Some(6)));
        assert_eq!(r.griesmer_class, Some(GriesmerClass::AlmostOptimal));
        assert_eq!(r.to_csv(), "weight,multiplicity\n6,12\n8,54\n9,8\n12,6\n");
    }

    #[test]
    fn budget_refusal_is_recorded() {
        let spec = CodeSpec::new(3, 2, 1, 0).unwrap();
        let config = RunConfig { budget: 10, ..RunConfig::default() };
        let r = run_report(&spec, &[Method::Brute, Method::Theory], &config).unwrap();
        assert_eq!(r.methods, vec![Method::Theory]);
        assert_eq!(r.refusals.len(), 1);
        assert_eq!(r.refusals[0].method, Method::Brute);
        assert!(r.passed);
    }

    #[test]
    fn json_is_stable() {
        let spec = CodeSpec::new(7, 2, 1, 1).unwrap();
        let a = run_report(&spec, &Method::ALL, &RunConfig { threads: Some(1), ..RunConfig::default() }).unwrap();
        let b = run_report(&spec, &Method::ALL, &RunConfig { threads: Some(3), ..RunConfig::default() }).unwrap();
        assert_eq!(a.to_json(), b.to_json());
        let v: serde_json::Value = serde_json::from_str(&a.to_json()).unwrap();
        assert_eq!(v["distribution"][0], serde_json::json!([0, 1]));
        assert_eq!(v["griesmer_class"], "neither");
    }

    #[test]
    fn method_names_parse() {
        for m in Method::ALL {
            assert_eq!(m.name().parse::<Method>().unwrap(), m);
        }
        assert!("magic".parse::<Method>().is_err());
    }
}
