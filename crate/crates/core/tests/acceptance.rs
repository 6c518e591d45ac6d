//! Acceptance gate: one pass/FAIL line per criterion, nonzero exit if any fails.

use nq_core::finite_group::GroupCalculus;
use nq_core::nichols::NicholsAlgebra;
use nq_core::qplane::{anyonic_line, fermionic_plane, PlaneCalculus};
use nq_core::qsl2::Sl2Calculus;
use nq_core::report::{Check, SuiteReport};
use nq_core::scalars::FieldCtx;
use nq_core::suites::{self, quotient_well_defined, SuiteConfig};
use proptest::collection::vec;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestCaseError, TestRunner};
use std::process::ExitCode;
use std::sync::Arc;

struct Outcome {
    pass: bool,
    detail: String,
}

impl Outcome {
    fn from_checks<'a>(checks: impl IntoIterator<Item = &'a Check>) -> Outcome {
        let (mut n, mut failed) = (0, Vec::new());
        for c in checks {
            n += 1;
            if !c.pass {
                failed.push(c.id.clone());
            }
        }
        if n == 0 {
            return Outcome { pass: false, detail: "no checks ran".into() };
        }
        let detail = if failed.is_empty() {
            format!("{n} checks")
        } else {
            format!("{}/{n} checks failed: {}", failed.len(), failed.join(", "))
        };
        Outcome { pass: failed.is_empty(), detail }
    }

    fn error(e: impl std::fmt::Display) -> Outcome {
        Outcome { pass: false, detail: format!("error: {e}") }
    }
}

fn suite(name: &str) -> Result<SuiteReport, String> {
    suites::run_one(name, &SuiteConfig::default()).map_err(|e| e.to_string())
}

fn whole(name: &str) -> Outcome {
    match suite(name) {
        Ok(r) => Outcome::from_checks(&r.checks),
        Err(e) => Outcome::error(e),
    }
}

fn filtered(name: &str, keep: impl Fn(&str) -> bool) -> Outcome {
    match suite(name) {
        Ok(r) => Outcome::from_checks(r.checks.iter().filter(|c| keep(&c.id))),
        Err(e) => Outcome::error(e),
    }
}

fn cohomology(id: &str) -> bool {
    matches!(id, "omega_dims" | "omega_total_dim" | "betti_numbers")
}

fn metric(id: &str) -> bool {
    id.starts_with("metric_")
}

fn algebras() -> Result<Vec<Arc<NicholsAlgebra>>, String> {
    let k = FieldCtx::RatFun;
    let e = |x: &dyn std::fmt::Display| x.to_string();
    let plane = PlaneCalculus::quantum_plane(&k, 4).map_err(|x| e(&x))?;
    Ok(vec![
        GroupCalculus::s3().map_err(|x| e(&x))?.lambda().clone(),
        Sl2Calculus::new(&k).map_err(|x| e(&x))?.forms().clone(),
        Arc::new(plane.forms().clone()),
        Arc::new(plane.coords().clone()),
        fermionic_plane(&k).map_err(|x| e(&x))?.primal().clone(),
        anyonic_line(2).map_err(|x| e(&x))?.primal().clone(),
    ])
}

/// 50 random relation perturbations of random representatives.
fn random_perturbations() -> Outcome {
    let algs = match algebras() {
        Ok(a) => a,
        Err(e) => return Outcome::error(e),
    };
    let mut runner = TestRunner::new(Config { cases: 50, failure_persistence: None, ..Config::default() });
    let strategy = (0..algs.len(), any::<u32>(), any::<u32>(), any::<u32>(), any::<u32>(), vec(-3i64..=3, 4));
    let result = runner.run(&strategy, |(a, r, s, left, right, coeffs)| {
        let alg = &algs[a];
        let n = alg.built_degree();
        prop_assume!(n >= 3);
        let r = 2 + r as usize % (n - 2);
        let s = 1 + s as usize % (n - r);
        prop_assume!(alg.relations(r).dim() > 0);
        let left = left as usize % alg.space().power_dim(r);
        let right = right as usize % alg.space().power_dim(s);
        let ok = quotient_well_defined(alg, r, s, left, right, &coeffs).map_err(TestCaseError::fail)?;
        prop_assert!(ok, "class moved for r = {r}, s = {s}, left = {left}, right = {right}");
        Ok(())
    });
    match result {
        Ok(()) => Outcome { pass: true, detail: "50 random perturbations".into() },
        Err(e) => Outcome::error(e),
    }
}

fn hopf_and_quotient() -> Outcome {
    let suite = whole("fourier-identities");
    let random = random_perturbations();
    let detail = format!("{}; {}", suite.detail, random.detail);
    Outcome { pass: suite.pass && random.pass, detail }
}

type Criterion = (&'static str, Box<dyn Fn() -> Outcome>);

fn main() -> ExitCode {
    let criteria: Vec<Criterion> = vec![
        ("braided factorial factorisation", Box::new(|| whole("braided-factorials"))),
        ("Hilbert series", Box::new(|| whole("nichols-dims"))),
        ("S3 Hodge star", Box::new(|| whole("s3-hodge"))),
        ("S3 spectra and Maxwell", Box::new(|| whole("s3-maxwell"))),
        ("S3 cohomology", Box::new(|| filtered("s3-structure", cohomology))),
        ("S3 structure equations", Box::new(|| filtered("s3-structure", |id| !cohomology(id)))),
        ("SL2 calculus", Box::new(|| filtered("sl2-calculus", |id| !metric(id)))),
        ("SL2 metric", Box::new(|| filtered("sl2-calculus", metric))),
        ("SL2 Hodge star", Box::new(|| whole("sl2-hodge"))),
        ("SL2 braided-Lie algebra", Box::new(|| whole("sl2-blie"))),
        ("SL2 Laplacian on functions", Box::new(|| whole("sl2-laplacian"))),
        ("quantum plane", Box::new(|| whole("qplane"))),
        ("fermionic plane Fourier", Box::new(|| whole("fermionic-fourier"))),
        ("anyonic line Fourier", Box::new(|| whole("anyonic-fourier"))),
        ("Hopf and quotient properties", Box::new(hopf_and_quotient)),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let o = run();
        let status = if o.pass { "pass" } else { "FAIL" };
        println!("criterion {:>2}: {status} {name} ({})", i + 1, o.detail);
        failed += usize::from(!o.pass);
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
