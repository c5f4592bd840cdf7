//! Acceptance suite. Runs without the libtest harness so that each criterion
//! prints exactly one PASS/FAIL line; the process fails if any criterion does.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_traits::{Signed, Zero};
use trimetric::catalog::{self, InequalityId, WeightTriple};
use trimetric::eld;
use trimetric::suite::{self, FuzzConfig, SuiteSummary};
use trimetric::{exact, Exact, ExactTriangle};

const SAMPLES: usize = 1000;
const SEED: u64 = 42;
const RUNTIME_BUDGET: Duration = Duration::from_secs(60);

/// Identity groups whose residuals must be exactly zero.
const EXACT_GROUPS: [&str; 4] = ["bary.", "centers.", "catalog.", "eld."];

fn tri(a: i64, b: i64, c: i64) -> ExactTriangle {
    ExactTriangle::new(exact(a, 1), exact(b, 1), exact(c, 1)).unwrap()
}

struct Outcome {
    ok: bool,
    detail: String,
}

fn check(failures: &mut Vec<String>, label: &str, ok: bool) {
    if !ok {
        failures.push(label.to_string());
    }
}

fn finish(failures: Vec<String>, passing: String) -> Outcome {
    if failures.is_empty() {
        Outcome { ok: true, detail: passing }
    } else {
        Outcome { ok: false, detail: failures.join("; ") }
    }
}

fn group_failures(summary: &SuiteSummary, prefix: &str) -> Vec<String> {
    summary
        .tallies
        .iter()
        .filter(|(name, t)| name.starts_with(prefix) && t.fail > 0)
        .map(|(name, t)| format!("{name}: {} failures", t.fail))
        .collect()
}

fn exact_identities(summary: &SuiteSummary, elapsed: Duration) -> Outcome {
    let mut failures: Vec<String> = EXACT_GROUPS.iter().flat_map(|g| group_failures(summary, g)).collect();
    for g in EXACT_GROUPS {
        check(&mut failures, &format!("group {g} did not pass"), summary.group_passes(g));
    }
    if elapsed > RUNTIME_BUDGET {
        failures.push(format!("runtime {elapsed:.1?} exceeds {RUNTIME_BUDGET:?}"));
    }
    let identities = summary.tallies.keys().filter(|k| EXACT_GROUPS.iter().any(|g| k.starts_with(g))).count();
    finish(failures, format!("{} triangles × {identities} exact identities, residual 0, {elapsed:.1?}", summary.samples))
}

fn golden_345() -> Outcome {
    let t = tri(4, 3, 5);
    let q = exact;
    let mut f = Vec::new();
    check(&mut f, "d_I", eld::d_i(&t) == q(1, 25));
    for (l, v) in [(q(0, 1), q(2, 1)), (q(2, 3), q(1, 9)), (q(1, 1), q(5, 4)), (q(2, 1), q(13, 1))] {
        check(&mut f, &format!("ELD_I({l})"), eld::eld_i(&t, &l) == v && eld::eld_i_direct(&t, &l) == v);
    }
    let axis = eld::axis_of_symmetry(&t).unwrap();
    check(&mut f, "λ*", axis.vertex == q(14, 25) && axis.vertex_direct == q(14, 25));
    check(&mut f, "fundamental", eld::fundamental_bound(&t) == q(-1, 1) && eld::fundamental_via_area(&t) == q(-1, 1));
    check(&mut f, "|HM|²", eld::eld_m(&t, &Exact::zero()) == q(468, 121));
    let ks = eld::kooi_star(&t);
    check(&mut f, "kooi_star", ks.analytic == q(29, 16));
    for label in ["circumcenter_mittenpunkt", "orthocenter_gergonne"] {
        check(&mut f, label, ks.witness(label).is_some_and(|w| w.metric == q(29, 16) && w.residual.is_zero()));
    }
    let cor = eld::eld_corollaries(&t).reciprocal_squares;
    check(&mut f, "corollary (iii)", cor.lhs == q(131, 4) && cor.rhs == q(131, 4));
    finish(f, "d_I=1/25, ELD_I=2,1/9,5/4,13, λ*=14/25, fundamental=−1, |HM|²=468/121, kooi★=29/16 (2 witnesses), 131/4".into())
}

fn cartesian_oracle(summary: &SuiteSummary) -> Outcome {
    let failures = group_failures(summary, "oracle.");
    let checks: usize = summary.tallies.iter().filter(|(k, _)| k.starts_with("oracle.")).map(|(_, t)| t.pass).sum();
    let mut f = failures;
    check(&mut f, "oracle never ran", checks > 0);
    finish(f, format!("{checks} comparisons within relative {:e}", suite::ORACLE_RELATIVE))
}

fn sign_suite(summary: &SuiteSummary) -> Outcome {
    let mut f: Vec<String> = ["sign.", "equality."].iter().flat_map(|g| group_failures(summary, g)).collect();
    let eq = tri(1, 1, 1);
    let slacks = [
        eld::classical_via_eld(&eq).map(|c| (c.name, c.analytic)).to_vec(),
        vec![
            (InequalityId::Weitzenbock, catalog::weitzenbock(&eq).unwrap().analytic),
            (InequalityId::GarfunkelBankoff, catalog::garfunkel_bankoff(&eq).unwrap().analytic),
            (InequalityId::Kooi, catalog::kooi(&eq, &WeightTriple::ones()).unwrap().analytic),
        ],
    ]
    .concat();
    for (name, slack) in slacks {
        check(&mut f, &format!("equilateral {name} slack {slack}"), slack.is_zero());
    }
    for (a, b, c) in [(6, 5, 5), (5, 5, 8), (2, 3, 3), (7, 7, 1)] {
        check(&mut f, &format!("isosceles {a},{b},{c} d_I"), eld::d_i(&tri(a, b, c)).is_zero());
    }
    for (a, b, c) in [(4, 3, 5), (2, 3, 4), (7, 8, 9)] {
        check(&mut f, &format!("scalene {a},{b},{c} d_I"), eld::d_i(&tri(a, b, c)).is_positive());
    }
    let tol = suite::APPROX_TOLERANCE;
    check(&mut f, "Blundon collapses for equilateral", eld::blundon_interval(&eq, tol).collapsed);
    for (a, b, c) in [(6, 5, 5), (4, 3, 5), (1, 2, 2)] {
        check(&mut f, &format!("Blundon collapsed for {a},{b},{c}"), !eld::blundon_interval(&tri(a, b, c), tol).collapsed);
    }
    let passes: usize = summary.tallies.iter().filter(|(k, _)| k.starts_with("sign.") || k.starts_with("equality.")).map(|(_, t)| t.pass).sum();
    finish(f, format!("{passes} sign/equality checks, equilateral/isosceles/collapse cases exact"))
}

fn blundon(summary: &SuiteSummary) -> Outcome {
    let mut f: Vec<String> = Vec::new();
    for name in ["approx.blundon_membership", "sign.blundon_fundamental", "sign.fundamental_bound"] {
        let t = summary.tally(name);
        check(&mut f, &format!("{name}: {} failures of {}", t.fail, t.pass + t.fail), t.fail == 0 && t.pass == summary.samples);
    }
    finish(f, format!("{} triangles inside [s₁², s₂²] within 1e-10, fundamental ≤ 0 exactly", summary.samples))
}

fn axis_theorem(summary: &SuiteSummary) -> Outcome {
    let mut f = group_failures(summary, "theorem.");
    for name in ["theorem.axis_in_range", "theorem.eld_chain", "theorem.obtuse_hio"] {
        check(&mut f, &format!("{name} never ran"), summary.tally(name).pass > 0);
    }
    let eq = eld::eld_corollaries(&tri(1, 1, 1));
    check(&mut f, "equilateral HIO form", eq.obtuse_angle.lhs.is_zero());
    finish(f, format!("λ* ∈ [0, 2/3], ELD_I(2) ≥ ELD_I(1) ≥ ELD_I(2/3), 2(I−H)K(I−O)ᵀ < 0 on {} triangles", summary.samples))
}

fn main() -> ExitCode {
    let cfg = FuzzConfig { samples: SAMPLES, seed: SEED, ..FuzzConfig::default() };
    let start = Instant::now();
    let summary = suite::run(&cfg);
    let elapsed = start.elapsed();

    let criteria = [
        ("1 exact-identity suite", exact_identities(&summary, elapsed)),
        ("2 3-4-5 golden values", golden_345()),
        ("3 Cartesian oracle", cartesian_oracle(&summary)),
        ("4 signs and equality cases", sign_suite(&summary)),
        ("5 Blundon membership", blundon(&summary)),
        ("6 axis of symmetry", axis_theorem(&summary)),
    ];
    let mut all = true;
    for (name, outcome) in &criteria {
        all &= outcome.ok;
        println!("{} criterion {name}: {}", if outcome.ok { "PASS" } else { "FAIL" }, outcome.detail);
    }
    if !summary.failures.is_empty() {
        for failure in summary.failures.iter().take(20) {
            println!("  {} on {}: {}", failure.identity, failure.sample, failure.detail);
        }
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
