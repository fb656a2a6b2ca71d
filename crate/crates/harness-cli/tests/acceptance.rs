//! Acceptance suite: one test per criterion, with the instance counts, size
//! bounds and wall-clock limits pinned. Each test prints a single
//! `AC<n> <campaign>: PASS ...` line (visible with `--nocapture`) and fails
//! loudly otherwise.
//!
//! Run with: cargo test -p harness-cli --test acceptance -- --nocapture

use std::time::{Duration, Instant};

use harness_cli::campaign::run_campaign;
use harness_cli::report::{Status, VerificationReport};

const SEED: u64 = 2024;

fn run_criterion(
    label: &str,
    campaign: &str,
    count: Option<usize>,
    limit: Duration,
) -> VerificationReport {
    let start = Instant::now();
    let report = run_campaign(campaign, SEED, count, None, None).expect("campaign exists");
    let elapsed = start.elapsed();
    let fails = report.count(Status::Fail);
    let inconclusive = report.count(Status::Inconclusive);
    let verdict = if fails == 0 && inconclusive == 0 && elapsed <= limit {
        "PASS"
    } else {
        "FAIL"
    };
    println!(
        "{label} {campaign}: {verdict} ({} instances, {fails} fail, {inconclusive} inconclusive, {elapsed:?} <= {limit:?})",
        report.instance_count(),
    );
    assert_eq!(fails, 0, "{label}: {campaign} recorded failures");
    assert_eq!(
        inconclusive, 0,
        "{label}: {campaign} recorded inconclusive instances"
    );
    assert!(
        elapsed <= limit,
        "{label}: {campaign} took {elapsed:?}, limit {limit:?}"
    );
    report
}

#[test]
fn ac01_greedy_rank_bound_on_weakly_acyclic() {
    let report = run_criterion(
        "AC1",
        "bound-prop1",
        Some(500),
        Duration::from_secs(10),
    );
    assert!(report.instance_count() >= 500);
}

#[test]
fn ac02_tight_rank_family_lengths() {
    run_criterion("AC2", "family-tight", None, Duration::from_secs(1));
}

#[test]
fn ac03_binary_subset_family_lengths() {
    run_criterion("AC3", "family-fig1", None, Duration::from_secs(5));
}

#[test]
fn ac04_large_alphabet_family_lengths() {
    run_criterion("AC4", "family-reviewer", None, Duration::from_secs(5));
}

#[test]
fn ac05_layered_subset_equivalence() {
    let report = run_criterion(
        "AC5",
        "layered-subset",
        Some(200),
        Duration::from_secs(30),
    );
    assert!(report.instance_count() >= 200);
}

#[test]
fn ac06_padding_threshold_equivalence() {
    let report = run_criterion(
        "AC6",
        "padding-maxsync",
        Some(100),
        Duration::from_secs(60),
    );
    assert!(report.instance_count() >= 100);
}

#[test]
fn ac07_independent_set_gadget_exact() {
    // All graphs with p <= 4 plus >= 300 random graphs with p <= 6.
    let report = run_criterion(
        "AC7",
        "maxsync-alphabet",
        Some(300),
        Duration::from_secs(60),
    );
    assert!(report.instance_count() >= 300 + 75);
}

#[test]
fn ac08_binary_independent_set_gadget() {
    run_criterion("AC8", "maxsync-binary", None, Duration::from_secs(60));
}

#[test]
fn ac09_weakly_acyclic_independent_set_gadget() {
    run_criterion("AC9", "maxsync-binary-wa", None, Duration::from_secs(60));
}

#[test]
fn ac10_chromatic_rank_gadgets() {
    // All graphs with p <= 4 plus >= 100 random graphs with p <= 5,
    // both constructions checked per instance.
    let report = run_criterion(
        "AC10",
        "chromatic-rank",
        Some(100),
        Duration::from_secs(60),
    );
    assert!(report.instance_count() >= 100 + 75);
}

#[test]
fn ac11_sat_reductions() {
    // Five reductions on the same instance pool: a seeded grid over every
    // (n, m) in 1..=4 x 1..=4 plus >= 300 random 3-CNFs with n <= 5, m <= 6.
    // The shared wall-clock limit is five minutes; inconclusive counts must
    // be zero (semigroup searches must exhaust).
    let start = Instant::now();
    let mut total = 0;
    for campaign in [
        "sat-subset-sync",
        "sat-careful",
        "sat-intersection",
        "sat-reachability",
        "sat-positive-matrix",
    ] {
        let report =
            run_campaign(campaign, SEED, Some(300), None, None).expect("campaign exists");
        let fails = report.count(Status::Fail);
        let inconclusive = report.count(Status::Inconclusive);
        println!(
            "AC11 {campaign}: {} ({} instances, {fails} fail, {inconclusive} inconclusive)",
            if fails == 0 && inconclusive == 0 { "PASS" } else { "FAIL" },
            report.instance_count(),
        );
        assert_eq!(fails, 0, "AC11: {campaign} recorded failures");
        assert_eq!(inconclusive, 0, "AC11: {campaign} recorded inconclusive instances");
        assert!(report.instance_count() >= 300);
        total += report.instance_count();
    }
    let elapsed = start.elapsed();
    println!("AC11 total: PASS ({total} records, {elapsed:?} <= 300s)");
    assert!(elapsed <= Duration::from_secs(300));
}

#[test]
fn ac12_corollary_matrices_triangular() {
    let report = run_criterion(
        "AC12",
        "sat-triangularity",
        Some(300),
        Duration::from_secs(300),
    );
    // The stated limit is per instance: under a second each.
    let slow = report
        .records
        .iter()
        .filter(|r| r.micros > 1_000_000)
        .count();
    assert_eq!(slow, 0, "AC12: {slow} instances exceeded 1s");
}

#[test]
fn ac13_unary_polynomial_engine() {
    let report = run_criterion(
        "AC13",
        "unary-maxsync",
        Some(500),
        Duration::from_secs(30),
    );
    assert!(report.instance_count() >= 500);
}

#[test]
fn ac14_eulerian_partition_property() {
    let report = run_criterion(
        "AC14",
        "eulerian-partition",
        Some(100),
        Duration::from_secs(60),
    );
    assert!(report.instance_count() >= 100);
}

#[test]
fn ac15_engine_oracle_equivalence() {
    let report = run_criterion(
        "AC15",
        "engine-oracle",
        Some(10_000),
        Duration::from_secs(300),
    );
    assert!(report.instance_count() >= 10_000);
}
