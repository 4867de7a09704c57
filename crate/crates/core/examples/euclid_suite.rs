//! Runs every proposition checker on seeded random instances. Pass a seed and an
//! instance count to override the defaults.

use proportionals::euclid::run_suite;

fn main() {
    let mut args = std::env::args().skip(1);
    let seed = args.next().and_then(|s| s.parse().ok()).unwrap_or(42);
    let instances = args.next().and_then(|s| s.parse().ok()).unwrap_or(200);
    let report = run_suite(seed, instances);
    for p in &report.propositions {
        println!(
            "{:<14} {:<60} {}/{} valid, {}/{} perturbed caught",
            p.proposition, p.statement, p.valid_passed, p.instances, p.perturbed_detected, p.instances
        );
    }
    println!(
        "seed {seed}: {}",
        if report.all_hold() {
            "all propositions hold"
        } else {
            "failures"
        }
    );
}
