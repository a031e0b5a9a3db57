//! Runs every catalog preset and prints one line per report.
//!
//! cargo run --release -p paramlap-core --example suite

use paramlap_core::{default_presets, registry::g9, run_all, QuadratureConfig};

fn main() {
    let cfg = QuadratureConfig::default();
    let start = std::time::Instant::now();
    let mut last = String::new();
    let reports = run_all(&default_presets(), &cfg, |r| {
        if r.id != last {
            last = r.id.clone();
        }
        println!(
            "{:14} {:7} max_rel_err={:11} cost={:9} {}",
            r.id,
            r.verdict.name(),
            g9(r.max_rel_err),
            r.oracle_cost,
            if r.degraded { "DEGRADED" } else { "" }
        );
    })
    .unwrap_or_else(|e| {
        eprintln!("suite failed: {e}");
        std::process::exit(1);
    });
    let fails = reports.iter().filter(|r| r.verdict.name() == "FAIL").count();
    println!(
        "{} reports, {} FAIL, {:.1} s",
        reports.len(),
        fails,
        start.elapsed().as_secs_f64()
    );
}
