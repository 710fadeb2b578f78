//! Acceptance suite: one pass/fail line per criterion, then the binary's own
//! `verify-paper` run. Runs without the libtest harness so the lines are
//! always printed.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use seshadri_cli::verify::run_all;

const BUDGET: Duration = Duration::from_secs(60);

fn main() -> ExitCode {
    let started = Instant::now();
    let results = run_all();
    let mut ok = true;
    for r in &results {
        let verdict = if r.passed() { "pass" } else { "FAIL" };
        println!("criterion {}: {verdict} - {} ({} checks)", r.id, r.title, r.checks.len());
        if let Some(e) = &r.error {
            println!("    error: {e}");
        }
        for c in r.checks.iter().filter(|c| !c.passed) {
            println!("    {}: expected {}, actual {}", c.name, c.expected, c.actual);
        }
        ok &= r.passed();
    }
    let elapsed = started.elapsed();
    let in_time = elapsed < BUDGET;
    println!("suite time: {:.1}s ({})", elapsed.as_secs_f64(), if in_time { "pass" } else { "FAIL" });
    ok &= in_time;

    let started = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_seshadri")).arg("verify-paper").output();
    let binary_ok = match &out {
        Ok(o) => o.status.code() == Some(0) && started.elapsed() < BUDGET,
        Err(_) => false,
    };
    println!("verify-paper binary: {} (exit {:?})", if binary_ok { "pass" } else { "FAIL" }, out.ok().and_then(|o| o.status.code()));
    ok &= binary_ok;

    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
