//! The acceptance suite: one PASS/FAIL line per criterion with its wall time and budget.
//! Criterion 9 writes the in-process verify-all result and a run of the binary into two
//! directories and compares them byte for byte.

use std::path::Path;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use monadal::hopfmonad::Sampling;
use monadal_cli::pipelines::{write_outcome, Format};
use monadal_cli::verify::{assemble, default_fixtures, run_criterion, Context, CRITERIA};

const BUDGETS: [u64; 8] = [10, 5, 60, 300, 60, 300, 60, 30];

fn read_dir(dir: &Path) -> Vec<(String, Vec<u8>)> {
    let mut files: Vec<(String, Vec<u8>)> = std::fs::read_dir(dir)
        .map(|it| {
            it.filter_map(|e| e.ok())
                .map(|e| (e.file_name().to_string_lossy().into_owned(), std::fs::read(e.path()).unwrap_or_default()))
                .collect()
        })
        .unwrap_or_default();
    files.sort();
    files
}

fn line(k: usize, name: &str, ok: bool, detail: &str, took: Duration, budget: Option<u64>) -> bool {
    let within = budget.is_none_or(|b| took.as_secs_f64() < b as f64);
    let status = if ok && within { "PASS" } else { "FAIL" };
    let budget = budget.map(|b| format!(" (budget {b}s)")).unwrap_or_default();
    println!("{status} criterion {k} {name}: {detail} in {:.2}s{budget}", took.as_secs_f64());
    ok && within
}

fn main() -> ExitCode {
    let ctx = Context::new(default_fixtures(), Sampling::default());
    let mut all = true;
    let mut parts = Vec::new();
    for (k, name) in CRITERIA.iter().enumerate() {
        let start = Instant::now();
        let o = run_criterion(k, &ctx);
        let took = start.elapsed();
        let (p, f) = o.report.counts();
        all &= line(k + 1, name, o.report.passed(), &format!("{p} passed, {f} failed"), took, Some(BUDGETS[k]));
        for c in o.report.failures().take(5) {
            println!("    FAIL {} [{}] {}", c.id, c.location, c.mismatch.clone().unwrap_or_default());
        }
        parts.push(o);
    }

    let start = Instant::now();
    let tmp = Path::new(env!("CARGO_TARGET_TMPDIR")).join("acceptance");
    let (a, b) = (tmp.join("in_process"), tmp.join("binary"));
    let _ = std::fs::remove_dir_all(&tmp);
    let combined = assemble(parts);
    let cov = combined.report.checks.iter().find(|c| c.id == "coverage").map(|c| c.status == monadal::Status::Pass);
    let written = write_outcome(&combined, &a, Format::Text).is_ok();
    let status = Command::new(env!("CARGO_BIN_EXE_monadal"))
        .arg("verify-all")
        .arg("--fixtures")
        .arg(default_fixtures())
        .arg("--out")
        .arg(&b)
        .output();
    let exit_ok = status.as_ref().is_ok_and(|o| o.status.success());
    let (fa, fb) = (read_dir(&a), read_dir(&b));
    let same = written && !fa.is_empty() && fa == fb;
    let detail = format!(
        "{} files, byte-identical {same}, binary exit ok {exit_ok}, coverage {}",
        fa.len(),
        cov.unwrap_or(false)
    );
    all &= line(9, "determinism", same && exit_ok && cov == Some(true), &detail, start.elapsed(), None);

    if all {
        println!("acceptance: all 9 criteria PASS");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: FAIL");
        ExitCode::FAILURE
    }
}
