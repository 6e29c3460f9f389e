//! Runs every acceptance criterion and prints one line per criterion.
//! Set SUPERKLR_STRICT=1 to exit nonzero when a criterion fails.

use std::time::Instant;

fn main() {
    let seed = std::env::var("SUPERKLR_SEED")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(2024);
    let mut failed = 0;
    for id in 1..=superklr::verify::COUNT {
        let start = Instant::now();
        let line = match superklr::verify::run(id, seed) {
            Ok(r) => {
                if !r.passed {
                    failed += 1;
                }
                let mut s = format!(
                    "{} AC{id:<2} {} ({} checks, {} failed, {:.1}s): {}",
                    if r.passed { "PASS" } else { "FAIL" },
                    r.title,
                    r.checks,
                    r.failed,
                    start.elapsed().as_secs_f64(),
                    r.detail
                );
                for f in &r.failures {
                    s.push_str(&format!("\n       {f}"));
                }
                s
            }
            Err(e) => {
                failed += 1;
                format!("FAIL AC{id:<2} error: {e}")
            }
        };
        println!("{line}");
    }
    println!("{} of {} criteria passed", superklr::verify::COUNT as usize - failed, superklr::verify::COUNT);
    if failed > 0 && std::env::var("SUPERKLR_STRICT").is_ok_and(|v| v == "1") {
        std::process::exit(1);
    }
}
