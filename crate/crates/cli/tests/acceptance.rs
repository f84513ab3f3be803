//! Runs the ten acceptance criteria, printing one line per criterion, and
//! exits non-zero if any fails.

use std::process::ExitCode;
use std::time::Instant;

use configpair_cli::selftest::{run_one, CRITERIA};

fn main() -> ExitCode {
    let mut failed = 0;
    for n in 1..=CRITERIA.len() {
        let start = Instant::now();
        let r = run_one(n);
        println!("{r} ({:.1}s)", start.elapsed().as_secs_f64());
        failed += usize::from(!r.passed);
    }
    println!("{} of {} criteria passed", CRITERIA.len() - failed, CRITERIA.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
