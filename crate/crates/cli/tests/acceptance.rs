//! One line per acceptance criterion; exits non-zero if any fails.

use std::process::ExitCode;

use quatfiber_cli::acceptance;

fn main() -> ExitCode {
    let mut failed = 0;
    for n in 1..=10 {
        let c = acceptance::run(n);
        println!("{}", c.line());
        if !c.pass {
            failed += 1;
        }
    }
    println!("{} of 10 criteria pass", 10 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
