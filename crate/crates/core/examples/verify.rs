use tight_brieskorn::verify::{self, Suite};

fn main() -> tight_brieskorn::Result<()> {
    let report = verify::run(Suite::All, 20);
    for c in &report.checks {
        println!("{:<10} {:<40} {}", c.suite, c.name, if c.passed { "ok" } else { "FAIL" });
    }
    if let Some(bad) = report.first_failure() {
        println!("first counterexample: {}", bad.detail);
    }
    Ok(())
}
