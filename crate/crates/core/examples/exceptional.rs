//! Runs the exceptional certificates and prints every check.
//!
//! ```text
//! cargo run --release --example exceptional -- e8p7
//! ```

use std::time::Instant;

use nilvar::chevalley::scenarios::Scenario;

fn main() -> nilvar::Result<()> {
    let wanted: Vec<Scenario> = match std::env::args().nth(1) {
        Some(s) => vec![s.parse()?],
        None => Scenario::ALL.to_vec(),
    };
    for scenario in wanted {
        let start = Instant::now();
        let cert = scenario.run()?;
        println!("{scenario} over F_{} ({:.1?})", cert.p, start.elapsed());
        for check in &cert.checks {
            let mark = if check.pass { "ok  " } else { "FAIL" };
            match &check.detail {
                Some(d) => println!("  {mark} {} [{d}]", check.name),
                None => println!("  {mark} {}", check.name),
            }
        }
        println!("  => {}", if cert.passed() { "all checks pass" } else { "FAILED" });
    }
    Ok(())
}
