//! For every Jordan type that is not almost distinguished, builds a
//! commuting nilpotent `ẑ` whose Jordan type is not dominated by that of `e`.
//!
//! ```text
//! cargo run --release --example witnesses -- 6
//! ```

use nilvar::classical::{find_witness, is_valid_jordan_type, Form, Partition};
use nilvar::field::PrimeField;

fn main() -> nilvar::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(6);
    let f = PrimeField::new(17)?;
    for form in [Form::None, Form::Orthogonal, Form::Symplectic] {
        println!("{form:?}, n = {n}");
        for lambda in Partition::all(n) {
            if !is_valid_jordan_type(&lambda, form) {
                continue;
            }
            match find_witness(&f, &lambda, form)? {
                None => println!("  {:<14} almost distinguished", lambda.to_string()),
                Some(w) => println!(
                    "  {:<14} {:?}: zhat of type {} ({})",
                    lambda.to_string(),
                    w.kind,
                    w.partition_zhat,
                    if w.checks.all_pass() { "checks pass" } else { "CHECK FAILED" }
                ),
            }
        }
    }
    Ok(())
}
