//! Point counts of nilpotent matrices and commuting pairs over small prime
//! fields, the per-orbit breakdown, and the fitted leading exponent.
//!
//! ```text
//! cargo run --release --example point_counts -- 3
//! ```

use nilvar::ffcount::{self, check_eta, FormGroup, MatSpace, PairMethod};

fn main() -> nilvar::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(2);
    let budget = 1 << 26;
    let primes: &[u64] = if n <= 2 { &[2, 3, 5] } else { &[2, 3] };

    let mut reports = Vec::new();
    for &q in primes {
        let naive = ffcount::count_commuting_nilpotent_pairs(n, q, PairMethod::Naive, budget)?;
        let unip = ffcount::count_unipotent_commuting_pairs(n, q, budget)?;
        println!("q = {q}: {} commuting nilpotent pairs, {} commuting unipotent pairs", naive.count, unip.count);
        for s in ffcount::stratified_pairs(&MatSpace::new(n, q)?, budget)? {
            println!("  orbit {:<8} size {:>6} x {:>5} nilpotents in the centralizer", s.partition.to_string(), s.orbit_size, s.nilpotent_in_centralizer);
        }
        reports.push(naive);
    }
    let fit = ffcount::dimension_estimate(&reports)?;
    println!("leading exponent {} (deviation {:.3}), dim GL_{n} - 1 = {}", fit.exponent, fit.deviation, n * n - 1);

    let eta = check_eta(&MatSpace::new(2, 5)?, FormGroup::Sp2, 100, 1, budget)?;
    println!("Sp_2(F_5): {} unipotent, {} nilpotent, eta bijective and equivariant: {}", eta.unipotent, eta.nilpotent, eta.passed());
    Ok(())
}
