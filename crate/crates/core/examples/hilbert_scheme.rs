//! Points of the punctual Hilbert scheme as `GL_r`-orbits of commuting
//! nilpotent pairs with a cyclic vector.
//!
//! ```text
//! cargo run --release --example hilbert_scheme -- 3
//! ```

use nilvar::ffcount::{dimension_estimate, hilbert_point_count, hilbert_report, verify_principal_family};

fn main() -> nilvar::Result<()> {
    let r: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(3);
    let budget = 1 << 26;
    let mut reports = Vec::new();
    for q in [2, 3] {
        let h = hilbert_point_count(r, q, budget)?;
        let fam = verify_principal_family(r, q)?;
        println!("r = {r}, q = {q}: |U| = {}, |GL_r| = {}, {} points", h.triples, h.gl_order, h.points);
        println!("  principal family: {} members, {} distinct points", fam.members, fam.distinct_points);
        reports.push(hilbert_report(r, q, budget)?);
    }
    let fit = dimension_estimate(&reports)?;
    println!("leading exponent {} (r - 1 = {})", fit.exponent, r - 1);
    Ok(())
}
