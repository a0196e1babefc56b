//! The `p`-map of a restricted Lie algebra from basis data and Jacobson's
//! formula, compared against matrix powers, then tori in nilpotent
//! centralizers and the resulting `dim C(e)`.
//!
//! ```text
//! cargo run --release --example restricted_pmap -- 3
//! ```

use nilvar::classical::Partition;
use nilvar::lie::LieAlgebra;
use nilvar::restricted::{dim_c_table, gl_matrix_p_power, RestrictedAlgebra};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> nilvar::Result<()> {
    let p: u64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(3);
    let g = RestrictedAlgebra::gl(3, p)?;
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..3 {
        let x = g.random_element(&mut rng);
        let px = g.p_power(&x);
        assert_eq!(px, gl_matrix_p_power(&x, 3, p)?);
        println!(
            "x = {x:?}\n  x^[p] = {px:?}\n  nilpotent: {}, semisimple after {} steps",
            g.is_nilpotent(&x),
            g.semisimple_index(&x)
        );
    }

    for lambda in ["3", "2,1", "1,1,1"] {
        let lambda: Partition = lambda.parse()?;
        let z = RestrictedAlgebra::gl_centralizer(&lambda, p)?;
        let search = z.toral_rank_search(1 << 20, 7);
        println!("z(e_{lambda}): dim {}, torus of dim {} (exact: {})", z.dim(), search.witness.len(), search.is_exact());
    }

    println!("dim C(e) in gl(4) over F_{p}:");
    for (lambda, d) in dim_c_table(4, p, 1 << 20, 7)? {
        println!("  {lambda:<10} {}{}", d.value, if d.exact { "" } else { " (upper bound)" });
    }
    Ok(())
}
