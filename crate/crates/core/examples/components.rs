//! Irreducible components of the nilpotent commuting variety, one per
//! distinguished parabolic, for a few root systems.
//!
//! ```text
//! cargo run --release --example components -- B4 E6
//! ```

use nilvar::rootsys::RootSystem;

fn main() -> nilvar::Result<()> {
    let mut types: Vec<String> = std::env::args().skip(1).collect();
    if types.is_empty() {
        types = ["A5", "B4", "C3", "D5", "G2", "F4", "E6"].map(String::from).to_vec();
    }
    for t in types {
        let sys = RootSystem::parse(&t)?;
        let (count, dim) = sys.component_count_and_dim()?;
        assert_eq!(dim, 2 * sys.num_positive() + sys.rank());
        println!("{}: {count} component(s) of dimension {dim}", sys.cartan_type());
        for j in sys.enumerate_distinguished()? {
            let diagram: String = (0..sys.rank()).map(|i| if j.contains(i) { '0' } else { '2' }).collect();
            println!("  J = {:<14} diagram {diagram}", j.to_string());
        }
    }
    Ok(())
}
