//! Distinguished pairs `(I, J)` grouped by weighted Dynkin diagram. The
//! number of groups is the number of nilpotent orbits.
//!
//! ```text
//! cargo run --release --example bala_carter -- G2
//! ```

use nilvar::rootsys::RootSystem;

fn main() -> nilvar::Result<()> {
    let t = std::env::args().nth(1).unwrap_or_else(|| "F4".into());
    let sys = RootSystem::parse(&t)?;
    let groups = sys.bala_carter_groups()?;
    println!("{}: {} nilpotent orbits", sys.cartan_type(), groups.len());
    for g in &groups {
        let diagram: Vec<String> = g.diagram.iter().map(i64::to_string).collect();
        let pairs: Vec<String> = g.pairs.iter().map(|p| p.to_string()).collect();
        println!("  [{}]  {}", diagram.join(" "), pairs.join(", "));
    }
    Ok(())
}
