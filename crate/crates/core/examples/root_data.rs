//! Cartan matrices, positive roots and Weyl group orders of the simple types.
//!
//! Run with `cargo run --example root_data`.

use gitloci::SimpleGroup;

fn main() -> gitloci::Result<()> {
    for name in ["A2", "B2", "C3", "D4", "G2", "F4", "E6", "E7", "E8"] {
        let g = SimpleGroup::parse(name)?;
        println!(
            "{name}: det {} |Phi+| {} |W| {}",
            g.cartan_determinant(),
            g.positive_roots().len(),
            g.weyl_group_order()
        );
    }

    let g2 = SimpleGroup::parse("G2")?;
    println!("\nG2 Cartan matrix (row i = <alpha_i^vee, alpha_j>):");
    for row in g2.cartan() {
        println!("  {row:?}");
    }
    println!("G2 positive roots in fundamental-weight coordinates:");
    for r in g2.positive_roots() {
        println!("  {}  coroot {:?}", r.root, r.coroot);
    }
    Ok(())
}
