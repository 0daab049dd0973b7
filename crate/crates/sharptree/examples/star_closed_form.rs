//! For a star, the group inverse is the adjacency matrix divided by the
//! sum of squared edge weights. Check the closed form against the general
//! routes on a weighted star.
//!
//! Run with: cargo run --example star_closed_form

use sharptree::rational::format_rational;
use sharptree::tree::WeightedTree;
use sharptree::{groupinv, Result};

fn main() -> Result<()> {
    // Center 5, pendant edges with weights 1, 2, 3, 1/2.
    let star = WeightedTree::parse("1 5 1\n2 5 2\n3 5 3\n4 5 1/2")?;

    let closed = groupinv::sharp_star(&star)?;
    println!(
        "star with squared-weight sum p = {}",
        format_rational(&closed.m_value)
    );
    for e in closed.sharp_graph.edges() {
        println!(
            "  sharp edge {} -- {}  weight {}",
            closed.sharp_graph.label(e.u),
            closed.sharp_graph.label(e.v),
            format_rational(&e.weight)
        );
    }

    let combinatorial = groupinv::sharp_combinatorial(&star)?;
    assert_eq!(closed.sharp_matrix, combinatorial.sharp_matrix);
    println!("matching formula reproduces the closed form");

    let factorization = groupinv::sharp_factorization(&star.adjacency_matrix())?;
    assert_eq!(closed.sharp_matrix, factorization);
    println!("factorization oracle reproduces the closed form");

    // The sharp graph of a star has the same shape as the star itself;
    // this fails for non-stars.
    let report = sharptree::structure::analyze_structure(&star)?;
    let four = report.four_conditions.expect("stars are singular");
    assert!(four.sharp_is_tree && four.sharp_isomorphic_underlying);
    println!("sharp graph of the star is again a star");

    assert!(groupinv::sharp_star(&WeightedTree::parse("1 2 1\n2 3 1\n3 4 1")?).is_err());
    println!("non-star input is rejected by the closed form");
    Ok(())
}
