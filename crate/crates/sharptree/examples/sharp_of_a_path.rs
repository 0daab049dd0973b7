//! Compute the group inverse of the unit-weight path on five vertices
//! three independent ways and show they agree exactly.
//!
//! Run with: cargo run --example sharp_of_a_path

use sharptree::rational::format_rational;
use sharptree::tree::WeightedTree;
use sharptree::{groupinv, Result};

fn main() -> Result<()> {
    let path = WeightedTree::parse("1 2 1\n2 3 1\n3 4 1\n4 5 1")?;
    let adjacency = path.adjacency_matrix();

    let combinatorial = groupinv::sharp_combinatorial(&path)?;
    let factorization = groupinv::sharp_factorization(&adjacency)?;
    let block = groupinv::sharp_bipartite_block(&path)?;

    println!("group inverse of the unit five-path (matching formula):");
    for e in combinatorial.sharp_graph.edges() {
        println!(
            "  {} -- {}  weight {}",
            combinatorial.sharp_graph.label(e.u),
            combinatorial.sharp_graph.label(e.v),
            format_rational(&e.weight)
        );
    }
    println!("normalizer m = {}", format_rational(&combinatorial.m_value));

    assert_eq!(combinatorial.sharp_matrix, factorization);
    assert_eq!(combinatorial.sharp_matrix, block);
    println!("factorization and bipartite block routes agree bit-exactly");

    assert!(groupinv::verify_axioms(
        &adjacency,
        &combinatorial.sharp_matrix
    ));
    println!("AXA = A, XAX = X, AX = XA hold exactly");

    // Applying the sharp twice restores the adjacency matrix.
    assert_eq!(groupinv::sharp_factorization(&factorization)?, adjacency);
    println!("sharp of the sharp restores the adjacency matrix");
    Ok(())
}
