//! Parse edge-list documents, validate them, and classify the resulting
//! trees: pendant structure, corona and caterpillar shapes, stars, and
//! singularity of the adjacency matrix.
//!
//! Run with: cargo run --example classify_and_parse

use sharptree::tree::WeightedTree;
use sharptree::{fixtures, Result};

fn describe(name: &str, tree: &WeightedTree) {
    let profile = tree.classify();
    let non_pendant: Vec<&str> = profile
        .non_pendant_vertices
        .iter()
        .map(|&v| tree.label(v))
        .collect();
    println!(
        "{name}: {} vertices, singular: {}, member: {}, corona: {}, caterpillar: {}, star: {}",
        tree.vertex_count(),
        tree.is_singular(),
        profile.is_member,
        profile.is_corona,
        profile.is_caterpillar,
        profile.is_star
    );
    println!(
        "  non-pendant vertices {:?} with pendant counts {:?}",
        non_pendant, profile.pendant_counts
    );
    let (even, odd) = tree.bipartition();
    println!(
        "  bipartition: {:?} / {:?}",
        even.iter().map(|&v| tree.label(v)).collect::<Vec<_>>(),
        odd.iter().map(|&v| tree.label(v)).collect::<Vec<_>>()
    );
}

fn main() -> Result<()> {
    // Weights may be integers, fractions, or finite decimals; comments
    // and a vertex-order header are allowed.
    let custom = WeightedTree::parse(
        "# a weighted spider\n\
         vertices c a b d\n\
         c a 1/2\n\
         c b 0.25\n\
         c d -3\n",
    )?;
    describe("spider", &custom);

    describe("caterpillar fixture", &fixtures::t1());
    describe("near-miss fixture", &fixtures::t2());
    describe("star fixture", &fixtures::star12());

    // Corona trees attach one pendant to every base vertex.
    let corona = WeightedTree::parse("1 2 1\n1 3 1\n2 4 1")?;
    describe("corona of an edge", &corona);

    // Validation failures carry precise errors.
    for bad in ["1 2 1\n2 3 1\n3 1 1", "1 2 0", "1 2 one"] {
        match WeightedTree::parse(bad) {
            Err(e) => println!("rejected {:?}: {e}", bad.replace('\n', "; ")),
            Ok(_) => unreachable!("invalid input accepted"),
        }
    }
    Ok(())
}
