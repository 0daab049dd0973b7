//! Sign away the negative entries of a group inverse: the constructive
//! signature for trees whose non-pendant vertices all have pendant
//! neighbours, and an exhaustive search certifying a counterexample
//! outside that class.
//!
//! Run with: cargo run --example signature_similarity

use sharptree::rational::format_rational;
use sharptree::signature::{
    apply_signature, build_signature_class_t, entrywise_nonnegative, exhaustive_signature_search,
};
use sharptree::{fixtures, groupinv, Result};

fn main() -> Result<()> {
    // The fixture t1 qualifies: spine 1-2-3, every spine vertex has a
    // pendant neighbour, and all weights are positive.
    let tree = fixtures::t1();
    let signature = build_signature_class_t(&tree)?;
    println!(
        "constructed signature rooted at pendant vertex {}:",
        tree.label(signature.root)
    );
    for (v, (&sign, &count)) in signature.signs.iter().zip(&signature.n_values).enumerate() {
        println!(
            "  vertex {}: {} non-matching edges on the root path, sign {:+}",
            tree.label(v),
            count,
            sign
        );
    }

    let sharp = groupinv::sharp_combinatorial(&tree)?.sharp_matrix;
    let signed = apply_signature(&sharp, &signature)?;
    assert!(entrywise_nonnegative(&signed));
    println!("signed sharp matrix is entrywise non-negative:");
    for e in groupinv::sharp_combinatorial(&tree)?.sharp_graph.edges() {
        println!(
            "  |sharp({}, {})| = {}",
            tree.label(e.u),
            tree.label(e.v),
            format_rational(&signed[(e.u, e.v)])
        );
    }

    // The exhaustive search (first sign fixed positive) agrees.
    let search = exhaustive_signature_search(&sharp)?;
    println!(
        "search scanned {} sign vectors and found one: {}",
        search.vectors_scanned,
        search.signature.is_some()
    );

    // The fixture t6 has a non-pendant vertex without pendant neighbours;
    // no signature works for its group inverse, and the search proves it.
    let t6 = fixtures::t6();
    let sharp6 = groupinv::sharp_combinatorial(&t6)?.sharp_matrix;
    let search6 = exhaustive_signature_search(&sharp6)?;
    assert!(search6.signature.is_none());
    println!(
        "counterexample: all {} sign vectors fail for the second tree",
        search6.vectors_scanned
    );
    Ok(())
}
