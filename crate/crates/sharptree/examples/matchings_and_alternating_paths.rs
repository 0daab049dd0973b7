//! Enumerate the maximum matchings of a weighted caterpillar, evaluate
//! the weight sums behind the group-inverse formula, and list the
//! maximally matchable vertex pairs.
//!
//! Run with: cargo run --example matchings_and_alternating_paths

use sharptree::rational::format_rational;
use sharptree::{fixtures, matching, Result};

fn main() -> Result<()> {
    let tree = fixtures::t1();
    println!("tree edges:");
    print!("{}", tree.to_edge_list());

    let summary = matching::maximum_matchings(&tree)?;
    println!(
        "\nmatching number {}, {} maximum matchings, m = {}",
        summary.matching_number,
        summary.matchings.len(),
        format_rational(&summary.m_value)
    );
    for m in &summary.matchings {
        let edges: Vec<String> = m
            .edge_indices()
            .iter()
            .map(|&e| {
                let edge = &tree.edges()[e];
                format!("{}{}", tree.label(edge.u), tree.label(edge.v))
            })
            .collect();
        println!(
            "  {{{}}} with weight product {}",
            edges.join(", "),
            format_rational(m.weight_product())
        );
    }

    println!("\nmaximally matchable pairs (path length in edges):");
    for p in matching::alternating_paths_with(&tree, &summary) {
        println!(
            "  ({}, {}) at distance {}",
            tree.label(p.endpoints.0),
            tree.label(p.endpoints.1),
            p.length
        );
    }

    // Full record for one pair: value data for the sharp entry.
    let v6 = tree.labels().iter().position(|l| l == "6").unwrap();
    let v7 = tree.labels().iter().position(|l| l == "7").unwrap();
    let record = matching::matchable_pair_with(&tree, &summary, v6, v7);
    println!(
        "\npair (6, 7): alpha = {}, alpha-bars = [{}], mu = {}, sharp weight = {}",
        format_rational(&record.alpha_path),
        record
            .alpha_bars
            .iter()
            .map(format_rational)
            .collect::<Vec<_>>()
            .join(", "),
        format_rational(&record.mu),
        format_rational(&(record.mu.clone() / summary.m_value.clone()))
    );

    // Every pendant edge belongs to some maximum matching.
    let pendant_edges: Vec<usize> = (0..tree.edge_count())
        .filter(|&e| tree.is_pendant_edge(e))
        .collect();
    for e in pendant_edges {
        let m = matching::pendant_edge_in_some_matching(&tree, e);
        assert!(m.contains_edge(e));
    }
    println!("\nevery pendant edge lies in at least one maximum matching");
    Ok(())
}
