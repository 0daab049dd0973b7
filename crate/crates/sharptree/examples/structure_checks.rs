//! Structural dichotomies of group-inverse graphs: the equivalence suite
//! separating stars from everything else, 4-cycle witnesses, the odd-path
//! pattern, and the caterpillar edge-count formula.
//!
//! Run with: cargo run --example structure_checks

use sharptree::tree::WeightedTree;
use sharptree::{fixtures, structure, Result};

fn main() -> Result<()> {
    // For singular trees, four statements rise and fall together: the
    // alternating-path count is n-1, the sharp graph is a tree, the
    // source is a star, and source and sharp graph are isomorphic.
    for (name, tree) in [("star", fixtures::star12()), ("five-path", fixtures::p5())] {
        let report = structure::analyze_structure(&tree)?;
        let four = report.four_conditions.expect("both trees are singular");
        println!(
            "{name}: conditions all {} (sharp has {} edges, 4-cycle: {})",
            four.sharp_is_tree, report.sharp_edge_count, report.has_four_cycle
        );
        assert!(four.all_equal());
    }

    // A concrete 4-cycle in the sharp graph of the five-path.
    let cycle = structure::four_cycle_witness(&fixtures::p5())?.expect("five-path has one");
    let p5 = fixtures::p5();
    let labels: Vec<&str> = cycle.iter().map(|&v| p5.label(v)).collect();
    println!("four-cycle witness in the five-path sharp graph: {labels:?}");

    // Odd paths: the sharp graph contains the path, its edges sit exactly
    // on opposite-parity positions, and nothing is pendant from 5 vertices on.
    for n in [5usize, 7, 9] {
        let text: String = (1..n).map(|i| format!("{} {} 1\n", i, i + 1)).collect();
        let path = WeightedTree::parse(&text)?;
        let r = structure::odd_path_report(&path)?;
        println!(
            "path on {n}: spanning {}, parity iff {}, pendant-free {:?}",
            r.spanning_subtree,
            r.parity_forward && r.parity_converse,
            r.no_pendant
        );
    }

    // Caterpillar edge count: pendants plus adjacent spine products.
    let t1 = fixtures::t1();
    let formula = structure::caterpillar_edge_count(&t1)?;
    let report = structure::analyze_structure(&t1)?;
    println!(
        "caterpillar formula gives {formula} edges; census agrees: {}",
        report.sharp_edge_count
    );
    assert_eq!(formula, report.sharp_edge_count);

    // Degree law: in the sharp graph, each non-pendant vertex has degree
    // equal to its pendant-neighbour count.
    for row in structure::degree_check_class_t(&t1)? {
        println!(
            "vertex {}: {} pendant neighbours, sharp degree {}",
            t1.label(row.vertex),
            row.pendant_count,
            row.sharp_degree
        );
        assert_eq!(row.pendant_count, row.sharp_degree);
    }
    Ok(())
}
