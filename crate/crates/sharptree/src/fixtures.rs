//! Named test trees, parsed from the edge lists shipped in `fixtures/`.

use crate::tree::WeightedTree;

pub const P5_TEXT: &str = include_str!("../fixtures/p5.txt");
pub const T6_TEXT: &str = include_str!("../fixtures/t6.txt");
pub const T1_TEXT: &str = include_str!("../fixtures/t1.txt");
pub const T2_TEXT: &str = include_str!("../fixtures/t2.txt");
pub const STAR12_TEXT: &str = include_str!("../fixtures/star12.txt");

/// Unit-weight path on five vertices.
pub fn p5() -> WeightedTree {
    WeightedTree::parse(P5_TEXT).expect("p5 fixture parses")
}

/// Unit path 1-2-3-4 with pendants 5 and 6 at vertex 4.
pub fn t6() -> WeightedTree {
    WeightedTree::parse(T6_TEXT).expect("t6 fixture parses")
}

/// Caterpillar with spine 1-2-3 where every spine vertex has a pendant.
pub fn t1() -> WeightedTree {
    WeightedTree::parse(T1_TEXT).expect("t1 fixture parses")
}

/// Like `t1` but vertex 2 has no pendant neighbour.
pub fn t2() -> WeightedTree {
    WeightedTree::parse(T2_TEXT).expect("t2 fixture parses")
}

/// Star with center 3 and edge weights 1 and 2.
pub fn star12() -> WeightedTree {
    WeightedTree::parse(STAR12_TEXT).expect("star12 fixture parses")
}
