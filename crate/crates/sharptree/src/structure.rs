//! Structural facts about the group-inverse graph, as executable checks:
//! connectivity, bipartiteness, the star equivalence suite, odd-path
//! structure, 4-cycle witnesses, and degree laws for trees whose
//! non-pendant vertices all have pendant neighbours.

use crate::error::{Error, Result};
use crate::groupinv::{self, GroupInverseWitness};
use crate::matching;
use crate::tree::WeightedTree;

/// Upper bound on the order for the exact isomorphism search.
pub const ISOMORPHISM_MAX_VERTICES: usize = 12;

/// The four equivalent statements for a singular weighted tree: the
/// alternating-path count is n-1, the group-inverse graph is a tree, the
/// source is a star, and the underlying graphs are isomorphic.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FourConditions {
    pub alt_path_count_is_n_minus_1: bool,
    pub sharp_is_tree: bool,
    pub is_star: bool,
    pub sharp_isomorphic_underlying: bool,
}

impl FourConditions {
    pub fn all_equal(&self) -> bool {
        let v = self.alt_path_count_is_n_minus_1;
        self.sharp_is_tree == v && self.is_star == v && self.sharp_isomorphic_underlying == v
    }
}

/// Structure report for a tree's group-inverse graph.
#[derive(Debug, Clone)]
pub struct StructureReport {
    pub sharp_connected: bool,
    pub sharp_bipartite: bool,
    pub sharp_is_tree: bool,
    pub sharp_edge_count: usize,
    /// Populated only for singular trees, matching the hypothesis of the
    /// equivalence.
    pub four_conditions: Option<FourConditions>,
    pub has_four_cycle: bool,
    /// A witnessing 4-cycle `[a, x, b, y]`, when one exists.
    pub four_cycle: Option<[usize; 4]>,
    /// Per-vertex degree in the group-inverse graph.
    pub degree_table: Vec<usize>,
}

/// Compute the structure report. Requires n <= 12 for singular trees
/// (the isomorphism search is capped there).
pub fn analyze_structure(tree: &WeightedTree) -> Result<StructureReport> {
    analyze_structure_capped(tree, matching::DEFAULT_MATCHING_CAP)
}

pub fn analyze_structure_capped(tree: &WeightedTree, cap: usize) -> Result<StructureReport> {
    let witness = groupinv::sharp_combinatorial_capped(tree, cap)?;
    analyze_structure_of(tree, &witness)
}

/// Structure report from an already-computed group inverse.
pub fn analyze_structure_of(
    tree: &WeightedTree,
    witness: &GroupInverseWitness,
) -> Result<StructureReport> {
    let n = tree.vertex_count();
    let sg = &witness.sharp_graph;
    let sharp_connected = sg.is_connected();
    let sharp_bipartite = sg.two_color().is_some();
    let sharp_edge_count = sg.edge_count();
    let sharp_is_tree = sharp_connected && sharp_edge_count == n.saturating_sub(1);
    let four_cycle = sg.find_four_cycle();
    let four_conditions = if tree.is_singular() {
        let is_star = tree.classify().is_star;
        let iso = underlying_isomorphic(
            n,
            &tree.edges().iter().map(|e| (e.u, e.v)).collect::<Vec<_>>(),
            &sg.edges().iter().map(|e| (e.u, e.v)).collect::<Vec<_>>(),
        )?;
        Some(FourConditions {
            alt_path_count_is_n_minus_1: sharp_edge_count == n - 1,
            sharp_is_tree,
            is_star,
            sharp_isomorphic_underlying: iso,
        })
    } else {
        None
    };
    Ok(StructureReport {
        sharp_connected,
        sharp_bipartite,
        sharp_is_tree,
        sharp_edge_count,
        four_conditions,
        has_four_cycle: four_cycle.is_some(),
        four_cycle,
        degree_table: sg.degrees(),
    })
}

/// Checks on the group inverse of an odd path: the path is a spanning
/// subtree, edges sit exactly on opposite-parity position pairs, and (for
/// at least five vertices) no vertex is pendant.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OddPathReport {
    /// Every consecutive position pair is an edge of the inverse graph.
    pub spanning_subtree: bool,
    /// Inverse edges imply odd position sum.
    pub parity_forward: bool,
    /// Odd position sum implies an inverse edge.
    pub parity_converse: bool,
    /// Minimum inverse degree is at least two; `None` for the
    /// three-vertex path, where the claim does not apply.
    pub no_pendant: Option<bool>,
}

/// Evaluate the odd-path checks. Errors with `NotOddPath` unless the tree
/// is a path on an odd number (at least three) of vertices.
pub fn odd_path_report(tree: &WeightedTree) -> Result<OddPathReport> {
    let n = tree.vertex_count();
    if !tree.is_path() || n.is_multiple_of(2) || n < 3 {
        return Err(Error::NotOddPath);
    }
    // Positions 1..=n along the path, starting from the lower-indexed end.
    let ends: Vec<usize> = (0..n).filter(|&v| tree.degree(v) == 1).collect();
    let start = ends[0];
    let mut position = vec![0usize; n];
    let mut prev = usize::MAX;
    let mut cur = start;
    for pos in 1..=n {
        position[cur] = pos;
        let next = tree
            .neighbors(cur)
            .iter()
            .map(|&(w, _)| w)
            .find(|&w| w != prev);
        if let Some(w) = next {
            prev = cur;
            cur = w;
        }
    }
    let witness = groupinv::sharp_combinatorial(tree)?;
    let sg = &witness.sharp_graph;
    let spanning_subtree = tree
        .edges()
        .iter()
        .all(|e| sg.edge_index_between(e.u, e.v).is_some());
    let parity_forward = sg
        .edges()
        .iter()
        .all(|e| (position[e.u] + position[e.v]) % 2 == 1);
    let mut parity_converse = true;
    for i in 0..n {
        for j in (i + 1)..n {
            if (position[i] + position[j]) % 2 == 1 && sg.edge_index_between(i, j).is_none() {
                parity_converse = false;
            }
        }
    }
    let no_pendant = if n >= 5 {
        Some((0..n).all(|v| sg.degree(v) >= 2))
    } else {
        None
    };
    Ok(OddPathReport {
        spanning_subtree,
        parity_forward,
        parity_converse,
        no_pendant,
    })
}

/// Edge count of the group-inverse graph of a caterpillar whose
/// non-pendant vertices all have pendant neighbours: the number of
/// pendant vertices plus the sum of adjacent spine products.
pub fn caterpillar_edge_count(tree: &WeightedTree) -> Result<usize> {
    let profile = tree.classify();
    if !profile.is_member {
        return Err(Error::NotApplicable(
            "every non-pendant vertex needs a pendant neighbour".into(),
        ));
    }
    if profile.is_star {
        return Err(Error::NotApplicable("the formula excludes stars".into()));
    }
    if !profile.is_caterpillar {
        return Err(Error::NotApplicable("not a caterpillar".into()));
    }
    let spine = tree.spine().expect("caterpillar has an ordered spine");
    let pendant_count = tree.vertex_count() - spine.len();
    let pendants_at = |v: usize| {
        tree.neighbors(v)
            .iter()
            .filter(|&&(w, _)| tree.is_pendant(w))
            .count()
    };
    let cross: usize = spine
        .windows(2)
        .map(|w| pendants_at(w[0]) * pendants_at(w[1]))
        .sum();
    Ok(pendant_count + cross)
}

/// One row of the degree law table: a non-pendant vertex, its pendant
/// neighbour count, and its degree in the group-inverse graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeCheckRow {
    pub vertex: usize,
    pub pendant_count: usize,
    pub sharp_degree: usize,
}

/// For trees whose non-pendant vertices all have pendant neighbours:
/// tabulate each non-pendant vertex's pendant count against its degree in
/// the group-inverse graph (the two agree).
pub fn degree_check_class_t(tree: &WeightedTree) -> Result<Vec<DegreeCheckRow>> {
    let profile = tree.classify();
    if !profile.is_member {
        return Err(Error::NotInClassT);
    }
    let witness = groupinv::sharp_combinatorial(tree)?;
    Ok(profile
        .non_pendant_vertices
        .iter()
        .zip(&profile.pendant_counts)
        .map(|(&v, &t)| DegreeCheckRow {
            vertex: v,
            pendant_count: t,
            sharp_degree: witness.sharp_graph.degree(v),
        })
        .collect())
}

/// A 4-cycle of the group-inverse graph, when one exists.
///
/// First tries the constructive route: a length-three alternating path
/// whose middle (non-matching) edge belongs to another maximum matching
/// yields the cycle made of its four vertices. Otherwise scans the
/// group-inverse graph directly.
pub fn four_cycle_witness(tree: &WeightedTree) -> Result<Option<[usize; 4]>> {
    let summary = matching::maximum_matchings(tree)?;
    let n = tree.vertex_count();
    let edge_in_some_matching: Vec<bool> = (0..tree.edge_count())
        .map(|e| summary.matchings.iter().any(|m| m.contains_edge(e)))
        .collect();
    for i in 0..n {
        for j in (i + 1)..n {
            if tree.distance(i, j) != 3 {
                continue;
            }
            let record = matching::matchable_pair_with(tree, &summary, i, j);
            if !record.is_matchable() {
                continue;
            }
            let path = tree.path_vertices(i, j);
            let middle = tree
                .edge_index_between(path[1], path[2])
                .expect("interior path edge");
            if edge_in_some_matching[middle] {
                return Ok(Some([path[0], path[1], path[2], path[3]]));
            }
        }
    }
    let witness = groupinv::sharp_from_summary(tree, &summary);
    Ok(witness.sharp_graph.find_four_cycle())
}

/// Exact isomorphism of two simple graphs on the same vertex count, by
/// degree refinement plus backtracking. Capped at
/// [`ISOMORPHISM_MAX_VERTICES`] vertices.
pub fn underlying_isomorphic(
    n: usize,
    edges_a: &[(usize, usize)],
    edges_b: &[(usize, usize)],
) -> Result<bool> {
    if n > ISOMORPHISM_MAX_VERTICES {
        return Err(Error::ResourceLimit(format!(
            "isomorphism search capped at {ISOMORPHISM_MAX_VERTICES} vertices, got {n}"
        )));
    }
    if edges_a.len() != edges_b.len() {
        return Ok(false);
    }
    let adj = |edges: &[(usize, usize)]| {
        let mut m = vec![vec![false; n]; n];
        for &(u, v) in edges {
            m[u][v] = true;
            m[v][u] = true;
        }
        m
    };
    let adj_a = adj(edges_a);
    let adj_b = adj(edges_b);
    // Iterated neighbourhood-colour refinement.
    let refine = |adj: &[Vec<bool>]| {
        let mut color: Vec<u64> = (0..n)
            .map(|v| adj[v].iter().filter(|&&x| x).count() as u64)
            .collect();
        for _ in 0..n {
            let mut next: Vec<(u64, Vec<u64>)> = (0..n)
                .map(|v| {
                    let mut nbr: Vec<u64> =
                        (0..n).filter(|&w| adj[v][w]).map(|w| color[w]).collect();
                    nbr.sort_unstable();
                    (color[v], nbr)
                })
                .collect();
            let mut sorted: Vec<&(u64, Vec<u64>)> = next.iter().collect();
            sorted.sort();
            sorted.dedup();
            let rank: std::collections::HashMap<&(u64, Vec<u64>), u64> = sorted
                .iter()
                .enumerate()
                .map(|(i, k)| (*k, i as u64))
                .collect();
            let new_color: Vec<u64> = next.iter().map(|k| rank[k]).collect();
            if new_color == color {
                break;
            }
            color = new_color;
            next.clear();
        }
        color
    };
    let color_a = refine(&adj_a);
    let color_b = refine(&adj_b);
    let mut hist_a = color_a.clone();
    let mut hist_b = color_b.clone();
    hist_a.sort_unstable();
    hist_b.sort_unstable();
    if hist_a != hist_b {
        return Ok(false);
    }
    // Backtracking assignment respecting colours.
    struct Search<'a> {
        n: usize,
        adj_a: &'a [Vec<bool>],
        adj_b: &'a [Vec<bool>],
        color_a: &'a [u64],
        color_b: &'a [u64],
        mapping: Vec<usize>,
        used: Vec<bool>,
    }
    impl Search<'_> {
        fn assign(&mut self, v: usize) -> bool {
            if v == self.n {
                return true;
            }
            for w in 0..self.n {
                if self.used[w] || self.color_a[v] != self.color_b[w] {
                    continue;
                }
                let consistent = (0..v).all(|u| self.adj_a[u][v] == self.adj_b[self.mapping[u]][w]);
                if consistent {
                    self.mapping[v] = w;
                    self.used[w] = true;
                    if self.assign(v + 1) {
                        return true;
                    }
                    self.mapping[v] = usize::MAX;
                    self.used[w] = false;
                }
            }
            false
        }
    }
    let mut search = Search {
        n,
        adj_a: &adj_a,
        adj_b: &adj_b,
        color_a: &color_a,
        color_b: &color_b,
        mapping: vec![usize::MAX; n],
        used: vec![false; n],
    };
    Ok(search.assign(0))
}
