//! Maximum matchings, alternating paths, and the weight sums built on them.
//!
//! A matching is a set of pairwise vertex-disjoint edges; a maximum
//! matching has maximum cardinality. For a maximum matching M, a path is
//! alternating when its edges lie alternately in and out of M with both
//! end edges in M; a vertex pair is maximally matchable when its unique
//! tree path is alternating for at least one maximum matching. These
//! notions drive the group-inverse formula: for a matchable pair,
//! `mu = alpha * sum(alpha_bar^2)` over witnessing matchings, and the
//! global normalizer is `m = sum(alpha(M)^2)` over all maximum matchings.

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::tree::WeightedTree;
use num_traits::{One, Zero};

/// Default cap on the number of maximum matchings enumerated.
pub const DEFAULT_MATCHING_CAP: usize = 1_000_000;

/// A set of pairwise disjoint tree edges with its weight product.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    edge_indices: Vec<usize>,
    weight_product: Rational,
}

impl Matching {
    fn new(tree: &WeightedTree, mut edge_indices: Vec<usize>) -> Self {
        edge_indices.sort_unstable();
        let weight_product = edge_indices
            .iter()
            .fold(Rational::one(), |acc, &e| acc * &tree.edges()[e].weight);
        Self {
            edge_indices,
            weight_product,
        }
    }

    /// Member edges as indices into the host tree's edge list, ascending.
    pub fn edge_indices(&self) -> &[usize] {
        &self.edge_indices
    }

    pub fn len(&self) -> usize {
        self.edge_indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edge_indices.is_empty()
    }

    pub fn contains_edge(&self, edge_idx: usize) -> bool {
        self.edge_indices.binary_search(&edge_idx).is_ok()
    }

    /// Product of the member edge weights (1 for the empty matching).
    pub fn weight_product(&self) -> &Rational {
        &self.weight_product
    }
}

/// The complete enumeration of maximum matchings of a tree.
#[derive(Debug, Clone)]
pub struct MatchingSummary {
    pub matching_number: usize,
    /// Every maximum matching, in canonical (lexicographic edge-set) order.
    pub matchings: Vec<Matching>,
    /// Sum of squared weight products over all maximum matchings; always
    /// positive.
    pub m_value: Rational,
    /// Per-vertex count of alternating paths starting there; equals the
    /// vertex degree in the group-inverse graph.
    pub alternating_census: Vec<usize>,
}

/// One maximally matchable (or not) vertex pair with its weight data.
#[derive(Debug, Clone)]
pub struct MatchablePairRecord {
    pub pair: (usize, usize),
    /// Indices into `MatchingSummary::matchings` of the witnessing
    /// maximum matchings; empty iff the pair is not maximally matchable.
    pub witnesses: Vec<usize>,
    /// Signed product of the path edge weights: positive sign for path
    /// length 1 mod 4, negative for 3 mod 4; zero for non-matchable pairs.
    pub alpha_path: Rational,
    /// Per-witness product of matching edge weights off the path.
    pub alpha_bars: Vec<Rational>,
    /// `alpha_path * sum(alpha_bar^2)`; zero for non-matchable pairs.
    pub mu: Rational,
    /// Edge count of the unique tree path between the endpoints.
    pub path_length: usize,
}

impl MatchablePairRecord {
    pub fn is_matchable(&self) -> bool {
        !self.witnesses.is_empty()
    }
}

/// A maximally matchable pair together with its path length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlternatingPath {
    pub endpoints: (usize, usize),
    pub length: usize,
}

/// Matching number of a tree via the leaf-first greedy, which is exact on
/// forests.
pub fn matching_number(tree: &WeightedTree) -> usize {
    greedy_forest_matching(
        tree.vertex_count(),
        &(0..tree.edge_count()).collect::<Vec<_>>(),
        tree,
    )
    .len()
}

/// One maximum matching (the greedy one), without full enumeration.
pub fn one_maximum_matching(tree: &WeightedTree) -> Matching {
    let edges = greedy_forest_matching(
        tree.vertex_count(),
        &(0..tree.edge_count()).collect::<Vec<_>>(),
        tree,
    );
    Matching::new(tree, edges)
}

/// Exact maximum matching of the subforest spanned by `edge_pool`,
/// by repeatedly matching a leaf edge and deleting its endpoints.
fn greedy_forest_matching(n: usize, edge_pool: &[usize], tree: &WeightedTree) -> Vec<usize> {
    let mut deg = vec![0usize; n];
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &e in edge_pool {
        let edge = &tree.edges()[e];
        deg[edge.u] += 1;
        deg[edge.v] += 1;
        incident[edge.u].push(e);
        incident[edge.v].push(e);
    }
    let mut alive = vec![true; n];
    let mut edge_alive: std::collections::HashSet<usize> = edge_pool.iter().copied().collect();
    let mut queue: Vec<usize> = (0..n).filter(|&v| deg[v] == 1).collect();
    let mut picked = Vec::new();
    while let Some(v) = queue.pop() {
        if !alive[v] || deg[v] != 1 {
            continue;
        }
        let &e = incident[v]
            .iter()
            .find(|&&e| edge_alive.contains(&e))
            .expect("degree-one vertex has a live edge");
        let w = tree.edges()[e].other(v);
        picked.push(e);
        for &x in [v, w].iter() {
            alive[x] = false;
            for &f in &incident[x] {
                if edge_alive.remove(&f) {
                    let other = tree.edges()[f].other(x);
                    deg[other] -= 1;
                    if deg[other] == 1 && alive[other] {
                        queue.push(other);
                    }
                }
            }
            deg[x] = 0;
        }
    }
    picked.sort_unstable();
    picked
}

/// Enumerate every maximum matching with the default cap.
pub fn maximum_matchings(tree: &WeightedTree) -> Result<MatchingSummary> {
    maximum_matchings_capped(tree, DEFAULT_MATCHING_CAP)
}

/// Enumerate every maximum matching; `Error::ResourceLimit` when more
/// than `cap` maximum matchings exist.
///
/// A single-vertex tree has the empty matching as its unique maximum
/// matching, with weight product 1.
pub fn maximum_matchings_capped(tree: &WeightedTree, cap: usize) -> Result<MatchingSummary> {
    let target = matching_number(tree);
    let n = tree.vertex_count();
    let mut found: Vec<Vec<usize>> = Vec::new();
    let mut chosen: Vec<usize> = Vec::new();
    let mut used = vec![false; n];
    // Depth-first branch over edges in canonical order, pruned by the
    // exact matching number of the untouched remainder.
    fn dfs(
        tree: &WeightedTree,
        idx: usize,
        target: usize,
        cap: usize,
        chosen: &mut Vec<usize>,
        used: &mut Vec<bool>,
        found: &mut Vec<Vec<usize>>,
    ) -> Result<()> {
        if chosen.len() == target {
            if found.len() == cap {
                return Err(Error::ResourceLimit(format!(
                    "more than {cap} maximum matchings"
                )));
            }
            found.push(chosen.clone());
            return Ok(());
        }
        if idx == tree.edge_count() {
            return Ok(());
        }
        let remaining: Vec<usize> = (idx..tree.edge_count())
            .filter(|&e| {
                let edge = &tree.edges()[e];
                !used[edge.u] && !used[edge.v]
            })
            .collect();
        if chosen.len() + remaining.len() < target {
            return Ok(());
        }
        let bound = greedy_forest_matching(tree.vertex_count(), &remaining, tree).len();
        if chosen.len() + bound < target {
            return Ok(());
        }
        let edge = &tree.edges()[idx];
        if !used[edge.u] && !used[edge.v] {
            used[edge.u] = true;
            used[edge.v] = true;
            chosen.push(idx);
            dfs(tree, idx + 1, target, cap, chosen, used, found)?;
            chosen.pop();
            used[edge.u] = false;
            used[edge.v] = false;
        }
        dfs(tree, idx + 1, target, cap, chosen, used, found)
    }
    dfs(tree, 0, target, cap, &mut chosen, &mut used, &mut found)?;
    debug_assert!(!found.is_empty());
    let matchings: Vec<Matching> = found
        .into_iter()
        .map(|edges| Matching::new(tree, edges))
        .collect();
    let m_value = matchings
        .iter()
        .map(|m| m.weight_product() * m.weight_product())
        .fold(Rational::zero(), |acc, x| acc + x);
    let alternating_census = census(tree, &matchings);
    Ok(MatchingSummary {
        matching_number: target,
        matchings,
        m_value,
        alternating_census,
    })
}

fn census(tree: &WeightedTree, matchings: &[Matching]) -> Vec<usize> {
    let n = tree.vertex_count();
    let membership = membership_marks(tree, matchings);
    let mut counts = vec![0usize; n];
    for i in 0..n {
        for j in (i + 1)..n {
            let path = tree.path_edges(i, j);
            if membership.iter().any(|marks| path_alternates(&path, marks)) {
                counts[i] += 1;
                counts[j] += 1;
            }
        }
    }
    counts
}

fn edge_membership(tree: &WeightedTree, summary: &MatchingSummary) -> Vec<Vec<bool>> {
    membership_marks(tree, &summary.matchings)
}

fn membership_marks(tree: &WeightedTree, matchings: &[Matching]) -> Vec<Vec<bool>> {
    matchings
        .iter()
        .map(|m| {
            let mut marks = vec![false; tree.edge_count()];
            for &e in m.edge_indices() {
                marks[e] = true;
            }
            marks
        })
        .collect()
}

/// Odd length, with the odd-position edges (first, third, ...) in the
/// matching and the others out of it.
fn path_alternates(path_edges: &[usize], in_matching: &[bool]) -> bool {
    if path_edges.is_empty() || path_edges.len().is_multiple_of(2) {
        return false;
    }
    path_edges
        .iter()
        .enumerate()
        .all(|(k, &e)| in_matching[e] == (k % 2 == 0))
}

/// Evaluate one vertex pair against a precomputed enumeration.
pub fn matchable_pair_with(
    tree: &WeightedTree,
    summary: &MatchingSummary,
    i: usize,
    j: usize,
) -> MatchablePairRecord {
    assert_ne!(i, j, "matchable pairs have distinct endpoints");
    let path = tree.path_edges(i, j);
    let membership = edge_membership(tree, summary);
    let mut witnesses = Vec::new();
    let mut alpha_bars = Vec::new();
    for (idx, marks) in membership.iter().enumerate() {
        if path_alternates(&path, marks) {
            let off_path = summary.matchings[idx]
                .edge_indices()
                .iter()
                .filter(|e| !path.contains(e))
                .fold(Rational::one(), |acc, &e| acc * &tree.edges()[e].weight);
            witnesses.push(idx);
            alpha_bars.push(off_path);
        }
    }
    if witnesses.is_empty() {
        return MatchablePairRecord {
            pair: (i, j),
            witnesses,
            alpha_path: Rational::zero(),
            alpha_bars,
            mu: Rational::zero(),
            path_length: path.len(),
        };
    }
    let product: Rational = path
        .iter()
        .fold(Rational::one(), |acc, &e| acc * &tree.edges()[e].weight);
    // Path length is odd here; +1 for length 1 mod 4, -1 for 3 mod 4.
    let alpha_path = if path.len() % 4 == 1 {
        product
    } else {
        -product
    };
    let square_sum = alpha_bars
        .iter()
        .map(|b| b * b)
        .fold(Rational::zero(), |acc, x| acc + x);
    let mu = &alpha_path * square_sum;
    MatchablePairRecord {
        pair: (i, j),
        witnesses,
        alpha_path,
        alpha_bars,
        mu,
        path_length: path.len(),
    }
}

/// Evaluate one vertex pair, enumerating maximum matchings internally.
pub fn matchable_pair(tree: &WeightedTree, i: usize, j: usize) -> Result<MatchablePairRecord> {
    let summary = maximum_matchings(tree)?;
    Ok(matchable_pair_with(tree, &summary, i, j))
}

/// All maximally matchable pairs with their path lengths, in
/// lexicographic endpoint order.
pub fn alternating_paths(tree: &WeightedTree) -> Result<Vec<AlternatingPath>> {
    let summary = maximum_matchings(tree)?;
    Ok(alternating_paths_with(tree, &summary))
}

pub fn alternating_paths_with(
    tree: &WeightedTree,
    summary: &MatchingSummary,
) -> Vec<AlternatingPath> {
    let n = tree.vertex_count();
    let membership = edge_membership(tree, summary);
    let mut out = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            let path = tree.path_edges(i, j);
            if membership.iter().any(|marks| path_alternates(&path, marks)) {
                out.push(AlternatingPath {
                    endpoints: (i, j),
                    length: path.len(),
                });
            }
        }
    }
    out
}

/// A maximum matching containing the given pendant edge.
///
/// Starts from the greedy maximum matching and, when the edge is absent,
/// swaps it for the matching edge at its interior endpoint. Existence is
/// guaranteed for pendant edges; the function panics if `edge_idx` is not
/// a pendant edge.
pub fn pendant_edge_in_some_matching(tree: &WeightedTree, edge_idx: usize) -> Matching {
    assert!(
        tree.is_pendant_edge(edge_idx),
        "edge {edge_idx} is not a pendant edge"
    );
    let base = one_maximum_matching(tree);
    if base.contains_edge(edge_idx) {
        return base;
    }
    let edge = &tree.edges()[edge_idx];
    let pendant = if tree.degree(edge.u) == 1 {
        edge.u
    } else {
        edge.v
    };
    let interior = edge.other(pendant);
    // The interior endpoint must be matched, else the matching was not
    // maximum.
    let conflicting = base
        .edge_indices()
        .iter()
        .copied()
        .find(|&e| {
            let f = &tree.edges()[e];
            f.u == interior || f.v == interior
        })
        .expect("maximum matching covers the interior endpoint of an unmatched pendant edge");
    let mut edges: Vec<usize> = base
        .edge_indices()
        .iter()
        .copied()
        .filter(|&e| e != conflicting)
        .collect();
    edges.push(edge_idx);
    Matching::new(tree, edges)
}
