//! Shared corpus generators for the integration suites: a tiny
//! deterministic RNG, random weighted trees via Pruefer sequences, random
//! trees whose non-pendant vertices all have pendant neighbours, and an
//! exhaustive enumerator of unlabelled tree shapes.

#![allow(dead_code)]

use num_bigint::BigInt;
use sharptree::tree::WeightedTree;
use sharptree::Rational;

/// SplitMix64: deterministic across platforms and toolchain versions.
pub struct Rng(u64);

impl Rng {
    pub fn new(seed: u64) -> Self {
        Rng(seed)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform value in `0..n`.
    pub fn below(&mut self, n: u64) -> u64 {
        assert!(n > 0);
        self.next_u64() % n
    }

    /// Uniform value in `lo..=hi`.
    pub fn range(&mut self, lo: i64, hi: i64) -> i64 {
        lo + self.below((hi - lo + 1) as u64) as i64
    }
}

fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Nonzero rational in [-5, 5] with denominator up to 4.
pub fn random_weight_nonzero(rng: &mut Rng) -> Rational {
    let den = rng.range(1, 4);
    let mut num = 0;
    while num == 0 {
        num = rng.range(-5 * den, 5 * den);
    }
    ratio(num, den)
}

/// Positive rational in (0, 5] with denominator up to 4.
pub fn random_weight_positive(rng: &mut Rng) -> Rational {
    let den = rng.range(1, 4);
    let num = rng.range(1, 5 * den);
    ratio(num, den)
}

/// Uniform labelled tree shape on `n` vertices from a random Pruefer
/// sequence.
pub fn random_tree_edges(rng: &mut Rng, n: usize) -> Vec<(usize, usize)> {
    match n {
        0 => panic!("trees need at least one vertex"),
        1 => Vec::new(),
        2 => vec![(0, 1)],
        _ => {
            let seq: Vec<usize> = (0..n - 2).map(|_| rng.below(n as u64) as usize).collect();
            prufer_decode(&seq, n)
        }
    }
}

/// Standard Pruefer decoding: degree counting plus smallest-leaf removal.
pub fn prufer_decode(seq: &[usize], n: usize) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &s in seq {
        let leaf = (0..n)
            .find(|&v| degree[v] == 1)
            .expect("a leaf always remains");
        edges.push((leaf, s));
        degree[leaf] -= 1;
        degree[s] -= 1;
    }
    let ends: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    assert_eq!(ends.len(), 2, "pruefer decode leaves two ends");
    edges.push((ends[0], ends[1]));
    edges
}

fn labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| i.to_string()).collect()
}

/// Random tree with nonzero weights in [-5, 5].
pub fn random_tree(rng: &mut Rng, n: usize) -> WeightedTree {
    let edges = random_tree_edges(rng, n)
        .into_iter()
        .map(|(u, v)| (u, v, random_weight_nonzero(rng)))
        .collect();
    WeightedTree::new(labels(n), edges).expect("generated tree is valid")
}

/// Random positively weighted tree in which every non-pendant vertex has
/// at least one pendant neighbour, with at most `max_n` vertices.
pub fn random_class_t_tree(rng: &mut Rng, max_n: usize) -> WeightedTree {
    assert!(max_n >= 3);
    let max_k = (max_n / 2).clamp(1, 4);
    let k = 1 + rng.below(max_k as u64) as usize;
    let base = if k == 1 {
        Vec::new()
    } else {
        random_tree_edges(rng, k)
    };
    // Pendant budget: at least one per base vertex (two for a lone
    // vertex, which otherwise stays pendant itself).
    let mut pendant_counts = vec![1usize; k];
    if k == 1 {
        pendant_counts[0] = 2;
    }
    let used: usize = k + pendant_counts.iter().sum::<usize>();
    let spare = max_n - used;
    for _ in 0..spare {
        if rng.below(2) == 0 {
            let i = rng.below(k as u64) as usize;
            pendant_counts[i] += 1;
        }
    }
    let n = k + pendant_counts.iter().sum::<usize>();
    let mut edges: Vec<(usize, usize, Rational)> = base
        .into_iter()
        .map(|(u, v)| (u, v, random_weight_positive(rng)))
        .collect();
    let mut next = k;
    for (v, &count) in pendant_counts.iter().enumerate() {
        for _ in 0..count {
            edges.push((v, next, random_weight_positive(rng)));
            next += 1;
        }
    }
    assert_eq!(next, n);
    WeightedTree::new(labels(n), edges).expect("generated member tree is valid")
}

/// Unit-weight tree from a bare shape.
pub fn unit_tree(n: usize, shape: &[(usize, usize)]) -> WeightedTree {
    let edges = shape
        .iter()
        .map(|&(u, v)| (u, v, Rational::from_integer(BigInt::from(1))))
        .collect();
    WeightedTree::new(labels(n), edges).expect("shape is a valid tree")
}

/// All unlabelled tree shapes on exactly `n` vertices, as edge lists on
/// vertices `0..n`. Grown by leaf attachment with canonical-form dedup.
pub fn all_tree_shapes(n: usize) -> Vec<Vec<(usize, usize)>> {
    assert!(n >= 1);
    let mut current: Vec<Vec<(usize, usize)>> = vec![Vec::new()];
    for size in 2..=n {
        let mut seen = std::collections::HashSet::new();
        let mut next = Vec::new();
        for shape in &current {
            for attach in 0..size - 1 {
                let mut grown = shape.clone();
                grown.push((attach, size - 1));
                let canon = canonical_form(size, &grown);
                if seen.insert(canon) {
                    next.push(grown);
                }
            }
        }
        current = next;
    }
    current
}

/// Canonical string of an unlabelled tree: the minimum rooted encoding
/// over its one or two centers.
pub fn canonical_form(n: usize, edges: &[(usize, usize)]) -> String {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    centers(n, &adj)
        .into_iter()
        .map(|c| rooted_encoding(c, usize::MAX, &adj))
        .min()
        .expect("every tree has a center")
}

/// The one or two middle vertices found by repeatedly stripping leaves.
fn centers(n: usize, adj: &[Vec<usize>]) -> Vec<usize> {
    if n <= 2 {
        return (0..n).collect();
    }
    let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            degree[v] = 0;
            for &w in &adj[v] {
                if degree[w] > 1 {
                    degree[w] -= 1;
                    if degree[w] == 1 {
                        next.push(w);
                    }
                }
            }
        }
        layer = next;
    }
    layer
}

fn rooted_encoding(v: usize, parent: usize, adj: &[Vec<usize>]) -> String {
    let mut child_codes: Vec<String> = adj[v]
        .iter()
        .filter(|&&w| w != parent)
        .map(|&w| rooted_encoding(w, v, adj))
        .collect();
    child_codes.sort();
    format!("({})", child_codes.concat())
}

/// Random star with `m` pendant edges: center last, pendant labels first.
pub fn random_star(rng: &mut Rng, m: usize) -> WeightedTree {
    let n = m + 1;
    let edges = (0..m).map(|i| (i, m, random_weight_nonzero(rng))).collect();
    WeightedTree::new(labels(n), edges).expect("star is a valid tree")
}

#[cfg(test)]
mod self_tests {
    use super::*;

    #[test]
    fn shape_counts_match_known_values() {
        // Unlabelled trees on 1..=9 vertices.
        let expect = [1usize, 1, 1, 2, 3, 6, 11, 23, 47];
        for (i, &want) in expect.iter().enumerate() {
            assert_eq!(all_tree_shapes(i + 1).len(), want, "n = {}", i + 1);
        }
    }

    #[test]
    fn prufer_decodes_are_trees() {
        let mut rng = Rng::new(7);
        for n in 1..=12 {
            for _ in 0..25 {
                let t = random_tree(&mut rng, n);
                assert_eq!(t.vertex_count(), n);
            }
        }
    }

    #[test]
    fn class_t_generator_produces_members() {
        let mut rng = Rng::new(11);
        for _ in 0..100 {
            let t = random_class_t_tree(&mut rng, 12);
            assert!(t.vertex_count() <= 12);
            assert!(t.classify().is_member);
        }
    }
}
