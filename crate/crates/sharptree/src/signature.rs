//! Diagonal sign similarity for group inverses.
//!
//! For a positively weighted tree whose non-pendant vertices all have
//! pendant neighbours, a signature (diagonal +-1) matrix S built from
//! non-matching edge counts along root paths makes `S A# S` entrywise
//! non-negative. The exhaustive search over sign vectors is the
//! independent route for the same question and also certifies
//! counterexamples.

use crate::error::{Error, Result};
use crate::matching;
use crate::matrix::ExactMatrix;
use crate::tree::WeightedTree;
use num_traits::Signed;

/// Cap on the order for the exhaustive sign search (2^(n-1) candidates).
pub const SIGNATURE_SEARCH_MAX_VERTICES: usize = 24;

/// A +-1 diagonal similarity, together with the construction data when it
/// was built from a tree rather than found by search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignatureVector {
    /// The pendant root vertex the construction counted from; 0 for
    /// search results.
    pub root: usize,
    /// Per-vertex count of non-matching edges on the path from the root;
    /// empty for signatures found by search.
    pub n_values: Vec<usize>,
    /// Per-vertex sign, +1 or -1; the root sign is +1.
    pub signs: Vec<i8>,
}

impl SignatureVector {
    pub fn order(&self) -> usize {
        self.signs.len()
    }

    /// The all-plus signature.
    pub fn identity(n: usize) -> Self {
        Self {
            root: 0,
            n_values: vec![0; n],
            signs: vec![1; n],
        }
    }
}

/// Build the signature from the lowest-index pendant root: each vertex's
/// sign is (-1) to the number of edges on its root path that belong to no
/// maximum matching.
///
/// Requires every non-pendant vertex to have a pendant neighbour and all
/// weights positive.
pub fn build_signature_class_t(tree: &WeightedTree) -> Result<SignatureVector> {
    let summary = matching::maximum_matchings(tree)?;
    build_signature_from_summary(tree, &summary)
}

/// Same construction, reusing an existing enumeration.
pub fn build_signature_from_summary(
    tree: &WeightedTree,
    summary: &matching::MatchingSummary,
) -> Result<SignatureVector> {
    let profile = tree.classify();
    if !profile.is_member {
        return Err(Error::NotInClassT);
    }
    if tree.edges().iter().any(|e| !e.weight.is_positive()) {
        return Err(Error::NonPositiveWeights);
    }
    // The set of edges in no maximum matching, taken from the enumeration
    // rather than assumed equal to the non-pendant edges.
    let unmatched_edge: Vec<bool> = (0..tree.edge_count())
        .map(|e| summary.matchings.iter().all(|m| !m.contains_edge(e)))
        .collect();
    let root = *tree
        .pendant_vertices()
        .first()
        .expect("a member tree has a pendant vertex");
    let n = tree.vertex_count();
    let mut n_values = vec![0usize; n];
    let mut signs = vec![1i8; n];
    for v in 0..n {
        if v == root {
            continue;
        }
        let count = tree
            .path_edges(root, v)
            .iter()
            .filter(|&&e| unmatched_edge[e])
            .count();
        n_values[v] = count;
        signs[v] = if count % 2 == 0 { 1 } else { -1 };
    }
    Ok(SignatureVector {
        root,
        n_values,
        signs,
    })
}

/// Conjugate a matrix by a signature: entry (i, j) becomes
/// `s_i * s_j * m_ij`. Involutive.
pub fn apply_signature(m: &ExactMatrix, s: &SignatureVector) -> Result<ExactMatrix> {
    if !m.is_square() || m.order() != s.order() {
        return Err(Error::DimensionMismatch {
            left: m.rows(),
            right: s.order(),
        });
    }
    let n = m.order();
    let mut out = ExactMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            let v = m[(i, j)].clone();
            out[(i, j)] = if s.signs[i] * s.signs[j] >= 0 { v } else { -v };
        }
    }
    Ok(out)
}

/// True iff every entry of the matrix is non-negative.
pub fn entrywise_nonnegative(m: &ExactMatrix) -> bool {
    (0..m.rows()).all(|i| (0..m.cols()).all(|j| !m[(i, j)].is_negative()))
}

/// Outcome of the exhaustive sign search.
#[derive(Debug, Clone)]
pub struct SignatureSearch {
    /// The first (lexicographically smallest, +1 before -1) signature
    /// that makes the matrix non-negative, if any exists.
    pub signature: Option<SignatureVector>,
    /// Number of sign vectors examined.
    pub vectors_scanned: u64,
}

/// Scan all 2^(n-1) sign vectors with the first sign fixed to +1, in
/// lexicographic order with per-candidate early exit, looking for one
/// that makes `S M S` entrywise non-negative.
pub fn exhaustive_signature_search(m: &ExactMatrix) -> Result<SignatureSearch> {
    if !m.is_square() {
        return Err(Error::DimensionMismatch {
            left: m.rows(),
            right: m.cols(),
        });
    }
    let n = m.order();
    if n > SIGNATURE_SEARCH_MAX_VERTICES {
        return Err(Error::ResourceLimit(format!(
            "signature search capped at {SIGNATURE_SEARCH_MAX_VERTICES} vertices, got {n}"
        )));
    }
    // Precompute the sign pattern once; the search only needs signs.
    let mut negative = vec![vec![false; n]; n];
    let mut nonzero = vec![vec![false; n]; n];
    for i in 0..n {
        for j in 0..n {
            negative[i][j] = m[(i, j)].is_negative();
            nonzero[i][j] = !num_traits::Zero::is_zero(&m[(i, j)]);
        }
    }
    let mut signs = vec![1i8; n];
    let candidates: u64 = 1 << n.saturating_sub(1);
    let mut scanned = 0u64;
    for mask in 0..candidates {
        scanned += 1;
        for (bit, sign) in signs.iter_mut().skip(1).enumerate() {
            *sign = if mask >> bit & 1 == 0 { 1 } else { -1 };
        }
        let mut ok = true;
        'scan: for i in 0..n {
            for j in (i + 1)..n {
                if !nonzero[i][j] {
                    continue;
                }
                let flipped = signs[i] * signs[j] < 0;
                if negative[i][j] != flipped {
                    ok = false;
                    break 'scan;
                }
            }
        }
        if ok {
            return Ok(SignatureSearch {
                signature: Some(SignatureVector {
                    root: 0,
                    n_values: Vec::new(),
                    signs,
                }),
                vectors_scanned: scanned,
            });
        }
    }
    Ok(SignatureSearch {
        signature: None,
        vectors_scanned: scanned,
    })
}
