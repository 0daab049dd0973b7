//! The group inverse of a weighted tree, three ways.
//!
//! The group inverse of a square matrix A is the unique X with
//! `AXA = A`, `XAX = X`, and `AX = XA`; it exists for every symmetric A.
//! For a weighted tree the entries of the group inverse have a
//! combinatorial description: entry (i, j) is `mu(i, j) / m`, where `mu`
//! and `m` are the matching sums from the [`crate::matching`] module.
//! Two independent algebraic routes — full-rank factorization and the
//! bipartite block formula — serve as oracles for the combinatorial one.

use crate::error::{Error, Result};
use crate::matching::{self, MatchingSummary};
use crate::matrix::ExactMatrix;
use crate::rational::Rational;
use crate::tree::{WeightedGraph, WeightedTree};
use num_traits::Zero;

/// How a group inverse was computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SharpMethod {
    Combinatorial,
    Factorization,
    BipartiteBlock,
    StarClosedForm,
}

impl SharpMethod {
    pub fn name(self) -> &'static str {
        match self {
            SharpMethod::Combinatorial => "combinatorial",
            SharpMethod::Factorization => "factorization",
            SharpMethod::BipartiteBlock => "bipartite_block",
            SharpMethod::StarClosedForm => "star_closed_form",
        }
    }
}

/// A computed group inverse with its graph form and provenance.
#[derive(Debug, Clone)]
pub struct GroupInverseWitness {
    pub source: WeightedTree,
    pub sharp_matrix: ExactMatrix,
    /// Weighted graph on the same vertex set whose edges are the nonzero
    /// off-diagonal entries of `sharp_matrix`.
    pub sharp_graph: WeightedGraph,
    /// Sum of squared maximum-matching weight products of the source.
    pub m_value: Rational,
    pub method: SharpMethod,
}

/// Group inverse by the matching formula, with the default enumeration cap.
pub fn sharp_combinatorial(tree: &WeightedTree) -> Result<GroupInverseWitness> {
    sharp_combinatorial_capped(tree, matching::DEFAULT_MATCHING_CAP)
}

/// Group inverse by the matching formula: entry (i, j) is `mu(i, j) / m`
/// for distinct vertices and 0 on the diagonal.
pub fn sharp_combinatorial_capped(tree: &WeightedTree, cap: usize) -> Result<GroupInverseWitness> {
    let summary = matching::maximum_matchings_capped(tree, cap)?;
    Ok(sharp_from_summary(tree, &summary))
}

/// Same formula, reusing an existing enumeration.
pub fn sharp_from_summary(tree: &WeightedTree, summary: &MatchingSummary) -> GroupInverseWitness {
    let n = tree.vertex_count();
    let mut sharp = ExactMatrix::zeros(n, n);
    for i in 0..n {
        for j in (i + 1)..n {
            let record = matching::matchable_pair_with(tree, summary, i, j);
            if record.mu.is_zero() {
                continue;
            }
            let weight = record.mu / summary.m_value.clone();
            sharp[(i, j)] = weight.clone();
            sharp[(j, i)] = weight;
        }
    }
    let sharp_graph = WeightedGraph::from_matrix(tree.labels().to_vec(), &sharp)
        .expect("sharp matrix is symmetric with zero diagonal");
    GroupInverseWitness {
        source: tree.clone(),
        sharp_matrix: sharp,
        sharp_graph,
        m_value: summary.m_value.clone(),
        method: SharpMethod::Combinatorial,
    }
}

/// Group inverse of a symmetric matrix by exact full-rank factorization:
/// write `A = F G` with F, G of full rank r, then `X = F (GF)^-2 G`.
/// The zero matrix is its own group inverse.
pub fn sharp_factorization(a: &ExactMatrix) -> Result<ExactMatrix> {
    debug_assert!(a.is_symmetric(), "factorization route expects symmetry");
    let n = a.order();
    let (rref, pivots) = a.rref();
    let r = pivots.len();
    if r == 0 {
        return Ok(ExactMatrix::zeros(n, n));
    }
    let f = a.select_columns(&pivots);
    let g = rref.top_rows(r);
    let gf = g.mul(&f);
    let gf_inv = gf.inverse().ok_or(Error::SingularCore)?;
    let core = gf_inv.mul(&gf_inv);
    Ok(f.mul(&core).mul(&g))
}

/// Group inverse of a tree via the bipartite block formula: with the
/// adjacency matrix written as [[0, C], [C^T, 0]] over the bipartition,
/// the group inverse is [[0, (CC^T)# C], [C^T (CC^T)#, 0]].
pub fn sharp_bipartite_block(tree: &WeightedTree) -> Result<ExactMatrix> {
    let n = tree.vertex_count();
    if n == 1 {
        return Ok(ExactMatrix::zeros(1, 1));
    }
    let (even, odd) = tree.bipartition();
    let (rows, cols) = if even.len() <= odd.len() {
        (even, odd)
    } else {
        (odd, even)
    };
    let mut c = ExactMatrix::zeros(rows.len(), cols.len());
    for (ri, &u) in rows.iter().enumerate() {
        for (ci, &v) in cols.iter().enumerate() {
            if let Some(w) = tree.as_graph().weight_between(u, v) {
                c[(ri, ci)] = w.clone();
            }
        }
    }
    let cct = c.mul(&c.transpose());
    let cct_sharp = sharp_factorization(&cct)?;
    let top_right = cct_sharp.mul(&c);
    let mut sharp = ExactMatrix::zeros(n, n);
    for (ri, &u) in rows.iter().enumerate() {
        for (ci, &v) in cols.iter().enumerate() {
            let entry = top_right[(ri, ci)].clone();
            if !entry.is_zero() {
                sharp[(u, v)] = entry.clone();
                sharp[(v, u)] = entry;
            }
        }
    }
    Ok(sharp)
}

/// Closed form for stars: the group inverse is `A / p` with
/// `p = sum of squared edge weights`.
pub fn sharp_star(tree: &WeightedTree) -> Result<GroupInverseWitness> {
    let n = tree.vertex_count();
    let is_star = n >= 2 && (0..n).any(|c| tree.degree(c) == n - 1 && tree.edge_count() == n - 1);
    if !is_star {
        return Err(Error::NotAStar);
    }
    let p = tree
        .edges()
        .iter()
        .map(|e| &e.weight * &e.weight)
        .fold(Rational::zero(), |acc, x| acc + x);
    let sharp = tree.adjacency_matrix().scale(&p.clone().recip());
    let sharp_graph = WeightedGraph::from_matrix(tree.labels().to_vec(), &sharp)
        .expect("scaled adjacency is symmetric with zero diagonal");
    Ok(GroupInverseWitness {
        source: tree.clone(),
        sharp_matrix: sharp,
        sharp_graph,
        // For a star every maximum matching is a single edge, so the
        // matching normalizer m equals p.
        m_value: p,
        method: SharpMethod::StarClosedForm,
    })
}

/// Exact check of the three group-inverse identities.
pub fn verify_axioms(a: &ExactMatrix, x: &ExactMatrix) -> bool {
    assert_eq!(a.order(), x.order(), "axiom check needs equal orders");
    let ax = a.mul(x);
    let xa = x.mul(a);
    ax == xa && ax.mul(a) == *a && xa.mul(x) == *x
}
