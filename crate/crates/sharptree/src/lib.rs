//! Exact group inverses of weighted trees.
//!
//! The adjacency matrix A of an undirected weighted tree is symmetric, so
//! its group inverse — the unique X with `AXA = A`, `XAX = X`, and
//! `AX = XA` — always exists. This crate computes that inverse exactly
//! over the rationals, three independent ways, and turns the structural
//! and spectral facts surrounding it into executable checks:
//!
//! - [`matching`]: maximum-matching enumeration, alternating paths, and
//!   the weight sums `alpha`, `alpha_bar`, `mu`, and `m`.
//! - [`groupinv`]: the matching formula for the group inverse, an exact
//!   full-rank-factorization oracle, the bipartite block formula, and the
//!   closed form for stars.
//! - [`structure`]: connectivity, bipartiteness, tree-ness, the
//!   star equivalence suite, odd-path structure, and 4-cycle witnesses of
//!   the group-inverse graph.
//! - [`signature`]: diagonal sign similarity making the group inverse of
//!   suitable trees entrywise non-negative, plus an exhaustive search.
//! - [`spectral`]: floating-point eigenvalues, reciprocity of the nonzero
//!   spectra, and simplicity of the smallest positive eigenvalue.
//! - [`report`]: machine-readable JSON/DOT/edge-list renderings and the
//!   drivers behind the `sharptree` command-line tool.
//!
//! # Edge-list format
//!
//! Inputs are UTF-8 text, one edge per line as `<u> <v> <w>`, where the
//! endpoints are arbitrary whitespace-free labels and the weight is a
//! nonzero integer (`-3`), fraction (`5/7`), or finite decimal (`0.25`,
//! converted exactly). Lines starting with `#` are ignored. Vertex order
//! is first appearance, unless an initial `vertices a b c ...` header
//! line declares it. A header-only document describes an edgeless
//! single-vertex tree when it lists one label.
//!
//! # Example
//!
//! ```
//! use sharptree::{groupinv, tree::WeightedTree};
//!
//! let tree = WeightedTree::parse("1 2 1\n2 3 1\n3 4 1\n4 5 1")?;
//! let witness = groupinv::sharp_combinatorial(&tree)?;
//! let a = tree.adjacency_matrix();
//! assert!(groupinv::verify_axioms(&a, &witness.sharp_matrix));
//! # Ok::<(), sharptree::Error>(())
//! ```

pub mod error;
pub mod fixtures;
pub mod groupinv;
pub mod matching;
pub mod matrix;
pub mod rational;
pub mod report;
pub mod signature;
pub mod spectral;
pub mod structure;
pub mod tree;

pub use error::{Error, Result};
pub use matrix::ExactMatrix;
pub use rational::Rational;
pub use tree::{ClassTProfile, WeightedGraph, WeightedTree};
