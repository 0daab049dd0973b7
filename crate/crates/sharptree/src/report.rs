//! Machine-readable documents and the drivers behind the `sharptree`
//! command-line tool.
//!
//! Exact values are serialized as `p/q` strings in lowest terms, never as
//! floats; spectral sections are the only floating-point data. Output is
//! byte-for-byte reproducible for identical input and flags: edge lists
//! are sorted lexicographically by endpoint labels and all maps are
//! emitted in fixed field order.

use crate::error::{Error, Result};
use crate::groupinv;
use crate::matching::{self, MatchingSummary};
use crate::rational::format_rational;
use crate::signature;
use crate::spectral;
use crate::structure;
use crate::tree::{WeightedGraph, WeightedTree};
use serde::Serialize;
use sha2::{Digest, Sha256};
use std::path::Path;

/// Version tag carried by every JSON document.
pub const SCHEMA: &str = "sharptree/1";

/// Options shared by the command drivers.
#[derive(Debug, Clone, Copy)]
pub struct CommandOptions {
    /// Maximum-matching enumeration cap.
    pub cap: usize,
    /// Tolerance for spectral checks.
    pub tol: f64,
    /// Run the exhaustive signature search.
    pub search: bool,
    /// Emit the full analysis document.
    pub all: bool,
}

impl Default for CommandOptions {
    fn default() -> Self {
        Self {
            cap: matching::DEFAULT_MATCHING_CAP,
            tol: spectral::DEFAULT_TOL,
            search: false,
            all: false,
        }
    }
}

/// Output format for the `sharp` command.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SharpFormat {
    Edges,
    Dot,
    Json,
}

#[derive(Serialize)]
struct TreeSummary {
    vertex_count: usize,
    vertices: Vec<String>,
    edges: Vec<(String, String, String)>,
    singular: bool,
    class_profile: ClassProfileJson,
}

#[derive(Serialize)]
struct ClassProfileJson {
    in_class_t: bool,
    is_corona: bool,
    is_caterpillar: bool,
    is_star: bool,
    non_pendant_vertices: Vec<String>,
    pendant_counts: Vec<usize>,
}

#[derive(Serialize)]
struct MatchingReport {
    matching_number: usize,
    maximum_matching_count: usize,
    m_value: String,
    matchings: Vec<MatchingJson>,
    alternating_paths: Vec<(String, String, usize)>,
    alternating_census: Vec<(String, usize)>,
}

#[derive(Serialize)]
struct MatchingJson {
    edges: Vec<(String, String)>,
    alpha: String,
}

#[derive(Serialize)]
struct StructureJson {
    sharp_connected: bool,
    sharp_bipartite: bool,
    sharp_is_tree: bool,
    sharp_edge_count: usize,
    four_conditions: Option<FourConditionsJson>,
    has_four_cycle: bool,
    four_cycle: Option<Vec<String>>,
    degree_table: Vec<(String, usize)>,
}

#[derive(Serialize)]
struct FourConditionsJson {
    alt_path_count_is_n_minus_1: bool,
    sharp_is_tree: bool,
    is_star: bool,
    sharp_isomorphic_underlying: bool,
}

#[derive(Serialize)]
struct SignatureReport {
    in_class_t: bool,
    positive_weights: bool,
    constructed: Option<ConstructedSignatureJson>,
    search: Option<SearchJson>,
}

#[derive(Serialize)]
struct ConstructedSignatureJson {
    root: String,
    signs: Vec<i8>,
    n_values: Vec<usize>,
    signed_matrix: Vec<Vec<String>>,
    nonnegative: bool,
}

#[derive(Serialize)]
struct SearchJson {
    signature_exists: bool,
    signs: Option<Vec<i8>>,
    vectors_scanned: u64,
}

#[derive(Serialize)]
struct SpectralJson {
    tolerance: f64,
    eigenvalues_a: Vec<f64>,
    eigenvalues_sharp: Vec<f64>,
    tau: f64,
    rho_sharp: f64,
    tau_simple: bool,
    tau_gap: f64,
    eigenvector_tau: Vec<f64>,
    min_abs_entry: f64,
    reciprocity_residual: f64,
}

#[derive(Serialize)]
struct SharpDocument {
    schema: &'static str,
    input_digest: String,
    method: &'static str,
    m_value: String,
    sharp_edges: Vec<(String, String, String)>,
}

#[derive(Serialize)]
struct MatchingsDocument {
    schema: &'static str,
    input_digest: String,
    matching_summary: MatchingReport,
}

#[derive(Serialize)]
struct SignatureDocument {
    schema: &'static str,
    input_digest: String,
    signature_report: SignatureReport,
}

#[derive(Serialize)]
struct SpectralDocument {
    schema: &'static str,
    input_digest: String,
    spectral_report: SpectralJson,
}

#[derive(Serialize)]
struct StructureDocument {
    schema: &'static str,
    input_digest: String,
    tree_summary: TreeSummary,
    structure_report: StructureJson,
}

#[derive(Serialize)]
struct AnalysisDocument {
    schema: &'static str,
    input_digest: String,
    tree_summary: TreeSummary,
    matching_summary: MatchingReport,
    sharp_edges: Vec<(String, String, String)>,
    structure_report: StructureJson,
    signature_report: SignatureReport,
    spectral_report: Option<SpectralJson>,
}

/// Read a file, returning the parsed tree and the content digest.
pub fn load_tree(path: &Path) -> Result<(WeightedTree, String)> {
    let bytes = std::fs::read(path)?;
    let digest = format!("sha256:{:x}", Sha256::digest(&bytes));
    let text = String::from_utf8(bytes).map_err(|_| Error::Parse {
        line: 0,
        msg: "input is not valid UTF-8".into(),
    })?;
    Ok((WeightedTree::parse(&text)?, digest))
}

fn labelled_edge(graph: &WeightedGraph, u: usize, v: usize) -> (String, String) {
    let (a, b) = (graph.label(u).to_string(), graph.label(v).to_string());
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

fn sorted_sharp_edges(graph: &WeightedGraph) -> Vec<(String, String, String)> {
    let mut rows: Vec<(String, String, String)> = graph
        .edges()
        .iter()
        .map(|e| {
            let (a, b) = labelled_edge(graph, e.u, e.v);
            (a, b, format_rational(&e.weight))
        })
        .collect();
    rows.sort();
    rows
}

fn tree_summary(tree: &WeightedTree) -> TreeSummary {
    let profile = tree.classify();
    TreeSummary {
        vertex_count: tree.vertex_count(),
        vertices: tree.labels().to_vec(),
        edges: sorted_sharp_edges(tree.as_graph()),
        singular: tree.is_singular(),
        class_profile: ClassProfileJson {
            in_class_t: profile.is_member,
            is_corona: profile.is_corona,
            is_caterpillar: profile.is_caterpillar,
            is_star: profile.is_star,
            non_pendant_vertices: profile
                .non_pendant_vertices
                .iter()
                .map(|&v| tree.label(v).to_string())
                .collect(),
            pendant_counts: profile.pendant_counts,
        },
    }
}

fn matching_report(tree: &WeightedTree, summary: &MatchingSummary) -> MatchingReport {
    let matchings = summary
        .matchings
        .iter()
        .map(|m| MatchingJson {
            edges: m
                .edge_indices()
                .iter()
                .map(|&e| {
                    let edge = &tree.edges()[e];
                    labelled_edge(tree.as_graph(), edge.u, edge.v)
                })
                .collect(),
            alpha: format_rational(m.weight_product()),
        })
        .collect();
    let alternating_paths = matching::alternating_paths_with(tree, summary)
        .into_iter()
        .map(|p| {
            let (a, b) = labelled_edge(tree.as_graph(), p.endpoints.0, p.endpoints.1);
            (a, b, p.length)
        })
        .collect();
    MatchingReport {
        matching_number: summary.matching_number,
        maximum_matching_count: summary.matchings.len(),
        m_value: format_rational(&summary.m_value),
        matchings,
        alternating_paths,
        alternating_census: summary
            .alternating_census
            .iter()
            .enumerate()
            .map(|(v, &c)| (tree.label(v).to_string(), c))
            .collect(),
    }
}

fn structure_json(tree: &WeightedTree, report: &structure::StructureReport) -> StructureJson {
    StructureJson {
        sharp_connected: report.sharp_connected,
        sharp_bipartite: report.sharp_bipartite,
        sharp_is_tree: report.sharp_is_tree,
        sharp_edge_count: report.sharp_edge_count,
        four_conditions: report.four_conditions.map(|f| FourConditionsJson {
            alt_path_count_is_n_minus_1: f.alt_path_count_is_n_minus_1,
            sharp_is_tree: f.sharp_is_tree,
            is_star: f.is_star,
            sharp_isomorphic_underlying: f.sharp_isomorphic_underlying,
        }),
        has_four_cycle: report.has_four_cycle,
        four_cycle: report
            .four_cycle
            .map(|c| c.iter().map(|&v| tree.label(v).to_string()).collect()),
        degree_table: report
            .degree_table
            .iter()
            .enumerate()
            .map(|(v, &d)| (tree.label(v).to_string(), d))
            .collect(),
    }
}

fn signature_report(
    tree: &WeightedTree,
    summary: &MatchingSummary,
    sharp: &crate::matrix::ExactMatrix,
    search: bool,
) -> Result<SignatureReport> {
    let profile = tree.classify();
    let positive = tree
        .edges()
        .iter()
        .all(|e| num_traits::Signed::is_positive(&e.weight));
    let constructed = if profile.is_member && positive {
        let sig = signature::build_signature_from_summary(tree, summary)?;
        let signed = signature::apply_signature(sharp, &sig)?;
        let n = signed.order();
        let signed_matrix = (0..n)
            .map(|i| (0..n).map(|j| format_rational(&signed[(i, j)])).collect())
            .collect();
        Some(ConstructedSignatureJson {
            root: tree.label(sig.root).to_string(),
            signs: sig.signs.clone(),
            n_values: sig.n_values.clone(),
            signed_matrix,
            nonnegative: signature::entrywise_nonnegative(&signed),
        })
    } else {
        None
    };
    let search_json = if search {
        let out = signature::exhaustive_signature_search(sharp)?;
        Some(SearchJson {
            signature_exists: out.signature.is_some(),
            signs: out.signature.map(|s| s.signs),
            vectors_scanned: out.vectors_scanned,
        })
    } else {
        None
    };
    Ok(SignatureReport {
        in_class_t: profile.is_member,
        positive_weights: positive,
        constructed,
        search: search_json,
    })
}

fn spectral_json(tree: &WeightedTree, tol: f64) -> Result<SpectralJson> {
    let r = spectral::spectral_report(tree, tol)?;
    Ok(SpectralJson {
        tolerance: r.tolerance,
        eigenvalues_a: r.eigenvalues_a,
        eigenvalues_sharp: r.eigenvalues_sharp,
        tau: r.tau,
        rho_sharp: r.rho_sharp,
        tau_simple: r.tau_simple,
        tau_gap: r.tau_gap,
        eigenvector_tau: r.eigenvector_tau,
        min_abs_entry: r.min_abs_entry,
        reciprocity_residual: r.reciprocity_residual,
    })
}

fn to_json<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents serialize");
    s.push('\n');
    s
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

fn render_dot(graph: &WeightedGraph) -> String {
    let mut out = String::from("graph sharp {\n");
    for v in graph.labels() {
        out.push_str(&format!("  \"{}\";\n", dot_escape(v)));
    }
    for (u, v, w) in sorted_sharp_edges(graph) {
        out.push_str(&format!(
            "  \"{}\" -- \"{}\" [label=\"{}\"];\n",
            dot_escape(&u),
            dot_escape(&v),
            w
        ));
    }
    out.push_str("}\n");
    out
}

fn render_edges(graph: &WeightedGraph) -> String {
    let mut out = String::new();
    for (u, v, w) in sorted_sharp_edges(graph) {
        out.push_str(&format!("{u} {v} {w}\n"));
    }
    out
}

/// `sharp`: compute the group-inverse graph and render it.
pub fn run_sharp(path: &Path, format: SharpFormat, cap: usize) -> Result<String> {
    let (tree, digest) = load_tree(path)?;
    let witness = groupinv::sharp_combinatorial_capped(&tree, cap)?;
    Ok(match format {
        SharpFormat::Edges => render_edges(&witness.sharp_graph),
        SharpFormat::Dot => render_dot(&witness.sharp_graph),
        SharpFormat::Json => to_json(&SharpDocument {
            schema: SCHEMA,
            input_digest: digest,
            method: witness.method.name(),
            m_value: format_rational(&witness.m_value),
            sharp_edges: sorted_sharp_edges(&witness.sharp_graph),
        }),
    })
}

/// Outcome of the differential verification.
#[derive(Debug, Clone)]
pub struct VerifyOutcome {
    /// All three methods agree bit-exactly and the axioms hold.
    pub ok: bool,
    /// Human-readable report; lists differing entries on failure.
    pub report: String,
}

/// `verify`: compare the combinatorial, factorization, and bipartite
/// block group inverses entry by entry and check the defining identities.
pub fn run_verify(path: &Path, cap: usize) -> Result<VerifyOutcome> {
    let (tree, _) = load_tree(path)?;
    let a = tree.adjacency_matrix();
    let comb = groupinv::sharp_combinatorial_capped(&tree, cap)?.sharp_matrix;
    let fact = groupinv::sharp_factorization(&a)?;
    let block = groupinv::sharp_bipartite_block(&tree)?;
    let mut report = String::new();
    let mut ok = true;
    for (name, other) in [("factorization", &fact), ("bipartite_block", &block)] {
        if comb == *other {
            report.push_str(&format!("combinatorial vs {name}: identical\n"));
        } else {
            ok = false;
            report.push_str(&format!("combinatorial vs {name}: MISMATCH\n"));
            let n = tree.vertex_count();
            for i in 0..n {
                for j in 0..n {
                    if comb[(i, j)] != other[(i, j)] {
                        report.push_str(&format!(
                            "  entry ({}, {}): combinatorial {} vs {} {}\n",
                            tree.label(i),
                            tree.label(j),
                            format_rational(&comb[(i, j)]),
                            name,
                            format_rational(&other[(i, j)])
                        ));
                    }
                }
            }
        }
    }
    if groupinv::verify_axioms(&a, &comb) {
        report.push_str("group-inverse identities: hold exactly\n");
    } else {
        ok = false;
        report.push_str("group-inverse identities: VIOLATED\n");
    }
    report.push_str(if ok {
        "result: ok\n"
    } else {
        "result: mismatch\n"
    });
    Ok(VerifyOutcome { ok, report })
}

/// `analyze`: structure report, or the full document with `--all`.
pub fn run_analyze(path: &Path, opts: &CommandOptions) -> Result<String> {
    let (tree, digest) = load_tree(path)?;
    if !opts.all {
        let report = structure::analyze_structure_capped(&tree, opts.cap)?;
        return Ok(to_json(&StructureDocument {
            schema: SCHEMA,
            input_digest: digest,
            tree_summary: tree_summary(&tree),
            structure_report: structure_json(&tree, &report),
        }));
    }
    let summary = matching::maximum_matchings_capped(&tree, opts.cap)?;
    let witness = groupinv::sharp_from_summary(&tree, &summary);
    let report = structure::analyze_structure_of(&tree, &witness)?;
    let spectral_report = match spectral_json(&tree, opts.tol) {
        Ok(r) => Some(r),
        Err(Error::NoPositiveEigenvalue) => None,
        Err(e) => return Err(e),
    };
    Ok(to_json(&AnalysisDocument {
        schema: SCHEMA,
        input_digest: digest,
        tree_summary: tree_summary(&tree),
        matching_summary: matching_report(&tree, &summary),
        sharp_edges: sorted_sharp_edges(&witness.sharp_graph),
        structure_report: structure_json(&tree, &report),
        signature_report: signature_report(&tree, &summary, &witness.sharp_matrix, opts.search)?,
        spectral_report,
    }))
}

/// `matchings`: the maximum-matching enumeration as JSON.
pub fn run_matchings(path: &Path, cap: usize) -> Result<String> {
    let (tree, digest) = load_tree(path)?;
    let summary = matching::maximum_matchings_capped(&tree, cap)?;
    Ok(to_json(&MatchingsDocument {
        schema: SCHEMA,
        input_digest: digest,
        matching_summary: matching_report(&tree, &summary),
    }))
}

/// `signature`: the constructed signature (when applicable) and the
/// optional exhaustive search.
pub fn run_signature(path: &Path, search: bool, cap: usize) -> Result<String> {
    let (tree, digest) = load_tree(path)?;
    let summary = matching::maximum_matchings_capped(&tree, cap)?;
    let witness = groupinv::sharp_from_summary(&tree, &summary);
    Ok(to_json(&SignatureDocument {
        schema: SCHEMA,
        input_digest: digest,
        signature_report: signature_report(&tree, &summary, &witness.sharp_matrix, search)?,
    }))
}

/// `spectral`: the floating-point spectral report.
pub fn run_spectral(path: &Path, tol: f64) -> Result<String> {
    let (tree, digest) = load_tree(path)?;
    Ok(to_json(&SpectralDocument {
        schema: SCHEMA,
        input_digest: digest,
        spectral_report: spectral_json(&tree, tol)?,
    }))
}
