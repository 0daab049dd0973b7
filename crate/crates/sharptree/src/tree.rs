//! Weighted trees and weighted graphs.
//!
//! Vertices carry string labels externally and dense `0..n` indices
//! internally; every report maps indices back to labels. Edge weights are
//! nonzero exact rationals. A `WeightedTree` is validated at construction
//! (connected, acyclic, no duplicate edges); a `WeightedGraph` is the
//! looser codomain type used for group-inverse graphs.

use crate::error::{Error, Result};
use crate::matrix::ExactMatrix;
use crate::rational::{parse_rational, Rational};
use num_traits::Zero;
use std::collections::HashMap;

/// An undirected edge with endpoints normalized so `u < v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub weight: Rational,
}

impl Edge {
    /// The endpoint opposite `vertex`.
    pub fn other(&self, vertex: usize) -> usize {
        if vertex == self.u {
            self.v
        } else {
            self.u
        }
    }
}

/// General undirected weighted graph: no self-loops, no duplicate edges,
/// nonzero weights.
#[derive(Debug, Clone)]
pub struct WeightedGraph {
    labels: Vec<String>,
    edges: Vec<Edge>,
    adj: Vec<Vec<(usize, usize)>>, // (neighbour, edge index)
}

impl WeightedGraph {
    pub fn new(labels: Vec<String>, raw_edges: Vec<(usize, usize, Rational)>) -> Result<Self> {
        let n = labels.len();
        let mut seen_labels = HashMap::new();
        for (i, l) in labels.iter().enumerate() {
            if seen_labels.insert(l.clone(), i).is_some() {
                return Err(Error::NotATree(format!("duplicate vertex label {l:?}")));
            }
        }
        let mut edges = Vec::with_capacity(raw_edges.len());
        let mut seen_pairs = HashMap::new();
        for (u, v, w) in raw_edges {
            if u >= n || v >= n {
                return Err(Error::NotATree("edge endpoint out of range".into()));
            }
            if u == v {
                return Err(Error::NotATree(format!("self-loop at {:?}", labels[u])));
            }
            if w.is_zero() {
                return Err(Error::ZeroWeight {
                    u: labels[u].clone(),
                    v: labels[v].clone(),
                });
            }
            let (a, b) = if u < v { (u, v) } else { (v, u) };
            if seen_pairs.insert((a, b), ()).is_some() {
                return Err(Error::NotATree(format!(
                    "duplicate edge {:?} {:?}",
                    labels[a], labels[b]
                )));
            }
            edges.push(Edge {
                u: a,
                v: b,
                weight: w,
            });
        }
        let mut adj = vec![Vec::new(); n];
        for (idx, e) in edges.iter().enumerate() {
            adj[e.u].push((e.v, idx));
            adj[e.v].push((e.u, idx));
        }
        Ok(Self { labels, edges, adj })
    }

    /// Graph whose edges are the nonzero off-diagonal entries of a
    /// symmetric matrix. The diagonal must be zero (no self-loops).
    pub fn from_matrix(labels: Vec<String>, m: &ExactMatrix) -> Result<Self> {
        if !m.is_square() || m.order() != labels.len() {
            return Err(Error::DimensionMismatch {
                left: labels.len(),
                right: m.rows(),
            });
        }
        if !m.has_zero_diagonal() {
            return Err(Error::NotApplicable(
                "matrix has a nonzero diagonal entry".into(),
            ));
        }
        let n = labels.len();
        let mut edges = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                if !m[(i, j)].is_zero() {
                    edges.push((i, j, m[(i, j)].clone()));
                }
            }
        }
        Self::new(labels, edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.vertex_count()).map(|v| self.degree(v)).collect()
    }

    /// Neighbours of `v` as (neighbour, edge index) pairs.
    pub fn neighbors(&self, v: usize) -> &[(usize, usize)] {
        &self.adj[v]
    }

    pub fn edge_index_between(&self, u: usize, v: usize) -> Option<usize> {
        self.adj[u].iter().find(|&&(w, _)| w == v).map(|&(_, i)| i)
    }

    pub fn weight_between(&self, u: usize, v: usize) -> Option<&Rational> {
        self.edge_index_between(u, v).map(|i| &self.edges[i].weight)
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &(w, _) in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == n
    }

    /// Proper 2-colouring of the vertices, or `None` if an odd cycle exists.
    pub fn two_color(&self) -> Option<Vec<u8>> {
        let n = self.vertex_count();
        let mut color = vec![u8::MAX; n];
        for start in 0..n {
            if color[start] != u8::MAX {
                continue;
            }
            color[start] = 0;
            let mut queue = std::collections::VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for &(w, _) in &self.adj[v] {
                    if color[w] == u8::MAX {
                        color[w] = 1 - color[v];
                        queue.push_back(w);
                    } else if color[w] == color[v] {
                        return None;
                    }
                }
            }
        }
        Some(color)
    }

    /// Some 4-cycle `[a, x, b, y]` (edges a-x, x-b, b-y, y-a), if one exists.
    /// Deterministic: first hit in lexicographic scan order.
    pub fn find_four_cycle(&self) -> Option<[usize; 4]> {
        let n = self.vertex_count();
        for a in 0..n {
            for b in (a + 1)..n {
                let mut common = self.adj[a]
                    .iter()
                    .map(|&(w, _)| w)
                    .filter(|&w| w != b && self.edge_index_between(b, w).is_some())
                    .collect::<Vec<_>>();
                common.sort_unstable();
                if common.len() >= 2 {
                    return Some([a, common[0], b, common[1]]);
                }
            }
        }
        None
    }

    /// Symmetric zero-diagonal adjacency matrix.
    pub fn adjacency_matrix(&self) -> ExactMatrix {
        let n = self.vertex_count();
        let mut m = ExactMatrix::zeros(n, n);
        for e in &self.edges {
            m[(e.u, e.v)] = e.weight.clone();
            m[(e.v, e.u)] = e.weight.clone();
        }
        m
    }
}

/// Membership profile for the class of trees in which every non-pendant
/// vertex has at least one pendant neighbour.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassTProfile {
    /// Non-pendant (internal) vertices, ascending.
    pub non_pendant_vertices: Vec<usize>,
    /// Pendant-neighbour count per non-pendant vertex, aligned with
    /// `non_pendant_vertices`.
    pub pendant_counts: Vec<usize>,
    pub is_member: bool,
    pub is_corona: bool,
    pub is_caterpillar: bool,
    pub is_star: bool,
}

/// A validated undirected weighted tree.
#[derive(Debug, Clone)]
pub struct WeightedTree {
    graph: WeightedGraph,
    // Rooted at vertex 0: (parent, edge to parent) and depth, for
    // constant-time unique-path queries.
    parent: Vec<Option<(usize, usize)>>,
    depth: Vec<usize>,
}

impl WeightedTree {
    pub fn new(labels: Vec<String>, edges: Vec<(usize, usize, Rational)>) -> Result<Self> {
        let graph = WeightedGraph::new(labels, edges)?;
        let n = graph.vertex_count();
        if n == 0 {
            return Err(Error::NotATree("no vertices".into()));
        }
        if graph.edge_count() != n - 1 {
            return Err(Error::NotATree(format!(
                "{} vertices need {} edges, found {}",
                n,
                n - 1,
                graph.edge_count()
            )));
        }
        if !graph.is_connected() {
            return Err(Error::NotATree("edge list is disconnected".into()));
        }
        // n-1 edges + connected => acyclic.
        let mut parent = vec![None; n];
        let mut depth = vec![0; n];
        let mut order = vec![0];
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut head = 0;
        while head < order.len() {
            let v = order[head];
            head += 1;
            for &(w, e) in graph.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = Some((v, e));
                    depth[w] = depth[v] + 1;
                    order.push(w);
                }
            }
        }
        Ok(Self {
            graph,
            parent,
            depth,
        })
    }

    /// Parse an edge-list document (see the crate docs for the format).
    pub fn parse(text: &str) -> Result<Self> {
        let mut labels: Vec<String> = Vec::new();
        let mut index: HashMap<String, usize> = HashMap::new();
        let mut edges: Vec<(usize, usize, Rational)> = Vec::new();
        let intern = |labels: &mut Vec<String>, index: &mut HashMap<String, usize>, token: &str| {
            *index.entry(token.to_string()).or_insert_with(|| {
                labels.push(token.to_string());
                labels.len() - 1
            })
        };
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let tokens: Vec<&str> = line.split_whitespace().collect();
            if tokens[0] == "vertices" {
                if !labels.is_empty() {
                    return Err(Error::Parse {
                        line: lineno + 1,
                        msg: "vertices header must come before any edge".into(),
                    });
                }
                if tokens.len() < 2 {
                    return Err(Error::Parse {
                        line: lineno + 1,
                        msg: "vertices header declares no labels".into(),
                    });
                }
                for t in &tokens[1..] {
                    intern(&mut labels, &mut index, t);
                }
                continue;
            }
            if tokens.len() != 3 {
                return Err(Error::Parse {
                    line: lineno + 1,
                    msg: format!("expected `<u> <v> <w>`, found {} tokens", tokens.len()),
                });
            }
            let w = parse_rational(tokens[2]).ok_or_else(|| Error::Parse {
                line: lineno + 1,
                msg: format!("bad rational {:?}", tokens[2]),
            })?;
            let u = intern(&mut labels, &mut index, tokens[0]);
            let v = intern(&mut labels, &mut index, tokens[1]);
            edges.push((u, v, w));
        }
        if labels.is_empty() {
            return Err(Error::NotATree("document declares no vertices".into()));
        }
        Self::new(labels, edges)
    }

    pub fn as_graph(&self) -> &WeightedGraph {
        &self.graph
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    pub fn labels(&self) -> &[String] {
        self.graph.labels()
    }

    pub fn label(&self, v: usize) -> &str {
        self.graph.label(v)
    }

    pub fn edges(&self) -> &[Edge] {
        self.graph.edges()
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.graph.degree(v)
    }

    pub fn neighbors(&self, v: usize) -> &[(usize, usize)] {
        self.graph.neighbors(v)
    }

    pub fn edge_index_between(&self, u: usize, v: usize) -> Option<usize> {
        self.graph.edge_index_between(u, v)
    }

    pub fn adjacency_matrix(&self) -> ExactMatrix {
        self.graph.adjacency_matrix()
    }

    pub fn is_pendant(&self, v: usize) -> bool {
        self.degree(v) == 1
    }

    /// Pendant (degree-one) vertices, ascending.
    pub fn pendant_vertices(&self) -> Vec<usize> {
        (0..self.vertex_count())
            .filter(|&v| self.is_pendant(v))
            .collect()
    }

    /// An edge is pendant when one endpoint has degree one.
    pub fn is_pendant_edge(&self, edge_idx: usize) -> bool {
        let e = &self.edges()[edge_idx];
        self.degree(e.u) == 1 || self.degree(e.v) == 1
    }

    /// Vertices of the unique path from `i` to `j`, inclusive.
    pub fn path_vertices(&self, i: usize, j: usize) -> Vec<usize> {
        let (mut a, mut b) = (i, j);
        let mut front = vec![a];
        let mut back = vec![b];
        while self.depth[a] > self.depth[b] {
            a = self.parent[a].unwrap().0;
            front.push(a);
        }
        while self.depth[b] > self.depth[a] {
            b = self.parent[b].unwrap().0;
            back.push(b);
        }
        while a != b {
            a = self.parent[a].unwrap().0;
            b = self.parent[b].unwrap().0;
            front.push(a);
            back.push(b);
        }
        back.pop();
        back.reverse();
        front.extend(back);
        front
    }

    /// Edge indices along the unique path from `i` to `j`, in path order.
    pub fn path_edges(&self, i: usize, j: usize) -> Vec<usize> {
        let verts = self.path_vertices(i, j);
        verts
            .windows(2)
            .map(|w| self.edge_index_between(w[0], w[1]).expect("tree path edge"))
            .collect()
    }

    /// Number of edges on the unique `i`-`j` path.
    pub fn distance(&self, i: usize, j: usize) -> usize {
        let (mut a, mut b) = (i, j);
        let mut d = 0;
        while self.depth[a] > self.depth[b] {
            a = self.parent[a].unwrap().0;
            d += 1;
        }
        while self.depth[b] > self.depth[a] {
            b = self.parent[b].unwrap().0;
            d += 1;
        }
        while a != b {
            a = self.parent[a].unwrap().0;
            b = self.parent[b].unwrap().0;
            d += 2;
        }
        d
    }

    /// Two-colouring by parity of distance from vertex 0; every edge
    /// crosses the parts.
    pub fn bipartition(&self) -> (Vec<usize>, Vec<usize>) {
        let mut even = Vec::new();
        let mut odd = Vec::new();
        for v in 0..self.vertex_count() {
            if self.depth[v].is_multiple_of(2) {
                even.push(v);
            } else {
                odd.push(v);
            }
        }
        (even, odd)
    }

    /// True iff the adjacency matrix is singular (exact rank < n).
    pub fn is_singular(&self) -> bool {
        let rank = self.adjacency_matrix().rank();
        debug_assert_eq!(
            rank,
            2 * crate::matching::matching_number(self),
            "adjacency rank must be twice the matching number"
        );
        rank < self.vertex_count()
    }

    /// Classification: pendant structure, class membership, corona,
    /// caterpillar, star.
    pub fn classify(&self) -> ClassTProfile {
        let n = self.vertex_count();
        let non_pendant: Vec<usize> = (0..n).filter(|&v| self.degree(v) >= 2).collect();
        let pendant_counts: Vec<usize> = non_pendant
            .iter()
            .map(|&v| {
                self.neighbors(v)
                    .iter()
                    .filter(|&&(w, _)| self.is_pendant(w))
                    .count()
            })
            .collect();
        let k = non_pendant.len();
        let is_member = k >= 1 && pendant_counts.iter().all(|&t| t >= 1);
        let is_corona = is_member && pendant_counts.iter().all(|&t| t == 1) && n == 2 * k;
        let is_star = n >= 3 && k == 1;
        let is_caterpillar = n >= 2 && self.spine().is_some();
        ClassTProfile {
            non_pendant_vertices: non_pendant,
            pendant_counts,
            is_member,
            is_corona,
            is_caterpillar,
            is_star,
        }
    }

    /// Non-pendant vertices in path order, when they induce a path.
    /// `Some(empty)` for trees with no non-pendant vertex.
    pub fn spine(&self) -> Option<Vec<usize>> {
        let spine_set: Vec<usize> = (0..self.vertex_count())
            .filter(|&v| self.degree(v) >= 2)
            .collect();
        if spine_set.len() <= 1 {
            return Some(spine_set);
        }
        let on_spine = |v: usize| self.degree(v) >= 2;
        // Induced degree within the spine; a path has exactly two ends.
        let induced_deg = |v: usize| {
            self.neighbors(v)
                .iter()
                .filter(|&&(w, _)| on_spine(w))
                .count()
        };
        if spine_set.iter().any(|&v| induced_deg(v) > 2) {
            return None;
        }
        let start = *spine_set.iter().find(|&&v| induced_deg(v) <= 1)?;
        let mut ordered = vec![start];
        let mut prev = usize::MAX;
        let mut cur = start;
        loop {
            let next = self
                .neighbors(cur)
                .iter()
                .map(|&(w, _)| w)
                .find(|&w| on_spine(w) && w != prev);
            match next {
                Some(w) => {
                    ordered.push(w);
                    prev = cur;
                    cur = w;
                }
                None => break,
            }
        }
        if ordered.len() == spine_set.len() {
            Some(ordered)
        } else {
            None
        }
    }

    /// True iff every vertex has degree at most two (and the tree is a path).
    pub fn is_path(&self) -> bool {
        (0..self.vertex_count()).all(|v| self.degree(v) <= 2)
    }

    /// Render as an edge-list document that `parse` accepts. The header
    /// pins the vertex order, so the round trip is exact.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::from("vertices");
        for l in self.labels() {
            out.push(' ');
            out.push_str(l);
        }
        out.push('\n');
        for e in self.edges() {
            out.push_str(&format!(
                "{} {} {}\n",
                self.label(e.u),
                self.label(e.v),
                crate::rational::format_rational(&e.weight)
            ));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::rational::rat;

    #[test]
    fn parses_p5() {
        let t = WeightedTree::parse("1 2 1\n2 3 1\n3 4 1\n4 5 1").unwrap();
        assert_eq!(t.vertex_count(), 5);
        assert_eq!(t.labels(), &["1", "2", "3", "4", "5"]);
        assert_eq!(t.edge_count(), 4);
    }

    #[test]
    fn rejects_cycles_and_disconnection() {
        match WeightedTree::parse("1 2 1\n1 3 1\n2 3 1") {
            Err(Error::NotATree(_)) => {}
            other => panic!("expected NotATree, got {other:?}"),
        }
        match WeightedTree::parse("1 2 1\n3 4 1") {
            Err(Error::NotATree(_)) => {}
            other => panic!("expected NotATree, got {other:?}"),
        }
        match WeightedTree::parse("1 2 1\n2 1 2") {
            Err(Error::NotATree(_)) => {}
            other => panic!("expected NotATree (duplicate), got {other:?}"),
        }
    }

    #[test]
    fn rejects_zero_weight_and_bad_rationals() {
        match WeightedTree::parse("1 2 0") {
            Err(Error::ZeroWeight { .. }) => {}
            other => panic!("expected ZeroWeight, got {other:?}"),
        }
        match WeightedTree::parse("1 2 x") {
            Err(Error::Parse { line: 1, .. }) => {}
            other => panic!("expected Parse, got {other:?}"),
        }
        match WeightedTree::parse("1 2") {
            Err(Error::Parse { .. }) => {}
            other => panic!("expected Parse, got {other:?}"),
        }
    }

    #[test]
    fn comments_decimals_and_header() {
        let t = WeightedTree::parse("# a comment\n1 2 0.5\n2 3 -3/6").unwrap();
        assert_eq!(t.edges()[0].weight, crate::rational::frac(1, 2));
        assert_eq!(t.edges()[1].weight, crate::rational::frac(-1, 2));
        let single = WeightedTree::parse("vertices a").unwrap();
        assert_eq!(single.vertex_count(), 1);
        let ordered = WeightedTree::parse("vertices c b a\nb a 1\nc b 2").unwrap();
        assert_eq!(ordered.labels(), &["c", "b", "a"]);
    }

    #[test]
    fn adjacency_of_star_fixture() {
        let t = fixtures::star12();
        let a = t.adjacency_matrix();
        let expect = ExactMatrix::from_int_rows(&[&[0, 0, 1], &[0, 0, 2], &[1, 2, 0]]);
        assert_eq!(a, expect);
    }

    #[test]
    fn adjacency_of_p5_is_the_unit_path_matrix() {
        let a = fixtures::p5().adjacency_matrix();
        let expect = ExactMatrix::from_int_rows(&[
            &[0, 1, 0, 0, 0],
            &[1, 0, 1, 0, 0],
            &[0, 1, 0, 1, 0],
            &[0, 0, 1, 0, 1],
            &[0, 0, 0, 1, 0],
        ]);
        assert_eq!(a, expect);
    }

    #[test]
    fn adjacency_of_t6_matches_unit_pattern() {
        let t = fixtures::t6();
        let a = t.adjacency_matrix();
        let expect = ExactMatrix::from_int_rows(&[
            &[0, 1, 0, 0, 0, 0],
            &[1, 0, 1, 0, 0, 0],
            &[0, 1, 0, 1, 0, 0],
            &[0, 0, 1, 0, 1, 1],
            &[0, 0, 0, 1, 0, 0],
            &[0, 0, 0, 1, 0, 0],
        ]);
        assert_eq!(a, expect);
    }

    #[test]
    fn classify_fixtures() {
        let p = fixtures::t1().classify();
        assert!(p.is_member);
        assert_eq!(p.non_pendant_vertices, vec![0, 1, 2]);
        assert_eq!(p.pendant_counts, vec![2, 1, 1]);
        assert!(p.is_caterpillar);
        assert!(!p.is_corona);
        assert!(!p.is_star);

        let q = fixtures::t2().classify();
        assert!(!q.is_member);

        let s = fixtures::star12().classify();
        assert!(s.is_star && s.is_member && s.is_caterpillar);
        assert_eq!(s.non_pendant_vertices, vec![2]);
        assert_eq!(s.pendant_counts, vec![2]);
    }

    #[test]
    fn corona_of_two_vertex_base_is_member() {
        // base 1-2, pendants 3 on 1 and 4 on 2: the four-vertex path.
        let t = WeightedTree::parse("3 1 1\n1 2 1\n2 4 1").unwrap();
        let p = t.classify();
        assert!(p.is_member && p.is_corona && !p.is_star);
    }

    #[test]
    fn singularity() {
        assert!(fixtures::p5().is_singular());
        assert!(fixtures::t1().is_singular());
        let k2 = WeightedTree::parse("1 2 5").unwrap();
        assert!(!k2.is_singular());
    }

    #[test]
    fn bipartition_fixtures() {
        assert_eq!(fixtures::p5().bipartition(), (vec![0, 2, 4], vec![1, 3]));
        assert_eq!(fixtures::t6().bipartition(), (vec![0, 2, 4, 5], vec![1, 3]));
        assert_eq!(fixtures::star12().bipartition(), (vec![0, 1], vec![2]));
    }

    #[test]
    fn paths_and_distance() {
        let t = fixtures::t1();
        assert_eq!(t.path_vertices(3, 5), vec![3, 0, 1, 5]);
        assert_eq!(t.distance(3, 5), 3);
        assert_eq!(t.distance(5, 3), 3);
        assert_eq!(t.distance(0, 0), 0);
        assert_eq!(t.path_vertices(6, 6), vec![6]);
    }

    #[test]
    fn single_vertex_tree() {
        let t = WeightedTree::new(vec!["a".into()], vec![]).unwrap();
        assert_eq!(t.vertex_count(), 1);
        assert!(!t.classify().is_member);
        assert!(t.classify().non_pendant_vertices.is_empty());
        assert!(t.is_singular());
    }

    #[test]
    fn edge_list_round_trip() {
        let t = fixtures::t1();
        let rendered = t.to_edge_list();
        let back = WeightedTree::parse(&rendered).unwrap();
        assert_eq!(back.labels(), t.labels());
        assert_eq!(back.edges(), t.edges());
    }

    #[test]
    fn four_cycle_detection_on_graphs() {
        let square = WeightedGraph::new(
            vec!["a".into(), "b".into(), "c".into(), "d".into()],
            vec![
                (0, 1, rat(1)),
                (1, 2, rat(1)),
                (2, 3, rat(1)),
                (3, 0, rat(1)),
            ],
        )
        .unwrap();
        let cyc = square.find_four_cycle().unwrap();
        assert_eq!(cyc, [0, 1, 2, 3]);
        let path = WeightedGraph::new(
            vec!["a".into(), "b".into(), "c".into()],
            vec![(0, 1, rat(1)), (1, 2, rat(1))],
        )
        .unwrap();
        assert!(path.find_four_cycle().is_none());
    }
}
