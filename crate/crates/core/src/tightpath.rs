//! Tight paths on arbitrary positively weighted digraphs.
//!
//! Each root grows a [`PathTree`]: one node per distinct root-anchored path
//! of cost within budget, so a graph vertex can appear many times. The stack
//! holds tree-node indices; a popped node with no admissible extension is
//! reported when the cheapest edge entering the root would also overflow.

use std::collections::HashSet;
use std::fmt::Write as _;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::{Path, VertexId, WeightedDigraph};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TreeNode {
    pub vertex: VertexId,
    pub parent: Option<usize>,
    pub cost: f64,
}

/// Per-root bookkeeping tree. Node 0 is the root; links are never rewritten.
#[derive(Debug, Clone, PartialEq)]
pub struct PathTree {
    nodes: Vec<TreeNode>,
}

impl PathTree {
    pub fn new(root: VertexId) -> Self {
        PathTree {
            nodes: vec![TreeNode {
                vertex: root,
                parent: None,
                cost: 0.0,
            }],
        }
    }

    pub fn root(&self) -> VertexId {
        self.nodes[0].vertex
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn node(&self, index: usize) -> Result<&TreeNode> {
        self.nodes.get(index).ok_or(Error::NodeOutOfRange {
            index,
            len: self.nodes.len(),
        })
    }

    pub fn nodes(&self) -> &[TreeNode] {
        &self.nodes
    }

    fn push(&mut self, vertex: VertexId, parent: usize, cost: f64) -> usize {
        self.nodes.push(TreeNode {
            vertex,
            parent: Some(parent),
            cost,
        });
        self.nodes.len() - 1
    }

    /// Walks parent links from `leaf` up to node 0 and reverses.
    pub fn reconstruct_path(&self, leaf: usize) -> Result<Path> {
        let cost = self.node(leaf)?.cost;
        let mut vertices = Vec::new();
        let mut cursor = Some(leaf);
        while let Some(i) = cursor {
            let node = &self.nodes[i];
            vertices.push(node.vertex);
            cursor = node.parent;
        }
        vertices.reverse();
        Ok(Path { vertices, cost })
    }
}

/// Deduplicated tight paths in discovery order.
#[derive(Debug, Clone, Default)]
pub struct TightPathSet {
    paths: Vec<Path>,
    seen: HashSet<Vec<VertexId>>,
}

impl TightPathSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, path: Path) -> bool {
        if self.seen.insert(path.vertices.clone()) {
            self.paths.push(path);
            true
        } else {
            false
        }
    }

    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    pub fn paths(&self) -> &[Path] {
        &self.paths
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Path> {
        self.paths.iter()
    }

    pub fn contains(&self, vertices: &[VertexId]) -> bool {
        self.seen.contains(vertices)
    }

    /// Vertex sequences as an order-insensitive set.
    pub fn vertex_sets(&self) -> HashSet<Vec<VertexId>> {
        self.seen.clone()
    }

    pub fn named(&self, names: &[String]) -> HashSet<Vec<String>> {
        self.paths
            .iter()
            .map(|p| p.vertices.iter().map(|&v| names[v].clone()).collect())
            .collect()
    }

    /// Sum of path lengths, counted in vertices.
    pub fn total_length(&self) -> usize {
        self.paths.iter().map(Path::len).sum()
    }

    /// One path per line: space-separated vertices, a tab, the cost.
    pub fn render(&self, names: &[String]) -> String {
        let mut out = String::new();
        for p in &self.paths {
            let _ = writeln!(out, "{}\t{}", p.names(names).join(" "), p.cost);
        }
        out
    }
}

impl Extend<Path> for TightPathSet {
    fn extend<I: IntoIterator<Item = Path>>(&mut self, iter: I) {
        for p in iter {
            self.insert(p);
        }
    }
}

impl FromIterator<Path> for TightPathSet {
    fn from_iter<I: IntoIterator<Item = Path>>(iter: I) -> Self {
        let mut set = TightPathSet::new();
        set.extend(iter);
        set
    }
}

/// Runs the traversal from `root` and returns the tight leaves alongside the
/// finished tree.
pub fn explore_from_root(
    g: &WeightedDigraph,
    root: VertexId,
    budget: Budget,
) -> Result<(Vec<usize>, PathTree)> {
    if root >= g.vertex_count() {
        return Err(Error::UnknownVertex(format!("#{root}")));
    }
    let entry_cost = g.min_predecessor_cost(root);
    let mut tree = PathTree::new(root);
    let mut stack = vec![0usize];
    let mut tight = Vec::new();
    while let Some(node) = stack.pop() {
        let TreeNode { vertex, cost, .. } = tree.nodes[node];
        let mut extended = false;
        for &(next, step) in g.successors(vertex) {
            let reach = cost + step;
            if budget.admits(reach) {
                stack.push(tree.push(next, node, reach));
                extended = true;
            }
        }
        if !extended && budget.exceeded_by(entry_cost + cost) {
            tight.push(node);
        }
    }
    Ok((tight, tree))
}

pub fn tight_paths_from_root(
    g: &WeightedDigraph,
    root: VertexId,
    budget: Budget,
) -> Result<TightPathSet> {
    let (leaves, tree) = explore_from_root(g, root, budget)?;
    leaves.into_iter().map(|i| tree.reconstruct_path(i)).collect()
}

pub fn tight_paths_from_named_root(
    g: &WeightedDigraph,
    root: &str,
    budget: Budget,
) -> Result<TightPathSet> {
    tight_paths_from_root(g, g.vertex(root)?, budget)
}

/// Union over every vertex as root, in vertex order.
pub fn all_tight_paths(g: &WeightedDigraph, budget: Budget) -> TightPathSet {
    let mut all = TightPathSet::new();
    for root in g.vertices() {
        let from_root = tight_paths_from_root(g, root, budget).expect("root is in range");
        all.extend(from_root.paths);
    }
    all
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_edge_list;

    const TWO_ROUTES: &str = "A B 2\nB C 1\nC E 1\nA D 1\nD E 2\n";
    const DOUBLE_LOOP: &str = "A B 2\nB C 1\nC A 1\nA D 1\nD E 2\nE A 1\n";

    fn named(g: &WeightedDigraph, set: &TightPathSet) -> HashSet<String> {
        set.iter().map(|p| p.names(g.names()).join("")).collect()
    }

    fn strs(items: &[&str]) -> HashSet<String> {
        items.iter().map(|s| s.to_string()).collect()
    }

    fn b(g: f64) -> Budget {
        Budget::new(g).unwrap()
    }

    #[test]
    fn two_routes_root_a() {
        let g = parse_edge_list(TWO_ROUTES).unwrap();
        let got = tight_paths_from_named_root(&g, "A", b(3.0)).unwrap();
        assert_eq!(named(&g, &got), strs(&["ABC", "ADE"]));
    }

    #[test]
    fn double_loop_root_a() {
        let g = parse_edge_list(DOUBLE_LOOP).unwrap();
        let got = tight_paths_from_named_root(&g, "A", b(4.0)).unwrap();
        assert_eq!(named(&g, &got), strs(&["ABCA", "ADEA"]));
        let got = tight_paths_from_named_root(&g, "A", b(12.0)).unwrap();
        assert_eq!(got.len(), 8);
        for p in got.iter() {
            assert_eq!(p.len(), 10);
            assert_eq!(p.cost, 12.0);
        }
    }

    #[test]
    fn isolated_vertex_is_its_own_tight_path() {
        let g = WeightedDigraph::new(vec!["v".into()], vec![]).unwrap();
        for gamma in [0.0, 2.5, 100.0] {
            let got = tight_paths_from_root(&g, 0, b(gamma)).unwrap();
            assert_eq!(got.len(), 1);
            assert_eq!(got.paths()[0].vertices, vec![0]);
            assert_eq!(got.paths()[0].cost, 0.0);
        }
    }

    #[test]
    fn unknown_root() {
        let g = parse_edge_list(TWO_ROUTES).unwrap();
        assert!(matches!(
            tight_paths_from_named_root(&g, "Q", b(1.0)),
            Err(Error::UnknownVertex(_))
        ));
        assert!(tight_paths_from_root(&g, 99, b(1.0)).is_err());
    }

    #[test]
    fn reconstruct_root_only_and_bad_index() {
        let tree = PathTree::new(3);
        let p = tree.reconstruct_path(0).unwrap();
        assert_eq!(p.vertices, vec![3]);
        assert_eq!(p.cost, 0.0);
        assert_eq!(
            tree.reconstruct_path(1).unwrap_err(),
            Error::NodeOutOfRange { index: 1, len: 1 }
        );
    }

    #[test]
    fn reconstructed_costs_match_graph() {
        let g = parse_edge_list(TWO_ROUTES).unwrap();
        let (leaves, tree) = explore_from_root(&g, 0, b(3.0)).unwrap();
        let mut found_abc = false;
        for i in 0..tree.len() {
            let p = tree.reconstruct_path(i).unwrap();
            assert_eq!(g.path_cost(&p.vertices), Some(p.cost));
            if leaves.contains(&i) && p.names(g.names()) == ["A", "B", "C"] {
                assert_eq!(p.cost, 3.0);
                found_abc = true;
            }
        }
        assert!(found_abc);
    }

    #[test]
    fn tree_invariants_hold() {
        let g = parse_edge_list(DOUBLE_LOOP).unwrap();
        let (_, tree) = explore_from_root(&g, 0, b(9.0)).unwrap();
        assert_eq!(tree.nodes()[0].parent, None);
        assert_eq!(tree.nodes()[0].cost, 0.0);
        for n in &tree.nodes()[1..] {
            let parent = &tree.nodes()[n.parent.unwrap()];
            let step = g.edge_cost(parent.vertex, n.vertex).unwrap();
            assert_eq!(n.cost, parent.cost + step);
            assert!(n.cost <= 9.0);
        }
    }

    #[test]
    fn two_routes_all_roots() {
        let g = parse_edge_list(TWO_ROUTES).unwrap();
        let got = all_tight_paths(&g, b(3.0));
        assert_eq!(named(&g, &got), strs(&["ABC", "BCE", "ADE"]));
    }

    #[test]
    fn render_format() {
        let g = parse_edge_list(TWO_ROUTES).unwrap();
        let got = tight_paths_from_named_root(&g, "A", b(3.0)).unwrap();
        let text = got.render(g.names());
        assert!(text.lines().any(|l| l == "A B C\t3"));
        assert!(text.lines().any(|l| l == "A D E\t3"));
    }
}
