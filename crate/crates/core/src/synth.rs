//! Seeded generators for benchmark and test inputs.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{VertexWeightedDag, WeightedDigraph};

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn loop_names(i: usize) -> (String, String) {
    match i {
        0 => ("B".into(), "C".into()),
        1 => ("D".into(), "E".into()),
        _ => (format!("L{i}a"), format!("L{i}b")),
    }
}

/// `loops` cycles of cost 4 through a hub `A`. Two loops give exactly the
/// graph `A B 2, B C 1, C A 1, A D 1, D E 2, E A 1`.
pub fn double_loop(loops: usize) -> Result<WeightedDigraph> {
    if loops == 0 {
        return Err(Error::InvalidParameter("double-loop needs at least one loop".into()));
    }
    let mut edges = Vec::with_capacity(3 * loops);
    for i in 0..loops {
        let (x, y) = loop_names(i);
        let (c1, c2) = if i % 2 == 0 { (2.0, 1.0) } else { (1.0, 2.0) };
        edges.push(("A".to_string(), x.clone(), c1));
        edges.push((x, y.clone(), c2));
        edges.push((y, "A".to_string(), 1.0));
    }
    WeightedDigraph::from_named_edges(&edges)
}

/// Bottom vertex, `layers` layers of `width` vertices, top vertex; complete
/// bipartite edges between consecutive layers. Layer `i` weights lie in
/// `[i, i + 0.9)`, so every root-to-sink route is a distinct parallel path.
pub fn layered_lattice<R: Rng>(layers: usize, width: usize, rng: &mut R) -> Result<VertexWeightedDag> {
    if layers == 0 || width == 0 {
        return Err(Error::InvalidParameter(
            "layered lattice needs at least one layer of width one".into(),
        ));
    }
    let mut names = vec!["bot".to_string()];
    let mut weights = vec![0.0];
    let mut levels: Vec<Vec<usize>> = vec![vec![0]];
    for i in 1..=layers {
        let mut level = Vec::with_capacity(width);
        for j in 0..width {
            names.push(format!("l{i}_{j}"));
            // three decimals keep the rendered file exact
            let jitter = (rng.gen_range(0.0..0.9f64) * 1000.0).round() / 1000.0;
            weights.push(i as f64 + jitter);
            level.push(names.len() - 1);
        }
        levels.push(level);
    }
    names.push("top".to_string());
    weights.push((layers + 1) as f64);
    levels.push(vec![names.len() - 1]);
    let mut edges = Vec::new();
    for pair in levels.windows(2) {
        for &u in &pair[0] {
            for &v in &pair[1] {
                edges.push((u, v));
            }
        }
    }
    VertexWeightedDag::new(names, weights, edges)
}

/// `n` vertices with integer weights increasing by 1 to 3, each forward
/// pair joined with probability `edge_prob`. Integer weights make
/// boundary ties at integer thresholds common.
pub fn random_dag<R: Rng>(n: usize, edge_prob: f64, rng: &mut R) -> Result<VertexWeightedDag> {
    check_graph_params(n, edge_prob)?;
    let mut weights = Vec::with_capacity(n);
    let mut w = 0.0;
    for _ in 0..n {
        weights.push(w);
        w += rng.gen_range(1..=3) as f64;
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(edge_prob) {
                edges.push((u, v));
            }
        }
    }
    VertexWeightedDag::new(vertex_names(n), weights, edges)
}

/// `n` vertices, each ordered pair (self-loops included) present with
/// probability `edge_prob` and an integer cost in `1..=max_cost`.
pub fn random_digraph<R: Rng>(
    n: usize,
    edge_prob: f64,
    max_cost: u32,
    rng: &mut R,
) -> Result<WeightedDigraph> {
    check_graph_params(n, edge_prob)?;
    if max_cost == 0 {
        return Err(Error::InvalidParameter("max cost must be positive".into()));
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if rng.gen_bool(edge_prob) {
                edges.push((u, v, rng.gen_range(1..=max_cost) as f64));
            }
        }
    }
    WeightedDigraph::new(vertex_names(n), edges)
}

fn check_graph_params(n: usize, edge_prob: f64) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidParameter("graph needs at least one vertex".into()));
    }
    if !(0.0..=1.0).contains(&edge_prob) {
        return Err(Error::InvalidParameter(format!(
            "edge probability {edge_prob} outside [0, 1]"
        )));
    }
    Ok(())
}

fn vertex_names(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("v{i}")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{parse_edge_list, render_edge_list, render_vertex_weighted};

    #[test]
    fn double_loop_default_matches_fixture() {
        let want = parse_edge_list("A B 2\nB C 1\nC A 1\nA D 1\nD E 2\nE A 1\n").unwrap();
        let got = double_loop(2).unwrap();
        assert_eq!(render_edge_list(&got), render_edge_list(&want));
        assert!(double_loop(0).is_err());
        assert_eq!(double_loop(3).unwrap().vertex_count(), 7);
    }

    #[test]
    fn small_layered_lattice() {
        let dag = layered_lattice(2, 2, &mut seeded(1)).unwrap();
        assert_eq!(dag.vertex_count(), 6);
        assert_eq!(dag.edge_count(), 2 + 4 + 2);
        for &(u, v) in dag.edges() {
            assert!(dag.weight(u) < dag.weight(v));
        }
        assert!(layered_lattice(0, 3, &mut seeded(1)).is_err());
    }

    #[test]
    fn same_seed_same_output() {
        let a = render_vertex_weighted(&layered_lattice(5, 3, &mut seeded(9)).unwrap());
        let b = render_vertex_weighted(&layered_lattice(5, 3, &mut seeded(9)).unwrap());
        assert_eq!(a, b);
        let a = render_edge_list(&random_digraph(6, 0.3, 4, &mut seeded(2)).unwrap());
        let b = render_edge_list(&random_digraph(6, 0.3, 4, &mut seeded(2)).unwrap());
        assert_eq!(a, b);
    }

    #[test]
    fn random_dag_respects_weights() {
        let dag = random_dag(12, 0.4, &mut seeded(3)).unwrap();
        for &(u, v) in dag.edges() {
            assert!(dag.weight(u) < dag.weight(v));
        }
        assert!(random_dag(0, 0.5, &mut seeded(3)).is_err());
        assert!(random_dag(3, 1.5, &mut seeded(3)).is_err());
    }
}
