#![allow(dead_code)]

use lattice_walks::graph::{FiniteGraph, Vertex};
use rand::Rng;

/// Graph on `{0, .., n-1}` rooted at 0, with edge `(i, j)` for `i < j`
/// present when the matching bit is set.
pub fn graph_from_bits(name: &str, n: usize, bits: &[bool]) -> FiniteGraph {
    let vertices = (0..n as i64).map(Vertex::from).collect();
    let pairs = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
    let edges: Vec<(usize, usize)> = pairs
        .zip(bits.iter().cycle())
        .filter(|(_, &b)| b)
        .map(|(p, _)| p)
        .collect();
    let mut g = FiniteGraph::from_edges(name, vertices, edges).unwrap();
    g.set_root(0);
    g
}

/// Random graph on `n` vertices; when `connected`, a random spanning tree is
/// laid down first.
pub fn random_graph(rng: &mut impl Rng, name: &str, n: usize, connected: bool) -> FiniteGraph {
    let p: f64 = rng.random_range(0.1..0.7);
    let mut edges = Vec::new();
    for j in 1..n {
        if connected {
            edges.push((rng.random_range(0..j), j));
        }
        for i in 0..j {
            if rng.random_bool(p) {
                edges.push((i, j));
            }
        }
    }
    let vertices = (0..n as i64).map(Vertex::from).collect();
    let mut g = FiniteGraph::from_edges(name, vertices, edges).unwrap();
    g.set_root(0);
    g
}

/// `(A^m)_{oo}` for `m <= m_max` by dense matrix powers built from the edge set.
pub fn dense_walks(g: &FiniteGraph, root: usize, m_max: usize) -> Vec<u128> {
    let n = g.len();
    let mut a = vec![vec![0u128; n]; n];
    for (i, j) in g.edges() {
        a[i][j] = 1;
        a[j][i] = 1;
    }
    let mut power: Vec<Vec<u128>> = (0..n)
        .map(|i| (0..n).map(|j| u128::from(i == j)).collect())
        .collect();
    let mut out = vec![1u128];
    for _ in 1..=m_max {
        let mut next = vec![vec![0u128; n]; n];
        for i in 0..n {
            for k in 0..n {
                if power[i][k] == 0 {
                    continue;
                }
                for j in 0..n {
                    next[i][j] += power[i][k] * a[k][j];
                }
            }
        }
        power = next;
        out.push(power[root][root]);
    }
    out
}

/// Reverses the order of a product vertex's factor blocks of width `split`.
pub fn swap_at(v: &Vertex, split: usize) -> Vertex {
    let (a, b) = v.split(split);
    b.concat(&a)
}
