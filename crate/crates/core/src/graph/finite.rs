use std::collections::HashMap;

use super::Vertex;
use crate::error::{invalid, Result};

/// Explicit graph: vertex list plus sorted, symmetric adjacency lists.
#[derive(Clone, Debug)]
pub struct FiniteGraph {
    name: String,
    dim: usize,
    vertices: Vec<Vertex>,
    adjacency: Vec<Vec<usize>>,
    root: Option<usize>,
    index: HashMap<Vertex, usize>,
}

impl FiniteGraph {
    /// Builds a graph from vertices and undirected edges given as index pairs.
    /// Duplicate edges collapse; self-loops, out-of-range indices, repeated
    /// vertices and mixed dimensions are rejected.
    pub fn from_edges(
        name: impl Into<String>,
        vertices: Vec<Vertex>,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let n = vertices.len();
        let mut adjacency = vec![Vec::new(); n];
        for (a, b) in edges {
            if a >= n || b >= n {
                return Err(invalid(format!(
                    "edge ({a},{b}) out of range for {n} vertices"
                )));
            }
            if a == b {
                return Err(invalid(format!("self-loop at vertex {a}")));
            }
            adjacency[a].push(b);
            adjacency[b].push(a);
        }
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
        }
        Self::from_adjacency(name, vertices, adjacency)
    }

    /// Builds a graph from adjacency lists that must already be sorted,
    /// duplicate-free, loop-free and symmetric.
    pub(crate) fn from_adjacency(
        name: impl Into<String>,
        vertices: Vec<Vertex>,
        adjacency: Vec<Vec<usize>>,
    ) -> Result<Self> {
        let dim = vertices.first().map_or(1, Vertex::dim);
        let mut index = HashMap::with_capacity(vertices.len());
        for (i, v) in vertices.iter().enumerate() {
            if v.dim() != dim {
                return Err(invalid(format!(
                    "vertex {v:?} has dimension {} != {dim}",
                    v.dim()
                )));
            }
            if index.insert(v.clone(), i).is_some() {
                return Err(invalid(format!("duplicate vertex {v:?}")));
            }
        }
        let g = FiniteGraph {
            name: name.into(),
            dim,
            vertices,
            adjacency,
            root: None,
            index,
        };
        debug_assert!(g.check_invariants().is_ok(), "{:?}", g.check_invariants());
        Ok(g)
    }

    /// Verifies symmetry, absence of loops and duplicate entries.
    pub fn check_invariants(&self) -> std::result::Result<(), String> {
        for (i, list) in self.adjacency.iter().enumerate() {
            if list.windows(2).any(|w| w[0] >= w[1]) {
                return Err(format!("neighbour list of {i} not strictly sorted"));
            }
            for &j in list {
                if j == i {
                    return Err(format!("self-loop at {i}"));
                }
                if self.adjacency[j].binary_search(&i).is_err() {
                    return Err(format!("edge {i}->{j} has no reverse"));
                }
            }
        }
        Ok(())
    }

    pub(crate) fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn vertex(&self, i: usize) -> &Vertex {
        &self.vertices[i]
    }

    pub fn index_of(&self, v: &Vertex) -> Option<usize> {
        self.index.get(v).copied()
    }

    pub fn neighbors(&self, i: usize) -> &[usize] {
        &self.adjacency[i]
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adjacency[i].len()
    }

    pub fn root(&self) -> Option<usize> {
        self.root
    }

    pub fn root_vertex(&self) -> Option<&Vertex> {
        self.root.map(|i| &self.vertices[i])
    }

    pub fn set_root(&mut self, i: usize) {
        assert!(i < self.len(), "root index out of range");
        self.root = Some(i);
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges as `(i, j)` with `i < j`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (i, list) in self.adjacency.iter().enumerate() {
            out.extend(list.iter().filter(|&&j| j > i).map(|&j| (i, j)));
        }
        out
    }

    /// Edges as sorted vertex pairs, independent of the internal indexing.
    pub fn edge_set(&self) -> std::collections::BTreeSet<(Vertex, Vertex)> {
        self.edges()
            .into_iter()
            .map(|(i, j)| {
                let (a, b) = (self.vertices[i].clone(), self.vertices[j].clone());
                if a <= b {
                    (a, b)
                } else {
                    (b, a)
                }
            })
            .collect()
    }

    /// Induced subgraph on the given vertex indices, kept in the given order.
    /// The root survives when it is among the kept vertices.
    pub fn induced_subgraph(&self, keep: &[usize]) -> FiniteGraph {
        let mut remap = vec![usize::MAX; self.len()];
        for (new, &old) in keep.iter().enumerate() {
            remap[old] = new;
        }
        let vertices: Vec<Vertex> = keep.iter().map(|&i| self.vertices[i].clone()).collect();
        let adjacency: Vec<Vec<usize>> = keep
            .iter()
            .map(|&i| {
                let mut l: Vec<usize> = self.adjacency[i]
                    .iter()
                    .map(|&j| remap[j])
                    .filter(|&j| j != usize::MAX)
                    .collect();
                l.sort_unstable();
                l
            })
            .collect();
        let mut g = FiniteGraph::from_adjacency(self.name.clone(), vertices, adjacency)
            .expect("induced subgraph of a valid graph is valid");
        if let Some(r) = self.root {
            if remap[r] != usize::MAX {
                g.root = Some(remap[r]);
            }
        }
        g
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn verts(n: i64) -> Vec<Vertex> {
        (0..n).map(Vertex::from).collect()
    }

    #[test]
    fn rejects_bad_input() {
        assert!(FiniteGraph::from_edges("g", verts(3), [(0, 0)]).is_err());
        assert!(FiniteGraph::from_edges("g", verts(3), [(0, 3)]).is_err());
        let dup = vec![Vertex::from(1), Vertex::from(1)];
        assert!(FiniteGraph::from_edges("g", dup, []).is_err());
        let mixed = vec![Vertex::from(1), Vertex::from([1, 2])];
        assert!(FiniteGraph::from_edges("g", mixed, []).is_err());
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = FiniteGraph::from_edges("g", verts(3), [(0, 1), (1, 0), (0, 1), (1, 2)]).unwrap();
        assert_eq!(g.neighbors(0), &[1]);
        assert_eq!(g.neighbors(1), &[0, 2]);
        assert_eq!(g.edge_count(), 2);
        assert!(g.check_invariants().is_ok());
    }

    #[test]
    fn induced_keeps_root_and_edges() {
        let mut g =
            FiniteGraph::from_edges("g", verts(4), [(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        g.set_root(2);
        let h = g.induced_subgraph(&[1, 2, 3]);
        assert_eq!(h.root_vertex(), Some(&Vertex::from(2)));
        assert_eq!(h.edges(), vec![(0, 1), (1, 2)]);
    }
}
