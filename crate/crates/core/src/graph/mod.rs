//! Finite and implicit graphs over integer coordinate tuples.
//!
//! Every vertex is a [`Vertex`], a fixed-dimension tuple of signed integers.
//! Products concatenate tuples, so a vertex of `(G1 x G2) x G3` is simply the
//! flat tuple `(x, y, z)`. Infinite graphs are never materialised: exact work
//! goes through [`ball`], which truncates an implicit graph around a root.

mod ball;
mod export;
mod finite;
mod implicit;
mod iso;
mod lattice;
mod product;

use std::fmt;
use std::sync::Arc;

use smallvec::SmallVec;

pub use ball::{ball, connected_components, degree_histogram, distances_from, Budget};
pub use export::write_edge_list;
pub use finite::FiniteGraph;
pub use implicit::{half_line, integer_line, ImplicitGraph};
pub use iso::{verify_isomorphism, AffineMap, IsoMap, IsoReport, IsoViolation};
pub use lattice::{restrict_lattice, DomainPredicate, LatticeDomain};
pub use product::{cartesian, kronecker};

/// A lattice point: an ordered tuple of signed integer coordinates.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vertex(SmallVec<[i64; 4]>);

impl Vertex {
    pub fn new(coords: impl IntoIterator<Item = i64>) -> Self {
        let v: SmallVec<[i64; 4]> = coords.into_iter().collect();
        assert!(!v.is_empty(), "vertex dimension must be at least 1");
        Vertex(v)
    }

    pub fn origin(dim: usize) -> Self {
        Vertex::new(std::iter::repeat_n(0, dim))
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    /// Tuple concatenation, the vertex of a product graph.
    pub fn concat(&self, other: &Vertex) -> Vertex {
        Vertex(self.0.iter().chain(other.0.iter()).copied().collect())
    }

    pub fn split(&self, at: usize) -> (Vertex, Vertex) {
        (
            Vertex::new(self.0[..at].iter().copied()),
            Vertex::new(self.0[at..].iter().copied()),
        )
    }

    pub fn coordinate_sum(&self) -> i64 {
        self.0.iter().sum()
    }
}

impl From<i64> for Vertex {
    fn from(x: i64) -> Self {
        Vertex::new([x])
    }
}

impl<const N: usize> From<[i64; N]> for Vertex {
    fn from(c: [i64; N]) -> Self {
        Vertex::new(c)
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

/// A locally finite graph, either explicit or given by a neighbour function.
#[derive(Clone)]
pub enum Graph {
    Finite(Arc<FiniteGraph>),
    Implicit(ImplicitGraph),
}

impl Graph {
    pub fn name(&self) -> &str {
        match self {
            Graph::Finite(g) => g.name(),
            Graph::Implicit(g) => g.name(),
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            Graph::Finite(g) => g.dim(),
            Graph::Implicit(g) => g.dim(),
        }
    }

    pub fn contains(&self, v: &Vertex) -> bool {
        match self {
            Graph::Finite(g) => g.index_of(v).is_some(),
            Graph::Implicit(g) => v.dim() == g.dim() && g.contains(v),
        }
    }

    /// Sorted neighbours of `v`; empty when `v` is not a vertex.
    pub fn neighbors(&self, v: &Vertex) -> Vec<Vertex> {
        match self {
            Graph::Finite(g) => match g.index_of(v) {
                Some(i) => g
                    .neighbors(i)
                    .iter()
                    .map(|&j| g.vertex(j).clone())
                    .collect(),
                None => Vec::new(),
            },
            Graph::Implicit(g) => {
                if self.contains(v) {
                    g.neighbors(v)
                } else {
                    Vec::new()
                }
            }
        }
    }

    pub fn degree(&self, v: &Vertex) -> usize {
        self.neighbors(v).len()
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Graph::Finite(_))
    }

    pub fn as_finite(&self) -> Option<&FiniteGraph> {
        match self {
            Graph::Finite(g) => Some(g),
            Graph::Implicit(_) => None,
        }
    }

    /// Induced subgraph on the vertices accepted by `keep`.
    pub fn induced(
        &self,
        name: impl Into<String>,
        keep: impl Fn(&Vertex) -> bool + Send + Sync + 'static,
    ) -> Graph {
        let name = name.into();
        match self {
            Graph::Finite(g) => {
                let idx: Vec<usize> = (0..g.len()).filter(|&i| keep(g.vertex(i))).collect();
                Graph::Finite(Arc::new(g.induced_subgraph(&idx).renamed(name)))
            }
            Graph::Implicit(_) => {
                let keep = Arc::new(keep);
                let inner = self.clone();
                let inner_n = self.clone();
                let keep_n = Arc::clone(&keep);
                Graph::Implicit(ImplicitGraph::new(
                    name,
                    self.dim(),
                    move |v| inner.contains(v) && keep(v),
                    move |v| {
                        inner_n
                            .neighbors(v)
                            .into_iter()
                            .filter(|w| keep_n(w))
                            .collect()
                    },
                ))
            }
        }
    }

    /// Restriction to vertices whose coordinate sum has the same parity as
    /// `root`. For products of bipartite lattices this is the component of
    /// the root, which [`ball`] independently confirms by breadth-first search.
    pub fn parity_component(&self, root: &Vertex) -> Graph {
        let parity = root.coordinate_sum().rem_euclid(2);
        self.induced(format!("({})°", self.name()), move |v| {
            v.coordinate_sum().rem_euclid(2) == parity
        })
    }
}

impl From<FiniteGraph> for Graph {
    fn from(g: FiniteGraph) -> Self {
        Graph::Finite(Arc::new(g))
    }
}

impl From<ImplicitGraph> for Graph {
    fn from(g: ImplicitGraph) -> Self {
        Graph::Implicit(g)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Graph::Finite(g) => write!(f, "Finite({}, {} vertices)", g.name(), g.len()),
            Graph::Implicit(g) => write!(f, "Implicit({}, dim {})", g.name(), g.dim()),
        }
    }
}

/// The path `P_n` on `{0, ..., n-1}` rooted at `0`.
pub fn path_graph(n: usize) -> crate::Result<FiniteGraph> {
    if n < 1 {
        return Err(crate::error::invalid("path_graph needs n >= 1"));
    }
    let vertices = (0..n as i64).map(Vertex::from).collect();
    let edges = (1..n).map(|i| (i - 1, i));
    let mut g = FiniteGraph::from_edges(format!("P{n}"), vertices, edges)?;
    g.set_root(0);
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_graph_shapes() {
        let p1 = path_graph(1).unwrap();
        assert_eq!(p1.len(), 1);
        assert_eq!(p1.edge_count(), 0);
        let p2 = path_graph(2).unwrap();
        assert_eq!(p2.edges(), vec![(0, 1)]);
        let p4 = path_graph(4).unwrap();
        // oracle: count |i - j| = 1 pairs directly
        let degs: Vec<usize> = (0..4i64)
            .map(|i| (0..4i64).filter(|j| (i - j).abs() == 1).count())
            .collect();
        assert_eq!(degs, vec![1, 2, 2, 1]);
        assert_eq!((0..4).map(|i| p4.degree(i)).collect::<Vec<_>>(), degs);
        assert_eq!(p4.root(), Some(0));
        assert!(path_graph(0).is_err());
    }

    #[test]
    fn vertex_display_and_concat() {
        let v = Vertex::from([1, -2]).concat(&Vertex::from(3));
        assert_eq!(v.to_string(), "1,-2,3");
        assert_eq!(v.dim(), 3);
        let (a, b) = v.split(2);
        assert_eq!(a, Vertex::from([1, -2]));
        assert_eq!(b, Vertex::from(3));
    }
}
