use std::sync::Arc;

use super::Vertex;

type Membership = Arc<dyn Fn(&Vertex) -> bool + Send + Sync>;
type NeighborFn = Arc<dyn Fn(&Vertex) -> Vec<Vertex> + Send + Sync>;

/// A locally finite, possibly infinite graph described by a membership test
/// and a neighbour function. Neighbour lists are returned sorted.
#[derive(Clone)]
pub struct ImplicitGraph {
    name: String,
    dim: usize,
    contains: Membership,
    neighbors: NeighborFn,
}

impl ImplicitGraph {
    pub fn new(
        name: impl Into<String>,
        dim: usize,
        contains: impl Fn(&Vertex) -> bool + Send + Sync + 'static,
        neighbors: impl Fn(&Vertex) -> Vec<Vertex> + Send + Sync + 'static,
    ) -> Self {
        let neighbors = Arc::new(neighbors);
        ImplicitGraph {
            name: name.into(),
            dim,
            contains: Arc::new(contains),
            neighbors: Arc::new(move |v: &Vertex| {
                let mut out = neighbors(v);
                out.sort_unstable();
                out.dedup();
                out
            }),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn contains(&self, v: &Vertex) -> bool {
        (self.contains)(v)
    }

    /// Neighbours of a member vertex.
    pub fn neighbors(&self, v: &Vertex) -> Vec<Vertex> {
        (self.neighbors)(v)
    }
}

/// The integer line `Z`: `u ~ u ± 1`.
pub fn integer_line() -> ImplicitGraph {
    ImplicitGraph::new(
        "Z",
        1,
        |_| true,
        |v| {
            let u = v.coords()[0];
            vec![Vertex::from(u - 1), Vertex::from(u + 1)]
        },
    )
}

/// The half line `Z+ = {0, 1, 2, ...}`.
pub fn half_line() -> ImplicitGraph {
    ImplicitGraph::new(
        "Z+",
        1,
        |v| v.coords()[0] >= 0,
        |v| {
            let u = v.coords()[0];
            [u - 1, u + 1]
                .into_iter()
                .filter(|&w| w >= 0)
                .map(Vertex::from)
                .collect()
        },
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn line_neighbors() {
        let z = integer_line();
        assert_eq!(
            z.neighbors(&Vertex::from(0)),
            vec![Vertex::from(-1), Vertex::from(1)]
        );
        let zp = half_line();
        assert_eq!(zp.neighbors(&Vertex::from(0)), vec![Vertex::from(1)]);
        assert_eq!(
            zp.neighbors(&Vertex::from(3)),
            vec![Vertex::from(2), Vertex::from(4)]
        );
        assert!(!zp.contains(&Vertex::from(-1)));
    }

    #[test]
    fn neighbor_relation_is_symmetric() {
        for g in [integer_line(), half_line()] {
            for u in 0..20 {
                let v = Vertex::from(u);
                for w in g.neighbors(&v) {
                    assert!(g.neighbors(&w).contains(&v));
                }
            }
        }
    }
}
