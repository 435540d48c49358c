//! Explicit affine isomorphisms between restricted lattices and Kronecker
//! products, checked on finite balls.
//!
//! A graph isomorphism maps the radius-`r` ball around a root onto the
//! radius-`r` ball around the image of the root, so checking an explicit map
//! ball by ball needs no isomorphism search.

use std::collections::HashMap;

use super::{
    ball, cartesian, half_line, integer_line, kronecker, path_graph, restrict_lattice, Budget,
    Graph, LatticeDomain, Vertex,
};
use crate::Result;

/// `v -> M v + b` on integer tuples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineMap {
    pub matrix: Vec<Vec<i64>>,
    pub offset: Vec<i64>,
}

impl AffineMap {
    pub fn linear(matrix: Vec<Vec<i64>>) -> Self {
        let offset = vec![0; matrix.len()];
        AffineMap { matrix, offset }
    }

    pub fn identity(dim: usize) -> Self {
        AffineMap::linear(
            (0..dim)
                .map(|i| (0..dim).map(|j| i64::from(i == j)).collect())
                .collect(),
        )
    }

    pub fn apply(&self, v: &Vertex) -> Vertex {
        let c = v.coords();
        Vertex::new(
            self.matrix
                .iter()
                .zip(&self.offset)
                .map(|(row, b)| row.iter().zip(c).map(|(m, x)| m * x).sum::<i64>() + b),
        )
    }
}

/// An affine map together with the rooted source graph and the target graph.
#[derive(Clone, Debug)]
pub struct IsoMap {
    pub name: String,
    pub forward: AffineMap,
    pub source: Graph,
    pub source_root: Vertex,
    pub target: Graph,
}

impl IsoMap {
    /// `(x, y) -> (x + y, x - y)` from `Z xC Z` onto the origin component of `Z xK Z`.
    pub fn square_lattice() -> IsoMap {
        let z: Graph = integer_line().into();
        IsoMap {
            name: "Z xC Z -> (Z xK Z)°".into(),
            forward: sum_difference(),
            source: cartesian(&z, &z),
            source_root: Vertex::origin(2),
            target: kronecker(&z, &z),
        }
    }

    /// `(x, y) -> (x - y, x + y)` from `L{x >= y >= x-(n-1)}` onto `(P_n xK Z)°`.
    pub fn strip(n: usize) -> Result<IsoMap> {
        let p: Graph = path_graph(n)?.into();
        let z: Graph = integer_line().into();
        Ok(IsoMap {
            name: format!("L{{x>=y>=x-{}}} -> (P{n} xK Z)°", n as i64 - 1),
            forward: difference_sum(),
            source: restrict_lattice(LatticeDomain::Strip { n: n as i64 }).into(),
            source_root: Vertex::origin(2),
            target: kronecker(&p, &z),
        })
    }

    /// `(x, y) -> (x - y, x + y)` from `L{x >= y}` onto `(Z+ xK Z)°`.
    pub fn half_plane() -> IsoMap {
        let zp: Graph = half_line().into();
        let z: Graph = integer_line().into();
        IsoMap {
            name: "L{x>=y} -> (Z+ xK Z)°".into(),
            forward: difference_sum(),
            source: restrict_lattice(LatticeDomain::HalfPlane).into(),
            source_root: Vertex::origin(2),
            target: kronecker(&zp, &z),
        }
    }

    /// `(x, y) -> (x + y, x - y)` from the diamond `0 <= x+y <= k-1, 0 <= x-y <= l-1`
    /// onto `(P_k xK P_l)°`.
    pub fn diamond(k: usize, l: usize) -> Result<IsoMap> {
        let pk: Graph = path_graph(k)?.into();
        let pl: Graph = path_graph(l)?.into();
        Ok(IsoMap {
            name: format!(
                "L{{0<=x+y<={}, 0<=x-y<={}}} -> (P{k} xK P{l})°",
                k as i64 - 1,
                l as i64 - 1
            ),
            forward: sum_difference(),
            source: restrict_lattice(LatticeDomain::Diamond {
                k: k as i64,
                l: l as i64,
            })
            .into(),
            source_root: Vertex::origin(2),
            target: kronecker(&pk, &pl),
        })
    }

    /// `(x, y) -> (x + y, x - y)` from `L{x >= y >= -x}` onto `(Z+ xK Z+)°`.
    pub fn wedge() -> IsoMap {
        let zp: Graph = half_line().into();
        IsoMap {
            name: "L{x>=y>=-x} -> (Z+ xK Z+)°".into(),
            forward: sum_difference(),
            source: restrict_lattice(LatticeDomain::Wedge).into(),
            source_root: Vertex::origin(2),
            target: kronecker(&zp, &zp),
        }
    }
}

fn sum_difference() -> AffineMap {
    AffineMap::linear(vec![vec![1, 1], vec![1, -1]])
}

fn difference_sum() -> AffineMap {
    AffineMap::linear(vec![vec![1, -1], vec![1, 1]])
}

/// First way in which a map fails to be an isomorphism of balls.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IsoViolation {
    RootNotInTarget {
        image: Vertex,
    },
    NotInjective {
        first: Vertex,
        second: Vertex,
        image: Vertex,
    },
    ImageOutsideTargetBall {
        source: Vertex,
        image: Vertex,
    },
    NotSurjective {
        missing: Vertex,
    },
    EdgeNotPreserved {
        a: Vertex,
        b: Vertex,
    },
    EdgeNotReflected {
        a: Vertex,
        b: Vertex,
    },
}

#[derive(Clone, Debug)]
pub struct IsoReport {
    pub map: String,
    pub radius: usize,
    pub source_vertices: usize,
    pub target_vertices: usize,
    pub source_edges: usize,
    pub target_edges: usize,
    pub violation: Option<IsoViolation>,
}

impl IsoReport {
    pub fn is_isomorphism(&self) -> bool {
        self.violation.is_none()
    }
}

/// Checks that `m.forward` maps the radius-`radius` ball of the source
/// bijectively onto the ball of the same radius around the image of the
/// root, preserving adjacency in both directions.
pub fn verify_isomorphism(m: &IsoMap, radius: usize, budget: Budget) -> Result<IsoReport> {
    let src = ball(&m.source, &m.source_root, radius, budget)?;
    let target_root = m.forward.apply(&m.source_root);
    let mut report = IsoReport {
        map: m.name.clone(),
        radius,
        source_vertices: src.len(),
        target_vertices: 0,
        source_edges: src.edge_count(),
        target_edges: 0,
        violation: None,
    };
    if !m.target.contains(&target_root) {
        report.violation = Some(IsoViolation::RootNotInTarget { image: target_root });
        return Ok(report);
    }
    let tgt = ball(&m.target, &target_root, radius, budget)?;
    report.target_vertices = tgt.len();
    report.target_edges = tgt.edge_count();
    report.violation = find_violation(m, &src, &tgt);
    Ok(report)
}

fn find_violation(
    m: &IsoMap,
    src: &super::FiniteGraph,
    tgt: &super::FiniteGraph,
) -> Option<IsoViolation> {
    let mut preimage: HashMap<Vertex, usize> = HashMap::with_capacity(src.len());
    let mut image_index = Vec::with_capacity(src.len());
    for (i, v) in src.vertices().iter().enumerate() {
        let w = m.forward.apply(v);
        if let Some(&j) = preimage.get(&w) {
            return Some(IsoViolation::NotInjective {
                first: src.vertex(j).clone(),
                second: v.clone(),
                image: w,
            });
        }
        match tgt.index_of(&w) {
            Some(t) => image_index.push(t),
            None => {
                return Some(IsoViolation::ImageOutsideTargetBall {
                    source: v.clone(),
                    image: w,
                })
            }
        }
        preimage.insert(w, i);
    }
    if let Some(missing) = tgt.vertices().iter().find(|w| !preimage.contains_key(*w)) {
        return Some(IsoViolation::NotSurjective {
            missing: missing.clone(),
        });
    }
    for (a, b) in src.edges() {
        if tgt
            .neighbors(image_index[a])
            .binary_search(&image_index[b])
            .is_err()
        {
            return Some(IsoViolation::EdgeNotPreserved {
                a: src.vertex(a).clone(),
                b: src.vertex(b).clone(),
            });
        }
    }
    for (a, b) in tgt.edges() {
        let (pa, pb) = (preimage[tgt.vertex(a)], preimage[tgt.vertex(b)]);
        if src.neighbors(pa).binary_search(&pb).is_err() {
            return Some(IsoViolation::EdgeNotReflected {
                a: tgt.vertex(a).clone(),
                b: tgt.vertex(b).clone(),
            });
        }
    }
    None
}
