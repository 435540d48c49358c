use std::sync::Arc;

use super::{FiniteGraph, Graph, ImplicitGraph, Vertex};

/// Kronecker (direct, tensor) product: `(x,y) ~ (x',y')` iff `x ~ x'` and `y ~ y'`.
///
/// Two finite factors give a [`FiniteGraph`] with vertices ordered
/// lexicographically by factor index; anything else gives an implicit graph.
pub fn kronecker(g1: &Graph, g2: &Graph) -> Graph {
    let name = format!("({} xK {})", g1.name(), g2.name());
    if let (Some(a), Some(b)) = (g1.as_finite(), g2.as_finite()) {
        return finite_product(name, a, b, |a, b, i, j| {
            let mut out = Vec::with_capacity(a.degree(i) * b.degree(j));
            for &x in a.neighbors(i) {
                out.extend(b.neighbors(j).iter().map(|&y| x * b.len() + y));
            }
            out
        })
        .into();
    }
    let d1 = g1.dim();
    implicit_product(name, g1, g2, move |g1, g2, v| {
        let (x, y) = v.split(d1);
        let ny = g2.neighbors(&y);
        let mut out = Vec::new();
        for xn in g1.neighbors(&x) {
            out.extend(ny.iter().map(|yn| xn.concat(yn)));
        }
        out
    })
}

/// Cartesian product: exactly one coordinate block moves along an edge of its factor.
pub fn cartesian(g1: &Graph, g2: &Graph) -> Graph {
    let name = format!("({} xC {})", g1.name(), g2.name());
    if let (Some(a), Some(b)) = (g1.as_finite(), g2.as_finite()) {
        return finite_product(name, a, b, |a, b, i, j| {
            let mut out: Vec<usize> = a.neighbors(i).iter().map(|&x| x * b.len() + j).collect();
            out.extend(b.neighbors(j).iter().map(|&y| i * b.len() + y));
            out.sort_unstable();
            out
        })
        .into();
    }
    let d1 = g1.dim();
    implicit_product(name, g1, g2, move |g1, g2, v| {
        let (x, y) = v.split(d1);
        let mut out: Vec<Vertex> = g1.neighbors(&x).iter().map(|xn| xn.concat(&y)).collect();
        out.extend(g2.neighbors(&y).iter().map(|yn| x.concat(yn)));
        out
    })
}

fn finite_product(
    name: String,
    a: &FiniteGraph,
    b: &FiniteGraph,
    adj: impl Fn(&FiniteGraph, &FiniteGraph, usize, usize) -> Vec<usize>,
) -> FiniteGraph {
    let mut vertices = Vec::with_capacity(a.len() * b.len());
    let mut adjacency = Vec::with_capacity(a.len() * b.len());
    for i in 0..a.len() {
        for j in 0..b.len() {
            vertices.push(a.vertex(i).concat(b.vertex(j)));
            adjacency.push(adj(a, b, i, j));
        }
    }
    let mut g = FiniteGraph::from_adjacency(name, vertices, adjacency)
        .expect("product of valid graphs is valid");
    if let (Some(r1), Some(r2)) = (a.root(), b.root()) {
        g.set_root(r1 * b.len() + r2);
    }
    g
}

fn implicit_product(
    name: String,
    g1: &Graph,
    g2: &Graph,
    neighbors: impl Fn(&Graph, &Graph, &Vertex) -> Vec<Vertex> + Send + Sync + 'static,
) -> Graph {
    let d1 = g1.dim();
    let dim = d1 + g2.dim();
    let factors = Arc::new((g1.clone(), g2.clone()));
    let f2 = Arc::clone(&factors);
    ImplicitGraph::new(
        name,
        dim,
        move |v| {
            let (x, y) = v.split(d1);
            factors.0.contains(&x) && factors.1.contains(&y)
        },
        move |v| neighbors(&f2.0, &f2.1, v),
    )
    .into()
}
