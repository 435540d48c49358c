use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};

use super::{FiniteGraph, Graph, Vertex};
use crate::error::{invalid, Error, Result};

/// Maximum number of vertices a single ball may hold.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget(pub usize);

impl Budget {
    pub const DEFAULT: Budget = Budget(5_000_000);
    pub const ENV_VAR: &'static str = "LATTICE_WALKS_BUDGET";

    /// Default budget, overridden by `LATTICE_WALKS_BUDGET` when it parses.
    pub fn from_env() -> Budget {
        std::env::var(Self::ENV_VAR)
            .ok()
            .and_then(|s| s.trim().parse().ok())
            .map(Budget)
            .unwrap_or_default()
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::DEFAULT
    }
}

/// Induced subgraph on the vertices within graph distance `radius` of `root`.
///
/// Vertices are ordered by distance, ties broken by coordinates, so the result
/// is deterministic. The root is vertex 0.
pub fn ball(g: &Graph, root: &Vertex, radius: usize, budget: Budget) -> Result<FiniteGraph> {
    if !g.contains(root) {
        return Err(invalid(format!(
            "root {root:?} is not a vertex of {}",
            g.name()
        )));
    }
    let mut order = vec![root.clone()];
    let mut index: HashMap<Vertex, usize> = HashMap::from([(root.clone(), 0)]);
    let mut frontier = vec![root.clone()];
    for _ in 0..radius {
        let mut next: Vec<Vertex> = Vec::new();
        let mut seen_next = HashSet::new();
        for v in &frontier {
            for w in g.neighbors(v) {
                if !index.contains_key(&w) && seen_next.insert(w.clone()) {
                    next.push(w);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        next.sort_unstable();
        if order.len() + next.len() > budget.0 {
            return Err(Error::ResourceLimit {
                what: format!("ball of radius {radius} in {}", g.name()),
                budget: budget.0,
            });
        }
        for w in &next {
            index.insert(w.clone(), order.len());
            order.push(w.clone());
        }
        frontier = next;
    }
    let adjacency: Vec<Vec<usize>> = order
        .iter()
        .map(|v| {
            let mut l: Vec<usize> = g
                .neighbors(v)
                .iter()
                .filter_map(|w| index.get(w).copied())
                .collect();
            l.sort_unstable();
            l
        })
        .collect();
    let mut out = FiniteGraph::from_adjacency(
        format!("B({}, {root:?}, {radius})", g.name()),
        order,
        adjacency,
    )?;
    out.set_root(0);
    Ok(out)
}

/// Breadth-first distances from vertex `start`; `None` for unreachable vertices.
pub fn distances_from(g: &FiniteGraph, start: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.len()];
    dist[start] = Some(0);
    let mut queue = VecDeque::from([start]);
    while let Some(i) = queue.pop_front() {
        let d = dist[i].unwrap();
        for &j in g.neighbors(i) {
            if dist[j].is_none() {
                dist[j] = Some(d + 1);
                queue.push_back(j);
            }
        }
    }
    dist
}

/// Maximal connected induced subgraphs, ordered by their smallest vertex.
pub fn connected_components(g: &FiniteGraph) -> Vec<FiniteGraph> {
    let mut label = vec![usize::MAX; g.len()];
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for s in 0..g.len() {
        if label[s] != usize::MAX {
            continue;
        }
        let id = groups.len();
        let mut members = vec![s];
        label[s] = id;
        let mut queue = VecDeque::from([s]);
        while let Some(i) = queue.pop_front() {
            for &j in g.neighbors(i) {
                if label[j] == usize::MAX {
                    label[j] = id;
                    members.push(j);
                    queue.push_back(j);
                }
            }
        }
        members.sort_unstable();
        groups.push(members);
    }
    let mut comps: Vec<FiniteGraph> = groups.iter().map(|m| g.induced_subgraph(m)).collect();
    comps.sort_by(|a, b| a.vertices().iter().min().cmp(&b.vertices().iter().min()));
    comps
}

/// Degree counts over the vertices within `interior_radius` of the root of a
/// ball. Only the interior is trusted: a vertex at distance `< r` keeps every
/// neighbour inside a ball of radius `r`.
pub fn degree_histogram(g: &FiniteGraph, interior_radius: usize) -> Result<BTreeMap<usize, usize>> {
    let root = g
        .root()
        .ok_or_else(|| invalid("degree_histogram needs a rooted graph"))?;
    let dist = distances_from(g, root);
    let radius = dist.iter().flatten().copied().max().unwrap_or(0);
    if interior_radius >= radius {
        return Err(invalid(format!(
            "interior radius {interior_radius} must be below the ball radius {radius}"
        )));
    }
    let mut hist = BTreeMap::new();
    for (i, d) in dist.iter().enumerate() {
        if matches!(d, Some(d) if *d <= interior_radius) {
            *hist.entry(g.degree(i)).or_insert(0) += 1;
        }
    }
    Ok(hist)
}
