//! Exact closed-walk counting.
//!
//! `W_m(o; G) = (A^m)_{oo}` is computed matrix-free: a big-integer vector
//! starts at the indicator of `o` and is pushed along edges `m` times. A closed
//! walk of length `m` never leaves the ball of radius `m / 2`, so the
//! computation runs on that finite ball and is exact for infinite graphs.

mod closed_form;
mod coincidence;

use std::fmt::Write;

use num_bigint::BigUint;
use num_traits::{One, Zero};

pub use closed_form::{closed_form_walks, LatticeKind};
pub use coincidence::{moment_coincidence_report, CoincidenceReport, CoincidenceRow};

use crate::combinatorics::{binomial, BigCount};
use crate::error::invalid;
use crate::graph::{ball, distances_from, Budget, Graph, Vertex};
use crate::Result;

/// Closed-walk counts `W_0, W_1, ..., W_{m_max}` at a root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WalkTable {
    pub graph: String,
    pub root: Vertex,
    counts: Vec<BigCount>,
}

impl WalkTable {
    pub fn new(graph: impl Into<String>, root: Vertex, counts: Vec<BigCount>) -> Self {
        assert!(!counts.is_empty(), "a walk table holds at least W_0");
        WalkTable {
            graph: graph.into(),
            root,
            counts,
        }
    }

    /// Largest `m` covered.
    pub fn max_m(&self) -> usize {
        self.counts.len() - 1
    }

    pub fn get(&self, m: usize) -> Option<&BigCount> {
        self.counts.get(m)
    }

    pub fn counts(&self) -> &[BigCount] {
        &self.counts
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, &BigCount)> {
        self.counts.iter().enumerate()
    }

    /// CSV with header `m,count`, counts as decimal strings.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("m,count\n");
        for (m, c) in self.entries() {
            writeln!(out, "{m},{c}").unwrap();
        }
        out
    }
}

/// `W_m(o; g)` with the default vertex budget.
pub fn walk_count(g: &Graph, o: &Vertex, m: usize) -> Result<BigCount> {
    walk_count_with_budget(g, o, m, Budget::default())
}

pub fn walk_count_with_budget(g: &Graph, o: &Vertex, m: usize, budget: Budget) -> Result<BigCount> {
    if m == 0 {
        if !g.contains(o) {
            return Err(invalid(format!("{o:?} is not a vertex of {}", g.name())));
        }
        return Ok(BigUint::one());
    }
    let table = walk_table_on_radius(g, o, m, m / 2, budget)?;
    Ok(table.counts[m].clone())
}

/// `W_0 .. W_{m_max}` at `o`, from one ball of radius `m_max / 2`.
pub fn walk_table(g: &Graph, o: &Vertex, m_max: usize, budget: Budget) -> Result<WalkTable> {
    walk_table_on_radius(g, o, m_max, m_max / 2, budget)
}

/// Same as [`walk_table`] but on a ball of an explicit radius, which must be
/// at least `m_max / 2` for the counts to be exact.
pub fn walk_table_on_radius(
    g: &Graph,
    o: &Vertex,
    m_max: usize,
    radius: usize,
    budget: Budget,
) -> Result<WalkTable> {
    if radius < m_max / 2 {
        return Err(invalid(format!(
            "radius {radius} is too small for walks of length {m_max}"
        )));
    }
    let b = ball(g, o, radius, budget)?;
    let root = b.root().expect("ball is rooted");
    let dist: Vec<usize> = distances_from(&b, root)
        .into_iter()
        .map(|d| d.unwrap_or(usize::MAX))
        .collect();

    let mut u = vec![BigUint::zero(); b.len()];
    u[root] = BigUint::one();
    let mut next = vec![BigUint::zero(); b.len()];
    let mut counts = Vec::with_capacity(m_max + 1);
    counts.push(BigUint::one());
    for step in 1..=m_max {
        // only vertices that are reachable in `step` moves and can still
        // return within the remaining `m_max - step` moves matter
        let reach = step.min(m_max - step);
        for x in 0..b.len() {
            next[x].set_zero();
            if dist[x] > reach {
                continue;
            }
            for &y in b.neighbors(x) {
                if !u[y].is_zero() {
                    next[x] += &u[y];
                }
            }
        }
        std::mem::swap(&mut u, &mut next);
        counts.push(u[root].clone());
    }
    Ok(WalkTable::new(g.name(), o.clone(), counts))
}

/// Entrywise product of two tables: the walk counts of a Kronecker product.
pub fn kronecker_walk_product(w1: &WalkTable, w2: &WalkTable) -> Result<WalkTable> {
    if w1.max_m() != w2.max_m() {
        return Err(invalid(format!(
            "walk tables cover m <= {} and m <= {}",
            w1.max_m(),
            w2.max_m()
        )));
    }
    let counts = w1
        .counts
        .iter()
        .zip(&w2.counts)
        .map(|(a, b)| a * b)
        .collect();
    Ok(WalkTable::new(
        format!("({} xK {})", w1.graph, w2.graph),
        w1.root.concat(&w2.root),
        counts,
    ))
}

/// `sum_k binom(m, k) w1[k] w2[m - k]`: walk counts of a Cartesian product.
pub fn cartesian_walk_convolution(w1: &WalkTable, w2: &WalkTable, m: usize) -> Result<BigCount> {
    if w1.max_m() < m || w2.max_m() < m {
        return Err(invalid(format!(
            "cartesian convolution at m = {m} needs tables up to m, have {} and {}",
            w1.max_m(),
            w2.max_m()
        )));
    }
    Ok((0..=m)
        .map(|k| binomial(m as u64, k as u64) * &w1.counts[k] * &w2.counts[m - k])
        .sum())
}
