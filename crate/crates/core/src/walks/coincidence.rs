use crate::combinatorics::BigCount;
use crate::graph::{Budget, Graph, Vertex};
use crate::Result;

use super::walk_table;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoincidenceRow {
    pub m: usize,
    pub first: BigCount,
    pub second: BigCount,
}

impl CoincidenceRow {
    pub fn agrees(&self) -> bool {
        self.first == self.second
    }
}

/// Side-by-side closed-walk counts of two rooted graphs.
#[derive(Clone, Debug)]
pub struct CoincidenceReport {
    pub first: String,
    pub second: String,
    pub rows: Vec<CoincidenceRow>,
}

impl CoincidenceReport {
    pub fn all_agree(&self) -> bool {
        self.rows.iter().all(CoincidenceRow::agrees)
    }

    pub fn first_disagreement(&self) -> Option<&CoincidenceRow> {
        self.rows.iter().find(|r| !r.agrees())
    }
}

/// Tabulates `W_m` for `m <= m_max` on both graphs. Equal moments alone do
/// not imply isomorphism; pair this with a degree-histogram witness.
pub fn moment_coincidence_report(
    first: &Graph,
    first_root: &Vertex,
    second: &Graph,
    second_root: &Vertex,
    m_max: usize,
    budget: Budget,
) -> Result<CoincidenceReport> {
    let a = walk_table(first, first_root, m_max, budget)?;
    let b = walk_table(second, second_root, m_max, budget)?;
    let rows = (0..=m_max)
        .map(|m| CoincidenceRow {
            m,
            first: a.counts()[m].clone(),
            second: b.counts()[m].clone(),
        })
        .collect();
    Ok(CoincidenceReport {
        first: format!("{} @ {first_root:?}", first.name()),
        second: format!("{} @ {second_root:?}", second.name()),
        rows,
    })
}
