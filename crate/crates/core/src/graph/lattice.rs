use std::fmt;
use std::sync::Arc;

use super::{ImplicitGraph, Vertex};

/// Membership test of a [`LatticeDomain::Custom`] domain.
pub type DomainPredicate = Arc<dyn Fn(&[i64]) -> bool + Send + Sync>;

/// A subset `D` of `Z^d` on which the nearest-neighbour lattice is restricted.
#[derive(Clone)]
pub enum LatticeDomain {
    /// All of `Z^2`.
    FullZ2,
    /// `x >= y`.
    HalfPlane,
    /// `x >= y >= x - (n - 1)`.
    Strip { n: i64 },
    /// `x >= y >= -x`.
    Wedge,
    /// `0 <= x + y <= k - 1` and `0 <= x - y <= l - 1`.
    Diamond { k: i64, l: i64 },
    /// `x >= 0` and `y >= 0`.
    QuarterPlane,
    /// `x >= y >= z` in `Z^3`.
    Chamber3,
    /// Any decidable predicate on `dim`-tuples.
    Custom {
        name: String,
        dim: usize,
        predicate: DomainPredicate,
    },
}

impl LatticeDomain {
    pub fn custom(
        name: impl Into<String>,
        dim: usize,
        predicate: impl Fn(&[i64]) -> bool + Send + Sync + 'static,
    ) -> Self {
        LatticeDomain::Custom {
            name: name.into(),
            dim,
            predicate: Arc::new(predicate),
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            LatticeDomain::Chamber3 => 3,
            LatticeDomain::Custom { dim, .. } => *dim,
            _ => 2,
        }
    }

    pub fn contains(&self, c: &[i64]) -> bool {
        if c.len() != self.dim() {
            return false;
        }
        match self {
            LatticeDomain::FullZ2 => true,
            LatticeDomain::HalfPlane => c[0] >= c[1],
            LatticeDomain::Strip { n } => c[0] >= c[1] && c[1] >= c[0] - (n - 1),
            LatticeDomain::Wedge => c[0] >= c[1] && c[1] >= -c[0],
            LatticeDomain::Diamond { k, l } => {
                let (s, d) = (c[0] + c[1], c[0] - c[1]);
                (0..*k).contains(&s) && (0..*l).contains(&d)
            }
            LatticeDomain::QuarterPlane => c[0] >= 0 && c[1] >= 0,
            LatticeDomain::Chamber3 => c[0] >= c[1] && c[1] >= c[2],
            LatticeDomain::Custom { predicate, .. } => predicate(c),
        }
    }
}

impl fmt::Display for LatticeDomain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LatticeDomain::FullZ2 => write!(f, "L[Z^2]"),
            LatticeDomain::HalfPlane => write!(f, "L{{x>=y}}"),
            LatticeDomain::Strip { n } => write!(f, "L{{x>=y>=x-{}}}", n - 1),
            LatticeDomain::Wedge => write!(f, "L{{x>=y>=-x}}"),
            LatticeDomain::Diamond { k, l } => {
                write!(f, "L{{0<=x+y<={}, 0<=x-y<={}}}", k - 1, l - 1)
            }
            LatticeDomain::QuarterPlane => write!(f, "L{{x>=0,y>=0}}"),
            LatticeDomain::Chamber3 => write!(f, "L{{x>=y>=z}}"),
            LatticeDomain::Custom { name, .. } => write!(f, "L[{name}]"),
        }
    }
}

impl fmt::Debug for LatticeDomain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Induced subgraph of the nearest-neighbour lattice `Z^d` on `domain`.
pub fn restrict_lattice(domain: LatticeDomain) -> ImplicitGraph {
    let dim = domain.dim();
    let name = domain.to_string();
    let domain = Arc::new(domain);
    let d2 = Arc::clone(&domain);
    ImplicitGraph::new(
        name,
        dim,
        move |v| domain.contains(v.coords()),
        move |v| {
            let mut out = Vec::with_capacity(2 * dim);
            let mut c = v.coords().to_vec();
            for axis in 0..dim {
                for step in [-1, 1] {
                    c[axis] += step;
                    if d2.contains(&c) {
                        out.push(Vertex::new(c.iter().copied()));
                    }
                    c[axis] -= step;
                }
            }
            out
        },
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn named() -> Vec<LatticeDomain> {
        vec![
            LatticeDomain::FullZ2,
            LatticeDomain::HalfPlane,
            LatticeDomain::Strip { n: 3 },
            LatticeDomain::Wedge,
            LatticeDomain::Diamond { k: 3, l: 4 },
            LatticeDomain::QuarterPlane,
            LatticeDomain::Chamber3,
        ]
    }

    #[test]
    fn origin_in_every_named_domain() {
        for d in named() {
            assert!(d.contains(&vec![0; d.dim()]), "{d}");
        }
    }

    #[test]
    fn half_plane_origin_degree() {
        // oracle: test the 4 unit moves against x >= y directly
        let moves = [(1, 0), (-1, 0), (0, 1), (0, -1)];
        let expected: Vec<Vertex> = moves
            .iter()
            .filter(|(x, y)| x >= y)
            .map(|&(x, y)| Vertex::from([x, y]))
            .collect();
        let g = restrict_lattice(LatticeDomain::HalfPlane);
        let mut got = g.neighbors(&Vertex::from([0, 0]));
        got.sort();
        let mut expected = expected;
        expected.sort();
        assert_eq!(got, expected);
        assert_eq!(got.len(), 2);
    }

    #[test]
    fn chamber_origin_degree() {
        let g = restrict_lattice(LatticeDomain::Chamber3);
        let got = g.neighbors(&Vertex::from([0, 0, 0]));
        assert_eq!(got, vec![Vertex::from([0, 0, -1]), Vertex::from([1, 0, 0])]);
    }

    #[test]
    fn full_lattice_is_4_regular() {
        let g = restrict_lattice(LatticeDomain::FullZ2);
        for a in -5..5 {
            for b in -5..5 {
                assert_eq!(g.neighbors(&Vertex::from([a, b])).len(), 4);
            }
        }
    }

    #[test]
    fn custom_domain() {
        let d = LatticeDomain::custom("annulus-free", 2, |c| c[0].abs() + c[1].abs() <= 1);
        let g = restrict_lattice(d);
        assert_eq!(g.neighbors(&Vertex::from([0, 0])).len(), 4);
        assert_eq!(g.neighbors(&Vertex::from([1, 0])).len(), 1);
    }
}
