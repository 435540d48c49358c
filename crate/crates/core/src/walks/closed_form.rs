use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::combinatorics::{binomial, catalan, central_binomial, factorial, BigCount};
use crate::error::{invalid, Error};
use crate::graph::{
    cartesian, half_line, integer_line, kronecker, path_graph, restrict_lattice, Graph,
    LatticeDomain, Vertex,
};
use crate::Result;

/// Named lattices and products with a known closed-walk formula.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LatticeKind {
    /// The integer line at 0.
    Z,
    /// The half line at 0.
    ZPlus,
    /// The square lattice `Z xC Z`.
    FullZ2,
    /// `L{x >= y}`.
    HalfPlane,
    /// `L{x >= y >= -x}`.
    Wedge,
    /// `L{x >= 0, y >= 0}`.
    QuarterPlane,
    /// `L{x >= y >= x - (n-1)}`.
    Strip { n: usize },
    /// `L{0 <= x+y <= k-1, 0 <= x-y <= l-1}`.
    Diamond { k: usize, l: usize },
    /// The origin component of `Z xK Z xK Z` (body-centred cubic).
    Bcc3,
    /// The cubic lattice `Z xC Z xC Z`.
    Z3Cartesian,
    /// `L{x >= y >= z}` in `Z^3`.
    Chamber3,
    /// The origin component of `(Z+ xK Z+) xC Z+`.
    MixedTriple,
    /// `Z xC Z+` at `(0, 0)`.
    ZxZplusAtOrigin,
    /// `Z+` rooted at 1.
    ZplusAtOne,
    /// `Z+ xK Z+` rooted at `(0, 1)`.
    ZplusKronZplusShifted,
}

impl LatticeKind {
    pub fn dim(&self) -> usize {
        match self {
            LatticeKind::Z | LatticeKind::ZPlus | LatticeKind::ZplusAtOne => 1,
            LatticeKind::Bcc3
            | LatticeKind::Z3Cartesian
            | LatticeKind::Chamber3
            | LatticeKind::MixedTriple => 3,
            _ => 2,
        }
    }

    pub fn root(&self) -> Vertex {
        match self {
            LatticeKind::ZplusAtOne => Vertex::from(1),
            LatticeKind::ZplusKronZplusShifted => Vertex::from([0, 1]),
            _ => Vertex::origin(self.dim()),
        }
    }

    fn check(&self) -> Result<()> {
        match *self {
            LatticeKind::Strip { n } if n < 2 => {
                Err(invalid(format!("strip needs n >= 2, got {n}")))
            }
            LatticeKind::Diamond { k, l } if k < 2 || l < 2 => {
                Err(invalid(format!("diamond needs k, l >= 2, got {k}, {l}")))
            }
            _ => Ok(()),
        }
    }

    /// The graph on which walks are counted by breadth-first balls.
    pub fn graph(&self) -> Result<Graph> {
        self.check()?;
        let z: Graph = integer_line().into();
        let zp: Graph = half_line().into();
        let lattice = |d: LatticeDomain| -> Graph { restrict_lattice(d).into() };
        Ok(match *self {
            LatticeKind::Z => z,
            LatticeKind::ZPlus | LatticeKind::ZplusAtOne => zp,
            LatticeKind::FullZ2 => lattice(LatticeDomain::FullZ2),
            LatticeKind::HalfPlane => lattice(LatticeDomain::HalfPlane),
            LatticeKind::Wedge => lattice(LatticeDomain::Wedge),
            LatticeKind::QuarterPlane => lattice(LatticeDomain::QuarterPlane),
            LatticeKind::Strip { n } => lattice(LatticeDomain::Strip { n: n as i64 }),
            LatticeKind::Diamond { k, l } => lattice(LatticeDomain::Diamond {
                k: k as i64,
                l: l as i64,
            }),
            LatticeKind::Bcc3 => kronecker(&kronecker(&z, &z), &z),
            LatticeKind::Z3Cartesian => cartesian(&cartesian(&z, &z), &z),
            LatticeKind::Chamber3 => lattice(LatticeDomain::Chamber3),
            LatticeKind::MixedTriple => cartesian(&kronecker(&zp, &zp), &zp),
            LatticeKind::ZxZplusAtOrigin => cartesian(&z, &zp),
            LatticeKind::ZplusKronZplusShifted => kronecker(&zp, &zp),
        })
    }

    pub fn all_named() -> Vec<LatticeKind> {
        vec![
            LatticeKind::Z,
            LatticeKind::ZPlus,
            LatticeKind::FullZ2,
            LatticeKind::HalfPlane,
            LatticeKind::Wedge,
            LatticeKind::QuarterPlane,
            LatticeKind::Strip { n: 3 },
            LatticeKind::Strip { n: 4 },
            LatticeKind::Strip { n: 5 },
            LatticeKind::Diamond { k: 3, l: 3 },
            LatticeKind::Diamond { k: 4, l: 4 },
            LatticeKind::Bcc3,
            LatticeKind::Z3Cartesian,
            LatticeKind::Chamber3,
            LatticeKind::MixedTriple,
            LatticeKind::ZxZplusAtOrigin,
            LatticeKind::ZplusAtOne,
            LatticeKind::ZplusKronZplusShifted,
        ]
    }
}

impl fmt::Display for LatticeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LatticeKind::Z => write!(f, "z"),
            LatticeKind::ZPlus => write!(f, "zplus"),
            LatticeKind::FullZ2 => write!(f, "z2"),
            LatticeKind::HalfPlane => write!(f, "halfplane"),
            LatticeKind::Wedge => write!(f, "wedge"),
            LatticeKind::QuarterPlane => write!(f, "quarterplane"),
            LatticeKind::Strip { n } => write!(f, "strip(n={n})"),
            LatticeKind::Diamond { k, l } => write!(f, "diamond(k={k},l={l})"),
            LatticeKind::Bcc3 => write!(f, "bcc3"),
            LatticeKind::Z3Cartesian => write!(f, "z3"),
            LatticeKind::Chamber3 => write!(f, "chamber3"),
            LatticeKind::MixedTriple => write!(f, "mixed3"),
            LatticeKind::ZxZplusAtOrigin => write!(f, "zxzplus"),
            LatticeKind::ZplusAtOne => write!(f, "zplus-at-one"),
            LatticeKind::ZplusKronZplusShifted => write!(f, "zplus-kron-shifted"),
        }
    }
}

impl FromStr for LatticeKind {
    type Err = Error;

    /// Parses the parameter-free kinds; `strip` and `diamond` parse with
    /// placeholder sizes that callers replace.
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "z" => LatticeKind::Z,
            "zplus" => LatticeKind::ZPlus,
            "z2" => LatticeKind::FullZ2,
            "halfplane" => LatticeKind::HalfPlane,
            "wedge" => LatticeKind::Wedge,
            "quarterplane" => LatticeKind::QuarterPlane,
            "strip" => LatticeKind::Strip { n: 0 },
            "diamond" => LatticeKind::Diamond { k: 0, l: 0 },
            "bcc3" => LatticeKind::Bcc3,
            "z3" => LatticeKind::Z3Cartesian,
            "chamber3" => LatticeKind::Chamber3,
            "mixed3" => LatticeKind::MixedTriple,
            "zxzplus" => LatticeKind::ZxZplusAtOrigin,
            "zplus-at-one" => LatticeKind::ZplusAtOne,
            "zplus-kron-shifted" => LatticeKind::ZplusKronZplusShifted,
            other => return Err(invalid(format!("unknown lattice kind '{other}'"))),
        })
    }
}

/// `W_{2m}(0; P_n)`, counted on the path itself.
fn path_walks(n: usize, steps: usize) -> Result<BigCount> {
    let p: Graph = path_graph(n)?.into();
    super::walk_count(&p, &Vertex::from(0), steps)
}

/// Exact closed form of `W_steps` at the kind's root. Odd lengths give 0.
pub fn closed_form_walks(kind: LatticeKind, steps: usize) -> Result<BigCount> {
    kind.check()?;
    if steps % 2 == 1 {
        return Ok(BigUint::zero());
    }
    let m = (steps / 2) as u64;
    let cb = central_binomial;
    Ok(match kind {
        LatticeKind::Z => cb(m),
        LatticeKind::ZPlus => catalan(m),
        LatticeKind::FullZ2 => cb(m).pow(2),
        LatticeKind::HalfPlane => catalan(m) * cb(m),
        LatticeKind::Wedge => catalan(m).pow(2),
        LatticeKind::QuarterPlane => (0..=m)
            .map(|k| binomial(2 * m, 2 * k) * catalan(k) * catalan(m - k))
            .sum(),
        LatticeKind::Strip { n } => cb(m) * path_walks(n, steps)?,
        LatticeKind::Diamond { k, l } => path_walks(k, steps)? * path_walks(l, steps)?,
        LatticeKind::Bcc3 => cb(m).pow(3),
        LatticeKind::Z3Cartesian => (0..=m)
            .map(|k| {
                let den = factorial(m - k).pow(2) * factorial(k).pow(4);
                factorial(2 * m) * factorial(2 * k) / den
            })
            .sum(),
        LatticeKind::Chamber3 | LatticeKind::MixedTriple => (0..=m)
            .map(|k| binomial(2 * m, 2 * k) * catalan(k).pow(2) * catalan(m - k))
            .sum(),
        LatticeKind::ZxZplusAtOrigin => (0..=m)
            .map(|k| binomial(2 * m, 2 * k) * cb(k) * catalan(m - k))
            .sum(),
        LatticeKind::ZplusKronZplusShifted => catalan(m) * catalan(m + 1),
        LatticeKind::ZplusAtOne => catalan(m + 1),
    })
}
