//! Spectral distributions at the moment level.
//!
//! A [`SpectralDistribution`] is a lazy composite: convolutions are kept as
//! trees and their moments are evaluated on demand. Arcsine and semicircle
//! moments (and any tree built only from them) stay exact big integers;
//! discrete path spectra force floating point.

mod path;

use std::fmt::{self, Write};
use std::sync::Arc;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive, Zero};

pub use path::{path_spectrum, PathSpectrum, MAX_PATH_SPECTRUM};

use crate::combinatorics::{binomial, catalan, central_binomial};
use crate::density::DensityKind;
use crate::error::invalid;
use crate::format::sig15;
use crate::Result;

/// A moment value: exact when every ingredient is exact.
#[derive(Clone, Debug, PartialEq)]
pub enum Moment {
    Exact(BigUint),
    Approx(f64),
}

impl Moment {
    pub fn to_f64(&self) -> f64 {
        match self {
            Moment::Exact(v) => v.to_f64().unwrap_or(f64::INFINITY),
            Moment::Approx(x) => *x,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Moment::Exact(_))
    }

    pub fn as_exact(&self) -> Option<&BigUint> {
        match self {
            Moment::Exact(v) => Some(v),
            Moment::Approx(_) => None,
        }
    }

    fn zero() -> Moment {
        Moment::Exact(BigUint::zero())
    }

    fn mul(&self, other: &Moment) -> Moment {
        match (self, other) {
            (Moment::Exact(a), Moment::Exact(b)) => Moment::Exact(a * b),
            _ => Moment::Approx(self.to_f64() * other.to_f64()),
        }
    }

    fn add(&self, other: &Moment) -> Moment {
        match (self, other) {
            (Moment::Exact(a), Moment::Exact(b)) => Moment::Exact(a + b),
            _ => Moment::Approx(self.to_f64() + other.to_f64()),
        }
    }

    fn scale(&self, k: &BigUint) -> Moment {
        match self {
            Moment::Exact(a) => Moment::Exact(a * k),
            Moment::Approx(x) => Moment::Approx(x * k.to_f64().unwrap_or(f64::INFINITY)),
        }
    }

    /// Decimal string for exact values, 15 significant digits otherwise.
    pub fn to_csv_field(&self) -> String {
        match self {
            Moment::Exact(v) => v.to_string(),
            Moment::Approx(x) => sig15(*x),
        }
    }
}

impl fmt::Display for Moment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_csv_field())
    }
}

/// Symmetric finite atomic measure `sum_k w_k delta_{x_k}`.
#[derive(Clone, Debug, PartialEq)]
pub struct DiscreteMeasure {
    atoms: Vec<(f64, f64)>,
}

impl DiscreteMeasure {
    const WEIGHT_SUM_TOL: f64 = 1e-12;
    const SYMMETRY_TOL: f64 = 1e-9;

    /// Atoms as `(position, weight)`. Weights must sum to 1, be nonnegative up
    /// to solver noise, and come in `±x` pairs of equal weight. Each accepted
    /// pair is replaced by its exact mirror average.
    pub fn new(mut atoms: Vec<(f64, f64)>) -> Result<Self> {
        if atoms.is_empty() {
            return Err(invalid("discrete measure needs at least one atom"));
        }
        if atoms.iter().any(|(x, w)| !x.is_finite() || !w.is_finite()) {
            return Err(invalid("discrete atoms must be finite"));
        }
        let total: f64 = atoms.iter().map(|a| a.1).sum();
        if (total - 1.0).abs() > Self::WEIGHT_SUM_TOL {
            return Err(invalid(format!(
                "discrete weights sum to {total}, expected 1"
            )));
        }
        if atoms.iter().any(|a| a.1 < -1e-10) {
            return Err(invalid("discrete weights must be nonnegative"));
        }
        atoms.sort_by(|a, b| a.0.total_cmp(&b.0));
        let n = atoms.len();
        for i in 0..n {
            let (x, w) = atoms[i];
            let (y, v) = atoms[n - 1 - i];
            if (x + y).abs() > Self::SYMMETRY_TOL || (w - v).abs() > Self::SYMMETRY_TOL {
                return Err(invalid(format!("atom ({x}, {w}) has no mirror image")));
            }
        }
        for i in 0..n / 2 {
            let x = 0.5 * (atoms[n - 1 - i].0 - atoms[i].0);
            let w = 0.5 * (atoms[n - 1 - i].1 + atoms[i].1);
            atoms[i] = (-x, w);
            atoms[n - 1 - i] = (x, w);
        }
        if n % 2 == 1 {
            atoms[n / 2].0 = 0.0;
        }
        Ok(DiscreteMeasure { atoms })
    }

    /// `(delta_{-1} + delta_{+1}) / 2`, the unit for Mellin convolution.
    pub fn symmetric_unit() -> Self {
        DiscreteMeasure {
            atoms: vec![(-1.0, 0.5), (1.0, 0.5)],
        }
    }

    /// `delta_0`, the unit for classical convolution.
    pub fn point_mass_at_zero() -> Self {
        DiscreteMeasure {
            atoms: vec![(0.0, 1.0)],
        }
    }

    pub fn atoms(&self) -> &[(f64, f64)] {
        &self.atoms
    }

    /// Summed over mirror pairs, so odd moments are exactly zero.
    pub fn moment(&self, m: usize) -> f64 {
        let n = self.atoms.len();
        let pairs: f64 = (0..n / 2)
            .map(|i| {
                let ((a, w), (b, _)) = (self.atoms[i], self.atoms[n - 1 - i]);
                w * (a.powi(m as i32) + b.powi(m as i32))
            })
            .sum();
        let middle = if n % 2 == 1 {
            self.atoms[n / 2].1 * 0f64.powi(m as i32)
        } else {
            0.0
        };
        pairs + middle
    }
}

/// Spectral distribution of a rooted graph, described by how it was built.
#[derive(Clone, Debug, PartialEq)]
pub enum SpectralDistribution {
    /// Density `1 / (pi sqrt(4 - x^2))` on `(-2, 2)`; spectral law of `Z` at 0.
    ArcSine,
    /// Density `sqrt(4 - x^2) / (2 pi)` on `[-2, 2]`; spectral law of `Z+` at 0.
    Semicircle,
    Discrete(DiscreteMeasure),
    /// Law of `X + Y` for independent `X`, `Y`.
    ClassicalConv(Arc<SpectralDistribution>, Arc<SpectralDistribution>),
    /// Law of `XY` for independent symmetric `X`, `Y`.
    MellinConv(Arc<SpectralDistribution>, Arc<SpectralDistribution>),
    /// One of the elliptic-integral densities on `[-4, 4]`.
    NamedDensity(DensityKind),
}

impl SpectralDistribution {
    pub fn mellin(a: SpectralDistribution, b: SpectralDistribution) -> Self {
        SpectralDistribution::MellinConv(Arc::new(a), Arc::new(b))
    }

    pub fn classical(a: SpectralDistribution, b: SpectralDistribution) -> Self {
        SpectralDistribution::ClassicalConv(Arc::new(a), Arc::new(b))
    }

    /// The Mellin factorisation behind a named density.
    pub fn factorization(kind: DensityKind) -> (SpectralDistribution, SpectralDistribution) {
        use SpectralDistribution::{ArcSine, Semicircle};
        match kind {
            DensityKind::AA => (ArcSine, ArcSine),
            DensityKind::WA => (Semicircle, ArcSine),
            DensityKind::WW => (Semicircle, Semicircle),
        }
    }

    /// `M_m = integral of x^m`. Odd moments vanish for every variant.
    pub fn moment(&self, m: usize) -> Moment {
        match self {
            SpectralDistribution::ArcSine => {
                if m % 2 == 1 {
                    Moment::zero()
                } else {
                    Moment::Exact(central_binomial(m as u64 / 2))
                }
            }
            SpectralDistribution::Semicircle => {
                if m % 2 == 1 {
                    Moment::zero()
                } else {
                    Moment::Exact(catalan(m as u64 / 2))
                }
            }
            SpectralDistribution::Discrete(d) => Moment::Approx(d.moment(m)),
            SpectralDistribution::MellinConv(a, b) => a.moment(m).mul(&b.moment(m)),
            SpectralDistribution::ClassicalConv(a, b) => (0..=m).fold(Moment::zero(), |acc, k| {
                let term = a
                    .moment(k)
                    .mul(&b.moment(m - k))
                    .scale(&binomial(m as u64, k as u64));
                acc.add(&term)
            }),
            SpectralDistribution::NamedDensity(kind) => {
                let (a, b) = Self::factorization(*kind);
                a.moment(m).mul(&b.moment(m))
            }
        }
    }

    /// Rows `m,moment` for `m = 0..=m_max`.
    pub fn moment_table_csv(&self, m_max: usize) -> String {
        let mut out = String::from("m,moment\n");
        for m in 0..=m_max {
            writeln!(out, "{m},{}", self.moment(m).to_csv_field()).unwrap();
        }
        out
    }
}

impl fmt::Display for SpectralDistribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpectralDistribution::ArcSine => write!(f, "alpha"),
            SpectralDistribution::Semicircle => write!(f, "w"),
            SpectralDistribution::Discrete(d) => write!(f, "discrete[{} atoms]", d.atoms.len()),
            SpectralDistribution::ClassicalConv(a, b) => write!(f, "({a} * {b})"),
            SpectralDistribution::MellinConv(a, b) => write!(f, "({a} *M {b})"),
            SpectralDistribution::NamedDensity(k) => write!(f, "density[{k}]"),
        }
    }
}

pub fn mellin_convolve(a: SpectralDistribution, b: SpectralDistribution) -> SpectralDistribution {
    SpectralDistribution::mellin(a, b)
}

pub fn classical_convolve(
    a: SpectralDistribution,
    b: SpectralDistribution,
) -> SpectralDistribution {
    SpectralDistribution::classical(a, b)
}

pub const DEFAULT_WEAK_EQUALITY_M_MAX: usize = 30;
pub const DEFAULT_WEAK_EQUALITY_TOL: f64 = 1e-9;

/// True iff `|M_m(a) - M_m(b)| <= tol * max(1, |M_m(a)|)` for all `m <= m_max`.
/// For compactly supported laws this decides equality as `m_max` grows.
pub fn weak_equality_by_moments(
    a: &SpectralDistribution,
    b: &SpectralDistribution,
    m_max: usize,
    tol: f64,
) -> bool {
    (0..=m_max).all(|m| {
        let (x, y) = (a.moment(m), b.moment(m));
        let diff = match (&x, &y) {
            (Moment::Exact(p), Moment::Exact(q)) => (BigInt::from(p.clone())
                - BigInt::from(q.clone()))
            .to_f64()
            .unwrap_or(f64::INFINITY)
            .abs(),
            _ => (x.to_f64() - y.to_f64()).abs(),
        };
        diff <= tol * x.to_f64().abs().max(1.0)
    })
}

/// Even moments `M_0, M_2, M_4, ...` of a distribution.
#[derive(Clone, Debug, PartialEq)]
pub struct MomentSequence {
    pub even_moments: Vec<Moment>,
}

impl MomentSequence {
    pub fn of(d: &SpectralDistribution, count: usize) -> Self {
        MomentSequence {
            even_moments: (0..count).map(|i| d.moment(2 * i)).collect(),
        }
    }

    /// `M_0 = 1` and `M_{2i} M_{2i+4} >= M_{2i+2}^2` for every window; both
    /// hold for any genuine probability distribution.
    pub fn looks_like_distribution(&self) -> bool {
        let ok_zero = match self.even_moments.first() {
            Some(Moment::Exact(v)) => v.is_one(),
            Some(Moment::Approx(x)) => (x - 1.0).abs() < 1e-10,
            None => false,
        };
        ok_zero
            && self
                .even_moments
                .windows(3)
                .all(|w| match (&w[0], &w[1], &w[2]) {
                    (Moment::Exact(a), Moment::Exact(b), Moment::Exact(c)) => a * c >= b * b,
                    _ => {
                        let (a, b, c) = (w[0].to_f64(), w[1].to_f64(), w[2].to_f64());
                        a * c - b * b >= -1e-9 * (b * b).max(1.0)
                    }
                })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use SpectralDistribution::{ArcSine, Semicircle};

    fn exact(v: u64) -> Moment {
        Moment::Exact(BigUint::from(v))
    }

    #[test]
    fn base_moments() {
        assert_eq!(ArcSine.moment(2), exact(2));
        assert_eq!(Semicircle.moment(4), exact(2));
        assert_eq!(ArcSine.moment(1), exact(0));
        assert_eq!(mellin_convolve(Semicircle, ArcSine).moment(4), exact(12));
        assert_eq!(
            SpectralDistribution::NamedDensity(DensityKind::WA).moment(4),
            exact(12)
        );
    }

    #[test]
    fn convolution_examples() {
        assert_eq!(mellin_convolve(Semicircle, Semicircle).moment(4), exact(4));
        assert_eq!(classical_convolve(ArcSine, ArcSine).moment(4), exact(36));
        assert_eq!(
            classical_convolve(Semicircle, Semicircle).moment(4),
            exact(10)
        );
        let with_zero = classical_convolve(
            Semicircle,
            SpectralDistribution::Discrete(DiscreteMeasure::point_mass_at_zero()),
        );
        for m in 0..12 {
            assert_eq!(with_zero.moment(m).to_f64(), Semicircle.moment(m).to_f64());
        }
        let with_unit = mellin_convolve(
            ArcSine,
            SpectralDistribution::Discrete(DiscreteMeasure::symmetric_unit()),
        );
        assert!(weak_equality_by_moments(&with_unit, &ArcSine, 30, 1e-12));
    }

    #[test]
    fn arcsine_classical_equals_mellin() {
        let c = classical_convolve(ArcSine, ArcSine);
        let m = mellin_convolve(ArcSine, ArcSine);
        for k in 0..=20 {
            assert_eq!(c.moment(k), m.moment(k), "m = {k}");
        }
        assert!(weak_equality_by_moments(
            &c,
            &m,
            30,
            DEFAULT_WEAK_EQUALITY_TOL
        ));
    }

    #[test]
    fn semicircle_classical_differs_from_mellin() {
        let c = classical_convolve(Semicircle, Semicircle);
        let m = mellin_convolve(Semicircle, Semicircle);
        assert!(!weak_equality_by_moments(&c, &m, 10, 1e-9));
        assert!(weak_equality_by_moments(&c, &c, 10, 0.0));
    }

    #[test]
    fn discrete_validation() {
        assert!(DiscreteMeasure::new(vec![(1.0, 0.5), (-1.0, 0.5)]).is_ok());
        assert!(DiscreteMeasure::new(vec![(1.0, 0.5), (-1.0, 0.4)]).is_err());
        assert!(DiscreteMeasure::new(vec![(1.0, 0.5), (-2.0, 0.5)]).is_err());
        assert!(DiscreteMeasure::new(vec![(0.0, 1.0)]).is_ok());
        assert!(DiscreteMeasure::new(vec![]).is_err());
    }

    #[test]
    fn hankel_windows() {
        for d in [ArcSine, Semicircle, mellin_convolve(Semicircle, ArcSine)] {
            assert!(MomentSequence::of(&d, 12).looks_like_distribution(), "{d}");
        }
        // M_2 = 2, M_4 = 1 violates M_0 M_4 >= M_2^2
        let bogus = MomentSequence {
            even_moments: vec![exact(1), exact(2), exact(1)],
        };
        assert!(!bogus.looks_like_distribution());
    }

    #[test]
    fn moment_csv() {
        let csv =
            SpectralDistribution::Discrete(DiscreteMeasure::symmetric_unit()).moment_table_csv(2);
        assert_eq!(
            csv,
            "m,moment\n0,1.00000000000000e0\n1,0\n2,1.00000000000000e0\n"
        );
        assert_eq!(ArcSine.moment_table_csv(2), "m,moment\n0,1\n1,0\n2,2\n");
    }
}
