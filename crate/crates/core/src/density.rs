//! Closed-form densities of the Mellin convolutions `alpha *M alpha`,
//! `w *M alpha` and `w *M w`, written with complete elliptic integrals at
//! modulus `xi(x) = sqrt(1 - x^2 / 16)`, plus the numerical checks behind them.
//!
//! All three densities are even, vanish outside `[-4, 4]` and blow up
//! logarithmically at `x = 0`, where [`density`] returns `f64::INFINITY`.

use std::f64::consts::PI;
use std::fmt::{self, Write};
use std::str::FromStr;

use crate::elliptic::elliptic_ke_complementary;
use crate::error::{invalid, Error};
use crate::format::sig15;
use crate::quadrature::{integrate, QuadOptions};
use crate::Result;

/// Which Mellin product a density describes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DensityKind {
    /// `alpha *M alpha` (equal to `alpha * alpha`): the square lattice.
    AA,
    /// `w *M alpha`: the half plane `x >= y`.
    WA,
    /// `w *M w`: the wedge `x >= y >= -x`.
    WW,
}

impl DensityKind {
    pub const ALL: [DensityKind; 3] = [DensityKind::AA, DensityKind::WA, DensityKind::WW];

    /// Coefficients `(a, b)` with `density(x) ~ a ln(16 / |x|) + b` as `x -> 0`.
    fn log_asymptote(self) -> (f64, f64) {
        let p2 = PI * PI;
        match self {
            DensityKind::AA => (1.0 / (2.0 * p2), 0.0),
            DensityKind::WA => (1.0 / p2, -1.0 / p2),
            DensityKind::WW => (2.0 / p2, -4.0 / p2),
        }
    }
}

impl fmt::Display for DensityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DensityKind::AA => "aa",
            DensityKind::WA => "wa",
            DensityKind::WW => "ww",
        })
    }
}

impl FromStr for DensityKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "aa" => Ok(DensityKind::AA),
            "wa" => Ok(DensityKind::WA),
            "ww" => Ok(DensityKind::WW),
            other => Err(invalid(format!("unknown density kind '{other}'"))),
        }
    }
}

/// Arcsine density `1 / (pi sqrt(4 - x^2))` on `(-2, 2)`.
pub fn arcsine_density(x: f64) -> f64 {
    let ax = x.abs();
    if ax >= 2.0 {
        return 0.0;
    }
    1.0 / (PI * ((2.0 - ax) * (2.0 + ax)).sqrt())
}

/// Semicircle density `sqrt(4 - x^2) / (2 pi)` on `[-2, 2]`.
pub fn semicircle_density(x: f64) -> f64 {
    let ax = x.abs();
    if ax >= 2.0 {
        return 0.0;
    }
    ((2.0 - ax) * (2.0 + ax)).sqrt() / (2.0 * PI)
}

/// Closed-form density. Zero for `|x| > 4`, infinite at `x = 0`.
pub fn density(kind: DensityKind, x: f64) -> f64 {
    let ax = x.abs();
    if ax > 4.0 {
        return 0.0;
    }
    if ax == 0.0 {
        return f64::INFINITY;
    }
    // the complementary modulus of xi(x) is |x| / 4
    let pair = elliptic_ke_complementary(ax / 4.0).expect("0 < |x|/4 <= 1");
    let (k, e) = (pair.first_kind, pair.second_kind);
    let p2 = PI * PI;
    match kind {
        DensityKind::AA => k / (2.0 * p2),
        DensityKind::WA => (k - e) / p2,
        DensityKind::WW => 2.0 / p2 * ((1.0 + x * x / 16.0) * k - 2.0 * e),
    }
}

/// Density of the Mellin convolution of two symmetric densities supported
/// in `[-2, 2]`: `2 int_{x/2}^{2} f(x/y) g(y) dy / y` for `x > 0`.
///
/// The substitution `y = c - r cos(t)` over `t in [0, pi]` absorbs the
/// inverse-square-root endpoint behaviour of arcsine-type factors before
/// adaptive refinement.
pub fn mellin_density_convolve(
    f: impl Fn(f64) -> f64,
    g: impl Fn(f64) -> f64,
    x: f64,
    tol: f64,
) -> Result<f64> {
    if x.is_nan() || x <= 0.0 {
        return Err(invalid(format!(
            "Mellin density convolution is evaluated at x > 0, got {x}"
        )));
    }
    if x >= 4.0 {
        return Ok(0.0);
    }
    let (lo, hi) = (x / 2.0, 2.0);
    let (c, r) = (0.5 * (lo + hi), 0.5 * (hi - lo));
    let integrand = |t: f64| {
        let y = c - r * t.cos();
        f(x / y) * g(y) / y * r * t.sin()
    };
    let opts = QuadOptions {
        abs_tol: tol,
        rel_tol: 0.0,
        ..QuadOptions::default()
    };
    Ok(2.0 * integrate(integrand, 0.0, PI, &opts)?.value)
}

/// Width of the panel next to the logarithmic singularity at 0 that is
/// integrated from the asymptotic form instead of by quadrature.
pub const SINGULAR_PANEL: f64 = 1e-6;

/// `int x^m density(x) dx` over `[-4, 4]` for even `m`.
///
/// On `[0, SINGULAR_PANEL]` the density is replaced by its logarithmic
/// asymptote, integrated exactly; the neglected remainder is
/// `O(eps^3 ln eps)`. The rest goes through adaptive quadrature with
/// tolerance `tol * max(1, |result|)`.
pub fn density_moment(kind: DensityKind, m: usize, tol: f64) -> Result<f64> {
    if m % 2 == 1 {
        return Err(invalid(format!(
            "density moments are taken at even m, got {m}"
        )));
    }
    let eps = SINGULAR_PANEL;
    let p = (m + 1) as f64;
    let (a, b) = kind.log_asymptote();
    let near_zero = eps.powf(p) / p * (a * ((16.0 / eps).ln() + 1.0 / p) + b);
    let opts = QuadOptions {
        abs_tol: tol,
        rel_tol: tol,
        ..QuadOptions::default()
    };
    let bulk = integrate(
        |x: f64| x.powi(m as i32) * density(kind, x),
        eps,
        4.0,
        &opts,
    )?;
    Ok(2.0 * (near_zero + bulk.value))
}

/// `x,density` samples on a uniform grid of `grid` points over `[-4, 4]`;
/// the singular point prints as `inf`.
pub fn density_samples_csv(kind: DensityKind, grid: usize) -> Result<String> {
    if grid < 2 {
        return Err(invalid(format!(
            "density grid needs at least 2 points, got {grid}"
        )));
    }
    let mut out = String::from("x,density\n");
    for i in 0..grid {
        let x = -4.0 + 8.0 * i as f64 / (grid - 1) as f64;
        writeln!(out, "{},{}", sig15(x), sig15(density(kind, x))).unwrap();
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{catalan, central_binomial};
    use num_traits::ToPrimitive;

    #[test]
    fn endpoint_values() {
        assert_eq!(density(DensityKind::WA, 4.0), 0.0);
        assert_eq!(density(DensityKind::WW, 4.0), 0.0);
        let aa = density(DensityKind::AA, 4.0);
        assert!((aa - 1.0 / (4.0 * PI)).abs() < 1e-15);
        assert_eq!(density(DensityKind::AA, 4.5), 0.0);
        for kind in DensityKind::ALL {
            assert_eq!(density(kind, 0.0), f64::INFINITY);
        }
    }

    #[test]
    fn even_and_nonnegative() {
        for kind in DensityKind::ALL {
            for i in 1..400 {
                let x = i as f64 / 100.0;
                let d = density(kind, x);
                assert!(d >= 0.0, "{kind} at {x}");
                assert_eq!(d, density(kind, -x));
            }
        }
    }

    #[test]
    fn base_densities_normalise() {
        for f in [arcsine_density as fn(f64) -> f64, semicircle_density] {
            // t-substitution x = -2 cos t
            let r = integrate(
                |t: f64| f(-2.0 * t.cos()) * 2.0 * t.sin(),
                0.0,
                PI,
                &QuadOptions::default(),
            )
            .unwrap();
            assert!((r.value - 1.0).abs() < 1e-10);
        }
    }

    #[test]
    fn convolution_matches_closed_forms() {
        let tol = 1e-10;
        for x in [0.05, 0.5, 1.0, 2.0, 3.0, 3.9, 3.999] {
            let wa = mellin_density_convolve(semicircle_density, arcsine_density, x, tol).unwrap();
            assert!(
                (wa - density(DensityKind::WA, x)).abs() < 1e-6,
                "wa at {x}: {wa}"
            );
            let aa = mellin_density_convolve(arcsine_density, arcsine_density, x, tol).unwrap();
            assert!(
                (aa - density(DensityKind::AA, x)).abs() < 1e-6,
                "aa at {x}: {aa}"
            );
            let ww =
                mellin_density_convolve(semicircle_density, semicircle_density, x, tol).unwrap();
            assert!(
                (ww - density(DensityKind::WW, x)).abs() < 1e-6,
                "ww at {x}: {ww}"
            );
        }
        assert_eq!(
            mellin_density_convolve(arcsine_density, arcsine_density, 4.2, tol).unwrap(),
            0.0
        );
        assert!(mellin_density_convolve(arcsine_density, arcsine_density, 0.0, tol).is_err());
    }

    #[test]
    fn moments_match_walk_counts() {
        for m in 0..=5u64 {
            let cb = central_binomial(m).to_f64().unwrap();
            let c = catalan(m).to_f64().unwrap();
            for (kind, expected) in [
                (DensityKind::AA, cb * cb),
                (DensityKind::WA, c * cb),
                (DensityKind::WW, c * c),
            ] {
                let got = density_moment(kind, 2 * m as usize, 1e-9).unwrap();
                assert!(
                    (got - expected).abs() <= 1e-6 * expected,
                    "{kind} 2m={}: {got} vs {expected}",
                    2 * m
                );
            }
        }
        assert!(density_moment(DensityKind::AA, 3, 1e-9).is_err());
    }

    #[test]
    fn samples_csv() {
        let wa = density_samples_csv(DensityKind::WA, 5).unwrap();
        let rows: Vec<&str> = wa.lines().collect();
        assert_eq!(rows[0], "x,density");
        assert_eq!(rows[1], "-4.00000000000000e0,0");
        assert_eq!(rows[5], "4.00000000000000e0,0");
        let aa = density_samples_csv(DensityKind::AA, 3).unwrap();
        assert_eq!(aa.lines().nth(2).unwrap(), "0,inf");
        let ww = density_samples_csv(DensityKind::WW, 2).unwrap();
        assert_eq!(
            ww,
            "x,density\n-4.00000000000000e0,0\n4.00000000000000e0,0\n"
        );
        assert!(density_samples_csv(DensityKind::WW, 1).is_err());
    }
}
