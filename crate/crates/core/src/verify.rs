//! Batch verification suites with machine-readable reports.
//!
//! Every check records what was expected, what was computed and the
//! tolerance used (`None` for exact big-integer comparisons).

use std::f64::consts::FRAC_PI_2;
use std::fmt;
use std::str::FromStr;

use num_traits::ToPrimitive;
use serde::Serialize;

use crate::combinatorics::{binomial_identity_sides, catalan, central_binomial, BigCount};
use crate::density::{
    arcsine_density, density, density_moment, mellin_density_convolve, semicircle_density,
    DensityKind,
};
use crate::elliptic::elliptic_ke;
use crate::error::invalid;
use crate::graph::{
    ball, degree_histogram, path_graph, verify_isomorphism, Budget, Graph, IsoMap, Vertex,
};
use crate::spectral::path_spectrum;
use crate::walks::{moment_coincidence_report, walk_count_with_budget, LatticeKind};
use crate::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Identity,
    Iso,
    Coincidence,
    Density,
    PathSpectrum,
    All,
}

impl Suite {
    pub const INDIVIDUAL: [Suite; 5] = [
        Suite::Identity,
        Suite::Iso,
        Suite::Coincidence,
        Suite::Density,
        Suite::PathSpectrum,
    ];
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Identity => "identity",
            Suite::Iso => "iso",
            Suite::Coincidence => "coincidence",
            Suite::Density => "density",
            Suite::PathSpectrum => "path-spectrum",
            Suite::All => "all",
        })
    }
}

impl FromStr for Suite {
    type Err = crate::Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "identity" => Suite::Identity,
            "iso" => Suite::Iso,
            "coincidence" => Suite::Coincidence,
            "density" => Suite::Density,
            "path-spectrum" => Suite::PathSpectrum,
            "all" => Suite::All,
            _ => return Err(invalid(format!("unknown suite `{s}`"))),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub actual: String,
    pub tol: Option<f64>,
    pub pass: bool,
}

impl Check {
    fn exact(name: impl Into<String>, expected: impl ToString, actual: impl ToString) -> Check {
        let (expected, actual) = (expected.to_string(), actual.to_string());
        Check {
            name: name.into(),
            pass: expected == actual,
            expected,
            actual,
            tol: None,
        }
    }

    /// Passes iff `|actual - expected| <= tol`.
    fn absolute(name: impl Into<String>, expected: f64, actual: f64, tol: f64) -> Check {
        Check {
            name: name.into(),
            expected: expected.to_string(),
            actual: actual.to_string(),
            tol: Some(tol),
            pass: (actual - expected).abs() <= tol,
        }
    }

    /// Passes iff `|actual - expected| <= tol * |expected|`.
    fn relative(name: impl Into<String>, expected: f64, actual: f64, tol: f64) -> Check {
        let pass = (actual - expected).abs() <= tol * expected.abs();
        Check {
            name: name.into(),
            expected: expected.to_string(),
            actual: actual.to_string(),
            tol: Some(tol),
            pass,
        }
    }

    fn flag(
        name: impl Into<String>,
        expected: impl ToString,
        actual: impl ToString,
        pass: bool,
    ) -> Check {
        Check {
            name: name.into(),
            expected: expected.to_string(),
            actual: actual.to_string(),
            tol: None,
            pass,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: Vec<Check>,
    pub pass: bool,
}

impl SuiteReport {
    fn new(suite: Suite, checks: Vec<Check>) -> SuiteReport {
        let pass = checks.iter().all(|c| c.pass);
        SuiteReport {
            suite: suite.to_string(),
            checks,
            pass,
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }

    /// `name,expected,actual,tol,pass` rows.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("name,expected,actual,tol,pass\n");
        for c in &self.checks {
            let tol = c.tol.map(|t| t.to_string()).unwrap_or_default();
            out.push_str(&format!(
                "\"{}\",{},{},{},{}\n",
                c.name.replace('"', "\"\""),
                c.expected,
                c.actual,
                tol,
                c.pass
            ));
        }
        out
    }
}

#[derive(Clone, Copy, Debug)]
pub struct VerifyOptions {
    pub budget: Budget,
    /// Quadrature tolerance for the density suite.
    pub quad_tol: f64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            budget: Budget::DEFAULT,
            quad_tol: 1e-10,
        }
    }
}

pub fn run_suite(suite: Suite, opts: &VerifyOptions) -> Result<SuiteReport> {
    let checks = match suite {
        Suite::Identity => identity_checks(),
        Suite::Iso => iso_checks(opts)?,
        Suite::Coincidence => coincidence_checks(opts)?,
        Suite::Density => density_checks(opts)?,
        Suite::PathSpectrum => path_spectrum_checks(opts)?,
        Suite::All => {
            let mut all = Vec::new();
            for s in Suite::INDIVIDUAL {
                all.extend(run_suite(s, opts)?.checks.into_iter().map(|mut c| {
                    c.name = format!("{s}/{}", c.name);
                    c
                }));
            }
            all
        }
    };
    Ok(SuiteReport::new(suite, checks))
}

pub const IDENTITY_M_MAX: u64 = 30;

fn identity_checks() -> Vec<Check> {
    (0..=IDENTITY_M_MAX)
        .map(|m| {
            let (lhs, rhs) = binomial_identity_sides(m);
            Check::exact(
                format!("sum binom(2m,2k)binom(2k,k)binom(2m-2k,m-k) = binom(2m,m)^2, m={m}"),
                rhs,
                lhs,
            )
        })
        .collect()
}

fn iso_checks(opts: &VerifyOptions) -> Result<Vec<Check>> {
    let maps = [
        (IsoMap::square_lattice(), 8),
        (IsoMap::strip(3)?, 6),
        (IsoMap::strip(4)?, 6),
        (IsoMap::diamond(4, 4)?, 6),
        (IsoMap::half_plane(), 6),
        (IsoMap::wedge(), 6),
    ];
    let mut checks = Vec::new();
    for (map, radius) in maps {
        let r = verify_isomorphism(&map, radius, opts.budget)?;
        let actual = match &r.violation {
            None => format!(
                "isomorphism ({} vertices, {} edges)",
                r.source_vertices, r.source_edges
            ),
            Some(v) => format!("{v:?}"),
        };
        checks.push(Check::flag(
            format!("{} on radius-{radius} balls", r.map),
            "isomorphism",
            actual,
            r.is_isomorphism(),
        ));
    }
    Ok(checks)
}

/// Largest `2m` compared between the mixed product and the chamber.
pub const CHAMBER_STEPS: usize = 12;
/// Largest `2m` compared for `Z xC Z+` and its proposed partner.
pub const HALF_STRIP_STEPS: usize = 16;
const WITNESS_RADIUS: usize = 6;
const WITNESS_INTERIOR: usize = 4;

fn coincidence_checks(opts: &VerifyOptions) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    let rooted = |k: LatticeKind| -> Result<(Graph, Vertex)> { Ok((k.graph()?, k.root())) };

    let (mixed, mixed_root) = rooted(LatticeKind::MixedTriple)?;
    let (chamber, chamber_root) = rooted(LatticeKind::Chamber3)?;
    let report = moment_coincidence_report(
        &mixed,
        &mixed_root,
        &chamber,
        &chamber_root,
        CHAMBER_STEPS,
        opts.budget,
    )?;
    for row in report.rows.iter().filter(|r| r.m % 2 == 0) {
        checks.push(Check::exact(
            format!("W_{}: {} vs {}", row.m, report.first, report.second),
            &row.second,
            &row.first,
        ));
    }
    checks.push(Check::exact(
        "W_4 of L{x>=y>=z} at the origin",
        12,
        &report.rows[4].second,
    ));

    let degree_two = |g: &Graph, root: &Vertex| -> Result<usize> {
        let b = ball(g, root, WITNESS_RADIUS, opts.budget)?;
        Ok(degree_histogram(&b, WITNESS_INTERIOR)?
            .get(&2)
            .copied()
            .unwrap_or(0))
    };
    let mixed_two = degree_two(&mixed, &mixed_root)?;
    checks.push(Check::exact(
        format!(
            "degree-2 vertices within distance {WITNESS_INTERIOR} in {}",
            report.first
        ),
        1,
        mixed_two,
    ));
    let chamber_two = degree_two(&chamber, &chamber_root)?;
    checks.push(Check::flag(
        format!(
            "degree-2 vertices within distance {WITNESS_INTERIOR} in {}",
            report.second
        ),
        ">= 2",
        chamber_two,
        chamber_two >= 2,
    ));

    // Z xC Z+ at the origin against Z+ xK Z+ at (0, 1), both against C_m C_{m+1}.
    let (half, half_root) = rooted(LatticeKind::ZxZplusAtOrigin)?;
    let (shifted, shifted_root) = rooted(LatticeKind::ZplusKronZplusShifted)?;
    let report = moment_coincidence_report(
        &half,
        &half_root,
        &shifted,
        &shifted_root,
        HALF_STRIP_STEPS,
        opts.budget,
    )?;
    for row in report.rows.iter().filter(|r| r.m % 2 == 0) {
        checks.push(Check::exact(
            format!("W_{}: {} vs {}", row.m, report.first, report.second),
            &row.second,
            &row.first,
        ));
        checks.push(Check::exact(
            format!("W_{} of {} = C_m C_(m+1)", row.m, report.first),
            cm_cm1(row.m / 2),
            &row.first,
        ));
    }

    let (quarter, quarter_root) = rooted(LatticeKind::QuarterPlane)?;
    let report = moment_coincidence_report(
        &quarter,
        &quarter_root,
        &shifted,
        &shifted_root,
        HALF_STRIP_STEPS,
        opts.budget,
    )?;
    for row in report.rows.iter().filter(|r| r.m % 2 == 0) {
        checks.push(Check::exact(
            format!("W_{}: {} vs {}", row.m, report.first, report.second),
            &row.second,
            &row.first,
        ));
    }
    Ok(checks)
}

fn cm_cm1(m: usize) -> BigCount {
    catalan(m as u64) * catalan(m as u64 + 1)
}

type Kernel = fn(f64) -> f64;

pub const DENSITY_MOMENT_STEPS: usize = 10;
pub const DENSITY_SAMPLES: usize = 20;

fn density_checks(opts: &VerifyOptions) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    let tol = opts.quad_tol;
    for kind in DensityKind::ALL {
        checks.push(Check::absolute(
            format!("{kind} total mass"),
            1.0,
            density_moment(kind, 0, tol)?,
            1e-8,
        ));
        for m in (2..=DENSITY_MOMENT_STEPS).step_by(2) {
            let exact = exact_density_moment(kind, m as u64 / 2).to_f64().unwrap();
            checks.push(Check::relative(
                format!("{kind} moment {m}"),
                exact,
                density_moment(kind, m, tol)?,
                1e-6,
            ));
        }
        let (f, g): (Kernel, Kernel) = match kind {
            DensityKind::AA => (arcsine_density, arcsine_density),
            DensityKind::WA => (semicircle_density, arcsine_density),
            DensityKind::WW => (semicircle_density, semicircle_density),
        };
        for i in 0..DENSITY_SAMPLES {
            let x = 4.0 * (i as f64 + 0.5) / DENSITY_SAMPLES as f64;
            let numeric = mellin_density_convolve(f, g, x, tol)?;
            checks.push(Check::absolute(
                format!("{kind} Mellin convolution at x={x}"),
                density(kind, x),
                numeric,
                1e-6,
            ));
        }
    }
    for i in 1..=19 {
        let k = i as f64 / 20.0;
        let a = elliptic_ke(k)?;
        let b = elliptic_ke((1.0 - k * k).sqrt())?;
        let lhs = a.first_kind * b.second_kind + b.first_kind * a.second_kind
            - a.first_kind * b.first_kind;
        checks.push(Check::absolute(
            format!("Legendre relation at k={k}"),
            FRAC_PI_2,
            lhs,
            1e-11,
        ));
    }
    Ok(checks)
}

/// `binom(2m,m)^2`, `C_m binom(2m,m)` and `C_m^2` for AA, WA and WW.
fn exact_density_moment(kind: DensityKind, m: u64) -> BigCount {
    match kind {
        DensityKind::AA => central_binomial(m) * central_binomial(m),
        DensityKind::WA => catalan(m) * central_binomial(m),
        DensityKind::WW => catalan(m) * catalan(m),
    }
}

pub const PATH_SPECTRUM_N_MAX: usize = 12;

fn path_spectrum_checks(opts: &VerifyOptions) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for n in 2..=PATH_SPECTRUM_N_MAX {
        let s = path_spectrum(n)?;
        let p = path_graph(n)?;
        let root = p.root_vertex().cloned().expect("paths are rooted");
        let g: Graph = p.into();
        for m in (0..=2 * n).step_by(2) {
            let w = walk_count_with_budget(&g, &root, m, opts.budget)?
                .to_f64()
                .unwrap();
            checks.push(Check::relative(
                format!("P{n} moment {m}"),
                w,
                s.moment(m),
                1e-8,
            ));
        }
    }
    let s = path_spectrum(4)?;
    let r5 = 5f64.sqrt();
    for m in 0..=6 {
        let closed = (5.0 - r5) / 10.0 * ((3.0 + r5) / 2.0).powi(m)
            + (5.0 + r5) / 10.0 * ((3.0 - r5) / 2.0).powi(m);
        checks.push(Check::absolute(
            format!("P4 golden-ratio form, 2m={}", 2 * m),
            closed,
            s.moment(2 * m as usize),
            1e-9,
        ));
    }
    Ok(checks)
}
