//! Command-line front end: walk tables, moment tables, density samples,
//! component counts, isomorphism checks and the verification suites.
//!
//! Every output starts with the resolved parameters: a `# params` comment
//! line for CSV, a `params` object for JSON.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::density::{density, density_samples_csv, DensityKind};
use crate::error::invalid;
use crate::format::sig15;
use crate::graph::{
    cartesian, connected_components, kronecker, path_graph, verify_isomorphism, Budget, Graph,
    IsoMap,
};
use crate::spectral::{path_spectrum, SpectralDistribution};
use crate::verify::{run_suite, Suite, VerifyOptions};
use crate::walks::{closed_form_walks, walk_table, LatticeKind};
use crate::Result;

/// Largest walk length for 3-D kinds.
pub const CAP_3D: usize = 24;
/// Largest walk length for 1-D and 2-D kinds.
pub const CAP_LOW_DIM: usize = 40;
/// Largest walk length for moment tables.
pub const CAP_MOMENTS: usize = 200;

#[derive(Parser, Debug)]
#[command(
    name = "lattice-walks",
    version,
    about = "Closed walks on graph products and restricted lattices"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Closed-walk counts on a ball, compared with the closed form.
    Walks(WalksArgs),
    /// Moments of a spectral distribution.
    Moments(MomentsArgs),
    /// Samples of an elliptic-integral density on [-4, 4].
    Density(DensityArgs),
    /// Run a verification suite; exits 0 iff every check passes.
    Verify(VerifyArgs),
    /// Connected components of the products of P_k and P_l.
    Components(ComponentsArgs),
    /// Check one of the explicit lattice isomorphisms on balls.
    Iso(IsoArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

impl Format {
    fn name(self) -> &'static str {
        match self {
            Format::Csv => "csv",
            Format::Json => "json",
        }
    }
}

#[derive(Args, Debug, Clone)]
pub struct Output {
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Write to this file instead of standard output.
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct WalksArgs {
    /// z, zplus, z2, halfplane, wedge, quarterplane, strip, diamond, bcc3, z3,
    /// chamber3, mixed3, zxzplus, zplus-at-one, zplus-kron-shifted
    #[arg(long)]
    pub kind: String,
    /// Largest walk length.
    #[arg(long)]
    pub mmax: usize,
    /// Strip width.
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub l: Option<usize>,
    /// Vertex budget for balls; overrides LATTICE_WALKS_BUDGET.
    #[arg(long = "radius-budget")]
    pub radius_budget: Option<usize>,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Args, Debug)]
pub struct MomentsArgs {
    /// arcsine, semicircle, aa, wa, ww or path (with --n)
    #[arg(long)]
    pub kind: String,
    #[arg(long)]
    pub mmax: usize,
    #[arg(long)]
    pub n: Option<usize>,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Args, Debug)]
pub struct DensityArgs {
    /// aa, wa or ww
    #[arg(long)]
    pub kind: String,
    /// Number of grid points, at least 2.
    #[arg(long)]
    pub grid: usize,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// identity, iso, coincidence, density, path-spectrum or all
    #[arg(long)]
    pub suite: String,
    /// Quadrature tolerance for the density checks.
    #[arg(long)]
    pub tol: Option<f64>,
    #[arg(long = "radius-budget")]
    pub radius_budget: Option<usize>,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Args, Debug)]
pub struct ComponentsArgs {
    #[arg(long)]
    pub k: usize,
    #[arg(long)]
    pub l: usize,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Args, Debug)]
pub struct IsoArgs {
    /// square, strip (with --n), halfplane, diamond (with --k, --l) or wedge
    #[arg(long)]
    pub kind: String,
    /// Ball radius.
    #[arg(long, default_value_t = 6)]
    pub mmax: usize,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub l: Option<usize>,
    #[arg(long = "radius-budget")]
    pub radius_budget: Option<usize>,
    #[command(flatten)]
    pub output: Output,
}

/// Rendered output of one command and whether it succeeded.
#[derive(Debug)]
pub struct Outcome {
    pub text: String,
    pub success: bool,
    pub out: Option<PathBuf>,
}

type Params = BTreeMap<&'static str, String>;

fn budget(flag: Option<usize>) -> Budget {
    flag.map(Budget).unwrap_or_else(Budget::from_env)
}

fn render(
    params: &Params,
    format: Format,
    csv_body: impl FnOnce() -> String,
    json_body: impl FnOnce() -> Value,
) -> String {
    match format {
        Format::Csv => {
            let mut out = String::from("# params");
            for (k, v) in params {
                write!(out, " {k}={v}").unwrap();
            }
            out.push('\n');
            out + &csv_body()
        }
        Format::Json => {
            let mut v = json_body();
            v.as_object_mut()
                .expect("json bodies are objects")
                .insert("params".into(), json!(params));
            serde_json::to_string_pretty(&v).unwrap() + "\n"
        }
    }
}

fn reject(flag: &str, value: Option<usize>, kind: &str) -> Result<()> {
    match value {
        Some(_) => Err(invalid(format!("--{flag} does not apply to kind '{kind}'"))),
        None => Ok(()),
    }
}

fn required(flag: &str, value: Option<usize>, kind: &str) -> Result<usize> {
    value.ok_or_else(|| invalid(format!("kind '{kind}' needs --{flag}")))
}

/// Resolves `--kind` with its size flags, rejecting flags that do not apply.
fn lattice_kind(
    kind: &str,
    n: Option<usize>,
    k: Option<usize>,
    l: Option<usize>,
) -> Result<LatticeKind> {
    let parsed: LatticeKind = kind.parse()?;
    Ok(match parsed {
        LatticeKind::Strip { .. } => {
            reject("k", k, kind)?;
            reject("l", l, kind)?;
            LatticeKind::Strip {
                n: required("n", n, kind)?,
            }
        }
        LatticeKind::Diamond { .. } => {
            reject("n", n, kind)?;
            LatticeKind::Diamond {
                k: required("k", k, kind)?,
                l: required("l", l, kind)?,
            }
        }
        other => {
            reject("n", n, kind)?;
            reject("k", k, kind)?;
            reject("l", l, kind)?;
            other
        }
    })
}

fn size_params(params: &mut Params, n: Option<usize>, k: Option<usize>, l: Option<usize>) {
    for (key, v) in [("n", n), ("k", k), ("l", l)] {
        if let Some(v) = v {
            params.insert(key, v.to_string());
        }
    }
}

pub fn run(cli: Cli) -> Result<Outcome> {
    match cli.command {
        Command::Walks(a) => cmd_walks(a),
        Command::Moments(a) => cmd_moments(a),
        Command::Density(a) => cmd_density(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Components(a) => cmd_components(a),
        Command::Iso(a) => cmd_iso(a),
    }
}

fn cmd_walks(a: WalksArgs) -> Result<Outcome> {
    let kind = lattice_kind(&a.kind, a.n, a.k, a.l)?;
    let cap = if kind.dim() == 3 { CAP_3D } else { CAP_LOW_DIM };
    if a.mmax > cap {
        return Err(invalid(format!(
            "--mmax {} exceeds the cap of {cap} for {}-dimensional kinds",
            a.mmax,
            kind.dim()
        )));
    }
    let budget = budget(a.radius_budget);
    let format = a.output.format.unwrap_or(Format::Csv);
    let mut params = Params::from([
        ("command", "walks".to_string()),
        ("kind", a.kind.clone()),
        ("mmax", a.mmax.to_string()),
        ("radius-budget", budget.0.to_string()),
        ("format", format.name().to_string()),
    ]);
    size_params(&mut params, a.n, a.k, a.l);

    let table = walk_table(&kind.graph()?, &kind.root(), a.mmax, budget)?;
    let mut rows = Vec::with_capacity(a.mmax + 1);
    for (m, count) in table.entries() {
        let closed = closed_form_walks(kind, m)?;
        rows.push((m, count.clone(), closed.clone(), *count == closed));
    }
    let success = rows.iter().all(|r| r.3);
    let text = render(
        &params,
        format,
        || {
            let mut s = String::from("m,ball_count,closed_form,match\n");
            for (m, c, f, ok) in &rows {
                writeln!(s, "{m},{c},{f},{ok}").unwrap();
            }
            s
        },
        || {
            let rows: Vec<Value> = rows
                .iter()
                .map(|(m, c, f, ok)| json!({"m": m, "ball_count": c.to_string(), "closed_form": f.to_string(), "match": ok}))
                .collect();
            json!({ "rows": rows })
        },
    );
    Ok(Outcome {
        text,
        success,
        out: a.output.out,
    })
}

fn cmd_moments(a: MomentsArgs) -> Result<Outcome> {
    if a.mmax > CAP_MOMENTS {
        return Err(invalid(format!(
            "--mmax {} exceeds the cap of {CAP_MOMENTS}",
            a.mmax
        )));
    }
    let dist = match a.kind.as_str() {
        "arcsine" => SpectralDistribution::ArcSine,
        "semicircle" => SpectralDistribution::Semicircle,
        "path" => path_spectrum(required("n", a.n, "path")?)?.to_distribution()?,
        other => SpectralDistribution::NamedDensity(other.parse::<DensityKind>().map_err(|_| {
            invalid(format!("unknown moment kind '{other}'; expected arcsine, semicircle, aa, wa, ww or path"))
        })?),
    };
    if a.kind != "path" {
        reject("n", a.n, &a.kind)?;
    }
    let format = a.output.format.unwrap_or(Format::Csv);
    let mut params = Params::from([
        ("command", "moments".to_string()),
        ("kind", a.kind.clone()),
        ("mmax", a.mmax.to_string()),
        ("format", format.name().to_string()),
    ]);
    size_params(&mut params, a.n, None, None);
    let text = render(
        &params,
        format,
        || dist.moment_table_csv(a.mmax),
        || {
            let rows: Vec<Value> = (0..=a.mmax)
                .map(|m| json!({"m": m, "moment": dist.moment(m).to_csv_field()}))
                .collect();
            json!({ "distribution": dist.to_string(), "rows": rows })
        },
    );
    Ok(Outcome {
        text,
        success: true,
        out: a.output.out,
    })
}

fn cmd_density(a: DensityArgs) -> Result<Outcome> {
    let kind: DensityKind = a.kind.parse()?;
    let csv = density_samples_csv(kind, a.grid)?;
    let format = a.output.format.unwrap_or(Format::Csv);
    let params = Params::from([
        ("command", "density".to_string()),
        ("kind", kind.to_string()),
        ("grid", a.grid.to_string()),
        ("format", format.name().to_string()),
    ]);
    let text = render(
        &params,
        format,
        || csv,
        || {
            let samples: Vec<Value> = (0..a.grid)
                .map(|i| {
                    let x = -4.0 + 8.0 * i as f64 / (a.grid - 1) as f64;
                    json!({"x": sig15(x), "density": sig15(density(kind, x))})
                })
                .collect();
            json!({ "samples": samples })
        },
    );
    Ok(Outcome {
        text,
        success: true,
        out: a.output.out,
    })
}

fn cmd_verify(a: VerifyArgs) -> Result<Outcome> {
    let suite: Suite = a.suite.parse()?;
    let mut opts = VerifyOptions {
        budget: budget(a.radius_budget),
        ..VerifyOptions::default()
    };
    if let Some(tol) = a.tol {
        if !(tol > 0.0 && tol.is_finite()) {
            return Err(invalid(format!(
                "--tol must be positive and finite, got {tol}"
            )));
        }
        opts.quad_tol = tol;
    }
    let format = a.output.format.unwrap_or(Format::Json);
    let params = Params::from([
        ("command", "verify".to_string()),
        ("suite", suite.to_string()),
        ("tol", format!("{:e}", opts.quad_tol)),
        ("radius-budget", opts.budget.0.to_string()),
        ("format", format.name().to_string()),
    ]);
    let report = run_suite(suite, &opts)?;
    let text = render(
        &params,
        format,
        || report.to_csv(),
        || serde_json::to_value(&report).unwrap(),
    );
    Ok(Outcome {
        text,
        success: report.pass,
        out: a.output.out,
    })
}

fn cmd_components(a: ComponentsArgs) -> Result<Outcome> {
    let pk: Graph = path_graph(a.k)?.into();
    let pl: Graph = path_graph(a.l)?.into();
    let format = a.output.format.unwrap_or(Format::Csv);
    let params = Params::from([
        ("command", "components".to_string()),
        ("k", a.k.to_string()),
        ("l", a.l.to_string()),
        ("format", format.name().to_string()),
    ]);
    let mut rows = Vec::new();
    for (product, g) in [
        ("kronecker", kronecker(&pk, &pl)),
        ("cartesian", cartesian(&pk, &pl)),
    ] {
        let g = g.as_finite().expect("products of paths are finite").clone();
        for (i, c) in connected_components(&g).iter().enumerate() {
            rows.push((product, i, c.len(), c.edge_count(), c.vertex(0).to_string()));
        }
    }
    let text = render(
        &params,
        format,
        || {
            let mut s = String::from("product,component,vertices,edges,smallest_vertex\n");
            for (p, i, v, e, first) in &rows {
                writeln!(s, "{p},{i},{v},{e},\"{first}\"").unwrap();
            }
            s
        },
        || {
            let rows: Vec<Value> = rows
                .iter()
                .map(|(p, i, v, e, first)| {
                    json!({"product": p, "component": i, "vertices": v, "edges": e, "smallest_vertex": first})
                })
                .collect();
            json!({ "components": rows })
        },
    );
    Ok(Outcome {
        text,
        success: true,
        out: a.output.out,
    })
}

fn cmd_iso(a: IsoArgs) -> Result<Outcome> {
    let map = match a.kind.as_str() {
        "square" => IsoMap::square_lattice(),
        "strip" => IsoMap::strip(required("n", a.n, "strip")?)?,
        "halfplane" => IsoMap::half_plane(),
        "diamond" => IsoMap::diamond(
            required("k", a.k, "diamond")?,
            required("l", a.l, "diamond")?,
        )?,
        "wedge" => IsoMap::wedge(),
        other => {
            return Err(invalid(format!(
                "unknown map '{other}'; expected square, strip, halfplane, diamond or wedge"
            )))
        }
    };
    if a.kind != "strip" {
        reject("n", a.n, &a.kind)?;
    }
    if a.kind != "diamond" {
        reject("k", a.k, &a.kind)?;
        reject("l", a.l, &a.kind)?;
    }
    let budget = budget(a.radius_budget);
    let format = a.output.format.unwrap_or(Format::Csv);
    let mut params = Params::from([
        ("command", "iso".to_string()),
        ("kind", a.kind.clone()),
        ("mmax", a.mmax.to_string()),
        ("radius-budget", budget.0.to_string()),
        ("format", format.name().to_string()),
    ]);
    size_params(&mut params, a.n, a.k, a.l);
    let r = verify_isomorphism(&map, a.mmax, budget)?;
    let violation = r
        .violation
        .as_ref()
        .map(|v| format!("{v:?}"))
        .unwrap_or_default();
    let text = render(
        &params,
        format,
        || {
            format!(
                "map,radius,source_vertices,target_vertices,source_edges,target_edges,isomorphism,violation\n\
                 \"{}\",{},{},{},{},{},{},\"{}\"\n",
                r.map,
                r.radius,
                r.source_vertices,
                r.target_vertices,
                r.source_edges,
                r.target_edges,
                r.is_isomorphism(),
                violation
            )
        },
        || {
            json!({
                "map": r.map, "radius": r.radius,
                "source_vertices": r.source_vertices, "target_vertices": r.target_vertices,
                "source_edges": r.source_edges, "target_edges": r.target_edges,
                "isomorphism": r.is_isomorphism(), "violation": violation,
            })
        },
    );
    Ok(Outcome {
        text,
        success: r.is_isomorphism(),
        out: a.output.out,
    })
}
