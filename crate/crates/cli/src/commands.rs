use std::fmt;
use std::path::Path;

use serde_json::{json, Value};

use pcd_density::closed_form::{self, Alternative, AltMeanParams};
use pcd_density::geom2d::{Point, ProximityParam, Triangle};
use pcd_density::inference::{
    empirical_power, mc_test, normal_test, null_moments, standardized_stat, CriticalSource, PowerConfig,
    PowerTable,
};
use pcd_density::mc_engine::{run_replicates, Geometry, McConfig};
use pcd_density::multitri::{multi_density, DelaunayMesh};
use pcd_density::patterns::{sample, sample_mesh, PatternSpec, RngSeed};
use pcd_density::pcd_graph::{build_pcd, Mode};

use crate::doc::{fmt_sig, round_sig, ResultDocument};
use crate::input::{parse_number, parse_triangle, read_points, write_points, ParseError};
use crate::plot;
use crate::reference::{self, PublishedTable};
use crate::{Cli, Command, DirectionArg, GeometryArgs, ModeArg, PatternArg, SourceArg, StatArg};

#[derive(Debug)]
pub enum CliError {
    Parse(ParseError),
    Core(pcd_density::Error),
    Io(String),
}

impl CliError {
    /// 3 for a degenerate statistic, 2 for everything else.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(e) if e.is_degenerate() => 3,
            _ => 2,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Parse(e) => write!(f, "{e}"),
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io(e) => f.write_str(e),
        }
    }
}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> Self {
        CliError::Parse(e)
    }
}

impl From<pcd_density::Error> for CliError {
    fn from(e: pcd_density::Error) -> Self {
        CliError::Core(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

type Result<T> = std::result::Result<T, CliError>;

/// First RNG stream of the null replicates behind `test --critical mc`.
const NULL_STREAM_BASE: u64 = 1 << 40;

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Parse(ParseError::new(msg))
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::And => Mode::And,
            ModeArg::Or => Mode::Or,
        }
    }
}

impl From<DirectionArg> for Alternative {
    fn from(d: DirectionArg) -> Self {
        match d {
            DirectionArg::Seg => Alternative::Segregation,
            DirectionArg::Assoc => Alternative::Association,
        }
    }
}

impl From<SourceArg> for CriticalSource {
    fn from(s: SourceArg) -> Self {
        match s {
            SourceArg::Asym => CriticalSource::Asymptotic,
            SourceArg::Mc => CriticalSource::MonteCarlo,
        }
    }
}

fn pt(p: &Point) -> Value {
    json!([p.x, p.y])
}

/// The geometry and its echo for the config block.
fn resolve_geometry(g: &GeometryArgs) -> Result<(Geometry, Value)> {
    if let Some(path) = &g.markers {
        let markers = read_points(path, None)?;
        let mesh = DelaunayMesh::new(markers)?;
        let echo = json!({
            "markers_file": path.display().to_string(),
            "markers": mesh.markers().len(),
            "triangles": mesh.len(),
        });
        return Ok((Geometry::Mesh(mesh), echo));
    }
    let tri = match &g.triangle {
        Some(s) => parse_triangle(s).map_err(usage)?,
        None => Triangle::equilateral(),
    };
    let echo = json!({ "triangle": tri.vertices().iter().map(pt).collect::<Vec<_>>() });
    Ok((Geometry::Triangle(tri), echo))
}

fn pattern_from(kind: PatternArg, eps: Option<f64>) -> Result<PatternSpec> {
    Ok(match (kind, eps) {
        (PatternArg::Null, None) => PatternSpec::Null,
        (PatternArg::Null, Some(_)) => return Err(usage("--eps does not apply to the null pattern")),
        (_, None) => return Err(usage("--eps is required for segregation and association")),
        (PatternArg::Seg, Some(e)) => PatternSpec::segregation(e)?,
        (PatternArg::Assoc, Some(e)) => PatternSpec::association(e)?,
    })
}

/// `seg:EPS` or `assoc:EPS`.
fn parse_alt(s: &str) -> Result<PatternSpec> {
    let (kind, eps) = s.split_once(':').ok_or_else(|| usage(format!("alternative {s:?} is not KIND:EPS")))?;
    let eps = parse_number(eps).map_err(usage)?;
    Ok(match kind.trim().to_ascii_lowercase().as_str() {
        "seg" | "segregation" => PatternSpec::segregation(eps)?,
        "assoc" | "association" => PatternSpec::association(eps)?,
        other => return Err(usage(format!("unknown alternative kind {other:?}, expected seg or assoc"))),
    })
}

struct Ctx<'a> {
    seed: u64,
    threads: Option<usize>,
    plot_dir: Option<&'a Path>,
}

impl Ctx<'_> {
    fn plot_dir(&self) -> Result<Option<&Path>> {
        if let Some(d) = self.plot_dir {
            std::fs::create_dir_all(d).map_err(|e| CliError::Io(format!("{}: {e}", d.display())))?;
        }
        Ok(self.plot_dir)
    }
}

pub fn run(cli: &Cli) -> Result<ResultDocument> {
    let ctx = Ctx { seed: cli.seed, threads: cli.threads, plot_dir: cli.emit_plot_data.as_deref() };
    match &cli.command {
        Command::Gen { n, pattern, eps, geometry, out } => gen(&ctx, *n, *pattern, *eps, geometry, out.as_deref()),
        Command::Density { points, geometry, r, n, domination } => density(&ctx, points, geometry, r, *n, *domination),
        Command::Asym { stat, mode, r, alt, eps } => asym(&ctx, *stat, (*mode).into(), *r, *alt, *eps),
        Command::Test { points, geometry, r, mode, direction, alpha, critical, n_mc, n } => test(
            &ctx,
            points,
            geometry,
            *r,
            (*mode).into(),
            (*direction).into(),
            *alpha,
            (*critical).into(),
            *n_mc,
            *n,
        ),
        Command::Power { r, mode, n, n_mc, alts, alpha, critical, geometry } => {
            power(&ctx, r, (*mode).into(), *n, *n_mc, alts, *alpha, (*critical).into(), geometry)
        }
        Command::Reproduce { table, n_mc } => reproduce(&ctx, table, *n_mc),
        Command::Delaunay { markers } => delaunay(&ctx, markers),
    }
}

fn gen(
    ctx: &Ctx,
    n: usize,
    kind: PatternArg,
    eps: Option<f64>,
    g: &GeometryArgs,
    out: Option<&Path>,
) -> Result<ResultDocument> {
    let pattern = pattern_from(kind, eps)?;
    let (geometry, gecho) = resolve_geometry(g)?;
    if n == 0 {
        return Err(usage("--n must be positive"));
    }
    let seed = RngSeed::new(ctx.seed, 0);
    let (points, tri_index): (Vec<Point>, Option<Vec<usize>>) = match &geometry {
        Geometry::Triangle(t) => (sample(t, &pattern, n, seed)?, None),
        Geometry::Mesh(m) => {
            let s = sample_mesh(m, &pattern, n, seed)?;
            (s.iter().map(|p| p.0).collect(), Some(s.iter().map(|p| p.1).collect()))
        }
    };
    if let Some(path) = out {
        write_points(path, &points).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    }
    let mut files = Vec::new();
    if let Some(dir) = ctx.plot_dir()? {
        let rows: Vec<(f64, f64)> = points.iter().map(|p| (p.x, p.y)).collect();
        plot::write_columns(&dir.join("points.tsv"), ("x", "y"), &rows)?;
        files.push("points.tsv".to_string());
    }
    let mut results = json!({
        "acceptance_probability": pattern.acceptance_probability(),
        "points": points.iter().map(pt).collect::<Vec<_>>(),
    });
    if let Some(idx) = tri_index {
        results["triangle_index"] = json!(idx);
    }
    if !files.is_empty() {
        results["plot_files"] = json!(files);
    }
    let config = json!({
        "geometry": gecho,
        "pattern": pattern,
        "n": n,
        "out": out.map(|p| p.display().to_string()),
    });
    Ok(ResultDocument::new("gen", ctx.seed, config, results))
}

fn density(
    ctx: &Ctx,
    points: &Path,
    g: &GeometryArgs,
    rs: &[ProximityParam],
    expect_n: Option<usize>,
    domination: bool,
) -> Result<ResultDocument> {
    let pts = read_points(points, expect_n)?;
    let (geometry, gecho) = resolve_geometry(g)?;
    let mut rows = Vec::with_capacity(rs.len());
    for &r in rs {
        match &geometry {
            Geometry::Triangle(t) => {
                let d = build_pcd(&pts, t, r)?;
                let s = d.densities()?;
                let mut row = json!({
                    "r": r,
                    "rho_arc": s.rho_arc,
                    "rho_and": s.rho_and,
                    "rho_or": s.rho_or,
                    "arcs": s.arcs,
                    "and_edges": s.and_edges,
                    "or_edges": s.or_edges,
                });
                if domination {
                    row["gamma"] = json!(d.domination_number()?);
                    row["gamma_and"] = json!(d.underlying(Mode::And).domination_number()?);
                    row["gamma_or"] = json!(d.underlying(Mode::Or).domination_number()?);
                }
                rows.push(row);
            }
            Geometry::Mesh(m) => {
                if domination {
                    return Err(usage("--domination is only available for a single triangle"));
                }
                let md = multi_density(&pts, m, r)?;
                rows.push(json!({
                    "r": r,
                    "n_t": md.n_t,
                    "and": md.and,
                    "or": md.or,
                    "per_triangle": md.per_triangle,
                }));
            }
        }
    }
    let config = json!({
        "points_file": points.display().to_string(),
        "n": pts.len(),
        "geometry": gecho,
        "r": rs,
    });
    Ok(ResultDocument::new("density", ctx.seed, config, json!({ "densities": rows })))
}

fn asym(
    ctx: &Ctx,
    stat: StatArg,
    mode: Mode,
    r: ProximityParam,
    alt: Option<DirectionArg>,
    eps: Option<f64>,
) -> Result<ResultDocument> {
    let need_alt = || alt.map(Alternative::from).ok_or_else(|| usage("--alt is required for this statistic"));
    let (name, value) = match stat {
        StatArg::Mu => ("mu", closed_form::mu_null(mode, r)),
        StatArg::VarH => ("var_h", closed_form::var_h_null(mode, r)),
        StatArg::Nu => ("nu", closed_form::nu_null(mode, r)),
        StatArg::FourNu => ("four_nu", 4.0 * closed_form::nu_null(mode, r)),
        StatArg::MuAlt => {
            let eps = eps.ok_or_else(|| usage("--eps is required for mu-alt"))?;
            ("mu_alt", closed_form::mu_alt(&AltMeanParams { mode, alt: need_alt()?, r, eps })?)
        }
        StatArg::Pae => ("pae", closed_form::pae(mode, need_alt()?, r)),
    };
    let config = json!({
        "stat": name,
        "mode": mode,
        "r": r,
        "alt": alt.map(Alternative::from),
        "eps": eps,
    });
    let results = json!({
        "value": round_sig(value, 12),
        "text": fmt_sig(value, 12),
    });
    Ok(ResultDocument::new("asym", ctx.seed, config, results))
}

/// Density used as the test statistic: `rho` on a triangle, `rho_I` on a mesh.
fn observed_density(geometry: &Geometry, pts: &[Point], r: ProximityParam, mode: Mode) -> Result<f64> {
    Ok(match geometry {
        Geometry::Triangle(t) => build_pcd(pts, t, r)?.densities()?.rho(mode),
        Geometry::Mesh(m) => multi_density(pts, m, r)?.get(mode).rho_i,
    })
}

#[allow(clippy::too_many_arguments)]
fn test(
    ctx: &Ctx,
    points: &Path,
    g: &GeometryArgs,
    r: ProximityParam,
    mode: Mode,
    direction: Alternative,
    alpha: f64,
    source: CriticalSource,
    n_mc: u64,
    expect_n: Option<usize>,
) -> Result<ResultDocument> {
    let pts = read_points(points, expect_n)?;
    let (geometry, gecho) = resolve_geometry(g)?;
    let n = pts.len();
    let rho = observed_density(&geometry, &pts, r, mode)?;
    let (mu, four_nu) = null_moments(&geometry, mode, r)?;
    let mut results = json!({ "rho": rho, "mu": mu, "four_nu": four_nu });
    let outcome = match source {
        CriticalSource::Asymptotic => {
            let z = standardized_stat(rho, mu, four_nu, n)?;
            normal_test(z, direction, alpha)?
        }
        CriticalSource::MonteCarlo => {
            let mut cfg = McConfig::new(PatternSpec::Null, n, vec![r], n_mc, ctx.seed);
            cfg.geometry = geometry.clone();
            cfg.threads = ctx.threads;
            // `gen` draws from stream 0; keep the null replicates clear of it
            cfg.stream_base = NULL_STREAM_BASE;
            let null: Vec<f64> = run_replicates(&cfg)?.iter().map(|rep| rep.densities[0].rho(mode)).collect();
            if let Some(dir) = ctx.plot_dir()? {
                results["plot_files"] = json!(plot::write_density_plots(dir, "null", &null)?);
            }
            mc_test(rho, &null, direction, alpha)?
        }
    };
    results["test"] = serde_json::to_value(outcome).expect("plain data");
    let config = json!({
        "points_file": points.display().to_string(),
        "n": n,
        "geometry": gecho,
        "r": r,
        "mode": mode,
        "direction": direction,
        "alpha": alpha,
        "critical": source,
        "n_mc": (source == CriticalSource::MonteCarlo).then_some(n_mc),
    });
    Ok(ResultDocument::new("test", ctx.seed, config, results))
}

fn alt_label(p: &PatternSpec) -> String {
    match p {
        PatternSpec::Null => "null".into(),
        PatternSpec::Segregation { eps } => format!("seg_{eps:.6}"),
        PatternSpec::Association { eps } => format!("assoc_{eps:.6}"),
    }
}

/// Null and alternative density samples for KDE output. Uses the same
/// streams as the power run, so the files describe the same replicates.
fn power_plots(ctx: &Ctx, dir: &Path, cfg: &PowerConfig, table: &PowerTable) -> Result<Vec<String>> {
    let mut files = Vec::new();
    let patterns: Vec<PatternSpec> = std::iter::once(PatternSpec::Null).chain(cfg.alternatives.iter().copied()).collect();
    for (slot, p) in patterns.iter().enumerate() {
        let mut mc = McConfig::new(*p, cfg.n, cfg.r.clone(), cfg.n_mc, cfg.seed);
        mc.geometry = cfg.geometry.clone();
        mc.stream_base = pcd_density::inference::pattern_stream_base(slot as u64);
        mc.threads = ctx.threads;
        let reps = run_replicates(&mc)?;
        for (k, r) in cfg.r.iter().enumerate() {
            let v: Vec<f64> = reps.iter().map(|rep| rep.densities[k].rho(cfg.mode)).collect();
            files.extend(plot::write_density_plots(dir, &format!("{}_{}_r{r}", cfg.mode, alt_label(p)), &v)?);
        }
    }
    for (j, p) in cfg.alternatives.iter().enumerate() {
        let curve: Vec<(f64, f64)> = table
            .rows
            .iter()
            .filter_map(|row| row.beta[j].beta_hat.map(|b| (row.r.value(), b)))
            .collect();
        let name = format!("{}_{}_power.tsv", cfg.mode, alt_label(p));
        plot::write_columns(&dir.join(&name), ("r", "power"), &curve)?;
        files.push(name);
    }
    Ok(files)
}

#[allow(clippy::too_many_arguments)]
fn power(
    ctx: &Ctx,
    rs: &[ProximityParam],
    mode: Mode,
    n: usize,
    n_mc: u64,
    alts: &[String],
    alpha: f64,
    source: CriticalSource,
    g: &GeometryArgs,
) -> Result<ResultDocument> {
    let alternatives: Vec<PatternSpec> = alts.iter().map(|s| parse_alt(s)).collect::<Result<_>>()?;
    let (geometry, gecho) = resolve_geometry(g)?;
    let cfg = PowerConfig {
        geometry,
        r: rs.to_vec(),
        mode,
        n,
        n_mc,
        alternatives,
        alpha,
        source,
        seed: ctx.seed,
        threads: ctx.threads,
    };
    let table = empirical_power(&cfg)?;
    let mut results = serde_json::to_value(&table).expect("plain data");
    if let Some(dir) = ctx.plot_dir()? {
        results["plot_files"] = json!(power_plots(ctx, dir, &cfg, &table)?);
    }
    let config = json!({
        "geometry": gecho,
        "r": rs,
        "mode": mode,
        "n": n,
        "n_mc": n_mc,
        "alternatives": cfg.alternatives,
        "alpha": alpha,
        "critical": source,
    });
    Ok(ResultDocument::new("power", ctx.seed, config, results))
}

fn cell(quantity: &str, r: &str, printed: f64, estimate: Option<f64>, tolerance: f64) -> Value {
    json!({
        "quantity": quantity,
        "r": r,
        "printed": printed,
        "estimate": estimate,
        "tolerance": tolerance,
        "within": estimate.map(|e| (e - printed).abs() <= tolerance + 1e-12),
    })
}

fn reproduce(ctx: &Ctx, id: &str, n_mc: Option<u64>) -> Result<ResultDocument> {
    let t: &PublishedTable =
        reference::find(id).ok_or_else(|| usage(format!("unknown table {id:?}, expected T1, T2, T3 or T4")))?;
    let n_mc = n_mc.unwrap_or(t.n_mc);
    let rs: Vec<ProximityParam> = t.r.iter().map(|s| crate::input::parse_r(s).expect("valid grid")).collect();
    let eps: Vec<f64> = t.eps.iter().map(|s| parse_number(s).expect("valid eps")).collect();
    let alternatives: Vec<PatternSpec> = eps
        .iter()
        .map(|&e| match t.direction {
            Alternative::Segregation => PatternSpec::segregation(e),
            Alternative::Association => PatternSpec::association(e),
        })
        .collect::<pcd_density::Result<_>>()?;
    let grid_step = 2.0 / (reference::N * (reference::N - 1)) as f64;
    let mut blocks = Vec::new();
    let mut files = Vec::new();
    let mut within = (0usize, 0usize);
    for b in &t.blocks {
        let cfg = PowerConfig {
            geometry: Geometry::standard(),
            r: rs.clone(),
            mode: b.mode,
            n: reference::N,
            n_mc,
            alternatives: alternatives.clone(),
            alpha: reference::ALPHA,
            source: t.source,
            seed: ctx.seed,
            threads: ctx.threads,
        };
        let table = empirical_power(&cfg)?;
        let mut cells = Vec::new();
        for (k, row) in table.rows.iter().enumerate() {
            let r = t.r[k];
            let (crit, alpha_hat) = match t.direction {
                Alternative::Segregation => (row.critical_seg, row.alpha_hat_seg),
                Alternative::Association => (row.critical_assoc, row.alpha_hat_assoc),
            };
            if let Some(c45) = b.critical_45ths {
                cells.push(cell("critical", r, c45[k] as f64 * grid_step, crit, 2.0 * grid_step));
            }
            let p = b.alpha_hat[k];
            cells.push(cell("alpha_hat", r, p, alpha_hat, reference::rate_tolerance(p, n_mc, t.n_mc)));
            for j in 0..2 {
                let p = b.beta_hat[j][k];
                let q = format!("beta_hat({})", t.eps[j]);
                cells.push(cell(&q, r, p, row.beta[j].beta_hat, reference::rate_tolerance(p, n_mc, t.n_mc)));
            }
        }
        for c in &cells {
            if let Some(w) = c["within"].as_bool() {
                within.1 += 1;
                within.0 += w as usize;
            }
        }
        if let Some(dir) = ctx.plot_dir()? {
            std::fs::create_dir_all(dir)?;
            for (j, p) in cfg.alternatives.iter().enumerate() {
                let ours: Vec<(f64, f64)> =
                    table.rows.iter().filter_map(|row| row.beta[j].beta_hat.map(|v| (row.r.value(), v))).collect();
                let printed: Vec<(f64, f64)> = rs.iter().zip(b.beta_hat[j]).map(|(r, &v)| (r.value(), v)).collect();
                let stem = format!("{}_{}_{}", t.id, b.mode, alt_label(p));
                plot::write_columns(&dir.join(format!("{stem}_power.tsv")), ("r", "power"), &ours)?;
                plot::write_columns(&dir.join(format!("{stem}_printed.tsv")), ("r", "power"), &printed)?;
                files.push(format!("{stem}_power.tsv"));
                files.push(format!("{stem}_printed.tsv"));
            }
        }
        blocks.push(json!({ "mode": b.mode, "table": table, "comparison": cells }));
    }
    let mut results = json!({
        "blocks": blocks,
        "cells_within_tolerance": within.0,
        "cells_compared": within.1,
    });
    if !files.is_empty() {
        results["plot_files"] = json!(files);
    }
    let config = json!({
        "table": t.id,
        "n": reference::N,
        "alpha": reference::ALPHA,
        "n_mc": n_mc,
        "published_n_mc": t.n_mc,
        "critical": t.source,
        "r": rs,
        "alternatives": alternatives,
        "tolerances": "critical values: two grid steps (2/45 each); rates: three standard errors of a difference of two binomial proportions",
    });
    Ok(ResultDocument::new("reproduce", ctx.seed, config, results))
}

fn delaunay(ctx: &Ctx, markers: &Path) -> Result<ResultDocument> {
    let pts = read_points(markers, None)?;
    let mesh = DelaunayMesh::new(pts)?;
    let (s2, s3) = mesh.weight_sums();
    let mut results = json!({
        "triangles": mesh.len(),
        "faces": mesh.faces(),
        "weights": mesh.weights(),
        "hull_area": mesh.hull_area(),
        "sum_w2": s2,
        "sum_w3": s3,
    });
    if let Some(dir) = ctx.plot_dir()? {
        // closed polygons separated by blank lines
        let mut s = String::from("x\ty\n");
        for t in mesh.triangles() {
            let v = t.vertices();
            for p in v.iter().chain(std::iter::once(&v[0])) {
                s.push_str(&format!("{}\t{}\n", p.x, p.y));
            }
            s.push('\n');
        }
        std::fs::write(dir.join("triangles.tsv"), s)?;
        results["plot_files"] = json!(["triangles.tsv"]);
    }
    let config = json!({
        "markers_file": markers.display().to_string(),
        "markers": mesh.markers().iter().map(pt).collect::<Vec<_>>(),
    });
    Ok(ResultDocument::new("delaunay", ctx.seed, config, results))
}
