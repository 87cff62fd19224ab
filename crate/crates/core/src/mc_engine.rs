//! Seed-deterministic Monte Carlo replication.
//!
//! Replicate `k` draws from the ChaCha stream `stream_base + k` of the master
//! seed, so results do not depend on how rayon schedules the work.

use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom2d::{in_proximity_bary, Bary, Point, ProximityParam, Triangle};
use crate::multitri::{multi_density_assigned, DelaunayMesh};
use crate::patterns::{sample, sample_bary, sample_mesh, PatternSpec, RngSeed};
use crate::pcd_graph::{barycentrics, pair_counts, DensitySummary, Mode};

/// Where the points live.
#[derive(Debug, Clone)]
pub enum Geometry {
    Triangle(Triangle),
    Mesh(DelaunayMesh),
}

impl Geometry {
    pub fn standard() -> Self {
        Geometry::Triangle(Triangle::equilateral())
    }
}

#[derive(Debug, Clone)]
pub struct McConfig {
    pub geometry: Geometry,
    pub pattern: PatternSpec,
    pub n: usize,
    pub r: Vec<ProximityParam>,
    pub n_mc: u64,
    pub seed: u64,
    /// Offset added to the replicate index to get the RNG stream.
    pub stream_base: u64,
    /// Worker count; `None` uses the global rayon pool.
    pub threads: Option<usize>,
    /// Append-only JSONL record; existing replicates are reused.
    pub checkpoint: Option<PathBuf>,
}

impl McConfig {
    pub fn new(pattern: PatternSpec, n: usize, r: Vec<ProximityParam>, n_mc: u64, seed: u64) -> Self {
        McConfig {
            geometry: Geometry::standard(),
            pattern,
            n,
            r,
            n_mc,
            seed,
            stream_base: 0,
            threads: None,
            checkpoint: None,
        }
    }

    fn validate(&self) -> Result<()> {
        self.pattern.validate()?;
        if self.n < 2 {
            return Err(Error::domain(format!("need n >= 2 points per replicate, got {}", self.n)));
        }
        if self.r.is_empty() {
            return Err(Error::domain("empty r list"));
        }
        Ok(())
    }
}

/// Densities of one replicate at one value of `r`.
///
/// On a mesh `rho_and` and `rho_or` are the first multi-triangle version,
/// `2|E| / (n(n-1))`, and `rho_arc` is `|A| / (n(n-1))`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RDensity {
    pub r: ProximityParam,
    pub rho_arc: f64,
    pub rho_and: f64,
    pub rho_or: f64,
}

impl RDensity {
    pub fn rho(&self, mode: Mode) -> f64 {
        match mode {
            Mode::And => self.rho_and,
            Mode::Or => self.rho_or,
        }
    }

    fn from_summary(r: ProximityParam, d: &DensitySummary) -> Self {
        RDensity { r, rho_arc: d.rho_arc, rho_and: d.rho_and, rho_or: d.rho_or }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReplicateResult {
    pub index: u64,
    pub pattern: PatternSpec,
    pub densities: Vec<RDensity>,
}

fn one_replicate(cfg: &McConfig, index: u64) -> Result<ReplicateResult> {
    let seed = RngSeed::new(cfg.seed, cfg.stream_base + index);
    let densities = match &cfg.geometry {
        Geometry::Triangle(tri) => {
            let points = sample(tri, &cfg.pattern, cfg.n, seed)?;
            let b = barycentrics(&points, tri)?;
            cfg.r
                .iter()
                .map(|&r| {
                    let (arcs, and, or) = pair_counts(&b, r);
                    let d = DensitySummary::from_counts(cfg.n, arcs, and, or)?;
                    Ok(RDensity::from_summary(r, &d))
                })
                .collect::<Result<Vec<_>>>()?
        }
        Geometry::Mesh(mesh) => {
            let s = sample_mesh(mesh, &cfg.pattern, cfg.n, seed)?;
            let (points, idx): (Vec<Point>, Vec<usize>) = s.into_iter().unzip();
            let pairs = (cfg.n * (cfg.n - 1)) as f64;
            cfg.r
                .iter()
                .map(|&r| {
                    let md = multi_density_assigned(&points, &idx, mesh, r)?;
                    let arcs: u64 = md.per_triangle.iter().map(|c| c.arcs).sum();
                    Ok(RDensity { r, rho_arc: arcs as f64 / pairs, rho_and: md.and.rho_i, rho_or: md.or.rho_i })
                })
                .collect::<Result<Vec<_>>>()?
        }
    };
    Ok(ReplicateResult { index, pattern: cfg.pattern, densities })
}

fn run_indices(cfg: &McConfig, idx: &[u64]) -> Result<Vec<ReplicateResult>> {
    idx.par_iter()
        .map(|&k| one_replicate(cfg, k).map_err(|e| Error::Replicate { index: k, source: Box::new(e) }))
        .collect()
}

/// Runs `cfg.n_mc` replicates; the output is ordered by index.
pub fn run_replicates(cfg: &McConfig) -> Result<Vec<ReplicateResult>> {
    cfg.validate()?;
    let work = || match &cfg.checkpoint {
        None => run_indices(cfg, &(0..cfg.n_mc).collect::<Vec<_>>()),
        Some(path) => run_with_checkpoint(cfg, path),
    };
    match cfg.threads {
        None => work(),
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t.max(1))
            .build()
            .map_err(|e| Error::Capability(e.to_string()))?
            .install(work),
    }
}

const CHECKPOINT_CHUNK: usize = 512;

#[derive(Serialize, Deserialize, PartialEq)]
struct CheckpointHeader {
    seed: u64,
    stream_base: u64,
    n: usize,
    pattern: PatternSpec,
    r: Vec<ProximityParam>,
}

fn run_with_checkpoint(cfg: &McConfig, path: &Path) -> Result<Vec<ReplicateResult>> {
    let header = CheckpointHeader {
        seed: cfg.seed,
        stream_base: cfg.stream_base,
        n: cfg.n,
        pattern: cfg.pattern,
        r: cfg.r.clone(),
    };
    let mut done: Vec<Option<ReplicateResult>> = vec![None; cfg.n_mc as usize];
    let fresh = !path.exists() || std::fs::metadata(path)?.len() == 0;
    if !fresh {
        let mut lines = BufReader::new(File::open(path)?).lines();
        let first = lines.next().transpose()?.unwrap_or_default();
        let stored: CheckpointHeader = serde_json::from_str(&first)
            .map_err(|e| Error::Io(format!("{}: bad checkpoint header: {e}", path.display())))?;
        if stored != header {
            return Err(Error::Io(format!("{}: checkpoint was written for a different configuration", path.display())));
        }
        for (no, line) in lines.enumerate() {
            let line = line?;
            // a torn final line from an interrupted run is dropped
            let Ok(rep) = serde_json::from_str::<ReplicateResult>(&line) else {
                eprintln!("{}:{}: skipping unreadable record", path.display(), no + 2);
                continue;
            };
            if let Some(slot) = done.get_mut(rep.index as usize) {
                *slot = Some(rep);
            }
        }
    }
    let torn = !fresh && {
        let bytes = std::fs::read(path)?;
        bytes.last() != Some(&b'\n')
    };
    let mut out = BufWriter::new(OpenOptions::new().create(true).append(true).open(path)?);
    if torn {
        out.write_all(b"\n")?;
    }
    if fresh {
        serde_json::to_writer(&mut out, &header).map_err(|e| Error::Io(e.to_string()))?;
        out.write_all(b"\n")?;
    }
    let todo: Vec<u64> = (0..cfg.n_mc).filter(|&k| done[k as usize].is_none()).collect();
    for chunk in todo.chunks(CHECKPOINT_CHUNK) {
        for rep in run_indices(cfg, chunk)? {
            serde_json::to_writer(&mut out, &rep).map_err(|e| Error::Io(e.to_string()))?;
            out.write_all(b"\n")?;
            let k = rep.index as usize;
            done[k] = Some(rep);
        }
        out.flush()?;
    }
    Ok(done.into_iter().map(|r| r.expect("all replicates filled")).collect())
}

/// Sample moments of a density across replicates.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DensityMoments {
    pub count: usize,
    pub mean: f64,
    pub variance: f64,
    pub se_mean: f64,
}

/// Mean and unbiased variance of `rho(mode)` at the `r_index`-th r value.
pub fn estimate_moments(results: &[ReplicateResult], r_index: usize, mode: Mode) -> Result<DensityMoments> {
    let v: Vec<f64> = results
        .iter()
        .map(|rep| {
            rep.densities
                .get(r_index)
                .map(|d| d.rho(mode))
                .ok_or_else(|| Error::domain(format!("replicate {} has no r index {r_index}", rep.index)))
        })
        .collect::<Result<_>>()?;
    sample_moments(&v)
}

pub fn sample_moments(v: &[f64]) -> Result<DensityMoments> {
    let count = v.len();
    if count < 2 {
        return Err(Error::domain(format!("need at least 2 values, got {count}")));
    }
    let mean = v.iter().sum::<f64>() / count as f64;
    let variance = v.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (count - 1) as f64;
    Ok(DensityMoments { count, mean, variance, se_mean: (variance / count as f64).sqrt() })
}

/// Direct estimate of `nu = Cov[h_12, h_13]` from independent triples.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NuEstimate {
    pub triples: u64,
    pub mu_hat: f64,
    pub nu_hat: f64,
    pub se: f64,
}

const TRIPLE_CHUNK: u64 = 1 << 14;

/// Samples `triples` independent triples `(X1, X2, X3)` from `pattern` and
/// estimates `nu` as the mean of `h12 h13` minus the squared mean kernel.
/// The standard error comes from the linearisation
/// `h12 h13 - mu (h12 + h13)`.
pub fn triple_nu(mode: Mode, r: ProximityParam, pattern: &PatternSpec, triples: u64, seed: u64) -> Result<NuEstimate> {
    if triples < 2 {
        return Err(Error::domain("need at least 2 triples"));
    }
    pattern.validate()?;
    let h = |a: &Bary, b: &Bary| {
        let ab = in_proximity_bary(r, a, b);
        let ba = in_proximity_bary(r, b, a);
        match mode {
            Mode::And => (ab && ba) as u8 as f64,
            Mode::Or => (ab || ba) as u8 as f64,
        }
    };
    let chunks = triples.div_ceil(TRIPLE_CHUNK);
    // per chunk: sum h12 + h13, sum h12 h13, and the second moments needed
    // for the standard error
    let sums: Vec<[f64; 6]> = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut rng = RngSeed::new(seed, c).rng();
            let m = TRIPLE_CHUNK.min(triples - c * TRIPLE_CHUNK) as usize;
            let (b, _) = sample_bary(pattern, 3 * m, &mut rng)?;
            let mut s = [0.0; 6];
            for t in b.chunks_exact(3) {
                let h12 = h(&t[0], &t[1]);
                let h13 = h(&t[0], &t[2]);
                let p = h12 * h13;
                let q = h12 + h13;
                s[0] += q;
                s[1] += p;
                s[2] += p * p;
                s[3] += p * q;
                s[4] += q * q;
                s[5] += 1.0;
            }
            Ok(s)
        })
        .collect::<Result<_>>()?;
    let s = sums.iter().fold([0.0; 6], |mut a, b| {
        for i in 0..6 {
            a[i] += b[i];
        }
        a
    });
    let n = s[5];
    let mu = s[0] / (2.0 * n);
    let pbar = s[1] / n;
    let nu_hat = pbar - mu * mu;
    // variance of psi = p - mu q
    let qbar = s[0] / n;
    let var_p = s[2] / n - pbar * pbar;
    let cov_pq = s[3] / n - pbar * qbar;
    let var_q = s[4] / n - qbar * qbar;
    let var_psi = (var_p - 2.0 * mu * cov_pq + mu * mu * var_q).max(0.0);
    Ok(NuEstimate { triples, mu_hat: mu, nu_hat, se: (var_psi / n).sqrt() })
}
