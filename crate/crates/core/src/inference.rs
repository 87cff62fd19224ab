//! Test statistics, critical values, p-values and empirical power.

use serde::{Deserialize, Serialize};

use crate::closed_form::{multi_tri_moments_i, mu_null, nu_null, Alternative};
use crate::error::{Error, Result};
use crate::geom2d::ProximityParam;
use crate::mc_engine::{run_replicates, Geometry, McConfig, ReplicateResult};
use crate::normal;
use crate::patterns::PatternSpec;
use crate::pcd_graph::Mode;

pub mod gof;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CriticalSource {
    Asymptotic,
    MonteCarlo,
}

impl std::str::FromStr for CriticalSource {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "asym" | "asymptotic" | "normal" => Ok(CriticalSource::Asymptotic),
            "mc" | "monte-carlo" | "montecarlo" | "monte_carlo" => Ok(CriticalSource::MonteCarlo),
            _ => Err(Error::domain(format!("unknown critical-value source {s:?} (asymptotic | mc)"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TestOutcome {
    pub statistic: f64,
    pub p_value: f64,
    pub direction: Alternative,
    pub source: CriticalSource,
    pub critical: f64,
    pub reject: bool,
    pub alpha: f64,
}

fn check_alpha(alpha: f64) -> Result<()> {
    if alpha > 0.0 && alpha < 1.0 {
        Ok(())
    } else {
        Err(Error::domain(format!("alpha = {alpha} is outside (0, 1)")))
    }
}

/// `sqrt(n) (rho - mu) / sqrt(four_nu)`.
pub fn standardized_stat(rho: f64, mu: f64, four_nu: f64, n: usize) -> Result<f64> {
    if !(four_nu > 0.0) {
        return Err(Error::Degenerate(format!(
            "asymptotic variance 4 nu = {four_nu:e} is not positive; the normal approximation does not apply"
        )));
    }
    if n < 2 {
        return Err(Error::domain(format!("need n >= 2, got {n}")));
    }
    Ok((n as f64).sqrt() * (rho - mu) / four_nu.sqrt())
}

/// One-sided normal test: large values indicate segregation, small values
/// association.
pub fn normal_test(stat: f64, direction: Alternative, alpha: f64) -> Result<TestOutcome> {
    check_alpha(alpha)?;
    let z = normal::quantile(1.0 - alpha);
    let (p_value, critical, reject) = match direction {
        Alternative::Segregation => (normal::sf(stat), z, stat > z),
        Alternative::Association => (normal::cdf(stat), -z, stat < -z),
    };
    Ok(TestOutcome { statistic: stat, p_value, direction, source: CriticalSource::Asymptotic, critical, reject, alpha })
}

/// Finite-sample variance of the density under the null:
/// `(2 Var[h] + 4 (n - 2) nu) / (n (n - 1))`.
pub fn finite_n_variance(var_h: f64, nu: f64, n: usize) -> f64 {
    let n = n as f64;
    (2.0 * var_h + 4.0 * (n - 2.0) * nu) / (n * (n - 1.0))
}

/// Null mean and asymptotic variance `4 nu` of the density used as test
/// statistic. On a mesh these are the weighted versions for `rho_I`.
pub fn null_moments(geometry: &Geometry, mode: Mode, r: ProximityParam) -> Result<(f64, f64)> {
    let (mu, nu) = (mu_null(mode, r), nu_null(mode, r));
    match geometry {
        Geometry::Triangle(_) => Ok((mu, 4.0 * nu)),
        Geometry::Mesh(m) => {
            let (mt, nt) = multi_tri_moments_i(mu, nu, m.weights())?;
            Ok((mt, 4.0 * nt))
        }
    }
}

/// Order statistic `x_(ceil(q N))` of sorted data, 1-based.
pub fn order_quantile(sorted: &[f64], q: f64) -> Result<f64> {
    if sorted.is_empty() {
        return Err(Error::domain("no data"));
    }
    if !(q > 0.0 && q <= 1.0) {
        return Err(Error::domain(format!("quantile level {q} is outside (0, 1]")));
    }
    let k = ((q * sorted.len() as f64).ceil() as usize).clamp(1, sorted.len());
    Ok(sorted[k - 1])
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CriticalValues {
    /// Reject against segregation when the density exceeds this.
    pub seg: f64,
    /// Reject against association when the density falls below this.
    pub assoc: f64,
    pub alpha: f64,
    pub n_mc: usize,
}

impl CriticalValues {
    pub fn get(&self, direction: Alternative) -> f64 {
        match direction {
            Alternative::Segregation => self.seg,
            Alternative::Association => self.assoc,
        }
    }

    pub fn rejects(&self, rho: f64, direction: Alternative) -> bool {
        match direction {
            Alternative::Segregation => rho > self.seg,
            Alternative::Association => rho < self.assoc,
        }
    }
}

pub const MIN_MC_REPLICATES: u64 = 100;

/// Upper and lower `alpha` critical values from null replicates.
pub fn critical_values_from(null: &[f64], alpha: f64) -> Result<CriticalValues> {
    check_alpha(alpha)?;
    if (null.len() as u64) < MIN_MC_REPLICATES {
        return Err(Error::domain(format!("need at least {MIN_MC_REPLICATES} null replicates, got {}", null.len())));
    }
    let mut v = null.to_vec();
    v.sort_by(f64::total_cmp);
    Ok(CriticalValues {
        seg: order_quantile(&v, 1.0 - alpha)?,
        assoc: order_quantile(&v, alpha)?,
        alpha,
        n_mc: v.len(),
    })
}

/// Monte Carlo critical values of the density under the null.
pub fn mc_critical_values(
    geometry: &Geometry,
    r: ProximityParam,
    mode: Mode,
    n: usize,
    n_mc: u64,
    alpha: f64,
    seed: u64,
) -> Result<CriticalValues> {
    if n_mc < MIN_MC_REPLICATES {
        return Err(Error::domain(format!("need N_mc >= {MIN_MC_REPLICATES}, got {n_mc}")));
    }
    let mut cfg = McConfig::new(PatternSpec::Null, n, vec![r], n_mc, seed);
    cfg.geometry = geometry.clone();
    let null: Vec<f64> = run_replicates(&cfg)?.iter().map(|rep| rep.densities[0].rho(mode)).collect();
    critical_values_from(&null, alpha)
}

/// Monte Carlo test of an observed density against null replicates.
///
/// The p-value is `(1 + #{null at least as extreme}) / (N + 1)`; the decision
/// uses the order-statistic critical value.
pub fn mc_test(rho: f64, null: &[f64], direction: Alternative, alpha: f64) -> Result<TestOutcome> {
    let cv = critical_values_from(null, alpha)?;
    let extreme = null
        .iter()
        .filter(|&&x| match direction {
            Alternative::Segregation => x >= rho,
            Alternative::Association => x <= rho,
        })
        .count();
    Ok(TestOutcome {
        statistic: rho,
        p_value: (1 + extreme) as f64 / (null.len() + 1) as f64,
        direction,
        source: CriticalSource::MonteCarlo,
        critical: cv.get(direction),
        reject: cv.rejects(rho, direction),
        alpha,
    })
}

#[derive(Debug, Clone)]
pub struct PowerConfig {
    pub geometry: Geometry,
    pub r: Vec<ProximityParam>,
    pub mode: Mode,
    pub n: usize,
    pub n_mc: u64,
    /// Alternatives to estimate power under; segregation patterns are tested
    /// in the segregation direction and association patterns in the other.
    pub alternatives: Vec<PatternSpec>,
    pub alpha: f64,
    pub source: CriticalSource,
    pub seed: u64,
    pub threads: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AltPower {
    pub pattern: PatternSpec,
    pub direction: Alternative,
    pub beta_hat: Option<f64>,
}

/// One column of a power table: a single value of `r`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PowerEstimate {
    pub r: ProximityParam,
    /// Density-scale critical values.
    pub critical_seg: Option<f64>,
    pub critical_assoc: Option<f64>,
    pub alpha_hat_seg: Option<f64>,
    pub alpha_hat_assoc: Option<f64>,
    pub beta: Vec<AltPower>,
    pub n_mc: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PowerTable {
    pub mode: Mode,
    pub n: usize,
    pub n_mc: u64,
    pub alpha: f64,
    pub source: CriticalSource,
    pub rows: Vec<PowerEstimate>,
}

/// Stream offset for the `slot`-th pattern of a power run, so null and
/// alternative replicates never share a stream.
pub fn pattern_stream_base(slot: u64) -> u64 {
    slot << 40
}

fn direction_of(p: &PatternSpec) -> Result<Alternative> {
    match p {
        PatternSpec::Segregation { .. } => Ok(Alternative::Segregation),
        PatternSpec::Association { .. } => Ok(Alternative::Association),
        PatternSpec::Null => Err(Error::domain("alternatives must be segregation or association patterns")),
    }
}

fn column(reps: &[ReplicateResult], k: usize, mode: Mode) -> Vec<f64> {
    reps.iter().map(|rep| rep.densities[k].rho(mode)).collect()
}

fn fraction(v: &[f64], pred: impl Fn(f64) -> bool) -> f64 {
    v.iter().filter(|&&x| pred(x)).count() as f64 / v.len() as f64
}

/// Empirical size and power for every `r` in the configuration.
///
/// All values of `r` share the same simulated point sets.
pub fn empirical_power(cfg: &PowerConfig) -> Result<PowerTable> {
    check_alpha(cfg.alpha)?;
    if cfg.source == CriticalSource::MonteCarlo && cfg.n_mc < MIN_MC_REPLICATES {
        return Err(Error::domain(format!("need N_mc >= {MIN_MC_REPLICATES}, got {}", cfg.n_mc)));
    }
    if cfg.n_mc == 0 {
        return Err(Error::domain("need N_mc >= 1"));
    }
    let dirs: Vec<Alternative> = cfg.alternatives.iter().map(direction_of).collect::<Result<_>>()?;
    let run = |pattern: PatternSpec, slot: u64| {
        let mut mc = McConfig::new(pattern, cfg.n, cfg.r.clone(), cfg.n_mc, cfg.seed);
        mc.geometry = cfg.geometry.clone();
        mc.stream_base = pattern_stream_base(slot);
        mc.threads = cfg.threads;
        run_replicates(&mc)
    };
    let null = run(PatternSpec::Null, 0)?;
    let alts: Vec<Vec<ReplicateResult>> =
        cfg.alternatives.iter().enumerate().map(|(j, p)| run(*p, j as u64 + 1)).collect::<Result<_>>()?;

    let z = normal::quantile(1.0 - cfg.alpha);
    let mut rows = Vec::with_capacity(cfg.r.len());
    for (k, &r) in cfg.r.iter().enumerate() {
        let null_k = column(&null, k, cfg.mode);
        // density-scale thresholds; None when the normal approximation is degenerate
        let (crit, note) = match cfg.source {
            CriticalSource::MonteCarlo => {
                let cv = critical_values_from(&null_k, cfg.alpha)?;
                (Some((cv.seg, cv.assoc)), None)
            }
            CriticalSource::Asymptotic => {
                let (mu, four_nu) = null_moments(&cfg.geometry, cfg.mode, r)?;
                if four_nu > 0.0 {
                    let half = z * (four_nu / cfg.n as f64).sqrt();
                    (Some((mu + half, mu - half)), None)
                } else {
                    (None, Some(format!("degenerate: 4 nu = 0 for {} at r = {r}", cfg.mode)))
                }
            }
        };
        let rejects = |x: f64, dir: Alternative| match (crit, dir) {
            (Some((s, _)), Alternative::Segregation) => x > s,
            (Some((_, a)), Alternative::Association) => x < a,
            (None, _) => false,
        };
        let have = crit.is_some();
        let beta = cfg
            .alternatives
            .iter()
            .zip(&dirs)
            .zip(&alts)
            .map(|((p, &dir), reps)| AltPower {
                pattern: *p,
                direction: dir,
                beta_hat: have.then(|| fraction(&column(reps, k, cfg.mode), |x| rejects(x, dir))),
            })
            .collect();
        rows.push(PowerEstimate {
            r,
            critical_seg: crit.map(|c| c.0),
            critical_assoc: crit.map(|c| c.1),
            alpha_hat_seg: have.then(|| fraction(&null_k, |x| rejects(x, Alternative::Segregation))),
            alpha_hat_assoc: have.then(|| fraction(&null_k, |x| rejects(x, Alternative::Association))),
            beta,
            n_mc: cfg.n_mc,
            note,
        });
    }
    Ok(PowerTable { mode: cfg.mode, n: cfg.n, n_mc: cfg.n_mc, alpha: cfg.alpha, source: cfg.source, rows })
}
