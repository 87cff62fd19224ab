//! Closed-form null moments, alternative means, Pitman efficiency, the
//! asymptotic power function and the multi-triangle moment adjustments.
//!
//! Null moments are piecewise rational in `r`. The means and kernel variances
//! switch branch at 4/3, 3/2 and 2; the kernel covariances `nu` use eleven
//! intervals. Intervals are half-open, so a value of `r` sitting exactly on a
//! breakpoint is evaluated by the branch to its right.

mod poly;
mod tables;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom2d::ProximityParam;
use crate::normal;
use crate::pcd_graph::Mode;

use poly::{Branch, Branch2};

const SQRT2: f64 = std::f64::consts::SQRT_2;
const SQRT3: f64 = 1.732_050_807_568_877_2;
const SQRT5: f64 = 2.236_067_977_499_79;
const SQRT15: f64 = 3.872_983_346_207_417;

/// Breakpoints shared by the means, kernel variances and alternative means.
pub const MEAN_BREAKPOINTS: [f64; 3] = [4.0 / 3.0, 1.5, 2.0];

/// Breakpoints of the kernel covariance `nu`.
pub const NU_BREAKPOINTS: [f64; 10] = [
    2.0 / SQRT3,
    1.2,
    SQRT5 - 1.0,
    (6.0 + 2.0 * SQRT2) / 7.0,
    4.0 / 3.0,
    (6.0 + SQRT15) / 7.0,
    1.5,
    (1.0 + SQRT5) / 2.0,
    1.0 + 1.0 / SQRT2,
    2.0,
];

/// Upper end (exclusive) of the segregation `eps` window for [`mu_alt`].
pub const SEG_EPS_MAX: f64 = SQRT3 / 8.0;

/// Upper end (exclusive) of the association `eps` window for [`mu_alt`].
pub const ASSOC_EPS_MAX: f64 = (7.0 * SQRT3 - 3.0 * SQRT15) / 12.0;

/// Upper end (exclusive) of `eps` for the alternatives themselves.
pub const EPS_SUPPORT_MAX: f64 = SQRT3 / 3.0;

/// Segregation (points avoid the vertices) or association (points cluster
/// around them).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Alternative {
    Segregation,
    Association,
}

impl std::str::FromStr for Alternative {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "seg" | "segregation" => Ok(Alternative::Segregation),
            "assoc" | "association" => Ok(Alternative::Association),
            _ => Err(Error::domain(format!("unknown alternative {s:?}, expected seg|assoc"))),
        }
    }
}

impl std::fmt::Display for Alternative {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Alternative::Segregation => "seg",
            Alternative::Association => "assoc",
        })
    }
}

/// A piecewise rational function of `r` on `[1, inf)`.
#[derive(Debug)]
pub struct PiecewiseFormula {
    name: &'static str,
    breakpoints: &'static [f64],
    branches: &'static [Branch],
}

impl PiecewiseFormula {
    pub fn name(&self) -> &'static str {
        self.name
    }

    pub fn breakpoints(&self) -> &'static [f64] {
        self.breakpoints
    }

    pub fn branch_count(&self) -> usize {
        self.branches.len()
    }

    /// Index of the branch used at `r`.
    pub fn branch_index(&self, r: f64) -> usize {
        self.breakpoints.iter().take_while(|&&b| b <= r).count()
    }

    pub fn eval(&self, r: f64) -> f64 {
        self.eval_branch(self.branch_index(r), r)
    }

    /// Evaluates branch `k` at `r` regardless of which interval `r` is in.
    pub fn eval_branch(&self, k: usize, r: f64) -> f64 {
        self.branches[k].eval(r)
    }
}

/// Which null moment.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Moment {
    Mean,
    VarH,
    Nu,
}

static FORMULAS: [PiecewiseFormula; 6] = [
    PiecewiseFormula { name: "mu_and", breakpoints: &MEAN_BREAKPOINTS, branches: &tables::MU_AND },
    PiecewiseFormula { name: "mu_or", breakpoints: &MEAN_BREAKPOINTS, branches: &tables::MU_OR },
    PiecewiseFormula { name: "var_and", breakpoints: &MEAN_BREAKPOINTS, branches: &tables::VAR_AND },
    PiecewiseFormula { name: "var_or", breakpoints: &MEAN_BREAKPOINTS, branches: &tables::VAR_OR },
    PiecewiseFormula { name: "nu_and", breakpoints: &NU_BREAKPOINTS, branches: &tables::NU_AND },
    PiecewiseFormula { name: "nu_or", breakpoints: &NU_BREAKPOINTS, branches: &tables::NU_OR },
];

pub fn formula(moment: Moment, mode: Mode) -> &'static PiecewiseFormula {
    let m = match moment {
        Moment::Mean => 0,
        Moment::VarH => 2,
        Moment::Nu => 4,
    };
    &FORMULAS[m + (mode == Mode::Or) as usize]
}

/// Null mean `mu(r) = P(X2 in N(X1) ∩ Γ1(X1))` for AND, the union for OR.
pub fn mu_null(mode: Mode, r: ProximityParam) -> f64 {
    match r {
        ProximityParam::Infinity => 1.0,
        ProximityParam::Finite(r) => formula(Moment::Mean, mode).eval(r),
    }
}

/// Variance of the Bernoulli kernel `h12`.
pub fn var_h_null(mode: Mode, r: ProximityParam) -> f64 {
    match r {
        ProximityParam::Infinity => 0.0,
        ProximityParam::Finite(r) => formula(Moment::VarH, mode).eval(r),
    }
}

/// Kernel covariance `nu(r) = Cov[h12, h13]`; `4 nu` is the asymptotic
/// variance of `sqrt(n) rho`.
pub fn nu_null(mode: Mode, r: ProximityParam) -> f64 {
    match r {
        ProximityParam::Infinity => 0.0,
        ProximityParam::Finite(r) => formula(Moment::Nu, mode).eval(r),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MomentSet {
    pub mode: Mode,
    pub mu: f64,
    pub var_h: f64,
    pub nu: f64,
}

pub fn moments(mode: Mode, r: ProximityParam) -> MomentSet {
    MomentSet {
        mode,
        mu: mu_null(mode, r),
        var_h: var_h_null(mode, r),
        nu: nu_null(mode, r),
    }
}

/// Joint law of `(h12, h13)`; `p01 = P(h12 = 0, h13 = 1)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct JointPmf {
    pub p00: f64,
    pub p01: f64,
    pub p10: f64,
    pub p11: f64,
}

pub fn joint_pmf(mode: Mode, r: ProximityParam) -> JointPmf {
    let mu = mu_null(mode, r);
    let p11 = nu_null(mode, r) + mu * mu;
    let p01 = mu - p11;
    JointPmf {
        p00: 1.0 - 2.0 * mu + p11,
        p01,
        p10: p01,
        p11,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AltMeanParams {
    pub mode: Mode,
    pub alt: Alternative,
    pub r: ProximityParam,
    pub eps: f64,
}

fn alt_table(mode: Mode, alt: Alternative) -> &'static [Branch2; 4] {
    match (mode, alt) {
        (Mode::And, Alternative::Segregation) => &tables::ALT_SEG_AND,
        (Mode::Or, Alternative::Segregation) => &tables::ALT_SEG_OR,
        (Mode::And, Alternative::Association) => &tables::ALT_ASSOC_AND,
        (Mode::Or, Alternative::Association) => &tables::ALT_ASSOC_OR,
    }
}

fn alt_eval(mode: Mode, alt: Alternative, r: f64, eps: f64) -> f64 {
    let k = MEAN_BREAKPOINTS.iter().take_while(|&&b| b <= r).count();
    alt_table(mode, alt)[k].eval(r, eps)
}

/// Upper end (exclusive) of the `eps` window where [`mu_alt`] is defined.
pub fn alt_eps_max(alt: Alternative) -> f64 {
    match alt {
        Alternative::Segregation => SEG_EPS_MAX,
        Alternative::Association => ASSOC_EPS_MAX,
    }
}

/// Mean of the edge density under the segregation or association
/// alternative with parameter `eps`.
///
/// The branches follow the null breakpoints. For `eps > 0` the true branch
/// boundaries drift slightly with `eps`, so close to a breakpoint the value
/// can be off by a few parts in 10^4 at the top of the window; it is exact
/// in the interior of each interval and in the limit `eps -> 0`. The last
/// segregation branch also drifts as `r` approaches `sqrt(3) / (2 eps)`;
/// from there on every point reaches every other and the mean is exactly 1.
pub fn mu_alt(p: &AltMeanParams) -> Result<f64> {
    let max = alt_eps_max(p.alt);
    if !(p.eps >= 0.0 && p.eps < max) {
        return Err(Error::domain(format!("eps = {} is outside [0, {max:.6}) for {}", p.eps, p.alt)));
    }
    Ok(match p.r {
        ProximityParam::Infinity => 1.0,
        ProximityParam::Finite(r) if p.alt == Alternative::Segregation && 2.0 * p.eps * r >= SQRT3 => 1.0,
        ProximityParam::Finite(r) => alt_eval(p.mode, p.alt, r, p.eps),
    })
}

/// Second `eps`-derivative of the alternative mean at `eps = 0`, by
/// Richardson-extrapolated central differences.
pub fn mu_alt_d2(mode: Mode, alt: Alternative, r: f64) -> f64 {
    let f = |e: f64| alt_eval(mode, alt, r, e);
    let f0 = f(0.0);
    let d = |h: f64| (f(h) - 2.0 * f0 + f(-h)) / (h * h);
    let (d1, d2, d3) = (d(1e-2), d(5e-3), d(2.5e-3));
    let (e1, e2) = ((4.0 * d2 - d1) / 3.0, (4.0 * d3 - d2) / 3.0);
    (16.0 * e2 - e1) / 15.0
}

/// Pitman asymptotic efficiency `(mu''(r, 0))^2 / (4 nu(r))`.
///
/// Returns `f64::INFINITY` where the score diverges: at `r = inf`, under
/// association at `r = 1`, and wherever the null covariance vanishes. At
/// `r = 1` the AND segregation value is the right limit.
pub fn pae(mode: Mode, alt: Alternative, r: ProximityParam) -> f64 {
    let r = match r {
        ProximityParam::Infinity => return f64::INFINITY,
        ProximityParam::Finite(r) => r,
    };
    if r == 1.0 {
        match (mode, alt) {
            (_, Alternative::Association) => return f64::INFINITY,
            (Mode::And, Alternative::Segregation) => {
                let (h1, h2) = (1e-3, 1e-4);
                let (g1, g2) = (pae_at(mode, alt, 1.0 + h1), pae_at(mode, alt, 1.0 + h2));
                return (h1 * g2 - h2 * g1) / (h1 - h2);
            }
            _ => {}
        }
    }
    pae_at(mode, alt, r)
}

fn pae_at(mode: Mode, alt: Alternative, r: f64) -> f64 {
    let nu = formula(Moment::Nu, mode).eval(r);
    if nu <= 0.0 {
        return f64::INFINITY;
    }
    let d2 = mu_alt_d2(mode, alt, r);
    d2 * d2 / (4.0 * nu)
}

/// Asymptotic power of the level-`alpha` normal test.
///
/// `nu0` and `nu_eps` are kernel covariances under the null and the
/// alternative (the asymptotic variance of `sqrt(n) rho` is `4 nu`).
pub fn asym_power(
    mu0: f64,
    nu0: f64,
    mu_eps: f64,
    nu_eps: f64,
    n: usize,
    alpha: f64,
    direction: Alternative,
) -> Result<f64> {
    if !(nu0 > 0.0 && nu_eps > 0.0) {
        return Err(Error::domain("asymptotic power needs positive variances"));
    }
    if n == 0 {
        return Err(Error::domain("n must be positive"));
    }
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(Error::domain(format!("alpha = {alpha} is not in (0, 1)")));
    }
    let z = normal::quantile(1.0 - alpha);
    let ratio = (nu0 / nu_eps).sqrt();
    let shift = (n as f64).sqrt() * (mu0 - mu_eps) / (4.0 * nu_eps).sqrt();
    Ok(match direction {
        Alternative::Segregation => normal::sf(z * ratio + shift),
        Alternative::Association => normal::cdf(-z * ratio + shift),
    })
}

fn weight_sums(weights: &[f64]) -> Result<(f64, f64)> {
    if weights.is_empty() || weights.iter().any(|&w| !(w > 0.0 && w.is_finite())) {
        return Err(Error::domain("weights must be positive and finite"));
    }
    let total: f64 = weights.iter().sum();
    if (total - 1.0).abs() > 1e-12 {
        return Err(Error::domain(format!("weights sum to {total}, not 1")));
    }
    let s2 = weights.iter().map(|w| w * w).sum();
    let s3 = weights.iter().map(|w| w * w * w).sum();
    Ok((s2, s3))
}

/// Moments of the multi-triangle density `rho_I` (normalised by all pairs).
///
/// Returns `(mu_tilde, nu_tilde)` with `mu_tilde = mu Σw²` and
/// `nu_tilde = nu Σw³ + mu² (Σw³ - (Σw²)²)`.
pub fn multi_tri_moments_i(mu: f64, nu: f64, weights: &[f64]) -> Result<(f64, f64)> {
    let (s2, s3) = weight_sums(weights)?;
    Ok((mu * s2, nu * s3 + mu * mu * (s3 - s2 * s2)))
}

/// Moments of `rho_II` (normalised by within-triangle pairs).
///
/// Returns `(mu, nu Σw³ / (Σw²)²)`.
pub fn multi_tri_moments_ii(mu: f64, nu: f64, weights: &[f64]) -> Result<(f64, f64)> {
    let (s2, s3) = weight_sums(weights)?;
    Ok((mu, nu * s3 / (s2 * s2)))
}

/// Whether the density is asymptotically normal (non-degenerate) under the
/// alternative with parameter `eps`.
pub fn clt_valid(mode: Mode, alt: Alternative, r: ProximityParam, eps: f64) -> Result<bool> {
    if !(eps > 0.0 && eps < EPS_SUPPORT_MAX) {
        return Err(Error::domain(format!("eps = {eps} is outside (0, sqrt(3)/3)")));
    }
    let r = match r {
        ProximityParam::Infinity => return Ok(false),
        ProximityParam::Finite(r) => r,
    };
    let lower_ok = r > 1.0 || (mode == Mode::Or && r == 1.0);
    Ok(match alt {
        Alternative::Segregation => {
            let cap = if eps <= SQRT3 / 4.0 { SQRT3 / (2.0 * eps) } else { SQRT3 / eps - 2.0 };
            lower_ok && r < cap
        }
        Alternative::Association => r > 1.0 || (mode == Mode::Or && r == 1.0 && eps < SQRT3 / 12.0),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::{assert_abs_diff_eq, assert_relative_eq};
    use proptest::prelude::*;

    fn r(x: f64) -> ProximityParam {
        ProximityParam::new(x).unwrap()
    }

    #[test]
    fn printed_values() {
        assert_relative_eq!(mu_null(Mode::And, r(2.0)), 11.0 / 24.0, max_relative = 1e-12);
        assert_relative_eq!(mu_null(Mode::Or, r(2.0)), 19.0 / 24.0, max_relative = 1e-12);
        assert_eq!(mu_null(Mode::And, r(1.0)), 0.0);
        assert_relative_eq!(mu_null(Mode::Or, r(1.0)), 37.0 / 108.0, max_relative = 1e-12);
        assert_relative_eq!(nu_null(Mode::And, r(2.0)), 58901.0 / 1451520.0, max_relative = 1e-12);
        assert_relative_eq!(nu_null(Mode::Or, r(2.0)), 13189.0 / 483840.0, max_relative = 1e-12);
        assert_relative_eq!(nu_null(Mode::Or, r(1.0)), 1.0 / 3240.0, max_relative = 1e-12);
        assert_eq!(nu_null(Mode::And, r(1.0)), 0.0);
        assert_relative_eq!(var_h_null(Mode::Or, r(1.0)), 2627.0 / 11664.0, max_relative = 1e-12);
        assert_eq!(var_h_null(Mode::And, r(1.0)), 0.0);
        assert_relative_eq!(var_h_null(Mode::And, r(2.0)), 11.0 * 13.0 / 576.0, max_relative = 1e-12);
    }

    #[test]
    fn infinity_endpoint() {
        for m in [Mode::And, Mode::Or] {
            assert_eq!(mu_null(m, ProximityParam::INFINITY), 1.0);
            assert_eq!(nu_null(m, ProximityParam::INFINITY), 0.0);
            let p = joint_pmf(m, ProximityParam::INFINITY);
            assert_eq!((p.p00, p.p01, p.p10, p.p11), (0.0, 0.0, 0.0, 1.0));
            assert!((mu_null(m, r(1e6)) - 1.0).abs() < 1e-5);
        }
    }

    #[test]
    fn joint_pmf_at_one_and_two() {
        let p = joint_pmf(Mode::And, r(1.0));
        assert_eq!((p.p00, p.p01, p.p10, p.p11), (1.0, 0.0, 0.0, 0.0));
        let q = joint_pmf(Mode::And, r(2.0));
        let mu = 11.0 / 24.0;
        let p11 = 58901.0 / 1451520.0 + mu * mu;
        assert_relative_eq!(q.p11, p11, max_relative = 1e-12);
        assert_relative_eq!(q.p00, 1.0 - 2.0 * mu + p11, max_relative = 1e-12);
        assert_relative_eq!(q.p01, mu - p11, max_relative = 1e-12);
    }

    #[test]
    fn breakpoint_uses_right_branch() {
        let f = formula(Moment::Mean, Mode::And);
        assert_eq!(f.branch_index(1.0), 0);
        assert_eq!(f.branch_index(4.0 / 3.0), 1);
        assert_eq!(f.branch_index(1.5), 2);
        assert_eq!(f.branch_index(2.0), 3);
        let g = formula(Moment::Nu, Mode::Or);
        assert_eq!(g.branch_count(), 11);
        assert_eq!(g.branch_index(2.0), 10);
    }

    #[test]
    fn continuity_everywhere() {
        for moment in [Moment::Mean, Moment::VarH, Moment::Nu] {
            for mode in [Mode::And, Mode::Or] {
                let f = formula(moment, mode);
                for (k, &b) in f.breakpoints().iter().enumerate() {
                    let (left, right) = (f.eval_branch(k, b), f.eval_branch(k + 1, b));
                    assert!((left - right).abs() < 1e-9, "{} at {b}: {left} vs {right}", f.name());
                }
            }
        }
    }

    #[test]
    fn alternative_means_continuous_at_eps_zero() {
        for mode in [Mode::And, Mode::Or] {
            for alt in [Alternative::Segregation, Alternative::Association] {
                for k in 0..4 {
                    for x in [1.0, 1.2, 4.0 / 3.0, 1.4, 1.5, 1.8, 2.0, 3.5, 9.0] {
                        let v = alt_table(mode, alt)[k].eval(x, 0.0);
                        let null = formula(Moment::Mean, mode).eval_branch(k, x);
                        assert_abs_diff_eq!(v, null, epsilon = 1e-12);
                    }
                }
            }
        }
    }

    #[test]
    fn mu_alt_reduces_to_null() {
        let p = AltMeanParams { mode: Mode::And, alt: Alternative::Segregation, r: r(2.0), eps: 0.0 };
        assert_relative_eq!(mu_alt(&p).unwrap(), 11.0 / 24.0, max_relative = 1e-12);
        let q = AltMeanParams { mode: Mode::Or, alt: Alternative::Association, r: r(2.0), eps: 0.0 };
        assert_relative_eq!(mu_alt(&q).unwrap(), 19.0 / 24.0, max_relative = 1e-12);
        let bad = AltMeanParams { eps: 0.3, ..p };
        assert!(mu_alt(&bad).is_err());
        let bad = AltMeanParams { eps: 0.05, ..q };
        assert!(mu_alt(&bad).is_err());
    }

    #[test]
    fn pae_right_limits() {
        let a = pae(Mode::And, Alternative::Segregation, r(1.0));
        assert_relative_eq!(a, 4000.0 / 17.0, max_relative = 1e-3);
        let o = pae(Mode::Or, Alternative::Segregation, r(1.0));
        assert_relative_eq!(o, 160.0 / 9.0, max_relative = 1e-3);
        assert_eq!(pae(Mode::And, Alternative::Association, r(1.0)), f64::INFINITY);
        assert_eq!(pae(Mode::Or, Alternative::Association, r(1.0)), f64::INFINITY);
        assert_eq!(pae(Mode::And, Alternative::Segregation, ProximityParam::INFINITY), f64::INFINITY);
    }

    #[test]
    fn pae_grows_for_large_r() {
        let mut prev = pae(Mode::And, Alternative::Segregation, r(10.0));
        for k in 1..20 {
            let v = pae(Mode::And, Alternative::Segregation, r(10.0 + 5.0 * k as f64));
            assert!(v > prev);
            prev = v;
        }
    }

    #[test]
    fn asym_power_examples() {
        let nu0 = 58901.0 / 1451520.0;
        let mu0 = 11.0 / 24.0;
        for dir in [Alternative::Segregation, Alternative::Association] {
            let p = asym_power(mu0, nu0, mu0, nu0, 50, 0.05, dir).unwrap();
            assert_abs_diff_eq!(p, 0.05, epsilon = 1e-9);
        }
        let p = asym_power(mu0, nu0, 0.55, nu0, 100, 0.05, Alternative::Segregation).unwrap();
        assert_abs_diff_eq!(p, 0.7357, epsilon = 5e-4);
        let mut prev = 0.0;
        for n in [10, 20, 50, 100, 1000, 10000] {
            let p = asym_power(mu0, nu0, 0.5, nu0, n, 0.05, Alternative::Segregation).unwrap();
            assert!(p > prev);
            prev = p;
        }
        assert!(prev > 0.999);
        assert!(asym_power(mu0, 0.0, 0.5, nu0, 10, 0.05, Alternative::Segregation).is_err());
    }

    #[test]
    fn multi_triangle_moments() {
        let (mu, nu) = (11.0 / 24.0, 58901.0 / 1451520.0);
        assert_eq!(multi_tri_moments_i(mu, nu, &[1.0]).unwrap(), (mu, nu));
        assert_eq!(multi_tri_moments_ii(mu, nu, &[1.0]).unwrap(), (mu, nu));
        let w = [0.25; 4];
        let (m1, n1) = multi_tri_moments_i(mu, nu, &w).unwrap();
        assert_relative_eq!(m1, mu / 4.0, max_relative = 1e-14);
        assert_relative_eq!(n1, nu / 16.0, max_relative = 1e-14);
        let (m2, n2) = multi_tri_moments_ii(mu, nu, &w).unwrap();
        assert_eq!(m2, mu);
        assert_relative_eq!(n2, nu, max_relative = 1e-14);
        let w = [0.5, 0.3, 0.2];
        let (m, n) = multi_tri_moments_i(mu, nu, &w).unwrap();
        assert_relative_eq!(m, 0.38 * mu, max_relative = 1e-14);
        assert_relative_eq!(n, nu * 0.16 + mu * mu * (0.16 - 0.38 * 0.38), max_relative = 1e-12);
        assert!(multi_tri_moments_i(mu, nu, &[0.5, 0.4]).is_err());
        assert!(multi_tri_moments_i(mu, nu, &[1.5, -0.5]).is_err());
    }

    #[test]
    fn nu_breve_can_fall_below_nu_tilde() {
        let x = r(1.85);
        let (mu, nu) = (mu_null(Mode::And, x), nu_null(Mode::And, x));
        let w = [0.015, 0.985];
        let (_, tilde) = multi_tri_moments_i(mu, nu, &w).unwrap();
        let (_, breve) = multi_tri_moments_ii(mu, nu, &w).unwrap();
        assert!(breve < tilde);
        // with equal weights the order is the other way round
        let w = [0.25; 4];
        let (_, tilde) = multi_tri_moments_i(mu, nu, &w).unwrap();
        let (_, breve) = multi_tri_moments_ii(mu, nu, &w).unwrap();
        assert!(breve > tilde);
    }

    #[test]
    fn segregation_mean_saturates() {
        for m in [Mode::And, Mode::Or] {
            let p = AltMeanParams { mode: m, alt: Alternative::Segregation, r: r(4.4), eps: 0.2 };
            assert_eq!(mu_alt(&p).unwrap(), 1.0);
            let p = AltMeanParams { r: r(3.0), ..p };
            assert!(mu_alt(&p).unwrap() < 1.0);
        }
    }

    #[test]
    fn and_association_curvature_changes_sign() {
        assert!(mu_alt_d2(Mode::And, Alternative::Association, 1.1) > 0.0);
        assert!(mu_alt_d2(Mode::And, Alternative::Association, 1.3) < 0.0);
        assert!(mu_alt_d2(Mode::Or, Alternative::Association, 1.1) < 0.0);
    }

    #[test]
    fn clt_regions() {
        assert!(clt_valid(Mode::And, Alternative::Segregation, r(2.0), 0.3).unwrap());
        assert!(!clt_valid(Mode::And, Alternative::Segregation, r(1.0), 0.1).unwrap());
        assert!(clt_valid(Mode::Or, Alternative::Segregation, r(1.0), 0.1).unwrap());
        assert!(clt_valid(Mode::Or, Alternative::Association, r(1.0), 0.1).unwrap());
        assert!(!clt_valid(Mode::Or, Alternative::Association, r(1.0), 0.2).unwrap());
        assert!(!clt_valid(Mode::And, Alternative::Association, r(1.0), 0.1).unwrap());
        // past sqrt(3)/4 the cap is sqrt(3)/eps - 2
        assert!(clt_valid(Mode::And, Alternative::Segregation, r(1.1), 0.5).unwrap());
        assert!(!clt_valid(Mode::And, Alternative::Segregation, r(1.5), 0.5).unwrap());
        assert!(clt_valid(Mode::And, Alternative::Segregation, r(0.9f64.max(1.0)), 0.0).is_err());
    }

    #[test]
    fn maximizers() {
        let grid: Vec<f64> = (0..=90000).map(|k| 1.0 + k as f64 * 1e-4).collect();
        let argmax = |f: &dyn Fn(f64) -> f64| grid.iter().copied().fold((1.0, f64::MIN), |(a, m), x| {
            let v = f(x);
            if v > m { (x, v) } else { (a, m) }
        });
        let (a_and, _) = argmax(&|x| 4.0 * nu_null(Mode::And, r(x)));
        assert!((a_and - 2.69).abs() < 0.05, "{a_and}");
        let (a_or, m_or) = argmax(&|x| nu_null(Mode::Or, r(x)));
        assert!((a_or - 1.765).abs() < 0.05, "{a_or}");
        assert!((m_or - 0.0318).abs() < 0.002, "{m_or}");
    }

    #[test]
    fn pae_local_max_near_135() {
        let f = |x: f64| pae(Mode::And, Alternative::Segregation, r(x));
        let grid: Vec<f64> = (0..=400).map(|k| 1.2 + k as f64 * 5e-4).collect();
        let (best, _) = grid.iter().fold((0.0, f64::MIN), |(a, m), &x| if f(x) > m { (x, f(x)) } else { (a, m) });
        assert!((best - 1.35).abs() < 0.05, "{best}");
        assert!(best > 1.2 && best < 1.4);
    }

    proptest! {
        #[test]
        fn bernoulli_identity(x in 1.0..60.0f64) {
            for m in [Mode::And, Mode::Or] {
                let mu = mu_null(m, r(x));
                prop_assert!((var_h_null(m, r(x)) - mu * (1.0 - mu)).abs() < 1e-9);
            }
        }

        #[test]
        fn covariance_sanity(x in 1.0..60.0f64) {
            for m in [Mode::And, Mode::Or] {
                let nu = nu_null(m, r(x));
                prop_assert!(nu >= -1e-15 && nu <= var_h_null(m, r(x)) + 1e-15);
                let p = joint_pmf(m, r(x));
                for q in [p.p00, p.p01, p.p10, p.p11] {
                    prop_assert!((-1e-15..=1.0 + 1e-15).contains(&q));
                }
                prop_assert!((p.p00 + p.p01 + p.p10 + p.p11 - 1.0).abs() < 1e-12);
            }
        }

        #[test]
        fn mean_ordering(x in 1.0..50.0f64) {
            prop_assert!(mu_null(Mode::And, r(x)) < mu_null(Mode::Or, r(x)));
        }

        #[test]
        fn pae_seg_ordering(x in 1.01..20.0f64) {
            prop_assert!(pae(Mode::Or, Alternative::Segregation, r(x)) < pae(Mode::And, Alternative::Segregation, r(x)));
        }

        #[test]
        fn alternative_mean_direction(x in 1.0..8.0f64, t in 0.01..0.99f64) {
            for m in [Mode::And, Mode::Or] {
                let null = mu_null(m, r(x));
                let seg = AltMeanParams { mode: m, alt: Alternative::Segregation, r: r(x), eps: t * SEG_EPS_MAX };
                prop_assert!(mu_alt(&seg).unwrap() >= null - 1e-12);
                // small-eps association raises the AND mean below r ~ 1.196
                if m == Mode::And && x < 1.2 {
                    continue;
                }
                let assoc = AltMeanParams { mode: m, alt: Alternative::Association, r: r(x), eps: t * ASSOC_EPS_MAX };
                prop_assert!(mu_alt(&assoc).unwrap() <= null + 1e-12);
            }
        }

        #[test]
        fn nu_breve_scaled_below_nu_tilde(w in proptest::collection::vec(0.01..1.0f64, 1..12), x in 1.01..6.0f64) {
            let total: f64 = w.iter().sum();
            let w: Vec<f64> = w.iter().map(|v| v / total).collect();
            let s: f64 = w.iter().sum();
            prop_assume!((s - 1.0).abs() <= 1e-12);
            let (mu, nu) = (mu_null(Mode::And, r(x)), nu_null(Mode::And, r(x)));
            let (_, tilde) = multi_tri_moments_i(mu, nu, &w).unwrap();
            let (_, breve) = multi_tri_moments_ii(mu, nu, &w).unwrap();
            let (s2, _) = weight_sums(&w).unwrap();
            prop_assert!(breve * s2 * s2 <= tilde * (1.0 + 1e-12));
        }
    }
}
