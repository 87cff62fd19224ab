//! Published power tables for `n = 10`, `alpha = 0.05`, kept for comparison
//! by `pcd reproduce`.

use pcd_density::closed_form::Alternative;
use pcd_density::inference::CriticalSource;
use pcd_density::pcd_graph::Mode;

pub struct Block {
    pub mode: Mode,
    /// Critical values as multiples of `2 / (n(n-1)) = 1/45`.
    pub critical_45ths: Option<&'static [u32]>,
    pub alpha_hat: &'static [f64],
    pub beta_hat: [&'static [f64]; 2],
}

pub struct PublishedTable {
    pub id: &'static str,
    pub direction: Alternative,
    pub source: CriticalSource,
    pub n_mc: u64,
    pub r: &'static [&'static str],
    pub eps: [&'static str; 2],
    pub blocks: [Block; 2],
}

const GRID: [&str; 8] = ["1", "11/10", "6/5", "4/3", "sqrt2", "3/2", "2", "3"];
const GRID_WIDE: [&str; 10] = ["1", "11/10", "6/5", "4/3", "sqrt2", "3/2", "2", "3", "5", "10"];

pub const N: usize = 10;
pub const ALPHA: f64 = 0.05;

// 0.4343 is a printed power, not log10(e)
#[allow(clippy::approx_constant)]
pub static TABLES: [PublishedTable; 4] = [
    PublishedTable {
        id: "T1",
        direction: Alternative::Segregation,
        source: CriticalSource::MonteCarlo,
        n_mc: 1000,
        r: &GRID,
        eps: ["sqrt3/8", "sqrt3/4"],
        blocks: [
            Block {
                mode: Mode::And,
                critical_45ths: Some(&[1, 5, 9, 13, 16, 19, 33, 44]),
                alpha_hat: &[0.023, 0.048, 0.035, 0.044, 0.040, 0.036, 0.031, 0.039],
                beta_hat: [
                    &[0.043, 0.109, 0.096, 0.153, 0.128, 0.119, 0.211, 0.287],
                    &[0.000, 0.98, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0],
                ],
            },
            Block {
                mode: Mode::Or,
                critical_45ths: Some(&[22, 22, 24, 28, 31, 33, 43, 45]),
                alpha_hat: &[0.030, 0.045, 0.049, 0.043, 0.037, 0.043, 0.034, 0.000],
                beta_hat: [
                    &[0.028, 0.045, 0.059, 0.107, 0.113, 0.109, 0.151, 0.000],
                    &[0.145, 0.681, 0.958, 0.998, 0.999, 0.999, 1.000, 0.000],
                ],
            },
        ],
    },
    PublishedTable {
        id: "T2",
        direction: Alternative::Segregation,
        source: CriticalSource::Asymptotic,
        n_mc: 10000,
        r: &GRID,
        eps: ["sqrt3/8", "sqrt3/4"],
        blocks: [
            Block {
                mode: Mode::And,
                critical_45ths: None,
                alpha_hat: &[0.2272, 0.2081, 0.1777, 0.1467, 0.1042, 0.1228, 0.0761, 0.0784],
                beta_hat: [
                    &[0.3014, 0.4273, 0.4518, 0.4259, 0.3600, 0.4187, 0.3846, 0.5767],
                    &[0.6519, 0.9985, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0],
                ],
            },
            Block {
                mode: Mode::Or,
                critical_45ths: None,
                alpha_hat: &[0.2901, 0.1939, 0.2033, 0.1146, 0.0947, 0.0831, 0.0380, 0.0],
                beta_hat: [
                    &[0.3182, 0.2621, 0.3135, 0.2601, 0.2466, 0.2554, 0.1594, 0.0],
                    &[0.7069, 0.9310, 0.9958, 1.0, 1.0, 0.9999, 1.0, 0.0],
                ],
            },
        ],
    },
    PublishedTable {
        id: "T3",
        direction: Alternative::Association,
        source: CriticalSource::MonteCarlo,
        n_mc: 1000,
        r: &GRID_WIDE,
        eps: ["sqrt3/12", "5sqrt3/24"],
        blocks: [
            Block {
                mode: Mode::And,
                critical_45ths: Some(&[0, 0, 1, 3, 4, 5, 11, 21, 31, 37]),
                alpha_hat: &[0.000, 0.000, 0.005, 0.030, 0.027, 0.037, 0.038, 0.043, 0.048, 0.041],
                beta_hat: [
                    &[0.000, 0.000, 0.003, 0.045, 0.057, 0.077, 0.154, 0.136, 0.077, 0.055],
                    &[0.000, 0.000, 0.009, 0.051, 0.060, 0.081, 0.492, 0.964, 0.941, 0.396],
                ],
            },
            Block {
                mode: Mode::Or,
                critical_45ths: Some(&[12, 12, 13, 14, 15, 16, 27, 38, 43, 45]),
                alpha_hat: &[0.000, 0.000, 0.040, 0.045, 0.049, 0.042, 0.049, 0.044, 0.022, 0.019],
                beta_hat: [
                    &[0.000, 0.000, 0.169, 0.227, 0.331, 0.328, 0.396, 0.163, 0.069, 0.032],
                    &[0.000, 0.000, 0.000, 0.352, 0.352, 0.612, 0.988, 1.000, 0.935, 0.344],
                ],
            },
        ],
    },
    PublishedTable {
        id: "T4",
        direction: Alternative::Association,
        source: CriticalSource::Asymptotic,
        n_mc: 10000,
        r: &GRID_WIDE,
        eps: ["sqrt3/12", "5sqrt3/24"],
        blocks: [
            Block {
                mode: Mode::And,
                critical_45ths: None,
                alpha_hat: &[0.7707, 0.3343, 0.1872, 0.0859, 0.0774, 0.0671, 0.0551, 0.0593, 0.0771, 0.1182],
                beta_hat: [
                    &[0.7406, 0.2829, 0.1869, 0.1156, 0.1323, 0.1506, 0.2053, 0.1599, 0.1336, 0.1618],
                    &[0.7415, 0.2923, 0.1833, 0.1220, 0.1491, 0.1891, 0.5605, 0.9664, 0.9510, 0.6241],
                ],
            },
            Block {
                mode: Mode::Or,
                critical_45ths: None,
                alpha_hat: &[0.5194, 0.3935, 0.2302, 0.0920, 0.0834, 0.0665, 0.0759, 0.0980, 0.0708, 0.0193],
                beta_hat: [
                    &[0.6293, 0.6258, 0.5661, 0.4318, 0.4247, 0.4346, 0.4343, 0.2624, 0.1421, 0.0336],
                    &[0.6315, 0.6340, 0.6259, 0.6265, 0.6279, 0.7480, 0.9900, 1.0000, 0.9649, 0.3505],
                ],
            },
        ],
    },
];

pub fn find(id: &str) -> Option<&'static PublishedTable> {
    TABLES.iter().find(|t| t.id.eq_ignore_ascii_case(id))
}

/// Three standard errors of the difference between two independent
/// binomial proportions near `p`, estimated from `n1` and `n2` trials.
pub fn rate_tolerance(p: f64, n1: u64, n2: u64) -> f64 {
    let floor = 1.0 / n1.min(n2) as f64;
    let p = p.clamp(floor, 1.0 - floor);
    3.0 * (p * (1.0 - p) * (1.0 / n1 as f64 + 1.0 / n2 as f64)).sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shapes() {
        for t in &TABLES {
            for b in &t.blocks {
                assert_eq!(b.alpha_hat.len(), t.r.len(), "{}", t.id);
                assert_eq!(b.beta_hat[0].len(), t.r.len());
                assert_eq!(b.beta_hat[1].len(), t.r.len());
                if let Some(c) = b.critical_45ths {
                    assert_eq!(c.len(), t.r.len());
                }
            }
        }
        assert!(find("t3").is_some());
        assert!(find("T5").is_none());
    }

    #[test]
    fn tolerance_floor() {
        assert!(rate_tolerance(0.0, 1000, 1000) > 0.0);
        let t = rate_tolerance(0.5, 1000, 1000);
        assert!((t - 3.0 * (0.25f64 * 0.002).sqrt()).abs() < 1e-15);
    }
}
