//! Point pattern generators: uniform (null), segregation and association.
//!
//! Alternatives are defined in barycentric coordinates, so they make sense on
//! any triangle. Under segregation with parameter `eps` a point is kept when
//! every weight is at most `1 - 2 eps / sqrt(3)` (it avoids the three corner
//! triangles); under association it is kept when some weight is at least
//! `1/3 + 2 eps / sqrt(3)` (it sits in one of the corners).

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom2d::{Bary, Point, Triangle};
use crate::multitri::DelaunayMesh;

const SQRT3: f64 = 1.732_050_807_568_877_2;

/// Rejection sampling gives up below this acceptance probability.
pub const MIN_ACCEPTANCE: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum PatternSpec {
    Null,
    Segregation { eps: f64 },
    Association { eps: f64 },
}

impl PatternSpec {
    pub fn segregation(eps: f64) -> Result<Self> {
        check_eps(eps)?;
        Ok(PatternSpec::Segregation { eps })
    }

    pub fn association(eps: f64) -> Result<Self> {
        check_eps(eps)?;
        Ok(PatternSpec::Association { eps })
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            PatternSpec::Null => Ok(()),
            PatternSpec::Segregation { eps } | PatternSpec::Association { eps } => check_eps(eps),
        }
    }

    pub fn eps(&self) -> Option<f64> {
        match *self {
            PatternSpec::Null => None,
            PatternSpec::Segregation { eps } | PatternSpec::Association { eps } => Some(eps),
        }
    }

    /// Probability that a uniform point survives the rejection rule.
    pub fn acceptance_probability(&self) -> f64 {
        match *self {
            PatternSpec::Null => 1.0,
            PatternSpec::Segregation { eps } => {
                let t = 1.0 - 2.0 * eps / SQRT3;
                1.0 - corner_union(t)
            }
            PatternSpec::Association { eps } => corner_union(1.0 / 3.0 + 2.0 * eps / SQRT3),
        }
    }

    /// Whether a point with weights `b` belongs to the support.
    #[inline]
    pub fn accepts(&self, b: &Bary) -> bool {
        match *self {
            PatternSpec::Null => true,
            PatternSpec::Segregation { eps } => b.max() <= 1.0 - 2.0 * eps / SQRT3,
            PatternSpec::Association { eps } => b.max() >= 1.0 / 3.0 + 2.0 * eps / SQRT3,
        }
    }
}

fn check_eps(eps: f64) -> Result<()> {
    if (0.0..SQRT3 / 3.0).contains(&eps) {
        Ok(())
    } else {
        Err(Error::domain(format!("eps = {eps} is outside [0, sqrt(3)/3)")))
    }
}

/// Area fraction of the union of the corners `{b_i >= t}`.
fn corner_union(t: f64) -> f64 {
    let one = (1.0 - t).max(0.0).powi(2);
    let pair = (1.0 - 2.0 * t).max(0.0).powi(2);
    (3.0 * one - 3.0 * pair).clamp(0.0, 1.0)
}

/// Carved area fraction `delta` for a given `eps`.
pub fn delta_from_eps(eps: f64) -> Result<f64> {
    if !(eps > 0.0 && eps < SQRT3 / 3.0) {
        return Err(Error::domain(format!("eps = {eps} is outside (0, sqrt(3)/3)")));
    }
    Ok(if eps <= SQRT3 / 4.0 {
        4.0 * eps * eps
    } else {
        1.0 - 4.0 * (1.0 - SQRT3 * eps).powi(2)
    })
}

/// Inverse of [`delta_from_eps`].
pub fn eps_from_delta(delta: f64) -> Result<f64> {
    if !(delta > 0.0 && delta < 1.0) {
        return Err(Error::domain(format!("delta = {delta} is outside (0, 1)")));
    }
    Ok(if delta <= 0.75 {
        delta.sqrt() / 2.0
    } else {
        (1.0 - (1.0 - delta).sqrt() / 2.0) / SQRT3
    })
}

/// Master seed plus stream index; each pair yields an independent stream.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RngSeed {
    pub master: u64,
    pub stream: u64,
}

impl RngSeed {
    pub fn new(master: u64, stream: u64) -> Self {
        RngSeed { master, stream }
    }

    /// ChaCha keyed by `master`, with `stream` selecting the nonce.
    pub fn rng(&self) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.master);
        rng.set_stream(self.stream);
        rng
    }
}

/// Uniform barycentric weights on the triangle.
#[inline]
pub fn uniform_bary<R: Rng + ?Sized>(rng: &mut R) -> Bary {
    let mut u: f64 = rng.random();
    let mut v: f64 = rng.random();
    if u + v > 1.0 {
        u = 1.0 - u;
        v = 1.0 - v;
    }
    Bary([1.0 - u - v, u, v])
}

/// Draws `n` barycentric points from `spec`; also returns the number of
/// uniform proposals used.
pub fn sample_bary<R: Rng + ?Sized>(spec: &PatternSpec, n: usize, rng: &mut R) -> Result<(Vec<Bary>, u64)> {
    spec.validate()?;
    let p = spec.acceptance_probability();
    if p < MIN_ACCEPTANCE {
        return Err(Error::Sampling(format!("acceptance probability {p:.3e} is below {MIN_ACCEPTANCE:e}")));
    }
    let mut out = Vec::with_capacity(n);
    let mut tries = 0u64;
    while out.len() < n {
        let b = uniform_bary(rng);
        tries += 1;
        if spec.accepts(&b) {
            out.push(b);
        }
    }
    Ok((out, tries))
}

/// `n` points in `tri` drawn from `spec`.
pub fn sample(tri: &Triangle, spec: &PatternSpec, n: usize, seed: RngSeed) -> Result<Vec<Point>> {
    let (b, _) = sample_bary(spec, n, &mut seed.rng())?;
    Ok(b.iter().map(|b| tri.from_barycentric(b)).collect())
}

/// Points over a mesh: a triangle is picked with probability equal to its
/// area weight, then a point is drawn inside it. Returns the points and
/// their triangle indices.
pub fn sample_mesh(mesh: &DelaunayMesh, spec: &PatternSpec, n: usize, seed: RngSeed) -> Result<Vec<(Point, usize)>> {
    let mut rng = seed.rng();
    sample_mesh_with(mesh, spec, n, &mut rng)
}

pub(crate) fn sample_mesh_with<R: Rng + ?Sized>(
    mesh: &DelaunayMesh,
    spec: &PatternSpec,
    n: usize,
    rng: &mut R,
) -> Result<Vec<(Point, usize)>> {
    spec.validate()?;
    let p = spec.acceptance_probability();
    if p < MIN_ACCEPTANCE {
        return Err(Error::Sampling(format!("acceptance probability {p:.3e} is below {MIN_ACCEPTANCE:e}")));
    }
    let cum: Vec<f64> = mesh
        .weights()
        .iter()
        .scan(0.0, |acc, w| {
            *acc += w;
            Some(*acc)
        })
        .collect();
    let tris = mesh.triangles();
    let j = tris.len();
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let t = if j == 1 {
            0
        } else {
            let u: f64 = rng.random::<f64>() * cum[j - 1];
            cum.partition_point(|&c| c <= u).min(j - 1)
        };
        let b = loop {
            let b = uniform_bary(rng);
            if spec.accepts(&b) {
                break b;
            }
        };
        out.push((tris[t].from_barycentric(&b), t));
    }
    Ok(out)
}
