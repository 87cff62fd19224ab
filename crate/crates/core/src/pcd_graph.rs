//! Proximity catch digraphs, their AND/OR underlying graphs, densities and
//! domination numbers.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom2d::{in_proximity_bary, Bary, Point, ProximityParam, Triangle};

/// Largest vertex count accepted by the exact domination search.
pub const MAX_DOMINATION_N: usize = 16;

/// Below this many vertices construction stays on one thread.
const PAR_THRESHOLD: usize = 256;

/// Which underlying graph: both arcs (`And`) or at least one arc (`Or`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    And,
    Or,
}

impl std::str::FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "and" => Ok(Mode::And),
            "or" => Ok(Mode::Or),
            _ => Err(Error::domain(format!("unknown mode {s:?}, expected and|or"))),
        }
    }
}

impl std::fmt::Display for Mode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Mode::And => "and",
            Mode::Or => "or",
        })
    }
}

/// A digraph on `n` points with an arc `i -> j` iff point `j` lies in the
/// proximity region of point `i`.
#[derive(Debug, Clone, PartialEq)]
pub struct PcDigraph {
    n: usize,
    r: ProximityParam,
    // row-major n x n, diagonal always false
    adj: Vec<bool>,
    triangle: Vec<usize>,
}

impl PcDigraph {
    /// Digraph from an explicit arc list; mostly for tests and tooling.
    pub fn from_arcs(n: usize, arcs: &[(usize, usize)], r: ProximityParam) -> Result<Self> {
        let mut adj = vec![false; n * n];
        for &(i, j) in arcs {
            if i >= n || j >= n || i == j {
                return Err(Error::domain(format!("invalid arc ({i}, {j}) for n = {n}")));
            }
            adj[i * n + j] = true;
        }
        Ok(PcDigraph { n, r, adj, triangle: vec![0; n] })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> ProximityParam {
        self.r
    }

    #[inline]
    pub fn has_arc(&self, i: usize, j: usize) -> bool {
        self.adj[i * self.n + j]
    }

    pub fn arc_count(&self) -> u64 {
        self.adj.iter().filter(|&&a| a).count() as u64
    }

    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.n;
        self.adj.iter().enumerate().filter(|(_, &a)| a).map(move |(k, _)| (k / n, k % n))
    }

    /// Triangle index of each vertex (all zero for a single triangle).
    pub fn triangle_of(&self, i: usize) -> usize {
        self.triangle[i]
    }

    pub fn underlying(&self, mode: Mode) -> UnderlyingGraph<'_> {
        UnderlyingGraph { d: self, mode }
    }

    pub fn densities(&self) -> Result<DensitySummary> {
        let mut arcs = 0u64;
        let mut and = 0u64;
        let mut or = 0u64;
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                let (a, b) = (self.has_arc(i, j), self.has_arc(j, i));
                arcs += a as u64 + b as u64;
                and += (a && b) as u64;
                or += (a || b) as u64;
            }
        }
        DensitySummary::from_counts(self.n, arcs, and, or)
    }

    /// Minimum number of vertices whose closed out-neighbourhoods cover all.
    pub fn domination_number(&self) -> Result<usize> {
        let masks = self.closed_masks(|i, j| self.has_arc(i, j))?;
        Ok(domination_from_masks(&masks))
    }

    fn closed_masks(&self, adj: impl Fn(usize, usize) -> bool) -> Result<Vec<u32>> {
        if self.n == 0 {
            return Err(Error::domain("domination number needs n >= 1"));
        }
        if self.n > MAX_DOMINATION_N {
            return Err(Error::Capability(format!(
                "exact domination is limited to n <= {MAX_DOMINATION_N} (got {}); use density statistics instead",
                self.n
            )));
        }
        Ok((0..self.n)
            .map(|i| (0..self.n).filter(|&j| j == i || adj(i, j)).fold(0u32, |m, j| m | (1 << j)))
            .collect())
    }
}

/// AND or OR underlying graph, viewed over the digraph's arc table.
#[derive(Debug, Clone, Copy)]
pub struct UnderlyingGraph<'a> {
    d: &'a PcDigraph,
    mode: Mode,
}

impl UnderlyingGraph<'_> {
    pub fn n(&self) -> usize {
        self.d.n
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    #[inline]
    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        if i == j {
            return false;
        }
        let (a, b) = (self.d.has_arc(i, j), self.d.has_arc(j, i));
        match self.mode {
            Mode::And => a && b,
            Mode::Or => a || b,
        }
    }

    /// Edges as pairs `(i, j)` with `i < j`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.d.n;
        (0..n).flat_map(move |i| ((i + 1)..n).map(move |j| (i, j))).filter(|&(i, j)| self.has_edge(i, j))
    }

    pub fn edge_count(&self) -> u64 {
        self.edges().count() as u64
    }

    pub fn domination_number(&self) -> Result<usize> {
        let masks = self.d.closed_masks(|i, j| self.has_edge(i, j))?;
        Ok(domination_from_masks(&masks))
    }
}

fn domination_from_masks(masks: &[u32]) -> usize {
    let n = masks.len();
    let full: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    for k in 1..=n {
        // Gosper's hack over k-subsets
        let mut s: u32 = (1u32 << k) - 1;
        while s <= full {
            let mut cover = 0u32;
            let mut bits = s;
            while bits != 0 {
                cover |= masks[bits.trailing_zeros() as usize];
                bits &= bits - 1;
            }
            if cover == full {
                return k;
            }
            let c = s & s.wrapping_neg();
            let r = s + c;
            s = (((r ^ s) >> 2) / c) | r;
        }
    }
    n
}

/// Arc and edge densities with their raw counts.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DensitySummary {
    pub n: usize,
    pub arcs: u64,
    pub and_edges: u64,
    pub or_edges: u64,
    pub rho_arc: f64,
    pub rho_and: f64,
    pub rho_or: f64,
}

impl DensitySummary {
    pub fn from_counts(n: usize, arcs: u64, and_edges: u64, or_edges: u64) -> Result<Self> {
        if n < 2 {
            return Err(Error::domain("densities need n >= 2"));
        }
        debug_assert_eq!(and_edges + or_edges, arcs);
        let pairs = (n as u64) * (n as u64 - 1);
        let pairs_f = pairs as f64;
        Ok(DensitySummary {
            n,
            arcs,
            and_edges,
            or_edges,
            rho_arc: arcs as f64 / pairs_f,
            rho_and: (2 * and_edges) as f64 / pairs_f,
            rho_or: (2 * or_edges) as f64 / pairs_f,
        })
    }

    pub fn rho(&self, mode: Mode) -> f64 {
        match mode {
            Mode::And => self.rho_and,
            Mode::Or => self.rho_or,
        }
    }
}

/// Builds the digraph for points in one triangle.
pub fn build_pcd(points: &[Point], tri: &Triangle, r: ProximityParam) -> Result<PcDigraph> {
    if points.is_empty() {
        return Err(Error::domain("need at least one point"));
    }
    let barys = barycentrics(points, tri)?;
    Ok(build_from_bary(&barys, r))
}

pub(crate) fn barycentrics(points: &[Point], tri: &Triangle) -> Result<Vec<Bary>> {
    points
        .iter()
        .enumerate()
        .map(|(i, &p)| {
            let b = tri.to_barycentric(p);
            if b.is_inside() {
                Ok(b)
            } else {
                Err(Error::Outside { index: i, what: "the triangle" })
            }
        })
        .collect()
}

/// Digraph from barycentric coordinates in a common triangle.
pub fn build_from_bary(barys: &[Bary], r: ProximityParam) -> PcDigraph {
    let n = barys.len();
    let mut adj = vec![false; n * n];
    let fill = |(i, row): (usize, &mut [bool])| {
        for (j, cell) in row.iter_mut().enumerate() {
            *cell = i != j && in_proximity_bary(r, &barys[i], &barys[j]);
        }
    };
    if n >= PAR_THRESHOLD {
        adj.par_chunks_mut(n.max(1)).enumerate().for_each(fill);
    } else {
        adj.chunks_mut(n.max(1)).enumerate().for_each(fill);
    }
    PcDigraph { n, r, adj, triangle: vec![0; n] }
}

/// Joins per-triangle digraphs into one digraph over `n` global vertices.
///
/// `groups[t]` lists the global indices of the vertices in triangle `t`, in
/// the same order as the vertices of `parts[t]`.
pub(crate) fn assemble(n: usize, r: ProximityParam, groups: &[Vec<usize>], parts: &[PcDigraph]) -> PcDigraph {
    let mut adj = vec![false; n * n];
    let mut triangle = vec![0; n];
    for (t, (idx, d)) in groups.iter().zip(parts).enumerate() {
        for (a, &i) in idx.iter().enumerate() {
            triangle[i] = t;
            for (b, &j) in idx.iter().enumerate() {
                adj[i * n + j] = d.has_arc(a, b);
            }
        }
    }
    PcDigraph { n, r, adj, triangle }
}

/// Arc, AND-edge and OR-edge counts without materialising the digraph.
pub fn pair_counts(barys: &[Bary], r: ProximityParam) -> (u64, u64, u64) {
    let n = barys.len();
    let mut arcs = 0u64;
    let mut and = 0u64;
    for i in 0..n {
        for j in (i + 1)..n {
            let a = in_proximity_bary(r, &barys[i], &barys[j]);
            let b = in_proximity_bary(r, &barys[j], &barys[i]);
            arcs += a as u64 + b as u64;
            and += (a && b) as u64;
        }
    }
    (arcs, and, arcs - and)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn r(x: f64) -> ProximityParam {
        ProximityParam::new(x).unwrap()
    }

    fn random_interior(rng: &mut impl Rng, n: usize) -> Vec<Point> {
        let t = Triangle::equilateral();
        (0..n)
            .map(|_| {
                let (mut u, mut v): (f64, f64) = (rng.random(), rng.random());
                if u + v > 1.0 {
                    u = 1.0 - u;
                    v = 1.0 - v;
                }
                t.from_barycentric(&Bary([1.0 - u - v, u, v]))
            })
            .collect()
    }

    #[test]
    fn single_vertex_has_no_arcs() {
        let d = build_pcd(&[Point::new(0.5, 0.3)], &Triangle::equilateral(), r(2.0)).unwrap();
        assert_eq!(d.arc_count(), 0);
        assert!(d.densities().is_err());
        assert_eq!(d.domination_number().unwrap(), 1);
    }

    #[test]
    fn infinite_r_gives_complete_digraph() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let pts = random_interior(&mut rng, 12);
        let d = build_pcd(&pts, &Triangle::equilateral(), ProximityParam::INFINITY).unwrap();
        assert_eq!(d.arc_count(), 12 * 11);
        let s = d.densities().unwrap();
        assert_eq!((s.rho_arc, s.rho_and, s.rho_or), (1.0, 1.0, 1.0));
        assert_eq!(d.domination_number().unwrap(), 1);
    }

    #[test]
    fn one_point_per_vertex_region() {
        let pts = [Point::new(0.05, 0.02), Point::new(0.5, 0.28), Point::new(0.9, 0.02)];
        let t = Triangle::equilateral();
        let d = build_pcd(&pts, &t, r(1.01)).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let oracle = i != j && crate::geom2d::in_proximity_region(&t, r(1.01), pts[i], pts[j]).unwrap();
                assert_eq!(d.has_arc(i, j), oracle);
            }
        }
        // the middle point ties between the first two vertex regions and
        // belongs to the first, so it reaches the point near that vertex
        assert_eq!(d.arcs().collect::<Vec<_>>(), vec![(1, 0)]);
        assert_eq!(d.densities().unwrap().rho_and, 0.0);
    }

    #[test]
    fn outside_point_is_named() {
        let pts = [Point::new(0.5, 0.2), Point::new(5.0, 5.0)];
        let e = build_pcd(&pts, &Triangle::equilateral(), r(2.0)).unwrap_err();
        assert_eq!(e, Error::Outside { index: 1, what: "the triangle" });
    }

    #[test]
    fn single_arc_on_two_vertices() {
        let d = PcDigraph::from_arcs(2, &[(0, 1)], r(1.0)).unwrap();
        assert_eq!(d.underlying(Mode::And).edge_count(), 0);
        assert_eq!(d.underlying(Mode::Or).edge_count(), 1);
        let s = d.densities().unwrap();
        assert_eq!((s.rho_arc, s.rho_and, s.rho_or), (0.5, 0.0, 1.0));
    }

    #[test]
    fn complete_three() {
        let arcs: Vec<_> = (0..3).flat_map(|i| (0..3).filter(move |&j| j != i).map(move |j| (i, j))).collect();
        let d = PcDigraph::from_arcs(3, &arcs, r(1.0)).unwrap();
        let s = d.densities().unwrap();
        assert_eq!((s.rho_arc, s.rho_and, s.rho_or), (1.0, 1.0, 1.0));
        assert_eq!(d.underlying(Mode::And).edge_count(), 3);
    }

    #[test]
    fn domination_cap() {
        let d = PcDigraph::from_arcs(17, &[], r(1.0)).unwrap();
        assert!(matches!(d.domination_number(), Err(Error::Capability(_))));
        let e = PcDigraph::from_arcs(5, &[], r(1.0)).unwrap();
        assert_eq!(e.domination_number().unwrap(), 5);
    }

    fn oracle_domination(n: usize, adj: impl Fn(usize, usize) -> bool) -> usize {
        let mut best = n;
        for s in 0u32..(1 << n) {
            let covered = (0..n).all(|v| s & (1 << v) != 0 || (0..n).any(|u| s & (1 << u) != 0 && adj(u, v)));
            if covered {
                best = best.min(s.count_ones() as usize);
            }
        }
        best
    }

    #[test]
    fn domination_matches_subset_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..40 {
            let pts = random_interior(&mut rng, 8);
            let d = build_pcd(&pts, &Triangle::equilateral(), r(1.5)).unwrap();
            assert_eq!(d.domination_number().unwrap(), oracle_domination(8, |u, v| d.has_arc(u, v)));
            for mode in [Mode::And, Mode::Or] {
                let g = d.underlying(mode);
                assert_eq!(g.domination_number().unwrap(), oracle_domination(8, |u, v| g.has_edge(u, v)));
            }
        }
    }

    #[test]
    fn parallel_build_matches_sequential() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let pts = random_interior(&mut rng, 300);
        let t = Triangle::equilateral();
        let barys = barycentrics(&pts, &t).unwrap();
        let d = build_from_bary(&barys, r(1.7));
        for i in (0..300).step_by(7) {
            for j in (0..300).step_by(11) {
                assert_eq!(d.has_arc(i, j), i != j && in_proximity_bary(r(1.7), &barys[i], &barys[j]));
            }
        }
        let s = d.densities().unwrap();
        assert_eq!(pair_counts(&barys, r(1.7)), (s.arcs, s.and_edges, s.or_edges));
    }

    proptest! {
        #[test]
        fn random_digraph_edge_identities(bits in proptest::collection::vec(any::<bool>(), 20 * 20)) {
            let n = 20;
            let arcs: Vec<_> = (0..n * n).filter(|&k| bits[k] && k / n != k % n).map(|k| (k / n, k % n)).collect();
            let d = PcDigraph::from_arcs(n, &arcs, r(1.0)).unwrap();
            let and = d.underlying(Mode::And);
            let or = d.underlying(Mode::Or);
            for (i, j) in and.edges() {
                prop_assert!(or.has_edge(i, j));
            }
            prop_assert_eq!(and.edge_count() + or.edge_count(), d.arc_count());
            let s = d.densities().unwrap();
            prop_assert_eq!(s.and_edges + s.or_edges, s.arcs);
            prop_assert!(0.0 <= s.rho_and && s.rho_and <= s.rho_arc && s.rho_arc <= s.rho_or && s.rho_or <= 1.0);
            prop_assert!((s.rho_and + s.rho_or - 2.0 * s.rho_arc).abs() <= 4.0 * f64::EPSILON);
        }

        #[test]
        fn domination_mode_ordering(seed in any::<u64>(), rr in 1.0..3.0f64) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let pts = random_interior(&mut rng, 9);
            let d = build_pcd(&pts, &Triangle::equilateral(), r(rr)).unwrap();
            let g_or = d.underlying(Mode::Or).domination_number().unwrap();
            let g_d = d.domination_number().unwrap();
            let g_and = d.underlying(Mode::And).domination_number().unwrap();
            prop_assert!(g_or <= g_d && g_d <= g_and);
        }
    }
}
