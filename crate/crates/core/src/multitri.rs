//! Delaunay triangulation of the markers and the multi-triangle densities.

use std::collections::HashMap;

use rayon::prelude::*;
use robust::Coord;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom2d::{Point, ProximityParam, Triangle};
use crate::pcd_graph::{assemble, build_from_bary, pair_counts, Mode, PcDigraph};

fn coord(p: Point) -> Coord<f64> {
    Coord { x: p.x, y: p.y }
}

fn orient(a: Point, b: Point, c: Point) -> f64 {
    robust::orient2d(coord(a), coord(b), coord(c))
}

fn incircle(a: Point, b: Point, c: Point, d: Point) -> f64 {
    robust::incircle(coord(a), coord(b), coord(c), coord(d))
}

/// Delaunay triangulation of a marker set with area weights.
#[derive(Debug, Clone)]
pub struct DelaunayMesh {
    markers: Vec<Point>,
    faces: Vec<[usize; 3]>,
    triangles: Vec<Triangle>,
    weights: Vec<f64>,
}

impl DelaunayMesh {
    /// Triangulates `markers`.
    ///
    /// Points are inserted in lexicographic order, each one fanned to the
    /// visible part of the current hull, and the result is made Delaunay by
    /// edge flips. All tests use adaptive-precision predicates. A triangle
    /// with a fourth marker exactly on its circumcircle is rejected, since
    /// the triangulation is then not unique.
    pub fn new(markers: Vec<Point>) -> Result<Self> {
        let m = markers.len();
        if m < 3 {
            return Err(Error::geometry(format!("need at least 3 markers, got {m}")));
        }
        if let Some(i) = markers.iter().position(|p| !p.is_finite()) {
            return Err(Error::geometry(format!("marker {i} is not finite")));
        }
        let mut order: Vec<usize> = (0..m).collect();
        order.sort_by(|&a, &b| {
            let (p, q) = (markers[a], markers[b]);
            p.x.total_cmp(&q.x).then(p.y.total_cmp(&q.y))
        });
        for w in order.windows(2) {
            if markers[w[0]] == markers[w[1]] {
                return Err(Error::geometry(format!("markers {} and {} coincide", w[0].min(w[1]), w[0].max(w[1]))));
            }
        }

        let faces = sweep(&markers, &order)?;
        let faces = flip_to_delaunay(&markers, faces);

        for f in &faces {
            let [a, b, c] = f.map(|i| markers[i]);
            for (k, &p) in markers.iter().enumerate() {
                if f.contains(&k) {
                    continue;
                }
                let s = incircle(a, b, c, p);
                if s == 0.0 {
                    return Err(Error::Geometry(format!(
                        "markers {}, {}, {} and {k} are co-circular; the Delaunay triangulation is not unique",
                        f[0], f[1], f[2]
                    )));
                }
                debug_assert!(s < 0.0, "flip loop left a non-Delaunay triangle");
            }
        }
        Self::from_faces(markers, faces)
    }

    /// A mesh made of one triangle.
    pub fn single(tri: &Triangle) -> Self {
        let v = tri.vertices();
        DelaunayMesh { markers: v.to_vec(), faces: vec![[0, 1, 2]], triangles: vec![*tri], weights: vec![1.0] }
    }

    fn from_faces(markers: Vec<Point>, faces: Vec<[usize; 3]>) -> Result<Self> {
        let triangles = faces
            .iter()
            .map(|f| Triangle::new(markers[f[0]], markers[f[1]], markers[f[2]]))
            .collect::<Result<Vec<_>>>()?;
        let total: f64 = triangles.iter().map(Triangle::area).sum();
        let weights = triangles.iter().map(|t| t.area() / total).collect();
        Ok(DelaunayMesh { markers, faces, triangles, weights })
    }

    pub fn markers(&self) -> &[Point] {
        &self.markers
    }

    /// Marker index triples, counter-clockwise.
    pub fn faces(&self) -> &[[usize; 3]] {
        &self.faces
    }

    pub fn triangles(&self) -> &[Triangle] {
        &self.triangles
    }

    /// `w_i = area(T_i) / area(hull)`.
    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn hull_area(&self) -> f64 {
        self.triangles.iter().map(Triangle::area).sum()
    }

    /// `(sum w^2, sum w^3)`.
    pub fn weight_sums(&self) -> (f64, f64) {
        self.weights.iter().fold((0.0, 0.0), |(s2, s3), w| (s2 + w * w, s3 + w * w * w))
    }

    /// Index of the lowest-numbered triangle containing `p`.
    pub fn locate(&self, p: Point) -> Option<usize> {
        self.triangles.iter().position(|t| t.contains(p))
    }
}

fn sweep(markers: &[Point], order: &[usize]) -> Result<Vec<[usize; 3]>> {
    let p = |i: usize| markers[order[i]];
    let m = order.len();
    // leading run of collinear points
    let mut k = 2;
    while k < m && orient(p(0), p(1), p(k)) == 0.0 {
        k += 1;
    }
    if k == m {
        return Err(Error::geometry("all markers are collinear"));
    }
    let apex = order[k];
    let mut faces = Vec::with_capacity(2 * m);
    // hull as a counter-clockwise cycle of marker indices
    let mut hull: Vec<usize>;
    if orient(p(0), p(1), p(k)) > 0.0 {
        for w in order[..k].windows(2) {
            faces.push([w[0], w[1], apex]);
        }
        hull = order[..k].to_vec();
        hull.push(apex);
    } else {
        for w in order[..k].windows(2) {
            faces.push([w[1], w[0], apex]);
        }
        hull = vec![order[0], apex];
        hull.extend(order[1..k].iter().rev());
    }

    for &q in &order[k + 1..] {
        let pq = markers[q];
        let h = hull.len();
        let visible: Vec<bool> = (0..h)
            .map(|e| orient(markers[hull[e]], markers[hull[(e + 1) % h]], pq) < 0.0)
            .collect();
        // the visible edges form one contiguous run; find where it starts
        let start = (0..h)
            .find(|&e| visible[e] && !visible[(e + h - 1) % h])
            .ok_or_else(|| Error::geometry("hull update failed"))?;
        let mut e = start;
        let mut count = 0;
        while visible[e] {
            let (a, b) = (hull[e], hull[(e + 1) % h]);
            faces.push([b, a, q]);
            e = (e + 1) % h;
            count += 1;
            if count == h {
                return Err(Error::geometry("hull update failed"));
            }
        }
        // replace the interior vertices of the visible chain with q
        let mut next = Vec::with_capacity(h + 1);
        let mut i = e;
        loop {
            next.push(hull[i]);
            if i == start {
                break;
            }
            i = (i + 1) % h;
        }
        next.push(q);
        hull = next;
    }
    Ok(faces)
}

fn flip_to_delaunay(markers: &[Point], mut faces: Vec<[usize; 3]>) -> Vec<[usize; 3]> {
    let mut owner: HashMap<(usize, usize), usize> = HashMap::with_capacity(3 * faces.len());
    for (t, f) in faces.iter().enumerate() {
        for s in 0..3 {
            owner.insert((f[s], f[(s + 1) % 3]), t);
        }
    }
    let mut stack: Vec<(usize, usize)> = owner.keys().copied().filter(|&(a, b)| a < b).collect();
    stack.sort_unstable();
    while let Some((a, b)) = stack.pop() {
        let (Some(&t1), Some(&t2)) = (owner.get(&(a, b)), owner.get(&(b, a))) else {
            continue;
        };
        let c = third(&faces[t1], a, b);
        let d = third(&faces[t2], b, a);
        if incircle(markers[a], markers[b], markers[c], markers[d]) <= 0.0 {
            continue;
        }
        owner.remove(&(a, b));
        owner.remove(&(b, a));
        faces[t1] = [a, d, c];
        faces[t2] = [d, b, c];
        for (e, t) in [((a, d), t1), ((d, c), t1), ((c, a), t1), ((d, b), t2), ((b, c), t2), ((c, d), t2)] {
            owner.insert(e, t);
        }
        stack.extend([(a, d), (d, b), (b, c), (c, a)]);
    }
    // canonical numbering: smallest marker first in each face, faces sorted
    for f in faces.iter_mut() {
        let s = (0..3).min_by_key(|&s| f[s]).unwrap();
        f.rotate_left(s);
    }
    faces.sort_unstable();
    faces
}

fn third(f: &[usize; 3], a: usize, b: usize) -> usize {
    for s in 0..3 {
        if f[s] == a && f[(s + 1) % 3] == b {
            return f[(s + 2) % 3];
        }
    }
    unreachable!("edge not in face")
}

/// Containing triangle of every point; boundary points go to the lowest index.
pub fn assign(points: &[Point], mesh: &DelaunayMesh) -> Result<Vec<usize>> {
    points
        .iter()
        .enumerate()
        .map(|(i, &p)| mesh.locate(p).ok_or(Error::Outside { index: i, what: "the convex hull of the markers" }))
        .collect()
}

fn groups_of(tri_idx: &[usize], j: usize) -> Vec<Vec<usize>> {
    let mut groups = vec![Vec::new(); j];
    for (i, &t) in tri_idx.iter().enumerate() {
        groups[t].push(i);
    }
    groups
}

/// Digraph over points spread across the mesh; arcs stay within triangles.
pub fn build_multi_pcd(points: &[Point], mesh: &DelaunayMesh, r: ProximityParam) -> Result<PcDigraph> {
    if points.is_empty() {
        return Err(Error::domain("need at least one point"));
    }
    let idx = assign(points, mesh)?;
    let groups = groups_of(&idx, mesh.len());
    let parts: Vec<PcDigraph> = groups
        .iter()
        .zip(mesh.triangles())
        .map(|(g, t)| {
            let b: Vec<_> = g.iter().map(|&i| t.to_barycentric(points[i])).collect();
            build_from_bary(&b, r)
        })
        .collect();
    Ok(assemble(points.len(), r, &groups, &parts))
}

/// Edge counts and densities of one triangle's share of the points.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TriangleCounts {
    pub n: usize,
    pub arcs: u64,
    pub and_edges: u64,
    pub or_edges: u64,
}

impl TriangleCounts {
    pub fn pairs(&self) -> u64 {
        (self.n as u64) * (self.n.saturating_sub(1) as u64) / 2
    }

    /// Local edge density; `None` with fewer than two points.
    pub fn rho(&self, mode: Mode) -> Option<f64> {
        let e = match mode {
            Mode::And => self.and_edges,
            Mode::Or => self.or_edges,
        };
        (self.n >= 2).then(|| e as f64 / self.pairs() as f64)
    }
}

/// All multi-triangle versions of the edge density for one mode.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MultiRho {
    /// `2|E| / (n(n-1))`
    pub rho_i: f64,
    /// `|E| / n_t`
    pub rho_ii: f64,
    /// `sum_i n_i(n_i-1)/(n(n-1)) * rho_[i]`
    pub xi: f64,
    /// `sum_i w_i^2 rho_[i]`
    pub xi_hat: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MultiDensity {
    pub n: usize,
    pub n_t: u64,
    pub per_triangle: Vec<TriangleCounts>,
    pub and: MultiRho,
    pub or: MultiRho,
}

impl MultiDensity {
    pub fn get(&self, mode: Mode) -> &MultiRho {
        match mode {
            Mode::And => &self.and,
            Mode::Or => &self.or,
        }
    }

    pub fn counts(&self) -> Vec<usize> {
        self.per_triangle.iter().map(|c| c.n).collect()
    }
}

/// Multi-triangle densities of `points` over `mesh`.
pub fn multi_density(points: &[Point], mesh: &DelaunayMesh, r: ProximityParam) -> Result<MultiDensity> {
    let idx = assign(points, mesh)?;
    multi_density_assigned(points, &idx, mesh, r)
}

pub(crate) fn multi_density_assigned(
    points: &[Point],
    idx: &[usize],
    mesh: &DelaunayMesh,
    r: ProximityParam,
) -> Result<MultiDensity> {
    let n = points.len();
    if n < 2 {
        return Err(Error::domain(format!("need n >= 2, got {n}")));
    }
    let groups = groups_of(idx, mesh.len());
    let per_triangle: Vec<TriangleCounts> = groups
        .par_iter()
        .zip(mesh.triangles().par_iter())
        .map(|(g, t)| {
            let b: Vec<_> = g.iter().map(|&i| t.to_barycentric(points[i])).collect();
            let (arcs, and_edges, or_edges) = pair_counts(&b, r);
            TriangleCounts { n: g.len(), arcs, and_edges, or_edges }
        })
        .collect();
    let n_t: u64 = per_triangle.iter().map(TriangleCounts::pairs).sum();
    if n_t == 0 {
        return Err(Error::domain("no triangle holds two or more points; rho_II is undefined"));
    }
    let total_pairs = (n as u64) * (n as u64 - 1) / 2;
    let rho_for = |mode: Mode| {
        let edges: u64 = per_triangle
            .iter()
            .map(|c| match mode {
                Mode::And => c.and_edges,
                Mode::Or => c.or_edges,
            })
            .sum();
        let mut xi = 0.0;
        let mut xi_hat = 0.0;
        for (c, w) in per_triangle.iter().zip(mesh.weights()) {
            if let Some(rho) = c.rho(mode) {
                xi += c.pairs() as f64 / total_pairs as f64 * rho;
                xi_hat += w * w * rho;
            }
        }
        MultiRho { rho_i: edges as f64 / total_pairs as f64, rho_ii: edges as f64 / n_t as f64, xi, xi_hat }
    };
    Ok(MultiDensity { n, n_t, and: rho_for(Mode::And), or: rho_for(Mode::Or), per_triangle })
}
