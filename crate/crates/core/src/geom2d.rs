//! Triangle and simplex geometry in barycentric terms.
//!
//! Every predicate used by the digraphs reduces to barycentric arithmetic:
//! the vertex region of `x` is the argmax of its barycentric weights, and the
//! distance from vertex `v` to the line through `z` parallel to the opposite
//! edge is proportional to `1 - b_v(z)`.

use std::fmt;
use std::str::FromStr;

use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Slack allowed when deciding whether a point is inside a triangle.
pub const BARY_TOL: f64 = 1e-12;

/// Relative threshold below which a triangle counts as degenerate.
const DEGENERACY_TOL: f64 = 1e-12;

const SQRT3: f64 = 1.732_050_807_568_877_2;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

impl From<(f64, f64)> for Point {
    fn from((x, y): (f64, f64)) -> Self {
        Point { x, y }
    }
}

/// Barycentric weights with respect to a triangle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bary(pub [f64; 3]);

impl Bary {
    /// Index of the largest weight; ties go to the smallest index.
    #[inline]
    pub fn argmax(&self) -> usize {
        let b = &self.0;
        let mut v = 0;
        if b[1] > b[v] {
            v = 1;
        }
        if b[2] > b[v] {
            v = 2;
        }
        v
    }

    #[inline]
    pub fn max(&self) -> f64 {
        self.0[self.argmax()]
    }

    #[inline]
    pub fn is_inside(&self) -> bool {
        self.0.iter().all(|&b| b >= -BARY_TOL)
    }

    pub fn sum(&self) -> f64 {
        self.0.iter().sum()
    }
}

/// Expansion parameter `r` of the proportional-edge proximity map.
///
/// `Infinity` is a value in its own right; the proximity region is then the
/// whole triangle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ProximityParam {
    Finite(f64),
    Infinity,
}

impl ProximityParam {
    pub const INFINITY: ProximityParam = ProximityParam::Infinity;

    pub fn new(r: f64) -> Result<Self> {
        if r.is_nan() {
            return Err(Error::domain("r is NaN"));
        }
        if r == f64::INFINITY {
            return Ok(ProximityParam::Infinity);
        }
        if r < 1.0 {
            return Err(Error::domain(format!("r must be >= 1, got {r}")));
        }
        Ok(ProximityParam::Finite(r))
    }

    /// The numeric value, with `f64::INFINITY` for the infinite parameter.
    pub fn value(&self) -> f64 {
        match *self {
            ProximityParam::Finite(r) => r,
            ProximityParam::Infinity => f64::INFINITY,
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, ProximityParam::Infinity)
    }
}

impl fmt::Display for ProximityParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProximityParam::Finite(r) => write!(f, "{r}"),
            ProximityParam::Infinity => f.write_str("inf"),
        }
    }
}

impl FromStr for ProximityParam {
    type Err = Error;

    /// Accepts decimals, fractions `a/b`, `sqrtK` or `sqrt(K)`, and `inf`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().to_ascii_lowercase();
        let bad = || Error::domain(format!("cannot parse r from {s:?}"));
        if matches!(t.as_str(), "inf" | "infinity" | "∞") {
            return Ok(ProximityParam::Infinity);
        }
        let v = if let Some(rest) = t.strip_prefix("sqrt") {
            let inner = rest.trim_start_matches('(').trim_end_matches(')');
            inner.parse::<f64>().map_err(|_| bad())?.sqrt()
        } else if let Some((a, b)) = t.split_once('/') {
            let a: f64 = a.trim().parse().map_err(|_| bad())?;
            let b: f64 = b.trim().parse().map_err(|_| bad())?;
            a / b
        } else {
            t.parse::<f64>().map_err(|_| bad())?
        };
        if !v.is_finite() {
            return Err(bad());
        }
        ProximityParam::new(v)
    }
}

impl Serialize for ProximityParam {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            ProximityParam::Finite(r) => s.serialize_f64(*r),
            ProximityParam::Infinity => s.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for ProximityParam {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(f64),
            Text(String),
        }
        match Raw::deserialize(d)? {
            Raw::Num(r) => ProximityParam::new(r),
            Raw::Text(t) => t.parse(),
        }
        .map_err(serde::de::Error::custom)
    }
}

/// A non-degenerate triangle, stored counter-clockwise.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Triangle {
    v: [Point; 3],
    // inverse of [y2 - y1, y3 - y1], row-major
    inv: [[f64; 2]; 2],
}

impl Triangle {
    /// Builds a triangle, reordering to counter-clockwise if necessary.
    pub fn new(a: Point, b: Point, c: Point) -> Result<Self> {
        if !(a.is_finite() && b.is_finite() && c.is_finite()) {
            return Err(Error::geometry("triangle has a non-finite vertex"));
        }
        let area2 = cross(a, b, c);
        let scale = dist2(a, b).max(dist2(b, c)).max(dist2(a, c));
        if !(area2.abs() > DEGENERACY_TOL * scale) {
            return Err(Error::geometry("triangle vertices are collinear"));
        }
        let v = if area2 > 0.0 { [a, b, c] } else { [a, c, b] };
        let (e1x, e1y) = (v[1].x - v[0].x, v[1].y - v[0].y);
        let (e2x, e2y) = (v[2].x - v[0].x, v[2].y - v[0].y);
        let det = e1x * e2y - e2x * e1y;
        let inv = [[e2y / det, -e2x / det], [-e1y / det, e1x / det]];
        Ok(Triangle { v, inv })
    }

    /// The equilateral triangle `(0,0), (1,0), (1/2, sqrt(3)/2)`.
    pub fn equilateral() -> Self {
        Triangle::new(
            Point::new(0.0, 0.0),
            Point::new(1.0, 0.0),
            Point::new(0.5, SQRT3 / 2.0),
        )
        .expect("equilateral triangle is valid")
    }

    pub fn vertices(&self) -> [Point; 3] {
        self.v
    }

    pub fn area(&self) -> f64 {
        0.5 * cross(self.v[0], self.v[1], self.v[2])
    }

    pub fn centroid(&self) -> Point {
        self.from_barycentric(&Bary([1.0 / 3.0; 3]))
    }

    #[inline]
    pub fn to_barycentric(&self, p: Point) -> Bary {
        let dx = p.x - self.v[0].x;
        let dy = p.y - self.v[0].y;
        let b1 = self.inv[0][0] * dx + self.inv[0][1] * dy;
        let b2 = self.inv[1][0] * dx + self.inv[1][1] * dy;
        Bary([1.0 - b1 - b2, b1, b2])
    }

    pub fn from_barycentric(&self, b: &Bary) -> Point {
        let [y1, y2, y3] = self.v;
        Point::new(
            b.0[0] * y1.x + b.0[1] * y2.x + b.0[2] * y3.x,
            b.0[0] * y1.y + b.0[1] * y2.y + b.0[2] * y3.y,
        )
    }

    pub fn contains(&self, p: Point) -> bool {
        self.to_barycentric(p).is_inside()
    }

    /// Index (0-based) of the vertex whose region contains `p`.
    pub fn vertex_region(&self, p: Point) -> Result<usize> {
        let b = self.to_barycentric(p);
        if !b.is_inside() {
            return Err(Error::domain("point lies outside the triangle"));
        }
        Ok(b.argmax())
    }
}

#[inline]
fn cross(a: Point, b: Point, c: Point) -> f64 {
    (b.x - a.x) * (c.y - a.y) - (c.x - a.x) * (b.y - a.y)
}

#[inline]
fn dist2(a: Point, b: Point) -> f64 {
    (a.x - b.x).powi(2) + (a.y - b.y).powi(2)
}

/// Proximity membership on precomputed barycentric coordinates.
///
/// Both points are assumed to lie in the triangle.
#[inline]
pub fn in_proximity_bary(r: ProximityParam, bx: &Bary, bz: &Bary) -> bool {
    let v = bx.argmax();
    let ux = 1.0 - bx.0[v];
    let uz = 1.0 - bz.0[v];
    if ux <= BARY_TOL {
        // x is the vertex itself, whose region is {x}
        return uz <= BARY_TOL;
    }
    match r {
        ProximityParam::Infinity => true,
        ProximityParam::Finite(r) => uz <= r * ux,
    }
}

/// Is `z` in the proportional-edge proximity region of `x`?
pub fn in_proximity_region(tri: &Triangle, r: ProximityParam, x: Point, z: Point) -> Result<bool> {
    let bx = tri.to_barycentric(x);
    if !bx.is_inside() {
        return Err(Error::domain("x lies outside the triangle"));
    }
    let bz = tri.to_barycentric(z);
    if !bz.is_inside() {
        return Ok(false);
    }
    Ok(in_proximity_bary(r, &bx, &bz))
}

/// Is `z` in the Γ1-region of `x`, i.e. is `x` in the proximity region of `z`?
pub fn in_gamma1_region(tri: &Triangle, r: ProximityParam, x: Point, z: Point) -> Result<bool> {
    let bz = tri.to_barycentric(z);
    if !bz.is_inside() {
        return Err(Error::domain("z lies outside the triangle"));
    }
    in_proximity_region(tri, r, z, x)
}

/// An invertible affine map `p -> A p + t`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AffineMap {
    pub linear: [[f64; 2]; 2],
    pub translation: [f64; 2],
}

impl AffineMap {
    pub const IDENTITY: AffineMap = AffineMap {
        linear: [[1.0, 0.0], [0.0, 1.0]],
        translation: [0.0, 0.0],
    };

    pub fn new(linear: [[f64; 2]; 2], translation: [f64; 2]) -> Result<Self> {
        let m = AffineMap { linear, translation };
        if m.det() == 0.0 || !m.det().is_finite() {
            return Err(Error::geometry("affine map is singular"));
        }
        Ok(m)
    }

    pub fn det(&self) -> f64 {
        let a = &self.linear;
        a[0][0] * a[1][1] - a[0][1] * a[1][0]
    }

    pub fn apply(&self, p: Point) -> Point {
        let a = &self.linear;
        Point::new(
            a[0][0] * p.x + a[0][1] * p.y + self.translation[0],
            a[1][0] * p.x + a[1][1] * p.y + self.translation[1],
        )
    }

    /// `self ∘ inner`: apply `inner` first.
    pub fn compose(&self, inner: &AffineMap) -> AffineMap {
        let a = &self.linear;
        let b = &inner.linear;
        let mut m = [[0.0; 2]; 2];
        for i in 0..2 {
            for j in 0..2 {
                m[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
            }
        }
        let t = self.apply(Point::new(inner.translation[0], inner.translation[1]));
        AffineMap {
            linear: m,
            translation: [t.x, t.y],
        }
    }

    pub fn inverse(&self) -> AffineMap {
        let a = &self.linear;
        let d = self.det();
        let m = [[a[1][1] / d, -a[0][1] / d], [-a[1][0] / d, a[0][0] / d]];
        let t = self.translation;
        AffineMap {
            linear: m,
            translation: [-(m[0][0] * t[0] + m[0][1] * t[1]), -(m[1][0] * t[0] + m[1][1] * t[1])],
        }
    }
}

/// Affine map taking `tri` onto the equilateral triangle.
///
/// The longest edge goes to `[0,1] x {0}` by a rigid motion and a scaling, a
/// reflection puts the third vertex at `(c1, c2)` with `c1 <= 1/2` and
/// `c2 > 0`, and the shear `(u, v) -> (u + (1 - 2c1) v / (2 c2), sqrt(3) v / (2 c2))`
/// finishes the job. Affine maps preserve uniformity.
pub fn standardize(tri: &Triangle) -> Result<AffineMap> {
    let v = tri.vertices();
    let lens = [dist2(v[1], v[2]), dist2(v[0], v[2]), dist2(v[0], v[1])];
    // longest edge is opposite vertex k
    let k = (0..3).fold(0, |best, i| if lens[i] > lens[best] { i } else { best });
    let (a, b, c) = (v[(k + 1) % 3], v[(k + 2) % 3], v[k]);

    let len = lens[k].sqrt();
    let (cos, sin) = ((b.x - a.x) / len, (b.y - a.y) / len);
    // translate a to the origin, rotate ab onto the x-axis, scale to unit length
    let rot = AffineMap::new([[cos / len, sin / len], [-sin / len, cos / len]], [0.0, 0.0])?;
    let mut m = rot.compose(&AffineMap::new([[1.0, 0.0], [0.0, 1.0]], [-a.x, -a.y])?);

    let mut cc = m.apply(c);
    if cc.y < 0.0 {
        m = AffineMap::new([[1.0, 0.0], [0.0, -1.0]], [0.0, 0.0])?.compose(&m);
        cc = m.apply(c);
    }
    if cc.x > 0.5 {
        m = AffineMap::new([[-1.0, 0.0], [0.0, 1.0]], [1.0, 0.0])?.compose(&m);
        cc = m.apply(c);
    }
    let (c1, c2) = (cc.x, cc.y);
    let phi = AffineMap::new([[1.0, (1.0 - 2.0 * c1) / (2.0 * c2)], [0.0, SQRT3 / (2.0 * c2)]], [0.0, 0.0])?;
    Ok(phi.compose(&m))
}

/// A d-simplex given by d+1 affinely independent vertices in R^d.
#[derive(Debug, Clone, PartialEq)]
pub struct Simplex {
    vertices: Vec<Vec<f64>>,
    inv: DMatrix<f64>,
}

impl Simplex {
    pub fn new(vertices: Vec<Vec<f64>>) -> Result<Self> {
        let d = vertices.len().saturating_sub(1);
        if d < 2 {
            return Err(Error::geometry("a simplex needs d >= 2"));
        }
        if vertices.iter().any(|v| v.len() != d || v.iter().any(|c| !c.is_finite())) {
            return Err(Error::geometry(format!("expected {} finite points in R^{d}", d + 1)));
        }
        let e = DMatrix::from_fn(d, d, |i, j| vertices[j + 1][i] - vertices[0][i]);
        let scale = e.iter().fold(0.0f64, |m, x| m.max(x.abs()));
        let det = e.determinant();
        if det.abs() <= DEGENERACY_TOL * scale.powi(d as i32) {
            return Err(Error::geometry("simplex vertices are affinely dependent"));
        }
        let inv = e.try_inverse().ok_or_else(|| Error::geometry("simplex is singular"))?;
        Ok(Simplex { vertices, inv })
    }

    /// The regular tetrahedron with base `(0,0,0), (1,0,0), (1/2, sqrt(3)/2, 0)`.
    pub fn regular_tetrahedron() -> Self {
        Simplex::new(vec![
            vec![0.0, 0.0, 0.0],
            vec![1.0, 0.0, 0.0],
            vec![0.5, SQRT3 / 2.0, 0.0],
            vec![0.5, SQRT3 / 6.0, (2.0f64 / 3.0).sqrt()],
        ])
        .expect("regular tetrahedron is valid")
    }

    pub fn dim(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn vertices(&self) -> &[Vec<f64>] {
        &self.vertices
    }

    pub fn barycentric(&self, p: &[f64]) -> Result<Vec<f64>> {
        let d = self.dim();
        if p.len() != d {
            return Err(Error::domain(format!("point has dimension {}, expected {d}", p.len())));
        }
        let rhs = DVector::from_fn(d, |i, _| p[i] - self.vertices[0][i]);
        let lam = &self.inv * rhs;
        let mut b = Vec::with_capacity(d + 1);
        b.push(1.0 - lam.sum());
        b.extend(lam.iter());
        Ok(b)
    }

    pub fn point_from_barycentric(&self, b: &[f64]) -> Vec<f64> {
        let d = self.dim();
        (0..d)
            .map(|i| b.iter().zip(&self.vertices).map(|(w, v)| w * v[i]).sum())
            .collect()
    }
}

/// Proximity membership in a d-simplex; same rule as the planar case.
pub fn simplex_in_proximity_region(s: &Simplex, r: ProximityParam, x: &[f64], z: &[f64]) -> Result<bool> {
    let bx = s.barycentric(x)?;
    if bx.iter().any(|&b| b < -BARY_TOL) {
        return Err(Error::domain("x lies outside the simplex"));
    }
    let bz = s.barycentric(z)?;
    if bz.iter().any(|&b| b < -BARY_TOL) {
        return Ok(false);
    }
    let v = (0..bx.len()).fold(0, |m, i| if bx[i] > bx[m] { i } else { m });
    let ux = 1.0 - bx[v];
    let uz = 1.0 - bz[v];
    if ux <= BARY_TOL {
        return Ok(uz <= BARY_TOL);
    }
    Ok(match r {
        ProximityParam::Infinity => true,
        ProximityParam::Finite(r) => uz <= r * ux,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;

    fn te() -> Triangle {
        Triangle::equilateral()
    }

    fn r(x: f64) -> ProximityParam {
        ProximityParam::new(x).unwrap()
    }

    #[test]
    fn barycentric_of_landmarks() {
        let t = te();
        let c = t.to_barycentric(Point::new(0.5, SQRT3 / 6.0));
        for b in c.0 {
            assert_abs_diff_eq!(b, 1.0 / 3.0, epsilon = 1e-12);
        }
        let v = t.to_barycentric(Point::new(1.0, 0.0));
        assert_abs_diff_eq!(v.0[1], 1.0, epsilon = 1e-12);
        let m = t.to_barycentric(Point::new(0.25, SQRT3 / 4.0));
        assert_abs_diff_eq!(m.0[0], 0.5, epsilon = 1e-12);
        assert_abs_diff_eq!(m.0[1], 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(m.0[2], 0.5, epsilon = 1e-12);
    }

    #[test]
    fn collinear_triangle_rejected() {
        let e = Triangle::new(Point::new(0.0, 0.0), Point::new(1.0, 1.0), Point::new(2.0, 2.0));
        assert!(matches!(e, Err(Error::Geometry(_))));
    }

    #[test]
    fn clockwise_input_is_reordered() {
        let t = Triangle::new(Point::new(0.0, 0.0), Point::new(0.0, 1.0), Point::new(1.0, 0.0)).unwrap();
        assert!(t.area() > 0.0);
    }

    #[test]
    fn vertex_regions() {
        let t = te();
        assert_eq!(t.vertex_region(Point::new(0.1, 0.05)).unwrap(), 0);
        assert_eq!(t.vertex_region(t.centroid()).unwrap(), 0);
        assert_eq!(t.vertex_region(Point::new(0.9, 0.05)).unwrap(), 1);
        assert!(t.vertex_region(Point::new(2.0, 2.0)).is_err());
    }

    #[test]
    fn proximity_examples() {
        let t = te();
        let x = Point::new(0.5, SQRT3 / 6.0);
        let z = Point::new(0.7, 0.3);
        // 1 - b1(z) ~ 0.8732 exceeds 1.2 * (1 - 1/3) = 0.8
        assert!(!in_proximity_region(&t, r(1.2), x, z).unwrap());
        assert!(!in_gamma1_region(&t, r(1.2), z, x).unwrap());
        assert!(in_proximity_region(&t, ProximityParam::INFINITY, x, z).unwrap());
        assert!(in_proximity_region(&t, r(1.0), x, x).unwrap());
    }

    #[test]
    fn vertex_point_has_singleton_region() {
        let t = te();
        let y = Point::new(1.0, 0.0);
        let z = Point::new(0.5, 0.2);
        assert!(in_proximity_region(&t, r(1.0), y, y).unwrap());
        assert!(!in_proximity_region(&t, r(50.0), y, z).unwrap());
        assert!(!in_proximity_region(&t, ProximityParam::INFINITY, y, z).unwrap());
    }

    #[test]
    fn outside_points() {
        let t = te();
        let out = Point::new(-1.0, 0.0);
        assert!(in_proximity_region(&t, r(2.0), out, t.centroid()).is_err());
        assert!(!in_proximity_region(&t, r(2.0), t.centroid(), out).unwrap());
    }

    #[test]
    fn parse_r_tokens() {
        assert_eq!("4/3".parse::<ProximityParam>().unwrap(), r(4.0 / 3.0));
        assert_eq!("sqrt2".parse::<ProximityParam>().unwrap(), r(2f64.sqrt()));
        assert_eq!("sqrt(2)".parse::<ProximityParam>().unwrap(), r(2f64.sqrt()));
        assert_eq!("inf".parse::<ProximityParam>().unwrap(), ProximityParam::Infinity);
        assert_eq!("1.5".parse::<ProximityParam>().unwrap(), r(1.5));
        assert!("0.5".parse::<ProximityParam>().is_err());
        assert!("abc".parse::<ProximityParam>().is_err());
        assert!("1/0".parse::<ProximityParam>().is_err());
    }

    #[test]
    fn r_serde_roundtrip() {
        for p in [r(1.5), ProximityParam::Infinity] {
            let s = serde_json::to_string(&p).unwrap();
            assert_eq!(serde_json::from_str::<ProximityParam>(&s).unwrap(), p);
        }
    }

    fn assert_maps_to_te(tri: &Triangle) {
        let m = standardize(tri).unwrap();
        let target = te().vertices();
        let mut hit = [false; 3];
        for v in tri.vertices() {
            let w = m.apply(v);
            let j = (0..3)
                .find(|&j| (w.x - target[j].x).abs() < 1e-10 && (w.y - target[j].y).abs() < 1e-10)
                .unwrap_or_else(|| panic!("vertex {v:?} mapped to {w:?}"));
            hit[j] = true;
        }
        assert_eq!(hit, [true; 3]);
    }

    #[test]
    fn standardize_examples() {
        assert_maps_to_te(&te());
        let p = |x, y| Point::new(x, y);
        assert_maps_to_te(&Triangle::new(p(0.0, 0.0), p(1.0, 0.0), p(0.5, 0.3)).unwrap());
        assert_maps_to_te(&Triangle::new(p(2.0, 1.0), p(4.0, 1.0), p(3.0, 2.0)).unwrap());
        assert_maps_to_te(&Triangle::new(p(0.0, 0.0), p(3.0, 0.5), p(2.7, 1.9)).unwrap());
    }

    #[test]
    fn affine_inverse_roundtrip() {
        let t = Triangle::new(Point::new(0.3, -1.0), Point::new(4.0, 1.0), Point::new(-2.0, 2.0)).unwrap();
        let m = standardize(&t).unwrap();
        let back = m.inverse().compose(&m);
        let q = back.apply(Point::new(0.7, -0.2));
        assert_abs_diff_eq!(q.x, 0.7, epsilon = 1e-12);
        assert_abs_diff_eq!(q.y, -0.2, epsilon = 1e-12);
    }

    #[test]
    fn simplex_basics() {
        let s = Simplex::regular_tetrahedron();
        let v = s.vertices().to_vec();
        for i in 0..4 {
            for j in 0..i {
                let d: f64 = (0..3).map(|k| (v[i][k] - v[j][k]).powi(2)).sum();
                assert_abs_diff_eq!(d, 1.0, epsilon = 1e-12);
            }
        }
        let x = s.point_from_barycentric(&[0.4, 0.3, 0.2, 0.1]);
        let b = s.barycentric(&x).unwrap();
        assert_abs_diff_eq!(b[0], 0.4, epsilon = 1e-12);
        assert!(simplex_in_proximity_region(&s, r(1.0), &x, &x).unwrap());
        let z = s.point_from_barycentric(&[0.1, 0.3, 0.3, 0.3]);
        assert!(simplex_in_proximity_region(&s, ProximityParam::INFINITY, &x, &z).unwrap());
        assert!(Simplex::new(vec![vec![0.0, 0.0], vec![1.0, 1.0], vec![2.0, 2.0]]).is_err());
    }

    #[test]
    fn two_dim_simplex_matches_triangle() {
        let t = te();
        let s = Simplex::new(t.vertices().iter().map(|p| vec![p.x, p.y]).collect()).unwrap();
        let x = Point::new(0.3, 0.2);
        for z in [Point::new(0.6, 0.3), Point::new(0.45, 0.1), Point::new(0.5, 0.7)] {
            for rr in [1.0, 1.3, 2.0] {
                assert_eq!(
                    in_proximity_region(&t, r(rr), x, z).unwrap(),
                    simplex_in_proximity_region(&s, r(rr), &[x.x, x.y], &[z.x, z.y]).unwrap()
                );
            }
        }
    }

    fn bary_strategy() -> impl Strategy<Value = Bary> {
        (0.0..1.0f64, 0.0..1.0f64).prop_map(|(u, v)| {
            let (u, v) = if u + v > 1.0 { (1.0 - u, 1.0 - v) } else { (u, v) };
            Bary([1.0 - u - v, u, v])
        })
    }

    proptest! {
        #[test]
        fn nesting_in_r(bx in bary_strategy(), bz in bary_strategy(), r1 in 1.0..5.0f64, dr in 0.0..5.0f64) {
            if in_proximity_bary(r(r1), &bx, &bz) {
                prop_assert!(in_proximity_bary(r(r1 + dr), &bx, &bz));
                prop_assert!(in_proximity_bary(ProximityParam::INFINITY, &bx, &bz));
            }
        }

        #[test]
        fn gamma1_is_reflection(bx in bary_strategy(), bz in bary_strategy(), rr in 1.0..4.0f64) {
            let t = te();
            let (x, z) = (t.from_barycentric(&bx), t.from_barycentric(&bz));
            prop_assert_eq!(
                in_gamma1_region(&t, r(rr), x, z).unwrap(),
                in_proximity_region(&t, r(rr), z, x).unwrap()
            );
        }

        #[test]
        fn reconstruction(bx in bary_strategy(), ax in -5.0..5.0f64, ay in -5.0..5.0f64, bxp in -5.0..5.0f64, by in -5.0..5.0f64) {
            let Ok(t) = Triangle::new(Point::new(ax, ay), Point::new(bxp, by), Point::new(0.3, 7.0)) else {
                return Ok(());
            };
            let p = t.from_barycentric(&bx);
            let b = t.to_barycentric(p);
            let q = t.from_barycentric(&b);
            prop_assert!((p.x - q.x).abs() < 1e-12 && (p.y - q.y).abs() < 1e-12);
            prop_assert!((b.sum() - 1.0).abs() < 1e-12);
        }

        #[test]
        fn argmax_stable_under_small_nudge(bx in bary_strategy()) {
            let t = te();
            let v = bx.argmax();
            let mut sorted = bx.0;
            sorted.sort_by(|a, b| b.partial_cmp(a).unwrap());
            prop_assume!(sorted[0] - sorted[1] > 1e-6);
            let p = t.from_barycentric(&bx);
            let y = t.vertices()[v];
            let (dx, dy) = (y.x - p.x, y.y - p.y);
            let n = (dx * dx + dy * dy).sqrt().max(1e-300);
            let q = Point::new(p.x + 5e-10 * dx / n, p.y + 5e-10 * dy / n);
            prop_assert_eq!(t.vertex_region(q).unwrap(), v);
        }

        #[test]
        fn tetrahedron_monotone_in_r(w in proptest::collection::vec(0.01..1.0f64, 8)) {
            let s = Simplex::regular_tetrahedron();
            let norm = |v: &[f64]| { let t: f64 = v.iter().sum(); v.iter().map(|x| x / t).collect::<Vec<_>>() };
            let x = s.point_from_barycentric(&norm(&w[..4]));
            let z = s.point_from_barycentric(&norm(&w[4..]));
            let mut prev = false;
            for k in 0..60 {
                let now = simplex_in_proximity_region(&s, r(1.0 + 0.1 * k as f64), &x, &z).unwrap();
                prop_assert!(!prev || now);
                prev = now;
            }
        }
    }
}
