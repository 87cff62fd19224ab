//! Point files and numeric tokens.

use std::fmt;
use std::path::{Path, PathBuf};

use pcd_density::geom2d::{Point, ProximityParam, Triangle};

/// A malformed input, located by file and line where possible.
#[derive(Debug, Clone, PartialEq)]
pub struct ParseError {
    pub file: Option<PathBuf>,
    pub line: Option<usize>,
    pub message: String,
}

impl ParseError {
    pub fn new(message: impl Into<String>) -> Self {
        ParseError { file: None, line: None, message: message.into() }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (&self.file, self.line) {
            (Some(p), Some(l)) => write!(f, "{}:{l}: {}", p.display(), self.message),
            (Some(p), None) => write!(f, "{}: {}", p.display(), self.message),
            (None, Some(l)) => write!(f, "line {l}: {}", self.message),
            (None, None) => f.write_str(&self.message),
        }
    }
}

fn split_fields(line: &str) -> Vec<&str> {
    line.split(|c: char| c == ',' || c == ';' || c.is_whitespace()).filter(|s| !s.is_empty()).collect()
}

/// Parses delimited text with two numeric columns per row.
///
/// Columns may be separated by commas, semicolons, tabs or spaces. Blank
/// lines and lines starting with `#` are skipped, and a first non-comment
/// row that is not numeric is taken as a header.
pub fn parse_points(text: &str) -> Result<Vec<Point>, ParseError> {
    let mut out = Vec::new();
    let mut seen_row = false;
    for (k, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let at = |msg: String| ParseError { file: None, line: Some(k + 1), message: msg };
        let fields = split_fields(line);
        let nums: Vec<Option<f64>> = fields.iter().map(|f| f.parse::<f64>().ok()).collect();
        if !seen_row && nums.iter().all(Option::is_none) {
            seen_row = true;
            continue;
        }
        seen_row = true;
        if fields.len() != 2 {
            return Err(at(format!("expected 2 columns, found {}", fields.len())));
        }
        let mut xy = [0.0; 2];
        for (i, (f, v)) in fields.iter().zip(&nums).enumerate() {
            match v {
                Some(v) if v.is_finite() => xy[i] = *v,
                Some(_) => return Err(at(format!("column {} is not finite: {f:?}", i + 1))),
                None => return Err(at(format!("column {} is not a number: {f:?}", i + 1))),
            }
        }
        out.push(Point::new(xy[0], xy[1]));
    }
    Ok(out)
}

pub fn read_points(path: &Path, expect_n: Option<usize>) -> Result<Vec<Point>, ParseError> {
    let text = std::fs::read_to_string(path).map_err(|e| ParseError {
        file: Some(path.to_path_buf()),
        line: None,
        message: e.to_string(),
    })?;
    let pts = parse_points(&text).map_err(|e| ParseError { file: Some(path.to_path_buf()), ..e })?;
    if pts.is_empty() {
        return Err(ParseError { file: Some(path.to_path_buf()), line: None, message: "no points".into() });
    }
    if let Some(n) = expect_n {
        if pts.len() != n {
            return Err(ParseError {
                file: Some(path.to_path_buf()),
                line: None,
                message: format!("expected {n} points, found {}", pts.len()),
            });
        }
    }
    Ok(pts)
}

pub fn write_points(path: &Path, points: &[Point]) -> std::io::Result<()> {
    let mut s = String::from("x,y\n");
    for p in points {
        s.push_str(&format!("{},{}\n", p.x, p.y));
    }
    std::fs::write(path, s)
}

/// Parses a number written as a product of decimals and `sqrtK` factors,
/// optionally divided by another such product: `0.25`, `4/3`, `sqrt2`,
/// `sqrt3/8`, `5*sqrt3/24`, `inf`.
pub fn parse_number(s: &str) -> Result<f64, String> {
    let t = s.trim().to_ascii_lowercase();
    if matches!(t.as_str(), "inf" | "infinity") {
        return Ok(f64::INFINITY);
    }
    let bad = || format!("cannot parse a number from {s:?}");
    let factor = |f: &str| -> Result<f64, String> {
        let f = f.trim();
        if let Some(rest) = f.strip_prefix("sqrt") {
            let inner = rest.trim_start_matches('(').trim_end_matches(')');
            let v: f64 = inner.parse().map_err(|_| bad())?;
            return if v >= 0.0 { Ok(v.sqrt()) } else { Err(bad()) };
        }
        // allow a coefficient glued to sqrt, as in 5sqrt3
        if let Some(i) = f.find("sqrt") {
            let (a, b) = f.split_at(i);
            let a: f64 = a.parse().map_err(|_| bad())?;
            let inner = b[4..].trim_start_matches('(').trim_end_matches(')');
            let v: f64 = inner.parse().map_err(|_| bad())?;
            return if v >= 0.0 { Ok(a * v.sqrt()) } else { Err(bad()) };
        }
        f.parse::<f64>().map_err(|_| bad())
    };
    let product = |p: &str| -> Result<f64, String> { p.split('*').map(factor).product() };
    let v = match t.split_once('/') {
        Some((a, b)) => product(a)? / product(b)?,
        None => product(&t)?,
    };
    if v.is_finite() {
        Ok(v)
    } else {
        Err(bad())
    }
}

pub fn parse_r(s: &str) -> Result<ProximityParam, String> {
    let v = parse_number(s)?;
    ProximityParam::new(v).map_err(|e| e.to_string())
}

/// `x1,y1;x2,y2;x3,y3`, or `equilateral`.
pub fn parse_triangle(s: &str) -> Result<Triangle, String> {
    if s.trim().eq_ignore_ascii_case("equilateral") {
        return Ok(Triangle::equilateral());
    }
    let verts: Vec<&str> = s.split(';').collect();
    if verts.len() != 3 {
        return Err(format!("expected three vertices separated by ';', got {s:?}"));
    }
    let mut pts = Vec::with_capacity(3);
    for v in verts {
        let (x, y) = v.split_once(',').ok_or_else(|| format!("vertex {v:?} is not of the form x,y"))?;
        pts.push(Point::new(parse_number(x)?, parse_number(y)?));
    }
    Triangle::new(pts[0], pts[1], pts[2]).map_err(|e| e.to_string())
}
