//! Two-column plot data: kernel density estimates, histograms and curves.

use std::io;
use std::path::Path;

const KDE_POINTS: usize = 256;

/// Silverman's rule of thumb, `0.9 min(sd, IQR / 1.34) n^(-1/5)`.
pub fn silverman_bandwidth(data: &[f64]) -> f64 {
    let n = data.len() as f64;
    if data.len() < 2 {
        return 0.0;
    }
    let mean = data.iter().sum::<f64>() / n;
    let sd = (data.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (n - 1.0)).sqrt();
    let mut v = data.to_vec();
    v.sort_by(f64::total_cmp);
    let q = |p: f64| {
        let h = p * (n - 1.0);
        let (lo, hi) = (h.floor() as usize, h.ceil() as usize);
        v[lo] + (h - lo as f64) * (v[hi] - v[lo])
    };
    let iqr = q(0.75) - q(0.25);
    let spread = if iqr > 0.0 { sd.min(iqr / 1.34) } else { sd };
    0.9 * spread * n.powf(-0.2)
}

/// Gaussian kernel density estimate on an even grid covering the data
/// plus three bandwidths on each side. Empty when the data has no spread.
pub fn gaussian_kde(data: &[f64]) -> Vec<(f64, f64)> {
    let h = silverman_bandwidth(data);
    if !(h > 0.0) {
        return Vec::new();
    }
    let lo = data.iter().copied().fold(f64::INFINITY, f64::min) - 3.0 * h;
    let hi = data.iter().copied().fold(f64::NEG_INFINITY, f64::max) + 3.0 * h;
    let norm = 1.0 / (data.len() as f64 * h * (2.0 * std::f64::consts::PI).sqrt());
    (0..KDE_POINTS)
        .map(|k| {
            let x = lo + (hi - lo) * k as f64 / (KDE_POINTS - 1) as f64;
            let y: f64 = data.iter().map(|d| (-0.5 * ((x - d) / h).powi(2)).exp()).sum();
            (x, y * norm)
        })
        .collect()
}

/// Relative frequency of each distinct value. Densities of `n` points only
/// take values on a grid of step `2 / (n(n-1))`, so this is the natural
/// histogram.
pub fn frequencies(data: &[f64]) -> Vec<(f64, f64)> {
    let mut v = data.to_vec();
    v.sort_by(f64::total_cmp);
    let mut out: Vec<(f64, f64)> = Vec::new();
    for x in v {
        match out.last_mut() {
            Some(last) if last.0 == x => last.1 += 1.0,
            _ => out.push((x, 1.0)),
        }
    }
    let n = data.len() as f64;
    out.iter_mut().for_each(|p| p.1 /= n);
    out
}

pub fn write_columns(path: &Path, header: (&str, &str), rows: &[(f64, f64)]) -> io::Result<()> {
    let mut s = format!("{}\t{}\n", header.0, header.1);
    for (x, y) in rows {
        s.push_str(&format!("{x}\t{y}\n"));
    }
    std::fs::write(path, s)
}

/// Writes `<stem>_kde.tsv` and `<stem>_freq.tsv` for a sample of densities.
pub fn write_density_plots(dir: &Path, stem: &str, data: &[f64]) -> io::Result<Vec<String>> {
    let mut written = Vec::new();
    let kde = gaussian_kde(data);
    if !kde.is_empty() {
        let name = format!("{stem}_kde.tsv");
        write_columns(&dir.join(&name), ("rho", "density"), &kde)?;
        written.push(name);
    }
    let name = format!("{stem}_freq.tsv");
    write_columns(&dir.join(&name), ("rho", "frequency"), &frequencies(data))?;
    written.push(name);
    Ok(written)
}
