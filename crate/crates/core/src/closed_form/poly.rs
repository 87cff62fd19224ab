//! Factored rational functions with exact integer coefficients.

const SQRT3: f64 = 1.732_050_807_568_877_2;

/// A univariate integer polynomial raised to a (possibly negative) power.
#[derive(Debug)]
pub(crate) struct Factor {
    /// Coefficients from the highest degree down.
    pub coeffs: &'static [i64],
    pub power: i32,
}

/// `scale * prod(factor^power)`.
#[derive(Debug)]
pub(crate) struct Branch {
    pub scale: (i64, i64),
    pub factors: &'static [Factor],
}

/// A polynomial in `(r, eps, sqrt(3))`, raised to a power.
#[derive(Debug)]
pub(crate) struct Factor2 {
    /// `(deg_r, deg_eps, deg_sqrt3, coeff)` terms.
    pub terms: &'static [(u32, u32, u32, i64)],
    pub power: i32,
}

#[derive(Debug)]
pub(crate) struct Branch2 {
    pub scale: (i64, i64),
    pub factors: &'static [Factor2],
}

#[inline]
pub(crate) fn horner(coeffs: &[i64], x: f64) -> f64 {
    coeffs.iter().fold(0.0, |acc, &c| acc * x + c as f64)
}

impl Branch {
    pub fn eval(&self, r: f64) -> f64 {
        let mut v = self.scale.0 as f64 / self.scale.1 as f64;
        for f in self.factors {
            v *= horner(f.coeffs, r).powi(f.power);
        }
        v
    }
}

impl Branch2 {
    pub fn eval(&self, r: f64, eps: f64) -> f64 {
        let mut v = self.scale.0 as f64 / self.scale.1 as f64;
        for f in self.factors {
            let p: f64 = f
                .terms
                .iter()
                .map(|&(i, j, k, c)| c as f64 * r.powi(i as i32) * eps.powi(j as i32) * SQRT3.powi(k as i32))
                .sum();
            v *= p.powi(f.power);
        }
        v
    }
}
