use crate::error::{Error, Result};

/// Adaptive composite Simpson integration.
///
/// Each smooth piece between consecutive breakpoints is split into
/// `initial_panels` panels, which are then refined adaptively. A panel is
/// accepted once its Richardson error estimate drops below its share of
/// `min(abs_tol, rel_tol * ∫|f|)`, so integrands that are tiny everywhere
/// are still resolved to relative precision.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Quadrature {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub initial_panels: usize,
    pub max_depth: u32,
}

impl Default for Quadrature {
    fn default() -> Self {
        Quadrature {
            abs_tol: 1e-10,
            rel_tol: 1e-12,
            initial_panels: 8,
            max_depth: 48,
        }
    }
}

impl Quadrature {
    /// Same settings with twice as many initial panels.
    pub fn refined(self) -> Self {
        Quadrature {
            initial_panels: self.initial_panels * 2,
            ..self
        }
    }

    /// Integrate `f` over `[points[0], points[last]]`, treating every entry of
    /// `points` as a place where `f` may fail to be smooth.
    pub fn integrate<F: Fn(f64) -> f64>(&self, f: F, points: &[f64]) -> Result<f64> {
        let mut edges: Vec<f64> = points.to_vec();
        edges.sort_by(f64::total_cmp);
        edges.dedup();
        if edges.iter().any(|x| !x.is_finite()) {
            return Err(Error::Numeric("integration bounds must be finite".into()));
        }
        let panels: Vec<(f64, f64)> = edges
            .windows(2)
            .flat_map(|w| {
                let (a, b) = (w[0], w[1]);
                let m = self.initial_panels.max(1);
                let h = (b - a) / m as f64;
                (0..m).map(move |i| {
                    let lo = a + h * i as f64;
                    let hi = if i + 1 == m { b } else { a + h * (i + 1) as f64 };
                    (lo, hi)
                })
            })
            .collect();
        let total: f64 = panels.iter().map(|(a, b)| b - a).sum();
        if total == 0.0 {
            return Ok(0.0);
        }

        let mut coarse = Vec::with_capacity(panels.len());
        let mut scale = 0.0;
        for &(a, b) in &panels {
            let (fa, fm, fb) = (f(a), f(0.5 * (a + b)), f(b));
            scale += (b - a) / 6.0 * (fa.abs() + 4.0 * fm.abs() + fb.abs());
            coarse.push((fa, fm, fb));
        }
        let tol = self.abs_tol.min(self.rel_tol * scale);

        let mut sum = 0.0;
        for (&(a, b), &(fa, fm, fb)) in panels.iter().zip(&coarse) {
            let whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
            let share = tol * (b - a) / total;
            sum += self.refine(&f, a, b, fa, fm, fb, whole, share, 0);
        }
        if sum.is_finite() {
            Ok(sum)
        } else {
            Err(Error::Numeric(format!("integral is not finite ({sum})")))
        }
    }

    #[allow(clippy::too_many_arguments)]
    fn refine<F: Fn(f64) -> f64>(
        &self,
        f: &F,
        a: f64,
        b: f64,
        fa: f64,
        fm: f64,
        fb: f64,
        whole: f64,
        tol: f64,
        depth: u32,
    ) -> f64 {
        let m = 0.5 * (a + b);
        let (lm, rm) = (0.5 * (a + m), 0.5 * (m + b));
        let (flm, frm) = (f(lm), f(rm));
        let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
        let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
        let both = left + right;
        let err = both - whole;
        if depth >= self.max_depth || err.abs() <= 15.0 * tol || !err.is_finite() {
            return both + err / 15.0;
        }
        self.refine(f, a, m, fa, flm, fm, left, 0.5 * tol, depth + 1)
            + self.refine(f, m, b, fm, frm, fb, right, 0.5 * tol, depth + 1)
    }
}
