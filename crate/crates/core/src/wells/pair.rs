use std::f64::consts::FRAC_1_SQRT_2;

use super::eigen::Eigenstate;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Symmetry {
    Antisymmetric,
    Symmetric,
}

/// `ψ₁₂(a, b) = (ψ₁(a)ψ₂(b) ∓ ψ₁(b)ψ₂(a)) / √2`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TwoParticleState {
    left: Eigenstate,
    right: Eigenstate,
    symmetry: Symmetry,
}

impl TwoParticleState {
    pub fn new(left: Eigenstate, right: Eigenstate, symmetry: Symmetry) -> Self {
        TwoParticleState {
            left,
            right,
            symmetry,
        }
    }

    pub fn antisymmetric(left: Eigenstate, right: Eigenstate) -> Self {
        Self::new(left, right, Symmetry::Antisymmetric)
    }

    pub fn left(&self) -> &Eigenstate {
        &self.left
    }

    pub fn right(&self) -> &Eigenstate {
        &self.right
    }

    pub fn symmetry(&self) -> Symmetry {
        self.symmetry
    }

    /// The two product terms `ψ₁(a)ψ₂(b)` and `ψ₁(b)ψ₂(a)`.
    fn products(&self, a: f64, b: f64) -> (f64, f64) {
        (
            self.left.value(a) * self.right.value(b),
            self.left.value(b) * self.right.value(a),
        )
    }

    pub fn evaluate(&self, a: f64, b: f64) -> f64 {
        let (direct, exchanged) = self.products(a, b);
        match self.symmetry {
            Symmetry::Antisymmetric => FRAC_1_SQRT_2 * (direct - exchanged),
            Symmetry::Symmetric => FRAC_1_SQRT_2 * (direct + exchanged),
        }
    }

    pub fn density(&self, a: f64, b: f64) -> f64 {
        self.evaluate(a, b).powi(2)
    }

    /// Joint support of both single-particle states.
    pub fn window(&self) -> (f64, f64) {
        let (l0, l1) = self.left.support();
        let (r0, r1) = self.right.support();
        (l0.min(r0), l1.max(r1))
    }

    /// `∫∫ |ψ₁₂(a, b)|² da db` by composite Simpson on a product grid,
    /// `panels` per smooth piece in each coordinate.
    pub fn density_integral(&self, panels: usize) -> f64 {
        let mut cuts = self.left.breakpoints();
        cuts.extend(self.right.breakpoints());
        cuts.sort_by(f64::total_cmp);
        cuts.dedup();
        let panels = panels.max(1).div_ceil(2) * 2;
        let mut nodes = Vec::new();
        let mut weights = Vec::new();
        for w in cuts.windows(2) {
            let (lo, hi) = (w[0], w[1]);
            let h = (hi - lo) / panels as f64;
            for i in 0..=panels {
                let c = if i == 0 || i == panels {
                    1.0
                } else if i % 2 == 1 {
                    4.0
                } else {
                    2.0
                };
                nodes.push(lo + h * i as f64);
                weights.push(c * h / 3.0);
            }
        }
        let mut total = 0.0;
        for (&a, &wa) in nodes.iter().zip(&weights) {
            for (&b, &wb) in nodes.iter().zip(&weights) {
                total += wa * wb * self.density(a, b);
            }
        }
        total
    }
}

/// A uniform `points × points` grid over the joint support of a state.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Grid {
    pub points: usize,
}

impl Default for Grid {
    fn default() -> Self {
        Grid { points: 200 }
    }
}

impl Grid {
    fn nodes(&self, (lo, hi): (f64, f64)) -> Vec<f64> {
        match self.points {
            0 => Vec::new(),
            1 => vec![0.5 * (lo + hi)],
            n => (0..n)
                .map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64)
                .collect(),
        }
    }
}

/// Largest failure over the grid of the separated-wells probability split
/// `|ψ₁₂(a,b)|² = ½|ψ₁(a)ψ₂(b)|² + ½|ψ₁(b)ψ₂(a)|²`.
///
/// The pointwise difference is the cross term `ψ₁(a)ψ₂(b)ψ₁(b)ψ₂(a)`, so the
/// residual vanishes exactly when no point lies in both supports.
pub fn probability_decomposition_residual(s: &TwoParticleState, grid: &Grid) -> Result<f64> {
    if s.symmetry != Symmetry::Antisymmetric {
        return Err(Error::domain("the decomposition residual is defined for antisymmetric states"));
    }
    let nodes = grid.nodes(s.window());
    let mut worst: f64 = 0.0;
    for &a in &nodes {
        for &b in &nodes {
            let (direct, exchanged) = s.products(a, b);
            let split = 0.5 * direct * direct + 0.5 * exchanged * exchanged;
            worst = worst.max((s.density(a, b) - split).abs());
        }
    }
    Ok(worst)
}
