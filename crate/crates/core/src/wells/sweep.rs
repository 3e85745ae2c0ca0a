use std::io::Write;

use super::eigen::{eigenstate, interference_term};
use super::pair::{probability_decomposition_residual, Grid, TwoParticleState};
use super::quadrature::Quadrature;
use super::well::{Depth, WellSpec};
use crate::error::{Error, Result};

pub const CSV_HEADER: [&str; 4] = ["separation", "depth", "interference", "residual"];

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SweepRow {
    pub separation: f64,
    pub depth: Depth,
    pub interference: f64,
    pub residual: f64,
}

/// Interference term and decomposition residual for every
/// (separation, depth) combination, separation-major.
///
/// The first well stays where `base[0]` puts it; the second is moved to
/// `base[0].center + separation`. Both wells take each depth in turn and
/// state `n` is used in both.
pub fn separation_sweep(
    base: &[WellSpec; 2],
    separations: &[f64],
    depths: &[Depth],
    n: u32,
    quad: &Quadrature,
    grid: &Grid,
) -> Result<Vec<SweepRow>> {
    if separations.iter().any(|s| !(s.is_finite() && *s > 0.0)) {
        return Err(Error::domain("separations must be positive"));
    }
    if separations.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::domain("separations must be strictly increasing"));
    }
    let mut rows = Vec::with_capacity(separations.len() * depths.len());
    for &separation in separations {
        for &depth in depths {
            let left = base[0].with_depth(depth);
            let right = base[1]
                .with_depth(depth)
                .with_center(base[0].center + separation);
            let psi1 = eigenstate(&left, n)?;
            let psi2 = eigenstate(&right, n)?;
            let interference = interference_term(&psi1, &psi2, quad)?;
            let pair = TwoParticleState::antisymmetric(psi1, psi2);
            let residual = probability_decomposition_residual(&pair, grid)?;
            rows.push(SweepRow {
                separation,
                depth,
                interference,
                residual,
            });
        }
    }
    Ok(rows)
}

/// Shortest round-trip form, in exponent notation for very small or large
/// magnitudes.
fn number(x: f64) -> String {
    let m = x.abs();
    if m == 0.0 || (1e-4..1e16).contains(&m) {
        x.to_string()
    } else {
        format!("{x:e}")
    }
}

/// Write rows as CSV with the fixed header `separation,depth,interference,residual`.
pub fn write_csv<W: Write>(rows: &[SweepRow], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER)?;
    for r in rows {
        w.write_record([
            number(r.separation),
            r.depth.to_string(),
            number(r.interference),
            number(r.residual),
        ])?;
    }
    w.flush()?;
    Ok(())
}
