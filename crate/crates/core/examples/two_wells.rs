//! Two electrons in two wells: zero interference for infinite walls, a small
//! positive one once the walls are finite.

use qsep::wells::{
    eigenstate, interference_term, probability_decomposition_residual, uncertainty_product, Grid,
    Quadrature, TwoParticleState, WellSpec,
};

fn main() -> qsep::Result<()> {
    let quad = Quadrature::default();
    let grid = Grid::default();
    let cases = [
        ("infinite", WellSpec::infinite(-2.0, 0.5), WellSpec::infinite(2.0, 0.5)),
        ("finite V0=50", WellSpec::finite(0.0, 0.5, 50.0), WellSpec::finite(2.0, 0.5, 50.0)),
    ];
    for (name, left, right) in cases {
        let (a, b) = (eigenstate(&left, 1)?, eigenstate(&right, 1)?);
        let interference = interference_term(&a, &b, &quad)?;
        let dxdp = uncertainty_product(&a, &quad)?;
        let pair = TwoParticleState::antisymmetric(a, b);
        let residual = probability_decomposition_residual(&pair, &grid)?;
        println!(
            "{name:>13}: E1 = {:.6}, dx*dp = {dxdp:.6}, interference = {interference:e}, residual = {residual:e}",
            pair.left().energy()
        );
    }
    Ok(())
}
