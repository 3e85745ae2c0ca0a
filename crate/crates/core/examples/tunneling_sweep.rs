//! Interference against separation and depth, written as CSV to stdout.

use qsep::wells::{separation_sweep, write_csv, Depth, Grid, Quadrature, WellSpec};

fn main() -> qsep::Result<()> {
    let base = [WellSpec::finite(0.0, 0.5, 1.0), WellSpec::finite(2.0, 0.5, 1.0)];
    let separations = [2.0, 2.5, 3.0, 4.0];
    let depths = [
        Depth::Finite(10.0),
        Depth::Finite(50.0),
        Depth::Finite(200.0),
        Depth::Infinite,
    ];
    let rows = separation_sweep(
        &base,
        &separations,
        &depths,
        1,
        &Quadrature::default(),
        &Grid { points: 100 },
    )?;
    write_csv(&rows, std::io::stdout().lock())
}
