//! Born probabilities for a spin measured along z, after a rotation.

use nalgebra::{dmatrix, dvector};
use qsep::nqm::{born_probability, Borelian, Interval, Observable, C64};

fn main() -> qsep::Result<()> {
    let re = |x: f64| C64::new(x, 0.0);
    let sz = Observable::new(dmatrix![re(1.0), re(0.0); re(0.0), re(-1.0)], 1e-10)?;
    for space in &sz.spectrum().eigenspaces {
        println!("eigenvalue {:+} with multiplicity {}", space.value, space.basis.len());
    }

    let (c, s) = (0.6, 0.8);
    let psi = dvector![re(c), C64::new(0.0, s)];
    let up = Borelian::interval(Interval::closed(0.5, 1.5))?;
    let down = Borelian::interval(Interval::below(0.0))?;
    let p_up = born_probability(&psi, &sz, &up)?;
    let p_down = born_probability(&psi, &sz, &down)?;
    println!("P(up) = {p_up:.4}, P(down) = {p_down:.4}");
    println!("P(up or down) = {:.4}", born_probability(&psi, &sz, &up.disjoint_union(&down)?)?);
    println!("P(R) = {:.4}", born_probability(&psi, &sz, &Borelian::real_line())?);
    Ok(())
}
