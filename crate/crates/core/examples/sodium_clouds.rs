//! Six sodium atoms as m-atoms: every non-empty core has the same cloud.

use qsep::cloud::{cloud, clouds_intersect};
use qsep::qset::{Qset, Universe};

fn main() -> qsep::Result<()> {
    let u = Universe::builder().quantum("Na", 6).build()?;
    let ambient = Qset::ambient(&u);
    println!("ambient {ambient}, qcard {}", ambient.qcard());

    for k in 0..=6 {
        let core = Qset::empty(&u).with_count("Na", k)?;
        let c = cloud(&ambient, &core)?;
        println!("core {:<8} cloud {}", core.to_string(), c.extent());
    }

    let parts = ambient.disjoint_partition(&[3, 3])?;
    let (a, b) = (cloud(&ambient, &parts[0])?, cloud(&ambient, &parts[1])?);
    println!(
        "disjoint cores {} and {}: clouds intersect = {}",
        parts[0],
        parts[1],
        clouds_intersect(&a, &b)?
    );
    Ok(())
}
