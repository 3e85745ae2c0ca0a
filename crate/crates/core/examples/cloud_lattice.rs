//! Cloud extents ordered by inclusion, and the law checker on the two
//! classic non-distributive lattices.

use qsep::lattice::{build_cloud_lattice, FiniteLattice, LatticeReport};
use qsep::qset::{Qset, Universe};

fn main() -> qsep::Result<()> {
    let u = Universe::builder()
        .quantum("e", 3)
        .quantum("p", 2)
        .classical("person", ["Paul", "Peter"])
        .build()?;
    let cl = build_cloud_lattice(&Qset::ambient(&u), 12)?;
    println!("{} cloud extents:", cl.extents.len());
    for e in &cl.extents {
        println!("  {e}");
    }
    println!("cloud lattice: {:?}", LatticeReport::of(&cl.lattice));

    for (name, l) in [("N5", FiniteLattice::pentagon()), ("M3", FiniteLattice::diamond())] {
        println!("{name}: {:?}", LatticeReport::of(&l));
    }
    Ok(())
}
