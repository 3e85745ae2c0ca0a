//! Cloud topologies: m-atoms of one species cannot be told apart by opens,
//! labeled individuals can.

use qsep::qset::{Qset, Universe};
use qsep::topology::{generate_cloud_topology, hausdorff_report, separation_test, verify_axioms};

fn main() -> qsep::Result<()> {
    let u = Universe::builder()
        .quantum("s", 3)
        .classical("person", ["Mary", "Paul"])
        .build()?;
    let t = generate_cloud_topology(&Qset::ambient(&u), 12)?;
    println!("{} opens", t.opens().len());
    for o in t.opens() {
        println!("  {o}");
    }
    let axioms = verify_axioms(&t);
    println!("axioms hold: {} (exhaustive {})", axioms.ok, axioms.exhaustive);

    let handles = t.carrier().handles();
    let name = |h: &qsep::qset::ElementHandle| h.label().unwrap_or(h.species()).to_owned();
    for (i, p) in handles.iter().enumerate() {
        for q in &handles[i + 1..] {
            let r = separation_test(&t, p, q)?;
            println!("{} / {}: separable = {}", name(p), name(q), r.is_separable());
        }
    }
    println!("{:?}", hausdorff_report(&t));
    Ok(())
}
