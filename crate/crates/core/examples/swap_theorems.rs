//! Swapping an m-atom for a fresh one changes nothing observable; swapping a
//! labeled individual always does.

use qsep::qset::{Qset, Universe};

fn main() -> qsep::Result<()> {
    let u = Universe::builder()
        .quantum("e", 4)
        .classical("person", ["Mary", "Paul", "Peter"])
        .build()?;
    let x = Qset::empty(&u)
        .with_count("e", 2)?
        .with_member("person", "Paul")?
        .with_member("person", "Peter")?;

    let swapped = x.swap_element("e")?;
    println!("{x} -> {swapped}: indiscernible = {}", x.indiscernible(&swapped));
    println!("swap check for e: {}", x.swap_indiscernibility_check("e")?);

    let moved = x.classical_swap("person", "Paul", "Mary")?;
    println!("{x} -> {moved}: indiscernible = {}", x.indiscernible(&moved));
    Ok(())
}
