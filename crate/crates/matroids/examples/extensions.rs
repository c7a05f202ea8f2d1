//! Single-element extensions through modular cuts.
//!
//! A modular cut is an up-closed family of flats closed under intersecting
//! modular pairs; each one yields exactly one way to add a new element.

use matroids::{extend, modular_cuts, Matroid};

fn main() -> matroids::Result<()> {
    let triangle = Matroid::uniform(2, 3)?;
    let cuts = modular_cuts(&triangle)?;
    println!("U_{{2,3}} has {} modular cuts", cuts.len());

    for cut in &cuts {
        let bigger = extend(&triangle, cut)?;
        let kind = if !bigger.loops().is_empty() {
            "adds a loop"
        } else if !bigger.coloops().is_empty() {
            "adds a coloop"
        } else if !bigger.is_simple() {
            "adds a parallel element"
        } else {
            "adds a point in general position"
        };
        println!(
            "cut with {} members -> {} bases ({kind})",
            cut.members.len(),
            bigger.bases().len()
        );
    }

    // The empty cut is the coloop extension; the cut of all flats adds a
    // loop; the cut {E} is the free extension.
    let free = cuts.iter().find(|c| c.members.len() == 1).unwrap();
    let grown = extend(&triangle, free)?;
    println!(
        "free extension of the triangle is U_{{2,4}}: {}",
        grown.same_labeled_matroid(&Matroid::uniform(2, 4)?)
    );
    Ok(())
}
