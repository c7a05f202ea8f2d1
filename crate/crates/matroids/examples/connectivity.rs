//! Tutte connectivity: separation search, k-connectivity, and the
//! minimality hierarchy.

use matroids::{ElementSet, Matroid};

fn main() -> matroids::Result<()> {
    let w3 = matroids::wheel(3)?.0;

    // lambda(X) = r(X) + r(E-X) - r(M) is the connectivity function.
    let triad = ElementSet::from_indices(6, &[0, 1, 2])?;
    println!("lambda of {triad} in M(W_3) = {}", w3.lambda(&triad));

    // M(W_3) is 3-connected but has 3-separations, all of them minimal.
    println!("M(W_3) 3-connected: {}", w3.is_k_connected(3)?);
    if let Some(w) = w3.find_k_separation(3, false)? {
        println!("first 3-separation: side {} (order {}, nonminimal: {})", w.side, w.order, w.nonminimal);
    }
    println!("has a nonminimal 3-separation: {:?}", w3.find_k_separation(3, true)?.is_some());

    // The whole hierarchy on a few matroids.
    for (name, m) in [
        ("U_{2,4}", Matroid::uniform(2, 4)?),
        ("U_{2,5}", Matroid::uniform(2, 5)?),
        ("M(W_3)", w3.clone()),
        ("U_{3,6}", Matroid::uniform(3, 6)?),
    ] {
        println!(
            "{name}: 3c={} min3c={} sm3c={}",
            m.is_k_connected(3)?,
            m.is_minimally_k_connected(3)?,
            m.is_super_minimally_k_connected(3)?,
        );
    }

    // A brittle matroid has no 3-connected restriction on >= 4 elements.
    let triangle_plus_coloop = Matroid::uniform(2, 3)?.direct_sum(&Matroid::uniform(1, 1)?);
    println!("triangle + coloop brittle: {}", triangle_plus_coloop.is_brittle()?);
    println!("U_{{2,4}} brittle: {}", Matroid::uniform(2, 4)?.is_brittle()?);

    // Triangles, triads, and essential elements of a wheel.
    println!("M(W_3) triangles: {}", w3.triangles().len());
    println!("M(W_3) triads: {}", w3.triads().len());
    println!("M(W_3) essential elements: {}", w3.essential_elements()?);
    Ok(())
}
