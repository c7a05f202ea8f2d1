//! Wheels and whirls: construction, the rim relaxation that turns one into
//! the other, and structural recognition from an unlabeled basis family.

use matroids::{recognize_wheel_or_whirl, wheel, whirl, Matroid};

fn main() -> matroids::Result<()> {
    for k in 2..=5 {
        let (w, _) = wheel(k)?;
        let (wh, _) = whirl(k)?;
        println!(
            "k={k}: wheel has {} bases, whirl has {} bases",
            w.bases().len(),
            wh.bases().len()
        );
    }

    // The whirl is the wheel with its rim circuit-hyperplane relaxed.
    let (w4, lab) = wheel(4)?;
    let rim = lab.rim_set();
    let relaxed = w4.relax_circuit_hyperplane(&rim)?;
    println!("relaxing the rim {rim} of M(W_4) gives the whirl: {}", relaxed.same_labeled_matroid(&whirl(4)?.0));

    // Recognition recovers the structure from a scrambled copy.
    let scrambled = w4.relabel(&[3, 6, 0, 7, 2, 5, 1, 4]);
    match recognize_wheel_or_whirl(&scrambled) {
        Some(found) => println!(
            "scrambled M(W_4) recognized as {} with k={}, rim {}",
            found.kind, found.k, found.rim_set()
        ),
        None => println!("recognition failed"),
    }

    // The 4-point line is the smallest whirl.
    let u24 = Matroid::uniform(2, 4)?;
    println!(
        "U_{{2,4}} recognized as: {:?}",
        recognize_wheel_or_whirl(&u24).map(|l| (l.kind, l.k))
    );

    // Non-wheels are rejected.
    println!(
        "U_{{3,6}} recognized as: {:?}",
        recognize_wheel_or_whirl(&Matroid::uniform(3, 6)?).map(|l| (l.kind, l.k))
    );
    Ok(())
}
