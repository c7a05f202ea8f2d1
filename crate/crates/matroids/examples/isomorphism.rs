//! Canonical forms and isomorphism testing.
//!
//! The canonical form is a complete invariant for matroids on at most 12
//! elements: two matroids get the same form exactly when they are
//! isomorphic. It doubles as a compact, sortable encoding of the class.

use matroids::{are_isomorphic, canonical_form, wheel, whirl, Matroid};

fn main() -> matroids::Result<()> {
    let u24 = Matroid::uniform(2, 4)?;
    let cf = canonical_form(&u24)?;
    println!("canonical form of U_{{2,4}}: {cf}");

    // Relabeling never changes the form.
    let scrambled = u24.relabel(&[2, 0, 3, 1]);
    println!("scrambled copy: {}", canonical_form(&scrambled)?);

    // The form reconstructs a representative of the class.
    let rebuilt = cf.to_matroid();
    println!("rebuilt from the form, isomorphic: {}", are_isomorphic(&rebuilt, &u24));

    // Wheels and whirls of the same rank differ in exactly one basis, and
    // the forms see it.
    let w3 = wheel(3)?.0;
    let wh3 = whirl(3)?.0;
    println!("M(W_3):  {}", canonical_form(&w3)?);
    println!("W^3:     {}", canonical_form(&wh3)?);
    println!("isomorphic: {}", are_isomorphic(&w3, &wh3));

    // U_{2,4} is self-dual.
    println!("U_{{2,4}} ~ its dual: {}", are_isomorphic(&u24, &u24.dual()));

    // Past 12 elements the library falls back on structural recognition
    // and signature-guided backtracking.
    let w7 = wheel(7)?.0;
    let relabeled: Vec<usize> = (0..14).map(|i| (i * 5 + 3) % 14).collect();
    println!("M(W_7) ~ scrambled M(W_7): {}", are_isomorphic(&w7, &w7.relabel(&relabeled)));
    println!("M(W_7) ~ W^7: {}", are_isomorphic(&w7, &whirl(7)?.0));
    Ok(())
}
