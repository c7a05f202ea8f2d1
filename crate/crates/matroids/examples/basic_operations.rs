//! Core matroid algebra: construction, rank queries, duality, minors, and
//! sums, using the cycle matroid of K4 as the running example.

use matroids::{ElementSet, Matroid};

fn main() -> matroids::Result<()> {
    // K4 with vertex 0 as the hub: elements 0..6 are the edges.
    let m = Matroid::from_graph(4, vec![(3, 1), (0, 1), (1, 2), (0, 2), (2, 3), (0, 3)])?;
    println!("M(K4): {} elements, rank {}", m.ground_size(), m.full_rank());

    let rim = ElementSet::from_indices(6, &[0, 2, 4])?;
    println!("rank of rim {rim} = {}", m.rank(&rim));
    println!("closure of rim = {}", m.closure(&rim));
    println!("corank of rim = {}", m.corank(&rim));

    let dual = m.dual();
    println!("dual has rank {} and {} bases", dual.full_rank(), dual.bases().len());

    // Minors relabel the surviving elements downward; the map records where
    // each old element went.
    let x = ElementSet::from_indices(6, &[1])?;
    let deletion = m.delete(&x);
    let map = m.deletion_map(&x);
    println!("M\\1 has {} elements; old element 5 is now {:?}", deletion.ground_size(), map.apply(5));

    let contraction = m.contract(&x);
    println!("M/1 has rank {}", contraction.full_rank());

    // Parallel edges disappear under simplification.
    let doubled = Matroid::from_graph(3, vec![(0, 1), (0, 1), (1, 2), (2, 0)])?;
    let (simple, _) = doubled.simplify();
    println!("simplifying a doubled triangle: {} -> {} elements", doubled.ground_size(), simple.ground_size());

    let triangle = Matroid::uniform(2, 3)?;
    let sum = triangle.direct_sum(&triangle);
    println!("triangle + triangle: {} elements, rank {}", sum.ground_size(), sum.full_rank());

    let glued = triangle.two_sum(&triangle, 0, 0)?;
    println!("triangle 2-sum triangle: {} elements, rank {}", glued.ground_size(), glued.full_rank());

    println!("circuits of M(K4): {:?}", m.circuits(6).iter().map(|c| c.to_string()).collect::<Vec<_>>());
    Ok(())
}
