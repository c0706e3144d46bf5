//! Complement complexes: classes with no block containing an edge. Removing
//! the k-subsets one at a time gives the partial complements in between.

use coloring_complex::complexes::{build_cyclic_complement, build_cyclic_complex};
use coloring_complex::homology::{betti_numbers, RankMode};
use coloring_complex::Hypergraph;

fn main() -> coloring_complex::Result<()> {
    let (n, k) = (5, 3);
    let h = Hypergraph::complete(n, k)?;
    let inside = build_cyclic_complex(&h)?;
    let outside = build_cyclic_complement(n, k, None)?;
    println!("chain groups: {:?} + {:?}", inside.dims(), outside.dims());
    for l in 0..=h.edge_count() {
        let c = build_cyclic_complement(n, k, Some(l))?;
        let t = betti_numbers(&c, RankMode::default())?;
        println!("l = {l:2}: {:?}", t.betti.values().collect::<Vec<_>>());
    }
    Ok(())
}
