use coloring_complex::complexes::build_tree_complex;
use coloring_complex::homology::{betti_numbers, RankMode};
use coloring_complex::hypercore::binomial_i;
use coloring_complex::Hypergraph;

// Forbid the first l tree edges and compare with C(n-(l+1), (r+2)-(l+1)).
fn main() -> coloring_complex::Result<()> {
    let n = 5;
    for (name, tree) in [("star", Hypergraph::star_tree(n)?), ("path", Hypergraph::path_tree(n)?)] {
        for l in 0..n {
            let t = betti_numbers(&build_tree_complex(&tree, l)?, RankMode::exact())?;
            let formula: Vec<u128> =
                (-1..=n as i64 - 3).map(|r| binomial_i(n as i64 - (l as i64 + 1), r + 2 - (l as i64 + 1))).collect();
            let computed: Vec<usize> = (-1..=n as isize - 3).map(|r| t.get(r)).collect();
            println!("{name} l={l}: {computed:?} vs {formula:?}");
        }
    }
    Ok(())
}
