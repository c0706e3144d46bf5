//! Betti numbers of coloring complexes: concentrated in one degree when
//! k > n/2, spread out otherwise.

use coloring_complex::chromatic::chromatic_polynomial;
use coloring_complex::complexes::build_coloring_complex;
use coloring_complex::homology::{betti_numbers, RankMode};
use coloring_complex::Hypergraph;

fn main() -> coloring_complex::Result<()> {
    for (n, k) in [(4, 3), (5, 3), (5, 4), (6, 4), (4, 2), (6, 3)] {
        let h = Hypergraph::complete(n, k)?;
        let c = build_coloring_complex(&h)?;
        let modular = betti_numbers(&c, RankMode::default())?;
        let chi = chromatic_polynomial(&h)?;
        print!("complete({n},{k}): faces {:?}, betti {:?}", c.dims(), modular.betti.values().collect::<Vec<_>>());
        println!(", sum|coeff| - 1 = {}", chi.abs_coefficient_sum() - 1);
        if c.dims().iter().sum::<usize>() < 5000 {
            let exact = betti_numbers(&c, RankMode::exact())?;
            assert_eq!(exact.betti, modular.betti);
        }
    }
    Ok(())
}
