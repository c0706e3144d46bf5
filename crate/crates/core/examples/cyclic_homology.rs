//! Homology of cyclic coloring complexes for E_n, stars through vertex 1 and
//! complete hypergraphs.

use coloring_complex::complexes::{build_cyclic_complex, build_en_complex};
use coloring_complex::homology::{betti_numbers, RankMode};
use coloring_complex::hypercore::binomial;
use coloring_complex::Hypergraph;

fn row(t: &coloring_complex::homology::BettiTable) -> Vec<usize> {
    t.betti.values().copied().collect()
}

fn main() -> coloring_complex::Result<()> {
    for n in 3..=6 {
        let t = betti_numbers(&build_en_complex(n)?, RankMode::default())?;
        let expect: Vec<u128> = (0..n as u64).map(|j| binomial(n as u64 - 1, j)).collect();
        println!("E_{n}: {:?}  binomials {:?}", row(&t), expect);
    }
    for (n, k) in [(5, 3), (6, 3), (6, 4), (7, 4)] {
        let star = betti_numbers(&build_cyclic_complex(&Hypergraph::star(n, k, 1)?)?, RankMode::default())?;
        let full = betti_numbers(&build_cyclic_complex(&Hypergraph::complete(n, k)?)?, RankMode::default())?;
        println!("n={n} k={k}: star {:?}, complete {:?}, C(n,n-k) = {}", row(&star), row(&full), binomial(n as u64, (n - k) as u64));
    }
    Ok(())
}
