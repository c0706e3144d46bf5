//! Chromatic polynomials from hyperedge-free partition counts, checked
//! against brute-force coloring counts.

use coloring_complex::chromatic::{chromatic_polynomial, count_proper_colorings, free_partition_vector, hodge_dimension_profile};
use coloring_complex::Hypergraph;

fn main() -> coloring_complex::Result<()> {
    for h in [Hypergraph::complete(4, 3)?, Hypergraph::star(4, 3, 1)?, Hypergraph::complete(5, 3)?] {
        let chi = chromatic_polynomial(&h)?;
        let free = free_partition_vector(&h)?;
        println!("{:?}", h.edges().iter().map(|e| e.to_string()).collect::<Vec<_>>());
        println!("  N_m      = {:?}", free.counts);
        println!("  chi      = {:?}", chi.coeffs);
        for lambda in 0..4 {
            println!("  chi({lambda})   = {} (brute force {})", chi.eval(lambda), count_proper_colorings(&h, lambda as u64)?);
        }
        let k = h.uniformity().unwrap();
        let hodge = hodge_dimension_profile(&h, k)?;
        println!("  hodge    = {:?}, total {} = sum|coeff| - 1 = {}", hodge.dims, hodge.total, chi.abs_coefficient_sum() - 1);
    }
    Ok(())
}
