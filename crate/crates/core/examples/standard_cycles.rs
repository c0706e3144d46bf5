//! Standard cycles of E_4, the split of the boundary by first-block size,
//! and reduction modulo boundaries.

use coloring_complex::complexes::{build_en_complex, filtered_boundary_split};
use coloring_complex::homology::{is_cycle, reduce_mod_boundaries};
use coloring_complex::linalg::DEFAULT_PRIME;
use coloring_complex::repn::{permute_chain, standard_cycles, Permutation};

fn main() -> coloring_complex::Result<()> {
    let c = build_en_complex(4)?;
    let r = 1;
    let cycles = standard_cycles(4, r)?;
    let (m0, m1) = filtered_boundary_split(&c, r)?;
    for x in &cycles {
        let coords = c.coordinates(x)?;
        println!("{x}");
        println!("  cycle: {}, size-preserving part: {:?}, size-raising part: {:?}", is_cycle(&c, x)?, m0.mul_sparse(&coords), m1.mul_sparse(&coords));
    }
    let g = Permutation::from_cycles(4, &[vec![1, 2, 3, 4]])?;
    for x in &cycles {
        let y = permute_chain(&c, &g, x)?;
        println!("{g} sends it to {:?} in the standard basis", reduce_mod_boundaries(&c, r, &y, &cycles, DEFAULT_PRIME)?);
    }
    Ok(())
}
