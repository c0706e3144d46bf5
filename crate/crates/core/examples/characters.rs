//! Symmetric-group characters on the homology of cyclic complexes, against
//! hook characters.

use coloring_complex::complexes::{build_cyclic_complex, build_en_complex};
use coloring_complex::repn::{character_row, hook_row, hopf_trace_sides, partitions_of, ActingGroup};
use coloring_complex::Hypergraph;

fn main() -> coloring_complex::Result<()> {
    for n in 3..=5 {
        let c = build_en_complex(n)?;
        for r in c.degrees() {
            let row = character_row(&c, r)?;
            let hook = hook_row(n, (r + 1) as usize, ActingGroup::Symmetric, r)?;
            println!("E_{n} r={r:2}: {:?} hook {:?}", row.values(), hook.values());
        }
        for t in partitions_of(n) {
            let (chain, hook) = hopf_trace_sides(&c, &t)?;
            println!("  trace identity at {t}: {chain} = {hook}");
        }
    }
    let c = build_cyclic_complex(&Hypergraph::star(5, 3, 1)?)?;
    for r in -1..=1 {
        println!("star(5,3,1) r={r}: {}", serde_json::to_string(&character_row(&c, r)?).unwrap());
    }
    Ok(())
}
