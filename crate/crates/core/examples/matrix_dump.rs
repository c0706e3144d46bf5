use coloring_complex::complexes::build_cyclic_complex;
use coloring_complex::Hypergraph;

// Writes bases as JSON and boundary matrices as "rows cols nnz" triplet files.
fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = std::env::args().nth(1).map(std::path::PathBuf::from).unwrap_or_else(|| std::env::temp_dir().join("cyclic-5-3"));
    let c = build_cyclic_complex(&Hypergraph::complete(5, 3)?)?;
    c.dump(&dir)?;
    for r in c.degrees() {
        let m = c.boundary(r).unwrap();
        println!("degree {r}: {} x {}, {} nonzeros", m.nrows(), m.ncols(), m.nnz());
    }
    println!("written to {}", dir.display());
    Ok(())
}
