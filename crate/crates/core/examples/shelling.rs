//! Facet orders and restriction maps. The closed form is compared against
//! the definition, then the order is verified both ways. Reversing the order
//! while keeping the closed-form restrictions breaks the certificate.

use coloring_complex::shelling::{
    facet_order, homology_facets, restriction_closed_form, restrictions_by_definition, verify_shelling, ShellingMode,
};
use coloring_complex::Hypergraph;

fn main() -> coloring_complex::Result<()> {
    let h = Hypergraph::complete(4, 3)?;
    let order = facet_order(&h)?;
    let by_def = restrictions_by_definition(&order);
    for (f, r) in order.iter().zip(&by_def) {
        println!("{f:>10}  R = {r}  closed form = {}", restriction_closed_form(f));
    }
    let closed: Vec<_> = order.iter().map(restriction_closed_form).collect();
    let cert = verify_shelling(&h, &order, &closed, ShellingMode::Both)?;
    println!("prop25 {:?}, direct {:?}", cert.prop25, cert.direct);

    let gamma = homology_facets(&h)?;
    println!("homology facets: {}", gamma.iter().map(|f| f.to_string()).collect::<Vec<_>>().join(" "));

    let reversed: Vec<_> = order.iter().rev().cloned().collect();
    let rs: Vec<_> = reversed.iter().map(restriction_closed_form).collect();
    let bad = verify_shelling(&h, &reversed, &rs, ShellingMode::Both)?;
    println!("reversed: prop25 {:?}, direct {:?}", bad.prop25, bad.direct);
    println!("  {}", bad.first_violation.unwrap_or_default());

    for h in [Hypergraph::star(5, 3, 1)?, Hypergraph::star(5, 3, 4)?, Hypergraph::complete(7, 4)?] {
        let order = facet_order(&h)?;
        let closed: Vec<_> = order.iter().map(restriction_closed_form).collect();
        let agree = closed == restrictions_by_definition(&order);
        let cert = verify_shelling(&h, &order, &closed, ShellingMode::Both)?;
        println!(
            "{} facets, closed form agrees: {agree}, valid: {}, homology facets: {}",
            order.len(),
            cert.is_valid(),
            homology_facets(&h)?.len()
        );
    }
    Ok(())
}
