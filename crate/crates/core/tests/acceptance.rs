//! Acceptance suite: one line per criterion, nonzero exit if any fails.
//!
//! Expected values come from the closed formulas or from the small oracles
//! in `common` (brute-force coloring counts, an independent face enumeration with
//! dense rational elimination, exterior powers for hook characters).

use std::collections::BTreeMap;
use std::time::Instant;

use coloring_complex::chromatic::{chromatic_polynomial, hodge_dimension_profile};
use coloring_complex::complexes::{
    build_coloring_complex, build_cyclic_complement, build_cyclic_complex, build_en_complex, build_tree_complex,
    filtered_boundary_split, ChainComplexRep,
};
use coloring_complex::homology::{betti_numbers, is_cycle, RankMode};
use coloring_complex::hypercore::{canonicalize_cyclic, enumerate_ordered_partitions};
use coloring_complex::repn::{
    chain_character, character_row, hook_character, partitions_of, standard_cycles,
};
use coloring_complex::shelling::{
    facet_order, homology_facets, restriction_closed_form, restrictions_by_definition, verify_shelling, ShellingMode,
};
use coloring_complex::Hypergraph;

mod common;

use common::{binom, brute_chromatic, oracle_coloring_betti, oracle_hooks};

type Outcome = Result<String, String>;

const SHELLABLE: [(usize, usize); 7] = [(4, 3), (5, 3), (5, 4), (6, 4), (7, 4), (6, 5), (7, 5)];

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn betti(c: &ChainComplexRep) -> BTreeMap<isize, usize> {
    betti_numbers(c, RankMode::default()).unwrap().betti
}

fn betti_at(b: &BTreeMap<isize, usize>, r: isize) -> usize {
    b.get(&r).copied().unwrap_or(0)
}

fn c1_concentration() -> Outcome {
    let start = Instant::now();
    for (n, k) in SHELLABLE {
        let h = Hypergraph::complete(n, k).unwrap();
        let chi = brute_chromatic(&h);
        ensure(chromatic_polynomial(&h).unwrap().coeffs.iter().map(|&c| c as i128).eq(chi.iter().copied()), || {
            format!("complete({n},{k}): polynomial disagrees with brute force {chi:?}")
        })?;
        let rank = chi.iter().map(|c| c.unsigned_abs() as usize).sum::<usize>() - 1;
        let b = betti(&build_coloring_complex(&h).unwrap());
        let top = n as isize - k as isize - 1;
        for (&r, &v) in &b {
            let want = if r == top { rank } else { 0 };
            ensure(v == want, || format!("complete({n},{k}) r={r}: {v} != {want}"))?;
        }
    }
    let elapsed = start.elapsed();
    ensure(elapsed.as_secs() < 60, || format!("took {elapsed:?}"))?;
    let spot = oracle_coloring_betti(&Hypergraph::complete(4, 3).unwrap());
    ensure(betti_at(&spot, 0) == 7 && spot.values().sum::<usize>() == 7, || format!("oracle gives {spot:?}"))?;
    Ok(format!("7 instances in {elapsed:.2?}; (4,3) -> 7 by independent rational rank"))
}

fn c2_hodge() -> Outcome {
    for (n, k) in SHELLABLE {
        let h = Hypergraph::complete(n, k).unwrap();
        let b = betti(&build_coloring_complex(&h).unwrap());
        let want = betti_at(&b, n as isize - k as isize - 1) as i64;
        let total = hodge_dimension_profile(&h, k).unwrap().total;
        ensure(total == want, || format!("complete({n},{k}): hodge total {total} != betti {want}"))?;
    }
    Ok("hodge totals match for 7 instances".into())
}

fn star_instances() -> Vec<Hypergraph> {
    let mut out = Vec::new();
    for n in 3..=7 {
        for k in 2..n {
            for v in 1..=n {
                out.push(Hypergraph::star(n, k, v).unwrap());
            }
        }
    }
    out
}

fn c3_shelling() -> Outcome {
    let start = Instant::now();
    let mut hs: Vec<Hypergraph> = SHELLABLE.iter().map(|&(n, k)| Hypergraph::complete(n, k).unwrap()).collect();
    hs.extend(star_instances());
    let mut facets = 0;
    for h in &hs {
        let order = facet_order(h).unwrap();
        let closed: Vec<_> = order.iter().map(restriction_closed_form).collect();
        let defined = restrictions_by_definition(&order);
        for (i, (a, b)) in closed.iter().zip(&defined).enumerate() {
            ensure(a == b, || format!("{:?}: facet {} closed form {a} vs definition {b}", h.edges(), order[i]))?;
        }
        let cert = verify_shelling(h, &order, &closed, ShellingMode::Both).unwrap();
        ensure(cert.prop25 == Some(true) && cert.direct == Some(true), || {
            format!("{:?}: {:?}", h.edges(), cert.first_violation)
        })?;
        facets += order.len();
    }
    let elapsed = start.elapsed();
    ensure(elapsed.as_secs() < 120, || format!("took {elapsed:?}"))?;
    Ok(format!("{} hypergraphs, {facets} facets, both modes, in {elapsed:.2?}", hs.len()))
}

fn c4_gamma() -> Outcome {
    for (n, k) in SHELLABLE {
        let h = Hypergraph::complete(n, k).unwrap();
        let b = betti_at(&betti(&build_coloring_complex(&h).unwrap()), n as isize - k as isize - 1);
        let g = homology_facets(&h).unwrap().len();
        ensure(g == b, || format!("complete({n},{k}): |gamma| {g} != {b}"))?;
    }
    for h in star_instances() {
        let top = h.n() as isize - h.uniformity().unwrap() as isize - 1;
        let b = betti_at(&betti(&build_coloring_complex(&h).unwrap()), top);
        let g = homology_facets(&h).unwrap().len();
        ensure(g == b, || format!("{:?}: |gamma| {g} != {b}", h.edges()))?;
    }
    let spot = |h: Hypergraph| homology_facets(&h).unwrap().len();
    let spots = (
        spot(Hypergraph::complete(4, 3).unwrap()),
        spot(Hypergraph::star(4, 3, 1).unwrap()),
        spot(Hypergraph::star(5, 3, 1).unwrap()),
    );
    ensure(spots == (7, 5, 17), || format!("spot values {spots:?}"))?;
    Ok("gamma sizes match betti; spots 7, 5, 17".into())
}

fn c5_star_cyclic() -> Outcome {
    let mut count = 0;
    for n in 4..=7i64 {
        for k in 3..=n {
            let c = build_cyclic_complex(&Hypergraph::star(n as usize, k as usize, 1).unwrap()).unwrap();
            let b = betti(&c);
            for r in -1..=(n - k - 1) {
                let want = binom(n - 1, r + 1);
                let got = betti_at(&b, r as isize);
                ensure(got == want, || format!("star({n},{k},1) r={r}: {got} != {want}"))?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} groups match C(n-1,r+1)"))
}

fn c6_en() -> Outcome {
    for n in 1..=7i64 {
        let c = build_en_complex(n as usize).unwrap();
        let b = betti(&c);
        for r in c.degrees() {
            let want = binom(n - 1, r as i64 + 1);
            ensure(betti_at(&b, r) == want, || format!("E_{n} r={r}: {} != {want}", betti_at(&b, r)))?;
        }
    }
    Ok("E_1..E_7 match C(n-1,r+1) in every degree".into())
}

fn c7_complement() -> Outcome {
    let mut count = 0;
    for n in 4..=7i64 {
        for k in 3..n {
            let b = betti(&build_cyclic_complement(n as usize, k as usize, None).unwrap());
            for r in (n - k)..=(n - 2) {
                let want = if r == n - k { binom(n - 1, n - k - 1) + binom(n - 1, n - k + 1) } else { binom(n - 1, r + 1) };
                let got = betti_at(&b, r as isize);
                ensure(got == want, || format!("complement of complete({n},{k}) r={r}: {got} != {want}"))?;
                count += 1;
            }
        }
    }
    let b = betti(&build_cyclic_complement(5, 3, None).unwrap());
    ensure(betti_at(&b, 3) == 1 && betti_at(&b, 2) == 8, || format!("n=5 k=3 spot: {b:?}"))?;
    Ok(format!("{count} groups for 3 <= k < n <= 7; spot (5,3) -> 1 at r=3, 8 at r=2"))
}

fn c8_main() -> Outcome {
    for n in 4..=7i64 {
        for k in 3..n {
            let b = betti(&build_cyclic_complex(&Hypergraph::complete(n as usize, k as usize).unwrap()).unwrap());
            let top = n - k - 1;
            ensure(betti_at(&b, top as isize) == binom(n, n - k), || {
                format!("complete({n},{k}): top {} != {}", betti_at(&b, top as isize), binom(n, n - k))
            })?;
            if k == n - 1 {
                ensure(betti_at(&b, 0) == n as usize && betti_at(&b, -1) == 1, || format!("k=n-1, n={n}: {b:?}"))?;
            }
            if k == n - 2 {
                for r in -1..=1 {
                    ensure(betti_at(&b, r as isize) == binom(n, r + 1), || format!("k=n-2, n={n}: {b:?}"))?;
                }
            }
        }
    }
    Ok("top groups C(n,n-k) for 3 <= k < n <= 7; k=n-1 and k=n-2 profiles".into())
}

fn c9_tree() -> Outcome {
    let mut count = 0;
    for n in 2..=6i64 {
        for tree in [Hypergraph::star_tree(n as usize).unwrap(), Hypergraph::path_tree(n as usize).unwrap()] {
            for l in 0..n {
                let b = betti(&build_tree_complex(&tree, l as usize).unwrap());
                for r in -1..=(n - 3) {
                    let want = binom(n - (l + 1), (r + 2) - (l + 1));
                    let got = betti_at(&b, r as isize);
                    ensure(got == want, || format!("tree {:?} l={l} r={r}: {got} != {want}", tree.edges()))?;
                    count += 1;
                }
            }
        }
    }
    Ok(format!("{count} groups for star and path trees, n <= 6"))
}

fn c10_characters() -> Outcome {
    let e3 = build_en_complex(3).unwrap();
    let e4 = build_en_complex(4).unwrap();
    let row = character_row(&e3, 0).unwrap().values();
    ensure(row == [2, 0, -1], || format!("E_3 r=0: {row:?}"))?;
    let row = character_row(&e4, 0).unwrap().values();
    ensure(row == [3, 1, -1, 0, -1], || format!("E_4 r=0: {row:?}"))?;
    let row = character_row(&e4, 1).unwrap().values();
    let hook: Vec<i64> = partitions_of(4).iter().map(|t| oracle_hooks(t)[2]).collect();
    ensure(row == hook, || format!("E_4 r=1: {row:?} vs (2,1,1) {hook:?}"))?;
    for n in 1..=6 {
        let c = build_en_complex(n).unwrap();
        for t in partitions_of(n) {
            let hooks = oracle_hooks(&t);
            for m in 0..n {
                ensure(hook_character(n, m, &t).unwrap() == hooks[m], || format!("hook n={n} m={m} at {t}"))?;
            }
            let mut chain_side = 0;
            let mut hook_side = 0;
            for r in c.degrees() {
                let sign = if r.rem_euclid(2) == 0 { 1 } else { -1 };
                chain_side += sign * chain_character(&c, &t, r).unwrap();
                hook_side += sign * hooks[(r + 1) as usize];
            }
            ensure(chain_side == hook_side, || format!("trace identity E_{n} at {t}: {chain_side} != {hook_side}"))?;
        }
        for r in c.degrees() {
            let row = character_row(&c, r).unwrap();
            for (t, v) in &row.rows {
                let want = oracle_hooks(t)[(r + 1) as usize];
                ensure(*v == want, || format!("E_{n} r={r} at {t}: {v} != {want}"))?;
            }
        }
    }
    Ok("reference rows for E_3, E_4; hook rows and trace identity for n <= 6".into())
}

fn c11_infrastructure() -> Outcome {
    let mut complexes: Vec<ChainComplexRep> = Vec::new();
    for n in 2..=7 {
        complexes.push(build_en_complex(n).unwrap());
        for k in 2..=n {
            let h = Hypergraph::complete(n, k).unwrap();
            complexes.push(build_cyclic_complex(&h).unwrap());
            complexes.push(build_cyclic_complement(n, k, None).unwrap());
            complexes.push(build_cyclic_complex(&Hypergraph::star(n, k, 1).unwrap()).unwrap());
            if n <= 6 {
                complexes.push(build_coloring_complex(&h).unwrap());
            }
        }
    }
    for n in 2..=6 {
        for l in 0..n {
            complexes.push(build_tree_complex(&Hypergraph::path_tree(n).unwrap(), l).unwrap());
        }
    }
    for c in &complexes {
        for r in c.degrees().skip(1) {
            if let (Some(lo), Some(hi)) = (c.boundary(r), c.boundary(r + 1)) {
                ensure(lo.mul(hi).unwrap().is_zero(), || format!("{} on {:?}: boundary squared at {r}", c.kind(), c.source().edges()))?;
            }
        }
        if c.n() <= 5 {
            let m = betti_numbers(c, RankMode::default()).unwrap();
            let e = betti_numbers(c, RankMode::exact()).unwrap();
            ensure(m.betti == e.betti, || format!("{} on {:?}: modular {:?} vs exact {:?}", c.kind(), c.source().edges(), m.betti, e.betti))?;
        }
    }
    for n in 2..=7 {
        let en = build_en_complex(n).unwrap();
        for k in 2..=n {
            let inside = build_cyclic_complex(&Hypergraph::complete(n, k).unwrap()).unwrap();
            let outside = build_cyclic_complement(n, k, None).unwrap();
            for r in en.degrees() {
                ensure(inside.dim(r) + outside.dim(r) == en.dim(r), || format!("direct sum n={n} k={k} r={r}"))?;
            }
        }
        for r in en.degrees() {
            let (_, raising) = filtered_boundary_split(&en, r).unwrap();
            for x in standard_cycles(n, r).unwrap() {
                let coords = en.coordinates(&x).unwrap();
                ensure(raising.mul_sparse(&coords).is_empty() && is_cycle(&en, &x).unwrap(), || format!("standard cycle {x}"))?;
            }
        }
    }
    let mut rotations = 0;
    for n in 1..=5 {
        for m in 1..=n {
            for p in enumerate_ordered_partitions(n, m, None).unwrap() {
                let (base, s0) = canonicalize_cyclic(&p).unwrap();
                for s in 0..m {
                    let (class, sign) = canonicalize_cyclic(&p.rotate(s)).unwrap();
                    let step = if (m - 1) % 2 == 1 && s % 2 == 1 { -1 } else { 1 };
                    ensure(class == base && sign * step == s0, || format!("rotation {s} of {p}"))?;
                    rotations += 1;
                }
            }
        }
    }
    Ok(format!("{} complexes; direct sums; standard cycles; {rotations} rotations", complexes.len()))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 11] = [
        ("coloring complex concentration and rank", c1_concentration),
        ("hodge profile totals", c2_hodge),
        ("shelling certificates", c3_shelling),
        ("cohomology basis counts", c4_gamma),
        ("star cyclic dimensions", c5_star_cyclic),
        ("E_n cyclic dimensions", c6_en),
        ("complement dimensions", c7_complement),
        ("complete cyclic top homology", c8_main),
        ("tree complexes", c9_tree),
        ("character tables", c10_characters),
        ("infrastructure properties", c11_infrastructure),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(detail) => println!("criterion {:2} PASS  {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:2} FAIL  {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
