use std::collections::BTreeSet;

use proptest::prelude::*;

use coloring_complex::chromatic::{chromatic_polynomial, free_partition_vector};
use coloring_complex::complexes::{
    build_coloring_complex, build_cyclic_complex, build_en_complex, cyclic_boundary_terms, Chain,
};
use coloring_complex::homology::{betti_numbers, RankMode};
use coloring_complex::hypercore::{
    canonicalize_cyclic, enumerate_cyclic_classes, enumerate_ordered_partitions, OrderedPartition, VertexSet,
};
use coloring_complex::repn::{chain_trace, homology_trace, permute_chain, Permutation};
use coloring_complex::shelling::{facet_order, restrictions_by_definition, verify_shelling, ShellingMode};
use coloring_complex::Hypergraph;

mod common;

use common::{brute_chromatic, factorial, oracle_coloring_betti, stirling2};

fn hypergraph(max_n: usize) -> impl Strategy<Value = Hypergraph> {
    (1..=max_n).prop_flat_map(|n| {
        let top = (1u16 << n) - 1;
        prop::collection::vec(1..=top, 1..5).prop_map(move |masks| {
            let edges: BTreeSet<u16> = masks.into_iter().collect();
            Hypergraph::new(n, edges.into_iter().map(VertexSet::from_bits).collect()).unwrap()
        })
    })
}

fn permutation(n: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=n).collect::<Vec<_>>()).prop_shuffle().prop_map(|v| Permutation::from_images(v).unwrap())
}

/// A random ordered partition of `{1..n}` as a block assignment.
fn ordered_partition(n: usize) -> impl Strategy<Value = OrderedPartition> {
    prop::collection::vec(0..n, n).prop_map(move |labels| {
        let mut order: Vec<usize> = Vec::new();
        for &l in &labels {
            if !order.contains(&l) {
                order.push(l);
            }
        }
        let blocks: Vec<Vec<usize>> =
            order.iter().map(|&b| (1..=n).filter(|&v| labels[v - 1] == b).collect()).collect();
        let refs: Vec<&[usize]> = blocks.iter().map(|b| b.as_slice()).collect();
        OrderedPartition::from_lists(n, &refs).unwrap()
    })
}

#[test]
fn enumeration_counts_follow_stirling() {
    for n in 1..=6 {
        let mut fubini = 0;
        for m in 1..=n {
            let s = stirling2(n, m);
            let ordered = enumerate_ordered_partitions(n, m, None).unwrap();
            assert_eq!(ordered.len() as u64, factorial(m) * s);
            assert!(ordered.windows(2).all(|w| w[0] < w[1]));
            let cyclic = enumerate_cyclic_classes(n, m, None).unwrap();
            assert_eq!(cyclic.len() as u64, factorial(m - 1) * s);
            fubini += ordered.len();
        }
        assert_eq!(fubini, [1, 3, 13, 75, 541, 4683][n - 1]);
    }
}

#[test]
fn en_chain_groups_are_all_classes() {
    for n in 1..=6 {
        let c = build_en_complex(n).unwrap();
        for m in 1..=n {
            assert_eq!(c.dim(m as isize - 2) as u64, factorial(m - 1) * stirling2(n, m));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn chromatic_matches_brute_force(h in hypergraph(6)) {
        let chi = chromatic_polynomial(&h).unwrap();
        let brute = brute_chromatic(&h);
        let ours: Vec<i128> = (0..=h.n()).map(|j| chi.coeff(j) as i128).collect();
        prop_assert_eq!(ours, brute);
        let free = free_partition_vector(&h).unwrap();
        prop_assert!(free.counts.iter().enumerate().all(|(i, &c)| c <= stirling2(h.n(), i + 1)));
    }

    #[test]
    fn coloring_betti_matches_oracle(h in hypergraph(5)) {
        let c = build_coloring_complex(&h).unwrap();
        let ours = betti_numbers(&c, RankMode::exact()).unwrap().betti;
        prop_assert_eq!(ours, oracle_coloring_betti(&h));
    }

    #[test]
    fn euler_characteristic_identity(h in hypergraph(5), cyclic in any::<bool>()) {
        let c = if cyclic { build_cyclic_complex(&h) } else { build_coloring_complex(&h) }.unwrap();
        let t = betti_numbers(&c, RankMode::default()).unwrap();
        let faces: i64 = c.degrees().map(|r| if r.rem_euclid(2) == 0 { c.dim(r) as i64 } else { -(c.dim(r) as i64) }).sum();
        prop_assert_eq!(t.euler_characteristic(), faces);
    }

    #[test]
    fn modular_never_below_exact(h in hypergraph(5), small in prop::sample::select(vec![2u64, 3, 5, 7, 101])) {
        let c = build_cyclic_complex(&h).unwrap();
        let exact = betti_numbers(&c, RankMode::exact()).unwrap();
        let big = betti_numbers(&c, RankMode::default()).unwrap();
        let tiny = betti_numbers(&c, RankMode::Modular { prime: small }).unwrap();
        prop_assert_eq!(&big.betti, &exact.betti);
        for r in c.degrees() {
            prop_assert!(tiny.get(r) >= exact.get(r));
        }
    }

    #[test]
    fn boundary_squares_to_zero(h in hypergraph(5)) {
        for c in [build_coloring_complex(&h).unwrap(), build_cyclic_complex(&h).unwrap()] {
            prop_assert!(c.verify_boundary_squared().is_ok());
        }
    }

    #[test]
    fn cyclic_boundary_is_well_defined(p in (1..=6usize).prop_flat_map(ordered_partition)) {
        // [p] = sign * [rep], so the boundary computed from p must be sign times the one from rep
        let (class, sign) = canonicalize_cyclic(&p).unwrap();
        let boundary = |q: &OrderedPartition, scale: i64| {
            let mut x = Chain::zero(q.degree() - 1);
            for (c, v) in cyclic_boundary_terms(q) {
                x.add_term(c.into_rep(), v * scale);
            }
            x
        };
        prop_assert_eq!(boundary(&p, 1), boundary(class.rep(), sign));
        for s in 0..p.len() {
            let (again, s2) = canonicalize_cyclic(&p.rotate(s)).unwrap();
            prop_assert_eq!(&again, &class);
            let step = if (p.len() - 1) % 2 == 1 && s % 2 == 1 { -1 } else { 1 };
            prop_assert_eq!(s2 * step, sign);
        }
    }

    #[test]
    fn action_composes_and_commutes_with_boundary(
        (n, g, h, pick) in (2..=6usize).prop_flat_map(|n| (Just(n), permutation(n), permutation(n), any::<prop::sample::Index>()))
    ) {
        let c = build_en_complex(n).unwrap();
        let r = (pick.index(n) as isize) - 1;
        let face = pick.get(c.basis(r)).clone();
        let x = Chain::from_terms(r, [(face, 1)]);
        let gh = permute_chain(&c, &g.compose(&h), &x).unwrap();
        let g_h = permute_chain(&c, &g, &permute_chain(&c, &h, &x).unwrap()).unwrap();
        prop_assert_eq!(&gh, &g_h);
        let d_then_g = permute_chain(&c, &g, &c.apply_boundary(&x).unwrap()).unwrap();
        let g_then_d = c.apply_boundary(&permute_chain(&c, &g, &x).unwrap()).unwrap();
        prop_assert_eq!(d_then_g, g_then_d);
    }

    #[test]
    fn characters_are_class_functions(
        (n, g, tau) in (2..=5usize).prop_flat_map(|n| (Just(n), permutation(n), permutation(n)))
    ) {
        let c = build_en_complex(n).unwrap();
        let conj = tau.compose(&g).compose(&tau.inverse());
        prop_assert_eq!(conj.cycle_type(), g.cycle_type());
        for r in c.degrees() {
            prop_assert_eq!(chain_trace(&c, &g, r).unwrap(), chain_trace(&c, &conj, r).unwrap());
            prop_assert_eq!(homology_trace(&c, r, &g).unwrap(), homology_trace(&c, r, &conj).unwrap());
        }
    }

    #[test]
    fn shuffled_orders_judged_consistently(
        (n, k, center, seed) in (3..=5usize)
            .prop_flat_map(|n| (Just(n), 2..n))
            .prop_flat_map(|(n, k)| (Just(n), Just(k), prop::option::of(1..=n), any::<u64>()))
    ) {
        let h = match center {
            Some(v) => Hypergraph::star(n, k, v).unwrap(),
            None if 2 * k > n => Hypergraph::complete(n, k).unwrap(),
            None => Hypergraph::star(n, k, 1).unwrap(),
        };
        let mut order = facet_order(&h).unwrap();
        // a cheap deterministic shuffle keyed by the seed
        let mut state = seed | 1;
        for i in (1..order.len()).rev() {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            order.swap(i, (state % (i as u64 + 1)) as usize);
        }
        let rs = restrictions_by_definition(&order);
        let cert = verify_shelling(&h, &order, &rs, ShellingMode::Both).unwrap();
        prop_assert_eq!(cert.prop25, cert.direct);
    }

    #[test]
    fn hypergraph_json_round_trip(h in hypergraph(8)) {
        let text = serde_json::to_string(&h.to_json()).unwrap();
        let back = Hypergraph::from_json(&serde_json::from_str(&text).unwrap()).unwrap();
        prop_assert_eq!(back, h);
    }

    #[test]
    fn vertex_set_order_is_lexicographic(a in 1u16..1024, b in 1u16..1024) {
        let (x, y) = (VertexSet::from_bits(a), VertexSet::from_bits(b));
        prop_assert_eq!(x.cmp(&y), x.to_vec().cmp(&y.to_vec()));
    }
}
