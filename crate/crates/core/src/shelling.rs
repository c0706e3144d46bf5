//! Shellings of coloring complexes for complete hypergraphs with `k > n/2`
//! and for star hypergraphs.
//!
//! A facet with `m` blocks is treated as a simplex on its `m - 1` block gaps:
//! a face keeps some gaps and merges across the others, so faces of a facet
//! are exactly its coarsenings by consecutive runs. Gap sets are bitmasks,
//! bit `j` standing for the gap between blocks `j` and `j + 1` (0-based).

use std::collections::{HashMap, HashSet};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hypercore::{enumerate_ordered_partitions, k_subsets, Family, Hypergraph, OrderedPartition, VertexSet};

/// A facet `(w_1, …, w_{h-1}, B, w_h, …, w_{n-k})`: one block of size `k`,
/// all others singletons.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Facet {
    partition: OrderedPartition,
    h: usize,
    block: VertexSet,
    w: Vec<usize>,
    center: Option<usize>,
}

impl Facet {
    /// Assembles the facet from the position `h` (1-based) of the big block,
    /// the block itself and the word `w` of the remaining vertices.
    pub fn new(h: usize, block: VertexSet, w: Vec<usize>, center: Option<usize>) -> Result<Self> {
        let n = block.len() + w.len();
        if h == 0 || h > w.len() + 1 {
            return Err(Error::OutOfRange(format!("block position {h} not in 1..={}", w.len() + 1)));
        }
        let mut blocks: Vec<VertexSet> = w.iter().map(|&v| VertexSet::singleton(v)).collect();
        blocks.insert(h - 1, block);
        let partition = OrderedPartition::new(n, blocks)?;
        if let Some(c) = center {
            if !block.contains(c) {
                return Err(Error::InvalidPartition(format!("big block {{{block}}} misses the center {c}")));
            }
        }
        Ok(Facet { partition, h, block, w, center })
    }

    pub fn partition(&self) -> &OrderedPartition {
        &self.partition
    }

    /// 1-based position of the big block.
    pub fn h(&self) -> usize {
        self.h
    }

    pub fn block(&self) -> VertexSet {
        self.block
    }

    /// The other vertices in order of appearance.
    pub fn w(&self) -> &[usize] {
        &self.w
    }

    pub fn center(&self) -> Option<usize> {
        self.center
    }

    pub fn gap_count(&self) -> usize {
        self.partition.len() - 1
    }

    /// Largest element of the big block that may be exchanged for a smaller
    /// outside vertex while staying an edge (the center of a star is pinned).
    pub fn exchange_max(&self) -> Option<usize> {
        match self.center {
            Some(c) => self.block.minus(VertexSet::singleton(c)).max(),
            None => self.block.max(),
        }
    }
}

impl fmt::Display for Facet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.partition.fmt(f)
    }
}

impl Serialize for Facet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.partition.serialize(s)
    }
}

/// Face of `p` keeping exactly the gaps in `kept`.
pub fn face_from_gaps(p: &OrderedPartition, kept: u32) -> OrderedPartition {
    let blocks = p.blocks();
    let mut out = Vec::with_capacity(kept.count_ones() as usize + 1);
    let mut acc = VertexSet::EMPTY;
    for (j, &b) in blocks.iter().enumerate() {
        acc = acc.union(b);
        if j + 1 == blocks.len() || kept & (1 << j) != 0 {
            out.push(acc);
            acc = VertexSet::EMPTY;
        }
    }
    OrderedPartition::from_blocks_unchecked(out)
}

/// Gap set of `face` relative to `p`, when `face` is a coarsening of `p`.
pub fn gaps_of(p: &OrderedPartition, face: &OrderedPartition) -> Option<u32> {
    if !face.is_coarsening_of(p) {
        return None;
    }
    let mut kept = 0u32;
    let mut it = face.blocks().iter();
    let mut target = *it.next()?;
    let mut acc = VertexSet::EMPTY;
    for (j, &b) in p.blocks().iter().enumerate() {
        acc = acc.union(b);
        if acc == target {
            if j + 1 < p.len() {
                kept |= 1 << j;
                target = *it.next()?;
            }
            acc = VertexSet::EMPTY;
        }
    }
    Some(kept)
}

fn supported(h: &Hypergraph) -> Result<(usize, Option<usize>)> {
    let n = h.n();
    match h.family() {
        Family::Complete { k } if k >= 2 && 2 * k > n => Ok((k, None)),
        Family::Complete { k } if k >= 2 => Err(Error::Unsupported(format!(
            "complete({n},{k}) has k <= n/2 and contains a pair of disjoint edges, so its coloring complex is not shellable"
        ))),
        Family::Star { k, center } if k >= 2 => Ok((k, Some(center))),
        other => Err(Error::Unsupported(format!(
            "shellings are provided for complete k-uniform hypergraphs with k > n/2 and for stars with k >= 2, got {other:?}"
        ))),
    }
}

fn lex_permutations(items: &[usize]) -> Vec<Vec<usize>> {
    fn rec(rest: &mut Vec<usize>, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest.is_empty() {
            out.push(cur.clone());
            return;
        }
        for i in 0..rest.len() {
            let v = rest.remove(i);
            cur.push(v);
            rec(rest, cur, out);
            cur.pop();
            rest.insert(i, v);
        }
    }
    let mut out = Vec::new();
    let mut rest = items.to_vec();
    rest.sort_unstable();
    rec(&mut rest, &mut Vec::new(), &mut out);
    out
}

/// All facets sorted by block position, then big block (lexicographic), then
/// word `w` (lexicographic).
pub fn facet_order(h: &Hypergraph) -> Result<Vec<Facet>> {
    let (k, center) = supported(h)?;
    let n = h.n();
    let blocks: Vec<VertexSet> =
        k_subsets(n, k).into_iter().filter(|b| center.is_none_or(|c| b.contains(c))).collect();
    let mut out = Vec::new();
    for pos in 1..=n - k + 1 {
        for &b in &blocks {
            for w in lex_permutations(&VertexSet::full(n).minus(b).to_vec()) {
                out.push(Facet::new(pos, b, w, center)?);
            }
        }
    }
    Ok(out)
}

/// Closed-form restriction: keep a gap between two outside vertices exactly at
/// a descent of `w`, always keep the gap just before the big block, and keep
/// the gap just after it when `w_h` is smaller than the exchangeable maximum.
pub fn restriction_closed_form(f: &Facet) -> OrderedPartition {
    let blocks = f.partition.blocks();
    let big = f.h - 1;
    let mut kept = 0u32;
    for j in 0..blocks.len().saturating_sub(1) {
        let keep = if j + 1 == big {
            true
        } else if j == big {
            let first_after = blocks[j + 1].min().unwrap();
            f.exchange_max().is_some_and(|m| first_after < m)
        } else {
            blocks[j].min().unwrap() > blocks[j + 1].min().unwrap()
        };
        if keep {
            kept |= 1 << j;
        }
    }
    face_from_gaps(&f.partition, kept)
}

fn all_gaps(f: &Facet) -> u32 {
    (1u32 << f.gap_count()) - 1
}

/// Restriction of facet `i` (0-based) straight from the definition: the gaps
/// whose removal yields a face of an earlier facet.
pub fn restriction_by_definition(facets: &[Facet], i: usize) -> Result<OrderedPartition> {
    let f = facets
        .get(i)
        .ok_or_else(|| Error::OutOfRange(format!("facet index {i} not below {}", facets.len())))?;
    let full = all_gaps(f);
    let mut kept = 0u32;
    for x in 0..f.gap_count() {
        let face = face_from_gaps(&f.partition, full & !(1 << x));
        if facets[..i].iter().any(|g| face.is_coarsening_of(&g.partition)) {
            kept |= 1 << x;
        }
    }
    Ok(face_from_gaps(&f.partition, kept))
}

/// [`restriction_by_definition`] for every facet, sharing the face set of the prefix.
pub fn restrictions_by_definition(facets: &[Facet]) -> Vec<OrderedPartition> {
    let mut seen: HashSet<OrderedPartition> = HashSet::new();
    let mut out = Vec::with_capacity(facets.len());
    for f in facets {
        let full = all_gaps(f);
        let mut kept = 0u32;
        for x in 0..f.gap_count() {
            if seen.contains(&face_from_gaps(&f.partition, full & !(1 << x))) {
                kept |= 1 << x;
            }
        }
        out.push(face_from_gaps(&f.partition, kept));
        for s in 0..=full {
            seen.insert(face_from_gaps(&f.partition, s));
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ShellingMode {
    /// Interval partition plus the index condition.
    Prop25,
    /// Purity and codimension of each new intersection.
    Direct,
    Both,
}

/// Outcome of checking a facet order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShellingCertificate {
    pub order: Vec<Facet>,
    pub restrictions: Vec<OrderedPartition>,
    pub prop25: Option<bool>,
    pub direct: Option<bool>,
    pub first_violation: Option<String>,
}

impl ShellingCertificate {
    /// True when every requested check passed.
    pub fn is_valid(&self) -> bool {
        self.prop25 != Some(false) && self.direct != Some(false)
    }
}

/// Faces of the coloring complex of `h`, every degree.
pub fn coloring_faces(h: &Hypergraph) -> Result<Vec<OrderedPartition>> {
    let filter = |b: &[VertexSet]| b.iter().any(|&x| h.contains_edge(x));
    let mut out = Vec::new();
    for m in 1..=h.n() {
        out.extend(enumerate_ordered_partitions(h.n(), m, Some(&filter))?);
    }
    Ok(out)
}

fn is_maximal(h: &Hypergraph, p: &OrderedPartition) -> bool {
    let blocks = p.blocks();
    for (i, &x) in blocks.iter().enumerate() {
        let others = blocks.iter().enumerate().any(|(j, &b)| j != i && h.contains_edge(b));
        // proper nonempty subsets of x, via submask enumeration
        let bits = x.bits();
        let mut sub = (bits.wrapping_sub(1)) & bits;
        while sub != 0 {
            let y = VertexSet::from_bits(sub);
            if others || h.contains_edge(y) || h.contains_edge(x.minus(y)) {
                return false;
            }
            sub = (sub - 1) & bits;
        }
    }
    true
}

fn check_prop25(faces: &[OrderedPartition], facets: &[Facet], restrictions: &[OrderedPartition]) -> Option<String> {
    let mut hits: HashMap<&OrderedPartition, Vec<usize>> = faces.iter().map(|f| (f, Vec::new())).collect();
    let mut restriction_gaps = Vec::with_capacity(facets.len());
    for (i, (f, r)) in facets.iter().zip(restrictions).enumerate() {
        let Some(base) = gaps_of(&f.partition, r) else {
            return Some(format!("restriction {r} of facet {} ({f}) is not a face of it", i + 1));
        };
        restriction_gaps.push(base);
        let full = all_gaps(f);
        let free = full & !base;
        // supersets of base inside full
        let mut sub = free;
        loop {
            let face = face_from_gaps(&f.partition, base | sub);
            match hits.get_mut(&face) {
                Some(v) => v.push(i),
                None => return Some(format!("interval of facet {} ({f}) contains {face}, not a face", i + 1)),
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & free;
        }
    }
    for face in faces {
        let v = &hits[face];
        if v.len() != 1 {
            let owners: Vec<String> = v.iter().map(|i| (i + 1).to_string()).collect();
            return Some(format!("face {face} lies in {} intervals (facets [{}])", v.len(), owners.join(",")));
        }
    }
    let mut owner: HashMap<&OrderedPartition, usize> = HashMap::new();
    for (i, r) in restrictions.iter().enumerate() {
        owner.entry(r).or_insert(i);
    }
    for (j, f) in facets.iter().enumerate() {
        for s in 0..=all_gaps(f) {
            let g = face_from_gaps(&f.partition, s);
            if let Some(&i) = owner.get(&g) {
                if i > j {
                    return Some(format!(
                        "restriction {g} of facet {} lies in the earlier facet {} ({f})",
                        i + 1,
                        j + 1
                    ));
                }
            }
        }
    }
    None
}

fn check_direct(facets: &[Facet]) -> Option<String> {
    let mut seen: HashSet<OrderedPartition> = HashSet::new();
    for (l, f) in facets.iter().enumerate() {
        let full = all_gaps(f);
        let g = f.gap_count();
        if l > 0 {
            let inside: Vec<bool> = (0..=full).map(|s| seen.contains(&face_from_gaps(&f.partition, s))).collect();
            let ridges: Vec<u32> =
                (0..g).map(|x| full & !(1 << x)).filter(|&s| inside[s as usize]).collect();
            if ridges.is_empty() {
                return Some(format!("facet {} ({f}) meets the earlier facets in no codimension-one face", l + 1));
            }
            for s in 0..=full {
                if s != full && inside[s as usize] && !ridges.iter().any(|&t| t & s == s) {
                    let face = face_from_gaps(&f.partition, s);
                    return Some(format!(
                        "facet {} ({f}) meets the earlier facets in the non-pure face {face}",
                        l + 1
                    ));
                }
            }
            if inside[full as usize] {
                return Some(format!("facet {} ({f}) repeats an earlier facet", l + 1));
            }
        }
        for s in 0..=full {
            seen.insert(face_from_gaps(&f.partition, s));
        }
    }
    None
}

/// Checks a facet order with the given restrictions. Fails outright when the
/// facet list does not consist of exactly the maximal faces of the coloring
/// complex of `h`.
pub fn verify_shelling(
    h: &Hypergraph,
    facets: &[Facet],
    restrictions: &[OrderedPartition],
    mode: ShellingMode,
) -> Result<ShellingCertificate> {
    if facets.len() != restrictions.len() {
        return Err(Error::FacetMismatch(format!(
            "{} facets but {} restrictions",
            facets.len(),
            restrictions.len()
        )));
    }
    let faces = coloring_faces(h)?;
    let maximal: HashSet<&OrderedPartition> = faces.iter().filter(|p| is_maximal(h, p)).collect();
    let given: HashSet<&OrderedPartition> = facets.iter().map(|f| &f.partition).collect();
    if given.len() != facets.len() {
        return Err(Error::FacetMismatch("a facet is listed twice".into()));
    }
    if let Some(extra) = given.difference(&maximal).next() {
        return Err(Error::FacetMismatch(format!("{extra} is not a maximal face")));
    }
    if let Some(missing) = maximal.difference(&given).next() {
        return Err(Error::FacetMismatch(format!("maximal face {missing} is not listed")));
    }

    let mut first_violation = None;
    let prop25 = matches!(mode, ShellingMode::Prop25 | ShellingMode::Both).then(|| {
        let v = check_prop25(&faces, facets, restrictions);
        let ok = v.is_none();
        first_violation = first_violation.take().or(v);
        ok
    });
    let direct = matches!(mode, ShellingMode::Direct | ShellingMode::Both).then(|| {
        let v = check_direct(facets);
        let ok = v.is_none();
        first_violation = first_violation.take().or(v);
        ok
    });
    Ok(ShellingCertificate {
        order: facets.to_vec(),
        restrictions: restrictions.to_vec(),
        prop25,
        direct,
        first_violation,
    })
}

/// Facets with `R(F) = F`, read off the inequalities: `w` decreasing before
/// and after the big block, and `w_h` below the exchangeable maximum of the
/// big block (vacuous when the big block is last).
pub fn homology_facets(h: &Hypergraph) -> Result<Vec<Facet>> {
    let facets = facet_order(h)?;
    Ok(facets
        .into_iter()
        .filter(|f| {
            let (pre, post) = f.w.split_at(f.h - 1);
            let decreasing = |s: &[usize]| s.windows(2).all(|p| p[0] > p[1]);
            let bound = post.first().is_none_or(|&wh| f.exchange_max().is_some_and(|m| m > wh));
            decreasing(pre) && decreasing(post) && bound
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vs(n: usize, v: &[usize]) -> VertexSet {
        VertexSet::from_labels(n, v).unwrap()
    }

    fn op(n: usize, blocks: &[&[usize]]) -> OrderedPartition {
        OrderedPartition::from_lists(n, blocks).unwrap()
    }

    #[test]
    fn order_of_complete_4_3() {
        let h = Hypergraph::complete(4, 3).unwrap();
        let order = facet_order(&h).unwrap();
        assert_eq!(order.len(), 8);
        assert_eq!(order[0].to_string(), "[123,4]");
        assert_eq!(order[1].to_string(), "[124,3]");
        assert_eq!(order[7].to_string(), "[1,234]");
        assert_eq!(facet_order(&Hypergraph::complete(5, 3).unwrap()).unwrap().len(), 60);
        assert_eq!(facet_order(&Hypergraph::star(4, 3, 1).unwrap()).unwrap().len(), 6);
    }

    #[test]
    fn refuses_small_k() {
        let err = facet_order(&Hypergraph::complete(6, 3).unwrap()).unwrap_err();
        assert!(err.to_string().contains("disjoint edges"));
        assert!(facet_order(&Hypergraph::looped(3).unwrap()).is_err());
    }

    #[test]
    fn closed_form_examples() {
        let f = Facet::new(1, vs(5, &[1, 2, 3]), vec![4, 5], None).unwrap();
        assert_eq!(restriction_closed_form(&f), op(5, &[&[1, 2, 3, 4, 5]]));
        let f = Facet::new(2, vs(5, &[1, 2, 5]), vec![3, 4], None).unwrap();
        assert_eq!(restriction_closed_form(&f), f.partition().clone());
        let f = Facet::new(2, vs(5, &[1, 2, 4]), vec![5, 3], None).unwrap();
        assert_eq!(restriction_closed_form(&f), f.partition().clone());
    }

    #[test]
    fn definition_examples() {
        let order = facet_order(&Hypergraph::complete(4, 3).unwrap()).unwrap();
        assert_eq!(restriction_by_definition(&order, 0).unwrap(), op(4, &[&[1, 2, 3, 4]]));
        assert_eq!(restriction_by_definition(&order, 1).unwrap(), order[1].partition().clone());
        assert!(restriction_by_definition(&order, 8).is_err());
        let batch = restrictions_by_definition(&order);
        for (i, r) in batch.iter().enumerate() {
            assert_eq!(*r, restriction_by_definition(&order, i).unwrap());
        }
    }

    #[test]
    fn gap_round_trip() {
        let p = op(5, &[&[3], &[1, 2], &[4], &[5]]);
        for s in 0..8u32 {
            let face = face_from_gaps(&p, s);
            assert_eq!(gaps_of(&p, &face), Some(s));
        }
        assert_eq!(gaps_of(&p, &op(5, &[&[1, 2, 3], &[4, 5]])), Some(0b010));
        assert_eq!(gaps_of(&p, &op(5, &[&[1, 2], &[3, 4, 5]])), None);
    }

    #[test]
    fn certificate_for_complete_4_3() {
        let h = Hypergraph::complete(4, 3).unwrap();
        let order = facet_order(&h).unwrap();
        let rs: Vec<_> = order.iter().map(restriction_closed_form).collect();
        let cert = verify_shelling(&h, &order, &rs, ShellingMode::Both).unwrap();
        assert!(cert.is_valid());
        assert_eq!(cert.first_violation, None);

        let rev: Vec<Facet> = order.iter().rev().cloned().collect();
        let rev_rs: Vec<_> = rev.iter().map(restriction_closed_form).collect();
        let cert = verify_shelling(&h, &rev, &rev_rs, ShellingMode::Prop25).unwrap();
        assert_eq!(cert.prop25, Some(false));
        assert_eq!(cert.direct, None);
        assert!(cert.first_violation.unwrap().contains("earlier facet"));
    }

    #[test]
    fn facet_list_must_match() {
        let h = Hypergraph::complete(4, 3).unwrap();
        let order = facet_order(&h).unwrap();
        let rs: Vec<_> = order.iter().map(restriction_closed_form).collect();
        assert!(verify_shelling(&h, &order[1..], &rs[1..], ShellingMode::Both).is_err());
        assert!(verify_shelling(&h, &order, &rs[1..], ShellingMode::Both).is_err());
    }

    #[test]
    fn gamma_counts() {
        assert_eq!(homology_facets(&Hypergraph::complete(4, 3).unwrap()).unwrap().len(), 7);
        assert_eq!(homology_facets(&Hypergraph::star(4, 3, 1).unwrap()).unwrap().len(), 5);
        assert_eq!(homology_facets(&Hypergraph::star(5, 3, 1).unwrap()).unwrap().len(), 17);
    }
}
