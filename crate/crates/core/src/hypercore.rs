//! Hypergraphs on `{1..n}`, ordered set partitions, and cyclic classes.
//!
//! Vertex subsets are bitmasks (`n <= 16`). Blocks are ordered by their
//! sorted element lists, compared lexicographically, and partitions by their
//! block sequences under that order. Every enumeration in the crate sorts
//! with this order, so basis indices are reproducible.

use std::cmp::Ordering;
use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported vertex count.
pub const MAX_VERTICES: usize = 16;

/// A subset of `{1..n}`; vertex `i` is bit `i - 1`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct VertexSet(u16);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn from_bits(bits: u16) -> Self {
        VertexSet(bits)
    }

    pub fn bits(self) -> u16 {
        self.0
    }

    pub fn singleton(v: usize) -> Self {
        debug_assert!((1..=MAX_VERTICES).contains(&v));
        VertexSet(1 << (v - 1))
    }

    /// `{1..n}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == MAX_VERTICES {
            VertexSet(u16::MAX)
        } else {
            VertexSet((1u16 << n) - 1)
        }
    }

    /// Builds a set from 1-based labels; fails on labels outside `1..=n` and repeats.
    pub fn from_labels(n: usize, labels: &[usize]) -> Result<Self> {
        let mut bits = 0u16;
        for &v in labels {
            if v == 0 || v > n {
                return Err(Error::OutOfRange(format!("vertex {v} not in 1..={n}")));
            }
            let b = 1u16 << (v - 1);
            if bits & b != 0 {
                return Err(Error::InvalidHypergraph(format!("vertex {v} repeated")));
            }
            bits |= b;
        }
        Ok(VertexSet(bits))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: usize) -> bool {
        (1..=MAX_VERTICES).contains(&v) && self.0 & (1 << (v - 1)) != 0
    }

    pub fn is_superset_of(self, other: VertexSet) -> bool {
        self.0 & other.0 == other.0
    }

    pub fn is_disjoint(self, other: VertexSet) -> bool {
        self.0 & other.0 == 0
    }

    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn minus(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1 << (v - 1);
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1 << (v - 1));
    }

    /// Smallest element, if any.
    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize + 1)
    }

    /// Largest element, if any.
    pub fn max(self) -> Option<usize> {
        (self.0 != 0).then(|| 16 - self.0.leading_zeros() as usize)
    }

    /// Elements in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize + 1;
                bits &= bits - 1;
                Some(v)
            }
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Image under a vertex relabeling `v -> perm[v - 1]`.
    pub fn relabel(self, perm: &[usize]) -> VertexSet {
        let mut out = 0u16;
        for v in self.iter() {
            out |= 1 << (perm[v - 1] - 1);
        }
        VertexSet(out)
    }
}

impl Ord for VertexSet {
    /// Lexicographic order on sorted element lists; a proper prefix sorts first.
    fn cmp(&self, other: &Self) -> Ordering {
        let (mut a, mut b) = (self.0, other.0);
        loop {
            match (a == 0, b == 0) {
                (true, true) => return Ordering::Equal,
                (true, false) => return Ordering::Less,
                (false, true) => return Ordering::Greater,
                _ => {}
            }
            let (la, lb) = (a.trailing_zeros(), b.trailing_zeros());
            if la != lb {
                return la.cmp(&lb);
            }
            a &= a - 1;
            b &= b - 1;
        }
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wide = VertexSet::max(*self).is_some_and(|m| m > 9);
        let parts: Vec<String> = self.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", parts.join(if wide { "." } else { "" }))
    }
}

impl Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

/// All `k`-subsets of `{1..n}` in lexicographic order.
pub fn k_subsets(n: usize, k: usize) -> Vec<VertexSet> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<VertexSet>) {
        if cur.len() == k {
            let mut s = VertexSet::EMPTY;
            cur.iter().for_each(|&v| s.insert(v));
            out.push(s);
            return;
        }
        for v in start..=n {
            if n - v + 1 < k - cur.len() {
                break;
            }
            cur.push(v);
            rec(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        rec(1, n, k, &mut Vec::new(), &mut out);
    }
    out
}

/// Structural family of a hypergraph, detected from its edge set.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// Every singleton is an edge (the looped complete graph `E_n`).
    Looped,
    /// Every `k`-subset is an edge.
    Complete { k: usize },
    /// Every `k`-subset through `center` is an edge, and nothing else.
    Star { k: usize, center: usize },
    /// A 2-uniform rooted tree with parent labels below child labels.
    Tree,
    Explicit,
}

/// Generator descriptors accepted by [`build_hypergraph`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GeneratorSpec {
    Complete { n: usize, k: usize },
    Star { n: usize, k: usize, center: usize },
    Looped { n: usize },
    /// Tree edges as vertex pairs, in any order.
    Tree { n: usize, edges: Vec<(usize, usize)> },
    Explicit { n: usize, edges: Vec<Vec<usize>> },
}

/// A hypergraph on `{1..n}` with a duplicate-free, sorted edge list.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<VertexSet>,
}

/// Serialized form: `{"n": 5, "edges": [[1,2,3],[1,2,4]]}`.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct HypergraphJson {
    pub n: usize,
    pub edges: Vec<Vec<usize>>,
}

fn check_n(n: usize) -> Result<()> {
    if n == 0 || n > MAX_VERTICES {
        return Err(Error::OutOfRange(format!("vertex count {n} not in 1..={MAX_VERTICES}")));
    }
    Ok(())
}

impl Hypergraph {
    /// Validates and sorts the edge list.
    pub fn new(n: usize, edges: Vec<VertexSet>) -> Result<Self> {
        check_n(n)?;
        let full = VertexSet::full(n);
        let mut seen = BTreeSet::new();
        for &e in &edges {
            if e.is_empty() {
                return Err(Error::InvalidHypergraph("empty edge".into()));
            }
            if !full.is_superset_of(e) {
                return Err(Error::OutOfRange(format!("edge {{{e}}} leaves 1..={n}")));
            }
            if !seen.insert(e) {
                return Err(Error::InvalidHypergraph(format!("duplicate edge {{{e}}}")));
            }
        }
        Ok(Hypergraph { n, edges: seen.into_iter().collect() })
    }

    pub fn from_lists(n: usize, edges: &[Vec<usize>]) -> Result<Self> {
        check_n(n)?;
        let sets = edges.iter().map(|e| VertexSet::from_labels(n, e)).collect::<Result<Vec<_>>>()?;
        Self::new(n, sets)
    }

    pub fn complete(n: usize, k: usize) -> Result<Self> {
        check_n(n)?;
        if k == 0 || k > n {
            return Err(Error::OutOfRange(format!("uniformity k={k} not in 1..={n}")));
        }
        Self::new(n, k_subsets(n, k))
    }

    pub fn star(n: usize, k: usize, center: usize) -> Result<Self> {
        check_n(n)?;
        if k == 0 || k > n {
            return Err(Error::OutOfRange(format!("uniformity k={k} not in 1..={n}")));
        }
        if center == 0 || center > n {
            return Err(Error::OutOfRange(format!("center {center} not in 1..={n}")));
        }
        let edges = k_subsets(n, k).into_iter().filter(|e| e.contains(center)).collect();
        Self::new(n, edges)
    }

    /// `E_n`: one loop per vertex, modeled as the `n` singleton edges.
    pub fn looped(n: usize) -> Result<Self> {
        check_n(n)?;
        Self::new(n, (1..=n).map(VertexSet::singleton).collect())
    }

    /// A labeled tree rooted at 1 whose parents carry smaller labels than their children.
    pub fn tree(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let lists: Vec<Vec<usize>> = edges.iter().map(|&(a, b)| vec![a, b]).collect();
        let h = Self::from_lists(n, &lists)?;
        h.check_rooted_tree()?;
        Ok(h)
    }

    /// Star tree with edges `1-2, 1-3, ..., 1-n`.
    pub fn star_tree(n: usize) -> Result<Self> {
        let edges: Vec<_> = (2..=n).map(|v| (1, v)).collect();
        Self::tree(n, &edges)
    }

    /// Path `1-2-...-n`.
    pub fn path_tree(n: usize) -> Result<Self> {
        let edges: Vec<_> = (1..n).map(|v| (v, v + 1)).collect();
        Self::tree(n, &edges)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> &[VertexSet] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// The common edge size, if all edges have one.
    pub fn uniformity(&self) -> Option<usize> {
        let k = self.edges.first()?.len();
        self.edges.iter().all(|e| e.len() == k).then_some(k)
    }

    /// True when `block` contains some edge.
    pub fn contains_edge(&self, block: VertexSet) -> bool {
        self.edges.iter().any(|&e| block.is_superset_of(e))
    }

    /// True when the relabeling `perm` (1-based images) maps the edge set onto itself.
    pub fn is_invariant_under(&self, perm: &[usize]) -> bool {
        self.edges.iter().all(|e| self.edges.binary_search(&e.relabel(perm)).is_ok())
    }

    pub fn family(&self) -> Family {
        let n = self.n;
        let Some(k) = self.uniformity() else {
            return Family::Explicit;
        };
        let count = self.edges.len() as u128;
        if k == 1 && count == n as u128 {
            return Family::Looped;
        }
        if count == binomial(n as u64, k as u64) {
            return Family::Complete { k };
        }
        let common = self.edges.iter().fold(VertexSet::full(n), |acc, &e| VertexSet(acc.0 & e.0));
        if let Some(center) = common.min() {
            if count == binomial(n as u64 - 1, k as u64 - 1) {
                return Family::Star { k, center };
            }
        }
        if k == 2 && self.check_rooted_tree().is_ok() {
            return Family::Tree;
        }
        Family::Explicit
    }

    /// Checks the tree conditions: `n - 1` two-element edges, connected, and
    /// every parent (relative to root 1) smaller than its children.
    pub fn check_rooted_tree(&self) -> Result<()> {
        let n = self.n;
        if self.edges.len() != n - 1 || self.edges.iter().any(|e| e.len() != 2) {
            return Err(Error::InvalidHypergraph(format!(
                "a tree on {n} vertices needs {} two-element edges",
                n - 1
            )));
        }
        let mut parent = vec![0usize; n + 1];
        let mut seen = VertexSet::singleton(1);
        let mut queue = VecDeque::from([1usize]);
        while let Some(u) = queue.pop_front() {
            for e in &self.edges {
                if !e.contains(u) {
                    continue;
                }
                let v = e.minus(VertexSet::singleton(u)).min().unwrap();
                if seen.contains(v) {
                    continue;
                }
                if v < u {
                    return Err(Error::InvalidHypergraph(format!(
                        "child {v} has a smaller label than its parent {u}"
                    )));
                }
                parent[v] = u;
                seen.insert(v);
                queue.push_back(v);
            }
        }
        if seen != VertexSet::full(n) {
            return Err(Error::InvalidHypergraph("edge list is not connected".into()));
        }
        Ok(())
    }

    pub fn to_json(&self) -> HypergraphJson {
        HypergraphJson { n: self.n, edges: self.edges.iter().map(|e| e.to_vec()).collect() }
    }

    pub fn from_json(json: &HypergraphJson) -> Result<Self> {
        Self::from_lists(json.n, &json.edges)
    }
}

impl Serialize for Hypergraph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

/// Builds a hypergraph from a generator descriptor.
pub fn build_hypergraph(spec: &GeneratorSpec) -> Result<Hypergraph> {
    match spec {
        GeneratorSpec::Complete { n, k } => Hypergraph::complete(*n, *k),
        GeneratorSpec::Star { n, k, center } => Hypergraph::star(*n, *k, *center),
        GeneratorSpec::Looped { n } => Hypergraph::looped(*n),
        GeneratorSpec::Tree { n, edges } => Hypergraph::tree(*n, edges),
        GeneratorSpec::Explicit { n, edges } => Hypergraph::from_lists(*n, edges),
    }
}

/// Binomial coefficient; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// Binomial coefficient with integer arguments; zero outside `0 <= k <= n`.
pub fn binomial_i(n: i64, k: i64) -> u128 {
    if n < 0 || k < 0 || k > n {
        0
    } else {
        binomial(n as u64, k as u64)
    }
}

/// A sequence of pairwise-disjoint nonempty blocks covering `{1..n}`.
///
/// A partition with `m` blocks is a face of degree `m - 2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrderedPartition {
    blocks: Vec<VertexSet>,
}

impl OrderedPartition {
    pub fn new(n: usize, blocks: Vec<VertexSet>) -> Result<Self> {
        check_n(n)?;
        let mut acc = VertexSet::EMPTY;
        for b in &blocks {
            if b.is_empty() {
                return Err(Error::InvalidPartition("empty block".into()));
            }
            if !acc.is_disjoint(*b) {
                return Err(Error::InvalidPartition(format!("block {{{b}}} overlaps an earlier block")));
            }
            acc = acc.union(*b);
        }
        if acc != VertexSet::full(n) {
            return Err(Error::InvalidPartition(format!("blocks do not cover 1..={n}")));
        }
        Ok(OrderedPartition { blocks })
    }

    pub fn from_lists(n: usize, blocks: &[&[usize]]) -> Result<Self> {
        let sets = blocks.iter().map(|b| VertexSet::from_labels(n, b)).collect::<Result<Vec<_>>>()?;
        Self::new(n, sets)
    }

    /// No validation; callers guarantee the partition invariants.
    pub(crate) fn from_blocks_unchecked(blocks: Vec<VertexSet>) -> Self {
        OrderedPartition { blocks }
    }

    pub fn blocks(&self) -> &[VertexSet] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn n(&self) -> usize {
        self.blocks.iter().map(|b| b.len()).sum()
    }

    /// Face degree `r = m - 2`.
    pub fn degree(&self) -> isize {
        self.blocks.len() as isize - 2
    }

    /// Merges blocks `i` and `i + 1` (0-based).
    pub fn merge_adjacent(&self, i: usize) -> OrderedPartition {
        let mut blocks = Vec::with_capacity(self.blocks.len() - 1);
        blocks.extend_from_slice(&self.blocks[..i]);
        blocks.push(self.blocks[i].union(self.blocks[i + 1]));
        blocks.extend_from_slice(&self.blocks[i + 2..]);
        OrderedPartition { blocks }
    }

    /// Merges the last block into the first: `(B_1 ∪ B_m, B_2, ..., B_{m-1})`.
    pub fn merge_wraparound(&self) -> OrderedPartition {
        let m = self.blocks.len();
        let mut blocks = self.blocks[..m - 1].to_vec();
        blocks[0] = blocks[0].union(self.blocks[m - 1]);
        OrderedPartition { blocks }
    }

    /// `s` single-step rotations `(B_1, ..., B_m) -> (B_2, ..., B_m, B_1)`.
    pub fn rotate(&self, s: usize) -> OrderedPartition {
        let mut blocks = self.blocks.clone();
        if !blocks.is_empty() {
            let len = blocks.len();
            blocks.rotate_left(s % len);
        }
        OrderedPartition { blocks }
    }

    /// Applies the vertex relabeling `v -> perm[v - 1]` inside every block.
    pub fn relabel(&self, perm: &[usize]) -> OrderedPartition {
        OrderedPartition { blocks: self.blocks.iter().map(|b| b.relabel(perm)).collect() }
    }

    /// Coarsening test: `self` arises from `finer` by merging consecutive runs of blocks.
    pub fn is_coarsening_of(&self, finer: &OrderedPartition) -> bool {
        let mut it = finer.blocks.iter();
        for &target in &self.blocks {
            let mut acc = VertexSet::EMPTY;
            while acc != target {
                match it.next() {
                    Some(&b) if target.is_superset_of(b) => acc = acc.union(b),
                    _ => return false,
                }
            }
        }
        it.next().is_none()
    }

    pub fn to_lists(&self) -> Vec<Vec<usize>> {
        self.blocks.iter().map(|b| b.to_vec()).collect()
    }
}

impl fmt::Display for OrderedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.blocks.iter().map(|b| b.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl Serialize for OrderedPartition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.blocks.iter())
    }
}

/// Canonical representative of a cyclic equivalence class: the rotation
/// with vertex 1 in the first block. Signs live outside the class.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CyclicClass(OrderedPartition);

impl CyclicClass {
    /// Wraps a partition already in canonical form.
    pub fn from_canonical(rep: OrderedPartition) -> Result<Self> {
        match rep.blocks.first() {
            Some(b) if b.contains(1) => Ok(CyclicClass(rep)),
            _ => Err(Error::InvalidPartition(format!("{rep} does not start with the block of 1"))),
        }
    }

    pub fn rep(&self) -> &OrderedPartition {
        &self.0
    }

    pub fn into_rep(self) -> OrderedPartition {
        self.0
    }
}

impl fmt::Display for CyclicClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Rotates `p` so that the block containing vertex 1 comes first.
///
/// Each single-step rotation contributes `(-1)^(r+1) = (-1)^(m-1)`.
pub fn canonicalize_cyclic(p: &OrderedPartition) -> Result<(CyclicClass, i64)> {
    let s = p
        .blocks
        .iter()
        .position(|b| b.contains(1))
        .ok_or_else(|| Error::InvalidPartition(format!("{p} has no block containing 1")))?;
    Ok(canonical_with_shift(p, s))
}

pub(crate) fn canonical_with_shift(p: &OrderedPartition, s: usize) -> (CyclicClass, i64) {
    let m = p.blocks.len();
    let sign = if (m - 1) % 2 == 1 && s % 2 == 1 { -1 } else { 1 };
    (CyclicClass(p.rotate(s)), sign)
}

/// Unordered set partitions of `{1..n}` into exactly `m` blocks, blocks in
/// order of their smallest element.
pub fn set_partitions(n: usize, m: usize) -> Vec<Vec<VertexSet>> {
    fn rec(v: usize, n: usize, m: usize, cur: &mut Vec<VertexSet>, out: &mut Vec<Vec<VertexSet>>) {
        if v > n {
            if cur.len() == m {
                out.push(cur.clone());
            }
            return;
        }
        // vertices left must be able to open the missing blocks
        if m - cur.len() > n - v + 1 {
            return;
        }
        for i in 0..cur.len() {
            cur[i].insert(v);
            rec(v + 1, n, m, cur, out);
            cur[i].remove(v);
        }
        if cur.len() < m {
            cur.push(VertexSet::singleton(v));
            rec(v + 1, n, m, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if m >= 1 && m <= n {
        rec(1, n, m, &mut Vec::with_capacity(m), &mut out);
    }
    out
}

fn for_each_permutation<T: Copy>(items: &mut [T], k: usize, f: &mut impl FnMut(&[T])) {
    if k == items.len() {
        f(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        for_each_permutation(items, k + 1, f);
        items.swap(k, i);
    }
}

/// Optional filter on the block list of a candidate partition.
pub type BlockFilter<'a> = &'a (dyn Fn(&[VertexSet]) -> bool + Sync);

fn check_block_count(n: usize, m: usize) -> Result<()> {
    check_n(n)?;
    if m == 0 || m > n {
        return Err(Error::OutOfRange(format!("block count {m} not in 1..={n}")));
    }
    Ok(())
}

/// Every ordered partition of `{1..n}` into `m` blocks, sorted, optionally filtered.
pub fn enumerate_ordered_partitions(
    n: usize,
    m: usize,
    filter: Option<BlockFilter<'_>>,
) -> Result<Vec<OrderedPartition>> {
    check_block_count(n, m)?;
    let mut out = Vec::new();
    for mut blocks in set_partitions(n, m) {
        for_each_permutation(&mut blocks, 0, &mut |perm: &[VertexSet]| {
            if filter.is_none_or(|f| f(perm)) {
                out.push(OrderedPartition { blocks: perm.to_vec() });
            }
        });
    }
    out.sort_unstable();
    Ok(out)
}

/// Canonical cyclic classes on `m` blocks, sorted, optionally filtered.
pub fn enumerate_cyclic_classes(
    n: usize,
    m: usize,
    filter: Option<BlockFilter<'_>>,
) -> Result<Vec<CyclicClass>> {
    check_block_count(n, m)?;
    let mut out = Vec::new();
    for mut blocks in set_partitions(n, m) {
        // set_partitions puts the block of 1 first; permute the rest
        for_each_permutation(&mut blocks, 1, &mut |perm: &[VertexSet]| {
            if filter.is_none_or(|f| f(perm)) {
                out.push(CyclicClass(OrderedPartition { blocks: perm.to_vec() }));
            }
        });
    }
    out.sort_unstable();
    Ok(out)
}
