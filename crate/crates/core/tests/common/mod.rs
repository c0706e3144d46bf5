//! Independent oracles shared by the integration tests. Nothing here calls
//! into the library except for reading hypergraph edges and cycle types.
#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap};

use coloring_complex::repn::CycleType;
use coloring_complex::Hypergraph;

pub fn binom(n: i64, k: i64) -> usize {
    if n < 0 || k < 0 || k > n {
        return 0;
    }
    let mut acc: u128 = 1;
    for i in 0..k as u128 {
        acc = acc * (n as u128 - i) / (i + 1);
    }
    acc as usize
}

/// Stirling numbers of the second kind by the usual recurrence.
pub fn stirling2(n: usize, m: usize) -> u64 {
    let mut s = vec![vec![0u64; n + 1]; n + 1];
    s[0][0] = 1;
    for i in 1..=n {
        for j in 1..=i {
            s[i][j] = j as u64 * s[i - 1][j] + s[i - 1][j - 1];
        }
    }
    if m > n {
        0
    } else {
        s[n][m]
    }
}

pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// Proper colorings counted over all maps, with no shared code.
pub fn brute_colorings(n: usize, edges: &[Vec<usize>], lambda: usize) -> i128 {
    if lambda == 0 {
        return 0;
    }
    let mut colors = vec![0usize; n];
    let mut count = 0i128;
    'outer: loop {
        if edges.iter().all(|e| e.iter().any(|&v| colors[v - 1] != colors[e[0] - 1])) {
            count += 1;
        }
        for c in colors.iter_mut() {
            *c += 1;
            if *c < lambda {
                continue 'outer;
            }
            *c = 0;
        }
        return count;
    }
}

/// Coefficients of the interpolating polynomial through `(x, y)` for `x = 0..=n`.
pub fn interpolate(values: &[i128]) -> Vec<i128> {
    // Newton forward differences, then expand the binomial basis.
    let n = values.len() - 1;
    let mut diffs = values.to_vec();
    let mut newton = vec![diffs[0]];
    for _ in 0..n {
        diffs = diffs.windows(2).map(|w| w[1] - w[0]).collect();
        newton.push(diffs[0]);
    }
    // Σ_j Δ^j f(0) · x(x-1)…(x-j+1)/j!
    let mut out = vec![0i128; n + 1];
    let mut falling = vec![1i128];
    let mut fact = 1i128;
    for (j, &d) in newton.iter().enumerate() {
        if j > 0 {
            fact *= j as i128;
            let mut next = vec![0i128; falling.len() + 1];
            for (i, &c) in falling.iter().enumerate() {
                next[i + 1] += c;
                next[i] -= (j as i128 - 1) * c;
            }
            falling = next;
        }
        for (i, &c) in falling.iter().enumerate() {
            assert_eq!((d * c) % fact, 0);
            out[i] += d * c / fact;
        }
    }
    out
}

pub fn brute_chromatic(h: &Hypergraph) -> Vec<i128> {
    let edges: Vec<Vec<usize>> = h.edges().iter().map(|e| e.to_vec()).collect();
    let values: Vec<i128> = (0..=h.n()).map(|l| brute_colorings(h.n(), &edges, l)).collect();
    interpolate(&values)
}

/// Ordered partitions as block bitmasks, from surjections `[n] -> [m]`.
pub fn oracle_faces(n: usize, m: usize, keep: &dyn Fn(&[u16]) -> bool) -> Vec<Vec<u16>> {
    let mut out = Vec::new();
    let mut f = vec![0usize; n];
    loop {
        let mut blocks = vec![0u16; m];
        for (v, &b) in f.iter().enumerate() {
            blocks[b] |= 1 << v;
        }
        if blocks.iter().all(|&b| b != 0) && keep(&blocks) {
            out.push(blocks);
        }
        let mut i = 0;
        loop {
            if i == n {
                return out;
            }
            f[i] += 1;
            if f[i] < m {
                break;
            }
            f[i] = 0;
            i += 1;
        }
    }
}

/// Rank of a dense integer matrix over the rationals (fraction-free elimination).
pub fn dense_rank(mut rows: Vec<Vec<i128>>) -> usize {
    let mut rank = 0;
    let ncols = rows.first().map_or(0, |r| r.len());
    for col in 0..ncols {
        let Some(p) = (rank..rows.len()).find(|&i| rows[i][col] != 0) else { continue };
        rows.swap(rank, p);
        let pivot = rows[rank].clone();
        for row in rows.iter_mut().skip(rank + 1) {
            let f = row[col];
            if f == 0 {
                continue;
            }
            let mut g = 0i128;
            for (x, &y) in row.iter_mut().zip(&pivot) {
                *x = *x * pivot[col] - f * y;
                g = gcd(g, *x);
            }
            if g > 1 {
                row.iter_mut().for_each(|x| *x /= g);
            }
        }
        rank += 1;
    }
    rank
}

fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Reduced Betti numbers of the coloring complex built from scratch.
pub fn oracle_coloring_betti(h: &Hypergraph) -> BTreeMap<isize, usize> {
    let n = h.n();
    let edges: Vec<u16> = h.edges().iter().map(|e| e.bits()).collect();
    let keep = |blocks: &[u16]| blocks.iter().any(|&b| edges.iter().any(|&e| b & e == e));
    let faces: Vec<Vec<Vec<u16>>> = (1..=n).map(|m| oracle_faces(n, m, &keep)).collect();
    // boundary from m+1 blocks to m blocks
    let mut ranks = vec![0usize; n + 1];
    for m in 1..n {
        let index: HashMap<&Vec<u16>, usize> = faces[m - 1].iter().enumerate().map(|(i, f)| (f, i)).collect();
        let mut rows = vec![vec![0i128; faces[m].len()]; faces[m - 1].len()];
        for (j, p) in faces[m].iter().enumerate() {
            for i in 0..m {
                let mut q = p.clone();
                let merged = q.remove(i + 1);
                q[i] |= merged;
                if let Some(&row) = index.get(&q) {
                    rows[row][j] += if (i + 1) % 2 == 0 { 1 } else { -1 };
                }
            }
        }
        ranks[m] = dense_rank(rows);
    }
    (1..=n)
        .map(|m| {
            let r = m as isize - 2;
            let out = if m < n { ranks[m] } else { 0 };
            (r, faces[m - 1].len() - out - ranks[m - 1])
        })
        .collect()
}

/// Hook characters from exterior powers of the reflection representation:
/// Σ_m χ_(n-m,1^m)(σ) q^m = Π_cycles (1 - (-q)^len) / (1 + q).
pub fn oracle_hooks(t: &CycleType) -> Vec<i64> {
    let mut poly = vec![1i64];
    for &len in t.parts() {
        let mut next = vec![0i64; poly.len() + len];
        for (i, &c) in poly.iter().enumerate() {
            next[i] += c;
            next[i + len] -= c * if len % 2 == 0 { 1 } else { -1 };
        }
        poly = next;
    }
    // divide by (1 + q)
    let mut quot = vec![0i64; poly.len() - 1];
    let mut carry = 0;
    for (i, q) in quot.iter_mut().enumerate() {
        *q = poly[i] - carry;
        carry = *q;
    }
    quot
}
