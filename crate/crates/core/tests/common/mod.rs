//! Brute-force oracles, written independently of the library's algorithms.

#![allow(dead_code)]

use rand::Rng;
use zf_core::Graph;

/// Closure by synchronous rounds: every force available in a round fires at once.
pub fn closure_rounds(g: &Graph, start: &[usize]) -> Vec<bool> {
    let mut blue = vec![false; g.order()];
    for &v in start {
        blue[v] = true;
    }
    loop {
        let mut fresh = Vec::new();
        for v in 0..g.order() {
            if !blue[v] {
                continue;
            }
            let white: Vec<usize> = g.neighbors(v).iter().copied().filter(|&w| !blue[w]).collect();
            if white.len() == 1 {
                fresh.push(white[0]);
            }
        }
        if fresh.is_empty() {
            return blue;
        }
        for w in fresh {
            blue[w] = true;
        }
    }
}

/// Closure applying a uniformly random available force at each step.
pub fn closure_random_schedule(g: &Graph, start: &[usize], rng: &mut impl Rng) -> Vec<bool> {
    let mut blue = vec![false; g.order()];
    for &v in start {
        blue[v] = true;
    }
    loop {
        let available: Vec<usize> = (0..g.order())
            .filter_map(|v| {
                if !blue[v] {
                    return None;
                }
                let mut white = g.neighbors(v).iter().copied().filter(|&w| !blue[w]);
                match (white.next(), white.next()) {
                    (Some(w), None) => Some(w),
                    _ => None,
                }
            })
            .collect();
        if available.is_empty() {
            return blue;
        }
        blue[available[rng.gen_range(0..available.len())]] = true;
    }
}

pub fn members(mask: u64, n: usize) -> Vec<usize> {
    (0..n).filter(|&v| mask >> v & 1 == 1).collect()
}

pub fn is_zfs_oracle(g: &Graph, set: &[usize]) -> bool {
    closure_rounds(g, set).iter().all(|&b| b)
}

/// Z(G) and all minimum zero forcing sets over all `2^n` subsets.
pub fn min_zfs_oracle(g: &Graph) -> (usize, Vec<Vec<usize>>) {
    let n = g.order();
    let mut best = usize::MAX;
    let mut sets = Vec::new();
    for mask in 0u64..(1 << n) {
        let k = mask.count_ones() as usize;
        if k > best {
            continue;
        }
        let s = members(mask, n);
        if is_zfs_oracle(g, &s) {
            if k < best {
                best = k;
                sets.clear();
            }
            sets.push(s);
        }
    }
    sets.sort();
    (best, sets)
}

/// Isomorphism by trying every permutation.
pub fn isomorphic_oracle(g: &Graph, h: &Graph) -> bool {
    if g.order() != h.order() || g.size() != h.size() {
        return false;
    }
    let n = g.order();
    let mut perm: Vec<usize> = (0..n).collect();
    permutations(&mut perm, 0, &mut |p| {
        g.edges().iter().all(|&(u, v)| h.has_edge(p[u], p[v]))
    })
}

fn permutations(p: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize]) -> bool) -> bool {
    if k == p.len() {
        return f(p);
    }
    for i in k..p.len() {
        p.swap(k, i);
        if permutations(p, k + 1, f) {
            p.swap(k, i);
            return true;
        }
        p.swap(k, i);
    }
    false
}

pub fn clique_oracle(g: &Graph) -> usize {
    let n = g.order();
    (0u64..(1 << n))
        .filter(|&mask| {
            let s = members(mask, n);
            s.iter().enumerate().all(|(i, &u)| s[i + 1..].iter().all(|&v| g.has_edge(u, v)))
        })
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Exhaustive scan of 3- and 4-subsets for an induced C3 or C4.
pub fn induced_c3_c4_oracle(g: &Graph) -> bool {
    let n = g.order();
    for mask in 0u64..(1 << n) {
        let k = mask.count_ones();
        if k != 3 && k != 4 {
            continue;
        }
        let s = members(mask, n);
        let deg: Vec<usize> = s
            .iter()
            .map(|&u| s.iter().filter(|&&v| g.has_edge(u, v)).count())
            .collect();
        if deg.iter().all(|&d| d == 2) {
            // Every vertex of degree 2 on 3 or 4 vertices is exactly C3 or C4.
            return true;
        }
    }
    false
}

/// The vertex sequence of the path induced by `block`, oriented from its
/// smaller endpoint, or `None` if `block` does not induce a path.
pub fn as_path(t: &Graph, block: &[usize]) -> Option<Vec<usize>> {
    let inside = |v: usize| block.contains(&v);
    let deg = |v: usize| t.neighbors(v).iter().filter(|&&w| inside(w)).count();
    if block.iter().any(|&v| deg(v) > 2) {
        return None;
    }
    let start = if block.len() == 1 {
        block[0]
    } else {
        *block.iter().filter(|&&v| deg(v) == 1).min()?
    };
    let mut seq = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    while let Some(&next) = t.neighbors(cur).iter().find(|&&w| inside(w) && w != prev) {
        seq.push(next);
        prev = cur;
        cur = next;
        if seq.len() > block.len() {
            return None;
        }
    }
    (seq.len() == block.len()).then_some(seq)
}

/// All minimum path covers of `t` by enumerating every set partition of
/// its vertices; canonical form: paths from their smaller endpoint, sorted by
/// least vertex, covers sorted.
pub fn min_path_covers_oracle(t: &Graph) -> Vec<Vec<Vec<usize>>> {
    let n = t.order();
    let mut best: Vec<Vec<Vec<usize>>> = Vec::new();
    let mut best_len = usize::MAX;
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    partitions(0, n, &mut blocks, &mut |blocks| {
        if blocks.len() > best_len {
            return;
        }
        let paths: Option<Vec<Vec<usize>>> = blocks.iter().map(|b| as_path(t, b)).collect();
        if let Some(mut paths) = paths {
            paths.sort_by_key(|p| *p.iter().min().unwrap());
            if paths.len() < best_len {
                best_len = paths.len();
                best.clear();
            }
            best.push(paths);
        }
    });
    best.sort();
    best
}

fn partitions(v: usize, n: usize, blocks: &mut Vec<Vec<usize>>, f: &mut impl FnMut(&[Vec<usize>])) {
    if v == n {
        f(blocks);
        return;
    }
    for i in 0..blocks.len() {
        blocks[i].push(v);
        partitions(v + 1, n, blocks, f);
        blocks[i].pop();
    }
    blocks.push(vec![v]);
    partitions(v + 1, n, blocks, f);
    blocks.pop();
}

/// Random simple graph with edge probability `p`.
pub fn random_graph(n: usize, p: f64, rng: &mut impl Rng) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).unwrap()
}
