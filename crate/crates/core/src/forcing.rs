//! The zero forcing engine.
//!
//! Color change rule: a blue vertex `u` with exactly one white neighbor `w`
//! forces `w` blue. A set is zero forcing when its closure under the rule is
//! all of `V(G)`.

use std::collections::HashSet;
use std::ops::ControlFlow;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::limits::{Limits, MASK_BITS};

/// `from` forced `to`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Force {
    pub from: usize,
    pub to: usize,
}

/// A chronological list of forces from `initial`, with its forcing chains
/// and reversal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForcingTrace {
    pub initial: VertexSet,
    pub forces: Vec<Force>,
    pub final_set: VertexSet,
    /// One chain per initial vertex, in ascending order of starting vertex.
    pub chains: Vec<Vec<usize>>,
    /// Chain endpoints, i.e. the vertices that never force.
    pub reversal: VertexSet,
}

impl ForcingTrace {
    /// The closure reached all of `V(G)`.
    pub fn is_complete(&self) -> bool {
        self.final_set.len() == self.final_set.universe()
    }

    /// Replays the forces against `g`, checking each one is legal when applied
    /// and that chains and reversal are consistent with the list.
    pub fn check_against(&self, g: &Graph) -> Result<()> {
        let n = g.order();
        if self.initial.universe() != n {
            return Err(Error::contract("trace universe differs from graph order"));
        }
        let mut blue = vec![false; n];
        for v in self.initial.iter() {
            blue[v] = true;
        }
        let mut has_forced = vec![false; n];
        for f in &self.forces {
            if !blue[f.from] || blue[f.to] || !g.has_edge(f.from, f.to) {
                return Err(Error::contract(format!("illegal force {} -> {}", f.from, f.to)));
            }
            let whites = g.neighbors(f.from).iter().filter(|&&x| !blue[x]).count();
            if whites != 1 || has_forced[f.from] {
                return Err(Error::contract(format!("illegal force {} -> {}", f.from, f.to)));
            }
            has_forced[f.from] = true;
            blue[f.to] = true;
        }
        let reached = VertexSet::new(n, (0..n).filter(|&v| blue[v]))?;
        if reached != self.final_set {
            return Err(Error::contract("final set does not match replayed forces"));
        }
        let (chains, reversal) = chains_of(&self.initial, &self.forces, n);
        if chains != self.chains || reversal != self.reversal {
            return Err(Error::contract("chains or reversal inconsistent with forces"));
        }
        Ok(())
    }
}

/// Every minimum zero forcing set of a graph, sorted lexicographically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZfsCatalog {
    pub base: Graph,
    pub z: usize,
    pub sets: Vec<VertexSet>,
}

fn blue_vector(g: &Graph, s: &VertexSet) -> Vec<bool> {
    let mut blue = vec![false; g.order()];
    for v in s.iter() {
        blue[v] = true;
    }
    blue
}

/// Closure of `s` under the color change rule.
///
/// Tracks white-neighbor counts so each vertex is examined a bounded number
/// of times; the result is the unique fixed point regardless of order.
pub fn closure(g: &Graph, s: &VertexSet) -> VertexSet {
    let n = g.order();
    let mut blue = blue_vector(g, s);
    let mut white: Vec<usize> = (0..n)
        .map(|v| g.neighbors(v).iter().filter(|&&w| !blue[w]).count())
        .collect();
    let mut ready: Vec<usize> = (0..n).filter(|&v| blue[v] && white[v] == 1).collect();
    while let Some(u) = ready.pop() {
        if white[u] != 1 {
            continue;
        }
        let w = *g
            .neighbors(u)
            .iter()
            .find(|&&x| !blue[x])
            .expect("one white neighbor");
        blue[w] = true;
        for &x in g.neighbors(w) {
            white[x] -= 1;
            if blue[x] && white[x] == 1 {
                ready.push(x);
            }
        }
        if white[w] == 1 {
            ready.push(w);
        }
    }
    VertexSet::new(n, (0..n).filter(|&v| blue[v])).expect("in range")
}

/// Bitmask check following the scan-and-restart loop: repeatedly take the
/// lowest blue vertex with exactly one white neighbor.
pub(crate) fn forces_all(adj: &[u64], mut blue: u64) -> bool {
    let full = full_mask(adj.len());
    'outer: while blue != full {
        let mut scan = blue;
        while scan != 0 {
            let v = scan.trailing_zeros() as usize;
            let white = adj[v] & !blue;
            if white.count_ones() == 1 {
                blue |= white;
                continue 'outer;
            }
            scan &= scan - 1;
        }
        return false;
    }
    true
}

pub(crate) fn full_mask(n: usize) -> u64 {
    if n == MASK_BITS {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

pub fn is_zero_forcing_set(g: &Graph, s: &VertexSet) -> bool {
    match (g.masks(), s.to_mask()) {
        (Some(adj), Some(mask)) => forces_all(&adj, mask),
        _ => closure(g, s).len() == g.order(),
    }
}

/// Full trace under the deterministic schedule: scan blue vertices in
/// ascending order, perform the first available force, restart the scan.
pub fn trace(g: &Graph, s: &VertexSet) -> ForcingTrace {
    let n = g.order();
    let mut blue = blue_vector(g, s);
    let mut forces = Vec::new();
    'outer: loop {
        for u in 0..n {
            if !blue[u] {
                continue;
            }
            let mut whites = g.neighbors(u).iter().filter(|&&w| !blue[w]);
            if let (Some(&w), None) = (whites.next(), whites.next()) {
                blue[w] = true;
                forces.push(Force { from: u, to: w });
                continue 'outer;
            }
        }
        break;
    }
    let final_set = VertexSet::new(n, (0..n).filter(|&v| blue[v])).expect("in range");
    let (chains, reversal) = chains_of(s, &forces, n);
    ForcingTrace {
        initial: s.clone(),
        forces,
        final_set,
        chains,
        reversal,
    }
}

fn chains_of(initial: &VertexSet, forces: &[Force], n: usize) -> (Vec<Vec<usize>>, VertexSet) {
    let mut next = vec![usize::MAX; n];
    for f in forces {
        next[f.from] = f.to;
    }
    let chains: Vec<Vec<usize>> = initial
        .iter()
        .map(|start| {
            let mut chain = vec![start];
            let mut v = start;
            while next[v] != usize::MAX {
                v = next[v];
                chain.push(v);
            }
            chain
        })
        .collect();
    let ends = chains.iter().map(|c| *c.last().expect("nonempty chain"));
    let reversal = VertexSet::new(n, ends).expect("in range");
    (chains, reversal)
}

/// Reverses the order of the list and each force. The result starts from
/// `t.reversal` and its reversal is `t.initial`.
pub fn reverse_trace(t: &ForcingTrace) -> Result<ForcingTrace> {
    if !t.is_complete() {
        return Err(Error::contract(
            "only a trace of a zero forcing set can be reversed",
        ));
    }
    let forces: Vec<Force> = t
        .forces
        .iter()
        .rev()
        .map(|f| Force {
            from: f.to,
            to: f.from,
        })
        .collect();
    let mut chains: Vec<Vec<usize>> = t
        .chains
        .iter()
        .map(|c| c.iter().rev().copied().collect())
        .collect();
    chains.sort_by_key(|c| c[0]);
    Ok(ForcingTrace {
        initial: t.reversal.clone(),
        forces,
        final_set: t.final_set.clone(),
        chains,
        reversal: t.initial.clone(),
    })
}

/// Every reversal of `b` over all chronological lists of forces, sorted.
///
/// Explores states `(blue, performed-a-force)`; exponential in general and
/// meant for small graphs.
pub fn all_reversals(g: &Graph, b: &VertexSet) -> Result<Vec<VertexSet>> {
    let n = g.order();
    let adj = g
        .masks()
        .ok_or(Error::Capacity {
            what: "graph order for reversal search",
            got: n,
            cap: MASK_BITS,
        })?;
    let start = b.to_mask().expect("universe matches graph");
    if !forces_all(&adj, start) {
        return Err(Error::contract(format!("{b} is not a zero forcing set")));
    }
    let full = full_mask(n);
    let mut seen: HashSet<(u64, u64)> = HashSet::new();
    let mut found: HashSet<u64> = HashSet::new();
    let mut stack = vec![(start, 0u64)];
    while let Some((blue, forcers)) = stack.pop() {
        if !seen.insert((blue, forcers)) {
            continue;
        }
        if blue == full {
            found.insert(full & !forcers);
            continue;
        }
        let mut scan = blue & !forcers;
        while scan != 0 {
            let v = scan.trailing_zeros() as usize;
            scan &= scan - 1;
            let white = adj[v] & !blue;
            if white.count_ones() == 1 {
                stack.push((blue | white, forcers | (1 << v)));
            }
        }
    }
    let mut out: Vec<VertexSet> = found.into_iter().map(|m| VertexSet::from_mask(n, m)).collect();
    out.sort();
    Ok(out)
}

fn enumeration_adjacency(g: &Graph, limits: &Limits) -> Result<Vec<u64>> {
    Error::check_cap(
        "graph order for enumeration",
        g.order(),
        limits.enumeration.min(MASK_BITS),
    )?;
    Ok(g.masks().expect("order within mask width"))
}

/// Walks the `k`-subsets of `lo..n` (added to `base`) in lexicographic order.
fn for_each_combination<F>(lo: usize, n: usize, k: usize, base: u64, f: &mut F) -> ControlFlow<()>
where
    F: FnMut(u64) -> ControlFlow<()>,
{
    if k == 0 {
        return f(base);
    }
    for v in lo..=(n - k) {
        for_each_combination(v + 1, n, k - 1, base | (1 << v), f)?;
    }
    ControlFlow::Continue(())
}

fn binomial(n: usize, k: usize) -> u128 {
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// Sequential below this many subsets per size; sharded by leading element above.
const PARALLEL_THRESHOLD: u128 = 50_000;

fn zfs_of_size(adj: &[u64], k: usize, stop_at_first: bool) -> Vec<u64> {
    let n = adj.len();
    let shard = |first: usize| {
        let mut out = Vec::new();
        let _ = for_each_combination(first + 1, n, k - 1, 1 << first, &mut |mask| {
            if forces_all(adj, mask) {
                out.push(mask);
                if stop_at_first {
                    return ControlFlow::Break(());
                }
            }
            ControlFlow::Continue(())
        });
        out
    };
    let firsts = 0..=(n - k);
    if binomial(n, k) < PARALLEL_THRESHOLD {
        let mut out = Vec::new();
        for first in firsts {
            out.extend(shard(first));
            if stop_at_first && !out.is_empty() {
                break;
            }
        }
        out
    } else {
        firsts.into_par_iter().flat_map_iter(shard).collect()
    }
}

/// Z(G): the first subset size admitting a zero forcing set.
pub fn zero_forcing_number(g: &Graph) -> Result<usize> {
    zero_forcing_number_with(g, &Limits::default())
}

pub fn zero_forcing_number_with(g: &Graph, limits: &Limits) -> Result<usize> {
    let adj = enumeration_adjacency(g, limits)?;
    let n = adj.len();
    Ok((1..=n)
        .find(|&k| !zfs_of_size(&adj, k, true).is_empty())
        .unwrap_or(0))
}

/// Staged scan by size `k = 1, 2, …`; the first size with a zero forcing set
/// fixes Z(G) and every set of that size is collected.
///
/// The 0-vertex graph has Z = 0 with the single minimum set ∅.
pub fn enumerate_min_zfs(g: &Graph) -> Result<ZfsCatalog> {
    enumerate_min_zfs_with(g, &Limits::default())
}

pub fn enumerate_min_zfs_with(g: &Graph, limits: &Limits) -> Result<ZfsCatalog> {
    let adj = enumeration_adjacency(g, limits)?;
    let n = adj.len();
    if n == 0 {
        return Ok(ZfsCatalog {
            base: g.clone(),
            z: 0,
            sets: vec![VertexSet::empty(0)],
        });
    }
    for k in 1..=n {
        let found = zfs_of_size(&adj, k, false);
        if !found.is_empty() {
            let mut sets: Vec<VertexSet> =
                found.into_iter().map(|m| VertexSet::from_mask(n, m)).collect();
            sets.sort();
            return Ok(ZfsCatalog {
                base: g.clone(),
                z: k,
                sets,
            });
        }
    }
    unreachable!("V(G) is always a zero forcing set")
}

/// All sets reachable from `b` by one neighbor-trading move, over every legal
/// first force `v → w` with `deg(v) ≥ 2`: for each `u ∈ N(v) ∩ B`, `u ≠ w`,
/// emit `B \ {u} ∪ {w}`.
pub fn neighbor_trade(g: &Graph, b: &VertexSet) -> Result<Vec<VertexSet>> {
    neighbor_trade_with(g, b, &Limits::default())
}

pub fn neighbor_trade_with(g: &Graph, b: &VertexSet, limits: &Limits) -> Result<Vec<VertexSet>> {
    if b.universe() != g.order() {
        return Err(Error::input("set universe differs from graph order"));
    }
    if !is_zero_forcing_set(g, b) || b.len() != zero_forcing_number_with(g, limits)? {
        return Err(Error::contract(format!(
            "{b} is not a minimum zero forcing set"
        )));
    }
    let mut out = Vec::new();
    for v in b.iter() {
        if g.degree(v) < 2 {
            continue;
        }
        let mut whites = g.neighbors(v).iter().filter(|&&x| !b.contains(x));
        let (Some(&w), None) = (whites.next(), whites.next()) else {
            continue;
        };
        for &u in g.neighbors(v) {
            if u != w && b.contains(u) {
                out.push(b.exchange(u, w));
            }
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}
