//! Simple undirected graph kernel and fixed-universe vertex sets.

use std::cmp::Ordering;
use std::collections::VecDeque;
use std::fmt;

use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::iso;
use crate::limits::{Limits, MASK_BITS};

/// Immutable simple undirected graph on vertices `0..n`.
///
/// Edges are stored once as `(u, v)` with `u < v`, sorted. Adjacency lists
/// are sorted and derived from the edge list.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

impl Graph {
    /// Builds a graph; duplicate pairs collapse, self-loops and
    /// out-of-range endpoints are input errors.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut list = Vec::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::input(format!(
                    "edge ({u},{v}) has an endpoint outside 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::input(format!("self-loop at vertex {u}")));
            }
            list.push((u.min(v), u.max(v)));
        }
        list.sort_unstable();
        list.dedup();
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &list {
            adj[u].push(v);
            adj[v].push(u);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        Ok(Graph { n, edges: list, adj })
    }

    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    /// δ(G); 0 for the empty graph.
    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    /// Δ(G); 0 for the empty graph.
    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Vertices of degree exactly one.
    pub fn leaves(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.degree(v) == 1).collect()
    }

    /// Neighborhood bitmasks; `None` when `n` exceeds the mask width.
    pub fn masks(&self) -> Option<Vec<u64>> {
        (self.n <= MASK_BITS).then(|| {
            self.adj
                .iter()
                .map(|a| a.iter().fold(0u64, |m, &w| m | (1u64 << w)))
                .collect()
        })
    }

    /// Subgraph induced by `vertices`; vertex `i` of the result is `vertices[i]`.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        let mut local = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        let mut edges = Vec::new();
        for (i, &v) in vertices.iter().enumerate() {
            for &w in &self.adj[v] {
                let j = local[w];
                if j != usize::MAX && i < j {
                    edges.push((i, j));
                }
            }
        }
        Graph::new(vertices.len(), edges).expect("induced subgraph of a valid graph")
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || bfs_order(self, 0).len() == self.n
    }

    pub fn is_forest(&self) -> bool {
        self.size() + connected_components(self).len() == self.n
    }

    /// Connected and acyclic. The 0-vertex graph is not a tree.
    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.size() + 1 == self.n && self.is_connected()
    }

    /// Short stable identifier derived from the canonical edge list.
    pub fn signature(&self) -> String {
        let mut hasher = Sha256::new();
        hasher.update(format!("{} {}\n", self.n, self.size()).as_bytes());
        for &(u, v) in &self.edges {
            hasher.update(format!("{u} {v}\n").as_bytes());
        }
        let digest = hasher.finalize();
        digest[..8].iter().map(|b| format!("{b:02x}")).collect()
    }
}

fn bfs_order(g: &Graph, start: usize) -> Vec<usize> {
    let mut seen = vec![false; g.n];
    let mut order = vec![start];
    let mut queue = VecDeque::from([start]);
    seen[start] = true;
    while let Some(v) = queue.pop_front() {
        for &w in g.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                order.push(w);
                queue.push_back(w);
            }
        }
    }
    order
}

/// `G ⊔ H`; vertices of `H` are shifted by `|G|`.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Graph {
    let shift = g.order();
    let edges = g
        .edges()
        .iter()
        .copied()
        .chain(h.edges().iter().map(|&(u, v)| (u + shift, v + shift)));
    Graph::new(g.order() + h.order(), edges).expect("union of valid graphs")
}

/// `G □ H`; vertex `(i, j)` is encoded as `i * |H| + j`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Graph {
    let m = h.order();
    let mut edges = Vec::with_capacity(g.size() * m + g.order() * h.size());
    for i in 0..g.order() {
        for &(a, b) in h.edges() {
            edges.push((i * m + a, i * m + b));
        }
    }
    for &(a, b) in g.edges() {
        for j in 0..m {
            edges.push((a * m + j, b * m + j));
        }
    }
    Graph::new(g.order() * m, edges).expect("product of valid graphs")
}

/// Maximal connected vertex sets, sorted by least member.
pub fn connected_components(g: &Graph) -> Vec<VertexSet> {
    let mut seen = vec![false; g.order()];
    let mut out = Vec::new();
    for s in 0..g.order() {
        if seen[s] {
            continue;
        }
        let comp = bfs_order(g, s);
        for &v in &comp {
            seen[v] = true;
        }
        out.push(VertexSet::new(g.order(), comp).expect("bfs stays in range"));
    }
    out
}

/// Sorted set of vertex indices inside a fixed universe `0..universe`.
///
/// Ordering is lexicographic on the sorted member list.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct VertexSet {
    universe: usize,
    members: Vec<usize>,
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.members
            .cmp(&other.members)
            .then(self.universe.cmp(&other.universe))
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl VertexSet {
    /// Sorts and deduplicates `members`; any member `>= universe` is an input error.
    pub fn new(universe: usize, members: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut members: Vec<usize> = members.into_iter().collect();
        if let Some(&bad) = members.iter().find(|&&v| v >= universe) {
            return Err(Error::input(format!(
                "vertex {bad} is outside 0..{universe}"
            )));
        }
        members.sort_unstable();
        members.dedup();
        Ok(VertexSet { universe, members })
    }

    pub fn empty(universe: usize) -> Self {
        VertexSet {
            universe,
            members: Vec::new(),
        }
    }

    pub fn full(universe: usize) -> Self {
        VertexSet {
            universe,
            members: (0..universe).collect(),
        }
    }

    pub fn from_mask(universe: usize, mut mask: u64) -> Self {
        let mut members = Vec::with_capacity(mask.count_ones() as usize);
        while mask != 0 {
            members.push(mask.trailing_zeros() as usize);
            mask &= mask - 1;
        }
        VertexSet { universe, members }
    }

    /// Bitmask form; `None` if the universe exceeds the mask width.
    pub fn to_mask(&self) -> Option<u64> {
        (self.universe <= MASK_BITS).then(|| self.members.iter().fold(0u64, |m, &v| m | (1 << v)))
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    pub fn symmetric_difference_len(&self, other: &VertexSet) -> usize {
        let common = self.iter().filter(|&v| other.contains(v)).count();
        self.len() + other.len() - 2 * common
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| !other.contains(v))
    }

    /// `self \ {remove} ∪ {add}`.
    pub fn exchange(&self, remove: usize, add: usize) -> VertexSet {
        let members = self.iter().filter(|&v| v != remove).chain([add]);
        VertexSet::new(self.universe, members).expect("exchange stays in universe")
    }

    /// Re-embeds the set into a larger universe after shifting every member.
    pub fn shifted(&self, by: usize, universe: usize) -> Result<VertexSet> {
        VertexSet::new(universe, self.iter().map(|v| v + by))
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.members.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

/// Cheap structural recognizers.
///
/// Degenerate answers: `K₁` is a path, complete and `Q₀`; the 0-vertex graph
/// is only complete. Stars need at least two vertices (`K₂ = K_{1,1}`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ShapePredicates {
    pub is_path: bool,
    pub is_cycle: bool,
    pub is_complete: bool,
    pub is_star: bool,
    /// `Some(d)` iff the graph is isomorphic to the hypercube `Q_d`.
    pub hypercube_dimension: Option<u32>,
}

pub fn is_path(g: &Graph) -> bool {
    let n = g.order();
    n >= 1 && g.is_connected() && g.max_degree() <= 2 && g.size() + 1 == n
}

pub fn is_cycle(g: &Graph) -> bool {
    g.order() >= 3 && g.is_connected() && g.degrees().iter().all(|&d| d == 2)
}

pub fn is_complete(g: &Graph) -> bool {
    let n = g.order();
    g.degrees().iter().all(|&d| d + 1 == n)
}

pub fn is_star(g: &Graph) -> bool {
    let n = g.order();
    n >= 2 && g.is_tree() && g.max_degree() == n - 1
}

/// `Q_d` as the `d`-fold Cartesian power of `K₂`.
pub fn hypercube(d: u32) -> Graph {
    let k2 = Graph::new(2, [(0, 1)]).expect("K2");
    (0..d).fold(Graph::empty(1), |acc, _| cartesian_product(&acc, &k2))
}

/// `Some(d)` if `g ≅ Q_d`. Cheap order/regularity checks run first; only a
/// candidate that survives them is handed to the isomorphism search.
pub fn hypercube_dimension(g: &Graph, limits: &Limits) -> Result<Option<u32>> {
    let n = g.order();
    if n == 0 || !n.is_power_of_two() {
        return Ok(None);
    }
    let d = n.trailing_zeros();
    let regular = g.degrees().iter().all(|&x| x == d as usize);
    if !regular || !g.is_connected() {
        return Ok(None);
    }
    let cube = hypercube(d);
    Ok(iso::is_isomorphic_with(g, &cube, limits.isomorphism)?.then_some(d))
}

pub fn shape_predicates(g: &Graph, limits: &Limits) -> Result<ShapePredicates> {
    Ok(ShapePredicates {
        is_path: is_path(g),
        is_cycle: is_cycle(g),
        is_complete: is_complete(g),
        is_star: is_star(g),
        hypercube_dimension: hypercube_dimension(g, limits)?,
    })
}

/// True iff some triple induces `C₃` or some quadruple induces `C₄`.
///
/// Equivalent to scanning all 3- and 4-subsets, but done as a triangle test
/// plus a search over non-adjacent pairs with two non-adjacent common neighbors.
pub fn contains_induced_c3_or_c4(g: &Graph) -> bool {
    for &(u, v) in g.edges() {
        if common_neighbors(g, u, v).next().is_some() {
            return true;
        }
    }
    for a in 0..g.order() {
        for c in (a + 1)..g.order() {
            if g.has_edge(a, c) {
                continue;
            }
            let common: Vec<usize> = common_neighbors(g, a, c).collect();
            for (i, &b) in common.iter().enumerate() {
                if common[i + 1..].iter().any(|&d| !g.has_edge(b, d)) {
                    return true;
                }
            }
        }
    }
    false
}

fn common_neighbors<'a>(g: &'a Graph, u: usize, v: usize) -> impl Iterator<Item = usize> + 'a {
    g.neighbors(u)
        .iter()
        .copied()
        .filter(move |&w| g.has_edge(v, w))
}

pub fn has_triangle(g: &Graph) -> bool {
    g.edges()
        .iter()
        .any(|&(u, v)| common_neighbors(g, u, v).next().is_some())
}

/// ω(G) by branch and bound with a greedy-coloring bound.
pub fn max_clique_size(g: &Graph, limits: &Limits) -> Result<usize> {
    Error::check_cap("graph order for clique search", g.order(), limits.clique)?;
    let n = g.order();
    if n == 0 {
        return Ok(0);
    }
    let words = n.div_ceil(64);
    let adj: Vec<Bits> = (0..n)
        .map(|v| {
            let mut b = Bits::zeros(words);
            for &w in g.neighbors(v) {
                b.set(w);
            }
            b
        })
        .collect();
    let mut all = Bits::zeros(words);
    for v in 0..n {
        all.set(v);
    }
    let mut best = 1;
    expand_clique(&adj, 0, all, &mut best);
    Ok(best)
}

fn expand_clique(adj: &[Bits], size: usize, mut candidates: Bits, best: &mut usize) {
    let (order, colors) = greedy_color(adj, &candidates);
    for idx in (0..order.len()).rev() {
        if size + colors[idx] <= *best {
            return;
        }
        let v = order[idx];
        let next = candidates.and(&adj[v]);
        if next.is_zero() {
            *best = (*best).max(size + 1);
        } else {
            expand_clique(adj, size + 1, next, best);
        }
        candidates.clear(v);
    }
}

/// Sequential coloring of the candidates; `colors[i]` bounds the clique
/// size available among `order[..=i]`.
fn greedy_color(adj: &[Bits], candidates: &Bits) -> (Vec<usize>, Vec<usize>) {
    let mut uncolored = candidates.clone();
    let mut order = Vec::new();
    let mut colors = Vec::new();
    let mut color = 0;
    while !uncolored.is_zero() {
        color += 1;
        let mut avail = uncolored.clone();
        while let Some(v) = avail.first() {
            avail.clear(v);
            avail = avail.and_not(&adj[v]);
            uncolored.clear(v);
            order.push(v);
            colors.push(color);
        }
    }
    (order, colors)
}

#[derive(Clone)]
struct Bits(Vec<u64>);

impl Bits {
    fn zeros(words: usize) -> Self {
        Bits(vec![0; words])
    }
    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }
    fn clear(&mut self, i: usize) {
        self.0[i / 64] &= !(1 << (i % 64));
    }
    fn is_zero(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }
    fn first(&self) -> Option<usize> {
        self.0
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }
    fn and(&self, o: &Bits) -> Bits {
        Bits(self.0.iter().zip(&o.0).map(|(a, b)| a & b).collect())
    }
    fn and_not(&self, o: &Bits) -> Bits {
        Bits(self.0.iter().zip(&o.0).map(|(a, b)| a & !b).collect())
    }
}
