//! Graph corpora for the law checker: exhaustive non-isomorphic connected
//! graphs and trees, plus seeded random samples.

use std::collections::HashMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::iso::is_isomorphic_with;

pub const MAX_ALL_CONNECTED: usize = 7;
pub const MAX_ALL_TREES: usize = 12;
pub const DEFAULT_SAMPLES: usize = 200;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CorpusKind {
    AllConnected,
    AllTrees,
    RandomConnected,
    RandomForests,
}

impl CorpusKind {
    pub fn name(self) -> &'static str {
        match self {
            CorpusKind::AllConnected => "all_connected",
            CorpusKind::AllTrees => "all_trees",
            CorpusKind::RandomConnected => "random_connected",
            CorpusKind::RandomForests => "random_forests",
        }
    }
}

/// Every graph of order `1..=max_n` for the exhaustive kinds (one per
/// isomorphism class, ordered by order then discovery), or
/// [`DEFAULT_SAMPLES`] seeded samples of order `1..=max_n` for the random ones.
pub fn generate_corpus(kind: CorpusKind, max_n: usize, seed: u64) -> Result<Vec<Graph>> {
    match kind {
        CorpusKind::AllConnected => Ok(all_connected(max_n)?.into_iter().flatten().collect()),
        CorpusKind::AllTrees => Ok(all_trees(max_n)?.into_iter().flatten().collect()),
        CorpusKind::RandomConnected | CorpusKind::RandomForests => {
            random_corpus(kind, 1, max_n, DEFAULT_SAMPLES, seed)
        }
    }
}

/// `count` seeded random graphs with orders drawn uniformly from `min_n..=max_n`.
pub fn random_corpus(
    kind: CorpusKind,
    min_n: usize,
    max_n: usize,
    count: usize,
    seed: u64,
) -> Result<Vec<Graph>> {
    if min_n == 0 || min_n > max_n {
        return Err(Error::input(format!("bad order range {min_n}..={max_n}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(min_n..=max_n);
            match kind {
                CorpusKind::RandomConnected => Ok(random_connected(n, &mut rng)),
                CorpusKind::RandomForests => Ok(random_forest(n, &mut rng)),
                _ => Err(Error::input("not a random corpus kind")),
            }
        })
        .collect()
}

/// Connected graphs grouped by order: `result[k]` holds order `k + 1`.
///
/// Every connected graph has a vertex whose removal keeps it connected, so
/// extending each graph of order `n − 1` by a vertex joined to a non-empty
/// subset reaches every class of order `n`.
pub fn all_connected(max_n: usize) -> Result<Vec<Vec<Graph>>> {
    Error::check_cap("order for all_connected", max_n, MAX_ALL_CONNECTED)?;
    let mut levels: Vec<Vec<Graph>> = Vec::new();
    if max_n == 0 {
        return Ok(levels);
    }
    levels.push(vec![Graph::empty(1)]);
    for n in 2..=max_n {
        let mut classes = Classes::default();
        for g in &levels[n - 2] {
            for mask in 1u32..(1 << (n - 1)) {
                let new_edges = (0..n - 1).filter(|&v| mask >> v & 1 == 1).map(|v| (v, n - 1));
                let h = Graph::new(n, g.edges().iter().copied().chain(new_edges))
                    .expect("extension is simple");
                classes.insert(h);
            }
        }
        levels.push(classes.into_graphs());
    }
    Ok(levels)
}

/// Trees grouped by order: `result[k]` holds order `k + 1`.
pub fn all_trees(max_n: usize) -> Result<Vec<Vec<Graph>>> {
    Error::check_cap("order for all_trees", max_n, MAX_ALL_TREES)?;
    let mut levels: Vec<Vec<Graph>> = Vec::new();
    if max_n == 0 {
        return Ok(levels);
    }
    levels.push(vec![Graph::empty(1)]);
    for n in 2..=max_n {
        let mut seen = HashMap::new();
        let mut next = Vec::new();
        for t in &levels[n - 2] {
            for v in 0..n - 1 {
                let h = Graph::new(n, t.edges().iter().copied().chain([(v, n - 1)]))
                    .expect("leaf extension is simple");
                if seen.insert(tree_certificate(&h), ()).is_none() {
                    next.push(h);
                }
            }
        }
        levels.push(next);
    }
    Ok(levels)
}

/// Isomorphism-class dedup with cheap invariant buckets.
#[derive(Default)]
struct Classes {
    buckets: HashMap<Vec<(usize, Vec<usize>)>, Vec<usize>>,
    graphs: Vec<Graph>,
}

impl Classes {
    fn insert(&mut self, g: Graph) {
        let bucket = self.buckets.entry(invariant(&g)).or_default();
        let cap = g.order();
        let known = bucket
            .iter()
            .any(|&i| is_isomorphic_with(&self.graphs[i], &g, cap).expect("within cap"));
        if !known {
            bucket.push(self.graphs.len());
            self.graphs.push(g);
        }
    }

    fn into_graphs(self) -> Vec<Graph> {
        self.graphs
    }
}

/// Sorted (degree, sorted neighbor degrees) pairs.
fn invariant(g: &Graph) -> Vec<(usize, Vec<usize>)> {
    let mut inv: Vec<(usize, Vec<usize>)> = (0..g.order())
        .map(|v| {
            let mut nd: Vec<usize> = g.neighbors(v).iter().map(|&w| g.degree(w)).collect();
            nd.sort_unstable();
            (g.degree(v), nd)
        })
        .collect();
    inv.sort();
    inv
}

/// Canonical string of a tree: AHU encoding rooted at its center (the
/// lexicographically smaller one when there are two centers).
pub fn tree_certificate(t: &Graph) -> String {
    let n = t.order();
    if n <= 1 {
        return "()".repeat(n);
    }
    let mut degree = t.degrees();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            for &w in t.neighbors(v) {
                degree[w] -= 1;
                if degree[w] == 1 {
                    next.push(w);
                }
            }
        }
        layer = next;
    }
    layer
        .iter()
        .map(|&c| encode(t, c, usize::MAX))
        .min()
        .expect("a tree has a center")
}

fn encode(t: &Graph, v: usize, parent: usize) -> String {
    let mut kids: Vec<String> = t
        .neighbors(v)
        .iter()
        .filter(|&&w| w != parent)
        .map(|&w| encode(t, w, v))
        .collect();
    kids.sort_unstable();
    format!("({})", kids.concat())
}

/// Uniform labeled tree from a random Prüfer sequence.
pub fn random_tree(n: usize, rng: &mut impl Rng) -> Graph {
    if n <= 2 {
        return Graph::new(n, (n == 2).then_some((0, 1))).expect("tiny tree");
    }
    let code: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    Graph::new(n, prufer_edges(n, &code)).expect("Prüfer decoding yields a tree")
}

fn prufer_edges(n: usize, code: &[usize]) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; n];
    for &c in code {
        degree[c] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &c in code {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf remains");
        edges.push((leaf, c));
        degree[leaf] = 0;
        degree[c] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}

/// A random spanning tree plus each remaining pair with a random density.
pub fn random_connected(n: usize, rng: &mut impl Rng) -> Graph {
    let tree = random_tree(n, rng);
    let p: f64 = rng.gen_range(0.05..0.6);
    let mut edges = tree.edges().to_vec();
    for u in 0..n {
        for v in u + 1..n {
            if !tree.has_edge(u, v) && rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    Graph::new(n, edges.into_iter().map(|(u, v)| (perm[u], perm[v]))).expect("relabeled")
}

/// A random tree with each edge dropped independently.
pub fn random_forest(n: usize, rng: &mut impl Rng) -> Graph {
    let tree = random_tree(n, rng);
    let keep: f64 = rng.gen_range(0.5..1.0);
    let edges: Vec<(usize, usize)> =
        tree.edges().iter().copied().filter(|_| rng.gen_bool(keep)).collect();
    Graph::new(n, edges).expect("subforest")
}
