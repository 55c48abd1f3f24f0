//! Registry of structural laws checked over generated corpora.
//!
//! Each law is a named check that runs over a deterministic corpus and
//! reports every counterexample together with a re-loadable graph.

use std::sync::OnceLock;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::corpus::{self, CorpusKind, MAX_ALL_CONNECTED, MAX_ALL_TREES};
use crate::error::{Error, Result};
use crate::families;
use crate::forcing::{all_reversals, enumerate_min_zfs_with, is_zero_forcing_set};
use crate::forcing::{zero_forcing_number_with, ZfsCatalog};
use crate::graph::{
    self, connected_components, contains_induced_c3_or_c4, disjoint_union, has_triangle,
    max_clique_size, Graph, VertexSet,
};
use crate::io;
use crate::iso::is_isomorphic_with;
use crate::limits::Limits;
use crate::reconfig::{build_zfg_with, from_catalog, product_law_check_with, ReconfigGraph};
use crate::trees;

#[derive(Debug, Clone, Serialize)]
pub struct Failure {
    /// The offending graph in the JSON graph format.
    pub graph: serde_json::Value,
    pub details: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct LawReport {
    pub law_id: String,
    pub corpus_description: String,
    pub instances_checked: usize,
    /// Instances whose hypotheses did not hold.
    pub skipped: usize,
    pub failures: Vec<Failure>,
    #[serde(rename = "elapsed_secs", serialize_with = "secs")]
    pub elapsed: Duration,
}

fn secs<S: serde::Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64())
}

impl LawReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LawParams {
    /// Largest order (or family parameter) in the corpus; the law's default if unset.
    pub max_n: Option<usize>,
    pub seed: u64,
    /// Number of random instances for sampled corpora.
    pub samples: Option<usize>,
}

impl Default for LawParams {
    fn default() -> Self {
        LawParams {
            max_n: None,
            seed: 42,
            samples: None,
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct LawInfo {
    pub id: &'static str,
    pub summary: &'static str,
    pub default_max_n: usize,
    pub max_max_n: usize,
}

struct Ctx {
    max_n: usize,
    seed: u64,
    samples: Option<usize>,
    limits: Limits,
}

impl Ctx {
    fn samples_or(&self, default: usize) -> usize {
        self.samples.unwrap_or(default)
    }
}

enum Verdict {
    Pass,
    Skip,
    Fail(String),
}

impl Verdict {
    fn check(ok: bool, details: impl FnOnce() -> String) -> Verdict {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail(details())
        }
    }
}

#[derive(Default)]
struct Tally {
    corpus: String,
    checked: usize,
    skipped: usize,
    failures: Vec<Failure>,
}

impl Tally {
    fn new(corpus: impl Into<String>) -> Self {
        Tally {
            corpus: corpus.into(),
            ..Tally::default()
        }
    }

    fn record(&mut self, g: &Graph, v: Verdict) {
        match v {
            Verdict::Pass => self.checked += 1,
            Verdict::Skip => self.skipped += 1,
            Verdict::Fail(details) => {
                self.checked += 1;
                self.failures.push(Failure {
                    graph: serde_json::from_str(&io::write_json(g)).expect("graph JSON parses"),
                    details,
                });
            }
        }
    }

    /// Runs `check` over `graphs` in parallel and records verdicts in corpus order.
    fn over<F>(&mut self, graphs: &[Graph], check: F) -> Result<()>
    where
        F: Fn(&Graph) -> Result<Verdict> + Sync,
    {
        let verdicts: Vec<Verdict> = graphs.par_iter().map(&check).collect::<Result<_>>()?;
        for (g, v) in graphs.iter().zip(verdicts) {
            self.record(g, v);
        }
        Ok(())
    }
}

type Runner = fn(&Ctx) -> Result<Tally>;

struct Entry {
    info: LawInfo,
    run: Runner,
}

const fn law(id: &'static str, summary: &'static str, default_max_n: usize, max_max_n: usize, run: Runner) -> Entry {
    Entry {
        info: LawInfo {
            id,
            summary,
            default_max_n,
            max_max_n,
        },
        run,
    }
}

const CONNECTED_MAX: usize = 9;

static REGISTRY: &[Entry] = &[
    law("c3c4", "a tree's zero forcing graph has an induced C3 or C4 iff the tree is not a path", 9, MAX_ALL_TREES, c3c4),
    law("c3c4_forests", "a forest's zero forcing graph is {C3,C4}-free iff it is paths with at most one nontrivial", 9, MAX_ALL_TREES, c3c4_forests),
    law("cn2_path", "cycles with two chords {0,k-1},{n-1,k-1} have a path of order n-1 as zero forcing graph", 9, 14, cn2_path),
    law("cn_plus_e", "a cycle plus one chord {0,2} has the cycle as zero forcing graph", 9, 16, cn_plus_e),
    law("complete_zfg_z", "if a connected graph's zero forcing graph is K_r with r >= 2 then Z = r - 1", 7, CONNECTED_MAX, complete_zfg_z),
    law("degree2_suppression", "suppressing the middle of three degree-2 vertices of a tree keeps the minimum sets", 8, 12, degree2_suppression),
    law("delta_bound", "a triangle-free zero forcing graph has maximum degree at most Z", 7, CONNECTED_MAX, delta_bound),
    law("disconnected_constructions", "leaf-blocked reversal pairs and clique bridges give disconnected zero forcing graphs", 8, 12, disconnected_constructions),
    law("exclusion_theorem", "the minimum zero forcing sets of a connected graph of order >= 2 have empty intersection", 7, CONNECTED_MAX, exclusion_theorem),
    law("family_zfgs", "paths, cycles, complete graphs and stars have the expected zero forcing graphs", 8, 12, family_zfgs),
    law("forest_connected", "every forest has a connected zero forcing graph", 10, MAX_ALL_TREES, forest_connected),
    law("h_graph_c4", "the H-graph has C4 as zero forcing graph with its four leaf pairs", 6, 6, h_graph_c4),
    law("hypercube_trees", "the two-leaf spider tree G_d has the hypercube Q_d as zero forcing graph", 4, 4, hypercube_trees),
    law("k2_characterization", "a connected graph has zero forcing graph K2 iff it is a path of order >= 2", 7, CONNECTED_MAX, k2_characterization),
    law("kr_characterization", "for r >= 3 a connected graph has zero forcing graph K_r iff it is K_r or K_{1,r}", 7, CONNECTED_MAX, kr_characterization),
    law("leaf_zfs", "every forest has a minimum zero forcing set made of leaves", 12, MAX_ALL_TREES, leaf_zfs),
    law("leafy_cover", "the leafy path cover is minimum and every path contains a leaf", 12, MAX_ALL_TREES, leafy_cover),
    law("min_degree_bound", "minimum degree is at most Z", 7, CONNECTED_MAX, min_degree_bound),
    law("min_degree_clique", "minimum degree is at most the clique number of the zero forcing graph when Z < n", 7, CONNECTED_MAX, min_degree_clique),
    law("order_bound", "a connected zero forcing graph of a connected graph of order >= 2 has at least Z + 1 nodes", 7, CONNECTED_MAX, order_bound),
    law("path_cover_counts", "the three-leaf spider tree H_n has 3^n minimum path covers, G_d has one", 4, 5, path_cover_counts),
    law("path_cover_zfs", "endpoint selections over all minimum path covers are exactly the minimum zero forcing sets of a tree", 10, MAX_ALL_TREES, path_cover_zfs),
    law("product_law", "the zero forcing graph of a disjoint union is the Cartesian product", 6, MAX_ALL_CONNECTED, product_law),
    law("reversal_law", "every reversal of a minimum zero forcing set is a minimum zero forcing set", 9, CONNECTED_MAX, reversal_law),
    law("star_nonexistence", "no connected graph has a star K_{1,r}, r >= 2, as zero forcing graph", 7, CONNECTED_MAX, star_nonexistence),
    law("tree_connected", "every tree has a connected zero forcing graph", 10, MAX_ALL_TREES, tree_connected),
];

pub fn laws() -> impl Iterator<Item = &'static LawInfo> {
    REGISTRY.iter().map(|e| &e.info)
}

pub fn law_ids() -> Vec<&'static str> {
    laws().map(|l| l.id).collect()
}

pub fn run_law(id: &str, params: &LawParams) -> Result<LawReport> {
    let entry = REGISTRY
        .iter()
        .find(|e| e.info.id == id)
        .ok_or_else(|| Error::UnknownLaw(id.to_string()))?;
    let max_n = params.max_n.unwrap_or(entry.info.default_max_n);
    Error::check_cap("max_n for this law", max_n, entry.info.max_max_n)?;
    let ctx = Ctx {
        max_n,
        seed: params.seed,
        samples: params.samples,
        limits: Limits::for_laws(),
    };
    let start = Instant::now();
    let tally = (entry.run)(&ctx)?;
    Ok(LawReport {
        law_id: id.to_string(),
        corpus_description: tally.corpus,
        instances_checked: tally.checked,
        skipped: tally.skipped,
        failures: tally.failures,
        elapsed: start.elapsed(),
    })
}

/// Every law, ordered by id. A shared `max_n` is clamped to each law's range.
pub fn run_all(params: &LawParams) -> Result<Vec<LawReport>> {
    REGISTRY
        .iter()
        .map(|e| {
            let max_n = params.max_n.map(|n| n.min(e.info.max_max_n));
            run_law(e.info.id, &LawParams { max_n, ..*params })
        })
        .collect()
}

// Corpora.

fn connected_levels() -> &'static [Vec<Graph>] {
    static LEVELS: OnceLock<Vec<Vec<Graph>>> = OnceLock::new();
    LEVELS.get_or_init(|| corpus::all_connected(MAX_ALL_CONNECTED).expect("within cap"))
}

fn tree_levels() -> &'static [Vec<Graph>] {
    static LEVELS: OnceLock<Vec<Vec<Graph>>> = OnceLock::new();
    LEVELS.get_or_init(|| corpus::all_trees(MAX_ALL_TREES).expect("within cap"))
}

fn all_trees(max_n: usize) -> Result<Vec<Graph>> {
    Error::check_cap("order for all_trees", max_n, MAX_ALL_TREES)?;
    Ok(tree_levels()[..max_n].iter().flatten().cloned().collect())
}

const SAMPLES_PER_ORDER: usize = 100;

/// All connected graphs up to order 7; beyond that, all trees plus seeded
/// random connected graphs of each larger order.
fn connected_corpus(ctx: &Ctx) -> Result<(String, Vec<Graph>)> {
    let exhaustive = ctx.max_n.min(MAX_ALL_CONNECTED);
    let mut graphs: Vec<Graph> = connected_levels()[..exhaustive].iter().flatten().cloned().collect();
    let mut desc = format!("all connected graphs of order <= {exhaustive}");
    if ctx.max_n > MAX_ALL_CONNECTED {
        let per = ctx.samples_or(SAMPLES_PER_ORDER);
        for n in MAX_ALL_CONNECTED + 1..=ctx.max_n {
            graphs.extend(tree_levels()[n - 1].iter().cloned());
            let seed = ctx.seed ^ (n as u64) << 32;
            graphs.extend(corpus::random_corpus(CorpusKind::RandomConnected, n, n, per, seed)?);
        }
        desc += &format!(
            "; all trees and {per} random connected graphs (seed {}) for each order {}..={}",
            ctx.seed,
            MAX_ALL_CONNECTED + 1,
            ctx.max_n
        );
    }
    Ok((desc, graphs))
}

/// Seeded random forests plus every union of two trees of order <= 5.
fn forest_corpus(ctx: &Ctx) -> Result<(String, Vec<Graph>)> {
    let samples = ctx.samples_or(200);
    let mut graphs = corpus::random_corpus(CorpusKind::RandomForests, 1, ctx.max_n, samples, ctx.seed)?;
    let small = all_trees(ctx.max_n.min(5))?;
    for (i, a) in small.iter().enumerate() {
        for b in &small[i..] {
            if a.order() + b.order() <= ctx.max_n {
                graphs.push(disjoint_union(a, b));
            }
        }
    }
    let desc = format!(
        "{samples} random forests of order <= {} (seed {}) and unions of two small trees",
        ctx.max_n, ctx.seed
    );
    Ok((desc, graphs))
}

fn catalog(g: &Graph, ctx: &Ctx) -> Result<ZfsCatalog> {
    enumerate_min_zfs_with(g, &ctx.limits)
}

fn zfg(g: &Graph, ctx: &Ctx) -> Result<ReconfigGraph> {
    build_zfg_with(g, &ctx.limits)
}

fn iso(a: &Graph, b: &Graph, ctx: &Ctx) -> Result<bool> {
    is_isomorphic_with(a, b, ctx.limits.isomorphism)
}

fn sets_text(sets: &[VertexSet]) -> String {
    sets.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

// Laws on the connected corpus.

fn exclusion_theorem(ctx: &Ctx) -> Result<Tally> {
    let (desc, graphs) = connected_corpus(ctx)?;
    let mut t = Tally::new(desc);
    t.over(&graphs, |g| {
        if g.order() < 2 {
            return Ok(Verdict::Skip);
        }
        let cat = catalog(g, ctx)?;
        let common: Vec<usize> = (0..g.order())
            .filter(|&v| cat.sets.iter().all(|s| s.contains(v)))
            .collect();
        Ok(Verdict::check(common.is_empty(), || {
            format!("vertices {common:?} lie in every minimum zero forcing set")
        }))
    })?;
    Ok(t)
}

fn order_bound(ctx: &Ctx) -> Result<Tally> {
    let (desc, graphs) = connected_corpus(ctx)?;
    let mut t = Tally::new(desc);
    t.over(&graphs, |g| {
        if g.order() < 2 {
            return Ok(Verdict::Skip);
        }
        let r = zfg(g, ctx)?;
        if !r.graph.is_connected() {
            return Ok(Verdict::Skip);
        }
        Ok(Verdict::check(r.nodes.len() > r.z, || {
            format!("{} nodes but Z = {}", r.nodes.len(), r.z)
        }))
    })?;
    Ok(t)
}

fn min_degree_clique(ctx: &Ctx) -> Result<Tally> {
    let (desc, graphs) = connected_corpus(ctx)?;
    let mut t = Tally::new(desc);
    t.over(&graphs, |g| {
        let r = zfg(g, ctx)?;
        if g.order() < 2 || r.z >= g.order() {
            return Ok(Verdict::Skip);
        }
        let omega = max_clique_size(&r.graph, &ctx.limits)?;
        Ok(Verdict::check(g.min_degree() <= omega, || {
            format!("minimum degree {} exceeds clique number {omega}", g.min_degree())
        }))
    })?;
    Ok(t)
}

fn delta_bound(ctx: &Ctx) -> Result<Tally> {
    let (desc, graphs) = connected_corpus(ctx)?;
    let mut t = Tally::new(desc);
    t.over(&graphs, |g| {
        let r = zfg(g, ctx)?;
        if has_triangle(&r.graph) {
            return Ok(Verdict::Skip);
        }
        let delta = r.graph.max_degree();
        Ok(Verdict::check(delta <= r.z, || {
            format!("triangle-free zero forcing graph with maximum degree {delta} > Z = {}", r.z)
        }))
    })?;
    Ok(t)
}

fn min_degree_bound(ctx: &Ctx) -> Result<Tally> {
    let (desc, graphs) = connected_corpus(ctx)?;
    let mut t = Tally::new(desc);
    t.over(&graphs, |g| {
        let z = zero_forcing_number_with(g, &ctx.limits)?;
        Ok(Verdict::check(g.min_degree() <= z, || {
            format!("minimum degree {} > Z = {z}", g.min_degree())
        }))
    })?;
    Ok(t)
}

fn k2_characterization(ctx: &Ctx) -> Result<Tally> {
    let (desc, graphs) = connected_corpus(ctx)?;
    let mut t = Tally::new(desc);
    t.over(&graphs, |g| {
        let r = zfg(g, ctx)?;
        let is_k2 = r.graph.order() == 2 && r.graph.size() == 1;
        let is_path = graph::is_path(g) && g.order() >= 2;
        Ok(Verdict::check(is_k2 == is_path, || {
            format!("zero forcing graph is K2: {is_k2}; base is a path of order >= 2: {is_path}")
        }))
    })?;
    Ok(t)
}

fn kr_characterization(ctx: &Ctx) -> Result<Tally> {
    let (desc, graphs) = connected_corpus(ctx)?;
    let mut t = Tally::new(desc);
    t.over(&graphs, |g| {
        let r = zfg(g, ctx)?;
        let order = r.graph.order();
        let zfg_kr = order >= 3 && graph::is_complete(&r.graph);
        let n = g.order();
        let base_kr = match () {
            _ if n >= 3 && graph::is_complete(g) => Some(n),
            _ if n >= 4 && graph::is_star(g) => Some(n - 1),
            _ => None,
        };
        let ok = match base_kr {
            Some(k) => zfg_kr && order == k,
            None => !zfg_kr,
        };
        Ok(Verdict::check(ok, || {
            format!("zero forcing graph complete of order {order}: {zfg_kr}; base K_r/K_1,r with r = {base_kr:?}")
        }))
    })?;
    Ok(t)
}

fn complete_zfg_z(ctx: &Ctx) -> Result<Tally> {
    let (desc, graphs) = connected_corpus(ctx)?;
    let mut t = Tally::new(desc);
    t.over(&graphs, |g| {
        let r = zfg(g, ctx)?;
        let order = r.graph.order();
        if order < 2 || !graph::is_complete(&r.graph) {
            return Ok(Verdict::Skip);
        }
        Ok(Verdict::check(r.z + 1 == order, || {
            format!("zero forcing graph is K_{order} but Z = {}", r.z)
        }))
    })?;
    Ok(t)
}

fn star_nonexistence(ctx: &Ctx) -> Result<Tally> {
    let (desc, graphs) = connected_corpus(ctx)?;
    let mut t = Tally::new(desc);
    t.over(&graphs, |g| {
        let r = zfg(g, ctx)?;
        let star = r.graph.order() >= 3 && graph::is_star(&r.graph);
        Ok(Verdict::check(!star, || {
            format!("zero forcing graph is K_1,{}", r.graph.order() - 1)
        }))
    })?;
    Ok(t)
}

fn reversal_law(ctx: &Ctx) -> Result<Tally> {
    let (desc, graphs) = connected_corpus(ctx)?;
    let mut t = Tally::new(desc + "; every chronological list of every minimum set");
    t.over(&graphs, |g| {
        let cat = catalog(g, ctx)?;
        for b in &cat.sets {
            for rev in all_reversals(g, b)? {
                if cat.sets.binary_search(&rev).is_err() {
                    return Ok(Verdict::Fail(format!(
                        "reversal {rev} of {b} is not a minimum zero forcing set"
                    )));
                }
            }
        }
        Ok(Verdict::Pass)
    })?;
    Ok(t)
}

fn product_law(ctx: &Ctx) -> Result<Tally> {
    let pool: Vec<Graph> = connected_levels()[..ctx.max_n].iter().flatten().cloned().collect();
    let samples = ctx.samples_or(50);
    let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed);
    let pairs: Vec<(Graph, Graph)> = (0..samples)
        .map(|_| {
            let a = pool[rng.gen_range(0..pool.len())].clone();
            let b = pool[rng.gen_range(0..pool.len())].clone();
            (a, b)
        })
        .collect();
    let mut t = Tally::new(format!(
        "{samples} seeded pairs (seed {}) of connected graphs of order <= {}",
        ctx.seed, ctx.max_n
    ));
    let verdicts: Vec<Verdict> = pairs
        .par_iter()
        .map(|(a, b)| {
            let ok = product_law_check_with(a, b, &ctx.limits)?;
            Ok(Verdict::check(ok, || {
                format!("fails for components of orders {} and {}", a.order(), b.order())
            }))
        })
        .collect::<Result<_>>()?;
    for ((a, b), v) in pairs.iter().zip(verdicts) {
        t.record(&disjoint_union(a, b), v);
    }
    Ok(t)
}

// Family laws.

fn family_zfgs(ctx: &Ctx) -> Result<Tally> {
    let top = ctx.max_n;
    let mut cases: Vec<(Graph, Graph)> = Vec::new();
    for n in 2..=12 {
        cases.push((families::path(n)?, families::path(2)?));
    }
    for n in 3..=top {
        cases.push((families::cycle(n)?, families::cycle(n)?));
    }
    for n in 1..=top {
        cases.push((families::complete(n)?, families::complete(n)?));
    }
    for n in 3..=top + 1 {
        cases.push((families::star(n)?, families::complete(n - 1)?));
    }
    let mut t = Tally::new(format!(
        "paths of order 2..=12, cycles 3..={top}, complete 1..={top}, stars 3..={}",
        top + 1
    ));
    for (g, want) in &cases {
        let r = zfg(g, ctx)?;
        let ok = iso(&r.graph, want, ctx)?;
        t.record(g, Verdict::check(ok, || format!("zero forcing graph has {} nodes, {} edges", r.graph.order(), r.graph.size())));
    }
    Ok(t)
}

fn cn2_path(ctx: &Ctx) -> Result<Tally> {
    let mut t = Tally::new(format!("cycles with two chords, n = 5..={}, every k in 3..=ceil(n/2)", ctx.max_n));
    for n in 5..=ctx.max_n {
        for k in 3..=n.div_ceil(2) {
            let g = families::cycle_plus_chords(n, k)?;
            let r = zfg(&g, ctx)?;
            let ok = iso(&r.graph, &families::path(n - 1)?, ctx)?;
            t.record(&g, Verdict::check(ok, || format!("k = {k}: zero forcing graph is not P_{}", n - 1)));
        }
    }
    Ok(t)
}

fn cn_plus_e(ctx: &Ctx) -> Result<Tally> {
    let mut t = Tally::new(format!("cycles plus one chord, n = 4..={}", ctx.max_n));
    for n in 4..=ctx.max_n {
        let g = families::cycle_plus_edge(n)?;
        let r = zfg(&g, ctx)?;
        let ok = iso(&r.graph, &families::cycle(n)?, ctx)?;
        t.record(&g, Verdict::check(ok, || format!("zero forcing graph is not C_{n}")));
    }
    Ok(t)
}

fn h_graph_c4(ctx: &Ctx) -> Result<Tally> {
    let g = families::h_graph();
    let r = zfg(&g, ctx)?;
    let want: Vec<VertexSet> = [[0, 3], [0, 5], [2, 3], [2, 5]]
        .iter()
        .map(|s| VertexSet::new(6, s.iter().copied()))
        .collect::<Result<_>>()?;
    let ok = r.nodes == want && iso(&r.graph, &families::cycle(4)?, ctx)?;
    let mut t = Tally::new("the H-graph");
    t.record(&g, Verdict::check(ok, || format!("nodes {}", sets_text(&r.nodes))));
    Ok(t)
}

fn disconnected_constructions(ctx: &Ctx) -> Result<Tally> {
    let top = ctx.max_n;
    let mut t = Tally::new(format!(
        "prism_with_leaves r = 3, 4; leaf blockers on C_6..C_{top} with B = {{0,1}}; clique bridges between cycles C_4..C_{top}"
    ));
    for r in 3..=4 {
        let g = families::prism_with_leaves(r)?;
        let z = zfg(&g, ctx)?;
        let ok = z.z == r && z.nodes.len() == 2 && z.graph.size() == 0;
        t.record(&g, Verdict::check(ok, || format!("Z = {}, {} nodes, {} edges", z.z, z.nodes.len(), z.graph.size())));
    }

    for n in 6..=top {
        let g = families::cycle(n)?;
        let b = VertexSet::new(n, [0, 1])?;
        let cat = catalog(&g, ctx)?;
        for b2 in all_reversals(&g, &b)? {
            let hypotheses = cat.z >= 2
                && cat.sets.binary_search(&b).is_ok()
                && cat.sets.binary_search(&b2).is_ok()
                && b.is_disjoint(&b2)
                && all_reversals(&g, &b2)?.contains(&b)
                && !cat.sets.iter().any(|s| !s.is_disjoint(&b) && !s.is_disjoint(&b2));
            if !hypotheses {
                t.record(&g, Verdict::Skip);
                continue;
            }
            let blocked = families::append_leaf_blocker(&g, &b, &b2)?;
            let z = zfg(&blocked, ctx)?;
            let ok = z.z == cat.z && !z.graph.is_connected();
            t.record(&blocked, Verdict::check(ok, || {
                format!("C_{n}, B = {b}, B' = {b2}: Z = {}, connected = {}", z.z, z.graph.is_connected())
            }));
        }
    }

    for a in 4..=top {
        for c in a..=top {
            let g = families::cycle(a)?;
            let h = families::cycle(c)?;
            for b_h in [[0, 1], [1, 0]] {
                let b_g = [0, 1];
                let (zg, zh) = (catalog(&g, ctx)?, catalog(&h, ctx)?);
                let r = zg.z;
                let sg = VertexSet::new(a, b_g)?;
                let sh = VertexSet::new(c, b_h)?;
                let hypotheses = r >= 2
                    && g.min_degree() == r
                    && h.min_degree() == r
                    && zh.z == r
                    && zg.sets.binary_search(&sg).is_ok()
                    && zh.sets.binary_search(&sh).is_ok();
                if !hypotheses {
                    t.record(&disjoint_union(&g, &h), Verdict::Skip);
                    continue;
                }
                let x = families::bridge_join(&g, &b_g, &h, &b_h)?;
                let z = zfg(&x, ctx)?;
                let ok = z.z == r && !z.graph.is_connected();
                t.record(&x, Verdict::check(ok, || {
                    format!("C_{a} and C_{c} bridged via {b_g:?}/{b_h:?}: Z = {}, connected = {}", z.z, z.graph.is_connected())
                }));
            }
        }
    }
    Ok(t)
}

// Tree and forest laws.

fn tree_connected(ctx: &Ctx) -> Result<Tally> {
    let graphs = all_trees(ctx.max_n)?;
    let mut t = Tally::new(format!("all trees of order <= {}", ctx.max_n));
    t.over(&graphs, |g| {
        let r = zfg(g, ctx)?;
        let k = connected_components(&r.graph).len();
        Ok(Verdict::check(k == 1, || format!("zero forcing graph has {k} components")))
    })?;
    Ok(t)
}

fn forest_connected(ctx: &Ctx) -> Result<Tally> {
    let (desc, graphs) = forest_corpus(ctx)?;
    let mut t = Tally::new(desc);
    t.over(&graphs, |g| {
        let r = zfg(g, ctx)?;
        let k = connected_components(&r.graph).len();
        Ok(Verdict::check(k == 1, || format!("zero forcing graph has {k} components")))
    })?;
    Ok(t)
}

fn c3c4(ctx: &Ctx) -> Result<Tally> {
    let graphs = all_trees(ctx.max_n)?;
    let mut t = Tally::new(format!("all trees of order <= {}", ctx.max_n));
    t.over(&graphs, |g| {
        let r = zfg(g, ctx)?;
        let has = contains_induced_c3_or_c4(&r.graph);
        let path = graph::is_path(g);
        Ok(Verdict::check(has != path, || {
            format!("induced C3/C4 present: {has}; tree is a path: {path}")
        }))
    })?;
    Ok(t)
}

fn c3c4_forests(ctx: &Ctx) -> Result<Tally> {
    let (desc, graphs) = forest_corpus(ctx)?;
    let mut t = Tally::new(desc);
    t.over(&graphs, |g| {
        let r = zfg(g, ctx)?;
        let free = !contains_induced_c3_or_c4(&r.graph);
        let comps = connected_components(g);
        let all_paths = comps
            .iter()
            .all(|c| graph::is_path(&g.induced_subgraph(c.members())));
        let nontrivial = comps.iter().filter(|c| c.len() > 1).count();
        let shape = all_paths && nontrivial <= 1;
        Ok(Verdict::check(free == shape, || {
            format!("{{C3,C4}}-free: {free}; paths with at most one nontrivial: {shape}")
        }))
    })?;
    Ok(t)
}

fn hypercube_trees(ctx: &Ctx) -> Result<Tally> {
    let mut t = Tally::new(format!("two-leaf spider trees G_d, d = 1..={}", ctx.max_n));
    for d in 1..=ctx.max_n {
        let g = families::spider_tree_two_leaves(d)?;
        let r = zfg(&g, ctx)?;
        let ok = iso(&r.graph, &graph::hypercube(d as u32), ctx)?;
        t.record(&g, Verdict::check(ok, || format!("zero forcing graph is not Q_{d}")));
    }
    Ok(t)
}

/// A random tree with one edge subdivided by three new vertices `x, y, z`;
/// returns the relabeled tree and the triple.
fn subdivided_tree(m: usize, rng: &mut ChaCha8Rng) -> (Graph, [usize; 3]) {
    use rand::seq::SliceRandom;
    let base = corpus::random_tree(m, rng);
    let (x, y, z) = (m, m + 1, m + 2);
    let mut edges: Vec<(usize, usize)> = base.edges().to_vec();
    if edges.is_empty() {
        edges = vec![(0, x), (x, y), (y, z)];
    } else {
        let (a, b) = edges.swap_remove(rng.gen_range(0..edges.len()));
        edges.extend([(a, x), (x, y), (y, z), (z, b)]);
    }
    let n = m + 3;
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let g = Graph::new(n, edges.iter().map(|&(u, v)| (perm[u], perm[v]))).expect("tree");
    (g, [perm[x], perm[y], perm[z]])
}

fn degree2_suppression(ctx: &Ctx) -> Result<Tally> {
    let samples = ctx.samples_or(20);
    let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed);
    let mut instances = Vec::with_capacity(samples);
    while instances.len() < samples {
        let m = rng.gen_range(2..=ctx.max_n);
        let (g, triple) = subdivided_tree(m, &mut rng);
        // With m = 1 the end of the subdivision is a leaf.
        if triple.iter().all(|&v| g.degree(v) == 2) {
            instances.push((g, triple));
        }
    }
    let mut t = Tally::new(format!(
        "{samples} seeded trees (seed {}) with a subdivided edge, base order 2..={}",
        ctx.seed, ctx.max_n
    ));
    let verdicts: Vec<Verdict> = instances
        .par_iter()
        .map(|(g, [u, v, w])| {
            let (reduced, map) = trees::suppress_degree2_triple(g, *u, *v, *w)?;
            let before = catalog(g, ctx)?;
            let after = catalog(&reduced, ctx)?;
            let mut mapped = Vec::with_capacity(before.sets.len());
            for s in &before.sets {
                let Some(members) = s.iter().map(|x| map[x]).collect::<Option<Vec<_>>>() else {
                    return Ok(Verdict::Fail(format!("minimum set {s} contains the suppressed vertex {v}")));
                };
                mapped.push(VertexSet::new(reduced.order(), members)?);
            }
            mapped.sort();
            if mapped != after.sets {
                return Ok(Verdict::Fail(format!(
                    "minimum sets differ after suppressing {v}: {} vs {}",
                    sets_text(&mapped),
                    sets_text(&after.sets)
                )));
            }
            let covers = trees::enumerate_min_path_covers_with(g, &ctx.limits)?;
            let at_end = covers.iter().any(|c| {
                c.paths.iter().any(|p| p.first() == Some(v) || p.last() == Some(v))
            });
            Ok(Verdict::check(!at_end, || format!("a minimum path cover ends at {v}")))
        })
        .collect::<Result<_>>()?;
    for ((g, _), v) in instances.iter().zip(verdicts) {
        t.record(g, v);
    }
    Ok(t)
}

fn leafy_cover(ctx: &Ctx) -> Result<Tally> {
    let graphs = all_trees(ctx.max_n)?;
    let mut t = Tally::new(format!("all trees of order <= {}", ctx.max_n));
    t.over(&graphs, |g| {
        let cover = trees::leafy_min_path_cover(g)?;
        if let Err(e) = cover.validate(g) {
            return Ok(Verdict::Fail(format!("invalid cover: {e}")));
        }
        let z = zero_forcing_number_with(g, &ctx.limits)?;
        if cover.len() != z {
            return Ok(Verdict::Fail(format!("{} paths but Z = {z}", cover.len())));
        }
        let leafless = cover.paths.iter().find(|p| p.iter().all(|&x| g.degree(x) > 1));
        Ok(Verdict::check(leafless.is_none(), || format!("path {leafless:?} has no leaf")))
    })?;
    Ok(t)
}

fn leaf_zfs(ctx: &Ctx) -> Result<Tally> {
    let (desc, mut graphs) = forest_corpus(ctx)?;
    graphs.extend(all_trees(ctx.max_n)?);
    let mut t = Tally::new(format!("all trees of order <= {}; {desc}", ctx.max_n));
    t.over(&graphs, |g| {
        let s = trees::all_leaf_min_zfs(g)?;
        let z = zero_forcing_number_with(g, &ctx.limits)?;
        let ok = s.len() == z && is_zero_forcing_set(g, &s) && s.iter().all(|v| g.degree(v) <= 1);
        Ok(Verdict::check(ok, || format!("{s} is not a minimum all-leaf zero forcing set (Z = {z})")))
    })?;
    Ok(t)
}

fn path_cover_counts(ctx: &Ctx) -> Result<Tally> {
    let mut t = Tally::new(format!("spider trees H_n and G_n, n = 1..={}", ctx.max_n));
    for n in 1..=ctx.max_n {
        let h = families::spider_tree_three_leaves(n)?;
        let count = trees::enumerate_min_path_covers_with(&h, &ctx.limits)?.len();
        let want = 3usize.pow(n as u32);
        t.record(&h, Verdict::check(count == want, || format!("H_{n}: {count} covers, expected {want}")));
        let g = families::spider_tree_two_leaves(n)?;
        let count = trees::enumerate_min_path_covers_with(&g, &ctx.limits)?.len();
        t.record(&g, Verdict::check(count == 1, || format!("G_{n}: {count} covers, expected 1")));
    }
    Ok(t)
}

fn path_cover_zfs(ctx: &Ctx) -> Result<Tally> {
    let graphs = all_trees(ctx.max_n)?;
    let mut t = Tally::new(format!("all trees of order <= {}", ctx.max_n));
    t.over(&graphs, |g| {
        let from_covers = trees::zfs_from_path_covers_with(g, &ctx.limits)?;
        let direct = catalog(g, ctx)?;
        Ok(Verdict::check(from_covers.sets == direct.sets, || {
            format!(
                "from covers: {}; enumerated: {}",
                sets_text(&from_covers.sets),
                sets_text(&direct.sets)
            )
        }))
    })?;
    Ok(t)
}

/// Connected graphs of order `<= max_n` isomorphic to their own zero forcing
/// graph. An exploratory probe; nothing is asserted about the answer.
pub fn fixed_point_probe(max_n: usize) -> Result<Vec<Graph>> {
    Error::check_cap("order for fixed point probe", max_n, MAX_ALL_CONNECTED)?;
    let limits = Limits::for_laws();
    let graphs: Vec<Graph> = connected_levels()[..max_n].iter().flatten().cloned().collect();
    let hits: Vec<Option<Graph>> = graphs
        .par_iter()
        .map(|g| {
            let r = from_catalog(&enumerate_min_zfs_with(g, &limits)?);
            Ok(is_isomorphic_with(&r.graph, g, limits.isomorphism)?.then(|| g.clone()))
        })
        .collect::<Result<_>>()?;
    Ok(hits.into_iter().flatten().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_is_sorted_and_unique() {
        let ids = law_ids();
        let mut sorted = ids.clone();
        sorted.sort_unstable();
        sorted.dedup();
        assert_eq!(ids, sorted);
    }

    #[test]
    fn unknown_law() {
        assert!(matches!(
            run_law("no_such_law", &LawParams::default()),
            Err(Error::UnknownLaw(_))
        ));
    }

    #[test]
    fn max_n_is_capped() {
        let p = LawParams {
            max_n: Some(5),
            ..LawParams::default()
        };
        assert!(matches!(run_law("hypercube_trees", &p), Err(Error::Capacity { .. })));
    }

    #[test]
    fn small_runs_pass() {
        let p = LawParams {
            max_n: Some(5),
            ..LawParams::default()
        };
        for id in ["exclusion_theorem", "tree_connected", "c3c4", "order_bound"] {
            let r = run_law(id, &p).unwrap();
            assert!(r.passed(), "{id}: {:?}", r.failures);
            assert!(r.instances_checked > 0);
        }
    }

    #[test]
    fn path_cover_counts_small() {
        let p = LawParams {
            max_n: Some(3),
            ..LawParams::default()
        };
        let r = run_law("path_cover_counts", &p).unwrap();
        assert!(r.passed());
        assert_eq!(r.instances_checked, 6);
    }

    #[test]
    fn report_serializes() {
        let p = LawParams {
            max_n: Some(6),
            ..LawParams::default()
        };
        let r = run_law("h_graph_c4", &p).unwrap();
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["law_id"], "h_graph_c4");
        assert!(json["elapsed_secs"].is_f64());
    }
}
