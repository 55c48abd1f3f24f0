//! The zero forcing graph of a base graph: one node per minimum zero forcing
//! set, edges between sets whose symmetric difference has exactly two elements.

use std::collections::VecDeque;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::forcing::{enumerate_min_zfs_with, ZfsCatalog};
use crate::graph::{
    cartesian_product, connected_components, contains_induced_c3_or_c4, disjoint_union,
    has_triangle, max_clique_size, Graph, VertexSet,
};
use crate::iso::is_isomorphic_with;
use crate::limits::Limits;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReconfigGraph {
    pub base_signature: String,
    pub z: usize,
    /// Minimum zero forcing sets in catalog order; node `i` is `nodes[i]`.
    pub nodes: Vec<VertexSet>,
    pub graph: Graph,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct ZfgStats {
    pub order: usize,
    pub max_degree: usize,
    pub clique_number: usize,
    pub triangle_free: bool,
    pub c3c4_free: bool,
}

const PARALLEL_NODES: usize = 512;

/// Token-jumping adjacency over a catalog.
pub fn from_catalog(catalog: &ZfsCatalog) -> ReconfigGraph {
    let nodes = catalog.sets.clone();
    let z = catalog.z;
    let masks: Option<Vec<u64>> = nodes.iter().map(VertexSet::to_mask).collect();
    let neighbors_of = |i: usize| -> Vec<(usize, usize)> {
        ((i + 1)..nodes.len())
            .filter(|&j| match &masks {
                // Equal cardinality, so |A △ B| = 2 iff |A ∩ B| = z − 1.
                Some(m) => (m[i] & m[j]).count_ones() as usize + 1 == z,
                None => nodes[i].symmetric_difference_len(&nodes[j]) == 2,
            })
            .map(|j| (i, j))
            .collect()
    };
    let edges: Vec<(usize, usize)> = if nodes.len() >= PARALLEL_NODES {
        (0..nodes.len()).into_par_iter().flat_map_iter(neighbors_of).collect()
    } else {
        (0..nodes.len()).flat_map(neighbors_of).collect()
    };
    let graph = Graph::new(nodes.len(), edges).expect("node pairs in range");
    ReconfigGraph {
        base_signature: catalog.base.signature(),
        z,
        nodes,
        graph,
    }
}

pub fn build_zfg(g: &Graph) -> Result<ReconfigGraph> {
    build_zfg_with(g, &Limits::default())
}

pub fn build_zfg_with(g: &Graph, limits: &Limits) -> Result<ReconfigGraph> {
    Ok(from_catalog(&enumerate_min_zfs_with(g, limits)?))
}

impl ReconfigGraph {
    pub fn node_index(&self, s: &VertexSet) -> Option<usize> {
        self.nodes.binary_search(s).ok()
    }
}

pub fn zfg_is_connected(r: &ReconfigGraph) -> bool {
    r.graph.is_connected()
}

/// Components as sorted node-index sets, ordered by least node.
pub fn zfg_components(r: &ReconfigGraph) -> Vec<VertexSet> {
    connected_components(&r.graph)
}

/// BFS distance between two minimum zero forcing sets; `None` if they lie in
/// different components.
pub fn zfg_distance(r: &ReconfigGraph, a: &VertexSet, b: &VertexSet) -> Result<Option<usize>> {
    let lookup = |s: &VertexSet| {
        r.node_index(s)
            .ok_or_else(|| Error::input(format!("{s} is not a minimum zero forcing set")))
    };
    let (from, to) = (lookup(a)?, lookup(b)?);
    let mut dist = vec![usize::MAX; r.graph.order()];
    dist[from] = 0;
    let mut queue = VecDeque::from([from]);
    while let Some(x) = queue.pop_front() {
        if x == to {
            return Ok(Some(dist[x]));
        }
        for &y in r.graph.neighbors(x) {
            if dist[y] == usize::MAX {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
        }
    }
    Ok(None)
}

/// Checks `𝒵(G ⊔ H) = 𝒵(G) □ 𝒵(H)`.
///
/// Node `(i, j)` of the product must be the set `X_i ⊔ Y_j` (with `Y_j`
/// shifted by `|G|`), and that correspondence must carry edges to edges.
/// When the product is within the isomorphism cap an independent
/// isomorphism search is run as well.
pub fn product_law_check(g: &Graph, h: &Graph) -> Result<bool> {
    product_law_check_with(g, h, &Limits::default())
}

pub fn product_law_check_with(g: &Graph, h: &Graph, limits: &Limits) -> Result<bool> {
    let zg = build_zfg_with(g, limits)?;
    let zh = build_zfg_with(h, limits)?;
    let union = build_zfg_with(&disjoint_union(g, h), limits)?;
    let product = cartesian_product(&zg.graph, &zh.graph);
    if union.graph.order() != product.order() || union.graph.size() != product.size() {
        return Ok(false);
    }
    let n = g.order() + h.order();
    let m = zh.nodes.len();
    let mut image = Vec::with_capacity(product.order());
    for x in &zg.nodes {
        for y in &zh.nodes {
            let members = x.iter().chain(y.iter().map(|v| v + g.order()));
            let joined = VertexSet::new(n, members)?;
            match union.node_index(&joined) {
                Some(k) => image.push(k),
                None => return Ok(false),
            }
        }
    }
    // Equal sizes and edge counts, so a bijection that maps edges into edges
    // maps them onto edges.
    let mut hit = vec![false; image.len()];
    for &k in &image {
        if std::mem::replace(&mut hit[k], true) {
            return Ok(false);
        }
    }
    let preserves = product
        .edges()
        .iter()
        .all(|&(a, b)| union.graph.has_edge(image[a], image[b]));
    if !preserves {
        return Ok(false);
    }
    debug_assert_eq!(image.len(), zg.nodes.len() * m);
    if product.order() <= limits.isomorphism {
        return is_isomorphic_with(&union.graph, &product, limits.isomorphism);
    }
    Ok(true)
}

pub fn zfg_stats(r: &ReconfigGraph) -> Result<ZfgStats> {
    zfg_stats_with(r, &Limits::default())
}

pub fn zfg_stats_with(r: &ReconfigGraph, limits: &Limits) -> Result<ZfgStats> {
    Ok(ZfgStats {
        order: r.graph.order(),
        max_degree: r.graph.max_degree(),
        clique_number: max_clique_size(&r.graph, limits)?,
        triangle_free: !has_triangle(&r.graph),
        c3c4_free: !contains_induced_c3_or_c4(&r.graph),
    })
}
