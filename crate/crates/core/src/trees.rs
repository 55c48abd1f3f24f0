//! Path covers of trees.
//!
//! For a tree `T`, Z(T) equals the path cover number P(T), and the minimum
//! zero forcing sets are exactly the endpoint selections (one endpoint per
//! path) of minimum path covers.

use std::collections::{BTreeSet, HashMap};
use std::rc::Rc;

use crate::error::{Error, Result};
use crate::forcing::ZfsCatalog;
use crate::graph::{connected_components, Graph, VertexSet};
use crate::limits::{Limits, MASK_BITS};

/// Vertex-disjoint induced paths covering a tree, each an ordered vertex sequence.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PathCover {
    pub paths: Vec<Vec<usize>>,
}

impl PathCover {
    pub fn new(paths: Vec<Vec<usize>>) -> Self {
        PathCover { paths }.canonical()
    }

    /// Orients every path from its smaller endpoint and sorts paths by their
    /// least vertex.
    pub fn canonical(mut self) -> Self {
        for p in &mut self.paths {
            if p.last() < p.first() {
                p.reverse();
            }
        }
        self.paths
            .sort_by_key(|p| p.iter().copied().min().unwrap_or(usize::MAX));
        self
    }

    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    /// Checks the cover invariants against `t`.
    pub fn validate(&self, t: &Graph) -> Result<()> {
        let mut seen = vec![false; t.order()];
        for p in &self.paths {
            if p.is_empty() {
                return Err(Error::contract("empty path in cover"));
            }
            for &v in p {
                if v >= t.order() || std::mem::replace(&mut seen[v], true) {
                    return Err(Error::contract(format!("vertex {v} repeated or out of range")));
                }
            }
            if p.windows(2).any(|w| !t.has_edge(w[0], w[1])) {
                return Err(Error::contract(format!("{p:?} is not a walk in the tree")));
            }
            let induced = t.induced_subgraph(p);
            if induced.size() + 1 != p.len() {
                return Err(Error::contract(format!("{p:?} is not an induced path")));
            }
        }
        if seen.iter().any(|&s| !s) {
            return Err(Error::contract("cover misses a vertex"));
        }
        Ok(())
    }

    fn endpoint_choices(&self) -> Vec<Vec<usize>> {
        self.paths
            .iter()
            .map(|p| {
                let (a, b) = (p[0], *p.last().expect("nonempty"));
                if a == b {
                    vec![a]
                } else {
                    vec![a, b]
                }
            })
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GStarKind {
    GeneralizedStar,
    PendentGeneralizedStar,
    /// The tree is a path.
    None,
}

/// Result of the center search over a tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GStarReport {
    pub kind: GStarKind,
    pub center: Option<usize>,
    /// Components of `T − center`, sorted by least member.
    pub components: Vec<VertexSet>,
    /// Index into `components` of the one component that is not a pendent path.
    pub non_path_component: Option<usize>,
}

fn require_tree(t: &Graph) -> Result<()> {
    if t.is_tree() {
        Ok(())
    } else {
        Err(Error::contract("input is not a tree"))
    }
}

fn require_forest(t: &Graph) -> Result<()> {
    if t.is_forest() {
        Ok(())
    } else {
        Err(Error::contract("input has a cycle"))
    }
}

/// Components of `T − v` as sorted vertex lists, ordered by least member.
fn components_without(t: &Graph, v: usize) -> Vec<Vec<usize>> {
    let keep: Vec<usize> = (0..t.order()).filter(|&x| x != v).collect();
    let sub = t.induced_subgraph(&keep);
    connected_components(&sub)
        .into_iter()
        .map(|c| c.iter().map(|i| keep[i]).collect())
        .collect()
}

/// Finds the center of a generalized star or a pendent generalized star.
///
/// Scans vertices of degree at least three in ascending order and returns
/// the first one for which at most one component of `T − v` has a vertex of
/// degree at least three in `T`.
pub fn find_gstar_center(t: &Graph) -> Result<GStarReport> {
    require_tree(t)?;
    Ok(gstar_report(t))
}

fn gstar_report(t: &Graph) -> GStarReport {
    if t.max_degree() <= 2 {
        return GStarReport {
            kind: GStarKind::None,
            center: None,
            components: Vec::new(),
            non_path_component: None,
        };
    }
    for v in (0..t.order()).filter(|&v| t.degree(v) >= 3) {
        let comps = components_without(t, v);
        let mut high = 0;
        let mut npp = None;
        for (i, c) in comps.iter().enumerate() {
            if c.iter().any(|&x| t.degree(x) >= 3) {
                high += 1;
                npp = Some(i);
            }
        }
        if high <= 1 {
            let components = comps
                .into_iter()
                .map(|c| VertexSet::new(t.order(), c).expect("in range"))
                .collect();
            return GStarReport {
                kind: if high == 0 {
                    GStarKind::GeneralizedStar
                } else {
                    GStarKind::PendentGeneralizedStar
                },
                center: Some(v),
                components,
                non_path_component: npp,
            };
        }
    }
    unreachable!("every non-path tree has a (pendent) generalized star")
}

/// Walks a path inside `allowed` starting at `start` (which must be an endpoint).
fn walk_from(t: &Graph, start: usize, allowed: &[bool]) -> Vec<usize> {
    let mut out = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    while let Some(&next) = t
        .neighbors(cur)
        .iter()
        .find(|&&x| x != prev && allowed[x])
    {
        out.push(next);
        prev = cur;
        cur = next;
    }
    out
}

/// A pendent path component oriented from the vertex adjacent to `center`.
fn arm(t: &Graph, center: usize, comp: &VertexSet) -> Vec<usize> {
    let mut allowed = vec![false; t.order()];
    for v in comp.iter() {
        allowed[v] = true;
    }
    let attach = *t
        .neighbors(center)
        .iter()
        .find(|&&x| allowed[x])
        .expect("component touches the center");
    walk_from(t, attach, &allowed)
}

fn join_through(left: &[usize], center: usize, right: &[usize]) -> Vec<usize> {
    left.iter()
        .rev()
        .copied()
        .chain([center])
        .chain(right.iter().copied())
        .collect()
}

/// A minimum path cover of a tree in which every path contains a leaf of the tree.
///
/// Peels a pendent generalized star, covers the remaining component
/// recursively, and threads the star's first pendent path through its center.
pub fn leafy_min_path_cover(t: &Graph) -> Result<PathCover> {
    require_tree(t)?;
    Ok(PathCover::new(leafy_cover(t)))
}

fn leafy_cover(t: &Graph) -> Vec<Vec<usize>> {
    let n = t.order();
    if t.max_degree() <= 2 {
        let start = (0..n).find(|&v| t.degree(v) <= 1).expect("paths have an end");
        return vec![walk_from(t, start, &vec![true; n])];
    }
    let report = gstar_report(t);
    let v = report.center.expect("non-path tree has a center");
    match report.non_path_component {
        None => {
            let arms: Vec<Vec<usize>> = report.components.iter().map(|c| arm(t, v, c)).collect();
            let mut paths = vec![join_through(&arms[0], v, &arms[1])];
            paths.extend(arms.into_iter().skip(2));
            paths
        }
        Some(npp) => {
            let arms: Vec<Vec<usize>> = report
                .components
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != npp)
                .map(|(_, c)| arm(t, v, c))
                .collect();
            let rest: Vec<usize> = report.components[npp].iter().collect();
            let w = *t
                .neighbors(v)
                .iter()
                .find(|x| report.components[npp].contains(**x))
                .expect("rest touches the center");
            let sub = t.induced_subgraph(&rest);
            let mut paths: Vec<Vec<usize>> = leafy_cover(&sub)
                .into_iter()
                .map(|p| p.into_iter().map(|i| rest[i]).collect())
                .collect();
            let at = paths.iter().position(|p| p.contains(&w)).expect("w covered");
            let p1 = &paths[at];
            if p1[0] == w || *p1.last().expect("nonempty") == w {
                // U w v R1, then R2 … Rk.
                let mut joined = paths.swap_remove(at);
                if joined[0] == w {
                    joined.reverse();
                }
                joined.push(v);
                joined.extend(arms[0].iter().copied());
                paths.push(joined);
                paths.extend(arms.into_iter().skip(1));
            } else {
                paths.push(join_through(&arms[0], v, &arms[1]));
                paths.extend(arms.into_iter().skip(2));
            }
            paths
        }
    }
}

/// Leafy covers of every component of a forest, in global labels.
fn forest_leafy_cover(t: &Graph) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for comp in connected_components(t) {
        let vs: Vec<usize> = comp.iter().collect();
        let sub = t.induced_subgraph(&vs);
        out.extend(
            leafy_cover(&sub)
                .into_iter()
                .map(|p| p.into_iter().map(|i| vs[i]).collect::<Vec<_>>()),
        );
    }
    out
}

/// P(T) for a forest, summed over components.
pub fn path_cover_number(t: &Graph) -> Result<usize> {
    require_forest(t)?;
    Ok(forest_leafy_cover(t).len())
}

/// A minimum zero forcing set of a forest made only of leaves (an isolated
/// vertex counts as its own leaf). Takes the smallest leaf endpoint of each
/// path of a leafy cover.
pub fn all_leaf_min_zfs(t: &Graph) -> Result<VertexSet> {
    require_forest(t)?;
    let picks = forest_leafy_cover(t).into_iter().map(|p| {
        let (a, b) = (p[0], *p.last().expect("nonempty"));
        let leafy = |x: usize| t.degree(x) <= 1;
        match (leafy(a), leafy(b)) {
            (true, true) => a.min(b),
            (true, false) => a,
            (false, true) => b,
            (false, false) => unreachable!("leafy cover path without a leaf"),
        }
    });
    VertexSet::new(t.order(), picks)
}

type Cover = Vec<Vec<usize>>;

fn canonical_cover(paths: Cover) -> Cover {
    PathCover { paths }.canonical().paths
}

struct CoverMemo<'a> {
    t: &'a Graph,
    adj: Vec<u64>,
    memo: HashMap<u64, Rc<Vec<Cover>>>,
}

impl CoverMemo<'_> {
    fn degree_in(&self, v: usize, s: u64) -> u32 {
        (self.adj[v] & s).count_ones()
    }

    fn components(&self, mut s: u64) -> Vec<u64> {
        let mut out = Vec::new();
        while s != 0 {
            let mut comp = s & s.wrapping_neg();
            loop {
                let mut grown = comp;
                let mut bits = comp;
                while bits != 0 {
                    let v = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    grown |= self.adj[v] & s;
                }
                if grown == comp {
                    break;
                }
                comp = grown;
            }
            out.push(comp);
            s &= !comp;
        }
        out
    }

    fn walk(&self, start: usize, s: u64) -> Vec<usize> {
        let mut allowed = vec![false; self.t.order()];
        let mut bits = s;
        while bits != 0 {
            allowed[bits.trailing_zeros() as usize] = true;
            bits &= bits - 1;
        }
        walk_from(self.t, start, &allowed)
    }

    /// All minimum path covers of the forest induced by `s`.
    fn forest(&mut self, s: u64) -> Vec<Cover> {
        let mut acc: Vec<Cover> = vec![Vec::new()];
        for comp in self.components(s) {
            let sub = self.tree(comp);
            acc = acc
                .iter()
                .flat_map(|base| {
                    sub.iter().map(move |c| {
                        let mut merged = base.clone();
                        merged.extend(c.iter().cloned());
                        merged
                    })
                })
                .collect();
        }
        acc
    }

    /// All minimum path covers of the subtree induced by the connected set `s`.
    fn tree(&mut self, s: u64) -> Rc<Vec<Cover>> {
        if let Some(hit) = self.memo.get(&s) {
            return Rc::clone(hit);
        }
        let members: Vec<usize> = (0..self.adj.len()).filter(|&v| s >> v & 1 == 1).collect();
        let result = if members.iter().all(|&v| self.degree_in(v, s) <= 2) {
            let start = *members
                .iter()
                .find(|&&v| self.degree_in(v, s) <= 1)
                .expect("finite path has an end");
            vec![canonical_cover(vec![self.walk(start, s)])]
        } else {
            self.split(s, &members)
        };
        let result = Rc::new(result);
        self.memo.insert(s, Rc::clone(&result));
        result
    }

    /// Three-class recursion around a vertex `u` with two pendent paths
    /// `v1…vj` and `w1…wk`: covers containing `v1…vj`, covers containing
    /// `w1…wk`, and covers containing `vj…v1 u w1…wk`.
    fn split(&mut self, s: u64, members: &[usize]) -> Vec<Cover> {
        let (u, vmask, wmask) = members
            .iter()
            .find_map(|&u| {
                let rest = s & !(1 << u);
                let pendent: Vec<u64> = self
                    .components(rest)
                    .into_iter()
                    .filter(|&c| {
                        let mut bits = c;
                        while bits != 0 {
                            let x = bits.trailing_zeros() as usize;
                            bits &= bits - 1;
                            if self.degree_in(x, s) > 2 {
                                return false;
                            }
                        }
                        true
                    })
                    .collect();
                (pendent.len() >= 2).then(|| (u, pendent[0], pendent[1]))
            })
            .expect("non-path tree has a vertex with two pendent paths");
        let attach = |m: u64| (self.adj[u] & m).trailing_zeros() as usize;
        let v_path = self.walk(attach(vmask), vmask);
        let w_path = self.walk(attach(wmask), wmask);
        let through = join_through(&v_path, u, &w_path);

        let mut candidates: Vec<Cover> = Vec::new();
        for (removed, path) in [(vmask, &v_path), (wmask, &w_path)] {
            for c in self.tree(s & !removed).iter() {
                let mut c = c.clone();
                c.push(path.clone());
                candidates.push(c);
            }
        }
        for mut c in self.forest(s & !(vmask | wmask | (1 << u))) {
            c.push(through.clone());
            candidates.push(c);
        }
        let best = candidates.iter().map(Vec::len).min().expect("nonempty");
        let mut out: Vec<Cover> = candidates
            .into_iter()
            .filter(|c| c.len() == best)
            .map(canonical_cover)
            .collect();
        out.sort();
        out.dedup();
        out
    }
}

/// Every minimum path cover of a tree, canonically ordered.
pub fn enumerate_min_path_covers(t: &Graph) -> Result<Vec<PathCover>> {
    enumerate_min_path_covers_with(t, &Limits::default())
}

pub fn enumerate_min_path_covers_with(t: &Graph, limits: &Limits) -> Result<Vec<PathCover>> {
    Error::check_cap(
        "tree order for path cover enumeration",
        t.order(),
        limits.path_covers.min(MASK_BITS),
    )?;
    require_tree(t)?;
    let mut memo = CoverMemo {
        t,
        adj: t.masks().expect("within mask width"),
        memo: HashMap::new(),
    };
    let all = crate::forcing::full_mask(t.order());
    let covers = memo.tree(all);
    Ok(covers.iter().map(|c| PathCover { paths: c.clone() }).collect())
}

/// Minimum zero forcing sets of a tree, read off its minimum path covers by
/// choosing one endpoint of every path.
pub fn zfs_from_path_covers(t: &Graph) -> Result<ZfsCatalog> {
    zfs_from_path_covers_with(t, &Limits::default())
}

pub fn zfs_from_path_covers_with(t: &Graph, limits: &Limits) -> Result<ZfsCatalog> {
    let covers = enumerate_min_path_covers_with(t, limits)?;
    let n = t.order();
    let mut sets: BTreeSet<VertexSet> = BTreeSet::new();
    for cover in &covers {
        let mut partial: Vec<Vec<usize>> = vec![Vec::new()];
        for choice in cover.endpoint_choices() {
            partial = partial
                .iter()
                .flat_map(|p| {
                    choice.iter().map(move |&e| {
                        let mut q = p.clone();
                        q.push(e);
                        q
                    })
                })
                .collect();
        }
        for p in partial {
            sets.insert(VertexSet::new(n, p)?);
        }
    }
    Ok(ZfsCatalog {
        base: t.clone(),
        z: covers[0].len(),
        sets: sets.into_iter().collect(),
    })
}

/// Replaces the middle of a bare degree-2 triple `u – v – w` by the edge `{u, w}`.
///
/// Returns the new tree and the relabeling map (old index → new index,
/// `None` for `v`); vertices above `v` shift down by one.
pub fn suppress_degree2_triple(
    t: &Graph,
    u: usize,
    v: usize,
    w: usize,
) -> Result<(Graph, Vec<Option<usize>>)> {
    require_tree(t)?;
    let n = t.order();
    if u >= n || v >= n || w >= n || u == w {
        return Err(Error::contract("triple vertices must be distinct and in range"));
    }
    if [u, v, w].iter().any(|&x| t.degree(x) != 2) {
        return Err(Error::contract("u, v and w must all have degree 2"));
    }
    if !t.has_edge(u, v) || !t.has_edge(v, w) {
        return Err(Error::contract("v must be adjacent to both u and w"));
    }
    let map: Vec<Option<usize>> = (0..n)
        .map(|x| match x.cmp(&v) {
            std::cmp::Ordering::Less => Some(x),
            std::cmp::Ordering::Equal => None,
            std::cmp::Ordering::Greater => Some(x - 1),
        })
        .collect();
    let edges = t
        .edges()
        .iter()
        .filter(|&&(a, b)| a != v && b != v)
        .map(|&(a, b)| (map[a].expect("kept"), map[b].expect("kept")))
        .chain([(map[u].expect("kept"), map[w].expect("kept"))]);
    Ok((Graph::new(n - 1, edges)?, map))
}
