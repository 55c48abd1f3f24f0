//! Named base-graph constructors.
//!
//! Every constructor pins one labeling. Where a graph is usually drawn with
//! labels `1..n`, vertex `i` here is label `i + 1`.

use crate::error::{Error, Result};
use crate::graph::{cartesian_product, disjoint_union, Graph, VertexSet};

fn need(ok: bool, what: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::input(format!("parameter out of range: {what}")))
    }
}

/// `0 – 1 – … – (n−1)`, n ≥ 1.
pub fn path(n: usize) -> Result<Graph> {
    need(n >= 1, "path needs n >= 1")?;
    Graph::new(n, (1..n).map(|i| (i - 1, i)))
}

/// `0 – 1 – … – (n−1) – 0`, n ≥ 3.
pub fn cycle(n: usize) -> Result<Graph> {
    need(n >= 3, "cycle needs n >= 3")?;
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn complete(n: usize) -> Result<Graph> {
    need(n >= 1, "complete needs n >= 1")?;
    Graph::new(n, (0..n).flat_map(|u| ((u + 1)..n).map(move |v| (u, v))))
}

/// `K_{1,n−1}` with center 0, n ≥ 2.
pub fn star(n: usize) -> Result<Graph> {
    need(n >= 2, "star needs n >= 2")?;
    Graph::new(n, (1..n).map(|i| (0, i)))
}

/// `C_n` plus the chords `{0, k−1}` and `{n−1, k−1}`; `k = 3` is `C_n(2)`.
pub fn cycle_plus_chords(n: usize, k: usize) -> Result<Graph> {
    need(n >= 5, "cycle_plus_chords needs n >= 5")?;
    need((3..=n.div_ceil(2)).contains(&k), "cycle_plus_chords needs 3 <= k <= ceil(n/2)")?;
    let cyc = (0..n).map(|i| (i, (i + 1) % n));
    Graph::new(n, cyc.chain([(0, k - 1), (n - 1, k - 1)]))
}

/// `C_n + e` with the chord `{0, 2}`, n ≥ 4.
pub fn cycle_plus_edge(n: usize) -> Result<Graph> {
    need(n >= 4, "cycle_plus_edge needs n >= 4")?;
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)).chain([(0, 2)]))
}

/// Two paths `0–1–2` and `3–4–5` joined by `{1, 4}`.
pub fn h_graph() -> Graph {
    Graph::new(6, [(0, 1), (1, 2), (3, 4), (4, 5), (1, 4)]).expect("H-graph")
}

/// Spine `P_len` (vertices `0..len`) with `leaves` pendant leaves per spine
/// vertex; leaves of spine vertex `i` are `len + leaves*i ..`.
fn spine_with_leaves(len: usize, leaves: usize) -> Result<Graph> {
    let n = len * (leaves + 1);
    let spine = (1..len).map(|i| (i - 1, i));
    let pendants = (0..len).flat_map(|i| (0..leaves).map(move |j| (i, len + leaves * i + j)));
    Graph::new(n, spine.chain(pendants))
}

/// The tree `G_d`: `P_d` with two pendant leaves on every spine vertex. Order `3d`.
pub fn spider_tree_two_leaves(d: usize) -> Result<Graph> {
    need(d >= 1, "spider_tree_two_leaves needs d >= 1")?;
    spine_with_leaves(d, 2)
}

/// The tree `H_n`: `P_n` with three pendant leaves on every spine vertex. Order `4n`.
pub fn spider_tree_three_leaves(n: usize) -> Result<Graph> {
    need(n >= 1, "spider_tree_three_leaves needs n >= 1")?;
    spine_with_leaves(n, 3)
}

/// `K_r □ P₃` plus one leaf on every vertex of the two end copies of `K_r`.
///
/// Product vertex `(i, j)` (clique index `i`, path position `j`) is `3i + j`;
/// the leaf on `(i, 0)` is `3r + i` and the leaf on `(i, 2)` is `4r + i`.
pub fn prism_with_leaves(r: usize) -> Result<Graph> {
    need(r >= 3, "prism_with_leaves needs r >= 3")?;
    let core = cartesian_product(&complete(r)?, &path(3)?);
    let leaves = (0..r)
        .map(|i| (3 * i, 3 * r + i))
        .chain((0..r).map(|i| (3 * i + 2, 4 * r + i)));
    Graph::new(5 * r, core.edges().iter().copied().chain(leaves))
}

/// Adds one pendant leaf to each member of `b` and of `b_prime`. New leaves
/// follow the existing vertices, leaves of `b` first, each group in member order.
pub fn append_leaf_blocker(g: &Graph, b: &VertexSet, b_prime: &VertexSet) -> Result<Graph> {
    let n = g.order();
    if b.universe() != n || b_prime.universe() != n {
        return Err(Error::input("blocker sets must live in the base graph"));
    }
    if b.len() != b_prime.len() || b.len() < 2 {
        return Err(Error::input("blocker sets need equal size r >= 2"));
    }
    if !b.is_disjoint(b_prime) {
        return Err(Error::input("blocker sets must be disjoint"));
    }
    let r = b.len();
    let leaves = b.iter().chain(b_prime.iter()).enumerate().map(|(i, v)| (v, n + i));
    Graph::new(n + 2 * r, g.edges().iter().copied().chain(leaves))
}

/// `G ⊔ H` plus a clique `u_1 … u_r` with edges `v_i u_i` and `u_i w_i`,
/// matching `b_g[i]`, `u_i`, `b_h[i]` in the given order. The clique
/// vertices are numbered after `G ⊔ H`.
pub fn bridge_join(g: &Graph, b_g: &[usize], h: &Graph, b_h: &[usize]) -> Result<Graph> {
    let r = b_g.len();
    if r != b_h.len() || r < 2 {
        return Err(Error::input("bridge sets need equal size r >= 2"));
    }
    if b_g.iter().any(|&v| v >= g.order()) || b_h.iter().any(|&w| w >= h.order()) {
        return Err(Error::input("bridge vertex outside its graph"));
    }
    let base = disjoint_union(g, h);
    let off = g.order() + h.order();
    let clique = (0..r).flat_map(|i| ((i + 1)..r).map(move |j| (off + i, off + j)));
    let links = (0..r).flat_map(|i| [(b_g[i], off + i), (off + i, g.order() + b_h[i])]);
    Graph::new(off + r, base.edges().iter().copied().chain(clique).chain(links))
}

/// `K₃ ∘ K₁`: triangle `0,1,2` with leaf `i + 3` on vertex `i`.
pub fn corona_k3_k1() -> Graph {
    Graph::new(6, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)]).expect("corona")
}

/// Names accepted by [`by_name`], with their parameter counts.
pub const FAMILY_NAMES: &[(&str, usize)] = &[
    ("path", 1),
    ("cycle", 1),
    ("complete", 1),
    ("star", 1),
    ("cycle_plus_chords", 2),
    ("cycle_plus_edge", 1),
    ("h_graph", 0),
    ("spider_tree_two_leaves", 1),
    ("spider_tree_three_leaves", 1),
    ("prism_with_leaves", 1),
    ("corona_k3_k1", 0),
    ("hypercube", 1),
];

/// Constructs a family by name (CLI entry point).
pub fn by_name(name: &str, params: &[usize]) -> Result<Graph> {
    let arity = FAMILY_NAMES
        .iter()
        .find(|(n, _)| *n == name)
        .map(|&(_, a)| a)
        .ok_or_else(|| Error::input(format!("unknown family `{name}`")))?;
    if params.len() != arity {
        return Err(Error::input(format!(
            "family `{name}` takes {arity} parameter(s), got {}",
            params.len()
        )));
    }
    let p = |i: usize| params[i];
    match name {
        "path" => path(p(0)),
        "cycle" => cycle(p(0)),
        "complete" => complete(p(0)),
        "star" => star(p(0)),
        "cycle_plus_chords" => cycle_plus_chords(p(0), p(1)),
        "cycle_plus_edge" => cycle_plus_edge(p(0)),
        "h_graph" => Ok(h_graph()),
        "spider_tree_two_leaves" => spider_tree_two_leaves(p(0)),
        "spider_tree_three_leaves" => spider_tree_three_leaves(p(0)),
        "prism_with_leaves" => prism_with_leaves(p(0)),
        "corona_k3_k1" => Ok(corona_k3_k1()),
        "hypercube" => {
            need(p(0) <= 16, "hypercube needs d <= 16")?;
            Ok(crate::graph::hypercube(p(0) as u32))
        }
        _ => unreachable!("name checked above"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iso::is_isomorphic;

    fn sorted_degrees(g: &Graph) -> Vec<usize> {
        let mut d = g.degrees();
        d.sort_unstable();
        d
    }

    #[test]
    fn basic_families() {
        assert!(is_isomorphic(&cycle(3).unwrap(), &complete(3).unwrap()).unwrap());
        assert_eq!(star(4).unwrap().degrees(), vec![3, 1, 1, 1]);
        assert_eq!(path(2).unwrap(), complete(2).unwrap());
        assert!(path(0).is_err());
        assert!(cycle(2).is_err());
        assert!(star(1).is_err());
    }

    #[test]
    fn chords() {
        let g = cycle_plus_chords(7, 3).unwrap();
        assert_eq!((g.order(), g.size()), (7, 9));
        let d = g.degrees();
        assert_eq!(d.iter().filter(|&&x| x == 4).count(), 1);
        assert_eq!(d.iter().filter(|&&x| x == 3).count(), 2);
        let g5 = cycle_plus_chords(5, 3).unwrap();
        assert_eq!(g5.degrees().iter().filter(|&&x| x == 2).count(), 2);
        assert!(cycle_plus_chords(8, 4).is_ok());
        assert!(cycle_plus_chords(8, 5).is_err());
        assert!(cycle_plus_chords(4, 3).is_err());
    }

    #[test]
    fn cycle_plus_edge_shapes() {
        let g = cycle_plus_edge(4).unwrap();
        assert_eq!(g.size(), 5);
        assert_eq!(sorted_degrees(&g), vec![2, 2, 3, 3]);
        let g = cycle_plus_edge(5).unwrap();
        assert_eq!((g.order(), g.size()), (5, 6));
    }

    #[test]
    fn h_graph_shape() {
        let h = h_graph();
        assert_eq!((h.order(), h.size()), (6, 5));
        assert_eq!(h.leaves().len(), 4);
        assert_eq!(sorted_degrees(&h), vec![1, 1, 1, 1, 3, 3]);
    }

    #[test]
    fn spiders() {
        assert!(is_isomorphic(&spider_tree_two_leaves(1).unwrap(), &path(3).unwrap()).unwrap());
        let g2 = spider_tree_two_leaves(2).unwrap();
        assert_eq!((g2.order(), g2.leaves().len()), (6, 4));
        assert!(is_isomorphic(&spider_tree_three_leaves(1).unwrap(), &star(4).unwrap()).unwrap());
        assert_eq!(spider_tree_three_leaves(2).unwrap().order(), 8);
        for d in 1..=6 {
            assert!(spider_tree_two_leaves(d).unwrap().is_tree());
            assert!(spider_tree_three_leaves(d).unwrap().is_tree());
            assert_eq!(spider_tree_two_leaves(d).unwrap().order(), 3 * d);
            assert_eq!(spider_tree_three_leaves(d).unwrap().order(), 4 * d);
        }
    }

    #[test]
    fn prism() {
        let g = prism_with_leaves(3).unwrap();
        // K3 □ P3 has 3·2 + 3·3 = 15 edges, plus 6 leaves.
        assert_eq!((g.order(), g.size()), (15, 21));
        assert_eq!(g.leaves(), (9..15).collect::<Vec<_>>());
        assert_eq!(prism_with_leaves(4).unwrap().order(), 20);
        assert!(prism_with_leaves(2).is_err());
    }

    #[test]
    fn leaf_blocker() {
        let c6 = cycle(6).unwrap();
        let b = VertexSet::new(6, [0, 1]).unwrap();
        let bp = VertexSet::new(6, [3, 4]).unwrap();
        let g = append_leaf_blocker(&c6, &b, &bp).unwrap();
        assert_eq!((g.order(), g.size()), (10, 10));
        assert!(g.has_edge(0, 6) && g.has_edge(1, 7) && g.has_edge(3, 8) && g.has_edge(4, 9));
        let overlap = VertexSet::new(6, [1, 3]).unwrap();
        assert!(append_leaf_blocker(&c6, &b, &overlap).is_err());
        let small = VertexSet::new(6, [3]).unwrap();
        assert!(append_leaf_blocker(&c6, &b, &small).is_err());
    }

    #[test]
    fn bridge() {
        let c5 = cycle(5).unwrap();
        let x = bridge_join(&c5, &[0, 1], &c5, &[0, 1]).unwrap();
        assert_eq!(x.order(), 12);
        // 5 + 5 cycle edges, one clique edge, four links.
        assert_eq!(x.size(), 15);
        assert!(x.has_edge(10, 11));
        assert!(x.has_edge(0, 10) && x.has_edge(10, 5) && x.has_edge(1, 11) && x.has_edge(11, 6));
        assert!(bridge_join(&c5, &[0], &c5, &[0]).is_err());
    }

    #[test]
    fn corona() {
        assert_eq!(corona_k3_k1().degrees(), vec![3, 3, 3, 1, 1, 1]);
    }

    #[test]
    fn by_name_dispatch() {
        assert_eq!(by_name("cycle", &[5]).unwrap(), cycle(5).unwrap());
        assert!(by_name("cycle", &[]).is_err());
        assert!(by_name("nope", &[]).is_err());
    }
}
