//! Small-graph isomorphism: joint color refinement, then backtracking over
//! color classes.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::limits::Limits;

pub fn is_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    is_isomorphic_with(g, h, Limits::default().isomorphism)
}

pub fn is_isomorphic_with(g: &Graph, h: &Graph, cap: usize) -> Result<bool> {
    Ok(find_isomorphism(g, h, cap)?.is_some())
}

/// An edge-preserving bijection `V(G) → V(H)` if one exists.
pub fn find_isomorphism(g: &Graph, h: &Graph, cap: usize) -> Result<Option<Vec<usize>>> {
    Error::check_cap("graph order for isomorphism", g.order().max(h.order()), cap)?;
    if g.order() != h.order() || g.size() != h.size() {
        return Ok(None);
    }
    let n = g.order();
    if n == 0 {
        return Ok(Some(Vec::new()));
    }
    let (cg, ch) = refine_jointly(g, h);
    let mut hist_g = cg.clone();
    let mut hist_h = ch.clone();
    hist_g.sort_unstable();
    hist_h.sort_unstable();
    if hist_g != hist_h {
        return Ok(None);
    }

    // Rarest classes first, then keep the order connected so adjacency
    // checks prune early.
    let mut class_size: HashMap<usize, usize> = HashMap::new();
    for &c in &cg {
        *class_size.entry(c).or_default() += 1;
    }
    let order = search_order(g, &cg, &class_size);

    let mut state = Search {
        g,
        h,
        cg: &cg,
        ch: &ch,
        order: &order,
        map: vec![usize::MAX; n],
        used: vec![false; n],
    };
    Ok(state.extend(0).then_some(state.map))
}

fn search_order(g: &Graph, colors: &[usize], class_size: &HashMap<usize, usize>) -> Vec<usize> {
    let n = g.order();
    let mut placed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    while order.len() < n {
        // Prefer vertices adjacent to the placed prefix, then small classes.
        let next = (0..n)
            .filter(|&v| !placed[v])
            .min_by_key(|&v| {
                let links = g.neighbors(v).iter().filter(|&&w| placed[w]).count();
                (usize::MAX - links, class_size[&colors[v]], v)
            })
            .expect("unplaced vertex");
        placed[next] = true;
        order.push(next);
    }
    order
}

struct Search<'a> {
    g: &'a Graph,
    h: &'a Graph,
    cg: &'a [usize],
    ch: &'a [usize],
    order: &'a [usize],
    map: Vec<usize>,
    used: Vec<bool>,
}

impl Search<'_> {
    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let v = self.order[depth];
        for t in 0..self.h.order() {
            if self.used[t] || self.cg[v] != self.ch[t] || !self.consistent(v, t, depth) {
                continue;
            }
            self.map[v] = t;
            self.used[t] = true;
            if self.extend(depth + 1) {
                return true;
            }
            self.used[t] = false;
            self.map[v] = usize::MAX;
        }
        false
    }

    fn consistent(&self, v: usize, t: usize, depth: usize) -> bool {
        self.order[..depth]
            .iter()
            .all(|&u| self.g.has_edge(u, v) == self.h.has_edge(self.map[u], t))
    }
}

/// 1-dimensional Weisfeiler-Leman on `G ⊔ H` so colors are comparable.
fn refine_jointly(g: &Graph, h: &Graph) -> (Vec<usize>, Vec<usize>) {
    let graphs = [g, h];
    let mut colors: Vec<Vec<usize>> = graphs.iter().map(|x| x.degrees()).collect();
    let mut classes = count_classes(&colors);
    loop {
        let signatures: Vec<Vec<(usize, Vec<usize>)>> = graphs
            .iter()
            .zip(&colors)
            .map(|(x, c)| {
                (0..x.order())
                    .map(|v| {
                        let mut nb: Vec<usize> = x.neighbors(v).iter().map(|&w| c[w]).collect();
                        nb.sort_unstable();
                        (c[v], nb)
                    })
                    .collect()
            })
            .collect();
        let mut palette: Vec<&(usize, Vec<usize>)> = signatures.iter().flatten().collect();
        palette.sort();
        palette.dedup();
        let recolored: Vec<Vec<usize>> = signatures
            .iter()
            .map(|sigs| {
                sigs.iter()
                    .map(|s| palette.binary_search(&s).expect("signature in palette"))
                    .collect()
            })
            .collect();
        let next = count_classes(&recolored);
        colors = recolored;
        if next == classes {
            break;
        }
        classes = next;
    }
    let mut it = colors.into_iter();
    (it.next().unwrap(), it.next().unwrap())
}

fn count_classes(colors: &[Vec<usize>]) -> usize {
    let mut all: Vec<usize> = colors.iter().flatten().copied().collect();
    all.sort_unstable();
    all.dedup();
    all.len()
}
