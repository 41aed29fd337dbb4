//! Canonical labeling of small weighted graphs.
//!
//! Vertices are first split into cells by iterated degree refinement; the
//! cells are ordered by their refined signature, which is an isomorphism
//! invariant. Within that ordering a branch-and-bound search picks the
//! labeling whose column-major upper triangle (diagonal included) is
//! lexicographically smallest. Two candidates that are twins (swapping them
//! is an automorphism) lead to identical subtrees, so only one is explored.

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

/// Largest vertex count accepted by the canonical labeling.
pub const MAX_CANON_VERTICES: usize = 10;

/// Canonical key of a simple graph: vertex count plus the upper-triangle
/// adjacency bits (column order, pair `t` at bit `t`) of the canonical
/// relabeling.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonKey {
    n: u8,
    bits: u64,
}

impl CanonKey {
    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    /// Rebuilds the canonical representative.
    pub fn to_graph(&self) -> SimpleGraph {
        let n = self.n();
        let mut g = SimpleGraph::empty(n).expect("key vertex count is within the cap");
        let mut t = 0;
        for v in 1..n {
            for u in 0..v {
                if self.bits & (1 << t) != 0 {
                    g.add_edge(u, v).expect("in range");
                }
                t += 1;
            }
        }
        g
    }
}

/// Canonical form of a weighted multigraph (loops on the diagonal).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiKey {
    n: u8,
    form: Vec<u32>,
}

pub(crate) fn simple_key(g: &SimpleGraph) -> Result<CanonKey> {
    let n = g.n();
    if n > MAX_CANON_VERTICES {
        return Err(Error::capacity("canonical labeling vertex count", n, MAX_CANON_VERTICES));
    }
    let mut w = vec![0u32; n * n];
    for e in g.edges() {
        w[e.u() * n + e.v()] = 1;
        w[e.v() * n + e.u()] = 1;
    }
    let order = canonical_order(n, &w);
    let mut bits = 0u64;
    let mut t = 0;
    for j in 1..n {
        for i in 0..j {
            if w[order[i] * n + order[j]] != 0 {
                bits |= 1 << t;
            }
            t += 1;
        }
    }
    Ok(CanonKey { n: n as u8, bits })
}

pub(crate) fn multi_key(n: usize, w: &[u32]) -> Result<MultiKey> {
    if n > MAX_CANON_VERTICES {
        return Err(Error::capacity("canonical labeling vertex count", n, MAX_CANON_VERTICES));
    }
    let order = canonical_order(n, w);
    Ok(MultiKey {
        n: n as u8,
        form: form_of(n, w, &order),
    })
}

fn form_of(n: usize, w: &[u32], order: &[usize]) -> Vec<u32> {
    let mut form = Vec::with_capacity(n * (n + 1) / 2);
    for j in 0..n {
        for i in 0..=j {
            form.push(w[order[i] * n + order[j]]);
        }
    }
    form
}

/// Refined vertex colors; color ranks follow the sorted signatures, so equal
/// inputs up to relabeling yield equal color multisets in equal order.
fn refine(n: usize, w: &[u32]) -> Vec<usize> {
    let mut color = vec![0usize; n];
    let mut classes = 0;
    loop {
        let sigs: Vec<(usize, u32, Vec<(usize, u32)>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<(usize, u32)> = (0..n)
                    .filter(|&u| u != v && w[v * n + u] != 0)
                    .map(|u| (color[u], w[v * n + u]))
                    .collect();
                nb.sort_unstable();
                (color[v], w[v * n + v], nb)
            })
            .collect();
        let mut sorted = sigs.clone();
        sorted.sort();
        sorted.dedup();
        let next: Vec<usize> = sigs
            .iter()
            .map(|s| sorted.binary_search(s).expect("present"))
            .collect();
        let next_classes = sorted.len();
        color = next;
        if next_classes == classes {
            return color;
        }
        classes = next_classes;
    }
}

/// Position -> vertex map of the canonical labeling.
pub(crate) fn canonical_order(n: usize, w: &[u32]) -> Vec<usize> {
    if n == 0 {
        return Vec::new();
    }
    let color = refine(n, w);
    let mut slot_color: Vec<usize> = color.clone();
    slot_color.sort_unstable();

    let twin = |a: usize, b: usize| -> bool {
        w[a * n + a] == w[b * n + b]
            && (0..n).all(|x| x == a || x == b || w[a * n + x] == w[b * n + x])
    };
    let mut twins = vec![false; n * n];
    for a in 0..n {
        for b in a + 1..n {
            if color[a] == color[b] && twin(a, b) {
                twins[a * n + b] = true;
                twins[b * n + a] = true;
            }
        }
    }

    let mut search = Search {
        n,
        w,
        color: &color,
        slot_color: &slot_color,
        twins: &twins,
        order: Vec::with_capacity(n),
        used: vec![false; n],
        current: Vec::with_capacity(n * (n + 1) / 2),
        best: None,
        best_order: Vec::new(),
    };
    search.descend();
    search.best_order
}

struct Search<'a> {
    n: usize,
    w: &'a [u32],
    color: &'a [usize],
    slot_color: &'a [usize],
    twins: &'a [bool],
    order: Vec<usize>,
    used: Vec<bool>,
    current: Vec<u32>,
    best: Option<Vec<u32>>,
    best_order: Vec<usize>,
}

impl Search<'_> {
    fn descend(&mut self) {
        let pos = self.order.len();
        let n = self.n;
        if pos == n {
            if self.best.as_ref().is_none_or(|b| self.current < *b) {
                self.best = Some(self.current.clone());
                self.best_order = self.order.clone();
            }
            return;
        }
        let start = pos * (pos + 1) / 2;
        let end = start + pos + 1;
        let mut tried: Vec<usize> = Vec::new();
        for cand in 0..n {
            if self.used[cand] || self.color[cand] != self.slot_color[pos] {
                continue;
            }
            if tried.iter().any(|&t| self.twins[t * n + cand]) {
                continue;
            }
            tried.push(cand);

            for i in 0..pos {
                self.current.push(self.w[self.order[i] * n + cand]);
            }
            self.current.push(self.w[cand * n + cand]);

            let worse = self
                .best
                .as_ref()
                .is_some_and(|b| self.current[..] > b[..end]);
            if !worse {
                self.order.push(cand);
                self.used[cand] = true;
                self.descend();
                self.used[cand] = false;
                self.order.pop();
            }
            self.current.truncate(start);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, complete_bipartite, cycle, path, SimpleGraph};
    use rand::seq::SliceRandom;
    use rand::{rngs::StdRng, SeedableRng};

    #[test]
    fn relabelings_of_p3_agree() {
        let a = SimpleGraph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let b = SimpleGraph::from_edges(3, &[(0, 2), (2, 1)]).unwrap();
        assert_eq!(simple_key(&a).unwrap(), simple_key(&b).unwrap());
        assert_ne!(
            simple_key(&a).unwrap(),
            simple_key(&complete(3).unwrap()).unwrap()
        );
    }

    #[test]
    fn empty_graph_key_is_zero() {
        let k = simple_key(&SimpleGraph::empty(3).unwrap()).unwrap();
        assert_eq!((k.n(), k.bits()), (3, 0));
    }

    #[test]
    fn key_round_trips_to_isomorphic_graph() {
        for g in [
            cycle(6).unwrap(),
            complete_bipartite(3, 4).unwrap(),
            path(7).unwrap(),
        ] {
            let k = simple_key(&g).unwrap();
            let h = k.to_graph();
            assert_eq!(h.edge_count(), g.edge_count());
            assert_eq!(simple_key(&h).unwrap(), k);
        }
    }

    #[test]
    fn capacity() {
        assert!(matches!(
            simple_key(&complete(11).unwrap()),
            Err(Error::Capacity { got: 11, .. })
        ));
        assert!(simple_key(&complete(10).unwrap()).is_ok());
    }

    #[test]
    fn distinguishes_regular_graphs_refinement_cannot() {
        // C6 vs two triangles: both 2-regular on 6 vertices.
        let c6 = cycle(6).unwrap();
        let two_k3 =
            SimpleGraph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert_ne!(simple_key(&c6).unwrap(), simple_key(&two_k3).unwrap());
    }

    #[test]
    fn multigraph_keys_respect_multiplicity_placement() {
        // path a-b-c with the doubled edge at either end: isomorphic.
        let w1 = vec![0, 2, 0, 2, 0, 1, 0, 1, 0];
        let w2 = vec![0, 1, 0, 1, 0, 2, 0, 2, 0];
        assert_eq!(multi_key(3, &w1).unwrap(), multi_key(3, &w2).unwrap());
        // path a-b-c-d: doubled end edge vs doubled middle edge differ even
        // though both have the same simple skeleton and multiplicity multiset.
        let end = vec![0, 2, 0, 0, 2, 0, 1, 0, 0, 1, 0, 1, 0, 0, 1, 0];
        let mid = vec![0, 1, 0, 0, 1, 0, 2, 0, 0, 2, 0, 1, 0, 0, 1, 0];
        assert_ne!(multi_key(4, &end).unwrap(), multi_key(4, &mid).unwrap());
        // loops count
        let l0 = vec![1, 1, 1, 0];
        let l1 = vec![0, 1, 1, 1];
        assert_eq!(multi_key(2, &l0).unwrap(), multi_key(2, &l1).unwrap());
    }

    #[test]
    fn invariant_under_random_permutations() {
        let mut rng = StdRng::seed_from_u64(7);
        for g in crate::graph::all_graphs_up_to(5).unwrap() {
            let k = simple_key(&g).unwrap();
            let mut perm: Vec<usize> = (0..g.n()).collect();
            for _ in 0..10 {
                perm.shuffle(&mut rng);
                assert_eq!(simple_key(&g.relabel(&perm).unwrap()).unwrap(), k);
            }
        }
    }
}
