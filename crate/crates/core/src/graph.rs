//! Small labeled graphs stored as adjacency bit-rows.
//!
//! Every recursion in this crate runs on [`SimpleGraph`]; the Tutte
//! deletion–contraction needs parallel edges and loops and uses
//! [`MultiGraph`] instead.

use std::fmt;

use crate::canon::{self, CanonKey};
use crate::error::{Error, Result};

/// Largest vertex count a [`SimpleGraph`] can hold (one `u32` row per vertex).
pub const MAX_VERTICES: usize = 32;

/// Largest vertex count accepted by [`enumerate_labeled_graphs`].
pub const MAX_ENUMERATION_VERTICES: usize = 6;

/// An edge `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    u: usize,
    v: usize,
}

impl Edge {
    /// Normalizes the endpoint order. Fails on a loop.
    pub fn new(a: usize, b: usize) -> Result<Self> {
        match a.cmp(&b) {
            std::cmp::Ordering::Less => Ok(Edge { u: a, v: b }),
            std::cmp::Ordering::Greater => Ok(Edge { u: b, v: a }),
            std::cmp::Ordering::Equal => Err(Error::InvalidEdge { u: a, v: b }),
        }
    }

    pub fn u(&self) -> usize {
        self.u
    }

    pub fn v(&self) -> usize {
        self.v
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

/// How the merged vertex `w` of an edge contraction is joined to the rest of
/// the graph, given the punctured neighborhoods `N(u)\{v}` and `N(v)\{u}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MergeRule {
    /// `w` stays isolated (matching polynomial).
    Isolate,
    /// `w` joins the union (chromatic polynomial, ordinary contraction).
    Union,
    /// `w` joins the intersection (adjoint polynomial).
    Intersection,
    /// `w` joins the symmetric difference (co-adjoint polynomial).
    SymmetricDifference,
}

/// Labeled simple undirected graph on at most [`MAX_VERTICES`] vertices.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    n: u8,
    adj: [u32; MAX_VERTICES],
}

fn full_mask(n: usize) -> u32 {
    if n >= 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

/// Iterates the set bits of a mask, lowest first.
pub(crate) fn bits(mut mask: u32) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let b = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(b)
        }
    })
}

/// Component count of the graph given by neighbor rows, restricted to the
/// first `n` vertices.
pub(crate) fn count_components(n: usize, rows: &[u32]) -> usize {
    let mut unseen = full_mask(n);
    let mut count = 0;
    while unseen != 0 {
        let start = unseen & unseen.wrapping_neg();
        let mut comp = start;
        let mut frontier = start;
        while frontier != 0 {
            let mut next = 0;
            for v in bits(frontier) {
                next |= rows[v];
            }
            frontier = next & !comp;
            comp |= next;
        }
        unseen &= !comp;
        count += 1;
    }
    count
}

impl SimpleGraph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::capacity("vertex count", n, MAX_VERTICES));
        }
        Ok(SimpleGraph {
            n: n as u8,
            adj: [0; MAX_VERTICES],
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for &(a, b) in edges {
            g.add_edge(a, b)?;
        }
        Ok(g)
    }

    /// Adds an edge; adding an existing edge is a no-op.
    pub fn add_edge(&mut self, a: usize, b: usize) -> Result<()> {
        let n = self.n();
        if a >= n || b >= n || a == b {
            return Err(Error::InvalidEdge { u: a, v: b });
        }
        self.adj[a] |= 1 << b;
        self.adj[b] |= 1 << a;
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    /// Neighbor set of `u` as a bit mask.
    pub fn neighbors(&self, u: usize) -> u32 {
        self.adj[u]
    }

    pub(crate) fn rows(&self) -> &[u32] {
        &self.adj[..self.n()]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && v < self.n() && self.adj[u] & (1 << v) != 0
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].count_ones() as usize
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n()).map(|u| self.degree(u)).max().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.rows().iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges in lexicographic `(u, v)` order.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n() {
            for v in bits(self.adj[u] & !full_mask(u + 1)) {
                out.push(Edge { u, v });
            }
        }
        out
    }

    /// Lexicographically smallest edge.
    pub fn first_edge(&self) -> Option<Edge> {
        (0..self.n()).find_map(|u| {
            let higher = self.adj[u] & !full_mask(u + 1);
            (higher != 0).then(|| Edge {
                u,
                v: higher.trailing_zeros() as usize,
            })
        })
    }

    pub fn component_count(&self) -> usize {
        count_components(self.n(), self.rows())
    }

    pub fn is_connected(&self) -> bool {
        self.n() > 0 && self.component_count() == 1
    }

    /// Vertex sets of the connected components, ordered by smallest vertex.
    pub fn components(&self) -> Vec<u32> {
        let mut unseen = full_mask(self.n());
        let mut out = Vec::new();
        while unseen != 0 {
            let mut comp = unseen & unseen.wrapping_neg();
            loop {
                let mut next = comp;
                for v in bits(comp) {
                    next |= self.adj[v];
                }
                if next == comp {
                    break;
                }
                comp = next;
            }
            unseen &= !comp;
            out.push(comp);
        }
        out
    }

    pub fn is_eulerian(&self) -> bool {
        (0..self.n()).all(|u| self.degree(u).is_multiple_of(2))
    }

    pub fn remove_edge(&self, e: Edge) -> Result<Self> {
        if !self.has_edge(e.u, e.v) {
            return Err(Error::InvalidEdge { u: e.u, v: e.v });
        }
        let mut g = *self;
        g.adj[e.u] &= !(1 << e.v);
        g.adj[e.v] &= !(1 << e.u);
        Ok(g)
    }

    /// Subgraph induced on `mask`, relabeled to `0..|mask|` preserving order.
    pub fn induced(&self, mask: u32) -> Self {
        let mask = mask & full_mask(self.n());
        let keep: Vec<usize> = bits(mask).collect();
        let mut index = [usize::MAX; MAX_VERTICES];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let mut g = SimpleGraph {
            n: keep.len() as u8,
            adj: [0; MAX_VERTICES],
        };
        for (i, &v) in keep.iter().enumerate() {
            for w in bits(self.adj[v] & mask) {
                g.adj[i] |= 1 << index[w];
            }
        }
        g
    }

    /// Deletes the vertices in `mask` together with their edges.
    pub fn remove_vertices(&self, mask: u32) -> Self {
        self.induced(full_mask(self.n()) & !mask)
    }

    /// Merges the endpoints of `e` into a new vertex `w` that takes the
    /// highest index; `w` is joined to the rest of the graph per `rule`.
    pub fn merge_edge(&self, e: Edge, rule: MergeRule) -> Result<Self> {
        if !self.has_edge(e.u, e.v) {
            return Err(Error::InvalidEdge { u: e.u, v: e.v });
        }
        let pair = (1u32 << e.u) | (1u32 << e.v);
        let nu = self.adj[e.u] & !pair;
        let nv = self.adj[e.v] & !pair;
        let joined = match rule {
            MergeRule::Isolate => 0,
            MergeRule::Union => nu | nv,
            MergeRule::Intersection => nu & nv,
            MergeRule::SymmetricDifference => nu ^ nv,
        };
        let mut g = self.remove_vertices(pair);
        let w = g.n();
        g.n += 1;
        // Remaining vertices keep their relative order, so old index x maps to
        // x minus the number of removed endpoints below it.
        for x in bits(joined) {
            let shift = usize::from(e.u < x) + usize::from(e.v < x);
            let y = x - shift;
            g.adj[y] |= 1 << w;
            g.adj[w] |= 1 << y;
        }
        Ok(g)
    }

    /// Applies `perm`, where vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        let n = self.n();
        let mut seen = 0u32;
        if perm.len() != n {
            return Err(Error::Domain(format!(
                "permutation has length {}, expected {n}",
                perm.len()
            )));
        }
        for &p in perm {
            if p >= n || seen & (1 << p) != 0 {
                return Err(Error::Domain("not a permutation".into()));
            }
            seen |= 1 << p;
        }
        let mut g = SimpleGraph::empty(n)?;
        for e in self.edges() {
            g.add_edge(perm[e.u], perm[e.v])?;
        }
        Ok(g)
    }

    /// Isomorphism-invariant key; see [`canonical_key`].
    pub fn canonical_key(&self) -> Result<CanonKey> {
        canonical_key(self)
    }

    pub fn to_graph6(&self) -> String {
        emit_graph6(self)
    }
}

impl fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SimpleGraph(n={}, edges=[", self.n)?;
        for (i, e) in self.edges().iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "])")
    }
}

/// Number of connected components of `(V(g), subset)`, isolated vertices
/// included. Uses union–find with path compression.
pub fn components_of_subset(g: &SimpleGraph, subset: &[Edge]) -> usize {
    let n = g.n();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        let mut root = x;
        while parent[root] != root {
            root = parent[root];
        }
        while parent[x] != root {
            let next = parent[x];
            parent[x] = root;
            x = next;
        }
        root
    }
    let mut components = n;
    for e in subset {
        debug_assert!(g.has_edge(e.u, e.v));
        let a = find(&mut parent, e.u);
        let b = find(&mut parent, e.v);
        if a != b {
            parent[a] = b;
            components -= 1;
        }
    }
    components
}

/// Canonical form of `g` under vertex relabeling. Limited to
/// [`canon::MAX_CANON_VERTICES`] vertices.
pub fn canonical_key(g: &SimpleGraph) -> Result<CanonKey> {
    canon::simple_key(g)
}

/// The named graph families understood by the CLI and constructors.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NamedGraph {
    Empty(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    Path(usize),
    Cycle(usize),
}

impl NamedGraph {
    /// Parses `K<n>`, `K<m>,<n>`, `P<n>`, `C<n>`, `E<n>` (case-insensitive).
    pub fn parse(name: &str) -> Result<Self> {
        let unknown = || Error::UnknownGraph(name.to_string());
        let trimmed = name.trim();
        let mut chars = trimmed.chars();
        let head = chars.next().ok_or_else(unknown)?.to_ascii_uppercase();
        let rest = chars.as_str();
        let num = |s: &str| -> Result<usize> {
            if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
                return Err(unknown());
            }
            s.parse::<usize>().map_err(|_| unknown())
        };
        match head {
            'K' => match rest.split_once(',') {
                Some((m, n)) => Ok(NamedGraph::CompleteBipartite(num(m)?, num(n)?)),
                None => Ok(NamedGraph::Complete(num(rest)?)),
            },
            'P' => Ok(NamedGraph::Path(num(rest)?)),
            'C' => Ok(NamedGraph::Cycle(num(rest)?)),
            'E' => Ok(NamedGraph::Empty(num(rest)?)),
            _ => Err(unknown()),
        }
    }

    pub fn vertex_count(&self) -> usize {
        match *self {
            NamedGraph::Empty(n)
            | NamedGraph::Complete(n)
            | NamedGraph::Path(n)
            | NamedGraph::Cycle(n) => n,
            NamedGraph::CompleteBipartite(m, n) => m.saturating_add(n),
        }
    }

    pub fn build(&self) -> Result<SimpleGraph> {
        let total = self.vertex_count();
        if total > MAX_VERTICES {
            return Err(Error::capacity("vertex count", total, MAX_VERTICES));
        }
        let mut g = SimpleGraph::empty(total)?;
        match *self {
            NamedGraph::Empty(_) => {}
            NamedGraph::Complete(n) => {
                for u in 0..n {
                    for v in u + 1..n {
                        g.add_edge(u, v)?;
                    }
                }
            }
            NamedGraph::CompleteBipartite(m, n) => {
                for u in 0..m {
                    for v in m..m + n {
                        g.add_edge(u, v)?;
                    }
                }
            }
            NamedGraph::Path(n) => {
                for u in 1..n {
                    g.add_edge(u - 1, u)?;
                }
            }
            NamedGraph::Cycle(n) => {
                if n < 3 {
                    return Err(Error::Domain(format!("cycle C{n} needs at least 3 vertices")));
                }
                for u in 0..n {
                    g.add_edge(u, (u + 1) % n)?;
                }
            }
        }
        Ok(g)
    }
}

impl fmt::Display for NamedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            NamedGraph::Empty(n) => write!(f, "E{n}"),
            NamedGraph::Complete(n) => write!(f, "K{n}"),
            NamedGraph::CompleteBipartite(m, n) => write!(f, "K{m},{n}"),
            NamedGraph::Path(n) => write!(f, "P{n}"),
            NamedGraph::Cycle(n) => write!(f, "C{n}"),
        }
    }
}

pub fn build_named(family: NamedGraph) -> Result<SimpleGraph> {
    family.build()
}

pub fn complete(n: usize) -> Result<SimpleGraph> {
    NamedGraph::Complete(n).build()
}

pub fn complete_bipartite(m: usize, n: usize) -> Result<SimpleGraph> {
    NamedGraph::CompleteBipartite(m, n).build()
}

pub fn path(n: usize) -> Result<SimpleGraph> {
    NamedGraph::Path(n).build()
}

pub fn cycle(n: usize) -> Result<SimpleGraph> {
    NamedGraph::Cycle(n).build()
}

// graph6: one byte n+63, then the upper triangle in column order
// (x(0,1), x(0,2), x(1,2), x(0,3), ...) packed six bits per byte, big-endian,
// each byte offset by 63.

pub fn parse_graph6(text: &str) -> Result<SimpleGraph> {
    let bytes = text.as_bytes();
    let first = *bytes.first().ok_or_else(|| Error::parse(0, "empty input"))?;
    if !(63..=126).contains(&first) {
        return Err(Error::parse(0, format!("invalid size byte 0x{first:02x}")));
    }
    if first == 126 {
        return Err(Error::parse(
            0,
            format!("long-format vertex count; at most {MAX_VERTICES} vertices supported"),
        ));
    }
    let n = (first - 63) as usize;
    if n > MAX_VERTICES {
        return Err(Error::parse(
            0,
            format!("{n} vertices exceeds limit {MAX_VERTICES}"),
        ));
    }
    let pairs = n * n.saturating_sub(1) / 2;
    let body_len = pairs.div_ceil(6);
    if bytes.len() != 1 + body_len {
        let offset = bytes.len().min(1 + body_len);
        return Err(Error::parse(
            offset,
            format!(
                "expected {} bytes for {n} vertices, found {}",
                1 + body_len,
                bytes.len()
            ),
        ));
    }
    let mut g = SimpleGraph::empty(n)?;
    let mut k = 0usize;
    for (i, &b) in bytes[1..].iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Error::parse(1 + i, format!("invalid data byte 0x{b:02x}")));
        }
        let chunk = b - 63;
        for bit in 0..6 {
            let set = chunk & (0b100000 >> bit) != 0;
            if k >= pairs {
                if set {
                    return Err(Error::parse(1 + i, "nonzero padding bits"));
                }
            } else if set {
                let (u, v) = pair_at(k);
                g.add_edge(u, v)?;
            }
            k += 1;
        }
    }
    Ok(g)
}

/// The `k`-th pair of the column-ordered upper triangle.
fn pair_at(k: usize) -> (usize, usize) {
    let mut v = 1;
    let mut start = 0;
    while start + v <= k {
        start += v;
        v += 1;
    }
    (k - start, v)
}

pub fn emit_graph6(g: &SimpleGraph) -> String {
    let n = g.n();
    let mut out = String::with_capacity(1 + (n * n).div_ceil(12));
    out.push((n as u8 + 63) as char);
    let mut chunk = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            chunk = (chunk << 1) | u8::from(g.has_edge(u, v));
            filled += 1;
            if filled == 6 {
                out.push((chunk + 63) as char);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((chunk << (6 - filled)) + 63) as char);
    }
    out
}

/// Parses newline-separated graph6 strings, skipping blank lines. Parse
/// errors report the byte offset within the whole input.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<SimpleGraph>> {
    let mut out = Vec::new();
    let mut base = 0usize;
    for line in text.split_inclusive('\n') {
        let trimmed = line.trim_end_matches(['\n', '\r']);
        if !trimmed.trim().is_empty() {
            let g = parse_graph6(trimmed).map_err(|e| match e {
                Error::Parse { offset, message } => Error::Parse {
                    offset: base + offset,
                    message,
                },
                other => other,
            })?;
            out.push(g);
        }
        base += line.len();
    }
    Ok(out)
}

/// All `2^(n(n-1)/2)` labeled simple graphs on `n` vertices, each once.
pub fn enumerate_labeled_graphs(n: usize) -> Result<LabeledGraphs> {
    if n > MAX_ENUMERATION_VERTICES {
        return Err(Error::capacity(
            "enumeration vertex count",
            n,
            MAX_ENUMERATION_VERTICES,
        ));
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|v| (0..v).map(move |u| (u, v)))
        .collect();
    Ok(LabeledGraphs {
        n,
        total: 1u64 << pairs.len(),
        pairs,
        next: 0,
    })
}

/// Iterator returned by [`enumerate_labeled_graphs`].
#[derive(Debug, Clone)]
pub struct LabeledGraphs {
    n: usize,
    pairs: Vec<(usize, usize)>,
    next: u64,
    total: u64,
}

impl Iterator for LabeledGraphs {
    type Item = SimpleGraph;

    fn next(&mut self) -> Option<SimpleGraph> {
        if self.next >= self.total {
            return None;
        }
        let code = self.next;
        self.next += 1;
        let mut g = SimpleGraph::empty(self.n).expect("n checked at construction");
        for (i, &(u, v)) in self.pairs.iter().enumerate() {
            if code & (1 << i) != 0 {
                g.adj[u] |= 1 << v;
                g.adj[v] |= 1 << u;
            }
        }
        Some(g)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.total - self.next) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for LabeledGraphs {}

/// All labeled graphs with at most `max_n` vertices, smallest first.
pub fn all_graphs_up_to(max_n: usize) -> Result<Vec<SimpleGraph>> {
    let mut out = Vec::new();
    for n in 0..=max_n {
        out.extend(enumerate_labeled_graphs(n)?);
    }
    Ok(out)
}

/// Undirected multigraph: symmetric edge multiplicities plus per-vertex loop
/// counts.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiGraph {
    n: usize,
    mult: Vec<u32>,
    loops: Vec<u32>,
}

impl MultiGraph {
    pub fn new(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::capacity("vertex count", n, MAX_VERTICES));
        }
        Ok(MultiGraph {
            n,
            mult: vec![0; n * n],
            loops: vec![0; n],
        })
    }

    pub fn from_simple(g: &SimpleGraph) -> Self {
        let mut m = MultiGraph::new(g.n()).expect("simple graphs respect the vertex cap");
        for e in g.edges() {
            m.add_edge(e.u, e.v).expect("edge of a valid graph");
        }
        m
    }

    /// Adds one copy of `{a, b}`; `a == b` adds a loop.
    pub fn add_edge(&mut self, a: usize, b: usize) -> Result<()> {
        if a >= self.n || b >= self.n {
            return Err(Error::InvalidEdge { u: a, v: b });
        }
        if a == b {
            self.loops[a] += 1;
        } else {
            self.mult[a * self.n + b] += 1;
            self.mult[b * self.n + a] += 1;
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn multiplicity(&self, a: usize, b: usize) -> u32 {
        if a == b {
            self.loops[a]
        } else {
            self.mult[a * self.n + b]
        }
    }

    pub fn loops(&self, a: usize) -> u32 {
        self.loops[a]
    }

    /// Edge count including multiplicities and loops.
    pub fn edge_count(&self) -> usize {
        let mut total: usize = self.loops.iter().map(|&l| l as usize).sum();
        for a in 0..self.n {
            for b in a + 1..self.n {
                total += self.multiplicity(a, b) as usize;
            }
        }
        total
    }

    /// Every edge copy as an endpoint pair (loops as `(a, a)`).
    pub fn edge_list(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for a in 0..self.n {
            for _ in 0..self.loops[a] {
                out.push((a, a));
            }
            for b in a + 1..self.n {
                for _ in 0..self.multiplicity(a, b) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Forgets multiplicities and loops.
    pub fn underlying(&self) -> SimpleGraph {
        let mut g = SimpleGraph::empty(self.n).expect("vertex cap checked at construction");
        for a in 0..self.n {
            for b in a + 1..self.n {
                if self.multiplicity(a, b) > 0 {
                    g.add_edge(a, b).expect("in range");
                }
            }
        }
        g
    }

    pub fn component_count(&self) -> usize {
        self.underlying().component_count()
    }

    /// Weight matrix with loop counts on the diagonal.
    pub(crate) fn weight_matrix(&self) -> Vec<u32> {
        let mut w = self.mult.clone();
        for a in 0..self.n {
            w[a * self.n + a] = self.loops[a];
        }
        w
    }
}

impl fmt::Debug for MultiGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiGraph(n={}, edges={:?})", self.n, self.edge_list())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k3() -> SimpleGraph {
        complete(3).unwrap()
    }

    #[test]
    fn named_constructors() {
        let g = k3();
        assert_eq!((g.n(), g.edge_count()), (3, 3));
        let e = SimpleGraph::empty(4).unwrap();
        assert_eq!((e.n(), e.edge_count()), (4, 0));
        let c4 = complete_bipartite(2, 2).unwrap();
        let edges: Vec<_> = c4.edges().iter().map(|e| (e.u(), e.v())).collect();
        assert_eq!(edges, vec![(0, 2), (0, 3), (1, 2), (1, 3)]);
        assert!(matches!(
            complete(33),
            Err(Error::Capacity { got: 33, .. })
        ));
        assert!(matches!(
            complete_bipartite(20, 13),
            Err(Error::Capacity { .. })
        ));
        assert_eq!(path(3).unwrap().edge_count(), 2);
        assert_eq!(cycle(5).unwrap().edge_count(), 5);
        assert!(cycle(2).is_err());
    }

    #[test]
    fn parse_names() {
        assert_eq!(NamedGraph::parse("K4").unwrap(), NamedGraph::Complete(4));
        assert_eq!(
            NamedGraph::parse("k3,3").unwrap(),
            NamedGraph::CompleteBipartite(3, 3)
        );
        assert_eq!(NamedGraph::parse("p5").unwrap(), NamedGraph::Path(5));
        assert_eq!(NamedGraph::parse("C6").unwrap(), NamedGraph::Cycle(6));
        assert_eq!(NamedGraph::parse("E2").unwrap(), NamedGraph::Empty(2));
        for bad in ["", "X3", "K", "K3,", "Kx", "K-1"] {
            assert!(matches!(NamedGraph::parse(bad), Err(Error::UnknownGraph(_))), "{bad}");
        }
    }

    #[test]
    fn merge_examples() {
        let g = k3();
        let e = Edge::new(0, 1).unwrap();
        let d = g.merge_edge(e, MergeRule::SymmetricDifference).unwrap();
        assert_eq!((d.n(), d.edge_count()), (2, 0));
        let i = g.merge_edge(e, MergeRule::Intersection).unwrap();
        assert_eq!((i.n(), i.edge_count()), (2, 1));
        let z = g.merge_edge(e, MergeRule::Isolate).unwrap();
        assert_eq!((z.n(), z.edge_count()), (2, 0));

        // path u-v-t with u=0, v=1, t=2
        let p = path(3).unwrap();
        let d = p.merge_edge(Edge::new(0, 1).unwrap(), MergeRule::SymmetricDifference).unwrap();
        assert_eq!(d.n(), 2);
        assert!(d.has_edge(0, 1)); // t -> 0, w -> 1

        let missing = Edge::new(0, 2).unwrap();
        assert_eq!(
            p.merge_edge(missing, MergeRule::Union),
            Err(Error::InvalidEdge { u: 0, v: 2 })
        );
    }

    #[test]
    fn merge_places_new_vertex_last() {
        // star centered at 2 plus edge 0-4; merge (1,2)
        let g = SimpleGraph::from_edges(5, &[(2, 0), (2, 1), (2, 3), (2, 4), (0, 4)]).unwrap();
        let m = g.merge_edge(Edge::new(1, 2).unwrap(), MergeRule::Union).unwrap();
        // survivors 0,3,4 -> 0,1,2; w = 3
        assert_eq!(m.n(), 4);
        assert_eq!(m.neighbors(3), 0b0111);
        assert!(m.has_edge(0, 2));
    }

    #[test]
    fn subset_components() {
        let g = k3();
        let es = g.edges();
        assert_eq!(components_of_subset(&g, &[]), 3);
        assert_eq!(components_of_subset(&g, &es[..1]), 2);
        assert_eq!(components_of_subset(&g, &es), 1);
    }

    #[test]
    fn graph6_examples() {
        assert_eq!(parse_graph6("Bw").unwrap(), k3());
        assert_eq!(parse_graph6("A?").unwrap(), SimpleGraph::empty(2).unwrap());
        assert_eq!(parse_graph6("A_").unwrap(), complete(2).unwrap());
        assert_eq!(parse_graph6("?").unwrap(), SimpleGraph::empty(0).unwrap());
        assert_eq!(emit_graph6(&k3()), "Bw");
        assert_eq!(emit_graph6(&complete(32).unwrap()).len(), 1 + 83);
    }

    #[test]
    fn graph6_errors() {
        assert!(matches!(parse_graph6(""), Err(Error::Parse { offset: 0, .. })));
        assert!(matches!(parse_graph6("Bx"), Err(Error::Parse { offset: 1, .. })));
        assert!(matches!(parse_graph6("B"), Err(Error::Parse { offset: 1, .. })));
        assert!(matches!(parse_graph6("Bww"), Err(Error::Parse { offset: 2, .. })));
        assert!(matches!(parse_graph6("B\u{1}"), Err(Error::Parse { offset: 1, .. })));
        assert!(matches!(parse_graph6("~?@?"), Err(Error::Parse { offset: 0, .. })));
        // 33 vertices
        let too_big = format!("{}{}", (33u8 + 63) as char, "?".repeat(88));
        assert!(matches!(parse_graph6(&too_big), Err(Error::Parse { offset: 0, .. })));
    }

    #[test]
    fn graph6_lines_report_global_offset() {
        let gs = parse_graph6_lines("Bw\n\nA_\r\n").unwrap();
        assert_eq!(gs.len(), 2);
        match parse_graph6_lines("Bw\nBx\n") {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 4),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_labeled_graphs(2).unwrap().count(), 2);
        assert_eq!(enumerate_labeled_graphs(3).unwrap().count(), 8);
        assert_eq!(enumerate_labeled_graphs(4).unwrap().count(), 64);
        let distinct: std::collections::HashSet<_> = enumerate_labeled_graphs(4).unwrap().collect();
        assert_eq!(distinct.len(), 64);
        assert!(enumerate_labeled_graphs(7).is_err());
    }

    #[test]
    fn multigraph_basics() {
        let mut m = MultiGraph::new(2).unwrap();
        m.add_edge(0, 1).unwrap();
        m.add_edge(1, 0).unwrap();
        m.add_edge(1, 1).unwrap();
        assert_eq!(m.edge_count(), 3);
        assert_eq!(m.multiplicity(0, 1), 2);
        assert_eq!(m.underlying(), complete(2).unwrap());
        assert_eq!(m.edge_list(), vec![(0, 1), (0, 1), (1, 1)]);
    }
}
