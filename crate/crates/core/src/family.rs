//! The shared edge recursion `f(G) = f(G - e) - f(G ∘ e)` for the matching,
//! chromatic, adjoint and co-adjoint polynomials, and the partition-sum
//! construction of exponential-type polynomials from a graph function `b`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::canon::{CanonKey, MAX_CANON_VERTICES};
use crate::error::{Error, Result};
use crate::graph::{Edge, MergeRule, SimpleGraph, MAX_VERTICES};
use crate::poly::{BiPoly, IntPoly};

/// Largest vertex count for [`f_b_construct`].
pub const MAX_PARTITION_VERTICES: usize = 10;
/// Largest vertex count for [`exp_type_check`].
pub const MAX_EXP_TYPE_VERTICES: usize = 7;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyKind {
    Matching,
    Chromatic,
    Adjoint,
    CoAdjoint,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 4] = [
        FamilyKind::Matching,
        FamilyKind::Chromatic,
        FamilyKind::Adjoint,
        FamilyKind::CoAdjoint,
    ];

    pub fn merge_rule(self) -> MergeRule {
        match self {
            FamilyKind::Matching => MergeRule::Isolate,
            FamilyKind::Chromatic => MergeRule::Union,
            FamilyKind::Adjoint => MergeRule::Intersection,
            FamilyKind::CoAdjoint => MergeRule::SymmetricDifference,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::Matching => "matching",
            FamilyKind::Chromatic => "chromatic",
            FamilyKind::Adjoint => "adjoint",
            FamilyKind::CoAdjoint => "coadjoint",
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "matching" => Ok(FamilyKind::Matching),
            "chromatic" => Ok(FamilyKind::Chromatic),
            "adjoint" => Ok(FamilyKind::Adjoint),
            "coadjoint" | "co-adjoint" => Ok(FamilyKind::CoAdjoint),
            other => Err(Error::Domain(format!("unknown polynomial kind {other:?}"))),
        }
    }
}

/// Memo key: the canonical form where canonical labeling is affordable, the
/// labeled graph itself otherwise.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
enum GraphKey {
    Canon(CanonKey),
    Labeled(SimpleGraph),
}

fn graph_key(g: &SimpleGraph) -> GraphKey {
    if g.n() <= MAX_CANON_VERTICES {
        GraphKey::Canon(g.canonical_key().expect("within canonical cap"))
    } else {
        GraphKey::Labeled(*g)
    }
}

/// Recursion driver with an isomorphism-keyed memo shared across calls.
///
/// The memo is safe to share between threads; concurrent writers for the
/// same key always store equal values.
#[derive(Debug)]
pub struct FamilyEngine {
    memo: RwLock<HashMap<(GraphKey, FamilyKind), IntPoly>>,
    split_components: bool,
}

impl Default for FamilyEngine {
    fn default() -> Self {
        Self::new()
    }
}

impl FamilyEngine {
    pub fn new() -> Self {
        FamilyEngine {
            memo: RwLock::new(HashMap::new()),
            split_components: true,
        }
    }

    /// Disables the product-over-components shortcut, leaving the bare
    /// recursion (still memoized).
    pub fn without_component_split() -> Self {
        FamilyEngine {
            split_components: false,
            ..Self::new()
        }
    }

    pub fn memo_len(&self) -> usize {
        self.memo.read().expect("memo lock").len()
    }

    pub fn poly(&self, g: &SimpleGraph, kind: FamilyKind) -> Result<IntPoly> {
        if g.n() > MAX_VERTICES {
            return Err(Error::capacity("vertex count", g.n(), MAX_VERTICES));
        }
        Ok(self.compute(g, kind))
    }

    fn compute(&self, g: &SimpleGraph, kind: FamilyKind) -> IntPoly {
        let Some(e) = g.first_edge() else {
            return IntPoly::monomial(g.n());
        };
        if self.split_components {
            let comps = g.components();
            if comps.len() > 1 {
                return comps.iter().fold(IntPoly::one(), |acc, &mask| {
                    let part = g.induced(mask);
                    &acc * &self.compute(&part, kind)
                });
            }
        }
        let key = (graph_key(g), kind);
        if let Some(hit) = self.memo.read().expect("memo lock").get(&key) {
            return hit.clone();
        }
        let deleted = g.remove_edge(e).expect("edge taken from graph");
        let merged = g.merge_edge(e, kind.merge_rule()).expect("edge taken from graph");
        let value = &self.compute(&deleted, kind) - &self.compute(&merged, kind);
        self.memo
            .write()
            .expect("memo lock")
            .insert(key, value.clone());
        value
    }
}

fn shared_engine() -> &'static FamilyEngine {
    static ENGINE: OnceLock<FamilyEngine> = OnceLock::new();
    ENGINE.get_or_init(FamilyEngine::new)
}

/// The family polynomial of `g`, memoized in a process-wide engine.
///
/// The recursion always expands the lexicographically smallest edge. The
/// edgeless graph on `n` vertices gives `x^n`; the graph with no vertices
/// gives `1`.
pub fn family_poly(g: &SimpleGraph, kind: FamilyKind) -> Result<IntPoly> {
    shared_engine().poly(g, kind)
}

/// Unmemoized recursion where `choose` picks which edge of the current graph
/// (given in lexicographic order) to expand next.
pub fn family_poly_with_chooser(
    g: &SimpleGraph,
    kind: FamilyKind,
    choose: &mut dyn FnMut(&[Edge]) -> usize,
) -> IntPoly {
    let edges = g.edges();
    if edges.is_empty() {
        return IntPoly::monomial(g.n());
    }
    let e = edges[choose(&edges) % edges.len()];
    let deleted = g.remove_edge(e).expect("edge taken from graph");
    let merged = g.merge_edge(e, kind.merge_rule()).expect("edge taken from graph");
    &family_poly_with_chooser(&deleted, kind, choose) - &family_poly_with_chooser(&merged, kind, choose)
}

/// Coefficient of `x^1` in the family polynomial of a connected graph.
pub fn b_of(kind: FamilyKind, g: &SimpleGraph) -> Result<BigInt> {
    if !g.is_connected() {
        return Err(Error::Domain(format!(
            "b is defined on connected graphs; got {} components on {} vertices",
            g.component_count(),
            g.n()
        )));
    }
    Ok(family_poly(g, kind)?.coeff(1))
}

/// A graph function `b`, given by explicit values on isomorphism classes with
/// an optional family fallback for unlisted graphs.
#[derive(Debug, Clone, Default)]
pub struct BFunction {
    values: HashMap<CanonKey, BigInt>,
    fallback: Option<FamilyKind>,
}

impl BFunction {
    /// Explicit table only; unlisted graphs map to zero.
    pub fn new() -> Self {
        Self::default()
    }

    /// `b(H)` = coefficient of `x^1` in the family polynomial of `H`, for
    /// every `H` (disconnected graphs included).
    pub fn from_family(kind: FamilyKind) -> Self {
        BFunction {
            values: HashMap::new(),
            fallback: Some(kind),
        }
    }

    /// `b(K1) = 1`, `b(K2) = -1`, zero elsewhere.
    pub fn matching() -> Self {
        let mut b = Self::new();
        b.insert(&crate::graph::complete(1).expect("K1"), BigInt::one())
            .expect("small");
        b.insert(&crate::graph::complete(2).expect("K2"), -BigInt::one())
            .expect("small");
        b
    }

    /// `b(K_n) = (-1)^(n-1)` on complete graphs, zero elsewhere.
    pub fn adjoint() -> Self {
        let mut b = Self::new();
        for n in 1..=MAX_CANON_VERTICES {
            let sign = if n % 2 == 1 { BigInt::one() } else { -BigInt::one() };
            b.insert(&crate::graph::complete(n).expect("small"), sign)
                .expect("small");
        }
        b
    }

    pub fn insert(&mut self, g: &SimpleGraph, value: BigInt) -> Result<()> {
        self.values.insert(g.canonical_key()?, value);
        Ok(())
    }

    pub fn value(&self, g: &SimpleGraph) -> Result<BigInt> {
        if let Some(v) = self.values.get(&g.canonical_key()?) {
            return Ok(v.clone());
        }
        match self.fallback {
            Some(kind) => Ok(family_poly(g, kind)?.coeff(1)),
            None => Ok(BigInt::zero()),
        }
    }

    fn defines_single_vertex(&self) -> bool {
        self.fallback.is_some()
            || self
                .values
                .contains_key(&crate::graph::complete(1).and_then(|g| g.canonical_key()).expect("K1"))
    }
}

/// `Σ_k a_k x^k`, where `a_k` sums `b(G[S_1])···b(G[S_k])` over the
/// partitions of `V(G)` into `k` blocks.
///
/// The sum is organized by the block containing the lowest remaining vertex:
/// `A(M) = x · Σ_{S ⊆ M, min M ∈ S} b(G[S]) · A(M \ S)`, `A(∅) = 1`, which
/// visits every set partition exactly once.
pub fn f_b_construct(g: &SimpleGraph, b: &BFunction) -> Result<IntPoly> {
    let n = g.n();
    if n > MAX_PARTITION_VERTICES {
        return Err(Error::capacity(
            "partition enumeration vertex count",
            n,
            MAX_PARTITION_VERTICES,
        ));
    }
    if !b.defines_single_vertex() {
        return Err(Error::Domain("b must be defined on the single-vertex graph".into()));
    }
    let full = (1usize << n) - 1;
    let mut by_class: HashMap<CanonKey, BigInt> = HashMap::new();
    let mut block_value = vec![BigInt::zero(); full + 1];
    for (mask, slot) in block_value.iter_mut().enumerate().skip(1) {
        let sub = g.induced(mask as u32);
        let key = sub.canonical_key()?;
        let v = match by_class.get(&key) {
            Some(v) => v.clone(),
            None => {
                let v = b.value(&sub)?;
                by_class.insert(key, v.clone());
                v
            }
        };
        *slot = v;
    }
    let x = IntPoly::monomial(1);
    let mut table: Vec<IntPoly> = vec![IntPoly::zero(); full + 1];
    table[0] = IntPoly::one();
    for mask in 1..=full {
        let low = mask & mask.wrapping_neg();
        let rest = mask & !low;
        let mut acc = IntPoly::zero();
        // every S = low ∪ T with T ⊆ rest
        let mut t = rest;
        loop {
            let block = low | t;
            if !block_value[block].is_zero() {
                let term = table[mask & !block].scale(&block_value[block]);
                acc = &acc + &term;
            }
            if t == 0 {
                break;
            }
            t = (t - 1) & rest;
        }
        table[mask] = &acc * &x;
    }
    Ok(table.swap_remove(full))
}

/// Checks `Σ_{S ⊆ V} f(G[S], x) f(G[V∖S], y) = f(G, x + y)` exactly.
pub fn exp_type_check(g: &SimpleGraph, kind: FamilyKind) -> Result<bool> {
    let n = g.n();
    if n > MAX_EXP_TYPE_VERTICES {
        return Err(Error::capacity("exponential-type check vertex count", n, MAX_EXP_TYPE_VERTICES));
    }
    let full = (1u32 << n) - 1;
    let mut lhs = BiPoly::zero();
    for s in 0..=full {
        let inside = family_poly(&g.induced(s), kind)?;
        let outside = family_poly(&g.induced(full & !s), kind)?;
        lhs = &lhs + &BiPoly::outer(&inside, &outside);
    }
    Ok(lhs == family_poly(g, kind)?.substitute_sum())
}

/// Σ_k C(n,k) p_k(x) p_{n-k}(y) for a sequence `p`.
pub fn binomial_convolution(p: &[IntPoly], n: usize) -> BiPoly {
    let row = crate::poly::binomial_row(n);
    (0..=n).fold(BiPoly::zero(), |acc, k| {
        let term = BiPoly::outer(&p[k].scale(&row[k]), &p[n - k]);
        &acc + &term
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, complete_bipartite, SimpleGraph};

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn complete_graphs_are_binomial_type() {
        let p: Vec<IntPoly> = (0..=6)
            .map(|n| family_poly(&crate::graph::complete(n).unwrap(), FamilyKind::CoAdjoint).unwrap().reflect_negate())
            .collect();
        for n in 0..=6 {
            assert_eq!(binomial_convolution(&p, n), p[n].substitute_sum(), "n = {n}");
        }
    }

    #[test]
    fn paper_examples() {
        let k4 = complete(4).unwrap();
        assert_eq!(family_poly(&k4, FamilyKind::CoAdjoint).unwrap(), p(&[0, -2, 7, -6, 1]));
        let k33 = complete_bipartite(3, 3).unwrap();
        assert_eq!(
            family_poly(&k33, FamilyKind::CoAdjoint).unwrap(),
            p(&[0, -13, 51, -66, 36, -9, 1])
        );
    }

    #[test]
    fn base_cases() {
        let e5 = SimpleGraph::empty(5).unwrap();
        for kind in FamilyKind::ALL {
            assert_eq!(family_poly(&e5, kind).unwrap(), IntPoly::monomial(5));
            assert_eq!(
                family_poly(&SimpleGraph::empty(0).unwrap(), kind).unwrap(),
                IntPoly::one()
            );
        }
    }

    #[test]
    fn triangle_in_each_family() {
        let k3 = complete(3).unwrap();
        assert_eq!(family_poly(&k3, FamilyKind::Chromatic).unwrap(), p(&[0, 2, -3, 1]));
        // m0 = 1, m1 = 3, exponent n - k: x^3 - 3x^2
        assert_eq!(family_poly(&k3, FamilyKind::Matching).unwrap(), p(&[0, 0, -3, 1]));
        // a1 = 1, a2 = 3, a3 = 1 with signs (-1)^(n-k)
        assert_eq!(family_poly(&k3, FamilyKind::Adjoint).unwrap(), p(&[0, 1, -3, 1]));
    }

    #[test]
    fn b_values() {
        assert_eq!(b_of(FamilyKind::Matching, &complete(2).unwrap()).unwrap(), BigInt::from(-1));
        assert_eq!(b_of(FamilyKind::Adjoint, &complete(4).unwrap()).unwrap(), BigInt::from(-1));
        assert_eq!(b_of(FamilyKind::CoAdjoint, &complete(4).unwrap()).unwrap(), BigInt::from(-2));
        assert!(matches!(
            b_of(FamilyKind::CoAdjoint, &SimpleGraph::empty(2).unwrap()),
            Err(Error::Domain(_))
        ));
        assert!(b_of(FamilyKind::CoAdjoint, &SimpleGraph::empty(0).unwrap()).is_err());
    }

    #[test]
    fn f_b_examples() {
        assert_eq!(f_b_construct(&complete(2).unwrap(), &BFunction::matching()).unwrap(), p(&[0, -1, 1]));
        assert_eq!(f_b_construct(&complete(3).unwrap(), &BFunction::adjoint()).unwrap(), p(&[0, 1, -3, 1]));
        let mut only_k1 = BFunction::new();
        only_k1.insert(&complete(1).unwrap(), BigInt::one()).unwrap();
        assert_eq!(
            f_b_construct(&SimpleGraph::empty(2).unwrap(), &only_k1).unwrap(),
            IntPoly::monomial(2)
        );
        assert!(matches!(
            f_b_construct(&complete(2).unwrap(), &BFunction::new()),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            f_b_construct(&complete(11).unwrap(), &BFunction::matching()),
            Err(Error::Capacity { .. })
        ));
    }

    #[test]
    fn exp_type_examples() {
        for kind in FamilyKind::ALL {
            assert!(exp_type_check(&complete(1).unwrap(), kind).unwrap());
        }
        assert!(exp_type_check(&complete(5).unwrap(), FamilyKind::CoAdjoint).unwrap());
        assert!(exp_type_check(&complete(8).unwrap(), FamilyKind::CoAdjoint).is_err());
    }

    #[test]
    fn split_matches_plain_recursion() {
        let plain = FamilyEngine::without_component_split();
        let split = FamilyEngine::new();
        for g in crate::graph::all_graphs_up_to(5).unwrap() {
            for kind in FamilyKind::ALL {
                assert_eq!(plain.poly(&g, kind).unwrap(), split.poly(&g, kind).unwrap());
            }
        }
    }

    #[test]
    fn multiplicative_over_disjoint_union() {
        let plain = FamilyEngine::without_component_split();
        let a = complete(3).unwrap();
        let b = crate::graph::path(3).unwrap();
        let union = SimpleGraph::from_edges(6, &[(0, 1), (0, 2), (1, 2), (3, 4), (4, 5)]).unwrap();
        for kind in FamilyKind::ALL {
            let lhs = plain.poly(&union, kind).unwrap();
            let rhs = &plain.poly(&a, kind).unwrap() * &plain.poly(&b, kind).unwrap();
            assert_eq!(lhs, rhs, "{kind}");
        }
    }

    #[test]
    fn kind_parsing() {
        assert_eq!("CoAdjoint".parse::<FamilyKind>().unwrap(), FamilyKind::CoAdjoint);
        assert!("tutte".parse::<FamilyKind>().is_err());
    }
}
