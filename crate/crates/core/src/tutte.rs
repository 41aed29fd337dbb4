//! Tutte polynomial by subset expansion and by deletion–contraction, and
//! the specializations built on it.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::canon::{self, MultiKey, MAX_CANON_VERTICES};
use crate::error::{Error, Result};
use crate::graph::{Edge, MultiGraph, SimpleGraph};
use crate::oracles::{partition_function_uniform, subset_table};
use crate::poly::{binomial_row, BiPoly, IntPoly};

pub type TuttePoly = BiPoly;

/// `T(G; x, y) = Σ_A (x-1)^{k(A)-k(E)} (y-1)^{k(A)+|A|-|V|}`, by
/// enumerating edge subsets (multiplicities and loops counted as edges).
pub fn tutte_subset(g: &MultiGraph) -> Result<TuttePoly> {
    let n = g.n();
    let table = subset_table(n, &g.edge_list())?;
    let k_full = g.component_count();
    // shifted[r][s] counts subsets with rank deficit r and nullity s
    let m = g.edge_count();
    let mut shifted = vec![vec![0u64; m + 1]; n + 1];
    for (k, row) in table.iter().enumerate() {
        for (size, &count) in row.iter().enumerate() {
            if count == 0 {
                continue;
            }
            let r = k - k_full;
            let s = k + size - n;
            shifted[r][s] += count;
        }
    }
    let mut out = BiPoly::zero();
    for (r, row) in shifted.iter().enumerate() {
        for (s, &count) in row.iter().enumerate() {
            if count == 0 {
                continue;
            }
            out = &out + &shifted_monomial(r, s).scale(&BigInt::from(count));
        }
    }
    Ok(out)
}

/// `(x-1)^r (y-1)^s`.
fn shifted_monomial(r: usize, s: usize) -> BiPoly {
    let sign = |k: usize, total: usize| if (total - k).is_multiple_of(2) { BigInt::one() } else { -BigInt::one() };
    let xr: Vec<BigInt> = binomial_row(r)
        .into_iter()
        .enumerate()
        .map(|(i, c)| c * sign(i, r))
        .collect();
    let ys: Vec<BigInt> = binomial_row(s)
        .into_iter()
        .enumerate()
        .map(|(j, c)| c * sign(j, s))
        .collect();
    BiPoly::outer(&IntPoly::new(xr), &IntPoly::new(ys))
}

/// Loopless weighted graph used inside the recursion: `w[a*n+b]` is the
/// number of parallel edges between `a` and `b`.
#[derive(Clone)]
struct Weighted {
    n: usize,
    w: Vec<u32>,
}

impl Weighted {
    fn at(&self, a: usize, b: usize) -> u32 {
        self.w[a * self.n + b]
    }

    fn has_edges(&self) -> bool {
        self.w.iter().any(|&c| c > 0)
    }

    fn neighbor_rows(&self) -> Vec<u32> {
        (0..self.n)
            .map(|a| {
                (0..self.n)
                    .filter(|&b| self.at(a, b) > 0)
                    .fold(0u32, |acc, b| acc | (1 << b))
            })
            .collect()
    }

    fn components(&self) -> Vec<Vec<usize>> {
        let rows = self.neighbor_rows();
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            let mut stack = vec![s];
            seen[s] = true;
            let mut comp = Vec::new();
            while let Some(v) = stack.pop() {
                comp.push(v);
                for u in crate::graph::bits(rows[v]) {
                    if !seen[u] {
                        seen[u] = true;
                        stack.push(u);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    fn restrict(&self, keep: &[usize]) -> Weighted {
        let k = keep.len();
        let mut w = vec![0; k * k];
        for (i, &a) in keep.iter().enumerate() {
            for (j, &b) in keep.iter().enumerate() {
                w[i * k + j] = self.at(a, b);
            }
        }
        Weighted { n: k, w }
    }

    fn without_class(&self, a: usize, b: usize) -> Weighted {
        let mut out = self.clone();
        out.w[a * self.n + b] = 0;
        out.w[b * self.n + a] = 0;
        out
    }

    /// Whether `a` and `b` stay connected once all `a`–`b` edges are gone.
    fn class_is_bridge(&self, a: usize, b: usize) -> bool {
        let rows = self.without_class(a, b).neighbor_rows();
        let mut comp = 1u32 << a;
        loop {
            let mut next = comp;
            for v in crate::graph::bits(comp) {
                next |= rows[v];
            }
            if next == comp {
                return comp & (1 << b) == 0;
            }
            comp = next;
        }
    }

    /// Identifies `a` and `b` (the `a`–`b` class itself disappears); the
    /// merged vertex takes the last index.
    fn contract_class(&self, a: usize, b: usize) -> Weighted {
        let keep: Vec<usize> = (0..self.n).filter(|&v| v != a && v != b).collect();
        let k = keep.len() + 1;
        let mut w = vec![0; k * k];
        for (i, &u) in keep.iter().enumerate() {
            for (j, &v) in keep.iter().enumerate() {
                w[i * k + j] = self.at(u, v);
            }
            let merged = self.at(u, a) + self.at(u, b);
            w[i * k + k - 1] = merged;
            w[(k - 1) * k + i] = merged;
        }
        Weighted { n: k, w }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
enum WeightedKey {
    Canon(MultiKey),
    Labeled(usize, Vec<u32>),
}

/// `1 + y + ... + y^(m-1)`, plus `x` when `with_x`.
fn parallel_factor(m: u32, with_x: bool) -> BiPoly {
    let mut out = if with_x { BiPoly::monomial(1, 0) } else { BiPoly::zero() };
    let start = usize::from(with_x);
    for j in start..m as usize {
        out = &out + &BiPoly::monomial(0, j);
    }
    out
}

/// Deletion–contraction with a memo keyed by canonical weighted-graph form.
#[derive(Debug, Default)]
pub struct TutteEngine {
    memo: RwLock<HashMap<WeightedKey, BiPoly>>,
}

impl TutteEngine {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn tutte(&self, g: &MultiGraph) -> BiPoly {
        let loops: u32 = (0..g.n()).map(|a| g.loops(a)).sum();
        let mut w = g.weight_matrix();
        for a in 0..g.n() {
            w[a * g.n() + a] = 0;
        }
        let core = self.connected_parts(&Weighted { n: g.n(), w });
        &BiPoly::monomial(0, loops as usize) * &core
    }

    fn connected_parts(&self, g: &Weighted) -> BiPoly {
        if !g.has_edges() {
            return BiPoly::one();
        }
        g.components()
            .into_iter()
            .filter(|c| c.len() > 1)
            .fold(BiPoly::one(), |acc, comp| &acc * &self.connected(&g.restrict(&comp)))
    }

    fn connected(&self, g: &Weighted) -> BiPoly {
        let key = if g.n <= MAX_CANON_VERTICES {
            WeightedKey::Canon(canon::multi_key(g.n, &g.w).expect("within canonical cap"))
        } else {
            WeightedKey::Labeled(g.n, g.w.clone())
        };
        if let Some(hit) = self.memo.read().expect("memo lock").get(&key) {
            return hit.clone();
        }
        let mut classes = Vec::new();
        for a in 0..g.n {
            for b in a + 1..g.n {
                if g.at(a, b) > 0 {
                    classes.push((a, b));
                }
            }
        }
        let value = match classes.iter().find(|&&(a, b)| !g.class_is_bridge(a, b)) {
            Some(&(a, b)) => {
                let m = g.at(a, b);
                let deleted = self.connected_parts(&g.without_class(a, b));
                let contracted = self.connected_parts(&g.contract_class(a, b));
                &deleted + &(&parallel_factor(m, false) * &contracted)
            }
            // every class is a bridge: a tree of parallel classes
            None => classes
                .iter()
                .fold(BiPoly::one(), |acc, &(a, b)| &acc * &parallel_factor(g.at(a, b), true)),
        };
        self.memo
            .write()
            .expect("memo lock")
            .insert(key, value.clone());
        value
    }
}

fn shared_engine() -> &'static TutteEngine {
    static ENGINE: OnceLock<TutteEngine> = OnceLock::new();
    ENGINE.get_or_init(TutteEngine::new)
}

/// Tutte polynomial by deletion–contraction: loops contribute `y`, a
/// bridge `x`, and any other edge splits into deletion plus contraction.
/// Contraction keeps parallel edges; a class of `m` parallel edges is
/// handled in one step.
pub fn tutte_dc(g: &MultiGraph) -> Result<TuttePoly> {
    Ok(shared_engine().tutte(g))
}

/// `(-1)^(n-k(G)) x^k(G) T(G; 1-x, y0)` as a polynomial in `x`.
fn specialize(g: &SimpleGraph, y0: i64) -> Result<IntPoly> {
    let t = tutte_dc(&MultiGraph::from_simple(g))?;
    let n = g.n();
    let k = g.component_count();
    let in_x = t
        .eval_y(&BigInt::from(y0))
        .compose_affine(&BigInt::one(), &-BigInt::one());
    let sign = if (n - k).is_multiple_of(2) { BigInt::one() } else { -BigInt::one() };
    Ok(in_x.shift(k).scale(&sign))
}

/// The co-adjoint polynomial read off the Tutte polynomial at `y = -1`.
pub fn specialize_coadjoint(g: &SimpleGraph) -> Result<IntPoly> {
    specialize(g, -1)
}

/// The chromatic polynomial read off the Tutte polynomial at `y = 0`.
pub fn specialize_chromatic(g: &SimpleGraph) -> Result<IntPoly> {
    specialize(g, 0)
}

/// Checks `T(G; x, y) = (x-1)^{-k(E)} (y-1)^{-|V|} Z_G((x-1)(y-1), y-1)` at
/// each point, in exact arithmetic.
pub fn z_t_conversion_check(g: &SimpleGraph, points: &[(BigRational, BigRational)]) -> Result<bool> {
    let one = BigRational::one();
    for (x, y) in points {
        if *x == one || *y == one {
            return Err(Error::Domain(format!("sample point ({x}, {y}) has x = 1 or y = 1")));
        }
    }
    let t = tutte_dc(&MultiGraph::from_simple(g))?;
    let n = g.n();
    let k = g.component_count();
    for (x, y) in points {
        let xs = x - &one;
        let ys = y - &one;
        let z = partition_function_uniform(g, &ys)?;
        let rhs = z.eval(&(&xs * &ys)) / (num_traits::pow(xs.clone(), k) * num_traits::pow(ys.clone(), n));
        if t.eval(x, y) != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn tutte_value(g: &SimpleGraph, x: i64, y: i64) -> Result<BigInt> {
    let t = tutte_dc(&MultiGraph::from_simple(g))?;
    Ok(t.eval_y(&BigInt::from(y)).eval_int(&BigInt::from(x)))
}

/// Checks `T(G; 1, -1) = T(G - {u, v}; 2, -1)` for the edge `e = uv`.
pub fn merino_check(g: &SimpleGraph, e: Edge) -> Result<bool> {
    if !g.has_edge(e.u(), e.v()) {
        return Err(Error::InvalidEdge { u: e.u(), v: e.v() });
    }
    let reduced = g.remove_vertices((1 << e.u()) | (1 << e.v()));
    Ok(tutte_value(g, 1, -1)? == tutte_value(&reduced, 2, -1)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, complete_bipartite, cycle, path};

    fn multi(g: &SimpleGraph) -> MultiGraph {
        MultiGraph::from_simple(g)
    }

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn small_tutte_polynomials() {
        let k3 = multi(&complete(3).unwrap());
        assert_eq!(tutte_subset(&k3).unwrap().to_string(), "x^2+x+y");
        assert_eq!(tutte_dc(&k3).unwrap().to_string(), "x^2+x+y");
        assert_eq!(tutte_subset(&multi(&complete(2).unwrap())).unwrap().to_string(), "x");
        let mut one_loop = MultiGraph::new(1).unwrap();
        one_loop.add_edge(0, 0).unwrap();
        assert_eq!(tutte_subset(&one_loop).unwrap().to_string(), "y");
        assert_eq!(tutte_dc(&one_loop).unwrap().to_string(), "y");
        assert_eq!(tutte_dc(&multi(&path(3).unwrap())).unwrap().to_string(), "x^2");
        let k4 = multi(&complete(4).unwrap());
        assert_eq!(tutte_dc(&k4).unwrap(), tutte_subset(&k4).unwrap());
        assert_eq!(tutte_dc(&multi(&SimpleGraph::empty(3).unwrap())).unwrap(), BiPoly::one());
    }

    #[test]
    fn multigraph_recursion_matches_subsets() {
        let mut g = MultiGraph::new(4).unwrap();
        for (a, b) in [(0, 1), (0, 1), (1, 2), (2, 3), (3, 0), (2, 2), (0, 2), (0, 2), (0, 2)] {
            g.add_edge(a, b).unwrap();
        }
        assert_eq!(tutte_dc(&g).unwrap(), tutte_subset(&g).unwrap());
        // T(G; 2, 2) = 2^|E|
        let t = tutte_dc(&g).unwrap();
        assert_eq!(t.eval(&q(2), &q(2)), q(1 << g.edge_count()));
    }

    #[test]
    fn specializations() {
        assert_eq!(
            specialize_coadjoint(&complete(5).unwrap()).unwrap(),
            p(&[0, 5, -20, 25, -10, 1])
        );
        assert_eq!(
            specialize_coadjoint(&complete_bipartite(4, 4).unwrap()).unwrap(),
            p(&[0, -176, 808, -1360, 1112, -488, 120, -16, 1])
        );
        assert_eq!(
            specialize_coadjoint(&SimpleGraph::empty(2).unwrap()).unwrap(),
            IntPoly::monomial(2)
        );
        assert_eq!(specialize_chromatic(&complete(3).unwrap()).unwrap(), p(&[0, 2, -3, 1]));
        assert_eq!(
            specialize_chromatic(&SimpleGraph::empty(3).unwrap()).unwrap(),
            IntPoly::monomial(3)
        );
    }

    #[test]
    fn chromatic_of_c4_by_interpolation() {
        // values at 0..4 from brute-force colorings, Lagrange-interpolated
        let c4 = cycle(4).unwrap();
        let values: Vec<BigRational> = (0..5)
            .map(|t| q(crate::oracles::count_colorings(&c4, t).unwrap() as i64))
            .collect();
        let mut interp = crate::poly::RatPoly::zero();
        for i in 0..5i64 {
            let mut basis = crate::poly::RatPoly::constant(values[i as usize].clone());
            for j in 0..5i64 {
                if i != j {
                    let factor = crate::poly::RatPoly::new(vec![q(-j), q(1)])
                        .scale(&BigRational::new(1.into(), (i - j).into()));
                    basis = basis.mul(&factor);
                }
            }
            interp = interp.add(&basis);
        }
        let expected = interp.to_int().unwrap();
        assert_eq!(expected, p(&[0, -3, 6, -4, 1]));
        assert_eq!(specialize_chromatic(&c4).unwrap(), expected);
    }

    #[test]
    fn conversion_identity() {
        assert!(z_t_conversion_check(&complete(3).unwrap(), &[(q(3), q(2))]).unwrap());
        assert!(z_t_conversion_check(&complete(2).unwrap(), &[(q(2), q(3))]).unwrap());
        let half = BigRational::new(1.into(), 2.into());
        assert!(z_t_conversion_check(&cycle(5).unwrap(), &[(half.clone(), q(-3)), (q(-1), half)]).unwrap());
        assert!(matches!(
            z_t_conversion_check(&complete(3).unwrap(), &[(q(2), q(1))]),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn merino_examples() {
        let k4 = complete(4).unwrap();
        for e in k4.edges() {
            assert!(merino_check(&k4, e).unwrap());
        }
        assert_eq!(tutte_value(&k4, 1, -1).unwrap(), BigInt::from(2));
        assert_eq!(tutte_value(&complete(2).unwrap(), 2, -1).unwrap(), BigInt::from(2));
        let k5 = complete(5).unwrap();
        assert!(merino_check(&k5, k5.edges()[3]).unwrap());
        assert_eq!(tutte_value(&k5, 1, -1).unwrap(), BigInt::from(5));
        let p3 = path(3).unwrap();
        assert!(matches!(
            merino_check(&p3, Edge::new(0, 2).unwrap()),
            Err(Error::InvalidEdge { .. })
        ));
    }
}
