//! Brute-force computations used as independent references: the
//! edge-subset partition function, the co-adjoint coefficients read off it,
//! direct counts of colorings, matchings and clique partitions, and the
//! zigzag numbers.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::{count_components, SimpleGraph, MAX_VERTICES};
use crate::poly::{BiPoly, IntPoly, RatPoly};

/// Largest edge count for subset enumeration.
pub const MAX_SUBSET_EDGES: usize = 24;
/// Largest vertex count for the matching and clique-partition counters.
pub const MAX_COUNT_VERTICES: usize = 10;
/// Largest vertex count and color count for [`count_colorings`].
pub const MAX_COLORING_VERTICES: usize = 6;
pub const MAX_COLORS: u64 = 6;
/// Largest index for [`zigzag_numbers`].
pub const MAX_ZIGZAG: usize = 12;
/// Largest index cross-checked by scanning permutations.
pub const MAX_ZIGZAG_BRUTE: usize = 9;

/// The partition function as a polynomial in `q` for fixed edge weights.
pub type ZPoly = RatPoly;

/// Counts edge subsets `A` by `(k(A), |A|)`: `table[k][s]`.
///
/// `edges` may repeat pairs and contain loops `(a, a)`. Subsets are visited
/// in Gray-code order, so each step toggles a single edge.
pub(crate) fn subset_table(n: usize, edges: &[(usize, usize)]) -> Result<Vec<Vec<u64>>> {
    let m = edges.len();
    if m > MAX_SUBSET_EDGES {
        return Err(Error::capacity("subset enumeration edge count", m, MAX_SUBSET_EDGES));
    }
    if n > MAX_VERTICES {
        return Err(Error::capacity("vertex count", n, MAX_VERTICES));
    }
    let mut table = vec![vec![0u64; m + 1]; n + 1];
    let mut rows = [0u32; MAX_VERTICES];
    let mut copies = vec![0u8; n * n];
    let mut present = vec![false; m];
    let mut size = 0usize;
    table[n][0] += 1;
    for step in 1u64..(1u64 << m) {
        let i = step.trailing_zeros() as usize;
        let (a, b) = edges[i];
        present[i] = !present[i];
        if present[i] {
            size += 1;
        } else {
            size -= 1;
        }
        if a != b {
            let slot = &mut copies[a * n + b];
            if present[i] {
                *slot += 1;
            } else {
                *slot -= 1;
            }
            if *slot > 0 {
                rows[a] |= 1 << b;
                rows[b] |= 1 << a;
            } else {
                rows[a] &= !(1 << b);
                rows[b] &= !(1 << a);
            }
        }
        table[count_components(n, &rows[..n])][size] += 1;
    }
    Ok(table)
}

fn simple_edge_pairs(g: &SimpleGraph) -> Vec<(usize, usize)> {
    g.edges().iter().map(|e| (e.u(), e.v())).collect()
}

/// `Z_G(q, v) = Σ_{A ⊆ E} q^{k(A)} Π_{e ∈ A} v_e` with `weights[i]` the
/// weight of the `i`-th edge in [`SimpleGraph::edges`] order.
pub fn partition_function(g: &SimpleGraph, weights: &[BigRational]) -> Result<ZPoly> {
    let edges = simple_edge_pairs(g);
    if weights.len() != edges.len() {
        return Err(Error::Domain(format!(
            "{} weights for {} edges",
            weights.len(),
            edges.len()
        )));
    }
    if let Some(first) = weights.first() {
        if weights.iter().all(|w| w == first) {
            return partition_function_uniform(g, first);
        }
    } else {
        return partition_function_uniform(g, &BigRational::zero());
    }
    let m = edges.len();
    if m > MAX_SUBSET_EDGES {
        return Err(Error::capacity("subset enumeration edge count", m, MAX_SUBSET_EDGES));
    }
    let n = g.n();
    let mut coeffs = vec![BigRational::zero(); n + 1];
    for mask in 0u32..(1u32 << m) {
        let mut rows = [0u32; MAX_VERTICES];
        let mut weight = BigRational::one();
        for (i, &(a, b)) in edges.iter().enumerate() {
            if mask & (1 << i) != 0 {
                rows[a] |= 1 << b;
                rows[b] |= 1 << a;
                weight *= &weights[i];
            }
        }
        coeffs[count_components(n, &rows[..n])] += weight;
    }
    Ok(RatPoly::new(coeffs))
}

/// [`partition_function`] with every edge weight equal to `v`.
pub fn partition_function_uniform(g: &SimpleGraph, v: &BigRational) -> Result<ZPoly> {
    let table = subset_table(g.n(), &simple_edge_pairs(g))?;
    Ok(RatPoly::new(
        table
            .iter()
            .map(|row| {
                let mut power = BigRational::one();
                let mut acc = BigRational::zero();
                for &count in row {
                    acc += &power * BigRational::from_integer(BigInt::from(count));
                    power *= v;
                }
                acc
            })
            .collect(),
    ))
}

/// `Z_G(q, v)` with `v` kept symbolic: coefficient `[k][s]` of `q^k v^s`
/// counts the edge subsets with `k` components and `s` edges.
pub fn partition_function_bivariate(g: &SimpleGraph) -> Result<BiPoly> {
    let table = subset_table(g.n(), &simple_edge_pairs(g))?;
    Ok(BiPoly::new(
        table
            .into_iter()
            .map(|row| row.into_iter().map(BigInt::from).collect())
            .collect(),
    ))
}

/// The co-adjoint polynomial from the subset expansion: the coefficient of
/// `x^k` is `t_k = 2^(k-n) Σ_{k(A)=k} (-2)^{|A|}`, computed as an exact
/// rational and required to be an integer.
pub fn coadjoint_via_z(g: &SimpleGraph) -> Result<IntPoly> {
    let n = g.n();
    let table = subset_table(n, &simple_edge_pairs(g))?;
    let minus_two = BigRational::from_integer(BigInt::from(-2));
    let two = BigRational::from_integer(BigInt::from(2));
    let mut coeffs = Vec::with_capacity(n + 1);
    for (k, row) in table.iter().enumerate() {
        let mut sum = BigRational::zero();
        let mut power = BigRational::one();
        for &count in row {
            sum += &power * BigRational::from_integer(BigInt::from(count));
            power *= &minus_two;
        }
        let t_k = sum * num_traits::pow(two.clone(), k) / num_traits::pow(two.clone(), n);
        if !t_k.is_integer() {
            return Err(Error::Consistency(format!("t_{k} = {t_k} is not an integer")));
        }
        coeffs.push(t_k.to_integer());
    }
    Ok(IntPoly::new(coeffs))
}

/// Proper colorings of `g` with `q` colors, by scanning all `q^n` maps.
pub fn count_colorings(g: &SimpleGraph, q: u64) -> Result<u64> {
    let n = g.n();
    if n > MAX_COLORING_VERTICES {
        return Err(Error::capacity("coloring vertex count", n, MAX_COLORING_VERTICES));
    }
    if q > MAX_COLORS {
        return Err(Error::capacity("color count", q as usize, MAX_COLORS as usize));
    }
    let edges = g.edges();
    let mut colors = vec![0u64; n];
    let mut count = 0;
    if n == 0 {
        return Ok(1);
    }
    if q == 0 {
        return Ok(0);
    }
    loop {
        if edges.iter().all(|e| colors[e.u()] != colors[e.v()]) {
            count += 1;
        }
        let mut i = 0;
        loop {
            if i == n {
                return Ok(count);
            }
            colors[i] += 1;
            if colors[i] < q {
                break;
            }
            colors[i] = 0;
            i += 1;
        }
    }
}

/// `m_k`, the number of `k`-edge matchings, for `k = 0..` (trailing zeros
/// dropped; `m_0 = 1`).
pub fn count_matchings(g: &SimpleGraph) -> Result<Vec<u64>> {
    let n = g.n();
    if n > MAX_COUNT_VERTICES {
        return Err(Error::capacity("matching count vertex count", n, MAX_COUNT_VERTICES));
    }
    fn walk(g: &SimpleGraph, free: u32, size: usize, counts: &mut Vec<u64>) {
        if free == 0 {
            counts[size] += 1;
            return;
        }
        let v = free.trailing_zeros() as usize;
        let rest = free & !(1 << v);
        walk(g, rest, size, counts);
        let mut partners = g.neighbors(v) & rest;
        while partners != 0 {
            let u = partners.trailing_zeros();
            partners &= partners - 1;
            walk(g, rest & !(1 << u), size + 1, counts);
        }
    }
    let mut counts = vec![0u64; n / 2 + 1];
    let all = if n == 0 { 0 } else { (1u32 << n) - 1 };
    walk(g, all, 0, &mut counts);
    while counts.len() > 1 && counts.last() == Some(&0) {
        counts.pop();
    }
    Ok(counts)
}

/// `a_k`, the number of partitions of `V(g)` into `k` cliques, indexed
/// `0..=n`. Partitions are generated block by block in restricted-growth
/// order, keeping a vertex in a block only if it is adjacent to every
/// member.
pub fn count_clique_partitions(g: &SimpleGraph) -> Result<Vec<u64>> {
    let n = g.n();
    if n > MAX_COUNT_VERTICES {
        return Err(Error::capacity("clique partition vertex count", n, MAX_COUNT_VERTICES));
    }
    fn place(g: &SimpleGraph, v: usize, blocks: &mut Vec<u32>, counts: &mut [u64]) {
        if v == g.n() {
            counts[blocks.len()] += 1;
            return;
        }
        for i in 0..blocks.len() {
            if g.neighbors(v) & blocks[i] == blocks[i] {
                blocks[i] |= 1 << v;
                place(g, v + 1, blocks, counts);
                blocks[i] &= !(1 << v);
            }
        }
        blocks.push(1 << v);
        place(g, v + 1, blocks, counts);
        blocks.pop();
    }
    let mut counts = vec![0u64; n + 1];
    place(g, 0, &mut Vec::new(), &mut counts);
    Ok(counts)
}

/// Euler zigzag numbers `E_0..=E_max`: the number of alternating
/// permutations of `{1..m}`. Computed with the Seidel–Entringer triangle and,
/// up to [`MAX_ZIGZAG_BRUTE`], cross-checked by scanning permutations.
pub fn zigzag_numbers(max_n: usize) -> Result<Vec<u64>> {
    if max_n > MAX_ZIGZAG {
        return Err(Error::capacity("zigzag index", max_n, MAX_ZIGZAG));
    }
    let triangle = entringer_diagonal(max_n);
    for m in 0..=max_n.min(MAX_ZIGZAG_BRUTE) {
        let scanned = count_alternating_permutations(m);
        if scanned != triangle[m] {
            return Err(Error::Consistency(format!(
                "E_{m}: triangle gives {}, permutation scan gives {scanned}",
                triangle[m]
            )));
        }
    }
    Ok(triangle)
}

/// Boustrophedon: `T(0,0) = 1`, `T(n,0) = 0`, `T(n,k) = T(n,k-1) + T(n-1,n-k)`;
/// `E_n = T(n,n)`.
fn entringer_diagonal(max_n: usize) -> Vec<u64> {
    let mut prev = vec![1u64];
    let mut out = vec![1u64];
    for n in 1..=max_n {
        let mut row = vec![0u64; n + 1];
        for k in 1..=n {
            row[k] = row[k - 1] + prev[n - k];
        }
        out.push(row[n]);
        prev = row;
    }
    out
}

/// Permutations `a_1 < a_2 > a_3 < ...` of `{1..m}`, by visiting all `m!`.
pub(crate) fn count_alternating_permutations(m: usize) -> u64 {
    fn is_up_down(p: &[usize]) -> bool {
        p.windows(2)
            .enumerate()
            .all(|(i, w)| if i % 2 == 0 { w[0] < w[1] } else { w[0] > w[1] })
    }
    // Heap's algorithm
    let mut p: Vec<usize> = (1..=m).collect();
    let mut c = vec![0usize; m];
    let mut count = u64::from(is_up_down(&p));
    let mut i = 0;
    while i < m {
        if c[i] < i {
            if i % 2 == 0 {
                p.swap(0, i);
            } else {
                p.swap(c[i], i);
            }
            count += u64::from(is_up_down(&p));
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    count
}
