//! Identity suites over exhaustive graph sets and the named families.
//!
//! Each suite returns one [`CheckLine`] per identity. Graphs are evaluated
//! in parallel and collected in enumeration order, so reports are
//! reproducible.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;

use crate::analysis::{
    alternating_signs_check, eulerian_consequence_check, poly_roots, sokal_bound_check,
    sokal_minimize, ROOT_RESIDUAL_TOLERANCE,
};
use crate::error::{Error, Result};
use crate::family::{
    binomial_convolution, exp_type_check, f_b_construct, family_poly, family_poly_with_chooser, BFunction, FamilyKind,
    MAX_EXP_TYPE_VERTICES,
};
use crate::graph::{all_graphs_up_to, complete, complete_bipartite, MultiGraph, SimpleGraph, MAX_ENUMERATION_VERTICES};
use crate::oracles::{coadjoint_via_z, zigzag_numbers};
use crate::poly::IntPoly;
use crate::series::{build_f, egf_reconstruct, f_egf_coefficients, f_integrand};
use crate::tutte::{merino_check, specialize_chromatic, specialize_coadjoint, tutte_dc, tutte_subset, tutte_value, z_t_conversion_check};

/// Edge orders tried per graph in the order-independence check.
pub const RANDOM_ORDERS: usize = 20;
/// Largest vertex count for the random edge-order check.
pub const MAX_RANDOM_ORDER_VERTICES: usize = 5;
const ORDER_SEED: u64 = 0x5eed_c0ad;
/// Failing graphs listed per line.
const SHOWN_FAILURES: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Recursion,
    ExpType,
    Tutte,
    Merino,
    Eulerian,
    Sokal,
    Egf,
    All,
}

impl Suite {
    pub const EACH: [Suite; 7] = [
        Suite::Recursion,
        Suite::ExpType,
        Suite::Tutte,
        Suite::Merino,
        Suite::Eulerian,
        Suite::Sokal,
        Suite::Egf,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Recursion => "recursion",
            Suite::ExpType => "exp-type",
            Suite::Tutte => "tutte",
            Suite::Merino => "merino",
            Suite::Eulerian => "eulerian",
            Suite::Sokal => "sokal",
            Suite::Egf => "egf",
            Suite::All => "all",
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::Domain(format!("unknown check suite {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckLine {
    pub suite: &'static str,
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for CheckLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{verdict} {}/{}: {}", self.suite, self.name, self.detail)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CheckReport {
    pub lines: Vec<CheckLine>,
}

impl CheckReport {
    pub fn failures(&self) -> usize {
        self.lines.iter().filter(|l| !l.passed).count()
    }

    pub fn passed(&self) -> bool {
        self.failures() == 0
    }

    pub fn find(&self, name: &str) -> Option<&CheckLine> {
        self.lines.iter().find(|l| l.name == name)
    }

    fn push(&mut self, suite: Suite, name: &str, passed: bool, detail: String) {
        self.lines.push(CheckLine {
            suite: suite.name(),
            name: name.to_string(),
            passed,
            detail,
        });
    }

    /// Records a check over many graphs: passes when no graph fails.
    fn push_sweep(&mut self, suite: Suite, name: &str, sweep: Sweep) {
        let detail = if sweep.failed.is_empty() {
            format!("{} graphs", sweep.total)
        } else {
            let shown: Vec<&str> = sweep.failed.iter().take(SHOWN_FAILURES).map(String::as_str).collect();
            format!("{} of {} graphs failed, e.g. {}", sweep.failed.len(), sweep.total, shown.join(" "))
        };
        self.push(suite, name, sweep.failed.is_empty(), detail);
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for line in &self.lines {
            out.push_str(&line.to_string());
            out.push('\n');
        }
        out.push_str(&format!(
            "{} checks, {} passed, {} failed\n",
            self.lines.len(),
            self.lines.len() - self.failures(),
            self.failures()
        ));
        out
    }
}

struct Sweep {
    total: usize,
    /// graph6 strings of the failing graphs, in enumeration order.
    failed: Vec<String>,
}

fn sweep<F>(graphs: &[SimpleGraph], check: F) -> Result<Sweep>
where
    F: Fn(usize, &SimpleGraph) -> Result<bool> + Sync,
{
    let verdicts: Vec<Result<bool>> = graphs
        .par_iter()
        .enumerate()
        .map(|(i, g)| check(i, g))
        .collect();
    let mut failed = Vec::new();
    for (g, verdict) in graphs.iter().zip(verdicts) {
        if !verdict? {
            failed.push(g.to_graph6());
        }
    }
    Ok(Sweep {
        total: graphs.len(),
        failed,
    })
}

fn graphs_up_to(max_n: usize) -> Result<Vec<SimpleGraph>> {
    all_graphs_up_to(max_n)
}

/// Runs one suite (or all of them) over labeled graphs with at most `max_n`
/// vertices plus the fixed complete and complete bipartite cases.
pub fn run_suite(suite: Suite, max_n: usize) -> Result<CheckReport> {
    if max_n > MAX_ENUMERATION_VERTICES {
        return Err(Error::capacity("check vertex count", max_n, MAX_ENUMERATION_VERTICES));
    }
    let mut report = CheckReport::default();
    let suites: Vec<Suite> = if suite == Suite::All { Suite::EACH.to_vec() } else { vec![suite] };
    for s in suites {
        match s {
            Suite::Recursion => recursion_suite(&mut report, max_n)?,
            Suite::ExpType => exp_type_suite(&mut report, max_n)?,
            Suite::Tutte => tutte_suite(&mut report, max_n)?,
            Suite::Merino => merino_suite(&mut report)?,
            Suite::Eulerian => eulerian_suite(&mut report, max_n)?,
            Suite::Sokal => sokal_suite(&mut report, max_n)?,
            Suite::Egf => egf_suite(&mut report)?,
            Suite::All => unreachable!("expanded above"),
        }
    }
    Ok(report)
}

/// Recursion, partition function and Tutte specialization agree; the
/// recursion ignores the edge order; coefficients alternate in sign.
fn recursion_suite(report: &mut CheckReport, max_n: usize) -> Result<()> {
    let s = Suite::Recursion;
    let graphs = graphs_up_to(max_n)?;
    let three_way = sweep(&graphs, |_, g| {
        let rec = family_poly(g, FamilyKind::CoAdjoint)?;
        Ok(rec == coadjoint_via_z(g)? && rec == specialize_coadjoint(g)?)
    })?;
    report.push_sweep(s, "three-way", three_way);

    let small = graphs_up_to(max_n.min(MAX_RANDOM_ORDER_VERTICES))?;
    let orders = sweep(&small, |i, g| {
        let mut rng = StdRng::seed_from_u64(ORDER_SEED ^ i as u64);
        for kind in FamilyKind::ALL {
            let reference = family_poly(g, kind)?;
            for _ in 0..RANDOM_ORDERS {
                let mut choose = |edges: &[_]| rng.gen_range(0..edges.len());
                if family_poly_with_chooser(g, kind, &mut choose) != reference {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    })?;
    report.push_sweep(s, "edge-order", orders);

    let signs = sweep(&graphs, |_, g| {
        Ok(alternating_signs_check(&family_poly(g, FamilyKind::CoAdjoint)?, g.n()))
    })?;
    report.push_sweep(s, "alternating-signs", signs);
    Ok(())
}

/// The binomial-type identity for every family, and reconstruction from
/// the `x^1` coefficients.
fn exp_type_suite(report: &mut CheckReport, max_n: usize) -> Result<()> {
    let s = Suite::ExpType;
    let graphs = graphs_up_to(max_n.min(MAX_EXP_TYPE_VERTICES))?;
    for kind in FamilyKind::ALL {
        let identity = sweep(&graphs, |_, g| exp_type_check(g, kind))?;
        report.push_sweep(s, &format!("identity-{}", kind.name()), identity);
        let b = BFunction::from_family(kind);
        let rebuilt = sweep(&graphs, |_, g| Ok(f_b_construct(g, &b)? == family_poly(g, kind)?))?;
        report.push_sweep(s, &format!("reconstruct-{}", kind.name()), rebuilt);
    }
    let disconnected: Vec<SimpleGraph> = graphs.iter().filter(|g| g.n() > 1 && !g.is_connected()).copied().collect();
    let vanishing = sweep(&disconnected, |_, g| {
        for kind in FamilyKind::ALL {
            if !family_poly(g, kind)?.coeff(1).is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    })?;
    report.push_sweep(s, "disconnected-x1-zero", vanishing);

    // p_n(x) = (-1)^n P(K_n, -x) is of binomial type
    let p: Vec<IntPoly> = (0..=8)
        .map(|n| Ok(family_poly(&complete(n)?, FamilyKind::CoAdjoint)?.reflect_negate()))
        .collect::<Result<_>>()?;
    let ok = (0..=8).all(|n| binomial_convolution(&p, n) == p[n].substitute_sum());
    report.push(s, "binomial-type", ok, "complete graphs, n = 0..8".into());
    Ok(())
}

fn tutte_suite(report: &mut CheckReport, max_n: usize) -> Result<()> {
    let s = Suite::Tutte;
    let graphs = graphs_up_to(max_n)?;
    let dc = sweep(&graphs, |_, g| {
        let m = MultiGraph::from_simple(g);
        Ok(tutte_dc(&m)? == tutte_subset(&m)?)
    })?;
    report.push_sweep(s, "dc-vs-subsets", dc);

    let chromatic = sweep(&graphs, |_, g| Ok(specialize_chromatic(g)? == family_poly(g, FamilyKind::Chromatic)?))?;
    report.push_sweep(s, "chromatic-specialization", chromatic);

    let q = |a: i64, b: i64| BigRational::new(a.into(), b.into());
    let points = [(q(3, 1), q(2, 1)), (q(2, 1), q(3, 1)), (q(-1, 2), q(5, 3)), (q(7, 4), q(-2, 1))];
    let conversion = sweep(&graphs, |_, g| z_t_conversion_check(g, &points))?;
    report.push_sweep(s, "z-t-conversion", conversion);

    // T(K_n; 1, -1) = E_{n-1}
    let zigzag = zigzag_numbers(7)?;
    let mut mismatches = Vec::new();
    for n in 1..=8 {
        let t = tutte_value(&complete(n)?, 1, -1)?;
        if t != BigInt::from(zigzag[n - 1]) {
            mismatches.push(format!("K{n}: {t}"));
        }
    }
    let detail = if mismatches.is_empty() {
        format!("T(K_n,1,-1) = {:?} for n = 1..8", zigzag)
    } else {
        mismatches.join(", ")
    };
    report.push(s, "complete-zigzag", mismatches.is_empty(), detail);
    Ok(())
}

/// `|c_1(P(G))|` against values of `P` at `-1`, and the edge identity
/// `T(G; 1, -1) = T(G - {u, v}; 2, -1)` on complete and complete bipartite
/// graphs.
fn merino_suite(report: &mut CheckReport) -> Result<()> {
    let s = Suite::Merino;
    let minus_one = -BigInt::one();
    let coadj = |g: &SimpleGraph| family_poly(g, FamilyKind::CoAdjoint);

    let mut ok = true;
    let mut seen = Vec::new();
    for n in 1..=6 {
        let at = coadj(&complete(n)?)?.eval_int(&minus_one);
        let signed = if n % 2 == 0 { at } else { -at };
        let c1 = coadj(&complete(n + 2)?)?.coeff(1).abs();
        ok &= signed == c1;
        seen.push(signed.to_string());
    }
    report.push(s, "complete-at-minus-one", ok, format!("(-1)^n P(K_n,-1) = {}", seen.join(",")));

    let mut ok = true;
    let mut seen = Vec::new();
    for n in 1..=4 {
        let at = coadj(&complete_bipartite(n, n)?)?.eval_int(&minus_one);
        let c1 = coadj(&complete_bipartite(n + 1, n + 1)?)?.coeff(1).abs();
        ok &= at == c1;
        seen.push(at.to_string());
    }
    report.push(s, "bipartite-at-minus-one", ok, format!("P(K_nn,-1) = {}", seen.join(",")));

    let mut cases = Vec::new();
    for n in 2..=6 {
        cases.push((format!("K{n}"), complete(n)?));
    }
    for n in 1..=4 {
        cases.push((format!("K{n},{n}"), complete_bipartite(n, n)?));
    }
    let mut failed = Vec::new();
    let mut edges = 0;
    for (name, g) in &cases {
        for e in g.edges() {
            edges += 1;
            if !merino_check(g, e)? {
                failed.push(format!("{name} {e}"));
            }
        }
    }
    let detail = if failed.is_empty() {
        format!("{edges} edges")
    } else {
        format!("failed on {}", failed.join(", "))
    };
    report.push(s, "edge-identity", failed.is_empty(), detail);
    Ok(())
}

fn eulerian_suite(report: &mut CheckReport, max_n: usize) -> Result<()> {
    let graphs = graphs_up_to(max_n)?;
    let parity = sweep(&graphs, |_, g| eulerian_consequence_check(g))?;
    report.push_sweep(Suite::Eulerian, "parity-at-one", parity);
    Ok(())
}

/// Polynomials of `K_n` (n ≤ 8) and `K_{n,n}` (n ≤ 5).
pub fn table_graphs() -> Result<Vec<(String, SimpleGraph)>> {
    let mut out = Vec::new();
    for n in 1..=8 {
        out.push((format!("K{n}"), complete(n)?));
    }
    for n in 1..=5 {
        out.push((format!("K{n},{n}"), complete_bipartite(n, n)?));
    }
    Ok(out)
}

fn sokal_suite(report: &mut CheckReport, max_n: usize) -> Result<()> {
    let s = Suite::Sokal;
    let k = sokal_minimize(1e-6)?;
    let ok = (k.value - 7.963907).abs() < 1e-5;
    report.push(s, "constant", ok, format!("K = {:.7} at a = {:.6}", k.value, k.minimizer));

    let graphs: Vec<SimpleGraph> = graphs_up_to(max_n)?.into_iter().filter(|g| g.edge_count() > 0).collect();
    let bound = sweep(&graphs, |_, g| sokal_bound_check(g))?;
    report.push_sweep(s, "bound-exhaustive", bound);

    let named = table_graphs()?;
    let mut failed = Vec::new();
    let mut worst: f64 = 0.0;
    for (name, g) in named.iter().filter(|(_, g)| g.edge_count() > 0) {
        if !sokal_bound_check(g)? {
            failed.push(name.clone());
        }
        let roots = poly_roots(&family_poly(g, FamilyKind::CoAdjoint)?)?;
        worst = worst.max(roots.max_residual());
    }
    let detail = if failed.is_empty() {
        format!("{} graphs", named.len() - 1)
    } else {
        format!("failed on {}", failed.join(", "))
    };
    report.push(s, "bound-named", failed.is_empty(), detail);
    report.push(
        s,
        "root-residuals",
        worst < ROOT_RESIDUAL_TOLERANCE,
        format!("max residual {worst:.3e}"),
    );
    Ok(())
}

fn egf_suite(report: &mut CheckReport) -> Result<()> {
    let s = Suite::Egf;
    // build_f itself fails if the integral and logarithm forms differ
    let f = build_f(12)?;
    let derivative_ok = f.derivative() == f_integrand(11)?;
    report.push(s, "f-forms", derivative_ok, "log and integral forms agree to order 12".into());

    let zigzag = zigzag_numbers(11)?;
    let scaled = f_egf_coefficients(12)?;
    let ok = (1..=12).all(|n| scaled[n] == BigRational::from_integer(BigInt::from(zigzag[n - 1])));
    report.push(s, "f-zigzag", ok, "n! [z^n] F = E_{n-1} for n = 1..12".into());

    let p = egf_reconstruct(8)?;
    let mut ok = p[0] == IntPoly::one();
    for (n, pn) in p.iter().enumerate().skip(1) {
        ok &= *pn == family_poly(&complete(n)?, FamilyKind::CoAdjoint)?.reflect_negate();
    }
    report.push(s, "reconstruct", ok, "n! [z^n] exp(xF) = (-1)^n P(K_n,-x) for n = 0..8".into());
    Ok(())
}
