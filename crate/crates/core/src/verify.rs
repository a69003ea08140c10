//! Theorem-verification harness: one checker per claimed result, each
//! producing a machine-readable report with a re-checkable
//! counterexample payload on failure.
//!
//! Checkers never weaken a claim to fit the budget: anything that cannot
//! be enumerated within the configured limits comes back as a `refused`
//! verdict stating what was skipped, and the `scope` field always says
//! whether a check ran exhaustively or on a sample.

use std::collections::BTreeMap;
use std::time::Instant;

use serde::Serialize;

use crate::bitset::VertexSet;
use crate::combin::{binomial, binomial_capped};
use crate::constructive::{construct_dense_seed, construct_ore_seed, dense_degree_requirement};
use crate::error::{invalid, Error, Result};
use crate::generators;
use crate::graph::Graph;
use crate::oracle::{
    enumerate_graphs, enumeration_size, graph_at_rank, min_contagious, scan_seeds, SearchConfig,
};
use crate::percolation::{closure, percolate, percolation_step};
use crate::rng::{derive_seed, SplitMix64};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TheoremId {
    MinDegree,
    TightnessExample7,
    Speed,
    StopLemma,
    AlmostThere,
    Mkk,
    Mnn,
    Mk2,
    StarCounterexample,
    OreTheorem,
    OreLemmas,
}

impl TheoremId {
    pub fn as_str(&self) -> &'static str {
        match self {
            TheoremId::MinDegree => "min_degree",
            TheoremId::TightnessExample7 => "tightness_example7",
            TheoremId::Speed => "speed",
            TheoremId::StopLemma => "stop_lemma",
            TheoremId::AlmostThere => "almost_there",
            TheoremId::Mkk => "mkk",
            TheoremId::Mnn => "mnn",
            TheoremId::Mk2 => "mk2",
            TheoremId::StarCounterexample => "star_counterexample",
            TheoremId::OreTheorem => "ore_theorem",
            TheoremId::OreLemmas => "ore_lemmas",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Verified,
    Counterexample,
    Refused,
}

/// Everything needed to independently re-check a failure: rebuild the
/// graph from `graph_edges`, percolate `seed` at threshold `r`, and
/// compare against `observed`.
#[derive(Clone, Debug, Serialize)]
pub struct Counterexample {
    pub n: usize,
    pub r: usize,
    pub graph_edges: Vec<(usize, usize)>,
    pub seed: Vec<usize>,
    pub observed: String,
}

fn ce(g: &Graph, r: usize, seed: &VertexSet, observed: String) -> Counterexample {
    Counterexample {
        n: g.n(),
        r,
        graph_edges: g.edges(),
        seed: seed.to_vec(),
        observed,
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct WorkCounters {
    pub graphs: u64,
    pub seeds: u64,
    pub rounds: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct TheoremReport {
    pub theorem_id: TheoremId,
    pub params: BTreeMap<String, u64>,
    pub verdict: Verdict,
    pub counterexample: Option<Counterexample>,
    pub work: WorkCounters,
    pub elapsed_ms: u64,
    /// Whether checks ran exhaustively or sampled, and any deliberate
    /// scope restriction.
    pub scope: String,
    /// Observed quantities worth reporting (attained maxima, exact m
    /// values, enumeration counts).
    pub stats: BTreeMap<String, u64>,
}

impl TheoremReport {
    pub fn is_verified(&self) -> bool {
        self.verdict == Verdict::Verified
    }
}

struct Run {
    id: TheoremId,
    params: BTreeMap<String, u64>,
    stats: BTreeMap<String, u64>,
    work: WorkCounters,
    scope: String,
    start: Instant,
}

impl Run {
    fn new(id: TheoremId) -> Run {
        Run {
            id,
            params: BTreeMap::new(),
            stats: BTreeMap::new(),
            work: WorkCounters::default(),
            scope: "exhaustive".to_string(),
            start: Instant::now(),
        }
    }

    fn param(&mut self, key: &str, value: u64) -> &mut Self {
        self.params.insert(key.to_string(), value);
        self
    }

    fn stat(&mut self, key: &str, value: u64) {
        self.stats.insert(key.to_string(), value);
    }

    fn finish(self, verdict: Verdict, counterexample: Option<Counterexample>) -> TheoremReport {
        TheoremReport {
            theorem_id: self.id,
            params: self.params,
            verdict,
            counterexample,
            work: self.work,
            elapsed_ms: self.start.elapsed().as_millis() as u64,
            scope: self.scope,
            stats: self.stats,
        }
    }

    fn verified(self) -> TheoremReport {
        self.finish(Verdict::Verified, None)
    }

    fn counterexample(self, ce: Counterexample) -> TheoremReport {
        self.finish(Verdict::Counterexample, Some(ce))
    }

    fn refused(mut self, why: String) -> TheoremReport {
        self.scope = why;
        self.finish(Verdict::Refused, None)
    }
}

/// Turns an oracle budget refusal into a `refused` report; other errors
/// propagate.
fn refusal_or_err(run: Run, err: Error) -> Result<TheoremReport> {
    match err {
        Error::BudgetExceeded { required, budget } => Ok(run.refused(format!(
            "refused: enumeration needs {required} objects, budget is {budget}"
        ))),
        other => Err(other),
    }
}

/// Minimum-degree theorem: on random qualifying instances the
/// constructed seed of size k is contagious within the speed bound, and
/// every vertex has at least k neighbors. Instance t uses
/// `n = n_lo + (t mod span)` and an rng stream derived from `rng_seed`.
pub fn verify_min_degree(
    n_lo: usize,
    n_hi: usize,
    k: usize,
    trials: usize,
    rng_seed: u64,
    _cfg: &SearchConfig,
) -> Result<TheoremReport> {
    if k < 2 || n_lo > n_hi || n_lo <= k || trials == 0 {
        return Err(invalid(format!(
            "verify_min_degree requires n_lo > k >= 2, n_lo <= n_hi and trials >= 1, got n in [{n_lo},{n_hi}] k={k} trials={trials}"
        )));
    }
    let mut run = Run::new(TheoremId::MinDegree);
    run.param("n_lo", n_lo as u64)
        .param("n_hi", n_hi as u64)
        .param("k", k as u64)
        .param("trials", trials as u64)
        .param("rng_seed", rng_seed);
    run.scope = format!("randomized: {trials} instances across n in [{n_lo}, {n_hi}]");
    let bound = if k == 2 { 4 } else { 3 };
    let span = n_hi - n_lo + 1;
    let mut max_rounds = 0u64;
    for t in 0..trials {
        let n = n_lo + t % span;
        let g = generators::gen_random_min_degree(n, k, derive_seed(rng_seed, t as u64))?;
        run.work.graphs += 1;
        if g.min_degree()? < k {
            return Ok(run.counterexample(ce(
                &g,
                k,
                &VertexSet::new(n),
                format!("minimum degree {} is below k = {k}", g.min_degree()?),
            )));
        }
        let recipe = match construct_dense_seed(&g, k) {
            Ok(recipe) => recipe,
            Err(Error::Internal(msg)) => {
                return Ok(run.counterexample(ce(&g, k, &VertexSet::new(n), msg)));
            }
            Err(other) => return Err(other),
        };
        let trace = percolate(&g, &recipe.seed, k);
        run.work.seeds += 1;
        run.work.rounds += trace.rounds as u64;
        if !trace.contagious {
            return Ok(run.counterexample(ce(
                &g,
                k,
                &recipe.seed,
                format!(
                    "constructed seed stalls at closure size {}",
                    trace.closure().len()
                ),
            )));
        }
        if trace.rounds > bound {
            return Ok(run.counterexample(ce(
                &g,
                k,
                &recipe.seed,
                format!("percolation_time={} exceeds bound {bound}", trace.rounds),
            )));
        }
        max_rounds = max_rounds.max(trace.rounds as u64);
    }
    run.stat("max_rounds_observed", max_rounds);
    run.stat("round_bound", bound as u64);
    Ok(run.verified())
}

/// Tightness of the minimum-degree requirement: the (n-2)-regular
/// clique-minus-matching graph sits exactly at the floored bound for
/// k = n-1 and has no contagious set smaller than n.
pub fn verify_tightness_example7(n: usize, cfg: &SearchConfig) -> Result<TheoremReport> {
    if n < 4 || !n.is_multiple_of(2) {
        return Err(invalid(format!(
            "verify_tightness_example7 requires even n >= 4, got {n}"
        )));
    }
    let k = n - 1;
    let mut run = Run::new(TheoremId::TightnessExample7);
    run.param("n", n as u64).param("k", k as u64);
    let g = generators::gen_clique_minus_matching(n)?;
    run.work.graphs += 1;
    let degree = g.min_degree()?;
    let floored = (k - 1) * n / k;
    let required = dense_degree_requirement(n, k);
    run.stat("min_degree", degree as u64);
    run.stat("floored_bound", floored as u64);
    run.stat("required_degree", required as u64);
    if degree != floored || degree >= required {
        return Err(Error::Internal(format!(
            "clique-minus-matching degree {degree} does not sit at the floored bound {floored}"
        )));
    }
    let out = match min_contagious(&g, k, None, cfg) {
        Ok(out) => out,
        Err(e) => return refusal_or_err(run, e),
    };
    let res = out.exact().expect("unbounded oracle returns exact m");
    run.work.seeds += res.seeds_examined;
    run.stat("m", res.m as u64);
    if res.m == n {
        Ok(run.verified())
    } else {
        Ok(run.counterexample(ce(
            &g,
            k,
            &res.witness,
            format!(
                "m(G, {k}) = {} but no contagious set of size < n was expected",
                res.m
            ),
        )))
    }
}

/// Speed theorem: over all seeds of sizes k and k+1, every contagious
/// seed finishes within four rounds for k = 2 and three rounds for
/// k >= 3.
pub fn verify_speed(g: &Graph, k: usize, cfg: &SearchConfig) -> Result<TheoremReport> {
    let bound = if k == 2 { 4 } else { 3 };
    speed_with_bound(g, k, bound, cfg)
}

fn speed_with_bound(
    g: &Graph,
    k: usize,
    bound: usize,
    cfg: &SearchConfig,
) -> Result<TheoremReport> {
    let n = g.n();
    if k < 2 {
        return Err(invalid("verify_speed requires k >= 2"));
    }
    let required = dense_degree_requirement(n, k);
    if n == 0 || g.min_degree()? < required {
        return Err(invalid(format!(
            "verify_speed requires minimum degree at least {required}"
        )));
    }
    let mut run = Run::new(TheoremId::Speed);
    run.param("n", n as u64).param("k", k as u64);
    run.stat("round_bound", bound as u64);
    for size in [k, k + 1] {
        if size > n {
            continue;
        }
        let stats = match scan_seeds(g, k, size, cfg) {
            Ok(stats) => stats,
            Err(e) => return refusal_or_err(run, e),
        };
        run.work.seeds += stats.total;
        if let Some(max_rounds) = stats.max_rounds {
            run.stat(&format!("max_rounds_size_{size}"), max_rounds as u64);
            run.stat(&format!("contagious_size_{size}"), stats.contagious_count);
            if max_rounds > bound {
                let seed = stats.argmax_seed.expect("max_rounds implies a witness");
                return Ok(run.counterexample(ce(
                    g,
                    k,
                    &seed,
                    format!("percolation_time={max_rounds} exceeds bound {bound}"),
                )));
            }
        }
    }
    run.scope = format!("exhaustive over seed sizes {k} and {}", k + 1);
    Ok(run.verified())
}

/// Stall-shape lemma: every size-k seed's closure has size k or at least
/// ⌈(k-1)/k · n⌉; for k >= 3 a closure past that bound is the whole
/// graph, and for k = 2 a proper stall of size n/2 only happens on DC_n.
pub fn verify_stop_lemma(
    g: &Graph,
    k: usize,
    sample_budget: u64,
    rng_seed: u64,
    cfg: &SearchConfig,
) -> Result<TheoremReport> {
    let n = g.n();
    if k < 2 {
        return Err(invalid("verify_stop_lemma requires k >= 2"));
    }
    let required = dense_degree_requirement(n, k);
    if n == 0 || g.min_degree()? < required {
        return Err(invalid(format!(
            "verify_stop_lemma requires minimum degree at least {required}"
        )));
    }
    let mut run = Run::new(TheoremId::StopLemma);
    run.param("n", n as u64)
        .param("k", k as u64)
        .param("sample_budget", sample_budget)
        .param("rng_seed", rng_seed);
    run.stat("closure_bound", required as u64);
    let dc_present = g.detect_dc().is_some();

    let total = binomial_capped(n, k, u128::MAX >> 1).unwrap_or(u128::MAX >> 1);
    let exhaustive = total <= sample_budget as u128 && total <= cfg.budget as u128;
    let mut stalls_at_k = 0u64;
    let mut half_stalls = 0u64;
    let mut full = 0u64;

    let mut check = |seed: &VertexSet, run: &mut Run| -> Option<Counterexample> {
        let closed = closure(g, seed, k);
        let size = closed.len();
        run.work.seeds += 1;
        if size == k {
            stalls_at_k += 1;
        } else if size == n {
            full += 1;
        }
        if size != k && size < required {
            return Some(ce(
                g,
                k,
                seed,
                format!("closure size {size} lies strictly between k and {required}"),
            ));
        }
        if k >= 3 && size >= required && size != n {
            return Some(ce(
                g,
                k,
                seed,
                format!("closure size {size} is past the bound {required} yet not the whole graph"),
            ));
        }
        if k == 2 && size < n && 2 * size == n {
            half_stalls += 1;
            if !dc_present {
                return Some(ce(
                    g,
                    k,
                    seed,
                    format!("proper stall at n/2 = {size} in a graph that is not DC_n"),
                ));
            }
        }
        None
    };

    if exhaustive {
        run.scope = format!("exhaustive over {total} seeds of size {k}");
        let mut comb: Vec<usize> = (0..k).collect();
        loop {
            let seed = VertexSet::from_slice(n, &comb);
            if let Some(bad) = check(&seed, &mut run) {
                return Ok(run.counterexample(bad));
            }
            if !crate::combin::next_combination(n, &mut comb) {
                break;
            }
        }
    } else {
        run.scope = format!("sampled {sample_budget} of {total} seeds of size {k}");
        let mut rng = SplitMix64::new(derive_seed(rng_seed, 11));
        for _ in 0..sample_budget {
            let seed = VertexSet::from_slice(n, &rng.subset(n, k));
            if let Some(bad) = check(&seed, &mut run) {
                return Ok(run.counterexample(bad));
            }
        }
    }
    run.stat("stalls_at_k", stalls_at_k);
    run.stat("half_stalls", half_stalls);
    run.stat("full_closures", full);
    Ok(run.verified())
}

/// Almost-there lemmas: once ⌈(k-1)/k · n⌉ vertices are active (strictly
/// more than n/2 for k = 2), one further round activates everything.
/// Monotone in the active set, so checking the minimum size suffices.
pub fn verify_almost_there(
    g: &Graph,
    k: usize,
    sample_budget: u64,
    rng_seed: u64,
    cfg: &SearchConfig,
) -> Result<TheoremReport> {
    let n = g.n();
    if k < 2 {
        return Err(invalid("verify_almost_there requires k >= 2"));
    }
    let required = dense_degree_requirement(n, k);
    if n == 0 || g.min_degree()? < required {
        return Err(invalid(format!(
            "verify_almost_there requires minimum degree at least {required}"
        )));
    }
    let mut run = Run::new(TheoremId::AlmostThere);
    run.param("n", n as u64)
        .param("k", k as u64)
        .param("sample_budget", sample_budget)
        .param("rng_seed", rng_seed);
    let size = if k == 2 { n / 2 + 1 } else { required };
    let size = size.min(n);
    run.stat("active_size", size as u64);

    let total = binomial_capped(n, size, u128::MAX >> 1).unwrap_or(u128::MAX >> 1);
    let exhaustive = total <= sample_budget as u128 && total <= cfg.budget as u128;

    let check = |active: &VertexSet, run: &mut Run| -> Option<Counterexample> {
        run.work.seeds += 1;
        run.work.rounds += 1;
        let wave = percolation_step(g, active, k);
        let mut after = active.clone();
        after.union_with(&wave);
        if after.len() != n {
            return Some(ce(
                g,
                k,
                active,
                format!(
                    "active set of size {} leaves {} vertices inactive after one round",
                    active.len(),
                    n - after.len()
                ),
            ));
        }
        None
    };

    if exhaustive {
        run.scope = format!("exhaustive over {total} active sets of size {size}");
        let mut comb: Vec<usize> = (0..size).collect();
        loop {
            let active = VertexSet::from_slice(n, &comb);
            if let Some(bad) = check(&active, &mut run) {
                return Ok(run.counterexample(bad));
            }
            if !crate::combin::next_combination(n, &mut comb) {
                break;
            }
        }
    } else {
        run.scope = format!("sampled {sample_budget} of {total} active sets of size {size}");
        let mut rng = SplitMix64::new(derive_seed(rng_seed, 7));
        for _ in 0..sample_budget {
            let active = VertexSet::from_slice(n, &rng.subset(n, size));
            if let Some(bad) = check(&active, &mut run) {
                return Ok(run.counterexample(bad));
            }
        }
    }
    Ok(run.verified())
}

/// Extremal edge count at threshold k: the clique-plus-isolated-vertex
/// graph attains C(n-1, 2) edges with m > k, and every labeled graph
/// with one more edge has m <= k.
pub fn verify_mkk(n: usize, k: usize, cfg: &SearchConfig) -> Result<TheoremReport> {
    if k < 1 || n < 2 * k + 2 {
        return Err(invalid(format!(
            "verify_mkk requires n >= 2k+2, got n={n} k={k}"
        )));
    }
    let mut run = Run::new(TheoremId::Mkk);
    run.param("n", n as u64).param("k", k as u64);

    let extremal = generators::gen_extremal_mkk(n, k)?;
    run.work.graphs += 1;
    let extremal_edges = binomial(n - 1, 2);
    run.stat("extremal_edges", extremal_edges);
    if extremal.edge_count() as u64 != extremal_edges {
        return Err(Error::Internal(
            "extremal mkk graph has the wrong edge count".into(),
        ));
    }
    let out = match min_contagious(&extremal, k, None, cfg) {
        Ok(out) => out,
        Err(e) => return refusal_or_err(run, e),
    };
    let res = out.exact().expect("exact oracle");
    run.work.seeds += res.seeds_examined;
    run.stat("extremal_m", res.m as u64);
    if res.m <= k {
        return Ok(run.counterexample(ce(
            &extremal,
            k,
            &res.witness,
            format!("extremal graph has m = {} <= k = {k}", res.m),
        )));
    }

    let target = extremal_edges + 1;
    // per-graph oracle work is bounded by sum of C(n, s) for s <= k
    let per_graph: u128 = (1..=k)
        .map(|s| binomial_capped(n, s, u128::MAX >> 1).unwrap_or(u128::MAX >> 1))
        .sum();
    if per_graph > cfg.budget as u128 {
        return Ok(run.refused(format!(
            "refused: per-graph oracle needs {per_graph} seeds, budget is {}",
            cfg.budget
        )));
    }
    let inner = SearchConfig {
        budget: cfg.budget,
        workers: 1,
    };
    let summary = match enumerate_graphs(n, target as usize, cfg, |_, g| {
        min_contagious(g, k, Some(k), &inner)
            .expect("per-graph budget prechecked")
            .exact()
            .is_some()
    }) {
        Ok(summary) => summary,
        Err(e) => return refusal_or_err(run, e),
    };
    run.work.graphs += summary.visited;
    run.stat("graphs_enumerated", summary.visited);
    if summary.visited != enumeration_size(n, target as usize) {
        return Err(Error::Internal("enumeration count mismatch".into()));
    }
    if summary.flagged > 0 {
        let bad = graph_at_rank(n, target as usize, summary.first_flagged.unwrap());
        let m = min_contagious(&bad, k, None, &inner)?.value();
        return Ok(run.counterexample(ce(
            &bad,
            k,
            &VertexSet::new(n),
            format!("graph with {target} edges has m = {m} > k = {k}"),
        )));
    }
    run.scope = format!(
        "exhaustive over {} labeled graphs with {target} edges",
        summary.visited
    );
    Ok(run.verified())
}

/// Extremal edge count at threshold n-1: clique minus a (near-)perfect
/// matching attains C(n,2) - ⌈n/2⌉ edges with m = n, and any graph with
/// one more edge has m = n-1.
pub fn verify_mnn(n: usize, cfg: &SearchConfig) -> Result<TheoremReport> {
    if n < 2 {
        return Err(invalid(format!("verify_mnn requires n >= 2, got {n}")));
    }
    let mut run = Run::new(TheoremId::Mnn);
    run.param("n", n as u64);
    let r = n - 1;

    // n = 2 degenerates to the empty graph (remove the single edge)
    let extremal = if n == 2 {
        Graph::empty(2)
    } else {
        generators::gen_clique_minus_matching(n)?
    };
    run.work.graphs += 1;
    let extremal_edges = binomial(n, 2) - n.div_ceil(2) as u64;
    run.stat("extremal_edges", extremal_edges);
    if extremal.edge_count() as u64 != extremal_edges {
        return Err(Error::Internal(
            "extremal mnn graph has the wrong edge count".into(),
        ));
    }
    let out = match min_contagious(&extremal, r, None, cfg) {
        Ok(out) => out,
        Err(e) => return refusal_or_err(run, e),
    };
    let res = out.exact().expect("exact oracle");
    run.work.seeds += res.seeds_examined;
    run.stat("extremal_m", res.m as u64);
    if res.m != n {
        return Ok(run.counterexample(ce(
            &extremal,
            r,
            &res.witness,
            format!("extremal graph has m = {} instead of n = {n}", res.m),
        )));
    }

    let target = (extremal_edges + 1) as usize;
    let inner = SearchConfig {
        budget: cfg.budget,
        workers: 1,
    };
    let summary = match enumerate_graphs(n, target, cfg, |_, g| {
        // at threshold n-1, m is always n-1 or n; one more edge must pin n-1
        !min_contagious(g, r, Some(r), &inner)
            .expect("oracle within budget on small n")
            .exceeds()
    }) {
        Ok(summary) => summary,
        Err(e) => return refusal_or_err(run, e),
    };
    run.work.graphs += summary.visited;
    run.stat("graphs_enumerated", summary.visited);
    if summary.visited != enumeration_size(n, target) {
        return Err(Error::Internal("enumeration count mismatch".into()));
    }
    if summary.flagged > 0 {
        let bad = graph_at_rank(n, target, summary.first_flagged.unwrap());
        return Ok(run.counterexample(ce(
            &bad,
            r,
            &VertexSet::new(n),
            format!("graph with {target} edges has m = {n} at threshold {r}"),
        )));
    }
    run.scope = format!(
        "exhaustive over {} labeled graphs with {target} edges",
        summary.visited
    );
    Ok(run.verified())
}

/// Extremal edge count at threshold two, construction side: the
/// matching-plus-clique graph attains the formula with m > k, and adding
/// any single non-edge collapses m to exactly k. The exhaustive
/// over-all-graphs direction only kicks in at n >= 9k + C(8k, 2), far
/// beyond desk scale, and is deliberately out of scope here.
pub fn verify_mk2(n: usize, k: usize, cfg: &SearchConfig) -> Result<TheoremReport> {
    if k < 2 || n < k + 2 {
        return Err(invalid(format!(
            "verify_mk2 requires n >= k+2 and k >= 2, got n={n} k={k}"
        )));
    }
    let mut run = Run::new(TheoremId::Mk2);
    run.param("n", n as u64).param("k", k as u64);
    run.scope = format!(
        "construction and single-edge sensitivity only; exhaustive verification needs n >= {} and is out of desk scale",
        9 * k + (8 * k) * (8 * k - 1) / 2
    );

    let g = generators::gen_extremal_mk2(n, k)?;
    run.work.graphs += 1;
    let formula = binomial(n - k + 1, 2) + ((k - 1) / 2) as u64;
    run.stat("extremal_edges", formula);
    if g.edge_count() as u64 != formula {
        return Err(Error::Internal(
            "extremal mk2 graph has the wrong edge count".into(),
        ));
    }

    let out = match min_contagious(&g, 2, Some(k), cfg) {
        Ok(out) => out,
        Err(e) => return refusal_or_err(run, e),
    };
    if let Some(res) = out.exact() {
        run.work.seeds += res.seeds_examined;
        return Ok(run.counterexample(ce(
            &g,
            2,
            &res.witness,
            format!("extremal graph has m = {} <= k = {k}", res.m),
        )));
    }

    let non_edges = g.non_edges();
    run.stat("edge_additions", non_edges.len() as u64);
    for (u, v) in non_edges {
        let augmented = g.with_edge(u, v)?;
        run.work.graphs += 1;
        let out = match min_contagious(&augmented, 2, Some(k), cfg) {
            Ok(out) => out,
            Err(e) => return refusal_or_err(run, e),
        };
        match out.exact() {
            Some(res) if res.m == k => {
                run.work.seeds += res.seeds_examined;
            }
            Some(res) => {
                return Ok(run.counterexample(ce(
                    &augmented,
                    2,
                    &res.witness,
                    format!(
                        "adding edge ({u}, {v}) gives m = {} instead of exactly k = {k}",
                        res.m
                    ),
                )));
            }
            None => {
                return Ok(run.counterexample(ce(
                    &augmented,
                    2,
                    &VertexSet::new(n),
                    format!("adding edge ({u}, {v}) leaves m > {k}"),
                )));
            }
        }
    }
    Ok(run.verified())
}

/// The star-plus-clique family beats the extremal formula while still
/// having no contagious set of size k, demonstrating the formula's
/// regime restriction. Boundary parameters (where the edge-count excess
/// is not strict) are refused rather than reinterpreted.
pub fn verify_star_counterexample(n: usize, k: usize, cfg: &SearchConfig) -> Result<TheoremReport> {
    if k < 2 || n <= k {
        return Err(invalid(format!(
            "verify_star_counterexample requires k >= 2 and n > k, got n={n} k={k}"
        )));
    }
    let mut run = Run::new(TheoremId::StarCounterexample);
    run.param("n", n as u64).param("k", k as u64);
    if 3 * k < 2 * n + 2 {
        return Ok(run.refused(format!(
            "refused: (n, k) = ({n}, {k}) is outside the regime 3k >= 2n + 2"
        )));
    }
    let star_edges = binomial(n - k, 2) + (k - 1) as u64;
    let formula = binomial(n - k + 1, 2) + ((k - 1) / 2) as u64;
    run.stat("edges", star_edges);
    run.stat("extremal_formula", formula);
    if star_edges <= formula {
        return Ok(run.refused(format!(
            "refused: edge count {star_edges} does not strictly exceed the formula value {formula} at (n, k) = ({n}, {k})"
        )));
    }
    let g = generators::gen_star_counterexample(n, k)?;
    run.work.graphs += 1;
    if g.edge_count() as u64 != star_edges {
        return Err(Error::Internal(
            "star counterexample has the wrong edge count".into(),
        ));
    }
    let out = match min_contagious(&g, 2, None, cfg) {
        Ok(out) => out,
        Err(e) => return refusal_or_err(run, e),
    };
    let res = out.exact().expect("exact oracle");
    run.work.seeds += res.seeds_examined;
    run.stat("m", res.m as u64);
    if res.m > k {
        Ok(run.verified())
    } else {
        Ok(run.counterexample(ce(
            &g,
            2,
            &res.witness,
            format!("m = {} <= k = {k} despite the star construction", res.m),
        )))
    }
}

/// Ore theorem end to end: the constructed pair is contagious, the
/// high-degree-triple lemmas hold, and on an `ore_groups` instance the
/// small clique S is not contagious.
pub fn verify_ore(
    g: &Graph,
    ore_groups_c: Option<usize>,
    sample_budget: u64,
    rng_seed: u64,
    cfg: &SearchConfig,
) -> Result<TheoremReport> {
    let n = g.n();
    if n < 3 {
        return Err(invalid("verify_ore requires n >= 3"));
    }
    if !g.is_ore() {
        return Err(invalid("verify_ore requires an Ore graph"));
    }
    let mut run = Run::new(TheoremId::OreTheorem);
    run.param("n", n as u64).param("rng_seed", rng_seed);
    if let Some(c) = ore_groups_c {
        run.param("c", c as u64);
    }

    let recipe = match construct_ore_seed(g) {
        Ok(recipe) => recipe,
        Err(Error::Internal(msg)) => {
            return Ok(run.counterexample(ce(g, 2, &VertexSet::new(n), msg)));
        }
        Err(other) => return Err(other),
    };
    let trace = percolate(g, &recipe.seed, 2);
    run.work.seeds += 1;
    run.work.rounds += trace.rounds as u64;
    run.stat("constructed_rounds", trace.rounds as u64);
    if !trace.contagious {
        return Ok(run.counterexample(ce(
            g,
            2,
            &recipe.seed,
            format!(
                "constructed pair stalls at closure size {}",
                trace.closure().len()
            ),
        )));
    }

    if let Some(bad) = ore_lemma_checks(g, sample_budget, rng_seed, cfg, &mut run) {
        return Ok(run.counterexample(bad));
    }

    if let Some(c) = ore_groups_c {
        if c > n {
            return Err(invalid(format!("ore_groups c = {c} exceeds n = {n}")));
        }
        let s: Vec<usize> = (0..c).collect();
        let seed = VertexSet::from_slice(n, &s);
        run.work.seeds += 1;
        if crate::percolation::is_contagious(g, &seed, 2) {
            return Ok(run.counterexample(ce(
                g,
                2,
                &seed,
                "the clique S of the ore_groups family is contagious but must not be".to_string(),
            )));
        }
    }
    Ok(run.verified())
}

/// Just the triple lemmas (and the pivot-existence lemma) on an Ore
/// graph, reported under their own theorem id.
pub fn verify_ore_lemmas(
    g: &Graph,
    sample_budget: u64,
    rng_seed: u64,
    cfg: &SearchConfig,
) -> Result<TheoremReport> {
    let n = g.n();
    if n < 3 {
        return Err(invalid("verify_ore_lemmas requires n >= 3"));
    }
    if !g.is_ore() {
        return Err(invalid("verify_ore_lemmas requires an Ore graph"));
    }
    let mut run = Run::new(TheoremId::OreLemmas);
    run.param("n", n as u64).param("rng_seed", rng_seed);

    // pivot existence: some high-degree vertex has two high-degree
    // neighbors (guaranteed for n > 4)
    if n > 4 {
        let cut = n.div_ceil(2);
        let mut high = VertexSet::new(n);
        for v in 0..n {
            if g.neighbors(v).len() >= cut {
                high.insert(v);
            }
        }
        let pivot = high
            .iter()
            .find(|&w| g.neighbors(w).intersection_count(&high) >= 2);
        if pivot.is_none() {
            return Ok(run.counterexample(ce(
                g,
                2,
                &VertexSet::new(n),
                "no high-degree vertex with two high-degree neighbors".to_string(),
            )));
        }
    }

    if let Some(bad) = ore_lemma_checks(g, sample_budget, rng_seed, cfg, &mut run) {
        return Ok(run.counterexample(bad));
    }
    Ok(run.verified())
}

/// Shared triple checks: every triple of degree >= n/2 infects at least
/// half the graph, and all of it when the graph is not `DC_n`.
fn ore_lemma_checks(
    g: &Graph,
    sample_budget: u64,
    rng_seed: u64,
    cfg: &SearchConfig,
    run: &mut Run,
) -> Option<Counterexample> {
    let n = g.n();
    let cut = n.div_ceil(2); // integer form of degree >= n/2
    let high: Vec<usize> = (0..n).filter(|&v| g.neighbors(v).len() >= cut).collect();
    let dc_present = g.detect_dc().is_some();
    run.stat("high_degree_vertices", high.len() as u64);

    let check = |triple: &VertexSet, run: &mut Run| -> Option<Counterexample> {
        run.work.seeds += 1;
        let size = closure(g, triple, 2).len();
        if 2 * size < n {
            return Some(ce(
                g,
                2,
                triple,
                format!("high-degree triple infects only {size} < n/2 vertices"),
            ));
        }
        if !dc_present && size != n {
            return Some(ce(
                g,
                2,
                triple,
                format!("high-degree triple stalls at {size} in a non-DC graph"),
            ));
        }
        None
    };

    let total = binomial_capped(high.len(), 3, u128::MAX >> 1).unwrap_or(u128::MAX >> 1);
    let exhaustive = total <= sample_budget as u128 && total <= cfg.budget as u128;
    let mut triples_checked = 0u64;
    if exhaustive {
        run.scope = format!("exhaustive over {total} high-degree triples");
        for i in 0..high.len() {
            for j in (i + 1)..high.len() {
                for l in (j + 1)..high.len() {
                    let triple = VertexSet::from_slice(n, &[high[i], high[j], high[l]]);
                    triples_checked += 1;
                    if let Some(bad) = check(&triple, run) {
                        run.stat("triples_checked", triples_checked);
                        return Some(bad);
                    }
                }
            }
        }
    } else {
        run.scope = format!("sampled {sample_budget} of {total} high-degree triples");
        let mut rng = SplitMix64::new(derive_seed(rng_seed, 3));
        for _ in 0..sample_budget {
            let picks = rng.subset(high.len(), 3);
            let triple =
                VertexSet::from_slice(n, &[high[picks[0]], high[picks[1]], high[picks[2]]]);
            triples_checked += 1;
            if let Some(bad) = check(&triple, run) {
                run.stat("triples_checked", triples_checked);
                return Some(bad);
            }
        }
    }
    run.stat("triples_checked", triples_checked);
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::complete;
    use crate::percolation::percolation_time;

    fn cfg() -> SearchConfig {
        SearchConfig::default()
    }

    #[test]
    fn min_degree_small_run() {
        let report = verify_min_degree(10, 20, 2, 10, 7, &cfg()).unwrap();
        assert!(report.is_verified(), "{report:?}");
        assert_eq!(report.work.graphs, 10);
        assert!(report.stats["max_rounds_observed"] <= 4);
    }

    #[test]
    fn tightness_example7() {
        let report = verify_tightness_example7(8, &cfg()).unwrap();
        assert!(report.is_verified());
        assert_eq!(report.stats["m"], 8);
        assert_eq!(report.stats["min_degree"], 6);
    }

    #[test]
    fn speed_on_speed8() {
        let g = generators::gen_speed8();
        let report = verify_speed(&g, 2, &cfg()).unwrap();
        assert!(report.is_verified());
        assert_eq!(report.stats["max_rounds_size_2"], 4);
        assert_eq!(report.stats["max_rounds_size_3"], 3);
    }

    #[test]
    fn speed_on_circulants_attains_three() {
        let g3 = generators::gen_circulant(3).unwrap();
        let report = verify_speed(&g3, 3, &cfg()).unwrap();
        assert!(report.is_verified());
        assert_eq!(report.stats["max_rounds_size_3"], 3);

        let g4 = generators::gen_circulant(4).unwrap();
        let report = verify_speed(&g4, 4, &cfg()).unwrap();
        assert!(report.is_verified());
        assert_eq!(report.stats["max_rounds_size_4"], 3);
    }

    #[test]
    fn reports_are_deterministic_modulo_elapsed() {
        let g = generators::gen_dc(8).unwrap();
        let mut a = verify_stop_lemma(&g, 2, 1_000, 5, &cfg()).unwrap();
        let mut b = verify_stop_lemma(&g, 2, 1_000, 5, &cfg()).unwrap();
        a.elapsed_ms = 0;
        b.elapsed_ms = 0;
        assert_eq!(
            serde_json::to_string(&a).unwrap(),
            serde_json::to_string(&b).unwrap()
        );
    }

    #[test]
    fn speed_counterexample_payload_rechecks() {
        let g = generators::gen_speed8();
        // rigged bound: 2 rounds cannot hold, the {v1, v2} pair needs 4
        let report = speed_with_bound(&g, 2, 2, &cfg()).unwrap();
        assert_eq!(report.verdict, Verdict::Counterexample);
        let ce = report.counterexample.unwrap();
        let rebuilt = Graph::from_edges(ce.n, &ce.graph_edges).unwrap();
        let seed = VertexSet::from_slice(ce.n, &ce.seed);
        let time = percolation_time(&rebuilt, &seed, ce.r).unwrap();
        assert!(time > 2);
        assert!(ce.observed.contains(&format!("percolation_time={time}")));
    }

    #[test]
    fn stop_lemma_on_dc6() {
        let g = generators::gen_dc(6).unwrap();
        let report = verify_stop_lemma(&g, 2, 1_000_000, 0, &cfg()).unwrap();
        assert!(report.is_verified());
        // stalls at size 2 (cross pairs) and 3 (same-clique pairs) only
        assert!(report.stats["stalls_at_k"] > 0);
        assert!(report.stats["half_stalls"] > 0);
        assert!(report.scope.starts_with("exhaustive"));
    }

    #[test]
    fn stop_lemma_on_k6() {
        let report = verify_stop_lemma(&complete(6), 2, 1_000_000, 0, &cfg()).unwrap();
        assert!(report.is_verified());
        assert_eq!(report.stats["full_closures"], 15);
        assert_eq!(report.stats["stalls_at_k"], 0);
    }

    #[test]
    fn almost_there_exhaustive() {
        let g = generators::gen_dc(6).unwrap();
        let report = verify_almost_there(&g, 2, 1_000_000, 0, &cfg()).unwrap();
        assert!(report.is_verified());
        assert_eq!(report.stats["active_size"], 4);
    }

    #[test]
    fn mkk_small() {
        let report = verify_mkk(6, 2, &cfg()).unwrap();
        assert!(report.is_verified(), "{report:?}");
        assert_eq!(report.stats["graphs_enumerated"], 1365);
        assert_eq!(report.stats["extremal_m"], 3);
    }

    #[test]
    fn mnn_small() {
        for (n, graphs) in [(4usize, 6u64), (5, 45)] {
            let report = verify_mnn(n, &cfg()).unwrap();
            assert!(report.is_verified(), "n={n}: {report:?}");
            assert_eq!(report.stats["graphs_enumerated"], graphs);
            assert_eq!(report.stats["extremal_m"], n as u64);
        }
    }

    #[test]
    fn mnn_degenerate_two_vertices() {
        // extremal graph is the empty 2-vertex graph; one added edge (K2)
        // drops m to 1 at threshold 1
        let report = verify_mnn(2, &cfg()).unwrap();
        assert!(report.is_verified(), "{report:?}");
        assert_eq!(report.stats["extremal_edges"], 0);
        assert_eq!(report.stats["extremal_m"], 2);
        assert_eq!(report.stats["graphs_enumerated"], 1);
        assert!(verify_mnn(1, &cfg()).is_err());
    }

    #[test]
    fn mk2_small() {
        let report = verify_mk2(20, 3, &cfg()).unwrap();
        assert!(report.is_verified(), "{report:?}");
        assert!(report.scope.contains("sensitivity"));
    }

    #[test]
    fn star_counterexample_cases() {
        let report = verify_star_counterexample(10, 8, &cfg()).unwrap();
        assert!(report.is_verified());
        assert_eq!(report.stats["edges"], 8);
        assert_eq!(report.stats["extremal_formula"], 6);
        assert_eq!(report.stats["m"], 9);

        // boundary: both sides evaluate to 9 at (10, 7), and the regime
        // inequality fails; the checker must refuse, not guess
        let report = verify_star_counterexample(10, 7, &cfg()).unwrap();
        assert_eq!(report.verdict, Verdict::Refused);

        let report = verify_star_counterexample(13, 10, &cfg()).unwrap();
        assert!(report.is_verified());
    }

    #[test]
    fn ore_on_groups_and_dc() {
        let g = generators::gen_ore_groups(12, 4, &[2, 2, 2, 2]).unwrap();
        let report = verify_ore(&g, Some(4), 1_000_000, 0, &cfg()).unwrap();
        assert!(report.is_verified(), "{report:?}");

        let dc = generators::gen_dc(10).unwrap();
        let report = verify_ore(&dc, None, 1_000_000, 0, &cfg()).unwrap();
        assert!(report.is_verified());
        assert_eq!(report.stats["constructed_rounds"], 2);
    }

    #[test]
    fn ore_lemmas_standalone() {
        let g = generators::gen_ore_groups(14, 3, &[4, 4, 3]).unwrap();
        let report = verify_ore_lemmas(&g, 1_000_000, 0, &cfg()).unwrap();
        assert!(report.is_verified());
        assert!(report.stats["triples_checked"] > 0);
    }

    #[test]
    fn ore_s_check_catches_contagious_s() {
        // on a complete graph the "S" prefix clearly percolates, so the
        // Example-14 assertion must flag it
        let g = complete(6);
        let report = verify_ore(&g, Some(2), 1_000_000, 0, &cfg()).unwrap();
        assert_eq!(report.verdict, Verdict::Counterexample);
        let ce = report.counterexample.unwrap();
        let rebuilt = Graph::from_edges(ce.n, &ce.graph_edges).unwrap();
        let seed = VertexSet::from_slice(ce.n, &ce.seed);
        assert!(crate::percolation::is_contagious(&rebuilt, &seed, ce.r));
    }

    #[test]
    fn non_ore_input_is_usage_error() {
        let path = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(verify_ore(&path, None, 100, 0, &cfg()).is_err());
    }

    #[test]
    fn report_json_fields() {
        let report = verify_tightness_example7(6, &cfg()).unwrap();
        let json = serde_json::to_value(&report).unwrap();
        assert_eq!(json["theorem_id"], "tightness_example7");
        assert_eq!(json["verdict"], "verified");
        assert!(json["counterexample"].is_null());
        assert!(json["work"]["seeds"].as_u64().is_some());
        assert!(json["elapsed_ms"].as_u64().is_some());
        assert!(json["scope"].is_string());
    }
}
