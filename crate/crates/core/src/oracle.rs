//! Exact brute-force ground truth: minimum contagious sets, seed-space
//! statistics, and exhaustive labeled-graph enumeration at a fixed edge
//! count.
//!
//! All scans are lexicographic and rank-addressable, so they can be
//! partitioned into contiguous rank ranges across workers; merges are
//! min/max/sum and the reported results are bit-identical for any worker
//! count. `seeds_examined` is defined as the serial-scan count (the rank
//! of the witness plus everything before it) for the same reason.

use std::time::{Duration, Instant};

use serde::Serialize;

use crate::bitset::VertexSet;
use crate::combin::{binomial, binomial_capped, combination_at_rank, next_combination};
use crate::error::{invalid, Error, Result};
use crate::graph::Graph;
use crate::percolation::{is_contagious, percolation_time};

/// Enumeration limits shared by the oracle entry points. The budget caps
/// the number of enumerated objects (seeds or graphs); exceeding it is a
/// refusal, never a truncated answer.
#[derive(Clone, Debug)]
pub struct SearchConfig {
    pub budget: u64,
    pub workers: usize,
}

pub const DEFAULT_BUDGET: u64 = 100_000_000;

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            budget: DEFAULT_BUDGET,
            workers: 1,
        }
    }
}

impl SearchConfig {
    pub fn with_workers(workers: usize) -> Self {
        SearchConfig {
            workers,
            ..Self::default()
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct MinContagiousResult {
    pub m: usize,
    pub witness: VertexSet,
    pub seeds_examined: u64,
    #[serde(skip)]
    pub elapsed: Duration,
}

/// `min_contagious` either pins the exact value or, when an upper bound
/// was supplied, certifies `m > bound`. Budget refusal is an `Err`.
#[derive(Clone, Debug, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum MinContagiousOutcome {
    Exact(MinContagiousResult),
    ExceedsBound {
        bound: usize,
        seeds_examined: u64,
        #[serde(skip)]
        elapsed: Duration,
    },
}

impl MinContagiousOutcome {
    pub fn exact(&self) -> Option<&MinContagiousResult> {
        match self {
            MinContagiousOutcome::Exact(res) => Some(res),
            MinContagiousOutcome::ExceedsBound { .. } => None,
        }
    }

    /// The exact value, panicking on a bounded outcome; test convenience.
    pub fn value(&self) -> usize {
        self.exact().expect("expected an exact m(G,r)").m
    }

    pub fn exceeds(&self) -> bool {
        matches!(self, MinContagiousOutcome::ExceedsBound { .. })
    }
}

fn split_ranges(total: u64, workers: usize) -> Vec<(u64, u64)> {
    let w = workers.clamp(1, 64) as u64;
    (0..w)
        .map(|i| (total * i / w, total * (i + 1) / w))
        .filter(|(lo, hi)| lo < hi)
        .collect()
}

fn run_partitioned<R: Send>(
    total: u64,
    workers: usize,
    body: impl Fn(u64, u64) -> R + Sync,
) -> Vec<R> {
    let ranges = split_ranges(total, workers);
    if ranges.len() <= 1 {
        return ranges.into_iter().map(|(lo, hi)| body(lo, hi)).collect();
    }
    let body = &body;
    std::thread::scope(|scope| {
        let handles: Vec<_> = ranges
            .iter()
            .map(|&(lo, hi)| scope.spawn(move || body(lo, hi)))
            .collect();
        handles.into_iter().map(|h| h.join().unwrap()).collect()
    })
}

/// Vertices that can never be activated (degree below the threshold);
/// every contagious set must contain all of them.
pub fn forced_seed(g: &Graph, r: usize) -> VertexSet {
    let mut forced = VertexSet::new(g.n());
    for v in 0..g.n() {
        if g.neighbors(v).len() < r {
            forced.insert(v);
        }
    }
    forced
}

/// Exact `m(G, r)` by scanning seed sizes in increasing order and, within
/// each size, subsets in lexicographic order. With `upper_bound` the scan
/// stops after that size and reports `m > upper_bound` when nothing was
/// found. The witness is the lexicographically least contagious set of
/// minimum size.
pub fn min_contagious(
    g: &Graph,
    r: usize,
    upper_bound: Option<usize>,
    cfg: &SearchConfig,
) -> Result<MinContagiousOutcome> {
    let start = Instant::now();
    let n = g.n();
    if n == 0 {
        return Err(invalid("min_contagious on the empty graph"));
    }
    if r == 0 {
        return Err(invalid("threshold r must be at least 1"));
    }
    let forced = forced_seed(g, r);
    let free: Vec<usize> = (0..n).filter(|&v| !forced.contains(v)).collect();
    let max_size = upper_bound.unwrap_or(n).min(n);
    let start_size = forced.len().max(1);
    let mut examined: u64 = 0;

    for size in start_size..=n {
        if size > max_size {
            break;
        }
        let pick = size - forced.len();
        let count_u128 =
            binomial_capped(free.len(), pick, u128::MAX >> 1).unwrap_or(u128::MAX >> 1);
        if examined as u128 + count_u128 > cfg.budget as u128 {
            return Err(Error::BudgetExceeded {
                required: examined as u128 + count_u128,
                budget: cfg.budget,
            });
        }
        let count = count_u128 as u64;
        let found = run_partitioned(count, cfg.workers, |lo, hi| {
            scan_combinations_for_witness(g, r, &forced, &free, pick, lo, hi)
        })
        .into_iter()
        .flatten()
        .min_by_key(|&(rank, _)| rank);
        if let Some((rank, witness)) = found {
            return Ok(MinContagiousOutcome::Exact(MinContagiousResult {
                m: size,
                witness,
                seeds_examined: examined + rank + 1,
                elapsed: start.elapsed(),
            }));
        }
        examined += count;
    }

    match upper_bound {
        Some(bound) if bound < n => Ok(MinContagiousOutcome::ExceedsBound {
            bound,
            seeds_examined: examined,
            elapsed: start.elapsed(),
        }),
        _ => Err(Error::Internal(
            "full vertex set must be contagious; scan exhausted without a witness".into(),
        )),
    }
}

fn scan_combinations_for_witness(
    g: &Graph,
    r: usize,
    forced: &VertexSet,
    free: &[usize],
    pick: usize,
    lo: u64,
    hi: u64,
) -> Option<(u64, VertexSet)> {
    let mut comb = combination_at_rank(free.len(), pick, lo);
    for rank in lo..hi {
        let mut seed = forced.clone();
        for &idx in &comb {
            seed.insert(free[idx]);
        }
        if is_contagious(g, &seed, r) {
            return Some((rank, seed));
        }
        next_combination(free.len(), &mut comb);
    }
    None
}

/// Exact statistics over every seed of one cardinality.
#[derive(Clone, Debug, Serialize)]
pub struct SeedScanStats {
    pub size: usize,
    pub total: u64,
    pub contagious_count: u64,
    /// Maximum percolation time among contagious seeds; absent when no
    /// seed of this size is contagious.
    pub max_rounds: Option<usize>,
    /// Lexicographically least seed attaining `max_rounds`.
    pub argmax_seed: Option<VertexSet>,
    #[serde(skip)]
    pub elapsed: Duration,
}

pub fn scan_seeds(g: &Graph, r: usize, size: usize, cfg: &SearchConfig) -> Result<SeedScanStats> {
    let start = Instant::now();
    let n = g.n();
    if r == 0 {
        return Err(invalid("threshold r must be at least 1"));
    }
    if size > n {
        return Err(invalid(format!("seed size {size} exceeds n = {n}")));
    }
    let total_u128 = binomial_capped(n, size, u128::MAX >> 1).unwrap_or(u128::MAX >> 1);
    if total_u128 > cfg.budget as u128 {
        return Err(Error::BudgetExceeded {
            required: total_u128,
            budget: cfg.budget,
        });
    }
    let total = total_u128 as u64;

    struct Partial {
        contagious: u64,
        max_rounds: Option<usize>,
        argmax: Option<VertexSet>,
    }

    let partials = run_partitioned(total, cfg.workers, |lo, hi| {
        let mut part = Partial {
            contagious: 0,
            max_rounds: None,
            argmax: None,
        };
        let mut comb = combination_at_rank(n, size, lo);
        for _rank in lo..hi {
            let seed = VertexSet::from_slice(n, &comb);
            if let Some(rounds) = percolation_time(g, &seed, r) {
                part.contagious += 1;
                if part.max_rounds.is_none_or(|m| rounds > m) {
                    part.max_rounds = Some(rounds);
                    part.argmax = Some(seed);
                }
            }
            next_combination(n, &mut comb);
        }
        part
    });

    let mut stats = SeedScanStats {
        size,
        total,
        contagious_count: 0,
        max_rounds: None,
        argmax_seed: None,
        elapsed: Duration::ZERO,
    };
    for part in partials {
        stats.contagious_count += part.contagious;
        // strict improvement only: on ties the earlier (lex-lower) range wins
        if let Some(rounds) = part.max_rounds {
            if stats.max_rounds.is_none_or(|m| rounds > m) {
                stats.max_rounds = Some(rounds);
                stats.argmax_seed = part.argmax;
            }
        }
    }
    stats.elapsed = start.elapsed();
    Ok(stats)
}

#[derive(Clone, Debug, Serialize)]
pub struct EnumerationSummary {
    pub visited: u64,
    pub flagged: u64,
    /// Lexicographic rank of the first graph the visitor flagged.
    pub first_flagged: Option<u64>,
    #[serde(skip)]
    pub elapsed: Duration,
}

/// Visits every labeled n-vertex graph with exactly `edge_count` edges,
/// each exactly once, in lexicographic order of the sorted edge-slot
/// lists. The visitor returns false to flag a failure; flags are counted
/// and the first flagged rank is reported (use [`graph_at_rank`] to
/// rebuild it).
pub fn enumerate_graphs(
    n: usize,
    edge_count: usize,
    cfg: &SearchConfig,
    visitor: impl Fn(u64, &Graph) -> bool + Sync,
) -> Result<EnumerationSummary> {
    let start = Instant::now();
    let slots = edge_slots(n);
    let total_u128 =
        binomial_capped(slots.len(), edge_count, u128::MAX >> 1).unwrap_or(u128::MAX >> 1);
    if total_u128 > cfg.budget as u128 {
        return Err(Error::BudgetExceeded {
            required: total_u128,
            budget: cfg.budget,
        });
    }
    let total = total_u128 as u64;

    let partials = run_partitioned(total, cfg.workers, |lo, hi| {
        let mut visited = 0u64;
        let mut flagged = 0u64;
        let mut first = None;
        let mut comb = combination_at_rank(slots.len(), edge_count, lo);
        for rank in lo..hi {
            let g = graph_from_slots(n, &slots, &comb);
            visited += 1;
            if !visitor(rank, &g) {
                flagged += 1;
                if first.is_none() {
                    first = Some(rank);
                }
            }
            next_combination(slots.len(), &mut comb);
        }
        (visited, flagged, first)
    });

    let mut summary = EnumerationSummary {
        visited: 0,
        flagged: 0,
        first_flagged: None,
        elapsed: Duration::ZERO,
    };
    for (visited, flagged, first) in partials {
        summary.visited += visited;
        summary.flagged += flagged;
        if summary.first_flagged.is_none() {
            summary.first_flagged = first;
        }
    }
    summary.elapsed = start.elapsed();
    Ok(summary)
}

/// All possible edges of an n-vertex graph in lexicographic order.
pub fn edge_slots(n: usize) -> Vec<(usize, usize)> {
    let mut slots = Vec::with_capacity(n * (n.max(1) - 1) / 2);
    for u in 0..n {
        for v in (u + 1)..n {
            slots.push((u, v));
        }
    }
    slots
}

fn graph_from_slots(n: usize, slots: &[(usize, usize)], comb: &[usize]) -> Graph {
    let edges: Vec<(usize, usize)> = comb.iter().map(|&i| slots[i]).collect();
    Graph::from_edges(n, &edges).expect("edge slots are valid by construction")
}

/// Rebuilds the graph at one enumeration rank; used to reconstruct
/// counterexamples after a parallel scan.
pub fn graph_at_rank(n: usize, edge_count: usize, rank: u64) -> Graph {
    let slots = edge_slots(n);
    let comb = combination_at_rank(slots.len(), edge_count, rank);
    graph_from_slots(n, &slots, &comb)
}

/// Number of graphs `enumerate_graphs(n, edge_count, ..)` will visit.
pub fn enumeration_size(n: usize, edge_count: usize) -> u64 {
    binomial(n * (n.max(1) - 1) / 2, edge_count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;
    use crate::graph::complete;

    #[test]
    fn min_contagious_on_cliques() {
        for n in 3..8 {
            let g = complete(n);
            let res = min_contagious(&g, 2, None, &SearchConfig::default()).unwrap();
            let res = res.exact().unwrap();
            assert_eq!(res.m, 2);
            assert_eq!(res.witness.to_vec(), vec![0, 1]);
        }
    }

    #[test]
    fn min_contagious_with_upper_bound() {
        let g = generators::gen_extremal_mk2(20, 3).unwrap();
        let out = min_contagious(&g, 2, Some(3), &SearchConfig::default()).unwrap();
        assert!(out.exceeds());
        let out = min_contagious(&g, 2, None, &SearchConfig::default()).unwrap();
        assert_eq!(out.value(), 4);
    }

    #[test]
    fn forced_vertices_are_pruned() {
        // star counterexample: nine vertices of degree < 2 force the seed
        let g = generators::gen_star_counterexample(10, 8).unwrap();
        assert_eq!(forced_seed(&g, 2).len(), 9);
        let res = min_contagious(&g, 2, None, &SearchConfig::default()).unwrap();
        let res = res.exact().unwrap();
        assert_eq!(res.m, 9);
        assert_eq!(res.seeds_examined, 1);
    }

    #[test]
    fn single_vertex_graph() {
        // degree 0 < r forces the lone vertex into the seed
        let g = Graph::empty(1);
        let res = min_contagious(&g, 1, None, &SearchConfig::default()).unwrap();
        let res = res.exact().unwrap();
        assert_eq!(res.m, 1);
        assert_eq!(res.witness.to_vec(), vec![0]);
        assert!(min_contagious(&Graph::empty(0), 1, None, &SearchConfig::default()).is_err());
    }

    #[test]
    fn scan_size_zero_and_full() {
        let g = complete(4);
        let empty = scan_seeds(&g, 2, 0, &SearchConfig::default()).unwrap();
        assert_eq!(empty.total, 1);
        assert_eq!(empty.contagious_count, 0);
        assert!(empty.max_rounds.is_none());

        let full = scan_seeds(&g, 2, 4, &SearchConfig::default()).unwrap();
        assert_eq!(full.total, 1);
        assert_eq!(full.contagious_count, 1);
        assert_eq!(full.max_rounds, Some(0));
        assert!(scan_seeds(&g, 2, 5, &SearchConfig::default()).is_err());
    }

    #[test]
    fn budget_refusal() {
        let g = complete(40);
        let cfg = SearchConfig {
            budget: 10,
            workers: 1,
        };
        match scan_seeds(&g, 2, 3, &cfg) {
            Err(Error::BudgetExceeded { .. }) => {}
            other => panic!("expected budget refusal, got {other:?}"),
        }
    }

    #[test]
    fn scan_speed8_pairs_and_triples() {
        let g = generators::gen_speed8();
        let pairs = scan_seeds(&g, 2, 2, &SearchConfig::default()).unwrap();
        assert_eq!(pairs.total, 28);
        assert_eq!(pairs.max_rounds, Some(4));
        assert_eq!(pairs.argmax_seed.as_ref().unwrap().to_vec(), vec![0, 1]);

        let triples = scan_seeds(&g, 2, 3, &SearchConfig::default()).unwrap();
        assert_eq!(triples.total, 56);
        assert_eq!(triples.contagious_count, 56);
        assert_eq!(triples.max_rounds, Some(3));
    }

    #[test]
    fn scan_circulant4_quads() {
        let g = generators::gen_circulant(4).unwrap();
        let stats = scan_seeds(&g, 4, 4, &SearchConfig::default()).unwrap();
        assert_eq!(stats.max_rounds, Some(3));
        // the canonical seed attains the max
        let seed = generators::gen_circulant_seed(4).unwrap();
        assert_eq!(crate::percolation::percolation_time(&g, &seed, 4), Some(3));
    }

    #[test]
    fn enumeration_counts() {
        let count = |n, e| {
            enumerate_graphs(n, e, &SearchConfig::default(), |_, _| true)
                .unwrap()
                .visited
        };
        assert_eq!(count(6, 11), 1365);
        assert_eq!(count(5, 8), 45);
        assert_eq!(count(4, 6), 1);
    }

    #[test]
    fn enumeration_flags_and_rank_rebuild() {
        // flag triangle-free graphs among 4-vertex graphs with 4 edges
        let has_triangle = |g: &Graph| {
            let n = g.n();
            (0..n).any(|a| {
                (a + 1..n).any(|b| {
                    g.has_edge(a, b) && (b + 1..n).any(|c| g.has_edge(a, c) && g.has_edge(b, c))
                })
            })
        };
        let summary =
            enumerate_graphs(4, 4, &SearchConfig::default(), |_, g| has_triangle(g)).unwrap();
        assert_eq!(summary.visited, 15);
        // C4 is the only triangle-free labeled graph with 4 edges on 4
        // vertices up to labeling: there are 3 of them
        assert_eq!(summary.flagged, 3);
        let first = graph_at_rank(4, 4, summary.first_flagged.unwrap());
        assert!(!has_triangle(&first));
    }

    #[test]
    fn adding_edges_never_raises_m() {
        let cfg = SearchConfig::default();
        for g in [
            generators::gen_dc(6).unwrap(),
            generators::gen_speed8(),
            generators::gen_extremal_mkk(7, 2).unwrap(),
            generators::gen_star_counterexample(10, 8).unwrap(),
        ] {
            for r in [1usize, 2, 3] {
                let base = min_contagious(&g, r, None, &cfg).unwrap().value();
                for (u, v) in g.non_edges() {
                    let denser = g.with_edge(u, v).unwrap();
                    let m = min_contagious(&denser, r, None, &cfg).unwrap().value();
                    assert!(
                        m <= base,
                        "m rose from {base} to {m} after adding ({u}, {v}) at r={r}"
                    );
                }
            }
        }
    }

    #[test]
    fn witness_is_stable_across_runs() {
        let g = generators::gen_ore_groups(12, 4, &[2, 2, 2, 2]).unwrap();
        let cfg = SearchConfig::default();
        let first = min_contagious(&g, 2, None, &cfg).unwrap();
        let second = min_contagious(&g, 2, None, &cfg).unwrap();
        assert_eq!(
            first.exact().unwrap().witness.to_vec(),
            second.exact().unwrap().witness.to_vec()
        );
    }

    #[test]
    fn parallel_matches_serial() {
        let g = generators::gen_extremal_mk2(18, 4).unwrap();
        let serial = SearchConfig::default();
        let parallel = SearchConfig::with_workers(4);
        let a = min_contagious(&g, 2, None, &serial).unwrap();
        let b = min_contagious(&g, 2, None, &parallel).unwrap();
        let (a, b) = (a.exact().unwrap(), b.exact().unwrap());
        assert_eq!(a.m, b.m);
        assert_eq!(a.witness.to_vec(), b.witness.to_vec());
        assert_eq!(a.seeds_examined, b.seeds_examined);

        let s1 = scan_seeds(&g, 2, 3, &serial).unwrap();
        let s4 = scan_seeds(&g, 2, 3, &parallel).unwrap();
        assert_eq!(s1.contagious_count, s4.contagious_count);
        assert_eq!(s1.max_rounds, s4.max_rounds);
        assert_eq!(
            s1.argmax_seed.map(|s| s.to_vec()),
            s4.argmax_seed.map(|s| s.to_vec())
        );
    }
}
