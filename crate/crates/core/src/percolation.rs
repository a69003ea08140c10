//! The r-neighbor bootstrap percolation engine.
//!
//! Activation is synchronous and irrevocable: in each round, every
//! inactive vertex with at least `r` active neighbors joins the active
//! set, all evaluated against the previous round's set. The closure of a
//! seed is the fixpoint of this update.

use serde::Serialize;

use crate::bitset::VertexSet;
use crate::graph::Graph;

/// Full record of one percolation run. `waves[i]` holds the vertices
/// newly activated in round `i + 1`; waves are non-empty by construction.
/// For a non-contagious seed the trace still carries the stalled wave
/// structure and `rounds` counts the waves, so callers must consult
/// `contagious` before reading `rounds` as a percolation time.
#[derive(Clone, Debug, Serialize)]
pub struct PercolationTrace {
    pub n: usize,
    pub r: usize,
    pub seed: VertexSet,
    pub waves: Vec<VertexSet>,
    pub contagious: bool,
    pub rounds: usize,
}

impl PercolationTrace {
    /// Seed plus every wave: the eventually-infected set.
    pub fn closure(&self) -> VertexSet {
        let mut out = self.seed.clone();
        for w in &self.waves {
            out.union_with(w);
        }
        out
    }
}

fn check_inputs(g: &Graph, active: &VertexSet, r: usize) {
    assert!(r >= 1, "threshold r must be at least 1");
    assert_eq!(
        active.universe(),
        g.n(),
        "seed universe does not match graph order"
    );
}

/// One synchronous round: the set of inactive vertices with at least `r`
/// neighbors in `active`. May be empty.
pub fn percolation_step(g: &Graph, active: &VertexSet, r: usize) -> VertexSet {
    check_inputs(g, active, r);
    let mut wave = VertexSet::new(g.n());
    for v in 0..g.n() {
        if !active.contains(v) && g.neighbors(v).intersection_count(active) >= r {
            wave.insert(v);
        }
    }
    wave
}

/// Runs the process from `seed` to its fixpoint.
pub fn percolate(g: &Graph, seed: &VertexSet, r: usize) -> PercolationTrace {
    check_inputs(g, seed, r);
    let n = g.n();
    let mut active = seed.clone();
    let mut waves = Vec::new();
    loop {
        let wave = percolation_step(g, &active, r);
        if wave.is_empty() {
            break;
        }
        active.union_with(&wave);
        waves.push(wave);
    }
    let contagious = active.len() == n;
    let rounds = waves.len();
    PercolationTrace {
        n,
        r,
        seed: seed.clone(),
        waves,
        contagious,
        rounds,
    }
}

/// Number of rounds until total infection, or `None` for a seed that is
/// not contagious. Zero iff the seed is already the whole vertex set.
pub fn percolation_time(g: &Graph, seed: &VertexSet, r: usize) -> Option<usize> {
    let trace = percolate(g, seed, r);
    trace.contagious.then_some(trace.rounds)
}

/// The eventually-infected set, without building waves. This is the
/// oracle's hot path.
pub fn closure(g: &Graph, seed: &VertexSet, r: usize) -> VertexSet {
    check_inputs(g, seed, r);
    let n = g.n();
    let mut active = seed.clone();
    let mut active_count = active.len();
    loop {
        let mut grew = false;
        let snapshot = active.clone();
        for v in 0..n {
            if !snapshot.contains(v) && g.neighbors(v).intersection_count(&snapshot) >= r {
                active.insert(v);
                active_count += 1;
                grew = true;
            }
        }
        if !grew || active_count == n {
            return active;
        }
    }
}

pub fn is_contagious(g: &Graph, seed: &VertexSet, r: usize) -> bool {
    closure(g, seed, r).len() == g.n()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;
    use crate::graph::complete;

    fn vs(n: usize, v: &[usize]) -> VertexSet {
        VertexSet::from_slice(n, v)
    }

    #[test]
    fn step_examples() {
        let k4 = complete(4);
        assert_eq!(
            percolation_step(&k4, &vs(4, &[0, 1]), 2).to_vec(),
            vec![2, 3]
        );

        // DC_6: cliques {0,1,2}, {3,4,5}, matching i <-> i+3
        let dc6 = generators::gen_dc(6).unwrap();
        assert_eq!(
            percolation_step(&dc6, &vs(6, &[0, 4]), 2).to_vec(),
            vec![1, 3]
        );

        // Example-9 graph, seeds v1, v2 -> only v3 activates
        let g = generators::gen_speed8();
        assert_eq!(percolation_step(&g, &vs(8, &[0, 1]), 2).to_vec(), vec![2]);
    }

    #[test]
    fn percolate_examples() {
        let k5 = complete(5);
        let t = percolate(&k5, &vs(5, &[0, 1]), 2);
        assert!(t.contagious);
        assert_eq!(t.rounds, 1);
        assert_eq!(t.waves[0].to_vec(), vec![2, 3, 4]);

        // one vertex per clique, non-adjacent: two rounds
        let dc6 = generators::gen_dc(6).unwrap();
        let t = percolate(&dc6, &vs(6, &[0, 4]), 2);
        assert!(t.contagious);
        assert_eq!(t.rounds, 2);

        // two vertices in one clique: stalls at closure size 3
        let t = percolate(&dc6, &vs(6, &[0, 1]), 2);
        assert!(!t.contagious);
        assert_eq!(t.closure().len(), 3);
    }

    #[test]
    fn time_examples() {
        let k4 = complete(4);
        assert_eq!(percolation_time(&k4, &VertexSet::full(4), 3), Some(0));

        let speed8 = generators::gen_speed8();
        assert_eq!(percolation_time(&speed8, &vs(8, &[0, 1]), 2), Some(4));

        let circ = generators::gen_circulant(3).unwrap();
        let seed = generators::gen_circulant_seed(3).unwrap();
        assert_eq!(seed.to_vec(), vec![0, 9, 17]);
        assert_eq!(percolation_time(&circ, &seed, 3), Some(3));
    }

    #[test]
    fn empty_seed_is_not_contagious() {
        let k3 = complete(3);
        let t = percolate(&k3, &VertexSet::new(3), 2);
        assert!(!t.contagious);
        assert_eq!(t.rounds, 0);
        assert!(t.waves.is_empty());
    }

    #[test]
    fn closure_matches_trace() {
        let g = generators::gen_speed8();
        for seed in [vs(8, &[0, 1]), vs(8, &[2, 5]), vs(8, &[0]), vs(8, &[])] {
            assert_eq!(
                closure(&g, &seed, 2).to_vec(),
                percolate(&g, &seed, 2).closure().to_vec()
            );
        }
    }

    #[test]
    #[should_panic(expected = "threshold r")]
    fn zero_threshold_rejected() {
        let k3 = complete(3);
        percolation_step(&k3, &VertexSet::new(3), 0);
    }

    #[test]
    fn trace_json_shape() {
        let dc6 = generators::gen_dc(6).unwrap();
        let t = percolate(&dc6, &vs(6, &[0, 4]), 2);
        let json = serde_json::to_value(&t).unwrap();
        assert_eq!(json["n"], 6);
        assert_eq!(json["r"], 2);
        assert_eq!(json["seed"], serde_json::json!([0, 4]));
        assert_eq!(json["contagious"], true);
        assert_eq!(json["rounds"], 2);
        assert_eq!(json["waves"][0], serde_json::json!([1, 3]));
    }
}
