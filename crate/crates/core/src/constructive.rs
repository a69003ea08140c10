//! Constructive contagious-set builders for dense graphs: pick a vertex
//! and activate k of its neighbors (minimum-degree route), the
//! cross-clique pair for `DC_n`, and the high-degree-neighbor pair for
//! Ore graphs. Ties always break toward the lowest vertex id so outputs
//! are reproducible.

use serde::Serialize;

use crate::bitset::VertexSet;
use crate::error::{invalid, Error, Result};
use crate::graph::Graph;
use crate::percolation::is_contagious;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SeedMethod {
    NeighborsOfAnchor,
    DcCrossPair,
    OreLemma17,
    BruteForceFallback,
}

/// A constructed seed together with how it was chosen. `anchor` is the
/// vertex whose neighbors were activated (or the Ore pivot adjacent to
/// both seed vertices); it is never part of the seed for those methods.
#[derive(Clone, Debug, Serialize)]
pub struct SeedRecipe {
    pub seed: VertexSet,
    pub method: SeedMethod,
    pub anchor: Option<usize>,
}

/// The minimum-degree hypothesis ⌈(k-1)/k · n⌉ shared by the dense-graph
/// results.
pub fn dense_degree_requirement(n: usize, k: usize) -> usize {
    ((k - 1) * n).div_ceil(k)
}

/// Contagious set of size k for a graph with minimum degree at least
/// ⌈(k-1)/k · n⌉ and thresholds k. For k = 2 on `DC_n` the generic
/// neighbor pick can stall inside one clique, so that case takes a
/// non-adjacent cross-clique pair instead. The output is simulated
/// before returning; a non-contagious result is reported as an internal
/// invariant violation rather than handed to the caller.
pub fn construct_dense_seed(g: &Graph, k: usize) -> Result<SeedRecipe> {
    let n = g.n();
    if k < 2 || n <= k {
        return Err(invalid(format!(
            "construct_dense_seed requires n > k >= 2, got n={n} k={k}"
        )));
    }
    let required = dense_degree_requirement(n, k);
    let have = g.min_degree()?;
    if have < required {
        return Err(invalid(format!(
            "minimum degree {have} is below the required {required} for k={k}"
        )));
    }
    let recipe = if k == 2 {
        match g.detect_dc() {
            Some(dc) => dc_cross_pair(&dc),
            None => neighbors_of_lowest(g, k),
        }
    } else {
        neighbors_of_lowest(g, k)
    };
    if !is_contagious(g, &recipe.seed, k) {
        return Err(Error::Internal(format!(
            "constructed dense seed {:?} is not contagious at r={k}",
            recipe.seed.to_vec()
        )));
    }
    Ok(recipe)
}

fn neighbors_of_lowest(g: &Graph, k: usize) -> SeedRecipe {
    let anchor = 0;
    let mut seed = VertexSet::new(g.n());
    for v in g.neighbors(anchor).iter().take(k) {
        seed.insert(v);
    }
    SeedRecipe {
        seed,
        method: SeedMethod::NeighborsOfAnchor,
        anchor: Some(anchor),
    }
}

fn dc_cross_pair(dc: &crate::graph::DcPartition) -> SeedRecipe {
    let a = dc.side_a.first().expect("DC sides are non-empty");
    let partner = dc.partner(a).expect("matching covers side_a");
    let b = dc
        .side_b
        .iter()
        .find(|&v| v != partner)
        .expect("DC sides have at least two vertices for n >= 4");
    let mut seed = VertexSet::new(dc.side_a.universe());
    seed.insert(a);
    seed.insert(b);
    SeedRecipe {
        seed,
        method: SeedMethod::DcCrossPair,
        anchor: None,
    }
}

/// Contagious pair for an Ore graph (thresholds two): the cross pair on
/// `DC_n`, a pair scan for n ≤ 4, and otherwise two high-degree
/// neighbors of the lowest high-degree vertex with two such neighbors
/// (which must exist in an Ore graph on more than four vertices).
pub fn construct_ore_seed(g: &Graph) -> Result<SeedRecipe> {
    let n = g.n();
    if n < 3 {
        return Err(invalid(format!(
            "construct_ore_seed requires n >= 3, got {n}"
        )));
    }
    if !g.is_ore() {
        return Err(invalid("construct_ore_seed requires an Ore graph"));
    }
    if let Some(dc) = g.detect_dc() {
        return Ok(dc_cross_pair(&dc));
    }
    if n <= 4 {
        for u in 0..n {
            for v in (u + 1)..n {
                let seed = VertexSet::from_slice(n, &[u, v]);
                if is_contagious(g, &seed, 2) {
                    return Ok(SeedRecipe {
                        seed,
                        method: SeedMethod::BruteForceFallback,
                        anchor: None,
                    });
                }
            }
        }
        return Err(Error::Internal(
            "no contagious pair in a small Ore graph; contradicts the Ore theorem".into(),
        ));
    }
    let cut = n.div_ceil(2);
    let mut high = VertexSet::new(n);
    for v in 0..n {
        if g.neighbors(v).len() >= cut {
            high.insert(v);
        }
    }
    for w in high.iter() {
        if g.neighbors(w).intersection_count(&high) >= 2 {
            let mut picks = g.neighbors(w).iter().filter(|&v| high.contains(v));
            let u = picks.next().unwrap();
            let v = picks.next().unwrap();
            return Ok(SeedRecipe {
                seed: VertexSet::from_slice(n, &[u, v]),
                method: SeedMethod::OreLemma17,
                anchor: Some(w),
            });
        }
    }
    Err(Error::Internal(
        "no high-degree vertex with two high-degree neighbors; contradicts the Ore lemma".into(),
    ))
}
