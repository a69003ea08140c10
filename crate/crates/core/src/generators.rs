//! Deterministic constructors for the named graph families, plus seeded
//! random generators for property tests. Every generator validates its
//! own postconditions where they are cheap to state (degree and edge
//! counts), since most downstream checks assume them.

use std::fmt;
use std::str::FromStr;

use crate::bitset::VertexSet;
use crate::error::{invalid, Error, Result};
use crate::graph::Graph;
use crate::percolation;
use crate::rng::{derive_seed, SplitMix64};

/// Two disjoint cliques on `n/2` vertices each (`0..n/2` and `n/2..n`),
/// joined by the perfect matching `i <-> i + n/2`. Every degree is `n/2`.
pub fn gen_dc(n: usize) -> Result<Graph> {
    if n < 4 || !n.is_multiple_of(2) {
        return Err(invalid(format!("dc requires even n >= 4, got {n}")));
    }
    let half = n / 2;
    let mut edges = Vec::new();
    for side in [0, half] {
        for u in side..side + half {
            for v in (u + 1)..side + half {
                edges.push((u, v));
            }
        }
    }
    for i in 0..half {
        edges.push((i, i + half));
    }
    let g = Graph::from_edges(n, &edges)?;
    debug_assert!((0..n).all(|v| g.neighbors(v).len() == half));
    Ok(g)
}

/// K_n minus ⌈n/2⌉ edges: a perfect matching for even n (pairs `(2i, 2i+1)`),
/// and for odd n a near-perfect matching leaving `n-1` unmatched plus the
/// extra edge `(0, n-1)`. Even n gives an (n-2)-regular graph.
pub fn gen_clique_minus_matching(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(invalid(format!(
            "clique_minus_matching requires n >= 3, got {n}"
        )));
    }
    let mut removed = VertexSetPairs::new();
    let matched = if n.is_multiple_of(2) { n } else { n - 1 };
    for i in (0..matched).step_by(2) {
        removed.add(i, i + 1);
    }
    if n % 2 == 1 {
        removed.add(0, n - 1);
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if !removed.contains(u, v) {
                edges.push((u, v));
            }
        }
    }
    let g = Graph::from_edges(n, &edges)?;
    debug_assert_eq!(g.edge_count(), n * (n - 1) / 2 - n.div_ceil(2));
    Ok(g)
}

struct VertexSetPairs(Vec<(usize, usize)>);
impl VertexSetPairs {
    fn new() -> Self {
        VertexSetPairs(Vec::new())
    }
    fn add(&mut self, u: usize, v: usize) {
        self.0.push((u.min(v), u.max(v)));
    }
    fn contains(&self, u: usize, v: usize) -> bool {
        self.0.contains(&(u.min(v), u.max(v)))
    }
}

/// The fixed 8-vertex graph where a contagious pair needs four rounds
/// (vertex `v_i` of the construction is id `i - 1`). Self-checks its
/// defining properties at build time: minimum degree 4 and percolation
/// time 4 from seed {0, 1} at threshold 2.
pub fn gen_speed8() -> Graph {
    let e = |a: usize, b: usize| (a - 1, b - 1);
    let edges = [
        e(1, 2),
        e(1, 3),
        e(2, 3),
        e(1, 4),
        e(1, 5),
        e(2, 7),
        e(2, 8),
        e(3, 4),
        e(3, 6),
        e(4, 5),
        e(4, 7),
        e(4, 8),
        e(5, 7),
        e(5, 8),
        e(5, 6),
        e(6, 7),
        e(6, 8),
        e(7, 8),
    ];
    let g = Graph::from_edges(8, &edges).expect("fixed edge list is valid");
    assert_eq!(g.edge_count(), 18);
    assert_eq!(g.min_degree().unwrap(), 4);
    let seed = VertexSet::from_slice(8, &[0, 1]);
    assert_eq!(percolation::percolation_time(&g, &seed, 2), Some(4));
    g
}

fn circulant_params(k: usize) -> Result<(usize, usize)> {
    if k < 3 {
        return Err(invalid(format!("circulant requires k >= 3, got {k}")));
    }
    Ok(if k % 2 == 1 {
        (k * k * k, (k * k - 1) / 2)
    } else {
        (k * (k + 1), k / 2)
    })
}

/// Circulant slow-spreading graph: vertices `0..n` adjacent iff their
/// circular distance exceeds `d`, with `(n, d) = (k^3, (k^2-1)/2)` for
/// odd k and `(k(k+1), k/2)` for even k. Regular of degree `(k-1)/k * n`
/// resp. `k^2 - 1`.
pub fn gen_circulant(k: usize) -> Result<Graph> {
    let (n, d) = circulant_params(k)?;
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            let dist = (v - u).min(n - (v - u));
            if dist > d {
                edges.push((u, v));
            }
        }
    }
    let g = Graph::from_edges(n, &edges)?;
    let want = n - 1 - 2 * d;
    debug_assert!((0..n).all(|v| g.neighbors(v).len() == want));
    Ok(g)
}

/// The canonical slow seed for `gen_circulant(k)`: `v_{j*s}` for
/// `j = 0..k-2` plus `v_{(k-1)*s - 1}`, with stride `s = k^2` for odd k
/// and `s = k + 1` for even k.
pub fn gen_circulant_seed(k: usize) -> Result<VertexSet> {
    let (n, _) = circulant_params(k)?;
    let stride = if k % 2 == 1 { k * k } else { k + 1 };
    let mut seed = VertexSet::new(n);
    for j in 0..=(k - 2) {
        seed.insert(j * stride);
    }
    seed.insert((k - 1) * stride - 1);
    Ok(seed)
}

/// Extremal graph for edge count at threshold k: a clique on `n-1`
/// vertices plus the isolated vertex `n-1`. Disconnected, so no seed of
/// size < n can reach everything without containing the isolated vertex.
pub fn gen_extremal_mkk(n: usize, k: usize) -> Result<Graph> {
    if k < 1 || n < k + 1 {
        return Err(invalid(format!(
            "extremal_mkk requires n >= k+1 >= 2, got n={n} k={k}"
        )));
    }
    let mut edges = Vec::new();
    for u in 0..n - 1 {
        for v in (u + 1)..n - 1 {
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, &edges)
}

/// Extremal graph for edge count at threshold 2: for odd k, `(k-1)/2`
/// isolated edges and a clique on the remaining `n-k+1` vertices; for
/// even k, one isolated vertex, `(k-2)/2` isolated edges, and the same
/// clique. Edge count `C(n-k+1, 2) + floor((k-1)/2)`.
pub fn gen_extremal_mk2(n: usize, k: usize) -> Result<Graph> {
    if k < 2 || n < k + 2 {
        return Err(invalid(format!(
            "extremal_mk2 requires k >= 2 and n >= k+2, got n={n} k={k}"
        )));
    }
    let mut edges = Vec::new();
    let sparse = k - 1; // vertices outside the clique
    let first_matched = if k % 2 == 1 { 0 } else { 1 };
    let mut i = first_matched;
    while i + 1 < sparse {
        edges.push((i, i + 1));
        i += 2;
    }
    for u in sparse..n {
        for v in (u + 1)..n {
            edges.push((u, v));
        }
    }
    let g = Graph::from_edges(n, &edges)?;
    let clique = n - k + 1;
    debug_assert_eq!(g.edge_count(), clique * (clique - 1) / 2 + (k - 1) / 2);
    Ok(g)
}

/// Denser-than-extremal family without a small contagious set: a clique
/// on `n-k` vertices disjoint from a star with center `n-k` and `k-1`
/// leaves. Valid in the regime `3k >= 2n + 2`.
pub fn gen_star_counterexample(n: usize, k: usize) -> Result<Graph> {
    if k < 2 || n <= k || 3 * k < 2 * n + 2 {
        return Err(invalid(format!(
            "star_counterexample requires k >= 2, n > k and 3k >= 2n+2, got n={n} k={k}"
        )));
    }
    let clique = n - k;
    let mut edges = Vec::new();
    for u in 0..clique {
        for v in (u + 1)..clique {
            edges.push((u, v));
        }
    }
    let center = clique;
    for leaf in (clique + 1)..n {
        edges.push((center, leaf));
    }
    let g = Graph::from_edges(n, &edges)?;
    debug_assert_eq!(g.edge_count(), clique * (clique.max(1) - 1) / 2 + (k - 1));
    Ok(g)
}

/// Ore graph that defeats any seed inside its small clique: `S = 0..c` is
/// a clique, the remaining `n-c` vertices form another clique partitioned
/// into groups `G_0..G_{c-1}` of the given sizes, and each member of
/// `G_i` is additionally adjacent to vertex `i` (and no other vertex of
/// S). Verified to be Ore before returning.
pub fn gen_ore_groups(n: usize, c: usize, group_sizes: &[usize]) -> Result<Graph> {
    if c < 2 || c > n / 2 {
        return Err(invalid(format!(
            "ore_groups requires 2 <= c <= n/2, got n={n} c={c}"
        )));
    }
    if group_sizes.len() != c {
        return Err(invalid(format!(
            "ore_groups needs exactly c={c} group sizes, got {}",
            group_sizes.len()
        )));
    }
    if group_sizes.contains(&0) {
        return Err(invalid("ore_groups group sizes must be positive"));
    }
    if group_sizes.iter().sum::<usize>() != n - c {
        return Err(invalid(format!(
            "ore_groups group sizes must sum to n-c = {}, got {}",
            n - c,
            group_sizes.iter().sum::<usize>()
        )));
    }
    let mut edges = Vec::new();
    for u in 0..c {
        for v in (u + 1)..c {
            edges.push((u, v));
        }
    }
    for u in c..n {
        for v in (u + 1)..n {
            edges.push((u, v));
        }
    }
    let mut next = c;
    for (i, &size) in group_sizes.iter().enumerate() {
        for member in next..next + size {
            edges.push((i, member));
        }
        next += size;
    }
    let g = Graph::from_edges(n, &edges)?;
    if !g.is_ore() {
        return Err(invalid("ore_groups construction is not an Ore graph"));
    }
    Ok(g)
}

/// Random graph with minimum degree at least ⌈(k-1)/k * n⌉: a circulant
/// base of that degree plus a seeded coin flip per remaining non-edge.
pub fn gen_random_min_degree(n: usize, k: usize, rng_seed: u64) -> Result<Graph> {
    if k < 2 || n <= k {
        return Err(invalid(format!(
            "random_min_degree requires n > k >= 2, got n={n} k={k}"
        )));
    }
    let want = crate::constructive::dense_degree_requirement(n, k);
    let reach = want.div_ceil(2);
    let mut rng = SplitMix64::new(rng_seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            let dist = (v - u).min(n - (v - u));
            if dist <= reach || rng.chance(1 << 63) {
                edges.push((u, v));
            }
        }
    }
    let g = Graph::from_edges(n, &edges)?;
    debug_assert!(g.min_degree()? >= want);
    Ok(g)
}

/// Random Ore graph: either a random Dirac graph or a random ore_groups
/// instance, optionally densified by extra random edges (adding edges
/// both keeps degrees up and only removes non-adjacent pairs, so the Ore
/// property survives).
pub fn gen_random_ore(n: usize, rng_seed: u64) -> Result<Graph> {
    if n < 3 {
        return Err(invalid(format!("random_ore requires n >= 3, got {n}")));
    }
    let mut rng = SplitMix64::new(rng_seed);
    let use_groups = n / 2 >= 2 && rng.chance(1 << 63);
    let base = if use_groups {
        let c = 2 + rng.next_below((n / 2 - 1) as u64) as usize;
        let mut sizes = vec![1usize; c];
        for _ in 0..(n - 2 * c) {
            sizes[rng.next_below(c as u64) as usize] += 1;
        }
        gen_ore_groups(n, c, &sizes)?
    } else {
        gen_random_min_degree(n, 2, derive_seed(rng_seed, 1))?
    };
    // densify with probability drawn once per instance
    let p = rng.next_below(1 << 62) * 2;
    let mut g = base;
    for (u, v) in g.non_edges() {
        if rng.chance(p) {
            g = g.with_edge(u, v)?;
        }
    }
    debug_assert!(g.is_ore());
    Ok(g)
}

/// Parsed descriptor of a generator invocation; this is what the CLI
/// builds from flags and what gets stamped into emitted files as a
/// `# family:` provenance line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    Dc {
        n: usize,
    },
    CliqueMinusMatching {
        n: usize,
    },
    Speed8,
    Circulant {
        k: usize,
    },
    ExtremalMkk {
        n: usize,
        k: usize,
    },
    ExtremalMk2 {
        n: usize,
        k: usize,
    },
    StarCounterexample {
        n: usize,
        k: usize,
    },
    OreGroups {
        n: usize,
        c: usize,
        sizes: Vec<usize>,
    },
    RandomMinDegree {
        n: usize,
        k: usize,
        rng_seed: u64,
    },
    RandomOre {
        n: usize,
        rng_seed: u64,
    },
}

impl FamilySpec {
    pub fn build(&self) -> Result<Graph> {
        match self {
            FamilySpec::Dc { n } => gen_dc(*n),
            FamilySpec::CliqueMinusMatching { n } => gen_clique_minus_matching(*n),
            FamilySpec::Speed8 => Ok(gen_speed8()),
            FamilySpec::Circulant { k } => gen_circulant(*k),
            FamilySpec::ExtremalMkk { n, k } => gen_extremal_mkk(*n, *k),
            FamilySpec::ExtremalMk2 { n, k } => gen_extremal_mk2(*n, *k),
            FamilySpec::StarCounterexample { n, k } => gen_star_counterexample(*n, *k),
            FamilySpec::OreGroups { n, c, sizes } => gen_ore_groups(*n, *c, sizes),
            FamilySpec::RandomMinDegree { n, k, rng_seed } => {
                gen_random_min_degree(*n, *k, *rng_seed)
            }
            FamilySpec::RandomOre { n, rng_seed } => gen_random_ore(*n, *rng_seed),
        }
    }

    /// Assembles a spec from CLI-style parts.
    pub fn from_parts(
        family: &str,
        n: Option<usize>,
        k: Option<usize>,
        c: Option<usize>,
        sizes: Option<&[usize]>,
        rng_seed: u64,
    ) -> Result<FamilySpec> {
        let need_n = || n.ok_or_else(|| invalid(format!("family {family} requires --n")));
        let need_k = || k.ok_or_else(|| invalid(format!("family {family} requires --k")));
        Ok(match family {
            "dc" => FamilySpec::Dc { n: need_n()? },
            "clique_minus_matching" => FamilySpec::CliqueMinusMatching { n: need_n()? },
            "speed8" => FamilySpec::Speed8,
            "circulant" => FamilySpec::Circulant { k: need_k()? },
            "extremal_mkk" => FamilySpec::ExtremalMkk {
                n: need_n()?,
                k: need_k()?,
            },
            "extremal_mk2" => FamilySpec::ExtremalMk2 {
                n: need_n()?,
                k: need_k()?,
            },
            "star_counterexample" => FamilySpec::StarCounterexample {
                n: need_n()?,
                k: need_k()?,
            },
            "ore_groups" => FamilySpec::OreGroups {
                n: need_n()?,
                c: c.ok_or_else(|| invalid("family ore_groups requires --c"))?,
                sizes: sizes
                    .ok_or_else(|| invalid("family ore_groups requires --sizes"))?
                    .to_vec(),
            },
            "random_min_degree" => FamilySpec::RandomMinDegree {
                n: need_n()?,
                k: need_k()?,
                rng_seed,
            },
            "random_ore" => FamilySpec::RandomOre {
                n: need_n()?,
                rng_seed,
            },
            other => return Err(invalid(format!("unknown family: {other}"))),
        })
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Dc { n } => write!(f, "dc n={n}"),
            FamilySpec::CliqueMinusMatching { n } => write!(f, "clique_minus_matching n={n}"),
            FamilySpec::Speed8 => write!(f, "speed8"),
            FamilySpec::Circulant { k } => write!(f, "circulant k={k}"),
            FamilySpec::ExtremalMkk { n, k } => write!(f, "extremal_mkk n={n} k={k}"),
            FamilySpec::ExtremalMk2 { n, k } => write!(f, "extremal_mk2 n={n} k={k}"),
            FamilySpec::StarCounterexample { n, k } => write!(f, "star_counterexample n={n} k={k}"),
            FamilySpec::OreGroups { n, c, sizes } => {
                let list: Vec<String> = sizes.iter().map(|s| s.to_string()).collect();
                write!(f, "ore_groups n={n} c={c} sizes={}", list.join(","))
            }
            FamilySpec::RandomMinDegree { n, k, rng_seed } => {
                write!(f, "random_min_degree n={n} k={k} rng_seed={rng_seed}")
            }
            FamilySpec::RandomOre { n, rng_seed } => {
                write!(f, "random_ore n={n} rng_seed={rng_seed}")
            }
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    /// Parses the `Display` form, e.g. `"ore_groups n=12 c=4 sizes=2,2,2,2"`.
    fn from_str(s: &str) -> Result<FamilySpec> {
        let mut tokens = s.split_whitespace();
        let family = tokens.next().ok_or_else(|| invalid("empty family spec"))?;
        let (mut n, mut k, mut c, mut sizes, mut rng_seed) = (None, None, None, None, 0u64);
        for tok in tokens {
            let (key, value) = tok
                .split_once('=')
                .ok_or_else(|| invalid(format!("bad family parameter: {tok}")))?;
            let parse_usize = || -> Result<usize> {
                value
                    .parse()
                    .map_err(|_| invalid(format!("bad value for {key}: {value}")))
            };
            match key {
                "n" => n = Some(parse_usize()?),
                "k" => k = Some(parse_usize()?),
                "c" => c = Some(parse_usize()?),
                "sizes" => {
                    let parsed: Result<Vec<usize>> = value
                        .split(',')
                        .map(|p| {
                            p.parse()
                                .map_err(|_| invalid(format!("bad sizes entry: {p}")))
                        })
                        .collect();
                    sizes = Some(parsed?);
                }
                "rng_seed" => {
                    rng_seed = value
                        .parse()
                        .map_err(|_| invalid(format!("bad rng_seed: {value}")))?
                }
                other => return Err(invalid(format!("unknown family parameter: {other}"))),
            }
        }
        FamilySpec::from_parts(family, n, k, c, sizes.as_deref(), rng_seed)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{min_contagious, MinContagiousOutcome, SearchConfig};
    use crate::percolation::{is_contagious, percolate, percolation_time};

    #[test]
    fn dc_counts() {
        let g = gen_dc(6).unwrap();
        assert_eq!(g.edge_count(), 9); // 2*C(3,2) + 3
        for v in 0..6 {
            assert_eq!(g.degree(v).unwrap(), 3);
        }
        let c4 = gen_dc(4).unwrap();
        assert_eq!(c4.edge_count(), 4);
        assert_eq!(c4.min_degree().unwrap(), 2);
        assert!(gen_dc(5).is_err());
        assert!(gen_dc(2).is_err());
    }

    #[test]
    fn dc8_min_contagious_is_two() {
        let g = gen_dc(8).unwrap();
        let out = min_contagious(&g, 2, None, &SearchConfig::default()).unwrap();
        match out {
            MinContagiousOutcome::Exact(res) => assert_eq!(res.m, 2),
            _ => panic!("expected exact result"),
        }
    }

    #[test]
    fn clique_minus_matching_counts() {
        let g6 = gen_clique_minus_matching(6).unwrap();
        assert_eq!(g6.edge_count(), 12);
        for v in 0..6 {
            assert_eq!(g6.degree(v).unwrap(), 4);
        }
        let g5 = gen_clique_minus_matching(5).unwrap();
        assert_eq!(g5.edge_count(), 7);
        assert!(gen_clique_minus_matching(2).is_err());
    }

    #[test]
    fn clique_minus_matching_blocks_threshold_n_minus_1() {
        // at threshold 5 = n-1 nothing outside the seed can ever activate
        let g = gen_clique_minus_matching(6).unwrap();
        let out = min_contagious(&g, 5, None, &SearchConfig::default()).unwrap();
        match out {
            MinContagiousOutcome::Exact(res) => assert_eq!(res.m, 6),
            _ => panic!("expected exact result"),
        }
    }

    #[test]
    fn speed8_fixed_points() {
        let g = gen_speed8();
        assert_eq!(g.n(), 8);
        assert_eq!(g.edge_count(), 18);
        assert_eq!(g.min_degree().unwrap(), 4);
    }

    #[test]
    fn circulant_degrees_and_seeds() {
        let g3 = gen_circulant(3).unwrap();
        assert_eq!(g3.n(), 27);
        for v in 0..27 {
            assert_eq!(g3.degree(v).unwrap(), 18);
        }
        let g4 = gen_circulant(4).unwrap();
        assert_eq!(g4.n(), 20);
        for v in 0..20 {
            assert_eq!(g4.degree(v).unwrap(), 15);
        }
        assert_eq!(gen_circulant_seed(3).unwrap().to_vec(), vec![0, 9, 17]);
        assert_eq!(gen_circulant_seed(4).unwrap().to_vec(), vec![0, 5, 10, 14]);
        assert!(gen_circulant(2).is_err());
    }

    #[test]
    fn circulant_first_waves() {
        // odd k: only v_{k^3 - (k^2-1)/2 - 1} activates in round one
        for k in [3usize, 5] {
            let g = gen_circulant(k).unwrap();
            let seed = gen_circulant_seed(k).unwrap();
            let trace = percolate(&g, &seed, k);
            let expect = k * k * k - (k * k - 1) / 2 - 1;
            assert_eq!(trace.waves[0].to_vec(), vec![expect], "k={k}");
        }
        // even k: only v_{k^2 + k/2 - 1}
        for k in [4usize, 6] {
            let g = gen_circulant(k).unwrap();
            let seed = gen_circulant_seed(k).unwrap();
            let trace = percolate(&g, &seed, k);
            let expect = k * k + k / 2 - 1;
            assert_eq!(trace.waves[0].to_vec(), vec![expect], "k={k}");
        }
    }

    #[test]
    fn extremal_mkk_shape() {
        let g = gen_extremal_mkk(6, 2).unwrap();
        assert_eq!(g.edge_count(), 10);
        assert_eq!(g.degree(5).unwrap(), 0);
        let out = min_contagious(&g, 2, None, &SearchConfig::default()).unwrap();
        match out {
            MinContagiousOutcome::Exact(res) => assert_eq!(res.m, 3),
            _ => panic!("expected exact result"),
        }
        assert_eq!(gen_extremal_mkk(10, 4).unwrap().degree(9).unwrap(), 0);
        assert!(gen_extremal_mkk(2, 2).is_err());
    }

    #[test]
    fn extremal_mk2_shape() {
        assert_eq!(gen_extremal_mk2(30, 3).unwrap().edge_count(), 379);
        assert_eq!(gen_extremal_mk2(30, 4).unwrap().edge_count(), 352);
        let g = gen_extremal_mk2(30, 3).unwrap();
        let out = min_contagious(&g, 2, None, &SearchConfig::default()).unwrap();
        match out {
            MinContagiousOutcome::Exact(res) => assert_eq!(res.m, 4),
            _ => panic!("expected exact result"),
        }
        assert!(gen_extremal_mk2(4, 3).is_err());
    }

    #[test]
    fn star_counterexample_shape() {
        let g = gen_star_counterexample(10, 8).unwrap();
        assert_eq!(g.edge_count(), 8);
        // edge count exceeds the extremal formula: 8 > C(3,2) + 1 = 4... the
        // relevant comparison is against C(n-k+1,2) + floor((k-1)/2) = 6
        assert!(g.edge_count() > 3 * 2 / 2 + (8 - 1) / 2);
        let out = min_contagious(&g, 2, None, &SearchConfig::default()).unwrap();
        match out {
            MinContagiousOutcome::Exact(res) => assert_eq!(res.m, 9),
            _ => panic!("expected exact result"),
        }
        assert!(gen_star_counterexample(10, 6).is_err());
    }

    #[test]
    fn ore_groups_examples() {
        let g = gen_ore_groups(12, 4, &[2, 2, 2, 2]).unwrap();
        assert!(g.is_ore());
        // seed S = {0..c-1} is not contagious
        let seed = VertexSet::from_slice(12, &[0, 1, 2, 3]);
        assert!(!is_contagious(&g, &seed, 2));

        // c = n/2 with singleton groups is DC_n
        let dc = gen_ore_groups(8, 4, &[1, 1, 1, 1]).unwrap();
        assert!(dc.detect_dc().is_some());

        assert!(gen_ore_groups(12, 4, &[2, 2, 2]).is_err());
        assert!(gen_ore_groups(12, 4, &[2, 2, 2, 3]).is_err());
        assert!(gen_ore_groups(12, 7, &[1; 7]).is_err());
    }

    #[test]
    fn random_min_degree_postconditions() {
        for seed in 0..20u64 {
            let g = gen_random_min_degree(30, 3, seed).unwrap();
            assert!(g.min_degree().unwrap() >= 20);
            assert_eq!(g, gen_random_min_degree(30, 3, seed).unwrap());
        }
        assert!(gen_random_min_degree(3, 3, 0).is_err());
    }

    #[test]
    fn random_ore_postconditions() {
        for seed in 0..20u64 {
            let g = gen_random_ore(13, seed).unwrap();
            assert!(g.is_ore());
            assert_eq!(g, gen_random_ore(13, seed).unwrap());
        }
        assert!(gen_random_ore(2, 0).is_err());
    }

    #[test]
    fn speed8_triples_all_fast() {
        let g = gen_speed8();
        for a in 0..8 {
            for b in (a + 1)..8 {
                for c in (b + 1)..8 {
                    let seed = VertexSet::from_slice(8, &[a, b, c]);
                    let t = percolation_time(&g, &seed, 2).expect("every triple is contagious");
                    assert!(t <= 3);
                }
            }
        }
    }

    #[test]
    fn family_spec_round_trip() {
        let specs = [
            FamilySpec::Dc { n: 8 },
            FamilySpec::Speed8,
            FamilySpec::Circulant { k: 5 },
            FamilySpec::OreGroups {
                n: 12,
                c: 4,
                sizes: vec![2, 2, 2, 2],
            },
            FamilySpec::RandomOre {
                n: 24,
                rng_seed: 99,
            },
        ];
        for spec in specs {
            let text = spec.to_string();
            let parsed: FamilySpec = text.parse().unwrap();
            assert_eq!(parsed, spec, "{text}");
        }
        assert!("nonsense n=3".parse::<FamilySpec>().is_err());
        assert!("dc".parse::<FamilySpec>().is_err());
    }
}
