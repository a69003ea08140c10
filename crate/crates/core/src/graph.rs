//! Simple undirected graphs on vertices `0..n` with one bitset row per
//! vertex, plus the structural predicates the dense-graph results hinge
//! on: minimum degree, the Ore condition, and recognition of the
//! double-clique graph `DC_n` (two n/2-cliques joined by a perfect
//! matching).

use crate::bitset::VertexSet;
use crate::error::{invalid, Error, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    edge_count: usize,
}

impl Graph {
    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: (0..n).map(|_| VertexSet::new(n)).collect(),
            edge_count: 0,
        }
    }

    /// Builds from an edge list. Rejects self-loops, out-of-range ids and
    /// duplicate edges; `(u, v)` and `(v, u)` count as duplicates.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n);
        for &(u, v) in edges {
            g.add_edge_checked(u, v)?;
        }
        Ok(g)
    }

    fn add_edge_checked(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n || v >= self.n {
            return Err(invalid(format!(
                "edge ({u}, {v}) out of range for n = {}",
                self.n
            )));
        }
        if u == v {
            return Err(invalid(format!("self-loop at vertex {u}")));
        }
        if self.adj[u].contains(v) {
            return Err(invalid(format!("duplicate edge ({u}, {v})")));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        self.edge_count += 1;
        Ok(())
    }

    /// Copy of `self` with one extra edge; graphs are immutable once
    /// built, so edge-addition experiments work on copies.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Self> {
        let mut g = self.clone();
        g.add_edge_checked(u, v)?;
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    /// Neighbor row; panics on out-of-range `v` (internal callers only
    /// pass valid ids).
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        if v >= self.n {
            return Err(invalid(format!(
                "vertex {v} out of range for n = {}",
                self.n
            )));
        }
        Ok(self.adj[v].len())
    }

    pub fn min_degree(&self) -> Result<usize> {
        if self.n == 0 {
            return Err(invalid("min_degree of the empty graph"));
        }
        Ok((0..self.n).map(|v| self.adj[v].len()).min().unwrap())
    }

    /// Edges as sorted `(u, v)` pairs with `u < v`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Non-adjacent pairs `u < v`, sorted.
    pub fn non_edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if !self.adj[u].contains(v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Ore condition: every non-adjacent pair of distinct vertices has
    /// degree sum at least `n`. Dirac graphs (min degree ≥ n/2) satisfy
    /// this trivially.
    pub fn is_ore(&self) -> bool {
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if !self.adj[u].contains(v) && self.adj[u].len() + self.adj[v].len() < self.n {
                    return false;
                }
            }
        }
        true
    }

    /// Dirac condition: minimum degree at least ⌈n/2⌉.
    pub fn is_dirac(&self) -> bool {
        self.n > 0 && self.min_degree().unwrap() >= self.n.div_ceil(2)
    }

    /// Recognizes `DC_n`. The graph must be n/2-regular with even n; for
    /// n ≥ 6 the matching partner of vertex 0 is its unique neighbor that
    /// shares no neighbor with it, which pins the bipartition. n = 4 is
    /// degenerate (the 4-cycle has two valid splits), so both candidate
    /// splits are tried against the full verifier.
    pub fn detect_dc(&self) -> Option<DcPartition> {
        let n = self.n;
        if n < 2 || !n.is_multiple_of(2) {
            return None;
        }
        let half = n / 2;
        if (0..n).any(|v| self.adj[v].len() != half) {
            return None;
        }
        if n == 2 {
            return self.check_dc_partition(&VertexSet::from_slice(2, &[0]));
        }
        if n == 4 {
            for u in self.adj[0].iter() {
                if let Some(dc) = self.check_dc_partition(&VertexSet::from_slice(4, &[0, u])) {
                    return Some(dc);
                }
            }
            return None;
        }
        let nb0 = &self.adj[0];
        let mut partner = None;
        for u in nb0.iter() {
            if self.adj[u].intersection_count(nb0) == 0 {
                if partner.is_some() {
                    return None;
                }
                partner = Some(u);
            }
        }
        let partner = partner?;
        let mut side_a = nb0.clone();
        side_a.remove(partner);
        side_a.insert(0);
        self.check_dc_partition(&side_a)
    }

    fn check_dc_partition(&self, side_a: &VertexSet) -> Option<DcPartition> {
        let n = self.n;
        let half = n / 2;
        if side_a.len() != half {
            return None;
        }
        let side_b = side_a.complement();
        for (side, other) in [(side_a, &side_b), (&side_b, side_a)] {
            for v in side.iter() {
                // clique inside, exactly one matching edge across
                if self.adj[v].intersection_count(side) != half - 1
                    || self.adj[v].intersection_count(other) != 1
                {
                    return None;
                }
            }
        }
        let mut matching = Vec::with_capacity(half);
        for a in side_a.iter() {
            let b = self.adj[a].iter().find(|&x| side_b.contains(x))?;
            matching.push((a, b));
        }
        Some(DcPartition {
            side_a: side_a.clone(),
            side_b,
            matching,
        })
    }

    /// Full invariant scan: symmetry, no self-loops, range, edge count.
    pub fn validate(&self) -> Result<()> {
        let mut degree_sum = 0usize;
        for u in 0..self.n {
            if self.adj[u].universe() != self.n {
                return Err(Error::Internal(format!("row {u} has wrong universe")));
            }
            if self.adj[u].contains(u) {
                return Err(Error::Internal(format!("self-loop at {u}")));
            }
            for v in self.adj[u].iter() {
                if v >= self.n {
                    return Err(Error::Internal(format!("neighbor {v} out of range")));
                }
                if !self.adj[v].contains(u) {
                    return Err(Error::Internal(format!("asymmetric edge ({u}, {v})")));
                }
            }
            degree_sum += self.adj[u].len();
        }
        if degree_sum != 2 * self.edge_count {
            return Err(Error::Internal(format!(
                "degree sum {degree_sum} does not match edge count {}",
                self.edge_count
            )));
        }
        Ok(())
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Graph(n={}, m={}, edges={:?})",
            self.n,
            self.edge_count,
            self.edges()
        )
    }
}

/// Witness for a successful `DC_n` detection: the two cliques and the
/// cross matching as `(a, b)` pairs sorted by the `side_a` endpoint.
/// `side_a` is the side containing vertex 0.
#[derive(Clone, Debug)]
pub struct DcPartition {
    pub side_a: VertexSet,
    pub side_b: VertexSet,
    pub matching: Vec<(usize, usize)>,
}

impl DcPartition {
    /// Matching partner of `v`, whichever side it lies on.
    pub fn partner(&self, v: usize) -> Option<usize> {
        self.matching.iter().find_map(|&(a, b)| match v {
            x if x == a => Some(b),
            x if x == b => Some(a),
            _ => None,
        })
    }
}

/// Complete graph, used all over the tests.
pub fn complete(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    #[test]
    fn degree_examples() {
        let k3 = complete(3);
        assert_eq!(k3.degree(0).unwrap(), 2);

        let dc6 = generators::gen_dc(6).unwrap();
        for v in 0..6 {
            assert_eq!(dc6.degree(v).unwrap(), 3);
        }

        let speed8 = generators::gen_speed8();
        // v4 is id 3: edges v1v4, v3v4, v4v5, v4v7, v4v8
        assert_eq!(speed8.degree(3).unwrap(), 5);

        assert!(k3.degree(5).is_err());
    }

    #[test]
    fn min_degree_examples() {
        assert_eq!(complete(5).min_degree().unwrap(), 4);
        assert_eq!(generators::gen_speed8().min_degree().unwrap(), 4);
        let circ = generators::gen_circulant(3).unwrap();
        assert_eq!(circ.n(), 27);
        assert_eq!(circ.min_degree().unwrap(), 18);
        assert!(Graph::empty(0).min_degree().is_err());
    }

    #[test]
    fn ore_examples() {
        assert!(generators::gen_dc(8).unwrap().is_ore());
        let ore = generators::gen_ore_groups(12, 4, &[2, 2, 2, 2]).unwrap();
        assert!(ore.is_ore());
        let path3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(!path3.is_ore());
    }

    #[test]
    fn detect_dc_on_generated() {
        for n in [4usize, 6, 8, 10, 12] {
            let g = generators::gen_dc(n).unwrap();
            let dc = g.detect_dc().expect("gen_dc must be detected");
            assert_eq!(dc.side_a.len(), n / 2);
            assert_eq!(dc.matching.len(), n / 2);
            assert!(dc.side_a.contains(0));
            // every matching pair is a cross edge
            for &(a, b) in &dc.matching {
                assert!(g.has_edge(a, b));
                assert!(dc.side_a.contains(a) && dc.side_b.contains(b));
            }
        }
    }

    #[test]
    fn detect_dc_rejects_k6_and_k33() {
        assert!(complete(6).detect_dc().is_none());
        let mut edges = Vec::new();
        for u in 0..3 {
            for v in 3..6 {
                edges.push((u, v));
            }
        }
        let k33 = Graph::from_edges(6, &edges).unwrap();
        assert!(k33.detect_dc().is_none());
    }

    #[test]
    fn detect_dc_on_c4() {
        let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        let dc = c4.detect_dc().expect("C4 is DC_4");
        assert_eq!(dc.side_a.len(), 2);
    }

    #[test]
    fn non_edges_examples() {
        assert!(complete(4).non_edges().is_empty());
        assert_eq!(Graph::empty(3).non_edges().len(), 3);
        let extremal = generators::gen_extremal_mk2(30, 3).unwrap();
        assert_eq!(extremal.edge_count(), 379);
        assert_eq!(extremal.non_edges().len(), 56); // C(30,2) - 379
    }

    #[test]
    fn with_edge_copies() {
        let g = Graph::empty(3);
        let h = g.with_edge(0, 1).unwrap();
        assert_eq!(g.edge_count(), 0);
        assert_eq!(h.edge_count(), 1);
        assert!(h.with_edge(0, 1).is_err());
        assert!(h.with_edge(1, 1).is_err());
    }

    #[test]
    fn validate_generated() {
        for g in [
            generators::gen_dc(8).unwrap(),
            generators::gen_speed8(),
            generators::gen_circulant(4).unwrap(),
            generators::gen_clique_minus_matching(7).unwrap(),
        ] {
            g.validate().unwrap();
        }
    }
}
