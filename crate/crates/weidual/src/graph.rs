//! Multigraphs and their cycle matroids: bond and cycle families, the
//! b/c sequences with their partition theorem, subgraph maximality
//! checks, and closed forms for complete and complete bipartite graphs.
//!
//! Edges are identified by their position in the edge list, so parallel
//! edges are distinct ground-set elements and loops are rank-zero
//! elements.
//!
//! Indexing convention: the sequences are indexed so that they
//! increase, `b_i = n - f_{k-i}` and `c_j = n - f*_{(n-k)-j}`. The
//! minimum over unions of `i` irredundant bonds (resp. `j` cycles) is
//! computed independently and must agree with the f-profile route; the
//! two routes are asserted against each other on every call.

use std::sync::Arc;

use thiserror::Error;

use crate::demimatroid::{check_partition, PartitionCheck};
use crate::matroid::{min_irredundant_union, CircuitFamily, Matroid, MatroidError, RankOracle};
use crate::subset::{card, GroundSet, GroundSetError, Mask, DEFAULT_ENUM_CAP, MAX_ELEMENTS};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("edge ({u}, {v}) points outside the {vertices}-vertex set")]
    BadEndpoint { u: usize, v: usize, vertices: usize },
    #[error("graph has {0} edges; at most {MAX_ELEMENTS} are supported")]
    TooManyEdges(usize),
    #[error("complete bipartite closed forms require l >= m >= 1, got l = {l}, m = {m}")]
    BadBipartiteParameters { l: usize, m: usize },
    #[error("complete graph closed forms require at least one vertex")]
    EmptyGraph,
    #[error("bond/cycle routes disagree: {side} index {index} gives {via_profile} via the profile but {via_unions} via irredundant unions")]
    RouteMismatch {
        side: &'static str,
        index: usize,
        via_profile: usize,
        via_unions: usize,
    },
    #[error(transparent)]
    Matroid(#[from] MatroidError),
    #[error(transparent)]
    Ground(#[from] GroundSetError),
}

/// An undirected multigraph; loops and parallel edges allowed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multigraph {
    vertices: usize,
    edges: Vec<(usize, usize)>,
}

impl Multigraph {
    pub fn new(vertices: usize, edges: Vec<(usize, usize)>) -> Result<Multigraph, GraphError> {
        if edges.len() > MAX_ELEMENTS {
            return Err(GraphError::TooManyEdges(edges.len()));
        }
        for &(u, v) in &edges {
            if u >= vertices || v >= vertices {
                return Err(GraphError::BadEndpoint { u, v, vertices });
            }
        }
        Ok(Multigraph { vertices, edges })
    }

    /// The complete graph K_m, edges in lexicographic order.
    pub fn complete(m: usize) -> Multigraph {
        let edges = (0..m)
            .flat_map(|u| (u + 1..m).map(move |v| (u, v)))
            .collect();
        Multigraph { vertices: m, edges }
    }

    /// The complete bipartite graph K_{l,m} on vertex parts
    /// `0..l` and `l..l+m`, edges in lexicographic order.
    pub fn complete_bipartite(l: usize, m: usize) -> Multigraph {
        let edges = (0..l)
            .flat_map(|u| (0..m).map(move |v| (u, l + v)))
            .collect();
        Multigraph {
            vertices: l + m,
            edges,
        }
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.vertices
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Rank of an edge subset in the cycle matroid: vertices minus the
    /// number of connected components of the spanning subgraph, by
    /// union-find. Loops contribute nothing.
    pub fn spanning_rank(&self, subset: Mask) -> usize {
        let mut parent: Vec<u32> = (0..self.vertices as u32).collect();
        fn find(parent: &mut [u32], mut a: u32) -> u32 {
            while parent[a as usize] != a {
                parent[a as usize] = parent[parent[a as usize] as usize];
                a = parent[a as usize];
            }
            a
        }
        let mut rank = 0usize;
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            if subset >> i & 1 == 0 {
                continue;
            }
            let ru = find(&mut parent, u as u32);
            let rv = find(&mut parent, v as u32);
            if ru != rv {
                parent[ru as usize] = rv;
                rank += 1;
            }
        }
        rank
    }

    /// The cycle matroid M(G) on the edge set.
    pub fn cycle_matroid(&self) -> Matroid {
        let ground = GroundSet::new(self.edges.len()).expect("edge count checked at construction");
        Matroid::from_oracle(ground, Arc::new(GraphicOracle { graph: self.clone() }))
    }

    /// Size of every spanning forest: the rank of the full edge set.
    pub fn forest_size(&self) -> usize {
        self.spanning_rank(crate::subset::full(self.edges.len()))
    }

    /// Bonds: minimal edge cut-sets, i.e. cocircuits of the cycle
    /// matroid.
    pub fn bonds(&self) -> Result<CircuitFamily, GraphError> {
        self.bonds_capped(DEFAULT_ENUM_CAP)
    }

    pub fn bonds_capped(&self, cap: usize) -> Result<CircuitFamily, GraphError> {
        Ok(self.cycle_matroid().cocircuits_capped(cap)?)
    }

    /// Cycles: circuits of the cycle matroid.
    pub fn cycles(&self) -> Result<CircuitFamily, GraphError> {
        self.cycles_capped(DEFAULT_ENUM_CAP)
    }

    pub fn cycles_capped(&self, cap: usize) -> Result<CircuitFamily, GraphError> {
        Ok(self.cycle_matroid().circuits_capped(cap)?)
    }

    /// The sequences `b_1 < .. < b_k` (minimum edges in a union of i
    /// irredundant bonds) and `c_1 < .. < c_{n-k}` (same for cycles),
    /// computed both from the f-profile and by direct irredundant-union
    /// search, which must agree. Returns the induced sets
    /// `U_G = {b_i}` and `V_G = {n+1-c_j}` with their partition
    /// verdict.
    pub fn bc_sequences(&self) -> Result<BondCycleSequences, GraphError> {
        self.bc_sequences_capped(DEFAULT_ENUM_CAP)
    }

    pub fn bc_sequences_capped(&self, cap: usize) -> Result<BondCycleSequences, GraphError> {
        let m = self.cycle_matroid();
        let n = self.edge_count();
        let k = m.k();
        let profile = m.f_coefficients_capped(cap)?;
        let b: Vec<usize> = (1..=k).map(|i| n - profile.f[k - i]).collect();
        let c: Vec<usize> = (1..=n - k).map(|j| n - profile.fstar[n - k - j]).collect();

        let bonds = self.bonds_capped(cap)?;
        let cycles = self.cycles_capped(cap)?;
        for (i, &expected) in b.iter().enumerate() {
            let got = min_irredundant_union(&bonds, i + 1)?.size;
            if got != expected {
                return Err(GraphError::RouteMismatch {
                    side: "b",
                    index: i + 1,
                    via_profile: expected,
                    via_unions: got,
                });
            }
        }
        for (j, &expected) in c.iter().enumerate() {
            let got = min_irredundant_union(&cycles, j + 1)?.size;
            if got != expected {
                return Err(GraphError::RouteMismatch {
                    side: "c",
                    index: j + 1,
                    via_profile: expected,
                    via_unions: got,
                });
            }
        }

        let u: Vec<usize> = b.clone();
        let v: Vec<usize> = c.iter().rev().map(|&cj| n + 1 - cj).collect();
        let check = check_partition(n, &u, &v);
        Ok(BondCycleSequences { b, c, u, v, check })
    }

    /// Checks the two subgraph-maximality statements behind the b/c
    /// sequences by exhaustive scan:
    ///
    /// * `n - b_i` is the maximum number of edges in a subgraph whose
    ///   spanning forests have `k - i` edges;
    /// * `n - c_j` is the maximum size of an edge set from which no
    ///   `(n-k)-j+1` edges can be removed without disconnecting what
    ///   the full graph spans.
    pub fn max_subgraph_check(&self) -> Result<MaxSubgraphReport, GraphError> {
        self.max_subgraph_check_capped(DEFAULT_ENUM_CAP)
    }

    pub fn max_subgraph_check_capped(&self, cap: usize) -> Result<MaxSubgraphReport, GraphError> {
        let seqs = self.bc_sequences_capped(cap)?;
        let n = self.edge_count();
        let k = self.forest_size();
        let full = crate::subset::full(n);
        let rank_of: Vec<usize> = (0..1u64 << n).map(|x| self.spanning_rank(x)).collect();

        let mut bond_side = Vec::new();
        for (i, &bi) in seqs.b.iter().enumerate() {
            let target = k - (i + 1);
            let scan_max = (0..1u64 << n)
                .filter(|&x| rank_of[x as usize] == target)
                .map(card)
                .max()
                .unwrap_or(0);
            bond_side.push(MaxSubgraphLine {
                index: i + 1,
                stated: n - bi,
                scanned: scan_max,
                ok: n - bi == scan_max,
            });
        }

        let mut cycle_side = Vec::new();
        for (j, &cj) in seqs.c.iter().enumerate() {
            let removal = (n - k) - (j + 1) + 1;
            let mut scan_max = 0usize;
            for x in 0..1u64 << n {
                // Every removal-sized subset of x must break the span.
                let mut ok = true;
                let mut sub: Mask = x;
                loop {
                    if card(sub) == removal && rank_of[(full & !sub) as usize] == k {
                        ok = false;
                        break;
                    }
                    if sub == 0 {
                        break;
                    }
                    sub = (sub - 1) & x;
                }
                if ok && card(x) > scan_max {
                    scan_max = card(x);
                }
            }
            cycle_side.push(MaxSubgraphLine {
                index: j + 1,
                stated: n - cj,
                scanned: scan_max,
                ok: n - cj == scan_max,
            });
        }

        let ok = bond_side.iter().chain(&cycle_side).all(|l| l.ok);
        Ok(MaxSubgraphReport {
            bond_side,
            cycle_side,
            ok,
        })
    }
}

struct GraphicOracle {
    graph: Multigraph,
}

impl RankOracle for GraphicOracle {
    fn rank(&self, subset: Mask) -> usize {
        self.graph.spanning_rank(subset)
    }
}

/// The bond and cycle sequences of a graph with the sets they induce.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BondCycleSequences {
    pub b: Vec<usize>,
    pub c: Vec<usize>,
    pub u: Vec<usize>,
    pub v: Vec<usize>,
    pub check: PartitionCheck,
}

/// One verified line of [`Multigraph::max_subgraph_check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaxSubgraphLine {
    pub index: usize,
    pub stated: usize,
    pub scanned: usize,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaxSubgraphReport {
    pub bond_side: Vec<MaxSubgraphLine>,
    pub cycle_side: Vec<MaxSubgraphLine>,
    pub ok: bool,
}

/// Closed-form b- and c-sets for the complete graph K_m:
/// `{n - C(i,2)}` and the complement of `{C(i,2) + 1}` in `{1, .., n}`,
/// `i = 1..=k`, with `n = C(m,2)` and `k = m - 1`.
pub fn km_closed_form(m: usize) -> Result<(Vec<usize>, Vec<usize>), GraphError> {
    if m == 0 {
        return Err(GraphError::EmptyGraph);
    }
    let n = m * (m - 1) / 2;
    let k = m - 1;
    let choose2 = |i: usize| i * (i - 1) / 2;
    let mut b: Vec<usize> = (1..=k).map(|i| n - choose2(i)).collect();
    b.sort_unstable();
    let excluded: Vec<usize> = (1..=k).map(|i| choose2(i) + 1).collect();
    let c: Vec<usize> = (1..=n).filter(|v| !excluded.contains(v)).collect();
    Ok((b, c))
}

/// Closed-form b- and c-sets for the complete bipartite graph K_{l,m},
/// `l >= m >= 1`, with `n = l m` and `k = l + m - 1`.
pub fn klm_closed_form(l: usize, m: usize) -> Result<(Vec<usize>, Vec<usize>), GraphError> {
    if m == 0 || l < m {
        return Err(GraphError::BadBipartiteParameters { l, m });
    }
    let n = l * m;
    let mut b: Vec<usize> = (1..=l - m).map(|i| i * m).collect();
    b.extend((1..=2 * m - 1).map(|i| n - i * i / 4));
    b.sort_unstable();
    b.dedup();
    let mut excluded: Vec<usize> = (1..=l - m).map(|i| n + 1 - i * m).collect();
    excluded.extend((1..=2 * m - 1).map(|i| i * i / 4 + 1));
    let c: Vec<usize> = (1..=n).filter(|v| !excluded.contains(v)).collect();
    Ok((b, c))
}
