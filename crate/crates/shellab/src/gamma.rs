//! The codimension-one graph Γ(Δ) — facets as vertices, edges between
//! facets at distance one — and the decision procedures built on it:
//! harmonious and quasi-harmonious tests, distance-preserving orders, and
//! the distance-based characterization of pure strong shellability.

use crate::complex::SimplicialComplex;
use crate::decision::{Budget, Decision, Stats};
use crate::error::{Error, Result};
use crate::graph::{Graph, GraphMetrics, INF};
use crate::shelling::{
    self, is_strong_shelling_order, FacetOrder, Flavor, MAX_FACETS,
};

/// The codimension-one graph of a complex: one vertex per facet (in
/// canonical facet order), an edge exactly between facets at distance one,
/// plus the all-pairs graph-distance matrix.
pub struct CodimGraph {
    graph: Graph,
    dist: Vec<Vec<u32>>,
}

impl CodimGraph {
    /// Builds Γ(Δ). Vertex i is facet i of the canonical facet list.
    pub fn from_complex(complex: &SimplicialComplex) -> Result<CodimGraph> {
        let t = complex.facet_count();
        if t > MAX_FACETS {
            return Err(Error::TooManyFacets { got: t, max: MAX_FACETS });
        }
        let mut graph = Graph::new(t)?;
        for i in 0..t {
            for j in (i + 1)..t {
                if complex.facet_distance(i, j) == 1 {
                    graph.add_edge(i, j);
                }
            }
        }
        let dist = graph.distances();
        Ok(CodimGraph { graph, dist })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.n()
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.graph.has_edge(i, j)
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.graph.edges()
    }

    /// Graph distance between facets i and j; [`INF`] when disconnected.
    pub fn distance(&self, i: usize, j: usize) -> u32 {
        self.dist[i][j]
    }

    /// Connectivity, girth, and diameter of Γ.
    pub fn metrics(&self) -> GraphMetrics {
        self.graph.metrics()
    }

    /// An order deleting one facet-vertex at a time without disturbing any
    /// surviving pairwise distance, if one exists.
    pub fn distance_preserving_order(&self) -> Option<Vec<usize>> {
        self.graph.distance_preserving_order()
    }
}

/// True when graph distance in Γ(Δ) equals facet distance for every facet
/// pair. An unreachable pair counts as a disagreement, since facet distance
/// is always finite.
pub fn is_harmonious(complex: &SimplicialComplex) -> Result<bool> {
    let gamma = CodimGraph::from_complex(complex)?;
    let t = complex.facet_count();
    for i in 0..t {
        for j in (i + 1)..t {
            let in_graph = gamma.distance(i, j);
            if in_graph == INF || in_graph as usize != complex.facet_distance(i, j) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Searches for a dimension-decreasing strong shelling order in which every
/// pair F_i ≻ F_j has a witness F_k ≻ F_j with |F_j ∖ F_k| = 1,
/// F_i ∩ F_j ⊆ F_k ⊆ F_i ∪ F_j, and dim F_i ≥ dim F_k ≥ dim F_j. The first
/// such order in lexicographic facet-index order is returned.
pub fn quasi_harmonious_order_budgeted(
    complex: &SimplicialComplex,
    budget: Budget,
) -> Result<(Decision<FacetOrder>, Stats)> {
    shelling::search(complex, Flavor::Quasi, budget)
}

/// Unbudgeted variant of [`quasi_harmonious_order_budgeted`].
pub fn quasi_harmonious_order(complex: &SimplicialComplex) -> Result<Option<FacetOrder>> {
    let (decision, _) = quasi_harmonious_order_budgeted(complex, Budget::UNLIMITED)?;
    Ok(decision.witness())
}

/// True when some order as in [`quasi_harmonious_order_budgeted`] exists.
pub fn is_quasi_harmonious(complex: &SimplicialComplex) -> Result<bool> {
    Ok(quasi_harmonious_order(complex)?.is_some())
}

/// Checks that `order` witnesses quasi-harmoniousness: dimension-decreasing
/// and every pair has a witness as in [`quasi_harmonious_order_budgeted`].
pub fn is_quasi_harmonious_order(
    complex: &SimplicialComplex,
    order: &FacetOrder,
) -> Result<bool> {
    shelling::verify_flavor(complex, order, Flavor::Quasi)
}

/// Decides strong shellability of a pure complex through its
/// codimension-one graph: the complex is strongly shellable exactly when
/// Γ(Δ) is harmonious and admits a distance-preserving order, and then the
/// reverse of that order is a strong shelling order. The returned order is
/// re-verified against the direct criterion.
pub fn pure_strong_shelling_via_distances(
    complex: &SimplicialComplex,
) -> Result<Option<FacetOrder>> {
    if complex.is_void() {
        return Err(Error::VoidComplex);
    }
    if !complex.is_pure() {
        return Err(Error::NotPure);
    }
    if !is_harmonious(complex)? {
        return Ok(None);
    }
    let gamma = CodimGraph::from_complex(complex)?;
    let Some(deletions) = gamma.distance_preserving_order() else {
        return Ok(None);
    };
    let order = FacetOrder::new(deletions.into_iter().rev().collect())?;
    if !is_strong_shelling_order(complex, &order)? {
        return Err(Error::Internal(
            "reversed distance-preserving order failed the strong shelling check".into(),
        ));
    }
    Ok(Some(order))
}

/// Shortest chain length from facet `from` to facet `to` moving only
/// through steps of facet distance one that never increase dimension.
/// Returns [`INF`] when no such chain exists.
pub fn monotone_chain_distance(
    complex: &SimplicialComplex,
    from: usize,
    to: usize,
) -> u32 {
    let t = complex.facet_count();
    let mut dist = vec![INF; t];
    dist[from] = 0;
    let mut queue = std::collections::VecDeque::from([from]);
    while let Some(g) = queue.pop_front() {
        if g == to {
            return dist[g];
        }
        for h in 0..t {
            if dist[h] == INF
                && complex.facet_distance(g, h) == 1
                && complex.facet(h).cardinality() <= complex.facet(g).cardinality()
            {
                dist[h] = dist[g] + 1;
                queue.push_back(h);
            }
        }
    }
    dist[to]
}
