//! Small undirected graphs on up to 128 vertices, with the distance
//! machinery behind the codimension-one graph: all-pairs shortest paths,
//! girth/diameter metrics, and distance-preserving deletion orders.

use std::collections::HashSet;

use crate::error::{Error, Result};

/// Unreachable distance.
pub const INF: u32 = u32::MAX;

/// Adjacency-mask graph on vertices 0..n, n ≤ 128.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<u128>,
}

impl Graph {
    pub fn new(n: usize) -> Result<Graph> {
        if n > 128 {
            return Err(Error::TooManyFacets { got: n, max: 128 });
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.adj[u] |= 1u128 << v;
        self.adj[v] |= 1u128 << u;
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] & (1u128 << v) != 0
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    fn full_mask(&self) -> u128 {
        if self.n == 128 {
            u128::MAX
        } else {
            (1u128 << self.n) - 1
        }
    }

    /// BFS distances from `source` inside the induced subgraph on `alive`.
    pub fn bfs_within(&self, source: usize, alive: u128) -> Vec<u32> {
        debug_assert!(alive & (1u128 << source) != 0);
        let mut dist = vec![INF; self.n];
        dist[source] = 0;
        let mut frontier: u128 = 1u128 << source;
        let mut seen: u128 = frontier;
        let mut level = 0u32;
        while frontier != 0 {
            level += 1;
            let mut next: u128 = 0;
            let mut rest = frontier;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                next |= self.adj[v] & alive & !seen;
            }
            seen |= next;
            let mut newly = next;
            while newly != 0 {
                let v = newly.trailing_zeros() as usize;
                newly &= newly - 1;
                dist[v] = level;
            }
            frontier = next;
        }
        dist
    }

    /// All-pairs distances on the whole graph.
    pub fn distances(&self) -> Vec<Vec<u32>> {
        let alive = self.full_mask();
        (0..self.n).map(|v| self.bfs_within(v, alive)).collect()
    }

    /// All-pairs distances on the induced subgraph; rows/columns of dead
    /// vertices are left at INF (and a dead source row is all INF).
    pub fn distances_within(&self, alive: u128) -> Vec<Vec<u32>> {
        (0..self.n)
            .map(|v| {
                if alive & (1u128 << v) != 0 {
                    self.bfs_within(v, alive)
                } else {
                    vec![INF; self.n]
                }
            })
            .collect()
    }

    /// Length of a shortest cycle, or 0 when the graph is a forest. Found by
    /// dropping each edge and measuring the detour between its endpoints.
    pub fn girth(&self) -> usize {
        let mut best = INF;
        for (u, v) in self.edges() {
            let mut cut = self.clone();
            cut.adj[u] &= !(1u128 << v);
            cut.adj[v] &= !(1u128 << u);
            let d = cut.bfs_within(u, cut.full_mask())[v];
            if d != INF {
                best = best.min(d + 1);
            }
        }
        if best == INF {
            0
        } else {
            best as usize
        }
    }

    /// (connected, girth, diameter); diameter is None for a disconnected
    /// graph. The empty graph on one vertex is connected with diameter 0.
    pub fn metrics(&self) -> GraphMetrics {
        let dist = self.distances();
        let mut connected = true;
        let mut diameter = 0u32;
        for row in &dist {
            for &d in row {
                if d == INF {
                    connected = false;
                } else {
                    diameter = diameter.max(d);
                }
            }
        }
        GraphMetrics {
            connected,
            girth: self.girth(),
            diameter: connected.then_some(diameter as usize),
        }
    }

    /// Searches for an order v_1, …, v_t deleting the vertices one at a time
    /// so that each deletion preserves all pairwise distances among the
    /// survivors (∞ staying ∞ is fine, finite becoming ∞ or changing is
    /// not). The last two deletions are unconstrained — with ≤ 2 vertices
    /// left there is no pair to preserve. Candidates are tried in ascending
    /// vertex index and the first order in that branch order is returned.
    pub fn distance_preserving_order(&self) -> Option<Vec<usize>> {
        if self.n == 0 {
            return Some(Vec::new());
        }
        let alive = self.full_mask();
        let dist = self.distances_within(alive);
        let mut search = DpoSearch { graph: self, dead_ends: HashSet::new(), order: Vec::new() };
        if search.dfs(alive, &dist) {
            Some(search.order)
        } else {
            None
        }
    }
}

/// Summary metrics of a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphMetrics {
    pub connected: bool,
    /// 0 when the graph has no cycle.
    pub girth: usize,
    /// None when disconnected.
    pub diameter: Option<usize>,
}

struct DpoSearch<'a> {
    graph: &'a Graph,
    /// Survivor sets from which no completion exists.
    dead_ends: HashSet<u128>,
    order: Vec<usize>,
}

impl<'a> DpoSearch<'a> {
    fn dfs(&mut self, alive: u128, dist: &[Vec<u32>]) -> bool {
        let remaining = alive.count_ones();
        if remaining <= 2 {
            // No surviving pair to constrain; delete in ascending order.
            let mut rest = alive;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                self.order.push(v);
            }
            return true;
        }
        if self.dead_ends.contains(&alive) {
            return false;
        }
        let mut candidates = alive;
        while candidates != 0 {
            let v = candidates.trailing_zeros() as usize;
            candidates &= candidates - 1;
            let next_alive = alive & !(1u128 << v);
            if let Some(next_dist) = self.delete_preserving(v, alive, dist) {
                self.order.push(v);
                if self.dfs(next_alive, &next_dist) {
                    return true;
                }
                self.order.pop();
            }
        }
        self.dead_ends.insert(alive);
        false
    }

    /// Distances after deleting v, or None when a surviving pair's distance
    /// changes. Only the component of v needs re-measuring: deleting v
    /// cannot touch shortest paths that never reach its component.
    fn delete_preserving(&self, v: usize, alive: u128, dist: &[Vec<u32>]) -> Option<Vec<Vec<u32>>> {
        let next_alive = alive & !(1u128 << v);
        let mut component: u128 = 0;
        let mut rest = alive;
        while rest != 0 {
            let u = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if dist[v][u] != INF {
                component |= 1u128 << u;
            }
        }
        let mut next = dist.to_vec();
        next[v] = vec![INF; self.graph.n()];
        for row in next.iter_mut() {
            row[v] = INF;
        }
        let mut sources = component & next_alive;
        while sources != 0 {
            let u = sources.trailing_zeros() as usize;
            sources &= sources - 1;
            let fresh = self.graph.bfs_within(u, next_alive);
            let mut targets = next_alive;
            while targets != 0 {
                let w = targets.trailing_zeros() as usize;
                targets &= targets - 1;
                if fresh[w] != dist[u][w] {
                    return None;
                }
            }
            next[u] = fresh;
        }
        Some(next)
    }
}
