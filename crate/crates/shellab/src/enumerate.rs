//! Generators feeding the property suites: an exhaustive walk over all small
//! pure complexes, plus seeded random samplers for strongly shellable
//! complexes, graphs, and posets. All randomness is ChaCha-seeded, so every
//! caller is deterministic.

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::classes::LabeledGraph;
use crate::complex::SimplicialComplex;
use crate::poset::{is_strongly_shellable_poset, Poset};
use crate::shelling::find_strong_shelling_order;

/// Advances `idx` to the next ascending index combination drawn from
/// `0..pool`; returns false once the last combination has been visited.
fn next_combination(idx: &mut [usize], pool: usize) -> bool {
    let t = idx.len();
    let mut i = t;
    while i > 0 {
        i -= 1;
        if idx[i] < pool - t + i {
            idx[i] += 1;
            for j in i + 1..t {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// All k-subsets of 1..=n in lexicographic order.
fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.iter().map(|&i| i + 1).collect());
        if !next_combination(&mut idx, n) {
            break;
        }
    }
    out
}

/// Iterator over every pure complex on ambient vertex set 1..=n with at most
/// `max_facets` facets: for each cardinality k the facet sets range over all
/// nonempty collections of distinct k-subsets, so each complex appears
/// exactly once (equal-cardinality sets are automatically maximal).
pub struct PureComplexes {
    n: usize,
    max_facets: usize,
    k: usize,
    pool: Vec<Vec<usize>>,
    indices: Vec<usize>,
}

pub fn pure_complexes(n: usize, max_facets: usize) -> PureComplexes {
    let k = if max_facets == 0 { n + 1 } else { 1 };
    PureComplexes {
        n,
        max_facets,
        k,
        pool: if k <= n { k_subsets(n, 1) } else { Vec::new() },
        indices: vec![0],
    }
}

impl Iterator for PureComplexes {
    type Item = SimplicialComplex;

    fn next(&mut self) -> Option<SimplicialComplex> {
        if self.k > self.n {
            return None;
        }
        let facets: Vec<Vec<usize>> =
            self.indices.iter().map(|&i| self.pool[i].clone()).collect();
        let complex = SimplicialComplex::from_facets(self.n, facets)
            .expect("distinct equal-cardinality sets form a pure facet list");
        self.step();
        Some(complex)
    }
}

impl PureComplexes {
    fn step(&mut self) {
        if next_combination(&mut self.indices, self.pool.len()) {
            return;
        }
        let t = self.indices.len();
        if t < self.max_facets.min(self.pool.len()) {
            self.indices = (0..=t).collect();
            return;
        }
        self.k += 1;
        if self.k <= self.n {
            self.pool = k_subsets(self.n, self.k);
            self.indices = vec![0];
        }
    }
}

fn random_pure_candidate(rng: &mut ChaCha8Rng, max_n: usize, max_facets: usize) -> SimplicialComplex {
    let n = rng.gen_range(3..=max_n);
    let k = rng.gen_range(1..n);
    let pool = k_subsets(n, k);
    let t = rng.gen_range(2..=max_facets.min(pool.len()));
    let picks = sample(rng, pool.len(), t);
    let facets: Vec<Vec<usize>> = picks.iter().map(|i| pool[i].clone()).collect();
    SimplicialComplex::from_facets(n, facets).expect("sampled facets are valid")
}

fn random_mixed_candidate(rng: &mut ChaCha8Rng, max_n: usize, max_faces: usize) -> SimplicialComplex {
    let n = rng.gen_range(3..=max_n);
    let t = rng.gen_range(2..=max_faces);
    let faces: Vec<Vec<usize>> = (0..t)
        .map(|_| {
            let c = rng.gen_range(1..=n);
            sample(rng, n, c).iter().map(|v| v + 1).collect()
        })
        .collect();
    // Dominated samples are absorbed, so the result may have fewer facets.
    SimplicialComplex::from_facets(n, faces).expect("sampled faces are valid")
}

/// `count` strongly shellable complexes (mixed dimensions allowed, at least
/// two facets each) on at most `max_n` vertices, by rejection sampling.
pub fn random_ss_complexes(
    seed: u64,
    count: usize,
    max_n: usize,
    max_faces: usize,
) -> Vec<SimplicialComplex> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let candidate = random_mixed_candidate(&mut rng, max_n, max_faces);
        if candidate.facet_count() >= 2
            && find_strong_shelling_order(&candidate)
                .expect("small complex")
                .is_some()
        {
            out.push(candidate);
        }
    }
    out
}

/// `count` pure strongly shellable complexes with at least two facets.
pub fn random_pure_ss_complexes(
    seed: u64,
    count: usize,
    max_n: usize,
    max_facets: usize,
) -> Vec<SimplicialComplex> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let candidate = random_pure_candidate(&mut rng, max_n, max_facets);
        if find_strong_shelling_order(&candidate)
            .expect("small complex")
            .is_some()
        {
            out.push(candidate);
        }
    }
    out
}

/// `count` loop-free graphs with distinct edges, up to `max_edges` edges on
/// up to `max_vertices` labeled vertices.
pub fn random_graphs(
    seed: u64,
    count: usize,
    max_vertices: usize,
    max_edges: usize,
) -> Vec<LabeledGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let v = rng.gen_range(3..=max_vertices);
            let pairs: Vec<(usize, usize)> =
                (1..=v).flat_map(|a| (a + 1..=v).map(move |b| (a, b))).collect();
            let e = rng.gen_range(1..=max_edges.min(pairs.len()));
            let edges: Vec<(usize, usize)> =
                sample(&mut rng, pairs.len(), e).iter().map(|i| pairs[i]).collect();
            LabeledGraph::new(v, edges).expect("sampled edges are distinct and loop-free")
        })
        .collect()
}

/// `count` pure strongly shellable posets on at most `max_elements` elements,
/// by rejection sampling over random DAGs (relations only point upward in
/// the labeling, so acyclicity is automatic).
pub fn random_pure_ss_posets(seed: u64, count: usize, max_elements: usize) -> Vec<Poset> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let m = rng.gen_range(2..=max_elements);
        let mut relations = Vec::new();
        for a in 1..=m {
            for b in a + 1..=m {
                if rng.gen_bool(0.4) {
                    relations.push((a, b));
                }
            }
        }
        let poset = Poset::new(m, &relations).expect("upward relations cannot cycle");
        if poset.rank_function().is_ok()
            && is_strongly_shellable_poset(&poset).expect("small order complex")
        {
            out.push(poset);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::face::Face;
    use crate::graph::Graph;
    use std::collections::HashSet;

    #[test]
    fn pure_complex_counts_match_the_closed_forms() {
        // Σ_k Σ_{t=1..min(8,C(n,k))} C(C(n,k), t), computed by hand.
        assert_eq!(pure_complexes(4, 3).count(), 70);
        assert_eq!(pure_complexes(5, 8).count(), 2087);
    }

    #[test]
    fn pure_complexes_are_pure_distinct_and_within_bounds() {
        let mut seen: HashSet<Vec<Face>> = HashSet::new();
        let mut total = 0usize;
        for complex in pure_complexes(4, 3) {
            assert!(complex.is_pure());
            assert!(complex.facet_count() <= 3);
            assert_eq!(complex.n(), 4);
            assert!(seen.insert(complex.facets().to_vec()));
            total += 1;
        }
        assert_eq!(total, 70);
    }

    #[test]
    fn pure_complexes_walk_starts_at_a_point_and_reaches_the_simplex() {
        let all: Vec<SimplicialComplex> = pure_complexes(4, 3).collect();
        assert_eq!(all[0].facet(0).to_vec(), vec![1]);
        assert!(all
            .iter()
            .any(|c| c.facet_count() == 1 && c.facet(0).to_vec() == vec![1, 2, 3, 4]));
    }

    #[test]
    fn empty_enumerations_yield_nothing() {
        assert_eq!(pure_complexes(4, 0).count(), 0);
        assert_eq!(pure_complexes(0, 3).count(), 0);
    }

    #[test]
    fn random_ss_complexes_verify_and_are_deterministic() {
        let batch = random_ss_complexes(7, 20, 5, 5);
        assert_eq!(batch.len(), 20);
        for complex in &batch {
            assert!(complex.facet_count() >= 2);
            assert!(find_strong_shelling_order(complex).unwrap().is_some());
        }
        assert!(batch.iter().zip(random_ss_complexes(7, 20, 5, 5).iter()).all(|(a, b)| a == b));
    }

    #[test]
    fn random_pure_ss_complexes_are_pure_and_verify() {
        for complex in random_pure_ss_complexes(11, 20, 6, 5) {
            assert!(complex.is_pure());
            assert!(complex.facet_count() >= 2);
            assert!(find_strong_shelling_order(&complex).unwrap().is_some());
        }
    }

    #[test]
    fn random_graphs_respect_their_bounds() {
        for graph in random_graphs(3, 25, 5, 7) {
            assert!(graph.vertex_count() <= 5);
            assert!(graph.edge_count() <= 7);
        }
    }

    #[test]
    fn distance_preserving_orders_need_girth_at_most_four() {
        // Whenever the deletion-order search succeeds on a connected graph,
        // its girth is 0 (acyclic) or at most 4.
        let mut successes = 0usize;
        for labeled in random_graphs(42, 120, 6, 9) {
            let mut graph = Graph::new(labeled.vertex_count()).unwrap();
            for &(u, v) in labeled.edges() {
                graph.add_edge(u - 1, v - 1);
            }
            if graph.distance_preserving_order().is_some() {
                successes += 1;
                let girth = graph.girth();
                assert!(girth == 0 || girth <= 4);
            }
        }
        assert!(successes > 0);
    }

    #[test]
    fn random_posets_are_pure_and_strongly_shellable() {
        let batch = random_pure_ss_posets(5, 10, 5);
        assert_eq!(batch.len(), 10);
        for poset in &batch {
            assert!(poset.rank_function().is_ok());
            assert!(is_strongly_shellable_poset(poset).unwrap());
        }
    }
}
