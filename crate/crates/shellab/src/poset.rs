//! Finite posets on elements 1..m, their order complexes, and the
//! constructions that interact with strong shellability: rank selection,
//! intervals, ordinal sums, and the bounded extension P̂. A poset is called
//! strongly shellable when its order complex is.

use std::collections::HashSet;

use crate::complex::SimplicialComplex;
use crate::decision::{Budget, Decision, Stats};
use crate::error::{Error, Result};
use crate::shelling::{find_strong_shelling_order_budgeted, FacetOrder};

/// A finite poset given by relations between 1-based elements; the stored
/// cover lists are the transitive reduction of whatever relation pairs the
/// constructor received, and the reflexive-transitive closure is cached.
#[derive(Clone)]
pub struct Poset {
    m: usize,
    /// covers[x] = elements covering x, ascending (0-based).
    covers: Vec<Vec<usize>>,
    /// leq[x][y]: cached closure, reflexive (0-based).
    leq: Vec<Vec<bool>>,
}

impl Poset {
    /// Builds the poset generated by `relations` (each pair (a, b) declares
    /// a < b); the input may contain any mix of covers and implied pairs.
    pub fn new(m: usize, relations: &[(usize, usize)]) -> Result<Poset> {
        if m == 0 {
            return Err(Error::PosetEmpty);
        }
        let mut leq = vec![vec![false; m]; m];
        for (x, row) in leq.iter_mut().enumerate() {
            row[x] = true;
        }
        for &(a, b) in relations {
            for element in [a, b] {
                if element < 1 || element > m {
                    return Err(Error::ElementOutOfRange { element, m });
                }
            }
            if a == b {
                return Err(Error::PosetCycle);
            }
            leq[a - 1][b - 1] = true;
        }
        for k in 0..m {
            for i in 0..m {
                if leq[i][k] {
                    for j in 0..m {
                        if leq[k][j] {
                            leq[i][j] = true;
                        }
                    }
                }
            }
        }
        for x in 0..m {
            for y in x + 1..m {
                if leq[x][y] && leq[y][x] {
                    return Err(Error::PosetCycle);
                }
            }
        }
        let mut covers = vec![Vec::new(); m];
        for x in 0..m {
            for y in 0..m {
                if x == y || !leq[x][y] {
                    continue;
                }
                let immediate = (0..m)
                    .all(|z| z == x || z == y || !(leq[x][z] && leq[z][y]));
                if immediate {
                    covers[x].push(y);
                }
            }
        }
        Ok(Poset { m, covers, leq })
    }

    /// The single-element relations-free poset 1..m (an antichain).
    pub fn antichain(m: usize) -> Result<Poset> {
        Poset::new(m, &[])
    }

    /// The chain 1 < 2 < … < m.
    pub fn chain(m: usize) -> Result<Poset> {
        let relations: Vec<(usize, usize)> = (1..m).map(|x| (x, x + 1)).collect();
        Poset::new(m, &relations)
    }

    pub fn element_count(&self) -> usize {
        self.m
    }

    /// x ≤ y in the closure; 1-based, panics out of range.
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.leq[x - 1][y - 1]
    }

    /// x < y, i.e. x ≤ y and x ≠ y.
    pub fn less(&self, x: usize, y: usize) -> bool {
        x != y && self.leq(x, y)
    }

    /// The cover pairs (x, y) with y covering x, ascending.
    pub fn cover_pairs(&self) -> Vec<(usize, usize)> {
        let mut pairs = Vec::new();
        for (x, ys) in self.covers.iter().enumerate() {
            for &y in ys {
                pairs.push((x + 1, y + 1));
            }
        }
        pairs
    }

    fn minimal_elements(&self) -> Vec<usize> {
        (0..self.m)
            .filter(|&x| (0..self.m).all(|p| p == x || !self.leq[p][x]))
            .collect()
    }

    fn maximal_elements(&self) -> Vec<usize> {
        (0..self.m)
            .filter(|&x| (0..self.m).all(|s| s == x || !self.leq[x][s]))
            .collect()
    }

    /// The order complex: vertices are the elements and facets the maximal
    /// chains, walked through the cover lists.
    pub fn order_complex(&self) -> SimplicialComplex {
        let mut chains: Vec<Vec<usize>> = Vec::new();
        let mut chain: Vec<usize> = Vec::new();
        for x in self.minimal_elements() {
            self.extend_chain(x, &mut chain, &mut chains);
        }
        SimplicialComplex::from_facets(self.m, chains)
            .expect("a nonempty poset has a maximal chain")
    }

    fn extend_chain(&self, x: usize, chain: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        chain.push(x + 1);
        if self.covers[x].is_empty() {
            out.push(chain.clone());
        } else {
            for &y in &self.covers[x] {
                self.extend_chain(y, chain, out);
            }
        }
        chain.pop();
    }

    /// ρ(x): the common length of unrefinable chains from the synthetic
    /// bottom to x, so minimal elements have rank 1. Defined exactly when
    /// the poset is pure (all maximal chains share one length).
    pub fn rank_function(&self) -> Result<Vec<usize>> {
        let mut indegree = vec![0usize; self.m];
        for ys in &self.covers {
            for &y in ys {
                indegree[y] += 1;
            }
        }
        let mut rank = vec![0usize; self.m];
        let mut queue: Vec<usize> = self.minimal_elements();
        for &x in &queue {
            rank[x] = 1;
        }
        while let Some(x) = queue.pop() {
            for &y in &self.covers[x] {
                if rank[y] == 0 {
                    rank[y] = rank[x] + 1;
                } else if rank[y] != rank[x] + 1 {
                    return Err(Error::PosetNotPure);
                }
                indegree[y] -= 1;
                if indegree[y] == 0 {
                    queue.push(y);
                }
            }
        }
        let top_ranks: HashSet<usize> =
            self.maximal_elements().into_iter().map(|x| rank[x]).collect();
        if top_ranks.len() > 1 {
            return Err(Error::PosetNotPure);
        }
        Ok(rank)
    }

    /// The subposet of elements whose rank lies in `ranks`, relabeled in
    /// ascending element order.
    pub fn rank_selected(&self, ranks: &[usize]) -> Result<Poset> {
        let rho = self.rank_function()?;
        let r = *rho.iter().max().expect("nonempty poset");
        if ranks.iter().any(|&s| s < 1 || s > r) {
            return Err(Error::RankSetOutOfRange { r });
        }
        let select: HashSet<usize> = ranks.iter().copied().collect();
        let kept: Vec<usize> =
            (1..=self.m).filter(|&x| select.contains(&rho[x - 1])).collect();
        self.induced(&kept)
    }

    /// The interval [x, y] = {z : x ≤ z ≤ y}, relabeled in ascending element
    /// order; requires x ≤ y.
    pub fn interval(&self, x: usize, y: usize) -> Result<Poset> {
        for element in [x, y] {
            if element < 1 || element > self.m {
                return Err(Error::ElementOutOfRange { element, m: self.m });
            }
        }
        if !self.leq(x, y) {
            return Err(Error::EmptyInterval);
        }
        let kept: Vec<usize> =
            (1..=self.m).filter(|&z| self.leq(x, z) && self.leq(z, y)).collect();
        self.induced(&kept)
    }

    /// P ⊕ Q: disjoint union with everything in P below everything in Q;
    /// Q's elements are shifted up by P's element count.
    pub fn ordinal_sum(&self, other: &Poset) -> Poset {
        let mut relations = self.strict_pairs();
        for (x, y) in other.strict_pairs() {
            relations.push((x + self.m, y + self.m));
        }
        for x in 1..=self.m {
            for y in 1..=other.m {
                relations.push((x, y + self.m));
            }
        }
        Poset::new(self.m + other.m, &relations)
            .expect("an ordinal sum of posets is a poset")
    }

    /// P̂: adjoins a new bottom m+1 and top m+2.
    pub fn with_bounds(&self) -> Poset {
        let bottom = self.m + 1;
        let top = self.m + 2;
        let mut relations = self.strict_pairs();
        for x in 1..=self.m {
            relations.push((bottom, x));
            relations.push((x, top));
        }
        relations.push((bottom, top));
        Poset::new(self.m + 2, &relations).expect("adding bounds keeps a poset a poset")
    }

    fn strict_pairs(&self) -> Vec<(usize, usize)> {
        let mut pairs = Vec::new();
        for x in 1..=self.m {
            for y in 1..=self.m {
                if self.less(x, y) {
                    pairs.push((x, y));
                }
            }
        }
        pairs
    }

    fn induced(&self, kept: &[usize]) -> Result<Poset> {
        if kept.is_empty() {
            return Err(Error::PosetEmpty);
        }
        let mut relations = Vec::new();
        for (i, &x) in kept.iter().enumerate() {
            for (j, &y) in kept.iter().enumerate() {
                if i != j && self.leq(x, y) {
                    relations.push((i + 1, j + 1));
                }
            }
        }
        Poset::new(kept.len(), &relations)
    }
}

impl std::fmt::Debug for Poset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Poset({} elements, covers {:?})", self.m, self.cover_pairs())
    }
}

/// Budgeted strong-shellability decision for the order complex.
pub fn decide_strongly_shellable_poset(
    poset: &Poset,
    budget: Budget,
) -> Result<(Decision<FacetOrder>, Stats)> {
    find_strong_shelling_order_budgeted(&poset.order_complex(), budget)
}

pub fn is_strongly_shellable_poset(poset: &Poset) -> Result<bool> {
    let (decision, _) = decide_strongly_shellable_poset(poset, Budget::UNLIMITED)?;
    Ok(decision.is_yes())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    /// The zigzag 1 < 2 > 3 < 4 > 5, whose order complex is the path of
    /// four edges — the standard non-strongly-shellable pure example.
    fn fence() -> Poset {
        Poset::new(5, &[(1, 2), (3, 2), (3, 4), (5, 4)]).unwrap()
    }

    /// Covers of the 2×2 grid: two minimal elements below two maximal ones.
    fn grid2x2() -> Poset {
        Poset::new(4, &[(1, 3), (1, 4), (2, 3), (2, 4)]).unwrap()
    }

    #[test]
    fn construction_reduces_to_covers_and_caches_the_closure() {
        // The redundant (1,4) pair collapses into the two-step paths.
        let poset = Poset::new(4, &[(1, 2), (2, 4), (1, 3), (3, 4), (1, 4)]).unwrap();
        assert_eq!(poset.cover_pairs(), vec![(1, 2), (1, 3), (2, 4), (3, 4)]);
        assert!(poset.less(1, 4));
        assert!(poset.leq(2, 2));
        assert!(!poset.less(2, 3));
    }

    #[test]
    fn construction_rejects_bad_input() {
        assert_eq!(Poset::new(0, &[]).unwrap_err(), Error::PosetEmpty);
        assert_eq!(Poset::new(2, &[(1, 1)]).unwrap_err(), Error::PosetCycle);
        assert_eq!(Poset::new(2, &[(1, 2), (2, 1)]).unwrap_err(), Error::PosetCycle);
        assert_eq!(
            Poset::new(3, &[(1, 2), (2, 3), (3, 1)]).unwrap_err(),
            Error::PosetCycle
        );
        assert_eq!(
            Poset::new(2, &[(1, 3)]).unwrap_err(),
            Error::ElementOutOfRange { element: 3, m: 2 }
        );
    }

    #[test]
    fn order_complex_of_basic_posets() {
        let chain = Poset::chain(3).unwrap().order_complex();
        assert_eq!(chain.facet_count(), 1);
        assert_eq!(chain.facet(0).to_vec(), vec![1, 2, 3]);

        let antichain = Poset::antichain(2).unwrap().order_complex();
        let facets: Vec<Vec<usize>> =
            antichain.facets().iter().map(|f| f.to_vec()).collect();
        assert_eq!(facets, vec![vec![1], vec![2]]);

        let grid = grid2x2().order_complex();
        let facets: Vec<Vec<usize>> = grid.facets().iter().map(|f| f.to_vec()).collect();
        assert_eq!(facets, vec![vec![1, 3], vec![2, 3], vec![1, 4], vec![2, 4]]);
    }

    #[test]
    fn fence_order_complex_is_the_edge_path() {
        assert_eq!(fence().order_complex(), {
            // Same facets after relabeling along the zigzag.
            SimplicialComplex::from_facets(
                5,
                vec![vec![1, 2], vec![2, 3], vec![3, 4], vec![4, 5]],
            )
            .unwrap()
        });
    }

    #[test]
    fn ordinal_sum_order_complex_is_the_join() {
        let two = Poset::antichain(2).unwrap();
        let sum = two.ordinal_sum(&two);
        let complex = sum.order_complex();
        let facets: Vec<Vec<usize>> = complex.facets().iter().map(|f| f.to_vec()).collect();
        assert_eq!(facets, vec![vec![1, 3], vec![2, 3], vec![1, 4], vec![2, 4]]);
        assert_eq!(complex, two.order_complex().join(&two.order_complex()));

        for (p, q) in [
            (Poset::chain(3).unwrap(), fence()),
            (fence(), Poset::antichain(3).unwrap()),
            (grid2x2(), Poset::chain(2).unwrap()),
        ] {
            assert_eq!(
                p.ordinal_sum(&q).order_complex(),
                p.order_complex().join(&q.order_complex())
            );
        }
    }

    #[test]
    fn rank_functions_of_pure_posets() {
        assert_eq!(Poset::chain(3).unwrap().rank_function().unwrap(), vec![1, 2, 3]);
        assert_eq!(grid2x2().rank_function().unwrap(), vec![1, 1, 2, 2]);
        assert_eq!(fence().rank_function().unwrap(), vec![1, 2, 1, 2, 1]);

        let lopsided = Poset::new(4, &[(1, 2), (2, 3), (4, 3)]).unwrap();
        assert_eq!(lopsided.rank_function().unwrap_err(), Error::PosetNotPure);
    }

    #[test]
    fn rank_selection_carves_out_levels() {
        let grid = grid2x2();
        let full = grid.rank_selected(&[1, 2]).unwrap();
        assert_eq!(full.cover_pairs(), grid.cover_pairs());

        let bottoms = grid.rank_selected(&[1]).unwrap();
        assert_eq!(bottoms.element_count(), 2);
        assert!(bottoms.cover_pairs().is_empty());

        assert_eq!(grid.rank_selected(&[]).unwrap_err(), Error::PosetEmpty);
        assert_eq!(
            grid.rank_selected(&[3]).unwrap_err(),
            Error::RankSetOutOfRange { r: 2 }
        );
    }

    #[test]
    fn intervals_are_induced_subposets() {
        let chain = Poset::chain(4).unwrap();
        let inner = chain.interval(1, 3).unwrap();
        assert_eq!(inner.element_count(), 3);
        assert_eq!(inner.cover_pairs(), vec![(1, 2), (2, 3)]);

        let point = chain.interval(2, 2).unwrap();
        assert_eq!(point.element_count(), 1);

        assert_eq!(chain.interval(3, 1).unwrap_err(), Error::EmptyInterval);
        assert_eq!(
            Poset::antichain(2).unwrap().interval(1, 2).unwrap_err(),
            Error::EmptyInterval
        );
        assert_eq!(
            chain.interval(0, 2).unwrap_err(),
            Error::ElementOutOfRange { element: 0, m: 4 }
        );
    }

    #[test]
    fn strong_shellability_of_small_posets() {
        assert!(is_strongly_shellable_poset(&Poset::chain(4).unwrap()).unwrap());
        assert!(is_strongly_shellable_poset(&Poset::antichain(2).unwrap()).unwrap());
        assert!(is_strongly_shellable_poset(&grid2x2()).unwrap());
        assert!(!is_strongly_shellable_poset(&fence()).unwrap());
    }

    #[test]
    fn poset_and_bounded_extension_agree_on_strong_shellability() {
        for poset in [
            Poset::chain(3).unwrap(),
            Poset::antichain(2).unwrap(),
            grid2x2(),
            fence(),
        ] {
            assert_eq!(
                is_strongly_shellable_poset(&poset).unwrap(),
                is_strongly_shellable_poset(&poset.with_bounds()).unwrap(),
            );
        }
    }

    #[test]
    fn rank_selections_and_intervals_of_ss_posets_stay_ss() {
        // The Boolean lattice on two atoms, a pure strongly shellable poset.
        let b2 = grid2x2().with_bounds();
        assert!(is_strongly_shellable_poset(&b2).unwrap());
        let r = *b2.rank_function().unwrap().iter().max().unwrap();
        for mask in 1u32..(1 << r) {
            let ranks: Vec<usize> = (1..=r).filter(|&s| mask >> (s - 1) & 1 == 1).collect();
            let selected = b2.rank_selected(&ranks).unwrap();
            assert!(is_strongly_shellable_poset(&selected).unwrap());
        }
        for x in 1..=b2.element_count() {
            for y in 1..=b2.element_count() {
                if b2.leq(x, y) {
                    let interval = b2.interval(x, y).unwrap();
                    assert!(is_strongly_shellable_poset(&interval).unwrap());
                }
            }
        }
    }

    #[test]
    fn ordinal_sum_is_ss_iff_both_summands_are() {
        let chain = Poset::chain(2).unwrap();
        let two = Poset::antichain(2).unwrap();
        assert!(is_strongly_shellable_poset(&chain.ordinal_sum(&two)).unwrap());
        assert!(!is_strongly_shellable_poset(&chain.ordinal_sum(&fence())).unwrap());
        assert!(!is_strongly_shellable_poset(&fence().ordinal_sum(&chain)).unwrap());
        assert!(!is_strongly_shellable_poset(&fence().ordinal_sum(&fence())).unwrap());
    }

    #[test]
    fn budgeted_poset_decision_reports_undecided() {
        let (decision, stats) =
            decide_strongly_shellable_poset(&fence(), Budget::new(1)).unwrap();
        assert!(decision.is_undecided());
        assert_eq!(stats.nodes, 1);
    }

    #[test]
    fn fixture_embedding_matches_the_direct_search() {
        // The fence's order complex coincides with the edge-path fixture, so
        // the poset-level and complex-level answers must match.
        assert_eq!(fence().order_complex(), fixtures::edge_path(4));
        assert!(
            crate::shelling::find_strong_shelling_order(&fixtures::edge_path(4))
                .unwrap()
                .is_none()
        );
    }
}
