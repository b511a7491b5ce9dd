//! Shelling-order and strong-shelling-order verification and search.
//!
//! An order F_1, …, F_t of the facets is a shelling order when every pair
//! i < j has a witness k < j with |F_j ∖ F_k| = 1 and F_j ∖ F_k ⊆ F_j ∖ F_i;
//! it is a *strong* shelling order when the witness also satisfies
//! F_k ∖ F_j ⊆ F_i (equivalently F_i ∩ F_j ⊆ F_k ⊆ F_i ∪ F_j). The searches
//! backtrack over order prefixes, trying candidates in ascending canonical
//! facet index, so the first solution in lexicographic index order is found —
//! and a placed prefix is rejected as soon as some pair lacks a witness,
//! which is exact because witnesses must precede the later facet.

use std::collections::HashSet;

use crate::complex::SimplicialComplex;
use crate::decision::{Budget, Decision, Meter, Stats};
use crate::error::{Error, Result};
use crate::face::Face;

/// Maximum facet count supported by the subset-mask search machinery.
pub const MAX_FACETS: usize = 128;

/// A permutation of the facet indices 0..t; "earlier" means "shelled first".
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FacetOrder(Vec<usize>);

impl FacetOrder {
    /// Validates that the sequence is a permutation of 0..len.
    pub fn new(order: Vec<usize>) -> Result<FacetOrder> {
        let t = order.len();
        let mut seen = vec![false; t];
        for &i in &order {
            if i >= t || seen[i] {
                return Err(Error::NotAPermutation);
            }
            seen[i] = true;
        }
        Ok(FacetOrder(order))
    }

    pub fn identity(t: usize) -> FacetOrder {
        FacetOrder((0..t).collect())
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn reversed(&self) -> FacetOrder {
        FacetOrder(self.0.iter().rev().copied().collect())
    }

    /// positions[facet] = place of the facet in this order.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.0.len()];
        for (place, &facet) in self.0.iter().enumerate() {
            pos[facet] = place;
        }
        pos
    }

    fn check_matches(&self, complex: &SimplicialComplex) -> Result<()> {
        if self.0.len() != complex.facet_count() {
            return Err(Error::NotAPermutation);
        }
        Ok(())
    }
}

impl std::fmt::Debug for FacetOrder {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "order{:?}", self.0)
    }
}

/// Which witness conditions a placement must satisfy.
#[derive(Clone, Copy, PartialEq, Eq)]
pub(crate) enum Flavor {
    Plain,
    Strong,
    /// Strong witnesses further constrained by dim F_k ≤ dim F_i, inside a
    /// dimension-decreasing order.
    Quasi,
}

/// Precomputed pairwise data for witness checks on one complex.
pub(crate) struct Engine<'a> {
    facets: &'a [Face],
    t: usize,
    /// |F_i ∖ F_j|, saturated at u8::MAX.
    diff: Vec<u8>,
    card: Vec<usize>,
}

impl<'a> Engine<'a> {
    pub(crate) fn new(complex: &'a SimplicialComplex) -> Engine<'a> {
        let facets = complex.facets();
        let t = facets.len();
        let mut diff = vec![0u8; t * t];
        for i in 0..t {
            for j in 0..t {
                diff[i * t + j] = facets[i].difference_size(&facets[j]).min(255) as u8;
            }
        }
        let card = facets.iter().map(Face::cardinality).collect();
        Engine { facets, t, diff, card }
    }

    #[inline]
    pub(crate) fn diff_size(&self, i: usize, j: usize) -> usize {
        self.diff[i * self.t + j] as usize
    }

    /// Witness conditions for the pair (F_i, F_j) with candidate F_k:
    /// (1) |F_j ∖ F_k| = 1, (2) F_j ∖ F_k ⊆ F_j ∖ F_i, for the strong and
    /// quasi flavors (3) F_k ∖ F_j ⊆ F_i, and for the quasi flavor also
    /// dim F_k ≤ dim F_i.
    #[inline]
    pub(crate) fn witnesses(&self, flavor: Flavor, i: usize, j: usize, k: usize) -> bool {
        if self.diff_size(j, k) != 1 {
            return false;
        }
        if flavor == Flavor::Quasi && self.card[k] > self.card[i] {
            return false;
        }
        let fi = &self.facets[i];
        let fj = &self.facets[j];
        let fk = &self.facets[k];
        if !fj.difference(fk).intersection(fi).is_empty() {
            return false;
        }
        flavor == Flavor::Plain || fk.difference(fj).is_subset(fi)
    }

}

fn verify(complex: &SimplicialComplex, order: &FacetOrder, flavor: Flavor) -> Result<bool> {
    if complex.is_void() {
        return Err(Error::VoidComplex);
    }
    order.check_matches(complex)?;
    let eng = Engine::new(complex);
    let ord = order.as_slice();
    if flavor == Flavor::Quasi {
        let decreasing = ord
            .windows(2)
            .all(|w| eng.card[w[0]] >= eng.card[w[1]]);
        if !decreasing {
            return Ok(false);
        }
    }
    for j in 1..ord.len() {
        for i in 0..j {
            let witnessed =
                (0..j).any(|k| eng.witnesses(flavor, ord[i], ord[j], ord[k]));
            if !witnessed {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

pub(crate) fn verify_flavor(
    complex: &SimplicialComplex,
    order: &FacetOrder,
    flavor: Flavor,
) -> Result<bool> {
    verify(complex, order, flavor)
}

/// Checks the two-condition (Björner–Wachs style) shelling criterion.
pub fn is_shelling_order(complex: &SimplicialComplex, order: &FacetOrder) -> Result<bool> {
    verify(complex, order, Flavor::Plain)
}

/// Checks the three-condition strong shelling criterion.
pub fn is_strong_shelling_order(complex: &SimplicialComplex, order: &FacetOrder) -> Result<bool> {
    verify(complex, order, Flavor::Strong)
}

enum Walk {
    Found,
    Exhausted,
    Aborted,
}

struct Searcher {
    t: usize,
    full: u128,
    /// wit[i*t + j] = mask of facets k that witness the ordered pair
    /// (F_i placed before F_j).
    wit: Vec<u128>,
    /// unwitnessable[f] = mask of facets g that no facet of the complex can
    /// witness after f, i.e. g must precede f in every valid order.
    unwitnessable: Vec<u128>,
    /// cardinality[f], used by the dimension-decreasing flavor.
    card: Vec<usize>,
    flavor: Flavor,
    meter: Meter,
    /// Placed-facet sets known to admit no completion. Whether a set can be
    /// completed is independent of the order it was placed in.
    failed: HashSet<u128>,
    prefix: Vec<usize>,
    placed: u128,
}

impl Searcher {
    fn new(eng: &Engine<'_>, flavor: Flavor, budget: Budget) -> Searcher {
        let t = eng.t;
        let full = if t == 128 { u128::MAX } else { (1u128 << t) - 1 };
        let mut wit = vec![0u128; t * t];
        let mut unwitnessable = vec![0u128; t];
        for i in 0..t {
            for j in 0..t {
                if i == j {
                    continue;
                }
                let mut mask = 0u128;
                for k in 0..t {
                    if k != j && eng.witnesses(flavor, i, j, k) {
                        mask |= 1u128 << k;
                    }
                }
                wit[i * t + j] = mask;
                if mask == 0 {
                    unwitnessable[i] |= 1u128 << j;
                }
            }
        }
        Searcher {
            t,
            full,
            wit,
            unwitnessable,
            card: eng.card.clone(),
            flavor,
            meter: Meter::new(budget),
            failed: HashSet::new(),
            prefix: Vec::with_capacity(t),
            placed: 0,
        }
    }

    /// Placement feasibility depends only on the *set* of placed facets,
    /// which is what makes memoization on the placed mask sound. Besides the
    /// witness requirement for every placed facet, placing f is hopeless if
    /// some still-unplaced g can never be witnessed after f.
    fn can_place(&self, f: usize) -> bool {
        if self.unwitnessable[f] & !self.placed & self.full != 0 {
            return false;
        }
        if self.flavor == Flavor::Quasi
            && self.prefix.iter().any(|&i| self.card[i] < self.card[f])
        {
            return false;
        }
        self.prefix.iter().all(|&i| self.wit[i * self.t + f] & self.placed != 0)
    }

    fn dfs(&mut self) -> Walk {
        if self.prefix.len() == self.t {
            return Walk::Found;
        }
        if self.failed.contains(&self.placed) {
            return Walk::Exhausted;
        }
        for f in 0..self.t {
            if self.placed & (1u128 << f) != 0 {
                continue;
            }
            if !self.meter.charge() {
                return Walk::Aborted;
            }
            if self.can_place(f) {
                self.prefix.push(f);
                self.placed |= 1u128 << f;
                match self.dfs() {
                    Walk::Found => return Walk::Found,
                    Walk::Aborted => return Walk::Aborted,
                    Walk::Exhausted => {
                        self.prefix.pop();
                        self.placed &= !(1u128 << f);
                    }
                }
            }
        }
        self.failed.insert(self.placed);
        Walk::Exhausted
    }
}

pub(crate) fn search(
    complex: &SimplicialComplex,
    flavor: Flavor,
    budget: Budget,
) -> Result<(Decision<FacetOrder>, Stats)> {
    if complex.is_void() {
        return Err(Error::VoidComplex);
    }
    let t = complex.facet_count();
    if t > MAX_FACETS {
        return Err(Error::TooManyFacets { got: t, max: MAX_FACETS });
    }
    let mut searcher = Searcher::new(&Engine::new(complex), flavor, budget);
    let walk = searcher.dfs();
    let stats = searcher.meter.stats();
    let decision = match walk {
        Walk::Found => {
            let order = FacetOrder(std::mem::take(&mut searcher.prefix));
            debug_assert_eq!(verify(complex, &order, flavor), Ok(true));
            Decision::Yes(order)
        }
        Walk::Exhausted => Decision::No,
        Walk::Aborted => Decision::Undecided,
    };
    Ok((decision, stats))
}

/// First strong shelling order in lexicographic index order, if any.
pub fn find_strong_shelling_order(complex: &SimplicialComplex) -> Result<Option<FacetOrder>> {
    let (decision, _) = search(complex, Flavor::Strong, Budget::UNLIMITED)?;
    Ok(decision.witness())
}

/// Budgeted variant; an exhausted budget yields [`Decision::Undecided`].
pub fn find_strong_shelling_order_budgeted(
    complex: &SimplicialComplex,
    budget: Budget,
) -> Result<(Decision<FacetOrder>, Stats)> {
    search(complex, Flavor::Strong, budget)
}

/// First shelling order in lexicographic index order, if any.
pub fn find_shelling_order(complex: &SimplicialComplex) -> Result<Option<FacetOrder>> {
    let (decision, _) = search(complex, Flavor::Plain, Budget::UNLIMITED)?;
    Ok(decision.witness())
}

pub fn find_shelling_order_budgeted(
    complex: &SimplicialComplex,
    budget: Budget,
) -> Result<(Decision<FacetOrder>, Stats)> {
    search(complex, Flavor::Plain, budget)
}

/// The order ⊢ induced by `order`: facets sorted by decreasing dimension,
/// ties broken by their place in `order` (a stable sort).
pub fn dimension_related_order(complex: &SimplicialComplex, order: &FacetOrder) -> Result<FacetOrder> {
    order.check_matches(complex)?;
    let mut sorted = order.as_slice().to_vec();
    sorted.sort_by_key(|&f| std::cmp::Reverse(complex.facet(f).dim()));
    Ok(FacetOrder(sorted))
}

/// Rearranges a strong shelling order into the dimension-decreasing strong
/// shelling order it induces.
pub fn dimension_decreasing_reorder(
    complex: &SimplicialComplex,
    order: &FacetOrder,
) -> Result<FacetOrder> {
    if !is_strong_shelling_order(complex, order)? {
        return Err(Error::NotAStrongShellingOrder);
    }
    let reordered = dimension_related_order(complex, order)?;
    if !is_strong_shelling_order(complex, &reordered)? {
        return Err(Error::Internal(
            "dimension-decreasing rearrangement must stay a strong shelling order".into(),
        ));
    }
    Ok(reordered)
}

/// Pairs (F_i, F_j) of facet indices with F_i ⊢_{ord1} F_j and F_j ≻_{ord2}
/// F_i, i.e. inversions of ord2 relative to the dimension-related order
/// induced by ord1. With ord2 = ord1 this is the classic inversion set:
/// pairs where the later facet has strictly larger dimension.
pub fn relative_inverse_pairs(
    complex: &SimplicialComplex,
    ord1: &FacetOrder,
    ord2: &FacetOrder,
) -> Result<Vec<(usize, usize)>> {
    ord1.check_matches(complex)?;
    ord2.check_matches(complex)?;
    let pos1 = ord1.positions();
    let pos2 = ord2.positions();
    let t = complex.facet_count();
    let mut pairs = Vec::new();
    for fi in 0..t {
        for fj in 0..t {
            if fi == fj {
                continue;
            }
            let di = complex.facet(fi).dim();
            let dj = complex.facet(fj).dim();
            let related = di > dj || (di == dj && pos1[fi] < pos1[fj]);
            if related && pos2[fj] < pos2[fi] {
                pairs.push((fi, fj));
            }
        }
    }
    pairs.sort_unstable();
    Ok(pairs)
}

/// The subcomplex generated by the interval [F_a, F_b] of `order`: all
/// facets from F_a through F_b inclusive.
pub fn interval_subcomplex(
    complex: &SimplicialComplex,
    order: &FacetOrder,
    facet_a: usize,
    facet_b: usize,
) -> Result<SimplicialComplex> {
    order.check_matches(complex)?;
    if facet_a >= complex.facet_count() || facet_b >= complex.facet_count() {
        return Err(Error::NotAFacet);
    }
    let pos = order.positions();
    let (a, b) = (pos[facet_a], pos[facet_b]);
    if a > b {
        return Err(Error::BadInterval);
    }
    let faces: Vec<Face> =
        order.as_slice()[a..=b].iter().map(|&f| complex.facet(f).clone()).collect();
    SimplicialComplex::from_faces(complex.n(), faces)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn cx(n: usize, facets: &[&[usize]]) -> SimplicialComplex {
        SimplicialComplex::from_facets(n, facets.iter().map(|f| f.iter().copied())).unwrap()
    }

    #[test]
    fn facet_order_validation() {
        assert!(FacetOrder::new(vec![2, 0, 1]).is_ok());
        assert_eq!(FacetOrder::new(vec![0, 0]).unwrap_err(), Error::NotAPermutation);
        assert_eq!(FacetOrder::new(vec![0, 2]).unwrap_err(), Error::NotAPermutation);
    }

    #[test]
    fn triangle_path_listed_order_is_strong() {
        let c = fixtures::triangle_path(4);
        let order = FacetOrder::identity(4);
        assert!(is_shelling_order(&c, &order).unwrap());
        assert!(is_strong_shelling_order(&c, &order).unwrap());
    }

    #[test]
    fn single_facet_is_trivially_shellable() {
        let c = cx(3, &[&[1, 2, 3]]);
        let order = FacetOrder::identity(1);
        assert!(is_shelling_order(&c, &order).unwrap());
        assert!(is_strong_shelling_order(&c, &order).unwrap());
    }

    #[test]
    fn disjoint_edges_are_not_shellable() {
        let c = cx(4, &[&[1, 2], &[3, 4]]);
        for perm in [vec![0, 1], vec![1, 0]] {
            let order = FacetOrder::new(perm).unwrap();
            assert!(!is_shelling_order(&c, &order).unwrap());
        }
        assert_eq!(find_shelling_order(&c).unwrap(), None);
    }

    #[test]
    fn five_triangle_path_is_not_strongly_shellable() {
        let c = fixtures::triangle_path(5);
        assert!(!is_strong_shelling_order(&c, &FacetOrder::identity(5)).unwrap());
        assert_eq!(find_strong_shelling_order(&c).unwrap(), None);
        // It is still (plain) shellable.
        let plain = find_shelling_order(&c).unwrap().unwrap();
        assert!(is_shelling_order(&c, &plain).unwrap());
    }

    #[test]
    fn octet_listed_order_is_strong() {
        let (c, order) = fixtures::ss_not_hereditary_listed();
        assert!(is_strong_shelling_order(&c, &order).unwrap());
    }

    #[test]
    fn search_returns_lexicographically_first_order() {
        let c = fixtures::triangle_path(4);
        let found = find_strong_shelling_order(&c).unwrap().unwrap();
        assert_eq!(found.as_slice(), &[0, 1, 2, 3]);
        assert!(is_strong_shelling_order(&c, &found).unwrap());
    }

    #[test]
    fn hexagon_band_has_no_shelling_order_at_all() {
        // Every facet placed after the first needs an already-placed facet at
        // distance one, so placed sets grow as arcs of the 6-cycle; each of
        // the six 4-facet arcs admits neither extension (checked exhaustively
        // over all 720 orders by an independent oracle).
        let c = fixtures::hexagon_band();
        assert_eq!(find_strong_shelling_order(&c).unwrap(), None);
        assert_eq!(find_shelling_order(&c).unwrap(), None);
    }

    #[test]
    fn budget_aborts_with_undecided() {
        let c = fixtures::triangle_path(5);
        let (decision, stats) =
            find_strong_shelling_order_budgeted(&c, Budget::new(3)).unwrap();
        assert!(decision.is_undecided());
        assert_eq!(stats.nodes, 3);
    }

    #[test]
    fn strong_implies_plain_on_fixture_orders() {
        let (c, order) = fixtures::mixed_dimensions_listed();
        assert!(is_strong_shelling_order(&c, &order).unwrap());
        assert!(is_shelling_order(&c, &order).unwrap());
    }

    #[test]
    fn reorder_keeps_dimension_decreasing_input() {
        let (c, order) = fixtures::mixed_dimensions_listed();
        let reordered = dimension_decreasing_reorder(&c, &order).unwrap();
        assert_eq!(reordered.as_slice(), order.as_slice());
    }

    #[test]
    fn reorder_rejects_non_strong_input() {
        let c = fixtures::triangle_path(5);
        let err = dimension_decreasing_reorder(&c, &FacetOrder::identity(5)).unwrap_err();
        assert_eq!(err, Error::NotAStrongShellingOrder);
    }

    #[test]
    fn relative_inverse_pairs_examples() {
        let (c, order) = fixtures::mixed_dimensions_listed();
        // Self-relative inversions: later facet with strictly larger dimension.
        let inv = relative_inverse_pairs(&c, &order, &order).unwrap();
        assert!(inv.is_empty());

        // Reverse the order: the large facet now comes last.
        let rev = order.reversed();
        let inv_rev = relative_inverse_pairs(&c, &rev, &rev).unwrap();
        let big = c.facets().iter().position(|f| f.cardinality() == 4).unwrap();
        assert!(!inv_rev.is_empty());
        assert!(inv_rev.iter().all(|&(i, _)| i == big));

        // Relative to its own induced dimension-related order: empty.
        let induced = dimension_related_order(&c, &rev).unwrap();
        assert!(relative_inverse_pairs(&c, &rev, &induced).unwrap().is_empty());
    }

    #[test]
    fn interval_subcomplex_endpoints() {
        let c = fixtures::triangle_path(4);
        let order = FacetOrder::identity(4);
        let whole = interval_subcomplex(&c, &order, order.as_slice()[0], order.as_slice()[3])
            .unwrap();
        assert_eq!(whole, c);
        let single = interval_subcomplex(&c, &order, 2, 2).unwrap();
        assert_eq!(single.facet_count(), 1);
        assert!(interval_subcomplex(&c, &order, 3, 0).is_err());
    }

    #[test]
    fn restriction_of_sso_to_initial_interval_is_sso() {
        let (c, order) = fixtures::ss_not_hereditary_listed();
        for cut in 1..=order.len() {
            let prefix: Vec<Face> =
                order.as_slice()[..cut].iter().map(|&f| c.facet(f).clone()).collect();
            let sub = SimplicialComplex::from_faces(c.n(), prefix.clone()).unwrap();
            let perm: Vec<usize> = prefix.iter().map(|f| sub.facet_index(f).unwrap()).collect();
            let sub_order = FacetOrder::new(perm).unwrap();
            assert!(is_strong_shelling_order(&sub, &sub_order).unwrap());
        }
    }

    #[test]
    fn void_complex_is_excluded_from_shellability() {
        let void = cx(2, &[&[]]);
        assert_eq!(
            is_shelling_order(&void, &FacetOrder::identity(1)).unwrap_err(),
            Error::VoidComplex
        );
        assert_eq!(find_strong_shelling_order(&void).unwrap_err(), Error::VoidComplex);
    }
}
