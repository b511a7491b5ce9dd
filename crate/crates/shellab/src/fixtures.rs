//! Worked example complexes shared by tests, the acceptance suite and the
//! benchmarks. Each constructor documents the properties the fixture
//! exhibits; the listed variants also return the facet order in which the
//! fixture is usually written down, mapped to canonical facet indices.

use crate::complex::SimplicialComplex;
use crate::face::Face;
use crate::shelling::FacetOrder;

fn build(n: usize, sets: &[&[usize]]) -> SimplicialComplex {
    SimplicialComplex::from_facets(n, sets.iter().map(|s| s.iter().copied()))
        .expect("fixture facet lists are valid")
}

/// Maps a facet listing to the [`FacetOrder`] it spells out.
pub fn order_of_listing(complex: &SimplicialComplex, listed: &[&[usize]]) -> FacetOrder {
    let perm: Vec<usize> = listed
        .iter()
        .map(|set| {
            let face = Face::from_vertices(complex.n(), set.iter().copied())
                .expect("listed facet is valid");
            complex.facet_index(&face).expect("listed set is a facet")
        })
        .collect();
    FacetOrder::new(perm).expect("listing is a permutation")
}

/// The path of `len` triangles ⟨{i,i+1,i+2}⟩ on len+2 vertices. Strongly
/// shellable for len ≤ 4; for len = 5 the end facets are at distance 3 in
/// the complex but 4 in its codimension-one graph, so it is not.
pub fn triangle_path(len: usize) -> SimplicialComplex {
    let sets: Vec<Vec<usize>> = (1..=len).map(|i| vec![i, i + 1, i + 2]).collect();
    SimplicialComplex::from_facets(len + 2, sets).unwrap()
}

/// The edge path ⟨{1,2},{2,3},{3,4},{4,5}⟩: its codimension-one graph is a
/// path, with dis_Γ({1,2},{4,5}) = 3 exceeding dis_Δ = 2.
pub fn edge_path(len: usize) -> SimplicialComplex {
    let sets: Vec<Vec<usize>> = (1..=len).map(|i| vec![i, i + 1]).collect();
    SimplicialComplex::from_facets(len + 1, sets).unwrap()
}

/// ⟨{1,2,4,5},{1,2,3},{4,5,6}⟩: nonpure, strongly shellable in the listed
/// (dimension-decreasing) order, while pure_2 = ⟨{1,2,3},{4,5,6}⟩ is not
/// shellable at all.
pub fn mixed_dimensions() -> SimplicialComplex {
    build(6, MIXED_DIMENSIONS_LISTING)
}

const MIXED_DIMENSIONS_LISTING: &[&[usize]] = &[&[1, 2, 4, 5], &[1, 2, 3], &[4, 5, 6]];

pub fn mixed_dimensions_listed() -> (SimplicialComplex, FacetOrder) {
    let c = mixed_dimensions();
    let order = order_of_listing(&c, MIXED_DIMENSIONS_LISTING);
    (c, order)
}

/// The band of six 3-dimensional facets whose codimension-one graph is a
/// 6-cycle: harmonious, yet without a distance-preserving order, so not
/// strongly shellable (in fact it has no shelling order at all).
pub fn hexagon_band() -> SimplicialComplex {
    build(
        7,
        &[
            &[1, 2, 3, 4],
            &[2, 3, 4, 5],
            &[3, 4, 5, 6],
            &[4, 5, 6, 7],
            &[1, 4, 6, 7],
            &[1, 2, 4, 7],
        ],
    )
}

const SS_NOT_HEREDITARY_LISTING: &[&[usize]] = &[
    &[1, 2, 8],
    &[1, 2, 5],
    &[2, 5, 6],
    &[1, 2, 4],
    &[1, 2, 7],
    &[1, 3, 4],
    &[1, 2, 6],
    &[1, 2, 3],
];

/// Eight triangles, strongly shellable in the listed order, whose
/// restriction to {3,4,5,6,7,8} = ⟨{3,4},{5,6},{7},{8}⟩ is not shellable —
/// so strong shellability is not hereditary.
pub fn ss_not_hereditary() -> SimplicialComplex {
    build(8, SS_NOT_HEREDITARY_LISTING)
}

pub fn ss_not_hereditary_listed() -> (SimplicialComplex, FacetOrder) {
    let c = ss_not_hereditary();
    let order = order_of_listing(&c, SS_NOT_HEREDITARY_LISTING);
    (c, order)
}

/// ⟨126,134,146,235,256,345,346,356⟩: hereditary-shellable and weakly
/// matroidal, but not strongly shellable.
pub fn hereditary_not_ss() -> SimplicialComplex {
    build(
        6,
        &[
            &[1, 2, 6],
            &[1, 3, 4],
            &[1, 4, 6],
            &[2, 3, 5],
            &[2, 5, 6],
            &[3, 4, 5],
            &[3, 4, 6],
            &[3, 5, 6],
        ],
    )
}

/// The nonpure shifted complex with eleven facets: shifted complexes are
/// hereditary-shellable, but this one is not strongly shellable (the facets
/// {1,2} and {3,4,5} admit no witness).
pub fn shifted_nonpure() -> SimplicialComplex {
    build(
        6,
        &[
            &[1, 2],
            &[1, 3, 6],
            &[1, 4, 6],
            &[1, 5, 6],
            &[2, 3, 6],
            &[2, 4, 6],
            &[2, 5, 6],
            &[3, 4, 5],
            &[3, 4, 6],
            &[3, 5, 6],
            &[4, 5, 6],
        ],
    )
}

/// ⟨2356,123,234,345,456⟩: strongly shellable and quasi-harmonious, but not
/// harmonious (it is nonpure, so graph distances cannot match everywhere).
pub fn quasi_harmonious_only() -> SimplicialComplex {
    build(6, &[&[2, 3, 5, 6], &[1, 2, 3], &[2, 3, 4], &[3, 4, 5], &[4, 5, 6]])
}

/// ⟨34567,24567,23567,23467,2345,167⟩: strongly shellable but not
/// quasi-harmonious — the pair ({2,3,4,5},{1,6,7}) has no witness of
/// dimension between theirs in any dimension-decreasing order.
pub fn ss_not_quasi_harmonious() -> SimplicialComplex {
    build(
        7,
        &[
            &[3, 4, 5, 6, 7],
            &[2, 4, 5, 6, 7],
            &[2, 3, 5, 6, 7],
            &[2, 3, 4, 6, 7],
            &[2, 3, 4, 5],
            &[1, 6, 7],
        ],
    )
}

/// ⟨123,124,125,126,134,135,136,245⟩: hereditarily strongly shellable but
/// not a matroid complex (its restriction to {4,5,6} is not pure).
pub fn hereditarily_ss_not_matroid() -> SimplicialComplex {
    build(
        6,
        &[
            &[1, 2, 3],
            &[1, 2, 4],
            &[1, 2, 5],
            &[1, 2, 6],
            &[1, 3, 4],
            &[1, 3, 5],
            &[1, 3, 6],
            &[2, 4, 5],
        ],
    )
}

/// Spanning trees of the diamond graph (K4 minus an edge) with edges
/// labeled 1..5: the cycle matroid ⟨124,134,234,125,135,235,145,245⟩.
pub fn diamond_spanning_trees() -> SimplicialComplex {
    build(
        5,
        &[
            &[1, 2, 4],
            &[1, 3, 4],
            &[2, 3, 4],
            &[1, 2, 5],
            &[1, 3, 5],
            &[2, 3, 5],
            &[1, 4, 5],
            &[2, 4, 5],
        ],
    )
}

/// Vertex numbering of the tripartite grid: a_i = i, b_j = 4+j, c_k = 8+k.
fn a(i: usize) -> usize {
    i
}
fn b(j: usize) -> usize {
    4 + j
}
fn c(k: usize) -> usize {
    8 + k
}

fn tripartite_grid_listing() -> Vec<Vec<usize>> {
    let mut listing = Vec::with_capacity(76);
    for i in 1..=4 {
        for j in 1..=4 {
            for k in 1..=4 {
                listing.push(vec![a(i), b(j), c(k)]);
            }
        }
    }
    let extras: [[usize; 3]; 12] = [
        [a(2), b(1), b(2)],
        [a(2), a(3), b(2)],
        [a(3), b(2), b(3)],
        [a(3), a(4), b(3)],
        [b(1), c(1), c(2)],
        [b(1), b(4), c(2)],
        [b(4), c(2), c(3)],
        [b(4), b(2), c(3)],
        [c(1), a(3), a(1)],
        [c(1), c(4), a(1)],
        [c(4), a(1), a(4)],
        [c(4), c(2), a(4)],
    ];
    listing.extend(extras.iter().map(|e| e.to_vec()));
    listing
}

/// The 76-facet complex on three vertex groups a_1..a_4 = 1..4,
/// b_1..b_4 = 5..8, c_1..c_4 = 9..12: all triples {a_i, b_j, c_k} plus
/// twelve two-in-one-group triangles. Strongly shellable (the listed order
/// works) but not vertex decomposable.
pub fn tripartite_grid() -> SimplicialComplex {
    SimplicialComplex::from_facets(12, tripartite_grid_listing()).unwrap()
}

pub fn tripartite_grid_listed() -> (SimplicialComplex, FacetOrder) {
    let complex = tripartite_grid();
    let listing = tripartite_grid_listing();
    let refs: Vec<&[usize]> = listing.iter().map(|v| v.as_slice()).collect();
    let order = order_of_listing(&complex, &refs);
    (complex, order)
}

/// Every strongly shellable fixture, used by the closure suites.
pub fn strongly_shellable_fixtures() -> Vec<SimplicialComplex> {
    vec![
        triangle_path(4),
        mixed_dimensions(),
        ss_not_hereditary(),
        quasi_harmonious_only(),
        ss_not_quasi_harmonious(),
        hereditarily_ss_not_matroid(),
        diamond_spanning_trees(),
        tripartite_grid(),
    ]
}

/// Fixtures that are not strongly shellable, with a one-word reason.
pub fn non_strongly_shellable_fixtures() -> Vec<SimplicialComplex> {
    vec![triangle_path(5), hexagon_band(), hereditary_not_ss(), shifted_nonpure()]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixture_shapes() {
        assert_eq!(triangle_path(4).facet_count(), 4);
        assert_eq!(triangle_path(5).n(), 7);
        assert_eq!(edge_path(4).facet_count(), 4);
        assert_eq!(hexagon_band().facet_count(), 6);
        assert_eq!(ss_not_hereditary().facet_count(), 8);
        assert_eq!(hereditary_not_ss().facet_count(), 8);
        assert_eq!(shifted_nonpure().facet_count(), 11);
        assert_eq!(hereditarily_ss_not_matroid().facet_count(), 8);
        assert_eq!(diamond_spanning_trees().facet_count(), 8);
        let grid = tripartite_grid();
        assert_eq!(grid.facet_count(), 76);
        assert_eq!(grid.n(), 12);
        assert!(grid.is_pure());
    }

    #[test]
    fn listed_orders_are_permutations() {
        let (c, order) = ss_not_hereditary_listed();
        assert_eq!(order.len(), c.facet_count());
        let (c, order) = tripartite_grid_listed();
        assert_eq!(order.len(), c.facet_count());
    }
}
