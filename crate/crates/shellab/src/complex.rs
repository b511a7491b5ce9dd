use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::face::Face;

/// A simplicial complex over the vertex set [n], stored by its facets.
///
/// Facets are pairwise incomparable and kept in canonical order: ascending by
/// bit-mask value, i.e. by the highest vertex where two facets differ. Facet
/// indices used throughout the crate refer to positions in this order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    n: usize,
    facets: Vec<Face>,
}

/// Input sets discarded while reducing a facet list.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DropReport {
    /// Sets strictly contained in another input set.
    pub dropped: Vec<Face>,
    /// Repeated occurrences of a set already kept.
    pub duplicates: Vec<Face>,
}

impl DropReport {
    pub fn is_clean(&self) -> bool {
        self.dropped.is_empty() && self.duplicates.is_empty()
    }
}

impl SimplicialComplex {
    /// Builds the complex generated by the given vertex sets, reducing away
    /// non-maximal sets and merging duplicates.
    pub fn from_facets<I, J>(n: usize, sets: I) -> Result<SimplicialComplex>
    where
        I: IntoIterator<Item = J>,
        J: IntoIterator<Item = usize>,
    {
        Self::from_facets_with_report(n, sets).map(|(complex, _)| complex)
    }

    /// Like [`Self::from_facets`], also reporting what was discarded.
    pub fn from_facets_with_report<I, J>(
        n: usize,
        sets: I,
    ) -> Result<(SimplicialComplex, DropReport)>
    where
        I: IntoIterator<Item = J>,
        J: IntoIterator<Item = usize>,
    {
        let faces = sets
            .into_iter()
            .map(|set| Face::from_vertices(n, set))
            .collect::<Result<Vec<_>>>()?;
        Self::from_faces_with_report(n, faces)
    }

    /// Builds the complex generated by already-packed faces.
    pub fn from_faces(n: usize, faces: Vec<Face>) -> Result<SimplicialComplex> {
        Self::from_faces_with_report(n, faces).map(|(complex, _)| complex)
    }

    pub fn from_faces_with_report(
        n: usize,
        faces: Vec<Face>,
    ) -> Result<(SimplicialComplex, DropReport)> {
        if faces.is_empty() {
            return Err(Error::EmptyInput);
        }
        // Any strict superset has strictly larger cardinality, so scanning by
        // descending cardinality sees every keeper before the sets it absorbs.
        let mut ordered = faces;
        ordered.sort_by(|a, b| b.cardinality().cmp(&a.cardinality()).then_with(|| a.cmp(b)));
        let mut kept: Vec<Face> = Vec::new();
        let mut report = DropReport::default();
        for face in ordered {
            match kept.iter().find(|k| face.is_subset(k)) {
                Some(holder) if *holder == face => report.duplicates.push(face),
                Some(_) => report.dropped.push(face),
                None => kept.push(face),
            }
        }
        kept.sort();
        Ok((SimplicialComplex { n, facets: kept }, report))
    }

    /// Ambient vertex count.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn facet(&self, index: usize) -> &Face {
        &self.facets[index]
    }

    pub fn facet_count(&self) -> usize {
        self.facets.len()
    }

    /// dim(Δ): the maximum facet dimension; −1 for the void complex ⟨∅⟩.
    pub fn dim(&self) -> isize {
        self.facets.iter().map(Face::dim).max().unwrap_or(-1)
    }

    pub fn is_pure(&self) -> bool {
        let d = self.facets[0].dim();
        self.facets.iter().all(|f| f.dim() == d)
    }

    /// True for ⟨∅⟩, the complex whose only facet is the empty face.
    pub fn is_void(&self) -> bool {
        self.facets.len() == 1 && self.facets[0].is_empty()
    }

    /// V(Δ): the vertices that actually occur in a facet.
    pub fn vertex_support(&self) -> Face {
        let mut support = Face::empty(self.n);
        for f in &self.facets {
            support = support.union(f);
        }
        support
    }

    /// True iff the face belongs to the complex (is contained in a facet).
    pub fn contains_face(&self, face: &Face) -> bool {
        self.facets.iter().any(|f| face.is_subset(f))
    }

    /// Position of the face in the canonical facet list, if it is a facet.
    pub fn facet_index(&self, face: &Face) -> Option<usize> {
        self.facets.binary_search(face).ok()
    }

    /// dis(F_i, F_j) between two facets given by canonical index.
    pub fn facet_distance(&self, i: usize, j: usize) -> usize {
        self.facets[i].distance(&self.facets[j])
    }

    /// link_Δ(A) = {F ∖ A : A ⊆ F ∈ F(Δ)}; the ambient vertex set is kept.
    pub fn link(&self, face: &Face) -> Result<SimplicialComplex> {
        if !self.contains_face(face) {
            return Err(Error::NotAFace);
        }
        // Facets of the link are exactly F ∖ A over facets F ⊇ A: they are
        // distinct and pairwise incomparable, so no reduction is needed.
        let facets: Vec<Face> = self
            .facets
            .iter()
            .filter(|f| face.is_subset(f))
            .map(|f| f.difference(face))
            .collect();
        SimplicialComplex::from_faces(self.n, facets)
    }

    /// Δ_W: all faces of Δ contained in W, reduced to facets.
    pub fn restriction(&self, w: &Face) -> Result<SimplicialComplex> {
        if w.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        let sections: Vec<Face> = self.facets.iter().map(|f| f.intersection(w)).collect();
        SimplicialComplex::from_faces(self.n, sections)
    }

    /// Deletion Δ ∖ x: the restriction to [n] ∖ {x}.
    pub fn deletion(&self, vertex: usize) -> Result<SimplicialComplex> {
        if vertex < 1 || vertex > self.n {
            return Err(Error::VertexOutOfRange { vertex, n: self.n });
        }
        let mut w = Face::full(self.n);
        w.remove(vertex);
        self.restriction(&w)
    }

    /// The join Γ * Δ: self keeps its labels, `other`'s vertices are shifted
    /// up by self.n, and the facets are all unions F ⊔ G.
    pub fn join(&self, other: &SimplicialComplex) -> SimplicialComplex {
        let n = self.n + other.n;
        let mut facets = Vec::with_capacity(self.facets.len() * other.facets.len());
        for f in &self.facets {
            for g in &other.facets {
                let mut u = Face::empty(n);
                for v in f.vertices() {
                    u.insert(v);
                }
                for v in g.vertices() {
                    u.insert(v + self.n);
                }
                facets.push(u);
            }
        }
        SimplicialComplex::from_faces(n, facets)
            .expect("join of nonempty facet lists is nonempty")
    }

    /// Δ^c: the complex generated by the complements [n] ∖ F of the facets.
    ///
    /// For pure input the complements are again pairwise incomparable and
    /// (Δ^c)^c = Δ; for nonpure input some complements absorb others and the
    /// report lists them.
    pub fn complement_with_report(&self) -> (SimplicialComplex, DropReport) {
        let full = Face::full(self.n);
        let complements: Vec<Face> = self.facets.iter().map(|f| full.difference(f)).collect();
        SimplicialComplex::from_faces_with_report(self.n, complements)
            .expect("complement list is nonempty")
    }

    pub fn complement(&self) -> SimplicialComplex {
        self.complement_with_report().0
    }

    /// The (s_1,…,s_n)-expansion: vertex copy x_{i,j} is relabeled to
    /// Σ_{k<i} s_k + j, and each facet {i_1,…,i_t} is replaced by the facets
    /// {x_{i_1,r_1},…,x_{i_t,r_t}} over all tuples with 1 ≤ r_k ≤ s_{i_k}.
    pub fn expansion(&self, s: &[usize]) -> Result<SimplicialComplex> {
        if s.len() != self.n {
            return Err(Error::ExpansionArity { got: s.len(), n: self.n });
        }
        if let Some(i) = s.iter().position(|&c| c == 0) {
            return Err(Error::ExpansionEntry { vertex: i + 1 });
        }
        let mut offset = vec![0usize; self.n + 1];
        for i in 1..=self.n {
            offset[i] = offset[i - 1] + s[i - 1];
        }
        let new_n = offset[self.n];
        let mut facets = Vec::new();
        for f in &self.facets {
            let support = f.to_vec();
            expand_facet(&support, s, &offset, new_n, &mut Face::empty(new_n), 0, &mut facets);
        }
        SimplicialComplex::from_faces(new_n, facets)
    }

    /// Δ^(i): the complex generated by all faces of dimension ≤ i.
    pub fn skeleton(&self, i: isize) -> Result<SimplicialComplex> {
        self.check_dim_range(i)?;
        let mut candidates = Vec::new();
        for f in &self.facets {
            if f.dim() <= i {
                candidates.push(f.clone());
            } else {
                candidates.extend(f.subsets_of_size((i + 1) as usize));
            }
        }
        SimplicialComplex::from_faces(self.n, candidates)
    }

    /// Δ^[i]: the pure complex generated by all i-dimensional faces.
    pub fn pure_skeleton(&self, i: isize) -> Result<SimplicialComplex> {
        self.check_dim_range(i)?;
        let mut seen = HashSet::new();
        let mut faces = Vec::new();
        for f in &self.facets {
            for sub in f.subsets_of_size((i + 1) as usize) {
                if seen.insert(sub.clone()) {
                    faces.push(sub);
                }
            }
        }
        if faces.is_empty() {
            return Err(Error::NoFacetOfDimension { dim: i });
        }
        SimplicialComplex::from_faces(self.n, faces)
    }

    /// pure_k(Δ): the complex generated by the k-dimensional facets only.
    pub fn pure_part(&self, k: isize) -> Result<SimplicialComplex> {
        let picked: Vec<Face> = self.facets.iter().filter(|f| f.dim() == k).cloned().collect();
        if picked.is_empty() {
            return Err(Error::NoFacetOfDimension { dim: k });
        }
        SimplicialComplex::from_faces(self.n, picked)
    }

    fn check_dim_range(&self, i: isize) -> Result<()> {
        let d = self.dim();
        if i < 0 || i > d {
            return Err(Error::DimensionOutOfRange { value: i, min: 0, max: d });
        }
        Ok(())
    }

    /// Every face of the complex, the empty face included, found by walking
    /// down from the facets with deduplication.
    pub fn all_faces(&self) -> Vec<Face> {
        let mut seen: HashSet<Face> = HashSet::new();
        let mut queue: VecDeque<Face> = VecDeque::new();
        for f in &self.facets {
            if seen.insert(f.clone()) {
                queue.push_back(f.clone());
            }
        }
        while let Some(face) = queue.pop_front() {
            for v in face.vertices() {
                let mut sub = face.clone();
                sub.remove(v);
                if seen.insert(sub.clone()) {
                    queue.push_back(sub);
                }
            }
        }
        let mut faces: Vec<Face> = seen.into_iter().collect();
        faces.sort_by(|a, b| a.cardinality().cmp(&b.cardinality()).then_with(|| a.cmp(b)));
        faces
    }

    /// f(Δ) = (f_{−1}, f_0, …, f_d).
    pub fn f_vector(&self) -> FVector {
        let d = self.dim();
        let mut counts = vec![0u64; (d + 2) as usize];
        for face in self.all_faces() {
            counts[(face.dim() + 1) as usize] += 1;
        }
        FVector { counts }
    }

    /// h(Δ) = (h_0, …, h_{d+1}) via the binomial transform
    /// h_j = Σ_{i=0}^{j} (−1)^{j−i} C(d+1−i, j−i) f_{i−1}.
    pub fn h_vector(&self) -> Result<HVector> {
        if !self.is_pure() {
            return Err(Error::NotPure);
        }
        let f = self.f_vector();
        let d = self.dim();
        let width = (d + 2) as usize; // entries h_0 ..= h_{d+1}
        let mut entries = vec![0i64; width];
        for (j, entry) in entries.iter_mut().enumerate() {
            let mut acc: i128 = 0;
            for i in 0..=j {
                let sign = if (j - i) % 2 == 0 { 1i128 } else { -1i128 };
                let coeff = binomial((d + 1) as usize - i, j - i) as i128;
                acc += sign * coeff * f.counts[i] as i128;
            }
            *entry = i64::try_from(acc).expect("h-vector entry fits in i64");
        }
        debug_assert_eq!(
            entries.iter().sum::<i64>(),
            self.facet_count() as i64,
            "h-vector entries must sum to the facet count"
        );
        Ok(HVector { entries })
    }

    /// Multiplicity map ridge → number of facets containing it. Ridges are
    /// the (d−1)-dimensional faces of a pure d-dimensional complex.
    pub(crate) fn ridge_multiplicities(&self) -> Result<HashMap<Face, usize>> {
        if !self.is_pure() {
            return Err(Error::NotPure);
        }
        if self.is_void() {
            return Err(Error::VoidComplex);
        }
        let mut counts: HashMap<Face, usize> = HashMap::new();
        for f in &self.facets {
            for v in f.vertices() {
                let mut ridge = f.clone();
                ridge.remove(v);
                *counts.entry(ridge).or_insert(0) += 1;
            }
        }
        Ok(counts)
    }

    /// The ridges contained in exactly one facet, in canonical order.
    pub fn boundary_ridges(&self) -> Result<Vec<Face>> {
        let counts = self.ridge_multiplicities()?;
        let mut out: Vec<Face> =
            counts.into_iter().filter_map(|(ridge, count)| (count == 1).then_some(ridge)).collect();
        out.sort();
        Ok(out)
    }

    /// Number of boundary ridges contained in the facet F.
    pub fn boundary_ridge_count(&self, facet: &Face) -> Result<usize> {
        if self.facet_index(facet).is_none() {
            return Err(Error::NotAFacet);
        }
        let counts = self.ridge_multiplicities()?;
        let mut boundary = 0;
        for v in facet.vertices() {
            let mut ridge = facet.clone();
            ridge.remove(v);
            if counts.get(&ridge) == Some(&1) {
                boundary += 1;
            }
        }
        Ok(boundary)
    }
}

fn expand_facet(
    support: &[usize],
    s: &[usize],
    offset: &[usize],
    new_n: usize,
    partial: &mut Face,
    depth: usize,
    out: &mut Vec<Face>,
) {
    if depth == support.len() {
        out.push(partial.clone());
        return;
    }
    let i = support[depth];
    for r in 1..=s[i - 1] {
        let v = offset[i - 1] + r;
        partial.insert(v);
        expand_facet(support, s, offset, new_n, partial, depth + 1, out);
        partial.remove(v);
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "⟨")?;
        for (i, facet) in self.facets.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{facet:?}")?;
        }
        write!(f, "⟩/[{}]", self.n)
    }
}

/// Face counts (f_{−1}, f_0, …, f_d); f_{−1} = 1 counts the empty face.
#[derive(Clone, PartialEq, Eq)]
pub struct FVector {
    counts: Vec<u64>,
}

impl FVector {
    /// f_dim, for dim ∈ [−1, d].
    pub fn f(&self, dim: isize) -> u64 {
        self.counts[(dim + 1) as usize]
    }

    /// Entries starting at f_{−1}.
    pub fn as_slice(&self) -> &[u64] {
        &self.counts
    }
}

impl fmt::Debug for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "f{:?}", self.counts)
    }
}

/// The h-vector (h_0, …, h_{d+1}); entries may be negative.
#[derive(Clone, PartialEq, Eq)]
pub struct HVector {
    entries: Vec<i64>,
}

impl HVector {
    pub fn h(&self, j: usize) -> i64 {
        self.entries[j]
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.entries
    }

    pub fn has_negative_entry(&self) -> bool {
        self.entries.iter().any(|&h| h < 0)
    }
}

impl fmt::Debug for HVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "h{:?}", self.entries)
    }
}

pub(crate) fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cx(n: usize, facets: &[&[usize]]) -> SimplicialComplex {
        SimplicialComplex::from_facets(n, facets.iter().map(|f| f.iter().copied())).unwrap()
    }

    fn face(n: usize, vs: &[usize]) -> Face {
        Face::from_vertices(n, vs.iter().copied()).unwrap()
    }

    fn facet_sets(c: &SimplicialComplex) -> Vec<Vec<usize>> {
        c.facets().iter().map(Face::to_vec).collect()
    }

    #[test]
    fn reduction_drops_non_maximal_sets() {
        let (c, report) = SimplicialComplex::from_facets_with_report(
            6,
            [vec![1, 2, 3], vec![2, 3], vec![4, 5, 6]],
        )
        .unwrap();
        assert_eq!(facet_sets(&c), vec![vec![1, 2, 3], vec![4, 5, 6]]);
        assert_eq!(report.dropped, vec![face(6, &[2, 3])]);
        assert!(report.duplicates.is_empty());
    }

    #[test]
    fn reduction_keeps_incomparable_sets() {
        let (c, report) = SimplicialComplex::from_facets_with_report(
            6,
            [vec![1, 2, 4, 5], vec![1, 2, 3], vec![4, 5, 6]],
        )
        .unwrap();
        assert_eq!(c.facet_count(), 3);
        assert!(report.is_clean());
        assert!(!c.is_pure());
        assert_eq!(c.dim(), 3);
    }

    #[test]
    fn single_vertex_simplex() {
        let c = cx(1, &[&[1]]);
        assert_eq!(c.facet_count(), 1);
        assert_eq!(c.dim(), 0);
        assert!(c.is_pure());
    }

    #[test]
    fn duplicates_are_merged_and_reported() {
        let (c, report) =
            SimplicialComplex::from_facets_with_report(3, [vec![1, 2], vec![1, 2]]).unwrap();
        assert_eq!(c.facet_count(), 1);
        assert_eq!(report.duplicates.len(), 1);
    }

    #[test]
    fn empty_input_is_rejected() {
        let sets: [Vec<usize>; 0] = [];
        assert_eq!(SimplicialComplex::from_facets(3, sets).unwrap_err(), Error::EmptyInput);
    }

    #[test]
    fn void_complex_is_representable() {
        let c = cx(3, &[&[]]);
        assert!(c.is_void());
        assert_eq!(c.dim(), -1);
        assert!(c.contains_face(&Face::empty(3)));
    }

    #[test]
    fn reduction_is_idempotent() {
        let c = cx(6, &[&[1, 2, 4, 5], &[1, 2, 3], &[4, 5, 6]]);
        let again = SimplicialComplex::from_faces(c.n(), c.facets().to_vec()).unwrap();
        assert_eq!(c, again);
    }

    #[test]
    fn link_of_vertex_in_path_of_triangles() {
        let c = cx(7, &[&[1, 2, 3], &[2, 3, 4], &[3, 4, 5], &[4, 5, 6], &[5, 6, 7]]);
        let link = c.link(&face(7, &[7])).unwrap();
        assert_eq!(facet_sets(&link), vec![vec![5, 6]]);
    }

    #[test]
    fn link_of_empty_face_is_the_complex() {
        let c = cx(6, &[&[1, 2, 3], &[2, 3, 4], &[3, 4, 5], &[4, 5, 6]]);
        let link = c.link(&Face::empty(6)).unwrap();
        assert_eq!(c, link);
        let link1 = c.link(&face(6, &[1])).unwrap();
        assert_eq!(facet_sets(&link1), vec![vec![2, 3]]);
    }

    #[test]
    fn link_requires_a_face() {
        let c = cx(6, &[&[1, 2, 3]]);
        assert_eq!(c.link(&face(6, &[4])).unwrap_err(), Error::NotAFace);
    }

    #[test]
    fn restriction_of_eight_facet_example() {
        let c = cx(
            8,
            &[
                &[1, 2, 8],
                &[1, 2, 5],
                &[2, 5, 6],
                &[1, 2, 4],
                &[1, 2, 7],
                &[1, 3, 4],
                &[1, 2, 6],
                &[1, 2, 3],
            ],
        );
        let w = face(8, &[3, 4, 5, 6, 7, 8]);
        let r = c.restriction(&w).unwrap();
        // Canonical order sorts by highest vertex: {3,4} < {5,6} < {7} < {8}.
        assert_eq!(facet_sets(&r), vec![vec![3, 4], vec![5, 6], vec![7], vec![8]]);
    }

    #[test]
    fn restriction_to_full_vertex_set_is_identity() {
        let c = cx(6, &[&[1, 2, 3], &[2, 3, 4], &[3, 4, 5], &[4, 5, 6]]);
        assert_eq!(c.restriction(&Face::full(6)).unwrap(), c);
        let r = cx(4, &[&[1, 2, 3], &[2, 3, 4]]).restriction(&face(4, &[1, 4])).unwrap();
        assert_eq!(facet_sets(&r), vec![vec![1], vec![4]]);
        assert!(c.restriction(&Face::empty(6)).is_err());
    }

    #[test]
    fn join_shifts_the_second_factor() {
        let a = cx(1, &[&[1]]);
        assert_eq!(facet_sets(&a.join(&a)), vec![vec![1, 2]]);

        let two = cx(2, &[&[1], &[2]]);
        let j = two.join(&two);
        assert_eq!(j.n(), 4);
        assert_eq!(j.facet_count(), 4);
        assert!(j.facets().iter().all(|f| f.cardinality() == 2));
        assert_eq!(
            facet_sets(&j),
            vec![vec![1, 3], vec![2, 3], vec![1, 4], vec![2, 4]]
        );
    }

    #[test]
    fn complement_examples() {
        let c = cx(3, &[&[1, 2]]);
        assert_eq!(facet_sets(&c.complement()), vec![vec![3]]);

        let path = cx(6, &[&[1, 2, 3], &[2, 3, 4], &[3, 4, 5], &[4, 5, 6]]);
        let cc = path.complement();
        assert_eq!(
            facet_sets(&cc),
            vec![vec![1, 2, 3], vec![1, 2, 6], vec![1, 5, 6], vec![4, 5, 6]]
        );
        // Involution on pure complexes.
        assert_eq!(cc.complement(), path);
    }

    #[test]
    fn complement_is_an_isometry_on_facets() {
        let path = cx(6, &[&[1, 2, 3], &[2, 3, 4], &[3, 4, 5], &[4, 5, 6]]);
        let cc = path.complement();
        let full = Face::full(6);
        for a in path.facets() {
            for b in path.facets() {
                let ac = full.difference(a);
                let bc = full.difference(b);
                assert_eq!(ac.distance(&bc), a.distance(b));
            }
        }
        assert_eq!(cc.facet_count(), path.facet_count());
    }

    #[test]
    fn expansion_identity_and_doubling() {
        let edge = cx(2, &[&[1, 2]]);
        assert_eq!(facet_sets(&edge.expansion(&[1, 1]).unwrap()), vec![vec![1, 2]]);
        assert_eq!(
            facet_sets(&edge.expansion(&[2, 1]).unwrap()),
            vec![vec![1, 3], vec![2, 3]]
        );

        let path = cx(3, &[&[1, 2], &[2, 3]]);
        let e = path.expansion(&[2, 2, 2]).unwrap();
        assert_eq!(e.facet_count(), 8);
        assert_eq!(e.n(), 6);
    }

    #[test]
    fn expansion_validates_arity_and_entries() {
        let edge = cx(2, &[&[1, 2]]);
        assert!(matches!(edge.expansion(&[1]), Err(Error::ExpansionArity { .. })));
        assert!(matches!(edge.expansion(&[1, 0]), Err(Error::ExpansionEntry { vertex: 2 })));
    }

    #[test]
    fn skeletons_of_triangle_path() {
        let c = cx(6, &[&[1, 2, 3], &[2, 3, 4], &[3, 4, 5], &[4, 5, 6]]);
        let sk = c.pure_skeleton(1).unwrap();
        assert_eq!(sk.facet_count(), 9);
        assert!(sk.contains_face(&face(6, &[1, 2])));
        assert!(sk.contains_face(&face(6, &[5, 6])));
        assert_eq!(c.skeleton(1).unwrap(), sk);
        assert_eq!(c.skeleton(2).unwrap(), c);
        assert!(c.skeleton(3).is_err());
        assert!(c.skeleton(-1).is_err());
    }

    #[test]
    fn pure_part_picks_one_dimension() {
        let c = cx(6, &[&[1, 2, 4, 5], &[1, 2, 3], &[4, 5, 6]]);
        let p = c.pure_part(2).unwrap();
        assert_eq!(facet_sets(&p), vec![vec![1, 2, 3], vec![4, 5, 6]]);
        assert!(c.pure_part(1).is_err());
    }

    #[test]
    fn f_and_h_vectors() {
        let simplex = cx(3, &[&[1, 2, 3]]);
        assert_eq!(simplex.h_vector().unwrap().as_slice(), &[1, 0, 0, 0]);

        let hollow = cx(3, &[&[1, 2], &[1, 3], &[2, 3]]);
        assert_eq!(hollow.f_vector().as_slice(), &[1, 3, 3]);
        assert_eq!(hollow.h_vector().unwrap().as_slice(), &[1, 1, 1]);

        let path = cx(6, &[&[1, 2, 3], &[2, 3, 4], &[3, 4, 5], &[4, 5, 6]]);
        assert_eq!(path.f_vector().as_slice(), &[1, 6, 9, 4]);
        assert_eq!(path.h_vector().unwrap().as_slice(), &[1, 3, 0, 0]);

        let nonpure = cx(6, &[&[1, 2, 4, 5], &[1, 2, 3], &[4, 5, 6]]);
        assert_eq!(nonpure.h_vector().unwrap_err(), Error::NotPure);
    }

    #[test]
    fn boundary_ridges_of_triangle_path() {
        let c = cx(6, &[&[1, 2, 3], &[2, 3, 4], &[3, 4, 5], &[4, 5, 6]]);
        let boundary = c.boundary_ridges().unwrap();
        let expect: Vec<Face> = [
            vec![1, 2],
            vec![1, 3],
            vec![2, 4],
            vec![3, 5],
            vec![4, 6],
            vec![5, 6],
        ]
        .into_iter()
        .map(|v| face(6, &v))
        .collect::<Vec<_>>()
        .into_iter()
        .collect();
        let mut expect = expect;
        expect.sort();
        assert_eq!(boundary, expect);
        assert_eq!(c.boundary_ridge_count(&face(6, &[1, 2, 3])).unwrap(), 2);
        assert_eq!(c.boundary_ridge_count(&face(6, &[2, 3, 4])).unwrap(), 1);
        assert_eq!(c.boundary_ridge_count(&face(6, &[1, 2])).unwrap_err(), Error::NotAFacet);

        let single = cx(4, &[&[1, 2, 3, 4]]);
        assert_eq!(single.boundary_ridge_count(&face(4, &[1, 2, 3, 4])).unwrap(), 4);
    }

    #[test]
    fn nonpure_distance_additivity_matches_sandwich_condition() {
        // Δ = ⟨{1,2,3,4},{4,5,6},{1,2,3,5,6,7}⟩: dis(F1,G)+dis(G,F2) =
        // dis(F1,F2) exactly when F1∩F2 ⊆ G ⊆ F1∪F2.
        let f1 = face(7, &[1, 2, 3, 4]);
        let g = face(7, &[4, 5, 6]);
        let f2 = face(7, &[1, 2, 3, 5, 6, 7]);
        assert_eq!(f1.distance(&g), 2);
        assert_eq!(f1.distance(&f2), 1);
        let additive = f1.distance(&g) + g.distance(&f2) == f1.distance(&f2);
        let sandwich =
            f1.intersection(&f2).is_subset(&g) && g.is_subset(&f1.union(&f2));
        assert_eq!(additive, sandwich);
        assert!(!additive);
    }
}
