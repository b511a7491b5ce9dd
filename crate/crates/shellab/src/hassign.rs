//! Deciding shellability and strong shellability of pure complexes by
//! labeling facets with an h-assignment and removing candidate facets one
//! at a time; the reversal of a full removal sequence is the certificate
//! order.
//!
//! An h-assignment sends each facet to a label in 0..=d+1 so that label i
//! is used exactly h_i(Δ) times. A facet F of the current (shrinking)
//! complex is a *candidate* when its boundary-ridge count there equals
//! d+1−A(F), and a *strong candidate* when additionally every other
//! surviving facet G admits a surviving H with dis(F,H) = 1 and
//! dis(G,H) = dis(G,F)−1.

use std::collections::{HashMap, HashSet};
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::sync::{Arc, Mutex};

use num_bigint::BigUint;

use crate::complex::SimplicialComplex;
use crate::decision::{Budget, Decision, Stats};
use crate::error::{Error, Result};
use crate::face::Face;
use crate::par;
use crate::shelling::{
    is_shelling_order, is_strong_shelling_order, FacetOrder, MAX_FACETS,
};

/// A labeling of the facets of one pure complex by 0..=d+1 with label
/// multiplicities equal to the h-vector.
#[derive(Clone, PartialEq, Eq)]
pub struct HAssignment {
    labels: Vec<usize>,
}

impl HAssignment {
    /// Validates labels (indexed by canonical facet index) against the
    /// complex's h-vector.
    pub fn new(complex: &SimplicialComplex, labels: Vec<usize>) -> Result<HAssignment> {
        let h = complex.h_vector()?;
        if labels.len() != complex.facet_count() {
            return Err(Error::BadAssignment);
        }
        let bound = h.as_slice().len(); // d + 2 slots
        let mut counts = vec![0i64; bound];
        for &label in &labels {
            if label >= bound {
                return Err(Error::BadAssignment);
            }
            counts[label] += 1;
        }
        for (i, &count) in counts.iter().enumerate() {
            if count != h.h(i) {
                return Err(Error::BadAssignment);
            }
        }
        Ok(HAssignment { labels })
    }

    pub fn label(&self, facet: usize) -> usize {
        self.labels[facet]
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }
}

impl std::fmt::Debug for HAssignment {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "assignment{:?}", self.labels)
    }
}

/// Number of h-assignments: t! / (h_0! ⋯ h_{d+1}!).
pub fn h_assignment_count(complex: &SimplicialComplex) -> Result<BigUint> {
    let h = complex.h_vector()?;
    if h.has_negative_entry() {
        return Err(Error::NegativeHVector);
    }
    let mut count = factorial(complex.facet_count() as u64);
    for &entry in h.as_slice() {
        count /= factorial(entry as u64);
    }
    Ok(count)
}

fn factorial(n: u64) -> BigUint {
    (1..=n).map(BigUint::from).product::<BigUint>().max(BigUint::from(1u8))
}

/// Label-independent data of one surviving-facet set.
struct MaskData {
    /// Boundary-ridge count of every surviving facet in the subcomplex.
    boundary: Vec<u8>,
    /// Facets satisfying the strong-candidate distance condition there.
    strong_ok: u128,
}

/// Pairwise machinery for one complex, shared by every assignment.
struct Removal {
    t: usize,
    /// d + 1 = common facet cardinality.
    ridges: u8,
    /// dist[i*t+j] = dis(F_i, F_j) saturated at u8::MAX.
    dist: Vec<u8>,
    /// For each facet, its distance-one partners and the vertex of F_i not
    /// shared with the partner (the ridge that partner covers).
    covers: Vec<Vec<(usize, usize)>>,
    cache: Mutex<HashMap<u128, Arc<MaskData>>>,
}

impl Removal {
    fn new(complex: &SimplicialComplex) -> Removal {
        let t = complex.facet_count();
        let mut dist = vec![0u8; t * t];
        let mut covers = vec![Vec::new(); t];
        for i in 0..t {
            for j in 0..t {
                if i == j {
                    continue;
                }
                let d = complex.facet_distance(i, j).min(255);
                dist[i * t + j] = d as u8;
                if d == 1 {
                    let gone = complex.facet(i).difference(complex.facet(j));
                    if gone.cardinality() == 1 {
                        let v = gone.vertices().next().expect("single vertex");
                        covers[i].push((j, v));
                    }
                }
            }
        }
        let ridges = complex.facet(0).cardinality().min(255) as u8;
        Removal { t, ridges, dist, covers, cache: Mutex::new(HashMap::new()) }
    }

    #[inline]
    fn dis(&self, i: usize, j: usize) -> u8 {
        self.dist[i * self.t + j]
    }

    fn data_for(&self, mask: u128, n: usize) -> Arc<MaskData> {
        if let Some(found) = self.cache.lock().expect("cache lock").get(&mask) {
            return Arc::clone(found);
        }
        let computed = Arc::new(self.compute(mask, n));
        let mut cache = self.cache.lock().expect("cache lock");
        Arc::clone(cache.entry(mask).or_insert(computed))
    }

    fn compute(&self, mask: u128, n: usize) -> MaskData {
        let mut boundary = vec![0u8; self.t];
        let mut strong_ok = 0u128;
        let mut alive = mask;
        while alive != 0 {
            let f = alive.trailing_zeros() as usize;
            alive &= alive - 1;
            let mut covered = Face::empty(n);
            for &(j, v) in &self.covers[f] {
                if mask & (1u128 << j) != 0 {
                    covered.insert(v);
                }
            }
            boundary[f] = self.ridges - covered.cardinality().min(255) as u8;
            if self.strong_condition(mask, f) {
                strong_ok |= 1u128 << f;
            }
        }
        MaskData { boundary, strong_ok }
    }

    /// ∀ surviving G ≠ F ∃ surviving H: dis(F,H) = 1 ∧ dis(G,H) = dis(G,F)−1.
    fn strong_condition(&self, mask: u128, f: usize) -> bool {
        let mut others = mask & !(1u128 << f);
        while others != 0 {
            let g = others.trailing_zeros() as usize;
            others &= others - 1;
            let target = self.dis(g, f) - 1;
            let mut found = false;
            let mut hs = mask;
            while hs != 0 {
                let h = hs.trailing_zeros() as usize;
                hs &= hs - 1;
                if self.dis(f, h) == 1 && self.dis(g, h) == target {
                    found = true;
                    break;
                }
            }
            if !found {
                return false;
            }
        }
        true
    }
}

fn check_pure(complex: &SimplicialComplex) -> Result<()> {
    if complex.is_void() {
        return Err(Error::VoidComplex);
    }
    if !complex.is_pure() {
        return Err(Error::NotPure);
    }
    if complex.facet_count() > MAX_FACETS {
        return Err(Error::TooManyFacets { got: complex.facet_count(), max: MAX_FACETS });
    }
    Ok(())
}

/// Facets of `complex` that are candidates under `assignment`.
pub fn candidate_facets(
    complex: &SimplicialComplex,
    assignment: &HAssignment,
) -> Result<Vec<usize>> {
    candidates_common(complex, assignment, false)
}

/// Facets of `complex` that are strong candidates under `assignment`.
pub fn strong_candidate_facets(
    complex: &SimplicialComplex,
    assignment: &HAssignment,
) -> Result<Vec<usize>> {
    candidates_common(complex, assignment, true)
}

fn candidates_common(
    complex: &SimplicialComplex,
    assignment: &HAssignment,
    strong: bool,
) -> Result<Vec<usize>> {
    check_pure(complex)?;
    if assignment.len() != complex.facet_count() {
        return Err(Error::BadAssignment);
    }
    let removal = Removal::new(complex);
    let t = complex.facet_count();
    let mask = if t == 128 { u128::MAX } else { (1u128 << t) - 1 };
    let data = removal.data_for(mask, complex.n());
    Ok((0..t)
        .filter(|&f| {
            let wanted = removal.ridges as usize - assignment.label(f);
            data.boundary[f] as usize == wanted
                && (!strong || data.strong_ok & (1u128 << f) != 0)
        })
        .collect())
}

/// A successful h-assignment decision: the assignment, the removal
/// sequence, and the shelling order (the removal sequence reversed).
#[derive(Debug, Clone)]
pub struct HWitness {
    pub assignment: HAssignment,
    pub order: FacetOrder,
}

impl HWitness {
    /// Facets in the order they were removed.
    pub fn removal_sequence(&self) -> FacetOrder {
        self.order.reversed()
    }
}

struct AssignmentSearch<'a> {
    removal: &'a Removal,
    labels: &'a [usize],
    n: usize,
    strong: bool,
    /// Node budget shared by every assignment tried in this decide call.
    nodes: &'a AtomicU64,
    max_nodes: u64,
    failed: HashSet<u128>,
    removed: Vec<usize>,
}

enum Walk {
    Found,
    Exhausted,
    Aborted,
}

impl<'a> AssignmentSearch<'a> {
    /// Charges one node against the shared allowance; exact, never overshoots.
    fn charge(&self) -> bool {
        self.nodes
            .fetch_update(Ordering::Relaxed, Ordering::Relaxed, |n| {
                (n < self.max_nodes).then_some(n + 1)
            })
            .is_ok()
    }

    fn dfs(&mut self, mask: u128) -> Walk {
        if mask == 0 {
            return Walk::Found;
        }
        if self.failed.contains(&mask) {
            return Walk::Exhausted;
        }
        let data = self.removal.data_for(mask, self.n);
        let mut alive = mask;
        while alive != 0 {
            let f = alive.trailing_zeros() as usize;
            alive &= alive - 1;
            if !self.charge() {
                return Walk::Aborted;
            }
            let wanted = self.removal.ridges as usize - self.labels[f];
            let candidate = data.boundary[f] as usize == wanted
                && (!self.strong || data.strong_ok & (1u128 << f) != 0);
            if candidate {
                self.removed.push(f);
                match self.dfs(mask & !(1u128 << f)) {
                    Walk::Found => return Walk::Found,
                    Walk::Aborted => return Walk::Aborted,
                    Walk::Exhausted => {
                        self.removed.pop();
                    }
                }
            }
        }
        self.failed.insert(mask);
        Walk::Exhausted
    }
}

/// Lexicographic next permutation in place; false when `seq` was the last.
pub(crate) fn next_permutation(seq: &mut [usize]) -> bool {
    if seq.len() < 2 {
        return false;
    }
    let mut i = seq.len() - 1;
    while i > 0 && seq[i - 1] >= seq[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = seq.len() - 1;
    while seq[j] <= seq[i - 1] {
        j -= 1;
    }
    seq.swap(i - 1, j);
    seq[i..].reverse();
    true
}

fn decide(
    complex: &SimplicialComplex,
    strong: bool,
    budget: Budget,
) -> Result<(Decision<HWitness>, Stats)> {
    check_pure(complex)?;
    let h = complex.h_vector()?;
    if h.has_negative_entry() {
        return Ok((Decision::No, Stats::default()));
    }
    let t = complex.facet_count();
    let full = if t == 128 { u128::MAX } else { (1u128 << t) - 1 };
    let removal = Removal::new(complex);
    let undecided = AtomicBool::new(false);
    let nodes = AtomicU64::new(0);

    // Labels in ascending order form the lexicographically first assignment.
    let mut labels = Vec::with_capacity(t);
    for (label, &count) in h.as_slice().iter().enumerate() {
        labels.extend(std::iter::repeat(label).take(count as usize));
    }
    debug_assert_eq!(labels.len(), t);

    // Assignments are consumed lazily in batches: within a batch the search
    // may fan out, but the first success in enumeration order always wins,
    // so a found witness matches the purely sequential scan. The node budget
    // is shared across all assignments; near exhaustion, which assignments
    // still complete depends on scheduling, so a run may return a (verified)
    // witness where another reports undecided — never a differing yes/no.
    const BATCH: usize = 256;
    let mut witness = None;
    let mut exhausted = false;
    while !exhausted && witness.is_none() && !undecided.load(Ordering::Relaxed) {
        let mut batch = Vec::with_capacity(BATCH);
        loop {
            batch.push(labels.clone());
            if !next_permutation(&mut labels) {
                exhausted = true;
                break;
            }
            if batch.len() == BATCH {
                break;
            }
        }
        witness = par::find_map_first(batch, |candidate_labels| {
            let mut search = AssignmentSearch {
                removal: &removal,
                labels: &candidate_labels,
                n: complex.n(),
                strong,
                nodes: &nodes,
                max_nodes: budget.max_nodes,
                failed: HashSet::new(),
                removed: Vec::with_capacity(t),
            };
            let walk = search.dfs(full);
            let removed = std::mem::take(&mut search.removed);
            drop(search);
            match walk {
                Walk::Found => Some((candidate_labels, removed)),
                Walk::Aborted => {
                    undecided.store(true, Ordering::Relaxed);
                    None
                }
                Walk::Exhausted => None,
            }
        });
    }

    let stats = Stats { nodes: nodes.load(Ordering::Relaxed) };
    let decision = match witness {
        Some((winning_labels, removed)) => {
            let assignment = HAssignment::new(complex, winning_labels)?;
            let order = FacetOrder::new(removed.into_iter().rev().collect())?;
            let valid = if strong {
                is_strong_shelling_order(complex, &order)?
            } else {
                is_shelling_order(complex, &order)?
            };
            if !valid {
                return Err(Error::Internal(
                    "reversed removal sequence failed the shelling check".into(),
                ));
            }
            Decision::Yes(HWitness { assignment, order })
        }
        None if undecided.load(Ordering::Relaxed) => Decision::Undecided,
        None => Decision::No,
    };
    Ok((decision, stats))
}

/// Decides plain shellability by h-assignment removal. Assignments are
/// scanned in lexicographic label-sequence order (labels attached to facets
/// in canonical facet order), candidates removed in ascending facet index;
/// the first full removal yields the witness.
pub fn decide_shellable_by_assignment(
    complex: &SimplicialComplex,
) -> Result<Option<HWitness>> {
    let (decision, _) = decide(complex, false, Budget::UNLIMITED)?;
    Ok(decision.witness())
}

/// Budgeted variant of [`decide_shellable_by_assignment`]; the budget is
/// charged per removal attempt, shared across every assignment tried.
pub fn decide_shellable_by_assignment_budgeted(
    complex: &SimplicialComplex,
    budget: Budget,
) -> Result<(Decision<HWitness>, Stats)> {
    decide(complex, false, budget)
}

/// Decides strong shellability by strong-candidate removal.
pub fn decide_strongly_shellable_by_assignment(
    complex: &SimplicialComplex,
) -> Result<Option<HWitness>> {
    let (decision, _) = decide(complex, true, Budget::UNLIMITED)?;
    Ok(decision.witness())
}

/// Budgeted variant of [`decide_strongly_shellable_by_assignment`].
pub fn decide_strongly_shellable_by_assignment_budgeted(
    complex: &SimplicialComplex,
    budget: Budget,
) -> Result<(Decision<HWitness>, Stats)> {
    decide(complex, true, budget)
}
