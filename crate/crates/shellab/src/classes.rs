//! Membership tests for the classical complex classes — matroid, shifted,
//! weakly matroidal, vertex decomposable, hereditary (strongly) shellable —
//! the spanning-forest (cycle matroid) constructor, the reverse
//! lexicographic facet order, and an aggregated report that cross-checks
//! the implication diagram between the classes.

use std::cmp::Ordering;
use std::collections::HashMap;

use crate::complex::SimplicialComplex;
use crate::decision::{Budget, Decision, Meter, Stats};
use crate::error::{Error, Result};
use crate::face::Face;
use crate::hassign::next_permutation;
use crate::par;
use crate::shelling::{
    find_shelling_order_budgeted, find_strong_shelling_order_budgeted, FacetOrder,
};

/// Which shelling property a hereditary check demands of every restriction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HereditaryProperty {
    Shellable,
    StronglyShellable,
}

/// True iff the complex is pure and its facets satisfy the exchange
/// property: for all facets F ≠ G and every i ∈ F∖G there is j ∈ G∖F with
/// (F∖{i})∪{j} a face.
pub fn is_matroid(complex: &SimplicialComplex) -> bool {
    if !complex.is_pure() {
        return false;
    }
    let facets = complex.facets();
    facets.iter().enumerate().all(|(a, f)| {
        facets
            .iter()
            .enumerate()
            .filter(|&(b, _)| b != a)
            .all(|(_, g)| {
                f.difference(g).vertices().all(|i| {
                    g.difference(f).vertices().any(|j| {
                        let mut swapped = f.clone();
                        swapped.remove(i);
                        swapped.insert(j);
                        complex.contains_face(&swapped)
                    })
                })
            })
    })
}

/// True iff under the given labeling every face survives pushing a vertex up:
/// i ∈ F, j > i, j ∉ F implies (F∖{i})∪{j} is a face. Checking facets
/// suffices, since faces of a facet inherit the exchange from it.
pub fn is_shifted(complex: &SimplicialComplex) -> bool {
    let n = complex.n();
    complex.facets().iter().all(|f| {
        f.vertices().all(|i| {
            (i + 1..=n).filter(|&j| !f.contains(j)).all(|j| {
                let mut pushed = f.clone();
                pushed.remove(i);
                pushed.insert(j);
                complex.contains_face(&pushed)
            })
        })
    })
}

/// Searches the n! vertex relabelings in lexicographic order for one that
/// makes [`is_shifted`] hold; each tried permutation costs one budget node.
/// A `Yes` witness maps old vertex v to new label perm[v−1].
pub fn find_shifted_relabeling(
    complex: &SimplicialComplex,
    budget: Budget,
) -> (Decision<Vec<usize>>, Stats) {
    let mut meter = Meter::new(budget);
    let mut perm: Vec<usize> = (1..=complex.n()).collect();
    loop {
        if !meter.charge() {
            return (Decision::Undecided, meter.stats());
        }
        if is_shifted(&relabel(complex, &perm)) {
            return (Decision::Yes(perm), meter.stats());
        }
        if !next_permutation(&mut perm) {
            return (Decision::No, meter.stats());
        }
    }
}

fn relabel(complex: &SimplicialComplex, perm: &[usize]) -> SimplicialComplex {
    let facets = complex
        .facets()
        .iter()
        .map(|f| f.vertices().map(|v| perm[v - 1]).collect::<Vec<_>>());
    SimplicialComplex::from_facets(complex.n(), facets)
        .expect("a vertex bijection preserves facet families")
}

/// Outcome of the weakly matroidal scan. An ordered facet pair (G, F) is
/// constrained only when some q ∈ G∖F has F and G agreeing strictly below
/// q — equivalently, the smallest vertex where they differ lies in G∖F.
/// Pairs without such a q are counted rather than failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WeaklyMatroidCheck {
    pub holds: bool,
    /// Ordered pairs (G, F) that imposed no condition.
    pub unconstrained_pairs: usize,
}

/// For each constrained ordered pair (G, F) with disagreement vertex q,
/// requires some p ∉ G with q < p ≤ n such that (G∖{q})∪{p} is a face.
pub fn check_weakly_matroid(complex: &SimplicialComplex) -> WeaklyMatroidCheck {
    let n = complex.n();
    let facets = complex.facets();
    let mut holds = true;
    let mut unconstrained = 0usize;
    for (a, g) in facets.iter().enumerate() {
        for (b, f) in facets.iter().enumerate() {
            if a == b {
                continue;
            }
            let disagreement = g
                .difference(f)
                .union(&f.difference(g))
                .vertices()
                .next()
                .filter(|&q| g.contains(q));
            let Some(q) = disagreement else {
                unconstrained += 1;
                continue;
            };
            let satisfied = (q + 1..=n).any(|p| {
                if g.contains(p) {
                    return false;
                }
                let mut pushed = g.clone();
                pushed.remove(q);
                pushed.insert(p);
                complex.contains_face(&pushed)
            });
            if !satisfied {
                holds = false;
            }
        }
    }
    WeaklyMatroidCheck { holds, unconstrained_pairs: unconstrained }
}

pub fn is_weakly_matroid(complex: &SimplicialComplex) -> bool {
    check_weakly_matroid(complex).holds
}

/// True iff the pure complex is a simplex, or some shedding vertex x leaves
/// both a deletion of the same dimension and a link one lower, each pure and
/// vertex decomposable in turn. Memoized on the canonical facet list, since
/// deletions and links recur heavily across shedding branches.
pub fn is_vertex_decomposable(complex: &SimplicialComplex) -> Result<bool> {
    if !complex.is_pure() {
        return Err(Error::NotPure);
    }
    let mut memo = HashMap::new();
    shed(complex, &mut memo)
}

fn shed(complex: &SimplicialComplex, memo: &mut HashMap<Vec<Face>, bool>) -> Result<bool> {
    if complex.facet_count() == 1 {
        return Ok(true);
    }
    let key = complex.facets().to_vec();
    if let Some(&known) = memo.get(&key) {
        return Ok(known);
    }
    let d = complex.dim();
    let mut decomposable = false;
    for x in complex.vertex_support().vertices() {
        let deletion = complex.deletion(x)?;
        if deletion.dim() != d || !deletion.is_pure() {
            continue;
        }
        let link = complex.link(&Face::from_vertices(complex.n(), [x])?)?;
        if link.dim() != d - 1 || !link.is_pure() {
            continue;
        }
        if shed(&deletion, memo)? && shed(&link, memo)? {
            decomposable = true;
            break;
        }
    }
    memo.insert(key, decomposable);
    Ok(decomposable)
}

/// The largest vertex support over which hereditary checks will enumerate
/// restrictions; 2^k − 1 subsets must stay enumerable.
pub const MAX_HEREDITARY_SUPPORT: usize = 30;

/// Whether every restriction to a nonempty subset of the vertex support
/// satisfies `property`. Runs 2^|V(Δ)| − 1 budgeted searches (the budget is
/// a per-restriction allowance); any restriction refuting the property gives
/// `No` even if others were undecided.
pub fn is_hereditary_budgeted(
    complex: &SimplicialComplex,
    property: HereditaryProperty,
    budget: Budget,
) -> Result<(Decision<()>, Stats)> {
    let support: Vec<usize> = complex.vertex_support().vertices().collect();
    if support.is_empty() {
        return Ok((Decision::Yes(()), Stats::default()));
    }
    if support.len() > MAX_HEREDITARY_SUPPORT {
        return Err(Error::SupportTooLarge {
            got: support.len(),
            max: MAX_HEREDITARY_SUPPORT,
        });
    }
    let n = complex.n();
    let masks: Vec<u64> = (1..1u64 << support.len()).collect();
    let outcomes = par::map_collect(masks, |mask| {
        let mut w = Face::empty(n);
        for (pos, &v) in support.iter().enumerate() {
            if mask >> pos & 1 == 1 {
                w.insert(v);
            }
        }
        let sub = complex.restriction(&w)?;
        match property {
            HereditaryProperty::Shellable => find_shelling_order_budgeted(&sub, budget),
            HereditaryProperty::StronglyShellable => {
                find_strong_shelling_order_budgeted(&sub, budget)
            }
        }
    });
    let mut verdict = Decision::Yes(());
    let mut total = Stats::default();
    for outcome in outcomes {
        let (decision, stats) = outcome?;
        total.add(stats);
        match decision {
            Decision::No => verdict = Decision::No,
            Decision::Undecided if verdict.is_yes() => verdict = Decision::Undecided,
            _ => {}
        }
    }
    Ok((verdict, total))
}

pub fn is_hereditary(complex: &SimplicialComplex, property: HereditaryProperty) -> Result<bool> {
    // An unlimited budget never leaves a restriction undecided.
    let (decision, _) = is_hereditary_budgeted(complex, property, Budget::UNLIMITED)?;
    Ok(decision.is_yes())
}

/// A finite simple graph whose edges are labeled 1..|E| in listing order —
/// the ground set of its cycle matroid.
#[derive(Debug, Clone)]
pub struct LabeledGraph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
}

impl LabeledGraph {
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize)>) -> Result<LabeledGraph> {
        if edges.is_empty() {
            return Err(Error::EmptyInput);
        }
        let mut seen = std::collections::HashSet::new();
        for &(u, v) in &edges {
            for endpoint in [u, v] {
                if endpoint < 1 || endpoint > vertex_count {
                    return Err(Error::VertexOutOfRange { vertex: endpoint, n: vertex_count });
                }
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("loop at vertex {u}")));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(Error::InvalidGraph(format!("duplicate edge {{{u}, {v}}}")));
            }
        }
        Ok(LabeledGraph { vertex_count, edges })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }
}

/// The spanning-forest complex: vertices are the edge labels and facets are
/// the spanning forests (edge sets meeting each connected component in a
/// spanning tree). This is the cycle matroid of the graph.
pub fn spanning_forest_complex(graph: &LabeledGraph) -> Result<SimplicialComplex> {
    // Every spanning forest has #vertices − #components edges, the rank of
    // the cycle matroid.
    let rank = {
        let mut uf = UnionFind::new(graph.vertex_count());
        for &(u, v) in graph.edges() {
            uf.union(u - 1, v - 1);
        }
        graph.vertex_count() - uf.components()
    };
    let mut forests: Vec<Vec<usize>> = Vec::new();
    let mut picked = Vec::with_capacity(rank);
    grow_forests(
        graph,
        0,
        rank,
        &UnionFind::new(graph.vertex_count()),
        &mut picked,
        &mut forests,
    );
    let complex = SimplicialComplex::from_facets(graph.edge_count(), forests)?;
    debug_assert!(is_matroid(&complex));
    Ok(complex)
}

fn grow_forests(
    graph: &LabeledGraph,
    next: usize,
    rank: usize,
    uf: &UnionFind,
    picked: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if picked.len() == rank {
        out.push(picked.clone());
        return;
    }
    let needed = rank - picked.len();
    for index in next..graph.edge_count() {
        if graph.edge_count() - index < needed {
            break;
        }
        let (u, v) = graph.edges()[index];
        let mut extended = uf.clone();
        if !extended.union(u - 1, v - 1) {
            continue; // the edge would close a cycle
        }
        picked.push(index + 1);
        grow_forests(graph, index + 1, rank, &extended, picked, out);
        picked.pop();
    }
}

#[derive(Clone)]
struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(size: usize) -> UnionFind {
        UnionFind { parent: (0..size).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// False iff the two elements were already in one class.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }

    fn components(&mut self) -> usize {
        let roots: std::collections::HashSet<usize> =
            (0..self.parent.len()).map(|x| self.find(x)).collect();
        roots.len()
    }
}

/// Facets sorted reverse lexicographically: F precedes G when the largest
/// vertex where they differ lies in G. On facets encoded as vertex bitmasks
/// this is exactly ascending mask order, so on a pure complex the result is
/// the canonical facet order itself.
pub fn reverse_lex_order(complex: &SimplicialComplex) -> Result<FacetOrder> {
    if !complex.is_pure() {
        return Err(Error::NotPure);
    }
    let facets = complex.facets();
    let mut order: Vec<usize> = (0..facets.len()).collect();
    order.sort_by(|&a, &b| reverse_lex_cmp(&facets[a], &facets[b]));
    debug_assert!(order.iter().copied().eq(0..facets.len()));
    FacetOrder::new(order)
}

fn reverse_lex_cmp(f: &Face, g: &Face) -> Ordering {
    let top_f = f.difference(g).vertices().last();
    let top_g = g.difference(f).vertices().last();
    match (top_f, top_g) {
        (None, None) => Ordering::Equal,
        (Some(a), Some(b)) => a.cmp(&b),
        // One facet contains the other; the larger one owns the top
        // disagreement, so the smaller comes first.
        (Some(_), None) => Ordering::Greater,
        (None, Some(_)) => Ordering::Less,
    }
}

/// Membership flags for the eight classes; `None` marks a budgeted test that
/// ran out of allowance, or vertex decomposability on nonpure input (defined
/// here only for pure complexes).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClassReport {
    pub matroid: Option<bool>,
    pub shifted: Option<bool>,
    pub weakly_matroid: Option<bool>,
    pub vertex_decomposable: Option<bool>,
    pub hereditary_shellable: Option<bool>,
    pub hereditarily_strongly_shellable: Option<bool>,
    pub strongly_shellable: Option<bool>,
    pub shellable: Option<bool>,
}

impl ClassReport {
    /// Checks every implication arrow between the classes on the decided
    /// flags; a violation means a checker is wrong, hence the internal error.
    fn validate(&self, pure: bool) -> Result<()> {
        let mut arrows = vec![
            ("matroid", self.matroid, "hereditarily strongly shellable", self.hereditarily_strongly_shellable),
            ("matroid", self.matroid, "weakly matroidal", self.weakly_matroid),
            ("hereditarily strongly shellable", self.hereditarily_strongly_shellable, "strongly shellable", self.strongly_shellable),
            ("hereditarily strongly shellable", self.hereditarily_strongly_shellable, "hereditary shellable", self.hereditary_shellable),
            ("strongly shellable", self.strongly_shellable, "shellable", self.shellable),
            ("hereditary shellable", self.hereditary_shellable, "shellable", self.shellable),
            ("shifted", self.shifted, "hereditary shellable", self.hereditary_shellable),
            ("shifted", self.shifted, "weakly matroidal", self.weakly_matroid),
        ];
        if pure {
            // These arrows need purity: the 11-facet nonpure shifted fixture
            // has no strong shelling order, and vertex decomposability is
            // only tracked for pure complexes.
            arrows.push(("shifted", self.shifted, "strongly shellable", self.strongly_shellable));
            arrows.push(("weakly matroidal", self.weakly_matroid, "vertex decomposable", self.vertex_decomposable));
            arrows.push(("vertex decomposable", self.vertex_decomposable, "shellable", self.shellable));
        }
        for (from_name, from, to_name, to) in arrows {
            if from == Some(true) && to == Some(false) {
                return Err(Error::Internal(format!(
                    "{from_name} holds but {to_name} fails"
                )));
            }
        }
        Ok(())
    }
}

/// Runs all eight membership tests (searches and hereditary scans under the
/// given per-search budget) and validates the implication arrows among the
/// decided flags.
pub fn classify(complex: &SimplicialComplex, budget: Budget) -> Result<ClassReport> {
    let pure = complex.is_pure();
    let vertex_decomposable = if pure { Some(is_vertex_decomposable(complex)?) } else { None };
    let (strong, _) = find_strong_shelling_order_budgeted(complex, budget)?;
    let (plain, _) = find_shelling_order_budgeted(complex, budget)?;
    // A support too wide to enumerate leaves the hereditary flags open
    // instead of failing the whole report.
    let hereditary = |property| match is_hereditary_budgeted(complex, property, budget) {
        Ok((decision, _)) => Ok(decision),
        Err(Error::SupportTooLarge { .. }) => Ok(Decision::Undecided),
        Err(other) => Err(other),
    };
    let hereditary_plain = hereditary(HereditaryProperty::Shellable)?;
    let hereditary_strong = hereditary(HereditaryProperty::StronglyShellable)?;
    let report = ClassReport {
        matroid: Some(is_matroid(complex)),
        shifted: Some(is_shifted(complex)),
        weakly_matroid: Some(is_weakly_matroid(complex)),
        vertex_decomposable,
        hereditary_shellable: flag(hereditary_plain),
        hereditarily_strongly_shellable: flag(hereditary_strong),
        strongly_shellable: flag(strong.forget()),
        shellable: flag(plain.forget()),
    };
    report.validate(pure)?;
    Ok(report)
}

fn flag(decision: Decision<()>) -> Option<bool> {
    match decision {
        Decision::Yes(()) => Some(true),
        Decision::No => Some(false),
        Decision::Undecided => None,
    }
}
