//! Strong shellability of simplicial complexes.
//!
//! A shelling order adds facets one at a time so that each new facet meets
//! the complex built so far in a nonempty union of ridges; a *strong* shelling
//! order additionally forces, for every earlier facet F_i and the new facet
//! F_j, a witness facet F_k between them with |F_j ∖ F_k| = 1,
//! F_i ∩ F_j ⊆ F_k and F_k ⊆ F_i ∪ F_j. This crate decides and certifies
//! both properties and the web of notions around them:
//!
//! * [`complex`] — canonical facet-list representation over [n] and the set
//!   algebra on it (links, restrictions, joins, complements, expansions,
//!   skeletons, f/h-vectors, boundary ridges).
//! * [`shelling`] — order verifiers and deterministic backtracking searches,
//!   rearrangement into dimension-decreasing orders, inversion-pair counts.
//! * [`gamma`] — the codimension-one graph on facets, harmonious and
//!   quasi-harmonious tests, distance-preserving deletion orders, and the
//!   graph route to deciding strong shellability of pure complexes.
//! * [`hassign`] — h-vector label assignments and the removal procedure that
//!   decides (strong) shellability through candidate facets.
//! * [`classes`] — matroid, shifted, weakly matroidal, vertex-decomposable
//!   and hereditary classes, with the implication checks between them.
//! * [`ideal`] — facet ideals as squarefree monomial ideals and linear
//!   quotients certification.
//! * [`poset`] — finite posets, order complexes, rank selection, intervals,
//!   ordinal sums.
//! * [`enumerate`] — exhaustive and randomized complex generators used by the
//!   equivalence and closure test suites.
//! * [`fixtures`] — the worked examples shared by tests and benchmarks.
//!
//! Searches are deterministic: candidates are tried in ascending canonical
//! facet order and the first solution in that branch order is returned, with
//! or without the `parallel` feature (parallel sweeps merge to the sequential
//! answer). Budgeted searches return [`Decision::Undecided`] when the node
//! allowance runs out, never a wrong yes/no.

pub mod classes;
pub mod complex;
pub mod decision;
pub mod enumerate;
mod error;
pub mod face;
pub mod fixtures;
pub mod gamma;
pub mod graph;
pub mod hassign;
pub mod ideal;
mod par;
pub mod poset;
pub mod shelling;

pub use complex::{DropReport, FVector, HVector, SimplicialComplex};
pub use decision::{Budget, Decision, Stats};
pub use error::{Error, Result};
pub use face::Face;
