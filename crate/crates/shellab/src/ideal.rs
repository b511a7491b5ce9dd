//! Monomial ideals, facet ideals of complexes, and the linear-quotients
//! certificate: an order f_1, …, f_m of the generators such that each colon
//! ideal ⟨f_1, …, f_{i−1}⟩ : f_i is generated by variables. For monomial
//! ideals that holds at step i iff for every j < i some k < i makes
//! u_k : u_i a single variable dividing u_j : u_i.

use std::collections::HashSet;
use std::fmt;

use crate::complex::SimplicialComplex;
use crate::decision::{Budget, Decision, Meter, Stats};
use crate::error::{Error, Result};
use crate::shelling::{FacetOrder, MAX_FACETS};

/// A monomial in a fixed polynomial ring, stored as its exponent vector;
/// variables are 1-based like vertices, so x^F has the exponents of F's
/// indicator vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exponents: Vec<u32>,
}

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Monomial {
        Monomial { exponents }
    }

    /// The constant monomial 1 in n variables.
    pub fn one(n: usize) -> Monomial {
        Monomial { exponents: vec![0; n] }
    }

    /// The squarefree monomial Π x_v over the given 1-based variables.
    pub fn squarefree<I>(n: usize, variables: I) -> Result<Monomial>
    where
        I: IntoIterator<Item = usize>,
    {
        let mut exponents = vec![0u32; n];
        for v in variables {
            if v < 1 || v > n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            exponents[v - 1] = 1;
        }
        Ok(Monomial { exponents })
    }

    pub fn n_vars(&self) -> usize {
        self.exponents.len()
    }

    /// Exponent of the 1-based variable v.
    pub fn exponent(&self, v: usize) -> u32 {
        self.exponents[v - 1]
    }

    pub fn degree(&self) -> u32 {
        self.exponents.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exponents.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exponents.iter().all(|&e| e <= 1)
    }

    /// Some(v) iff the monomial is the single variable x_v.
    pub fn as_variable(&self) -> Option<usize> {
        let mut found = None;
        for (index, &e) in self.exponents.iter().enumerate() {
            match e {
                0 => {}
                1 if found.is_none() => found = Some(index + 1),
                _ => return None,
            }
        }
        found
    }

    /// Componentwise comparison; monomials of different rings never divide
    /// one another.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.n_vars() == other.n_vars()
            && self.exponents.iter().zip(&other.exponents).all(|(a, b)| a <= b)
    }

    /// The colon u : v with exponents max(u_i − v_i, 0).
    pub fn colon(&self, other: &Monomial) -> Result<Monomial> {
        if self.n_vars() != other.n_vars() {
            return Err(Error::MismatchedVariables);
        }
        let exponents = self
            .exponents
            .iter()
            .zip(&other.exponents)
            .map(|(&a, &b)| a.saturating_sub(b))
            .collect();
        Ok(Monomial { exponents })
    }

    /// The product, summing exponents.
    pub fn times(&self, other: &Monomial) -> Result<Monomial> {
        if self.n_vars() != other.n_vars() {
            return Err(Error::MismatchedVariables);
        }
        let exponents = self
            .exponents
            .iter()
            .zip(&other.exponents)
            .map(|(&a, &b)| a + b)
            .collect();
        Ok(Monomial { exponents })
    }
}

impl fmt::Display for Monomial {
    /// Sorted variable products, `x1*x2^2*x5`; the unit is `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (index, &e) in self.exponents.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "x{}", index + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A monomial ideal listed by its minimal generators, in the order they
/// first appeared (facet ideals inherit the canonical facet order).
#[derive(Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    generators: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Reduces the given generators to the minimal ones, dropping duplicates
    /// and any generator divisible by another.
    pub fn new(generators: Vec<Monomial>) -> Result<MonomialIdeal> {
        let Some(first) = generators.first() else {
            return Err(Error::EmptyInput);
        };
        let n = first.n_vars();
        if generators.iter().any(|g| g.n_vars() != n) {
            return Err(Error::MismatchedVariables);
        }
        let mut minimal: Vec<Monomial> = Vec::new();
        for g in generators {
            if minimal.iter().any(|kept| kept.divides(&g)) {
                continue;
            }
            minimal.retain(|kept| !g.divides(kept));
            minimal.push(g);
        }
        Ok(MonomialIdeal { generators: minimal })
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    pub fn generator_count(&self) -> usize {
        self.generators.len()
    }

    pub fn n_vars(&self) -> usize {
        self.generators[0].n_vars()
    }

    pub fn is_squarefree(&self) -> bool {
        self.generators.iter().all(Monomial::is_squarefree)
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "⟨")?;
        for (index, g) in self.generators.iter().enumerate() {
            if index > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, "⟩")
    }
}

/// The facet ideal I(Δ) = ⟨x^F : F a facet⟩, generators in canonical facet
/// order. Facets are incomparable, so the generators are already minimal.
pub fn facet_ideal(complex: &SimplicialComplex) -> MonomialIdeal {
    let n = complex.n();
    let generators = complex
        .facets()
        .iter()
        .map(|facet| {
            Monomial::squarefree(n, facet.vertices()).expect("facet vertices lie in [n]")
        })
        .collect();
    MonomialIdeal { generators }
}

/// Whether the generators, taken in `order`, have linear quotients: at every
/// step i and for every earlier j there is an earlier k with u_k : u_i a
/// single variable dividing u_j : u_i.
pub fn has_linear_quotients(ideal: &MonomialIdeal, order: &FacetOrder) -> Result<bool> {
    let gens = ideal.generators();
    if order.len() != gens.len() {
        return Err(Error::NotAPermutation);
    }
    let ord = order.as_slice();
    for i in 1..ord.len() {
        let new = &gens[ord[i]];
        for &j in &ord[..i] {
            let target = gens[j].colon(new)?;
            let witnessed = ord[..i].iter().any(|&k| {
                let quotient = gens[k].colon(new).expect("generators share one ring");
                quotient.as_variable().is_some() && quotient.divides(&target)
            });
            if !witnessed {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Backtracking search for a linear-quotients order, trying generators in
/// ascending index order; placement feasibility depends only on the set of
/// placed generators, so failed sets are memoized on their bitmask.
struct QuotientSearch {
    t: usize,
    full: u128,
    /// wit[g·t + j]: mask of k whose colon into g is a variable witnessing
    /// the earlier generator j once g is placed after both.
    wit: Vec<u128>,
    /// cant_follow[f]: generators that can never be placed after f; placing
    /// f while one of them is unplaced is hopeless.
    cant_follow: Vec<u128>,
    meter: Meter,
    failed: HashSet<u128>,
    prefix: Vec<usize>,
    placed: u128,
}

enum Walk {
    Found,
    Exhausted,
    Aborted,
}

impl QuotientSearch {
    fn new(ideal: &MonomialIdeal, budget: Budget) -> Result<QuotientSearch> {
        let gens = ideal.generators();
        let t = gens.len();
        if t > MAX_FACETS {
            return Err(Error::TooManyFacets { got: t, max: MAX_FACETS });
        }
        let colons: Vec<Vec<Monomial>> = gens
            .iter()
            .map(|g| {
                gens.iter()
                    .map(|h| h.colon(g).expect("generators share one ring"))
                    .collect()
            })
            .collect();
        let mut wit = vec![0u128; t * t];
        let mut cant_follow = vec![0u128; t];
        for g in 0..t {
            for j in 0..t {
                if j == g {
                    continue;
                }
                let mut mask = 0u128;
                for k in 0..t {
                    if k == g {
                        continue;
                    }
                    let quotient = &colons[g][k];
                    if quotient.as_variable().is_some() && quotient.divides(&colons[g][j]) {
                        mask |= 1u128 << k;
                    }
                }
                wit[g * t + j] = mask;
                if mask == 0 {
                    // j can never precede g, so g can never follow j… hence
                    // anything placed after j excludes g: record g as unable
                    // to follow j.
                    cant_follow[j] |= 1u128 << g;
                }
            }
        }
        Ok(QuotientSearch {
            t,
            full: if t == 128 { u128::MAX } else { (1u128 << t) - 1 },
            wit,
            cant_follow,
            meter: Meter::new(budget),
            failed: HashSet::new(),
            prefix: Vec::with_capacity(t),
            placed: 0,
        })
    }

    fn can_place(&self, g: usize) -> bool {
        if self.cant_follow[g] & !self.placed & self.full != 0 {
            return false;
        }
        self.prefix.iter().all(|&j| self.wit[g * self.t + j] & self.placed != 0)
    }

    fn dfs(&mut self) -> Walk {
        if self.prefix.len() == self.t {
            return Walk::Found;
        }
        if self.failed.contains(&self.placed) {
            return Walk::Exhausted;
        }
        for g in 0..self.t {
            if self.placed & (1u128 << g) != 0 {
                continue;
            }
            if !self.meter.charge() {
                return Walk::Aborted;
            }
            if self.can_place(g) {
                self.prefix.push(g);
                self.placed |= 1u128 << g;
                match self.dfs() {
                    Walk::Found => return Walk::Found,
                    Walk::Aborted => return Walk::Aborted,
                    Walk::Exhausted => {
                        self.prefix.pop();
                        self.placed &= !(1u128 << g);
                    }
                }
            }
        }
        self.failed.insert(self.placed);
        Walk::Exhausted
    }
}

/// Budgeted search for the first linear-quotients order in lexicographic
/// generator-index order.
pub fn find_linear_quotient_order_budgeted(
    ideal: &MonomialIdeal,
    budget: Budget,
) -> Result<(Decision<FacetOrder>, Stats)> {
    let mut search = QuotientSearch::new(ideal, budget)?;
    let walk = search.dfs();
    let stats = search.meter.stats();
    let decision = match walk {
        Walk::Found => {
            let order = FacetOrder::new(std::mem::take(&mut search.prefix))?;
            debug_assert_eq!(has_linear_quotients(ideal, &order), Ok(true));
            Decision::Yes(order)
        }
        Walk::Exhausted => Decision::No,
        Walk::Aborted => Decision::Undecided,
    };
    Ok((decision, stats))
}

pub fn find_linear_quotient_order(ideal: &MonomialIdeal) -> Result<Option<FacetOrder>> {
    let (decision, _) = find_linear_quotient_order_budgeted(ideal, Budget::UNLIMITED)?;
    Ok(decision.witness())
}
