/// Outcome of a budgeted search: a definite yes (with witness), a definite
/// no, or an aborted search whose budget ran out before either was reached.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decision<T> {
    Yes(T),
    No,
    Undecided,
}

impl<T> Decision<T> {
    pub fn is_yes(&self) -> bool {
        matches!(self, Decision::Yes(_))
    }

    pub fn is_no(&self) -> bool {
        matches!(self, Decision::No)
    }

    pub fn is_undecided(&self) -> bool {
        matches!(self, Decision::Undecided)
    }

    /// The witness, if the decision is yes.
    pub fn witness(self) -> Option<T> {
        match self {
            Decision::Yes(w) => Some(w),
            _ => None,
        }
    }

    pub fn as_ref(&self) -> Decision<&T> {
        match self {
            Decision::Yes(w) => Decision::Yes(w),
            Decision::No => Decision::No,
            Decision::Undecided => Decision::Undecided,
        }
    }

    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> Decision<U> {
        match self {
            Decision::Yes(w) => Decision::Yes(f(w)),
            Decision::No => Decision::No,
            Decision::Undecided => Decision::Undecided,
        }
    }

    /// Collapses the witness, keeping only the three-way answer.
    pub fn forget(self) -> Decision<()> {
        self.map(|_| ())
    }
}

/// Node allowance for a backtracking search. Every search node (an attempt to
/// extend a partial solution) costs one unit; an exhausted budget aborts the
/// search with [`Decision::Undecided`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub max_nodes: u64,
}

impl Budget {
    pub const UNLIMITED: Budget = Budget { max_nodes: u64::MAX };

    pub fn new(max_nodes: u64) -> Budget {
        Budget { max_nodes }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::UNLIMITED
    }
}

/// Work counters reported alongside search results.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Stats {
    /// Search nodes visited.
    pub nodes: u64,
}

impl Stats {
    pub fn add(&mut self, other: Stats) {
        self.nodes = self.nodes.saturating_add(other.nodes);
    }
}

/// Budget bookkeeping threaded through one search tree.
#[derive(Debug)]
pub(crate) struct Meter {
    max_nodes: u64,
    pub(crate) nodes: u64,
}

impl Meter {
    pub(crate) fn new(budget: Budget) -> Meter {
        Meter { max_nodes: budget.max_nodes, nodes: 0 }
    }

    /// Charges one node; false once the allowance is exhausted.
    pub(crate) fn charge(&mut self) -> bool {
        if self.nodes >= self.max_nodes {
            return false;
        }
        self.nodes += 1;
        true
    }

    pub(crate) fn stats(&self) -> Stats {
        Stats { nodes: self.nodes }
    }
}
