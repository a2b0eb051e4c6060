use std::time::{Duration, Instant};

/// Limits on an exhaustive search. Exceeding any of them ends the search
/// with [`Verdict::BudgetExceeded`].
#[derive(Clone, Copy, Debug)]
pub struct SearchBudget {
    pub max_vertices: usize,
    /// Number of distinct finite entries, i.e. candidate labels.
    pub max_universe: usize,
    /// Partial labelings visited.
    pub max_labelings: u64,
    /// Determinations tried by the ranged search.
    pub max_determinations: u64,
    /// Wall-clock cap. Off by default so that verdicts are reproducible.
    pub time_cap: Option<Duration>,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_vertices: 6,
            max_universe: 16,
            max_labelings: 20_000_000,
            max_determinations: 1_000_000,
            time_cap: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict<T> {
    /// Realizable; carries the first certificate in enumeration order.
    Yes(T),
    No,
    BudgetExceeded,
}

impl<T> Verdict<T> {
    pub fn is_yes(&self) -> bool {
        matches!(self, Verdict::Yes(_))
    }
}

pub(crate) struct Exhausted;

pub(crate) struct Meter {
    left: u64,
    deadline: Option<Instant>,
    ticks: u32,
}

impl Meter {
    pub fn new(b: &SearchBudget) -> Self {
        Meter { left: b.max_labelings, deadline: b.time_cap.map(|d| Instant::now() + d), ticks: 0 }
    }

    pub fn tick(&mut self) -> Result<(), Exhausted> {
        if self.left == 0 {
            return Err(Exhausted);
        }
        self.left -= 1;
        self.ticks = self.ticks.wrapping_add(1);
        if self.ticks.is_multiple_of(1024) && self.deadline.is_some_and(|d| Instant::now() > d) {
            return Err(Exhausted);
        }
        Ok(())
    }
}
