use serde::{Deserialize, Serialize};

use crate::error::{malformed, Result};
use crate::lattice::{Assignment, ItemId};

/// Knapsack data: `n` items with positive integer costs, `k` dimensions, and
/// an integer budget.
///
/// Items whose cost exceeds the budget are allowed; no algorithm will ever
/// select them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Instance {
    k: usize,
    costs: Vec<u64>,
    budget: u64,
}

impl Instance {
    pub fn new(k: usize, costs: Vec<u64>, budget: u64) -> Result<Self> {
        if k == 0 {
            return Err(malformed("k must be at least 1"));
        }
        if let Some(pos) = costs.iter().position(|&c| c == 0) {
            return Err(malformed(format!("item {} has zero cost; costs must be >= 1", pos + 1)));
        }
        if budget == 0 {
            return Err(malformed("budget must be at least 1"));
        }
        Ok(Self { k, costs, budget })
    }

    /// Same items, with a budget large enough to admit every item.
    pub fn unconstrained(k: usize, costs: Vec<u64>) -> Result<Self> {
        let total = costs.iter().sum::<u64>().max(1);
        Self::new(k, costs, total)
    }

    pub fn n(&self) -> usize {
        self.costs.len()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn budget(&self) -> u64 {
        self.budget
    }

    pub fn costs(&self) -> &[u64] {
        &self.costs
    }

    pub fn total_cost(&self) -> u64 {
        self.costs.iter().sum()
    }

    /// Cost of one item. Panics on an out-of-range id; use [`Instance::cost`]
    /// for checked access over an assignment.
    pub fn item_cost(&self, item: ItemId) -> u64 {
        self.costs[item.index()]
    }

    /// `c(S)`: total cost of the items assigned in `s`.
    pub fn cost(&self, s: &Assignment) -> Result<u64> {
        s.items().try_fold(0u64, |acc, a| {
            self.costs
                .get(a.index())
                .map(|c| acc + c)
                .ok_or_else(|| malformed(format!("item {a} outside 1..={}", self.n())))
        })
    }

    pub fn is_feasible(&self, s: &Assignment) -> Result<bool> {
        Ok(self.cost(s)? <= self.budget)
    }

    pub fn items(&self) -> impl Iterator<Item = ItemId> + Clone {
        (0..self.n()).map(ItemId::from_index)
    }
}
