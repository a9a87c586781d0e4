use crate::error::{Error, Result};

/// Explicit resource budgets for the enumeration-heavy operations.
///
/// Defaults: direct enumeration of at most 2^24 codewords, coset searches up
/// to weight 4, and 10^7 nodes for the self-dual-subcode search.  Exceeding a
/// budget is a typed error, never an approximation.
#[derive(Debug, Clone, Copy)]
pub struct Budgets {
    /// Maximum number of objects a direct enumeration may visit.
    pub max_enumeration: u64,
    /// Default weight bound for coset low-weight searches.
    pub max_coset_weight: u32,
    /// Node budget for the self-dual-subcode search.
    pub max_search_nodes: u64,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets {
            max_enumeration: 1 << 24,
            max_coset_weight: 4,
            max_search_nodes: 10_000_000,
        }
    }
}

impl Budgets {
    /// Checks that an enumeration of `needed` objects fits the budget.
    pub fn check_enumeration(&self, what: &'static str, needed: u128) -> Result<()> {
        if needed > self.max_enumeration as u128 {
            return Err(Error::Enumeration {
                what,
                needed,
                limit: self.max_enumeration,
            });
        }
        Ok(())
    }
}
