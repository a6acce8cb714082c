use serde::{Deserialize, Serialize};

/// Instance caps and search budgets shared by the oracles. Exceeding a cap
/// is reported as [`Error::TooLarge`](crate::Error::TooLarge), never
/// answered approximately.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Config {
    /// Largest vertex count for odd-subset enumeration (density, k-dense sets).
    pub density_max_n: usize,
    /// Largest edge count for the chromatic index oracle.
    pub chi_max_edges: usize,
    /// Largest `n + m` for the total chromatic number oracle.
    pub total_max_elements: usize,
    /// Largest vertex count for the exact maximum-augmentation fallback in embedding.
    pub embed_exact_max_n: usize,
    /// Node budget per backtracking search.
    pub search_budget: u64,
    /// Whether embedding may use exchange moves after greedy saturation.
    pub embed_exchange: bool,
    /// Whether embedding may fall back to exact branch-and-bound.
    pub embed_exact_fallback: bool,
}

impl Default for Config {
    fn default() -> Self {
        Self {
            density_max_n: 20,
            chi_max_edges: 40,
            total_max_elements: 24,
            embed_exact_max_n: 12,
            search_budget: 50_000_000,
            embed_exchange: true,
            embed_exact_fallback: true,
        }
    }
}
