/// Size guards for the exhaustive routines.
///
/// Exceeding a limit aborts the computation with
/// [`Error::CapExceeded`](crate::Error::CapExceeded); nothing is ever truncated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest edge count for which all `2^|E|` orientations are scanned.
    pub max_edges: usize,
    /// Largest number of simple cycles that may be enumerated.
    pub max_cycles: usize,
    /// Largest edge count of a lexicographic product `G^k`.
    pub max_product_edges: usize,
    /// Largest number of longest paths enumerated by the path-morphology check.
    pub max_longest_paths: usize,
}

impl Limits {
    pub const DEFAULT: Limits = Limits {
        max_edges: 20,
        max_cycles: 1_000_000,
        max_product_edges: 4_000_000,
        max_longest_paths: 100_000,
    };
}

impl Default for Limits {
    fn default() -> Self {
        Self::DEFAULT
    }
}
