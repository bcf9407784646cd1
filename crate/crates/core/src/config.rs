//! Resource caps and knobs for the exponential oracles and searches.
//!
//! Every cap is a configuration value rather than a constant; exceeding one
//! is reported as an error (or an `unknown` decision), never silently
//! truncated.

/// Caps, seed and behaviour flags threaded through the library.
#[derive(Clone, Debug)]
pub struct Config {
    /// Edge cap for the semi-transitive orientation search.
    pub edge_cap: usize,
    /// Vertex cap for the colouring oracles (`k_colour`, `chromatic_number`,
    /// exhaustive 3-colouring enumeration).
    pub oracle_vertex_cap: usize,
    /// Vertex cap for the definitional perfectness check.
    pub perfect_vertex_cap: usize,
    /// Vertex cap for witness-word search.
    pub witness_vertex_cap: usize,
    /// Boundary lattice-point cap per tile for triangulation enumeration.
    pub boundary_cap: usize,
    /// Cell cap for the fixed-polyomino census.
    pub census_cell_cap: usize,
    /// Global seed; all randomness flows from it.
    pub seed: u64,
    /// Fall back to the backtracking oracle if the constructive colourer
    /// hits an invariant violation.
    pub oracle_fallback: bool,
}

impl Default for Config {
    fn default() -> Config {
        Config {
            edge_cap: 24,
            oracle_vertex_cap: 24,
            perfect_vertex_cap: 12,
            witness_vertex_cap: 8,
            boundary_cap: 16,
            census_cell_cap: 6,
            seed: 0,
            oracle_fallback: false,
        }
    }
}
