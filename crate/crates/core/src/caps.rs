/// Size limits for every exponential enumeration in the crate.
///
/// Exceeding a cap is always a hard [`Error::CapExceeded`](crate::Error::CapExceeded);
/// nothing is silently truncated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    /// Ground-set size for circuit, basis and support-complex enumeration.
    pub enumeration: usize,
    /// Vertex count for Alexander duals (and therefore for building Z).
    pub dual: usize,
    /// Total number of faces a homology computation may expand.
    pub faces: usize,
    /// Ground-set size up to which explicit bases are checked for basis exchange.
    pub explicit_validation: usize,
    /// Ground-set size up to which signed circuits are checked for elimination.
    pub signed_validation: usize,
    /// Ground-set size for the Meshulam scan (2^n homology computations).
    pub meshulam: usize,
    /// Number of color classes for the colorful brute force (2^n selections).
    pub colorful: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            enumeration: 16,
            dual: 16,
            faces: 1 << 20,
            explicit_validation: 12,
            signed_validation: 10,
            meshulam: 8,
            colorful: 20,
        }
    }
}

impl Caps {
    /// Defaults with the ground-set caps raised or lowered to `n`.
    pub fn with_ground_cap(n: usize) -> Self {
        Caps {
            enumeration: n,
            dual: n,
            ..Caps::default()
        }
    }
}
