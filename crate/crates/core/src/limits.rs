/// Size caps for the exponential routines.
///
/// Exceeding a cap is always an [`Error::Capacity`](crate::Error::Capacity).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest order accepted by the isomorphism search.
    pub isomorphism: usize,
    /// Largest base-graph order for minimum zero forcing set enumeration.
    pub enumeration: usize,
    /// Largest order accepted by the maximum clique search.
    pub clique: usize,
    /// Largest tree order for enumerating all minimum path covers.
    pub path_covers: usize,
}

/// Subset masks are `u64`, which bounds every mask-based routine.
pub const MASK_BITS: usize = 64;

impl Default for Limits {
    fn default() -> Self {
        Limits {
            isomorphism: 16,
            enumeration: 30,
            clique: 24,
            path_covers: 20,
        }
    }
}

impl Limits {
    /// Caps used by the law checker, whose corpora produce zero forcing
    /// graphs with far more nodes than the base graphs have vertices.
    pub fn for_laws() -> Self {
        Limits {
            isomorphism: 16,
            enumeration: 30,
            clique: 4096,
            path_covers: 20,
        }
    }
}
