//! Resource caps for enumeration.

/// Limits on how much a single construction is allowed to enumerate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Largest group order that will be enumerated.
    pub max_order: u64,
    /// Largest number of points a constructed G-set (or level carrier) may have.
    pub max_points: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_order: 120,
            max_points: 20_000_000,
        }
    }
}

impl Caps {
    pub fn with_max_order(mut self, max_order: u64) -> Self {
        self.max_order = max_order;
        self
    }

    pub fn with_max_points(mut self, max_points: u64) -> Self {
        self.max_points = max_points;
        self
    }
}
