/// Size limits for the exhaustive algorithms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    /// Largest group that may be materialised by closure.
    pub max_elements: usize,
    /// Largest group for which a Cayley table is built.
    pub max_table: usize,
    /// Largest group whose full subgroup lattice may be enumerated.
    pub max_lattice: usize,
    /// Largest group on which `d(G)` is searched. `m(G)` searches are held
    /// to `max_lattice`.
    pub max_search: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_elements: 200_000,
            max_table: 2_500,
            max_lattice: 2_000,
            max_search: 20_000,
        }
    }
}

/// Cooperative cancellation for long searches. The std companion crate
/// implements this with a wall-clock deadline.
pub trait Interrupt {
    fn should_stop(&self) -> bool;
}

#[derive(Debug, Clone, Copy, Default)]
pub struct NeverInterrupt;

impl Interrupt for NeverInterrupt {
    #[inline]
    fn should_stop(&self) -> bool {
        false
    }
}

impl<F: Fn() -> bool> Interrupt for F {
    fn should_stop(&self) -> bool {
        self()
    }
}
