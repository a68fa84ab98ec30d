use std::time::{Duration, Instant};

use indgen::Interrupt;

/// Stops searches once a wall-clock budget is spent.
#[derive(Debug, Clone, Copy)]
pub struct Deadline(Option<Instant>);

impl Deadline {
    pub fn after_ms(ms: Option<u64>) -> Self {
        Deadline(ms.map(|ms| Instant::now() + Duration::from_millis(ms)))
    }

    pub fn none() -> Self {
        Deadline(None)
    }
}

impl Interrupt for Deadline {
    fn should_stop(&self) -> bool {
        self.0.is_some_and(|t| Instant::now() >= t)
    }
}
