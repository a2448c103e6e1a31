use std::collections::BTreeMap;
use std::sync::{Arc, PoisonError, RwLock};

use zsections_core::scheme::CoefficientSource;
use zsections_core::{accelerated_coefficients, AcceleratedCoefficients};

/// Accelerated coefficient vectors keyed by order, shared between threads.
///
/// Each order is stored once; when two threads race to fill the same slot
/// the first insertion wins and both get the same `Arc`.
#[derive(Debug, Default)]
pub struct CoefficientCache {
    slots: RwLock<BTreeMap<usize, Arc<AcceleratedCoefficients>>>,
}

impl CoefficientCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.slots
            .read()
            .unwrap_or_else(PoisonError::into_inner)
            .len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

impl CoefficientSource for CoefficientCache {
    fn accelerated(&self, n: usize) -> zsections_core::Result<Arc<AcceleratedCoefficients>> {
        let hit = self
            .slots
            .read()
            .unwrap_or_else(PoisonError::into_inner)
            .get(&n)
            .cloned();
        if let Some(c) = hit {
            return Ok(c);
        }
        let fresh = Arc::new(accelerated_coefficients(n)?);
        let mut slots = self.slots.write().unwrap_or_else(PoisonError::into_inner);
        Ok(Arc::clone(slots.entry(n).or_insert(fresh)))
    }
}
