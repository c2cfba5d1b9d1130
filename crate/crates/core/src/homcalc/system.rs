use crate::linalg::{kernel_of_rows, Rational, Subspace};
use num_traits::Zero;
use std::collections::HashMap;

/// Homogeneous linear system assembled one coefficient at a time; equations
/// are keyed by an arbitrary index and only the nonzero ones are kept.
pub(crate) struct LinearSystem {
    unknowns: usize,
    rows: HashMap<usize, Vec<Rational>>,
}

impl LinearSystem {
    pub(crate) fn new(unknowns: usize) -> Self {
        LinearSystem { unknowns, rows: HashMap::new() }
    }

    pub(crate) fn add(&mut self, equation: usize, unknown: usize, c: &Rational) {
        if c.is_zero() {
            return;
        }
        let n = self.unknowns;
        let row = self.rows.entry(equation).or_insert_with(|| vec![Rational::zero(); n]);
        row[unknown] += c;
    }

    pub(crate) fn solutions(&self) -> Subspace {
        let rows: Vec<Vec<Rational>> =
            self.rows.values().filter(|r| r.iter().any(|c| !c.is_zero())).cloned().collect();
        kernel_of_rows(&rows, self.unknowns)
    }
}
