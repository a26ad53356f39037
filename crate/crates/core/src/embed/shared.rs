use std::sync::atomic::{AtomicU64, Ordering};

/// Row-major f64 matrix that many training threads may update at once.
///
/// Each coordinate is stored as the bit pattern of an f64 in an `AtomicU64`
/// accessed with relaxed ordering. Read-modify-write is not atomic as a
/// whole, so concurrent updates to the same coordinate can lose one another;
/// asynchronous SGD tolerates that. With a single thread the arithmetic is
/// identical to a plain `Vec<f64>`.
pub(crate) struct SharedRows {
    data: Vec<AtomicU64>,
    dim: usize,
}

impl SharedRows {
    pub fn from_values(values: Vec<f64>, dim: usize) -> Self {
        debug_assert_eq!(values.len() % dim, 0);
        SharedRows {
            data: values.into_iter().map(|x| AtomicU64::new(x.to_bits())).collect(),
            dim,
        }
    }

    pub fn load(&self, row: usize, out: &mut [f64]) {
        let cells = &self.data[row * self.dim..(row + 1) * self.dim];
        for (o, c) in out.iter_mut().zip(cells) {
            *o = f64::from_bits(c.load(Ordering::Relaxed));
        }
    }

    /// `row += scale * delta`
    pub fn add_scaled(&self, row: usize, delta: &[f64], scale: f64) {
        let cells = &self.data[row * self.dim..(row + 1) * self.dim];
        for (c, d) in cells.iter().zip(delta) {
            let x = f64::from_bits(c.load(Ordering::Relaxed)) + scale * d;
            c.store(x.to_bits(), Ordering::Relaxed);
        }
    }

    pub fn into_values(self) -> Vec<f64> {
        self.data.into_iter().map(|c| f64::from_bits(c.into_inner())).collect()
    }
}
