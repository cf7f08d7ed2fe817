//! Small numeric and hashing helpers.

/// Compensated accumulator (Kahan–Babuška–Neumaier). Keeps long sums
/// independent of magnitude ordering to within a few ulps.
#[derive(Debug, Clone, Copy, Default)]
pub struct KahanSum {
    sum: f64,
    compensation: f64,
}

impl KahanSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.compensation += (self.sum - t) + x;
        } else {
            self.compensation += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.compensation
    }
}

/// Compensated mean of a slice. Returns `None` on empty input.
pub fn mean(values: &[f64]) -> Option<f64> {
    if values.is_empty() {
        return None;
    }
    let mut acc = KahanSum::new();
    for &v in values {
        acc.add(v);
    }
    Some(acc.value() / values.len() as f64)
}

/// Two-pass sample standard deviation (n−1 denominator).
/// Returns `None` for fewer than two values.
pub fn sample_std(values: &[f64]) -> Option<f64> {
    if values.len() < 2 {
        return None;
    }
    let m = mean(values)?;
    let mut acc = KahanSum::new();
    for &v in values {
        let d = v - m;
        acc.add(d * d);
    }
    Some((acc.value() / (values.len() - 1) as f64).sqrt())
}

/// FNV-1a 64-bit hash. Fixed algorithm; used wherever a published,
/// cross-language-reproducible hash is required (sub-seeds, config digests).
pub fn fnv1a64(bytes: &[u8]) -> u64 {
    const OFFSET: u64 = 0xcbf29ce484222325;
    const PRIME: u64 = 0x100000001b3;
    let mut h = OFFSET;
    for &b in bytes {
        h ^= u64::from(b);
        h = h.wrapping_mul(PRIME);
    }
    h
}
