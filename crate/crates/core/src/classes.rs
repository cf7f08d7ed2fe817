//! Popularity classes: labeled half-open intervals used to group trains.

use crate::error::{Error, Result};
use serde::Serialize;

/// A labeled popularity interval `[lo, hi)`. `hi == u64::MAX` marks the
/// open-ended top class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PopularityClass {
    pub label: String,
    pub lo: u64,
    pub hi: u64,
}

impl PopularityClass {
    pub fn contains(&self, p_raw: u64) -> bool {
        self.lo <= p_raw && p_raw < self.hi
    }

    fn auto_label(lo: u64, hi: u64) -> String {
        if hi == u64::MAX {
            format!("p{lo}_plus")
        } else if hi == lo + 1 {
            format!("p{lo}")
        } else {
            format!("p{lo}_{}", hi - 1)
        }
    }
}

/// Ordered, disjoint classes covering every popularity from 1 upward.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassScheme {
    classes: Vec<PopularityClass>,
}

/// Default class edges. The lowest classes isolate the single-occurrence and
/// `p < 5` regions, the top classes the moderate and very popular regions;
/// the final class is open-ended.
pub const DEFAULT_EDGES: [u64; 8] = [1, 2, 5, 50, 500, 5000, 25_000, 100_000];

impl ClassScheme {
    /// Build half-open classes from ascending edges; the last class extends
    /// to infinity. Edges must start at 1 so the scheme covers `[1, ∞)`.
    pub fn from_edges(edges: &[u64]) -> Result<Self> {
        if edges.is_empty() {
            return Err(Error::InvalidScheme("no edges".into()));
        }
        if edges[0] != 1 {
            return Err(Error::InvalidScheme(format!(
                "first edge must be 1 to cover all popularities, got {}",
                edges[0]
            )));
        }
        if !edges.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::InvalidScheme(
                "edges must be strictly increasing".into(),
            ));
        }
        let mut classes = Vec::with_capacity(edges.len());
        for (i, &lo) in edges.iter().enumerate() {
            let hi = edges.get(i + 1).copied().unwrap_or(u64::MAX);
            classes.push(PopularityClass {
                label: PopularityClass::auto_label(lo, hi),
                lo,
                hi,
            });
        }
        Ok(Self { classes })
    }

    pub fn default_scheme() -> Self {
        Self::from_edges(&DEFAULT_EDGES).expect("default edges are valid")
    }

    pub fn classes(&self) -> &[PopularityClass] {
        &self.classes
    }

    /// The unique class with `lo <= p_raw < hi`. Errors for `p_raw < 1`.
    pub fn classify(&self, p_raw: u64) -> Result<&PopularityClass> {
        if p_raw < 1 {
            return Err(Error::InvalidPopularity(p_raw));
        }
        self.classes
            .iter()
            .find(|c| c.contains(p_raw))
            .ok_or(Error::Unclassifiable(p_raw))
    }

    /// Interval-histogram bin width used when none is given: 8 minutes for
    /// the high-popularity classes, 2 hours for `p < 5`, 1.5 hours otherwise.
    pub fn default_interval_bin_width(class: &PopularityClass) -> u64 {
        if class.lo >= 25_000 {
            480
        } else if class.hi <= 5 {
            7200
        } else {
            5400
        }
    }
}

impl Default for ClassScheme {
    fn default() -> Self {
        Self::default_scheme()
    }
}
