//! Integer partitions: weakly decreasing sequences of positive integers.
//!
//! Partitions index everything in this crate: irreducible symmetric-group
//! modules, cycle types, and symmetric-function basis elements. They are
//! canonical-form value types (sorted descending at construction) so they can
//! serve as unambiguous map keys.

use std::fmt;

use serde::{Deserialize, Serialize};

/// A partition of `n`: parts sorted weakly decreasing, all positive.
///
/// The empty partition is the unique partition of 0.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Builds a partition from arbitrary-order parts. Panics on a zero part.
    pub fn new(mut parts: Vec<usize>) -> Self {
        assert!(parts.iter().all(|&p| p > 0), "partition parts must be positive");
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// One-row partition `(n)`; the empty partition when `n = 0`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition(vec![n])
        }
    }

    /// One-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition(vec![1; n])
    }

    /// Hook `(n - i, 1^i)`; requires `0 <= i < n`.
    pub fn hook(n: usize, i: usize) -> Self {
        assert!(i < n);
        let mut parts = vec![n - i];
        parts.extend(std::iter::repeat_n(1, i));
        Partition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Sum of the parts.
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Multiplicity of `i` among the parts.
    pub fn multiplicity(&self, i: usize) -> usize {
        self.0.iter().filter(|&&p| p == i).count()
    }

    /// Part at `row` (0-indexed), or 0 past the last row.
    pub fn part(&self, row: usize) -> usize {
        self.0.get(row).copied().unwrap_or(0)
    }

    /// True iff `self` contains `other` as a Young diagram.
    pub fn contains(&self, other: &Partition) -> bool {
        other.0.iter().enumerate().all(|(r, &p)| self.part(r) >= p)
    }

    /// Is `self` a hook shape `(a, 1^b)`?
    pub fn is_hook(&self) -> bool {
        self.0.len() <= 1 || self.0[1] == 1
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, p) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// All partitions of `n`, in descending lexicographic order.
///
/// `partitions_of(0)` is the single empty partition.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(remaining: usize, max_part: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition(current.clone()));
            return;
        }
        for p in (1..=remaining.min(max_part)).rev() {
            current.push(p);
            rec(remaining - p, p, current, out);
            current.pop();
        }
    }
    rec(n, n.max(1), &mut current, &mut out);
    out
}
