//! Small sets of vertex labels, the currency of every module.
//!
//! Vertices are 1-based integer labels. Sets are stored as 64-bit masks
//! (bit `v-1` for label `v`), which caps ground sets at 64 labels; plenty
//! for desk-scale instances. The `Ord` instance is the canonical order
//! used everywhere for deterministic output: first by cardinality, then
//! lexicographically on the sorted label lists.

use std::cmp::Ordering;
use std::fmt;

use crate::error::Error;

/// Maximum vertex label supported by the bitset representation.
pub const MAX_VERTEX: u32 = 64;

/// A set of vertex labels in `1..=64`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet(u64);

/// A tube of a graph: a vertex set inducing a connected subgraph.
/// Validity is re-checked against the graph at module boundaries.
pub type Tube = VertexSet;

/// A block of a building set. Membership is re-checked at module boundaries.
pub type Block = VertexSet;

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn singleton(v: u32) -> VertexSet {
        debug_assert!((1..=MAX_VERTEX).contains(&v));
        VertexSet(1u64 << (v - 1))
    }

    /// The full set `{1..n}`.
    pub fn range(n: u32) -> VertexSet {
        debug_assert!(n <= MAX_VERTEX);
        if n == 0 {
            VertexSet(0)
        } else {
            VertexSet(u64::MAX >> (64 - n))
        }
    }

    pub fn from_labels<I: IntoIterator<Item = u32>>(labels: I) -> Result<VertexSet, Error> {
        let mut mask = 0u64;
        for v in labels {
            if v == 0 || v > MAX_VERTEX {
                return Err(Error::VertexOutOfRange { vertex: v });
            }
            mask |= 1u64 << (v - 1);
        }
        Ok(VertexSet(mask))
    }

    pub fn len(&self) -> u32 {
        self.0.count_ones()
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn contains(&self, v: u32) -> bool {
        (1..=MAX_VERTEX).contains(&v) && self.0 & (1u64 << (v - 1)) != 0
    }

    pub fn insert(&mut self, v: u32) {
        debug_assert!((1..=MAX_VERTEX).contains(&v));
        self.0 |= 1u64 << (v - 1);
    }

    pub fn union(&self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(&self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(&self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    pub fn remove(&self, v: u32) -> VertexSet {
        debug_assert!((1..=MAX_VERTEX).contains(&v));
        VertexSet(self.0 & !(1u64 << (v - 1)))
    }

    pub fn is_subset(&self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_strict_subset(&self, other: VertexSet) -> bool {
        self.is_subset(other) && self.0 != other.0
    }

    pub fn is_disjoint(&self, other: VertexSet) -> bool {
        self.0 & other.0 == 0
    }

    pub fn intersects(&self, other: VertexSet) -> bool {
        self.0 & other.0 != 0
    }

    /// Smallest label, if any.
    pub fn min(self) -> Option<u32> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() + 1)
        }
    }

    pub fn max(self) -> Option<u32> {
        if self.0 == 0 {
            None
        } else {
            Some(64 - self.0.leading_zeros())
        }
    }

    /// Labels in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = u32> {
        let mut mask = self.0;
        std::iter::from_fn(move || {
            if mask == 0 {
                None
            } else {
                let v = mask.trailing_zeros() + 1;
                mask &= mask - 1;
                Some(v)
            }
        })
    }

    pub fn to_vec(&self) -> Vec<u32> {
        self.iter().collect()
    }

    pub fn bits(&self) -> u64 {
        self.0
    }

    pub fn from_bits(bits: u64) -> VertexSet {
        VertexSet(bits)
    }

    /// True when the labels form an integer interval `[i, j]`.
    pub fn is_interval(&self) -> bool {
        if self.0 == 0 {
            return true;
        }
        let shifted = self.0 >> self.0.trailing_zeros();
        shifted & (shifted + 1) == 0
    }

    /// All non-empty subsets, in no particular order. Only for small sets.
    pub fn nonempty_subsets(&self) -> Vec<VertexSet> {
        let full = self.0;
        let mut out = Vec::new();
        let mut sub = full;
        while sub != 0 {
            out.push(VertexSet(sub));
            sub = (sub - 1) & full;
        }
        out
    }
}

impl Ord for VertexSet {
    /// Canonical order: by size, then lexicographic on sorted labels.
    fn cmp(&self, other: &Self) -> Ordering {
        let by_size = self.len().cmp(&other.len());
        if by_size != Ordering::Equal {
            return by_size;
        }
        if self.0 == other.0 {
            return Ordering::Equal;
        }
        // The set owning the lowest differing label is lexicographically smaller.
        let diff = self.0 ^ other.0;
        let low = diff & diff.wrapping_neg();
        if self.0 & low != 0 {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<String> = self.iter().map(|v| v.to_string()).collect();
        write!(f, "[{}]", labels.join(","))
    }
}

/// Parse the `"[1,4]"` key format used in JSON maps.
pub fn parse_block_key(key: &str) -> Result<VertexSet, Error> {
    let inner = key
        .trim()
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
        .ok_or_else(|| Error::BadBlockKey(key.to_string()))?;
    let mut labels = Vec::new();
    for part in inner.split(',') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        let v: u32 = part
            .parse()
            .map_err(|_| Error::BadBlockKey(key.to_string()))?;
        labels.push(v);
    }
    if labels.is_empty() {
        return Err(Error::EmptySubset);
    }
    VertexSet::from_labels(labels)
}
