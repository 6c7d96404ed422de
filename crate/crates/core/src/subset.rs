//! Parabolic subsets of the simple roots, as bitsets.
//!
//! A subset `I ⊆ Δ` indexes the standard parabolic `P_I = M_I ⋉ U_I`.  In
//! serialized form a subset is an array of 1-based simple-root indices, e.g.
//! `[1, 3]` for `{a1, a3}`.

use serde::de::{Deserializer, Error as DeError};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Subset(u32);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub fn full(rank: usize) -> Subset {
        debug_assert!(rank < 32);
        Subset((1u32 << rank) - 1)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Subset {
        let mut bits = 0;
        for i in indices {
            debug_assert!(i < 32);
            bits |= 1 << i;
        }
        Subset(bits)
    }

    pub fn singleton(i: usize) -> Subset {
        Subset(1 << i)
    }

    pub fn from_bits(bits: u32) -> Subset {
        Subset(bits)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 & (1 << i) != 0
    }

    pub fn with(self, i: usize) -> Subset {
        Subset(self.0 | (1 << i))
    }

    pub fn without(self, i: usize) -> Subset {
        Subset(self.0 & !(1 << i))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Subset) -> Subset {
        Subset(self.0 | other.0)
    }

    pub fn intersect(self, other: Subset) -> Subset {
        Subset(self.0 & other.0)
    }

    pub fn difference(self, other: Subset) -> Subset {
        Subset(self.0 & !other.0)
    }

    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..32).filter(move |&i| self.contains(i))
    }

    /// All subsets of `Δ` for a given rank, in increasing bitmask order.
    pub fn all(rank: usize) -> impl Iterator<Item = Subset> {
        (0..1u32 << rank).map(Subset)
    }

    /// All subsets of `self`, in increasing bitmask order.
    pub fn power_set(self) -> impl Iterator<Item = Subset> {
        let mask = self.0;
        // Enumerates submasks via the (sub - 1) & mask trick, ascending.
        (0..=mask).filter(move |s| s & !mask == 0).map(Subset)
    }

    /// Render as comma-separated root names, `{}` when empty.
    pub fn display(self) -> String {
        if self.is_empty() {
            return "{}".to_string();
        }
        let names: Vec<String> = self.iter().map(|i| format!("a{}", i + 1)).collect();
        names.join(",")
    }
}

impl std::fmt::Debug for Subset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{{}}}", self.iter().map(|i| format!("a{}", i + 1)).collect::<Vec<_>>().join(","))
    }
}

impl Serialize for Subset {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.len()))?;
        for i in self.iter() {
            seq.serialize_element(&(i + 1))?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for Subset {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let indices = Vec::<usize>::deserialize(deserializer)?;
        let mut bits = 0u32;
        for i in indices {
            if i == 0 || i > 32 {
                return Err(D::Error::custom(format!("simple-root index {i} out of range")));
            }
            bits |= 1 << (i - 1);
        }
        Ok(Subset(bits))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn power_set_counts() {
        let s = Subset::from_indices([0, 2]);
        assert_eq!(s.power_set().count(), 4);
        assert!(s.power_set().all(|t| t.is_subset_of(s)));
    }

    #[test]
    fn serde_round_trip() {
        let s = Subset::from_indices([0, 2]);
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(json, "[1,3]");
        let back: Subset = serde_json::from_str(&json).unwrap();
        assert_eq!(back, s);
    }
}
