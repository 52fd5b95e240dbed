//! Two finite constructions of power sets.
//!
//! * By bitmask: the power set of `{0, ..., i - 1}` listed so that entry `n`
//!   is the set of positions of the 1-bits of `n`, and extended one element
//!   at a time by appending `a ∪ {i}` for every existing entry `a`.
//! * By iterated unions: pairs `(x, y)` give `{x} ∪ {y}`, then every
//!   `(a, y)` gives `a ∪ {y}`, deduplicating after each round, until all
//!   subsets of a bounded universe with at most `k` elements are present.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigUint;
use num_traits::One;
use thiserror::Error;

use crate::subset::FiniteSubset;

/// Largest `i` for which [`proof3_table`] will materialise `2^i` entries.
pub const MAX_TABLE_BITS: u32 = 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PowersetError {
    #[error("a table over {0} elements exceeds the limit of {MAX_TABLE_BITS}")]
    TooLarge(u32),
    #[error("malformed table: {0}")]
    Malformed(String),
    #[error("universe size must be at least 1")]
    EmptyUniverse,
    #[error("maximum cardinality must be at least 1")]
    ZeroCardinality,
}

/// Subsets indexed contiguously from 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsetTable {
    entries: Vec<FiniteSubset>,
}

impl SubsetTable {
    pub fn entries(&self) -> &[FiniteSubset] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, index: usize) -> Option<&FiniteSubset> {
        self.entries.get(index)
    }

    /// `i` such that this is the table of `{0, ..., i - 1}`, checking every
    /// entry against its index.
    pub fn universe_size(&self) -> Result<u32, PowersetError> {
        let n = self.entries.len();
        if !n.is_power_of_two() {
            return Err(PowersetError::Malformed(format!(
                "{n} entries is not a power of two"
            )));
        }
        let bits = n.trailing_zeros();
        for (index, entry) in self.entries.iter().enumerate() {
            if subset_to_mask(entry) != Some(index as u64) || entry.max().is_some_and(|m| m >= bits as u64) {
                return Err(PowersetError::Malformed(format!(
                    "entry {index} is {}",
                    entry.braced()
                )));
            }
        }
        Ok(bits)
    }
}

/// `index → subset`, one row per entry.
impl fmt::Display for SubsetTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, a) in self.entries.iter().enumerate() {
            writeln!(f, "{n} → {}", a.braced())?;
        }
        Ok(())
    }
}

pub fn mask_to_subset(mask: u64) -> FiniteSubset {
    FiniteSubset::from_unordered((0..64).filter(|b| mask >> b & 1 == 1))
}

/// Inverse of [`mask_to_subset`]; `None` when an element is 64 or above.
pub fn subset_to_mask(s: &FiniteSubset) -> Option<u64> {
    s.elements()
        .iter()
        .try_fold(0u64, |acc, &x| (x < 64).then(|| acc | 1 << x))
}

pub fn proof3_table(i: u32) -> Result<SubsetTable, PowersetError> {
    if i > MAX_TABLE_BITS {
        return Err(PowersetError::TooLarge(i));
    }
    Ok(SubsetTable {
        entries: (0..1u64 << i).map(mask_to_subset).collect(),
    })
}

/// Table for `{0, ..., i}` from the table for `{0, ..., i - 1}`.
pub fn proof3_extend(table: &SubsetTable) -> Result<SubsetTable, PowersetError> {
    let i = table.universe_size()?;
    if i + 1 > MAX_TABLE_BITS {
        return Err(PowersetError::TooLarge(i + 1));
    }
    let mut entries = table.entries.clone();
    entries.extend(table.entries.iter().map(|a| a.with(i as u64)));
    Ok(SubsetTable { entries })
}

/// The sets present after each round of the union construction, starting
/// with the round that produces subsets of size at most 1 and ending with
/// size at most `k`. The empty set is not part of any round.
pub fn proof2_rounds(k: usize, universe: u64) -> Result<Vec<BTreeSet<FiniteSubset>>, PowersetError> {
    if universe == 0 {
        return Err(PowersetError::EmptyUniverse);
    }
    if k == 0 {
        return Err(PowersetError::ZeroCardinality);
    }
    let mut rounds = Vec::with_capacity(k);
    rounds.push((0..universe).map(|x| FiniteSubset::from_unordered([x])).collect::<BTreeSet<_>>());
    if k >= 2 {
        // (x, y) -> {x} ∪ {y}
        let mut pairs = BTreeSet::new();
        for x in 0..universe {
            for y in 0..universe {
                pairs.insert(FiniteSubset::from_unordered([x, y]));
            }
        }
        rounds.push(pairs);
    }
    while rounds.len() < k {
        // (a, y) -> a ∪ {y}
        let prev = rounds.last().expect("at least one round");
        let mut next = BTreeSet::new();
        for a in prev {
            for y in 0..universe {
                next.insert(a.with(y));
            }
        }
        rounds.push(next);
    }
    Ok(rounds)
}

/// All subsets of `{0, ..., universe - 1}` with at most `k` elements.
pub fn proof2_build(k: usize, universe: u64) -> Result<BTreeSet<FiniteSubset>, PowersetError> {
    let mut last = proof2_rounds(k, universe)?.pop().expect("k >= 1 rounds");
    last.insert(FiniteSubset::empty());
    Ok(last)
}

/// `[2^0, 2^1, ..., 2^(count - 1)]`.
pub fn powers_of_two(count: usize) -> Vec<BigUint> {
    std::iter::successors(Some(BigUint::one()), |p| Some(p * 2u32))
        .take(count)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[u64]) -> FiniteSubset {
        FiniteSubset::new(v.to_vec()).unwrap()
    }

    #[test]
    fn table_examples() {
        let t3 = proof3_table(3).unwrap();
        assert_eq!(t3.get(5), Some(&set(&[0, 2])));
        assert_eq!(proof3_table(0).unwrap().entries(), &[FiniteSubset::empty()]);
        assert_eq!(proof3_table(4).unwrap().get(10), Some(&set(&[1, 3])));
        assert_eq!(proof3_table(25), Err(PowersetError::TooLarge(25)));
    }

    #[test]
    fn extend_examples() {
        let t4 = proof3_extend(&proof3_table(3).unwrap()).unwrap();
        assert_eq!(t4.get(8), Some(&set(&[3])));
        assert_eq!(t4.get(15), Some(&set(&[0, 1, 2, 3])));
        let t1 = proof3_extend(&proof3_table(0).unwrap()).unwrap();
        assert_eq!(t1.entries(), &[FiniteSubset::empty(), set(&[0])]);
    }

    #[test]
    fn extend_rejects_malformed() {
        let mut t = proof3_table(2).unwrap();
        t.entries.swap(1, 2);
        assert!(matches!(proof3_extend(&t), Err(PowersetError::Malformed(_))));
        let short = SubsetTable {
            entries: vec![FiniteSubset::empty(), set(&[0]), set(&[1])],
        };
        assert!(matches!(proof3_extend(&short), Err(PowersetError::Malformed(_))));
    }

    #[test]
    fn proof2_examples() {
        let b = proof2_build(2, 3).unwrap();
        assert_eq!(b.len(), 7);
        assert_eq!(
            proof2_build(1, 1).unwrap().into_iter().collect::<Vec<_>>(),
            vec![FiniteSubset::empty(), set(&[0])]
        );
        let all: BTreeSet<_> = proof3_table(3).unwrap().entries().iter().cloned().collect();
        assert_eq!(proof2_build(3, 3).unwrap(), all);
        assert_eq!(proof2_build(2, 0), Err(PowersetError::EmptyUniverse));
        assert_eq!(proof2_build(0, 3), Err(PowersetError::ZeroCardinality));
    }

    #[test]
    fn rounds_grow_monotonically() {
        let rounds = proof2_rounds(4, 6).unwrap();
        for w in rounds.windows(2) {
            assert!(w[0].is_subset(&w[1]));
        }
    }

    #[test]
    fn powers() {
        let p = powers_of_two(31);
        assert_eq!(p[..5], [1u32, 2, 4, 8, 16].map(BigUint::from));
        assert_eq!(p[30], BigUint::from(1073741824u32));
        assert!(powers_of_two(0).is_empty());
    }

    #[test]
    fn display_layout() {
        let s = proof3_table(2).unwrap().to_string();
        assert_eq!(s, "0 → ∅\n1 → {0}\n2 → {1}\n3 → {0,1}\n");
    }
}
