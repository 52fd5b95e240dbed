//! Ranking and unranking of finite subsets of the naturals.
//!
//! Nonempty subsets are partitioned into classes `A(i, g)`: every subset of
//! cardinality `i` whose greatest element is `g`. A class is built
//! recursively by adjoining `g` to every member of the classes
//! `A(i - 1, k)` for `k = i - 2, ..., g - 1`, taken in increasing `k`. That
//! construction fixes a canonical order inside every class, and with it the
//! within-cardinality index
//!
//! ```text
//! j' = sum_{t=0}^{j-1} C(i + t - 1, i - 1) + m,    j = g - i + 1
//! ```
//!
//! where `m` is the subset's position inside its class. The resulting order
//! on `i`-subsets is colexicographic, so `j'` coincides with the
//! combinatorial number system `sum_t C(s_t, t + 1)`.
//!
//! The empty set is kept out of the `(i, j')` scheme and sits at global
//! index 0 of [`enumerate`]; every other subset lives at
//! `1 + pair(i - 1, j')` for the diagonal pairing [`pair`].

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

use crate::{binomial, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SubsetError {
    #[error("elements must be strictly increasing (found {prev} before {next})")]
    NotIncreasing { prev: u64, next: u64 },
    #[error("invalid class key: greatest element {greatest} is below cardinality - 1 ({cardinality} - 1)")]
    InvalidClassKey { cardinality: u64, greatest: u64 },
    #[error("cardinality must be at least 1")]
    ZeroCardinality,
    #[error("the empty set has no (cardinality, index) rank")]
    EmptySubset,
    #[error("subset element would exceed the u64 range")]
    ElementOverflow,
    #[error("cannot parse {0:?}")]
    Parse(String),
}

/// A finite subset of the naturals held as a strictly increasing sequence.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FiniteSubset(Vec<u64>);

impl FiniteSubset {
    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn new(elements: Vec<u64>) -> Result<Self, SubsetError> {
        if let Some(w) = elements.windows(2).find(|w| w[0] >= w[1]) {
            return Err(SubsetError::NotIncreasing {
                prev: w[0],
                next: w[1],
            });
        }
        Ok(Self(elements))
    }

    /// Sorts and deduplicates arbitrary input.
    pub fn from_unordered<I: IntoIterator<Item = u64>>(iter: I) -> Self {
        let mut v: Vec<u64> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        Self(v)
    }

    pub fn elements(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn max(&self) -> Option<u64> {
        self.0.last().copied()
    }

    pub fn contains(&self, x: u64) -> bool {
        self.0.binary_search(&x).is_ok()
    }

    /// `self ∪ {x}`.
    pub fn with(&self, x: u64) -> Self {
        match self.0.binary_search(&x) {
            Ok(_) => self.clone(),
            Err(pos) => {
                let mut v = self.0.clone();
                v.insert(pos, x);
                Self(v)
            }
        }
    }

    /// Set-builder rendering, `∅` for the empty set.
    pub fn braced(&self) -> String {
        if self.is_empty() {
            "∅".to_string()
        } else {
            format!("{{{self}}}")
        }
    }
}

/// Comma-separated ascending elements; the empty set renders as `""`.
impl fmt::Display for FiniteSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, x) in self.0.iter().enumerate() {
            if n > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

impl FromStr for FiniteSubset {
    type Err = SubsetError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Self::empty());
        }
        let elements = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u64>()
                    .map_err(|_| SubsetError::Parse(t.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(elements)
    }
}

/// Identifies the class of subsets with a given cardinality and greatest
/// element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ClassKey {
    cardinality: u64,
    greatest: u64,
}

impl ClassKey {
    pub fn new(cardinality: u64, greatest: u64) -> Result<Self, SubsetError> {
        if cardinality == 0 {
            return Err(SubsetError::ZeroCardinality);
        }
        if greatest + 1 < cardinality {
            return Err(SubsetError::InvalidClassKey {
                cardinality,
                greatest,
            });
        }
        Ok(Self {
            cardinality,
            greatest,
        })
    }

    pub fn cardinality(&self) -> u64 {
        self.cardinality
    }

    pub fn greatest(&self) -> u64 {
        self.greatest
    }

    /// `j = g - i + 1`, the number of classes of this cardinality that
    /// precede this one.
    pub fn offset(&self) -> u64 {
        self.greatest + 1 - self.cardinality
    }
}

/// `(i, j')`: cardinality and index among all subsets of that cardinality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RankPair {
    pub cardinality: u64,
    pub index: BigUint,
}

impl RankPair {
    pub fn new(cardinality: u64, index: impl Into<BigUint>) -> Result<Self, SubsetError> {
        if cardinality == 0 {
            return Err(SubsetError::ZeroCardinality);
        }
        Ok(Self {
            cardinality,
            index: index.into(),
        })
    }
}

impl fmt::Display for RankPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.cardinality, self.index)
    }
}

impl FromStr for RankPair {
    type Err = SubsetError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (i, j) = s
            .trim()
            .split_once(':')
            .ok_or_else(|| SubsetError::Parse(s.to_string()))?;
        let i = i
            .trim()
            .parse::<u64>()
            .map_err(|_| SubsetError::Parse(s.to_string()))?;
        let j = j
            .trim()
            .parse::<BigUint>()
            .map_err(|_| SubsetError::Parse(s.to_string()))?;
        Self::new(i, j)
    }
}

/// `|A(i, g)| = C(g, i - 1)`.
pub fn class_size(key: ClassKey) -> BigUint {
    binomial(key.greatest, key.cardinality - 1)
}

/// Class size through the running product `prod_{t=1}^{j} (i + t - 1) / t`
/// evaluated in exact rationals.
pub fn class_size_product(key: ClassKey) -> Rational {
    let i = key.cardinality;
    (1..=key.offset()).fold(Rational::one(), |acc, t| {
        acc * Rational::new((i + t - 1).into(), t.into())
    })
}

/// All members of `A(i, g)` in canonical order.
pub fn build_class(key: ClassKey) -> Vec<FiniteSubset> {
    let (i, g) = (key.cardinality, key.greatest);
    if i == 1 {
        return vec![FiniteSubset(vec![g])];
    }
    // B(i - 1, g - 1): the union of A(i - 1, k) for k = i - 2 ..= g - 1
    let mut out = Vec::new();
    for k in (i - 2)..g {
        let sub = ClassKey {
            cardinality: i - 1,
            greatest: k,
        };
        for mut b in build_class(sub) {
            b.0.push(g);
            out.push(b);
        }
    }
    out
}

/// Position of a subset inside its own class `A(|s|, max s)`.
pub fn position_in_class(s: &FiniteSubset) -> Result<BigUint, SubsetError> {
    let (_, rest) = s.0.split_last().ok_or(SubsetError::EmptySubset)?;
    // Members of A(i, g) are ordered by their (i - 1)-prefix in colex
    // order, so the offset is that prefix's combinatorial-number rank.
    Ok(rest
        .iter()
        .enumerate()
        .map(|(t, &x)| binomial(x, t as u64 + 1))
        .sum())
}

pub fn rank(s: &FiniteSubset) -> Result<RankPair, SubsetError> {
    let g = s.max().ok_or(SubsetError::EmptySubset)?;
    let i = s.len() as u64;
    let j = g + 1 - i;
    if j == 0 {
        return Ok(RankPair {
            cardinality: i,
            index: BigUint::zero(),
        });
    }
    // sum_{t=0}^{j-1} C(i + t - 1, i - 1) = C(i + j - 1, i) = C(g, i)
    let preceding = binomial(g, i);
    Ok(RankPair {
        cardinality: i,
        index: preceding + position_in_class(s)?,
    })
}

pub fn unrank(p: &RankPair) -> Result<FiniteSubset, SubsetError> {
    if p.cardinality == 0 {
        return Err(SubsetError::ZeroCardinality);
    }
    let mut remaining = p.index.clone();
    let mut out = Vec::with_capacity(p.cardinality as usize);
    for t in (1..=p.cardinality).rev() {
        let c = largest_below(t, &remaining)?;
        remaining -= binomial(c, t);
        out.push(c);
    }
    out.reverse();
    Ok(FiniteSubset(out))
}

/// Largest `c >= t - 1` with `C(c, t) <= r`.
fn largest_below(t: u64, r: &BigUint) -> Result<u64, SubsetError> {
    let mut lo = t - 1;
    let mut step = 1u64;
    let mut hi = loop {
        let probe = lo.checked_add(step).ok_or(SubsetError::ElementOverflow)?;
        if binomial(probe, t) > *r {
            break probe;
        }
        lo = probe;
        step = step.checked_mul(2).ok_or(SubsetError::ElementOverflow)?;
    };
    // invariant: C(lo, t) <= r < C(hi, t)
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if binomial(mid, t) <= *r {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(lo)
}

/// Diagonal pairing `(a + b)(a + b + 1) / 2 + a`.
pub fn pair(a: &BigUint, b: &BigUint) -> BigUint {
    let s = a + b;
    (&s * (&s + 1u32)) / 2u32 + a
}

pub fn unpair(z: &BigUint) -> (BigUint, BigUint) {
    // largest w with w(w + 1)/2 <= z
    let mut w = ((z * 8u32 + 1u32).sqrt() - 1u32) / 2u32;
    while (&w * (&w + 1u32)) / 2u32 > *z {
        w -= 1u32;
    }
    let tri = (&w * (&w + 1u32)) / 2u32;
    let a = z - tri;
    let b = &w - &a;
    (a, b)
}

/// Global index of `s` in [`enumerate`].
pub fn position(s: &FiniteSubset) -> Result<BigUint, SubsetError> {
    if s.is_empty() {
        return Ok(BigUint::zero());
    }
    let r = rank(s)?;
    Ok(pair(&BigUint::from(r.cardinality - 1), &r.index) + 1u32)
}

/// The subset sitting at a global index.
pub fn subset_at(index: &BigUint) -> Result<FiniteSubset, SubsetError> {
    if index.is_zero() {
        return Ok(FiniteSubset::empty());
    }
    let (a, b) = unpair(&(index - 1u32));
    let cardinality = a
        .to_u64()
        .and_then(|a| a.checked_add(1))
        .ok_or(SubsetError::ElementOverflow)?;
    unrank(&RankPair {
        cardinality,
        index: b,
    })
}

/// The first `count` subsets in global order.
pub fn enumerate(count: u64) -> Vec<FiniteSubset> {
    (0..count)
        .map(|n| subset_at(&BigUint::from(n)).expect("indices below u64::MAX never overflow"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[u64]) -> FiniteSubset {
        FiniteSubset::new(v.to_vec()).unwrap()
    }

    fn key(i: u64, g: u64) -> ClassKey {
        ClassKey::new(i, g).unwrap()
    }

    #[test]
    fn class_size_examples() {
        assert_eq!(class_size(key(2, 3)), 3u32.into());
        assert_eq!(class_size(key(1, 0)), 1u32.into());
        assert_eq!(class_size(key(4, 7)), 35u32.into());
    }

    #[test]
    fn invalid_keys() {
        assert_eq!(
            ClassKey::new(3, 1),
            Err(SubsetError::InvalidClassKey {
                cardinality: 3,
                greatest: 1
            })
        );
        assert_eq!(ClassKey::new(0, 4), Err(SubsetError::ZeroCardinality));
        assert!(ClassKey::new(3, 2).is_ok());
    }

    #[test]
    fn build_class_examples() {
        assert_eq!(build_class(key(1, 5)), vec![set(&[5])]);
        assert_eq!(build_class(key(2, 2)), vec![set(&[0, 2]), set(&[1, 2])]);
        assert_eq!(
            build_class(key(3, 3)),
            vec![set(&[0, 1, 3]), set(&[0, 2, 3]), set(&[1, 2, 3])]
        );
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&set(&[0, 1])).unwrap().to_string(), "2:0");
        assert_eq!(rank(&set(&[5])).unwrap().to_string(), "1:5");
        assert_eq!(rank(&set(&[1, 2])).unwrap().to_string(), "2:2");
        assert_eq!(rank(&FiniteSubset::empty()), Err(SubsetError::EmptySubset));
    }

    #[test]
    fn rank_prefix_matches_summation() {
        // C(g, i) against the literal sum over preceding classes
        for i in 1..8u64 {
            for g in (i - 1)..20 {
                let j = g + 1 - i;
                let sum: BigUint = (0..j).map(|t| binomial(i + t - 1, i - 1)).sum();
                assert_eq!(sum, binomial(g, i), "i={i} g={g}");
            }
        }
    }

    #[test]
    fn unrank_examples() {
        let u = |s: &str| unrank(&s.parse().unwrap()).unwrap();
        assert_eq!(u("2:0"), set(&[0, 1]));
        assert_eq!(u("1:5"), set(&[5]));
        assert_eq!(u("2:2"), set(&[1, 2]));
    }

    #[test]
    fn unrank_huge_singleton_overflows() {
        let p = RankPair::new(1, BigUint::from(u64::MAX) * 4u32).unwrap();
        assert_eq!(unrank(&p), Err(SubsetError::ElementOverflow));
    }

    #[test]
    fn enumerate_examples() {
        assert_eq!(enumerate(1), vec![FiniteSubset::empty()]);
        let target = pair(&1u32.into(), &0u32.into()) + 1u32;
        assert_eq!(position(&set(&[0, 1])).unwrap(), target);
        assert_eq!(subset_at(&target).unwrap(), set(&[0, 1]));
        assert_eq!(enumerate(0), vec![]);
    }

    #[test]
    fn pairing_inverts() {
        for z in 0..5000u32 {
            let z = BigUint::from(z);
            let (a, b) = unpair(&z);
            assert_eq!(pair(&a, &b), z);
        }
    }

    #[test]
    fn parse_and_display() {
        assert_eq!("0,2,5".parse::<FiniteSubset>().unwrap(), set(&[0, 2, 5]));
        assert_eq!("".parse::<FiniteSubset>().unwrap(), FiniteSubset::empty());
        assert!(matches!(
            "3,1".parse::<FiniteSubset>(),
            Err(SubsetError::NotIncreasing { prev: 3, next: 1 })
        ));
        assert!("1,x".parse::<FiniteSubset>().is_err());
        assert_eq!(set(&[0, 2, 5]).to_string(), "0,2,5");
        assert_eq!(set(&[0, 2]).braced(), "{0,2}");
        assert_eq!(FiniteSubset::empty().braced(), "∅");
        assert!("0:3".parse::<RankPair>().is_err());
        assert!("2-3".parse::<RankPair>().is_err());
    }

    #[test]
    fn product_form_is_integral() {
        for i in 1..10u64 {
            for g in (i - 1)..25 {
                let k = key(i, g);
                let p = class_size_product(k);
                assert!(p.is_integer());
                assert_eq!(p.to_integer(), class_size(k).into());
            }
        }
    }
}
