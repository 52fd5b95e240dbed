//! Arrays of fixed-length binary strings and the diagonal walk over them.
//!
//! The diagonal walk visits position `n` of row `n` until it runs out of
//! rows or of positions. The antidiagonal complements every visited bit;
//! when the strings are longer than the array is tall, the positions the
//! walk never reaches are filled with `0`. The diagonal cover of an array
//! with `rows` rows of length `length` is `min(1, length / rows)`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use thiserror::Error;

use crate::{binomial, Rational};

/// Largest `k` for which [`full_array`] materialises `2^k` rows.
pub const MAX_ARRAY_BITS: u32 = 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BitError {
    #[error("array of 2^{0} rows exceeds the limit of 2^{MAX_ARRAY_BITS}")]
    TooLarge(u32),
    #[error("array has no rows")]
    EmptyArray,
    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("row count must be at least 1")]
    ZeroRows,
    #[error("string length {length} is shorter than the pair count {pairs}")]
    TooShort { pairs: usize, length: usize },
    #[error("invalid bit character {0:?}")]
    InvalidBit(char),
}

#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BitString(Vec<bool>);

impl BitString {
    pub fn from_bits(bits: Vec<bool>) -> Self {
        Self(bits)
    }

    pub fn zeros(len: usize) -> Self {
        Self(vec![false; len])
    }

    /// `len`-bit encoding of `value`, most significant bit first.
    pub fn from_value(value: u64, len: usize) -> Self {
        Self(
            (0..len)
                .rev()
                .map(|b| b < 64 && value >> b & 1 == 1)
                .collect(),
        )
    }

    pub fn bits(&self) -> &[bool] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, n: usize) -> Option<bool> {
        self.0.get(n).copied()
    }

    pub fn complement(&self) -> Self {
        Self(self.0.iter().map(|b| !b).collect())
    }

    pub fn hamming(&self, other: &Self) -> Result<usize, BitError> {
        if self.len() != other.len() {
            return Err(BitError::LengthMismatch {
                expected: self.len(),
                found: other.len(),
            });
        }
        Ok(self.0.iter().zip(&other.0).filter(|(a, b)| a != b).count())
    }

    pub fn starts_with(&self, prefix: &Self) -> bool {
        self.0.starts_with(&prefix.0)
    }
}

impl fmt::Display for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.0 {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl FromStr for BitString {
    type Err = BitError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(BitError::InvalidBit(other)),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Self)
    }
}

/// Rows of a shared length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StringArray {
    rows: Vec<BitString>,
    length: usize,
}

impl StringArray {
    pub fn new(rows: Vec<BitString>, length: usize) -> Result<Self, BitError> {
        if let Some(bad) = rows.iter().find(|r| r.len() != length) {
            return Err(BitError::LengthMismatch {
                expected: length,
                found: bad.len(),
            });
        }
        Ok(Self { rows, length })
    }

    /// Infers the length from the first row; an empty list has length 0.
    pub fn from_rows(rows: Vec<BitString>) -> Result<Self, BitError> {
        let length = rows.first().map_or(0, BitString::len);
        Self::new(rows, length)
    }

    pub fn rows(&self) -> &[BitString] {
        &self.rows
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn length(&self) -> usize {
        self.length
    }

    /// Number of cells the diagonal walk visits.
    pub fn diagonal_steps(&self) -> usize {
        self.rows.len().min(self.length)
    }
}

/// One row per line.
impl fmt::Display for StringArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            writeln!(f, "{row}")?;
        }
        Ok(())
    }
}

/// Every length-`k` string in ascending binary order.
pub fn full_array(k: u32) -> Result<StringArray, BitError> {
    if k > MAX_ARRAY_BITS {
        return Err(BitError::TooLarge(k));
    }
    let len = k as usize;
    let rows = (0..1u64 << k).map(|n| BitString::from_value(n, len)).collect();
    Ok(StringArray { rows, length: len })
}

pub fn antidiagonal(a: &StringArray) -> Result<BitString, BitError> {
    if a.rows.is_empty() {
        return Err(BitError::EmptyArray);
    }
    let mut out = BitString::zeros(a.length);
    for n in 0..a.diagonal_steps() {
        out.0[n] = !a.rows[n].0[n];
    }
    Ok(out)
}

/// First row equal to `s`.
pub fn locate(a: &StringArray, s: &BitString) -> Result<Option<usize>, BitError> {
    if s.len() != a.length {
        return Err(BitError::LengthMismatch {
            expected: a.length,
            found: s.len(),
        });
    }
    Ok(a.rows.iter().position(|r| r == s))
}

/// `min(1, length / rows)`.
pub fn diagonal_cover_finite(
    rows: impl Into<BigUint>,
    length: impl Into<BigUint>,
) -> Result<Rational, BitError> {
    let rows: BigUint = rows.into();
    let length: BigUint = length.into();
    if rows.is_zero() {
        return Err(BitError::ZeroRows);
    }
    if length >= rows {
        return Ok(Rational::one());
    }
    Ok(Rational::new(BigInt::from(length), BigInt::from(rows)))
}

/// Array families with a closed-form cover at every string length `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// All `2^k` strings of length `k`: cover `k / 2^k`.
    Full,
    /// Strings with a single odd digit out, two per position: `k / 2k`.
    S2,
    /// Strings with a free prefix of length `k` and a constant tail; the
    /// value reported is the upper bound `k / 2^k`.
    Sq1Bound,
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "full" => Ok(Family::Full),
            "s2" => Ok(Family::S2),
            "sq1" => Ok(Family::Sq1Bound),
            other => Err(format!("unknown family {other:?} (expected full, s2 or sq1)")),
        }
    }
}

/// One term of a cover sequence, keeping the unreduced `length / rows`
/// alongside the reduced value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverTerm {
    pub k: u32,
    pub length: BigUint,
    pub rows: BigUint,
    pub cover: Rational,
}

/// Cover terms for `k = 1..=k_max` with the unreduced fractions.
pub fn dc_terms(family: Family, k_max: u32) -> Vec<CoverTerm> {
    (1..=k_max)
        .map(|k| {
            let length = BigUint::from(k);
            let rows = match family {
                Family::Full | Family::Sq1Bound => BigUint::one() << k,
                Family::S2 => BigUint::from(2 * k),
            };
            let cover = Rational::new(BigInt::from(length.clone()), BigInt::from(rows.clone()));
            CoverTerm {
                k,
                length,
                rows,
                cover,
            }
        })
        .collect()
}

pub fn dc_sequence(family: Family, k_max: u32) -> Vec<(u32, Rational)> {
    dc_terms(family, k_max)
        .into_iter()
        .map(|t| (t.k, t.cover))
        .collect()
}

/// Rows `2m` carry a lone `1` at position `m`, rows `2m + 1` a lone `0`.
pub fn s2_array(pairs: usize, length: usize) -> Result<StringArray, BitError> {
    if length < pairs {
        return Err(BitError::TooShort { pairs, length });
    }
    let mut rows = Vec::with_capacity(2 * pairs);
    for m in 0..pairs {
        let mut one = BitString::zeros(length);
        one.0[m] = true;
        rows.push(one.clone());
        rows.push(one.complement());
    }
    Ok(StringArray { rows, length })
}

/// Counts of length-`k` strings by Hamming distance from a fixed template,
/// split into the strings at distance 1 and all the others.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Census {
    pub by_distance: Vec<BigUint>,
    pub included: BigUint,
    pub excluded: BigUint,
}

impl Census {
    pub fn total(&self) -> BigUint {
        &self.included + &self.excluded
    }
}

pub fn hamming_census(k: u32) -> Census {
    let k = u64::from(k);
    let by_distance: Vec<BigUint> = (0..=k).map(|d| binomial(k, d)).collect();
    let included = binomial(k, 1);
    let excluded = by_distance
        .iter()
        .enumerate()
        .filter(|&(d, _)| d != 1)
        .map(|(_, c)| c)
        .sum();
    Census {
        by_distance,
        included,
        excluded,
    }
}

/// Everything the diagonal walk says about one array.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagonalReport {
    pub cover: Rational,
    pub antidiagonal: BitString,
    pub found_at: Option<usize>,
    /// Rows by Hamming distance from the antidiagonal.
    pub census: BTreeMap<usize, usize>,
}

pub fn diagonal_report(a: &StringArray) -> Result<DiagonalReport, BitError> {
    let antidiagonal = antidiagonal(a)?;
    let cover = diagonal_cover_finite(a.row_count() as u64, a.length() as u64)?;
    let found_at = locate(a, &antidiagonal)?;
    let mut census = BTreeMap::new();
    for row in &a.rows {
        *census.entry(row.hamming(&antidiagonal)?).or_insert(0) += 1;
    }
    Ok(DiagonalReport {
        cover,
        antidiagonal,
        found_at,
        census,
    })
}
