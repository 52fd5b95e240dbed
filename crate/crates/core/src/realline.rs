//! Rationals in `[0, 1)`: their enumeration by denominator, exact binary
//! expansions, diagonal constructions over those expansions, and the
//! nested-interval procedure that picks endpoints from an enumeration.
//!
//! Binary digits are indexed from 0, position 0 being the first digit after
//! the radix point. Dyadic rationals always use the expansion that ends in
//! zeros.

use std::collections::HashMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::bitstring::{antidiagonal, BitString, StringArray};
use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RealError {
    #[error("{0} lies outside [0, 1)")]
    OutOfRange(Box<Rational>),
    #[error("degenerate interval ({lo}, {hi})")]
    DegenerateInterval { lo: Box<Rational>, hi: Box<Rational> },
    #[error("{rows} rows need at least as many digits, got {digits}")]
    TooFewDigits { rows: usize, digits: usize },
    #[error("window must be at least 1")]
    EmptyWindow,
}

fn unit(q: &Rational) -> Result<(BigUint, BigUint), RealError> {
    if q.is_negative() || *q >= Rational::one() {
        return Err(RealError::OutOfRange(Box::new(q.clone())));
    }
    let n = q.numer().to_biguint().expect("non-negative");
    let d = q.denom().to_biguint().expect("positive");
    Ok((n, d))
}

/// `0`, then `a/b` in lowest terms for `b = 2, 3, ...` and `a = 1 .. b - 1`.
pub fn q01_iter() -> impl Iterator<Item = Rational> {
    std::iter::once(Rational::zero()).chain((2u64..).flat_map(|b| {
        (1..b)
            .filter(move |a| a.gcd(&b) == 1)
            .map(move |a| Rational::new_raw(a.into(), b.into()))
    }))
}

pub fn q01_list(n: usize) -> Vec<Rational> {
    q01_iter().take(n).collect()
}

/// First `digits` binary digits of `q` by long division.
pub fn to_binary(q: &Rational, digits: usize) -> Result<BitString, RealError> {
    let (mut r, d) = unit(q)?;
    let mut bits = Vec::with_capacity(digits);
    for _ in 0..digits {
        r <<= 1;
        let bit = r >= d;
        if bit {
            r -= &d;
        }
        bits.push(bit);
    }
    Ok(BitString::from_bits(bits))
}

/// `0.prefix(period)(period)...` in base 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryExpansion {
    pub prefix: BitString,
    pub period: BitString,
}

impl BinaryExpansion {
    /// Exact value: `(P + R / (2^p - 1)) / 2^l` for prefix `P` of length `l`
    /// and period `R` of length `p`.
    pub fn value(&self) -> Rational {
        let as_int = |b: &BitString| {
            b.bits()
                .iter()
                .fold(BigInt::zero(), |acc, &bit| (acc << 1) + u8::from(bit))
        };
        let p = self.period.len();
        let repeat = Rational::new(as_int(&self.period), (BigInt::one() << p) - 1);
        (Rational::from_integer(as_int(&self.prefix)) + repeat)
            / Rational::from_integer(BigInt::one() << self.prefix.len())
    }

    pub fn digits(&self, n: usize) -> BitString {
        let bits = self
            .prefix
            .bits()
            .iter()
            .chain(self.period.bits().iter().cycle())
            .take(n)
            .copied()
            .collect();
        BitString::from_bits(bits)
    }

    pub fn is_terminating(&self) -> bool {
        self.period.bits() == [false]
    }
}

impl fmt::Display for BinaryExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "0.{}({})", self.prefix, self.period)
    }
}

/// Minimal prefix and period, found where the long-division remainder first
/// repeats.
pub fn eventually_periodic(q: &Rational) -> Result<BinaryExpansion, RealError> {
    let (mut r, d) = unit(q)?;
    let mut seen: HashMap<BigUint, usize> = HashMap::new();
    let mut bits = Vec::new();
    let start = loop {
        if let Some(&at) = seen.get(&r) {
            break at;
        }
        seen.insert(r.clone(), bits.len());
        r <<= 1;
        let bit = r >= d;
        if bit {
            r -= &d;
        }
        bits.push(bit);
    };
    let period = bits.split_off(start);
    Ok(BinaryExpansion {
        prefix: BitString::from_bits(bits),
        period: BitString::from_bits(period),
    })
}

/// Rows `value = 0.digits`, values right-aligned.
pub fn expansion_table(values: &[Rational], digits: usize) -> Result<String, RealError> {
    let width = values.iter().map(|q| q.to_string().len()).max().unwrap_or(0);
    let mut out = String::new();
    for q in values {
        out.push_str(&format!("{:>width$} = 0.{}\n", q.to_string(), to_binary(q, digits)?));
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AntidiagonalSearch {
    /// Length `digits`; positions at or beyond the row count are 0.
    pub bits: BitString,
    /// Rows the diagonal ran over.
    pub rows: usize,
    /// First enumerated rational whose leading `rows` digits agree with the
    /// antidiagonal, with its enumeration index.
    pub matched: Option<(usize, Rational)>,
}

/// Antidiagonal over the expansions of the first `n` enumerated rationals,
/// then a search of the first `search` enumerated rationals for one that
/// agrees with it on every computed digit.
pub fn antidiag_rationals(n: usize, digits: usize, search: usize) -> Result<AntidiagonalSearch, RealError> {
    if n > digits {
        return Err(RealError::TooFewDigits { rows: n, digits });
    }
    let rows = q01_list(n)
        .iter()
        .map(|q| to_binary(q, digits))
        .collect::<Result<Vec<_>, _>>()?;
    let bits = if rows.is_empty() {
        BitString::zeros(digits)
    } else {
        let array = StringArray::new(rows, digits).expect("rows share the digit count");
        antidiagonal(&array).expect("array is nonempty")
    };
    let head = BitString::from_bits(bits.bits()[..n].to_vec());
    let matched = q01_iter()
        .take(search)
        .enumerate()
        .find(|(_, q)| to_binary(q, n).is_ok_and(|b| b == head));
    Ok(AntidiagonalSearch {
        bits,
        rows: n,
        matched,
    })
}

/// Vertex cover of the query/row graph with as many vertices as the
/// matching has edges, which proves the matching maximum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchingCertificate {
    pub queries: Vec<usize>,
    pub rows: Vec<usize>,
}

impl MatchingCertificate {
    pub fn size(&self) -> usize {
        self.queries.len() + self.rows.len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReorderReport {
    /// Digits of the diagonal number over the window.
    pub diagonal: BitString,
    /// Complement of [`Self::diagonal`]; no row can ever hold it.
    pub antidiagonal: BitString,
    /// `1 - qD` when `qD` is not dyadic, the value whose expansion is the
    /// complemented one. Dyadic `qD` complement into a tail of 1s, which is
    /// not the preferred expansion of any rational.
    pub antidiagonal_value: Option<Rational>,
    /// Rows each query may occupy, in query order.
    pub feasible: Vec<Vec<usize>>,
    pub placements: Vec<(Rational, usize)>,
    pub excluded: Vec<Rational>,
    pub certificate: MatchingCertificate,
}

/// Places each query on a row `r < window` whose digit `r` equals digit `r`
/// of `qd`, so that the reordered table still has `qd` on its diagonal.
///
/// The assignment is a maximum bipartite matching built by augmenting paths
/// in query order, so an earlier query keeps its row whenever some maximum
/// matching allows it.
pub fn reorder_demo(qd: &Rational, window: usize, queries: &[Rational]) -> Result<ReorderReport, RealError> {
    if window == 0 {
        return Err(RealError::EmptyWindow);
    }
    let diagonal = to_binary(qd, window)?;
    let antidiagonal_value = {
        let expansion = eventually_periodic(qd)?;
        (!expansion.is_terminating()).then(|| Rational::one() - qd)
    };
    let feasible = queries
        .iter()
        .map(|q| {
            let bits = to_binary(q, window)?;
            Ok((0..window).filter(|&r| bits.get(r) == diagonal.get(r)).collect())
        })
        .collect::<Result<Vec<Vec<usize>>, RealError>>()?;

    let mut row_owner: Vec<Option<usize>> = vec![None; window];
    for q in 0..queries.len() {
        let mut visited = vec![false; window];
        augment(q, &feasible, &mut row_owner, &mut visited);
    }
    let mut query_row = vec![None; queries.len()];
    for (r, owner) in row_owner.iter().enumerate() {
        if let Some(q) = owner {
            query_row[*q] = Some(r);
        }
    }
    let certificate = konig_cover(&feasible, &query_row, &row_owner);
    let mut placements = Vec::new();
    let mut excluded = Vec::new();
    for (q, row) in query_row.iter().enumerate() {
        match row {
            Some(r) => placements.push((queries[q].clone(), *r)),
            None => excluded.push(queries[q].clone()),
        }
    }
    Ok(ReorderReport {
        antidiagonal: diagonal.complement(),
        diagonal,
        antidiagonal_value,
        feasible,
        placements,
        excluded,
        certificate,
    })
}

fn augment(q: usize, adj: &[Vec<usize>], row_owner: &mut [Option<usize>], visited: &mut [bool]) -> bool {
    for &r in &adj[q] {
        if visited[r] {
            continue;
        }
        visited[r] = true;
        let free = match row_owner[r] {
            None => true,
            Some(other) => augment(other, adj, row_owner, visited),
        };
        if free {
            row_owner[r] = Some(q);
            return true;
        }
    }
    false
}

/// König's construction: from the unmatched queries follow alternating
/// paths; the cover is the unreached queries plus the reached rows.
fn konig_cover(adj: &[Vec<usize>], query_row: &[Option<usize>], row_owner: &[Option<usize>]) -> MatchingCertificate {
    let mut q_seen = vec![false; adj.len()];
    let mut r_seen = vec![false; row_owner.len()];
    let mut stack: Vec<usize> = (0..adj.len()).filter(|&q| query_row[q].is_none()).collect();
    for &q in &stack {
        q_seen[q] = true;
    }
    while let Some(q) = stack.pop() {
        for &r in &adj[q] {
            if r_seen[r] || query_row[q] == Some(r) {
                continue;
            }
            r_seen[r] = true;
            if let Some(next) = row_owner[r] {
                if !q_seen[next] {
                    q_seen[next] = true;
                    stack.push(next);
                }
            }
        }
    }
    MatchingCertificate {
        queries: (0..adj.len()).filter(|&q| !q_seen[q]).collect(),
        rows: (0..row_owner.len()).filter(|&r| r_seen[r]).collect(),
    }
}

/// Open interval `(lo, hi)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interval {
    lo: Rational,
    hi: Rational,
}

impl Interval {
    pub fn new(lo: Rational, hi: Rational) -> Result<Self, RealError> {
        if lo >= hi {
            return Err(RealError::DegenerateInterval {
                lo: Box::new(lo),
                hi: Box::new(hi),
            });
        }
        Ok(Self { lo, hi })
    }

    pub fn unit() -> Self {
        Self {
            lo: Rational::zero(),
            hi: Rational::one(),
        }
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn contains(&self, x: &Rational) -> bool {
        self.lo < *x && *x < self.hi
    }

    /// Closure of `other` lies inside `self`.
    pub fn encloses(&self, other: &Interval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.lo, self.hi)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RunStatus {
    /// All requested steps were taken.
    Completed,
    /// The current interval holds fewer than two pool values.
    Exhausted,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NestedRun {
    /// The start interval followed by one interval per step.
    pub intervals: Vec<Interval>,
    /// `(alpha, beta)` chosen at each step, `alpha < beta`.
    pub picks: Vec<(Rational, Rational)>,
    pub status: RunStatus,
}

impl NestedRun {
    pub fn steps(&self) -> usize {
        self.picks.len()
    }

    /// `step,alpha_num,alpha_den,beta_num,beta_den`, steps numbered from 1.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("step,alpha_num,alpha_den,beta_num,beta_den\n");
        for (s, (a, b)) in self.picks.iter().enumerate() {
            out.push_str(&format!(
                "{},{},{},{},{}\n",
                s + 1,
                a.numer(),
                a.denom(),
                b.numer(),
                b.denom()
            ));
        }
        out
    }
}

/// At each step the first two pool values strictly inside the current
/// interval become the endpoints of the next one.
pub fn nested_intervals(pool: &[Rational], start: Interval, steps: usize) -> NestedRun {
    let mut intervals = vec![start];
    let mut picks = Vec::new();
    let mut status = RunStatus::Completed;
    for _ in 0..steps {
        let current = intervals.last().expect("start interval");
        let mut inside = pool.iter().filter(|x| current.contains(x));
        let (Some(a), Some(b)) = (inside.next(), inside.next()) else {
            status = RunStatus::Exhausted;
            break;
        };
        let (alpha, beta) = if a < b { (a, b) } else { (b, a) };
        picks.push((alpha.clone(), beta.clone()));
        intervals.push(Interval {
            lo: alpha.clone(),
            hi: beta.clone(),
        });
    }
    NestedRun {
        intervals,
        picks,
        status,
    }
}

/// Decimal approximation for display only.
pub fn approx(q: &Rational) -> f64 {
    q.numer().to_f64().unwrap_or(f64::NAN) / q.denom().to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn bits(s: &str) -> BitString {
        s.parse().unwrap()
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(q01_list(6), vec![q(0, 1), q(1, 2), q(1, 3), q(2, 3), q(1, 4), q(3, 4)]);
        assert_eq!(q01_list(13)[12], q(1, 7));
        assert!(q01_list(0).is_empty());
    }

    #[test]
    fn to_binary_examples() {
        assert_eq!(to_binary(&q(2, 3), 8).unwrap(), bits("10101010"));
        assert_eq!(to_binary(&q(1, 2), 4).unwrap(), bits("1000"));
        assert_eq!(to_binary(&q(0, 1), 4).unwrap(), bits("0000"));
        assert_eq!(to_binary(&q(1, 6), 8).unwrap(), bits("00101010"));
        assert_eq!(to_binary(&q(1, 1), 4), Err(RealError::OutOfRange(Box::new(q(1, 1)))));
        assert!(to_binary(&q(-1, 3), 4).is_err());
    }

    #[test]
    fn periodic_examples() {
        let e = eventually_periodic(&q(1, 3)).unwrap();
        assert_eq!((e.prefix.to_string(), e.period.to_string()), ("".into(), "01".into()));
        let e = eventually_periodic(&q(1, 6)).unwrap();
        assert_eq!((e.prefix.to_string(), e.period.to_string()), ("0".into(), "01".into()));
        let e = eventually_periodic(&q(1, 2)).unwrap();
        assert_eq!((e.prefix.to_string(), e.period.to_string()), ("1".into(), "0".into()));
        assert!(e.is_terminating());
        let e = eventually_periodic(&q(5, 12)).unwrap();
        assert_eq!(e.to_string(), "0.01(10)");
        assert_eq!(e.value(), q(5, 12));
        assert!(eventually_periodic(&q(3, 2)).is_err());
    }

    #[test]
    fn antidiagonal_search() {
        let s = antidiag_rationals(1, 4, 100).unwrap();
        assert_eq!(s.bits, bits("1000"));
        assert_eq!(s.matched, Some((1, q(1, 2))));
        let table = [
            "0000000000000000", "1000000000000000", "0101010101010101", "1010101010101010",
            "0100000000000000", "1100000000000000", "0011001100110011", "0110011001100110",
            "1001100110011001", "1100110011001100", "0010101010101010", "1101010101010101",
            "0010010010010010", "0100100100100100", "0110110110110110", "1001001001001001",
        ];
        let flipped: String = table
            .iter()
            .enumerate()
            .map(|(r, row)| if row.as_bytes()[r] == b'0' { '1' } else { '0' })
            .collect();
        let s = antidiag_rationals(16, 16, 1000).unwrap();
        assert_eq!(s.bits.to_string(), flipped);
        assert_eq!(s.matched, None);
        assert_eq!(
            antidiag_rationals(5, 4, 10),
            Err(RealError::TooFewDigits { rows: 5, digits: 4 })
        );
    }

    #[test]
    fn reorder_examples() {
        let r = reorder_demo(&q(1, 3), 8, &[q(2, 3)]).unwrap();
        assert_eq!(r.excluded, vec![q(2, 3)]);
        assert!(r.feasible[0].is_empty());
        assert_eq!(r.antidiagonal_value, Some(q(2, 3)));

        let r = reorder_demo(&q(1, 3), 3, &[q(1, 6), q(11, 12), q(5, 12)]).unwrap();
        assert_eq!(r.feasible, vec![vec![0], vec![1], vec![0, 1]]);
        assert_eq!(r.placements, vec![(q(1, 6), 0), (q(11, 12), 1)]);
        assert_eq!(r.excluded, vec![q(5, 12)]);
        assert_eq!(r.certificate.size(), 2);

        let r = reorder_demo(&q(1, 3), 4, &[]).unwrap();
        assert!(r.placements.is_empty() && r.excluded.is_empty());

        assert_eq!(reorder_demo(&q(1, 3), 0, &[]), Err(RealError::EmptyWindow));
        assert!(reorder_demo(&q(4, 3), 4, &[]).is_err());
    }

    #[test]
    fn reorder_dyadic_diagonal() {
        let r = reorder_demo(&q(1, 2), 4, &[]).unwrap();
        assert_eq!(r.antidiagonal, bits("0111"));
        assert_eq!(r.antidiagonal_value, None);
    }

    #[test]
    fn nested_examples() {
        let run = nested_intervals(&q01_list(100), Interval::unit(), 1);
        assert_eq!(run.picks, vec![(q(1, 3), q(1, 2))]);
        assert_eq!(run.intervals[1], Interval::new(q(1, 3), q(1, 2)).unwrap());
        assert_eq!(run.status, RunStatus::Completed);

        let run = nested_intervals(&[q(1, 2)], Interval::unit(), 3);
        assert_eq!(run.steps(), 0);
        assert_eq!(run.status, RunStatus::Exhausted);

        assert!(matches!(
            Interval::new(q(1, 2), q(1, 2)),
            Err(RealError::DegenerateInterval { .. })
        ));
    }

    #[test]
    fn run_csv() {
        let run = nested_intervals(&q01_list(100), Interval::unit(), 2);
        let csv = run.to_csv();
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some("step,alpha_num,alpha_den,beta_num,beta_den"));
        assert_eq!(lines.next(), Some("1,1,3,1,2"));
        assert_eq!(lines.next(), Some("2,2,5,3,7"));
    }

    #[test]
    fn table_layout() {
        let t = expansion_table(&q01_list(4), 8).unwrap();
        assert_eq!(
            t,
            "  0 = 0.00000000\n1/2 = 0.10000000\n1/3 = 0.01010101\n2/3 = 0.10101010\n"
        );
    }
}
