//! Relative cardinality: the ratio of two finite counts, and the limit of
//! `phi_a(n) / phi_b(n)` for counting formulas that track how two sets grow
//! as their constructions proceed.
//!
//! Built-in formula shapes are classified symbolically by growth class
//! (polynomial degree and leading rate, or exponential base). Caller
//! supplied formulas go through a sampling path instead, which is honest
//! about what finitely many samples can and cannot show: it may answer
//! [`Classification::Inconclusive`].

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::Rational;

/// Exponentials are not evaluated past this many result bits.
pub const MAX_EXP_BITS: u64 = 1 << 21;

/// Relative agreement required of the last three samples on the numeric path.
pub fn numeric_tolerance() -> Rational {
    Rational::new(1.into(), BigInt::from(10u64.pow(9)))
}

/// Largest denominator of a rational reported by the numeric path.
pub const RATIONALIZE_MAX_DEN: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RatioError {
    #[error("denominator formula is zero on the whole sampled range")]
    DenominatorZero,
    #[error("finite ratio with empty denominator set")]
    ZeroCardinality,
    #[error("custom formulas must be acknowledged as genuinely comparable before taking a limit")]
    Unacknowledged,
    #[error("limit could not be determined from samples")]
    Undetermined,
    #[error("invalid formula: {0}")]
    InvalidFormula(String),
    #[error("value too large to evaluate: {0}")]
    TooLarge(String),
}

type Evaluator = dyn Fn(&BigUint) -> BigUint + Send + Sync;

/// A caller-supplied counting formula.
#[derive(Clone)]
pub struct CustomFormula {
    label: String,
    eval: Arc<Evaluator>,
}

impl fmt::Debug for CustomFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CustomFormula")
            .field("label", &self.label)
            .finish_non_exhaustive()
    }
}

/// `n ↦ |interim set after n construction steps|`.
#[derive(Debug, Clone)]
pub enum CountingFormula {
    /// `floor((mul·n + add) / div)`.
    FloorLinear { mul: u64, add: i64, div: u64 },
    /// `Σ c_t · n^t`, constant term first.
    Poly(Vec<BigInt>),
    /// `base^n`.
    Exp { base: u64 },
    /// `base^n + shift`.
    AffineExp { base: u64, shift: i64 },
    /// `n + c`.
    IdentShift(i64),
    Custom(CustomFormula),
}

impl CountingFormula {
    pub fn floor(mul: u64, add: i64, div: u64) -> Self {
        Self::FloorLinear { mul, add, div }
    }

    pub fn custom<F>(label: impl Into<String>, eval: F) -> Self
    where
        F: Fn(&BigUint) -> BigUint + Send + Sync + 'static,
    {
        Self::Custom(CustomFormula {
            label: label.into(),
            eval: Arc::new(eval),
        })
    }

    pub fn is_custom(&self) -> bool {
        matches!(self, Self::Custom(_))
    }

    fn validate(&self) -> Result<(), RatioError> {
        match self {
            Self::FloorLinear { div: 0, .. } => {
                Err(RatioError::InvalidFormula("floor divisor is zero".into()))
            }
            Self::Poly(c) if c.iter().rev().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative()) => {
                Err(RatioError::InvalidFormula("polynomial has a negative leading coefficient".into()))
            }
            _ => Ok(()),
        }
    }

    pub fn evaluate(&self, n: &BigUint) -> Result<BigInt, RatioError> {
        let n_int = BigInt::from(n.clone());
        Ok(match self {
            Self::FloorLinear { mul, add, div } => {
                (BigInt::from(*mul) * n_int + *add).div_floor(&BigInt::from(*div))
            }
            Self::Poly(coeffs) => coeffs
                .iter()
                .rev()
                .fold(BigInt::zero(), |acc, c| acc * &n_int + c),
            Self::Exp { base } => BigInt::from(pow(*base, n)?),
            Self::AffineExp { base, shift } => BigInt::from(pow(*base, n)?) + *shift,
            Self::IdentShift(c) => n_int + *c,
            Self::Custom(c) => BigInt::from((c.eval)(n)),
        })
    }

    fn growth(&self) -> Growth {
        let constant = |v: BigInt| {
            if v.is_zero() {
                Growth::Zero
            } else {
                Growth::Poly {
                    degree: 0,
                    lead: Rational::from_integer(v),
                }
            }
        };
        match self {
            Self::FloorLinear { mul: 0, add, div } => {
                constant(BigInt::from(*add).div_floor(&BigInt::from(*div)))
            }
            Self::FloorLinear { mul, div, .. } => Growth::Poly {
                degree: 1,
                lead: Rational::new((*mul).into(), (*div).into()),
            },
            Self::Poly(coeffs) => match coeffs.iter().rposition(|c| !c.is_zero()) {
                None => Growth::Zero,
                Some(d) => Growth::Poly {
                    degree: d,
                    lead: Rational::from_integer(coeffs[d].clone()),
                },
            },
            Self::Exp { base: 0 } => Growth::Zero,
            Self::Exp { base: 1 } => constant(BigInt::one()),
            Self::Exp { base } => Growth::Exp { base: *base },
            Self::AffineExp { base: 0, shift } => constant(BigInt::from(*shift)),
            Self::AffineExp { base: 1, shift } => constant(BigInt::from(*shift) + 1),
            Self::AffineExp { base, .. } => Growth::Exp { base: *base },
            Self::IdentShift(_) => Growth::Poly {
                degree: 1,
                lead: Rational::one(),
            },
            Self::Custom(_) => unreachable!("custom formulas have no symbolic growth"),
        }
    }
}

fn pow(base: u64, n: &BigUint) -> Result<BigUint, RatioError> {
    if base <= 1 {
        return Ok(if base == 0 && !n.is_zero() {
            BigUint::zero()
        } else {
            BigUint::one()
        });
    }
    let bits_per = 64 - u64::from(base.leading_zeros());
    let exponent = n
        .to_u64()
        .filter(|e| e.saturating_mul(bits_per) <= MAX_EXP_BITS)
        .ok_or_else(|| RatioError::TooLarge(format!("{base}^{n}")))?;
    Ok(BigUint::from(base).pow(exponent as u32))
}

/// Keyword syntax: `floor:(2n+1)/3`, `poly:1,0,2`, `exp:2`,
/// `affine-exp:2,+1`, `ident:+1`. Custom formulas render as
/// `custom:<label>` and cannot be parsed back.
impl fmt::Display for CountingFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::FloorLinear { mul, add, div } => {
                let m = if *mul == 1 { String::new() } else { mul.to_string() };
                if *add == 0 {
                    write!(f, "floor:{m}n/{div}")
                } else {
                    write!(f, "floor:({m}n{add:+})/{div}")
                }
            }
            Self::Poly(c) => {
                let parts: Vec<String> = c.iter().map(ToString::to_string).collect();
                write!(f, "poly:{}", parts.join(","))
            }
            Self::Exp { base } => write!(f, "exp:{base}"),
            Self::AffineExp { base, shift } => write!(f, "affine-exp:{base},{shift:+}"),
            Self::IdentShift(c) => write!(f, "ident:{c:+}"),
            Self::Custom(c) => write!(f, "custom:{}", c.label),
        }
    }
}

impl FromStr for CountingFormula {
    type Err = RatioError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || RatioError::InvalidFormula(s.to_string());
        let (kind, body) = s.trim().split_once(':').ok_or_else(bad)?;
        let body: String = body.chars().filter(|c| !c.is_whitespace()).collect();
        let formula = match kind {
            "floor" => {
                let (num, div) = body.rsplit_once('/').ok_or_else(bad)?;
                let div = div.parse::<u64>().map_err(|_| bad())?;
                let num = num
                    .strip_prefix('(')
                    .and_then(|x| x.strip_suffix(')'))
                    .unwrap_or(num);
                let (mul, rest) = num.split_once('n').ok_or_else(bad)?;
                let mul = if mul.is_empty() {
                    1
                } else {
                    mul.parse::<u64>().map_err(|_| bad())?
                };
                let add = if rest.is_empty() {
                    0
                } else {
                    parse_signed(rest).ok_or_else(bad)?
                };
                Self::FloorLinear { mul, add, div }
            }
            "poly" => Self::Poly(
                body.split(',')
                    .map(|c| c.parse::<BigInt>().map_err(|_| bad()))
                    .collect::<Result<_, _>>()?,
            ),
            "exp" => Self::Exp {
                base: body.parse().map_err(|_| bad())?,
            },
            "affine-exp" => {
                let (base, shift) = body.split_once(',').ok_or_else(bad)?;
                Self::AffineExp {
                    base: base.parse().map_err(|_| bad())?,
                    shift: parse_signed(shift).ok_or_else(bad)?,
                }
            }
            "ident" => Self::IdentShift(if body.is_empty() {
                0
            } else {
                parse_signed(&body).ok_or_else(bad)?
            }),
            _ => return Err(bad()),
        };
        formula.validate()?;
        Ok(formula)
    }
}

fn parse_signed(s: &str) -> Option<i64> {
    s.strip_prefix('+').unwrap_or(s).parse().ok()
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Growth {
    Zero,
    Poly { degree: usize, lead: Rational },
    Exp { base: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Classification {
    Converges(Rational),
    Zero,
    Infinite,
    Inconclusive,
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Converges(q) => write!(f, "CONVERGES({q})"),
            Self::Zero => f.write_str("ZERO"),
            Self::Infinite => f.write_str("INFINITE"),
            Self::Inconclusive => f.write_str("INCONCLUSIVE"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Method {
    Symbolic,
    Numeric { tolerance: Rational },
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Symbolic => f.write_str("SYMBOLIC"),
            Self::Numeric { tolerance } => write!(f, "NUMERIC(tolerance={tolerance})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatioReport {
    pub samples: Vec<(BigUint, Rational)>,
    pub classification: Classification,
    pub method: Method,
}

impl RatioReport {
    /// `n,numerator,denominator` rows followed by a `#` footer.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,numerator,denominator\n");
        for (n, q) in &self.samples {
            out.push_str(&format!("{n},{},{}\n", q.numer(), q.denom()));
        }
        out.push_str(&format!(
            "# classification={} method={}\n",
            self.classification, self.method
        ));
        out
    }
}

/// Options for [`rho_limit_with`].
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct LimitOptions {
    /// The caller vouches that the two custom formulas count interim sets
    /// that can genuinely be compared step for step.
    pub acknowledge_comparable: bool,
}

/// `|A| / |B|` for finite sets.
pub fn rho_finite(a: u64, b: u64) -> Result<Rational, RatioError> {
    if b == 0 {
        return Err(RatioError::ZeroCardinality);
    }
    Ok(Rational::new(a.into(), b.into()))
}

/// `phi_a(n) / phi_b(n)`, or `None` where the denominator vanishes.
pub fn sample_ratio(
    phi_a: &CountingFormula,
    phi_b: &CountingFormula,
    n: &BigUint,
) -> Result<Option<Rational>, RatioError> {
    let b = phi_b.evaluate(n)?;
    if b.is_zero() {
        return Ok(None);
    }
    Ok(Some(reduced(phi_a.evaluate(n)?, b)))
}

/// `Rational::new` reduces through a binary gcd, which crawls when one side
/// has millions of bits and the other a handful; Euclid's division steps
/// collapse that gap immediately.
fn reduced(numer: BigInt, denom: BigInt) -> Rational {
    let (mut x, mut y) = (numer.abs(), denom.abs());
    while !y.is_zero() {
        let r = &x % &y;
        (x, y) = (y, r);
    }
    let (mut numer, mut denom) = (numer / &x, denom / &x);
    if denom.is_negative() {
        numer = -numer;
        denom = -denom;
    }
    Rational::new_raw(numer, denom)
}

pub fn rho_limit(phi_a: &CountingFormula, phi_b: &CountingFormula) -> Result<RatioReport, RatioError> {
    rho_limit_with(phi_a, phi_b, LimitOptions::default())
}

pub fn rho_limit_with(
    phi_a: &CountingFormula,
    phi_b: &CountingFormula,
    options: LimitOptions,
) -> Result<RatioReport, RatioError> {
    phi_a.validate()?;
    phi_b.validate()?;
    if phi_a.is_custom() || phi_b.is_custom() {
        if !options.acknowledge_comparable {
            return Err(RatioError::Unacknowledged);
        }
        return numeric_limit(phi_a, phi_b);
    }
    let classification = symbolic_limit(&phi_a.growth(), &phi_b.growth())?;
    // illustrative samples at n = 1, 2, 4, ..., 1024
    let mut samples = Vec::new();
    for e in 0..=10u32 {
        let n = BigUint::one() << e;
        if let Some(q) = sample_ratio(phi_a, phi_b, &n)? {
            samples.push((n, q));
        }
    }
    Ok(RatioReport {
        samples,
        classification,
        method: Method::Symbolic,
    })
}

fn symbolic_limit(a: &Growth, b: &Growth) -> Result<Classification, RatioError> {
    use Growth::*;
    Ok(match (a, b) {
        (_, Zero) => return Err(RatioError::DenominatorZero),
        (Zero, _) => Classification::Zero,
        (Poly { degree: da, lead: la }, Poly { degree: db, lead: lb }) => match da.cmp(db) {
            Ordering::Equal => Classification::Converges(la / lb),
            Ordering::Less => Classification::Zero,
            Ordering::Greater => Classification::Infinite,
        },
        (Poly { .. }, Exp { .. }) => Classification::Zero,
        (Exp { .. }, Poly { .. }) => Classification::Infinite,
        (Exp { base: ba }, Exp { base: bb }) => match ba.cmp(bb) {
            // both exponentials carry a unit coefficient
            Ordering::Equal => Classification::Converges(Rational::one()),
            Ordering::Less => Classification::Zero,
            Ordering::Greater => Classification::Infinite,
        },
    })
}

fn numeric_limit(phi_a: &CountingFormula, phi_b: &CountingFormula) -> Result<RatioReport, RatioError> {
    let mut samples = Vec::new();
    for e in 10..=40u32 {
        let n = BigUint::one() << e;
        match sample_ratio(phi_a, phi_b, &n) {
            Ok(Some(q)) => samples.push((n, q)),
            Ok(None) => {}
            // a built-in exponential outgrew the evaluation bound
            Err(RatioError::TooLarge(_)) => break,
            Err(e) => return Err(e),
        }
    }
    if samples.is_empty() {
        return Err(RatioError::DenominatorZero);
    }
    let tolerance = numeric_tolerance();
    let classification = classify_samples(&samples, &tolerance);
    Ok(RatioReport {
        samples,
        classification,
        method: Method::Numeric { tolerance },
    })
}

fn classify_samples(samples: &[(BigUint, Rational)], tolerance: &Rational) -> Classification {
    if samples.len() < 3 {
        return Classification::Inconclusive;
    }
    let tail: Vec<&Rational> = samples[samples.len() - 3..].iter().map(|(_, q)| q).collect();
    let last = tail[2];
    if tail.iter().all(|q| q.is_zero()) {
        return Classification::Zero;
    }
    if !last.is_zero() && tail.iter().all(|q| (*q - last).abs() <= tolerance * last.abs()) {
        return Classification::Converges(limit_denominator(last, &BigInt::from(RATIONALIZE_MAX_DEN)));
    }
    let tiny = Rational::new(1.into(), BigInt::from(10u64.pow(12)));
    let huge = Rational::from_integer(BigInt::from(10u64.pow(12)));
    let decreasing = tail.windows(2).all(|w| w[1] < w[0]);
    let increasing = tail.windows(2).all(|w| w[1] > w[0]);
    if decreasing && !last.is_negative() && *last < tiny {
        Classification::Zero
    } else if increasing && *last > huge {
        Classification::Infinite
    } else {
        Classification::Inconclusive
    }
}

/// Closest rational to `x` with denominator at most `max_den`, found from
/// the continued-fraction convergents and the best semiconvergent.
pub fn limit_denominator(x: &Rational, max_den: &BigInt) -> Rational {
    if x.denom() <= max_den {
        return x.clone();
    }
    let (mut p0, mut q0, mut p1, mut q1) = (BigInt::zero(), BigInt::one(), BigInt::one(), BigInt::zero());
    let (mut n, mut d) = (x.numer().clone(), x.denom().clone());
    loop {
        let a = n.div_floor(&d);
        let q2 = &q0 + &a * &q1;
        if q2 > *max_den {
            break;
        }
        let p2 = &p0 + &a * &p1;
        (p0, q0, p1, q1) = (p1, q1, p2, q2);
        let r = &n - &a * &d;
        (n, d) = (d, r);
    }
    let k = (max_den - &q0).div_floor(&q1);
    let semi = Rational::new(&p0 + &k * &p1, &q0 + &k * &q1);
    let conv = Rational::new(p1, q1);
    if (&conv - x).abs() <= (&semi - x).abs() {
        conv
    } else {
        semi
    }
}

pub fn equicardinal(phi_a: &CountingFormula, phi_b: &CountingFormula) -> Result<bool, RatioError> {
    equicardinal_with(phi_a, phi_b, LimitOptions::default())
}

pub fn equicardinal_with(
    phi_a: &CountingFormula,
    phi_b: &CountingFormula,
    options: LimitOptions,
) -> Result<bool, RatioError> {
    match rho_limit_with(phi_a, phi_b, options)?.classification {
        Classification::Converges(q) => Ok(q.is_one()),
        Classification::Inconclusive => Err(RatioError::Undetermined),
        Classification::Zero | Classification::Infinite => Ok(false),
    }
}

/// The full-array diagonal cover read as a relative cardinality: diagonal
/// positions (`k`) against strings in the array (`2^k`), for
/// `k = 1..=k_max`.
pub fn dc_as_rho(k_max: u32) -> Vec<(u32, Rational)> {
    let positions = CountingFormula::IdentShift(0);
    let strings = CountingFormula::Exp { base: 2 };
    (1..=k_max)
        .map(|k| {
            let q = sample_ratio(&positions, &strings, &BigUint::from(k))
                .expect("2^k fits the evaluation bound")
                .expect("2^k is never zero");
            (k, q)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn f(s: &str) -> CountingFormula {
        s.parse().unwrap()
    }

    #[test]
    fn finite_examples() {
        assert_eq!(rho_finite(6, 4).unwrap(), q(3, 2));
        assert_eq!(rho_finite(0, 5).unwrap(), q(0, 1));
        assert_eq!(rho_finite(7, 7).unwrap(), q(1, 1));
        assert_eq!(rho_finite(1, 0), Err(RatioError::ZeroCardinality));
    }

    #[test]
    fn limit_examples() {
        let r = rho_limit(&f("floor:n/2"), &f("floor:n/3")).unwrap();
        assert_eq!(r.classification, Classification::Converges(q(3, 2)));
        assert_eq!(r.method, Method::Symbolic);
        let r = rho_limit(&f("ident:+1"), &f("affine-exp:2,+1")).unwrap();
        assert_eq!(r.classification, Classification::Zero);
        let r = rho_limit(&f("ident:0"), &f("exp:2")).unwrap();
        assert_eq!(r.classification, Classification::Zero);
        let r = rho_limit(&f("floor:(n+2)/2"), &f("floor:(n+1)/2")).unwrap();
        assert_eq!(r.classification, Classification::Converges(q(1, 1)));
        let r = rho_limit(&f("exp:3"), &f("poly:0,0,5")).unwrap();
        assert_eq!(r.classification, Classification::Infinite);
    }

    #[test]
    fn zero_denominator() {
        assert_eq!(
            rho_limit(&f("ident:0"), &f("poly:0")),
            Err(RatioError::DenominatorZero)
        );
        assert_eq!(
            rho_limit(&f("ident:0"), &f("floor:0n+1/2")).unwrap_err(),
            RatioError::DenominatorZero
        );
    }

    #[test]
    fn equicardinal_examples() {
        assert!(equicardinal(&f("floor:(n+2)/2"), &f("floor:(n+1)/2")).unwrap());
        assert!(!equicardinal(&f("ident:0"), &f("exp:2")).unwrap());
        let g = f("poly:3,1,4");
        assert!(equicardinal(&g, &g).unwrap());
    }

    #[test]
    fn custom_needs_acknowledgment() {
        let half = CountingFormula::custom("half", |n| n / 2u32);
        let third = CountingFormula::custom("third", |n| n / 3u32);
        assert_eq!(rho_limit(&half, &third), Err(RatioError::Unacknowledged));
        let ack = LimitOptions {
            acknowledge_comparable: true,
        };
        let r = rho_limit_with(&half, &third, ack).unwrap();
        assert_eq!(r.classification, Classification::Converges(q(3, 2)));
        assert!(matches!(r.method, Method::Numeric { .. }));
        assert_eq!(r.samples.len(), 31);
    }

    #[test]
    fn custom_zero_and_infinite() {
        let ack = LimitOptions {
            acknowledge_comparable: true,
        };
        let one = CountingFormula::custom("one", |_| BigUint::one());
        let square = CountingFormula::custom("square", |n| n * n);
        assert_eq!(
            rho_limit_with(&one, &square, ack).unwrap().classification,
            Classification::Zero
        );
        assert_eq!(
            rho_limit_with(&square, &one, ack).unwrap().classification,
            Classification::Infinite
        );
        // n vs 2^n cannot be sampled past the exponent bound
        let ident = CountingFormula::custom("n", |n| n.clone());
        let r = rho_limit_with(&ident, &f("exp:2"), ack).unwrap();
        assert_eq!(r.classification, Classification::Zero);
    }

    #[test]
    fn custom_oscillating_is_inconclusive() {
        let ack = LimitOptions {
            acknowledge_comparable: true,
        };
        let wobble = CountingFormula::custom("wobble", |n| {
            if n.bits() % 2 == 0 {
                n * 2u32
            } else {
                n.clone()
            }
        });
        let ident = CountingFormula::custom("n", |n| n.clone());
        let r = rho_limit_with(&wobble, &ident, ack).unwrap();
        assert_eq!(r.classification, Classification::Inconclusive);
        assert_eq!(
            equicardinal_with(&wobble, &ident, ack),
            Err(RatioError::Undetermined)
        );
    }

    #[test]
    fn rationalization() {
        let x = q(314159265, 100000000);
        assert_eq!(limit_denominator(&x, &BigInt::from(1000)), q(355, 113));
        assert_eq!(limit_denominator(&q(3, 2), &BigInt::from(10)), q(3, 2));
        let near = q(1_500_000_001, 1_000_000_000);
        assert_eq!(limit_denominator(&near, &BigInt::from(RATIONALIZE_MAX_DEN)), q(3, 2));
    }

    #[test]
    fn formula_syntax_round_trips() {
        for s in [
            "floor:n/2",
            "floor:3n/2",
            "floor:(n+2)/2",
            "floor:(2n-1)/3",
            "poly:1,0,3",
            "exp:2",
            "affine-exp:2,+1",
            "ident:+1",
            "ident:-3",
        ] {
            assert_eq!(f(s).to_string(), s);
        }
        assert_eq!(f("ident:0").to_string(), "ident:+0");
        for bad in ["floor:n", "floor:n/0", "exp:x", "custom:foo", "poly:1,-2", "nope"] {
            assert!(bad.parse::<CountingFormula>().is_err(), "{bad}");
        }
    }

    #[test]
    fn evaluation() {
        let n = BigUint::from(10u32);
        assert_eq!(f("floor:(2n-1)/3").evaluate(&n).unwrap(), 6.into());
        assert_eq!(f("poly:1,0,3").evaluate(&n).unwrap(), 301.into());
        assert_eq!(f("affine-exp:2,+1").evaluate(&n).unwrap(), 1025.into());
        assert!(matches!(
            f("exp:2").evaluate(&(BigUint::one() << 40)),
            Err(RatioError::TooLarge(_))
        ));
    }

    #[test]
    fn dc_as_rho_values() {
        let v = dc_as_rho(4);
        assert_eq!(v[0], (1, q(1, 2)));
        assert_eq!(v[3], (4, q(4, 16)));
    }

    #[test]
    fn csv_footer() {
        let r = rho_limit(&f("floor:n/2"), &f("floor:n/3")).unwrap();
        let csv = r.to_csv();
        assert!(csv.starts_with("n,numerator,denominator\n"));
        assert!(csv.ends_with("# classification=CONVERGES(3/2) method=SYMBOLIC\n"));
        // n = 1 has floor(1/3) = 0 and is skipped
        assert!(csv.contains("\n4,2,1\n"));
    }
}
