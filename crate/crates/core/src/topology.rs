//! The permutation ultrametric attached to an exhaustion `X_0 ⊂ X_1 ⊂ …`.
//!
//! `conf(a, b)` is the least `i` such that `a` and `b` disagree somewhere on
//! `X_i`, and `d(a, b) = 2^{-conf(a, b)}`. On a finite exhaustion two maps can
//! agree on every `X_i` without being equal, so that case is reported
//! separately; its distance is `0`.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::ops::Add;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, ParseError, Result};
use crate::perm::Permutation;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Exhaustion {
    degree: usize,
    sets: Vec<BTreeSet<usize>>,
    /// Whether the last set is the whole domain `0..degree`.
    covers: bool,
}

impl Exhaustion {
    /// Checks strict nesting, a nonempty first set and range.
    pub fn new(degree: usize, sets: Vec<BTreeSet<usize>>) -> Result<Self> {
        let invalid = |msg: String| Error::Parse(ParseError::Invalid(msg));
        match sets.first() {
            None => return Err(invalid("an exhaustion needs at least one set".into())),
            Some(x0) if x0.is_empty() => return Err(invalid("X_0 is empty".into())),
            _ => {}
        }
        for (i, s) in sets.iter().enumerate() {
            if let Some(&v) = s.iter().find(|&&v| v >= degree) {
                return Err(Error::PointOutOfRange { point: v, degree });
            }
            if i > 0 && !(sets[i - 1].is_subset(s) && sets[i - 1].len() < s.len()) {
                return Err(invalid(format!("X_{} is not a proper subset of X_{i}", i - 1)));
            }
        }
        let covers = sets.last().is_some_and(|s| s.len() == degree);
        Ok(Exhaustion { degree, sets, covers })
    }

    /// `X_i = {0, …, i}` for `i < degree`.
    pub fn initial_segments(degree: usize) -> Result<Self> {
        Self::new(degree, (0..degree).map(|i| (0..=i).collect()).collect())
    }

    /// Parses `"0|0,1|0,1,2"`: sets separated by `|`, points by `,`.
    pub fn parse(degree: usize, text: &str) -> Result<Self> {
        let sets = text
            .split('|')
            .map(|part| {
                part.split(',')
                    .map(str::trim)
                    .filter(|t| !t.is_empty())
                    .map(|t| {
                        t.parse::<usize>()
                            .map_err(|_| Error::Parse(ParseError::Invalid(format!("bad vertex {t:?} in exhaustion"))))
                    })
                    .collect::<Result<BTreeSet<usize>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(degree, sets)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn sets(&self) -> &[BTreeSet<usize>] {
        &self.sets
    }

    pub fn covers(&self) -> bool {
        self.covers
    }

    fn check(&self, p: &Permutation) -> Result<()> {
        if p.degree() == self.degree {
            Ok(())
        } else {
            Err(Error::DegreeMismatch { expected: self.degree, found: p.degree() })
        }
    }

    /// Least `i` with a disagreement on `X_i`.
    pub fn confluent(&self, a: &Permutation, b: &Permutation) -> Result<Confluent> {
        self.check(a)?;
        self.check(b)?;
        Ok(self
            .sets
            .iter()
            .position(|s| s.iter().any(|&x| a.apply(x) != b.apply(x)))
            .map_or(Confluent::EqualOnAll { covers: self.covers }, Confluent::At))
    }

    pub fn dist(&self, a: &Permutation, b: &Permutation) -> Result<Dyadic> {
        Ok(match self.confluent(a, b)? {
            Confluent::At(i) => Dyadic::pow2_neg(i as u32),
            Confluent::EqualOnAll { .. } => Dyadic::zero(),
        })
    }

    /// `d(a, b) + d(a⁻¹, b⁻¹)`.
    pub fn dist_star(&self, a: &Permutation, b: &Permutation) -> Result<Dyadic> {
        Ok(self.dist(a, b)? + self.dist(&a.inverse(), &b.inverse())?)
    }

    /// Triples breaking `d(a, c) ≤ max(d(a, b), d(b, c))` or symmetry.
    pub fn check_ultrametric(&self, triples: &[[Permutation; 3]]) -> Result<Vec<Violation>> {
        let mut out = Vec::new();
        for (index, [a, b, c]) in triples.iter().enumerate() {
            let (ab, bc, ac) = (self.dist(a, b)?, self.dist(b, c)?, self.dist(a, c)?);
            if ac > ab.clone().max(bc.clone()) {
                out.push(Violation { index, kind: ViolationKind::StrongTriangle, distances: [ab.clone(), bc, ac] });
            }
            let ba = self.dist(b, a)?;
            if ba != ab {
                out.push(Violation { index, kind: ViolationKind::Symmetry, distances: [ab, ba, Dyadic::zero()] });
            }
        }
        Ok(out)
    }

    /// Entry `k` is `max_{l > k} d(seq[k], seq[l])`.
    pub fn check_cauchy(&self, seq: &[Permutation]) -> Result<Vec<Dyadic>> {
        (0..seq.len().saturating_sub(1))
            .map(|k| {
                seq[k + 1..].iter().map(|b| self.dist(&seq[k], b)).try_fold(Dyadic::zero(), |acc, d| Ok(acc.max(d?)))
            })
            .collect()
    }

    /// `d(center, b) < 2^{-k}`.
    pub fn in_ball(&self, center: &Permutation, b: &Permutation, k: usize) -> Result<bool> {
        Ok(self.dist(center, b)? < Dyadic::pow2_neg(k as u32))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Confluent {
    At(usize),
    /// No disagreement on any `X_i`; `covers` says whether that proves equality.
    EqualOnAll {
        covers: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ViolationKind {
    StrongTriangle,
    Symmetry,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub index: usize,
    pub kind: ViolationKind,
    pub distances: [Dyadic; 3],
}

/// An exact nonnegative dyadic rational `m / 2^e`, kept in lowest terms.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Dyadic {
    mantissa: BigUint,
    exponent: u32,
}

impl Dyadic {
    pub fn new(mantissa: BigUint, exponent: u32) -> Self {
        let mut d = Dyadic { mantissa, exponent };
        if d.mantissa.is_zero() {
            d.exponent = 0;
        }
        while d.exponent > 0 && !d.mantissa.bit(0) {
            d.mantissa >>= 1u32;
            d.exponent -= 1;
        }
        d
    }

    pub fn zero() -> Self {
        Dyadic { mantissa: BigUint::zero(), exponent: 0 }
    }

    /// `2^{-k}`.
    pub fn pow2_neg(k: u32) -> Self {
        Dyadic { mantissa: BigUint::one(), exponent: k }
    }

    pub fn is_zero(&self) -> bool {
        self.mantissa.is_zero()
    }

    pub fn mantissa(&self) -> &BigUint {
        &self.mantissa
    }

    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    pub fn to_f64(&self) -> f64 {
        self.mantissa.to_f64().unwrap_or(f64::INFINITY) * 2f64.powi(-(self.exponent.min(i32::MAX as u32) as i32))
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        let a = &self.mantissa << other.exponent;
        let b = &other.mantissa << self.exponent;
        a.cmp(&b)
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for Dyadic {
    type Output = Dyadic;

    fn add(self, other: Dyadic) -> Dyadic {
        let e = self.exponent.max(other.exponent);
        let m = (self.mantissa << (e - self.exponent)) + (other.mantissa << (e - other.exponent));
        Dyadic::new(m, e)
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exponent == 0 {
            write!(f, "{}", self.mantissa)
        } else {
            write!(f, "{}/{}", self.mantissa, BigUint::one() << self.exponent)
        }
    }
}

impl Serialize for Dyadic {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}
