//! Multiplicative and classical Zagreb indices.
//!
//! Products are computed exactly in [`BigUint`]. The base-2 logarithm carried
//! in [`IndexValue`] is derived from the exact value and is only meant for
//! display and quick ordering.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize, Serializer};

use crate::graph_core::{DegreeSequence, Tree};

/// An exact index value with its log2 shadow.
#[derive(Debug, Clone)]
pub struct IndexValue {
    exact: BigUint,
    log2: f64,
}

impl IndexValue {
    pub fn new(exact: BigUint) -> Self {
        let log2 = log2_biguint(&exact);
        IndexValue { exact, log2 }
    }

    pub fn exact(&self) -> &BigUint {
        &self.exact
    }

    pub fn into_exact(self) -> BigUint {
        self.exact
    }

    pub fn log2(&self) -> f64 {
        self.log2
    }
}

impl From<BigUint> for IndexValue {
    fn from(exact: BigUint) -> Self {
        IndexValue::new(exact)
    }
}

impl From<u64> for IndexValue {
    fn from(v: u64) -> Self {
        IndexValue::new(BigUint::from(v))
    }
}

impl PartialEq for IndexValue {
    fn eq(&self, other: &Self) -> bool {
        self.exact == other.exact
    }
}

impl Eq for IndexValue {}

impl PartialOrd for IndexValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for IndexValue {
    fn cmp(&self, other: &Self) -> Ordering {
        self.exact.cmp(&other.exact)
    }
}

impl fmt::Display for IndexValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.exact, f)
    }
}

// Exact values go out as decimal strings; JSON consumers lose precision
// above 2^53.
impl Serialize for IndexValue {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            exact: &'a str,
            log2: f64,
        }
        Repr {
            exact: &self.exact.to_string(),
            log2: self.log2,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for IndexValue {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            exact: String,
        }
        let repr = Repr::deserialize(deserializer)?;
        BigUint::from_str(&repr.exact)
            .map(IndexValue::new)
            .map_err(serde::de::Error::custom)
    }
}

/// log2 of an arbitrary-size integer from its top 64 bits.
pub fn log2_biguint(x: &BigUint) -> f64 {
    if x.is_zero() {
        return f64::NEG_INFINITY;
    }
    let bits = x.bits();
    if bits <= 64 {
        return (x.to_u64().expect("fits in u64") as f64).log2();
    }
    let shift = bits - 64;
    let top = (x >> shift).to_u64().expect("fits in u64");
    (top as f64).log2() + shift as f64
}

/// The two multiplicative indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Index {
    Pi1,
    Pi2,
}

impl Index {
    pub const ALL: [Index; 2] = [Index::Pi1, Index::Pi2];

    pub fn evaluate(self, d: &DegreeSequence) -> IndexValue {
        match self {
            Index::Pi1 => pi1(d),
            Index::Pi2 => pi2_vertex(d),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Index::Pi1 => "pi1",
            Index::Pi2 => "pi2",
        }
    }
}

impl fmt::Display for Index {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Index {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "pi1" => Ok(Index::Pi1),
            "pi2" => Ok(Index::Pi2),
            _ => Err(format!("unknown index {s:?}, expected pi1 or pi2")),
        }
    }
}

fn product_of_powers(d: &DegreeSequence, exponent: impl Fn(u32) -> u32) -> BigUint {
    d.multiplicities()
        .iter()
        .enumerate()
        .filter(|&(_, &count)| count > 0)
        .fold(BigUint::one(), |acc, (degree, &count)| {
            let degree = degree as u32;
            let e = exponent(degree) * count as u32;
            if e == 0 {
                acc
            } else {
                acc * BigUint::from(degree).pow(e)
            }
        })
}

/// First multiplicative Zagreb index: product of squared degrees.
pub fn pi1(d: &DegreeSequence) -> IndexValue {
    IndexValue::new(product_of_powers(d, |_| 2))
}

/// Second multiplicative Zagreb index in its vertex form, the product of
/// `d^d`.
pub fn pi2_vertex(d: &DegreeSequence) -> IndexValue {
    IndexValue::new(product_of_powers(d, |degree| degree))
}

/// Second multiplicative Zagreb index in its edge form, the product over
/// edges of `d(u) d(v)`.
pub fn pi2_edge(t: &Tree) -> IndexValue {
    let mut exact = BigUint::one();
    let mut acc: u64 = 1;
    for (u, v) in t.edges() {
        let w = (t.degree(u) * t.degree(v)) as u64;
        match acc.checked_mul(w) {
            Some(next) => acc = next,
            None => {
                exact *= acc;
                acc = w;
            }
        }
    }
    exact *= acc;
    IndexValue::new(exact)
}

/// First Zagreb index, the sum of squared degrees.
pub fn m1(d: &DegreeSequence) -> u64 {
    d.as_slice().iter().map(|&x| (x as u64) * (x as u64)).sum()
}

/// Second Zagreb index, the sum over edges of `d(u) d(v)`.
pub fn m2(t: &Tree) -> u64 {
    t.edges()
        .map(|(u, v)| (t.degree(u) * t.degree(v)) as u64)
        .sum()
}
