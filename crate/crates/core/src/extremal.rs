//! Extremal degree sequences and closed-form bounds for the class of trees on
//! `n` vertices with exactly `k` vertices of maximum degree.
//!
//! Two sequences cover all four extremal problems:
//!
//! * the *concentrated* sequence `(Δ^k, (Δ-1)^p, μ, 1^(n-k-p-1))` with
//!   `Δ = ⌊(n-2)/k⌋ + 1`, which minimises Π1 and maximises Π2;
//! * the *balanced* sequence `(3^k, 2^(n-2k-2), 1^(k+2))`, which maximises Π1
//!   and minimises Π2.
//!
//! The class is non-empty exactly when `k ≤ ⌊(n-2)/2⌋` (some vertex of degree
//! at least 3) or `k = n - 2` (the path).

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph_core::{DegreeSequence, Tree};
use crate::indices::{Index, IndexValue};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExtremalError {
    #[error(
        "no tree on {n} vertices has exactly {k} vertices of maximum degree \
         (admissible iff 1 <= k <= floor((n-2)/2) or k = n-2)"
    )]
    Inadmissible { n: usize, k: usize },
    #[error("{0} is not a tree degree sequence (degrees must sum to 2(n-1))")]
    NotATreeSequence(DegreeSequence),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Goal {
    Min,
    Max,
}

impl Goal {
    pub const ALL: [Goal; 2] = [Goal::Min, Goal::Max];

    pub fn name(self) -> &'static str {
        match self {
            Goal::Min => "min",
            Goal::Max => "max",
        }
    }
}

impl fmt::Display for Goal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Goal {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "min" => Ok(Goal::Min),
            "max" => Ok(Goal::Max),
            _ => Err(format!("unknown goal {s:?}, expected min or max")),
        }
    }
}

/// The four `(index, goal)` problems in report order.
pub const QUADRANTS: [(Index, Goal); 4] = [
    (Index::Pi1, Goal::Min),
    (Index::Pi1, Goal::Max),
    (Index::Pi2, Goal::Min),
    (Index::Pi2, Goal::Max),
];

/// How the degree excess left over by the `k` maximum-degree vertices is
/// packed into the concentrated sequence. Only defined when `Δ ≥ 3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fill {
    /// `n - 2 - k(Δ-1)`, in `0..k`.
    pub remainder: u32,
    /// Number of vertices of degree `Δ - 1`.
    pub sub_max_count: u32,
    /// Degree of the single leftover vertex, `1 ≤ μ ≤ Δ - 2`. A value of 1
    /// means it is just another leaf.
    pub residual_degree: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassParams {
    pub n: usize,
    pub k: usize,
    pub max_degree: u32,
    /// `None` for the path class `k = n - 2`, where `Δ - 2 = 0`.
    pub fill: Option<Fill>,
}

impl ClassParams {
    pub fn is_path(&self) -> bool {
        self.fill.is_none()
    }
}

/// Whether some tree on `n` vertices has exactly `k` vertices of maximum
/// degree.
pub fn is_admissible(n: usize, k: usize) -> bool {
    if n < 2 || k < 1 {
        return false;
    }
    in_main_range(n, k) || k == n - 2
}

/// `1 ≤ k ≤ ⌊(n-2)/2⌋`, the range where the maximum degree is at least 3.
pub fn in_main_range(n: usize, k: usize) -> bool {
    n >= 4 && k >= 1 && k <= (n - 2) / 2
}

/// Admissible `k` values for `n`, ascending.
pub fn admissible_ks(n: usize) -> Vec<usize> {
    (1..n).filter(|&k| is_admissible(n, k)).collect()
}

pub fn class_params(n: usize, k: usize) -> Result<ClassParams, ExtremalError> {
    if !is_admissible(n, k) {
        return Err(ExtremalError::Inadmissible { n, k });
    }
    if !in_main_range(n, k) {
        return Ok(ClassParams {
            n,
            k,
            max_degree: 2,
            fill: None,
        });
    }
    let max_degree = (n - 2) / k + 1;
    let remainder = n - 2 - k * (max_degree - 1);
    let sub_max_count = remainder / (max_degree - 2);
    let residual_degree = n - 1 - k * (max_degree - 1) - sub_max_count * (max_degree - 2);
    Ok(ClassParams {
        n,
        k,
        max_degree: max_degree as u32,
        fill: Some(Fill {
            remainder: remainder as u32,
            sub_max_count: sub_max_count as u32,
            residual_degree: residual_degree as u32,
        }),
    })
}

/// `(Δ^k, (Δ-1)^p, μ, 1^(n-k-p-1))`.
pub fn concentrated_sequence(params: &ClassParams) -> DegreeSequence {
    match params.fill {
        None => path_sequence(params.n),
        Some(fill) => {
            let (n, k, p) = (params.n, params.k, fill.sub_max_count as usize);
            DegreeSequence::from_blocks(&[
                (params.max_degree, k),
                (params.max_degree - 1, p),
                (fill.residual_degree, 1),
                (1, n - k - p - 1),
            ])
            .expect("positive degrees")
        }
    }
}

/// `(3^k, 2^(n-2k-2), 1^(k+2))`.
pub fn balanced_sequence(params: &ClassParams) -> DegreeSequence {
    if params.is_path() {
        return path_sequence(params.n);
    }
    let (n, k) = (params.n, params.k);
    DegreeSequence::from_blocks(&[(3, k), (2, n - 2 * k - 2), (1, k + 2)])
        .expect("positive degrees")
}

fn path_sequence(n: usize) -> DegreeSequence {
    DegreeSequence::from_blocks(&[(2, n - 2), (1, 2)]).expect("positive degrees")
}

fn pow(base: u32, exp: usize) -> BigUint {
    BigUint::from(base).pow(exp as u32)
}

/// The closed-form extremal value, evaluated directly from the class
/// parameters rather than from a sequence.
pub fn closed_form_bound(params: &ClassParams, index: Index, goal: Goal) -> IndexValue {
    let n = params.n;
    let k = params.k;
    let Some(fill) = params.fill else {
        return IndexValue::new(pow(4, n - 2));
    };
    let delta = params.max_degree;
    let p = fill.sub_max_count as usize;
    let mu = fill.residual_degree;
    let exact = match (index, goal) {
        (Index::Pi1, Goal::Min) => pow(delta, 2 * k) * pow(delta - 1, 2 * p) * pow(mu, 2),
        (Index::Pi1, Goal::Max) => pow(9, k) * pow(4, n - 2 * k - 2),
        (Index::Pi2, Goal::Min) => pow(27, k) * pow(4, n - 2 * k - 2),
        (Index::Pi2, Goal::Max) => {
            pow(delta, k * delta as usize)
                * pow(delta - 1, p * (delta as usize - 1))
                * pow(mu, mu as usize)
        }
    };
    IndexValue::new(exact)
}

/// One extremal problem with its witness sequence and bound.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtremalSpec {
    pub class: ClassParams,
    pub index: Index,
    pub goal: Goal,
    pub sequence: DegreeSequence,
    pub bound: IndexValue,
}

pub fn extremal_spec(
    n: usize,
    k: usize,
    index: Index,
    goal: Goal,
) -> Result<ExtremalSpec, ExtremalError> {
    let class = class_params(n, k)?;
    let sequence = match (index, goal) {
        (Index::Pi1, Goal::Min) | (Index::Pi2, Goal::Max) => concentrated_sequence(&class),
        (Index::Pi1, Goal::Max) | (Index::Pi2, Goal::Min) => balanced_sequence(&class),
    };
    let bound = closed_form_bound(&class, index, goal);
    debug_assert_eq!(bound, index.evaluate(&sequence));
    Ok(ExtremalSpec {
        class,
        index,
        goal,
        sequence,
        bound,
    })
}

/// Builds a tree with degree sequence `d`.
///
/// Degrees are taken non-increasing; vertex 0 is the root and each later
/// vertex `i` is attached to the oldest vertex that still has a free slot
/// (first-in first-out), so the output depends only on the sequence.
pub fn realize(d: &DegreeSequence) -> Result<Tree, ExtremalError> {
    if !d.is_tree_sequence() {
        return Err(ExtremalError::NotATreeSequence(d.clone()));
    }
    let degrees = d.as_slice();
    let n = degrees.len();
    let mut edges = Vec::with_capacity(n.saturating_sub(1));
    let mut open: VecDeque<(usize, u32)> = VecDeque::new();
    if n > 1 {
        open.push_back((0, degrees[0]));
    }
    for (v, &deg) in degrees.iter().enumerate().skip(1) {
        // non-empty for any sequence summing to 2(n-1) taken in this order
        let (parent, slots) = open.front_mut().expect("free slot exists");
        edges.push((*parent, v));
        *slots -= 1;
        if *slots == 0 {
            open.pop_front();
        }
        if deg > 1 {
            open.push_back((v, deg - 1));
        }
    }
    Ok(Tree::from_edges(n, &edges).expect("greedy realization is a tree"))
}
