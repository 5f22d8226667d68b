//! Edge-rotation moves on trees and the exact ratios they induce on Π1 and
//! Π2.
//!
//! Two moves are modelled:
//!
//! * [`RotationMove::DegreeShift`] raises a receiver's degree by one and
//!   lowers a donor's by one, by re-hanging one of the donor's branches on
//!   the receiver.
//! * [`RotationMove::LeafReattach`] cuts the edge `u u2` at a maximum-degree
//!   vertex `u` and hangs `u2` on a pendent vertex `z1` on another branch of
//!   `u`: `T - u u2 + u2 z1`.
//!
//! Ratios are exact [`BigRational`]s; the inequalities they feed are strict
//! and must not depend on rounding.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::graph_core::degree_sequence_of;
use crate::graph_core::{build_adjacency, Tree};
use crate::indices::{pi1, pi2_vertex, Index};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum TransformError {
    #[error("ratio functions need x > 0 and m > 0, got x = {x}, m = {m}")]
    NonPositive { x: f64, m: f64 },
    #[error("degree {degree} outside the window 2..={} below maximum degree {max_degree}", max_degree.saturating_sub(1))]
    OutsideWindow { max_degree: u32, degree: u32 },
    #[error("pair shift needs 2 <= smaller <= larger, got larger = {larger}, smaller = {smaller}")]
    InvalidPair { larger: u32, smaller: u32 },
    #[error("vertex {0} out of range")]
    NoSuchVertex(usize),
    #[error("vertex {vertex} has degree {degree}, not the maximum degree {max_degree}")]
    NotMaxDegree {
        vertex: usize,
        degree: usize,
        max_degree: usize,
    },
    #[error("leaf reattachment needs maximum degree at least 4, tree has {0}")]
    MaxDegreeTooSmall(usize),
    #[error("vertices {0} and {1} are not adjacent")]
    NotAdjacent(usize, usize),
    #[error("vertex {0} is not pendent")]
    NotPendent(usize),
    #[error("after cutting {u}-{u2}, vertex {z1} lies on the side of {u2}")]
    SameComponent { u: usize, u2: usize, z1: usize },
    #[error("degree shift needs distinct receiver and donor with 2 <= d(donor) < d(receiver)")]
    BadShift,
    #[error("vertex {moved} is not a branch of donor {donor} away from receiver {receiver}")]
    BadBranch {
        receiver: usize,
        donor: usize,
        moved: usize,
    },
    #[error("not enough edge rotating capacity: {needed} shifts needed")]
    InsufficientCapacity { needed: usize },
}

/// `x / (x + m)`, increasing in `x` for fixed `m > 0`.
pub fn f_ratio(x: f64, m: f64) -> Result<f64, TransformError> {
    check_positive(x, m)?;
    Ok(x / (x + m))
}

/// `x^x / (x + m)^(x + m)`, decreasing in `x` for fixed `m > 0`. Evaluated in
/// the log domain.
pub fn g_ratio(x: f64, m: f64) -> Result<f64, TransformError> {
    check_positive(x, m)?;
    let y = x + m;
    Ok((x * x.ln() - y * y.ln()).exp())
}

fn check_positive(x: f64, m: f64) -> Result<(), TransformError> {
    if x > 0.0 && m > 0.0 && x.is_finite() && m.is_finite() {
        Ok(())
    } else {
        Err(TransformError::NonPositive { x, m })
    }
}

fn int(v: u64) -> BigInt {
    BigInt::from(v)
}

fn pow(base: u64, exp: u64) -> BigInt {
    BigInt::from(BigUint::from(base).pow(exp as u32))
}

/// Exact `x / (x + m)` at positive integers.
pub fn f_ratio_exact(x: u64, m: u64) -> BigRational {
    BigRational::new(int(x), int(x + m))
}

/// Exact `x^x / (x + m)^(x + m)` at positive integers.
pub fn g_ratio_exact(x: u64, m: u64) -> BigRational {
    BigRational::new(pow(x, x), pow(x + m, x + m))
}

/// Per-vertex factor of an index: `d^2` for Π1, `d^d` for Π2.
fn factor(d: u64, index: Index) -> BigInt {
    match index {
        Index::Pi1 => pow(d, 2),
        Index::Pi2 => pow(d, d),
    }
}

/// Ratio after/before of raising a degree `high` to `high + 1` and lowering
/// `low` to `low - 1`.
fn shift_ratio(high: u64, low: u64, index: Index) -> BigRational {
    BigRational::new(
        factor(high + 1, index) * factor(low - 1, index),
        factor(high, index) * factor(low, index),
    )
}

/// Exact change of an index when a maximum-degree vertex gains one edge
/// from a vertex of degree `donor_degree` (`2 ≤ donor_degree ≤ Δ - 1`).
/// Below 1 for Π1, above 1 for Π2.
pub fn degree_shift_ratio(
    max_degree: u32,
    donor_degree: u32,
    index: Index,
) -> Result<BigRational, TransformError> {
    if donor_degree < 2 || donor_degree + 1 > max_degree {
        return Err(TransformError::OutsideWindow {
            max_degree,
            degree: donor_degree,
        });
    }
    Ok(shift_ratio(max_degree as u64, donor_degree as u64, index))
}

/// Exact change of an index when a degree `larger` grows by one at the
/// expense of a degree `smaller ≤ larger`. Below 1 for Π1, above 1 for Π2.
pub fn pair_shift_ratio(
    larger: u32,
    smaller: u32,
    index: Index,
) -> Result<BigRational, TransformError> {
    if smaller < 2 || smaller > larger {
        return Err(TransformError::InvalidPair { larger, smaller });
    }
    Ok(shift_ratio(larger as u64, smaller as u64, index))
}

/// Exact change of an index under a leaf reattachment at a vertex of degree
/// `max_degree`: `4(Δ-1)²/Δ²` for Π1 and `4(Δ-1)^(Δ-1)/Δ^Δ` for Π2.
pub fn leaf_reattach_ratio(max_degree: u32, index: Index) -> BigRational {
    let d = max_degree as u64;
    BigRational::new(
        factor(d - 1, index) * factor(2, index),
        factor(d, index) * factor(1, index),
    )
}

/// `index(after) / index(before)` computed from the two trees.
pub fn index_ratio(before: &Tree, after: &Tree, index: Index) -> BigRational {
    let eval = |t: &Tree| {
        let d = degree_sequence_of(t);
        let v = match index {
            Index::Pi1 => pi1(&d),
            Index::Pi2 => pi2_vertex(&d),
        };
        BigInt::from(v.into_exact())
    };
    let denom = eval(before);
    assert!(!denom.is_zero(), "index of a tree with n >= 2 is positive");
    BigRational::new(eval(after), denom)
}

/// Sum of `d(v) - 1` over vertices with `2 ≤ d(v) ≤ Δ - 1`.
pub fn edge_rotating_capacity(t: &Tree) -> usize {
    let max = t.max_degree();
    t.degrees()
        .filter(|&d| d >= 2 && d < max)
        .map(|d| d - 1)
        .sum()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MoveKind {
    DegreeShift,
    LeafReattach,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RotationMove {
    /// `T - donor moved + receiver moved`.
    DegreeShift {
        receiver: usize,
        donor: usize,
        moved: usize,
    },
    /// `T - source detached + detached pendent`.
    LeafReattach {
        source: usize,
        detached: usize,
        pendent: usize,
    },
}

impl RotationMove {
    pub fn kind(&self) -> MoveKind {
        match self {
            RotationMove::DegreeShift { .. } => MoveKind::DegreeShift,
            RotationMove::LeafReattach { .. } => MoveKind::LeafReattach,
        }
    }

    pub fn apply(&self, t: &Tree) -> Result<Tree, TransformError> {
        match *self {
            RotationMove::DegreeShift {
                receiver,
                donor,
                moved,
            } => apply_degree_shift(t, receiver, donor, moved),
            RotationMove::LeafReattach {
                source,
                detached,
                pendent,
            } => leaf_reattach(t, source, detached, pendent),
        }
    }
}

fn check_vertex(t: &Tree, v: usize) -> Result<(), TransformError> {
    if v < t.n() {
        Ok(())
    } else {
        Err(TransformError::NoSuchVertex(v))
    }
}

fn rewire(t: &Tree, cut: (usize, usize), join: (usize, usize)) -> Tree {
    let edges = t
        .edges()
        .filter(|&(a, b)| (a, b) != (cut.0.min(cut.1), cut.0.max(cut.1)))
        .chain(std::iter::once(join));
    let adj = build_adjacency(t.n(), edges).expect("rewired edge is new");
    Tree::from_adjacency(adj).expect("rotation preserves tree-ness")
}

/// `T - u u2 + u2 z1`.
///
/// `u` must be a maximum-degree vertex with `Δ ≥ 4`, `u2` a neighbour of
/// `u`, and `z1` a pendent vertex that stays on `u`'s side once `u u2` is
/// cut. Only `u` (down by one) and `z1` (1 to 2) change degree.
pub fn leaf_reattach(t: &Tree, u: usize, u2: usize, z1: usize) -> Result<Tree, TransformError> {
    for v in [u, u2, z1] {
        check_vertex(t, v)?;
    }
    let max = t.max_degree();
    if max < 4 {
        return Err(TransformError::MaxDegreeTooSmall(max));
    }
    if t.degree(u) != max {
        return Err(TransformError::NotMaxDegree {
            vertex: u,
            degree: t.degree(u),
            max_degree: max,
        });
    }
    if !t.has_edge(u, u2) {
        return Err(TransformError::NotAdjacent(u, u2));
    }
    if t.degree(z1) != 1 {
        return Err(TransformError::NotPendent(z1));
    }
    let parent = t.parents(u);
    let mut v = z1;
    while v != u {
        if v == u2 {
            return Err(TransformError::SameComponent { u, u2, z1 });
        }
        v = parent[v];
    }
    Ok(rewire(t, (u, u2), (u2, z1)))
}

/// A valid `(u2, z1)` for [`leaf_reattach`] at `u`, if any: `z1` is the first
/// pendent vertex found on the lowest-indexed branch of `u`, and `u2` the
/// lowest-indexed other neighbour.
pub fn find_leaf_reattach(t: &Tree, u: usize) -> Option<(usize, usize)> {
    if u >= t.n() || t.degree(u) < 2 {
        return None;
    }
    let parent = t.parents(u);
    let branch_root = |mut v: usize| {
        while parent[v] != u {
            v = parent[v];
        }
        v
    };
    let mut leaves: Vec<usize> = (0..t.n()).filter(|&v| v != u && t.degree(v) == 1).collect();
    leaves.sort_by_key(|&z| (branch_root(z), z));
    let z1 = *leaves.first()?;
    let u1 = branch_root(z1);
    let u2 = *t.neighbors(u).iter().find(|&&w| w != u1)?;
    Some((u2, z1))
}

fn apply_degree_shift(
    t: &Tree,
    receiver: usize,
    donor: usize,
    moved: usize,
) -> Result<Tree, TransformError> {
    for v in [receiver, donor, moved] {
        check_vertex(t, v)?;
    }
    if receiver == donor || t.degree(donor) < 2 || t.degree(donor) >= t.degree(receiver) {
        return Err(TransformError::BadShift);
    }
    let parent = t.parents(receiver);
    if !t.has_edge(donor, moved) || parent[donor] == moved {
        return Err(TransformError::BadBranch {
            receiver,
            donor,
            moved,
        });
    }
    Ok(rewire(t, (donor, moved), (receiver, moved)))
}

/// Moves one branch of `donor` (the lowest-indexed neighbour not on the path
/// to `receiver`) onto `receiver`.
pub fn degree_shift(
    t: &Tree,
    receiver: usize,
    donor: usize,
) -> Result<(RotationMove, Tree), TransformError> {
    check_vertex(t, receiver)?;
    check_vertex(t, donor)?;
    if receiver == donor {
        return Err(TransformError::BadShift);
    }
    let parent = t.parents(receiver);
    let moved = *t
        .neighbors(donor)
        .iter()
        .find(|&&w| w != parent[donor])
        .ok_or(TransformError::BadShift)?;
    let mv = RotationMove::DegreeShift {
        receiver,
        donor,
        moved,
    };
    let out = mv.apply(t)?;
    Ok((mv, out))
}

/// Applies leaf reattachments at every vertex of the current maximum degree
/// `Δ ≥ 4`, lowest index first, until none is left. Returns each
/// intermediate tree with the move that produced it.
pub fn lower_max_degree(t: &Tree) -> Result<Vec<(RotationMove, Tree)>, TransformError> {
    let max = t.max_degree();
    if max < 4 {
        return Err(TransformError::MaxDegreeTooSmall(max));
    }
    let mut steps = Vec::new();
    let mut current = t.clone();
    while let Some(u) = (0..current.n()).find(|&v| current.degree(v) == max) {
        let (u2, z1) =
            find_leaf_reattach(&current, u).expect("a vertex of degree >= 4 has a reattachment");
        let mv = RotationMove::LeafReattach {
            source: u,
            detached: u2,
            pendent: z1,
        };
        current = mv.apply(&current)?;
        steps.push((mv, current.clone()));
    }
    Ok(steps)
}

/// Raises every vertex of the current maximum degree `Δ` to `Δ + 1` by
/// degree shifts. Each donor is the lowest-indexed vertex whose degree lies
/// in `2..=Δ-1` at the time of the shift.
pub fn raise_max_degree(t: &Tree) -> Result<Vec<(RotationMove, Tree)>, TransformError> {
    let max = t.max_degree();
    let receivers: Vec<usize> = (0..t.n()).filter(|&v| t.degree(v) == max).collect();
    let mut steps = Vec::new();
    let mut current = t.clone();
    for receiver in receivers {
        let donor = (0..current.n())
            .find(|&v| {
                let d = current.degree(v);
                d >= 2 && d < max
            })
            .ok_or(TransformError::InsufficientCapacity {
                needed: (0..t.n()).filter(|&v| t.degree(v) == max).count(),
            })?;
        let (mv, next) = degree_shift(&current, receiver, donor)?;
        current = next;
        steps.push((mv, current.clone()));
    }
    Ok(steps)
}

/// True when `r` is strictly between 0 and 1.
pub fn is_contraction(r: &BigRational) -> bool {
    r > &BigRational::zero() && r < &BigRational::one()
}
