//! Brute-force ground truth for the extremal results.
//!
//! Every free tree on `n` vertices is streamed once, sorted into its class by
//! the number of maximum-degree vertices, and both multiplicative indices are
//! tracked per class. Only running extrema and the degree sequences that
//! attain them are kept, so memory is independent of the number of trees.

mod canon;
mod generate;
pub mod prufer;

pub use canon::{canonical_form, centers, rooted_form};
pub use generate::{tree_from_levels, FreeTrees, LevelSequences};

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::extremal::{self, admissible_ks, is_admissible, Goal, QUADRANTS};
use crate::graph_core::{degree_sequence_of, max_degree_count, DegreeSequence, Tree};
use crate::indices::{pi1, pi2_edge, pi2_vertex, Index, IndexValue};

/// Largest order the enumerator accepts.
pub const MAX_ORDER: usize = 20;

/// Attaining sequences kept per extremum before the overflow flag is set.
pub const TIE_CAP: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("tree order {0} outside the supported range 1..={MAX_ORDER}")]
    OrderOutOfRange(usize),
    #[error("class ({n}, {k}) is inadmissible")]
    Inadmissible { n: usize, k: usize },
    #[error("class ({n}, {k}) is empty although admissible")]
    EmptyClass { n: usize, k: usize },
}

/// One representative of every isomorphism class of trees on `n` vertices.
pub fn enumerate_free_trees(n: usize) -> Result<FreeTrees, OracleError> {
    if !(1..=MAX_ORDER).contains(&n) {
        return Err(OracleError::OrderOutOfRange(n));
    }
    Ok(FreeTrees::new(n))
}

/// Enumerated trees grouped by their count of maximum-degree vertices.
pub fn classify(n: usize) -> Result<BTreeMap<usize, Vec<Tree>>, OracleError> {
    let mut classes: BTreeMap<usize, Vec<Tree>> = BTreeMap::new();
    for t in enumerate_free_trees(n)? {
        let (_, k) = max_degree_count(&t);
        classes.entry(k).or_default().push(t);
    }
    Ok(classes)
}

/// Running minimum or maximum with the set of sequences attaining it.
#[derive(Debug, Clone)]
struct Extremum {
    goal: Goal,
    value: Option<IndexValue>,
    sequences: BTreeSet<DegreeSequence>,
    truncated: bool,
}

impl Extremum {
    fn new(goal: Goal) -> Self {
        Extremum {
            goal,
            value: None,
            sequences: BTreeSet::new(),
            truncated: false,
        }
    }

    fn offer(&mut self, value: &IndexValue, seq: &DegreeSequence) {
        let better = match &self.value {
            None => true,
            Some(best) => match self.goal {
                Goal::Min => value < best,
                Goal::Max => value > best,
            },
        };
        if better {
            self.value = Some(value.clone());
            self.sequences.clear();
            self.truncated = false;
        }
        if self.value.as_ref() == Some(value) && !self.sequences.contains(seq) {
            if self.sequences.len() < TIE_CAP {
                self.sequences.insert(seq.clone());
            } else {
                self.truncated = true;
            }
        }
    }
}

#[derive(Debug, Clone)]
struct ClassAccumulator {
    size: usize,
    sequences: BTreeSet<DegreeSequence>,
    identity_holds: bool,
    extrema: [Extremum; 4],
}

impl ClassAccumulator {
    fn new() -> Self {
        ClassAccumulator {
            size: 0,
            sequences: BTreeSet::new(),
            identity_holds: true,
            extrema: QUADRANTS.map(|(_, goal)| Extremum::new(goal)),
        }
    }

    fn add(&mut self, t: &Tree) {
        let seq = degree_sequence_of(t);
        let p1 = pi1(&seq);
        let p2 = pi2_vertex(&seq);
        if pi2_edge(t) != p2 {
            self.identity_holds = false;
        }
        for ((index, _), ext) in QUADRANTS.iter().zip(self.extrema.iter_mut()) {
            match index {
                Index::Pi1 => ext.offer(&p1, &seq),
                Index::Pi2 => ext.offer(&p2, &seq),
            }
        }
        if self.sequences.len() <= TIE_CAP {
            self.sequences.insert(seq);
        }
        self.size += 1;
    }

    fn finish(self, n: usize, k: usize) -> Result<ExtremalReport, OracleError> {
        if self.size == 0 {
            return Err(OracleError::EmptyClass { n, k });
        }
        let mut quadrants = Vec::with_capacity(4);
        for ((index, goal), ext) in QUADRANTS.into_iter().zip(self.extrema) {
            let spec = extremal::extremal_spec(n, k, index, goal)
                .map_err(|_| OracleError::Inadmissible { n, k })?;
            let oracle_value = ext.value.expect("non-empty class has an extremum");
            let oracle_sequences: Vec<DegreeSequence> = ext.sequences.into_iter().collect();
            let matches = oracle_value == spec.bound
                && !ext.truncated
                && oracle_sequences.len() == 1
                && oracle_sequences[0] == spec.sequence;
            quadrants.push(QuadrantReport {
                index,
                goal,
                oracle_value,
                oracle_sequences,
                sequences_truncated: ext.truncated,
                formula_value: spec.bound,
                formula_sequence: spec.sequence,
                matches,
            });
        }
        Ok(ExtremalReport {
            n,
            k,
            class_size: self.size,
            distinct_sequences: self.sequences.len(),
            pi2_identity_holds: self.identity_holds,
            quadrants,
        })
    }
}

/// Oracle against formula for one `(index, goal)` problem.
#[derive(Debug, Clone, Serialize)]
pub struct QuadrantReport {
    pub index: Index,
    pub goal: Goal,
    pub oracle_value: IndexValue,
    pub oracle_sequences: Vec<DegreeSequence>,
    pub sequences_truncated: bool,
    pub formula_value: IndexValue,
    pub formula_sequence: DegreeSequence,
    #[serde(rename = "match")]
    pub matches: bool,
}

/// Everything the oracle found for one class.
#[derive(Debug, Clone, Serialize)]
pub struct ExtremalReport {
    pub n: usize,
    pub k: usize,
    /// Non-isomorphic trees in the class.
    pub class_size: usize,
    /// Distinct degree sequences in the class (saturates just above
    /// [`TIE_CAP`]).
    pub distinct_sequences: usize,
    pub pi2_identity_holds: bool,
    /// In the order of [`QUADRANTS`].
    pub quadrants: Vec<QuadrantReport>,
}

impl ExtremalReport {
    pub fn all_match(&self) -> bool {
        self.pi2_identity_holds && self.quadrants.iter().all(|q| q.matches)
    }

    pub fn quadrant(&self, index: Index, goal: Goal) -> &QuadrantReport {
        self.quadrants
            .iter()
            .find(|q| q.index == index && q.goal == goal)
            .expect("all four quadrants are present")
    }
}

/// Reports for every admissible class on `n` vertices from a single pass
/// over the enumeration, sorted by `k`.
pub fn verify_order(n: usize) -> Result<Vec<ExtremalReport>, OracleError> {
    let mut classes: BTreeMap<usize, ClassAccumulator> = BTreeMap::new();
    for t in enumerate_free_trees(n)? {
        let (_, k) = max_degree_count(&t);
        classes
            .entry(k)
            .or_insert_with(ClassAccumulator::new)
            .add(&t);
    }
    let mut reports = Vec::new();
    for k in admissible_ks(n) {
        let acc = classes.remove(&k).unwrap_or_else(ClassAccumulator::new);
        reports.push(acc.finish(n, k)?);
    }
    // any k left over means the admissibility rule missed a class
    if let Some(&k) = classes.keys().next() {
        return Err(OracleError::Inadmissible { n, k });
    }
    Ok(reports)
}

pub fn verify_class(n: usize, k: usize) -> Result<ExtremalReport, OracleError> {
    if !is_admissible(n, k) {
        return Err(OracleError::Inadmissible { n, k });
    }
    let mut acc = ClassAccumulator::new();
    for t in enumerate_free_trees(n)? {
        if max_degree_count(&t).1 == k {
            acc.add(&t);
        }
    }
    acc.finish(n, k)
}

/// Aggregate of [`verify_order`] over `4..=n_max`.
#[derive(Debug, Clone, Serialize)]
pub struct GridReport {
    pub n_max: usize,
    pub all_match: bool,
    pub classes: Vec<ExtremalReport>,
}

/// A failing `(n, k, index, goal)` cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Failure {
    pub n: usize,
    pub k: usize,
    pub index: Index,
    pub goal: Goal,
}

impl GridReport {
    pub fn failures(&self) -> Vec<Failure> {
        self.classes
            .iter()
            .flat_map(|r| {
                r.quadrants
                    .iter()
                    .filter(|q| !q.matches || !r.pi2_identity_holds)
                    .map(|q| Failure {
                        n: r.n,
                        k: r.k,
                        index: q.index,
                        goal: q.goal,
                    })
            })
            .collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// `n,k,index,goal,oracle,formula,match`, one row per quadrant.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,k,index,goal,oracle,formula,match\n");
        for r in &self.classes {
            for q in &r.quadrants {
                let _ = writeln!(
                    out,
                    "{},{},{},{},{},{},{}",
                    r.n, r.k, q.index, q.goal, q.oracle_value, q.formula_value, q.matches
                );
            }
        }
        out
    }
}

/// Verifies every admissible class for `4 ≤ n ≤ n_max`. Distinct orders run
/// on the current rayon pool; output is ordered by `(n, k)` regardless.
pub fn verify_grid(n_max: usize) -> Result<GridReport, OracleError> {
    if n_max > MAX_ORDER {
        return Err(OracleError::OrderOutOfRange(n_max));
    }
    let per_order: Vec<Vec<ExtremalReport>> = (4..=n_max)
        .into_par_iter()
        .map(verify_order)
        .collect::<Result<_, _>>()?;
    let classes: Vec<ExtremalReport> = per_order.into_iter().flatten().collect();
    Ok(GridReport {
        n_max,
        all_match: classes.iter().all(ExtremalReport::all_match),
        classes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extremal::in_main_range;
    use num_bigint::BigUint;

    fn seq(v: &[u32]) -> DegreeSequence {
        DegreeSequence::new(v.to_vec()).unwrap()
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_free_trees(7).unwrap().count(), 11);
        assert_eq!(enumerate_free_trees(10).unwrap().count(), 106);
        assert_eq!(enumerate_free_trees(1).unwrap().count(), 1);
        assert_eq!(
            enumerate_free_trees(0).err(),
            Some(OracleError::OrderOutOfRange(0))
        );
        assert_eq!(
            enumerate_free_trees(21).err(),
            Some(OracleError::OrderOutOfRange(21))
        );
    }

    #[test]
    fn seven_vertex_forms_are_distinct() {
        let forms: BTreeSet<Vec<u8>> = enumerate_free_trees(7)
            .unwrap()
            .map(|t| canonical_form(&t))
            .collect();
        assert_eq!(forms.len(), 11);
    }

    #[test]
    fn classify_small_orders() {
        let eight = classify(8).unwrap();
        let keys: Vec<usize> = eight.keys().copied().collect();
        assert_eq!(keys, vec![1, 2, 3, 6]);
        assert_eq!(eight[&6], vec![tree_from_levels(&[0, 1, 2, 3, 4, 1, 2, 3])]);

        let four = classify(4).unwrap();
        assert_eq!(four[&2].len(), 1);
        assert_eq!(degree_sequence_of(&four[&2][0]), seq(&[2, 2, 1, 1]));
        assert_eq!(degree_sequence_of(&four[&1][0]), seq(&[3, 1, 1, 1]));

        for n in 1..=12 {
            let total: usize = classify(n).unwrap().values().map(Vec::len).sum();
            assert_eq!(total, enumerate_free_trees(n).unwrap().count());
        }
    }

    #[test]
    fn ten_three_is_forced() {
        let r = verify_class(10, 3).unwrap();
        let forced = seq(&[3, 3, 3, 2, 2, 1, 1, 1, 1, 1]);
        for goal in Goal::ALL {
            let q = r.quadrant(Index::Pi1, goal);
            assert_eq!(q.oracle_value, IndexValue::from(11664u64));
            assert_eq!(q.oracle_sequences, vec![forced.clone()]);
        }
        assert_eq!(r.distinct_sequences, 1);
        assert!(r.all_match());
    }

    #[test]
    fn eleven_two_min_pi1() {
        let r = verify_class(11, 2).unwrap();
        let q = r.quadrant(Index::Pi1, Goal::Min);
        assert_eq!(q.oracle_value, IndexValue::from(2500u64));
        assert_eq!(
            q.oracle_sequences,
            vec![seq(&[5, 5, 2, 1, 1, 1, 1, 1, 1, 1, 1])]
        );
        assert!(r.all_match());
    }

    #[test]
    fn path_classes() {
        for n in 4..=12 {
            let r = verify_class(n, n - 2).unwrap();
            assert_eq!(r.class_size, 1);
            let four = IndexValue::new(BigUint::from(4u32).pow(n as u32 - 2));
            for q in &r.quadrants {
                assert_eq!(q.oracle_value, four);
                assert!(q.matches);
            }
        }
    }

    #[test]
    fn inadmissible_class() {
        assert_eq!(
            verify_class(8, 4).err(),
            Some(OracleError::Inadmissible { n: 8, k: 4 })
        );
    }

    #[test]
    fn grid_small() {
        let g = verify_grid(4).unwrap();
        let cells: Vec<_> = g.classes.iter().map(|r| (r.n, r.k)).collect();
        assert_eq!(cells, vec![(4, 1), (4, 2)]);
        assert!(g.all_match);
        assert!(g.failures().is_empty());
    }

    #[test]
    fn grid_to_twelve_matches_and_is_sorted() {
        let g = verify_grid(12).unwrap();
        assert!(g.all_match, "{:?}", g.failures());
        let cells: Vec<_> = g.classes.iter().map(|r| (r.n, r.k)).collect();
        let mut sorted = cells.clone();
        sorted.sort();
        assert_eq!(cells, sorted);
        for r in &g.classes {
            assert!(in_main_range(r.n, r.k) || r.k == r.n - 2);
            for index in Index::ALL {
                assert!(
                    r.quadrant(index, Goal::Min).oracle_value
                        <= r.quadrant(index, Goal::Max).oracle_value
                );
            }
        }
    }

    #[test]
    fn csv_and_json_shapes() {
        let g = verify_grid(5).unwrap();
        let csv = g.to_csv();
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some("n,k,index,goal,oracle,formula,match"));
        assert_eq!(lines.next(), Some("4,1,pi1,min,9,9,true"));
        assert_eq!(csv.lines().count(), 1 + 4 * g.classes.len());

        let text = g.to_json();
        // struct field order is kept in the serialized text
        assert!(text.contains("{\n      \"n\": 4,\n      \"k\": 1,"));
        let json: serde_json::Value = serde_json::from_str(&text).unwrap();
        let first = &json["classes"][0];
        assert_eq!(first["n"], 4);
        assert_eq!(first["quadrants"][0]["oracle_value"]["exact"], "9");
        assert_eq!(first["quadrants"][0]["match"], true);
    }

    #[test]
    fn tie_cap_sets_overflow() {
        let mut e = Extremum::new(Goal::Min);
        let v = IndexValue::from(1u64);
        for i in 0..(TIE_CAP as u32 + 3) {
            e.offer(&v, &seq(&[i + 2, 1]));
        }
        assert_eq!(e.sequences.len(), TIE_CAP);
        assert!(e.truncated);
        e.offer(&IndexValue::from(0u64), &seq(&[1, 1]));
        assert!(!e.truncated);
        assert_eq!(e.sequences.len(), 1);
    }
}
