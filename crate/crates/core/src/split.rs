//! Elementary split matroids given by a hypergraph of ranked edges.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::matroid::Matroid;
use crate::set::ElementSet;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitEdge {
    #[serde(rename = "set")]
    pub elements: ElementSet,
    pub rank: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitHypergraph {
    pub d: usize,
    pub n: usize,
    pub edges: Vec<SplitEdge>,
}

/// One of the defining inequalities of an elementary split hypergraph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SplitCondition {
    /// `|H_i ∩ H_j| <= r_i + r_j - n` for `i != j`.
    PairwiseIntersection,
    /// `|[d] \ H_i| >= n - r_i`.
    ComplementSize,
    /// `r_i <= n - 1`.
    RankBelowN,
    /// `|H_i| >= r_i + 1`.
    EdgeSize,
    /// Edges must be subsets of `1..=d` with positive rank, and `d >= n`.
    WellFormed,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub condition: SplitCondition,
    /// Indices (0-based) of the offending edges.
    pub edges: Vec<usize>,
    pub detail: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violates(&self, condition: SplitCondition) -> bool {
        self.violations.iter().any(|v| v.condition == condition)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .violations
            .iter()
            .map(|v| format!("{:?} on edges {:?}: {}", v.condition, v.edges, v.detail))
            .collect();
        f.write_str(&parts.join("; "))
    }
}

impl SplitHypergraph {
    pub fn new(d: usize, n: usize, edges: impl IntoIterator<Item = (ElementSet, usize)>) -> Self {
        SplitHypergraph {
            d,
            n,
            edges: edges
                .into_iter()
                .map(|(elements, rank)| SplitEdge { elements, rank })
                .collect(),
        }
    }

    /// Checks every condition and reports all violations.
    pub fn validate(&self) -> ValidationReport {
        let mut violations = Vec::new();
        let n = self.n as i64;
        let ground = if self.d <= crate::set::MAX_ELEMENTS {
            ElementSet::full(self.d)
        } else {
            violations.push(Violation {
                condition: SplitCondition::WellFormed,
                edges: vec![],
                detail: format!("ground set of size {} is too large", self.d),
            });
            ElementSet::full(crate::set::MAX_ELEMENTS)
        };
        if self.d < self.n {
            violations.push(Violation {
                condition: SplitCondition::WellFormed,
                edges: vec![],
                detail: format!("d = {} is smaller than n = {}", self.d, self.n),
            });
        }
        for (i, e) in self.edges.iter().enumerate() {
            if !e.elements.is_subset(ground) || e.rank == 0 {
                violations.push(Violation {
                    condition: SplitCondition::WellFormed,
                    edges: vec![i],
                    detail: format!("edge {} with rank {} is malformed", e.elements, e.rank),
                });
            }
        }
        for (i, a) in self.edges.iter().enumerate() {
            for (j, b) in self.edges.iter().enumerate().skip(i + 1) {
                let meet = (a.elements & b.elements).len() as i64;
                let bound = a.rank as i64 + b.rank as i64 - n;
                if meet > bound {
                    violations.push(Violation {
                        condition: SplitCondition::PairwiseIntersection,
                        edges: vec![i, j],
                        detail: format!("|H_i ∩ H_j| = {meet} > {bound}"),
                    });
                }
            }
        }
        for (i, e) in self.edges.iter().enumerate() {
            let outside = self.d as i64 - e.elements.len() as i64;
            if outside < n - e.rank as i64 {
                violations.push(Violation {
                    condition: SplitCondition::ComplementSize,
                    edges: vec![i],
                    detail: format!("|[d] \\ H_i| = {outside} < {}", n - e.rank as i64),
                });
            }
            if e.rank as i64 > n - 1 {
                violations.push(Violation {
                    condition: SplitCondition::RankBelowN,
                    edges: vec![i],
                    detail: format!("r_i = {} > {}", e.rank, n - 1),
                });
            }
            if e.elements.len() < e.rank + 1 {
                violations.push(Violation {
                    condition: SplitCondition::EdgeSize,
                    edges: vec![i],
                    detail: format!("|H_i| = {} < {}", e.elements.len(), e.rank + 1),
                });
            }
        }
        ValidationReport { violations }
    }

    /// `min{n, |F|, min_i |F \ H_i| + r_i}`.
    pub fn rank_formula(&self, f: ElementSet) -> usize {
        self.edges
            .iter()
            .map(|e| (f - e.elements).len() + e.rank)
            .fold(self.n.min(f.len()), usize::min)
    }

    /// Independence test `|X| <= n` and `|X ∩ H_i| <= r_i` for all edges.
    pub fn is_independent(&self, x: ElementSet) -> bool {
        x.len() <= self.n
            && self
                .edges
                .iter()
                .all(|e| (x & e.elements).len() <= e.rank)
    }

    /// `Σ (n - r_i)(|H_i| - r_i)`.
    pub fn codimension_sum(&self) -> i64 {
        self.edges
            .iter()
            .map(|e| (self.n as i64 - e.rank as i64) * (e.elements.len() as i64 - e.rank as i64))
            .sum()
    }
}

/// Reads a matroid's subspaces back as a hypergraph and returns it when the
/// matroid is exactly the elementary split matroid of that hypergraph.
pub fn recognize_split(m: &Matroid) -> Option<SplitHypergraph> {
    if let Some(h) = m.split_hypergraph() {
        return Some(h.clone());
    }
    if m.ground() != ElementSet::full(m.size()) {
        return None;
    }
    let h = SplitHypergraph::new(
        m.size(),
        m.rank(),
        m.subspaces().into_iter().map(|l| (l.points, l.rank)),
    );
    if !h.validate().is_valid() {
        return None;
    }
    m.ground()
        .subsets()
        .all(|s| m.r(s) == h.rank_formula(s))
        .then_some(h)
}

/// Every point of degree at most two is 2-simple: for degree-two points the
/// two subspaces together have full rank.
pub fn all_low_degree_points_two_simple(m: &Matroid) -> bool {
    let subspaces = m.subspaces();
    m.ground().iter().all(|p| {
        let on: Vec<_> = subspaces.iter().filter(|l| l.contains(p)).collect();
        match on.as_slice() {
            [a, b] => m.r(a.points | b.points) == m.rank(),
            _ => true,
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[usize]) -> ElementSet {
        v.iter().copied().collect()
    }

    fn rank6() -> SplitHypergraph {
        SplitHypergraph::new(
            12,
            6,
            [
                (set(&[1, 2, 3, 4, 5, 6]), 5),
                (set(&[7, 8, 9, 10, 11, 12]), 5),
                (set(&[1, 2, 7, 8]), 3),
                (set(&[3, 4, 9, 10]), 3),
                (set(&[5, 6, 11, 12]), 3),
            ],
        )
    }

    #[test]
    fn quadrilateral_hypergraph_is_valid() {
        let h = SplitHypergraph::new(
            6,
            3,
            [set(&[1, 2, 3]), set(&[1, 5, 6]), set(&[3, 4, 5]), set(&[2, 4, 6])]
                .map(|s| (s, 2)),
        );
        assert!(h.validate().is_valid());
    }

    #[test]
    fn rank_six_example_is_valid_and_two_simple() {
        let h = rank6();
        assert!(h.validate().is_valid());
        let m = Matroid::from_split(&h).unwrap();
        assert!(all_low_degree_points_two_simple(&m));
        for (i, a) in h.edges.iter().enumerate() {
            for b in &h.edges[i + 1..] {
                assert_eq!(m.r(a.elements | b.elements), 6);
            }
        }
    }

    #[test]
    fn rank_at_least_n_is_reported() {
        let h = SplitHypergraph::new(3, 3, [(set(&[1, 2, 3]), 3)]);
        let report = h.validate();
        assert!(report.violates(SplitCondition::RankBelowN));
        assert!(matches!(
            Matroid::from_split(&h),
            Err(crate::Error::InvalidHypergraph(_))
        ));
    }

    #[test]
    fn every_condition_is_detected_individually() {
        // pairwise: two planes of a rank-4 paving matroid sharing three points
        let h = SplitHypergraph::new(8, 4, [(set(&[1, 2, 3, 4]), 3), (set(&[2, 3, 4, 5]), 3)]);
        assert_eq!(
            h.validate().violations.iter().map(|v| v.condition).collect::<Vec<_>>(),
            vec![SplitCondition::PairwiseIntersection]
        );
        // complement: a rank-1 edge covering almost everything
        let h = SplitHypergraph::new(4, 3, [(set(&[1, 2, 3]), 1)]);
        assert_eq!(
            h.validate().violations.iter().map(|v| v.condition).collect::<Vec<_>>(),
            vec![SplitCondition::ComplementSize]
        );
        // edge size: an independent "edge"
        let h = SplitHypergraph::new(6, 3, [(set(&[1, 2]), 2)]);
        assert_eq!(
            h.validate().violations.iter().map(|v| v.condition).collect::<Vec<_>>(),
            vec![SplitCondition::EdgeSize]
        );
    }

    #[test]
    fn paving_example_rank() {
        let h = SplitHypergraph::new(
            8,
            4,
            [
                set(&[1, 2, 3, 4]),
                set(&[3, 4, 5, 6]),
                set(&[5, 6, 7, 8]),
                set(&[7, 8, 1, 2]),
                set(&[1, 2, 5, 6]),
            ]
            .map(|s| (s, 3)),
        );
        assert!(h.validate().is_valid());
        assert_eq!(h.rank_formula(set(&[1, 2, 3, 4])), 3);
    }

    #[test]
    fn empty_hypergraph_is_uniform() {
        let h = SplitHypergraph::new(5, 2, []);
        let m = Matroid::from_split(&h).unwrap();
        assert!(m.subspaces().is_empty());
        assert_eq!(m.circuits().len(), 10);
        assert!(all_low_degree_points_two_simple(&m));
    }

    #[test]
    fn recognizes_paving_built_from_circuits() {
        let m = Matroid::paving(
            6,
            3,
            &[set(&[1, 2, 3]), set(&[1, 5, 6]), set(&[3, 4, 5]), set(&[2, 4, 6])],
        )
        .unwrap();
        let h = recognize_split(&m).unwrap();
        assert_eq!(h.edges.len(), 4);
        // a parallel pair on a line: the rank-1 and rank-2 subspaces overlap too much
        let q = |n: i64| num_rational::BigRational::from_integer(n.into());
        let vectors = [[1, 0, 0], [2, 0, 0], [0, 1, 0], [1, 1, 0], [0, 0, 1]]
            .iter()
            .map(|v| v.iter().map(|&x| q(x)).collect())
            .collect();
        let double = Matroid::from_vectors(crate::matroid::VectorConfig { n: 3, vectors }).unwrap();
        assert!(recognize_split(&double).is_none());
    }
}
