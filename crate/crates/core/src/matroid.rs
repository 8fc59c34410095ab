//! Matroids on small labelled ground sets.
//!
//! A [`Matroid`] is a ground set (a subset of `1..=32`) plus a rank oracle.
//! The oracle comes from one of three base representations (complete circuit
//! list, elementary split hypergraph, exact rational vectors) or from a minor
//! or direct sum of other matroids. Minors keep the original element labels.
//!
//! Everything here is exponential in the ground-set size. Base matroids on up
//! to [`RANK_TABLE_LIMIT`] labels cache a rank table over all subsets, which
//! keeps the enumeration-heavy operations (subspaces, orderings, expected
//! codimension) comfortable up to roughly sixteen elements.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock};

use num_rational::BigRational;
use serde::Serialize;

use crate::error::{CircuitAxiom, Error, Result};
use crate::linalg;
use crate::set::{ElementSet, MAX_ELEMENTS};
use crate::split::SplitHypergraph;

/// Largest label for which a full rank table is cached.
pub const RANK_TABLE_LIMIT: usize = 22;

/// Equivalence class of small circuits sharing a closure.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, serde::Deserialize)]
pub struct Subspace {
    pub points: ElementSet,
    pub rank: usize,
}

impl Subspace {
    pub fn contains(&self, p: usize) -> bool {
        self.points.contains(p)
    }
}

/// Exact rational vectors, one per element `1..=d`, all of length `n`.
#[derive(Debug, Clone, PartialEq)]
pub struct VectorConfig {
    pub n: usize,
    pub vectors: Vec<Vec<BigRational>>,
}

#[derive(Debug, Clone)]
enum Backend {
    Circuits(Arc<Vec<ElementSet>>),
    Split(Arc<SplitHypergraph>),
    Vectors(Arc<VectorConfig>),
    Minor {
        parent: Arc<Matroid>,
        contracted: ElementSet,
    },
    DirectSum {
        left: Arc<Matroid>,
        right: Arc<Matroid>,
        shift: usize,
    },
}

#[derive(Debug, Clone)]
pub struct Matroid {
    ground: ElementSet,
    rank: usize,
    backend: Backend,
    table: OnceLock<Option<Arc<Vec<u8>>>>,
}

/// Which representation answers rank queries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BackendKind {
    CircuitList,
    SplitHypergraph,
    VectorConfig,
    Minor,
    DirectSum,
}

fn check_ground_size(d: usize) -> Result<()> {
    if d == 0 {
        return Err(Error::EmptyGroundSet);
    }
    if d > MAX_ELEMENTS {
        return Err(Error::GroundSetTooLarge {
            got: d,
            max: MAX_ELEMENTS,
        });
    }
    Ok(())
}

/// Checks the three circuit axioms on a family over `1..=d`.
pub fn check_circuit_axioms(circuits: &[ElementSet]) -> Result<()> {
    if circuits.iter().any(|c| c.is_empty()) {
        return Err(Error::AxiomViolation {
            axiom: CircuitAxiom::NonEmpty,
            witnesses: vec![ElementSet::EMPTY],
        });
    }
    for (i, &a) in circuits.iter().enumerate() {
        for &b in &circuits[i + 1..] {
            if a.is_subset(b) || b.is_subset(a) {
                return Err(Error::AxiomViolation {
                    axiom: CircuitAxiom::Incomparable,
                    witnesses: vec![a, b],
                });
            }
        }
    }
    for (i, &a) in circuits.iter().enumerate() {
        for &b in &circuits[i + 1..] {
            for e in a & b {
                let target = (a | b).without(e);
                if !circuits.iter().any(|c| c.is_subset(target)) {
                    return Err(Error::AxiomViolation {
                        axiom: CircuitAxiom::Elimination,
                        witnesses: vec![a, b, ElementSet::singleton(e)],
                    });
                }
            }
        }
    }
    Ok(())
}

impl Matroid {
    /// Matroid on `1..=d` from its complete list of circuits.
    pub fn from_circuits(d: usize, circuits: &[ElementSet]) -> Result<Matroid> {
        check_ground_size(d)?;
        let ground = ElementSet::full(d);
        for c in circuits {
            if let Some(e) = c.iter().find(|&e| !ground.contains(e)) {
                return Err(Error::OutOfRange { element: e });
            }
        }
        let mut sorted = circuits.to_vec();
        sorted.sort_by(|a, b| a.len().cmp(&b.len()).then(a.lex_cmp(*b)));
        check_circuit_axioms(&sorted)?;
        // greedy maximal circuit-free set
        let mut basis = ElementSet::EMPTY;
        for e in ground {
            let candidate = basis.with(e);
            if !sorted.iter().any(|c| c.is_subset(candidate)) {
                basis = candidate;
            }
        }
        Ok(Matroid::with_backend(
            ground,
            basis.len(),
            Backend::Circuits(Arc::new(sorted)),
        ))
    }

    /// Paving matroid of rank `n` on `1..=d` from its dependent hyperplanes.
    ///
    /// The complete circuit list is generated: every `n`-subset of a listed
    /// hyperplane, plus every `(n+1)`-set containing none of those.
    pub fn paving(d: usize, n: usize, hyperplanes: &[ElementSet]) -> Result<Matroid> {
        check_ground_size(d)?;
        let ground = ElementSet::full(d);
        for h in hyperplanes {
            if let Some(e) = h.iter().find(|&e| !ground.contains(e)) {
                return Err(Error::OutOfRange { element: e });
            }
        }
        let mut small: Vec<ElementSet> = Vec::new();
        for h in hyperplanes {
            for c in h.combinations(n) {
                if !small.contains(&c) {
                    small.push(c);
                }
            }
        }
        let mut circuits = small.clone();
        if n < d {
            for c in ground.combinations(n + 1) {
                if !small.iter().any(|s| s.is_subset(c)) {
                    circuits.push(c);
                }
            }
        }
        Matroid::from_circuits(d, &circuits)
    }

    /// Uniform matroid `U_{n,d}`.
    pub fn uniform(n: usize, d: usize) -> Result<Matroid> {
        Matroid::from_split(&SplitHypergraph {
            d,
            n,
            edges: Vec::new(),
        })
    }

    /// Elementary split matroid of a validated hypergraph.
    pub fn from_split(h: &SplitHypergraph) -> Result<Matroid> {
        check_ground_size(h.d)?;
        let report = h.validate();
        if !report.is_valid() {
            return Err(Error::InvalidHypergraph(report));
        }
        Ok(Matroid::with_backend(
            ElementSet::full(h.d),
            h.n,
            Backend::Split(Arc::new(h.clone())),
        ))
    }

    /// Matroid of the columns `vectors[0..d]`, labelled `1..=d`.
    pub fn from_vectors(config: VectorConfig) -> Result<Matroid> {
        let d = config.vectors.len();
        check_ground_size(d)?;
        if let Some(v) = config.vectors.iter().find(|v| v.len() != config.n) {
            return Err(Error::DimensionMismatch {
                expected: config.n,
                got: v.len(),
            });
        }
        let cols: Vec<&[BigRational]> = config.vectors.iter().map(Vec::as_slice).collect();
        let rank = linalg::column_rank(config.n, &cols);
        Ok(Matroid::with_backend(
            ElementSet::full(d),
            rank,
            Backend::Vectors(Arc::new(config)),
        ))
    }

    fn with_backend(ground: ElementSet, rank: usize, backend: Backend) -> Matroid {
        Matroid {
            ground,
            rank,
            backend,
            table: OnceLock::new(),
        }
    }

    pub fn ground(&self) -> ElementSet {
        self.ground
    }

    /// Number of elements.
    pub fn size(&self) -> usize {
        self.ground.len()
    }

    /// Rank of the whole matroid.
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn backend_kind(&self) -> BackendKind {
        match self.backend {
            Backend::Circuits(_) => BackendKind::CircuitList,
            Backend::Split(_) => BackendKind::SplitHypergraph,
            Backend::Vectors(_) => BackendKind::VectorConfig,
            Backend::Minor { .. } => BackendKind::Minor,
            Backend::DirectSum { .. } => BackendKind::DirectSum,
        }
    }

    /// The defining hypergraph, when this matroid was built from one.
    pub fn split_hypergraph(&self) -> Option<&SplitHypergraph> {
        match &self.backend {
            Backend::Split(h) => Some(h),
            _ => None,
        }
    }

    pub fn vector_config(&self) -> Option<&VectorConfig> {
        match &self.backend {
            Backend::Vectors(v) => Some(v),
            _ => None,
        }
    }

    pub fn check_subset(&self, s: ElementSet) -> Result<()> {
        match (s - self.ground).min() {
            Some(element) => Err(Error::OutOfRange { element }),
            None => Ok(()),
        }
    }

    pub fn check_element(&self, p: usize) -> Result<()> {
        if self.ground.contains(p) {
            Ok(())
        } else {
            Err(Error::OutOfRange { element: p })
        }
    }

    /// Rank of `s`, which must lie inside the ground set.
    pub fn rank_of(&self, s: ElementSet) -> Result<usize> {
        self.check_subset(s)?;
        Ok(self.r(s))
    }

    /// Unchecked rank; callers guarantee `s ⊆ ground`.
    pub(crate) fn r(&self, s: ElementSet) -> usize {
        if let Some(table) = self.rank_table() {
            return table[s.bits() as usize] as usize;
        }
        self.compute_rank(s)
    }

    fn rank_table(&self) -> Option<&Arc<Vec<u8>>> {
        self.table
            .get_or_init(|| {
                let base = matches!(
                    self.backend,
                    Backend::Circuits(_) | Backend::Split(_) | Backend::Vectors(_)
                );
                let top = self.ground.max().unwrap_or(0);
                (base && top <= RANK_TABLE_LIMIT).then(|| Arc::new(self.build_table()))
            })
            .as_ref()
    }

    fn build_table(&self) -> Vec<u8> {
        let ground = self.ground;
        let size = 1usize << ground.max().unwrap_or(0);
        let mut table = vec![0u8; size];
        match &self.backend {
            Backend::Circuits(circuits) => {
                let mut independent = vec![false; size];
                let mut is_circuit = vec![false; size];
                for c in circuits.iter() {
                    is_circuit[c.bits() as usize] = true;
                }
                for s in ground.subsets() {
                    let idx = s.bits() as usize;
                    if s.is_empty() {
                        independent[idx] = true;
                        continue;
                    }
                    let ind = !is_circuit[idx]
                        && s.iter().all(|e| independent[s.without(e).bits() as usize]);
                    independent[idx] = ind;
                    table[idx] = if ind {
                        s.len() as u8
                    } else {
                        s.iter()
                            .map(|e| table[s.without(e).bits() as usize])
                            .max()
                            .unwrap_or(0)
                    };
                }
            }
            _ => {
                for s in ground.subsets() {
                    table[s.bits() as usize] = self.compute_rank(s) as u8;
                }
            }
        }
        table
    }

    fn compute_rank(&self, s: ElementSet) -> usize {
        match &self.backend {
            Backend::Circuits(circuits) => {
                let mut independent = ElementSet::EMPTY;
                for e in s {
                    let candidate = independent.with(e);
                    if !circuits.iter().any(|c| c.is_subset(candidate)) {
                        independent = candidate;
                    }
                }
                independent.len()
            }
            Backend::Split(h) => h.rank_formula(s),
            Backend::Vectors(v) => {
                let cols: Vec<&[BigRational]> =
                    s.iter().map(|e| v.vectors[e - 1].as_slice()).collect();
                linalg::column_rank(v.n, &cols)
            }
            Backend::Minor { parent, contracted } => {
                parent.r(s | *contracted) - parent.r(*contracted)
            }
            Backend::DirectSum { left, right, shift } => {
                let l = s & left.ground;
                let shifted = ElementSet::from_bits((s - left.ground).bits() >> shift);
                left.r(l) + right.r(shifted)
            }
        }
    }

    pub fn is_independent(&self, s: ElementSet) -> bool {
        self.r(s) == s.len()
    }

    pub fn closure(&self, s: ElementSet) -> Result<ElementSet> {
        self.check_subset(s)?;
        Ok(self.closure_unchecked(s))
    }

    pub(crate) fn closure_unchecked(&self, s: ElementSet) -> ElementSet {
        let r = self.r(s);
        self.ground
            .iter()
            .filter(|&x| s.contains(x) || self.r(s.with(x)) == r)
            .collect()
    }

    fn is_circuit_set(&self, x: ElementSet) -> bool {
        let k = x.len();
        k > 0 && self.r(x) == k - 1 && x.iter().all(|e| self.r(x.without(e)) == k - 1)
    }

    /// All circuits, ordered by size then lexicographically.
    pub fn circuits(&self) -> Vec<ElementSet> {
        if let Backend::Circuits(c) = &self.backend {
            return c.as_ref().clone();
        }
        let mut out = Vec::new();
        for k in 1..=(self.rank + 1).min(self.size()) {
            out.extend(self.ground.combinations(k).filter(|&x| self.is_circuit_set(x)));
        }
        out
    }

    /// Bases in lexicographic order.
    pub fn bases(&self) -> Vec<ElementSet> {
        self.ground
            .combinations(self.rank)
            .filter(|&b| self.r(b) == self.rank)
            .collect()
    }

    /// Subspaces of the submatroid on `within`, in canonical order.
    ///
    /// The submatroid keeps the ambient rank `n`: its circuits of size at most
    /// `n` are grouped by their closure inside `within`. A point belongs to a
    /// subspace when it lies on one of the class's circuits, so the stored
    /// point set is the union of those circuits.
    pub fn subspaces_within(&self, within: ElementSet) -> Vec<Subspace> {
        let top = self.rank;
        let mut classes: HashMap<ElementSet, Subspace> = HashMap::new();
        for k in 1..=top.min(within.len()) {
            for c in within.combinations(k) {
                if !self.is_circuit_set(c) {
                    continue;
                }
                let key = self.closure_unchecked(c) & within;
                classes
                    .entry(key)
                    .and_modify(|s| s.points |= c)
                    .or_insert(Subspace {
                        points: c,
                        rank: k - 1,
                    });
            }
        }
        let mut out: Vec<Subspace> = classes.into_values().collect();
        out.sort_by(|a, b| a.points.lex_cmp(b.points));
        out
    }

    pub fn subspaces(&self) -> Vec<Subspace> {
        self.subspaces_within(self.ground)
    }

    pub fn point_subspaces(&self, p: usize) -> Result<Vec<Subspace>> {
        self.check_element(p)?;
        Ok(self
            .subspaces()
            .into_iter()
            .filter(|l| l.contains(p))
            .collect())
    }

    pub fn degree(&self, p: usize) -> Result<usize> {
        Ok(self.point_subspaces(p)?.len())
    }

    /// Restriction `M|S`, labels preserved.
    pub fn restriction(&self, s: ElementSet) -> Result<Matroid> {
        self.check_subset(s)?;
        Ok(Matroid::with_backend(
            s,
            self.r(s),
            Backend::Minor {
                parent: Arc::new(self.clone()),
                contracted: ElementSet::EMPTY,
            },
        ))
    }

    /// Deletion `M \ S`.
    pub fn deletion(&self, s: ElementSet) -> Result<Matroid> {
        self.check_subset(s)?;
        self.restriction(self.ground - s)
    }

    /// Contraction `M / S` by an independent set.
    pub fn contraction(&self, s: ElementSet) -> Result<Matroid> {
        self.check_subset(s)?;
        if !self.is_independent(s) {
            return Err(Error::NonIndependentContraction { set: s });
        }
        Ok(Matroid::with_backend(
            self.ground - s,
            self.rank - s.len(),
            Backend::Minor {
                parent: Arc::new(self.clone()),
                contracted: s,
            },
        ))
    }

    /// Direct sum; elements of `other` are relabelled by adding the largest
    /// label of `self`.
    pub fn direct_sum(&self, other: &Matroid) -> Result<Matroid> {
        let shift = self.ground.max().unwrap_or(0);
        let top = shift + other.ground.max().unwrap_or(0);
        if top > MAX_ELEMENTS {
            return Err(Error::GroundSetTooLarge {
                got: top,
                max: MAX_ELEMENTS,
            });
        }
        let shifted = ElementSet::from_bits(other.ground.bits() << shift);
        Ok(Matroid::with_backend(
            self.ground | shifted,
            self.rank + other.rank,
            Backend::DirectSum {
                left: Arc::new(self.clone()),
                right: Arc::new(other.clone()),
                shift,
            },
        ))
    }

    /// Connected when every pair of elements lies on a common circuit.
    pub fn is_connected(&self) -> bool {
        let elements = self.ground.to_vec();
        if elements.len() <= 1 {
            return true;
        }
        let mut component: HashMap<usize, usize> =
            elements.iter().map(|&e| (e, e)).collect();
        fn find(component: &mut HashMap<usize, usize>, e: usize) -> usize {
            let parent = component[&e];
            if parent == e {
                return e;
            }
            let root = find(component, parent);
            component.insert(e, root);
            root
        }
        for c in self.circuits() {
            let mut it = c.iter();
            let Some(first) = it.next() else { continue };
            let root = find(&mut component, first);
            for e in it {
                let other = find(&mut component, e);
                if other != root {
                    component.insert(other, root);
                }
            }
        }
        let root = find(&mut component, elements[0]);
        elements.iter().all(|&e| find(&mut component, e) == root)
    }

    /// `true` when every circuit has at least `rank` elements.
    pub fn is_paving(&self) -> bool {
        self.paving_witness().is_none()
    }

    pub(crate) fn paving_witness(&self) -> Option<ElementSet> {
        self.circuits().into_iter().find(|c| c.len() < self.rank)
    }

    /// `true` when the two matroids have the same ground set and rank function.
    pub fn same_as(&self, other: &Matroid) -> bool {
        self.ground == other.ground
            && self.rank == other.rank
            && self.ground.subsets().all(|s| self.r(s) == other.r(s))
    }
}

/// Connectivity for an arbitrary rank function on `ground`: no nonempty
/// proper separator `A` with `r(A) + r(E \ A) = r(E)`.
pub fn is_connected_by_rank(ground: ElementSet, rank: impl Fn(ElementSet) -> usize) -> bool {
    let Some(first) = ground.min() else {
        return true;
    };
    let total = rank(ground);
    let rest = ground.without(first);
    rest.subsets().all(|b| {
        let a = b.with(first);
        a == ground || rank(a) + rank(ground - a) != total
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[usize]) -> ElementSet {
        v.iter().copied().collect()
    }

    fn quadrilateral() -> Matroid {
        Matroid::paving(
            6,
            3,
            &[set(&[1, 2, 3]), set(&[1, 5, 6]), set(&[3, 4, 5]), set(&[2, 4, 6])],
        )
        .unwrap()
    }

    #[test]
    fn uniform_from_single_circuit() {
        let m = Matroid::from_circuits(3, &[set(&[1, 2, 3])]).unwrap();
        assert_eq!(m.rank(), 2);
        assert_eq!(m.rank_of(set(&[1, 2, 3])).unwrap(), 2);
        assert_eq!(m.rank_of(ElementSet::EMPTY).unwrap(), 0);
        assert_eq!(m.closure(set(&[1])).unwrap(), set(&[1]));
        assert!(m.subspaces().is_empty());
    }

    #[test]
    fn parallel_class_is_valid() {
        let m = Matroid::from_circuits(4, &[set(&[1, 2]), set(&[1, 3]), set(&[2, 3])]).unwrap();
        assert_eq!(m.rank(), 2);
        assert_eq!(m.rank_of(set(&[1, 2, 3])).unwrap(), 1);
    }

    #[test]
    fn containment_is_rejected() {
        let err = Matroid::from_circuits(3, &[set(&[1, 2]), set(&[1, 2, 3])]).unwrap_err();
        assert!(matches!(
            err,
            Error::AxiomViolation {
                axiom: CircuitAxiom::Incomparable,
                ..
            }
        ));
    }

    #[test]
    fn elimination_failure_is_rejected() {
        // {1,2} and {2,3} share 2 but nothing fits inside {1,3}
        let err = Matroid::from_circuits(3, &[set(&[1, 2]), set(&[2, 3])]).unwrap_err();
        assert!(matches!(
            err,
            Error::AxiomViolation {
                axiom: CircuitAxiom::Elimination,
                ..
            }
        ));
        assert!(matches!(
            Matroid::from_circuits(2, &[ElementSet::EMPTY]),
            Err(Error::AxiomViolation {
                axiom: CircuitAxiom::NonEmpty,
                ..
            })
        ));
        assert!(matches!(
            Matroid::from_circuits(0, &[]),
            Err(Error::EmptyGroundSet)
        ));
    }

    #[test]
    fn quadrilateral_subspaces_and_degrees() {
        let m = quadrilateral();
        assert_eq!(m.rank_of(set(&[1, 2, 3])).unwrap(), 2);
        assert_eq!(m.closure(set(&[1, 2])).unwrap(), set(&[1, 2, 3]));
        let subspaces = m.subspaces();
        let points: Vec<_> = subspaces.iter().map(|s| s.points).collect();
        assert_eq!(
            points,
            vec![set(&[1, 2, 3]), set(&[1, 5, 6]), set(&[2, 4, 6]), set(&[3, 4, 5])]
        );
        assert!(subspaces.iter().all(|s| s.rank == 2));
        for p in 1..=6 {
            assert_eq!(m.degree(p).unwrap(), 2);
        }
        assert!(m.is_connected());
        assert!(m.is_paving());
    }

    #[test]
    fn concurrent_lines_degree() {
        let m = Matroid::paving(7, 3, &[set(&[1, 2, 7]), set(&[3, 4, 7]), set(&[5, 6, 7])]).unwrap();
        assert_eq!(m.degree(7).unwrap(), 3);
        assert_eq!(m.degree(1).unwrap(), 1);
        assert!(matches!(m.degree(8), Err(Error::OutOfRange { element: 8 })));
    }

    #[test]
    fn minors() {
        let m = quadrilateral();
        let r = m.restriction(set(&[1, 2, 3])).unwrap();
        assert_eq!(r.rank(), 2);
        assert_eq!(r.circuits(), vec![set(&[1, 2, 3])]);

        let u23 = Matroid::uniform(2, 3).unwrap();
        let c = u23.contraction(set(&[1])).unwrap();
        assert_eq!(c.rank(), 1);
        assert_eq!(c.ground(), set(&[2, 3]));
        assert_eq!(c.circuits(), vec![set(&[2, 3])]);
        assert!(u23.deletion(ElementSet::EMPTY).unwrap().same_as(&u23));

        let err = m.contraction(set(&[1, 2, 3])).unwrap_err();
        assert!(matches!(err, Error::NonIndependentContraction { .. }));
    }

    #[test]
    fn direct_sum_of_parallel_pairs() {
        let u12 = Matroid::uniform(1, 2).unwrap();
        let sum = u12.direct_sum(&u12).unwrap();
        assert_eq!(sum.rank(), 2);
        assert_eq!(sum.size(), 4);
        assert_eq!(sum.circuits(), vec![set(&[1, 2]), set(&[3, 4])]);
        assert!(!sum.is_connected());

        let lp = Matroid::from_circuits(1, &[set(&[1])]).unwrap();
        assert!(!lp.direct_sum(&quadrilateral()).unwrap().is_connected());
    }

    #[test]
    fn connectivity_routes_agree() {
        let m = quadrilateral();
        assert_eq!(
            m.is_connected(),
            is_connected_by_rank(m.ground(), |s| m.r(s))
        );
        let u12 = Matroid::uniform(1, 2).unwrap();
        let sum = u12.direct_sum(&u12).unwrap();
        assert!(!is_connected_by_rank(sum.ground(), |s| sum.r(s)));
    }

    #[test]
    fn vector_backend_matches_circuits() {
        let q = |n: i64| BigRational::from_integer(n.into());
        let vectors = vec![
            vec![q(1), q(0), q(0)],
            vec![q(0), q(1), q(0)],
            vec![q(1), q(1), q(0)],
            vec![q(0), q(0), q(1)],
        ];
        let m = Matroid::from_vectors(VectorConfig { n: 3, vectors }).unwrap();
        let c = Matroid::from_circuits(4, &[set(&[1, 2, 3])]).unwrap();
        assert!(m.same_as(&c));
    }
}
