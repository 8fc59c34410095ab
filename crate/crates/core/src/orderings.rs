//! Orderings of the ground set, their types, and the search for inductively
//! connected orderings.

use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matroid::{Matroid, Subspace};
use crate::set::ElementSet;

/// A permutation `(p_1, ..., p_d)` of a ground set.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Ordering(Vec<usize>);

impl Ordering {
    /// Checks that `perm` lists every element of `ground` exactly once.
    pub fn new(perm: Vec<usize>, ground: ElementSet) -> Result<Ordering> {
        let mut seen = ElementSet::EMPTY;
        for &p in &perm {
            if !ground.contains(p) {
                return Err(Error::InvalidOrdering(format!("{p} is not in the ground set {ground}")));
            }
            if seen.contains(p) {
                return Err(Error::InvalidOrdering(format!("{p} appears twice")));
            }
            seen = seen.with(p);
        }
        if seen != ground {
            return Err(Error::InvalidOrdering(format!(
                "missing elements {}",
                ground - seen
            )));
        }
        Ok(Ordering(perm))
    }

    pub fn for_matroid(perm: Vec<usize>, m: &Matroid) -> Result<Ordering> {
        Ordering::new(perm, m.ground())
    }

    /// Parses a comma-separated list such as `1,2,5,3`.
    pub fn parse_list(s: &str) -> Result<Vec<usize>> {
        s.split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidOrdering(format!("bad entry {t:?} in {s:?}")))
            })
            .collect()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `{p_1, ..., p_i}`.
    pub fn prefix(&self, i: usize) -> ElementSet {
        self.0[..i].iter().copied().collect()
    }
}

impl fmt::Display for Ordering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TypeVector {
    pub tau: Vec<i64>,
    /// `None` where the point lies on three or more prefix subspaces.
    pub tau_tilde: Vec<Option<i64>>,
    pub ordering: Ordering,
}

impl TypeVector {
    pub fn tau_sum(&self) -> i64 {
        self.tau.iter().sum()
    }

    /// `Σ τ̃_i`, if every entry is defined.
    pub fn tau_tilde_sum(&self) -> Option<i64> {
        self.tau_tilde.iter().copied().sum()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointClass {
    pub a_p: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b_p: Option<i64>,
    pub two_simple: bool,
}

/// `Σ rank(l) - n(|L| - 1)` over the given subspaces.
fn a_value(n: usize, on: &[Subspace]) -> i64 {
    on.iter().map(|l| l.rank as i64).sum::<i64>() - n as i64 * (on.len() as i64 - 1)
}

/// `a_p`, and for degree two the value `r1 + r2 - rank(l1 ∪ l2)`.
fn tilde_value(m: &Matroid, on: &[Subspace]) -> Option<i64> {
    match on {
        [a, b] => Some(a.rank as i64 + b.rank as i64 - m.r(a.points | b.points) as i64),
        _ if on.len() <= 1 => Some(a_value(m.rank(), on)),
        _ => None,
    }
}

fn subspaces_through(m: &Matroid, within: ElementSet, p: usize) -> Vec<Subspace> {
    m.subspaces_within(within)
        .into_iter()
        .filter(|l| l.contains(p))
        .collect()
}

pub fn ordering_type(m: &Matroid, w: &Ordering) -> Result<TypeVector> {
    Ordering::new(w.0.clone(), m.ground())?;
    let mut tau = Vec::with_capacity(w.len());
    let mut tau_tilde = Vec::with_capacity(w.len());
    for (i, &p) in w.0.iter().enumerate() {
        let on = subspaces_through(m, w.prefix(i + 1), p);
        tau.push(a_value(m.rank(), &on));
        tau_tilde.push(tilde_value(m, &on));
    }
    Ok(TypeVector {
        tau,
        tau_tilde,
        ordering: w.clone(),
    })
}

pub fn point_class(m: &Matroid, p: usize) -> Result<PointClass> {
    let on = m.point_subspaces(p)?;
    let b_p = match on.as_slice() {
        [_, _] => tilde_value(m, &on),
        _ => None,
    };
    let two_simple = match on.as_slice() {
        [a, b] => m.r(a.points | b.points) == m.rank(),
        _ => on.len() <= 1,
    };
    Ok(PointClass {
        a_p: a_value(m.rank(), &on),
        b_p,
        two_simple,
    })
}

/// Checks that the first `n` points form a basis and every later point lies
/// on at most two subspaces of its prefix.
pub fn verify_inductive_ordering(m: &Matroid, w: &Ordering) -> Result<()> {
    Ordering::new(w.0.clone(), m.ground())?;
    let n = m.rank();
    if m.r(w.prefix(n)) != n {
        return Err(Error::InvalidOrdering(format!(
            "the first {n} points of {w} are not a basis"
        )));
    }
    for i in n..w.len() {
        let degree = subspaces_through(m, w.prefix(i + 1), w.0[i]).len();
        if degree > 2 {
            return Err(Error::DegreeTooHigh {
                point: w.0[i],
                position: i + 1,
                degree,
            });
        }
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SearchMode {
    /// Complete search returning the lexicographically least witness.
    #[default]
    Exhaustive,
    /// Reverse peeling without backtracking; may miss witnesses.
    Greedy,
}

/// Degree-at-most-two points of submatroids, cached by point set.
pub(crate) struct LowDegree<'a> {
    m: &'a Matroid,
    cache: RefCell<HashMap<ElementSet, ElementSet>>,
}

impl<'a> LowDegree<'a> {
    pub(crate) fn new(m: &'a Matroid) -> Self {
        LowDegree {
            m,
            cache: RefCell::new(HashMap::new()),
        }
    }

    /// Points of `within` lying on at most two of its subspaces.
    pub(crate) fn get(&self, within: ElementSet) -> ElementSet {
        if let Some(&s) = self.cache.borrow().get(&within) {
            return s;
        }
        let subspaces = self.m.subspaces_within(within);
        let low = within
            .iter()
            .filter(|&p| subspaces.iter().filter(|l| l.contains(p)).count() <= 2)
            .collect();
        self.cache.borrow_mut().insert(within, low);
        low
    }

    /// Whether the points of `ground \ keep` can be removed one at a time,
    /// each of degree at most two at removal. Degrees only drop as points
    /// are removed, so the order of removal does not matter.
    pub(crate) fn peels_to(&self, keep: ElementSet) -> bool {
        let mut current = self.m.ground();
        while current != keep {
            match ((current - keep) & self.get(current)).max() {
                Some(p) => current = current.without(p),
                None => return false,
            }
        }
        true
    }
}

pub fn find_inductive_ordering(m: &Matroid) -> Option<Ordering> {
    find_inductive_ordering_with(m, SearchMode::Exhaustive)
}

pub fn find_inductive_ordering_with(m: &Matroid, mode: SearchMode) -> Option<Ordering> {
    match mode {
        SearchMode::Exhaustive => lex_least(m),
        SearchMode::Greedy => greedy(m),
    }
}

pub fn is_inductively_connected(m: &Matroid) -> bool {
    find_inductive_ordering(m).is_some()
}

/// Builds the ordering position by position, taking the smallest point for
/// which a completion still exists.
fn lex_least(m: &Matroid) -> Option<Ordering> {
    let low = LowDegree::new(m);
    let n = m.rank();
    let ground = m.ground();
    let mut basis_ok: HashMap<ElementSet, bool> = HashMap::new();
    let mut placed = ElementSet::EMPTY;
    let mut perm = Vec::with_capacity(m.size());
    for k in 1..=m.size() {
        let next = (ground - placed).iter().find(|&p| {
            let prefix = placed.with(p);
            if k <= n {
                if m.r(prefix) != k {
                    return false;
                }
                (ground - prefix).combinations(n - k).any(|extra| {
                    let b = prefix | extra;
                    m.r(b) == n && *basis_ok.entry(b).or_insert_with(|| low.peels_to(b))
                })
            } else {
                low.get(prefix).contains(p) && low.peels_to(prefix)
            }
        })?;
        placed = placed.with(next);
        perm.push(next);
    }
    Some(Ordering(perm))
}

fn greedy(m: &Matroid) -> Option<Ordering> {
    let low = LowDegree::new(m);
    let n = m.rank();
    let mut current = m.ground();
    let mut removed = Vec::new();
    while current.len() > n {
        let p = low
            .get(current)
            .iter()
            .find(|&p| m.r(current.without(p)) == n)?;
        current = current.without(p);
        removed.push(p);
    }
    let mut perm = current.to_vec();
    perm.extend(removed.into_iter().rev());
    Some(Ordering(perm))
}
