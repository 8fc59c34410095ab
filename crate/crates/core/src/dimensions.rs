//! Naive dimension and expected codimension of realization spaces.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matroid::{is_connected_by_rank, Matroid};
use crate::set::ElementSet;
use crate::split::recognize_split;

/// Largest ground set for which the subset families are enumerated by default.
pub const DEFAULT_SUBSET_CAP: usize = 14;

/// Family of subsets over which the expected codimension is summed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Family {
    Powerset,
    Connected,
    Hypergraph,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Powerset => "POWERSET",
            Family::Connected => "CONNECTED",
            Family::Hypergraph => "HYPERGRAPH",
        }
    }
}

impl std::str::FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Family> {
        match s.to_ascii_lowercase().as_str() {
            "powerset" => Ok(Family::Powerset),
            "connected" => Ok(Family::Connected),
            "hypergraph" => Ok(Family::Hypergraph),
            _ => Err(Error::Parse(format!("unknown family {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimensionReport {
    pub naive_dim: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected_codim: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected_dim: Option<i64>,
    pub family_used: Family,
}

/// `nd - Σ_l (|l| - rank l)(n - rank l)` over the subspaces of `m`.
pub fn naive_dimension(m: &Matroid) -> i64 {
    let n = m.rank() as i64;
    let d = m.size() as i64;
    let loss: i64 = m
        .subspaces()
        .iter()
        .map(|l| (l.points.len() as i64 - l.rank as i64) * (n - l.rank as i64))
        .sum();
    n * d - loss
}

/// `nd + (n - 1)|L| - Σ_p deg(p)`, valid for paving matroids.
pub fn naive_dimension_paving(m: &Matroid) -> Result<i64> {
    if let Some(circuit) = m.paving_witness() {
        return Err(Error::NotPaving {
            circuit,
            rank: m.rank(),
        });
    }
    let n = m.rank() as i64;
    let d = m.size() as i64;
    let subspaces = m.subspaces();
    let degrees: i64 = subspaces.iter().map(|l| l.points.len() as i64).sum();
    Ok(n * d + (n - 1) * subspaces.len() as i64 - degrees)
}

/// Expected codimension with the default subset cap.
pub fn expected_codim(m: &Matroid, family: Family) -> Result<i64> {
    expected_codim_capped(m, family, DEFAULT_SUBSET_CAP)
}

pub fn expected_codim_capped(m: &Matroid, family: Family, cap: usize) -> Result<i64> {
    match family {
        Family::Powerset => {
            check_cap(m, cap)?;
            Ok(powerset_codim(m))
        }
        Family::Connected => {
            check_cap(m, cap)?;
            let ground = m.ground();
            let family: Vec<ElementSet> = ground
                .subsets()
                .filter(|&s| {
                    let rs = m.r(s);
                    is_connected_by_rank(s, |t| m.r(t))
                        && is_connected_by_rank(ground - s, |t| m.r(t | s) - rs)
                })
                .collect();
            Ok(family_codim(m, &family))
        }
        Family::Hypergraph => {
            let h = recognize_split(m).ok_or(Error::FamilyUnavailable("HYPERGRAPH"))?;
            let mut family: Vec<ElementSet> = h.edges.iter().map(|e| e.elements).collect();
            family.sort_by_key(|s| s.len());
            Ok(family_codim(m, &family))
        }
    }
}

fn check_cap(m: &Matroid, cap: usize) -> Result<()> {
    if m.size() > cap {
        return Err(Error::TooLarge {
            what: "ground set for subset enumeration",
            size: m.size(),
            cap,
        });
    }
    Ok(())
}

/// Over the full powerset `c = Σ_{T ⊆ S} a(T)`, so `a` is the Möbius
/// inverse of `c` and a subset-sum transform computes it for all sets.
fn powerset_codim(m: &Matroid) -> i64 {
    let elements = m.ground().to_vec();
    let k = elements.len();
    let n = m.rank() as i64;
    let to_set = |mask: usize| -> ElementSet {
        (0..k)
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| elements[i])
            .collect()
    };
    let ranks: Vec<i64> = (0..1usize << k).map(|mask| m.r(to_set(mask)) as i64).collect();
    let mut a: Vec<i64> = (0..1usize << k)
        .map(|mask| mask.count_ones() as i64 - ranks[mask])
        .collect();
    for i in 0..k {
        for mask in 0..1usize << k {
            if mask >> i & 1 == 1 {
                a[mask] -= a[mask ^ (1 << i)];
            }
        }
    }
    a.iter()
        .zip(&ranks)
        .map(|(&a, &r)| (n - r) * a)
        .sum()
}

/// Literal recursion over an explicit family listed with subsets before supersets.
fn family_codim(m: &Matroid, family: &[ElementSet]) -> i64 {
    let n = m.rank() as i64;
    let mut a: Vec<i64> = Vec::with_capacity(family.len());
    let mut total = 0;
    for (i, &s) in family.iter().enumerate() {
        let rank = m.r(s) as i64;
        let below: i64 = family[..i]
            .iter()
            .zip(&a)
            .filter(|(t, _)| t.is_proper_subset(s))
            .map(|(_, &x)| x)
            .sum();
        let value = s.len() as i64 - rank - below;
        a.push(value);
        total += (n - rank) * value;
    }
    total
}

/// `nd - ec(M)` over the powerset.
pub fn expected_dim(m: &Matroid) -> Result<i64> {
    Ok((m.rank() * m.size()) as i64 - expected_codim(m, Family::Powerset)?)
}

/// Checks `ec(M ⊕ N) = ec(M) + ec(N) + n2(d1 - n1) + n1(d2 - n2)`.
pub fn direct_sum_codim_check(m: &Matroid, other: &Matroid) -> Result<bool> {
    let sum = m.direct_sum(other)?;
    let (n1, d1) = (m.rank() as i64, m.size() as i64);
    let (n2, d2) = (other.rank() as i64, other.size() as i64);
    let lhs = expected_codim(&sum, Family::Powerset)?;
    let rhs = expected_codim(m, Family::Powerset)?
        + expected_codim(other, Family::Powerset)?
        + n2 * (d1 - n1)
        + n1 * (d2 - n2);
    Ok(lhs == rhs)
}

/// Naive dimension together with the expected codimension for `family`,
/// leaving the latter out when the family does not apply.
pub fn dimension_report(m: &Matroid, family: Family, cap: usize) -> Result<DimensionReport> {
    let naive_dim = naive_dimension(m);
    let expected_codim = match expected_codim_capped(m, family, cap) {
        Ok(ec) => Some(ec),
        Err(Error::FamilyUnavailable(_)) => None,
        Err(e) => return Err(e),
    };
    let nd = (m.rank() * m.size()) as i64;
    Ok(DimensionReport {
        naive_dim,
        expected_codim,
        expected_dim: expected_codim.map(|ec| nd - ec),
        family_used: family,
    })
}
