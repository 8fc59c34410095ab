//! Parametrized realizations of inductively connected matroids and their
//! verification by exact sampling.
//!
//! Columns are placed in ordering order. The first `n` points get the
//! identity; each later point `p` is written in terms of earlier columns
//! according to how many subspaces of its prefix contain it:
//!
//! * none: `n` fresh parameters;
//! * one subspace `l`: a combination of a basis of `l`;
//! * two subspaces: a combination of a basis of the intersection of their
//!   spans, obtained from Grassmann–Cayley meets.
//!
//! Bases are always the lexicographically smallest independent sets among
//! already placed points, so builds are deterministic.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gc::{Coordinates, Extensor, PolyVector};
use crate::linalg::column_rank;
use crate::matroid::{Matroid, VectorConfig};
use crate::orderings::{verify_inductive_ordering, Ordering};
use crate::poly::{determinant, Poly, PolyJson};
use crate::set::ElementSet;

/// An `n x d` matrix of polynomials in fresh parameters, with the
/// polynomials that must not vanish for the matrix to realize the matroid.
#[derive(Debug, Clone, PartialEq)]
pub struct ParamMatrix {
    pub n: usize,
    pub d: usize,
    pub order: Ordering,
    pub params: Vec<String>,
    /// Columns keyed by ground-set label.
    pub columns: BTreeMap<usize, Vec<Poly>>,
    pub nonvanishing: Vec<Poly>,
}

/// Serialized [`ParamMatrix`]. Each polynomial lists only the parameters it
/// uses.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ParamMatrixJson {
    pub n: usize,
    pub d: usize,
    pub order: Vec<usize>,
    pub params: Vec<String>,
    pub columns: BTreeMap<String, Vec<PolyJson>>,
    pub nonvanishing: Vec<PolyJson>,
}

impl ParamMatrix {
    pub fn column(&self, p: usize) -> &[Poly] {
        &self.columns[&p]
    }

    /// Number of fresh parameters.
    pub fn dimension(&self) -> usize {
        self.params.len()
    }

    pub fn to_json(&self) -> ParamMatrixJson {
        ParamMatrixJson {
            n: self.n,
            d: self.d,
            order: self.order.as_slice().to_vec(),
            params: self.params.clone(),
            columns: self
                .columns
                .iter()
                .map(|(p, col)| {
                    (
                        p.to_string(),
                        col.iter().map(|x| PolyJson::compact(x, &self.params)).collect(),
                    )
                })
                .collect(),
            nonvanishing: self
                .nonvanishing
                .iter()
                .map(|x| PolyJson::compact(x, &self.params))
                .collect(),
        }
    }

    pub fn from_json(json: &ParamMatrixJson) -> Result<ParamMatrix> {
        let mut columns = BTreeMap::new();
        for (label, col) in &json.columns {
            let p: usize = label
                .parse()
                .map_err(|_| Error::Parse(format!("bad column label {label:?}")))?;
            if col.len() != json.n {
                return Err(Error::DimensionMismatch {
                    expected: json.n,
                    got: col.len(),
                });
            }
            let entries = col
                .iter()
                .map(|x| x.to_poly(&json.params))
                .collect::<Result<Vec<_>>>()?;
            columns.insert(p, entries);
        }
        let ground = ElementSet::try_from_elements(columns.keys().copied())
            .map_err(|e| Error::Parse(format!("column label {e} out of range")))?;
        let order = Ordering::new(json.order.clone(), ground)?;
        if columns.len() != json.d {
            return Err(Error::DimensionMismatch {
                expected: json.d,
                got: columns.len(),
            });
        }
        let nonvanishing = json
            .nonvanishing
            .iter()
            .map(|x| x.to_poly(&json.params))
            .collect::<Result<Vec<_>>>()?;
        Ok(ParamMatrix {
            n: json.n,
            d: json.d,
            order,
            params: json.params.clone(),
            columns,
            nonvanishing,
        })
    }

    /// Columns at a parameter point.
    pub fn evaluate(&self, point: &[BigRational]) -> BTreeMap<usize, Vec<BigRational>> {
        self.columns
            .iter()
            .map(|(&p, col)| (p, col.iter().map(|x| x.eval(point)).collect()))
            .collect()
    }

    /// Rows of column `p` whose entry is identically zero.
    pub fn zero_rows(&self, p: usize) -> Vec<usize> {
        self.columns[&p]
            .iter()
            .enumerate()
            .filter(|(_, x)| x.is_zero())
            .map(|(r, _)| r + 1)
            .collect()
    }
}

/// Lexicographically smallest basis of `within` (greedy over ascending labels).
fn lex_basis(m: &Matroid, within: ElementSet) -> ElementSet {
    extend(m, ElementSet::EMPTY, within)
}

/// Extends the independent set `start` greedily by ascending elements of `by`.
fn extend(m: &Matroid, start: ElementSet, by: ElementSet) -> ElementSet {
    let mut b = start;
    let mut rank = m.r(b);
    for x in by.iter() {
        if !b.contains(x) && m.r(b.with(x)) > rank {
            b = b.with(x);
            rank += 1;
        }
    }
    b
}

struct Builder<'a> {
    m: &'a Matroid,
    n: usize,
    params: Vec<String>,
    columns: BTreeMap<usize, Vec<Poly>>,
    genericity: Vec<Poly>,
}

impl Builder<'_> {
    fn fresh(&mut self, position: usize, count: usize) -> Vec<Poly> {
        (1..=count)
            .map(|j| {
                self.params.push(format!("c_{position}_{j}"));
                Poly::var(self.params.len() - 1)
            })
            .collect()
    }

    /// `Σ c_j v_j` with fresh `c_j`.
    fn combination(&mut self, position: usize, vectors: &[PolyVector]) -> Vec<Poly> {
        let coefs = self.fresh(position, vectors.len());
        let mut out = vec![Poly::zero(); self.n];
        for (c, v) in coefs.iter().zip(vectors) {
            for (o, x) in out.iter_mut().zip(v) {
                *o = &*o + &(c * x);
            }
        }
        out
    }

    fn col(&self, p: usize) -> PolyVector {
        self.columns[&p].clone()
    }

    /// Basis of the intersection of the spans of `l1` and `l2`, as vectors.
    fn intersection_basis(
        &mut self,
        p: usize,
        l1: ElementSet,
        l2: ElementSet,
    ) -> Result<Vec<PolyVector>> {
        let m = self.m;
        let q = lex_basis(m, l1);
        let r = lex_basis(m, l2);
        let union = l1 | l2;
        let rank = m.r(union);
        let b1 = extend(m, q, union);
        let q_extra = b1 - q;
        let b2 = extend(m, r, q);
        let r_extra = b2 - r;
        let s = b1 - q_extra - r_extra;

        // coordinates in which the meets are taken
        let a: Vec<usize> = b1.to_vec();
        let coords: Box<dyn Fn(usize) -> PolyVector> = if rank == self.n {
            let columns = self.columns.clone();
            Box::new(move |x| columns[&x].clone())
        } else {
            let a_cols: Vec<PolyVector> = a.iter().map(|&x| self.col(x)).collect();
            let chosen = ElementSet::full(self.n)
                .combinations(rank)
                .map(|rs| rs.iter().map(|x| x - 1).collect::<Vec<usize>>())
                .find_map(|rs| {
                    let sub: Vec<PolyVector> = a_cols
                        .iter()
                        .map(|c| rs.iter().map(|&i| c[i].clone()).collect())
                        .collect();
                    let det = determinant(&sub);
                    (!det.is_zero()).then_some((rs, sub, det))
                });
            let Some((rs, sub, det)) = chosen else {
                return Err(Error::SymbolicDegeneracy { point: p });
            };
            self.genericity.push(det);
            let columns = self.columns.clone();
            let a_list = a.clone();
            Box::new(move |x| {
                if let Some(k) = a_list.iter().position(|&y| y == x) {
                    let mut e = vec![Poly::zero(); rank];
                    e[k] = Poly::one();
                    return e;
                }
                // Cramer's rule with the common denominator dropped
                let target: PolyVector = rs.iter().map(|&i| columns[&x][i].clone()).collect();
                (0..rank)
                    .map(|k| {
                        let mut cols = sub.clone();
                        cols[k] = target.clone();
                        determinant(&cols)
                    })
                    .collect()
            })
        };

        let alg = Coordinates { n: rank };
        let ext = |set: ElementSet| -> Extensor<Coordinates> {
            Extensor::decomposable(&alg, set.iter().map(&coords).collect())
        };
        let qr = ext(q).meet(&alg, &ext(r))?;
        let mut out = Vec::with_capacity(s.len());
        for si in s.iter() {
            let mut factors: Vec<PolyVector> =
                (q_extra | r_extra).iter().map(&coords).collect();
            factors.push(coords(si));
            let v = qr
                .meet(&alg, &Extensor::decomposable(&alg, factors))?
                .to_vector(&alg)?;
            if v.iter().all(Poly::is_zero) {
                return Err(Error::SymbolicDegeneracy { point: p });
            }
            let v = if rank == self.n {
                v
            } else {
                let mut back = vec![Poly::zero(); self.n];
                for (k, &x) in a.iter().enumerate() {
                    let col = self.col(x);
                    for (o, y) in back.iter_mut().zip(&col) {
                        *o = &*o + &(&v[k] * y);
                    }
                }
                back
            };
            out.push(v);
        }
        Ok(out)
    }
}

/// Builds the parametrized realization along `w`, which must start with a
/// basis and add points lying on at most two prefix subspaces.
pub fn build_realization(m: &Matroid, w: &Ordering) -> Result<ParamMatrix> {
    verify_inductive_ordering(m, w)?;
    let n = m.rank();
    let perm = w.as_slice();
    let mut b = Builder {
        m,
        n,
        params: Vec::new(),
        columns: BTreeMap::new(),
        genericity: Vec::new(),
    };
    for (k, &p) in perm[..n].iter().enumerate() {
        let mut e = vec![Poly::zero(); n];
        e[k] = Poly::one();
        b.columns.insert(p, e);
    }
    for (i, &p) in perm.iter().enumerate().skip(n) {
        let position = i + 1;
        let on: Vec<_> = m
            .subspaces_within(w.prefix(position))
            .into_iter()
            .filter(|l| l.contains(p))
            .collect();
        let column = match on.as_slice() {
            [] => b.fresh(position, n),
            [l] => {
                let basis: Vec<PolyVector> =
                    lex_basis(m, l.points.without(p)).iter().map(|q| b.col(q)).collect();
                b.combination(position, &basis)
            }
            [l1, l2] => {
                let basis = b.intersection_basis(p, l1.points.without(p), l2.points.without(p))?;
                b.combination(position, &basis)
            }
            _ => {
                return Err(Error::DegreeTooHigh {
                    point: p,
                    position,
                    degree: on.len(),
                })
            }
        };
        b.columns.insert(p, column);
    }

    let position: BTreeMap<usize, usize> = perm.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let mut nonvanishing = Vec::new();
    for basis in m.bases() {
        let cols: Vec<Vec<Poly>> = basis.iter().map(|x| b.col(x)).collect();
        let det = determinant(&cols);
        if det.is_zero() {
            let last = basis.iter().max_by_key(|x| position[x]).unwrap_or(0);
            return Err(Error::SymbolicDegeneracy { point: last });
        }
        nonvanishing.push(det);
    }
    nonvanishing.extend(b.genericity);
    Ok(ParamMatrix {
        n,
        d: m.size(),
        order: w.clone(),
        params: b.params,
        columns: b.columns,
        nonvanishing,
    })
}

/// A subset on which the sampled configuration and the matroid disagree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankMismatch {
    pub subset: ElementSet,
    pub expected_rank: usize,
    pub sampled_rank: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SampleResult {
    pub index: usize,
    pub passed: bool,
    /// Draws rejected because a non-vanishing polynomial vanished.
    pub rejected: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mismatch: Option<RankMismatch>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub samples: usize,
    pub passed: usize,
    pub rejected: usize,
    pub seed: u64,
    pub height: u64,
    pub results: Vec<SampleResult>,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.passed == self.samples
    }

    pub fn first_mismatch(&self) -> Option<&RankMismatch> {
        self.results.iter().find_map(|r| r.mismatch.as_ref())
    }
}

#[derive(Debug, Clone, Copy)]
pub struct SamplingOptions {
    pub samples: usize,
    pub seed: u64,
    /// Bound on numerators and denominators of sampled parameters.
    pub height: u64,
    /// Draws allowed per sample before giving up.
    pub max_attempts: usize,
}

impl Default for SamplingOptions {
    fn default() -> Self {
        SamplingOptions {
            samples: 25,
            seed: 7,
            height: 1000,
            max_attempts: 100,
        }
    }
}

fn random_rational(rng: &mut ChaCha8Rng, height: u64) -> BigRational {
    let h = height.max(1) as i64;
    let num = rng.gen_range(-h..=h);
    let den = rng.gen_range(1..=h);
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Draws parameter points for sample `index`; the stream depends only on
/// `(seed, index)`.
fn sample_point(pm: &ParamMatrix, opts: &SamplingOptions, index: usize) -> Result<(Vec<BigRational>, usize)> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    rng.set_stream(index as u64);
    for attempt in 0..opts.max_attempts {
        let point: Vec<BigRational> = (0..pm.params.len())
            .map(|_| random_rational(&mut rng, opts.height))
            .collect();
        if pm.nonvanishing.iter().all(|f| !f.eval(&point).is_zero()) {
            return Ok((point, attempt));
        }
    }
    Err(Error::RetryExhausted {
        attempts: opts.max_attempts,
    })
}

/// Compares the sampled configuration's rank with `m` on every subset of
/// size at most `n`; returns the first disagreement.
pub fn compare_ranks(
    m: &Matroid,
    columns: &BTreeMap<usize, Vec<BigRational>>,
) -> Option<RankMismatch> {
    let n = m.rank();
    for k in 1..=n.min(m.size()) {
        for s in m.ground().combinations(k) {
            let cols: Vec<&[BigRational]> = s.iter().map(|p| columns[&p].as_slice()).collect();
            let got = column_rank(n, &cols);
            let expected = m.r(s);
            if got != expected {
                return Some(RankMismatch {
                    subset: s,
                    expected_rank: expected,
                    sampled_rank: got,
                });
            }
        }
    }
    None
}

/// Instantiates `pm` at seeded random rational points off the non-vanishing
/// locus and checks each instance against `m`.
pub fn verify_realization(
    pm: &ParamMatrix,
    m: &Matroid,
    opts: &SamplingOptions,
) -> Result<VerificationReport> {
    if pm.n != m.rank() || pm.columns.keys().copied().collect::<ElementSet>() != m.ground() {
        return Err(Error::DimensionMismatch {
            expected: m.size(),
            got: pm.columns.len(),
        });
    }
    let results: Vec<SampleResult> = (0..opts.samples)
        .into_par_iter()
        .map(|index| {
            let (point, rejected) = sample_point(pm, opts, index)?;
            let mismatch = compare_ranks(m, &pm.evaluate(&point));
            Ok(SampleResult {
                index,
                passed: mismatch.is_none(),
                rejected,
                mismatch,
            })
        })
        .collect::<Result<_>>()?;
    Ok(VerificationReport {
        samples: opts.samples,
        passed: results.iter().filter(|r| r.passed).count(),
        rejected: results.iter().map(|r| r.rejected).sum(),
        seed: opts.seed,
        height: opts.height,
        results,
    })
}

/// Builds the vector-configuration matroid of `pm` at `point`.
pub fn instantiate(pm: &ParamMatrix, point: &[BigRational]) -> Result<Matroid> {
    let columns = pm.evaluate(point);
    let max = columns.keys().max().copied().unwrap_or(0);
    if columns.len() != max {
        return Err(Error::InvalidVectors(
            "column labels are not 1..d".to_string(),
        ));
    }
    Matroid::from_vectors(VectorConfig {
        n: pm.n,
        vectors: columns.into_values().collect(),
    })
}

/// Variable names `x_{row}_{col}` of the generic `n x d` matrix, row-major.
pub fn generic_matrix_vars(n: usize, d: usize) -> Vec<String> {
    (1..=n)
        .flat_map(|i| (1..=d).map(move |j| format!("x_{i}_{j}")))
        .collect()
}

fn generic_minor(d: usize, rows: ElementSet, cols: ElementSet) -> Poly {
    let columns: Vec<Vec<Poly>> = cols
        .iter()
        .map(|j| rows.iter().map(|i| Poly::var((i - 1) * d + (j - 1))).collect())
        .collect();
    determinant(&columns)
}

/// Default cap on the number of circuit-ideal generators.
pub const DEFAULT_GENERATOR_CAP: usize = 100_000;

/// Minors `[A|B]` of the generic matrix for every circuit `B` with `|B| <= n`
/// and every row set `A` with `|A| = |B|`; circuits larger than `n` give none.
pub fn circuit_ideal_generators(m: &Matroid, cap: usize) -> Result<Vec<Poly>> {
    let n = m.rank();
    let d = m.ground().max().unwrap_or(0);
    let circuits: Vec<ElementSet> = m.circuits().into_iter().filter(|c| c.len() <= n).collect();
    let count: usize = circuits.iter().map(|c| binomial(n, c.len())).sum();
    if count > cap {
        return Err(Error::TooLarge {
            what: "circuit ideal generator count",
            size: count,
            cap,
        });
    }
    let rows = ElementSet::full(n);
    Ok(circuits
        .iter()
        .flat_map(|&c| rows.combinations(c.len()).map(move |a| generic_minor(d, a, c)))
        .collect())
}

/// Maximal minors of the generic matrix on the bases of `m`.
pub fn basis_nonvanishing(m: &Matroid) -> Vec<Poly> {
    let n = m.rank();
    let d = m.ground().max().unwrap_or(0);
    m.bases()
        .into_iter()
        .map(|b| generic_minor(d, ElementSet::full(n), b))
        .collect()
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orderings::{find_inductive_ordering, ordering_type};

    fn set(v: &[usize]) -> ElementSet {
        v.iter().copied().collect()
    }

    fn q(x: i64) -> BigRational {
        BigRational::from_integer(x.into())
    }

    fn paving8() -> Matroid {
        Matroid::paving(
            8,
            4,
            &[set(&[1, 2, 3, 4]), set(&[3, 4, 5, 6]), set(&[5, 6, 7, 8]), set(&[1, 3, 5, 7])],
        )
        .unwrap()
    }

    #[test]
    fn uniform_gives_a_generic_block() {
        let m = Matroid::uniform(2, 4).unwrap();
        let w = Ordering::for_matroid(vec![1, 2, 3, 4], &m).unwrap();
        let pm = build_realization(&m, &w).unwrap();
        assert_eq!(pm.dimension(), 4);
        assert_eq!(pm.params[0], "c_3_1");
        assert_eq!(pm.column(3), &[Poly::var(0), Poly::var(1)]);
        assert_eq!(pm.nonvanishing.len(), 6);
        let report = verify_realization(&pm, &m, &SamplingOptions { samples: 5, ..Default::default() }).unwrap();
        assert!(report.all_passed());
    }

    #[test]
    fn paving_example_structure() {
        let m = paving8();
        let w = Ordering::for_matroid(vec![1, 2, 3, 5, 4, 6, 7, 8], &m).unwrap();
        let pm = build_realization(&m, &w).unwrap();
        assert_eq!(pm.dimension(), 12);
        assert_eq!(pm.zero_rows(4), vec![4]);
        assert_eq!(pm.zero_rows(7), vec![2]);
        assert!(pm.zero_rows(6).is_empty());
        assert!(pm.zero_rows(8).is_empty());
        let t = ordering_type(&m, &w).unwrap();
        assert_eq!(pm.dimension() as i64, t.tau_tilde_sum().unwrap() - 16);
        let report = verify_realization(&pm, &m, &SamplingOptions { samples: 8, ..Default::default() }).unwrap();
        assert!(report.all_passed(), "{report:?}");
    }

    #[test]
    fn corrupted_entry_is_caught() {
        let m = paving8();
        let w = Ordering::for_matroid(vec![1, 2, 3, 5, 4, 6, 7, 8], &m).unwrap();
        let mut pm = build_realization(&m, &w).unwrap();
        pm.columns.get_mut(&4).unwrap()[3] = Poly::one();
        let report = verify_realization(&pm, &m, &SamplingOptions { samples: 3, ..Default::default() }).unwrap();
        assert_eq!(report.passed, 0);
        let bad = report.first_mismatch().unwrap();
        assert_eq!(bad.subset, set(&[1, 2, 3, 4]));
        assert_eq!((bad.expected_rank, bad.sampled_rank), (3, 4));
    }

    #[test]
    fn json_round_trip() {
        let m = paving8();
        let w = Ordering::for_matroid(vec![1, 2, 3, 5, 4, 6, 7, 8], &m).unwrap();
        let pm = build_realization(&m, &w).unwrap();
        let text = serde_json::to_string(&pm.to_json()).unwrap();
        let back: ParamMatrixJson = serde_json::from_str(&text).unwrap();
        assert_eq!(ParamMatrix::from_json(&back).unwrap(), pm);
    }

    #[test]
    fn two_subspaces_not_spanning() {
        // six points in a plane of 4-space, three of them on a line
        let rows: [[i64; 4]; 7] = [
            [1, 0, 0, 0],
            [0, 1, 0, 0],
            [0, 0, 1, 0],
            [1, 2, 3, 0],
            [2, -1, 5, 0],
            [1, 1, 0, 0],
            [0, 0, 0, 1],
        ];
        let vectors = rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect();
        let m = Matroid::from_vectors(VectorConfig { n: 4, vectors }).unwrap();
        let w = Ordering::for_matroid(vec![1, 3, 4, 7, 2, 5, 6], &m).unwrap();
        let on = m.point_subspaces(6).unwrap();
        assert_eq!(on.len(), 2);
        assert_eq!(m.r(on[0].points | on[1].points), 3);
        let pm = build_realization(&m, &w).unwrap();
        let t = ordering_type(&m, &w).unwrap();
        assert_eq!(t.tau_tilde[6], Some(2));
        assert_eq!(pm.dimension() as i64, t.tau_tilde_sum().unwrap() - 16);
        assert!(pm.nonvanishing.len() > m.bases().len());
        let report = verify_realization(&pm, &m, &SamplingOptions { samples: 6, ..Default::default() }).unwrap();
        assert!(report.all_passed(), "{report:?}");
    }

    #[test]
    fn found_orderings_build_and_verify() {
        let m = Matroid::paving(
            6,
            3,
            &[set(&[1, 2, 3]), set(&[1, 5, 6]), set(&[3, 4, 5]), set(&[2, 4, 6])],
        )
        .unwrap();
        let w = find_inductive_ordering(&m).unwrap();
        let pm = build_realization(&m, &w).unwrap();
        assert_eq!(pm.dimension(), 14 - 9);
        let report = verify_realization(&pm, &m, &SamplingOptions { samples: 5, ..Default::default() }).unwrap();
        assert!(report.all_passed());
    }

    #[test]
    fn degree_three_is_rejected() {
        let m = Matroid::paving(7, 3, &[set(&[1, 2, 7]), set(&[3, 4, 7]), set(&[5, 6, 7])]).unwrap();
        let w = Ordering::for_matroid(vec![1, 3, 5, 2, 4, 6, 7], &m).unwrap();
        assert!(matches!(
            build_realization(&m, &w),
            Err(Error::DegreeTooHigh { point: 7, .. })
        ));
    }

    #[test]
    fn ideal_generators() {
        let u23 = Matroid::uniform(2, 3).unwrap();
        assert!(circuit_ideal_generators(&u23, 100).unwrap().is_empty());
        assert_eq!(basis_nonvanishing(&u23).len(), 3);
        let parallel = Matroid::from_circuits(3, &[set(&[1, 2])]).unwrap();
        assert_eq!(parallel.rank(), 2);
        let lines = Matroid::paving(7, 3, &[set(&[1, 2, 7]), set(&[3, 4, 7]), set(&[5, 6, 7])]).unwrap();
        let gens = circuit_ideal_generators(&lines, 100).unwrap();
        assert_eq!(gens.len(), 3);
        assert!(gens.iter().all(|g| g.num_terms() == 6));
        assert!(matches!(
            circuit_ideal_generators(&lines, 2),
            Err(Error::TooLarge { .. })
        ));
    }
}
