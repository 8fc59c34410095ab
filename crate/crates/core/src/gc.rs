//! Grassmann–Cayley algebra: join, meet and brackets of extensors.
//!
//! Extensors are formal sums of decomposables `c · v_1 ∨ ... ∨ v_k`. The
//! algebra is generic over how vectors and brackets are represented:
//! [`Coordinates`] works with polynomial coordinate vectors, [`Symbols`]
//! keeps vectors as point labels and brackets as formal symbols.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::{determinant, Poly};

pub type PolyVector = Vec<Poly>;

/// Scalars, vectors and the bracket of an `n`-dimensional space.
pub trait BracketAlgebra {
    type Vector: Clone + fmt::Debug;
    type Scalar: Clone + PartialEq + fmt::Debug;

    fn dim(&self) -> usize;
    fn zero(&self) -> Self::Scalar;
    fn one(&self) -> Self::Scalar;
    fn is_zero(&self, a: &Self::Scalar) -> bool;
    fn add(&self, a: &Self::Scalar, b: &Self::Scalar) -> Self::Scalar;
    fn mul(&self, a: &Self::Scalar, b: &Self::Scalar) -> Self::Scalar;
    fn neg(&self, a: &Self::Scalar) -> Self::Scalar;
    /// Bracket of exactly `dim()` vectors.
    fn bracket(&self, vs: &[Self::Vector]) -> Result<Self::Scalar>;
}

/// Vectors with polynomial coordinates; brackets are determinants.
#[derive(Debug, Clone, Copy)]
pub struct Coordinates {
    pub n: usize,
}

impl BracketAlgebra for Coordinates {
    type Vector = PolyVector;
    type Scalar = Poly;

    fn dim(&self) -> usize {
        self.n
    }
    fn zero(&self) -> Poly {
        Poly::zero()
    }
    fn one(&self) -> Poly {
        Poly::one()
    }
    fn is_zero(&self, a: &Poly) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &Poly, b: &Poly) -> Poly {
        a + b
    }
    fn mul(&self, a: &Poly, b: &Poly) -> Poly {
        a * b
    }
    fn neg(&self, a: &Poly) -> Poly {
        -a
    }
    fn bracket(&self, vs: &[PolyVector]) -> Result<Poly> {
        bracket(self.n, vs)
    }
}

/// Determinant of `n` vectors of length `n`.
pub fn bracket(n: usize, vs: &[PolyVector]) -> Result<Poly> {
    if vs.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: vs.len(),
        });
    }
    if let Some(v) = vs.iter().find(|v| v.len() != n) {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: v.len(),
        });
    }
    Ok(determinant(vs))
}

/// Formal polynomial in brackets of point labels.
///
/// Each bracket is stored with its labels ascending (the sign of the sorting
/// permutation is folded into the coefficient); monomials are sorted lists
/// of brackets, and terms print in ascending monomial order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BracketPoly {
    terms: BTreeMap<Vec<Vec<usize>>, BigInt>,
}

impl BracketPoly {
    pub fn constant(c: i64) -> Self {
        let mut terms = BTreeMap::new();
        if c != 0 {
            terms.insert(Vec::new(), BigInt::from(c));
        }
        BracketPoly { terms }
    }

    /// The bracket `[labels]`, zero when a label repeats.
    pub fn bracket(labels: &[usize]) -> Self {
        let mut sorted = labels.to_vec();
        let mut sign = 1i64;
        // insertion sort, counting swaps
        for i in 1..sorted.len() {
            let mut j = i;
            while j > 0 && sorted[j - 1] > sorted[j] {
                sorted.swap(j - 1, j);
                sign = -sign;
                j -= 1;
            }
        }
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return BracketPoly::default();
        }
        let mut terms = BTreeMap::new();
        terms.insert(vec![sorted], BigInt::from(sign));
        BracketPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Vec<usize>>, &BigInt)> {
        self.terms.iter()
    }

    fn insert(&mut self, m: Vec<Vec<usize>>, c: BigInt) {
        let entry = self.terms.entry(m).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
    }

    pub fn add(&self, other: &BracketPoly) -> BracketPoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert(m.clone(), c.clone());
        }
        out
    }

    pub fn mul(&self, other: &BracketPoly) -> BracketPoly {
        let mut out = BracketPoly::default();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let mut m: Vec<Vec<usize>> = ma.iter().chain(mb).cloned().collect();
                m.sort();
                out.insert(m, ca * cb);
            }
        }
        out
    }

    pub fn neg(&self) -> BracketPoly {
        BracketPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl fmt::Display for BracketPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let compact = self
            .terms
            .keys()
            .flatten()
            .flatten()
            .all(|&l| l < 10);
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            if !abs.is_one() || m.is_empty() {
                write!(f, "{abs}")?;
            }
            for b in m {
                let labels: Vec<String> = b.iter().map(|l| l.to_string()).collect();
                let sep = if compact { "" } else { " " };
                write!(f, "[{}]", labels.join(sep))?;
            }
        }
        Ok(())
    }
}

/// Vectors as point labels; brackets are formal.
#[derive(Debug, Clone, Copy)]
pub struct Symbols {
    pub n: usize,
}

impl BracketAlgebra for Symbols {
    type Vector = usize;
    type Scalar = BracketPoly;

    fn dim(&self) -> usize {
        self.n
    }
    fn zero(&self) -> BracketPoly {
        BracketPoly::default()
    }
    fn one(&self) -> BracketPoly {
        BracketPoly::constant(1)
    }
    fn is_zero(&self, a: &BracketPoly) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BracketPoly, b: &BracketPoly) -> BracketPoly {
        a.add(b)
    }
    fn mul(&self, a: &BracketPoly, b: &BracketPoly) -> BracketPoly {
        a.mul(b)
    }
    fn neg(&self, a: &BracketPoly) -> BracketPoly {
        a.neg()
    }
    fn bracket(&self, vs: &[usize]) -> Result<BracketPoly> {
        if vs.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: vs.len(),
            });
        }
        Ok(BracketPoly::bracket(vs))
    }
}

/// Formal sum of decomposable extensors of a common step.
#[derive(Debug, Clone)]
pub struct Extensor<A: BracketAlgebra> {
    pub step: usize,
    pub terms: Vec<(A::Scalar, Vec<A::Vector>)>,
}

impl<A: BracketAlgebra> Extensor<A> {
    pub fn zero(step: usize) -> Self {
        Extensor {
            step,
            terms: Vec::new(),
        }
    }

    pub fn scalar(alg: &A, c: A::Scalar) -> Self {
        let terms = if alg.is_zero(&c) {
            Vec::new()
        } else {
            vec![(c, Vec::new())]
        };
        Extensor { step: 0, terms }
    }

    pub fn vector(alg: &A, v: A::Vector) -> Self {
        Extensor::decomposable(alg, vec![v])
    }

    /// `v_1 ∨ ... ∨ v_k` with unit coefficient.
    pub fn decomposable(alg: &A, vs: Vec<A::Vector>) -> Self {
        Extensor {
            step: vs.len(),
            terms: vec![(alg.one(), vs)],
        }
    }

    /// `true` when there are no terms (a sum of terms may still vanish; use
    /// Plücker coordinates to decide that).
    pub fn has_no_terms(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, alg: &A, c: &A::Scalar) -> Self {
        Extensor {
            step: self.step,
            terms: self
                .terms
                .iter()
                .map(|(x, vs)| (alg.mul(c, x), vs.clone()))
                .filter(|(x, _)| !alg.is_zero(x))
                .collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.step != other.step && !self.terms.is_empty() && !other.terms.is_empty() {
            return Err(Error::DimensionMismatch {
                expected: self.step,
                got: other.step,
            });
        }
        let step = if self.terms.is_empty() { other.step } else { self.step };
        Ok(Extensor {
            step,
            terms: self.terms.iter().chain(&other.terms).cloned().collect(),
        })
    }

    /// Concatenates factors, bilinearly over the terms.
    pub fn join(&self, alg: &A, other: &Self) -> Result<Self> {
        if self.step + other.step > alg.dim() {
            return Err(Error::StepOverflow {
                left: self.step,
                right: other.step,
                ambient: alg.dim(),
            });
        }
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (a, va) in &self.terms {
            for (b, vb) in &other.terms {
                let c = alg.mul(a, b);
                if !alg.is_zero(&c) {
                    terms.push((c, va.iter().chain(vb).cloned().collect()));
                }
            }
        }
        Ok(Extensor {
            step: self.step + other.step,
            terms,
        })
    }

    /// Shuffle formula: with `v` of step `j`, `w` of step `k` and `j + k >= n`,
    /// `v ∧ w = Σ sgn(σ) [v_σ(1) ... v_σ(n-k) w_1 ... w_k] v_σ(n-k+1) ... v_σ(j)`
    /// over shuffles `σ`; zero when `j + k < n`.
    pub fn meet(&self, alg: &A, other: &Self) -> Result<Self> {
        let n = alg.dim();
        let (j, k) = (self.step, other.step);
        if j + k < n {
            return Ok(Extensor::zero(0));
        }
        let take = n - k;
        let mut terms = Vec::new();
        for (a, va) in &self.terms {
            for (b, wb) in &other.terms {
                let ab = alg.mul(a, b);
                for chosen in shuffles(j, take) {
                    let mut inside: Vec<A::Vector> =
                        chosen.iter().map(|&i| va[i].clone()).collect();
                    inside.extend(wb.iter().cloned());
                    let rest: Vec<A::Vector> = (0..j)
                        .filter(|i| !chosen.contains(i))
                        .map(|i| va[i].clone())
                        .collect();
                    let mut c = alg.mul(&ab, &alg.bracket(&inside)?);
                    if shuffle_sign(&chosen) < 0 {
                        c = alg.neg(&c);
                    }
                    if !alg.is_zero(&c) {
                        terms.push((c, rest));
                    }
                }
            }
        }
        Ok(Extensor {
            step: j + k - n,
            terms,
        })
    }

    /// Bracket of a step-`n` extensor, as a scalar.
    pub fn bracket_value(&self, alg: &A) -> Result<A::Scalar> {
        if self.step != alg.dim() {
            return Err(Error::DimensionMismatch {
                expected: alg.dim(),
                got: self.step,
            });
        }
        let mut total = alg.zero();
        for (c, vs) in &self.terms {
            total = alg.add(&total, &alg.mul(c, &alg.bracket(vs)?));
        }
        Ok(total)
    }

    /// The scalar of a step-0 extensor.
    pub fn scalar_value(&self, alg: &A) -> Option<A::Scalar> {
        (self.step == 0).then(|| {
            self.terms
                .iter()
                .fold(alg.zero(), |acc, (c, _)| alg.add(&acc, c))
        })
    }
}

impl Extensor<Coordinates> {
    /// Collapses a step-1 sum to a single vector `Σ c · v`.
    pub fn to_vector(&self, alg: &Coordinates) -> Result<PolyVector> {
        if self.step != 1 {
            return Err(Error::StepNotOne(self.step));
        }
        let mut out = vec![Poly::zero(); alg.n];
        for (c, vs) in &self.terms {
            for (o, x) in out.iter_mut().zip(&vs[0]) {
                *o = &*o + &(c * x);
            }
        }
        Ok(out)
    }

    /// Plücker coordinates: for every `step`-subset of rows (ascending,
    /// lexicographic), the sum of the coefficient-weighted maximal minors.
    pub fn plucker(&self, alg: &Coordinates) -> Vec<(Vec<usize>, Poly)> {
        row_subsets(alg.n, self.step)
            .into_iter()
            .map(|rows| {
                let mut total = Poly::zero();
                for (c, vs) in &self.terms {
                    let cols: Vec<Vec<Poly>> = vs
                        .iter()
                        .map(|v| rows.iter().map(|&r| v[r].clone()).collect())
                        .collect();
                    total = &total + &(c * &determinant(&cols));
                }
                (rows, total)
            })
            .collect()
    }

    /// Zero test through the Plücker expansion.
    pub fn is_zero(&self, alg: &Coordinates) -> bool {
        self.plucker(alg).iter().all(|(_, p)| p.is_zero())
    }
}

/// All increasing `take`-subsets of `0..j`, lexicographically.
fn shuffles(j: usize, take: usize) -> Vec<Vec<usize>> {
    row_subsets(j, take)
}

fn row_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k > n {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        let Some(i) = (0..k).rev().find(|&i| idx[i] < n - k + i) else {
            return out;
        };
        idx[i] += 1;
        for t in i + 1..k {
            idx[t] = idx[t - 1] + 1;
        }
    }
}

/// Sign of the permutation listing `chosen` first, then the rest, in order.
fn shuffle_sign(chosen: &[usize]) -> i32 {
    let displaced: usize = chosen.iter().enumerate().map(|(t, &i)| i - t).sum();
    if displaced.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::column_rank;
    use num_rational::BigRational;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn int_vec(v: &[i64]) -> PolyVector {
        v.iter().map(|&x| Poly::integer(x)).collect()
    }

    fn random_vec(rng: &mut ChaCha8Rng, n: usize) -> PolyVector {
        (0..n).map(|_| Poly::integer(rng.gen_range(-9..=9))).collect()
    }

    fn numeric(v: &PolyVector) -> Vec<BigRational> {
        v.iter().map(|x| x.as_constant().unwrap()).collect()
    }

    fn rank_of(n: usize, vs: &[PolyVector]) -> usize {
        let cols: Vec<Vec<BigRational>> = vs.iter().map(numeric).collect();
        let refs: Vec<&[BigRational]> = cols.iter().map(|c| c.as_slice()).collect();
        column_rank(n, &refs)
    }

    #[test]
    fn concurrency_polynomial() {
        let alg = Symbols { n: 3 };
        let l34 = Extensor::decomposable(&alg, vec![3, 4]);
        let l12 = Extensor::decomposable(&alg, vec![1, 2]);
        let point = l34.meet(&alg, &l12).unwrap();
        assert_eq!(point.step, 1);
        let l56 = Extensor::decomposable(&alg, vec![5, 6]);
        let value = point.join(&alg, &l56).unwrap().bracket_value(&alg).unwrap();
        assert_eq!(value.to_string(), "[123][456] - [124][356]");
    }

    #[test]
    fn concurrency_intermediate_vector() {
        let alg = Symbols { n: 3 };
        let point = Extensor::decomposable(&alg, vec![3, 4])
            .meet(&alg, &Extensor::decomposable(&alg, vec![1, 2]))
            .unwrap();
        let shown: Vec<String> = point
            .terms
            .iter()
            .map(|(c, v)| format!("({c}) p{}", v[0]))
            .collect();
        // [312] = [123] and [412] = [124]
        assert_eq!(shown, vec!["([123]) p4", "(-[124]) p3"]);
    }

    #[test]
    fn brackets_alternate() {
        assert_eq!(BracketPoly::bracket(&[2, 1, 3]), BracketPoly::bracket(&[1, 2, 3]).neg());
        assert!(BracketPoly::bracket(&[1, 1, 3]).is_zero());
        let e = [int_vec(&[1, 0, 0]), int_vec(&[0, 1, 0]), int_vec(&[0, 0, 1])];
        assert!(bracket(3, &e).unwrap().is_one());
        assert!(matches!(bracket(3, &e[..2]), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn join_of_basis_vectors() {
        let alg = Coordinates { n: 3 };
        let e1 = Extensor::vector(&alg, int_vec(&[1, 0, 0]));
        let e2 = Extensor::vector(&alg, int_vec(&[0, 1, 0]));
        let j = e1.join(&alg, &e2).unwrap();
        let p = j.plucker(&alg);
        assert_eq!(p[0].0, vec![0, 1]);
        assert!(p[0].1.is_one());
        assert!(p[1..].iter().all(|(_, x)| x.is_zero()));
        assert!(e1.join(&alg, &e1).unwrap().is_zero(&alg));
        let plane = Extensor::decomposable(&alg, vec![int_vec(&[1, 0, 0]), int_vec(&[0, 1, 0])]);
        assert!(matches!(
            plane.join(&alg, &plane),
            Err(Error::StepOverflow { .. })
        ));
    }

    #[test]
    fn meet_of_coordinate_planes() {
        let alg = Coordinates { n: 3 };
        let a = Extensor::decomposable(&alg, vec![int_vec(&[1, 0, 0]), int_vec(&[0, 1, 0])]);
        let b = Extensor::decomposable(&alg, vec![int_vec(&[0, 1, 0]), int_vec(&[0, 0, 1])]);
        let v = a.meet(&alg, &b).unwrap().to_vector(&alg).unwrap();
        assert!(v[0].is_zero() && v[2].is_zero() && !v[1].is_zero());
        let e1 = Extensor::vector(&alg, int_vec(&[1, 0, 0]));
        let m = e1.meet(&alg, &e1).unwrap();
        assert!(m.has_no_terms());
        assert!(matches!(m.to_vector(&alg), Err(Error::StepNotOne(0))));
    }

    #[test]
    fn join_is_associative() {
        let alg = Coordinates { n: 4 };
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..10 {
            let [a, b, c] = [0; 3].map(|_| Extensor::vector(&alg, random_vec(&mut rng, 4)));
            let left = a.join(&alg, &b).unwrap().join(&alg, &c).unwrap();
            let right = a.join(&alg, &b.join(&alg, &c).unwrap()).unwrap();
            assert_eq!(left.plucker(&alg), right.plucker(&alg));
        }
    }

    #[test]
    fn meet_spans_the_intersection() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for trial in 0..40 {
            let n = 3 + trial % 3;
            let alg = Coordinates { n };
            let j = rng.gen_range(1..n);
            let k = rng.gen_range(n - j..=n - 1).max(1);
            let mut vs: Vec<PolyVector> = (0..j).map(|_| random_vec(&mut rng, n)).collect();
            let ws: Vec<PolyVector> = (0..k).map(|_| random_vec(&mut rng, n)).collect();
            if trial % 4 == 0 && j >= 2 {
                // force a deficient span
                vs[1] = ws[0].clone();
                vs[0] = ws[0].iter().map(|x| x * &Poly::integer(2)).collect();
            }
            let v = Extensor::decomposable(&alg, vs.clone());
            let w = Extensor::decomposable(&alg, ws.clone());
            let meet = v.meet(&alg, &w).unwrap();
            let all: Vec<PolyVector> = vs.iter().chain(&ws).cloned().collect();
            let spans = rank_of(n, &all) == n
                && rank_of(n, &vs) == j
                && rank_of(n, &ws) == k;
            assert_eq!(!meet.is_zero(&alg), spans, "trial {trial}");
            if spans {
                // each factor of each term lies in both spans, up to the sum
                let dim = j + k - n;
                let p = meet.plucker(&alg);
                assert!(p.iter().any(|(_, x)| !x.is_zero()));
                if dim == 1 {
                    let u = meet.to_vector(&alg).unwrap();
                    let mut in_v = vs.clone();
                    in_v.push(u.clone());
                    let mut in_w = ws.clone();
                    in_w.push(u);
                    assert_eq!(rank_of(n, &in_v), j);
                    assert_eq!(rank_of(n, &in_w), k);
                }
            }
        }
    }

    #[test]
    fn meets_against_a_complement_give_a_basis() {
        // S of dimension k, T of dimension n - k with S ∩ T = 0; the vectors
        // (T ∨ v_i) ∧ S form a basis of S
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..20 {
            let n = 4;
            let k = 2;
            let alg = Coordinates { n };
            let s: Vec<PolyVector> = (0..k).map(|_| random_vec(&mut rng, n)).collect();
            let t: Vec<PolyVector> = (0..n - k).map(|_| random_vec(&mut rng, n)).collect();
            let vs: Vec<PolyVector> = (0..k).map(|_| random_vec(&mut rng, n)).collect();
            let st: Vec<PolyVector> = s.iter().chain(&t).cloned().collect();
            let tv: Vec<PolyVector> = t.iter().chain(&vs).cloned().collect();
            if rank_of(n, &st) < n || rank_of(n, &tv) < n {
                continue;
            }
            let s_ext = Extensor::decomposable(&alg, s.clone());
            let images: Vec<PolyVector> = vs
                .iter()
                .map(|v| {
                    let mut f = t.clone();
                    f.push(v.clone());
                    Extensor::decomposable(&alg, f)
                        .meet(&alg, &s_ext)
                        .unwrap()
                        .to_vector(&alg)
                        .unwrap()
                })
                .collect();
            assert_eq!(rank_of(n, &images), k);
            let together: Vec<PolyVector> = images.iter().chain(&s).cloned().collect();
            assert_eq!(rank_of(n, &together), k);
        }
    }
}
