//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! Variables are identified by index; names live with whoever owns the
//! variable universe (see [`PolyJson`]). Terms are kept in a `BTreeMap`
//! keyed by [`Monomial`], whose order is graded lexicographic with variable 0
//! the largest, so iteration order is canonical.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Product of variable powers, as sorted `(variable, exponent)` pairs with
/// positive exponents.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<(u32, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: usize) -> Self {
        Monomial(vec![(v as u32, 1)])
    }

    /// From a dense exponent vector.
    pub fn from_exponents(exps: &[u32]) -> Self {
        Monomial(
            exps.iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(v, &e)| (v as u32, e))
                .collect(),
        )
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn exponent(&self, v: usize) -> u32 {
        self.0
            .iter()
            .find(|&&(w, _)| w as usize == v)
            .map_or(0, |&(_, e)| e)
    }

    pub fn factors(&self) -> &[(u32, u32)] {
        &self.0
    }

    /// Dense exponents over `nvars` variables.
    pub fn to_exponents(&self, nvars: usize) -> Vec<u32> {
        let mut out = vec![0; nvars];
        for &(v, e) in &self.0 {
            out[v as usize] = e;
        }
        out
    }

    pub fn max_var(&self) -> Option<usize> {
        self.0.last().map(|&(v, _)| v as usize)
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    /// Lexicographic comparison of dense exponent vectors.
    fn lex_cmp(&self, other: &Monomial) -> Ordering {
        for (x, y) in self.0.iter().zip(&other.0) {
            if x.0 != y.0 {
                // the one mentioning the smaller variable index has a positive
                // exponent where the other has zero
                return if x.0 < y.0 { Ordering::Greater } else { Ordering::Less };
            }
            if x.1 != y.1 {
                return x.1.cmp(&y.1);
            }
        }
        self.0.len().cmp(&other.0.len())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.lex_cmp(other))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, BigRational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Poly::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Poly::term(c, Monomial::one())
    }

    pub fn integer(c: i64) -> Self {
        Poly::constant(BigRational::from_integer(BigInt::from(c)))
    }

    pub fn var(v: usize) -> Self {
        Poly::term(BigRational::one(), Monomial::var(v))
    }

    pub fn term(c: BigRational, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .is_some_and(|(m, c)| m.0.is_empty() && c.is_one())
    }

    /// The constant value, if this polynomial has no variables.
    pub fn as_constant(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => self
                .terms
                .iter()
                .next()
                .filter(|(m, _)| m.0.is_empty())
                .map(|(_, c)| c.clone()),
            _ => None,
        }
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in descending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter().rev()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    /// One more than the largest variable index used.
    pub fn num_vars(&self) -> usize {
        self.terms
            .keys()
            .filter_map(Monomial::max_var)
            .max()
            .map_or(0, |v| v + 1)
    }

    fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &BigRational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Poly {
        (0..e).fold(Poly::one(), |acc, _| &acc * self)
    }

    /// Value at `point`, where `point[v]` is the value of variable `v`.
    pub fn eval(&self, point: &[BigRational]) -> BigRational {
        if self.terms.is_empty() {
            return BigRational::zero();
        }
        // integer arithmetic over the common denominator L * prod b_v^E_v
        let nvars = self.num_vars();
        let mut top = vec![0u32; nvars];
        for m in self.terms.keys() {
            for &(v, e) in &m.0 {
                let t = &mut top[v as usize];
                *t = (*t).max(e);
            }
        }
        let powers = |x: &BigInt, k: u32| {
            let mut out = Vec::with_capacity(k as usize + 1);
            out.push(BigInt::one());
            for i in 0..k as usize {
                let next = &out[i] * x;
                out.push(next);
            }
            out
        };
        let num_pow: Vec<Vec<BigInt>> = (0..nvars).map(|v| powers(point[v].numer(), top[v])).collect();
        let den_pow: Vec<Vec<BigInt>> = (0..nvars).map(|v| powers(point[v].denom(), top[v])).collect();
        let lcm = self
            .terms
            .values()
            .fold(BigInt::one(), |acc, c| num_integer::Integer::lcm(&acc, c.denom()));
        let mut total = BigInt::zero();
        for (m, c) in &self.terms {
            let mut t = c.numer() * (&lcm / c.denom());
            let mut seen = 0;
            for (v, &exp) in top.iter().enumerate() {
                let e = if seen < m.0.len() && m.0[seen].0 as usize == v {
                    seen += 1;
                    m.0[seen - 1].1
                } else {
                    0
                };
                if exp == 0 {
                    continue;
                }
                if e > 0 {
                    t *= &num_pow[v][e as usize];
                }
                if exp > e {
                    t *= &den_pow[v][(exp - e) as usize];
                }
            }
            total += t;
        }
        let mut den = lcm;
        for (v, &exp) in top.iter().enumerate() {
            if exp > 0 {
                den *= &den_pow[v][exp as usize];
            }
        }
        BigRational::new(total, den)
    }

    /// Replaces each variable `v` by `images[v]` (variables past the end are
    /// kept as they are).
    pub fn substitute(&self, images: &[Poly]) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let mut t = Poly::constant(c.clone());
            for &(v, e) in &m.0 {
                let image = images
                    .get(v as usize)
                    .cloned()
                    .unwrap_or_else(|| Poly::var(v as usize));
                t = &t * &image.pow(e);
            }
            out = &out + &t;
        }
        out
    }

    /// Human-readable form using `names` for the variables.
    pub fn display_with(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (i, (m, c)) in self.terms().enumerate() {
            let negative = c < &BigRational::zero();
            let abs = if negative { -c.clone() } else { c.clone() };
            if i == 0 {
                if negative {
                    s.push('-');
                }
            } else {
                s.push_str(if negative { " - " } else { " + " });
            }
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || m.0.is_empty() {
                factors.push(abs.to_string());
            }
            for &(v, e) in &m.0 {
                let name = names
                    .get(v as usize)
                    .cloned()
                    .unwrap_or_else(|| format!("v{v}"));
                factors.push(if e == 1 { name } else { format!("{name}^{e}") });
            }
            let _ = write!(s, "{}", factors.join("*"));
        }
        s
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let (big, small) = if self.terms.len() >= rhs.terms.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut out = big.clone();
        for (m, c) in &small.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero();
        if self.is_zero() || rhs.is_zero() {
            return out;
        }
        if self.is_one() {
            return rhs.clone();
        }
        if rhs.is_one() {
            return self.clone();
        }
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, rhs: Poly) -> Poly {
        &self + &rhs
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        &self - &rhs
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

/// Determinant of a square matrix given by its columns, by Laplace expansion
/// along columns with the minors on each row subset cached.
pub fn determinant(cols: &[Vec<Poly>]) -> Poly {
    let n = cols.len();
    assert!(n <= 20, "determinant of size {n} is out of range");
    assert!(cols.iter().all(|c| c.len() == n), "matrix is not square");
    if n == 0 {
        return Poly::one();
    }
    // minors[rows] = det of the last |rows| columns on `rows`
    let mut minors: HashMap<u32, Poly> = HashMap::new();
    minors.insert(0, Poly::one());
    for k in 1..=n {
        let col = &cols[n - k];
        let mut next: HashMap<u32, Poly> = HashMap::new();
        for (&rows, minor) in &minors {
            if minor.is_zero() {
                continue;
            }
            for (r, x) in col.iter().enumerate().take(n) {
                if rows >> r & 1 == 1 || x.is_zero() {
                    continue;
                }
                // sign from the position of r among the rows of the larger minor
                let above = (rows & ((1u32 << r) - 1)).count_ones();
                let mut t = &col[r] * minor;
                if above % 2 == 1 {
                    t = -t;
                }
                let entry = next.entry(rows | 1 << r).or_default();
                *entry = &*entry + &t;
            }
        }
        minors = next;
    }
    minors.remove(&((1u32 << n) - 1)).unwrap_or_default()
}

/// Serialized term: coefficient as `"p/q"` (or `"p"`) and dense exponents.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub coef: String,
    pub exps: Vec<u32>,
}

/// Serialized polynomial; terms in descending graded-lex order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub vars: Vec<String>,
    pub terms: Vec<TermJson>,
}

impl PolyJson {
    pub fn from_poly(p: &Poly, vars: &[String]) -> PolyJson {
        assert!(
            p.num_vars() <= vars.len(),
            "polynomial uses more variables than names given"
        );
        PolyJson {
            vars: vars.to_vec(),
            terms: p
                .terms()
                .map(|(m, c)| TermJson {
                    coef: c.to_string(),
                    exps: m.to_exponents(vars.len()),
                })
                .collect(),
        }
    }

    /// Rebuilds the polynomial, mapping variables by name onto `universe`.
    /// Like [`PolyJson::from_poly`], listing only the variables that occur.
    pub fn compact(p: &Poly, vars: &[String]) -> PolyJson {
        let full = PolyJson::from_poly(p, vars);
        let used: Vec<usize> = (0..vars.len())
            .filter(|&v| full.terms.iter().any(|t| t.exps[v] > 0))
            .collect();
        PolyJson {
            vars: used.iter().map(|&v| vars[v].clone()).collect(),
            terms: full
                .terms
                .into_iter()
                .map(|t| TermJson {
                    coef: t.coef,
                    exps: used.iter().map(|&v| t.exps[v]).collect(),
                })
                .collect(),
        }
    }

    pub fn to_poly(&self, universe: &[String]) -> Result<Poly> {
        let index: Vec<usize> = self
            .vars
            .iter()
            .map(|name| {
                universe
                    .iter()
                    .position(|u| u == name)
                    .ok_or_else(|| Error::Parse(format!("unknown variable {name}")))
            })
            .collect::<Result<_>>()?;
        let mut p = Poly::zero();
        for t in &self.terms {
            if t.exps.len() != self.vars.len() {
                return Err(Error::Parse(format!(
                    "term has {} exponents for {} variables",
                    t.exps.len(),
                    self.vars.len()
                )));
            }
            let coef: BigRational = t
                .coef
                .parse()
                .map_err(|_| Error::Parse(format!("bad coefficient {:?}", t.coef)))?;
            let mut exps = vec![0u32; universe.len()];
            for (k, &e) in t.exps.iter().enumerate() {
                exps[index[k]] += e;
            }
            p.add_term(Monomial::from_exponents(&exps), coef);
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    fn naive_eval(p: &Poly, point: &[BigRational]) -> BigRational {
        let mut total = BigRational::zero();
        for (m, c) in p.terms() {
            let mut t = c.clone();
            for &(v, e) in m.factors() {
                for _ in 0..e {
                    t *= &point[v as usize];
                }
            }
            total += t;
        }
        total
    }

    proptest::proptest! {
        #[test]
        fn eval_matches_naive(
            terms in proptest::collection::vec(
                (-20i64..20, 1i64..4, proptest::collection::vec(0u32..3, 4)),
                0..8,
            ),
            point in proptest::collection::vec((-50i64..50, 1i64..50), 4),
        ) {
            let mut p = Poly::zero();
            for (num, den, exps) in &terms {
                let c = BigRational::new((*num).into(), (*den).into());
                p = &p + &Poly::term(c, Monomial::from_exponents(exps));
            }
            let point: Vec<BigRational> = point
                .iter()
                .map(|(a, b)| BigRational::new((*a).into(), (*b).into()))
                .collect();
            proptest::prop_assert_eq!(p.eval(&point), naive_eval(&p, &point));
        }
    }

    #[test]
    fn arithmetic_cancels_exactly() {
        let x = Poly::var(0);
        let y = Poly::var(1);
        let a = &(&x + &y) * &(&x - &y);
        let b = &(&x * &x) - &(&y * &y);
        assert_eq!(a, b);
        assert!((&a - &b).is_zero());
        assert_eq!(a.num_terms(), 2);
    }

    #[test]
    fn graded_lex_order() {
        // x0^2 > x0*x1 > x1^2 > x0 > x1 > 1
        let x = Poly::var(0);
        let y = Poly::var(1);
        let p = &(&(&(&(&x * &x) + &(&x * &y)) + &(&y * &y)) + &x) + &(&y + &Poly::one());
        let names = vec!["x".to_string(), "y".to_string()];
        assert_eq!(p.display_with(&names), "x^2 + x*y + y^2 + x + y + 1");
    }

    #[test]
    fn eval_and_substitute() {
        let x = Poly::var(0);
        let y = Poly::var(1);
        let p = &(&x * &y) + &Poly::integer(3);
        assert_eq!(p.eval(&[q(2), q(5)]), q(13));
        let s = p.substitute(&[&y + &Poly::one(), y.clone()]);
        assert_eq!(s.eval(&[q(100), q(2)]), q(9));
    }

    /// Sum over permutations of signed products.
    fn leibniz(cols: &[Vec<Poly>]) -> Poly {
        fn perms(k: usize) -> Vec<Vec<usize>> {
            if k == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for p in perms(k - 1) {
                for i in 0..=p.len() {
                    let mut q = p.clone();
                    q.insert(i, k - 1);
                    out.push(q);
                }
            }
            out
        }
        let n = cols.len();
        let mut total = Poly::zero();
        for p in perms(n) {
            let inversions = (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .filter(|&(i, j)| p[i] > p[j])
                .count();
            let mut t = Poly::one();
            for (c, &r) in p.iter().enumerate() {
                t = &t * &cols[c][r];
            }
            total = if inversions % 2 == 0 { &total + &t } else { &total - &t };
        }
        total
    }

    #[test]
    fn determinant_matches_permutation_sum() {
        for n in 1..=4 {
            let cols: Vec<Vec<Poly>> = (0..n)
                .map(|c| (0..n).map(|r| Poly::var(c * n + r)).collect())
                .collect();
            let det = determinant(&cols);
            assert_eq!(det, leibniz(&cols));
            assert_eq!(det.num_terms(), (1..=n).product::<usize>());
        }
        let e: Vec<Vec<Poly>> = (0..3)
            .map(|c| (0..3).map(|r| Poly::integer((r == c) as i64)).collect())
            .collect();
        assert!(determinant(&e).is_one());
        let x = Poly::var(0);
        let rep = vec![vec![x.clone(), Poly::one()], vec![x, Poly::one()]];
        assert!(determinant(&rep).is_zero());
    }

    #[test]
    fn json_round_trip() {
        let names: Vec<String> = ["a", "b"].iter().map(|s| s.to_string()).collect();
        let p = &Poly::var(0).scale(&BigRational::new(3.into(), 4.into())) - &Poly::var(1).pow(2);
        let json = PolyJson::from_poly(&p, &names);
        assert_eq!(json.terms[0].exps, vec![0, 2]);
        assert_eq!(json.terms[1].coef, "3/4");
        assert_eq!(json.to_poly(&names).unwrap(), p);
        let text = serde_json::to_string(&json).unwrap();
        let back: PolyJson = serde_json::from_str(&text).unwrap();
        assert_eq!(back, json);
    }
}
