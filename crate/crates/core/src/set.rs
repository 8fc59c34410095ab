//! Small subsets of a 1-based ground set, stored as a bitmask.
//!
//! Element `e` occupies bit `e - 1`, so labels run from 1 to [`MAX_ELEMENTS`].
//! Ordering of `ElementSet` values is by the raw mask; use
//! [`ElementSet::lex_cmp`] when a lexicographic order on the sorted element
//! lists is needed.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub const MAX_ELEMENTS: usize = 32;

#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementSet(u32);

impl ElementSet {
    pub const EMPTY: ElementSet = ElementSet(0);

    pub fn from_bits(bits: u32) -> Self {
        ElementSet(bits)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    /// `{1, ..., d}`.
    pub fn full(d: usize) -> Self {
        assert!(d <= MAX_ELEMENTS, "ground set of size {d} exceeds {MAX_ELEMENTS}");
        if d == MAX_ELEMENTS {
            ElementSet(u32::MAX)
        } else {
            ElementSet((1u32 << d) - 1)
        }
    }

    pub fn singleton(e: usize) -> Self {
        debug_assert!((1..=MAX_ELEMENTS).contains(&e));
        ElementSet(1 << (e - 1))
    }

    /// Builds a set, returning the first label outside `1..=MAX_ELEMENTS`.
    pub fn try_from_elements<I: IntoIterator<Item = usize>>(elements: I) -> Result<Self, usize> {
        let mut bits = 0u32;
        for e in elements {
            if e == 0 || e > MAX_ELEMENTS {
                return Err(e);
            }
            bits |= 1 << (e - 1);
        }
        Ok(ElementSet(bits))
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains(self, e: usize) -> bool {
        (1..=MAX_ELEMENTS).contains(&e) && self.0 & (1 << (e - 1)) != 0
    }

    pub fn with(self, e: usize) -> Self {
        self | ElementSet::singleton(e)
    }

    pub fn without(self, e: usize) -> Self {
        self - ElementSet::singleton(e)
    }

    pub fn is_subset(self, other: ElementSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_proper_subset(self, other: ElementSet) -> bool {
        self.is_subset(other) && self != other
    }

    /// Smallest element, if any.
    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize + 1)
    }

    /// Largest element, if any.
    pub fn max(self) -> Option<usize> {
        (self.0 != 0).then(|| 32 - self.0.leading_zeros() as usize)
    }

    pub fn iter(self) -> Elements {
        Elements(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Lexicographic comparison of the ascending element lists.
    pub fn lex_cmp(self, other: ElementSet) -> Ordering {
        self.iter().cmp(other.iter())
    }

    /// All subsets of `self`, in increasing mask order (so every subset is
    /// visited after all of its own subsets).
    pub fn subsets(self) -> Subsets {
        Subsets {
            universe: self.0,
            next: Some(0),
        }
    }

    /// All `k`-element subsets of `self`, in lexicographic order of their
    /// ascending element lists.
    pub fn combinations(self, k: usize) -> Combinations {
        let elements = self.to_vec();
        let indices = (k <= elements.len()).then(|| (0..k).collect());
        Combinations { elements, indices }
    }
}

impl std::ops::BitOr for ElementSet {
    type Output = ElementSet;
    fn bitor(self, rhs: ElementSet) -> ElementSet {
        ElementSet(self.0 | rhs.0)
    }
}

impl std::ops::BitAnd for ElementSet {
    type Output = ElementSet;
    fn bitand(self, rhs: ElementSet) -> ElementSet {
        ElementSet(self.0 & rhs.0)
    }
}

impl std::ops::Sub for ElementSet {
    type Output = ElementSet;
    fn sub(self, rhs: ElementSet) -> ElementSet {
        ElementSet(self.0 & !rhs.0)
    }
}

impl std::ops::BitOrAssign for ElementSet {
    fn bitor_assign(&mut self, rhs: ElementSet) {
        self.0 |= rhs.0;
    }
}

impl FromIterator<usize> for ElementSet {
    /// Panics on labels outside `1..=MAX_ELEMENTS`; use
    /// [`ElementSet::try_from_elements`] for untrusted input.
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        ElementSet::try_from_elements(iter).unwrap_or_else(|e| panic!("element {e} out of range"))
    }
}

impl IntoIterator for ElementSet {
    type Item = usize;
    type IntoIter = Elements;
    fn into_iter(self) -> Elements {
        self.iter()
    }
}

pub struct Elements(u32);

impl Iterator for Elements {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let e = self.0.trailing_zeros() as usize + 1;
        self.0 &= self.0 - 1;
        Some(e)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Elements {}

pub struct Subsets {
    universe: u32,
    next: Option<u32>,
}

impl Iterator for Subsets {
    type Item = ElementSet;
    fn next(&mut self) -> Option<ElementSet> {
        let current = self.next?;
        self.next = if current == self.universe {
            None
        } else {
            // next submask in increasing order
            Some((current.wrapping_sub(self.universe)) & self.universe)
        };
        Some(ElementSet(current))
    }
}

pub struct Combinations {
    elements: Vec<usize>,
    indices: Option<Vec<usize>>,
}

impl Iterator for Combinations {
    type Item = ElementSet;
    fn next(&mut self) -> Option<ElementSet> {
        let indices = self.indices.as_mut()?;
        let out = indices.iter().map(|&i| self.elements[i]).collect();
        let n = self.elements.len();
        let k = indices.len();
        let mut i = k;
        loop {
            if i == 0 {
                self.indices = None;
                break;
            }
            i -= 1;
            if indices[i] < n - k + i {
                indices[i] += 1;
                for j in i + 1..k {
                    indices[j] = indices[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, e) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("}")
    }
}

impl Serialize for ElementSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for ElementSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let elements = Vec::<usize>::deserialize(deserializer)?;
        ElementSet::try_from_elements(elements).map_err(|e| {
            serde::de::Error::custom(format!("element {e} outside 1..={MAX_ELEMENTS}"))
        })
    }
}
