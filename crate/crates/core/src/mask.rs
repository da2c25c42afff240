//! Subsets of a small finite universe, stored as bit vectors.
//!
//! Point `i` of a [`Universe`] is bit `i` of a [`SubsetMask`]. Labels are
//! bound to bit positions in the order they were given, so the numeric
//! order of masks is the canonical order used for every family and every
//! "first witness" in this crate.

use std::fmt;
use std::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest universe any operator accepts.
pub const MAX_POINTS: usize = 8;

/// A subset of a universe with at most [`MAX_POINTS`] points.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SubsetMask(u16);

impl SubsetMask {
    pub const EMPTY: SubsetMask = SubsetMask(0);

    pub const fn from_bits(bits: u16) -> Self {
        SubsetMask(bits)
    }

    pub const fn bits(self) -> u16 {
        self.0
    }

    /// Index of this subset in a power-set table.
    pub const fn index(self) -> usize {
        self.0 as usize
    }

    pub const fn singleton(point: usize) -> Self {
        SubsetMask(1 << point)
    }

    /// The full set on `n` points.
    pub const fn full(n: usize) -> Self {
        SubsetMask(((1u32 << n) - 1) as u16)
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub const fn contains(self, point: usize) -> bool {
        self.0 & (1 << point) != 0
    }

    pub const fn is_subset_of(self, other: SubsetMask) -> bool {
        self.0 & !other.0 == 0
    }

    pub const fn is_disjoint(self, other: SubsetMask) -> bool {
        self.0 & other.0 == 0
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn with(self, point: usize) -> Self {
        SubsetMask(self.0 | (1 << point))
    }

    /// Complement relative to the full set on `n` points.
    pub const fn complement(self, n: usize) -> Self {
        SubsetMask(!self.0 & Self::full(n).0)
    }

    /// Points of this subset in ascending order.
    pub fn points(self) -> impl Iterator<Item = usize> {
        let bits = self.0;
        (0..16).filter(move |i| bits & (1 << i) != 0)
    }

    /// All supersets of `self` inside the full set on `n` points, ascending.
    pub fn supersets(self, n: usize) -> impl Iterator<Item = SubsetMask> {
        let free = self.complement(n);
        // enumerate submasks of `free` in ascending numeric order of the result
        let mut subs: Vec<u16> = Vec::with_capacity(1 << free.len());
        let mut s: u16 = 0;
        loop {
            subs.push(s);
            if s == free.0 {
                break;
            }
            s = (s.wrapping_sub(free.0)) & free.0;
        }
        let base = self.0;
        subs.into_iter().map(move |s| SubsetMask(base | s))
    }

    /// All subsets of the full set on `n` points, in canonical order.
    pub fn all(n: usize) -> impl Iterator<Item = SubsetMask> + Clone {
        (0..(1u32 << n)).map(|b| SubsetMask(b as u16))
    }
}

impl fmt::Debug for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, p) in self.points().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "}}")
    }
}

impl BitOr for SubsetMask {
    type Output = SubsetMask;
    fn bitor(self, rhs: Self) -> Self {
        SubsetMask(self.0 | rhs.0)
    }
}

impl BitOrAssign for SubsetMask {
    fn bitor_assign(&mut self, rhs: Self) {
        self.0 |= rhs.0;
    }
}

impl BitAnd for SubsetMask {
    type Output = SubsetMask;
    fn bitand(self, rhs: Self) -> Self {
        SubsetMask(self.0 & rhs.0)
    }
}

impl BitAndAssign for SubsetMask {
    fn bitand_assign(&mut self, rhs: Self) {
        self.0 &= rhs.0;
    }
}

impl Sub for SubsetMask {
    type Output = SubsetMask;
    fn sub(self, rhs: Self) -> Self {
        SubsetMask(self.0 & !rhs.0)
    }
}

/// The ground set: a point count plus one label per point.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Universe {
    labels: Vec<String>,
}

impl Universe {
    pub fn new<S: Into<String>>(labels: impl IntoIterator<Item = S>) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() || labels.len() > MAX_POINTS {
            return Err(Error::InvalidUniverseSize {
                got: labels.len(),
                max: MAX_POINTS,
            });
        }
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        Ok(Universe { labels })
    }

    /// `n` points labelled `a`, `b`, `c`, ...
    pub fn standard(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_POINTS {
            return Err(Error::InvalidUniverseSize {
                got: n,
                max: MAX_POINTS,
            });
        }
        Universe::new((0..n).map(|i| ((b'a' + i as u8) as char).to_string()))
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, point: usize) -> &str {
        &self.labels[point]
    }

    pub fn full(&self) -> SubsetMask {
        SubsetMask::full(self.size())
    }

    /// Number of subsets, i.e. the length of a power-set table.
    pub fn power_set_len(&self) -> usize {
        1 << self.size()
    }

    pub fn subsets(&self) -> impl Iterator<Item = SubsetMask> + Clone {
        SubsetMask::all(self.size())
    }

    pub fn complement(&self, mask: SubsetMask) -> SubsetMask {
        mask.complement(self.size())
    }

    pub fn fits(&self, mask: SubsetMask) -> bool {
        mask.is_subset_of(self.full())
    }

    pub fn check(&self, mask: SubsetMask) -> Result<SubsetMask> {
        if self.fits(mask) {
            Ok(mask)
        } else {
            Err(Error::MaskOutOfRange {
                mask: mask.bits(),
                size: self.size(),
            })
        }
    }

    pub fn point(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub fn mask_of<S: AsRef<str>>(&self, labels: impl IntoIterator<Item = S>) -> Result<SubsetMask> {
        labels
            .into_iter()
            .try_fold(SubsetMask::EMPTY, |m, l| Ok(m.with(self.point(l.as_ref())?)))
    }

    /// Parses a brace literal such as `{a,b}`; `[a,b]`, `{}` and a bare
    /// comma list are accepted too.
    pub fn parse_set(&self, text: &str) -> Result<SubsetMask> {
        let t = text.trim();
        let inner = t
            .strip_prefix('{')
            .and_then(|s| s.strip_suffix('}'))
            .or_else(|| t.strip_prefix('[').and_then(|s| s.strip_suffix(']')))
            .unwrap_or(t);
        inner
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .try_fold(SubsetMask::EMPTY, |m, l| Ok(m.with(self.point(l)?)))
    }

    pub fn labels_of(&self, mask: SubsetMask) -> Vec<String> {
        mask.points().map(|p| self.labels[p].clone()).collect()
    }

    /// `{a,b}` style rendering; the empty set renders as `{}`.
    pub fn render(&self, mask: SubsetMask) -> String {
        format!("{{{}}}", self.labels_of(mask).join(","))
    }

    pub fn render_family(&self, family: &SubsetFamily) -> String {
        let parts: Vec<String> = family.iter().map(|m| self.render(m)).collect();
        format!("[{}]", parts.join(", "))
    }
}

/// A duplicate-free family of subsets kept in canonical (ascending) order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SubsetFamily {
    members: Vec<SubsetMask>,
}

impl SubsetFamily {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn members(&self) -> &[SubsetMask] {
        &self.members
    }

    pub fn iter(&self) -> impl Iterator<Item = SubsetMask> + '_ {
        self.members.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, mask: SubsetMask) -> bool {
        self.members.binary_search(&mask).is_ok()
    }

    pub fn insert(&mut self, mask: SubsetMask) -> bool {
        match self.members.binary_search(&mask) {
            Ok(_) => false,
            Err(pos) => {
                self.members.insert(pos, mask);
                true
            }
        }
    }

    /// `{ X − A : A ∈ self }` over `n` points.
    pub fn complements(&self, n: usize) -> SubsetFamily {
        self.iter().map(|m| m.complement(n)).collect()
    }

    pub fn is_subfamily_of(&self, other: &SubsetFamily) -> bool {
        self.iter().all(|m| other.contains(m))
    }
}

impl FromIterator<SubsetMask> for SubsetFamily {
    fn from_iter<I: IntoIterator<Item = SubsetMask>>(iter: I) -> Self {
        let mut members: Vec<SubsetMask> = iter.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        SubsetFamily { members }
    }
}

impl<'a> IntoIterator for &'a SubsetFamily {
    type Item = SubsetMask;
    type IntoIter = std::iter::Copied<std::slice::Iter<'a, SubsetMask>>;
    fn into_iter(self) -> Self::IntoIter {
        self.members.iter().copied()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn supersets_ascending() {
        let a = SubsetMask::from_bits(0b001);
        let sup: Vec<u16> = a.supersets(3).map(|m| m.bits()).collect();
        assert_eq!(sup, vec![0b001, 0b011, 0b101, 0b111]);
        assert_eq!(SubsetMask::EMPTY.supersets(3).count(), 8);
        assert_eq!(SubsetMask::full(3).supersets(3).count(), 1);
    }

    #[test]
    fn parse_and_render() {
        let u = Universe::standard(3).unwrap();
        let m = u.parse_set("{a, c}").unwrap();
        assert_eq!(m.bits(), 0b101);
        assert_eq!(u.render(m), "{a,c}");
        assert_eq!(u.parse_set("{}").unwrap(), SubsetMask::EMPTY);
        assert_eq!(u.parse_set("[b]").unwrap().bits(), 0b010);
        assert!(matches!(u.parse_set("{d}"), Err(Error::UnknownLabel(_))));
    }

    #[test]
    fn universe_validation() {
        assert!(Universe::new(Vec::<String>::new()).is_err());
        assert_eq!(
            Universe::new(["a", "a"]),
            Err(Error::DuplicateLabel("a".into()))
        );
        assert!(Universe::standard(9).is_err());
        let u = Universe::standard(8).unwrap();
        assert_eq!(u.full().bits(), 0xff);
        assert!(u.check(SubsetMask::from_bits(0x100)).is_err());
    }

    #[test]
    fn family_is_canonical() {
        let f: SubsetFamily = [3u16, 1, 3, 0]
            .into_iter()
            .map(SubsetMask::from_bits)
            .collect();
        assert_eq!(
            f.members().iter().map(|m| m.bits()).collect::<Vec<_>>(),
            vec![0, 1, 3]
        );
        assert!(f.contains(SubsetMask::from_bits(1)));
        assert!(!f.contains(SubsetMask::from_bits(2)));
    }
}
