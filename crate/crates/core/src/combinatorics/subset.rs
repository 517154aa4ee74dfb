use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Largest supported universe; subsets are stored as a single `u64` word.
pub const MAX_UNIVERSE: usize = 64;

/// A set of 1-based component indices, stored as a bitmask (index `i` is bit `i - 1`).
///
/// The `Ord` implementation is the lexicographic order on increasing index
/// sequences: `{1,2} < {1,2,3} < {1,3} < {2}`. Colex order is available through
/// [`Subset::colex_cmp`], which coincides with numeric order on the bitmask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Subset(u64);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub const fn from_bits(bits: u64) -> Self {
        Subset(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub fn from_indices<I>(indices: I) -> Result<Self>
    where
        I: IntoIterator<Item = usize>,
    {
        let mut bits = 0u64;
        for i in indices {
            if i == 0 || i > MAX_UNIVERSE {
                return Err(Error::IndexOutOfUniverse {
                    index: i,
                    n: MAX_UNIVERSE,
                });
            }
            bits |= 1 << (i - 1);
        }
        Ok(Subset(bits))
    }

    /// `{1, ..., n}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_UNIVERSE);
        if n >= 64 {
            Subset(u64::MAX)
        } else {
            Subset((1u64 << n) - 1)
        }
    }

    /// `{1, ..., l}`, the first subset of size `l` in both lex and colex order.
    pub fn initial(l: usize) -> Self {
        Self::full(l)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, i: usize) -> bool {
        (1..=MAX_UNIVERSE).contains(&i) && self.0 & (1 << (i - 1)) != 0
    }

    pub fn with(self, i: usize) -> Self {
        debug_assert!((1..=MAX_UNIVERSE).contains(&i));
        Subset(self.0 | 1 << (i - 1))
    }

    pub fn without(self, i: usize) -> Self {
        debug_assert!((1..=MAX_UNIVERSE).contains(&i));
        Subset(self.0 & !(1 << (i - 1)))
    }

    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_proper_subset_of(self, other: Subset) -> bool {
        self != other && self.is_subset_of(other)
    }

    pub fn union(self, other: Subset) -> Self {
        Subset(self.0 | other.0)
    }

    pub fn intersection(self, other: Subset) -> Self {
        Subset(self.0 & other.0)
    }

    pub fn intersects(self, other: Subset) -> bool {
        self.0 & other.0 != 0
    }

    /// Complement within `{1, ..., n}`.
    pub fn complement(self, n: usize) -> Self {
        Subset(!self.0 & Self::full(n).0)
    }

    pub fn max_element(self) -> Option<usize> {
        (self.0 != 0).then(|| 64 - self.0.leading_zeros() as usize)
    }

    /// True when every member lies in `1..=n`.
    pub fn fits(self, n: usize) -> bool {
        self.is_subset_of(Self::full(n))
    }

    /// Members in increasing order.
    pub fn iter(self) -> Members {
        Members(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Colex order: the set holding the largest element of the symmetric
    /// difference is the greater one.
    pub fn colex_cmp(&self, other: &Subset) -> Ordering {
        self.0.cmp(&other.0)
    }
}

/// Iterator over the members of a [`Subset`], smallest first.
#[derive(Clone, Debug)]
pub struct Members(u64);

impl Iterator for Members {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i + 1)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Members {}

impl Ord for Subset {
    fn cmp(&self, other: &Self) -> Ordering {
        if self.0 == other.0 {
            return Ordering::Equal;
        }
        // Both sequences agree on every element below the lowest differing bit.
        let diff = self.0 ^ other.0;
        let low = diff & diff.wrapping_neg();
        let above = !((low << 1).wrapping_sub(1));
        if self.0 & low != 0 {
            // `self` continues with `low`; `other` either ended or continues higher.
            if other.0 & above == 0 {
                Ordering::Greater
            } else {
                Ordering::Less
            }
        } else if self.0 & above == 0 {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }
}

impl PartialOrd for Subset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{i}")?;
        }
        f.write_str("}")
    }
}

/// A duplicate-free collection of subsets of `{1, ..., n}`, kept in lex order.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SubsetFamily {
    n: usize,
    sets: Vec<Subset>,
}

impl SubsetFamily {
    /// Builds a family, rejecting duplicates and members outside the universe.
    pub fn new<I>(n: usize, sets: I) -> Result<Self>
    where
        I: IntoIterator<Item = Subset>,
    {
        check_universe(n)?;
        let mut sets: Vec<Subset> = sets.into_iter().collect();
        for s in &sets {
            check_fits(*s, n)?;
        }
        sets.sort_unstable();
        if let Some(w) = sets.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateMember(w[0].to_string()));
        }
        Ok(SubsetFamily { n, sets })
    }

    /// Builds a family, silently merging duplicates.
    pub fn from_sets_dedup<I>(n: usize, sets: I) -> Result<Self>
    where
        I: IntoIterator<Item = Subset>,
    {
        check_universe(n)?;
        let mut sets: Vec<Subset> = sets.into_iter().collect();
        for s in &sets {
            check_fits(*s, n)?;
        }
        sets.sort_unstable();
        sets.dedup();
        Ok(SubsetFamily { n, sets })
    }

    pub fn empty(n: usize) -> Result<Self> {
        Self::new(n, [])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    /// Members in lex order.
    pub fn sets(&self) -> &[Subset] {
        &self.sets
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Subset> {
        self.sets.iter()
    }

    pub fn contains(&self, s: Subset) -> bool {
        self.sets.binary_search(&s).is_ok()
    }

    /// Common cardinality of all members, `None` for an empty or mixed family.
    pub fn uniform_size(&self) -> Option<usize> {
        let first = self.sets.first()?.len();
        self.sets.iter().all(|s| s.len() == first).then_some(first)
    }

    /// Number of members of each cardinality `0..=n`.
    pub fn size_profile(&self) -> Vec<usize> {
        let mut counts = vec![0; self.n + 1];
        for s in &self.sets {
            counts[s.len()] += 1;
        }
        counts
    }

    /// True when every subset of every member is also a member.
    pub fn is_downward_closed(&self) -> bool {
        self.sets
            .iter()
            .all(|s| s.iter().all(|i| self.contains(s.without(i))))
    }

    pub fn into_sets(self) -> Vec<Subset> {
        self.sets
    }
}

impl<'a> IntoIterator for &'a SubsetFamily {
    type Item = &'a Subset;
    type IntoIter = std::slice::Iter<'a, Subset>;

    fn into_iter(self) -> Self::IntoIter {
        self.sets.iter()
    }
}

pub(crate) fn check_universe(n: usize) -> Result<()> {
    if n == 0 || n > MAX_UNIVERSE {
        Err(Error::InvalidUniverse(n))
    } else {
        Ok(())
    }
}

pub(crate) fn check_fits(s: Subset, n: usize) -> Result<()> {
    match s.max_element() {
        Some(m) if m > n => Err(Error::IndexOutOfUniverse { index: m, n }),
        _ => Ok(()),
    }
}
