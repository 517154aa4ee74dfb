//! Coherent systems, represented canonically by their minimal cut sets.
//!
//! A cut set is a set of components whose joint failure brings the system
//! down. Supersets of cut sets are cut sets, so the antichain of minimal cut
//! sets determines the structure function completely.

use std::fmt;

use num_bigint::BigUint;

use crate::combinatorics::{check_fits, check_universe, Subset, SubsetFamily};
use crate::error::{Error, Result};

/// Largest universe for which the `2^n` truth table is enumerated.
pub const MAX_ENUMERATION_UNIVERSE: usize = 25;

/// A non-empty family of non-empty subsets with no inclusions between members,
/// stored in lex order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AntichainFamily {
    n: usize,
    sets: Vec<Subset>,
}

impl AntichainFamily {
    pub fn new<I>(n: usize, sets: I) -> Result<Self>
    where
        I: IntoIterator<Item = Subset>,
    {
        let family = SubsetFamily::new(n, sets)?;
        Self::from_family(family)
    }

    /// Parses 1-based index lists, e.g. `[[1, 2], [1, 3]]`.
    pub fn from_index_lists<I, J>(n: usize, lists: I) -> Result<Self>
    where
        I: IntoIterator<Item = J>,
        J: IntoIterator<Item = usize>,
    {
        check_universe(n)?;
        let mut sets = Vec::new();
        for list in lists {
            let s = Subset::from_indices(list)?;
            check_fits(s, n)?;
            sets.push(s);
        }
        Self::new(n, sets)
    }

    fn from_family(family: SubsetFamily) -> Result<Self> {
        if family.is_empty() {
            return Err(Error::EmptyFamily);
        }
        if family.contains(Subset::EMPTY) {
            return Err(Error::EmptyMember);
        }
        let sets = family.sets();
        for (i, a) in sets.iter().enumerate() {
            for b in &sets[i + 1..] {
                let (sub, sup) = if a.is_subset_of(*b) {
                    (a, b)
                } else if b.is_subset_of(*a) {
                    (b, a)
                } else {
                    continue;
                };
                return Err(Error::NotAntichain {
                    sub: sub.to_string(),
                    sup: sup.to_string(),
                });
            }
        }
        let n = family.n();
        Ok(AntichainFamily {
            n,
            sets: family.into_sets(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    /// Always false; kept for API symmetry with `len`.
    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn sets(&self) -> &[Subset] {
        &self.sets
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Subset> {
        self.sets.iter()
    }

    pub fn to_index_lists(&self) -> Vec<Vec<usize>> {
        self.sets.iter().map(|s| s.to_vec()).collect()
    }

    pub fn to_family(&self) -> SubsetFamily {
        SubsetFamily::new(self.n, self.sets.iter().copied()).expect("antichain is a valid family")
    }
}

impl fmt::Debug for AntichainFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} ", self.n)?;
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for AntichainFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, s) in self.sets.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{s}")?;
        }
        f.write_str("}")
    }
}

/// The members of `family` that have no proper subset inside `family`.
pub fn extract_minimal(family: &SubsetFamily) -> Result<AntichainFamily> {
    if family.is_empty() {
        return Err(Error::EmptyFamily);
    }
    if family.contains(Subset::EMPTY) {
        return Err(Error::EmptyMember);
    }
    let mut by_size: Vec<Subset> = family.sets().to_vec();
    by_size.sort_by_key(|s| s.len());
    // A proper subset is strictly smaller, so comparing against the minimal
    // members already kept is enough.
    let mut kept: Vec<Subset> = Vec::new();
    for s in by_size {
        if !kept.iter().any(|k| k.is_subset_of(s)) {
            kept.push(s);
        }
    }
    AntichainFamily::new(family.n(), kept)
}

/// A coherent system on components `1..=n`, identified with its minimal cut sets.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct System {
    cuts: AntichainFamily,
}

impl System {
    pub fn new(minimal_cuts: AntichainFamily) -> Self {
        System { cuts: minimal_cuts }
    }

    pub fn from_index_lists<I, J>(n: usize, lists: I) -> Result<Self>
    where
        I: IntoIterator<Item = J>,
        J: IntoIterator<Item = usize>,
    {
        AntichainFamily::from_index_lists(n, lists).map(System::new)
    }

    /// Minimal cuts `{1}, ..., {l}`: the system fails as soon as any of the
    /// first `l` components fails.
    pub fn first_singletons(n: usize, l: usize) -> Result<Self> {
        check_l(n, l)?;
        Self::from_index_lists(n, (1..=l).map(|i| [i]))
    }

    /// The single minimal cut `{1, ..., l}`; dual of [`System::first_singletons`].
    pub fn first_block(n: usize, l: usize) -> Result<Self> {
        check_l(n, l)?;
        Self::from_index_lists(n, [1..=l])
    }

    pub fn n(&self) -> usize {
        self.cuts.n
    }

    pub fn min_cut_sets(&self) -> &AntichainFamily {
        &self.cuts
    }

    /// True when losing every component in `failed` brings the system down.
    pub fn is_cut(&self, failed: Subset) -> bool {
        self.cuts.iter().any(|c| c.is_subset_of(failed))
    }

    /// Structure function: `true` (up) unless the failed components, the
    /// complement of `working`, contain a minimal cut set.
    pub fn evaluate(&self, working: Subset) -> Result<bool> {
        check_fits(working, self.n())?;
        Ok(!self.is_cut(working.complement(self.n())))
    }

    /// Indicator of cut sets over all `2^n` subsets, indexed by bitmask.
    pub(crate) fn cut_table(&self) -> Result<Vec<bool>> {
        let n = self.n();
        if n > MAX_ENUMERATION_UNIVERSE {
            return Err(Error::Capacity {
                what: "subset enumeration universe",
                limit: MAX_ENUMERATION_UNIVERSE,
                actual: n,
            });
        }
        let size = 1usize << n;
        let mut cut = vec![false; size];
        for c in self.cuts.iter() {
            cut[c.bits() as usize] = true;
        }
        for i in 0..n {
            let bit = 1usize << i;
            for mask in 0..size {
                if mask & bit != 0 && cut[mask ^ bit] {
                    cut[mask] = true;
                }
            }
        }
        Ok(cut)
    }

    /// The dual system, whose minimal cut sets are the minimal path sets here.
    pub fn dual(&self) -> Result<System> {
        let n = self.n();
        let cut = self.cut_table()?;
        let full = (1usize << n) - 1;
        // P is a path set iff its complement is not a cut set
        let path = |mask: usize| !cut[full & !mask];
        let mut minimal = Vec::new();
        for mask in 1..=full {
            if !path(mask) {
                continue;
            }
            let mut rest = mask;
            let mut is_min = true;
            while rest != 0 {
                let bit = rest & rest.wrapping_neg();
                rest ^= bit;
                if path(mask ^ bit) {
                    is_min = false;
                    break;
                }
            }
            if is_min {
                minimal.push(Subset::from_bits(mask as u64));
            }
        }
        AntichainFamily::new(n, minimal).map(System::new)
    }

    /// Entry `l - 1` counts all cut sets (minimal or not) of cardinality `l`.
    pub fn cut_counts_by_size(&self) -> Result<Vec<BigUint>> {
        let n = self.n();
        let cut = self.cut_table()?;
        let mut counts = vec![0u64; n + 1];
        for (mask, &is_cut) in cut.iter().enumerate() {
            if is_cut {
                counts[mask.count_ones() as usize] += 1;
            }
        }
        Ok(counts[1..].iter().map(|&c| BigUint::from(c)).collect())
    }

    /// Renames component `i` to `perm[i - 1]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<System> {
        let n = self.n();
        if perm.len() != n {
            return Err(Error::LengthMismatch {
                expected: n,
                found: perm.len(),
            });
        }
        let image = Subset::from_indices(perm.iter().copied())?;
        if image != Subset::full(n) {
            return Err(Error::InvalidPermutation {
                perm: format!("{perm:?}"),
                n,
            });
        }
        let sets = self
            .cuts
            .iter()
            .map(|s| Subset::from_indices(s.iter().map(|i| perm[i - 1])))
            .collect::<Result<Vec<_>>>()?;
        AntichainFamily::new(n, sets).map(System::new)
    }
}

impl fmt::Display for System {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.cuts, f)
    }
}

fn check_l(n: usize, l: usize) -> Result<()> {
    check_universe(n)?;
    if l == 0 || l > n {
        return Err(Error::IndexOutOfUniverse { index: l, n });
    }
    Ok(())
}

pub fn evaluate(system: &System, working: Subset) -> Result<bool> {
    system.evaluate(working)
}

pub fn dualize(system: &System) -> Result<System> {
    system.dual()
}

pub fn cut_counts_by_size(system: &System) -> Result<Vec<BigUint>> {
    system.cut_counts_by_size()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[usize]) -> Subset {
        Subset::from_indices(v.iter().copied()).unwrap()
    }

    fn sys(n: usize, lists: &[&[usize]]) -> System {
        System::from_index_lists(n, lists.iter().map(|l| l.iter().copied())).unwrap()
    }

    fn fam(n: usize, lists: &[&[usize]]) -> SubsetFamily {
        SubsetFamily::new(n, lists.iter().map(|l| set(l))).unwrap()
    }

    fn big(v: &[u64]) -> Vec<BigUint> {
        v.iter().map(|&x| BigUint::from(x)).collect()
    }

    #[test]
    fn antichain_invariants() {
        assert_eq!(
            AntichainFamily::new(3, []).unwrap_err(),
            Error::EmptyFamily
        );
        assert_eq!(
            AntichainFamily::new(3, [Subset::EMPTY]).unwrap_err(),
            Error::EmptyMember
        );
        assert!(matches!(
            AntichainFamily::new(3, [set(&[1]), set(&[1, 2])]),
            Err(Error::NotAntichain { .. })
        ));
        assert!(AntichainFamily::from_index_lists(3, [vec![4]]).is_err());
        let a = AntichainFamily::from_index_lists(4, [vec![2, 3, 4], vec![1, 4], vec![1, 2]])
            .unwrap();
        assert_eq!(a.to_string(), "{{1,2},{1,4},{2,3,4}}");
    }

    #[test]
    fn extract_minimal_examples() {
        let f = fam(3, &[&[1, 2], &[1, 2, 3], &[1, 3]]);
        assert_eq!(
            extract_minimal(&f).unwrap().to_index_lists(),
            vec![vec![1, 2], vec![1, 3]]
        );

        // union of the lex segments 0, 3, 7, 5, 1 at n = 5
        let segments: &[&[usize]] = &[
            &[1, 2], &[1, 3], &[1, 4],
            &[1, 2, 3], &[1, 2, 4], &[1, 2, 5], &[1, 3, 4], &[1, 3, 5], &[1, 4, 5], &[2, 3, 4],
            &[1, 2, 3, 4], &[1, 2, 3, 5], &[1, 2, 4, 5], &[1, 3, 4, 5], &[2, 3, 4, 5],
            &[1, 2, 3, 4, 5],
        ];
        assert_eq!(
            extract_minimal(&fam(5, segments)).unwrap().to_index_lists(),
            vec![vec![1, 2], vec![1, 3], vec![1, 4], vec![2, 3, 4]]
        );

        let anti = fam(4, &[&[1, 2], &[3], &[2, 4]]);
        assert_eq!(extract_minimal(&anti).unwrap().to_family(), anti);

        assert_eq!(
            extract_minimal(&SubsetFamily::empty(3).unwrap()).unwrap_err(),
            Error::EmptyFamily
        );
        assert_eq!(
            extract_minimal(&fam(3, &[&[], &[1]])).unwrap_err(),
            Error::EmptyMember
        );
    }

    #[test]
    fn evaluate_examples() {
        let s = sys(5, &[&[1, 2], &[1, 3], &[1, 4], &[2, 3, 4]]);
        assert!(!s.evaluate(set(&[2, 3, 5])).unwrap());
        assert!(s.evaluate(Subset::full(5)).unwrap());
        assert!(!s.evaluate(Subset::EMPTY).unwrap());
        assert!(s.evaluate(set(&[6])).is_err());
    }

    #[test]
    fn evaluate_is_monotone() {
        let s = sys(5, &[&[1, 2], &[3, 4], &[2, 5]]);
        for a in 0u64..32 {
            for b in 0u64..32 {
                if a & !b == 0 {
                    let (ea, eb) = (
                        s.evaluate(Subset::from_bits(a)).unwrap(),
                        s.evaluate(Subset::from_bits(b)).unwrap(),
                    );
                    assert!(!ea || eb);
                }
            }
        }
    }

    #[test]
    fn dual_examples() {
        for l in 1..=5 {
            let series = System::first_singletons(5, l).unwrap();
            let block = System::first_block(5, l).unwrap();
            assert_eq!(series.dual().unwrap(), block);
            assert_eq!(block.dual().unwrap(), series);
        }
        let two_of_three = sys(3, &[&[1, 2], &[1, 3], &[2, 3]]);
        assert_eq!(two_of_three.dual().unwrap(), two_of_three);
    }

    #[test]
    fn dual_matches_truth_table_definition() {
        // phi*(A) = 1 - phi(X \ A), evaluated directly
        let s = sys(4, &[&[1, 2], &[3], &[2, 4]]);
        let d = s.dual().unwrap();
        for a in 0u64..16 {
            let a = Subset::from_bits(a);
            let expected = !s.evaluate(a.complement(4)).unwrap();
            assert_eq!(d.evaluate(a).unwrap(), expected, "{a}");
        }
    }

    #[test]
    fn minimal_cut_and_path_sets_intersect() {
        let systems = [
            sys(5, &[&[1, 2], &[1, 3], &[1, 4], &[2, 3, 4]]),
            sys(4, &[&[1, 2], &[3], &[2, 4]]),
            sys(3, &[&[1, 2], &[1, 3], &[2, 3]]),
        ];
        for s in &systems {
            let paths = s.dual().unwrap();
            for c in s.min_cut_sets().iter() {
                for p in paths.min_cut_sets().iter() {
                    assert!(c.intersects(*p));
                }
            }
        }
    }

    #[test]
    fn cut_path_intersection_can_exceed_one_element() {
        // 2-out-of-3: {1,2} is both a minimal cut set and a minimal path set
        let s = sys(3, &[&[1, 2], &[1, 3], &[2, 3]]);
        let paths = s.dual().unwrap();
        let c = set(&[1, 2]);
        assert!(paths.min_cut_sets().sets().contains(&c));
        assert_eq!(c.intersection(c).len(), 2);
    }

    #[test]
    fn cut_counts_examples() {
        let s = sys(5, &[&[1, 2], &[1, 3]]);
        let brute: Vec<u64> = (1..=5)
            .map(|l| {
                (0u64..32)
                    .map(Subset::from_bits)
                    .filter(|f| f.len() == l)
                    .filter(|f| f.contains(1) && (f.contains(2) || f.contains(3)))
                    .count() as u64
            })
            .collect();
        assert_eq!(brute, vec![0, 2, 5, 4, 1]);
        assert_eq!(s.cut_counts_by_size().unwrap(), big(&brute));

        let parallel = sys(5, &[&[1, 2, 3, 4, 5]]);
        assert_eq!(parallel.cut_counts_by_size().unwrap(), big(&[0, 0, 0, 0, 1]));

        let series = sys(3, &[&[1], &[2], &[3]]);
        assert_eq!(series.cut_counts_by_size().unwrap(), big(&[3, 3, 1]));
    }

    #[test]
    fn non_cut_sets_form_a_complex() {
        let s = sys(5, &[&[1, 2], &[1, 3], &[1, 4], &[2, 3, 4]]);
        let non_cuts = SubsetFamily::new(
            5,
            (0u64..32).map(Subset::from_bits).filter(|f| !s.is_cut(*f)),
        )
        .unwrap();
        assert!(non_cuts.is_downward_closed());
        assert_eq!(non_cuts.size_profile(), vec![1, 5, 7, 3, 0, 0]);
    }

    #[test]
    fn capacity_limit() {
        let s = System::first_block(30, 30).unwrap();
        assert!(s.dual().unwrap_err().is_capacity());
        assert!(s.cut_counts_by_size().unwrap_err().is_capacity());
        // evaluation itself has no limit
        assert!(s.evaluate(Subset::from_indices([30]).unwrap()).unwrap());
    }

    #[test]
    fn relabel() {
        let s = sys(3, &[&[1, 2]]);
        assert_eq!(s.relabel(&[3, 1, 2]).unwrap(), sys(3, &[&[1, 3]]));
        assert!(s.relabel(&[1, 1, 2]).is_err());
        assert!(s.relabel(&[1, 2]).is_err());
    }
}
