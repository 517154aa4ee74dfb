//! Exhaustive enumeration of every system on a handful of components.

use std::collections::{BTreeMap, BTreeSet};

use crate::combinatorics::{check_universe, Subset};
use crate::error::{Error, Result};
use crate::signature::{signature_by_counting, CountVector};
use crate::system::{AntichainFamily, System};

/// Antichain counts grow like the Dedekind numbers; 7579 non-constant
/// systems at `n = 5`, about 7.8 million at `n = 6`.
pub const MAX_ACHIEVABLE_UNIVERSE: usize = 5;

fn check_n(n: usize) -> Result<()> {
    check_universe(n)?;
    if n > MAX_ACHIEVABLE_UNIVERSE {
        return Err(Error::Capacity {
            what: "exhaustive system enumeration",
            limit: MAX_ACHIEVABLE_UNIVERSE,
            actual: n,
        });
    }
    Ok(())
}

/// Every non-empty antichain of non-empty subsets of `{1..n}`, i.e. the
/// minimal cut families of all non-constant systems.
pub fn enumerate_antichains(n: usize) -> Result<Vec<AntichainFamily>> {
    check_n(n)?;
    let full = (1u64 << n) - 1;
    let mut out = Vec::new();
    let mut current = Vec::new();
    grow(1, full, &mut current, &mut |sets| {
        out.push(
            AntichainFamily::new(n, sets.iter().map(|&b| Subset::from_bits(b)))
                .expect("construction keeps members incomparable"),
        );
    });
    Ok(out)
}

// Each antichain is produced once, as its members in increasing bitmask order.
fn grow(start: u64, full: u64, current: &mut Vec<u64>, emit: &mut impl FnMut(&[u64])) {
    if !current.is_empty() {
        emit(current);
    }
    for m in start..=full {
        if current
            .iter()
            .all(|&a| a & !m != 0 && m & !a != 0)
        {
            current.push(m);
            grow(m + 1, full, current, emit);
            current.pop();
        }
    }
}

/// Distinct signatures over all systems on `n` components.
pub fn enumerate_achievable(n: usize) -> Result<BTreeSet<CountVector>> {
    Ok(enumerate_achievable_with_witnesses(n)?.into_keys().collect())
}

/// Distinct signatures, each with its least (lex-ordered) minimal cut family.
pub fn enumerate_achievable_with_witnesses(
    n: usize,
) -> Result<BTreeMap<CountVector, AntichainFamily>> {
    let mut out: BTreeMap<CountVector, AntichainFamily> = BTreeMap::new();
    for family in enumerate_antichains(n)? {
        let counts = signature_by_counting(&System::new(family.clone()))?;
        match out.get_mut(&counts) {
            Some(best) if family < *best => *best = family,
            Some(_) => {}
            None => {
                out.insert(counts, family);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cv(v: &[u64]) -> CountVector {
        CountVector::from_u64s(v).unwrap()
    }

    #[test]
    fn antichain_counts_match_dedekind_minus_constants() {
        let expected = [1usize, 4, 18, 166, 7579];
        for (n, &want) in (1..=5).zip(expected.iter()) {
            assert_eq!(enumerate_antichains(n).unwrap().len(), want, "n={n}");
        }
    }

    #[test]
    fn small_universes() {
        assert_eq!(
            enumerate_achievable(1).unwrap(),
            BTreeSet::from([cv(&[1])])
        );
        assert_eq!(
            enumerate_achievable(2).unwrap(),
            BTreeSet::from([cv(&[2, 0]), cv(&[0, 2]), cv(&[1, 1])])
        );
        let map = enumerate_achievable_with_witnesses(2).unwrap();
        assert_eq!(map[&cv(&[1, 1])].to_index_lists(), vec![vec![1]]);
    }

    #[test]
    fn example_vector_is_achievable_at_five() {
        assert!(enumerate_achievable(5)
            .unwrap()
            .contains(&cv(&[0, 36, 48, 36, 0])));
    }

    #[test]
    fn capacity() {
        assert!(enumerate_antichains(6).unwrap_err().is_capacity());
        assert!(enumerate_antichains(0).is_err());
    }
}
