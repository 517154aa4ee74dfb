//! Lexicographic and colex orderings of fixed-size subsets, with ranking and
//! unranking. Ranks are 0-based.
//!
//! Lex compares increasing index sequences element by element, so the 2-subsets
//! of `{1..4}` run `{1,2} {1,3} {1,4} {2,3} {2,4} {3,4}`. Colex compares the
//! largest element first: `{1,2} {1,3} {2,3} {1,4} {2,4} {3,4}`. A colex
//! initial segment does not depend on the universe size.

use super::binomial::binomial_u128;
use super::subset::{check_universe, Subset, MAX_UNIVERSE};
use crate::error::{Error, Result};

fn choose(n: usize, k: usize) -> u128 {
    // n <= 64 here, far below the u128 overflow point
    binomial_u128(n as u64, k as u64).expect("binomial of a 64-element universe fits u128")
}

fn out_of_range(rank: u64, l: usize, n: usize) -> Error {
    Error::RankOutOfRange {
        rank: rank.to_string(),
        l,
        n,
    }
}

/// The `rank`-th `l`-subset of `{1..n}` in lex order.
pub fn lex_unrank(rank: u64, l: usize, n: usize) -> Result<Subset> {
    check_universe(n)?;
    if l > n || rank as u128 >= choose(n, l) {
        return Err(out_of_range(rank, l, n));
    }
    let mut rem = rank as u128;
    let mut out = Subset::EMPTY;
    let mut x = 1;
    for remaining in (1..=l).rev() {
        loop {
            // subsets whose next element is x
            let count = choose(n - x, remaining - 1);
            if rem < count {
                out = out.with(x);
                x += 1;
                break;
            }
            rem -= count;
            x += 1;
        }
    }
    Ok(out)
}

/// Position of `s` among the `|s|`-subsets of `{1..n}` in lex order.
pub fn lex_rank(s: Subset, n: usize) -> Result<u64> {
    check_universe(n)?;
    super::subset::check_fits(s, n)?;
    let mut rank: u128 = 0;
    let mut remaining = s.len();
    let mut x = 1;
    for e in s.iter() {
        while x < e {
            rank += choose(n - x, remaining - 1);
            x += 1;
        }
        remaining -= 1;
        x = e + 1;
    }
    Ok(rank as u64)
}

/// The `rank`-th `l`-subset of the positive integers in colex order.
///
/// Fails with a capacity error when the subset would need an element above 64.
pub fn colex_unrank(rank: u64, l: usize) -> Result<Subset> {
    let capacity = |needed: usize| Error::Capacity {
        what: "colex element",
        limit: MAX_UNIVERSE,
        actual: needed,
    };
    let mut rem = rank as u128;
    let mut out = Subset::EMPTY;
    for i in (1..=l).rev() {
        // largest c with C(c, i) <= rem; C(i - 1, i) = 0 always qualifies
        let mut c = i - 1;
        while c + 1 < MAX_UNIVERSE && choose(c + 1, i) <= rem {
            c += 1;
        }
        if c + 1 == MAX_UNIVERSE && choose(c + 1, i) <= rem {
            return Err(capacity(c + 2));
        }
        rem -= choose(c, i);
        out = out.with(c + 1);
    }
    Ok(out)
}

/// Position of `s` among the `|s|`-subsets in colex order.
pub fn colex_rank(s: Subset) -> u64 {
    s.iter()
        .enumerate()
        .map(|(k, e)| choose(e - 1, k + 1))
        .sum::<u128>() as u64
}

/// All `l`-subsets of `{1..n}` in lex order.
#[derive(Clone, Debug)]
pub struct LexSubsets {
    n: usize,
    current: Option<Vec<usize>>,
}

impl LexSubsets {
    pub fn new(n: usize, l: usize) -> Self {
        let current = (l <= n && n <= MAX_UNIVERSE).then(|| (1..=l).collect());
        LexSubsets { n, current }
    }
}

impl Iterator for LexSubsets {
    type Item = Subset;

    fn next(&mut self) -> Option<Subset> {
        let cur = self.current.as_mut()?;
        let out = Subset::from_indices(cur.iter().copied()).expect("indices within universe");
        let l = cur.len();
        // rightmost position that can still advance
        match (0..l).rev().find(|&p| cur[p] < self.n - (l - 1 - p)) {
            Some(p) => {
                cur[p] += 1;
                for q in p + 1..l {
                    cur[q] = cur[q - 1] + 1;
                }
            }
            None => self.current = None,
        }
        Some(out)
    }
}

/// All `l`-subsets of `{1..n}` in colex order.
#[derive(Clone, Debug)]
pub struct ColexSubsets {
    limit: u64,
    next: Option<u64>,
}

impl ColexSubsets {
    pub fn new(n: usize, l: usize) -> Self {
        if n > MAX_UNIVERSE || l > n {
            return ColexSubsets { limit: 0, next: None };
        }
        ColexSubsets {
            limit: Subset::full(n).bits(),
            next: Some(Subset::initial(l).bits()),
        }
    }
}

impl Iterator for ColexSubsets {
    type Item = Subset;

    fn next(&mut self) -> Option<Subset> {
        let cur = self.next?;
        if cur == 0 {
            self.next = None;
            return Some(Subset::EMPTY);
        }
        // Gosper's hack: next integer with the same popcount
        let low = cur & cur.wrapping_neg();
        self.next = match cur.checked_add(low) {
            Some(ripple) if ripple != 0 => {
                let ones = ((cur ^ ripple) >> 2) / low;
                let nxt = ripple | ones;
                (nxt & !self.limit == 0).then_some(nxt)
            }
            _ => None,
        };
        Some(Subset::from_bits(cur))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[usize]) -> Subset {
        Subset::from_indices(v.iter().copied()).unwrap()
    }

    #[test]
    fn lex_examples() {
        assert_eq!(lex_unrank(0, 2, 5).unwrap(), set(&[1, 2]));
        assert_eq!(lex_unrank(1, 2, 5).unwrap(), set(&[1, 3]));
        assert_eq!(lex_unrank(2, 2, 5).unwrap(), set(&[1, 4]));
        assert_eq!(lex_unrank(6, 3, 5).unwrap(), set(&[2, 3, 4]));
        assert_eq!(lex_unrank(9, 2, 5).unwrap(), set(&[4, 5]));
        assert!(matches!(
            lex_unrank(10, 2, 5),
            Err(Error::RankOutOfRange { .. })
        ));
    }

    #[test]
    fn lex_order_matches_sorted_enumeration() {
        for n in 1..=8 {
            for l in 0..=n {
                let mut brute: Vec<Subset> = (0u64..1 << n)
                    .map(Subset::from_bits)
                    .filter(|s| s.len() == l)
                    .collect();
                brute.sort();
                let iter: Vec<Subset> = LexSubsets::new(n, l).collect();
                assert_eq!(iter, brute);
                for (r, s) in brute.iter().enumerate() {
                    assert_eq!(lex_unrank(r as u64, l, n).unwrap(), *s);
                    assert_eq!(lex_rank(*s, n).unwrap(), r as u64);
                }
            }
        }
    }

    #[test]
    fn colex_examples() {
        assert_eq!(colex_unrank(0, 3).unwrap(), set(&[1, 2, 3]));
        assert_eq!(colex_unrank(1, 3).unwrap(), set(&[1, 2, 4]));
        assert_eq!(colex_unrank(3, 2).unwrap(), set(&[1, 4]));
        assert_eq!(colex_unrank(0, 0).unwrap(), Subset::EMPTY);
    }

    #[test]
    fn colex_matches_brute_force() {
        for n in 1..=8 {
            for l in 0..=n {
                let mut brute: Vec<Subset> = (0u64..1 << n)
                    .map(Subset::from_bits)
                    .filter(|s| s.len() == l)
                    .collect();
                brute.sort_by(|a, b| a.to_vec().iter().rev().cmp(b.to_vec().iter().rev()));
                let iter: Vec<Subset> = ColexSubsets::new(n, l).collect();
                assert_eq!(iter, brute);
                for (r, s) in brute.iter().enumerate() {
                    assert_eq!(colex_unrank(r as u64, l).unwrap(), *s);
                    assert_eq!(colex_rank(*s), r as u64);
                }
            }
        }
    }

    #[test]
    fn colex_capacity() {
        assert_eq!(colex_unrank(63, 1).unwrap(), set(&[64]));
        assert!(colex_unrank(64, 1).unwrap_err().is_capacity());
        let full = ColexSubsets::new(64, 64).collect::<Vec<_>>();
        assert_eq!(full, vec![Subset::full(64)]);
        assert_eq!(ColexSubsets::new(64, 63).count(), 64);
    }
}
