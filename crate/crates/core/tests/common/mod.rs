#![allow(dead_code)]

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use rand::seq::SliceRandom;
use rand::Rng;

use syssig_core::combinatorics::{binomial, factorial, Subset, SubsetFamily};
use syssig_core::signature::CountVector;
use syssig_core::system::{extract_minimal, System};

pub fn q(p: i64, d: i64) -> BigRational {
    BigRational::new(p.into(), d.into())
}

pub fn cv(v: &[u64]) -> CountVector {
    CountVector::from_u64s(v).unwrap()
}

pub fn sys(n: usize, lists: &[&[usize]]) -> System {
    System::from_index_lists(n, lists.iter().map(|l| l.iter().copied())).unwrap()
}

pub fn to_candidate(counts: &[BigUint]) -> Vec<BigRational> {
    let nf = factorial(counts.len() as u64);
    counts
        .iter()
        .map(|c| BigRational::new(c.clone().into(), nf.clone().into()))
        .collect()
}

/// A random subset of `{1..n}` with a uniformly chosen size in `1..=n`.
pub fn random_subset<R: Rng>(rng: &mut R, n: usize) -> Subset {
    let size = rng.gen_range(1..=n);
    let mut idx: Vec<usize> = (1..=n).collect();
    idx.shuffle(rng);
    Subset::from_indices(idx.into_iter().take(size)).unwrap()
}

/// Minimal family of `1..=max_sets` random subsets.
pub fn random_system<R: Rng>(rng: &mut R, n: usize, max_sets: usize) -> System {
    let k = rng.gen_range(1..=max_sets);
    let sets: Vec<Subset> = (0..k).map(|_| random_subset(rng, n)).collect();
    let family = SubsetFamily::from_sets_dedup(n, sets).unwrap();
    System::new(extract_minimal(&family).unwrap())
}

pub fn random_permutation<R: Rng>(rng: &mut R, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (1..=n).collect();
    p.shuffle(rng);
    p
}

/// Uniformly random weak composition of `total` into `parts` parts.
pub fn random_composition<R: Rng>(rng: &mut R, total: u64, parts: usize) -> Vec<u64> {
    let mut cuts: Vec<u64> = (0..parts - 1).map(|_| rng.gen_range(0..=total)).collect();
    cuts.sort_unstable();
    let mut out = Vec::with_capacity(parts);
    let mut prev = 0;
    for c in cuts {
        out.push(c - prev);
        prev = c;
    }
    out.push(total - prev);
    out
}

/// Count vector whose cumulative counts are `cum[l-1]` cut sets of size `l`,
/// or `None` when the implied entries would be negative.
pub fn counts_from_cut_counts(n: usize, cum: &[u64]) -> Option<Vec<u64>> {
    let nf = factorial(n as u64).to_u64()?;
    let mut prev = 0u64;
    let mut out = Vec::with_capacity(n);
    for (idx, &c) in cum.iter().enumerate() {
        let l = idx as u64 + 1;
        let total = binomial(n as u64, l).to_u64()?;
        // n! * c / C(n, l) is an integer: (n - l)! * l! * c
        let scaled = nf / total * c;
        if scaled < prev {
            return None;
        }
        out.push(scaled - prev);
        prev = scaled;
    }
    Some(out)
}
