//! System signatures: the distribution of the failure index at which a system
//! goes down under a uniformly random failure order.
//!
//! All arithmetic runs on the unnormalized [`CountVector`] `N = n! * s`;
//! [`SignatureVector`] and [`CumulativeVector`] are exact-rational views.
//!
//! Three independent routes are provided:
//!
//! * [`signature_by_counting`] counts cut sets per cardinality; the cumulative
//!   signature at `l` is that count over `C(n, l)`.
//! * [`signature_by_permutations`] walks all `n!` failure orders.
//! * [`signature_inclusion_exclusion`] expands the minimal cut sets into the
//!   closed-form counts of single-block systems. The sign convention is
//!   `(-1)^(|G|+1)` over non-empty sub-families `G`, on unnormalized counts.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::combinatorics::{binomial, factorial, check_universe, Subset};
use crate::error::{Error, Result};
use crate::system::{AntichainFamily, System};

/// Largest universe accepted by the permutation walk (`9! = 362880` orders).
pub const MAX_PERMUTATION_UNIVERSE: usize = 9;

/// Largest minimal-cut family accepted by inclusion-exclusion (`2^20` terms).
pub const MAX_INCLUSION_EXCLUSION_FAMILY: usize = 20;

/// Unnormalized signature `(N_1, ..., N_n)`, summing to `n!`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct CountVector(Vec<BigUint>);

impl CountVector {
    pub fn new(counts: Vec<BigUint>) -> Result<Self> {
        let n = counts.len();
        check_universe(n)?;
        let total: BigUint = counts.iter().sum();
        let expected = factorial(n as u64);
        if total != expected {
            return Err(Error::InvalidCounts(format!(
                "entries sum to {total}, expected {n}! = {expected}"
            )));
        }
        Ok(CountVector(counts))
    }

    pub fn from_u64s(counts: &[u64]) -> Result<Self> {
        Self::new(counts.iter().map(|&c| BigUint::from(c)).collect())
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn counts(&self) -> &[BigUint] {
        &self.0
    }

    pub fn into_counts(self) -> Vec<BigUint> {
        self.0
    }

    /// Entry `i` becomes entry `n - i + 1`.
    pub fn reversed(&self) -> Self {
        CountVector(self.0.iter().rev().cloned().collect())
    }

    pub fn to_signature(&self) -> SignatureVector {
        let nf = BigInt::from(factorial(self.n() as u64));
        SignatureVector(
            self.0
                .iter()
                .map(|c| BigRational::new(BigInt::from(c.clone()), nf.clone()))
                .collect(),
        )
    }

    /// Partial sums `S_l = s_1 + ... + s_l`.
    pub fn cumulative(&self) -> CumulativeVector {
        let mut acc = BigRational::zero();
        CumulativeVector(
            self.to_signature()
                .0
                .into_iter()
                .map(|s| {
                    acc += s;
                    acc.clone()
                })
                .collect(),
        )
    }
}

impl fmt::Display for CountVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.0)
    }
}

/// Signature as exact rationals: non-negative, summing to one, each entry a
/// multiple of `1/n!`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SignatureVector(Vec<BigRational>);

impl SignatureVector {
    pub fn new(entries: Vec<BigRational>) -> Result<Self> {
        let counts = rationals_to_counts(&entries)?;
        CountVector::new(counts)?;
        Ok(SignatureVector(entries))
    }

    pub fn from_counts(counts: &CountVector) -> Self {
        counts.to_signature()
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[BigRational] {
        &self.0
    }

    pub fn to_counts(&self) -> CountVector {
        let counts = rationals_to_counts(&self.0).expect("validated at construction");
        CountVector(counts)
    }
}

impl fmt::Display for SignatureVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.0)
    }
}

/// Cumulative signature `(S_1, ..., S_n)`; non-decreasing with `S_n = 1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CumulativeVector(Vec<BigRational>);

impl CumulativeVector {
    pub fn entries(&self) -> &[BigRational] {
        &self.0
    }
}

fn write_tuple<T: fmt::Display>(f: &mut fmt::Formatter<'_>, items: &[T]) -> fmt::Result {
    f.write_str("(")?;
    for (k, x) in items.iter().enumerate() {
        if k > 0 {
            f.write_str(", ")?;
        }
        write!(f, "{x}")?;
    }
    f.write_str(")")
}

/// `n! * entry` for each entry, failing unless every product is a
/// non-negative integer.
fn rationals_to_counts(entries: &[BigRational]) -> Result<Vec<BigUint>> {
    let n = entries.len();
    check_universe(n)?;
    let nf = BigRational::from_integer(BigInt::from(factorial(n as u64)));
    entries
        .iter()
        .enumerate()
        .map(|(i, e)| {
            let scaled = e * &nf;
            if scaled.is_negative() || !scaled.is_integer() {
                return Err(Error::InvalidCounts(format!(
                    "entry {} = {e} is not a non-negative multiple of 1/{n}!",
                    i + 1
                )));
            }
            Ok(scaled.to_integer().magnitude().clone())
        })
        .collect()
}

/// Signature from the number of cut sets of each cardinality.
pub fn signature_by_counting(system: &System) -> Result<CountVector> {
    let n = system.n();
    let cut_counts = system.cut_counts_by_size()?;
    let nf = factorial(n as u64);
    let mut prev = BigUint::zero();
    let mut out = Vec::with_capacity(n);
    for (idx, count) in cut_counts.iter().enumerate() {
        let l = idx as u64 + 1;
        // n! * S_l = n! * count / C(n, l)
        let (cum, rem) = (&nf * count).div_rem(&binomial(n as u64, l));
        if !rem.is_zero() {
            return Err(Error::Internal(format!(
                "cumulative count at level {l} is not integral"
            )));
        }
        if cum < prev {
            return Err(Error::Internal(format!(
                "cumulative signature decreases at level {l}"
            )));
        }
        out.push(&cum - &prev);
        prev = cum;
    }
    CountVector::new(out).map_err(|e| Error::Internal(e.to_string()))
}

/// Signature by tallying the breakdown index of every failure order.
pub fn signature_by_permutations(system: &System) -> Result<CountVector> {
    let n = system.n();
    if n > MAX_PERMUTATION_UNIVERSE {
        return Err(Error::Capacity {
            what: "permutation universe",
            limit: MAX_PERMUTATION_UNIVERSE,
            actual: n,
        });
    }
    let mut tallies = vec![0u64; n];
    let mut order: Vec<usize> = (1..=n).collect();
    let mut visit = |order: &[usize]| -> Result<()> {
        let mut failed = Subset::EMPTY;
        for (i, &c) in order.iter().enumerate() {
            failed = failed.with(c);
            if !system.evaluate(failed.complement(n))? {
                tallies[i] += 1;
                return Ok(());
            }
        }
        Err(Error::Internal(format!(
            "system survives the failure order {order:?}"
        )))
    };

    // Heap's algorithm
    visit(&order)?;
    let mut c = vec![0usize; n];
    let mut i = 1;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                order.swap(0, i);
            } else {
                order.swap(c[i], i);
            }
            visit(&order)?;
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    CountVector::from_u64s(&tallies)
}

fn check_level(n: usize, l: usize) -> Result<()> {
    check_universe(n)?;
    if l == 0 || l > n {
        return Err(Error::IndexOutOfUniverse { index: l, n });
    }
    Ok(())
}

/// Counts for minimal cuts `{1}, ..., {l}`:
/// `N_i = (n-l)! l! C(n-i, l-1)`, zero past `i = n - l + 1`.
pub fn series_family_counts(n: usize, l: usize) -> Result<CountVector> {
    check_level(n, l)?;
    let weight = factorial((n - l) as u64) * factorial(l as u64);
    let counts = (1..=n)
        .map(|i| &weight * binomial((n - i) as u64, l as u64 - 1))
        .collect();
    CountVector::new(counts)
}

/// Counts for the single minimal cut `{1, ..., l}`:
/// `N_i = (n-l)! l! C(i-1, l-1)`, zero before `i = l`.
pub fn dual_family_counts(n: usize, l: usize) -> Result<CountVector> {
    check_level(n, l)?;
    let weight = factorial((n - l) as u64) * factorial(l as u64);
    let counts = (1..=n)
        .map(|i| &weight * binomial(i as u64 - 1, l as u64 - 1))
        .collect();
    CountVector::new(counts)
}

/// Inclusion-exclusion over the minimal cut sets:
/// `N = sum over non-empty G of (-1)^(|G|+1) * dual_family_counts(n, |union G|)`.
pub fn signature_inclusion_exclusion(family: &AntichainFamily) -> Result<CountVector> {
    let k = family.len();
    if k > MAX_INCLUSION_EXCLUSION_FAMILY {
        return Err(Error::Capacity {
            what: "inclusion-exclusion family",
            limit: MAX_INCLUSION_EXCLUSION_FAMILY,
            actual: k,
        });
    }
    let n = family.n();
    let sets = family.sets();

    // Net signed multiplicity of each union size.
    let mut coefficient = vec![0i64; n + 1];
    let mut unions = vec![0u64; 1 << k];
    for mask in 1usize..1 << k {
        let low = mask.trailing_zeros() as usize;
        unions[mask] = unions[mask & (mask - 1)] | sets[low].bits();
        let size = unions[mask].count_ones() as usize;
        if mask.count_ones() % 2 == 1 {
            coefficient[size] += 1;
        } else {
            coefficient[size] -= 1;
        }
    }

    let mut acc = vec![BigInt::zero(); n];
    for (size, &coef) in coefficient.iter().enumerate().skip(1) {
        if coef == 0 {
            continue;
        }
        let block = dual_family_counts(n, size)?;
        for (a, c) in acc.iter_mut().zip(block.counts()) {
            *a += BigInt::from(coef) * BigInt::from(c.clone());
        }
    }
    let counts = acc
        .into_iter()
        .map(|a| {
            a.to_biguint()
                .ok_or_else(|| Error::Internal("negative inclusion-exclusion count".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    CountVector::new(counts).map_err(|e| Error::Internal(e.to_string()))
}

/// `(N_n, ..., N_1)`: the signature of the dual system.
pub fn reverse(counts: &CountVector) -> CountVector {
    counts.reversed()
}

/// Which signature route to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Counting,
    InclusionExclusion,
    Permutations,
}

pub fn signature(system: &System, method: Method) -> Result<CountVector> {
    match method {
        Method::Counting => signature_by_counting(system),
        Method::InclusionExclusion => signature_inclusion_exclusion(system.min_cut_sets()),
        Method::Permutations => signature_by_permutations(system),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sys(n: usize, lists: &[&[usize]]) -> System {
        System::from_index_lists(n, lists.iter().map(|l| l.iter().copied())).unwrap()
    }

    fn cv(v: &[u64]) -> CountVector {
        CountVector::from_u64s(v).unwrap()
    }

    fn q(p: i64, d: i64) -> BigRational {
        BigRational::new(p.into(), d.into())
    }

    #[test]
    fn count_vector_validation() {
        assert!(CountVector::from_u64s(&[1, 1]).is_ok());
        assert!(matches!(
            CountVector::from_u64s(&[1, 2]),
            Err(Error::InvalidCounts(_))
        ));
        assert!(CountVector::from_u64s(&[]).is_err());
        let s = cv(&[0, 24, 36, 36, 24]).to_signature();
        assert_eq!(s.entries(), &[q(0, 1), q(1, 5), q(3, 10), q(3, 10), q(1, 5)]);
        assert_eq!(s.to_string(), "(0, 1/5, 3/10, 3/10, 1/5)");
        assert_eq!(s.to_counts(), cv(&[0, 24, 36, 36, 24]));
    }

    #[test]
    fn signature_vector_validation() {
        assert!(SignatureVector::new(vec![q(1, 3), q(1, 3), q(1, 3)]).is_ok());
        assert!(SignatureVector::new(vec![q(1, 7), q(6, 7)]).is_err());
        assert!(SignatureVector::new(vec![q(3, 2), q(-1, 2)]).is_err());
        assert!(SignatureVector::new(vec![q(1, 2), q(1, 4)]).is_err());
    }

    #[test]
    fn cumulative() {
        let c = cv(&[0, 24, 36, 36, 24]).cumulative();
        assert_eq!(c.entries(), &[q(0, 1), q(1, 5), q(1, 2), q(4, 5), q(1, 1)]);
    }

    #[test]
    fn counting_examples() {
        assert_eq!(
            signature_by_counting(&sys(5, &[&[1], &[2]])).unwrap(),
            cv(&[48, 36, 24, 12, 0])
        );
        assert_eq!(
            signature_by_counting(&sys(5, &[&[1, 2], &[1, 3]])).unwrap(),
            cv(&[0, 24, 36, 36, 24])
        );
        assert_eq!(
            signature_by_counting(&sys(5, &[&[1, 2], &[1, 3], &[1, 4], &[2, 3, 4]])).unwrap(),
            cv(&[0, 36, 48, 36, 0])
        );
    }

    #[test]
    fn permutation_examples() {
        assert_eq!(
            signature_by_permutations(&System::first_singletons(5, 5).unwrap()).unwrap(),
            cv(&[120, 0, 0, 0, 0])
        );
        assert_eq!(
            signature_by_permutations(&sys(2, &[&[1, 2]])).unwrap(),
            cv(&[0, 2])
        );
        assert_eq!(
            signature_by_permutations(&sys(5, &[&[1, 2], &[1, 3]])).unwrap(),
            cv(&[0, 24, 36, 36, 24])
        );
        assert_eq!(
            signature_by_permutations(&sys(1, &[&[1]])).unwrap(),
            cv(&[1])
        );
        let big = System::first_block(10, 3).unwrap();
        assert!(signature_by_permutations(&big).unwrap_err().is_capacity());
    }

    #[test]
    fn closed_forms() {
        assert_eq!(series_family_counts(5, 3).unwrap(), cv(&[72, 36, 12, 0, 0]));
        assert_eq!(series_family_counts(5, 1).unwrap(), cv(&[24; 5]));
        assert_eq!(series_family_counts(6, 6).unwrap(), cv(&[720, 0, 0, 0, 0, 0]));
        assert_eq!(dual_family_counts(5, 2).unwrap(), cv(&[0, 12, 24, 36, 48]));
        assert_eq!(dual_family_counts(5, 3).unwrap(), cv(&[0, 0, 12, 36, 72]));
        assert_eq!(dual_family_counts(4, 1).unwrap(), cv(&[6, 6, 6, 6]));
        assert!(series_family_counts(5, 0).is_err());
        assert!(dual_family_counts(5, 6).is_err());
        for n in 1..=7 {
            for l in 1..=n {
                assert_eq!(
                    dual_family_counts(n, l).unwrap(),
                    reverse(&series_family_counts(n, l).unwrap())
                );
                assert_eq!(
                    series_family_counts(n, l).unwrap(),
                    signature_by_permutations(&System::first_singletons(n, l).unwrap()).unwrap()
                );
            }
        }
    }

    #[test]
    fn inclusion_exclusion_examples() {
        let two = sys(5, &[&[1, 2], &[1, 3]]);
        let by_hand = {
            let d2 = dual_family_counts(5, 2).unwrap();
            let d3 = dual_family_counts(5, 3).unwrap();
            d2.counts()
                .iter()
                .zip(d3.counts())
                .map(|(a, b)| BigUint::from(2u32) * a - b)
                .collect::<Vec<_>>()
        };
        let ie = signature_inclusion_exclusion(two.min_cut_sets()).unwrap();
        assert_eq!(ie.counts(), by_hand.as_slice());
        assert_eq!(ie, cv(&[0, 24, 36, 36, 24]));

        for l in 1..=5 {
            let block = System::first_block(5, l).unwrap();
            assert_eq!(
                signature_inclusion_exclusion(block.min_cut_sets()).unwrap(),
                dual_family_counts(5, l).unwrap()
            );
        }

        let disjoint = sys(5, &[&[1, 2], &[3, 4]]);
        assert_eq!(
            signature_inclusion_exclusion(disjoint.min_cut_sets()).unwrap(),
            signature_by_counting(&disjoint).unwrap()
        );
    }

    #[test]
    fn inclusion_exclusion_capacity() {
        let sets: Vec<Vec<usize>> = (1..=21).map(|i| vec![i]).collect();
        let s = System::from_index_lists(21, sets).unwrap();
        assert!(signature_inclusion_exclusion(s.min_cut_sets())
            .unwrap_err()
            .is_capacity());
    }

    #[test]
    fn reverse_examples() {
        assert_eq!(reverse(&cv(&[120, 0, 0, 0, 0])), cv(&[0, 0, 0, 0, 120]));
        let pal = cv(&[0, 36, 48, 36, 0]);
        assert_eq!(reverse(&pal), pal);
        let v = cv(&[48, 36, 24, 12, 0]);
        assert_eq!(reverse(&reverse(&v)), v);
    }

    #[test]
    fn methods_dispatch() {
        let s = sys(4, &[&[1, 2], &[3]]);
        let a = signature(&s, Method::Counting).unwrap();
        assert_eq!(signature(&s, Method::Permutations).unwrap(), a);
        assert_eq!(signature(&s, Method::InclusionExclusion).unwrap(), a);
    }
}
