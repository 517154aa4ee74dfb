//! Deciding whether a probability vector is the signature of some coherent
//! system, and building one when it is.
//!
//! For a candidate `s` on `n` components, the number of non-cut sets of size
//! `l` any realizing system must have is `f_l = C(n, l) * (s_{l+1} + ... + s_n)`.
//! The non-cut sets form a simplicial complex, so `s` is realizable exactly
//! when `(f_0, ..., f_n)` is an f-vector, which the Kruskal-Katona shadow
//! bound decides level by level.
//!
//! The witness is built from lex initial segments of cut sets at each level;
//! those are the complements of colex initial segments of non-cut sets under
//! the relabeling `i -> n + 1 - i`.

mod enumerate;

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::combinatorics::{
    binomial, check_universe, lex_rank, shadow_size, ColexSubsets, LexSubsets, Subset,
    SubsetFamily,
};
use crate::error::{Error, Result};
use crate::signature::{signature_by_counting, CountVector};
use crate::system::{AntichainFamily, System, MAX_ENUMERATION_UNIVERSE};

pub use enumerate::{
    enumerate_achievable, enumerate_achievable_with_witnesses, enumerate_antichains,
    MAX_ACHIEVABLE_UNIVERSE,
};

/// Face counts `(f_0, ..., f_n)` of a family of subsets of `{1..n}` closed
/// under taking subsets, with `f_0 = 1` and `f_l <= C(n, l)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FVector(Vec<BigUint>);

impl FVector {
    pub fn new(entries: Vec<BigUint>) -> Result<Self> {
        if entries.len() < 2 {
            return Err(Error::InvalidFVector(
                "needs entries f_0..f_n with n >= 1".into(),
            ));
        }
        let n = entries.len() - 1;
        check_universe(n)?;
        if !entries[0].is_one() {
            return Err(Error::InvalidFVector("f_0 must be 1".into()));
        }
        for (l, f) in entries.iter().enumerate() {
            let cap = binomial(n as u64, l as u64);
            if *f > cap {
                return Err(Error::InvalidFVector(format!(
                    "f_{l} = {f} exceeds C({n}, {l}) = {cap}"
                )));
            }
        }
        Ok(FVector(entries))
    }

    pub fn from_u64s(entries: &[u64]) -> Result<Self> {
        Self::new(entries.iter().map(|&f| BigUint::from(f)).collect())
    }

    /// Per-cardinality counts of a family containing the empty set.
    pub fn of_family(family: &SubsetFamily) -> Result<Self> {
        Self::new(
            family
                .size_profile()
                .into_iter()
                .map(BigUint::from)
                .collect(),
        )
    }

    /// Counts of the non-cut sets of `system`.
    pub fn of_system(system: &System) -> Result<Self> {
        let n = system.n() as u64;
        let mut entries = vec![BigUint::one()];
        for (l, cuts) in system.cut_counts_by_size()?.into_iter().enumerate() {
            entries.push(binomial(n, l as u64 + 1) - cuts);
        }
        Self::new(entries)
    }

    pub fn n(&self) -> usize {
        self.0.len() - 1
    }

    pub fn entries(&self) -> &[BigUint] {
        &self.0
    }

    pub fn get(&self, l: usize) -> &BigUint {
        &self.0[l]
    }
}

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, x) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")
    }
}

/// Why a candidate vector cannot be a signature.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Rejection {
    /// Entries are negative or do not sum to one.
    NotProbabilityVector(String),
    /// `f_level` is not an integer.
    NonIntegerFaceCount { level: usize },
    /// The least shadow of `f_level` sets of size `level` exceeds `f_{level-1}`.
    ShadowViolation {
        level: usize,
        shadow: BigUint,
        bound: BigUint,
    },
}

impl Rejection {
    /// Stable machine-readable name.
    pub fn stage(&self) -> &'static str {
        match self {
            Rejection::NotProbabilityVector(_) => "not_probability_vector",
            Rejection::NonIntegerFaceCount { .. } => "non_integer_face_count",
            Rejection::ShadowViolation { .. } => "shadow_violation",
        }
    }

    pub fn level(&self) -> Option<usize> {
        match self {
            Rejection::NotProbabilityVector(_) => None,
            Rejection::NonIntegerFaceCount { level } | Rejection::ShadowViolation { level, .. } => {
                Some(*level)
            }
        }
    }
}

impl fmt::Display for Rejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rejection::NotProbabilityVector(why) => write!(f, "not a probability vector: {why}"),
            Rejection::NonIntegerFaceCount { level } => {
                write!(f, "face count f_{level} is not an integer")
            }
            Rejection::ShadowViolation {
                level,
                shadow,
                bound,
            } => write!(
                f,
                "f_{level} has shadow {shadow}, exceeding f_{} = {bound}",
                level - 1
            ),
        }
    }
}

/// Outcome of the shadow test on an f-vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KkOutcome {
    Pass,
    Fail {
        level: usize,
        shadow: BigUint,
        bound: BigUint,
    },
}

impl KkOutcome {
    pub fn passed(&self) -> bool {
        matches!(self, KkOutcome::Pass)
    }
}

/// Result of [`check_candidate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RealizabilityVerdict {
    Realizable { witness: AntichainFamily },
    NotRealizable(Rejection),
}

impl RealizabilityVerdict {
    pub fn is_realizable(&self) -> bool {
        matches!(self, RealizabilityVerdict::Realizable { .. })
    }

    pub fn witness(&self) -> Option<&AntichainFamily> {
        match self {
            RealizabilityVerdict::Realizable { witness } => Some(witness),
            RealizabilityVerdict::NotRealizable(_) => None,
        }
    }

    pub fn rejection(&self) -> Option<&Rejection> {
        match self {
            RealizabilityVerdict::Realizable { .. } => None,
            RealizabilityVerdict::NotRealizable(r) => Some(r),
        }
    }
}

fn reject(r: Rejection) -> Error {
    Error::NotRealizable(r)
}

/// Converts a count vector into the candidate `N / n!`.
pub fn candidate_from_counts(counts: &CountVector) -> Vec<BigRational> {
    counts.to_signature().entries().to_vec()
}

/// `f_l = C(n, l) * (s_{l+1} + ... + s_n)` for `l = 0..=n`.
///
/// Fails with [`Error::NotRealizable`] when the candidate is not a probability
/// vector or some `f_l` is fractional.
pub fn fvector_from_candidate(candidate: &[BigRational]) -> Result<FVector> {
    let n = candidate.len();
    if n == 0 {
        return Err(reject(Rejection::NotProbabilityVector(
            "the vector is empty".into(),
        )));
    }
    check_universe(n)?;
    if let Some(i) = candidate.iter().position(|s| s.is_negative()) {
        return Err(reject(Rejection::NotProbabilityVector(format!(
            "entry {} is negative",
            i + 1
        ))));
    }
    let total: BigRational = candidate.iter().sum();
    if !total.is_one() {
        return Err(reject(Rejection::NotProbabilityVector(format!(
            "entries sum to {total}"
        ))));
    }

    let mut entries = Vec::with_capacity(n + 1);
    let mut tail = BigRational::one();
    for l in 0..=n {
        if l > 0 {
            tail -= &candidate[l - 1];
        }
        let f = BigRational::from_integer(BigInt::from(binomial(n as u64, l as u64))) * &tail;
        if !f.is_integer() {
            return Err(reject(Rejection::NonIntegerFaceCount { level: l }));
        }
        entries.push(f.to_integer().magnitude().clone());
    }
    FVector::new(entries)
}

/// Shadow test: for each level `l` from `n` down to 1 with `f_l > 0`, the
/// least shadow of `f_l` sets of size `l` must not exceed `f_{l-1}`.
/// Reports the highest failing level.
pub fn kk_check(f: &FVector) -> KkOutcome {
    for l in (1..=f.n()).rev() {
        let count = f.get(l);
        if count.is_zero() {
            continue;
        }
        let shadow = shadow_size(count, l).expect("positive count and level");
        let bound = f.get(l - 1);
        if shadow > *bound {
            return KkOutcome::Fail {
                level: l,
                shadow,
                bound: bound.clone(),
            };
        }
    }
    KkOutcome::Pass
}

fn check_synthesis_capacity(n: usize) -> Result<()> {
    if n > MAX_ENUMERATION_UNIVERSE {
        return Err(Error::Capacity {
            what: "synthesis universe",
            limit: MAX_ENUMERATION_UNIVERSE,
            actual: n,
        });
    }
    Ok(())
}

/// Number of cut sets of size `l` a realizing system needs: `C(n, l) - f_l`.
fn cut_segment_sizes(f: &FVector) -> Result<Vec<usize>> {
    let n = f.n() as u64;
    (1..=f.n())
        .map(|l| {
            (binomial(n, l as u64) - f.get(l))
                .to_usize()
                .ok_or(Error::Capacity {
                    what: "segment size",
                    limit: usize::MAX,
                    actual: usize::MAX,
                })
        })
        .collect()
}

/// The per-level families the synthesis starts from: at level `l`, the first
/// `C(n, l) * (s_1 + ... + s_l)` subsets of size `l` in lex order.
/// Entry `l - 1` holds level `l`.
pub fn synthesis_segments(candidate: &[BigRational]) -> Result<Vec<SubsetFamily>> {
    let f = fvector_from_candidate(candidate)?;
    check_synthesis_capacity(f.n())?;
    segments_for(&f)
}

fn segments_for(f: &FVector) -> Result<Vec<SubsetFamily>> {
    let n = f.n();
    cut_segment_sizes(f)?
        .into_iter()
        .enumerate()
        .map(|(idx, size)| SubsetFamily::new(n, LexSubsets::new(n, idx + 1).take(size)))
        .collect()
}

/// Builds a system whose signature is `candidate`.
///
/// The minimal cut sets are the members of the lex segments with no
/// `(l-1)`-subset in the segment below. Fails with [`Error::NotRealizable`]
/// when the candidate does not pass the shadow test.
pub fn synthesize(candidate: &[BigRational]) -> Result<AntichainFamily> {
    let f = fvector_from_candidate(candidate)?;
    check_synthesis_capacity(f.n())?;
    if let KkOutcome::Fail {
        level,
        shadow,
        bound,
    } = kk_check(&f)
    {
        return Err(reject(Rejection::ShadowViolation {
            level,
            shadow,
            bound,
        }));
    }
    synthesize_from(&f)
}

fn synthesize_from(f: &FVector) -> Result<AntichainFamily> {
    let n = f.n();
    let sizes = cut_segment_sizes(f)?;
    // Segments are lex initial segments, so membership is a rank comparison.
    let in_segment = |s: Subset| -> Result<bool> {
        let l = s.len();
        Ok(l > 0 && (lex_rank(s, n)? as usize) < sizes[l - 1])
    };
    let mut minimal = Vec::new();
    for (idx, &size) in sizes.iter().enumerate() {
        for s in LexSubsets::new(n, idx + 1).take(size) {
            let mut is_min = true;
            for i in s.iter() {
                if in_segment(s.without(i))? {
                    is_min = false;
                    break;
                }
            }
            if is_min {
                minimal.push(s);
            }
        }
    }
    AntichainFamily::new(n, minimal)
}

/// Full pipeline: validate, derive the f-vector, run the shadow test, then
/// synthesize a witness and confirm its signature equals the candidate.
pub fn check_candidate(candidate: &[BigRational]) -> Result<RealizabilityVerdict> {
    check_synthesis_capacity(candidate.len())?;
    let f = match fvector_from_candidate(candidate) {
        Ok(f) => f,
        Err(Error::NotRealizable(r)) => return Ok(RealizabilityVerdict::NotRealizable(r)),
        Err(e) => return Err(e),
    };
    if let KkOutcome::Fail {
        level,
        shadow,
        bound,
    } = kk_check(&f)
    {
        return Ok(RealizabilityVerdict::NotRealizable(
            Rejection::ShadowViolation {
                level,
                shadow,
                bound,
            },
        ));
    }
    let witness = synthesize_from(&f)?;
    let achieved = signature_by_counting(&System::new(witness.clone()))?;
    if candidate_from_counts(&achieved) != candidate {
        return Err(Error::Internal(format!(
            "witness {witness} has signature {}, not the candidate",
            achieved.to_signature()
        )));
    }
    Ok(RealizabilityVerdict::Realizable { witness })
}

/// Outcome of [`criterion_check`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CriterionOutcome {
    Pass,
    /// Some member of the level-`level` segment has a superset of size
    /// `level + 1` missing from the next segment.
    Fail { level: usize },
}

impl CriterionOutcome {
    pub fn passed(&self) -> bool {
        matches!(self, CriterionOutcome::Pass)
    }
}

/// Checks that every `(l+1)`-superset of every member of the level-`l`
/// segment lies in the level-`(l+1)` segment, for each adjacent pair of
/// given levels. `segments[l - 1]` holds level `l`. With all `n` levels given
/// this says the union is closed under taking supersets.
pub fn criterion_check(n: usize, segments: &[SubsetFamily]) -> Result<CriterionOutcome> {
    check_universe(n)?;
    if segments.len() > n {
        return Err(Error::LengthMismatch {
            expected: n,
            found: segments.len(),
        });
    }
    for (idx, seg) in segments.iter().enumerate() {
        let l = idx + 1;
        if seg.n() != n {
            return Err(Error::LengthMismatch {
                expected: n,
                found: seg.n(),
            });
        }
        if let Some(bad) = seg.iter().find(|s| s.len() != l) {
            return Err(Error::NonUniform {
                expected: l,
                found: bad.len(),
            });
        }
    }
    for (idx, pair) in segments.windows(2).enumerate() {
        let l = idx + 1;
        let (seg, next) = (&pair[0], &pair[1]);
        for s in seg {
            if s.complement(n).iter().any(|j| !next.contains(s.with(j))) {
                return Ok(CriterionOutcome::Fail { level: l });
            }
        }
    }
    Ok(CriterionOutcome::Pass)
}

/// The empty set plus the first `f_l` colex subsets of size `l` for each
/// `l >= 1`. Closed under subsets exactly when [`kk_check`] passes.
pub fn build_reverse_lex_complex(f: &FVector) -> Result<SubsetFamily> {
    let n = f.n();
    let mut sets = vec![Subset::EMPTY];
    for l in 1..=n {
        let count = f.get(l).to_usize().ok_or(Error::Capacity {
            what: "complex level size",
            limit: usize::MAX,
            actual: usize::MAX,
        })?;
        let before = sets.len();
        sets.extend(ColexSubsets::new(n, l).take(count));
        if sets.len() - before != count {
            return Err(Error::InvalidFVector(format!(
                "f_{l} = {count} exceeds C({n}, {l})"
            )));
        }
    }
    SubsetFamily::new(n, sets)
}
