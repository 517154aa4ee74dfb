use std::fmt;

use num_bigint::BigUint;
use num_traits::Zero;

use super::binomial::binomial;
use crate::error::{Error, Result};

/// One term `C(top, bottom)` of a cascade.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CascadeTerm {
    pub top: u64,
    pub bottom: usize,
}

/// The `l`-binomial (cascade) representation
/// `m = C(a_l, l) + C(a_{l-1}, l-1) + ... + C(a_j, j)` with
/// `a_l > a_{l-1} > ... > a_j >= j >= 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CascadeRep {
    level: usize,
    terms: Vec<CascadeTerm>,
}

impl CascadeRep {
    /// Greedy decomposition of `m >= 1` at level `l >= 1`.
    pub fn decompose(m: &BigUint, level: usize) -> Result<Self> {
        if m.is_zero() || level == 0 {
            return Err(Error::ZeroCascade);
        }
        let mut rem = m.clone();
        let mut terms = Vec::new();
        let mut bottom = level;
        while !rem.is_zero() {
            // rem >= 1 = C(bottom, bottom), and the previous choice guarantees
            // rem < C(prev_top, bottom), so top < prev_top.
            let top = largest_top(&rem, bottom)?;
            rem -= binomial(top, bottom as u64);
            terms.push(CascadeTerm { top, bottom });
            bottom -= 1;
        }
        Ok(CascadeRep { level, terms })
    }

    /// Validates a hand-built term list against the cascade invariants.
    pub fn from_terms(level: usize, terms: Vec<CascadeTerm>) -> Result<Self> {
        if level == 0 || terms.is_empty() {
            return Err(Error::ZeroCascade);
        }
        for (k, t) in terms.iter().enumerate() {
            if t.bottom != level - k {
                return Err(Error::InvalidCascade(format!(
                    "term {k} has lower index {}, expected {}",
                    t.bottom,
                    level - k
                )));
            }
            if (t.top as u128) < t.bottom as u128 {
                return Err(Error::InvalidCascade(format!(
                    "C({}, {}) has top below bottom",
                    t.top, t.bottom
                )));
            }
            if k > 0 && terms[k - 1].top <= t.top {
                return Err(Error::InvalidCascade(
                    "upper indices must strictly decrease".into(),
                ));
            }
        }
        Ok(CascadeRep { level, terms })
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn terms(&self) -> &[CascadeTerm] {
        &self.terms
    }

    /// The represented integer.
    pub fn value(&self) -> BigUint {
        self.terms
            .iter()
            .map(|t| binomial(t.top, t.bottom as u64))
            .sum()
    }

    /// `sum C(a_i, i - 1)`: the least number of `(l-1)`-sets below
    /// `value()` sets of size `l`.
    pub fn shadow(&self) -> BigUint {
        self.terms
            .iter()
            .map(|t| binomial(t.top, t.bottom as u64 - 1))
            .sum()
    }

    /// `sum C(a_i, i + 1)`: the most `(l+1)`-sets whose shadow fits inside
    /// `value()` sets of size `l`.
    pub fn shade(&self) -> BigUint {
        self.terms
            .iter()
            .map(|t| binomial(t.top, t.bottom as u64 + 1))
            .sum()
    }
}

impl fmt::Display for CascadeRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, t) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "C({}, {})", t.top, t.bottom)?;
        }
        Ok(())
    }
}

/// Largest `t >= k` with `C(t, k) <= m`, for `m >= 1`.
fn largest_top(m: &BigUint, k: usize) -> Result<u64> {
    let k64 = k as u64;
    let overflow = || Error::Capacity {
        what: "cascade upper index",
        limit: usize::MAX,
        actual: usize::MAX,
    };
    if k == 1 {
        return u64::try_from(m).map_err(|_| overflow());
    }
    let mut lo = k64;
    let mut step = 1u64;
    let mut hi = lo.checked_add(step).ok_or_else(overflow)?;
    while binomial(hi, k64) <= *m {
        lo = hi;
        step = step.checked_mul(2).ok_or_else(overflow)?;
        hi = lo.checked_add(step).ok_or_else(overflow)?;
    }
    // C(lo, k) <= m < C(hi, k)
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if binomial(mid, k64) <= *m {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(lo)
}

pub fn cascade_decompose(m: &BigUint, l: usize) -> Result<CascadeRep> {
    CascadeRep::decompose(m, l)
}

pub fn cascade_shadow(rep: &CascadeRep) -> BigUint {
    rep.shadow()
}

pub fn cascade_shade(rep: &CascadeRep) -> BigUint {
    rep.shade()
}

/// Minimum lower-shadow size of `m` sets of size `l`; zero for `m = 0`.
pub fn shadow_size(m: &BigUint, l: usize) -> Result<BigUint> {
    if m.is_zero() {
        return Ok(BigUint::zero());
    }
    Ok(CascadeRep::decompose(m, l)?.shadow())
}

/// Maximum upper-shade size over `m` sets of size `l`; zero for `m = 0`.
pub fn shade_size(m: &BigUint, l: usize) -> Result<BigUint> {
    if m.is_zero() {
        return Ok(BigUint::zero());
    }
    Ok(CascadeRep::decompose(m, l)?.shade())
}

/// Exhaustive search for every term list satisfying the cascade invariants
/// that sums to `m` at level `l`. Test oracle only.
#[cfg(test)]
pub(crate) fn all_cascades(m: u64, l: usize) -> Vec<Vec<(u64, usize)>> {
    fn go(
        rem: u64,
        bottom: usize,
        max_top: u64,
        acc: &mut Vec<(u64, usize)>,
        out: &mut Vec<Vec<(u64, usize)>>,
    ) {
        if rem == 0 {
            if !acc.is_empty() {
                out.push(acc.clone());
            }
            return;
        }
        if bottom == 0 {
            return;
        }
        if bottom == 1 {
            // C(top, 1) = top, so only top = rem can finish
            if rem < max_top {
                acc.push((rem, 1));
                out.push(acc.clone());
                acc.pop();
            }
            return;
        }
        for top in bottom as u64..max_top {
            let c = super::binomial::binomial_u128(top, bottom as u64).unwrap();
            if c > rem as u128 {
                break;
            }
            acc.push((top, bottom));
            go(rem - c as u64, bottom - 1, top, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    go(m, l, m + l as u64 + 1, &mut Vec::new(), &mut out);
    out
}
