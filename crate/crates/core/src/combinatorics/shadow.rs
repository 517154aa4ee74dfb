use std::collections::BTreeSet;

use super::subset::SubsetFamily;
use crate::error::{Error, Result};

/// All `(l-1)`-subsets contained in some member of an `l`-uniform family.
pub fn family_lower_shadow(family: &SubsetFamily) -> Result<SubsetFamily> {
    let Some(first) = family.sets().first() else {
        return SubsetFamily::empty(family.n());
    };
    let l = first.len();
    if l == 0 {
        return Err(Error::EmptyMember);
    }
    let mut out = BTreeSet::new();
    for s in family {
        if s.len() != l {
            return Err(Error::NonUniform {
                expected: l,
                found: s.len(),
            });
        }
        out.extend(s.iter().map(|i| s.without(i)));
    }
    SubsetFamily::new(family.n(), out)
}

/// All `(l+1)`-subsets of `{1..n}` containing some member of an `l`-uniform family.
pub fn family_upper_shadow(family: &SubsetFamily) -> Result<SubsetFamily> {
    let n = family.n();
    let Some(first) = family.sets().first() else {
        return SubsetFamily::empty(n);
    };
    let l = first.len();
    let mut out = BTreeSet::new();
    for s in family {
        if s.len() != l {
            return Err(Error::NonUniform {
                expected: l,
                found: s.len(),
            });
        }
        out.extend(s.complement(n).iter().map(|i| s.with(i)));
    }
    SubsetFamily::new(n, out)
}
