//! JSON documents exchanged with the command-line front end.
//!
//! * system: `{"n": 5, "min_cut_sets": [[1, 2], [1, 3]]}`, 1-based, lex-sorted
//! * signature: `{"n": 5, "counts": [0, 24, 36, 36, 24], "signature": ["0", "1/5", ...]}`
//! * verdict: `{"realizable": true, "witness": <system>|null, "violation": {"stage": ..., "level": ...}|null}`
//!
//! Counts are plain JSON integers of any size.

use std::str::FromStr;

use num_bigint::BigUint;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::combinatorics::{Subset, SubsetFamily};
use crate::error::{Error, Result};
use crate::realizability::{RealizabilityVerdict, Rejection};
use crate::signature::CountVector;
use crate::system::{extract_minimal, AntichainFamily, System};

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct SystemDoc {
    pub n: usize,
    pub min_cut_sets: Vec<Vec<usize>>,
}

/// How a [`SystemDoc`] was turned into a [`System`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Normalization {
    /// The listed sets were already a duplicate-free antichain.
    AsGiven,
    /// Duplicates or non-minimal sets were dropped.
    Minimized,
}

impl SystemDoc {
    pub fn from_family(family: &AntichainFamily) -> Self {
        SystemDoc {
            n: family.n(),
            min_cut_sets: family.to_index_lists(),
        }
    }

    pub fn from_system(system: &System) -> Self {
        Self::from_family(system.min_cut_sets())
    }

    /// Builds the system. With `strict`, anything other than an antichain of
    /// distinct sets is rejected; otherwise the family is minimized.
    pub fn to_system(&self, strict: bool) -> Result<(System, Normalization)> {
        let mut sets = Vec::with_capacity(self.min_cut_sets.len());
        for list in &self.min_cut_sets {
            let s = Subset::from_indices(list.iter().copied())?;
            if s.len() != list.len() {
                return Err(Error::DuplicateMember(format!("index repeated in {list:?}")));
            }
            sets.push(s);
        }
        let family = SubsetFamily::from_sets_dedup(self.n, sets.iter().copied())?;
        let had_duplicates = family.len() != sets.len();
        if strict {
            if had_duplicates {
                let dup = sets
                    .iter()
                    .enumerate()
                    .find(|(i, s)| sets[..*i].contains(s))
                    .map(|(_, s)| s.to_string())
                    .unwrap_or_default();
                return Err(Error::DuplicateMember(dup));
            }
            let cuts = AntichainFamily::new(self.n, family.into_sets())?;
            return Ok((System::new(cuts), Normalization::AsGiven));
        }
        let cuts = extract_minimal(&family)?;
        let normalization = if had_duplicates || cuts.len() != family.len() {
            Normalization::Minimized
        } else {
            Normalization::AsGiven
        };
        Ok((System::new(cuts), normalization))
    }
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct SignatureDoc {
    pub n: usize,
    #[serde(serialize_with = "ser_counts", deserialize_with = "de_counts")]
    pub counts: Vec<BigUint>,
    pub signature: Vec<String>,
}

impl SignatureDoc {
    pub fn from_counts(counts: &CountVector) -> Self {
        SignatureDoc {
            n: counts.n(),
            counts: counts.counts().to_vec(),
            signature: counts
                .to_signature()
                .entries()
                .iter()
                .map(|q| q.to_string())
                .collect(),
        }
    }
}

pub fn ser_counts<S: Serializer>(counts: &[BigUint], s: S) -> Result<S::Ok, S::Error> {
    use serde::ser::{Error as _, SerializeSeq};
    let mut seq = s.serialize_seq(Some(counts.len()))?;
    for c in counts {
        let num = serde_json::Number::from_str(&c.to_string()).map_err(S::Error::custom)?;
        seq.serialize_element(&num)?;
    }
    seq.end()
}

pub fn de_counts<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigUint>, D::Error> {
    use serde::de::Error as _;
    let nums = Vec::<serde_json::Number>::deserialize(d)?;
    nums.iter()
        .map(|num| BigUint::from_str(&num.to_string()).map_err(D::Error::custom))
        .collect()
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct ViolationDoc {
    pub stage: String,
    pub level: Option<usize>,
}

impl From<&Rejection> for ViolationDoc {
    fn from(r: &Rejection) -> Self {
        ViolationDoc {
            stage: r.stage().to_string(),
            level: r.level(),
        }
    }
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct VerdictDoc {
    pub realizable: bool,
    pub witness: Option<SystemDoc>,
    pub violation: Option<ViolationDoc>,
}

impl From<&RealizabilityVerdict> for VerdictDoc {
    fn from(v: &RealizabilityVerdict) -> Self {
        match v {
            RealizabilityVerdict::Realizable { witness } => VerdictDoc {
                realizable: true,
                witness: Some(SystemDoc::from_family(witness)),
                violation: None,
            },
            RealizabilityVerdict::NotRealizable(r) => VerdictDoc {
                realizable: false,
                witness: None,
                violation: Some(r.into()),
            },
        }
    }
}
