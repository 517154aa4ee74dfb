//! Exact binomial arithmetic, cascade representations, subset orderings and
//! shadows of uniform families.

mod binomial;
mod cascade;
mod order;
mod shadow;
mod subset;

pub use binomial::{binomial, factorial};
pub use cascade::{
    cascade_decompose, cascade_shade, cascade_shadow, shade_size, shadow_size, CascadeRep,
    CascadeTerm,
};
pub use order::{colex_rank, colex_unrank, lex_rank, lex_unrank, ColexSubsets, LexSubsets};
pub use shadow::{family_lower_shadow, family_upper_shadow};
pub use subset::{Members, Subset, SubsetFamily, MAX_UNIVERSE};

pub(crate) use subset::{check_fits, check_universe};
