//! Building monoids from monoids, division, and transductions.

mod division;
mod product;
mod transduction;

pub use division::{divides, generating_set, Divides, DivisionBudget};
pub use product::{bilateral_product, direct_product, pair_index, pair_of, ActionPair};
pub use transduction::{transduce, transduction_preimage, Transduction, MAX_PREIMAGE_STATES};
