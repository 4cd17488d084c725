//! Group cohomology of lattices and finite modules.

mod bar;
mod hbar;
mod json;
mod sequence;
mod sha;
mod tate;

pub use hbar::{h_bar, h_bar_capped, CohomGroup, Coeffs, Path};
pub use json::{cohom_json, invariants_json, invariants_list, sha_json};
pub use sha::{restriction, restriction_map, sha, sha_capped, Restriction, ShaGroup};
pub use tate::{h1_aug_formula, h1_dual_fast, sha1_aug_fast, sha1_aug_fast_capped, tate_h0, tate_hm1};
pub use sequence::{sha2_via_sequence, sha2_via_sequence_capped, sha2_via_sequence_with};
