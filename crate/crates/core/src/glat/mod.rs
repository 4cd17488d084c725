//! G-lattices and the constructions used on them.

mod finmod;
mod fixtures;
mod functors;
mod homs;
mod json;
mod lattice;
mod permlat;

pub use finmod::{mod_m, FinModule};
pub use fixtures::{fixture, parse_fixture, split_fixture, FIXTURE_NAMES};
pub use functors::{
    antisym_embedding, dsum, dsum_all, dual, induce, sym2, sym2_basis, sym2_map, sym2_matrix, symmetrization, tensor,
    wedge2, wedge2_basis, wedge2_map, wedge2_matrix,
};
pub use homs::{
    equivariant_homs, find_iso, find_iso_bounded, fixed_points, fixed_points_mod, sublattice, verify_iso, ISO_SEARCH_BUDGET,
};
pub use json::{lattice_from_json, lattice_to_json};
pub use lattice::{rank1_twist, sign_lattice, trivial_lattice, Character, Evaluator, GLattice};
pub use permlat::{
    aug_inclusion, aug_kernel, aug_projection, augmentation, coset_lattice, natural, ordered_pairs, pair_index,
    pair_subsets, perm_lattice_from_action, unordered_pairs, CosetSpace, PointAction,
};
