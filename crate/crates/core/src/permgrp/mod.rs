//! Finite permutation groups: closures, orbits, cyclic subgroups and
//! subgroup catalogs.

mod group;
mod json;
mod perm;
mod special;
mod subgroups;

pub use group::{Elements, GroupKind, PermGroup, DEFAULT_CLOSURE_CAP};
pub use json::{group_ref, parse_group, GroupSpec};
pub use perm::{cycle_type_rep, partitions, Perm};
pub use special::{alpha_beta, even_pairs, sigma_pi, sylow2_alt, sylow2_sym, SpecialSubgroup};
pub use subgroups::{subgroups_up_to_conjugacy, Completeness, SubgroupCatalog, DEFAULT_SUBGROUP_CAP};
