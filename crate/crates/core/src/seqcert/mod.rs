//! Exact sequences, named builders, splittings and equivalence certificates.

mod cert;
mod json;
mod named;
mod seq;
mod split;

pub use cert::{
    cert_aug_zero, cert_dsum, cert_from_quotient, cert_identity, cert_permutation_zero, witness_from_split,
    EquivCertificate, StableWitness,
};
pub use json::{cert_to_json, seq_to_json};
pub use named::{
    build_named, build_named_on, gn_middle_witness, odd_orbit_sum, rho_matrix, rho_w_matrix, square, sym2u_matrix, NamedSeq,
    MAX_NAMED_DEGREE,
};
pub use seq::{identity_seq, verify_exact, ExactSeq, Term};
pub use split::{find_splitting, splice_pullback, Splice};
