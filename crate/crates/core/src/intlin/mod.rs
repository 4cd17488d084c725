//! Exact integer linear algebra.
//!
//! Every routine is generic over [`IntScalar`]. The public entry points take
//! arbitrary-precision matrices, try a checked `i64` pass first and redo the
//! work in `BigInt` when an intermediate overflows.

mod abelian;
mod echelon;
mod json;
mod matrix;
mod modular;
mod snf;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub use abelian::AbelianInvariants;
pub use echelon::{
    column_echelon, det_generic, hnf_generic, is_unimodular_generic, kernel_generic, lattice_basis_generic,
    reduce_echelon, solve_generic, ColumnEchelon,
};
pub use json::{matrix_from_json, matrix_to_json};
pub use matrix::Matrix;
pub use modular::{row_hnf_mod_generic, scaled_inverse_generic};
pub use snf::{snf_generic, SmithForm, SnfTracking};

use crate::scalar::{Checked, IntScalar};

/// Arbitrary-precision integer matrix.
pub type IntMat = Matrix<BigInt>;

/// Runs `small` on `i64` copies of the inputs and falls back to `big` on
/// overflow (or when the inputs do not fit).
pub fn run_exact<R>(small: impl FnOnce() -> Checked<R>, big: impl FnOnce() -> Checked<R>) -> R {
    match small() {
        Ok(r) => r,
        Err(_) => big().expect("arbitrary precision arithmetic cannot overflow"),
    }
}

fn small(a: &IntMat) -> Checked<Matrix<i64>> {
    // Leave headroom so that a few products still fit before checks trigger.
    if a.max_abs_bits() > 40 {
        return Err(crate::scalar::Overflow);
    }
    a.convert::<i64>().ok_or(crate::scalar::Overflow)
}

fn small_int(x: &BigInt) -> Checked<i64> {
    i64::try_from(x).map_err(|_| crate::scalar::Overflow)
}

pub fn snf_with(a: &IntMat, track: SnfTracking) -> SmithForm<BigInt> {
    run_exact(
        || Ok(snf_generic(&small(a)?, track)?.to_big()),
        || snf_generic(a, track),
    )
}

/// Smith form with all four transforms.
pub fn snf(a: &IntMat) -> SmithForm<BigInt> {
    snf_with(a, SnfTracking::ALL)
}

pub fn invariant_factors(a: &IntMat) -> Vec<BigInt> {
    snf_with(a, SnfTracking::NONE).invariant_factors()
}

/// Column Hermite form `[H | 0]`.
pub fn hnf(a: &IntMat) -> IntMat {
    run_exact(|| Ok(hnf_generic(&small(a)?)?.to_big()), || hnf_generic(a))
}

/// Hermite basis of the column lattice of `a`.
pub fn lattice_basis(a: &IntMat) -> IntMat {
    run_exact(|| Ok(lattice_basis_generic(&small(a)?)?.to_big()), || lattice_basis_generic(a))
}

pub fn rank(a: &IntMat) -> usize {
    run_exact(|| Ok(column_echelon(&small(a)?, false)?.rank()), || Ok(column_echelon(a, false)?.rank()))
}

pub fn echelon(a: &IntMat, track: bool) -> ColumnEchelon<BigInt> {
    run_exact(
        || {
            let e = column_echelon(&small(a)?, track)?;
            Ok(ColumnEchelon {
                basis: e.basis.to_big(),
                pivots: e.pivots,
                transform: e.transform.map(|t| t.to_big()),
            })
        },
        || column_echelon(a, track),
    )
}

/// Basis (as columns) of the saturated kernel `{x : a x = 0}`.
pub fn kernel_basis(a: &IntMat) -> IntMat {
    run_exact(|| Ok(kernel_generic(&small(a)?)?.to_big()), || kernel_generic(a))
}

/// Some integral solution of `a x = b`.
pub fn solve_linear(a: &IntMat, b: &IntMat) -> Option<IntMat> {
    run_exact(
        || Ok(solve_generic(&small(a)?, &small(b)?)?.map(|m| m.to_big())),
        || solve_generic(a, b),
    )
}

/// True iff every column of `b` lies in the column lattice of `a`.
pub fn in_lattice(a: &IntMat, b: &IntMat) -> bool {
    solve_linear(a, b).is_some()
}

/// `Z^rows / col(a)`.
pub fn cokernel_invariants(a: &IntMat) -> AbelianInvariants {
    let f = invariant_factors(a);
    let free = a.rows() - f.len();
    AbelianInvariants::from_factors(f, free)
}

pub fn det(a: &IntMat) -> BigInt {
    run_exact(|| Ok(BigInt::from(det_generic(&small(a)?)?)), || det_generic(a))
}

pub fn is_unimodular(a: &IntMat) -> bool {
    a.is_square() && det(a).abs().is_one()
}

/// Inverse of a unimodular matrix; `None` otherwise.
pub fn inverse_unimodular(a: &IntMat) -> Option<IntMat> {
    if !a.is_square() {
        return None;
    }
    let x = solve_linear(a, &IntMat::identity(a.rows()))?;
    // a x = I forces det a = +-1, so x is a two-sided inverse.
    Some(x)
}

/// Row basis of `rowspace(a) + m Z^k` (upper triangular, `k x k`).
pub fn row_hnf_mod(a: &IntMat, m: &BigInt) -> IntMat {
    run_exact(
        || Ok(row_hnf_mod_generic(&small(a)?, &small_int(m)?)?.to_big()),
        || row_hnf_mod_generic(a, m),
    )
}

/// `m * t^-1` for an output `t` of [`row_hnf_mod`].
pub fn scaled_inverse(t: &IntMat, m: &BigInt) -> IntMat {
    run_exact(
        || Ok(scaled_inverse_generic(&small(t)?, &small_int(m)?)?.to_big()),
        || scaled_inverse_generic(t, m),
    )
}

/// Kernel of `a` over `Z/m`: returns `(x, t)` where the columns of `x` span
/// `{y in Z^k : a y = 0 mod m}` (a full-rank lattice containing `m Z^k`) and
/// `t` is the row form used to build it.
pub fn kernel_mod(a: &IntMat, m: &BigInt) -> (IntMat, IntMat) {
    let t = row_hnf_mod(a, m);
    let x = scaled_inverse(&t, m);
    (x, t)
}

/// Exact division of every entry by `d`; panics if some entry is not divisible.
pub fn div_exact(a: &IntMat, d: &BigInt) -> IntMat {
    let data = a
        .data()
        .iter()
        .map(|v| {
            assert!((v % d).is_zero(), "inexact division");
            v / d
        })
        .collect();
    IntMat::from_vec(a.rows(), a.cols(), data)
}

/// Converts a slice of small integers to a `BigInt` vector.
pub fn bigvec(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

/// Generic helper: `Z^rows / col(a)` computed in a single scalar type.
pub fn cokernel_generic<T: IntScalar>(a: &Matrix<T>) -> Checked<AbelianInvariants> {
    let s = snf_generic(a, SnfTracking::NONE)?;
    let f: Vec<BigInt> = s.invariant_factors().iter().map(|x| x.to_big()).collect();
    let free = a.rows() - f.len();
    Ok(AbelianInvariants::from_factors(f, free))
}
