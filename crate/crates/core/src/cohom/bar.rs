//! Normalized inhomogeneous bar cochains.
//!
//! A normalized `i`-cochain is a function on `(H \ {1})^i`; tuple
//! `(g_1, ..., g_i)` (element indices, identity = 0) occupies the block
//! starting at `r * sum (g_k - 1) (n - 1)^(i - k)`.

use std::sync::Arc;

use num_bigint::BigInt;

use crate::intlin::IntMat;
use crate::permgrp::Elements;

pub(crate) struct Bar {
    pub elems: Arc<Elements>,
    pub mats: Arc<Vec<IntMat>>,
    pub r: usize,
    pub n: usize,
}

impl Bar {
    pub fn new(elems: Arc<Elements>, mats: Arc<Vec<IntMat>>, r: usize) -> Self {
        let n = elems.len();
        Bar { elems, mats, r, n }
    }

    pub fn dim(&self, i: usize) -> usize {
        (self.n - 1).pow(i as u32) * self.r
    }

    pub fn block(&self, t: &[usize]) -> usize {
        t.iter().fold(0, |acc, &g| acc * (self.n - 1) + (g - 1)) * self.r
    }

    /// All normalized tuples of length `i`, in block order.
    pub fn tuples(&self, i: usize) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new()];
        for _ in 0..i {
            out = out
                .into_iter()
                .flat_map(|t| {
                    (1..self.n).map(move |g| {
                        let mut u = t.clone();
                        u.push(g);
                        u
                    })
                })
                .collect();
        }
        out
    }

    fn add_identity(&self, out: &mut IntMat, row: usize, col: usize, sign: i32) {
        for a in 0..self.r {
            out[(row + a, col + a)] += sign;
        }
    }

    fn add_action(&self, out: &mut IntMat, row: usize, col: usize, g: usize) {
        let m = &self.mats[g];
        for a in 0..self.r {
            for b in 0..self.r {
                let v = &m[(a, b)];
                if v.sign() != num_bigint::Sign::NoSign {
                    out[(row + a, col + b)] += v;
                }
            }
        }
    }

    /// Rows of `d_i : C^i -> C^(i+1)` whose first argument is `g0`.
    pub fn d_rows(&self, i: usize, g0: usize) -> IntMat {
        let tails = self.tuples(i);
        let mut out = IntMat::zeros(tails.len() * self.r, self.dim(i));
        for (ti, t) in tails.iter().enumerate() {
            let row = ti * self.r;
            let mut full = Vec::with_capacity(i + 1);
            full.push(g0);
            full.extend_from_slice(t);
            self.add_action(&mut out, row, self.block(t), g0);
            for j in 1..=i {
                let p = self.elems.mul(full[j - 1], full[j]);
                if p == 0 {
                    continue;
                }
                let mut u = full.clone();
                u.splice(j - 1..=j, [p]);
                self.add_identity(&mut out, row, self.block(&u), if j % 2 == 0 { 1 } else { -1 });
            }
            self.add_identity(&mut out, row, self.block(&full[..i]), if (i + 1).is_multiple_of(2) { 1 } else { -1 });
        }
        out
    }

    /// Full matrix of `d_i`.
    pub fn d(&self, i: usize) -> IntMat {
        if self.n <= 1 {
            return IntMat::zeros(0, self.dim(i));
        }
        let chunks: Vec<IntMat> = (1..self.n).map(|g| self.d_rows(i, g)).collect();
        let refs: Vec<&IntMat> = chunks.iter().collect();
        IntMat::vstack(&refs)
    }

    /// Restriction of a cochain on a supergroup `big` to this group, given
    /// `embed[c]` = index in `big` of element `c` of this group.
    pub fn restrict_from(&self, big: &Bar, embed: &[usize], i: usize, z: &[BigInt]) -> Vec<BigInt> {
        let mut out = Vec::with_capacity(self.dim(i));
        for t in self.tuples(i) {
            let u: Vec<usize> = t.iter().map(|&c| embed[c]).collect();
            let b = big.block(&u);
            out.extend_from_slice(&z[b..b + self.r]);
        }
        out
    }
}

/// Streams row chunks into a row Hermite form modulo `m`.
pub(crate) fn hnf_mod_stream(k: usize, m: &BigInt, chunks: impl Iterator<Item = IntMat>) -> IntMat {
    let mut t: Option<IntMat> = None;
    for c in chunks {
        if c.rows() == 0 {
            continue;
        }
        let a = match &t {
            Some(t) => IntMat::vstack(&[t, &c]),
            None => c,
        };
        t = Some(crate::intlin::row_hnf_mod(&a, m));
    }
    t.unwrap_or_else(|| IntMat::scalar(k, m.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::glat::{aug_kernel, natural};
    use crate::permgrp::PermGroup;

    #[test]
    fn d_squares_to_zero() {
        let s3 = PermGroup::symmetric(3);
        let a = aug_kernel(&natural(&s3)).unwrap();
        let bar = Bar::new(s3.elements().unwrap(), a.element_matrices().unwrap(), a.rank());
        for i in 0..2 {
            assert!(bar.d(i + 1).mul(&bar.d(i)).is_zero(), "d{} d{}", i + 1, i);
        }
    }
}
