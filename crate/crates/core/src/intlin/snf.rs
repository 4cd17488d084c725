//! Smith normal form with optional transform tracking.
//!
//! Convention: `a = u * s * v` with `u`, `v` unimodular. The elimination
//! produces `left * a * right = s`, so `left = u^-1` and `right = v^-1`; all
//! four are available on request.


use super::matrix::Matrix;
use crate::scalar::{Checked, IntScalar};

#[derive(Debug, Clone)]
pub struct SmithForm<T> {
    /// Diagonal matrix with the shape of the input.
    pub s: Matrix<T>,
    pub u: Option<Matrix<T>>,
    pub v: Option<Matrix<T>>,
    /// `u^-1`
    pub left: Option<Matrix<T>>,
    /// `v^-1`
    pub right: Option<Matrix<T>>,
}

impl<T: IntScalar> SmithForm<T> {
    /// Nonzero diagonal entries `d_1 | d_2 | ...`.
    pub fn invariant_factors(&self) -> Vec<T> {
        let n = self.s.rows().min(self.s.cols());
        (0..n).map(|i| self.s[(i, i)].clone()).take_while(|d| !d.is_zero()).collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }

    pub fn to_big(&self) -> SmithForm<num_bigint::BigInt> {
        SmithForm {
            s: self.s.to_big(),
            u: self.u.as_ref().map(|m| m.to_big()),
            v: self.v.as_ref().map(|m| m.to_big()),
            left: self.left.as_ref().map(|m| m.to_big()),
            right: self.right.as_ref().map(|m| m.to_big()),
        }
    }
}

/// Which transforms to track.
#[derive(Debug, Clone, Copy, Default)]
pub struct SnfTracking {
    pub u: bool,
    pub v: bool,
    pub left: bool,
    pub right: bool,
}

impl SnfTracking {
    pub const NONE: SnfTracking = SnfTracking { u: false, v: false, left: false, right: false };
    pub const ALL: SnfTracking = SnfTracking { u: true, v: true, left: true, right: true };
}

struct Calc<T> {
    a: Matrix<T>,
    u: Option<Matrix<T>>,
    v: Option<Matrix<T>>,
    left: Option<Matrix<T>>,
    right: Option<Matrix<T>>,
}

impl<T: IntScalar> Calc<T> {
    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        swap_rows(&mut self.a, i, j);
        if let Some(l) = self.left.as_mut() {
            swap_rows(l, i, j);
        }
        if let Some(u) = self.u.as_mut() {
            swap_cols(u, i, j);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        swap_cols(&mut self.a, i, j);
        if let Some(r) = self.right.as_mut() {
            swap_cols(r, i, j);
        }
        if let Some(v) = self.v.as_mut() {
            swap_rows(v, i, j);
        }
    }

    /// row_i -= q * row_j
    fn row_sub(&mut self, i: usize, j: usize, q: &T) -> Checked<()> {
        row_axpy(&mut self.a, i, j, q)?;
        if let Some(l) = self.left.as_mut() {
            row_axpy(l, i, j, q)?;
        }
        if let Some(u) = self.u.as_mut() {
            // u <- u * (I + q e_i e_j^T): col_j += q * col_i
            col_axpy(u, j, i, &q.neg_c()?)?;
        }
        Ok(())
    }

    /// col_i -= q * col_j
    fn col_sub(&mut self, i: usize, j: usize, q: &T) -> Checked<()> {
        col_axpy(&mut self.a, i, j, q)?;
        if let Some(r) = self.right.as_mut() {
            col_axpy(r, i, j, q)?;
        }
        if let Some(v) = self.v.as_mut() {
            // v <- (I + q e_j e_i^T) v: row_j += q * row_i
            row_axpy(v, j, i, &q.neg_c()?)?;
        }
        Ok(())
    }

    fn negate_row(&mut self, i: usize) -> Checked<()> {
        negate_row(&mut self.a, i)?;
        if let Some(l) = self.left.as_mut() {
            negate_row(l, i)?;
        }
        if let Some(u) = self.u.as_mut() {
            negate_col(u, i)?;
        }
        Ok(())
    }
}

fn swap_rows<T: IntScalar>(m: &mut Matrix<T>, i: usize, j: usize) {
    for c in 0..m.cols() {
        let t = m[(i, c)].clone();
        m[(i, c)] = m[(j, c)].clone();
        m[(j, c)] = t;
    }
}

fn swap_cols<T: IntScalar>(m: &mut Matrix<T>, i: usize, j: usize) {
    for r in 0..m.rows() {
        let t = m[(r, i)].clone();
        m[(r, i)] = m[(r, j)].clone();
        m[(r, j)] = t;
    }
}

fn row_axpy<T: IntScalar>(m: &mut Matrix<T>, i: usize, j: usize, q: &T) -> Checked<()> {
    for c in 0..m.cols() {
        if m[(j, c)].is_zero() {
            continue;
        }
        m[(i, c)] = m[(i, c)].sub_mul_c(q, &m[(j, c)])?;
    }
    Ok(())
}

fn col_axpy<T: IntScalar>(m: &mut Matrix<T>, i: usize, j: usize, q: &T) -> Checked<()> {
    for r in 0..m.rows() {
        if m[(r, j)].is_zero() {
            continue;
        }
        m[(r, i)] = m[(r, i)].sub_mul_c(q, &m[(r, j)])?;
    }
    Ok(())
}

fn negate_row<T: IntScalar>(m: &mut Matrix<T>, i: usize) -> Checked<()> {
    for c in 0..m.cols() {
        m[(i, c)] = m[(i, c)].neg_c()?;
    }
    Ok(())
}

fn negate_col<T: IntScalar>(m: &mut Matrix<T>, j: usize) -> Checked<()> {
    for r in 0..m.rows() {
        m[(r, j)] = m[(r, j)].neg_c()?;
    }
    Ok(())
}

pub fn snf_generic<T: IntScalar>(a: &Matrix<T>, track: SnfTracking) -> Checked<SmithForm<T>> {
    let (rows, cols) = (a.rows(), a.cols());
    let mut c = Calc {
        a: a.clone(),
        u: track.u.then(|| Matrix::identity(rows)),
        v: track.v.then(|| Matrix::identity(cols)),
        left: track.left.then(|| Matrix::identity(rows)),
        right: track.right.then(|| Matrix::identity(cols)),
    };
    let n = rows.min(cols);
    for t in 0..n {
        // Smallest nonzero entry of the trailing block becomes the pivot.
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                let x = &c.a[(i, j)];
                if x.is_zero() {
                    continue;
                }
                match best {
                    Some((bi, bj)) if c.a[(bi, bj)].abs() <= x.abs() => {}
                    _ => best = Some((i, j)),
                }
            }
        }
        let Some((bi, bj)) = best else { break };
        c.swap_rows(t, bi);
        c.swap_cols(t, bj);
        loop {
            let mut dirty = false;
            // Clear column t.
            for i in t + 1..rows {
                if c.a[(i, t)].is_zero() {
                    continue;
                }
                let q = c.a[(i, t)].div_floor(&c.a[(t, t)]);
                c.row_sub(i, t, &q)?;
                if !c.a[(i, t)].is_zero() {
                    dirty = true;
                }
            }
            // Clear row t.
            for j in t + 1..cols {
                if c.a[(t, j)].is_zero() {
                    continue;
                }
                let q = c.a[(t, j)].div_floor(&c.a[(t, t)]);
                c.col_sub(j, t, &q)?;
                if !c.a[(t, j)].is_zero() {
                    dirty = true;
                }
            }
            if !dirty {
                // Divisibility: the pivot must divide the whole trailing block.
                let p = c.a[(t, t)].clone();
                let mut bad = None;
                'outer: for i in t + 1..rows {
                    for j in t + 1..cols {
                        if !(c.a[(i, j)].clone() % p.clone()).is_zero() {
                            bad = Some(i);
                            break 'outer;
                        }
                    }
                }
                match bad {
                    None => break,
                    Some(i) => {
                        // row_t += row_i, then keep reducing.
                        c.row_sub(t, i, &T::one().neg_c()?)?;
                        continue;
                    }
                }
            }
            // Move the smallest remaining entry of row/column t to the pivot.
            let mut best = (t, t);
            for i in t..rows {
                let x = &c.a[(i, t)];
                if !x.is_zero() && x.abs() < c.a[best].abs() {
                    best = (i, t);
                }
            }
            for j in t..cols {
                let x = &c.a[(t, j)];
                if !x.is_zero() && x.abs() < c.a[best].abs() {
                    best = (t, j);
                }
            }
            c.swap_rows(t, best.0);
            c.swap_cols(t, best.1);
        }
        if c.a[(t, t)].is_negative() {
            c.negate_row(t)?;
        }
    }
    Ok(SmithForm { s: c.a, u: c.u, v: c.v, left: c.left, right: c.right })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diag_two_three() {
        let a: Matrix<i64> = Matrix::from_i64_rows(&[&[2, 0], &[0, 3]]);
        let s = snf_generic(&a, SnfTracking::ALL).unwrap();
        assert_eq!(s.invariant_factors(), vec![1, 6]);
        let back = s.u.as_ref().unwrap().try_mul(&s.s).unwrap().try_mul(s.v.as_ref().unwrap()).unwrap();
        assert_eq!(back, a);
        let lar = s.left.as_ref().unwrap().try_mul(&a).unwrap().try_mul(s.right.as_ref().unwrap()).unwrap();
        assert_eq!(lar, s.s);
    }
}
