//! Column echelon form and everything built on it: Hermite normal form,
//! saturated kernels and integral linear solving.


use super::matrix::Matrix;
use crate::scalar::{Checked, IntScalar};

/// `a * transform = [basis | 0]` with `basis` in column echelon form.
///
/// Column `j` of `basis` has its first nonzero entry (positive) at row
/// `pivots[j]`, and `pivots` is strictly increasing.
#[derive(Debug, Clone)]
pub struct ColumnEchelon<T> {
    pub basis: Matrix<T>,
    pub pivots: Vec<usize>,
    pub transform: Option<Matrix<T>>,
}

impl<T: IntScalar> ColumnEchelon<T> {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Solves `basis * y = b` by forward substitution on the pivot rows.
    /// Returns `None` if the system has no integral solution.
    pub fn solve_basis(&self, b: &[T]) -> Checked<Option<Vec<T>>> {
        let k = self.rank();
        let mut y: Vec<T> = Vec::with_capacity(k);
        for (j, &p) in self.pivots.iter().enumerate() {
            let mut acc = b[p].clone();
            for (l, yl) in y.iter().enumerate() {
                let e = &self.basis[(p, l)];
                if !e.is_zero() && !yl.is_zero() {
                    acc = acc.sub_mul_c(yl, e)?;
                }
            }
            let piv = &self.basis[(p, j)];
            if !(acc.clone() % piv.clone()).is_zero() {
                return Ok(None);
            }
            y.push(acc / piv.clone());
        }
        // The remaining rows must agree.
        let check = self.basis.try_mul_vec(&y)?;
        if check.as_slice() != b {
            return Ok(None);
        }
        Ok(Some(y))
    }
}

fn col_axpy<T: IntScalar>(target: &mut [T], q: &T, src: &[T], support: &[usize]) -> Checked<()> {
    for &i in support {
        target[i] = target[i].sub_mul_c(q, &src[i])?;
    }
    Ok(())
}

fn support_from<T: IntScalar>(col: &[T], start: usize) -> Vec<usize> {
    (start..col.len()).filter(|&i| !col[i].is_zero()).collect()
}

/// Column echelon form by gcd column operations.
pub fn column_echelon<T: IntScalar>(a: &Matrix<T>, track: bool) -> Checked<ColumnEchelon<T>> {
    let rows = a.rows();
    let n = a.cols();
    let mut cols = a.to_cols();
    let mut tr: Option<Vec<Vec<T>>> = track.then(|| Matrix::<T>::identity(n).to_cols());
    let mut pivots = Vec::new();
    let mut k = 0;
    for i in 0..rows {
        if k == n {
            break;
        }
        let mut found = false;
        loop {
            let mut best: Option<usize> = None;
            for j in k..n {
                let v = &cols[j][i];
                if v.is_zero() {
                    continue;
                }
                match best {
                    Some(b) if cols[b][i].abs() <= v.abs() => {}
                    _ => best = Some(j),
                }
            }
            let Some(b) = best else { break };
            found = true;
            cols.swap(k, b);
            if let Some(t) = tr.as_mut() {
                t.swap(k, b);
            }
            let piv_support = support_from(&cols[k], i);
            let tr_support: Vec<usize> = tr.as_ref().map(|t| support_from(&t[k], 0)).unwrap_or_default();
            let mut clean = true;
            let (head, tail) = cols.split_at_mut(k + 1);
            let pcol = &head[k];
            let p = pcol[i].clone();
            for (off, c) in tail.iter_mut().enumerate() {
                if c[i].is_zero() {
                    continue;
                }
                let q = c[i].div_floor(&p);
                col_axpy(c, &q, pcol, &piv_support)?;
                if let Some(t) = tr.as_mut() {
                    let (th, tt) = t.split_at_mut(k + 1);
                    col_axpy(&mut tt[off], &q, &th[k], &tr_support)?;
                }
                if !c[i].is_zero() {
                    clean = false;
                }
            }
            if clean {
                break;
            }
        }
        if found {
            if cols[k][i].is_negative() {
                for v in cols[k][i..].iter_mut() {
                    *v = v.neg_c()?;
                }
                if let Some(t) = tr.as_mut() {
                    for v in t[k].iter_mut() {
                        *v = v.neg_c()?;
                    }
                }
            }
            pivots.push(i);
            k += 1;
        }
    }
    let basis = Matrix::from_cols(rows, &cols[..k]);
    let transform = tr.map(|t| Matrix::from_cols(n, &t));
    Ok(ColumnEchelon { basis, pivots, transform })
}

/// Reduces entries left of each pivot into `[0, pivot)`, turning an echelon
/// form into the Hermite normal form.
pub fn reduce_echelon<T: IntScalar>(e: &mut ColumnEchelon<T>) -> Checked<()> {
    let rows = e.basis.rows();
    let mut cols = e.basis.to_cols();
    let mut tr = e.transform.as_ref().map(|t| t.to_cols());
    for (j, &p) in e.pivots.iter().enumerate() {
        let piv = cols[j][p].clone();
        let support = support_from(&cols[j], p);
        let tr_support: Vec<usize> = tr.as_ref().map(|t| support_from(&t[j], 0)).unwrap_or_default();
        for l in 0..j {
            let q = cols[l][p].div_floor(&piv);
            if q.is_zero() {
                continue;
            }
            let (head, tail) = cols.split_at_mut(j);
            col_axpy(&mut head[l], &q, &tail[0], &support)?;
            if let Some(t) = tr.as_mut() {
                let (th, tt) = t.split_at_mut(j);
                col_axpy(&mut th[l], &q, &tt[0], &tr_support)?;
            }
        }
    }
    e.basis = Matrix::from_cols(rows, &cols);
    if let Some(t) = tr {
        let n = e.transform.as_ref().map_or(0, |m| m.rows());
        e.transform = Some(Matrix::from_cols(n, &t));
    }
    Ok(())
}

/// Column-style Hermite normal form `[H | 0]`, same shape as `a`.
pub fn hnf_generic<T: IntScalar>(a: &Matrix<T>) -> Checked<Matrix<T>> {
    let mut e = column_echelon(a, false)?;
    reduce_echelon(&mut e)?;
    let mut out = Matrix::zeros(a.rows(), a.cols());
    for j in 0..e.rank() {
        for i in 0..a.rows() {
            out[(i, j)] = e.basis[(i, j)].clone();
        }
    }
    Ok(out)
}

/// Hermite basis of the column lattice (rank columns only).
pub fn lattice_basis_generic<T: IntScalar>(a: &Matrix<T>) -> Checked<Matrix<T>> {
    let mut e = column_echelon(a, false)?;
    reduce_echelon(&mut e)?;
    Ok(e.basis)
}

/// Saturated kernel basis, returned in Hermite form.
pub fn kernel_generic<T: IntScalar>(a: &Matrix<T>) -> Checked<Matrix<T>> {
    let e = column_echelon(a, true)?;
    let t = e.transform.expect("tracked");
    let idx: Vec<usize> = (e.pivots.len()..a.cols()).collect();
    let k = t.select_cols(&idx);
    if k.cols() == 0 {
        return Ok(k);
    }
    lattice_basis_generic(&k)
}

/// Some integral `x` with `a x = b`, or `None`.
pub fn solve_generic<T: IntScalar>(a: &Matrix<T>, b: &Matrix<T>) -> Checked<Option<Matrix<T>>> {
    assert_eq!(a.rows(), b.rows(), "solve: shape mismatch");
    let e = column_echelon(a, true)?;
    let t = e.transform.as_ref().expect("tracked");
    let k = e.rank();
    let mut out = Matrix::zeros(a.cols(), b.cols());
    for j in 0..b.cols() {
        let rhs = b.col(j);
        let Some(y) = e.solve_basis(&rhs)? else { return Ok(None) };
        for i in 0..a.cols() {
            let mut acc = T::zero();
            for (l, yl) in y.iter().enumerate().take(k) {
                let tv = &t[(i, l)];
                if !tv.is_zero() && !yl.is_zero() {
                    acc = acc.add_c(&tv.mul_c(yl)?)?;
                }
            }
            out[(i, j)] = acc;
        }
    }
    Ok(Some(out))
}

/// Exact determinant by fraction-free (Bareiss) elimination.
pub fn det_generic<T: IntScalar>(a: &Matrix<T>) -> Checked<T> {
    assert!(a.is_square(), "determinant of non-square matrix");
    let n = a.rows();
    if n == 0 {
        return Ok(T::one());
    }
    let mut m = a.clone();
    let mut sign = T::one();
    let mut prev = T::one();
    for k in 0..n {
        if m[(k, k)].is_zero() {
            let Some(r) = (k + 1..n).find(|&r| !m[(r, k)].is_zero()) else { return Ok(T::zero()) };
            for c in 0..n {
                let tmp = m[(k, c)].clone();
                m[(k, c)] = m[(r, c)].clone();
                m[(r, c)] = tmp;
            }
            sign = sign.neg_c()?;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = m[(i, j)].mul_c(&m[(k, k)])?.sub_c(&m[(i, k)].mul_c(&m[(k, j)])?)?;
                m[(i, j)] = v / prev.clone();
            }
        }
        prev = m[(k, k)].clone();
    }
    sign.mul_c(&m[(n - 1, n - 1)])
}

pub fn is_unimodular_generic<T: IntScalar>(a: &Matrix<T>) -> Checked<bool> {
    Ok(a.is_square() && det_generic(a)?.abs().is_one())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Matrix<i64> {
        Matrix::from_i64_rows(rows)
    }

    #[test]
    fn echelon_transform_is_consistent() {
        let a = m(&[&[2, 4, 6], &[1, 3, 5], &[0, 0, 1]]);
        let e = column_echelon(&a, true).unwrap();
        let t = e.transform.clone().unwrap();
        let at = a.try_mul(&t).unwrap();
        for j in 0..e.rank() {
            assert_eq!(at.col(j), e.basis.col(j));
        }
        assert_eq!(e.rank(), 3);
        assert_eq!(det_generic(&t).unwrap().abs(), 1);
    }

    #[test]
    fn bareiss_determinant() {
        assert_eq!(det_generic(&m(&[&[2, 0], &[0, 3]])).unwrap(), 6);
        assert_eq!(det_generic(&m(&[&[0, 1], &[1, 0]])).unwrap(), -1);
        assert_eq!(det_generic(&m(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 10]])).unwrap(), -3);
        assert_eq!(det_generic(&m(&[&[1, 2], &[2, 4]])).unwrap(), 0);
    }
}
