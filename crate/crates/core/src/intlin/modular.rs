//! Lattices containing `m Z^k`: row Hermite forms modulo `m` and kernels
//! over `Z/m`.


use super::matrix::Matrix;
use crate::scalar::{xgcd, Checked, IntScalar};

/// Upper-triangular `k x k` basis (as rows) of `rowspace(a) + m Z^k`.
///
/// Each diagonal entry divides `m`; entries right of a pivot are reduced
/// into `[0, pivot)`.
pub fn row_hnf_mod_generic<T: IntScalar>(a: &Matrix<T>, m: &T) -> Checked<Matrix<T>> {
    assert!(*m > T::one(), "modulus must be at least 2");
    let k = a.cols();
    let mut basis: Matrix<T> = Matrix::scalar(k, m.clone());
    let mut v = vec![T::zero(); k];
    for r in 0..a.rows() {
        for (x, y) in v.iter_mut().zip(a.row(r)) {
            *x = y.mod_floor(m);
        }
        insert_row(&mut basis, &mut v, m)?;
    }
    for j in (0..k).rev() {
        reduce_row(&mut basis, j, m)?;
    }
    Ok(basis)
}

fn insert_row<T: IntScalar>(basis: &mut Matrix<T>, v: &mut [T], m: &T) -> Checked<()> {
    let k = v.len();
    for j in 0..k {
        if v[j].is_zero() {
            continue;
        }
        let p = basis[(j, j)].clone();
        let (g, x, y) = xgcd(&p, &v[j])?;
        let pg = p.clone() / g.clone();
        let vg = v[j].clone() / g.clone();
        // [new_row; v] = [[x, y], [vg, -pg]] [row; v], a unimodular step.
        for c in j..k {
            let b = basis[(j, c)].clone();
            let nv = vg.mul_c(&b)?.sub_c(&pg.mul_c(&v[c])?)?;
            let nb = x.mul_c(&b)?.add_c(&y.mul_c(&v[c])?)?;
            basis[(j, c)] = nb;
            v[c] = nv.mod_floor(m);
        }
        reduce_row(basis, j, m)?;
    }
    Ok(())
}

/// Reduces row `j` right of its pivot against the later pivot rows.
fn reduce_row<T: IntScalar>(basis: &mut Matrix<T>, j: usize, m: &T) -> Checked<()> {
    let k = basis.cols();
    for l in j + 1..k {
        let piv = basis[(l, l)].clone();
        let q = basis[(j, l)].div_floor(&piv);
        if q.is_zero() {
            continue;
        }
        for c in l..k {
            let t = basis[(j, c)].sub_mul_c(&q, &basis[(l, c)])?;
            basis[(j, c)] = t;
        }
    }
    debug_assert!(!basis[(j, j)].is_zero() && (m.clone() % basis[(j, j)].clone()).is_zero());
    Ok(())
}

/// `m * t^-1` for the upper-triangular output of [`row_hnf_mod_generic`];
/// its columns form a basis of `{ y : t y = 0 mod m }`.
pub fn scaled_inverse_generic<T: IntScalar>(t: &Matrix<T>, m: &T) -> Checked<Matrix<T>> {
    let k = t.rows();
    let mut x: Matrix<T> = Matrix::zeros(k, k);
    for col in 0..k {
        // Solve t * x_col = m e_col by back substitution.
        for i in (0..k).rev() {
            let mut acc = if i == col { m.clone() } else { T::zero() };
            for l in i + 1..k {
                let tv = &t[(i, l)];
                if !tv.is_zero() && !x[(l, col)].is_zero() {
                    acc = acc.sub_mul_c(&x[(l, col)], tv)?;
                }
            }
            debug_assert!((acc.clone() % t[(i, i)].clone()).is_zero());
            x[(i, col)] = acc / t[(i, i)].clone();
        }
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hnf_mod_of_zero_is_scalar() {
        let a: Matrix<i64> = Matrix::zeros(2, 3);
        assert_eq!(row_hnf_mod_generic(&a, &5).unwrap(), Matrix::scalar(3, 5));
    }

    #[test]
    fn scaled_inverse_is_integral() {
        let a: Matrix<i64> = Matrix::from_i64_rows(&[&[1, 1], &[1, 1]]);
        let t = row_hnf_mod_generic(&a, &2).unwrap();
        let x = scaled_inverse_generic(&t, &2).unwrap();
        assert_eq!(t.try_mul(&x).unwrap(), Matrix::scalar(2, 2));
    }
}
