//! Exact inversion of small integer matrices over ℚ.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Inverse of a square integer matrix, or `None` if it is singular.
pub fn invert(m: &[Vec<BigInt>]) -> Option<Vec<Vec<BigRational>>> {
    let n = m.len();
    let mut a: Vec<Vec<BigRational>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            assert_eq!(row.len(), n, "matrix must be square");
            let mut r: Vec<BigRational> = row.iter().cloned().map(BigRational::from_integer).collect();
            r.extend((0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }));
            r
        })
        .collect();

    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        let inv = a[col][col].recip();
        for v in a[col].iter_mut() {
            *v *= &inv;
        }
        let pivot_row = a[col].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r == col || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (v, pv) in row.iter_mut().zip(&pivot_row) {
                *v -= &factor * pv;
            }
        }
    }
    Some(a.into_iter().map(|row| row[n..].to_vec()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int_matrix(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    fn mul(a: &[Vec<BigInt>], b: &[Vec<BigRational>]) -> Vec<Vec<BigRational>> {
        let n = a.len();
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        (0..n)
                            .map(|k| BigRational::from_integer(a[i][k].clone()) * &b[k][j])
                            .fold(BigRational::zero(), |x, y| x + y)
                    })
                    .collect()
            })
            .collect()
    }

    #[test]
    fn inverse_times_matrix_is_identity() {
        let m = int_matrix(&[&[2, 0, 1], &[0, 1, 0], &[1, 0, 2]]);
        let inv = invert(&m).unwrap();
        let prod = mul(&m, &inv);
        for (i, row) in prod.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                assert_eq!(v.is_one(), i == j);
                assert_eq!(v.is_zero(), i != j);
            }
        }
        assert_eq!(inv[0][0], BigRational::new(2.into(), 3.into()));
    }

    #[test]
    fn needs_row_swap() {
        let m = int_matrix(&[&[0, 1], &[1, 0]]);
        assert_eq!(invert(&m).unwrap(), vec![
            vec![BigRational::zero(), BigRational::one()],
            vec![BigRational::one(), BigRational::zero()],
        ]);
    }

    #[test]
    fn singular() {
        assert!(invert(&int_matrix(&[&[1, 2], &[2, 4]])).is_none());
        assert!(invert(&int_matrix(&[&[0]])).is_none());
        assert_eq!(invert(&[]), Some(vec![]));
    }
}
