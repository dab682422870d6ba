//! Fraction-free determinants of Laurent-polynomial matrices.

use crate::laurent::{Coeff, LaurentPoly};

/// Exact determinant of a square matrix of Laurent polynomials.
///
/// A monomial unit is first factored out of every row so that all entries
/// live in the ordinary polynomial subring; fraction-free Bareiss elimination
/// then runs entirely in that subring (every division by a previous pivot is
/// exact), and the extracted monomials are multiplied back at the end.
/// Pivoting picks the first row with a nonzero entry in the current column;
/// a column without pivots short-circuits to determinant zero.
pub fn bareiss_det<C: Coeff>(matrix: &[Vec<LaurentPoly<C>>]) -> LaurentPoly<C> {
    let n = matrix.len();
    assert!(n > 0, "bareiss_det needs a nonempty matrix");
    let mu = matrix[0][0].mu();
    for row in matrix {
        assert_eq!(row.len(), n, "matrix must be square");
    }

    // Row contents: matrix[r] = t^content[r] * m[r] with ordinary-poly rows.
    let mut content: Vec<Vec<i32>> = Vec::with_capacity(n);
    let mut m: Vec<Vec<LaurentPoly<C>>> = Vec::with_capacity(n);
    for row in matrix {
        let mut mins: Option<Vec<i32>> = None;
        for entry in row {
            if entry.is_zero() {
                continue;
            }
            let e = entry.min_exponents();
            mins = Some(match mins {
                None => e,
                Some(prev) => prev.iter().zip(&e).map(|(a, b)| *a.min(b)).collect(),
            });
        }
        let Some(mins) = mins else {
            return LaurentPoly::zero(mu); // all-zero row
        };
        let neg: Vec<i32> = mins.iter().map(|&e| -e).collect();
        m.push(row.iter().map(|p| p.shifted(&neg)).collect());
        content.push(mins);
    }

    let mut sign = 1i64;
    let mut prev = LaurentPoly::one(mu);
    for k in 0..n {
        let pivot = (k..n).find(|&r| !m[r][k].is_zero());
        let Some(pivot) = pivot else {
            return LaurentPoly::zero(mu);
        };
        if pivot != k {
            m.swap(k, pivot);
            sign = -sign;
        }
        if k + 1 == n {
            break;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num
                    .exact_div(&prev)
                    .expect("Bareiss division by the previous pivot is exact");
            }
            m[i][k] = LaurentPoly::zero(mu);
        }
        prev = m[k][k].clone();
    }

    let mut det = m[n - 1][n - 1].clone();
    if sign < 0 {
        det = -&det;
    }
    let mut total = vec![0i32; mu];
    for c in &content {
        for (t, e) in total.iter_mut().zip(c) {
            *t += e;
        }
    }
    det.shifted(&total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    type P = LaurentPoly<BigInt>;

    fn int(n: i64) -> P {
        P::constant(1, BigInt::from(n))
    }

    #[test]
    fn one_by_one() {
        let p = P::from_terms(1, [(vec![3], BigInt::from(2)), (vec![-1], BigInt::from(1))]);
        assert_eq!(bareiss_det(&[vec![p.clone()]]), p);
    }

    #[test]
    fn integer_two_by_two() {
        let mat = vec![vec![int(1), int(2)], vec![int(3), int(4)]];
        assert_eq!(bareiss_det(&mat), int(-2));
    }

    #[test]
    fn rank_one_laurent_matrix() {
        // [[t0, 1], [1, t0^-1]] has determinant zero.
        let t0 = P::var(1, 0);
        let t0inv = P::monomial(1, vec![-1], BigInt::from(1));
        let mat = vec![vec![t0, P::one(1)], vec![P::one(1), t0inv]];
        assert!(bareiss_det(&mat).is_zero());
    }

    #[test]
    fn pivoting_handles_leading_zeros() {
        // [[0, 1], [1, 0]] = -1
        let mat = vec![vec![int(0), int(1)], vec![int(1), int(0)]];
        assert_eq!(bareiss_det(&mat), int(-1));
    }

    #[test]
    fn three_by_three_with_laurent_entries() {
        // det [[t, 1, 0], [1, t^-1, 1], [0, 1, t]] = -t by cofactors:
        // t*(t^-1*t - 1) - 1*(t - 0) + 0 = 0 - t.
        let t0 = P::var(1, 0);
        let t0inv = P::monomial(1, vec![-1], BigInt::from(1));
        let z = P::zero(1);
        let o = P::one(1);
        let mat = vec![
            vec![t0.clone(), o.clone(), z.clone()],
            vec![o.clone(), t0inv, o.clone()],
            vec![z, o, t0.clone()],
        ];
        assert_eq!(bareiss_det(&mat), -&t0);
    }
}
