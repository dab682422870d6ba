//! Eigenvalues of small complex Hermitian matrices via cyclic Jacobi
//! rotations, generic over the floating-point scalar.

use num_complex::Complex;
use num_traits::Float;

/// Real eigenvalues of a Hermitian matrix, in ascending order.
///
/// Each sweep visits every off-diagonal position and applies the unitary
/// rotation that zeroes it; for Hermitian input the off-diagonal mass is
/// strictly decreasing, and the sizes handled here (homology ranks of braid
/// spines) converge in a handful of sweeps.
pub fn hermitian_eigenvalues<F: Float>(matrix: &[Vec<Complex<F>>]) -> Vec<F> {
    let n = matrix.len();
    if n == 0 {
        return Vec::new();
    }
    let mut h: Vec<Vec<Complex<F>>> = matrix.to_vec();
    for row in &h {
        assert_eq!(row.len(), n, "matrix must be square");
    }

    let off = |h: &Vec<Vec<Complex<F>>>| -> F {
        let mut s = F::zero();
        for p in 0..n {
            for q in p + 1..n {
                s = s + h[p][q].norm_sqr();
            }
        }
        s
    };
    let mut scale = F::zero();
    for row in &h {
        for x in row {
            scale = scale + x.norm_sqr();
        }
    }
    let tol = (scale + F::one()) * F::epsilon() * F::epsilon();

    let two = F::one() + F::one();
    for _sweep in 0..60 {
        if off(&h) <= tol {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let z = h[p][q];
                let r = z.norm();
                if r <= F::epsilon() * (h[p][p].re.abs() + h[q][q].re.abs() + F::one()) {
                    continue;
                }
                // phase factor making h[p][q] real, then a real rotation
                let phase = z / Complex::new(r, F::zero()); // e^{i phi}
                let theta = (two * r).atan2(h[p][p].re - h[q][q].re) / two;
                let (s, c) = theta.sin_cos();
                let a = h[p][p].re;
                let b = h[q][q].re;

                for k in 0..n {
                    if k == p || k == q {
                        continue;
                    }
                    let hkp = h[k][p];
                    let hkq = h[k][q];
                    let new_kp = hkp * c + hkq * phase.conj() * s;
                    let new_kq = hkq * phase.conj() * c - hkp * s;
                    h[k][p] = new_kp;
                    h[p][k] = new_kp.conj();
                    h[k][q] = new_kq;
                    h[q][k] = new_kq.conj();
                }
                let app = a * c * c + two * c * s * r + b * s * s;
                let aqq = a * s * s - two * c * s * r + b * c * c;
                h[p][p] = Complex::new(app, F::zero());
                h[q][q] = Complex::new(aqq, F::zero());
                h[p][q] = Complex::new(F::zero(), F::zero());
                h[q][p] = Complex::new(F::zero(), F::zero());
            }
        }
    }

    let mut eigenvalues: Vec<F> = (0..n).map(|i| h[i][i].re).collect();
    eigenvalues.sort_by(|a, b| a.partial_cmp(b).expect("finite eigenvalues"));
    eigenvalues
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex<f64> {
        Complex::new(re, im)
    }

    #[test]
    fn empty_and_scalar() {
        assert!(hermitian_eigenvalues::<f64>(&[]).is_empty());
        assert_eq!(hermitian_eigenvalues(&[vec![c(3.5, 0.0)]]), vec![3.5]);
    }

    #[test]
    fn real_symmetric_two_by_two() {
        let m = vec![vec![c(-4.0, 0.0), c(-2.0, 0.0)], vec![c(-2.0, 0.0), c(-4.0, 0.0)]];
        let ev = hermitian_eigenvalues(&m);
        assert!((ev[0] + 6.0).abs() < 1e-12);
        assert!((ev[1] + 2.0).abs() < 1e-12);
    }

    #[test]
    fn complex_hermitian_two_by_two() {
        // [[1, i], [-i, 1]] has eigenvalues 0 and 2
        let m = vec![vec![c(1.0, 0.0), c(0.0, 1.0)], vec![c(0.0, -1.0), c(1.0, 0.0)]];
        let ev = hermitian_eigenvalues(&m);
        assert!(ev[0].abs() < 1e-12);
        assert!((ev[1] - 2.0).abs() < 1e-12);
    }

    #[test]
    fn agrees_with_nalgebra_on_random_hermitian() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for n in 1..=6usize {
            for _ in 0..20 {
                let mut m = vec![vec![c(0.0, 0.0); n]; n];
                for i in 0..n {
                    m[i][i] = c(rng.gen_range(-3.0..3.0), 0.0);
                    for j in i + 1..n {
                        let z = c(rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0));
                        m[i][j] = z;
                        m[j][i] = z.conj();
                    }
                }
                let mine = hermitian_eigenvalues(&m);
                let na = nalgebra::DMatrix::from_fn(n, n, |i, j| m[i][j]);
                let mut theirs: Vec<f64> = na.symmetric_eigen().eigenvalues.iter().copied().collect();
                theirs.sort_by(|a, b| a.partial_cmp(b).unwrap());
                for (a, b) in mine.iter().zip(&theirs) {
                    assert!((a - b).abs() < 1e-9, "{mine:?} vs {theirs:?}");
                }
            }
        }
    }
}
