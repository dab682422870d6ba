//! Link invariants from a family of generalized Seifert matrices: the Conway
//! potential function, the multivariable Alexander polynomial, a presentation
//! matrix for the Alexander module, and signature/nullity at points of the
//! torus.

use num_complex::Complex;
use num_traits::Float;
use thiserror::Error;

use crate::bareiss::bareiss_det;
use crate::eigen::hermitian_eigenvalues;
use crate::laurent::{Coeff, LaurentPoly, PotentialFunction};
use crate::seifert::{eps_tuple, SeifertFamily};

/// Eigenvalues of `H(omega)` below this absolute value count as zero.
pub const EIGENVALUE_ZERO_THRESHOLD: f64 = 1e-5;

#[derive(Error, Debug, PartialEq, Eq)]
pub enum InvariantError {
    #[error("exponents are not uniformly even per variable; upstream bug")]
    ParityViolation,
    #[error("potential function has a residual denominator; upstream bug")]
    ResidualDenominator,
    #[error("presentation matrix requires every two colors to intersect; rebuild with the pairwise flag")]
    PairwiseRequired,
    #[error("matrix is not Hermitian within tolerance")]
    NotHermitian,
    #[error("omega component {0} equals 1")]
    OmegaAtOne(usize),
    #[error("expected {expected} torus coordinates, got {got}")]
    OmegaLength { expected: usize, got: usize },
}

/// Conway potential function from the Seifert family, the sign of the
/// complex, and the Euler characteristics `chi[i]` of the unions omitting
/// each color: the determinant of
/// `-sum_eps (prod eps) * (prod t_i^{eps_i}) * A^eps`, multiplied by
/// `sgn * prod_i (t_i - t_i^-1)^(chi[i] - 1)` and put in reduced form.
pub fn conway_potential<C: Coeff>(
    family: &SeifertFamily,
    sgn: i8,
    chi: &[i64],
) -> PotentialFunction<C> {
    let mu = family.mu;
    assert_eq!(chi.len(), mu);
    let g = family.rank;

    let det = if g == 0 {
        LaurentPoly::one(mu)
    } else {
        let mut matrix = vec![vec![LaurentPoly::zero(mu); g]; g];
        for (index, a) in family.matrices.iter().enumerate() {
            let eps = eps_tuple(index, mu);
            let prod: i64 = eps.iter().map(|&e| i64::from(e)).product();
            let exps: Vec<i32> = eps.iter().map(|&e| i32::from(e)).collect();
            for i in 0..g {
                for j in 0..g {
                    if a[i][j] != 0 {
                        let c = C::from(-prod * a[i][j]);
                        let term = LaurentPoly::monomial(mu, exps.clone(), c);
                        matrix[i][j] = &matrix[i][j] + &term;
                    }
                }
            }
        }
        bareiss_det(&matrix)
    };

    let mut num = det.scaled(&C::from(i64::from(sgn)));
    let mut denom = vec![0u32; mu];
    for i in 0..mu {
        let e = chi[i] - 1;
        if e > 0 {
            num = &num * &LaurentPoly::var_minus_inverse(mu, i).pow(e as u32);
        } else if e < 0 {
            denom[i] = (-e) as u32;
        }
    }
    PotentialFunction::reduce(num, denom)
}

/// Multivariable Alexander polynomial determined by the potential function,
/// in canonical form (minimal exponent zero per variable, positive leading
/// coefficient on the graded-lex smallest term).
///
/// For one color the potential is first multiplied by `t0 - t0^-1`; the
/// result's exponents are then uniformly even per variable after a monomial
/// shift, and halving them undoes the square substitution.
pub fn alexander_from_conway<C: Coeff>(
    potential: &PotentialFunction<C>,
) -> Result<LaurentPoly<C>, InvariantError> {
    let mu = potential.mu();
    if potential.is_zero() {
        return Ok(LaurentPoly::zero(mu));
    }
    let squared = if mu == 1 {
        match potential.denom_exponents[0] {
            0 => &potential.numerator * &LaurentPoly::var_minus_inverse(1, 0),
            1 => potential.numerator.clone(),
            _ => return Err(InvariantError::ResidualDenominator),
        }
    } else {
        if !potential.is_polynomial() {
            return Err(InvariantError::ResidualDenominator);
        }
        potential.numerator.clone()
    };

    // shift the minimum exponent of each variable to zero; this must leave
    // all exponents even
    let mins = squared.min_exponents();
    let neg: Vec<i32> = mins.iter().map(|&e| -e).collect();
    let shifted = squared.shifted(&neg);
    let mut halved = LaurentPoly::zero(mu);
    for (mono, coeff) in shifted.terms() {
        let mut exps = Vec::with_capacity(mu);
        for &e in mono.exps() {
            if e % 2 != 0 {
                return Err(InvariantError::ParityViolation);
            }
            exps.push(e / 2);
        }
        halved = &halved + &LaurentPoly::monomial(mu, exps, coeff.clone());
    }
    Ok(halved.canonical_up_to_units())
}

/// Presentation matrix `A(t) = sum_eps (prod eps) (prod t_i^{(1-eps_i)/2}) A^eps`
/// for the Alexander module over the ring with `1 - t_i` inverted; defined
/// when every two colors intersect.
pub fn presentation_matrix<C: Coeff>(
    family: &SeifertFamily,
) -> Result<Vec<Vec<LaurentPoly<C>>>, InvariantError> {
    if !family.pairwise_clasped {
        return Err(InvariantError::PairwiseRequired);
    }
    let mu = family.mu;
    let g = family.rank;
    let mut out = vec![vec![LaurentPoly::zero(mu); g]; g];
    for (index, a) in family.matrices.iter().enumerate() {
        let eps = eps_tuple(index, mu);
        let prod: i64 = eps.iter().map(|&e| i64::from(e)).product();
        let exps: Vec<i32> = eps.iter().map(|&e| i32::from((1 - e) / 2)).collect();
        for i in 0..g {
            for j in 0..g {
                if a[i][j] != 0 {
                    let term = LaurentPoly::monomial(mu, exps.clone(), C::from(prod * a[i][j]));
                    out[i][j] = &out[i][j] + &term;
                }
            }
        }
    }
    Ok(out)
}

/// A point `omega = (exp(2 pi i theta_0), ...)` of the torus with every
/// coordinate away from 1, given by its turn fractions `theta`.
#[derive(Clone, Debug, PartialEq)]
pub struct SignaturePoint<F: Float> {
    theta: Vec<F>,
}

impl<F: Float> SignaturePoint<F> {
    pub fn new(theta: Vec<F>) -> Result<Self, InvariantError> {
        for (i, t) in theta.iter().enumerate() {
            if t.fract() == F::zero() {
                return Err(InvariantError::OmegaAtOne(i));
            }
        }
        Ok(SignaturePoint { theta })
    }

    pub fn theta(&self) -> &[F] {
        &self.theta
    }

    pub fn mu(&self) -> usize {
        self.theta.len()
    }

    pub fn omega(&self) -> Vec<Complex<F>> {
        let tau = F::from(std::f64::consts::TAU).expect("tau fits the float type");
        self.theta
            .iter()
            .map(|&t| Complex::from_polar(F::one(), tau * t))
            .collect()
    }

    /// The complex-conjugate point `(conj(omega_0), ...)`.
    pub fn conjugate(&self) -> Self {
        SignaturePoint {
            theta: self.theta.iter().map(|&t| -t).collect(),
        }
    }
}

/// The Hermitian matrix `H(omega) = prod_i (1 - conj(omega_i)) * A(omega)`,
/// with `A(omega)` evaluated by summing the Seifert family directly.
pub fn hermitian_h<F: Float>(
    family: &SeifertFamily,
    point: &SignaturePoint<F>,
) -> Result<Vec<Vec<Complex<F>>>, InvariantError> {
    if point.mu() != family.mu {
        return Err(InvariantError::OmegaLength {
            expected: family.mu,
            got: point.mu(),
        });
    }
    let omega = point.omega();
    let g = family.rank;
    let zero = Complex::new(F::zero(), F::zero());
    let mut h = vec![vec![zero; g]; g];
    for (index, a) in family.matrices.iter().enumerate() {
        let eps = eps_tuple(index, family.mu);
        let prod: i64 = eps.iter().map(|&e| i64::from(e)).product();
        // (prod eps) * prod omega_i^{(1 - eps_i)/2}
        let mut weight = Complex::new(F::from(prod).expect("small integer"), F::zero());
        for (w, &e) in omega.iter().zip(&eps) {
            if e < 0 {
                weight = weight * *w;
            }
        }
        for i in 0..g {
            for j in 0..g {
                if a[i][j] != 0 {
                    weight_add(&mut h[i][j], weight, a[i][j]);
                }
            }
        }
    }
    let one = Complex::new(F::one(), F::zero());
    let mut prefactor = one;
    for w in &omega {
        prefactor = prefactor * (one - w.conj());
    }
    for row in &mut h {
        for entry in row.iter_mut() {
            *entry = *entry * prefactor;
        }
    }
    Ok(h)
}

fn weight_add<F: Float>(target: &mut Complex<F>, weight: Complex<F>, factor: i64) {
    let f = F::from(factor).expect("small integer");
    *target = *target + weight * f;
}

/// Signature and nullity of the colored link at a torus point.
#[derive(Clone, Debug, PartialEq)]
pub struct SignatureResult<F: Float> {
    pub signature: i64,
    pub nullity: i64,
    pub eigenvalues: Vec<F>,
}

/// Signature and nullity of a Hermitian matrix, with `b0` the number of
/// connected components of the underlying complex (1 for spines built here).
/// Eigenvalues within `1e-5` of zero count into the nullity.
pub fn signature_nullity<F: Float>(
    h: &[Vec<Complex<F>>],
    b0: i64,
) -> Result<SignatureResult<F>, InvariantError> {
    let n = h.len();
    let mut max_abs = F::zero();
    for row in h {
        for x in row {
            max_abs = max_abs.max(x.norm());
        }
    }
    let tol = (F::one() + max_abs) * F::from(1e-9).expect("tolerance fits");
    for i in 0..n {
        for j in 0..n {
            if (h[i][j] - h[j][i].conj()).norm() > tol {
                return Err(InvariantError::NotHermitian);
            }
        }
    }
    let eigenvalues = hermitian_eigenvalues(h);
    let threshold = F::from(EIGENVALUE_ZERO_THRESHOLD).expect("threshold fits");
    let mut positive = 0i64;
    let mut negative = 0i64;
    let mut null = 0i64;
    for &ev in &eigenvalues {
        if ev > threshold {
            positive += 1;
        } else if ev < -threshold {
            negative += 1;
        } else {
            null += 1;
        }
    }
    Ok(SignatureResult {
        signature: positive - negative,
        nullity: b0 - 1 + null,
        eigenvalues,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::parse_braid;
    use crate::ccomplex::{build_spine, DragOrder};
    use crate::seifert::{chi_excluding, complex_sign, seifert_family};
    use num_bigint::BigInt;

    type P = LaurentPoly<BigInt>;
    type Pf = PotentialFunction<BigInt>;

    fn invariants_of(word: &str, strands: usize, colors: &str, pairwise: bool) -> (SeifertFamily, i8, Vec<i64>) {
        let braid = parse_braid(word, strands, colors).unwrap();
        let spine = build_spine(&braid, &DragOrder::identity(braid.mu), pairwise).unwrap();
        let family = seifert_family(&spine);
        let sgn = complex_sign(&spine);
        let chi: Vec<i64> = (0..braid.mu).map(|i| chi_excluding(&spine, i)).collect();
        (family, sgn, chi)
    }

    fn potential_of(word: &str, strands: usize, colors: &str) -> Pf {
        let (family, sgn, chi) = invariants_of(word, strands, colors, false);
        conway_potential(&family, sgn, &chi)
    }

    #[test]
    fn unknot_potential_and_alexander() {
        let potential = potential_of("[]", 1, "0");
        assert_eq!(potential.numerator, P::one(1));
        assert_eq!(potential.denom_exponents, vec![1]);
        assert_eq!(alexander_from_conway(&potential).unwrap(), P::one(1));
    }

    #[test]
    fn trefoil_potential_and_alexander() {
        let potential = potential_of("[1,1,1]", 2, "0,0");
        let expected_num = P::from_terms(
            1,
            [
                (vec![2], BigInt::from(1)),
                (vec![0], BigInt::from(-1)),
                (vec![-2], BigInt::from(1)),
            ],
        );
        assert_eq!(potential.numerator, expected_num);
        assert_eq!(potential.denom_exponents, vec![1]);
        let alexander = alexander_from_conway(&potential).unwrap();
        let expected = P::from_terms(
            1,
            [
                (vec![0], BigInt::from(1)),
                (vec![1], BigInt::from(-1)),
                (vec![2], BigInt::from(1)),
            ],
        );
        assert_eq!(alexander, expected);
    }

    #[test]
    fn figure_eight_alexander() {
        let potential = potential_of("[1,-2,1,-2]", 3, "0,0,0");
        // classical Conway polynomial 1 - z^2 under z = t - t^-1
        let expected_num = P::from_terms(
            1,
            [
                (vec![2], BigInt::from(-1)),
                (vec![0], BigInt::from(3)),
                (vec![-2], BigInt::from(-1)),
            ],
        );
        assert_eq!(potential.numerator, expected_num);
        assert_eq!(potential.denom_exponents, vec![1]);
        let alexander = alexander_from_conway(&potential).unwrap();
        let expected = P::from_terms(
            1,
            [
                (vec![0], BigInt::from(1)),
                (vec![1], BigInt::from(-3)),
                (vec![2], BigInt::from(1)),
            ],
        );
        assert_eq!(alexander, expected);
    }

    #[test]
    fn hopf_links_have_unit_potentials() {
        let plus = potential_of("[1,1]", 2, "0,1");
        assert_eq!(plus.numerator, P::one(2));
        assert!(plus.is_polynomial());
        let minus = potential_of("[-1,-1]", 2, "0,1");
        assert_eq!(minus.numerator, -&P::one(2));
        assert!(minus.is_polynomial());
        assert_eq!(alexander_from_conway(&plus).unwrap(), P::one(2));
        assert_eq!(alexander_from_conway(&minus).unwrap(), P::one(2));
    }

    #[test]
    fn three_color_braid_potential() {
        let potential = potential_of("[-2,-3,2,-3,-1,-2,-3]", 4, "0,1,2,0");
        let expected = P::from_terms(
            3,
            [
                (vec![0, 1, 0], BigInt::from(1)),
                (vec![0, -1, 0], BigInt::from(-1)),
            ],
        );
        assert_eq!(potential.numerator, expected);
        assert!(potential.is_polynomial());
        let alexander = alexander_from_conway(&potential).unwrap();
        let expected_alex = P::from_terms(
            3,
            [
                (vec![0, 0, 0], BigInt::from(1)),
                (vec![0, 1, 0], BigInt::from(-1)),
            ],
        );
        assert_eq!(alexander, expected_alex);
    }

    #[test]
    fn three_color_braid_presentation_matrix() {
        let (family, _, _) = invariants_of("[-2,-3,2,-3,-1,-2,-3]", 4, "0,1,2,0", true);
        let a: Vec<Vec<P>> = presentation_matrix(&family).unwrap();
        assert_eq!(a[0][0].to_string(), "-t0*t2 + t1");
        assert_eq!(a[0][1].to_string(), "t1 - 1");
        assert_eq!(a[1][0].to_string(), "t0*t1*t2 - t0*t2");
        assert_eq!(a[1][1].to_string(), "0");
        // det A(t) = -t0*t2*(t1 - 1)^2
        let det = &(&a[0][0] * &a[1][1]) - &(&a[0][1] * &a[1][0]);
        let t1_minus_1 = &P::var(3, 1) - &P::one(3);
        let expected = -&(&P::monomial(3, vec![1, 0, 1], BigInt::from(1))
            * &(&t1_minus_1 * &t1_minus_1));
        assert_eq!(det, expected);
    }

    #[test]
    fn presentation_matrix_needs_pairwise_clasps() {
        // split union of two unknots: colors never intersect before repair,
        // and the repair fingers do intersect them; use a fabricated family
        // instead
        let family = SeifertFamily {
            mu: 2,
            rank: 0,
            basis: vec![],
            matrices: vec![vec![]; 4],
            pairwise_clasped: false,
        };
        assert_eq!(
            presentation_matrix::<BigInt>(&family),
            Err(InvariantError::PairwiseRequired)
        );
    }

    #[test]
    fn trefoil_presentation_is_two_term_sum() {
        let (family, _, _) = invariants_of("[1,1,1]", 2, "0,0", false);
        let a: Vec<Vec<P>> = presentation_matrix(&family).unwrap();
        // A^+ - t * A^- with A^+ = [[-1,0],[-1,-1]]
        assert_eq!(a[0][0].to_string(), "t0 - 1");
        assert_eq!(a[0][1].to_string(), "t0");
        assert_eq!(a[1][0].to_string(), "-1");
        assert_eq!(a[1][1].to_string(), "t0 - 1");
    }

    #[test]
    fn trefoil_hermitian_at_minus_one() {
        let (family, _, _) = invariants_of("[1,1,1]", 2, "0,0", false);
        let point = SignaturePoint::new(vec![0.5f64]).unwrap();
        let h = hermitian_h(&family, &point).unwrap();
        let expected = [[-4.0, -2.0], [-2.0, -4.0]];
        for i in 0..2 {
            for j in 0..2 {
                assert!((h[i][j].re - expected[i][j]).abs() < 1e-12);
                assert!(h[i][j].im.abs() < 1e-12);
            }
        }
        let result = signature_nullity(&h, 1).unwrap();
        assert_eq!(result.signature, -2);
        assert_eq!(result.nullity, 0);
    }

    #[test]
    fn trefoil_nullity_at_sixth_root() {
        let (family, _, _) = invariants_of("[1,1,1]", 2, "0,0", false);
        let point = SignaturePoint::new(vec![1.0 / 6.0]).unwrap();
        let h = hermitian_h(&family, &point).unwrap();
        let result = signature_nullity(&h, 1).unwrap();
        assert_eq!(result.nullity, 1);
    }

    #[test]
    fn single_color_h_matches_two_term_expansion() {
        let (family, _, _) = invariants_of("[1,-2,1,-2]", 3, "0,0,0", false);
        let point = SignaturePoint::new(vec![0.3f64]).unwrap();
        let h = hermitian_h(&family, &point).unwrap();
        let omega = point.omega()[0];
        let one = Complex::new(1.0, 0.0);
        let aplus = &family.matrices[crate::seifert::eps_index(&[1])];
        let g = family.rank;
        for i in 0..g {
            for j in 0..g {
                let direct = (one - omega.conj()) * aplus[i][j] as f64
                    + (one - omega) * aplus[j][i] as f64;
                assert!((h[i][j] - direct).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn empty_matrix_signature() {
        let result = signature_nullity::<f64>(&[], 1).unwrap();
        assert_eq!(result.signature, 0);
        assert_eq!(result.nullity, 0);
        assert!(result.eigenvalues.is_empty());
    }

    #[test]
    fn rejects_non_hermitian() {
        let h = vec![
            vec![Complex::new(1.0, 0.0), Complex::new(1.0, 0.0)],
            vec![Complex::new(0.5, 0.0), Complex::new(1.0, 0.0)],
        ];
        assert_eq!(signature_nullity(&h, 1), Err(InvariantError::NotHermitian));
    }

    #[test]
    fn omega_must_avoid_one() {
        assert_eq!(
            SignaturePoint::new(vec![0.5, 1.0]).unwrap_err(),
            InvariantError::OmegaAtOne(1)
        );
        assert_eq!(
            SignaturePoint::new(vec![0.0]).unwrap_err(),
            InvariantError::OmegaAtOne(0)
        );
    }

    #[test]
    fn signature_invariant_under_conjugation() {
        let (family, _, _) = invariants_of("[1,1,1]", 2, "0,0", false);
        for theta in [0.21, 0.37, 0.5, 0.73] {
            let p = SignaturePoint::new(vec![theta]).unwrap();
            let a = signature_nullity(&hermitian_h(&family, &p).unwrap(), 1).unwrap();
            let b = signature_nullity(&hermitian_h(&family, &p.conjugate()).unwrap(), 1).unwrap();
            assert_eq!(a.signature, b.signature);
            assert_eq!(a.nullity, b.nullity);
        }
    }
}
