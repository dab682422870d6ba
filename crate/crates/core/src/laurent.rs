//! Exact multivariate Laurent polynomials over integer-like coefficients.
//!
//! Polynomials are kept in canonical sparse form: a sorted map from exponent
//! vectors to nonzero coefficients, ordered graded-lexicographically. The
//! coefficient ring is generic over [`Coeff`]; the crate-level alias
//! [`crate::Laurent`] pins it to arbitrary-precision integers, which is what
//! the fraction-free determinant code requires to avoid overflow.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{Signed, ToPrimitive};
use thiserror::Error;

/// Coefficient ring: integers (machine or big) with exact division.
pub trait Coeff:
    num_integer::Integer
    + Signed
    + ToPrimitive
    + Clone
    + fmt::Debug
    + fmt::Display
    + From<i64>
    + 'static
{
    /// Exact division; `None` when `rhs` does not divide `self`.
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(rhs);
        if r.is_zero() {
            Some(q)
        } else {
            None
        }
    }
}

impl<T> Coeff for T where
    T: num_integer::Integer
        + Signed
        + ToPrimitive
        + Clone
        + fmt::Debug
        + fmt::Display
        + From<i64>
        + 'static
{
}

#[derive(Error, Debug, PartialEq, Eq)]
pub enum LaurentError {
    #[error("polynomial is not divisible by the divisor")]
    NotDivisible,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("variable count mismatch: {0} vs {1}")]
    MuMismatch(usize, usize),
    #[error("cannot parse polynomial: {0}")]
    Parse(String),
}

/// Exponent vector of a monomial, ordered graded-lexicographically
/// (total degree first, then lexicographic on the exponents).
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct Mono(Vec<i32>);

impl Mono {
    pub fn new(exps: Vec<i32>) -> Self {
        Mono(exps)
    }

    pub fn exps(&self) -> &[i32] {
        &self.0
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().map(|&e| e as i64).sum()
    }

    fn is_unit(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    fn mul(&self, other: &Mono) -> Mono {
        Mono(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    fn shifted(&self, delta: &[i32]) -> Mono {
        Mono(self.0.iter().zip(delta).map(|(a, b)| a + b).collect())
    }

    fn inverted(&self) -> Mono {
        Mono(self.0.iter().map(|&e| -e).collect())
    }

    /// Componentwise quotient, or `None` if some exponent would go negative.
    fn try_div(&self, other: &Mono) -> Option<Mono> {
        let mut out = Vec::with_capacity(self.0.len());
        for (a, b) in self.0.iter().zip(&other.0) {
            if a < b {
                return None;
            }
            out.push(a - b);
        }
        Some(Mono(out))
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// A Laurent polynomial in the variables `t0, ..., t{mu-1}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LaurentPoly<C: Coeff> {
    mu: usize,
    terms: BTreeMap<Mono, C>,
}

impl<C: Coeff> LaurentPoly<C> {
    pub fn zero(mu: usize) -> Self {
        LaurentPoly {
            mu,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(mu: usize) -> Self {
        Self::constant(mu, C::one())
    }

    pub fn constant(mu: usize, c: C) -> Self {
        let mut p = Self::zero(mu);
        if !c.is_zero() {
            p.terms.insert(Mono(vec![0; mu]), c);
        }
        p
    }

    /// The variable `t{index}`.
    pub fn var(mu: usize, index: usize) -> Self {
        assert!(index < mu);
        let mut exps = vec![0; mu];
        exps[index] = 1;
        Self::monomial(mu, exps, C::one())
    }

    /// `t{index} - t{index}^-1`, the factor appearing in potential functions.
    pub fn var_minus_inverse(mu: usize, index: usize) -> Self {
        assert!(index < mu);
        let mut pos = vec![0; mu];
        pos[index] = 1;
        let mut neg = vec![0; mu];
        neg[index] = -1;
        Self::from_terms(mu, [(pos, C::one()), (neg, -C::one())])
    }

    pub fn monomial(mu: usize, exps: Vec<i32>, c: C) -> Self {
        assert_eq!(exps.len(), mu);
        let mut p = Self::zero(mu);
        if !c.is_zero() {
            p.terms.insert(Mono(exps), c);
        }
        p
    }

    pub fn from_terms<I>(mu: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<i32>, C)>,
    {
        let mut p = Self::zero(mu);
        for (exps, c) in terms {
            assert_eq!(exps.len(), mu);
            p.add_term(Mono(exps), c);
        }
        p
    }

    pub fn mu(&self) -> usize {
        self.mu
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && {
            let (m, c) = self.terms.iter().next().unwrap();
            m.is_unit() && c.is_one()
        }
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &C)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[i32]) -> C {
        self.terms
            .get(&Mono(exps.to_vec()))
            .cloned()
            .unwrap_or_else(C::zero)
    }

    fn add_term(&mut self, mono: Mono, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn scaled(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(self.mu);
        }
        LaurentPoly {
            mu: self.mu,
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), a.clone() * c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one(self.mu);
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Substitutes `t_i -> t_i^-1` for every variable.
    pub fn invert_variables(&self) -> Self {
        LaurentPoly {
            mu: self.mu,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.inverted(), c.clone()))
                .collect(),
        }
    }

    /// Multiplies by the monomial `t^delta`.
    pub fn shifted(&self, delta: &[i32]) -> Self {
        assert_eq!(delta.len(), self.mu);
        LaurentPoly {
            mu: self.mu,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.shifted(delta), c.clone()))
                .collect(),
        }
    }

    /// Per-variable minimum exponent over the support; zeros for the zero
    /// polynomial.
    pub fn min_exponents(&self) -> Vec<i32> {
        let mut mins = vec![0; self.mu];
        for (i, m) in self.terms.keys().enumerate() {
            for (v, &e) in m.exps().iter().enumerate() {
                if i == 0 || e < mins[v] {
                    mins[v] = e;
                }
            }
        }
        mins
    }

    /// Factors out the monomial content: returns `(mins, p)` with
    /// `self = t^mins * p` and `p` an ordinary polynomial whose per-variable
    /// minimum exponent is zero.
    fn extract_content(&self) -> (Vec<i32>, Self) {
        let mins = self.min_exponents();
        let neg: Vec<i32> = mins.iter().map(|&e| -e).collect();
        (mins, self.shifted(&neg))
    }

    fn leading(&self) -> Option<(&Mono, &C)> {
        self.terms.iter().next_back()
    }

    /// Exact division in the Laurent ring. Returns `r` with `r * q == self`
    /// when such an `r` exists.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self, LaurentError> {
        if self.mu != divisor.mu {
            return Err(LaurentError::MuMismatch(self.mu, divisor.mu));
        }
        if divisor.is_zero() {
            return Err(LaurentError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero(self.mu));
        }
        // Reduce to ordinary polynomials: monomial units split off, and a
        // Laurent quotient exists iff the ordinary quotient does.
        let (ps, p) = self.extract_content();
        let (qs, q) = divisor.extract_content();
        let (qlm, qlc) = q.leading().expect("divisor is nonzero");
        let (qlm, qlc) = (qlm.clone(), qlc.clone());

        let mut rem = p;
        let mut quot = Self::zero(self.mu);
        while !rem.is_zero() {
            let (rlm, rlc) = rem.leading().expect("nonzero remainder");
            let mexp = rlm.try_div(&qlm).ok_or(LaurentError::NotDivisible)?;
            let c = rlc.div_exact(&qlc).ok_or(LaurentError::NotDivisible)?;
            let piece = Self::monomial(self.mu, mexp.0, c);
            rem = &rem - &(&piece * &q);
            quot = &quot + &piece;
        }
        let delta: Vec<i32> = ps.iter().zip(&qs).map(|(a, b)| a - b).collect();
        Ok(quot.shifted(&delta))
    }

    /// Canonical representative up to multiplication by `±t^k`: minimum
    /// exponent zero in every variable, and the graded-lex smallest term has
    /// a positive coefficient.
    pub fn canonical_up_to_units(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let (_, mut p) = self.extract_content();
        let negate = p
            .terms
            .values()
            .next()
            .map(|c| c.is_negative())
            .unwrap_or(false);
        if negate {
            p = -&p;
        }
        p
    }

    /// Evaluates at a complex point, one value per variable.
    pub fn eval_complex(&self, point: &[num_complex::Complex<f64>]) -> num_complex::Complex<f64> {
        assert_eq!(point.len(), self.mu);
        let mut acc = num_complex::Complex::new(0.0, 0.0);
        for (m, c) in &self.terms {
            let mut term = num_complex::Complex::new(
                c.to_f64().expect("coefficient fits in f64"),
                0.0,
            );
            for (w, &e) in point.iter().zip(m.exps()) {
                term *= w.powi(e);
            }
            acc += term;
        }
        acc
    }

    /// Parses the textual rendering produced by `Display`, e.g.
    /// `"t0*t1^2 - 2*t2 + 1"`.
    pub fn parse(mu: usize, input: &str) -> Result<Self, LaurentError> {
        let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(LaurentError::Parse("empty input".into()));
        }
        let mut poly = Self::zero(mu);
        let bytes = s.as_bytes();
        let mut i = 0;
        let mut sign = 1i64;
        // optional leading sign
        if bytes[0] == b'+' || bytes[0] == b'-' {
            sign = if bytes[0] == b'-' { -1 } else { 1 };
            i = 1;
        }
        while i < bytes.len() {
            // one term: factors joined by '*'
            let mut coeff = C::from(sign);
            let mut exps = vec![0i32; mu];
            let mut saw_factor = false;
            loop {
                if i >= bytes.len() {
                    break;
                }
                match bytes[i] {
                    b'0'..=b'9' => {
                        let start = i;
                        while i < bytes.len() && bytes[i].is_ascii_digit() {
                            i += 1;
                        }
                        let n: i64 = s[start..i]
                            .parse()
                            .map_err(|_| LaurentError::Parse(s[start..i].into()))?;
                        coeff = coeff * C::from(n);
                        saw_factor = true;
                    }
                    b't' => {
                        i += 1;
                        let start = i;
                        while i < bytes.len() && bytes[i].is_ascii_digit() {
                            i += 1;
                        }
                        let v: usize = s[start..i]
                            .parse()
                            .map_err(|_| LaurentError::Parse("bad variable".into()))?;
                        if v >= mu {
                            return Err(LaurentError::Parse(format!(
                                "variable t{v} out of range for mu={mu}"
                            )));
                        }
                        let mut e = 1i32;
                        if i < bytes.len() && bytes[i] == b'^' {
                            i += 1;
                            let mut esign = 1i32;
                            if i < bytes.len() && (bytes[i] == b'-' || bytes[i] == b'+') {
                                if bytes[i] == b'-' {
                                    esign = -1;
                                }
                                i += 1;
                            }
                            let start = i;
                            while i < bytes.len() && bytes[i].is_ascii_digit() {
                                i += 1;
                            }
                            let n: i32 = s[start..i]
                                .parse()
                                .map_err(|_| LaurentError::Parse("bad exponent".into()))?;
                            e = esign * n;
                        }
                        exps[v] += e;
                        saw_factor = true;
                    }
                    _ => {
                        return Err(LaurentError::Parse(format!(
                            "unexpected character '{}'",
                            bytes[i] as char
                        )))
                    }
                }
                if i < bytes.len() && bytes[i] == b'*' {
                    i += 1;
                    continue;
                }
                break;
            }
            if !saw_factor {
                return Err(LaurentError::Parse("empty term".into()));
            }
            poly.add_term(Mono(exps), coeff);
            if i < bytes.len() {
                sign = match bytes[i] {
                    b'+' => 1,
                    b'-' => -1,
                    c => return Err(LaurentError::Parse(format!("expected +/-, got '{}'", c as char))),
                };
                i += 1;
            }
        }
        Ok(poly)
    }
}

impl<C: Coeff> Add for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn add(self, rhs: Self) -> LaurentPoly<C> {
        assert_eq!(self.mu, rhs.mu);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl<C: Coeff> Sub for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn sub(self, rhs: Self) -> LaurentPoly<C> {
        assert_eq!(self.mu, rhs.mu);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl<C: Coeff> Mul for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn mul(self, rhs: Self) -> LaurentPoly<C> {
        assert_eq!(self.mu, rhs.mu);
        let mut out = LaurentPoly::zero(self.mu);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca.clone() * cb.clone());
            }
        }
        out
    }
}

impl<C: Coeff> Neg for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn neg(self) -> LaurentPoly<C> {
        LaurentPoly {
            mu: self.mu,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl<C: Coeff> fmt::Display for LaurentPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            if m.is_unit() {
                write!(f, "{a}")?;
            } else {
                let mut first = true;
                if !a.is_one() {
                    write!(f, "{a}")?;
                    first = false;
                }
                for (v, &e) in m.exps().iter().enumerate() {
                    if e == 0 {
                        continue;
                    }
                    if !first {
                        write!(f, "*")?;
                    }
                    first = false;
                    write!(f, "t{v}")?;
                    if e != 1 {
                        write!(f, "^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// A rational function `numerator / prod_i (t_i - t_i^-1)^{d_i}` in fully
/// reduced form: no factor with `d_i > 0` divides the numerator, and zero is
/// stored as numerator `0` with all `d_i = 0`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PotentialFunction<C: Coeff> {
    pub numerator: LaurentPoly<C>,
    pub denom_exponents: Vec<u32>,
}

impl<C: Coeff> PotentialFunction<C> {
    /// Reduces `num / prod (t_i - t_i^-1)^{d_i}` by cancelling as many
    /// denominator factors into the numerator as divide exactly.
    pub fn reduce(num: LaurentPoly<C>, denom: Vec<u32>) -> Self {
        let mu = num.mu();
        assert_eq!(denom.len(), mu);
        if num.is_zero() {
            return PotentialFunction {
                numerator: num,
                denom_exponents: vec![0; mu],
            };
        }
        let mut num = num;
        let mut denom = denom;
        for i in 0..mu {
            let factor = LaurentPoly::var_minus_inverse(mu, i);
            while denom[i] > 0 {
                match num.exact_div(&factor) {
                    Ok(q) => {
                        num = q;
                        denom[i] -= 1;
                    }
                    Err(_) => break,
                }
            }
        }
        PotentialFunction {
            numerator: num,
            denom_exponents: denom,
        }
    }

    pub fn mu(&self) -> usize {
        self.numerator.mu()
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.denom_exponents.iter().all(|&d| d == 0)
    }

    /// The substitution `t_i -> t_i^-1` applied to the whole function.
    pub fn inverted(&self) -> Self {
        let total: u32 = self.denom_exponents.iter().sum();
        let mut num = self.numerator.invert_variables();
        if total % 2 == 1 {
            num = -&num;
        }
        PotentialFunction {
            numerator: num,
            denom_exponents: self.denom_exponents.clone(),
        }
    }
}

impl<C: Coeff> fmt::Display for PotentialFunction<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            return write!(f, "{}", self.numerator);
        }
        if self.numerator.num_terms() > 1 {
            write!(f, "({})", self.numerator)?;
        } else {
            write!(f, "{}", self.numerator)?;
        }
        write!(f, " / ")?;
        let mut first = true;
        for (i, &d) in self.denom_exponents.iter().enumerate() {
            if d == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "(t{i} - t{i}^-1)")?;
            if d > 1 {
                write!(f, "^{d}")?;
            }
        }
        Ok(())
    }
}
