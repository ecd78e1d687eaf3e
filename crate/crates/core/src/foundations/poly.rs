use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// A polynomial in the formal parameter `q` with integer coefficients,
/// stored densely: `coeffs[k]` is the coefficient of `q^k`. Trailing zeros
/// are trimmed so equality is structural; the zero polynomial is the empty
/// list.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QPolynomial {
    coeffs: Vec<i64>,
}

impl QPolynomial {
    pub fn from_coeffs(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        QPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        QPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        QPolynomial { coeffs: vec![1] }
    }

    pub fn constant(c: i64) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c·q^k`.
    pub fn monomial(c: i64, k: usize) -> Self {
        if c == 0 {
            return Self::zero();
        }
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = c;
        QPolynomial { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Largest exponent with nonzero coefficient; `None` for the zero
    /// polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> i64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn eval(&self, x: i64) -> i64 {
        self.coeffs.iter().rev().fold(0, |acc, &c| acc * x + c)
    }

    pub fn scale(&self, c: i64) -> Self {
        if c == 0 {
            return Self::zero();
        }
        QPolynomial { coeffs: self.coeffs.iter().map(|&a| a * c).collect() }
    }

    /// Multiply by `q^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![0; k];
        coeffs.extend_from_slice(&self.coeffs);
        QPolynomial { coeffs }
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|&c| c >= 0)
    }

    /// Exact division by `2^e`; `None` if some coefficient is not divisible.
    pub fn div_exact_pow2(&self, e: u32) -> Option<Self> {
        let d = 1i64 << e;
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for &c in &self.coeffs {
            if c % d != 0 {
                return None;
            }
            coeffs.push(c / d);
        }
        Some(QPolynomial { coeffs })
    }

    /// `q^d · p(1/q)` as a Laurent polynomial (the `L′` transform).
    pub fn reverse_with_degree(&self, d: i64) -> LaurentPolynomial {
        let mut terms: Vec<(i64, i64)> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(k, &c)| (d - k as i64, c))
            .collect();
        terms.sort_by_key(|&(e, _)| e);
        LaurentPolynomial::from_terms(&terms)
    }
}

impl Add for &QPolynomial {
    type Output = QPolynomial;
    fn add(self, rhs: &QPolynomial) -> QPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect();
        QPolynomial::from_coeffs(coeffs)
    }
}

impl Sub for &QPolynomial {
    type Output = QPolynomial;
    fn sub(self, rhs: &QPolynomial) -> QPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect();
        QPolynomial::from_coeffs(coeffs)
    }
}

impl Mul for &QPolynomial {
    type Output = QPolynomial;
    fn mul(self, rhs: &QPolynomial) -> QPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return QPolynomial::zero();
        }
        let mut coeffs = vec![0i64; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        QPolynomial::from_coeffs(coeffs)
    }
}

impl Neg for &QPolynomial {
    type Output = QPolynomial;
    fn neg(self) -> QPolynomial {
        self.scale(-1)
    }
}

fn fmt_term(f: &mut fmt::Formatter<'_>, c: i64, k: i64, first: bool) -> fmt::Result {
    let sign = if c < 0 {
        "-"
    } else if first {
        ""
    } else {
        "+"
    };
    let a = c.unsigned_abs();
    match (a, k) {
        (_, 0) => write!(f, "{sign}{a}"),
        (1, 1) => write!(f, "{sign}q"),
        (1, _) => write!(f, "{sign}q^{k}"),
        (_, 1) => write!(f, "{sign}{a}q"),
        (_, _) => write!(f, "{sign}{a}q^{k}"),
    }
}

impl fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            fmt_term(f, c, k as i64, first)?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Laurent extension of [`QPolynomial`]: carries a minimum-exponent offset.
/// Used by the `L′` monotonicity transform.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct LaurentPolynomial {
    /// Exponent of `coeffs[0]`.
    min_exp: i64,
    coeffs: Vec<i64>,
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_terms(terms: &[(i64, i64)]) -> Self {
        if terms.is_empty() {
            return Self::zero();
        }
        let lo = terms.iter().map(|&(e, _)| e).min().unwrap();
        let hi = terms.iter().map(|&(e, _)| e).max().unwrap();
        let mut coeffs = vec![0i64; (hi - lo + 1) as usize];
        for &(e, c) in terms {
            coeffs[(e - lo) as usize] += c;
        }
        Self::normalized(lo, coeffs)
    }

    fn normalized(mut min_exp: i64, mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        let lead = coeffs.iter().take_while(|&&c| c == 0).count();
        if lead > 0 {
            coeffs.drain(..lead);
            min_exp += lead as i64;
        }
        if coeffs.is_empty() {
            min_exp = 0;
        }
        LaurentPolynomial { min_exp, coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn min_exp(&self) -> i64 {
        self.min_exp
    }

    pub fn coeff(&self, e: i64) -> i64 {
        if e < self.min_exp {
            return 0;
        }
        self.coeffs.get((e - self.min_exp) as usize).copied().unwrap_or(0)
    }

    pub fn scale(&self, c: i64) -> Self {
        if c == 0 {
            return Self::zero();
        }
        LaurentPolynomial {
            min_exp: self.min_exp,
            coeffs: self.coeffs.iter().map(|&a| a * c).collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        if self.is_zero() && rhs.is_zero() {
            return Self::zero();
        }
        let lo = self.min_exp.min(rhs.min_exp);
        let hi = (self.min_exp + self.coeffs.len() as i64)
            .max(rhs.min_exp + rhs.coeffs.len() as i64);
        let coeffs = (lo..hi).map(|e| self.coeff(e) - rhs.coeff(e)).collect();
        Self::normalized(lo, coeffs)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|&c| c >= 0)
    }

    /// Back to an ordinary polynomial when no exponent is negative.
    pub fn to_qpolynomial(&self) -> Option<QPolynomial> {
        if self.is_zero() {
            return Some(QPolynomial::zero());
        }
        if self.min_exp < 0 {
            return None;
        }
        let mut coeffs = vec![0i64; self.min_exp as usize];
        coeffs.extend_from_slice(&self.coeffs);
        Some(QPolynomial::from_coeffs(coeffs))
    }
}

impl fmt::Debug for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            fmt_term(f, c, self.min_exp + i as i64, first)?;
            first = false;
        }
        Ok(())
    }
}
