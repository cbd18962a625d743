//! Dense integer polynomials in one variable `q`, the standard q-analogues,
//! and exact evaluation at primitive roots of unity.
//!
//! A value `p(ζ)` with `ζ` a primitive `d`-th root of unity is represented by
//! the remainder of `p` modulo the cyclotomic polynomial `Φ_d`. Since `Φ_d` is
//! the minimal polynomial of `ζ` over the rationals, `p(ζ)` is an integer
//! exactly when that remainder is a constant.

use std::collections::HashMap;
use std::f64::consts::TAU;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{Error, Result};

/// Polynomial with arbitrary-precision integer coefficients.
///
/// `coeffs[i]` is the coefficient of `q^i`. Trailing zeros are always trimmed,
/// so the zero polynomial has no coefficients and structural equality is
/// polynomial equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Polynomial {
    coeffs: Vec<BigInt>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().copied().map(BigInt::from).collect())
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `q^degree`.
    pub fn monomial(degree: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        coeffs[degree] = BigInt::one();
        Polynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// The value if the polynomial is constant (zero included).
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.coeffs.len() {
            0 => Some(BigInt::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Coefficient sequence equals its reverse.
    pub fn is_palindromic(&self) -> bool {
        self.coeffs.iter().eq(self.coeffs.iter().rev())
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Multiplies by `q^n`.
    pub fn shift(&self, n: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); n];
        coeffs.extend(self.coeffs.iter().cloned());
        Polynomial { coeffs }
    }

    /// Long division over the integers.
    ///
    /// Fails with [`Error::InexactDivision`] when a step would need a
    /// non-integer quotient coefficient. Panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Polynomial) -> Result<(Polynomial, Polynomial)> {
        let lead = divisor
            .leading_coeff()
            .expect("division by the zero polynomial");
        let dd = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for shift in (0..quot.len()).rev() {
            let top = &rem[shift + dd];
            if top.is_zero() {
                continue;
            }
            let (c, r) = top.div_rem(lead);
            if !r.is_zero() {
                return Err(Error::InexactDivision);
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[shift + j] -= &c * dc;
            }
            quot[shift] = c;
        }
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Quotient of a division that must leave no remainder.
    pub fn div_exact(&self, divisor: &Polynomial) -> Result<Polynomial> {
        let (quot, rem) = self.div_rem(divisor)?;
        if rem.is_zero() {
            Ok(quot)
        } else {
            Err(Error::InexactDivision)
        }
    }

    /// Remainder modulo a monic polynomial, which always exists over the integers.
    pub fn rem_monic(&self, modulus: &Polynomial) -> Polynomial {
        assert!(
            modulus.leading_coeff().is_some_and(One::is_one),
            "modulus must be monic"
        );
        self.div_rem(modulus)
            .expect("division by a monic polynomial is always integral")
            .1
    }

    /// Floating-point value at `e^{2πik/d}`; a numerical cross-check only.
    pub fn eval_complex(&self, d: usize, k: i64) -> Complex64 {
        assert!(d >= 1, "root order must be positive");
        let step = k.rem_euclid(d as i64) as f64 / d as f64;
        let z = Complex64::from_polar(1.0, TAU * step);
        self.coeffs.iter().rev().fold(Complex64::zero(), |acc, c| {
            acc * z + c.to_f64().expect("coefficient fits in f64")
        })
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            first = false;
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => f.write_str("q")?,
                (1, false) => write!(f, "{mag}q")?,
                (_, true) => write!(f, "q^{i}")?,
                (_, false) => write!(f, "{mag}q^{i}")?,
            }
        }
        Ok(())
    }
}

impl Add<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Polynomial::new(coeffs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                (&self).$method(rhs)
            }
        }
        impl $tr<Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                self.$method(&rhs)
            }
        }
    )*};
}

forward_owned_binop!(Add add, Sub sub, Mul mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl std::iter::Product for Polynomial {
    fn product<I: Iterator<Item = Polynomial>>(iter: I) -> Polynomial {
        iter.fold(Polynomial::one(), |acc, p| &acc * &p)
    }
}

/// `[n]_q = 1 + q + … + q^{n-1}`; zero for `n = 0`.
pub fn q_integer(n: usize) -> Polynomial {
    Polynomial::new(vec![BigInt::one(); n])
}

/// `[n]_q! = [1]_q [2]_q ⋯ [n]_q`.
pub fn q_factorial(n: usize) -> Polynomial {
    (1..=n).map(q_integer).product()
}

/// Gaussian binomial coefficient, zero when `k` lies outside `0..=n`.
pub fn q_binomial(n: usize, k: i64) -> Polynomial {
    let Ok(k) = usize::try_from(k) else {
        return Polynomial::zero();
    };
    if k > n {
        return Polynomial::zero();
    }
    let denom = &q_factorial(k) * &q_factorial(n - k);
    q_factorial(n)
        .div_exact(&denom)
        .expect("q-binomial division must be exact")
}

/// The three product expressions for `C_n(q)`. They agree for every `n ≥ 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QCatalanForm {
    /// `[2n choose n]_q / [n+1]_q`
    Standard,
    /// `[2n choose n+1]_q / [n]_q`
    NPlusOne,
    /// `[2n]_q [2n-1 choose n]_q / ([n]_q [n+1]_q)`
    TwoN,
}

impl QCatalanForm {
    pub const ALL: [QCatalanForm; 3] = [Self::Standard, Self::NPlusOne, Self::TwoN];
}

/// MacMahon's q-Catalan number `C_n(q)`.
pub fn q_catalan(n: usize) -> Polynomial {
    q_catalan_form(n, QCatalanForm::Standard).expect("standard form is defined for all n")
}

/// `C_n(q)` computed through the requested product form.
///
/// The non-standard forms divide by `[n]_q` and need `n ≥ 1`. A nonzero
/// remainder in any division is an arithmetic bug and panics.
pub fn q_catalan_form(n: usize, form: QCatalanForm) -> Result<Polynomial> {
    let (num, den) = match form {
        QCatalanForm::Standard => (q_binomial(2 * n, n as i64), q_integer(n + 1)),
        _ if n == 0 => {
            return Err(Error::Domain(format!(
                "{form:?} form of C_n(q) needs n >= 1"
            )));
        }
        QCatalanForm::NPlusOne => (q_binomial(2 * n, n as i64 + 1), q_integer(n)),
        QCatalanForm::TwoN => (
            &q_integer(2 * n) * &q_binomial(2 * n - 1, n as i64),
            &q_integer(n) * &q_integer(n + 1),
        ),
    };
    Ok(num
        .div_exact(&den)
        .expect("q-Catalan division must be exact"))
}

fn cyclotomic_cache() -> &'static RwLock<HashMap<usize, Arc<Polynomial>>> {
    static CACHE: OnceLock<RwLock<HashMap<usize, Arc<Polynomial>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// The `d`-th cyclotomic polynomial `Φ_d`, memoized for the process.
///
/// Computed as `(q^d - 1) / ∏ Φ_e` over proper divisors `e` of `d`.
pub fn cyclotomic(d: usize) -> Arc<Polynomial> {
    assert!(d >= 1, "cyclotomic polynomial order must be positive");
    if let Some(p) = cyclotomic_cache().read().unwrap().get(&d) {
        return Arc::clone(p);
    }
    let mut p = &Polynomial::monomial(d) - &Polynomial::one();
    for e in (1..d).filter(|e| d.is_multiple_of(*e)) {
        p = p
            .div_exact(&cyclotomic(e))
            .expect("cyclotomic division must be exact");
    }
    let p = Arc::new(p);
    cyclotomic_cache()
        .write()
        .unwrap()
        .entry(d)
        .or_insert(p)
        .clone()
}

/// A polynomial's value at a primitive `d`-th root of unity, held as its
/// residue modulo `Φ_d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclotomicValue {
    order: usize,
    residue: Polynomial,
}

impl CyclotomicValue {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn residue(&self) -> &Polynomial {
        &self.residue
    }

    /// The integer value, if the residue is constant.
    pub fn as_integer(&self) -> Option<BigInt> {
        self.residue.as_constant()
    }

    /// The residue evaluated at `e^{2πik/d}` in floating point.
    pub fn to_complex(&self, k: i64) -> Complex64 {
        self.residue.eval_complex(self.order, k)
    }
}

impl fmt::Display for CyclotomicValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_integer() {
            Some(v) => write!(f, "{v}"),
            None => write!(f, "{} mod Phi_{}", self.residue, self.order),
        }
    }
}

/// Exact value of `p` at any primitive `d`-th root of unity.
pub fn eval_at_primitive_root(p: &Polynomial, d: usize) -> CyclotomicValue {
    CyclotomicValue {
        order: d,
        residue: p.rem_monic(&cyclotomic(d)),
    }
}

/// `p(e^{2πik/d})` in floating point.
pub fn eval_complex(p: &Polynomial, d: usize, k: i64) -> Complex64 {
    p.eval_complex(d, k)
}
