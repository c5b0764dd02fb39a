//! q-numbers, q-factorials and the structure functions `g`, `g'`, `psi`,
//! `psi'` that drive the pairing and the half-current commutation relations.

use super::scalar::Scalar;
use super::upoly::UPoly;
use super::xseries::RatX;
use num_rational::BigRational;
use num_traits::One;

/// Gauss q-number `[n]_q = (q^n - q^{-n}) / (q - q^{-1})`, returned in the
/// expanded form `q^{n-1} + q^{n-3} + ... + q^{1-n}` (always a Laurent
/// polynomial). `[-n]_q = -[n]_q`.
pub fn q_number(n: i64) -> Scalar {
    if n == 0 {
        return Scalar::zero();
    }
    let m = n.unsigned_abs() as i64;
    let mut p = UPoly::zero();
    for k in 0..m {
        p = p.add(&UPoly::q_pow2(2 * (m - 1 - 2 * k)));
    }
    if n < 0 {
        p = p.neg();
    }
    Scalar::from_poly(p)
}

/// `[n]_q! = [1]_q [2]_q ... [n]_q`, empty product 1.
///
/// Negative `n` is a usage error.
pub fn q_factorial(n: i64) -> Scalar {
    assert!(n >= 0, "q_factorial of negative argument");
    let mut acc = Scalar::one();
    for k in 1..=n {
        acc *= &q_number(k);
    }
    acc
}

/// `(n)_{q^2} = (q^{2n} - 1)/(q^2 - 1) = 1 + q^2 + ... + q^{2(n-1)}`.
pub fn qsq_number(n: i64) -> Scalar {
    assert!(n >= 0, "qsq_number of negative argument");
    let mut p = UPoly::zero();
    for k in 0..n {
        p = p.add(&UPoly::q_pow2(4 * k));
    }
    Scalar::from_poly(p)
}

/// `(n)_{q^2}! = (1)_{q^2} (2)_{q^2} ... (n)_{q^2}`, with `(0)_{q^2}! = 1`.
///
/// Negative `n` is a usage error.
pub fn qsq_factorial(n: i64) -> Scalar {
    assert!(n >= 0, "qsq_factorial of negative argument");
    let mut acc = Scalar::one();
    for k in 1..=n {
        acc *= &qsq_number(k);
    }
    acc
}

/// `q^{-1} - q`, the pairing normalization constant.
pub fn qinv_minus_q() -> Scalar {
    &Scalar::q_pow(-1) - &Scalar::q_pow(1)
}

/// `g(x) = (q^2 - x)/(1 - q^2 x)`.
pub fn g_fn() -> RatX {
    let one = Scalar::one();
    RatX::new(
        vec![(0, Scalar::q_pow(2)), (1, -&one)],
        vec![(0, one), (1, -&Scalar::q_pow(2))],
    )
}

/// `g'(x) = (q^{-2} - x)/(1 - q^{-2} x)`.
pub fn gp_fn() -> RatX {
    let one = Scalar::one();
    RatX::new(
        vec![(0, Scalar::q_pow(-2)), (1, -&one)],
        vec![(0, one), (1, -&Scalar::q_pow(-2))],
    )
}

/// `psi(x) = (1 - q^2)/(1 - q^2 x)`.
pub fn psi_fn() -> RatX {
    let one = Scalar::one();
    RatX::new(
        vec![(0, &one - &Scalar::q_pow(2))],
        vec![(0, one), (1, -&Scalar::q_pow(2))],
    )
}

/// `psi'(x) = (1 - q^{-2})/(1 - q^{-2} x)`.
pub fn psip_fn() -> RatX {
    let one = Scalar::one();
    RatX::new(
        vec![(0, &one - &Scalar::q_pow(-2))],
        vec![(0, one), (1, -&Scalar::q_pow(-2))],
    )
}

/// Coefficient of `x^k` in the expansion of `g` at `x = 0`:
/// `q^2` at `k = 0` and `(q^2 - q^{-2}) q^{2k}` for `k > 0`.
pub fn g_series_coeff(k: i64) -> Scalar {
    assert!(k >= 0);
    if k == 0 {
        Scalar::q_pow(2)
    } else {
        &(&Scalar::q_pow(2) - &Scalar::q_pow(-2)) * &Scalar::q_pow(2 * k)
    }
}

/// Coefficient of `x^k` in the expansion of `g'` at `x = 0`:
/// `q^{-2}` at `k = 0` and `(q^{-2} - q^2) q^{-2k}` for `k > 0`.
pub fn gp_series_coeff(k: i64) -> Scalar {
    assert!(k >= 0);
    if k == 0 {
        Scalar::q_pow(-2)
    } else {
        &(&Scalar::q_pow(-2) - &Scalar::q_pow(2)) * &Scalar::q_pow(-2 * k)
    }
}

/// `g` evaluated at the point `x = c q^{2m}` with rational `c` (exact
/// resummation of the geometric series; valid as a scalar whenever the
/// denominator `1 - c q^{2m+2}` is nonzero, which holds for formal `q`).
pub fn g_at(c: &BigRational, m: i64) -> Scalar {
    let x = &Scalar::from_rational(c.clone()) * &Scalar::q_pow(2 * m);
    g_value(&x)
}

/// `g` at an arbitrary scalar argument.
pub fn g_value(x: &Scalar) -> Scalar {
    let num = &Scalar::q_pow(2) - x;
    let den = &Scalar::one() - &(&Scalar::q_pow(2) * x);
    assert!(!den.is_zero(), "g evaluated at its pole");
    &num / &den
}

/// `g'` at an arbitrary scalar argument.
pub fn gp_value(x: &Scalar) -> Scalar {
    let num = &Scalar::q_pow(-2) - x;
    let den = &Scalar::one() - &(&Scalar::q_pow(-2) * x);
    assert!(!den.is_zero(), "g' evaluated at its pole");
    &num / &den
}

pub fn one_rational() -> BigRational {
    BigRational::one()
}
