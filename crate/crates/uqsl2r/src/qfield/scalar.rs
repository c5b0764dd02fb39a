//! The coefficient field: rational functions in `q` in canonical form.
//!
//! Canonical form is a normal form (two equal values have identical
//! representations), which is what makes every identity check in this crate
//! an exact zero test:
//! - numerator/denominator gcd removed,
//! - denominator's lowest exponent is 0,
//! - denominator primitive with positive leading coefficient.

use super::upoly::UPoly;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Scalar {
    num: UPoly,
    den: UPoly,
}

impl Scalar {
    pub fn new(num: UPoly, den: UPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let mut s = Scalar { num, den };
        s.canonicalize();
        s
    }

    pub fn zero() -> Self {
        Scalar { num: UPoly::zero(), den: UPoly::one() }
    }

    pub fn one() -> Self {
        Scalar { num: UPoly::one(), den: UPoly::one() }
    }

    pub fn from_int(n: i64) -> Self {
        Scalar { num: UPoly::from_int(n), den: UPoly::one() }
    }

    pub fn from_rational(r: BigRational) -> Self {
        Scalar { num: UPoly::monomial(0, r), den: UPoly::one() }
    }

    pub fn from_poly(p: UPoly) -> Self {
        Scalar { num: p, den: UPoly::one() }
    }

    /// `q^n` for integer `n`.
    pub fn q_pow(n: i64) -> Self {
        Scalar { num: UPoly::q_pow2(2 * n), den: UPoly::one() }
    }

    /// `q^(n/2)` given the doubled exponent `n`.
    pub fn q_half_pow(e2: i64) -> Self {
        Scalar { num: UPoly::q_pow2(e2), den: UPoly::one() }
    }

    pub fn numerator(&self) -> &UPoly {
        &self.num
    }

    pub fn denominator(&self) -> &UPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num == self.den
    }

    fn canonicalize(&mut self) {
        if self.num.is_zero() {
            self.den = UPoly::one();
            return;
        }
        // Clear the denominator's monomial part.
        let dmin = self.den.min_exp2().unwrap();
        if dmin != 0 {
            self.num = self.num.shift(-dmin);
        }
        let den0 = self.den.shift(-dmin);
        // Remove the polynomial gcd. The numerator's own monomial factor is
        // left alone (Laurent numerators are fine).
        let nmin = self.num.min_exp2().unwrap();
        let g = self.num.shift(-nmin).gcd(&den0);
        let (num, den) = if g.num_terms() > 1 || g.min_exp2() != Some(0) || !g.coeff(0).is_one() {
            (
                self.num.shift(-nmin).div_exact(&g).expect("gcd divides").shift(nmin),
                den0.div_exact(&g).expect("gcd divides"),
            )
        } else {
            (self.num.clone(), den0)
        };
        // Primitive denominator with positive leading coefficient.
        let (dprim, content) = den.primitive();
        let inv = content.recip();
        self.num = num.mul_monomial(0, &inv);
        self.den = dprim;
    }

    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "division by zero scalar");
        Scalar::new(self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, e: i64) -> Self {
        if e == 0 {
            return Scalar::one();
        }
        let base = if e > 0 { self.clone() } else { self.recip() };
        let mut acc = Scalar::one();
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        acc
    }

    /// Substitute `q -> q^{-1}`.
    pub fn invert_q(&self) -> Self {
        Scalar::new(self.num.invert_q(), self.den.invert_q())
    }

    /// Evaluate at a rational point; `None` on a pole or on genuine
    /// half-integer exponents.
    pub fn eval_rational(&self, x: &BigRational) -> Option<BigRational> {
        let d = self.den.eval_rational(x)?;
        if d == BigRational::from_integer(BigInt::from(0)) {
            return None;
        }
        Some(self.num.eval_rational(x)? / d)
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        if self.den == rhs.den {
            return Scalar::new(self.num.add(&rhs.num), self.den.clone());
        }
        Scalar::new(
            self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den)),
            self.den.mul(&rhs.den),
        )
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        if self.is_zero() || rhs.is_zero() {
            return Scalar::zero();
        }
        Scalar::new(self.num.mul(&rhs.num), self.den.mul(&rhs.den))
    }
}

impl Div for &Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        self * &rhs.recip()
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { num: self.num.neg(), den: self.den.clone() }
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        &self + &rhs
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        &self - &rhs
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == UPoly::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

// JSON form: numerator and denominator as arrays of [doubled exponent,
// "num/den" coefficient string], sorted by exponent. Bit-exact round trip.
#[derive(Serialize, Deserialize)]
struct ScalarRepr {
    num: Vec<(i64, String)>,
    den: Vec<(i64, String)>,
}

fn poly_repr(p: &UPoly) -> Vec<(i64, String)> {
    p.terms().map(|(e, c)| (*e, c.to_string())).collect()
}

fn poly_from_repr(v: &[(i64, String)]) -> Result<UPoly, String> {
    let mut p = UPoly::zero();
    for (e, s) in v {
        let c: BigRational = s.parse().map_err(|e| format!("bad coefficient: {e:?}"))?;
        p = p.add(&UPoly::monomial(*e, c));
    }
    Ok(p)
}

impl Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        ScalarRepr { num: poly_repr(&self.num), den: poly_repr(&self.den) }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let r = ScalarRepr::deserialize(d)?;
        let num = poly_from_repr(&r.num).map_err(serde::de::Error::custom)?;
        let den = poly_from_repr(&r.den).map_err(serde::de::Error::custom)?;
        if den.is_zero() {
            return Err(serde::de::Error::custom("zero denominator"));
        }
        Ok(Scalar::new(num, den))
    }
}
