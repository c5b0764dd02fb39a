//! Sparse Laurent polynomials in `q` with exact rational coefficients.
//!
//! Exponents are stored doubled: the map key `k` represents `q^{k/2}`. Integer
//! powers of `q` therefore have even keys, and `q^{1/2}` (needed by the Cartan
//! factor on even-dimensional representations) has key 1.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// Laurent polynomial in `q`; keys are doubled exponents, values nonzero.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct UPoly {
    terms: BTreeMap<i64, BigRational>,
}

impl UPoly {
    pub fn zero() -> Self {
        UPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0, BigRational::one())
    }

    /// `c * q^(e2/2)`.
    pub fn monomial(e2: i64, c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e2, c);
        }
        UPoly { terms }
    }

    pub fn from_int(n: i64) -> Self {
        Self::monomial(0, BigRational::from_integer(BigInt::from(n)))
    }

    /// `q^(e2/2)` with coefficient one.
    pub fn q_pow2(e2: i64) -> Self {
        Self::monomial(e2, BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&i64, &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e2: i64) -> BigRational {
        self.terms.get(&e2).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Lowest stored doubled exponent. Zero polynomial has none.
    pub fn min_exp2(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    /// Highest stored doubled exponent.
    pub fn max_exp2(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    fn insert_add(&mut self, e2: i64, c: BigRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e2) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.insert_add(*e, c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        UPoly { terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = UPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.insert_add(e1 + e2, c1 * c2);
            }
        }
        out
    }

    pub fn mul_monomial(&self, e2: i64, c: &BigRational) -> Self {
        if c.is_zero() {
            return UPoly::zero();
        }
        UPoly { terms: self.terms.iter().map(|(e, k)| (e + e2, k * c)).collect() }
    }

    pub fn shift(&self, e2: i64) -> Self {
        UPoly { terms: self.terms.iter().map(|(e, c)| (e + e2, c.clone())).collect() }
    }

    /// Substitute `q -> q^{-1}` (negate all exponents).
    pub fn invert_q(&self) -> Self {
        UPoly { terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect() }
    }

    /// Evaluate at a rational point (e.g. `q = 1`). Restricted to even
    /// doubled exponents, which covers every q-number check.
    pub fn eval_rational(&self, x: &BigRational) -> Option<BigRational> {
        let mut acc = BigRational::zero();
        for (e2, c) in &self.terms {
            if e2 % 2 != 0 {
                return None;
            }
            acc += c * rational_pow(x, e2 / 2)?;
        }
        Some(acc)
    }

    /// Exact division; `None` if `other` does not divide `self`.
    pub fn div_exact(&self, other: &Self) -> Option<Self> {
        if other.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(UPoly::zero());
        }
        let (q, r) = self.div_rem(other);
        if r.is_zero() {
            Some(q)
        } else {
            None
        }
    }

    /// Laurent division with remainder: `self = quo*other + rem` where the
    /// remainder's exponent span is below `other`'s.
    pub fn div_rem(&self, other: &Self) -> (Self, Self) {
        assert!(!other.is_zero(), "division by zero polynomial");
        let mut rem = self.clone();
        let mut quo = UPoly::zero();
        let d_lead = other.max_exp2().unwrap();
        let d_low = other.min_exp2().unwrap();
        let d_span = d_lead - d_low;
        let d_coeff = other.coeff(d_lead);
        while !rem.is_zero() {
            let r_lead = rem.max_exp2().unwrap();
            let r_low = rem.min_exp2().unwrap();
            if r_lead - r_low < d_span {
                break;
            }
            let e = r_lead - d_lead;
            let c = rem.coeff(r_lead) / &d_coeff;
            let m = UPoly::monomial(e, c);
            quo = quo.add(&m);
            rem = rem.sub(&m.mul(other));
        }
        (quo, rem)
    }

    /// Content-primitive part: coefficients divided by their rational
    /// content, leading coefficient positive. Returns (primitive, content).
    pub fn primitive(&self) -> (Self, BigRational) {
        if self.is_zero() {
            return (UPoly::zero(), BigRational::one());
        }
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in self.terms.values() {
            num_gcd = int_gcd(&num_gcd, c.numer());
            den_lcm = int_lcm(&den_lcm, c.denom());
        }
        let mut content = BigRational::new(num_gcd, den_lcm);
        let lead = &self.terms[&self.max_exp2().unwrap()];
        if lead.is_negative() {
            content = -content;
        }
        let inv = content.recip();
        let prim = UPoly { terms: self.terms.iter().map(|(e, c)| (*e, c * &inv)).collect() };
        (prim, content)
    }

    /// Polynomial gcd (Euclid on primitive parts). Monomial factors are not
    /// shared: both arguments are shifted to lowest exponent 0 first, and the
    /// result is primitive with lowest exponent 0 and positive leading
    /// coefficient.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return normalize_gcd(other);
        }
        if other.is_zero() {
            return normalize_gcd(self);
        }
        let mut a = normalize_gcd(self);
        let mut b = normalize_gcd(other);
        while !b.is_zero() {
            let (_, mut r) = a.div_rem(&b);
            if !r.is_zero() {
                r = normalize_gcd(&r);
            }
            a = b;
            b = r;
        }
        normalize_gcd(&a)
    }
}

fn normalize_gcd(p: &UPoly) -> UPoly {
    if p.is_zero() {
        return UPoly::zero();
    }
    p.shift(-p.min_exp2().unwrap()).primitive().0
}

fn int_gcd(a: &BigInt, b: &BigInt) -> BigInt {
    let mut a = a.abs();
    let mut b = b.abs();
    while !b.is_zero() {
        let r = &a % &b;
        a = b;
        b = r;
    }
    a
}

fn int_lcm(a: &BigInt, b: &BigInt) -> BigInt {
    if a.is_zero() || b.is_zero() {
        return BigInt::zero();
    }
    (a * b).abs() / int_gcd(a, b)
}

fn rational_pow(x: &BigRational, e: i64) -> Option<BigRational> {
    if e == 0 {
        return Some(BigRational::one());
    }
    if x.is_zero() {
        return if e > 0 { Some(BigRational::zero()) } else { None };
    }
    let mut acc = BigRational::one();
    let base = if e > 0 { x.clone() } else { x.recip() };
    for _ in 0..e.unsigned_abs() {
        acc *= &base;
    }
    Some(acc)
}

fn fmt_poly(p: &UPoly, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if p.is_zero() {
        return write!(f, "0");
    }
    let mut first = true;
    for (e2, c) in p.terms.iter().rev() {
        let neg = c.is_negative();
        let mag = c.abs();
        if first {
            if neg {
                write!(f, "-")?;
            }
            first = false;
        } else if neg {
            write!(f, " - ")?;
        } else {
            write!(f, " + ")?;
        }
        let show_coeff = !mag.is_one() || *e2 == 0;
        if show_coeff {
            write!(f, "{}", mag)?;
        }
        if *e2 != 0 {
            if show_coeff {
                write!(f, "*")?;
            }
            if e2 % 2 == 0 {
                write!(f, "q^{}", e2 / 2)?;
            } else {
                write!(f, "q^({}/2)", e2)?;
            }
        }
    }
    Ok(())
}

impl fmt::Debug for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_poly(self, f)
    }
}

impl fmt::Display for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_poly(self, f)
    }
}
