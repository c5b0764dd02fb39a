//! Rational functions in one auxiliary variable over the scalar field, with
//! exact one-sided series expansion.
//!
//! This is the engine behind `series_coefficients`: the expansions of `g`,
//! `g'`, `psi`, `psi'` and of the composed-current kernels `alpha_n`,
//! `beta_n` are all one-sided geometric expansions of such functions.

use super::scalar::Scalar;
use std::collections::BTreeMap;
use std::fmt;

/// Which one-sided expansion to take.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ExpandAt {
    Zero,
    Infinity,
}

#[derive(Clone, Debug, PartialEq)]
pub enum SeriesError {
    /// The function has a pole at the expansion point.
    PoleAtExpansionPoint,
}

impl fmt::Display for SeriesError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeriesError::PoleAtExpansionPoint => write!(f, "pole at expansion point"),
        }
    }
}

impl std::error::Error for SeriesError {}

/// Ratio of Laurent polynomials in one auxiliary variable `x`, coefficients
/// in the scalar field.
#[derive(Clone, PartialEq)]
pub struct RatX {
    num: BTreeMap<i64, Scalar>,
    den: BTreeMap<i64, Scalar>,
}

fn clean(v: Vec<(i64, Scalar)>) -> BTreeMap<i64, Scalar> {
    let mut m: BTreeMap<i64, Scalar> = BTreeMap::new();
    for (e, c) in v {
        if c.is_zero() {
            continue;
        }
        match m.entry(e) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                let s = &*slot.get() + &c;
                if s.is_zero() {
                    slot.remove();
                } else {
                    *slot.get_mut() = s;
                }
            }
        }
    }
    m
}

impl RatX {
    pub fn new(num: Vec<(i64, Scalar)>, den: Vec<(i64, Scalar)>) -> Self {
        let den = clean(den);
        assert!(!den.is_empty(), "zero denominator");
        RatX { num: clean(num), den }
    }

    pub fn from_poly(num: Vec<(i64, Scalar)>) -> Self {
        Self::new(num, vec![(0, Scalar::one())])
    }

    pub fn constant(c: Scalar) -> Self {
        Self::from_poly(vec![(0, c)])
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_empty()
    }

    pub fn mul(&self, other: &Self) -> Self {
        RatX {
            num: clean(poly_mul(&self.num, &other.num)),
            den: clean(poly_mul(&self.den, &other.den)),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut num = poly_mul(&self.num, &other.den);
        num.extend(poly_mul(&other.num, &self.den));
        RatX { num: clean(num), den: clean(poly_mul(&self.den, &other.den)) }
    }

    pub fn neg(&self) -> Self {
        RatX {
            num: self.num.iter().map(|(e, c)| (*e, -c)).collect(),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "division by zero");
        RatX { num: self.den.clone(), den: self.num.clone() }
    }

    /// Substitute `x -> 1/x`.
    pub fn flip(&self) -> Self {
        RatX {
            num: self.num.iter().map(|(e, c)| (-e, c.clone())).collect(),
            den: self.den.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Evaluate at a scalar point (denominator must not vanish there).
    pub fn eval(&self, x: &Scalar) -> Scalar {
        let ev = |m: &BTreeMap<i64, Scalar>| {
            let mut acc = Scalar::zero();
            for (e, c) in m {
                acc += &(c * &x.pow(*e));
            }
            acc
        };
        let d = ev(&self.den);
        assert!(!d.is_zero(), "evaluation at a pole");
        &ev(&self.num) / &d
    }

    /// Exact Laurent-polynomial form, if the denominator divides the
    /// numerator.
    pub fn as_laurent_poly(&self) -> Option<BTreeMap<i64, Scalar>> {
        // Laurent division over the scalar field
        let mut rem: BTreeMap<i64, Scalar> = self.num.clone();
        let mut quo: BTreeMap<i64, Scalar> = BTreeMap::new();
        let d_lead = *self.den.keys().next_back().unwrap();
        let d_low = *self.den.keys().next().unwrap();
        let span = d_lead - d_low;
        let d_coeff = self.den[&d_lead].clone();
        while !rem.is_empty() {
            let r_lead = *rem.keys().next_back().unwrap();
            let r_low = *rem.keys().next().unwrap();
            if r_lead - r_low < span {
                return None;
            }
            let e = r_lead - d_lead;
            let c = &rem[&r_lead] / &d_coeff;
            quo.insert(e, c.clone());
            for (de, dc) in &self.den {
                let k = de + e;
                let sub = dc * &c;
                let entry = rem.remove(&k).unwrap_or_else(Scalar::zero);
                let v = &entry - &sub;
                if !v.is_zero() {
                    rem.insert(k, v);
                }
            }
        }
        Some(quo)
    }

    /// Exact equality as rational functions (cross multiplication).
    pub fn eq_rat(&self, other: &Self) -> bool {
        clean(poly_mul(&self.num, &other.den)) == clean(poly_mul(&other.num, &self.den))
    }

    /// Order of vanishing at `x = 0`: `val(num) - val(den)`.
    pub fn order_at_zero(&self) -> Option<i64> {
        if self.is_zero() {
            return None;
        }
        Some(self.num.keys().next().unwrap() - self.den.keys().next().unwrap())
    }

    /// Coefficients of the expansion at `x = 0` for exponents `lo..=hi`.
    pub fn expand_at_zero(&self, lo: i64, hi: i64) -> Vec<Scalar> {
        if self.is_zero() {
            return vec![Scalar::zero(); (hi - lo + 1).max(0) as usize];
        }
        let dv = *self.den.keys().next().unwrap();
        let d0 = self.den[&dv].clone();
        // den = x^dv * d0 * (1 + t(x)), t with positive valuation
        let t: Vec<(i64, Scalar)> = self
            .den
            .iter()
            .filter(|(e, _)| **e != dv)
            .map(|(e, c)| (e - dv, &*c / &d0))
            .collect();
        // inv = 1/(1+t) as a series up to the needed order
        let nv = *self.num.keys().next().unwrap();
        let need = hi - (nv - dv);
        let mut inv: BTreeMap<i64, Scalar> = BTreeMap::new();
        inv.insert(0, Scalar::one());
        if need > 0 && !t.is_empty() {
            // iterative: inv_k = -sum_{j>=1} t_j * inv_{k-j}
            for k in 1..=need {
                let mut acc = Scalar::zero();
                for (j, c) in &t {
                    if *j <= k {
                        if let Some(prev) = inv.get(&(k - j)) {
                            acc -= &(c * prev);
                        }
                    }
                }
                if !acc.is_zero() {
                    inv.insert(k, acc);
                }
            }
        }
        let mut out = Vec::new();
        for k in lo..=hi {
            // coeff of x^k in num * x^{-dv}/d0 * inv
            let mut acc = Scalar::zero();
            for (e, c) in &self.num {
                let want = k - (e - dv);
                if want >= 0 {
                    if let Some(ic) = inv.get(&want) {
                        acc += &(&(c / &d0) * ic);
                    }
                }
            }
            out.push(acc);
        }
        out
    }
}

fn poly_mul(a: &BTreeMap<i64, Scalar>, b: &BTreeMap<i64, Scalar>) -> Vec<(i64, Scalar)> {
    let mut out = Vec::new();
    for (e1, c1) in a {
        for (e2, c2) in b {
            out.push((e1 + e2, c1 * c2));
        }
    }
    out
}

impl fmt::Debug for RatX {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatX(num={:?}, den={:?})", self.num, self.den)
    }
}

/// Exact coefficients of the one-sided Laurent expansion of `f` over the
/// requested exponent range. A pole at the expansion point is an error.
pub fn series_coefficients(
    f: &RatX,
    direction: ExpandAt,
    lo: i64,
    hi: i64,
) -> Result<Vec<Scalar>, SeriesError> {
    let g = match direction {
        ExpandAt::Zero => f.clone(),
        ExpandAt::Infinity => f.flip(),
    };
    if let Some(ord) = g.order_at_zero() {
        if ord < 0 {
            return Err(SeriesError::PoleAtExpansionPoint);
        }
    }
    match direction {
        ExpandAt::Zero => Ok(g.expand_at_zero(lo, hi)),
        ExpandAt::Infinity => {
            // coefficient of x^k at infinity = coefficient of x^{-k} of the
            // flipped function at zero; range [lo, hi] is reported in the
            // original exponents, descending order of |x| meaning k from hi
            // down in x — we keep the caller's ascending lo..=hi order.
            let mut v = g.expand_at_zero(-hi, -lo);
            v.reverse();
            Ok(v)
        }
    }
}
