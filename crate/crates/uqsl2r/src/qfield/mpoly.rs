//! Sparse multivariate Laurent polynomials over the scalar field, and
//! rational functions whose denominators are products of binomial factors
//! `1 - c * X^m`.
//!
//! Every denominator in this crate arises from a structure function (`g`,
//! `psi`, ...) or an evaluated half-current, so it is a product of such
//! binomials. Keeping the factorization explicit makes cancellation, residue
//! extraction and series expansion exact without a general multivariate gcd.

use super::scalar::Scalar;
use std::collections::BTreeMap;
use std::fmt;

/// Named auxiliary variables of a computation (spectral parameters,
/// evaluation points). `q` is never listed here; it lives inside [`Scalar`].
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct VarSet(pub &'static [&'static str]);

impl VarSet {
    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn index(&self, name: &str) -> usize {
        self.0.iter().position(|v| *v == name).expect("unknown variable")
    }
}

pub type Expo = Vec<i32>;

/// Multivariate Laurent polynomial, exponent vectors over a fixed [`VarSet`].
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct MPoly {
    pub vars: VarSet,
    terms: BTreeMap<Expo, Scalar>,
}

impl MPoly {
    pub fn zero(vars: VarSet) -> Self {
        MPoly { vars, terms: BTreeMap::new() }
    }

    pub fn constant(vars: VarSet, c: Scalar) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(vec![0; vars.arity()], c);
        }
        MPoly { vars, terms }
    }

    pub fn one(vars: VarSet) -> Self {
        Self::constant(vars, Scalar::one())
    }

    pub fn monomial(vars: VarSet, expo: Expo, c: Scalar) -> Self {
        assert_eq!(expo.len(), vars.arity());
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(expo, c);
        }
        MPoly { vars, terms }
    }

    pub fn var(vars: VarSet, i: usize) -> Self {
        let mut e = vec![0; vars.arity()];
        e[i] = 1;
        Self::monomial(vars, e, Scalar::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Expo, &Scalar)> {
        self.terms.iter()
    }

    /// The single term of a monomial, if this is one.
    pub fn as_monomial(&self) -> Option<(Expo, Scalar)> {
        if self.terms.len() == 1 {
            let (e, c) = self.terms.iter().next().unwrap();
            Some((e.clone(), c.clone()))
        } else {
            None
        }
    }

    fn insert_add(&mut self, e: Expo, c: Scalar) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = &*o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.vars, other.vars);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.insert_add(e.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        MPoly {
            vars: self.vars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.vars, other.vars);
        let mut out = MPoly::zero(self.vars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Expo = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.insert_add(e, c1 * c2);
            }
        }
        out
    }

    pub fn mul_scalar(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return MPoly::zero(self.vars);
        }
        MPoly {
            vars: self.vars,
            terms: self.terms.iter().map(|(e, k)| (e.clone(), k * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, expo: &Expo, c: &Scalar) -> Self {
        if c.is_zero() {
            return MPoly::zero(self.vars);
        }
        MPoly {
            vars: self.vars,
            terms: self
                .terms
                .iter()
                .map(|(e, k)| (e.iter().zip(expo).map(|(a, b)| a + b).collect(), k * c))
                .collect(),
        }
    }

    /// Substitute `X_var = c * X^mono` (with `mono[var] == 0`). Negative
    /// exponents of `var` are fine since `c` is invertible.
    pub fn subst_monomial(&self, var: usize, c: &Scalar, mono: &Expo) -> Self {
        assert_eq!(mono[var], 0);
        let mut out = MPoly::zero(self.vars);
        for (e, k) in &self.terms {
            let p = e[var];
            let mut ne: Expo = e.iter().zip(mono).map(|(a, b)| a + b * p).collect();
            ne[var] = 0;
            out.insert_add(ne, k * &c.pow(p as i64));
        }
        out
    }

    /// Attempted exact division with an iteration cap; `None` when the cap
    /// trips or the division is inexact. Only binomial-shaped divisors occur.
    pub fn div_exact(&self, div: &Self) -> Option<Self> {
        assert_eq!(self.vars, div.vars);
        if div.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(MPoly::zero(self.vars));
        }
        let (lead_e, lead_c) = div.terms.iter().next_back().unwrap();
        let mut rem = self.clone();
        let mut quo = MPoly::zero(self.vars);
        let cap = 64 + 8 * self.terms.len() * (1 + div.terms.len());
        for _ in 0..cap {
            if rem.is_zero() {
                return Some(quo);
            }
            let (re, rc) = rem.terms.iter().next_back().unwrap();
            let e: Expo = re.iter().zip(lead_e).map(|(a, b)| a - b).collect();
            let c = rc / lead_c;
            let m = MPoly::monomial(self.vars, e, c);
            quo = quo.add(&m);
            rem = rem.sub(&m.mul(div));
        }
        None
    }

    /// Group terms by the exponent of one variable.
    pub fn by_var_power(&self, var: usize) -> BTreeMap<i32, MPoly> {
        let mut out: BTreeMap<i32, MPoly> = BTreeMap::new();
        for (e, c) in &self.terms {
            let p = e[var];
            let mut ne = e.clone();
            ne[var] = 0;
            out.entry(p)
                .or_insert_with(|| MPoly::zero(self.vars))
                .insert_add(ne, c.clone());
        }
        out
    }

    pub fn max_var_power(&self, var: usize) -> Option<i32> {
        self.terms.keys().map(|e| e[var]).max()
    }

    pub fn min_var_power(&self, var: usize) -> Option<i32> {
        self.terms.keys().map(|e| e[var]).min()
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({})", c)?;
            for (i, p) in e.iter().enumerate() {
                if *p != 0 {
                    write!(f, "*{}^{}", self.vars.0[i], p)?;
                }
            }
        }
        Ok(())
    }
}

/// A normalized binomial denominator factor `1 - c * X^mono`: `mono` nonzero
/// with positive first nonzero entry, `c` nonzero.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Binom {
    pub c: Scalar,
    pub mono: Expo,
}

impl Binom {
    pub fn poly(&self, vars: VarSet) -> MPoly {
        let one = MPoly::one(vars);
        one.sub(&MPoly::monomial(vars, self.mono.clone(), self.c.clone()))
    }
}

impl fmt::Debug for Binom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(1 - ({})*X^{:?})", self.c, self.mono)
    }
}

/// Rational function `num / prod_i binom_i^{mult_i}`.
#[derive(Clone)]
pub struct MultiScalar {
    pub num: MPoly,
    den: BTreeMap<Binom, u32>,
}

impl MultiScalar {
    pub fn from_poly(num: MPoly) -> Self {
        MultiScalar { num, den: BTreeMap::new() }
    }

    pub fn zero(vars: VarSet) -> Self {
        Self::from_poly(MPoly::zero(vars))
    }

    pub fn one(vars: VarSet) -> Self {
        Self::from_poly(MPoly::one(vars))
    }

    pub fn constant(vars: VarSet, c: Scalar) -> Self {
        Self::from_poly(MPoly::constant(vars, c))
    }

    pub fn vars(&self) -> VarSet {
        self.num.vars
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn den_factors(&self) -> impl Iterator<Item = (&Binom, u32)> {
        self.den.iter().map(|(b, m)| (b, *m))
    }

    pub fn den_poly(&self) -> MPoly {
        let mut d = MPoly::one(self.vars());
        for (b, m) in &self.den {
            let bp = b.poly(self.vars());
            for _ in 0..*m {
                d = d.mul(&bp);
            }
        }
        d
    }

    /// `self / (1 - c * X^mono)`. The factor is normalized first; a factor
    /// with `mono == 0` is a plain scalar.
    pub fn div_binom(&self, c: Scalar, mono: Expo) -> Self {
        if c.is_zero() {
            return self.clone();
        }
        if mono.iter().all(|e| *e == 0) {
            let s = &Scalar::one() - &c;
            assert!(!s.is_zero(), "division by vanishing binomial");
            return self.mul_scalar(&s.recip());
        }
        let mut out = self.clone();
        if mono.iter().find(|e| **e != 0).map(|e| *e > 0).unwrap() {
            *out.den.entry(Binom { c, mono }).or_insert(0) += 1;
        } else {
            // 1 - c X^m = (-c X^m)(1 - c^{-1} X^{-m})
            let flip: Expo = mono.iter().map(|e| -e).collect();
            let unit = -&c;
            out.num = out.num.mul_monomial(&flip, &unit.recip());
            *out.den.entry(Binom { c: c.recip(), mono: flip }).or_insert(0) += 1;
        }
        out.reduce();
        out
    }

    fn reduce(&mut self) {
        let vars = self.vars();
        if self.num.is_zero() {
            self.den.clear();
            return;
        }
        let factors: Vec<Binom> = self.den.keys().cloned().collect();
        for b in factors {
            let bp = b.poly(vars);
            while *self.den.get(&b).unwrap_or(&0) > 0 {
                if let Some(q) = self.num.div_exact(&bp) {
                    self.num = q;
                    let m = self.den.get_mut(&b).unwrap();
                    *m -= 1;
                    if *m == 0 {
                        self.den.remove(&b);
                        break;
                    }
                } else {
                    break;
                }
            }
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut den = self.den.clone();
        for (b, m) in &other.den {
            *den.entry(b.clone()).or_insert(0) += m;
        }
        let mut out = MultiScalar { num: self.num.mul(&other.num), den };
        out.reduce();
        out
    }

    pub fn mul_scalar(&self, c: &Scalar) -> Self {
        MultiScalar { num: self.num.mul_scalar(c), den: self.den.clone() }
    }

    pub fn neg(&self) -> Self {
        MultiScalar { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn add(&self, other: &Self) -> Self {
        // union denominator, complementary multipliers
        let mut den: BTreeMap<Binom, u32> = self.den.clone();
        for (b, m) in &other.den {
            let e = den.entry(b.clone()).or_insert(0);
            *e = (*e).max(*m);
        }
        let vars = self.vars();
        let mut lhs = self.num.clone();
        let mut rhs = other.num.clone();
        for (b, m) in &den {
            let bp = b.poly(vars);
            let ms = self.den.get(b).copied().unwrap_or(0);
            let mo = other.den.get(b).copied().unwrap_or(0);
            for _ in ms..*m {
                lhs = lhs.mul(&bp);
            }
            for _ in mo..*m {
                rhs = rhs.mul(&bp);
            }
        }
        let mut out = MultiScalar { num: lhs.add(&rhs), den };
        out.reduce();
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// Reciprocal. The numerator must be a monomial or a binomial times a
    /// monomial; this covers every inversion the crate performs.
    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "division by zero");
        let vars = self.vars();
        // start from 1/num
        let mut out = match self.num.num_terms() {
            1 => {
                let (e, c) = self.num.as_monomial().unwrap();
                let inv_e: Expo = e.iter().map(|x| -x).collect();
                Self::from_poly(MPoly::monomial(vars, inv_e, c.recip()))
            }
            2 => {
                // s1 X^e1 + s2 X^e2 = s1 X^e1 (1 - (-s2/s1) X^{e2-e1})
                let mut it = self.num.terms();
                let (e1, s1) = it.next().unwrap();
                let (e2, s2) = it.next().unwrap();
                let mono: Expo = e2.iter().zip(e1).map(|(a, b)| a - b).collect();
                let c = -&(s2 / s1);
                let inv_e: Expo = e1.iter().map(|x| -x).collect();
                Self::from_poly(MPoly::monomial(vars, inv_e, s1.recip())).div_binom(c, mono)
            }
            _ => panic!("reciprocal of a non-unit numerator: {:?}", self.num),
        };
        // multiply by the old denominator
        let dp = self.den_poly();
        out.num = out.num.mul(&dp);
        out.reduce();
        out
    }

    pub fn div(&self, other: &Self) -> Self {
        self.mul(&other.recip())
    }

    /// Exact equality by cross multiplication.
    pub fn eq(&self, other: &Self) -> bool {
        // use the union denominator to keep the polynomials small
        self.sub(other).is_zero()
    }

    /// Substitute `X_var = c * X^mono` (with `mono[var] == 0`). Panics if a
    /// denominator factor degenerates to zero (a pole was hit).
    pub fn subst_monomial(&self, var: usize, c: &Scalar, mono: &Expo) -> Self {
        let vars = self.vars();
        let mut out = Self::from_poly(self.num.subst_monomial(var, c, mono));
        for (b, m) in &self.den {
            let p = b.mono[var];
            if p == 0 {
                for _ in 0..*m {
                    out = out.div_binom(b.c.clone(), b.mono.clone());
                }
                continue;
            }
            let mut nm: Expo = b.mono.iter().zip(mono).map(|(a, bb)| a + bb * p).collect();
            nm[var] = 0;
            let nc = &b.c * &c.pow(p as i64);
            if nm.iter().all(|e| *e == 0) {
                let s = &Scalar::one() - &nc;
                assert!(!s.is_zero(), "substitution hit a pole");
                for _ in 0..*m {
                    out = out.mul_scalar(&s.recip());
                }
            } else {
                for _ in 0..*m {
                    out = out.div_binom(nc.clone(), nm.clone());
                }
            }
        }
        out
    }

    /// Residue at the simple pole `X_var = root_coeff * X^root_mono` (with
    /// `root_mono[var] == 0`): exactly one denominator factor of multiplicity
    /// one may vanish there, and it must be linear in `var`.
    pub fn residue_simple(&self, var: usize, root_coeff: &Scalar, root_mono: &Expo) -> Self {
        assert_eq!(root_mono[var], 0);
        let mut vanishing: Option<(Binom, i32)> = None;
        for (b, m) in &self.den {
            let p = b.mono[var];
            if p == 0 {
                continue;
            }
            // substitute the root into the factor and test for zero
            let mut nm: Expo = b.mono.iter().zip(root_mono).map(|(a, r)| a + r * p).collect();
            nm[var] = 0;
            let nc = &b.c * &root_coeff.pow(p as i64);
            if nm.iter().all(|e| *e == 0) && (&Scalar::one() - &nc).is_zero() {
                assert!(
                    vanishing.is_none() && *m == 1,
                    "higher-order pole at the requested residue point"
                );
                assert!(p.abs() == 1, "residue factor not linear in the variable");
                vanishing = Some((b.clone(), p));
            }
        }
        let (factor, p) = vanishing.expect("no denominator factor vanishes at the residue point");
        let mut h = self.clone();
        let mult = h.den.get_mut(&factor).unwrap();
        *mult -= 1;
        if *mult == 0 {
            h.den.remove(&factor);
        }
        let at_root = h.subst_monomial(var, root_coeff, root_mono);
        // for 1 - c m' X_var the residue of the inverse is -root; for
        // 1 - c m' / X_var it is +root
        let signed_root = if p > 0 { -root_coeff } else { root_coeff.clone() };
        at_root.mul(&MultiScalar::from_poly(MPoly::monomial(
            self.vars(),
            root_mono.clone(),
            signed_root,
        )))
    }

    /// Reorient denominator factors so every factor involving `var` has a
    /// positive exponent of `var` (the inward form for expansion at 0).
    fn orient_for(&self, var: usize) -> Self {
        let mut out = Self::from_poly(self.num.clone());
        for (b, m) in &self.den {
            if b.mono[var] >= 0 {
                let e = out.den.entry(b.clone()).or_insert(0);
                *e += m;
            } else {
                let flip: Expo = b.mono.iter().map(|e| -e).collect();
                let unit = -&b.c;
                for _ in 0..*m {
                    out.num = out.num.mul_monomial(&flip, &unit.recip());
                    *out.den.entry(Binom { c: b.c.recip(), mono: flip.clone() }).or_insert(0) += 1;
                }
            }
        }
        out
    }

    /// Coefficient of `var^k` in the one-sided expansion at `var -> 0`
    /// (factors reoriented inward first). The result no longer involves
    /// `var`.
    pub fn coeff_of_var_power(&self, var: usize, k: i32) -> Self {
        let vars = self.vars();
        let o = self.orient_for(var);
        // split factors into those involving var and the rest
        let mut var_factors: Vec<(Binom, u32)> = Vec::new();
        let mut rest = MultiScalar::from_poly(MPoly::one(vars));
        for (b, m) in &o.den {
            if b.mono[var] > 0 {
                var_factors.push((b.clone(), *m));
            } else {
                *rest.den.entry(b.clone()).or_insert(0) += m;
            }
        }
        let by_pow = o.num.by_var_power(var);
        let min_num = match by_pow.keys().next() {
            None => return Self::zero(vars),
            Some(k) => *k,
        };
        // expand prod (1 - c X^m)^{-mult} up to var-order (k - min_num)
        let budget = k - min_num;
        if budget < 0 {
            return Self::zero(vars);
        }
        // series[j] = coefficient of var^j (an MPoly in the other vars)
        let mut series: Vec<MPoly> = vec![MPoly::one(vars)];
        for (b, mult) in &var_factors {
            let p = b.mono[var];
            let mut base: Expo = b.mono.clone();
            base[var] = 0;
            for _ in 0..*mult {
                let mut next: Vec<MPoly> = vec![MPoly::zero(vars); budget as usize + 1];
                for (j, s) in series.iter().enumerate() {
                    if s.is_zero() {
                        continue;
                    }
                    let mut t = 0;
                    loop {
                        let order = j as i32 + t * p;
                        if order > budget {
                            break;
                        }
                        let shift: Expo = base.iter().map(|e| e * t).collect();
                        let piece = s.mul_monomial(&shift, &b.c.pow(t as i64));
                        next[order as usize] = next[order as usize].add(&piece);
                        t += 1;
                    }
                }
                series = next;
            }
            if series.len() < budget as usize + 1 {
                series.resize(budget as usize + 1, MPoly::zero(vars));
            }
        }
        let mut acc = MPoly::zero(vars);
        for (p, np) in &by_pow {
            let want = k - p;
            if want >= 0 && (want as usize) < series.len() {
                acc = acc.add(&np.mul(&series[want as usize]));
            }
        }
        rest.num = acc;
        rest.reduce();
        rest
    }
}

impl fmt::Debug for MultiScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{:?}]", self.num)?;
        for (b, m) in &self.den {
            write!(f, " / {:?}^{}", b, m)?;
        }
        Ok(())
    }
}
