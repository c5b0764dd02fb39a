//! Closed-form pairings of probe words against products of currents.
//!
//! The pairing of a word with a product of currents at symbolic arguments
//! collapses, permutation by permutation, to a monomial times a product of
//! `g`-factors at ratios of the arguments. Ratios inside one composed block
//! are pure `q`-powers and resum to scalars; ratios across blocks stay as
//! binomial-denominator rational functions in the block variables. Every
//! current-level identity check (current exchange, composed-current
//! quadratics, commutativity of the integrands, the exponential solution)
//! reduces to exact arithmetic on these values plus one-sided coefficient
//! extraction in the region fixed by the operator order.

pub mod contract;

use crate::modealg::Kind;
use crate::qfield::{qinv_minus_q, MPoly, MultiScalar, Scalar, VarSet};


/// One current factor at argument `q^{qshift} * v_{var}`.
#[derive(Clone, Copy, Debug)]
pub struct CurrentFactor {
    pub qshift: i64,
    pub var: usize,
}

/// An ordered product of same-kind currents with an overall scalar.
#[derive(Clone, Debug)]
pub struct CurrentProduct {
    pub kind: Kind,
    pub scale: Scalar,
    pub factors: Vec<CurrentFactor>,
}

impl CurrentProduct {
    pub fn new(kind: Kind, factors: Vec<CurrentFactor>) -> Self {
        CurrentProduct { kind, scale: Scalar::one(), factors }
    }

    pub fn scaled(mut self, c: &Scalar) -> Self {
        self.scale = &self.scale * c;
        self
    }

    /// Append another product on the right (same kind).
    pub fn concat(&self, other: &Self) -> Self {
        assert_eq!(self.kind, other.kind);
        let mut factors = self.factors.clone();
        factors.extend_from_slice(&other.factors);
        CurrentProduct { kind: self.kind, scale: &self.scale * &other.scale, factors }
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }
}

/// The composed current of order `n` at variable `var`: for `e`,
/// `kappa_n e(z) e(q^2 z) ... e(q^{2(n-1)} z)` with
/// `kappa_n = (q - q^{-1})^{n-1} [n]_q! [n-1]_q!`; for `f`,
/// `kappa'_n f(q^{2(n-1)} z) ... f(q^2 z) f(z)` with
/// `kappa'_n = (q^{-1} - q)^{n-1} [n]_q! [n-1]_q!`.
pub fn composed_block(kind: Kind, n: u32, var: usize) -> CurrentProduct {
    use crate::qfield::q_factorial;
    assert!(n >= 1);
    let kappa = match kind {
        Kind::E => (-&qinv_minus_q()).pow(n as i64 - 1),
        Kind::F => qinv_minus_q().pow(n as i64 - 1),
    };
    let kappa = &(&kappa * &q_factorial(n as i64)) * &q_factorial(n as i64 - 1);
    let factors = match kind {
        Kind::E => (0..n).map(|i| CurrentFactor { qshift: 2 * i as i64, var }).collect(),
        Kind::F => (0..n).rev().map(|i| CurrentFactor { qshift: 2 * i as i64, var }).collect(),
    };
    CurrentProduct { kind, scale: kappa, factors }
}

/// `g` as a rational function of `q^{shift} * X^mono`.
pub fn g_of(vars: VarSet, shift: i64, mono: Vec<i32>) -> MultiScalar {
    // (q^2 - x)/(1 - q^2 x) at x = q^shift X^mono
    let x = MPoly::monomial(vars, mono.clone(), Scalar::q_pow(shift));
    let num = MPoly::constant(vars, Scalar::q_pow(2)).sub(&x);
    MultiScalar::from_poly(num).div_binom(Scalar::q_pow(2 + shift), mono)
}

/// `g'` as a rational function of `q^{shift} * X^mono`.
pub fn gp_of(vars: VarSet, shift: i64, mono: Vec<i32>) -> MultiScalar {
    let x = MPoly::monomial(vars, mono.clone(), Scalar::q_pow(shift));
    let num = MPoly::constant(vars, Scalar::q_pow(-2)).sub(&x);
    MultiScalar::from_poly(num).div_binom(Scalar::q_pow(-2 + shift), mono)
}

/// `psi(x) = (1-q^2)/(1-q^2 x)` at `x = q^{shift} X^mono`.
pub fn psi_of(vars: VarSet, shift: i64, mono: Vec<i32>) -> MultiScalar {
    let num = MPoly::constant(vars, &Scalar::one() - &Scalar::q_pow(2));
    MultiScalar::from_poly(num).div_binom(Scalar::q_pow(2 + shift), mono)
}

fn ratio_mono(vars: VarSet, num_var: usize, den_var: usize) -> Vec<i32> {
    let mut m = vec![0; vars.arity()];
    m[num_var] += 1;
    m[den_var] -= 1;
    m
}

/// Kernel factor for an inverted pair of current arguments
/// `u = q^{s1} v_{a}`, `u' = q^{s2} v_{b}`: `g(u/u')` (or `g'(u/u')`).
fn kernel_factor(vars: VarSet, prime: bool, u: CurrentFactor, v: CurrentFactor) -> MultiScalar {
    if u.var == v.var {
        // pure q-power argument: exact scalar value
        let x = Scalar::q_pow(u.qshift - v.qshift);
        let val = if prime { crate::qfield::gp_value(&x) } else { crate::qfield::g_value(&x) };
        MultiScalar::constant(vars, val)
    } else {
        let mono = ratio_mono(vars, u.var, v.var);
        if prime {
            gp_of(vars, u.qshift - v.qshift, mono)
        } else {
            g_of(vars, u.qshift - v.qshift, mono)
        }
    }
}

fn permute(perm: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == perm.len() {
        f(perm);
        return;
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        permute(perm, k + 1, f);
        perm.swap(k, i);
    }
}

/// Monomial `prod_k u_k^{p_k}` over current arguments.
fn args_monomial(vars: VarSet, factors: &[CurrentFactor], powers: &[i64]) -> MultiScalar {
    let mut qexp = 0i64;
    let mut mono = vec![0i32; vars.arity()];
    for (u, p) in factors.iter().zip(powers) {
        qexp += u.qshift * p;
        mono[u.var] += *p as i32;
    }
    MultiScalar::from_poly(MPoly::monomial(vars, mono, Scalar::q_pow(qexp)))
}

/// `<f_{a_1}...f_{a_n}, e(u_1)...e(u_n)>` for the first pairing: the sum over
/// permutations of `prod_k u_{sigma(k)}^{a_k}` times `g` at the inverted
/// argument ratios, normalized by `(q^{-1}-q)^{-n}`.
pub fn pair_fword_ecurrents(vars: VarSet, fw: &[i64], prod: &CurrentProduct) -> MultiScalar {
    assert_eq!(prod.kind, Kind::E);
    let n = prod.len();
    if fw.len() != n {
        return MultiScalar::zero(vars);
    }
    let mut acc = MultiScalar::zero(vars);
    let mut perm: Vec<usize> = (0..n).collect();
    permute(&mut perm, 0, &mut |sigma| {
        let sigma_factors: Vec<CurrentFactor> = (0..n).map(|k| prod.factors[sigma[k]]).collect();
        let mut term = args_monomial(vars, &sigma_factors, fw);
        for k in 0..n {
            for l in (k + 1)..n {
                if sigma[k] > sigma[l] {
                    term = term.mul(&kernel_factor(
                        vars,
                        false,
                        prod.factors[sigma[k]],
                        prod.factors[sigma[l]],
                    ));
                }
            }
        }
        acc = acc.add(&term);
    });
    acc.mul_scalar(&(&qinv_minus_q().pow(-(n as i64)) * &prod.scale))
}

/// `<f(u_1)...f(u_n), e_{b_1}...e_{b_n}>` for the first pairing:
/// `prod_k u_k^{b_{sigma(k)}}` times `g` at the inverted current ratios.
pub fn pair_fcurrents_eword(vars: VarSet, prod: &CurrentProduct, ew: &[i64]) -> MultiScalar {
    assert_eq!(prod.kind, Kind::F);
    let n = prod.len();
    if ew.len() != n {
        return MultiScalar::zero(vars);
    }
    let mut acc = MultiScalar::zero(vars);
    let mut perm: Vec<usize> = (0..n).collect();
    permute(&mut perm, 0, &mut |sigma| {
        let powers: Vec<i64> = (0..n).map(|k| ew[sigma[k]]).collect();
        let mut term = args_monomial(vars, &prod.factors, &powers);
        for k in 0..n {
            for l in (k + 1)..n {
                if sigma[k] > sigma[l] {
                    term = term.mul(&kernel_factor(vars, false, prod.factors[k], prod.factors[l]));
                }
            }
        }
        acc = acc.add(&term);
    });
    acc.mul_scalar(&(&qinv_minus_q().pow(-(n as i64)) * &prod.scale))
}

/// `<e(u_1)...e(u_n), f_{a_1}...f_{a_n}>_2` for the second pairing (the `g'`
/// kernel): `prod_k u_{sigma(k)}^{a_k}` times `g'(u_{sigma(l)}/u_{sigma(k)})`
/// over inverted pairs.
pub fn pair2_ecurrents_fword(vars: VarSet, prod: &CurrentProduct, fw: &[i64]) -> MultiScalar {
    assert_eq!(prod.kind, Kind::E);
    let n = prod.len();
    if fw.len() != n {
        return MultiScalar::zero(vars);
    }
    let mut acc = MultiScalar::zero(vars);
    let mut perm: Vec<usize> = (0..n).collect();
    permute(&mut perm, 0, &mut |sigma| {
        let sigma_factors: Vec<CurrentFactor> = (0..n).map(|k| prod.factors[sigma[k]]).collect();
        let mut term = args_monomial(vars, &sigma_factors, fw);
        for k in 0..n {
            for l in (k + 1)..n {
                if sigma[k] > sigma[l] {
                    term = term.mul(&kernel_factor(
                        vars,
                        true,
                        prod.factors[sigma[l]],
                        prod.factors[sigma[k]],
                    ));
                }
            }
        }
        acc = acc.add(&term);
    });
    acc.mul_scalar(&(&(-&qinv_minus_q()).pow(-(n as i64)) * &prod.scale))
}

/// `<e_{b_1}...e_{b_n}, f(u_1)...f(u_n)>_2` for the second pairing:
/// `prod_k u_k^{b_{sigma(k)}}` times `g'(u_l/u_k)` over inverted pairs.
pub fn pair2_eword_fcurrents(vars: VarSet, ew: &[i64], prod: &CurrentProduct) -> MultiScalar {
    assert_eq!(prod.kind, Kind::F);
    let n = prod.len();
    if ew.len() != n {
        return MultiScalar::zero(vars);
    }
    let mut acc = MultiScalar::zero(vars);
    let mut perm: Vec<usize> = (0..n).collect();
    permute(&mut perm, 0, &mut |sigma| {
        let powers: Vec<i64> = (0..n).map(|k| ew[sigma[k]]).collect();
        let mut term = args_monomial(vars, &prod.factors, &powers);
        for k in 0..n {
            for l in (k + 1)..n {
                if sigma[k] > sigma[l] {
                    term = term.mul(&kernel_factor(vars, true, prod.factors[l], prod.factors[k]));
                }
            }
        }
        acc = acc.add(&term);
    });
    acc.mul_scalar(&(&(-&qinv_minus_q()).pow(-(n as i64)) * &prod.scale))
}

/// Expansion region for mode extraction: which end of the variable list is
/// the dominant one. Products of `e`-currents and of the two-sided `t`
/// tensors expand with the leftmost variable largest; the `f`-side of the
/// first pairing kernel and the `e`-side of the second are one-sided the
/// other way.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Region {
    FirstLargest,
    FirstSmallest,
}

/// Extract the coefficient of `prod_i v_i^{t_i}` in the given region by
/// iterated one-sided expansion starting from the innermost (smallest)
/// variable. The result must be constant.
pub fn extract_scalar(ms: &MultiScalar, targets: &[i64], region: Region) -> Scalar {
    let vars = ms.vars();
    assert_eq!(targets.len(), vars.arity());
    let mut cur = ms.clone();
    let order: Vec<usize> = match region {
        Region::FirstLargest => (0..vars.arity()).rev().collect(),
        Region::FirstSmallest => (0..vars.arity()).collect(),
    };
    for v in order {
        cur = cur.coeff_of_var_power(v, targets[v] as i32);
    }
    assert!(
        cur.den_factors().next().is_none(),
        "contraction left a nonconstant denominator: {:?}",
        cur
    );
    match cur.num.as_monomial() {
        None => {
            assert!(cur.num.is_zero(), "contraction left a nonconstant value: {:?}", cur.num);
            Scalar::zero()
        }
        Some((e, c)) => {
            assert!(e.iter().all(|x| *x == 0), "contraction left variables: {:?}", cur.num);
            c
        }
    }
}
