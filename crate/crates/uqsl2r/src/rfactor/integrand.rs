//! The commuting integrands: full and sign-projected components, plus the
//! probe-level checks of commutativity and of the exponential solution.

use super::composed::composed_current_component;
use crate::currents::contract::contract_pair;
use crate::currents::{
    composed_block, pair_fcurrents_eword, pair_fword_ecurrents, CurrentFactor, CurrentProduct,
};
use crate::modealg::{
    c_multiset, half_current_component, half_current_power_raw, pair_words, screening_pow,
    HalfSign, Kind, Screening, TensorElement,
};
use crate::qfield::{q_factorial, q_number, qinv_minus_q, Scalar, VarSet};

/// `(q - q^{-1}) (-1)^n / ([n-1]_q! [n]_q!)`: the scalar in front of
/// `f^{(n)} (x) e^{(n)}` in the degree-`n` integrand.
pub fn t_prefactor(n: u32) -> Scalar {
    let sign = if n % 2 == 0 { Scalar::one() } else { -&Scalar::one() };
    let num = &(-&qinv_minus_q()) * &sign;
    &num / &(&q_factorial(n as i64 - 1) * &q_factorial(n as i64))
}

/// `(-1)^n (q^{-1} - q) / ([n]_q! [n-1]_q!)`: the prefactor of the
/// screening form of the projected integrand; the half-current signs make
/// it opposite to [`t_prefactor`].
pub fn i10_prefactor(n: u32) -> Scalar {
    -&t_prefactor(n)
}

/// `(-1)^n (q^{-1} - q)^{2n-1} / [n]_q`: the scalar in front of
/// `f_pm^n (x) e_mp^n` in the projected integrand (half-current power form).
pub fn power_prefactor(n: u32) -> Scalar {
    let sign = if n % 2 == 0 { Scalar::one() } else { -&Scalar::one() };
    &(&sign * &qinv_minus_q().pow(2 * n as i64 - 1)) / &q_number(n as i64)
}

/// Zero-total-degree contraction of the composed-current pair within the
/// window, times the integrand prefactor.
pub fn i_full_component(n: u32, window: i64) -> TensorElement {
    let pref = t_prefactor(n);
    let mut out = TensorElement::zero();
    let dmax = n as i64 * window;
    for d in -dmax..=dmax {
        let f = composed_current_component(Kind::F, n, d, window);
        if f.is_zero() {
            continue;
        }
        let e = composed_current_component(Kind::E, n, -d, window);
        if e.is_zero() {
            continue;
        }
        out = out.add(&TensorElement::of(&f, &e));
    }
    out.scale(&pref)
}

/// Sign-projected integrand component, computed by both routes — iterated
/// screenings of the half-currents, and prefactored half-current powers —
/// which are asserted equal before the window restriction.
pub fn i_proj_component(n: u32, plus_minus: bool, window: i64) -> TensorElement {
    let (fsign, esign) = if plus_minus {
        (HalfSign::Plus, HalfSign::Minus)
    } else {
        (HalfSign::Minus, HalfSign::Plus)
    };
    let pref = i10_prefactor(n);
    let powpref = power_prefactor(n);
    let mut out = TensorElement::zero();
    let dmax = n as i64 * window;
    for d in -dmax..=dmax {
        // screenings route
        let fs = screening_pow(Screening::SF0, n - 1, &half_current_component(Kind::F, fsign, d))
            .normal_form();
        let es = screening_pow(Screening::SE0, n - 1, &half_current_component(Kind::E, esign, -d))
            .normal_form();
        // powers route
        let fp = half_current_power_raw(Kind::F, fsign, n, d).normal_form();
        let ep = half_current_power_raw(Kind::E, esign, n, -d).normal_form();
        let mut screen_pair = TensorElement::of(&fs, &es).scale(&pref);
        let power_pair = TensorElement::of(&fp, &ep).scale(&powpref);
        assert_eq!(
            screen_pair, power_pair,
            "screening and power routes disagree at n={n} d={d}"
        );
        screen_pair = screen_pair.window_filter(window);
        out = out.add(&screen_pair);
    }
    out
}

/// Probe value `<<X, E* (x) F*>> = sum <f-slot, E*> <F*, e-slot>` of a
/// product of degree-`n_i` integrands, contracted in the region where the
/// leftmost spectral variable dominates.
pub fn integrand_product_probe(orders: &[u32], eprobe: &[i64], fprobe: &[i64]) -> Scalar {
    const NAMES: [&str; 4] = ["z1", "z2", "z3", "z4"];
    let m = orders.len();
    assert!(m <= 2, "probe contraction implemented for up to two factors");
    let vars = VarSet(&NAMES[..m]);
    let mut fprod: Option<CurrentProduct> = None;
    let mut eprod: Option<CurrentProduct> = None;
    let mut scale = Scalar::one();
    for (i, n) in orders.iter().enumerate() {
        let fb = reindex(composed_block(Kind::F, *n, 0), i);
        let eb = reindex(composed_block(Kind::E, *n, 0), i);
        scale *= &t_prefactor(*n);
        fprod = Some(match fprod {
            None => fb,
            Some(p) => p.concat(&fb),
        });
        eprod = Some(match eprod {
            None => eb,
            Some(p) => p.concat(&eb),
        });
    }
    let fprod = fprod.expect("at least one factor");
    let eprod = eprod.expect("at least one factor");
    let fval = pair_fcurrents_eword(vars, &fprod, eprobe);
    if fval.is_zero() {
        return Scalar::zero();
    }
    let eval = pair_fword_ecurrents(vars, fprobe, &eprod);
    if eval.is_zero() {
        return Scalar::zero();
    }
    &contract_pair(&fval, &eval) * &scale
}

fn reindex(mut p: CurrentProduct, var: usize) -> CurrentProduct {
    for f in &mut p.factors {
        f.var = var;
    }
    p
}

/// `[I^{(n)}, I^{(m)}] = 0` at probe level: both operator orders contracted
/// in their own leftmost-dominant region agree.
pub fn commutator_probe_zero(n: u32, m: u32, eprobe: &[i64], fprobe: &[i64]) -> bool {
    let a = integrand_product_probe(&[n, m], eprobe, fprobe);
    let b = integrand_product_probe(&[m, n], eprobe, fprobe);
    a == b
}

/// Probe value of the multiplicative pairing tensor at tau-degree `n`. The
/// probes are ordered words, so orthogonality collapses the sum to the
/// single matching multiset.
pub fn rbar_probe(n: u32, eprobe: &[i64], fprobe: &[i64]) -> Scalar {
    if eprobe.len() != n as usize {
        return Scalar::zero();
    }
    let mut p: Vec<i64> = eprobe.to_vec();
    p.sort();
    let fw: Vec<i64> = p.iter().map(|x| -x).collect(); // nonincreasing
    let ew: Vec<i64> = p.clone(); // nondecreasing
    let c = &c_multiset(&p) * &qinv_minus_q().pow(n as i64);
    let left = pair_words(&fw, eprobe);
    if left.is_zero() {
        return Scalar::zero();
    }
    &(&c * &left) * &pair_words(fprobe, &ew)
}

/// Probe value of the degree-`n` term of the normal-ordered integral tensor
/// `(1/n!) (q^{-1}-q)^n contraction of f(z_1)...f(z_n) (x) e(z_1)...e(z_n)`.
pub fn integral_tensor_probe(n: u32, eprobe: &[i64], fprobe: &[i64]) -> Scalar {
    const NAMES: [&str; 4] = ["z1", "z2", "z3", "z4"];
    let m = n as usize;
    assert!(m >= 1 && m <= 2, "probe contraction implemented for up to two variables");
    let vars = VarSet(&NAMES[..m]);
    let factors: Vec<CurrentFactor> =
        (0..m).map(|i| CurrentFactor { qshift: 0, var: i }).collect();
    let fprod = CurrentProduct::new(Kind::F, factors.clone());
    let eprod = CurrentProduct::new(Kind::E, factors);
    let fval = pair_fcurrents_eword(vars, &fprod, eprobe);
    if fval.is_zero() {
        return Scalar::zero();
    }
    let eval = pair_fword_ecurrents(vars, fprobe, &eprod);
    if eval.is_zero() {
        return Scalar::zero();
    }
    let contracted = contract_pair(&fval, &eval);
    let mut fact = Scalar::one();
    for k in 1..=(n as i64) {
        fact *= &Scalar::from_int(k);
    }
    &(&contracted * &qinv_minus_q().pow(n as i64)) / &fact
}

/// Probe-level check of the exponential solution: the tau-degree-`n`
/// component of `exp(sum_k I^{(k)}/k)` equals the multiplicative tensor.
pub fn exp_solution_probe_matches_rbar(n: u32, eprobe: &[i64], fprobe: &[i64]) -> bool {
    let mut lhs = Scalar::zero();
    for comp in super::rseries::compositions_of(n) {
        let mut fact = Scalar::one();
        for k in 1..=(comp.len() as i64) {
            fact *= &Scalar::from_int(k);
        }
        let mut weight = fact.recip();
        for part in &comp {
            weight = &weight / &Scalar::from_int(*part as i64);
        }
        lhs += &(&weight * &integrand_product_probe(&comp, eprobe, fprobe));
    }
    lhs == rbar_probe(n, eprobe, fprobe)
}
