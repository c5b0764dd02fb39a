//! Two-sided contraction of probe values.
//!
//! A contraction `oint dz/z` of an f-slot value against an e-slot value
//! pairs the f-side coefficients in its own one-sided expansion (leftmost
//! variable smallest) with the e-side coefficients in the opposite one
//! (leftmost largest). After stripping homogeneity the values are rational
//! in the single ratio of the two spectral variables; the diagonal pairing
//! of the two opposite expansions is a sum of geometric rays whose ratios
//! have positive q-valuation, and resums to an exact scalar.

use crate::qfield::{MultiScalar, RatX, Scalar};
use std::collections::BTreeMap;

/// Rational function of the ratio variable with an explicit denominator
/// factor list `(c, v)` for `1 - c r^v`, `v = +-1`.
struct RForm {
    num: BTreeMap<i64, Scalar>,
    dens: Vec<(Scalar, i8)>,
}

fn q_valuation2(s: &Scalar) -> i64 {
    s.numerator().min_exp2().expect("valuation of zero") - s.denominator().min_exp2().unwrap_or(0)
}

/// Strip homogeneity and convert to a ratio form. Asserts the value is
/// homogeneous and its denominator factors are ratio binomials.
fn to_ratio_form(ms: &MultiScalar) -> RForm {
    assert_eq!(ms.vars().arity(), 2);
    let mut num: BTreeMap<i64, Scalar> = BTreeMap::new();
    let mut degree: Option<i32> = None;
    for (e, c) in ms.num.terms() {
        let d = e[0] + e[1];
        match degree {
            None => degree = Some(d),
            Some(dd) => assert_eq!(dd, d, "inhomogeneous contraction value"),
        }
        num.entry(e[1] as i64)
            .and_modify(|x| *x = &*x + c)
            .or_insert_with(|| c.clone());
    }
    num.retain(|_, c| !c.is_zero());
    let mut dens = Vec::new();
    for (b, m) in ms.den_factors() {
        assert_eq!(b.mono[0] + b.mono[1], 0, "non-ratio denominator factor");
        let v = b.mono[1];
        assert!(v.abs() == 1, "ratio factor not linear");
        for _ in 0..m {
            dens.push((b.c.clone(), v as i8));
        }
    }
    RForm { num, dens }
}

fn ratx_of(num: &BTreeMap<i64, Scalar>) -> RatX {
    RatX::from_poly(num.iter().map(|(e, c)| (*e, c.clone())).collect())
}

fn den_ratx(dens: &[(Scalar, i8)]) -> RatX {
    let mut d = RatX::constant(Scalar::one());
    for (c, v) in dens {
        d = d.mul(&RatX::from_poly(vec![(0, Scalar::one()), (*v as i64, -c)]));
    }
    d
}

fn ratx_eval(f: &RatX, x: &Scalar) -> Scalar {
    f.eval(x)
}

/// One-sided expansion data: a Laurent polynomial plus geometric rays
/// `coeff * ratio^k` at exponents `dir * k`, `k >= start`.
struct Expansion {
    poly: BTreeMap<i64, Scalar>,
    rays: Vec<Ray>,
}

struct Ray {
    coeff: Scalar,
    ratio: Scalar,
    start: i64,
    dir: i8,
}

/// Partial fractions of an RForm, then the one-sided expansion at zero
/// (`dir = +1`) or infinity (`dir = -1`).
fn expand(form: &RForm, at_infinity: bool) -> Expansion {
    let f = ratx_of(&form.num);
    let full_den = den_ratx(&form.dens);
    let mut rays = Vec::new();
    let mut pieces = RatX::constant(Scalar::zero());
    // distinct-root check
    for (i, (c1, v1)) in form.dens.iter().enumerate() {
        for (c2, v2) in form.dens.iter().skip(i + 1) {
            let r1 = if *v1 > 0 { c1.recip() } else { c1.clone() };
            let r2 = if *v2 > 0 { c2.recip() } else { c2.clone() };
            assert!(r1 != r2, "repeated pole in contraction value");
        }
    }
    for (idx, (c, v)) in form.dens.iter().enumerate() {
        // root of (1 - c r^v)
        let root = if *v > 0 { c.recip() } else { c.clone() };
        // residue coefficient: (F * (1 - c r^v)) at r = root
        let mut rest = den_ratx(
            &form
                .dens
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != idx)
                .map(|(_, x)| x.clone())
                .collect::<Vec<_>>(),
        );
        rest = rest.recip().mul(&f);
        let e = ratx_eval(&rest, &root);
        let piece = RatX::from_poly(vec![(0, e.clone())])
            .mul(&RatX::from_poly(vec![(0, Scalar::one()), (*v as i64, -c)]).recip());
        pieces = pieces.add(&piece);
        // expansion of e/(1 - c r^v) on the requested side
        match (*v > 0, at_infinity) {
            (true, false) => {
                // sum_{k>=0} e c^k r^k
                rays.push(Ray { coeff: e, ratio: c.clone(), start: 0, dir: 1 });
            }
            (true, true) => {
                // -sum_{k>=1} e c^{-k} r^{-k}
                rays.push(Ray { coeff: -&e, ratio: c.recip(), start: 1, dir: -1 });
            }
            (false, false) => {
                // e/(1-c/r) = -sum_{k>=1} e c^{-k} r^k
                rays.push(Ray { coeff: -&e, ratio: c.recip(), start: 1, dir: 1 });
            }
            (false, true) => {
                // sum_{k>=0} e c^k r^{-k}
                rays.push(Ray { coeff: e, ratio: c.clone(), start: 0, dir: -1 });
            }
        }
    }
    // polynomial remainder
    let full = f.mul(&full_den.recip());
    let rem = full.sub(&pieces);
    let poly = rem.as_laurent_poly().expect("nonpolynomial remainder in partial fractions");
    Expansion { poly, rays }
}

/// Diagonal pairing: `sum_m [r^m](f-side at infinity) [r^{-m}](e-side at 0)`.
pub fn contract_pair(fside: &MultiScalar, eside: &MultiScalar) -> Scalar {
    if fside.is_zero() || eside.is_zero() {
        return Scalar::zero();
    }
    let arity = fside.vars().arity();
    assert_eq!(arity, eside.vars().arity());
    if arity == 1 {
        // no ratio: both sides are monomial-supported; plain extraction
        let prod = fside.mul(eside);
        assert!(prod.den_factors().next().is_none(), "unexpected pole in one-variable contraction");
        let mut acc = Scalar::zero();
        for (e, c) in prod.num.terms() {
            if e[0] == 0 {
                acc += c;
            }
        }
        return acc;
    }
    assert_eq!(arity, 2, "contraction implemented for up to two spectral variables");
    let a = expand(&to_ratio_form(fside), true);
    let b = expand(&to_ratio_form(eside), false);
    let mut acc = Scalar::zero();
    // poly x poly
    for (m, ca) in &a.poly {
        if let Some(cb) = b.poly.get(&(-m)) {
            acc += &(ca * cb);
        }
    }
    // poly x ray and ray x poly
    for (m, ca) in &a.poly {
        for ray in &b.rays {
            let k = -m * ray.dir as i64;
            if k >= ray.start {
                acc += &(&(ca * &ray.coeff) * &ray.ratio.pow(k));
            }
        }
    }
    for (m, cb) in &b.poly {
        for ray in &a.rays {
            let k = -m * ray.dir as i64;
            if k >= ray.start {
                acc += &(&(cb * &ray.coeff) * &ray.ratio.pow(k));
            }
        }
    }
    // ray x ray: the f-side rays run downward in the exponent, the e-side
    // rays upward, so the diagonal is a single geometric series whose ratio
    // must carry positive q-valuation (the |q| < 1 resummation)
    for ra in &a.rays {
        for rb in &b.rays {
            debug_assert!(ra.dir == -1 && rb.dir == 1);
            let start = ra.start.max(rb.start);
            let rho = &ra.ratio * &rb.ratio;
            let geom = &Scalar::one() - &rho;
            assert!(!geom.is_zero(), "divergent geometric ray in contraction");
            assert!(
                q_valuation2(&rho) > 0,
                "geometric ray without positive q-valuation: misassigned region"
            );
            acc += &(&(&(&ra.coeff * &rb.coeff) * &rho.pow(start)) * &geom.recip());
        }
    }
    acc
}
