use super::element::straighten_word;
use super::*;
use crate::qfield::{qinv_minus_q, qsq_factorial, Scalar};
use proptest::prelude::*;

fn q(n: i64) -> Scalar {
    Scalar::q_pow(n)
}

fn e(w: &[i64]) -> AlgebraElement {
    AlgebraElement::word(Kind::E, w.to_vec())
}

fn f(w: &[i64]) -> AlgebraElement {
    AlgebraElement::word(Kind::F, w.to_vec())
}

#[test]
fn straighten_ordered_word_is_fixed() {
    assert_eq!(e(&[0, 1]).normal_form(), e(&[0, 1]));
    assert_eq!(f(&[1, 0]).normal_form(), f(&[1, 0]));
}

#[test]
fn straighten_adjacent_swap() {
    // e_1 e_0 -> q^2 e_0 e_1
    let got = e(&[1, 0]).normal_form();
    assert_eq!(got, AlgebraElement::term(Kind::E, vec![0, 1], q(2)));
    // f_{-1} f_0 -> q^2 f_0 f_{-1}
    let got = f(&[-1, 0]).normal_form();
    assert_eq!(got, AlgebraElement::term(Kind::F, vec![0, -1], q(2)));
}

#[test]
fn straighten_gap_two() {
    // e_1 e_{-1} -> q^2 e_{-1} e_1 + (q^2 - 1) e_0 e_0
    let got = e(&[1, -1]).normal_form();
    let mut want = AlgebraElement::term(Kind::E, vec![-1, 1], q(2));
    want.insert_add(vec![0, 0], &q(2) - &Scalar::one());
    assert_eq!(got, want);
}

#[test]
fn straighten_idempotent_and_graded() {
    for w in [vec![2, -1, 0], vec![-2, 3, 1], vec![1, 1, -3, 2]] {
        let s = e(&w).normal_form();
        assert_eq!(s.normal_form(), s);
        let deg: i64 = w.iter().sum();
        for (sw, _) in s.terms() {
            assert_eq!(sw.len(), w.len());
            assert_eq!(sw.iter().sum::<i64>(), deg);
            // index range never grows
            assert!(sw.iter().min() >= w.iter().min());
            assert!(sw.iter().max() <= w.iter().max());
        }
    }
}

#[test]
fn pairing_single_modes() {
    // <f_{-1}, e_1> = 1/(q^{-1} - q)
    assert_eq!(pair_words(&[-1], &[1]), qinv_minus_q().recip());
    // degree mismatch
    assert_eq!(pair_words(&[-1], &[2]), Scalar::zero());
    // length mismatch
    assert_eq!(pair_words(&[-1, 0], &[1]), Scalar::zero());
}

#[test]
fn pairing_doubled_mode() {
    // <f_{-1} f_{-1}, e_1 e_1> = (1 + q^2) (q^{-1} - q)^{-2}
    let want = &(&Scalar::one() + &q(2)) * &qinv_minus_q().pow(-2);
    assert_eq!(pair_words(&[-1, -1], &[1, 1]), want);
}

#[test]
fn pairing_2_values() {
    // <e_1, f_{-1}>_2 = 1/(q - q^{-1})
    assert_eq!(pair_words_2(&[1], &[-1]), (-&qinv_minus_q()).recip());
    assert_eq!(pair_words_2(&[1], &[-2]), Scalar::zero());
    // <e_1 e_1, f_{-1} f_{-1}>_2 = (1 + q^{-2}) (q - q^{-1})^{-2}
    let want = &(&Scalar::one() + &q(-2)) * &qinv_minus_q().pow(-2);
    assert_eq!(pair_words_2(&[1, 1], &[-1, -1]), want);
}

#[test]
fn pairing_respects_relations() {
    // <straighten(x), y> = <x, y> on a spread of words
    let xs = [vec![1, -1], vec![2, 0, -1], vec![0, 2, -2]];
    let ys = [vec![0, 0], vec![1, -1], vec![-1, 0, 0], vec![0, -1, 0]];
    for x in &xs {
        let s = e(x).normal_form();
        for y in &ys {
            let direct = pair_words(y, x);
            let mut via = Scalar::zero();
            for (w, c) in s.terms() {
                via += &(c * &pair_words(y, w));
            }
            assert_eq!(direct, via, "x={x:?} y={y:?}");
        }
    }
}

#[test]
fn orthogonality_small_sweep() {
    // ordered pairs up to length 2, indices in [-2, 2]
    let mut ordered_e: Vec<Vec<i64>> = Vec::new();
    for a in -2i64..=2 {
        ordered_e.push(vec![a]);
        for b in a..=2 {
            ordered_e.push(vec![a, b]);
        }
    }
    for s in &ordered_e {
        for t in &ordered_e {
            let fw: Vec<i64> = s.iter().map(|x| -x).collect();
            let got = pair_words(&fw, t);
            if s == t {
                let want = &c_multiset(s).recip() * &qinv_minus_q().pow(-(s.len() as i64));
                assert_eq!(got, want, "diagonal at {s:?}");
            } else {
                assert!(got.is_zero(), "off-diagonal at {s:?}, {t:?} gave {got:?}");
            }
        }
    }
}

#[test]
fn c_multiset_values() {
    assert_eq!(c_multiset(&[]), Scalar::one());
    assert_eq!(c_multiset(&[1, 1]), qsq_factorial(2).recip());
    assert_eq!(c_multiset(&[2, 1]), Scalar::one());
    // value-shift invariance
    assert_eq!(c_multiset(&[-3, -3, 0]), c_multiset(&[5, 5, 8]));
}

#[test]
fn dual_expand_matches_straighten() {
    let words_e = [
        vec![0],
        vec![1, 0],
        vec![1, -1],
        vec![2, 0, -1],
        vec![1, 1, -2],
        vec![0, -1, 2],
    ];
    for w in &words_e {
        assert_eq!(dual_expand(Kind::E, w), e(w).normal_form(), "e-word {w:?}");
    }
    let words_f = [vec![0], vec![-1, 0], vec![-1, 1], vec![0, 1, -2], vec![2, -1, 0]];
    for w in &words_f {
        assert_eq!(dual_expand(Kind::F, w), f(w).normal_form(), "f-word {w:?}");
    }
}

#[test]
fn screening_kills_unit() {
    let u = AlgebraElement::unit(Kind::E);
    assert!(screening(Screening::SE0, &u).normal_form().is_zero());
    let u = AlgebraElement::unit(Kind::F);
    assert!(screening(Screening::SF0, &u).normal_form().is_zero());
}

#[test]
fn screening_power_formulas_small() {
    // S_e0(component of e_-) = (1 - q^2) * (component of e_-^2)
    for d in -6i64..=-2 {
        let x = half_current_component(Kind::E, HalfSign::Minus, d);
        let lhs = screening(Screening::SE0, &x).normal_form();
        let rhs = half_current_power_raw(Kind::E, HalfSign::Minus, 2, d)
            .normal_form()
            .scale(&(&Scalar::one() - &q(2)));
        assert_eq!(lhs, rhs, "degree {d}");
    }
    // S~_e0(component of e_+) = (1 - q^{-2}) * (component of e_+^2)
    for d in 0i64..=6 {
        let x = half_current_component(Kind::E, HalfSign::Plus, d);
        let lhs = screening(Screening::SE0Tilde, &x).normal_form();
        let rhs = half_current_power_raw(Kind::E, HalfSign::Plus, 2, d)
            .normal_form()
            .scale(&(&Scalar::one() - &q(-2)));
        assert_eq!(lhs, rhs, "degree {d}");
    }
}

#[test]
fn conjugation_relation_exact() {
    // on homogeneous length-L words: S~_e0 = -q^{-2L} S_e0, S~_f0 = -q^{2L} S_f0
    let xs = [e(&[1, -2]), e(&[0, 3, -1])];
    for x in &xs {
        let l = x.terms().next().unwrap().0.len() as i64;
        let lhs = screening(Screening::SE0Tilde, x);
        let rhs = screening(Screening::SE0, x).scale(&-&q(-2 * l));
        assert_eq!(lhs, rhs);
    }
    let xs = [f(&[-1, 2]), f(&[0, -3, 1])];
    for x in &xs {
        let l = x.terms().next().unwrap().0.len() as i64;
        let lhs = screening(Screening::SF0Tilde, x);
        let rhs = screening(Screening::SF0, x).scale(&-&q(2 * l));
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn screening_stability_of_negative_e() {
    // screening maps an all-negative-index e-element to an all-negative one
    for w in [vec![-1], vec![-2], vec![-1, -2], vec![-3, -1]] {
        let s = screening(Screening::SE0, &e(&w)).normal_form();
        for (sw, _) in s.terms() {
            assert!(sw.iter().all(|i| *i < 0), "word {sw:?} escaped from {w:?}");
        }
    }
}

#[test]
fn projector_screening_commute() {
    let test_elems = [
        e(&[1, -1]),
        e(&[2, -1, 0]),
        e(&[-2, 1]),
        e(&[0, 0, -1]),
    ];
    for x in &test_elems {
        for p in [Projector::EPlus, Projector::EMinus] {
            let lhs = project(&screening(Screening::SE0, x), p);
            let rhs = screening(Screening::SE0, &project(x, p)).straighten(p.order());
            // compare as straightened elements with the projector's order
            assert_eq!(lhs, project(&rhs, p), "x={x:?} p={p:?}");
            let lhs = project(&screening(Screening::SE0Tilde, x), p);
            let rhs = screening(Screening::SE0Tilde, &project(x, p));
            assert_eq!(lhs, project(&rhs, p), "tilde x={x:?} p={p:?}");
        }
    }
    let test_elems = [f(&[-1, 1]), f(&[1, 0, -2]), f(&[2, -1])];
    for x in &test_elems {
        for p in [Projector::FPlus, Projector::FMinus] {
            let lhs = project(&screening(Screening::SF0, x), p);
            let rhs = screening(Screening::SF0, &project(x, p));
            assert_eq!(lhs, project(&rhs, p), "x={x:?} p={p:?}");
        }
    }
}

#[test]
fn projector_examples() {
    assert_eq!(
        project_word(Kind::E, &[-2, -1], Projector::EMinus),
        e(&[-2, -1])
    );
    assert!(project_word(Kind::E, &[1], Projector::EMinus).is_zero());
    assert!(project_word(Kind::F, &[1, 0], Projector::FPlusStar).is_zero());
    assert!(project_word(Kind::F, &[1, 0], Projector::FMinusStar).is_zero());
    // unit survives
    assert_eq!(
        project(&AlgebraElement::unit(Kind::E), Projector::EMinus),
        AlgebraElement::unit(Kind::E)
    );
}

#[test]
fn half_current_components() {
    // (f, +, 1, 3) -> f_3
    assert_eq!(half_current_component(Kind::F, HalfSign::Plus, 3), f(&[3]));
    // (e, -, 1, -2) -> -e_{-2}
    assert_eq!(
        half_current_component(Kind::E, HalfSign::Minus, -2),
        e(&[-2]).scale(&-&Scalar::one())
    );
    // (f, +, 2, 3): f_1 f_2 + f_2 f_1 straightened
    let got = half_current_power_component(Kind::F, HalfSign::Plus, 2, 3, 3);
    let want = f(&[1, 2]).add(&f(&[2, 1])).normal_form();
    assert_eq!(got, want);
    assert!(!got.is_zero());
}

#[test]
fn rbar_components_small() {
    // n = 0: unit
    assert_eq!(rbar_component(0, 2), TensorElement::unit());
    // n = 1, window 2: (q^{-1}-q) sum_{|k|<=2} f_{-k} (x) e_k
    let got = rbar_component(1, 2);
    let mut want = TensorElement::zero();
    for k in -2i64..=2 {
        want.insert_add(vec![-k], vec![k], qinv_minus_q());
    }
    assert_eq!(got, want);
    // n = 2: the equal-index part at k carries (q^{-1}-q)^2/(1+q^2)
    let got = rbar_component(2, 2);
    let want = &qinv_minus_q().pow(2) * &(&Scalar::one() + &q(2)).recip();
    assert_eq!(got.coeff(&[-1, -1], &[1, 1]), want);
    // distinct indices carry (q^{-1}-q)^2
    assert_eq!(got.coeff(&[1, -1], &[-1, 1]), qinv_minus_q().pow(2));
}

#[test]
fn rbar_duality_reproduces_words() {
    // pairing the f-slot of rbar against an ordered e-word returns that word
    for n in 1u32..=3 {
        let window = 2;
        let rb = rbar_component(n, window);
        let mut ordered: Vec<Vec<i64>> = Vec::new();
        gen_ordered(-window, window, n as usize, &mut vec![], &mut ordered);
        for y in &ordered {
            let mut got = AlgebraElement::zero(Kind::E);
            for ((fw, ew), c) in rb.terms() {
                let p = pair_words(fw, y);
                if !p.is_zero() {
                    got = got.add(&AlgebraElement::term(Kind::E, ew.clone(), &p * c));
                }
            }
            assert_eq!(got, e(y), "duality failed at {y:?}");
        }
    }
}

fn gen_ordered(lo: i64, hi: i64, n: usize, buf: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
    if n == 0 {
        out.push(buf.clone());
        return;
    }
    let start = buf.last().copied().unwrap_or(lo);
    for v in start..=hi {
        buf.push(v);
        gen_ordered(lo, hi, n - 1, buf, out);
        buf.pop();
    }
}

#[test]
fn straighten_both_orders_agree_as_elements() {
    // straightening to either order then expanding back must agree with the
    // dual-basis expansion of the same word
    let w = vec![2, -1, 1];
    let nd = straighten_word(Kind::E, Order::NonDec, &w);
    // re-straighten the nonincreasing form to nondecreasing: same element
    let ni = straighten_word(Kind::E, Order::NonInc, &w).straighten(Order::NonDec);
    assert_eq!(nd, ni);
}

#[test]
fn screening_powers_collapse_lemma() {
    // S^{n-1} of a half-current component equals the product prefactor times
    // the half-current power component, n <= 4, |degree| <= 8
    for n in 2u32..=4 {
        let mut pref_f = Scalar::one();
        let mut pref_e = Scalar::one();
        for k in 2..=(n as i64) {
            pref_f *= &(&q(-2 * (k - 1)) - &Scalar::one());
            pref_e *= &(&Scalar::one() - &q(2 * (k - 1)));
        }
        for d in 1i64..=8 {
            let lhs = screening_pow(
                Screening::SF0,
                n - 1,
                &half_current_component(Kind::F, HalfSign::Plus, d),
            )
            .normal_form();
            let rhs = half_current_power_raw(Kind::F, HalfSign::Plus, n, d)
                .normal_form()
                .scale(&pref_f);
            assert_eq!(lhs, rhs, "f+ n={n} d={d}");
        }
        for d in -8i64..=0 {
            let lhs = screening_pow(
                Screening::SF0,
                n - 1,
                &half_current_component(Kind::F, HalfSign::Minus, d),
            )
            .normal_form();
            let rhs = half_current_power_raw(Kind::F, HalfSign::Minus, n, d)
                .normal_form()
                .scale(&pref_f);
            assert_eq!(lhs, rhs, "f- n={n} d={d}");
        }
        for d in -8i64..=-1 {
            let lhs = screening_pow(
                Screening::SE0,
                n - 1,
                &half_current_component(Kind::E, HalfSign::Minus, d),
            )
            .normal_form();
            let rhs = half_current_power_raw(Kind::E, HalfSign::Minus, n, d)
                .normal_form()
                .scale(&pref_e);
            assert_eq!(lhs, rhs, "e- n={n} d={d}");
        }
        for d in 0i64..=8 {
            let lhs = screening_pow(
                Screening::SE0,
                n - 1,
                &half_current_component(Kind::E, HalfSign::Plus, d),
            )
            .normal_form();
            let rhs = half_current_power_raw(Kind::E, HalfSign::Plus, n, d)
                .normal_form()
                .scale(&pref_e);
            assert_eq!(lhs, rhs, "e+ n={n} d={d}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn dual_expand_equals_straighten_random(w in proptest::collection::vec(-3i64..=3, 1..=3)) {
        prop_assert_eq!(dual_expand(Kind::E, &w), e(&w).normal_form());
        prop_assert_eq!(dual_expand(Kind::F, &w), f(&w).normal_form());
    }

    #[test]
    fn straighten_preserves_pairing_random(
        x in proptest::collection::vec(-2i64..=2, 1..=3),
        y in proptest::collection::vec(-2i64..=2, 1..=3),
    ) {
        let s = e(&x).normal_form();
        let direct = pair_words(&y, &x);
        let mut via = Scalar::zero();
        for (w, c) in s.terms() {
            via += &(c * &pair_words(&y, w));
        }
        prop_assert_eq!(direct, via);
    }
}
