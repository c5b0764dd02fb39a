//! The Hopf pairing between the dual nilpotent subalgebras, at mode level.
//!
//! The pairing of current products is a permutation sum of delta factors
//! times one-sided `g`-series; extracting modes turns each permutation into a
//! finite enumeration of admissible exponent assignments on its inverted
//! pairs (the assignments are bounded because the `g`-series is one-sided).

use crate::qfield::{g_series_coeff, gp_series_coeff, qinv_minus_q, qsq_factorial, Scalar};
use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

/// `C_{multiset}(q)`: product of `1/(m)_{q^2}!` over the multiplicities of
/// the distinct values of the multiset.
pub fn c_multiset(values: &[i64]) -> Scalar {
    let mut sorted = values.to_vec();
    sorted.sort();
    let mut acc = Scalar::one();
    let mut i = 0;
    while i < sorted.len() {
        let mut j = i;
        while j < sorted.len() && sorted[j] == sorted[i] {
            j += 1;
        }
        acc *= &qsq_factorial((j - i) as i64).recip();
        i = j;
    }
    acc
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
enum Kernel {
    /// `g`-kernel with shifts entering as in the first coproduct's pairing.
    First,
    /// `g'`-kernel with the mirrored shift orientation.
    Second,
}

/// `<f_{a_1}...f_{a_n}, e_{b_1}...e_{b_n}>`: exact value of the Hopf pairing
/// attached to the first coproduct. Zero on length or total-degree mismatch.
pub fn pair_words(fw: &[i64], ew: &[i64]) -> Scalar {
    pair_cached(fw, ew, Kernel::First)
}

/// `<e_{b_1}...e_{b_n}, f_{a_1}...f_{a_n}>` for the second coproduct's
/// pairing (the `g'`-kernel); arguments are (e-word, f-word).
pub fn pair_words_2(ew: &[i64], fw: &[i64]) -> Scalar {
    pair_cached(fw, ew, Kernel::Second)
}

type PairKey = (Vec<i64>, Vec<i64>, Kernel);

fn pair_cache() -> &'static Mutex<HashMap<PairKey, Scalar>> {
    static CACHE: OnceLock<Mutex<HashMap<PairKey, Scalar>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn pair_cached(fw: &[i64], ew: &[i64], kernel: Kernel) -> Scalar {
    if fw.len() != ew.len() {
        return Scalar::zero();
    }
    if fw.iter().sum::<i64>() + ew.iter().sum::<i64>() != 0 {
        return Scalar::zero();
    }
    let key: PairKey = (fw.to_vec(), ew.to_vec(), kernel);
    if let Some(hit) = pair_cache().lock().unwrap().get(&key) {
        return hit.clone();
    }
    let v = pair_uncached(fw, ew, kernel);
    pair_cache().lock().unwrap().insert(key, v.clone());
    v
}

fn pair_uncached(fw: &[i64], ew: &[i64], kernel: Kernel) -> Scalar {
    let n = fw.len();
    let mut total = Scalar::zero();
    let mut perm: Vec<usize> = (0..n).collect();
    permute(&mut perm, 0, &mut |sigma| {
        total += &perm_contribution(fw, ew, sigma, kernel);
    });
    let norm = match kernel {
        Kernel::First => qinv_minus_q().pow(-(n as i64)),
        Kernel::Second => (-&qinv_minus_q()).pow(-(n as i64)),
    };
    &total * &norm
}

/// Sum over admissible exponent assignments on the inverted pairs of sigma.
fn perm_contribution(fw: &[i64], ew: &[i64], sigma: &[usize], kernel: Kernel) -> Scalar {
    let n = fw.len();
    // inverted pairs (k, l), k < l, sigma(k) > sigma(l)
    let mut inv_after: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut inv_before: Vec<Vec<usize>> = vec![Vec::new(); n];
    for k in 0..n {
        for l in (k + 1)..n {
            if sigma[k] > sigma[l] {
                inv_after[k].push(l);
                inv_before[l].push(k);
            }
        }
    }
    // c[k][l] for inverted pairs, filled position by position
    let mut c: Vec<Vec<i64>> = vec![vec![0; n]; n];
    let mut acc = Scalar::zero();
    fill_position(fw, ew, sigma, kernel, &inv_after, &inv_before, &mut c, 0, &Scalar::one(), &mut acc);
    acc
}

#[allow(clippy::too_many_arguments)]
fn fill_position(
    fw: &[i64],
    ew: &[i64],
    sigma: &[usize],
    kernel: Kernel,
    inv_after: &[Vec<usize>],
    inv_before: &[Vec<usize>],
    c: &mut Vec<Vec<i64>>,
    k: usize,
    weight: &Scalar,
    acc: &mut Scalar,
) {
    let n = fw.len();
    if k == n {
        *acc += weight;
        return;
    }
    let known: i64 = inv_before[k].iter().map(|j| c[*j][k]).sum();
    // required sum of the unknown exponents at this position
    let s = match kernel {
        Kernel::First => -fw[k] - ew[sigma[k]] + known,
        Kernel::Second => fw[k] + ew[sigma[k]] + known,
    };
    if s < 0 {
        return;
    }
    let slots = inv_after[k].clone();
    if slots.is_empty() {
        if s != 0 {
            return;
        }
        fill_position(fw, ew, sigma, kernel, inv_after, inv_before, c, k + 1, weight, acc);
        return;
    }
    compositions(s, slots.len(), &mut |parts| {
        let mut w = weight.clone();
        for (slot, part) in slots.iter().zip(parts) {
            c[k][*slot] = *part;
            let g = match kernel {
                Kernel::First => g_series_coeff(*part),
                Kernel::Second => gp_series_coeff(*part),
            };
            w *= &g;
        }
        fill_position(fw, ew, sigma, kernel, inv_after, inv_before, c, k + 1, &w, acc);
    });
}

/// All ways to write `total` as an ordered sum of `parts` nonnegative
/// integers.
fn compositions(total: i64, parts: usize, f: &mut impl FnMut(&[i64])) {
    let mut buf = vec![0i64; parts];
    fn rec(total: i64, idx: usize, buf: &mut Vec<i64>, f: &mut impl FnMut(&[i64])) {
        if idx + 1 == buf.len() {
            buf[idx] = total;
            f(buf);
            return;
        }
        for x in 0..=total {
            buf[idx] = x;
            rec(total - x, idx + 1, buf, f);
        }
    }
    rec(total, 0, &mut buf, f);
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
