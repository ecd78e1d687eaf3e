//! Pairwise generating-series convolution behind the raising-operator
//! products.
//!
//! A product Π_{i<j} f_{ij}(z_j/z_i) applied to the `q`-generating function
//! and extracted at `z^base` is a finite sum Σ_γ c_γ(q)·q_γ with
//! γ = base + Σ k_{ij}(e_i − e_j), k_{ij} ≥ 0. Every factor moves weight
//! toward earlier coordinates, so suffix sums never increase during the
//! expansion; states with a negative suffix sum are pruned (they can never
//! recover) and the per-pair order is capped by the smallest suffix sum the
//! pair crosses. This makes the truncation exact.

use std::collections::BTreeMap;

use crate::foundations::QPolynomial;

/// Which series the pair (i,j) contributes.
#[derive(Clone, Copy, PartialEq, Eq)]
pub(crate) enum PairSeries {
    /// (1−t)/(1+t): the Schur-Q raising factor.
    Plain,
    /// (1−t)(1+qt)/((1+t)(1−qt)): the Q-Hall-Littlewood factor.
    Full,
}

/// Coefficients of (1−t)/(1+t) = 1 + Σ_{k≥1} 2(−1)^k t^k up to order n.
fn plain_series(n: usize) -> Vec<QPolynomial> {
    (0..=n)
        .map(|k| {
            if k == 0 {
                QPolynomial::one()
            } else if k % 2 == 0 {
                QPolynomial::constant(2)
            } else {
                QPolynomial::constant(-2)
            }
        })
        .collect()
}

/// Coefficients of (1−t)(1+qt)/((1+t)(1−qt)) up to order n.
fn full_series(n: usize) -> Vec<QPolynomial> {
    let plain = plain_series(n);
    // (1+qt)/(1−qt) = 1 + Σ_{k≥1} 2 q^k t^k
    let fq: Vec<QPolynomial> = (0..=n)
        .map(|k| {
            if k == 0 {
                QPolynomial::one()
            } else {
                QPolynomial::monomial(2, k)
            }
        })
        .collect();
    (0..=n)
        .map(|k| {
            let mut c = QPolynomial::zero();
            for a in 0..=k {
                c = &c + &(&plain[a] * &fq[k - a]);
            }
            c
        })
        .collect()
}

/// Expand Π_{i<j} f_{ij}(z_j/z_i)·Ω[(1−ε)Z_nX] at `z^base`: all exponent
/// vectors γ ≥ 0 with their polynomial coefficients, sorted.
pub(crate) fn expand_raising_product(
    base: &[u32],
    kind: impl Fn(usize, usize) -> PairSeries,
) -> Vec<(Vec<u32>, QPolynomial)> {
    let n = base.len();
    let total: u32 = base.iter().sum();
    let max_k = total as usize;
    let plain = plain_series(max_k);
    let full = full_series(max_k);

    let mut states: BTreeMap<Vec<i64>, QPolynomial> = BTreeMap::new();
    states.insert(base.iter().map(|&p| p as i64).collect(), QPolynomial::one());

    for i in 0..n {
        for j in (i + 1)..n {
            let series = match kind(i, j) {
                PairSeries::Plain => &plain,
                PairSeries::Full => &full,
            };
            let mut next: BTreeMap<Vec<i64>, QPolynomial> = BTreeMap::new();
            for (gamma, coeff) in &states {
                // the pair lowers every suffix sum over positions i+1..=j
                let mut cap = i64::MAX;
                let mut suffix = 0i64;
                for r in (i + 1..n).rev() {
                    suffix += gamma[r];
                    if r <= j {
                        cap = cap.min(suffix);
                    }
                }
                let cap = cap.min(max_k as i64).max(0) as usize;
                for (k, s) in series.iter().enumerate().take(cap + 1) {
                    if s.is_zero() {
                        continue;
                    }
                    let mut g = gamma.clone();
                    g[i] += k as i64;
                    g[j] -= k as i64;
                    let entry = next.entry(g).or_default();
                    *entry = &*entry + &(coeff * s);
                }
            }
            next.retain(|_, c| !c.is_zero());
            states = next;
        }
    }

    states
        .into_iter()
        .filter(|(g, _)| g.iter().all(|&x| x >= 0))
        .map(|(g, c)| (g.into_iter().map(|x| x as u32).collect(), c))
        .collect()
}
