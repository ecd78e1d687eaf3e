//! The vertex operators `Q_m` and `G_m` for every integer `m`.
//!
//! Both come from the same generating-function definition: extracting the
//! coefficient of `z^m` in `Q(z)P[X] = P[X−1/z]·Ω[(1−ε)zX]` gives the
//! closed form `Q_m P = Σ_{i≥0} (−1)^i q_{m+i}·(q_i^⊥ P)`, and the
//! `q`-deformation `G_m P = Σ_{i≥0} q^i Q_{m+i}(q_i^⊥ P)`. For `m > 0`
//! the action of `Q_m` on a basis element is a signed part insertion,
//! which is what the fast path uses.

use crate::foundations::{QPolynomial, StrictPartition};
use crate::qspace::{multiply_qm, skew_qperp, QExpansion};

/// ε(k,μ) = number of parts of μ strictly greater than k; the insertion
/// sign of the part k is (−1)^{ε(k,μ)}.
pub fn epsilon(k: u32, mu: &StrictPartition) -> u32 {
    mu.parts().iter().filter(|&&p| p > k).count() as u32
}

/// The vertex operator `Q_m`. For `m > λ_1`, `Q_m(Q_λ) = Q_{(m,λ)}`; for
/// any positive `m` it is the signed insertion (zero when `m` is already a
/// part); for `m ≤ 0` it is evaluated through the generating series.
pub fn apply_q(m: i64, p: &QExpansion) -> QExpansion {
    if m > 0 {
        let mut out = QExpansion::zero();
        for (mu, c) in p.terms() {
            let k = m as u32;
            if let Some(lambda) = mu.insert_part(k) {
                let sign = if epsilon(k, mu).is_multiple_of(2) { 1 } else { -1 };
                out.add_term(lambda, c.scale(sign));
            }
        }
        out
    } else {
        apply_q_series(m, p)
    }
}

/// The series form `Σ_i (−1)^i q_{m+i}·(q_i^⊥ P)`, valid for every integer
/// `m`; terms with `m+i < 0` vanish and `q_i^⊥` kills `i > weight(P)`.
pub fn apply_q_series(m: i64, p: &QExpansion) -> QExpansion {
    let Some(w) = p.weight() else {
        return QExpansion::zero();
    };
    let mut out = QExpansion::zero();
    let start = (-m).max(0);
    for i in start..=(w as i64) {
        let skewed = skew_qperp(i, p).expect("i >= 0");
        if skewed.is_zero() {
            continue;
        }
        let term = multiply_qm(m + i, &skewed).expect("m + i >= 0");
        let sign = if i % 2 == 0 { 1 } else { -1 };
        out = out.add(&term.scale(sign));
    }
    out
}

/// The vertex operator `G_m`: `G_m P = Σ_{i≥0} q^i Q_{m+i}(q_i^⊥ P)`.
/// Defined for every integer `m` by the same series.
pub fn apply_g(m: i64, p: &QExpansion) -> QExpansion {
    let Some(w) = p.weight() else {
        return QExpansion::zero();
    };
    let mut out = QExpansion::zero();
    for i in 0..=(w as i64) {
        let skewed = skew_qperp(i, p).expect("i >= 0");
        if skewed.is_zero() {
            continue;
        }
        let term = apply_q(m + i, &skewed);
        out = out.add(&term.scale_poly(&QPolynomial::monomial(1, i as usize)));
    }
    out
}

/// `G_μ[X;q] = G_{μ_1}⋯G_{μ_ℓ}(1)`, evaluated right to left.
pub fn compose_g(mu: &StrictPartition) -> QExpansion {
    let mut acc = QExpansion::one();
    for &m in mu.parts().iter().rev() {
        acc = apply_g(m as i64, &acc);
    }
    acc
}
