//! Elements of Γ in the Schur Q-basis.
//!
//! The canonical representation of every element of Γ⊗ℤ\[q\] handled by this
//! crate is a finite sum Σ_λ c_λ(q)·Q_λ over strict partitions λ, with
//! coefficients in [`QPolynomial`]. Multiplication by `q_m` follows the
//! Pieri rule with coefficient `2^{a(λ/μ)−ℓ(λ)+ℓ(μ)}`, its adjoint under
//! the Γ scalar product has coefficient `2^{a(λ/μ)}`, and straightening of
//! an arbitrary integer-indexed word is a fold of vertex operators.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::Error;
use crate::foundations::{strip_components, strips, strips_above, QPolynomial, StrictPartition};
use crate::operators;
use crate::raising::{expand_raising_product, PairSeries};

/// A finite association from strict partitions to polynomials in `q`:
/// an element of Γ⊗ℤ\[q\] in the Q-basis. No zero coefficients are stored;
/// equality is term-set equality.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct QExpansion {
    terms: BTreeMap<StrictPartition, QPolynomial>,
}

impl QExpansion {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The constant 1 = Q_∅.
    pub fn one() -> Self {
        Self::basis(StrictPartition::empty())
    }

    /// The basis element Q_λ.
    pub fn basis(lambda: StrictPartition) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(lambda, QPolynomial::one());
        QExpansion { terms }
    }

    pub fn from_term(lambda: StrictPartition, coeff: QPolynomial) -> Self {
        let mut e = Self::zero();
        e.add_term(lambda, coeff);
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&StrictPartition, &QPolynomial)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of Q_λ (zero if absent).
    pub fn coeff(&self, lambda: &StrictPartition) -> QPolynomial {
        self.terms.get(lambda).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, lambda: StrictPartition, coeff: QPolynomial) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(lambda);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + &coeff;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (l, c) in other.terms() {
            out.add_term(l.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (l, c) in other.terms() {
            out.add_term(l.clone(), -c);
        }
        out
    }

    pub fn scale(&self, c: i64) -> Self {
        let mut out = Self::zero();
        for (l, p) in self.terms() {
            out.add_term(l.clone(), p.scale(c));
        }
        out
    }

    pub fn scale_poly(&self, poly: &QPolynomial) -> Self {
        let mut out = Self::zero();
        for (l, p) in self.terms() {
            out.add_term(l.clone(), p * poly);
        }
        out
    }

    /// Common weight of the index partitions. `None` for the zero expansion;
    /// panics on a heterogeneous expansion (forbidden by construction
    /// everywhere in this crate).
    pub fn weight(&self) -> Option<u32> {
        let mut it = self.terms.keys();
        let w = it.next()?.weight();
        assert!(
            it.all(|l| l.weight() == w),
            "heterogeneous weights in one expansion"
        );
        Some(w)
    }

    /// Substitute an integer for `q` (coefficients become constants).
    pub fn specialize(&self, x: i64) -> Self {
        let mut out = Self::zero();
        for (l, p) in self.terms() {
            out.add_term(l.clone(), QPolynomial::constant(p.eval(x)));
        }
        out
    }
}

impl fmt::Debug for QExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (l, c)) in self.terms().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c:?})Q{l}")?;
        }
        Ok(())
    }
}

/// Pieri rule: `q_m · P`, coefficient of Q_λ in `q_m·Q_μ` equal to
/// `2^{a(λ/μ)−ℓ(λ)+ℓ(μ)}` over strips λ/μ ∈ H_m.
pub fn multiply_qm(m: i64, p: &QExpansion) -> Result<QExpansion, Error> {
    if m < 0 {
        return Err(Error::NegativeIndex(m));
    }
    let m = m as u32;
    let mut out = QExpansion::zero();
    for (mu, c) in p.terms() {
        for lambda in strips_above(mu, m) {
            let a = strip_components(&lambda, mu).expect("enumerated strips are valid");
            let exp = a as i64 - lambda.len() as i64 + mu.len() as i64;
            debug_assert!(exp >= 0);
            out.add_term(lambda, c.scale(1i64 << exp));
        }
    }
    Ok(out)
}

/// The adjoint of [`multiply_qm`] under the Γ scalar product:
/// `q_i^⊥ Q_λ = Σ 2^{a(λ/μ)} Q_μ` over strips λ/μ ∈ H_i.
pub fn skew_qperp(i: i64, p: &QExpansion) -> Result<QExpansion, Error> {
    if i < 0 {
        return Err(Error::NegativeIndex(i));
    }
    let i = i as u32;
    let mut out = QExpansion::zero();
    for (lambda, c) in p.terms() {
        for mu in strips(lambda, i) {
            let a = strip_components(lambda, &mu).expect("enumerated strips are valid");
            out.add_term(mu, c.scale(1i64 << a));
        }
    }
    Ok(out)
}

/// Bilinear extension of ⟨Q_λ, Q_μ⟩ = 2^{ℓ(λ)} δ_{λμ}.
pub fn scalar(p: &QExpansion, r: &QExpansion) -> QPolynomial {
    let mut out = QPolynomial::zero();
    for (l, a) in p.terms() {
        let b = r.coeff(l);
        if !b.is_zero() {
            out = &out + &(a * &b).scale(1i64 << l.len());
        }
    }
    out
}

/// A Q-function index word: any finite list of integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QWord(pub Vec<i64>);

/// Straighten `Q_{w_1}Q_{w_2}⋯Q_{w_k}(1)` into the Q-basis: the operators
/// apply right to left. The result is always `±2^r·Q_λ` or zero.
pub fn straighten(word: &QWord) -> QExpansion {
    let mut acc = QExpansion::one();
    for &m in word.0.iter().rev() {
        if acc.is_zero() {
            return acc;
        }
        acc = operators::apply_q(m, &acc);
    }
    acc
}

/// Q_λ written in the `q_γ` monomial basis: the raising-operator expansion
/// `Q_λ = Π_{i<j} (1−R_{ij})/(1+R_{ij}) q_λ`. Returns pairs (γ, c) with
/// integer c; folding `multiply_qm` over each γ and summing recovers Q_λ.
pub fn q_monomial_expansion(lambda: &StrictPartition) -> Vec<(Vec<u32>, i64)> {
    let series = expand_raising_product(lambda.parts(), |_, _| PairSeries::Plain);
    series
        .into_iter()
        .map(|(gamma, poly)| {
            debug_assert!(poly.degree().is_none_or(|d| d == 0));
            (gamma, poly.coeff(0))
        })
        .filter(|&(_, c)| c != 0)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::foundations::strict_partitions;

    fn sp(parts: &[u32]) -> StrictPartition {
        StrictPartition::new(parts.to_vec()).unwrap()
    }

    fn basis(parts: &[u32]) -> QExpansion {
        QExpansion::basis(sp(parts))
    }

    fn constant(c: i64) -> QPolynomial {
        QPolynomial::constant(c)
    }

    #[test]
    fn pieri_examples() {
        // q_m · Q_∅ = Q_(m)
        for m in 1..=6 {
            let got = multiply_qm(m, &QExpansion::one()).unwrap();
            assert_eq!(got, QExpansion::basis(sp(&[m as u32])));
        }
        // q_1·Q_(2) = Q_(2,1) + 2Q_(3); oracle: Q_(2,1) = q_2q_1 − 2q_3
        let got = multiply_qm(1, &basis(&[2])).unwrap();
        let mut want = QExpansion::from_term(sp(&[2, 1]), constant(1));
        want.add_term(sp(&[3]), constant(2));
        assert_eq!(got, want);
        // q_0 · P = P
        let p = got;
        assert_eq!(multiply_qm(0, &p).unwrap(), p);
        assert!(multiply_qm(-1, &p).is_err());
    }

    #[test]
    fn pieri_oracle_from_raising_expansion() {
        // Q_(2,1) = q_2q_1 − 2q_3, so q_1·Q_(2) computed through the
        // monomial route must match the direct Pieri product
        let mono = q_monomial_expansion(&sp(&[2, 1]));
        assert_eq!(mono, vec![(vec![2, 1], 1), (vec![3, 0], -2)]);
        let mut via_monomials = QExpansion::zero();
        for (gamma, c) in mono {
            let mut acc = QExpansion::one();
            for &g in gamma.iter().rev() {
                acc = multiply_qm(g as i64, &acc).unwrap();
            }
            via_monomials = via_monomials.add(&acc.scale(c));
        }
        assert_eq!(via_monomials, QExpansion::basis(sp(&[2, 1])));
    }

    #[test]
    fn skew_examples() {
        // q_1^⊥ Q_(1) = 2·Q_∅  (adjointness: ⟨q_1·1, Q_1⟩ = ⟨Q_1,Q_1⟩ = 2)
        assert_eq!(
            skew_qperp(1, &basis(&[1])).unwrap(),
            QExpansion::from_term(StrictPartition::empty(), constant(2))
        );
        // q_i^⊥ P = 0 for i > weight(P)
        assert!(skew_qperp(4, &basis(&[2, 1])).unwrap().is_zero());
        // q_1^⊥ Q_(2,1) = 2·Q_(2)
        assert_eq!(
            skew_qperp(1, &basis(&[2, 1])).unwrap(),
            QExpansion::from_term(sp(&[2]), constant(2))
        );
        assert!(skew_qperp(-2, &basis(&[1])).is_err());
    }

    #[test]
    fn scalar_examples() {
        assert_eq!(scalar(&basis(&[2, 1]), &basis(&[2, 1])), constant(4));
        assert_eq!(scalar(&basis(&[3]), &basis(&[2, 1])), QPolynomial::zero());
        let p = multiply_qm(1, &basis(&[2])).unwrap();
        assert_eq!(scalar(&p, &basis(&[3])), constant(4));
    }

    #[test]
    fn adjointness_exhaustive() {
        // ⟨q_m·P, R⟩ = ⟨P, q_m^⊥·R⟩ for all basis pairs of weight ≤ 8
        for m in 0..=8i64 {
            for w in 0..=(8 - m as u32).min(8) {
                let target = w + m as u32;
                if target > 8 {
                    continue;
                }
                for mu in strict_partitions(w) {
                    for lam in strict_partitions(target) {
                        let p = QExpansion::basis(mu.clone());
                        let r = QExpansion::basis(lam.clone());
                        let lhs = scalar(&multiply_qm(m, &p).unwrap(), &r);
                        let rhs = scalar(&p, &skew_qperp(m, &r).unwrap());
                        assert_eq!(lhs, rhs, "m={m} mu={mu} lam={lam}");
                    }
                }
            }
        }
    }

    #[test]
    fn straighten_examples() {
        // (1,2) → −Q_(2,1)
        assert_eq!(
            straighten(&QWord(vec![1, 2])),
            QExpansion::from_term(sp(&[2, 1]), constant(-1))
        );
        // (2,2) → 0
        assert!(straighten(&QWord(vec![2, 2])).is_zero());
        // (−1,1) → −2·Q_∅
        assert_eq!(
            straighten(&QWord(vec![-1, 1])),
            QExpansion::from_term(StrictPartition::empty(), constant(-2))
        );
        // (3,2,1) → Q_(3,2,1)
        assert_eq!(straighten(&QWord(vec![3, 2, 1])), basis(&[3, 2, 1]));
        // a single ±2^r basis element or zero, always
        for w in [
            vec![0, 1],
            vec![2, -1, 3],
            vec![1, -1, 2],
            vec![4, 0, -2, 2],
            vec![-2, 2, 1],
        ] {
            let s = straighten(&QWord(w.clone()));
            assert!(s.len() <= 1, "straighten({w:?}) = {s:?}");
            if let Some((_, c)) = s.terms().next() {
                let c0 = c.coeff(0).unsigned_abs();
                assert_eq!(c.degree(), Some(0));
                assert!(c0.is_power_of_two(), "straighten({w:?}) gave coefficient {c}");
            };
        }
    }

    #[test]
    fn pieri_products_commute() {
        let gammas: [&[i64]; 3] = [&[2, 1, 3], &[1, 1, 2], &[3, 2, 2]];
        for gamma in gammas {
            let mut fwd = QExpansion::one();
            for &g in gamma.iter() {
                fwd = multiply_qm(g, &fwd).unwrap();
            }
            let mut rev = QExpansion::one();
            for &g in gamma.iter().rev() {
                rev = multiply_qm(g, &rev).unwrap();
            }
            assert_eq!(fwd, rev);
        }
    }

    mod straightening_relations {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            // the three relations as identities of operators on words
            #[test]
            fn anticommute(m in -5i64..=5, n in -5i64..=5,
                           rest in proptest::collection::vec(-5i64..=5, 0..4)) {
                prop_assume!(m != -n);
                let mut w1 = vec![m, n];
                w1.extend_from_slice(&rest);
                let mut w2 = vec![n, m];
                w2.extend_from_slice(&rest);
                let lhs = straighten(&QWord(w1));
                let rhs = straighten(&QWord(w2)).scale(-1);
                prop_assert_eq!(lhs, rhs);
            }

            #[test]
            fn opposite_pair(m in -5i64..=5,
                             rest in proptest::collection::vec(-5i64..=5, 0..4)) {
                prop_assume!(m != 0);
                let mut w1 = vec![m, -m];
                w1.extend_from_slice(&rest);
                let mut w2 = vec![-m, m];
                w2.extend_from_slice(&rest);
                let sign = if m % 2 == 0 { 2 } else { -2 };
                let lhs = straighten(&QWord(w1));
                let rhs = straighten(&QWord(rest)).scale(sign).sub(&straighten(&QWord(w2)));
                prop_assert_eq!(lhs, rhs);
            }

            #[test]
            fn squares_vanish(m in -5i64..=5,
                              rest in proptest::collection::vec(-5i64..=5, 0..3)) {
                prop_assume!(m != 0);
                let mut w = vec![m, m];
                w.extend_from_slice(&rest);
                prop_assert!(straighten(&QWord(w)).is_zero());
            }
        }
    }
}
