//! Parabolic Q-Hall-Littlewood functions `G_{μ*}[X;q]` indexed by a
//! sequence of strict partitions, and their coefficients `L_{λ;μ*}(q)`.
//!
//! The blocks determine `Roots_η`, the set of index pairs crossing a block
//! boundary; those pairs carry the `q`-deformed series on top of the plain
//! Schur-Q factor, and a one-shot generating-function extraction at
//! `z^{bar μ*}` produces the expansion.

use std::collections::BTreeSet;

use crate::error::Error;
use crate::foundations::StrictPartition;
use crate::qkostka::pieri_monomial;
use crate::qspace::QExpansion;
use crate::raising::{expand_raising_product, PairSeries};
use crate::QPolynomial;

/// An ordered sequence of nonempty strict partitions μ* = (μ⁽¹⁾,…,μ⁽ᵏ⁾).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionSequence {
    blocks: Vec<StrictPartition>,
}

impl PartitionSequence {
    pub fn new(blocks: Vec<StrictPartition>) -> Result<Self, Error> {
        if blocks.is_empty() || blocks.iter().any(|b| b.is_empty()) {
            return Err(Error::EmptyBlock);
        }
        Ok(PartitionSequence { blocks })
    }

    pub fn blocks(&self) -> &[StrictPartition] {
        &self.blocks
    }

    /// η = the list of block lengths.
    pub fn eta(&self) -> Vec<u32> {
        self.blocks.iter().map(|b| b.len() as u32).collect()
    }

    /// bar μ* = the concatenation of all blocks.
    pub fn concatenation(&self) -> Vec<u32> {
        self.blocks.iter().flat_map(|b| b.parts().iter().copied()).collect()
    }

    pub fn weight(&self) -> u32 {
        self.blocks.iter().map(|b| b.weight()).sum()
    }
}

/// `Roots_η = {(i,j) : 1 ≤ i ≤ η_1 + ⋯ + η_r < j ≤ n for some r}`: the
/// pairs whose positions lie in different blocks (1-based).
pub fn roots_eta(eta: &[u32]) -> BTreeSet<(usize, usize)> {
    let n: u32 = eta.iter().sum();
    let mut boundaries = Vec::new();
    let mut acc = 0;
    for &e in eta {
        acc += e;
        boundaries.push(acc);
    }
    let mut out = BTreeSet::new();
    for &b in &boundaries {
        for i in 1..=(b as usize) {
            for j in (b as usize + 1)..=(n as usize) {
                out.insert((i, j));
            }
        }
    }
    out
}

fn expansion_for(concat: &[u32], eta: &[u32]) -> QExpansion {
    let roots = roots_eta(eta);
    let terms = expand_raising_product(concat, |i, j| {
        // the engine is 0-based, Roots_η is 1-based
        if roots.contains(&(i + 1, j + 1)) {
            PairSeries::Full
        } else {
            PairSeries::Plain
        }
    });
    let mut acc = QExpansion::zero();
    for (gamma, c) in terms {
        acc = acc.add(&pieri_monomial(&gamma).scale_poly(&c));
    }
    acc
}

/// `G_{μ*}[X;q] = Σ_λ L_{λ;μ*}(q) Q_λ`.
pub fn parabolic_g(mu_star: &PartitionSequence) -> QExpansion {
    expansion_for(&mu_star.concatenation(), &mu_star.eta())
}

/// Relaxed entry point accepting arbitrary positive blocks; exists to
/// witness that a block with two equal parts gives the zero function.
pub fn parabolic_g_relaxed(blocks: &[Vec<u32>]) -> Result<QExpansion, Error> {
    if blocks.is_empty() || blocks.iter().any(|b| b.is_empty()) {
        return Err(Error::EmptyBlock);
    }
    if blocks.iter().flatten().any(|&p| p == 0) {
        return Err(Error::EmptyBlock);
    }
    let concat: Vec<u32> = blocks.iter().flatten().copied().collect();
    let eta: Vec<u32> = blocks.iter().map(|b| b.len() as u32).collect();
    Ok(expansion_for(&concat, &eta))
}

/// Coefficient of `Q_λ` in `G_{μ*}[X;q]`.
pub fn l_parabolic(
    lambda: &StrictPartition,
    mu_star: &PartitionSequence,
) -> Result<QPolynomial, Error> {
    if lambda.weight() != mu_star.weight() {
        return Err(Error::WeightMismatch(lambda.weight(), mu_star.weight()));
    }
    Ok(parabolic_g(mu_star).coeff(lambda))
}

/// Positivity scan for the generalized coefficients: when `bar μ*` is a
/// partition, report every `L_{λ;μ*}(q)` with a negative coefficient
/// (findings, not errors). `None` when the concatenation is not a
/// partition, where the conjecture makes no claim.
///
/// With a strictly decreasing concatenation the scan comes back clean at
/// desk scale; merely weakly decreasing concatenations do produce
/// findings, the smallest being `L_{(2,1);((1),(1),(1))} = 4q²−2q`.
pub fn positivity_findings(
    mu_star: &PartitionSequence,
) -> Option<Vec<(StrictPartition, QPolynomial)>> {
    use crate::foundations::Partition;
    Partition::new(mu_star.concatenation()).ok()?;
    let g = parabolic_g(mu_star);
    Some(
        g.terms()
            .filter(|(_, c)| !c.is_nonnegative())
            .map(|(l, c)| (l.clone(), c.clone()))
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::operators::compose_g;
    use crate::qspace::{multiply_qm, q_monomial_expansion, straighten, QWord};

    fn sp(parts: &[u32]) -> StrictPartition {
        StrictPartition::new(parts.to_vec()).unwrap()
    }

    fn seq(blocks: &[&[u32]]) -> PartitionSequence {
        PartitionSequence::new(blocks.iter().map(|b| sp(b)).collect()).unwrap()
    }

    #[test]
    fn roots_examples() {
        assert_eq!(
            roots_eta(&[1, 1, 1]),
            BTreeSet::from([(1, 2), (1, 3), (2, 3)])
        );
        assert_eq!(roots_eta(&[3]), BTreeSet::new());
        assert_eq!(roots_eta(&[2, 1]), BTreeSet::from([(1, 3), (2, 3)]));
    }

    #[test]
    fn singleton_blocks_reproduce_compose_g() {
        for mu in [sp(&[3, 2, 1]), sp(&[4, 2]), sp(&[5]), sp(&[4, 3, 1])] {
            let blocks: Vec<StrictPartition> =
                mu.parts().iter().map(|&p| sp(&[p])).collect();
            let ps = PartitionSequence::new(blocks).unwrap();
            assert_eq!(parabolic_g(&ps), compose_g(&mu), "mu = {mu}");
        }
    }

    #[test]
    fn equal_parts_block_vanishes() {
        assert!(parabolic_g_relaxed(&[vec![2, 2]]).unwrap().is_zero());
        assert!(parabolic_g_relaxed(&[vec![3], vec![2, 2]]).unwrap().is_zero());
        assert!(parabolic_g_relaxed(&[vec![1, 1], vec![2]]).unwrap().is_zero());
    }

    /// The product Q_{μ⁽¹⁾}⋯Q_{μ⁽ᵏ⁾} computed through q-monomial
    /// expansions and iterated Pieri products.
    fn block_product(blocks: &[StrictPartition]) -> QExpansion {
        let mut acc = QExpansion::one();
        for block in blocks {
            let mut next = QExpansion::zero();
            for (gamma, c) in q_monomial_expansion(block) {
                let mut piece = acc.clone();
                for &g in gamma.iter().rev() {
                    if g > 0 {
                        piece = multiply_qm(g as i64, &piece).unwrap();
                    }
                }
                next = next.add(&piece.scale(c));
            }
            acc = next;
        }
        acc
    }

    #[test]
    fn q_one_is_the_block_product() {
        for ps in [
            seq(&[&[2, 1], &[1]]),
            seq(&[&[2], &[2]]),
            seq(&[&[3, 1], &[2, 1]]),
            seq(&[&[2, 1], &[2, 1]]),
        ] {
            let got = parabolic_g(&ps).specialize(1);
            let want = block_product(ps.blocks());
            assert_eq!(got, want, "mu* = {ps:?}");
        }
    }

    #[test]
    fn q_zero_is_straightening() {
        for ps in [
            seq(&[&[2, 1], &[1]]),
            seq(&[&[2], &[2]]),
            seq(&[&[1], &[2]]),
            seq(&[&[3, 1], &[2, 1]]),
        ] {
            let got = parabolic_g(&ps).specialize(0);
            let word: Vec<i64> = ps.concatenation().iter().map(|&x| x as i64).collect();
            let want = straighten(&QWord(word));
            assert_eq!(got, want, "mu* = {ps:?}");
        }
    }

    #[test]
    fn unitriangular_when_concatenation_is_strict() {
        use crate::foundations::dominance_leq;
        let ps = seq(&[&[4, 2], &[1]]);
        let bar = sp(&[4, 2, 1]);
        let g = parabolic_g(&ps);
        assert_eq!(g.coeff(&bar), QPolynomial::one());
        for (lam, _) in g.terms() {
            assert!(dominance_leq(&bar.to_partition(), &lam.to_partition()).unwrap());
        }
    }

    #[test]
    fn single_block_is_a_q_function() {
        let ps = seq(&[&[4, 2]]);
        assert_eq!(parabolic_g(&ps), QExpansion::basis(sp(&[4, 2])));
        assert_eq!(
            l_parabolic(&sp(&[4, 2]), &ps).unwrap(),
            QPolynomial::one()
        );
        assert_eq!(l_parabolic(&sp(&[5, 1]), &ps).unwrap(), QPolynomial::zero());
        assert!(l_parabolic(&sp(&[3, 1]), &ps).is_err());
    }
}
