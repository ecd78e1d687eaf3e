//! Just enough of the classical Λ story to run the cross-statistic
//! comparisons: Schur expansions, the Jing operator `H_m`, Kostka-Foulkes
//! polynomials by composition and by the Morris recurrence, column-strict
//! tableaux and the charge statistic.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::error::Error;
use crate::foundations::{plain_strips, plain_strips_above, Partition, QPolynomial, StrictPartition};

/// An element of Λ⊗ℤ\[q\] in the Schur basis.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct SchurExpansion {
    terms: BTreeMap<Partition, QPolynomial>,
}

impl SchurExpansion {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::basis(Partition::empty())
    }

    pub fn basis(lambda: Partition) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(lambda, QPolynomial::one());
        SchurExpansion { terms }
    }

    pub fn coeff(&self, lambda: &Partition) -> QPolynomial {
        self.terms.get(lambda).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &QPolynomial)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, lambda: Partition, coeff: QPolynomial) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(lambda) {
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

    pub fn specialize(&self, x: i64) -> Self {
        let mut out = Self::zero();
        for (l, p) in self.terms() {
            out.add_term(l.clone(), QPolynomial::constant(p.eval(x)));
        }
        out
    }
}

impl fmt::Debug for SchurExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (l, c)) in self.terms().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c:?})s{l}")?;
        }
        Ok(())
    }
}

/// Straighten a composite Schur index by the alternating h-determinant
/// relations: `s_{(…,a,b,…)} = −s_{(…,b−1,a+1,…)}`, zero on fixed points
/// and on indices that sort to a negative part.
pub fn schur_straighten(index: &[i64]) -> Option<(Partition, bool)> {
    let mut keyed: Vec<i64> = index
        .iter()
        .enumerate()
        .map(|(k, &a)| a - k as i64 - 1)
        .collect();
    for i in 0..keyed.len() {
        for j in (i + 1)..keyed.len() {
            if keyed[i] == keyed[j] {
                return None;
            }
        }
    }
    // selection sort, counting transpositions for the sign
    let mut negative = false;
    for i in 0..keyed.len() {
        let mut best = i;
        for j in (i + 1)..keyed.len() {
            if keyed[j] > keyed[best] {
                best = j;
            }
        }
        if best != i {
            keyed.swap(i, best);
            negative = !negative;
        }
    }
    let mut parts = Vec::with_capacity(keyed.len());
    for (k, &c) in keyed.iter().enumerate() {
        let part = c + k as i64 + 1;
        if part < 0 {
            return None;
        }
        parts.push(part as u32);
    }
    let partition = Partition::new(parts).expect("sorted keys give weakly decreasing parts");
    Some((partition, negative))
}

/// The Jing operator: `H_m s_μ = Σ_i q^i Σ_{μ/ν ∈ H_i} s_{(m+i, ν)}`, with
/// composite indices straightened.
pub fn apply_hm(m: u32, p: &SchurExpansion) -> SchurExpansion {
    let mut out = SchurExpansion::zero();
    for (mu, coeff) in p.terms() {
        for i in 0..=mu.weight() {
            for nu in plain_strips(mu, i) {
                let mut index: Vec<i64> = vec![(m + i) as i64];
                index.extend(nu.parts().iter().map(|&x| x as i64));
                if let Some((lambda, negative)) = schur_straighten(&index) {
                    let sign = if negative { -1 } else { 1 };
                    out.add_term(lambda, coeff.shift(i as usize).scale(sign));
                }
            }
        }
    }
    out
}

/// `H_μ[X;q] = H_{μ_1}⋯H_{μ_ℓ}(1)`, evaluated right to left.
pub fn hall_littlewood(mu: &Partition) -> SchurExpansion {
    let mut acc = SchurExpansion::one();
    for &m in mu.parts().iter().rev() {
        acc = apply_hm(m, &acc);
    }
    acc
}

/// `K_{λμ}(q)` by `H_m` composition. When μ is strict the Morris
/// recurrence is evaluated independently and the two must agree.
pub fn kostka_foulkes(lambda: &Partition, mu: &Partition) -> Result<QPolynomial, Error> {
    if lambda.weight() != mu.weight() {
        return Err(Error::WeightMismatch(lambda.weight(), mu.weight()));
    }
    let k = hall_littlewood(mu).coeff(lambda);
    if let Ok(strict) = StrictPartition::new(mu.parts().to_vec()) {
        let via_morris = kostka_morris(lambda, &strict)?;
        if via_morris != k {
            return Err(Error::InternalMismatch(format!(
                "K_{lambda}{mu}: composition gave {k}, Morris recurrence gave {via_morris}"
            )));
        }
    }
    Ok(k)
}

/// The Morris recurrence for Kostka-Foulkes polynomials, peeling the
/// largest content part `m`:
/// `K_{α,(m,μ)} = Σ_s (−1)^{s−1} q^{α_s−s+1−m} Σ_{λ/α[s] ∈ H_{α_s−s+1−m}} K_{λμ}`
/// with `α[s] = (α_1+1, …, α_{s−1}+1, α_{s+1}, …)`. Requires strictly
/// decreasing content so that `m > μ_1` holds at every peel.
pub fn kostka_morris(lambda: &Partition, mu: &StrictPartition) -> Result<QPolynomial, Error> {
    if lambda.weight() != mu.weight() {
        return Err(Error::WeightMismatch(lambda.weight(), mu.weight()));
    }
    let content = mu.parts().to_vec();
    let mut memo = HashMap::new();
    Ok(k_morris_rec(lambda, 0, &content, &mut memo))
}

fn k_morris_rec(
    alpha: &Partition,
    idx: usize,
    content: &[u32],
    memo: &mut HashMap<(Vec<u32>, usize), QPolynomial>,
) -> QPolynomial {
    if idx == content.len() {
        return if alpha.is_empty() { QPolynomial::one() } else { QPolynomial::zero() };
    }
    let key = (alpha.parts().to_vec(), idx);
    if let Some(c) = memo.get(&key) {
        return c.clone();
    }
    let m = content[idx] as i64;
    let mut acc = QPolynomial::zero();
    for s in 0..alpha.len() {
        // exponent α_s − s + 1 − m with s 1-based; strictly decreasing in s
        let i = alpha.part(s) as i64 - s as i64 - m;
        if i < 0 {
            break;
        }
        let mut parts: Vec<u32> = Vec::with_capacity(alpha.len() - 1);
        parts.extend(alpha.parts()[..s].iter().map(|&x| x + 1));
        parts.extend_from_slice(&alpha.parts()[s + 1..]);
        let peeled = Partition::new(parts).expect("shifted prefix stays weakly decreasing");
        let mut inner = QPolynomial::zero();
        for lam in plain_strips_above(&peeled, i as u32) {
            inner = &inner + &k_morris_rec(&lam, idx + 1, content, memo);
        }
        let signed = inner.shift(i as usize);
        acc = if s % 2 == 0 { &acc + &signed } else { &acc - &signed };
    }
    memo.insert(key, acc.clone());
    acc
}

/// A column-strict tableau: rows weakly increase, columns strictly
/// increase down the shape (`rows[0]` is the first, longest row).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColumnStrictTableau {
    shape: Partition,
    rows: Vec<Vec<u32>>,
}

impl ColumnStrictTableau {
    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn content(&self) -> Vec<u32> {
        let max = self.rows.iter().flatten().copied().max().unwrap_or(0);
        let mut counts = vec![0u32; max as usize];
        for &v in self.rows.iter().flatten() {
            counts[(v - 1) as usize] += 1;
        }
        counts
    }

    /// Reading word: rows from last to first, each left to right.
    pub fn reading_word(&self) -> Vec<u32> {
        self.rows.iter().rev().flatten().copied().collect()
    }
}

/// All column-strict tableaux of the given shape and content.
pub fn cst_enumerate(
    shape: &Partition,
    content: &Partition,
) -> Result<Vec<ColumnStrictTableau>, Error> {
    if shape.weight() != content.weight() {
        return Err(Error::WeightMismatch(shape.weight(), content.weight()));
    }
    let letters = content.len() as u32;
    let mut remaining: Vec<u32> = content.parts().to_vec();
    let mut rows: Vec<Vec<u32>> =
        (0..shape.len()).map(|r| Vec::with_capacity(shape.part(r) as usize)).collect();
    let mut out = Vec::new();
    fill_cst(shape, letters, 0, 0, &mut remaining, &mut rows, &mut out);
    Ok(out)
}

fn fill_cst(
    shape: &Partition,
    letters: u32,
    r: usize,
    c: usize,
    remaining: &mut Vec<u32>,
    rows: &mut Vec<Vec<u32>>,
    out: &mut Vec<ColumnStrictTableau>,
) {
    if r == shape.len() {
        out.push(ColumnStrictTableau { shape: shape.clone(), rows: rows.clone() });
        return;
    }
    if c == shape.part(r) as usize {
        fill_cst(shape, letters, r + 1, 0, remaining, rows, out);
        return;
    }
    let min_row = if c > 0 { rows[r][c - 1] } else { 1 };
    let min_col = if r > 0 { rows[r - 1][c] + 1 } else { 1 };
    for v in min_row.max(min_col)..=letters {
        if remaining[(v - 1) as usize] == 0 {
            continue;
        }
        remaining[(v - 1) as usize] -= 1;
        rows[r].push(v);
        fill_cst(shape, letters, r, c + 1, remaining, rows, out);
        rows[r].pop();
        remaining[(v - 1) as usize] += 1;
    }
}

/// Charge of a word with partition content (Lascoux–Schützenberger):
/// repeatedly extract a standard subword — rightmost 1, then for each next
/// letter the nearest occurrence to the left, wrapping cyclically — and
/// sum the standard charges.
pub fn charge_word(word: &[u32]) -> u32 {
    let mut w: Vec<u32> = word.to_vec();
    let mut total = 0;
    while !w.is_empty() {
        let max_letter = *w.iter().max().unwrap();
        let mut pos = w
            .iter()
            .rposition(|&v| v == 1)
            .expect("partition content always contains a 1");
        let mut picked = vec![pos];
        for v in 2..=max_letter {
            let left = w[..pos].iter().rposition(|&x| x == v);
            let found = match left {
                Some(p) => p,
                None => w
                    .iter()
                    .rposition(|&x| x == v)
                    .expect("partition content has every letter up to the max"),
            };
            picked.push(found);
            pos = found;
        }
        picked.sort_unstable();
        let subword: Vec<u32> = picked.iter().map(|&p| w[p]).collect();
        total += standard_charge(&subword);
        for &p in picked.iter().rev() {
            w.remove(p);
        }
    }
    total
}

fn standard_charge(word: &[u32]) -> u32 {
    let k = word.len() as u32;
    let mut index_of = vec![0usize; k as usize + 1];
    for (p, &v) in word.iter().enumerate() {
        index_of[v as usize] = p;
    }
    let mut charge = 0;
    let mut current = 0;
    for v in 2..=k {
        if index_of[v as usize] > index_of[(v - 1) as usize] {
            current += 1;
        }
        charge += current;
    }
    charge
}

/// Charge of a column-strict tableau via its reading word. The content
/// must be a partition.
pub fn charge(t: &ColumnStrictTableau) -> u32 {
    charge_word(&t.reading_word())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::foundations::partitions;

    fn pp(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn sp(parts: &[u32]) -> StrictPartition {
        StrictPartition::new(parts.to_vec()).unwrap()
    }

    fn poly(coeffs: &[i64]) -> QPolynomial {
        QPolynomial::from_coeffs(coeffs.to_vec())
    }

    #[test]
    fn straightening_rules() {
        assert_eq!(schur_straighten(&[2, 1]), Some((pp(&[2, 1]), false)));
        assert_eq!(schur_straighten(&[1, 2]), None); // fixed point
        assert_eq!(schur_straighten(&[1, 3]), Some((pp(&[2, 2]), true)));
        assert_eq!(schur_straighten(&[0, 2, 1]), Some((pp(&[1, 1, 1]), true)));
        assert_eq!(schur_straighten(&[3, 0, 0]), Some((pp(&[3]), false)));
        assert_eq!(schur_straighten(&[1, -1]), None); // negative tail
    }

    #[test]
    fn jing_operator_examples() {
        // H_1(s_(1)) = s_(1,1) + q·s_(2)
        let got = apply_hm(1, &SchurExpansion::basis(pp(&[1])));
        let mut want = SchurExpansion::zero();
        want.add_term(pp(&[1, 1]), QPolynomial::one());
        want.add_term(pp(&[2]), QPolynomial::monomial(1, 1));
        assert_eq!(got, want);
        // H_m(1) = s_(m)
        for m in 1..=5 {
            assert_eq!(
                apply_hm(m, &SchurExpansion::one()),
                SchurExpansion::basis(pp(&[m]))
            );
        }
        // at q = 0 the operator prepends: H_m(s_μ)|_{q=0} = s_(m,μ) for m ≥ μ_1
        for mu in [pp(&[2]), pp(&[2, 1]), pp(&[3, 3])] {
            let m = mu.part(0) + 1;
            let got = apply_hm(m, &SchurExpansion::basis(mu.clone())).specialize(0);
            let mut parts = vec![m];
            parts.extend_from_slice(mu.parts());
            assert_eq!(got, SchurExpansion::basis(pp(&parts)));
        }
    }

    #[test]
    fn kostka_examples() {
        assert_eq!(kostka_foulkes(&pp(&[2]), &pp(&[1, 1])).unwrap(), poly(&[0, 1]));
        assert_eq!(kostka_foulkes(&pp(&[2, 1]), &pp(&[1, 1, 1])).unwrap(), poly(&[0, 1, 1]));
        assert_eq!(kostka_foulkes(&pp(&[3]), &pp(&[2, 1])).unwrap(), poly(&[0, 1]));
        assert!(kostka_foulkes(&pp(&[2]), &pp(&[1])).is_err());
        for n in 1..=6u32 {
            for mu in partitions(n) {
                assert_eq!(kostka_foulkes(&mu, &mu).unwrap(), QPolynomial::one());
                let want = QPolynomial::monomial(1, mu.n_stat() as usize);
                assert_eq!(kostka_foulkes(&pp(&[n]), &mu).unwrap(), want, "mu = {mu}");
            }
        }
    }

    #[test]
    fn morris_matches_composition_for_strict_contents() {
        use crate::foundations::strict_partitions;
        for n in 1..=8u32 {
            for mu in strict_partitions(n) {
                let h = hall_littlewood(&mu.to_partition());
                for lam in partitions(n) {
                    let direct = h.coeff(&lam);
                    let rec = kostka_morris(&lam, &mu).unwrap();
                    assert_eq!(direct, rec, "lambda = {lam}, mu = {mu}");
                }
            }
        }
    }

    #[test]
    fn morris_regression_with_repeated_shape_parts() {
        // K_{(3,3),(3,2,1)} = q; the peeled index here needs the row shift
        assert_eq!(kostka_morris(&pp(&[3, 3]), &sp(&[3, 2, 1])).unwrap(), poly(&[0, 1]));
    }

    #[test]
    fn cst_examples() {
        assert_eq!(cst_enumerate(&pp(&[2, 1]), &pp(&[1, 1, 1])).unwrap().len(), 2);
        assert_eq!(cst_enumerate(&pp(&[3]), &pp(&[2, 1])).unwrap().len(), 1);
        for n in 1..=5u32 {
            for lam in partitions(n) {
                let ts = cst_enumerate(&lam, &lam).unwrap();
                assert_eq!(ts.len(), 1);
                for (r, row) in ts[0].rows().iter().enumerate() {
                    assert!(row.iter().all(|&v| v == r as u32 + 1));
                }
            }
        }
        assert!(cst_enumerate(&pp(&[2]), &pp(&[1])).is_err());
    }

    #[test]
    fn kostka_at_one_counts_tableaux() {
        for n in 1..=6u32 {
            for lam in partitions(n) {
                for mu in partitions(n) {
                    let k = kostka_foulkes(&lam, &mu).unwrap();
                    let count = cst_enumerate(&lam, &mu).unwrap().len();
                    assert_eq!(k.eval(1), count as i64, "lambda={lam} mu={mu}");
                }
            }
        }
    }

    #[test]
    fn charge_examples() {
        // the unique tableau of shape = content has charge 0
        for n in 1..=5u32 {
            for lam in partitions(n) {
                let t = &cst_enumerate(&lam, &lam).unwrap()[0];
                assert_eq!(charge(t), 0);
            }
        }
        // shape (3), content (2,1): charge 1
        let t = &cst_enumerate(&pp(&[3]), &pp(&[2, 1])).unwrap()[0];
        assert_eq!(charge(t), 1);
        // shape (2,1), content (1,1,1): charges {1, 2}
        let mut charges: Vec<u32> = cst_enumerate(&pp(&[2, 1]), &pp(&[1, 1, 1]))
            .unwrap()
            .iter()
            .map(charge)
            .collect();
        charges.sort_unstable();
        assert_eq!(charges, vec![1, 2]);
        // reading word sanity
        assert_eq!(charge_word(&[1, 2, 3]), 3);
        assert_eq!(charge_word(&[3, 2, 1]), 0);
    }

    #[test]
    fn charge_generating_identity_small() {
        for n in 1..=6u32 {
            for mu in partitions(n) {
                let h = hall_littlewood(&mu);
                for lam in partitions(n) {
                    let mut want = QPolynomial::zero();
                    for t in cst_enumerate(&lam, &mu).unwrap() {
                        want = &want + &QPolynomial::monomial(1, charge(&t) as usize);
                    }
                    assert_eq!(h.coeff(&lam), want, "lambda={lam} mu={mu}");
                }
            }
        }
    }

    #[test]
    fn kostka_degree_property() {
        use crate::foundations::dominance_leq;
        for n in 1..=7u32 {
            for mu in partitions(n) {
                let h = hall_littlewood(&mu);
                for lam in partitions(n) {
                    if !dominance_leq(&mu, &lam).unwrap() {
                        assert!(h.coeff(&lam).is_zero());
                        continue;
                    }
                    let k = h.coeff(&lam);
                    let want = mu.n_stat() as i64 - lam.n_stat() as i64;
                    assert_eq!(k.degree().map(|d| d as i64), Some(want), "{lam} {mu}");
                }
            }
        }
    }
}
