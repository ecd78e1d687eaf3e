//! The Q-Kostka polynomials `L_{λμ}(q)` by four independent algorithms,
//! plus every stated property, corollary and conjecture as an executable
//! check.
//!
//! - vertex: coefficient extraction from `G_μ = G_{μ_1}⋯G_{μ_ℓ}(1)`;
//! - morris: the alternating recurrence peeling the largest content part;
//! - series: pairwise generating-series convolution followed by Pieri
//!   expansion of the resulting `q_γ` monomials;
//! - kostant: `L_{λμ}(q) = Σ_α ±2^r R_q(α)` over straightenings of
//!   `Q_{μ+α}`, with `R_q` the q-analog of the Kostant partition count.

use std::collections::{BTreeMap, HashMap};

use crate::error::Error;
use crate::foundations::{
    dominance_leq, strict_partitions, strip_components, strips_above, LaurentPolynomial,
    QPolynomial, StrictPartition,
};
use crate::operators::compose_g;
use crate::qspace::{multiply_qm, straighten, QExpansion, QWord};
use crate::raising::{expand_raising_product, PairSeries};

/// Which algorithm produced a table.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Algorithm {
    Vertex,
    Morris,
    Series,
    Kostant,
}

/// The complete table of `L_{λμ}(q)` over strict λ of weight |μ|, for one
/// content μ. Rows absent from the map are zero; `L_{λμ} = 0` exactly when
/// λ does not dominate μ.
#[derive(Clone, Debug)]
pub struct LTable {
    mu: StrictPartition,
    rows: BTreeMap<StrictPartition, QPolynomial>,
    algorithm: Algorithm,
}

impl LTable {
    pub fn mu(&self) -> &StrictPartition {
        &self.mu
    }

    pub fn algorithm(&self) -> Algorithm {
        self.algorithm
    }

    /// `L_{λμ}(q)`; the zero polynomial when λ is not stored.
    pub fn get(&self, lambda: &StrictPartition) -> QPolynomial {
        self.rows.get(lambda).cloned().unwrap_or_default()
    }

    pub fn rows(&self) -> impl Iterator<Item = (&StrictPartition, &QPolynomial)> {
        self.rows.iter()
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Entry-for-entry equality, ignoring the algorithm tag.
    pub fn entries_eq(&self, other: &LTable) -> bool {
        self.mu == other.mu && self.rows == other.rows
    }

    fn from_expansion(mu: &StrictPartition, e: &QExpansion, algorithm: Algorithm) -> LTable {
        let mut rows = BTreeMap::new();
        for (l, c) in e.terms() {
            rows.insert(l.clone(), c.clone());
        }
        LTable { mu: mu.clone(), rows, algorithm }
    }
}

/// `L_{λμ}(q)` as coefficients of `compose_g(μ)`.
pub fn l_table_vertex(mu: &StrictPartition) -> LTable {
    LTable::from_expansion(mu, &compose_g(mu), Algorithm::Vertex)
}

/// The Morris-like recurrence: peel the largest content part `n`,
/// `L_{α,(n,μ)} = Σ_s (−1)^{s−1} q^{α_s−n} Σ_{λ/α^{(s)}∈H_{α_s−n}}
/// 2^{a(λ/α^{(s)})} L_{λμ}`, base case a Kronecker delta.
pub fn l_table_morris(mu: &StrictPartition) -> LTable {
    let content = mu.parts().to_vec();
    let mut memo: HashMap<(Vec<u32>, usize), QPolynomial> = HashMap::new();
    let mut rows = BTreeMap::new();
    for alpha in strict_partitions(mu.weight()) {
        let l = morris_rec(&alpha, 0, &content, &mut memo);
        if !l.is_zero() {
            rows.insert(alpha, l);
        }
    }
    LTable { mu: mu.clone(), rows, algorithm: Algorithm::Morris }
}

fn morris_rec(
    alpha: &StrictPartition,
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
    let n = content[idx];
    let mut acc = QPolynomial::zero();
    for s in 0..alpha.len() {
        let a_s = alpha.part(s);
        if a_s < n {
            break;
        }
        let removed = alpha.remove_index(s);
        let mut inner = QPolynomial::zero();
        for lam in strips_above(&removed, a_s - n) {
            let a = strip_components(&lam, &removed).expect("enumerated strips are valid");
            let sub = morris_rec(&lam, idx + 1, content, memo);
            inner = &inner + &sub.scale(1i64 << a);
        }
        let signed = inner.shift((a_s - n) as usize);
        acc = if s % 2 == 0 { &acc + &signed } else { &acc - &signed };
    }
    memo.insert(key, acc.clone());
    acc
}

/// `q_γ` expanded in the Q-basis by iterated Pieri multiplication.
pub fn pieri_monomial(gamma: &[u32]) -> QExpansion {
    let mut acc = QExpansion::one();
    for &g in gamma.iter().rev() {
        if g > 0 {
            acc = multiply_qm(g as i64, &acc).expect("nonnegative index");
        }
    }
    acc
}

/// One-shot generating-series route: convolve the per-pair series
/// (1−t)(1+qt)/((1+t)(1−qt)) over all pairs, then expand each `q_γ`.
pub fn l_table_series(mu: &StrictPartition) -> LTable {
    let terms = expand_raising_product(mu.parts(), |_, _| PairSeries::Full);
    let mut acc = QExpansion::zero();
    for (gamma, c) in terms {
        acc = acc.add(&pieri_monomial(&gamma).scale_poly(&c));
    }
    LTable::from_expansion(mu, &acc, Algorithm::Series)
}

/// A vector in the root lattice of A_{n−1}: integer entries summing to 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootVector {
    entries: Vec<i64>,
}

impl RootVector {
    pub fn new(entries: Vec<i64>) -> Result<Self, Error> {
        if entries.iter().sum::<i64>() != 0 {
            return Err(Error::NotARootVector(entries));
        }
        Ok(RootVector { entries })
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }
}

/// `R_q(α) = Σ_{t,k} a_{t,k} 2^t q^k` where `a_{t,k}` counts the ways to
/// write α as a sum of `k` positive roots `e_i − e_j` (i < j), `t` of them
/// distinct. Zero when α is not a nonnegative sum of positive roots.
pub fn kostant_r(alpha: &RootVector) -> QPolynomial {
    let n = alpha.entries.len();
    let pairs: Vec<(usize, usize)> =
        (0..n).flat_map(|i| ((i + 1)..n).map(move |j| (i, j))).collect();
    kostant_rec(&mut alpha.entries.clone(), &pairs, 0)
}

fn kostant_rec(residual: &mut Vec<i64>, pairs: &[(usize, usize)], pi: usize) -> QPolynomial {
    // a vector expressible by positive roots has all prefix sums ≥ 0
    let mut prefix = 0i64;
    for &x in residual.iter() {
        prefix += x;
        if prefix < 0 {
            return QPolynomial::zero();
        }
    }
    if pi == pairs.len() {
        return if residual.iter().all(|&x| x == 0) {
            QPolynomial::one()
        } else {
            QPolynomial::zero()
        };
    }
    let (i, j) = pairs[pi];
    // using the root e_i − e_j k times lowers prefix sums over [i, j)
    let mut cap = i64::MAX;
    let mut prefix = 0i64;
    for (r, &x) in residual.iter().enumerate() {
        prefix += x;
        if r >= i && r < j {
            cap = cap.min(prefix);
        }
    }
    let mut acc = QPolynomial::zero();
    for k in 0..=cap.max(0) {
        if k > 0 {
            residual[i] -= 1;
            residual[j] += 1;
        }
        let sub = kostant_rec(residual, pairs, pi + 1);
        if !sub.is_zero() {
            let weighted = if k == 0 { sub } else { sub.shift(k as usize).scale(2) };
            acc = &acc + &weighted;
        }
    }
    residual[i] += cap.max(0);
    residual[j] -= cap.max(0);
    acc
}

/// Kostant-straightening route: `L_{λμ}(q) = Σ_α ±2^r R_q(α)` over the α
/// with `Q_{μ+α} = ±2^r Q_λ`. Entries of `μ+α` are enumerated inside the
/// window `[−|μ|, 2|μ|]`; a stability check doubles the window and
/// panics if the result changes.
pub fn l_table_kostant(mu: &StrictPartition) -> LTable {
    let w = mu.weight() as i64;
    let rows = kostant_rows(mu, -w, 2 * w);
    let wide = kostant_rows(mu, -2 * w, 4 * w);
    assert!(
        rows == wide,
        "Kostant truncation unstable for {mu}: doubling the window changed the table"
    );
    LTable { mu: mu.clone(), rows, algorithm: Algorithm::Kostant }
}

fn kostant_rows(
    mu: &StrictPartition,
    lo: i64,
    hi: i64,
) -> BTreeMap<StrictPartition, QPolynomial> {
    let n = mu.len();
    let mut rows: BTreeMap<StrictPartition, QPolynomial> = BTreeMap::new();
    let mut word = Vec::with_capacity(n);
    enumerate_words(mu, 0, lo, hi, 0, &mut word, &mut rows);
    rows.retain(|_, c| !c.is_zero());
    rows
}

fn enumerate_words(
    mu: &StrictPartition,
    pos: usize,
    lo: i64,
    hi: i64,
    alpha_prefix: i64,
    word: &mut Vec<i64>,
    rows: &mut BTreeMap<StrictPartition, QPolynomial>,
) {
    let n = mu.len();
    if pos == n {
        if alpha_prefix != 0 {
            return;
        }
        let alpha: Vec<i64> =
            word.iter().enumerate().map(|(t, &x)| x - mu.part(t) as i64).collect();
        let r = kostant_r(&RootVector::new(alpha).expect("the total is zero"));
        if r.is_zero() {
            return;
        }
        let s = straighten(&QWord(word.clone()));
        debug_assert!(s.len() <= 1, "straightening is ±2^r on a single basis element");
        for (lam, c) in s.terms() {
            let entry = rows.entry(lam.clone()).or_default();
            *entry = &*entry + &(&r * c);
        }
        return;
    }
    for x in lo..=hi {
        let a = x - mu.part(pos) as i64;
        // a contributing α keeps every prefix sum nonnegative
        let p = alpha_prefix + a;
        if p < 0 {
            continue;
        }
        word.push(x);
        enumerate_words(mu, pos + 1, lo, hi, p, word, rows);
        word.pop();
    }
}

/// The `L′` transform: `L′_{λμ}(q) = q^{n(μ)−n(λ)}·L_{λμ}(1/q)`.
pub fn l_prime(l: &QPolynomial, n_mu: u64, n_lambda: u64) -> LaurentPolynomial {
    l.reverse_with_degree(n_mu as i64 - n_lambda as i64)
}

/// Findings from scanning one content μ against the stated theorems and
/// conjectures. Violated conjectures are findings to surface, not errors.
#[derive(Clone, Debug, Default)]
pub struct PropertyReport {
    /// λ whose degree differs from n(μ) − n(λ).
    pub degree_failures: Vec<(StrictPartition, QPolynomial)>,
    /// λ where 2^{ℓ(μ)−ℓ(λ)} does not divide L_{λμ}.
    pub divisibility_failures: Vec<(StrictPartition, QPolynomial)>,
    /// λ with a negative coefficient (positivity conjecture).
    pub negativity_findings: Vec<(StrictPartition, QPolynomial)>,
    /// (ν, λ) with μ ≤ ν and L′_{λμ} ≥ 2^{ℓ(ν)−ℓ(μ)}L′_{λν} violated.
    pub monotonicity_violations: Vec<(StrictPartition, StrictPartition)>,
    pub monotonicity_pairs_checked: usize,
    /// (λ, r) with L_{λ+(r),μ+(r)} − L_{λμ} not coefficientwise ≥ 0.
    pub growth_violations: Vec<(StrictPartition, u32)>,
    pub growth_pairs_checked: usize,
}

impl PropertyReport {
    /// Proved statements (degree, divisibility) — must always hold.
    pub fn theorems_hold(&self) -> bool {
        self.degree_failures.is_empty() && self.divisibility_failures.is_empty()
    }

    /// Conjectured statements — expected clean at desk scale.
    pub fn conjectures_clean(&self) -> bool {
        self.negativity_findings.is_empty()
            && self.monotonicity_violations.is_empty()
            && self.growth_violations.is_empty()
    }
}

/// Scan the table of μ: degree and divisibility per row, positivity,
/// L′-monotonicity against every ν ≥ μ, and the growth conjecture for a
/// caller-supplied inserted part `r`.
pub fn check_properties(mu: &StrictPartition, growth_r: Option<u32>) -> PropertyReport {
    let mut report = PropertyReport::default();
    let table = l_table_vertex(mu);

    for (lam, l) in table.rows() {
        let expected = mu.n_stat() as i64 - lam.n_stat() as i64;
        if l.degree().is_none_or(|d| d as i64 != expected) {
            report.degree_failures.push((lam.clone(), l.clone()));
        }
        let e = mu.len() as i64 - lam.len() as i64;
        if e < 0 || l.div_exact_pow2(e as u32).is_none() {
            report.divisibility_failures.push((lam.clone(), l.clone()));
        }
        if !l.is_nonnegative() {
            report.negativity_findings.push((lam.clone(), l.clone()));
        }
    }

    let mu_plain = mu.to_partition();
    for nu in strict_partitions(mu.weight()) {
        if nu == *mu || !dominance_leq(&mu_plain, &nu.to_partition()).unwrap() {
            continue;
        }
        let table_nu = l_table_vertex(&nu);
        // ℓ(ν) ≤ ℓ(μ) here, so compare 2^{ℓ(μ)−ℓ(ν)}·L′_{λμ} ≥ L′_{λν}
        let e = (mu.len() - nu.len()) as u32;
        for lam in strict_partitions(mu.weight()) {
            let lp_mu = l_prime(&table.get(&lam), mu.n_stat(), lam.n_stat());
            let lp_nu = l_prime(&table_nu.get(&lam), nu.n_stat(), lam.n_stat());
            report.monotonicity_pairs_checked += 1;
            if !lp_mu.scale(1i64 << e).sub(&lp_nu).is_nonnegative() {
                report.monotonicity_violations.push((nu.clone(), lam.clone()));
            }
        }
    }

    if let Some(r) = growth_r {
        if let Some(mu_r) = mu.insert_part(r) {
            let table_r = l_table_vertex(&mu_r);
            for lam in strict_partitions(mu.weight()) {
                if lam.contains_part(r) {
                    continue;
                }
                let lam_r = lam.insert_part(r).expect("r is not a part of λ");
                report.growth_pairs_checked += 1;
                let diff = &table_r.get(&lam_r) - &table.get(&lam);
                if !diff.is_nonnegative() {
                    report.growth_violations.push((lam.clone(), r));
                }
            }
        }
    }

    report
}
