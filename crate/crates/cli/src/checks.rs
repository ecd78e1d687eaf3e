//! The `check` suites: proved properties count as violations when broken,
//! conjecture findings are reported separately.

use rayon::prelude::*;

use qhl::classical::{charge, cst_enumerate, hall_littlewood, kostka_morris};
use qhl::foundations::{partitions, strict_partitions, Partition, StrictPartition};
use qhl::operators::apply_g;
use qhl::parabolic::{parabolic_g, positivity_findings, PartitionSequence};
use qhl::qkostka::l_table_vertex;
use qhl::qspace::{multiply_qm, q_monomial_expansion, straighten, QExpansion, QWord};
use qhl::shifted_tableaux::enumerate;
use qhl::QPolynomial;

use crate::Suite;

#[derive(Default)]
pub struct Outcome {
    /// Broken proved properties (must be zero).
    pub violations: usize,
    /// Conjecture findings (surfaced; nonzero exit only under --strict).
    pub findings: usize,
    pub lines: Vec<String>,
}

impl Outcome {
    fn merge(&mut self, other: Outcome) {
        self.violations += other.violations;
        self.findings += other.findings;
        self.lines.extend(other.lines);
    }
}

pub fn run(suite: Suite, max_weight: u32) -> Outcome {
    let mut out = Outcome::default();
    match suite {
        Suite::Positivity => out.merge(positivity(max_weight)),
        Suite::Degree => out.merge(degree(max_weight)),
        Suite::Divisibility => out.merge(divisibility(max_weight)),
        Suite::Commutation => out.merge(commutation(max_weight)),
        Suite::Tableaux => out.merge(tableaux(max_weight)),
        Suite::Parabolic => out.merge(parabolic(max_weight)),
        Suite::Classical => out.merge(classical(max_weight)),
        Suite::All => {
            out.merge(positivity(max_weight));
            out.merge(degree(max_weight));
            out.merge(divisibility(max_weight));
            out.merge(commutation(max_weight));
            out.merge(tableaux(max_weight));
            out.merge(parabolic(max_weight));
            out.merge(classical(max_weight));
        }
    }
    out
}

fn all_strict_to(w: u32) -> Vec<StrictPartition> {
    (1..=w).flat_map(strict_partitions).collect()
}

fn positivity(max_weight: u32) -> Outcome {
    let mus = all_strict_to(max_weight);
    let negatives: usize = mus
        .par_iter()
        .map(|mu| {
            l_table_vertex(mu)
                .rows()
                .filter(|(_, l)| !l.is_nonnegative())
                .count()
        })
        .sum();
    Outcome {
        violations: 0,
        findings: negatives,
        lines: vec![format!(
            "positivity: {} tables scanned up to weight {max_weight}, {negatives} negative-coefficient findings",
            mus.len()
        )],
    }
}

fn degree(max_weight: u32) -> Outcome {
    let mus = all_strict_to(max_weight);
    let bad: usize = mus
        .par_iter()
        .map(|mu| {
            l_table_vertex(mu)
                .rows()
                .filter(|(lam, l)| {
                    let want = mu.n_stat() as i64 - lam.n_stat() as i64;
                    l.degree().is_none_or(|d| d as i64 != want)
                })
                .count()
        })
        .sum();
    Outcome {
        violations: bad,
        findings: 0,
        lines: vec![format!(
            "degree: deg L = n(mu) - n(lambda) checked up to weight {max_weight}, {bad} violations"
        )],
    }
}

fn divisibility(max_weight: u32) -> Outcome {
    let mus = all_strict_to(max_weight);
    let bad: usize = mus
        .par_iter()
        .map(|mu| {
            l_table_vertex(mu)
                .rows()
                .filter(|(lam, l)| {
                    let e = mu.len() as i64 - lam.len() as i64;
                    e < 0 || l.div_exact_pow2(e as u32).is_none()
                })
                .count()
        })
        .sum();
    Outcome {
        violations: bad,
        findings: 0,
        lines: vec![format!(
            "divisibility: 2^(l(mu)-l(lambda)) | L checked up to weight {max_weight}, {bad} violations"
        )],
    }
}

fn commutation(max_weight: u32) -> Outcome {
    let cap = max_weight.min(6);
    let lambdas: Vec<StrictPartition> = (0..=cap).flat_map(strict_partitions).collect();
    let one_minus_q2 = QPolynomial::from_coeffs(vec![1, 0, -1]);
    let q = QPolynomial::monomial(1, 1);
    let delta = QPolynomial::from_coeffs(vec![2, -4, 2]);
    let bad: usize = lambdas
        .par_iter()
        .map(|lam| {
            let p = QExpansion::basis(lam.clone());
            let mut bad = 0;
            for r in -4..=6i64 {
                for s in -4..=6i64 {
                    let gg = |a: i64, b: i64| apply_g(a, &apply_g(b, &p));
                    let lhs = gg(r, s)
                        .add(&gg(s, r))
                        .scale_poly(&one_minus_q2)
                        .add(
                            &gg(r - 1, s + 1)
                                .sub(&gg(s + 1, r - 1))
                                .add(&gg(s - 1, r + 1))
                                .sub(&gg(r + 1, s - 1))
                                .scale_poly(&q),
                        );
                    let rhs = if r == -s {
                        let sign = if r % 2 == 0 { 1 } else { -1 };
                        p.scale_poly(&delta.scale(sign))
                    } else {
                        QExpansion::zero()
                    };
                    if lhs != rhs {
                        bad += 1;
                    }
                }
            }
            bad
        })
        .sum();
    Outcome {
        violations: bad,
        findings: 0,
        lines: vec![format!(
            "commutation: r,s in [-4,6] on bases up to weight {cap}, {bad} violations"
        )],
    }
}

fn tableaux(max_weight: u32) -> Outcome {
    let cap = max_weight.min(9);
    let mus = all_strict_to(cap);
    let results: Vec<(usize, usize)> = mus
        .par_iter()
        .map(|mu| {
            let table = l_table_vertex(mu);
            let mut count_bad = 0;
            let mut class_findings = 0;
            for lam in strict_partitions(mu.weight()) {
                let ts = enumerate(&lam, &mu.to_partition(), true).expect("equal weights");
                if ts.len() as i64 != table.get(&lam).eval(1) {
                    count_bad += 1;
                }
                let cls = qhl::shifted_tableaux::classes(&lam, &mu.to_partition())
                    .expect("equal weights");
                class_findings += cls.iter().filter(|c| !c.size.is_power_of_two()).count();
            }
            (count_bad, class_findings)
        })
        .collect();
    let count_bad: usize = results.iter().map(|r| r.0).sum();
    let class_findings: usize = results.iter().map(|r| r.1).sum();
    Outcome {
        violations: count_bad,
        findings: class_findings,
        lines: vec![format!(
            "tableaux: L(1) counts up to weight {cap}, {count_bad} violations; \
             {class_findings} class sizes that are not powers of two"
        )],
    }
}

fn all_sequences(n: u32) -> Vec<PartitionSequence> {
    fn rec(rem: u32, blocks: &mut Vec<StrictPartition>, out: &mut Vec<PartitionSequence>) {
        if rem == 0 {
            if !blocks.is_empty() {
                out.push(PartitionSequence::new(blocks.clone()).unwrap());
            }
            return;
        }
        for k in 1..=rem {
            for block in strict_partitions(k) {
                blocks.push(block);
                rec(rem - k, blocks, out);
                blocks.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(n, &mut Vec::new(), &mut out);
    out
}

fn parabolic(max_weight: u32) -> Outcome {
    let cap = max_weight.min(9);
    let sequences: Vec<PartitionSequence> = (1..=cap).flat_map(all_sequences).collect();
    let results: Vec<(usize, usize, usize)> = sequences
        .par_iter()
        .map(|ps| {
            let g = parabolic_g(ps);
            let mut violations = 0;
            // q = 1 is the iterated block product
            let mut product = QExpansion::one();
            for block in ps.blocks() {
                let mut next = QExpansion::zero();
                for (gamma, c) in q_monomial_expansion(block) {
                    let mut piece = product.clone();
                    for &gpart in gamma.iter().rev() {
                        if gpart > 0 {
                            piece = multiply_qm(gpart as i64, &piece).expect("nonnegative");
                        }
                    }
                    next = next.add(&piece.scale(c));
                }
                product = next;
            }
            if g.specialize(1) != product {
                violations += 1;
            }
            // q = 0 is the straightening of the concatenation
            let word: Vec<i64> = ps.concatenation().iter().map(|&x| x as i64).collect();
            if g.specialize(0) != straighten(&QWord(word)) {
                violations += 1;
            }
            let bar = ps.concatenation();
            let strict_findings = if StrictPartition::new(bar.clone()).is_ok() {
                positivity_findings(ps).map_or(0, |f| f.len())
            } else {
                0
            };
            let weak_negatives = if Partition::new(bar).is_ok() {
                positivity_findings(ps).map_or(0, |f| f.len())
            } else {
                0
            };
            (violations, strict_findings, weak_negatives)
        })
        .collect();
    let violations: usize = results.iter().map(|r| r.0).sum();
    let strict_findings: usize = results.iter().map(|r| r.1).sum();
    let weak_negatives: usize = results.iter().map(|r| r.2).sum();
    Outcome {
        violations,
        findings: strict_findings,
        lines: vec![format!(
            "parabolic: {} sequences up to weight {cap}; {violations} specialization violations; \
             {strict_findings} positivity findings on strict concatenations \
             ({weak_negatives} instances with negatives over all partition concatenations, \
             counterexamples to the weakly-decreasing reading)",
            sequences.len()
        )],
    }
}

fn classical(max_weight: u32) -> Outcome {
    let charge_cap = max_weight.min(8);
    let morris_cap = max_weight.min(10);
    let charge_bad: usize = (1..=charge_cap)
        .flat_map(partitions)
        .collect::<Vec<_>>()
        .par_iter()
        .map(|mu| {
            let h = hall_littlewood(mu);
            let mut bad = 0;
            for lam in partitions(mu.weight()) {
                let mut want = QPolynomial::zero();
                for t in cst_enumerate(&lam, mu).expect("equal weights") {
                    want = &want + &QPolynomial::monomial(1, charge(&t) as usize);
                }
                if h.coeff(&lam) != want {
                    bad += 1;
                }
            }
            bad
        })
        .sum();
    let morris_bad: usize = (1..=morris_cap)
        .flat_map(strict_partitions)
        .collect::<Vec<_>>()
        .par_iter()
        .map(|mu| {
            let h = hall_littlewood(&mu.to_partition());
            partitions(mu.weight())
                .iter()
                .filter(|lam| h.coeff(lam) != kostka_morris(lam, mu).expect("equal weights"))
                .count()
        })
        .sum();
    let top_bad: usize = (1..=morris_cap)
        .flat_map(partitions)
        .collect::<Vec<_>>()
        .par_iter()
        .map(|mu| {
            let top = Partition::new(vec![mu.weight()]).unwrap();
            let k = hall_littlewood(mu).coeff(&top);
            usize::from(k != QPolynomial::monomial(1, mu.n_stat() as usize))
        })
        .sum();
    Outcome {
        violations: charge_bad + morris_bad + top_bad,
        findings: 0,
        lines: vec![format!(
            "classical: charge identity to weight {charge_cap} ({charge_bad} violations), \
             Morris agreement to weight {morris_cap} ({morris_bad} violations), \
             top-row q^n(mu) ({top_bad} violations)"
        )],
    }
}
