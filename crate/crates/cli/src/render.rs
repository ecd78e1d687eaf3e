//! Human-readable rendering of expansions, tableaux and rank diagrams.

use qhl::shifted_tableaux::{MarkState, MarkedShiftedTableau, RankSearch, TableauClass};
use qhl::{QExpansion, QPolynomial, StrictPartition};

fn index_string(lambda: &StrictPartition) -> String {
    let parts: Vec<String> = lambda.parts().iter().map(|p| p.to_string()).collect();
    format!("Q[{}]", parts.join(","))
}

fn coefficient_prefix(c: &QPolynomial) -> String {
    let nonzero = c.coeffs().iter().filter(|&&x| x != 0).count();
    if nonzero == 1 {
        if *c == QPolynomial::one() {
            String::new()
        } else {
            format!("{c}")
        }
    } else {
        format!("({c})")
    }
}

/// Terms in ascending lexicographic index order, e.g.
/// `Q[3,2,1] + (2q+4q^2)Q[4,2] + (2q^2+4q^3)Q[5,1] + 4q^4Q[6]`.
pub fn expansion(e: &QExpansion) -> String {
    if e.is_zero() {
        return "0".to_string();
    }
    e.terms()
        .map(|(l, c)| format!("{}{}", coefficient_prefix(c), index_string(l)))
        .collect::<Vec<_>>()
        .join(" + ")
}

/// Rows printed top row first, each indented to its diagonal position.
pub fn tableau(t: &MarkedShiftedTableau) -> String {
    let mut out = String::new();
    for (r, row) in t.rows().iter().enumerate().rev() {
        out.push_str(&"   ".repeat(r));
        let cells: Vec<String> = row
            .iter()
            .map(|l| format!("{:<2}", l.to_string()))
            .collect();
        out.push_str(cells.join(" ").trim_end());
        out.push('\n');
    }
    out
}

pub fn class(c: &TableauClass) -> String {
    let mut out = String::new();
    for (r, row) in c.erased.iter().enumerate().rev() {
        out.push_str(&"   ".repeat(r));
        let cells: Vec<String> = row
            .iter()
            .enumerate()
            .map(|(i, v)| {
                let suffix = match c.marks[r][i] {
                    MarkState::Never => " ",
                    MarkState::Always => "'",
                    MarkState::Varies => "*",
                };
                format!("{v}{suffix}")
            })
            .collect();
        out.push_str(cells.join(" ").trim_end());
        out.push('\n');
    }
    out
}

/// Rank levels, one line per level, with ambiguity annotations.
pub fn ranks_text(rs: &RankSearch) -> String {
    use std::collections::BTreeMap;
    let mut levels: BTreeMap<usize, Vec<String>> = BTreeMap::new();
    let mut notes = Vec::new();
    for sr in &rs.shapes {
        match sr.assignments.first() {
            Some(first) => {
                for (class, &rank) in sr.classes.iter().zip(first.iter()) {
                    levels
                        .entry(rank)
                        .or_default()
                        .push(format!("{}[size {}]", sr.shape, class.size));
                }
                if sr.assignments.len() > 1 {
                    notes.push(format!(
                        "shape {}: {} assignments",
                        sr.shape,
                        sr.assignments.len()
                    ));
                }
            }
            None => notes.push(format!("shape {}: no consistent assignment", sr.shape)),
        }
    }
    let mut out = format!("content {}\n", rs.content);
    for (rank, entries) in levels {
        out.push_str(&format!("level {rank}: {}\n", entries.join(", ")));
    }
    for n in notes {
        out.push_str(&n);
        out.push('\n');
    }
    out
}
