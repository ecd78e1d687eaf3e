//! Marked shifted tableaux: enumeration, mark-erasure classes, the
//! conjectured rank-statistic search and diagram emitters.
//!
//! A marked shifted tableau fills the shifted diagram of a strict shape
//! with the alphabet 1′ < 1 < 2′ < 2 < …, weakly increasing along rows and
//! up columns, no unmarked letter repeated in a column, no marked letter
//! repeated in a row. Row j (1-based) is indented j−1 columns; the
//! leftmost cell of each row is the diagonal cell.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::classical::{charge, cst_enumerate};
use crate::error::Error;
use crate::foundations::{strict_partitions, Partition, QPolynomial, StrictPartition};
use crate::qkostka::l_table_vertex;

/// One letter of the marked alphabet; `3′` is `{ value: 3, marked: true }`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct MarkedLetter {
    pub value: u32,
    pub marked: bool,
}

impl MarkedLetter {
    /// Position in the total order 1′ < 1 < 2′ < 2 < …
    fn key(self) -> (u32, u8) {
        (self.value, u8::from(!self.marked))
    }
}

impl PartialOrd for MarkedLetter {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for MarkedLetter {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.key().cmp(&other.key())
    }
}

impl fmt::Display for MarkedLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.value, if self.marked { "'" } else { "" })
    }
}

/// A filling of the shifted diagram of `shape`; `rows[r]` holds row r+1
/// left to right.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MarkedShiftedTableau {
    shape: StrictPartition,
    rows: Vec<Vec<MarkedLetter>>,
}

impl MarkedShiftedTableau {
    pub fn shape(&self) -> &StrictPartition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<MarkedLetter>] {
        &self.rows
    }

    /// The multiplicity vector (m_1(T), m_2(T), …).
    pub fn content(&self) -> Vec<u32> {
        let max = self
            .rows
            .iter()
            .flatten()
            .map(|l| l.value)
            .max()
            .unwrap_or(0);
        let mut counts = vec![0u32; max as usize];
        for l in self.rows.iter().flatten() {
            counts[(l.value - 1) as usize] += 1;
        }
        counts
    }

    /// The filling with all marks erased.
    pub fn erased(&self) -> Vec<Vec<u32>> {
        self.rows
            .iter()
            .map(|row| row.iter().map(|l| l.value).collect())
            .collect()
    }
}

/// All marked shifted tableaux of the given shape and content. With
/// `unmarked_diagonal` the leftmost cell of each row must carry an
/// unmarked letter; the count then equals `L_{λμ}(1)`.
pub fn enumerate(
    shape: &StrictPartition,
    content: &Partition,
    unmarked_diagonal: bool,
) -> Result<Vec<MarkedShiftedTableau>, Error> {
    if shape.weight() != content.weight() {
        return Err(Error::WeightMismatch(shape.weight(), content.weight()));
    }
    let letters = content.len() as u32;
    let mut remaining: Vec<u32> = content.parts().to_vec();
    let mut rows: Vec<Vec<MarkedLetter>> = (0..shape.len())
        .map(|r| Vec::with_capacity(shape.part(r) as usize))
        .collect();
    let mut out = Vec::new();
    fill(shape, letters, unmarked_diagonal, 0, 0, &mut remaining, &mut rows, &mut out);
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn fill(
    shape: &StrictPartition,
    letters: u32,
    unmarked_diagonal: bool,
    r: usize,
    c: usize,
    remaining: &mut Vec<u32>,
    rows: &mut Vec<Vec<MarkedLetter>>,
    out: &mut Vec<MarkedShiftedTableau>,
) {
    if r == shape.len() {
        out.push(MarkedShiftedTableau { shape: shape.clone(), rows: rows.clone() });
        return;
    }
    if c == shape.part(r) as usize {
        fill(shape, letters, unmarked_diagonal, r + 1, 0, remaining, rows, out);
        return;
    }
    let left = if c > 0 { Some(rows[r][c - 1]) } else { None };
    // row r sits one indent right of row r−1: same absolute column is c+1
    let below = if r > 0 { Some(rows[r - 1][c + 1]) } else { None };
    for value in 1..=letters {
        if remaining[(value - 1) as usize] == 0 {
            continue;
        }
        for marked in [true, false] {
            let cur = MarkedLetter { value, marked };
            if unmarked_diagonal && c == 0 && marked {
                continue;
            }
            if let Some(l) = left {
                // weakly increasing rows, no marked letter repeated in a row
                if l > cur || (l == cur && cur.marked) {
                    continue;
                }
            }
            if let Some(b) = below {
                // weakly increasing columns, no unmarked letter repeated in one
                if b > cur || (b == cur && !cur.marked) {
                    continue;
                }
            }
            remaining[(value - 1) as usize] -= 1;
            rows[r].push(cur);
            fill(shape, letters, unmarked_diagonal, r, c + 1, remaining, rows, out);
            rows[r].pop();
            remaining[(value - 1) as usize] += 1;
        }
    }
}

/// Whether a cell is marked in every member of a class, in none, or varies
/// (displayed as `k'`, `k`, `k*` respectively).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MarkState {
    Never,
    Always,
    Varies,
}

/// A mark-erasure class: all unmarked-diagonal tableaux that agree after
/// removing the marks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableauClass {
    pub shape: StrictPartition,
    pub erased: Vec<Vec<u32>>,
    pub size: usize,
    pub marks: Vec<Vec<MarkState>>,
}

/// The unmarked-diagonal enumeration grouped by mark erasure; the sizes
/// sum to `L_{λμ}(1)`.
pub fn classes(shape: &StrictPartition, content: &Partition) -> Result<Vec<TableauClass>, Error> {
    let all = enumerate(shape, content, true)?;
    let mut groups: BTreeMap<Vec<Vec<u32>>, Vec<&MarkedShiftedTableau>> = BTreeMap::new();
    for t in &all {
        groups.entry(t.erased()).or_default().push(t);
    }
    Ok(groups
        .into_iter()
        .map(|(erased, members)| {
            let marks = erased
                .iter()
                .enumerate()
                .map(|(r, row)| {
                    (0..row.len())
                        .map(|c| {
                            let marked = members.iter().filter(|t| t.rows[r][c].marked).count();
                            if marked == 0 {
                                MarkState::Never
                            } else if marked == members.len() {
                                MarkState::Always
                            } else {
                                MarkState::Varies
                            }
                        })
                        .collect()
                })
                .collect();
            TableauClass { shape: shape.clone(), erased, size: members.len(), marks }
        })
        .collect())
}

/// The rank-search result for one shape: its classes, the target
/// polynomial `L_{λμ}(q)`, and every assignment of a rank to each class
/// with `Σ size·q^rank = L`.
#[derive(Clone, Debug)]
pub struct ShapeRanks {
    pub shape: StrictPartition,
    pub classes: Vec<TableauClass>,
    pub poly: QPolynomial,
    /// Each assignment lists the rank of `classes[i]` at position i.
    pub assignments: Vec<Vec<usize>>,
}

/// Rank assignments for all shapes of one content. Shapes are independent,
/// so the total ambiguity is the product of the per-shape counts.
#[derive(Clone, Debug)]
pub struct RankSearch {
    pub content: StrictPartition,
    pub shapes: Vec<ShapeRanks>,
}

impl RankSearch {
    /// True when every shape admits at least one assignment.
    pub fn is_feasible(&self) -> bool {
        self.shapes.iter().all(|s| !s.assignments.is_empty())
    }
}

/// Search, shape by shape, for all rank functions on the mark-erasure
/// classes compatible with `L_{λμ}(q)`.
pub fn rank_search(content: &StrictPartition) -> RankSearch {
    let table = l_table_vertex(content);
    let content_plain = content.to_partition();
    let mut shapes = Vec::new();
    for shape in strict_partitions(content.weight()) {
        let cls = classes(&shape, &content_plain).expect("equal weights");
        if cls.is_empty() {
            continue;
        }
        let poly = table.get(&shape);
        let mut coeffs: Vec<i64> = poly.coeffs().to_vec();
        let mut current = vec![0usize; cls.len()];
        let mut assignments = Vec::new();
        search_ranks(&cls, 0, &mut coeffs, &mut current, &mut assignments);
        shapes.push(ShapeRanks { shape, classes: cls, poly, assignments });
    }
    RankSearch { content: content.clone(), shapes }
}

fn search_ranks(
    classes: &[TableauClass],
    i: usize,
    remaining: &mut Vec<i64>,
    current: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if i == classes.len() {
        if remaining.iter().all(|&c| c == 0) {
            out.push(current.clone());
        }
        return;
    }
    let size = classes[i].size as i64;
    for k in 0..remaining.len() {
        if remaining[k] >= size {
            remaining[k] -= size;
            current[i] = k;
            search_ranks(classes, i + 1, remaining, current, out);
            remaining[k] += size;
        }
    }
}

/// Per-shape comparison of the feasible rank values with the charge values
/// of column-strict tableaux of the same shape and content.
#[derive(Clone, Debug)]
pub struct ShapeChargeComparison {
    pub shape: StrictPartition,
    pub d_values: BTreeSet<usize>,
    pub charge_values: BTreeSet<usize>,
    /// d-values not realized as a charge value.
    pub flagged: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct ChargeSubsetReport {
    pub content: StrictPartition,
    pub shapes: Vec<ShapeChargeComparison>,
}

impl ChargeSubsetReport {
    pub fn has_flags(&self) -> bool {
        self.shapes.iter().any(|s| !s.flagged.is_empty())
    }
}

/// For each shape, compare the union of rank values over all assignments
/// with the set of charge values of column-strict tableaux of that shape
/// and content; flag any rank value outside the charge set.
pub fn charge_subset_report(content: &StrictPartition) -> ChargeSubsetReport {
    let search = rank_search(content);
    let content_plain = content.to_partition();
    let mut shapes = Vec::new();
    for sr in &search.shapes {
        let d_values: BTreeSet<usize> =
            sr.assignments.iter().flat_map(|a| a.iter().copied()).collect();
        let charge_values: BTreeSet<usize> =
            cst_enumerate(&sr.shape.to_partition(), &content_plain)
                .expect("equal weights")
                .iter()
                .map(|t| charge(t) as usize)
                .collect();
        let flagged: Vec<usize> =
            d_values.iter().copied().filter(|d| !charge_values.contains(d)).collect();
        shapes.push(ShapeChargeComparison { shape: sr.shape.clone(), d_values, charge_values, flagged });
    }
    ChargeSubsetReport { content: content.clone(), shapes }
}

fn class_cell_label(class: &TableauClass, r: usize, c: usize) -> String {
    let v = class.erased[r][c];
    match class.marks[r][c] {
        MarkState::Never => format!("{v}"),
        MarkState::Always => format!("{v}'"),
        MarkState::Varies => format!("{v}*"),
    }
}

/// Group the first assignment of every shape into rank levels.
fn rank_levels(rs: &RankSearch) -> BTreeMap<usize, Vec<(usize, usize)>> {
    // values are (shape index, class index)
    let mut levels: BTreeMap<usize, Vec<(usize, usize)>> = BTreeMap::new();
    for (si, sr) in rs.shapes.iter().enumerate() {
        if let Some(first) = sr.assignments.first() {
            for (ci, &rank) in first.iter().enumerate() {
                levels.entry(rank).or_default().push((si, ci));
            }
        }
    }
    levels
}

/// DOT rendering of the rank diagram: one subgraph per rank level, nodes
/// labelled by the erased class with `k'`/`k*` mark annotations. The
/// covering relation is unknown, so only levels are emitted.
pub fn ranks_dot(rs: &RankSearch) -> String {
    let mut s = String::new();
    s.push_str("digraph ranks {\n");
    s.push_str("  rankdir=BT;\n");
    s.push_str("  node [shape=box, fontname=\"monospace\"];\n");
    for (rank, nodes) in rank_levels(rs) {
        s.push_str(&format!("  {{ rank=same; level{rank} [shape=plaintext, label=\"rank {rank}\"];"));
        for &(si, ci) in &nodes {
            let sr = &rs.shapes[si];
            let class = &sr.classes[ci];
            let mut label = format!("{}", class.shape);
            if sr.assignments.len() > 1 {
                label.push_str(&format!(" [{} assignments]", sr.assignments.len()));
            }
            for (r, row) in class.erased.iter().enumerate().rev() {
                label.push_str("\\n");
                label.push_str(&"  ".repeat(r));
                let cells: Vec<String> =
                    (0..row.len()).map(|c| class_cell_label(class, r, c)).collect();
                label.push_str(&cells.join(" "));
            }
            s.push_str(&format!(" s{si}c{ci} [label=\"{label}\"];"));
        }
        s.push_str(" }\n");
    }
    s.push_str("}\n");
    s
}

/// LaTeX rendering of the rank diagram using `ytableau` syntax (skew
/// indentation via `\none`), one block per rank level, top rank 0.
pub fn ranks_latex(rs: &RankSearch) -> String {
    let mut s = String::new();
    s.push_str("% rank diagram; requires \\usepackage{ytableau}\n");
    for (rank, nodes) in rank_levels(rs) {
        s.push_str(&format!("% rank {rank}\n\\[\n"));
        for (k, &(si, ci)) in nodes.iter().enumerate() {
            if k > 0 {
                s.push_str("\\qquad\n");
            }
            let sr = &rs.shapes[si];
            let class = &sr.classes[ci];
            s.push_str("\\begin{ytableau}\n");
            for (r, row) in class.erased.iter().enumerate().rev() {
                let mut cells: Vec<String> = vec!["\\none".to_string(); r];
                for c in 0..row.len() {
                    let v = class.erased[r][c];
                    cells.push(match class.marks[r][c] {
                        MarkState::Never => format!("{v}"),
                        MarkState::Always => format!("{v}'"),
                        MarkState::Varies => format!("{v}^*"),
                    });
                }
                s.push_str(&cells.join(" & "));
                s.push_str(" \\\\\n");
            }
            s.push_str("\\end{ytableau}");
            if sr.assignments.len() > 1 {
                s.push_str(&format!("\n% shape {} admits {} assignments", sr.shape, sr.assignments.len()));
            }
            s.push('\n');
        }
        s.push_str("\\]\n");
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(parts: &[u32]) -> StrictPartition {
        StrictPartition::new(parts.to_vec()).unwrap()
    }

    fn pp(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn enumeration_counts() {
        // L_{(4,2),(3,2,1)}(1) = 6
        assert_eq!(enumerate(&sp(&[4, 2]), &pp(&[3, 2, 1]), true).unwrap().len(), 6);
        // the single-row shape admits exactly the unmarked filling
        for n in 1..=6u32 {
            let ts = enumerate(&sp(&[n]), &pp(&[n]), true).unwrap();
            assert_eq!(ts.len(), 1);
            assert!(ts[0].rows()[0].iter().all(|l| !l.marked));
        }
        assert_eq!(enumerate(&sp(&[3, 2, 1]), &pp(&[3, 2, 1]), true).unwrap().len(), 1);
        assert!(enumerate(&sp(&[3, 1]), &pp(&[3, 2]), true).is_err());
    }

    #[test]
    fn marked_diagonals_grow_the_count() {
        let strictd = enumerate(&sp(&[4, 2]), &pp(&[3, 2, 1]), true).unwrap().len();
        let free = enumerate(&sp(&[4, 2]), &pp(&[3, 2, 1]), false).unwrap().len();
        assert!(free > strictd);
    }

    #[test]
    fn class_examples() {
        let mut sizes: Vec<usize> = classes(&sp(&[5, 3, 1]), &pp(&[4, 3, 2]))
            .unwrap()
            .iter()
            .map(|c| c.size)
            .collect();
        sizes.sort();
        assert_eq!(sizes, vec![2, 4]);

        let mut sizes: Vec<usize> = classes(&sp(&[8, 1]), &pp(&[4, 3, 2]))
            .unwrap()
            .iter()
            .map(|c| c.size)
            .collect();
        sizes.sort();
        assert_eq!(sizes, vec![4, 4]);

        let cls = classes(&sp(&[3, 2]), &pp(&[3, 2])).unwrap();
        assert_eq!(cls.len(), 1);
        assert_eq!(cls[0].size, 1);
    }

    #[test]
    fn class_sizes_are_powers_of_two_and_match_star_count() {
        for n in 1..=7u32 {
            for mu in strict_partitions(n) {
                for shape in strict_partitions(n) {
                    for class in classes(&shape, &mu.to_partition()).unwrap() {
                        assert!(class.size.is_power_of_two(), "{shape} {mu} {class:?}");
                        let stars = class
                            .marks
                            .iter()
                            .flatten()
                            .filter(|&&m| m == MarkState::Varies)
                            .count();
                        assert_eq!(class.size, 1usize << stars, "{shape} {mu}");
                    }
                }
            }
        }
    }

    #[test]
    fn counts_match_l_at_one() {
        for n in 1..=7u32 {
            for mu in strict_partitions(n) {
                let table = l_table_vertex(&mu);
                for shape in strict_partitions(n) {
                    let count = enumerate(&shape, &mu.to_partition(), true).unwrap().len();
                    assert_eq!(count as i64, table.get(&shape).eval(1), "{shape} {mu}");
                }
            }
        }
    }

    #[test]
    fn rank_search_small() {
        // content (2,1): shape (3) forces rank 1 on its single class of size 2
        let rs = rank_search(&sp(&[2, 1]));
        assert!(rs.is_feasible());
        let by_shape: BTreeMap<_, _> =
            rs.shapes.iter().map(|s| (s.shape.clone(), s)).collect();
        let three = by_shape[&sp(&[3])];
        assert_eq!(three.classes.len(), 1);
        assert_eq!(three.assignments, vec![vec![1]]);
        let twoone = by_shape[&sp(&[2, 1])];
        assert_eq!(twoone.assignments, vec![vec![0]]);

        // content (5): the single class gets rank 0
        let rs = rank_search(&sp(&[5]));
        assert_eq!(rs.shapes.len(), 1);
        assert_eq!(rs.shapes[0].assignments, vec![vec![0]]);
    }

    #[test]
    fn rank_search_max_rank_is_degree() {
        for content in [sp(&[2, 1]), sp(&[3, 1]), sp(&[3, 2]), sp(&[4, 1]), sp(&[3, 2, 1])]
        {
            let table = l_table_vertex(&content);
            let rs = rank_search(&content);
            assert!(rs.is_feasible());
            for sr in &rs.shapes {
                let deg = table.get(&sr.shape).degree().unwrap();
                for a in &sr.assignments {
                    assert_eq!(a.iter().copied().max().unwrap(), deg);
                }
            }
        }
    }

    #[test]
    fn charge_subset_small() {
        let report = charge_subset_report(&sp(&[2, 1]));
        assert!(!report.has_flags());
        let all_d: BTreeSet<usize> =
            report.shapes.iter().flat_map(|s| s.d_values.iter().copied()).collect();
        assert_eq!(all_d, BTreeSet::from([0, 1]));
        let all_c: BTreeSet<usize> =
            report.shapes.iter().flat_map(|s| s.charge_values.iter().copied()).collect();
        assert_eq!(all_c, BTreeSet::from([0, 1]));

        let report = charge_subset_report(&sp(&[4]));
        assert_eq!(report.shapes.len(), 1);
        assert_eq!(report.shapes[0].d_values, BTreeSet::from([0]));
        assert!(!report.has_flags());
    }

    #[test]
    fn emitters_are_deterministic_and_nonempty() {
        let rs = rank_search(&sp(&[2, 1]));
        let dot = ranks_dot(&rs);
        assert!(dot.starts_with("digraph ranks {"));
        assert!(dot.contains("rank 1"));
        assert_eq!(dot, ranks_dot(&rs));
        let tex = ranks_latex(&rs);
        assert!(tex.contains("ytableau"));
        assert_eq!(tex, ranks_latex(&rs));
    }
}
