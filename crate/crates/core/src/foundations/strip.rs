use crate::error::Error;
use crate::foundations::{Partition, StrictPartition};

/// True iff `outer/inner` is a horizontal strip of strict partitions:
/// `inner_i ≤ outer_i` and `inner_i ≥ outer_{i+1}` for all i.
pub fn is_shifted_strip(outer: &StrictPartition, inner: &StrictPartition) -> bool {
    interlaces(outer.parts(), inner.parts())
}

/// Same interlacing condition for ordinary partitions (the classical H_m).
pub fn is_plain_strip(outer: &Partition, inner: &Partition) -> bool {
    interlaces(outer.parts(), inner.parts())
}

fn interlaces(outer: &[u32], inner: &[u32]) -> bool {
    if inner.len() > outer.len() {
        return false;
    }
    for i in 0..outer.len() {
        let inn = inner.get(i).copied().unwrap_or(0);
        let below = outer.get(i + 1).copied().unwrap_or(0);
        if inn > outer[i] || inn < below {
            return false;
        }
    }
    true
}

/// A horizontal strip `outer/inner` between strict partitions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewStrip {
    pub outer: StrictPartition,
    pub inner: StrictPartition,
    pub size: u32,
}

impl SkewStrip {
    pub fn new(outer: StrictPartition, inner: StrictPartition) -> Result<Self, Error> {
        if !is_shifted_strip(&outer, &inner) {
            return Err(Error::NotAStrip(outer.parts().to_vec(), inner.parts().to_vec()));
        }
        let size = outer.weight() - inner.weight();
        Ok(SkewStrip { outer, inner, size })
    }

    /// The statistic a(λ/μ).
    pub fn components(&self) -> u32 {
        components_unchecked(&self.outer, &self.inner)
    }
}

/// The statistic a(λ/μ): the number of edge-connected components of the
/// shifted skew diagram. Row j (1-based) occupies columns j−1 … j−2+λ_j, so
/// the strips in rows j and j+1 touch exactly when μ_j = λ_{j+1}.
pub fn strip_components(outer: &StrictPartition, inner: &StrictPartition) -> Result<u32, Error> {
    if !is_shifted_strip(outer, inner) {
        return Err(Error::NotAStrip(outer.parts().to_vec(), inner.parts().to_vec()));
    }
    Ok(components_unchecked(outer, inner))
}

fn components_unchecked(outer: &StrictPartition, inner: &StrictPartition) -> u32 {
    let rows = outer.len();
    let occupied = |j: usize| outer.part(j) > inner.part(j);
    let mut count = 0;
    for j in 0..rows {
        if !occupied(j) {
            continue;
        }
        let linked_up = j + 1 < rows && occupied(j + 1) && inner.part(j) == outer.part(j + 1);
        if !linked_up {
            count += 1;
        }
    }
    count
}

/// The literal prose count `1 + #{1 < j ≤ ℓ(λ) : λ_j > μ_j and μ_{j−1} > λ_j}`.
/// Diverges from [`strip_components`] on strips whose top occupied row is
/// not row 1, e.g. (2,1)/(2); kept as a diagnostic.
pub fn strip_components_prose(
    outer: &StrictPartition,
    inner: &StrictPartition,
) -> Result<u32, Error> {
    if !is_shifted_strip(outer, inner) {
        return Err(Error::NotAStrip(outer.parts().to_vec(), inner.parts().to_vec()));
    }
    let mut count = 1;
    for j in 1..outer.len() {
        if outer.part(j) > inner.part(j) && inner.part(j - 1) > outer.part(j) {
            count += 1;
        }
    }
    Ok(count)
}

/// All strict μ with λ/μ ∈ H_m, ascending lexicographic.
pub fn strips(outer: &StrictPartition, m: u32) -> Vec<StrictPartition> {
    if m > outer.weight() {
        return Vec::new();
    }
    let target = outer.weight() - m;
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    strips_below_rec(outer.parts(), 0, target, &mut prefix, &mut out);
    out.sort();
    out
}

fn strips_below_rec(
    outer: &[u32],
    row: usize,
    remaining: u32,
    prefix: &mut Vec<u32>,
    out: &mut Vec<StrictPartition>,
) {
    if row == outer.len() {
        if remaining == 0 {
            let parts: Vec<u32> = prefix.iter().copied().take_while(|&p| p > 0).collect();
            out.push(StrictPartition::new(parts).expect("interlaced rows are strict"));
        }
        return;
    }
    let lo = outer.get(row + 1).copied().unwrap_or(0);
    let hi = outer[row].min(remaining);
    for p in lo..=hi {
        // strictness: reject equal positive neighbours
        if row > 0 && p > 0 && prefix[row - 1] == p {
            continue;
        }
        prefix.push(p);
        strips_below_rec(outer, row + 1, remaining - p, prefix, out);
        prefix.pop();
    }
}

/// All strict λ with λ/μ ∈ H_m, ascending lexicographic (the dual form).
pub fn strips_above(inner: &StrictPartition, m: u32) -> Vec<StrictPartition> {
    let target = inner.weight() + m;
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    strips_above_rec(inner.parts(), 0, target, &mut prefix, &mut out);
    out.sort();
    out
}

fn strips_above_rec(
    inner: &[u32],
    row: usize,
    remaining: u32,
    prefix: &mut Vec<u32>,
    out: &mut Vec<StrictPartition>,
) {
    if row == inner.len() {
        // at most one extra row, bounded by the last inner part
        if remaining == 0 {
            out.push(StrictPartition::new(prefix.clone()).expect("interlaced rows are strict"));
        } else {
            let cap = inner.last().copied().unwrap_or(u32::MAX);
            if remaining <= cap && (prefix.is_empty() || remaining < *prefix.last().unwrap()) {
                let mut parts = prefix.clone();
                parts.push(remaining);
                out.push(StrictPartition::new(parts).expect("interlaced rows are strict"));
            }
        }
        return;
    }
    let lo = inner[row];
    let hi = if row == 0 { remaining } else { inner[row - 1].min(remaining) };
    for p in lo..=hi {
        if row > 0 && prefix[row - 1] <= p {
            continue;
        }
        prefix.push(p);
        strips_above_rec(inner, row + 1, remaining - p, prefix, out);
        prefix.pop();
    }
}

/// All inner partitions μ with λ/μ ∈ H_m in the ordinary (unshifted) sense.
pub fn plain_strips(outer: &Partition, m: u32) -> Vec<Partition> {
    if m > outer.weight() {
        return Vec::new();
    }
    let target = outer.weight() - m;
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    plain_below_rec(outer.parts(), 0, target, &mut prefix, &mut out);
    out.sort();
    out
}

fn plain_below_rec(
    outer: &[u32],
    row: usize,
    remaining: u32,
    prefix: &mut Vec<u32>,
    out: &mut Vec<Partition>,
) {
    if row == outer.len() {
        if remaining == 0 {
            let parts: Vec<u32> = prefix.iter().copied().take_while(|&p| p > 0).collect();
            out.push(Partition::new(parts).expect("interlaced rows are weakly decreasing"));
        }
        return;
    }
    let lo = outer.get(row + 1).copied().unwrap_or(0);
    let hi = outer[row].min(remaining);
    for p in lo..=hi {
        prefix.push(p);
        plain_below_rec(outer, row + 1, remaining - p, prefix, out);
        prefix.pop();
    }
}

/// All outer partitions λ with λ/μ ∈ H_m in the ordinary sense.
pub fn plain_strips_above(inner: &Partition, m: u32) -> Vec<Partition> {
    let target = inner.weight() + m;
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    plain_above_rec(inner.parts(), 0, target, &mut prefix, &mut out);
    out.sort();
    out
}

fn plain_above_rec(
    inner: &[u32],
    row: usize,
    remaining: u32,
    prefix: &mut Vec<u32>,
    out: &mut Vec<Partition>,
) {
    if row == inner.len() {
        if remaining == 0 {
            out.push(Partition::new(prefix.clone()).expect("interlaced rows are weakly decreasing"));
        } else {
            let cap = inner.last().copied().unwrap_or(u32::MAX);
            if remaining <= cap && prefix.last().is_none_or(|&last| remaining <= last) {
                let mut parts = prefix.clone();
                parts.push(remaining);
                out.push(Partition::new(parts).expect("interlaced rows are weakly decreasing"));
            }
        }
        return;
    }
    let lo = inner[row];
    let hi = if row == 0 { remaining } else { inner[row - 1].min(remaining) };
    for p in lo..=hi {
        if row > 0 && prefix[row - 1] < p {
            continue;
        }
        prefix.push(p);
        plain_above_rec(inner, row + 1, remaining - p, prefix, out);
        prefix.pop();
    }
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
    fn component_counts() {
        assert_eq!(strip_components(&sp(&[2, 1]), &sp(&[2])).unwrap(), 1);
        assert_eq!(strip_components(&sp(&[3]), &sp(&[2])).unwrap(), 1);
        assert_eq!(strip_components(&sp(&[3, 1]), &sp(&[3, 1])).unwrap(), 0);
        // cells in rows 1 and 2 are not adjacent
        assert_eq!(strip_components(&sp(&[3, 1]), &sp(&[2])).unwrap(), 2);
        // (4,2)/(1) violates the interlacing condition μ_1 ≥ λ_2
        assert!(strip_components(&sp(&[4, 2]), &sp(&[1])).is_err());
    }

    #[test]
    fn components_by_brute_force_cell_adjacency() {
        // independent oracle: union-find over the skew cells in shifted
        // coordinates, cells adjacent when they share an edge
        fn oracle(outer: &StrictPartition, inner: &StrictPartition) -> u32 {
            let mut cells = Vec::new();
            for j in 0..outer.len() {
                let row = j as u32 + 1;
                for c in (inner.part(j) + row - 1)..(outer.part(j) + row - 1) {
                    cells.push((row, c));
                }
            }
            let mut parent: Vec<usize> = (0..cells.len()).collect();
            fn find(parent: &mut Vec<usize>, i: usize) -> usize {
                if parent[i] != i {
                    let r = find(parent, parent[i]);
                    parent[i] = r;
                }
                parent[i]
            }
            for a in 0..cells.len() {
                for b in (a + 1)..cells.len() {
                    let (ra, ca) = cells[a];
                    let (rb, cb) = cells[b];
                    let adjacent = (ra == rb && ca.abs_diff(cb) == 1)
                        || (ca == cb && ra.abs_diff(rb) == 1);
                    if adjacent {
                        let (x, y) = (find(&mut parent, a), find(&mut parent, b));
                        parent[x] = y;
                    }
                }
            }
            (0..cells.len())
                .filter(|&i| find(&mut parent, i) == i)
                .count() as u32
        }
        for n in 0..=9u32 {
            for outer in crate::foundations::strict_partitions(n) {
                for m in 0..=n {
                    for inner in strips(&outer, m) {
                        assert_eq!(
                            strip_components(&outer, &inner).unwrap(),
                            oracle(&outer, &inner),
                            "{outer}/{inner}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn prose_count_diverges_on_the_morris_example() {
        // the worked recurrence needs a((2,1)/(2)) = 1; the prose gives 2
        assert_eq!(strip_components(&sp(&[2, 1]), &sp(&[2])).unwrap(), 1);
        assert_eq!(strip_components_prose(&sp(&[2, 1]), &sp(&[2])).unwrap(), 2);
    }

    #[test]
    fn strip_enumeration() {
        assert_eq!(strips_above(&sp(&[2]), 1), vec![sp(&[2, 1]), sp(&[3])]);
        assert_eq!(strips(&sp(&[3, 1]), 0), vec![sp(&[3, 1])]);
        assert_eq!(strips(&sp(&[2, 1]), 3), Vec::<StrictPartition>::new());
        assert_eq!(strips(&sp(&[2, 1]), 1), vec![sp(&[2])]);
        assert_eq!(
            strips(&sp(&[3, 1]), 1),
            vec![sp(&[2, 1]), sp(&[3])]
        );
        assert_eq!(strips_above(&StrictPartition::empty(), 3), vec![sp(&[3])]);
        assert_eq!(strips_above(&StrictPartition::empty(), 0), vec![StrictPartition::empty()]);
    }

    #[test]
    fn strips_agree_with_membership_scan() {
        use crate::foundations::strict_partitions;
        for n in 0..=8u32 {
            for outer in strict_partitions(n) {
                for m in 0..=n {
                    let listed = strips(&outer, m);
                    let scanned: Vec<StrictPartition> = strict_partitions(n - m)
                        .into_iter()
                        .filter(|inner| is_shifted_strip(&outer, inner))
                        .collect();
                    assert_eq!(listed, scanned);
                    for inner in &listed {
                        assert!(strips_above(inner, m).contains(&outer));
                    }
                }
            }
        }
    }

    #[test]
    fn component_bounds() {
        use crate::foundations::strict_partitions;
        for n in 1..=9u32 {
            for outer in strict_partitions(n) {
                for m in 1..=n {
                    for inner in strips(&outer, m) {
                        let a = strip_components(&outer, &inner).unwrap();
                        let gaining = (0..outer.len())
                            .filter(|&j| outer.part(j) > inner.part(j))
                            .count() as u32;
                        assert!(a >= 1 && a <= gaining);
                        let dl = outer.len() as i64 - inner.len() as i64;
                        assert!(a as i64 - dl >= 0);
                    }
                }
            }
        }
    }

    #[test]
    fn skew_strip_type() {
        let s = SkewStrip::new(sp(&[3, 1]), sp(&[2])).unwrap();
        assert_eq!(s.size, 2);
        assert_eq!(s.components(), 2);
        assert!(SkewStrip::new(sp(&[4, 2]), sp(&[1])).is_err());
    }

    #[test]
    fn plain_strip_enumeration() {
        assert_eq!(
            plain_strips(&pp(&[2, 1]), 1),
            vec![pp(&[1, 1]), pp(&[2])]
        );
        // (1,1)/∅ is not a horizontal strip
        assert!(!is_plain_strip(&pp(&[1, 1]), &Partition::empty()));
        assert_eq!(
            plain_strips_above(&pp(&[1]), 1),
            vec![pp(&[1, 1]), pp(&[2])]
        );
        assert_eq!(plain_strips(&pp(&[2]), 2), vec![Partition::empty()]);
    }
}
