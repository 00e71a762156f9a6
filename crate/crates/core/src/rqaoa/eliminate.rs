use crate::problem::{reduce_maxcut, WeightedGraph};
use crate::{Error, Result};

use super::CorrelationMatrix;

/// `z[eliminated] = sign · z[kept]`, in original node ids.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EliminationRecord {
    pub eliminated: usize,
    pub kept: usize,
    pub sign: i8,
}

/// One reduction step in the indices of the graph it was applied to.
#[derive(Debug, Clone, PartialEq)]
pub struct Elimination {
    pub graph: WeightedGraph,
    /// Larger index of the chosen pair.
    pub eliminated: usize,
    pub kept: usize,
    pub sign: i8,
    pub correlator: f64,
    /// Constant to add to the reduced cut value.
    pub offset: f64,
}

/// Edge with the largest `|M_ij|`; the first in `(i, j)` order wins ties.
/// With `allow_zero`, an all-zero matrix falls back to the first edge, or
/// to the pair `(0, n-1)` on an edgeless graph.
pub fn select_pair(g: &WeightedGraph, m: &CorrelationMatrix, allow_zero: bool) -> Result<(usize, usize, f64)> {
    if m.n() != g.n() {
        return Err(Error::DimensionMismatch { expected: g.n(), found: m.n() });
    }
    if g.n() < 2 {
        return Err(Error::invalid("elimination needs at least two nodes"));
    }
    let mut best: Option<(usize, usize, f64)> = None;
    for e in g.edges() {
        let v = m.get(e.i, e.j);
        if best.is_none_or(|(_, _, b)| v.abs() > b.abs()) {
            best = Some((e.i, e.j, v));
        }
    }
    match best {
        Some(b) if b.2 != 0.0 => Ok(b),
        _ if !allow_zero => Err(Error::AmbiguousElimination),
        Some(b) => Ok(b),
        None => Ok((0, g.n() - 1, 0.0)),
    }
}

/// Impose the strongest correlation and shrink the graph by one node.
pub fn eliminate(g: &WeightedGraph, m: &CorrelationMatrix, allow_zero: bool) -> Result<Elimination> {
    let (kept, eliminated, correlator) = select_pair(g, m, allow_zero)?;
    let sign = if correlator < 0.0 { -1 } else { 1 };
    let (graph, offset) = reduce_maxcut(g, eliminated, kept, sign)?;
    Ok(Elimination { graph, eliminated, kept, sign, correlator, offset })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::problem::{brute_force_maxcut, random_graph, CutAssignment};
    use alloc::vec;
    use alloc::vec::Vec;

    fn with_entries(g: &WeightedGraph, entries: &[((usize, usize), f64)]) -> CorrelationMatrix {
        CorrelationMatrix::from_edges(g, |i, j| {
            entries.iter().find(|((a, b), _)| (*a, *b) == (i, j)).map_or(0.0, |e| e.1)
        })
    }

    #[test]
    fn negative_unique_maximum() {
        let g = WeightedGraph::new(3, vec![(0, 1, 1.0), (1, 2, 1.0)]).unwrap();
        let m = with_entries(&g, &[((0, 1), -0.8), ((1, 2), 0.3)]);
        let r = eliminate(&g, &m, false).unwrap();
        assert_eq!((r.eliminated, r.kept, r.sign), (1, 0, -1));
    }

    #[test]
    fn ties_pick_lexicographic_first() {
        let g = WeightedGraph::new(3, vec![(0, 1, 1.0), (1, 2, 1.0), (0, 2, 1.0)]).unwrap();
        let m = with_entries(&g, &[((0, 1), 0.9), ((0, 2), 0.9)]);
        assert_eq!(select_pair(&g, &m, false).unwrap(), (0, 1, 0.9));
        let m = with_entries(&g, &[((0, 2), -0.9), ((1, 2), 0.9)]);
        assert_eq!(select_pair(&g, &m, false).unwrap(), (0, 2, -0.9));
    }

    #[test]
    fn zero_matrix_is_ambiguous_unless_allowed() {
        let g = WeightedGraph::new(3, vec![(0, 2, 1.0), (1, 2, 1.0)]).unwrap();
        let m = with_entries(&g, &[]);
        assert_eq!(eliminate(&g, &m, false), Err(Error::AmbiguousElimination));
        let r = eliminate(&g, &m, true).unwrap();
        assert_eq!((r.eliminated, r.kept, r.sign), (2, 0, 1));
        let empty = WeightedGraph::new(3, Vec::new()).unwrap();
        let r = eliminate(&empty, &with_entries(&empty, &[]), true).unwrap();
        assert_eq!((r.eliminated, r.kept), (2, 0));
    }

    #[test]
    fn offset_bookkeeping_against_enumeration() {
        for s in 0..20u64 {
            let g = random_graph(8, 0.6, &[-3.0, 1.0, 2.0], s).unwrap();
            if g.edges().is_empty() {
                continue;
            }
            let e = g.edges()[s as usize % g.edges().len()];
            let corr = if s % 2 == 0 { 0.7 } else { -0.7 };
            let m = with_entries(&g, &[((e.i, e.j), corr)]);
            let r = eliminate(&g, &m, false).unwrap();
            let (reduced_cut, reduced) = brute_force_maxcut(&r.graph).unwrap();
            // lift: reinsert the eliminated spin
            let mut z: Vec<i8> = reduced_cut.spins().to_vec();
            z.insert(r.eliminated, r.sign * z[r.kept]);
            let lifted = g.cut_value(&z).unwrap();
            assert!((lifted - (reduced + r.offset)).abs() < 1e-9);
            // constrained optimum by enumeration over the original graph
            let constrained = (0..1usize << 8)
                .map(|idx| CutAssignment::from_index(idx, 8))
                .filter(|c| c.spins()[r.eliminated] == r.sign * c.spins()[r.kept])
                .map(|c| g.cut_value(c.spins()).unwrap())
                .fold(f64::NEG_INFINITY, f64::max);
            assert!((constrained - lifted).abs() < 1e-9);
        }
    }
}
