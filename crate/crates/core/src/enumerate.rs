//! Three independent maximal-independent-set enumerators sharing one
//! result contract.
//!
//! * [`oracle`] — brute force over all 2^n vertex subsets, the ground
//!   truth for small graphs.
//! * [`branching`] — recursion on the closed neighborhood of a
//!   minimum-degree vertex: every maximal independent set I meets N[v]
//!   (otherwise I + {v} would still be independent), and for w in
//!   I ∩ N[v] the set I - {w} is maximal in G - N[w]. Branches can emit
//!   the same set more than once, so each level deduplicates and the
//!   report carries the pre-dedup emission count.
//! * [`pivot`] — Bron-Kerbosch with pivoting run on the complement
//!   (maximal independent sets are maximal cliques of the complement);
//!   duplicate-free by construction and the fastest of the three.
//!
//! Every enumeration asserts the Moon-Moser bound on its result count and
//! aborts loudly if it is ever exceeded: that would mean a bug (or a
//! counterexample to a sixty-year-old theorem).

use std::error::Error;
use std::fmt;
use std::str::FromStr;

use crate::bound;
use crate::graph::{lift_through, Graph, VertexSet};

/// Subset-scan ceiling: 2^25 subsets keep the oracle near a second.
pub const ORACLE_MAX_VERTICES: usize = 25;

/// Selector among the three enumerators.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum EnumAlgorithm {
    Oracle,
    Branching,
    Pivot,
}

impl EnumAlgorithm {
    pub const ALL: [EnumAlgorithm; 3] = [
        EnumAlgorithm::Oracle,
        EnumAlgorithm::Branching,
        EnumAlgorithm::Pivot,
    ];
}

impl fmt::Display for EnumAlgorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EnumAlgorithm::Oracle => "oracle",
            EnumAlgorithm::Branching => "branching",
            EnumAlgorithm::Pivot => "pivot",
        })
    }
}

impl FromStr for EnumAlgorithm {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "oracle" => Ok(EnumAlgorithm::Oracle),
            "branching" => Ok(EnumAlgorithm::Branching),
            "pivot" => Ok(EnumAlgorithm::Pivot),
            other => Err(format!(
                "unknown algorithm '{other}' (expected oracle, branching, or pivot)"
            )),
        }
    }
}

/// Instrumentation counters attached to every enumeration result.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq)]
pub struct EnumStats {
    /// Sets emitted before deduplication. For the oracle this is the 2^n
    /// subsets scanned; for the branching enumerator the emissions of the
    /// top-level branches; for the pivot enumerator equal to the count
    /// (it never produces duplicates).
    pub candidates_generated: u64,
    /// Recursive invocations (0 for the non-recursive oracle).
    pub recursive_calls: u64,
    /// Deepest recursion level reached, root at 0.
    pub max_depth: u32,
}

/// An enumeration result: the maximal independent sets, deduplicated and
/// sorted ascending by bitset value, plus instrumentation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MisReport {
    pub sets: Vec<VertexSet>,
    pub stats: EnumStats,
}

impl MisReport {
    /// Number of maximal independent sets found.
    pub fn count(&self) -> u64 {
        self.sets.len() as u64
    }
}

/// Errors from enumeration entry points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EnumError {
    /// The subset-scan oracle refuses graphs above [`ORACLE_MAX_VERTICES`].
    TooLargeForOracle { n: usize },
}

impl fmt::Display for EnumError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EnumError::TooLargeForOracle { n } => write!(
                f,
                "oracle enumeration on {n} vertices exceeds the 2^{ORACLE_MAX_VERTICES} subset ceiling"
            ),
        }
    }
}

impl Error for EnumError {}

/// Aborts if a computed count ever exceeds the Moon-Moser bound.
fn assert_within_bound(n: usize, count: u64) {
    let bound = bound::mis_bound(n).expect("graph orders are far below the bound guard");
    assert!(
        count <= bound,
        "found {count} maximal independent sets on {n} vertices, above the \
         Moon-Moser bound {bound}; the enumerator is buggy"
    );
}

/// True iff no edge of `g` has both endpoints in `s`.
pub fn is_independent(g: &Graph, s: VertexSet) -> bool {
    assert!(
        s.is_subset_of(g.vertex_set()),
        "set not within vertex range"
    );
    s.iter().all(|u| (g.neighbors(u) & s).is_empty())
}

/// True iff `s` is independent and no vertex outside `s` can be added:
/// equivalently, the closed neighborhoods of `s` cover every vertex.
pub fn is_maximal_independent(g: &Graph, s: VertexSet) -> bool {
    if !is_independent(g, s) {
        return false;
    }
    let covered = s
        .iter()
        .fold(VertexSet::EMPTY, |acc, u| acc | g.closed_neighborhood(u));
    covered == g.vertex_set()
}

/// Ground-truth enumeration by scanning all 2^n subsets in ascending
/// bitset order (which is already the canonical output order).
pub fn oracle(g: &Graph) -> Result<MisReport, EnumError> {
    let n = g.vertex_count();
    if n > ORACLE_MAX_VERTICES {
        return Err(EnumError::TooLargeForOracle { n });
    }
    let mut sets = Vec::new();
    for code in 0..1u64 << n {
        let s = VertexSet::from_bits(code);
        if is_maximal_independent(g, s) {
            sets.push(s);
        }
    }
    assert_within_bound(n, sets.len() as u64);
    Ok(MisReport {
        sets,
        stats: EnumStats {
            candidates_generated: 1 << n,
            recursive_calls: 0,
            max_depth: 0,
        },
    })
}

/// One level of the branching recursion. Returns the deduplicated sets
/// (in this graph's local indexing) and the number of sets emitted at
/// this level before deduplication.
fn branch_rec(
    g: &Graph,
    depth: u32,
    calls: &mut u64,
    max_depth: &mut u32,
) -> (Vec<VertexSet>, u64) {
    *calls += 1;
    *max_depth = (*max_depth).max(depth);
    if g.vertex_count() == 0 {
        // The null graph has exactly one maximal independent set: {}.
        return (vec![VertexSet::EMPTY], 1);
    }
    let (v, _) = g.min_degree_vertex().expect("graph is non-empty");
    let mut sets = Vec::new();
    for w in g.closed_neighborhood(v) {
        let (rest, index_map) = g.delete_closed_neighborhood(w);
        let (sub_sets, _) = branch_rec(&rest, depth + 1, calls, max_depth);
        for j in sub_sets {
            sets.push(lift_through(j, &index_map).with(w));
        }
    }
    let emitted = sets.len() as u64;
    sets.sort_unstable();
    sets.dedup();
    (sets, emitted)
}

/// Enumeration by branching over the closed neighborhood of a
/// minimum-degree vertex, the recursion behind the extremal bound.
///
/// Branch order is ascending vertex index within N[v], and ties for the
/// minimum degree break to the lowest index, so runs are deterministic.
/// `candidates_generated` is the number of sets the root-level branches
/// emitted before deduplication, which equals the sum of the subproblem
/// counts over w in N[v].
pub fn branching(g: &Graph) -> MisReport {
    let mut calls = 0;
    let mut max_depth = 0;
    let (sets, emitted) = branch_rec(g, 0, &mut calls, &mut max_depth);
    assert_within_bound(g.vertex_count(), sets.len() as u64);
    MisReport {
        sets,
        stats: EnumStats {
            candidates_generated: emitted,
            recursive_calls: calls,
            max_depth,
        },
    }
}

/// Complement adjacency rows: `nonadj[v]` = vertices distinct from and
/// not adjacent to `v`.
fn complement_rows(g: &Graph) -> Vec<VertexSet> {
    let full = g.vertex_set();
    (0..g.vertex_count())
        .map(|v| (full - g.neighbors(v)).without(v))
        .collect()
}

/// Bron-Kerbosch with pivoting over the complement graph: `r` is the
/// growing independent set, `p` the candidates, `x` the excluded
/// vertices.
struct PivotSearch<'a, F: FnMut(VertexSet)> {
    nonadj: &'a [VertexSet],
    calls: u64,
    max_depth: u32,
    sink: F,
}

impl<F: FnMut(VertexSet)> PivotSearch<'_, F> {
    fn run_from_root(nonadj: &[VertexSet], sink: F) -> (u64, u32) {
        let full: VertexSet = (0..nonadj.len()).collect();
        let mut search = PivotSearch {
            nonadj,
            calls: 0,
            max_depth: 0,
            sink,
        };
        search.recurse(VertexSet::EMPTY, full, VertexSet::EMPTY, 0);
        (search.calls, search.max_depth)
    }

    fn recurse(&mut self, r: VertexSet, mut p: VertexSet, mut x: VertexSet, depth: u32) {
        self.calls += 1;
        self.max_depth = self.max_depth.max(depth);
        if p.is_empty() && x.is_empty() {
            (self.sink)(r);
            return;
        }
        // pivot: the vertex of p | x with the most non-neighbors in p,
        // lowest index on ties
        let mut pivot = usize::MAX;
        let mut best = 0usize;
        for u in p | x {
            let k = (self.nonadj[u] & p).len();
            if pivot == usize::MAX || k > best {
                pivot = u;
                best = k;
            }
        }
        for v in p - self.nonadj[pivot] {
            let nv = self.nonadj[v];
            self.recurse(r.with(v), p & nv, x & nv, depth + 1);
            p.remove(v);
            x.insert(v);
        }
    }
}

/// Duplicate-free enumeration via Bron-Kerbosch pivoting on the
/// complement graph; output re-sorted into canonical ascending order.
pub fn pivot(g: &Graph) -> MisReport {
    let nonadj = complement_rows(g);
    let mut sets = Vec::new();
    let (calls, max_depth) = PivotSearch::run_from_root(&nonadj, |s| sets.push(s));
    sets.sort_unstable();
    assert_within_bound(g.vertex_count(), sets.len() as u64);
    let count = sets.len() as u64;
    MisReport {
        sets,
        stats: EnumStats {
            candidates_generated: count,
            recursive_calls: calls,
            max_depth,
        },
    }
}

/// Runs the selected enumerator. All three produce identical `sets` on
/// identical input; only the statistics differ.
pub fn run(g: &Graph, algo: EnumAlgorithm) -> Result<MisReport, EnumError> {
    match algo {
        EnumAlgorithm::Oracle => oracle(g),
        EnumAlgorithm::Branching => Ok(branching(g)),
        EnumAlgorithm::Pivot => Ok(pivot(g)),
    }
}

/// Counts maximal independent sets without keeping them, where the
/// algorithm allows it. The oracle and pivot recursions carry bare
/// counters; the branching recursion must still materialize sets because
/// its duplicate elimination needs them.
pub fn count_mis(g: &Graph, algo: EnumAlgorithm) -> Result<u64, EnumError> {
    let n = g.vertex_count();
    match algo {
        EnumAlgorithm::Oracle => {
            if n > ORACLE_MAX_VERTICES {
                return Err(EnumError::TooLargeForOracle { n });
            }
            let mut count = 0u64;
            for code in 0..1u64 << n {
                if is_maximal_independent(g, VertexSet::from_bits(code)) {
                    count += 1;
                }
            }
            assert_within_bound(n, count);
            Ok(count)
        }
        EnumAlgorithm::Branching => Ok(branching(g).count()),
        EnumAlgorithm::Pivot => {
            let nonadj = complement_rows(g);
            let mut count = 0u64;
            PivotSearch::run_from_root(&nonadj, |_| count += 1);
            assert_within_bound(n, count);
            Ok(count)
        }
    }
}

// ============================================================================
// Tests
// ============================================================================

#[cfg(test)]
mod tests {
    use super::*;

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }

    #[test]
    fn independence_checks() {
        let k3 = Graph::complete(3).unwrap();
        assert!(is_independent(&k3, set(&[0])));
        assert!(!is_independent(&k3, set(&[0, 1])));
        let m7 = Graph::moon_moser(7).unwrap();
        assert!(is_independent(&m7, set(&[0, 4])));
    }

    #[test]
    fn maximality_checks() {
        let p3 = Graph::path(3).unwrap();
        assert!(is_maximal_independent(&p3, set(&[1])));
        assert!(!is_maximal_independent(&p3, set(&[0])));
        assert!(is_maximal_independent(&p3, set(&[0, 2])));
        // the empty set is maximal only in the null graph
        assert!(is_maximal_independent(
            &Graph::edgeless(0).unwrap(),
            VertexSet::EMPTY
        ));
        assert!(!is_maximal_independent(
            &Graph::edgeless(1).unwrap(),
            VertexSet::EMPTY
        ));
    }

    #[test]
    fn oracle_results() {
        let empty = oracle(&Graph::edgeless(0).unwrap()).unwrap();
        assert_eq!(empty.sets, vec![VertexSet::EMPTY]);
        assert_eq!(empty.count(), 1);
        assert_eq!(empty.stats.candidates_generated, 1);

        let k3 = oracle(&Graph::complete(3).unwrap()).unwrap();
        assert_eq!(k3.sets, vec![set(&[0]), set(&[1]), set(&[2])]);
        assert_eq!(k3.stats.candidates_generated, 8);

        assert_eq!(oracle(&Graph::cycle(5).unwrap()).unwrap().count(), 5);
        assert_eq!(oracle(&Graph::moon_moser(7).unwrap()).unwrap().count(), 12);

        assert_eq!(
            oracle(&Graph::edgeless(26).unwrap()),
            Err(EnumError::TooLargeForOracle { n: 26 })
        );
    }

    #[test]
    fn branching_results() {
        let k1 = branching(&Graph::complete(1).unwrap());
        assert_eq!(k1.sets, vec![set(&[0])]);
        assert_eq!(k1.stats.candidates_generated, 1);

        let k3 = branching(&Graph::complete(3).unwrap());
        assert_eq!(k3.count(), 3);
        assert_eq!(k3.stats.candidates_generated, 3);

        // P_3 branches on v = 0: w = 0 keeps {2}, w = 1 empties the graph.
        let p3 = branching(&Graph::path(3).unwrap());
        assert_eq!(p3.sets, vec![set(&[1]), set(&[0, 2])]);

        assert_eq!(branching(&Graph::moon_moser(9).unwrap()).count(), 27);
    }

    #[test]
    fn branching_duplicate_accounting_on_c5() {
        // C_5 emits {1,4} in both the w=1 and w=4 branches of root v=0.
        let g = Graph::cycle(5).unwrap();
        let report = branching(&g);
        assert_eq!(report.count(), 5);
        assert_eq!(report.stats.candidates_generated, 6);

        let (v, _) = g.min_degree_vertex().unwrap();
        let nv = g.closed_neighborhood(v);
        let overlap: u64 = report.sets.iter().map(|&s| (s & nv).len() as u64 - 1).sum();
        assert_eq!(report.stats.candidates_generated - report.count(), overlap);
        assert!(report.sets.iter().all(|&s| !(s & nv).is_empty()));
    }

    #[test]
    fn pivot_results() {
        assert_eq!(pivot(&Graph::complete(3).unwrap()).count(), 3);
        let edgeless = pivot(&Graph::edgeless(4).unwrap());
        assert_eq!(edgeless.sets, vec![set(&[0, 1, 2, 3])]);
        assert_eq!(pivot(&Graph::cycle(5).unwrap()).count(), 5);
        assert_eq!(
            pivot(&Graph::edgeless(0).unwrap()).sets,
            vec![VertexSet::EMPTY]
        );
    }

    #[test]
    fn count_matches_enumeration() {
        assert_eq!(
            count_mis(&Graph::complete(4).unwrap(), EnumAlgorithm::Pivot).unwrap(),
            4
        );
        assert_eq!(
            count_mis(&Graph::moon_moser(10).unwrap(), EnumAlgorithm::Branching).unwrap(),
            36
        );
        assert_eq!(
            count_mis(&Graph::cycle(5).unwrap(), EnumAlgorithm::Oracle).unwrap(),
            5
        );
    }

    #[test]
    fn enumerators_agree_on_fixed_graphs() {
        for g in [
            Graph::edgeless(0).unwrap(),
            Graph::edgeless(5).unwrap(),
            Graph::complete(6).unwrap(),
            Graph::path(6).unwrap(),
            Graph::cycle(7).unwrap(),
            Graph::moon_moser(8).unwrap(),
        ] {
            let expected = oracle(&g).unwrap().sets;
            assert_eq!(branching(&g).sets, expected);
            assert_eq!(pivot(&g).sets, expected);
            for algo in EnumAlgorithm::ALL {
                assert_eq!(count_mis(&g, algo).unwrap(), expected.len() as u64);
            }
        }
    }

    #[test]
    fn every_reported_set_is_maximal() {
        for code in 0..1u64 << 10 {
            let g = Graph::from_edge_code(5, code);
            let report = branching(&g);
            for &s in &report.sets {
                assert!(is_maximal_independent(&g, s), "graph {code}, set {s:?}");
            }
            // canonical order, no duplicates
            assert!(report.sets.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn algorithm_names_round_trip() {
        for algo in EnumAlgorithm::ALL {
            assert_eq!(algo.to_string().parse::<EnumAlgorithm>().unwrap(), algo);
        }
        assert!("fast".parse::<EnumAlgorithm>().is_err());
    }
}
