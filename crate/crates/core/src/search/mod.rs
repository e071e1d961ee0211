//! Searching for perfect colourings (equitable partitions) with a prescribed
//! quotient matrix, and hence for completely regular codes.

mod exact;
mod heuristic;
mod sibling;

use std::time::Duration;

pub use exact::search_exact;
pub use heuristic::{search_heuristic, HeuristicOptions, Strategy};
pub use sibling::{find_sibling_partition, SiblingPartition};

use crate::cr::{quotient_of, Code, Equitability, IntersectionArray, Partition, QuotientMatrix};
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const DEFAULT_NODE_BUDGET: u64 = 100_000_000;
pub const DEFAULT_MOVE_BUDGET: u64 = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchTarget {
    pub quotient: QuotientMatrix,
    /// `None` when double counting admits no integral cell sizes.
    pub cell_sizes: Option<Vec<u64>>,
    pub require_independent: bool,
}

impl SearchTarget {
    pub fn new(quotient: QuotientMatrix, order: u64) -> Self {
        let cell_sizes = quotient.cell_sizes(order);
        SearchTarget { quotient, cell_sizes, require_independent: false }
    }

    pub fn from_array(a: &IntersectionArray, g: &Graph) -> Result<Self> {
        Ok(Self::new(a.quotient(g.degree() as u32)?, g.order() as u64))
    }

    pub fn independent(mut self) -> Self {
        self.require_independent = true;
        self
    }

    pub fn num_cells(&self) -> usize {
        self.quotient.size()
    }

    fn check(&self, g: &Graph) -> Result<()> {
        if self.quotient.row_sum() != Some(g.degree() as u32) {
            return Err(Error::InvalidArgument(format!("target rows must sum to the degree {}", g.degree())));
        }
        if self.num_cells() > 8 {
            return Err(Error::InvalidArgument("at most 8 cells are supported".into()));
        }
        if !g.is_explicit() {
            return Err(Error::NotExplicit);
        }
        Ok(())
    }

    /// Whether trivially unsatisfiable: no integral sizes, or an independent
    /// code requested while the quotient has loops inside cell 0.
    fn infeasible(&self) -> bool {
        self.cell_sizes.is_none() || (self.require_independent && self.quotient.get(0, 0) != 0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Found {
    /// Cell 0 of the colouring.
    pub code: Code,
    pub partition: Partition,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchStatus {
    Found(Found),
    ExhaustedNoSolution,
    BudgetExceeded,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SearchStats {
    /// Search nodes (exact) or attempted moves (heuristic).
    pub nodes: u64,
    /// Heuristic restarts actually run.
    pub restarts: u64,
    pub elapsed: Duration,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOutcome {
    pub status: SearchStatus,
    pub stats: SearchStats,
}

impl SearchOutcome {
    pub fn found(&self) -> Option<&Found> {
        match &self.status {
            SearchStatus::Found(f) => Some(f),
            _ => None,
        }
    }
}

/// Re-verifies a colouring from scratch; engines call this before reporting.
fn confirm(g: &Graph, t: &SearchTarget, colour: Vec<u32>) -> Found {
    let p = Partition::from_assignment(colour, t.num_cells()).expect("engine produced a partition");
    match quotient_of(g, &p).expect("partition matches graph") {
        Equitability::Equitable(q) => assert_eq!(q, t.quotient, "engine returned a wrong quotient"),
        Equitability::Inequitable(w) => panic!("engine returned an inequitable partition: {w:?}"),
    }
    let code = Code::new(p.cells().swap_remove(0)).expect("cell 0 is nonempty");
    Found { code, partition: p }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cr::verify_cr;
    use crate::gf::{CheckMatrix, FieldOrder, DEFAULT_BUDGET};

    fn fixture(text: &str) -> Graph {
        Graph::syndrome(&CheckMatrix::parse(text, FieldOrder::GF3).unwrap())
    }

    #[test]
    fn exact_finds_radius_two_code() {
        let g = fixture(include_str!("../../fixtures/cr21_4.H"));
        let t = SearchTarget::from_array(&"{21,4;2,21}".parse().unwrap(), &g).unwrap();
        let out = search_exact(&g, &t, DEFAULT_NODE_BUDGET).unwrap();
        let f = out.found().expect("found");
        assert_eq!(f.code.len(), 6);
        let r = verify_cr(&g, &f.code).unwrap().unwrap();
        assert_eq!(r.quotient, t.quotient);
    }

    #[test]
    fn exact_finds_ten_eight_code() {
        let g = fixture(include_str!("../../fixtures/cr10_8.H"));
        let t = SearchTarget::new(QuotientMatrix::from_rows(&[vec![4, 10], vec![8, 6]]).unwrap(), 81);
        let out = search_exact(&g, &t, DEFAULT_NODE_BUDGET).unwrap();
        let f = out.found().expect("found");
        assert_eq!(verify_cr(&g, &f.code).unwrap().unwrap().array.to_string(), "{10;8}");
    }

    #[test]
    fn non_integral_sizes_exhaust_immediately() {
        let g = fixture(include_str!("../../fixtures/cr21_4.H"));
        // cell sizes 81·x/(x+y) not integral for {20;2}: 81·2/22
        let t = SearchTarget::from_array(&"{20;2}".parse().unwrap(), &g).unwrap();
        let out = search_exact(&g, &t, 10).unwrap();
        assert_eq!(out.status, SearchStatus::ExhaustedNoSolution);
        assert_eq!(out.stats.nodes, 0);
    }

    #[test]
    fn single_vertex_of_complete_graph() {
        let g = Graph::hamming(1, FieldOrder::GF2, DEFAULT_BUDGET).unwrap();
        let t = SearchTarget::new(QuotientMatrix::from_rows(&[vec![0, 1], vec![1, 0]]).unwrap(), 2);
        assert!(search_exact(&g, &t, 10).unwrap().found().is_some());
        // K_4 as the Cayley graph on GF(2)^2 with all nonzero elements
        let all: Vec<_> =
            ["01", "10", "11"].iter().map(|w| crate::gf::Word::parse(FieldOrder::GF2, w).unwrap()).collect();
        let k4 = Graph::cayley(crate::graph::ConnectingSet::new(FieldOrder::GF2, 2, &all).unwrap());
        assert_eq!(k4.degree(), 3);
        let t = SearchTarget::new(QuotientMatrix::from_rows(&[vec![0, 3], vec![1, 2]]).unwrap(), 4);
        assert_eq!(t.cell_sizes, Some(vec![1, 3]));
        let out = search_heuristic(&k4, &t, 7, &HeuristicOptions::default()).unwrap();
        assert_eq!(out.found().unwrap().code.len(), 1);
    }

    #[test]
    fn heuristic_is_deterministic() {
        let g = fixture(include_str!("../../fixtures/cr10_8.H"));
        let t = SearchTarget::new(QuotientMatrix::from_rows(&[vec![4, 10], vec![8, 6]]).unwrap(), 81);
        let opts = HeuristicOptions::default();
        let a = search_heuristic(&g, &t, 11, &opts).unwrap();
        let b = search_heuristic(&g, &t, 11, &opts).unwrap();
        assert_eq!(a.status, b.status);
        assert_eq!((a.stats.nodes, a.stats.restarts), (b.stats.nodes, b.stats.restarts));
        assert!(a.found().is_some());
    }

    #[test]
    fn sibling_partition_of_radius_two_code() {
        let g = fixture(include_str!("../../fixtures/cr21_4.H"));
        let c = crate::cr::CodeFile::parse(include_str!("../../fixtures/cr21_4.C"), FieldOrder::GF3).unwrap().code;
        let s = find_sibling_partition(&g, &c, 1_000_000).unwrap().expect("partition exists");
        assert_eq!(s.quotient.rows(), vec![vec![1, 0, 0, 21], vec![0, 1, 0, 21], vec![0, 0, 1, 21], vec![2, 2, 2, 16]]);
        assert_eq!(s.partitions_found, 1);
        assert!(s.exhaustive);
    }
}
