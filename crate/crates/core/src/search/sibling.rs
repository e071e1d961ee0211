//! Tiling the outermost layer `C^(ρ)` of a CR code by codes with the same
//! intersection array.

use itertools::Itertools;

use crate::cr::{distance_partition, quotient_of, verify_cr, Code, Equitability, Partition, QuotientMatrix};
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SiblingPartition {
    /// `C, C′, C″, …` followed by the inner layers `C^(1), …, C^(ρ−1)`.
    pub partition: Partition,
    pub quotient: QuotientMatrix,
    /// The codes tiling `C^(ρ)`, in increasing order.
    pub siblings: Vec<Code>,
    /// Number of distinct tilings of `C^(ρ)` (all of them, when exhaustive).
    pub partitions_found: u64,
    pub exhaustive: bool,
}

/// Looks for a partition of the outermost layer of `c` into codes with the
/// same intersection array, trying at most `budget` candidate subsets.
/// Returns the lexicographically first tiling and the number of tilings.
pub fn find_sibling_partition(g: &Graph, c: &Code, budget: u64) -> Result<Option<SiblingPartition>> {
    let report = verify_cr(g, c)?.ok_or_else(|| Error::InvalidArgument("code is not completely regular".into()))?;
    if report.rho < 1 {
        return Err(Error::InvalidArgument("code has covering radius 0".into()));
    }
    let dp = distance_partition(g, c)?;
    let outer = dp.layers[report.rho].clone();
    let m = c.len();
    if outer.len() % m != 0 {
        return Ok(None);
    }
    if binomial(outer.len() as u64, m as u64).is_none_or(|b| b > budget) {
        return Err(Error::InvalidArgument(format!(
            "{} choose {m} candidate subsets exceed the budget of {budget}",
            outer.len()
        )));
    }
    let candidates: Vec<Vec<u32>> = outer
        .iter()
        .copied()
        .combinations(m)
        .filter(|s| {
            let code = Code::new(s.clone()).expect("nonempty");
            matches!(verify_cr(g, &code), Ok(Some(r)) if r.array == report.array)
        })
        .collect();
    // exact cover of the layer by candidate subsets
    let index_of = |v: u32| outer.binary_search(&v).expect("vertex of the layer");
    let masks: Vec<u128> = if outer.len() <= 128 {
        candidates.iter().map(|s| s.iter().fold(0u128, |acc, &v| acc | 1 << index_of(v))).collect()
    } else {
        return Err(Error::InvalidArgument("outer layer too large for exact cover".into()));
    };
    let full: u128 = if outer.len() == 128 { u128::MAX } else { (1u128 << outer.len()) - 1 };
    let mut first: Option<Vec<usize>> = None;
    let mut count = 0u64;
    cover(&masks, full, &mut Vec::new(), &mut first, &mut count);
    let Some(chosen) = first else {
        return Ok(None);
    };
    let siblings: Vec<Code> = chosen.iter().map(|&i| Code::new(candidates[i].clone()).expect("nonempty")).collect();
    let mut cells: Vec<Vec<u32>> = vec![c.vertices().to_vec()];
    cells.extend(siblings.iter().map(|s| s.vertices().to_vec()));
    cells.extend(dp.layers[1..report.rho].iter().cloned());
    let partition = Partition::from_cells(g.order(), &cells)?;
    let Equitability::Equitable(quotient) = quotient_of(g, &partition)? else {
        return Ok(None);
    };
    Ok(Some(SiblingPartition { partition, quotient, siblings, partitions_found: count, exhaustive: true }))
}

fn cover(masks: &[u128], remaining: u128, stack: &mut Vec<usize>, first: &mut Option<Vec<usize>>, count: &mut u64) {
    if remaining == 0 {
        *count += 1;
        if first.is_none() {
            let mut tiling = stack.clone();
            tiling.sort_unstable();
            *first = Some(tiling);
        }
        return;
    }
    // branching on the lowest uncovered vertex visits each tiling once
    let low = remaining.trailing_zeros();
    for (i, &m) in masks.iter().enumerate() {
        if m & (1 << low) != 0 && m & !remaining == 0 {
            stack.push(i);
            cover(masks, remaining & !m, stack, first, count);
            stack.pop();
        }
    }
}

fn binomial(n: u64, k: u64) -> Option<u64> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    (0..k).try_fold(1u64, |acc, i| acc.checked_mul(n - i).map(|x| x / (i + 1)))
}
