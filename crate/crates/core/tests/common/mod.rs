//! Independent oracles shared by the integration tests. Nothing here calls
//! the library routine it is checking.

#![allow(dead_code)]

use std::collections::BTreeSet;

use crcodes::cr::{quotient_of, Equitability};
use crcodes::search::{search_exact, SearchStatus, SearchTarget};
use crcodes::{ConnectingSet, FieldOrder, Graph, IntersectionArray, Partition, QuotientMatrix, Word};
use itertools::Itertools;
use nalgebra::DMatrix;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn adjacency(g: &Graph) -> DMatrix<f64> {
    let v = g.order();
    let mut a = DMatrix::zeros(v, v);
    for x in 0..v {
        for y in g.neighbors(x as u32) {
            a[(x, y as usize)] += 1.0;
        }
    }
    a
}

/// Compares `g.spectrum()` with the eigenvalues of the dense adjacency matrix.
pub fn check_spectrum_dense(g: &Graph) -> Result<(), String> {
    let mut dense: Vec<f64> = adjacency(g).symmetric_eigen().eigenvalues.iter().copied().collect();
    dense.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let mut listed: Vec<f64> = Vec::new();
    for (lambda, m) in g.spectrum().pairs() {
        listed.extend(std::iter::repeat_n(lambda as f64, m as usize));
    }
    listed.sort_by(|a, b| a.partial_cmp(b).unwrap());
    if listed.len() != dense.len() {
        return Err(format!("{} eigenvalues listed for {} vertices", listed.len(), dense.len()));
    }
    match dense.iter().zip(&listed).find(|(d, l)| (*d - *l).abs() > 1e-6) {
        Some((d, l)) => Err(format!("dense eigenvalue {d} vs listed {l}")),
        None => Ok(()),
    }
}

/// Eigenvalues of a tridiagonal quotient with positive off-diagonals, via the
/// similar symmetric matrix.
pub fn tridiagonal_eigenvalues(q: &QuotientMatrix) -> Vec<f64> {
    let t = q.size();
    let mut m = DMatrix::zeros(t, t);
    for i in 0..t {
        m[(i, i)] = q.get(i, i) as f64;
        if i + 1 < t {
            let s = (q.get(i, i + 1) as f64 * q.get(i + 1, i) as f64).sqrt();
            m[(i, i + 1)] = s;
            m[(i + 1, i)] = s;
        }
    }
    m.symmetric_eigen().eigenvalues.iter().copied().collect()
}

pub fn quotient_eigenvalues_in(q: &QuotientMatrix, allowed: &[f64]) -> bool {
    tridiagonal_eigenvalues(q).iter().all(|e| allowed.iter().any(|a| (a - e).abs() < 1e-6))
}

/// Layer sizes `k_i = v N_i / ΣN` with `N_i = b_0⋯b_{i−1} c_{i+1}⋯c_ρ` must be
/// integers.
pub fn tridiagonal_cells_integral(a: &IntersectionArray, v: u64) -> bool {
    let rho = a.rho();
    let n: Vec<u128> = (0..=rho)
        .map(|i| {
            let b: u128 = a.b[..i].iter().map(|&x| x as u128).product();
            let c: u128 = a.c[i..].iter().map(|&x| x as u128).product();
            b * c
        })
        .collect();
    let total: u128 = n.iter().sum();
    n.iter().all(|&ni| (v as u128 * ni).is_multiple_of(total))
}

/// Row sums, double counting, and agreement with the sizes derived from the
/// matrix alone.
pub fn check_quotient_axioms(q: &QuotientMatrix, sizes: &[u64], degree: u32) -> Result<(), String> {
    let t = q.size();
    if sizes.len() != t {
        return Err(format!("{} sizes for {t} cells", sizes.len()));
    }
    for i in 0..t {
        if q.row(i).iter().sum::<u32>() != degree {
            return Err(format!("row {i} of {q} does not sum to {degree}"));
        }
        for j in 0..t {
            if sizes[i] * q.get(i, j) as u64 != sizes[j] * q.get(j, i) as u64 {
                return Err(format!("double counting fails between cells {i} and {j} of {q}"));
            }
        }
    }
    let total: u64 = sizes.iter().sum();
    if q.cell_sizes(total).as_deref() != Some(sizes) {
        return Err(format!("sizes {sizes:?} disagree with {q}"));
    }
    Ok(())
}

/// Random Cayley graph on `F_q^k`: a random set of projective points, closed
/// under nonzero scalars.
pub fn random_cayley(q: FieldOrder, k: usize, rng: &mut ChaCha8Rng) -> Graph {
    let size = (q.get() as u64).pow(k as u32);
    let mut points: Vec<Word> = (1..size).map(|i| Word::from_index(q, k, i)).filter(|w| w.normalized() == *w).collect();
    points.shuffle(rng);
    let take = rng.gen_range(2..=points.len() / 2);
    let words: Vec<Word> = points[..take].iter().flat_map(|p| q.units().map(move |a| p.scale(a))).collect();
    Graph::cayley(ConnectingSet::new(q, k, &words).unwrap())
}

/// Quotients of all equitable two-cell partitions `{C, V∖C}` with `0 ∈ C` and
/// `|C| ≤ max_size`, found by trying every subset.
pub fn naive_two_cell_quotients(g: &Graph, max_size: usize) -> BTreeSet<Vec<Vec<u32>>> {
    let v = g.order() as u32;
    let mut out = BTreeSet::new();
    for m in 1..=max_size.min(v as usize - 1) {
        for rest in (1..v).combinations(m - 1) {
            let mut cell: Vec<u32> = vec![0];
            cell.extend(rest);
            let others: Vec<u32> = (0..v).filter(|x| !cell.contains(x)).collect();
            let p = Partition::from_cells(v as usize, &[cell, others]).unwrap();
            if let Equitability::Equitable(q) = quotient_of(g, &p).unwrap() {
                out.insert(q.rows());
            }
        }
    }
    out
}

/// Every two-cell target with first cell of size at most `max_size`.
pub fn two_cell_targets(g: &Graph, max_size: usize) -> Vec<SearchTarget> {
    let d = g.degree() as u32;
    let v = g.order() as u64;
    let mut out = Vec::new();
    for a in 0..=d {
        for c in 1..=d {
            if a == d {
                continue;
            }
            let q = QuotientMatrix::from_rows(&[vec![a, d - a], vec![c, d - c]]).unwrap();
            let t = SearchTarget::new(q, v);
            if t.cell_sizes.as_ref().is_some_and(|s| s[0] as usize <= max_size) {
                out.push(t);
            }
        }
    }
    out
}

/// Runs exact search on every small two-cell target of `graphs` random
/// vertex-transitive graphs and compares with brute force. Returns the number
/// of targets checked.
pub fn exact_vs_naive_small(graphs: usize, max_size: usize) -> Result<usize, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut checked = 0;
    for i in 0..graphs {
        let g = if i % 2 == 0 {
            random_cayley(FieldOrder::GF3, 3, &mut rng)
        } else {
            random_cayley(FieldOrder::GF2, 4, &mut rng)
        };
        let naive = naive_two_cell_quotients(&g, max_size);
        for t in two_cell_targets(&g, max_size) {
            let out = search_exact(&g, &t, 10_000_000).map_err(|e| e.to_string())?;
            let expected = naive.contains(&t.quotient.rows());
            let found = match out.status {
                SearchStatus::Found(_) => true,
                SearchStatus::ExhaustedNoSolution => false,
                SearchStatus::BudgetExceeded => return Err(format!("budget exceeded on {}", t.quotient)),
            };
            if found != expected {
                return Err(format!("graph {i}: search says {found}, brute force {expected} for {}", t.quotient));
            }
            checked += 1;
        }
    }
    Ok(checked)
}
