//! Putative intersection arrays: quotient eigenvalues, cell sizes and the
//! filters used to prune candidate parameters before searching.

use std::fmt;

use num_rational::Ratio;
use rayon::prelude::*;

use crate::cr::{IntersectionArray, QuotientMatrix};
use crate::graph::Spectrum;

/// Cell sizes `|C^(0)|, …, |C^(ρ)|` forced by double counting on a
/// `degree`-regular graph with `v` vertices.
pub fn cell_sizes(a: &IntersectionArray, degree: u32, v: u64) -> Option<Vec<u64>> {
    if a.rho() == 0 {
        return Some(vec![v]);
    }
    a.quotient(degree).ok()?.cell_sizes(v)
}

/// Characteristic polynomial `det(xI − M)`, coefficients from `x^0` upward.
pub fn characteristic_polynomial(m: &QuotientMatrix) -> Vec<i128> {
    // Faddeev–LeVerrier: every division below is exact over the integers.
    let n = m.size();
    let a: Vec<i128> = (0..n * n).map(|i| m.get(i / n, i % n) as i128).collect();
    let mul = |x: &[i128], y: &[i128]| -> Vec<i128> {
        let mut out = vec![0i128; n * n];
        for i in 0..n {
            for k in 0..n {
                let xik = x[i * n + k];
                if xik != 0 {
                    for j in 0..n {
                        out[i * n + j] += xik * y[k * n + j];
                    }
                }
            }
        }
        out
    };
    let mut coeffs = vec![0i128; n + 1];
    coeffs[n] = 1;
    let mut mk = vec![0i128; n * n];
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{n-k+1} I
        let mut next = mul(&a, &mk);
        for i in 0..n {
            next[i * n + i] += coeffs[n - k + 1];
        }
        mk = next;
        let am = mul(&a, &mk);
        let trace: i128 = (0..n).map(|i| am[i * n + i]).sum();
        coeffs[n - k] = -trace / k as i128;
    }
    coeffs
}

/// Eigenvalues of a quotient matrix: integer roots with multiplicity, and
/// the number of remaining (non-integer, hence irrational or complex) roots.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuotientEigenvalues {
    pub integer: Vec<i64>,
    pub irrational: usize,
}

impl QuotientEigenvalues {
    pub fn all_integer(&self) -> bool {
        self.irrational == 0
    }

    /// Distinct integer eigenvalues in increasing order.
    pub fn distinct(&self) -> Vec<i64> {
        let mut d = self.integer.clone();
        d.dedup();
        d
    }
}

impl fmt::Display for QuotientEigenvalues {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.distinct().iter().map(i64::to_string).collect();
        if self.irrational > 0 {
            parts.push(format!("{} irrational", self.irrational));
        }
        write!(f, "{}", parts.join(", "))
    }
}

pub fn quotient_eigenvalues(m: &QuotientMatrix) -> QuotientEigenvalues {
    let mut poly = characteristic_polynomial(m);
    // Every eigenvalue is bounded by the largest absolute row sum.
    let bound = (0..m.size()).map(|i| m.row(i).iter().map(|&x| x as i64).sum::<i64>()).max().unwrap_or(0);
    let mut integer = Vec::new();
    for x in -bound..=bound {
        while poly.len() > 1 && eval(&poly, x as i128) == 0 {
            poly = deflate(&poly, x as i128);
            integer.push(x);
        }
    }
    QuotientEigenvalues { integer, irrational: poly.len() - 1 }
}

/// Whether the characteristic polynomial splits over the spectrum's
/// eigenvalues; a cheap prefilter for [`quotient_eigenvalues`].
fn roots_within(m: &QuotientMatrix, spectrum: &Spectrum) -> bool {
    let mut poly = characteristic_polynomial(m);
    for x in spectrum.eigenvalues() {
        while poly.len() > 1 && eval(&poly, x as i128) == 0 {
            poly = deflate(&poly, x as i128);
        }
    }
    poly.len() == 1
}

fn eval(poly: &[i128], x: i128) -> i128 {
    poly.iter().rev().fold(0, |acc, &c| acc * x + c)
}

/// Divides by `(t − x)`, assuming `x` is a root.
fn deflate(poly: &[i128], x: i128) -> Vec<i128> {
    let n = poly.len() - 1;
    let mut out = vec![0i128; n];
    let mut carry = 0i128;
    for i in (1..=n).rev() {
        carry = poly[i] + carry * x;
        out[i - 1] = carry;
    }
    out
}

/// Quotient matrices of the distance-`i` graphs, `p_i(B)`, where `p_i` are
/// the distance polynomials of a distance-regular graph with array `graph`.
/// `None` if some entry is not a nonnegative integer.
pub fn distance_quotients(b: &QuotientMatrix, graph: &IntersectionArray) -> Option<Vec<Vec<Vec<i128>>>> {
    type Q = Ratio<i128>;
    let n = b.size();
    let k = graph.b.first().copied().unwrap_or(0) as i128;
    let bm: Vec<Vec<Q>> = (0..n).map(|i| (0..n).map(|j| Q::from(b.get(i, j) as i128)).collect()).collect();
    let prev0: Vec<Vec<Q>> = (0..n).map(|i| (0..n).map(|j| Q::from(i128::from(i == j))).collect()).collect();
    let matmul = |x: &Vec<Vec<Q>>, y: &Vec<Vec<Q>>| -> Vec<Vec<Q>> {
        (0..n).map(|i| (0..n).map(|j| (0..n).fold(Q::from(0), |acc, l| acc + x[i][l] * y[l][j])).collect()).collect()
    };
    let d = graph.rho();
    let mut prev = prev0;
    let mut cur = bm.clone();
    let mut out = Vec::new();
    for i in 1..d {
        // A A_i = b_{i-1} A_{i-1} + a_i A_i + c_{i+1} A_{i+1}
        let bi1 = Q::from(graph.b[i - 1] as i128);
        let bi = if i < d { graph.b[i] as i128 } else { 0 };
        let ai = Q::from(k - bi - graph.c[i - 1] as i128);
        let ci1 = Q::from(graph.c[i] as i128);
        let prod = matmul(&bm, &cur);
        let next: Vec<Vec<Q>> =
            (0..n).map(|r| (0..n).map(|c| (prod[r][c] - ai * cur[r][c] - bi1 * prev[r][c]) / ci1).collect()).collect();
        let as_int: Option<Vec<Vec<i128>>> = next
            .iter()
            .map(|row| row.iter().map(|x| (x.is_integer() && *x.numer() >= 0).then(|| x.to_integer())).collect())
            .collect();
        out.push(as_int?);
        prev = cur;
        cur = next;
    }
    Some(out)
}

/// `τ = (b + c) / (q n)` for a covering-radius-one array realised in `H(n, q)`.
pub fn tau(a: &IntersectionArray, q: u8, n: usize) -> Option<Ratio<u64>> {
    (a.rho() == 1 && n > 0).then(|| Ratio::new((a.b[0] + a.c[0]) as u64, q as u64 * n as u64))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PutativeArray {
    pub array: IntersectionArray,
    pub cell_sizes: Option<Vec<u64>>,
    pub eigenvalues: QuotientEigenvalues,
    pub monotone: bool,
    pub eigenvalues_contained: bool,
    pub integral_cells: bool,
    pub tau: Option<Ratio<u64>>,
}

impl PutativeArray {
    /// Evaluates every flag for `array` on a graph with the given data.
    pub fn evaluate(a: IntersectionArray, spectrum: &Spectrum, degree: u32, v: u64) -> Option<Self> {
        let quotient = a.quotient(degree).ok()?;
        let eigenvalues = quotient_eigenvalues(&quotient);
        let eigenvalues_contained =
            eigenvalues.all_integer() && eigenvalues.integer.iter().all(|&x| spectrum.contains(x));
        let cell_sizes = quotient.cell_sizes(v);
        Some(PutativeArray {
            monotone: is_monotone(&a),
            integral_cells: cell_sizes.is_some(),
            cell_sizes,
            eigenvalues,
            eigenvalues_contained,
            tau: None,
            array: a,
        })
    }

    pub fn passes(&self, monotone_required: bool) -> bool {
        (self.monotone || !monotone_required) && self.eigenvalues_contained && self.integral_cells
    }
}

impl fmt::Display for PutativeArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}  eigenvalues: {}", self.array, self.eigenvalues)?;
        if let Some(sizes) = &self.cell_sizes {
            let s: Vec<String> = sizes.iter().map(u64::to_string).collect();
            write!(f, "  cells: ({})", s.join(","))?;
        }
        if let Some(t) = self.tau {
            write!(f, "  tau: {t}")?;
        }
        Ok(())
    }
}

pub fn is_monotone(a: &IntersectionArray) -> bool {
    a.b.windows(2).all(|w| w[0] >= w[1]) && a.c.windows(2).all(|w| w[0] <= w[1])
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FeasibilityOptions {
    pub monotone: bool,
    /// Keep only covering-radius-one arrays whose second eigenvalue is this.
    pub eigenvalue: Option<i64>,
    /// For covering radius one, list `{b;c}` only with `b ≥ c`: the complement
    /// of a `{b;c}` code is a `{c;b}` code.
    pub complement_pairs: bool,
    /// Require integral distance-`i` quotients, given the graph's own array
    /// (only meaningful for distance-regular graphs).
    pub distance_integrality: Option<IntersectionArray>,
    /// `(q, n)` for reporting τ on covering-radius-one arrays.
    pub hamming_length: Option<(u8, usize)>,
}

impl Default for FeasibilityOptions {
    fn default() -> Self {
        FeasibilityOptions {
            monotone: true,
            eigenvalue: None,
            complement_pairs: true,
            distance_integrality: None,
            hamming_length: None,
        }
    }
}

/// All arrays of covering radius `1..=rho_max` passing the filters, ordered
/// by `(ρ, b, c)`.
pub fn enumerate_putative(
    spectrum: &Spectrum,
    degree: u32,
    v: u64,
    rho_max: usize,
    opts: &FeasibilityOptions,
) -> Vec<PutativeArray> {
    let mut out = Vec::new();
    for rho in 1..=rho_max {
        let candidates = grid(rho, degree, opts.monotone);
        let mut found: Vec<PutativeArray> = candidates
            .into_par_iter()
            .filter_map(|(b, c)| {
                let a = IntersectionArray { b, c };
                if rho == 1 {
                    if opts.complement_pairs && a.b[0] < a.c[0] {
                        return None;
                    }
                    if let Some(theta) = opts.eigenvalue {
                        if degree as i64 - (a.b[0] + a.c[0]) as i64 != theta {
                            return None;
                        }
                    }
                }
                let quotient = a.quotient(degree).ok()?;
                quotient.cell_sizes(v)?;
                if !roots_within(&quotient, spectrum) {
                    return None;
                }
                let mut p = PutativeArray::evaluate(a, spectrum, degree, v)?;
                if !p.passes(opts.monotone) {
                    return None;
                }
                if let Some(g) = &opts.distance_integrality {
                    distance_quotients(&p.array.quotient(degree).ok()?, g)?;
                }
                if let Some((q, n)) = opts.hamming_length {
                    p.tau = tau(&p.array, q, n);
                }
                Some(p)
            })
            .collect();
        found.sort_by(|x, y| (&x.array.b, &x.array.c).cmp(&(&y.array.b, &y.array.c)));
        out.extend(found);
    }
    out
}

/// Candidate `(b, c)` vectors with entries in `[1, degree]` and nonnegative
/// diagonal.
fn grid(rho: usize, degree: u32, monotone: bool) -> Vec<(Vec<u32>, Vec<u32>)> {
    let mut out = Vec::new();
    let mut b = vec![0u32; rho];
    let mut c = vec![0u32; rho];
    // Row i of the quotient holds c_i (i ≥ 1) and b_i (i < ρ); fill row by row.
    fn rec(
        i: usize,
        rho: usize,
        degree: u32,
        monotone: bool,
        b: &mut Vec<u32>,
        c: &mut Vec<u32>,
        out: &mut Vec<(Vec<u32>, Vec<u32>)>,
    ) {
        if i > rho {
            out.push((b.clone(), c.clone()));
            return;
        }
        // row i uses c[i-1] (if i ≥ 1) and b[i] (if i < ρ)
        let c_range: Vec<u32> = if i == 0 {
            vec![0]
        } else {
            let lo = if monotone && i >= 2 { c[i - 2] } else { 1 };
            (lo..=degree).collect()
        };
        for ci in c_range {
            if i >= 1 {
                c[i - 1] = ci;
            }
            if i == rho {
                rec(i + 1, rho, degree, monotone, b, c, out);
                continue;
            }
            let hi = if monotone && i >= 1 { b[i - 1] } else { degree };
            for bi in 1..=hi.min(degree - ci) {
                b[i] = bi;
                rec(i + 1, rho, degree, monotone, b, c, out);
            }
        }
    }
    rec(0, rho, degree, monotone, &mut b, &mut c, &mut out);
    out
}
