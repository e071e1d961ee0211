//! Rule-defined partitions of Hamming graphs: covering lifts from syndrome
//! graphs, coordinate extension, inflation and the splitting construction.
//!
//! A [`RulePartition`] never materializes its cells; membership of a word is
//! computed from the rule, so partitions of `H(25,3)` are ordinary values.
//! Each step carries the quotient matrix and cell sizes its construction
//! predicts; [`RulePartition::verify`] re-checks them on the actual graph.

use std::fmt::Write as _;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::cr::{distance_partition, quotient_of, Code, Equitability, IntersectionArray, Partition, QuotientMatrix};
use crate::error::{Error, Result};
use crate::gf::{CheckMatrix, FieldOrder, Word, DEFAULT_BUDGET};
use crate::graph::Graph;

pub const DEFAULT_SAMPLES: u64 = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Rule {
    /// Cell per vertex of `H(n,q)`.
    Table(Arc<Vec<u32>>),
    /// Cell of the syndrome in a partition of `GF(q)^k`.
    Syndrome { h: CheckMatrix, cells: Arc<Vec<u32>> },
    /// Ignores the last `t` coordinates.
    Cylinder { t: usize, inner: Box<RulePartition> },
    /// Cell of the sum of `s` consecutive blocks.
    Inflate { s: usize, inner: Box<RulePartition> },
    /// Inflation by `q` with cell 0 split by `α = Σ l·|y_l| mod q`.
    AlphaSplit { inner: Box<RulePartition> },
    /// Appends a coordinate `y`; cell `c < q` becomes `c − y mod q`.
    Shift { inner: Box<RulePartition> },
    /// Renames cells, merging those with equal new names.
    Merge { map: Vec<u32>, inner: Box<RulePartition> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RulePartition {
    q: FieldOrder,
    n: usize,
    quotient: QuotientMatrix,
    sizes: Vec<u128>,
    rule: Rule,
}

fn index_of(q: FieldOrder, digits: &[u8]) -> usize {
    digits.iter().fold(0usize, |acc, &d| acc * q.get() as usize + d as usize)
}

fn pow(q: FieldOrder, e: usize) -> u128 {
    (q.get() as u128).pow(e as u32)
}

impl RulePartition {
    /// An explicit equitable partition of `H(n,q)`.
    pub fn from_hamming_partition(q: FieldOrder, n: usize, p: &Partition) -> Result<Self> {
        let g = Graph::hamming(n, q, DEFAULT_BUDGET)?;
        let quotient = equitable(&g, p)?;
        Ok(RulePartition {
            q,
            n,
            quotient,
            sizes: p.cell_sizes().into_iter().map(u128::from).collect(),
            rule: Rule::Table(Arc::new(p.assignment().to_vec())),
        })
    }

    /// The distance partition of an explicit CR code of `H(n,q)`.
    pub fn from_hamming_code(q: FieldOrder, n: usize, code: &Code) -> Result<Self> {
        let g = Graph::hamming(n, q, DEFAULT_BUDGET)?;
        Self::from_hamming_partition(q, n, &distance_partition(&g, code)?.to_partition())
    }

    /// Pulls an equitable partition of `G(H)` back along the syndrome map
    /// `H(n,q) → G(H)`, which is a covering when `H` has full rank.
    pub fn lift_partition(h: &CheckMatrix, p: &Partition) -> Result<Self> {
        if h.rank() != h.k() {
            return Err(Error::InvalidArgument(format!(
                "check matrix has rank {} < {} rows; the syndrome map is not onto",
                h.rank(),
                h.k()
            )));
        }
        let g = Graph::syndrome(h);
        if p.assignment().len() != g.order() {
            return Err(Error::DimensionMismatch { expected: g.order(), found: p.assignment().len() });
        }
        let quotient = equitable(&g, p)?;
        let scale = pow(h.field(), h.n() - h.k());
        Ok(RulePartition {
            q: h.field(),
            n: h.n(),
            quotient,
            sizes: p.cell_sizes().into_iter().map(|s| s as u128 * scale).collect(),
            rule: Rule::Syndrome { h: h.clone(), cells: Arc::new(p.assignment().to_vec()) },
        })
    }

    /// Lift of the distance partition of a CR code of `G(H)`.
    pub fn lift(h: &CheckMatrix, code: &Code) -> Result<Self> {
        let g = Graph::syndrome(h);
        Self::lift_partition(h, &distance_partition(&g, code)?.to_partition())
    }

    pub fn field(&self) -> FieldOrder {
        self.q
    }

    /// Length of the ambient Hamming graph.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn num_cells(&self) -> usize {
        self.quotient.size()
    }

    pub fn quotient(&self) -> &QuotientMatrix {
        &self.quotient
    }

    pub fn sizes(&self) -> &[u128] {
        &self.sizes
    }

    /// Intersection array of cell 0 when the predicted quotient is tridiagonal.
    pub fn array(&self) -> Option<IntersectionArray> {
        IntersectionArray::from_quotient(&self.quotient).ok()
    }

    /// Cylinders over `H(n+t,q)`: quotient `S + t(q−1)I`.
    pub fn extend(self, t: usize) -> Self {
        if t == 0 {
            return self;
        }
        RulePartition {
            q: self.q,
            n: self.n + t,
            quotient: self.quotient.shift_diagonal((t * (self.q.get() as usize - 1)) as u32),
            sizes: self.sizes.iter().map(|&s| s * pow(self.q, t)).collect(),
            rule: Rule::Cylinder { t, inner: Box::new(self) },
        }
    }

    /// Block-sum preimages in `H(sn,q)`: quotient `sS`.
    pub fn inflate(self, s: usize) -> Result<Self> {
        if s == 0 {
            return Err(Error::InvalidArgument("inflation factor must be positive".into()));
        }
        if s == 1 {
            return Ok(self);
        }
        let extra = pow(self.q, (s - 1) * self.n);
        Ok(RulePartition {
            q: self.q,
            n: s * self.n,
            quotient: self.quotient.scaled(s as u32),
            sizes: self.sizes.iter().map(|&c| c * extra).collect(),
            rule: Rule::Inflate { s, inner: Box::new(self) },
        })
    }

    /// Inflation by `q` followed by splitting cell 0 into `q` subcells.
    pub fn alpha_split(self) -> Self {
        let q = self.q.get() as usize;
        let t = self.num_cells();
        let s = &self.quotient;
        let size = q + t - 1;
        // cell index in the inner partition for each outer cell
        let inner_of = |i: usize| if i < q { 0 } else { i + 1 - q };
        let mut rows = vec![vec![0u32; size]; size];
        for (i, row) in rows.iter_mut().enumerate() {
            for (j, e) in row.iter_mut().enumerate() {
                let base = s.get(inner_of(i), inner_of(j));
                // a vertex's q·S[.][0] neighbours in C'_0 spread evenly over the subcells
                *e = if j < q { base } else { q as u32 * base };
            }
        }
        let extra = pow(self.q, (q - 1) * self.n);
        let mut sizes = vec![self.sizes[0] * extra / q as u128; q];
        sizes.extend(self.sizes[1..].iter().map(|&c| c * extra));
        RulePartition {
            q: self.q,
            n: q * self.n,
            quotient: QuotientMatrix::from_rows(&rows).expect("square"),
            sizes,
            rule: Rule::AlphaSplit { inner: Box::new(self) },
        }
    }

    /// One extra coordinate that cyclically shifts the first `q` cells.
    /// Requires those cells to be interchangeable in the quotient.
    pub fn shift(self) -> Result<Self> {
        let q = self.q.get() as usize;
        let t = self.num_cells();
        let s = &self.quotient;
        if t < q || !symmetric_block(s, q) {
            return Err(Error::InvalidArgument(
                "the first q cells must be interchangeable in the quotient matrix".into(),
            ));
        }
        let mut rows = s.rows();
        for (i, row) in rows.iter_mut().enumerate() {
            if i < q {
                for (j, e) in row.iter_mut().enumerate().take(q) {
                    if j != i {
                        *e += 1;
                    }
                }
            } else {
                row[i] += q as u32 - 1;
            }
        }
        let sizes = self.sizes.iter().map(|&c| c * q as u128).collect();
        Ok(RulePartition {
            q: self.q,
            n: self.n + 1,
            quotient: QuotientMatrix::from_rows(&rows).expect("square"),
            sizes,
            rule: Rule::Shift { inner: Box::new(self) },
        })
    }

    /// Merges cells: cell `i` becomes `map[i]`. Fails unless the merged
    /// partition is equitable by the quotient alone.
    pub fn merge(self, map: Vec<u32>) -> Result<Self> {
        if map.len() != self.num_cells() {
            return Err(Error::DimensionMismatch { expected: self.num_cells(), found: map.len() });
        }
        let m = map.iter().max().map_or(0, |&x| x as usize + 1);
        if (0..m as u32).any(|c| !map.contains(&c)) {
            return Err(Error::InvalidArgument("merge map must use every new cell".into()));
        }
        let mut rows = vec![vec![None::<u32>; m]; m];
        for i in 0..self.num_cells() {
            let mut sums = vec![0u32; m];
            for (j, &mj) in map.iter().enumerate() {
                sums[mj as usize] += self.quotient.get(i, j);
            }
            let row = &mut rows[map[i] as usize];
            for (slot, s) in row.iter_mut().zip(sums) {
                match slot {
                    None => *slot = Some(s),
                    Some(prev) if *prev != s => {
                        return Err(Error::InvalidArgument(format!(
                            "merging cells {map:?} does not give an equitable partition"
                        )))
                    }
                    Some(_) => {}
                }
            }
        }
        let rows: Vec<Vec<u32>> =
            rows.into_iter().map(|r| r.into_iter().map(|x| x.expect("filled")).collect()).collect();
        let mut sizes = vec![0u128; m];
        for (i, &mi) in map.iter().enumerate() {
            sizes[mi as usize] += self.sizes[i];
        }
        Ok(RulePartition {
            q: self.q,
            n: self.n,
            quotient: QuotientMatrix::from_rows(&rows)?,
            sizes,
            rule: Rule::Merge { map, inner: Box::new(self) },
        })
    }

    /// The splitting construction for a 2-cell `[[a,b],[c,d]]` partition with
    /// `a ≤ c`: result in `H(qn+c−a, q)` with quotient
    /// `((a+(i−1)c, (q−i)c+qb), (ic, qb+a+(q−i−1)c))`.
    pub fn split(self, i: usize) -> Result<Self> {
        let q = self.q.get() as usize;
        if self.num_cells() != 2 {
            return Err(Error::InvalidArgument("splitting needs a 2-cell partition".into()));
        }
        let (a, c) = (self.quotient.get(0, 0), self.quotient.get(1, 0));
        if a > c {
            return Err(Error::InvalidArgument(format!("splitting needs a ≤ c, got a = {a}, c = {c}")));
        }
        if !(1..q).contains(&i) {
            return Err(Error::InvalidArgument(format!("i = {i} is outside 1..={}", q - 1)));
        }
        let mut p = self.alpha_split();
        for _ in 0..c - a {
            p = p.shift()?;
        }
        let map: Vec<u32> = (0..=q).map(|j| u32::from(j >= i)).collect();
        p.merge(map)
    }

    /// Cell of a word of length `n`.
    pub fn cell(&self, x: &[u8]) -> u32 {
        debug_assert_eq!(x.len(), self.n);
        match &self.rule {
            Rule::Table(cells) => cells[index_of(self.q, x)],
            Rule::Syndrome { h, cells } => cells[index_of(self.q, &h.syndrome_digits(x))],
            Rule::Cylinder { t, inner } => inner.cell(&x[..self.n - t]),
            Rule::Inflate { s, inner } => inner.cell(&block_sum(self.q, x, *s)),
            Rule::AlphaSplit { inner } => {
                let q = self.q.get() as usize;
                let c = inner.cell(&block_sum(self.q, x, q));
                if c > 0 {
                    return c + q as u32 - 1;
                }
                let m = inner.n;
                let alpha = (0..q).fold(0usize, |acc, l| {
                    let weight: usize = x[l * m..(l + 1) * m].iter().map(|&d| d as usize).sum();
                    acc + l * weight
                });
                (alpha % q) as u32
            }
            Rule::Shift { inner } => {
                let q = self.q.get();
                let y = x[self.n - 1];
                let c = inner.cell(&x[..self.n - 1]);
                if c < q as u32 {
                    (c + q as u32 - y as u32) % q as u32
                } else {
                    c
                }
            }
            Rule::Merge { map, inner } => map[inner.cell(x) as usize],
        }
    }

    /// Members of cell `i`, when `q^n` is within `budget`.
    pub fn materialize_cell(&self, i: u32, budget: u64) -> Result<Code> {
        let table = self.materialize(budget)?;
        Code::new((0..table.len() as u32).filter(|&v| table[v as usize] == i).collect())
    }

    /// Cell of every vertex of `H(n,q)`, when `q^n` is within `budget`.
    pub fn materialize(&self, budget: u64) -> Result<Vec<u32>> {
        let size = self.q.pow(self.n).filter(|&s| s <= budget).ok_or(Error::BudgetExceeded {
            q: self.q.get(),
            m: self.n,
            budget,
        })?;
        Ok((0..size).into_par_iter().map(|v| self.cell(Word::from_index(self.q, self.n, v).digits())).collect())
    }

    /// Checks the predicted quotient and sizes: exhaustively when `q^n` is
    /// within `budget`, otherwise on `samples` seeded random vertices
    /// (neighbourhood counts only; sizes are then not checked).
    pub fn verify(&self, budget: u64, samples: u64, seed: u64) -> Result<RuleCheck> {
        if self.q.pow(self.n).is_some_and(|s| s <= budget) {
            let g = Graph::hamming(self.n, self.q, budget)?;
            let cells = self.materialize(budget)?;
            let vertices = cells.len() as u64;
            let mut sizes = vec![0u128; self.num_cells()];
            for &c in &cells {
                sizes[c as usize] += 1;
            }
            let p = Partition::from_assignment(cells, self.num_cells())?;
            let failure = match quotient_of(&g, &p)? {
                Equitability::Equitable(q) if q == self.quotient && sizes == self.sizes => None,
                Equitability::Equitable(q) => Some(format!("quotient {q} with sizes {sizes:?}")),
                Equitability::Inequitable(w) => Some(format!(
                    "vertex {} in cell {} sees {:?}, expected {:?}",
                    g.space().word(w.vertex as u64),
                    w.cell,
                    w.counts,
                    w.expected
                )),
            };
            return Ok(RuleCheck { exhaustive: true, vertices_checked: vertices, failure });
        }
        let chunks = 64u64;
        let per = samples.div_ceil(chunks);
        let failure = (0..chunks)
            .into_par_iter()
            .map(|chunk| {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                rng.set_stream(chunk);
                let todo = per.min(samples.saturating_sub(chunk * per));
                (0..todo).find_map(|_| self.check_vertex(&mut rng))
            })
            .collect::<Vec<_>>()
            .into_iter()
            .flatten()
            .next();
        Ok(RuleCheck { exhaustive: false, vertices_checked: samples, failure })
    }

    fn check_vertex(&self, rng: &mut ChaCha8Rng) -> Option<String> {
        let q = self.q.get();
        let mut x: Vec<u8> = (0..self.n).map(|_| rng.gen_range(0..q)).collect();
        let c = self.cell(&x) as usize;
        let mut counts = vec![0u32; self.num_cells()];
        for i in 0..self.n {
            let orig = x[i];
            for a in 1..q {
                x[i] = (orig + a) % q;
                counts[self.cell(&x) as usize] += 1;
            }
            x[i] = orig;
        }
        (counts != self.quotient.row(c)).then(|| {
            let w = Word::new(self.q, x).expect("residues");
            format!("vertex {w} in cell {c} sees {counts:?}, expected {:?}", self.quotient.row(c))
        })
    }

    /// Line-oriented form: the field, then one step per line from the
    /// innermost outwards.
    pub fn to_text(&self) -> String {
        let mut steps = Vec::new();
        let mut cur = self;
        loop {
            match &cur.rule {
                Rule::Table(cells) => {
                    steps.push(format!("table {} {} {}", cur.n, cur.num_cells(), cell_string(cells)));
                    break;
                }
                Rule::Syndrome { h, cells } => {
                    let rows: Vec<String> = h.rows().iter().map(Word::to_string).collect();
                    steps.push(format!("syndrome {}", rows.join(" ")));
                    steps.push(format!("table {} {} {}", h.k(), cur.num_cells(), cell_string(cells)));
                    break;
                }
                Rule::Cylinder { t, inner } => {
                    steps.push(format!("extend {t}"));
                    cur = inner;
                }
                Rule::Inflate { s, inner } => {
                    steps.push(format!("inflate {s}"));
                    cur = inner;
                }
                Rule::AlphaSplit { inner } => {
                    steps.push("alpha".into());
                    cur = inner;
                }
                Rule::Shift { inner } => {
                    steps.push("shift".into());
                    cur = inner;
                }
                Rule::Merge { map, inner } => {
                    let m: Vec<String> = map.iter().map(u32::to_string).collect();
                    steps.push(format!("merge {}", m.join(" ")));
                    cur = inner;
                }
            }
        }
        let mut out = format!("# rule partition of H({},{})\nq {}\n", self.n, self.q.get(), self.q.get());
        for s in steps.iter().rev() {
            let _ = writeln!(out, "{s}");
        }
        out
    }

    /// Inverse of [`RulePartition::to_text`]; predictions are recomputed.
    pub fn parse(text: &str) -> Result<Self> {
        let mut q = None;
        let mut pending: Option<(usize, usize, Vec<u32>)> = None;
        let mut cur: Option<RulePartition> = None;
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |m: &str| Error::Parse { line: lineno + 1, message: m.to_string() };
            let mut parts = line.split_whitespace();
            let op = parts.next().expect("nonempty line");
            let args: Vec<&str> = parts.collect();
            let num = |s: &str| s.parse::<usize>().map_err(|_| err(&format!("bad number {s:?}")));
            if op == "q" {
                q = Some(FieldOrder::new(num(args.first().ok_or_else(|| err("missing q"))?)? as u32)?);
                continue;
            }
            let field = q.ok_or_else(|| err("the field line `q N` must come first"))?;
            if let Some((n, t, cells)) = pending.take() {
                if op == "syndrome" {
                    let rows = args
                        .iter()
                        .map(|r| Word::parse(field, r).map(|w| w.digits().to_vec()))
                        .collect::<Result<Vec<_>>>()?;
                    let h = CheckMatrix::from_rows(field, rows)?;
                    if h.k() != n {
                        return Err(err("syndrome rows do not match the table length"));
                    }
                    cur = Some(Self::lift_partition(&h, &Partition::from_assignment(cells, t)?)?);
                    continue;
                }
                cur = Some(Self::from_hamming_partition(field, n, &Partition::from_assignment(cells, t)?)?);
            }
            let take = |cur: &mut Option<RulePartition>| cur.take().ok_or_else(|| err("step before any table"));
            match op {
                "table" => {
                    if cur.is_some() {
                        return Err(err("only one table is allowed"));
                    }
                    let [n, t, cells] = args[..] else {
                        return Err(err("expected `table N CELLS DIGITS`"));
                    };
                    let cells = cells
                        .chars()
                        .map(|ch| ch.to_digit(36).ok_or_else(|| err("bad cell digit")))
                        .collect::<Result<Vec<u32>>>()?;
                    pending = Some((num(n)?, num(t)?, cells));
                }
                "extend" => cur = Some(take(&mut cur)?.extend(num(args.first().ok_or_else(|| err("missing t"))?)?)),
                "inflate" => cur = Some(take(&mut cur)?.inflate(num(args.first().ok_or_else(|| err("missing s"))?)?)?),
                "alpha" => cur = Some(take(&mut cur)?.alpha_split()),
                "shift" => cur = Some(take(&mut cur)?.shift()?),
                "merge" => {
                    let map = args.iter().map(|a| num(a).map(|x| x as u32)).collect::<Result<Vec<_>>>()?;
                    cur = Some(take(&mut cur)?.merge(map)?);
                }
                other => return Err(err(&format!("unknown step {other:?}"))),
            }
        }
        if let Some((n, t, cells)) = pending {
            let field = q.expect("table implies q");
            return Self::from_hamming_partition(field, n, &Partition::from_assignment(cells, t)?);
        }
        cur.ok_or(Error::Parse { line: 0, message: "empty rule".into() })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RuleCheck {
    pub exhaustive: bool,
    pub vertices_checked: u64,
    pub failure: Option<String>,
}

impl RuleCheck {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

fn equitable(g: &Graph, p: &Partition) -> Result<QuotientMatrix> {
    match quotient_of(g, p)? {
        Equitability::Equitable(q) => Ok(q),
        Equitability::Inequitable(w) => {
            Err(Error::NotAPartition(format!("partition is not equitable at vertex {} (cell {})", w.vertex, w.cell)))
        }
    }
}

fn block_sum(q: FieldOrder, x: &[u8], s: usize) -> Vec<u8> {
    let m = x.len() / s;
    let mut out = x[..m].to_vec();
    for b in 1..s {
        for (o, &d) in out.iter_mut().zip(&x[b * m..(b + 1) * m]) {
            *o = q.add(*o, d);
        }
    }
    out
}

fn cell_string(cells: &[u32]) -> String {
    cells.iter().map(|&c| char::from_digit(c, 36).expect("at most 36 cells")).collect()
}

/// Whether the first `q` cells are interchangeable: constant diagonal and
/// off-diagonal inside the block, and constant rows/columns towards the rest.
fn symmetric_block(s: &QuotientMatrix, q: usize) -> bool {
    let t = s.size();
    (0..q).all(|i| {
        (0..q).all(|j| s.get(i, j) == if i == j { s.get(0, 0) } else { s.get(0, 1.min(q - 1)) })
            && (q..t).all(|j| s.get(i, j) == s.get(0, j) && s.get(j, i) == s.get(j, 0))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cr::{verify_cr, CodeFile};

    fn code(q: FieldOrder, words: &[&str]) -> Code {
        Code::from_words(&words.iter().map(|w| Word::parse(q, w).unwrap()).collect::<Vec<_>>()).unwrap()
    }

    fn checked(p: &RulePartition) {
        let r = p.verify(DEFAULT_BUDGET, 2000, 5).unwrap();
        assert!(r.passed(), "{:?}", r.failure);
    }

    #[test]
    fn extend_examples() {
        let p = RulePartition::from_hamming_code(FieldOrder::GF2, 3, &code(FieldOrder::GF2, &["000", "111"])).unwrap();
        assert_eq!(p.array().unwrap().to_string(), "{3;1}");
        let same = p.clone().extend(0);
        assert_eq!(same, p);
        let e = p.extend(2);
        assert_eq!(e.quotient().rows(), vec![vec![2, 3], vec![1, 4]]);
        assert_eq!(e.sizes(), &[8, 24]);
        checked(&e);
        let whole = RulePartition::from_hamming_partition(
            FieldOrder::GF3,
            2,
            &Partition::from_assignment(vec![0; 9], 1).unwrap(),
        )
        .unwrap()
        .extend(3);
        assert_eq!(whole.quotient().rows(), vec![vec![10]]);
    }

    #[test]
    fn inflate_examples() {
        let p = RulePartition::from_hamming_code(FieldOrder::GF2, 3, &code(FieldOrder::GF2, &["000", "111"])).unwrap();
        assert_eq!(p.clone().inflate(1).unwrap(), p);
        let i = p.inflate(3).unwrap();
        assert_eq!(i.n(), 9);
        assert_eq!(i.array().unwrap().to_string(), "{9;3}");
        assert_eq!(i.sizes(), &[2 * 64, 6 * 64]);
        checked(&i);
    }

    #[test]
    fn split_of_h22() {
        let p = RulePartition::from_hamming_code(FieldOrder::GF2, 2, &code(FieldOrder::GF2, &["00", "11"])).unwrap();
        assert_eq!(p.quotient().rows(), vec![vec![0, 2], vec![2, 0]]);
        let s = p.split(1).unwrap();
        assert_eq!(s.n(), 6);
        assert_eq!(s.quotient().rows(), vec![vec![0, 6], vec![2, 4]]);
        let r = s.verify(DEFAULT_BUDGET, 0, 0).unwrap();
        assert!(r.exhaustive && r.passed() && r.vertices_checked == 64, "{r:?}");
    }

    #[test]
    fn alpha_subcells_are_balanced() {
        let p =
            RulePartition::from_hamming_code(FieldOrder::GF3, 2, &code(FieldOrder::GF3, &["00", "12", "21"])).unwrap();
        let a = p.alpha_split();
        assert_eq!(a.sizes()[0], a.sizes()[1]);
        assert_eq!(a.sizes()[1], a.sizes()[2]);
        checked(&a);
    }

    #[test]
    fn independent_radius_one_splits() {
        // perfect Hamming code of length 3 ⇒ length 7
        let p = RulePartition::from_hamming_code(FieldOrder::GF2, 3, &code(FieldOrder::GF2, &["000", "111"])).unwrap();
        let s = p.split(1).unwrap();
        assert_eq!((s.n(), s.array().unwrap().to_string()), (7, "{7;1}".to_string()));
        checked(&s);
        // ternary perfect code of length 4 ⇒ length 13, with both choices of i
        let h = CheckMatrix::parse("# q=3\n1 0 1 1\n0 1 1 2\n", FieldOrder::GF3).unwrap();
        let lifted = RulePartition::lift(&h, &Code::new(vec![0]).unwrap()).unwrap();
        assert_eq!(lifted.array().unwrap().to_string(), "{8;1}");
        let s = lifted.split(1).unwrap();
        assert_eq!((s.n(), s.array().unwrap().to_string()), (13, "{26;1}".to_string()));
        checked(&s);
        let s2 = RulePartition::lift(&h, &Code::new(vec![0]).unwrap()).unwrap().split(2).unwrap();
        assert_eq!(s2.quotient().rows(), vec![vec![1, 25], vec![2, 24]]);
        checked(&s2);
    }

    #[test]
    fn split_rejects_bad_input() {
        let p = RulePartition::from_hamming_code(FieldOrder::GF2, 2, &code(FieldOrder::GF2, &["00", "11"])).unwrap();
        assert!(p.clone().split(0).is_err());
        assert!(p.split(2).is_err());
        // a face of H(3,2) has a = 2 > c = 1
        let q =
            RulePartition::from_hamming_code(FieldOrder::GF2, 3, &code(FieldOrder::GF2, &["000", "001", "010", "011"]))
                .unwrap();
        assert_eq!(q.quotient().rows(), vec![vec![2, 1], vec![1, 2]]);
        assert!(q.split(1).is_err());
    }

    #[test]
    fn lift_of_radius_two_code() {
        let h = CheckMatrix::parse(include_str!("../fixtures/cr21_4.H"), FieldOrder::GF3).unwrap();
        let c = CodeFile::parse(include_str!("../fixtures/cr21_4.C"), FieldOrder::GF3).unwrap().code;
        let l = RulePartition::lift(&h, &c).unwrap();
        assert_eq!(l.sizes()[0], 6 * 3u128.pow(7));
        assert_eq!(l.array().unwrap().to_string(), "{21,4;2,21}");
        // sampled only: 3^11 exhaustive runs in the integration tests
        let r = l.verify(1000, 500, 1).unwrap();
        assert!(!r.exhaustive && r.passed());
    }

    #[test]
    fn lift_through_identity_is_the_code() {
        let h = CheckMatrix::identity(FieldOrder::GF3, 3);
        let c = code(FieldOrder::GF3, &["000", "111", "222"]);
        let l = RulePartition::lift(&h, &c).unwrap();
        assert_eq!(l.materialize_cell(0, DEFAULT_BUDGET).unwrap(), c);
        let g = Graph::hamming(3, FieldOrder::GF3, DEFAULT_BUDGET).unwrap();
        assert_eq!(verify_cr(&g, &c).unwrap().unwrap().array, l.array().unwrap());
    }

    #[test]
    fn text_round_trip() {
        let h = CheckMatrix::parse("# q=3\n1 0 1 1\n0 1 1 2\n", FieldOrder::GF3).unwrap();
        let p = RulePartition::lift(&h, &Code::new(vec![0]).unwrap())
            .unwrap()
            .split(1)
            .unwrap()
            .extend(1)
            .inflate(2)
            .unwrap();
        let text = p.to_text();
        let back = RulePartition::parse(&text).unwrap();
        assert_eq!(back, p);
        let p = RulePartition::from_hamming_code(FieldOrder::GF2, 2, &code(FieldOrder::GF2, &["00", "11"])).unwrap();
        assert_eq!(RulePartition::parse(&p.to_text()).unwrap(), p);
        assert!(RulePartition::parse("q 3\nshift\n").is_err());
    }

    #[test]
    fn merge_requires_equitability() {
        let p = RulePartition::from_hamming_code(FieldOrder::GF2, 2, &code(FieldOrder::GF2, &["00"])).unwrap();
        // cells {00}, {01,10}, {11}: merging 0 and 2 gives the bipartition
        assert_eq!(p.clone().merge(vec![0, 1, 0]).unwrap().quotient().rows(), vec![vec![0, 2], vec![2, 0]]);
        assert!(p.merge(vec![0, 0, 1]).is_err());
    }
}
