//! Distance partitions, equitable partitions and completely regular codes.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::gf::{header_value, FieldOrder, Word};
use crate::graph::Graph;

/// An explicit, nonempty set of vertices (sorted word indices).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Code {
    vertices: Vec<u32>,
}

impl Code {
    pub fn new(mut vertices: Vec<u32>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::EmptyCode);
        }
        vertices.sort_unstable();
        vertices.dedup();
        Ok(Code { vertices })
    }

    pub fn from_words(words: &[Word]) -> Result<Self> {
        Self::new(words.iter().map(|w| w.index() as u32).collect())
    }

    pub fn vertices(&self) -> &[u32] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, x: u32) -> bool {
        self.vertices.binary_search(&x).is_ok()
    }

    fn check_range(&self, g: &Graph) -> Result<()> {
        match self.vertices.last() {
            Some(&x) if x as usize >= g.order() => {
                Err(Error::VertexOutOfRange { vertex: x as u64, order: g.order() as u64 })
            }
            _ => Ok(()),
        }
    }
}

/// A code read from the code file format: an optional `# q=3 k=4` header
/// followed by one base-q word per line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodeFile {
    pub q: FieldOrder,
    pub k: usize,
    pub code: Code,
}

impl CodeFile {
    pub fn parse(text: &str, default_q: FieldOrder) -> Result<Self> {
        let mut q = default_q;
        let mut k = None;
        let mut words = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            let parse_err = |message: String| Error::Parse { line: lineno + 1, message };
            if let Some(comment) = line.strip_prefix('#') {
                if let Some(v) = header_value(comment, "q") {
                    q = FieldOrder::new(v.parse().map_err(|_| parse_err(format!("bad q {v:?}")))?)?;
                }
                if let Some(v) = header_value(comment, "k") {
                    k = Some(v.parse::<usize>().map_err(|_| parse_err(format!("bad k {v:?}")))?);
                }
                continue;
            }
            if line.is_empty() {
                continue;
            }
            words.push((lineno + 1, line.to_string()));
        }
        if words.is_empty() {
            return Err(Error::EmptyCode);
        }
        let k = k.unwrap_or_else(|| words[0].1.chars().filter(|c| !c.is_whitespace()).count());
        let mut vertices = Vec::with_capacity(words.len());
        for (line, text) in words {
            let w = Word::parse(q, &text).map_err(|e| Error::Parse { line, message: e.to_string() })?;
            if w.len() != k {
                return Err(Error::Parse { line, message: format!("word {w} has length {}, expected {k}", w.len()) });
            }
            vertices.push(w.index() as u32);
        }
        Ok(CodeFile { q, k, code: Code::new(vertices)? })
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("# q={} k={}\n", self.q.get(), self.k);
        for &v in self.code.vertices() {
            out.push_str(&Word::from_index(self.q, self.k, v as u64).to_string());
            out.push('\n');
        }
        out
    }
}

/// Square matrix of neighbor counts between cells.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuotientMatrix {
    size: usize,
    entries: Vec<u32>,
}

impl QuotientMatrix {
    pub fn from_rows(rows: &[Vec<u32>]) -> Result<Self> {
        let size = rows.len();
        if size == 0 {
            return Err(Error::InvalidArgument("empty quotient matrix".into()));
        }
        if let Some(r) = rows.iter().find(|r| r.len() != size) {
            return Err(Error::DimensionMismatch { expected: size, found: r.len() });
        }
        Ok(QuotientMatrix { size, entries: rows.concat() })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.entries[i * self.size + j]
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.entries[i * self.size..(i + 1) * self.size]
    }

    pub fn rows(&self) -> Vec<Vec<u32>> {
        (0..self.size).map(|i| self.row(i).to_vec()).collect()
    }

    /// Common row sum, if every row has the same sum.
    pub fn row_sum(&self) -> Option<u32> {
        let first: u32 = self.row(0).iter().sum();
        (1..self.size).all(|i| self.row(i).iter().sum::<u32>() == first).then_some(first)
    }

    pub fn is_tridiagonal(&self) -> bool {
        (0..self.size).all(|i| (0..self.size).all(|j| i.abs_diff(j) <= 1 || self.get(i, j) == 0))
    }

    /// Adds `shift` to every diagonal entry.
    pub fn shift_diagonal(&self, shift: u32) -> Self {
        let mut m = self.clone();
        for i in 0..self.size {
            m.entries[i * self.size + i] += shift;
        }
        m
    }

    pub fn scaled(&self, factor: u32) -> Self {
        QuotientMatrix { size: self.size, entries: self.entries.iter().map(|&e| e * factor).collect() }
    }

    /// Cell sizes implied by double counting `|C_i| S_ij = |C_j| S_ji` on a
    /// graph with `order` vertices. `None` when the sizes are not positive
    /// integers summing to `order`, or not determined (disconnected support).
    pub fn cell_sizes(&self, order: u64) -> Option<Vec<u64>> {
        // Sizes relative to cell 0 as fractions num/den, propagated along the
        // support of the matrix.
        let t = self.size;
        let mut ratio: Vec<Option<(u128, u128)>> = vec![None; t];
        ratio[0] = Some((1, 1));
        let mut stack = vec![0usize];
        while let Some(i) = stack.pop() {
            let (n, d) = ratio[i].expect("visited");
            for j in 0..t {
                if j == i || self.get(i, j) == 0 {
                    continue;
                }
                if self.get(j, i) == 0 {
                    return None;
                }
                let (nn, dd) = reduce(n * self.get(i, j) as u128, d * self.get(j, i) as u128);
                match ratio[j] {
                    None => {
                        ratio[j] = Some((nn, dd));
                        stack.push(j);
                    }
                    Some(existing) if existing != (nn, dd) => return None,
                    Some(_) => {}
                }
            }
        }
        let ratio: Vec<(u128, u128)> = ratio.into_iter().collect::<Option<_>>()?;
        let den = ratio.iter().fold(1u128, |acc, &(_, d)| lcm(acc, d));
        let units: Vec<u128> = ratio.iter().map(|&(n, d)| n * (den / d)).collect();
        let common = units.iter().fold(0u128, |acc, &u| gcd(acc, u));
        let units: Vec<u128> = units.iter().map(|&u| u / common).collect();
        let total: u128 = units.iter().sum();
        if !(order as u128).is_multiple_of(total) {
            return None;
        }
        let scale = order as u128 / total;
        Some(units.iter().map(|&u| (u * scale) as u64).collect())
    }
}

fn gcd(a: u128, b: u128) -> u128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: u128, b: u128) -> u128 {
    a / gcd(a, b) * b
}

fn reduce(n: u128, d: u128) -> (u128, u128) {
    let g = gcd(n, d).max(1);
    (n / g, d / g)
}

impl fmt::Display for QuotientMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (0..self.size)
            .map(|i| {
                let r: Vec<String> = self.row(i).iter().map(u32::to_string).collect();
                format!("({})", r.join(","))
            })
            .collect();
        write!(f, "({})", rows.join(","))
    }
}

/// `{b_0,…,b_{ρ−1}; c_1,…,c_ρ}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntersectionArray {
    pub b: Vec<u32>,
    pub c: Vec<u32>,
}

impl IntersectionArray {
    pub fn new(b: Vec<u32>, c: Vec<u32>) -> Result<Self> {
        if b.len() != c.len() {
            return Err(Error::InvalidArgument(format!(
                "intersection array has {} b-entries and {} c-entries",
                b.len(),
                c.len()
            )));
        }
        if b.iter().chain(&c).any(|&x| x == 0) {
            return Err(Error::InvalidArgument("intersection array entries must be positive".into()));
        }
        Ok(IntersectionArray { b, c })
    }

    pub fn rho(&self) -> usize {
        self.b.len()
    }

    /// Reads the off-diagonals of a tridiagonal quotient matrix.
    pub fn from_quotient(m: &QuotientMatrix) -> Result<Self> {
        if !m.is_tridiagonal() {
            return Err(Error::InvalidArgument("quotient matrix is not tridiagonal".into()));
        }
        let rho = m.size() - 1;
        let b = (0..rho).map(|i| m.get(i, i + 1)).collect();
        let c = (0..rho).map(|i| m.get(i + 1, i)).collect();
        Self::new(b, c)
    }

    /// The tridiagonal quotient matrix on a `degree`-regular graph.
    pub fn quotient(&self, degree: u32) -> Result<QuotientMatrix> {
        let rho = self.rho();
        let mut rows = vec![vec![0u32; rho + 1]; rho + 1];
        for i in 0..=rho {
            let b = if i < rho { self.b[i] } else { 0 };
            let c = if i > 0 { self.c[i - 1] } else { 0 };
            let a = degree
                .checked_sub(b + c)
                .ok_or_else(|| Error::InvalidArgument(format!("array {self} does not fit degree {degree}")))?;
            rows[i][i] = a;
            if i < rho {
                rows[i][i + 1] = b;
            }
            if i > 0 {
                rows[i][i - 1] = c;
            }
        }
        QuotientMatrix::from_rows(&rows)
    }
}

impl fmt::Display for IntersectionArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[u32]| v.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
        write!(f, "{{{};{}}}", join(&self.b), join(&self.c))
    }
}

impl FromStr for IntersectionArray {
    type Err = Error;

    /// Accepts `{21,4;2,21}`, `{10;8}` and the comma form `{10,8}` used for
    /// covering radius one.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse { line: 0, message: format!("bad intersection array {s:?}") };
        let inner = s.trim().strip_prefix('{').and_then(|x| x.strip_suffix('}')).ok_or_else(bad)?;
        let nums = |part: &str| -> Result<Vec<u32>> {
            part.split(',').map(str::trim).filter(|x| !x.is_empty()).map(|x| x.parse().map_err(|_| bad())).collect()
        };
        let (b, c) = match inner.split_once(';') {
            Some((b, c)) => (nums(b)?, nums(c)?),
            None => {
                let all = nums(inner)?;
                if all.len() != 2 {
                    return Err(bad());
                }
                (vec![all[0]], vec![all[1]])
            }
        };
        Self::new(b, c)
    }
}

/// Ordered partition of the vertex set given by a cell index per vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    cell_of: Vec<u32>,
    num_cells: usize,
}

impl Partition {
    pub fn from_assignment(cell_of: Vec<u32>, num_cells: usize) -> Result<Self> {
        let mut seen = vec![false; num_cells];
        for (v, &c) in cell_of.iter().enumerate() {
            let slot = seen
                .get_mut(c as usize)
                .ok_or_else(|| Error::NotAPartition(format!("vertex {v} has cell {c} >= {num_cells}")))?;
            *slot = true;
        }
        if let Some(empty) = seen.iter().position(|&s| !s) {
            return Err(Error::NotAPartition(format!("cell {empty} is empty")));
        }
        Ok(Partition { cell_of, num_cells })
    }

    pub fn from_cells(order: usize, cells: &[Vec<u32>]) -> Result<Self> {
        let mut cell_of = vec![u32::MAX; order];
        for (i, cell) in cells.iter().enumerate() {
            for &v in cell {
                let slot = cell_of
                    .get_mut(v as usize)
                    .ok_or(Error::VertexOutOfRange { vertex: v as u64, order: order as u64 })?;
                if *slot != u32::MAX {
                    return Err(Error::NotAPartition(format!("vertex {v} is in two cells")));
                }
                *slot = i as u32;
            }
        }
        if let Some(v) = cell_of.iter().position(|&c| c == u32::MAX) {
            return Err(Error::NotAPartition(format!("vertex {v} is in no cell")));
        }
        Self::from_assignment(cell_of, cells.len())
    }

    pub fn num_cells(&self) -> usize {
        self.num_cells
    }

    pub fn assignment(&self) -> &[u32] {
        &self.cell_of
    }

    pub fn cell(&self, v: u32) -> usize {
        self.cell_of[v as usize] as usize
    }

    pub fn cells(&self) -> Vec<Vec<u32>> {
        let mut cells = vec![Vec::new(); self.num_cells];
        for (v, &c) in self.cell_of.iter().enumerate() {
            cells[c as usize].push(v as u32);
        }
        cells
    }

    pub fn cell_sizes(&self) -> Vec<u64> {
        let mut sizes = vec![0u64; self.num_cells];
        for &c in &self.cell_of {
            sizes[c as usize] += 1;
        }
        sizes
    }
}

/// First vertex whose neighbor counts differ from the row established by the
/// lowest-indexed vertex of its cell.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub vertex: u32,
    pub cell: usize,
    pub counts: Vec<u32>,
    pub expected: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Equitability {
    Equitable(QuotientMatrix),
    Inequitable(Witness),
}

impl Equitability {
    pub fn quotient(&self) -> Option<&QuotientMatrix> {
        match self {
            Equitability::Equitable(m) => Some(m),
            Equitability::Inequitable(_) => None,
        }
    }
}

pub fn quotient_of(g: &Graph, p: &Partition) -> Result<Equitability> {
    if p.assignment().len() != g.order() {
        return Err(Error::NotAPartition(format!(
            "partition covers {} vertices, graph has {}",
            p.assignment().len(),
            g.order()
        )));
    }
    let t = p.num_cells();
    let mut rows: Vec<Option<Vec<u32>>> = vec![None; t];
    let mut counts = vec![0u32; t];
    for x in 0..g.order() as u32 {
        counts.iter_mut().for_each(|c| *c = 0);
        for y in g.neighbors(x) {
            counts[p.cell(y)] += 1;
        }
        let cell = p.cell(x);
        match &rows[cell] {
            None => rows[cell] = Some(counts.clone()),
            Some(expected) if *expected != counts => {
                return Ok(Equitability::Inequitable(Witness {
                    vertex: x,
                    cell,
                    counts: counts.clone(),
                    expected: expected.clone(),
                }));
            }
            Some(_) => {}
        }
    }
    let rows: Vec<Vec<u32>> = rows.into_iter().map(|r| r.expect("cells are nonempty")).collect();
    Ok(Equitability::Equitable(QuotientMatrix::from_rows(&rows)?))
}

/// Cells `C^(0..ρ)` by distance from the code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistancePartition {
    pub distance: Vec<u32>,
    pub layers: Vec<Vec<u32>>,
}

impl DistancePartition {
    pub fn rho(&self) -> usize {
        self.layers.len() - 1
    }

    pub fn layer_sizes(&self) -> Vec<u64> {
        self.layers.iter().map(|l| l.len() as u64).collect()
    }

    pub fn to_partition(&self) -> Partition {
        Partition { cell_of: self.distance.clone(), num_cells: self.layers.len() }
    }
}

pub fn distance_partition(g: &Graph, code: &Code) -> Result<DistancePartition> {
    code.check_range(g)?;
    let distance = g.bfs_from(code.vertices());
    let mut layers: Vec<Vec<u32>> = Vec::new();
    for (v, &d) in distance.iter().enumerate() {
        if d == u32::MAX {
            return Err(Error::InvalidArgument(format!(
                "vertex {v} is unreachable from the code (graph is disconnected)"
            )));
        }
        if layers.len() <= d as usize {
            layers.resize(d as usize + 1, Vec::new());
        }
        layers[d as usize].push(v as u32);
    }
    Ok(DistancePartition { distance, layers })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrReport {
    pub array: IntersectionArray,
    pub quotient: QuotientMatrix,
    pub rho: usize,
    pub cell_sizes: Vec<u64>,
}

/// The intersection array and quotient matrix of `code` if its distance
/// partition is equitable, `None` otherwise.
pub fn verify_cr(g: &Graph, code: &Code) -> Result<Option<CrReport>> {
    let dp = distance_partition(g, code)?;
    let Equitability::Equitable(quotient) = quotient_of(g, &dp.to_partition())? else {
        return Ok(None);
    };
    let cell_sizes = dp.layer_sizes();
    assert_eq!(quotient.row_sum(), Some(g.degree() as u32), "rows must sum to the degree");
    assert!(quotient.is_tridiagonal(), "distance partitions have tridiagonal quotients");
    for i in 0..dp.rho() {
        assert_eq!(
            cell_sizes[i] * quotient.get(i, i + 1) as u64,
            cell_sizes[i + 1] * quotient.get(i + 1, i) as u64,
            "edge double counting between layers {i} and {}",
            i + 1
        );
    }
    let array = if dp.rho() == 0 {
        IntersectionArray { b: vec![], c: vec![] }
    } else {
        IntersectionArray::from_quotient(&quotient)?
    };
    Ok(Some(CrReport { array, quotient, rho: dp.rho(), cell_sizes }))
}

/// Checks a report against an expected array; the covering radius is always
/// taken from the distance partition.
pub fn expect_array(report: &CrReport, expected: &IntersectionArray) -> Result<bool> {
    if report.rho != expected.rho() {
        return Err(Error::RhoMismatch { expected: expected.rho(), found: report.rho });
    }
    Ok(report.array == *expected)
}

pub fn is_independent(g: &Graph, code: &Code) -> Result<bool> {
    code.check_range(g)?;
    Ok(code.vertices().iter().all(|&x| g.neighbors(x).all(|y| !code.contains(y))))
}

/// A connected component of the subgraph induced on a code.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Component {
    pub size: usize,
    pub is_cycle: bool,
    pub is_clique: bool,
}

/// Components of the induced subgraph, sorted by decreasing size.
pub fn induced_components(g: &Graph, code: &Code) -> Result<Vec<Component>> {
    code.check_range(g)?;
    let members = code.vertices();
    let local = |x: u32| members.binary_search(&x).ok();
    let adj: Vec<Vec<usize>> = members.iter().map(|&x| g.neighbors(x).filter_map(local).collect()).collect();
    let mut seen = vec![false; members.len()];
    let mut out = Vec::new();
    for start in 0..members.len() {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut comp = vec![start];
        let mut i = 0;
        while i < comp.len() {
            for &y in &adj[comp[i]] {
                if !seen[y] {
                    seen[y] = true;
                    comp.push(y);
                }
            }
            i += 1;
        }
        let size = comp.len();
        let is_cycle = size >= 3 && comp.iter().all(|&x| adj[x].len() == 2);
        let is_clique = comp.iter().all(|&x| adj[x].len() == size - 1);
        out.push(Component { size, is_cycle, is_clique });
    }
    out.sort_by(|a, b| b.cmp(a));
    Ok(out)
}
