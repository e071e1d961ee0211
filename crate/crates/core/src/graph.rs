//! Cayley graphs on `GF(q)^k`: syndrome graphs of check matrices, Hamming
//! graphs, complements, character-sum spectra and SRG detection.

use std::collections::BTreeMap;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::gf::{rank, CheckMatrix, FieldOrder, Word, WordSpace, DEFAULT_BUDGET};

/// Adjacency tables larger than this many entries are not materialized;
/// neighbors are then generated on demand.
const TABLE_LIMIT: u64 = 1 << 25;

/// A negation-closed set of nonzero words of `GF(q)^k`, stored as sorted
/// vertex indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ConnectingSet {
    space: WordSpace,
    elements: Vec<u32>,
}

impl ConnectingSet {
    pub fn new(q: FieldOrder, k: usize, words: &[Word]) -> Result<Self> {
        let space = WordSpace::new(q, k)?;
        let mut elements = Vec::with_capacity(words.len());
        for w in words {
            if w.field() != q {
                return Err(Error::FieldMismatch { left: q.get(), right: w.field().get() });
            }
            if w.len() != k {
                return Err(Error::DimensionMismatch { expected: k, found: w.len() });
            }
            elements.push(w.index() as u32);
        }
        Self::from_indices(space, elements)
    }

    pub(crate) fn from_indices(space: WordSpace, mut elements: Vec<u32>) -> Result<Self> {
        elements.sort_unstable();
        if elements.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidConnectingSet("duplicate element".into()));
        }
        if elements.first() == Some(&0) {
            return Err(Error::InvalidConnectingSet("contains the zero word".into()));
        }
        if let Some(&bad) = elements.iter().find(|&&s| s as u64 >= space.size()) {
            return Err(Error::VertexOutOfRange { vertex: bad as u64, order: space.size() });
        }
        for &s in &elements {
            let neg = space.neg(s as u64) as u32;
            if elements.binary_search(&neg).is_err() {
                return Err(Error::InvalidConnectingSet(format!(
                    "{} is present but its negation is not",
                    space.word(s as u64)
                )));
            }
        }
        Ok(ConnectingSet { space, elements })
    }

    /// All nonzero multiples of the columns of `h`.
    pub fn of_check_matrix(h: &CheckMatrix) -> Self {
        let space = WordSpace::new(h.field(), h.k()).expect("check matrix dimension fits");
        let mut elements = Vec::with_capacity(h.n() * (h.field().get() as usize - 1));
        for col in h.columns() {
            for a in h.field().units() {
                elements.push(col.scale(a).index() as u32);
            }
        }
        Self::from_indices(space, elements).expect("non-collinear columns give a simple connecting set")
    }

    /// The `±` unit vectors: the connecting set of `H(k, q)`.
    pub fn units(q: FieldOrder, k: usize) -> Result<Self> {
        Ok(Self::of_check_matrix(&CheckMatrix::identity(q, k)))
    }

    pub fn space(&self) -> &WordSpace {
        &self.space
    }

    pub fn field(&self) -> FieldOrder {
        self.space.field()
    }

    pub fn dimension(&self) -> usize {
        self.space.len()
    }

    pub fn elements(&self) -> &[u32] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, x: u32) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    pub fn words(&self) -> Vec<Word> {
        self.elements.iter().map(|&s| self.space.word(s as u64)).collect()
    }

    /// All nonzero words not in the set.
    pub fn complement(&self) -> Self {
        let elements = (1..self.space.size() as u32).filter(|&x| !self.contains(x)).collect();
        ConnectingSet { space: self.space.clone(), elements }
    }

    /// One column per projective point of the set, when the set is closed
    /// under all nonzero scalars (automatic for q ≤ 3).
    pub fn check_matrix(&self) -> Result<CheckMatrix> {
        let cols: Vec<Word> = self
            .elements
            .iter()
            .filter(|&&s| self.space.normalize(s as u64) == s as u64)
            .map(|&s| self.space.word(s as u64))
            .collect();
        if cols.len() * (self.field().get() as usize - 1) != self.elements.len() {
            return Err(Error::InvalidConnectingSet("not closed under scalar multiples".into()));
        }
        CheckMatrix::from_columns(self.field(), cols)
    }

    /// The Cayley graph is connected iff the set spans `GF(q)^k`.
    pub fn is_connected(&self) -> bool {
        rank(self.field(), &self.words()) == self.dimension()
    }

    /// Eigenvalues of the Cayley graph via additive characters: the character
    /// indexed by `v` has eigenvalue `Σ_{s∈S} ω^{⟨v,s⟩}`. For q = 2 this is
    /// `N_0 − N_1`; for q = 3, negation closure forces `N_1 = N_2` and the sum
    /// is again the integer `N_0 − N_1`.
    pub fn spectrum(&self) -> Spectrum {
        let q = self.field();
        let k = self.dimension();
        let words: Vec<Vec<u8>> = self.elements.iter().map(|&s| self.space.word(s as u64).digits().to_vec()).collect();
        let eigen: Vec<i64> = (0..self.space.size())
            .into_par_iter()
            .map(|v| {
                let v = self.space.word(v);
                let mut counts = [0i64; 3];
                for s in &words {
                    let mut acc = 0u8;
                    for i in 0..k {
                        acc = q.add(acc, q.mul(v.digits()[i], s[i]));
                    }
                    counts[acc as usize] += 1;
                }
                if q.get() == 3 {
                    debug_assert_eq!(counts[1], counts[2]);
                }
                counts[0] - counts[1]
            })
            .collect();
        let mut spectrum = Spectrum::default();
        for e in eigen {
            *spectrum.multiplicities.entry(e).or_insert(0) += 1;
        }
        spectrum
    }
}

/// Multiset of integer eigenvalues.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Spectrum {
    multiplicities: BTreeMap<i64, u64>,
}

impl Spectrum {
    pub fn from_pairs(pairs: impl IntoIterator<Item = (i64, u64)>) -> Self {
        let mut multiplicities = BTreeMap::new();
        for (e, m) in pairs {
            if m > 0 {
                *multiplicities.entry(e).or_insert(0) += m;
            }
        }
        Spectrum { multiplicities }
    }

    /// Sum of multiplicities, i.e. the number of vertices.
    pub fn order(&self) -> u64 {
        self.multiplicities.values().sum()
    }

    pub fn multiplicity(&self, eigenvalue: i64) -> u64 {
        self.multiplicities.get(&eigenvalue).copied().unwrap_or(0)
    }

    /// Distinct eigenvalues, descending.
    pub fn eigenvalues(&self) -> Vec<i64> {
        self.multiplicities.keys().rev().copied().collect()
    }

    pub fn contains(&self, eigenvalue: i64) -> bool {
        self.multiplicities.contains_key(&eigenvalue)
    }

    pub fn largest(&self) -> Option<i64> {
        self.multiplicities.keys().next_back().copied()
    }

    /// `(eigenvalue, multiplicity)` pairs, descending by eigenvalue.
    pub fn pairs(&self) -> Vec<(i64, u64)> {
        self.multiplicities.iter().rev().map(|(&e, &m)| (e, m)).collect()
    }
}

impl fmt::Display for Spectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.pairs().iter().map(|(e, m)| format!("{e}^{m}")).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SrgParams {
    pub v: u64,
    pub k: u64,
    pub lambda: u64,
    pub mu: u64,
}

impl SrgParams {
    /// The counting identity `k(k − λ − 1) = (v − k − 1)μ`.
    pub fn is_consistent(&self) -> bool {
        self.k * (self.k - self.lambda - 1) == (self.v - self.k - 1) * self.mu
    }
}

impl fmt::Display for SrgParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SRG({},{},{},{})", self.v, self.k, self.lambda, self.mu)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphKind {
    Cayley(ConnectingSet),
    Hamming { n: usize },
}

/// A Cayley graph on the additive group of `GF(q)^m`. Vertices are word
/// indices.
#[derive(Clone, Debug)]
pub struct Graph {
    kind: GraphKind,
    space: WordSpace,
    degree: usize,
    table: Option<Vec<u32>>,
}

impl Graph {
    pub fn cayley(set: ConnectingSet) -> Self {
        Self::cayley_with_budget(set, DEFAULT_BUDGET)
    }

    pub fn cayley_with_budget(set: ConnectingSet, budget: u64) -> Self {
        let space = set.space().clone();
        let degree = set.len();
        let mut g = Graph { kind: GraphKind::Cayley(set), space, degree, table: None };
        g.materialize(budget);
        g
    }

    /// The syndrome (coset) graph `G(H)`: vertices `GF(q)^k`, `x ~ y` iff
    /// `x − y` is a nonzero multiple of a column of `H`.
    pub fn syndrome(h: &CheckMatrix) -> Self {
        Self::cayley(ConnectingSet::of_check_matrix(h))
    }

    /// `H(n, q)`; fails when `q^n` exceeds `budget`.
    pub fn hamming(n: usize, q: FieldOrder, budget: u64) -> Result<Self> {
        let space = WordSpace::with_budget(q, n, budget)?;
        let degree = (q.get() as usize - 1) * n;
        let mut g = Graph { kind: GraphKind::Hamming { n }, space, degree, table: None };
        g.materialize(budget);
        Ok(g)
    }

    fn materialize(&mut self, budget: u64) {
        let v = self.space.size();
        if v > budget || v * self.degree as u64 > TABLE_LIMIT {
            return;
        }
        let degree = self.degree;
        let mut table = vec![0u32; v as usize * degree];
        table.par_chunks_mut(degree.max(1)).enumerate().for_each(|(x, row)| {
            for (slot, y) in row.iter_mut().zip(self.generate_neighbors(x as u32)) {
                *slot = y;
            }
        });
        self.table = Some(table);
    }

    pub fn kind(&self) -> &GraphKind {
        &self.kind
    }

    pub fn space(&self) -> &WordSpace {
        &self.space
    }

    pub fn field(&self) -> FieldOrder {
        self.space.field()
    }

    /// Length of the vertex words.
    pub fn dimension(&self) -> usize {
        self.space.len()
    }

    pub fn order(&self) -> usize {
        self.space.size() as usize
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_explicit(&self) -> bool {
        self.table.is_some()
    }

    /// Neighbor slice of `x` when the adjacency table is materialized.
    #[inline]
    pub fn adjacent(&self, x: u32) -> Option<&[u32]> {
        self.table.as_ref().map(|t| {
            let start = x as usize * self.degree;
            &t[start..start + self.degree]
        })
    }

    pub(crate) fn table(&self) -> Result<&[u32]> {
        self.table.as_deref().ok_or(Error::NotExplicit)
    }

    pub fn neighbors(&self, x: u32) -> Neighbors<'_> {
        match self.adjacent(x) {
            Some(slice) => Neighbors::Table(slice.iter()),
            None => self.generate_neighbors(x),
        }
    }

    fn generate_neighbors(&self, x: u32) -> Neighbors<'_> {
        match &self.kind {
            GraphKind::Cayley(set) => Neighbors::Cayley { graph: self, x, elements: set.elements().iter() },
            GraphKind::Hamming { n } => Neighbors::Hamming { space: &self.space, x: x as u64, pos: 0, n: *n, next: 1 },
        }
    }

    pub fn is_adjacent(&self, x: u32, y: u32) -> bool {
        match &self.kind {
            GraphKind::Cayley(set) => {
                let diff = self.space.add(y as u64, self.space.neg(x as u64));
                set.contains(diff as u32)
            }
            GraphKind::Hamming { .. } => {
                let diff = self.space.add(y as u64, self.space.neg(x as u64));
                self.space.word(diff).weight() == 1
            }
        }
    }

    /// The connecting set; for `H(n,q)` this is the set of `±` unit vectors.
    pub fn connecting_set(&self) -> ConnectingSet {
        match &self.kind {
            GraphKind::Cayley(set) => set.clone(),
            GraphKind::Hamming { n } => ConnectingSet::units(self.field(), *n).expect("fits"),
        }
    }

    /// Cayley graph whose connecting set is every nonzero word not adjacent
    /// to zero.
    pub fn complement(&self) -> Graph {
        Graph::cayley(self.connecting_set().complement())
    }

    pub fn spectrum(&self) -> Spectrum {
        self.connecting_set().spectrum()
    }

    pub fn is_connected(&self) -> bool {
        match &self.kind {
            GraphKind::Cayley(set) => set.is_connected(),
            GraphKind::Hamming { .. } => true,
        }
    }

    /// Vertex eccentricity of zero (equals the diameter by transitivity).
    pub fn diameter(&self) -> Option<usize> {
        let dist = self.bfs_from(&[0]);
        dist.iter().try_fold(0usize, |acc, &d| (d != u32::MAX).then_some(acc.max(d as usize)))
    }

    pub(crate) fn bfs_from(&self, sources: &[u32]) -> Vec<u32> {
        let mut dist = vec![u32::MAX; self.order()];
        let mut frontier: Vec<u32> = Vec::with_capacity(sources.len());
        for &s in sources {
            if dist[s as usize] == u32::MAX {
                dist[s as usize] = 0;
                frontier.push(s);
            }
        }
        let mut level = 0;
        while !frontier.is_empty() {
            level += 1;
            let mut next = Vec::new();
            for &x in &frontier {
                for y in self.neighbors(x) {
                    if dist[y as usize] == u32::MAX {
                        dist[y as usize] = level;
                        next.push(y);
                    }
                }
            }
            frontier = next;
        }
        dist
    }

    /// `(v, k, λ, μ)` if the graph is strongly regular. Translations act
    /// transitively, so it suffices to count common neighbors of `0` and every
    /// other vertex. Complete and edgeless graphs are not reported.
    pub fn srg_parameters(&self) -> Option<SrgParams> {
        let v = self.order();
        let k = self.degree;
        if k == 0 || k + 1 >= v {
            return None;
        }
        let mut common = vec![0u32; v];
        for u in self.neighbors(0) {
            for w in self.neighbors(u) {
                common[w as usize] += 1;
            }
        }
        let mut adjacent = vec![false; v];
        for u in self.neighbors(0) {
            adjacent[u as usize] = true;
        }
        let (mut lambda, mut mu) = (None, None);
        for x in 1..v {
            let slot = if adjacent[x] { &mut lambda } else { &mut mu };
            match *slot {
                None => *slot = Some(common[x]),
                Some(c) if c != common[x] => return None,
                Some(_) => {}
            }
        }
        Some(SrgParams { v: v as u64, k: k as u64, lambda: lambda? as u64, mu: mu? as u64 })
    }
}

pub enum Neighbors<'a> {
    Table(std::slice::Iter<'a, u32>),
    Cayley { graph: &'a Graph, x: u32, elements: std::slice::Iter<'a, u32> },
    Hamming { space: &'a WordSpace, x: u64, pos: usize, n: usize, next: u8 },
}

impl Iterator for Neighbors<'_> {
    type Item = u32;

    #[inline]
    fn next(&mut self) -> Option<u32> {
        match self {
            Neighbors::Table(it) => it.next().copied(),
            Neighbors::Cayley { graph, x, elements } => {
                elements.next().map(|&s| graph.space.add(*x as u64, s as u64) as u32)
            }
            Neighbors::Hamming { space, x, pos, n, next } => {
                let q = space.field().get();
                loop {
                    if *pos >= *n {
                        return None;
                    }
                    let place = space.place(*pos);
                    let d = space.digit(*x, *pos);
                    if *next < q {
                        let target = (d + *next) % q;
                        *next += 1;
                        return Some((*x - d as u64 * place + target as u64 * place) as u32);
                    }
                    *pos += 1;
                    *next = 1;
                }
            }
        }
    }
}

/// Outcome of checking that the syndrome map `H(n,q) → G(H)` is a covering.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoveringCheck {
    pub vertices_checked: u64,
    pub exhaustive: bool,
    /// First vertex of `H(n,q)` whose neighborhood is not mapped bijectively.
    pub violation: Option<Word>,
}

impl CoveringCheck {
    pub fn is_covering(&self) -> bool {
        self.violation.is_none()
    }
}

/// Checks local bijectivity of `x ↦ Hx` on every vertex of `H(n,q)` when
/// `q^n ≤ budget`, otherwise on `samples` seeded random vertices.
pub fn verify_covering(h: &CheckMatrix, budget: u64, samples: u64, seed: u64) -> CoveringCheck {
    verify_covering_columns(h.field(), h.k(), h.columns(), budget, samples, seed)
}

/// Column-list form of [`verify_covering`]; accepts lists that would not form
/// a valid check matrix so that failures can be reported.
pub fn verify_covering_columns(
    q: FieldOrder,
    k: usize,
    columns: &[Word],
    budget: u64,
    samples: u64,
    seed: u64,
) -> CoveringCheck {
    let n = columns.len();
    let target = WordSpace::new(q, k).expect("syndrome space fits");
    let col_idx: Vec<u64> = columns.iter().map(Word::index).collect();
    let syndrome = |digits: &[u8]| -> u64 {
        digits.iter().zip(&col_idx).fold(0, |acc, (&d, &c)| target.add(acc, target.scale(d, c)))
    };
    // Neighbors of s in G(H) are s + S where S is the set of column multiples.
    let mut set: Vec<u64> =
        col_idx.iter().flat_map(|&c| q.units().map(move |a| (a, c))).map(|(a, c)| target.scale(a, c)).collect();
    set.sort_unstable();
    set.dedup();
    let simple = set.len() == n * (q.get() as usize - 1) && !set.contains(&0);

    let check = |x: &Word| -> bool {
        if !simple {
            return false;
        }
        let s = syndrome(x.digits());
        let mut images = Vec::with_capacity(n * (q.get() as usize - 1));
        let mut y = x.digits().to_vec();
        for i in 0..n {
            let orig = y[i];
            for a in q.units() {
                y[i] = q.add(orig, a);
                images.push(syndrome(&y));
            }
            y[i] = orig;
        }
        images.sort_unstable();
        let mut expected: Vec<u64> = set.iter().map(|&t| target.add(s, t)).collect();
        expected.sort_unstable();
        images == expected
    };

    let exhaustive = q.pow(n).is_some_and(|size| size <= budget);
    if exhaustive {
        let space = WordSpace::new(q, n).expect("within budget");
        let violation =
            (0..space.size()).into_par_iter().find_first(|&i| !check(&space.word(i))).map(|i| space.word(i));
        CoveringCheck { vertices_checked: space.size(), exhaustive: true, violation }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for i in 0..samples {
            let digits = (0..n).map(|_| rng.gen_range(0..q.get())).collect();
            let x = Word::new(q, digits).expect("residues in range");
            if !check(&x) {
                return CoveringCheck { vertices_checked: i + 1, exhaustive: false, violation: Some(x) };
            }
        }
        CoveringCheck { vertices_checked: samples, exhaustive: false, violation: None }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fixture(text: &str) -> CheckMatrix {
        CheckMatrix::parse(text, FieldOrder::GF3).unwrap()
    }

    #[test]
    fn connecting_set_sizes() {
        let h4 = fixture(include_str!("../fixtures/cr10_8.H"));
        assert_eq!(ConnectingSet::of_check_matrix(&h4).len(), 14);
        let h5 = fixture(include_str!("../fixtures/cr21_4.H"));
        assert_eq!(ConnectingSet::of_check_matrix(&h5).len(), 22);
        let units = ConnectingSet::of_check_matrix(&CheckMatrix::identity(FieldOrder::GF3, 3));
        assert!(units.words().iter().all(|w| w.weight() == 1));
    }

    #[test]
    fn connecting_set_validation() {
        let q = FieldOrder::GF3;
        let one = Word::parse(q, "10").unwrap();
        assert!(ConnectingSet::new(q, 2, std::slice::from_ref(&one)).is_err());
        assert!(ConnectingSet::new(q, 2, &[Word::zero(q, 2)]).is_err());
        assert!(ConnectingSet::new(q, 2, &[one.clone(), one.neg()]).is_ok());
        assert!(ConnectingSet::new(q, 2, &[one.clone(), one.neg(), one]).is_err());
    }

    #[test]
    fn syndrome_graphs() {
        let g = Graph::syndrome(&fixture(include_str!("../fixtures/cr10_8.H")));
        assert_eq!((g.order(), g.degree()), (81, 14));
        let g = Graph::syndrome(&fixture(include_str!("../fixtures/cr21_4.H")));
        assert_eq!((g.order(), g.degree(), g.diameter()), (81, 22, Some(2)));
        let g = Graph::syndrome(&CheckMatrix::identity(FieldOrder::GF3, 4));
        assert_eq!(g.degree(), 8);
        let h = Graph::hamming(4, FieldOrder::GF3, DEFAULT_BUDGET).unwrap();
        for x in 0..81 {
            let mut a: Vec<u32> = g.neighbors(x).collect();
            let mut b: Vec<u32> = h.neighbors(x).collect();
            a.sort_unstable();
            b.sort_unstable();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn hamming_graphs() {
        let q3 = FieldOrder::GF3;
        let g = Graph::hamming(7, q3, DEFAULT_BUDGET).unwrap();
        assert_eq!((g.order(), g.degree()), (2187, 14));
        let c4 = Graph::hamming(2, FieldOrder::GF2, DEFAULT_BUDGET).unwrap();
        let n0: Vec<u32> = c4.neighbors(0).collect();
        assert_eq!(n0, vec![2, 1]);
        assert_eq!(c4.srg_parameters(), Some(SrgParams { v: 4, k: 2, lambda: 0, mu: 2 }));
        let g = Graph::hamming(11, q3, DEFAULT_BUDGET).unwrap();
        assert_eq!((g.order(), g.degree()), (177_147, 22));
        assert!(matches!(Graph::hamming(14, q3, DEFAULT_BUDGET), Err(Error::BudgetExceeded { .. })));
        let big = Graph::hamming(13, q3, DEFAULT_BUDGET).unwrap();
        assert!(!big.is_explicit());
        assert_eq!(big.neighbors(5).count(), 26);
        assert!(big.neighbors(5).all(|y| big.is_adjacent(5, y)));
    }

    #[test]
    fn complement_examples() {
        let g = Graph::syndrome(&fixture(include_str!("../fixtures/srg81_20.H")));
        let c = g.complement();
        assert_eq!(c.srg_parameters(), Some(SrgParams { v: 81, k: 60, lambda: 45, mu: 42 }));
        assert_eq!(c.complement().connecting_set(), g.connecting_set());
        let space = WordSpace::new(FieldOrder::GF3, 2).unwrap();
        let all = ConnectingSet::from_indices(space, (1..9).collect()).unwrap();
        assert!(all.complement().is_empty());
    }

    #[test]
    fn spectrum_examples() {
        let g = Graph::syndrome(&fixture(include_str!("../fixtures/cr21_4.H")));
        assert_eq!(g.spectrum().to_string(), "{22^1,10^2,4^12,1^44,-5^14,-8^8}");
        let space = WordSpace::new(FieldOrder::GF3, 2).unwrap();
        let k9 = ConnectingSet::from_indices(space, (1..9).collect()).unwrap();
        assert_eq!(k9.spectrum(), Spectrum::from_pairs([(8, 1), (-1, 8)]));
        let bh = Graph::syndrome(&fixture(include_str!("../fixtures/srg81_20.H")));
        assert_eq!(bh.spectrum(), Spectrum::from_pairs([(20, 1), (2, 60), (-7, 20)]));
    }

    #[test]
    fn srg_detection() {
        let bh = Graph::syndrome(&fixture(include_str!("../fixtures/srg81_20.H")));
        let p = bh.srg_parameters().unwrap();
        assert_eq!(p, SrgParams { v: 81, k: 20, lambda: 1, mu: 6 });
        assert!(p.is_consistent());
        let g4 = Graph::syndrome(&fixture(include_str!("../fixtures/cr10_8.H")));
        assert_eq!(g4.srg_parameters(), None);
    }

    #[test]
    fn connectivity() {
        let h5 = fixture(include_str!("../fixtures/cr21_4.H"));
        assert!(ConnectingSet::of_check_matrix(&h5).is_connected());
        // rank 2 < k = 4: the third row is the sum of the first two
        let low =
            CheckMatrix::from_rows(FieldOrder::GF3, vec![vec![1, 0, 1], vec![0, 1, 1], vec![1, 1, 2], vec![0, 0, 0]])
                .unwrap();
        let s = ConnectingSet::of_check_matrix(&low);
        assert!(!s.is_connected());
        let spec = s.spectrum();
        // degree multiplicity counts components: 81 / 9
        assert_eq!(spec.multiplicity(s.len() as i64), 9);
        assert!(ConnectingSet::units(FieldOrder::GF3, 4).unwrap().is_connected());
    }

    #[test]
    fn covering_checks() {
        let h4 = fixture(include_str!("../fixtures/cr10_8.H"));
        let c = verify_covering(&h4, DEFAULT_BUDGET, 0, 0);
        assert!(c.is_covering() && c.exhaustive);
        assert_eq!(c.vertices_checked, 2187);
        let id = CheckMatrix::identity(FieldOrder::GF2, 5);
        assert!(verify_covering(&id, DEFAULT_BUDGET, 0, 0).is_covering());
        let h5 = fixture(include_str!("../fixtures/cr21_4.H"));
        let sampled = verify_covering(&h5, 1000, 500, 7);
        assert!(sampled.is_covering() && !sampled.exhaustive);
        let q = FieldOrder::GF3;
        let dup = vec![Word::parse(q, "10").unwrap(), Word::parse(q, "01").unwrap(), Word::parse(q, "20").unwrap()];
        let bad = verify_covering_columns(q, 2, &dup, DEFAULT_BUDGET, 0, 0);
        assert_eq!(bad.violation, Some(Word::zero(q, 3)));
    }
}
