//! Isomorph-free generation of projective point sets of `PG(k−1, q)` up to
//! `GL(k, q)`, i.e. of Cayley graphs `G(H)` up to linear equivalence of the
//! check matrix columns.
//!
//! Canonical forms come from an individualise-and-refine search over ordered
//! bases taken from the set: every basis (with scalings) is mapped to the unit
//! vectors, and the least image wins. Point invariants built from line and
//! plane intersection numbers prune the search and order the branches.
//! Generation is by canonical augmentation.

use std::collections::HashSet;
use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::gf::{CheckMatrix, FieldOrder, Word, WordSpace};
use crate::graph::Graph;

type Bits = u128;

fn bits(set: Bits) -> impl Iterator<Item = usize> {
    let mut s = set;
    std::iter::from_fn(move || {
        (s != 0).then(|| {
            let i = s.trailing_zeros() as usize;
            s &= s - 1;
            i
        })
    })
}

/// Points, lines and planes of `PG(k−1, q)` for `q^k ≤ 243`.
pub struct Geometry {
    q: FieldOrder,
    k: usize,
    space: WordSpace,
    /// Vector index of each point's normalized representative, increasing.
    points: Vec<u32>,
    /// Point id of each nonzero vector index.
    id_of: Vec<u8>,
    lines: Vec<Bits>,
    line_of: Vec<u16>,
    lines_through: Vec<Vec<u16>>,
    planes: Vec<Bits>,
    planes_through: Vec<Vec<u16>>,
}

impl Geometry {
    pub fn new(q: FieldOrder, k: usize) -> Result<Self> {
        let space = WordSpace::with_budget(q, k, 243)?;
        if k < 1 {
            return Err(Error::InvalidArgument("dimension must be positive".into()));
        }
        let size = space.size();
        let points: Vec<u32> = (1..size).filter(|&v| space.normalize(v) == v).map(|v| v as u32).collect();
        let mut id_of = vec![u8::MAX; size as usize];
        for v in 1..size {
            let p = space.normalize(v);
            id_of[v as usize] = points.binary_search(&(p as u32)).expect("normalized") as u8;
        }
        let mut geo = Geometry {
            q,
            k,
            space,
            points,
            id_of,
            lines: Vec::new(),
            line_of: Vec::new(),
            lines_through: Vec::new(),
            planes: Vec::new(),
            planes_through: Vec::new(),
        };
        let n = geo.points.len();
        geo.line_of = vec![u16::MAX; n * n];
        geo.lines_through = vec![Vec::new(); n];
        for a in 0..n {
            for b in a + 1..n {
                if geo.line_of[a * n + b] != u16::MAX {
                    continue;
                }
                let line = geo.span(&[a, b]);
                let id = geo.lines.len() as u16;
                for x in bits(line) {
                    geo.lines_through[x].push(id);
                    for y in bits(line) {
                        geo.line_of[x * n + y] = id;
                    }
                }
                geo.lines.push(line);
            }
        }
        geo.planes_through = vec![Vec::new(); n];
        if k >= 3 {
            let mut seen = HashSet::new();
            for &line in &geo.lines.clone() {
                let a = line.trailing_zeros() as usize;
                for c in 0..n {
                    if line & (1 << c) != 0 {
                        continue;
                    }
                    let b = bits(line).nth(1).expect("lines have q+1 points");
                    let plane = geo.span(&[a, b, c]);
                    if seen.insert(plane) {
                        let id = geo.planes.len() as u16;
                        for x in bits(plane) {
                            geo.planes_through[x].push(id);
                        }
                        geo.planes.push(plane);
                    }
                }
            }
        }
        Ok(geo)
    }

    pub fn num_points(&self) -> usize {
        self.points.len()
    }

    pub fn field(&self) -> FieldOrder {
        self.q
    }

    pub fn dimension(&self) -> usize {
        self.k
    }

    fn point_word(&self, id: usize) -> Word {
        self.space.word(self.points[id] as u64)
    }

    fn id_of_vector(&self, v: u64) -> usize {
        self.id_of[v as usize] as usize
    }

    /// Points of the subspace spanned by the given points.
    fn span(&self, pts: &[usize]) -> Bits {
        let mut vectors: Vec<u64> = vec![0];
        for &p in pts {
            let v = self.points[p] as u64;
            let mut next = vectors.clone();
            for &w in &vectors {
                for a in self.q.units() {
                    next.push(self.space.add(w, self.space.scale(a, v)));
                }
            }
            next.sort_unstable();
            next.dedup();
            vectors = next;
        }
        vectors.iter().filter(|&&v| v != 0).fold(0, |acc, &v| acc | 1 << self.id_of_vector(v))
    }

    fn line(&self, a: usize, b: usize) -> Bits {
        self.lines[self.line_of[a * self.points.len() + b] as usize]
    }

    pub fn rank(&self, set: Bits) -> usize {
        let mut span: Bits = 0;
        let mut basis = Vec::new();
        for p in bits(set) {
            if span & (1 << p) == 0 {
                basis.push(p);
                span = self.span(&basis);
            }
        }
        basis.len()
    }

    /// Line and plane intersection profile of `x` within `set`.
    fn invariant(&self, set: Bits, x: usize) -> Vec<u8> {
        let q = self.q.get() as usize;
        let mut hist = vec![0u8; q + 2];
        for &l in &self.lines_through[x] {
            hist[(self.lines[l as usize] & set).count_ones() as usize] += 1;
        }
        if !self.planes.is_empty() {
            let mut ph = vec![0u8; q * q + q + 2];
            for &p in &self.planes_through[x] {
                ph[(self.planes[p as usize] & set).count_ones() as usize] += 1;
            }
            hist.extend(ph);
        }
        hist
    }
}

/// A set of points of `PG(k−1, q)`: the column set of a check matrix up to
/// scalar multiples.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjectivePointSet {
    q: FieldOrder,
    k: usize,
    points: Vec<Word>,
}

impl ProjectivePointSet {
    pub fn new(q: FieldOrder, k: usize, words: &[Word]) -> Result<Self> {
        let mut points = Vec::with_capacity(words.len());
        for w in words {
            if w.len() != k {
                return Err(Error::DimensionMismatch { expected: k, found: w.len() });
            }
            if w.field() != q {
                return Err(Error::FieldMismatch { left: q.get(), right: w.field().get() });
            }
            if w.is_zero() {
                return Err(Error::InvalidArgument("the zero vector is not a projective point".into()));
            }
            points.push(w.normalized());
        }
        points.sort();
        let before = points.len();
        points.dedup();
        if points.len() != before {
            return Err(Error::InvalidArgument("repeated projective point".into()));
        }
        Ok(ProjectivePointSet { q, k, points })
    }

    pub fn of_check_matrix(h: &CheckMatrix) -> Self {
        Self::new(h.field(), h.k(), h.columns()).expect("check matrix columns are distinct projective points")
    }

    pub fn points(&self) -> &[Word] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn check_matrix(&self) -> Result<CheckMatrix> {
        CheckMatrix::from_columns(self.q, self.points.clone())
    }

    fn to_bits(&self, geo: &Geometry) -> Bits {
        self.points.iter().fold(0, |acc, w| acc | 1 << geo.id_of_vector(w.index()))
    }

    fn from_bits(geo: &Geometry, set: Bits) -> Self {
        ProjectivePointSet { q: geo.q, k: geo.k, points: bits(set).map(|p| geo.point_word(p)).collect() }
    }
}

impl fmt::Display for ProjectivePointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cols: Vec<String> = self.points.iter().map(Word::to_string).collect();
        write!(f, "{{{}}}", cols.join(","))
    }
}

/// Result of the canonical search on one set.
struct Canon {
    /// Refinement keys along the path, then the image.
    key: (Vec<Vec<u8>>, Bits),
    /// For each optimal leaf: the image point of every member of the set.
    maps: Vec<Vec<(usize, usize)>>,
}

struct Searcher<'a> {
    geo: &'a Geometry,
    set: Bits,
    inv: Vec<Vec<u8>>,
    best: Option<Canon>,
}

impl Searcher<'_> {
    fn key(&self, x: usize, chosen: &[usize]) -> Vec<u8> {
        let mut key = self.inv[x].clone();
        for &c in chosen {
            key.push((self.geo.line(x, c) & self.set).count_ones() as u8);
        }
        for i in 0..chosen.len() {
            for j in i + 1..chosen.len() {
                key.push((self.geo.span(&[x, chosen[i], chosen[j]]) & self.set).count_ones() as u8);
            }
        }
        key
    }

    fn run(&mut self, chosen: &mut Vec<usize>, span: Bits, path: &mut Vec<Vec<u8>>) {
        // prune branches whose path is already worse than the best
        if let Some(best) = &self.best {
            let d = path.len();
            if best.key.0.len() >= d && path[..] > best.key.0[..d] {
                return;
            }
        }
        let candidates: Vec<usize> = bits(self.set & !span).collect();
        if candidates.is_empty() {
            self.leaf(chosen, path);
            return;
        }
        let mut keyed: Vec<(Vec<u8>, usize)> = candidates.iter().map(|&x| (self.key(x, chosen), x)).collect();
        keyed.sort();
        // target class: smallest, then least key
        let mut classes: Vec<(usize, &Vec<u8>, usize)> = Vec::new();
        let mut start = 0;
        while start < keyed.len() {
            let end = keyed[start..].iter().position(|(k, _)| *k != keyed[start].0).map_or(keyed.len(), |o| start + o);
            classes.push((end - start, &keyed[start].0, start));
            start = end;
        }
        let &(size, key, from) = classes.iter().min().expect("nonempty");
        let key = key.clone();
        let members: Vec<usize> = keyed[from..from + size].iter().map(|&(_, x)| x).collect();
        path.push(key);
        for x in members {
            chosen.push(x);
            let new_span = self.geo.span(chosen);
            self.run(chosen, new_span, path);
            chosen.pop();
        }
        path.pop();
    }

    fn leaf(&mut self, chosen: &[usize], path: &[Vec<u8>]) {
        let geo = self.geo;
        let q = geo.q;
        let r = chosen.len();
        let k = geo.k;
        // coordinates in the chosen basis via an invertible r×r row selection
        let basis: Vec<Vec<u8>> = chosen.iter().map(|&c| geo.point_word(c).digits().to_vec()).collect();
        let (rows, inv) = select_and_invert(q, &basis, k);
        let members: Vec<usize> = bits(self.set).collect();
        let coords: Vec<Vec<u8>> = members
            .iter()
            .map(|&x| {
                let w = geo.point_word(x);
                (0..r)
                    .map(|i| {
                        rows.iter()
                            .enumerate()
                            .fold(0u8, |acc, (j, &row)| q.add(acc, q.mul(inv[i][j], w.digits()[row])))
                    })
                    .collect()
            })
            .collect();
        let units: Vec<u8> = q.units().collect();
        let combos = units.len().pow(r.saturating_sub(1) as u32);
        for combo in 0..combos {
            let mut lambda = vec![1u8; r];
            let mut c = combo;
            for l in lambda.iter_mut().skip(1) {
                *l = units[c % units.len()];
                c /= units.len();
            }
            let mut image: Bits = 0;
            let mut map = Vec::with_capacity(members.len());
            for (m, co) in members.iter().zip(&coords) {
                let v = (0..r).fold(0u64, |acc, i| acc + q.mul(co[i], lambda[i]) as u64 * geo.space.place(i));
                let p = geo.id_of_vector(v);
                image |= 1 << p;
                map.push((*m, p));
            }
            let key = (path.to_vec(), image);
            match &mut self.best {
                Some(best) if best.key == key => best.maps.push(map),
                Some(best) if best.key < key => {}
                _ => self.best = Some(Canon { key, maps: vec![map] }),
            }
        }
    }
}

/// Chooses `r` rows where the `r` basis vectors are independent and returns
/// them with the inverse of that `r×r` block (as `inv[i][j]`, coefficient of
/// selected row `j` in coordinate `i`).
fn select_and_invert(q: FieldOrder, basis: &[Vec<u8>], k: usize) -> (Vec<usize>, Vec<Vec<u8>>) {
    let r = basis.len();
    // m[row][i] = basis[i][row]
    let mut rows = Vec::new();
    let mut echelon: Vec<Vec<u8>> = Vec::new();
    let mut pivots: Vec<usize> = Vec::new();
    for row in 0..k {
        let mut v: Vec<u8> = (0..r).map(|i| basis[i][row]).collect();
        for (e, &p) in echelon.iter().zip(&pivots) {
            if v[p] != 0 {
                let f = q.mul(v[p], q.inv(e[p]));
                for (x, &y) in v.iter_mut().zip(e) {
                    *x = q.sub(*x, q.mul(f, y));
                }
            }
        }
        if let Some(p) = v.iter().position(|&x| x != 0) {
            echelon.push(v);
            pivots.push(p);
            rows.push(row);
            if rows.len() == r {
                break;
            }
        }
    }
    // invert the r×r matrix a[j][i] = basis[i][rows[j]]
    let mut a: Vec<Vec<u8>> = rows.iter().map(|&row| (0..r).map(|i| basis[i][row]).collect()).collect();
    let mut inv: Vec<Vec<u8>> = (0..r).map(|i| (0..r).map(|j| u8::from(i == j)).collect()).collect();
    for col in 0..r {
        let piv = (col..r).find(|&i| a[i][col] != 0).expect("selected rows are independent");
        a.swap(col, piv);
        inv.swap(col, piv);
        let s = q.inv(a[col][col]);
        for j in 0..r {
            a[col][j] = q.mul(a[col][j], s);
            inv[col][j] = q.mul(inv[col][j], s);
        }
        for i in 0..r {
            if i != col && a[i][col] != 0 {
                let f = a[i][col];
                for j in 0..r {
                    a[i][j] = q.sub(a[i][j], q.mul(f, a[col][j]));
                    inv[i][j] = q.sub(inv[i][j], q.mul(f, inv[col][j]));
                }
            }
        }
    }
    // a·x = y with a[j][i] = basis[i][rows[j]]: coords x = a^{-1} y
    (rows, inv)
}

fn canon(geo: &Geometry, set: Bits) -> Canon {
    let inv: Vec<Vec<u8>> =
        (0..geo.num_points()).map(|x| if set & (1 << x) != 0 { geo.invariant(set, x) } else { Vec::new() }).collect();
    let mut s = Searcher { geo, set, inv, best: None };
    if set == 0 {
        return Canon { key: (Vec::new(), 0), maps: vec![Vec::new()] };
    }
    s.run(&mut Vec::new(), 0, &mut Vec::new());
    s.best.expect("a nonempty set has a leaf")
}

/// Least image of the set under the basis-anchored maps; equal for two sets
/// exactly when they are `GL(k,q)`-equivalent.
pub fn canonical_form(s: &ProjectivePointSet) -> Result<ProjectivePointSet> {
    let geo = Geometry::new(s.q, s.k)?;
    Ok(ProjectivePointSet::from_bits(&geo, canon(&geo, s.to_bits(&geo)).key.1))
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EnumerationStats {
    /// Classes kept at each size `1..=n`.
    pub per_level: Vec<usize>,
}

/// Whether `p` is a canonical deletion point of `set` (McKay's criterion).
fn accepts(geo: &Geometry, set: Bits, p: usize) -> Option<Bits> {
    let inv_p = geo.invariant(set, p);
    let max_inv = bits(set).map(|x| geo.invariant(set, x)).max().expect("nonempty");
    if inv_p != max_inv {
        return None;
    }
    let c = canon(geo, set);
    let first = &c.maps[0];
    let target = first
        .iter()
        .filter(|&&(x, _)| geo.invariant(set, x) == max_inv)
        .map(|&(_, img)| img)
        .max()
        .expect("class nonempty");
    let in_orbit = c.maps.iter().any(|m| m.iter().any(|&(x, img)| x == p && img == target));
    in_orbit.then_some(c.key.1)
}

/// All `n`-point sets of `PG(k−1,q)` up to `GL(k,q)`, optionally only those
/// spanning the whole space (connected Cayley graphs).
pub fn enumerate_graphs(q: FieldOrder, k: usize, n: usize, connected_only: bool) -> Result<Vec<ProjectivePointSet>> {
    Ok(enumerate_with_stats(q, k, n, connected_only)?.0)
}

pub fn enumerate_with_stats(
    q: FieldOrder,
    k: usize,
    n: usize,
    connected_only: bool,
) -> Result<(Vec<ProjectivePointSet>, EnumerationStats)> {
    let geo = Geometry::new(q, k)?;
    let total = geo.num_points();
    if n > total {
        return Err(Error::InvalidArgument(format!("PG({},{}) has only {total} points", k - 1, q.get())));
    }
    let mut stats = EnumerationStats::default();
    if n == 0 {
        return Ok((vec![], stats));
    }
    let mut level: Vec<Bits> = vec![1];
    stats.per_level.push(1);
    for size in 2..=n {
        let children: Vec<Vec<Bits>> = level
            .par_iter()
            .map(|&parent| {
                let mut seen = HashSet::new();
                let mut out = Vec::new();
                for p in 0..total {
                    if parent & (1 << p) != 0 {
                        continue;
                    }
                    let child = parent | 1 << p;
                    if connected_only && geo.rank(child) + (n - size) < k {
                        continue;
                    }
                    if let Some(form) = accepts(&geo, child, p) {
                        if seen.insert(form) {
                            out.push(form);
                        }
                    }
                }
                out
            })
            .collect();
        level = children.into_iter().flatten().collect();
        level.sort_unstable();
        stats.per_level.push(level.len());
    }
    if connected_only {
        level.retain(|&s| geo.rank(s) == k);
    }
    let out = level.iter().map(|&s| ProjectivePointSet::from_bits(&geo, s)).collect();
    Ok((out, stats))
}

/// The Cayley graph with connecting set all nonzero multiples of the points.
pub fn graph_of(s: &ProjectivePointSet) -> Result<Graph> {
    Ok(Graph::syndrome(&s.check_matrix()?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_invertible(q: FieldOrder, k: usize, rng: &mut ChaCha8Rng) -> Vec<Vec<u8>> {
        loop {
            let m: Vec<Vec<u8>> = (0..k).map(|_| (0..k).map(|_| rng.gen_range(0..q.get())).collect()).collect();
            let rows: Vec<Word> = m.iter().map(|r| Word::new(q, r.clone()).unwrap()).collect();
            if crate::gf::rank(q, &rows) == k {
                return m;
            }
        }
    }

    fn apply(q: FieldOrder, m: &[Vec<u8>], w: &Word) -> Word {
        let digits =
            m.iter().map(|row| row.iter().zip(w.digits()).fold(0, |acc, (&a, &b)| q.add(acc, q.mul(a, b)))).collect();
        Word::new(q, digits).unwrap()
    }

    fn random_set(q: FieldOrder, k: usize, n: usize, rng: &mut ChaCha8Rng) -> ProjectivePointSet {
        let geo = Geometry::new(q, k).unwrap();
        let mut set: Bits = 0;
        while (set.count_ones() as usize) < n {
            set |= 1 << rng.gen_range(0..geo.num_points());
        }
        ProjectivePointSet::from_bits(&geo, set)
    }

    #[test]
    fn geometry_counts() {
        let g = Geometry::new(FieldOrder::GF3, 4).unwrap();
        assert_eq!((g.num_points(), g.lines.len(), g.planes.len()), (40, 130, 40));
        let g = Geometry::new(FieldOrder::GF2, 3).unwrap();
        assert_eq!((g.num_points(), g.lines.len(), g.planes.len()), (7, 7, 1));
    }

    #[test]
    fn canonical_form_is_orbit_invariant() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for (q, k, n) in
            [(FieldOrder::GF3, 4, 11), (FieldOrder::GF3, 4, 6), (FieldOrder::GF2, 5, 9), (FieldOrder::GF3, 3, 5)]
        {
            for _ in 0..5 {
                let s = random_set(q, k, n, &mut rng);
                let m = random_invertible(q, k, &mut rng);
                let moved: Vec<Word> = s.points().iter().map(|w| apply(q, &m, w)).collect();
                let t = ProjectivePointSet::new(q, k, &moved).unwrap();
                assert_eq!(canonical_form(&s).unwrap(), canonical_form(&t).unwrap());
            }
        }
    }

    #[test]
    fn unit_vectors_are_canonical() {
        let q = FieldOrder::GF3;
        let units: Vec<Word> = (0..3).map(|i| Word::unit(q, 3, i)).collect();
        let s = ProjectivePointSet::new(q, 3, &units).unwrap();
        assert_eq!(canonical_form(&s).unwrap(), s);
    }

    #[test]
    fn k4_is_unique() {
        let out = enumerate_graphs(FieldOrder::GF2, 2, 3, true).unwrap();
        assert_eq!(out.len(), 1);
        assert_eq!(graph_of(&out[0]).unwrap().degree(), 3);
    }

    #[test]
    fn distinct_28_8_graphs_have_distinct_forms() {
        let a = CheckMatrix::parse(include_str!("../fixtures/cr28_8_a.H"), FieldOrder::GF3).unwrap();
        let b = CheckMatrix::parse(include_str!("../fixtures/cr28_8_b.H"), FieldOrder::GF3).unwrap();
        let fa = canonical_form(&ProjectivePointSet::of_check_matrix(&a)).unwrap();
        let fb = canonical_form(&ProjectivePointSet::of_check_matrix(&b)).unwrap();
        assert_ne!(fa, fb);
    }
}
