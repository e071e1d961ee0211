//! Orbit counts of point sets under the full matrix group, by brute force.

use std::collections::HashSet;

use crcodes::enumerate::{enumerate_graphs, enumerate_with_stats};
use crcodes::gf::{rank, FieldOrder, Word, WordSpace};

struct Brute {
    points: Vec<Word>,
    /// Point permutations of every invertible matrix.
    perms: Vec<Vec<usize>>,
    k: usize,
    q: FieldOrder,
}

impl Brute {
    fn new(q: FieldOrder, k: usize) -> Self {
        let space = WordSpace::new(q, k).unwrap();
        let points: Vec<Word> = space.words().filter(|w| !w.is_zero() && w.normalized() == *w).collect();
        let id = |w: &Word| points.iter().position(|p| *p == w.normalized()).unwrap();
        let mut perms = Vec::new();
        let entries = WordSpace::new(q, k * k).unwrap();
        for m in entries.words() {
            let rows: Vec<Word> = m.digits().chunks(k).map(|r| Word::new(q, r.to_vec()).unwrap()).collect();
            if rank(q, &rows) < k {
                continue;
            }
            let perm = points
                .iter()
                .map(|p| id(&Word::new(q, rows.iter().map(|r| r.dot(p).unwrap()).collect()).unwrap()))
                .collect();
            perms.push(perm);
        }
        perms.sort();
        perms.dedup();
        Brute { points, perms, k, q }
    }

    fn rank_of(&self, set: u64) -> usize {
        let cols: Vec<Word> =
            (0..self.points.len()).filter(|&i| set >> i & 1 == 1).map(|i| self.points[i].clone()).collect();
        rank(self.q, &cols)
    }

    /// Orbits of `n`-subsets: (all, spanning).
    fn orbits(&self, n: usize) -> (usize, usize) {
        let np = self.points.len();
        let mut seen = HashSet::new();
        let (mut all, mut spanning) = (0, 0);
        for set in 0u64..1 << np {
            if set.count_ones() as usize != n || seen.contains(&set) {
                continue;
            }
            all += 1;
            if self.rank_of(set) == self.k {
                spanning += 1;
            }
            for perm in &self.perms {
                let image = (0..np).filter(|&i| set >> i & 1 == 1).fold(0u64, |acc, i| acc | 1 << perm[i]);
                seen.insert(image);
            }
        }
        (all, spanning)
    }
}

fn compare(q: FieldOrder, k: usize) {
    let brute = Brute::new(q, k);
    for n in 1..=brute.points.len() {
        let (all, spanning) = brute.orbits(n);
        assert_eq!(enumerate_graphs(q, k, n, false).unwrap().len(), all, "q={q} k={k} n={n} all");
        assert_eq!(enumerate_graphs(q, k, n, true).unwrap().len(), spanning, "q={q} k={k} n={n} spanning");
    }
}

#[test]
fn ternary_plane_matches_brute_force() {
    compare(FieldOrder::GF3, 3);
}

#[test]
fn binary_three_space_matches_brute_force() {
    compare(FieldOrder::GF2, 4);
}

#[test]
fn small_spaces_match_brute_force() {
    compare(FieldOrder::GF2, 3);
    compare(FieldOrder::GF3, 2);
}

#[test]
fn levels_are_reported() {
    let (out, stats) = enumerate_with_stats(FieldOrder::GF2, 3, 4, false).unwrap();
    assert_eq!(stats.per_level.len(), 4);
    assert_eq!(*stats.per_level.last().unwrap(), out.len());
}
