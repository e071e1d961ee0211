//! Simulated annealing over colourings with fixed cell sizes.

use std::sync::atomic::{AtomicU64, Ordering};
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{confirm, SearchOutcome, SearchStats, SearchStatus, SearchTarget, DEFAULT_MOVE_BUDGET};
use crate::error::Result;
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    /// Random swaps under a geometric cooling schedule.
    Annealing,
    /// Best-of-shortlist swaps with recently moved vertices frozen.
    Tabu,
}

#[derive(Clone, Debug, PartialEq)]
pub struct HeuristicOptions {
    pub strategy: Strategy,
    /// Total attempted moves over all restarts.
    pub budget: u64,
    pub moves_per_restart: u64,
    /// Restarts run concurrently in batches of this size (0: one per thread).
    pub batch: usize,
    pub t_start: f64,
    pub t_end: f64,
    /// Minimum number of steps a swapped vertex stays frozen (tabu only).
    pub tabu_tenure: u64,
}

impl Default for HeuristicOptions {
    fn default() -> Self {
        HeuristicOptions {
            strategy: Strategy::Tabu,
            budget: DEFAULT_MOVE_BUDGET,
            moves_per_restart: 20_000,
            batch: 0,
            t_start: 1.5,
            t_end: 0.05,
            tabu_tenure: 3,
        }
    }
}

struct Anneal<'a> {
    adj: &'a [u32],
    deg: usize,
    t: usize,
    target: Vec<i32>,
    colour: Vec<u8>,
    cnt: Vec<i32>,
    viol: Vec<i32>,
    total: i64,
    /// Vertices grouped by colour, with positions for O(1) swaps.
    members: Vec<Vec<u32>>,
    pos: Vec<u32>,
}

impl<'a> Anneal<'a> {
    fn new(adj: &'a [u32], deg: usize, t: usize, target: Vec<i32>, colour: Vec<u8>) -> Self {
        let n = colour.len();
        let mut cnt = vec![0i32; n * t];
        for v in 0..n {
            for &y in &adj[v * deg..(v + 1) * deg] {
                cnt[v * t + colour[y as usize] as usize] += 1;
            }
        }
        let mut members = vec![Vec::new(); t];
        let mut pos = vec![0u32; n];
        for (v, &c) in colour.iter().enumerate() {
            pos[v] = members[c as usize].len() as u32;
            members[c as usize].push(v as u32);
        }
        let mut a = Anneal { adj, deg, t, target, colour, cnt, viol: vec![0; n], total: 0, members, pos };
        for v in 0..n {
            a.viol[v] = a.violation(v);
            a.total += a.viol[v] as i64;
        }
        a
    }

    fn violation(&self, v: usize) -> i32 {
        let c = self.colour[v] as usize;
        (0..self.t).map(|j| (self.cnt[v * self.t + j] - self.target[c * self.t + j]).abs()).sum()
    }

    fn refresh(&mut self, v: usize) {
        let new = self.violation(v);
        self.total += (new - self.viol[v]) as i64;
        self.viol[v] = new;
    }

    fn recolour(&mut self, v: usize, to: u8) {
        let from = self.colour[v];
        // move v between member lists
        let list = &mut self.members[from as usize];
        let p = self.pos[v] as usize;
        let last = *list.last().expect("nonempty");
        list.swap_remove(p);
        if last as usize != v {
            self.pos[last as usize] = p as u32;
        }
        self.pos[v] = self.members[to as usize].len() as u32;
        self.members[to as usize].push(v as u32);
        self.colour[v] = to;
        for i in 0..self.deg {
            let y = self.adj[v * self.deg + i] as usize;
            self.cnt[y * self.t + from as usize] -= 1;
            self.cnt[y * self.t + to as usize] += 1;
        }
    }

    /// Change in total violation if `x` alone were recoloured to `b`.
    fn gain(&self, x: usize, b: usize) -> i32 {
        let t = self.t;
        let a = self.colour[x] as usize;
        let mut d = -self.viol[x];
        for j in 0..t {
            d += (self.cnt[x * t + j] - self.target[b * t + j]).abs();
        }
        for &z in &self.adj[x * self.deg..(x + 1) * self.deg] {
            let z = z as usize;
            let c = self.colour[z] as usize;
            let (na, nb) = (self.cnt[z * t + a], self.cnt[z * t + b]);
            let (sa, sb) = (self.target[c * t + a], self.target[c * t + b]);
            d += (na - 1 - sa).abs() - (na - sa).abs() + (nb + 1 - sb).abs() - (nb - sb).abs();
        }
        d
    }

    /// Swaps the colours of `x` and `y`, returning the change in violation.
    fn swap(&mut self, x: usize, y: usize) -> i64 {
        let before = self.total;
        let (cx, cy) = (self.colour[x], self.colour[y]);
        self.recolour(x, cy);
        self.recolour(y, cx);
        self.refresh(x);
        self.refresh(y);
        for i in 0..self.deg {
            let z = self.adj[x * self.deg + i] as usize;
            self.refresh(z);
            let z = self.adj[y * self.deg + i] as usize;
            self.refresh(z);
        }
        self.total - before
    }
}

/// Random colouring with the exact cell sizes and vertex 0 in cell 0.
fn initial(sizes: &[u64], rng: &mut ChaCha8Rng) -> Vec<u8> {
    let n = sizes.iter().sum::<u64>() as usize;
    let mut colour: Vec<u8> =
        sizes.iter().enumerate().flat_map(|(c, &s)| std::iter::repeat_n(c as u8, s as usize)).collect();
    for i in (1..n).rev() {
        let j = rng.gen_range(0..=i);
        colour.swap(i, j);
    }
    if let Some(p) = colour.iter().position(|&c| c == 0) {
        colour.swap(0, p);
    }
    colour
}

fn target_of(t: &SearchTarget) -> Vec<i32> {
    let tc = t.num_cells();
    (0..tc * tc).map(|i| t.quotient.get(i / tc, i % tc) as i32).collect()
}

/// One annealing run; returns the colouring on success and the moves used.
#[allow(clippy::too_many_arguments)]
fn anneal(
    adj: &[u32],
    deg: usize,
    t: &SearchTarget,
    sizes: &[u64],
    rng: &mut ChaCha8Rng,
    opts: &HeuristicOptions,
    moves: u64,
    abort: impl Fn() -> bool,
) -> (Option<Vec<u8>>, u64) {
    let tc = t.num_cells();
    let n = sizes.iter().sum::<u64>() as usize;
    let colour = initial(sizes, rng);
    let mut a = Anneal::new(adj, deg, tc, target_of(t), colour);
    if a.total == 0 {
        return (Some(a.colour), 0);
    }
    let ratio = (opts.t_end / opts.t_start).powf(1.0 / moves.max(1) as f64);
    let mut temp = opts.t_start;
    for step in 1..=moves {
        if step % 4096 == 0 && abort() {
            return (None, step);
        }
        temp *= ratio;
        // pick a violated vertex and a partner of another colour
        let x = loop {
            let v = rng.gen_range(1..n);
            if a.viol[v] > 0 || rng.gen_bool(0.05) {
                break v;
            }
        };
        let cx = a.colour[x];
        let mut cy = rng.gen_range(0..tc as u8 - 1);
        if cy >= cx {
            cy += 1;
        }
        let list = &a.members[cy as usize];
        let y = list[rng.gen_range(0..list.len())] as usize;
        if y == 0 {
            continue;
        }
        let delta = a.swap(x, y);
        if delta > 0 && rng.gen::<f64>() >= (-(delta as f64) / temp).exp() {
            a.swap(x, y);
        }
        if a.total == 0 {
            return (Some(a.colour), step);
        }
    }
    (None, moves)
}

/// One tabu run: repeatedly swap a violated vertex with the partner giving
/// the best exact change, then freeze both for a random tenure.
#[allow(clippy::too_many_arguments)]
fn tabu(
    adj: &[u32],
    deg: usize,
    t: &SearchTarget,
    sizes: &[u64],
    rng: &mut ChaCha8Rng,
    opts: &HeuristicOptions,
    moves: u64,
    abort: impl Fn() -> bool,
) -> (Option<Vec<u8>>, u64) {
    const SHORTLIST: usize = 6;
    let tc = t.num_cells();
    let n = sizes.iter().sum::<u64>() as usize;
    let colour = initial(sizes, rng);
    let mut a = Anneal::new(adj, deg, tc, target_of(t), colour);
    if a.total == 0 {
        return (Some(a.colour), 0);
    }
    let mut frozen = vec![0u64; n];
    // a tenure near the smallest cell size would freeze that whole cell
    let smallest = sizes.iter().copied().min().unwrap_or(1);
    let base = opts.tabu_tenure.min(smallest / 4).max(1);
    for step in 1..=moves {
        if step % 1024 == 0 && abort() {
            return (None, step);
        }
        // per (from, to) colour pair, the free vertices with the best gains
        let mut lists: Vec<Vec<(i32, u32, usize)>> = vec![Vec::with_capacity(SHORTLIST + 1); tc * tc];
        for v in 1..n {
            if frozen[v] > step {
                continue;
            }
            let c = a.colour[v] as usize;
            for b in (0..tc).filter(|&b| b != c) {
                let key = (a.gain(v, b), rng.gen::<u32>(), v);
                let list = &mut lists[c * tc + b];
                if list.len() < SHORTLIST || key < list[list.len() - 1] {
                    let at = list.partition_point(|k| *k < key);
                    list.insert(at, key);
                    list.truncate(SHORTLIST);
                }
            }
        }
        let mut best: Option<(i64, u32, usize, usize)> = None;
        for ca in 0..tc {
            for cb in ca + 1..tc {
                for &(_, _, x) in &lists[ca * tc + cb] {
                    for &(_, _, y) in &lists[cb * tc + ca] {
                        let d = a.swap(x, y);
                        a.swap(x, y);
                        let key = (d, rng.gen::<u32>(), x, y);
                        if best.is_none_or(|b| key < b) {
                            best = Some(key);
                        }
                    }
                }
            }
        }
        let Some((_, _, x, y)) = best else { continue };
        a.swap(x, y);
        let tenure = base + rng.gen_range(0..=base);
        frozen[x] = step + tenure;
        frozen[y] = step + tenure;
        if a.total == 0 {
            return (Some(a.colour), step);
        }
    }
    (None, moves)
}

/// Seeded stochastic search. Restarts are numbered; each uses its own
/// stream of a ChaCha generator seeded with `seed`, and the lowest-numbered
/// successful restart wins, so outcomes do not depend on thread count.
pub fn search_heuristic(g: &Graph, t: &SearchTarget, seed: u64, opts: &HeuristicOptions) -> Result<SearchOutcome> {
    t.check(g)?;
    let start = Instant::now();
    let mut stats = SearchStats::default();
    if t.infeasible() || t.num_cells() < 2 {
        let status = if t.num_cells() == 1 && !t.infeasible() {
            SearchStatus::Found(confirm(g, t, vec![0; g.order()]))
        } else {
            SearchStatus::BudgetExceeded
        };
        stats.elapsed = start.elapsed();
        return Ok(SearchOutcome { status, stats });
    }
    let sizes = t.cell_sizes.clone().expect("feasible");
    let adj = g.table()?;
    let per = opts.moves_per_restart.max(1);
    let total_restarts = opts.budget.div_ceil(per);
    let width = if opts.batch == 0 { rayon::current_num_threads() } else { opts.batch } as u64;
    // Lowest restart index known to succeed; restarts above it give up early.
    let winner = AtomicU64::new(u64::MAX);
    let mut next = 0u64;
    while next < total_restarts {
        let batch: Vec<u64> = (next..total_restarts.min(next + width)).collect();
        next += batch.len() as u64;
        let results: Vec<(Option<Vec<u8>>, u64)> = batch
            .par_iter()
            .map(|&r| {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                rng.set_stream(r);
                let moves = per.min(opts.budget - r * per);
                let abort = || winner.load(Ordering::Relaxed) < r;
                let out = match opts.strategy {
                    Strategy::Annealing => anneal(adj, g.degree(), t, &sizes, &mut rng, opts, moves, abort),
                    Strategy::Tabu => tabu(adj, g.degree(), t, &sizes, &mut rng, opts, moves, abort),
                };
                if out.0.is_some() {
                    winner.fetch_min(r, Ordering::Relaxed);
                }
                out
            })
            .collect();
        for (colour, used) in results {
            stats.restarts += 1;
            stats.nodes += used;
            if let Some(colour) = colour {
                let found = confirm(g, t, colour.into_iter().map(u32::from).collect());
                stats.elapsed = start.elapsed();
                return Ok(SearchOutcome { status: SearchStatus::Found(found), stats });
            }
        }
    }
    stats.elapsed = start.elapsed();
    Ok(SearchOutcome { status: SearchStatus::BudgetExceeded, stats })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::{CheckMatrix, FieldOrder};

    #[test]
    fn gain_matches_recomputation() {
        let h = CheckMatrix::parse(include_str!("../../fixtures/cr35_10.H"), FieldOrder::GF3).unwrap();
        let g = Graph::syndrome(&h);
        let t = SearchTarget::from_array(&"{35;10}".parse().unwrap(), &g).unwrap();
        let sizes = t.cell_sizes.clone().unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let adj = g.table().unwrap();
        let mut a = Anneal::new(adj, g.degree(), 2, target_of(&t), initial(&sizes, &mut rng));
        for _ in 0..200 {
            let x = rng.gen_range(1..81);
            let b = 1 - a.colour[x] as usize;
            let predicted = a.gain(x, b);
            let before = a.total;
            let from = a.colour[x];
            a.recolour(x, b as u8);
            let fresh: i64 = (0..81).map(|v| a.violation(v) as i64).sum();
            assert_eq!(fresh - before, predicted as i64);
            a.recolour(x, from);
        }
    }
}
