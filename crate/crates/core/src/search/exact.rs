//! Depth-first colouring search with neighbour-count propagation.

use std::time::Instant;

use super::{confirm, SearchOutcome, SearchStats, SearchStatus, SearchTarget};
use crate::error::Result;
use crate::graph::Graph;

const UNDECIDED: u8 = u8::MAX;

struct Problem<'a> {
    adj: &'a [u32],
    deg: usize,
    t: usize,
    /// target[c * t + j]: neighbours of colour j around a vertex of colour c
    target: Vec<u16>,
    sizes: Vec<u32>,
}

#[derive(Clone)]
struct State {
    domain: Vec<u8>,
    colour: Vec<u8>,
    /// cnt[v * t + j]: decided neighbours of v with colour j
    cnt: Vec<u16>,
    undecided_nb: Vec<u16>,
    size: Vec<u32>,
    remaining: usize,
}

impl<'a> Problem<'a> {
    fn nbrs(&self, v: usize) -> &'a [u32] {
        &self.adj[v * self.deg..(v + 1) * self.deg]
    }

    fn s(&self, c: usize, j: usize) -> u16 {
        self.target[c * self.t + j]
    }

    /// Colours still compatible with `v`'s decided neighbourhood.
    fn allowed(&self, st: &State, v: usize) -> u8 {
        let mut mask = st.domain[v];
        for c in 0..self.t {
            if mask & (1 << c) == 0 {
                continue;
            }
            let bad = st.size[c] >= self.sizes[c] || (0..self.t).any(|j| st.cnt[v * self.t + j] > self.s(c, j));
            if bad {
                mask &= !(1 << c);
            }
        }
        mask
    }

    /// Returns false on contradiction.
    fn assign(&self, st: &mut State, v: usize, c: usize, queue: &mut Vec<u32>, queued: &mut [bool]) -> bool {
        st.domain[v] = 1 << c;
        st.colour[v] = c as u8;
        st.size[c] += 1;
        st.remaining -= 1;
        if st.size[c] > self.sizes[c] {
            return false;
        }
        for &y in self.nbrs(v) {
            let y = y as usize;
            st.cnt[y * self.t + c] += 1;
            st.undecided_nb[y] -= 1;
            push(queue, queued, y);
        }
        push(queue, queued, v);
        true
    }

    fn propagate(&self, st: &mut State, queue: &mut Vec<u32>, queued: &mut [bool]) -> bool {
        while let Some(x) = queue.pop() {
            let x = x as usize;
            queued[x] = false;
            if st.colour[x] == UNDECIDED {
                let mask = self.allowed(st, x);
                if mask == 0 {
                    return false;
                }
                if mask != st.domain[x] {
                    st.domain[x] = mask;
                    if mask.count_ones() == 1 {
                        if !self.assign(st, x, mask.trailing_zeros() as usize, queue, queued) {
                            return false;
                        }
                    } else {
                        for &y in self.nbrs(x) {
                            if st.colour[y as usize] != UNDECIDED {
                                push(queue, queued, y as usize);
                            }
                        }
                    }
                }
                continue;
            }
            // x is decided: its undecided neighbours must supply the missing counts
            let c = st.colour[x] as usize;
            let mut need = [0u16; 8];
            let mut forbid = 0u8;
            for (j, n) in need.iter_mut().enumerate().take(self.t) {
                let have = st.cnt[x * self.t + j];
                let want = self.s(c, j);
                if have > want {
                    return false;
                }
                *n = want - have;
                if *n == 0 {
                    forbid |= 1 << j;
                }
            }
            if st.undecided_nb[x] == 0 {
                continue;
            }
            let mut avail = [0u16; 8];
            for &y in self.nbrs(x) {
                let y = y as usize;
                if st.colour[y] == UNDECIDED {
                    let d = st.domain[y] & !forbid;
                    for (j, a) in avail.iter_mut().enumerate().take(self.t) {
                        if d & (1 << j) != 0 {
                            *a += 1;
                        }
                    }
                }
            }
            let mut force = 0u8;
            for j in 0..self.t {
                if avail[j] < need[j] {
                    return false;
                }
                if need[j] > 0 && avail[j] == need[j] {
                    force |= 1 << j;
                }
            }
            if forbid == 0 && force == 0 {
                continue;
            }
            for &y in self.nbrs(x) {
                let y = y as usize;
                if st.colour[y] != UNDECIDED {
                    continue;
                }
                let mut d = st.domain[y] & !forbid;
                let f = d & force;
                if f != 0 {
                    if f.count_ones() > 1 {
                        return false;
                    }
                    d = f;
                }
                if d == 0 {
                    return false;
                }
                if d != st.domain[y] {
                    st.domain[y] = d;
                    push(queue, queued, y);
                    if d.count_ones() == 1 && !self.assign(st, y, d.trailing_zeros() as usize, queue, queued) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Most constrained undecided vertex: smallest domain, then most decided
    /// neighbours, then lowest index.
    fn choose(&self, st: &State) -> Option<usize> {
        let mut best: Option<(u32, u16, usize)> = None;
        for v in 0..st.colour.len() {
            if st.colour[v] != UNDECIDED {
                continue;
            }
            let key = (st.domain[v].count_ones(), st.undecided_nb[v], v);
            if best.is_none_or(|b| key < b) {
                best = Some(key);
            }
        }
        best.map(|b| b.2)
    }
}

fn push(queue: &mut Vec<u32>, queued: &mut [bool], v: usize) {
    if !queued[v] {
        queued[v] = true;
        queue.push(v as u32);
    }
}

enum Step {
    Solved(Vec<u8>),
    Dead,
    OutOfBudget,
}

/// Exhaustive search for a colouring with the target quotient matrix.
/// Vertex 0 is placed in cell 0, which loses nothing on vertex-transitive
/// graphs (every Cayley graph, in particular every Hamming graph).
pub fn search_exact(g: &Graph, t: &SearchTarget, budget: u64) -> Result<SearchOutcome> {
    t.check(g)?;
    let start = Instant::now();
    let mut stats = SearchStats::default();
    if t.infeasible() {
        stats.elapsed = start.elapsed();
        return Ok(SearchOutcome { status: SearchStatus::ExhaustedNoSolution, stats });
    }
    let tc = t.num_cells();
    let n = g.order();
    let sizes: Vec<u32> = t.cell_sizes.as_ref().expect("feasible").iter().map(|&s| s as u32).collect();
    let prob = Problem {
        adj: g.table()?,
        deg: g.degree(),
        t: tc,
        target: (0..tc * tc).map(|i| t.quotient.get(i / tc, i % tc) as u16).collect(),
        sizes,
    };
    let full = ((1u16 << tc) - 1) as u8;
    let mut root = State {
        domain: vec![full; n],
        colour: vec![UNDECIDED; n],
        cnt: vec![0; n * tc],
        undecided_nb: vec![g.degree() as u16; n],
        size: vec![0; tc],
        remaining: n,
    };
    let mut queued = vec![false; n];
    let mut queue = Vec::new();
    let ok =
        prob.assign(&mut root, 0, 0, &mut queue, &mut queued) && prob.propagate(&mut root, &mut queue, &mut queued);
    let status = if !ok {
        SearchStatus::ExhaustedNoSolution
    } else {
        match dfs(&prob, root, &mut stats.nodes, budget, &mut queued) {
            Step::Solved(colour) => {
                let found = confirm(g, t, colour.into_iter().map(u32::from).collect());
                if t.require_independent {
                    assert!(crate::cr::is_independent(g, &found.code)?);
                }
                SearchStatus::Found(found)
            }
            Step::Dead => SearchStatus::ExhaustedNoSolution,
            Step::OutOfBudget => SearchStatus::BudgetExceeded,
        }
    };
    stats.elapsed = start.elapsed();
    Ok(SearchOutcome { status, stats })
}

fn dfs(prob: &Problem, st: State, nodes: &mut u64, budget: u64, queued: &mut [bool]) -> Step {
    if st.remaining == 0 {
        return if st.size == prob.sizes { Step::Solved(st.colour) } else { Step::Dead };
    }
    let v = prob.choose(&st).expect("undecided vertex exists");
    let mask = st.domain[v];
    for c in 0..prob.t {
        if mask & (1 << c) == 0 {
            continue;
        }
        if *nodes >= budget {
            return Step::OutOfBudget;
        }
        *nodes += 1;
        let mut child = st.clone();
        let mut queue = Vec::new();
        let ok = prob.assign(&mut child, v, c, &mut queue, queued) && prob.propagate(&mut child, &mut queue, queued);
        for &x in &queue {
            queued[x as usize] = false;
        }
        if !ok {
            continue;
        }
        match dfs(prob, child, nodes, budget, queued) {
            Step::Dead => {}
            other => return other,
        }
    }
    Step::Dead
}
