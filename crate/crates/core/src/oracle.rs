//! Brute-force references for cross-checking the lazy searches.
//!
//! Everything here works on an explicitly materialized graph with plain
//! adjacency lists, ignores generator labels, and assumes nothing about
//! vertex-transitivity. It is slow on purpose.

use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::genset::GeneratorSet;
use crate::perm::Permutation;

pub const DEFAULT_MATERIALIZE_CAP: usize = 7;
pub const NAIVE_COUNT_MAX_LENGTH: usize = 12;
pub const NAIVE_COUNT_MAX_DEGREE: usize = 6;

#[derive(Clone, Debug)]
pub struct DenseGraph {
    n: usize,
    vertices: Vec<Permutation>,
    position: HashMap<Permutation, usize>,
    adjacency: Vec<Vec<usize>>,
}

impl DenseGraph {
    pub fn degree_of_group(&self) -> usize {
        self.n
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> &[Permutation] {
        &self.vertices
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn position(&self, p: &Permutation) -> Option<usize> {
        self.position.get(p).copied()
    }

    /// The same graph with vertex `k` of the result being vertex `order[k]` of `self`.
    pub fn relabeled(&self, order: &[usize]) -> DenseGraph {
        assert_eq!(order.len(), self.vertices.len());
        let mut new_of_old = vec![0; order.len()];
        for (new, &old) in order.iter().enumerate() {
            new_of_old[old] = new;
        }
        let vertices: Vec<Permutation> = order.iter().map(|&old| self.vertices[old]).collect();
        let adjacency = order
            .iter()
            .map(|&old| self.adjacency[old].iter().map(|&w| new_of_old[w]).collect())
            .collect();
        let position = vertices.iter().enumerate().map(|(k, &p)| (p, k)).collect();
        DenseGraph {
            n: self.n,
            vertices,
            position,
            adjacency,
        }
    }
}

/// All permutations of `1..=n` in lexicographic order.
fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut current: Vec<usize> = (1..=n).collect();
    let mut out = vec![current.clone()];
    loop {
        let Some(i) = (0..n.saturating_sub(1))
            .rev()
            .find(|&i| current[i] < current[i + 1])
        else {
            return out;
        };
        let j = (i + 1..n).rev().find(|&j| current[j] > current[i]).unwrap();
        current.swap(i, j);
        current[i + 1..].reverse();
        out.push(current.clone());
    }
}

pub fn materialize(gs: &GeneratorSet) -> Result<DenseGraph> {
    materialize_capped(gs, DEFAULT_MATERIALIZE_CAP)
}

/// Builds `Cay(Sym_n, gs)` restricted to the component of the identity,
/// vertices in lexicographic order.
pub fn materialize_capped(gs: &GeneratorSet, cap: usize) -> Result<DenseGraph> {
    let n = gs.degree();
    if n > cap {
        return Err(Error::TooLarge { n, cap });
    }
    let everything: Vec<Permutation> = all_permutations(n)
        .iter()
        .map(|v| Permutation::from_entries(v))
        .collect::<Result<_>>()?;
    let full_index: HashMap<Permutation, usize> = everything
        .iter()
        .enumerate()
        .map(|(k, &p)| (p, k))
        .collect();
    let apply = |p: &Permutation, r| -> Permutation {
        let mut e: Vec<usize> = p.entries().iter().map(|&x| x as usize).collect();
        e[..r].reverse();
        Permutation::from_entries(&e).expect("reversal keeps a bijection")
    };

    // Component of the identity, which is rank 0.
    let mut in_component = vec![false; everything.len()];
    in_component[0] = true;
    let mut queue = VecDeque::from([0usize]);
    while let Some(v) = queue.pop_front() {
        for r in gs.indices() {
            let w = full_index[&apply(&everything[v], r.get())];
            if !in_component[w] {
                in_component[w] = true;
                queue.push_back(w);
            }
        }
    }

    let vertices: Vec<Permutation> = everything
        .iter()
        .zip(&in_component)
        .filter(|(_, &keep)| keep)
        .map(|(&p, _)| p)
        .collect();
    let position: HashMap<Permutation, usize> =
        vertices.iter().enumerate().map(|(k, &p)| (p, k)).collect();
    let adjacency = vertices
        .iter()
        .map(|p| {
            gs.indices()
                .iter()
                .map(|r| position[&apply(p, r.get())])
                .collect()
        })
        .collect();
    Ok(DenseGraph {
        n,
        vertices,
        position,
        adjacency,
    })
}

/// Shortest cycle found by a BFS from `root`, or `None` if the BFS sees no
/// non-tree edge.
fn shortest_cycle_from(g: &DenseGraph, root: usize) -> Option<usize> {
    let mut dist = vec![usize::MAX; g.vertex_count()];
    let mut parent = vec![usize::MAX; g.vertex_count()];
    dist[root] = 0;
    let mut queue = VecDeque::from([root]);
    let mut best: Option<usize> = None;
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                parent[w] = u;
                queue.push_back(w);
            } else if parent[u] != w {
                let value = dist[u] + dist[w] + 1;
                best = Some(best.map_or(value, |b| b.min(value)));
            }
        }
    }
    best
}

/// Exact girth: the minimum over every root of the BFS first-cycle value.
pub fn naive_girth(g: &DenseGraph) -> Result<usize> {
    naive_girth_with(g, Execution::default())
}

pub fn naive_girth_with(g: &DenseGraph, exec: Execution) -> Result<usize> {
    exec.map((0..g.vertex_count()).collect(), |v| {
        shortest_cycle_from(g, v)
    })
    .into_iter()
    .flatten()
    .min()
    .ok_or(Error::NoCycle)
}

/// Simple `length`-cycles through `root`, by exhaustive simple-path search
/// (each cycle is seen once per direction).
pub fn naive_cycle_count(g: &DenseGraph, root: &Permutation, length: usize) -> Result<u64> {
    naive_cycle_count_with(g, root, length, Execution::default())
}

pub fn naive_cycle_count_with(
    g: &DenseGraph,
    root: &Permutation,
    length: usize,
    exec: Execution,
) -> Result<u64> {
    if g.degree_of_group() > NAIVE_COUNT_MAX_DEGREE {
        return Err(Error::TooLarge {
            n: g.degree_of_group(),
            cap: NAIVE_COUNT_MAX_DEGREE,
        });
    }
    if length > NAIVE_COUNT_MAX_LENGTH {
        return Err(Error::TooLarge {
            n: length,
            cap: NAIVE_COUNT_MAX_LENGTH,
        });
    }
    if length < 3 {
        return Err(Error::LengthTooShort(length));
    }
    let start = g.position(root).ok_or(Error::DegreeMismatch {
        expected: g.degree_of_group(),
        found: root.degree(),
    })?;
    let directed: u64 = exec
        .map(g.neighbors(start).to_vec(), |first| {
            let mut on_path = vec![false; g.vertex_count()];
            on_path[start] = true;
            on_path[first] = true;
            closed_paths(g, start, first, 1, length, &mut on_path)
        })
        .into_iter()
        .sum();
    Ok(directed / 2)
}

fn closed_paths(
    g: &DenseGraph,
    start: usize,
    at: usize,
    edges: usize,
    length: usize,
    on_path: &mut [bool],
) -> u64 {
    if edges + 1 == length {
        return g.neighbors(at).iter().filter(|&&w| w == start).count() as u64;
    }
    let mut total = 0;
    for &w in g.neighbors(at) {
        if on_path[w] {
            continue;
        }
        on_path[w] = true;
        total += closed_paths(g, start, w, edges + 1, length, on_path);
        on_path[w] = false;
    }
    total
}
