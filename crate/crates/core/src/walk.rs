//! Lazy exploration of `Cay(Sym_n, S)`: neighbors, BFS spheres and girth.
//!
//! The graph is never materialized. Vertices discovered by a search live in a
//! hash map keyed by permutation bytes.

use std::collections::hash_map::Entry;
use std::collections::{HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::census::CycleForm;
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::genset::GeneratorSet;
use crate::perm::{Permutation, ReversalIndex};

pub const DEFAULT_DEPTH_CAP: u32 = 40;
pub const DEFAULT_MAX_VERTICES: usize = 100_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchLimits {
    /// BFS layers that may be expanded; a cap of `d` detects girths up to `2d`.
    pub depth_cap: u32,
    pub max_vertices: usize,
}

impl Default for SearchLimits {
    fn default() -> Self {
        Self {
            depth_cap: DEFAULT_DEPTH_CAP,
            max_vertices: DEFAULT_MAX_VERTICES,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GirthReport {
    pub girth: usize,
    pub witness: CycleForm,
    pub explored: usize,
    pub depth_reached: u32,
}

pub fn neighbors(p: &Permutation, gs: &GeneratorSet) -> Result<Vec<(ReversalIndex, Permutation)>> {
    if p.degree() != gs.degree() {
        return Err(Error::DegreeMismatch {
            expected: gs.degree(),
            found: p.degree(),
        });
    }
    Ok(gs
        .indices()
        .iter()
        .map(|&r| (r, p.reversed_unchecked(r)))
        .collect())
}

struct Node {
    perm: Permutation,
    depth: u32,
    parent_gen: Option<ReversalIndex>,
    parent: usize,
}

/// Shortest cycle through the identity, which is the girth since Cayley
/// graphs are vertex-transitive.
///
/// BFS from the identity never re-applies the generator that led to a vertex.
/// Every other already-seen neighbor closes a non-tree edge `{u, w}` with value
/// `d(u) + d(w) + 1`; the minimum of those values is the girth. After layer
/// `d` is expanded, any edge found later has value at least `2d + 3`, so the
/// search stops once the best value is at most `2d + 2`.
pub fn girth(gs: &GeneratorSet, limits: &SearchLimits) -> Result<GirthReport> {
    if gs.len() < 2 {
        return Err(Error::SingleGenerator);
    }
    let root = Permutation::identity(gs.degree())?;
    let mut nodes = vec![Node {
        perm: root,
        depth: 0,
        parent_gen: None,
        parent: 0,
    }];
    let mut index: HashMap<Permutation, usize> = HashMap::from([(root, 0)]);
    // (value, u, generator, w)
    let mut best: Option<(usize, usize, ReversalIndex, usize)> = None;
    let mut layer = 0..1;
    let mut depth = 0u32;

    loop {
        if depth >= limits.depth_cap {
            return Err(Error::Inconclusive { depth });
        }
        for u in layer.clone() {
            let (perm, parent_gen, du) = (nodes[u].perm, nodes[u].parent_gen, nodes[u].depth);
            for &g in gs.indices() {
                if Some(g) == parent_gen {
                    continue;
                }
                let next = perm.reversed_unchecked(g);
                match index.entry(next) {
                    Entry::Vacant(slot) => {
                        if nodes.len() >= limits.max_vertices {
                            return Err(Error::VertexBudget {
                                limit: limits.max_vertices,
                            });
                        }
                        slot.insert(nodes.len());
                        nodes.push(Node {
                            perm: next,
                            depth: du + 1,
                            parent_gen: Some(g),
                            parent: u,
                        });
                    }
                    Entry::Occupied(slot) => {
                        let w = *slot.get();
                        // w·g = u: the tree edge from w back to its parent.
                        if nodes[w].parent_gen == Some(g) {
                            continue;
                        }
                        let value = (du + nodes[w].depth + 1) as usize;
                        if best.is_none_or(|(b, ..)| value < b) {
                            best = Some((value, u, g, w));
                        }
                    }
                }
            }
        }

        if let Some((value, u, g, w)) = best {
            if value <= 2 * depth as usize + 2 {
                let mut indices = path_from_root(&nodes, u);
                indices.push(g);
                let mut back = path_from_root(&nodes, w);
                back.reverse();
                indices.extend(back);
                return Ok(GirthReport {
                    girth: value,
                    witness: CycleForm::new(indices),
                    explored: nodes.len(),
                    depth_reached: depth,
                });
            }
        }

        let next_layer = layer.end..nodes.len();
        if next_layer.is_empty() {
            return Err(Error::NoCycle);
        }
        layer = next_layer;
        depth += 1;
    }
}

fn path_from_root(nodes: &[Node], mut v: usize) -> Vec<ReversalIndex> {
    let mut gens = Vec::with_capacity(nodes[v].depth as usize);
    while let Some(g) = nodes[v].parent_gen {
        gens.push(g);
        v = nodes[v].parent;
    }
    gens.reverse();
    gens
}

/// Girths of several graphs, one independent search per set.
pub fn girth_many(
    sets: &[GeneratorSet],
    limits: &SearchLimits,
    exec: Execution,
) -> Vec<Result<GirthReport>> {
    exec.map(sets.iter().collect(), |gs| girth(gs, limits))
}

/// Sizes of the BFS spheres around the identity for depths `0..=max_depth`,
/// truncated once the component is exhausted.
pub fn bfs_layers(gs: &GeneratorSet, max_depth: usize, max_vertices: usize) -> Result<Vec<usize>> {
    let root = Permutation::identity(gs.degree())?;
    let mut seen = HashSet::from([root]);
    let mut frontier = vec![root];
    let mut sizes = vec![1];
    for _ in 0..max_depth {
        let mut next = Vec::new();
        for p in &frontier {
            for &g in gs.indices() {
                let q = p.reversed_unchecked(g);
                if seen.insert(q) {
                    if seen.len() > max_vertices {
                        return Err(Error::VertexBudget {
                            limit: max_vertices,
                        });
                    }
                    next.push(q);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        sizes.push(next.len());
        frontier = next;
    }
    Ok(sizes)
}
