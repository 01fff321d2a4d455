//! Exact maximum clique by branch-and-bound with a greedy coloring bound.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexPermutation, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliqueResult {
    pub size: usize,
    /// Lexicographically smallest maximum clique.
    pub witness: VertexSet,
    pub nodes_explored: u64,
}

/// Greedy sequential coloring of `p` in ascending vertex order. Pushes
/// `(vertex, color)` pairs with non-decreasing colors starting at 1.
fn color_classes(rows: &[VertexSet], p: VertexSet, out: &mut Vec<(u16, u16)>) {
    out.clear();
    let mut uncolored = p;
    let mut color = 0u16;
    while !uncolored.is_empty() {
        color += 1;
        let mut q = uncolored;
        while let Some(v) = q.first() {
            q.remove(v);
            q -= rows[v];
            uncolored.remove(v);
            out.push((v as u16, color));
        }
    }
}

struct MaxSearch<'a> {
    rows: &'a [VertexSet],
    best: VertexSet,
    best_len: usize,
    nodes: u64,
}

impl MaxSearch<'_> {
    fn expand(&mut self, clique: &mut VertexSet, depth: usize, mut cand: VertexSet) {
        self.nodes += 1;
        if cand.is_empty() {
            if depth > self.best_len {
                self.best = *clique;
                self.best_len = depth;
            }
            return;
        }
        let mut order = Vec::with_capacity(cand.len());
        color_classes(self.rows, cand, &mut order);
        for &(v, c) in order.iter().rev() {
            if depth + c as usize <= self.best_len {
                return;
            }
            let v = v as usize;
            clique.insert(v);
            self.expand(clique, depth + 1, cand & self.rows[v]);
            clique.remove(v);
            cand.remove(v);
        }
    }
}

/// Smallest-last (degeneracy) order; the returned list starts with the
/// vertex removed last.
fn degeneracy_order(g: &Graph) -> Vec<usize> {
    let mut alive = g.vertices();
    let mut removed = Vec::with_capacity(g.n());
    while !alive.is_empty() {
        let v = alive
            .iter()
            .min_by_key(|&v| ((*g.neighbors(v) & alive).len(), v))
            .expect("non-empty");
        alive.remove(v);
        removed.push(v);
    }
    removed.reverse();
    removed
}

/// Exact `cl(g)` with the lexicographically smallest maximum clique.
pub fn clique_number(g: &Graph) -> CliqueResult {
    let order = degeneracy_order(g);
    let mut to_new = vec![0; g.n()];
    for (i, &v) in order.iter().enumerate() {
        to_new[v] = i;
    }
    let relabel = VertexPermutation::new(to_new).expect("order is a permutation");
    let h = g.permuted(&relabel).expect("same size");

    let mut search = MaxSearch {
        rows: h.rows(),
        best: VertexSet::EMPTY,
        best_len: 0,
        nodes: 0,
    };
    search.expand(&mut VertexSet::new(), 0, h.vertices());
    let size = search.best_len;
    let mut nodes = search.nodes;

    // lexicographically smallest clique of that size
    let mut witness = VertexSet::EMPTY;
    let mut cand = g.vertices();
    for v in g.vertices().iter() {
        if witness.len() == size {
            break;
        }
        if !cand.contains(v) {
            continue;
        }
        let next = cand & *g.neighbors(v);
        let (found, n) = k_clique_in(g.rows(), next, size - witness.len() - 1);
        nodes += n;
        if found.is_some() {
            witness.insert(v);
            cand = next;
        }
    }
    debug_assert_eq!(witness.len(), size);
    CliqueResult {
        size,
        witness,
        nodes_explored: nodes,
    }
}

struct ThresholdSearch<'a> {
    rows: &'a [VertexSet],
    nodes: u64,
}

impl ThresholdSearch<'_> {
    fn find(&mut self, clique: &mut VertexSet, need: usize, mut cand: VertexSet) -> bool {
        self.nodes += 1;
        if need == 0 {
            return true;
        }
        if cand.len() < need {
            return false;
        }
        if need == 1 {
            clique.insert(cand.first().expect("non-empty"));
            return true;
        }
        if need == 2 {
            for v in &cand {
                if let Some(u) = (cand & self.rows[v]).first() {
                    clique.insert(v);
                    clique.insert(u);
                    return true;
                }
            }
            return false;
        }
        let mut order = Vec::with_capacity(cand.len());
        color_classes(self.rows, cand, &mut order);
        for &(v, c) in order.iter().rev() {
            if (c as usize) < need {
                return false;
            }
            let v = v as usize;
            clique.insert(v);
            if self.find(clique, need - 1, cand & self.rows[v]) {
                return true;
            }
            clique.remove(v);
            cand.remove(v);
        }
        false
    }
}

fn k_clique_in(rows: &[VertexSet], s: VertexSet, k: usize) -> (Option<VertexSet>, u64) {
    let mut search = ThresholdSearch { rows, nodes: 0 };
    let mut clique = VertexSet::EMPTY;
    let found = search.find(&mut clique, k, s);
    (found.then_some(clique), search.nodes)
}

/// Some `k`-clique of `g` inside `s`, stopping at the first one found.
pub fn find_k_clique_within(g: &Graph, s: &VertexSet, k: usize) -> Result<Option<VertexSet>> {
    if !s.within(g.n()) {
        return Err(Error::invalid(format!(
            "vertex set {s:?} is not contained in 0..{}",
            g.n()
        )));
    }
    Ok(k_clique_in(g.rows(), *s, k).0)
}

/// Does `g[s]` contain a `k`-clique?
pub fn has_k_clique_within(g: &Graph, s: &VertexSet, k: usize) -> Result<bool> {
    Ok(find_k_clique_within(g, s, k)?.is_some())
}

/// Unchecked variant for hot loops; `s` must lie inside the graph.
#[inline]
pub(crate) fn has_k_clique_in_rows(rows: &[VertexSet], s: VertexSet, k: usize) -> bool {
    match k {
        0 => true,
        1 => !s.is_empty(),
        _ => {
            let mut search = ThresholdSearch { rows, nodes: 0 };
            search.find(&mut VertexSet::new(), k, s)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::build_gamma;

    fn brute_clique_number(g: &Graph) -> usize {
        let n = g.n();
        assert!(n <= 16);
        (0u32..1 << n)
            .filter(|mask| {
                let s: VertexSet = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
                g.is_clique(&s)
            })
            .map(|mask| mask.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    #[test]
    fn small_values() {
        assert_eq!(clique_number(&Graph::complete(5).unwrap()).size, 5);
        assert_eq!(clique_number(&Graph::path(5).unwrap().complement()).size, 3);
        assert_eq!(clique_number(&build_gamma(3).unwrap().graph).size, 3);
        assert_eq!(clique_number(&Graph::empty(0).unwrap()).size, 0);
        assert_eq!(clique_number(&Graph::empty(4).unwrap()).size, 1);
    }

    #[test]
    fn lexicographic_witness() {
        // C_5 complement: max cliques are pairs {i, i+2}; smallest is {0, 2}
        let g = Graph::cycle(5).unwrap().complement();
        let r = clique_number(&g);
        assert_eq!(r.witness.to_vec(), vec![0, 2]);
        let c6 = Graph::cycle(6).unwrap();
        assert_eq!(clique_number(&c6).witness.to_vec(), vec![0, 1]);
    }

    #[test]
    fn bounded_queries() {
        let gamma = build_gamma(3).unwrap();
        let nu1 = gamma.graph.neighborhood(gamma.u(1)).unwrap();
        assert!(!has_k_clique_within(&gamma.graph, &nu1, 3).unwrap());
        assert!(has_k_clique_within(&gamma.graph, &nu1, 2).unwrap());
        let k5 = Graph::complete(5).unwrap();
        assert!(!has_k_clique_within(&k5, &VertexSet::EMPTY, 1).unwrap());
        assert!(has_k_clique_within(&k5, &VertexSet::EMPTY, 0).unwrap());
        let four: VertexSet = [0, 2, 3, 4].into_iter().collect();
        assert!(has_k_clique_within(&k5, &four, 4).unwrap());
        assert!(!has_k_clique_within(&k5, &four, 5).unwrap());
        let found = find_k_clique_within(&k5, &four, 3).unwrap().unwrap();
        assert!(found.is_subset(&four) && found.len() == 3 && k5.is_clique(&found));
        assert!(has_k_clique_within(&k5, &VertexSet::singleton(7), 1).is_err());
    }

    #[test]
    fn matches_brute_force_on_fixed_graphs() {
        for k in 1..=12 {
            let g = Graph::path(k).unwrap().complement();
            assert_eq!(clique_number(&g).size, brute_clique_number(&g));
        }
        let gamma2 = build_gamma(2).unwrap().graph;
        assert_eq!(clique_number(&gamma2).size, brute_clique_number(&gamma2));
    }
}
