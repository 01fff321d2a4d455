//! Simple undirected graphs stored as fixed-width adjacency bit-rows.
//!
//! Vertices are `0..n` with `n <= MAX_VERTICES`. Graphs are immutable once
//! built; every combinator returns a fresh graph.

use std::fmt;
use std::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign, Sub, SubAssign};

use crate::error::{Error, Result};

/// Number of 64-bit words in a bit-row.
pub const WORDS: usize = 8;
/// Largest supported vertex count.
pub const MAX_VERTICES: usize = WORDS * 64;

/// A subset of `0..MAX_VERTICES`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet {
    words: [u64; WORDS],
}

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet { words: [0; WORDS] };

    pub fn new() -> Self {
        Self::EMPTY
    }

    /// `{0, 1, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "vertex count {n} exceeds {MAX_VERTICES}");
        let mut s = Self::EMPTY;
        for (w, word) in s.words.iter_mut().enumerate() {
            let lo = w * 64;
            if n >= lo + 64 {
                *word = u64::MAX;
            } else if n > lo {
                *word = (1u64 << (n - lo)) - 1;
            }
        }
        s
    }

    pub fn singleton(v: usize) -> Self {
        let mut s = Self::EMPTY;
        s.insert(v);
        s
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.words[v >> 6] |= 1u64 << (v & 63);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.words[v >> 6] &= !(1u64 << (v & 63));
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < MAX_VERTICES && self.words[v >> 6] & (1u64 << (v & 63)) != 0
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Smallest element.
    #[inline]
    pub fn first(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, &w)| i * 64 + w.trailing_zeros() as usize)
    }

    /// Largest element plus one, or 0 when empty.
    pub fn upper_bound(&self) -> usize {
        self.words
            .iter()
            .enumerate()
            .rev()
            .find(|(_, &w)| w != 0)
            .map_or(0, |(i, &w)| i * 64 + 64 - w.leading_zeros() as usize)
    }

    #[inline]
    pub fn intersects(&self, other: &VertexSet) -> bool {
        self.words
            .iter()
            .zip(other.words.iter())
            .any(|(a, b)| a & b != 0)
    }

    #[inline]
    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.words
            .iter()
            .zip(other.words.iter())
            .all(|(a, b)| a & !b == 0)
    }

    /// True when every element lies in `0..n`.
    pub fn within(&self, n: usize) -> bool {
        self.upper_bound() <= n
    }

    /// Elements in ascending order.
    pub fn iter(&self) -> Iter {
        Iter {
            words: self.words,
            word: 0,
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl IntoIterator for &VertexSet {
    type Item = usize;
    type IntoIter = Iter;
    fn into_iter(self) -> Iter {
        self.iter()
    }
}

pub struct Iter {
    words: [u64; WORDS],
    word: usize,
}

impl Iterator for Iter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        while self.word < WORDS {
            let w = self.words[self.word];
            if w != 0 {
                self.words[self.word] = w & (w - 1);
                return Some(self.word * 64 + w.trailing_zeros() as usize);
            }
            self.word += 1;
        }
        None
    }
}

macro_rules! set_op {
    ($tr:ident, $method:ident, $atr:ident, $amethod:ident, |$a:ident, $b:ident| $e:expr) => {
        impl $tr for VertexSet {
            type Output = VertexSet;
            #[inline]
            fn $method(mut self, rhs: VertexSet) -> VertexSet {
                self.$amethod(rhs);
                self
            }
        }
        impl $atr for VertexSet {
            #[inline]
            fn $amethod(&mut self, rhs: VertexSet) {
                for ($a, $b) in self.words.iter_mut().zip(rhs.words.iter()) {
                    *$a = $e;
                }
            }
        }
    };
}

set_op!(BitAnd, bitand, BitAndAssign, bitand_assign, |a, b| *a & b);
set_op!(BitOr, bitor, BitOrAssign, bitor_assign, |a, b| *a | b);
set_op!(Sub, sub, SubAssign, sub_assign, |a, b| *a & !b);

impl serde::Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

impl<'de> serde::Deserialize<'de> for VertexSet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let vs = <Vec<usize> as serde::Deserialize>::deserialize(d)?;
        if let Some(&v) = vs.iter().find(|&&v| v >= MAX_VERTICES) {
            return Err(serde::de::Error::custom(format!("vertex {v} out of range")));
        }
        Ok(vs.into_iter().collect())
    }
}

/// A bijection on `0..n`; `image[v]` is where `v` goes.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VertexPermutation {
    image: Vec<usize>,
}

impl VertexPermutation {
    pub fn new(image: Vec<usize>) -> Result<Self> {
        let n = image.len();
        let mut seen = vec![false; n];
        for &t in &image {
            if t >= n || seen[t] {
                return Err(Error::invalid(format!(
                    "permutation image {image:?} is not a bijection on 0..{n}"
                )));
            }
            seen[t] = true;
        }
        Ok(VertexPermutation { image })
    }

    pub fn identity(n: usize) -> Self {
        VertexPermutation {
            image: (0..n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    #[inline]
    pub fn apply(&self, v: usize) -> usize {
        self.image[v]
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn apply_set(&self, s: &VertexSet) -> VertexSet {
        s.iter().map(|v| self.image[v]).collect()
    }

    /// `self` after `other`: `v -> self(other(v))`.
    pub fn compose(&self, other: &VertexPermutation) -> VertexPermutation {
        assert_eq!(self.len(), other.len());
        VertexPermutation {
            image: other.image.iter().map(|&v| self.image[v]).collect(),
        }
    }

    pub fn pow(&self, k: usize) -> VertexPermutation {
        let mut out = VertexPermutation::identity(self.len());
        for _ in 0..k {
            out = self.compose(&out);
        }
        out
    }

    pub fn inverse(&self) -> VertexPermutation {
        let mut image = vec![0; self.len()];
        for (v, &t) in self.image.iter().enumerate() {
            image[t] = v;
        }
        VertexPermutation { image }
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(v, &t)| v == t)
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

fn check_size(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        return Err(Error::invalid(format!(
            "vertex count {n} exceeds supported maximum {MAX_VERTICES}"
        )));
    }
    Ok(())
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph> {
        check_size(n)?;
        Ok(Graph {
            n,
            adj: vec![VertexSet::EMPTY; n],
        })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::invalid(format!(
                    "edge ({u}, {v}) out of range 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::invalid(format!("loop at vertex {u}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Builds from adjacency rows, checking symmetry, loops and range.
    pub fn from_adjacency(adj: Vec<VertexSet>) -> Result<Graph> {
        let n = adj.len();
        check_size(n)?;
        for (v, row) in adj.iter().enumerate() {
            if !row.within(n) {
                return Err(Error::invalid(format!("row {v} has bits outside 0..{n}")));
            }
            if row.contains(v) {
                return Err(Error::invalid(format!("loop at vertex {v}")));
            }
            if let Some(u) = row.iter().find(|&u| !adj[u].contains(v)) {
                return Err(Error::invalid(format!("asymmetric adjacency {v} -> {u}")));
            }
        }
        Ok(Graph { n, adj })
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    /// `C_n`: edges `{i, i+1 mod n}`.
    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(Error::invalid(format!("cycle needs n >= 3, got {n}")));
        }
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    /// `P_k`: edges `{i, i+1}`.
    pub fn path(k: usize) -> Result<Graph> {
        if k < 1 {
            return Err(Error::invalid("path needs k >= 1"));
        }
        Graph::from_edges(k, (1..k).map(|i| (i - 1, i)))
    }

    pub fn complete(n: usize) -> Result<Graph> {
        check_size(n)?;
        let full = VertexSet::full(n);
        Ok(Graph {
            n,
            adj: (0..n)
                .map(|v| {
                    let mut row = full;
                    row.remove(v);
                    row
                })
                .collect(),
        })
    }

    pub fn complement(&self) -> Graph {
        let full = VertexSet::full(self.n);
        Graph {
            n: self.n,
            adj: self
                .adj
                .iter()
                .enumerate()
                .map(|(v, row)| {
                    let mut c = full - *row;
                    c.remove(v);
                    c
                })
                .collect(),
        }
    }

    /// `self + other`: disjoint union plus every cross edge. `other`'s
    /// vertices are shifted by `self.n()`.
    pub fn join(&self, other: &Graph) -> Result<Graph> {
        let n1 = self.n;
        let n = n1 + other.n;
        check_size(n)?;
        let left = VertexSet::full(n1);
        let right = VertexSet::full(n) - left;
        let mut adj = Vec::with_capacity(n);
        for row in &self.adj {
            adj.push(*row | right);
        }
        for row in &other.adj {
            adj.push(row.iter().map(|u| u + n1).collect::<VertexSet>() | left);
        }
        Ok(Graph { n, adj })
    }

    /// Subgraph induced by `s`, plus the map from new indices back to `self`.
    pub fn induced(&self, s: &VertexSet) -> Result<(Graph, Vec<usize>)> {
        if !s.within(self.n) {
            return Err(Error::invalid(format!(
                "vertex set {s:?} is not contained in 0..{}",
                self.n
            )));
        }
        let back: Vec<usize> = s.to_vec();
        let mut forward = vec![usize::MAX; self.n];
        for (i, &v) in back.iter().enumerate() {
            forward[v] = i;
        }
        let adj = back
            .iter()
            .map(|&v| (self.adj[v] & *s).iter().map(|u| forward[u]).collect())
            .collect();
        Ok((Graph { n: back.len(), adj }, back))
    }

    /// `G - S`.
    pub fn delete(&self, s: &VertexSet) -> Result<Graph> {
        if !s.within(self.n) {
            return Err(Error::invalid(format!(
                "vertex set {s:?} is not contained in 0..{}",
                self.n
            )));
        }
        Ok(self.induced(&(self.vertices() - *s))?.0)
    }

    pub fn neighborhood(&self, v: usize) -> Result<VertexSet> {
        if v >= self.n {
            return Err(Error::invalid(format!(
                "vertex {v} out of range 0..{}",
                self.n
            )));
        }
        Ok(self.adj[v])
    }

    /// Unchecked neighbor row; panics when `v >= n`.
    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    /// Components ordered by their smallest vertex.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        let mut rest = self.vertices();
        let mut out = Vec::new();
        while let Some(root) = rest.first() {
            let mut comp = VertexSet::singleton(root);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let mut next = VertexSet::EMPTY;
                for v in &frontier {
                    next |= self.adj[v];
                }
                frontier = next - comp;
                comp |= frontier;
            }
            rest -= comp;
            out.push(comp);
        }
        out
    }

    pub fn is_automorphism(&self, perm: &VertexPermutation) -> Result<bool> {
        if perm.len() != self.n {
            return Err(Error::invalid(format!(
                "permutation length {} does not match vertex count {}",
                perm.len(),
                self.n
            )));
        }
        Ok((0..self.n).all(|v| perm.apply_set(&self.adj[v]) == self.adj[perm.apply(v)]))
    }

    /// Relabels vertices: `v` becomes `perm(v)`.
    pub fn permuted(&self, perm: &VertexPermutation) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::invalid(
                "permutation length does not match vertex count",
            ));
        }
        let mut adj = vec![VertexSet::EMPTY; self.n];
        for v in 0..self.n {
            adj[perm.apply(v)] = perm.apply_set(&self.adj[v]);
        }
        Ok(Graph { n: self.n, adj })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, lexicographic.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.adj[u]
                .iter()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// True when every pair in `s` is adjacent.
    pub fn is_clique(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| {
            let mut rest = *s;
            rest.remove(v);
            rest.is_subset(&self.adj[v])
        })
    }

    pub(crate) fn rows(&self) -> &[VertexSet] {
        &self.adj
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }

    #[test]
    fn vertex_set_basics() {
        let s = set(&[0, 63, 64, 200, 511]);
        assert_eq!(s.len(), 5);
        assert_eq!(s.first(), Some(0));
        assert_eq!(s.upper_bound(), 512);
        assert_eq!(s.to_vec(), vec![0, 63, 64, 200, 511]);
        assert!(!s.contains(512));
        assert_eq!(VertexSet::full(65).len(), 65);
        assert_eq!(VertexSet::full(64).upper_bound(), 64);
        assert!(VertexSet::EMPTY.is_empty());
        assert_eq!((set(&[1, 2, 3]) - set(&[2])).to_vec(), vec![1, 3]);
    }

    #[test]
    fn cycle_edges() {
        let c7 = Graph::cycle(7).unwrap();
        assert_eq!(c7.n(), 7);
        assert_eq!(c7.edge_count(), 7);
        assert!((0..7).all(|v| c7.degree(v) == 2));
        assert_eq!(Graph::cycle(3).unwrap(), Graph::complete(3).unwrap());
        assert_eq!(Graph::cycle(9).unwrap().edge_count(), 9);
        assert!(matches!(Graph::cycle(2), Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn paths() {
        let p1 = Graph::path(1).unwrap();
        assert_eq!((p1.n(), p1.edge_count()), (1, 0));
        assert_eq!(Graph::path(2).unwrap(), Graph::complete(2).unwrap());
        let p5 = Graph::path(5).unwrap();
        assert_eq!(p5.edge_count(), 4);
        assert_eq!((0..5).filter(|&v| p5.degree(v) == 1).count(), 2);
        assert!(Graph::path(0).is_err());
    }

    #[test]
    fn complete_graphs() {
        assert_eq!(Graph::complete(0).unwrap().n(), 0);
        assert_eq!(Graph::complete(3).unwrap().edge_count(), 3);
        assert_eq!(Graph::complete(5).unwrap().edge_count(), 10);
        assert!(Graph::complete(MAX_VERTICES + 1).is_err());
    }

    #[test]
    fn complement_of_cycle() {
        let c7 = Graph::cycle(7).unwrap();
        assert_eq!(c7.complement().complement(), c7);
        assert_eq!(c7.complement().edge_count(), 14);
        assert_eq!(
            Graph::complete(3).unwrap().complement(),
            Graph::empty(3).unwrap()
        );
    }

    #[test]
    fn joins() {
        let k2 = Graph::complete(2).unwrap();
        let k3 = Graph::complete(3).unwrap();
        assert_eq!(k2.join(&k3).unwrap(), Graph::complete(5).unwrap());
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(Graph::complete(0).unwrap().join(&c5).unwrap(), c5);
        let wheel = Graph::complete(1).unwrap().join(&c5).unwrap();
        assert_eq!((wheel.n(), wheel.edge_count()), (6, 10));
        assert_eq!(wheel.degree(0), 5);
        assert!(wheel.has_edge(1, 2) && wheel.has_edge(1, 5) && !wheel.has_edge(1, 3));
    }

    #[test]
    fn induced_subgraphs() {
        let c7 = Graph::cycle(7).unwrap();
        // v_2, v_3, v_6, v_7
        let s = set(&[1, 2, 5, 6]);
        let (h, back) = c7.induced(&s).unwrap();
        assert_eq!(back, vec![1, 2, 5, 6]);
        assert_eq!(h.edges().collect::<Vec<_>>(), vec![(0, 1), (2, 3)]);
        assert_eq!(c7.induced(&c7.vertices()).unwrap().0, c7);
        let (hc, _) = c7.complement().induced(&s).unwrap();
        assert_eq!(hc.edge_count(), 4);
        assert!((0..4).all(|v| hc.degree(v) == 2));
        assert!(c7.induced(&set(&[7])).is_err());
    }

    #[test]
    fn deletions() {
        let k5 = Graph::complete(5).unwrap();
        assert_eq!(k5.delete(&VertexSet::EMPTY).unwrap(), k5);
        assert_eq!(k5.delete(&set(&[3])).unwrap(), Graph::complete(4).unwrap());
        let c7 = Graph::cycle(7).unwrap();
        assert_eq!(c7.delete(&set(&[0])).unwrap(), Graph::path(6).unwrap());
        assert!(c7.delete(&set(&[9])).is_err());
    }

    #[test]
    fn neighborhoods() {
        let c7 = Graph::cycle(7).unwrap();
        assert_eq!(c7.neighborhood(0).unwrap(), set(&[1, 6]));
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(k4.neighborhood(2).unwrap(), set(&[0, 1, 3]));
        assert!(c7.neighborhood(7).is_err());
    }

    #[test]
    fn components() {
        let c7 = Graph::cycle(7).unwrap();
        let (h, _) = c7.induced(&set(&[1, 2, 5, 6])).unwrap();
        assert_eq!(h.connected_components(), vec![set(&[0, 1]), set(&[2, 3])]);
        let k5 = Graph::complete(5).unwrap();
        assert_eq!(k5.connected_components(), vec![k5.vertices()]);
        assert_eq!(
            Graph::empty(3).unwrap().connected_components(),
            vec![set(&[0]), set(&[1]), set(&[2])]
        );
        assert!(Graph::empty(0).unwrap().connected_components().is_empty());
    }

    #[test]
    fn automorphisms() {
        let c7 = Graph::cycle(7).unwrap();
        let rot = VertexPermutation::new((0..7).map(|i| (i + 1) % 7).collect()).unwrap();
        assert!(c7.is_automorphism(&rot).unwrap());
        assert!(rot.pow(7).is_identity());
        assert!(c7.is_automorphism(&VertexPermutation::identity(7)).unwrap());
        let p3 = Graph::path(3).unwrap();
        let swap = VertexPermutation::new(vec![1, 0, 2]).unwrap();
        assert!(!p3.is_automorphism(&swap).unwrap());
        assert!(p3.is_automorphism(&VertexPermutation::identity(4)).is_err());
        assert!(VertexPermutation::new(vec![0, 0, 1]).is_err());
    }

    #[test]
    fn permutation_algebra() {
        let a = VertexPermutation::new(vec![1, 2, 0, 3]).unwrap();
        assert!(a.compose(&a.inverse()).is_identity());
        assert_eq!(a.pow(2).image(), &[2, 0, 1, 3]);
        let p4 = Graph::path(4).unwrap();
        let rev = VertexPermutation::new(vec![3, 2, 1, 0]).unwrap();
        assert_eq!(p4.permuted(&rev).unwrap(), p4);
    }

    #[test]
    fn adjacency_validation() {
        let bad = vec![set(&[1]), VertexSet::EMPTY];
        assert!(Graph::from_adjacency(bad).is_err());
        assert!(Graph::from_adjacency(vec![set(&[0])]).is_err());
        assert!(Graph::from_adjacency(vec![set(&[3]), VertexSet::EMPTY]).is_err());
        assert!(Graph::from_edges(3, [(0, 0)]).is_err());
        let ok = Graph::from_adjacency(vec![set(&[1]), set(&[0])]).unwrap();
        assert_eq!(ok, Graph::complete(2).unwrap());
    }
}
