//! Simple undirected graphs on dense vertex indices 0..order-1, stored as a
//! bit adjacency matrix with one fixed-width mask per row. The hard cap of
//! 512 vertices keeps every set operation branch-free word arithmetic.
//!
//! Graphs are value types: construction goes through [`build_graph`] or the
//! combinators, and nothing mutates a graph afterwards, so sharing across
//! threads is safe by construction.

use crate::bits::Mask;
use crate::error::{Error, Result};

/// Largest supported graph order.
pub const MAX_ORDER: usize = 512;

/// Set of vertices of a graph of a fixed order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    order: usize,
    bits: Mask,
}

impl VertexSet {
    /// Empty set over a graph of the given order.
    pub fn empty(order: usize) -> VertexSet {
        assert!(order <= MAX_ORDER);
        VertexSet {
            order,
            bits: Mask::empty(),
        }
    }

    /// Full vertex set 0..order.
    pub fn full(order: usize) -> VertexSet {
        assert!(order <= MAX_ORDER);
        VertexSet {
            order,
            bits: Mask::first_n(order),
        }
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(order: usize, vs: I) -> Result<VertexSet> {
        let mut s = VertexSet::empty(order);
        for v in vs {
            if v >= order {
                return Err(Error::VertexOutOfRange { vertex: v, order });
            }
            s.bits.set(v);
        }
        Ok(s)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Number of members.
    pub fn len(&self) -> usize {
        self.bits.count()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    /// Panics if v is out of range, like slice indexing.
    pub fn insert(&mut self, v: usize) {
        assert!(v < self.order, "vertex {v} out of range");
        self.bits.set(v);
    }

    pub fn remove(&mut self, v: usize) {
        assert!(v < self.order, "vertex {v} out of range");
        self.bits.clear(v);
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.order && self.bits.test(v)
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        assert_eq!(self.order, other.order);
        VertexSet {
            order: self.order,
            bits: self.bits.or(&other.bits),
        }
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        assert_eq!(self.order, other.order);
        VertexSet {
            order: self.order,
            bits: self.bits.and(&other.bits),
        }
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        assert_eq!(self.order, other.order);
        VertexSet {
            order: self.order,
            bits: self.bits.and_not(&other.bits),
        }
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        !self.bits.intersects(&other.bits)
    }

    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        self.bits.is_subset_of(&other.bits)
    }

    /// Members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.ones()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub(crate) fn mask(&self) -> &Mask {
        &self.bits
    }

    pub(crate) fn from_mask(order: usize, bits: Mask) -> VertexSet {
        debug_assert!(bits.is_subset_of(&Mask::first_n(order)));
        VertexSet { order, bits }
    }
}

impl std::fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl serde::Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

/// Immutable simple graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    order: usize,
    rows: Box<[Mask]>,
}

impl Graph {
    fn with_capacity(order: usize) -> Result<Graph> {
        if order > MAX_ORDER {
            return Err(Error::CapacityExceeded {
                requested: order,
                max: MAX_ORDER,
            });
        }
        Ok(Graph {
            order,
            rows: vec![Mask::empty(); order].into_boxed_slice(),
        })
    }

    /// Edgeless graph.
    pub fn empty(order: usize) -> Result<Graph> {
        Graph::with_capacity(order)
    }

    /// Complete graph.
    pub fn complete(order: usize) -> Result<Graph> {
        Graph::from_fn(order, |_, _| true)
    }

    /// Builds a graph from an adjacency predicate on ordered pairs u < v.
    pub fn from_fn<F: FnMut(usize, usize) -> bool>(order: usize, mut f: F) -> Result<Graph> {
        let mut g = Graph::with_capacity(order)?;
        for v in 1..order {
            for u in 0..v {
                if f(u, v) {
                    g.rows[u].set(v);
                    g.rows[v].set(u);
                }
            }
        }
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        assert!(u < self.order && v < self.order, "vertex out of range");
        self.rows[u].test(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        assert!(v < self.order, "vertex out of range");
        self.rows[v].count()
    }

    /// Minimum degree; 0 for the empty-order graph.
    pub fn min_degree(&self) -> usize {
        (0..self.order).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.order).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn count_edges(&self) -> usize {
        let total: usize = (0..self.order).map(|v| self.degree(v)).sum();
        total / 2
    }

    /// Edges with endpoints in disjoint sets a and b.
    pub fn count_edges_between(&self, a: &VertexSet, b: &VertexSet) -> Result<usize> {
        assert_eq!(a.order(), self.order);
        assert_eq!(b.order(), self.order);
        if !a.is_disjoint(b) {
            return Err(Error::invalid("vertex sets overlap"));
        }
        Ok(a.iter().map(|v| self.rows[v].and(b.mask()).count()).sum())
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        assert!(v < self.order, "vertex out of range");
        VertexSet::from_mask(self.order, self.rows[v])
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.order)
    }

    /// Edges as ordered pairs u < v, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut es = Vec::with_capacity(self.count_edges());
        for u in 0..self.order {
            let mut v = u + 1;
            while let Some(w) = self.rows[u].next_one(v) {
                es.push((u, w));
                v = w + 1;
            }
        }
        es
    }

    pub fn complement(&self) -> Graph {
        let full = Mask::first_n(self.order);
        let mut g = Graph::with_capacity(self.order).expect("order already validated");
        for v in 0..self.order {
            let mut row = full.and_not(&self.rows[v]);
            row.clear(v);
            g.rows[v] = row;
        }
        g
    }

    /// Subgraph induced by s, relabeled by ascending original index.
    pub fn induced(&self, s: &VertexSet) -> Graph {
        assert_eq!(s.order(), self.order);
        let keep: Vec<usize> = s.iter().collect();
        Graph::from_fn(keep.len(), |u, v| self.rows[keep[u]].test(keep[v]))
            .expect("induced order never exceeds the original")
    }

    /// Vertices adjacent to every member of s. Errors on empty s; the result
    /// never contains a member of s.
    pub fn common_neighbors(&self, s: &VertexSet) -> Result<VertexSet> {
        assert_eq!(s.order(), self.order);
        if s.is_empty() {
            return Err(Error::invalid("common neighborhood of an empty set"));
        }
        let mut acc = Mask::first_n(self.order);
        for v in s.iter() {
            acc.and_in_place(&self.rows[v]);
        }
        Ok(VertexSet::from_mask(self.order, acc))
    }

    pub(crate) fn row(&self, v: usize) -> &Mask {
        &self.rows[v]
    }

    pub(crate) fn set_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.order && v < self.order);
        self.rows[u].set(v);
        self.rows[v].set(u);
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(order={}, edges={:?})", self.order, self.edges())
    }
}

/// Builds a graph from an explicit edge list, rejecting out-of-range
/// endpoints and self-loops. Repeated edges collapse.
pub fn build_graph(order: usize, edges: &[(usize, usize)]) -> Result<Graph> {
    let mut g = Graph::with_capacity(order)?;
    for &(u, v) in edges {
        if u >= order {
            return Err(Error::VertexOutOfRange { vertex: u, order });
        }
        if v >= order {
            return Err(Error::VertexOutOfRange { vertex: v, order });
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        g.set_edge(u, v);
    }
    Ok(g)
}

/// Join of two graphs: disjoint copies plus every cross edge. Vertices of
/// `a` keep their labels; vertices of `b` are shifted by a.order().
pub fn join(a: &Graph, b: &Graph) -> Result<Graph> {
    let na = a.order();
    let n = na + b.order();
    Graph::from_fn(n, |u, v| {
        // u < v throughout
        if v < na {
            a.has_edge(u, v)
        } else if u >= na {
            b.has_edge(u - na, v - na)
        } else {
            true
        }
    })
}

/// Disjoint union, labels assigned block by block in input order.
pub fn disjoint_union(parts: &[Graph]) -> Result<Graph> {
    let n = parts.iter().map(Graph::order).sum();
    let mut g = Graph::with_capacity(n)?;
    let mut base = 0;
    for p in parts {
        for (u, v) in p.edges() {
            g.set_edge(base + u, base + v);
        }
        base += p.order();
    }
    Ok(g)
}


#[cfg(test)]
mod tests {
    use super::test_util::{cycle, path, random_graph};
    use super::*;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};

    #[test]
    fn builds_path_with_adjacency() {
        let g = build_graph(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(g.order(), 4);
        assert_eq!(g.count_edges(), 3);
        assert!(g.has_edge(1, 2));
        assert!(!g.has_edge(0, 2));
        assert_eq!(g.degree(0), 1);
        assert_eq!(g.degree(1), 2);
    }

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(
            build_graph(3, &[(0, 3)]),
            Err(Error::VertexOutOfRange {
                vertex: 3,
                order: 3
            })
        );
        assert_eq!(build_graph(3, &[(1, 1)]), Err(Error::SelfLoop(1)));
    }

    #[test]
    fn rejects_oversized_order() {
        assert!(matches!(
            Graph::empty(513),
            Err(Error::CapacityExceeded { .. })
        ));
        assert!(Graph::empty(512).is_ok());
    }

    #[test]
    fn complement_of_five_cycle_is_a_five_cycle() {
        let c = cycle(5).complement();
        // 2-regular and connected on 5 vertices pins down C5.
        assert!((0..5).all(|v| c.degree(v) == 2));
        let mut seen = VertexSet::empty(5);
        let mut frontier = vec![0];
        seen.insert(0);
        while let Some(v) = frontier.pop() {
            for w in c.neighbors(v).iter() {
                if !seen.contains(w) {
                    seen.insert(w);
                    frontier.push(w);
                }
            }
        }
        assert_eq!(seen.len(), 5);
    }

    #[test]
    fn complement_of_complete_is_empty() {
        let g = Graph::complete(6).unwrap().complement();
        assert_eq!(g.count_edges(), 0);
    }

    #[test]
    fn join_of_empty_graphs_is_complete_bipartite() {
        let g = join(&Graph::empty(3).unwrap(), &Graph::empty(4).unwrap()).unwrap();
        assert_eq!(g.order(), 7);
        assert_eq!(g.count_edges(), 12);
        assert!(g.has_edge(0, 3));
        assert!(!g.has_edge(0, 1));
        assert!(!g.has_edge(3, 4));
    }

    #[test]
    fn disjoint_union_keeps_blocks_apart() {
        let g =
            disjoint_union(&[Graph::complete(3).unwrap(), Graph::complete(2).unwrap()]).unwrap();
        assert_eq!(g.order(), 5);
        assert_eq!(g.count_edges(), 4);
        assert!(g.has_edge(0, 1));
        assert!(g.has_edge(3, 4));
        assert!(!g.has_edge(2, 3));
    }

    #[test]
    fn induced_keeps_ascending_relabeling() {
        let g = cycle(5);
        let s = VertexSet::from_indices(5, [0, 1, 2]).unwrap();
        let h = g.induced(&s);
        assert_eq!(h.order(), 3);
        assert_eq!(h.edges(), vec![(0, 1), (1, 2)]);

        let p = path(4);
        let s = VertexSet::from_indices(4, [0, 2, 3]).unwrap();
        assert_eq!(p.induced(&s).edges(), vec![(1, 2)]);
    }

    #[test]
    fn common_neighbors_cases() {
        let g = cycle(5);
        let s = VertexSet::from_indices(5, [0, 2]).unwrap();
        assert_eq!(g.common_neighbors(&s).unwrap().to_vec(), vec![1]);

        let k4 = Graph::complete(4).unwrap();
        let s = VertexSet::from_indices(4, [0, 1]).unwrap();
        assert_eq!(k4.common_neighbors(&s).unwrap().to_vec(), vec![2, 3]);

        let two_k2 = build_graph(4, &[(0, 1), (2, 3)]).unwrap();
        let s = VertexSet::from_indices(4, [0]).unwrap();
        assert_eq!(two_k2.common_neighbors(&s).unwrap().to_vec(), vec![1]);

        let empty = VertexSet::empty(5);
        assert!(g.common_neighbors(&empty).is_err());
    }

    #[test]
    fn edge_counting_between_sets() {
        let g = join(&Graph::empty(2).unwrap(), &Graph::empty(3).unwrap()).unwrap();
        let a = VertexSet::from_indices(5, [0, 1]).unwrap();
        let b = VertexSet::from_indices(5, [2, 3, 4]).unwrap();
        assert_eq!(g.count_edges_between(&a, &b).unwrap(), 6);

        let overlapping = VertexSet::from_indices(5, [1, 2]).unwrap();
        assert!(g.count_edges_between(&a, &overlapping).is_err());
    }

    #[test]
    fn min_degree_of_star() {
        let star = build_graph(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert_eq!(star.min_degree(), 1);
        assert_eq!(star.max_degree(), 4);
        assert_eq!(Graph::empty(0).unwrap().min_degree(), 0);
    }

    #[test]
    fn edges_are_sorted_pairs() {
        let g = build_graph(4, &[(3, 1), (2, 0)]).unwrap();
        assert_eq!(g.edges(), vec![(0, 2), (1, 3)]);
    }

    proptest! {
        #[test]
        fn complement_is_an_involution(order in 0usize..=64, seed: u64) {
            let g = random_graph(order, 50, seed);
            prop_assert!(g.complement().complement() == g);
        }

        #[test]
        fn complement_edge_counts_are_complementary(order in 0usize..=64, seed: u64) {
            let g = random_graph(order, 50, seed);
            let total = order * order.saturating_sub(1) / 2;
            prop_assert_eq!(g.count_edges() + g.complement().count_edges(), total);
        }

        #[test]
        fn join_and_union_edge_counts(a in 0usize..=20, b in 0usize..=20, seed: u64) {
            let g1 = random_graph(a, 50, seed);
            let g2 = random_graph(b, 50, seed.wrapping_add(1));
            let j = join(&g1, &g2).unwrap();
            let u = disjoint_union(&[g1.clone(), g2.clone()]).unwrap();
            prop_assert_eq!(j.count_edges(), g1.count_edges() + g2.count_edges() + a * b);
            prop_assert_eq!(u.count_edges(), g1.count_edges() + g2.count_edges());
        }

        #[test]
        fn induced_on_full_set_is_identity(order in 0usize..=40, seed: u64) {
            let g = random_graph(order, 50, seed);
            prop_assert!(g.induced(&g.vertices()) == g);
        }

        #[test]
        fn common_neighbors_matches_definition(order in 1usize..=40, seed: u64) {
            let g = random_graph(order, 50, seed);
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed ^ 0x9e37);
            let k = rng.gen_range(1..=order.min(4));
            let mut s = VertexSet::empty(order);
            while s.len() < k {
                s.insert(rng.gen_range(0..order));
            }
            let cn = g.common_neighbors(&s).unwrap();
            for v in 0..order {
                let expected = !s.contains(v) && s.iter().all(|u| g.has_edge(u, v));
                prop_assert_eq!(cn.contains(v), expected);
            }
            prop_assert!(cn.is_disjoint(&s));
        }

        #[test]
        fn degree_sum_is_twice_edges(order in 0usize..=64, seed: u64) {
            let g = random_graph(order, 30, seed);
            let sum: usize = (0..order).map(|v| g.degree(v)).sum();
            prop_assert_eq!(sum, 2 * g.count_edges());
        }
    }
}
