//! Isomorph-free exhaustive generation of small graphs.
//!
//! Canonical form: the minimum, over all labelings, of the upper-triangle
//! adjacency bit string read column by column (the graph6 bit order).
//! Deleting the last vertex of a minimum-labeled graph leaves a
//! minimum-labeled graph, so the generator grows canonical parents by one
//! new last vertex with every possible neighborhood and keeps exactly the
//! children that are canonical themselves. Each isomorphism class is emitted
//! exactly once, with no stored seen-set.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order the generator accepts.
pub const ENUMERATION_CAP: usize = 10;

const MAXN: usize = 12;

#[derive(Clone, Copy)]
struct SmallGraph {
    n: usize,
    rows: [u16; MAXN],
}

impl SmallGraph {
    fn single() -> SmallGraph {
        SmallGraph {
            n: 1,
            rows: [0; MAXN],
        }
    }

    /// Appends vertex `n` with the given neighborhood bits.
    fn extend(&self, neighborhood: u16) -> SmallGraph {
        let mut child = *self;
        let v = child.n;
        child.rows[v] = neighborhood;
        let mut rest = neighborhood;
        while rest != 0 {
            let u = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            child.rows[u] |= 1 << v;
        }
        child.n = v + 1;
        child
    }

    fn to_graph(self) -> Graph {
        Graph::from_fn(self.n, |u, v| self.rows[u] >> v & 1 == 1).expect("within capacity")
    }
}

/// Whether the identity labeling attains the minimum code. Labelings are
/// searched position by position, comparing each new column against the
/// identity code: a strictly smaller column means the graph is not
/// canonical, a strictly larger one prunes the branch. A candidate whose
/// swap with an already rejected candidate is an automorphism is skipped.
fn is_min_code(n: usize, rows: &[u16; MAXN]) -> bool {
    if n <= 1 {
        return true;
    }
    let mut refcol = [0u16; MAXN];
    for j in 1..n {
        let mut col = 0u16;
        for i in 0..j {
            col = col << 1 | rows[j] >> i & 1;
        }
        refcol[j] = col;
    }
    let mut placed = [0u8; MAXN];
    !smaller_labeling(n, rows, &refcol, &mut placed, 0, 0)
}

fn smaller_labeling(
    n: usize,
    rows: &[u16; MAXN],
    refcol: &[u16; MAXN],
    placed: &mut [u8; MAXN],
    placed_mask: u16,
    pos: usize,
) -> bool {
    if pos == n {
        return false;
    }
    let mut tried: u16 = 0;
    let mut avail = !placed_mask & ((1u16 << n) - 1);
    while avail != 0 {
        let v = avail.trailing_zeros() as usize;
        avail &= avail - 1;
        let bv = 1u16 << v;
        let mut twin = false;
        let mut others = tried;
        while others != 0 {
            let u = others.trailing_zeros() as usize;
            others &= others - 1;
            if (rows[u] ^ rows[v]) & !(1u16 << u | bv) == 0 {
                twin = true;
                break;
            }
        }
        tried |= bv;
        if twin {
            continue;
        }
        let mut col = 0u16;
        for &p in &placed[..pos] {
            col = col << 1 | rows[v] >> p as usize & 1;
        }
        match col.cmp(&refcol[pos]) {
            std::cmp::Ordering::Less => return true,
            std::cmp::Ordering::Greater => continue,
            std::cmp::Ordering::Equal => {
                placed[pos] = v as u8;
                if smaller_labeling(n, rows, refcol, placed, placed_mask | bv, pos + 1) {
                    return true;
                }
            }
        }
    }
    false
}

/// Streams one representative per isomorphism class, in a fixed
/// deterministic depth-first order.
pub struct GraphEnumeration {
    target: usize,
    root_emitted: bool,
    stack: Vec<(SmallGraph, u32)>,
}

/// All graphs of the given order up to isomorphism.
pub fn enumerate_graphs(order: usize) -> Result<GraphEnumeration> {
    if order > ENUMERATION_CAP {
        return Err(Error::CapacityExceeded {
            requested: order,
            max: ENUMERATION_CAP,
        });
    }
    let stack = if order >= 2 {
        vec![(SmallGraph::single(), 0u32)]
    } else {
        Vec::new()
    };
    Ok(GraphEnumeration {
        target: order,
        root_emitted: false,
        stack,
    })
}

impl Iterator for GraphEnumeration {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.target <= 1 {
            if self.root_emitted {
                return None;
            }
            self.root_emitted = true;
            return Some(Graph::empty(self.target).expect("tiny order"));
        }
        loop {
            let child = {
                let top = self.stack.last_mut()?;
                if top.1 >= 1u32 << top.0.n {
                    None
                } else {
                    let subset = top.1 as u16;
                    top.1 += 1;
                    Some(top.0.extend(subset))
                }
            };
            match child {
                None => {
                    self.stack.pop();
                }
                Some(child) => {
                    if is_min_code(child.n, &child.rows) {
                        if child.n == self.target {
                            return Some(child.to_graph());
                        }
                        self.stack.push((child, 0));
                    }
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Isomorphism-class counts for orders 0..=9.
    const KNOWN_COUNTS: [usize; 10] = [1, 1, 2, 4, 11, 34, 156, 1044, 12346, 274668];

    #[test]
    fn counts_match_known_sequence_through_order_eight() {
        for (order, &expected) in KNOWN_COUNTS.iter().enumerate().take(9) {
            let got = enumerate_graphs(order).unwrap().count();
            assert_eq!(got, expected, "order {order}");
        }
    }

    #[test]
    fn count_matches_at_order_nine() {
        assert_eq!(enumerate_graphs(9).unwrap().count(), KNOWN_COUNTS[9]);
    }

    #[test]
    fn rejects_orders_past_the_cap() {
        assert!(matches!(
            enumerate_graphs(11),
            Err(Error::CapacityExceeded { max: 10, .. })
        ));
    }

    #[test]
    fn order_three_stream_is_deterministic() {
        let got: Vec<Vec<(usize, usize)>> =
            enumerate_graphs(3).unwrap().map(|g| g.edges()).collect();
        assert_eq!(
            got,
            vec![
                vec![],
                vec![(1, 2)],
                vec![(0, 2), (1, 2)],
                vec![(0, 1), (0, 2), (1, 2)],
            ]
        );
    }

    /// Burnside count of isomorphism classes: average over all vertex
    /// permutations of 2^(orbits on unordered pairs). Entirely independent
    /// of the generator's canonical-form machinery.
    fn burnside_count(n: usize) -> u128 {
        fn pair_index(n: usize, mut a: usize, mut b: usize) -> usize {
            if a > b {
                std::mem::swap(&mut a, &mut b);
            }
            a * n - a * (a + 1) / 2 + b - a - 1
        }
        let mut total: u128 = 0;
        let mut perm: Vec<usize> = (0..n).collect();
        let mut factorial: u128 = 1;
        for i in 2..=n {
            factorial *= i as u128;
        }
        // iterate permutations in place
        fn visit(perm: &mut Vec<usize>, k: usize, n: usize, total: &mut u128) {
            if k == perm.len() {
                let pairs = n * n.saturating_sub(1) / 2;
                let mut seen = vec![false; pairs];
                let mut orbits = 0u32;
                for a in 0..n {
                    for b in a + 1..n {
                        let start = pair_index(n, a, b);
                        if seen[start] {
                            continue;
                        }
                        orbits += 1;
                        let (mut x, mut y) = (a, b);
                        loop {
                            let idx = pair_index(n, x, y);
                            if seen[idx] {
                                break;
                            }
                            seen[idx] = true;
                            let (nx, ny) = (perm[x], perm[y]);
                            x = nx;
                            y = ny;
                        }
                    }
                }
                *total += 1u128 << orbits;
                return;
            }
            for i in k..perm.len() {
                perm.swap(k, i);
                visit(perm, k + 1, n, total);
                perm.swap(k, i);
            }
        }
        if n == 0 {
            return 1;
        }
        visit(&mut perm, 0, n, &mut total);
        total / factorial
    }

    #[test]
    fn counts_match_burnside_formula() {
        for order in 0..=7 {
            let got = enumerate_graphs(order).unwrap().count() as u128;
            assert_eq!(got, burnside_count(order), "order {order}");
        }
    }

    /// Every labeled graph should be isomorphic to exactly one emitted
    /// representative.
    #[test]
    fn representatives_cover_all_labeled_graphs_once() {
        fn isomorphic(a: &Graph, b: &Graph) -> bool {
            let n = a.order();
            if n != b.order() || a.count_edges() != b.count_edges() {
                return false;
            }
            let mut perm: Vec<usize> = (0..n).collect();
            fn search(a: &Graph, b: &Graph, perm: &mut Vec<usize>, k: usize) -> bool {
                let n = a.order();
                if k == n {
                    return true;
                }
                for i in k..n {
                    perm.swap(k, i);
                    // perm[j] is the image of vertex j of `a` inside `b`
                    let ok = (0..k).all(|j| a.has_edge(j, k) == b.has_edge(perm[j], perm[k]));
                    if ok && search(a, b, perm, k + 1) {
                        return true;
                    }
                    perm.swap(k, i);
                }
                false
            }
            search(a, b, &mut perm, 0)
        }

        for order in 0..=5usize {
            let reps: Vec<Graph> = enumerate_graphs(order).unwrap().collect();
            let pairs = order * order.saturating_sub(1) / 2;
            for bits in 0u32..1 << pairs {
                let mut idx = 0;
                let labeled = Graph::from_fn(order, |_, _| {
                    let b = bits >> idx & 1 == 1;
                    idx += 1;
                    b
                })
                .unwrap();
                let matches = reps.iter().filter(|r| isomorphic(&labeled, r)).count();
                assert_eq!(matches, 1, "order {order} bits {bits:b}");
            }
        }
    }
}
