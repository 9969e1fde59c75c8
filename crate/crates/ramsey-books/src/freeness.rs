//! Containment deciders: complete multipartite subgraphs, books, and exact
//! chromatic data (chromatic number plus minimum color-class size) for small
//! graphs.
//!
//! Containment is subgraph containment throughout: parts of a multipartite
//! pattern need not be independent in the host. Induced search lives in the
//! structure module.

use std::collections::HashMap;

use serde::Serialize;

use crate::bits::Mask;
use crate::constructions::{BookPattern, MultipartitePattern};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Largest order accepted by [`chromatic_info`].
pub const CHROMATIC_CAP: usize = 16;

/// What a placement is a copy of.
#[derive(Clone, Debug, Serialize)]
#[serde(tag = "pattern", rename_all = "snake_case")]
pub enum PatternKind {
    /// Parts of the listed sizes with every cross pair adjacent.
    Multipartite { parts: Vec<usize> },
    /// A clique of `spine` vertices plus `pages` common neighbors.
    Book { spine: usize, pages: usize },
    /// Independent parts with every cross pair adjacent (an induced copy).
    InducedBlowup { classes: usize, class_size: usize },
}

/// A placement of a pattern inside a host graph, reported as one vertex set
/// per part. For books the first image is the spine and the second the pages.
#[derive(Clone, Debug, Serialize)]
pub struct Embedding {
    #[serde(flatten)]
    pub kind: PatternKind,
    pub images: Vec<VertexSet>,
}

impl Embedding {
    /// Re-checks every requirement of the pattern by direct adjacency scan.
    pub fn verify(&self, host: &Graph) -> bool {
        let n = host.order();
        if self.images.iter().any(|s| s.order() != n) {
            return false;
        }
        for i in 0..self.images.len() {
            for j in i + 1..self.images.len() {
                if !self.images[i].is_disjoint(&self.images[j]) {
                    return false;
                }
            }
        }
        match &self.kind {
            PatternKind::Multipartite { parts } => {
                parts.len() == self.images.len()
                    && parts
                        .iter()
                        .zip(&self.images)
                        .all(|(&size, im)| im.len() == size)
                    && cross_complete(host, &self.images)
            }
            PatternKind::Book { spine, pages } => {
                self.images.len() == 2
                    && self.images[0].len() == *spine
                    && self.images[1].len() == *pages
                    && is_clique(host, &self.images[0])
                    && cross_complete(host, &self.images)
            }
            PatternKind::InducedBlowup {
                classes,
                class_size,
            } => {
                self.images.len() == *classes
                    && self.images.iter().all(|im| im.len() == *class_size)
                    && self.images.iter().all(|im| is_independent(host, im))
                    && cross_complete(host, &self.images)
            }
        }
    }
}

fn cross_complete(host: &Graph, images: &[VertexSet]) -> bool {
    for i in 0..images.len() {
        for j in i + 1..images.len() {
            for u in images[i].iter() {
                for v in images[j].iter() {
                    if !host.has_edge(u, v) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

fn is_clique(host: &Graph, s: &VertexSet) -> bool {
    let vs = s.to_vec();
    vs.iter()
        .enumerate()
        .all(|(i, &u)| vs[i + 1..].iter().all(|&v| host.has_edge(u, v)))
}

fn is_independent(host: &Graph, s: &VertexSet) -> bool {
    let vs = s.to_vec();
    vs.iter()
        .enumerate()
        .all(|(i, &u)| vs[i + 1..].iter().all(|&v| !host.has_edge(u, v)))
}

/// Groups vertices by open and closed neighborhood. Two vertices u, v are
/// interchangeable (the transposition is an automorphism) exactly when they
/// share an open-neighborhood class or a closed-neighborhood class, so a
/// backtracking search may skip a candidate whose class already failed.
pub(crate) fn twin_ids(g: &Graph) -> (Vec<u16>, Vec<u16>) {
    let n = g.order();
    let mut open_map: HashMap<Mask, u16> = HashMap::new();
    let mut closed_map: HashMap<Mask, u16> = HashMap::new();
    let mut open = Vec::with_capacity(n);
    let mut closed = Vec::with_capacity(n);
    for v in 0..n {
        let row = *g.row(v);
        let next = open_map.len() as u16;
        open.push(*open_map.entry(row).or_insert(next));
        let mut closed_row = row;
        closed_row.set(v);
        let next = closed_map.len() as u16;
        closed.push(*closed_map.entry(closed_row).or_insert(next));
    }
    (open, closed)
}

/// Finds a complete multipartite subgraph, reporting images in the pattern's
/// own part order. Deterministic: parts are placed largest first and vertex
/// choices ascend, so the first embedding found is lexicographically least
/// under that order.
pub fn find_multipartite(g: &Graph, m: &MultipartitePattern) -> Option<Embedding> {
    if m.total() > g.order() {
        return None;
    }
    let mut search = MpSearch::new(g, m);
    if !search.fill_part(0, Mask::first_n(g.order())) {
        return None;
    }
    let mut images = vec![VertexSet::empty(g.order()); m.part_count()];
    for (pi, chosen) in search.chosen.iter().enumerate() {
        images[search.orig[pi]] =
            VertexSet::from_indices(g.order(), chosen.iter().copied()).expect("in range");
    }
    Some(Embedding {
        kind: PatternKind::Multipartite {
            parts: m.parts().to_vec(),
        },
        images,
    })
}

pub fn contains_multipartite(g: &Graph, m: &MultipartitePattern) -> bool {
    find_multipartite(g, m).is_some()
}

pub fn is_c4_free(g: &Graph) -> bool {
    let c4 = MultipartitePattern::new([2, 2]).expect("valid pattern");
    find_multipartite(g, &c4).is_none()
}

struct MpSearch<'g> {
    g: &'g Graph,
    /// Part sizes in search order (descending, stable).
    sizes: Vec<usize>,
    /// Search position -> index in the pattern's own part list.
    orig: Vec<usize>,
    /// Vertices still needed from search part i onward.
    suffix_need: Vec<usize>,
    open_id: Vec<u16>,
    closed_id: Vec<u16>,
    used: Mask,
    chosen: Vec<Vec<usize>>,
}

impl<'g> MpSearch<'g> {
    fn new(g: &'g Graph, m: &MultipartitePattern) -> MpSearch<'g> {
        let parts = m.parts();
        let mut orig: Vec<usize> = (0..parts.len()).collect();
        orig.sort_by_key(|&i| std::cmp::Reverse(parts[i]));
        let sizes: Vec<usize> = orig.iter().map(|&i| parts[i]).collect();
        let mut suffix_need = vec![0; sizes.len() + 1];
        for i in (0..sizes.len()).rev() {
            suffix_need[i] = suffix_need[i + 1] + sizes[i];
        }
        let (open_id, closed_id) = twin_ids(g);
        let chosen = vec![Vec::new(); sizes.len()];
        MpSearch {
            g,
            sizes,
            orig,
            suffix_need,
            open_id,
            closed_id,
            used: Mask::empty(),
            chosen,
        }
    }

    /// `common`: vertices adjacent to every member of every completed part.
    fn fill_part(&mut self, pi: usize, common: Mask) -> bool {
        if pi == self.sizes.len() {
            return true;
        }
        if common.and_not(&self.used).count() < self.suffix_need[pi] {
            return false;
        }
        // consecutive equal-size parts are interchangeable; force ascending
        // first vertices so each family of sets is tried once
        let min_start = if pi > 0 && self.sizes[pi - 1] == self.sizes[pi] {
            self.chosen[pi - 1][0] + 1
        } else {
            0
        };
        self.pick(pi, 0, min_start, &common, &Mask::first_n(self.g.order()))
    }

    /// `acc`: vertices adjacent to every member placed so far in part `pi`.
    fn pick(&mut self, pi: usize, pos: usize, min_v: usize, common: &Mask, acc: &Mask) -> bool {
        if pos == self.sizes[pi] {
            return self.fill_part(pi + 1, common.and(acc));
        }
        let cand = common.and_not(&self.used);
        let needed = self.sizes[pi] - pos;
        let mut left = cand.count_from(min_v);
        let mut tried_open = Mask::empty();
        let mut tried_closed = Mask::empty();
        let mut cursor = cand.next_one(min_v);
        while let Some(v) = cursor {
            if left < needed {
                return false;
            }
            left -= 1;
            cursor = cand.next_one(v + 1);
            let o = self.open_id[v] as usize;
            let c = self.closed_id[v] as usize;
            // a vertex interchangeable with an already failed choice fails too
            if tried_open.test(o) || tried_closed.test(c) {
                continue;
            }
            tried_open.set(o);
            tried_closed.set(c);
            self.used.set(v);
            self.chosen[pi].push(v);
            if self.pick(pi, pos + 1, v + 1, common, &acc.and(self.g.row(v))) {
                return true;
            }
            self.chosen[pi].pop();
            self.used.clear(v);
        }
        false
    }
}

/// Visits every k-clique in ascending lexicographic member order together
/// with the mask of its common neighbors; stops when the visitor returns
/// true. Returns whether a visitor stopped the walk.
fn for_each_clique(g: &Graph, k: usize, visit: &mut dyn FnMut(&[usize], &Mask) -> bool) -> bool {
    let full = Mask::first_n(g.order());
    let mut members = Vec::with_capacity(k);
    clique_rec(g, k, 0, &full, &mut members, visit)
}

fn clique_rec(
    g: &Graph,
    k: usize,
    start: usize,
    nb: &Mask,
    members: &mut Vec<usize>,
    visit: &mut dyn FnMut(&[usize], &Mask) -> bool,
) -> bool {
    if members.len() == k {
        return visit(members, nb);
    }
    let needed = k - members.len();
    let mut left = nb.count_from(start);
    let mut cursor = nb.next_one(start);
    while let Some(v) = cursor {
        if left < needed {
            return false;
        }
        left -= 1;
        cursor = nb.next_one(v + 1);
        members.push(v);
        if clique_rec(g, k, v + 1, &nb.and(g.row(v)), members, visit) {
            return true;
        }
        members.pop();
    }
    false
}

/// Finds a book: a clique of `b.spine()` vertices with at least `b.pages()`
/// common neighbors. The first spine in lexicographic order wins; pages are
/// its lowest-indexed common neighbors.
pub fn find_book(g: &Graph, b: &BookPattern) -> Option<Embedding> {
    let k = b.spine();
    let pages = b.pages();
    let mut found = None;
    for_each_clique(g, k, &mut |members, commons| {
        if commons.count() >= pages {
            let spine = VertexSet::from_indices(g.order(), members.iter().copied())
                .expect("clique members in range");
            let page_set =
                VertexSet::from_indices(g.order(), commons.ones().take(pages)).expect("in range");
            found = Some(Embedding {
                kind: PatternKind::Book { spine: k, pages },
                images: vec![spine, page_set],
            });
            true
        } else {
            false
        }
    });
    found
}

/// Maximum k + |common neighbors| over all k-cliques; 0 when no k-clique
/// exists. A single vertex counts as a 1-clique.
pub fn book_size(g: &Graph, k: usize) -> usize {
    assert!(k >= 1, "spine size must be at least 1");
    let mut best = 0;
    for_each_clique(g, k, &mut |_, commons| {
        best = best.max(k + commons.count());
        false
    });
    best
}

/// Exact chromatic number and minimum color-class size over all proper
/// colorings with exactly that many colors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ChromaticInfo {
    pub chi: usize,
    pub surplus: usize,
}

/// Computes [`ChromaticInfo`] by exhaustive canonical-coloring search.
/// Colorings are enumerated with classes in first-use order, so each set
/// partition appears once and color permutations cost nothing.
pub fn chromatic_info(g: &Graph) -> Result<ChromaticInfo> {
    let n = g.order();
    if n > CHROMATIC_CAP {
        return Err(Error::CapacityExceeded {
            requested: n,
            max: CHROMATIC_CAP,
        });
    }
    if n == 0 {
        return Ok(ChromaticInfo { chi: 0, surplus: 0 });
    }
    let rows: Vec<u32> = (0..n).map(|v| g.row(v).0[0] as u32).collect();
    let chi = (1..=n)
        .find(|&k| can_color(&rows, k, 0, 0, &mut [0u32; CHROMATIC_CAP]))
        .expect("n colors always suffice");
    let mut best = n;
    min_class_size(&rows, chi, 0, 0, &mut [0u32; CHROMATIC_CAP], &mut best);
    Ok(ChromaticInfo { chi, surplus: best })
}

fn can_color(rows: &[u32], k: usize, v: usize, used: usize, classes: &mut [u32; 16]) -> bool {
    if v == rows.len() {
        return true;
    }
    let limit = (used + 1).min(k);
    for c in 0..limit {
        if classes[c] & rows[v] == 0 {
            classes[c] |= 1 << v;
            if can_color(rows, k, v + 1, used.max(c + 1), classes) {
                return true;
            }
            classes[c] &= !(1 << v);
        }
    }
    false
}

fn min_class_size(
    rows: &[u32],
    chi: usize,
    v: usize,
    used: usize,
    classes: &mut [u32; 16],
    best: &mut usize,
) {
    if *best == 1 {
        return;
    }
    let n = rows.len();
    if v == n {
        if used == chi {
            let smallest = (0..used)
                .map(|c| classes[c].count_ones() as usize)
                .min()
                .expect("chi >= 1");
            *best = (*best).min(smallest);
        }
        return;
    }
    if used + (n - v) < chi {
        return;
    }
    let limit = (used + 1).min(chi);
    for c in 0..limit {
        if classes[c] & rows[v] == 0 {
            classes[c] |= 1 << v;
            min_class_size(rows, chi, v + 1, used.max(c + 1), classes, best);
            classes[c] &= !(1 << v);
        }
    }
}
