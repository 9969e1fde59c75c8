//! Runnable forms of the structural arguments: local-move partition
//! refinement, greedy independent sets, clique counting, degree peeling, and
//! a budgeted search for induced balanced blowups.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bits::Mask;
use crate::error::{Error, Result};
use crate::freeness::{Embedding, PatternKind};
use crate::graph::{Graph, VertexSet};

/// A vertex partition together with its cached cost and the number of moves
/// the refinement took to reach it.
#[derive(Clone, Debug, Serialize)]
pub struct PartitionState {
    /// Class index per vertex.
    pub assignment: Vec<usize>,
    pub part_sizes: Vec<usize>,
    /// Total number of edges inside classes.
    pub internal_edges: usize,
    pub moves: usize,
}

/// Local-search partition refinement: starting from a round-robin assignment
/// (shuffled first when a seed is given), repeatedly apply the first
/// single-vertex move that strictly decreases the internal edge count,
/// scanning vertices and target classes in ascending order and rescanning
/// from the start after each move.
///
/// The fixpoint has no vertex with more neighbors in its own class than in
/// any other class. Each move removes at least one internal edge, so the
/// move count is at most the initial internal edge count.
pub fn refine_partition(g: &Graph, classes: usize, seed: Option<u64>) -> Result<PartitionState> {
    if classes == 0 {
        return Err(Error::invalid("at least one class is required"));
    }
    let n = g.order();
    let mut assignment = vec![0usize; n];
    match seed {
        None => {
            for (v, slot) in assignment.iter_mut().enumerate() {
                *slot = v % classes;
            }
        }
        Some(s) => {
            let mut perm: Vec<usize> = (0..n).collect();
            perm.shuffle(&mut ChaCha8Rng::seed_from_u64(s));
            for (i, &v) in perm.iter().enumerate() {
                assignment[v] = i % classes;
            }
        }
    }
    let mut masks = vec![Mask::empty(); classes];
    for (v, &c) in assignment.iter().enumerate() {
        masks[c].set(v);
    }
    let mut moves = 0usize;
    'scan: loop {
        for (v, slot) in assignment.iter_mut().enumerate() {
            let own = *slot;
            let d_own = g.row(v).and(&masks[own]).count();
            for target in 0..classes {
                if target != own && g.row(v).and(&masks[target]).count() < d_own {
                    masks[own].clear(v);
                    masks[target].set(v);
                    *slot = target;
                    moves += 1;
                    continue 'scan;
                }
            }
        }
        break;
    }
    Ok(PartitionState {
        part_sizes: masks.iter().map(Mask::count).collect(),
        internal_edges: internal_edge_count(g, &masks),
        assignment,
        moves,
    })
}

fn class_masks(order: usize, assignment: &[usize], classes: usize) -> Vec<Mask> {
    debug_assert_eq!(order, assignment.len());
    let mut masks = vec![Mask::empty(); classes];
    for (v, &c) in assignment.iter().enumerate() {
        masks[c].set(v);
    }
    masks
}

fn internal_edge_count(g: &Graph, masks: &[Mask]) -> usize {
    let mut twice = 0;
    for mask in masks {
        for v in mask.ones() {
            twice += g.row(v).and(mask).count();
        }
    }
    twice / 2
}

/// Edge count and density between one ordered pair of classes.
#[derive(Clone, Debug, Serialize)]
pub struct CrossDensity {
    pub parts: (usize, usize),
    pub edges: usize,
    pub density: f64,
}

/// How a partition measures up against the epsilon-thresholds: few internal
/// edges, near-equal class sizes, dense cross pairs, and no vertex with more
/// neighbors at home than in any other class.
#[derive(Clone, Debug, Serialize)]
pub struct PartitionDiagnostics {
    pub epsilon: f64,
    /// Internal edges over C(n,2).
    pub internal_edge_ratio: f64,
    pub internal_within_bound: bool,
    /// Per class, | size - n/classes |.
    pub size_deviations: Vec<f64>,
    pub sizes_within_bound: bool,
    pub cross_densities: Vec<CrossDensity>,
    pub cross_within_bound: bool,
    pub condition_iv_violations: usize,
}

/// Recomputes every quantity from the assignment; the state's cached fields
/// are not consulted. Thresholds: internal edges at most eps*C(n,2), size
/// deviations at most sqrt(2*eps)*n, and cross densities at least
/// 1 - (classes+1)^2 * eps.
pub fn partition_diagnostics(
    g: &Graph,
    st: &PartitionState,
    epsilon: f64,
) -> Result<PartitionDiagnostics> {
    if !(epsilon > 0.0 && epsilon < 1.0) {
        return Err(Error::invalid("epsilon must lie strictly between 0 and 1"));
    }
    let n = g.order();
    let classes = st.part_sizes.len();
    if st.assignment.len() != n {
        return Err(Error::invalid("assignment length differs from graph order"));
    }
    if classes == 0 || st.assignment.iter().any(|&c| c >= classes) {
        return Err(Error::invalid("assignment refers to a class out of range"));
    }
    let masks = class_masks(n, &st.assignment, classes);
    let sizes: Vec<usize> = masks.iter().map(Mask::count).collect();

    let internal = internal_edge_count(g, &masks);
    let pairs = n * n.saturating_sub(1) / 2;
    let internal_edge_ratio = if pairs == 0 {
        0.0
    } else {
        internal as f64 / pairs as f64
    };
    let internal_within_bound = internal as f64 <= epsilon * pairs as f64;

    let ideal = n as f64 / classes as f64;
    let size_deviations: Vec<f64> = sizes.iter().map(|&s| (s as f64 - ideal).abs()).collect();
    let size_bound = (2.0 * epsilon).sqrt() * n as f64;
    let sizes_within_bound = size_deviations.iter().all(|&d| d <= size_bound);

    let p = (classes + 1) as f64;
    let density_bound = 1.0 - p * p * epsilon;
    let mut cross_densities = Vec::new();
    let mut cross_within_bound = true;
    for i in 0..classes {
        for j in i + 1..classes {
            let edges: usize = masks[i]
                .ones()
                .map(|v| g.row(v).and(&masks[j]).count())
                .sum();
            let slots = sizes[i] * sizes[j];
            let density = if slots == 0 {
                1.0
            } else {
                edges as f64 / slots as f64
            };
            cross_within_bound &= density >= density_bound;
            cross_densities.push(CrossDensity {
                parts: (i, j),
                edges,
                density,
            });
        }
    }

    let condition_iv_violations = (0..n)
        .filter(|&v| {
            let d_own = g.row(v).and(&masks[st.assignment[v]]).count();
            (0..classes).any(|c| c != st.assignment[v] && g.row(v).and(&masks[c]).count() < d_own)
        })
        .count();

    Ok(PartitionDiagnostics {
        epsilon,
        internal_edge_ratio,
        internal_within_bound,
        size_deviations,
        sizes_within_bound,
        cross_densities,
        cross_within_bound,
        condition_iv_violations,
    })
}

/// Greedy independent set by repeated minimum-degree selection; always meets
/// the bound ceil(n / (1 + average degree)). Ties go to the lowest index.
pub fn turan_independent_set(g: &Graph) -> VertexSet {
    let n = g.order();
    let mut alive = Mask::first_n(n);
    let mut picked = VertexSet::empty(n);
    while !alive.is_empty() {
        let best = alive
            .ones()
            .min_by_key(|&v| g.row(v).and(&alive).count())
            .expect("alive is nonempty");
        picked.insert(best);
        alive.clear(best);
        alive = alive.and_not(g.row(best));
    }
    picked
}

/// Exact number of p-vertex cliques, counted by ordered extension of the
/// common neighborhood.
pub fn count_cliques(g: &Graph, p: usize) -> u64 {
    assert!(p >= 1, "clique order must be positive");
    fn extend(g: &Graph, cand: &Mask, from: usize, left: usize) -> u64 {
        if left == 0 {
            return 1;
        }
        if cand.count_from(from) < left {
            return 0;
        }
        let mut total = 0;
        let mut at = from;
        while let Some(v) = cand.next_one(at) {
            total += extend(g, &cand.and(g.row(v)), v + 1, left - 1);
            at = v + 1;
        }
        total
    }
    extend(g, &Mask::first_n(g.order()), 0, p)
}

/// Splits the vertices into those of degree strictly above the threshold and
/// the rest.
pub fn degree_peel(g: &Graph, threshold: usize) -> (VertexSet, VertexSet) {
    let n = g.order();
    let mut high = VertexSet::empty(n);
    let mut low = VertexSet::empty(n);
    for v in 0..n {
        if g.degree(v) > threshold {
            high.insert(v);
        } else {
            low.insert(v);
        }
    }
    (high, low)
}

/// Result of the budgeted induced-blowup search. `Absent` means the whole
/// space was exhausted; `Inconclusive` means the node budget ran out first
/// and says nothing about presence.
#[derive(Clone, Debug)]
pub enum BlowupOutcome {
    Found(Embedding),
    Absent,
    Inconclusive,
}

impl BlowupOutcome {
    pub fn embedding(&self) -> Option<&Embedding> {
        match self {
            BlowupOutcome::Found(e) => Some(e),
            _ => None,
        }
    }
}

enum Probe {
    Found,
    Exhausted,
    Out,
}

struct BlowupSearch<'a> {
    g: &'a Graph,
    classes: usize,
    class_size: usize,
    used: Mask,
    chosen: Vec<Vec<usize>>,
    budget: u64,
}

impl BlowupSearch<'_> {
    // cross: adjacency required by every completed class; forbid: neighbors
    // of the current class's picks, excluded to keep the class independent
    fn fill(&mut self, pi: usize, pos: usize, min_v: usize, cross: Mask, forbid: Mask) -> Probe {
        if pos == self.class_size {
            if pi + 1 == self.classes {
                return Probe::Found;
            }
            let mut next = cross;
            for &w in &self.chosen[pi] {
                next.and_in_place(self.g.row(w));
            }
            // classes all have equal size, so demanding increasing first
            // vertices loses no embedding
            return self.fill(pi + 1, 0, self.chosen[pi][0] + 1, next, Mask::empty());
        }
        let avail = cross.and_not(&forbid).and_not(&self.used);
        if avail.count_from(min_v) < self.class_size - pos {
            return Probe::Exhausted;
        }
        let mut at = min_v;
        while let Some(v) = avail.next_one(at) {
            if self.budget == 0 {
                return Probe::Out;
            }
            self.budget -= 1;
            self.used.set(v);
            self.chosen[pi].push(v);
            match self.fill(pi, pos + 1, v + 1, cross, forbid.or(self.g.row(v))) {
                Probe::Exhausted => {
                    self.used.clear(v);
                    self.chosen[pi].pop();
                }
                done => return done,
            }
            at = v + 1;
        }
        Probe::Exhausted
    }
}

/// Best-effort backtracking search for an induced balanced blowup: `classes`
/// disjoint independent sets of `class_size` vertices with every cross pair
/// adjacent. Each attempted vertex placement costs one unit of budget.
pub fn find_induced_blowup(
    g: &Graph,
    classes: usize,
    class_size: usize,
    budget: u64,
) -> BlowupOutcome {
    assert!(
        classes >= 1 && class_size >= 1,
        "blowup shape must be nonempty"
    );
    if classes * class_size > g.order() {
        return BlowupOutcome::Absent;
    }
    let mut search = BlowupSearch {
        g,
        classes,
        class_size,
        used: Mask::empty(),
        chosen: vec![Vec::new(); classes],
        budget,
    };
    match search.fill(0, 0, 0, Mask::first_n(g.order()), Mask::empty()) {
        Probe::Found => {
            let images = search
                .chosen
                .iter()
                .map(|part| {
                    let mut s = VertexSet::empty(g.order());
                    for &v in part {
                        s.insert(v);
                    }
                    s
                })
                .collect();
            BlowupOutcome::Found(Embedding {
                kind: PatternKind::InducedBlowup {
                    classes,
                    class_size,
                },
                images,
            })
        }
        Probe::Exhausted => BlowupOutcome::Absent,
        Probe::Out => BlowupOutcome::Inconclusive,
    }
}
