//! DIMACS CNF export of the arrowing counterexample search: the instance is
//! satisfiable exactly when some graph of the given order avoids the
//! multipartite pattern while its complement avoids the book.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::ramsey::RamseyQuery;

/// Instances blow up combinatorially; past this order the encoder refuses.
pub const CNF_ORDER_CAP: usize = 24;

/// Bookkeeping for one spine subset: which auxiliary variable stands for
/// "this outside vertex is a common complement-neighbor of a complement
/// clique", and the sequential counter registers that cap how many may hold.
#[derive(Clone, Debug)]
struct BookGroup {
    subset: Vec<usize>,
    triggers: Vec<(usize, i32)>,
    /// counters[i][j]: at least j+1 of the first i+1 triggers hold.
    counters: Vec<Vec<i32>>,
    bound: usize,
}

#[derive(Clone, Debug)]
pub struct CnfInstance {
    pub variable_count: usize,
    pub clauses: Vec<Vec<i32>>,
    /// Unordered pair to DIMACS variable, column-major like graph6 bits.
    pub edge_var_map: Vec<((usize, usize), i32)>,
    order: usize,
    books: Vec<BookGroup>,
}

impl CnfInstance {
    pub fn order(&self) -> usize {
        self.order
    }
}

fn edge_var(u: usize, v: usize) -> i32 {
    let (a, b) = if u < v { (u, v) } else { (v, u) };
    (b * (b - 1) / 2 + a + 1) as i32
}

/// Builds the satisfiability instance for "some order-N graph defeats the
/// query". Edge variables come first; each placement of the multipartite
/// pattern contributes one all-negative clause, and each spine-sized subset
/// contributes trigger definitions plus a sequential at-most-(pages-1)
/// counter over its potential common complement-neighbors.
pub fn encode_arrowing_cnf(order: usize, q: &RamseyQuery) -> Result<CnfInstance> {
    if order > CNF_ORDER_CAP {
        return Err(Error::CapacityExceeded {
            requested: order,
            max: CNF_ORDER_CAP,
        });
    }
    if q.h1.part_count() < 2 {
        return Err(Error::invalid(
            "the multipartite side needs at least two parts",
        ));
    }
    let pairs = order * order.saturating_sub(1) / 2;
    let mut edge_var_map = Vec::with_capacity(pairs);
    for v in 1..order {
        for u in 0..v {
            edge_var_map.push(((u, v), edge_var(u, v)));
        }
    }

    let mut clauses = Vec::new();
    each_placement(order, q.h1.parts(), &mut |parts| {
        let mut clause = Vec::new();
        for i in 0..parts.len() {
            for j in i + 1..parts.len() {
                for &a in &parts[i] {
                    for &b in &parts[j] {
                        clause.push(-edge_var(a, b));
                    }
                }
            }
        }
        clauses.push(clause);
    });

    let k = q.h2.spine();
    let c = q.h2.pages() - 1;
    let mut books = Vec::new();
    let mut next_var = (pairs + 1) as i32;
    if k <= order {
        let m = order - k;
        if c < m {
            each_subset(order, k, &mut |subset| {
                let mut spine_lits = Vec::new();
                for (i, &u) in subset.iter().enumerate() {
                    for &v in &subset[i + 1..] {
                        spine_lits.push(edge_var(u, v));
                    }
                }
                let outside: Vec<usize> = (0..order).filter(|v| !subset.contains(v)).collect();
                if c == 0 {
                    // no counter needed: a complement clique may have no
                    // common complement-neighbor at all
                    for &w in &outside {
                        let mut clause: Vec<i32> = subset.iter().map(|&s| edge_var(w, s)).collect();
                        clause.extend_from_slice(&spine_lits);
                        clauses.push(clause);
                    }
                    return;
                }
                let t: Vec<i32> = (0..m).map(|i| next_var + i as i32).collect();
                next_var += m as i32;
                let s: Vec<Vec<i32>> = (0..m)
                    .map(|_| {
                        let row = (0..c).map(|j| next_var + j as i32).collect();
                        next_var += c as i32;
                        row
                    })
                    .collect();
                for (i, &w) in outside.iter().enumerate() {
                    let mut clause = vec![t[i]];
                    clause.extend(subset.iter().map(|&x| edge_var(w, x)));
                    clause.extend_from_slice(&spine_lits);
                    clauses.push(clause);
                }
                clauses.push(vec![-t[0], s[0][0]]);
                for &reg in &s[0][1..] {
                    clauses.push(vec![-reg]);
                }
                for i in 1..m {
                    clauses.push(vec![-t[i], s[i][0]]);
                    for (&prev, &cur) in s[i - 1].iter().zip(&s[i]) {
                        clauses.push(vec![-prev, cur]);
                    }
                    for j in 1..c {
                        clauses.push(vec![-t[i], -s[i - 1][j - 1], s[i][j]]);
                    }
                    clauses.push(vec![-t[i], -s[i - 1][c - 1]]);
                }
                books.push(BookGroup {
                    subset: subset.to_vec(),
                    triggers: outside.iter().copied().zip(t).collect(),
                    counters: s,
                    bound: c,
                });
            });
        }
    }

    Ok(CnfInstance {
        variable_count: (next_var - 1) as usize,
        clauses,
        edge_var_map,
        order,
        books,
    })
}

/// Every placement of parts of the given sizes on 0..order: disjoint sets,
/// each listed ascending, and equal-size parts ordered by first vertex so
/// interchangeable placements appear once.
fn each_placement(order: usize, sizes: &[usize], f: &mut dyn FnMut(&[Vec<usize>])) {
    if sizes.iter().sum::<usize>() > order {
        return;
    }
    let mut parts = vec![Vec::new(); sizes.len()];
    let mut used = vec![false; order];
    fn fill(
        order: usize,
        sizes: &[usize],
        pi: usize,
        parts: &mut Vec<Vec<usize>>,
        used: &mut Vec<bool>,
        f: &mut dyn FnMut(&[Vec<usize>]),
    ) {
        if pi == sizes.len() {
            f(parts);
            return;
        }
        let first = if pi > 0 && sizes[pi] == sizes[pi - 1] {
            parts[pi - 1][0] + 1
        } else {
            0
        };
        pick(order, sizes, pi, 0, first, parts, used, f);
    }
    #[allow(clippy::too_many_arguments)]
    fn pick(
        order: usize,
        sizes: &[usize],
        pi: usize,
        pos: usize,
        from: usize,
        parts: &mut Vec<Vec<usize>>,
        used: &mut Vec<bool>,
        f: &mut dyn FnMut(&[Vec<usize>]),
    ) {
        if pos == sizes[pi] {
            fill(order, sizes, pi + 1, parts, used, f);
            return;
        }
        for v in from..order {
            if used[v] {
                continue;
            }
            used[v] = true;
            parts[pi].push(v);
            pick(order, sizes, pi, pos + 1, v + 1, parts, used, f);
            parts[pi].pop();
            used[v] = false;
        }
    }
    fill(order, sizes, 0, &mut parts, &mut used, f);
}

fn each_subset(order: usize, size: usize, f: &mut dyn FnMut(&[usize])) {
    fn rec(
        order: usize,
        size: usize,
        from: usize,
        acc: &mut Vec<usize>,
        f: &mut dyn FnMut(&[usize]),
    ) {
        if acc.len() == size {
            f(acc);
            return;
        }
        for v in from..order {
            acc.push(v);
            rec(order, size, v + 1, acc, f);
            acc.pop();
        }
    }
    rec(order, size, 0, &mut Vec::new(), f);
}

/// Evaluates the instance under the assignment the graph induces: edge
/// variables from adjacency, triggers from the condition they stand for, and
/// counters as exact prefix counts. True exactly when the graph avoids the
/// pattern and its complement avoids the book.
pub fn check_assignment(inst: &CnfInstance, g: &Graph) -> Result<bool> {
    if g.order() != inst.order {
        return Err(Error::invalid(format!(
            "graph order {} does not match instance order {}",
            g.order(),
            inst.order
        )));
    }
    let mut assign = vec![false; inst.variable_count + 1];
    for &((u, v), var) in &inst.edge_var_map {
        assign[var as usize] = g.has_edge(u, v);
    }
    for group in &inst.books {
        // the book lives in the complement, so spine pairs and page
        // attachments must all be non-edges of g
        let spine_clique = group
            .subset
            .iter()
            .enumerate()
            .all(|(i, &u)| group.subset[i + 1..].iter().all(|&v| !g.has_edge(u, v)));
        let mut seen = 0usize;
        for (i, &(w, tvar)) in group.triggers.iter().enumerate() {
            let common = spine_clique && group.subset.iter().all(|&s| !g.has_edge(w, s));
            assign[tvar as usize] = common;
            seen += usize::from(common);
            debug_assert_eq!(group.counters[i].len(), group.bound);
            for (j, &svar) in group.counters[i].iter().enumerate() {
                assign[svar as usize] = seen > j;
            }
        }
    }
    Ok(inst.clauses.iter().all(|clause| {
        clause
            .iter()
            .any(|&lit| (lit > 0) == assign[lit.unsigned_abs() as usize])
    }))
}

/// DIMACS with one comment line per edge variable, so a satisfying model can
/// be read back as a graph.
pub fn write_dimacs<W: std::io::Write>(inst: &CnfInstance, out: &mut W) -> std::io::Result<()> {
    for &((u, v), var) in &inst.edge_var_map {
        writeln!(out, "c edge {u} {v} var {var}")?;
    }
    writeln!(out, "p cnf {} {}", inst.variable_count, inst.clauses.len())?;
    for clause in &inst.clauses {
        for lit in clause {
            write!(out, "{lit} ")?;
        }
        writeln!(out, "0")?;
    }
    Ok(())
}
