//! Ramsey bounds for complete multipartite patterns versus books: formula
//! evaluation, witness certification, and exact values by exhaustive
//! isomorph-free search at small orders.

use serde::Serialize;

use crate::constructions::{block_witness_clique_count, BookPattern, MultipartitePattern};
use crate::enumerate::{enumerate_graphs, ENUMERATION_CAP};
use crate::error::{Error, Result};
use crate::freeness::{chromatic_info, find_book, find_multipartite, Embedding};
use crate::graph::Graph;

/// The pair of target graphs: does every large graph contain `h1`, or its
/// complement the book `h2`?
#[derive(Clone, Debug, Serialize)]
pub struct RamseyQuery {
    pub h1: MultipartitePattern,
    pub h2: BookPattern,
}

impl std::fmt::Display for RamseyQuery {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} vs {}", self.h1, self.h2)
    }
}

/// The outcome of checking one graph against a query. When both freeness
/// checks pass, the graph proves the Ramsey number exceeds its order.
#[derive(Clone, Debug, Serialize)]
pub struct WitnessCertificate {
    #[serde(rename = "graph6")]
    pub graph: Graph,
    pub order: usize,
    pub h1_free: bool,
    pub complement_book_free: bool,
    pub certified_lower: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub h1_violation: Option<Embedding>,
    /// A book found in the complement; vertex labels refer to the same
    /// vertex set as the graph itself.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub book_violation: Option<Embedding>,
}

/// Checks both freeness conditions and certifies `order + 1` as a strict
/// lower bound when they hold. Failure is recorded as data (the violating
/// placements), never as an error.
pub fn verify_witness(g: &Graph, q: &RamseyQuery) -> WitnessCertificate {
    let h1_violation = find_multipartite(g, &q.h1);
    let book_violation = find_book(&g.complement(), &q.h2);
    let h1_free = h1_violation.is_none();
    let complement_book_free = book_violation.is_none();
    let certified_lower = (h1_free && complement_book_free).then(|| g.order() + 1);
    WitnessCertificate {
        graph: g.clone(),
        order: g.order(),
        h1_free,
        complement_book_free,
        certified_lower,
        h1_violation,
        book_violation,
    }
}

/// A bound (or exact value) for a query, tagged with how it was obtained.
#[derive(Clone, Debug, Serialize)]
pub struct RamseyBound {
    pub query: RamseyQuery,
    pub lower: Option<usize>,
    pub upper: Option<usize>,
    pub method: String,
    #[serde(rename = "witness_ref", skip_serializing_if = "Option::is_none")]
    pub witness: Option<Graph>,
}

/// The classical lower bound (chi(h1) - 1)(n - 1) + s(h1), where s is the
/// minimum color-class size over optimal colorings and n is the order of the
/// (connected) second graph.
pub fn burr_lower(h1: &Graph, n: usize) -> Result<usize> {
    let info = chromatic_info(h1)?;
    if info.chi == 0 {
        return Err(Error::invalid("lower bound needs a nonempty first graph"));
    }
    if n < info.surplus {
        return Err(Error::invalid(format!(
            "bound applies for n >= surplus = {}, got n = {n}",
            info.surplus
        )));
    }
    Ok((info.chi - 1) * (n - 1) + info.surplus)
}

/// (p - 1)(n - 1) + 1: the complete graph versus tree/connected-graph value.
pub fn chvatal_value(p: usize, n: usize) -> usize {
    assert!(p >= 2 && n >= 1);
    (p - 1) * (n - 1) + 1
}

/// (p - 1)(floor((n-k-1)/a2) + k) a2 + 1: the strict lower bound certified
/// by the matching-block witness of `make_block_witness`.
pub fn block_witness_lower(p: usize, a2: usize, k: usize, n: usize) -> usize {
    assert!(p >= 2 && a2 >= 1 && k >= 1 && n >= k + 2);
    (p - 1) * block_witness_clique_count(a2, k, n) * a2 + 1
}

/// The upper-bound formula (p - 1)(n - 1) + k(p - 1)(a2 - 1) + 1 together
/// with whether a2 divides n - 1 - k. Under divisibility the value equals
/// `block_witness_lower`, an algebraic identity this function asserts.
pub fn book_upper_value(p: usize, a2: usize, k: usize, n: usize) -> (usize, bool) {
    assert!(p >= 2 && a2 >= 1 && k >= 1 && n > k);
    let value = (p - 1) * (n - 1) + k * (p - 1) * (a2 - 1) + 1;
    let divisible = (n - 1 - k).is_multiple_of(a2);
    if divisible && n >= k + 2 {
        assert_eq!(value, block_witness_lower(p, a2, k, n));
    }
    (value, divisible)
}

/// Result of an exhaustive arrowing sweep at one order.
#[derive(Clone, Debug)]
pub enum ArrowsOutcome {
    /// Every graph of that order contains h1 or has h2 in its complement.
    Holds,
    /// The first counterexample in generation order.
    Fails(Box<WitnessCertificate>),
}

impl ArrowsOutcome {
    pub fn holds(&self) -> bool {
        matches!(self, ArrowsOutcome::Holds)
    }

    pub fn counterexample(&self) -> Option<&WitnessCertificate> {
        match self {
            ArrowsOutcome::Holds => None,
            ArrowsOutcome::Fails(c) => Some(c),
        }
    }
}

/// Exhaustively checks whether every graph on `order` vertices contains
/// `q.h1` or has `q.h2` in its complement.
pub fn arrows(order: usize, q: &RamseyQuery) -> Result<ArrowsOutcome> {
    for g in enumerate_graphs(order)? {
        if find_multipartite(&g, &q.h1).is_some() {
            continue;
        }
        if find_book(&g.complement(), &q.h2).is_some() {
            continue;
        }
        return Ok(ArrowsOutcome::Fails(Box::new(verify_witness(&g, q))));
    }
    Ok(ArrowsOutcome::Holds)
}

/// Smallest order at which arrowing holds, searched upward from 1. When the
/// value exceeds `n_max` the bound is left open above, with the best
/// counterexample found attached.
pub fn ramsey_exact(q: &RamseyQuery, n_max: usize) -> Result<RamseyBound> {
    if n_max > ENUMERATION_CAP {
        return Err(Error::CapacityExceeded {
            requested: n_max,
            max: ENUMERATION_CAP,
        });
    }
    let mut best = verify_witness(&Graph::empty(0).expect("order 0"), q);
    debug_assert_eq!(best.certified_lower, Some(1));
    for order in 1..=n_max {
        match arrows(order, q)? {
            ArrowsOutcome::Holds => {
                return Ok(RamseyBound {
                    query: q.clone(),
                    lower: Some(order),
                    upper: Some(order),
                    method: "exhaustive".into(),
                    witness: Some(best.graph),
                });
            }
            ArrowsOutcome::Fails(c) => best = *c,
        }
    }
    Ok(RamseyBound {
        query: q.clone(),
        lower: Some(n_max + 1),
        upper: None,
        method: format!("exhaustive, open above {n_max}"),
        witness: Some(best.graph),
    })
}
