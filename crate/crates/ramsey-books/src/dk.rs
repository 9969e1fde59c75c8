//! The degree-constrained extremal function: the largest d for which some
//! (n + d - 1)-vertex pattern-free graph has fewer than k vertices of degree
//! below d, plus the join assembly that turns its witness into a Ramsey
//! lower bound.

use serde::Serialize;

use crate::constructions::{make_witness_assembly, MultipartitePattern};
use crate::enumerate::{enumerate_graphs, ENUMERATION_CAP};
use crate::error::{Error, Result};
use crate::freeness::find_multipartite;
use crate::graph::Graph;
use crate::ramsey::{verify_witness, RamseyQuery, WitnessCertificate};

#[derive(Clone, Debug, Serialize)]
pub struct DkQuery {
    pub n: usize,
    pub k: usize,
    /// The forbidden subgraph; needs at least two parts so that freeness is
    /// ever nontrivial.
    pub pattern: MultipartitePattern,
}

#[derive(Clone, Debug, Serialize)]
pub struct DkResult {
    pub value: usize,
    #[serde(rename = "witness_graph6")]
    pub witness: Graph,
    /// Vertices of the witness with degree below the value.
    pub low_degree_count: usize,
}

/// A K_{1,a}-free graph has maximum degree a - 1, so no witness exists past
/// d = a - 1 once the witness order n + d - 1 must exceed k - 1. The cap is
/// independent of k.
pub fn dk_star_cap(_k: usize, a: usize) -> usize {
    assert!(a >= 1);
    a - 1
}

/// Largest d admitting an (n + d - 1)-vertex pattern-free graph with at most
/// k - 1 vertices of degree below d. Probes d upward; deleting a minimum
/// degree vertex turns a witness for d into one for d - 1, so the first
/// failing d ends the search. d = 0 always succeeds (the degree condition is
/// vacuous and the edgeless graph is pattern-free).
pub fn dk_value(q: &DkQuery) -> Result<DkResult> {
    if q.n < 1 || q.k < 1 {
        return Err(Error::invalid("n and k must be at least 1"));
    }
    if q.pattern.part_count() < 2 {
        return Err(Error::invalid(
            "the forbidden pattern needs at least two parts",
        ));
    }
    // the star cap applies once every witness order exceeds k - 1, which
    // n >= k guarantees; otherwise tiny all-low-degree witnesses may pass it
    let star_cap = match q.pattern.star_arm() {
        Some(a) if q.n >= q.k => Some(dk_star_cap(q.k, a)),
        _ => None,
    };
    let mut best: Option<DkResult> = None;
    let mut d = 0;
    loop {
        if let Some(cap) = star_cap {
            if d > cap {
                break;
            }
        }
        let order = q.n + d - 1;
        if order > ENUMERATION_CAP {
            return Err(Error::CapacityExceeded {
                requested: order,
                max: ENUMERATION_CAP,
            });
        }
        match find_witness(order, d, q) {
            Some(result) => best = Some(result),
            None => break,
        }
        d += 1;
    }
    Ok(best.expect("d = 0 admits the edgeless witness"))
}

fn find_witness(order: usize, d: usize, q: &DkQuery) -> Option<DkResult> {
    for g in enumerate_graphs(order).expect("order within capacity") {
        let low = (0..order).filter(|&v| g.degree(v) < d).count();
        if low > q.k - 1 {
            continue;
        }
        if find_multipartite(&g, &q.pattern).is_some() {
            continue;
        }
        return Some(DkResult {
            value: d,
            witness: g,
            low_degree_count: low,
        });
    }
    None
}

/// Joins the witness with p - 2 independent sets of n - 1 vertices and
/// certifies the result against the query. A passing certificate proves the
/// lower bound (p - 1)(n - 1) + d + 1; a failing check is returned as an
/// uncertified certificate, not an error.
pub fn assemble_lower_bound(
    p: usize,
    n: usize,
    dk: &DkResult,
    q: &RamseyQuery,
) -> Result<WitnessCertificate> {
    let g = make_witness_assembly(p, n, &dk.witness, dk.value)?;
    Ok(verify_witness(&g, q))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::BookPattern;
    use crate::freeness::is_c4_free;
    use crate::ramsey::ramsey_exact;

    fn pattern(parts: &[usize]) -> MultipartitePattern {
        MultipartitePattern::new(parts.iter().copied()).unwrap()
    }

    fn dk_query(n: usize, k: usize, parts: &[usize]) -> DkQuery {
        DkQuery {
            n,
            k,
            pattern: pattern(parts),
        }
    }

    fn reverifies(q: &DkQuery, r: &DkResult) -> bool {
        let order = q.n + r.value - 1;
        let low = (0..r.witness.order())
            .filter(|&v| r.witness.degree(v) < r.value)
            .count();
        r.witness.order() == order
            && low == r.low_degree_count
            && low < q.k
            && find_multipartite(&r.witness, &q.pattern).is_none()
    }

    #[test]
    fn four_cycle_value_at_n_six_is_two() {
        let q = dk_query(6, 1, &[2, 2]);
        let r = dk_value(&q).unwrap();
        assert_eq!(r.value, 2);
        assert_eq!(r.witness.order(), 7);
        assert_eq!(r.low_degree_count, 0);
        assert!(is_c4_free(&r.witness));
        assert!(r.witness.min_degree() >= 2);
        assert!(reverifies(&q, &r));
    }

    #[test]
    fn star_value_at_n_four_is_one_with_matching_witness() {
        let q = dk_query(4, 1, &[1, 2]);
        let r = dk_value(&q).unwrap();
        assert_eq!(r.value, 1);
        assert_eq!(r.witness.order(), 4);
        assert!((0..4).all(|v| r.witness.degree(v) == 1));
        assert!(reverifies(&q, &r));
    }

    #[test]
    fn star_value_at_n_three_is_zero() {
        let q = dk_query(3, 1, &[1, 2]);
        let r = dk_value(&q).unwrap();
        assert_eq!(r.value, 0);
        assert_eq!(r.witness.order(), 2);
        assert_eq!(r.witness.count_edges(), 0);
        assert!(reverifies(&q, &r));
    }

    #[test]
    fn star_cap_examples() {
        assert_eq!(dk_star_cap(2, 3), 2);
        assert_eq!(dk_star_cap(1, 1), 0);
        assert_eq!(dk_star_cap(3, 2), 1);
    }

    #[test]
    fn star_values_respect_the_cap() {
        for a in 1..=3 {
            for n in 2..=5 {
                for k in 1..=2 {
                    let q = dk_query(n, k, &[1, a]);
                    let r = dk_value(&q).unwrap();
                    assert!(r.value <= dk_star_cap(k, a), "n={n} k={k} a={a}");
                    assert!(reverifies(&q, &r));
                }
            }
        }
    }

    #[test]
    fn value_is_monotone_in_k() {
        for parts in [&[1usize, 2][..], &[2, 2]] {
            for n in 2..=5 {
                for k in 1..=2 {
                    let lo = dk_value(&dk_query(n, k, parts)).unwrap().value;
                    let hi = dk_value(&dk_query(n, k + 1, parts)).unwrap().value;
                    assert!(lo <= hi, "n={n} k={k} parts={parts:?}");
                }
            }
        }
    }

    #[test]
    fn allowing_low_degree_vertices_uses_them() {
        // a matching on three vertices strands one isolated vertex, so the
        // value climbs only once k allows it
        assert_eq!(dk_value(&dk_query(3, 1, &[1, 2])).unwrap().value, 0);
        let q = dk_query(3, 2, &[1, 2]);
        let r = dk_value(&q).unwrap();
        assert_eq!(r.value, 1);
        assert_eq!(r.low_degree_count, 1);
        assert!(reverifies(&q, &r));
    }

    #[test]
    fn rejects_degenerate_queries() {
        assert!(dk_value(&dk_query(0, 1, &[1, 2])).is_err());
        assert!(dk_value(&dk_query(4, 0, &[1, 2])).is_err());
        assert!(dk_value(&DkQuery {
            n: 4,
            k: 1,
            pattern: pattern(&[3]),
        })
        .is_err());
    }

    #[test]
    fn reports_capacity_when_witness_order_is_too_large() {
        assert!(matches!(
            dk_value(&dk_query(12, 1, &[1, 2])),
            Err(Error::CapacityExceeded { .. })
        ));
    }

    #[test]
    fn assembly_certifies_parsons_style_bound() {
        let q = dk_query(6, 1, &[2, 2]);
        let r = dk_value(&q).unwrap();
        let ramsey = RamseyQuery {
            h1: pattern(&[2, 2]),
            h2: BookPattern::new(1, 6).unwrap(),
        };
        let cert = assemble_lower_bound(2, 6, &r, &ramsey).unwrap();
        assert_eq!(cert.certified_lower, Some(8));
    }

    #[test]
    fn assembly_with_zero_value_witness_gives_bipartite_join() {
        let q = dk_query(3, 1, &[1, 1]);
        let r = dk_value(&q).unwrap();
        assert_eq!(r.value, 0);
        assert_eq!(r.witness.order(), 2);
        let ramsey = RamseyQuery {
            h1: pattern(&[1, 1, 1]),
            h2: BookPattern::new(1, 3).unwrap(),
        };
        let cert = assemble_lower_bound(3, 3, &r, &ramsey).unwrap();
        assert_eq!(cert.order, 4);
        assert_eq!(cert.certified_lower, Some(5));
    }

    #[test]
    fn assembly_matches_exhaustive_value_for_small_star_query() {
        let q = dk_query(4, 1, &[1, 2]);
        let r = dk_value(&q).unwrap();
        let ramsey = RamseyQuery {
            h1: pattern(&[1, 2]),
            h2: BookPattern::new(1, 4).unwrap(),
        };
        let cert = assemble_lower_bound(2, 4, &r, &ramsey).unwrap();
        assert_eq!(cert.certified_lower, Some(5));
        let exact = ramsey_exact(&ramsey, 8).unwrap();
        assert_eq!(exact.upper, Some(5));
    }
}
