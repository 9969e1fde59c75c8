//! Parameterized graph families: books, complete multipartite graphs and
//! their Turán specializations, the clique-blocks lower-bound witness, the
//! join assembly over an extremal inner graph, and polarity graphs of
//! projective planes over prime fields.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{disjoint_union, join, Graph};

/// Complete multipartite shape K_p(a_1, ..., a_p). Part sizes are kept in
/// nondecreasing order; the shape is unordered so sorting loses nothing.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct MultipartitePattern {
    parts: Vec<usize>,
}

impl MultipartitePattern {
    pub fn new<I: IntoIterator<Item = usize>>(parts: I) -> Result<MultipartitePattern> {
        let mut parts: Vec<usize> = parts.into_iter().collect();
        if parts.is_empty() {
            return Err(Error::invalid(
                "multipartite pattern needs at least one part",
            ));
        }
        if parts.contains(&0) {
            return Err(Error::invalid("multipartite part sizes must be positive"));
        }
        parts.sort_unstable();
        Ok(MultipartitePattern { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn part_count(&self) -> usize {
        self.parts.len()
    }

    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    /// For K(1, a) returns a; stars admit a sharper extremal-degree cutoff.
    pub fn star_arm(&self) -> Option<usize> {
        match self.parts[..] {
            [1, a] => Some(a),
            _ => None,
        }
    }
}

impl std::fmt::Display for MultipartitePattern {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "K(")?;
        for (i, a) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")
    }
}

impl std::fmt::Debug for MultipartitePattern {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{self}")
    }
}

/// Book B_(k,n): an n-vertex graph made of n-k triangles-over-a-spine, i.e.
/// a k-clique spine joined to n-k page vertices.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct BookPattern {
    k: usize,
    n: usize,
}

impl BookPattern {
    pub fn new(k: usize, n: usize) -> Result<BookPattern> {
        if k < 1 {
            return Err(Error::invalid("book spine size must be at least 1"));
        }
        if n <= k {
            return Err(Error::invalid("book needs more vertices than its spine"));
        }
        Ok(BookPattern { k, n })
    }

    pub fn spine(&self) -> usize {
        self.k
    }

    pub fn total(&self) -> usize {
        self.n
    }

    pub fn pages(&self) -> usize {
        self.n - self.k
    }
}

impl std::fmt::Display for BookPattern {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "B({},{})", self.k, self.n)
    }
}

impl std::fmt::Debug for BookPattern {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{self}")
    }
}

/// Book graph: vertices 0..k-1 form the spine clique, k..n-1 the pages.
pub fn make_book(b: &BookPattern) -> Result<Graph> {
    let k = b.spine();
    // with u < v, an edge exists exactly when the lower endpoint is spine
    Graph::from_fn(b.total(), |u, _| u < k)
}

/// Complete multipartite graph with parts laid out as consecutive index
/// blocks in nondecreasing size order.
pub fn make_multipartite(m: &MultipartitePattern) -> Result<Graph> {
    let mut part_of = Vec::with_capacity(m.total());
    for (i, &a) in m.parts().iter().enumerate() {
        part_of.extend(std::iter::repeat_n(i, a));
    }
    Graph::from_fn(m.total(), |u, v| part_of[u] != part_of[v])
}

/// Turán graph T(order, classes): balanced complete multipartite.
pub fn make_turan(order: usize, classes: usize) -> Result<Graph> {
    if classes == 0 {
        return Err(Error::invalid("Turán graph needs at least one class"));
    }
    if order == 0 {
        return Graph::empty(0);
    }
    let base = order / classes;
    let rem = order % classes;
    let mut sizes = Vec::new();
    sizes.extend(std::iter::repeat_n(base, classes - rem));
    sizes.extend(std::iter::repeat_n(base + 1, rem));
    sizes.retain(|&s| s > 0);
    make_multipartite(&MultipartitePattern::new(sizes)?)
}

/// Number of disjoint clique blocks in each layer of the blocks witness.
pub fn block_witness_clique_count(a2: usize, k: usize, n: usize) -> usize {
    (n - k - 1) / a2 + k
}

/// Lower-bound witness for K_p(1,a2,...,a2) versus B_(k,n): the join of
/// p-1 copies of floor((n-k-1)/a2)+k disjoint cliques K_a2. Every layer is
/// too shallow to host the multipartite pattern with its singleton part,
/// and every k-clique of the complement has at most n-k-1 common
/// complement-neighbors.
pub fn make_block_witness(p: usize, a2: usize, k: usize, n: usize) -> Result<Graph> {
    if p < 2 {
        return Err(Error::invalid("blocks witness needs p >= 2"));
    }
    if a2 < 1 || k < 1 {
        return Err(Error::invalid("blocks witness needs a2 >= 1 and k >= 1"));
    }
    if n < k + 2 {
        return Err(Error::invalid("blocks witness needs n >= k + 2"));
    }
    let blocks = block_witness_clique_count(a2, k, n);
    let layer = disjoint_union(&vec![Graph::complete(a2)?; blocks])?;
    let mut g = layer.clone();
    for _ in 2..p {
        g = join(&g, &layer)?;
    }
    Ok(g)
}

/// Joins an extremal inner graph on n+d-1 vertices with p-2 independent
/// sets of size n-1, the shape that certifies (p-1)(n-1)+d as a Ramsey
/// lower bound once both freeness checks pass.
pub fn make_witness_assembly(p: usize, n: usize, inner: &Graph, d: usize) -> Result<Graph> {
    if p < 2 || n < 1 {
        return Err(Error::invalid("witness assembly needs p >= 2 and n >= 1"));
    }
    if inner.order() + 1 != n + d {
        return Err(Error::invalid(format!(
            "inner graph has order {}, expected n + d - 1 = {}",
            inner.order(),
            n + d - 1
        )));
    }
    let mut g = inner.clone();
    for _ in 2..p {
        g = join(&g, &Graph::empty(n - 1)?)?;
    }
    Ok(g)
}

/// Polarity graph of the projective plane over GF(q), q prime: vertices are
/// the q^2+q+1 projective points with first nonzero coordinate normalized
/// to 1, in lexicographic order; u ~ v iff their dot product vanishes mod q.
pub fn make_er_polarity(q: usize) -> Result<Graph> {
    if q < 2 || !is_prime(q) {
        return Err(Error::UnsupportedParameter(format!(
            "polarity graph requires a prime modulus, got {q}"
        )));
    }
    let order = q * q + q + 1;
    if order > crate::graph::MAX_ORDER {
        return Err(Error::CapacityExceeded {
            requested: order,
            max: crate::graph::MAX_ORDER,
        });
    }
    let mut points = Vec::with_capacity(order);
    points.push([0, 0, 1]);
    for z in 0..q {
        points.push([0, 1, z]);
    }
    for y in 0..q {
        for z in 0..q {
            points.push([1, y, z]);
        }
    }
    debug_assert!(points.windows(2).all(|w| w[0] < w[1]));
    Graph::from_fn(order, |u, v| {
        let (a, b) = (points[u], points[v]);
        (a[0] * b[0] + a[1] * b[1] + a[2] * b[2]) % q == 0
    })
}

/// Self-orthogonal vertices of the polarity graph construction; these are
/// exactly its minimum-degree vertices.
pub fn er_absolute_points(q: usize) -> Result<Vec<usize>> {
    make_er_polarity(q)?; // validate parameters the same way
    let mut points = Vec::new();
    points.push([0, 0, 1]);
    for z in 0..q {
        points.push([0, 1, z]);
    }
    for y in 0..q {
        for z in 0..q {
            points.push([1, y, z]);
        }
    }
    Ok(points
        .iter()
        .enumerate()
        .filter(|(_, p)| (p[0] * p[0] + p[1] * p[1] + p[2] * p[2]) % q == 0)
        .map(|(i, _)| i)
        .collect())
}

fn is_prime(n: usize) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}
