//! Hypergraphs on at most 64 vertices, complete **k**-uniform construction,
//! neighborhoods, and hyperedge counting inside a basis-state support.
//!
//! Vertices are 1-based. Vertex `i` is bit `i - 1` of a [`VertexSet`] and
//! likewise bit `i - 1` of a computational basis index `tau` encodes `tau_i`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::combinatorics::binom;
use crate::error::{Error, Result};

/// Largest vertex count a [`VertexSet`] can address.
pub const MAX_VERTICES: usize = 64;

/// Upper bound on the number of edges `complete_k_uniform` will materialize.
pub const MAX_MATERIALIZED_EDGES: usize = 1 << 24;

#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub fn singleton(vertex: usize) -> Self {
        assert!((1..=MAX_VERTICES).contains(&vertex), "vertex {vertex} out of range");
        VertexSet(1 << (vertex - 1))
    }

    /// Builds a set from 1-based vertices, rejecting repeats and anything
    /// outside `1..=n`.
    pub fn from_vertices(vertices: &[usize], n: usize) -> Result<Self> {
        let mut bits = 0u64;
        for &v in vertices {
            if v == 0 || v > n || v > MAX_VERTICES {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            let bit = 1u64 << (v - 1);
            if bits & bit != 0 {
                return Err(Error::InvalidHypergraph(format!("vertex {v} repeated in {vertices:?}")));
            }
            bits |= bit;
        }
        Ok(VertexSet(bits))
    }

    pub fn contains(self, vertex: usize) -> bool {
        (1..=MAX_VERTICES).contains(&vertex) && self.0 >> (vertex - 1) & 1 == 1
    }

    pub fn with(self, vertex: usize) -> Self {
        VertexSet(self.0 | VertexSet::singleton(vertex).0)
    }

    pub fn without(self, vertex: usize) -> Self {
        VertexSet(self.0 & !VertexSet::singleton(vertex).0)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset_of(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Largest member, or 0 for the empty set.
    pub fn max_vertex(self) -> usize {
        64 - self.0.leading_zeros() as usize
    }

    /// Members in ascending order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                return None;
            }
            let v = rest.trailing_zeros() as usize + 1;
            rest &= rest - 1;
            Some(v)
        })
    }

    /// Image under a vertex relabeling: vertex `i` goes to `perm[i - 1]`.
    pub fn relabel(self, perm: &[usize]) -> VertexSet {
        self.iter().fold(VertexSet::EMPTY, |acc, v| acc.with(perm[v - 1]))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

/// Support `J(tau)` of a basis index: the vertices whose bit is 1.
pub fn support(tau: u64, n: usize) -> VertexSet {
    assert!(n <= MAX_VERTICES, "n = {n} exceeds {MAX_VERTICES}");
    assert!(n == 64 || tau >> n == 0, "basis index {tau:#b} has bits beyond n = {n}");
    VertexSet(tau)
}

/// The tuple `(k_1 < ... < k_p)` of edge sizes of a complete hypergraph.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct UniformityProfile {
    ks: Vec<usize>,
}

impl UniformityProfile {
    pub fn new(ks: Vec<usize>) -> Result<Self> {
        if ks.is_empty() {
            return Err(Error::InvalidProfile("profile is empty".into()));
        }
        if ks[0] < 2 {
            return Err(Error::InvalidProfile(format!("k = {} is below 2", ks[0])));
        }
        if ks.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidProfile(format!("{ks:?} is not strictly increasing")));
        }
        Ok(UniformityProfile { ks })
    }

    pub fn single(k: usize) -> Result<Self> {
        Self::new(vec![k])
    }

    pub fn ks(&self) -> &[usize] {
        &self.ks
    }

    /// The single uniformity, if the profile has exactly one.
    pub fn as_single(&self) -> Option<usize> {
        match self.ks.as_slice() {
            [k] => Some(*k),
            _ => None,
        }
    }

    pub fn max_k(&self) -> usize {
        *self.ks.last().expect("profile is never empty")
    }

    /// Checks `k_p <= n`.
    pub fn validate_for(&self, n: usize) -> Result<()> {
        if self.max_k() > n {
            return Err(Error::InvalidProfile(format!(
                "k = {} exceeds the vertex count n = {n}",
                self.max_k()
            )));
        }
        Ok(())
    }

    /// `n_k(tau)` for a support of size `weight`: `sum_i C(weight, k_i)`.
    pub fn edge_count_for_weight(&self, weight: usize) -> num_bigint::BigInt {
        self.ks.iter().map(|&k| binom(weight as u64, k as i64)).sum()
    }
}

impl TryFrom<Vec<usize>> for UniformityProfile {
    type Error = Error;
    fn try_from(ks: Vec<usize>) -> Result<Self> {
        Self::new(ks)
    }
}

impl From<UniformityProfile> for Vec<usize> {
    fn from(p: UniformityProfile) -> Self {
        p.ks
    }
}

impl FromStr for UniformityProfile {
    type Err = Error;

    /// Comma-separated list, e.g. `"2,3"`.
    fn from_str(s: &str) -> Result<Self> {
        let ks = s
            .split(',')
            .map(|part| {
                part.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidProfile(format!("cannot parse {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(ks)
    }
}

impl fmt::Display for UniformityProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, k) in self.ks.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{k}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<VertexSet>,
}

impl Hypergraph {
    /// Edges are stored sorted; every edge must have at least two vertices
    /// inside `1..=n`, and no edge may repeat.
    pub fn new(n: usize, mut edges: Vec<VertexSet>) -> Result<Self> {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::InvalidHypergraph(format!(
                "vertex count {n} is outside 1..={MAX_VERTICES}"
            )));
        }
        for &e in &edges {
            if e.max_vertex() > n {
                return Err(Error::VertexOutOfRange { vertex: e.max_vertex(), n });
            }
            if e.len() < 2 {
                return Err(Error::InvalidHypergraph(format!("edge {e} has fewer than 2 vertices")));
            }
        }
        edges.sort_unstable();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidHypergraph(format!("edge {} appears twice", w[0])));
        }
        Ok(Hypergraph { n, edges })
    }

    pub fn empty(n: usize) -> Result<Self> {
        Self::new(n, Vec::new())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[VertexSet] {
        &self.edges
    }

    /// All vertex subsets whose size is one of the profile's uniformities.
    pub fn complete_k_uniform(n: usize, profile: &UniformityProfile) -> Result<Self> {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::InvalidHypergraph(format!(
                "vertex count {n} is outside 1..={MAX_VERTICES}"
            )));
        }
        profile.validate_for(n)?;
        let total: num_bigint::BigInt = profile.ks().iter().map(|&k| binom(n as u64, k as i64)).sum();
        if total > num_bigint::BigInt::from(MAX_MATERIALIZED_EDGES) {
            return Err(Error::OutOfRange(format!(
                "complete hypergraph on {n} vertices has {total} edges, more than {MAX_MATERIALIZED_EDGES}"
            )));
        }
        let mut edges = Vec::new();
        for &k in profile.ks() {
            edges.extend(k_subsets(n, k).map(VertexSet));
        }
        Self::new(n, edges)
    }

    /// Reduced neighborhood `N(l) = { e \ {l} : l in e }`. Elements may be
    /// singletons; in the stabilizer those act as a plain Z.
    pub fn neighborhood(&self, l: usize) -> Result<Vec<VertexSet>> {
        self.check_vertex(l)?;
        Ok(self
            .edges
            .iter()
            .filter(|e| e.contains(l))
            .map(|e| e.without(l))
            .collect())
    }

    /// `n_E(tau)`: how many edges lie inside the support of `tau`.
    pub fn edge_count_in_support(&self, tau: u64) -> usize {
        let j = support(tau, self.n);
        self.edges.iter().filter(|e| e.is_subset_of(j)).count()
    }

    pub fn relabel(&self, perm: &[usize]) -> Result<Hypergraph> {
        let mut seen = vec![false; self.n];
        if perm.len() != self.n
            || !perm.iter().all(|&p| (1..=self.n).contains(&p) && !std::mem::replace(&mut seen[p - 1], true))
        {
            return Err(Error::OutOfRange(format!("{perm:?} is not a permutation of 1..={}", self.n)));
        }
        Hypergraph::new(self.n, self.edges.iter().map(|e| e.relabel(perm)).collect())
    }

    pub(crate) fn check_vertex(&self, l: usize) -> Result<()> {
        if l == 0 || l > self.n {
            Err(Error::VertexOutOfRange { vertex: l, n: self.n })
        } else {
            Ok(())
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: HypergraphFile = serde_json::from_str(text)?;
        file.try_into()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&HypergraphFile::from(self)).expect("plain data always serializes")
    }
}

/// On-disk form: `{"n": 3, "edges": [[1,2,3]]}` with 1-based vertices.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HypergraphFile {
    pub n: usize,
    pub edges: Vec<Vec<usize>>,
}

impl TryFrom<HypergraphFile> for Hypergraph {
    type Error = Error;
    fn try_from(file: HypergraphFile) -> Result<Self> {
        let edges = file
            .edges
            .iter()
            .map(|e| VertexSet::from_vertices(e, file.n))
            .collect::<Result<Vec<_>>>()?;
        Hypergraph::new(file.n, edges)
    }
}

impl From<&Hypergraph> for HypergraphFile {
    fn from(h: &Hypergraph) -> Self {
        HypergraphFile {
            n: h.n,
            edges: h.edges.iter().map(|e| e.iter().collect()).collect(),
        }
    }
}

/// All `k`-element subsets of `n` bits in increasing numeric order (Gosper's hack).
pub(crate) fn k_subsets(n: usize, k: usize) -> impl Iterator<Item = u64> {
    let limit: u128 = 1u128 << n;
    let mut next: Option<u128> = if k <= n { Some((1u128 << k) - 1) } else { None };
    std::iter::from_fn(move || {
        let cur = next?;
        if cur >= limit {
            next = None;
            return None;
        }
        next = if cur == 0 {
            None
        } else {
            let c = cur & cur.wrapping_neg();
            let r = cur + c;
            Some((((r ^ cur) >> 2) / c) | r)
        };
        Some(cur as u64)
    })
}
