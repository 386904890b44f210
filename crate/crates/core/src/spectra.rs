//! Element-order spectra, their divisibility maxima, and prime graphs.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::groups::Group;
use crate::util;

/// Prime divisors of `n`, ascending.
pub fn prime_divisors(n: u64) -> Result<BTreeSet<u64>> {
    if n == 0 {
        return Err(Error::Input("0 has no prime divisor set".into()));
    }
    Ok(util::prime_factors(n).into_iter().collect())
}

/// The set of element orders of a group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Spectrum {
    orders: BTreeSet<u64>,
    source_order: u64,
}

impl Spectrum {
    /// Wraps an order set, checking that it contains 1 and is closed under
    /// taking divisors.
    pub fn new(orders: BTreeSet<u64>, source_order: u64) -> Result<Self> {
        if !orders.contains(&1) {
            return Err(Error::Input("a spectrum always contains 1".into()));
        }
        for &n in &orders {
            if let Some(d) = util::divisors(n).into_iter().find(|d| !orders.contains(d)) {
                return Err(Error::Input(format!(
                    "{n} is present but its divisor {d} is not"
                )));
            }
        }
        Ok(Spectrum {
            orders,
            source_order,
        })
    }

    pub fn orders(&self) -> &BTreeSet<u64> {
        &self.orders
    }

    pub fn source_order(&self) -> u64 {
        self.source_order
    }

    pub fn contains(&self, n: u64) -> bool {
        self.orders.contains(&n)
    }
}

/// Enumerates the group and collects its element orders.
pub fn spectrum(g: &Group) -> Result<Spectrum> {
    let orders: BTreeSet<u64> = g.element_orders()?.iter().copied().collect();
    let spectrum = Spectrum::new(orders, g.order()?)?;
    debug_assert!(spectrum
        .orders
        .iter()
        .all(|o| spectrum.source_order % o == 0));
    Ok(spectrum)
}

/// Members of a spectrum that are maximal under divisibility.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MuSet {
    maxima: BTreeSet<u64>,
}

impl MuSet {
    pub fn maxima(&self) -> &BTreeSet<u64> {
        &self.maxima
    }

    pub fn is_antichain(&self) -> bool {
        self.maxima
            .iter()
            .all(|&a| self.maxima.iter().all(|&b| a == b || b % a != 0))
    }

    pub fn covers(&self, s: &Spectrum) -> bool {
        s.orders
            .iter()
            .all(|&n| self.maxima.iter().any(|&m| m % n == 0))
    }
}

pub fn mu(s: &Spectrum) -> MuSet {
    let maxima = s
        .orders
        .iter()
        .copied()
        .filter(|&a| !s.orders.iter().any(|&b| b != a && b % a == 0))
        .collect();
    let out = MuSet { maxima };
    debug_assert!(out.is_antichain() && out.covers(s));
    out
}

/// Labeled graph on primes. Edges are stored as `(p, q)` with `p < q`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct PrimeGraph {
    vertices: BTreeSet<u64>,
    edges: BTreeSet<(u64, u64)>,
}

impl PrimeGraph {
    pub fn new(
        vertices: impl IntoIterator<Item = u64>,
        edges: impl IntoIterator<Item = (u64, u64)>,
    ) -> Result<Self> {
        let vertices: BTreeSet<u64> = vertices.into_iter().collect();
        let mut out = BTreeSet::new();
        for (p, q) in edges {
            if p == q {
                return Err(Error::Input(format!("self-loop at {p}")));
            }
            if !vertices.contains(&p) || !vertices.contains(&q) {
                return Err(Error::Input(format!("edge {p}-{q} leaves the vertex set")));
            }
            out.insert((p.min(q), p.max(q)));
        }
        Ok(PrimeGraph {
            vertices,
            edges: out,
        })
    }

    pub fn vertices(&self) -> &BTreeSet<u64> {
        &self.vertices
    }

    pub fn edges(&self) -> &BTreeSet<(u64, u64)> {
        &self.edges
    }

    pub fn adjacent(&self, p: u64, q: u64) -> bool {
        self.edges.contains(&(p.min(q), p.max(q)))
    }

    /// Number of connected components, `t(G)`.
    pub fn component_count(&self) -> usize {
        components(self).len()
    }
}

/// Vertices are the primes dividing some order; `{p, q}` is an edge
/// exactly when `p·q` is an element order.
pub fn prime_graph(s: &Spectrum) -> PrimeGraph {
    let mut vertices = BTreeSet::new();
    for &n in &s.orders {
        vertices.extend(util::prime_factors(n));
    }
    let mut edges = BTreeSet::new();
    for &p in &vertices {
        for &q in vertices.range(p + 1..) {
            if s.contains(p * q) {
                edges.insert((p, q));
            }
        }
    }
    PrimeGraph { vertices, edges }
}

/// Connected components, each ascending, ordered by least member.
pub fn components(g: &PrimeGraph) -> Vec<BTreeSet<u64>> {
    let index: BTreeMap<u64, usize> = g
        .vertices
        .iter()
        .enumerate()
        .map(|(i, &v)| (v, i))
        .collect();
    let mut parent: Vec<usize> = (0..index.len()).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for (p, q) in &g.edges {
        let (a, b) = (find(&mut parent, index[p]), find(&mut parent, index[q]));
        if a != b {
            parent[a.max(b)] = a.min(b);
        }
    }
    let mut parts: BTreeMap<usize, BTreeSet<u64>> = BTreeMap::new();
    for (&v, &i) in &index {
        let root = find(&mut parent, i);
        parts.entry(root).or_default().insert(v);
    }
    let mut out: Vec<BTreeSet<u64>> = parts.into_values().collect();
    out.sort_by_key(|part| part.first().copied());
    out
}

/// Labeled equality: same vertices and same edges.
pub fn graphs_equal(a: &PrimeGraph, b: &PrimeGraph) -> bool {
    a.vertices == b.vertices && a.edges == b.edges
}
