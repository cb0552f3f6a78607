//! Independent oracles for the integration tests. Nothing here calls the
//! library's conflict or matching code; each oracle works from the raw edge
//! list and a textbook definition.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet, VecDeque};

use imatch::graph::Vertex;
use imatch::{EdgeId, EdgeSet, Graph};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn named(name: &str) -> Graph {
    imatch::generators::named_instance(name).unwrap()
}

fn edge_list(g: &Graph) -> Vec<(EdgeId, Vertex, Vertex)> {
    g.edges().collect()
}

/// `f` conflicts with `e`: same edge, a shared endpoint, or an edge of `g`
/// joining an endpoint of one to an endpoint of the other.
pub fn conflicts_by_definition(g: &Graph, e: EdgeId, f: EdgeId) -> bool {
    let pairs: HashSet<(Vertex, Vertex)> = g.edges().map(|(_, u, v)| (u, v)).collect();
    let joined = |a: Vertex, b: Vertex| a == b || pairs.contains(&(a.min(b), a.max(b)));
    let (a, b) = g.endpoints(e);
    let (c, d) = g.endpoints(f);
    e == f || joined(a, c) || joined(a, d) || joined(b, c) || joined(b, d)
}

/// Edges within distance 2 of `e` in the line graph, by breadth-first search.
pub fn conflict_set_by_line_graph(g: &Graph, e: EdgeId) -> BTreeSet<EdgeId> {
    let edges = edge_list(g);
    let line_neighbors = |x: EdgeId| -> Vec<EdgeId> {
        let (a, b) = g.endpoints(x);
        edges
            .iter()
            .filter(|&&(y, u, v)| y != x && (u == a || u == b || v == a || v == b))
            .map(|&(y, _, _)| y)
            .collect()
    };
    let mut dist = std::collections::HashMap::from([(e, 0)]);
    let mut queue = VecDeque::from([e]);
    while let Some(x) = queue.pop_front() {
        if dist[&x] == 2 {
            continue;
        }
        for y in line_neighbors(x) {
            if !dist.contains_key(&y) {
                dist.insert(y, dist[&x] + 1);
                queue.push_back(y);
            }
        }
    }
    dist.into_keys().collect()
}

/// The covered vertices induce a 1-regular subgraph whose edges are exactly `m`.
pub fn induced_by_definition(g: &Graph, m: &[EdgeId]) -> bool {
    let mut covered = HashSet::new();
    for &e in m {
        let (u, v) = g.endpoints(e);
        if !g.is_present(e) || !covered.insert(u) || !covered.insert(v) {
            return false;
        }
    }
    let induced: Vec<EdgeId> =
        g.edges().filter(|&(_, u, v)| covered.contains(&u) && covered.contains(&v)).map(|(id, _, _)| id).collect();
    induced.len() == m.len()
}

/// Maximum induced matching by enumerating every edge subset.
pub fn brute_force_optimum(g: &Graph) -> usize {
    let ids: Vec<EdgeId> = g.edge_ids().collect();
    assert!(ids.len() <= 16, "enumeration is exponential in m");
    let mut best = 0;
    for mask in 0u32..(1 << ids.len()) {
        let size = mask.count_ones() as usize;
        if size <= best {
            continue;
        }
        let subset: Vec<EdgeId> = (0..ids.len()).filter(|i| mask >> i & 1 == 1).map(|i| ids[i]).collect();
        if induced_by_definition(g, &subset) {
            best = size;
        }
    }
    best
}

pub fn set(g: &Graph, ids: &[usize]) -> EdgeSet {
    EdgeSet::from_ids(g.edge_capacity(), ids.iter().map(|&i| EdgeId(i)))
}

pub fn ids(s: &EdgeSet) -> Vec<usize> {
    s.iter().map(EdgeId::index).collect()
}

pub fn edge(g: &Graph, u: Vertex, v: Vertex) -> EdgeId {
    g.edge_between(u, v).unwrap_or_else(|| panic!("no edge {u}-{v}"))
}

fn simple(n: usize, raw: Vec<(usize, usize)>) -> Graph {
    let mut pairs: Vec<(usize, usize)> =
        raw.into_iter().filter(|&(u, v)| u != v).map(|(u, v)| (u.min(v), u.max(v))).collect();
    pairs.sort_unstable();
    pairs.dedup();
    Graph::build(n, &pairs).unwrap()
}

/// Arbitrary simple graph on at most `max_n` vertices with at most `max_m` raw pairs.
pub fn arb_graph(max_n: usize, max_m: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n)
        .prop_flat_map(move |n| proptest::collection::vec((0..n, 0..n), 0..=max_m).prop_map(move |raw| simple(n, raw)))
}

/// Random simple graph with maximum degree at most `d`: `tries` random pairs,
/// each kept when both endpoints still have room.
pub fn random_bounded_degree(n: usize, d: usize, tries: usize, rng: &mut ChaCha8Rng) -> Graph {
    let mut deg = vec![0; n];
    let mut pairs = BTreeSet::new();
    for _ in 0..tries {
        let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
        let key = (u.min(v), u.max(v));
        if u != v && deg[u] < d && deg[v] < d && pairs.insert(key) {
            deg[u] += 1;
            deg[v] += 1;
        }
    }
    Graph::build(n, &pairs.into_iter().collect::<Vec<_>>()).unwrap()
}

/// Random graph with at most `max_m` edges, for exhaustive cross-checks.
pub fn random_small(n: usize, max_m: usize, rng: &mut ChaCha8Rng) -> Graph {
    let tries = rng.gen_range(1..=max_m);
    let raw = (0..tries).map(|_| (rng.gen_range(0..n), rng.gen_range(0..n))).collect();
    simple(n, raw)
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `⌈num / den⌉` for positive `den`.
pub fn ceil_div(num: u64, den: u64) -> u64 {
    num.div_ceil(den)
}

pub fn of(g: &Graph, edges: &[EdgeId]) -> EdgeSet {
    EdgeSet::from_ids(g.edge_capacity(), edges.iter().copied())
}
