//! Seeded instance families and named fixtures.
//!
//! Randomness comes from ChaCha8 seeded with [`SeedableRng::seed_from_u64`].
//! Retry number `i` of a generator uses stream `i` of the same seed, so a
//! `(family, parameters, seed)` triple always yields the same graph on every
//! platform.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

pub const MAX_ATTEMPTS: usize = 1000;

fn rng_for(seed: u64, attempt: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(attempt as u64);
    rng
}

/// A reproducible description of one instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum GenSpec {
    Regular { n: usize, d: usize, seed: u64 },
    BipartiteRegular { n_side: usize, d: usize, seed: u64 },
    KDegenerate { n: usize, k: usize, d: usize, seed: u64 },
    Named { name: String },
}

impl GenSpec {
    pub fn family(&self) -> &'static str {
        match self {
            GenSpec::Regular { .. } => "regular",
            GenSpec::BipartiteRegular { .. } => "bipartite-regular",
            GenSpec::KDegenerate { .. } => "k-degenerate",
            GenSpec::Named { .. } => "named",
        }
    }

    pub fn generate(&self) -> Result<Graph> {
        match *self {
            GenSpec::Regular { n, d, seed } => gen_random_regular(n, d, seed),
            GenSpec::BipartiteRegular { n_side, d, seed } => gen_bipartite_regular(n_side, d, seed),
            GenSpec::KDegenerate { n, k, d, seed } => gen_k_degenerate(n, k, d, seed),
            GenSpec::Named { ref name } => named_instance(name),
        }
    }
}

/// Random `d`-regular simple graph on `n` vertices.
///
/// Pairs random half-edges one at a time, refusing pairs that would create a
/// loop or a repeated edge. If the remaining half-edges admit no acceptable
/// pair the attempt restarts on the next stream. Not exactly uniform.
pub fn gen_random_regular(n: usize, d: usize, seed: u64) -> Result<Graph> {
    if !(n * d).is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!("n·d must be even, got n = {n}, d = {d}")));
    }
    if d > 0 && d >= n {
        return Err(Error::InvalidParameter(format!("need d < n, got n = {n}, d = {d}")));
    }
    for attempt in 0..MAX_ATTEMPTS {
        let mut rng = rng_for(seed, attempt);
        if let Some(mut pairs) = try_pairing(n, d, &mut rng) {
            pairs.sort_unstable();
            return Graph::build(n, &pairs);
        }
    }
    Err(Error::AttemptsExhausted { attempts: MAX_ATTEMPTS })
}

fn try_pairing(n: usize, d: usize, rng: &mut ChaCha8Rng) -> Option<Vec<(Vertex, Vertex)>> {
    let mut stubs: Vec<Vertex> = (0..n).flat_map(|v| std::iter::repeat_n(v, d)).collect();
    let mut adjacent = vec![Vec::<Vertex>::new(); n];
    let mut pairs = Vec::with_capacity(n * d / 2);
    let ok = |adjacent: &[Vec<Vertex>], a: Vertex, b: Vertex| a != b && !adjacent[a].contains(&b);
    while !stubs.is_empty() {
        let mut misses = 0usize;
        loop {
            let i = rng.gen_range(0..stubs.len());
            let j = rng.gen_range(0..stubs.len());
            let (a, b) = (stubs[i], stubs[j]);
            if i != j && ok(&adjacent, a, b) {
                stubs.swap_remove(i.max(j));
                stubs.swap_remove(i.min(j));
                adjacent[a].push(b);
                adjacent[b].push(a);
                pairs.push((a.min(b), a.max(b)));
                break;
            }
            misses += 1;
            if misses > 64 * stubs.len() {
                let stuck =
                    stubs.iter().enumerate().all(|(i, &a)| stubs[i + 1..].iter().all(|&b| !ok(&adjacent, a, b)));
                if stuck {
                    return None;
                }
                misses = 0;
            }
        }
    }
    Some(pairs)
}

/// Random `d`-regular bipartite graph with sides `0..n_side` and `n_side..2·n_side`.
///
/// Built as a union of `d` perfect matchings. Each new matching is found by
/// augmenting paths in the complement of the matchings so far, with vertex
/// and neighbor orders shuffled; that complement is regular bipartite, so a
/// perfect matching always exists. Structurally valid, heuristically random.
pub fn gen_bipartite_regular(n_side: usize, d: usize, seed: u64) -> Result<Graph> {
    if d > n_side {
        return Err(Error::InvalidParameter(format!("need d ≤ n_side, got n_side = {n_side}, d = {d}")));
    }
    let mut rng = rng_for(seed, 0);
    let mut used = vec![vec![false; n_side]; n_side];
    let mut pairs = Vec::with_capacity(n_side * d);
    for _ in 0..d {
        let mut left: Vec<usize> = (0..n_side).collect();
        left.shuffle(&mut rng);
        let options: Vec<Vec<usize>> = (0..n_side)
            .map(|u| {
                let mut free: Vec<usize> = (0..n_side).filter(|&w| !used[u][w]).collect();
                free.shuffle(&mut rng);
                free
            })
            .collect();
        let mut owner: Vec<Option<usize>> = vec![None; n_side];
        for &u in &left {
            let mut seen = vec![false; n_side];
            if !augment(u, &options, &mut owner, &mut seen) {
                return Err(Error::Internal("complement of a regular bipartite graph lacks a perfect matching".into()));
            }
        }
        for (w, u) in owner.iter().enumerate() {
            let u = u.expect("matching is perfect");
            used[u][w] = true;
            pairs.push((u, n_side + w));
        }
    }
    pairs.sort_unstable();
    Graph::build(2 * n_side, &pairs)
}

fn augment(u: usize, options: &[Vec<usize>], owner: &mut [Option<usize>], seen: &mut [bool]) -> bool {
    for &w in &options[u] {
        if seen[w] {
            continue;
        }
        seen[w] = true;
        if owner[w].is_none_or(|v| augment(v, options, owner, seen)) {
            owner[w] = Some(u);
            return true;
        }
    }
    false
}

/// Random graph of degeneracy at most `k` and maximum degree at most `d`.
///
/// Vertex `i` joins `min(k, #eligible)` distinct earlier vertices picked
/// uniformly among those whose degree is still below `d`.
pub fn gen_k_degenerate(n: usize, k: usize, d: usize, seed: u64) -> Result<Graph> {
    if k == 0 || k >= d {
        return Err(Error::InvalidParameter(format!("need 1 ≤ k < d, got k = {k}, d = {d}")));
    }
    let mut rng = rng_for(seed, 0);
    let mut degree = vec![0usize; n];
    let mut pairs = Vec::new();
    for i in 1..n {
        let eligible: Vec<usize> = (0..i).filter(|&j| degree[j] < d).collect();
        let chosen: Vec<usize> = eligible.choose_multiple(&mut rng, k.min(eligible.len())).copied().collect();
        for j in chosen {
            degree[j] += 1;
            degree[i] += 1;
            pairs.push((j, i));
        }
    }
    Graph::build(n, &pairs)
}

fn parse_args(name: &str) -> Option<(&str, Vec<usize>)> {
    let name = name.trim();
    match name.split_once('(') {
        None => Some((name, Vec::new())),
        Some((head, rest)) => {
            let inner = rest.strip_suffix(')')?;
            let args = inner.split(',').map(|a| a.trim().parse().ok()).collect::<Option<Vec<usize>>>()?;
            Some((head.trim(), args))
        }
    }
}

/// Named fixtures. Vertex numbering:
///
/// * `path(n)`: vertices `0..n` in order, edges `(i, i+1)`.
/// * `cycle(n)`: `path(n)` plus `(0, n−1)`; needs `n ≥ 3`.
/// * `star(d)`: center `0`, leaves `1..=d`.
/// * `complete(n)`: all pairs of `0..n`.
/// * `complete_bipartite(a,b)`: sides `0..a` and `a..a+b`.
/// * `hypercube(k)`: vertices are `k`-bit words, edges join words differing in one bit.
/// * `petersen`: outer cycle `0..5`, spokes `(i, i+5)`, inner pentagram `(5+i, 5+(i+2) mod 5)`.
/// * `heawood`: cycle `0..14` plus chords `(i, i+5)` for even `i` (indices mod 14).
///
/// Edges are listed in lexicographic order of `(u, v)`, `u < v`.
pub fn named_instance(name: &str) -> Result<Graph> {
    let unknown = || Error::UnknownInstance(name.to_string());
    let (head, args) = parse_args(name).ok_or_else(unknown)?;
    let mut pairs: Vec<(Vertex, Vertex)> = Vec::new();
    let n = match (head, args.as_slice()) {
        ("path", &[n]) => {
            pairs.extend((1..n).map(|i| (i - 1, i)));
            n
        }
        ("cycle", &[n]) if n >= 3 => {
            pairs.extend((0..n).map(|i| (i, (i + 1) % n)));
            n
        }
        ("star", &[d]) => {
            pairs.extend((1..=d).map(|i| (0, i)));
            d + 1
        }
        ("complete", &[n]) => {
            pairs.extend((0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))));
            n
        }
        ("complete_bipartite", &[a, b]) => {
            pairs.extend((0..a).flat_map(|i| (a..a + b).map(move |j| (i, j))));
            a + b
        }
        ("hypercube", &[k]) if (1..=20).contains(&k) => {
            let n = 1usize << k;
            pairs.extend((0..n).flat_map(|v| (0..k).map(move |b| (v, v ^ (1 << b)))).filter(|&(u, v)| u < v));
            n
        }
        ("petersen", &[]) => {
            for i in 0..5 {
                pairs.push((i, (i + 1) % 5));
                pairs.push((i, i + 5));
                pairs.push((5 + i, 5 + (i + 2) % 5));
            }
            10
        }
        ("heawood", &[]) => {
            for i in 0..14 {
                pairs.push((i, (i + 1) % 14));
                if i % 2 == 0 {
                    pairs.push((i, (i + 5) % 14));
                }
            }
            14
        }
        _ => return Err(unknown()),
    };
    let mut pairs: Vec<_> = pairs.into_iter().map(|(u, v)| (u.min(v), u.max(v))).collect();
    pairs.sort_unstable();
    Graph::build(n, &pairs)
}
