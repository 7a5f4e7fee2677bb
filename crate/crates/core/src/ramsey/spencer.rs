//! Independent sets in `t`-uniform hypergraphs by random sampling and
//! alteration.

use rand::Rng;

use super::bounds::{meets_spencer, spencer_sparse};
use super::RamseyError;
use crate::generators::rng::derive_rng;
use crate::hypergraph::Hypergraph;

pub const DEFAULT_MAX_TRIALS: u64 = 10_000;

/// Removes the highest-index vertex of every edge still inside `keep`.
fn break_edges(h: &Hypergraph, keep: &mut [bool]) {
    for e in &h.edges {
        if e.iter().all(|&v| keep[v]) {
            keep[*e.last().expect("nonempty edge")] = false;
        }
    }
}

fn collect(keep: &[bool]) -> Vec<usize> {
    (0..keep.len()).filter(|&v| keep[v]).collect()
}

/// Deletes a vertex of maximum live degree until no edge survives.
fn max_degree_deletion(h: &Hypergraph) -> Vec<usize> {
    let n = h.n;
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (k, e) in h.edges.iter().enumerate() {
        for &v in e {
            incident[v].push(k);
        }
    }
    let mut edge_alive = vec![true; h.m()];
    let mut deg: Vec<usize> = incident.iter().map(Vec::len).collect();
    let mut keep = vec![true; n];
    loop {
        let (v, d) = (0..n)
            .filter(|&v| keep[v])
            .map(|v| (v, deg[v]))
            .max_by_key(|&(v, d)| (d, std::cmp::Reverse(v)))
            .unwrap_or((0, 0));
        if d == 0 {
            break;
        }
        keep[v] = false;
        for &k in &incident[v] {
            if edge_alive[k] {
                edge_alive[k] = false;
                for &u in &h.edges[k] {
                    deg[u] -= 1;
                }
            }
        }
    }
    collect(&keep)
}

/// An independent set meeting the guarantee for `t`-uniform hypergraphs
/// with `m` edges: all vertices when `m = 0`, more than `n/2` when
/// `m < n/t`, and otherwise at least
/// `((t-1)^(t-1) n^t / (t^t m))^(1/(t-1))`.
///
/// A deterministic max-degree deletion is tried first; if it falls short,
/// seeded trials keep each vertex with probability `(n/(t m))^(1/(t-1))` and
/// break the surviving edges.
pub fn spencer_is(h: &Hypergraph, seed: u64, max_trials: u64) -> Result<Vec<usize>, RamseyError> {
    let (n, m, t) = (h.n, h.m(), h.t);
    if m == 0 {
        return Ok((0..n).collect());
    }
    if spencer_sparse(n, m, t) {
        let mut keep = vec![true; n];
        break_edges(h, &mut keep);
        return Ok(collect(&keep));
    }
    let greedy = max_degree_deletion(h);
    if meets_spencer(greedy.len(), n, m, t) {
        return Ok(greedy);
    }
    let p = (n as f64 / (t as f64 * m as f64))
        .powf(1.0 / (t as f64 - 1.0))
        .min(1.0);
    for trial in 0..max_trials {
        let mut rng = derive_rng(seed, "spencer", trial);
        let mut keep: Vec<bool> = (0..n).map(|_| rng.gen_bool(p)).collect();
        break_edges(h, &mut keep);
        let s = collect(&keep);
        if meets_spencer(s.len(), n, m, t) {
            return Ok(s);
        }
    }
    Err(RamseyError::TrialsExhausted { trials: max_trials })
}
