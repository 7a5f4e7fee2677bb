//! Greedy independent sets in graphs.

use crate::hypergraph::Graph;

/// Repeatedly takes a vertex of minimum remaining degree (lowest index on
/// ties) and deletes its closed neighbourhood. The result has at least
/// `n^2 / (2m + n)` vertices.
pub fn turan_is(g: &Graph) -> Vec<usize> {
    let n = g.n;
    let mut alive = vec![true; n];
    let mut deg: Vec<usize> = (0..n).map(|v| g.neighbors(v).len()).collect();
    let mut out = Vec::new();
    loop {
        let pick = (0..n).filter(|&v| alive[v]).min_by_key(|&v| (deg[v], v));
        let Some(v) = pick else { break };
        out.push(v);
        let mut removed = vec![v];
        removed.extend(g.neighbors(v).iter().copied().filter(|&u| alive[u]));
        for &u in &removed {
            alive[u] = false;
        }
        for &u in &removed {
            for &w in g.neighbors(u) {
                if alive[w] {
                    deg[w] -= 1;
                }
            }
        }
    }
    out.sort_unstable();
    out
}
