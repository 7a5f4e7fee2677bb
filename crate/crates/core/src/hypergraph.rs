//! Uniform hypergraphs and simple graphs on vertices `0..n`.

use std::collections::BTreeMap;

/// A `t`-uniform hypergraph. Edges are sorted vertex lists, kept sorted and
/// deduplicated; `witness_refs[e]` optionally names the witness entry that
/// produced edge `e`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypergraph {
    pub n: usize,
    pub t: usize,
    pub edges: Vec<Vec<usize>>,
    pub witness_refs: Vec<Option<usize>>,
}

impl Hypergraph {
    /// Panics if an edge has the wrong size, repeats a vertex or is out of
    /// range.
    pub fn new(n: usize, t: usize, edges: impl IntoIterator<Item = Vec<usize>>) -> Self {
        let tagged = edges.into_iter().map(|e| (e, None));
        Self::with_refs(n, t, tagged)
    }

    pub fn with_refs(
        n: usize,
        t: usize,
        edges: impl IntoIterator<Item = (Vec<usize>, Option<usize>)>,
    ) -> Self {
        assert!(t >= 2, "uniformity must be at least 2");
        let mut map: BTreeMap<Vec<usize>, Option<usize>> = BTreeMap::new();
        for (mut e, r) in edges {
            e.sort_unstable();
            assert_eq!(e.len(), t, "edge {e:?} is not {t}-uniform");
            assert!(
                e.windows(2).all(|w| w[0] < w[1]),
                "edge {e:?} repeats a vertex"
            );
            assert!(e.iter().all(|&v| v < n), "edge {e:?} out of range");
            map.entry(e).or_insert(r);
        }
        let (edges, witness_refs) = map.into_iter().unzip();
        Hypergraph {
            n,
            t,
            edges,
            witness_refs,
        }
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// True iff no edge lies inside `set`.
    pub fn is_independent(&self, set: &[usize]) -> bool {
        let mut inside = vec![false; self.n];
        for &v in set {
            inside[v] = true;
        }
        !self.edges.iter().any(|e| e.iter().all(|&v| inside[v]))
    }

    pub fn to_graph(&self) -> Graph {
        assert_eq!(self.t, 2);
        Graph::new(self.n, self.edges.iter().map(|e| (e[0], e[1])))
    }
}

/// Simple undirected graph with sorted adjacency lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    pub n: usize,
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl Graph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            assert!(u != v && u < n && v < n, "bad edge ({u}, {v})");
            adj[u].push(v);
            adj[v].push(u);
        }
        for a in adj.iter_mut() {
            a.sort_unstable();
            a.dedup();
        }
        let m = adj.iter().map(Vec::len).sum::<usize>() / 2;
        Graph { n, adj, m }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, a)| a.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn to_hypergraph(&self) -> Hypergraph {
        Hypergraph::new(self.n, 2, self.edges().map(|(u, v)| vec![u, v]))
    }

    pub fn is_independent(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| !self.has_edge(u, v)))
    }
}

/// All `k`-subsets of `items`, in lexicographic order.
pub fn subsets(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(
        items: &[usize],
        k: usize,
        start: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        let need = k - cur.len();
        for i in start..items.len() {
            if items.len() - i < need {
                break;
            }
            cur.push(items[i]);
            rec(items, k, i + 1, cur, out);
            cur.pop();
        }
    }
    rec(items, k, 0, &mut cur, &mut out);
    out
}

pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edges_are_deduplicated_and_sorted() {
        let h = Hypergraph::new(4, 3, vec![vec![2, 1, 0], vec![0, 1, 2], vec![1, 2, 3]]);
        assert_eq!(h.edges, vec![vec![0, 1, 2], vec![1, 2, 3]]);
        assert!(h.is_independent(&[0, 1, 3]));
        assert!(!h.is_independent(&[0, 1, 2, 3]));
    }

    #[test]
    #[should_panic]
    fn wrong_size_edge_panics() {
        Hypergraph::new(4, 3, vec![vec![0, 1]]);
    }

    #[test]
    fn subset_counts() {
        let items: Vec<usize> = (0..7).collect();
        assert_eq!(subsets(&items, 3).len() as u128, binomial(7, 3));
        assert_eq!(subsets(&items, 0), vec![Vec::<usize>::new()]);
        assert_eq!(binomial(5, 3), 10);
        assert_eq!(binomial(3, 5), 0);
    }

    #[test]
    fn graph_basics() {
        let g = Graph::new(5, (0..5).map(|i| (i, (i + 1) % 5)));
        assert_eq!(g.m(), 5);
        assert!(g.has_edge(4, 0));
        assert!(g.is_independent(&[0, 2]));
        assert!(!g.is_independent(&[0, 1]));
        assert_eq!(g.to_hypergraph().m(), 5);
    }
}
