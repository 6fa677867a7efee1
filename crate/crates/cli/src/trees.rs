//! Tree enumeration for the sweep command: all labeled trees via Prüfer
//! sequences, reduced to one representative per isomorphism class with an
//! AHU canonical form rooted at the tree center.

use chromsym::Multigraph;

/// Decodes a Prüfer sequence over `0..n-1` into the edge list of a labeled
/// tree on `n` vertices.
fn prufer_decode(n: usize, seq: &[usize]) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &s in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf, s));
        degree[leaf] -= 1;
        degree[s] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    assert_eq!(rest.len(), 2);
    edges.push((rest[0], rest[1]));
    edges
}

/// AHU canonical encoding, minimized over the tree's center vertices.
fn canonical_form(n: usize, edges: &[(usize, usize)]) -> String {
    if n == 1 {
        return "()".to_string();
    }
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    // centers by iterative leaf stripping
    let mut degree: Vec<usize> = adj.iter().map(|a| a.len()).collect();
    let mut removed = vec![false; n];
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
    let mut alive = n;
    while alive > 2 {
        let mut next = Vec::new();
        for &v in &layer {
            removed[v] = true;
            alive -= 1;
            for &w in &adj[v] {
                if !removed[w] {
                    degree[w] -= 1;
                    if degree[w] == 1 {
                        next.push(w);
                    }
                }
            }
        }
        layer = next;
    }
    let centers: Vec<usize> = (0..n).filter(|&v| !removed[v]).collect();

    fn encode(v: usize, parent: usize, adj: &[Vec<usize>]) -> String {
        let mut kids: Vec<String> = adj[v]
            .iter()
            .filter(|&&w| w != parent)
            .map(|&w| encode(w, v, adj))
            .collect();
        kids.sort();
        format!("({})", kids.concat())
    }
    centers
        .iter()
        .map(|&c| encode(c, usize::MAX, &adj))
        .min()
        .unwrap()
}

/// One labeled representative per isomorphism class of trees on `n`
/// vertices, in first-seen Prüfer order.
pub fn trees_up_to_iso(n: usize) -> Vec<Multigraph> {
    if n == 1 {
        return vec![Multigraph::edgeless(1)];
    }
    if n == 2 {
        return vec![Multigraph::complete(2)];
    }
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    let mut seq = vec![0usize; n - 2];
    loop {
        let edges = prufer_decode(n, &seq);
        let key = canonical_form(n, &edges);
        if seen.insert(key) {
            let one_indexed: Vec<(usize, usize)> =
                edges.iter().map(|&(u, v)| (u + 1, v + 1)).collect();
            out.push(Multigraph::new(n, &one_indexed));
        }
        // odometer over sequences
        let mut k = 0;
        loop {
            if k == seq.len() {
                return out;
            }
            seq[k] += 1;
            if seq[k] < n {
                break;
            }
            seq[k] = 0;
            k += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tree_counts() {
        // trees up to isomorphism for n = 1..=7
        let expected = [0usize, 1, 1, 1, 2, 3, 6, 11];
        for (n, &e) in expected.iter().enumerate().skip(1) {
            assert_eq!(trees_up_to_iso(n).len(), e, "n = {n}");
        }
    }

    #[test]
    fn prufer_gives_trees() {
        for n in 3..=6 {
            let ts = trees_up_to_iso(n);
            for t in &ts {
                assert_eq!(t.m(), n - 1);
                // connected: one component of size n on the full state
                let full = chromsym::graphstate::State::full(t.m());
                assert_eq!(t.components(full).blocks.len(), 1);
            }
        }
    }

    #[test]
    fn path_and_star_distinguished() {
        let forms: std::collections::BTreeSet<String> = trees_up_to_iso(4)
            .iter()
            .map(|t| {
                let edges: Vec<(usize, usize)> = t
                    .edges_1indexed()
                    .iter()
                    .map(|&(u, v)| (u - 1, v - 1))
                    .collect();
                canonical_form(4, &edges)
            })
            .collect();
        assert_eq!(forms.len(), 2);
    }
}
