#![allow(dead_code)]

use std::collections::BTreeSet;

use rdelta::SimplicialComplex;

/// Clique complex of the graph on `n` vertices whose edges are given by
/// `mask` over the pairs `(a, b)`, `a < b`, in lexicographic order.
pub fn clique_complex(n: usize, mask: u32) -> SimplicialComplex {
    let pairs = pairs(n);
    let adj = |a: usize, b: usize| {
        let k = pairs.iter().position(|&p| p == (a.min(b), a.max(b))).unwrap();
        mask >> k & 1 == 1
    };
    let cliques: Vec<u32> = (1u32..1 << n)
        .filter(|&s| {
            let v: Vec<usize> = (0..n).filter(|i| s >> i & 1 == 1).collect();
            v.iter().enumerate().all(|(k, &a)| v[k + 1..].iter().all(|&b| adj(a, b)))
        })
        .collect();
    let maximal: Vec<Vec<usize>> = cliques
        .iter()
        .filter(|&&s| !cliques.iter().any(|&t| t != s && t & s == s))
        .map(|&s| (0..n).filter(|i| s >> i & 1 == 1).map(|i| i + 1).collect())
        .collect();
    let refs: Vec<&[usize]> = maximal.iter().map(Vec::as_slice).collect();
    SimplicialComplex::from_numbered(n, &refs).unwrap()
}

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for k in 0..=p.len() {
            let mut q = p.clone();
            q.insert(k, n - 1);
            out.push(q);
        }
    }
    out
}

/// One clique complex per isomorphism class of graphs on `1..=max_n`
/// vertices, keeping only the pure ones.
pub fn pure_flag_complexes(max_n: usize) -> Vec<SimplicialComplex> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        let pairs = pairs(n);
        let perms = permutations(n);
        let mut seen = BTreeSet::new();
        for mask in 0u32..1 << pairs.len() {
            let canon = perms
                .iter()
                .map(|p| {
                    pairs.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).fold(0u32, |acc, (_, &(a, b))| {
                        let (x, y) = (p[a].min(p[b]), p[a].max(p[b]));
                        acc | 1 << pairs.iter().position(|&q| q == (x, y)).unwrap()
                    })
                })
                .min()
                .unwrap();
            if seen.insert(canon) {
                let c = clique_complex(n, canon);
                if c.is_pure() {
                    out.push(c);
                }
            }
        }
    }
    out
}
