#![allow(dead_code)]

use chromsym::Graph;
use rand::Rng;

/// All `n(n-1)/2` vertex pairs, in a fixed order.
pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect()
}

/// Every labeled graph on `n` vertices.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs = pairs(n);
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e);
        Graph::new(n, edges).unwrap()
    })
}

/// Every labeled connected graph on at most `max_n` vertices.
pub fn connected_corpus(max_n: usize) -> Vec<Graph> {
    (1..=max_n).flat_map(all_graphs).filter(Graph::is_connected).collect()
}

pub fn random_graph<R: Rng>(rng: &mut R, n: usize, density: f64) -> Graph {
    let edges: Vec<_> = pairs(n).into_iter().filter(|_| rng.gen_bool(density)).collect();
    Graph::new(n, edges).unwrap()
}
