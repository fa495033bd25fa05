//! Finite simple graphs on vertices `0..n`.

use std::collections::BTreeSet;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;

/// An undirected simple graph. Edges are stored as `(i, j)` with `i < j`,
/// sorted, without duplicates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

/// On-disk form: `{"vertices": 4, "edges": [[0,1],[1,2]]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphFile {
    pub vertices: usize,
    #[serde(default)]
    pub edges: Vec<[usize; 2]>,
}

impl Graph {
    /// Normalizes the edge list: orients pairs, drops repeats, and rejects
    /// loops and out-of-range endpoints.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            set.insert(normalize_edge(n, a, b)?);
        }
        Ok(Graph { n, edges: set.into_iter().collect() })
    }

    /// `n` isolated vertices.
    pub fn empty(n: usize) -> Self {
        Graph { n, edges: Vec::new() }
    }

    /// Like [`Graph::new`], but a repeated edge is an error.
    pub fn from_file(file: &GraphFile) -> Result<Self> {
        let mut set = BTreeSet::new();
        for &[a, b] in &file.edges {
            let e = normalize_edge(file.vertices, a, b)?;
            if !set.insert(e) {
                return Err(Error::InvalidGraph(format!("duplicate edge [{a},{b}]")));
            }
        }
        Ok(Graph { n: file.vertices, edges: set.into_iter().collect() })
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: GraphFile = serde_json::from_str(text)
            .map_err(|source| Error::Json { context: "graph file".into(), source })?;
        Graph::from_file(&file)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path)
            .map_err(|source| Error::Io { path: path.display().to_string(), source })?;
        let file: GraphFile = serde_json::from_str(&text)
            .map_err(|source| Error::Json { context: path.display().to_string(), source })?;
        Graph::from_file(&file)
            .map_err(|e| Error::InvalidGraph(format!("{}: {e}", path.display())))
    }

    pub fn to_file(&self) -> GraphFile {
        GraphFile { vertices: self.n, edges: self.edges.iter().map(|&(a, b)| [a, b]).collect() }
    }

    /// `K_n`.
    pub fn complete(n: usize) -> Result<Self> {
        positive("complete", n)?;
        let edges = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
        Graph::new(n, edges)
    }

    /// `S_{n+1}`: vertex 0 joined to each of `1..=n`.
    pub fn star(n_plus_1: usize) -> Result<Self> {
        positive("star", n_plus_1)?;
        Graph::new(n_plus_1, (1..n_plus_1).map(|j| (0, j)))
    }

    /// `P_n`: `0 - 1 - ⋯ - (n-1)`.
    pub fn path(n: usize) -> Result<Self> {
        positive("path", n)?;
        Graph::new(n, (1..n).map(|j| (j - 1, j)))
    }

    /// `C_n`, with `C_2 = K_2` and `C_1 = K_1`.
    pub fn cycle(n: usize) -> Result<Self> {
        positive("cycle", n)?;
        let closing = if n >= 2 { Some((n - 1, 0)) } else { None };
        Graph::new(n, (1..n).map(|j| (j - 1, j)).chain(closing))
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        let e = if a < b { (a, b) } else { (b, a) };
        self.edges.binary_search(&e).is_ok()
    }

    /// Vertex sets of the connected components, each sorted, ordered by
    /// smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut dsu = Dsu::new(self.n);
        for &(a, b) in &self.edges {
            dsu.union(a, b);
        }
        let mut by_root: Vec<Vec<usize>> = vec![Vec::new(); self.n];
        for v in 0..self.n {
            by_root[dsu.find(v)].push(v);
        }
        let mut comps: Vec<Vec<usize>> = by_root.into_iter().filter(|c| !c.is_empty()).collect();
        comps.sort_by_key(|c| c[0]);
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// `λ(S)`: component sizes of the spanning subgraph `(V, S)`.
    pub fn lambda_of_subset(&self, subset: &[(usize, usize)]) -> Result<Partition> {
        let mut dsu = Dsu::new(self.n);
        for &(a, b) in subset {
            if !self.has_edge(a, b) {
                return Err(Error::NotAnEdge((a, b)));
            }
            dsu.union(a, b);
        }
        Ok(dsu.block_sizes())
    }

    /// Relabelled union: the vertices of `graphs[i]` follow those of
    /// `graphs[i - 1]`.
    pub fn disjoint_union(graphs: &[Graph]) -> Graph {
        let mut offset = 0;
        let mut edges = Vec::new();
        for g in graphs {
            edges.extend(g.edges.iter().map(|&(a, b)| (a + offset, b + offset)));
            offset += g.n;
        }
        Graph { n: offset, edges }
    }

    /// Neighbourhoods as bitmasks; requires `n ≤ 64`.
    pub(crate) fn neighbor_masks(&self) -> Vec<u64> {
        assert!(self.n <= 64, "bitmask adjacency needs at most 64 vertices");
        let mut masks = vec![0u64; self.n];
        for &(a, b) in &self.edges {
            masks[a] |= 1 << b;
            masks[b] |= 1 << a;
        }
        masks
    }
}

fn positive(name: &str, n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::InvalidGraph(format!("{name} graph needs at least one vertex")))
    } else {
        Ok(())
    }
}

fn normalize_edge(n: usize, a: usize, b: usize) -> Result<(usize, usize)> {
    if a == b {
        return Err(Error::InvalidGraph(format!("loop at vertex {a}")));
    }
    if a >= n || b >= n {
        return Err(Error::InvalidGraph(format!("edge [{a},{b}] has an endpoint outside 0..{n}")));
    }
    Ok(if a < b { (a, b) } else { (b, a) })
}

/// Union-find with union by size. With `find` kept compression-free the
/// structure supports undoing the most recent unions.
#[derive(Clone, Debug)]
pub(crate) struct Dsu {
    parent: Vec<usize>,
    size: Vec<usize>,
    history: Vec<Option<(usize, usize)>>,
}

impl Dsu {
    pub(crate) fn new(n: usize) -> Self {
        Dsu { parent: (0..n).collect(), size: vec![1; n], history: Vec::new() }
    }

    pub(crate) fn find(&self, mut x: usize) -> usize {
        while self.parent[x] != x {
            x = self.parent[x];
        }
        x
    }

    /// Merges the classes of `a` and `b`, recording the change for
    /// [`Dsu::undo`].
    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            self.history.push(None);
            return;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        self.history.push(Some((ra, rb)));
    }

    pub(crate) fn undo(&mut self) {
        if let Some(Some((ra, rb))) = self.history.pop() {
            self.parent[rb] = rb;
            self.size[ra] -= self.size[rb];
        }
    }

    /// Writes the class sizes, sorted decreasingly, into `out`.
    pub(crate) fn block_sizes_into(&self, out: &mut Vec<usize>) {
        out.clear();
        out.extend((0..self.parent.len()).filter(|&v| self.parent[v] == v).map(|v| self.size[v]));
        out.sort_unstable_by(|a, b| b.cmp(a));
    }

    pub(crate) fn block_sizes(&self) -> Partition {
        let mut sizes = Vec::new();
        self.block_sizes_into(&mut sizes);
        Partition::new(sizes).expect("class sizes are positive and sorted")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn named_constructors() {
        assert_eq!(Graph::complete(3).unwrap().edges(), &[(0, 1), (0, 2), (1, 2)]);
        assert_eq!(Graph::star(4).unwrap().edges(), &[(0, 1), (0, 2), (0, 3)]);
        assert_eq!(Graph::cycle(2).unwrap().edges(), &[(0, 1)]);
        assert_eq!(Graph::cycle(2).unwrap(), Graph::complete(2).unwrap());
        assert_eq!(Graph::cycle(1).unwrap(), Graph::complete(1).unwrap());
        assert_eq!(Graph::path(1).unwrap(), Graph::complete(1).unwrap());
        assert_eq!(Graph::star(1).unwrap(), Graph::empty(1));
        for make in [Graph::complete, Graph::star, Graph::path, Graph::cycle] {
            assert!(make(0).is_err());
        }
    }

    #[test]
    fn edge_counts() {
        for n in 1..=9 {
            assert_eq!(Graph::complete(n).unwrap().edge_count(), n * (n - 1) / 2);
            assert_eq!(Graph::path(n).unwrap().edge_count(), n - 1);
            assert_eq!(Graph::star(n + 1).unwrap().edge_count(), n);
            if n >= 3 {
                assert_eq!(Graph::cycle(n).unwrap().edge_count(), n);
            }
        }
    }

    #[test]
    fn lambda_of_subsets() {
        let p3 = Graph::path(3).unwrap();
        assert_eq!(p3.lambda_of_subset(&[]).unwrap(), part(&[1, 1, 1]));
        assert_eq!(p3.lambda_of_subset(&[(0, 1)]).unwrap(), part(&[2, 1]));
        let c4 = Graph::cycle(4).unwrap();
        assert_eq!(c4.lambda_of_subset(c4.edges()).unwrap(), part(&[4]));
        assert!(matches!(p3.lambda_of_subset(&[(0, 2)]), Err(Error::NotAnEdge((0, 2)))));
        // Reversed orientation is still an edge.
        assert_eq!(p3.lambda_of_subset(&[(2, 1)]).unwrap(), part(&[2, 1]));
    }

    #[test]
    fn extreme_subsets() {
        let g = Graph::disjoint_union(&[
            Graph::cycle(5).unwrap(),
            Graph::star(3).unwrap(),
            Graph::complete(1).unwrap(),
        ]);
        assert_eq!(g.lambda_of_subset(&[]).unwrap(), Partition::column(9));
        assert_eq!(g.lambda_of_subset(g.edges()).unwrap(), part(&[5, 3, 1]));
        let sizes: Vec<usize> = g.components().iter().map(Vec::len).collect();
        assert_eq!(sizes, vec![5, 3, 1]);
    }

    #[test]
    fn unions() {
        let k1 = Graph::complete(1).unwrap();
        let k2 = Graph::complete(2).unwrap();
        let two = Graph::disjoint_union(&[k1.clone(), k1.clone()]);
        assert_eq!(two.vertex_count(), 2);
        assert_eq!(two.edge_count(), 0);
        assert!(!two.is_connected());
        let g211 = Graph::disjoint_union(&[k2.clone(), k1.clone(), k1]);
        assert_eq!(g211.vertex_count(), 4);
        assert_eq!(g211.edges(), &[(0, 1)]);
        let p2p2 = Graph::disjoint_union(&[Graph::path(2).unwrap(), Graph::path(2).unwrap()]);
        assert_eq!(p2p2.edges(), &[(0, 1), (2, 3)]);
    }

    #[test]
    fn connectivity() {
        assert!(Graph::path(5).unwrap().is_connected());
        assert!(Graph::star(7).unwrap().is_connected());
        assert!(!Graph::empty(0).is_connected());
    }

    #[test]
    fn normalization_and_files() {
        let g = Graph::new(3, [(1, 0), (0, 1), (2, 1)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (1, 2)]);
        assert!(Graph::new(2, [(1, 1)]).is_err());
        assert!(Graph::new(2, [(0, 2)]).is_err());

        let g = Graph::from_json(r#"{"vertices": 4, "edges": [[0,1],[1,2],[2,0],[2,3]]}"#).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (1, 2), (2, 3)]);
        let err = Graph::from_json(r#"{"vertices": 2, "edges": [[0,1],[1,0]]}"#).unwrap_err();
        assert!(err.to_string().contains("duplicate edge"), "{err}");
        let err = Graph::from_json(r#"{"vertices": 2, "edges": [[0,0]]}"#).unwrap_err();
        assert!(err.to_string().contains("loop"), "{err}");
        assert!(Graph::from_json(r#"{"vertices": 2, "edges": [[0]]}"#).is_err());
        assert_eq!(Graph::from_json(r#"{"vertices": 1}"#).unwrap(), Graph::empty(1));
        let round = Graph::from_file(&g.to_file()).unwrap();
        assert_eq!(round, g);
    }

    #[test]
    fn dsu_rollback() {
        let mut dsu = Dsu::new(4);
        dsu.union(0, 1);
        dsu.union(2, 3);
        dsu.union(1, 0);
        assert_eq!(dsu.block_sizes(), part(&[2, 2]));
        dsu.union(1, 3);
        assert_eq!(dsu.block_sizes(), part(&[4]));
        dsu.undo();
        dsu.undo();
        assert_eq!(dsu.block_sizes(), part(&[2, 2]));
        dsu.undo();
        dsu.undo();
        assert_eq!(dsu.block_sizes(), part(&[1, 1, 1, 1]));
    }
}
