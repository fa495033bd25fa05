//! Three routes to the chromatic symmetric function `X_G`:
//!
//! - [`coloring_oracle`] sums the monomial of every proper coloring with
//!   `k` colors, giving the `k`-variable image of `X_G` directly;
//! - [`subset_expansion`] is `Σ_{S ⊆ E} (-1)^{|S|} p_{λ(S)}`;
//! - [`mobius_expansion`] is `Σ_{π ∈ L_G} μ(0̂, π) p_{type(π)}` over the
//!   lattice of contractions.

use std::collections::HashMap;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::error::{Cap, Error, Result};
use crate::graph::{Dsu, Graph};
use crate::limits::Limits;
use crate::partition::Partition;
use crate::symfunc::{Basis, Coeff, SymFunc, TruncatedPoly};

/// Edge counts at or above this are split across workers.
const PARALLEL_MIN_EDGES: usize = 14;
/// Number of leading edges whose in/out choices form the work units.
const SPLIT_DEPTH: usize = 8;
/// Bitmask tables are `2^n` long; this bounds them regardless of config.
const LATTICE_HARD_MAX: usize = 24;

type SignedCounts = HashMap<Box<[usize]>, i64>;

/// `X_G` in the power-sum basis by the signed edge-subset sum.
///
/// The walk decides each edge in turn, keeping the components of the chosen
/// edges in a union-find that is rolled back on return. When an edge's
/// endpoints are already joined, taking it or not leaves the same
/// components with opposite sign, so the two subtrees cancel term for term
/// and are skipped; the sum is unchanged and the surviving leaves number
/// far fewer than `2^|E|`. The cap still bounds `|E|`.
pub fn subset_expansion(g: &Graph, limits: &Limits) -> Result<SymFunc> {
    let m = g.edge_count();
    Limits::check(Cap::SubsetEdges, m as u128, limits.subset_edges as u128)?;
    let counts = if m >= PARALLEL_MIN_EDGES {
        let depth = SPLIT_DEPTH.min(m);
        limits.install(|| {
            (0u32..1 << depth)
                .into_par_iter()
                .map(|prefix| {
                    let mut walk = SubsetWalk::new(g);
                    let mut sign = false;
                    for (i, &(a, b)) in g.edges()[..depth].iter().enumerate() {
                        if walk.dsu.find(a) == walk.dsu.find(b) {
                            // Cancels against the prefix with bit i flipped.
                            return SignedCounts::new();
                        }
                        if prefix & (1 << i) != 0 {
                            walk.dsu.union(a, b);
                            sign = !sign;
                        }
                    }
                    walk.descend(depth, sign);
                    walk.counts
                })
                .reduce(SignedCounts::new, merge_counts)
        })
    } else {
        let mut walk = SubsetWalk::new(g);
        walk.descend(0, false);
        walk.counts
    };
    let terms = counts.into_iter().map(|(sizes, c)| {
        (Partition::new(sizes.into_vec()).expect("sorted sizes"), Coeff::from_integer(BigInt::from(c)))
    });
    SymFunc::from_terms(g.vertex_count(), Basis::P, terms)
}

fn merge_counts(mut a: SignedCounts, b: SignedCounts) -> SignedCounts {
    for (k, v) in b {
        *a.entry(k).or_insert(0) += v;
    }
    a
}

struct SubsetWalk<'g> {
    edges: &'g [(usize, usize)],
    dsu: Dsu,
    sizes: Vec<usize>,
    counts: SignedCounts,
}

impl<'g> SubsetWalk<'g> {
    fn new(g: &'g Graph) -> Self {
        SubsetWalk {
            edges: g.edges(),
            dsu: Dsu::new(g.vertex_count()),
            sizes: Vec::with_capacity(g.vertex_count()),
            counts: SignedCounts::new(),
        }
    }

    /// `negative` is the parity of edges chosen so far.
    fn descend(&mut self, index: usize, negative: bool) {
        if index == self.edges.len() {
            self.dsu.block_sizes_into(&mut self.sizes);
            let delta = if negative { -1 } else { 1 };
            match self.counts.get_mut(self.sizes.as_slice()) {
                Some(c) => *c += delta,
                None => {
                    self.counts.insert(self.sizes.clone().into_boxed_slice(), delta);
                }
            }
            return;
        }
        let (a, b) = self.edges[index];
        if self.dsu.find(a) == self.dsu.find(b) {
            return;
        }
        self.descend(index + 1, negative);
        self.dsu.union(a, b);
        self.descend(index + 1, !negative);
        self.dsu.undo();
    }
}

/// The `k`-variable image of `X_G`, summed over all proper colorings
/// `V → {1..k}`.
pub fn coloring_oracle(g: &Graph, k: usize, limits: &Limits) -> Result<TruncatedPoly> {
    if k == 0 {
        return Err(Error::InvalidArgument("the coloring oracle needs at least one color".into()));
    }
    let n = g.vertex_count();
    let requested = (k as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    Limits::check(Cap::OracleBudget, requested, limits.oracle_budget)?;
    let mut neighbours = vec![Vec::new(); n];
    for &(a, b) in g.edges() {
        // Only earlier vertices constrain a vertex when colored in order.
        neighbours[b].push(a);
    }
    let mut colors = vec![0usize; n];
    let mut exponents = vec![0u32; k];
    let mut counts: HashMap<Vec<u32>, u64> = HashMap::new();
    color_from(0, &neighbours, &mut colors, &mut exponents, &mut counts);
    let terms = counts
        .into_iter()
        .map(|(e, c)| (e, Coeff::from_integer(BigInt::from(c))));
    Ok(TruncatedPoly::from_terms(k, terms))
}

fn color_from(
    v: usize,
    neighbours: &[Vec<usize>],
    colors: &mut [usize],
    exponents: &mut [u32],
    counts: &mut HashMap<Vec<u32>, u64>,
) {
    if v == colors.len() {
        *counts.entry(exponents.to_vec()).or_insert(0) += 1;
        return;
    }
    for c in 0..exponents.len() {
        if neighbours[v].iter().any(|&u| colors[u] == c) {
            continue;
        }
        colors[v] = c;
        exponents[c] += 1;
        color_from(v + 1, neighbours, colors, exponents, counts);
        exponents[c] -= 1;
    }
}

/// One connected partition of `V` in the lattice of contractions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Contraction {
    /// Blocks, each sorted, ordered by smallest vertex.
    pub blocks: Vec<Vec<usize>>,
    /// Block sizes as a partition.
    pub kind: Partition,
    /// `μ(0̂, π)`.
    pub mobius: i128,
}

/// All connected set partitions of `V(G)` ordered by refinement, with their
/// Möbius values from the bottom.
#[derive(Clone, Debug)]
pub struct ContractionLattice {
    vertex_count: usize,
    elements: Vec<Contraction>,
    index: HashMap<Vec<u64>, usize>,
}

impl ContractionLattice {
    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Element 0 is always the bottom `0̂`.
    pub fn elements(&self) -> &[Contraction] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn bottom(&self) -> &Contraction {
        &self.elements[0]
    }

    /// Looks up the element with the given blocks (in any order).
    pub fn find(&self, blocks: &[Vec<usize>]) -> Option<&Contraction> {
        self.index.get(&block_key(blocks)).map(|&i| &self.elements[i])
    }

    /// Whether `finer ≤ coarser` in refinement order: every block of
    /// `finer` lies inside a block of `coarser`.
    pub fn refines(finer: &Contraction, coarser: &Contraction) -> bool {
        let masks: Vec<u64> = coarser.blocks.iter().map(|b| mask_of(b)).collect();
        finer.blocks.iter().all(|b| {
            let m = mask_of(b);
            masks.iter().any(|&c| m & c == m)
        })
    }
}

fn mask_of(block: &[usize]) -> u64 {
    block.iter().fold(0, |m, &v| m | 1 << v)
}

fn block_key(blocks: &[Vec<usize>]) -> Vec<u64> {
    let mut key: Vec<u64> = blocks.iter().map(|b| mask_of(b)).collect();
    key.sort_unstable();
    key
}

fn bits(mask: u64) -> Vec<usize> {
    (0..64).filter(|&v| mask & (1 << v) != 0).collect()
}

/// Builds `L_G`. Each connected block `B` gets `μ_B = μ(0̂, {B})` in the
/// lattice of its induced subgraph by the defining recursion, memoized on
/// the vertex set; since `[0̂, π]` is the product of those lattices,
/// `μ(0̂, π)` is the product of its blocks' values.
pub fn build_contraction_lattice(g: &Graph, limits: &Limits) -> Result<ContractionLattice> {
    let n = g.vertex_count();
    let limit = limits.lattice_vertices.min(LATTICE_HARD_MAX);
    Limits::check(Cap::LatticeVertices, n as u128, limit as u128)?;
    let adjacency = g.neighbor_masks();
    let full: u64 = if n == 0 { 0 } else { (1u64 << n) - 1 };
    let size = 1usize << n;

    let mut connected = vec![false; size];
    for mask in 1..size as u64 {
        connected[mask as usize] = induces_connected(mask, &adjacency);
    }

    // block_mu[B] for connected B; refinement_sum[R] = Σ over connected
    // partitions σ of R of ∏_{C ∈ σ} block_mu[C]. Submasks are numerically
    // smaller, so increasing order sees every proper part first.
    let mut block_mu = vec![0i128; size];
    let mut refinement_sum = vec![0i128; size];
    refinement_sum[0] = 1;
    for r in 1..size as u64 {
        let low = r & r.wrapping_neg();
        let rest = r ^ low;
        let mut proper = 0i128;
        let mut sub = rest;
        loop {
            let block = sub | low;
            if block != r && connected[block as usize] {
                proper += block_mu[block as usize] * refinement_sum[(r ^ block) as usize];
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
        if connected[r as usize] {
            let mu = if rest == 0 { 1 } else { -proper };
            block_mu[r as usize] = mu;
            refinement_sum[r as usize] = proper + mu;
        } else {
            refinement_sum[r as usize] = proper;
        }
    }

    let mut elements = Vec::new();
    let mut current = Vec::new();
    collect_partitions(full, &connected, &block_mu, &mut current, &mut elements);
    // Put 0̂ first, and the rest in a stable order.
    elements.sort_by(|a: &Contraction, b: &Contraction| {
        b.blocks.len().cmp(&a.blocks.len()).then_with(|| a.blocks.cmp(&b.blocks))
    });
    let index = elements.iter().enumerate().map(|(i, e)| (block_key(&e.blocks), i)).collect();
    let lattice = ContractionLattice { vertex_count: n, elements, index };

    if lattice.bottom().blocks.len() != n || lattice.bottom().mobius != 1 {
        return Err(Error::Invariant("bottom element must be all singletons with μ = 1".into()));
    }
    if let Some(zero) = lattice.elements.iter().find(|e| e.mobius == 0) {
        return Err(Error::Invariant(format!("μ(0̂, π) = 0 at π = {:?}", zero.blocks)));
    }
    Ok(lattice)
}

fn induces_connected(mask: u64, adjacency: &[u64]) -> bool {
    let start = mask & mask.wrapping_neg();
    let mut seen = start;
    let mut frontier = start;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let fresh = adjacency[v] & mask & !seen;
        seen |= fresh;
        frontier |= fresh;
    }
    seen == mask
}

fn collect_partitions(
    remaining: u64,
    connected: &[bool],
    block_mu: &[i128],
    current: &mut Vec<u64>,
    out: &mut Vec<Contraction>,
) {
    if remaining == 0 {
        let blocks: Vec<Vec<usize>> = current.iter().map(|&m| bits(m)).collect();
        let kind = Partition::from_unsorted(blocks.iter().map(Vec::len).collect())
            .expect("block sizes are positive");
        let mobius = current.iter().map(|&m| block_mu[m as usize]).product();
        out.push(Contraction { blocks, kind, mobius });
        return;
    }
    let low = remaining & remaining.wrapping_neg();
    let rest = remaining ^ low;
    let mut sub = rest;
    loop {
        let block = sub | low;
        if connected[block as usize] {
            current.push(block);
            collect_partitions(remaining ^ block, connected, block_mu, current, out);
            current.pop();
        }
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & rest;
    }
}

/// `X_G` in the power-sum basis from the lattice of contractions.
pub fn mobius_expansion(g: &Graph, limits: &Limits) -> Result<SymFunc> {
    let lattice = build_contraction_lattice(g, limits)?;
    let terms = lattice
        .elements()
        .iter()
        .map(|e| (e.kind.clone(), Coeff::from_integer(BigInt::from(e.mobius))));
    SymFunc::from_terms(g.vertex_count(), Basis::P, terms)
}

/// `X_{G_1 ⊔ ⋯ ⊔ G_ℓ}` as the product of the components' expansions.
pub fn chromatic_product(graphs: &[Graph], limits: &Limits) -> Result<SymFunc> {
    let factors = graphs
        .iter()
        .map(|g| subset_expansion(g, limits))
        .collect::<Result<Vec<_>>>()?;
    SymFunc::product(&factors)
}
