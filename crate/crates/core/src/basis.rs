//! Chromatic bases of the degree-`n` symmetric functions.
//!
//! Given connected graphs `G_k` on `k` vertices, the elements
//! `X_{G_λ} = ∏ X_{G_{λ_i}}` for `λ ⊢ n` form a basis. Writing
//! `X_{G_λ} = Σ_μ c_{λμ} p_μ`, only `μ ≤ λ` (lexicographic) appear and
//! `c_{λλ} = μ(0̂, π_λ) ≠ 0`, where `π_λ` groups the vertices of each
//! component of `G_λ`.
//!
//! Rows and columns of a [`TransitionMatrix`] are both indexed in descending
//! lexicographic order, so the support `μ ≤ λ` sits on and to the right of
//! the diagonal.

use std::collections::{BTreeMap, HashMap};
use std::path::Path;
use std::sync::Mutex;

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::chromatic::{build_contraction_lattice, subset_expansion};
use crate::closed_forms::NamedFamily;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::limits::Limits;
use crate::linalg::{determinant, is_triangular, solve_triangular, Triangle};
use crate::partition::{partitions_of, Partition};
use crate::symfunc::{format_coeff, Basis, Coeff, SymFunc};

#[derive(Clone, Debug)]
enum Source {
    Named(NamedFamily),
    Custom(BTreeMap<usize, Graph>),
}

/// An indexed set `{G_k}` of connected graphs, `G_k` on `k` vertices.
///
/// Generator expansions `X_{G_k}` are computed on first use and cached.
#[derive(Debug)]
pub struct GraphFamily {
    name: String,
    source: Source,
    cache: Mutex<HashMap<usize, SymFunc>>,
}

/// Family file: `{"family": "star"}` or
/// `{"family": "custom", "generators": ["g1.json", ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyFile {
    pub family: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub generators: Vec<String>,
}

fn validate_generator(k: usize, g: &Graph) -> Result<()> {
    if g.vertex_count() != k {
        return Err(Error::InvalidGenerator {
            k,
            reason: format!("has {} vertices, expected {k}", g.vertex_count()),
        });
    }
    if !g.is_connected() {
        return Err(Error::InvalidGenerator { k, reason: "is not connected".into() });
    }
    Ok(())
}

impl GraphFamily {
    pub fn named(family: NamedFamily) -> Self {
        GraphFamily {
            name: family.name().to_string(),
            source: Source::Named(family),
            cache: Mutex::new(HashMap::new()),
        }
    }

    /// A custom family whose `i`-th graph (0-based) is `G_{i+1}`.
    pub fn custom(name: impl Into<String>, generators: Vec<Graph>) -> Result<Self> {
        let map = generators.into_iter().enumerate().map(|(i, g)| (i + 1, g)).collect();
        GraphFamily::custom_map(name, map)
    }

    /// A custom family from explicit `k → G_k` pairs; gaps are allowed and
    /// surface as [`Error::MissingGenerator`] when used.
    pub fn custom_map(name: impl Into<String>, generators: BTreeMap<usize, Graph>) -> Result<Self> {
        for (&k, g) in &generators {
            validate_generator(k, g)?;
        }
        Ok(GraphFamily {
            name: name.into(),
            source: Source::Custom(generators),
            cache: Mutex::new(HashMap::new()),
        })
    }

    /// Builds a family from a family file; custom generator paths are resolved
    /// against `base_dir`.
    pub fn from_family_file(file: &FamilyFile, base_dir: &Path) -> Result<Self> {
        if file.family != "custom" {
            if !file.generators.is_empty() {
                return Err(Error::InvalidArgument(format!(
                    "family {:?} does not take generator files",
                    file.family
                )));
            }
            return Ok(GraphFamily::named(NamedFamily::parse(&file.family)?));
        }
        if file.generators.is_empty() {
            return Err(Error::InvalidArgument("custom family lists no generators".into()));
        }
        let graphs = file
            .generators
            .iter()
            .enumerate()
            .map(|(i, file)| {
                let g = Graph::load(base_dir.join(file))?;
                validate_generator(i + 1, &g).map_err(|e| match e {
                    Error::InvalidGenerator { k, reason } => {
                        Error::InvalidGenerator { k, reason: format!("{file} {reason}") }
                    }
                    other => other,
                })?;
                Ok(g)
            })
            .collect::<Result<Vec<_>>>()?;
        GraphFamily::custom("custom", graphs)
    }

    pub fn load_family_file(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path)
            .map_err(|source| Error::Io { path: path.display().to_string(), source })?;
        let file: FamilyFile = serde_json::from_str(&text)
            .map_err(|source| Error::Json { context: path.display().to_string(), source })?;
        GraphFamily::from_family_file(&file, path.parent().unwrap_or(Path::new(".")))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// The built-in family this is, if any.
    pub fn named_family(&self) -> Option<NamedFamily> {
        match self.source {
            Source::Named(f) => Some(f),
            Source::Custom(_) => None,
        }
    }

    /// `G_k`.
    pub fn generator(&self, k: usize) -> Result<Graph> {
        match &self.source {
            Source::Named(f) => {
                if k == 0 {
                    Err(Error::MissingGenerator(0))
                } else {
                    f.graph(k)
                }
            }
            Source::Custom(map) => map.get(&k).cloned().ok_or(Error::MissingGenerator(k)),
        }
    }

    /// `X_{G_k}` by subset expansion, cached.
    pub fn generator_x(&self, k: usize, limits: &Limits) -> Result<SymFunc> {
        if let Some(x) = self.cache.lock().expect("cache lock").get(&k) {
            return Ok(x.clone());
        }
        let x = subset_expansion(&self.generator(k)?, limits)?;
        self.cache.lock().expect("cache lock").entry(k).or_insert_with(|| x.clone());
        Ok(x)
    }
}

/// `G_λ = G_{λ_1} ⊔ ⋯ ⊔ G_{λ_ℓ}`.
pub fn family_graph(family: &GraphFamily, lambda: &Partition) -> Result<Graph> {
    let parts = lambda
        .parts()
        .iter()
        .map(|&k| family.generator(k))
        .collect::<Result<Vec<_>>>()?;
    Ok(Graph::disjoint_union(&parts))
}

/// `X_{G_λ} = ∏ X_{G_{λ_i}}`.
pub fn x_basis_element(family: &GraphFamily, lambda: &Partition, limits: &Limits) -> Result<SymFunc> {
    let factors = lambda
        .parts()
        .iter()
        .map(|&k| family.generator_x(k, limits))
        .collect::<Result<Vec<_>>>()?;
    SymFunc::product(&factors)
}

/// Coefficients `c_{λμ}` of `X_{G_λ}` on `p_μ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransitionMatrix {
    degree: usize,
    index: Vec<Partition>,
    rows: Vec<Vec<Coeff>>,
}

impl TransitionMatrix {
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Partitions of `n`, descending; shared by rows and columns.
    pub fn index(&self) -> &[Partition] {
        &self.index
    }

    pub fn rows(&self) -> &[Vec<Coeff>] {
        &self.rows
    }

    fn position(&self, lambda: &Partition) -> Option<usize> {
        self.index.binary_search_by(|probe| lambda.cmp(probe)).ok()
    }

    /// `c_{λμ}`; zero for partitions of a different size.
    pub fn entry(&self, lambda: &Partition, mu: &Partition) -> Coeff {
        match (self.position(lambda), self.position(mu)) {
            (Some(i), Some(j)) => self.rows[i][j].clone(),
            _ => Coeff::zero(),
        }
    }

    pub fn diagonal(&self) -> Vec<Coeff> {
        (0..self.index.len()).map(|i| self.rows[i][i].clone()).collect()
    }

    /// `c_{λμ} = 0` unless `μ ≤ λ`.
    pub fn is_triangular(&self) -> bool {
        is_triangular(&self.rows, Triangle::Upper)
    }

    /// Product of the diagonal.
    pub fn determinant(&self) -> Coeff {
        self.diagonal().iter().product()
    }

    /// Solves `f = Σ_λ d_λ X_{G_λ}` for `d`, front to back.
    pub fn solve(&self, f: &SymFunc) -> Result<BTreeMap<Partition, Coeff>> {
        if f.basis() != Basis::P {
            return Err(Error::NotPowerSum(f.basis().tag()));
        }
        if f.degree() != self.degree {
            return Err(Error::DegreeMismatch { left: self.degree, right: f.degree() });
        }
        let rhs: Vec<Coeff> = self.index.iter().map(|mu| f.coeff(mu)).collect();
        let d = solve_triangular(&self.rows, &rhs, Triangle::Upper)?;
        Ok(self.index.iter().cloned().zip(d).filter(|(_, c)| !c.is_zero()).collect())
    }

    /// `Σ_λ d_λ X_{G_λ}` in `p`, using the stored rows.
    pub fn combine(&self, coeffs: &BTreeMap<Partition, Coeff>) -> Result<SymFunc> {
        let mut acc = vec![Coeff::zero(); self.index.len()];
        for (lambda, d) in coeffs {
            let i = self.position(lambda).ok_or(Error::DegreeMismatch {
                left: self.degree,
                right: lambda.size(),
            })?;
            for (slot, c) in acc.iter_mut().zip(&self.rows[i]) {
                *slot += d * c;
            }
        }
        SymFunc::from_terms(self.degree, Basis::P, self.index.iter().cloned().zip(acc))
    }
}

fn assemble(family: &GraphFamily, n: usize, limits: &Limits) -> Result<TransitionMatrix> {
    let index = partitions_of(n);
    let rows = limits.install(|| {
        index
            .par_iter()
            .map(|lambda| {
                let x = x_basis_element(family, lambda, limits)?;
                Ok(index.iter().map(|mu| x.coeff(mu)).collect())
            })
            .collect::<Result<Vec<Vec<Coeff>>>>()
    })?;
    Ok(TransitionMatrix { degree: n, index, rows })
}

/// Builds the matrix and checks both triangularity invariants.
pub fn transition_matrix(family: &GraphFamily, n: usize, limits: &Limits) -> Result<TransitionMatrix> {
    let m = assemble(family, n, limits)?;
    if !m.is_triangular() {
        return Err(Error::Invariant(format!(
            "transition matrix of {} at n = {n} has an entry with μ > λ",
            family.name()
        )));
    }
    if let Some(i) = m.diagonal().iter().position(Zero::is_zero) {
        return Err(Error::Invariant(format!(
            "transition matrix of {} at n = {n} has zero diagonal at {}",
            family.name(),
            m.index[i]
        )));
    }
    Ok(m)
}

/// The unique `d_λ` with `f = Σ d_λ X_{G_λ}`.
pub fn express_in_x_basis(
    f: &SymFunc,
    family: &GraphFamily,
    limits: &Limits,
) -> Result<BTreeMap<Partition, Coeff>> {
    if f.basis() != Basis::P {
        return Err(Error::NotPowerSum(f.basis().tag()));
    }
    transition_matrix(family, f.degree(), limits)?.solve(f)
}

/// `Σ d_λ X_{G_λ}`, each element recomputed from the family.
pub fn resynthesize(
    coeffs: &BTreeMap<Partition, Coeff>,
    degree: usize,
    family: &GraphFamily,
    limits: &Limits,
) -> Result<SymFunc> {
    let mut out = SymFunc::zero(degree, Basis::P);
    for (lambda, d) in coeffs {
        out = out.add(&x_basis_element(family, lambda, limits)?.scale(d))?;
    }
    Ok(out)
}

/// Outcome of a single named check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub detail: String,
}

impl Check {
    fn new(name: &str, ok: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.to_string(),
            status: if ok { Status::Pass } else { Status::Fail },
            detail: detail.into(),
        }
    }

    fn skipped(name: &str, detail: impl Into<String>) -> Self {
        Check { name: name.to_string(), status: Status::Skipped, detail: detail.into() }
    }
}

/// Verification report for one family at one degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisReport {
    pub family: String,
    pub degree: usize,
    pub index: Vec<Partition>,
    pub diagonal: Vec<String>,
    pub determinant: String,
    pub checks: Vec<Check>,
    pub passed: bool,
}

impl BasisReport {
    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| c.status == Status::Fail)
    }
}

/// Runs every basis check at degree `n`. Check failures are recorded in the
/// report; only inability to compute (caps, missing generators) is an error.
pub fn verify_basis(family: &GraphFamily, n: usize, limits: &Limits) -> Result<BasisReport> {
    let m = assemble(family, n, limits)?;
    let diagonal = m.diagonal();
    let mut checks = Vec::new();

    let triangular = m.is_triangular();
    checks.push(Check::new(
        "triangular",
        triangular,
        if triangular {
            "c[λ][μ] = 0 whenever μ > λ".to_string()
        } else {
            "found c[λ][μ] ≠ 0 with μ > λ".to_string()
        },
    ));

    let zero_at: Vec<String> =
        m.index.iter().zip(&diagonal).filter(|(_, c)| c.is_zero()).map(|(l, _)| l.to_string()).collect();
    checks.push(Check::new(
        "diagonal-nonzero",
        zero_at.is_empty(),
        if zero_at.is_empty() { "all diagonal entries nonzero".into() } else { format!("zero at {}", zero_at.join(" ")) },
    ));

    let det = m.determinant();
    let eliminated = determinant(&m.rows);
    checks.push(Check::new(
        "determinant",
        !det.is_zero() && det == eliminated,
        format!("diagonal product {}, elimination {}", format_coeff(&det), format_coeff(&eliminated)),
    ));

    let unit = Partition::column(n);
    let unit_ok = m.index.iter().all(|mu| {
        let expected = if *mu == unit { Coeff::one() } else { Coeff::zero() };
        m.entry(&unit, mu) == expected
    });
    checks.push(Check::new("unit-row", unit_ok, format!("row {unit} is p{unit}")));

    checks.push(if triangular && zero_at.is_empty() {
        let mut failures = Vec::new();
        for mu in &m.index {
            let p_mu = SymFunc::p_monomial(mu.clone());
            let round = m.solve(&p_mu).and_then(|d| m.combine(&d));
            match round {
                Ok(back) if back == p_mu => {}
                Ok(back) => failures.push(format!("p{mu} came back as {back}")),
                Err(e) => failures.push(format!("p{mu}: {e}")),
            }
        }
        Check::new(
            "round-trip",
            failures.is_empty(),
            if failures.is_empty() {
                format!("all {} power sums reproduced exactly", m.index.len())
            } else {
                failures.join("; ")
            },
        )
    } else {
        Check::new("round-trip", false, "matrix is not invertible by substitution")
    });

    checks.push(product_law_check(family, &m, limits)?);
    checks.push(diagonal_mobius_check(family, &m, limits)?);

    let passed = checks.iter().all(|c| c.status != Status::Fail);
    Ok(BasisReport {
        family: family.name().to_string(),
        degree: n,
        index: m.index.clone(),
        diagonal: diagonal.iter().map(format_coeff).collect(),
        determinant: format_coeff(&det),
        checks,
        passed,
    })
}

/// Each row against the subset expansion of the whole disjoint union.
fn product_law_check(family: &GraphFamily, m: &TransitionMatrix, limits: &Limits) -> Result<Check> {
    let mut mismatches = Vec::new();
    let mut skipped = 0;
    for (i, lambda) in m.index.iter().enumerate() {
        let g = family_graph(family, lambda)?;
        if g.edge_count() > limits.subset_edges {
            skipped += 1;
            continue;
        }
        let direct = subset_expansion(&g, limits)?;
        if m.index.iter().zip(&m.rows[i]).any(|(mu, c)| direct.coeff(mu) != *c) {
            mismatches.push(lambda.to_string());
        }
    }
    let checked = m.index.len() - skipped;
    Ok(if checked == 0 {
        Check::skipped("product-law", "every G_λ exceeds the subset-edge cap")
    } else {
        Check::new(
            "product-law",
            mismatches.is_empty(),
            if mismatches.is_empty() {
                format!("{checked} rows equal the expansion of G_λ ({skipped} beyond cap)")
            } else {
                format!("rows differ at {}", mismatches.join(" "))
            },
        )
    })
}

/// `c_{λλ}` against `μ(0̂, π_λ)` in the lattice of `G_λ`.
fn diagonal_mobius_check(family: &GraphFamily, m: &TransitionMatrix, limits: &Limits) -> Result<Check> {
    if m.degree > limits.lattice_vertices {
        return Ok(Check::skipped(
            "diagonal-mobius",
            format!("n = {} exceeds the lattice cap {}", m.degree, limits.lattice_vertices),
        ));
    }
    let mut mismatches = Vec::new();
    for (i, lambda) in m.index.iter().enumerate() {
        let g = family_graph(family, lambda)?;
        let lattice = build_contraction_lattice(&g, limits)?;
        let top = lattice.find(&g.components()).ok_or_else(|| {
            Error::Invariant(format!("component partition of G{lambda} missing from its lattice"))
        })?;
        let mobius = Coeff::from_integer(top.mobius.into());
        if mobius != m.rows[i][i] {
            mismatches.push(format!("{lambda}: μ = {mobius}, c = {}", m.rows[i][i]));
        }
    }
    Ok(Check::new(
        "diagonal-mobius",
        mismatches.is_empty(),
        if mismatches.is_empty() {
            "c[λ][λ] = μ(0̂, π_λ) for every λ".to_string()
        } else {
            mismatches.join("; ")
        },
    ))
}

/// Schur positivity of one generator.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchurEntry {
    pub k: usize,
    pub positive: bool,
    pub witness: Option<Partition>,
    pub witness_coeff: Option<String>,
    pub expansion: SymFunc,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchurScan {
    pub family: String,
    pub entries: Vec<SchurEntry>,
}

/// Schur positivity of `X_{G_k}` for `k = 1..=n_max`. Reports, does not
/// judge.
pub fn schur_positivity_scan(family: &GraphFamily, n_max: usize, limits: &Limits) -> Result<SchurScan> {
    let mut entries = Vec::with_capacity(n_max);
    for k in 1..=n_max {
        let verdict = family.generator_x(k, limits)?.is_schur_positive()?;
        let (witness, witness_coeff) = match verdict.witness {
            Some((mu, c)) => (Some(mu), Some(format_coeff(&c))),
            None => (None, None),
        };
        entries.push(SchurEntry { k, positive: verdict.positive, witness, witness_coeff, expansion: verdict.expansion });
    }
    Ok(SchurScan { family: family.name().to_string(), entries })
}
