//! Explicit power-sum expansions of `X_G` for complete, star, path and cycle
//! graphs, evaluated straight from their formulas. Nothing here enumerates
//! edge subsets, so these scale far past the subset cap.

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::One;

use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};
use crate::symfunc::{Basis, Coeff, SymFunc};

fn factorial(n: usize) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

fn require_positive(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::InvalidArgument("closed forms are defined for n ≥ 1".into()))
    } else {
        Ok(())
    }
}

fn sign(negative: bool) -> Coeff {
    if negative {
        -Coeff::one()
    } else {
        Coeff::one()
    }
}

/// `ℓ! / ∏ m_i!` and the sign `(-1)^{n-ℓ}`: the coefficient of `p_λ` in
/// `X_{P_n}`, which counts the compositions of `n` that sort to `λ`.
fn path_coefficient(lambda: &Partition) -> Coeff {
    let m = lambda.multiplicities();
    let denominator: BigInt = m.iter().map(|(_, mi)| factorial(mi)).product();
    let c = Coeff::new(factorial(m.total()), denominator);
    c * sign((lambda.size() - lambda.len()) % 2 == 1)
}

/// `X_{K_n} = n! e_n`, rewritten in `p`.
pub fn x_complete(n: usize) -> Result<SymFunc> {
    require_positive(n)?;
    SymFunc::e_monomial(Partition::row(n))
        .scale(&Coeff::from_integer(factorial(n)))
        .to_power_sum()
}

/// `X_{S_{n+1}} = Σ_{r=0}^{n} (-1)^r C(n, r) p_{(r+1, 1^{n-r})}`.
pub fn x_star(n_plus_1: usize) -> Result<SymFunc> {
    require_positive(n_plus_1)?;
    let n = n_plus_1 - 1;
    let terms = (0..=n).map(|r| {
        let c = Coeff::from_integer(binomial(BigInt::from(n), BigInt::from(r)));
        (Partition::hook(r + 1, n - r), c * sign(r % 2 == 1))
    });
    SymFunc::from_terms(n_plus_1, Basis::P, terms)
}

/// `X_{P_n} = Σ_{λ ⊢ n} (-1)^{n-ℓ(λ)} ℓ(λ)!/∏ m_i! p_λ`.
pub fn x_path(n: usize) -> Result<SymFunc> {
    require_positive(n)?;
    let terms = partitions_of(n).into_iter().map(|lambda| {
        let c = path_coefficient(&lambda);
        (lambda, c)
    });
    SymFunc::from_terms(n, Basis::P, terms)
}

/// `X_{C_n}`.
///
/// For `n ≥ 2` this is the path coefficient scaled by
/// `1 + Σ_{j≥2} (j-1) m_j / ℓ(λ)`, plus `(-1)^n p_n` for the full edge set.
/// At `n = 1` the formula evaluates to 0, while `C_1 = K_1` has
/// `X = p_1`; the graph convention wins and `p_1` is returned.
pub fn x_cycle(n: usize) -> Result<SymFunc> {
    require_positive(n)?;
    if n == 1 {
        return Ok(SymFunc::p_monomial(Partition::row(1)));
    }
    cycle_formula(n)
}

/// The cycle formula evaluated as written, with no special case at `n = 1`.
pub(crate) fn cycle_formula(n: usize) -> Result<SymFunc> {
    let mut terms: Vec<(Partition, Coeff)> = partitions_of(n)
        .into_iter()
        .map(|lambda| {
            let m = lambda.multiplicities();
            let parts = Coeff::from_integer(BigInt::from(m.total()));
            let weight: Coeff = (2..=n)
                .map(|j| Coeff::from_integer(BigInt::from((j - 1) * m.get(j))) / &parts)
                .sum();
            let c = path_coefficient(&lambda) * (Coeff::one() + weight);
            (lambda, c)
        })
        .collect();
    terms.push((Partition::row(n), sign(n % 2 == 1)));
    SymFunc::from_terms(n, Basis::P, terms)
}

/// Named families with closed forms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NamedFamily {
    Complete,
    Star,
    Path,
    Cycle,
}

impl NamedFamily {
    pub const ALL: [NamedFamily; 4] =
        [NamedFamily::Complete, NamedFamily::Star, NamedFamily::Path, NamedFamily::Cycle];

    pub fn name(self) -> &'static str {
        match self {
            NamedFamily::Complete => "complete",
            NamedFamily::Star => "star",
            NamedFamily::Path => "path",
            NamedFamily::Cycle => "cycle",
        }
    }

    pub fn parse(name: &str) -> Result<Self> {
        NamedFamily::ALL
            .into_iter()
            .find(|f| f.name() == name)
            .ok_or_else(|| Error::UnknownFamily(name.to_string()))
    }

    /// The family's graph on `n` vertices.
    pub fn graph(self, n: usize) -> Result<crate::graph::Graph> {
        use crate::graph::Graph;
        match self {
            NamedFamily::Complete => Graph::complete(n),
            NamedFamily::Star => Graph::star(n),
            NamedFamily::Path => Graph::path(n),
            NamedFamily::Cycle => Graph::cycle(n),
        }
    }

    /// The closed-form `X` of the family's graph on `n` vertices.
    pub fn closed_form(self, n: usize) -> Result<SymFunc> {
        match self {
            NamedFamily::Complete => x_complete(n),
            NamedFamily::Star => x_star(n),
            NamedFamily::Path => x_path(n),
            NamedFamily::Cycle => x_cycle(n),
        }
    }
}
