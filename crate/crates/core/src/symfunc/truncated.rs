//! Finite-variable images of symmetric functions.
//!
//! Setting `x_j = 0` for `j > k` sends the degree-`n` symmetric functions to
//! polynomials in `x_1, …, x_k`. The map is injective when `k ≥ n`, which is
//! what makes the monomial and elementary conversions correct.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{Basis, Coeff, SymFunc};
use crate::error::Result;
use crate::partition::Partition;

type Exponents = Vec<u32>;
type IntPoly = HashMap<Exponents, BigInt>;

/// A polynomial in `vars` commuting variables with exact coefficients.
#[derive(Clone, Debug)]
pub struct TruncatedPoly {
    vars: usize,
    terms: BTreeMap<Exponents, Coeff>,
    lossy: bool,
}

impl PartialEq for TruncatedPoly {
    fn eq(&self, other: &Self) -> bool {
        self.vars == other.vars && self.terms == other.terms
    }
}

impl Eq for TruncatedPoly {}

impl TruncatedPoly {
    pub fn zero(vars: usize) -> Self {
        TruncatedPoly { vars, terms: BTreeMap::new(), lossy: false }
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs. Every
    /// exponent vector must have length `vars`.
    pub fn from_terms<I>(vars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Exponents, Coeff)>,
    {
        let mut out = TruncatedPoly::zero(vars);
        for (e, c) in terms {
            assert_eq!(e.len(), vars, "exponent vector length must match variable count");
            out.add_term(e, c);
        }
        out
    }

    /// `x_1^i + ⋯ + x_k^i`.
    pub fn power_sum(i: u32, vars: usize) -> Self {
        let terms = (0..vars).map(|j| {
            let mut e = vec![0; vars];
            e[j] = i;
            (e, Coeff::one())
        });
        TruncatedPoly::from_terms(vars, terms)
    }

    /// `Σ_{j_1 < ⋯ < j_i} x_{j_1} ⋯ x_{j_i}`; zero when `i > vars`.
    pub fn elementary(i: usize, vars: usize) -> Self {
        let mut out = TruncatedPoly::zero(vars);
        for e in elementary_int(i, vars).into_keys() {
            out.add_term(e, Coeff::one());
        }
        out
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    /// True when the source degree exceeded the variable count, so distinct
    /// symmetric functions may share this image.
    pub fn is_lossy(&self) -> bool {
        self.lossy
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exponents: &[u32]) -> Coeff {
        self.terms.get(exponents).cloned().unwrap_or_else(Coeff::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &Coeff)> {
        self.terms.iter()
    }

    /// Value at `x_1 = ⋯ = x_k = 1`.
    pub fn sum_of_coeffs(&self) -> Coeff {
        self.terms.values().sum()
    }

    /// Whether the polynomial is invariant under swapping each adjacent
    /// pair of variables.
    pub fn is_symmetric(&self) -> bool {
        (0..self.vars.saturating_sub(1)).all(|i| {
            self.terms.iter().all(|(e, c)| {
                let mut swapped = e.clone();
                swapped.swap(i, i + 1);
                self.terms.get(&swapped) == Some(c)
            })
        })
    }

    pub(crate) fn add_term(&mut self, e: Exponents, c: Coeff) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e.clone()).or_insert_with(Coeff::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn add(&self, other: &TruncatedPoly) -> TruncatedPoly {
        assert_eq!(self.vars, other.vars, "variable counts differ");
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out.lossy = self.lossy || other.lossy;
        out
    }

    pub fn mul(&self, other: &TruncatedPoly) -> TruncatedPoly {
        assert_eq!(self.vars, other.vars, "variable counts differ");
        let mut acc: HashMap<Exponents, Coeff> = HashMap::new();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let e: Exponents = a.iter().zip(b).map(|(x, y)| x + y).collect();
                *acc.entry(e).or_insert_with(Coeff::zero) += ca * cb;
            }
        }
        let mut out = TruncatedPoly::from_terms(self.vars, acc);
        out.lossy = self.lossy || other.lossy;
        out
    }
}

impl fmt::Display for TruncatedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}")?;
            for (var, &pow) in e.iter().enumerate() {
                match pow {
                    0 => {}
                    1 => write!(f, "*x{}", var + 1)?,
                    _ => write!(f, "*x{}^{pow}", var + 1)?,
                }
            }
        }
        Ok(())
    }
}

fn int_mul(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let mut out: IntPoly = HashMap::with_capacity(a.len().max(b.len()));
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Exponents = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            *out.entry(e).or_insert_with(BigInt::zero) += ca * cb;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn power_sum_int(i: usize, vars: usize) -> IntPoly {
    (0..vars)
        .map(|j| {
            let mut e = vec![0; vars];
            e[j] = i as u32;
            (e, BigInt::one())
        })
        .collect()
}

fn elementary_int(i: usize, vars: usize) -> IntPoly {
    let mut out = HashMap::new();
    let mut chosen = vec![0u32; vars];
    choose(0, i, &mut chosen, &mut out);
    out
}

fn choose(start: usize, left: usize, chosen: &mut Vec<u32>, out: &mut IntPoly) {
    if left == 0 {
        out.insert(chosen.clone(), BigInt::one());
        return;
    }
    for j in start..chosen.len() {
        if chosen.len() - j < left {
            break;
        }
        chosen[j] = 1;
        choose(j + 1, left - 1, chosen, out);
        chosen[j] = 0;
    }
}

/// Images of `p_λ` or `e_λ` in `vars` variables, memoized on suffixes so
/// each partition costs one multiplication by a single generator.
pub(crate) struct GeneratorImages {
    basis: Basis,
    vars: usize,
    memo: HashMap<Vec<usize>, IntPoly>,
}

impl GeneratorImages {
    pub(crate) fn new(basis: Basis, vars: usize) -> Self {
        assert!(matches!(basis, Basis::P | Basis::E));
        GeneratorImages { basis, vars, memo: HashMap::new() }
    }

    pub(crate) fn image(&mut self, lambda: &Partition) -> &IntPoly {
        self.build(lambda.parts());
        &self.memo[lambda.parts()]
    }

    fn build(&mut self, parts: &[usize]) {
        if self.memo.contains_key(parts) {
            return;
        }
        let poly = match parts.split_first() {
            None => HashMap::from([(vec![0; self.vars], BigInt::one())]),
            Some((&first, rest)) => {
                self.build(rest);
                let generator = match self.basis {
                    Basis::P => power_sum_int(first, self.vars),
                    _ => elementary_int(first, self.vars),
                };
                int_mul(&self.memo[rest], &generator)
            }
        };
        self.memo.insert(parts.to_vec(), poly);
    }
}

impl SymFunc {
    /// Image in `k` variables. Elements outside `p` and `e` are first
    /// rewritten in `p`.
    pub fn truncate(&self, k: usize) -> Result<TruncatedPoly> {
        let source = match self.basis {
            Basis::P | Basis::E => self.clone(),
            _ => self.to_power_sum()?,
        };
        // Accumulate in integers over the common denominator.
        let denominator = source
            .terms()
            .fold(BigInt::one(), |d, (_, c)| d.lcm(c.denom()));
        let mut images = GeneratorImages::new(source.basis, k);
        let mut acc: IntPoly = HashMap::new();
        for (lambda, c) in source.terms() {
            let scaled = (c * &denominator).to_integer();
            for (e, v) in images.image(lambda) {
                *acc.entry(e.clone()).or_insert_with(BigInt::zero) += &scaled * v;
            }
        }
        let terms = acc.into_iter().map(|(e, v)| (e, Coeff::new(v, denominator.clone())));
        let mut out = TruncatedPoly::from_terms(k, terms);
        out.lossy = self.degree > k;
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::super::tests::{arb_p_element, p_terms, part};
    use super::*;
    use crate::symfunc::coeff_int;
    use proptest::prelude::*;

    fn poly(vars: usize, terms: &[(i64, &[u32])]) -> TruncatedPoly {
        TruncatedPoly::from_terms(vars, terms.iter().map(|(c, e)| (e.to_vec(), coeff_int(*c))))
    }

    #[test]
    fn examples() {
        let p1 = SymFunc::p_monomial(part(&[1])).truncate(2).unwrap();
        assert_eq!(p1, poly(2, &[(1, &[1, 0]), (1, &[0, 1])]));
        let p2 = SymFunc::p_monomial(part(&[2])).truncate(2).unwrap();
        assert_eq!(p2, poly(2, &[(1, &[2, 0]), (1, &[0, 2])]));
        let edge = p_terms(&[(-1, &[2]), (1, &[1, 1])]).truncate(2).unwrap();
        assert_eq!(edge, poly(2, &[(2, &[1, 1])]));
        assert!(!edge.is_lossy());
        assert!(SymFunc::p_monomial(part(&[2, 1])).truncate(2).unwrap().is_lossy());
    }

    #[test]
    fn elementary_images() {
        let e2 = SymFunc::e_monomial(part(&[2])).truncate(3).unwrap();
        assert_eq!(e2, TruncatedPoly::elementary(2, 3));
        assert_eq!(e2.len(), 3);
        assert!(TruncatedPoly::elementary(4, 3).is_zero());
        // e_2 in two variables against (p_1^2 - p_2)/2.
        let from_p = p_terms(&[(-1, &[2]), (1, &[1, 1])])
            .scale(&Coeff::new(1.into(), 2.into()))
            .truncate(2)
            .unwrap();
        assert_eq!(from_p, TruncatedPoly::elementary(2, 2));
    }

    #[test]
    fn generators_agree_with_public_constructors() {
        let p3 = SymFunc::p_monomial(part(&[3])).truncate(4).unwrap();
        assert_eq!(p3, TruncatedPoly::power_sum(3, 4));
        assert!(p3.is_symmetric());
        assert!(!poly(2, &[(1, &[2, 0])]).is_symmetric());
    }

    #[test]
    fn display() {
        assert_eq!(poly(2, &[(2, &[1, 1])]).to_string(), "2*x1*x2");
        assert_eq!(TruncatedPoly::zero(3).to_string(), "0");
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn truncation_is_multiplicative(
            (f, g) in (1usize..=3, 1usize..=3).prop_flat_map(|(a, b)| (arb_p_element(a), arb_p_element(b)))
        ) {
            let k = f.degree() + g.degree();
            let lhs = f.mul(&g).unwrap().truncate(k).unwrap();
            let rhs = f.truncate(k).unwrap().mul(&g.truncate(k).unwrap());
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn truncation_is_additive_and_symmetric(
            (f, g) in (1usize..=5).prop_flat_map(|a| (arb_p_element(a), arb_p_element(a)))
        ) {
            let k = f.degree();
            let sum = f.add(&g).unwrap().truncate(k).unwrap();
            prop_assert!(sum.is_symmetric());
            prop_assert_eq!(sum, f.truncate(k).unwrap().add(&g.truncate(k).unwrap()));
        }
    }
}
