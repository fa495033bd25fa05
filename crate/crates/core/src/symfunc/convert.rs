use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::characters::CharacterTable;
use super::{Basis, Coeff, SymFunc};
use crate::error::{Error, Result};
use crate::linalg::{is_triangular, solve_triangular, Triangle};
use crate::partition::{partitions_of, Partition};

/// Outcome of a Schur-positivity test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchurVerdict {
    pub positive: bool,
    /// A Schur index with negative coefficient, when not positive.
    pub witness: Option<(Partition, Coeff)>,
    /// The full Schur expansion.
    pub expansion: SymFunc,
}

fn int(v: BigInt) -> Coeff {
    Coeff::from_integer(v)
}

impl SymFunc {
    /// Rewrites a power-sum element in `target`.
    ///
    /// `m` counts distributions of the parts of `λ` over the parts of `μ`;
    /// `e` expands each `p_k` by Newton's identity; `s` uses
    /// `p_λ = Σ_μ χ^μ(λ) s_μ`.
    pub fn convert(&self, target: Basis) -> Result<SymFunc> {
        if self.basis != Basis::P {
            return Err(Error::NotPowerSum(self.basis.tag()));
        }
        if self.degree == 0 || target == Basis::P {
            let mut out = self.clone();
            out.basis = target;
            return Ok(out);
        }
        match target {
            Basis::M => Ok(self.to_monomial()),
            Basis::E => self.to_elementary(),
            Basis::S => Ok(self.to_schur()),
            Basis::P => unreachable!(),
        }
    }

    /// Rewrites any element in the power-sum basis.
    pub fn to_power_sum(&self) -> Result<SymFunc> {
        if self.degree == 0 {
            let mut out = self.clone();
            out.basis = Basis::P;
            return Ok(out);
        }
        match self.basis {
            Basis::P => Ok(self.clone()),
            Basis::E => self.elementary_to_p(),
            Basis::S => Ok(self.schur_to_p()),
            Basis::M => self.monomial_to_p(),
        }
    }

    /// Schur expansion with a verdict on nonnegativity.
    pub fn is_schur_positive(&self) -> Result<SchurVerdict> {
        let expansion = self.convert(Basis::S)?;
        let witness = expansion
            .terms()
            .find(|(_, c)| c.is_negative())
            .map(|(l, c)| (l.clone(), c.clone()));
        Ok(SchurVerdict { positive: witness.is_none(), witness, expansion })
    }

    fn monomial_coords(&self, index: &[Partition]) -> Vec<Coeff> {
        index
            .iter()
            .map(|mu| self.terms().map(|(lambda, c)| c * int(p_in_m(lambda, mu))).sum())
            .collect()
    }

    fn to_monomial(&self) -> SymFunc {
        let n = self.degree;
        let index = partitions_of(n);
        let coords = self.monomial_coords(&index);
        SymFunc::from_terms(n, Basis::M, index.into_iter().zip(coords)).expect("homogeneous")
    }

    /// Expands each `p_λ = ∏ p_{λ_i}` with `p_k` in `e` from Newton's identity;
    /// products of `e_λ` are unions of partitions.
    fn to_elementary(&self) -> Result<SymFunc> {
        let mut newton: Vec<BTreeMap<Partition, Coeff>> = Vec::new();
        let mut out: BTreeMap<Partition, Coeff> = BTreeMap::new();
        for (lambda, c) in self.terms() {
            let mut product = BTreeMap::from([(Partition::empty(), c.clone())]);
            for &k in lambda.parts() {
                let factor = power_sum_in_e(k, &mut newton);
                let mut next = BTreeMap::new();
                for (a, ca) in &product {
                    for (b, cb) in factor {
                        *next.entry(a.union(b)).or_insert_with(Coeff::zero) += ca * cb;
                    }
                }
                product = next;
            }
            for (mu, v) in product {
                *out.entry(mu).or_insert_with(Coeff::zero) += v;
            }
        }
        SymFunc::from_terms(self.degree, Basis::E, out)
    }

    fn to_schur(&self) -> SymFunc {
        let n = self.degree;
        let mut table = CharacterTable::new();
        let terms = partitions_of(n).into_iter().map(|mu| {
            let c: Coeff = self.terms().map(|(lambda, c)| c * int(table.value(&mu, lambda))).sum();
            (mu, c)
        });
        SymFunc::from_terms(n, Basis::S, terms).expect("homogeneous")
    }

    fn elementary_to_p(&self) -> Result<SymFunc> {
        let mut single: HashMap<usize, SymFunc> = HashMap::new();
        let mut out = SymFunc::zero(self.degree, Basis::P);
        for (mu, c) in self.terms() {
            let mut product = SymFunc::one();
            for &k in mu.parts() {
                let e_k = single.entry(k).or_insert_with(|| elementary_in_p(k));
                product = product.mul(e_k)?;
            }
            out = out.add(&product.scale(c))?;
        }
        Ok(out)
    }

    fn schur_to_p(&self) -> SymFunc {
        let n = self.degree;
        let mut table = CharacterTable::new();
        let mut out = SymFunc::zero(n, Basis::P);
        for lambda in partitions_of(n) {
            let z = Coeff::from_integer(BigInt::from(lambda.z()));
            let c: Coeff = self.terms().map(|(mu, c)| c * int(table.value(mu, &lambda))).sum();
            out.add_term(lambda, c / z);
        }
        out
    }

    fn monomial_to_p(&self) -> Result<SymFunc> {
        let n = self.degree;
        let index = partitions_of(n);
        // Row i: m-coordinates of p_{λ_i}, supported on μ ≥ λ_i.
        let matrix: Vec<Vec<Coeff>> = index
            .iter()
            .map(|lambda| index.iter().map(|mu| int(p_in_m(lambda, mu))).collect())
            .collect();
        if !is_triangular(&matrix, Triangle::Lower) {
            return Err(Error::Invariant("p-to-m matrix is not triangular".into()));
        }
        let rhs: Vec<Coeff> = index.iter().map(|mu| self.coeff(mu)).collect();
        let solution = solve_triangular(&matrix, &rhs, Triangle::Lower)?;
        SymFunc::from_terms(n, Basis::P, index.into_iter().zip(solution))
    }
}

/// `p_k` in the `e` basis, memoized for `1..=k`:
/// `p_k = Σ_{i=1}^{k-1} (-1)^{i-1} e_i p_{k-i} + (-1)^{k-1} k e_k`.
fn power_sum_in_e(k: usize, memo: &mut Vec<BTreeMap<Partition, Coeff>>) -> &BTreeMap<Partition, Coeff> {
    while memo.len() < k {
        let j = memo.len() + 1;
        let sign = |i: usize| if i % 2 == 1 { Coeff::one() } else { -Coeff::one() };
        let mut p_j: BTreeMap<Partition, Coeff> = BTreeMap::new();
        for i in 1..j {
            let e_i = Partition::row(i);
            for (mu, c) in &memo[j - i - 1] {
                *p_j.entry(mu.union(&e_i)).or_insert_with(Coeff::zero) += sign(i) * c;
            }
        }
        *p_j.entry(Partition::row(j)).or_insert_with(Coeff::zero) += sign(j) * int(BigInt::from(j));
        p_j.retain(|_, c| !c.is_zero());
        memo.push(p_j);
    }
    &memo[k - 1]
}

/// Coefficient of `m_μ` in `p_λ`: the number of ways to place the parts of
/// `λ` into the bins `μ_1, μ_2, …` filling each exactly.
pub(crate) fn p_in_m(lambda: &Partition, mu: &Partition) -> BigInt {
    fn place(parts: &[usize], room: &mut Vec<usize>, memo: &mut HashMap<(usize, Vec<usize>), BigInt>) -> BigInt {
        let Some((&first, rest)) = parts.split_first() else {
            return BigInt::one();
        };
        let key = (parts.len(), room.clone());
        if let Some(v) = memo.get(&key) {
            return v.clone();
        }
        let mut total = BigInt::zero();
        for j in 0..room.len() {
            if room[j] >= first {
                room[j] -= first;
                total += place(rest, room, memo);
                room[j] += first;
            }
        }
        memo.insert(key, total.clone());
        total
    }
    if lambda.size() != mu.size() {
        return BigInt::zero();
    }
    place(lambda.parts(), &mut mu.parts().to_vec(), &mut HashMap::new())
}

/// `e_k = Σ_{λ ⊢ k} (-1)^{k-ℓ(λ)} z_λ^{-1} p_λ`.
fn elementary_in_p(k: usize) -> SymFunc {
    let mut out = SymFunc::zero(k, Basis::P);
    for lambda in partitions_of(k) {
        let mut c = Coeff::new(BigInt::from(1), BigInt::from(lambda.z()));
        if (k - lambda.len()) % 2 == 1 {
            c = -c;
        }
        out.add_term(lambda, c);
    }
    out
}

impl SchurVerdict {
    pub fn describe(&self) -> String {
        match &self.witness {
            None => "POSITIVE".to_string(),
            Some((mu, c)) => format!("NOT POSITIVE (coefficient {c} at s{mu})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::tests::{arb_p_element, p_terms, part};
    use super::*;
    use crate::symfunc::coeff_int;
    use proptest::prelude::*;

    fn triangle() -> SymFunc {
        p_terms(&[(2, &[3]), (-3, &[2, 1]), (1, &[1, 1, 1])])
    }

    #[test]
    fn triangle_is_six_e3() {
        let e = triangle().convert(Basis::E).unwrap();
        assert_eq!(e, SymFunc::e_monomial(part(&[3])).scale(&coeff_int(6)));
        assert_eq!(e.to_power_sum().unwrap(), triangle());
    }

    #[test]
    fn p21_in_schur() {
        let s = SymFunc::p_monomial(part(&[2, 1])).convert(Basis::S).unwrap();
        let expected = SymFunc::from_terms(
            3,
            Basis::S,
            [(part(&[3]), coeff_int(1)), (part(&[1, 1, 1]), coeff_int(-1))],
        )
        .unwrap();
        assert_eq!(s, expected);
    }

    #[test]
    fn p11_in_monomials() {
        let m = SymFunc::p_monomial(part(&[1, 1])).convert(Basis::M).unwrap();
        let expected = SymFunc::from_terms(
            2,
            Basis::M,
            [(part(&[2]), coeff_int(1)), (part(&[1, 1]), coeff_int(2))],
        )
        .unwrap();
        assert_eq!(m, expected);
        assert_eq!(m.to_power_sum().unwrap(), SymFunc::p_monomial(part(&[1, 1])));
    }

    #[test]
    fn p_one_power_in_monomials_is_multinomial() {
        // p_1^n = Σ_μ n!/∏μ_i! m_μ.
        let n = 5;
        let m = SymFunc::p_monomial(Partition::column(n)).convert(Basis::M).unwrap();
        for mu in partitions_of(n) {
            let fact = |k: usize| (1..=k as i64).product::<i64>();
            let expected = fact(n) / mu.parts().iter().map(|&p| fact(p)).product::<i64>();
            assert_eq!(m.coeff(&mu), coeff_int(expected), "{mu}");
        }
    }

    #[test]
    fn schur_positivity() {
        let verdict = triangle().is_schur_positive().unwrap();
        assert!(verdict.positive);
        assert_eq!(verdict.describe(), "POSITIVE");
        let p11 = SymFunc::p_monomial(part(&[1, 1])).is_schur_positive().unwrap();
        assert!(p11.positive);
        assert_eq!(p11.expansion.len(), 2);
        let p2 = SymFunc::p_monomial(part(&[2])).is_schur_positive().unwrap();
        assert!(!p2.positive);
        assert_eq!(p2.witness, Some((part(&[1, 1]), coeff_int(-1))));
    }

    #[test]
    fn requires_power_sums() {
        let e = SymFunc::e_monomial(part(&[2]));
        assert!(matches!(e.convert(Basis::S), Err(Error::NotPowerSum('e'))));
    }

    #[test]
    fn degree_zero_constants() {
        let one = SymFunc::one().scale(&coeff_int(3));
        for b in [Basis::E, Basis::M, Basis::S] {
            let c = one.convert(b).unwrap();
            assert_eq!(c.basis(), b);
            assert_eq!(c.coeff(&Partition::empty()), coeff_int(3));
            assert_eq!(c.to_power_sum().unwrap(), one);
        }
    }

    #[test]
    fn monomial_counts_match_truncation() {
        for n in 1..=6 {
            for lambda in partitions_of(n) {
                let image = SymFunc::p_monomial(lambda.clone()).truncate(n).unwrap();
                for mu in partitions_of(n) {
                    let mut e: Vec<u32> = mu.parts().iter().map(|&x| x as u32).collect();
                    e.resize(n, 0);
                    assert_eq!(int(p_in_m(&lambda, &mu)), image.coeff(&e), "{lambda} {mu}");
                }
            }
        }
    }

    #[test]
    fn large_degree_conversions() {
        let n = 14;
        let factorial: i64 = (1..=n as i64).product();
        let e_n = SymFunc::e_monomial(Partition::row(n)).scale(&coeff_int(factorial));
        let p = e_n.to_power_sum().unwrap();
        assert_eq!(p.convert(Basis::E).unwrap(), e_n);
        let m = SymFunc::p_monomial(Partition::column(n)).convert(Basis::M).unwrap();
        assert_eq!(m.coeff(&Partition::column(n)), coeff_int(factorial));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]

        #[test]
        fn schur_round_trip(f in (1usize..=6).prop_flat_map(arb_p_element)) {
            let s = f.convert(Basis::S).unwrap();
            prop_assert_eq!(s.to_power_sum().unwrap(), f);
        }

        #[test]
        fn elementary_round_trip(f in (1usize..=5).prop_flat_map(arb_p_element)) {
            let e = f.convert(Basis::E).unwrap();
            prop_assert_eq!(e.to_power_sum().unwrap(), f.clone());
            // Independent route: compare n-variable images.
            let n = f.degree();
            prop_assert_eq!(e.truncate(n).unwrap(), f.truncate(n).unwrap());
        }

        #[test]
        fn monomial_round_trip(f in (1usize..=5).prop_flat_map(arb_p_element)) {
            let m = f.convert(Basis::M).unwrap();
            prop_assert_eq!(m.to_power_sum().unwrap(), f);
        }
    }
}
