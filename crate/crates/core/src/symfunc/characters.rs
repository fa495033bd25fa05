//! Irreducible characters of the symmetric group by the Murnaghan–Nakayama
//! rule.
//!
//! Border strips are removed on the beta-set (first-column hook lengths) of
//! the shape: a strip of length `r` corresponds to moving one bead from `b`
//! to an unoccupied `b - r`, with sign `(-1)^(beads strictly between)`.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::partition::Partition;

/// Memo table for `χ^μ(λ)`, keyed by `(shape, remaining cycle type)`.
///
/// One table per worker; it is not shared across threads.
#[derive(Debug, Default)]
pub struct CharacterTable {
    memo: HashMap<(Vec<usize>, Vec<usize>), BigInt>,
}

impl CharacterTable {
    pub fn new() -> Self {
        CharacterTable::default()
    }

    /// `χ^shape` evaluated on a permutation of cycle type `cycles`.
    pub fn value(&mut self, shape: &Partition, cycles: &Partition) -> BigInt {
        self.eval(shape.parts(), cycles.parts())
    }

    fn eval(&mut self, shape: &[usize], cycles: &[usize]) -> BigInt {
        let Some((&r, rest)) = cycles.split_first() else {
            return if shape.is_empty() { BigInt::from(1) } else { BigInt::zero() };
        };
        let key = (shape.to_vec(), cycles.to_vec());
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let mut total = BigInt::zero();
        for (smaller, negative) in remove_border_strips(shape, r) {
            let v = self.eval(&smaller, rest);
            if negative {
                total -= v;
            } else {
                total += v;
            }
        }
        self.memo.insert(key, total.clone());
        total
    }
}

/// All shapes obtained by removing a border strip of length `r`, with
/// whether the strip has odd height (negative sign).
fn remove_border_strips(shape: &[usize], r: usize) -> Vec<(Vec<usize>, bool)> {
    let len = shape.len();
    let beta: Vec<usize> = shape.iter().enumerate().map(|(i, &p)| p + len - 1 - i).collect();
    let mut out = Vec::new();
    for (idx, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let target = b - r;
        let between = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut moved = beta.clone();
        moved[idx] = target;
        moved.sort_unstable_by(|x, y| y.cmp(x));
        let parts: Vec<usize> = moved
            .iter()
            .enumerate()
            .map(|(i, &x)| x - (len - 1 - i))
            .filter(|&p| p > 0)
            .collect();
        out.push((parts, between % 2 == 1));
    }
    out
}

/// `χ^μ(λ)` with a fresh memo table.
pub fn mn_character(mu: &Partition, lambda: &Partition) -> BigInt {
    CharacterTable::new().value(mu, lambda)
}
