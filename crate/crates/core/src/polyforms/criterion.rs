//! A support-level necessary condition for smoothness.
//!
//! If some smooth form has support `S`, then for all disjoint index sets
//! `A`, `B` with `|A| > |B|` there is a monomial in `S` whose total degree in
//! the `A` variables is at least `d - 1` and which avoids every `B` variable.
//! A failing pair proves that no form with this support is smooth. Passing
//! proves nothing.

use super::support::Support;
use super::PolyError;

pub const DEFAULT_PAIR_BUDGET: u64 = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NecessaryCheck {
    Pass,
    /// 0-based variable sets with no qualifying monomial.
    Counterexample {
        a: Vec<usize>,
        b: Vec<usize>,
    },
}

/// Number of `(A, B)` pairs scanned for `n` variables and `|B| <= max_b`.
pub fn pair_count(n: usize, max_b: usize) -> u128 {
    let mut total: u128 = 0;
    for bs in 0..=max_b.min(n) {
        let rest = n - bs;
        let a_choices: u128 = (bs + 1..=rest).map(|k| binomial(rest, k)).sum();
        total = total.saturating_add(binomial(n, bs).saturating_mul(a_choices));
    }
    total
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// Scans pairs with `|B|` ascending, then `B` lexicographic, then `|A|`
/// ascending, then `A` lexicographic; returns the first failure.
pub fn necessary_smoothness_check(s: &Support, max_b: usize, budget: u64) -> Result<NecessaryCheck, PolyError> {
    let n = s.n_vars();
    let count = pair_count(n, max_b);
    if count > u128::from(budget) {
        return Err(PolyError::ComplexityRefusal { pairs: count, budget });
    }
    let need = s.degree() - 1;
    for bs in 0..=max_b.min(n) {
        for b in combinations(n, bs) {
            let free: Vec<usize> = (0..n).filter(|i| !b.contains(i)).collect();
            let usable: Vec<&[u32]> =
                s.monomials().iter().map(|m| m.0.as_slice()).filter(|m| b.iter().all(|&j| m[j] == 0)).collect();
            for size in bs + 1..=free.len() {
                for pick in combinations(free.len(), size) {
                    let a: Vec<usize> = pick.iter().map(|&i| free[i]).collect();
                    let ok = usable.iter().any(|m| a.iter().map(|&i| m[i]).sum::<u32>() >= need);
                    if !ok {
                        return Ok(NecessaryCheck::Counterexample { a, b });
                    }
                }
            }
        }
    }
    Ok(NecessaryCheck::Pass)
}

/// k-subsets of `0..n` in lexicographic order.
fn combinations(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut current: Option<Vec<usize>> = if k <= n { Some((0..k).collect()) } else { None };
    std::iter::from_fn(move || {
        let out = current.clone()?;
        let c = current.as_mut().expect("checked");
        let mut i = k;
        loop {
            if i == 0 {
                current = None;
                break;
            }
            i -= 1;
            if c[i] < n - k + i {
                c[i] += 1;
                for j in i + 1..k {
                    c[j] = c[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    })
}
