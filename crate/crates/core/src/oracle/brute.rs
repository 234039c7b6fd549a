use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::OracleError;
use crate::abelian::{FiniteAbelianGroup, QuotientPresentation};
use crate::polyforms::Support;

pub const MAX_BRUTE_VARS: usize = 4;
pub const MAX_BRUTE_MODULUS: u64 = 200;
pub const MAX_COSET_ELEMENTS: u64 = 100_000;

/// Diagonal symmetries of `s` whose exponents have denominator dividing `m`,
/// found by trying every tuple `(0, e_2, ..., e_N)` in `(Z/m)^N`.
///
/// If `m` is a multiple of the true exponent the result is the whole
/// group; otherwise it is the `m`-torsion subgroup. The structure is read
/// off from element-order counts, not from a normal form.
pub fn brute_force_symmetry_group(s: &Support, m: u64) -> Result<FiniteAbelianGroup, OracleError> {
    let n = s.n_vars();
    if m == 0 {
        return Err(OracleError::Modulus);
    }
    if n > MAX_BRUTE_VARS || m > MAX_BRUTE_MODULUS {
        return Err(OracleError::BudgetExceeded(format!(
            "{n} variables with modulus {m} (limits {MAX_BRUTE_VARS} and {MAX_BRUTE_MODULUS})"
        )));
    }
    let mut orders = Vec::new();
    let mut e = vec![0u64; n];
    loop {
        let mut residues =
            s.monomials().iter().map(|a| a.0.iter().zip(&e).map(|(&x, &y)| u64::from(x) * y).sum::<u64>() % m);
        let first = residues.next().expect("nonempty support");
        if residues.all(|r| r == first) {
            orders.push(e.iter().fold(1u64, |acc, &x| acc.lcm(&(m / m.gcd(&x)))));
        }
        // Odometer over coordinates 2..N.
        let mut i = 1;
        while i < n {
            e[i] += 1;
            if e[i] < m {
                break;
            }
            e[i] = 0;
            i += 1;
        }
        if i >= n {
            break;
        }
    }
    Ok(group_from_element_orders(&orders))
}

/// Rebuilds a finite abelian group from the multiset of its element orders.
///
/// For a prime `p`, the number of elements of order dividing `p^k` is
/// `p^(sum_i min(k, e_i))` where `p^{e_i}` are the `p`-primary cyclic
/// factors; successive ratios give how many factors have `e_i >= k`.
pub fn group_from_element_orders(orders: &[u64]) -> FiniteAbelianGroup {
    let exponent = orders.iter().fold(1u64, |acc, x| acc.lcm(x));
    let mut per_prime: Vec<Vec<u32>> = Vec::new();
    let mut primes = Vec::new();
    for p in prime_factors(exponent) {
        let mut ranks = Vec::new();
        let mut prev_log = 0u32;
        let mut k = 1u32;
        loop {
            let pk = p.pow(k);
            let count = orders.iter().filter(|&&o| pk % o == 0).count() as u64;
            let log = ilog(count, p);
            if log == prev_log {
                break;
            }
            ranks.push(log - prev_log);
            prev_log = log;
            k += 1;
        }
        // ranks[k-1] = #{i : e_i >= k}; expand into a descending exponent list.
        let mut exps = Vec::new();
        let top = ranks.first().copied().unwrap_or(0);
        for idx in 0..top {
            exps.push(ranks.iter().filter(|&&r| r > idx).count() as u32);
        }
        primes.push(p);
        per_prime.push(exps);
    }
    let width = per_prime.iter().map(Vec::len).max().unwrap_or(0);
    let mut factors: Vec<BigInt> = (0..width)
        .map(|j| {
            primes
                .iter()
                .zip(&per_prime)
                .map(|(&p, exps)| BigInt::from(p).pow(exps.get(j).copied().unwrap_or(0)))
                .product()
        })
        .collect();
    factors.reverse();
    FiniteAbelianGroup::from_invariant_factors(factors).expect("aligned prime powers form a divisor chain")
}

fn ilog(mut x: u64, p: u64) -> u32 {
    let mut k = 0;
    while x > 1 {
        debug_assert_eq!(x % p, 0, "subgroup sizes are prime powers");
        x /= p;
        k += 1;
    }
    k
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Orders of all elements of `(prod Z/m_i) / <c>`, found by walking every
/// element and collapsing cosets. Keys are orders, values multiplicities.
pub fn coset_enumerate(p: &QuotientPresentation) -> Result<BTreeMap<BigInt, u64>, OracleError> {
    let ms: Option<Vec<u64>> = p.cyclic_orders().iter().map(ToPrimitive::to_u64).collect();
    let ms = ms.ok_or_else(|| OracleError::BudgetExceeded("cyclic orders exceed 64 bits".into()))?;
    let size = ms.iter().try_fold(1u64, |acc, &m| acc.checked_mul(m).filter(|&x| x <= MAX_COSET_ELEMENTS));
    let size = size
        .ok_or_else(|| OracleError::BudgetExceeded(format!("product of cyclic orders exceeds {MAX_COSET_ELEMENTS}")))?;
    let c: Vec<u64> = p
        .killed_element()
        .iter()
        .zip(&ms)
        .map(|(x, &m)| x.mod_floor(&BigInt::from(m)).to_u64().expect("reduced"))
        .collect();

    let index = |x: &[u64]| x.iter().zip(&ms).fold(0u64, |acc, (&a, &m)| acc * m + a) as usize;
    // Index of x + k*y, without materializing the sum.
    let index_of_sum = |x: &[u64], y: &[u64], k: u64| {
        x.iter().zip(y).zip(&ms).fold(0u64, |acc, ((&a, &b), &m)| acc * m + (a + (k % m) * b) % m) as usize
    };
    let zero = vec![0u64; ms.len()];
    let mut subgroup = vec![zero.clone()];
    loop {
        let last = subgroup.last().expect("nonempty");
        let next: Vec<u64> = last.iter().zip(&c).zip(&ms).map(|((&a, &b), &m)| (a + b) % m).collect();
        if next == zero {
            break;
        }
        subgroup.push(next);
    }
    let mut in_h = vec![false; size as usize];
    for hv in &subgroup {
        in_h[index(hv)] = true;
    }

    let mut seen = vec![false; size as usize];
    let mut counts = BTreeMap::new();
    let mut x = zero.clone();
    for _ in 0..size {
        if !seen[index(&x)] {
            for hv in &subgroup {
                seen[index_of_sum(&x, hv, 1)] = true;
            }
            let lin = x.iter().zip(&ms).fold(1u64, |acc, (&a, &m)| acc.lcm(&(m / m.gcd(&a))));
            // The k with k*x in H form the ideal (order), and lin lies in it:
            // strip primes from lin while that stays true.
            let mut order = lin;
            for p in prime_factors(lin) {
                while order % p == 0 && in_h[index_of_sum(&zero, &x, order / p)] {
                    order /= p;
                }
            }
            *counts.entry(BigInt::from(order)).or_insert(0) += 1;
        }
        for (xi, &m) in x.iter_mut().zip(&ms).rev() {
            *xi += 1;
            if *xi < m {
                break;
            }
            *xi = 0;
        }
    }
    Ok(counts)
}
