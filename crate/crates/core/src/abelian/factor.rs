//! Integer factorization and divisor enumeration.
//!
//! Trial division up to a configurable bound, Miller-Rabin for the cofactor,
//! then Brent's variant of Pollard rho with a fixed-seed PRNG. If a cofactor
//! survives all of that, the caller gets [`AbelianError::FactorizationLimit`]
//! rather than a partial answer.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint, RandBigInt};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::AbelianError;

/// Seed of the PRNG driving Pollard rho. Recorded in CLI output envelopes.
pub const RHO_SEED: u64 = 0x6879_7065_7273_796d;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorConfig {
    /// Largest trial divisor.
    pub trial_bound: u64,
    /// Number of independent rho restarts per composite cofactor.
    pub rho_attempts: u32,
    /// Iteration cap for a single rho run.
    pub rho_iterations: u64,
}

impl Default for FactorConfig {
    fn default() -> Self {
        FactorConfig { trial_bound: 10_000_000, rho_attempts: 16, rho_iterations: 1 << 22 }
    }
}

/// Prime factorization `n = prod p^e` with primes ascending.
pub fn factorize(n: &BigInt, config: &FactorConfig) -> Result<BTreeMap<BigUint, u32>, AbelianError> {
    if !n.is_positive() {
        return Err(AbelianError::NonPositive(n.clone()));
    }
    let mut rest = n.magnitude().clone();
    let mut out = BTreeMap::new();

    // Cheap small-prime sweep first; the full trial bound is only used if the
    // probabilistic methods give up.
    let quick = config.trial_bound.min(1 << 16);
    trial_divide(&mut rest, 2, quick, &mut out);
    if rest.is_one() {
        return Ok(out);
    }

    let mut rng = ChaCha8Rng::seed_from_u64(RHO_SEED);
    let mut pending = vec![rest];
    let mut stubborn = Vec::new();
    while let Some(m) = pending.pop() {
        if m.is_one() {
            continue;
        }
        if is_probable_prime(&m) {
            *out.entry(m).or_insert(0) += 1;
            continue;
        }
        match pollard_brent(&m, config, &mut rng) {
            Some(f) => {
                let g = &m / &f;
                pending.push(f);
                pending.push(g);
            }
            None => stubborn.push(m),
        }
    }

    for mut m in stubborn {
        trial_divide(&mut m, quick.max(2), config.trial_bound, &mut out);
        if m.is_one() {
            continue;
        }
        if is_probable_prime(&m) {
            *out.entry(m).or_insert(0) += 1;
        } else {
            return Err(AbelianError::FactorizationLimit(BigInt::from(m)));
        }
    }
    Ok(out)
}

fn trial_divide(n: &mut BigUint, from: u64, to: u64, out: &mut BTreeMap<BigUint, u32>) {
    let mut p = from.max(2);
    if p > 2 && p.is_multiple_of(2) {
        p += 1;
    }
    while p <= to {
        let pb = BigUint::from(p);
        if &pb * &pb > *n {
            break;
        }
        let mut e = 0;
        while (&*n % p).is_zero() {
            *n /= p;
            e += 1;
        }
        if e > 0 {
            *out.entry(pb).or_insert(0) += e;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    // Whatever is left below p^2 is prime.
    if !n.is_one() {
        let pb = BigUint::from(p);
        if &pb * &pb > *n {
            let q = std::mem::replace(n, BigUint::one());
            *out.entry(q).or_insert(0) += 1;
        }
    }
}

const MR_BASES: [u32; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];

/// Miller-Rabin with the first thirteen primes as bases; deterministic below
/// 3.3 * 10^24.
pub fn is_probable_prime(n: &BigUint) -> bool {
    let two = BigUint::from(2u32);
    if *n < two {
        return false;
    }
    for &p in &MR_BASES {
        if *n == BigUint::from(p) {
            return true;
        }
        if (n % p).is_zero() {
            return false;
        }
    }
    let n_minus_one = n - 1u32;
    let s = n_minus_one.trailing_zeros().unwrap_or(0);
    let d = &n_minus_one >> s;
    'witness: for &a in &MR_BASES {
        let mut x = BigUint::from(a).modpow(&d, n);
        if x.is_one() || x == n_minus_one {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&two, n);
            if x == n_minus_one {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn pollard_brent(n: &BigUint, config: &FactorConfig, rng: &mut ChaCha8Rng) -> Option<BigUint> {
    if n.is_even() {
        return Some(BigUint::from(2u32));
    }
    let one = BigUint::one();
    for _ in 0..config.rho_attempts {
        let c = rng.gen_biguint_range(&one, n);
        let mut y = rng.gen_biguint_range(&one, n);
        let m = 128u64;
        let mut g = one.clone();
        let mut r = 1u64;
        let mut q = one.clone();
        let mut x = y.clone();
        let mut ys = y.clone();
        let mut spent = 0u64;
        let f = |v: &BigUint| (v * v + &c) % n;
        while g.is_one() && spent < config.rho_iterations {
            x = y.clone();
            for _ in 0..r {
                y = f(&y);
            }
            let mut k = 0;
            while k < r && g.is_one() {
                ys = y.clone();
                for _ in 0..m.min(r - k) {
                    y = f(&y);
                    let diff = if x > y { &x - &y } else { &y - &x };
                    q = (q * diff) % n;
                }
                g = q.gcd(n);
                k += m;
            }
            spent += r;
            r *= 2;
        }
        if g == *n {
            // Backtrack one step at a time.
            loop {
                ys = f(&ys);
                let diff = if x > ys { &x - &ys } else { &ys - &x };
                g = diff.gcd(n);
                if !g.is_one() {
                    break;
                }
            }
        }
        if !g.is_one() && g != *n {
            return Some(g);
        }
    }
    None
}

/// All positive divisors of `n`, ascending.
pub fn divisors(n: &BigInt, config: &FactorConfig) -> Result<Vec<BigInt>, AbelianError> {
    let factors = factorize(n, config)?;
    let mut out = vec![BigInt::one()];
    for (p, e) in factors {
        let p = BigInt::from(p);
        let base_len = out.len();
        let mut power = BigInt::one();
        for _ in 0..e {
            power *= &p;
            for i in 0..base_len {
                out.push(&out[i] * &power);
            }
        }
    }
    out.sort();
    Ok(out)
}

/// Distinct prime factors of a machine-sized integer.
pub fn small_prime_factors(mut n: u64) -> Vec<u64> {
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

/// Exponent of the prime `p` in `n` (`n != 0`).
pub fn valuation(n: &BigInt, p: u64) -> u32 {
    let mut n = n.abs();
    let mut e = 0;
    while !n.is_zero() && (&n % p).is_zero() {
        n /= p;
        e += 1;
    }
    e
}
