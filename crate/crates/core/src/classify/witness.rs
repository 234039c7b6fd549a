use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::types::{enumerate_simple_types_with_budget, type_exponent};
use super::{check_params, ClassifyError, DEFAULT_BUDGET};
use crate::abelian::{small_prime_factors, valuation};
use crate::diagact::{chain_generator, klein_generator, part_generator, symmetry_group, DiagonalAutomorphism};
use crate::polyforms::{simple_support, Part, SimpleType, Support};

/// How a witness automorphism was produced.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WitnessMethod {
    /// A product of powers of the per-block generators.
    BlockGenerators,
    /// A power of a lattice generator of the full symmetry group.
    Lattice,
}

/// A smooth simple form on `N` variables with an automorphism of the
/// requested order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    /// The type found by the search (at most `N` variables).
    pub core: SimpleType,
    /// `core` padded with `K1` blocks to exactly `N` variables.
    pub simple_type: SimpleType,
    pub support: Support,
    pub automorphism: DiagonalAutomorphism,
    /// Residue `c` with `g F = exp(2 pi i c/n) F`, `n` the automorphism's denominator.
    pub character: BigInt,
    pub pgl_order: BigInt,
    pub method: WitnessMethod,
}

pub fn witness_for_order(d: u32, n_vars: u32, n: &BigInt) -> Result<Option<Witness>, ClassifyError> {
    witness_for_order_with_budget(d, n_vars, n, DEFAULT_BUDGET)
}

/// Searches simple types with at most `n_vars` variables and at most one
/// chain block, fewest blocks first, then by block sizes in layout order.
/// The first type whose symmetry group has exponent divisible by `n` is
/// padded to `n_vars` variables and an explicit automorphism is built and
/// verified.
pub fn witness_for_order_with_budget(
    d: u32,
    n_vars: u32,
    n: &BigInt,
    budget: u64,
) -> Result<Option<Witness>, ClassifyError> {
    check_params(d, n_vars)?;
    if n <= &BigInt::zero() {
        return Err(ClassifyError::NonPositiveOrder(n.clone()));
    }
    let mut cores = enumerate_simple_types_with_budget(n_vars, false, true, budget)?;
    cores.sort_by(SimpleType::search_cmp);
    let Some(core) = cores.into_iter().find(|t| (type_exponent(d, t) % n).is_zero()) else {
        return Ok(None);
    };
    let padded = core.padded_to(n_vars);
    let support = simple_support(d, &padded)?;
    if !padded.index_vector(d)?.is_smooth_f_i() {
        return Err(ClassifyError::VerificationFailure(format!("{padded} is not smooth")));
    }
    let candidates = [
        block_element(d, &padded, n).map(|g| (g, WitnessMethod::BlockGenerators)),
        lattice_element(&support, n).map(|g| (g, WitnessMethod::Lattice)),
    ];
    for (g, method) in candidates.into_iter().flatten() {
        if let Ok(character) = g.acts_with_character(&support) {
            let order = g.pgl_order();
            if &order == n {
                return Ok(Some(Witness {
                    core,
                    simple_type: padded,
                    support,
                    automorphism: g,
                    character,
                    pgl_order: order,
                    method,
                }));
            }
        }
    }
    Err(ClassifyError::VerificationFailure(format!("no automorphism of order {n} found on {padded}")))
}

/// The element of order `n` built from block generators.
///
/// One block: the Klein generator, or the `d`-th power of the chain
/// generator, raised to `exponent / n`. Several blocks: for each prime `p`
/// of `d` one block of least `p`-adic valuation (chain blocks win ties,
/// then later blocks) has its generator raised to `p`; the product of the
/// adjusted generators has order `lcm(m_i)` modulo scalars, and a power
/// brings it down to `n`.
pub fn block_element(d: u32, t: &SimpleType, n: &BigInt) -> Option<DiagonalAutomorphism> {
    let parts = t.parts();
    let total = t.total() as usize;
    if parts.len() == 1 {
        let g = match parts[0] {
            Part::Klein(a) => klein_generator(d, a),
            Part::Chain(b) => chain_generator(d, b).pow(&BigInt::from(d)),
        };
        let exponent = g.pgl_order();
        return (&exponent % n).is_zero().then(|| g.pow(&(exponent / n)));
    }
    let gens: Vec<DiagonalAutomorphism> = parts.iter().map(|&p| part_generator(d, p)).collect();
    let orders: Vec<BigInt> = gens.iter().map(|g| g.denominator().clone()).collect();
    let l = orders.iter().fold(BigInt::one(), |acc, m| acc.lcm(m));
    if !(&l % n).is_zero() {
        return None;
    }
    let mut powers = vec![BigInt::one(); parts.len()];
    for p in small_prime_factors(u64::from(d)) {
        let j = (0..parts.len())
            .min_by(|&i, &j| {
                valuation(&orders[i], p)
                    .cmp(&valuation(&orders[j], p))
                    .then_with(|| parts[j].is_chain().cmp(&parts[i].is_chain()))
                    .then_with(|| j.cmp(&i))
            })
            .expect("at least two blocks");
        powers[j] *= p;
    }
    let mut x = DiagonalAutomorphism::identity(total);
    for ((g, k), off) in gens.iter().zip(&powers).zip(t.offsets()) {
        let piece = g.pow(k).embed(off, total).ok()?;
        x = x.compose(&piece).ok()?;
    }
    if x.pgl_order() != l {
        return None;
    }
    Some(x.pow(&(l / n)))
}

/// A power of the generator of the largest invariant factor of the full
/// diagonal symmetry group.
fn lattice_element(s: &Support, n: &BigInt) -> Option<DiagonalAutomorphism> {
    let group = symmetry_group(s).ok()?;
    let r = group.finite()?;
    let g = r.generators.last()?;
    let e = r.group.invariant_factors().last()?;
    (e % n).is_zero().then(|| g.pow(&(e / n)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table_row(n: i64, t: &str, g: &str) {
        let w = witness_for_order(3, 6, &BigInt::from(n)).unwrap().unwrap();
        assert_eq!(w.simple_type.to_string(), t);
        let expected: DiagonalAutomorphism = g.parse().unwrap();
        assert!(w.automorphism.projectively_equal(&expected), "{} vs {}", w.automorphism, expected);
        assert_eq!(w.method, WitnessMethod::BlockGenerators);
        assert_eq!(w.pgl_order, BigInt::from(n));
    }

    #[test]
    fn reproduces_cubic_fourfold_rows() {
        table_row(21, "K6", "1/63(1,-2,4,-8,16,-32)");
        table_row(30, "T2+K4", "1/30(15,0,2,-4,8,-16)");
        table_row(32, "T6", "1/32(1,-2,4,-8,16,0)");
        table_row(33, "K1+K5", "1/33(11,3,-6,12,9,-18)");
        table_row(36, "T3+K3", "1/36(9,-18,0,4,-8,16)");
        table_row(48, "T5+K1", "1/48(3,-6,12,-24,0,16)");
    }

    #[test]
    fn exact_table_tuples() {
        let w = witness_for_order(3, 6, &BigInt::from(48)).unwrap().unwrap();
        assert_eq!(w.automorphism, "1/48(3,-6,12,-24,0,16)".parse().unwrap());
        let w = witness_for_order(3, 6, &BigInt::from(30)).unwrap().unwrap();
        assert_eq!(w.automorphism, "1/30(15,0,2,-4,8,-16)".parse().unwrap());
    }

    #[test]
    fn identity_and_missing_orders() {
        let w = witness_for_order(3, 6, &BigInt::one()).unwrap().unwrap();
        assert_eq!(w.simple_type.to_string(), "K1+K1+K1+K1+K1+K1");
        assert!(w.automorphism.projectively_equal(&DiagonalAutomorphism::identity(6)));
        assert_eq!(witness_for_order(3, 6, &BigInt::from(49)).unwrap(), None);
        assert_eq!(witness_for_order(3, 6, &BigInt::from(50)).unwrap(), None);
        assert!(witness_for_order(3, 6, &BigInt::zero()).is_err());
    }

    #[test]
    fn divisors_of_maximal_orders_have_witnesses() {
        for (d, n) in [(3, 4), (3, 5), (4, 4)] {
            for m in super::super::order_set(d, n).unwrap().expand(&Default::default()).unwrap() {
                let w = witness_for_order(d, n, &m).unwrap().unwrap_or_else(|| panic!("d={d} N={n} order {m}"));
                assert_eq!(w.pgl_order, m);
            }
        }
    }
}
