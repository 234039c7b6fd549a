use num_bigint::BigInt;
use num_traits::{Pow, Signed};

use super::automorphism::DiagonalAutomorphism;
use crate::abelian::QuotientPresentation;
use crate::polyforms::{Part, SimpleType};

/// `exps_j = (1-d)^{j-1}` for `j = 1..len`, over denominator `n`.
fn geometric(d: u32, len: u32, n: BigInt) -> DiagonalAutomorphism {
    let ratio = BigInt::from(1) - BigInt::from(d);
    let mut exps = Vec::with_capacity(len as usize);
    let mut cur = BigInt::from(1);
    for _ in 0..len {
        exps.push(cur.clone());
        cur *= &ratio;
    }
    DiagonalAutomorphism::with_literal(n, exps).expect("positive denominator and nonempty tuple")
}

/// `|1 - (1-d)^a|`, the linear order of the Klein generator.
pub fn klein_order(d: u32, a: u32) -> BigInt {
    (BigInt::from(1) - (BigInt::from(1) - BigInt::from(d)).pow(a)).abs()
}

/// `d (d-1)^{b-1}`, the linear order of the chain generator.
pub fn chain_order(d: u32, b: u32) -> BigInt {
    BigInt::from(d) * BigInt::from(d - 1).pow(b - 1)
}

/// Generator of the diagonal symmetries of `x_1^{d-1} x_2 + ... + x_a^{d-1} x_1`.
pub fn klein_generator(d: u32, a: u32) -> DiagonalAutomorphism {
    assert!(a >= 1, "Klein part needs a >= 1");
    geometric(d, a, klein_order(d, a))
}

/// Generator of the diagonal symmetries of `x_1^{d-1} x_2 + ... + x_b^d`,
/// lifted so that it fixes the form exactly.
pub fn chain_generator(d: u32, b: u32) -> DiagonalAutomorphism {
    assert!(b >= 1, "chain part needs b >= 1");
    geometric(d, b, chain_order(d, b))
}

pub fn part_generator(d: u32, part: Part) -> DiagonalAutomorphism {
    match part {
        Part::Klein(a) => klein_generator(d, a),
        Part::Chain(b) => chain_generator(d, b),
    }
}

/// `(prod Z/m_i) / <c>` for the simple type `t`, one summand per part in
/// layout order. Each summand is generated by its part generator and `c`
/// is the scalar `exp(2 pi i/d)` seen in each summand.
pub fn predicted_group(d: u32, t: &SimpleType) -> QuotientPresentation {
    let mut m = Vec::new();
    let mut c = Vec::new();
    for part in t.parts() {
        let order = match part {
            Part::Klein(a) => klein_order(d, a),
            Part::Chain(b) => chain_order(d, b),
        };
        c.push(&order / d);
        m.push(order);
    }
    QuotientPresentation::new(m, c).expect("positive orders with matching lengths")
}
