//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each and
//! exits nonzero if any criterion fails. Built with `harness = false`, so the
//! lines always show up in `cargo test` output.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use hypersym::abelian::{
    checked_smith_normal_form, element_order_set, max_element_order, quotient_group, smith_normal_form,
    FiniteAbelianGroup, Matrix, QuotientPresentation,
};
use hypersym::classify::admitting_types;
use hypersym::diagact::{predicted_group, symmetry_group, DiagonalAutomorphism};
use hypersym::oracle::{
    brute_force_symmetry_group, coset_enumerate, verify_singular_point, EvalMode, MAX_COSET_ELEMENTS,
};
use hypersym::polyforms::{simple_support, IndexVector, Part, SimpleType, Support};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

const SEED: u64 = 20_240_611;

type Outcome = Result<String, String>;

struct Criterion {
    name: &'static str,
    limit: Option<Duration>,
    check: fn() -> Outcome,
}

fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

/// Every simple type on exactly `total` variables, built here from scratch
/// rather than through the library's enumerator.
fn all_types(total: u32) -> Vec<SimpleType> {
    fn go(left: u32, max: Part, acc: &mut Vec<Part>, out: &mut Vec<SimpleType>) {
        if left == 0 {
            out.push(SimpleType::from_parts(acc).unwrap());
            return;
        }
        let mut options = Vec::new();
        for s in 1..=left {
            options.push(Part::Klein(s));
            if s >= 2 {
                options.push(Part::Chain(s));
            }
        }
        for p in options.into_iter().filter(|p| *p <= max) {
            acc.push(p);
            go(left - p.size(), p, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    go(total, Part::Klein(total), &mut Vec::new(), &mut out);
    out
}

fn types_up_to(total: u32) -> Vec<SimpleType> {
    (1..=total).flat_map(all_types).collect()
}

/// The common residue `sum e_i sigma_i mod n` over all monomials, if there is one.
fn character(g: &DiagonalAutomorphism, s: &Support) -> Option<BigInt> {
    let n = g.denominator();
    let mut residues = s
        .monomials()
        .iter()
        .map(|m| m.0.iter().zip(g.exps()).fold(BigInt::zero(), |acc, (&e, x)| acc + BigInt::from(e) * x).mod_floor(n));
    let first = residues.next()?;
    residues.all(|r| r == first).then_some(first)
}

/// Order of `g` modulo scalars, by walking powers until one is scalar.
fn projective_order_by_powers(g: &DiagonalAutomorphism) -> u64 {
    let n = g.denominator();
    let e = g.exps();
    (1u64..)
        .find(|&k| {
            let k = BigInt::from(k);
            e.iter().all(|x| ((x - &e[0]) * &k).mod_floor(n).is_zero())
        })
        .unwrap()
}

fn maximal_orders_from_cli(d: &str, n: &str) -> Result<Vec<u64>, String> {
    let out = hypersym::cli::run(["hypersym", "orders", "--d", d, "--N", n, "--json"]).map_err(|e| e.to_string())?;
    let v: Value = serde_json::from_str(&out).map_err(|e| e.to_string())?;
    v["result"]["maximal"]
        .as_array()
        .ok_or("no maximal array")?
        .iter()
        .map(|x| x.as_str().and_then(|s| s.parse().ok()).ok_or_else(|| format!("bad entry {x}")))
        .collect()
}

fn orders_exact(d: &str, n: &str, expected: &[u64]) -> Outcome {
    let got = maximal_orders_from_cli(d, n)?;
    if got == expected {
        Ok(format!("{got:?}"))
    } else {
        Err(format!("expected {expected:?}, got {got:?}"))
    }
}

fn criterion_orders_cubic_fourfold() -> Outcome {
    orders_exact("3", "6", &[21, 30, 32, 33, 36, 48])
}

fn criterion_orders_cubic_threefold() -> Outcome {
    orders_exact("3", "5", &[11, 15, 16, 18, 24])
}

const TABLE: [(u64, &str, &str); 6] = [
    (21, "x1^2 x2+ x2^2 x3+ x3^2 x4+ x4^2 x5+ x5^2 x6+ x6^2 x1", "1/63(1, -2, 4, -8, 16, -32)"),
    (30, "x1^2 x2+ x2^3 + x3^2 x4+ x4^2 x5+x5^2 x6+x6^2 x3", "1/30(15, 0, 2, -4, 8, -16)"),
    (32, "x1^2 x2+ x2^2 x3+ x3^2 x4+ x4^2 x5+ x5^2 x6+ x6^3", "1/32(1, -2, 4, -8, 16, 0)"),
    (33, "x1^3+ x2^2 x3+x3^2 x4+x4^2 x5+x5^2 x6+x6^2 x2", "1/33(11, 3, -6, 12, 9, -18)"),
    (36, "x1^2 x2+ x2^2 x3+ x3^3+ x4^2 x5+ x5^2 x6+ x6^2 x4", "1/36(9, -18, 0, 4, -8, 16)"),
    (48, "x1^2 x2+ x2^2 x3+ x3^2 x4+ x4^2 x5+ x5^3+ x6^3", "1/48(3, -6, 12, -24, 0, 16)"),
];

fn criterion_table_rows() -> Outcome {
    for (order, poly, auto) in TABLE {
        let s = Support::parse_polynomial(3, 6, poly).map_err(|e| e.to_string())?;
        let g = symmetry_group(&s).map_err(|e| e.to_string())?;
        let g = g.finite().ok_or_else(|| format!("{order}: group is infinite"))?;
        if g.group != FiniteAbelianGroup::cyclic(order) {
            return Err(format!("{order}: group {:?}", g.group.invariant_factors()));
        }
        let h: DiagonalAutomorphism = auto.parse().map_err(|e| format!("{auto}: {e}"))?;
        if character(&h, &s).is_none() {
            return Err(format!("{auto} is not invariant"));
        }
        if h.acts_with_character(&s).is_err() {
            return Err(format!("{auto}: library disagrees on invariance"));
        }
        if h.pgl_order() != BigInt::from(order) || projective_order_by_powers(&h) != order {
            return Err(format!("{auto}: projective order {}", h.pgl_order()));
        }
    }
    Ok("6 rows".into())
}

fn criterion_uniqueness() -> Outcome {
    let expected = [(21, "K6"), (30, "T2+K4"), (32, "T6"), (33, "K1+K5"), (36, "T3+K3"), (48, "T5+K1")];
    let candidates = all_types(6);
    let groups: Vec<(SimpleType, BigInt)> = candidates
        .iter()
        .map(|t| {
            let s = simple_support(3, t).unwrap();
            let g = symmetry_group(&s).unwrap();
            (t.clone(), max_element_order(&g.finite().expect("simple forms are smooth").group))
        })
        .collect();
    for (n, name) in expected {
        let n = BigInt::from(n);
        let want: SimpleType = name.parse().unwrap();
        let found: Vec<&SimpleType> = groups.iter().filter(|(_, e)| (e % &n).is_zero()).map(|(t, _)| t).collect();
        if found != [&want] {
            return Err(format!("order {n}: admitted by {found:?}"));
        }
        if admitting_types(3, 6, &n) != [want.clone()] {
            return Err(format!("order {n}: library scan gives {:?}", admitting_types(3, 6, &n)));
        }
    }
    Ok(format!("{} types scanned", candidates.len()))
}

fn criterion_structure_theorem() -> Outcome {
    let mut count = 0;
    for d in [3, 4] {
        for t in types_up_to(6) {
            let predicted = quotient_group(&predicted_group(d, &t));
            let actual = symmetry_group(&simple_support(d, &t).unwrap()).unwrap();
            let actual = &actual.finite().ok_or_else(|| format!("{t} d={d}: infinite"))?.group;
            if &predicted != actual {
                return Err(format!("{t} d={d}: predicted {predicted:?}, computed {actual:?}"));
            }
            count += 1;
        }
    }
    Ok(format!("{count} cases"))
}

fn criterion_oracle() -> Outcome {
    let mut count = 0;
    for t in types_up_to(3) {
        let p = predicted_group(3, &t);
        let m = p.cyclic_orders().iter().fold(BigInt::one(), |acc, x| acc.lcm(x)).to_u64().unwrap();
        let s = simple_support(3, &t).unwrap();
        let brute = brute_force_symmetry_group(&s, m).map_err(|e| e.to_string())?;
        let fast = symmetry_group(&s).unwrap();
        if Some(&brute) != fast.finite().map(|r| &r.group) {
            return Err(format!("{t}: brute force {brute:?}, fast {fast:?}"));
        }
        count += 1;
    }
    Ok(format!("{count} types"))
}

fn index_vectors(d: u32, k: usize) -> impl Iterator<Item = IndexVector> {
    let total = k.pow(k as u32);
    (0..total).map(move |mut code| {
        let targets = (0..k)
            .map(|_| {
                let t = code % k + 1;
                code /= k;
                t
            })
            .collect();
        IndexVector::new(d, targets).unwrap()
    })
}

fn criterion_smoothness() -> Outcome {
    let (mut smooth, mut singular) = (0, 0);
    for d in [3, 4] {
        for k in 1..=5 {
            for iv in index_vectors(d, k) {
                let a = iv.is_smooth_f_i();
                let b = iv.graph_decompose().is_ok();
                let w = iv.singular_witness();
                if a != b || a != w.is_none() {
                    return Err(format!("{iv}: smooth={a}, simple={b}, witness={w:?}"));
                }
                match w {
                    Some(w) if !verify_singular_point(&iv, &w, EvalMode::Exact) => {
                        return Err(format!("{iv}: witness {w} does not verify"));
                    }
                    Some(_) => singular += 1,
                    None => {
                        if iv.graph_decompose().unwrap().total() as usize != k {
                            return Err(format!("{iv}: decomposition loses variables"));
                        }
                        smooth += 1;
                    }
                }
            }
        }
    }
    Ok(format!("{smooth} smooth, {singular} singular"))
}

fn criterion_lemma_presentations() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut cross_checked = 0;
    for _ in 0..500 {
        let d: u64 = rng.gen_range(2..=5);
        let k = rng.gen_range(2..=3);
        let mut m = Vec::new();
        let mut c = Vec::new();
        for _ in 0..k {
            let mi = d * rng.gen_range(1..=500 / d);
            let unit = loop {
                let u = rng.gen_range(1..d);
                if u.gcd(&d) == 1 {
                    break u;
                }
            };
            m.push(mi as i64);
            c.push((mi / d * unit) as i64);
        }
        let p = QuotientPresentation::new(ints(&m), ints(&c)).map_err(|e| e.to_string())?;
        let lcm = m.iter().fold(1i64, |acc, x| acc.lcm(x));
        let set = element_order_set(&p, d).map_err(|e| format!("{m:?} {c:?}: {e}"))?;
        if set.maximal() != [BigInt::from(lcm)] {
            return Err(format!("{m:?} {c:?}: order set {:?}, lcm {lcm}", set.maximal()));
        }
        let g = quotient_group(&p);
        if max_element_order(&g) != BigInt::from(lcm) {
            return Err(format!("{m:?} {c:?}: largest invariant factor {}", max_element_order(&g)));
        }
        if g.order() * BigInt::from(d) != m.iter().map(|&x| BigInt::from(x)).product::<BigInt>() {
            return Err(format!("{m:?} {c:?}: group order {}", g.order()));
        }
        if m.iter().product::<i64>() as u64 <= MAX_COSET_ELEMENTS {
            let orders = coset_enumerate(&p).map_err(|e| e.to_string())?;
            if orders.keys().next_back() != Some(&BigInt::from(lcm)) {
                return Err(format!("{m:?} {c:?}: coset enumeration disagrees"));
            }
            cross_checked += 1;
        }
    }
    Ok(format!("500 presentations, {cross_checked} also enumerated"))
}

fn random_matrix(rng: &mut ChaCha8Rng) -> Vec<Vec<i64>> {
    let rows = rng.gen_range(1..=5);
    let cols = rng.gen_range(1..=5);
    let sparse = rng.gen_bool(0.3);
    (0..rows)
        .map(|_| (0..cols).map(|_| if sparse && rng.gen_bool(0.6) { 0 } else { rng.gen_range(-20..=20) }).collect())
        .collect()
}

fn criterion_snf() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 0x5eed);
    let mut i64_overflows = 0;
    for _ in 0..1000 {
        let rows = random_matrix(&mut rng);
        let a = Matrix::from_rows(rows.iter().map(|r| ints(r)).collect());
        let r = smith_normal_form(&a);
        if r.u.mul(&a).mul(&r.v) != r.diagonal_matrix() {
            return Err(format!("{rows:?}: U A V != D"));
        }
        if !r.u.determinant().abs().is_one() || !r.v.determinant().abs().is_one() {
            return Err(format!("{rows:?}: transform not unimodular"));
        }
        if r.diag.iter().any(Signed::is_negative) {
            return Err(format!("{rows:?}: negative diagonal"));
        }
        if r.diag.windows(2).any(|w| !(w[1].is_zero() || (!w[0].is_zero() && (&w[1] % &w[0]).is_zero()))) {
            return Err(format!("{rows:?}: divisibility chain broken: {:?}", r.diag));
        }
        if a.rows() == a.cols() {
            let det = a.determinant().abs();
            let prod: BigInt = r.diag.iter().product();
            if det != prod {
                return Err(format!("{rows:?}: |det| {det} but diagonal product {prod}"));
            }
        }
        match checked_smith_normal_form(&Matrix::from_rows(rows.clone())) {
            Some(small) if small.diag.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>() != r.diag => {
                return Err(format!("{rows:?}: i64 and BigInt disagree"));
            }
            Some(_) => {}
            None => i64_overflows += 1,
        }
    }
    Ok(format!("1000 matrices, {i64_overflows} beyond i64"))
}

fn main() {
    let criteria = [
        Criterion {
            name: "orders d=3 N=6",
            limit: Some(Duration::from_secs(1)),
            check: criterion_orders_cubic_fourfold,
        },
        Criterion {
            name: "orders d=3 N=5",
            limit: Some(Duration::from_secs(1)),
            check: criterion_orders_cubic_threefold,
        },
        Criterion {
            name: "cubic fourfold table rows",
            limit: Some(Duration::from_secs(1)),
            check: criterion_table_rows,
        },
        Criterion {
            name: "uniqueness of admitting types",
            limit: Some(Duration::from_secs(5)),
            check: criterion_uniqueness,
        },
        Criterion {
            name: "structure theorem",
            limit: Some(Duration::from_secs(30)),
            check: criterion_structure_theorem,
        },
        Criterion { name: "brute-force oracle", limit: Some(Duration::from_secs(10)), check: criterion_oracle },
        Criterion { name: "smoothness trichotomy", limit: Some(Duration::from_secs(30)), check: criterion_smoothness },
        Criterion { name: "quotient order law", limit: None, check: criterion_lemma_presentations },
        Criterion { name: "Smith normal form", limit: None, check: criterion_snf },
    ];
    let mut failures = BTreeSet::new();
    for (i, c) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = (c.check)();
        let elapsed = start.elapsed();
        let outcome = match (outcome, c.limit) {
            (Ok(_), Some(limit)) if elapsed > limit => Err(format!("took {elapsed:.2?}, limit {limit:?}")),
            (o, _) => o,
        };
        match outcome {
            Ok(detail) => println!("criterion {}: PASS  {} ({detail}; {elapsed:.2?})", i + 1, c.name),
            Err(why) => {
                println!("criterion {}: FAIL  {} ({why}; {elapsed:.2?})", i + 1, c.name);
                failures.insert(i + 1);
            }
        }
    }
    if !failures.is_empty() {
        eprintln!("failed criteria: {failures:?}");
        std::process::exit(1);
    }
}
