use std::fmt::Write as _;
use std::path::Path;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use super::{CliError, Limits, Rendered};
use crate::abelian::FiniteAbelianGroup;
use crate::classify::{
    block_element, enumerate_simple_types_with_budget, order_report, type_exponent, uniqueness_report, OrderCase,
    Witness, WitnessMethod,
};
use crate::diagact::{symmetry_group, DiagonalAutomorphism, SymmetryGroup};
use crate::oracle::{verify_singular_point, EvalMode};
use crate::polyforms::{simple_support, IndexVector, SimpleType, Support};

fn strings(v: &[BigInt]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

fn joined(v: &[BigInt]) -> String {
    strings(v).join(" ")
}

fn case_json(c: &OrderCase) -> Value {
    json!({ "case": c.kind.tag(), "a": c.a, "b": c.b, "value": c.value.to_string() })
}

fn group_name(g: &FiniteAbelianGroup) -> String {
    if g.is_trivial() {
        "trivial".to_string()
    } else {
        g.to_string()
    }
}

fn automorphism_json(g: &DiagonalAutomorphism) -> Value {
    json!({
        "text": g.to_signed_string(),
        "denominator": g.denominator().to_string(),
        "exps": strings(g.exps()),
        "pgl_order": g.pgl_order().to_string(),
    })
}

pub fn orders(d: u32, n: u32, expand: bool, limits: &Limits) -> Result<Rendered, CliError> {
    let report = order_report(d, n, false, limits.enumeration)?;
    let maximal = report.maximal_orders.maximal();
    let mut text = format!("{}\n", joined(maximal));
    let expanded = if expand { Some(report.maximal_orders.expand(&limits.factor)?) } else { None };
    if let Some(all) = &expanded {
        writeln!(text, "divisors: {}", joined(all)).unwrap();
    }
    writeln!(text, "provenance:").unwrap();
    let mut provenance = Vec::new();
    for (m, idx) in &report.provenance {
        let cases: Vec<&OrderCase> = idx.iter().map(|&i| &report.cases[i]).collect();
        let labels: Vec<String> =
            cases.iter().map(|c| c.to_string().split(" -> ").next().unwrap_or_default().to_string()).collect();
        writeln!(text, "  {m}: {}", labels.join("; ")).unwrap();
        provenance
            .push(json!({ "order": m.to_string(), "cases": cases.iter().map(|c| case_json(c)).collect::<Vec<_>>() }));
    }
    Ok(Rendered {
        text,
        d: Some(d),
        n: Some(u64::from(n)),
        args: json!({ "d": d, "N": n, "expand": expand }),
        result: json!({
            "maximal": strings(maximal),
            "expanded": expanded.as_deref().map(strings),
            "provenance": provenance,
            "cases": report.cases.iter().map(case_json).collect::<Vec<_>>(),
        }),
    })
}

pub fn group(
    d: u32,
    simple_type: Option<&str>,
    support_file: Option<&Path>,
    limits: &Limits,
) -> Result<Rendered, CliError> {
    let (support, parsed_type) = match (simple_type, support_file) {
        (Some(t), _) => {
            let t: SimpleType = t.parse()?;
            (simple_support(d, &t)?, Some(t))
        }
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
            (Support::from_json(&text, Some(d))?, None)
        }
        (None, None) => return Err(CliError::Usage("one of --type or --support is required".into())),
    };
    let _ = limits;
    let args = json!({
        "d": d,
        "type": simple_type,
        "support": support_file.map(|p| p.display().to_string()),
    });
    let base = |text: String, result: Value| Rendered {
        text,
        d: Some(d),
        n: Some(support.n_vars() as u64),
        args: args.clone(),
        result,
    };
    if support.n_vars() < 2 {
        return Err(CliError::Usage("a symmetry group needs at least 2 variables".into()));
    }
    match symmetry_group(&support)? {
        SymmetryGroup::Infinite { direction } => {
            let dir = strings(&direction);
            let text = format!("INFINITE group: the torus t -> diag(t^v) acts for v = ({})\n", dir.join(","));
            Ok(base(text, json!({ "kind": "infinite", "direction": dir, "support": support.to_json() })))
        }
        SymmetryGroup::Finite(r) => {
            let mut gens = r.generators.clone();
            // For a cyclic group of a simple type, show the generator built
            // from block generators, which matches the familiar tables.
            if let (Some(t), true, false) = (&parsed_type, r.group.is_cyclic(), r.group.is_trivial()) {
                let e = type_exponent(d, t);
                if let Some(g) = block_element(d, t, &e) {
                    if g.pgl_order() == e && g.acts_with_character(&support).is_ok() {
                        gens = vec![g];
                    }
                }
            }
            let mut characters = Vec::new();
            for g in &gens {
                characters.push(g.acts_with_character(&support)?);
            }
            let name = group_name(&r.group);
            let mut text = match gens.len() {
                0 => format!("{name}\n"),
                1 => format!("{name}, generator {}\n", gens[0].to_signed_string()),
                _ => format!(
                    "{name}, generators {}\n",
                    gens.iter().map(DiagonalAutomorphism::to_signed_string).collect::<Vec<_>>().join(", ")
                ),
            };
            writeln!(text, "order {}", r.group.order()).unwrap();
            for (g, c) in gens.iter().zip(&characters) {
                writeln!(
                    text,
                    "  {}: projective order {}, character {} mod {}",
                    g.to_signed_string(),
                    g.pgl_order(),
                    c,
                    g.denominator()
                )
                .unwrap();
            }
            let generators: Vec<Value> = gens
                .iter()
                .zip(&characters)
                .map(|(g, c)| {
                    let mut v = automorphism_json(g);
                    v["character"] = json!(c.to_string());
                    v
                })
                .collect();
            let result = json!({
                "kind": "finite",
                "group": name,
                "invariant_factors": strings(r.group.invariant_factors()),
                "order": r.group.order().to_string(),
                "generators": generators,
                "support": support.to_json(),
            });
            Ok(base(text, result))
        }
    }
}

pub fn smooth(d: u32, targets: &[usize], want_witness: bool) -> Result<Rendered, CliError> {
    let iv = IndexVector::new(d, targets.to_vec())?;
    let args = json!({ "d": d, "targets": targets, "witness": want_witness });
    let (text, result) = match iv.graph_decompose() {
        Ok(t) => {
            if !iv.is_smooth_f_i() {
                return Err(CliError::Verification(format!("{iv} decomposes as {t} but has a violating pair")));
            }
            (format!("SMOOTH type {t}\n"), json!({ "smooth": true, "type": t.to_string() }))
        }
        Err(_) => {
            let (a, b) = iv
                .violating_pair()
                .ok_or_else(|| CliError::Verification(format!("{iv} is not simple but has no violating pair")))?;
            let pair = json!([a + 1, b + 1]);
            let shared = iv.target(a) + 1;
            if want_witness {
                let w = iv.singular_witness().expect("violating pair exists");
                if !verify_singular_point(&iv, &w, EvalMode::Exact) {
                    return Err(CliError::Verification(format!("partials do not vanish at {w}")));
                }
                let text = format!("SINGULAR at {w}\n");
                let result = json!({ "smooth": false, "pair": pair, "shared_target": shared, "witness": w.to_string(), "root_order": w.root_order() });
                (text, result)
            } else {
                let text = format!("SINGULAR: x{} and x{} both point to x{shared}\n", a + 1, b + 1);
                (
                    text,
                    json!({ "smooth": false, "pair": pair, "shared_target": shared, "witness": null, "root_order": null }),
                )
            }
        }
    };
    Ok(Rendered { text, d: Some(d), n: Some(targets.len() as u64), args, result })
}

/// Re-reads the printed polynomial and automorphism and checks them again.
fn round_trip(d: u32, n_vars: u32, w: &Witness) -> Result<(), CliError> {
    let s = Support::parse_polynomial(d, n_vars as usize, &w.support.to_string())?;
    let g: DiagonalAutomorphism = w.automorphism.to_signed_string().parse()?;
    let ok = s == w.support && g == w.automorphism && g.acts_with_character(&s).is_ok() && g.pgl_order() == w.pgl_order;
    if ok {
        Ok(())
    } else {
        Err(CliError::Verification(format!("printed witness for order {} does not re-verify", w.pgl_order)))
    }
}

fn witness_json(w: &Witness) -> Value {
    json!({
        "found": true,
        "type": w.simple_type.to_string(),
        "core": w.core.to_string(),
        "polynomial": w.support.to_string(),
        "automorphism": automorphism_json(&w.automorphism),
        "character": w.character.to_string(),
        "pgl_order": w.pgl_order.to_string(),
        "method": match w.method {
            WitnessMethod::BlockGenerators => "block_generators",
            WitnessMethod::Lattice => "lattice",
        },
    })
}

pub fn witness(d: u32, n_vars: u32, order: u64, limits: &Limits) -> Result<Rendered, CliError> {
    let n = BigInt::from(order);
    if n.is_zero() {
        return Err(CliError::Usage("--order must be positive".into()));
    }
    let found = crate::classify::witness_for_order_with_budget(d, n_vars, &n, limits.enumeration)?;
    let args = json!({ "d": d, "N": n_vars, "order": order.to_string() });
    let (text, result) = match found {
        None => ("NONE\n".to_string(), json!({ "found": false })),
        Some(w) => {
            round_trip(d, n_vars, &w)?;
            let mut text = String::new();
            writeln!(text, "type {}", w.simple_type).unwrap();
            writeln!(text, "polynomial {}", w.support).unwrap();
            writeln!(text, "automorphism {}", w.automorphism.to_signed_string()).unwrap();
            writeln!(
                text,
                "check: character {} mod {}, projective order {}",
                w.character,
                w.automorphism.denominator(),
                w.pgl_order
            )
            .unwrap();
            if w.pgl_order.is_one() {
                writeln!(text, "note: the identity").unwrap();
            }
            (text, witness_json(&w))
        }
    };
    Ok(Rendered { text, d: Some(d), n: Some(u64::from(n_vars)), args, result })
}

pub fn cubic4(limits: &Limits) -> Result<Rendered, CliError> {
    // The search space is tiny; the budget only guards against a caller
    // setting it absurdly low.
    enumerate_simple_types_with_budget(6, true, false, limits.enumeration)?;
    let r = uniqueness_report(3, 6, limits.enumeration)?;
    let mut text = format!("maximal orders: {}\n\n", joined(r.report.maximal_orders.maximal()));
    writeln!(text, "order | type | cubic polynomial | maximal automorphism").unwrap();
    let mut rows = Vec::new();
    for row in &r.rows {
        let w = r
            .report
            .witnesses
            .get(&row.order)
            .ok_or_else(|| CliError::Verification(format!("missing witness for {}", row.order)))?;
        round_trip(3, 6, w)?;
        writeln!(text, "{} | {} | {} | {}", row.order, w.simple_type, w.support, w.automorphism.to_signed_string())
            .unwrap();
        let admitting: Vec<String> = row.admitting.iter().map(ToString::to_string).collect();
        rows.push(json!({
            "order": row.order.to_string(),
            "type": w.simple_type.to_string(),
            "polynomial": w.support.to_string(),
            "automorphism": automorphism_json(&w.automorphism),
            "admitting_types": admitting,
            "unique": row.admitting.len() == 1,
            "group": group_name(&row.group),
        }));
    }
    writeln!(text, "\nuniqueness (simple types on 6 variables admitting each order):").unwrap();
    for row in &r.rows {
        let admitting: Vec<String> = row.admitting.iter().map(ToString::to_string).collect();
        let verdict = if row.admitting.len() == 1 { "unique" } else { "NOT unique" };
        writeln!(text, "  {}: {} ({verdict}), group {}", row.order, admitting.join(", "), group_name(&row.group))
            .unwrap();
    }
    let result = json!({
        "maximal": strings(r.report.maximal_orders.maximal()),
        "rows": rows,
        "all_unique": r.all_unique(),
    });
    Ok(Rendered { text, d: Some(3), n: Some(6), args: json!({}), result })
}
