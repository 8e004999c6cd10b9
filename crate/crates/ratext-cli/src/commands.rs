//! Subcommand implementations. Each returns a [`Report`]; library errors
//! surface as usage errors.

use anyhow::{anyhow, bail, Context, Result};
use ratext::darboux::{b16_identity_check, build_decompositions, decompositions_consistent, extended_potential};
use ratext::exactpoly::Rational;
use ratext::seedcat::{
    admissibility, enumerate_seeds, make_seed, susy_valid, Family, RayIds, SeedSolution, SeedType,
};
use ratext::vlab::{
    confluent_limit_check, default_grid, gram_matrix, isospectrality_check, liouville_potential,
    max_offdiag_relative, WeightSpec, DEFAULT_TOL,
};
use ratext::xopgen::{
    gs_heine, heun_energy_gap, heun_operator, heun_sequences, takemura_params, xm_jacobi, xm_jacobi_in_z,
    xm_laguerre, GSHeine, XmJacobiVariant, XmLaguerreCase,
};
use ratext::zerocensus::{census_point, half_integer_grid, NodelessClass};
use ratext::Error;
use serde_json::{json, Value};

use crate::report::{f, fmt_f64, poly, q, ratfn, Report};
use crate::{parse_type, Cli, Command, SeedArgs, VerifyClaim};

pub fn run(cli: &Cli) -> Result<Report> {
    match &cli.command {
        Command::Seeds { ray, max_m } => seeds(&ray.ray()?, *max_m, cli.permissive),
        Command::Extend { seed, plot } => extend(seed, *plot, cli.permissive),
        Command::Xop { seed, level, target, plot } => xop(seed, *level, target.as_deref(), *plot, cli.permissive),
        Command::Heun { lambda, mu, max_order } => heun(lambda, mu, *max_order),
        Command::Census { lambda, mu, m, grid, max_m } => {
            if *grid {
                census_grid(*max_m, cli.jobs.max(1))
            } else {
                match (lambda, mu, m) {
                    (Some(l), Some(u), Some(m)) => census_single(l, u, *m),
                    _ => bail!("census needs --lambda, --mu and --m, or --grid"),
                }
            }
        }
        Command::Verify { claim } => verify(claim, cli),
    }
}

fn build_seed(args: &SeedArgs, permissive: bool) -> Result<SeedSolution> {
    let ray = args.ray.ray()?;
    let stype = parse_type(&args.stype)?;
    let seed = make_seed(&ray, stype, args.m).with_context(|| format!("seed {} m={}", stype, args.m))?;
    if !susy_valid(&seed, permissive) {
        bail!("seed {} m={} is outside the SUSY-valid range (use --permissive)", stype, args.m);
    }
    Ok(seed)
}

fn ray_json(ray: &RayIds) -> Value {
    json!({ "family": ray.family.name(), "lambda0": q(&ray.lambda0), "second": q(&ray.second) })
}

fn seed_json(seed: &SeedSolution) -> Value {
    let var = seed.family().variable();
    json!({
        "type": seed.stype.label(),
        "m": seed.m,
        "lambda_signed": q(&seed.lam_signed),
        "second_signed": q(&seed.second_signed),
        "pi": poly(&seed.pi, var),
        "energy": q(&seed.energy_d),
        "bose_energy": q(&seed.bose_energy()),
        "shift_to_ground": q(&seed.energy_shift_to_ground),
    })
}

fn seeds(ray: &RayIds, max_m: u32, permissive: bool) -> Result<Report> {
    let list: Vec<Value> = enumerate_seeds(ray, max_m, permissive)
        .into_iter()
        .map(|(seed, rep)| {
            let mut v = seed_json(&seed);
            let o = v.as_object_mut().expect("object");
            o.insert("susy_valid".into(), json!(rep.susy_valid));
            o.insert("below_ground".into(), json!(rep.below_ground));
            o.insert("nodeless".into(), json!(rep.nodeless));
            o.insert("degenerate".into(), json!(rep.degenerate.map(|d| d.to_string())));
            o.insert("usable".into(), json!(rep.usable()));
            v
        })
        .collect();
    Ok(Report::new(Value::Array(list), true))
}

fn sample_points(a: f64, b: f64, n: usize) -> impl Iterator<Item = f64> {
    (0..n).map(move |i| a + (i as f64 + 0.5) / n as f64 * (b - a))
}

/// Sample points as JSON objects and as CSV rows with the abscissa first.
fn plot_report(xname: &str, yname: &str, points: impl Iterator<Item = (f64, f64)>) -> Report {
    let (json, rows): (Vec<Value>, Vec<_>) = points
        .map(|(x, y)| {
            let row = vec![(xname.to_string(), fmt_f64(x)), (yname.to_string(), fmt_f64(y))];
            (json!({ xname: f(x), yname: f(y) }), row)
        })
        .unzip();
    Report::with_rows(Value::Array(json), rows, true)
}

fn extend(args: &SeedArgs, plot: Option<usize>, permissive: bool) -> Result<Report> {
    let seed = build_seed(args, permissive)?;
    let ext = extended_potential(&seed)?;
    if let Some(n) = plot {
        let pot = liouville_potential(&seed.ray, Some(&ext));
        let (a, b) = match pot.domain() {
            (a, Some(b)) => (a, b),
            (a, None) => (a, default_grid(&seed.ray, 4, 1).b),
        };
        return Ok(plot_report("x", "V", sample_points(a, b, n).map(|x| (x, pot.eval(x)))));
    }
    let var = seed.family().variable();
    let dec = build_decompositions(&seed);
    let b16 = b16_identity_check(&seed);
    let consistent = decompositions_consistent(&seed);
    let adm = admissibility(&seed, permissive);
    let json = json!({
        "ray": ray_json(&seed.ray),
        "seed": seed_json(&seed),
        "potential": ratfn(&ext.value, var),
        "decompositions": {
            "o_m_o": poly(&dec.o_m_o, var),
            "o_m_down": poly(&dec.o_m_down, var),
            "o_m_check": poly(&dec.o_m_check, var),
            "consistent": consistent,
        },
        "b16": b16,
        "nodeless": adm.nodeless,
    });
    Ok(Report::new(json, b16 && consistent))
}

fn default_target(family: Family) -> SeedType {
    match family {
        Family::Hpt => SeedType::TC,
        _ => SeedType::C,
    }
}

fn heine_json(h: &GSHeine) -> Value {
    let var = h.seed.family().variable();
    let op = h.operator();
    json!({
        "seed": { "type": h.seed.stype.label(), "m": h.seed.m },
        "target": { "type": h.target.label(), "order": h.target_order },
        "order": h.order_n,
        "monic": poly(&h.monic, var),
        "scale": h.norm_scale.as_ref().map(q),
        "energy": q(&h.energy),
        "gauge": [q(&h.gauge.0), q(&h.gauge.1)],
        "sigma_pair": [h.sigma_pair.0, h.sigma_pair.1],
        "operator": { "p2": poly(&op.p2, var), "p1": poly(&op.p1, var), "p0": poly(&op.p0, var) },
        "residual_zero": op.apply(&h.monic).is_zero(),
    })
}

/// The exceptional form matching a Heine member, when one exists.
fn exceptional_json(seed: &SeedSolution, h: &GSHeine, permissive: bool) -> Option<Value> {
    if h.target != SeedType::C {
        return None;
    }
    let (l, u, m, v) = (&seed.ray.lambda0, &seed.ray.second, seed.m, h.target_order);
    match (seed.family(), seed.stype) {
        (Family::Dpt, SeedType::A | SeedType::B) => {
            let (variant, name, var) = if seed.stype == SeedType::A {
                (XmJacobiVariant::J1, "X_m-Jacobi J1", "y")
            } else {
                (XmJacobiVariant::J2, "X_m-Jacobi J2", "eta")
            };
            match xm_jacobi(m, l, u, v, variant, permissive) {
                Ok(p) => Some(json!({
                    "kind": name,
                    "polynomial": poly(&p, var),
                    "matches_heine": xm_jacobi_in_z(&p, variant).monic() == h.monic,
                })),
                Err(e) => Some(json!({ "kind": name, "error": e.to_string() })),
            }
        }
        (Family::Isotonic, SeedType::A | SeedType::B) => {
            let (case, name) = if seed.stype == SeedType::A {
                (XmLaguerreCase::I, "X_m-Laguerre I")
            } else {
                (XmLaguerreCase::II, "X_m-Laguerre II")
            };
            match xm_laguerre(m, l, v, case) {
                Ok(p) => Some(json!({
                    "kind": name,
                    "polynomial": poly(&p, "zeta"),
                    "matches_heine": h.normalized().map(|x| x == p).unwrap_or(false),
                })),
                Err(e) => Some(json!({ "kind": name, "error": e.to_string() })),
            }
        }
        _ => None,
    }
}

fn target_type(family: Family, target: Option<&str>) -> Result<SeedType> {
    match target {
        Some(t) => parse_type(t),
        None => Ok(default_target(family)),
    }
}

fn xop(args: &SeedArgs, level: u32, target: Option<&str>, plot: Option<usize>, permissive: bool) -> Result<Report> {
    let seed = build_seed(args, permissive)?;
    let target = target_type(seed.family(), target)?;
    let h = gs_heine(&seed, target, level)?;
    if let Some(n) = plot {
        let (a, b) = match seed.family() {
            Family::Dpt => (0.0, 1.0),
            Family::Hpt => (-10.0, 0.0),
            Family::Isotonic => (0.0, 20.0),
        };
        let p = ratext::vlab::FloatPoly::new(&h.monic);
        return Ok(plot_report(seed.family().variable(), "value", sample_points(a, b, n).map(|x| (x, p.eval(x)))));
    }
    let mut json = heine_json(&h);
    let pass = json["residual_zero"].as_bool().unwrap_or(false);
    if let Some(x) = exceptional_json(&seed, &h, permissive) {
        json.as_object_mut().expect("object").insert("exceptional".into(), x);
    }
    Ok(Report::new(json, pass))
}

fn heun(lambda: &Rational, mu: &Rational, max_order: u32) -> Result<Report> {
    let hs = heun_sequences(lambda, mu, 0..max_order)?;
    let mut rows = Vec::new();
    let mut seqs = Vec::new();
    let mut pass = true;
    for (quadrant, members) in &hs.sequences {
        let mut list = Vec::new();
        for (m, member) in members {
            let Some(mm) = member else {
                list.push(json!({ "m": m, "gap": true }));
                rows.push(vec![("quadrant".into(), quadrant.label().into()), ("m".into(), m.to_string()), ("gap".into(), "true".into())]);
                continue;
            };
            let h = &mm.heine;
            let certified = h.certified();
            let literal = matches!(quadrant, ratext::xopgen::HeunQuadrant::A | ratext::xopgen::HeunQuadrant::B)
                .then(|| heun_operator(lambda, mu, &h.energy).apply(&h.monic).is_zero());
            pass &= certified && literal.unwrap_or(true);
            rows.push(vec![
                ("quadrant".into(), quadrant.label().into()),
                ("m".into(), m.to_string()),
                ("order".into(), h.order_n.to_string()),
                ("polynomial".into(), h.monic.display_in("z").to_string()),
                ("energy".into(), h.energy.to_string()),
                ("certified".into(), certified.to_string()),
            ]);
            list.push(json!({
                "m": m,
                "order": h.order_n,
                "polynomial": poly(&h.monic, "z"),
                "energy": q(&h.energy),
                "gauge": [q(&h.gauge.0), q(&h.gauge.1)],
                "certified": certified,
                "heun_equation": literal,
            }));
        }
        seqs.push(json!({ "quadrant": quadrant.label(), "members": list }));
    }
    let takemura: Vec<Value> = (0..max_order)
        .map(|k| {
            let t = takemura_params(lambda, mu, k)?;
            Ok(json!({
                "k": k,
                "alpha": q(&t.alpha), "beta": q(&t.beta), "gamma": q(&t.gamma), "t": q(&t.t),
                "energy_gap": q(&heun_energy_gap(lambda, mu, k)),
            }))
        })
        .collect::<Result<_, Error>>()?;
    let json = json!({
        "lambda": q(lambda),
        "mu": q(mu),
        "outer_point": q(&hs.outer_point),
        "sequences": seqs,
        "takemura": takemura,
    });
    Ok(Report::with_rows(json, rows, pass))
}

fn class_json(c: &NodelessClass) -> Value {
    json!({ "j_i": c.j_i, "j_ii": c.j_ii, "j_iii": c.j_iii })
}

fn census_single(l: &Rational, u: &Rational, m: u32) -> Result<Report> {
    let (a, e) = census_point(l, u, m).ok_or_else(|| anyhow!("degenerate index: a rising factorial vanishes"))?;
    let json = json!({
        "lambda": q(l), "mu": q(u), "m": m,
        "analytic": class_json(&a),
        "sturm": class_json(&e),
        "agree": a == e,
    });
    Ok(Report::new(json, a == e))
}

fn census_grid(max_m: u32, jobs: usize) -> Result<Report> {
    let grid = half_integer_grid();
    let mut points = Vec::new();
    for l in &grid {
        for u in &grid {
            for m in 0..=max_m {
                points.push((l.clone(), u.clone(), m));
            }
        }
    }
    let chunk = points.len().div_ceil(jobs);
    let results: Vec<Option<bool>> = std::thread::scope(|s| {
        let handles: Vec<_> = points
            .chunks(chunk)
            .map(|c| s.spawn(move || c.iter().map(|(l, u, m)| census_point(l, u, *m).map(|(a, e)| a == e)).collect::<Vec<_>>()))
            .collect();
        handles.into_iter().flat_map(|h| h.join().expect("census worker")).collect()
    });
    let cases = results.iter().filter(|r| r.is_some()).count();
    let agree = results.iter().filter(|r| **r == Some(true)).count();
    let mismatches: Vec<Value> = points
        .iter()
        .zip(&results)
        .filter(|(_, r)| **r == Some(false))
        .map(|((l, u, m), _)| json!({ "lambda": q(l), "mu": q(u), "m": m }))
        .collect();
    let json = json!({
        "cases": cases,
        "agree": agree,
        "skipped_degenerate": results.len() - cases,
        "mismatches": mismatches,
    });
    Ok(Report::new(json, agree == cases))
}

fn verify(claim: &VerifyClaim, cli: &Cli) -> Result<Report> {
    match claim {
        VerifyClaim::Orthogonality { seed, target, levels } => {
            let seed = build_seed(seed, cli.permissive)?;
            let target = target_type(seed.family(), target.as_deref())?;
            let tol = cli.tol.unwrap_or(1e-8);
            let family: Vec<GSHeine> = (0..=*levels).filter_map(|v| gs_heine(&seed, target, v).ok()).collect();
            if family.len() < 2 {
                bail!("fewer than two members to compare");
            }
            let w = WeightSpec::for_heine(&family[0]);
            let polys: Vec<_> = family.iter().map(|h| h.monic.clone()).collect();
            let g = gram_matrix(&w, &polys, DEFAULT_TOL)?;
            let worst = max_offdiag_relative(&g);
            Ok(Report::new(claim_json("orthogonality", f(worst), tol, worst <= tol), worst <= tol))
        }
        VerifyClaim::Spectrum { seed, levels, grid } => {
            let seed = build_seed(seed, cli.permissive)?;
            let levels = levels.unwrap_or(if seed.family() == Family::Isotonic { 3 } else { 4 });
            let tol = cli.tol.unwrap_or(1e-4);
            let g = default_grid(&seed.ray, levels, *grid);
            let r = isospectrality_check(&seed, levels, &g, tol)?;
            let computed = json!({
                "base": r.base.iter().map(|x| f(*x)).collect::<Vec<_>>(),
                "extended": r.extended.iter().map(|x| f(*x)).collect::<Vec<_>>(),
                "inserted": r.inserted.map(f),
                "max_rel_dev": f(r.max_rel_dev),
            });
            Ok(Report::new(claim_json("isospectrality", computed, tol, r.pass), r.pass))
        }
        VerifyClaim::Residual { seed, levels } => {
            let seed = build_seed(seed, cli.permissive)?;
            let targets: &[SeedType] = if seed.family() == Family::Hpt { &SeedType::HPT } else { &SeedType::DPT };
            let mut members = Vec::new();
            let mut pass = true;
            for t in targets {
                for v in 0..=*levels {
                    match gs_heine(&seed, *t, v) {
                        Ok(h) => {
                            let ok = h.certified();
                            pass &= ok;
                            members.push(json!({ "target": t.label(), "level": v, "order": h.order_n, "residual_zero": ok }));
                        }
                        Err(Error::SparseGap | Error::Degenerate(_)) => {}
                        Err(e) => return Err(e.into()),
                    }
                }
            }
            Ok(Report::new(claim_json("residual", Value::Array(members), 0.0, pass), pass))
        }
        VerifyClaim::Limit { lambda0, nu0, stype, m } => {
            let r = confluent_limit_check(lambda0, nu0, parse_type(stype)?, *m)?;
            let computed = json!({
                "scaled_shifts": r.scaled_shifts.iter().map(|x| f(*x)).collect::<Vec<_>>(),
                "extrapolated": f(r.extrapolated),
                "target": f(r.target),
                "observed_order": f(r.observed_order),
            });
            let tol = cli.tol.unwrap_or(1e-9);
            let pass = r.observed_order >= 1.0 - 1e-9 && (r.extrapolated - r.target).abs() <= tol * (1.0 + r.target.abs());
            Ok(Report::new(claim_json("confluent-limit", computed, tol, pass), pass))
        }
    }
}

fn claim_json(claim: &str, computed: Value, tol: f64, pass: bool) -> Value {
    json!({ "claim": claim, "computed": computed, "tolerance": f(tol), "pass": pass })
}
