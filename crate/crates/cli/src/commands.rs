use serde_json::{json, Value};

use curve_forge::diophantine::{
    fermat_poly_check, local_solvability, mason_check, pell_bound_check, FermatVerdict, LocalConfig, LocalOutcome,
};
use curve_forge::parametrize::{
    find_rational_nodes, kapferer_witness, loop_area, nonparam_certificate, param_conic, param_conic_over,
    param_quartic_three_nodes, param_split_degree, pythagorean_triple, verify_param, MapScalar, NonParamOutcome,
    QuarticConfig, RationalMap, DEFAULT_HEIGHT_BOUND,
};
use curve_forge::parse::{render_form, render_fraction, render_poly, render_uni};
use curve_forge::poly::{BinaryForm, Z};
use curve_forge::resultant::{implicitize, AffineParam};
use curve_forge::singular::{
    enumerate_singular_points, genus_of, nonsingularity_certificate, EliminationRecord, ProjPoint, SingularConfig,
    SingularPointReport, Smoothness,
};
use curve_forge::{Error, Rat, Result};

use crate::input;
use crate::report::{CommandResult, Status};
use crate::{Cli, Command, ParamCommand};

const XYZ: [&str; 3] = ["X", "Y", "Z"];
const LOWER: [&str; 3] = ["x", "y", "z"];

pub(crate) fn dispatch(cli: &Cli) -> Result<CommandResult> {
    let mut singular = SingularConfig::default();
    if let Some(cap) = cli.degree_cap {
        singular.degree_cap = cap;
    }
    let height_bound = cli.height_bound.unwrap_or(DEFAULT_HEIGHT_BOUND);
    let name = cli.command.name();
    match &cli.command {
        Command::Singular { curve } => singular_cmd(name, curve, &singular),
        Command::Genus { curve } => genus_cmd(name, curve, &singular),
        Command::Smooth { curve } => smooth_cmd(name, curve, &singular),
        Command::Param(ParamCommand::Conic { curve, point }) => conic_cmd(name, curve, point),
        Command::Param(ParamCommand::Split { curve }) => split_cmd(name, curve),
        Command::Param(ParamCommand::Quartic3 { curve, nodes }) => {
            let cfg = QuarticConfig { height_bound, singular };
            quartic_cmd(name, curve, nodes.as_deref(), &cfg)
        }
        Command::Implicitize { x, y } => implicitize_cmd(name, x, y),
        Command::Verify(a) => verify_cmd(name, &a.curve, &a.map),
        Command::Kapferer(a) => kapferer_cmd(name, &a.curve, &a.map),
        Command::Certificate { curve } => certificate_cmd(name, curve, &singular),
        Command::Area { map, from, to } => area_cmd(name, map, from, to),
        Command::Pythagorean { m, n } => {
            let (a, b, c) = pythagorean_triple(m, n);
            let mut r = CommandResult::new(name, "triple", Status::Affirmative);
            r.put("a", a.to_string()).put("b", b.to_string()).put("c", c.to_string());
            Ok(r)
        }
        Command::Mason { a, b, c } => mason_cmd(name, a, b, c),
        Command::Fermatpoly { x, y, z, n } => fermat_cmd(name, [x, y, z], *n),
        Command::Pell { d, solution } => pell_cmd(name, d, solution.as_deref()),
        Command::Local { b1, a, b2, p, prime_cap, cross_check } => {
            let cfg = LocalConfig { prime_cap: *prime_cap, cross_check: *cross_check };
            local_cmd(name, [*b1, *a, *b2], *p, &cfg)
        }
    }
}

fn with_curve(name: &str, verdict: &str, status: Status, c: &input::Curve) -> CommandResult {
    let mut r = CommandResult::new(name, verdict, status);
    r.put("curve", render_poly(&c.projective, &XYZ));
    for d in &c.diagnostics {
        r.note(d.clone());
    }
    r
}

fn point_json(p: &SingularPointReport) -> Value {
    let vars = p.local.chart_vars.map(|i| LOWER[i]);
    let mut v = json!({
        "point": p.point.to_string(),
        "multiplicity": p.multiplicity,
        "kind": p.kind().to_string(),
        "tangent_cone": render_poly(&p.local.cone, &vars),
        "chart": format!("{} = 1", XYZ[p.local.chart]),
    });
    if let Some(d) = p.field() {
        v["field"] = json!(format!("Q(sqrt({d}))"));
    }
    if let Some(q) = &p.conjugate_partner {
        v["conjugate"] = json!(q.to_string());
    }
    v
}

fn evidence_json(e: &EliminationRecord) -> Value {
    json!({
        "shear": e.shear,
        "chart_eliminants": e.chart_eliminants.iter().map(|p| render_uni(p, "x")).collect::<Vec<_>>(),
        "chart_gcd": render_uni(&e.chart_gcd, "x"),
        "infinity_forms": e.infinity_forms.iter().map(|f| render_form(f, ["X", "Y"])).collect::<Vec<_>>(),
        "infinity_gcd": render_form(&e.infinity_gcd, ["X", "Y"]),
    })
}

fn singular_cmd(name: &str, text: &str, cfg: &SingularConfig) -> Result<CommandResult> {
    let c = input::curve(text)?;
    let locus = enumerate_singular_points(&c.projective, cfg)?;
    let (verdict, status) = match (locus.points.is_empty(), locus.clusters.is_empty()) {
        (_, false) => ("unresolved cluster", Status::Inconclusive),
        (true, true) => ("no singular points", Status::Affirmative),
        (false, true) => ("singular", Status::Affirmative),
    };
    let mut r = with_curve(name, verdict, status, &c);
    r.put("points", locus.points.iter().map(point_json).collect::<Vec<_>>());
    let clusters: Vec<Value> = locus
        .clusters
        .iter()
        .map(|k| {
            json!({
                "degree": k.degree,
                "defining_factor": render_uni(&k.defining_factor, "x"),
                "at_infinity": k.at_infinity,
            })
        })
        .collect();
    r.put("clusters", clusters);
    r.put("shear", locus.evidence.shear);
    Ok(r)
}

fn genus_cmd(name: &str, text: &str, cfg: &SingularConfig) -> Result<CommandResult> {
    let c = input::curve(text)?;
    let g = genus_of(&c.projective, cfg)?;
    let mut r = with_curve(name, format!("genus {}", g.genus).as_str(), Status::Affirmative, &c);
    r.put("genus", g.genus).put("degree", g.degree).put("double_points", g.double_points);
    for a in g.assumptions {
        r.note(a);
    }
    Ok(r)
}

fn smooth_cmd(name: &str, text: &str, cfg: &SingularConfig) -> Result<CommandResult> {
    let c = input::curve(text)?;
    Ok(match nonsingularity_certificate(&c.projective, cfg)? {
        Smoothness::Smooth(ev) => {
            let mut r = with_curve(name, "smooth", Status::Affirmative, &c);
            r.put("evidence", evidence_json(&ev.record));
            r
        }
        Smoothness::Singular(p) => {
            let mut r = with_curve(name, "singular", Status::Negative, &c);
            r.put("witness", point_json(&p));
            r
        }
        Smoothness::Inconclusive { cluster_degree } => {
            let mut r = with_curve(name, "inconclusive", Status::Inconclusive, &c);
            r.put("cluster_degree", cluster_degree);
            r
        }
    })
}

fn put_map<K: MapScalar>(r: &mut CommandResult, map: &RationalMap<K>) -> Result<()> {
    let [(xn, xd), (yn, yd)] = map.affine_view()?;
    r.put("x", render_fraction(&xn, &xd, "t"))
        .put("y", render_fraction(&yn, &yd, "t"))
        .put("map", map.to_string())
        .put("degree", map.degree());
    Ok(())
}

fn conic_cmd(name: &str, text: &str, point: &str) -> Result<CommandResult> {
    let c = input::curve(text)?;
    let p = input::point(point)?;
    let mut r = with_curve(name, "parametrized", Status::Affirmative, &c);
    r.put("point", p.to_string());
    if p.is_rational() {
        put_map(&mut r, &param_conic(&c.projective, &p)?)?;
    } else {
        put_map(&mut r, &param_conic_over(&c.projective, &p)?)?;
        r.note(format!("the point is defined over Q(sqrt({})); so is the map", p.field().unwrap_or(0)));
    }
    r.note("x = X/Z, y = Y/Z, t = u/v");
    Ok(r)
}

fn split_cmd(name: &str, text: &str) -> Result<CommandResult> {
    let mut c = input::curve(text)?;
    let f = c.affine_equation();
    let map = param_split_degree(&f)?;
    let mut r = with_curve(name, "parametrized", Status::Affirmative, &c);
    put_map(&mut r, &map)?;
    r.note("absolute irreducibility of the curve assumed");
    Ok(r)
}

fn quartic_cmd(name: &str, text: &str, nodes: Option<&str>, cfg: &QuarticConfig) -> Result<CommandResult> {
    let c = input::curve(text)?;
    let nodes: [ProjPoint; 3] = match nodes {
        Some(s) => input::points(s)?
            .try_into()
            .map_err(|v: Vec<ProjPoint>| Error::InvalidInput(format!("expected 3 nodes, got {}", v.len())))?,
        None => find_rational_nodes(&c.projective, &cfg.singular)?,
    };
    let map = param_quartic_three_nodes(&c.projective, &nodes, cfg)?;
    let mut r = with_curve(name, "parametrized", Status::Affirmative, &c);
    r.put("nodes", nodes.iter().map(|p| p.to_string()).collect::<Vec<_>>());
    put_map(&mut r, &map)?;
    Ok(r)
}

fn implicitize_cmd(name: &str, x: &str, y: &str) -> Result<CommandResult> {
    let param = AffineParam::from_fractions(input::fraction_in_t(x, "x")?, input::fraction_in_t(y, "y")?)?;
    let f = implicitize(&param)?;
    let mut r = CommandResult::new(name, "implicitized", Status::Affirmative);
    r.put("equation", render_poly(&f, &LOWER)).put("projective", render_poly(&f.homogenize(Z), &XYZ));
    r.note("integer content removed, leading coefficient positive");
    Ok(r)
}

fn verify_cmd(name: &str, text: &str, map: &str) -> Result<CommandResult> {
    let c = input::curve(text)?;
    let m = input::map(map)?;
    let ok = verify_param(&c.projective, &m);
    let (verdict, status) = if ok {
        ("parametrization verified", Status::Affirmative)
    } else {
        ("not a parametrization", Status::Negative)
    };
    let mut r = with_curve(name, verdict, status, &c);
    r.put("map", m.to_string());
    if !ok {
        let residue = m.substitute_into(&c.projective)?;
        r.put("residue", render_form(&residue, ["u", "v"]));
    }
    Ok(r)
}

fn forms(fs: &[BinaryForm<Rat>]) -> Vec<String> {
    fs.iter().map(|f| render_form(f, ["u", "v"])).collect()
}

fn kapferer_cmd(name: &str, text: &str, map: &str) -> Result<CommandResult> {
    let c = input::curve(text)?;
    let m = input::map(map)?;
    let w = kapferer_witness(&c.projective, &m)?;
    let verdict = if w.complete { "complete witness" } else { "evaluated partials share a factor" };
    let mut r = with_curve(name, verdict, Status::Affirmative, &c);
    r.put("map", m.to_string())
        .put("curve_degree", w.curve_degree)
        .put("map_degree", w.map_degree)
        .put("minors", forms(&w.minors))
        .put("evaluated_partials", forms(&w.evaluated_partials))
        .put("gcd", render_form(&w.gcd, ["u", "v"]))
        .put("p", w.p.as_ref().map(|p| render_form(p, ["u", "v"])))
        .put("q", w.q.to_string())
        .put("complete", w.complete)
        .put(
            "degree_check",
            json!({
                "minors_degree": w.degree_check.minors_degree,
                "partials_degree": w.degree_check.partials_degree,
                "holds": w.degree_check.holds,
            }),
        )
        .put("singular_points", w.singular_points.iter().map(|p| p.to_string()).collect::<Vec<_>>());
    if !w.unresolved_factors.is_empty() {
        let fs: Vec<String> = w.unresolved_factors.iter().map(|f| render_uni(f, "t")).collect();
        r.note(format!("roots not computed for the gcd factors {}", fs.join(", ")));
    }
    Ok(r)
}

fn certificate_cmd(name: &str, text: &str, cfg: &SingularConfig) -> Result<CommandResult> {
    let c = input::curve(text)?;
    Ok(match nonparam_certificate(&c.projective, cfg)? {
        NonParamOutcome::Certificate(cert) => {
            let mut r = with_curve(name, "not parametrizable", Status::Affirmative, &c);
            r.put("degree", cert.degree)
                .put("evidence", evidence_json(&cert.evidence.record))
                .put("conclusion", cert.conclusion.clone())
                .put("rechecked", cert.recheck(cfg));
            r
        }
        NonParamOutcome::Inapplicable { reason, singular_point } => {
            let mut r = with_curve(name, "certificate refused", Status::Negative, &c);
            r.put("reason", reason).put("witness", singular_point.map(|p| point_json(&p)));
            r
        }
    })
}

fn area_cmd(name: &str, map: &str, from: &str, to: &str) -> Result<CommandResult> {
    let m = input::map(map)?;
    let (t0, t1) = (input::rational(from, "from")?, input::rational(to, "to")?);
    let a = loop_area(&m, &t0, &t1)?;
    let mut r = CommandResult::new(name, "area", Status::Affirmative);
    r.put("area", a.to_string()).put("from", t0.to_string()).put("to", t1.to_string());
    Ok(r)
}

fn mason_cmd(name: &str, a: &str, b: &str, c: &str) -> Result<CommandResult> {
    let (a, b, c) = (input::uni(a, "A")?, input::uni(b, "B")?, input::uni(c, "C")?);
    let rep = mason_check(&a, &b, &c)?;
    let mut r = CommandResult::new(name, "holds", Status::Affirmative);
    r.put("degrees", json!(rep.degrees))
        .put("radical_degree", rep.radical_degree)
        .put("slack", rep.slack)
        .put("radical", render_uni(&(&(&a * &b) * &c).radical()?, "T"));
    Ok(r)
}

fn fermat_cmd(name: &str, xyz: [&String; 3], n: u32) -> Result<CommandResult> {
    let [x, y, z] = [("x", xyz[0]), ("y", xyz[1]), ("z", xyz[2])].map(|(o, s)| input::uni(s, o));
    let (x, y, z) = (x?, y?, z?);
    let v = fermat_poly_check(&x, &y, &z, n)?;
    let status = if v == FermatVerdict::NotASolution { Status::Negative } else { Status::Affirmative };
    let mut r = CommandResult::new(name, v.to_string(), status);
    r.put("n", n);
    if v == FermatVerdict::NotASolution {
        let lhs = &x.pow(n) + &y.pow(n);
        r.put("lhs", render_uni(&lhs, "T")).put("rhs", render_uni(&z.pow(n), "T"));
    }
    Ok(r)
}

fn pell_cmd(name: &str, d: &str, solution: Option<&str>) -> Result<CommandResult> {
    let d = input::uni(d, "D")?;
    let sol = match solution {
        None => None,
        Some(s) => {
            let parts: Vec<&str> = s.split(';').collect();
            let [x, y] = parts[..] else {
                return Err(Error::InvalidInput("--solution takes \"X;Y\"".into()));
            };
            Some((input::uni(x, "X")?, input::uni(y, "Y")?))
        }
    };
    let rep = pell_bound_check(&d, sol)?;
    let (verdict, status) = if rep.possible { ("possible", Status::Affirmative) } else { ("impossible", Status::Negative) };
    let mut r = CommandResult::new(name, verdict, status);
    r.put("D", render_uni(&d, "T"))
        .put("degree", rep.degree)
        .put("distinct_roots", rep.distinct_roots)
        .put("bound", rep.bound);
    if let Some((x, y)) = &rep.solution {
        r.put("solution", json!({"X": render_uni(x, "T"), "Y": render_uni(y, "T"), "verified": true}));
    }
    Ok(r)
}

fn local_cmd(name: &str, [b1, a, b2]: [i64; 3], p: u64, cfg: &LocalConfig) -> Result<CommandResult> {
    Ok(match local_solvability(b1, a, b2, p, cfg)? {
        LocalOutcome::Certificate(c) => {
            let mut r = CommandResult::new(name, "smooth solution mod p", Status::Affirmative);
            r.put("m", c.m)
                .put("n", c.n)
                .put("e", c.e)
                .put("p", c.p)
                .put("witness", c.witness.to_string())
                .put("condition_holds", c.condition_holds)
                .put("rechecked", c.recheck());
            if !c.condition_holds {
                r.note("p divides 2*a*b1*b2*(a^2 - 4*b1*b2); the search was best effort");
            }
            r
        }
        LocalOutcome::Exhausted { condition_holds } => {
            let mut r = CommandResult::new(name, "no smooth solution mod p", Status::Inconclusive);
            r.put("p", p).put("condition_holds", condition_holds);
            r
        }
    })
}
