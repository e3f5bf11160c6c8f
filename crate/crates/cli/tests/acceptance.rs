//! Acceptance checks, one line per criterion. Runs the built binary where
//! a criterion is about command output or exit codes.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::{Command, ExitCode};

use curve_forge::diophantine::{local_solvability, mason_check, LocalConfig, LocalOutcome};
use curve_forge::parametrize::conic_matrix;
use curve_forge::parse::{parse_poly, render_poly};
use curve_forge::poly::{BinaryForm, TriPoly, UniPoly, Z};
use curve_forge::scalar::int;
use curve_forge::{ErrorClass, Rat};
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn cli(args: &[&str]) -> (i32, Value) {
    let out = Command::new(env!("CARGO_BIN_EXE_curve-forge"))
        .arg("--json")
        .args(args)
        .output()
        .expect("binary runs");
    let v = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    (out.status.code().unwrap_or(-1), v)
}

fn payload<'a>(v: &'a Value, key: &str) -> &'a str {
    v["payload"][key].as_str().unwrap_or("<missing>")
}

fn forms(s: &str) -> Vec<TriPoly<Rat>> {
    s.trim_matches(|c| c == '(' || c == ')')
        .split(" : ")
        .map(|p| parse_poly(&p.into(), &["u", "v"]).unwrap())
        .collect()
}

const LEMNISCATE: &str = "(X^2 + Y^2)^2 - (X^2 - Y^2)*Z^2";

fn c1() -> Check {
    let (code, v) = cli(&["param", "conic", "X^2 + Y^2 - Z^2", "--point", "[-1:0:1]"]);
    // (v²−u² : 2uv : u²+v²), and x = (1−t²)/(1+t²) with t = u/v
    let want = "(-u^2 + v^2 : 2*u*v : u^2 + v^2)";
    ensure!(code == 0, "exit {code}");
    ensure!(payload(&v, "map") == want, "map {}", payload(&v, "map"));
    ensure!(payload(&v, "x") == "(-t^2 + 1)/(t^2 + 1)" && payload(&v, "y") == "2*t/(t^2 + 1)", "affine {v}");
    Ok(want.into())
}

fn c2() -> Check {
    let (code, v) = cli(&["param", "split", "y^2 = x^3 + x^2"]);
    ensure!(code == 0, "exit {code}");
    ensure!(payload(&v, "x") == "t^2 - 1" && payload(&v, "y") == "t^3 - t", "{v}");
    Ok("x = t^2 - 1, y = t^3 - t".into())
}

fn c3() -> Check {
    let (x, y) = ("t*(t^2+1)/(t^4+1)", "t*(t^2-1)/(t^4+1)");
    let (code, v) = cli(&["verify", LEMNISCATE, "--map", &format!("{x};{y}")]);
    ensure!(code == 0, "verify exit {code}: {v}");
    let (code, v) = cli(&["implicitize", "--x", x, "--y", y]);
    let want = "x^4 + 2*x^2*y^2 + y^4 - x^2 + y^2";
    ensure!(code == 0 && payload(&v, "equation") == want, "implicitize {v}");
    Ok(format!("verified; implicit {want}"))
}

fn c4() -> Check {
    let (code, v) = cli(&["area", "--map", "t^2 - 1;t^3 - t", "--from", "-1", "--to", "1"]);
    ensure!(code == 0 && payload(&v, "area") == "8/15", "{v}");
    Ok("8/15".into())
}

fn points(v: &Value) -> Vec<(String, u64, String)> {
    v["payload"]["points"]
        .as_array()
        .map(|ps| {
            ps.iter()
                .map(|p| {
                    (
                        p["point"].as_str().unwrap_or("").to_string(),
                        p["multiplicity"].as_u64().unwrap_or(0),
                        p["field"].as_str().unwrap_or("Q").to_string(),
                    )
                })
                .collect()
        })
        .unwrap_or_default()
}

fn c5() -> Check {
    let (code, v) = cli(&["singular", "Y^2*Z^2 - X^4 - Z^4"]);
    let pts = points(&v);
    ensure!(code == 0 && pts.len() == 1 && pts[0].0 == "[0:1:0]", "quartic {pts:?}");
    let (code, v) = cli(&["singular", LEMNISCATE]);
    let pts = points(&v);
    let want = [
        ("[0:0:1]", 2, "Q"),
        ("[1:sqrt(-1):0]", 2, "Q(sqrt(-1))"),
        ("[1:-sqrt(-1):0]", 2, "Q(sqrt(-1))"),
    ];
    ensure!(code == 0 && pts.len() == 3, "lemniscate {pts:?}");
    for (w, got) in want.iter().zip(&pts) {
        ensure!(got.0 == w.0 && got.1 == w.1 && got.2 == w.2, "lemniscate {pts:?}");
    }
    ensure!(v["payload"]["clusters"].as_array().is_some_and(|c| c.is_empty()), "clusters {v}");
    let (c0, g0) = cli(&["genus", LEMNISCATE]);
    let (c1, g1) = cli(&["genus", "X^3 + Y^3 - Z^3"]);
    ensure!(c0 == 0 && g0["payload"]["genus"] == 0, "genus lemniscate {g0}");
    ensure!(c1 == 0 && g1["payload"]["genus"] == 1, "genus Fermat cubic {g1}");
    Ok("{[0:1:0]}; lemniscate 3 double points; genus 0 and 1".into())
}

fn c6() -> Check {
    let (a, va) = cli(&["certificate", "X^3 + Y^3 - Z^3"]);
    let (b, vb) = cli(&["certificate", "Y^2*Z - X^3 + X*Z^2"]);
    let (c, vc) = cli(&["certificate", "X^3 + X^2*Z - Y^2*Z"]);
    ensure!((a, b, c) == (0, 0, 1), "exit codes {a}/{b}/{c}");
    ensure!(va["payload"]["rechecked"] == true && vb["payload"]["rechecked"] == true, "recheck");
    ensure!(vc["payload"]["witness"]["point"] == "[0:0:1]", "witness {vc}");
    Ok("exit 0/0/1, witness [0:0:1]".into())
}

fn c7() -> Check {
    let (code, v) = cli(&["kapferer", "X^2 + Y^2 - Z^2", "--map", "(1-t^2)/(1+t^2);2*t/(1+t^2)"]);
    ensure!(code == 0 && v["payload"]["complete"] == true, "circle {v}");
    let p = parse_poly(&payload(&v, "p").into(), &["u", "v"]).map_err(|e| e.to_string())?;
    let q = Rat::new(payload(&v, "q").parse().map_err(|_| "q")?, 1.into());
    ensure!(p.is_constant() && !p.is_zero(), "p = {p:?} not a nonzero constant");
    // recheck q·P = p·F_*(f,g,h) from the printed forms
    let strs = |k: &str| -> Vec<TriPoly<Rat>> {
        v["payload"][k]
            .as_array()
            .unwrap()
            .iter()
            .map(|s| parse_poly(&s.as_str().unwrap().into(), &["u", "v"]).unwrap())
            .collect()
    };
    for (m, e) in strs("minors").iter().zip(strs("evaluated_partials")) {
        ensure!(m.scale(&q) == &p * &e, "proportionality fails");
    }
    let dc = &v["payload"]["degree_check"];
    ensure!(dc["minors_degree"] == 2 && dc["partials_degree"] == 2 && dc["holds"] == true, "degrees {dc}");
    let ratio = format!("{}/{}", payload(&v, "p"), payload(&v, "q"));
    let (code, v) = cli(&["kapferer", "X^3 + X^2*Z - Y^2*Z", "--map", "(u^2 - v^2)*v;u*(u^2 - v^2);v^3"]);
    ensure!(code == 0 && payload(&v, "gcd") == "u^2 - v^2", "cubic gcd {v}");
    ensure!(v["payload"]["singular_points"] == serde_json::json!(["[0:0:1]"]), "cubic points {v}");
    Ok(format!("p/q = {ratio}, 2 >= 2; gcd u^2 - v^2 -> [0:0:1]"))
}

fn random_uni(rng: &mut ChaCha8Rng, max_deg: usize) -> UniPoly<Rat> {
    let d = rng.gen_range(0..=max_deg);
    let cs: Vec<i64> = (0..=d).map(|_| rng.gen_range(-5..=5)).collect();
    UniPoly::from_i64s(&cs)
}

fn c8() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let (mut valid, mut violations) = (0, 0);
    let mut slack = std::collections::BTreeMap::<i64, usize>::new();
    while valid < 500 {
        let (a, b) = if rng.gen_bool(0.5) {
            (random_uni(&mut rng, 5), random_uni(&mut rng, 5))
        } else {
            let (i, j) = (rng.gen_range(1..=4), rng.gen_range(1..=4));
            (random_uni(&mut rng, 2).pow(i), -&random_uni(&mut rng, 2).pow(j))
        };
        let c = -&(&a + &b);
        let ok = !a.is_zero() && !b.is_zero() && !c.is_zero() && a.gcd(&b).is_constant();
        if !ok || (a.is_constant() && b.is_constant() && c.is_constant()) {
            continue;
        }
        valid += 1;
        match mason_check(&a, &b, &c) {
            Ok(r) if r.holds => *slack.entry(r.slack).or_default() += 1,
            Ok(_) => violations += 1,
            Err(e) if e.class() == ErrorClass::Contradiction => violations += 1,
            Err(e) => return Err(format!("valid triple rejected: {e}")),
        }
    }
    ensure!(violations == 0, "{violations} violations");
    Ok(format!("500 triples, 0 violations, slack histogram {slack:?}"))
}

fn c9() -> Check {
    let (a, va) = cli(&["pell", "T^2 - 1", "--solution", "T;1"]);
    ensure!(a == 0 && va["verdict"] == "possible" && va["payload"]["solution"]["verified"] == true, "{va}");
    for d in ["T^4", "T^2"] {
        let (code, v) = cli(&["pell", d]);
        ensure!(code == 1 && v["verdict"] == "impossible", "{d}: {v}");
    }
    Ok("T^2 - 1 possible with (T, 1); T^4, T^2 impossible".into())
}

fn c10() -> Check {
    let triples: [(i64, i64, i64); 20] = [
        (1, 1, 1),
        (2, 1, 3),
        (1, 3, -1),
        (-1, 1, 2),
        (3, 5, 7),
        (1, -1, 1),
        (2, 3, -5),
        (5, 2, 1),
        (-3, 4, 2),
        (7, -2, 3),
        (1, 6, 11),
        (-2, -5, 3),
        (4, 1, -6),
        (9, 7, 2),
        (1, 10, -3),
        (-7, 3, -1),
        (6, -11, 2),
        (13, 1, 5),
        (2, 9, 17),
        (-5, 12, -13),
    ];
    let primes: Vec<u64> = (3..100u64).step_by(2).filter(|&p| (3..p).step_by(2).all(|d| p % d != 0)).collect();
    let cfg = LocalConfig::default();
    let mut issued = 0;
    for (b1, a, b2) in triples {
        for &p in &primes {
            let prod = 2 * a as i128 * b1 as i128 * b2 as i128 * (a as i128 * a as i128 - 4 * b1 as i128 * b2 as i128);
            if prod.rem_euclid(p as i128) == 0 {
                continue;
            }
            match local_solvability(b1, a, b2, p, &cfg) {
                Ok(LocalOutcome::Certificate(c)) => ensure!(c.recheck(), "({b1},{a},{b2}) mod {p}: recheck fails"),
                other => return Err(format!("({b1},{a},{b2}) mod {p}: {other:?}")),
            }
            issued += 1;
        }
    }
    Ok(format!("{issued} certificates over 20 triples, all re-verified"))
}

fn line(p: [i64; 3], w: [i64; 3]) -> TriPoly<Rat> {
    let c = [p[1] * w[2] - p[2] * w[1], p[2] * w[0] - p[0] * w[2], p[0] * w[1] - p[1] * w[0]];
    (0..3).fold(TriPoly::zero(), |acc, i| &acc + &TriPoly::var(i).scale(&int(c[i])))
}

fn c11() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let pt = |rng: &mut ChaCha8Rng| loop {
        let p = [0; 3].map(|_| rng.gen_range(-4i64..=4));
        if p != [0, 0, 0] {
            return p;
        }
    };
    let mut done = 0;
    while done < 50 {
        let (p, q) = (pt(&mut rng), pt(&mut rng));
        let w = [0; 4].map(|_| pt(&mut rng));
        let k = rng.gen_range(-3i64..=3);
        // a smooth conic through p from a pencil of line pairs
        let f = &(&line(q, w[0]) * &line(p, w[1])) + &(&line(q, w[2]) * &line(p, w[3])).scale(&int(k));
        let Ok(m) = conic_matrix(&f) else { continue };
        let det = &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1])
            - &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
            + &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0]);
        if det.is_zero() {
            continue;
        }
        let text = render_poly(&f, &["X", "Y", "Z"]);
        let point = format!("[{}:{}:{}]", p[0], p[1], p[2]);
        let (code, v) = cli(&["param", "conic", &text, "--point", &point]);
        ensure!(code == 0, "param conic {text} at {point}: {v}");
        let (code, w) = cli(&["implicitize", "--x", payload(&v, "x"), "--y", payload(&v, "y")]);
        ensure!(code == 0, "implicitize {v}: {w}");
        let want = render_poly(&f.dehomogenize(Z).primitive(), &["x", "y", "z"]);
        ensure!(payload(&w, "equation") == want, "{text}: got {} want {want}", payload(&w, "equation"));
        done += 1;
    }
    Ok("50 conics reproduced exactly".into())
}

fn c12() -> Check {
    let f = "X^2*Y^2 - Y^2*Z^2 - X^2*Z^2";
    let (code, v) = cli(&["param", "quartic3", f, "--nodes", "[1:0:0];[0:1:0];[0:0:1]"]);
    ensure!(code == 0 && v["payload"]["degree"] == 4, "{v}");
    let map = payload(&v, "map").to_string();
    let fs = forms(&map);
    let bf: Vec<BinaryForm<Rat>> = fs.iter().map(|p| BinaryForm::from_tri(p, 4).unwrap()).collect();
    ensure!(BinaryForm::gcd_all(&bf).is_some_and(|g| g.is_constant()), "forms share a factor");
    let joined = map.trim_matches(|c| c == '(' || c == ')').replace(" : ", ";");
    let (code, _) = cli(&["verify", f, "--map", &joined]);
    ensure!(code == 0, "verify exit {code}");
    let (code, _) = cli(&["param", "quartic3", "X^2*Y^2 + Y^2*Z^2 + X^2*Z^2"]);
    ensure!(code == 3, "no rational point: exit {code}");
    let (code, _) = cli(&["param", "quartic3", LEMNISCATE, "--nodes", "[0:0:1];[1:i:0];[1:-i:0]"]);
    ensure!(code == 1, "irrational nodes: exit {code}");
    Ok(format!("{map}; error exits 3/1"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("unit-circle conic parametrization", c1),
        ("split-degree cubic", c2),
        ("lemniscate verify and implicitize", c3),
        ("area under the nodal cubic loop", c4),
        ("singular loci and genus", c5),
        ("non-parametrizability certificates", c6),
        ("Jacobian-minor witness mechanics", c7),
        ("Mason-Stothers on 500 random triples", c8),
        ("polynomial Pell verdicts", c9),
        ("local solvability certificates", c10),
        ("conic parametrize/implicitize round trip", c11),
        ("three-node quartic", c12),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let r = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        match r {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
