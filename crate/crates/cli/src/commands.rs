use num_rational::BigRational;
use num_traits::Zero;
use serde_json::{json, Value};

use bernoulli_kdv::bernoulli::bernoulli_oracle;
use bernoulli_kdv::elliptic::{bell_converged, bell_numeric, ode_residual, wp_laurent, BiPoly, RectLattice};
use bernoulli_kdv::exact_algebra::rational::{parse_pq, to_f64, to_pq};
use bernoulli_kdv::faulhaber::{faulhaber_from_bernoulli, verify_alpha2};
use bernoulli_kdv::kdv::density::is_conserved;
use bernoulli_kdv::kdv::soliton::{bernoulli_via_kdv, verify_formula1};
use bernoulli_kdv::kdv::{build_densities, build_density};
use bernoulli_kdv::quadrature::{bernoulli_numeric, quadrature_record, QuadratureSpec};
use bernoulli_kdv::tangent::{
    bernoulli_via_tangent, eq12_sides, parts_reduction_sides, tangent_number, tangent_poly,
    verify_lemma1,
};

use crate::report::{float, pq, Record, RunReport};
use crate::{CliError, Command, QuadArgs, Route, Suite, MAX_EXACT_N};

type Out = Result<RunReport, CliError>;

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn check_n(n: usize, what: &str) -> Result<(), CliError> {
    if n > MAX_EXACT_N {
        return Err(usage(format!("{what} = {n} exceeds the supported maximum {MAX_EXACT_N}")));
    }
    Ok(())
}

impl QuadArgs {
    fn spec(&self) -> QuadratureSpec {
        QuadratureSpec {
            truncation: self.truncation,
            panels: self.panels,
            nodes_per_panel: self.nodes,
            precision_bits: self.precision_bits,
            tolerance: self.tolerance,
        }
    }

    fn echo(&self, r: &mut RunReport) {
        r.tolerance("quadrature_relative", format!("{:e}", self.tolerance));
        r.tolerance("truncation", self.truncation);
        r.tolerance("panels", self.panels);
        r.tolerance("nodes_per_panel", self.nodes);
        r.tolerance("precision_bits", self.precision_bits);
    }
}

pub fn run(cmd: &Command, argv: Vec<String>) -> Out {
    let mut r = RunReport::new(argv);
    r.tolerance("exact", "equality");
    match cmd {
        Command::Bernoulli { n, route, quad } => bernoulli(&mut r, *n, route, quad)?,
        Command::Tangent { n } => tangent(&mut r, *n)?,
        Command::Faulhaber { m } => faulhaber(&mut r, *m)?,
        Command::KdvDensity { m } => kdv_density(&mut r, *m)?,
        Command::Verify {
            suite,
            max_m,
            max_n,
            order,
        } => verify(&mut r, *suite, *max_m, *max_n, *order)?,
        Command::Bh { k, g2, g3 } => bh(&mut r, *k, g2.as_deref(), g3.as_deref())?,
        Command::Bell {
            m,
            omega1,
            omega2_im,
            nodes,
            tolerance,
        } => bell(&mut r, *m, *omega1, *omega2_im, *nodes, *tolerance)?,
        Command::Report { max_m, quad } => report(&mut r, *max_m, quad)?,
    }
    Ok(r)
}

fn bernoulli(r: &mut RunReport, n: usize, routes: &[Route], quad: &QuadArgs) -> Result<(), CliError> {
    check_n(n, "n")?;
    let mut routes = routes.to_vec();
    routes.dedup();
    let oracle = bernoulli_oracle(n);
    let mut exact_values: Vec<BigRational> = Vec::new();
    let mut agree = true;
    for route in &routes {
        match route {
            Route::Oracle | Route::Tangent | Route::Kdv => {
                let (name, v) = match route {
                    Route::Oracle => ("oracle", oracle.clone()),
                    Route::Tangent => ("tangent", bernoulli_via_tangent(n)?),
                    _ => {
                        if n < 2 || n % 2 == 1 {
                            return Err(usage("the kdv route needs an even n >= 2"));
                        }
                        ("kdv", bernoulli_via_kdv(n / 2)?)
                    }
                };
                if let Some(first) = exact_values.first() {
                    agree &= *first == v;
                }
                r.push(Record::new(
                    json!({"route": name, "n": n, "value": pq(&v)}),
                    format!("{name:<10} B_{n} = {}", to_pq(&v)),
                ));
                exact_values.push(v);
            }
            Route::Quadrature => {
                if n < 2 || n % 2 == 1 {
                    return Err(usage("the quadrature route needs an even n >= 2"));
                }
                quad.echo(r);
                let q = bernoulli_numeric(n / 2, &quad.spec())?;
                let e = to_f64(&oracle);
                let rel = (q.value - e).abs() / e.abs();
                let ok = rel <= quad.tolerance;
                agree &= ok;
                r.push(Record::check(
                    json!({
                        "route": "quadrature",
                        "n": n,
                        "value": float(q.value),
                        "error_estimate": float(q.error_estimate),
                        "discretization": float(q.discretization),
                        "tail_bound": float(q.tail_bound),
                        "rounding": float(q.rounding),
                        "nodes": q.nodes,
                        "rel_error_vs_exact": float(rel),
                    }),
                    format!(
                        "quadrature B_{n} = {:.15e}  (error estimate {:.2e}, relative error {:.2e}, {} nodes)",
                        q.value, q.error_estimate, rel, q.nodes
                    ),
                    ok,
                ));
            }
        }
    }
    if routes.len() > 1 {
        r.summary = json!({"agree": agree});
    }
    Ok(())
}

fn tangent(r: &mut RunReport, n: usize) -> Result<(), CliError> {
    check_n(n, "n")?;
    let t = tangent_poly(n);
    let mut fields = json!({"n": n, "coefficients": t.to_pq_vec()});
    let mut line = format!("T_{n}(y) = {}", t.to_string().replace('x', "y"));
    if n % 2 == 1 {
        let tn = tangent_number((n + 1) / 2);
        fields["tangent_number"] = Value::String(tn.to_string());
        line.push_str(&format!("\ntangent number T({}) = {tn}", (n + 1) / 2));
    }
    r.push(Record::new(fields, line));
    Ok(())
}

fn faulhaber(r: &mut RunReport, m: usize) -> Result<(), CliError> {
    check_n(2 * m, "2m")?;
    let f = faulhaber_from_bernoulli(m)?;
    let alphas: Vec<String> = f.alphas.iter().map(to_pq).collect();
    r.push(Record::new(
        json!({"m": m, "alphas": alphas, "first_power": 2, "polynomial": f.to_poly().to_pq_vec()}),
        format!("F_{m}(lambda) = {}", f.to_poly()).replace('x', "lambda"),
    ));
    let ok = verify_alpha2(m)?;
    r.push(Record::check(
        json!({"check": "alpha2", "m": m, "alpha2": pq(f.alpha2())}),
        format!("lambda^2 coefficient {} matches the Bernoulli number", to_pq(f.alpha2())),
        ok,
    ));
    Ok(())
}

fn kdv_density(r: &mut RunReport, m: usize) -> Result<(), CliError> {
    if m > 12 {
        return Err(usage(format!("m = {m} exceeds the supported maximum 12")));
    }
    let d = build_density(m)?;
    let pairs: Vec<Value> = d
        .density
        .to_pairs()
        .into_iter()
        .map(|(e, c)| json!([e, c]))
        .collect();
    r.push(Record::new(
        json!({"m": m, "weight": d.weight(), "terms": pairs}),
        format!("P_{m} = {}", d.density),
    ));
    r.push(Record::check(
        json!({"check": "conserved", "m": m}),
        "conserved under u_t = 6 u u_x - u_xxx",
        is_conserved(&d.density),
    ));
    Ok(())
}

fn verify(
    r: &mut RunReport,
    suite: Suite,
    max_m: Option<usize>,
    max_n: Option<usize>,
    order: Option<usize>,
) -> Result<(), CliError> {
    match suite {
        Suite::Lemma1 => {
            let order = order.unwrap_or(12);
            check_n(order, "order")?;
            let rep = verify_lemma1(order);
            for (k, ok) in rep.coefficients.iter().enumerate() {
                r.push(Record::check(json!({"k": k}), format!("z^{k}"), *ok));
            }
        }
        Suite::Lemma2 => {
            let max_n = max_n.unwrap_or(30);
            check_n(max_n, "max-n")?;
            for n in 2..=max_n {
                let v = bernoulli_via_tangent(n)?;
                let o = bernoulli_oracle(n);
                r.push(Record::check(
                    json!({"n": n, "value": pq(&v)}),
                    format!("B_{n} = {}", to_pq(&v)),
                    v == o,
                ));
            }
        }
        Suite::Eq1 => {
            let max_m = max_m.unwrap_or(6);
            if max_m == 0 || max_m > 8 {
                return Err(usage("eq1 needs 1 <= max-m <= 8"));
            }
            for d in build_densities(max_m - 1)? {
                let ok = verify_formula1(&d)?;
                let m = d.m + 1;
                r.push(Record::check(
                    json!({"m": m}),
                    format!("P_{} at the soliton matches F_{m}", d.m),
                    ok,
                ));
            }
        }
        Suite::Eq12 => {
            let max_n = max_n.unwrap_or(40);
            check_n(max_n, "max-n")?;
            for n in 1..=max_n {
                let (lhs, rhs) = eq12_sides(n);
                r.push(Record::check(
                    json!({"n": n, "integral": pq(&lhs), "scaled_value_at_zero": pq(&rhs)}),
                    format!("n = {n}: integral {}", to_pq(&lhs)),
                    lhs == rhs,
                ));
            }
        }
        Suite::Alpha2 => {
            let max_m = max_m.unwrap_or(12);
            check_n(2 * max_m, "2 max-m")?;
            for m in 1..=max_m {
                let f = faulhaber_from_bernoulli(m)?;
                r.push(Record::check(
                    json!({"m": m, "alpha2": pq(f.alpha2())}),
                    format!("m = {m}: alpha2 = {}", to_pq(f.alpha2())),
                    verify_alpha2(m)?,
                ));
            }
        }
        Suite::Parts => {
            let max_m = max_m.unwrap_or(15);
            check_n(2 * max_m, "2 max-m")?;
            for m in 1..=max_m {
                let (lhs, rhs) = parts_reduction_sides(m)?;
                r.push(Record::check(
                    json!({"m": m, "lhs": pq(&lhs), "rhs": pq(&rhs)}),
                    format!("m = {m}: {}", to_pq(&lhs)),
                    lhs == rhs,
                ));
            }
        }
        Suite::Ode14 => {
            let k = order.unwrap_or(20);
            if k == 0 || k > 60 {
                return Err(usage("ode14 needs 1 <= order <= 60"));
            }
            let res = ode_residual(&wp_laurent(k));
            for (i, c) in res.coeffs().iter().enumerate() {
                r.push(Record::check(
                    json!({"power": i, "residual": c.to_string()}),
                    format!("z^{i} residual {c}"),
                    c.is_zero(),
                ));
            }
        }
    }
    Ok(())
}

fn bh(r: &mut RunReport, k: usize, g2: Option<&str>, g3: Option<&str>) -> Result<(), CliError> {
    if k == 0 || k > 60 {
        return Err(usage("bh needs 1 <= k <= 60"));
    }
    let inv = match (g2, g3) {
        (Some(a), Some(b)) => Some((parse_pq(a)?, parse_pq(b)?)),
        (None, None) => None,
        _ => return Err(usage("give both --g2 and --g3 or neither")),
    };
    if let Some((a, b)) = &inv {
        r.summary = json!({"g2": pq(a), "g3": pq(b)});
    }
    let table = wp_laurent(k);
    for j in 1..=k {
        let idx = 2 * j + 2;
        let poly: BiPoly = table.bh(j);
        let mut fields = json!({
            "k": j,
            "index": idx,
            "laurent": table.laurent(j).to_string(),
            "bh": poly.to_string(),
        });
        let line = match &inv {
            Some((a, b)) => {
                let v = table.bh_at(j, a, b);
                fields["value"] = pq(&v);
                format!("BH_{idx} = {}", to_pq(&v))
            }
            None => format!("BH_{idx} = {poly}"),
        };
        r.push(Record::new(fields, line));
    }
    let res = ode_residual(&table);
    r.push(Record::check(
        json!({"check": "ode_residual", "through_power": res.order()}),
        format!("Laurent coefficients satisfy the ODE through z^{}", res.order()),
        res.coeffs().iter().all(|c| c.is_zero()),
    ));
    Ok(())
}

fn bell(
    r: &mut RunReport,
    m: usize,
    omega1: f64,
    omega2_im: f64,
    nodes: Option<usize>,
    tol: f64,
) -> Result<(), CliError> {
    let lat = RectLattice::new(omega1, omega2_im)?;
    let g = lat.invariants();
    r.summary = json!({
        "omega1": float(omega1),
        "omega2_im": float(omega2_im),
        "g2": float(g.g2),
        "g3": float(g.g3),
        "cycle": "t + omega2, t in [0, 2 omega1]",
    });
    let (value, used, change) = match nodes {
        Some(n) => {
            if n < 2 || n % 2 == 1 {
                return Err(usage("--nodes must be even and >= 2"));
            }
            r.tolerance("doubling", "none (fixed nodes)");
            let v = bell_numeric(&lat, m, n)?;
            let half = bell_numeric(&lat, m, n / 2)?;
            (v, n, (v - half).abs())
        }
        None => {
            r.tolerance("doubling", format!("{tol:e}"));
            let b = bell_converged(&lat, m, tol)?;
            (b.value, b.nodes, b.last_change)
        }
    };
    r.push(Record::new(
        json!({
            "m": m,
            "value": float(value),
            "nodes": used,
            "change_on_doubling": float(change),
        }),
        format!(
            "B^ell_{m} = {value:.15e}  ({used} nodes, change on doubling {change:.2e}; g2 = {:.12e}, g3 = {:.12e})",
            g.g2, g.g3
        ),
    ));
    Ok(())
}

fn report(r: &mut RunReport, max_m: usize, quad: &QuadArgs) -> Result<(), CliError> {
    if max_m == 0 || max_m > 40 {
        return Err(usage("report needs 1 <= max-m <= 40"));
    }
    quad.echo(r);
    let spec = quad.spec();
    for m in 1..=max_m {
        let q = quadrature_record(m, &spec)?;
        let n = &q.numeric;
        let ok = q.rel_error <= quad.tolerance && !q.exact.is_zero();
        r.push(Record::check(
            json!({
                "m": m,
                "n": 2 * m,
                "exact": pq(&q.exact),
                "value": float(n.value),
                "abs_error": float(q.abs_error),
                "rel_error": float(q.rel_error),
                "error_estimate": float(n.error_estimate),
                "tail_bound": float(n.tail_bound),
                "rounding": float(n.rounding),
                "nodes": n.nodes,
            }),
            format!(
                "B_{:<3} {:>24.16e}  rel err {:.2e}  estimate {:.2e}  tail {:.1e}",
                2 * m,
                n.value,
                q.rel_error,
                n.error_estimate,
                n.tail_bound
            ),
            ok,
        ));
    }
    Ok(())
}
