use std::fmt::Write as _;

use hyperlab::change_of_variables::{curve_f, curve_g, forward, inverse, jacobian};
use hyperlab::identities::{self, Provenance, VerificationRecord, VerificationReport};
use hyperlab::special_functions::{const_alpha, li2, rogers_l};
use hyperlab::{Error, MapPoint, QuadConfig, SquarePoint};
use serde_json::{json, Map, Value};

use crate::render::{canonical_json, exact, num, significant};
use crate::{Cli, Command, EvalCommand, Failure, Output, OutputFormat, EXIT_FAILED, EXIT_OK};

const DIGITS: usize = 16;

pub(crate) fn dispatch(cli: &Cli) -> Result<Output, Failure> {
    let cfg = cli.quad_config();
    cfg.validate().map_err(Failure::usage)?;
    match &cli.command {
        Command::Verify { ids } => verify(ids, &cfg, cli.format),
        Command::Eval { what } => eval(*what, cli.format),
        Command::Region { u_max, n } => region(*u_max, *n, cli.format),
        Command::List => Ok(list(cli.format)),
    }
}

fn csv_string(rows: impl IntoIterator<Item = Vec<String>>) -> Result<String, Failure> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in rows {
        w.write_record(&row).map_err(Failure::usage)?;
    }
    let bytes = w.into_inner().map_err(Failure::usage)?;
    String::from_utf8(bytes).map_err(Failure::usage)
}

fn verify(ids: &[String], cfg: &QuadConfig, format: OutputFormat) -> Result<Output, Failure> {
    let report = identities::verify_selected(ids, cfg).map_err(Failure::usage)?;
    let data = match format {
        OutputFormat::Text => verify_text(&report),
        OutputFormat::Json => canonical_json(&verify_json(&report)),
        OutputFormat::Csv => verify_csv(&report)?,
    };
    let diagnostics = report
        .records
        .iter()
        .filter_map(|r| r.diagnostic.as_ref().map(|d| format!("{}: {d}", r.id)))
        .collect();
    Ok(Output {
        data,
        diagnostics,
        code: if report.all_passed() {
            EXIT_OK
        } else {
            EXIT_FAILED
        },
    })
}

fn ms(r: &VerificationRecord) -> f64 {
    r.elapsed.as_secs_f64() * 1e3
}

fn verify_text(report: &VerificationReport) -> String {
    let mut s = format!(
        "{:<4} {:>22} {:>22} {:>9} {:>6} {:>9} {:>8}\n",
        "id", "lhs", "rhs", "residual", "result", "evals", "ms"
    );
    for r in &report.records {
        writeln!(
            s,
            "{:<4} {:>22} {:>22} {:>9.1e} {:>6} {:>9} {:>8.2}",
            r.id,
            significant(r.lhs_value, DIGITS),
            significant(r.rhs_value, DIGITS),
            r.residual,
            if r.passed { "PASS" } else { "FAIL" },
            r.evaluations,
            ms(r)
        )
        .unwrap();
    }
    writeln!(
        s,
        "{} passed, {} failed in {:.1} ms",
        report.passed(),
        report.failed(),
        report.elapsed.as_secs_f64() * 1e3
    )
    .unwrap();
    s
}

fn record_json(r: &VerificationRecord) -> Value {
    let parts: Vec<Value> = r
        .parts
        .iter()
        .map(|p| {
            json!({
                "label": p.label,
                "lhs": num(p.lhs),
                "rhs": num(p.rhs),
                "residual": num(p.residual),
                "converged": p.converged,
            })
        })
        .collect();
    json!({
        "id": r.id,
        "description": r.description,
        "reference": r.reference,
        "external": r.provenance == Provenance::External,
        "lhs": num(r.lhs_value),
        "rhs": num(r.rhs_value),
        "residual": num(r.residual),
        "tolerance": num(r.tolerance),
        "passed": r.passed,
        "converged": r.converged,
        "evaluations": r.evaluations,
        "parts": parts,
        "diagnostic": r.diagnostic,
    })
}

fn verify_json(report: &VerificationReport) -> Value {
    json!({
        "identities": report.records.iter().map(record_json).collect::<Vec<_>>(),
        "summary": {
            "passed": report.passed(),
            "failed": report.failed(),
            "elapsed_ms": num(report.elapsed.as_secs_f64() * 1e3),
        },
    })
}

fn verify_csv(report: &VerificationReport) -> Result<String, Failure> {
    let header = [
        "id",
        "lhs",
        "rhs",
        "residual",
        "tolerance",
        "passed",
        "converged",
        "evaluations",
        "ms",
        "reference",
    ];
    let rows = report.records.iter().map(|r| {
        vec![
            r.id.to_string(),
            exact(r.lhs_value),
            exact(r.rhs_value),
            exact(r.residual),
            exact(r.tolerance),
            r.passed.to_string(),
            r.converged.to_string(),
            r.evaluations.to_string(),
            exact(ms(r)),
            r.reference.to_string(),
        ]
    });
    csv_string(std::iter::once(header.map(String::from).to_vec()).chain(rows))
}

fn eval(what: EvalCommand, format: OutputFormat) -> Result<Output, Failure> {
    let mut extra = Map::new();
    let values: Vec<(&str, f64)> = match what {
        EvalCommand::Li2 { x } => {
            let v = li2(x).map_err(Failure::usage)?;
            extra.insert("terms_used".into(), v.terms_used.into());
            extra.insert("reduction_path".into(), v.reduction_path.as_str().into());
            vec![("value", v.value)]
        }
        EvalCommand::Rogers { x } => vec![("value", rogers_l(x).map_err(Failure::usage)?)],
        EvalCommand::Alpha => vec![("value", const_alpha())],
        EvalCommand::MapForward { u, v } => {
            let q = forward(MapPoint::new(u, v)).map_err(Failure::usage)?;
            vec![("x", q.x), ("y", q.y)]
        }
        EvalCommand::MapInverse { x, y } => {
            let p = inverse(SquarePoint::new(x, y)).map_err(Failure::usage)?;
            vec![("u", p.u), ("v", p.v)]
        }
        EvalCommand::Jacobian { u, v } => {
            let p = MapPoint::new(u, v);
            forward(p).map_err(Failure::usage)?;
            vec![("value", jacobian(p))]
        }
    };
    let data = match format {
        OutputFormat::Text => {
            let line: Vec<String> = values
                .iter()
                .map(|&(k, x)| match values.len() {
                    1 => significant(x, DIGITS),
                    _ => format!("{k}={}", significant(x, DIGITS)),
                })
                .collect();
            format!("{}\n", line.join(" "))
        }
        OutputFormat::Json => {
            for &(k, x) in &values {
                extra.insert(k.into(), num(x));
            }
            canonical_json(&Value::Object(extra))
        }
        OutputFormat::Csv => csv_string([
            values.iter().map(|&(k, _)| k.to_string()).collect(),
            values.iter().map(|&(_, x)| exact(x)).collect(),
        ])?,
    };
    Ok(Output {
        data,
        diagnostics: Vec::new(),
        code: EXIT_OK,
    })
}

struct CurveRow {
    u: f64,
    f: f64,
    g: Option<f64>,
}

fn region(u_max: f64, n: usize, format: OutputFormat) -> Result<Output, Failure> {
    if !(u_max.is_finite() && u_max > 0.0) {
        return Err(Failure::usage(format!(
            "region: u_max must be finite and positive, got {u_max}"
        )));
    }
    if n < 2 {
        return Err(Failure::usage(format!(
            "region: need at least 2 grid points, got {n}"
        )));
    }
    let alpha: f64 = const_alpha();
    let grid: Vec<f64> = (0..n).map(|i| u_max * i as f64 / (n - 1) as f64).collect();
    let rows = grid
        .iter()
        .map(|&u| {
            Ok(CurveRow {
                u,
                f: curve_f(u)?,
                g: if u < alpha { None } else { Some(curve_g(u)?) },
            })
        })
        .collect::<Result<Vec<_>, Error>>()
        .map_err(Failure::usage)?;

    let data = match format {
        OutputFormat::Text => {
            let mut s = format!("alpha = {}\n", significant(alpha, DIGITS));
            writeln!(s, "{:>22} {:>22} {:>22}", "u", "f(u)", "g(u)").unwrap();
            for r in &rows {
                let g = r.g.map(|g| significant(g, DIGITS)).unwrap_or_default();
                writeln!(
                    s,
                    "{:>22} {:>22} {:>22}",
                    significant(r.u, DIGITS),
                    significant(r.f, DIGITS),
                    g
                )
                .unwrap();
            }
            s
        }
        OutputFormat::Csv => {
            let body = csv_string(
                std::iter::once(vec!["u".into(), "f".into(), "g".into()]).chain(
                    rows.iter()
                        .map(|r| vec![exact(r.u), exact(r.f), r.g.map(exact).unwrap_or_default()]),
                ),
            )?;
            format!("# alpha={}\n{body}", exact(alpha))
        }
        OutputFormat::Json => {
            let curves: Vec<Value> = rows
                .iter()
                .map(|r| json!({"u": num(r.u), "f": num(r.f), "g": r.g.map(num)}))
                .collect();
            let interior = interior_points(&rows, n).map_err(Failure::usage)?;
            canonical_json(&json!({
                "alpha": num(alpha),
                "u_max": num(u_max),
                "n": n,
                "curves": curves,
                "interior": interior,
            }))
        }
    };
    Ok(Output {
        data,
        diagnostics: Vec::new(),
        code: EXIT_OK,
    })
}

/// Cell-centred points strictly between the lower and upper boundary at each
/// positive grid abscissa, with their images in the unit square.
fn interior_points(rows: &[CurveRow], n: usize) -> Result<Vec<Value>, Error> {
    let mut out = Vec::new();
    for r in rows.iter().filter(|r| r.u > 0.0) {
        let lo = r.g.unwrap_or(0.0).max(0.0);
        for j in 0..n {
            let v = lo + (j as f64 + 0.5) / n as f64 * (r.f - lo);
            let q = forward(MapPoint::new(r.u, v))?;
            out.push(json!({"u": num(r.u), "v": num(v), "x": num(q.x), "y": num(q.y)}));
        }
    }
    Ok(out)
}

fn list(format: OutputFormat) -> Output {
    let registry = identities::registry();
    let data = match format {
        OutputFormat::Json => canonical_json(&Value::Array(
            registry
                .iter()
                .map(|i| {
                    json!({
                        "id": i.id,
                        "description": i.description,
                        "reference": i.reference,
                        "tolerance": num(i.tolerance),
                        "external": i.provenance == Provenance::External,
                    })
                })
                .collect(),
        )),
        _ => {
            let mut s = String::new();
            for i in &registry {
                writeln!(s, "{:<4} {}", i.id, i.reference).unwrap();
            }
            s
        }
    };
    Output {
        data,
        diagnostics: Vec::new(),
        code: EXIT_OK,
    }
}
