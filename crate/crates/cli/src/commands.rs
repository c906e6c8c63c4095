use diagzeta::diagonal::{
    diagonal_oracle, exact_value, numeric_value, MAX_EXACT_DEPTH, MAX_ORACLE_DEPTH,
};
use diagzeta::identities::{
    functional_relation, functional_relation_printed_star, harmonic_product, merca_report,
    three_way_agreement, value_at_even_report, value_at_two_report, value_at_zero_report,
    vanishing_at_negative_even, IdentityReport, Param,
};
use diagzeta::laurent::{laurent_numeric_check, nonvanishing_certificate, pole_set, DEFAULT_EPSILONS};
use diagzeta::{Argument, Family, Method, OracleConfig, Value};

use crate::args::{Cli, Command, EvalArgs, ExactArgs, PolesArgs, Suite, TableArgs, VerifyArgs};
use crate::report::{Document, Field, Row, Verdict};

type Outcome = Result<Document, String>;

fn err(e: diagzeta::Error) -> String {
    e.to_string()
}

pub fn execute(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Eval(a) => eval(a),
        Command::Exact(a) => exact(a),
        Command::Verify(a) => verify(a),
        Command::Poles(a) => poles(a),
        Command::Table(a) => table(a),
    }
}

fn parse_real(s: &str) -> Result<f64, String> {
    match s.trim().parse::<f64>() {
        Ok(x) if x.is_finite() => Ok(x),
        _ => Err(format!("argument {s:?} is not a finite decimal number")),
    }
}

fn parse_integer(s: &str) -> Result<i64, String> {
    s.trim()
        .parse::<i64>()
        .map_err(|_| format!("argument {s:?} is not an integer"))
}

fn check_depth(depth: usize, cap: usize, what: &str) -> Result<(), String> {
    if depth > cap {
        Err(format!("{what} depth {depth} exceeds the supported maximum {cap}"))
    } else {
        Ok(())
    }
}

fn row<const N: usize>(items: [(&str, Field); N]) -> Row {
    items.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

fn value_field(v: &Value) -> Field {
    match v {
        Value::Real(x) => Field::Real(*x),
        Value::Exact(p) => Field::Text(p.to_canonical()),
    }
}

fn eval(a: &EvalArgs) -> Outcome {
    let s = parse_real(&a.arg)?;
    check_depth(a.depth, MAX_EXACT_DEPTH, "eval")?;
    let mut doc = Document::new("eval", &["kind", "method", "value", "error_bound"]);
    doc.param("family", a.family.name());
    doc.param("depth", a.depth);
    doc.param("argument", s);
    doc.param("oracle_n", a.oracle_n);

    let mut values = Vec::new();
    for method in [Method::ClosedForm, Method::BellForm, Method::Recurrence] {
        values.push((method, numeric_value(a.family, a.depth, s, method).map_err(err)?, None));
    }
    if let Some(n) = a.oracle_n {
        check_depth(a.depth, MAX_ORACLE_DEPTH, "oracle")?;
        let v = diagonal_oracle(a.family, a.depth, s, OracleConfig::new(n)).map_err(err)?;
        values.push((Method::Oracle, v.value.to_f64(), v.error_bound));
    }
    for (method, value, bound) in &values {
        doc.push(row([
            ("kind", "value".into()),
            ("method", method.name().into()),
            ("value", (*value).into()),
            ("error_bound", (*bound).into()),
        ]));
    }
    for (i, (m1, v1, _)) in values.iter().enumerate() {
        for (m2, v2, _) in &values[i + 1..] {
            doc.push(row([
                ("kind", "delta".into()),
                ("method", format!("{} - {}", m1.name(), m2.name()).into()),
                ("value", (v1 - v2).into()),
                ("error_bound", Field::Null),
            ]));
        }
    }
    Ok(doc)
}

fn exact(a: &ExactArgs) -> Outcome {
    let m = parse_integer(&a.arg)?;
    let mut doc = Document::new("exact", &["method", "value", "approx"]);
    doc.param("family", a.family.name());
    doc.param("depth", a.depth);
    doc.param("argument", m);
    let mut values = Vec::new();
    for method in [Method::ClosedForm, Method::BellForm, Method::Recurrence] {
        values.push((method, exact_value(a.family, a.depth, m, method).map_err(err)?));
    }
    if values.iter().any(|(_, v)| *v != values[0].1) {
        doc.verdict = Verdict::Fail;
        doc.notes.push("exact methods disagree".into());
    }
    for (method, v) in &values {
        doc.push(row([
            ("method", method.name().into()),
            ("value", v.to_canonical().into()),
            ("approx", v.to_f64().into()),
        ]));
    }
    doc.plain = Some(values[0].1.to_canonical());
    Ok(doc)
}

fn param_field(p: &Param) -> Field {
    match p {
        Param::Int(i) => Field::Int(*i),
        Param::Real(x) => Field::Real(*x),
        Param::Bool(b) => Field::Bool(*b),
        Param::Text(s) => Field::Text(s.clone()),
    }
}

fn identity_row(rep: &IdentityReport) -> Row {
    let params = rep
        .parameters
        .iter()
        .map(|(k, v)| (k.clone(), param_field(v)))
        .collect();
    row([
        ("identity", rep.identity_id.as_str().into()),
        ("parameters", Field::Object(params)),
        ("lhs", value_field(&rep.lhs)),
        ("rhs", value_field(&rep.rhs)),
        ("residual", rep.residual.into()),
        ("tolerance", rep.tolerance.into()),
        ("pass", rep.pass.into()),
        ("informational", rep.informational.into()),
    ])
}

fn suite_reports(a: &VerifyArgs, suite: Suite) -> Result<Vec<IdentityReport>, String> {
    let mut out = Vec::new();
    let depths = 1..=a.max_depth;
    match suite {
        Suite::FunctionalRelation => {
            for star in [false, true] {
                for r in depths.clone() {
                    for m in [2, 4] {
                        out.push(functional_relation(r, Argument::Integer(m), star).map_err(err)?);
                    }
                    for s in [2.5, 3.0, 3.7] {
                        out.push(functional_relation(r, Argument::Real(s), star).map_err(err)?);
                    }
                }
            }
            if a.max_depth >= 2 {
                out.push(functional_relation_printed_star(2, Argument::Integer(2)).map_err(err)?);
            }
        }
        Suite::Merca => {
            for k in 1..=a.max_k {
                out.extend(merca_report(k));
            }
        }
        Suite::Harmonic => {
            for s in [2.0, 2.7, 3.0] {
                for star in [false, true] {
                    out.push(harmonic_product(s, star).map_err(err)?);
                }
            }
        }
        Suite::ThreeWay => {
            check_depth(a.max_depth as usize, MAX_ORACLE_DEPTH, "three-way")?;
            for family in Family::ALL {
                for r in depths.clone() {
                    for s in [2.0, 2.5, 3.0, 4.0] {
                        let config = OracleConfig::new(a.oracle_n);
                        out.extend(three_way_agreement(family, r, s, config).map_err(err)?);
                    }
                }
            }
        }
        Suite::SpecialValues => {
            check_depth(a.max_depth as usize, MAX_EXACT_DEPTH, "exact")?;
            for family in Family::ALL {
                for r in depths.clone() {
                    out.push(value_at_two_report(family, r).map_err(err)?);
                    out.push(value_at_zero_report(family, r).map_err(err)?);
                    for k in 1..=3 {
                        out.push(vanishing_at_negative_even(family, r, k).map_err(err)?);
                        if !family.is_t() {
                            out.push(value_at_even_report(family, r, k).map_err(err)?);
                        }
                    }
                }
            }
        }
        Suite::All => {
            for s in [
                Suite::SpecialValues,
                Suite::FunctionalRelation,
                Suite::Harmonic,
                Suite::Merca,
                Suite::ThreeWay,
            ] {
                out.extend(suite_reports(a, s)?);
            }
        }
    }
    Ok(out)
}

fn verify(a: &VerifyArgs) -> Outcome {
    if let Some(t) = a.tolerance {
        if !(t >= 0.0 && t.is_finite()) {
            return Err(format!("tolerance must be a non-negative number, got {t}"));
        }
    }
    let mut reports = suite_reports(a, a.suite)?;
    let mut doc = Document::new(
        "verify",
        &["identity", "parameters", "lhs", "rhs", "residual", "tolerance", "pass", "informational"],
    );
    doc.param("suite", format!("{:?}", a.suite).to_lowercase());
    doc.param("max_depth", a.max_depth);
    doc.param("max_k", a.max_k);
    doc.param("tolerance", a.tolerance);
    doc.param("oracle_n", a.oracle_n);
    let mut failures = 0;
    for rep in &mut reports {
        if let (Some(t), Value::Real(_)) = (a.tolerance, &rep.lhs) {
            rep.tolerance = t;
            rep.pass = rep.residual <= t;
        }
        if rep.failed() {
            failures += 1;
        }
        doc.push(identity_row(rep));
    }
    let informational = reports.iter().filter(|r| r.informational).count();
    doc.notes.push(format!(
        "{} checks, {failures} failed, {informational} informational",
        reports.len()
    ));
    if failures > 0 {
        doc.verdict = Verdict::Fail;
    }
    Ok(doc)
}

fn poles(a: &PolesArgs) -> Outcome {
    if a.depth == 0 {
        return Err("poles needs --depth >= 1".into());
    }
    check_depth(a.depth as usize, MAX_EXACT_DEPTH, "poles")?;
    let mut doc = Document::new(
        "poles",
        &[
            "k", "location", "order", "remainder", "leading_coefficient", "estimate", "epsilon",
            "gap", "tolerance", "certified", "pass",
        ],
    );
    doc.param("depth", a.depth);
    doc.param("tolerance", a.tolerance);
    doc.param(
        "epsilons",
        DEFAULT_EPSILONS.iter().map(|e| format!("{e:e}")).collect::<Vec<_>>().join(","),
    );
    for pole in pole_set(a.depth) {
        let mut rep = laurent_numeric_check(a.depth, pole.k, &DEFAULT_EPSILONS).map_err(err)?;
        let last = *rep.samples.last().expect("non-empty ladder");
        if let Some(t) = a.tolerance {
            rep.tolerance = t;
            rep.pass = rep.contracting && last.gap <= t;
        }
        let certified = nonvanishing_certificate(a.depth, pole.k).ok();
        let pass = rep.pass && certified == Some(true);
        if !pass {
            doc.verdict = Verdict::Fail;
        }
        doc.push(row([
            ("k", pole.k.into()),
            ("location", pole.location().into()),
            ("order", pole.order.into()),
            ("remainder", pole.remainder.into()),
            ("leading_coefficient", rep.leading_closed_form.into()),
            ("estimate", last.estimate.into()),
            ("epsilon", last.epsilon.into()),
            ("gap", last.gap.into()),
            ("tolerance", rep.tolerance.into()),
            ("certified", certified.into()),
            ("pass", pass.into()),
        ]));
    }
    Ok(doc)
}

fn table(a: &TableArgs) -> Outcome {
    let families: Vec<Family> = a.family.map_or_else(|| Family::ALL.to_vec(), |f| vec![f]);
    let integer = parse_integer(&a.arg).ok().filter(|m| *m <= 0 || m % 2 == 0);
    let mut doc = Document::new(
        "table",
        &["family", "depth", "argument", "method", "value", "error_bound"],
    );
    doc.csv = true;
    doc.param("families", families.iter().map(|f| f.name()).collect::<Vec<_>>().join(","));
    doc.param("max_depth", a.max_depth);
    doc.param("oracle_n", a.oracle_n);
    if let Some(m) = integer {
        check_depth(a.max_depth, MAX_EXACT_DEPTH, "exact")?;
        doc.param("argument", m);
        doc.param("backend", "exact");
        for &family in &families {
            for r in 1..=a.max_depth {
                let v = exact_value(family, r, m, Method::ClosedForm).map_err(err)?;
                doc.push(row([
                    ("family", family.name().into()),
                    ("depth", r.into()),
                    ("argument", m.into()),
                    ("method", Method::ClosedForm.name().into()),
                    ("value", v.to_canonical().into()),
                    ("error_bound", Field::Null),
                ]));
            }
        }
        return Ok(doc);
    }
    let s = parse_real(&a.arg)?;
    check_depth(a.max_depth, MAX_EXACT_DEPTH, "numeric")?;
    doc.param("argument", s);
    doc.param("backend", "numeric");
    for &family in &families {
        for r in 1..=a.max_depth {
            for method in [Method::ClosedForm, Method::Recurrence] {
                let v = numeric_value(family, r, s, method).map_err(err)?;
                doc.push(row([
                    ("family", family.name().into()),
                    ("depth", r.into()),
                    ("argument", s.into()),
                    ("method", method.name().into()),
                    ("value", v.into()),
                    ("error_bound", Field::Null),
                ]));
            }
            if let Some(n) = a.oracle_n {
                check_depth(r, MAX_ORACLE_DEPTH, "oracle")?;
                let v = diagonal_oracle(family, r, s, OracleConfig::new(n)).map_err(err)?;
                doc.push(row([
                    ("family", family.name().into()),
                    ("depth", r.into()),
                    ("argument", s.into()),
                    ("method", Method::Oracle.name().into()),
                    ("value", v.value.to_f64().into()),
                    ("error_bound", v.error_bound.into()),
                ]));
            }
        }
    }
    Ok(doc)
}
