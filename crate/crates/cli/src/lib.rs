//! Command-line front end for `wicket-core`.
//!
//! [`run`] parses an argument vector, dispatches to the library and
//! returns the exit code together with the payload and diagnostics, so
//! the binary is a thin wrapper and tests can drive every command
//! in-process.

mod args;
mod output;

use clap::error::ErrorKind;
use clap::Parser;
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use wicket_core::braid::{family_word, BraidWord};
use wicket_core::dilatation::{
    convergence_report, convergence_series, dilatation, kappa, penner_holds, reproduce_table,
    truncate_decimals, ConvergenceReport, DilatationResult,
};
use wicket_core::linalg::{IntMatrix, IntPoly, RootBracket};
use wicket_core::presentation::{
    abelian_identities, abelianization, handlebody_presentation, torsion_u64, verify_relations,
};
use wicket_core::train_track::{
    edge_order, family_incidence_matrix, prong_data, validate_family, w6_incidence_matrix,
    w6_prong_data, ProngData,
};
use wicket_core::{artin, Error};

pub use args::{BraidCommand, Cli, Command, Format};
use output::{csv_table, Payload};

/// Exit status for success.
pub const EXIT_OK: i32 = 0;
/// Exit status for domain errors (bad strand count, genus below 2, …).
pub const EXIT_DOMAIN: i32 = 1;
/// Exit status for usage errors.
pub const EXIT_USAGE: i32 = 2;
/// Exit status when a resource cap is hit.
pub const EXIT_RESOURCE: i32 = 3;

/// Outcome of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandResult {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CommandResult {
    fn ok(stdout: String) -> Self {
        CommandResult {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn error(err: &Error) -> Self {
        let code = match err {
            Error::ResourceLimit(_) => EXIT_RESOURCE,
            _ => EXIT_DOMAIN,
        };
        CommandResult {
            code,
            stdout: String::new(),
            stderr: format!("error: {err}\n"),
        }
    }
}

/// Parses `argv` (program name first) and runs the command.
pub fn run<I, T>(argv: I) -> CommandResult
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => CommandResult::ok(text),
                _ => CommandResult {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: text,
                },
            };
        }
    };
    match execute(&cli) {
        Ok(Outcome { payload, failure }) => {
            let stdout = payload.render(cli.format);
            match failure {
                None => CommandResult::ok(stdout),
                Some((code, msg)) => CommandResult {
                    code,
                    stdout,
                    stderr: format!("{msg}\n"),
                },
            }
        }
        Err(e) => CommandResult::error(&e),
    }
}

struct Outcome {
    payload: Payload,
    /// A report was produced but flags a failure.
    failure: Option<(i32, String)>,
}

impl From<Payload> for Outcome {
    fn from(payload: Payload) -> Self {
        Outcome {
            payload,
            failure: None,
        }
    }
}

fn execute(cli: &Cli) -> wicket_core::Result<Outcome> {
    let tol = cli.tol;
    match &cli.command {
        Command::Dilatation { strands } => {
            Ok(dilatation_payload(&dilatation(*strands, tol)?).into())
        }
        Command::Kappa => kappa_payload(tol).map(Into::into),
        Command::Table { max_n } => table_payload(*max_n, tol).map(Into::into),
        Command::Convergence { max_n, n } => {
            let report = match n {
                Some(n) => convergence_series(&[*n], tol)?,
                None => convergence_report(*max_n, tol)?,
            };
            Ok(convergence_payload(&report).into())
        }
        Command::Matrix { n } => Ok(matrix_payload(*n).into()),
        Command::Charpoly { n } => charpoly_payload(*n).map(Into::into),
        Command::Validate { max_n } => validate_payload(*max_n),
        Command::Prongs { n } => Ok(prongs_payload(*n).into()),
        Command::Braid(b) => braid_payload(b).map(Into::into),
        Command::Presentation { genus } => presentation_payload(*genus).map(Into::into),
        Command::Abelianization { genus } => abelianization_payload(*genus).map(Into::into),
        Command::Relations { genus, max_genus } => relations_payload(*genus, *max_genus),
    }
}

fn big_json(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(v) => json!(v),
        None => json!(x.to_string()),
    }
}

fn poly_json(p: &IntPoly) -> Value {
    Value::Array(p.coeffs().iter().map(big_json).collect())
}

fn matrix_json(m: &IntMatrix) -> Value {
    Value::Array(
        m.to_rows()
            .iter()
            .map(|r| Value::Array(r.iter().map(big_json).collect()))
            .collect(),
    )
}

fn bracket_json(b: &RootBracket) -> Value {
    json!([b.low_f64(), b.high_f64()])
}

fn dilatation_payload(d: &DilatationResult) -> Payload {
    let json = json!({
        "strands": d.strands,
        "n": d.n,
        "polynomial": poly_json(&d.polynomial),
        "lambda": d.lambda.value,
        "lambda_bracket": bracket_json(&d.lambda),
        "log_lambda": d.log_lambda,
        "normalized_entropy": d.normalized_entropy,
        "certificate": d.certificate.name(),
        "penner_bound_holds": penner_holds(d.strands, d.lambda.value),
    });
    let text = format!(
        "strands             {}\n\
         n                   {}\n\
         polynomial          {}\n\
         lambda              {:.12}\n\
         lambda_bracket      [{:.15}, {:.15}]\n\
         log_lambda          {:.12}\n\
         normalized_entropy  {:.12}\n\
         certificate         {}\n",
        d.strands,
        d.n.map_or("-".to_string(), |n| n.to_string()),
        d.polynomial,
        d.lambda.value,
        d.lambda.low_f64(),
        d.lambda.high_f64(),
        d.log_lambda,
        d.normalized_entropy,
        d.certificate.name(),
    );
    let csv = csv_table(
        &["strands", "n", "lambda", "log_lambda", "normalized_entropy"],
        vec![vec![
            d.strands.to_string(),
            d.n.map(|n| n.to_string()).unwrap_or_default(),
            format!("{:.15}", d.lambda.value),
            format!("{:.15}", d.log_lambda),
            format!("{:.15}", d.normalized_entropy),
        ]],
    );
    Payload { text, json, csv }
}

fn kappa_payload(tol: f64) -> wicket_core::Result<Payload> {
    let k = kappa(tol)?;
    let json = json!({
        "polynomial": poly_json(&k.bracket.polynomial),
        "kappa": k.bracket.value,
        "bracket": bracket_json(&k.bracket),
        "closed_form": k.closed_form,
        "closed_form_in_bracket": k.closed_form_in_bracket,
        "factorization_holds": k.factorization_holds,
        "four_log_kappa": 4.0 * k.bracket.value.ln(),
    });
    let text = format!(
        "kappa                   {:.15}\n\
         bracket                 [{:.15}, {:.15}]\n\
         closed_form             {:.15}\n\
         closed_form_in_bracket  {}\n\
         factorization_holds     {}\n\
         4 log kappa             {:.12}\n",
        k.bracket.value,
        k.bracket.low_f64(),
        k.bracket.high_f64(),
        k.closed_form,
        k.closed_form_in_bracket,
        k.factorization_holds,
        4.0 * k.bracket.value.ln(),
    );
    let csv = csv_table(
        &[
            "kappa",
            "closed_form",
            "closed_form_in_bracket",
            "factorization_holds",
        ],
        vec![vec![
            format!("{:.15}", k.bracket.value),
            format!("{:.15}", k.closed_form),
            k.closed_form_in_bracket.to_string(),
            k.factorization_holds.to_string(),
        ]],
    );
    Ok(Payload { text, json, csv })
}

fn table_payload(max_n: usize, tol: f64) -> wicket_core::Result<Payload> {
    let table = reproduce_table(max_n, tol)?;
    let w6 = &table.w6;
    let mut text = String::from("2k        n   lambda    normalized_entropy\n");
    text.push_str(&format!(
        "6         -   {}   {:.5}\n",
        truncate_decimals(w6.lambda.value, 5),
        w6.normalized_entropy
    ));
    let mut json_rows = vec![json!({
        "n": Value::Null,
        "strands_high": 6,
        "strands_low": Value::Null,
        "lambda": w6.lambda.value,
        "lambda_bracket": bracket_json(&w6.lambda),
        "normalized_entropy": w6.normalized_entropy,
    })];
    let mut csv_rows = vec![vec![
        String::new(),
        "6".into(),
        String::new(),
        format!("{:.12}", w6.lambda.value),
        format!("{:.12}", w6.normalized_entropy),
    ]];
    for r in &table.rows {
        let strands = match r.strands_low {
            Some(low) => format!("{},{}", r.strands_high, low),
            None => r.strands_high.to_string(),
        };
        text.push_str(&format!(
            "{:<9} {:<3} {}   {:.5}\n",
            strands,
            r.n,
            truncate_decimals(r.lambda.value, 5),
            r.normalized_entropy
        ));
        json_rows.push(json!({
            "n": r.n,
            "strands_high": r.strands_high,
            "strands_low": r.strands_low,
            "lambda": r.lambda.value,
            "lambda_bracket": bracket_json(&r.lambda),
            "normalized_entropy": r.normalized_entropy,
            "certificate": r.certificate.name(),
        }));
        csv_rows.push(vec![
            r.n.to_string(),
            r.strands_high.to_string(),
            r.strands_low.map(|s| s.to_string()).unwrap_or_default(),
            format!("{:.12}", r.lambda.value),
            format!("{:.12}", r.normalized_entropy),
        ]);
    }
    let csv = csv_table(
        &[
            "n",
            "strands_high",
            "strands_low",
            "lambda",
            "normalized_entropy",
        ],
        csv_rows,
    );
    Ok(Payload {
        text,
        json: json!({ "rows": json_rows }),
        csv,
    })
}

fn convergence_payload(r: &ConvergenceReport) -> Payload {
    let mut text = format!("limit 4 log kappa = {:.12}\n", r.limit);
    text.push_str("n      lambda            entropy           gap\n");
    for row in &r.rows {
        text.push_str(&format!(
            "{:<6} {:.12}    {:.12}    {:.3e}\n",
            row.n, row.lambda, row.entropy, row.gap
        ));
    }
    text.push_str(&format!(
        "gap_strictly_decreasing     {}\n\
         lambda_strictly_decreasing  {}\n\
         entropy_above_limit         {}\n\
         first_n_lambda_within_0.01  {}\n",
        r.gap_strictly_decreasing,
        r.lambda_strictly_decreasing,
        r.entropy_above_limit,
        r.first_n_lambda_within_0_01
            .map_or("not reached".to_string(), |n| n.to_string()),
    ));
    let json = json!({
        "limit": r.limit,
        "rows": r.rows.iter().map(|row| json!({
            "n": row.n,
            "lambda": row.lambda,
            "normalized_entropy": row.entropy,
            "gap": row.gap,
        })).collect::<Vec<_>>(),
        "gap_strictly_decreasing": r.gap_strictly_decreasing,
        "lambda_strictly_decreasing": r.lambda_strictly_decreasing,
        "entropy_above_limit": r.entropy_above_limit,
        "first_n_lambda_within_0_01": r.first_n_lambda_within_0_01,
    });
    let csv = csv_table(
        &["n", "lambda", "normalized_entropy", "gap"],
        r.rows
            .iter()
            .map(|row| {
                vec![
                    row.n.to_string(),
                    format!("{:.15}", row.lambda),
                    format!("{:.15}", row.entropy),
                    format!("{:.6e}", row.gap),
                ]
            })
            .collect(),
    );
    Payload { text, json, csv }
}

fn matrix_for(n: Option<usize>) -> (IntMatrix, Vec<String>) {
    match n {
        None => (
            w6_incidence_matrix(),
            (1..=6).map(|i| format!("p{i}")).collect(),
        ),
        Some(n) => (
            family_incidence_matrix(n),
            edge_order(n).iter().map(|e| e.to_string()).collect(),
        ),
    }
}

fn matrix_payload(n: Option<usize>) -> Payload {
    let (m, edges) = matrix_for(n);
    let json = json!({
        "n": n,
        "dim": m.rows(),
        "edges": edges,
        "rows": matrix_json(&m),
    });
    let csv = csv_table(
        &edges.iter().map(String::as_str).collect::<Vec<_>>(),
        m.to_rows()
            .iter()
            .map(|r| r.iter().map(|x| x.to_string()).collect())
            .collect(),
    );
    Payload {
        text: m.to_string(),
        json,
        csv,
    }
}

fn charpoly_payload(n: Option<usize>) -> wicket_core::Result<Payload> {
    let (m, _) = matrix_for(n);
    let p = m.char_poly()?;
    let prim = m.is_primitive()?;
    let matches_family = n.map(|n| p == wicket_core::dilatation::family_polynomial(n));
    let json = json!({
        "n": n,
        "dim": m.rows(),
        "polynomial": poly_json(&p),
        "display": p.to_string(),
        "primitive": prim.primitive,
        "witness": prim.witness,
        "matches_family_polynomial": matches_family,
    });
    let mut text = format!(
        "char_poly  {}\nprimitive  {} (witness power {})\n",
        p,
        prim.primitive,
        prim.witness.map_or("-".into(), |k| k.to_string())
    );
    if let Some(ok) = matches_family {
        text.push_str(&format!("matches family polynomial  {ok}\n"));
    }
    let csv = csv_table(
        &["degree", "coefficient"],
        p.coeffs()
            .iter()
            .enumerate()
            .map(|(k, c)| vec![k.to_string(), c.to_string()])
            .collect(),
    );
    Ok(Payload { text, json, csv })
}

fn validate_payload(max_n: usize) -> wicket_core::Result<Outcome> {
    let report = validate_family(max_n)?;
    let mut text = String::from("n    dim  char_poly  primitive  witness\n");
    for c in &report.checks {
        text.push_str(&format!(
            "{:<4} {:<4} {:<10} {:<10} {}\n",
            c.n,
            c.dim,
            if c.char_poly_matches {
                "ok"
            } else {
                "MISMATCH"
            },
            c.primitive,
            c.witness.map_or("-".into(), |k| k.to_string())
        ));
    }
    let json = json!({
        "all_passed": report.all_passed(),
        "checks": report.checks.iter().map(|c| json!({
            "n": c.n,
            "dim": c.dim,
            "char_poly_matches": c.char_poly_matches,
            "primitive": c.primitive,
            "witness": c.witness,
        })).collect::<Vec<_>>(),
    });
    let csv = csv_table(
        &["n", "dim", "char_poly_matches", "primitive", "witness"],
        report
            .checks
            .iter()
            .map(|c| {
                vec![
                    c.n.to_string(),
                    c.dim.to_string(),
                    c.char_poly_matches.to_string(),
                    c.primitive.to_string(),
                    c.witness.map(|k| k.to_string()).unwrap_or_default(),
                ]
            })
            .collect(),
    );
    let failure =
        (!report.all_passed()).then(|| (EXIT_DOMAIN, "family validation failed".to_string()));
    Ok(Outcome {
        payload: Payload { text, json, csv },
        failure,
    })
}

fn prongs_payload(n: Option<usize>) -> Payload {
    let data: ProngData = match n {
        None => w6_prong_data(),
        Some(n) => prong_data(n),
    };
    let json = json!({
        "n": n,
        "punctures": data.punctures,
        "interior": data.interior,
        "interior_three_prongs": data.interior_three_prongs(),
        "euler_poincare_sum": data.euler_poincare_sum(),
    });
    let join = |v: &[usize]| {
        v.iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    };
    let text = format!(
        "punctures           {}\ninterior            {}\neuler_poincare_sum  {}\n",
        join(&data.punctures),
        join(&data.interior),
        data.euler_poincare_sum()
    );
    let mut rows: Vec<Vec<String>> = data
        .punctures
        .iter()
        .enumerate()
        .map(|(k, p)| vec![format!("c{}", k + 1), p.to_string()])
        .collect();
    rows.extend(
        data.interior
            .iter()
            .enumerate()
            .map(|(k, p)| vec![format!("interior{}", k + 1), p.to_string()]),
    );
    Payload {
        text,
        json,
        csv: csv_table(&["singularity", "prongs"], rows),
    }
}

fn parse_braid(word: &str, strands: usize, underline: bool) -> wicket_core::Result<BraidWord> {
    let w = BraidWord::parse(word, strands)?;
    if underline {
        w.underline()
    } else {
        Ok(w)
    }
}

fn scalar_payload(fields: Vec<(&str, Value)>) -> Payload {
    let width = fields.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    let mut text = String::new();
    for (k, v) in &fields {
        let shown = match v {
            Value::String(s) => s.clone(),
            other => other.to_string(),
        };
        text.push_str(&format!("{k:<width$}  {shown}\n"));
    }
    let csv = csv_table(
        &fields.iter().map(|(k, _)| *k).collect::<Vec<_>>(),
        vec![fields
            .iter()
            .map(|(_, v)| match v {
                Value::String(s) => s.clone(),
                other => other.to_string(),
            })
            .collect()],
    );
    let json = Value::Object(
        fields
            .into_iter()
            .map(|(k, v)| (k.to_string(), v))
            .collect(),
    );
    Payload { text, json, csv }
}

fn braid_payload(cmd: &BraidCommand) -> wicket_core::Result<Payload> {
    Ok(match cmd {
        BraidCommand::Perm { strands, word } => {
            let w = BraidWord::parse(word, *strands)?;
            let p = w.permutation();
            scalar_payload(vec![
                ("strands", json!(w.strands())),
                ("word", json!(w.to_string())),
                ("permutation", json!(p.to_string())),
                ("images", json!(p.images())),
            ])
        }
        BraidCommand::Expsum { strands, word } => {
            let w = BraidWord::parse(word, *strands)?;
            scalar_payload(vec![
                ("strands", json!(w.strands())),
                ("word", json!(w.to_string())),
                ("exponent_sum", json!(w.exponent_sum())),
            ])
        }
        BraidCommand::Pairing { strands, word } => {
            let w = BraidWord::parse(word, *strands)?;
            scalar_payload(vec![
                ("strands", json!(w.strands())),
                ("word", json!(w.to_string())),
                ("pairing_preserved", json!(w.pairing_preserved()?)),
            ])
        }
        BraidCommand::Closure {
            strands,
            word,
            underline,
        } => {
            let w = parse_braid(word, *strands, *underline)?;
            scalar_payload(vec![
                ("strands", json!(w.strands())),
                ("word", json!(w.to_string())),
                ("closure_components", json!(w.closure_components())),
            ])
        }
        BraidCommand::Equal { strands, a, b } => {
            let wa = BraidWord::parse(a, *strands)?;
            let wb = BraidWord::parse(b, *strands)?;
            scalar_payload(vec![
                ("strands", json!(*strands)),
                ("a", json!(wa.to_string())),
                ("b", json!(wb.to_string())),
                ("equal", json!(artin::braids_equal(&wa, &wb)?)),
            ])
        }
        BraidCommand::Family { kind, n } => {
            let w = family_word(*kind, *n)?;
            scalar_payload(vec![
                ("kind", json!(kind.name())),
                ("n", json!(*n)),
                ("strands", json!(w.strands())),
                ("word", json!(w.to_string())),
            ])
        }
    })
}

fn presentation_payload(genus: usize) -> wicket_core::Result<Payload> {
    let p = handlebody_presentation(genus)?;
    let relators: Vec<Value> = p
        .relations
        .iter()
        .map(|r| {
            Value::Array(
                r.relator()
                    .iter()
                    .map(|s| json!([p.generators[s.generator], s.exponent]))
                    .collect(),
            )
        })
        .collect();
    let json = json!({
        "genus": genus,
        "generators": p.generators,
        "relators": relators,
        "families": p.relations.iter().map(|r| r.family).collect::<Vec<_>>(),
        "relations": p.relations.iter().map(|r| p.render_relation(r)).collect::<Vec<_>>(),
    });
    let csv = csv_table(
        &["family", "relation"],
        p.relations
            .iter()
            .map(|r| vec![r.family.to_string(), p.render_relation(r)])
            .collect(),
    );
    Ok(Payload {
        text: p.to_string(),
        json,
        csv,
    })
}

fn abelianization_payload(genus: usize) -> wicket_core::Result<Payload> {
    let p = handlebody_presentation(genus)?;
    let ids = abelian_identities(&p)?;
    let a = abelianization(&p);
    let json = json!({
        "genus": genus,
        "group": a.to_string(),
        "free_rank": a.free_rank,
        "torsion": torsion_u64(&a),
        "identities": {
            "r_equal": ids.r_equal,
            "s_equal": ids.s_equal,
            "t_equal": ids.t_equal,
            "two_r_zero": ids.two_r_zero,
        },
    });
    let torsion = torsion_u64(&a)
        .iter()
        .map(|d| d.to_string())
        .collect::<Vec<_>>()
        .join(" ");
    let csv = csv_table(
        &["genus", "free_rank", "torsion"],
        vec![vec![genus.to_string(), a.free_rank.to_string(), torsion]],
    );
    Ok(Payload {
        text: format!("{a}\n"),
        json,
        csv,
    })
}

fn relations_payload(genus: usize, max_genus: usize) -> wicket_core::Result<Outcome> {
    let report = verify_relations(genus, max_genus)?;
    let mut text = format!("genus {} on {} strands\n", report.genus, report.strands);
    for c in &report.checks {
        let status = match c.status {
            wicket_core::presentation::RelationStatus::HoldsUpToFullTwist { power } => {
                format!("{} (Delta^{})", c.status.name(), 2 * power)
            }
            _ => c.status.name().to_string(),
        };
        text.push_str(&format!(
            "({:>2}) {:<34} {}\n",
            c.family, status, c.relation
        ));
    }
    let json = json!({
        "genus": report.genus,
        "strands": report.strands,
        "partial": report.partial(),
        "disk_relations_hold": report.disk_relations_hold(),
        "checks": report.checks.iter().map(|c| {
            let power = match c.status {
                wicket_core::presentation::RelationStatus::HoldsUpToFullTwist { power } => Some(power),
                _ => None,
            };
            json!({
                "family": c.family,
                "relation": c.relation,
                "status": c.status.name(),
                "full_twist_power": power,
                "pure": c.pure,
                "exponent_sum": c.exponent_sum,
            })
        }).collect::<Vec<_>>(),
    });
    let csv = csv_table(
        &["family", "status", "pure", "exponent_sum", "relation"],
        report
            .checks
            .iter()
            .map(|c| {
                vec![
                    c.family.to_string(),
                    c.status.name().to_string(),
                    c.pure.to_string(),
                    c.exponent_sum.to_string(),
                    c.relation.clone(),
                ]
            })
            .collect(),
    );
    let failure = if report.partial() {
        Some((
            EXIT_RESOURCE,
            "relation check hit the resource cap".to_string(),
        ))
    } else if !report.all_acceptable() {
        Some((EXIT_DOMAIN, "some relations failed".to_string()))
    } else {
        None
    };
    Ok(Outcome {
        payload: Payload { text, json, csv },
        failure,
    })
}
