use std::fmt::Write;

use degbern_core::identities::{self, Bounds, IdentityCase};
use degbern_core::rational::format_rational;
use degbern_core::{Error, Result};
use serde::Serialize;

use crate::args::{Format, VerifyArgs};
use crate::{Outcome, EXIT_OK, EXIT_VERIFY};

#[derive(Serialize)]
struct CaseReport {
    id: &'static str,
    params: Vec<(&'static str, u32)>,
    status: &'static str,
    /// `[x-exponent, λ-exponent, coefficient]` of the first nonzero term of lhs − rhs.
    #[serde(skip_serializing_if = "Option::is_none")]
    offending: Option<(usize, u32, String)>,
}

#[derive(Serialize)]
struct Report {
    cases: Vec<CaseReport>,
    total: usize,
    ok: usize,
    failed: usize,
    typo: usize,
}

pub fn run(args: &VerifyArgs) -> Result<Outcome> {
    if args.list {
        return Ok(Outcome::ok(list()?));
    }
    let all = args.all || args.ids.iter().any(|id| id == "all");
    let ids: Vec<&str> = args
        .id
        .iter()
        .chain(&args.ids)
        .map(String::as_str)
        .filter(|id| *id != "all")
        .collect();
    for id in &ids {
        identities::summary(id)?;
    }
    let single = [args.n, args.m, args.r, args.a].iter().any(Option::is_some);
    let mut cases = if single {
        single_cases(args, &ids)?
    } else {
        let mut bounds = Bounds::default();
        if let Some(v) = args.n_max {
            bounds = bounds.with_n_max(v);
        }
        if let Some(v) = args.r_max {
            bounds = bounds.with_r_max(v);
        }
        if let Some(v) = args.a_max {
            bounds = bounds.with_a_max(v);
        }
        if !all && !ids.is_empty() {
            bounds = bounds.only(&ids)?;
        }
        identities::verify_all(&bounds)?
    };
    if let Some(c) = &args.perturb {
        cases = cases.into_iter().map(|case| case.perturbed(c)).collect();
    }
    let report = report(&cases);
    let code = if report.failed > 0 { EXIT_VERIFY } else { EXIT_OK };
    let stdout = match args.format {
        Format::Json => serde_json::to_string_pretty(&report).expect("report serializes") + "\n",
        Format::Text | Format::Latex => text(&report),
    };
    Ok(Outcome {
        code,
        stdout,
        stderr: String::new(),
    })
}

fn list() -> Result<String> {
    let mut out = String::new();
    for id in identities::ids() {
        let names = identities::param_names(id)?.join(", ");
        let _ = writeln!(out, "{id:<14} ({names})  {}", identities::summary(id)?);
    }
    Ok(out)
}

fn single_cases(args: &VerifyArgs, ids: &[&str]) -> Result<Vec<IdentityCase>> {
    if ids.is_empty() {
        return Err(Error::InvalidArgument("--n/--m/--r/--a need an identity id".into()));
    }
    let given = [("n", args.n), ("m", args.m), ("r", args.r), ("a", args.a)];
    let lookup = |name: &str| given.iter().find(|(k, _)| *k == name).and_then(|(_, v)| *v);
    ids.iter()
        .map(|id| {
            let names = identities::param_names(id)?;
            if let Some((extra, _)) = given.iter().find(|(k, v)| v.is_some() && !names.contains(k)) {
                return Err(Error::InvalidArgument(format!(
                    "identity {id} has no parameter {extra}"
                )));
            }
            let params = identities::params_from(id, lookup)?;
            identities::verify(id, &params)
        })
        .collect()
}

fn report(cases: &[IdentityCase]) -> Report {
    let reports: Vec<CaseReport> = cases
        .iter()
        .map(|c| CaseReport {
            id: c.id,
            params: c.params.pairs().to_vec(),
            status: c.status(),
            offending: c.offending_monomial().map(|(i, e, v)| (i, e, format_rational(&v))),
        })
        .collect();
    let count = |s: &str| reports.iter().filter(|r| r.status == s).count();
    Report {
        total: reports.len(),
        ok: count("ok"),
        failed: count("FAIL"),
        typo: count("typo"),
        cases: reports,
    }
}

fn text(r: &Report) -> String {
    let mut out = String::new();
    for c in &r.cases {
        let params: Vec<String> = c.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        let tag = match c.status {
            "ok" => "PASS",
            "FAIL" => "FAIL",
            _ => "TYPO",
        };
        let _ = write!(out, "{tag} {} [{}]", c.id, params.join(", "));
        if let Some((i, e, v)) = &c.offending {
            let _ = write!(out, "  first difference: {v} x^{i} l^{e}");
        }
        out.push('\n');
    }
    let _ = writeln!(
        out,
        "{} cases: {} passed, {} failed, {} known typo",
        r.total, r.ok, r.failed, r.typo
    );
    out
}
