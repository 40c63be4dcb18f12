use std::fmt::Write;

use degbern_core::basis::crosscheck;
use degbern_core::rational::format_rational;
use degbern_core::{expand, expand_higher, parse_poly, BasisExpansion, FBranchRoute, GBranchRoute, LambdaPoly, Result};

use crate::args::{ExpandArgs, Format};
use crate::document::ExpansionDocument;
use crate::{Outcome, EXIT_VERIFY};

pub fn run(args: &ExpandArgs) -> Result<Outcome> {
    let p = parse_poly(&args.expr)?;
    let e = if args.order == 1 {
        expand(&p)?
    } else {
        expand_higher(
            &p,
            args.order,
            GBranchRoute::UmbralIntegralOp,
            FBranchRoute::DeltaLambda,
        )?
    };
    if args.crosscheck {
        if let Some(d) = crosscheck(&p, args.order)? {
            return Ok(Outcome::fail(EXIT_VERIFY, String::new(), format!("error: {d}\n")));
        }
    }
    let stdout = match args.format {
        Format::Text => text(&args.expr, &e, args),
        Format::Json => ExpansionDocument::new(&args.expr, &e, args.lambda.as_ref()).to_json() + "\n",
        Format::Latex => latex(&e) + "\n",
    };
    Ok(Outcome::ok(stdout))
}

fn text(input: &str, e: &BasisExpansion, args: &ExpandArgs) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "input: {input}");
    let _ = writeln!(out, "polynomial: {}", e.source);
    let _ = writeln!(out, "order {}, degree {}", e.order, e.degree());
    for (k, a) in e.coefficients.iter().enumerate() {
        let route = e.provenance.get(k).map(|p| format!("  [{p}]")).unwrap_or_default();
        let _ = writeln!(out, "a_{k} = {a}{route}");
    }
    if let Some(s) = &args.lambda {
        let _ = writeln!(out, "at l = {}:", format_rational(s));
        for (k, a) in e.coefficients.iter().enumerate() {
            let _ = writeln!(out, "a_{k} = {}", format_rational(&a.eval(s)));
        }
    }
    if args.crosscheck {
        let _ = writeln!(out, "crosscheck: all routes agree");
    }
    out
}

fn latex_basis(r: u32, k: usize) -> String {
    if r == 1 {
        format!("\\beta_{{{k},\\lambda}}(x)")
    } else {
        format!("\\beta^{{({r})}}_{{{k},\\lambda}}(x)")
    }
}

fn latex_coeff(a: &LambdaPoly) -> String {
    if a.is_constant() {
        a.to_latex()
    } else {
        format!("\\left({}\\right)", a.to_latex())
    }
}

pub fn latex(e: &BasisExpansion) -> String {
    let terms: Vec<String> = e
        .coefficients
        .iter()
        .enumerate()
        .filter(|(_, a)| !a.is_zero())
        .map(|(k, a)| {
            let c = latex_coeff(a);
            let b = latex_basis(e.order, k);
            if a == &LambdaPoly::one() {
                b
            } else if a == &-LambdaPoly::one() {
                format!("-{b}")
            } else {
                format!("{c}\\,{b}")
            }
        })
        .collect();
    let rhs = if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join(" + ").replace("+ -", "- ")
    };
    format!("{} = {}", e.source.to_latex(), rhs)
}
