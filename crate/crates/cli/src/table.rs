use std::fmt::Write;

use degbern_core::families::{
    bernoulli_number, bernoulli_poly_order, deg_bernoulli_order, deg_falling, euler_number, euler_poly,
    genocchi_number, genocchi_poly, harmonic, stirling2,
};
use degbern_core::rational::format_rational;
use degbern_core::{Error, LambdaPoly, Result, XPoly};
use num_rational::BigRational;
use serde_json::{json, Value};

use crate::args::{Family, Format, TableArgs};
use crate::Outcome;

/// Degree ceiling for polynomial tables; numbers go further.
const MAX_N: u32 = 200;

enum Cell {
    Number(BigRational),
    Poly(XPoly),
    Row(Vec<BigRational>),
}

impl Cell {
    fn text(&self) -> String {
        match self {
            Cell::Number(v) => format_rational(v),
            Cell::Poly(p) => p.to_string(),
            Cell::Row(r) => r.iter().map(format_rational).collect::<Vec<_>>().join(" "),
        }
    }

    fn latex(&self) -> String {
        let num = |v: &BigRational| LambdaPoly::constant(v.clone()).to_latex();
        match self {
            Cell::Number(v) => num(v),
            Cell::Poly(p) => p.to_latex(),
            Cell::Row(r) => r.iter().map(num).collect::<Vec<_>>().join(" & "),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Row(r) => json!(r.iter().map(format_rational).collect::<Vec<_>>()),
            other => json!(other.text()),
        }
    }
}

fn cell(family: Family, n: usize, r: u32) -> Result<Cell> {
    Ok(match family {
        Family::Bernoulli => Cell::Number(bernoulli_number(n)),
        Family::Euler => Cell::Number(euler_number(n)),
        Family::Genocchi => Cell::Number(genocchi_number(n)),
        Family::BernoulliPoly => Cell::Poly(bernoulli_poly_order(n, r)),
        Family::EulerPoly => Cell::Poly(euler_poly(n)),
        Family::GenocchiPoly => Cell::Poly(genocchi_poly(n)),
        Family::DegFalling => Cell::Poly(deg_falling(n)),
        Family::DegBernoulli => Cell::Poly(deg_bernoulli_order(n, r)),
        Family::Stirling2 => Cell::Row((0..=n).map(|k| stirling2(n, k)).collect()),
        Family::Harmonic => Cell::Number(harmonic(n)?),
    })
}

fn symbol(family: Family, r: u32) -> String {
    let order = |base: &str| {
        if r == 1 {
            base.to_string()
        } else {
            format!("{base}^{{({r})}}")
        }
    };
    match family {
        Family::Bernoulli => "B".into(),
        Family::Euler => "E".into(),
        Family::Genocchi => "G".into(),
        Family::BernoulliPoly => order("B"),
        Family::EulerPoly => "E".into(),
        Family::GenocchiPoly => "G".into(),
        Family::DegFalling => "(x)".into(),
        Family::DegBernoulli => order("\\beta"),
        Family::Stirling2 => "S".into(),
        Family::Harmonic => "H".into(),
    }
}

pub fn run(args: &TableArgs) -> Result<Outcome> {
    let family = args
        .family
        .or(args.family_pos)
        .ok_or_else(|| Error::InvalidArgument("a family is required".into()))?;
    let n_max = args
        .n_max
        .or(args.n_max_pos)
        .ok_or_else(|| Error::InvalidArgument("--n-max is required".into()))?;
    let uses_order = matches!(family, Family::BernoulliPoly | Family::DegBernoulli);
    if !uses_order && args.order != 1 {
        return Err(Error::InvalidArgument(format!("--order does not apply to {family:?}")));
    }
    if n_max > MAX_N {
        return Err(Error::InvalidArgument(format!("--n-max is limited to {MAX_N}")));
    }
    let start = if family == Family::Harmonic { 1 } else { 0 };
    let rows = (start..=n_max as usize)
        .map(|n| cell(family, n, args.order).map(|c| (n, c)))
        .collect::<Result<Vec<_>>>()?;
    let mut out = String::new();
    match args.format {
        Format::Text => {
            for (n, c) in &rows {
                let _ = writeln!(out, "{n}\t{}", c.text());
            }
        }
        Format::Json => {
            let rows: Vec<Value> = rows.iter().map(|(n, c)| json!({ "n": n, "value": c.json() })).collect();
            let doc = json!({ "family": format!("{family:?}"), "order": args.order, "rows": rows });
            out = serde_json::to_string_pretty(&doc).expect("table serializes") + "\n";
        }
        Format::Latex => {
            let sym = symbol(family, args.order);
            let degenerate = matches!(family, Family::DegBernoulli | Family::DegFalling);
            for (n, c) in &rows {
                let index = if degenerate {
                    format!("{n},\\lambda")
                } else {
                    n.to_string()
                };
                let _ = writeln!(out, "{sym}_{{{index}}} &= {} \\\\", c.latex());
            }
        }
    }
    Ok(Outcome::ok(out))
}
