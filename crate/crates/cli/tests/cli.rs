use std::process::Command;

use degbern_cli::{run, ExpansionDocument, EXIT_OK, EXIT_USAGE, EXIT_VERIFY};
use degbern_core::{expand, expand_higher, parse_poly, reconstruct, FBranchRoute, GBranchRoute};

fn call(args: &[&str]) -> degbern_cli::Outcome {
    run(std::iter::once("degbern").chain(args.iter().copied()))
}

fn binary(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_degbern"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn binary_exit_codes() {
    let cases: &[(&[&str], i32)] = &[
        (&["expand", "--expr", "x^3 - 2*x + 1/7"], EXIT_OK),
        (&["expand", "--expr", "x^2", "--order", "3", "--crosscheck"], EXIT_OK),
        (&["expand", "--expr", "1", "--order", "3"], EXIT_OK),
        (&["expand", "--expr", "2x"], EXIT_USAGE),
        (&["expand", "--expr", "0"], EXIT_USAGE),
        (&["expand", "--expr", "x/l"], EXIT_USAGE),
        (&["expand", "--expr", "x^2", "--order", "0"], EXIT_USAGE),
        (&["expand"], EXIT_USAGE),
        (&["frobnicate"], EXIT_USAGE),
        (&["verify", "miki", "--n", "5"], EXIT_OK),
        (&["verify", "miki", "--n", "1"], EXIT_USAGE),
        (&["verify", "nope"], EXIT_USAGE),
        (&["verify", "4e", "--n", "6", "--perturb", "1/3"], EXIT_VERIFY),
        (&["verify", "1a_printed", "--n-max", "5"], EXIT_OK),
        (&["table", "--family", "euler", "--n-max", "7"], EXIT_OK),
        (
            &["table", "--family", "euler", "--n-max", "7", "--order", "2"],
            EXIT_USAGE,
        ),
        (&["--help"], EXIT_OK),
        (&["--version"], EXIT_OK),
    ];
    for (args, code) in cases {
        let (got, _, stderr) = binary(args);
        assert_eq!(got, *code, "{args:?}: {stderr}");
    }
}

#[test]
fn library_and_binary_agree() {
    let args = ["expand", "--expr", "(x + 1/2)^4 - l*x", "--order", "2"];
    let lib = call(&args);
    let (code, stdout, stderr) = binary(&args);
    assert_eq!((lib.code, lib.stdout, lib.stderr), (code, stdout, stderr));
}

#[test]
fn json_document_round_trips() {
    for (expr, order) in [
        ("x^5 - 3/4*x^2 + 2", 1),
        ("l^2*x^3 + x - 5/3", 1),
        ("B(4) + x*l", 3),
        ("7", 2),
    ] {
        let out = call(&[
            "expand",
            "--expr",
            expr,
            "--order",
            &order.to_string(),
            "--format",
            "json",
            "--lambda",
            "-2/5",
        ]);
        assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
        let doc = ExpansionDocument::from_json(&out.stdout).unwrap();
        assert_eq!(ExpansionDocument::from_json(&doc.to_json()).unwrap(), doc);
        let p = parse_poly(expr).unwrap();
        let e = doc.to_expansion().unwrap();
        let direct = if order == 1 {
            expand(&p).unwrap()
        } else {
            expand_higher(&p, order, GBranchRoute::StirlingOp, FBranchRoute::StirlingSum).unwrap()
        };
        assert_eq!(e.coefficients, direct.coefficients);
        assert_eq!(reconstruct(&e), p);
        assert_eq!(doc.at_lambda.as_ref().unwrap().lambda, "-2/5");
    }
}

#[test]
fn malformed_documents_are_rejected() {
    assert!(ExpansionDocument::from_json("{}").is_err());
    let out = call(&["expand", "--expr", "x", "--format", "json"]);
    let doc = ExpansionDocument::from_json(&out.stdout).unwrap();
    assert!(doc.to_expansion().is_ok());
    let reject = |edit: &dyn Fn(&mut ExpansionDocument)| {
        let mut d = doc.clone();
        edit(&mut d);
        assert!(d.to_expansion().is_err(), "{d:?}");
    };
    reject(&|d| d.coefficients[1].lambda_poly[0].1 = "1/0".into());
    reject(&|d| d.coefficients[1].lambda_poly[0].1 = "2/2".into());
    reject(&|d| d.coefficients[1].lambda_poly[0].1 = "0".into());
    reject(&|d| d.coefficients[1].lambda_poly[0].0 = "01".into());
    reject(&|d| d.coefficients[1].k = "0".into());
    reject(&|d| d.degree = "2".into());
    reject(&|d| d.order = "0".into());
    reject(&|d| d.order = "1.0".into());
}

#[test]
fn documents_use_strings_for_every_number() {
    let out = call(&["expand", "--expr", "B(4)", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["order"], "1");
    assert_eq!(v["degree"], "4");
    assert_eq!(v["coefficients"][0]["k"], "0");
    assert_eq!(v["coefficients"][0]["lambda_poly"], serde_json::json!([["4", "-1/30"]]));
}

#[test]
fn latex_braces_balance() {
    for expr in ["x^2", "x^4 - l*x^3 + 1/5", "E(3)*l"] {
        for order in ["1", "2"] {
            let out = call(&["expand", "--expr", expr, "--order", order, "--format", "latex"]);
            assert_eq!(out.code, EXIT_OK);
            let mut depth = 0i32;
            for ch in out.stdout.chars() {
                match ch {
                    '{' => depth += 1,
                    '}' => depth -= 1,
                    _ => {}
                }
                assert!(depth >= 0, "{}", out.stdout);
            }
            assert_eq!(depth, 0, "{}", out.stdout);
            assert_eq!(
                out.stdout.matches("\\left(").count(),
                out.stdout.matches("\\right)").count()
            );
        }
    }
}

#[test]
fn tables() {
    let out = call(&["table", "--family", "bernoulli", "--n-max", "10"]);
    assert!(out.stdout.lines().any(|l| l == "10\t5/66"), "{}", out.stdout);
    let out = call(&["table", "--family", "genocchi", "--n-max", "12"]);
    assert!(out.stdout.lines().any(|l| l == "12\t2073"), "{}", out.stdout);
    let out = call(&["table", "deg-bernoulli", "2"]);
    assert!(out.stdout.contains("1\tx + (1/2*l - 1/2)"), "{}", out.stdout);
    assert_eq!(call(&["table", "bernoulli"]).code, EXIT_USAGE);
    assert_eq!(call(&["table", "bernoulli", "3", "--n-max", "4"]).code, EXIT_USAGE);
    let out = call(&["table", "--family", "harmonic", "--n-max", "4"]);
    assert_eq!(out.stdout, "1\t1\n2\t3/2\n3\t11/6\n4\t25/12\n");
    let out = call(&["table", "--family", "stirling2", "--n-max", "5", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["rows"][5]["value"][3], "25");
}

#[test]
fn verify_reports() {
    let out = call(&["verify", "ex_e", "ex_f", "--n-max", "4", "--format", "json"]);
    assert_eq!(out.code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["failed"], 0);
    assert!(v["cases"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c["id"] == "ex_e" || c["id"] == "ex_f"));

    let out = call(&["verify", "--id", "1a_printed", "--n", "3"]);
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stdout.starts_with("TYPO 1a_printed [n=3]"), "{}", out.stdout);

    let out = call(&["verify", "miki", "--n", "4", "--perturb", "-1/2"]);
    assert_eq!(out.code, EXIT_VERIFY);
    assert!(out.stdout.contains("first difference: 1/2 x^0 l^0"), "{}", out.stdout);

    let out = call(&["verify", "miki", "--n-max", "8"]);
    assert!(
        out.stdout.ends_with("7 cases: 7 passed, 0 failed, 0 known typo\n"),
        "{}",
        out.stdout
    );

    let out = call(&["verify", "all", "--n-max", "3", "--r-max", "1", "--a-max", "1"]);
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stdout.contains("PASS 8e [n=3, r=1, a=1]"), "{}", out.stdout);

    let out = call(&["verify", "ex_g", "--n", "4", "--r", "5"]);
    assert_eq!(out.code, EXIT_USAGE);
    assert!(out.stderr.contains("out of range"));

    let out = call(&["verify", "miki", "--n", "4", "--r", "2"]);
    assert_eq!(out.code, EXIT_USAGE);
}

#[test]
fn internal_errors_map_to_exit_three() {
    use degbern_cli::{exit_code, EXIT_INTERNAL};
    use degbern_core::Error;
    assert_eq!(
        exit_code(&Error::NotDivisible { k: 2, poly: "l".into() }),
        EXIT_INTERNAL
    );
    assert_eq!(exit_code(&Error::NonUnitConstant("l".into())), EXIT_INTERNAL);
    assert_eq!(exit_code(&Error::ZeroPolynomial), EXIT_USAGE);
    assert_eq!(exit_code(&Error::UnknownIdentity("x".into())), EXIT_USAGE);
}

#[test]
fn degree_guard_reads_the_environment() {
    let run_with = |limit: &str| {
        Command::new(env!("CARGO_BIN_EXE_degbern"))
            .args(["expand", "--expr", "x^4"])
            .env("DEGBERN_MAX_DEGREE", limit)
            .output()
            .unwrap()
    };
    let out = run_with("3");
    assert_eq!(out.status.code(), Some(EXIT_USAGE));
    assert!(String::from_utf8_lossy(&out.stderr).contains("exceeds the configured maximum 3"));
    assert_eq!(run_with("4").status.code(), Some(EXIT_OK));
}

#[test]
fn latex_rendering() {
    let out = call(&["expand", "--expr", "1 - x", "--format", "latex"]);
    assert_eq!(
        out.stdout,
        "-x + 1 = \\left(\\frac{1}{2}\\lambda + \\frac{1}{2}\\right)\\,\\beta_{0,\\lambda}(x) - \\beta_{1,\\lambda}(x)\n"
    );
    let out = call(&["expand", "--expr", "x^2", "--order", "2", "--format", "latex"]);
    assert!(out.stdout.starts_with("x^{2} = "), "{}", out.stdout);
    assert!(out.stdout.contains("\\beta^{(2)}_{2,\\lambda}(x)"), "{}", out.stdout);
    assert!(!out.stdout.contains("+ -"), "{}", out.stdout);
}
