#![allow(dead_code)]

use grp_cli::{parse, render, run, REPORT_SCHEMA};

/// Every builder in the expression language, with the order it must produce.
pub const DOCUMENTED_FORMS: &[(&str, u128)] = &[
    ("cyclic(5)", 5),
    ("sym(4)", 24),
    ("gl(2,3)", 48),
    ("sl(2,3)", 24),
    ("ut(4,3)", 11664),
    ("s3mat(5)", 6),
    ("regular(gl(2,3))", 48),
    ("metacyclic(2,3)", 6),
    ("metacyclic(3,7)", 21),
    ("extraspecial(3,1)", 27),
    ("extraspecial(2,1,minus)", 8),
    ("extraspecial(2,3,plus)", 128),
    ("bo()", 48),
    ("natsd(s3mat(5),2)", 150),
    ("natsd(gl(2,3),2)", 432),
    ("gsp(gl(2,3),3,1)", 1296),
    ("gsp(sl(2,3),3,1)", 648),
    ("qutrit(7)", 648),
    ("extsq(3)", 729),
    ("wr(sym(4),sym(4))", 7_962_624),
    ("wr(cyclic(3),wr(cyclic(3),cyclic(3)))", 1_594_323),
    ("direct(sym(3),cyclic(5))", 30),
    ("direct(gl(2,3),sl(2,3))", 1152),
    ("prop8(7)", 76_236_552),
    ("d8()", 165_888),
];

/// Runs the tool in-process and returns (exit code, stdout, stderr).
pub fn grp(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("grp").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

pub fn round_trips(spec: &str) -> bool {
    let e = parse(spec).unwrap();
    parse(&render(&e)).unwrap() == e
}

pub fn schema() -> jsonschema::JSONSchema {
    let s: serde_json::Value = serde_json::from_str(REPORT_SCHEMA).unwrap();
    jsonschema::JSONSchema::compile(&s).unwrap()
}

/// Schema errors for `instance`, empty when it validates.
pub fn schema_errors(schema: &jsonschema::JSONSchema, instance: &serde_json::Value) -> Vec<String> {
    match schema.validate(instance) {
        Ok(()) => Vec::new(),
        Err(errs) => errs.map(|e| e.to_string()).collect(),
    }
}
