use intdiff_cli::run;
use serde_json::Value;

fn call(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(args, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn ok(args: &[&str]) -> String {
    let (code, out, err) = call(args);
    assert_eq!(code, 0, "{args:?}: {err}");
    out.trim_end().to_string()
}

fn json(args: &[&str]) -> Value {
    let mut v = vec!["--json"];
    v.extend_from_slice(args);
    serde_json::from_str(&ok(&v)).unwrap()
}

#[test]
fn listed_examples() {
    assert_eq!(ok(&["canon", "I*D"]), "1 - e[0,0]");
    let a = ok(&["analyze", "D + I"]);
    assert!(a.starts_with("index: -1\nkernel: {}\ncokernel: {1}\n"), "{a}");
    assert_eq!(ok(&["solve", "D", "1"]), "particular: x\nhomogeneous: {1}");
}

#[test]
fn exit_codes() {
    let (code, _, err) = call(&["index", "e[0,0]"]);
    assert_eq!(code, 1);
    assert!(err.contains("index undefined for compact operators"));
    let (code, _, err) = call(&["canon", "D +"]);
    assert_eq!(code, 2);
    assert!(err.contains("line 1, column 4"));
    assert_eq!(call(&["frobnicate"]).0, 2);
    assert_eq!(call(&["mul", "D"]).0, 2);
    assert_eq!(call(&["det", "D"]).0, 1);
    assert_eq!(call(&["invapply", "D", "x"]).0, 1);
    assert_eq!(call(&["--help"]).0, 0);
}

#[test]
fn every_verb_runs() {
    let cases: &[&[&str]] = &[
        &["add", "D", "I"],
        &["mul", "D", "I"],
        &["star", "H*D"],
        &["apply", "I", "x^2"],
        &["truncate", "H", "3"],
        &["index", "D^3"],
        &["classify", "1 + I"],
        &["invapply", "1 + D^2", "x^3"],
        &["leftinv", "I"],
        &["rightinv", "D"],
        &["linvset", "I"],
        &["det", "1 + e[0,0]"],
        &["unitinv", "1 + e[0,1]"],
        &["kappa", "1 + e[0,0]", "1"],
        &["regularity", "D"],
        &["commutes", "H", "e[2,2]"],
        &["centralizer", "D^4"],
        &["commutant", "H"],
        &["project", "x"],
        &["b1mul", "H", "D"],
        &["isnormal", "D^-1*(H - 1) + H - 3"],
        &["normalize", "D^-1*(H - 3) + H - 1"],
        &["trace", "e[0,0] + 2*e[1,1] + e[0,1]"],
        &["degf", "e[2,3] + e[0,0]"],
    ];
    for c in cases {
        ok(c);
        json(c);
    }
}

#[test]
fn text_outputs() {
    assert_eq!(ok(&["add", "D", "I"]), "D + I");
    assert_eq!(ok(&["mul", "D", "I"]), "1");
    assert_eq!(ok(&["star", "H*D"]), "H*I - I");
    assert_eq!(ok(&["apply", "I", "x^2"]), "x^3/3");
    assert_eq!(ok(&["truncate", "H", "3"]), "[1 0 0]\n[0 2 0]\n[0 0 3]");
    assert_eq!(ok(&["index", "I^2"]), "-2");
    assert_eq!(ok(&["classify", "1 + I"]), "injective: true\nsurjective: false\nbijective: false");
    assert_eq!(ok(&["invapply", "1 + D^2", "x^3"]), "x^3 - 6*x");
    assert_eq!(ok(&["leftinv", "D"]), "none");
    assert_eq!(ok(&["linvset", "I", "--count", "3"]), "D\nD + e[0,0]\nD + e[1,0]");
    assert_eq!(ok(&["det", "1 + e[0,0]"]), "2");
    assert_eq!(ok(&["unitinv", "1 + e[0,0]"]), "1 - 1/2*e[0,0]");
    assert_eq!(ok(&["kappa", "1 + e[0,0]", "1"]), "1 + e[1,1]");
    assert_eq!(ok(&["regularity", "D"]), "left_regular: true\nright_regular: false\nregular: false");
    assert_eq!(ok(&["commutes", "D", "I"]), "false");
    assert_eq!(ok(&["centralizer", "(H-3/2)^2"]), "D1 + K·e[1,0] + K·e[0,1]");
    assert_eq!(ok(&["centralizer", "x^2"]), "K[x]");
    assert_eq!(ok(&["commutant", "H", "--window", "2"]), "e[0,0]\ne[1,1]\ne[2,2]\ndimension: 3 (within window 2)");
    assert_eq!(ok(&["project", "I*D"]), "1");
    assert_eq!(ok(&["b1mul", "D", "D^-1"]), "1");
    assert_eq!(ok(&["isnormal", "D^-1*(H - 3) + H - 1"]), "false");
    assert_eq!(ok(&["trace", "e[0,0] + 2*e[1,1] + e[0,1]"]), "3");
    assert_eq!(ok(&["degf", "D^5"]), "-1");
    assert_eq!(ok(&["canon", "-D"]), "-D");
    assert_eq!(ok(&["solve", "D + I", "1"]), "particular: none\nhomogeneous: {}");
}

#[test]
fn json_round_trips() {
    let v = json(&["mul", "I", "D"]);
    let back = intdiff::opcore::json::from_json(&v).unwrap();
    assert_eq!(back, intdiff::lang::parse("1 - e[0,0]").unwrap());
    let v = json(&["analyze", "H - 3"]);
    assert_eq!(v["index"], 0);
    assert_eq!(v["kernel_basis"][0]["text"], "x^2");
    let v = json(&["project", "x"]);
    let b = intdiff::bquot::B1Element::from_json(&v).unwrap();
    assert_eq!(b, intdiff::bquot::parse_b1("D^-1*H").unwrap());
    let v = json(&["leftinv", "I"]);
    assert_eq!(v["kind"], "left");
    assert_eq!(v["inverse_text"], "D");
    assert_eq!(json(&["leftinv", "D"]), Value::Null);
}

#[test]
fn binary_entry_point() {
    let out = std::process::Command::new(env!("CARGO_BIN_EXE_intdiff")).args(["canon", "D*I"]).output().unwrap();
    assert!(out.status.success());
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "1");
    let out = std::process::Command::new(env!("CARGO_BIN_EXE_intdiff")).args(["trace", "D"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
}
