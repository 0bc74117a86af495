use std::io::Write;
use std::process::{Command, Stdio};

use serde_json::{json, Value};

struct Run {
    code: i32,
    stdout: String,
}

fn run(args: &[&str], input: &str) -> Run {
    let mut child = Command::new(env!("CARGO_BIN_EXE_eqindex"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    Run {
        code: out.status.code().unwrap(),
        stdout: String::from_utf8(out.stdout).unwrap(),
    }
}

fn ok(args: &[&str], input: Value) -> Value {
    let r = run(args, &input.to_string());
    assert_eq!(r.code, 0, "{args:?}: {}", r.stdout);
    serde_json::from_str(&r.stdout).unwrap()
}

fn s3() -> Value {
    json!({"kind": "perm", "degree": 3, "generators": [[1, 0, 2], [1, 2, 0]]})
}

fn z6() -> Value {
    json!({"kind": "perm", "degree": 6, "generators": [[1, 2, 3, 4, 5, 0]]})
}

fn elem(terms: &[(&str, i64)]) -> Value {
    json!({"coeffs": terms.iter().map(|(c, a)| json!({"class": c, "a": a})).collect::<Vec<_>>()})
}

fn label_of_order(group: &Value, order: u64) -> String {
    let lattice = ok(&["group", "lattice"], json!({"group": group}));
    lattice["classes"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["order"] == order)
        .unwrap()["label"]
        .as_str()
        .unwrap()
        .to_string()
}

#[test]
fn poly_analyze_example() {
    let v = ok(&["poly", "analyze"], json!({"E": [[2, 1], [0, 3]]}));
    assert_eq!(v["weights"], json!([{"num": 1, "den": 3}, {"num": 1, "den": 3}]));
    assert_eq!(v["mu"], 4);
    assert_eq!(v["group_order"], 6);
    assert_eq!(v["transpose"]["mu"], 5);
}

#[test]
fn orbifold_reduction_example() {
    let z3 = label_of_order(&s3(), 3);
    let v = ok(
        &["burnside", "rk", "--k", "1"],
        json!({"group": s3(), "a": elem(&[(&z3, 1)])}),
    );
    assert_eq!(v["value"], 3);
}

#[test]
fn poincare_hopf_example() {
    let group = json!({"kind": "perm", "degree": 5, "generators": [[1, 2, 3, 4, 0]]});
    let pole = json!({"isotropy": "G", "local_index": elem(&[("G", 1)])});
    let input = json!({"group": group, "chi_g": elem(&[("G", 2)]), "orbits": [pole, pole]});
    let v = ok(&["index", "ph-check"], input.clone());
    assert_eq!(v["pass"], true);
    assert_eq!(v["discrepancy"]["coeffs"], json!([]));
    let one = json!({"group": group, "chi_g": elem(&[("G", 2)]), "orbits": [pole]});
    assert_eq!(ok(&["index", "ph-check"], one)["pass"], false);
}

#[test]
fn group_commands() {
    let info = ok(&["group", "info"], json!({"group": s3()}));
    assert_eq!(info["order"], 6);
    assert_eq!(info["subgroups"], 6);
    assert_eq!(info["subgroup_classes"], 4);
    assert_eq!(info["abelian"], false);
    let diag = json!({"kind": "diagonal", "phases": [[[-1, 6], [1, 3]]]});
    assert_eq!(ok(&["group", "info"], json!({"group": diag}))["order"], 6);
}

#[test]
fn burnside_commands() {
    let z2 = label_of_order(&s3(), 2);
    let z3 = label_of_order(&s3(), 3);
    let b = elem(&[(&z2, 1)]);
    let product = ok(&["burnside", "mul"], json!({"group": s3(), "a": b, "b": b}));
    let mut terms: Vec<(String, i64)> = product["result"]["coeffs"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| (t["class"].as_str().unwrap().to_string(), t["a"].as_i64().unwrap()))
        .collect();
    terms.sort();
    assert_eq!(terms, vec![("H1_0".to_string(), 1), (z2.clone(), 1)]);

    let table = ok(&["burnside", "marks"], json!({"group": s3()}));
    assert_eq!(table["marks"][0], json!([6, 0, 0, 0]));
    let marks = ok(&["burnside", "marks"], json!({"group": s3(), "a": elem(&[(&z3, 1)])}));
    assert_eq!(marks["marks"][&z3], 2);

    let r = ok(
        &["burnside", "restrict"],
        json!({"group": s3(), "subgroup": z3, "a": elem(&[(&z2, 1)])}),
    );
    assert_eq!(r["result"]["coeffs"], json!([{"class": "H1_0", "a": 1}]));
    let i = ok(
        &["burnside", "induce"],
        json!({"group": s3(), "subgroup": z3, "a": elem(&[("G", 1)])}),
    );
    assert_eq!(i["result"]["coeffs"], json!([{"class": z3, "a": 1}]));

    let c = ok(&["burnside", "char"], json!({"group": s3(), "a": elem(&[(&z2, 1)])}));
    let values: Vec<i64> = c["character"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x["value"].as_i64().unwrap())
        .collect();
    assert_eq!(values.iter().max(), Some(&3));
}

#[test]
fn euler_commands() {
    let square = json!({
        "vertices": ["a", "b", "c", "d"],
        "simplices": [["a", "b"], ["b", "c"], ["c", "d"], ["d", "a"]],
        "action": {"s": ["a", "d", "c", "b"]},
    });
    let v = ok(&["euler", "simplicial"], json!({"complex": square}));
    assert_eq!(v["chi"], 0);
    assert_eq!(
        v["chi_g"]["coeffs"],
        json!([{"class": "H1_0", "a": -1}, {"class": "H2_1", "a": 2}])
    );
    let flip = json!({"vertices": [0, 1], "simplices": [[0, 1]], "action": {"s": [1, 0]}});
    let r = run(&["euler", "simplicial"], &json!({"complex": flip}).to_string());
    assert_eq!(r.code, 1);
    assert!(r.stdout.contains("not_regular"));
    let sub = ok(&["euler", "simplicial", "--subdivide"], json!({"complex": flip}));
    assert_eq!(sub["chi_g"]["coeffs"], json!([{"class": "H2_1", "a": 1}]));
    let orb = ok(&["euler", "orbifold", "--k", "1"], json!({"complex": square}));
    assert_eq!(orb["value"], 3);

    let strata = json!({"group": s3(), "strata": [{"class": "e", "chi": 1}, {"class": "G", "chi": 2}]});
    let v = ok(&["euler", "strat"], strata);
    assert_eq!(
        v["chi_g"]["coeffs"],
        json!([{"class": "H1_0", "a": 1}, {"class": "H6_5", "a": 2}])
    );
    assert_eq!(
        v["reduced"]["coeffs"],
        json!([{"class": "H1_0", "a": 1}, {"class": "H6_5", "a": 1}])
    );
}

#[test]
fn index_commands() {
    let from = ok(
        &["index", "from-strata"],
        json!({"group": z6(), "strata": [{"class": "G", "index": 3}]}),
    );
    assert_eq!(from["index"]["coeffs"][0]["a"], 3);

    let per_subgroup = json!({"H1_0": 6, "H2_1": 0, "H3_2": 0, "H6_3": 0});
    let inv = ok(
        &["index", "invert"],
        json!({"group": z6(), "per_subgroup": per_subgroup}),
    );
    assert_eq!(inv["index"]["coeffs"], json!([{"class": "H1_0", "a": 1}]));
    assert_eq!(inv["sub"], inv["conj"]);
    let bad = run(
        &["index", "invert"],
        &json!({"group": z6(), "per_subgroup": {"H1_0": 5}}).to_string(),
    );
    assert_eq!(bad.code, 1);

    let induced = ok(
        &["index", "induce"],
        json!({"group": s3(), "isotropy": "e", "local_index": elem(&[("G", 1)])}),
    );
    assert_eq!(induced["index"]["coeffs"], json!([{"class": "H1_0", "a": 1}]));

    let gsv = ok(
        &["index", "gsv"],
        json!({"group": z6(), "ind_rad": elem(&[("G", 1)]), "chibar": elem(&[("e", 1)])}),
    );
    assert_eq!(gsv["gsv"]["coeffs"].as_array().unwrap().len(), 2);
    let dims = json!({"group": {"kind": "perm", "degree": 1, "generators": []}, "k": 0, "fixed_dims": {"e": 2}, "dims": {"e": 4}});
    assert_eq!(
        ok(&["index", "gsv"], dims)["gsv"]["coeffs"],
        json!([{"class": "H1_0", "a": 4}])
    );
}

#[test]
fn poly_commands() {
    let v = ok(&["poly", "index"], json!({"E": [[2, 0], [0, 3]]}));
    assert_eq!(v["cardinality"], 2);
    assert_eq!(v["group_order"], 6);
    let sub = json!({"kind": "diagonal", "phases": [[[1, 2], [0, 1]]]});
    let v = ok(&["poly", "index"], json!({"E": [[2, 0], [0, 3]], "group": sub}));
    assert_eq!(v["group_order"], 2);
    let bad = json!({"kind": "diagonal", "phases": [[[1, 3], [0, 1]]]});
    let r = run(
        &["poly", "index"],
        &json!({"E": [[2, 0], [0, 3]], "group": bad}).to_string(),
    );
    assert_eq!(r.code, 1);
    assert!(r.stdout.contains("not_a_symmetry"));

    let d = ok(&["poly", "dual-check"], json!({"E": [[2, 1], [0, 3]]}));
    assert_eq!(d["r0_equal"], true);
    assert_eq!(d["all_equal"], true);
    let d = ok(&["poly", "dual-check"], json!({"E": [[5]]}));
    assert_eq!(d["all_equal"], false);
    assert_eq!(d["all_equal_up_to_sign"], true);
}

#[test]
fn errors_and_exit_codes() {
    let r = run(&["poly", "analyze"], r#"{"E": [[2, 1], [0, "x"]]}"#);
    assert_eq!(r.code, 1);
    let v: Value = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(v["error"]["kind"], "malformed_json");
    assert_eq!(v["error"]["path"], "E[1][1]");

    let r = run(&["poly", "analyze"], "{not json");
    assert_eq!(r.code, 1);
    assert!(r.stdout.contains("malformed_json"));

    let r = run(&["poly", "analyze"], r#"{"E": [[1, 1], [1, 1]]}"#);
    assert_eq!(r.code, 1);
    assert!(r.stdout.contains("singular_matrix"));

    assert_eq!(run(&["poly", "frobnicate"], "{}").code, 2);
    assert_eq!(run(&["burnside", "rk"], "{}").code, 2);
    assert_eq!(run(&["group", "info", "--format", "xml"], "{}").code, 2);
}

#[test]
fn batches_are_ordered_and_deterministic() {
    let batch: Vec<Value> = (2..=20).map(|a| json!({"E": [[a]]})).collect();
    let input = Value::Array(batch).to_string();
    let serial = run(&["poly", "index", "--jobs", "1"], &input);
    let parallel = run(&["poly", "index", "--jobs", "4"], &input);
    assert_eq!(serial.code, 0);
    assert_eq!(serial.stdout, parallel.stdout);
    assert_eq!(run(&["poly", "index", "--jobs", "4"], &input).stdout, parallel.stdout);
    let v: Value = serde_json::from_str(&serial.stdout).unwrap();
    for (i, r) in v.as_array().unwrap().iter().enumerate() {
        assert_eq!(r["group_order"], i + 2);
    }

    let mixed = json!([{"E": [[3]]}, {"E": [[0]]}]).to_string();
    let r = run(&["poly", "analyze"], &mixed);
    assert_eq!(r.code, 1);
    let v: Value = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(v[0]["mu"], 2);
    assert!(v[1]["error"].is_object());
    assert_eq!(v[1]["error"]["path"], "[1]");
}

#[test]
fn tsv_and_files() {
    let r = run(&["poly", "analyze", "--format", "tsv"], r#"{"E": [[3]]}"#);
    assert!(r.stdout.lines().any(|l| l == "mu\t2"));
    assert!(r.stdout.lines().any(|l| l == "weights[0].den\t3"));

    let dir = env!("CARGO_TARGET_TMPDIR");
    let input = format!("{dir}/in.json");
    let output = format!("{dir}/out.json");
    std::fs::write(&input, r#"{"E": [[2, 0], [0, 3]]}"#).unwrap();
    let r = run(&["poly", "analyze", "--in", &input, "--out", &output], "");
    assert_eq!(r.code, 0);
    assert!(r.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&output).unwrap()).unwrap();
    assert_eq!(v["mu"], 2);
}
