use std::process::{Command, Output};

use serde_json::Value;

fn uacg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_uacg"))
        .args(args)
        .env_remove("UACG_TOL")
        .env_remove("UACG_JOBS")
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn lines(o: &Output) -> Vec<Value> {
    String::from_utf8_lossy(&o.stdout)
        .lines()
        .map(|l| serde_json::from_str(l).expect("one JSON object per line"))
        .collect()
}

fn num(v: &Value) -> f64 {
    v.as_f64().expect("number")
}

#[test]
fn spectrum_both_sources() {
    let o = uacg(&["spectrum", "--n", "6", "--family", "signless", "--source", "both"]);
    assert_eq!(code(&o), 0);
    let recs = lines(&o);
    assert_eq!(recs.len(), 2);
    assert_eq!(recs[0]["source"], "closed-form");
    assert_eq!(recs[1]["source"], "oracle");
    for r in &recs {
        assert_eq!(r["schema_version"], 1);
        assert_eq!(r["n"], 6);
        assert_eq!(r["family"], "signless");
        assert!(num(&r["max_deviation"]) <= 1e-8);
    }
    let values: Vec<(f64, u64)> = recs[0]["spectrum"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| (num(&e["value"]), e["multiplicity"].as_u64().unwrap()))
        .collect();
    assert_eq!(values, [(0.0, 1), (1.0, 2), (3.0, 2), (4.0, 1)]);
}

#[test]
fn exit_codes() {
    let o = uacg(&["spectrum", "--n", "15", "--family", "signless", "--source", "closed-form"]);
    assert_eq!(code(&o), 3);
    let o = uacg(&["spectrum", "--n", "5", "--graph", "uacg", "--complement", "--family", "distance"]);
    assert_eq!(code(&o), 4);
    assert_eq!(code(&uacg(&["scan", "--n-from", "10", "--n-to", "9"])), 2);
    assert_eq!(code(&uacg(&["spectrum", "--n", "6", "--family", "bogus"])), 2);
    assert_eq!(code(&uacg(&["spectrum", "--n", "6"])), 2);
    assert_eq!(code(&uacg(&["spectrum", "--n", "1", "--family", "laplacian"])), 2);
    assert_eq!(code(&uacg(&["verify", "--families", "distance"])), 2);
    assert_eq!(code(&uacg(&["verify", "--n", "9", "--families", "nope"])), 2);
    assert_eq!(code(&uacg(&["energy", "--n", "9", "--family", "laplacian"])), 3);
}

#[test]
fn energies() {
    let o = uacg(&["energy", "--n", "6", "--family", "signless"]);
    assert_eq!(code(&o), 0);
    let r = &lines(&o)[0];
    assert_eq!(num(&r["value"]), 8.0);
    assert_eq!(r["caveat"], false);

    let r = &lines(&uacg(&["energy", "--n", "9", "--family", "distance-laplacian"]))[0];
    assert!((num(&r["value"]) - 74.0 / 3.0).abs() < 1e-12);

    let o = uacg(&["energy", "--n", "5", "--family", "distance"]);
    assert_eq!(code(&o), 0);
    let r = &lines(&o)[0];
    assert!((num(&r["value"]) - (4.0 + 4.0 * 2f64.sqrt())).abs() < 1e-12);
    assert_eq!(r["caveat"], true);
    assert_eq!(num(&r["formula_value"]), 8.0);
}

#[test]
fn unitary_cayley_graph_borrows_even_closed_forms() {
    let o = uacg(&["energy", "--n", "12", "--graph", "ucg", "--family", "distance", "--source", "both"]);
    assert_eq!(code(&o), 0);
    let recs = lines(&o);
    assert_eq!(num(&recs[0]["value"]), 48.0);
    assert!(num(&recs[1]["max_deviation"]) <= 1e-8);
    let o = uacg(&["spectrum", "--n", "9", "--graph", "ucg", "--family", "signless", "--source", "closed-form"]);
    assert_eq!(code(&o), 3);
}

#[test]
fn verify_distance_nine() {
    let o = uacg(&["verify", "--n", "9", "--families", "distance"]);
    assert_eq!(code(&o), 0);
    let recs = lines(&o);
    let spectrum = recs
        .iter()
        .find(|r| r["family"] == "distance" && r["kind"] == "spectrum")
        .unwrap();
    assert_eq!(spectrum["status"], "pass");
    let chain = recs.iter().find(|r| r["kind"] == "chain").unwrap();
    assert_eq!(chain["status"], "pass");
    assert!(chain["details"].as_str().unwrap().contains("principal violated"));
}

#[test]
fn scan_small_range_passes() {
    let o = uacg(&["scan", "--n-from", "3", "--n-to", "50", "--families", "all"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let recs = lines(&o);
    assert!(recs.iter().all(|r| r["status"] != "fail"));
    assert!(recs.iter().any(|r| r["status"] == "caveat"));
    let keys: Vec<(u64, String)> = recs
        .iter()
        .map(|r| (r["n"].as_u64().unwrap(), r["family"].as_str().unwrap().to_owned()))
        .collect();
    assert!(keys.windows(2).all(|w| w[0] <= w[1]));
}

#[test]
fn csv_and_json_carry_the_same_numbers() {
    let args = ["energy", "--n", "9", "--family", "distance-laplacian", "--source", "both"];
    let json = uacg(&[&args[..], &["--format", "json"]].concat());
    let csv_out = uacg(&[&args[..], &["--format", "csv"]].concat());
    let json_text = String::from_utf8(json.stdout).unwrap();
    let mut reader = csv::Reader::from_reader(csv_out.stdout.as_slice());
    let rows: Vec<csv::StringRecord> = reader.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 2);
    for (row, line) in rows.iter().zip(json_text.lines()) {
        for col in [6, 7] {
            assert!(line.contains(&format!(":{},", &row[col])), "{} not in {line}", &row[col]);
        }
    }
    assert_eq!(&rows[0][6], "2.4666666666666668e1");
}

#[test]
fn environment_overrides() {
    let run = |key: &str, value: &str| {
        Command::new(env!("CARGO_BIN_EXE_uacg"))
            .args(["verify", "--n", "6"])
            .env(key, value)
            .output()
            .unwrap()
    };
    assert_eq!(code(&run("UACG_TOL", "abc")), 2);
    assert_eq!(code(&run("UACG_TOL", "-1")), 2);
    assert_eq!(code(&run("UACG_JOBS", "0")), 2);
    assert_eq!(code(&run("UACG_JOBS", "2")), 0);
    assert_eq!(code(&run("UACG_TOL", "1e-30")), 1);
}

#[test]
fn output_is_deterministic() {
    let a = uacg(&["verify", "--n-from", "8", "--n-to", "12"]);
    let b = uacg(&["verify", "--n-from", "8", "--n-to", "12", "--format", "json"]);
    assert_eq!(code(&a), 0);
    let strip = |o: &Output| {
        lines(o)
            .into_iter()
            .map(|mut v| {
                v["command"] = Value::Null;
                v
            })
            .collect::<Vec<_>>()
    };
    assert_eq!(strip(&a), strip(&b));
}
