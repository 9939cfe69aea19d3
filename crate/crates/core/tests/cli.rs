use std::process::{Command, Output};

use cyclocover::fermat::RankEntry;
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cyclocover"))
        .args(args)
        .env_remove("CYCLOCOVER_CAP")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn without_timings(mut v: Value) -> Value {
    if let Some(obj) = v.as_object_mut() {
        obj.remove("timings");
    }
    v
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["verify", "--n", "1", "--d", "2..3"]).status.code(), Some(0));
    assert_eq!(run(&["verify", "--n", "2", "--d", "2", "--suite", "cor-1.4"]).status.code(), Some(1));
    assert_eq!(run(&["verify", "--suite", "nonsense"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--n", "3..1"]).status.code(), Some(2));
    assert_eq!(run(&["lattice", "e8"]).status.code(), Some(2));
    assert_eq!(run(&["ranks", "--n", "0..3", "--d", "2..4"]).status.code(), Some(0));
}

#[test]
fn cap_exceeded_names_the_case() {
    let out = run(&["verify", "--n", "3", "--d", "4", "--cap", "10"]);
    assert_eq!(out.status.code(), Some(3));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("n=3") && err.contains("d=4"), "{err}");

    let out = Command::new(env!("CARGO_BIN_EXE_cyclocover"))
        .args(["verify", "--n", "2", "--d", "5"])
        .env("CYCLOCOVER_CAP", "20")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("125"));

    let out = Command::new(env!("CARGO_BIN_EXE_cyclocover"))
        .args(["verify", "--n", "1", "--d", "2"])
        .env("CYCLOCOVER_CAP", "lots")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn output_is_deterministic_across_job_counts() {
    let args = |jobs: &'static str| ["verify", "--n", "1..2", "--d", "2..4", "--jobs", jobs];
    let a = without_timings(json(&run(&args("1"))));
    let b = without_timings(json(&run(&args("3"))));
    assert_eq!(a, b);
    let csv_a = run(&["verify", "--n", "1..2", "--d", "2..3", "--format", "csv", "--jobs", "1"]);
    let csv_b = run(&["verify", "--n", "1..2", "--d", "2..3", "--format", "csv", "--jobs", "2"]);
    assert_eq!(csv_a.stdout, csv_b.stdout);
}

#[test]
fn ranks_csv_round_trips_to_json() {
    let csv_out = run(&["ranks", "--n", "0..4", "--d", "2..5", "--format", "csv"]);
    let mut reader = csv::Reader::from_reader(csv_out.stdout.as_slice());
    let from_csv: Vec<RankEntry> = reader.deserialize().collect::<Result<_, _>>().unwrap();
    let from_json: Vec<RankEntry> =
        serde_json::from_value(json(&run(&["ranks", "--n", "0..4", "--d", "2..5"]))["entries"].clone()).unwrap();
    assert_eq!(from_csv.len(), 5 * 4);
    assert_eq!(from_csv, from_json);
}

#[test]
fn image_dimension_for_cubic_fourfolds() {
    let out = run(&["verify", "--n", "4", "--d", "3", "--suite", "thm-3.1"]);
    assert_eq!(out.status.code(), Some(0));
    let case = &json(&out)["cases"][0];
    assert_eq!(case["rank_below"], 10);
    let bottom = &case["statements"]["thm-3.1"]["detail"]["corners"]["bottom_left"];
    assert_eq!(bottom["invariant_factors"].as_array().unwrap().len(), 11);
}

#[test]
fn composite_degree_kernel() {
    let v = json(&run(&["verify", "--n", "2", "--d", "6", "--suite", "thm-3.1"]));
    let detail = &v["cases"][0]["statements"]["thm-3.1"]["detail"];
    let k = detail["first_kernel_order"].as_u64().unwrap();
    assert_eq!(6 % k, 0);
    assert_eq!(detail["second_injective"], true);
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("cyclocover-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("ranks.json");
    let out = run(&["ranks", "--n", "0..2", "--d", "2", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let written: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(written["command"], "ranks");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn lattice_e6_report() {
    let out = run(&["lattice", "e6"]);
    assert_eq!(out.status.code(), Some(0));
    let e6 = &json(&out)["statements"]["e6-mod3"]["detail"];
    assert_eq!(e6["quotient_dim"], 5);
    assert_eq!(e6["image_order"], 51840);
    assert_eq!(e6["faithful"], true);
}
