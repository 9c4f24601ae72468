//! End-to-end tests of the command-line surface: outputs, filters, exit
//! codes, and JSON round-trips.

use std::path::PathBuf;
use std::process::{Command, Output};

fn alcove_bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_alcove"))
}

fn run(args: &[&str]) -> Output {
    alcove_bin().args(args).output().expect("binary runs")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    assert!(
        out.status.success(),
        "command failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn tmp_file(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join("alcove-cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn gallery_ls_counts_adjoint() {
    let out = run(&[
        "gallery", "--type", "A", "--rank", "2", "--coweight", "1,1", "--ls", "--count-only",
    ]);
    let v = stdout_json(&out);
    assert_eq!(v["total"], 8);
    assert_eq!(v["by_weight"]["0,0"], 2);
    assert_eq!(v["by_weight"]["1,1"], 1);
    assert_eq!(v["by_weight"].as_object().unwrap().len(), 7);
    // stdout carries data only; diagnostics stay on stderr
    assert!(out.stderr.is_empty());
}

#[test]
fn gallery_zero_coweight() {
    let out = run(&["gallery", "--rank", "2", "--coweight", "0,0", "--ls", "--count-only"]);
    let v = stdout_json(&out);
    assert_eq!(v["total"], 1);
}

#[test]
fn gallery_fundamental_coweight() {
    let out = run(&["gallery", "--rank", "2", "--coweight", "1,0", "--ls", "--count-only"]);
    let v = stdout_json(&out);
    assert_eq!(v["total"], 3);
}

#[test]
fn gallery_weight_filter_and_jobs() {
    let filtered = run(&[
        "gallery", "--rank", "2", "--coweight", "1,1", "--ls", "--weight", "0,0",
        "--count-only",
    ]);
    let v = stdout_json(&filtered);
    assert_eq!(v["total"], 2);

    let single = run(&["gallery", "--rank", "2", "--coweight", "2,1", "--ls"]);
    let multi = run(&[
        "gallery", "--rank", "2", "--coweight", "2,1", "--ls", "--jobs", "4",
    ]);
    assert_eq!(stdout_json(&single), stdout_json(&multi));
}

#[test]
fn gallery_list_roundtrips() {
    let out = run(&["gallery", "--rank", "2", "--coweight", "1,1", "--ls"]);
    let v = stdout_json(&out);
    let dtos: Vec<alcove::gallery::GalleryDto> = serde_json::from_value(v.clone()).unwrap();
    assert_eq!(dtos.len(), 8);
    let rs = alcove::RootSystem::type_a(2).unwrap();
    for dto in &dtos {
        let g = alcove::gallery::gallery_from_dto(&rs, dto).unwrap();
        let again = alcove::gallery::gallery_to_dto(&rs, &g).unwrap();
        assert_eq!(
            serde_json::to_value(&again).unwrap(),
            serde_json::to_value(dto).unwrap()
        );
    }
}

#[test]
fn gallery_exit_codes() {
    let bad = run(&["gallery", "--rank", "2", "--coweight", "1,x", "--count-only"]);
    assert_eq!(bad.status.code(), Some(2));
    let nondominant = run(&["gallery", "--rank", "2", "--coweight", "-1,0", "--count-only"]);
    assert_eq!(nondominant.status.code(), Some(2));
    let busted = alcove_bin()
        .env("ALCOVE_BUDGET", "3")
        .args(["gallery", "--rank", "2", "--coweight", "1,1", "--count-only"])
        .output()
        .unwrap();
    assert_eq!(busted.status.code(), Some(3));
    // explicit flag overrides the environment
    let ok = alcove_bin()
        .env("ALCOVE_BUDGET", "3")
        .args([
            "gallery", "--rank", "2", "--coweight", "1,1", "--count-only", "--budget", "100000",
        ])
        .output()
        .unwrap();
    assert!(ok.status.success());
}

#[test]
fn crystal_outputs() {
    let json_out = run(&["crystal", "--rank", "2", "--coweight", "1,1"]);
    let v = stdout_json(&json_out);
    assert_eq!(v["nodes"].as_array().unwrap().len(), 8);

    let trivial = run(&["crystal", "--rank", "2", "--coweight", "0,0"]);
    let v = stdout_json(&trivial);
    assert_eq!(v["nodes"].as_array().unwrap().len(), 1);
    assert!(v["edges"].as_array().unwrap().is_empty());

    let dot = run(&["crystal", "--rank", "2", "--coweight", "1,0", "--format", "dot"]);
    let text = String::from_utf8(dot.stdout).unwrap();
    assert!(text.starts_with("digraph"));
    // the defining-string labels alternate 1, 2
    assert!(text.contains("[label=\"1\"]"));
    assert!(text.contains("[label=\"2\"]"));
}

#[test]
fn quiver_maya_and_module() {
    let out = run(&["quiver", "--maya", "5", "2,4,5"]);
    let v = stdout_json(&out);
    assert_eq!(v["dims"], serde_json::json!([1, 1, 2, 1, 0]));
    assert_eq!(v["preprojective"], true);

    let module_c = tmp_file(
        "module_c.json",
        r#"{"dims": [1, 1], "arrows": [{"from": 2, "to": 1, "matrix": [["1"]]}]}"#,
    );
    let out = run(&["quiver", "--module", module_c.to_str().unwrap(), "--pol"]);
    let v = stdout_json(&out);
    assert_eq!(
        v["polytope"]["vertices"],
        serde_json::json!([["0", "0"], ["1", "0"], ["1", "1"]])
    );

    let zero = tmp_file("module_zero.json", r#"{"dims": [0, 0], "arrows": []}"#);
    let out = run(&["quiver", "--module", zero.to_str().unwrap(), "--pol"]);
    let v = stdout_json(&out);
    assert_eq!(v["polytope"]["vertices"].as_array().unwrap().len(), 1);

    let invalid = run(&["quiver", "--maya", "2", "1"]);
    assert_eq!(invalid.status.code(), Some(2));
    let precondition = run(&["quiver", "--maya", "10", "10", "--method", "exhaustive"]);
    assert_eq!(precondition.status.code(), Some(4));
}

#[test]
fn polytope_commands() {
    let a1 = tmp_file("a1.json", r#"{"vertices": [["0","0"],["1","0"]]}"#);
    let a2 = tmp_file("a2.json", r#"{"vertices": [["0","0"],["0","1"]]}"#);
    let b1 = tmp_file("b1.json", r#"{"vertices": [["0","0"],["1","0"],["1","1"]]}"#);
    let b2 = tmp_file("b2.json", r#"{"vertices": [["0","0"],["0","1"],["1","1"]]}"#);

    let sum = run(&[
        "polytope", "--minkowski", a1.to_str().unwrap(), a2.to_str().unwrap(),
    ]);
    let v = stdout_json(&sum);
    assert_eq!(
        v["vertices"],
        serde_json::json!([["0", "0"], ["0", "1"], ["1", "0"], ["1", "1"]])
    );
    let square = tmp_file("square.json", &v.to_string());

    let check = run(&[
        "polytope", "--union-check", b1.to_str().unwrap(), b2.to_str().unwrap(),
        square.to_str().unwrap(),
    ]);
    assert_eq!(stdout_json(&check)["union_equals"], true);

    let partial = run(&[
        "polytope", "--union-check", b1.to_str().unwrap(), square.to_str().unwrap(),
    ]);
    assert_eq!(stdout_json(&partial)["union_equals"], false);

    // Minkowski with the origin is the identity
    let origin = tmp_file("origin.json", r#"{"vertices": [["0","0"]]}"#);
    let same = run(&[
        "polytope", "--minkowski", b1.to_str().unwrap(), origin.to_str().unwrap(),
    ]);
    let v = stdout_json(&same);
    assert_eq!(v["vertices"], serde_json::json!([["0", "0"], ["1", "0"], ["1", "1"]]));

    let prim = run(&["polytope", "--primitive-a2"]);
    let v = stdout_json(&prim);
    assert_eq!(v.as_object().unwrap().len(), 4);
    assert_eq!(v["beta1"]["vertices"].as_array().unwrap().len(), 3);
}

#[test]
fn polytope_svg() {
    let dir = std::env::temp_dir().join("alcove-cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    let svg_path = dir.join("picture.svg");
    let out = run(&[
        "polytope", "--primitive-a2", "--svg", svg_path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let svg = std::fs::read_to_string(&svg_path).unwrap();
    assert!(svg.starts_with("<svg"));
    assert!(svg.contains("stroke-dasharray"));
    assert!(svg.contains("polygon"));

    let gallery_svg = dir.join("gallery.svg");
    let out = run(&[
        "gallery", "--rank", "2", "--coweight", "1,1", "--count-only", "--svg",
        gallery_svg.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let svg = std::fs::read_to_string(&gallery_svg).unwrap();
    assert!(svg.contains("polygon"));
}

#[test]
fn oracle_matches_gallery_counts() {
    let oracle = stdout_json(&run(&["oracle", "--rank", "2", "--coweight", "1,1"]));
    assert_eq!(oracle["dim"], 8);
    assert_eq!(oracle["multiplicities"]["0,0"], 2);
    let gallery = stdout_json(&run(&[
        "gallery", "--rank", "2", "--coweight", "1,1", "--ls", "--count-only",
    ]));
    assert_eq!(gallery["by_weight"], oracle["multiplicities"]);

    let trivial = stdout_json(&run(&["oracle", "--rank", "1", "--coweight", "0"]));
    assert_eq!(trivial["dim"], 1);
}

#[test]
fn oracle_sweep_end_to_end() {
    // whole-pipeline agreement over a spread of coweights in both families
    let cases: &[(&str, &str)] = &[
        ("2", "0,0"),
        ("2", "2,0"),
        ("2", "1,2"),
        ("2", "3,1"),
        ("2", "2,2"),
        ("3", "1,0,0"),
        ("3", "0,1,0"),
        ("3", "1,0,1"),
        ("3", "0,2,0"),
    ];
    for (rank, coweight) in cases {
        let oracle = stdout_json(&run(&["oracle", "--rank", rank, "--coweight", coweight]));
        let gallery = stdout_json(&run(&[
            "gallery", "--rank", rank, "--coweight", coweight, "--ls", "--count-only",
        ]));
        assert_eq!(
            gallery["by_weight"], oracle["multiplicities"],
            "disagreement at rank {rank}, coweight {coweight}"
        );
        assert_eq!(gallery["total"], oracle["dim"]);
    }
}
