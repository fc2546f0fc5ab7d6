use std::path::PathBuf;
use std::process::{Command, Output};

fn session(name: &str) -> String {
    let root = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../sessions");
    root.join(name).to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_liaison")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn integral_with_the_pure_power_draw() {
    let s = session("quadrics_xy_zw.ideal");
    let o = run(&["integral", "--session", &s, "--ideal", "I", "--alpha", "A", "--depth", "1", "--trials", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("result: (x^2, x*y, y^2, x*z, y*z, z^2, x*w, y*w, z*w, w^2)"));
}

#[test]
fn json_reports_are_reproducible_and_reparse() {
    let dir = std::env::temp_dir();
    let s = session("twisted_cubic.ideal");
    let mut docs = Vec::new();
    for k in 0..2 {
        let path = dir.join(format!("liaison-cli-walk-{}-{k}.json", std::process::id()));
        let p = path.to_string_lossy().into_owned();
        let o = run(&["walk", "--session", &s, "--ideal", "C", "--depth", "2", "--width", "3", "--seed", "5", "--json", &p]);
        assert_eq!(o.status.code(), Some(0));
        docs.push(std::fs::read_to_string(&path).unwrap());
        std::fs::remove_file(path).ok();
    }
    assert_eq!(docs[0], docs[1]);
    let v: serde_json::Value = serde_json::from_str(&docs[0]).unwrap();
    let r = liaison::Ring::grevlex(&["x", "y", "z", "w"]).unwrap();
    let computed = liaison::parse_ideal("x*z - y^2, x*w - y*z, y*w - z^2", &r).unwrap();
    for node in v["result"]["nodes"].as_array().unwrap() {
        let gens: Vec<&str> = node["ideal"].as_array().unwrap().iter().map(|g| g.as_str().unwrap()).collect();
        let back = liaison::parse_ideal(&gens.join(", "), &r).unwrap();
        if node["depth"] == 0 {
            assert!(back.equals(&computed));
        }
        assert_eq!(back.generator_strings(), gens);
    }
}

#[test]
fn exit_codes() {
    let s = session("twisted_cubic.ideal");
    assert_eq!(run(&["dim", "--session", &s, "--ideal", "C"]).status.code(), Some(0));
    assert_eq!(run(&["dim", "--session", &s, "--ideal", "Nope"]).status.code(), Some(2));
    assert_eq!(run(&["dim", "--session", "/nonexistent", "--ideal", "C"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "nope"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    // C is not contained in the linking ideal's colon partner: (x*z - y^2) alone is too short
    let bad = run(&["link", "--session", &s, "--ideal", "S", "--alpha", "A"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn failed_link_postcondition_exits_with_one() {
    let dir = std::env::temp_dir().join(format!("liaison-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("self.ideal");
    // linking a complete intersection by itself gives the unit ideal
    std::fs::write(&path, "ring 32003 [x,y] grevlex;\nideal I = x, y;\n").unwrap();
    let p = path.to_string_lossy().into_owned();
    let o = run(&["link", "--session", &p, "--ideal", "I", "--alpha", "I"]);
    assert_eq!(o.status.code(), Some(1));
    std::fs::remove_dir_all(dir).ok();
}

#[test]
fn every_command_runs_on_the_shipped_sessions() {
    let q = session("square_xyz.ideal");
    let c = session("twisted_cubic.ideal");
    let j = session("join.ideal");
    let g = session("generic_sections.ideal");
    let cases: Vec<Vec<&str>> = vec![
        vec!["gb", "--session", &c, "--ideal", "C"],
        vec!["betti", "--session", &c, "--ideal", "C"],
        vec!["hf", "--session", &c, "--ideal", "C", "--cap", "5"],
        vec!["link", "--session", &c, "--ideal", "C", "--seed", "3"],
        vec!["licci", "--session", &c, "--ideal", "C", "--depth", "2", "--width", "5"],
        vec!["maximal", "--session", &q, "--ideal", "Q", "--depth", "2", "--trials", "5"],
        vec!["bound", "--session", &q, "--ideal", "Q"],
        vec!["separate", "--session", &g, "--ideal", "K1", "--ideal", "K2"],
        vec!["join", "--session", &j, "--ideal", "I", "--ideal", "J"],
        vec!["hyp", "--session", &q, "--ideal", "Q", "--fresh", "w"],
        vec!["hyp", "--session", &c, "--ideal", "C", "--element", "w"],
        vec!["sympow", "--session", &q, "--ideal", "P", "--power", "2"],
        vec!["polarize", "--session", &q, "--ideal", "Q"],
        vec!["subst", "--session", &c, "--ideal", "C", "--map", "y=y+3*x"],
        vec!["walk", "--session", &c, "--ideal", "C", "--degree-policy", "uniform:3", "--width", "2"],
        vec!["verify", "class-separation"],
    ];
    for args in cases {
        let o = run(&args);
        assert_eq!(o.status.code(), Some(0), "{args:?}\n{}", String::from_utf8_lossy(&o.stderr));
    }
}
