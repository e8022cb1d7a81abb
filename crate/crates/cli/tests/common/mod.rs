//! Shared fixture table for the command-line tests.

use std::path::{Path, PathBuf};
use std::process::Command;

pub struct Case {
    pub name: &'static str,
    pub command: &'static str,
    pub flags: &'static [&'static str],
    pub status: i32,
}

const fn ok(name: &'static str, command: &'static str) -> Case {
    Case {
        name,
        command,
        flags: &[],
        status: 0,
    }
}

const fn fails(name: &'static str, command: &'static str, status: i32) -> Case {
    Case {
        name,
        command,
        flags: &[],
        status,
    }
}

pub const CASES: &[Case] = &[
    ok("pairing", "pairing"),
    ok("twist", "twist"),
    ok("chern", "chern"),
    Case {
        name: "chern",
        command: "chern",
        flags: &["--surface", "abelian"],
        status: 0,
    },
    ok("untwist", "untwist"),
    ok("primitive", "primitive"),
    ok("c2-residue", "c2-residue"),
    ok("extension-defect", "extension-defect"),
    ok("bogomolov", "bogomolov"),
    ok("stability-compare", "stability-compare"),
    ok("stability-lambda", "stability-compare"),
    ok("brauer-order", "brauer-order"),
    ok("brauer-equiv", "brauer-equiv"),
    ok("brauer-inequivalent", "brauer-equiv"),
    ok("twist-square", "twist-square"),
    fails("brauer-inequivalent", "twist-square", 3),
    ok("mukai-check", "mukai-check"),
    ok("wall-bound", "wall-bound"),
    ok("general", "general"),
    ok("general-wall", "general"),
    fails("general-negative-h", "general", 3),
    ok("walls-between", "walls-between"),
    ok("same-chamber", "same-chamber"),
    ok("strong-general", "strong-general"),
    ok("moduli", "moduli"),
    fails("moduli-nonprimitive", "moduli", 3),
    fails("moduli-malformed", "moduli", 2),
    ok("beauville", "beauville"),
    ok("beauville-small", "beauville"),
    ok("algebraic-beauville", "algebraic-beauville"),
    ok("complement", "complement"),
    ok("discriminant", "discriminant"),
    ok("signature", "signature"),
    fails("signature-asymmetric", "signature", 2),
    ok("theta", "theta"),
    ok("compose", "compose"),
    fails("compose-shear", "compose", 3),
    ok("adjoint-check", "adjoint-check"),
    ok("adjoint-check-false", "adjoint-check"),
    ok("lattice", "lattice"),
    ok("lattice-k3", "lattice"),
];

pub fn dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests")
}

pub fn golden_name(case: &Case) -> String {
    let mut name = format!("{}.{}", case.name, case.command);
    for f in case.flags {
        name.push_str(f.trim_start_matches('-'));
    }
    name + ".out"
}

fn conforms(schema: &str, doc: &serde_json::Value) -> bool {
    let path = dir().join("../../../schemas").join(schema);
    let text = std::fs::read_to_string(path).expect("schema file exists");
    let schema: serde_json::Value = serde_json::from_str(&text).expect("schema is JSON");
    jsonschema::validator_for(&schema).expect("schema compiles").is_valid(doc)
}

fn fixture(case: &Case) -> serde_json::Value {
    let text = std::fs::read_to_string(dir().join("fixtures").join(format!("{}.json", case.name))).unwrap();
    serde_json::from_str(&text).unwrap_or(serde_json::Value::Null)
}

pub fn run(case: &Case, pretty: bool) -> (i32, String, String) {
    let fixture = dir().join("fixtures").join(format!("{}.json", case.name));
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_twk3"));
    cmd.arg(case.command).args(case.flags).arg(&fixture);
    if pretty {
        cmd.arg("--pretty");
    }
    let out = cmd.output().expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

/// Runs every case twice; returns the names whose output differs from its golden file,
/// changed between runs, exited with an unexpected status, or whose input or
/// output falls outside the shipped schemas.
pub fn check_all(bless: bool) -> Vec<String> {
    let mut bad = Vec::new();
    for case in CASES {
        let name = golden_name(case);
        let (status, stdout, stderr) = run(case, false);
        let again = run(case, false);
        if status != case.status || (status, &stdout, &stderr) != (again.0, &again.1, &again.2) {
            bad.push(name);
            continue;
        }
        let doc = if status == 0 { &stdout } else { &stderr };
        let Ok(parsed) = serde_json::from_str::<serde_json::Value>(doc) else {
            bad.push(name);
            continue;
        };
        let output_schema = if status == 0 {
            format!("{}.response.json", case.command)
        } else {
            "error.json".to_owned()
        };
        let request_ok = conforms(&format!("{}.request.json", case.command), &fixture(case));
        if !conforms(&output_schema, &parsed) || (status != 2 && !request_ok) {
            bad.push(name);
            continue;
        }
        if status == 0 {
            let (_, pretty, _) = run(case, true);
            if serde_json::from_str::<serde_json::Value>(&pretty).ok() != Some(parsed) {
                bad.push(name);
                continue;
            }
        } else if !parsed["error"]["code"].is_string() {
            bad.push(name);
            continue;
        }
        let path = dir().join("golden").join(&name);
        if bless {
            std::fs::write(&path, doc).expect("golden directory is writable");
        } else if std::fs::read_to_string(&path).ok().as_ref() != Some(doc) {
            bad.push(name);
        }
    }
    bad
}
