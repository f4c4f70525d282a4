use std::process::Command as Proc;

use thickgen::complex::random::{random_complex, RandomParams};
use thickgen::{Field, Ring, UniPoly};
use thickgen_cli::{parse_script, run_script, Options, Value};

fn machine(script: &str) -> String {
    run_script(script, &[], &Options { machine: true, jobs: 1 }).unwrap()
}

#[test]
fn idempotents_of_z6() {
    let out = machine("ring R = Zmod 6\nidempotents R\n");
    assert_eq!(out, "idempotents: 0 1 3 4\n");
}

#[test]
fn ann_of_koszul_two() {
    let out = machine("ring R = Z\nideal I over R = (2)\ncomplex X over R = { deg -1..0 ; d(-1) = [[2]] }\nann X\n");
    assert_eq!(out, "ann: (2)\n");
}

#[test]
fn obstruct_four_blocks() {
    let out = machine("ring R = poly Q [x,y] grevlex\nideal I over R = (x, y)\nobstruct R I --max 4\n");
    let blocks: Vec<&str> = out.split("\n\n").collect();
    let certs = blocks.iter().filter(|b| b.starts_with("kind: lower-bound")).count();
    assert_eq!(certs, 4);
    assert!(out.ends_with("verdict: not-strongly-generated\n"));
}

#[test]
fn complex_literals_round_trip() {
    let f2 = Field::Prime(2);
    let rings = vec![
        Ring::integers(),
        Ring::int_mod(12).unwrap(),
        Ring::prime_field(5).unwrap(),
        Ring::rationals(),
        Ring::unipoly(Field::Rational, "x").unwrap(),
        Ring::uniquot(f2.clone(), "x", UniPoly::from_i64s(&f2, &[1, 1, 1])).unwrap(),
    ];
    for r in &rings {
        for seed in 0..20u64 {
            let x = random_complex(r, seed, &RandomParams::default()).unwrap();
            let script = format!("ring R = {r}\ncomplex X over R = {}\n", x.to_literal());
            let s = parse_script(&script).unwrap_or_else(|e| panic!("{script}: {e}"));
            match s.get("X") {
                Some(Value::Complex(y)) => assert_eq!(y, &x, "{script}"),
                other => panic!("{other:?}"),
            }
        }
    }
}

#[test]
fn maps_parse_and_validate() {
    let ok = "ring R = Z\ncomplex A over R = { deg -1..0 ; d(-1) = [[4]] }\ncomplex B over R = { deg -1..0 ; d(-1) = [[2]] }\nmap f : A -> B = { c(-1) = [[2]] ; c(0) = [[1]] }\n";
    assert!(matches!(parse_script(ok).unwrap().get("f"), Some(Value::Map(_))));
    let bad = ok.replace("c(0) = [[1]]", "c(0) = [[3]]");
    let e = parse_script(&bad).unwrap_err();
    assert_eq!(e.exit_code(), 1);
    assert!(e.to_string().contains("commutation"), "{e}");
}

#[test]
fn extra_command_runs_last() {
    let out = run_script("ring R = Z\nideal I over R = (3)\n", &["koszul".into(), "I".into()], &Options { machine: true, jobs: 1 }).unwrap();
    assert_eq!(out, "complex: { deg -1..0 ; rank(-1) = 1 ; rank(0) = 1 ; d(-1) = [[3]] }\n");
}

#[test]
fn witnesses_validate() {
    let s = "ring R = Z\nwitness W over R = principal 2 4\ncomplex X over R = { deg -1..0 ; d(-1) = [[16]] }\ncomplex G over R = { deg -1..0 ; d(-1) = [[2]] }\nvalidate-witness W X G\nwitness-principal 2 4\n";
    let out = machine(s);
    assert!(out.starts_with("valid: true\nlevel: 4\ncones: 3\n"), "{out}");
    assert!(out.contains("kind: upper-bound\nlevel: 4\n"), "{out}");
    let wrong = s.replace("[[16]]", "[[8]]");
    let e = run_script(&wrong, &[], &Options::default()).unwrap_err();
    assert_eq!(e.exit_code(), 2);
}

#[test]
fn tier_violation_is_an_engine_error() {
    let e = run_script(
        "ring R = poly Q [x,y]\ncomplex X over R = { deg -1..0 ; d(-1) = [[x]] }\nhomology X\n",
        &[],
        &Options::default(),
    )
    .unwrap_err();
    assert_eq!(e.exit_code(), 2);
    assert!(e.to_string().contains("tier 1"), "{e}");
}

fn bin(args: &[&str], script: &str) -> (i32, String, String) {
    let dir = std::env::temp_dir().join(format!("thickgen-cli-{}-{}", std::process::id(), args.join("_").len()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(format!("s{}.tg", script.len()));
    std::fs::write(&path, script).unwrap();
    let out = Proc::new(env!("CARGO_BIN_EXE_thickgen")).args(args).arg(&path).output().unwrap();
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn exit_codes_and_no_partial_output() {
    let (code, out, _) = bin(&["--machine"], "ring R = Zmod 6\nidempotents R\n");
    assert_eq!((code, out.as_str()), (0, "idempotents: 0 1 3 4\n"));
    let (code, out, err) = bin(&["--machine"], "ring R = Zmod 6\nideal I over R = (2)\nidempotents R\nobstruct R I --max 3\n");
    assert_eq!(code, 2);
    assert!(out.is_empty());
    assert!(err.contains("disconnected"), "{err}");
    let (code, out, err) = bin(&["--machine"], "ring R = Z\nidempotents R\nideal I over R = (2,\n");
    assert_eq!(code, 1);
    assert!(out.is_empty());
    assert!(err.contains("line 3"), "{err}");
    let (code, _, err) = bin(&[], "ring R = Z\nann Y\n");
    assert_eq!(code, 1);
    assert!(err.contains("unknown name Y"));
}

#[test]
fn jobs_do_not_change_output() {
    let s = "ring R = poly Q [x,y] grevlex\nideal I over R = (x^2, y)\nobstruct R I --max 5\n";
    let one = run_script(s, &[], &Options { machine: true, jobs: 1 }).unwrap();
    let four = run_script(s, &[], &Options { machine: true, jobs: 4 }).unwrap();
    assert_eq!(one, four);
}
