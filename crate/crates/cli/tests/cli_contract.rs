mod common;

use common::run;
use orbifold_cli::document::{LabelEntry, OrbifoldDocument};
use orbifold_core::corpus;

#[test]
fn every_entry_round_trips() {
    for e in corpus::all_entries() {
        let doc = OrbifoldDocument::from_entry(&e);
        let back = OrbifoldDocument::from_json(&doc.to_json()).unwrap();
        assert_eq!(back, doc, "{}", e.name);
        let o = back.to_orbifold().unwrap_or_else(|err| panic!("{}: {err}", e.name));
        let (a, b) = (o.complex(), e.orbifold.complex());
        assert_eq!(a.simplices().collect::<Vec<_>>(), b.simplices().collect::<Vec<_>>(), "{}", e.name);
        assert_eq!(o.labels(), e.orbifold.labels(), "{}", e.name);
        assert_eq!(o.boundary_faces(), e.orbifold.boundary_faces(), "{}", e.name);
        assert_eq!(o.euler_char().unwrap(), e.orbifold.euler_char().unwrap(), "{}", e.name);
    }
}

#[test]
fn emitted_entries_reparse_through_the_binary() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    for e in corpus::all_entries() {
        let out = run(&["corpus", "--emit", &e.name, d]);
        assert_eq!(out.code, 0, "{}: {}", e.name, out.stderr);
        let path = dir.path().join(format!("{}.json", e.name));
        let chi = run(&["chi", path.to_str().unwrap()]);
        assert_eq!(chi.code, 0, "{}", e.name);
        assert_eq!(chi.stdout.trim(), e.expected_chi.unwrap().0.to_string(), "{}", e.name);
    }
}

#[test]
fn corpus_listing() {
    let out = run(&["corpus", "--list"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.lines().any(|l| l.starts_with("teardrop3 4/3 ")));
    assert!(out.stdout.lines().any(|l| l.starts_with("d3_t24 1/24 ")));
    assert!(out.stdout.lines().any(|l| l.starts_with("m2 0/1 ")));
}

#[test]
fn quotient_command_writes_a_document() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    assert_eq!(run(&["corpus", "--emit", "disk_z3", d]).code, 0);
    let action = dir.path().join("disk_z3.action.json");
    let output = dir.path().join("q.json");
    let out = run(&["quotient", action.to_str().unwrap(), output.to_str().unwrap()]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert!(out.stdout.contains("multiplicativity: 1/1 = 3 * 1/3 PASS"));
    assert_eq!(run(&["chi", output.to_str().unwrap()]).stdout, "1/3\n");
}

#[test]
fn quotient_by_path_reference() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    run(&["corpus", "--emit", "ball", d]);
    let action = r#"{ "base": "ball.json", "generators": [] }"#;
    std::fs::write(dir.path().join("trivial.json"), action).unwrap();
    let out = run(&[
        "quotient",
        dir.path().join("trivial.json").to_str().unwrap(),
        dir.path().join("q.json").to_str().unwrap(),
    ]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert!(out.stdout.contains("1/1 = 1 * 1/1 PASS"));
    let q = OrbifoldDocument::read(&dir.path().join("q.json")).unwrap();
    let base = OrbifoldDocument::read(&dir.path().join("ball.json")).unwrap();
    assert_eq!((q.vertices, q.maximal_cells), (base.vertices, base.maximal_cells));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["--help"]).code, 0);
    assert_eq!(run(&["chi"]).code, 1);
    assert_eq!(run(&["verify", "x.json", "--mode", "nonsense"]).code, 1);
    assert_eq!(run(&["chi", "/nonexistent/orbifold.json"]).code, 1);

    let dir = tempfile::tempdir().unwrap();
    let garbage = dir.path().join("garbage.json");
    std::fs::write(&garbage, "{ not json").unwrap();
    assert_eq!(run(&["chi", garbage.to_str().unwrap()]).code, 1);

    let mut doc = OrbifoldDocument::from_entry(&corpus::entry("teardrop3").unwrap());
    doc.labels.push(LabelEntry {
        cell: vec!["N".into(), "a".into()],
        order: 2,
        kind: "cyclic".into(),
        generators: None,
    });
    let corrupted = dir.path().join("corrupted.json");
    std::fs::write(&corrupted, doc.to_json()).unwrap();
    let out = run(&["chi", corrupted.to_str().unwrap()]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("DivisibilityViolation"));

    let teardrop = common::input_path("teardrop3");
    assert_eq!(run(&["verify", teardrop.to_str().unwrap(), "--mode", "theorem"]).code, 3);
    let m1 = common::input_path("m1");
    assert_eq!(run(&["verify", m1.to_str().unwrap(), "--mode", "satake"]).code, 3);
    let s1 = common::input_path("s1");
    let out = run(&["verify", s1.to_str().unwrap(), "--mode", "satake"]);
    assert_eq!((out.code, out.stdout.as_str()), (0, "satake: 0/1 = 0/1 PASS\n"));
    assert_eq!(run(&["corpus", "--emit", "no_such_entry", dir.path().to_str().unwrap()]).code, 3);
}
