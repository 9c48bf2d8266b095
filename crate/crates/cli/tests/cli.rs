use std::path::PathBuf;

use ihara_cli::{parse_digraph_file, run, Output};

fn data(name: &str) -> String {
    let mut p = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    p.push("../../data");
    p.push(name);
    p.to_string_lossy().into_owned()
}

fn ihara(args: &[&str]) -> Output {
    run(std::iter::once("ihara").chain(args.iter().copied()))
}

fn tmp_file(name: &str, text: &str) -> String {
    let dir = std::env::temp_dir().join(format!("ihara-cli-tests-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn info_lists_classification() {
    let out = ihara(&["info", &data("example.dg")]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    for needle in [
        "Phi(1) = {(1,2),(2,3)}",
        "Phi(2) = {(1,1)}",
        "Phi(3) = {(1,3)}",
        "A(1) = {a1, a4}",
        "A(-1) = {a2, a5}",
        "A(1)bar = {a3}",
        "A(2) = {a7, a8}",
        "A(3) = {a6}",
        "inverse pairs: a1<->a2, a4<->a5, a7<->a7, a8<->a8",
    ] {
        assert!(
            out.stdout.contains(needle),
            "missing {needle:?} in\n{}",
            out.stdout
        );
    }
    assert!(out.stderr.is_empty());
}

#[test]
fn info_three_cycle_is_all_one_way() {
    let out = ihara(&["info", "--machine", &data("three-cycle.dg")]);
    assert!(out.stdout.contains("A(3)={x, y, z}"), "{}", out.stdout);
    assert!(out.stdout.contains("A(1)={}"));
}

#[test]
fn disconnected_digraph_warns() {
    let out = ihara(&["info", &data("two-components.dg")]);
    assert_eq!(out.code, 0);
    assert!(out.stderr.contains("warning: not connected"));
}

#[test]
fn zeta_three_cycle() {
    let out = ihara(&["zeta", "--preset", "ihara", &data("three-cycle.dg")]);
    assert_eq!(out.code, 0);
    assert!(
        out.stdout.starts_with("Z = 1/(1 - t^3)\n"),
        "{}",
        out.stdout
    );
    assert!(out.stdout.contains("MAIN THEOREM: OK"));
}

#[test]
fn zeta_loop_uses_file_weights() {
    let out = ihara(&["zeta", &data("loop.dg")]);
    assert!(out.stdout.contains("Z = 1/(1 - 3/2*t)"), "{}", out.stdout);
    assert!(out.stdout.contains("det(I + tJ) = 1 + 1/2*t"));
    assert!(out
        .stdout
        .contains("det(I - tA + t^2 B) = (1 - 3/2*t)/(1 + 1/2*t)"));
}

#[test]
fn zeta_forms() {
    let h = ihara(&["zeta", "--form", "hashimoto", &data("example.dg")]);
    let i = ihara(&["zeta", "--form", "ihara", &data("example.dg")]);
    assert_eq!(h.stdout.lines().next(), i.stdout.lines().next());
    assert!(!h.stdout.contains("MAIN THEOREM"));
    assert!(h.stdout.contains("det(I - tM)"));
    assert!(i.stdout.contains("det(I + tJ)"));
}

#[test]
fn symmetrized_k4_has_the_closed_form_denominator() {
    let sym = ihara(&["symmetrize", &data("k4.graph")]);
    assert_eq!(sym.code, 0);
    assert_eq!(
        sym.stdout.lines().filter(|l| l.starts_with("arc ")).count(),
        12
    );
    assert_eq!(
        sym.stdout
            .lines()
            .filter(|l| l.starts_with("inverse "))
            .count(),
        6
    );
    let path = tmp_file("k4.dg", &sym.stdout);
    let out = ihara(&["zeta", "--machine", "--preset", "ihara", &path]);
    // (1-t^2)^2 (1-t) (1-2t) (1+t+2t^2)^3, expanded
    assert!(
        out.stdout.contains(
            "denominator=1 - 8*t^3 - 6*t^4 + 16*t^6 + 24*t^7 - 3*t^8 - 16*t^9 - 24*t^10 + 16*t^12"
        ),
        "{}",
        out.stdout
    );
    assert!(out.stdout.contains("main_theorem=OK"));

    let series = ihara(&[
        "series",
        "--machine",
        "--order",
        "3",
        "--preset",
        "ihara",
        &path,
    ]);
    assert!(series.stdout.contains("trace[3]=24"));
    assert!(series.stdout.contains("brute[3]=24"));
}

#[test]
fn symmetrize_round_trip_has_no_unpaired_arcs() {
    let sym = ihara(&["symmetrize", &data("path.graph")]);
    assert_eq!(
        sym.stdout.lines().filter(|l| l.starts_with("arc ")).count(),
        4
    );
    let f = parse_digraph_file(&sym.stdout).unwrap();
    assert_eq!(f.inverses.len(), 2);
    let info = ihara(&["info", "--machine", &tmp_file("path.dg", &sym.stdout)]);
    assert!(info.stdout.contains("A(1)bar={}"));
    assert!(info.stdout.contains("A(3)={}"));

    let loop_graph = tmp_file("loop.graph", "graph l\nvertices 1\nedge 1 1\n");
    let sym = ihara(&["symmetrize", &loop_graph]);
    assert_eq!(sym.stdout, "digraph l\nvertices 1\narc e1 1 1\n");
}

#[test]
fn series_three_cycle() {
    let out = ihara(&[
        "series",
        "--machine",
        "--order",
        "6",
        "--preset",
        "ihara",
        &data("three-cycle.dg"),
    ]);
    assert_eq!(out.code, 0);
    for m in 1..=6 {
        let expected = if m % 3 == 0 { 3 } else { 0 };
        assert!(
            out.stdout.contains(&format!("trace[{m}]={expected}\n")),
            "{}",
            out.stdout
        );
    }
}

#[test]
fn series_loop_with_equal_weights_is_trivial() {
    let path = tmp_file("ms.dg", "vertices 1\narc l 1 1 tau=2 upsilon=2\n");
    let out = ihara(&["series", "--machine", "--order", "4", &path]);
    let zs: Vec<&str> = out.stdout.lines().filter(|l| l.starts_with("z[")).collect();
    assert_eq!(zs, ["z[0]=1", "z[1]=0", "z[2]=0", "z[3]=0", "z[4]=0"]);
    assert!(out.stdout.contains("trace[4]=0"));
}

#[test]
fn primes() {
    let out = ihara(&["primes", "--max-len", "6", &data("three-cycle.dg")]);
    assert!(out.stdout.contains("prime cycles: 1"), "{}", out.stdout);
    assert!(out.stdout.contains("EULER == HASHIMOTO up to t^6: OK"));
    let out = ihara(&["primes", "--max-len", "4", &data("loop.dg")]);
    assert!(out.stdout.contains("prime cycles: 1"));
    let out = ihara(&[
        "primes",
        "--preset",
        "ihara",
        "--max-len",
        "5",
        &data("example.dg"),
    ]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("EULER == HASHIMOTO up to t^5: OK"));
}

#[test]
fn primes_respects_the_enumeration_guard() {
    let out = ihara(&[
        "primes",
        "--max-enum",
        "100",
        "--max-len",
        "5",
        &data("example.dg"),
    ]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("enumeration"), "{}", out.stderr);
}

#[test]
fn verify_example_passes() {
    let out = ihara(&[
        "verify",
        "--preset",
        "ihara",
        "--order",
        "8",
        &data("example.dg"),
    ]);
    assert_eq!(out.code, 0, "{}", out.stdout);
    assert!(!out.stdout.contains("FAIL"));
    assert!(out.stdout.contains("PASS  main theorem"));
    assert!(out.stdout.contains("PASS  proof: s_uv = b_uv"));
}

#[test]
fn verify_negative_control_fails() {
    let out = ihara(&[
        "verify",
        "--flip-j-sign",
        "--order",
        "6",
        &data("example.dg"),
    ]);
    assert_eq!(out.code, 1);
    assert!(out.stdout.contains("FAIL  main theorem"), "{}", out.stdout);
    assert!(
        out.stdout.contains("FAIL  proof: M = H - J: entry ("),
        "{}",
        out.stdout
    );
}

#[test]
fn verify_random_is_reproducible() {
    let args = [
        "verify", "--random", "--trials", "12", "--seed", "7", "--order", "6",
    ];
    let a = ihara(&args);
    let b = ihara(&args);
    assert_eq!(a.code, 0, "{}", a.stdout);
    assert_eq!(a, b);
    assert!(a.stdout.ends_with("12/12 PASS\n"));
    let c = ihara(&[
        "verify", "--random", "--trials", "12", "--seed", "8", "--order", "6",
    ]);
    assert_ne!(a.stdout, c.stdout);
}

#[test]
fn output_is_deterministic() {
    for cmd in ["info", "zeta", "series", "primes"] {
        let a = ihara(&[cmd, "--order", "5", &data("example.dg")]);
        let b = ihara(&[cmd, "--order", "5", &data("example.dg")]);
        assert_eq!(a, b, "{cmd}");
    }
}

#[test]
fn presets_from_the_command_line() {
    let ihara_out = ihara(&["zeta", "--preset", "ihara", &data("example.dg")]);
    let bartholdi = ihara(&[
        "zeta",
        "--preset",
        "bartholdi",
        "--q",
        "0",
        &data("example.dg"),
    ]);
    assert_eq!(ihara_out, bartholdi);
    let missing_q = ihara(&["zeta", "--preset", "bartholdi", &data("example.dg")]);
    assert_eq!(missing_q.code, 2);
    let bl = ihara(&["zeta", "--preset", "bowen-lanford", &data("example.dg")]);
    assert!(bl.stdout.contains("det(I + tJ) = 1\n"), "{}", bl.stdout);
    let sato = ihara(&["zeta", "--preset", "sato", &data("loop.dg")]);
    assert!(sato.stdout.contains("Z = 1/(1 - 2*t)"), "{}", sato.stdout);
    let ms = ihara(&["zeta", "--preset", "mizuno-sato", &data("loop.dg")]);
    assert!(ms.stdout.starts_with("Z = 1\n"), "{}", ms.stdout);
}

#[test]
fn usage_and_parse_errors_exit_2() {
    assert_eq!(ihara(&["zeta"]).code, 2);
    assert_eq!(ihara(&["bogus"]).code, 2);
    assert_eq!(
        ihara(&["zeta", "--preset", "nope", &data("example.dg")]).code,
        2
    );
    assert_eq!(ihara(&["zeta", "/nonexistent/file.dg"]).code, 2);
    let bad = tmp_file(
        "bad.dg",
        "vertices 2\narc a1 1 2\narc a3 1 2\ninverse a1 a3\n",
    );
    let out = ihara(&["zeta", &bad]);
    assert_eq!(out.code, 2);
    assert!(
        out.stderr
            .contains("line 4: inverse must join opposite arcs"),
        "{}",
        out.stderr
    );
    let graph = ihara(&["zeta", &data("k4.graph")]);
    assert_eq!(graph.code, 2);
    assert_eq!(ihara(&["--help"]).code, 0);
}

#[test]
fn empty_digraph_has_trivial_zeta() {
    let path = tmp_file("empty.dg", "digraph empty\nvertices 2\n");
    let out = ihara(&["zeta", &path]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.starts_with("Z = 1\n"), "{}", out.stdout);
    assert!(out.stderr.contains("warning: not connected"));
}
