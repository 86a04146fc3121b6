use std::fs;
use std::process::{Command, Output};

use braidrep::format::{geom_from_json, word_from_json};
use braidrep_core::geom::{artin_dynamics_from, jittered_circle, psi_matrix, Conventions, PsiVariant, RoutingScheme};
use braidrep_core::homs::{pipeline_matrix, PipelineConfig};
use braidrep_core::rep::rho;
use braidrep_core::word::parse_word;
use braidrep_core::{sample, Assignment, GroupId};

fn braidrep(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_braidrep"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

#[test]
fn parse_prints_canonical_words() {
    let o = braidrep(&["parse", "--group", "B5", "s1 s2^-1"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).trim(), "s1 s2^-1");
    let o = braidrep(&["parse", "--group", "B5", "BIGELOW5"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("s2^-1 s3^-1 s4^-3"));
    assert_eq!(code(&braidrep(&["parse", "--group", "B5", "x9"])), 2);
}

#[test]
fn parse_json_round_trips() {
    let o = braidrep(&["parse", "--group", "FVB4+flat", "--json", "p1 t2 s3^-2"]);
    let w = word_from_json(&stdout(&o)).unwrap();
    assert_eq!(w, parse_word("p1 t2 s3^-2", "FVB4+flat".parse().unwrap()).unwrap());
}

#[test]
fn example_matrix_and_burau_kernel() {
    let o = braidrep(&[
        "rep",
        "--pipeline",
        "pk-fd",
        "--n",
        "5",
        "--k",
        "1",
        "--d",
        "2",
        "--eval",
        "t=-1,s=1",
        "BIGELOW5",
    ]);
    assert_eq!(code(&o), 0);
    assert_eq!(
        stdout(&o).trim(),
        "481, -880, 800, -400\n480, -879, 800, -400\n480, -880, 801, -400\n480, -880, 800, -399"
    );
    let o = braidrep(&["rep", "--pipeline", "burau-reduced", "--n", "5", "BIGELOW5"]);
    assert_eq!(stdout(&o).trim(), "1, 0, 0, 0\n0, 1, 0, 0\n0, 0, 1, 0\n0, 0, 0, 1");
    let o = braidrep(&["rep", "--pipeline", "pk-fd", "--n", "5", "--k", "1", "--d", "1", ""]);
    assert_eq!(stdout(&o).trim(), "1, 0, 0, 0\n0, 1, 0, 0\n0, 0, 1, 0\n0, 0, 0, 1");
}

#[test]
fn rep_errors_map_to_exit_codes() {
    assert_eq!(
        code(&braidrep(&["rep", "--pipeline", "pk-fd", "--n", "4", "--k", "1", "s1"])),
        3
    );
    assert_eq!(
        code(&braidrep(&[
            "rep",
            "--pipeline",
            "pk-fd",
            "--n",
            "4",
            "--k",
            "1",
            "--eval",
            "t=0",
            "s1^2"
        ])),
        2
    );
    assert_eq!(
        code(&braidrep(&[
            "rep",
            "--pipeline",
            "psi-q",
            "--n",
            "5",
            "--k",
            "1",
            "--l",
            "2",
            "s1^2"
        ])),
        5
    );
    assert_eq!(code(&braidrep(&["rep", "--pipeline", "rho", "--group", "B3", "s1"])), 2);
    assert_eq!(code(&braidrep(&["rep", "--pipeline", "pk-fd", "--n", "4", "s1^2"])), 2);
}

#[test]
fn rep_bypass_translates_single_letters() {
    let o = braidrep(&["map", "--n", "5", "--k", "1", "--bypass-purity", "s1"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).lines().next().unwrap(), "p_k: s3^-1 s2^-1 s1^-1");
    let o = braidrep(&["map", "--n", "5", "--k", "2", "--bypass-purity", "s1"]);
    assert_eq!(stdout(&o).lines().next().unwrap(), "p_k: z^-1");
}

#[test]
fn psi_q_images_depend_on_the_base_configuration_only_up_to_conjugacy() {
    let w = "A[1,3] A[2,5] A[1,3]^-1 A[2,5]^-1 A[1,4]^-1 A[2,4] A[1,4] A[2,4]^-1";
    let run = |seed: &str| {
        let o = braidrep(&[
            "rep",
            "--pipeline",
            "psi-q",
            "--n",
            "5",
            "--k",
            "1",
            "--l",
            "2",
            "--seed",
            seed,
            w,
        ]);
        assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
        stdout(&o)
    };
    assert_eq!(run("0"), run("0"));
    let at: Assignment = "t=2/3,s=-3,r=5/7".parse().unwrap();
    let trace = |seed: u64| {
        let word = parse_word(w, GroupId::braid(5).unwrap()).unwrap();
        let conv = Conventions::default();
        let g = artin_dynamics_from(&jittered_circle(5, &mut sample::rng(seed)), &word, &conv).unwrap();
        let m = psi_matrix(&g, 1, 2, PsiVariant::Psi, &conv, RoutingScheme::default())
            .unwrap()
            .eval(&at);
        (1..m.dim()).fold(m.get(0, 0).clone(), |acc, i| acc + m.get(i, i))
    };
    for seed in 1..4 {
        assert_eq!(trace(seed), trace(0), "seed {seed}");
    }
}

#[test]
fn check_suites() {
    let o = braidrep(&["check", "--rep", "rho", "--group", "VCB4"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("passed"));
    let parallel = braidrep(&["check", "--rep", "rho", "--group", "VCB4", "--jobs", "4"]);
    assert_eq!(stdout(&parallel), stdout(&o));
    assert_eq!(
        code(&braidrep(&["check", "--cocycle", "--n", "5", "--k", "2", "--d", "2"])),
        0
    );
    assert_eq!(code(&braidrep(&["check", "--rep", "rho", "--group", "FVB4"])), 2);
    let o = braidrep(&["check", "--rep", "rho-tilde", "--group", "FVB4+flat", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["passed"], true);
    let o = braidrep(&[
        "check",
        "--oracle",
        "--n",
        "4",
        "--k",
        "2",
        "--d",
        "2",
        "--pairs",
        "2",
        "--factors",
        "2",
    ]);
    assert_eq!(code(&o), 0);
}

#[test]
fn geom_projection_matches_the_algebra() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("s1sq.json");
    let path = path.to_str().unwrap();
    let o = braidrep(&["synth", "--group", "B4", "s1^2", "-o", path]);
    assert_eq!(code(&o), 0);
    let g = geom_from_json(&fs::read_to_string(path).unwrap()).unwrap();
    assert!(g.is_pure());
    let o = braidrep(&["geom", path, "--project-pk", "--k", "1"]);
    assert_eq!(code(&o), 0);
    let cpb = GroupId::cylinder(3).unwrap();
    let extracted = parse_word(stdout(&o).trim(), cpb).unwrap();
    let w = parse_word("s1^2", GroupId::braid(4).unwrap()).unwrap();
    let expected = pipeline_matrix(&w, &PipelineConfig::new(4, 1, 1).unwrap()).unwrap();
    assert_eq!(rho(&extracted).unwrap(), expected);
}

#[test]
fn geom_psi_is_stable_under_perturbation() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("zl.json");
    let path = path.to_str().unwrap();
    braidrep(&["synth", "--zero-linking", "--n", "5", "--seed", "4", "-o", path]);
    let args = ["geom", path, "--psi", "--k", "1", "--l", "2", "--emit-matrix"];
    let plain = braidrep(&args);
    assert_eq!(code(&plain), 0, "{}", String::from_utf8_lossy(&plain.stderr));
    let mut perturbed = args.to_vec();
    perturbed.extend(["--perturb", "1e-6", "--seed", "11"]);
    assert_eq!(stdout(&braidrep(&perturbed)), stdout(&plain));
    let mut swapped = args.to_vec();
    swapped.extend(["--scheme", "swap-in-place"]);
    assert_eq!(stdout(&braidrep(&swapped)), stdout(&plain));
    let svg = dir.path().join("zl.svg");
    let o = braidrep(&[
        "geom",
        path,
        "--psi",
        "--k",
        "1",
        "--l",
        "2",
        "--d",
        "3",
        "--svg",
        svg.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0);
    assert!(fs::read_to_string(svg).unwrap().starts_with("<svg"));
    let events = braidrep(&["geom", path, "--psi", "--k", "1", "--l", "2", "--events", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&events)).unwrap();
    assert!(v.as_array().unwrap().iter().all(|e| e["slotIndex"].is_u64()));
}

#[test]
fn geom_errors_map_to_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    fs::write(&bad, "{\"n\": 2,").unwrap();
    assert_eq!(
        code(&braidrep(&[
            "geom",
            bad.to_str().unwrap(),
            "--psi",
            "--k",
            "1",
            "--l",
            "2"
        ])),
        2
    );

    let linked = dir.path().join("linked.json");
    braidrep(&["synth", "--group", "B4", "s1^2", "-o", linked.to_str().unwrap()]);
    assert_eq!(
        code(&braidrep(&[
            "geom",
            linked.to_str().unwrap(),
            "--psi",
            "--k",
            "3",
            "--l",
            "4"
        ])),
        5
    );

    let braid = dir.path().join("braid.json");
    braidrep(&["synth", "--group", "B4", "s3", "-o", braid.to_str().unwrap()]);
    assert_eq!(
        code(&braidrep(&[
            "geom",
            braid.to_str().unwrap(),
            "--project-pk",
            "--k",
            "1"
        ])),
        0
    );
    assert_eq!(
        code(&braidrep(&[
            "geom",
            braid.to_str().unwrap(),
            "--psi",
            "--k",
            "1",
            "--l",
            "2"
        ])),
        3
    );

    // strands 3 and 4 sit on the circle through the punctures for all time
    let concyclic = dir.path().join("concyclic.json");
    fs::write(
        &concyclic,
        r#"{"n": 4, "pure": true, "strands": [
            [[0, 0, 0], [1, 0, 0]],
            [[0, 1, 0], [1, 1, 0]],
            [[0, 0.5, 0.5], [1, 0.5, 0.5]],
            [[0, 0.5, -0.5], [1, 0.5, -0.5]]]}"#,
    )
    .unwrap();
    let o = braidrep(&["geom", concyclic.to_str().unwrap(), "--psi", "--k", "1", "--l", "2"]);
    assert_eq!(code(&o), 4, "{}", String::from_utf8_lossy(&o.stderr));
    let o = braidrep(&[
        "geom",
        linked.to_str().unwrap(),
        "--project-pk",
        "--k",
        "1",
        "--perturb",
        "10",
    ]);
    assert_eq!(code(&o), 4);
}

#[test]
fn outputs_are_deterministic() {
    let a = braidrep(&[
        "synth",
        "--zero-linking",
        "--n",
        "5",
        "--commutators",
        "3",
        "--seed",
        "2",
    ]);
    let b = braidrep(&[
        "synth",
        "--zero-linking",
        "--n",
        "5",
        "--commutators",
        "3",
        "--seed",
        "2",
    ]);
    assert_eq!(a.stdout, b.stdout);
    let c = braidrep(&[
        "synth",
        "--zero-linking",
        "--n",
        "5",
        "--commutators",
        "3",
        "--seed",
        "3",
    ]);
    assert_ne!(a.stdout, c.stdout);
}
