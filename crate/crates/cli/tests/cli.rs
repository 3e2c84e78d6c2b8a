use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use mwdraw::io::DrawingDocument;
use tempfile::TempDir;

fn mwdraw(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mwdraw"))
        .current_dir(dir)
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn corollary_pipeline_verifies() {
    let dir = TempDir::new().unwrap();
    let p = dir.path();
    for m in ["1", "3"] {
        assert_eq!(
            code(&mwdraw(
                p,
                &["gen", "--kind", "corollary", "--m", m, "-o", "t.json"]
            )),
            0
        );
        assert_eq!(
            code(&mwdraw(
                p,
                &["draw", "--mode", "pruned", "-i", "t.json", "-o", "d.json"]
            )),
            0
        );
        let v = mwdraw(
            p,
            &[
                "verify", "-i", "d.json", "--beta", "1,2,inf", "--mode", "strict",
            ],
        );
        assert_eq!(code(&v), 0, "{}", stdout(&v));
        assert_eq!(stdout(&v).matches("valid").count(), 3);
    }
}

#[test]
fn corrupted_drawing_lists_the_pair() {
    let dir = TempDir::new().unwrap();
    let p = dir.path();
    mwdraw(
        p,
        &["gen", "--kind", "corollary", "--m", "1", "-o", "t.json"],
    );
    mwdraw(
        p,
        &["draw", "--mode", "pruned", "-i", "t.json", "-o", "d.json"],
    );
    let text = fs::read_to_string(p.join("d.json")).unwrap();
    let mut doc = DrawingDocument::from_json(&text).unwrap();
    let [a, b] = doc.sides[0].edges.remove(0);
    fs::write(p.join("bad.json"), doc.to_json()).unwrap();
    let v = mwdraw(p, &["verify", "-i", "bad.json", "--beta", "1"]);
    assert_eq!(code(&v), 1);
    let out = stdout(&v);
    assert!(out.contains("violations"), "{out}");
    assert!(out.contains(&format!("side 0 pair ({a}, {b})")), "{out}");
}

#[test]
fn non_caterpillar_fails() {
    let dir = TempDir::new().unwrap();
    let p = dir.path();
    // a spider with three legs of length two
    let tree =
        r#"{"version": 1, "n": 7, "edges": [[0, 1], [1, 2], [0, 3], [3, 4], [0, 5], [5, 6]]}"#;
    fs::write(p.join("s.json"), tree).unwrap();
    let o = mwdraw(
        p,
        &[
            "draw",
            "--mode",
            "caterpillar",
            "-i",
            "s.json",
            "-o",
            "d.json",
        ],
    );
    assert_eq!(code(&o), 1);
    assert!(stderr(&o).contains("not a caterpillar"), "{}", stderr(&o));
    assert!(!p.join("d.json").exists());
}

#[test]
fn caterpillar_pair_verifies_at_gabriel() {
    let dir = TempDir::new().unwrap();
    let p = dir.path();
    mwdraw(
        p,
        &[
            "gen",
            "--kind",
            "caterpillar",
            "--n",
            "15",
            "--seed",
            "4",
            "-o",
            "a.json",
        ],
    );
    mwdraw(
        p,
        &[
            "gen",
            "--kind",
            "caterpillar",
            "--n",
            "15",
            "--seed",
            "4",
            "-o",
            "b.json",
        ],
    );
    let d = mwdraw(
        p,
        &[
            "draw",
            "--mode",
            "caterpillar",
            "-i",
            "a.json",
            "-i2",
            "b.json",
            "-o",
            "d.json",
        ],
    );
    assert_eq!(code(&d), 0, "{}", stderr(&d));
    let v = mwdraw(
        p,
        &["verify", "-i", "d.json", "--beta", "1", "--mode", "closed"],
    );
    assert_eq!(code(&v), 0, "{}", stdout(&v));
}

#[test]
fn tree_and_star_modes() {
    let dir = TempDir::new().unwrap();
    let p = dir.path();
    mwdraw(
        p,
        &[
            "gen", "--kind", "random", "--n", "10", "--seed", "1", "-o", "t.json",
        ],
    );
    assert_eq!(
        code(&mwdraw(
            p,
            &["draw", "--mode", "tree", "-i", "t.json", "-o", "d.json", "--trace"]
        )),
        0
    );
    assert!(fs::read_to_string(p.join("d.json"))
        .unwrap()
        .contains("\"trace\""));
    assert_eq!(code(&mwdraw(p, &["verify", "-i", "d.json"])), 0);

    let star = r#"{"version": 1, "n": 5, "edges": [[3, 0], [3, 1], [3, 2], [3, 4]]}"#;
    fs::write(p.join("s.json"), star).unwrap();
    assert_eq!(
        code(&mwdraw(
            p,
            &["draw", "--mode", "star", "-i", "s.json", "-o", "x.json"]
        )),
        0
    );
    let v = mwdraw(
        p,
        &["verify", "-i", "x.json", "--beta", "1", "--mode", "closed"],
    );
    assert_eq!(code(&v), 0, "{}", stdout(&v));
    assert_eq!(
        code(&mwdraw(
            p,
            &["draw", "--mode", "star", "-i", "t.json", "-o", "y.json"]
        )),
        1
    );
}

#[test]
fn outputs_are_byte_identical() {
    let dir = TempDir::new().unwrap();
    let p = dir.path();
    let run = |tag: &str| {
        let t = format!("t{tag}.json");
        let d = format!("d{tag}.json");
        let g = format!("g{tag}.json");
        let s = format!("s{tag}.svg");
        mwdraw(
            p,
            &[
                "gen", "--kind", "random", "--n", "14", "--seed", "9", "-o", &t,
            ],
        );
        mwdraw(
            p,
            &["draw", "--mode", "tree", "-i", &t, "-o", &d, "--trace"],
        );
        mwdraw(
            p,
            &[
                "extract",
                "-i",
                &d,
                "--beta",
                "inf",
                "--closure",
                "open",
                "-o",
                &g,
            ],
        );
        mwdraw(
            p,
            &["svg", "-i", &d, "-o", &s, "--regions", "2", "--sep-line"],
        );
        [t, d, g, s].map(|f| fs::read(p.join(f)).unwrap())
    };
    assert_eq!(run("a"), run("b"));
}

#[test]
fn extract_writes_inf() {
    let dir = TempDir::new().unwrap();
    let p = dir.path();
    mwdraw(
        p,
        &["gen", "--kind", "corollary", "--m", "2", "-o", "t.json"],
    );
    mwdraw(
        p,
        &["draw", "--mode", "pruned", "-i", "t.json", "-o", "d.json"],
    );
    assert_eq!(
        code(&mwdraw(
            p,
            &["extract", "-i", "d.json", "--beta", "inf", "-o", "g.json"]
        )),
        0
    );
    let g = fs::read_to_string(p.join("g.json")).unwrap();
    assert!(g.contains("\"beta\": \"inf\""), "{g}");
}

#[test]
fn usage_errors_exit_two() {
    let dir = TempDir::new().unwrap();
    let p = dir.path();
    assert_eq!(code(&mwdraw(p, &["frobnicate"])), 2);
    assert_eq!(
        code(&mwdraw(p, &["verify", "-i", "d.json", "--beta", "0.5"])),
        2
    );
    assert_eq!(
        code(&mwdraw(p, &["verify", "-i", "d.json", "--mode", "loose"])),
        2
    );
    assert_eq!(code(&mwdraw(p, &["--help"])), 0);
}

#[test]
fn module_errors_exit_one() {
    let dir = TempDir::new().unwrap();
    let p = dir.path();
    assert_eq!(code(&mwdraw(p, &["verify", "-i", "missing.json"])), 1);
    fs::write(
        p.join("bad.json"),
        r#"{"version": 1, "n": 3, "edges": [[0, 1], [1, 9]]}"#,
    )
    .unwrap();
    let o = mwdraw(
        p,
        &["draw", "--mode", "tree", "-i", "bad.json", "-o", "d.json"],
    );
    assert_eq!(code(&o), 1);
    assert!(stderr(&o).contains("edges[1]"), "{}", stderr(&o));
    assert_eq!(
        code(&mwdraw(p, &["gen", "--kind", "random", "-o", "t.json"])),
        1
    );
}
