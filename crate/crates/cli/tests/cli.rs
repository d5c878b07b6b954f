use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn zdlab(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zdlab"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn field<'a>(out: &'a str, name: &str) -> &'a str {
    let prefix = format!("{name}: ");
    out.lines()
        .find_map(|l| l.strip_prefix(&prefix))
        .unwrap_or_else(|| panic!("no field {name} in\n{out}"))
}

#[test]
fn convolve_chi1_with_itself() {
    let dir = TempDir::new().unwrap();
    write(&dir, "chi1.txt", "group fz 2\n1 0 : x1\n1 0 : X1\n1 0 : x2\n1 0 : X2\n");
    let o = zdlab(&["convolve", "chi1.txt", "chi1.txt", "--out", "prod.txt"], dir.path());
    assert_eq!(o.status.code(), Some(0));
    let prod = std::fs::read_to_string(dir.path().join("prod.txt")).unwrap();
    // χ_2 + 4χ_0
    assert!(prod.starts_with("group fz 2\n4 0 : e\n"));
    assert_eq!(prod.lines().count(), 1 + 1 + 12);
    assert_eq!(field(&stdout(&o), "norm_1"), "1.600000000000e1");
}

#[test]
fn identity_is_neutral_and_errors_have_line_numbers() {
    let dir = TempDir::new().unwrap();
    write(&dir, "e.txt", "group zd 2\n1 0 : 0 0\n");
    write(&dir, "b.txt", "group zd 2\n1/2 -1 : 1 2\n3 0 : 0 -1\n");
    let o = zdlab(&["convolve", "e.txt", "b.txt"], dir.path());
    assert!(stdout(&o).ends_with("product:\ngroup zd 2\n3 0 : 0 -1\n1/2 -1 : 1 2\n"));

    write(&dir, "bad.txt", "group zd 2\n1 0 : 0 0\n1 0 0 1\n");
    let o = zdlab(&["convolve", "e.txt", "bad.txt"], dir.path());
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));

    write(&dir, "f.txt", "group fz 2\n1 0 : e\n");
    assert_eq!(zdlab(&["convolve", "e.txt", "f.txt"], dir.path()).status.code(), Some(2));
}

#[test]
fn torus_reports() {
    let dir = TempDir::new().unwrap();
    write(&dir, "a.txt", "group zd 2\n-1/2 0 : 0 0\n1/2 0 : 1 0\n1/2 0 : -1 0\n1/2 0 : 0 1\n1/2 0 : 0 -1\n");
    let o = zdlab(&["torus", "a.txt", "--verdict", "--p", "4"], dir.path());
    assert_eq!(o.status.code(), Some(0));
    assert!(field(&stdout(&o), "exponent_verdict").starts_with("nonzero-divisor [abelian-exponent-bound]"));

    let o = zdlab(&["torus", "a.txt", "--nullity", "--p", "5", "--resolution", "128"], dir.path());
    let out = stdout(&o);
    assert_eq!(field(&out, "nullity"), "0");
    assert_eq!(field(&out, "p_star"), "4");
    assert!(field(&out, "nullity_verdict").starts_with("zero-divisor [relative-nullity]"));
    assert_eq!(o.status.code(), Some(1));

    let o = zdlab(&["torus", "a.txt", "--zeroset", "--csv", "z.csv"], dir.path());
    assert_eq!(o.status.code(), Some(0));
    let csv = std::fs::read_to_string(dir.path().join("z.csv")).unwrap();
    let header = csv.lines().find(|l| !l.starts_with('#')).unwrap();
    assert_eq!(header, "t1,t2,abs_alpha_hat");
    assert!(csv.starts_with("# format: zdlab-zeroset-csv/1\n"));
    let rows = csv.lines().filter(|l| !l.starts_with('#')).count() - 1;
    assert_eq!(rows.to_string(), field(&stdout(&o), "zero_samples"));
}

#[test]
fn torus_hyperplanes_and_flag_conflicts() {
    let dir = TempDir::new().unwrap();
    write(&dir, "d.txt", "group zd 2\n1 0 : 0 0\n-1 0 : 1 0\n");
    write(&dir, "planes.txt", "# t1 = 0\n1 0 = 0\n");
    let o = zdlab(&["torus", "d.txt", "--hyperplanes", "planes.txt"], dir.path());
    assert_eq!(field(&stdout(&o), "covered"), "true");
    write(&dir, "wrong.txt", "1 0 1 = 0\n");
    assert_eq!(zdlab(&["torus", "d.txt", "--hyperplanes", "wrong.txt"], dir.path()).status.code(), Some(2));
    assert_eq!(zdlab(&["torus", "d.txt", "--verdict"], dir.path()).status.code(), Some(2));
    assert_eq!(zdlab(&["torus", "d.txt", "--csv", "x.csv"], dir.path()).status.code(), Some(2));
    assert_eq!(zdlab(&["torus", "d.txt"], dir.path()).status.code(), Some(2));
}

#[test]
fn radial_reports() {
    let dir = TempDir::new().unwrap();
    write(&dir, "chi1.txt", "radial fz 2\n1 : 1 0\n");
    write(&dir, "chi0.txt", "radial fz 2\n0 : 1 0\n");
    let o = zdlab(&["radial", "chi1.txt", "--pstar"], dir.path());
    assert_eq!(field(&stdout(&o), "p_alpha"), "2.000000000000e0");

    let o = zdlab(&["radial", "chi0.txt", "--zeros"], dir.path());
    let out = stdout(&o);
    assert_eq!(field(&out, "real_zeros"), "0");
    assert!(field(&out, "linf_verdict").starts_with("nonzero-divisor"));
    assert_eq!(o.status.code(), Some(0));

    let o = zdlab(&["radial", "chi1.txt", "--witness", "0", "10", "3"], dir.path());
    let last = stdout(&o).lines().last().unwrap().to_string();
    let r: f64 = last.split_whitespace().nth(1).unwrap().parse().unwrap();
    assert!((r - 0.0408).abs() < 1e-4);

    write(&dir, "zero.txt", "radial fz 2\n");
    assert_eq!(zdlab(&["radial", "zero.txt", "--zeros"], dir.path()).status.code(), Some(2));
}

#[test]
fn free_reports() {
    let dir = TempDir::new().unwrap();
    write(&dir, "g.txt", "group fz 2\nx1 x1\nx2 x2\nx1 x2\n");
    let o = zdlab(&["free", "g.txt", "--rank"], dir.path());
    assert_eq!(field(&stdout(&o), "subgroup_rank"), "3");

    let o = zdlab(&["free", "g.txt", "--member", "x1"], dir.path());
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(field(&stdout(&o), "member"), "false");
    assert_eq!(field(&stdout(&o), "failed_at"), "1");

    let o = zdlab(&["free", "g.txt", "--member", "x1 x2 x2 x2"], dir.path());
    assert_eq!(field(&stdout(&o), "generator_word"), "a3 a2");

    let o = zdlab(&["free", "--example2", "4", "2", "3"], dir.path());
    let out = stdout(&o);
    assert_eq!(field(&out, "representative"), "e");
    let residual: f64 = field(&out, "residual").parse().unwrap();
    let bound: f64 = field(&out, "pushed_bound").parse().unwrap();
    assert!(residual > 0.0 && residual <= bound * (1.0 + 1e-12));
    assert_ne!(field(&out, "tail_bound"), "diverges");

    assert_eq!(zdlab(&["free", "--example2", "5", "2", "3"], dir.path()).status.code(), Some(2));
}

#[test]
fn selftest_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let a = zdlab(&["selftest", "--seed", "1"], dir.path());
    let b = zdlab(&["selftest", "--seed", "1"], dir.path());
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(field(&stdout(&a), "failures"), "0");
}

#[test]
fn corrupted_fixtures_fail() {
    let dir = TempDir::new().unwrap();
    let fixtures = dir.path().join("fx");
    std::fs::create_dir(&fixtures).unwrap();
    std::fs::write(
        fixtures.join("wrong.fixture"),
        "kind radial\n--- left\nradial fz 2\n1 : 1 0\n--- right\nradial fz 2\n1 : 1 0\n--- expected\nradial fz 2\n2 : 1 0\n",
    )
    .unwrap();
    let o = zdlab(&["selftest", "--seed", "3", "--fixtures", "fx"], dir.path());
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).contains("FAIL fixture wrong"));

    std::fs::write(fixtures.join("wrong.fixture"), "kind radial\n--- left\nnot a header\n").unwrap();
    assert_eq!(zdlab(&["selftest", "--fixtures", "fx"], dir.path()).status.code(), Some(2));
}

#[test]
fn thread_count_does_not_change_reports() {
    let dir = TempDir::new().unwrap();
    write(&dir, "a.txt", "group zd 3\n-1/2 0 : 0 0 0\n1/2 0 : 1 0 0\n1/2 0 : -1 0 0\n1/2 0 : 0 1 0\n1/2 0 : 0 -1 0\n");
    let run = |threads: &str| {
        Command::new(env!("CARGO_BIN_EXE_zdlab"))
            .args(["torus", "a.txt", "--zeroset", "--nullity", "--resolution", "24", "--csv", "z.csv"])
            .env("ZDLAB_THREADS", threads)
            .current_dir(dir.path())
            .output()
            .unwrap()
    };
    let one = run("1");
    let csv_one = std::fs::read(dir.path().join("z.csv")).unwrap();
    let four = run("4");
    let csv_four = std::fs::read(dir.path().join("z.csv")).unwrap();
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, four.stdout);
    assert_eq!(csv_one, csv_four);
    assert_eq!(field(&stdout(&one), "nullity"), "1");
    assert_eq!(run("zero").status.code(), Some(2));
}
