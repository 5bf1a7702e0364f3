#[path = "../../core/tests/common/mod.rs"]
mod common;

use std::path::PathBuf;
use std::process::{Command, Output};

use btk_core::algebra::field::PrimeField;
use btk_core::algebra::ring::Ring;
use btk_core::catalog;
use btk_core::format::ModuleFile;

fn btk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_btk")).args(args).output().unwrap()
}

fn btk_env(args: &[&str], threads: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_btk")).args(args).env("BTK_THREADS", threads).output().unwrap()
}

fn stdout(o: &Output) -> String {
    assert!(o.status.success(), "stderr: {}", String::from_utf8_lossy(&o.stderr));
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch_file(name: &str, text: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("btk-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

/// (p, a) → value from a coh TSV table.
fn parse_coh(tsv: &str) -> Vec<(usize, i64, usize)> {
    let mut lines = tsv.lines();
    let header: Vec<i64> = lines.next().unwrap().split('\t').skip(1).map(|a| a.parse().unwrap()).collect();
    let mut out = vec![];
    for l in lines {
        let mut cells = l.split('\t');
        let p: usize = cells.next().unwrap().parse().unwrap();
        for (a, v) in header.iter().zip(cells) {
            out.push((p, *a, v.parse().unwrap()));
        }
    }
    out
}

#[test]
fn horrocks_on_a_split_sum() {
    let out = stdout(&btk(&["horrocks", "--catalog", "sum:-1,3", "--n", "3"]));
    assert!(out.starts_with("verdict\tsplit\n"));
    assert!(out.contains("twists\t-1,3\n"));
}

#[test]
fn horrocks_on_the_tangent_bundle_reports_a_witness() {
    let out = stdout(&btk(&["horrocks", "--catalog", "tangent", "--n", "3"]));
    assert!(out.starts_with("verdict\tnonsplit\n"));
    let w: Vec<&str> = out.lines().find(|l| l.starts_with("witness")).unwrap().split('\t').collect();
    let (p, a, d): (usize, i64, usize) = (w[1].parse().unwrap(), w[2].parse().unwrap(), w[3].parse().unwrap());
    assert_eq!(common::tangent(3).cohomology(a)[p], d);
    assert!(d > 0 && (1..=2).contains(&p));
}

#[test]
fn trivial_bundle_table() {
    let out = stdout(&btk(&["coh", "--catalog", "O:0", "--n", "2", "--range", "-4:4"]));
    let cells = parse_coh(&out);
    assert_eq!(cells.len(), 27);
    for (p, a, v) in cells {
        let want = match p {
            0 => common::h0_line(2, a),
            2 => common::hn_line(2, a),
            _ => 0,
        };
        assert_eq!(v, want, "h^{p}(O({a}))");
    }
}

#[test]
fn cotangent_table_matches_the_koszul_oracle() {
    let out = stdout(&btk(&["coh", "--catalog", "cotangent", "--n", "2", "--range", "-5:3"]));
    let oracle = common::cotangent_p2();
    for (p, a, v) in parse_coh(&out) {
        assert_eq!(v, oracle.cohomology(a)[p], "h^{p}(Ω({a}))");
    }
}

#[test]
fn tangent_bounds_match_the_euler_oracle() {
    // Ext^1(T, T(−i)) = H^1(T ⊗ Ω(−i)); the oracle complex vanishes past i = 6
    let oracle = common::tangent_tensor_cotangent_p2();
    let want: usize = (1..=12).map(|i| oracle.cohomology(-i)[1]).sum();
    let total: usize = want + (-12..=0).map(|i| oracle.cohomology(-i)[1]).sum::<usize>();
    let out = stdout(&btk(&["bounds", "--catalog", "tangent", "--n", "2"]));
    assert!(out.contains(&format!("kempfSum\t{want}\n")), "{out}");
    assert!(out.contains(&format!("flennerSum\t{total}\n")), "{out}");
    assert!(want >= 1);
}

#[test]
fn kempf_on_split_and_tangent() {
    assert!(stdout(&btk(&["kempf", "--catalog", "sum:0,2", "--n", "2"])).starts_with("kempf\ttrue\n"));
    assert!(stdout(&btk(&["kempf", "--catalog", "tangent+O:1", "--n", "2"])).starts_with("kempf\tfalse\n"));
}

#[test]
fn betti_of_the_tangent_presentation() {
    let out = stdout(&btk(&["betti", "--catalog", "tangent", "--n", "2"]));
    // O(-1) → O^3 is minimal: three generators in degree −1, one relation in degree 0
    assert_eq!(out, "j\t-1\t0\n0\t3\t0\n1\t0\t1\nregularity\t-1\n");
}

#[test]
fn module_file_and_catalog_agree() {
    for name in ["tangent", "cotangent", "sum:-1,2", "nullcorr"] {
        let n = if name == "nullcorr" { 3 } else { 2 };
        let ring = Ring::new(PrimeField::default(), n + 1);
        let text = ModuleFile::new(ring.clone(), catalog::build(&ring, name).unwrap()).to_text();
        let path = scratch_file(&format!("{}.mod", name.replace([':', ','], "_")), &text);
        let p = path.to_str().unwrap();
        let ns = n.to_string();
        for cmd in ["coh", "horrocks", "bounds"] {
            let a = stdout(&btk(&[cmd, "--module", p]));
            let b = stdout(&btk(&[cmd, "--catalog", name, "--n", &ns]));
            assert_eq!(a, b, "{cmd} {name}");
        }
    }
}

#[test]
fn tower_on_the_tangent_bundle_of_p3() {
    let out = stdout(&btk(&["tower", "--catalog", "tangent", "--ambient", "2,1", "--seed", "5"]));
    let last = out.lines().last().unwrap();
    assert!(last.starts_with("verdict\tbound-boundary\tgenerators="), "{last}");
    assert_eq!(out, stdout(&btk(&["tower", "--catalog", "tangent", "--ambient", "2,1", "--seed", "5"])));
}

#[test]
fn tower_on_a_split_sum() {
    let out = stdout(&btk(&["tower", "--catalog", "sum:-1,0,2", "--ambient", "2,2", "--seed", "3"]));
    assert_eq!(out.lines().last().unwrap(), "verdict\tsplit\t-1,0,2");
}

#[test]
fn thread_count_does_not_change_output() {
    let args = ["coh", "--catalog", "nullcorr", "--n", "3", "--range", "-5:2"];
    let one = stdout(&btk_env(&args, "1"));
    assert_eq!(one, stdout(&btk_env(&args, "4")));
    assert_eq!(one, stdout(&btk(&args)));
    assert_eq!(btk_env(&args, "zero").status.code(), Some(2));
}

#[test]
fn malformed_inputs_exit_with_2() {
    assert_eq!(btk(&["coh", "--catalog", "nosuch", "--n", "2"]).status.code(), Some(2));
    assert_eq!(btk(&["coh", "--catalog", "tangent"]).status.code(), Some(2));
    assert_eq!(btk(&["frobnicate"]).status.code(), Some(2));
    let bad = scratch_file("bad.mod", "field 32003\nvars x y z\ntarget 0\nsource 1\nx*y\n");
    let o = btk(&["coh", "--module", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("malformed"));
    let missing = btk(&["coh", "--module", "/nonexistent/file.mod"]);
    assert_eq!(missing.status.code(), Some(2));
}

#[test]
fn non_bundles_exit_with_4() {
    // the ideal sheaf of a point is not locally free
    let f = scratch_file("point.mod", "field 32003\nvars x y z\ntarget 0\nsource 1 1\nx, y\n");
    let o = btk(&["horrocks", "--module", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(4), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(String::from_utf8_lossy(&o.stderr).contains("domain error"));
    let o = btk(&["horrocks", "--catalog", "O:0", "--n", "1"]);
    assert_eq!(o.status.code(), Some(4));
}

#[test]
fn pretty_output_aligns_the_same_cells() {
    let tsv = stdout(&btk(&["bounds", "--catalog", "tangent", "--n", "2"]));
    let pretty = stdout(&btk(&["bounds", "--catalog", "tangent", "--n", "2", "--format", "pretty"]));
    let words = |s: &str| s.split_whitespace().map(String::from).collect::<Vec<_>>();
    assert_eq!(words(&tsv), words(&pretty));
    assert!(!pretty.contains('\t'));
}
