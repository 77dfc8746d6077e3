use std::path::PathBuf;

use hfroots_core::root::{render_ascii, render_svg};
use hfroots_core::SurgerySpec;

fn golden(name: &str, actual: &str) {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name);
    if std::env::var_os("HFROOTS_BLESS").is_some() {
        std::fs::write(&path, actual).unwrap();
        return;
    }
    let expected =
        std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    assert_eq!(actual, expected, "{name} differs from its golden file");
}

fn check(p: i64, q: i64, a: i64) {
    let spec = SurgerySpec::from_newton_pairs(&[(4, 5)], p, q).unwrap();
    let root = spec.compute_spinc(a).unwrap().root;
    let stem = format!("torus_4_5_p{p}_q{q}_a{a}");
    golden(&format!("{stem}.txt"), &render_ascii(&root));
    golden(&format!("{stem}.svg"), &render_svg(&root));
}

#[test]
fn torus_4_5_surgery_1() {
    check(1, 1, 0);
}

#[test]
fn torus_4_5_surgery_2_structure_0() {
    check(2, 1, 0);
}

#[test]
fn torus_4_5_surgery_2_structure_1() {
    check(2, 1, 1);
}

#[test]
fn rendering_is_deterministic() {
    let spec = SurgerySpec::from_newton_pairs(&[(4, 5)], 2, 1).unwrap();
    let a = render_svg(&spec.compute_spinc(0).unwrap().root);
    let b = render_svg(&spec.compute_spinc(0).unwrap().root);
    assert_eq!(a, b);
}
