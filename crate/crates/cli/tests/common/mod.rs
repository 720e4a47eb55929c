#![allow(dead_code)]

use std::path::PathBuf;
use std::process::{Command, Output};

use fistab::combinatorics::{all_injections, Injection};
use fistab::presentation::{FormalSum, PresentationMatrix};
use num_rational::BigRational;
use rand::Rng;

pub const E_TEXT: &str =
    "generators: 3\nrelations: 4\nentry 1 1 : [1 2 3] + [2 3 4] + [3 4 1] + [4 1 2]\n";

pub fn e_file() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data/e.pres")
}

pub fn fistab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fistab"))
        .args(args)
        .output()
        .expect("binary runs")
}

pub fn stdout(args: &[&str]) -> String {
    let out = fistab(args);
    assert!(
        out.status.success(),
        "fistab {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf-8 output")
}

/// Writes `text` to a fresh file under the target directory.
pub fn temp_file(name: &str, text: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let path = dir.join(name);
    std::fs::write(&path, text).expect("temp file");
    path
}

pub fn free_module(k: usize) -> PresentationMatrix {
    PresentationMatrix::new(vec![k], vec![])
}

/// A presentation with 1-2 generators of degree at most `max_x`, 1-2
/// relations of degree at most `max_y`, entries of up to three terms and
/// coefficients in -2..=2.
pub fn random_presentation<R: Rng>(rng: &mut R, max_x: usize, max_y: usize) -> PresentationMatrix {
    let g = rng.gen_range(1..=2);
    let r = rng.gen_range(1..=2);
    let xs: Vec<usize> = (0..g).map(|_| rng.gen_range(0..=max_x)).collect();
    let ys: Vec<usize> = (0..r).map(|_| rng.gen_range(0..=max_y)).collect();
    let mut z = PresentationMatrix::new(xs.clone(), ys.clone());
    for (i, &x) in xs.iter().enumerate() {
        for (j, &y) in ys.iter().enumerate() {
            if y < x || rng.gen_bool(0.3) {
                continue;
            }
            let injections: Vec<Injection> = all_injections(x, y);
            let mut sum = FormalSum::zero(x, y);
            for _ in 0..rng.gen_range(1..=3) {
                let f = injections[rng.gen_range(0..injections.len())].clone();
                let c: i64 = rng.gen_range(-2..=2);
                sum.add_term(f, BigRational::from_integer(c.into()))
                    .unwrap();
            }
            z.set_entry(i, j, sum).unwrap();
        }
    }
    z
}
