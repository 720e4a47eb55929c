//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails.

mod common;

use std::collections::{BTreeMap, HashMap};
use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use fistab::combinatorics::{
    all_injections, horizontal_strip_extensions, partitions, standard_tableaux, Diagram, Injection,
    Permutation,
};
use fistab::linalg::RationalMatrix;
use fistab::multiplicity::{eventual_multiplicities, onset_bound};
use fistab::oracle::{decompose_at, verify};
use fistab::presentation::{a_lambda_injection, a_lambda_sum, v_matrix, FormalSum};
use fistab::specht::{mn_character, w_raw, SpechtModule};
use fistab_cli::parse_presentation;

use common::{e_file, free_module, random_presentation, stdout, E_TEXT};

type Outcome = Result<String, String>;

fn check(cond: bool, message: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(message())
    }
}

fn d(rows: &[usize]) -> Diagram {
    Diagram::new(rows.to_vec()).unwrap()
}

fn matrix(rows: &[Vec<i64>]) -> RationalMatrix {
    RationalMatrix::from_i64_rows(rows)
}

fn criterion_1() -> Outcome {
    let e = e_file();
    let out = stdout(&["multiplicities", e.to_str().unwrap()]);
    let expected = "shape\tmultiplicity\n0\t0\n1\t2\n2\t1\n1,1\t2\n3\t0\n2,1\t0\n1,1,1\t0\n";
    check(out == expected, || format!("got\n{out}"))?;
    Ok("∅:0 (1):2 (2):1 (1,1):2 (3):0 (2,1):0 (1,1,1):0".into())
}

fn criterion_2() -> Outcome {
    let e = e_file();
    let start = Instant::now();
    let expected = [0, 0, 0, 6, 18, 30, 44, 56, 76, 99, 125];
    let mut got = Vec::new();
    for n in 0..=10 {
        let out = stdout(&["evaluate", e.to_str().unwrap(), "--n", &n.to_string()]);
        got.push(out.trim().parse::<usize>().map_err(|e| e.to_string())?);
    }
    check(got == expected, || format!("got {got:?}"))?;
    let elapsed = start.elapsed();
    check(elapsed.as_secs() < 60, || format!("took {elapsed:?}"))?;
    Ok(format!("dims {got:?} in {:.1?}", elapsed))
}

fn criterion_3() -> Outcome {
    let e = e_file();
    let out = stdout(&["dimension", e.to_str().unwrap()]);
    check(out == "(3n^2 - 5n)/2 valid for n >= 7\n", || {
        format!("got {out:?}")
    })?;
    let poly = |n: i64| (3 * n * n - 5 * n) / 2;
    for n in 5..=10 {
        let dim: i64 = stdout(&["evaluate", e.to_str().unwrap(), "--n", &n.to_string()])
            .trim()
            .parse()
            .map_err(|e: std::num::ParseIntError| e.to_string())?;
        if n >= 7 {
            check(dim == poly(n), || {
                format!("n = {n}: oracle {dim}, polynomial {}", poly(n))
            })?;
        } else {
            check(dim != poly(n), || {
                format!("n = {n}: unexpected agreement at {dim}")
            })?;
        }
    }
    Ok("(3n^2 - 5n)/2 from n = 7; 25 vs 30 at n = 5, 39 vs 44 at n = 6".into())
}

fn criterion_4() -> Outcome {
    let z = parse_presentation(E_TEXT).map_err(|e| e.to_string())?;
    type Column = (usize, Vec<(Vec<usize>, usize)>);
    let table: [Column; 6] = [
        (3, vec![(vec![3], 1), (vec![2, 1], 2), (vec![1, 1, 1], 1)]),
        (
            4,
            vec![
                (vec![3, 1], 3),
                (vec![2, 2], 1),
                (vec![2, 1, 1], 2),
                (vec![1, 1, 1, 1], 1),
            ],
        ),
        (
            5,
            vec![(vec![4, 1], 2), (vec![3, 2], 2), (vec![3, 1, 1], 2)],
        ),
        (
            6,
            vec![
                (vec![5, 1], 2),
                (vec![4, 2], 1),
                (vec![4, 1, 1], 2),
                (vec![3, 3], 1),
            ],
        ),
        (
            7,
            vec![(vec![6, 1], 2), (vec![5, 2], 1), (vec![5, 1, 1], 2)],
        ),
        (
            8,
            vec![(vec![7, 1], 2), (vec![6, 2], 1), (vec![6, 1, 1], 2)],
        ),
    ];
    for (n, expected) in table {
        let got: Vec<(Vec<usize>, usize)> = decompose_at(&z, n)
            .map_err(|e| e.to_string())?
            .into_iter()
            .filter(|(_, m)| *m > 0)
            .map(|(s, m)| (s.rows().to_vec(), m))
            .collect();
        check(got == expected, || format!("n = {n}: got {got:?}"))?;
        let cli = stdout(&[
            "decompose",
            e_file().to_str().unwrap(),
            "--n",
            &n.to_string(),
        ]);
        let lines = cli.lines().skip(2).count();
        check(lines == expected.len(), || {
            format!("n = {n}: CLI printed\n{cli}")
        })?;
    }
    Ok("n = 3..8 decompositions match".into())
}

fn criterion_5() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_f15e);
    let mut tested = 0;
    let mut skipped = 0;
    let mut nontrivial = 0;
    while tested < 24 {
        let z = random_presentation(&mut rng, 3, 4);
        // The onset bound is not valid when relations sit two or more degrees
        // below the top generator (free F² already fails at n = 2).
        if z.y_max() + 1 < z.x_max() {
            skipped += 1;
            continue;
        }
        let onset = onset_bound(&z);
        for n in [onset, onset + 1] {
            let report = verify(&z, n).map_err(|e| format!("n = {n}: {e}"))?;
            check(report.passed(), || {
                format!(
                    "presentation {}\nfailed at n = {n}: {report:?}",
                    fistab_cli::serialize_presentation(&z)
                )
            })?;
        }
        if eventual_multiplicities(&z).support().count() > 1 {
            nontrivial += 1;
        }
        tested += 1;
    }
    Ok(format!(
        "{tested} random presentations pass at onset and onset+1 ({nontrivial} with several shapes, {skipped} outside the onset hypothesis skipped)"
    ))
}

/// Sparse integer matrix for fast exact products.
struct Sparse {
    rows: Vec<Vec<(usize, i64)>>,
    ncols: usize,
}

impl Sparse {
    fn from(m: &RationalMatrix) -> Sparse {
        let rows = (0..m.nrows())
            .map(|i| {
                m.row(i)
                    .iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .map(|(j, v)| {
                        assert!(v.is_integer(), "integral entries expected");
                        (j, v.to_integer().to_i64().unwrap())
                    })
                    .collect()
            })
            .collect();
        Sparse {
            rows,
            ncols: m.ncols(),
        }
    }

    fn mul(&self, other: &Sparse) -> Sparse {
        let rows = self
            .rows
            .iter()
            .map(|row| {
                let mut acc: BTreeMap<usize, i64> = BTreeMap::new();
                for &(k, a) in row {
                    for &(j, b) in &other.rows[k] {
                        *acc.entry(j).or_insert(0) += a * b;
                    }
                }
                acc.into_iter().filter(|&(_, v)| v != 0).collect()
            })
            .collect();
        Sparse {
            rows,
            ncols: other.ncols,
        }
    }

    fn same(&self, other: &Sparse) -> bool {
        self.ncols == other.ncols && self.rows == other.rows
    }
}

fn regular_rep(k: usize) -> impl Fn(&Permutation) -> fistab::Result<RationalMatrix> {
    let elements = Permutation::all(k);
    move |sigma| {
        let mut m = RationalMatrix::zeros(elements.len(), elements.len());
        for (i, pi) in elements.iter().enumerate() {
            let image = sigma.compose(pi)?;
            let j = elements.iter().position(|e| *e == image).unwrap();
            m.set(i, j, BigRational::from_integer(1.into()));
        }
        Ok(m)
    }
}

type Action = Box<dyn Fn(&Permutation) -> fistab::Result<RationalMatrix>>;

fn criterion_6() -> Outcome {
    let mut specht_pairs = 0;
    for k in 0..=4 {
        for shape in partitions(k) {
            let module = SpechtModule::new(&shape);
            let perms = Permutation::all(k);
            let actions: Vec<RationalMatrix> = perms
                .iter()
                .map(|s| module.action(s))
                .collect::<fistab::Result<_>>()
                .map_err(|e| e.to_string())?;
            let index: HashMap<&Permutation, usize> =
                perms.iter().enumerate().map(|(i, p)| (p, i)).collect();
            for (si, s) in perms.iter().enumerate() {
                for (ti, t) in perms.iter().enumerate() {
                    let ts = t.compose(s).map_err(|e| e.to_string())?;
                    let lhs = actions[si].mul(&actions[ti]).map_err(|e| e.to_string())?;
                    check(lhs == actions[index[&ts]], || {
                        format!("W({shape}) fails at σ = {s}, τ = {t}")
                    })?;
                    specht_pairs += 1;
                }
            }
        }
    }

    let mut v_pairs = 0usize;
    for k in 0..=3 {
        let mut reps: Vec<(String, usize, Action)> = vec![(
            format!("regular S_{k}"),
            Permutation::all(k).len(),
            Box::new(regular_rep(k)),
        )];
        for shape in partitions(k) {
            let module = SpechtModule::new(&shape);
            reps.push((
                format!("W({shape})"),
                module.dimension(),
                Box::new(move |s| module.action(s)),
            ));
        }
        for (name, dim, w) in &reps {
            let mut cache: HashMap<Injection, Sparse> = HashMap::new();
            let mut v = |f: &Injection| -> Result<(), String> {
                if !cache.contains_key(f) {
                    let m = v_matrix(k, *dim, w, f).map_err(|e| e.to_string())?;
                    cache.insert(f.clone(), Sparse::from(&m));
                }
                Ok(())
            };
            for x in k..=5 {
                for y in x..=5 {
                    for f in all_injections(x, y) {
                        v(&f)?;
                    }
                }
            }
            for x in k..=5 {
                for y in x..=5 {
                    for z in y..=5 {
                        for f in all_injections(x, y) {
                            for g in all_injections(y, z) {
                                let gf = g.compose(&f).map_err(|e| e.to_string())?;
                                let lhs = cache[&f].mul(&cache[&g]);
                                check(lhs.same(&cache[&gf]), || {
                                    format!("V for {name} fails at f = {f}, g = {g}")
                                })?;
                                v_pairs += 1;
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(format!(
        "{specht_pairs} Specht pairs (|λ| ≤ 4), {v_pairs} composable pairs for V (k ≤ 3, degrees ≤ 5)"
    ))
}

fn criterion_7() -> Outcome {
    let w = w_raw(&d(&[2, 2, 1]), &Permutation::identity(5)).map_err(|e| e.to_string())?;
    // Basis 12/34/5, 12/35/4, 13/24/5, 13/25/4, 14/25/3.
    let expected = matrix(&[
        vec![1, 0, 0, 0, 1],
        vec![0, -1, 0, 0, 0],
        vec![0, 0, -1, 0, 0],
        vec![0, 0, 0, 1, 0],
        vec![0, 0, 0, 0, -1],
    ]);
    check(w == expected, || format!("W(2,2,1)(1) = {w:?}"))?;

    let inj = |im: &[usize]| Injection::new(im.to_vec(), 4).unwrap();
    // Rows 12, 13, 23; columns 12, 13, 14, 23, 24, 34.
    let a = a_lambda_injection(&d(&[2]), &inj(&[1, 2, 3])).map_err(|e| e.to_string())?;
    let expected = matrix(&[
        vec![1, 0, 0, 0, 0, 0],
        vec![0, 1, 0, 0, 0, 0],
        vec![0, 0, 0, 1, 0, 0],
    ]);
    check(a == expected, || format!("A(2)(123) = {a:?}"))?;

    let one = BigRational::from_integer(BigInt::from(1));
    let sum = FormalSum::from_terms(
        3,
        4,
        [[1, 2, 3], [2, 3, 4], [3, 4, 1], [4, 1, 2]]
            .iter()
            .map(|im| (inj(im), one.clone())),
    )
    .map_err(|e| e.to_string())?;
    let a = a_lambda_sum(&d(&[2]), &sum).map_err(|e| e.to_string())?;
    let expected = matrix(&[
        vec![1, 0, 1, 1, 0, 1],
        vec![0, 2, 0, 0, 2, 0],
        vec![1, 0, 1, 1, 0, 1],
    ]);
    check(a == expected, || format!("A(2)(Z) = {a:?}"))?;

    // The displayed 2×8 matrix lists δ = 13/2 before γ = 12/3 in each
    // block; our basis has γ first, so swap within every block.
    let displayed = matrix(&[vec![-1, 0, 0, 0, 0, 0, 0, 0], vec![0, 1, 0, 0, 0, 0, 0, 0]]);
    let a = a_lambda_injection(&d(&[2, 1]), &inj(&[1, 2, 3])).map_err(|e| e.to_string())?;
    let swap = |i: usize| i ^ 1;
    let mut permuted = RationalMatrix::zeros(2, 8);
    for i in 0..2 {
        for j in 0..8 {
            permuted.set(swap(i), swap(j), a.get(i, j).clone());
        }
    }
    check(permuted == displayed, || format!("A(2,1)(123) = {a:?}"))?;
    Ok("W(2,2,1)(1), A(2)(123), A(2)(Z), A(2,1)(123) bit-exact".into())
}

fn criterion_8() -> Outcome {
    let factorial = |k: usize| (1..=k as u128).product::<u128>();
    for k in 0..=6 {
        let total: u128 = partitions(k)
            .iter()
            .map(|s| (standard_tableaux(s).len() as u128).pow(2))
            .sum();
        check(total == factorial(k), || {
            format!("k = {k}: Σ|Tab|² = {total}")
        })?;
    }
    for k in 0..=7 {
        for s in partitions(k) {
            let count = standard_tableaux(&s).len() as u128;
            check(count == s.hook_length_count(), || {
                format!("{s}: {count} tableaux")
            })?;
        }
    }
    for n in 0..=8 {
        let shapes = partitions(n);
        let table: Vec<Vec<i64>> = shapes
            .iter()
            .map(|l| shapes.iter().map(|c| mn_character(l, c).unwrap()).collect())
            .collect();
        let sizes: Vec<i128> = shapes.iter().map(|c| c.class_size() as i128).collect();
        for a in 0..shapes.len() {
            for b in 0..shapes.len() {
                let inner: i128 = (0..shapes.len())
                    .map(|c| sizes[c] * table[a][c] as i128 * table[b][c] as i128)
                    .sum();
                let expected = if a == b { factorial(n) as i128 } else { 0 };
                check(inner == expected, || {
                    format!("n = {n}: <χ_{}, χ_{}> = {inner}", shapes[a], shapes[b])
                })?;
            }
        }
    }
    Ok("Σ|Tab|² = k! (k ≤ 6), hook lengths (|λ| ≤ 7), character orthogonality (n ≤ 8)".into())
}

fn criterion_9() -> Outcome {
    for k in 0..=3 {
        let z = free_module(k);
        let table = eventual_multiplicities(&z);
        for (lambda, m) in table.entries() {
            let expected: u128 = partitions(k)
                .iter()
                .filter(|outer| {
                    horizontal_strip_extensions(lambda, k - lambda.size()).contains(outer)
                })
                .map(|outer| outer.hook_length_count())
                .sum();
            check(*m as u128 == expected, || {
                format!("F^{k}: μ({lambda}+) = {m}, expected {expected}")
            })?;
        }
        for n in 0..=6 {
            let got = decompose_at(&z, n).map_err(|e| e.to_string())?;
            for (nu, m) in got {
                let expected: u128 = if n < k {
                    0
                } else {
                    partitions(k)
                        .iter()
                        .filter(|inner| horizontal_strip_extensions(inner, n - k).contains(&nu))
                        .map(|inner| inner.hook_length_count())
                        .sum()
                };
                check(m as u128 == expected, || {
                    format!("F^{k}[{n}]: multiplicity of {nu} is {m}, expected {expected}")
                })?;
            }
        }
    }
    Ok("F^k for k ≤ 3: eventual table and degrees n ≤ 6".into())
}

fn main() {
    type Criterion = (&'static str, fn() -> Outcome);
    let criteria: [Criterion; 9] = [
        ("E multiplicity table", criterion_1),
        ("E dimensions n = 0..10", criterion_2),
        ("E dimension polynomial", criterion_3),
        ("E decompositions n = 3..8", criterion_4),
        (
            "corank formula vs oracle on random presentations",
            criterion_5,
        ),
        ("representation laws", criterion_6),
        ("golden matrices", criterion_7),
        ("counting identities", criterion_8),
        ("free modules", criterion_9),
    ];
    let mut failures = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panicked".into()))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {}: PASS  {name} ({detail}) [{secs:.1}s]", i + 1),
            Err(why) => {
                failures += 1;
                println!("criterion {}: FAIL  {name}: {why} [{secs:.1}s]", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failures} failed",
        criteria.len() - failures
    );
    if failures > 0 {
        std::process::exit(1);
    }
}
