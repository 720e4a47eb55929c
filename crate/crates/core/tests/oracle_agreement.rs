use num_rational::BigRational;

use fistab::combinatorics::{Diagram, Injection};
use fistab::multiplicity::{dimension_polynomial, eventual_multiplicities, onset_bound};
use fistab::oracle::{dimension_at, verify};
use fistab::presentation::{FormalSum, PresentationMatrix};

fn q(v: i64) -> BigRational {
    BigRational::from_integer(v.into())
}

fn sum(x: usize, y: usize, terms: &[(&[usize], i64)]) -> FormalSum {
    FormalSum::from_terms(
        x,
        y,
        terms
            .iter()
            .map(|(im, c)| (Injection::new(im.to_vec(), y).unwrap(), q(*c))),
    )
    .unwrap()
}

#[test]
fn e_dimensions_match_polynomial_from_onset() {
    let mut z = PresentationMatrix::new(vec![3], vec![4]);
    z.set_entry(
        0,
        0,
        sum(
            3,
            4,
            &[
                (&[1, 2, 3], 1),
                (&[2, 3, 4], 1),
                (&[3, 4, 1], 1),
                (&[4, 1, 2], 1),
            ],
        ),
    )
    .unwrap();
    let p = dimension_polynomial(&z);
    for n in 7..=9u64 {
        assert_eq!(
            q(dimension_at(&z, n as usize).unwrap() as i64),
            p.evaluate_at(n)
        );
    }
}

#[test]
fn two_generators_with_mixed_relations() {
    // Generators in degrees 1 and 2; the relation identifies the two
    // images of the degree-1 generator in degree 2 and ties in the second
    // generator.
    let mut z = PresentationMatrix::new(vec![1, 2], vec![2, 2]);
    z.set_entry(0, 0, sum(1, 2, &[(&[1], 1), (&[2], -1)]))
        .unwrap();
    z.set_entry(1, 1, sum(2, 2, &[(&[1, 2], 1), (&[2, 1], 1)]))
        .unwrap();
    z.set_entry(0, 1, sum(1, 2, &[(&[2], 2)])).unwrap();
    let onset = onset_bound(&z);
    for n in onset..=onset + 2 {
        let report = verify(&z, n).unwrap();
        assert!(report.passed(), "n = {n}: {report:?}");
    }
}

#[test]
fn rational_coefficients() {
    let mut z = PresentationMatrix::new(vec![2], vec![3]);
    let s = FormalSum::from_terms(
        2,
        3,
        [
            (
                Injection::new(vec![1, 2], 3).unwrap(),
                BigRational::new(1.into(), 2.into()),
            ),
            (
                Injection::new(vec![3, 1], 3).unwrap(),
                BigRational::new((-2).into(), 3.into()),
            ),
        ],
    )
    .unwrap();
    z.set_entry(0, 0, s).unwrap();
    for n in onset_bound(&z)..=onset_bound(&z) + 1 {
        assert!(verify(&z, n).unwrap().passed());
    }
}

/// The onset bound `x_max + y_max` assumes relations are not far below the
/// generators. Free `F²` already disagrees at `n = 2`: `(1,1)` appears once,
/// while the eventual multiplicity of `(1)⁺` is 2.
#[test]
fn onset_bound_fails_for_free_square() {
    let z = PresentationMatrix::new(vec![2], vec![]);
    assert_eq!(onset_bound(&z), 2);
    let table = eventual_multiplicities(&z);
    assert_eq!(table.get(&Diagram::new(vec![1]).unwrap()), 2);
    let at_onset = verify(&z, 2).unwrap();
    assert!(at_onset.failed());
    let one = at_onset
        .checks
        .iter()
        .find(|c| c.shape == Diagram::new(vec![1]).unwrap())
        .unwrap();
    assert_eq!((one.observed, one.eventual), (1, 2));
    assert!(verify(&z, 3).unwrap().passed());
    assert!(verify(&z, 4).unwrap().passed());
}
