use num_rational::BigRational;
use proptest::prelude::*;

use fistab::combinatorics::all_injections;
use fistab::presentation::{FormalSum, PresentationMatrix};
use fistab_cli::{parse_presentation, serialize_presentation};

fn presentation() -> impl Strategy<Value = PresentationMatrix> {
    (
        prop::collection::vec(0usize..=3, 0..=3),
        prop::collection::vec(0usize..=4, 0..=3),
        prop::collection::vec((any::<prop::sample::Index>(), -5i64..=5, 1i64..=4), 0..24),
    )
        .prop_map(|(xs, ys, picks)| {
            let mut z = PresentationMatrix::new(xs.clone(), ys.clone());
            let mut sums = vec![vec![None::<FormalSum>; ys.len()]; xs.len()];
            for (n, (pick, num, den)) in picks.into_iter().enumerate() {
                if xs.is_empty() || ys.is_empty() {
                    break;
                }
                let (i, j) = (n % xs.len(), (n / xs.len()) % ys.len());
                let injections = all_injections(xs[i], ys[j]);
                if injections.is_empty() {
                    continue;
                }
                let sum = sums[i][j].get_or_insert_with(|| FormalSum::zero(xs[i], ys[j]));
                sum.add_term(
                    pick.get(&injections).clone(),
                    BigRational::new(num.into(), den.into()),
                )
                .unwrap();
            }
            for (i, row) in sums.into_iter().enumerate() {
                for (j, s) in row.into_iter().enumerate() {
                    if let Some(s) = s {
                        z.set_entry(i, j, s).unwrap();
                    }
                }
            }
            z
        })
}

proptest! {
    #[test]
    fn serialize_then_parse(z in presentation()) {
        let text = serialize_presentation(&z);
        let back = parse_presentation(&text).unwrap();
        prop_assert_eq!(&back, &z);
        prop_assert_eq!(serialize_presentation(&back), text);
    }
}
