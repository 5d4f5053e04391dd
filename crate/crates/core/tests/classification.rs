use rand::{Rng, SeedableRng};
use seidel_core::classify::{canonical_form, invariant, phi11, switching_class_reps};
use seidel_core::SeidelMatrix;
use std::collections::BTreeSet;

#[test]
fn invariants_separate_every_class_up_to_order_ten() {
    for n in 1..=10 {
        let reps = switching_class_reps(n).unwrap();
        let values: BTreeSet<_> = reps.iter().map(|s| invariant(s).unwrap()).collect();
        assert_eq!(values.len(), reps.len(), "n = {n}");
    }
}

#[test]
fn phi11_separates_random_inequivalent_pairs() {
    let mut rng = rand::rngs::StdRng::seed_from_u64(11);
    let mut pairs = 0;
    while pairs < 200 {
        let a = SeidelMatrix::from_fn(11, |_, _| rng.gen());
        // half independent, half a single flipped entry
        let b = if pairs % 2 == 0 {
            SeidelMatrix::from_fn(11, |_, _| rng.gen())
        } else {
            let (i, j) = (rng.gen_range(0..11), rng.gen_range(0..11));
            SeidelMatrix::from_fn(11, |x, y| a.is_neg(x, y) ^ ((x, y) == (i, j) || (y, x) == (i, j)) && x != y)
        };
        if canonical_form(&a).unwrap() == canonical_form(&b).unwrap() {
            continue;
        }
        assert_ne!(phi11(&a).unwrap(), phi11(&b).unwrap(), "{} vs {}", a.to_line(), b.to_line());
        pairs += 1;
    }
}
